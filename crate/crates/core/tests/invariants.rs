//! Property tests for the exact arithmetic and the integral machinery.

use genalg::algebra::{closure, Element, OpRole, OperationTensor, Term};
use genalg::exactmath::{crt, hnf, rref, snf, Field, IntMatrix, Scalar};
use genalg::forster::{bad_primes, forster_lift, BadPrimes, ConstructibleSet, IntegralAlgebra, LiftOptions};
use genalg::search::{decode_tuple, encode_tuple};
use genalg::zoo::split_etale;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec(prop::collection::vec(-9i64..=9, cols), rows).prop_map(|r| {
        IntMatrix::from_rows(
            r.into_iter()
                .map(|row| row.into_iter().map(BigInt::from).collect())
                .collect(),
        )
    })
}

fn any_matrix() -> impl Strategy<Value = IntMatrix> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| matrix(r, c))
}

/// Torsion orders and a product whose constants respect them.
fn integral_algebra() -> impl Strategy<Value = IntegralAlgebra> {
    let factors = prop::collection::vec(prop::sample::select(vec![0i64, 0, 2, 3, 4, 6]), 1..=3);
    factors.prop_flat_map(|f| {
        let r = f.len();
        (Just(f), prop::collection::vec(-2i64..=2, r * r * r)).prop_map(move |(f, coeffs)| {
            let factors: Vec<BigInt> = f.iter().map(|&d| BigInt::from(d)).collect();
            let mut terms = Vec::new();
            for (k, c) in coeffs.into_iter().enumerate() {
                let (i, j, out) = (k / (r * r), (k / r) % r, k % r);
                let d = &factors[out];
                let scale = if d.is_zero() {
                    if !(factors[i].is_zero() && factors[j].is_zero()) {
                        continue;
                    }
                    BigInt::one()
                } else {
                    (d / d.gcd(&factors[i])).lcm(&(d / d.gcd(&factors[j])))
                };
                terms.push(Term {
                    inputs: vec![i, j],
                    output: out,
                    coeff: scale * c,
                });
            }
            IntegralAlgebra::new(factors, vec![OperationTensor::integral(2, OpRole::Product, terms)]).unwrap()
        })
    })
}

fn tuple_for(alg: &IntegralAlgebra, raw: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    raw.iter()
        .map(|x| alg.reduce(&x[..alg.rank()].iter().map(|&v| BigInt::from(v)).collect::<Vec<_>>()))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn smith_form_is_a_factorization(a in any_matrix()) {
        let s = snf(&a);
        prop_assert_eq!(s.left.mul(&a).mul(&s.right), s.diagonal_matrix());
        prop_assert!(s.left.is_unimodular() && s.right.is_unimodular());
        prop_assert_eq!(s.left.mul(&s.left_inverse), IntMatrix::identity(a.rows()));
        for w in s.diagonal.windows(2) {
            prop_assert!(w[1].is_zero() || w[1].is_multiple_of(&w[0]));
        }
    }

    #[test]
    fn hermite_form_is_canonical(a in any_matrix()) {
        let gens = a.to_rows();
        let l = hnf(a.cols(), &gens).unwrap();
        for g in &gens {
            prop_assert!(l.contains(g).unwrap());
        }
        prop_assert_eq!(&hnf(a.cols(), l.basis()).unwrap(), &l);
        let mut reversed = gens.clone();
        reversed.reverse();
        prop_assert_eq!(hnf(a.cols(), &reversed).unwrap(), l);
    }

    #[test]
    fn crt_solves_consistent_systems(x in 0i64..100_000, moduli in prop::collection::vec(1i64..40, 1..5)) {
        let system: Vec<_> = moduli.iter().map(|&m| (BigInt::from(m), BigInt::from(x % m))).collect();
        let y = crt(&system).unwrap();
        let lcm = moduli.iter().fold(BigInt::one(), |acc, &m| acc.lcm(&BigInt::from(m)));
        prop_assert!(y >= BigInt::zero() && y < lcm);
        prop_assert_eq!(y, BigInt::from(x) % lcm);
    }

    #[test]
    fn rref_rank_matches_smith_rank(a in any_matrix(), p in prop::sample::select(vec![2u64, 3, 5, 7])) {
        let field = Field::prime(p).unwrap();
        let rows: Vec<Vec<Scalar>> = a.to_rows().iter().map(|r| r.iter().map(|x| field.from_bigint(x)).collect()).collect();
        let s = snf(&a);
        let expected = s.diagonal.iter().filter(|d| !d.is_multiple_of(&BigInt::from(p))).count();
        prop_assert_eq!(rref(field, &rows).unwrap().rank(), expected);
    }

    #[test]
    fn tuple_encoding_roundtrips(index in 0u64..3u64.pow(8)) {
        let t = decode_tuple(3, 4, 2, index);
        prop_assert_eq!(encode_tuple(3, &t), index);
    }

    #[test]
    fn closure_is_a_subalgebra(raw in prop::collection::vec(prop::collection::vec(0u64..5, 4), 0..3)) {
        let field = Field::prime(5).unwrap();
        let alg = split_etale(field, 4).unwrap();
        let seed: Vec<Element> = raw.iter().map(|v| Element::new(v.iter().map(|&x| Scalar::Fp(x)).collect())).collect();
        let c = closure(&alg, &seed, false).unwrap();
        for s in &seed {
            prop_assert!(c.basis().contains(s.coords()).unwrap());
        }
        let rows: Vec<Element> = c.basis().rows().iter().map(|r| Element::new(r.clone())).collect();
        for x in &rows {
            for y in &rows {
                prop_assert!(c.basis().contains(alg.mul(x, y).coords()).unwrap());
            }
        }
        prop_assert!(c.dim() < 5usize.pow(seed.len() as u32));
    }

    #[test]
    fn bad_primes_match_fibers(alg in integral_algebra(), raw in prop::collection::vec(prop::collection::vec(-5i64..=5, 3), 1..=3)) {
        let s = tuple_for(&alg, &raw);
        let bad = bad_primes(&alg, &s, false, 1 << 20).unwrap();
        for p in [2u64, 3, 5, 7, 11, 13] {
            let fiber = alg.fiber_mod_p(p).unwrap();
            let projected: Vec<Element> = s.iter().map(|x| fiber.project(x)).collect();
            let fills = closure(&fiber.algebra, &projected, false).unwrap().dim() == fiber.algebra.dim();
            prop_assert_eq!(fills, !bad.contains(p), "p = {}, bad = {:?}", p, bad);
        }
        if let BadPrimes::Primes(ps) = &bad {
            let generic = alg.generic_fiber().unwrap();
            let projected: Vec<Element> = s.iter().map(|x| generic.project(x)).collect();
            prop_assert_eq!(closure(&generic.algebra, &projected, false).unwrap().dim(), generic.algebra.dim());
            prop_assert!(ps.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn fiber_projection_is_a_homomorphism(alg in integral_algebra(), raw in prop::collection::vec(prop::collection::vec(-5i64..=5, 3), 2)) {
        let s = tuple_for(&alg, &raw);
        let product = alg.evaluate(alg.product_index(), &[&s[0], &s[1]]).unwrap();
        for p in [2u64, 3] {
            let fiber = alg.fiber_mod_p(p).unwrap();
            let (x, y) = (fiber.project(&s[0]), fiber.project(&s[1]));
            prop_assert_eq!(fiber.algebra.mul(&x, &y), fiber.project(&product));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn lift_partitions_stay_sound(f in prop::collection::vec(prop::sample::select(vec![0i64, 2, 3, 5, 6, 10]), 1..=3)) {
        let factors: Vec<BigInt> = f.iter().map(|&d| BigInt::from(d)).collect();
        let alg = IntegralAlgebra::zero_module(factors).unwrap();
        // A zero module needs as many local generators as its largest fiber.
        let n = [2u64, 3, 5].iter().map(|&p| alg.fiber_coords(p).len()).max().unwrap().max(alg.free_rank()).max(1);
        let cert = forster_lift(&alg, n, &LiftOptions::default()).unwrap();
        prop_assert_eq!(cert.generators.len(), n + 1);
        prop_assert!(cert.verification.generates);
        for (j, step) in cert.steps.iter().enumerate() {
            let mut union = ConstructibleSet::empty();
            for c in &step.cells {
                prop_assert!(!c.region.is_empty() && union.is_disjoint(&c.region));
                prop_assert_eq!(c.witness.len(), c.level);
                prop_assert!(c.witness.iter().all(|&w| w <= j));
                union = union.union(&c.region);
            }
            prop_assert_eq!(union, ConstructibleSet::everything());
        }
    }
}
