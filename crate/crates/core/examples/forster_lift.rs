//! Lifting local generators: if every fiber of an algebra over Z is generated
//! by `n` elements, `n + 1` elements generate the algebra.
//!
//! `cargo run --example forster_lift`

use genalg::exactmath::Field;
use genalg::forster::{forster_lift, replay_lift, IntegralAlgebra, LiftOptions};
use genalg::zoo::{matrix_algebra, split_etale};
use genalg::Error;
use num_bigint::BigInt;

fn main() -> genalg::Result<()> {
    let opts = LiftOptions::default();
    let big = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
    let cases = [
        ("Z/2 + Z/3 + Z", IntegralAlgebra::zero_module(big(&[2, 3, 0]))?, 2),
        ("Z/6", IntegralAlgebra::zero_module(big(&[6]))?, 1),
        (
            "Mat_2(Z)",
            IntegralAlgebra::from_rational(&matrix_algebra(Field::Rational, 2)?)?,
            2,
        ),
        (
            "Z^3",
            IntegralAlgebra::from_rational(&split_etale(Field::Rational, 3)?)?,
            2,
        ),
    ];
    for (name, alg, n) in cases {
        let cert = forster_lift(&alg, n, &opts)?;
        println!(
            "{name}, n = {n}: local witness {:?}, bad primes {:?}",
            cert.local.witness, cert.local.bad_primes
        );
        for (j, step) in cert.steps.iter().enumerate() {
            let primes: Vec<u64> = step.choices.iter().map(|c| c.prime).collect();
            let cells: Vec<String> = step
                .cells
                .iter()
                .map(|c| format!("level {} on {:?}", c.level, c.region))
                .collect();
            println!(
                "  step {j}: primes {primes:?} -> {:?}; {}",
                step.element,
                cells.join(", ")
            );
        }
        replay_lift(&alg, &cert, opts.factor_bound)?;
        println!("  {} generators, verified and replayed", cert.generators.len());
    }

    // Z/2 + Z/2 needs two generators mod 2, so n = 1 is refused.
    let z22 = IntegralAlgebra::zero_module(big(&[2, 2]))?;
    match forster_lift(&z22, 1, &opts) {
        Err(Error::CounterexamplePrime(p)) => println!("Z/2 + Z/2 with n = 1: fiber at {p} needs more"),
        other => panic!("unexpected {other:?}"),
    }
    Ok(())
}
