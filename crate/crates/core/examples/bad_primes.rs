//! Where a tuple stops generating: bad primes from the monomial subgroup,
//! checked against the fibers.
//!
//! `cargo run --example bad_primes`

use genalg::algebra::closure;
use genalg::exactmath::Field;
use genalg::forster::{bad_primes, verify_global_generation, IntegralAlgebra, DEFAULT_FACTOR_BOUND};
use genalg::zoo::{matrix_algebra, split_etale};
use num_bigint::BigInt;

fn main() -> genalg::Result<()> {
    let etale = IntegralAlgebra::from_rational(&split_etale(Field::Rational, 3)?)?;
    let x = vec![BigInt::from(1), BigInt::from(2), BigInt::from(3)];
    for unital in [false, true] {
        let bad = bad_primes(&etale, std::slice::from_ref(&x), unital, DEFAULT_FACTOR_BOUND)?;
        println!("(1, 2, 3) in Z^3, unital {unital}: bad primes {bad:?}");
        for p in [2, 3, 5] {
            let fiber = etale.fiber_mod_p(p)?;
            let c = closure(&fiber.algebra, &[fiber.project(&x)], unital)?;
            println!("  mod {p}: closure dim {} of {}", c.dim(), fiber.algebra.dim());
        }
    }

    // E_11 and 6 (E_12 + E_21) generate Mat_2(Q) but not Mat_2(Z).
    let mat = IntegralAlgebra::from_rational(&matrix_algebra(Field::Rational, 2)?)?;
    let s = vec![
        mat.element_from_i64(&[1, 0, 0, 0])?,
        mat.element_from_i64(&[0, 6, 6, 0])?,
    ];
    let report = verify_global_generation(&mat, &s, false, DEFAULT_FACTOR_BOUND)?;
    println!(
        "Mat_2(Z): generates {}, bad primes {:?}",
        report.generates, report.bad_primes
    );
    for check in &report.fiber_checks {
        println!(
            "  fiber at {:?}: closure {} of {}",
            check.prime, check.closure_dim, check.fiber_dim
        );
    }
    Ok(())
}
