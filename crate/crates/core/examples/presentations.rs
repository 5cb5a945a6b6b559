//! An algebra over Z given by generators and relations, normalized to
//! invariant factors, and its fibers.
//!
//! `cargo run --example presentations`

use genalg::algebra::{OpRole, OperationTensor, Term};
use genalg::forster::IntegralAlgebra;
use num_bigint::BigInt;

fn main() -> genalg::Result<()> {
    // Z^2 / <(2, 4), (4, 2)> with e_i e_j = 2 (e_i + e_j).
    let relations = vec![
        vec![BigInt::from(2), BigInt::from(4)],
        vec![BigInt::from(4), BigInt::from(2)],
    ];
    let mut terms = Vec::new();
    for i in 0..2 {
        for j in 0..2 {
            for out in [i, j] {
                terms.push(Term {
                    inputs: vec![i, j],
                    output: out,
                    coeff: BigInt::from(2),
                });
            }
        }
    }
    let product = OperationTensor::integral(2, OpRole::Product, terms);
    let normalized = IntegralAlgebra::from_relations(2, &relations, vec![product])?;
    let alg = &normalized.algebra;
    println!("invariant factors {:?}", alg.factors());
    println!(
        "e_1 becomes {:?}",
        normalized.convert(&[BigInt::from(1), BigInt::from(0)])
    );

    for p in [2, 3, 5] {
        let fiber = alg.fiber_mod_p(p)?;
        println!(
            "fiber at {p}: dim {}, keeps coordinates {:?}",
            fiber.algebra.dim(),
            fiber.coords()
        );
    }
    println!("rational fiber: dim {}", alg.generic_fiber()?.algebra.dim());
    Ok(())
}
