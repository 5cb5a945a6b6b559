//! Two elements generate every full matrix algebra.
//!
//! `cargo run --example matrix_generators`

use genalg::algebra::{closure, is_generating};
use genalg::exactmath::Field;
use genalg::zoo::{canonical_matrix_generators, matrix_algebra};

fn main() -> genalg::Result<()> {
    for field in [Field::prime(2)?, Field::prime(3)?, Field::Rational] {
        for n in 2..=4 {
            let alg = matrix_algebra(field, n)?;
            let [e11, cycle] = canonical_matrix_generators(field, n)?;
            let c = closure(&alg, &[e11.clone(), cycle.clone()], false)?;
            println!(
                "Mat_{n} over {field}: closure dim {} of {} after {} rounds",
                c.dim(),
                alg.dim(),
                c.rounds()
            );
            // Neither element generates alone.
            assert!(!is_generating(&alg, &[e11], false)?.generates());
            assert!(!is_generating(&alg, &[cycle], false)?.generates());
        }
    }
    Ok(())
}
