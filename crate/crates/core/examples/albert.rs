//! The 27-dimensional Albert algebra: Jordan identity checks and a seeded
//! random generating triple.
//!
//! `cargo run --release --example albert`

use genalg::algebra::{closure, identities};
use genalg::exactmath::Field;
use genalg::search::{random_tuple, SearchBudget};
use genalg::zoo::{albert, albert_generators};

fn main() -> genalg::Result<()> {
    let budget = SearchBudget::default();
    for field in [Field::prime(5)?, Field::Rational] {
        let alg = albert(field)?;
        let samples = 100;
        let jordan = (0..samples)
            .filter(|&trial| {
                let xy = random_tuple(field, alg.dim(), 2, budget.seed, trial, 3);
                identities::jordan_identity(&alg, &xy[0], &xy[1])
            })
            .count();
        println!(
            "Albert over {field}: dim {}, commutative {}, associative {}, Jordan on {jordan}/{samples} samples",
            alg.dim(),
            identities::is_commutative(&alg),
            identities::is_associative(&alg),
        );
        let triple = albert_generators(&alg, &budget)?;
        let c = closure(&alg, &triple, false)?;
        println!(
            "  seeded triple generates: closure dim {} in {} rounds",
            c.dim(),
            c.rounds()
        );
    }
    Ok(())
}
