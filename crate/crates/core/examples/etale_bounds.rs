//! Generators of split étale algebras `F_q^n`: a tuple generates exactly when
//! its coordinate columns are distinct (and nonzero without the unit), so
//! `⌈log_q(n+1)⌉` elements suffice, or `⌈log_q n⌉` with the unit.
//!
//! `cargo run --example etale_bounds`

use genalg::algebra::is_generating;
use genalg::exactmath::Field;
use genalg::format::field_tuple_json;
use genalg::search::exhaustively_refuted;
use genalg::zoo::{ceil_log, distinct_entries_generator, etale_logq_generators, split_etale};

fn main() -> genalg::Result<()> {
    for (q, n) in [(2u64, 2usize), (2, 3), (2, 7), (3, 3), (3, 8), (5, 24)] {
        let alg = split_etale(Field::prime(q)?, n)?;
        for unital in [false, true] {
            let k = if unital {
                ceil_log(q, n as u64)
            } else {
                ceil_log(q, n as u64 + 1)
            };
            let tuple = etale_logq_generators(q, n, unital)?;
            assert!(is_generating(&alg, &tuple, unital)?.generates());
            let below = match k.checked_sub(1) {
                Some(m) => match exhaustively_refuted(&alg, m, unital, 1_000_000)? {
                    Some(true) => format!("every {m}-tuple fails"),
                    Some(false) => unreachable!("the bound is sharp"),
                    None => format!("{m}-tuples too many to enumerate"),
                },
                None => "nothing to refute".into(),
            };
            println!(
                "F{q}^{n} {}: {k} generators; {below}",
                if unital { "unital" } else { "non-unital" }
            );
        }
    }
    // An infinite field needs only one element with distinct entries.
    let alg = split_etale(Field::Rational, 6)?;
    let x = distinct_entries_generator(Field::Rational, 6)?;
    println!(
        "Q^6 generated by {}: {}",
        field_tuple_json(Field::Rational, std::slice::from_ref(&x)),
        is_generating(&alg, &[x], false)?.generates()
    );
    Ok(())
}
