//! Exhaustive search for the minimal number of generators over small fields.
//!
//! `cargo run --example minimal_generators`

use genalg::exactmath::Field;
use genalg::format::field_tuple_json;
use genalg::search::{min_generators, SearchBudget};
use genalg::zoo::{field_extension_etale, matrix_algebra, split_etale, split_quaternion};

fn main() -> genalg::Result<()> {
    let budget = SearchBudget::default();
    let f2 = Field::prime(2)?;
    let f3 = Field::prime(3)?;
    let cases = [
        ("Mat_2(F2)", matrix_algebra(f2, 2)?),
        ("Mat_2(F3)", matrix_algebra(f3, 2)?),
        ("split quaternions over F3", split_quaternion(f3)?),
        ("F2^3", split_etale(f2, 3)?),
        ("F4 = F2[x]/(x^2+x+1)", field_extension_etale(2, &[1, 1, 1])?),
    ];
    for (name, alg) in cases {
        let report = min_generators(&alg, &budget, false)?;
        let levels: Vec<String> = report
            .levels
            .iter()
            .map(|l| {
                format!(
                    "n={}: {} {}",
                    l.n,
                    l.examined,
                    if l.exhaustive { "enumerated" } else { "sampled" }
                )
            })
            .collect();
        println!(
            "{name}: minimum {:?}, certified {}",
            report.n_upper, report.lower_bound_certified
        );
        println!("  {}", levels.join(", "));
        if let Some(cert) = &report.certificate {
            println!(
                "  first generating tuple: {}",
                field_tuple_json(alg.field(), &cert.tuple)
            );
        }
    }
    Ok(())
}
