//! A custom algebra written as a JSON file, loaded, and queried.
//!
//! `cargo run --example algebra_files`

use genalg::algebra::is_generating;
use genalg::format::{parse_algebra, parse_field_tuple, AlgebraFile, LoadedAlgebra};
use genalg::search::{min_generators, SearchBudget};

// Dual numbers F5[e]/(e^2) with an explicit unit.
const DUAL_NUMBERS: &str = r#"{
  "base": "Fp",
  "p": "5",
  "dimension": 2,
  "ops": [
    {"arity": 2, "role": "product", "entries": [[0, 0, 0, "1"], [0, 1, 1, "1"], [1, 0, 1, "1"]]},
    {"arity": 0, "role": "unit", "entries": [[0, "1"]]}
  ]
}"#;

fn main() -> genalg::Result<()> {
    let LoadedAlgebra::Field(alg) = parse_algebra(DUAL_NUMBERS)? else {
        unreachable!("a field algebra")
    };
    let e = parse_field_tuple(&alg, r#"[["0", "1"]]"#)?;
    let one_plus_e = parse_field_tuple(&alg, r#"[["1", "1"]]"#)?;
    println!("e alone: {}", is_generating(&alg, &e, false)?.closure_dim);
    println!("e with the unit: {}", is_generating(&alg, &e, true)?.closure_dim);
    println!("1 + e alone: {}", is_generating(&alg, &one_plus_e, false)?.closure_dim);

    let report = min_generators(&alg, &SearchBudget::default(), false)?;
    println!(
        "minimum {:?} (certified {})",
        report.n_upper, report.lower_bound_certified
    );

    // Canonical form: the same algebra always serializes identically.
    let canonical = AlgebraFile::from_multialgebra(&alg).to_json();
    println!("{canonical}");
    Ok(())
}
