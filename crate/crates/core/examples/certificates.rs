//! Sealed certificates: emit, serialize, replay, and reject edits.
//!
//! `cargo run --example certificates`

use genalg::algebra::is_generating;
use genalg::exactmath::Field;
use genalg::format::{verify_certificate, AlgebraFile, CertificateFile, LoadedAlgebra, ReplayLimits};
use genalg::search::{min_generators, SearchBudget};
use genalg::zoo::{canonical_matrix_generators, matrix_algebra};

fn main() -> genalg::Result<()> {
    let field = Field::prime(3)?;
    let alg = matrix_algebra(field, 2)?;
    let file = AlgebraFile::from_multialgebra(&alg);
    let loaded = file.load()?;
    println!("algebra hash {}", loaded.hash());

    let pair = canonical_matrix_generators(field, 2)?;
    let generation = CertificateFile::generation(&alg, &is_generating(&alg, &pair, false)?, None);
    let budget = SearchBudget::default();
    let mingen = CertificateFile::mingen(&alg, &min_generators(&alg, &budget, false)?, budget.coeff_height);

    for cert in [generation, mingen] {
        let json = cert.to_json();
        let reread = CertificateFile::parse(&json)?;
        verify_certificate(&loaded, &reread, ReplayLimits::default())?;
        println!("{:?} certificate ({} bytes) replays", cert.kind, json.len());

        // Editing the body breaks the digest; resealing it still fails replay.
        let mut edited = reread.clone();
        match edited.body.get_mut("levels").and_then(|l| l.get_mut(1)) {
            Some(level) => level["examined"] = "80".into(),
            None => edited.body["closure_dim"] = 3.into(),
        }
        println!("  edited: {}", verdict(&loaded, &edited));
        let resealed = CertificateFile::seal(edited.kind, &loaded, edited.body);
        println!("  edited and resealed: {}", verdict(&loaded, &resealed));
    }
    Ok(())
}

fn verdict(alg: &LoadedAlgebra, cert: &CertificateFile) -> String {
    match verify_certificate(alg, cert, ReplayLimits::default()) {
        Ok(()) => "accepted".into(),
        Err(e) => format!("rejected ({e})"),
    }
}
