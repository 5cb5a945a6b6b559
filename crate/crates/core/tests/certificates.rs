//! Certificate replay beyond the digest: edits that are resealed with a fresh
//! digest must still fail semantic replay.

use genalg::algebra::is_generating;
use genalg::exactmath::Field;
use genalg::format::{verify_certificate, CertificateFile, CertificateKind, LoadedAlgebra, ReplayLimits};
use genalg::forster::{forster_lift, IntegralAlgebra, LiftOptions};
use genalg::search::{min_generators, random_probe, SearchBudget};
use genalg::zoo::{canonical_matrix_generators, matrix_algebra};
use num_bigint::BigInt;
use serde_json::Value;

fn leaves(v: &Value, path: &mut Vec<String>, out: &mut Vec<Vec<String>>) {
    match v {
        Value::Object(m) => m.iter().for_each(|(k, x)| {
            path.push(k.clone());
            leaves(x, path, out);
            path.pop();
        }),
        Value::Array(a) => a.iter().enumerate().for_each(|(i, x)| {
            path.push(i.to_string());
            leaves(x, path, out);
            path.pop();
        }),
        _ => out.push(path.clone()),
    }
}

fn leaf_mut<'a>(v: &'a mut Value, path: &[String]) -> &'a mut Value {
    path.iter().fold(v, |v, k| match v {
        Value::Array(a) => &mut a[k.parse::<usize>().unwrap()],
        other => &mut other[k.as_str()],
    })
}

fn bump(v: &Value) -> Option<Value> {
    match v {
        Value::Bool(b) => Some(Value::Bool(!b)),
        Value::Number(n) => Some(Value::from(n.as_u64()? + 1)),
        Value::String(s) => s.parse::<BigInt>().ok().map(|x| Value::String((x + 1u32).to_string())),
        _ => None,
    }
}

/// Body leaves whose resealed edit survives replay.
fn accepted_edits(alg: &LoadedAlgebra, cert: &CertificateFile) -> Vec<String> {
    let limits = ReplayLimits::default();
    verify_certificate(alg, cert, limits).expect("genuine certificate replays");
    let mut paths = Vec::new();
    leaves(&cert.body, &mut Vec::new(), &mut paths);
    paths
        .into_iter()
        .filter(|path| {
            let mut body = cert.body.clone();
            let leaf = leaf_mut(&mut body, path);
            let Some(new) = bump(leaf) else { return false };
            *leaf = new;
            let resealed = CertificateFile::seal(cert.kind, alg, body);
            verify_certificate(alg, &resealed, limits).is_ok()
        })
        .map(|p| p.join("."))
        .collect()
}

/// Edits that leave a different but still true claim: another explicit tuple
/// that generates, the weaker unital claim, alternative local evidence, or
/// lifted coordinates outside the fiber of their prime.
fn harmless(kind: CertificateKind, path: &str) -> bool {
    match kind {
        CertificateKind::Generation => path == "unital" || path.starts_with("tuple."),
        CertificateKind::Mingen => false,
        CertificateKind::Lift => path.starts_with("local.") || path.contains(".lifted."),
    }
}

fn assert_sound(alg: LoadedAlgebra, cert: CertificateFile) {
    for path in accepted_edits(&alg, &cert) {
        assert!(
            harmless(cert.kind, &path),
            "{:?}: resealed edit at {path} replays",
            cert.kind
        );
    }
}

#[test]
fn explicit_generation() {
    let f2 = Field::prime(2).unwrap();
    let alg = matrix_algebra(f2, 2).unwrap();
    let pair = canonical_matrix_generators(f2, 2).unwrap();
    let cert = CertificateFile::generation(&alg, &is_generating(&alg, &pair, false).unwrap(), None);
    assert_sound(LoadedAlgebra::Field(alg), cert);
}

#[test]
fn random_generation() {
    let alg = matrix_algebra(Field::prime(3).unwrap(), 2).unwrap();
    let budget = SearchBudget::default();
    let found = random_probe(&alg, 2, &budget, false).unwrap().unwrap();
    let cert = CertificateFile::generation(&alg, &found, Some(budget.coeff_height));
    let accepted = accepted_edits(&LoadedAlgebra::Field(alg), &cert);
    assert_eq!(accepted, ["unital"]);
}

#[test]
fn exhaustive_generation_and_mingen() {
    let alg = matrix_algebra(Field::prime(2).unwrap(), 2).unwrap();
    let budget = SearchBudget::default();
    let report = min_generators(&alg, &budget, false).unwrap();
    let ex = CertificateFile::generation(&alg, report.certificate.as_ref().unwrap(), None);
    assert_eq!(accepted_edits(&LoadedAlgebra::Field(alg.clone()), &ex), ["unital"]);
    let mg = CertificateFile::mingen(&alg, &report, budget.coeff_height);
    assert!(accepted_edits(&LoadedAlgebra::Field(alg), &mg).is_empty());
}

#[test]
fn lift() {
    let z = IntegralAlgebra::zero_module(vec![2.into(), 3.into(), 0.into()]).unwrap();
    let cert = CertificateFile::lift(&z, &forster_lift(&z, 2, &LiftOptions::default()).unwrap());
    assert_sound(LoadedAlgebra::Integral(z, None), cert);
}

#[test]
fn wrong_algebra_rejected() {
    let f2 = Field::prime(2).unwrap();
    let alg = matrix_algebra(f2, 2).unwrap();
    let pair = canonical_matrix_generators(f2, 2).unwrap();
    let cert = CertificateFile::generation(&alg, &is_generating(&alg, &pair, false).unwrap(), None);
    let other = LoadedAlgebra::Field(matrix_algebra(Field::prime(3).unwrap(), 2).unwrap());
    assert!(verify_certificate(&other, &cert, ReplayLimits::default()).is_err());
}
