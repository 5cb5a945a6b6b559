//! JSON interchange for algebras, tuples and certificates.
//!
//! All integers that can grow (coordinates, coefficients, moduli, primes) are
//! written as decimal strings. Structure constants are sparse entries
//! `[i_1, …, i_k, out, "coeff"]`.

pub mod dec;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::algebra::{Element, GenerationCertificate, Method, Multialgebra, OpRole, OperationTensor, Term};
use crate::error::{input, Error, Result};
use crate::exactmath::{parse_bigint, Field, IntMatrix};
use crate::forster::{replay_lift, IntegralAlgebra, LiftCertificate};
use crate::search::{candidate_count, decode_tuple, exhaustively_refuted, random_tuple, LevelReport, MinGenReport};

/// One sparse structure constant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entry {
    pub inputs: Vec<usize>,
    pub output: usize,
    pub coeff: String,
}

impl Serialize for Entry {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut row: Vec<Value> = self.inputs.iter().map(|&i| json!(i)).collect();
        row.push(json!(self.output));
        row.push(json!(self.coeff));
        row.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Entry {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let row = Vec::<Value>::deserialize(d)?;
        let (coeff, idx) = row.split_last().ok_or_else(|| D::Error::custom("empty entry"))?;
        let coeff = match coeff {
            Value::String(s) => s.clone(),
            Value::Number(n) => n.to_string(),
            other => return Err(D::Error::custom(format!("bad coefficient {other}"))),
        };
        let idx: Vec<usize> = idx
            .iter()
            .map(|v| {
                v.as_u64()
                    .map(|x| x as usize)
                    .ok_or_else(|| D::Error::custom(format!("bad index {v}")))
            })
            .collect::<std::result::Result<_, _>>()?;
        let (output, inputs) = idx
            .split_last()
            .ok_or_else(|| D::Error::custom("entry without output index"))?;
        Ok(Entry {
            inputs: inputs.to_vec(),
            output: *output,
            coeff,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OpFile {
    pub arity: usize,
    pub role: OpRole,
    /// Degree in each argument; only multilinear operations (all ones) are supported.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multidegree: Option<Vec<usize>>,
    pub entries: Vec<Entry>,
}

/// On-disk description of an algebra over `F_p`, `Q` or `Z`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    /// `"Fp"`, `"Q"` or `"Z"`.
    pub base: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<String>,
    /// Vector-space dimension (field bases).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dimension: Option<usize>,
    /// `M = ⊕ Z/d_i`, with `"0"` for a free summand.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub invariant_factors: Option<Vec<String>>,
    /// Raw presentation `Z^generators / (relations)`; ops are then in generator coordinates.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub relations: Option<Vec<Vec<String>>>,
    pub ops: Vec<OpFile>,
}

/// A parsed algebra file.
#[derive(Clone, Debug)]
pub enum LoadedAlgebra {
    Field(Multialgebra),
    /// With the map from raw generator coordinates when the file gave relations.
    Integral(IntegralAlgebra, Option<IntMatrix>),
}

impl LoadedAlgebra {
    pub fn canonical_file(&self) -> AlgebraFile {
        match self {
            LoadedAlgebra::Field(a) => AlgebraFile::from_multialgebra(a),
            LoadedAlgebra::Integral(a, _) => AlgebraFile::from_integral(a),
        }
    }

    /// sha256 of the canonical JSON form.
    pub fn hash(&self) -> String {
        sha256_hex(&serde_json::to_vec(&self.canonical_file()).expect("serializable"))
    }
}

fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

fn op_files<C>(ops: &[OperationTensor<C>], fmt: impl Fn(&C) -> String) -> Vec<OpFile> {
    ops.iter()
        .map(|op| OpFile {
            arity: op.arity(),
            role: op.role(),
            multidegree: None,
            entries: op
                .terms()
                .iter()
                .map(|t| Entry {
                    inputs: t.inputs.clone(),
                    output: t.output,
                    coeff: fmt(&t.coeff),
                })
                .collect(),
        })
        .collect()
}

impl AlgebraFile {
    pub fn from_multialgebra(alg: &Multialgebra) -> Self {
        let field = alg.field();
        let (base, p) = match field {
            Field::Prime(p) => ("Fp", Some(p.to_string())),
            Field::Rational => ("Q", None),
        };
        AlgebraFile {
            base: base.into(),
            p,
            dimension: Some(alg.dim()),
            invariant_factors: None,
            generators: None,
            relations: None,
            ops: op_files(alg.ops(), |c| field.format_scalar(c)),
        }
    }

    pub fn from_integral(alg: &IntegralAlgebra) -> Self {
        AlgebraFile {
            base: "Z".into(),
            p: None,
            dimension: None,
            invariant_factors: Some(alg.factors().iter().map(ToString::to_string).collect()),
            generators: None,
            relations: None,
            ops: op_files(alg.ops(), ToString::to_string),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    fn check_ops(&self) -> Result<()> {
        for (k, op) in self.ops.iter().enumerate() {
            if let Some(md) = &op.multidegree {
                if md.len() != op.arity || md.iter().any(|&m| m != 1) {
                    return input(format!(
                        "operation {k}: multidegree {md:?} is not multilinear; only degree 1 in each argument is supported"
                    ));
                }
            }
            if let Some(e) = op.entries.iter().find(|e| e.inputs.len() != op.arity) {
                return Err(Error::ArityMismatch {
                    op: k,
                    arity: op.arity,
                    given: e.inputs.len(),
                });
            }
        }
        Ok(())
    }

    pub fn load(&self) -> Result<LoadedAlgebra> {
        self.check_ops()?;
        match self.base.as_str() {
            "Fp" | "Q" => {
                let field = if self.base == "Q" {
                    if self.p.is_some() {
                        return input("base Q takes no p");
                    }
                    Field::Rational
                } else {
                    let p = self
                        .p
                        .as_deref()
                        .ok_or_else(|| Error::Input("base Fp needs p".into()))?;
                    Field::prime(p.trim().parse().map_err(|_| Error::Input(format!("bad prime {p:?}")))?)?
                };
                if self.invariant_factors.is_some() || self.generators.is_some() || self.relations.is_some() {
                    return input("field algebras take a dimension, not a module presentation");
                }
                let dim = self.dimension.ok_or_else(|| Error::Input("missing dimension".into()))?;
                let mut ops = Vec::with_capacity(self.ops.len());
                for op in &self.ops {
                    let terms = op
                        .entries
                        .iter()
                        .map(|e| {
                            Ok(Term {
                                inputs: e.inputs.clone(),
                                output: e.output,
                                coeff: field.parse_scalar(&e.coeff)?,
                            })
                        })
                        .collect::<Result<Vec<_>>>()?;
                    ops.push(OperationTensor::new(field, op.arity, op.role, terms));
                }
                Ok(LoadedAlgebra::Field(Multialgebra::new(field, dim, ops)?))
            }
            "Z" => {
                if self.p.is_some() || self.dimension.is_some() {
                    return input("base Z takes invariant_factors or generators + relations");
                }
                let ops = self
                    .ops
                    .iter()
                    .map(|op| {
                        let terms = op
                            .entries
                            .iter()
                            .map(|e| {
                                Ok(Term {
                                    inputs: e.inputs.clone(),
                                    output: e.output,
                                    coeff: parse_bigint(&e.coeff)?,
                                })
                            })
                            .collect::<Result<Vec<_>>>()?;
                        Ok(OperationTensor::integral(op.arity, op.role, terms))
                    })
                    .collect::<Result<Vec<_>>>()?;
                match (&self.invariant_factors, self.generators, &self.relations) {
                    (Some(f), None, None) => {
                        let factors = f.iter().map(|s| parse_bigint(s)).collect::<Result<Vec<_>>>()?;
                        Ok(LoadedAlgebra::Integral(IntegralAlgebra::new(factors, ops)?, None))
                    }
                    (None, Some(g), rel) => {
                        let rel = rel
                            .iter()
                            .flatten()
                            .map(|r| r.iter().map(|s| parse_bigint(s)).collect::<Result<Vec<_>>>())
                            .collect::<Result<Vec<_>>>()?;
                        let n = IntegralAlgebra::from_relations(g, &rel, ops)?;
                        Ok(LoadedAlgebra::Integral(n.algebra, Some(n.to_invariant)))
                    }
                    _ => input("base Z takes exactly one of invariant_factors or generators (+ relations)"),
                }
            }
            other => input(format!("unknown base {other:?}; expected Fp, Q or Z")),
        }
    }
}

pub fn parse_algebra(json: &str) -> Result<LoadedAlgebra> {
    serde_json::from_str::<AlgebraFile>(json)?.load()
}

fn value_strings(v: &Value) -> Result<Vec<Vec<String>>> {
    let rows = v
        .as_array()
        .ok_or_else(|| Error::Input("tuple must be a JSON list of vectors".into()))?;
    rows.iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| Error::Input("tuple entries must be lists".into()))?
                .iter()
                .map(|x| match x {
                    Value::String(s) => Ok(s.clone()),
                    Value::Number(n) => Ok(n.to_string()),
                    other => input(format!("bad coordinate {other}")),
                })
                .collect()
        })
        .collect()
}

/// Tuple of field elements from JSON such as `[["1","0"],["0","1/2"]]`.
pub fn parse_field_tuple(alg: &Multialgebra, json: &str) -> Result<Vec<Element>> {
    let field = alg.field();
    value_strings(&serde_json::from_str(json)?)?
        .iter()
        .map(|row| {
            let e = Element::new(row.iter().map(|s| field.parse_scalar(s)).collect::<Result<_>>()?);
            alg.check_element(&e)?;
            Ok(e)
        })
        .collect()
}

/// Tuple of module elements; raw generator coordinates are converted when the
/// algebra was given by relations and the vector has the raw length.
pub fn parse_integral_tuple(alg: &IntegralAlgebra, raw: Option<&IntMatrix>, json: &str) -> Result<Vec<Vec<BigInt>>> {
    value_strings(&serde_json::from_str(json)?)?
        .iter()
        .map(|row| {
            let x = row.iter().map(|s| parse_bigint(s)).collect::<Result<Vec<_>>>()?;
            match raw {
                Some(m) if x.len() == m.cols() && x.len() != alg.rank() => Ok(alg.reduce(&m.mul_vec(&x))),
                _ => {
                    alg.check_element(&x)?;
                    Ok(alg.reduce(&x))
                }
            }
        })
        .collect()
}

pub fn field_tuple_json(field: Field, tuple: &[Element]) -> Value {
    json!(tuple
        .iter()
        .map(|e| e.iter().map(|s| field.format_scalar(s)).collect::<Vec<_>>())
        .collect::<Vec<_>>())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MethodFile {
    Explicit,
    Random {
        #[serde(with = "dec::one")]
        seed: u64,
        #[serde(with = "dec::one")]
        trial: u64,
    },
    Exhaustive {
        #[serde(with = "dec::one")]
        index: u64,
    },
}

impl From<&Method> for MethodFile {
    fn from(m: &Method) -> Self {
        match *m {
            Method::Explicit => MethodFile::Explicit,
            Method::Random { seed, trial } => MethodFile::Random { seed, trial },
            Method::Exhaustive { index } => MethodFile::Exhaustive { index },
        }
    }
}

impl From<&MethodFile> for Method {
    fn from(m: &MethodFile) -> Self {
        match *m {
            MethodFile::Explicit => Method::Explicit,
            MethodFile::Random { seed, trial } => Method::Random { seed, trial },
            MethodFile::Exhaustive { index } => Method::Exhaustive { index },
        }
    }
}

/// Serialized [`GenerationCertificate`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GenerationBody {
    pub tuple: Vec<Vec<String>>,
    pub unital: bool,
    pub algebra_dim: usize,
    pub closure_dim: usize,
    pub monomial_witnesses: usize,
    pub method: MethodFile,
    /// Only for random probes: the coefficient height the tuple was drawn with.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub height: Option<u64>,
}

impl GenerationBody {
    pub fn new(field: Field, c: &GenerationCertificate, height: Option<u64>) -> Self {
        GenerationBody {
            tuple: c
                .tuple
                .iter()
                .map(|e| e.iter().map(|s| field.format_scalar(s)).collect())
                .collect(),
            unital: c.unital,
            algebra_dim: c.algebra_dim,
            closure_dim: c.closure_dim,
            monomial_witnesses: c.monomial_witnesses,
            method: (&c.method).into(),
            height: matches!(c.method, Method::Random { .. }).then_some(height).flatten(),
        }
    }

    pub fn to_certificate(&self, alg: &Multialgebra) -> Result<GenerationCertificate> {
        let field = alg.field();
        let tuple = self
            .tuple
            .iter()
            .map(|row| {
                let e = Element::new(row.iter().map(|s| field.parse_scalar(s)).collect::<Result<_>>()?);
                alg.check_element(&e)?;
                Ok(e)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GenerationCertificate {
            tuple,
            algebra_dim: self.algebra_dim,
            closure_dim: self.closure_dim,
            unital: self.unital,
            monomial_witnesses: self.monomial_witnesses,
            method: (&self.method).into(),
        })
    }
}

/// Serialized [`MinGenReport`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MinGenBody {
    pub n_upper: Option<usize>,
    pub lower_bound_certified: bool,
    pub unital: bool,
    pub levels: Vec<LevelFile>,
    pub certificate: Option<GenerationBody>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LevelFile {
    pub n: usize,
    pub exhaustive: bool,
    #[serde(with = "dec::one")]
    pub examined: u64,
    pub found: bool,
}

impl MinGenBody {
    pub fn new(field: Field, r: &MinGenReport, height: u64) -> Self {
        MinGenBody {
            n_upper: r.n_upper,
            lower_bound_certified: r.lower_bound_certified,
            unital: r.unital,
            levels: r
                .levels
                .iter()
                .map(|l| LevelFile {
                    n: l.n,
                    exhaustive: l.exhaustive,
                    examined: l.examined,
                    found: l.found,
                })
                .collect(),
            certificate: r
                .certificate
                .as_ref()
                .map(|c| GenerationBody::new(field, c, Some(height))),
        }
    }

    pub fn levels(&self) -> Vec<LevelReport> {
        self.levels
            .iter()
            .map(|l| LevelReport {
                n: l.n,
                exhaustive: l.exhaustive,
                examined: l.examined,
                found: l.found,
            })
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CertificateKind {
    Generation,
    Mingen,
    Lift,
}

/// A sealed certificate: the body is bound to an algebra by its hash and to
/// itself by a digest.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateFile {
    pub kind: CertificateKind,
    pub algebra_hash: String,
    pub body: Value,
    pub digest: String,
}

fn digest_of(kind: CertificateKind, algebra_hash: &str, body: &Value) -> String {
    let sealed = json!({ "kind": kind, "algebra_hash": algebra_hash, "body": body });
    sha256_hex(&serde_json::to_vec(&sealed).expect("serializable"))
}

impl CertificateFile {
    pub fn seal(kind: CertificateKind, algebra: &LoadedAlgebra, body: Value) -> Self {
        let algebra_hash = algebra.hash();
        let digest = digest_of(kind, &algebra_hash, &body);
        CertificateFile {
            kind,
            algebra_hash,
            body,
            digest,
        }
    }

    pub fn generation(algebra: &Multialgebra, c: &GenerationCertificate, height: Option<u64>) -> Self {
        let body = serde_json::to_value(GenerationBody::new(algebra.field(), c, height)).expect("serializable");
        Self::seal(
            CertificateKind::Generation,
            &LoadedAlgebra::Field(algebra.clone()),
            body,
        )
    }

    pub fn mingen(algebra: &Multialgebra, r: &MinGenReport, height: u64) -> Self {
        let body = serde_json::to_value(MinGenBody::new(algebra.field(), r, height)).expect("serializable");
        Self::seal(CertificateKind::Mingen, &LoadedAlgebra::Field(algebra.clone()), body)
    }

    pub fn lift(algebra: &IntegralAlgebra, c: &LiftCertificate) -> Self {
        let body = serde_json::to_value(c).expect("serializable");
        Self::seal(
            CertificateKind::Lift,
            &LoadedAlgebra::Integral(algebra.clone(), None),
            body,
        )
    }

    /// Whether the digest matches the contents.
    pub fn digest_ok(&self) -> bool {
        digest_of(self.kind, &self.algebra_hash, &self.body) == self.digest
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn parse(json: &str) -> Result<Self> {
        Ok(serde_json::from_str(json)?)
    }
}

fn reject<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvariantViolation(msg.into()))
}

/// Limits used when replaying certificates.
#[derive(Clone, Copy, Debug)]
pub struct ReplayLimits {
    /// Largest enumeration re-run to confirm a lower bound.
    pub max_exhaustive: u64,
    pub factor_bound: u64,
}

impl Default for ReplayLimits {
    fn default() -> Self {
        ReplayLimits {
            max_exhaustive: 1_000_000,
            factor_bound: crate::forster::DEFAULT_FACTOR_BOUND,
        }
    }
}

fn replay_generation(alg: &Multialgebra, body: &GenerationBody) -> Result<GenerationCertificate> {
    let cert = body.to_certificate(alg)?;
    if !cert.replay(alg)? {
        return reject("closure does not replay");
    }
    match cert.method {
        Method::Explicit => {}
        Method::Random { seed, trial } => {
            let height = body
                .height
                .ok_or_else(|| Error::InvariantViolation("random method without height".into()))?;
            let t = random_tuple(alg.field(), alg.dim(), cert.tuple.len(), seed, trial, height);
            if t != cert.tuple {
                return reject("tuple is not the recorded random draw");
            }
        }
        Method::Exhaustive { index } => {
            let Field::Prime(p) = alg.field() else {
                return reject("exhaustive index over an infinite field");
            };
            if decode_tuple(p, alg.dim(), cert.tuple.len(), index) != cert.tuple {
                return reject("tuple is not the recorded enumeration index");
            }
        }
    }
    Ok(cert)
}

fn replay_mingen(alg: &Multialgebra, body: &MinGenBody, limits: ReplayLimits) -> Result<()> {
    let levels = body.levels();
    if levels.iter().enumerate().any(|(i, l)| l.n != i) {
        return reject("levels out of order");
    }
    let found: Vec<usize> = levels.iter().filter(|l| l.found).map(|l| l.n).collect();
    match (&body.certificate, body.n_upper) {
        (Some(c), Some(n)) => {
            if found != [n] || levels.len() != n + 1 || c.unital != body.unital {
                return reject("mingen levels disagree with the reported size");
            }
            let cert = replay_generation(alg, c)?;
            if cert.tuple.len() != n || !cert.generates() {
                return reject("mingen certificate does not generate with the reported size");
            }
            let last = &levels[n];
            let consistent = match cert.method {
                Method::Exhaustive { index } => last.exhaustive && last.examined == index + 1,
                Method::Random { trial, .. } => !last.exhaustive && last.examined == trial + 1,
                Method::Explicit => false,
            };
            if !consistent {
                return reject("final level disagrees with how the tuple was found");
            }
        }
        (None, None) => {
            if !found.is_empty() || body.lower_bound_certified {
                return reject("inconclusive report claims results");
            }
        }
        _ => return reject("size and certificate disagree"),
    }
    let below = &levels[..levels.len().saturating_sub(1)];
    let certified = body.n_upper.is_some() && below.iter().all(|l| l.exhaustive);
    if certified != body.lower_bound_certified {
        return reject("lower-bound flag disagrees with the levels");
    }
    for l in below.iter().filter(|l| l.exhaustive) {
        let Field::Prime(p) = alg.field() else {
            return reject("exhaustive level over an infinite field");
        };
        if candidate_count(p, alg.dim(), l.n) != Some(l.examined) {
            return reject(format!("level {} claims {} candidates", l.n, l.examined));
        }
        match exhaustively_refuted(alg, l.n, body.unital, limits.max_exhaustive)? {
            Some(true) => {}
            Some(false) => return reject(format!("a {}-tuple generates after all", l.n)),
            None => return reject(format!("level {} is too large to replay", l.n)),
        }
    }
    Ok(())
}

/// Checks seal and algebra binding, then replays the body. Any mismatch is
/// an `InvariantViolation` naming the first failed check.
pub fn verify_certificate(alg: &LoadedAlgebra, cert: &CertificateFile, limits: ReplayLimits) -> Result<()> {
    if !cert.digest_ok() {
        return reject("digest mismatch");
    }
    if cert.algebra_hash != alg.hash() {
        return reject("certificate belongs to a different algebra");
    }
    match (cert.kind, alg) {
        (CertificateKind::Generation, LoadedAlgebra::Field(a)) => {
            replay_generation(a, &serde_json::from_value(cert.body.clone())?).map(drop)
        }
        (CertificateKind::Mingen, LoadedAlgebra::Field(a)) => {
            replay_mingen(a, &serde_json::from_value(cert.body.clone())?, limits)
        }
        (CertificateKind::Lift, LoadedAlgebra::Integral(a, _)) => {
            replay_lift(a, &serde_json::from_value(cert.body.clone())?, limits.factor_bound)
        }
        (kind, _) => reject(format!("{kind:?} certificate does not fit this algebra")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo::{matrix_algebra, split_octonion};

    #[test]
    fn algebra_roundtrip() {
        for alg in [
            matrix_algebra(Field::prime(2).unwrap(), 2).unwrap(),
            split_octonion(Field::Rational).unwrap(),
        ] {
            let file = AlgebraFile::from_multialgebra(&alg);
            let LoadedAlgebra::Field(back) = parse_algebra(&file.to_json()).unwrap() else {
                panic!()
            };
            assert_eq!(back, alg);
        }
        let z = IntegralAlgebra::zero_module(vec![BigInt::from(2), BigInt::from(0)]).unwrap();
        let LoadedAlgebra::Integral(back, None) = parse_algebra(&AlgebraFile::from_integral(&z).to_json()).unwrap()
        else {
            panic!()
        };
        assert_eq!(back, z);
    }

    #[test]
    fn rejects_bad_files() {
        let bad = [
            r#"{"base":"F","dimension":1,"ops":[]}"#,
            r#"{"base":"Fp","p":"4","dimension":1,"ops":[{"arity":2,"role":"product","entries":[]}]}"#,
            r#"{"base":"Q","dimension":1,"ops":[{"arity":2,"role":"product","multidegree":[2,1],"entries":[]}]}"#,
            r#"{"base":"Q","dimension":1,"ops":[{"arity":2,"role":"product","entries":[[0,0,"x"]]}]}"#,
            r#"{"base":"Q","dimension":1,"ops":[{"arity":2,"role":"product","entries":[[0,0,5,"1"]]}]}"#,
            r#"{"base":"Z","invariant_factors":["2","3"],"ops":[{"arity":2,"role":"product","entries":[[0,0,1,"1"]]}]}"#,
        ];
        for b in bad {
            assert!(parse_algebra(b).is_err(), "{b}");
        }
    }

    #[test]
    fn relations_file_normalizes() {
        let f = r#"{"base":"Z","generators":2,"relations":[["2","0"],["0","3"]],
                    "ops":[{"arity":2,"role":"product","entries":[]}]}"#;
        let LoadedAlgebra::Integral(a, Some(m)) = parse_algebra(f).unwrap() else {
            panic!()
        };
        assert_eq!(a.factors(), &[BigInt::from(6)]);
        let t = parse_integral_tuple(&a, Some(&m), r#"[["1","1"]]"#).unwrap();
        assert_eq!(t.len(), 1);
    }

    #[test]
    fn digest_detects_edits() {
        let alg = matrix_algebra(Field::prime(2).unwrap(), 2).unwrap();
        let c = crate::algebra::is_generating(&alg, &alg.basis(), false).unwrap();
        let cert = CertificateFile::generation(&alg, &c, None);
        assert!(cert.digest_ok());
        let back = CertificateFile::parse(&cert.to_json()).unwrap();
        assert_eq!(back, cert);
        let mut bad = cert.clone();
        bad.body["tuple"][0][0] = json!("0");
        assert!(!bad.digest_ok());
    }
}
