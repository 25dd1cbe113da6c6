//! JSON shapes of the public interfaces. Indices are 1-based here and
//! 0-based everywhere in `qck-core`.

use std::collections::BTreeMap;

use qck_core::torus::HistoryEntry;
use qck_core::verify::{Value, VerificationReport, Witness};
use qck_core::{AqnElement, CartanDatum, Error, Laurent, QuantumSeed, TorusElement, Weight};
use serde::{Deserialize, Serialize};
use serde_json::json;

/// A Cartan datum given by name (`"A2"`) or by its matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CartanInput {
    Name(String),
    Matrix { matrix: Vec<Vec<i64>> },
}

impl CartanInput {
    pub fn resolve(&self) -> Result<CartanDatum, Error> {
        match self {
            CartanInput::Name(n) => CartanDatum::by_name(n),
            CartanInput::Matrix { matrix } => CartanDatum::new(matrix.clone()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanJson {
    pub matrix: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightJson {
    pub phi: Vec<i64>,
    pub alpha: Vec<i64>,
}

impl From<&Weight> for WeightJson {
    fn from(w: &Weight) -> Self {
        Self { phi: w.phi().to_vec(), alpha: w.alpha().to_vec() }
    }
}

impl From<&WeightJson> for Weight {
    fn from(w: &WeightJson) -> Self {
        Weight::new(w.phi.clone(), w.alpha.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeedJson {
    pub cartan: CartanJson,
    pub word: Vec<usize>,
    #[serde(rename = "L")]
    pub l: Vec<Vec<i64>>,
    /// Rows indexed by all of `1..=K`, columns by `exchangeable`.
    #[serde(rename = "B")]
    pub b: Vec<Vec<i64>>,
    #[serde(rename = "D")]
    pub d: Vec<WeightJson>,
    pub exchangeable: Vec<usize>,
    pub frozen: Vec<usize>,
}

/// A seed together with the data it was built from.
#[derive(Clone, Debug)]
pub struct SeedData {
    pub cartan: CartanDatum,
    /// 0-based.
    pub word: Vec<usize>,
    pub seed: QuantumSeed,
}

pub fn seed_to_json(data: &SeedData) -> SeedJson {
    let s = &data.seed;
    SeedJson {
        cartan: CartanJson { matrix: data.cartan.matrix().to_vec() },
        word: data.word.iter().map(|a| a + 1).collect(),
        l: s.l.clone(),
        b: s.b.clone(),
        d: s.d.iter().map(WeightJson::from).collect(),
        exchangeable: s.exchangeable.iter().map(|k| k + 1).collect(),
        frozen: s.frozen().iter().map(|k| k + 1).collect(),
    }
}

fn zero_based(v: &[usize], bound: usize, what: &str) -> Result<Vec<usize>, String> {
    v.iter()
        .map(|&x| if x == 0 || x > bound { Err(format!("{} index {} out of range 1..={}", what, x, bound)) } else { Ok(x - 1) })
        .collect()
}

pub fn seed_from_json(j: &SeedJson) -> Result<SeedData, String> {
    let cartan = CartanDatum::new(j.cartan.matrix.clone()).map_err(|e| e.to_string())?;
    let n = j.l.len();
    let word = zero_based(&j.word, cartan.rank(), "letter")?;
    let exchangeable = zero_based(&j.exchangeable, n, "exchangeable")?;
    if word.len() != n || j.l.iter().any(|r| r.len() != n) {
        return Err(format!("L must be {}x{}", word.len(), word.len()));
    }
    if j.b.len() != n || j.b.iter().any(|r| r.len() != exchangeable.len()) {
        return Err(format!("B must be {}x{}", n, exchangeable.len()));
    }
    if j.d.len() != n || j.d.iter().any(|w| w.phi.len() != cartan.rank() || w.alpha.len() != cartan.rank()) {
        return Err(format!("D must list {} weights of rank {}", n, cartan.rank()));
    }
    let seed = QuantumSeed { l: j.l.clone(), b: j.b.clone(), d: j.d.iter().map(Weight::from).collect(), exchangeable };
    Ok(SeedData { cartan, word, seed })
}

pub fn laurent_json(p: &Laurent) -> Vec<(i64, i64)> {
    p.terms().collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorusTerm {
    pub exp: Vec<i64>,
    pub coef: Vec<(i64, i64)>,
}

pub fn torus_to_json(x: &TorusElement) -> Vec<TorusTerm> {
    x.terms().iter().map(|(e, c)| TorusTerm { exp: e.clone(), coef: laurent_json(c) }).collect()
}

pub fn torus_from_json(terms: &[TorusTerm]) -> TorusElement {
    TorusElement::from_terms(terms.iter().map(|t| (t.exp.clone(), Laurent::from_terms(t.coef.iter().copied()))))
}

pub fn aqn_to_json(x: &AqnElement) -> serde_json::Value {
    let values: Vec<_> = x
        .values()
        .iter()
        .map(|(w, c)| json!({"word": w.iter().map(|a| a + 1).collect::<Vec<_>>(), "coef": laurent_json(c)}))
        .collect();
    json!({"beta": x.beta(), "values": values})
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HistoryJson {
    pub k: usize,
    pub seed: SeedJson,
    pub variable: Vec<TorusTerm>,
}

pub fn history_to_json(cartan: &CartanDatum, word: &[usize], h: &HistoryEntry) -> HistoryJson {
    let data = SeedData { cartan: cartan.clone(), word: word.to_vec(), seed: h.seed.clone() };
    HistoryJson { k: h.k + 1, seed: seed_to_json(&data), variable: torus_to_json(&h.variable) }
}

fn value_json(v: &Value) -> serde_json::Value {
    match v {
        Value::Bool(b) => json!(b),
        Value::Int(i) => json!(i),
        Value::Ints(v) => json!(v),
        Value::Text(t) => json!(t),
        Value::Poly(p) => json!(laurent_json(p)),
        Value::Weight(w) => json!(WeightJson::from(w)),
        Value::Element(e) => aqn_to_json(e),
    }
}

fn witness_json(w: &Witness) -> serde_json::Value {
    json!({
        "word": w.word.iter().map(|a| a + 1).collect::<Vec<_>>(),
        "left": laurent_json(&w.left),
        "right": laurent_json(&w.right),
        "note": w.note,
    })
}

/// Report parameters and details are reported as given by the verifier,
/// except that index-valued entries are shifted to 1-based.
pub fn report_json(r: &VerificationReport) -> serde_json::Value {
    let shift = |k: &str, v: &Value| match (k, v) {
        ("i" | "j" | "k", Value::Int(x)) => json!(x + 1),
        ("u" | "v" | "x", Value::Ints(xs)) => json!(xs.iter().map(|a| a + 1).collect::<Vec<_>>()),
        _ => value_json(v),
    };
    let params: BTreeMap<&str, serde_json::Value> = r.params.iter().map(|(k, v)| (k.as_str(), shift(k, v))).collect();
    let details: BTreeMap<&str, serde_json::Value> = r.details.iter().map(|(k, v)| (k.as_str(), value_json(v))).collect();
    json!({
        "check": r.check,
        "params": params,
        "pass": r.pass,
        "details": details,
        "witness": r.witness.as_ref().map(witness_json),
    })
}

/// Stable error name used by the HTTP API.
pub fn error_code(e: &Error) -> &'static str {
    match e {
        Error::UnknownIndex { .. } => "UnknownIndex",
        Error::InvalidCartan(_) => "InvalidCartan",
        Error::BothOutsideRootLattice => "BothOutsideRootLattice",
        Error::DimensionMismatch { .. } => "DimensionMismatch",
        Error::NonReducedWord(_) => "NonReducedWord",
        Error::NotInOrbit => "NotInOrbit",
        Error::NotDominant => "NotDominant",
        Error::PrecedenceViolation => "PrecedenceViolation",
        Error::NegativeExponent { .. } => "NegativeExponent",
        Error::WeightMismatch => "WeightMismatch",
        Error::NonLaurentResult => "NonLaurentResult",
        Error::ZeroElement => "ZeroElement",
        Error::HypothesisViolation(_) => "HypothesisViolation",
        Error::NonIntegralShift { .. } => "NonIntegralShift",
        Error::FrozenDirection(_) => "FrozenDirection",
        Error::ExchangeInconsistent(_) => "ExchangeInconsistent",
        Error::GroupTooLarge(_) => "GroupTooLarge",
        Error::EmptyHistory => "EmptyHistory",
    }
}

/// Error text with indices in 1-based form.
pub fn error_message(e: &Error) -> String {
    match e {
        Error::UnknownIndex { index, rank } => format!("unknown index {} (valid: 1..={})", index + 1, rank),
        Error::NonReducedWord(w) => format!("word not reduced: {:?}", w.iter().map(|a| a + 1).collect::<Vec<_>>()),
        Error::FrozenDirection(k) => format!("direction {} is frozen", k + 1),
        Error::ExchangeInconsistent(k) => format!("exchange relation check failed in direction {}", k + 1),
        other => other.to_string(),
    }
}
