//! Operations shared by the command line and the HTTP service.

use qck_core::torus::MutationStep;
use qck_core::verify::{
    verify_commutation, verify_delta_ledger, verify_exchange, verify_seed, verify_tsystem, ExchangeOptions, SeedModel,
    VerificationReport,
};
use qck_core::{Error, MutationState, QuantumSeed, ReducedWordData, WeylWord};
use serde::{Deserialize, Serialize};

use crate::json::{error_code, error_message, seed_from_json, seed_to_json, torus_to_json, CartanInput, SeedData, SeedJson, TorusTerm};

/// Invalid input, reported as exit code 2 or HTTP 400.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{message}")]
pub struct InputError {
    pub code: String,
    pub message: String,
}

impl InputError {
    pub fn new(code: &str, message: impl Into<String>) -> Self {
        Self { code: code.into(), message: message.into() }
    }
}

impl From<Error> for InputError {
    fn from(e: Error) -> Self {
        Self::new(error_code(&e), error_message(&e))
    }
}

pub type OpResult<T> = Result<T, InputError>;

fn one_based(xs: &[usize], what: &str) -> OpResult<Vec<usize>> {
    xs.iter()
        .map(|&x| x.checked_sub(1).ok_or_else(|| InputError::new("UnknownIndex", format!("{} indices start at 1", what))))
        .collect()
}

/// The initial seed of `word` (1-based letters).
pub fn build_seed(cartan: &CartanInput, word: &[usize]) -> OpResult<SeedData> {
    let cartan = cartan.resolve()?;
    let word = one_based(word, "letter")?;
    let rwd = ReducedWordData::new(&cartan, &word)?;
    let seed = QuantumSeed::from_word(&cartan, &rwd);
    Ok(SeedData { cartan, word, seed })
}

pub fn parse_seed(j: &SeedJson) -> OpResult<SeedData> {
    seed_from_json(j).map_err(|m| InputError::new("InvalidSeed", m))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepJson {
    pub k: usize,
    pub m_k: i64,
    pub m_k_prime: i64,
    pub exchanged_variable: Vec<TorusTerm>,
}

pub fn step_json(s: &MutationStep) -> StepJson {
    StepJson { k: s.k + 1, m_k: s.m_k, m_k_prime: s.m_k_prime, exchanged_variable: torus_to_json(&s.exchanged) }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MutationRun {
    pub seed: SeedJson,
    pub steps: Vec<StepJson>,
    pub variables: Vec<Vec<TorusTerm>>,
}

/// Mutates along `sequence` (1-based), starting from the cluster of `data`.
pub fn run_sequence(data: &SeedData, sequence: &[usize]) -> OpResult<MutationRun> {
    let mut state = MutationState::new(data.seed.clone());
    let mut steps = Vec::new();
    for (n, &k) in sequence.iter().enumerate() {
        let k0 = k.checked_sub(1).filter(|&k0| k0 < state.seed().size()).ok_or_else(|| {
            InputError::new("UnknownIndex", format!("step {}: index {} out of range 1..={}", n + 1, k, state.seed().size()))
        })?;
        let step = state.mutate(&data.cartan, k0).map_err(|e| {
            let err = InputError::from(e);
            InputError::new(&err.code, format!("step {}: {}", n + 1, err.message))
        })?;
        steps.push(step_json(&step));
    }
    let seed = SeedData { cartan: data.cartan.clone(), word: data.word.clone(), seed: state.seed().clone() };
    Ok(MutationRun {
        seed: seed_to_json(&seed),
        steps,
        variables: state.variables().iter().map(torus_to_json).collect(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    Commutation,
    Tsystem,
    Exchange,
    Delta,
    SeedConditions,
}

/// Parameters of a verification; which ones are needed depends on the check.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckParams {
    pub seed: Option<SeedJson>,
    pub cartan: Option<CartanInput>,
    pub word: Option<Vec<usize>>,
    pub k: Option<usize>,
    pub pair: Option<(usize, usize)>,
    pub u: Option<Vec<usize>>,
    pub v: Option<Vec<usize>>,
    pub x: Option<Vec<usize>>,
    pub i: Option<usize>,
}

fn missing(what: &str) -> InputError {
    InputError::new("MissingParameter", format!("missing parameter {}", what))
}

impl CheckParams {
    fn seed_data(&self) -> OpResult<SeedData> {
        match (&self.seed, &self.cartan, &self.word) {
            (Some(s), _, _) => parse_seed(s),
            (None, Some(c), Some(w)) => build_seed(c, w),
            _ => Err(missing("seed (or cartan and word)")),
        }
    }

    fn cartan(&self) -> OpResult<qck_core::CartanDatum> {
        match (&self.cartan, &self.seed) {
            (Some(c), _) => Ok(c.resolve()?),
            (None, Some(s)) => Ok(parse_seed(s)?.cartan),
            _ => Err(missing("cartan")),
        }
    }

    fn model(&self) -> OpResult<SeedModel> {
        let d = self.seed_data()?;
        let rwd = ReducedWordData::new(&d.cartan, &d.word)?;
        Ok(SeedModel::with_seed(d.cartan, rwd, d.seed)?)
    }

    fn index(&self, v: Option<usize>, what: &str) -> OpResult<usize> {
        v.ok_or_else(|| missing(what))?.checked_sub(1).ok_or_else(|| InputError::new("UnknownIndex", format!("{} starts at 1", what)))
    }

    fn word(&self, v: &Option<Vec<usize>>, what: &str) -> OpResult<WeylWord> {
        Ok(WeylWord::new(one_based(v.as_ref().ok_or_else(|| missing(what))?, what)?))
    }
}

pub fn run_check(check: Check, p: &CheckParams) -> OpResult<VerificationReport> {
    let r = match check {
        Check::Commutation => {
            let (i, j) = p.pair.ok_or_else(|| missing("pair"))?;
            verify_commutation(&p.model()?, p.index(Some(i), "pair")?, p.index(Some(j), "pair")?)?
        }
        Check::Exchange => verify_exchange(&p.model()?, p.index(p.k, "k")?, ExchangeOptions::default())?,
        Check::SeedConditions => {
            let d = p.seed_data()?;
            verify_seed(&d.cartan, &d.seed)
        }
        Check::Tsystem => verify_tsystem(&p.cartan()?, &p.word(&p.u, "u")?, &p.word(&p.v, "v")?, p.index(p.i, "i")?)?,
        Check::Delta => verify_delta_ledger(&p.cartan()?, &p.word(&p.x, "x")?, p.index(p.i, "i")?)?,
    };
    Ok(r)
}
