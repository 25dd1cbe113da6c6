//! Values of quantum minors, `D(μ,ζ)(e_ν) = (u_ζ, e_{ν_1} ⋯ e_{ν_n} u_μ)`,
//! computed by commuting `e`'s through monomials in the `f`'s applied to a
//! highest weight vector `u_λ`.
//!
//! States are kept in f-words that may be linearly dependent in `V(λ)`.
//! That is harmless: only the coefficient of the empty word is ever read,
//! and `(u_λ, f_{j_1} ⋯ f_{j_m} u_λ) = 0` for `m > 0` by weight.
//!
//! Divided powers are applied as plain powers and the product of the
//! quantum factorials is divided out exactly at the end.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::cartan::{CartanDatum, Weight, WeylWord};
use crate::error::{Error, Result};
use crate::laurent::Laurent;
use crate::rational::RationalQ;
use crate::weyl::{orbit_word, preceq, raise_to_dominant};

/// A pair of extremal weights `μ ⪯ ζ` in the orbit of a dominant `λ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MinorSpec {
    mu: Weight,
    zeta: Weight,
    lambda: Weight,
}

impl MinorSpec {
    /// Finds `λ` by raising `ζ` and checks `μ ⪯ ζ`.
    pub fn new(cartan: &CartanDatum, mu: Weight, zeta: Weight) -> Result<Self> {
        let (lambda, _) = raise_to_dominant(cartan, &zeta)?;
        Self::with_lambda(cartan, mu, zeta, lambda)
    }

    pub fn with_lambda(cartan: &CartanDatum, mu: Weight, zeta: Weight, lambda: Weight) -> Result<Self> {
        if !preceq(cartan, &mu, &zeta, &lambda)? {
            return Err(Error::PrecedenceViolation);
        }
        Ok(Self { mu, zeta, lambda })
    }

    /// `D(uλ, vλ)` for a dominant `λ`.
    pub fn from_words(cartan: &CartanDatum, u: &WeylWord, v: &WeylWord, lambda: &Weight) -> Result<Self> {
        Self::with_lambda(cartan, cartan.apply_word(u, lambda), cartan.apply_word(v, lambda), lambda.clone())
    }

    pub fn mu(&self) -> &Weight {
        &self.mu
    }

    pub fn zeta(&self) -> &Weight {
        &self.zeta
    }

    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    /// `β = ζ - μ`, so that the minor has weight `-β`.
    pub fn beta(&self) -> Vec<i64> {
        (&self.zeta - &self.mu).alpha().to_vec()
    }
}

/// `f_{a_1}^{(c_1)} ⋯ f_{a_n}^{(c_n)}` with `u_{wλ} = f_{a_1}^{(c_1)} ⋯ f_{a_n}^{(c_n)} u_λ`
/// for `w = s_{a_1} ⋯ s_{a_n}`; `c_k = ⟨h_{a_k}, s_{a_{k+1}} ⋯ s_{a_n} λ⟩`.
pub fn extremal_fword(cartan: &CartanDatum, lambda: &Weight, w: &WeylWord) -> Result<Vec<(usize, u32)>> {
    let mut out = Vec::with_capacity(w.len());
    let mut current = lambda.clone();
    for (step, &a) in w.letters().iter().enumerate().rev() {
        cartan.check_index(a)?;
        let c = cartan.pair(a, &current);
        if c < 0 {
            return Err(Error::NegativeExponent { step });
        }
        out.push((a, c as u32));
        current = cartan.simple_reflection(a, &current);
    }
    out.reverse();
    Ok(out)
}

/// Expands divided powers into plain letters, dropping zero exponents.
fn flatten(fword: &[(usize, u32)]) -> Vec<usize> {
    fword.iter().flat_map(|&(a, c)| core::iter::repeat_n(a, c as usize)).collect()
}

fn factorial_product(fword: &[(usize, u32)]) -> Laurent {
    fword.iter().fold(Laurent::one(), |acc, &(_, c)| &acc * &Laurent::quantum_factorial(c))
}

/// A linear combination of vectors `f_{w_0} ⋯ f_{w_{n-1}} u_λ`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FState {
    terms: BTreeMap<Vec<usize>, Laurent>,
}

impl FState {
    pub fn highest() -> Self {
        Self::from_word(Vec::new())
    }

    pub fn from_word(word: Vec<usize>) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(word, Laurent::one());
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Vec<usize>, Laurent> {
        &self.terms
    }

    /// `(u_λ, v)`: the coefficient of the empty word.
    pub fn top_coefficient(&self) -> Laurent {
        self.terms.get(&Vec::new()).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, word: Vec<usize>, c: Laurent) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(word.clone()).or_default();
        *entry += &c;
        if entry.is_zero() {
            self.terms.remove(&word);
        }
    }
}

/// `e_i` on a state in `V(λ)`. Moving `e_i` past `f_{w_k}` with `w_k = i`
/// leaves `[⟨h_i, λ - Σ_{m>k} α_{w_m}⟩]_q`; `e_i u_λ = 0`.
pub fn apply_e(cartan: &CartanDatum, i: usize, st: &FState, lambda: &Weight) -> FState {
    let base = cartan.pair(i, lambda);
    let mut out = FState::default();
    for (word, coeff) in &st.terms {
        let mut below = base;
        for k in (0..word.len()).rev() {
            if word[k] == i {
                let mut shorter = word.clone();
                shorter.remove(k);
                out.add_term(shorter, coeff * &Laurent::quantum_int(below));
            }
            below -= cartan.entry(i, word[k]);
        }
    }
    out
}

/// Precomputed data for evaluating one minor on many words.
struct Evaluator<'a> {
    cartan: &'a CartanDatum,
    lambda: &'a Weight,
    /// letters of `φ(G)` in the order they act
    mirror: Vec<usize>,
    denominator: Laurent,
}

impl<'a> Evaluator<'a> {
    fn new(cartan: &'a CartanDatum, spec: &'a MinorSpec) -> Result<(Self, FState)> {
        let w_mu = orbit_word(cartan, &spec.mu, &spec.lambda)?;
        let w_zeta = orbit_word(cartan, &spec.zeta, &spec.lambda)?;
        let f = extremal_fword(cartan, &spec.lambda, &w_mu)?;
        let g = extremal_fword(cartan, &spec.lambda, &w_zeta)?;
        let denominator = &factorial_product(&f) * &factorial_product(&g);
        let ev = Self { cartan, lambda: &spec.lambda, mirror: flatten(&g), denominator };
        Ok((ev, FState::from_word(flatten(&f))))
    }

    fn finish(&self, st: &FState) -> Result<Laurent> {
        let mut st = st.clone();
        for &b in &self.mirror {
            if st.is_zero() {
                return Ok(Laurent::zero());
            }
            st = apply_e(self.cartan, b, &st, self.lambda);
        }
        let top = st.top_coefficient();
        RationalQ::new(top, self.denominator.clone()).and_then(|r| r.to_laurent()).ok_or(Error::NonLaurentResult)
    }
}

/// `(u_ζ, e_{ν_1} ⋯ e_{ν_n} u_μ)`.
pub fn evaluate_minor(cartan: &CartanDatum, spec: &MinorSpec, nu: &[usize]) -> Result<Laurent> {
    for &a in nu {
        cartan.check_index(a)?;
    }
    let mut content = alloc::vec![0i64; cartan.rank()];
    for &a in nu {
        content[a] += 1;
    }
    if content != spec.beta() {
        return Err(Error::WeightMismatch);
    }
    let (ev, mut st) = Evaluator::new(cartan, spec)?;
    for &a in nu.iter().rev() {
        st = apply_e(cartan, a, &st, &spec.lambda);
    }
    ev.finish(&st)
}

/// All nonzero values of the minor, over the words of content `ζ - μ`.
pub fn minor_table(cartan: &CartanDatum, spec: &MinorSpec) -> Result<BTreeMap<Vec<usize>, Laurent>> {
    let beta = spec.beta();
    if beta.iter().any(|&c| c < 0) {
        return Err(Error::PrecedenceViolation);
    }
    let (ev, start) = Evaluator::new(cartan, spec)?;
    let mut out = BTreeMap::new();
    let mut suffix = Vec::new();
    let mut remaining = beta;
    tabulate(&ev, &start, &mut remaining, &mut suffix, &mut out)?;
    Ok(out)
}

/// Depth-first over words built from the right, sharing work between words
/// with a common suffix. `suffix` holds the letters in reverse.
fn tabulate(
    ev: &Evaluator<'_>,
    st: &FState,
    remaining: &mut [i64],
    suffix: &mut Vec<usize>,
    out: &mut BTreeMap<Vec<usize>, Laurent>,
) -> Result<()> {
    if st.is_zero() {
        return Ok(());
    }
    if remaining.iter().all(|&c| c == 0) {
        let value = ev.finish(st)?;
        if !value.is_zero() {
            out.insert(suffix.iter().rev().copied().collect(), value);
        }
        return Ok(());
    }
    for a in 0..remaining.len() {
        if remaining[a] == 0 {
            continue;
        }
        remaining[a] -= 1;
        suffix.push(a);
        let next = apply_e(ev.cartan, a, st, ev.lambda);
        tabulate(ev, &next, remaining, suffix, out)?;
        suffix.pop();
        remaining[a] += 1;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn a2() -> CartanDatum {
        CartanDatum::by_name("A2").unwrap()
    }

    #[test]
    fn extremal_words() {
        let c = a2();
        let w = WeylWord::new(vec![0, 1]);
        assert_eq!(extremal_fword(&c, &c.fundamental(1), &w).unwrap(), vec![(0, 1), (1, 1)]);
        assert!(extremal_fword(&c, &c.fundamental(0), &WeylWord::empty()).unwrap().is_empty());
        let w0 = WeylWord::new(vec![0, 1, 0]);
        assert_eq!(extremal_fword(&c, &c.fundamental(0), &w0).unwrap(), vec![(0, 0), (1, 1), (0, 1)]);
        assert_eq!(flatten(&extremal_fword(&c, &c.fundamental(0), &w0).unwrap()), vec![1, 0]);
        let bad = WeylWord::new(vec![0, 0]);
        assert_eq!(extremal_fword(&c, &c.fundamental(0), &bad), Err(Error::NegativeExponent { step: 0 }));
    }

    #[test]
    fn e_action_examples() {
        let c = a2();
        let w1 = c.fundamental(0);
        assert_eq!(apply_e(&c, 0, &FState::from_word(vec![0]), &w1), FState::highest());
        assert!(apply_e(&c, 0, &FState::highest(), &w1).is_zero());
        let w2 = c.fundamental(1);
        assert_eq!(apply_e(&c, 0, &FState::from_word(vec![0, 1]), &w2), FState::from_word(vec![1]));
    }

    #[test]
    fn minor_values() {
        let c = a2();
        let w1 = c.fundamental(0);
        let d = MinorSpec::new(&c, c.simple_reflection(0, &w1), w1.clone()).unwrap();
        assert_eq!(evaluate_minor(&c, &d, &[0]).unwrap(), Laurent::one());
        let unit = MinorSpec::new(&c, w1.clone(), w1.clone()).unwrap();
        assert_eq!(evaluate_minor(&c, &unit, &[]).unwrap(), Laurent::one());

        let w2 = c.fundamental(1);
        let mu = c.apply_word(&WeylWord::new(vec![0, 1]), &w2);
        let d = MinorSpec::new(&c, mu, w2).unwrap();
        assert_eq!(evaluate_minor(&c, &d, &[1, 0]).unwrap(), Laurent::one());
        assert_eq!(evaluate_minor(&c, &d, &[0, 1]).unwrap(), Laurent::zero());
        assert_eq!(evaluate_minor(&c, &d, &[0]), Err(Error::WeightMismatch));
    }

    #[test]
    fn precedence_is_checked() {
        let c = a2();
        let w1 = c.fundamental(0);
        let s1w1 = c.simple_reflection(0, &w1);
        assert_eq!(MinorSpec::new(&c, w1, s1w1), Err(Error::PrecedenceViolation));
    }

    #[test]
    fn divided_powers_cancel() {
        // D(s_1 λ, λ) with ⟨h_1, λ⟩ = 2 is supported on (1,1) with value [2]
        let c = a2();
        let lambda = &c.fundamental(0) + &c.fundamental(0);
        let d = MinorSpec::new(&c, c.simple_reflection(0, &lambda), lambda).unwrap();
        let table = minor_table(&c, &d).unwrap();
        assert_eq!(table.len(), 1);
        assert_eq!(table[&vec![0, 0]], Laurent::quantum_int(2));
    }
}
