//! Based quantum tori over `Z[v^{±1}]`, `v = q^{1/2}`, and seed mutation.
//!
//! Cluster variables are stored in the coordinates of the initial seed.
//! A mutated variable is obtained by writing the exchange binomial in the
//! current cluster, expanding it in initial coordinates and left-dividing
//! by the old variable. The division is exact or it fails; there is no
//! skew field.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::cartan::{CartanDatum, Weight};
use crate::error::{Error, Result};
use crate::laurent::Laurent;
use crate::seed::QuantumSeed;

/// `Σ c_a X^a` with `c_a ∈ Z[v^{±1}]`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct TorusElement {
    terms: BTreeMap<Vec<i64>, Laurent>,
}

impl TorusElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `c X^a`.
    pub fn monomial(exp: Vec<i64>, c: Laurent) -> Self {
        let mut out = Self::zero();
        out.add_term(exp, &c);
        out
    }

    /// `X^{e_i}` in a torus of rank `n`.
    pub fn generator(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Self::monomial(e, Laurent::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (Vec<i64>, Laurent)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (e, c) in terms {
            out.add_term(e, &c);
        }
        out
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i64>, Laurent> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, exp: Vec<i64>, c: &Laurent) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp.clone()).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&Laurent::constant(-1)))
    }

    pub fn scale(&self, c: &Laurent) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, x)| (e.clone(), x * c)))
    }

    /// Multiplication by `v^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self { terms: self.terms.iter().map(|(e, c)| (e.clone(), c.shift(k))).collect() }
    }

    /// The lexicographically largest exponent and its coefficient.
    pub fn leading(&self) -> Option<(&Vec<i64>, &Laurent)> {
        self.terms.iter().next_back()
    }

    /// Per-coordinate minimum and maximum of the support.
    fn bounding_box(&self) -> Option<(Vec<i64>, Vec<i64>)> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let (mut lo, mut hi) = (first.clone(), first.clone());
        for e in it {
            for (i, &x) in e.iter().enumerate() {
                lo[i] = lo[i].min(x);
                hi[i] = hi[i].max(x);
            }
        }
        Some((lo, hi))
    }

    /// True if every exponent is nonnegative in all coordinates other than `allowed`.
    pub fn denominators_within(&self, allowed: &[usize]) -> bool {
        self.terms.keys().all(|e| e.iter().enumerate().all(|(i, &x)| x >= 0 || allowed.contains(&i)))
    }
}

impl fmt::Debug for TorusElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({})X^{:?}", c.display_in("v"), e)?;
        }
        Ok(())
    }
}

fn check_dims(l: &[Vec<i64>], x: &TorusElement) -> Result<()> {
    for e in x.terms.keys() {
        if e.len() != l.len() {
            return Err(Error::DimensionMismatch { expected: l.len(), got: e.len() });
        }
    }
    Ok(())
}

fn twist(l: &[Vec<i64>], a: &[i64], b: &[i64]) -> i64 {
    let mut s = 0;
    for (i, &ai) in a.iter().enumerate() {
        if ai != 0 {
            for (j, &bj) in b.iter().enumerate() {
                s += ai * bj * l[i][j];
            }
        }
    }
    s
}

/// `X^a X^b = v^{Σ a_i b_j L_{i,j}} X^{a+b}`, extended bilinearly.
pub fn torus_mul(x: &TorusElement, y: &TorusElement, l: &[Vec<i64>]) -> Result<TorusElement> {
    check_dims(l, x)?;
    check_dims(l, y)?;
    let mut out = TorusElement::zero();
    for (a, ca) in &x.terms {
        for (b, cb) in &y.terms {
            let e: Vec<i64> = a.iter().zip(b).map(|(s, t)| s + t).collect();
            out.add_term(e, &(ca * cb).shift(twist(l, a, b)));
        }
    }
    Ok(out)
}

/// `T` with `d T = p`, by lexicographic leading terms. Fails unless the
/// division is exact.
pub fn left_divide(d: &TorusElement, p: &TorusElement, l: &[Vec<i64>]) -> Option<TorusElement> {
    let (d_exp, d_coef) = d.leading()?;
    let (d_exp, d_coef) = (d_exp.clone(), d_coef.clone());
    let Some((p_lo, p_hi)) = p.bounding_box() else { return Some(TorusElement::zero()) };
    let (d_lo, d_hi) = d.bounding_box()?;
    let lo: Vec<i64> = p_lo.iter().zip(&d_lo).map(|(a, b)| a - b).collect();
    let hi: Vec<i64> = p_hi.iter().zip(&d_hi).map(|(a, b)| a - b).collect();
    let mut rest = p.clone();
    let mut quotient = TorusElement::zero();
    while let Some((r_exp, r_coef)) = rest.leading() {
        let t: Vec<i64> = r_exp.iter().zip(&d_exp).map(|(a, b)| a - b).collect();
        if t.iter().enumerate().any(|(i, &x)| x < lo[i] || x > hi[i]) {
            return None;
        }
        let s = r_coef.div_exact(&d_coef)?.shift(-twist(l, &d_exp, &t));
        let term = TorusElement::monomial(t, s);
        rest = rest.sub(&torus_mul(d, &term, l).ok()?);
        quotient = quotient.add(&term);
    }
    Some(quotient)
}

/// Matrix mutation of `B̃` (rows `K`, columns `exchangeable`) in direction `k`.
pub fn mutate_b(b: &[Vec<i64>], exchangeable: &[usize], k: usize) -> Result<Vec<Vec<i64>>> {
    let ck = exchangeable.iter().position(|&e| e == k).ok_or(Error::FrozenDirection(k))?;
    let mut out = b.to_vec();
    for (i, row) in out.iter_mut().enumerate() {
        for c in 0..exchangeable.len() {
            row[c] = if i == k || c == ck {
                -b[i][c]
            } else {
                b[i][c] + b[i][ck].signum() * (b[i][ck] * b[k][c]).max(0)
            };
        }
    }
    Ok(out)
}

/// Sign choice in the conjugation formula for `μ_k(L)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// `μ_k(L) = Eᵀ L E`, with `E` the identity except in column `k`:
/// `E_{k,k} = -1` and `E_{i,k} = max(0, ∓b_{i,k})` for the sign `±`.
pub fn mutate_l(l: &[Vec<i64>], b: &[Vec<i64>], exchangeable: &[usize], k: usize, sign: Sign) -> Result<Vec<Vec<i64>>> {
    let ck = exchangeable.iter().position(|&e| e == k).ok_or(Error::FrozenDirection(k))?;
    let n = l.len();
    let mut e = vec![vec![0i64; n]; n];
    for (i, row) in e.iter_mut().enumerate() {
        row[i] = 1;
        if i == k {
            row[k] = -1;
        } else {
            let bik = b[i][ck];
            row[k] = match sign {
                Sign::Plus => (-bik).max(0),
                Sign::Minus => bik.max(0),
            };
        }
    }
    let mut out = vec![vec![0i64; n]; n];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            let mut s = 0;
            for a in 0..n {
                if e[a][i] == 0 {
                    continue;
                }
                for bb in 0..n {
                    s += e[a][i] * l[a][bb] * e[bb][j];
                }
            }
            *cell = s;
        }
    }
    Ok(out)
}

/// `μ_k(D)`: only entry `k` changes, to `-d_k + Σ_{b_{i,k}>0} b_{i,k} d_i`.
pub fn mutate_d(d: &[Weight], b: &[Vec<i64>], exchangeable: &[usize], k: usize) -> Result<Vec<Weight>> {
    let ck = exchangeable.iter().position(|&e| e == k).ok_or(Error::FrozenDirection(k))?;
    let mut out = d.to_vec();
    let mut new = -&d[k];
    for (i, row) in b.iter().enumerate() {
        if row[ck] > 0 {
            new = &new + &(row[ck] * &d[i]);
        }
    }
    out[k] = new;
    Ok(out)
}

/// `μ_k` on `(L, B̃, D)`.
pub fn mutate_quantum_seed(seed: &QuantumSeed, k: usize) -> Result<QuantumSeed> {
    Ok(QuantumSeed {
        l: mutate_l(&seed.l, &seed.b, &seed.exchangeable, k, Sign::Plus)?,
        b: mutate_b(&seed.b, &seed.exchangeable, k)?,
        d: mutate_d(&seed.d, &seed.b, &seed.exchangeable, k)?,
        exchangeable: seed.exchangeable.clone(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HistoryEntry {
    pub k: usize,
    pub seed: QuantumSeed,
    pub variable: TorusElement,
}

/// The data produced by one mutation step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MutationStep {
    pub k: usize,
    pub m_k: i64,
    pub m_k_prime: i64,
    pub exchanged: TorusElement,
}

/// A seed with its cluster in initial coordinates, and an undo stack.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MutationState {
    initial_l: Vec<Vec<i64>>,
    seed: QuantumSeed,
    variables: Vec<TorusElement>,
    history: Vec<HistoryEntry>,
}

impl MutationState {
    pub fn new(seed: QuantumSeed) -> Self {
        let n = seed.size();
        Self {
            initial_l: seed.l.clone(),
            variables: (0..n).map(|i| TorusElement::generator(n, i)).collect(),
            seed,
            history: Vec::new(),
        }
    }

    /// Reassembles a state from stored parts, e.g. after deserialisation.
    pub fn from_parts(initial_l: Vec<Vec<i64>>, seed: QuantumSeed, variables: Vec<TorusElement>, history: Vec<HistoryEntry>) -> Result<Self> {
        if variables.len() != seed.size() || initial_l.len() != seed.size() {
            return Err(Error::DimensionMismatch { expected: seed.size(), got: variables.len() });
        }
        Ok(Self { initial_l, seed, variables, history })
    }

    pub fn seed(&self) -> &QuantumSeed {
        &self.seed
    }

    pub fn initial_l(&self) -> &[Vec<i64>] {
        &self.initial_l
    }

    pub fn variables(&self) -> &[TorusElement] {
        &self.variables
    }

    pub fn history(&self) -> &[HistoryEntry] {
        &self.history
    }

    /// The based monomial `v^{Σ_{i>j} c_i c_j L'_{i,j}} x_1^{c_1} ⋯ x_n^{c_n}` in the current cluster.
    fn based_monomial(&self, c: &[i64]) -> Result<TorusElement> {
        let n = c.len();
        let mut shift = 0;
        for i in 0..n {
            for j in 0..i {
                shift += c[i] * c[j] * self.seed.l[i][j];
            }
        }
        let mut out = TorusElement::monomial(vec![0; n], Laurent::one());
        for (i, &ci) in c.iter().enumerate() {
            for _ in 0..ci {
                out = torus_mul(&out, &self.variables[i], &self.initial_l)?;
            }
        }
        Ok(out.shift(shift))
    }

    /// `x_k x'_k = v^{L'_k · c_+} X^{c_+} + v^{L'_k · c_-} X^{c_-}`, with
    /// `c_± = [±b_k]_+` and `X^c` based in the current cluster.
    pub fn exchange_binomial(&self, k: usize) -> Result<TorusElement> {
        let col = self.seed.b_col(k)?;
        let mut out = TorusElement::zero();
        for sign in [1, -1] {
            let c: Vec<i64> = col.iter().map(|&b| (sign * b).max(0)).collect();
            let e: i64 = c.iter().zip(&self.seed.l[k]).map(|(ci, li)| ci * li).sum();
            out = out.add(&self.based_monomial(&c)?.shift(e));
        }
        Ok(out)
    }

    /// `x'_k` in initial coordinates.
    pub fn exchange_variable(&self, k: usize) -> Result<TorusElement> {
        let rhs = self.exchange_binomial(k)?;
        let xk = &self.variables[k];
        let new = left_divide(xk, &rhs, &self.initial_l).ok_or(Error::ExchangeInconsistent(k))?;
        if torus_mul(xk, &new, &self.initial_l)? != rhs {
            return Err(Error::ExchangeInconsistent(k));
        }
        Ok(new)
    }

    /// Mutates in direction `k`, updating `L`, `B̃`, `D` and the cluster together.
    pub fn mutate(&mut self, cartan: &CartanDatum, k: usize) -> Result<MutationStep> {
        let (m_k, m_k_prime) = self.seed.grading_shifts(cartan, k)?;
        let exchanged = self.exchange_variable(k)?;
        let seed = mutate_quantum_seed(&self.seed, k)?;
        let old_seed = core::mem::replace(&mut self.seed, seed);
        let old_var = core::mem::replace(&mut self.variables[k], exchanged.clone());
        self.history.push(HistoryEntry { k, seed: old_seed, variable: old_var });
        Ok(MutationStep { k, m_k, m_k_prime, exchanged })
    }

    /// Reverts the last mutation.
    pub fn undo(&mut self) -> Result<usize> {
        let entry = self.history.pop().ok_or(Error::EmptyHistory)?;
        self.seed = entry.seed;
        self.variables[entry.k] = entry.variable;
        Ok(entry.k)
    }

    /// `x_i x_j = q^{L'_{i,j}} x_j x_i` for all current variables; the first
    /// failing pair otherwise.
    pub fn check_commutation(&self) -> Result<Option<(usize, usize)>> {
        let n = self.variables.len();
        for i in 0..n {
            for j in i + 1..n {
                let a = torus_mul(&self.variables[i], &self.variables[j], &self.initial_l)?;
                let b = torus_mul(&self.variables[j], &self.variables[i], &self.initial_l)?;
                if a != b.shift(2 * self.seed.l[i][j]) {
                    return Ok(Some((i, j)));
                }
            }
        }
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seed::ReducedWordData;

    fn a2_seed() -> (CartanDatum, QuantumSeed) {
        let c = CartanDatum::by_name("A2").unwrap();
        let r = ReducedWordData::new(&c, &[0, 1, 0]).unwrap();
        let s = QuantumSeed::from_word(&c, &r);
        (c, s)
    }

    fn mono(e: &[i64], v: i64) -> TorusElement {
        TorusElement::monomial(e.to_vec(), Laurent::monomial(v, 1))
    }

    #[test]
    fn monomial_products() {
        let (_, s) = a2_seed();
        let x1 = TorusElement::generator(3, 0);
        let x2 = TorusElement::generator(3, 1);
        assert_eq!(torus_mul(&x1, &x2, &s.l).unwrap(), mono(&[1, 1, 0], -1));
        let one = mono(&[0, 0, 0], 0);
        assert_eq!(torus_mul(&one, &x2, &s.l).unwrap(), x2);
        assert_eq!(torus_mul(&x1, &x1, &s.l).unwrap(), mono(&[2, 0, 0], 0));
        let bad = TorusElement::generator(2, 0);
        assert!(matches!(torus_mul(&bad, &x1, &s.l), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn a2_mutation() {
        let (c, s) = a2_seed();
        assert_eq!(mutate_b(&s.b, &s.exchangeable, 0).unwrap(), vec![vec![0], vec![1], vec![-1]]);
        let mut st = MutationState::new(s.clone());
        let step = st.mutate(&c, 0).unwrap();
        assert_eq!(step.exchanged, mono(&[-1, 0, 1], 0).add(&mono(&[-1, 1, 0], 0)));
        assert_eq!((step.m_k, step.m_k_prime), (0, 0));
        assert_eq!(st.seed().d[0], Weight::from_root_coords(vec![0, -1]));
        assert!(verify_compatible(st.seed()));
        assert_eq!(st.check_commutation().unwrap(), None);
        st.mutate(&c, 0).unwrap();
        assert_eq!(st.seed(), &s);
        assert_eq!(st.variables()[0], TorusElement::generator(3, 0));
        st.undo().unwrap();
        st.undo().unwrap();
        assert_eq!(st, MutationState::new(s));
        assert_eq!(st.undo(), Err(Error::EmptyHistory));
        assert_eq!(st.clone().mutate(&c, 1), Err(Error::FrozenDirection(1)));
    }

    #[test]
    fn sign_choice_agrees() {
        let c = CartanDatum::by_name("A3").unwrap();
        let r = ReducedWordData::new(&c, &[0, 1, 0, 2, 1, 0]).unwrap();
        let s = QuantumSeed::from_word(&c, &r);
        for &k in &s.exchangeable {
            let plus = mutate_l(&s.l, &s.b, &s.exchangeable, k, Sign::Plus).unwrap();
            let minus = mutate_l(&s.l, &s.b, &s.exchangeable, k, Sign::Minus).unwrap();
            assert_eq!(plus, minus);
        }
    }

    #[test]
    fn division_failure_is_detected() {
        let (_, s) = a2_seed();
        let d = mono(&[1, 0, 0], 0).add(&mono(&[0, 1, 0], 0));
        let p = mono(&[1, 0, 0], 0);
        assert_eq!(left_divide(&d, &p, &s.l), None);
        let prod = torus_mul(&d, &mono(&[0, 0, 1], 3), &s.l).unwrap();
        assert_eq!(left_divide(&d, &prod, &s.l), Some(mono(&[0, 0, 1], 3)));
    }

    fn verify_compatible(s: &QuantumSeed) -> bool {
        s.check(&CartanDatum::by_name("A2").unwrap()).compatibility.is_none()
    }
}
