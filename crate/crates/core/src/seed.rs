//! The initial quantum seed attached to a reduced word, and degree
//! bookkeeping (`Λ`, `Λ̃`, `δ`, the grading shifts `m_k`, `m'_k`).
//!
//! Positions are 0-based. `splus(s) == r` plays the role of `r + 1`, and an
//! absent `s_-` is `None`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::cartan::{CartanDatum, Weight, WeylWord};
use crate::error::{Error, Result};
use crate::uq::MinorSpec;
use crate::weyl::preceq;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedWordData {
    word: Vec<usize>,
    splus: Vec<usize>,
    sminus: Vec<Option<usize>>,
    lambda: Vec<Weight>,
}

impl ReducedWordData {
    pub fn new(cartan: &CartanDatum, word: &[usize]) -> Result<Self> {
        let w = WeylWord::new(word.to_vec());
        for &a in word {
            cartan.check_index(a)?;
        }
        cartan.check_reduced(&w)?;
        let r = word.len();
        let splus = (0..r).map(|s| (s + 1..r).find(|&k| word[k] == word[s]).unwrap_or(r)).collect();
        let sminus = (0..r).map(|s| (0..s).rev().find(|&k| word[k] == word[s])).collect();
        let lambda = (0..r).map(|s| cartan.apply_word(&w.prefix(s + 1), &cartan.fundamental(word[s]))).collect();
        Ok(Self { word: word.to_vec(), splus, sminus, lambda })
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn letter(&self, s: usize) -> usize {
        self.word[s]
    }

    pub fn splus(&self, s: usize) -> usize {
        self.splus[s]
    }

    pub fn sminus(&self, s: usize) -> Option<usize> {
        self.sminus[s]
    }

    /// The last position before `s` carrying the letter `j`.
    pub fn sminus_of(&self, j: usize, s: usize) -> Option<usize> {
        (0..s).rev().find(|&k| self.word[k] == j)
    }

    /// `u_s = s_{i_1} ⋯ s_{i_s}` (1-based), i.e. the first `s + 1` letters.
    pub fn u(&self, s: usize) -> WeylWord {
        WeylWord::new(self.word[..=s].to_vec())
    }

    /// `λ_s = u_s ϖ_{i_s}`.
    pub fn lambda(&self, s: usize) -> &Weight {
        &self.lambda[s]
    }

    pub fn is_frozen(&self, s: usize) -> bool {
        self.splus[s] == self.len()
    }

    pub fn exchangeable(&self) -> Vec<usize> {
        (0..self.len()).filter(|&s| !self.is_frozen(s)).collect()
    }

    pub fn frozen(&self) -> Vec<usize> {
        (0..self.len()).filter(|&s| self.is_frozen(s)).collect()
    }

    /// `D(s, 0) = D(λ_s, ϖ_{i_s})`.
    pub fn minor(&self, cartan: &CartanDatum, s: usize) -> Result<MinorSpec> {
        let top = cartan.fundamental(self.word[s]);
        MinorSpec::with_lambda(cartan, self.lambda[s].clone(), top.clone(), top)
    }

    /// `d_s = λ_s - ϖ_{i_s}`.
    pub fn d_vector(&self, cartan: &CartanDatum) -> Vec<Weight> {
        (0..self.len()).map(|s| &self.lambda[s] - &cartan.fundamental(self.word[s])).collect()
    }

    /// `L_{c,a} = (λ_c + ϖ_{i_c}, λ_a - ϖ_{i_a})` for `c > a`, skew-symmetric.
    pub fn lambda_matrix(&self, cartan: &CartanDatum) -> Vec<Vec<i64>> {
        let r = self.len();
        let mut l = vec![vec![0; r]; r];
        for c in 0..r {
            let left = &self.lambda[c] + &cartan.fundamental(self.word[c]);
            for a in 0..c {
                let right = &self.lambda[a] - &cartan.fundamental(self.word[a]);
                let v = cartan.bilinear(&left, &right).expect("second argument lies in the root lattice");
                l[c][a] = v;
                l[a][c] = -v;
            }
        }
        l
    }

    pub fn quiver(&self, cartan: &CartanDatum) -> Quiver {
        let r = self.len();
        let mut q = Quiver::new(r);
        for s in 0..r {
            for t in s + 1..self.splus[s] {
                // s < t < s_+ < t_+ ≤ r + 1
                if self.splus[s] < self.splus[t] {
                    let m = cartan.entry(self.word[s], self.word[t]).unsigned_abs() as u32;
                    q.add(s, t, m);
                }
            }
            if let Some(p) = self.sminus[s] {
                q.add(s, p, 1);
            }
        }
        q
    }
}

/// A finite multiset of arrows between `0..n`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Quiver {
    n: usize,
    arrows: BTreeMap<(usize, usize), u32>,
}

impl Quiver {
    pub fn new(n: usize) -> Self {
        Self { n, arrows: BTreeMap::new() }
    }

    pub fn add(&mut self, from: usize, to: usize, mult: u32) {
        if mult > 0 {
            *self.arrows.entry((from, to)).or_default() += mult;
        }
    }

    pub fn vertices(&self) -> usize {
        self.n
    }

    pub fn count(&self, from: usize, to: usize) -> u32 {
        self.arrows.get(&(from, to)).copied().unwrap_or(0)
    }

    /// `((from, to), multiplicity)` in lexicographic order.
    pub fn arrows(&self) -> impl Iterator<Item = ((usize, usize), u32)> + '_ {
        self.arrows.iter().map(|(&k, &m)| (k, m))
    }

    /// `b_{i,j} = #(i → j) - #(j → i)` for `j` in `columns`.
    pub fn exchange_matrix(&self, columns: &[usize]) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|i| columns.iter().map(|&j| self.count(i, j) as i64 - self.count(j, i) as i64).collect())
            .collect()
    }
}

/// `(L, B̃, D)` together with the exchangeable indices labelling the columns of `B̃`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuantumSeed {
    pub l: Vec<Vec<i64>>,
    pub b: Vec<Vec<i64>>,
    pub d: Vec<Weight>,
    pub exchangeable: Vec<usize>,
}

impl QuantumSeed {
    /// The seed of a reduced word.
    pub fn from_word(cartan: &CartanDatum, rwd: &ReducedWordData) -> Self {
        let exchangeable = rwd.exchangeable();
        Self {
            l: rwd.lambda_matrix(cartan),
            b: rwd.quiver(cartan).exchange_matrix(&exchangeable),
            d: rwd.d_vector(cartan),
            exchangeable,
        }
    }

    pub fn size(&self) -> usize {
        self.l.len()
    }

    pub fn is_exchangeable(&self, k: usize) -> bool {
        self.exchangeable.contains(&k)
    }

    pub fn frozen(&self) -> Vec<usize> {
        (0..self.size()).filter(|k| !self.is_exchangeable(*k)).collect()
    }

    /// Column of `B̃` holding direction `k`.
    pub fn column(&self, k: usize) -> Result<usize> {
        self.exchangeable.iter().position(|&e| e == k).ok_or(Error::FrozenDirection(k))
    }

    /// `b_{i,k}` for exchangeable `k`.
    pub fn b_col(&self, k: usize) -> Result<Vec<i64>> {
        let c = self.column(k)?;
        Ok(self.b.iter().map(|row| row[c]).collect())
    }

    /// `(m_k, m'_k)`; fails if either is a proper half-integer.
    pub fn grading_shifts(&self, cartan: &CartanDatum, k: usize) -> Result<(i64, i64)> {
        let (m2, mp2) = self.doubled_grading_shifts(cartan, k)?;
        for v in [m2, mp2] {
            if v % 2 != 0 {
                return Err(Error::NonIntegralShift { doubled: v });
            }
        }
        Ok((m2 / 2, mp2 / 2))
    }

    /// `(2 m_k, 2 m'_k)`.
    pub fn doubled_grading_shifts(&self, cartan: &CartanDatum, k: usize) -> Result<(i64, i64)> {
        let col = self.b_col(k)?;
        let xi = self.mutated_d(k)?;
        let base = cartan.bilinear(&self.d[k], &xi)?;
        let neg: i64 = col.iter().enumerate().filter(|(_, &b)| b < 0).map(|(i, &b)| self.l[k][i] * b).sum();
        let pos: i64 = col.iter().enumerate().filter(|(_, &b)| b > 0).map(|(i, &b)| self.l[k][i] * b).sum();
        Ok((base + neg, base + pos))
    }

    /// `μ_k(D)_k = -d_k + Σ_{b_{i,k} > 0} b_{i,k} d_i`.
    pub fn mutated_d(&self, k: usize) -> Result<Weight> {
        let col = self.b_col(k)?;
        let mut xi = -&self.d[k];
        for (i, &b) in col.iter().enumerate() {
            if b > 0 {
                xi = &xi + &(b * &self.d[i]);
            }
        }
        Ok(xi)
    }

    /// `Λ̃(M_i, M_j) = ((d_i, d_j) - L_{i,j}) / 2`, using `Λ = -L`.
    pub fn lambda_tilde(&self, cartan: &CartanDatum, i: usize, j: usize) -> Result<i64> {
        let twice = cartan.bilinear(&self.d[i], &self.d[j])? - self.l[i][j];
        if twice % 2 != 0 {
            return Err(Error::NonIntegralShift { doubled: twice });
        }
        Ok(twice / 2)
    }

    pub fn check(&self, cartan: &CartanDatum) -> SeedConditions {
        let n = self.size();
        let mut out = SeedConditions::default();
        for i in 0..n {
            for j in 0..n {
                if self.l[i][j] != -self.l[j][i] && out.skew_symmetry.is_none() {
                    out.skew_symmetry = Some(alloc::format!("L[{}][{}] = {}, L[{}][{}] = {}", i + 1, j + 1, self.l[i][j], j + 1, i + 1, self.l[j][i]));
                }
            }
        }
        for (c, &k) in self.exchangeable.iter().enumerate() {
            for (c2, &k2) in self.exchangeable.iter().enumerate() {
                if self.b[k][c2] != -self.b[k2][c] && out.skew_symmetry.is_none() {
                    out.skew_symmetry = Some(alloc::format!("principal part of B not skew at ({}, {})", k + 1, k2 + 1));
                }
            }
            for i in 0..n {
                let v: i64 = (0..n).map(|m| self.l[i][m] * self.b[m][c]).sum();
                let expect = if i == k { 2 } else { 0 };
                if v != expect && out.compatibility.is_none() {
                    out.compatibility = Some(alloc::format!("(L B)[{}][{}] = {}, expected {}", i + 1, k + 1, v, expect));
                }
            }
            let mut sum = Weight::zero(cartan.rank());
            for i in 0..n {
                sum = &sum + &(self.b[i][c] * &self.d[i]);
            }
            if !sum.is_zero() && out.balance.is_none() {
                out.balance = Some(alloc::format!("Σ b_(i,{}) d_i = {:?}", k + 1, sum));
            }
        }
        for i in 0..n {
            for j in 0..n {
                match cartan.bilinear(&self.d[i], &self.d[j]) {
                    Ok(v) if (self.l[i][j] - v) % 2 == 0 => {}
                    Ok(v) if out.parity.is_none() => {
                        out.parity = Some(alloc::format!("L[{}][{}] - (d_{}, d_{}) = {}", i + 1, j + 1, i + 1, j + 1, self.l[i][j] - v))
                    }
                    Err(e) if out.parity.is_none() => out.parity = Some(alloc::format!("{}", e)),
                    _ => {}
                }
            }
        }
        out
    }
}

/// Failures of the seed conditions, each with a description of the first offending entry.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SeedConditions {
    pub skew_symmetry: Option<String>,
    pub compatibility: Option<String>,
    pub parity: Option<String>,
    pub balance: Option<String>,
}

impl SeedConditions {
    pub fn all_pass(&self) -> bool {
        self.skew_symmetry.is_none() && self.compatibility.is_none() && self.parity.is_none() && self.balance.is_none()
    }
}

/// Degrees between `M = M(s'sλ, t'λ)` and `N = M(s'μ, t'tμ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorPairDegrees {
    pub lambda_mn: i64,
    pub lambda_nm: i64,
    pub tilde_mn: i64,
    pub tilde_nm: i64,
    pub delta: i64,
}

/// Words `s', s, t', t` and dominant `λ, μ` describing a commuting pair.
#[derive(Clone, Debug)]
pub struct MinorPairInput<'a> {
    pub lambda: &'a Weight,
    pub mu: &'a Weight,
    pub s_prime: &'a WeylWord,
    pub s: &'a WeylWord,
    pub t_prime: &'a WeylWord,
    pub t: &'a WeylWord,
}

/// `Λ(M, N) = (s'sλ + t'λ, t'tμ - s'μ)`, with the companion values. `Λ(N, M)`
/// comes from `Λ̃(N, M) = (s'μ - t'tμ, s'sλ)`, and both `Λ̃` are checked
/// against `((wt, wt) + Λ) / 2`.
pub fn lambda_of_minors(cartan: &CartanDatum, x: &MinorPairInput<'_>) -> Result<MinorPairDegrees> {
    for w in [x.s_prime, x.s, x.t_prime, x.t] {
        cartan.check_reduced(w)?;
    }
    if !cartan.is_reduced(&x.s_prime.concat(x.s)) {
        return Err(Error::HypothesisViolation("l(s's) != l(s') + l(s)".into()));
    }
    if !cartan.is_reduced(&x.t_prime.concat(x.t)) {
        return Err(Error::HypothesisViolation("l(t't) != l(t') + l(t)".into()));
    }
    for d in [x.lambda, x.mu] {
        if !cartan.is_dominant(d) {
            return Err(Error::NotDominant);
        }
    }
    let m_top = cartan.apply_word(&x.s_prime.concat(x.s), x.lambda);
    let m_bot = cartan.apply_word(x.t_prime, x.lambda);
    let n_top = cartan.apply_word(x.s_prime, x.mu);
    let n_bot = cartan.apply_word(&x.t_prime.concat(x.t), x.mu);
    if !preceq(cartan, &m_top, &m_bot, x.lambda)? || !preceq(cartan, &n_top, &n_bot, x.mu)? {
        return Err(Error::HypothesisViolation("minors vanish".into()));
    }
    let wt_m = &m_top - &m_bot;
    let wt_n = &n_top - &n_bot;
    let lambda_mn = cartan.bilinear(&(&m_top + &m_bot), &(&n_bot - &n_top))?;
    let tilde_mn = cartan.bilinear(&m_bot, &(&n_bot - &n_top))?;
    let tilde_nm = cartan.bilinear(&(&n_top - &n_bot), &m_top)?;
    let wt_pair = cartan.bilinear(&wt_m, &wt_n)?;
    if 2 * tilde_mn != wt_pair + lambda_mn {
        return Err(Error::HypothesisViolation("closed form of Λ̃(M,N) disagrees with its definition".into()));
    }
    let lambda_nm = 2 * tilde_nm - wt_pair;
    let sum = lambda_mn + lambda_nm;
    if sum % 2 != 0 {
        return Err(Error::NonIntegralShift { doubled: sum });
    }
    Ok(MinorPairDegrees { lambda_mn, lambda_nm, tilde_mn, tilde_nm, delta: sum / 2 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2_data() -> (CartanDatum, ReducedWordData) {
        let c = CartanDatum::by_name("A2").unwrap();
        let r = ReducedWordData::new(&c, &[0, 1, 0]).unwrap();
        (c, r)
    }

    #[test]
    fn word_data_maps() {
        let (c, r) = a2_data();
        assert_eq!((0..3).map(|s| r.splus(s)).collect::<Vec<_>>(), vec![2, 3, 3]);
        assert_eq!((0..3).map(|s| r.sminus(s)).collect::<Vec<_>>(), vec![None, None, Some(0)]);
        assert_eq!(r.exchangeable(), vec![0]);
        assert_eq!(r.lambda(2), &Weight::new(vec![1, 0], vec![-1, -1]));
        assert_eq!(r.sminus_of(1, 2), Some(1));
        assert_eq!(r.sminus_of(1, 1), None);
        assert_eq!(ReducedWordData::new(&c, &[0, 0]), Err(Error::NonReducedWord(vec![0, 0])));
    }

    #[test]
    fn a2_quiver_and_matrices() {
        let (c, r) = a2_data();
        let q = r.quiver(&c);
        assert_eq!(q.arrows().collect::<Vec<_>>(), vec![((0, 1), 1), ((2, 0), 1)]);
        let seed = QuantumSeed::from_word(&c, &r);
        assert_eq!(seed.b, vec![vec![0], vec![-1], vec![1]]);
        assert_eq!(seed.l[1][0], 1);
        assert_eq!(seed.l[2][0], -1);
        assert_eq!(seed.l[2][1], 0);
        let d: Vec<Vec<i64>> = seed.d.iter().map(|w| w.alpha().to_vec()).collect();
        assert_eq!(d, vec![vec![-1, 0], vec![-1, -1], vec![-1, -1]]);
        assert!(seed.check(&c).all_pass());
        assert_eq!(seed.grading_shifts(&c, 0), Ok((0, 0)));
        assert_eq!(seed.mutated_d(0).unwrap(), Weight::from_root_coords(vec![0, -1]));
        assert_eq!(seed.grading_shifts(&c, 1), Err(Error::FrozenDirection(1)));
    }

    #[test]
    fn lambda_tilde_values() {
        let (c, r) = a2_data();
        let seed = QuantumSeed::from_word(&c, &r);
        // (d_2, d_1) = 1 and L_{2,1} = 1
        assert_eq!(seed.lambda_tilde(&c, 1, 0), Ok(0));
        assert_eq!(seed.lambda_tilde(&c, 0, 0), Ok(1));
    }

    #[test]
    fn perturbed_seed_fails() {
        let (c, r) = a2_data();
        let mut seed = QuantumSeed::from_word(&c, &r);
        seed.l[1][0] = 2;
        seed.l[0][1] = -2;
        let report = seed.check(&c);
        assert!(report.compatibility.is_some());
    }

    #[test]
    fn rank_one_and_a3() {
        let a1 = CartanDatum::by_name("A1").unwrap();
        let r = ReducedWordData::new(&a1, &[0]).unwrap();
        assert_eq!(r.quiver(&a1).arrows().count(), 0);
        let c = CartanDatum::by_name("A3").unwrap();
        let r = ReducedWordData::new(&c, &[0, 1, 0, 2, 1, 0]).unwrap();
        let q = r.quiver(&c);
        for (s, t) in [(2, 0), (4, 1), (5, 2)] {
            assert_eq!(q.count(s, t), 1);
        }
        assert_eq!(r.exchangeable(), vec![0, 1, 2]);
        let seed = QuantumSeed::from_word(&c, &r);
        assert_eq!(seed.b[2][0], 1);
        assert_eq!(seed.b[1][0], -1);
        assert_eq!(seed.d[5], Weight::from_root_coords(vec![-1, -1, -1]));
        assert!(seed.check(&c).all_pass());
    }

    #[test]
    fn commuting_pair_degrees() {
        let c = CartanDatum::by_name("A2").unwrap();
        let (w1, w2) = (c.fundamental(0), c.fundamental(1));
        let e = WeylWord::empty();
        let s1 = WeylWord::new(vec![0]);
        let s2 = WeylWord::new(vec![1]);
        let x = MinorPairInput { lambda: &w1, mu: &w2, s_prime: &s1, s: &s2, t_prime: &e, t: &e };
        let deg = lambda_of_minors(&c, &x).unwrap();
        assert_eq!(deg.delta, 0);
        let bad = MinorPairInput { lambda: &w1, mu: &w2, s_prime: &s1, s: &s1, t_prime: &e, t: &e };
        assert!(matches!(lambda_of_minors(&c, &bad), Err(Error::HypothesisViolation(_))));
    }
}
