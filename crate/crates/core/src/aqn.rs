//! `A_q(n)` realised as graded functionals on the monomials `e_ν` of `U_q^+`.
//!
//! An element of weight `-β` is the table `ν ↦ ψ(e_ν)` over words of letter
//! content `β`, with `e_ν = e_{ν_1} ⋯ e_{ν_n}`. The product is dual to the
//! twisted coproduct `Δ_n(e_i) = e_i ⊗ 1 + 1 ⊗ e_i`, where moving a right
//! tensor letter `r` in front of a left tensor letter `l` costs `q^{-(α_r, α_l)}`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::cartan::CartanDatum;
use crate::error::{Error, Result};
use crate::laurent::Laurent;
use crate::uq::{minor_table, MinorSpec};

/// Which factor of the product is fed the left tensor leg of `Δ_n`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ProductConvention {
    /// `(ψθ)(x) = θ(x_(1)) ψ(x_(2))`.
    #[default]
    Standard,
    /// `(ψθ)(x) = ψ(x_(1)) θ(x_(2))`.
    Swapped,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AqnElement {
    beta: Vec<i64>,
    values: BTreeMap<Vec<usize>, Laurent>,
}

impl AqnElement {
    pub fn zero(beta: Vec<i64>) -> Self {
        Self { beta, values: BTreeMap::new() }
    }

    /// The counit, `1 ∈ A_q(n)`.
    pub fn unit(rank: usize) -> Self {
        Self::from_table(vec![0; rank], [(Vec::new(), Laurent::one())])
    }

    /// Builds an element from `(word, value)` pairs, summing repeats and
    /// dropping zeros. Panics if a word has the wrong content.
    pub fn from_table<I: IntoIterator<Item = (Vec<usize>, Laurent)>>(beta: Vec<i64>, table: I) -> Self {
        let mut out = Self::zero(beta);
        for (word, value) in table {
            assert_eq!(content(&word, out.beta.len()), out.beta, "word {:?} has wrong content", word);
            out.add_value(word, &value);
        }
        out
    }

    pub fn minor(cartan: &CartanDatum, spec: &MinorSpec) -> Result<Self> {
        Ok(Self { beta: spec.beta(), values: minor_table(cartan, spec)? })
    }

    /// Root-lattice coordinates of `β`; the weight is `-β`.
    pub fn beta(&self) -> &[i64] {
        &self.beta
    }

    pub fn rank(&self) -> usize {
        self.beta.len()
    }

    pub fn values(&self) -> &BTreeMap<Vec<usize>, Laurent> {
        &self.values
    }

    pub fn value(&self, word: &[usize]) -> Laurent {
        self.values.get(word).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    fn add_value(&mut self, word: Vec<usize>, c: &Laurent) {
        if c.is_zero() {
            return;
        }
        let entry = self.values.entry(word.clone()).or_default();
        *entry += c;
        if entry.is_zero() {
            self.values.remove(&word);
        }
    }

    pub fn scale(&self, c: &Laurent) -> Self {
        let mut out = Self::zero(self.beta.clone());
        for (word, v) in &self.values {
            out.add_value(word.clone(), &(v * c));
        }
        out
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self { beta: self.beta.clone(), values: self.values.iter().map(|(w, v)| (w.clone(), v.shift(k))).collect() }
    }

    /// `ψ ↦ ψ̄`. Monomials `e_ν` are bar invariant, so only values change.
    pub fn bar(&self) -> Self {
        Self { beta: self.beta.clone(), values: self.values.iter().map(|(w, v)| (w.clone(), v.bar())).collect() }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_weight(other)?;
        let mut out = self.clone();
        for (word, v) in &other.values {
            out.add_value(word.clone(), v);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&Laurent::constant(-1)))
    }

    fn same_weight(&self, other: &Self) -> Result<()> {
        if self.beta != other.beta {
            return Err(Error::WeightMismatch);
        }
        Ok(())
    }

    /// `e_i ψ`, i.e. `(e_i ψ)(x) = ψ(x e_i)`.
    pub fn e_action(&self, i: usize) -> Self {
        self.derive(i, |w| (w.last() == Some(&i)).then(|| w[..w.len() - 1].to_vec()))
    }

    /// `e_i^* ψ`, i.e. `(e_i^* ψ)(x) = ψ(e_i x)`.
    pub fn e_star_action(&self, i: usize) -> Self {
        self.derive(i, |w| (w.first() == Some(&i)).then(|| w[1..].to_vec()))
    }

    /// Keeps the words that `strip` accepts, under their stripped form.
    fn derive(&self, i: usize, strip: impl Fn(&[usize]) -> Option<Vec<usize>>) -> Self {
        let mut beta = self.beta.clone();
        beta[i] -= 1;
        let mut out = Self::zero(beta);
        for (word, v) in &self.values {
            if let Some(short) = strip(word) {
                out.add_value(short, v);
            }
        }
        out
    }

    /// `e_i^{(n)} ψ`; `None` if some value is not divisible by `[n]_q!`.
    pub fn e_divided_power(&self, i: usize, n: u32) -> Option<Self> {
        let mut out = self.clone();
        for _ in 0..n {
            out = out.e_action(i);
        }
        out.divide_exact(&Laurent::quantum_factorial(n))
    }

    /// `e_i^{*(n)} ψ`.
    pub fn e_star_divided_power(&self, i: usize, n: u32) -> Option<Self> {
        let mut out = self.clone();
        for _ in 0..n {
            out = out.e_star_action(i);
        }
        out.divide_exact(&Laurent::quantum_factorial(n))
    }

    fn divide_exact(&self, d: &Laurent) -> Option<Self> {
        let mut values = BTreeMap::new();
        for (w, v) in &self.values {
            values.insert(w.clone(), v.div_exact(d)?);
        }
        Some(Self { beta: self.beta.clone(), values })
    }

    /// `ε_i(ψ) = max{n : e_i^n ψ ≠ 0}`.
    pub fn epsilon(&self, i: usize) -> Result<u32> {
        self.extinction(|x| x.e_action(i))
    }

    /// `ε_i^*(ψ) = max{n : e_i^{*n} ψ ≠ 0}`.
    pub fn epsilon_star(&self, i: usize) -> Result<u32> {
        self.extinction(|x| x.e_star_action(i))
    }

    fn extinction(&self, step: impl Fn(&Self) -> Self) -> Result<u32> {
        if self.is_zero() {
            return Err(Error::ZeroElement);
        }
        let mut n = 0;
        let mut cur = step(self);
        while !cur.is_zero() {
            n += 1;
            cur = step(&cur);
        }
        Ok(n)
    }
}

impl fmt::Debug for AqnElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AqnElement(beta={:?}) {{", self.beta)?;
        for (i, (w, v)) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            let w1: Vec<usize> = w.iter().map(|a| a + 1).collect();
            write!(f, " {:?} ↦ {}", w1, v.display_in("q"))?;
        }
        write!(f, " }}")
    }
}

pub fn content(word: &[usize], rank: usize) -> Vec<i64> {
    let mut c = vec![0; rank];
    for &a in word {
        c[a] += 1;
    }
    c
}

/// All words with the given letter content, in lexicographic order.
pub fn words_of_content(beta: &[i64]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut remaining = beta.to_vec();
    let mut cur = Vec::new();
    fn go(remaining: &mut [i64], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining.iter().all(|&c| c == 0) {
            out.push(cur.clone());
            return;
        }
        for a in 0..remaining.len() {
            if remaining[a] > 0 {
                remaining[a] -= 1;
                cur.push(a);
                go(remaining, cur, out);
                cur.pop();
                remaining[a] += 1;
            }
        }
    }
    if beta.iter().all(|&c| c >= 0) {
        go(&mut remaining, &mut cur, &mut out);
    }
    out
}

/// One term of `Δ_n(e_ν)`: subwords fed to the left and right legs, with the twist.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoproductTerm {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    pub q_power: i64,
}

/// `Δ_n(e_ν)` as a list over all `2^n` ways of splitting `ν` into two subwords.
pub fn delta_n_expand(cartan: &CartanDatum, nu: &[usize]) -> Vec<CoproductTerm> {
    let n = nu.len();
    assert!(n < 63, "word too long to expand");
    (0u64..1 << n)
        .map(|mask| {
            let mut left = Vec::new();
            let mut right = Vec::new();
            let mut q_power = 0;
            for (pos, &a) in nu.iter().enumerate() {
                if mask >> pos & 1 == 1 {
                    right.push(a);
                } else {
                    q_power -= right.iter().map(|&r| cartan.entry(r, a)).sum::<i64>();
                    left.push(a);
                }
            }
            CoproductTerm { left, right, q_power }
        })
        .collect()
}

/// `ψθ` under the given convention.
pub fn multiply_with(cartan: &CartanDatum, psi: &AqnElement, theta: &AqnElement, conv: ProductConvention) -> AqnElement {
    match conv {
        ProductConvention::Standard => shuffle_product(cartan, theta, psi),
        ProductConvention::Swapped => shuffle_product(cartan, psi, theta),
    }
}

/// `ψθ` with the default convention.
pub fn multiply(cartan: &CartanDatum, psi: &AqnElement, theta: &AqnElement) -> AqnElement {
    multiply_with(cartan, psi, theta, ProductConvention::Standard)
}

/// `(x ↦ left(x_(1)) right(x_(2)))`, computed by shuffling supports.
fn shuffle_product(cartan: &CartanDatum, left: &AqnElement, right: &AqnElement) -> AqnElement {
    let beta: Vec<i64> = left.beta.iter().zip(&right.beta).map(|(a, b)| a + b).collect();
    let mut out = AqnElement::zero(beta);
    let mut acc: BTreeMap<Vec<usize>, BTreeMap<i64, i64>> = BTreeMap::new();
    for (a, va) in &left.values {
        for (b, vb) in &right.values {
            let coeff = va * vb;
            shuffles(cartan, a, b, &mut |word, power| {
                let slot = acc.entry(word).or_default();
                for (e, c) in coeff.terms() {
                    *slot.entry(e + power).or_default() += c;
                }
            });
        }
    }
    for (word, terms) in acc {
        out.add_value(word, &Laurent::from_terms(terms));
    }
    out
}

/// Calls `emit(word, power)` for every interleaving of `a` (left leg) and
/// `b` (right leg), where `power = -Σ (α_r, α_l)` over right letters `r`
/// placed before left letters `l`.
fn shuffles(cartan: &CartanDatum, a: &[usize], b: &[usize], emit: &mut impl FnMut(Vec<usize>, i64)) {
    let mut word = Vec::with_capacity(a.len() + b.len());
    fn go(
        cartan: &CartanDatum,
        a: &[usize],
        b: &[usize],
        placed_right: &mut Vec<usize>,
        word: &mut Vec<usize>,
        power: i64,
        emit: &mut impl FnMut(Vec<usize>, i64),
    ) {
        if a.is_empty() && b.is_empty() {
            emit(word.clone(), power);
            return;
        }
        if let Some((&l, rest)) = a.split_first() {
            let cost: i64 = placed_right.iter().map(|&r| cartan.entry(r, l)).sum();
            word.push(l);
            go(cartan, rest, b, placed_right, word, power - cost, emit);
            word.pop();
        }
        if let Some((&r, rest)) = b.split_first() {
            word.push(r);
            placed_right.push(r);
            go(cartan, a, rest, placed_right, word, power, emit);
            placed_right.pop();
            word.pop();
        }
    }
    go(cartan, a, b, &mut Vec::new(), &mut word, 0, emit);
}
