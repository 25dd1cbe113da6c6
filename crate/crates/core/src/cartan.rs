//! Symmetric Cartan data and the formal weight lattice.
//!
//! A [`Weight`] is a formal pair `Σ phi_i ϖ_i + Σ alpha_i α_i`. No relation
//! between the two parts is imposed; everything downstream only needs the
//! pairings `⟨h_i, ·⟩` and the form against root-lattice elements, both of
//! which are well defined on the pair.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CartanDatum {
    matrix: Vec<Vec<i64>>,
}

impl CartanDatum {
    /// Checks `a_ii = 2`, symmetry and nonpositive off-diagonal entries.
    pub fn new(matrix: Vec<Vec<i64>>) -> Result<Self> {
        let n = matrix.len();
        if n == 0 {
            return Err(Error::InvalidCartan("empty matrix".into()));
        }
        for (i, row) in matrix.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidCartan(format!("row {} has length {}, expected {}", i + 1, row.len(), n)));
            }
            if row[i] != 2 {
                return Err(Error::InvalidCartan(format!("diagonal entry a_{0}{0} is {1}, expected 2", i + 1, row[i])));
            }
            for (j, &a) in row.iter().enumerate() {
                if i != j && a > 0 {
                    return Err(Error::InvalidCartan(format!("off-diagonal entry a_{}{} is positive", i + 1, j + 1)));
                }
                if matrix[j][i] != a {
                    return Err(Error::InvalidCartan(format!("matrix is not symmetric at ({}, {})", i + 1, j + 1)));
                }
            }
        }
        Ok(Self { matrix })
    }

    /// Simply-laced finite types by name: `An` (n ≥ 1), `Dn` (n ≥ 4), `E6`..`E8`.
    pub fn by_name(name: &str) -> Result<Self> {
        let bad = || Error::InvalidCartan(format!("unknown Cartan type {:?}", name));
        let (kind, rank) = name.split_at(1.min(name.len()));
        let n: usize = rank.parse().map_err(|_| bad())?;
        let mut edges: Vec<(usize, usize)> = Vec::new();
        match kind {
            "A" | "a" if n >= 1 => edges.extend((1..n).map(|i| (i - 1, i))),
            "D" | "d" if n >= 4 => {
                edges.extend((1..n - 1).map(|i| (i - 1, i)));
                edges.push((n - 3, n - 1));
            }
            "E" | "e" if (6..=8).contains(&n) => {
                // Bourbaki labelling: 1-3-4-5-..., 2 attached to 4
                edges.extend([(0, 2), (2, 3), (1, 3)]);
                edges.extend((4..n).map(|i| (i - 1, i)));
            }
            _ => return Err(bad()),
        }
        let mut m = vec![vec![0; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 2;
        }
        for (a, b) in edges {
            m[a][b] = -1;
            m[b][a] = -1;
        }
        Self::new(m)
    }

    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    /// `a_{i,j} = (α_i, α_j)`.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.matrix[i][j]
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i < self.rank() {
            Ok(())
        } else {
            Err(Error::UnknownIndex { index: i, rank: self.rank() })
        }
    }

    fn check_weight(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.rank() {
            return Err(Error::DimensionMismatch { expected: self.rank(), got: w.rank() });
        }
        Ok(())
    }

    pub fn zero(&self) -> Weight {
        Weight::zero(self.rank())
    }

    pub fn fundamental(&self, i: usize) -> Weight {
        Weight::fundamental(self.rank(), i)
    }

    pub fn simple_root(&self, i: usize) -> Weight {
        Weight::simple_root(self.rank(), i)
    }

    /// `ρ = Σ ϖ_i`.
    pub fn rho(&self) -> Weight {
        Weight::new(vec![1; self.rank()], vec![0; self.rank()])
    }

    /// `⟨h_i, λ⟩ = phi_i + Σ_j a_{i,j} alpha_j`.
    pub fn pairing_h(&self, i: usize, w: &Weight) -> Result<i64> {
        self.check_index(i)?;
        self.check_weight(w)?;
        Ok(self.pair(i, w))
    }

    pub(crate) fn pair(&self, i: usize, w: &Weight) -> i64 {
        w.phi[i] + self.matrix[i].iter().zip(&w.alpha).map(|(a, c)| a * c).sum::<i64>()
    }

    /// All pairings `(⟨h_i, λ⟩)_i`.
    pub fn pairings(&self, w: &Weight) -> Vec<i64> {
        (0..self.rank()).map(|i| self.pair(i, w)).collect()
    }

    pub fn is_dominant(&self, w: &Weight) -> bool {
        (0..self.rank()).all(|i| self.pair(i, w) >= 0)
    }

    /// The symmetric form, defined when at least one side lies in the root lattice.
    pub fn bilinear(&self, a: &Weight, b: &Weight) -> Result<i64> {
        self.check_weight(a)?;
        self.check_weight(b)?;
        let (root, other) = if b.is_root_lattice() {
            (b, a)
        } else if a.is_root_lattice() {
            (a, b)
        } else {
            return Err(Error::BothOutsideRootLattice);
        };
        Ok(root.alpha.iter().enumerate().filter(|(_, &c)| c != 0).map(|(j, &c)| c * self.pair(j, other)).sum())
    }

    /// `s_i λ = λ - ⟨h_i, λ⟩ α_i`.
    pub fn simple_reflection(&self, i: usize, w: &Weight) -> Weight {
        let mut out = w.clone();
        out.alpha[i] -= self.pair(i, w);
        out
    }

    /// Left action of `s_{a_0} s_{a_1} ⋯ s_{a_{n-1}}`: the last letter acts first.
    pub fn apply_word(&self, word: &WeylWord, w: &Weight) -> Weight {
        word.letters.iter().rev().fold(w.clone(), |acc, &i| self.simple_reflection(i, &acc))
    }

    /// A word is reduced iff every prefix `x` followed by letter `i` has `x(α_i) > 0`.
    pub fn is_reduced(&self, word: &WeylWord) -> bool {
        if word.letters.iter().any(|&i| i >= self.rank()) {
            return false;
        }
        (0..word.len()).all(|k| {
            let root = self.apply_word(&word.prefix(k), &self.simple_root(word.letters[k]));
            root.alpha.iter().all(|&c| c >= 0)
        })
    }

    pub fn check_reduced(&self, word: &WeylWord) -> Result<()> {
        if self.is_reduced(word) {
            Ok(())
        } else {
            Err(Error::NonReducedWord(word.letters.clone()))
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    phi: Vec<i64>,
    alpha: Vec<i64>,
}

impl Weight {
    pub fn new(phi: Vec<i64>, alpha: Vec<i64>) -> Self {
        assert_eq!(phi.len(), alpha.len(), "weight parts must have equal length");
        Self { phi, alpha }
    }

    pub fn zero(rank: usize) -> Self {
        Self::new(vec![0; rank], vec![0; rank])
    }

    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = Self::zero(rank);
        w.phi[i] = 1;
        w
    }

    pub fn simple_root(rank: usize, i: usize) -> Self {
        let mut w = Self::zero(rank);
        w.alpha[i] = 1;
        w
    }

    /// `Σ c_i α_i`.
    pub fn from_root_coords(coords: Vec<i64>) -> Self {
        let n = coords.len();
        Self::new(vec![0; n], coords)
    }

    pub fn rank(&self) -> usize {
        self.phi.len()
    }

    pub fn phi(&self) -> &[i64] {
        &self.phi
    }

    pub fn alpha(&self) -> &[i64] {
        &self.alpha
    }

    pub fn is_root_lattice(&self) -> bool {
        self.phi.iter().all(|&c| c == 0)
    }

    pub fn is_zero(&self) -> bool {
        self.is_root_lattice() && self.alpha.iter().all(|&c| c == 0)
    }

    /// `|β| = Σ |c_i|` for a root-lattice element.
    pub fn height(&self) -> i64 {
        self.alpha.iter().map(|c| c.abs()).sum()
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        for (name, coords) in [("w", &self.phi), ("a", &self.alpha)] {
            for (i, &c) in coords.iter().enumerate() {
                match c {
                    0 => {}
                    1 => parts.push(format!("{}{}", name, i + 1)),
                    -1 => parts.push(format!("-{}{}", name, i + 1)),
                    _ => parts.push(format!("{}{}{}", c, name, i + 1)),
                }
            }
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + ").replace("+ -", "- "))
        }
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.rank(), rhs.rank());
        Weight {
            phi: self.phi.iter().zip(&rhs.phi).map(|(a, b)| a + b).collect(),
            alpha: self.alpha.iter().zip(&rhs.alpha).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        self + &(-rhs)
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight { phi: self.phi.iter().map(|c| -c).collect(), alpha: self.alpha.iter().map(|c| -c).collect() }
    }
}

impl Mul<&Weight> for i64 {
    type Output = Weight;
    fn mul(self, w: &Weight) -> Weight {
        Weight { phi: w.phi.iter().map(|c| self * c).collect(), alpha: w.alpha.iter().map(|c| self * c).collect() }
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        &self + &rhs
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        &self - &rhs
    }
}

/// A word `(a_0, …, a_{n-1})` in the simple reflections, standing for the
/// product `s_{a_0} s_{a_1} ⋯ s_{a_{n-1}}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylWord {
    letters: Vec<usize>,
}

impl WeylWord {
    pub fn new(letters: Vec<usize>) -> Self {
        Self { letters }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The first `k` letters.
    pub fn prefix(&self, k: usize) -> WeylWord {
        WeylWord::new(self.letters[..k].to_vec())
    }

    /// The word for the product `self · other`.
    pub fn concat(&self, other: &WeylWord) -> WeylWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        WeylWord::new(letters)
    }

    /// The word for the inverse element.
    pub fn inverse(&self) -> WeylWord {
        let mut letters = self.letters.clone();
        letters.reverse();
        WeylWord::new(letters)
    }
}

impl From<Vec<usize>> for WeylWord {
    fn from(letters: Vec<usize>) -> Self {
        Self::new(letters)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> CartanDatum {
        CartanDatum::by_name("A2").unwrap()
    }

    #[test]
    fn pairing_examples() {
        let c = a2();
        assert_eq!(c.pairing_h(0, &c.fundamental(0)).unwrap(), 1);
        assert_eq!(c.pairing_h(0, &c.simple_root(1)).unwrap(), -1);
        let w = &c.fundamental(0) - &c.simple_root(0);
        assert_eq!(c.pairing_h(0, &w).unwrap(), -1);
        assert_eq!(c.pairing_h(2, &w), Err(Error::UnknownIndex { index: 2, rank: 2 }));
    }

    #[test]
    fn bilinear_examples() {
        let c = a2();
        assert_eq!(c.bilinear(&c.simple_root(0), &c.simple_root(1)).unwrap(), -1);
        assert_eq!(c.bilinear(&c.fundamental(0), &c.simple_root(0)).unwrap(), 1);
        assert_eq!(c.bilinear(&c.simple_root(0), &c.fundamental(0)).unwrap(), 1);
        assert_eq!(c.bilinear(&c.fundamental(0), &c.fundamental(1)), Err(Error::BothOutsideRootLattice));
    }

    #[test]
    fn reflection_examples() {
        let c = a2();
        let w1 = c.fundamental(0);
        let s1w1 = c.simple_reflection(0, &w1);
        assert_eq!(s1w1, &w1 - &c.simple_root(0));
        assert_eq!(c.simple_reflection(0, &s1w1), w1);
        assert_eq!(c.simple_reflection(0, &c.simple_root(1)), &c.simple_root(0) + &c.simple_root(1));
    }

    #[test]
    fn apply_word_examples() {
        let c = a2();
        let a12 = &c.simple_root(0) + &c.simple_root(1);
        // u_2 = s_1 s_2 on ϖ_2, composed by hand from two reflections
        let by_hand = c.simple_reflection(0, &c.simple_reflection(1, &c.fundamental(1)));
        let u2 = c.apply_word(&WeylWord::new(vec![0, 1]), &c.fundamental(1));
        assert_eq!(u2, by_hand);
        assert_eq!(u2, &c.fundamental(1) - &a12);
        assert_eq!(c.apply_word(&WeylWord::empty(), &a12), a12);
        // u_3 = s_1 s_2 s_1 on ϖ_1 is ϖ_1 - α_1 - α_2, which is -ϖ_2 in A2
        let u3 = c.apply_word(&WeylWord::new(vec![0, 1, 0]), &c.fundamental(0));
        assert_eq!(u3, &c.fundamental(0) - &a12);
        assert_eq!(c.pairings(&u3), vec![0, -1]);
        assert_eq!(c.pairings(&-&c.fundamental(1)), vec![0, -1]);
    }

    #[test]
    fn reducedness() {
        let c = a2();
        assert!(c.is_reduced(&WeylWord::new(vec![0, 1, 0])));
        assert!(!c.is_reduced(&WeylWord::new(vec![0, 0])));
        assert!(!c.is_reduced(&WeylWord::new(vec![0, 1, 0, 1])));
        assert!(c.is_reduced(&WeylWord::empty()));
        assert!(!c.is_reduced(&WeylWord::new(vec![5])));
    }

    #[test]
    fn cartan_validation() {
        assert!(CartanDatum::new(vec![vec![2, -1], vec![-2, 2]]).is_err());
        assert!(CartanDatum::new(vec![vec![2, 1], vec![1, 2]]).is_err());
        assert!(CartanDatum::new(vec![vec![3]]).is_err());
        let d4 = CartanDatum::by_name("D4").unwrap();
        assert_eq!(d4.matrix()[1].iter().filter(|&&a| a == -1).count(), 3);
        let affine = CartanDatum::new(vec![vec![2, -2], vec![-2, 2]]).unwrap();
        assert!(affine.is_reduced(&WeylWord::new(vec![0, 1, 0, 1, 0])));
        assert!(CartanDatum::by_name("B2").is_err());
    }
}
