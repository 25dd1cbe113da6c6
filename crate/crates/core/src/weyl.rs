//! Weyl group elements, Bruhat order and the order `⪯` on an orbit.
//!
//! An element `w` is stored as the weight `wρ`; the stabiliser of `ρ` is
//! trivial, so this is a faithful canonical form and equality is structural.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::cartan::{CartanDatum, Weight, WeylWord};
use crate::error::{Error, Result};

/// Raising steps allowed before a weight is declared outside every finite orbit.
const RAISE_LIMIT: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    rho_image: Weight,
}

impl WeylElement {
    pub fn identity(cartan: &CartanDatum) -> Self {
        Self { rho_image: cartan.rho() }
    }

    pub fn from_word(cartan: &CartanDatum, word: &WeylWord) -> Self {
        Self { rho_image: cartan.apply_word(word, &cartan.rho()) }
    }

    pub fn rho_image(&self) -> &Weight {
        &self.rho_image
    }

    pub fn is_identity(&self, cartan: &CartanDatum) -> bool {
        self.rho_image == cartan.rho()
    }

    /// `ℓ(s_i w) < ℓ(w)`.
    pub fn has_left_descent(&self, cartan: &CartanDatum, i: usize) -> bool {
        cartan.pair(i, &self.rho_image) < 0
    }

    pub fn left_descents(&self, cartan: &CartanDatum) -> Vec<usize> {
        (0..cartan.rank()).filter(|&i| self.has_left_descent(cartan, i)).collect()
    }

    /// `s_i w`.
    pub fn left_mul(&self, cartan: &CartanDatum, i: usize) -> Self {
        Self { rho_image: cartan.simple_reflection(i, &self.rho_image) }
    }

    /// A reduced word, the lexicographically first one read from the left.
    pub fn reduced_word(&self, cartan: &CartanDatum) -> WeylWord {
        let mut letters = Vec::new();
        let mut cur = self.clone();
        while let Some(i) = (0..cartan.rank()).find(|&i| cur.has_left_descent(cartan, i)) {
            letters.push(i);
            cur = cur.left_mul(cartan, i);
        }
        WeylWord::new(letters)
    }

    pub fn length(&self, cartan: &CartanDatum) -> usize {
        self.reduced_word(cartan).len()
    }

    /// Every reduced word of the element.
    pub fn reduced_words(&self, cartan: &CartanDatum) -> Vec<WeylWord> {
        let mut memo = BTreeMap::new();
        let mut out: Vec<WeylWord> = reduced_words_rec(cartan, self, &mut memo).into_iter().map(WeylWord::new).collect();
        out.sort();
        out
    }
}

fn reduced_words_rec(
    cartan: &CartanDatum,
    w: &WeylElement,
    memo: &mut BTreeMap<WeylElement, Vec<Vec<usize>>>,
) -> Vec<Vec<usize>> {
    if let Some(words) = memo.get(w) {
        return words.clone();
    }
    let descents = w.left_descents(cartan);
    let words = if descents.is_empty() {
        vec![Vec::new()]
    } else {
        let mut words = Vec::new();
        for i in descents {
            for tail in reduced_words_rec(cartan, &w.left_mul(cartan, i), memo) {
                let mut word = vec![i];
                word.extend(tail);
                words.push(word);
            }
        }
        words
    };
    memo.insert(w.clone(), words.clone());
    words
}

/// Bruhat order on elements, by the lifting recursion on a left descent of `w`.
pub fn bruhat_leq_elements(cartan: &CartanDatum, u: &WeylElement, w: &WeylElement) -> bool {
    let mut u = u.clone();
    let mut w = w.clone();
    loop {
        let Some(i) = (0..cartan.rank()).find(|&i| w.has_left_descent(cartan, i)) else {
            return u.is_identity(cartan);
        };
        if u.has_left_descent(cartan, i) {
            u = u.left_mul(cartan, i);
        }
        w = w.left_mul(cartan, i);
    }
}

/// Bruhat order on reduced words.
pub fn bruhat_leq(cartan: &CartanDatum, u: &WeylWord, w: &WeylWord) -> Result<bool> {
    cartan.check_reduced(u)?;
    cartan.check_reduced(w)?;
    Ok(bruhat_leq_elements(cartan, &WeylElement::from_word(cartan, u), &WeylElement::from_word(cartan, w)))
}

/// Raises `mu` to the dominant chamber, always reflecting at the lowest
/// index with a negative pairing. Returns the dominant weight `λ` and the
/// minimal word `w_μ` with `μ = w_μ λ`.
pub fn raise_to_dominant(cartan: &CartanDatum, mu: &Weight) -> Result<(Weight, WeylWord)> {
    if mu.rank() != cartan.rank() {
        return Err(Error::DimensionMismatch { expected: cartan.rank(), got: mu.rank() });
    }
    let mut cur = mu.clone();
    let mut letters = Vec::new();
    while let Some(i) = (0..cartan.rank()).find(|&i| cartan.pair(i, &cur) < 0) {
        if letters.len() >= RAISE_LIMIT {
            return Err(Error::NotInOrbit);
        }
        cur = cartan.simple_reflection(i, &cur);
        letters.push(i);
    }
    Ok((cur, WeylWord::new(letters)))
}

/// The minimal word `w_μ` with `μ = w_μ λ`, checking that `μ ∈ Wλ`.
pub fn orbit_word(cartan: &CartanDatum, mu: &Weight, lambda: &Weight) -> Result<WeylWord> {
    let (top, word) = raise_to_dominant(cartan, mu)?;
    if &top != lambda {
        return Err(Error::NotInOrbit);
    }
    Ok(word)
}

/// `μ ⪯ ζ` in the orbit `Wλ`, i.e. `w_ζ ≤ w_μ` for minimal representatives.
pub fn preceq(cartan: &CartanDatum, mu: &Weight, zeta: &Weight, lambda: &Weight) -> Result<bool> {
    if lambda.rank() != cartan.rank() {
        return Err(Error::DimensionMismatch { expected: cartan.rank(), got: lambda.rank() });
    }
    if !cartan.is_dominant(lambda) {
        return Err(Error::NotDominant);
    }
    let w_mu = orbit_word(cartan, mu, lambda)?;
    let w_zeta = orbit_word(cartan, zeta, lambda)?;
    Ok(bruhat_leq_elements(cartan, &WeylElement::from_word(cartan, &w_zeta), &WeylElement::from_word(cartan, &w_mu)))
}

/// All group elements, by breadth-first search; fails past `limit` elements.
pub fn enumerate_group(cartan: &CartanDatum, limit: usize) -> Result<Vec<WeylElement>> {
    let start = WeylElement::identity(cartan);
    let mut seen = BTreeSet::new();
    seen.insert(start.clone());
    let mut order = vec![start.clone()];
    let mut queue = VecDeque::from([start]);
    while let Some(w) = queue.pop_front() {
        for i in 0..cartan.rank() {
            if w.has_left_descent(cartan, i) {
                continue;
            }
            let next = w.left_mul(cartan, i);
            if seen.insert(next.clone()) {
                if seen.len() > limit {
                    return Err(Error::GroupTooLarge(limit));
                }
                order.push(next.clone());
                queue.push_back(next);
            }
        }
    }
    Ok(order)
}

/// The orbit `Wλ` of a dominant weight, sorted.
pub fn orbit(cartan: &CartanDatum, lambda: &Weight, limit: usize) -> Result<Vec<Weight>> {
    if !cartan.is_dominant(lambda) {
        return Err(Error::NotDominant);
    }
    let mut seen = BTreeSet::new();
    seen.insert(lambda.clone());
    let mut queue = VecDeque::from([lambda.clone()]);
    while let Some(mu) = queue.pop_front() {
        for i in 0..cartan.rank() {
            if cartan.pair(i, &mu) > 0 {
                let next = cartan.simple_reflection(i, &mu);
                if seen.insert(next.clone()) {
                    if seen.len() > limit {
                        return Err(Error::GroupTooLarge(limit));
                    }
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// The longest element, if the group is finite and has at most `limit` elements.
pub fn longest_element(cartan: &CartanDatum, limit: usize) -> Result<WeylElement> {
    let group = enumerate_group(cartan, limit)?;
    Ok(group.into_iter().max_by_key(|w| w.length(cartan)).expect("group is nonempty"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> CartanDatum {
        CartanDatum::by_name("A2").unwrap()
    }

    fn word(letters: &[usize]) -> WeylWord {
        WeylWord::new(letters.to_vec())
    }

    #[test]
    fn group_orders() {
        assert_eq!(enumerate_group(&a2(), 100).unwrap().len(), 6);
        assert_eq!(enumerate_group(&CartanDatum::by_name("A3").unwrap(), 100).unwrap().len(), 24);
        assert_eq!(enumerate_group(&CartanDatum::by_name("D4").unwrap(), 1000).unwrap().len(), 192);
        let affine = CartanDatum::new(vec![vec![2, -2], vec![-2, 2]]).unwrap();
        assert_eq!(enumerate_group(&affine, 50), Err(Error::GroupTooLarge(50)));
    }

    #[test]
    fn bruhat_examples() {
        let c = a2();
        assert!(bruhat_leq(&c, &word(&[0]), &word(&[0, 1, 0])).unwrap());
        assert!(bruhat_leq(&c, &word(&[0, 1]), &word(&[0, 1])).unwrap());
        assert!(!bruhat_leq(&c, &word(&[0, 1]), &word(&[1, 0])).unwrap());
        assert_eq!(bruhat_leq(&c, &word(&[0, 0]), &word(&[0])), Err(Error::NonReducedWord(vec![0, 0])));
    }

    #[test]
    fn preceq_examples() {
        let c = a2();
        let w1 = c.fundamental(0);
        let minus_w2 = c.apply_word(&word(&[0, 1, 0]), &w1);
        assert!(preceq(&c, &minus_w2, &w1, &w1).unwrap());
        assert!(preceq(&c, &w1, &w1, &w1).unwrap());
        let s1w1 = c.simple_reflection(0, &w1);
        assert!(!preceq(&c, &w1, &s1w1, &w1).unwrap());
        assert_eq!(preceq(&c, &c.fundamental(1), &w1, &w1), Err(Error::NotInOrbit));
        assert_eq!(preceq(&c, &w1, &w1, &-&w1), Err(Error::NotDominant));
    }

    #[test]
    fn raising_gives_minimal_word() {
        let c = a2();
        let mu = c.apply_word(&word(&[0, 1, 0]), &c.fundamental(0));
        let (top, w) = raise_to_dominant(&c, &mu).unwrap();
        assert_eq!(top, c.fundamental(0));
        assert_eq!(w.len(), 2);
        assert_eq!(c.apply_word(&w, &top), mu);
        assert!(c.is_reduced(&w));
    }

    #[test]
    fn reduced_words_of_longest() {
        let c = a2();
        let w0 = longest_element(&c, 100).unwrap();
        assert_eq!(w0.reduced_words(&c), vec![word(&[0, 1, 0]), word(&[1, 0, 1])]);
        let a3 = CartanDatum::by_name("A3").unwrap();
        assert_eq!(longest_element(&a3, 100).unwrap().reduced_words(&a3).len(), 16);
    }

    #[test]
    fn orbit_sizes() {
        let c = a2();
        assert_eq!(orbit(&c, &c.fundamental(0), 100).unwrap().len(), 3);
        let a3 = CartanDatum::by_name("A3").unwrap();
        assert_eq!(orbit(&a3, &a3.fundamental(1), 100).unwrap().len(), 6);
    }
}
