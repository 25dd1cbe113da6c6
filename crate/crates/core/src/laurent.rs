//! Integer Laurent polynomials in one indeterminate.
//!
//! The same type serves for values in `Z[q^{±1}]` (minor values, A_q(n)
//! coefficients) and in `Z[v^{±1}]` with `v = q^{1/2}` (quantum torus
//! coefficients); the indeterminate is fixed by context.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

/// `Σ coeffs[k] x^(low + k)`, normalized so that the first and last stored
/// coefficients are nonzero. The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Laurent {
    low: i64,
    coeffs: Vec<i64>,
}

impl Laurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(0, c)
    }

    /// `c·x^e`.
    pub fn monomial(e: i64, c: i64) -> Self {
        if c == 0 {
            return Self::zero();
        }
        Self { low: e, coeffs: vec![c] }
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I: IntoIterator<Item = (i64, i64)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (e, c) in terms {
            out += &Self::monomial(e, c);
        }
        out
    }

    fn from_raw(low: i64, coeffs: Vec<i64>) -> Self {
        let mut p = Self { low, coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|&&c| c == 0).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs == [1]
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn min_degree(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn max_degree(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, e: i64) -> i64 {
        let k = e - self.low;
        if k < 0 {
            return 0;
        }
        self.coeffs.get(k as usize).copied().unwrap_or(0)
    }

    /// Nonzero terms as `(exponent, coefficient)`, increasing in exponent.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(move |(k, &c)| (self.low + k as i64, c))
    }

    /// If this is `c·x^e`, returns `(e, c)`.
    pub fn as_monomial(&self) -> Option<(i64, i64)> {
        (self.coeffs.len() == 1).then(|| (self.low, self.coeffs[0]))
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: i64) -> Self {
        Self::from_raw(self.low, self.coeffs.iter().map(|&a| a * c).collect())
    }

    /// The bar involution `x ↦ x^{-1}`.
    pub fn bar(&self) -> Self {
        match self.max_degree() {
            None => Self::zero(),
            Some(hi) => {
                let mut coeffs = self.coeffs.clone();
                coeffs.reverse();
                Self { low: -hi, coeffs }
            }
        }
    }

    /// Substitutes `x ↦ x^k` for `k > 0`; used to pass from `q` to `v = q^{1/2}`.
    pub fn dilate(&self, k: i64) -> Self {
        assert!(k > 0, "dilation factor must be positive");
        Self::from_terms(self.terms().map(|(e, c)| (e * k, c)))
    }

    /// Inverse of [`Laurent::dilate`]; `None` if some exponent is not divisible by `k`.
    pub fn contract(&self, k: i64) -> Option<Self> {
        assert!(k > 0, "contraction factor must be positive");
        if self.terms().any(|(e, _)| e % k != 0) {
            return None;
        }
        Some(Self::from_terms(self.terms().map(|(e, c)| (e / k, c))))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Value at `x = 1`.
    pub fn eval_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// Quantum integer `[n] = (x^n - x^{-n}) / (x - x^{-1})`, defined for all `n ∈ Z`.
    pub fn quantum_int(n: i64) -> Self {
        if n == 0 {
            return Self::zero();
        }
        let m = n.abs();
        let sign = n.signum();
        // x^{m-1} + x^{m-3} + ... + x^{1-m}
        let mut coeffs = vec![0; (2 * m - 1) as usize];
        for k in (0..coeffs.len()).step_by(2) {
            coeffs[k] = sign;
        }
        Self::from_raw(1 - m, coeffs)
    }

    /// `[n]! = [1][2]⋯[n]`.
    pub fn quantum_factorial(n: u32) -> Self {
        (1..=n as i64).fold(Self::one(), |acc, k| &acc * &Self::quantum_int(k))
    }

    /// Exact division; `None` when `divisor` does not divide `self` in `Z[x^{±1}]`.
    pub fn div_exact(&self, divisor: &Laurent) -> Option<Laurent> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (q, r) = poly_divrem(&self.coeffs, &divisor.coeffs)?;
        if r.iter().any(|&c| c != 0) {
            return None;
        }
        Some(Self::from_raw(self.low - divisor.low, q))
    }

    pub fn display_in<'a>(&'a self, var: &'a str) -> LaurentDisplay<'a> {
        LaurentDisplay { poly: self, var }
    }

    pub(crate) fn raw_coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub(crate) fn low(&self) -> i64 {
        self.low
    }

    pub(crate) fn from_parts(low: i64, coeffs: Vec<i64>) -> Self {
        Self::from_raw(low, coeffs)
    }
}

/// Long division of dense polynomials (lowest coefficient first), exact over Z.
/// Returns `None` if an integer division step is inexact.
fn poly_divrem(num: &[i64], den: &[i64]) -> Option<(Vec<i64>, Vec<i64>)> {
    let mut rem = num.to_vec();
    if rem.len() < den.len() {
        return Some((Vec::new(), rem));
    }
    let lead = *den.last().unwrap();
    let mut quo = vec![0i64; rem.len() - den.len() + 1];
    for k in (0..quo.len()).rev() {
        let top = rem[k + den.len() - 1];
        if top == 0 {
            continue;
        }
        if top % lead != 0 {
            return None;
        }
        let c = top / lead;
        quo[k] = c;
        for (j, &d) in den.iter().enumerate() {
            rem[k + j] -= c * d;
        }
    }
    Some((quo, rem))
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_in("x"))
    }
}

pub struct LaurentDisplay<'a> {
    poly: &'a Laurent,
    var: &'a str,
}

impl fmt::Display for LaurentDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.poly.terms().collect::<Vec<_>>().into_iter().rev() {
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", sign)?;
            }
            first = false;
            let a = c.abs();
            match e {
                0 => write!(f, "{}", a)?,
                _ => {
                    if a != 1 {
                        write!(f, "{}", a)?;
                    }
                    if e == 1 {
                        write!(f, "{}", self.var)?;
                    } else {
                        write!(f, "{}^{}", self.var, e)?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl PartialOrd for Laurent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Laurent {
    fn cmp(&self, other: &Self) -> Ordering {
        self.low.cmp(&other.low).then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl<'a> Add<&'a Laurent> for &'a Laurent {
    type Output = Laurent;
    fn add(self, rhs: &Laurent) -> Laurent {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let hi = self.max_degree().unwrap().max(rhs.max_degree().unwrap());
        let mut coeffs = vec![0; (hi - low + 1) as usize];
        for (k, &c) in self.coeffs.iter().enumerate() {
            coeffs[(self.low - low) as usize + k] += c;
        }
        for (k, &c) in rhs.coeffs.iter().enumerate() {
            coeffs[(rhs.low - low) as usize + k] += c;
        }
        Laurent::from_raw(low, coeffs)
    }
}

impl Add for Laurent {
    type Output = Laurent;
    fn add(self, rhs: Laurent) -> Laurent {
        &self + &rhs
    }
}

impl AddAssign<&Laurent> for Laurent {
    fn add_assign(&mut self, rhs: &Laurent) {
        *self = &*self + rhs;
    }
}

impl AddAssign for Laurent {
    fn add_assign(&mut self, rhs: Laurent) {
        *self = &*self + &rhs;
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        Laurent { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        -&self
    }
}

impl<'a> Sub<&'a Laurent> for &'a Laurent {
    type Output = Laurent;
    fn sub(self, rhs: &Laurent) -> Laurent {
        self + &(-rhs)
    }
}

impl Sub for Laurent {
    type Output = Laurent;
    fn sub(self, rhs: Laurent) -> Laurent {
        &self - &rhs
    }
}

impl SubAssign<&Laurent> for Laurent {
    fn sub_assign(&mut self, rhs: &Laurent) {
        *self = &*self - rhs;
    }
}

impl<'a> Mul<&'a Laurent> for &'a Laurent {
    type Output = Laurent;
    fn mul(self, rhs: &Laurent) -> Laurent {
        if self.is_zero() || rhs.is_zero() {
            return Laurent::zero();
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Laurent::from_raw(self.low + rhs.low, coeffs)
    }
}

impl Mul for Laurent {
    type Output = Laurent;
    fn mul(self, rhs: Laurent) -> Laurent {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(e: i64) -> Laurent {
        Laurent::monomial(e, 1)
    }

    #[test]
    fn quantum_integers() {
        assert_eq!(Laurent::quantum_int(1), Laurent::one());
        assert_eq!(Laurent::quantum_int(2), &q(1) + &q(-1));
        assert_eq!(Laurent::quantum_int(-2), -(&q(1) + &q(-1)));
        assert!(Laurent::quantum_int(0).is_zero());
        // [3]! = [2][3]
        let f3 = Laurent::quantum_factorial(3);
        assert_eq!(f3, &Laurent::quantum_int(2) * &Laurent::quantum_int(3));
        assert_eq!(f3.eval_one(), 6);
    }

    #[test]
    fn exact_division() {
        let a = &Laurent::quantum_int(3) * &Laurent::quantum_int(2).shift(-4);
        assert_eq!(a.div_exact(&Laurent::quantum_int(3)), Some(Laurent::quantum_int(2).shift(-4)));
        assert_eq!(Laurent::one().div_exact(&Laurent::quantum_int(2)), None);
        assert_eq!(Laurent::constant(3).div_exact(&Laurent::constant(2)), None);
        assert_eq!(Laurent::zero().div_exact(&Laurent::zero()), None);
    }

    #[test]
    fn bar_and_display() {
        let p = Laurent::from_terms([(2, 3), (-1, -1)]);
        assert_eq!(p.bar(), Laurent::from_terms([(-2, 3), (1, -1)]));
        assert_eq!(alloc::format!("{}", p.display_in("q")), "3q^2 - q^-1");
        assert_eq!(alloc::format!("{}", Laurent::zero().display_in("q")), "0");
    }

    fn arb_laurent() -> impl Strategy<Value = Laurent> {
        (-4i64..4, proptest::collection::vec(-3i64..4, 0..5))
            .prop_map(|(low, c)| Laurent::from_parts(low, c))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_laurent(), b in arb_laurent(), c in arb_laurent()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a - &a, Laurent::zero());
            prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
        }

        #[test]
        fn division_inverts_multiplication(a in arb_laurent(), b in arb_laurent()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).div_exact(&b), Some(a));
        }
    }
}
