//! Exact rational functions `num/den` over `Z[q^{±1}]`, kept in lowest terms.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use crate::laurent::Laurent;

/// A reduced fraction of Laurent polynomials. The denominator is a genuine
/// polynomial with nonzero constant term and positive leading coefficient.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalQ {
    num: Laurent,
    den: Laurent,
}

impl RationalQ {
    pub fn zero() -> Self {
        Self { num: Laurent::zero(), den: Laurent::one() }
    }

    pub fn one() -> Self {
        Self::from(Laurent::one())
    }

    /// `None` if `den` is zero.
    pub fn new(num: Laurent, den: Laurent) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(Self::zero());
        }
        // move the monomial part of den into num
        let num = num.shift(-den.low());
        let den_poly = den.raw_coeffs().to_vec();
        let g = poly_gcd(num.raw_coeffs(), &den_poly);
        let g = Laurent::from_parts(0, g);
        let mut num = num.div_exact(&g).expect("gcd divides numerator");
        let mut den = Laurent::from_parts(0, den_poly).div_exact(&g).expect("gcd divides denominator");
        if den.raw_coeffs().last().copied().unwrap_or(1) < 0 {
            num = -num;
            den = -den;
        }
        Some(Self { num, den })
    }

    pub fn numerator(&self) -> &Laurent {
        &self.num
    }

    pub fn denominator(&self) -> &Laurent {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The value as a Laurent polynomial, if the reduced denominator is 1.
    pub fn to_laurent(&self) -> Option<Laurent> {
        self.den.is_one().then(|| self.num.clone())
    }

    pub fn recip(&self) -> Option<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }
}

impl From<Laurent> for RationalQ {
    fn from(p: Laurent) -> Self {
        Self { num: p, den: Laurent::one() }
    }
}

impl fmt::Debug for RationalQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num.display_in("q"))
        } else {
            write!(f, "({}) / ({})", self.num.display_in("q"), self.den.display_in("q"))
        }
    }
}

impl Add for &RationalQ {
    type Output = RationalQ;
    fn add(self, rhs: &RationalQ) -> RationalQ {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RationalQ::new(num, &self.den * &rhs.den).unwrap()
    }
}

impl Sub for &RationalQ {
    type Output = RationalQ;
    fn sub(self, rhs: &RationalQ) -> RationalQ {
        self + &(-rhs)
    }
}

impl Neg for &RationalQ {
    type Output = RationalQ;
    fn neg(self) -> RationalQ {
        RationalQ { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &RationalQ {
    type Output = RationalQ;
    fn mul(self, rhs: &RationalQ) -> RationalQ {
        RationalQ::new(&self.num * &rhs.num, &self.den * &rhs.den).unwrap()
    }
}

/// Panics on division by zero.
impl Div for &RationalQ {
    type Output = RationalQ;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &RationalQ) -> RationalQ {
        self * &rhs.recip().expect("division by zero rational function")
    }
}

fn int_gcd(mut a: i64, mut b: i64) -> i64 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn content(p: &[i64]) -> i64 {
    p.iter().fold(0, |g, &c| int_gcd(g, c))
}

fn trim(p: &mut Vec<i64>) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

fn primitive_part(p: &[i64]) -> Vec<i64> {
    let c = content(p);
    let mut out: Vec<i64> = if c == 0 { p.to_vec() } else { p.iter().map(|&x| x / c).collect() };
    trim(&mut out);
    out
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) · a mod b`.
fn pseudo_rem(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut r = a.to_vec();
    let lb = *b.last().unwrap();
    let db = b.len() - 1;
    while r.len() > db && !r.is_empty() {
        let lr = *r.last().unwrap();
        let shift = r.len() - 1 - db;
        for x in r.iter_mut() {
            *x *= lb;
        }
        for (j, &c) in b.iter().enumerate() {
            r[shift + j] -= lr * c;
        }
        trim(&mut r);
        // keep coefficients small
        let c = content(&r);
        if c > 1 {
            for x in r.iter_mut() {
                *x /= c;
            }
        }
    }
    r
}

/// Gcd over `Z[x]` by the primitive remainder sequence; positive leading coefficient.
pub(crate) fn poly_gcd(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut a: Vec<i64> = a.to_vec();
    let mut b: Vec<i64> = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    if a.is_empty() {
        return normalize_sign(primitive_with_content(&b));
    }
    if b.is_empty() {
        return normalize_sign(primitive_with_content(&a));
    }
    let c = int_gcd(content(&a), content(&b));
    let mut a = primitive_part(&a);
    let mut b = primitive_part(&b);
    if a.len() < b.len() {
        core::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = pseudo_rem(&a, &b);
        a = b;
        b = primitive_part(&r);
    }
    let mut g: Vec<i64> = primitive_part(&a).into_iter().map(|x| x * c).collect();
    trim(&mut g);
    normalize_sign(g)
}

fn primitive_with_content(p: &[i64]) -> Vec<i64> {
    let mut out = p.to_vec();
    trim(&mut out);
    out
}

fn normalize_sign(mut g: Vec<i64>) -> Vec<i64> {
    if g.last().copied().unwrap_or(0) < 0 {
        for x in g.iter_mut() {
            *x = -*x;
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qi(n: i64) -> Laurent {
        Laurent::quantum_int(n)
    }

    #[test]
    fn reduces_common_factors() {
        let num = &qi(2) * &qi(3);
        let den = &qi(2).shift(5) * &Laurent::constant(1);
        let r = RationalQ::new(num, den).unwrap();
        assert_eq!(r.to_laurent(), Some(qi(3).shift(-5)));
    }

    #[test]
    fn field_operations() {
        let a = RationalQ::new(Laurent::one(), qi(2)).unwrap();
        let b = RationalQ::new(Laurent::one(), qi(3)).unwrap();
        let s = &(&a + &b) * &RationalQ::from(&qi(2) * &qi(3));
        assert_eq!(s.to_laurent(), Some(&qi(2) + &qi(3)));
        let d = &a / &a;
        assert_eq!(d.to_laurent(), Some(Laurent::one()));
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn gcd_with_integer_content() {
        let a = [2, 4, 2]; // 2(1+x)^2
        let b = [4, 4]; // 4(1+x)
        assert_eq!(poly_gcd(&a, &b), alloc::vec![2, 2]);
        let r = RationalQ::new(Laurent::constant(3), Laurent::constant(6)).unwrap();
        assert!(r.to_laurent().is_none());
        assert_eq!(r.denominator(), &Laurent::constant(2));
    }
}
