//! Linear systems over `Z[q^{±1}]` by fraction-free (Bareiss) elimination.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::laurent::Laurent;
use crate::rational::RationalQ;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    /// The unique solution, one entry per unknown.
    Unique(Vec<RationalQ>),
    /// Inconsistent; `row` is an equation that cannot be satisfied.
    Inconsistent { row: usize },
    /// Consistent with a nontrivial kernel; `free` is an unknown without pivot.
    Underdetermined { free: usize },
}

/// Solves `a x = b`, where `a` has one row per equation.
pub fn solve(a: &[Vec<Laurent>], b: &[Laurent]) -> Result<Solution> {
    let rows = a.len();
    assert_eq!(rows, b.len(), "one right-hand side per equation");
    let cols = a.first().map_or(0, |r| r.len());
    // augmented matrix, remembering the original index of each row
    let mut m: Vec<Vec<Laurent>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            assert_eq!(row.len(), cols, "ragged matrix");
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut origin: Vec<usize> = (0..rows).collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut prev = Laurent::one();
    let mut top = 0;
    let mut free = None;
    for c in 0..cols {
        let Some(p) = (top..rows).filter(|&r| !m[r][c].is_zero()).min_by_key(|&r| m[r][c].raw_coeffs().len()) else {
            free.get_or_insert(c);
            continue;
        };
        m.swap(top, p);
        origin.swap(top, p);
        let pivot_row = m[top].clone();
        let pivot = pivot_row[c].clone();
        for r in top + 1..rows {
            let factor = m[r][c].clone();
            for j in c..=cols {
                let num = &(&pivot * &m[r][j]) - &(&factor * &pivot_row[j]);
                m[r][j] = num.div_exact(&prev).ok_or(Error::NonLaurentResult)?;
            }
        }
        pivots.push((top, c));
        prev = pivot;
        top += 1;
        if top == rows {
            break;
        }
    }
    if let Some(r) = (top..rows).find(|&r| !m[r][cols].is_zero()) {
        return Ok(Solution::Inconsistent { row: origin[r] });
    }
    let unpivoted = || (0..cols).find(|c| pivots.iter().all(|&(_, pc)| pc != *c));
    if let Some(c) = free.or_else(unpivoted) {
        return Ok(Solution::Underdetermined { free: c });
    }
    let mut x = alloc::vec![RationalQ::zero(); cols];
    for &(r, c) in pivots.iter().rev() {
        let mut acc = RationalQ::from(m[r][cols].clone());
        for j in c + 1..cols {
            acc = &acc - &(&RationalQ::from(m[r][j].clone()) * &x[j]);
        }
        x[c] = &acc / &RationalQ::from(m[r][c].clone());
    }
    Ok(Solution::Unique(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn q(e: i64) -> Laurent {
        Laurent::monomial(e, 1)
    }

    #[test]
    fn unique_solution() {
        // [q 1; 1 q] x = [q^2 + 1; 2q]  has x = (q, 1)
        let a = vec![vec![q(1), q(0)], vec![q(0), q(1)]];
        let b = vec![&q(2) + &q(0), q(1).scale(2)];
        let Solution::Unique(x) = solve(&a, &b).unwrap() else { panic!() };
        assert_eq!(x[0].to_laurent(), Some(q(1)));
        assert_eq!(x[1].to_laurent(), Some(q(0)));
    }

    #[test]
    fn rational_solution() {
        let a = vec![vec![Laurent::quantum_int(2)]];
        let b = vec![q(0)];
        let Solution::Unique(x) = solve(&a, &b).unwrap() else { panic!() };
        assert_eq!(x[0].to_laurent(), None);
        assert_eq!(&x[0] * &RationalQ::from(Laurent::quantum_int(2)), RationalQ::one());
    }

    #[test]
    fn degenerate_systems() {
        let a = vec![vec![q(0), q(1)], vec![q(-1), q(0)]];
        assert_eq!(solve(&a, &[q(1), q(0)]).unwrap(), Solution::Underdetermined { free: 1 });
        assert_eq!(solve(&a, &[q(0), q(5)]).unwrap(), Solution::Inconsistent { row: 1 });
        let tall = vec![vec![q(0)], vec![q(2)]];
        assert_eq!(solve(&tall, &[q(1), q(3)]).unwrap(), Solution::Unique(vec![RationalQ::from(q(1))]));
        assert!(matches!(solve(&tall, &[q(1), q(4)]).unwrap(), Solution::Inconsistent { .. }));
    }
}
