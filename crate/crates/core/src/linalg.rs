//! Exact Gaussian elimination over the rationals.

use num_traits::Zero;
use thiserror::Error;

use crate::arith::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("system is inconsistent: equation {row} has nonzero residual")]
    Inconsistent { row: usize },
    #[error("system is underdetermined: rank {rank} < {unknowns} unknowns")]
    Underdetermined { rank: usize, unknowns: usize },
    #[error("matrix rows have unequal lengths or do not match the right-hand side")]
    Shape,
}

/// Row-reduces `m` in place. Returns the pivot column of each pivot row.
///
/// For each column the pivot is the first row (in index order, among the
/// rows not yet used) with a nonzero entry.
fn row_reduce(m: &mut [Vec<Rational>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut next_row = 0;
    for col in 0..cols {
        let Some(p) = (next_row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(next_row, p);
        let inv = m[next_row][col].recip();
        for v in m[next_row].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = m[next_row].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == next_row || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &factor * p;
                }
            }
        }
        pivots.push(col);
        next_row += 1;
        if next_row == m.len() {
            break;
        }
    }
    pivots
}

/// Rank of a rational matrix given as rows.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut m = rows.to_vec();
    row_reduce(&mut m, cols).len()
}

/// Solves `A x = b` exactly for a system that may have more equations than
/// unknowns. The unique solution is returned; every equation, including the
/// ones not used as pivots, is checked to hold exactly.
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Result<Vec<Rational>, SolveError> {
    if a.len() != b.len() {
        return Err(SolveError::Shape);
    }
    let unknowns = a.first().map_or(0, Vec::len);
    if a.iter().any(|row| row.len() != unknowns) {
        return Err(SolveError::Shape);
    }
    let mut aug: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = row_reduce(&mut aug, unknowns);
    if pivots.len() < unknowns {
        // An inconsistent system is reported as such even when it is also rank-deficient.
        let mut probe = aug.clone();
        let full = row_reduce(&mut probe, unknowns + 1);
        if full.contains(&unknowns) {
            return Err(SolveError::Inconsistent { row: first_residual(a, b, None) });
        }
        return Err(SolveError::Underdetermined { rank: pivots.len(), unknowns });
    }
    let x: Vec<Rational> = (0..unknowns).map(|i| aug[i][unknowns].clone()).collect();
    let residual_row = first_residual(a, b, Some(&x));
    if residual_row < a.len() {
        return Err(SolveError::Inconsistent { row: residual_row });
    }
    Ok(x)
}

/// Index of the first equation not satisfied by `x` (or `a.len()` if all hold).
/// With `x = None`, returns the first equation whose right side is nonzero.
fn first_residual(a: &[Vec<Rational>], b: &[Rational], x: Option<&[Rational]>) -> usize {
    (0..a.len())
        .find(|&r| match x {
            Some(x) => {
                let lhs = a[r].iter().zip(x).fold(Rational::zero(), |acc, (c, v)| acc + c * v);
                lhs != b[r]
            }
            None => !b[r].is_zero(),
        })
        .unwrap_or(a.len())
}
