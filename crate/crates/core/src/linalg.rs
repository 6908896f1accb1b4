//! Dense Gaussian elimination over any [`Scalar`] field.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Solves `a · x = b` for every column of `b`. `a` is square, row-major.
/// Pivots on the entry of largest magnitude, which is exact for rational
/// types and the usual partial pivoting for floats.
pub fn solve<S: Scalar>(mut a: Vec<Vec<S>>, mut b: Vec<Vec<S>>) -> Result<Vec<Vec<S>>> {
    let n = a.len();
    if b.len() != n || a.iter().any(|row| row.len() != n) {
        return Err(Error::internal("linear system has mismatched dimensions"));
    }
    let cols = b.first().map_or(0, Vec::len);
    for col in 0..n {
        let pivot = (col..n)
            .filter(|&r| !a[r][col].is_zero())
            .max_by(|&r, &s| {
                a[r][col]
                    .abs()
                    .partial_cmp(&a[s][col].abs())
                    .unwrap_or(std::cmp::Ordering::Equal)
            })
            .ok_or(Error::Singular)?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone() / a[col][col].clone();
            for c in col..n {
                let d = f.clone() * a[col][c].clone();
                a[r][c] = a[r][c].clone() - d;
            }
            for c in 0..cols {
                let d = f.clone() * b[col][c].clone();
                b[r][c] = b[r][c].clone() - d;
            }
        }
    }
    let mut x = vec![vec![S::zero(); cols]; n];
    for r in (0..n).rev() {
        for c in 0..cols {
            let mut acc = b[r][c].clone();
            for k in r + 1..n {
                acc = acc - a[r][k].clone() * x[k][c].clone();
            }
            x[r][c] = acc / a[r][r].clone();
        }
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn r(n: i64, d: i64) -> Rational {
        Rational::ratio(n, d)
    }

    #[test]
    fn exact_solution_has_zero_residual() {
        let a = vec![
            vec![r(2, 1), r(1, 1), r(0, 1)],
            vec![r(1, 1), r(3, 1), r(1, 1)],
            vec![r(0, 1), r(1, 1), r(4, 1)],
        ];
        let b = vec![vec![r(1, 1)], vec![r(2, 1)], vec![r(3, 1)]];
        let x = solve(a.clone(), b.clone()).unwrap();
        for i in 0..3 {
            let lhs = (0..3).fold(r(0, 1), |acc, j| acc + a[i][j].clone() * x[j][0].clone());
            assert_eq!(lhs, b[i][0]);
        }
    }

    #[test]
    fn singular_is_reported() {
        let a = vec![vec![r(1, 1), r(2, 1)], vec![r(2, 1), r(4, 1)]];
        let b = vec![vec![r(1, 1)], vec![r(1, 1)]];
        assert_eq!(solve(a, b), Err(Error::Singular));
    }

    #[test]
    fn floats_agree_approximately() {
        let a: Vec<Vec<f64>> = vec![vec![4.0, 1.0], vec![1.0, 3.0]];
        let x = solve(a, vec![vec![1.0], vec![2.0]]).unwrap();
        assert!((x[0][0] - 1.0 / 11.0).abs() < 1e-12);
        assert!((x[1][0] - 7.0 / 11.0).abs() < 1e-12);
    }
}
