//! Dense Gaussian elimination, once over exact rationals and once over f64.
//!
//! Row updates skip structurally-zero entries, so the banded systems coming
//! from paths and cycles solve in near-linear time even though the storage
//! is dense. Pivoting picks the largest entry in the column (exact
//! comparison of |numerator|/denominator for the rational path), which is
//! enough to keep intermediate fractions from ballooning on the systems we
//! care about.

use num::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// |a| > |b| without leaving integer arithmetic.
fn abs_greater(a: &Rational, b: &Rational) -> bool {
    a.numer().abs() * b.denom() > b.numer().abs() * a.denom()
}

/// Solves `a * x = b` exactly. Consumes its inputs.
pub(crate) fn solve_exact(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Result<Vec<Rational>> {
    let n = a.len();
    debug_assert!(a.iter().all(|row| row.len() == n));
    debug_assert_eq!(b.len(), n);

    for col in 0..n {
        let mut pivot: Option<usize> = None;
        for r in col..n {
            if a[r][col].is_zero() {
                continue;
            }
            match pivot {
                None => pivot = Some(r),
                Some(p) => {
                    if abs_greater(&a[r][col], &a[p][col]) {
                        pivot = Some(r);
                    }
                }
            }
        }
        let p = pivot.ok_or(Error::SingularSystem)?;
        a.swap(col, p);
        b.swap(col, p);

        let (pivot_rows, elim_rows) = a.split_at_mut(col + 1);
        let pivot_row = &pivot_rows[col];
        let (b_done, b_rest) = b.split_at_mut(col + 1);
        let b_pivot = &b_done[col];
        for (row, rhs) in elim_rows.iter_mut().zip(b_rest.iter_mut()) {
            if row[col].is_zero() {
                continue;
            }
            let factor = &row[col] / &pivot_row[col];
            row[col] = Rational::zero();
            for (entry, pivot_entry) in row[col + 1..].iter_mut().zip(&pivot_row[col + 1..]) {
                if pivot_entry.is_zero() {
                    continue;
                }
                *entry -= &factor * pivot_entry;
            }
            *rhs -= &factor * b_pivot;
        }
    }

    let mut x = vec![Rational::zero(); n];
    for i in (0..n).rev() {
        let mut acc = b[i].clone();
        for j in i + 1..n {
            if a[i][j].is_zero() || x[j].is_zero() {
                continue;
            }
            acc -= &a[i][j] * &x[j];
        }
        x[i] = acc / &a[i][i];
    }
    Ok(x)
}

/// Solves `a * x = b` in double precision.
pub(crate) fn solve_f64(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Result<Vec<f64>> {
    let n = a.len();
    for col in 0..n {
        let mut pivot = col;
        for r in col + 1..n {
            if a[r][col].abs() > a[pivot][col].abs() {
                pivot = r;
            }
        }
        if a[pivot][col] == 0.0 {
            return Err(Error::SingularSystem);
        }
        a.swap(col, pivot);
        b.swap(col, pivot);

        let (pivot_rows, elim_rows) = a.split_at_mut(col + 1);
        let pivot_row = &pivot_rows[col];
        let (b_done, b_rest) = b.split_at_mut(col + 1);
        let b_pivot = b_done[col];
        for (row, rhs) in elim_rows.iter_mut().zip(b_rest.iter_mut()) {
            if row[col] == 0.0 {
                continue;
            }
            let factor = row[col] / pivot_row[col];
            row[col] = 0.0;
            for (entry, pivot_entry) in row[col + 1..].iter_mut().zip(&pivot_row[col + 1..]) {
                if *pivot_entry != 0.0 {
                    *entry -= factor * pivot_entry;
                }
            }
            *rhs -= factor * b_pivot;
        }
    }

    let mut x = vec![0.0; n];
    for i in (0..n).rev() {
        let mut acc = b[i];
        for j in i + 1..n {
            acc -= a[i][j] * x[j];
        }
        x[i] = acc / a[i][i];
    }
    Ok(x)
}

/// Max-norm of `a * x - b`, used as the residual report for the f64 path.
pub(crate) fn residual_f64(a: &[Vec<f64>], x: &[f64], b: &[f64]) -> f64 {
    let mut worst = 0.0f64;
    for (row, rhs) in a.iter().zip(b) {
        let dot: f64 = row.iter().zip(x).map(|(c, v)| c * v).sum();
        worst = worst.max((dot - rhs).abs());
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{fraction, integer};

    #[test]
    fn exact_two_by_two() {
        // x + y/2 = 2, x/3 + y = 1  =>  x = 9/5, y = 2/5
        let a = vec![
            vec![integer(1), fraction(1, 2)],
            vec![fraction(1, 3), integer(1)],
        ];
        let b = vec![integer(2), integer(1)];
        let x = solve_exact(a, b).unwrap();
        assert_eq!(x, vec![fraction(9, 5), fraction(2, 5)]);
    }

    #[test]
    fn exact_detects_singular() {
        let a = vec![
            vec![integer(1), integer(2)],
            vec![integer(2), integer(4)],
        ];
        let b = vec![integer(1), integer(2)];
        assert_eq!(solve_exact(a, b), Err(Error::SingularSystem));
    }

    #[test]
    fn exact_needs_row_swap() {
        // zero pivot in the first column forces a swap
        let a = vec![
            vec![integer(0), integer(1)],
            vec![integer(1), integer(0)],
        ];
        let b = vec![integer(3), integer(5)];
        let x = solve_exact(a, b).unwrap();
        assert_eq!(x, vec![integer(5), integer(3)]);
    }

    #[test]
    fn float_matches_exact() {
        let a = vec![
            vec![1.0, 0.5],
            vec![1.0 / 3.0, 1.0],
        ];
        let b = vec![2.0, 1.0];
        let copy = a.clone();
        let x = solve_f64(a, b.clone()).unwrap();
        assert!((x[0] - 1.8).abs() < 1e-12);
        assert!((x[1] - 0.4).abs() < 1e-12);
        assert!(residual_f64(&copy, &x, &b) < 1e-12);
    }
}
