//! Three-term alternating relations among maximal minors.
//!
//! These hold for every matrix, with no conditions on the entries; they
//! are what makes the closed formulas collapse.

use serde_json::json;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rational::Rational;

use super::IdentityReport;

/// Minor of `m` with the listed 1-based rows removed.
fn minor(m: &Matrix, drop_rows: &[usize]) -> Result<Rational> {
    let zero_based: Vec<usize> = drop_rows.iter().map(|r| r - 1).collect();
    m.minor_removing(&zero_based, &[]).det()
}

/// For an n x (n-1) matrix W (n >= 3) with row minors W_p and minors
/// V_{pq} of W-without-last-column:
/// V_{n-2,n-1} W_n - V_{n-2,n} W_{n-1} + V_{n-1,n} W_{n-2} = 0.
pub fn plucker_a(w: &Matrix) -> Result<IdentityReport> {
    let n = w.rows();
    if n < 3 || w.cols() + 1 != n {
        return Err(Error::ShapeError {
            expected: "n x (n-1) with n >= 3".into(),
            got: format!("{}x{}", w.rows(), w.cols()),
        });
    }
    let v = w.minor_removing(&[], &[w.cols() - 1]);
    let residual = &minor(&v, &[n - 2, n - 1])? * &minor(w, &[n])?
        - &minor(&v, &[n - 2, n])? * &minor(w, &[n - 1])?
        + &minor(&v, &[n - 1, n])? * &minor(w, &[n - 2])?;
    Ok(IdentityReport::new(
        "plucker-a",
        json!({ "n": n }),
        residual,
    ))
}

/// For an n x (n-2) matrix V (n >= 4) with minors V_{pq} and any
/// 1 <= i < n-2:
/// V_{n-2,n-1} V_{i,n} - V_{n-2,n} V_{i,n-1} + V_{n-1,n} V_{i,n-2} = 0.
pub fn plucker_b(v: &Matrix, i: usize) -> Result<IdentityReport> {
    let n = v.rows();
    if n < 4 || v.cols() + 2 != n {
        return Err(Error::ShapeError {
            expected: "n x (n-2) with n >= 4".into(),
            got: format!("{}x{}", v.rows(), v.cols()),
        });
    }
    if i < 1 || i >= n - 2 {
        return Err(Error::BadIndex {
            context: format!("need 1 <= i < n-2 = {}, got {i}", n - 2),
        });
    }
    let residual = &minor(v, &[n - 2, n - 1])? * &minor(v, &[i, n])?
        - &minor(v, &[n - 2, n])? * &minor(v, &[i, n - 1])?
        + &minor(v, &[n - 1, n])? * &minor(v, &[i, n - 2])?;
    Ok(IdentityReport::new(
        "plucker-b",
        json!({ "n": n, "i": i }),
        residual,
    ))
}
