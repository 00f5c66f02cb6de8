//! The primed determinants c(n)'_i and c(n)''_i.
//!
//! Specializing the alternating sum to the index tuple (2, 3, ..., n) and
//! one particular matrix M makes the first determinant equal to c(n)_i,
//! names the next two c(n)'_i and c(n)''_i, and kills every later one (its
//! last column repeats an earlier one). The three-term corollary
//! c(n)_i - c(n)'_i + c(n)''_i = 0 follows. The double-primed value also
//! equals a single minor of the shifted matrix one size up, which is the
//! form the closed formulas consume; both routes are computed and must
//! agree.

use serde_json::json;

use crate::error::{Error, Result};
use crate::jacobi::JacobiScheme;
use crate::matrix::Matrix;
use crate::polynomial::Polynomial;
use crate::rational::Rational;

use super::{GeneratorAssignment, IdentityReport};

/// (c(n)'_i, c(n)''_i) for n >= 3, cross-checked against the minor form
/// of c(n)''_i.
pub fn c_primed(f: &Polynomial, n: usize, i: i64) -> Result<(Rational, Rational)> {
    if n < 3 {
        return Err(Error::BadIndex {
            context: format!("primed determinants need n >= 3, got {n}"),
        });
    }
    let g = GeneratorAssignment::from_polynomial(f)?;
    let deltas = special_deltas(&g, n, i)?;
    let c_prime = deltas[1].clone();
    let c_double_prime = deltas[2].clone();

    let scheme = JacobiScheme::from_polynomial(f)?;
    let big = scheme.c_matrix(n + 1, i - 2)?.matrix;
    // drop row n-2 and column n (1-based) of the n x n shifted matrix
    let minor = big.minor_removing(&[n - 3], &[n - 1]).det()?;
    if minor != c_double_prime {
        return Err(Error::CrossCheck {
            context: format!("c({n})''_{i} minor form"),
        });
    }
    Ok((c_prime, c_double_prime))
}

/// Corollary residual c(n)_i - c(n)'_i + c(n)''_i; exactly zero.
pub fn check_cor_2_9(f: &Polynomial, n: usize, i: i64) -> Result<IdentityReport> {
    let (c_prime, c_double_prime) = c_primed(f, n, i)?;
    let c_i = JacobiScheme::from_polynomial(f)?.c_det(n, i)?;
    let residual = c_i - c_prime + c_double_prime;
    Ok(IdentityReport::new(
        "three-term-corollary",
        json!({ "n": n, "i": i }),
        residual,
    ))
}

/// All n determinants Delta_1..Delta_n of the specialized sum at level
/// n - 1 (so each is (n-1) x (n-1)); Delta_1 = c(n)_i and Delta_j = 0 for
/// j >= 4.
pub(crate) fn special_deltas(
    g: &GeneratorAssignment,
    n: usize,
    i: i64,
) -> Result<Vec<Rational>> {
    let level = n - 1;
    let mu: Vec<i64> = (2..=level as i64 + 1).collect();
    let shifted_i = i + 2 * level as i64;
    let big_m = special_m(g, level, i)?;
    super::rsum::delta_determinants(&mu, &big_m, shifted_i, g)
}

/// The specialized (level-2) x (level+1) matrix: the first level columns
/// are the middle rows of the symmetric letter matrix, the last column is
/// shifted by i.
fn special_m(g: &GeneratorAssignment, level: usize, i: i64) -> Result<Matrix> {
    let rows = level.saturating_sub(2);
    let mut data = Vec::with_capacity(rows);
    for r in 1..=rows as i64 {
        let mut row = Vec::with_capacity(level + 1);
        for q in 1..=level as i64 {
            row.push(g.b((r + 1).min(q), r + 1 + q)?);
        }
        row.push(g.b(r + 1, i + level as i64 + r)?);
        data.push(row);
    }
    if data.is_empty() {
        return Ok(Matrix::zeros(0, level + 1));
    }
    Matrix::from_rows(data)
}
