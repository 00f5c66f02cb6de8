//! Alternating sums of n x n determinants over the generator letters.
//!
//! For integers m_1..m_n and i, two fans of n+1 vectors are built from the
//! letters; combined with an arbitrary (n-2) x (n+1) matrix M they give
//! n+1 determinants D_1..D_{n+1} whose alternating sum vanishes whenever
//! the letters satisfy the quadratic relations. The vector and matrix
//! layouts below are pinned by unit tests against the fully written-out
//! n = 2 and n = 3 cases.

use serde_json::json;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rational::Rational;

use super::{expect_shape, GeneratorAssignment, IdentityReport};

/// The n+1 w-vectors of length n.
///
/// w_1 lists b(1) at m_1..m_n; w_{j+1} omits the (n+1-j)-th of those and
/// appends b(1)_{i - m_n + 1}.
pub fn build_w_vectors(
    m: &[i64],
    i: i64,
    g: &GeneratorAssignment,
) -> Result<Vec<Vec<Rational>>> {
    let n = tuple_len(m)?;
    let tail = g.b(1, i - m[n - 1] + 1)?;
    let mut out = Vec::with_capacity(n + 1);
    let w1: Result<Vec<Rational>> = m.iter().map(|&mt| g.b(1, mt)).collect();
    let w1 = w1?;
    out.push(w1.clone());
    for j in 2..=n + 1 {
        let omit = n + 1 - (j - 1); // 1-based position dropped from w_1
        let mut w: Vec<Rational> = w1
            .iter()
            .enumerate()
            .filter(|(t, _)| t + 1 != omit)
            .map(|(_, v)| v.clone())
            .collect();
        w.push(tail.clone());
        out.push(w);
    }
    Ok(out)
}

/// The n+1 v-vectors of length n.
///
/// v_1[t] = b(m_t - 1)_{i + m_t - m_n}. For j >= 2 the pivot is
/// s = n + 2 - j: entries before s read b(m_t - 1)_{m_t + m_s - 1},
/// entries from s on read b(m_s)_{m_s + m_u - 1} for u = s+1..n, and the
/// last entry is b(m_s)_{i + m_s - m_n}.
pub fn build_v_vectors(
    m: &[i64],
    i: i64,
    g: &GeneratorAssignment,
) -> Result<Vec<Vec<Rational>>> {
    let n = tuple_len(m)?;
    let mut out = Vec::with_capacity(n + 1);
    let v1: Result<Vec<Rational>> = m
        .iter()
        .map(|&mt| g.b(mt - 1, i + mt - m[n - 1]))
        .collect();
    out.push(v1?);
    for j in 2..=n + 1 {
        let s = n + 2 - j; // 1-based pivot
        let ms = m[s - 1];
        let mut v = Vec::with_capacity(n);
        for t in 1..s {
            v.push(g.b(m[t - 1] - 1, m[t - 1] + ms - 1)?);
        }
        for u in s + 1..=n {
            v.push(g.b(ms, ms + m[u - 1] - 1)?);
        }
        v.push(g.b(ms, i + ms - m[n - 1])?);
        out.push(v);
    }
    Ok(out)
}

/// R(n; m_1..m_n; M)_i = sum_j (-1)^{j+1} det D_j. Zero for every M when
/// the assignment satisfies the quadratic relations.
pub fn r_alternating_sum(
    m: &[i64],
    big_m: &Matrix,
    i: i64,
    g: &GeneratorAssignment,
) -> Result<IdentityReport> {
    let n = tuple_len(m)?;
    let deltas = delta_determinants(m, big_m, i, g)?;
    let mut residual = Rational::zero();
    for (idx, det) in deltas.iter().enumerate() {
        if idx % 2 == 0 {
            residual += det;
        } else {
            residual -= det;
        }
    }
    Ok(IdentityReport::new(
        "alternating-sum",
        json!({ "n": n, "m": m, "i": i }),
        residual,
    ))
}

/// The n+1 determinants Delta_1..Delta_{n+1}. Delta_1 stacks w_1, the
/// rows of M minus its (n+1)-th column, and v_1; Delta_j for j >= 2
/// places w_j, the transpose of M minus column n+2-j, and v_j side by
/// side as columns.
pub(crate) fn delta_determinants(
    m: &[i64],
    big_m: &Matrix,
    i: i64,
    g: &GeneratorAssignment,
) -> Result<Vec<Rational>> {
    let n = tuple_len(m)?;
    if n == 2 {
        // no M in the two-vector case; tolerate any empty matrix
        if big_m.rows() != 0 {
            return Err(Error::ShapeError {
                expected: "no matrix rows for n = 2".into(),
                got: format!("{}x{}", big_m.rows(), big_m.cols()),
            });
        }
    } else {
        expect_shape(big_m, n - 2, n + 1, "the alternating-sum matrix")?;
    }

    let w = build_w_vectors(m, i, g)?;
    let v = build_v_vectors(m, i, g)?;

    let mut out = Vec::with_capacity(n + 1);
    for j in 1..=n + 1 {
        let dropped_col = n + 2 - j; // 1-based column removed from M
        let d = if j == 1 {
            let mut rows = Vec::with_capacity(n);
            rows.push(w[0].clone());
            for r in 0..n - 2 {
                rows.push(keep_row(big_m, r, dropped_col));
            }
            rows.push(v[0].clone());
            Matrix::from_rows(rows)?
        } else {
            Matrix::from_fn(n, n, |r, c| {
                if c == 0 {
                    w[j - 1][r].clone()
                } else if c < n - 1 {
                    // column c holds row c-1 of the reduced M, transposed
                    m_entry(big_m, c - 1, r, dropped_col)
                } else {
                    v[j - 1][r].clone()
                }
            })
        };
        out.push(d.det()?);
    }
    Ok(out)
}

fn tuple_len(m: &[i64]) -> Result<usize> {
    if m.len() < 2 {
        return Err(Error::BadIndex {
            context: format!("need at least two indices m_t, got {}", m.len()),
        });
    }
    Ok(m.len())
}

/// Row r of M with the 1-based column `dropped` removed.
fn keep_row(big_m: &Matrix, r: usize, dropped: usize) -> Vec<Rational> {
    (0..big_m.cols())
        .filter(|c| c + 1 != dropped)
        .map(|c| big_m.at(r, c).clone())
        .collect()
}

/// Entry (r, c) of M-with-dropped-column.
fn m_entry(big_m: &Matrix, r: usize, c: usize, dropped: usize) -> Rational {
    let col = if c + 1 < dropped { c } else { c + 1 };
    big_m.at(r, col).clone()
}
