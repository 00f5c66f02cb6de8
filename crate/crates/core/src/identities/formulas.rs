//! The closed three- and four-term formulas tying shifted determinants of
//! consecutive sizes together. Each residual is exactly zero on every
//! polynomial instantiation, n >= 3.

use serde_json::json;

use crate::error::{Error, Result};
use crate::jacobi::JacobiScheme;
use crate::polynomial::Polynomial;

use super::{c_primed, IdentityReport};

fn guard(n: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::BadIndex {
            context: format!("formulas need n >= 3, got {n}"),
        });
    }
    Ok(())
}

/// c(n-1)_i c(n) - c(n-1)_1 c(n)_{i-1} + c(n-1) c(n)''_i = 0.
/// Elementary: it is the minor relation applied to one letter matrix and
/// needs no relations between the letters.
pub fn check_formula_a(f: &Polynomial, n: usize, i: i64) -> Result<IdentityReport> {
    guard(n)?;
    let s = JacobiScheme::from_polynomial(f)?;
    let (_, cpp) = c_primed(f, n, i)?;
    let residual = &s.c_det(n - 1, i)? * &s.c(n)? - &s.c_det(n - 1, 1)? * &s.c_det(n, i - 1)?
        + &s.c(n - 1)? * &cpp;
    Ok(IdentityReport::new(
        "formula-a",
        json!({ "n": n, "i": i }),
        residual,
    ))
}

/// {c(n)_i + c(n)''_i} c(n) - c(n)_1 c(n)_{i-1} - c(n-1) c(n+1)_{i-2} = 0.
pub fn check_formula_b(f: &Polynomial, n: usize, i: i64) -> Result<IdentityReport> {
    guard(n)?;
    let s = JacobiScheme::from_polynomial(f)?;
    let (_, cpp) = c_primed(f, n, i)?;
    let residual = &(&(&s.c_det(n, i)? + &cpp) * &s.c(n)?)
        - &(&s.c_det(n, 1)? * &s.c_det(n, i - 1)?)
        - &s.c(n - 1)? * &s.c_det(n + 1, i - 2)?;
    Ok(IdentityReport::new(
        "formula-b",
        json!({ "n": n, "i": i }),
        residual,
    ))
}

/// The four-term combination of the previous two:
/// c(n-1)_i c(n)^2 - c(n-1) c(n) c(n)_i - c(n-1)_1 c(n)_{i-1} c(n)
/// + c(n-1) c(n)_1 c(n)_{i-1} + c(n-1)^2 c(n+1)_{i-2} = 0.
pub fn check_formula_f(f: &Polynomial, n: usize, i: i64) -> Result<IdentityReport> {
    guard(n)?;
    let s = JacobiScheme::from_polynomial(f)?;
    let c_prev = s.c(n - 1)?;
    let c_cur = s.c(n)?;
    let residual = &s.c_det(n - 1, i)? * &(&c_cur * &c_cur)
        - &c_prev * &c_cur * &s.c_det(n, i)?
        - &s.c_det(n - 1, 1)? * &s.c_det(n, i - 1)? * &c_cur
        + &c_prev * &s.c_det(n, 1)? * &s.c_det(n, i - 1)?
        + &c_prev * &c_prev * &s.c_det(n + 1, i - 2)?;
    Ok(IdentityReport::new(
        "formula-f",
        json!({ "n": n, "i": i }),
        residual,
    ))
}
