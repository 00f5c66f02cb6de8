//! Numeric verification of the quadratic-determinant identity layer.
//!
//! The b-letters of a polynomial (or pair) satisfy one family of quadratic
//! relations; everything else here — alternating determinant sums, the
//! primed determinants, the Plücker lemmas and the closed formulas they
//! combine into — is a consequence. Each check instantiates the letters
//! numerically and reports an exact residual: a check passes if and only
//! if its residual is exactly zero.

mod formulas;
mod plucker;
mod primed;
mod rsum;

pub use formulas::{check_formula_a, check_formula_b, check_formula_f};
pub use plucker::{plucker_a, plucker_b};
pub use primed::{c_primed, check_cor_2_9};
pub use rsum::{build_v_vectors, build_w_vectors, r_alternating_sum};

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::json;

use crate::btable::BTable;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::polynomial::Polynomial;
use crate::rational::Rational;

/// Where a generator assignment came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AssignmentOrigin {
    /// Values from the quadratic formula on one polynomial; the relations
    /// provably hold.
    FromPolynomial,
    /// Values seeded from a pair and extended by the recursion; the
    /// relations provably hold.
    FromPair,
    /// Arbitrary user-supplied values; checks may legitimately fail.
    Explicit,
}

/// A numeric assignment (j, i) -> value for the formal letters b(j)_i.
pub struct GeneratorAssignment {
    origin: AssignmentOrigin,
    backing: Backing,
}

enum Backing {
    Table(BTable),
    Explicit(BTreeMap<(i64, i64), Rational>),
}

impl GeneratorAssignment {
    pub fn from_polynomial(f: &Polynomial) -> Result<Self> {
        Ok(GeneratorAssignment {
            origin: AssignmentOrigin::FromPolynomial,
            backing: Backing::Table(BTable::from_polynomial(f)?),
        })
    }

    pub fn from_pair(f1: &Polynomial, f2: &Polynomial) -> Result<Self> {
        Ok(GeneratorAssignment {
            origin: AssignmentOrigin::FromPair,
            backing: Backing::Table(BTable::from_pair(f1, f2)?),
        })
    }

    /// An explicit assignment carrying no guarantee.
    pub fn explicit(values: BTreeMap<(i64, i64), Rational>) -> Self {
        GeneratorAssignment {
            origin: AssignmentOrigin::Explicit,
            backing: Backing::Explicit(values),
        }
    }

    /// An explicit assignment where every letter has the same value.
    /// Handy negative-control scaffolding: every 2x2 relation determinant
    /// vanishes for the all-ones assignment.
    pub fn constant(value: Rational, max_j: i64, max_i: i64) -> Self {
        let mut values = BTreeMap::new();
        for j in -max_j..=max_j {
            for i in -max_i..=max_i {
                values.insert((j, i), value.clone());
            }
        }
        GeneratorAssignment::explicit(values)
    }

    pub fn origin(&self) -> AssignmentOrigin {
        self.origin
    }

    /// The value of b(j)_i under this assignment.
    pub fn b(&self, j: i64, i: i64) -> Result<Rational> {
        match &self.backing {
            Backing::Table(t) => Ok(t.b(j, i)),
            Backing::Explicit(map) => map
                .get(&(j, i))
                .cloned()
                .ok_or(Error::MissingGenerator { j, i }),
        }
    }
}

/// Outcome of one identity check: `passed` holds exactly when the residual
/// is zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub identity: String,
    pub params: serde_json::Value,
    pub residual: Rational,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl IdentityReport {
    pub fn new(identity: &str, params: serde_json::Value, residual: Rational) -> Self {
        let passed = residual.is_zero();
        IdentityReport {
            identity: identity.to_string(),
            params,
            residual,
            passed,
            seed: None,
        }
    }

    /// Tags the report with the campaign seed that produced its instance.
    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }
}

/// The quadratic relation as three 2x2 determinants:
/// Delta(k,j)_i - Delta'(k,j)_i + Delta''(k,j)_i = 0.
pub fn check_relation_quadratic(
    g: &GeneratorAssignment,
    k: i64,
    j: i64,
    i: i64,
) -> Result<IdentityReport> {
    let det2 = |a: Rational, b: Rational, c: Rational, d: Rational| a * d - b * c;
    let delta = det2(
        g.b(1, j)?,
        g.b(1, k)?,
        g.b(j - 1, i + j - k)?,
        g.b(k - 1, i)?,
    );
    let delta_p = det2(
        g.b(1, j)?,
        g.b(j - 1, j + k - 1)?,
        g.b(1, i - k + 1)?,
        g.b(k, i)?,
    );
    let delta_pp = det2(
        g.b(1, k)?,
        g.b(j, j + k - 1)?,
        g.b(1, i - k + 1)?,
        g.b(j, i + j - k)?,
    );
    let residual = delta - delta_p + delta_pp;
    Ok(IdentityReport::new(
        "quadratic-relation",
        json!({ "k": k, "j": j, "i": i }),
        residual,
    ))
}

/// Shape guard shared by the matrix-shaped checks.
pub(crate) fn expect_shape(m: &Matrix, rows: usize, cols: usize, what: &str) -> Result<()> {
    if m.rows() != rows || m.cols() != cols {
        return Err(Error::ShapeError {
            expected: format!("{rows}x{cols} for {what}"),
            got: format!("{}x{}", m.rows(), m.cols()),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn p(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_int_descending(coeffs)
    }

    #[test]
    fn relation_holds_for_polynomial_assignment() {
        let g = GeneratorAssignment::from_polynomial(&p(&[1, 0, -3, 1])).unwrap();
        let report = check_relation_quadratic(&g, 2, 2, 4).unwrap();
        assert!(report.passed);
        assert_eq!(report.residual, rat(0));
    }

    #[test]
    fn relation_holds_for_pair_assignment_on_wide_index_window() {
        let g = GeneratorAssignment::from_pair(&p(&[2, -1, 0, 5]), &p(&[3, 4, -2])).unwrap();
        for k in 1..=5 {
            for j in 1..=5 {
                for i in 0..=12 {
                    assert!(
                        check_relation_quadratic(&g, k, j, i).unwrap().passed,
                        "(k,j,i) = ({k},{j},{i})"
                    );
                }
            }
        }
    }

    #[test]
    fn all_ones_assignment_passes_trivially() {
        let g = GeneratorAssignment::constant(rat(1), 8, 24);
        let report = check_relation_quadratic(&g, 2, 3, 7).unwrap();
        assert!(report.passed);
    }

    #[test]
    fn violating_assignment_is_reported() {
        // Perturb one letter of a constant assignment so a relation fails:
        // the checker is not vacuous.
        let mut values = BTreeMap::new();
        for j in -3..=6 {
            for i in -6..=14 {
                values.insert((j, i), rat(1));
            }
        }
        values.insert((2, 4), rat(5));
        let g = GeneratorAssignment::explicit(values);
        let report = check_relation_quadratic(&g, 2, 3, 6).unwrap();
        assert!(!report.passed);
        assert_ne!(report.residual, rat(0));
    }

    #[test]
    fn missing_generator_is_an_error() {
        let g = GeneratorAssignment::explicit(BTreeMap::new());
        assert!(matches!(
            check_relation_quadratic(&g, 2, 2, 4),
            Err(Error::MissingGenerator { .. })
        ));
    }

    #[test]
    fn report_serializes_to_json_line() {
        let r = IdentityReport::new("demo", json!({"n": 3}), rat(0)).with_seed(42);
        let line = serde_json::to_string(&r).unwrap();
        assert_eq!(
            line,
            r#"{"identity":"demo","params":{"n":3},"residual":"0","passed":true,"seed":42}"#
        );
    }
}
