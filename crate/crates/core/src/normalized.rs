//! Normalized coefficient ratios and the factored determinant.
//!
//! For f = a_n x^n + ... + a_0 these are the scale-invariant quantities
//!
//! ```text
//! q_i = a_{i-1} / a_i
//! r_i = q_{i-1} / q_i = a_i a_{i-2} / a_{i-1}^2
//! beta(j)_i = b(j)_i / ((n - i + j) a_{n-j} a_{n+j-i})
//! psi(i, j) = r_i r_{i+1} ... r_j          (empty product = 1)
//! phi(j, i) = a_n a_{n-i} / (a_{n-j} a_{n-i+j})
//! ```
//!
//! Entries whose denominators vanish are marked undefined rather than
//! erroring; the factored determinant requires its prefactors nonzero.

use std::collections::BTreeMap;

use crate::btable::b_coeff;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::polynomial::Polynomial;
use crate::rational::{rat, Rational};

/// Table of q_i, r_i and beta(j)_i for one polynomial; `None` marks an
/// undefined entry (zero denominator).
#[derive(Debug, Clone)]
pub struct NormalizedTable {
    n: i64,
    coeffs: Polynomial,
    pub q: BTreeMap<i64, Option<Rational>>,
    pub r: BTreeMap<i64, Option<Rational>>,
    pub beta: BTreeMap<(i64, i64), Option<Rational>>,
}

fn ratio(num: Rational, den: Rational) -> Option<Rational> {
    if den.is_zero() {
        None
    } else {
        Some(num / den)
    }
}

impl NormalizedTable {
    /// q_i, r_i for 1 <= i <= n and beta(j)_i for 1 <= j <= max_j,
    /// 2j <= i <= max_i.
    pub fn build(f: &Polynomial, max_j: i64, max_i: i64) -> Result<Self> {
        if f.degree() < 1 {
            return Err(Error::DegreeTooSmall { degree: f.degree() });
        }
        let n = f.degree() as i64;
        let mut q = BTreeMap::new();
        let mut r = BTreeMap::new();
        for i in 1..=n {
            q.insert(i, ratio(f.coeff_at(i - 1), f.coeff_at(i)));
        }
        for i in 2..=n {
            r.insert(
                i,
                ratio(
                    &f.coeff_at(i) * &f.coeff_at(i - 2),
                    f.coeff_at(i - 1).pow(2),
                ),
            );
        }
        let mut beta = BTreeMap::new();
        for j in 1..=max_j {
            for i in 2 * j..=max_i {
                beta.insert((j, i), beta_entry(f, j, i));
            }
        }
        Ok(NormalizedTable {
            n,
            coeffs: f.clone(),
            q,
            r,
            beta,
        })
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    /// psi(i, j) = prod_{p=i}^{j} r_p; 1 for an empty range, None if any
    /// factor is undefined or out of the table's range.
    pub fn psi(&self, i: i64, j: i64) -> Option<Rational> {
        let mut acc = Rational::one();
        for p in i..=j {
            match self.r.get(&p)? {
                Some(rp) => acc *= rp,
                None => return None,
            }
        }
        Some(acc)
    }

    /// phi(j, i) = a_n a_{n-i} / (a_{n-j} a_{n-i+j}), the telescoped
    /// product psi(n-i+2, n) psi(n-i+3, n-1) ... of j factors.
    pub fn phi(&self, j: i64, i: i64) -> Option<Rational> {
        let f = &self.coeffs;
        let n = self.n;
        ratio(
            &f.coeff_at(n) * &f.coeff_at(n - i),
            &f.coeff_at(n - j) * &f.coeff_at(n - i + j),
        )
    }

    /// The same phi through the psi product; agrees with [`Self::phi`]
    /// for i >= 2j - 1 (below that the telescoping into r-products breaks)
    /// whenever every intermediate ratio is defined.
    pub fn phi_via_psi(&self, j: i64, i: i64) -> Option<Rational> {
        let mut acc = Rational::one();
        for t in 0..j {
            acc *= &self.psi(self.n - i + 2 + t, self.n - t)?;
        }
        Some(acc)
    }

    /// beta(j)_i rebuilt from phi values:
    /// sum_{p=0}^{j-1} n(i-2p)/(n-i+j) * phi_{n-p}(j-p, i-2p) - j,
    /// where phi_{n-p} is phi for the degree-(n-p) reference point, i.e.
    /// a_{n-p} a_{n-i+p} / (a_{n-j} a_{n-i+j}).
    pub fn beta_via_phi(&self, j: i64, i: i64) -> Option<Rational> {
        let f = &self.coeffs;
        let n = self.n;
        if n - i + j == 0 {
            return None;
        }
        let mut acc = -rat(j);
        for p in 0..j {
            let phi = ratio(
                &f.coeff_at(n - p) * &f.coeff_at(n - i + p),
                &f.coeff_at(n - j) * &f.coeff_at(n - i + j),
            )?;
            acc += &(rat(n) * rat(i - 2 * p) / rat(n - i + j) * phi);
        }
        Some(acc)
    }
}

fn beta_entry(f: &Polynomial, j: i64, i: i64) -> Option<Rational> {
    let n = f.degree() as i64;
    ratio(
        b_coeff(f, j, i),
        rat(n - i + j) * f.coeff_at(n - j) * f.coeff_at(n + j - i),
    )
}

/// beta(j)_i of a polynomial, or None when the denominator vanishes.
pub fn beta_coeff(f: &Polynomial, j: i64, i: i64) -> Option<Rational> {
    beta_entry(f, j, i)
}

/// The factored form of c(m+1):
/// (prod_{t=1}^{m} a_{n-t})^2 * det((n - max(p,q)) beta(min(p,q))_{p+q}).
/// Must equal c(m+1) = c_det(f, m+1, 0) exactly whenever defined.
pub fn factored_c_det(f: &Polynomial, m: usize) -> Result<Rational> {
    if f.degree() < 1 {
        return Err(Error::DegreeTooSmall { degree: f.degree() });
    }
    let n = f.degree() as i64;
    let m_i = m as i64;
    if m_i >= n {
        return Err(Error::UndefinedEntry {
            context: format!("factored determinant needs m < n, got m = {m}, n = {n}"),
        });
    }
    let mut prefactor = Rational::one();
    for t in 1..=m_i {
        let a = f.coeff_at(n - t);
        if a.is_zero() {
            return Err(Error::UndefinedEntry {
                context: format!("a_{} = 0", n - t),
            });
        }
        prefactor *= &a;
    }
    let mut entries = Vec::with_capacity(m * m);
    for p in 1..=m_i {
        for q in 1..=m_i {
            match beta_entry(f, p.min(q), p + q) {
                Some(b) => entries.push(rat(n - p.max(q)) * b),
                None => {
                    return Err(Error::UndefinedEntry {
                        context: format!("beta({})_{} undefined", p.min(q), p + q),
                    })
                }
            }
        }
    }
    let mat = Matrix::from_fn(m, m, |r, c| entries[r * m + c].clone());
    Ok(&prefactor * &prefactor * mat.det()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jacobi::c_det;

    fn p(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_int_descending(coeffs)
    }

    #[test]
    fn constant_coefficients_give_unit_ratios() {
        let f = p(&[1, 1, 1, 1, 1]);
        let t = NormalizedTable::build(&f, 2, 6).unwrap();
        for i in 2..=4 {
            assert_eq!(t.r[&i], Some(rat(1)));
        }
        assert_eq!(t.psi(2, 4), Some(rat(1)));
        assert_eq!(t.phi(2, 3), Some(rat(1)));
    }

    #[test]
    fn psi_empty_range_is_one() {
        let f = p(&[1, 2, 3, 4]);
        let t = NormalizedTable::build(&f, 1, 4).unwrap();
        assert_eq!(t.psi(5, 2), Some(rat(1)));
    }

    #[test]
    fn r_is_quotient_of_consecutive_q() {
        let f = p(&[3, -5, 7, 2, 11]);
        let t = NormalizedTable::build(&f, 2, 6).unwrap();
        for i in 2..=4 {
            let q_prev = t.q[&(i - 1)].clone().unwrap();
            let q_cur = t.q[&i].clone().unwrap();
            assert_eq!(t.r[&i], Some(q_prev / q_cur));
        }
    }

    #[test]
    fn zero_coefficient_marks_entries_undefined() {
        let f = p(&[1, 0, -3, 1]); // a_2 = 0
        let t = NormalizedTable::build(&f, 2, 5).unwrap();
        assert_eq!(t.q[&2], None); // a_1 / a_2 divides by zero
        assert_eq!(t.q[&3], Some(rat(0)));
        assert_eq!(t.r[&3], None);
        assert_eq!(t.beta[&(1, 2)], None); // (n - 1) a_{n-1}^2 = 0
    }

    #[test]
    fn beta_first_example() {
        // beta(1)_2 = 2n/(n-1) r_n - 1 wherever defined.
        let f = p(&[3, -5, 7, 2, 11]);
        let n = 4;
        let t = NormalizedTable::build(&f, 1, 2).unwrap();
        let r_n = t.r[&n].clone().unwrap();
        assert_eq!(
            t.beta[&(1, 2)],
            Some(rat(2 * n) / rat(n - 1) * r_n - rat(1))
        );
    }

    #[test]
    fn phi_routes_agree() {
        let f = p(&[3, -5, 7, 2, 11]);
        let t = NormalizedTable::build(&f, 3, 8).unwrap();
        for j in 1..=2 {
            for i in (2 * j - 1)..=4 {
                let direct = t.phi(j, i);
                let via_psi = t.phi_via_psi(j, i);
                assert_eq!(direct, via_psi, "phi({j}, {i})");
            }
        }
    }

    #[test]
    fn beta_via_phi_matches_table() {
        let f = p(&[3, -5, 7, 2, 11]);
        let t = NormalizedTable::build(&f, 2, 6).unwrap();
        for (&(j, i), entry) in &t.beta {
            if let Some(expected) = entry {
                if let Some(got) = t.beta_via_phi(j, i) {
                    assert_eq!(&got, expected, "beta({j})_{i}");
                }
            }
        }
    }

    #[test]
    fn factored_det_rejects_zero_prefactor() {
        let e = factored_c_det(&p(&[1, 0, -3, 1]), 1);
        assert!(matches!(e, Err(Error::UndefinedEntry { .. })));
    }

    #[test]
    fn factored_det_equals_direct_determinant() {
        let f = p(&[1, 1, 1, 1]);
        assert_eq!(factored_c_det(&f, 1).unwrap(), rat(4));
        assert_eq!(factored_c_det(&f, 1).unwrap(), c_det(&f, 2, 0).unwrap());

        let g = p(&[2, -3, 5, 7, -1, 4]);
        for m in 1..=4 {
            assert_eq!(
                factored_c_det(&g, m).unwrap(),
                c_det(&g, m + 1, 0).unwrap(),
                "m = {m}"
            );
        }
    }
}
