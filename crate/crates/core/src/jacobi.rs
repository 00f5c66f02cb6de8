//! Closed determinantal formulas for Euclidean remainder chains.
//!
//! The shifted matrices C(m)_i collect b-values, their determinants c(m)_i
//! drive everything else: the normalizers gamma_j turn determinant columns
//! into actual chain members, both for the derivative scheme of a single f
//! and for the scheme of an arbitrary pair (f1, f2).

use crate::btable::BTable;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::polynomial::Polynomial;
use crate::rational::{rat, Rational};

/// The (m-1) x (m-1) matrix whose determinant is c(m)_shift.
///
/// Entry (p, q) is b(min(p,q))_{p+q} (1-based) except on the last row,
/// which holds b(q)_{m+shift+q-1}. shift = 0 restores the symmetric C(m).
#[derive(Debug, Clone)]
pub struct CMatrix {
    pub m: usize,
    pub shift: i64,
    pub matrix: Matrix,
}

/// Which normalizer seeds a scheme uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GammaMode {
    /// Chain of (f, f'): gamma_1 = n a_n, gamma_2 = -1/(n^2 a_n).
    Derivative,
    /// Chain of an arbitrary pair: gamma_1 = alpha_0, gamma_2 = 1.
    Pair,
}

/// The normalizers gamma_1, gamma_2, ... of one scheme.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaSeq {
    pub values: Vec<Rational>,
    pub mode: GammaMode,
}

impl GammaSeq {
    /// gamma_j, 1-based.
    pub fn gamma(&self, j: usize) -> &Rational {
        &self.values[j - 1]
    }
}

/// A b-table plus normalizer seeds: everything needed to reconstruct chain
/// members by determinants alone.
pub struct JacobiScheme {
    table: BTable,
    mode: GammaMode,
    gamma_1: Rational,
    gamma_2: Rational,
}

impl JacobiScheme {
    /// Scheme of the chain (f, f').
    pub fn from_polynomial(f: &Polynomial) -> Result<Self> {
        let table = BTable::from_polynomial(f)?;
        let n = table.n();
        let an = f.coeff_at(n);
        Ok(JacobiScheme {
            table,
            mode: GammaMode::Derivative,
            gamma_1: rat(n) * &an,
            gamma_2: -(rat(n * n) * an).recip(),
        })
    }

    /// Scheme of the chain started at (f1, f2), deg f1 = deg f2 + 1.
    pub fn from_pair(f1: &Polynomial, f2: &Polynomial) -> Result<Self> {
        let table = BTable::from_pair(f1, f2)?;
        let alpha_0 = f1.leading().expect("deg f1 >= 1").clone();
        Ok(JacobiScheme {
            table,
            mode: GammaMode::Pair,
            gamma_1: alpha_0,
            gamma_2: Rational::one(),
        })
    }

    pub fn table(&self) -> &BTable {
        &self.table
    }

    pub fn n(&self) -> i64 {
        self.table.n()
    }

    /// The shifted matrix C(m)_shift, m >= 2.
    pub fn c_matrix(&self, m: usize, shift: i64) -> Result<CMatrix> {
        if m < 2 {
            return Err(Error::BadIndex {
                context: format!("c_matrix needs m >= 2, got {m}"),
            });
        }
        let size = m - 1;
        let matrix = Matrix::from_fn(size, size, |r, c| {
            let (p, q) = (r as i64 + 1, c as i64 + 1);
            if r + 1 < size {
                self.table.b(p.min(q), p + q)
            } else {
                self.table.b(q, m as i64 + shift + q - 1)
            }
        });
        Ok(CMatrix { m, shift, matrix })
    }

    /// c(m)_shift: the determinant for m >= 2, and c(1)_shift for m = 1.
    pub fn c_det(&self, m: usize, shift: i64) -> Result<Rational> {
        if m == 1 {
            return Ok(self.table.c1(shift));
        }
        self.c_matrix(m, shift)?.matrix.det()
    }

    /// c(m) = c(m)_0.
    pub fn c(&self, m: usize) -> Result<Rational> {
        self.c_det(m, 0)
    }

    /// gamma_1 .. gamma_upto by the two-step recursion
    /// gamma_{j+1} = gamma_{j-1} c(j-1)^2 / c(j)^2, cross-checked against
    /// the closed product form; a vanishing c(k) aborts with the index.
    pub fn gamma_seq(&self, upto: usize) -> Result<GammaSeq> {
        if upto < 1 {
            return Err(Error::BadIndex {
                context: "gamma_seq needs upto >= 1".into(),
            });
        }
        let mut c = vec![Rational::one(); 2]; // c[0] unused, c[1] = c(1) = 1
        for k in 2..upto.max(2) {
            let ck = self.c(k)?;
            if ck.is_zero() {
                return Err(Error::DegenerateChain { index: k });
            }
            c.push(ck);
        }
        let mut values = vec![self.gamma_1.clone()];
        if upto >= 2 {
            values.push(self.gamma_2.clone());
        }
        for j in 2..upto {
            let ratio = &c[j - 1] / &c[j];
            let next = &values[j - 2] * &(&ratio * &ratio);
            values.push(next);
        }
        let seq = GammaSeq {
            values,
            mode: self.mode,
        };
        for j in 1..=upto {
            if *seq.gamma(j) != self.gamma_closed_form(j, &c) {
                return Err(Error::CrossCheck {
                    context: format!("gamma closed form at j = {j}"),
                });
            }
        }
        Ok(seq)
    }

    /// The closed product form: eps_j * prod_{t=1}^{j-2} c(j-t)^{2(-1)^t},
    /// with the sign (-1)^{j+1} folded into eps in derivative mode.
    fn gamma_closed_form(&self, j: usize, c: &[Rational]) -> Rational {
        let eps = if j % 2 == 1 {
            self.gamma_1.clone()
        } else {
            match self.mode {
                GammaMode::Derivative => -self.gamma_2.clone(),
                GammaMode::Pair => self.gamma_2.clone(),
            }
        };
        let sign = match self.mode {
            GammaMode::Derivative => {
                if j % 2 == 1 {
                    Rational::one()
                } else {
                    -Rational::one()
                }
            }
            GammaMode::Pair => Rational::one(),
        };
        let mut prod = Rational::one();
        for t in 1..=j.saturating_sub(2) {
            let exp = if t % 2 == 1 { -2 } else { 2 };
            prod *= &c[j - t].pow(exp);
        }
        sign * eps * prod
    }

    /// The i-th chain member reconstructed from determinants:
    /// f_i = gamma_i * sum_p c(i)_p x^{n-i-p}. Requires the regular case
    /// c(k) != 0 for 2 <= k <= i.
    pub fn member(&self, i: usize) -> Result<Polynomial> {
        let n = self.n();
        if i < 1 || (i as i64) > n {
            return Err(Error::BadIndex {
                context: format!("member index {i} outside 1..={n}"),
            });
        }
        let gamma_i = self.gamma_seq(i)?.gamma(i).clone();
        if self.c(i)?.is_zero() {
            return Err(Error::DegenerateChain { index: i });
        }
        let deg = (n - i as i64) as usize;
        let coeffs: Result<Vec<Rational>> = (0..=deg as i64)
            .map(|p| Ok(&gamma_i * &self.c_det(i, p)?))
            .collect();
        Ok(Polynomial::from_descending(&coeffs?))
    }
}

/// The shifted matrix C(m)_shift of a polynomial's scheme.
pub fn c_matrix(f: &Polynomial, m: usize, shift: i64) -> Result<CMatrix> {
    JacobiScheme::from_polynomial(f)?.c_matrix(m, shift)
}

/// c(m)_shift of a polynomial's scheme (m = 1 gives c(1)_shift).
pub fn c_det(f: &Polynomial, m: usize, shift: i64) -> Result<Rational> {
    JacobiScheme::from_polynomial(f)?.c_det(m, shift)
}

/// gamma_1 .. gamma_upto for the chain of (f, f').
pub fn gamma_seq(f: &Polynomial, upto: usize) -> Result<GammaSeq> {
    JacobiScheme::from_polynomial(f)?.gamma_seq(upto)
}

/// gamma_1 .. gamma_upto for the chain of a pair (f1, f2).
pub fn gamma_seq_pair(f1: &Polynomial, f2: &Polynomial, upto: usize) -> Result<GammaSeq> {
    JacobiScheme::from_pair(f1, f2)?.gamma_seq(upto)
}

/// The i-th Sturm member of f by the determinantal route; equals the
/// Euclidean member exactly whenever the chain is regular.
pub fn sturm_member_jacobi(f: &Polynomial, i: usize) -> Result<Polynomial> {
    JacobiScheme::from_polynomial(f)?.member(i)
}

/// The i-th member of the scheme started at (f1, f2), by determinants.
/// Member 1 is f1 itself, member 2 is f2.
pub fn pair_member_jacobi(f1: &Polynomial, f2: &Polynomial, i: usize) -> Result<Polynomial> {
    JacobiScheme::from_pair(f1, f2)?.member(i)
}

/// The four-term quantity
/// Q(j)_i = c(j-1)_i c(j)^2 - c(j-1) c(j) c(j)_i
///          - c(j-1)_1 c(j)_{i-1} c(j) + c(j-1) c(j)_1 c(j)_{i-1},
/// the residual numerator of one division step. Requires the regular case
/// through j.
pub fn q_quantity(f: &Polynomial, j: usize, i: i64) -> Result<Rational> {
    if j < 2 || i < 2 {
        return Err(Error::BadIndex {
            context: format!("q_quantity needs j >= 2 and i >= 2, got ({j}, {i})"),
        });
    }
    let scheme = JacobiScheme::from_polynomial(f)?;
    for k in 2..=j {
        if scheme.c(k)?.is_zero() {
            return Err(Error::DegenerateChain { index: k });
        }
    }
    let c_prev = scheme.c(j - 1)?;
    let c_prev_1 = scheme.c_det(j - 1, 1)?;
    let c_prev_i = scheme.c_det(j - 1, i)?;
    let c_cur = scheme.c(j)?;
    let c_cur_1 = scheme.c_det(j, 1)?;
    let c_cur_i = scheme.c_det(j, i)?;
    let c_cur_im1 = scheme.c_det(j, i - 1)?;
    Ok(&c_prev_i * &(&c_cur * &c_cur) - &c_prev * &c_cur * &c_cur_i
        - &c_prev_1 * &c_cur_im1 * &c_cur
        + &c_prev * &c_cur_1 * &c_cur_im1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sturm::sturm_chain_euclid;

    fn p(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_int_descending(coeffs)
    }

    fn cubic() -> Polynomial {
        p(&[1, 0, -3, 1])
    }

    #[test]
    fn c_matrix_of_cubic() {
        let cm = c_matrix(&cubic(), 3, 0).unwrap();
        assert_eq!(
            cm.matrix,
            Matrix::from_rows(vec![
                vec![rat(-18), rat(9)],
                vec![rat(9), rat(-18)],
            ])
            .unwrap()
        );
        let shifted = c_matrix(&cubic(), 3, 1).unwrap();
        assert_eq!(
            shifted.matrix,
            Matrix::from_rows(vec![
                vec![rat(-18), rat(9)],
                vec![rat(0), rat(0)],
            ])
            .unwrap()
        );
    }

    #[test]
    fn c_matrix_is_symmetric_at_zero_shift() {
        let f = p(&[2, -1, 4, 0, 3, -5]);
        for m in 2..=5 {
            assert!(c_matrix(&f, m, 0).unwrap().matrix.is_symmetric());
        }
    }

    #[test]
    fn one_by_one_shifted_matrix_is_first_row() {
        let f = p(&[2, -1, 4, 0, 3]);
        for shift in 0..5 {
            assert_eq!(
                c_det(&f, 2, shift).unwrap(),
                crate::btable::b_coeff(&f, 1, shift + 2)
            );
        }
    }

    #[test]
    fn c_det_examples() {
        assert_eq!(c_det(&cubic(), 3, 0).unwrap(), rat(243));
        assert_eq!(c_det(&cubic(), 3, 1).unwrap(), rat(0));
        assert_eq!(c_det(&p(&[1, 0, -1]), 2, 0).unwrap(), rat(-4));
        assert_eq!(c_det(&cubic(), 1, 0).unwrap(), rat(1));
        assert_eq!(c_det(&cubic(), 1, 2).unwrap(), rat(-1));
    }

    #[test]
    fn gamma_of_quadratic_and_cubic() {
        let g = gamma_seq(&p(&[1, 0, -1]), 2).unwrap();
        assert_eq!(g.gamma(1), &rat(2));
        assert_eq!(g.gamma(2), &Rational::new(-1, 4));

        let g = gamma_seq(&cubic(), 3).unwrap();
        assert_eq!(g.gamma(1), &rat(3));
        assert_eq!(g.gamma(2), &Rational::new(-1, 9));
        assert_eq!(g.gamma(3), &Rational::new(1, 108));
    }

    #[test]
    fn pair_gamma_seeds() {
        let g = gamma_seq_pair(&p(&[1, 0, 0]), &p(&[1, -1]), 2).unwrap();
        assert_eq!(g.gamma(1), &rat(1));
        assert_eq!(g.gamma(2), &rat(1));
        assert_eq!(g.mode, GammaMode::Pair);
    }

    #[test]
    fn members_of_quadratic() {
        let f = p(&[1, 0, -1]);
        assert_eq!(sturm_member_jacobi(&f, 1).unwrap(), p(&[2, 0]));
        assert_eq!(sturm_member_jacobi(&f, 2).unwrap(), Polynomial::one());
    }

    #[test]
    fn members_of_cubic_match_euclid() {
        let f = cubic();
        let chain = sturm_chain_euclid(&f).unwrap();
        for i in 1..=3 {
            assert_eq!(sturm_member_jacobi(&f, i).unwrap(), chain.members[i]);
        }
        assert_eq!(sturm_member_jacobi(&f, 2).unwrap(), p(&[2, -1]));
        assert_eq!(
            sturm_member_jacobi(&f, 3).unwrap(),
            Polynomial::constant(Rational::new(9, 4))
        );
    }

    #[test]
    fn leading_coefficient_is_gamma_times_c() {
        let f = p(&[2, -1, 4, 0, 3]);
        let scheme = JacobiScheme::from_polynomial(&f).unwrap();
        for i in 1..=4usize {
            let member = scheme.member(i).unwrap();
            let expected = scheme.gamma_seq(i).unwrap().gamma(i) * &scheme.c(i).unwrap();
            assert_eq!(member.leading().unwrap(), &expected);
            assert_eq!(member.degree(), 4 - i as isize);
        }
    }

    #[test]
    fn pair_member_example() {
        // (x^2, x - 1): Euclid gives x^2 = (x+1)(x-1) + 1, so f_3 = -1.
        let f3 = pair_member_jacobi(&p(&[1, 0, 0]), &p(&[1, -1]), 3).unwrap();
        assert_eq!(f3, Polynomial::constant(rat(-1)));
    }

    #[test]
    fn pair_members_reproduce_identity_seeds() {
        let f1 = p(&[3, 1, -2, 0]);
        let f2 = p(&[2, 0, 5]);
        assert_eq!(pair_member_jacobi(&f1, &f2, 1).unwrap(), f1);
        assert_eq!(pair_member_jacobi(&f1, &f2, 2).unwrap(), f2);
    }

    #[test]
    fn pair_scheme_continues_derivative_scheme() {
        // Feeding (f', f_2) into the pair route reproduces the chain of f.
        let f = cubic();
        let chain = sturm_chain_euclid(&f).unwrap();
        let (f1, f2) = (chain.members[1].clone(), chain.members[2].clone());
        for i in 1..=3 {
            assert_eq!(
                pair_member_jacobi(&f1, &f2, i).unwrap(),
                chain.members[i],
                "pair member {i}"
            );
        }
    }

    #[test]
    fn divisible_pair_is_degenerate() {
        // f2 | f1: the Euclid chain stops at f2, the determinant route
        // reports the drop.
        let f1 = p(&[1, -1, 0]); // x(x-1)
        let f2 = p(&[1, -1]); // x - 1
        assert_eq!(
            pair_member_jacobi(&f1, &f2, 3),
            Err(Error::DegenerateChain { index: 3 })
        );
    }

    #[test]
    fn degenerate_chain_detected_for_even_polynomial() {
        // x^4 + 1 has b(1)_2 = 0, so c(2) = 0: the chain drops degree by 2.
        let f = p(&[1, 0, 0, 0, 1]);
        assert_eq!(
            sturm_member_jacobi(&f, 2),
            Err(Error::DegenerateChain { index: 2 })
        );
    }

    #[test]
    fn q_value_of_cubic() {
        assert_eq!(q_quantity(&cubic(), 2, 2).unwrap(), rat(-243));
        // cross-check against -c(1)^2 c(3)_0
        let c1 = c_det(&cubic(), 1, 0).unwrap();
        let c3 = c_det(&cubic(), 3, 0).unwrap();
        assert_eq!(q_quantity(&cubic(), 2, 2).unwrap(), -(&c1 * &c1) * c3);
    }

    #[test]
    fn q_structural_zero_when_subleading_coefficient_vanishes() {
        // a_{n-1} = 0 makes c(1)_1 = 0, killing the term that carries it.
        let f = cubic();
        let scheme = JacobiScheme::from_polynomial(&f).unwrap();
        assert_eq!(scheme.table().c1(1), rat(0));
        let q = q_quantity(&f, 2, 2).unwrap();
        let without_third_term = &scheme.c_det(1, 2).unwrap() * &scheme.c(2).unwrap().pow(2)
            - scheme.c(1).unwrap() * scheme.c(2).unwrap() * scheme.c_det(2, 2).unwrap()
            + scheme.c(1).unwrap() * scheme.c_det(2, 1).unwrap().pow(2);
        assert_eq!(q, without_third_term);
        assert_eq!(q, rat(-324) + rat(81));
    }
}
