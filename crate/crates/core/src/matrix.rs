//! Dense rational matrices and exact determinants.
//!
//! The determinant kernel clears entries to a common integer denominator
//! and runs fraction-free Bareiss elimination, so intermediate values stay
//! integral and grow polynomially. A cofactor expansion is kept alongside
//! as an independent route for cross-checks and small minors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A rows x cols matrix of rationals in row-major order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    /// Builds from row vectors; every row must have the same length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::ShapeError {
                expected: format!("{nrows} rows of equal length"),
                got: "ragged rows".into(),
            });
        }
        Ok(Matrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| (0..r).all(|c| self.at(r, c) == self.at(c, r)))
    }

    /// Copy with the listed rows and columns removed (indices 0-based).
    pub fn minor_removing(&self, drop_rows: &[usize], drop_cols: &[usize]) -> Matrix {
        let keep_rows: Vec<usize> = (0..self.rows).filter(|r| !drop_rows.contains(r)).collect();
        let keep_cols: Vec<usize> = (0..self.cols).filter(|c| !drop_cols.contains(c)).collect();
        Matrix::from_fn(keep_rows.len(), keep_cols.len(), |r, c| {
            self.at(keep_rows[r], keep_cols[c]).clone()
        })
    }

    /// Exact determinant by fraction-free elimination.
    pub fn det(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(Error::ShapeError {
                expected: "square matrix".into(),
                got: format!("{}x{}", self.rows, self.cols),
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Rational::one());
        }

        // Scale row r by the lcm of its denominators; track the factor.
        let mut scale = Rational::one();
        let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for r in 0..n {
            let mut lcm = BigInt::one();
            for c in 0..n {
                lcm = lcm.lcm(self.at(r, c).denom());
            }
            scale = scale * Rational::from(lcm.clone());
            m.push(
                (0..n)
                    .map(|c| {
                        let e = self.at(r, c);
                        e.numer() * (&lcm / e.denom())
                    })
                    .collect(),
            );
        }

        let det_int = bareiss(&mut m);
        Ok(Rational::from(det_int) / scale)
    }

    /// Determinant by cofactor expansion along the first row.
    /// Independent of the Bareiss route; meant for cross-checks.
    pub fn det_cofactor(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(Error::ShapeError {
                expected: "square matrix".into(),
                got: format!("{}x{}", self.rows, self.cols),
            });
        }
        fn expand(m: &Matrix) -> Rational {
            let n = m.rows();
            match n {
                0 => Rational::one(),
                1 => m.at(0, 0).clone(),
                2 => m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0),
                _ => {
                    let mut acc = Rational::zero();
                    for c in 0..n {
                        let a = m.at(0, c);
                        if a.is_zero() {
                            continue;
                        }
                        let sub = m.minor_removing(&[0], &[c]);
                        let term = a * &expand(&sub);
                        if c % 2 == 0 {
                            acc += &term;
                        } else {
                            acc -= &term;
                        }
                    }
                    acc
                }
            }
        }
        Ok(expand(self))
    }
}

/// Fraction-free Bareiss determinant of an integer matrix (consumed).
fn bareiss(m: &mut [Vec<BigInt>]) -> BigInt {
    let n = m.len();
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n.saturating_sub(1) {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero(), "Bareiss division must be exact");
                m[i][j] = q;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn rmat(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
        Matrix::from_fn(n, n, |_, _| {
            Rational::new(rng.gen_range(-9i64..=9), rng.gen_range(1i64..=5))
        })
    }

    #[test]
    fn small_determinants() {
        let m = Matrix::from_rows(vec![
            vec![rat(-18), rat(9)],
            vec![rat(9), rat(-18)],
        ])
        .unwrap();
        assert_eq!(m.det().unwrap(), rat(243));
        assert_eq!(m.det_cofactor().unwrap(), rat(243));
        assert!(m.is_symmetric());
    }

    #[test]
    fn empty_and_singular() {
        assert_eq!(Matrix::zeros(0, 0).det().unwrap(), rat(1));
        let m = Matrix::from_rows(vec![
            vec![rat(1), rat(2), rat(3)],
            vec![rat(2), rat(4), rat(6)],
            vec![rat(0), rat(1), rat(1)],
        ])
        .unwrap();
        assert_eq!(m.det().unwrap(), rat(0));
    }

    #[test]
    fn needs_pivot_swap() {
        let m = Matrix::from_rows(vec![
            vec![rat(0), rat(1)],
            vec![rat(1), rat(0)],
        ])
        .unwrap();
        assert_eq!(m.det().unwrap(), rat(-1));
    }

    #[test]
    fn ragged_rows_rejected() {
        let e = Matrix::from_rows(vec![vec![rat(1)], vec![rat(1), rat(2)]]);
        assert!(matches!(e, Err(Error::ShapeError { .. })));
    }

    #[test]
    fn bareiss_matches_cofactor_on_random_rational_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..=6 {
            for _ in 0..10 {
                let m = rmat(&mut rng, n);
                assert_eq!(m.det().unwrap(), m.det_cofactor().unwrap());
            }
        }
    }

    #[test]
    fn det_is_multiplicative_in_row_scaling() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let m = rmat(&mut rng, 4);
        let mut scaled = m.clone();
        let s = Rational::new(3, 7);
        for c in 0..4 {
            let v = scaled.at(2, c) * &s;
            scaled.set(2, c, v);
        }
        assert_eq!(scaled.det().unwrap(), m.det().unwrap() * s);
    }
}
