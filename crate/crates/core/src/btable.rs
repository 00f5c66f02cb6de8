//! The quadratic quantities b(j)_i generating the determinantal formulas.
//!
//! For a single polynomial f = a_n x^n + ... + a_0 of degree n,
//!
//! ```text
//! b(j)_i = n * sum_{p=0}^{j-1} (i - 2p) a_{n-p} a_{n-i+p}
//!          - j (n - i + j) a_{n-j} a_{n+j-i}
//! ```
//!
//! with a_k = 0 outside 0..=n, which makes the formula total in (j, i);
//! b(j)_i = 0 for j <= 0. For a pair (f1, f2) of degrees (n-1, n-2) the
//! first row is seeded from f2's coefficients and higher rows are defined
//! by the recursion
//!
//! ```text
//! b(k)_i = b(k-1)_i + c(1)_{k-1} b(1)_{i-k+1} - c(1)_{i-k} b(1)_k .
//! ```

use std::collections::HashMap;
use std::sync::RwLock;

use crate::error::{Error, Result};
use crate::polynomial::Polynomial;
use crate::rational::{rat, Rational};

/// How a table was seeded.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableMode {
    /// b-values from the closed quadratic formula on one polynomial.
    Single,
    /// First row from a pair's coefficients, higher rows by recursion.
    Pair,
}

enum Source {
    Single(Polynomial),
    Pair {
        /// Coefficients of f1 (degree n-1), descending: alpha_0, alpha_1, ...
        alpha: Vec<Rational>,
        /// Coefficients of f2 (degree n-2), descending: beta_0, beta_1, ...
        beta: Vec<Rational>,
    },
}

/// Cached b(j)_i values for one polynomial or one pair.
///
/// The cache fills lazily but behaves as if computed eagerly: fills are
/// idempotent and reads are safe from any number of threads.
pub struct BTable {
    source: Source,
    n: i64,
    cache: RwLock<HashMap<(i64, i64), Rational>>,
}

impl BTable {
    /// Table for a single polynomial of degree >= 1.
    pub fn from_polynomial(f: &Polynomial) -> Result<Self> {
        if f.degree() < 1 {
            return Err(Error::DegreeTooSmall { degree: f.degree() });
        }
        Ok(BTable {
            n: f.degree() as i64,
            source: Source::Single(f.clone()),
            cache: RwLock::new(HashMap::new()),
        })
    }

    /// Table for a pair (f1, f2) with deg f1 = deg f2 + 1 = n - 1.
    pub fn from_pair(f1: &Polynomial, f2: &Polynomial) -> Result<Self> {
        if f1.degree() < 1 || f1.degree() != f2.degree() + 1 {
            return Err(Error::DegreeMismatch {
                deg1: f1.degree(),
                deg2: f2.degree(),
            });
        }
        Ok(BTable {
            n: f1.degree() as i64 + 1,
            source: Source::Pair {
                alpha: f1.coeffs_descending(),
                beta: f2.coeffs_descending(),
            },
            cache: RwLock::new(HashMap::new()),
        })
    }

    pub fn mode(&self) -> TableMode {
        match self.source {
            Source::Single(_) => TableMode::Single,
            Source::Pair { .. } => TableMode::Pair,
        }
    }

    /// The reference degree n: deg f in single mode, deg f1 + 1 in pair mode.
    pub fn n(&self) -> i64 {
        self.n
    }

    /// c(1)_i. Single mode: (n-i) a_{n-i} / (n a_n); pair mode: alpha_i / alpha_0.
    /// Zero outside the defined range.
    pub fn c1(&self, i: i64) -> Rational {
        if i < 0 {
            return Rational::zero();
        }
        match &self.source {
            Source::Single(f) => {
                let n = self.n;
                let an = f.coeff_at(n);
                rat(n - i) * f.coeff_at(n - i) / (rat(n) * an)
            }
            Source::Pair { alpha, .. } => match alpha.get(i as usize) {
                Some(a) => a / &alpha[0],
                None => Rational::zero(),
            },
        }
    }

    /// b(j)_i, total in both arguments.
    pub fn b(&self, j: i64, i: i64) -> Rational {
        if j <= 0 {
            return Rational::zero();
        }
        if let Some(v) = self.cache.read().expect("cache poisoned").get(&(j, i)) {
            return v.clone();
        }
        let v = match &self.source {
            Source::Single(f) => b_closed_formula(f, j, i),
            Source::Pair { beta, .. } => {
                if j == 1 {
                    // b(1)_{i+2} = beta_i, zero beyond the coefficient list.
                    if i < 2 {
                        Rational::zero()
                    } else {
                        beta.get((i - 2) as usize).cloned().unwrap_or_default()
                    }
                } else {
                    &self.b(j - 1, i) + &(self.c1(j - 1) * self.b(1, i - j + 1))
                        - self.c1(i - j) * self.b(1, j)
                }
            }
        };
        self.cache
            .write()
            .expect("cache poisoned")
            .insert((j, i), v.clone());
        v
    }
}

fn b_closed_formula(f: &Polynomial, j: i64, i: i64) -> Rational {
    let n = f.degree() as i64;
    let mut sum = Rational::zero();
    for p in 0..j {
        let term = rat(i - 2 * p) * f.coeff_at(n - p) * f.coeff_at(n - i + p);
        sum += &term;
    }
    rat(n) * sum - rat(j) * rat(n - i + j) * f.coeff_at(n - j) * f.coeff_at(n + j - i)
}

/// The quadratic quantity b(j)_i of a polynomial, j >= 1.
pub fn b_coeff(f: &Polynomial, j: i64, i: i64) -> Rational {
    b_closed_formula(f, j, i)
}

/// c(1)_i = (n - i) a_{n-i} / (n a_n); c(1)_0 = 1.
pub fn c1_coeff(f: &Polynomial, i: i64) -> Rational {
    if i < 0 {
        return Rational::zero();
    }
    let n = f.degree() as i64;
    rat(n - i) * f.coeff_at(n - i) / (rat(n) * f.coeff_at(n))
}

/// Pair-mode table: first row seeded from f2, rows 2..=max_j prefilled
/// through the recursion (further values still fill on demand).
pub fn pair_b_table(f1: &Polynomial, f2: &Polynomial, max_j: i64) -> Result<BTable> {
    let table = BTable::from_pair(f1, f2)?;
    let n = table.n();
    for j in 1..=max_j {
        for i in (2 * j - 2)..=(2 * n) {
            table.b(j, i);
        }
    }
    Ok(table)
}
