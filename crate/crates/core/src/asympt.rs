//! Limits of the normalized quantities along the Euler family, the
//! limiting determinant, and the Cauchy/Hilbert-variant closed forms.
//!
//! For f_n the ratios r and beta have exact rational limits as n grows;
//! the determinant of the limiting beta-matrix factors through a Hankel
//! determinant of Cauchy type, and the scaled determinants of f_n approach
//! it like 1/n. Every statement here is checked with exact rational
//! inequalities, never floating point.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::euler::f_n_poly;
use crate::jacobi::JacobiScheme;
use crate::matrix::Matrix;
use crate::normalized::beta_coeff;
use crate::rational::{rat, Rational};

/// lim_n r_{n-i} = (2i+1)(2i+2) / ((2i+3)(2i+4)).
pub fn r_limit(i: i64) -> Rational {
    Rational::new((2 * i + 1) * (2 * i + 2), (2 * i + 3) * (2 * i + 4))
}

/// The exact value r_{n-i} for f_n:
/// r_limit(i) * (2n-2i-2)(2n-2i-3) / ((2n-2i)(2n-2i-1)).
pub fn r_fn_exact(n: i64, i: i64) -> Rational {
    let m = 2 * n - 2 * i;
    r_limit(i) * Rational::new((m - 2) * (m - 3), m * (m - 1))
}

/// lim_n beta(j)_i = -2j(i-j) / (2i-1).
pub fn beta_limit(j: i64, i: i64) -> Rational {
    Rational::new(-2 * j * (i - j), 2 * i - 1)
}

/// The shifted-by-j companion: lim_n beta(j)_i + j = (2j-1)j / (2i-1).
pub fn beta_limit_shifted(j: i64, i: i64) -> Rational {
    Rational::new((2 * j - 1) * j, 2 * i - 1)
}

/// Determinant of the m x m limiting beta-matrix with entries
/// beta_limit(min(p,q), p+q).
pub fn c_inf_det(m: usize) -> Result<Rational> {
    let mat = Matrix::from_fn(m, m, |r, c| {
        let (p, q) = (r as i64 + 1, c as i64 + 1);
        beta_limit(p.min(q), p + q)
    });
    mat.det()
}

/// Node lists for a Cauchy matrix ((x_i + y_j)^{-1}).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CauchySpec {
    pub x: Vec<Rational>,
    pub y: Vec<Rational>,
}

impl CauchySpec {
    /// Validates equal lengths and all pairwise sums nonzero.
    pub fn new(x: Vec<Rational>, y: Vec<Rational>) -> Result<Self> {
        if x.len() != y.len() {
            return Err(Error::ShapeError {
                expected: "equally long node lists".into(),
                got: format!("{} and {}", x.len(), y.len()),
            });
        }
        for (r, xi) in x.iter().enumerate() {
            for (c, yj) in y.iter().enumerate() {
                if (xi + yj).is_zero() {
                    return Err(Error::SingularPair { row: r, col: c });
                }
            }
        }
        Ok(CauchySpec { x, y })
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    /// The matrix ((x_i + y_j)^{-1}).
    pub fn matrix(&self) -> Matrix {
        Matrix::from_fn(self.len(), self.len(), |r, c| {
            (&self.x[r] + &self.y[c]).recip()
        })
    }
}

/// The Cauchy product formula
/// prod_{i<j} (x_j - x_i)(y_j - y_i) / prod_{i,j} (x_i + y_j);
/// equals det((x_i + y_j)^{-1}) exactly.
pub fn cauchy_closed_form(spec: &CauchySpec) -> Rational {
    let m = spec.len();
    let mut num = Rational::one();
    for i in 0..m {
        for j in i + 1..m {
            num = num * (&spec.x[j] - &spec.x[i]) * (&spec.y[j] - &spec.y[i]);
        }
    }
    let mut den = Rational::one();
    for xi in &spec.x {
        for yj in &spec.y {
            den *= &(xi + yj);
        }
    }
    num / den
}

/// The m x m Hankel matrix with entries 1/3, 1/5, ..., 1/(4m-1):
/// the Cauchy specialization x_i = 2i-2, y_i = 2i+1.
pub fn hilbert_variant_spec(m: usize) -> CauchySpec {
    let x = (1..=m as i64).map(|i| rat(2 * i - 2)).collect();
    let y = (1..=m as i64).map(|i| rat(2 * i + 1)).collect();
    CauchySpec::new(x, y).expect("all pairwise sums are odd positive integers")
}

/// Its determinant by the specialized product
/// prod_{i<j} (2j-2i)^2 / prod_{i,j} (2i+2j-1), cross-checked against the
/// entrywise determinant.
pub fn hilbert_variant_det(m: usize) -> Result<Rational> {
    let spec = hilbert_variant_spec(m);
    let mut num = Rational::one();
    for i in 1..=m as i64 {
        for j in i + 1..=m as i64 {
            num *= &rat(2 * j - 2 * i).pow(2);
        }
    }
    let mut den = Rational::one();
    for i in 1..=m as i64 {
        for j in 1..=m as i64 {
            den *= &rat(2 * i + 2 * j - 1);
        }
    }
    let product_form = num / den;
    let brute = spec.matrix().det()?;
    if product_form != brute {
        return Err(Error::CrossCheck {
            context: format!("Hankel determinant m = {m}"),
        });
    }
    Ok(product_form)
}

/// One evaluation point of the asymptotic comparison.
#[derive(Debug, Clone, Serialize)]
pub struct AsymptoticEntry {
    pub n: u64,
    /// s(n) = (prod_{t=1}^{m} a_{n-t})^{-2} c(m+1) / n^m for f_n.
    pub scaled: Rational,
    pub deviation: Rational,
}

/// Ratio of deviations across one doubling of n.
#[derive(Debug, Clone, Serialize)]
pub struct DoublingRatio {
    pub from_n: u64,
    pub to_n: u64,
    pub ratio: Rational,
    /// Whether the ratio lies in [3/10, 8/10], the band consistent with a
    /// leading 1/n error term.
    pub in_band: bool,
}

/// Convergence report for the scaled determinants of the Euler family.
#[derive(Debug, Clone, Serialize)]
pub struct ConvergenceReport {
    pub m: usize,
    pub limit: Rational,
    pub entries: Vec<AsymptoticEntry>,
    pub ratios: Vec<DoublingRatio>,
    pub all_in_band: bool,
}

/// s(n) for each n in n_list against the limiting determinant, with
/// deviation-contraction ratios for each doubling pair in the list.
pub fn asymptotic_check(m: usize, n_list: &[u64]) -> Result<ConvergenceReport> {
    if m == 0 {
        return Err(Error::BadIndex {
            context: "m must be at least 1".into(),
        });
    }
    let limit = c_inf_det(m)?;
    let mut entries: Vec<AsymptoticEntry> = Vec::with_capacity(n_list.len());
    for &n in n_list {
        if (n as usize) <= m {
            return Err(Error::BadIndex {
                context: format!("need n > m, got n = {n}, m = {m}"),
            });
        }
        let f = f_n_poly(n);
        let scheme = JacobiScheme::from_polynomial(&f)?;
        let det = scheme.c_det(m + 1, 0)?;
        let mut prod = Rational::one();
        for t in 1..=m as i64 {
            prod *= &f.coeff_at(n as i64 - t);
        }
        let scaled = det / (&prod * &prod) / rat(n as i64).pow(m as i32);
        let deviation = (&scaled - &limit).abs();
        entries.push(AsymptoticEntry {
            n,
            scaled,
            deviation,
        });
    }
    let mut ratios = Vec::new();
    for w in entries.windows(2) {
        if w[1].n != 2 * w[0].n || w[0].deviation.is_zero() {
            continue;
        }
        let ratio = &w[1].deviation / &w[0].deviation;
        let in_band = ratio >= Rational::new(3, 10) && ratio <= Rational::new(8, 10);
        ratios.push(DoublingRatio {
            from_n: w[0].n,
            to_n: w[1].n,
            ratio,
            in_band,
        });
    }
    let all_in_band = ratios.iter().all(|r| r.in_band);
    Ok(ConvergenceReport {
        m,
        limit,
        entries,
        ratios,
        all_in_band,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::normalized::NormalizedTable;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn r_limits() {
        assert_eq!(r_limit(0), Rational::new(1, 6));
        assert_eq!(r_limit(1), Rational::new(2, 5));
    }

    #[test]
    fn r_exact_form_matches_the_coefficient_table() {
        for n in [6i64, 10, 15] {
            let f = f_n_poly(n as u64);
            let table = NormalizedTable::build(&f, 1, 2).unwrap();
            for i in 0..=2 {
                assert_eq!(
                    table.r[&(n - i)].clone().unwrap(),
                    r_fn_exact(n, i),
                    "n={n} i={i}"
                );
            }
        }
    }

    #[test]
    fn r_at_n_100_is_close_to_its_limit() {
        let dev = (r_fn_exact(100, 0) - r_limit(0)).abs();
        assert!(dev <= Rational::new(3, 100));
    }

    #[test]
    fn beta_limits() {
        assert_eq!(beta_limit(1, 2), Rational::new(-2, 3));
        assert_eq!(beta_limit(1, 3), Rational::new(-4, 5));
        assert_eq!(beta_limit(2, 4), Rational::new(-8, 7));
        assert_eq!(beta_limit(2, 5), Rational::new(-4, 3));
        assert_eq!(beta_limit(3, 6), Rational::new(-18, 11));
        assert_eq!(beta_limit(3, 3), rat(0));
        assert_eq!(beta_limit_shifted(2, 4), Rational::new(6, 7));
    }

    #[test]
    fn limiting_determinants() {
        assert_eq!(c_inf_det(1).unwrap(), Rational::new(-2, 3));
        // det [[-2/3, -4/5], [-4/5, -8/7]] = 16/21 - 16/25
        assert_eq!(c_inf_det(2).unwrap(), Rational::new(64, 525));
    }

    #[test]
    fn limiting_determinant_factorization() {
        // (-1)^m 2^m (m!)^2 times the Hankel determinant, exactly.
        for m in 1..=5usize {
            let mut factor = rat(1);
            for t in 1..=m as i64 {
                factor = factor * rat(t) * rat(t);
            }
            factor = factor * rat(2).pow(m as i32);
            if m % 2 == 1 {
                factor = -factor;
            }
            assert_eq!(
                c_inf_det(m).unwrap(),
                factor * hilbert_variant_det(m).unwrap(),
                "m = {m}"
            );
        }
    }

    #[test]
    fn hankel_values() {
        assert_eq!(hilbert_variant_det(1).unwrap(), Rational::new(1, 3));
        assert_eq!(hilbert_variant_det(2).unwrap(), Rational::new(4, 525));
        hilbert_variant_det(4).unwrap();
    }

    #[test]
    fn cauchy_small_cases() {
        let spec = CauchySpec::new(vec![rat(0)], vec![rat(3)]).unwrap();
        assert_eq!(cauchy_closed_form(&spec), Rational::new(1, 3));

        let spec = CauchySpec::new(vec![rat(0), rat(2)], vec![rat(3), rat(5)]).unwrap();
        assert_eq!(cauchy_closed_form(&spec), Rational::new(4, 525));
        assert_eq!(spec.matrix().det().unwrap(), Rational::new(4, 525));
    }

    #[test]
    fn cauchy_closed_form_equals_brute_determinant() {
        let mut rng = ChaCha8Rng::seed_from_u64(51);
        let mut done = 0;
        while done < 12 {
            let m = rng.gen_range(1..=5);
            let x: Vec<Rational> = (0..m)
                .map(|_| Rational::new(rng.gen_range(-12i64..=12), rng.gen_range(1i64..=4)))
                .collect();
            let y: Vec<Rational> = (0..m)
                .map(|_| Rational::new(rng.gen_range(-12i64..=12), rng.gen_range(1i64..=4)))
                .collect();
            let Ok(spec) = CauchySpec::new(x, y) else {
                continue;
            };
            done += 1;
            assert_eq!(cauchy_closed_form(&spec), spec.matrix().det().unwrap());
        }
    }

    #[test]
    fn singular_pair_rejected() {
        let e = CauchySpec::new(vec![rat(1), rat(2)], vec![rat(0), rat(-1)]);
        assert_eq!(e, Err(Error::SingularPair { row: 0, col: 1 }));
    }

    #[test]
    fn scaled_determinant_m1_has_closed_form() {
        // s(n) for m = 1 telescopes to 2 r_n - 1 + 1/n, so
        // s(n) + 2/3 = 2/(3(2n-1)).
        let rep = asymptotic_check(1, &[10, 20, 40]).unwrap();
        assert_eq!(rep.limit, Rational::new(-2, 3));
        for e in &rep.entries {
            assert_eq!(e.deviation, Rational::new(2, 3 * (2 * e.n as i64 - 1)));
        }
        assert!(rep.all_in_band);
        assert_eq!(rep.ratios.len(), 2);
    }

    #[test]
    fn deviation_contracts_for_m2() {
        let rep = asymptotic_check(2, &[10, 20, 40]).unwrap();
        for w in rep.entries.windows(2) {
            assert!(w[1].deviation < w[0].deviation);
        }
        assert!(rep.all_in_band);
    }

    #[test]
    fn m3_sign_matches_the_negative_limit() {
        let rep = asymptotic_check(3, &[20, 40]).unwrap();
        assert!(rep.limit.signum() < 0);
        for e in &rep.entries {
            assert_eq!(e.scaled.signum(), -1);
        }
    }
}
