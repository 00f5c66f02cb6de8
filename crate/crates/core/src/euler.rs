//! Euler's cosine approximants and the Gauss hypergeometric series.
//!
//! E_n(x) = (1/2){(1 + ix/2n)^{2n} + (1 - ix/2n)^{2n}}
//!        = sum_k (-1)^k binom(2n, 2k) x^{2k} / (2n)^{2k},
//!
//! an even degree-2n polynomial with constant term 1 that tends to cos x.
//! Its even-part identity with the terminating hypergeometric series is
//! checked coefficientwise, exactly.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::identities::IdentityReport;
use crate::polynomial::Polynomial;
use crate::rational::{rat, Rational};

/// binom(n, k) as a big integer.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for t in 0..k {
        acc = acc * BigInt::from(n - t) / BigInt::from(t + 1);
    }
    acc
}

/// The coefficient e_{nk} of x^{2k} in E_n: (-1)^k binom(2n,2k) / (2n)^{2k}.
pub fn euler_coeff(n: u64, k: u64) -> Rational {
    let sign = if k % 2 == 0 { 1 } else { -1 };
    let num = binomial(2 * n, 2 * k) * BigInt::from(sign);
    let den = BigInt::from(2 * n).pow(2 * k as u32);
    Rational::new(num, den)
}

/// E_n(x), even of degree 2n with constant term 1.
pub fn euler_poly(n: u64) -> Polynomial {
    let mut coeffs = vec![Rational::zero(); 2 * n as usize + 1];
    for k in 0..=n {
        coeffs[2 * k as usize] = euler_coeff(n, k);
    }
    Polynomial::from_ascending(coeffs)
}

/// f_n with f_n(x^2) = E_n(x): coefficient of x^k is e_{nk}.
pub fn f_n_poly(n: u64) -> Polynomial {
    Polynomial::from_ascending((0..=n).map(|k| euler_coeff(n, k)).collect())
}

/// Parameters of a Gauss series F(alpha, beta, gamma, x).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HypergeomParams {
    pub alpha: Rational,
    pub beta: Rational,
    pub gamma: Rational,
}

/// The i-th series coefficient: rising factorials of alpha and beta over
/// i! and the rising factorial of gamma.
pub fn hypergeom_coeff(p: &HypergeomParams, i: usize) -> Result<Rational> {
    let mut num = Rational::one();
    let mut den = Rational::one();
    for t in 0..i {
        let t_r = rat(t as i64);
        num = num * (&p.alpha + &t_r) * (&p.beta + &t_r);
        let g = &p.gamma + &t_r;
        if g.is_zero() {
            return Err(Error::PoleInGamma { term: t });
        }
        den = den * rat(t as i64 + 1) * g;
    }
    Ok(num / den)
}

/// Coefficientwise identity between the terminating series
/// F(-n/2, -n/2 + 1/2, 1/2, x^2) and the even part of (1 + x)^n:
/// both equal sum_i binom(n, 2i) x^{2i}.
pub fn check_gauss_even(n: u64) -> Result<IdentityReport> {
    let params = HypergeomParams {
        alpha: Rational::new(-(n as i64), 2),
        beta: Rational::new(-(n as i64) + 1, 2),
        gamma: Rational::new(1, 2),
    };
    let mut residual = Rational::zero();
    for i in 0..=(n / 2) {
        let series = hypergeom_coeff(&params, i as usize)?;
        let binom_part = Rational::from(binomial(n, 2 * i));
        residual += &(&series - &binom_part).abs();
    }
    // beyond the truncation the series must terminate
    residual += &hypergeom_coeff(&params, (n / 2) as usize + 1)?.abs();
    Ok(IdentityReport::new(
        "gauss-even-part",
        json!({ "n": n }),
        residual,
    ))
}

/// Coefficientwise identity E_n(x) = F(-n, -n + 1/2, 1/2, -x^2/4n^2).
pub fn check_euler_hypergeom(n: u64) -> Result<IdentityReport> {
    let params = HypergeomParams {
        alpha: rat(-(n as i64)),
        beta: Rational::new(-2 * n as i64 + 1, 2),
        gamma: Rational::new(1, 2),
    };
    let arg = Rational::new(-1, 4 * (n * n) as i64);
    let mut residual = Rational::zero();
    for k in 0..=n as usize {
        let series_term = hypergeom_coeff(&params, k)? * arg.pow(k as i32);
        residual += &(&series_term - &euler_coeff(n, k as u64)).abs();
    }
    residual += &hypergeom_coeff(&params, n as usize + 1)?.abs();
    Ok(IdentityReport::new(
        "euler-hypergeometric",
        json!({ "n": n }),
        residual,
    ))
}

/// One row of a cosine-coefficient convergence report.
#[derive(Debug, Clone, Serialize)]
pub struct CosLimitEntry {
    pub n: u64,
    pub value: Rational,
    pub deviation: Rational,
}

/// e_{nk} along n_list against the limit (-1)^k / (2k)!.
#[derive(Debug, Clone, Serialize)]
pub struct CosLimitReport {
    pub k: u64,
    pub limit: Rational,
    pub entries: Vec<CosLimitEntry>,
    /// Deviations never increase along n_list (strictly decrease for k >= 1).
    pub monotone: bool,
}

/// (-1)^k / (2k)!.
pub fn cos_coeff_limit(k: u64) -> Rational {
    let mut fact = BigInt::one();
    for t in 2..=2 * k {
        fact *= BigInt::from(t);
    }
    let sign = if k % 2 == 0 { 1 } else { -1 };
    Rational::new(BigInt::from(sign), fact)
}

/// e_{nk} via the product form
/// (-1)^k/(2k)! * prod_{t=1}^{2k-1} (1 - t/2n); cross-checked against the
/// binomial form.
pub fn cos_limit_check(k: u64, n_list: &[u64]) -> Result<CosLimitReport> {
    let limit = cos_coeff_limit(k);
    let mut entries = Vec::with_capacity(n_list.len());
    for &n in n_list {
        if n == 0 {
            return Err(Error::BadIndex {
                context: "n must be positive".into(),
            });
        }
        let mut value = limit.clone();
        for t in 1..2 * k {
            value = value * (Rational::one() - Rational::new(t as i64, 2 * n as i64));
        }
        if value != euler_coeff(n, k) {
            return Err(Error::CrossCheck {
                context: format!("e_({n},{k}) product form"),
            });
        }
        let deviation = (&value - &limit).abs();
        entries.push(CosLimitEntry {
            n,
            value,
            deviation,
        });
    }
    let monotone = entries
        .windows(2)
        .all(|w| w[0].n >= w[1].n || w[1].deviation <= w[0].deviation);
    Ok(CosLimitReport {
        k,
        limit,
        entries,
        monotone,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_euler_polynomials_match_the_displays() {
        assert_eq!(
            euler_poly(1),
            Polynomial::from_descending(&[Rational::new(-1, 4), rat(0), rat(1)])
        );
        assert_eq!(
            euler_poly(2),
            Polynomial::from_descending(&[
                Rational::new(1, 256),
                rat(0),
                Rational::new(-3, 8),
                rat(0),
                rat(1),
            ])
        );
        let e3 = euler_poly(3);
        assert_eq!(e3.coeff(2), Rational::new(-5, 12));
        assert_eq!(e3.coeff(4), Rational::new(5, 432));
        assert_eq!(e3.coeff(6), Rational::new(-1, 46656));
        let e4 = euler_poly(4);
        assert_eq!(e4.coeff(2), Rational::new(-7, 16));
        assert_eq!(e4.coeff(4), Rational::new(35, 2048));
        assert_eq!(e4.coeff(6), Rational::new(-7, 65536));
        assert_eq!(e4.coeff(8), Rational::new(1, 16777216));
    }

    #[test]
    fn euler_is_even_with_constant_term_one() {
        for n in 1..=50u64 {
            let e = euler_poly(n);
            assert_eq!(e.degree(), 2 * n as isize);
            assert_eq!(e.coeff(0), rat(1));
            for k in (1..=2 * n as usize).step_by(2) {
                assert!(e.coeff(k).is_zero(), "odd coefficient at n={n}, k={k}");
            }
        }
    }

    #[test]
    fn f_n_substitution_reproduces_euler() {
        for n in 1..=8u64 {
            let f = f_n_poly(n);
            assert_eq!(f.degree(), n as isize);
            let e = euler_poly(n);
            // compare f_n(x^2) with E_n coefficientwise
            for k in 0..=n as usize {
                assert_eq!(f.coeff(k), e.coeff(2 * k));
            }
        }
        assert_eq!(f_n_poly(3).coeff(3), Rational::new(-1, 46656));
        assert_eq!(
            f_n_poly(2),
            Polynomial::from_descending(&[
                Rational::new(1, 256),
                Rational::new(-3, 8),
                rat(1)
            ])
        );
    }

    #[test]
    fn hypergeom_examples() {
        let p = HypergeomParams {
            alpha: rat(-2),
            beta: Rational::new(-3, 2),
            gamma: Rational::new(1, 2),
        };
        assert_eq!(hypergeom_coeff(&p, 0).unwrap(), rat(1));
        assert_eq!(hypergeom_coeff(&p, 1).unwrap(), rat(6)); // = binom(4, 2)
        assert_eq!(hypergeom_coeff(&p, 2).unwrap(), rat(1)); // = binom(4, 4)
    }

    #[test]
    fn gamma_pole_detected() {
        let p = HypergeomParams {
            alpha: rat(1),
            beta: rat(1),
            gamma: rat(-2),
        };
        assert_eq!(
            hypergeom_coeff(&p, 4),
            Err(Error::PoleInGamma { term: 2 })
        );
    }

    #[test]
    fn gauss_even_part_small_and_large() {
        for n in [1u64, 4, 12] {
            let r = check_gauss_even(n).unwrap();
            assert!(r.passed, "n = {n}: residual {}", r.residual);
        }
    }

    #[test]
    fn euler_hypergeometric_sweep() {
        for n in 1..=12u64 {
            let r = check_euler_hypergeom(n).unwrap();
            assert!(r.passed, "n = {n}: residual {}", r.residual);
        }
    }

    #[test]
    fn cos_limit_closed_forms() {
        // e_{n1} = -(1/2)(1 - 1/2n)
        let rep = cos_limit_check(1, &[5, 10, 20]).unwrap();
        assert_eq!(rep.limit, Rational::new(-1, 2));
        for e in &rep.entries {
            let expected = Rational::new(-1, 2)
                * (Rational::one() - Rational::new(1, 2 * e.n as i64));
            assert_eq!(e.value, expected);
        }
        assert!(rep.monotone);

        // k = 0: e_{n0} = 1 for all n
        let rep = cos_limit_check(0, &[3, 6, 12]).unwrap();
        for e in &rep.entries {
            assert_eq!(e.value, rat(1));
            assert_eq!(e.deviation, rat(0));
        }
        assert!(rep.monotone);
    }

    #[test]
    fn cos_limit_deviation_roughly_halves() {
        let rep = cos_limit_check(2, &[5, 10, 20, 40]).unwrap();
        assert!(rep.monotone);
        for w in rep.entries.windows(2) {
            // ratio within [0.3, 0.8] per doubling
            let lhs = &w[1].deviation * &rat(10);
            assert!(lhs >= &w[0].deviation * &rat(3));
            assert!(lhs <= &w[0].deviation * &rat(8));
        }
    }
}
