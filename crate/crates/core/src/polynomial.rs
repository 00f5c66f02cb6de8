//! Dense univariate polynomials over [`Rational`].
//!
//! Coefficients are stored by ascending power with the leading stored
//! coefficient nonzero; the zero polynomial stores nothing and has the
//! sentinel degree -1.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A univariate polynomial with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    /// Coefficient of x^k at index k; empty for the zero polynomial.
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::from_ascending(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Polynomial::from_ascending(coeffs)
    }

    /// Builds from coefficients indexed by ascending power, trimming
    /// trailing zeros.
    pub fn from_ascending(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    /// Builds from coefficients in descending degree order (a_n first).
    pub fn from_descending(coeffs: &[Rational]) -> Self {
        let mut asc: Vec<Rational> = coeffs.to_vec();
        asc.reverse();
        Polynomial::from_ascending(asc)
    }

    /// Integer-coefficient convenience constructor, descending order.
    pub fn from_int_descending(coeffs: &[i64]) -> Self {
        let v: Vec<Rational> = coeffs.iter().map(|&c| Rational::from(c)).collect();
        Polynomial::from_descending(&v)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with -1 for the zero polynomial.
    pub fn degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    /// Coefficient of x^k; zero outside the stored range.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coefficient of x^k with the convention a_k = 0 for k < 0 and k > deg.
    pub fn coeff_at(&self, k: i64) -> Rational {
        if k < 0 {
            Rational::zero()
        } else {
            self.coeff(k as usize)
        }
    }

    /// Coefficients by ascending power.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficients in descending degree order (a_n first). Empty for zero.
    pub fn coeffs_descending(&self) -> Vec<Rational> {
        let mut v = self.coeffs.clone();
        v.reverse();
        v
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Polynomial {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| Rational::from(k as i64) * c)
            .collect();
        Polynomial::from_ascending(coeffs)
    }

    pub fn scalar_mul(&self, s: &Rational) -> Polynomial {
        Polynomial::from_ascending(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Euclidean division: `self = q * divisor + r` with deg r < deg divisor.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        if divisor.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        let d = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= d {
            return Ok((Polynomial::zero(), self.clone()));
        }
        let lc = divisor.coeffs[d].clone();
        let mut rem = self.coeffs.clone();
        let qlen = rem.len() - d;
        let mut quot = vec![Rational::zero(); qlen];
        for k in (0..qlen).rev() {
            let head = rem[k + d].clone();
            if head.is_zero() {
                continue;
            }
            let q = &head / &lc;
            for (j, dj) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &(dj * &q);
            }
            quot[k] = q;
        }
        Ok((
            Polynomial::from_ascending(quot),
            Polynomial::from_ascending(rem),
        ))
    }

    /// Monic gcd via the Euclidean algorithm; gcd(0, 0) = 0.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("b is nonzero");
            a = b;
            b = r;
        }
        match a.leading() {
            Some(lc) if !lc.is_one() => {
                let inv = lc.recip();
                a.scalar_mul(&inv)
            }
            _ => a,
        }
    }

    /// `self / gcd(self, self')`: same distinct roots, all simple.
    pub fn squarefree_part(&self) -> Polynomial {
        if self.degree() < 1 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() < 1 {
            return self.clone();
        }
        let (q, r) = self.div_rem(&g).expect("gcd is nonzero");
        debug_assert!(r.is_zero());
        q
    }

    /// Cauchy bound: every real root lies in (-B, B).
    pub fn root_bound(&self) -> Rational {
        match self.leading() {
            None => Rational::one(),
            Some(lc) => {
                let mut max = Rational::zero();
                for c in &self.coeffs[..self.coeffs.len() - 1] {
                    let a = c.abs();
                    if a > max {
                        max = a;
                    }
                }
                Rational::one() + max / lc.abs()
            }
        }
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        Polynomial::from_ascending(coeffs)
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        Polynomial::from_ascending(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += &(a * b);
            }
        }
        Polynomial::from_ascending(coeffs)
    }
}

macro_rules! forward_value_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
        impl $trait<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$method(&rhs)
            }
        }
    };
}

forward_value_binop!(Add, add);
forward_value_binop!(Sub, sub);
forward_value_binop!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Wire form of the shared polynomial format:
/// `{"coeffs": ["a_n", ..., "a_0"]}` in descending degree order, each entry
/// a decimal integer or `"p/q"` string; the leading entry must be nonzero.
#[derive(Serialize, Deserialize)]
struct PolynomialWire {
    coeffs: Vec<String>,
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let coeffs = self
            .coeffs_descending()
            .iter()
            .map(Rational::to_string)
            .collect();
        PolynomialWire { coeffs }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire = PolynomialWire::deserialize(deserializer)?;
        let parsed: std::result::Result<Vec<Rational>, String> =
            wire.coeffs.iter().map(|s| s.parse()).collect();
        let coeffs = parsed.map_err(serde::de::Error::custom)?;
        if coeffs.first().is_some_and(Rational::is_zero) {
            return Err(serde::de::Error::custom(
                "leading coefficient must be nonzero",
            ));
        }
        Ok(Polynomial::from_descending(&coeffs))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.signum() < 0 {
                ("-", c.abs())
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if k == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
