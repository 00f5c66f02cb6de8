//! The signed Euclidean remainder scheme and Sturm-theorem root counting.
//!
//! The chain of f starts at (f, f') and iterates
//! `f_{j-1} = q_{j-1} f_j - f_{j+1}` with deg f_{j+1} < deg f_j, stopping at
//! the first zero remainder or at a nonzero constant member. Differences of
//! sign variations along the chain count distinct real roots.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::polynomial::Polynomial;
use crate::rational::Rational;

/// Why a chain stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Termination {
    /// The next remainder was exactly zero; the last stored member is a
    /// scalar multiple of gcd(f, f') and may have positive degree.
    ZeroRemainder,
    /// The last stored member is a nonzero constant; the following
    /// remainder would be zero.
    ConstantReached,
}

/// An Euclidean remainder chain together with its quotients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SturmChain {
    /// f_0, f_1, ...; the last member is nonzero.
    pub members: Vec<Polynomial>,
    /// quotients[j] is the quotient of members[j] by members[j+1], for as
    /// many divisions as were performed.
    pub quotients: Vec<Polynomial>,
    pub termination: Termination,
}

/// One step of the signed remainder scheme:
/// `f_prev = q * f_cur - f_next` with deg f_next < deg f_cur.
pub fn euclid_step(f_prev: &Polynomial, f_cur: &Polynomial) -> Result<(Polynomial, Polynomial)> {
    let (q, r) = f_prev.div_rem(f_cur)?;
    Ok((q, -r))
}

/// The chain of f: members (f, f', ...) with recorded quotients.
pub fn sturm_chain_euclid(f: &Polynomial) -> Result<SturmChain> {
    if f.degree() < 1 {
        return Err(Error::DegreeTooSmall { degree: f.degree() });
    }
    chain_from_pair(f.clone(), f.derivative())
}

/// The chain of the scheme started at an arbitrary pair (f1, f2), f2 nonzero.
pub fn chain_from_pair(f1: Polynomial, f2: Polynomial) -> Result<SturmChain> {
    if f2.is_zero() {
        return Err(Error::ZeroDivisor);
    }
    let mut members = vec![f1, f2];
    let mut quotients = Vec::new();
    loop {
        let cur = &members[members.len() - 1];
        if cur.degree() == 0 {
            return Ok(SturmChain {
                members,
                quotients,
                termination: Termination::ConstantReached,
            });
        }
        let prev = &members[members.len() - 2];
        let (q, next) = euclid_step(prev, cur)?;
        quotients.push(q);
        if next.is_zero() {
            return Ok(SturmChain {
                members,
                quotients,
                termination: Termination::ZeroRemainder,
            });
        }
        members.push(next);
    }
}

impl SturmChain {
    /// Values of every member at x.
    pub fn eval_all(&self, x: &Rational) -> Vec<Rational> {
        self.members.iter().map(|m| m.eval(x)).collect()
    }
}

/// Sign changes in the member values at x, zeros deleted.
pub fn sign_variations(chain: &SturmChain, x: &Rational) -> usize {
    let mut count = 0;
    let mut last = 0i32;
    for m in &chain.members {
        let s = m.eval(x).signum();
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Number of distinct real roots of f in (a, b], by Sturm's theorem.
///
/// The chain is not squarefreed here: repeated roots of f are each counted
/// once (the variation difference computes the Cauchy index of f'/f).
pub fn count_real_roots(chain: &SturmChain, a: &Rational, b: &Rational) -> Result<usize> {
    if a >= b {
        return Err(Error::BadInterval {
            a: a.to_string(),
            b: b.to_string(),
        });
    }
    let f = &chain.members[0];
    for endpoint in [a, b] {
        if f.eval(endpoint).is_zero() {
            return Err(Error::EndpointIsRoot {
                endpoint: endpoint.to_string(),
            });
        }
    }
    Ok(sign_variations(chain, a) - sign_variations(chain, b))
}

/// Disjoint intervals (lo, hi], each containing exactly one distinct real
/// root of f, covering all roots in (a, b]. Bisection at rational midpoints;
/// f should be squarefree on the interval (see [`Polynomial::squarefree_part`]).
pub fn isolate_roots(
    f: &Polynomial,
    a: &Rational,
    b: &Rational,
) -> Result<Vec<(Rational, Rational)>> {
    let chain = sturm_chain_euclid(f)?;
    let total = count_real_roots(&chain, a, b)?;
    let mut out = Vec::with_capacity(total);
    let mut stack = vec![(a.clone(), b.clone(), total)];
    while let Some((lo, hi, k)) = stack.pop() {
        match k {
            0 => {}
            1 => out.push((lo, hi)),
            _ => {
                let mid = split_point(f, &lo, &hi);
                let left = sign_variations(&chain, &lo) - sign_variations(&chain, &mid);
                // Push right first so the stack yields ascending intervals.
                stack.push((mid.clone(), hi, k - left));
                stack.push((lo, mid, left));
            }
        }
    }
    out.sort_by(|x, y| x.0.cmp(&y.0));
    Ok(out)
}

/// A split point strictly inside (lo, hi) that is not a root of f.
/// Tries the midpoint first, then nearby grid points; f has finitely many
/// roots, so with deg f + 2 candidates one must work.
fn split_point(f: &Polynomial, lo: &Rational, hi: &Rational) -> Rational {
    let width = hi - lo;
    let mid = lo + &width / &Rational::from(2);
    if !f.eval(&mid).is_zero() {
        return mid;
    }
    let steps = (f.degree().max(1) as i64) + 2;
    for k in 1..steps {
        let cand = lo + &width * &Rational::new(2 * k + 1, 2 * steps);
        if &cand > lo && &cand < hi && !f.eval(&cand).is_zero() {
            return cand;
        }
    }
    unreachable!("more candidate split points than roots of f");
}
