//! Exact Sturm sequences two ways.
//!
//! This crate computes the signed Euclidean remainder chain of a rational
//! polynomial and, independently, reconstructs every member from closed
//! determinantal formulas in the coefficients. Around that core sit a
//! numeric verification layer for the quadratic-determinant identities the
//! formulas rest on, Sturm-theorem root counting and isolation, and the
//! Euler-polynomial example family whose chain asymptotics produce Cauchy
//! determinants.
//!
//! Everything is exact: the only scalar is an arbitrary-precision rational,
//! and every check in the crate asserts equality, never closeness.

pub mod btable;
pub mod identities;
pub mod asympt;
pub mod error;
pub mod euler;
pub mod jacobi;
pub mod matrix;
pub mod normalized;
pub mod polynomial;
pub mod rational;
pub mod sturm;

pub use error::{Error, Result};
pub use polynomial::Polynomial;
pub use rational::Rational;
