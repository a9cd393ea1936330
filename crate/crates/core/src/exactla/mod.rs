// SPDX-License-Identifier: Apache-2.0

//! Exact rational linear algebra.
//!
//! All elimination uses right-to-left column pivoting: columns are scanned from
//! the last one backwards and the first row (in order) with a nonzero entry in
//! that column becomes the pivot row. Free variables are therefore the leftmost
//! ones, so a nullspace basis expresses later coordinates in terms of earlier ones.

mod elimination;
mod matrix;
mod monomial;
pub mod poly;
mod signature;

use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use elimination::{nullspace, rank, row_basis, solve_linear, span_coordinates, LinearSolution};
pub use matrix::{IntMatrix, Matrix};
pub use monomial::{
    multiplicative_solve, IrrationalFamily, MonomialSolution, MultiplicativeOutcome,
};
pub use signature::{signature, SignatureResult};

/// Exact rational number in canonical reduced form.
pub type Scalar = num_rational::BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// `n/d`; panics when `d == 0`.
pub fn frac(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// Parses `p`, `-p`, `p/q` (no spaces).
pub fn parse_scalar(text: &str) -> Option<Scalar> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let num: BigInt = num.trim().parse().ok()?;
    let den: BigInt = den.trim().parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Scalar::new(num, den))
}

/// `p/q` or `p`, as used in reports.
pub fn format_scalar(x: &Scalar) -> String {
    use alloc::string::ToString;
    x.to_string()
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter().zip(b).fold(Scalar::zero(), |acc, (x, y)| {
        if x.is_zero() || y.is_zero() {
            acc
        } else {
            acc + x * y
        }
    })
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Sign of a nonzero scalar as ±1, 0 for zero.
pub fn sign(x: &Scalar) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_negative() {
        -1
    } else {
        1
    }
}

/// Exact square root of a rational, if it is a rational square.
pub fn rational_sqrt(x: &Scalar) -> Option<Scalar> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().magnitude().sqrt();
    let d = x.denom().magnitude().sqrt();
    if &(&n * &n) == x.numer().magnitude() && &(&d * &d) == x.denom().magnitude() {
        Some(Scalar::new(BigInt::from(n), BigInt::from(d)))
    } else {
        None
    }
}

pub fn scalar_vec(values: &[i64]) -> Vec<Scalar> {
    values.iter().map(|&v| int(v)).collect()
}
