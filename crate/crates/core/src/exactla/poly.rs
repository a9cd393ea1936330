// SPDX-License-Identifier: Apache-2.0

//! Univariate polynomials with rational coefficients, lowest degree first.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{Matrix, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Scalar {
        self.coeffs.last().cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.leading().recip();
        Poly::new(self.coeffs.iter().map(|c| c * &inv).collect())
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(Scalar::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Scalar::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by zero polynomial");
        let mut r = self.coeffs.clone();
        let mut q = vec![Scalar::zero(); r.len().saturating_sub(dd)];
        let lead_inv = d.leading().recip();
        while r.len() > dd && !r.is_empty() {
            let shift = r.len() - 1 - dd;
            let f = r.last().unwrap() * &lead_inv;
            for (k, c) in d.coeffs.iter().enumerate() {
                r[shift + k] -= c * &f;
            }
            q[shift] = f;
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        (Poly::new(q), Poly::new(r))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// No repeated irreducible factor (over ℚ, equivalently over ℂ).
    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => self.gcd(&self.derivative()).degree() == Some(0),
        }
    }

    /// Distinct rational roots in increasing order.
    pub fn rational_roots(&self) -> Vec<Scalar> {
        if self.is_zero() {
            return Vec::new();
        }
        let mut roots = Vec::new();
        let mut c = self.coeffs.clone();
        if c[0].is_zero() {
            roots.push(Scalar::zero());
            let k = c.iter().position(|x| !x.is_zero()).unwrap();
            c.drain(..k);
        }
        let ints = integer_coefficients(&c);
        let a0 = ints[0].magnitude().clone();
        let an = ints.last().unwrap().magnitude().clone();
        let p = Poly::new(c);
        for num in divisors(&a0) {
            for den in divisors(&an) {
                if num.gcd(&den) != BigUint::one() {
                    continue;
                }
                let x = Scalar::new(BigInt::from(num.clone()), BigInt::from(den.clone()));
                for cand in [x.clone(), -x] {
                    if p.eval(&cand).is_zero() {
                        roots.push(cand);
                    }
                }
            }
        }
        roots.sort();
        roots.dedup();
        roots
    }

    /// True when the polynomial is a product of rational linear factors.
    pub fn splits_over_rationals(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        let mut rest = self.clone();
        for r in self.rational_roots() {
            let lin = Poly::new(vec![-r.clone(), Scalar::one()]);
            loop {
                let (q, rem) = rest.div_rem(&lin);
                if !rem.is_zero() {
                    break;
                }
                rest = q;
            }
        }
        rest.degree() == Some(0)
    }
}

fn integer_coefficients(c: &[Scalar]) -> Vec<BigInt> {
    let l = c.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    c.iter()
        .map(|x| (x * Scalar::from_integer(l.clone())).to_integer())
        .collect()
}

fn divisors(n: &BigUint) -> Vec<BigUint> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigUint::one();
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            let q = n / &d;
            if q != d {
                large.push(q);
            }
            small.push(d.clone());
        }
        d += 1u32;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Characteristic polynomial `det(x·I − A)` by Faddeev–LeVerrier.
pub fn char_poly(a: &Matrix) -> Poly {
    let n = a.rows();
    let mut coeffs = vec![Scalar::zero(); n + 1];
    coeffs[n] = Scalar::one();
    let mut m = Matrix::zeros(n, n);
    let id = Matrix::identity(n);
    for k in 1..=n {
        let prev = coeffs[n - k + 1].clone();
        m = &(a * &m) + &id.scale(&prev);
        let am = a * &m;
        coeffs[n - k] = -am.trace() / Scalar::from_integer(BigInt::from(k));
    }
    Poly::new(coeffs)
}

/// Minimal polynomial, from the first linear dependence among `I, A, A², …`.
pub fn min_poly(a: &Matrix) -> Poly {
    let n = a.rows();
    let mut powers: Vec<Matrix> = vec![Matrix::identity(n)];
    loop {
        let k = powers.len();
        let next = a * powers.last().unwrap();
        // Solve Σ_{j<k} c_j·A^j = A^k.
        let rows = n * n;
        let sys = Matrix::from_fn(rows, k, |r, j| powers[j].as_slice()[r].clone());
        let sol = super::solve_linear(&sys, next.as_slice()).expect("shapes agree");
        if let Some(c) = sol.particular {
            let mut coeffs: Vec<Scalar> = c.into_iter().map(|x| -x).collect();
            coeffs.push(Scalar::one());
            return Poly::new(coeffs);
        }
        powers.push(next);
    }
}

/// Diagonalizable over ℂ.
pub fn is_semisimple(a: &Matrix) -> bool {
    min_poly(a).is_squarefree()
}

/// Every eigenvalue is rational.
pub fn eigenvalues_rational(a: &Matrix) -> bool {
    char_poly(a).splits_over_rationals()
}

/// Rational eigenvalues (distinct, increasing).
pub fn rational_eigenvalues(a: &Matrix) -> Vec<Scalar> {
    char_poly(a).rational_roots()
}
