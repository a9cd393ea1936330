// SPDX-License-Identifier: Apache-2.0

//! Multiplicative systems `∏_l u_l^{E[h,l]} = r_h` over the rationals.
//!
//! Magnitudes are handled through a coprime base of the numerators and
//! denominators of `|r_h|`; each base element gives an integer linear system
//! `E·x = a` for its exponents. Signs are a separate linear system over GF(2).

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::elimination::reduce;
use super::{IntMatrix, Matrix, Scalar};
use crate::{Error, Result};

/// Rational solution family `u_l = σ_l · constant_l · ∏_p t_p^{exponent_basis[p][l]}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialSolution {
    /// Positive constants, one per unknown.
    pub constant_part: Vec<Scalar>,
    /// One row per free parameter; rows form a ℤ-basis of the integer kernel of `E`.
    pub exponent_basis: IntMatrix,
    /// Every admissible sign vector σ, in lexicographic order with `+1 < −1`.
    pub sign_patterns: Vec<Vec<i8>>,
}

impl MonomialSolution {
    pub fn free_parameters(&self) -> usize {
        self.exponent_basis.rows()
    }

    /// Evaluates the family at nonzero `params` under sign vector `signs`.
    pub fn instantiate(&self, params: &[Scalar], signs: &[i8]) -> Result<Vec<Scalar>> {
        if params.len() != self.free_parameters() {
            return Err(Error::DimensionMismatch {
                expected: self.free_parameters(),
                found: params.len(),
            });
        }
        if signs.len() != self.constant_part.len() {
            return Err(Error::DimensionMismatch {
                expected: self.constant_part.len(),
                found: signs.len(),
            });
        }
        if params.iter().any(Zero::is_zero) {
            return Err(Error::InvalidParameter("free parameters must be nonzero"));
        }
        Ok(self
            .constant_part
            .iter()
            .enumerate()
            .map(|(l, c)| {
                let mut u = c.clone();
                for (p, t) in params.iter().enumerate() {
                    let e = self.exponent_basis.get(p, l);
                    if e != 0 {
                        u *= pow_i(t, e);
                    }
                }
                if signs[l] < 0 {
                    -u
                } else {
                    u
                }
            })
            .collect())
    }

    /// Human-readable monomial form, e.g. `u3 = 1/3·t1·t2`.
    pub fn describe(&self) -> Vec<String> {
        self.constant_part
            .iter()
            .enumerate()
            .map(|(l, c)| {
                let mut s = format!("u{} = {}", l + 1, c);
                for p in 0..self.free_parameters() {
                    match self.exponent_basis.get(p, l) {
                        0 => {}
                        1 => s.push_str(&format!("·t{}", p + 1)),
                        e => s.push_str(&format!("·t{}^{}", p + 1, e)),
                    }
                }
                s
            })
            .collect()
    }
}

/// Positive real solutions exist but none is rational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrrationalFamily {
    pub sign_patterns: Vec<Vec<i8>>,
    pub exponents: IntMatrix,
    pub targets: Vec<Scalar>,
    /// Base element whose exponent system has only fractional solutions.
    pub obstruction: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MultiplicativeOutcome {
    Family(MonomialSolution),
    Irrational(IrrationalFamily),
    /// No real solution at all (sign or magnitude system inconsistent).
    Infeasible(String),
}

impl MultiplicativeOutcome {
    pub fn family(&self) -> Option<&MonomialSolution> {
        match self {
            MultiplicativeOutcome::Family(f) => Some(f),
            _ => None,
        }
    }
}

pub(crate) fn pow_i(t: &Scalar, e: i64) -> Scalar {
    let base = if e < 0 { t.recip() } else { t.clone() };
    let mut out = Scalar::one();
    for _ in 0..e.unsigned_abs() {
        out *= &base;
    }
    out
}

pub fn multiplicative_solve(e: &IntMatrix, r: &[Scalar]) -> Result<MultiplicativeOutcome> {
    if e.rows() != r.len() {
        return Err(Error::DimensionMismatch {
            expected: e.rows(),
            found: r.len(),
        });
    }
    if let Some(h) = r.iter().position(Zero::is_zero) {
        return Err(Error::ZeroRhs { index: h });
    }
    let n = e.cols();

    let Some(sign_patterns) = sign_solutions(e, r) else {
        return Ok(MultiplicativeOutcome::Infeasible(
            "sign system inconsistent".into(),
        ));
    };

    let mut values: Vec<BigUint> = Vec::new();
    for x in r {
        values.push(x.numer().magnitude().clone());
        values.push(x.denom().magnitude().clone());
    }
    let base = coprime_base(values);

    let mut constant_part = vec![Scalar::one(); n];
    for p in &base {
        let a: Vec<i128> = r.iter().map(|x| valuation(x, p)).collect();
        match integer_solve(e, &a) {
            IntSolve::Integral(x) => {
                let pb = Scalar::from_integer(BigInt::from(p.clone()));
                for (l, &xl) in x.iter().enumerate() {
                    let xl =
                        i64::try_from(xl).map_err(|_| Error::Inconsistent("exponent overflow"))?;
                    constant_part[l] *= pow_i(&pb, xl);
                }
            }
            IntSolve::Fractional => {
                return Ok(MultiplicativeOutcome::Irrational(IrrationalFamily {
                    sign_patterns,
                    exponents: e.clone(),
                    targets: r.to_vec(),
                    obstruction: format!("exponents of {p} need fractional powers"),
                }));
            }
            IntSolve::None => {
                return Ok(MultiplicativeOutcome::Infeasible(format!(
                    "exponents of {p} admit no solution"
                )));
            }
        }
    }

    Ok(MultiplicativeOutcome::Family(MonomialSolution {
        constant_part,
        exponent_basis: integer_kernel(e),
        sign_patterns,
    }))
}

/// Pairwise coprime set of integers > 1 generating every input multiplicatively.
fn coprime_base(values: Vec<BigUint>) -> Vec<BigUint> {
    let mut base: Vec<BigUint> = values.into_iter().filter(|v| *v > BigUint::one()).collect();
    base.sort();
    base.dedup();
    'outer: loop {
        for i in 0..base.len() {
            for j in i + 1..base.len() {
                let g = base[i].gcd(&base[j]);
                if g > BigUint::one() {
                    let (a, b) = (&base[i] / &g, &base[j] / &g);
                    let mut next: Vec<BigUint> = base
                        .iter()
                        .enumerate()
                        .filter(|&(k, _)| k != i && k != j)
                        .map(|(_, v)| v.clone())
                        .collect();
                    next.extend([g, a, b].into_iter().filter(|v| *v > BigUint::one()));
                    next.sort();
                    next.dedup();
                    base = next;
                    continue 'outer;
                }
            }
        }
        return base;
    }
}

fn valuation(x: &Scalar, p: &BigUint) -> i128 {
    fn count(mut m: BigUint, p: &BigUint) -> i128 {
        let mut k = 0;
        while !m.is_zero() && (&m % p).is_zero() {
            m /= p;
            k += 1;
        }
        k
    }
    count(x.numer().magnitude().clone(), p) - count(x.denom().magnitude().clone(), p)
}

enum IntSolve {
    Integral(Vec<i128>),
    Fractional,
    None,
}

fn integer_solve(e: &IntMatrix, a: &[i128]) -> IntSolve {
    // Rational reduced echelon first; its particular solution is frequently integral.
    let n = e.cols();
    let aug = Matrix::from_fn(e.rows(), n + 1, |i, j| {
        if j < n {
            super::int(e.get(i, j))
        } else {
            Scalar::from_integer(BigInt::from(a[i]))
        }
    });
    let ech = reduce(aug, n);
    let rank = ech.pivots.len();
    if (rank..e.rows()).any(|r| !ech.reduced[(r, n)].is_zero()) {
        return IntSolve::None;
    }
    let mut x = vec![0i128; n];
    let mut integral = true;
    for (row, &p) in ech.pivots.iter().enumerate() {
        let v = &ech.reduced[(row, n)];
        if v.is_integer() {
            x[p] = v.to_integer().to_i128().unwrap_or(0);
        } else {
            integral = false;
        }
    }
    if integral {
        return IntSolve::Integral(x);
    }
    match hermite_solve(e, a) {
        Some(x) => IntSolve::Integral(x),
        None => IntSolve::Fractional,
    }
}

/// Column Hermite reduction `E·U = H` with `U` unimodular.
struct ColumnHermite {
    h: Vec<Vec<i128>>,
    u: Vec<Vec<i128>>,
    /// (row, column) of each pivot.
    pivots: Vec<(usize, usize)>,
}

fn column_hermite(e: &IntMatrix) -> ColumnHermite {
    let (m, n) = (e.rows(), e.cols());
    let mut h: Vec<Vec<i128>> = (0..m)
        .map(|i| (0..n).map(|j| i128::from(e.get(i, j))).collect())
        .collect();
    let mut u: Vec<Vec<i128>> = (0..n)
        .map(|i| (0..n).map(|j| i128::from(i == j)).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut c = 0;

    // Replace columns (c, j) by (x·c + y·j, −(b/g)·c + (a/g)·j), determinant 1.
    let combine =
        |mat: &mut Vec<Vec<i128>>, c: usize, j: usize, x: i128, y: i128, s: i128, t: i128| {
            for row in mat.iter_mut() {
                let (vc, vj) = (row[c], row[j]);
                row[c] = x * vc + y * vj;
                row[j] = s * vc + t * vj;
            }
        };

    for r in 0..m {
        if c == n {
            break;
        }
        for j in c + 1..n {
            let (a, b) = (h[r][c], h[r][j]);
            if b == 0 {
                continue;
            }
            let eg = a.extended_gcd(&b);
            let (g, x, y) = (eg.gcd, eg.x, eg.y);
            let (s, t) = (-(b / g), a / g);
            combine(&mut h, c, j, x, y, s, t);
            combine(&mut u, c, j, x, y, s, t);
        }
        if h[r][c] != 0 {
            if h[r][c] < 0 {
                for row in h.iter_mut().chain(u.iter_mut()) {
                    row[c] = -row[c];
                }
            }
            pivots.push((r, c));
            c += 1;
        }
    }
    ColumnHermite { h, u, pivots }
}

fn hermite_solve(e: &IntMatrix, a: &[i128]) -> Option<Vec<i128>> {
    let ColumnHermite { h, u, pivots } = column_hermite(e);
    let n = e.cols();
    let mut y = vec![0i128; n];
    for &(r, c) in &pivots {
        let rest: i128 = (0..c).map(|k| h[r][k] * y[k]).sum();
        let num = a[r] - rest;
        if num % h[r][c] != 0 {
            return None;
        }
        y[c] = num / h[r][c];
    }
    for (r, row) in h.iter().enumerate() {
        if row.iter().zip(&y).map(|(p, q)| p * q).sum::<i128>() != a[r] {
            return None;
        }
    }
    Some(
        (0..n)
            .map(|i| (0..n).map(|k| u[i][k] * y[k]).sum())
            .collect(),
    )
}

/// ℤ-basis of `{v ∈ ℤⁿ : E·v = 0}`, one vector per row.
pub(crate) fn integer_kernel(e: &IntMatrix) -> IntMatrix {
    let rational = super::nullspace(&e.to_rational());
    // Integral echelon kernel vectors carry unit entries on the free columns,
    // so they already form a lattice basis.
    if rational.iter().all(|v| v.iter().all(|x| x.is_integer())) {
        let rows: Vec<Vec<i64>> = rational
            .iter()
            .map(|v| {
                v.iter()
                    .map(|x| x.to_integer().to_i64().unwrap_or(0))
                    .collect()
            })
            .collect();
        return IntMatrix::from_rows(&rows, e.cols());
    }
    let ColumnHermite { u, pivots, .. } = column_hermite(e);
    let n = e.cols();
    let rows: Vec<Vec<i64>> = (pivots.len()..n)
        .map(|c| {
            (0..n)
                .map(|i| i64::try_from(u[i][c]).unwrap_or(0))
                .collect()
        })
        .collect();
    IntMatrix::from_rows(&rows, n)
}

/// All σ ∈ {±1}ⁿ with `∏ σ_l^{E[h,l]} = sign(r_h)`.
fn sign_solutions(e: &IntMatrix, r: &[Scalar]) -> Option<Vec<Vec<i8>>> {
    let (m, n) = (e.rows(), e.cols());
    let mut rows: Vec<(Vec<bool>, bool)> = (0..m)
        .map(|h| {
            (
                (0..n).map(|l| e.get(h, l).rem_euclid(2) == 1).collect(),
                r[h].is_negative(),
            )
        })
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..m).find(|&i| rows[i].0[col]) else {
            continue;
        };
        rows.swap(row, p);
        for i in 0..m {
            if i != row && rows[i].0[col] {
                let (src, rhs) = (rows[row].0.clone(), rows[row].1);
                for (x, s) in rows[i].0.iter_mut().zip(&src) {
                    *x ^= *s;
                }
                rows[i].1 ^= rhs;
            }
        }
        pivots.push(col);
        row += 1;
    }
    if rows[row..].iter().any(|(_, rhs)| *rhs) {
        return None;
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut out = Vec::with_capacity(1 << free.len());
    for mask in 0u64..(1u64 << free.len()) {
        let mut s = vec![false; n];
        for (b, &f) in free.iter().enumerate() {
            // highest free column varies fastest
            s[f] = (mask >> (free.len() - 1 - b)) & 1 == 1;
        }
        for (i, &p) in pivots.iter().enumerate() {
            let mut v = rows[i].1;
            for &f in &free {
                if rows[i].0[f] {
                    v ^= s[f];
                }
            }
            s[p] = v;
        }
        out.push(s.iter().map(|&neg| if neg { -1 } else { 1 }).collect());
    }
    Some(out)
}
