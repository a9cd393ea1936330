// SPDX-License-Identifier: Apache-2.0

//! Exterior calculus on `Λ¹` and `Λ²` of a Lie algebra.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::curvature::MetricLieAlgebra;
use crate::exactla::{self, Matrix, Scalar};
use crate::liealg::LieAlgebra;

/// Antisymmetric bilinear form, `ω(e_i, e_j) = matrix[(i, j)]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoForm {
    matrix: Matrix,
}

impl TwoForm {
    pub fn zero(dim: usize) -> Self {
        Self {
            matrix: Matrix::zeros(dim, dim),
        }
    }

    /// Panics when `m` is not antisymmetric.
    pub fn from_matrix(m: Matrix) -> Self {
        assert!(
            m.is_antisymmetric(),
            "two-form matrix must be antisymmetric"
        );
        Self { matrix: m }
    }

    /// `Σ coeff·e^{ij}` from 0-based triples.
    pub fn from_terms(dim: usize, terms: &[(usize, usize, Scalar)]) -> Self {
        let mut w = Self::zero(dim);
        for (i, j, c) in terms {
            w.add_term(*i, *j, c);
        }
        w
    }

    pub fn add_term(&mut self, i: usize, j: usize, c: &Scalar) {
        self.matrix[(i, j)] += c;
        self.matrix[(j, i)] -= c;
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn eval(&self, i: usize, j: usize) -> &Scalar {
        &self.matrix[(i, j)]
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn is_nondegenerate(&self) -> bool {
        !self.matrix.determinant().is_zero()
    }

    pub fn scale(&self, s: &Scalar) -> TwoForm {
        Self {
            matrix: self.matrix.scale(s),
        }
    }

    pub fn add(&self, other: &TwoForm) -> TwoForm {
        Self {
            matrix: &self.matrix + &other.matrix,
        }
    }

    /// Coordinates `(ω_12, ω_13, …, ω_{n−1,n})` in lexicographic pair order.
    pub fn coordinates(&self) -> Vec<Scalar> {
        pairs(self.dim())
            .iter()
            .map(|&(i, j)| self.matrix[(i, j)].clone())
            .collect()
    }

    pub fn from_coordinates(dim: usize, y: &[Scalar]) -> Self {
        let mut w = Self::zero(dim);
        for (p, &(i, j)) in pairs(dim).iter().enumerate() {
            if !y[p].is_zero() {
                w.add_term(i, j, &y[p]);
            }
        }
        w
    }

    /// Support: basis indices touched by some nonzero coefficient.
    pub fn support(&self) -> Vec<usize> {
        let n = self.dim();
        (0..n)
            .filter(|&i| (0..n).any(|j| !self.matrix[(i, j)].is_zero()))
            .collect()
    }
}

/// Lexicographic list of `(i, j)` with `i < j`.
pub fn pairs(dim: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(dim * dim.saturating_sub(1) / 2);
    for i in 0..dim {
        for j in i + 1..dim {
            out.push((i, j));
        }
    }
    out
}

pub fn pair_label(i: usize, j: usize, dim: usize) -> String {
    if dim > 9 {
        alloc::format!("{},{}", i + 1, j + 1)
    } else {
        alloc::format!("{}{}", i + 1, j + 1)
    }
}

fn write_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (String, &'a Scalar)>,
) -> fmt::Result {
    let mut any = false;
    for (label, c) in terms {
        if c.is_zero() {
            continue;
        }
        if c.is_negative() {
            f.write_str("-")?;
        } else if any {
            f.write_str("+")?;
        }
        let mag = c.abs();
        if !mag.is_one() {
            write!(f, "{mag}")?;
        }
        write!(f, "e^{{{label}}}")?;
        any = true;
    }
    if !any {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for TwoForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.dim();
        write_terms(
            f,
            pairs(n)
                .into_iter()
                .map(|(i, j)| (pair_label(i, j, n), &self.matrix[(i, j)])),
        )
    }
}

/// Alternating 3-form stored on `i < j < k` in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThreeForm {
    dim: usize,
    coeffs: Vec<Scalar>,
}

pub fn triples(dim: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for i in 0..dim {
        for j in i + 1..dim {
            for k in j + 1..dim {
                out.push((i, j, k));
            }
        }
    }
    out
}

impl ThreeForm {
    pub fn coefficients(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        exactla::is_zero_vec(&self.coeffs)
    }

    pub fn coefficient(&self, i: usize, j: usize, k: usize) -> Scalar {
        let pos = triples(self.dim).iter().position(|&t| t == (i, j, k));
        pos.map(|p| self.coeffs[p].clone())
            .unwrap_or_else(Scalar::zero)
    }
}

impl fmt::Display for ThreeForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.dim;
        let label = |i: usize, j: usize, k: usize| {
            if n > 9 {
                alloc::format!("{},{},{}", i + 1, j + 1, k + 1)
            } else {
                alloc::format!("{}{}{}", i + 1, j + 1, k + 1)
            }
        };
        write_terms(
            f,
            triples(n)
                .into_iter()
                .zip(&self.coeffs)
                .map(|((i, j, k), c)| (label(i, j, k), c)),
        )
    }
}

/// `dα(X, Y) = −α([X, Y])`.
pub fn d_one_form(g: &LieAlgebra, alpha: &[Scalar]) -> TwoForm {
    let n = g.dim();
    let mut w = TwoForm::zero(n);
    for (i, j) in pairs(n) {
        let v = -exactla::dot(alpha, g.bracket_basis(i, j));
        if !v.is_zero() {
            w.add_term(i, j, &v);
        }
    }
    w
}

/// `dβ(X, Y, Z) = −β([X, Y], Z) + β([X, Z], Y) − β([Y, Z], X)`.
pub fn d_two_form(g: &LieAlgebra, beta: &TwoForm) -> ThreeForm {
    let n = g.dim();
    let b = beta.matrix();
    let coeffs = triples(n)
        .into_iter()
        .map(|(i, j, k)| {
            let t1 = exactla::dot(g.bracket_basis(i, j), &b.col(k));
            let t2 = exactla::dot(g.bracket_basis(i, k), &b.col(j));
            let t3 = exactla::dot(g.bracket_basis(j, k), &b.col(i));
            -t1 + t2 - t3
        })
        .collect();
    ThreeForm { dim: n, coeffs }
}

/// Basis of a subspace of `Λ²` with the constraints that cut it out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormSpace {
    pub dim: usize,
    pub basis: Vec<TwoForm>,
    pub closed: bool,
    pub parallel: bool,
}

impl FormSpace {
    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// `Σ y_a·basis[a]`.
    pub fn combine(&self, y: &[Scalar]) -> TwoForm {
        let mut w = TwoForm::zero(self.dim);
        for (c, b) in y.iter().zip(&self.basis) {
            if !c.is_zero() {
                w = w.add(&b.scale(c));
            }
        }
        w
    }

    /// Whether `ω` lies in the space.
    pub fn contains(&self, w: &TwoForm) -> bool {
        let flat: Vec<Vec<Scalar>> = self.basis.iter().map(TwoForm::coordinates).collect();
        exactla::span_coordinates(&flat, &w.coordinates()).is_some()
    }

    /// Coordinates `y_ij` (0-based pairs) vanishing on every element.
    pub fn vanishing_coordinates(&self) -> Vec<(usize, usize)> {
        pairs(self.dim)
            .into_iter()
            .filter(|&(i, j)| self.basis.iter().all(|b| b.eval(i, j).is_zero()))
            .collect()
    }
}

/// Rows of the linear map `Λ² → Λ³`, one per triple, in pair coordinates.
fn closedness_rows(g: &LieAlgebra) -> Vec<Vec<Scalar>> {
    let n = g.dim();
    let ps = pairs(n);
    let cols: Vec<ThreeForm> = ps
        .iter()
        .map(|&(i, j)| d_two_form(g, &TwoForm::from_terms(n, &[(i, j, Scalar::one())])))
        .collect();
    let t = triples(n).len();
    (0..t)
        .map(|r| cols.iter().map(|c| c.coeffs[r].clone()).collect::<Vec<_>>())
        .filter(|row| !exactla::is_zero_vec(row))
        .collect()
}

fn space_from_rows(dim: usize, rows: Vec<Vec<Scalar>>, closed: bool, parallel: bool) -> FormSpace {
    let p = pairs(dim).len();
    let basis = if rows.is_empty() {
        Matrix::identity(p).row_vectors()
    } else {
        exactla::nullspace(&Matrix::from_rows(exactla::row_basis(&rows, p)))
    };
    FormSpace {
        dim,
        basis: basis
            .iter()
            .map(|y| TwoForm::from_coordinates(dim, y))
            .collect(),
        closed,
        parallel,
    }
}

pub fn closed_two_forms(g: &LieAlgebra) -> FormSpace {
    space_from_rows(g.dim(), closedness_rows(g), true, false)
}

/// `{ω : dω = 0, ∇ω = 0}` for the Levi-Civita connection of `m`.
pub fn parallel_two_forms(m: &MetricLieAlgebra) -> FormSpace {
    let n = m.dim();
    let ps = pairs(n);
    let conn = m.levi_civita();
    let mut rows = closedness_rows(&m.algebra);
    // Column p holds ∇ω for ω = e^{pair p}.
    let images: Vec<Vec<Matrix>> = ps
        .iter()
        .map(|&(i, j)| {
            conn.covariant_two_form(TwoForm::from_terms(n, &[(i, j, Scalar::one())]).matrix())
        })
        .collect();
    for a in 0..n {
        for &(b, c) in &ps {
            let row: Vec<Scalar> = images.iter().map(|img| img[a][(b, c)].clone()).collect();
            if !exactla::is_zero_vec(&row) {
                rows.push(row);
            }
        }
    }
    space_from_rows(n, rows, true, true)
}

/// Result of looking for a nondegenerate member of a [`FormSpace`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Nondegeneracy {
    Found(TwoForm),
    /// Every member is degenerate (certified by the full grid).
    NoneExists,
    /// The space is too large for the grid certificate and no sample point was nondegenerate.
    Undecided,
}

/// Grid points evaluated before giving up on a certificate of nonexistence.
pub const GRID_LIMIT: usize = 4096;

/// Searches `fs` for a nondegenerate member.
///
/// `det = Pf²` and the Pfaffian has degree at most `n/2` in each coordinate,
/// so a Pfaffian vanishing on the grid `{0, …, n/2}^k` vanishes identically.
/// Single basis elements and a few generic points are tried before the grid.
pub fn nondegenerate_search(fs: &FormSpace) -> Nondegeneracy {
    let n = fs.dim;
    let k = fs.len();
    if n % 2 == 1 || k == 0 {
        return Nondegeneracy::NoneExists;
    }
    for b in &fs.basis {
        if b.is_nondegenerate() {
            return Nondegeneracy::Found(b.clone());
        }
    }
    let mut samples = vec![
        vec![Scalar::one(); k],
        (1..=k as i64).map(exactla::int).collect(),
    ];
    for j in 0..16i64 {
        samples.push(
            (0..k as i64)
                .map(|a| exactla::int((a + 1) * (j + 3) % 17 - 8))
                .collect(),
        );
    }
    for y in &samples {
        let w = fs.combine(y);
        if w.is_nondegenerate() {
            return Nondegeneracy::Found(w);
        }
    }
    let top = n / 2;
    let grid = (top + 1).checked_pow(k as u32);
    if grid.is_none_or(|g| g > GRID_LIMIT) {
        return Nondegeneracy::Undecided;
    }
    let mut digits = vec![0usize; k];
    loop {
        let y: Vec<Scalar> = digits.iter().map(|&d| exactla::int(d as i64)).collect();
        let w = fs.combine(&y);
        if w.is_nondegenerate() {
            return Nondegeneracy::Found(w);
        }
        let mut pos = 0;
        loop {
            if pos == k {
                return Nondegeneracy::NoneExists;
            }
            digits[pos] += 1;
            if digits[pos] <= top {
                break;
            }
            digits[pos] = 0;
            pos += 1;
        }
    }
}

/// A nondegenerate member of `fs`, if one was found.
pub fn nondegenerate_element(fs: &FormSpace) -> Option<TwoForm> {
    match nondegenerate_search(fs) {
        Nondegeneracy::Found(w) => Some(w),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{frac, int};
    use crate::notation::parse_algebra;

    #[test]
    fn heisenberg_differentials() {
        let g = parse_algebra("0,0,e^{12}").unwrap();
        let de3 = d_one_form(&g, &[int(0), int(0), int(1)]);
        assert_eq!(de3, TwoForm::from_terms(3, &[(0, 1, int(1))]));
        assert!(d_two_form(&g, &TwoForm::from_terms(3, &[(0, 1, int(1))])).is_zero());
    }

    #[test]
    fn nonclosed_form() {
        // de^4 = e^{13}, so d(e^{24}) = −e^2∧e^{13} = e^{123}
        let g = parse_algebra("0,0,e^{12},e^{13}").unwrap();
        let w = d_two_form(&g, &TwoForm::from_terms(4, &[(1, 3, int(1))]));
        assert_eq!(w.coefficient(0, 1, 2), int(1));
    }

    #[test]
    fn closed_forms_of_extension() {
        let g = parse_algebra("2/3e^{14},2/3e^{24},4/3e^{34}+e^{12},0").unwrap();
        let fs = closed_two_forms(&g);
        assert_eq!(fs.len(), 3);
        let expected = [
            TwoForm::from_terms(4, &[(0, 1, int(1)), (2, 3, frac(4, 3))]),
            TwoForm::from_terms(4, &[(0, 3, int(1))]),
            TwoForm::from_terms(4, &[(1, 3, int(1))]),
        ];
        for w in &expected {
            assert!(fs.contains(w));
        }
    }

    #[test]
    fn nondegeneracy_search() {
        let only_e4 = FormSpace {
            dim: 4,
            basis: vec![
                TwoForm::from_terms(4, &[(0, 3, int(1))]),
                TwoForm::from_terms(4, &[(1, 3, int(1))]),
            ],
            closed: true,
            parallel: false,
        };
        assert_eq!(nondegenerate_search(&only_e4), Nondegeneracy::NoneExists);
        let abelian = closed_two_forms(&LieAlgebra::abelian(4));
        assert_eq!(abelian.len(), 6);
        assert!(nondegenerate_element(&abelian).is_some());
    }

    #[test]
    fn display() {
        let w = TwoForm::from_terms(4, &[(0, 1, int(1)), (2, 3, frac(-4, 3))]);
        assert_eq!(alloc::format!("{w}"), "e^{12}-4/3e^{34}");
    }
}
