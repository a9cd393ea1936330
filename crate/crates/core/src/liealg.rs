// SPDX-License-Identifier: Apache-2.0

//! Structure tensors, algebraic flags, derivations and semidirect extensions.
//!
//! Convention: `[e_i, e_j] = Σ_k c_ij^k e_k`, and the coefficient of `e^{ij}`
//! in `de^k` is `−c_ij^k`. So `(0,0,e^{12})` means `[e_1, e_2] = −e_3`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::exactla::{self, Matrix, Scalar};
use crate::{Error, Result};

/// Equality compares structure tensors only; the optional name is a label.
#[derive(Clone)]
pub struct LieAlgebra {
    dim: usize,
    /// `c[(i·dim + j)·dim + k] = c_ij^k`, antisymmetric in `(i, j)`.
    c: Vec<Scalar>,
    name: Option<String>,
}

/// Jacobi failure: `[[e_i,e_j],e_k] + cyclic = residual ≠ 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiViolation {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub residual: Vec<Scalar>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraFlags {
    /// `dim g^0, dim g^1, …` up to and including the first repeated value.
    pub lower_central_dims: Vec<usize>,
    pub derived_dims: Vec<usize>,
    pub nilpotent: bool,
    /// Minimal `s` with `g^s = 0`.
    pub step: Option<usize>,
    pub solvable: bool,
    /// Minimal `r` with `a_r = 0`.
    pub depth: Option<usize>,
    pub unimodular: bool,
    /// `dim g − dim [g, g]`.
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationSpace {
    pub basis: Vec<Matrix>,
}

impl DerivationSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Whether `d` lies in the span (exact membership).
    pub fn contains(&self, d: &Matrix) -> bool {
        let flat: Vec<Vec<Scalar>> = self.basis.iter().map(|b| b.as_slice().to_vec()).collect();
        exactla::span_coordinates(&flat, d.as_slice()).is_some()
    }
}

impl LieAlgebra {
    /// Abelian algebra of dimension `dim`.
    pub fn abelian(dim: usize) -> Self {
        Self {
            dim,
            c: vec![Scalar::zero(); dim * dim * dim],
            name: None,
        }
    }

    /// Builds from brackets `[e_i, e_j]` for `i < j`, checking antisymmetry-free
    /// input shape and the Jacobi identity.
    pub fn from_brackets(dim: usize, brackets: &[(usize, usize, Vec<Scalar>)]) -> Result<Self> {
        let mut g = Self::abelian(dim);
        for (i, j, v) in brackets {
            if *i >= dim || *j >= dim {
                return Err(Error::IndexOutOfRange {
                    index: (*i).max(*j) + 1,
                    dim,
                });
            }
            if v.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: v.len(),
                });
            }
            g.set_bracket(*i, *j, v);
        }
        g.validate()?;
        Ok(g)
    }

    /// Raw tensor; the caller is responsible for validity.
    pub fn from_tensor_unchecked(dim: usize, c: Vec<Scalar>) -> Self {
        assert_eq!(c.len(), dim * dim * dim);
        Self { dim, c, name: None }
    }

    pub fn validate(&self) -> Result<()> {
        match self.jacobi_check() {
            Ok(()) => Ok(()),
            Err(v) => Err(Error::Jacobi {
                i: v.i,
                j: v.j,
                k: v.k,
            }),
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    /// Sets `[e_i, e_j] = v` (and `[e_j, e_i] = −v`).
    pub fn set_bracket(&mut self, i: usize, j: usize, v: &[Scalar]) {
        let n = self.dim;
        for k in 0..n {
            let a = self.idx(i, j, k);
            let b = self.idx(j, i, k);
            if i == j {
                self.c[a] = Scalar::zero();
            } else {
                self.c[a] = v[k].clone();
                self.c[b] = -v[k].clone();
            }
        }
    }

    pub fn c(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.c[self.idx(i, j, k)]
    }

    /// `[e_i, e_j]` as a coordinate slice.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[Scalar] {
        let start = self.idx(i, j, 0);
        &self.c[start..start + self.dim]
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim;
        let mut out = vec![Scalar::zero(); n];
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() || i == j {
                    continue;
                }
                let f = &x[i] * &y[j];
                for (k, c) in self.bracket_basis(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += &f * c;
                    }
                }
            }
        }
        out
    }

    /// Matrix of `ad e_i`; column `j` is `[e_i, e_j]`.
    pub fn ad(&self, i: usize) -> Matrix {
        Matrix::from_fn(self.dim, self.dim, |k, j| self.c(i, j, k).clone())
    }

    pub fn ad_vec(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim;
        let mut m = Matrix::zeros(n, n);
        for (i, xi) in x.iter().enumerate() {
            if !xi.is_zero() {
                m = &m + &self.ad(i).scale(xi);
            }
        }
        m
    }

    /// `Tr ad e_i` for each basis vector.
    pub fn trace_ad(&self) -> Vec<Scalar> {
        (0..self.dim)
            .map(|i| (0..self.dim).fold(Scalar::zero(), |acc, k| acc + self.c(i, k, k)))
            .collect()
    }

    pub fn is_abelian(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    /// All nonzero brackets `(i, j, [e_i, e_j])` with `i < j`.
    pub fn nonzero_brackets(&self) -> Vec<(usize, usize, Vec<Scalar>)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let v = self.bracket_basis(i, j);
                if !exactla::is_zero_vec(v) {
                    out.push((i, j, v.to_vec()));
                }
            }
        }
        out
    }

    pub fn jacobi_check(&self) -> core::result::Result<(), JacobiViolation> {
        let n = self.dim;
        let e = |i: usize| -> Vec<Scalar> {
            let mut v = vec![Scalar::zero(); n];
            v[i] = Scalar::one();
            v
        };
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let (ei, ej, ek) = (e(i), e(j), e(k));
                    let a = self.bracket(&self.bracket(&ei, &ej), &ek);
                    let b = self.bracket(&self.bracket(&ej, &ek), &ei);
                    let c = self.bracket(&self.bracket(&ek, &ei), &ej);
                    let residual: Vec<Scalar> = (0..n).map(|m| &a[m] + &b[m] + &c[m]).collect();
                    if !exactla::is_zero_vec(&residual) {
                        return Err(JacobiViolation { i, j, k, residual });
                    }
                }
            }
        }
        Ok(())
    }

    /// The same algebra with every bracket negated.
    pub fn negated(&self) -> LieAlgebra {
        Self {
            dim: self.dim,
            c: self.c.iter().map(|x| -x.clone()).collect(),
            name: self.name.clone(),
        }
    }

    /// Algebra in the rescaled basis `f_i = s_i·e_i`.
    pub fn rescaled(&self, s: &[Scalar]) -> LieAlgebra {
        let n = self.dim;
        let mut c = self.c.clone();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let idx = self.idx(i, j, k);
                    if !c[idx].is_zero() {
                        c[idx] = &c[idx] * &s[i] * &s[j] / &s[k];
                    }
                }
            }
        }
        Self {
            dim: n,
            c,
            name: self.name.clone(),
        }
    }

    /// Subalgebra spanned by the first `m` basis vectors, if it is closed.
    pub fn leading_subalgebra(&self, m: usize) -> Option<LieAlgebra> {
        let idx: Vec<usize> = (0..m).collect();
        self.coordinate_subalgebra(&idx)
    }

    /// Subalgebra spanned by `{e_i : i ∈ idx}`, in that order, if it is closed.
    pub fn coordinate_subalgebra(&self, idx: &[usize]) -> Option<LieAlgebra> {
        let m = idx.len();
        let mut g = Self::abelian(m);
        for (p, &i) in idx.iter().enumerate() {
            for (q, &j) in idx.iter().enumerate().skip(p + 1) {
                let v = self.bracket_basis(i, j);
                let outside = (0..self.dim).any(|k| !idx.contains(&k) && !v[k].is_zero());
                if outside {
                    return None;
                }
                let w: Vec<Scalar> = idx.iter().map(|&k| v[k].clone()).collect();
                g.set_bracket(p, q, &w);
            }
        }
        Some(g)
    }

    /// Span of brackets `[a, b]` with `a` in `left`, `b` in `right`.
    fn bracket_span(&self, left: &[Vec<Scalar>], right: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
        let mut vs = Vec::new();
        for a in left {
            for b in right {
                let v = self.bracket(a, b);
                if !exactla::is_zero_vec(&v) {
                    vs.push(v);
                }
            }
        }
        exactla::row_basis(&vs, self.dim)
    }

    fn standard_basis(&self) -> Vec<Vec<Scalar>> {
        Matrix::identity(self.dim).row_vectors()
    }

    /// Whether `span(vectors)` is closed under the bracket.
    pub fn is_subalgebra(&self, vectors: &[Vec<Scalar>]) -> bool {
        let basis = exactla::row_basis(vectors, self.dim);
        let inner = self.bracket_span(&basis, &basis);
        inner
            .iter()
            .all(|v| exactla::span_coordinates(&basis, v).is_some())
    }

    pub fn is_ideal(&self, vectors: &[Vec<Scalar>]) -> bool {
        let basis = exactla::row_basis(vectors, self.dim);
        let outer = self.bracket_span(&self.standard_basis(), &basis);
        outer
            .iter()
            .all(|v| exactla::span_coordinates(&basis, v).is_some())
    }

    pub fn flags(&self) -> AlgebraFlags {
        let all = self.standard_basis();

        let mut lower = vec![self.dim];
        let mut current = all.clone();
        loop {
            let next = self.bracket_span(&all, &current);
            let d = next.len();
            let last = *lower.last().unwrap();
            lower.push(d);
            if d == 0 || d == last {
                break;
            }
            current = next;
        }

        let mut derived = vec![self.dim];
        let mut current = all;
        loop {
            let next = self.bracket_span(&current, &current);
            let d = next.len();
            let last = *derived.last().unwrap();
            derived.push(d);
            if d == 0 || d == last {
                break;
            }
            current = next;
        }
        if self.dim == 0 {
            lower.truncate(1);
            derived.truncate(1);
        }

        let step = lower.iter().position(|&d| d == 0);
        let depth = derived.iter().position(|&d| d == 0);
        AlgebraFlags {
            rank: self.dim - derived.get(1).copied().unwrap_or(0),
            lower_central_dims: lower,
            derived_dims: derived,
            nilpotent: step.is_some(),
            step,
            solvable: depth.is_some(),
            depth,
            unimodular: self.trace_ad().iter().all(Zero::is_zero),
        }
    }

    /// `D[x, y] − [Dx, y] − [x, Dy]` on basis pairs; zero iff `D` is a derivation.
    pub fn derivation_defect(&self, d: &Matrix) -> Option<(usize, usize, Vec<Scalar>)> {
        let n = self.dim;
        let cols: Vec<Vec<Scalar>> = (0..n).map(|i| d.col(i)).collect();
        let id = self.standard_basis();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = d.mul_vec(self.bracket_basis(i, j));
                let a = self.bracket(&cols[i], &id[j]);
                let b = self.bracket(&id[i], &cols[j]);
                let r: Vec<Scalar> = (0..n).map(|k| &lhs[k] - &a[k] - &b[k]).collect();
                if !exactla::is_zero_vec(&r) {
                    return Some((i, j, r));
                }
            }
        }
        None
    }

    pub fn is_derivation(&self, d: &Matrix) -> bool {
        d.rows() == self.dim && d.cols() == self.dim && self.derivation_defect(d).is_none()
    }

    /// Exact basis of `Der(g)`.
    ///
    /// Unknown `D[a][b]` sits at index `a·n + b`; each equation is the `k`-th
    /// component of the derivation identity on `(e_i, e_j)`.
    pub fn derivations(&self) -> DerivationSpace {
        let n = self.dim;
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in 0..n {
                    let mut row = vec![Scalar::zero(); n * n];
                    for m in 0..n {
                        // D[i,j] term
                        let c = self.c(i, j, m);
                        if !c.is_zero() {
                            row[k * n + m] += c;
                        }
                        // −[D e_i, e_j] = −Σ_m D[m][i] c_mj^k
                        let c = self.c(m, j, k);
                        if !c.is_zero() {
                            row[m * n + i] -= c;
                        }
                        // −[e_i, D e_j] = −Σ_m D[m][j] c_im^k
                        let c = self.c(i, m, k);
                        if !c.is_zero() {
                            row[m * n + j] -= c;
                        }
                    }
                    if !exactla::is_zero_vec(&row) {
                        rows.push(row);
                    }
                }
            }
        }
        let basis = if rows.is_empty() {
            Matrix::identity(n * n).row_vectors()
        } else {
            let reduced = exactla::row_basis(&rows, n * n);
            exactla::nullspace(&Matrix::from_rows(reduced))
        };
        DerivationSpace {
            basis: basis
                .into_iter()
                .map(|v| Matrix::from_flat(n, n, v))
                .collect(),
        }
    }

    /// `Der(g) ⊂ sl(g)`.
    pub fn derivations_traceless(&self) -> bool {
        self.derivations().basis.iter().all(|d| d.trace().is_zero())
    }

    /// `g ⋊ span{a_1, …}` with `[a_s, x] = ders[s]·x` and `[a_s, a_t] = 0`.
    pub fn semidirect_extend(&self, ders: &[Matrix]) -> Result<LieAlgebra> {
        let n = self.dim;
        for (s, d) in ders.iter().enumerate() {
            if d.rows() != n || d.cols() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: d.rows(),
                });
            }
            if !self.is_derivation(d) {
                return Err(Error::NotDerivation { index: s });
            }
        }
        for s in 0..ders.len() {
            for t in s + 1..ders.len() {
                if !ders[s].commutator(&ders[t]).is_zero() {
                    return Err(Error::NonCommuting {
                        first: s,
                        second: t,
                    });
                }
            }
        }
        let m = n + ders.len();
        let mut g = LieAlgebra::abelian(m);
        for i in 0..n {
            for j in i + 1..n {
                let mut v = self.bracket_basis(i, j).to_vec();
                v.resize(m, Scalar::zero());
                g.set_bracket(i, j, &v);
            }
        }
        for (s, d) in ders.iter().enumerate() {
            for x in 0..n {
                let mut v = d.col(x);
                v.resize(m, Scalar::zero());
                // [e_x, a_s] = −D_s e_x
                let neg: Vec<Scalar> = v.iter().map(|a| -a.clone()).collect();
                g.set_bracket(x, n + s, &neg);
            }
        }
        debug_assert!(g.jacobi_check().is_ok());
        Ok(g)
    }
}

impl PartialEq for LieAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.c == other.c
    }
}

impl Eq for LieAlgebra {}

impl core::fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "LieAlgebra({})", crate::notation::format_algebra(self))
    }
}

/// `⟨A, B⟩_Tr = Tr(A∘B)`.
pub fn trace_form(a: &Matrix, b: &Matrix) -> Scalar {
    let n = a.rows();
    let mut t = Scalar::zero();
    for i in 0..n {
        for k in 0..n {
            let (x, y) = (&a[(i, k)], &b[(k, i)]);
            if !x.is_zero() && !y.is_zero() {
                t += x * y;
            }
        }
    }
    t
}

/// Gram matrix of the trace form.
pub fn gram(list: &[Matrix]) -> Matrix {
    Matrix::from_fn(list.len(), list.len(), |i, j| {
        trace_form(&list[i], &list[j])
    })
}
