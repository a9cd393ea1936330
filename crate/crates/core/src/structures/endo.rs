// SPDX-License-Identifier: Apache-2.0

//! Structure endomorphisms, Nijenhuis tensors and para-complex eigenspaces.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::curvature::MetricLieAlgebra;
use crate::exactla::{self, Matrix, Scalar};
use crate::liealg::LieAlgebra;

use super::forms::TwoForm;

/// `E` with `g(EX, Y) = ω(X, Y)`, i.e. `E = −G⁻¹·Ω` in matrix terms.
pub fn endo_from_form(m: &MetricLieAlgebra, w: &TwoForm) -> Matrix {
    -&(m.metric_inverse() * w.matrix())
}

/// `ω(X, Y) = g(EX, Y)`.
pub fn form_from_endo(m: &MetricLieAlgebra, e: &Matrix) -> Matrix {
    &e.transpose() * &m.metric
}

/// `N_E(e_i, e_j)` for all pairs, `values[i·n + j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NijenhuisTensor {
    pub dim: usize,
    pub values: Vec<Vec<Scalar>>,
}

impl NijenhuisTensor {
    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| exactla::is_zero_vec(v))
    }

    /// First pair `(i, j)` with `i < j` and `N_E(e_i, e_j) ≠ 0`.
    pub fn witness(&self) -> Option<(usize, usize)> {
        let n = self.dim;
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .find(|&(i, j)| !exactla::is_zero_vec(&self.values[i * n + j]))
    }
}

/// `N_E(X, Y) = [EX, EY] − E[EX, Y] − E[X, EY] + E²[X, Y]`.
pub fn nijenhuis(g: &LieAlgebra, e: &Matrix) -> NijenhuisTensor {
    let n = g.dim();
    let e2 = e * e;
    let cols: Vec<Vec<Scalar>> = (0..n).map(|i| e.col(i)).collect();
    let unit = |i: usize| {
        let mut v = alloc::vec![Scalar::zero(); n];
        v[i] = exactla::one();
        v
    };
    let mut values = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let (x, y) = (unit(i), unit(j));
            let t1 = g.bracket(&cols[i], &cols[j]);
            let t2 = e.mul_vec(&g.bracket(&cols[i], &y));
            let t3 = e.mul_vec(&g.bracket(&x, &cols[j]));
            let t4 = e2.mul_vec(g.bracket_basis(i, j));
            values.push((0..n).map(|k| &t1[k] - &t2[k] - &t3[k] + &t4[k]).collect());
        }
    }
    NijenhuisTensor { dim: n, values }
}

pub fn integrable(g: &LieAlgebra, e: &Matrix) -> bool {
    nijenhuis(g, e).is_zero()
}

/// `±1` eigenspaces of an endomorphism with `E² = id`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenSplit {
    pub plus: Vec<Vec<Scalar>>,
    pub minus: Vec<Vec<Scalar>>,
    pub plus_subalgebra: bool,
    pub minus_subalgebra: bool,
}

impl EigenSplit {
    pub fn dims(&self) -> (usize, usize) {
        (self.plus.len(), self.minus.len())
    }

    pub fn balanced(&self) -> bool {
        self.plus.len() == self.minus.len()
    }

    /// Whether both eigenspaces are totally isotropic for `m`.
    pub fn null_for(&self, m: &MetricLieAlgebra) -> bool {
        let null = |vs: &[Vec<Scalar>]| {
            vs.iter()
                .all(|x| vs.iter().all(|y| m.inner(x, y).is_zero()))
        };
        null(&self.plus) && null(&self.minus)
    }
}

pub fn eigen_split(g: &LieAlgebra, e: &Matrix) -> EigenSplit {
    let n = g.dim();
    let id = Matrix::identity(n);
    let plus = exactla::nullspace(&(e - &id));
    let minus = exactla::nullspace(&(e + &id));
    EigenSplit {
        plus_subalgebra: g.is_subalgebra(&plus),
        minus_subalgebra: g.is_subalgebra(&minus),
        plus,
        minus,
    }
}
