// SPDX-License-Identifier: Apache-2.0

//! Curvature of left-invariant pseudo-Riemannian metrics.
//!
//! `∇_{e_i}` is stored as the matrix `A_i` with `A_i[k][j] = Γ_ij^k`, so
//! `∇_{e_i} e_j` is column `j` of `A_i`. Then
//! `R(e_i, e_j) = [A_i, A_j] − Σ_m c_ij^m A_m` and `ric(Y, Z) = Tr(X ↦ R(X, Y)Z)`.

use alloc::format;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::exactla::{self, Matrix, Scalar};
use crate::ledger::CheckLedger;
use crate::liealg::LieAlgebra;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetricLieAlgebra {
    pub algebra: LieAlgebra,
    pub metric: Matrix,
    metric_inv: Matrix,
}

impl MetricLieAlgebra {
    pub fn new(algebra: LieAlgebra, metric: Matrix) -> Result<Self> {
        let n = algebra.dim();
        if metric.rows() != n || metric.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: metric.rows(),
            });
        }
        if !metric.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        let metric_inv = metric.inverse().ok_or(Error::Degenerate)?;
        Ok(Self {
            algebra,
            metric,
            metric_inv,
        })
    }

    pub fn diagonal(algebra: LieAlgebra, entries: &[Scalar]) -> Result<Self> {
        Self::new(algebra, Matrix::diagonal(entries))
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn metric_inverse(&self) -> &Matrix {
        &self.metric_inv
    }

    pub fn inner(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        self.metric.bilinear(x, y)
    }

    /// Levi-Civita connection via the Koszul formula.
    pub fn levi_civita(&self) -> Connection {
        let n = self.dim();
        let g = &self.metric;
        // gb[i][j][l] = g([e_i, e_j], e_l)
        let gb: Vec<Vec<Vec<Scalar>>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| g.mul_vec(self.algebra.bracket_basis(i, j)))
                    .collect()
            })
            .collect();
        let half = exactla::frac(1, 2);
        let matrices = (0..n)
            .map(|i| {
                let mut a = Matrix::zeros(n, n);
                for j in 0..n {
                    let lower: Vec<Scalar> = (0..n)
                        .map(|l| (&gb[i][j][l] - &gb[j][l][i] + &gb[l][i][j]) * &half)
                        .collect();
                    let col = self.metric_inv.mul_vec(&lower);
                    for (k, v) in col.into_iter().enumerate() {
                        a[(k, j)] = v;
                    }
                }
                a
            })
            .collect();
        Connection { matrices }
    }

    pub fn curvature(&self) -> CurvatureData {
        let n = self.dim();
        let connection = self.levi_civita();
        let a = &connection.matrices;
        let mut riemann = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut r = a[i].commutator(&a[j]);
                for (m, c) in self.algebra.bracket_basis(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        r = &r - &a[m].scale(c);
                    }
                }
                riemann.push(r);
            }
        }
        let ricci_tensor = Matrix::from_fn(n, n, |j, k| {
            (0..n).fold(Scalar::zero(), |acc, i| acc + &riemann[i * n + j][(i, k)])
        });
        let ricci_operator = &self.metric_inv * &ricci_tensor;
        let scalar = ricci_operator.trace();
        CurvatureData {
            riemann,
            ricci_tensor,
            ricci_operator,
            scalar,
            mean_curvature: self.mean_curvature(),
            connection,
        }
    }

    pub fn ricci_operator(&self) -> Matrix {
        self.curvature().ricci_operator
    }

    /// `E*` with `g(E*X, Y) = g(X, EY)`.
    pub fn adjoint(&self, e: &Matrix) -> Matrix {
        &(&self.metric_inv * &e.transpose()) * &self.metric
    }

    pub fn is_self_adjoint(&self, e: &Matrix) -> bool {
        &self.adjoint(e) == e
    }

    /// `H` with `g(H, X) = Tr ad X`.
    pub fn mean_curvature(&self) -> Vec<Scalar> {
        self.metric_inv.mul_vec(&self.algebra.trace_ad())
    }

    /// `λ` with `Ric = λ·id`, if any.
    pub fn is_einstein(&self) -> Option<Scalar> {
        einstein_constant(&self.ricci_operator())
    }

    /// Restriction of the metric and brackets to the first `m` basis vectors.
    pub fn leading_restriction(&self, m: usize) -> Result<MetricLieAlgebra> {
        let algebra = self
            .algebra
            .leading_subalgebra(m)
            .ok_or(Error::InvalidParameter("leading block is not a subalgebra"))?;
        let idx: Vec<usize> = (0..m).collect();
        MetricLieAlgebra::new(algebra, self.metric.select(&idx, &idx))
    }
}

/// `λ` when `ric` is `λ·id`.
pub fn einstein_constant(ric: &Matrix) -> Option<Scalar> {
    if ric.rows() == 0 {
        return Some(Scalar::zero());
    }
    let lambda = ric[(0, 0)].clone();
    (ric == &Matrix::scalar_identity(ric.rows(), &lambda)).then_some(lambda)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Connection {
    /// `matrices[i]` represents `∇_{e_i}`.
    pub matrices: Vec<Matrix>,
}

impl Connection {
    /// `Γ_ij^k`.
    pub fn gamma(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.matrices[i][(k, j)]
    }

    /// `∇_{e_i} e_j`.
    pub fn nabla(&self, i: usize, j: usize) -> Vec<Scalar> {
        self.matrices[i].col(j)
    }

    /// `(∇_{e_a} ω)` as a matrix, for each `a`.
    pub fn covariant_two_form(&self, omega: &Matrix) -> Vec<Matrix> {
        self.matrices
            .iter()
            .map(|a| -&(&(&a.transpose() * omega) + &(omega * a)))
            .collect()
    }

    /// `(∇_{e_a} E) = [A_a, E]` for each `a`.
    pub fn covariant_endomorphism(&self, e: &Matrix) -> Vec<Matrix> {
        self.matrices.iter().map(|a| a.commutator(e)).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurvatureData {
    pub connection: Connection,
    /// `riemann[i·n + j]` is the matrix of `R(e_i, e_j)`.
    pub riemann: Vec<Matrix>,
    pub ricci_tensor: Matrix,
    pub ricci_operator: Matrix,
    pub scalar: Scalar,
    pub mean_curvature: Vec<Scalar>,
}

impl CurvatureData {
    /// Metricity, torsion-freeness, first Bianchi identity, Ricci symmetry and
    /// the defining identity of `H`.
    pub fn identity_checks(&self, m: &MetricLieAlgebra) -> CheckLedger {
        let n = m.dim();
        let a = &self.connection.matrices;
        let mut ledger = CheckLedger::new();

        let metricity = (0..n).find(|&i| {
            let d = &(&a[i].transpose() * &m.metric) + &(&m.metric * &a[i]);
            !d.is_zero()
        });
        ledger.record(
            "metricity",
            metricity.is_none(),
            metricity
                .map(|i| format!("∇_e{} g ≠ 0", i + 1))
                .unwrap_or_default(),
        );

        let mut torsion = None;
        'torsion: for i in 0..n {
            for j in i + 1..n {
                let lhs: Vec<Scalar> = (0..n)
                    .map(|k| &a[i][(k, j)] - &a[j][(k, i)] - m.algebra.c(i, j, k))
                    .collect();
                if !exactla::is_zero_vec(&lhs) {
                    torsion = Some((i, j));
                    break 'torsion;
                }
            }
        }
        ledger.record(
            "torsion_free",
            torsion.is_none(),
            torsion
                .map(|(i, j)| format!("T(e{}, e{}) ≠ 0", i + 1, j + 1))
                .unwrap_or_default(),
        );

        let mut bianchi = None;
        'bianchi: for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let x = self.riemann[i * n + j].col(k);
                    let y = self.riemann[j * n + k].col(i);
                    let z = self.riemann[k * n + i].col(j);
                    if (0..n).any(|l| !(&x[l] + &y[l] + &z[l]).is_zero()) {
                        bianchi = Some((i, j, k));
                        break 'bianchi;
                    }
                }
            }
        }
        ledger.record(
            "bianchi",
            bianchi.is_none(),
            bianchi
                .map(|(i, j, k)| format!("cyclic sum on (e{}, e{}, e{}) ≠ 0", i + 1, j + 1, k + 1))
                .unwrap_or_default(),
        );

        ledger.record("ricci_symmetric", self.ricci_tensor.is_symmetric(), "");
        ledger.record(
            "ricci_self_adjoint",
            m.is_self_adjoint(&self.ricci_operator),
            "",
        );
        let gh = m.metric.mul_vec(&self.mean_curvature);
        ledger.record("mean_curvature", gh == m.algebra.trace_ad(), "");
        ledger
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{frac, int};
    use crate::notation::parse_algebra;

    fn metric_alg(s: &str, diag: &[Scalar]) -> MetricLieAlgebra {
        MetricLieAlgebra::diagonal(parse_algebra(s).unwrap(), diag).unwrap()
    }

    #[test]
    fn abelian_is_flat() {
        let m = metric_alg("0,0", &[int(1), int(-3)]);
        let c = m.curvature();
        assert!(c.connection.matrices.iter().all(Matrix::is_zero));
        assert!(c.ricci_operator.is_zero());
    }

    #[test]
    fn heisenberg_ricci() {
        let m = metric_alg("0,0,e^{12}", &[int(1), int(1), frac(1, 3)]);
        let ric = m.ricci_operator();
        assert_eq!(
            ric,
            Matrix::diagonal(&[frac(-1, 6), frac(-1, 6), frac(1, 6)])
        );
        assert_eq!(m.is_einstein(), None);
        assert!(m.curvature().identity_checks(&m).all_passed());
    }

    #[test]
    fn hyperbolic_plane() {
        for s in [1, -1] {
            let m = metric_alg("e^{12},0", &[int(s), int(1)]);
            assert_eq!(m.is_einstein(), Some(int(-1)));
        }
    }

    #[test]
    fn degenerate_metric_rejected() {
        let g = parse_algebra("0,0").unwrap();
        assert_eq!(
            MetricLieAlgebra::new(g, Matrix::from_i64_rows(&[&[1, 1], &[1, 1]])),
            Err(Error::Degenerate)
        );
    }

    #[test]
    fn heisenberg_extension_is_einstein() {
        for (g1, g2) in [(1, 1), (2, 3), (-1, 2)] {
            let (g1, g2) = (int(g1), int(g2));
            let g3 = &g1 * &g2 / int(3);
            let m = metric_alg(
                "2/3e^{14},2/3e^{24},4/3e^{34}+e^{12},0",
                &[g1, g2, g3, frac(16, 3)],
            );
            assert_eq!(m.is_einstein(), Some(frac(-1, 2)));
            assert_eq!(m.mean_curvature(), vec![int(0), int(0), int(0), frac(1, 2)]);
        }
    }
}
