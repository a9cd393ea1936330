// SPDX-License-Identifier: Apache-2.0

//! Einstein pseudo-Kähler and para-Kähler metrics on rank-one extensions of
//! the Heisenberg algebras `h_{2n+1}`.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::curvature::MetricLieAlgebra;
use crate::exactla::{self, Matrix, Scalar};
use crate::liealg::LieAlgebra;
use crate::{Error, Result};

use super::certificate::{certify, StructureCertificate, StructureKind};
use super::forms::TwoForm;

/// `h_{2n+1}` with `[e_{2i−1}, e_{2i}] = −e_{2n+1}`.
pub fn heisenberg(n: usize) -> LieAlgebra {
    let dim = 2 * n + 1;
    let mut g = LieAlgebra::abelian(dim);
    let mut v = vec![Scalar::zero(); dim];
    v[2 * n] = exactla::int(-1);
    for i in 0..n {
        g.set_bracket(2 * i, 2 * i + 1, &v);
    }
    g
}

/// Nikolayevsky derivation of `h_{2n+1}`.
pub fn heisenberg_nikolayevsky(n: usize) -> Matrix {
    let q = exactla::frac(n as i64 + 1, n as i64 + 2);
    let mut d = vec![q.clone(); 2 * n];
    d.push(q * exactla::int(2));
    Matrix::diagonal(&d)
}

/// The extension `h_{2n+1} ⋊ ℝN` with metric `g̃_ε`, fundamental form `ω` and
/// the resulting certificate.
pub fn generalized_heisenberg(
    n: usize,
    kind: StructureKind,
    alpha: &Scalar,
    g_odd: &[Scalar],
) -> Result<(MetricLieAlgebra, StructureCertificate)> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive"));
    }
    if alpha.is_zero() {
        return Err(Error::InvalidParameter("α must be nonzero"));
    }
    if g_odd.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: g_odd.len(),
        });
    }
    if g_odd.iter().any(Zero::is_zero) {
        return Err(Error::InvalidParameter("metric parameters must be nonzero"));
    }
    let algebra = heisenberg(n).semidirect_extend(&[heisenberg_nikolayevsky(n)])?;
    let eps = exactla::int(kind.epsilon());
    let a2 = alpha * alpha;
    let (n1, n2) = (exactla::int(n as i64 + 1), exactla::int(n as i64 + 2));
    let mut metric: Vec<Scalar> = Vec::with_capacity(2 * n + 2);
    for g in g_odd {
        metric.push(g.clone());
        metric.push(-(&eps * &a2) / g);
    }
    metric.push(-(&eps * &a2) / &n2);
    metric.push(exactla::int(4) * &n1 * &n1 / &n2);
    let m = MetricLieAlgebra::diagonal(algebra, &metric)?;

    let mut terms: Vec<(usize, usize, Scalar)> =
        (0..n).map(|i| (2 * i, 2 * i + 1, alpha.clone())).collect();
    terms.push((2 * n, 2 * n + 1, alpha * exactla::int(2) * &n1 / &n2));
    let w = TwoForm::from_terms(2 * n + 2, &terms);
    let cert = certify(&m, &w, kind);
    Ok((m, cert))
}

/// Closed-form `J_ε` of the family, for comparison with `g̃_ε⁻¹·ω`.
pub fn heisenberg_structure(
    n: usize,
    kind: StructureKind,
    alpha: &Scalar,
    g_odd: &[Scalar],
) -> Matrix {
    let dim = 2 * n + 2;
    let eps = exactla::int(kind.epsilon());
    let n1 = exactla::int(n as i64 + 1);
    let mut j = Matrix::zeros(dim, dim);
    for (i, g) in g_odd.iter().enumerate() {
        let (a, b) = (2 * i, 2 * i + 1);
        j[(b, a)] = -(&eps * g / alpha);
        j[(a, b)] = -(alpha / g);
    }
    j[(dim - 1, dim - 2)] = alpha / (exactla::int(2) * &n1);
    j[(dim - 2, dim - 1)] = eps * exactla::int(2) * n1 / alpha;
    j
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{frac, int};
    use crate::notation::parse_algebra;

    #[test]
    fn n1_matches_rank_one_heisenberg() {
        let (m, c) =
            generalized_heisenberg(1, StructureKind::PseudoKahler, &int(1), &[int(1)]).unwrap();
        assert_eq!(
            m.algebra,
            parse_algebra("2/3e^{14},2/3e^{24},4/3e^{34}+e^{12},0").unwrap()
        );
        assert_eq!(
            m.metric,
            Matrix::diagonal(&[int(1), int(1), frac(1, 3), frac(16, 3)])
        );
        assert!(c.is_valid(), "{}", c.ledger);
    }

    #[test]
    fn closed_form_structure() {
        for kind in StructureKind::ALL {
            for n in 1..=3 {
                let g: Vec<Scalar> = (0..n)
                    .map(|i| frac(2 * i as i64 + 1, 2 - i as i64 % 2 * 3))
                    .collect();
                let alpha = frac(3, 2);
                let (_, c) = generalized_heisenberg(n, kind, &alpha, &g).unwrap();
                assert!(c.is_valid(), "n = {n}, {kind}: {}", c.ledger);
                assert_eq!(c.lambda, Some(frac(-1, 2)));
                assert_eq!(c.endo, heisenberg_structure(n, kind, &alpha, &g));
            }
        }
    }

    #[test]
    fn rejects_zero_parameters() {
        assert!(generalized_heisenberg(1, StructureKind::ParaKahler, &int(0), &[int(1)]).is_err());
        assert!(
            generalized_heisenberg(2, StructureKind::ParaKahler, &int(1), &[int(1), int(0)])
                .is_err()
        );
    }
}
