// SPDX-License-Identifier: Apache-2.0

//! Pseudo-Iwasawa Einstein extensions of nilsolitons.
//!
//! Given `Ric = λ·id + D` on a nilpotent metric Lie algebra `(g, g)` and an
//! abelian family of commuting self-adjoint derivations containing `D`, the
//! semidirect product `g ⋊ a` with metric `g ⊕ (−1/λ)·⟨,⟩_Tr` is Einstein
//! with constant `λ`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::curvature::{einstein_constant, MetricLieAlgebra};
use crate::exactla::{self, Matrix, Scalar};
use crate::ledger::CheckLedger;
use crate::liealg::gram;
use crate::soliton::SolitonDecomposition;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionSpec {
    pub base: MetricLieAlgebra,
    pub soliton: SolitonDecomposition,
    pub abelian_derivations: Vec<Matrix>,
}

impl ExtensionSpec {
    pub fn new(base: MetricLieAlgebra, soliton: SolitonDecomposition, ders: Vec<Matrix>) -> Self {
        Self {
            base,
            soliton,
            abelian_derivations: ders,
        }
    }

    pub fn gram(&self) -> Matrix {
        gram(&self.abelian_derivations)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardDecomposition {
    pub ideal_indices: Vec<usize>,
    pub abelian_indices: Vec<usize>,
    pub pseudo_iwasawa: bool,
}

impl StandardDecomposition {
    /// First `n` basis vectors form the ideal, the rest the abelian factor.
    pub fn split(n: usize, total: usize) -> Self {
        Self {
            ideal_indices: (0..n).collect(),
            abelian_indices: (n..total).collect(),
            pseudo_iwasawa: true,
        }
    }
}

pub fn pseudo_iwasawa_extend(
    spec: &ExtensionSpec,
) -> Result<(MetricLieAlgebra, StandardDecomposition)> {
    let lambda = &spec.soliton.lambda;
    if lambda.is_zero() {
        return Err(Error::ZeroLambda);
    }
    let ders = &spec.abelian_derivations;
    let algebra = spec.base.algebra.semidirect_extend(ders)?;
    if let Some(index) = ders.iter().position(|d| !spec.base.is_self_adjoint(d)) {
        return Err(Error::NotSelfAdjoint { index });
    }
    let flat: Vec<Vec<Scalar>> = ders.iter().map(|d| d.as_slice().to_vec()).collect();
    if exactla::span_coordinates(&flat, spec.soliton.d.as_slice()).is_none() {
        return Err(Error::DerivationNotInSpan);
    }
    let gram = spec.gram();
    if gram.determinant().is_zero() {
        return Err(Error::DegenerateGram);
    }
    let scale = -lambda.recip();
    let metric = spec.base.metric.direct_sum(&gram.scale(&scale));
    let n = spec.base.dim();
    let m = MetricLieAlgebra::new(algebra, metric)?;
    let ric = m.ricci_operator();
    match einstein_constant(&ric) {
        Some(l) if &l == lambda => {}
        _ => return Err(Error::NotEinstein(format!("Ric = {ric}"))),
    }
    let total = m.dim();
    Ok((m, StandardDecomposition::split(n, total)))
}

/// Rank-one extension by `N = −D/λ`, metric entry `−Tr N²/λ` on the new vector.
pub fn rank_one_extend(
    base: &MetricLieAlgebra,
    soliton: &SolitonDecomposition,
) -> Result<(MetricLieAlgebra, StandardDecomposition)> {
    if soliton.lambda.is_zero() {
        return Err(Error::ZeroLambda);
    }
    let n = soliton.d.scale(&(-soliton.lambda.recip()));
    pseudo_iwasawa_extend(&ExtensionSpec::new(
        base.clone(),
        soliton.clone(),
        alloc::vec![n],
    ))
}

fn restricted_metric(m: &MetricLieAlgebra, idx: &[usize]) -> Option<MetricLieAlgebra> {
    let sub = m.algebra.coordinate_subalgebra(idx)?;
    MetricLieAlgebra::new(sub, m.metric.select(idx, idx)).ok()
}

/// Ideal/abelian/orthogonality/self-adjointness checks of a standard decomposition.
pub fn verify_pseudo_iwasawa(m: &MetricLieAlgebra, sd: &StandardDecomposition) -> CheckLedger {
    let n = m.dim();
    let mut ledger = CheckLedger::new();
    let unit = |i: usize| -> Vec<Scalar> {
        let mut v = alloc::vec![Scalar::zero(); n];
        v[i] = exactla::one();
        v
    };
    let ideal: Vec<Vec<Scalar>> = sd.ideal_indices.iter().map(|&i| unit(i)).collect();
    let is_ideal = m.algebra.is_ideal(&ideal);
    ledger.record("ideal", is_ideal, if is_ideal { "" } else { "[g̃, n] ⊄ n" });
    let nilpotent = m
        .algebra
        .coordinate_subalgebra(&sd.ideal_indices)
        .is_some_and(|s| s.flags().nilpotent);
    ledger.record("nilpotent_ideal", nilpotent, "");

    let mut abelian = true;
    for (p, &a) in sd.abelian_indices.iter().enumerate() {
        for &b in &sd.abelian_indices[p + 1..] {
            if !exactla::is_zero_vec(m.algebra.bracket_basis(a, b)) {
                abelian = false;
            }
        }
    }
    ledger.record("abelian_complement", abelian, "");

    let covers = sd.ideal_indices.len() + sd.abelian_indices.len() == n;
    let orthogonal = covers
        && sd.ideal_indices.iter().all(|&i| {
            sd.abelian_indices
                .iter()
                .all(|&a| m.metric[(i, a)].is_zero())
        });
    ledger.record("orthogonal", orthogonal, "");

    let bad: Vec<usize> = sd
        .abelian_indices
        .iter()
        .copied()
        .filter(|&a| !m.is_self_adjoint(&m.algebra.ad(a)))
        .collect();
    ledger.record(
        "self_adjoint_ad",
        bad.is_empty(),
        bad.first()
            .map(|a| format!("ad e{} is not self-adjoint", a + 1))
            .unwrap_or_default(),
    );
    ledger
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Dichotomy {
    /// Unimodular, `H = 0`, the nilpotent part is Einstein.
    Unimodular,
    /// Non-unimodular with `g̃(H, H) ≠ 0` and `Tr D ≠ 0`.
    NonUnimodular { h_norm: Scalar, trace_d: Scalar },
    /// Neither branch is consistent with the data.
    Neither,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrespondenceReport {
    pub ledger: CheckLedger,
    pub mean_curvature: Vec<Scalar>,
    pub d: Matrix,
    pub branch: Dichotomy,
}

/// Checks `Ric = λ·id + D` with `D = ad H` on the ideal,
/// `⟨ad X, ad Y⟩_Tr = −λ·g̃(X, Y)` on the abelian factor, `Tr D² = −λ·Tr D`,
/// and which side of the unimodular dichotomy holds.
pub fn verify_correspondence(
    m: &MetricLieAlgebra,
    sd: &StandardDecomposition,
    lambda: &Scalar,
) -> CorrespondenceReport {
    let mut ledger = CheckLedger::new();
    let einstein = einstein_constant(&m.ricci_operator());
    ledger.record(
        "einstein",
        einstein.as_ref() == Some(lambda),
        match &einstein {
            Some(l) if l != lambda => format!("Ric = {l}·id"),
            None => String::from("Ric is not a multiple of id"),
            _ => String::new(),
        },
    );

    let h = m.mean_curvature();
    let idx = &sd.ideal_indices;
    let d = m.algebra.ad_vec(&h).select(idx, idx);
    match restricted_metric(m, idx) {
        Some(base) => {
            let ric = base.ricci_operator();
            let residual = &(&ric - &Matrix::scalar_identity(idx.len(), lambda)) - &d;
            ledger.record(
                "nilsoliton_ad_h",
                residual.is_zero(),
                if residual.is_zero() {
                    String::new()
                } else {
                    format!("Ric − λ·id − ad H = {residual}")
                },
            );
        }
        None => ledger.record("nilsoliton_ad_h", false, "ideal block is not a subalgebra"),
    }

    let ads: Vec<Matrix> = sd
        .abelian_indices
        .iter()
        .map(|&a| m.algebra.ad(a))
        .collect();
    let tr = gram(&ads);
    let g_a = m.metric.select(&sd.abelian_indices, &sd.abelian_indices);
    let expected = g_a.scale(&-lambda.clone());
    ledger.record(
        "trace_form",
        tr == expected,
        if tr == expected {
            String::new()
        } else {
            format!("⟨ad,ad⟩ = {tr}, −λ·g̃ = {expected}")
        },
    );

    let trace_d = d.trace();
    let trace_d2 = (&d * &d).trace();
    let rhs = -lambda.clone() * &trace_d;
    ledger.record(
        "trace_d_squared",
        trace_d2 == rhs,
        if trace_d2 == rhs {
            String::new()
        } else {
            format!("Tr D² = {trace_d2}, −λ·Tr D = {rhs}")
        },
    );

    let unimodular = m.algebra.trace_ad().iter().all(Zero::is_zero);
    let h_norm = m.inner(&h, &h);
    let branch = if unimodular && exactla::is_zero_vec(&h) && d.is_zero() {
        Dichotomy::Unimodular
    } else if !unimodular && !h_norm.is_zero() && !trace_d.is_zero() {
        Dichotomy::NonUnimodular { h_norm, trace_d }
    } else {
        Dichotomy::Neither
    };
    ledger.record("dichotomy", branch != Dichotomy::Neither, "");
    CorrespondenceReport {
        ledger,
        mean_curvature: h,
        d,
        branch,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{frac, int};
    use crate::notation::parse_algebra;
    use crate::soliton::soliton_decompose;

    fn heisenberg_base() -> MetricLieAlgebra {
        MetricLieAlgebra::diagonal(
            parse_algebra("0,0,e^{12}").unwrap(),
            &[int(1), int(1), frac(1, 3)],
        )
        .unwrap()
    }

    #[test]
    fn heisenberg_rank_one() {
        let base = heisenberg_base();
        let sol = soliton_decompose(&base);
        let (ext, sd) = rank_one_extend(&base, &sol).unwrap();
        assert_eq!(
            ext.algebra,
            parse_algebra("2/3e^{14},2/3e^{24},4/3e^{34}+e^{12},0").unwrap()
        );
        assert_eq!(ext.metric[(3, 3)], frac(16, 3));
        assert!(verify_pseudo_iwasawa(&ext, &sd).all_passed());
        let rep = verify_correspondence(&ext, &sd, &frac(-1, 2));
        assert!(rep.ledger.all_passed(), "{}", rep.ledger);
        assert_eq!(
            rep.branch,
            Dichotomy::NonUnimodular {
                h_norm: frac(4, 3),
                trace_d: frac(4, 3)
            }
        );
    }

    #[test]
    fn wrong_split_is_not_an_ideal() {
        let base = heisenberg_base();
        let (ext, _) = rank_one_extend(&base, &soliton_decompose(&base)).unwrap();
        let sd = StandardDecomposition {
            ideal_indices: vec![0, 1, 3],
            abelian_indices: vec![2],
            pseudo_iwasawa: true,
        };
        assert!(!verify_pseudo_iwasawa(&ext, &sd).passed("ideal"));
    }

    #[test]
    fn span_and_adjointness_errors() {
        let base = heisenberg_base();
        let sol = soliton_decompose(&base);
        let other = Matrix::diagonal(&[int(1), int(0), int(1)]);
        let spec = ExtensionSpec::new(base.clone(), sol.clone(), vec![other]);
        assert_eq!(
            pseudo_iwasawa_extend(&spec),
            Err(Error::DerivationNotInSpan)
        );

        let mut skew = Matrix::zeros(3, 3);
        skew[(0, 1)] = int(1);
        let spec = ExtensionSpec::new(base, sol, vec![skew]);
        assert!(matches!(
            pseudo_iwasawa_extend(&spec),
            Err(Error::NotSelfAdjoint { index: 0 })
        ));
    }
}
