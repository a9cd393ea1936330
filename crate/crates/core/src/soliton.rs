// SPDX-License-Identifier: Apache-2.0

//! Nilsolitons `Ric = λ·id + D` and the diagonal solver on nice algebras.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::curvature::MetricLieAlgebra;
use crate::exactla::poly;
use crate::exactla::{self, Matrix, MultiplicativeOutcome, Scalar};
use crate::ledger::CheckLedger;
use crate::liealg::LieAlgebra;
use crate::nice::{self, NiceStructure};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NilType {
    /// `λ = 0`, `D = 0` (Ricci-flat).
    Nil1,
    /// `λ = 0`, `D ≠ 0`.
    Nil2,
    /// `λ ≠ 0`, `D = 0` (Einstein).
    Nil3,
    /// `λ ≠ 0`, `D ≠ 0`.
    Nil4,
    NotSoliton,
}

impl NilType {
    pub fn classify(lambda: &Scalar, d: &Matrix) -> NilType {
        match (lambda.is_zero(), d.is_zero()) {
            (true, true) => NilType::Nil1,
            (true, false) => NilType::Nil2,
            (false, true) => NilType::Nil3,
            (false, false) => NilType::Nil4,
        }
    }
}

impl fmt::Display for NilType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            NilType::Nil1 => "Nil1",
            NilType::Nil2 => "Nil2",
            NilType::Nil3 => "Nil3",
            NilType::Nil4 => "Nil4",
            NilType::NotSoliton => "not a nilsoliton",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolitonDecomposition {
    pub lambda: Scalar,
    pub d: Matrix,
    pub nil_type: NilType,
    pub d_semisimple: bool,
    pub d_eigenvalues_rational: bool,
}

impl SolitonDecomposition {
    pub fn new(lambda: Scalar, d: Matrix) -> Self {
        Self {
            nil_type: NilType::classify(&lambda, &d),
            d_semisimple: poly::is_semisimple(&d),
            d_eigenvalues_rational: poly::eigenvalues_rational(&d),
            lambda,
            d,
        }
    }
}

/// Solves `Ric − λ·id ∈ Der(g)` for `λ`.
///
/// Without a solution the result has type `NotSoliton`, `λ = 0` and `D = Ric`.
pub fn soliton_decompose(m: &MetricLieAlgebra) -> SolitonDecomposition {
    let n = m.dim();
    let ric = m.ricci_operator();
    if m.algebra.is_abelian() && ric.is_zero() {
        return SolitonDecomposition::new(Scalar::zero(), Matrix::zeros(n, n));
    }
    let der = m.algebra.derivations();
    let id = Matrix::identity(n);
    // unknowns: λ, then coordinates along the derivation basis
    let cols = 1 + der.dim();
    let a = Matrix::from_fn(n * n, cols, |r, c| {
        if c == 0 {
            id.as_slice()[r].clone()
        } else {
            der.basis[c - 1].as_slice()[r].clone()
        }
    });
    let sol = exactla::solve_linear(&a, ric.as_slice()).expect("shapes agree");
    match sol.particular {
        Some(x) => {
            let lambda = x[0].clone();
            let d = &ric - &id.scale(&lambda);
            SolitonDecomposition::new(lambda, d)
        }
        None => SolitonDecomposition {
            lambda: Scalar::zero(),
            d_semisimple: poly::is_semisimple(&ric),
            d_eigenvalues_rational: poly::eigenvalues_rational(&ric),
            d: ric,
            nil_type: NilType::NotSoliton,
        },
    }
}

/// Outcome of checking a claimed decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NilsolitonReport {
    pub ledger: CheckLedger,
    pub semisimple: bool,
    pub nil_type: NilType,
}

pub fn verify_nilsoliton(m: &MetricLieAlgebra, claim: &SolitonDecomposition) -> NilsolitonReport {
    let n = m.dim();
    let ric = m.ricci_operator();
    let mut ledger = CheckLedger::new();
    let residual = &(&ric - &Matrix::scalar_identity(n, &claim.lambda)) - &claim.d;
    ledger.record(
        "ricci_decomposition",
        residual.is_zero(),
        if residual.is_zero() {
            alloc::string::String::new()
        } else {
            format!("Ric − λ·id − D = {residual}")
        },
    );
    let defect = m.algebra.derivation_defect(&claim.d);
    ledger.record(
        "derivation",
        defect.is_none(),
        defect
            .map(|(i, j, _)| format!("derivation identity fails on (e{}, e{})", i + 1, j + 1))
            .unwrap_or_default(),
    );
    if !claim.lambda.is_zero() {
        ledger.record(
            "rational_eigenvalues",
            poly::eigenvalues_rational(&claim.d),
            "",
        );
    }
    let nil_type = NilType::classify(&claim.lambda, &claim.d);
    ledger.record(
        "type",
        claim.nil_type == nil_type,
        if claim.nil_type == nil_type {
            alloc::string::String::new()
        } else {
            format!("claimed {}, data give {}", claim.nil_type, nil_type)
        },
    );
    NilsolitonReport {
        ledger,
        semisimple: poly::is_semisimple(&claim.d),
        nil_type,
    }
}

/// Particular solution of `M_Δ·M_Δᵀ·b = (1, …, 1)`.
pub fn b_vector(ns: &NiceStructure) -> Result<Vec<Scalar>> {
    let m = ns.root_matrix_rational();
    if m.rows() == 0 {
        return Ok(Vec::new());
    }
    let gram = &m * &m.transpose();
    let ones = vec![Scalar::one(); m.rows()];
    let sol = exactla::solve_linear(&gram, &ones)?;
    sol.particular.ok_or(Error::Inconsistent("M·Mᵀ·b = 1"))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalSolitonProblem {
    pub nice: NiceStructure,
    pub b: Vec<Scalar>,
    /// Basis of `ker M_Δᵀ`.
    pub kernel: Vec<Vec<Scalar>>,
    pub x: Vec<Scalar>,
    pub c: Vec<Scalar>,
    pub lambda: Scalar,
    pub nikolayevsky: Vec<Scalar>,
    /// Targets `X_h / c_h²` of the multiplicative system.
    pub targets: Vec<Scalar>,
    pub solutions: MultiplicativeOutcome,
}

impl DiagonalSolitonProblem {
    /// Diagonal metric for free parameters `params` and sign vector `signs`.
    pub fn metric(&self, params: &[Scalar], signs: &[i8]) -> Result<Vec<Scalar>> {
        match &self.solutions {
            MultiplicativeOutcome::Family(f) => f.instantiate(params, signs),
            _ => Err(Error::InvalidParameter("no rational metric family")),
        }
    }

    /// `λ·(id − N)`, the Ricci operator every family member must have.
    pub fn expected_ricci(&self) -> Matrix {
        let d: Vec<Scalar> = self
            .nikolayevsky
            .iter()
            .map(|n| &self.lambda * (Scalar::one() - n))
            .collect();
        Matrix::diagonal(&d)
    }
}

/// Diagonal nilsoliton metrics with constant `λ ≠ 0`, optionally shifting `X`
/// by `Σ kernel_coeffs[i]·k_i` with `k_i` the basis of `ker M_Δᵀ`.
pub fn diagonal_soliton_solve(
    g: &LieAlgebra,
    lambda: &Scalar,
    kernel_coeffs: Option<&[Scalar]>,
) -> Result<DiagonalSolitonProblem> {
    if lambda.is_zero() {
        return Err(Error::ZeroLambda);
    }
    let ns = nice::nice_structure(g).map_err(Error::NotNice)?;
    let b = b_vector(&ns)?;
    let kernel = exactla::nullspace(&ns.root_matrix_rational().transpose());
    let mut x: Vec<Scalar> = b.iter().map(|bi| bi * lambda * exactla::int(-2)).collect();
    if let Some(coeffs) = kernel_coeffs {
        if coeffs.len() != kernel.len() {
            return Err(Error::DimensionMismatch {
                expected: kernel.len(),
                found: coeffs.len(),
            });
        }
        for (k, a) in kernel.iter().zip(coeffs) {
            for (xi, ki) in x.iter_mut().zip(k) {
                *xi += ki * a;
            }
        }
    }
    if let Some(row) = x.iter().position(Zero::is_zero) {
        return Err(Error::ZeroTarget { row });
    }
    let targets: Vec<Scalar> = x
        .iter()
        .zip(&ns.c_vector)
        .map(|(xh, ch)| xh / (ch * ch))
        .collect();
    let solutions = exactla::multiplicative_solve(&ns.root_matrix, &targets)?;
    let nikolayevsky = nice::nikolayevsky(g, &ns)?;
    Ok(DiagonalSolitonProblem {
        b,
        kernel,
        x,
        c: ns.c_vector.clone(),
        lambda: lambda.clone(),
        nikolayevsky,
        targets,
        solutions,
        nice: ns,
    })
}
