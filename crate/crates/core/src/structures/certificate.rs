// SPDX-License-Identifier: Apache-2.0

//! Pseudo-Kähler and para-Kähler certificates.

use alloc::format;
use alloc::string::String;
use core::fmt;

use crate::curvature::{einstein_constant, MetricLieAlgebra};
use crate::exactla::{self, Matrix, Scalar};
use crate::ledger::CheckLedger;

use super::endo::{eigen_split, endo_from_form, nijenhuis};
use super::forms::{d_two_form, TwoForm};

/// `ε = −1` (pseudo-Kähler, `J² = −id`) or `ε = +1` (para-Kähler, `K² = id`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StructureKind {
    PseudoKahler,
    ParaKahler,
}

impl StructureKind {
    pub const ALL: [StructureKind; 2] = [StructureKind::PseudoKahler, StructureKind::ParaKahler];

    pub fn epsilon(self) -> i64 {
        match self {
            StructureKind::PseudoKahler => -1,
            StructureKind::ParaKahler => 1,
        }
    }

    pub fn from_epsilon(eps: i64) -> Option<Self> {
        match eps {
            -1 => Some(StructureKind::PseudoKahler),
            1 => Some(StructureKind::ParaKahler),
            _ => None,
        }
    }

    /// Identifier used on the command line and in serialized certificates.
    pub fn key(self) -> &'static str {
        match self {
            StructureKind::PseudoKahler => "pseudo-kahler",
            StructureKind::ParaKahler => "para-kahler",
        }
    }

    pub fn from_key(s: &str) -> Option<Self> {
        match s {
            "pseudo-kahler" => Some(StructureKind::PseudoKahler),
            "para-kahler" => Some(StructureKind::ParaKahler),
            _ => None,
        }
    }
}

impl fmt::Display for StructureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StructureKind::PseudoKahler => f.write_str("pseudo-Kähler"),
            StructureKind::ParaKahler => f.write_str("para-Kähler"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureCertificate {
    pub kind: StructureKind,
    pub space: MetricLieAlgebra,
    pub omega: TwoForm,
    pub endo: Matrix,
    /// Einstein constant, when the metric is Einstein.
    pub lambda: Option<Scalar>,
    pub ledger: CheckLedger,
}

impl StructureCertificate {
    pub fn is_valid(&self) -> bool {
        self.ledger.all_passed()
    }

    pub fn metric(&self) -> &Matrix {
        &self.space.metric
    }

    /// Recomputes every check from the stored data, including `E = g⁻¹ω`.
    pub fn verify(&self) -> CheckLedger {
        let mut ledger = CheckLedger::new();
        let expected = endo_from_form(&self.space, &self.omega);
        ledger.record(
            "endo_from_form",
            expected == self.endo,
            if expected == self.endo {
                String::new()
            } else {
                format!("g⁻¹ω = {expected}")
            },
        );
        let (checks, lambda) = structure_checks(&self.space, &self.omega, &self.endo, self.kind);
        ledger.extend(checks);
        ledger.record(
            "lambda",
            lambda == self.lambda,
            if lambda == self.lambda {
                String::new()
            } else {
                format!("recomputed {lambda:?}")
            },
        );
        ledger
    }
}

pub fn certify(m: &MetricLieAlgebra, w: &TwoForm, kind: StructureKind) -> StructureCertificate {
    let endo = endo_from_form(m, w);
    let (ledger, lambda) = structure_checks(m, w, &endo, kind);
    StructureCertificate {
        kind,
        space: m.clone(),
        omega: w.clone(),
        endo,
        lambda,
        ledger,
    }
}

fn structure_checks(
    m: &MetricLieAlgebra,
    w: &TwoForm,
    e: &Matrix,
    kind: StructureKind,
) -> (CheckLedger, Option<Scalar>) {
    let n = m.dim();
    let eps = exactla::int(kind.epsilon());
    let mut ledger = CheckLedger::new();

    let sq = e * e;
    let square = sq == Matrix::scalar_identity(n, &eps);
    ledger.record(
        "square",
        square,
        if square {
            String::new()
        } else {
            format!("E² = {sq}")
        },
    );

    let pulled = &(&e.transpose() * &m.metric) * e;
    let compat = pulled == m.metric.scale(&-eps.clone());
    ledger.record(
        "compatibility",
        compat,
        if compat {
            String::new()
        } else {
            format!("g(E·, E·) = {pulled}")
        },
    );

    let dw = d_two_form(&m.algebra, w);
    ledger.record(
        "closed",
        dw.is_zero(),
        if dw.is_zero() {
            String::new()
        } else {
            format!("dω = {dw}")
        },
    );

    let conn = m.levi_civita();
    let bad_form = conn
        .covariant_two_form(w.matrix())
        .iter()
        .position(|x| !x.is_zero());
    ledger.record(
        "parallel_form",
        bad_form.is_none(),
        bad_form
            .map(|a| format!("∇_e{} ω ≠ 0", a + 1))
            .unwrap_or_default(),
    );
    let bad_endo = conn
        .covariant_endomorphism(e)
        .iter()
        .position(|x| !x.is_zero());
    ledger.record(
        "parallel_endo",
        bad_endo.is_none(),
        bad_endo
            .map(|a| format!("∇_e{} E ≠ 0", a + 1))
            .unwrap_or_default(),
    );

    let nj = nijenhuis(&m.algebra, e);
    let witness = nj.witness();
    ledger.record(
        "nijenhuis_zero",
        witness.is_none(),
        witness
            .map(|(i, j)| format!("N(e{}, e{}) ≠ 0", i + 1, j + 1))
            .unwrap_or_default(),
    );

    if kind == StructureKind::ParaKahler {
        let split = eigen_split(&m.algebra, e);
        let sig = exactla::signature(&m.metric);
        let neutral = sig.as_ref().is_ok_and(|s| s.is_neutral());
        let null = split.null_for(m);
        let ok =
            split.balanced() && split.plus_subalgebra && split.minus_subalgebra && null && neutral;
        let (p, q) = split.dims();
        let witness = if ok {
            String::new()
        } else {
            format!(
                "dims ({p}, {q}), subalgebras ({}, {}), null {null}, neutral {neutral}",
                split.plus_subalgebra, split.minus_subalgebra
            )
        };
        ledger.record("eigen_split", ok, witness);
    }

    let ric = m.ricci_operator();
    let lambda = einstein_constant(&ric);
    ledger.record(
        "einstein",
        lambda.is_some(),
        match &lambda {
            Some(l) => format!("λ = {l}"),
            None => format!("Ric = {ric}"),
        },
    );
    (ledger, lambda)
}
