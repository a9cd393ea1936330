// SPDX-License-Identifier: Apache-2.0

//! Self-contained JSON certificates.

use serde::{Deserialize, Serialize};

use einkahler_core::exactla::{self, Matrix, Scalar};
use einkahler_core::notation::{format_algebra, parse_algebra, parse_two_form};
use einkahler_core::structures::{StructureCertificate, StructureKind};
use einkahler_core::{Check, CheckLedger, MetricLieAlgebra};

use crate::report::CheckRecord;
use crate::CliError;

pub const FORMAT: &str = "einkahler-certificate/1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateRecord {
    pub format: String,
    pub kind: String,
    pub epsilon: i64,
    pub dim: usize,
    pub algebra: String,
    /// Nonzero `c_ij^k` with `i < j`, 1-based: `[i, j, k, "p/q"]`.
    pub structure_constants: Vec<(usize, usize, usize, String)>,
    pub metric: Vec<Vec<String>>,
    pub omega: String,
    pub endomorphism: Vec<Vec<String>>,
    pub lambda: Option<String>,
    pub checks: Vec<CheckRecord>,
}

fn strings(m: &Matrix) -> Vec<Vec<String>> {
    m.row_vectors()
        .iter()
        .map(|r| r.iter().map(exactla::format_scalar).collect())
        .collect()
}

fn matrix(rows: &[Vec<String>], dim: usize, what: &str) -> Result<Matrix, CliError> {
    if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
        return Err(CliError::Input(format!("{what} must be {dim}×{dim}")));
    }
    let parsed: Vec<Vec<Scalar>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|s| crate::input::scalar(s))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<_, _>>()?;
    Ok(Matrix::from_rows(parsed))
}

impl CertificateRecord {
    pub fn from_certificate(c: &StructureCertificate) -> Self {
        let g = &c.space.algebra;
        let n = g.dim();
        let mut constants = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in 0..n {
                    let v = g.c(i, j, k);
                    if *v != exactla::zero() {
                        constants.push((i + 1, j + 1, k + 1, exactla::format_scalar(v)));
                    }
                }
            }
        }
        Self {
            format: FORMAT.into(),
            kind: c.kind.key().into(),
            epsilon: c.kind.epsilon(),
            dim: n,
            algebra: format_algebra(g),
            structure_constants: constants,
            metric: strings(&c.space.metric),
            omega: c.omega.to_string(),
            endomorphism: strings(&c.endo),
            lambda: c.lambda.as_ref().map(exactla::format_scalar),
            checks: c
                .ledger
                .checks
                .iter()
                .map(|ch| CheckRecord {
                    name: ch.name.clone(),
                    status: if ch.passed { "pass" } else { "fail" }.into(),
                    witness: ch.witness.clone(),
                })
                .collect(),
        }
    }

    /// Rebuilds the certificate; the structure constants must agree with the notation.
    pub fn to_certificate(&self) -> Result<StructureCertificate, CliError> {
        if self.format != FORMAT {
            return Err(CliError::Input(format!(
                "unsupported certificate format '{}'",
                self.format
            )));
        }
        let kind = StructureKind::from_key(&self.kind)
            .filter(|k| k.epsilon() == self.epsilon)
            .ok_or_else(|| CliError::Input("inconsistent kind and epsilon".into()))?;
        let g = parse_algebra(&self.algebra)?;
        let n = g.dim();
        if n != self.dim {
            return Err(CliError::Input(
                "dimension does not match the algebra".into(),
            ));
        }
        let mut listed = einkahler_core::LieAlgebra::abelian(n);
        for (i, j, k, c) in &self.structure_constants {
            if !(1..=n).contains(i) || !(1..=n).contains(j) || !(1..=n).contains(k) || i >= j {
                return Err(CliError::Input(
                    "structure constant index out of range".into(),
                ));
            }
            let mut v = listed.bracket_basis(i - 1, j - 1).to_vec();
            v[k - 1] = crate::input::scalar(c)?;
            listed.set_bracket(i - 1, j - 1, &v);
        }
        if listed != g {
            return Err(CliError::Input(
                "structure constants disagree with the notation".into(),
            ));
        }
        let space = MetricLieAlgebra::new(g, matrix(&self.metric, n, "metric")?)?;
        let omega = parse_two_form(&self.omega, n)?;
        let endo = matrix(&self.endomorphism, n, "endomorphism")?;
        let lambda = self
            .lambda
            .as_deref()
            .map(crate::input::scalar)
            .transpose()?;
        let ledger = CheckLedger {
            checks: self
                .checks
                .iter()
                .map(|c| Check {
                    name: c.name.clone(),
                    passed: c.passed(),
                    witness: c.witness.clone(),
                })
                .collect(),
        };
        Ok(StructureCertificate {
            kind,
            space,
            omega,
            endo,
            lambda,
            ledger,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("certificate JSON: {e}")))
    }
}

/// Recomputes every check and compares with the recorded statuses.
pub fn verify(record: &CertificateRecord) -> Result<CheckLedger, CliError> {
    let cert = record.to_certificate()?;
    let mut ledger = cert.verify();
    let recomputed = {
        let fresh = einkahler_core::structures::certify(&cert.space, &cert.omega, cert.kind);
        fresh.ledger
    };
    let consistent = recomputed.checks.len() == cert.ledger.checks.len()
        && recomputed
            .checks
            .iter()
            .zip(&cert.ledger.checks)
            .all(|(a, b)| a.name == b.name && a.passed == b.passed);
    ledger.record(
        "recorded_ledger",
        consistent,
        if consistent {
            ""
        } else {
            "recorded statuses differ from recomputed ones"
        },
    );
    Ok(ledger)
}

#[cfg(test)]
mod tests {
    use super::*;
    use einkahler_core::catalog;
    use einkahler_core::exactla::int;
    use einkahler_core::structures::certify;

    #[test]
    fn round_trip() {
        let (m, w) = catalog::ex61(StructureKind::ParaKahler, &int(2), &int(3)).unwrap();
        let c = certify(&m, &w, StructureKind::ParaKahler);
        let rec = CertificateRecord::from_certificate(&c);
        let back = CertificateRecord::from_json(&rec.to_json()).unwrap();
        assert_eq!(back, rec);
        assert_eq!(back.to_certificate().unwrap(), c);
        assert!(verify(&back).unwrap().all_passed());
    }

    #[test]
    fn tampering_detected() {
        let (m, w) = catalog::ex61(StructureKind::PseudoKahler, &int(1), &int(1)).unwrap();
        let rec =
            CertificateRecord::from_certificate(&certify(&m, &w, StructureKind::PseudoKahler));
        let mut bad = rec.clone();
        bad.metric[0][0] = "2".into();
        assert!(!verify(&bad).unwrap().all_passed());
        let mut bad = rec.clone();
        bad.structure_constants[0].3 = "5".into();
        assert!(verify(&bad).is_err());
        let mut bad = rec;
        bad.checks[0].status = "fail".into();
        assert!(!verify(&bad).unwrap().passed("recorded_ledger"));
    }
}
