// SPDX-License-Identifier: Apache-2.0

//! Search for parallel pseudo-Kähler and para-Kähler structures.
//!
//! The parallel closed 2-forms `Σ y_a·B_a` are computed for a fixed metric. When
//! the `B_a` have disjoint supports covering every index and their
//! endomorphisms `E_a` multiply to zero pairwise, `E² = ε·id` splits into the
//! binomial equations `y_a²·c_a = ε` with `E_a² = c_a·Π_a`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::curvature::{einstein_constant, MetricLieAlgebra};
use crate::exactla::{self, Matrix, Scalar};
use crate::extension::rank_one_extend;
use crate::liealg::LieAlgebra;
use crate::soliton::{diagonal_soliton_solve, SolitonDecomposition};
use crate::{Error, Result};

use super::certificate::{certify, StructureCertificate, StructureKind};
use super::endo::endo_from_form;
use super::forms::{
    closed_two_forms, nondegenerate_search, pair_label, parallel_two_forms, FormSpace,
    Nondegeneracy, TwoForm,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ObstructionStage {
    NoClosedNondegenerate,
    NoParallelNondegenerate,
    NoSquareSolution,
}

impl ObstructionStage {
    pub fn key(self) -> &'static str {
        match self {
            ObstructionStage::NoClosedNondegenerate => "no_closed_nondegenerate",
            ObstructionStage::NoParallelNondegenerate => "no_parallel_nondegenerate",
            ObstructionStage::NoSquareSolution => "no_square_solution",
        }
    }
}

impl fmt::Display for ObstructionStage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionReport {
    pub stage: ObstructionStage,
    /// Coordinates `y_ij` (0-based) that vanish on the parallel space but not on
    /// the closed space.
    pub forced_zero: Vec<(usize, usize)>,
    /// The forced coordinates whose vanishing alone makes every closed form degenerate.
    pub decisive: Vec<(usize, usize)>,
    pub detail: String,
}

impl ObstructionReport {
    pub fn forces(&self, i: usize, j: usize) -> bool {
        self.forced_zero.contains(&(i, j))
    }

    pub fn witness(&self, dim: usize) -> String {
        if self.forced_zero.is_empty() {
            return self.detail.clone();
        }
        let rel: Vec<String> = self
            .forced_zero
            .iter()
            .map(|&(i, j)| format!("y{}=0", pair_label(i, j, dim)))
            .collect();
        rel.join(", ")
    }
}

/// `Σ coeff·y_a·y_b = constant`, one per entry of `E² = ε·id`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticEquation {
    pub entry: (usize, usize),
    pub terms: Vec<(usize, usize, Scalar)>,
    pub constant: Scalar,
}

impl fmt::Display for QuadraticEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (a, b, c) in &self.terms {
            if c.is_negative() {
                f.write_str(if first { "-" } else { " - " })?;
            } else if !first {
                f.write_str(" + ")?;
            }
            let mag = c.abs();
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            if a == b {
                write!(f, "y{}^2", a + 1)?;
            } else {
                write!(f, "y{}*y{}", a + 1, b + 1)?;
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " = {}", self.constant)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticSystem {
    pub kind: StructureKind,
    pub unknowns: usize,
    pub equations: Vec<QuadraticEquation>,
}

/// `E(y)² = ε·id` for `E(y) = Σ y_a·E_a`, dropping trivial entries.
pub fn square_system(endos: &[Matrix], kind: StructureKind) -> QuadraticSystem {
    let k = endos.len();
    let n = endos.first().map_or(0, Matrix::rows);
    let mut products = Vec::new();
    for a in 0..k {
        for b in a..k {
            let p = if a == b {
                &endos[a] * &endos[a]
            } else {
                &(&endos[a] * &endos[b]) + &(&endos[b] * &endos[a])
            };
            products.push((a, b, p));
        }
    }
    let eps = exactla::int(kind.epsilon());
    let mut equations = Vec::new();
    for r in 0..n {
        for c in 0..n {
            let terms: Vec<(usize, usize, Scalar)> = products
                .iter()
                .filter(|(_, _, p)| !p[(r, c)].is_zero())
                .map(|(a, b, p)| (*a, *b, p[(r, c)].clone()))
                .collect();
            let constant = if r == c { eps.clone() } else { Scalar::zero() };
            if terms.is_empty() && constant.is_zero() {
                continue;
            }
            equations.push(QuadraticEquation {
                entry: (r, c),
                terms,
                constant,
            });
        }
    }
    QuadraticSystem {
        kind,
        unknowns: k,
        equations,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Certificates(Vec<StructureCertificate>),
    Obstruction(ObstructionReport),
    /// `E² = ε·id` is not block-binomial; the systems are returned unsolved.
    Residual(Vec<QuadraticSystem>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureSearch {
    pub warnings: Vec<String>,
    pub closed: FormSpace,
    pub parallel: FormSpace,
    pub outcome: SearchOutcome,
}

impl StructureSearch {
    pub fn certificates(&self) -> &[StructureCertificate] {
        match &self.outcome {
            SearchOutcome::Certificates(c) => c,
            _ => &[],
        }
    }

    pub fn obstruction(&self) -> Option<&ObstructionReport> {
        match &self.outcome {
            SearchOutcome::Obstruction(o) => Some(o),
            _ => None,
        }
    }
}

/// Closed forms `ω` with `ω_c = 0`.
fn closed_with_zero(closed: &FormSpace, (i, j): (usize, usize)) -> FormSpace {
    let row: Vec<Scalar> = closed.basis.iter().map(|b| b.eval(i, j).clone()).collect();
    let coords = exactla::nullspace(&Matrix::from_rows(vec![row]));
    FormSpace {
        dim: closed.dim,
        basis: coords.iter().map(|t| closed.combine(t)).collect(),
        closed: true,
        parallel: false,
    }
}

fn forced_relations(
    closed: &FormSpace,
    parallel: &FormSpace,
) -> (Vec<(usize, usize)>, Vec<(usize, usize)>) {
    let on_closed = closed.vanishing_coordinates();
    let forced: Vec<(usize, usize)> = parallel
        .vanishing_coordinates()
        .into_iter()
        .filter(|c| !on_closed.contains(c))
        .collect();
    let decisive = forced
        .iter()
        .copied()
        .filter(|&c| {
            nondegenerate_search(&closed_with_zero(closed, c)) == Nondegeneracy::NoneExists
        })
        .collect();
    (forced, decisive)
}

enum BlockSolve {
    Solutions(Vec<(StructureKind, Vec<Scalar>)>, Vec<String>),
    NotBinomial,
}

fn block_solve(endos: &[Matrix], forms: &[TwoForm], n: usize) -> BlockSolve {
    let supports: Vec<Vec<usize>> = forms.iter().map(TwoForm::support).collect();
    let mut seen = vec![false; n];
    for s in &supports {
        for &i in s {
            if seen[i] {
                return BlockSolve::NotBinomial;
            }
            seen[i] = true;
        }
    }
    if seen.iter().any(|s| !s) {
        return BlockSolve::NotBinomial;
    }
    for a in 0..endos.len() {
        for b in 0..endos.len() {
            if a != b && !(&endos[a] * &endos[b]).is_zero() {
                return BlockSolve::NotBinomial;
            }
        }
    }
    let mut scales = Vec::new();
    let mut failures = Vec::new();
    for (a, (e, s)) in endos.iter().zip(&supports).enumerate() {
        let sq = e * e;
        let c = sq[(s[0], s[0])].clone();
        let projector = Matrix::from_fn(n, n, |r, q| {
            if r == q && s.contains(&r) {
                c.clone()
            } else {
                Scalar::zero()
            }
        });
        if sq != projector {
            failures.push(format!(
                "E{}² is not a multiple of the block identity",
                a + 1
            ));
        }
        scales.push(c);
    }
    if !failures.is_empty() {
        return BlockSolve::Solutions(Vec::new(), failures);
    }
    let mut solutions = Vec::new();
    for kind in StructureKind::ALL {
        let eps = exactla::int(kind.epsilon());
        let roots: Option<Vec<Scalar>> = scales
            .iter()
            .map(|c| exactla::rational_sqrt(&(&eps / c)))
            .collect();
        match roots {
            Some(y) => solutions.push((kind, y)),
            None => failures.push(format!(
                "ε = {}: some y_a² = ε/c_a has no rational root",
                kind.epsilon()
            )),
        }
    }
    BlockSolve::Solutions(solutions, failures)
}

/// Closed, then parallel, then `E² = ε·id` on the parallel family.
pub fn search_structures(m: &MetricLieAlgebra) -> StructureSearch {
    let n = m.dim();
    let mut warnings = Vec::new();
    if einstein_constant(&m.ricci_operator()).is_none() {
        warnings.push(String::from("metric is not Einstein"));
    }
    let closed = closed_two_forms(&m.algebra);
    let parallel = parallel_two_forms(m);
    let finish = |warnings, outcome| StructureSearch {
        warnings,
        closed: closed.clone(),
        parallel: parallel.clone(),
        outcome,
    };

    match nondegenerate_search(&closed) {
        Nondegeneracy::NoneExists => {
            let report = ObstructionReport {
                stage: ObstructionStage::NoClosedNondegenerate,
                forced_zero: Vec::new(),
                decisive: Vec::new(),
                detail: format!("all {} closed 2-forms are degenerate", closed.len()),
            };
            return finish(warnings, SearchOutcome::Obstruction(report));
        }
        Nondegeneracy::Undecided => warnings.push(String::from("closed nondegeneracy undecided")),
        Nondegeneracy::Found(_) => {}
    }
    match nondegenerate_search(&parallel) {
        Nondegeneracy::NoneExists => {
            let (forced_zero, decisive) = forced_relations(&closed, &parallel);
            let report = ObstructionReport {
                stage: ObstructionStage::NoParallelNondegenerate,
                forced_zero,
                decisive,
                detail: format!(
                    "all {} parallel closed 2-forms are degenerate",
                    parallel.len()
                ),
            };
            return finish(warnings, SearchOutcome::Obstruction(report));
        }
        Nondegeneracy::Undecided => warnings.push(String::from("parallel nondegeneracy undecided")),
        Nondegeneracy::Found(_) => {}
    }

    let endos: Vec<Matrix> = parallel
        .basis
        .iter()
        .map(|b| endo_from_form(m, b))
        .collect();
    match block_solve(&endos, &parallel.basis, n) {
        BlockSolve::NotBinomial => {
            let systems = StructureKind::ALL
                .iter()
                .map(|&k| square_system(&endos, k))
                .collect();
            finish(warnings, SearchOutcome::Residual(systems))
        }
        BlockSolve::Solutions(solutions, failures) => {
            let mut certs = Vec::new();
            let mut rejected = failures;
            for (kind, y) in solutions {
                let c = certify(m, &parallel.combine(&y), kind);
                if c.is_valid() {
                    certs.push(c);
                } else {
                    let names: Vec<&str> = c.ledger.failures().map(|f| f.name.as_str()).collect();
                    rejected.push(format!("{kind}: failed {}", names.join(", ")));
                }
            }
            if certs.is_empty() {
                let report = ObstructionReport {
                    stage: ObstructionStage::NoSquareSolution,
                    forced_zero: Vec::new(),
                    decisive: Vec::new(),
                    detail: rejected.join("; "),
                };
                finish(warnings, SearchOutcome::Obstruction(report))
            } else {
                warnings.extend(rejected);
                finish(warnings, SearchOutcome::Certificates(certs))
            }
        }
    }
}

/// Default rational samples for free metric parameters.
pub fn default_samples() -> Vec<Scalar> {
    vec![
        exactla::int(1),
        exactla::int(2),
        exactla::int(-1),
        exactla::frac(3, 2),
        exactla::frac(-2, 3),
    ]
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyInstance {
    pub params: Vec<Scalar>,
    pub signs: Vec<i8>,
    pub extension: MetricLieAlgebra,
    pub search: StructureSearch,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySearch {
    pub instances: Vec<FamilyInstance>,
}

impl FamilySearch {
    pub fn certificates(&self) -> impl Iterator<Item = &StructureCertificate> {
        self.instances.iter().flat_map(|i| i.search.certificates())
    }

    pub fn first_of(&self, kind: StructureKind) -> Option<&StructureCertificate> {
        self.certificates().find(|c| c.kind == kind)
    }
}

/// Parameter tuples from `samples^f`, last coordinate fastest, at most `limit`.
pub fn parameter_grid(samples: &[Scalar], f: usize, limit: usize) -> Vec<Vec<Scalar>> {
    let mut out = Vec::new();
    if samples.is_empty() && f > 0 {
        return out;
    }
    let mut digits = vec![0usize; f];
    loop {
        if out.len() >= limit {
            return out;
        }
        out.push(digits.iter().map(|&d| samples[d].clone()).collect());
        let mut pos = f;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < samples.len() {
                break;
            }
            digits[pos] = 0;
        }
    }
}

/// Runs [`search_structures`] on rank-one extensions of the diagonal nilsoliton
/// metrics of `base` over every sign pattern and sampled parameters.
pub fn search_family(
    base: &LieAlgebra,
    lambda: &Scalar,
    samples: &[Scalar],
    per_pattern: usize,
) -> Result<FamilySearch> {
    let problem = diagonal_soliton_solve(base, lambda, None)?;
    let family = problem.solutions.family().ok_or(Error::InvalidParameter(
        "no rational diagonal nilsoliton metric",
    ))?;
    let grid = parameter_grid(samples, family.free_parameters(), per_pattern);
    let mut instances = Vec::new();
    for signs in &family.sign_patterns {
        for params in &grid {
            let Ok(entries) = family.instantiate(params, signs) else {
                continue;
            };
            let m = MetricLieAlgebra::diagonal(base.clone(), &entries)?;
            let d = &m.ricci_operator() - &Matrix::scalar_identity(m.dim(), lambda);
            if !m.algebra.is_derivation(&d) {
                return Err(Error::NotNilsoliton);
            }
            let sol = SolitonDecomposition::new(lambda.clone(), d);
            let (extension, _) = rank_one_extend(&m, &sol)?;
            let search = search_structures(&extension);
            instances.push(FamilyInstance {
                params: params.clone(),
                signs: signs.clone(),
                extension,
                search,
            });
        }
    }
    Ok(FamilySearch { instances })
}
