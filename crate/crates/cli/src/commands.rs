// SPDX-License-Identifier: Apache-2.0

//! Subcommands. Each produces a [`Report`]; the binary decides how to print it.

use std::fs;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use einkahler_core::catalog;
use einkahler_core::exactla::{self, Matrix, MultiplicativeOutcome, Scalar};
use einkahler_core::extension::{rank_one_extend, verify_correspondence, verify_pseudo_iwasawa};
use einkahler_core::nice::{self, DiagonalMetric};
use einkahler_core::notation::{format_algebra, parse_two_form};
use einkahler_core::soliton::{
    diagonal_soliton_solve, soliton_decompose, verify_nilsoliton, SolitonDecomposition,
};
use einkahler_core::structures::{
    self, certify, closed_two_forms, generalized_heisenberg, heisenberg_structure,
    nondegenerate_search, parallel_two_forms, parameter_grid, search_family, search_structures,
    FormSpace, Nondegeneracy, SearchOutcome, StructureKind, StructureSearch, TwoForm,
};
use einkahler_core::{LieAlgebra, MetricLieAlgebra};

use crate::certificate::{self, CertificateRecord};
use crate::report::{q, qmat, qvec, signs as jsigns, Report};
use crate::{input, suite, CliError};

#[derive(Debug, Parser)]
#[command(
    name = "einkahler",
    version,
    about = "Exact Einstein pseudo-Kähler and para-Kähler metrics on solvable Lie algebras"
)]
pub struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Structural flags, derivations and the nice-basis check.
    Info {
        /// Catalog key, `@file` or structure equations such as "0,0,e^{12}".
        algebra: String,
    },
    /// Diagonal nilsoliton metrics with a given constant.
    Nilsoliton {
        algebra: String,
        #[arg(long, default_value = "-1/2", allow_hyphen_values = true)]
        lambda: String,
        /// Coefficients along the basis of ker M_Δᵀ.
        #[arg(long, allow_hyphen_values = true)]
        kernel: Option<String>,
        #[arg(long, default_value = "all", allow_hyphen_values = true)]
        signs: String,
        /// Parameter points `a,b;c,d` (defaults to all ones).
        #[arg(long, allow_hyphen_values = true)]
        params: Option<String>,
    },
    /// Rank-one pseudo-Iwasawa extension of a nilsoliton.
    Extend {
        algebra: String,
        /// Diagonal `a,b,c` or full `a,b;c,d` metric.
        #[arg(long, allow_hyphen_values = true)]
        metric: String,
        /// Soliton constant; computed from the metric when omitted.
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
    },
    /// Levi-Civita connection, Ricci and scalar curvature.
    Curvature {
        algebra: String,
        #[arg(long, allow_hyphen_values = true)]
        metric: String,
    },
    /// Closed (and, with a metric, parallel) 2-forms.
    Forms {
        algebra: String,
        #[arg(long, allow_hyphen_values = true)]
        metric: Option<String>,
    },
    /// Searches for pseudo-Kähler and para-Kähler structures.
    ///
    /// With `--metric` the given metric Lie algebra is searched; otherwise the
    /// algebra is taken as a nilpotent base and every rank-one extension of
    /// its diagonal nilsoliton family is searched.
    Search {
        algebra: String,
        #[arg(long, allow_hyphen_values = true)]
        metric: Option<String>,
        #[arg(long, default_value = "-1/2", allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, default_value = "all", allow_hyphen_values = true)]
        signs: String,
        /// Sample values for free parameters, `1,2,-1`.
        #[arg(long, allow_hyphen_values = true)]
        params: Option<String>,
        /// Parameter points per sign pattern.
        #[arg(long, default_value_t = 25)]
        limit: usize,
        #[arg(long)]
        structure: Option<String>,
    },
    /// Builds and checks a certificate for a given form.
    Certify {
        algebra: String,
        #[arg(long, allow_hyphen_values = true)]
        metric: String,
        #[arg(long, allow_hyphen_values = true)]
        omega: String,
        #[arg(long)]
        structure: String,
        /// Write the certificate JSON here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-verifies a certificate file.
    Verify {
        #[arg(long)]
        certificate: PathBuf,
    },
    /// The rank-one Heisenberg family `h_{2n+1} ⋊ ℝN`.
    Heisenberg {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        structure: String,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        alpha: String,
        /// `g_1, g_3, …` (defaults to all ones).
        #[arg(long, allow_hyphen_values = true)]
        g: Option<String>,
    },
    /// Lists the built-in algebras.
    Catalog,
    /// Runs every acceptance criterion.
    PaperSuite,
}

impl Command {
    pub fn run(&self) -> Result<Report, CliError> {
        match self {
            Command::Info { algebra } => info(&input::algebra(algebra)?),
            Command::Nilsoliton {
                algebra,
                lambda,
                kernel,
                signs,
                params,
            } => nilsoliton(
                &input::algebra(algebra)?,
                &input::scalar(lambda)?,
                kernel
                    .as_deref()
                    .map(input::scalars)
                    .transpose()?
                    .as_deref(),
                input::signs(signs)?,
                params.as_deref().map(points).transpose()?,
            ),
            Command::Extend {
                algebra,
                metric,
                lambda,
            } => {
                let m = metric_algebra(algebra, metric)?;
                extend(&m, lambda.as_deref().map(input::scalar).transpose()?)
            }
            Command::Curvature { algebra, metric } => curvature(&metric_algebra(algebra, metric)?),
            Command::Forms { algebra, metric } => {
                let g = input::algebra(algebra)?;
                let m = match metric {
                    Some(text) => {
                        let metric = input::metric(text, g.dim())?;
                        Some(MetricLieAlgebra::new(g.clone(), metric)?)
                    }
                    None => None,
                };
                Ok(forms(&g, m.as_ref()))
            }
            Command::Search {
                algebra,
                metric,
                lambda,
                signs,
                params,
                limit,
                structure,
            } => {
                let kind = structure
                    .as_deref()
                    .map(structure_kind)
                    .transpose()?
                    .flatten();
                match metric {
                    Some(text) => Ok(search_one(&metric_algebra(algebra, text)?, kind)),
                    None => {
                        let samples = match params {
                            Some(p) => input::scalars(p)?,
                            None => structures::default_samples(),
                        };
                        search(
                            &input::algebra(algebra)?,
                            &input::scalar(lambda)?,
                            &samples,
                            *limit,
                            input::signs(signs)?,
                            kind,
                        )
                    }
                }
            }
            Command::Certify {
                algebra,
                metric,
                omega,
                structure,
                out,
            } => {
                let m = metric_algebra(algebra, metric)?;
                let w = parse_two_form(omega, m.dim())?;
                let (report, record) = certify_form(&m, &w, structure)?;
                if let (Some(path), Some(record)) = (out, record) {
                    fs::write(path, record.to_json())
                        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
                }
                Ok(report)
            }
            Command::Verify { certificate } => {
                let text = fs::read_to_string(certificate)
                    .map_err(|e| CliError::Input(format!("{}: {e}", certificate.display())))?;
                verify(&CertificateRecord::from_json(&text)?)
            }
            Command::Heisenberg {
                n,
                structure,
                alpha,
                g,
            } => {
                let kind = structure_kind(structure)?.ok_or_else(|| {
                    CliError::Input("heisenberg needs pseudo-kahler or para-kahler".into())
                })?;
                let g_odd = match g {
                    Some(text) => input::scalars(text)?,
                    None => vec![exactla::one(); *n],
                };
                heisenberg(*n, kind, &input::scalar(alpha)?, &g_odd)
            }
            Command::Catalog => Ok(catalog_listing()),
            Command::PaperSuite => Ok(suite::report(&suite::run())),
        }
    }
}

/// `a,b;c,d` into points.
fn points(text: &str) -> Result<Vec<Vec<Scalar>>, CliError> {
    text.split(';').map(input::scalars).collect()
}

fn metric_algebra(algebra: &str, metric: &str) -> Result<MetricLieAlgebra, CliError> {
    let g = input::algebra(algebra)?;
    let metric = input::metric(metric, g.dim())?;
    Ok(MetricLieAlgebra::new(g, metric)?)
}

/// `None` stands for `symplectic`.
fn structure_kind(text: &str) -> Result<Option<StructureKind>, CliError> {
    if text == "symplectic" {
        return Ok(None);
    }
    StructureKind::from_key(text).map(Some).ok_or_else(|| {
        CliError::Input(format!(
            "unknown structure '{text}' (pseudo-kahler, para-kahler, symplectic)"
        ))
    })
}

fn forms_json(fs: &FormSpace) -> Value {
    Value::Array(fs.basis.iter().map(|b| json!(b.to_string())).collect())
}

fn nondegeneracy_json(n: &Nondegeneracy) -> Value {
    match n {
        Nondegeneracy::Found(w) => json!({ "status": "found", "form": w.to_string() }),
        Nondegeneracy::NoneExists => json!({ "status": "none" }),
        Nondegeneracy::Undecided => json!({ "status": "undecided" }),
    }
}

pub fn info(g: &LieAlgebra) -> Result<Report, CliError> {
    let mut r = Report::new("info", Some(g));
    let f = g.flags();
    let ders = g.derivations();
    r.result(json!({
        "dim": g.dim(),
        "name": g.name(),
        "nilpotent": f.nilpotent,
        "step": f.step,
        "solvable": f.solvable,
        "depth": f.depth,
        "unimodular": f.unimodular,
        "rank": f.rank,
        "lower_central_dims": f.lower_central_dims,
        "derived_dims": f.derived_dims,
        "derivations_dim": ders.dim(),
        "derivations_traceless": g.derivations_traceless(),
    }));
    match nice::nice_structure(g) {
        Ok(ns) => {
            let arrows: Vec<String> = ns
                .arrows
                .iter()
                .map(|a| {
                    format!(
                        "[e{},e{}] = {}e{}",
                        a.i + 1,
                        a.j + 1,
                        exactla::format_scalar(&a.coeff),
                        a.k + 1
                    )
                })
                .collect();
            let nik = if f.nilpotent {
                nice::nikolayevsky(g, &ns).ok().map(|n| qvec(&n))
            } else {
                None
            };
            r.result(json!({ "nice": true, "arrows": arrows, "nikolayevsky": nik }));
        }
        Err(v) => r.result(json!({ "nice": false, "violation": v.to_string() })),
    }
    r.check("jacobi", g.jacobi_check().is_ok(), "");
    Ok(r)
}

pub fn nilsoliton(
    g: &LieAlgebra,
    lambda: &Scalar,
    kernel: Option<&[Scalar]>,
    signs: Option<Vec<i8>>,
    params: Option<Vec<Vec<Scalar>>>,
) -> Result<Report, CliError> {
    let p = diagonal_soliton_solve(g, lambda, kernel)?;
    let mut r = Report::new("nilsoliton", Some(g));
    let kernel_json: Vec<Value> = p.kernel.iter().map(|k| qvec(k)).collect();
    r.result(json!({
        "lambda": q(&p.lambda),
        "b": qvec(&p.b),
        "kernel": kernel_json,
        "x": qvec(&p.x),
        "c": qvec(&p.c),
        "targets": qvec(&p.targets),
        "nikolayevsky": qvec(&p.nikolayevsky),
    }));
    let family = match &p.solutions {
        MultiplicativeOutcome::Family(f) => f,
        MultiplicativeOutcome::Irrational(i) => {
            r.result(json!({ "outcome": "irrational", "obstruction": i.obstruction }));
            r.check("rational_family", false, i.obstruction.clone());
            return Ok(r);
        }
        MultiplicativeOutcome::Infeasible(why) => {
            r.result(json!({ "outcome": "infeasible", "reason": why }));
            r.check("rational_family", false, why.clone());
            return Ok(r);
        }
    };
    let patterns: Vec<Value> = family.sign_patterns.iter().map(|s| jsigns(s)).collect();
    r.result(json!({
        "outcome": "family",
        "free_parameters": family.free_parameters(),
        "metric": family.describe(),
        "sign_patterns": patterns,
    }));
    r.check("rational_family", true, "");

    let chosen: Vec<Vec<i8>> = match signs {
        None => family.sign_patterns.clone(),
        Some(s) => {
            if !family.sign_patterns.contains(&s) {
                r.check("sign_pattern", false, format!("{s:?} is not admissible"));
                return Ok(r);
            }
            vec![s]
        }
    };
    let points =
        params.unwrap_or_else(|| parameter_grid(&[exactla::one()], family.free_parameters(), 1));
    let expected = p.expected_ricci();
    let mut instances = Vec::new();
    for s in &chosen {
        for t in &points {
            let entries = p.metric(t, s)?;
            let m = MetricLieAlgebra::diagonal(g.clone(), &entries)?;
            let d = &expected - &Matrix::scalar_identity(g.dim(), lambda);
            let report = verify_nilsoliton(&m, &SolitonDecomposition::new(lambda.clone(), d));
            let tag = format!(
                "{}@{}",
                sign_string(s),
                t.iter()
                    .map(exactla::format_scalar)
                    .collect::<Vec<_>>()
                    .join(",")
            );
            r.ledger(&tag, &report.ledger);
            instances.push(json!({
                "signs": jsigns(s),
                "params": qvec(t),
                "metric": qvec(&entries),
                "signature": exactla::signature(&m.metric).map(|x| x.to_string()).unwrap_or_default(),
                "type": report.nil_type.to_string(),
            }));
        }
    }
    r.result(json!({ "instances": instances }));
    Ok(r)
}

fn sign_string(s: &[i8]) -> String {
    s.iter().map(|&x| if x < 0 { '-' } else { '+' }).collect()
}

pub fn extend(m: &MetricLieAlgebra, lambda: Option<Scalar>) -> Result<Report, CliError> {
    let mut r = Report::new("extend", Some(&m.algebra));
    let sol = match lambda {
        Some(l) => {
            let d = &m.ricci_operator() - &Matrix::scalar_identity(m.dim(), &l);
            SolitonDecomposition::new(l, d)
        }
        None => soliton_decompose(m),
    };
    let check = verify_nilsoliton(m, &sol);
    r.ledger("nilsoliton", &check.ledger);
    r.result(json!({
        "lambda": q(&sol.lambda),
        "d": qmat(&sol.d),
        "type": sol.nil_type.to_string(),
        "semisimple": check.semisimple,
    }));
    if !check.ledger.all_passed() {
        return Ok(r);
    }
    let (ext, sd) = rank_one_extend(m, &sol)?;
    r.result(json!({
        "extension": format_algebra(&ext.algebra),
        "metric": qmat(&ext.metric),
        "signature": exactla::signature(&ext.metric).map(|x| x.to_string()).unwrap_or_default(),
    }));
    r.ledger("pseudo_iwasawa", &verify_pseudo_iwasawa(&ext, &sd));
    let corr = verify_correspondence(&ext, &sd, &sol.lambda);
    r.result(json!({ "mean_curvature": qvec(&corr.mean_curvature), "branch": format!("{:?}", corr.branch) }));
    r.ledger("correspondence", &corr.ledger);
    Ok(r)
}

pub fn curvature(m: &MetricLieAlgebra) -> Result<Report, CliError> {
    let mut r = Report::new("curvature", Some(&m.algebra));
    let c = m.curvature();
    let sig = exactla::signature(&m.metric)?;
    r.result(json!({
        "signature": sig.to_string(),
        "ricci_tensor": qmat(&c.ricci_tensor),
        "ricci_operator": qmat(&c.ricci_operator),
        "scalar": q(&c.scalar),
        "mean_curvature": qvec(&c.mean_curvature),
        "einstein": m.is_einstein().as_ref().map(q),
    }));
    r.ledger("", &c.identity_checks(m));
    if m.metric.is_diagonal() {
        if let Ok(ns) = nice::nice_structure(&m.algebra) {
            let dm = DiagonalMetric::new(m.metric.diagonal_entries())?;
            let (fast, _) = nice::diagonal_ricci_fast(&ns, &dm)?;
            let agree = Matrix::diagonal(&fast) == c.ricci_operator;
            r.check(
                "fast_ricci",
                agree,
                if agree {
                    String::new()
                } else {
                    format!("fast: {:?}", fast)
                },
            );
        }
    }
    Ok(r)
}

pub fn forms(g: &LieAlgebra, m: Option<&MetricLieAlgebra>) -> Report {
    let mut r = Report::new("forms", Some(g));
    let closed = closed_two_forms(g);
    r.result(json!({
        "closed": forms_json(&closed),
        "closed_nondegenerate": nondegeneracy_json(&nondegenerate_search(&closed)),
    }));
    if let Some(m) = m {
        let parallel = parallel_two_forms(m);
        r.result(json!({
            "parallel": forms_json(&parallel),
            "parallel_nondegenerate": nondegeneracy_json(&nondegenerate_search(&parallel)),
        }));
    }
    let d2 = catalog::structure_forms(g)
        .iter()
        .all(|w| structures::d_two_form(g, w).is_zero());
    r.check("d_squared_zero", d2, "");
    r
}

fn search_json(
    s: &StructureSearch,
    kind: Option<StructureKind>,
    r: &mut Report,
    tag: &str,
) -> Value {
    let n = s.closed.dim;
    let outcome = match &s.outcome {
        SearchOutcome::Certificates(certs) => {
            let mut list = Vec::new();
            for c in certs.iter().filter(|c| kind.is_none_or(|k| c.kind == k)) {
                let name = if tag.is_empty() {
                    c.kind.key().to_string()
                } else {
                    format!("{tag}.{}", c.kind.key())
                };
                r.ledger(&name, &c.ledger);
                list.push(json!({
                    "kind": c.kind.key(),
                    "omega": c.omega.to_string(),
                    "endomorphism": qmat(&c.endo),
                    "lambda": c.lambda.as_ref().map(q),
                }));
            }
            json!({ "status": "certificates", "certificates": list })
        }
        SearchOutcome::Obstruction(o) => {
            let decisive: Vec<String> = o
                .decisive
                .iter()
                .map(|&(i, j)| format!("y{}=0", structures::pair_label(i, j, n)))
                .collect();
            json!({
                "status": "obstruction",
                "stage": o.stage.key(),
                "witness": o.witness(n),
                "decisive": decisive,
                "detail": o.detail,
            })
        }
        SearchOutcome::Residual(systems) => {
            let list: Vec<Value> = systems
                .iter()
                .filter(|sys| kind.is_none_or(|k| sys.kind == k))
                .map(|sys| {
                    let eqs: Vec<String> = sys.equations.iter().map(ToString::to_string).collect();
                    json!({ "kind": sys.kind.key(), "unknowns": sys.unknowns, "equations": eqs })
                })
                .collect();
            json!({ "status": "residual", "systems": list })
        }
    };
    json!({
        "warnings": s.warnings,
        "closed_dim": s.closed.len(),
        "parallel": forms_json(&s.parallel),
        "outcome": outcome,
    })
}

pub fn search_one(m: &MetricLieAlgebra, kind: Option<StructureKind>) -> Report {
    let mut r = Report::new("search", Some(&m.algebra));
    let s = search_structures(m);
    let v = search_json(&s, kind, &mut r, "");
    r.result(v);
    r
}

pub fn search(
    base: &LieAlgebra,
    lambda: &Scalar,
    samples: &[Scalar],
    limit: usize,
    signs: Option<Vec<i8>>,
    kind: Option<StructureKind>,
) -> Result<Report, CliError> {
    let mut r = Report::new("search", Some(base));
    let fam = search_family(base, lambda, samples, limit)?;
    let mut instances = Vec::new();
    for inst in fam
        .instances
        .iter()
        .filter(|i| signs.as_ref().is_none_or(|s| &i.signs == s))
    {
        let tag = format!(
            "{}@{}",
            sign_string(&inst.signs),
            inst.params
                .iter()
                .map(exactla::format_scalar)
                .collect::<Vec<_>>()
                .join(",")
        );
        let mut v = search_json(&inst.search, kind, &mut r, &tag);
        v["signs"] = jsigns(&inst.signs);
        v["params"] = qvec(&inst.params);
        v["extension"] = json!(format_algebra(&inst.extension.algebra));
        v["metric"] = qvec(&inst.extension.metric.diagonal_entries());
        instances.push(v);
    }
    r.result(json!({ "lambda": q(lambda), "instances": instances }));
    Ok(r)
}

/// Report plus the serializable certificate (absent for `symplectic`).
pub fn certify_form(
    m: &MetricLieAlgebra,
    w: &TwoForm,
    structure: &str,
) -> Result<(Report, Option<CertificateRecord>), CliError> {
    let mut r = Report::new("certify", Some(&m.algebra));
    match structure_kind(structure)? {
        None => {
            let closed = structures::d_two_form(&m.algebra, w).is_zero();
            r.check("closed", closed, "");
            r.check("nondegenerate", w.is_nondegenerate(), "");
            r.result(json!({ "structure": "symplectic", "omega": w.to_string() }));
            Ok((r, None))
        }
        Some(kind) => {
            let c = certify(m, w, kind);
            r.ledger("", &c.ledger);
            let record = CertificateRecord::from_certificate(&c);
            r.result(serde_json::to_value(&record).expect("record serializes"));
            Ok((r, Some(record)))
        }
    }
}

pub fn verify(record: &CertificateRecord) -> Result<Report, CliError> {
    let ledger = certificate::verify(record)?;
    let mut r = Report::new("verify", None);
    r.algebra = record.algebra.clone();
    r.result(json!({ "kind": record.kind, "omega": record.omega, "lambda": record.lambda }));
    r.ledger("", &ledger);
    Ok(r)
}

pub fn heisenberg(
    n: usize,
    kind: StructureKind,
    alpha: &Scalar,
    g_odd: &[Scalar],
) -> Result<Report, CliError> {
    let (m, c) = generalized_heisenberg(n, kind, alpha, g_odd)?;
    let mut r = Report::new("heisenberg", Some(&m.algebra));
    r.ledger("", &c.ledger);
    let closed_form = heisenberg_structure(n, kind, alpha, g_odd);
    r.check("closed_form_structure", closed_form == c.endo, "");
    r.result(json!({
        "n": n,
        "kind": kind.key(),
        "metric": qvec(&m.metric.diagonal_entries()),
        "signature": exactla::signature(&m.metric)?.to_string(),
        "omega": c.omega.to_string(),
        "endomorphism": qmat(&c.endo),
        "lambda": c.lambda.as_ref().map(q),
    }));
    Ok(r)
}

pub fn catalog_listing() -> Report {
    let mut r = Report::new("catalog", None);
    for key in catalog::keys() {
        let g = catalog::lookup(&key).expect("catalog keys resolve");
        r.result(json!({ "key": key, "dim": g.dim(), "notation": format_algebra(&g) }));
    }
    r
}
