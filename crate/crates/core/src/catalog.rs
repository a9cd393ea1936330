// SPDX-License-Identifier: Apache-2.0

//! Built-in algebras, metrics and forms.
//!
//! Keys: the nilpotent algebras of dimension ≤ 5 (`31:1`, `5321:2`, …), the
//! seven-dimensional algebras with `Der ⊂ sl` (`123457E`, …), rank-one
//! extensions `<key>+N`, and the named examples `figure1`, `ex4.2`, `aff`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::curvature::MetricLieAlgebra;
use crate::exactla::{self, frac, int, Matrix, Scalar};
use crate::liealg::LieAlgebra;
use crate::notation::{parse_algebra, parse_two_form};
use crate::soliton::SolitonDecomposition;
use crate::structures::{StructureKind, TwoForm};
use crate::{Error, Result};

/// A nilpotent algebra of dimension ≤ 5 with its printed Nikolayevsky derivation
/// `(numerators) / denominator`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SmallNilpotent {
    pub key: &'static str,
    pub notation: &'static str,
    pub nikolayevsky: &'static [i64],
    pub denominator: i64,
}

impl SmallNilpotent {
    pub fn algebra(&self) -> LieAlgebra {
        parse_algebra(self.notation)
            .expect("catalog entry parses")
            .with_name(self.key)
    }

    pub fn nikolayevsky_diagonal(&self) -> Vec<Scalar> {
        self.nikolayevsky
            .iter()
            .map(|&n| frac(n, self.denominator))
            .collect()
    }
}

pub const SMALL_NILPOTENT: [SmallNilpotent; 16] = [
    SmallNilpotent {
        key: "1:1",
        notation: "0",
        nikolayevsky: &[1],
        denominator: 1,
    },
    SmallNilpotent {
        key: "2:1",
        notation: "0,0",
        nikolayevsky: &[1, 1],
        denominator: 1,
    },
    SmallNilpotent {
        key: "31:1",
        notation: "0,0,e^{12}",
        nikolayevsky: &[2, 2, 4],
        denominator: 3,
    },
    SmallNilpotent {
        key: "3:1",
        notation: "0,0,0",
        nikolayevsky: &[1, 1, 1],
        denominator: 1,
    },
    SmallNilpotent {
        key: "421:1",
        notation: "0,0,e^{12},e^{13}",
        nikolayevsky: &[1, 2, 3, 4],
        denominator: 3,
    },
    SmallNilpotent {
        key: "41:1",
        notation: "0,0,0,e^{12}",
        nikolayevsky: &[2, 2, 3, 4],
        denominator: 3,
    },
    SmallNilpotent {
        key: "4:1",
        notation: "0,0,0,0",
        nikolayevsky: &[1, 1, 1, 1],
        denominator: 1,
    },
    SmallNilpotent {
        key: "5321:1",
        notation: "0,0,e^{12},e^{13},e^{14}",
        nikolayevsky: &[2, 9, 11, 13, 15],
        denominator: 12,
    },
    SmallNilpotent {
        key: "5321:2",
        notation: "0,0,e^{12},e^{13},e^{14}+e^{23}",
        nikolayevsky: &[3, 6, 9, 12, 15],
        denominator: 11,
    },
    SmallNilpotent {
        key: "532:1",
        notation: "0,0,e^{12},e^{13},e^{23}",
        nikolayevsky: &[5, 5, 10, 15, 15],
        denominator: 12,
    },
    SmallNilpotent {
        key: "521:1",
        notation: "0,0,0,e^{12},e^{14}",
        nikolayevsky: &[1, 2, 3, 3, 4],
        denominator: 3,
    },
    SmallNilpotent {
        key: "521:2",
        notation: "0,0,0,e^{12},e^{24}+e^{13}",
        nikolayevsky: &[4, 3, 6, 7, 10],
        denominator: 7,
    },
    SmallNilpotent {
        key: "52:1",
        notation: "0,0,0,e^{12},e^{13}",
        nikolayevsky: &[2, 3, 3, 5, 5],
        denominator: 4,
    },
    SmallNilpotent {
        key: "51:1",
        notation: "0,0,0,0,e^{12}",
        nikolayevsky: &[2, 2, 3, 3, 4],
        denominator: 3,
    },
    SmallNilpotent {
        key: "51:2",
        notation: "0,0,0,0,e^{12}+e^{34}",
        nikolayevsky: &[3, 3, 3, 3, 6],
        denominator: 4,
    },
    SmallNilpotent {
        key: "5:1",
        notation: "0,0,0,0,0",
        nikolayevsky: &[1, 1, 1, 1, 1],
        denominator: 1,
    },
];

pub fn small_nilpotent(key: &str) -> Option<&'static SmallNilpotent> {
    SMALL_NILPOTENT.iter().find(|e| e.key == key)
}

/// A seven-dimensional nilpotent algebra with `Der ⊂ sl`. Entries with a real
/// parameter `λ` carry it as `λ·e^{25}` in `de^7`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TracelessEntry {
    pub key: &'static str,
    /// Structure equations with the `λ` term removed.
    pub notation: &'static str,
    pub parametric: bool,
    /// Admissible parameters are `λ ≥ 0`.
    pub nonnegative: bool,
}

impl TracelessEntry {
    pub fn algebra(&self, lambda: &Scalar) -> Result<LieAlgebra> {
        let mut g = parse_algebra(self.notation)?;
        if self.parametric && !lambda.is_zero() {
            if self.nonnegative && lambda < &Scalar::zero() {
                return Err(Error::InvalidParameter("λ must be nonnegative"));
            }
            let mut v = g.bracket_basis(1, 4).to_vec();
            v[6] -= lambda;
            g.set_bracket(1, 4, &v);
            g.validate()?;
        }
        Ok(g.with_name(self.key))
    }

    /// The algebra at the default parameter (`λ = 1`, or `λ = 0` when `λ ≥ 0` is required).
    pub fn default_algebra(&self) -> LieAlgebra {
        let lambda = if self.nonnegative { int(0) } else { int(1) };
        self.algebra(&lambda).expect("catalog entry parses")
    }
}

pub const TRACELESS_7: [TracelessEntry; 11] = [
    TracelessEntry {
        key: "123457E",
        notation: "0,0,e^{12},e^{13},e^{14},e^{23}+e^{15},e^{23}+e^{24}+e^{16}",
        parametric: false,
        nonnegative: false,
    },
    TracelessEntry {
        key: "123457H",
        notation: "0,0,e^{12},e^{13},e^{14}+e^{23},e^{15}+e^{24},e^{25}+e^{23}+e^{16}",
        parametric: false,
        nonnegative: false,
    },
    TracelessEntry {
        key: "123457H_1",
        notation: "0,0,e^{12},e^{13},e^{14}+e^{23},e^{15}+e^{24},-e^{16}-e^{25}+e^{23}",
        parametric: false,
        nonnegative: false,
    },
    TracelessEntry {
        key: "13457I",
        notation: "0,0,e^{12},e^{13},e^{14},e^{23},e^{25}+e^{26}-e^{34}+e^{15}",
        parametric: false,
        nonnegative: false,
    },
    TracelessEntry {
        key: "12457J",
        notation: "0,0,e^{12},e^{13},e^{23},e^{24}+e^{15},e^{34}+e^{25}+e^{16}+e^{14}",
        parametric: false,
        nonnegative: false,
    },
    TracelessEntry {
        key: "12457J_1",
        notation: "0,0,e^{12},e^{13},e^{23},e^{24}+e^{15},e^{34}-e^{25}+e^{16}+e^{14}",
        parametric: false,
        nonnegative: false,
    },
    TracelessEntry {
        key: "12457N",
        notation: "0,0,e^{12},e^{13},e^{23},e^{24}+e^{15},e^{26}+e^{34}-e^{35}+e^{16}+e^{14}",
        parametric: true,
        nonnegative: false,
    },
    TracelessEntry {
        key: "12457N_1",
        notation: "0,0,e^{12},e^{13},e^{23},-e^{25}-e^{14},-e^{35}+e^{25}+e^{16}",
        parametric: false,
        nonnegative: false,
    },
    TracelessEntry {
        key: "12457N_2",
        notation: "0,0,e^{12},e^{13},e^{23},-e^{14}-e^{25},e^{15}-e^{35}+e^{16}+e^{24}",
        parametric: true,
        nonnegative: true,
    },
    TracelessEntry {
        key: "123457F",
        notation: "0,0,e^{12},e^{13},e^{14},e^{15}+e^{23},e^{16}-e^{34}+e^{24}+e^{25}",
        parametric: false,
        nonnegative: false,
    },
    TracelessEntry {
        key: "12457G",
        notation: "0,0,e^{12},e^{13},0,e^{25}+e^{14}+e^{23},-e^{34}+e^{26}+e^{15}",
        parametric: false,
        nonnegative: false,
    },
];

pub fn traceless_7(key: &str) -> Option<&'static TracelessEntry> {
    TRACELESS_7.iter().find(|e| e.key == key)
}

pub const FIGURE1: &str = "0,0,0,0,e^{13}+e^{24},e^{12}+e^{34}";

pub const EX42: &str =
    "0,0,0,0,e^{12}+e^{34},e^{14}-e^{23},e^{16}-e^{24}+e^{35},-e^{13}+e^{26}+e^{45}";

pub const AFF: &str = "e^{12},0";

/// The two diagonal Einstein metrics on the eight-dimensional example, `s = ±1`.
pub fn ex42_metric(s: i64) -> Result<MetricLieAlgebra> {
    let g = parse_algebra(EX42)?.with_name("ex4.2");
    let s = int(s);
    let entries = [
        int(1),
        int(1),
        s.clone(),
        s.clone(),
        frac(-7, 3),
        -&s * frac(7, 3),
        &s * frac(98, 15),
        &s * frac(98, 15),
    ];
    MetricLieAlgebra::diagonal(g, &entries)
}

/// `aff(ℝ)` with `g_± = diag(±1, 1)`.
pub fn aff_metric(s: i64) -> Result<MetricLieAlgebra> {
    MetricLieAlgebra::diagonal(parse_algebra(AFF)?.with_name("aff"), &[int(s), int(1)])
}

/// Symplectic rank-one extensions with their closed nondegenerate forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymplecticExtension {
    pub base: &'static str,
    pub notation: &'static str,
    pub omega: &'static str,
}

impl SymplecticExtension {
    pub fn algebra(&self) -> LieAlgebra {
        parse_algebra(self.notation)
            .expect("catalog entry parses")
            .with_name(format!("{}+N", self.base))
    }

    pub fn omega(&self) -> TwoForm {
        let dim = self.notation.split(',').count();
        parse_two_form(self.omega, dim).expect("catalog form parses")
    }
}

pub const SYMPLECTIC_EXTENSIONS: [SymplecticExtension; 5] = [
    SymplecticExtension {
        base: "1:1",
        notation: "e^{12},0",
        omega: "e^{12}",
    },
    SymplecticExtension {
        base: "31:1",
        notation: "2/3e^{14},2/3e^{24},4/3e^{34}+e^{12},0",
        omega: "e^{12}+4/3e^{34}",
    },
    SymplecticExtension {
        base: "5321:2",
        notation:
            "3/11e^{16},6/11e^{26},9/11e^{36}+e^{12},12/11e^{46}+e^{13},15/11e^{56}+e^{14}+e^{23},0",
        omega: "e^{14}+e^{23}+15/11e^{56}",
    },
    SymplecticExtension {
        base: "521:2",
        notation: "4/7e^{16},3/7e^{26},6/7e^{36},e^{46}+e^{12},10/7e^{56}+e^{24}+e^{13},0",
        omega: "e^{13}+e^{24}+10/7e^{56}",
    },
    SymplecticExtension {
        base: "51:2",
        notation: "3/4e^{16},3/4e^{26},3/4e^{36},3/4e^{46},3/2e^{56}+e^{12}+e^{34},0",
        omega: "e^{12}+e^{34}+3/2e^{56}",
    },
];

/// `g ⋊ ℝN` for `N` the printed Nikolayevsky derivation of a small nilpotent algebra.
pub fn nikolayevsky_extension(key: &str) -> Result<LieAlgebra> {
    let entry = small_nilpotent(key).ok_or(Error::InvalidParameter("unknown catalog key"))?;
    let n = Matrix::diagonal(&entry.nikolayevsky_diagonal());
    Ok(entry
        .algebra()
        .semidirect_extend(&[n])?
        .with_name(format!("{key}+N")))
}

/// Resolves a catalog key.
pub fn lookup(key: &str) -> Option<LieAlgebra> {
    if let Some(base) = key.strip_suffix("+N") {
        return nikolayevsky_extension(base).ok();
    }
    if let Some(e) = small_nilpotent(key) {
        return Some(e.algebra());
    }
    if let Some(e) = traceless_7(key) {
        return Some(e.default_algebra());
    }
    let text = match key {
        "figure1" => FIGURE1,
        "ex4.2" => EX42,
        "aff" => AFF,
        _ => return None,
    };
    parse_algebra(text).ok().map(|g| g.with_name(key))
}

/// Every key accepted by [`lookup`].
pub fn keys() -> Vec<String> {
    let mut out: Vec<String> = SMALL_NILPOTENT
        .iter()
        .map(|e| String::from(e.key))
        .collect();
    out.extend(SMALL_NILPOTENT.iter().map(|e| format!("{}+N", e.key)));
    out.extend(TRACELESS_7.iter().map(|e| String::from(e.key)));
    out.extend(["figure1", "ex4.2", "aff"].map(String::from));
    out
}

fn eps(kind: StructureKind) -> Scalar {
    int(kind.epsilon())
}

/// Rank-one extension of the Heisenberg algebra with metric
/// `(g₁, −εy²/g₁, −εy²/3, 16/3)` and `ω = y·e^{12} + 4y/3·e^{34}`.
pub fn ex61(kind: StructureKind, g1: &Scalar, y: &Scalar) -> Result<(MetricLieAlgebra, TwoForm)> {
    if g1.is_zero() || y.is_zero() {
        return Err(Error::InvalidParameter("g₁ and y must be nonzero"));
    }
    let g = SYMPLECTIC_EXTENSIONS[1].algebra();
    let y2 = y * y;
    let e = eps(kind);
    let metric = [
        g1.clone(),
        -(&e * &y2) / g1,
        -(&e * &y2) / int(3),
        frac(16, 3),
    ];
    let w = TwoForm::from_terms(4, &[(0, 1, y.clone()), (2, 3, y * frac(4, 3))]);
    Ok((MetricLieAlgebra::diagonal(g, &metric)?, w))
}

/// Rank-one extension of `51:2` with metric
/// `(g₁, −εy²/g₁, g₃, −εy²/g₃, −εy²/4, 9)` and `ω = y(e^{12} + e^{34} + 3/2·e^{56})`.
pub fn ex62(
    kind: StructureKind,
    g1: &Scalar,
    g3: &Scalar,
    y: &Scalar,
) -> Result<(MetricLieAlgebra, TwoForm)> {
    if g1.is_zero() || g3.is_zero() || y.is_zero() {
        return Err(Error::InvalidParameter("g₁, g₃ and y must be nonzero"));
    }
    let g = SYMPLECTIC_EXTENSIONS[4].algebra();
    let y2 = y * y;
    let e = eps(kind);
    let ey2 = -(&e * &y2);
    let metric = [
        g1.clone(),
        &ey2 / g1,
        g3.clone(),
        &ey2 / g3,
        &ey2 / int(4),
        int(9),
    ];
    let w = TwoForm::from_terms(
        6,
        &[(0, 1, y.clone()), (2, 3, y.clone()), (4, 5, y * frac(3, 2))],
    );
    Ok((MetricLieAlgebra::diagonal(g, &metric)?, w))
}

/// Non-diagonal metric on `521:2` and its printed extension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ex71 {
    pub base: MetricLieAlgebra,
    pub extension: MetricLieAlgebra,
    pub omega: TwoForm,
}

pub fn ex71(g1: &Scalar) -> Result<Ex71> {
    if g1.is_zero() {
        return Err(Error::InvalidParameter("g₁ must be nonzero"));
    }
    let mut metric = Matrix::zeros(5, 5);
    metric[(0, 2)] = g1.clone();
    metric[(2, 0)] = g1.clone();
    metric[(1, 3)] = -g1.clone();
    metric[(3, 1)] = -g1.clone();
    metric[(4, 4)] = -(g1 * g1) / int(4);
    let base = MetricLieAlgebra::new(
        small_nilpotent("521:2").expect("key").algebra(),
        metric.clone(),
    )?;
    let ext_metric = metric.direct_sum(&Matrix::diagonal(&[frac(400, 49)]));
    let extension = MetricLieAlgebra::new(SYMPLECTIC_EXTENSIONS[3].algebra(), ext_metric)?;
    let omega = TwoForm::from_terms(
        6,
        &[
            (0, 2, g1.clone()),
            (1, 3, g1.clone()),
            (4, 5, g1 * frac(10, 7)),
        ],
    );
    Ok(Ex71 {
        base,
        extension,
        omega,
    })
}

/// Printed data of a rank-two extension: base nilsoliton, the abelian family of
/// derivations, and the printed extension algebra, metric and form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankTwoExample {
    pub base: MetricLieAlgebra,
    pub soliton: SolitonDecomposition,
    pub derivations: Vec<Matrix>,
    pub algebra: LieAlgebra,
    pub metric: Matrix,
    pub omega: TwoForm,
}

/// `ℝ²` extended by `id` and a rotation; `¼(∓e¹² ± e²²) + 4(e³² − e⁴²)`.
pub fn ex72(kind: StructureKind) -> Result<RankTwoExample> {
    let s = match kind {
        StructureKind::PseudoKahler => int(1),
        StructureKind::ParaKahler => int(-1),
    };
    let q = frac(1, 4);
    let base_metric = vec![-(&s * &q), &s * &q];
    let base = MetricLieAlgebra::diagonal(LieAlgebra::abelian(2), &base_metric)?;
    let rotation = Matrix::from_i64_rows(&[&[0, 1], &[-1, 0]]);
    let soliton = SolitonDecomposition::new(frac(-1, 2), Matrix::scalar_identity(2, &frac(1, 2)));
    let mut metric_diag = base_metric;
    metric_diag.extend([int(4), int(-4)]);
    Ok(RankTwoExample {
        base,
        soliton,
        derivations: vec![Matrix::identity(2), rotation],
        algebra: parse_algebra("e^{13}+e^{24},e^{23}-e^{14},0,0")?,
        metric: Matrix::diagonal(&metric_diag),
        omega: parse_two_form("-e^{14}+e^{23}", 4)?,
    })
}

/// `421:1` extended by its Nikolayevsky derivation and `D′ = diag(1, −4/3, −1/3, 2/3)`.
pub fn ex73(kind: StructureKind, g1: &Scalar) -> Result<RankTwoExample> {
    if g1.is_zero() {
        return Err(Error::InvalidParameter("g₁ must be nonzero"));
    }
    let s = match kind {
        StructureKind::PseudoKahler => int(1),
        StructureKind::ParaKahler => int(-1),
    };
    let base_metric = vec![
        &s * int(3) / g1,
        &s * int(3) * g1 * g1,
        int(3) * g1,
        &s * int(3),
    ];
    let entry = small_nilpotent("421:1").expect("key");
    let base = MetricLieAlgebra::diagonal(entry.algebra(), &base_metric)?;
    let n = Matrix::diagonal(&entry.nikolayevsky_diagonal());
    let d_prime = Matrix::diagonal(&[int(1), frac(-4, 3), frac(-1, 3), frac(2, 3)]);
    let soliton = SolitonDecomposition::new(frac(-1, 2), n.scale(&frac(1, 2)));
    let mut metric_diag = base_metric;
    metric_diag.extend([frac(20, 3), frac(20, 3)]);
    let two_g1 = int(2) * g1;
    let four_g1 = int(4) * g1;
    let omega = TwoForm::from_terms(
        6,
        &[
            (0, 2, int(3)),
            (1, 4, &s * &two_g1),
            (1, 5, -(&s * &four_g1)),
            (3, 4, int(4)),
            (3, 5, int(2)),
        ],
    );
    Ok(RankTwoExample {
        base,
        soliton,
        derivations: vec![n, d_prime],
        algebra: parse_algebra("1/3e^{15}+e^{16},2/3e^{25}-4/3e^{26},e^{35}-1/3e^{36}+e^{12},4/3e^{45}+2/3e^{46}+e^{13},0,0")?,
        metric: Matrix::diagonal(&metric_diag),
        omega,
    })
}

/// Sample points used for the worked examples.
pub fn ex61_samples() -> Vec<(Scalar, Scalar)> {
    vec![(int(1), int(1)), (int(2), int(3)), (int(-1), int(2))]
}

pub fn ex62_samples() -> Vec<(Scalar, Scalar, Scalar)> {
    vec![
        (int(1), int(1), int(1)),
        (int(2), int(-3), int(2)),
        (frac(1, 2), int(3), frac(-3, 2)),
    ]
}

/// `d e^k` as 2-forms, for `d∘d = 0` checks.
pub fn structure_forms(g: &LieAlgebra) -> Vec<TwoForm> {
    let n = g.dim();
    (0..n)
        .map(|k| {
            let mut alpha = vec![Scalar::zero(); n];
            alpha[k] = exactla::one();
            crate::structures::d_one_form(g, &alpha)
        })
        .collect()
}
