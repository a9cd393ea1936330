// SPDX-License-Identifier: Apache-2.0

//! Nice bases: diagram, root matrix, diagonal Nikolayevsky derivation and
//! the diagonal Ricci formula.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::exactla::{self, IntMatrix, Matrix, Scalar};
use crate::liealg::LieAlgebra;
use crate::{Error, Result};

/// `[e_i, e_j] = coeff·e_k` (0-based indices, `i < j`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub coeff: Scalar,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NiceViolation {
    /// `[e_i, e_j]` has two nonzero components.
    SplitBracket {
        i: usize,
        j: usize,
        k1: usize,
        k2: usize,
    },
    /// Two pairs hitting `e_k` share exactly one index.
    OverlappingPairs {
        k: usize,
        first: (usize, usize),
        second: (usize, usize),
    },
}

impl fmt::Display for NiceViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NiceViolation::SplitBracket { i, j, k1, k2 } => write!(
                f,
                "[e_{}, e_{}] has components along e_{} and e_{}",
                i + 1,
                j + 1,
                k1 + 1,
                k2 + 1
            ),
            NiceViolation::OverlappingPairs { k, first, second } => write!(
                f,
                "pairs ({},{}) and ({},{}) both reach e_{} and share an index",
                first.0 + 1,
                first.1 + 1,
                second.0 + 1,
                second.1 + 1,
                k + 1
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NiceStructure {
    pub dim: usize,
    /// Sorted by `(k, i, j)`.
    pub arrows: Vec<Arrow>,
    /// One row per arrow: `+1` at `k`, `−1` at `i` and `j`.
    pub root_matrix: IntMatrix,
    pub c_vector: Vec<Scalar>,
}

impl NiceStructure {
    pub fn root_matrix_rational(&self) -> Matrix {
        self.root_matrix.to_rational()
    }
}

pub fn nice_structure(g: &LieAlgebra) -> core::result::Result<NiceStructure, NiceViolation> {
    let n = g.dim();
    let mut arrows = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let v = g.bracket_basis(i, j);
            let hits: Vec<usize> = (0..n).filter(|&k| !v[k].is_zero()).collect();
            if hits.len() > 1 {
                return Err(NiceViolation::SplitBracket {
                    i,
                    j,
                    k1: hits[0],
                    k2: hits[1],
                });
            }
            if let Some(&k) = hits.first() {
                arrows.push(Arrow {
                    i,
                    j,
                    k,
                    coeff: v[k].clone(),
                });
            }
        }
    }
    arrows.sort_by_key(|a| (a.k, a.i, a.j));
    for (p, a) in arrows.iter().enumerate() {
        for b in &arrows[p + 1..] {
            if b.k != a.k {
                break;
            }
            let shared = [a.i, a.j]
                .iter()
                .filter(|x| **x == b.i || **x == b.j)
                .count();
            if shared == 1 {
                return Err(NiceViolation::OverlappingPairs {
                    k: a.k,
                    first: (a.i, a.j),
                    second: (b.i, b.j),
                });
            }
        }
    }
    let rows: Vec<Vec<i64>> = arrows
        .iter()
        .map(|a| {
            let mut r = vec![0i64; n];
            r[a.k] += 1;
            r[a.i] -= 1;
            r[a.j] -= 1;
            r
        })
        .collect();
    Ok(NiceStructure {
        dim: n,
        root_matrix: IntMatrix::from_rows(&rows, n),
        c_vector: arrows.iter().map(|a| a.coeff.clone()).collect(),
        arrows,
    })
}

/// Diagonal `N` with `M_Δ·n = 0` and `Tr(N∘X) = Tr X` for every derivation `X`.
pub fn nikolayevsky(g: &LieAlgebra, ns: &NiceStructure) -> Result<Vec<Scalar>> {
    let n = g.dim();
    let mut rows: Vec<Vec<Scalar>> = ns.root_matrix_rational().row_vectors();
    let mut rhs: Vec<Scalar> = vec![Scalar::zero(); rows.len()];
    for x in g.derivations().basis {
        rows.push(x.diagonal_entries());
        rhs.push(x.trace());
    }
    let a = Matrix::from_fn(rows.len(), n, |i, j| rows[i][j].clone());
    let sol = exactla::solve_linear(&a, &rhs)?;
    if !sol.nullspace_basis.is_empty() {
        return Err(Error::NonUniqueNikolayevsky {
            free: sol.nullspace_basis.len(),
        });
    }
    sol.particular
        .ok_or(Error::Inconsistent("Nikolayevsky conditions"))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalMetric {
    entries: Vec<Scalar>,
}

impl DiagonalMetric {
    pub fn new(entries: Vec<Scalar>) -> Result<Self> {
        if entries.iter().any(Zero::is_zero) {
            return Err(Error::Degenerate);
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn to_matrix(&self) -> Matrix {
        Matrix::diagonal(&self.entries)
    }
}

/// Diagonal Ricci operator `½·M_Δᵀ·X` with `X_h = c_h²·g_k/(g_i·g_j)`.
/// Returns `(ricci_diagonal, X)`.
pub fn diagonal_ricci_fast(
    ns: &NiceStructure,
    m: &DiagonalMetric,
) -> Result<(Vec<Scalar>, Vec<Scalar>)> {
    let g = m.entries();
    if g.len() != ns.dim {
        return Err(Error::DimensionMismatch {
            expected: ns.dim,
            found: g.len(),
        });
    }
    let x: Vec<Scalar> = ns
        .arrows
        .iter()
        .map(|a| &a.coeff * &a.coeff * &g[a.k] / (&g[a.i] * &g[a.j]))
        .collect();
    let half = Scalar::one() / exactla::int(2);
    let ric = (0..ns.dim)
        .map(|l| {
            let s = (0..x.len()).fold(Scalar::zero(), |acc, h| match ns.root_matrix.get(h, l) {
                0 => acc,
                e => acc + &x[h] * exactla::int(e),
            });
            s * &half
        })
        .collect();
    Ok((ric, x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{frac, int, scalar_vec};
    use crate::notation::parse_algebra;

    #[test]
    fn figure_one_root_matrix() {
        let g = parse_algebra("0,0,0,0,e^{13}+e^{24},e^{12}+e^{34}").unwrap();
        let ns = nice_structure(&g).unwrap();
        let expected = IntMatrix::from_rows(
            &[
                vec![-1, 0, -1, 0, 1, 0],
                vec![0, -1, 0, -1, 1, 0],
                vec![-1, -1, 0, 0, 0, 1],
                vec![0, 0, -1, -1, 0, 1],
            ],
            6,
        );
        assert_eq!(ns.root_matrix, expected);
    }

    #[test]
    fn violations() {
        let split = parse_algebra("0,0,e^{12},e^{12}").unwrap();
        assert!(matches!(
            nice_structure(&split),
            Err(NiceViolation::SplitBracket { .. })
        ));
        let overlap = parse_algebra("0,0,0,e^{12}+e^{13}").unwrap();
        assert!(matches!(
            nice_structure(&overlap),
            Err(NiceViolation::OverlappingPairs { .. })
        ));
    }

    #[test]
    fn abelian_is_nice() {
        let ns = nice_structure(&LieAlgebra::abelian(3)).unwrap();
        assert!(ns.arrows.is_empty());
        assert_eq!(ns.root_matrix.rows(), 0);
        assert_eq!(
            nikolayevsky(&LieAlgebra::abelian(3), &ns).unwrap(),
            scalar_vec(&[1, 1, 1])
        );
    }

    #[test]
    fn heisenberg_nikolayevsky_and_ricci() {
        let g = parse_algebra("0,0,e^{12}").unwrap();
        let ns = nice_structure(&g).unwrap();
        assert_eq!(
            nikolayevsky(&g, &ns).unwrap(),
            vec![frac(2, 3), frac(2, 3), frac(4, 3)]
        );
        let m = DiagonalMetric::new(vec![int(1), int(1), frac(1, 3)]).unwrap();
        let (ric, x) = diagonal_ricci_fast(&ns, &m).unwrap();
        assert_eq!(ric, vec![frac(-1, 6), frac(-1, 6), frac(1, 6)]);
        assert_eq!(x, vec![frac(1, 3)]);
    }
}
