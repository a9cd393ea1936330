// SPDX-License-Identifier: Apache-2.0

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::{Matrix, Scalar};
use crate::{Error, Result};

/// Reduced echelon form with right-to-left pivots on the first `pivot_cols`
/// columns; any further columns are carried along (augmented part).
pub(crate) struct Echelon {
    pub reduced: Matrix,
    /// Pivot column of each nonzero row, in row order.
    pub pivots: Vec<usize>,
}

pub(crate) fn reduce(mut a: Matrix, pivot_cols: usize) -> Echelon {
    let mut row = 0;
    let mut pivots = Vec::new();
    for col in (0..pivot_cols).rev() {
        if row == a.rows() {
            break;
        }
        let Some(p) = (row..a.rows()).find(|&r| !a[(r, col)].is_zero()) else {
            continue;
        };
        a.swap_rows(row, p);
        let inv = a[(row, col)].recip();
        a.scale_row(row, &inv);
        for r in 0..a.rows() {
            if r != row && !a[(r, col)].is_zero() {
                let f = a[(r, col)].clone();
                a.sub_row_multiple(r, row, &f);
            }
        }
        pivots.push(col);
        row += 1;
    }
    Echelon { reduced: a, pivots }
}

impl Echelon {
    fn kernel(&self, cols: usize) -> Vec<Vec<Scalar>> {
        let mut is_pivot = vec![false; cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![Scalar::zero(); cols];
                v[f] = Scalar::one();
                for (r, &p) in self.pivots.iter().enumerate() {
                    v[p] = -self.reduced[(r, f)].clone();
                }
                v
            })
            .collect()
    }
}

/// Solution set of `A·x = b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSolution {
    /// A particular solution (free variables set to zero), or `None` when inconsistent.
    pub particular: Option<Vec<Scalar>>,
    /// Basis of `ker A`.
    pub nullspace_basis: Vec<Vec<Scalar>>,
}

impl LinearSolution {
    pub fn is_consistent(&self) -> bool {
        self.particular.is_some()
    }

    pub fn is_unique(&self) -> bool {
        self.particular.is_some() && self.nullspace_basis.is_empty()
    }
}

pub fn solve_linear(a: &Matrix, b: &[Scalar]) -> Result<LinearSolution> {
    if a.rows() != b.len() {
        return Err(Error::DimensionMismatch {
            expected: a.rows(),
            found: b.len(),
        });
    }
    let n = a.cols();
    let aug = Matrix::from_fn(a.rows(), n + 1, |i, j| {
        if j < n {
            a[(i, j)].clone()
        } else {
            b[i].clone()
        }
    });
    let ech = reduce(aug, n);
    let rank = ech.pivots.len();
    let consistent = (rank..a.rows()).all(|r| ech.reduced[(r, n)].is_zero());
    let particular = consistent.then(|| {
        let mut x = vec![Scalar::zero(); n];
        for (r, &p) in ech.pivots.iter().enumerate() {
            x[p] = ech.reduced[(r, n)].clone();
        }
        x
    });
    Ok(LinearSolution {
        particular,
        nullspace_basis: ech.kernel(n),
    })
}

/// Basis of `ker A`, one vector per free (non-pivot) column in ascending order.
pub fn nullspace(a: &Matrix) -> Vec<Vec<Scalar>> {
    reduce(a.clone(), a.cols()).kernel(a.cols())
}

pub fn rank(a: &Matrix) -> usize {
    reduce(a.clone(), a.cols()).pivots.len()
}

/// Reduced basis of the span of `vectors` (all of length `cols`).
pub fn row_basis(vectors: &[Vec<Scalar>], cols: usize) -> Vec<Vec<Scalar>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let ech = reduce(Matrix::from_rows(vectors.to_vec()), cols);
    (0..ech.pivots.len())
        .map(|r| ech.reduced.row(r).to_vec())
        .collect()
}

/// Coordinates of `v` in the span of `basis` (assumed independent), or `None`
/// if `v` is not in the span.
pub fn span_coordinates(basis: &[Vec<Scalar>], v: &[Scalar]) -> Option<Vec<Scalar>> {
    if basis.is_empty() {
        return super::is_zero_vec(v).then(Vec::new);
    }
    let a = Matrix::from_fn(v.len(), basis.len(), |i, j| basis[j][i].clone());
    let sol = solve_linear(&a, v).ok()?;
    sol.particular
}

#[cfg(test)]
mod tests {
    use super::super::{frac, int, scalar_vec};
    use super::*;

    #[test]
    fn one_by_one() {
        let s = solve_linear(&Matrix::from_i64_rows(&[&[2]]), &[int(1)]).unwrap();
        assert_eq!(s.particular, Some(vec![frac(1, 2)]));
        assert!(s.nullspace_basis.is_empty());
    }

    #[test]
    fn two_i_plus_j() {
        // Oracle: the system is invariant under permuting unknowns, so the unique
        // solution has equal entries t with 2t + 4t = 1.
        let a = Matrix::from_fn(4, 4, |i, j| int(if i == j { 3 } else { 1 }));
        let s = solve_linear(&a, &scalar_vec(&[1, 1, 1, 1])).unwrap();
        assert_eq!(s.particular, Some(vec![frac(1, 6); 4]));
        assert!(s.is_unique());
    }

    #[test]
    fn inconsistent_rows() {
        let a = Matrix::from_i64_rows(&[&[1, 1], &[1, 1]]);
        let s = solve_linear(&a, &scalar_vec(&[1, 2])).unwrap();
        assert_eq!(s.particular, None);
        assert_eq!(s.nullspace_basis, vec![scalar_vec(&[1, -1])]);
    }

    #[test]
    fn length_mismatch_is_an_error() {
        let a = Matrix::from_i64_rows(&[&[1, 1]]);
        assert!(matches!(
            solve_linear(&a, &scalar_vec(&[1, 2])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn heisenberg_root_matrix_kernel() {
        let m = Matrix::from_i64_rows(&[&[-1, -1, 1]]);
        assert_eq!(
            nullspace(&m),
            vec![scalar_vec(&[1, 0, 1]), scalar_vec(&[0, 1, 1])]
        );
    }

    #[test]
    fn trivial_kernels() {
        assert!(nullspace(&Matrix::identity(3)).is_empty());
        assert_eq!(nullspace(&Matrix::zeros(2, 3)).len(), 3);
    }

    #[test]
    fn coordinates_in_span() {
        let basis = vec![scalar_vec(&[1, 0, 1]), scalar_vec(&[0, 1, 1])];
        assert_eq!(
            span_coordinates(&basis, &scalar_vec(&[2, 3, 5])),
            Some(scalar_vec(&[2, 3]))
        );
        assert_eq!(span_coordinates(&basis, &scalar_vec(&[1, 1, 1])), None);
    }
}
