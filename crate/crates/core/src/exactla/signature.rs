// SPDX-License-Identifier: Apache-2.0

use alloc::vec::Vec;
use core::fmt;

use num_traits::{Signed, Zero};

use super::Matrix;
use crate::{Error, Result};

/// Inertia of a symmetric bilinear form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignatureResult {
    pub plus: usize,
    pub minus: usize,
    pub null: usize,
}

impl SignatureResult {
    pub fn is_nondegenerate(&self) -> bool {
        self.null == 0
    }

    pub fn is_neutral(&self) -> bool {
        self.null == 0 && self.plus == self.minus
    }
}

impl fmt::Display for SignatureResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.null == 0 {
            write!(f, "({},{})", self.plus, self.minus)
        } else {
            write!(f, "({},{},{})", self.plus, self.minus, self.null)
        }
    }
}

/// Signature by symmetric Lagrange reduction (congruence diagonalization).
pub fn signature(s: &Matrix) -> Result<SignatureResult> {
    if !s.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = s.rows();
    let mut a = s.clone();
    let mut active: Vec<usize> = (0..n).collect();
    let (mut plus, mut minus) = (0, 0);

    while !active.is_empty() {
        let pivot = match active.iter().copied().find(|&i| !a[(i, i)].is_zero()) {
            Some(p) => p,
            None => {
                // All remaining diagonal entries vanish: e_i ← e_i + e_j makes
                // the (i,i) entry 2·a_ij.
                let pair = active.iter().enumerate().find_map(|(pos, &i)| {
                    active[pos + 1..]
                        .iter()
                        .copied()
                        .find(|&j| !a[(i, j)].is_zero())
                        .map(|j| (i, j))
                });
                let Some((i, j)) = pair else { break };
                for k in 0..n {
                    let v = a[(j, k)].clone();
                    a[(i, k)] += v;
                }
                for k in 0..n {
                    let v = a[(k, j)].clone();
                    a[(k, i)] += v;
                }
                i
            }
        };
        let d = a[(pivot, pivot)].clone();
        if d.is_positive() {
            plus += 1;
        } else {
            minus += 1;
        }
        active.retain(|&i| i != pivot);
        for &j in &active {
            if a[(j, pivot)].is_zero() {
                continue;
            }
            let f = &a[(j, pivot)] / &d;
            for k in 0..n {
                let v = &a[(pivot, k)] * &f;
                a[(j, k)] -= v;
            }
            for k in 0..n {
                let v = &a[(k, pivot)] * &f;
                a[(k, j)] -= v;
            }
        }
    }
    Ok(SignatureResult {
        plus,
        minus,
        null: n - plus - minus,
    })
}
