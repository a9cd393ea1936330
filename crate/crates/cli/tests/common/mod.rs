// SPDX-License-Identifier: Apache-2.0

//! Brute-force reference computations written directly from the definitions:
//! Koszul formula, curvature as a commutator of covariant derivatives, the
//! exterior derivative on 2-forms and the Nijenhuis tensor. Nothing here calls
//! the corresponding routines of the library under test.

#![allow(dead_code)]

use einkahler_core::exactla::{frac, int, zero, Matrix, Scalar};
use einkahler_core::LieAlgebra;

pub fn unit(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![zero(); n];
    v[i] = int(1);
    v
}

/// `[x, y]` from the structure constants.
pub fn br(g: &LieAlgebra, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let n = g.dim();
    let mut out = vec![zero(); n];
    for i in 0..n {
        if x[i] == zero() {
            continue;
        }
        for j in 0..n {
            if y[j] == zero() {
                continue;
            }
            for k in 0..n {
                let c = g.c(i, j, k);
                if *c != zero() {
                    out[k] += &x[i] * &y[j] * c;
                }
            }
        }
    }
    out
}

pub fn inner(gm: &Matrix, x: &[Scalar], y: &[Scalar]) -> Scalar {
    let mut s = zero();
    for i in 0..x.len() {
        for j in 0..y.len() {
            s += &x[i] * &gm[(i, j)] * &y[j];
        }
    }
    s
}

fn apply(m: &Matrix, v: &[Scalar]) -> Vec<Scalar> {
    (0..m.rows())
        .map(|i| (0..m.cols()).fold(zero(), |a, j| a + &m[(i, j)] * &v[j]))
        .collect()
}

fn add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn scale(a: &[Scalar], s: &Scalar) -> Vec<Scalar> {
    a.iter().map(|x| x * s).collect()
}

fn is_zero(v: &[Scalar]) -> bool {
    v.iter().all(|x| *x == zero())
}

/// Left-invariant Levi-Civita connection: `nabla[i][j] = ∇_{e_i} e_j`, from
/// `2g(∇_X Y, Z) = g([X,Y],Z) − g([Y,Z],X) + g([Z,X],Y)`.
pub struct Oracle {
    pub n: usize,
    pub g: LieAlgebra,
    pub metric: Matrix,
    pub inverse: Matrix,
    pub nabla: Vec<Vec<Vec<Scalar>>>,
}

impl Oracle {
    pub fn new(g: &LieAlgebra, metric: &Matrix) -> Self {
        let n = g.dim();
        let inverse = metric.inverse().expect("nondegenerate metric");
        let half = frac(1, 2);
        let mut nabla = vec![vec![vec![zero(); n]; n]; n];
        for i in 0..n {
            for j in 0..n {
                let (x, y) = (unit(n, i), unit(n, j));
                // lowered components, then raise with g⁻¹
                let low: Vec<Scalar> = (0..n)
                    .map(|k| {
                        let z = unit(n, k);
                        let t = inner(metric, &br(g, &x, &y), &z)
                            - inner(metric, &br(g, &y, &z), &x)
                            + inner(metric, &br(g, &z, &x), &y);
                        t * &half
                    })
                    .collect();
                nabla[i][j] = apply(&inverse, &low);
            }
        }
        Self {
            n,
            g: g.clone(),
            metric: metric.clone(),
            inverse,
            nabla,
        }
    }

    pub fn cov(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![zero(); self.n];
        for i in 0..self.n {
            if x[i] == zero() {
                continue;
            }
            for j in 0..self.n {
                if y[j] == zero() {
                    continue;
                }
                let c = &x[i] * &y[j];
                for k in 0..self.n {
                    out[k] += &c * &self.nabla[i][j][k];
                }
            }
        }
        out
    }

    /// `R(X,Y)Z = ∇_X∇_Y Z − ∇_Y∇_X Z − ∇_{[X,Y]}Z`.
    pub fn riemann(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vec<Scalar> {
        let a = self.cov(x, &self.cov(y, z));
        let b = self.cov(y, &self.cov(x, z));
        let c = self.cov(&br(&self.g, x, y), z);
        sub(&sub(&a, &b), &c)
    }

    /// `Ric(Y,Z) = tr(X ↦ R(X,Y)Z)`, raised to an operator.
    pub fn ricci_operator(&self) -> Matrix {
        let n = self.n;
        let mut tensor = Matrix::zeros(n, n);
        for a in 0..n {
            for b in 0..n {
                let mut t = zero();
                for i in 0..n {
                    t += &self.riemann(&unit(n, i), &unit(n, a), &unit(n, b))[i];
                }
                tensor[(a, b)] = t;
            }
        }
        &self.inverse * &tensor
    }

    pub fn einstein(&self) -> Option<Scalar> {
        let r = self.ricci_operator();
        let l = r[(0, 0)].clone();
        (r == Matrix::scalar_identity(self.n, &l)).then_some(l)
    }

    pub fn scalar(&self) -> Scalar {
        self.ricci_operator().trace()
    }

    pub fn metricity(&self) -> bool {
        let n = self.n;
        (0..n).all(|i| {
            (0..n).all(|a| {
                (0..n).all(|b| {
                    let x = unit(n, i);
                    let (ea, eb) = (unit(n, a), unit(n, b));
                    inner(&self.metric, &self.cov(&x, &ea), &eb)
                        + inner(&self.metric, &ea, &self.cov(&x, &eb))
                        == zero()
                })
            })
        })
    }

    pub fn bianchi(&self) -> bool {
        let n = self.n;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let (x, y, z) = (unit(n, i), unit(n, j), unit(n, k));
                    let s = add(
                        &add(&self.riemann(&x, &y, &z), &self.riemann(&y, &z, &x)),
                        &self.riemann(&z, &x, &y),
                    );
                    if !is_zero(&s) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `(∇_X ω)(Y, Z) = −ω(∇_X Y, Z) − ω(Y, ∇_X Z)` vanishes identically.
    pub fn parallel_form(&self, w: &Matrix) -> bool {
        let n = self.n;
        (0..n).all(|i| {
            (0..n).all(|a| {
                (0..n).all(|b| {
                    let x = unit(n, i);
                    let (ea, eb) = (unit(n, a), unit(n, b));
                    inner(w, &self.cov(&x, &ea), &eb) + inner(w, &ea, &self.cov(&x, &eb)) == zero()
                })
            })
        })
    }

    /// `(∇_X E)Y = ∇_X(EY) − E∇_X Y` vanishes identically.
    pub fn parallel_endo(&self, e: &Matrix) -> bool {
        let n = self.n;
        (0..n).all(|i| {
            (0..n).all(|a| {
                let x = unit(n, i);
                let y = unit(n, a);
                is_zero(&sub(
                    &self.cov(&x, &apply(e, &y)),
                    &apply(e, &self.cov(&x, &y)),
                ))
            })
        })
    }
}

/// `dω(X,Y,Z) = −ω([X,Y],Z) + ω([X,Z],Y) − ω([Y,Z],X)` on basis triples.
pub fn closed(g: &LieAlgebra, w: &Matrix) -> bool {
    let n = g.dim();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let (x, y, z) = (unit(n, i), unit(n, j), unit(n, k));
                let v = -inner(w, &br(g, &x, &y), &z) + inner(w, &br(g, &x, &z), &y)
                    - inner(w, &br(g, &y, &z), &x);
                if v != zero() {
                    return false;
                }
            }
        }
    }
    true
}

/// `d(de^k) = 0` for every `k`, with `de^k(X,Y) = −e^k([X,Y])`.
pub fn d_squared_zero(g: &LieAlgebra) -> bool {
    let n = g.dim();
    (0..n).all(|k| {
        let w = Matrix::from_fn(n, n, |i, j| -g.c(i, j, k).clone());
        closed(g, &w)
    })
}

pub fn nijenhuis_zero(g: &LieAlgebra, e: &Matrix) -> bool {
    let n = g.dim();
    let e2 = e * e;
    for i in 0..n {
        for j in i + 1..n {
            let (x, y) = (unit(n, i), unit(n, j));
            let (ex, ey) = (apply(e, &x), apply(e, &y));
            let t = sub(
                &sub(&br(g, &ex, &ey), &apply(e, &br(g, &ex, &y))),
                &apply(e, &br(g, &x, &ey)),
            );
            let t = add(&t, &apply(&e2, &br(g, &x, &y)));
            if !is_zero(&t) {
                return false;
            }
        }
    }
    true
}

/// Structure endomorphism with `g(EX, Y) = ω(X, Y)`.
pub fn endo(metric: &Matrix, w: &Matrix) -> Matrix {
    // EᵀG = Ω  ⇒  E = (Ω·G⁻¹)ᵀ
    (w * &metric.inverse().expect("nondegenerate")).transpose()
}

fn rank(m: &Matrix) -> usize {
    einkahler_core::exactla::rank(m)
}

/// Full Kähler-type check of `(g, ω)` for `ε = ±1`, returning the Einstein constant.
pub fn structure(
    g: &LieAlgebra,
    metric: &Matrix,
    w: &Matrix,
    eps: i64,
) -> Result<Option<Scalar>, String> {
    let n = g.dim();
    let e = endo(metric, w);
    let id = Matrix::identity(n);
    if &e * &e != id.scale(&int(eps)) {
        return Err("E² ≠ ε".into());
    }
    if &(&e.transpose() * metric) * &e != metric.scale(&int(-eps)) {
        return Err("g(E·,E·) ≠ −ε·g".into());
    }
    if !closed(g, w) {
        return Err("dω ≠ 0".into());
    }
    let o = Oracle::new(g, metric);
    if !o.parallel_form(w) {
        return Err("∇ω ≠ 0".into());
    }
    if !o.parallel_endo(&e) {
        return Err("∇E ≠ 0".into());
    }
    if !nijenhuis_zero(g, &e) {
        return Err("N_E ≠ 0".into());
    }
    if eps == 1 {
        let plus = n - rank(&(&e - &id));
        let minus = n - rank(&(&e + &id));
        if plus != minus || plus + minus != n {
            return Err(format!("eigenspaces {plus} + {minus}"));
        }
    }
    Ok(o.einstein())
}

/// Inertia `(plus, minus)` of a diagonal matrix.
pub fn diagonal_signature(m: &Matrix) -> (usize, usize) {
    let d = m.diagonal_entries();
    let plus = d.iter().filter(|x| **x > zero()).count();
    let minus = d.iter().filter(|x| **x < zero()).count();
    (plus, minus)
}

/// Dimension of the derivation algebra and whether every derivation is traceless,
/// from the linear system `D[e_i,e_j] = [De_i,e_j] + [e_i,De_j]`.
pub fn derivations(g: &LieAlgebra) -> (usize, bool) {
    let n = g.dim();
    let unknowns = n * n; // D[(r, c)] at r·n + c
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in 0..n {
                let mut row = vec![zero(); unknowns];
                // (D[e_i,e_j])_k = Σ_l c_ij^l D_kl
                for l in 0..n {
                    row[k * n + l] += g.c(i, j, l);
                }
                // ([De_i,e_j])_k = Σ_l D_li c_lj^k ; ([e_i,De_j])_k = Σ_l D_lj c_il^k
                for l in 0..n {
                    row[l * n + i] -= g.c(l, j, k);
                    row[l * n + j] -= g.c(i, l, k);
                }
                if row.iter().any(|x| *x != zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let basis = if rows.is_empty() {
        (0..unknowns).map(|i| unit(unknowns, i)).collect()
    } else {
        einkahler_core::exactla::nullspace(&Matrix::from_rows(rows))
    };
    let traceless = basis
        .iter()
        .all(|d| (0..n).fold(zero(), |a, i| a + &d[i * n + i]) == zero());
    (basis.len(), traceless)
}
