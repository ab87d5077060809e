//! Characteristic matrices of a graph and a cyclic Jacobi eigensolver.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Off-diagonal Frobenius norm target, relative to the input norm.
pub const CONVERGENCE_TOL: f64 = 1e-12;
pub const MAX_SWEEPS: usize = 100;
/// Eigenvalues this close to zero are treated as zero before square roots.
pub const ZERO_CLAMP: f64 = 1e-10;

/// Dense real symmetric matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix {
    order: usize,
    data: Vec<f64>,
}

impl SymmetricMatrix {
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let order = rows.len();
        let mut data = Vec::with_capacity(order * order);
        for row in rows {
            if row.len() != order {
                return Err(Error::InvalidArgument("matrix is not square".into()));
            }
            data.extend_from_slice(row);
        }
        let m = SymmetricMatrix { order, data };
        for i in 0..order {
            for j in (i + 1)..order {
                if m.get(i, j) != m.get(j, i) {
                    return Err(Error::NotSymmetric { row: i, col: j });
                }
            }
        }
        Ok(m)
    }

    fn from_fn(order: usize, f: impl Fn(usize, usize) -> f64) -> Self {
        let mut data = vec![0.0; order * order];
        for i in 0..order {
            for j in 0..order {
                data[i * order + j] = f(i, j);
            }
        }
        SymmetricMatrix { order, data }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.order + j]
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |acc, x| acc.max(x.abs()))
    }

    pub fn trace(&self) -> f64 {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SpectrumKind {
    Adjacency,
    Laplacian,
    SignlessLaplacian,
}

/// Eigenvalues sorted nonincreasing, with the kind of matrix they came from.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub kind: SpectrumKind,
    pub values: Vec<f64>,
    /// Bound on the absolute eigenvalue error: the off-diagonal Frobenius
    /// norm left when iteration stopped.
    pub residual: f64,
}

impl Spectrum {
    pub fn expect_kind(&self, kind: SpectrumKind) -> Result<()> {
        if self.kind == kind {
            Ok(())
        } else {
            Err(Error::WrongSpectrumKind {
                expected: kind,
                found: self.kind,
            })
        }
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    pub fn sum_of_squares(&self) -> f64 {
        self.values.iter().map(|x| x * x).sum()
    }
}

pub fn adjacency_matrix(g: &Graph) -> SymmetricMatrix {
    SymmetricMatrix::from_fn(g.order(), |i, j| if g.has_edge(i, j) { 1.0 } else { 0.0 })
}

/// `D - A`.
pub fn laplacian_matrix(g: &Graph) -> SymmetricMatrix {
    let deg = g.degrees();
    SymmetricMatrix::from_fn(g.order(), |i, j| {
        if i == j {
            deg[i] as f64
        } else if g.has_edge(i, j) {
            -1.0
        } else {
            0.0
        }
    })
}

/// `D + A`.
pub fn signless_laplacian_matrix(g: &Graph) -> SymmetricMatrix {
    let deg = g.degrees();
    SymmetricMatrix::from_fn(g.order(), |i, j| {
        if i == j {
            deg[i] as f64
        } else if g.has_edge(i, j) {
            1.0
        } else {
            0.0
        }
    })
}

pub fn spectrum(g: &Graph, kind: SpectrumKind) -> Result<Spectrum> {
    let m = match kind {
        SpectrumKind::Adjacency => adjacency_matrix(g),
        SpectrumKind::Laplacian => laplacian_matrix(g),
        SpectrumKind::SignlessLaplacian => signless_laplacian_matrix(g),
    };
    let mut s = symmetric_eigenvalues(&m)?;
    s.kind = kind;
    Ok(s)
}

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations. The
/// returned spectrum is tagged `Adjacency`; [`spectrum`] sets the real kind.
pub fn symmetric_eigenvalues(m: &SymmetricMatrix) -> Result<Spectrum> {
    let (values, residual, _) = jacobi(m, false)?;
    Ok(Spectrum {
        kind: SpectrumKind::Adjacency,
        values,
        residual,
    })
}

/// Eigenvalues together with the accumulated rotation, for checking
/// `M = V diag(values) V^T`.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    pub values: Vec<f64>,
    /// Column `k` is the eigenvector of `values[k]`, row-major `n x n`.
    pub vectors: Vec<f64>,
    order: usize,
}

impl EigenDecomposition {
    /// Largest entrywise deviation of `V diag(values) V^T` from `m`.
    pub fn reconstruction_residual(&self, m: &SymmetricMatrix) -> f64 {
        let n = self.order;
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                let r: f64 = (0..n)
                    .map(|k| self.vectors[i * n + k] * self.values[k] * self.vectors[j * n + k])
                    .sum();
                worst = worst.max((r - m.get(i, j)).abs());
            }
        }
        worst
    }
}

pub fn symmetric_eigen_decomposition(m: &SymmetricMatrix) -> Result<EigenDecomposition> {
    let (values, _, vectors) = jacobi(m, true)?;
    Ok(EigenDecomposition {
        values,
        vectors: vectors.expect("vectors requested"),
        order: m.order(),
    })
}

/// Frobenius norm of the off-diagonal part, read from the upper triangle.
fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for x in &a[i * n + i + 1..(i + 1) * n] {
            s += x * x;
        }
    }
    (2.0 * s).sqrt()
}

#[inline]
fn rotate(g: &mut f64, h: &mut f64, s: f64, tau: f64) {
    let (x, y) = (*g, *h);
    *g = x - s * (y + x * tau);
    *h = y + s * (x - y * tau);
}

/// Cyclic Jacobi on the upper triangle of a dense copy. During the first
/// three sweeps only elements above a fifth of the mean off-diagonal
/// magnitude are rotated; from the fifth sweep on, elements negligible
/// against both diagonal entries are set to zero.
#[allow(clippy::type_complexity)]
fn jacobi(m: &SymmetricMatrix, with_vectors: bool) -> Result<(Vec<f64>, f64, Option<Vec<f64>>)> {
    let n = m.order();
    let mut a = m.data.clone();
    let mut v = with_vectors.then(|| {
        let mut id = vec![0.0; n * n];
        for i in 0..n {
            id[i * n + i] = 1.0;
        }
        id
    });

    let target = CONVERGENCE_TOL * m.frobenius_norm();
    let mut sweeps = 0;
    let off = loop {
        let off = off_diagonal_norm(&a, n);
        if off <= target {
            break off;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps, off_norm: off });
        }
        sweeps += 1;
        let threshold = if sweeps < 4 {
            let sum: f64 = (0..n)
                .flat_map(|i| a[i * n + i + 1..(i + 1) * n].iter())
                .map(|x| x.abs())
                .sum();
            0.2 * sum / (n * n) as f64
        } else {
            0.0
        };
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                let g = 100.0 * apq.abs();
                let (app, aqq) = (a[p * n + p], a[q * n + q]);
                if sweeps > 4 && app.abs() + g == app.abs() && aqq.abs() + g == aqq.abs() {
                    a[p * n + q] = 0.0;
                    continue;
                }
                if apq == 0.0 || apq.abs() <= threshold {
                    continue;
                }
                let h = aqq - app;
                let t = if h.abs() + g == h.abs() {
                    apq / h
                } else {
                    let theta = 0.5 * h / apq;
                    let t = 1.0 / (theta.abs() + (1.0 + theta * theta).sqrt());
                    if theta < 0.0 {
                        -t
                    } else {
                        t
                    }
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);
                a[p * n + p] -= t * apq;
                a[q * n + q] += t * apq;
                a[p * n + q] = 0.0;

                for r in 0..p {
                    let (rp, rq) = (r * n + p, r * n + q);
                    let (mut x, mut y) = (a[rp], a[rq]);
                    rotate(&mut x, &mut y, s, tau);
                    a[rp] = x;
                    a[rq] = y;
                }
                for r in (p + 1)..q {
                    let (pr, rq) = (p * n + r, r * n + q);
                    let (mut x, mut y) = (a[pr], a[rq]);
                    rotate(&mut x, &mut y, s, tau);
                    a[pr] = x;
                    a[rq] = y;
                }
                {
                    let (head, tail) = a.split_at_mut(q * n);
                    let row_p = &mut head[p * n + q + 1..(p + 1) * n];
                    let row_q = &mut tail[q + 1..n];
                    for (x, y) in row_p.iter_mut().zip(row_q.iter_mut()) {
                        rotate(x, y, s, tau);
                    }
                }
                if let Some(v) = v.as_mut() {
                    for r in 0..n {
                        let (rp, rq) = (r * n + p, r * n + q);
                        let (mut x, mut y) = (v[rp], v[rq]);
                        rotate(&mut x, &mut y, s, tau);
                        v[rp] = x;
                        v[rq] = y;
                    }
                }
            }
        }
    };

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[j * n + j].total_cmp(&a[i * n + i]));
    let values = order.iter().map(|&i| a[i * n + i]).collect();
    let vectors = v.map(|v| {
        let mut sorted = vec![0.0; n * n];
        for (k, &src) in order.iter().enumerate() {
            for r in 0..n {
                sorted[r * n + k] = v[r * n + src];
            }
        }
        sorted
    });
    Ok((values, off, vectors))
}

/// `sqrt(x)` with values within [`ZERO_CLAMP`] of zero mapped to exactly 0.
pub fn sqrt_clamped(x: f64) -> f64 {
    if x.abs() <= ZERO_CLAMP {
        0.0
    } else {
        x.max(0.0).sqrt()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{PI, SQRT_2};

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
    }

    #[test]
    fn matrices_of_small_graphs() {
        let k2 = Graph::complete(2).unwrap();
        assert_eq!(adjacency_matrix(&k2).data, vec![0.0, 1.0, 1.0, 0.0]);
        assert_eq!(laplacian_matrix(&k2).data, vec![1.0, -1.0, -1.0, 1.0]);
        assert_eq!(signless_laplacian_matrix(&k2).data, vec![1.0, 1.0, 1.0, 1.0]);
        let k1 = Graph::complete(1).unwrap();
        assert_eq!(adjacency_matrix(&k1).data, vec![0.0]);
        assert_eq!(laplacian_matrix(&k1).data, vec![0.0]);

        let p3 = adjacency_matrix(&Graph::path(3).unwrap());
        assert_eq!(p3.data, vec![0.0, 1.0, 0.0, 1.0, 0.0, 1.0, 0.0, 1.0, 0.0]);

        let c3 = Graph::cycle(3).unwrap();
        let l = laplacian_matrix(&c3);
        let q = signless_laplacian_matrix(&c3);
        let a = adjacency_matrix(&c3);
        for i in 0..3 {
            for j in 0..3 {
                let two_i = if i == j { 2.0 } else { 0.0 };
                assert_eq!(l.get(i, j), two_i - a.get(i, j));
                assert_eq!(q.get(i, j), two_i + a.get(i, j));
            }
        }
    }

    #[test]
    fn known_spectra() {
        let s = spectrum(&Graph::path(3).unwrap(), SpectrumKind::Adjacency).unwrap();
        assert!(close(&s.values, &[SQRT_2, 0.0, -SQRT_2], 1e-12));
        let s = spectrum(&Graph::complete(5).unwrap(), SpectrumKind::Adjacency).unwrap();
        assert!(close(&s.values, &[4.0, -1.0, -1.0, -1.0, -1.0], 1e-12));
        let s = spectrum(&Graph::complete(1).unwrap(), SpectrumKind::Laplacian).unwrap();
        assert_eq!(s.values, vec![0.0]);
        assert_eq!(s.kind, SpectrumKind::Laplacian);
    }

    #[test]
    fn family_spectra_match_closed_forms() {
        let sorted = |mut v: Vec<f64>| {
            v.sort_by(|a, b| b.total_cmp(a));
            v
        };
        for n in 2..50usize {
            let nf = n as f64;
            let p = Graph::path(n).unwrap();
            let a = spectrum(&p, SpectrumKind::Adjacency).unwrap();
            let want = sorted((1..=n).map(|j| 2.0 * (PI * j as f64 / (nf + 1.0)).cos()).collect());
            assert!(close(&a.values, &want, 1e-9), "A(P_{n})");
            let q = spectrum(&p, SpectrumKind::SignlessLaplacian).unwrap();
            let want = sorted((1..=n).map(|j| 2.0 + 2.0 * (PI * j as f64 / nf).cos()).collect());
            assert!(close(&q.values, &want, 1e-9), "Q(P_{n})");
            if n >= 3 {
                let c = Graph::cycle(n).unwrap();
                let angle = |j: usize| (2.0 * PI * j as f64 / nf).cos();
                let a = spectrum(&c, SpectrumKind::Adjacency).unwrap();
                assert!(
                    close(&a.values, &sorted((0..n).map(|j| 2.0 * angle(j)).collect()), 1e-9),
                    "A(C_{n})"
                );
                let l = spectrum(&c, SpectrumKind::Laplacian).unwrap();
                assert!(
                    close(&l.values, &sorted((0..n).map(|j| 2.0 - 2.0 * angle(j)).collect()), 1e-9),
                    "L(C_{n})"
                );
                let q = spectrum(&c, SpectrumKind::SignlessLaplacian).unwrap();
                assert!(
                    close(&q.values, &sorted((0..n).map(|j| 2.0 + 2.0 * angle(j)).collect()), 1e-9),
                    "Q(C_{n})"
                );
            }
        }
    }

    #[test]
    fn reconstruction_residual_is_small() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]).unwrap();
        for m in [
            adjacency_matrix(&g),
            laplacian_matrix(&g),
            signless_laplacian_matrix(&g),
        ] {
            let d = symmetric_eigen_decomposition(&m).unwrap();
            assert!(d.reconstruction_residual(&m) <= 1e-10 * m.max_abs().max(1.0));
            let plain = symmetric_eigenvalues(&m).unwrap();
            assert!(close(&plain.values, &d.values, 1e-12));
        }
    }

    #[test]
    fn rejects_asymmetric_input() {
        let e = SymmetricMatrix::from_rows(&[vec![0.0, 1.0], vec![2.0, 0.0]]).unwrap_err();
        assert!(matches!(e, Error::NotSymmetric { row: 0, col: 1 }));
    }

    #[test]
    fn clamping() {
        assert_eq!(sqrt_clamped(-1e-16), 0.0);
        assert_eq!(sqrt_clamped(5e-11), 0.0);
        assert_eq!(sqrt_clamped(4.0), 2.0);
    }
}
