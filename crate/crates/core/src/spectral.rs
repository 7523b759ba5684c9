//! Symmetric eigendecomposition of adjacency matrices and everything built
//! on it: graph energy, vertex energy, the doubly stochastic weight matrix,
//! and spectral moments with exact walk-count counterparts.

use num_bigint::BigUint;
use thiserror::Error;

use crate::graph::Graph;
use crate::intmat::IntMatrix;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SpectralError {
    #[error("Jacobi iteration did not converge within {sweeps} sweeps")]
    NonConvergence { sweeps: usize },
    #[error("walk length {k} exceeds the exact powering guard {max}")]
    PowerGuard { k: usize, max: usize },
}

const OFF_DIAGONAL_TOL: f64 = 1e-12;
const MAX_SWEEPS: usize = 100;
const MAX_WALK_LENGTH: usize = 32;

/// Eigenvalues (descending) and an orthonormal eigenvector basis of a
/// symmetric matrix. Column `j` of the stored basis is the unit eigenvector
/// for `eigenvalues()[j]`; the sign convention makes the first entry of
/// magnitude above 1e-12 positive, so identical inputs decompose
/// identically.
#[derive(Debug, Clone)]
pub struct Spectrum {
    n: usize,
    eigenvalues: Vec<f64>,
    /// Column-major: `vectors[j * n + i]` is component i of eigenvector j.
    vectors: Vec<f64>,
}

impl Spectrum {
    pub fn order(&self) -> usize {
        self.n
    }

    /// Eigenvalues sorted in descending order.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// Entry `vertex` of eigenvector `j`.
    pub fn component(&self, vertex: usize, j: usize) -> f64 {
        self.vectors[j * self.n + vertex]
    }

    /// Weight p_ij = u_ij^2.
    pub fn weight(&self, vertex: usize, j: usize) -> f64 {
        let u = self.component(vertex, j);
        u * u
    }

    /// Sum of absolute eigenvalues.
    pub fn graph_energy(&self) -> f64 {
        self.eigenvalues.iter().map(|l| l.abs()).sum()
    }

    /// Energy of one vertex: sum_j p_ij |lambda_j|, cross-checked against the
    /// diagonal entry of U |Lambda| U^T.
    pub fn vertex_energy(&self, vertex: usize) -> f64 {
        assert!(vertex < self.n, "vertex out of range");
        let weighted: f64 = (0..self.n)
            .map(|j| self.weight(vertex, j) * self.eigenvalues[j].abs())
            .sum();
        let abs_diag: f64 = (0..self.n)
            .rev()
            .map(|j| {
                let scaled = self.component(vertex, j) * self.eigenvalues[j].abs();
                scaled * self.component(vertex, j)
            })
            .sum();
        assert!(
            (weighted - abs_diag).abs() <= 1e-9,
            "vertex energy routes disagree: {weighted} vs {abs_diag}"
        );
        weighted
    }

    /// k-th spectral moment at a vertex: sum_j p_ij lambda_j^k.
    pub fn moment(&self, vertex: usize, k: usize) -> f64 {
        assert!(vertex < self.n, "vertex out of range");
        (0..self.n)
            .map(|j| self.weight(vertex, j) * self.eigenvalues[j].powi(k as i32))
            .sum()
    }
}

/// The doubly stochastic matrix p_ij = u_ij^2 of squared eigenvector entries.
#[derive(Debug, Clone)]
pub struct WeightMatrix {
    n: usize,
    /// Row-major; row = vertex, column = eigenvalue slot.
    p: Vec<f64>,
}

impl WeightMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.p[i * self.n + j]
    }

    pub fn row_sum(&self, i: usize) -> f64 {
        (0..self.n).map(|j| self.get(i, j)).sum()
    }

    pub fn column_sum(&self, j: usize) -> f64 {
        (0..self.n).map(|i| self.get(i, j)).sum()
    }
}

/// Decompose the adjacency matrix of `g` by cyclic Jacobi rotations.
///
/// Sweeps run in a fixed row-major order until the off-diagonal Frobenius
/// norm drops to 1e-12, capped at 100 sweeps. Adjacency matrices converge
/// in a handful of sweeps; hitting the cap signals numeric pathology.
pub fn eigen_sym(g: &Graph) -> Result<Spectrum, SpectralError> {
    let n = g.order();
    let mut a = vec![0.0f64; n * n];
    for (u, v) in g.edges() {
        a[u * n + v] = 1.0;
        a[v * n + u] = 1.0;
    }
    let mut vecs = vec![0.0f64; n * n];
    for i in 0..n {
        vecs[i * n + i] = 1.0;
    }

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(&a, n) <= OFF_DIAGONAL_TOL {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    -1.0 / (-theta + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                // Two-sided rotation in the (p, q) plane.
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for k in 0..n {
                    let vkp = vecs[p * n + k];
                    let vkq = vecs[q * n + k];
                    vecs[p * n + k] = c * vkp - s * vkq;
                    vecs[q * n + k] = s * vkp + c * vkq;
                }
            }
        }
    }
    if !converged && off_diagonal_norm(&a, n) > OFF_DIAGONAL_TOL {
        return Err(SpectralError::NonConvergence { sweeps: MAX_SWEEPS });
    }

    // vecs is kept transposed during the sweeps (row j = eigenvector j), so
    // the rotation touches contiguous memory; sort and fix signs now.
    let raw_evals: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| raw_evals[j].partial_cmp(&raw_evals[i]).unwrap().then(i.cmp(&j)));

    let mut eigenvalues = Vec::with_capacity(n);
    let mut vectors = vec![0.0f64; n * n];
    for (slot, &src) in order.iter().enumerate() {
        eigenvalues.push(raw_evals[src]);
        let column = &vecs[src * n..(src + 1) * n];
        let flip = match column.iter().find(|x| x.abs() > 1e-12) {
            Some(&lead) if lead < 0.0 => -1.0,
            _ => 1.0,
        };
        for i in 0..n {
            vectors[slot * n + i] = flip * column[i];
        }
    }
    Ok(Spectrum { n, eigenvalues, vectors })
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut sum = 0.0;
    for p in 0..n {
        for q in (p + 1)..n {
            sum += 2.0 * a[p * n + q] * a[p * n + q];
        }
    }
    sum.sqrt()
}

/// Graph energy: the trace of |A(G)|, i.e. the sum of absolute eigenvalues.
pub fn graph_energy(g: &Graph) -> Result<f64, SpectralError> {
    Ok(eigen_sym(g)?.graph_energy())
}

/// Energy of vertex `i`.
pub fn vertex_energy(g: &Graph, i: usize) -> Result<f64, SpectralError> {
    Ok(eigen_sym(g)?.vertex_energy(i))
}

/// Squared-eigenvector weight matrix of `g`.
pub fn weight_matrix(g: &Graph) -> Result<WeightMatrix, SpectralError> {
    let spec = eigen_sym(g)?;
    let n = spec.order();
    let mut p = vec![0.0f64; n * n];
    for i in 0..n {
        for j in 0..n {
            p[i * n + j] = spec.weight(i, j);
        }
    }
    Ok(WeightMatrix { n, p })
}

/// k-th spectral moment at vertex `i`; equals the closed walk count of
/// length k at `i` up to floating-point error.
pub fn spectral_moment(g: &Graph, i: usize, k: usize) -> Result<f64, SpectralError> {
    if k > MAX_WALK_LENGTH {
        return Err(SpectralError::PowerGuard { k, max: MAX_WALK_LENGTH });
    }
    Ok(eigen_sym(g)?.moment(i, k))
}

/// Number of closed walks of length `k` at vertex `i`, by exact integer
/// powering of the adjacency matrix.
pub fn walk_count(g: &Graph, i: usize, k: usize) -> Result<BigUint, SpectralError> {
    if k > MAX_WALK_LENGTH {
        return Err(SpectralError::PowerGuard { k, max: MAX_WALK_LENGTH });
    }
    assert!(i < g.order(), "vertex out of range");
    let a = IntMatrix::adjacency(g);
    let mut power = IntMatrix::identity(g.order());
    for _ in 0..k {
        power = power.mul(&a);
    }
    Ok(power
        .get(i, i)
        .to_biguint()
        .expect("adjacency powers are nonnegative"))
}
