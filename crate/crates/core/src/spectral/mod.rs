//! Largest eigenvalue of induced subgraphs and the bounds around it.
//!
//! General families go through [`lambda1`] (power iteration on `A + I`) or
//! [`lambda1_dense`] (cyclic Jacobi, for the small families met in exhaustive
//! searches). Hamming balls reduce to an `(i+1)×(i+1)` tridiagonal problem,
//! see [`hamming_lambda1_exact`].

mod bounds;
mod hamming;
pub mod tridiag;
mod walks;

use alloc::vec;
use alloc::vec::Vec;

use crate::compress::WeightVector;
use crate::error::{Error, Result};
use crate::family::VertexFamily;

pub use bounds::{classic_bounds, hamming_upper_bound, hamming_walk_lower_bound, level_bound, star_value, ClassicBounds};
pub use hamming::{
    expand_levels, hamming_lambda1_exact, limit_constant, LimitConstantSystem, ReducedLevelSystem,
};
pub use walks::{count_p2_c4, walk_trace_bound, PathCycleCounts, WalkTrace};

/// Default tolerance for iterative solvers.
pub const DEFAULT_TOL: f64 = 1e-10;
/// Iteration cap for power iteration.
pub const MAX_ITERATIONS: usize = 1_000_000;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Method {
    Power,
    ReducedTridiagonal,
    DenseSmall,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Power => "power",
            Method::ReducedTridiagonal => "reduced-tridiagonal",
            Method::DenseSmall => "dense-small",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Eigenvector {
    /// One weight per vertex of the family.
    Vertices(WeightVector),
    /// One weight per level `0..=i` of a Hamming ball; every vertex of level
    /// `j` carries weight `levels[j]`. Unit norm over all vertices.
    Levels(Vec<f64>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpectralResult {
    pub lambda1: f64,
    /// `λ₁` lies in `[lambda1 - error_bound, lambda1 + error_bound]`.
    pub error_bound: f64,
    /// `‖A·x − λ₁·x‖∞` for the returned unit eigenvector.
    pub residual: f64,
    pub eigenvector: Eigenvector,
    pub iterations: usize,
    pub method: Method,
    /// False when the iteration cap was hit; the bracket is still valid.
    pub converged: bool,
}

impl SpectralResult {
    pub fn lower(&self) -> f64 {
        self.lambda1 - self.error_bound
    }

    pub fn upper(&self) -> f64 {
        self.lambda1 + self.error_bound
    }
}

fn adjacency_matvec(adj: &[Vec<u32>], x: &[f64], out: &mut [f64]) {
    for (o, nbrs) in out.iter_mut().zip(adj) {
        *o = nbrs.iter().map(|&k| x[k as usize]).sum();
    }
}

fn vertex_vector(f: &VertexFamily, x: &[f64]) -> WeightVector {
    WeightVector::from_entries(f.dim(), f.members().iter().copied().zip(x.iter().copied()))
        .expect("members are distinct and fit the cube")
}

/// Rayleigh value, residual norms and the Collatz–Wielandt upper bound of a unit vector.
struct Certificate {
    rayleigh: f64,
    residual_inf: f64,
    residual_two: f64,
    upper: f64,
}

fn certify(adj: &[Vec<u32>], x: &[f64]) -> Certificate {
    let mut ax = vec![0.0; x.len()];
    adjacency_matvec(adj, x, &mut ax);
    let rayleigh: f64 = x.iter().zip(&ax).map(|(a, b)| a * b).sum();
    let mut residual_inf = 0.0f64;
    let mut residual_two = 0.0f64;
    let mut upper = 0.0f64;
    for (&xi, &yi) in x.iter().zip(&ax) {
        let r = yi - rayleigh * xi;
        residual_inf = residual_inf.max(r.abs());
        residual_two += r * r;
        if xi > 0.0 {
            upper = upper.max(yi / xi);
        } else {
            upper = f64::INFINITY;
        }
    }
    Certificate { rayleigh, residual_inf, residual_two: libm::sqrt(residual_two), upper }
}

/// Error radius: the Collatz–Wielandt gap when the vector is positive,
/// otherwise the residual two-norm; never below the residual ∞-norm.
fn error_radius(c: &Certificate) -> f64 {
    let gap = if c.upper.is_finite() { (c.upper - c.rayleigh).max(0.0) } else { c.residual_two };
    gap.max(c.residual_inf)
}

/// Largest adjacency eigenvalue of `Q_d[F]` by power iteration.
///
/// Iterates on `A + I` so bipartite graphs do not oscillate; stops once the
/// Rayleigh quotient moves by less than `tol/4` and the residual ∞-norm is
/// below `tol`.
pub fn lambda1(f: &VertexFamily, tol: f64) -> Result<SpectralResult> {
    lambda1_with_cap(f, tol, MAX_ITERATIONS)
}

pub fn lambda1_with_cap(f: &VertexFamily, tol: f64, max_iterations: usize) -> Result<SpectralResult> {
    if f.is_empty() {
        return Err(Error::EmptyFamily);
    }
    if !(tol > 0.0) {
        return Err(Error::Precondition("tol must be positive"));
    }
    let n = f.len();
    let adj = f.adjacency();
    let mut x = vec![1.0 / libm::sqrt(n as f64); n];
    let mut y = vec![0.0; n];
    let mut previous = f64::NAN;
    let mut iterations = 0;
    let mut converged = false;
    while iterations < max_iterations {
        iterations += 1;
        adjacency_matvec(&adj, &x, &mut y);
        let rayleigh: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        let residual = x
            .iter()
            .zip(&y)
            .map(|(a, b)| (b - rayleigh * a).abs())
            .fold(0.0f64, f64::max);
        if (rayleigh - previous).abs() < tol / 4.0 && residual < tol {
            converged = true;
            break;
        }
        previous = rayleigh;
        for (yi, xi) in y.iter_mut().zip(&x) {
            *yi += xi;
        }
        let norm = libm::sqrt(y.iter().map(|a| a * a).sum::<f64>());
        for (xi, yi) in x.iter_mut().zip(&y) {
            *xi = yi / norm;
        }
    }
    let c = certify(&adj, &x);
    Ok(SpectralResult {
        lambda1: c.rayleigh,
        error_bound: error_radius(&c),
        residual: c.residual_inf,
        eigenvector: Eigenvector::Vertices(vertex_vector(f, &x)),
        iterations,
        method: Method::Power,
        converged,
    })
}

/// All eigenpairs of a small symmetric matrix (row-major) by cyclic Jacobi.
/// Returns eigenvalues and the matrix whose columns are eigenvectors.
fn jacobi_eigen(mut a: Vec<f64>, n: usize) -> (Vec<f64>, Vec<f64>, usize) {
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let mut sweeps = 0;
    loop {
        let off: f64 = (0..n)
            .flat_map(|p| (p + 1..n).map(move |q| (p, q)))
            .map(|(p, q)| a[p * n + q] * a[p * n + q])
            .sum();
        let scale: f64 = (0..n * n).map(|k| a[k] * a[k]).sum::<f64>().max(f64::MIN_POSITIVE);
        if off <= scale * 1e-32 || sweeps >= 100 {
            break;
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + libm::sqrt(theta * theta + 1.0));
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / libm::sqrt(t * t + 1.0);
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    ((0..n).map(|i| a[i * n + i]).collect(), v, sweeps)
}

/// Largest adjacency eigenvalue by a dense symmetric eigensolver.
/// Intended for families of at most a few hundred vertices.
pub fn lambda1_dense(f: &VertexFamily) -> Result<SpectralResult> {
    if f.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let n = f.len();
    let adj = f.adjacency();
    let mut a = vec![0.0; n * n];
    for (i, nbrs) in adj.iter().enumerate() {
        for &k in nbrs {
            a[i * n + k as usize] = 1.0;
        }
    }
    let (values, vectors, sweeps) = jacobi_eigen(a, n);
    let top = (0..n).max_by(|&i, &j| values[i].total_cmp(&values[j])).unwrap();
    // any vector of the top eigenspace has a nonnegative representative of the
    // same modulus: the eigenspace is spanned by component Perron vectors
    let mut x: Vec<f64> = (0..n).map(|k| vectors[k * n + top].abs()).collect();
    let norm = libm::sqrt(x.iter().map(|a| a * a).sum::<f64>());
    for xi in &mut x {
        *xi /= norm;
    }
    let c = certify(&adj, &x);
    let floor = 8.0 * n as f64 * f64::EPSILON * c.rayleigh.abs().max(1.0);
    Ok(SpectralResult {
        lambda1: c.rayleigh,
        error_bound: c.residual_two.max(c.residual_inf).max(floor),
        residual: c.residual_inf,
        eigenvector: Eigenvector::Vertices(vertex_vector(f, &x)),
        iterations: sweeps,
        method: Method::DenseSmall,
        converged: true,
    })
}

/// Just the largest eigenvalue of a small family (dense route).
pub fn lambda1_value(f: &VertexFamily) -> f64 {
    if f.is_empty() {
        return 0.0;
    }
    lambda1_dense(f).map(|r| r.lambda1).unwrap_or(0.0)
}
