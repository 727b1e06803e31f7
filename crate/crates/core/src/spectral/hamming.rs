use alloc::vec::Vec;

use super::tridiag::{self, Bracket};
use super::{Eigenvector, Method, SpectralResult};
use crate::compress::WeightVector;
use crate::error::{Error, Result};
use crate::family::for_each_k_subset;

/// The eigenvector of `H_d^i` for `λ₁` is constant on each level, so `λ₁` is
/// the top eigenvalue of the level matrix with `j` at `(j, j-1)` and `d-j`
/// at `(j, j+1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ReducedLevelSystem {
    pub d: u32,
    pub i: u32,
    /// `sub[j] = j` for `1 ≤ j ≤ i` (index 0 unused).
    pub sub: Vec<f64>,
    /// `sup[j] = d - j` for `0 ≤ j < i`.
    pub sup: Vec<f64>,
}

impl ReducedLevelSystem {
    pub fn new(d: u32, i: u32) -> Result<Self> {
        if i > d {
            return Err(Error::OutOfRange { what: "radius", value: i as u64, max: d as u64 });
        }
        let sub = (0..=i).map(|j| j as f64).collect();
        let sup = (0..i).map(|j| (d - j) as f64).collect();
        Ok(ReducedLevelSystem { d, i, sub, sup })
    }

    /// Off-diagonal of the symmetrised matrix: `√((j+1)(d-j))` for `0 ≤ j < i`.
    pub fn symmetric_off_diagonal(&self) -> Vec<f64> {
        (0..self.i as usize).map(|j| libm::sqrt(self.sub[j + 1] * self.sup[j])).collect()
    }

    /// `(A x)_j` for the unsymmetrised level matrix.
    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        let n = self.i as usize + 1;
        (0..n)
            .map(|j| {
                let down = if j > 0 { self.sub[j] * x[j - 1] } else { 0.0 };
                let up = if j + 1 < n { self.sup[j] * x[j + 1] } else { 0.0 };
                down + up
            })
            .collect()
    }
}

fn ln_binomial(n: u32, k: u32) -> f64 {
    libm::lgamma(n as f64 + 1.0) - libm::lgamma(k as f64 + 1.0) - libm::lgamma((n - k) as f64 + 1.0)
}

/// Exact `λ₁(H_d^i)` through the level reduction and Sturm bisection.
///
/// The eigenvector is returned per level: vertex weights `x_j`, normalised so
/// that `Σ_j C(d,j)·x_j² = 1`.
pub fn hamming_lambda1_exact(d: u32, i: u32, tol: f64) -> Result<SpectralResult> {
    if !(tol > 0.0) {
        return Err(Error::Precondition("tol must be positive"));
    }
    let system = ReducedLevelSystem::new(d, i)?;
    let off = system.symmetric_off_diagonal();
    let bracket: Bracket = tridiag::top_eigenvalue(&off, tol);
    let lambda = bracket.mid();
    let z = tridiag::eigenvector(&off, lambda);
    // the similarity is diag(C(d,j)^(-1/2)), which also carries the unit norm
    let x: Vec<f64> = z
        .iter()
        .enumerate()
        .map(|(j, &zj)| zj * libm::exp(-0.5 * ln_binomial(d, j as u32)))
        .collect();
    let ax = system.apply(&x);
    let residual = ax.iter().zip(&x).map(|(a, b)| (a - lambda * b).abs()).fold(0.0f64, f64::max);
    Ok(SpectralResult {
        lambda1: lambda,
        error_bound: bracket.half_width().max(residual).max(f64::EPSILON * lambda),
        residual,
        eigenvector: Eigenvector::Levels(x),
        iterations: bracket.steps,
        method: Method::ReducedTridiagonal,
        converged: true,
    })
}

/// Spreads level weights over the vertices of `H_d^i`.
pub fn expand_levels(d: u32, levels: &[f64]) -> Result<WeightVector> {
    let mut out = WeightVector::new(d)?;
    for (j, &w) in levels.iter().enumerate() {
        for_each_k_subset(d, j as u32, |s| out.set(s, w));
    }
    Ok(out)
}

/// The `(i+1)×(i+1)` matrix with `(A y)_j = j·y_{j-1} + y_{j+1}`, whose top
/// eigenvalue `λ_i` is the limit of `λ₁(H_d^i)/√d`.
#[derive(Clone, Debug, PartialEq)]
pub struct LimitConstantSystem {
    pub i: u32,
}

impl LimitConstantSystem {
    /// Symmetrised off-diagonal `√j`, `1 ≤ j ≤ i`.
    pub fn symmetric_off_diagonal(&self) -> Vec<f64> {
        (1..=self.i).map(|j| libm::sqrt(j as f64)).collect()
    }

    pub fn apply(&self, y: &[f64]) -> Vec<f64> {
        let n = self.i as usize + 1;
        (0..n)
            .map(|j| {
                let down = if j > 0 { j as f64 * y[j - 1] } else { 0.0 };
                let up = if j + 1 < n { y[j + 1] } else { 0.0 };
                down + up
            })
            .collect()
    }
}

/// `λ_i`, the top eigenvalue of [`LimitConstantSystem`].
pub fn limit_constant(i: u32) -> Result<f64> {
    if i == 0 {
        return Err(Error::OutOfRange { what: "radius", value: 0, max: u32::MAX as u64 });
    }
    let off = LimitConstantSystem { i }.symmetric_off_diagonal();
    Ok(tridiag::top_eigenvalue(&off, 0.0).mid())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::hamming_ball;
    use crate::spectral::lambda1_dense;

    fn levels(r: &SpectralResult) -> &[f64] {
        match &r.eigenvector {
            Eigenvector::Levels(x) => x,
            _ => panic!("expected level weights"),
        }
    }

    #[test]
    fn small_examples() {
        let star = hamming_lambda1_exact(4, 1, 1e-13).unwrap();
        assert!((star.lambda1 - 2.0).abs() < 1e-12);
        let r = hamming_lambda1_exact(6, 2, 1e-13).unwrap();
        assert!((r.lambda1 - 4.0).abs() < 1e-12);
        let x = levels(&r);
        let expected = [1.0, 2.0 / 3.0, 1.0 / 3.0];
        for j in 0..3 {
            assert!((x[j] / x[0] - expected[j]).abs() < 1e-12);
        }
        // frozen from a dense sparse-matrix eigensolve of the full 2517-vertex ball
        let r = hamming_lambda1_exact(16, 4, 1e-13).unwrap();
        assert!((r.lambda1 - 10.623020783715763).abs() < 1e-10);
        assert!(hamming_lambda1_exact(3, 4, 1e-9).is_err());
    }

    #[test]
    fn radius_zero_and_full_cube() {
        assert_eq!(hamming_lambda1_exact(5, 0, 1e-12).unwrap().lambda1, 0.0);
        for d in 1..=12u32 {
            let r = hamming_lambda1_exact(d, d, 1e-13).unwrap();
            assert!((r.lambda1 - d as f64).abs() < 1e-11, "d={d}");
        }
    }

    #[test]
    fn agrees_with_dense_solver_on_full_balls() {
        for d in 1..=7u32 {
            for i in 0..=d {
                let exact = hamming_lambda1_exact(d, i, 1e-13).unwrap();
                let dense = lambda1_dense(&hamming_ball(d, i).unwrap()).unwrap();
                assert!((exact.lambda1 - dense.lambda1).abs() < 1e-9, "d={d} i={i}");
            }
        }
    }

    #[test]
    fn expanded_vector_is_unit_eigenvector() {
        let r = hamming_lambda1_exact(7, 3, 1e-13).unwrap();
        let x = expand_levels(7, levels(&r)).unwrap();
        assert!((x.norm() - 1.0).abs() < 1e-12);
        assert!((crate::compress::rayleigh(&x) - r.lambda1).abs() < 1e-11);
    }

    #[test]
    fn limit_constants() {
        assert!((limit_constant(1).unwrap() - 1.0).abs() < 1e-14);
        assert!((limit_constant(2).unwrap() - libm::sqrt(3.0)).abs() < 1e-14);
        let mut prev = 0.0;
        for i in 1..=8 {
            let l = limit_constant(i).unwrap();
            assert!(l > prev);
            prev = l;
        }
        assert!(limit_constant(0).is_err());
    }

    #[test]
    fn limit_system_matches_characteristic_polynomial() {
        // i = 3: mu^4 - 6 mu^2 + 3 = 0, top root sqrt(3 + sqrt 6)
        let top = libm::sqrt(3.0 + libm::sqrt(6.0));
        assert!((limit_constant(3).unwrap() - top).abs() < 1e-13);
        let sys = LimitConstantSystem { i: 3 };
        let off = sys.symmetric_off_diagonal();
        let z = tridiag::eigenvector(&off, top);
        // undo the similarity: y_j = z_j * sqrt(j!)
        let mut fact = 1.0;
        let y: Vec<f64> = z
            .iter()
            .enumerate()
            .map(|(j, &zj)| {
                if j > 0 {
                    fact *= j as f64;
                }
                zj * libm::sqrt(fact)
            })
            .collect();
        let ay = sys.apply(&y);
        for j in 0..4 {
            assert!((ay[j] - top * y[j]).abs() < 1e-10);
        }
    }
}
