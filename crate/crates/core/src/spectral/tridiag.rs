//! Symmetric tridiagonal matrices with zero diagonal: Sturm counts, bisection
//! for the top eigenvalue, and inverse iteration for its eigenvector.

use alloc::vec;
use alloc::vec::Vec;

/// Number of eigenvalues strictly below `x` of the symmetric tridiagonal
/// matrix with zero diagonal and off-diagonal `off` (length `n - 1`).
pub fn sturm_count(off: &[f64], x: f64) -> usize {
    let n = off.len() + 1;
    let mut count = 0;
    let mut q = -x;
    for j in 0..n {
        if j > 0 {
            let b = off[j - 1];
            q = -x - b * b / q;
        }
        if q == 0.0 {
            q = -f64::EPSILON * (x.abs() + 1.0);
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// Certified bracket `[lo, hi]` around the largest eigenvalue.
#[derive(Clone, Copy, Debug)]
pub struct Bracket {
    pub lo: f64,
    pub hi: f64,
    pub steps: usize,
}

impl Bracket {
    pub fn mid(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    pub fn half_width(&self) -> f64 {
        0.5 * (self.hi - self.lo)
    }
}

/// Bisection on the Sturm count for the largest eigenvalue, until the
/// bracket is narrower than `tol` or floating point stops it shrinking.
pub fn top_eigenvalue(off: &[f64], tol: f64) -> Bracket {
    let n = off.len() + 1;
    if n == 1 {
        return Bracket { lo: 0.0, hi: 0.0, steps: 0 };
    }
    // Gershgorin
    let mut hi = 0.0f64;
    for j in 0..n {
        let left = if j > 0 { off[j - 1].abs() } else { 0.0 };
        let right = if j + 1 < n { off[j].abs() } else { 0.0 };
        hi = hi.max(left + right);
    }
    hi = hi * (1.0 + 4.0 * f64::EPSILON) + f64::MIN_POSITIVE;
    // spectrum is symmetric about 0 (zero diagonal), so the top eigenvalue is >= 0
    let mut lo = 0.0f64;
    let mut steps = 0;
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if sturm_count(off, mid) == n {
            hi = mid;
        } else {
            lo = mid;
        }
        steps += 1;
    }
    Bracket { lo, hi, steps }
}

/// Solves `(T - shift·I) z = rhs` by Gaussian elimination with partial pivoting.
fn solve_shifted(off: &[f64], shift: f64, rhs: &[f64]) -> Vec<f64> {
    let n = rhs.len();
    // rows hold (sub, diag, sup, sup2) after elimination
    let mut diag = vec![-shift; n];
    let mut sup: Vec<f64> = (0..n).map(|j| if j + 1 < n { off[j] } else { 0.0 }).collect();
    let mut sup2 = vec![0.0; n];
    let mut sub: Vec<f64> = (0..n).map(|j| if j > 0 { off[j - 1] } else { 0.0 }).collect();
    let mut b = rhs.to_vec();
    let tiny = f64::EPSILON * (1.0 + shift.abs());
    for j in 0..n.saturating_sub(1) {
        let below = sub[j + 1];
        if below.abs() > diag[j].abs() {
            // swap rows j and j+1
            let (d1, s1, t1, b1) = (diag[j], sup[j], sup2[j], b[j]);
            diag[j] = below;
            sup[j] = diag[j + 1];
            sup2[j] = sup[j + 1];
            b[j] = b[j + 1];
            diag[j + 1] = s1;
            sup[j + 1] = t1;
            b[j + 1] = b1;
            sub[j + 1] = d1;
        }
        if diag[j] == 0.0 {
            diag[j] = tiny;
        }
        let factor = sub[j + 1] / diag[j];
        diag[j + 1] -= factor * sup[j];
        sup[j + 1] -= factor * sup2[j];
        b[j + 1] -= factor * b[j];
        sub[j + 1] = 0.0;
    }
    if diag[n - 1] == 0.0 {
        diag[n - 1] = tiny;
    }
    let mut z = vec![0.0; n];
    for j in (0..n).rev() {
        let mut acc = b[j];
        if j + 1 < n {
            acc -= sup[j] * z[j + 1];
        }
        if j + 2 < n {
            acc -= sup2[j] * z[j + 2];
        }
        z[j] = acc / diag[j];
    }
    z
}

/// Unit eigenvector for eigenvalue estimate `lambda` by inverse iteration,
/// with the sign chosen so the largest-magnitude entry is positive.
pub fn eigenvector(off: &[f64], lambda: f64) -> Vec<f64> {
    let n = off.len() + 1;
    if n == 1 {
        return vec![1.0];
    }
    let mut z = vec![1.0 / libm::sqrt(n as f64); n];
    for _ in 0..4 {
        let next = solve_shifted(off, lambda, &z);
        let norm = libm::sqrt(next.iter().map(|a| a * a).sum::<f64>());
        if !norm.is_finite() || norm == 0.0 {
            break;
        }
        z = next.into_iter().map(|a| a / norm).collect();
    }
    let pivot = z.iter().copied().fold(0.0f64, |m, a| if a.abs() > m.abs() { a } else { m });
    if pivot < 0.0 {
        for a in &mut z {
            *a = -*a;
        }
    }
    z
}
