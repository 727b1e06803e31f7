use crate::error::{Error, Result};
use crate::family::{degree_profile, induced_edges, VertexFamily};

/// `2√(t·d)` for a family whose sets have size at most `t ≤ d/2`, `d` the
/// ambient dimension.
pub fn level_bound(f: &VertexFamily) -> Result<f64> {
    let t = f.max_set_size();
    let d = f.dim();
    if 2 * t > d {
        return Err(Error::Precondition("largest set size must be at most d/2"));
    }
    Ok(2.0 * libm::sqrt(t as f64 * d as f64))
}

/// `2√(i(d+1-i))`, the upper bound for `λ₁(H_d^i)` when `1 ≤ i ≤ d/2`.
pub fn hamming_upper_bound(d: u32, i: u32) -> Result<f64> {
    if i == 0 || 2 * i > d {
        return Err(Error::OutOfRange { what: "radius", value: i as u64, max: (d / 2) as u64 });
    }
    Ok(2.0 * libm::sqrt(i as f64 * (d + 1 - i) as f64))
}

/// Lower bound on `λ₁(H_d^i)` from counting down-up closed walks of length
/// `2k` that start on level `i`:
/// `[C(2k,k)/(k+1) · ((i-k)(d+1-(i-k)))^k]^(1/2k)`.
pub fn hamming_walk_lower_bound(d: u32, i: u32, k: u32) -> Result<f64> {
    if 2 * i > d || i == 0 {
        return Err(Error::OutOfRange { what: "radius", value: i as u64, max: (d / 2) as u64 });
    }
    if k == 0 || k >= i {
        return Err(Error::OutOfRange { what: "walk half-length k", value: k as u64, max: i as u64 - 1 });
    }
    let r = (i - k) as f64;
    let per_step = r * (d as f64 + 1.0 - r);
    let ln_catalan = libm::lgamma(2.0 * k as f64 + 1.0) - 2.0 * libm::lgamma(k as f64 + 1.0) - libm::log(k as f64 + 1.0);
    let ln_count = ln_catalan + k as f64 * libm::log(per_step);
    Ok(libm::exp(ln_count / (2.0 * k as f64)))
}

/// The four classical upper bounds on `λ₁` of a graph with `m` edges.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ClassicBounds {
    pub edges: u64,
    /// `k - 1` for the least `k ≥ 1` with `m ≤ C(k, 2)`.
    pub brualdi_hoffman: f64,
    /// `(√(8m+1) - 1)/2`.
    pub stanley: f64,
    /// `√s(G)`.
    pub fms: f64,
    /// `√m`; induced cube subgraphs are triangle-free.
    pub nosal: f64,
}

impl ClassicBounds {
    pub fn tightest(&self) -> f64 {
        self.brualdi_hoffman.min(self.stanley).min(self.fms).min(self.nosal)
    }
}

pub fn classic_bounds(f: &VertexFamily) -> ClassicBounds {
    let m = induced_edges(f).len() as u64;
    let s = degree_profile(f).max_neighbour_degree_sum;
    let mut k = 1u64;
    while k * (k - 1) / 2 < m {
        k += 1;
    }
    ClassicBounds {
        edges: m,
        brualdi_hoffman: (k - 1) as f64,
        stanley: (libm::sqrt(8.0 * m as f64 + 1.0) - 1.0) / 2.0,
        fms: libm::sqrt(s as f64),
        nosal: libm::sqrt(m as f64),
    }
}

/// `√(n-1)`: `λ₁` of the star on `n` vertices.
pub fn star_value(n: u64) -> Result<f64> {
    if n == 0 {
        return Err(Error::OutOfRange { what: "n", value: 0, max: u64::MAX });
    }
    Ok(libm::sqrt((n - 1) as f64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{hamming_ball, initial_segment};
    use crate::spectral::{hamming_lambda1_exact, lambda1_dense};
    use crate::vertex::Vertex;

    #[test]
    fn level_bound_examples() {
        assert_eq!(level_bound(&hamming_ball(16, 4).unwrap()).unwrap(), 16.0);
        assert_eq!(level_bound(&hamming_ball(4, 1).unwrap()).unwrap(), 4.0);
        assert_eq!(level_bound(&VertexFamily::new(5, [Vertex::EMPTY]).unwrap()).unwrap(), 0.0);
        assert!(level_bound(&hamming_ball(4, 3).unwrap()).is_err());
    }

    #[test]
    fn hamming_upper_bound_examples() {
        assert!((hamming_upper_bound(6, 2).unwrap() - 2.0 * libm::sqrt(10.0)).abs() < 1e-15);
        assert_eq!(hamming_upper_bound(4, 1).unwrap(), 4.0);
        assert!((hamming_upper_bound(100, 50).unwrap() - 100.99504938362078).abs() < 1e-12);
        assert!(hamming_upper_bound(5, 3).is_err());
        assert!(hamming_upper_bound(5, 0).is_err());
    }

    #[test]
    fn walk_lower_bound_examples() {
        let b = hamming_walk_lower_bound(6, 2, 1).unwrap();
        assert!((b - libm::sqrt(6.0)).abs() < 1e-12);
        assert!(b <= 4.0);
        assert!(hamming_walk_lower_bound(6, 2, 2).is_err());
        assert!(hamming_walk_lower_bound(6, 2, 0).is_err());
        // k = 2, i = 3, d = 8: (C(4,2)/3 * (1*8)^2)^(1/4) = 128^(1/4)
        let b = hamming_walk_lower_bound(8, 3, 2).unwrap();
        assert!((b - libm::pow(128.0, 0.25)).abs() < 1e-12);
    }

    #[test]
    fn walk_lower_bound_is_close_to_leading_term_for_large_d() {
        let b = hamming_walk_lower_bound(400, 20, 8).unwrap();
        let lead = 2.0 * libm::sqrt(12.0 * (401.0 - 12.0));
        let exact = hamming_lambda1_exact(400, 20, 1e-12).unwrap().lambda1;
        assert!(b <= exact);
        // the Catalan prefactor costs k^(-3/(2k)) ≈ 0.68 at k = 8
        assert!(b / lead > 0.6 && b / lead < 1.0);
    }

    #[test]
    fn classic_examples() {
        for m in 1..=8u32 {
            let star = VertexFamily::new(m, core::iter::once(Vertex::EMPTY).chain((1..=m).map(Vertex::singleton)))
                .unwrap();
            let b = classic_bounds(&star);
            assert!((b.nosal - libm::sqrt(m as f64)).abs() < 1e-15);
        }
        let q2 = classic_bounds(&initial_segment(4, 2).unwrap());
        assert_eq!(q2.fms, 2.0);
        let empty = classic_bounds(&VertexFamily::empty(3).unwrap());
        assert_eq!(
            (empty.brualdi_hoffman, empty.stanley, empty.fms, empty.nosal),
            (0.0, 0.0, 0.0, 0.0)
        );
    }

    #[test]
    fn classic_bounds_dominate_lambda1() {
        for d in 1..=5u32 {
            for i in 0..=d {
                let f = hamming_ball(d, i).unwrap();
                let l = lambda1_dense(&f).unwrap().lambda1;
                let b = classic_bounds(&f);
                for bound in [b.brualdi_hoffman, b.stanley, b.fms, b.nosal] {
                    assert!(bound >= l - 1e-9, "d={d} i={i}");
                }
            }
        }
    }

    #[test]
    fn star_values() {
        assert!(star_value(4).unwrap() < 2.0);
        assert_eq!(star_value(1).unwrap(), 0.0);
        assert_eq!(star_value(103).unwrap(), libm::sqrt(102.0));
        assert!(star_value(0).is_err());
    }
}
