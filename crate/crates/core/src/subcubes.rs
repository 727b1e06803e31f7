//! Counting subcubes `Q_{d'}` inside vertex families, and the initial-segment
//! count `T(n, d')` that bounds them.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::family::VertexFamily;
use crate::vertex::Vertex;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubcubeCount {
    pub d_prime: u32,
    pub count: u128,
}

/// Number of `d'`-dimensional subcubes whose `2^{d'}` vertices all lie in `f`.
///
/// Each subcube is counted once, from its minimum corner `S` together with
/// the `d'` free directions, all of which must be outside `S`.
pub fn count_subcubes(f: &VertexFamily, d_prime: u32) -> SubcubeCount {
    let d = f.dim();
    let mut count = 0u128;
    if d_prime <= d {
        let mut ups = Vec::new();
        for &s in f.members() {
            ups.clear();
            ups.extend((1..=d).filter(|&t| !s.contains(t) && f.contains(s.with(t))));
            count += extend(f, s, Vertex::EMPTY, &ups, d_prime);
        }
    }
    SubcubeCount { d_prime, count }
}

// subcubes with minimum corner `base`, directions `dirs` already fixed, and
// `k` more directions to pick from `ups`
fn extend(f: &VertexFamily, base: Vertex, dirs: Vertex, ups: &[u32], k: u32) -> u128 {
    if k == 0 {
        return 1;
    }
    let mut total = 0;
    for (idx, &t) in ups.iter().enumerate() {
        if ups.len() - idx < k as usize {
            break;
        }
        if face_inside(f, base, dirs, t) {
            total += extend(f, base, dirs.with(t), &ups[idx + 1..], k - 1);
        }
    }
    total
}

// every vertex base ∪ X ∪ {t}, X ⊆ dirs, lies in f
fn face_inside(f: &VertexFamily, base: Vertex, dirs: Vertex, t: u32) -> bool {
    let m = dirs.mask();
    let mut sub = m;
    loop {
        if !f.contains(Vertex::from_mask(base.mask() | sub).with(t)) {
            return false;
        }
        if sub == 0 {
            return true;
        }
        sub = (sub - 1) & m;
    }
}

fn binomial(n: u32, k: u32) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u128;
    for j in 0..k {
        acc = acc * (n - j) as u128 / (j + 1) as u128;
    }
    acc
}

/// `T(n, d')`: subcubes of dimension `d'` in the first `n` vertices of binary
/// order. Powers of two are cubes; otherwise with `n = r + m`, `r` the top
/// power of two, `T(n, d') = T(r, d') + T(m, d') + T(m, d'-1)`.
pub fn initial_count(n: u64, d_prime: u32) -> SubcubeCount {
    let mut memo = BTreeMap::new();
    SubcubeCount { d_prime, count: initial_count_memo(n, d_prime, &mut memo) }
}

fn initial_count_memo(n: u64, d_prime: u32, memo: &mut BTreeMap<(u64, u32), u128>) -> u128 {
    if n == 0 {
        return 0;
    }
    if d_prime == 0 {
        return n as u128;
    }
    if let Some(&v) = memo.get(&(n, d_prime)) {
        return v;
    }
    let value = if n.is_power_of_two() {
        let k = n.trailing_zeros();
        if d_prime > k {
            0
        } else {
            binomial(k, d_prime) << (k - d_prime)
        }
    } else {
        let r = 1u64 << (63 - n.leading_zeros());
        let m = n - r;
        initial_count_memo(r, d_prime, memo)
            + initial_count_memo(m, d_prime, memo)
            + initial_count_memo(m, d_prime - 1, memo)
    };
    memo.insert((n, d_prime), value);
    value
}

/// `x(x-1)…(x-k+1)/k!` for real `x`.
pub fn generalized_binomial(x: f64, k: u32) -> f64 {
    let mut acc = 1.0;
    for t in 0..k {
        acc *= (x - t as f64) / (t + 1) as f64;
    }
    acc
}

// clamped to zero below the threshold x < k
fn clamped_binomial(x: f64, k: u32) -> f64 {
    if x < k as f64 {
        0.0
    } else {
        generalized_binomial(x, k)
    }
}

/// `(n / 2^{d'})·C(log₂ n, d')`, an upper bound on `T(n, d')`.
pub fn subcube_bound_smooth(n: u64, d_prime: u32) -> f64 {
    if n == 0 {
        return 0.0;
    }
    let log = libm::log2(n as f64);
    n as f64 / libm::exp2(d_prime as f64) * clamped_binomial(log, d_prime)
}

/// `(n / 2^{d'})·C(log₂ n + 1, d')`, valid for every family of size `n`.
pub fn subcube_bound_integer(n: u64, d_prime: u32) -> f64 {
    if n == 0 {
        return 0.0;
    }
    let log = libm::log2(n as f64) + 1.0;
    n as f64 / libm::exp2(d_prime as f64) * clamped_binomial(log, d_prime)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::initial_segment;

    // direct definition: every (base, direction set) with the whole cube inside
    fn brute_force(f: &VertexFamily, k: u32) -> u128 {
        let d = f.dim();
        let mut count = 0;
        crate::family::for_each_k_subset(d, k, |dirs| {
            for &s in f.members() {
                if !s.is_disjoint(dirs) {
                    continue;
                }
                let m = dirs.mask();
                let mut sub = m;
                let mut inside = true;
                loop {
                    if !f.contains(Vertex::from_mask(s.mask() | sub)) {
                        inside = false;
                        break;
                    }
                    if sub == 0 {
                        break;
                    }
                    sub = (sub - 1) & m;
                }
                if inside {
                    count += 1;
                }
            }
        });
        count
    }

    #[test]
    fn examples() {
        let q = VertexFamily::full_cube(5).unwrap();
        assert_eq!(count_subcubes(&q, 1).count, 5 * 16);
        assert_eq!(count_subcubes(&initial_segment(6, 3).unwrap(), 1).count, 7);
        assert_eq!(count_subcubes(&q, 0).count, 32);
        assert_eq!(initial_count(4, 1).count, 4);
        assert_eq!(initial_count(6, 1).count, 7);
        assert_eq!(initial_count(1, 3).count, 0);
        assert_eq!(initial_count(0, 0).count, 0);
        assert_eq!(initial_count(9, 0).count, 9);
    }

    #[test]
    fn full_cube_counts() {
        for d in 1..=6u32 {
            let q = VertexFamily::full_cube(d).unwrap();
            for k in 0..=d {
                let expected = binomial(d, k) << (d - k);
                assert_eq!(count_subcubes(&q, k).count, expected);
            }
            assert_eq!(count_subcubes(&q, d + 1).count, 0);
        }
    }

    #[test]
    fn matches_brute_force_on_initial_segments() {
        for d in 1..=6u32 {
            for n in 0..=(1u64 << d) {
                let f = initial_segment(n, d).unwrap();
                for k in 0..=d {
                    let c = count_subcubes(&f, k).count;
                    assert_eq!(c, brute_force(&f, k), "n={n} k={k}");
                    assert_eq!(c, initial_count(n, k).count, "n={n} k={k}");
                }
            }
        }
    }

    #[test]
    fn large_initial_counts() {
        assert_eq!(initial_count(1 << 40, 2).count, binomial(40, 2) << 38);
        // no overflow at the top of the range
        let t = initial_count(u64::MAX, 32).count;
        assert!(t > 0);
    }

    #[test]
    fn bounds_examples() {
        for k in 0..=5u32 {
            for e in 0..=12u32 {
                let n = 1u64 << e;
                let exact = initial_count(n, k).count as f64;
                assert!((subcube_bound_smooth(n, k) - exact).abs() <= 1e-9 * exact.max(1.0));
            }
        }
        assert!((subcube_bound_smooth(6, 1) - 3.0 * libm::log2(6.0)).abs() < 1e-12);
        assert_eq!(subcube_bound_smooth(1, 1), 0.0);
        assert_eq!(subcube_bound_integer(4, 1), 6.0);
        assert_eq!(subcube_bound_integer(7, 0), 7.0);
        let l = libm::log2(6.0) + 1.0;
        assert!((subcube_bound_integer(6, 2) - 1.5 * l * (l - 1.0) / 2.0).abs() < 1e-12);
    }

    #[test]
    fn chain_of_bounds() {
        for n in 1..=4096u64 {
            for k in 0..=8u32 {
                let t = initial_count(n, k).count as f64;
                let smooth = subcube_bound_smooth(n, k);
                let integer = subcube_bound_integer(n, k);
                assert!(t <= smooth * (1.0 + 1e-12) + 1e-9, "n={n} k={k}");
                assert!(smooth <= integer * (1.0 + 1e-12) + 1e-9, "n={n} k={k}");
            }
        }
    }

    // f_β(α) = (2+α)C(log(2+α)+β, d) − (1+α)C(log(1+α)+β, d) − C(β, d) − 2C(β, d−1)
    fn f_beta(alpha: f64, beta: f64, d: u32) -> f64 {
        (2.0 + alpha) * generalized_binomial(libm::log2(2.0 + alpha) + beta, d)
            - (1.0 + alpha) * generalized_binomial(libm::log2(1.0 + alpha) + beta, d)
            - generalized_binomial(beta, d)
            - 2.0 * generalized_binomial(beta, d - 1)
    }

    #[test]
    fn smoothing_inequality_numeric_audit() {
        for d in 1..=6u32 {
            assert!(f_beta(0.0, d as f64 + 0.3, d).abs() < 1e-9);
            let mut beta = d as f64 - 1.0;
            while beta <= 30.0 {
                for step in 1..=80 {
                    let alpha = step as f64 * 0.05;
                    let scale = generalized_binomial(beta + 2.0, d).abs().max(1.0);
                    assert!(f_beta(alpha, beta, d) >= -1e-12 * scale, "d={d} beta={beta} alpha={alpha}");
                }
                beta += 0.25;
            }
        }
    }
}
