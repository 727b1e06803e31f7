//! Test-side oracles, written from the definitions and independent of the
//! library's solvers.
#![allow(dead_code)]

use cube_spectra_core::{Vertex, VertexFamily};
use rand::Rng;

pub fn adjacency(f: &VertexFamily) -> Vec<Vec<usize>> {
    let m = f.members();
    (0..m.len())
        .map(|a| (0..m.len()).filter(|&b| m[a].hamming_distance(m[b]) == 1).collect())
        .collect()
}

/// `λ₁` by plain power iteration on `A + 2I`, from a positive start.
pub fn power_lambda1(f: &VertexFamily) -> f64 {
    let adj = adjacency(f);
    let n = adj.len();
    if n == 0 {
        return 0.0;
    }
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut last = f64::NAN;
    for it in 0..200_000 {
        let y: Vec<f64> = (0..n).map(|a| 2.0 * x[a] + adj[a].iter().map(|&b| x[b]).sum::<f64>()).collect();
        let rq: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum::<f64>() - 2.0;
        let norm = y.iter().map(|a| a * a).sum::<f64>().sqrt();
        x = y.into_iter().map(|a| a / norm).collect();
        if it > 10 && (rq - last).abs() < 1e-15 {
            return rq;
        }
        last = rq;
    }
    last
}

/// `⟨Ax, x⟩` summed over cube edges `(S, S + j)`.
pub fn rayleigh_oracle(entries: &[(Vertex, f64)], d: u32) -> f64 {
    let weight = |v: Vertex| entries.iter().find(|(u, _)| *u == v).map_or(0.0, |(_, w)| *w);
    let mut total = 0.0;
    for &(s, ws) in entries {
        for j in 1..=d {
            if !s.contains(j) {
                total += 2.0 * ws * weight(s.with(j));
            }
        }
    }
    total
}

/// `tr A⁴ / 2` as `½ Σ_{u,v} (A²)_{uv}²`.
pub fn half_trace_a4(f: &VertexFamily) -> u64 {
    let adj = adjacency(f);
    let n = adj.len();
    let mut total = 0u64;
    for u in 0..n {
        let mut row = vec![0u64; n];
        for &w in &adj[u] {
            for &v in &adj[w] {
                row[v] += 1;
            }
        }
        total += row.iter().map(|c| c * c).sum::<u64>();
    }
    total / 2
}

/// Subcubes of dimension `k` inside `f`, straight from the definition.
pub fn brute_subcubes(f: &VertexFamily, k: u32) -> u64 {
    let d = f.dim();
    let mut count = 0;
    for dirs in 0u64..1 << d {
        if dirs.count_ones() != k {
            continue;
        }
        for &s in f.members() {
            if s.mask() & dirs != 0 {
                continue;
            }
            let mut sub = dirs;
            let mut inside = true;
            loop {
                if !f.contains(Vertex::from_mask(s.mask() | sub)) {
                    inside = false;
                    break;
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & dirs;
            }
            if inside {
                count += 1;
            }
        }
    }
    count
}

/// Family of the vertices whose indices are the set bits of `mask`.
pub fn family_from_index_mask(d: u32, mask: u64) -> VertexFamily {
    VertexFamily::new(d, (0..1u64 << d).filter(|i| mask >> i & 1 == 1).map(Vertex::from_mask)).unwrap()
}

/// Random compressed family of size `n`: grows an ideal of the shifted order
/// by adding a uniformly chosen addable set each step.
pub fn random_compressed(n: usize, d: u32, rng: &mut impl Rng) -> VertexFamily {
    let mut members = vec![Vertex::EMPTY];
    while members.len() < n {
        let have = |v: Vertex| members.contains(&v);
        let mut addable = Vec::new();
        for &y in &members {
            for t in 1..=d {
                let x = y.with(t);
                if x == y || have(x) {
                    continue;
                }
                let ok = x.elements().all(|s| {
                    have(x.without(s)) && (s == 1 || x.contains(s - 1) || have(x.without(s).with(s - 1)))
                });
                if ok {
                    addable.push(x);
                }
            }
        }
        addable.sort();
        addable.dedup();
        members.push(addable[rng.gen_range(0..addable.len())]);
    }
    VertexFamily::new(d, members).unwrap()
}

/// Largest `k` such that some subfamily has minimum degree `k`.
pub fn degeneracy(f: &VertexFamily) -> usize {
    let adj = adjacency(f);
    let mut alive = vec![true; adj.len()];
    let mut best = 0;
    for _ in 0..adj.len() {
        let (i, deg) = (0..adj.len())
            .filter(|&i| alive[i])
            .map(|i| (i, adj[i].iter().filter(|&&j| alive[j]).count()))
            .min_by_key(|&(_, deg)| deg)
            .unwrap();
        best = best.max(deg);
        alive[i] = false;
    }
    best
}
