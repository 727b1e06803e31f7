use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::family::VertexFamily;

/// `(½·tr A^{2k})^{1/2k}` together with the exact half-trace.
#[derive(Clone, Debug, PartialEq)]
pub struct WalkTrace {
    pub k: u32,
    /// Closed walks of length `2k` starting on one side of the bipartition.
    pub half_trace: BigUint,
    pub bound: f64,
    /// True when the count overflowed 128 bits and was redone with big integers.
    pub used_big_integers: bool,
}

fn ln_big(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits == 0 {
        return f64::NEG_INFINITY;
    }
    let shift = bits.saturating_sub(64);
    let top: BigUint = x >> shift;
    let top = top.iter_u64_digits().next().unwrap_or(0) as f64;
    libm::log(top) + shift as f64 * core::f64::consts::LN_2
}

/// `Σ_v Σ_u w_k(v,u)²` with checked 128-bit arithmetic.
fn trace_u128(adj: &[Vec<u32>], k: u32) -> Option<u128> {
    let n = adj.len();
    let mut total: u128 = 0;
    let mut cur = vec![0u128; n];
    let mut next = vec![0u128; n];
    for start in 0..n {
        cur.iter_mut().for_each(|c| *c = 0);
        cur[start] = 1;
        for _ in 0..k {
            for (u, nbrs) in adj.iter().enumerate() {
                let mut acc: u128 = 0;
                for &w in nbrs {
                    acc = acc.checked_add(cur[w as usize])?;
                }
                next[u] = acc;
            }
            core::mem::swap(&mut cur, &mut next);
        }
        for &c in &cur {
            total = total.checked_add(c.checked_mul(c)?)?;
        }
    }
    Some(total)
}

fn trace_big(adj: &[Vec<u32>], k: u32) -> BigUint {
    let n = adj.len();
    let mut total = BigUint::default();
    for start in 0..n {
        let mut cur = vec![BigUint::default(); n];
        cur[start] = BigUint::from(1u32);
        for _ in 0..k {
            let next: Vec<BigUint> = adj
                .iter()
                .map(|nbrs| nbrs.iter().fold(BigUint::default(), |acc, &w| acc + &cur[w as usize]))
                .collect();
            cur = next;
        }
        for c in &cur {
            total += c * c;
        }
    }
    total
}

/// Upper bound `λ₁ ≤ (½·tr A^{2k})^{1/2k}` for a bipartite induced subgraph,
/// using exact walk counts (`tr A^{2k} = Σ_v ‖A^k e_v‖²`).
pub fn walk_trace_bound(f: &VertexFamily, k: u32) -> Result<WalkTrace> {
    if k == 0 {
        return Err(Error::OutOfRange { what: "k", value: 0, max: u32::MAX as u64 });
    }
    let adj = f.adjacency();
    let (trace, used_big_integers) = match trace_u128(&adj, k) {
        Some(t) => (BigUint::from(t), false),
        None => (trace_big(&adj, k), true),
    };
    // every closed walk in a bipartite graph returns to its own side
    let half_trace = trace >> 1u32;
    let bound = if half_trace.bits() == 0 { 0.0 } else { libm::exp(ln_big(&half_trace) / (2.0 * k as f64)) };
    Ok(WalkTrace { k, half_trace, bound, used_big_integers })
}

/// Paths with two edges, 4-cycles, and the counting bounds for `K_{2,3}`-free
/// bipartite graphs with sides `k ≥ l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PathCycleCounts {
    pub edges: u64,
    pub paths2: u64,
    pub cycles4: u64,
    /// Larger side of the bipartition.
    pub big_side: u64,
    /// Smaller side of the bipartition.
    pub small_side: u64,
    /// `#C₄ ≤ C(l, 2)`.
    pub cycle_bound_holds: bool,
    /// `|E| ≤ 2·C(l, 2) + k`.
    pub edge_bound_holds: bool,
}

impl PathCycleCounts {
    /// `|E| + 2·#P₂ + 4·#C₄`, which equals `½·tr A⁴`.
    pub fn fourth_moment(&self) -> u64 {
        self.edges + 2 * self.paths2 + 4 * self.cycles4
    }
}

pub fn count_p2_c4(f: &VertexFamily) -> PathCycleCounts {
    let adj = f.adjacency();
    let edges = adj.iter().map(|a| a.len() as u64).sum::<u64>() / 2;
    let paths2 = adj.iter().map(|a| {
        let deg = a.len() as u64;
        deg * deg.saturating_sub(1) / 2
    }).sum();
    // count pairs of opposite corners; each 4-cycle has two diagonals
    let d = f.dim();
    let mut diagonals = 0u64;
    for &x in f.members() {
        for a in 1..=d {
            for b in a + 1..=d {
                let y = x.toggle(a).toggle(b);
                if y > x && f.contains(y) && f.contains(x.toggle(a)) && f.contains(x.toggle(b)) {
                    diagonals += 1;
                }
            }
        }
    }
    let cycles4 = diagonals / 2;
    let (even, odd) = f.bipartition();
    let (k, l) = if even.len() >= odd.len() { (even.len(), odd.len()) } else { (odd.len(), even.len()) };
    let (k, l) = (k as u64, l as u64);
    let pairs = l * l.saturating_sub(1) / 2;
    PathCycleCounts {
        edges,
        paths2,
        cycles4,
        big_side: k,
        small_side: l,
        cycle_bound_holds: cycles4 <= pairs,
        edge_bound_holds: edges <= 2 * pairs + k,
    }
}
