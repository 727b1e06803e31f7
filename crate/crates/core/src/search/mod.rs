//! Exhaustive maximisation of `λ₁` over compressed families, and the
//! heavy-vertex partition of a compressed family (see [`partition`]).
//!
//! A compressed family is an order ideal of the shifted order, in which `S`
//! lies below `T` when `S` arises from `T` by deleting elements and lowering
//! elements to free smaller values. Binary order extends the shifted order,
//! so every ideal is built uniquely by adding its members in binary order,
//! each new member having all its lower covers present already.

pub mod partition;

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::family::{check_dim, VertexFamily};
use crate::spectral::lambda1_value;
use crate::vertex::Vertex;

/// Smallest `d` with `n ≤ 2^d`.
fn min_dim(n: u64) -> u32 {
    64 - n.saturating_sub(1).leading_zeros()
}

/// Lower covers of `x` in the shifted order: deletions, and `s ↦ s-1` when
/// `s - 1` is free.
fn lower_covers_inside(x: Vertex, members: &[Vertex]) -> bool {
    let present = |v: Vertex| members.binary_search(&v).is_ok();
    for s in x.elements() {
        if !present(x.without(s)) {
            return false;
        }
        if s > 1 && !x.contains(s - 1) && !present(x.without(s).with(s - 1)) {
            return false;
        }
    }
    true
}

/// Every compressed family of a given size, each once, in increasing
/// lexicographic order of their member lists (members in binary order).
pub struct CompressedFamilies {
    n: usize,
    dim: u32,
    // largest usable element
    top: u32,
    members: Vec<Vertex>,
    stack: Vec<(Vec<Vertex>, usize)>,
    started: bool,
}

impl CompressedFamilies {
    fn candidates(&self) -> Vec<Vertex> {
        let last = *self.members.last().expect("nonempty");
        let mut out: Vec<Vertex> = Vec::new();
        for &y in &self.members {
            let from = y.max_element().unwrap_or(0) + 1;
            for t in from..=self.top {
                let x = y.with(t);
                if x > last && lower_covers_inside(x, &self.members) {
                    out.push(x);
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    fn family(&self) -> VertexFamily {
        VertexFamily::from_sorted_unchecked(self.dim, self.members.clone())
    }
}

impl Iterator for CompressedFamilies {
    type Item = VertexFamily;

    fn next(&mut self) -> Option<VertexFamily> {
        if !self.started {
            self.started = true;
            self.members.push(Vertex::EMPTY);
            if self.n == 1 {
                return Some(self.family());
            }
            let c = self.candidates();
            self.stack.push((c, 0));
        }
        loop {
            let (cands, idx) = self.stack.last_mut()?;
            if *idx == cands.len() {
                self.stack.pop();
                self.members.pop();
                continue;
            }
            let x = cands[*idx];
            *idx += 1;
            self.members.push(x);
            if self.members.len() == self.n {
                let f = self.family();
                self.members.pop();
                return Some(f);
            }
            let c = self.candidates();
            self.stack.push((c, 0));
        }
    }
}

/// Streams every compressed family of size `n` inside `Q_{cap_dim}`.
///
/// Members of such a family use only elements up to `n - 1`, so a cap above
/// that changes nothing but the ambient dimension of the output.
pub fn enumerate_compressed(n: usize, cap_dim: u32) -> Result<CompressedFamilies> {
    check_dim(cap_dim)?;
    if n == 0 {
        return Err(Error::OutOfRange { what: "n", value: 0, max: u64::MAX });
    }
    let need = min_dim(n as u64);
    if cap_dim < need {
        return Err(Error::OutOfRange { what: "n for this dimension", value: n as u64, max: 1u64 << cap_dim.min(63) });
    }
    let top = cap_dim.min((n - 1) as u32);
    Ok(CompressedFamilies { n, dim: cap_dim, top, members: Vec::new(), stack: Vec::new(), started: false })
}

#[derive(Clone, Debug, PartialEq)]
pub struct Ranked {
    pub lambda1: f64,
    pub family: VertexFamily,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SearchConfig {
    /// Values within `tol` of the best count as ties.
    pub tol: f64,
    /// Length of the runner-up list.
    pub top_k: usize,
    /// Stop after visiting this many families.
    pub budget: Option<u64>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { tol: 1e-9, top_k: 5, budget: None }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SearchResult {
    pub n: usize,
    pub d: u32,
    pub best_lambda1: f64,
    /// All families within `tol` of the best, in canonical order.
    pub maximizers: Vec<VertexFamily>,
    /// The best `top_k` families by `λ₁`, canonical order among equals.
    pub runner_ups: Vec<Ranked>,
    pub search_space_size: u64,
    /// `d < n - 1`: the compression argument needs room to embed, so the value
    /// is only the maximum over compressed families.
    pub restricted: bool,
    /// False when the budget ran out first.
    pub complete: bool,
}

impl SearchResult {
    pub fn maximizer(&self) -> &VertexFamily {
        &self.maximizers[0]
    }
}

fn by_value_desc(a: &Ranked, b: &Ranked) -> Ordering {
    b.lambda1.total_cmp(&a.lambda1)
}

/// Accumulates ties and a top-k list from a stream of families.
struct Best {
    tol: f64,
    top_k: usize,
    best: f64,
    maximizers: Vec<VertexFamily>,
    ranked: Vec<Ranked>,
}

impl Best {
    fn new(config: &SearchConfig) -> Self {
        Best { tol: config.tol, top_k: config.top_k, best: f64::NEG_INFINITY, maximizers: Vec::new(), ranked: Vec::new() }
    }

    fn offer(&mut self, family: VertexFamily, lambda1: f64) {
        if lambda1 > self.best + self.tol {
            self.best = lambda1;
            self.maximizers = vec![family.clone()];
        } else if lambda1 >= self.best - self.tol {
            self.best = self.best.max(lambda1);
            self.maximizers.push(family.clone());
        }
        if self.top_k > 0 {
            let item = Ranked { lambda1, family };
            // stable insert keeps canonical order among equal values
            let pos = self.ranked.partition_point(|r| by_value_desc(r, &item) != Ordering::Greater);
            if pos < self.top_k {
                self.ranked.insert(pos, item);
                self.ranked.truncate(self.top_k);
            }
        }
    }
}

/// Maximum of `λ₁(Q_d[F])` over compressed families `F` of size `n`.
pub fn max_lambda1(n: usize, d: u32, config: &SearchConfig) -> Result<SearchResult> {
    check_dim(d)?;
    if d < 64 && n as u64 > 1u64 << d {
        return Err(Error::OutOfRange { what: "n", value: n as u64, max: 1u64 << d });
    }
    let mut best = Best::new(config);
    let mut visited = 0u64;
    let mut complete = true;
    for f in enumerate_compressed(n, d)? {
        if config.budget.is_some_and(|b| visited >= b) {
            complete = false;
            break;
        }
        visited += 1;
        let l = lambda1_value(&f);
        best.offer(f, l);
    }
    if best.maximizers.is_empty() {
        return Err(Error::Precondition("search budget allows no family"));
    }
    Ok(SearchResult {
        n,
        d,
        best_lambda1: best.best,
        maximizers: best.maximizers,
        runner_ups: best.ranked,
        search_space_size: visited,
        restricted: (d as usize) + 1 < n,
        complete,
    })
}

/// Maximum of `λ₁` over *all* `n`-subsets of `Q_d`, by brute force.
/// Feasible for `d ≤ 4` (and small `n` at `d = 5`).
pub fn exhaustive_max_lambda1(n: usize, d: u32, config: &SearchConfig) -> Result<SearchResult> {
    check_dim(d)?;
    if d > 5 {
        return Err(Error::OutOfRange { what: "dimension for brute force", value: d as u64, max: 5 });
    }
    let size = 1u32 << d;
    if n == 0 || n as u32 > size {
        return Err(Error::OutOfRange { what: "n", value: n as u64, max: size as u64 });
    }
    let mut best = Best::new(config);
    let mut visited = 0u64;
    let mut complete = true;
    let mut stop = false;
    // n-subsets of the 2^d vertices as bitmasks over vertex indices
    crate::family::for_each_k_subset(size, n as u32, |chosen| {
        if stop {
            return;
        }
        if config.budget.is_some_and(|b| visited >= b) {
            complete = false;
            stop = true;
            return;
        }
        visited += 1;
        let members: Vec<Vertex> = chosen.elements().map(|e| Vertex::from_mask((e - 1) as u64)).collect();
        let f = VertexFamily::from_sorted_unchecked(d, members);
        let l = lambda1_value(&f);
        best.offer(f, l);
    });
    Ok(SearchResult {
        n,
        d,
        best_lambda1: best.best,
        maximizers: best.maximizers,
        runner_ups: best.ranked,
        search_space_size: visited,
        restricted: false,
        complete,
    })
}

/// The star `{∅, {1}, …, {n-1}}`.
pub fn star_family(n: usize, d: u32) -> Result<VertexFamily> {
    if n == 0 || n - 1 > d as usize {
        return Err(Error::OutOfRange { what: "star size", value: n as u64, max: d as u64 + 1 });
    }
    VertexFamily::new(d, core::iter::once(Vertex::EMPTY).chain((1..n as u32).map(Vertex::singleton)))
}

#[derive(Clone, Debug, PartialEq)]
pub struct StarRow {
    pub n: usize,
    pub best_lambda1: f64,
    pub star_lambda1: f64,
    /// The star attains the maximum.
    pub star_optimal: bool,
    /// The star is the only compressed maximizer.
    pub star_unique: bool,
    pub maximizers: Vec<VertexFamily>,
}

/// Compares the compressed maximum with the star value `√(n-1)` for each `n`.
pub fn verify_star_regime(ns: impl IntoIterator<Item = usize>, d: u32, config: &SearchConfig) -> Result<Vec<StarRow>> {
    let mut rows = Vec::new();
    for n in ns {
        if n == 0 || n - 1 > d as usize {
            return Err(Error::OutOfRange { what: "n (the star needs n - 1 ≤ d)", value: n as u64, max: d as u64 + 1 });
        }
        let r = max_lambda1(n, d, config)?;
        let star = star_family(n, d)?;
        let star_lambda1 = libm::sqrt((n - 1) as f64);
        let star_optimal = r.maximizers.contains(&star);
        rows.push(StarRow {
            n,
            best_lambda1: r.best_lambda1,
            star_lambda1,
            star_optimal,
            star_unique: star_optimal && r.maximizers.len() == 1,
            maximizers: r.maximizers,
        });
    }
    Ok(rows)
}
