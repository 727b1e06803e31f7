//! Vertex families, canonical families of the cube and their induced subgraphs.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::vertex::{Vertex, MAX_DIM};

/// A set of vertices of `Q_d`, stored sorted in binary order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct VertexFamily {
    dim: u32,
    members: Vec<Vertex>,
}

pub(crate) fn check_dim(d: u32) -> Result<()> {
    if d == 0 || d > MAX_DIM {
        return Err(Error::Dimension(d));
    }
    Ok(())
}

impl VertexFamily {
    pub fn empty(dim: u32) -> Result<Self> {
        check_dim(dim)?;
        Ok(VertexFamily { dim, members: Vec::new() })
    }

    /// Builds a family, rejecting duplicates and vertices outside `Q_dim`.
    pub fn new(dim: u32, members: impl IntoIterator<Item = Vertex>) -> Result<Self> {
        check_dim(dim)?;
        let mut members: Vec<Vertex> = members.into_iter().collect();
        for &v in &members {
            if !v.fits(dim) {
                return Err(Error::VertexOutsideCube { vertex: v, dim });
            }
        }
        members.sort_unstable();
        if let Some(w) = members.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertex(w[0]));
        }
        Ok(VertexFamily { dim, members })
    }

    /// Caller guarantees `members` is strictly increasing and fits in `Q_dim`.
    pub(crate) fn from_sorted_unchecked(dim: u32, members: Vec<Vertex>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(members.iter().all(|v| v.fits(dim)));
        VertexFamily { dim, members }
    }

    /// The whole cube `Q_d`. Only sensible for small `d`.
    pub fn full_cube(d: u32) -> Result<Self> {
        check_dim(d)?;
        if d > 30 {
            return Err(Error::OutOfRange { what: "full cube dimension", value: d as u64, max: 30 });
        }
        Ok(Self::from_sorted_unchecked(d, (0..1u64 << d).map(Vertex::from_mask).collect()))
    }

    #[inline]
    pub fn dim(&self) -> u32 {
        self.dim
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.members.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Members in increasing binary order.
    #[inline]
    pub fn members(&self) -> &[Vertex] {
        &self.members
    }

    #[inline]
    pub fn contains(&self, v: Vertex) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    /// Position of `v` in [`members`](Self::members).
    #[inline]
    pub fn index_of(&self, v: Vertex) -> Option<usize> {
        self.members.binary_search(&v).ok()
    }

    pub fn is_subset(&self, other: &VertexFamily) -> bool {
        self.members.iter().all(|&v| other.contains(v))
    }

    /// Same members, viewed inside a different ambient cube.
    pub fn with_dim(&self, dim: u32) -> Result<Self> {
        VertexFamily::new(dim, self.members.iter().copied())
    }

    /// Largest member size `t`.
    pub fn max_set_size(&self) -> u32 {
        self.members.iter().map(|v| v.len()).max().unwrap_or(0)
    }

    /// Largest coordinate used by any member (0 if none).
    pub fn max_coordinate(&self) -> u32 {
        self.members.iter().filter_map(|v| v.max_element()).max().unwrap_or(0)
    }

    /// Closed under taking subsets.
    pub fn is_down_closed(&self) -> bool {
        self.members
            .iter()
            .all(|&s| s.elements().all(|i| self.contains(s.without(i))))
    }

    /// Neighbours of `v` inside the family, as indices into `members`.
    pub fn neighbours(&self, v: Vertex) -> impl Iterator<Item = usize> + '_ {
        (1..=self.dim).filter_map(move |j| self.index_of(v.toggle(j)))
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbours(v).count()
    }

    /// Adjacency lists of the induced subgraph, indexed like `members`.
    pub fn adjacency(&self) -> Vec<Vec<u32>> {
        self.members
            .iter()
            .map(|&s| self.neighbours(s).map(|k| k as u32).collect())
            .collect()
    }

    /// Vertices sorted by size with even-size ones first: the two colour classes.
    pub fn bipartition(&self) -> (Vec<Vertex>, Vec<Vertex>) {
        self.members.iter().partition(|v| v.len() % 2 == 0)
    }
}

/// The `n` smallest vertices in binary order.
pub fn initial_segment(n: u64, d: u32) -> Result<VertexFamily> {
    check_dim(d)?;
    let cap = if d >= 64 { u64::MAX } else { 1u64 << d };
    if n > cap {
        return Err(Error::OutOfRange { what: "n", value: n, max: cap });
    }
    Ok(VertexFamily::from_sorted_unchecked(d, (0..n).map(Vertex::from_mask).collect()))
}

/// All subsets of `{1..d}` of size at most `i`.
pub fn hamming_ball(d: u32, i: u32) -> Result<VertexFamily> {
    check_dim(d)?;
    if i > d {
        return Err(Error::OutOfRange { what: "radius", value: i as u64, max: d as u64 });
    }
    let mut members = Vec::new();
    for size in 0..=i {
        for_each_k_subset(d, size, |v| members.push(v));
    }
    members.sort_unstable();
    Ok(VertexFamily::from_sorted_unchecked(d, members))
}

/// Calls `f` for every `k`-subset of `{1..d}` (Gosper's hack over masks).
pub fn for_each_k_subset(d: u32, k: u32, mut f: impl FnMut(Vertex)) {
    if k > d {
        return;
    }
    if k == 0 {
        f(Vertex::EMPTY);
        return;
    }
    let limit: u128 = 1u128 << d;
    let mut x: u128 = (1u128 << k) - 1;
    while x < limit {
        f(Vertex::from_mask(x as u64));
        let c = x & x.wrapping_neg();
        let r = x + c;
        x = (((r ^ x) >> 2) / c) | r;
    }
}

/// An edge `S – S+j` of the cube, stored with `lower ⊂ upper`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Edge {
    pub lower: Vertex,
    pub upper: Vertex,
}

impl Edge {
    /// The coordinate the edge flips.
    pub fn direction(&self) -> u32 {
        self.upper.difference(self.lower).max_element().unwrap_or(0)
    }
}

/// Edges of an induced subgraph, each pair at Hamming distance 1 stored once.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct EdgeSet {
    edges: Vec<Edge>,
}

impl EdgeSet {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn contains(&self, e: &Edge) -> bool {
        self.edges.binary_search(e).is_ok()
    }
}

pub fn induced_edges(f: &VertexFamily) -> EdgeSet {
    let mut edges = Vec::new();
    for &s in f.members() {
        for j in 1..=f.dim() {
            if !s.contains(j) {
                let t = s.with(j);
                if f.contains(t) {
                    edges.push(Edge { lower: s, upper: t });
                }
            }
        }
    }
    edges.sort_unstable();
    EdgeSet { edges }
}

#[derive(Clone, Debug, PartialEq)]
pub struct DegreeProfile {
    /// Degree of each member, aligned with `members()`.
    pub degrees: Vec<u32>,
    pub max_degree: u32,
    /// `s(G)`: max over `u` of the degree sum of `u`'s neighbours.
    pub max_neighbour_degree_sum: u64,
}

pub fn degree_profile(f: &VertexFamily) -> DegreeProfile {
    let adj = f.adjacency();
    let degrees: Vec<u32> = adj.iter().map(|a| a.len() as u32).collect();
    let max_degree = degrees.iter().copied().max().unwrap_or(0);
    let max_neighbour_degree_sum = adj
        .iter()
        .map(|a| a.iter().map(|&k| degrees[k as usize] as u64).sum::<u64>())
        .max()
        .unwrap_or(0);
    DegreeProfile { degrees, max_degree, max_neighbour_degree_sum }
}
