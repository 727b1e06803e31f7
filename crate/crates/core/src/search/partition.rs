//! The heavy-vertex partition of a compressed family.
//!
//! `A_0 = V(G)` and `A_k` keeps the members of `A_{k-1}` with at least `εd`
//! neighbours in `A_{k-1}`; `M` is the last nonempty index. From the chain
//! come the thresholds `m_k`, blocks `C_k`, `D_k`, their running unions
//! `E_k`, and the star-balls `N^(k)_S` centred on `D_k`. [`verify_partition`]
//! rechecks every structural claim about them and names a witness for each
//! failure.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::compress::first_violation;
use crate::error::{Error, Result};
use crate::family::VertexFamily;
use crate::vertex::Vertex;

/// Named choices of `ε`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum EpsilonPreset {
    /// `√(2c/d)` with `c = n/d`, for families of about `d` vertices.
    StarCover,
    /// `α / ln(d/i)`, for radius `i` growing with `d`.
    LogRatio { alpha: f64, i: u32 },
    /// `2i·d^{-1/(i+1)}`, for a fixed radius `i`.
    FixedRadius { i: u32 },
}

impl EpsilonPreset {
    pub fn name(&self) -> &'static str {
        match self {
            EpsilonPreset::StarCover => "star-cover",
            EpsilonPreset::LogRatio { .. } => "log-ratio",
            EpsilonPreset::FixedRadius { .. } => "fixed-radius",
        }
    }

    pub fn epsilon(&self, n: usize, d: u32) -> Result<f64> {
        if d == 0 {
            return Err(Error::Dimension(0));
        }
        let d = d as f64;
        match *self {
            EpsilonPreset::StarCover => Ok(libm::sqrt(2.0 * (n as f64 / d) / d)),
            EpsilonPreset::LogRatio { alpha, i } => {
                if i == 0 || i as f64 >= d {
                    return Err(Error::Precondition("log-ratio preset needs 1 ≤ i < d"));
                }
                if !(alpha > 0.0) {
                    return Err(Error::Precondition("log-ratio preset needs alpha > 0"));
                }
                Ok(alpha / libm::log(d / i as f64))
            }
            EpsilonPreset::FixedRadius { i } => {
                if i == 0 {
                    return Err(Error::Precondition("fixed-radius preset needs i ≥ 1"));
                }
                Ok(2.0 * i as f64 * libm::pow(d, -1.0 / (i as f64 + 1.0)))
            }
        }
    }
}

/// `{S} ∪ ⋃_{1≤j≤M-k} (N_j(S) ∩ C_{k+j})` for a centre `S ∈ D_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct StarBall {
    pub k: usize,
    pub centre: Vertex,
    pub members: VertexFamily,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PartitionCertificate {
    pub epsilon: f64,
    pub dim: u32,
    /// `M`, the last index with `A_M` nonempty.
    pub depth: usize,
    /// `A_0, …, A_M`.
    pub a: Vec<VertexFamily>,
    pub b: Vec<Vec<u32>>,
    pub m: Vec<u32>,
    pub c: Vec<VertexFamily>,
    pub d: Vec<VertexFamily>,
    pub e: Vec<VertexFamily>,
    pub stars: Vec<StarBall>,
    /// `M = 0`: everything lands in the single block `D_0`.
    pub trivial: bool,
}

impl PartitionCertificate {
    pub fn threshold(&self) -> f64 {
        self.epsilon * self.dim as f64
    }

    /// Moves `v` from `D_from` into `C_to`, leaving every other set alone.
    /// Only useful for exercising [`verify_partition`] on a broken certificate.
    pub fn move_d_to_c(&mut self, v: Vertex, from: usize, to: usize) -> Result<()> {
        if from >= self.d.len() || to >= self.c.len() || !self.d[from].contains(v) {
            return Err(Error::Precondition("vertex is not in the source block"));
        }
        self.d[from] = family_of(self.dim, self.d[from].members().iter().copied().filter(|&x| x != v));
        self.c[to] = family_of(self.dim, self.c[to].members().iter().copied().chain(core::iter::once(v)));
        Ok(())
    }
}

fn family_of(dim: u32, members: impl IntoIterator<Item = Vertex>) -> VertexFamily {
    let set: BTreeSet<Vertex> = members.into_iter().collect();
    VertexFamily::from_sorted_unchecked(dim, set.into_iter().collect())
}

fn neighbours_within(f: &VertexFamily, v: Vertex) -> usize {
    (1..=f.dim()).filter(|&t| f.contains(v.toggle(t))).count()
}

// vertex made of the given elements, or None if some element is past d
fn vertex_within(elements: impl IntoIterator<Item = u32>, d: u32) -> Option<Vertex> {
    let mut v = Vertex::EMPTY;
    for t in elements {
        if t == 0 || t > d {
            return None;
        }
        v = v.with(t);
    }
    Some(v)
}

fn degree_core_chain(f: &VertexFamily, threshold: f64) -> Result<Vec<VertexFamily>> {
    let mut chain = alloc::vec![f.clone()];
    loop {
        let prev = chain.last().expect("nonempty");
        let next = family_of(
            f.dim(),
            prev.members().iter().copied().filter(|&v| neighbours_within(prev, v) as f64 >= threshold),
        );
        if next.is_empty() {
            return Ok(chain);
        }
        if next.len() == prev.len() {
            return Err(Error::Precondition("every vertex of a nonempty core has at least εd neighbours in it; the chain never empties"));
        }
        chain.push(next);
    }
}

/// `(B_k, m_k, C_k, D_k, E_k)` for `0 ≤ k ≤ M` from the chain `a`.
#[allow(clippy::type_complexity)]
fn blocks(
    g: &VertexFamily,
    a: &[VertexFamily],
) -> (Vec<Vec<u32>>, Vec<u32>, Vec<VertexFamily>, Vec<VertexFamily>, Vec<VertexFamily>) {
    let dim = g.dim();
    let depth = a.len() - 1;
    let mut b = Vec::new();
    let mut m = Vec::new();
    let mut c = Vec::new();
    let mut d = Vec::new();
    let mut e: Vec<VertexFamily> = Vec::new();

    let mut b0: Vec<u32> = (1..=dim).filter(|&t| a[depth].contains(Vertex::singleton(t))).collect();
    if !b0.contains(&1) {
        b0.insert(0, 1);
    }
    let m0 = *b0.iter().max().expect("contains 1");
    let d0 = family_of(dim, g.members().iter().copied().filter(|v| v.max_element().unwrap_or(0) <= m0));
    b.push(b0);
    m.push(m0);
    c.push(family_of(dim, core::iter::empty()));
    d.push(d0.clone());
    e.push(d0);

    for k in 1..=depth {
        let prev_m = m[k - 1];
        let prefix: Vec<u32> = m.iter().map(|&x| x + 1).collect();
        let mut bk: Vec<u32> = Vec::new();
        for t in prev_m + 2..=dim {
            if let Some(v) = vertex_within(prefix.iter().copied().chain(core::iter::once(t)), dim) {
                if a[depth - k].contains(v) {
                    bk.push(t);
                }
            }
        }
        bk.insert(0, prev_m + 1);
        let mk = *bk.iter().max().expect("nonempty");
        let ck = family_of(
            dim,
            c[k - 1].members().iter().chain(d[k - 1].members()).flat_map(|&s| {
                (prev_m + 1..=dim).filter(move |&t| !s.contains(t)).map(move |t| s.with(t))
            })
            .filter(|&v| g.contains(v)),
        );
        let dk = family_of(
            dim,
            g.members()
                .iter()
                .copied()
                .filter(|v| v.max_element().unwrap_or(0) <= mk)
                .filter(|&v| !e[k - 1].contains(v) && !ck.contains(v)),
        );
        let ek = family_of(
            dim,
            e[k - 1].members().iter().chain(ck.members()).chain(dk.members()).copied(),
        );
        b.push(bk);
        m.push(mk);
        c.push(ck);
        d.push(dk);
        e.push(ek);
    }
    (b, m, c, d, e)
}

fn star_balls(c: &[VertexFamily], d: &[VertexFamily], depth: usize) -> Vec<StarBall> {
    let mut out = Vec::new();
    for k in 0..depth {
        for &s in d[k].members() {
            let mut members = alloc::vec![s];
            for j in 1..=depth - k {
                members.extend(c[k + j].members().iter().copied().filter(|t| t.hamming_distance(s) == j as u32));
            }
            let dim = d[k].dim();
            out.push(StarBall { k, centre: s, members: family_of(dim, members) });
        }
    }
    out
}

/// Builds the partition certificate of a compressed family for a given `ε`.
///
/// Fails when `g` is not compressed, and when the `εd`-core of `g` is
/// nonempty (then `A_k` never empties and `M` is undefined).
pub fn build_partition(g: &VertexFamily, epsilon: f64) -> Result<PartitionCertificate> {
    if g.is_empty() {
        return Err(Error::EmptyFamily);
    }
    if !(epsilon > 0.0) || !epsilon.is_finite() {
        return Err(Error::Precondition("epsilon must be positive"));
    }
    if first_violation(g).is_some() {
        return Err(Error::NotCompressed);
    }
    let threshold = epsilon * g.dim() as f64;
    let a = degree_core_chain(g, threshold)?;
    let depth = a.len() - 1;
    let (b, m, c, d, e) = blocks(g, &a);
    let stars = star_balls(&c, &d, depth);
    Ok(PartitionCertificate { epsilon, dim: g.dim(), depth, a, b, m, c, d, e, stars, trivial: depth == 0 })
}

/// One checked claim: passes, or fails with a witness.
#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub witness: Option<String>,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Check { name, witness: None }
    }

    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }

    fn fail(&mut self, witness: String) {
        if self.witness.is_none() {
            self.witness = Some(witness);
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PartitionReport {
    /// The four parts: disjoint star-balls, blocks partition `V(G)`, edge
    /// cover, degree bound.
    pub parts: [Check; 4],
    /// The seven structural assertions behind the parts.
    pub assertions: [Check; 7],
}

impl PartitionReport {
    pub fn all_passed(&self) -> bool {
        self.parts.iter().chain(&self.assertions).all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.parts.iter().chain(&self.assertions).filter(|c| !c.passed())
    }
}

fn block_union(cert: &PartitionCertificate, k: usize) -> VertexFamily {
    family_of(cert.dim, cert.c[k].members().iter().chain(cert.d[k].members()).copied())
}

fn max_degree(h: &VertexFamily) -> (usize, Option<Vertex>) {
    h.members()
        .iter()
        .map(|&v| (neighbours_within(h, v), Some(v)))
        .max_by_key(|&(deg, _)| deg)
        .unwrap_or((0, None))
}

fn compare_sets(check: &mut Check, label: &str, k: usize, got: &VertexFamily, want: &VertexFamily) {
    if let Some(v) = got.members().iter().find(|&&v| !want.contains(v)) {
        check.fail(format!("{v} is in {label}_{k} but its definition excludes it"));
    } else if let Some(v) = want.members().iter().find(|&&v| !got.contains(v)) {
        check.fail(format!("{v} is missing from {label}_{k}"));
    }
}

// (j, T) pairs with T ∈ D_j, S = T ∪ {t_{j+1}, …, t_k}, t_l > m_{l-1}, all distinct
fn representations(cert: &PartitionCertificate, s: Vertex, k: usize) -> usize {
    let mut count = 0;
    for j in 0..=k {
        for &t in cert.d[j].members() {
            if !t.is_subset(s) {
                continue;
            }
            let rest: Vec<u32> = s.difference(t).elements().collect();
            if rest.len() != k - j {
                continue;
            }
            // ascending elements against ascending thresholds decide a matching
            if rest.iter().enumerate().all(|(q, &x)| x > cert.m[j + q]) {
                count += 1;
            }
        }
    }
    count
}

/// Rechecks a certificate against the family it was built from.
pub fn verify_partition(cert: &PartitionCertificate, g: &VertexFamily) -> PartitionReport {
    let mut parts = [
        Check::new("star-balls pairwise disjoint"),
        Check::new("blocks C_k ∪ D_k partition V(G)"),
        Check::new("edges covered by star-balls and blocks"),
        Check::new("block max degree ≤ εd"),
    ];
    let mut assertions = [
        Check::new("unique representation"),
        Check::new("E_k compressed"),
        Check::new("no edges from E_k to D_{k+1} ∪ C_{k+2} ∪ D_{k+2}"),
        Check::new("(C_k ∪ D_k) ∩ E_{k-1} = ∅"),
        Check::new("block max degree ≤ m_k ≤ εd"),
        Check::new("A_{M-k} ⊆ E_k and E_M = V(G)"),
        Check::new("star-balls pairwise disjoint"),
    ];
    let depth = cert.depth;
    let dim = cert.dim;
    let threshold = cert.threshold();
    let shape_ok = cert.dim == g.dim()
        && [cert.a.len(), cert.b.len(), cert.m.len(), cert.c.len(), cert.d.len(), cert.e.len()]
            .iter()
            .all(|&l| l == depth + 1);
    if !shape_ok {
        for c in parts.iter_mut().chain(assertions.iter_mut()) {
            c.fail(String::from("certificate shape does not match the family"));
        }
        return PartitionReport { parts, assertions };
    }

    // Part 2: the recursive definitions, then disjointness and cover.
    {
        let p = &mut parts[1];
        match degree_core_chain(g, threshold) {
            Ok(a) if a == cert.a => {}
            _ => p.fail(String::from("A-chain differs from the εd-degree cores of V(G)")),
        }
        let (b, m, _, _, _) = blocks(g, &cert.a);
        if b != cert.b || m != cert.m {
            p.fail(format!("thresholds m = {:?} differ from the definition {:?}", cert.m, m));
        }
        let m0 = cert.m[0];
        let d0 = family_of(dim, g.members().iter().copied().filter(|v| v.max_element().unwrap_or(0) <= m0));
        compare_sets(p, "D", 0, &cert.d[0], &d0);
        if let Some(v) = cert.c[0].members().first() {
            p.fail(format!("{v} is in C_0, which must be empty"));
        }
        for k in 1..=depth {
            let prev_m = cert.m[k - 1];
            let ck = family_of(
                dim,
                cert.c[k - 1]
                    .members()
                    .iter()
                    .chain(cert.d[k - 1].members())
                    .flat_map(|&s| (prev_m + 1..=dim).filter(move |&t| !s.contains(t)).map(move |t| s.with(t)))
                    .filter(|&v| g.contains(v)),
            );
            compare_sets(p, "C", k, &cert.c[k], &ck);
            let mk = cert.m[k];
            let dk = family_of(
                dim,
                g.members()
                    .iter()
                    .copied()
                    .filter(|v| v.max_element().unwrap_or(0) <= mk)
                    .filter(|&v| !cert.e[k - 1].contains(v) && !cert.c[k].contains(v)),
            );
            compare_sets(p, "D", k, &cert.d[k], &dk);
        }
        for k in 0..=depth {
            let ek = family_of(dim, (0..=k).flat_map(|j| cert.c[j].members().iter().chain(cert.d[j].members())).copied());
            compare_sets(p, "E", k, &cert.e[k], &ek);
        }
        let mut seen: BTreeSet<Vertex> = BTreeSet::new();
        for k in 0..=depth {
            for &v in cert.c[k].members().iter().chain(cert.d[k].members()) {
                if !g.contains(v) {
                    p.fail(format!("{v} in block {k} is not a vertex of G"));
                }
                if !seen.insert(v) {
                    p.fail(format!("{v} lies in two blocks"));
                }
            }
        }
        if let Some(v) = g.members().iter().find(|v| !seen.contains(v)) {
            p.fail(format!("{v} lies in no block"));
        }
    }

    // Part 1 / Assertion 7: star-balls pairwise disjoint.
    {
        let mut owner: BTreeSet<Vertex> = BTreeSet::new();
        let mut witness = None;
        for ball in &cert.stars {
            if !cert.d[ball.k].contains(ball.centre) {
                witness.get_or_insert_with(|| format!("star-ball centre {} is not in D_{}", ball.centre, ball.k));
            }
            for &v in ball.members.members() {
                if !owner.insert(v) && witness.is_none() {
                    witness = Some(format!("{v} lies in two star-balls"));
                }
            }
        }
        let expected: usize = (0..depth).map(|k| cert.d[k].len()).sum();
        if cert.stars.len() != expected {
            witness.get_or_insert_with(|| format!("{} star-balls for {} centres", cert.stars.len(), expected));
        }
        if let Some(w) = witness {
            parts[0].fail(w.clone());
            assertions[6].fail(w);
        }
    }

    let unions: Vec<VertexFamily> = (0..=depth).map(|k| block_union(cert, k)).collect();

    // Part 3: every edge of G inside one star-ball or one block.
    for &u in g.members() {
        for t in 1..=dim {
            let v = u.with(t);
            if v == u || !g.contains(v) {
                continue;
            }
            let in_block = unions.iter().any(|h| h.contains(u) && h.contains(v));
            let in_ball = in_block || cert.stars.iter().any(|s| s.members.contains(u) && s.members.contains(v));
            if !in_ball {
                parts[2].fail(format!("edge {u} – {v} is in no star-ball and no block"));
            }
        }
    }

    // Part 4 and Assertion 5: degree bounds.
    for (k, h) in unions.iter().enumerate() {
        let (deg, at) = max_degree(h);
        let at = at.map(|v| format!("{v}")).unwrap_or_default();
        if deg as f64 > threshold {
            parts[3].fail(format!("{at} has degree {deg} > εd = {threshold} in block {k}"));
        }
        if deg as u32 > cert.m[k] {
            assertions[4].fail(format!("{at} has degree {deg} > m_{k} = {} in block {k}", cert.m[k]));
        }
        if cert.m[k] as f64 > threshold {
            assertions[4].fail(format!("m_{k} = {} > εd = {threshold}", cert.m[k]));
        }
    }

    // Assertion 1: unique representation.
    for k in 0..=depth {
        for &s in unions[k].members() {
            let r = representations(cert, s, k);
            if r != 1 {
                assertions[0].fail(format!("{s} in block {k} has {r} representations"));
            }
        }
    }

    // Assertion 2: E_k compressed.
    for (k, ek) in cert.e.iter().enumerate() {
        if let Some(step) = first_violation(ek) {
            assertions[1].fail(format!("E_{k} is not fixed by {step}"));
        }
    }

    // Assertion 3: no edges from E_k to D_{k+1} ∪ C_{k+2} ∪ D_{k+2}.
    for k in 0..=depth {
        let mut far: Vec<Vertex> = Vec::new();
        if k < depth {
            far.extend(cert.d[k + 1].members());
        }
        if k + 2 <= depth {
            far.extend(cert.c[k + 2].members());
            far.extend(cert.d[k + 2].members());
        }
        for &v in &far {
            if let Some(t) = (1..=dim).find(|&t| cert.e[k].contains(v.toggle(t))) {
                assertions[2].fail(format!("edge {} – {v} leaves E_{k}", v.toggle(t)));
            }
        }
    }

    // Assertion 4: (C_k ∪ D_k) ∩ E_{k-1} = ∅.
    for k in 1..=depth {
        if let Some(v) = unions[k].members().iter().find(|&&v| cert.e[k - 1].contains(v)) {
            assertions[3].fail(format!("{v} is in block {k} and in E_{}", k - 1));
        }
    }

    // Assertion 6: A_{M-k} ⊆ E_k, E_M = V(G).
    for k in 0..=depth {
        if let Some(v) = cert.a[depth - k].members().iter().find(|&&v| !cert.e[k].contains(v)) {
            assertions[5].fail(format!("{v} is in A_{} but not in E_{k}", depth - k));
        }
    }
    if cert.e[depth] != *g {
        assertions[5].fail(String::from("E_M differs from V(G)"));
    }

    PartitionReport { parts, assertions }
}
