//! Compression operators on weight vectors and vertex families.
//!
//! `C_{U,V}` pairs every `S` with `V ⊆ S`, `U ∩ S = ∅` with its partner
//! `S △ (U ∪ V)` and moves the larger of the two weights onto `S`. On an
//! indicator vector this is the usual set compression: members on the `U`
//! side move to the `V` side when that spot is free. Neither the singleton
//! down-compressions `C_{{i},∅}` nor the shifts `C_{{j},{i}}` decrease
//! `⟨A(Q_d)v, v⟩`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::family::{check_dim, VertexFamily};
use crate::vertex::Vertex;

/// Real weights on the vertices of `Q_d`; absent vertices have weight 0.
#[derive(Clone, PartialEq, Debug)]
pub struct WeightVector {
    dim: u32,
    weights: BTreeMap<Vertex, f64>,
}

impl WeightVector {
    pub fn new(dim: u32) -> Result<Self> {
        check_dim(dim)?;
        Ok(WeightVector { dim, weights: BTreeMap::new() })
    }

    /// Builds a vector from `(vertex, weight)` pairs; zero weights are dropped.
    pub fn from_entries(dim: u32, entries: impl IntoIterator<Item = (Vertex, f64)>) -> Result<Self> {
        let mut w = WeightVector::new(dim)?;
        for (v, x) in entries {
            if !v.fits(dim) {
                return Err(Error::VertexOutsideCube { vertex: v, dim });
            }
            if w.weights.contains_key(&v) {
                return Err(Error::DuplicateVertex(v));
            }
            w.set(v, x);
        }
        Ok(w)
    }

    /// Indicator vector of a family.
    pub fn indicator(f: &VertexFamily) -> Self {
        WeightVector {
            dim: f.dim(),
            weights: f.members().iter().map(|&v| (v, 1.0)).collect(),
        }
    }

    /// Uniform unit vector on a family.
    pub fn uniform(f: &VertexFamily) -> Self {
        let w = 1.0 / libm::sqrt(f.len().max(1) as f64);
        WeightVector {
            dim: f.dim(),
            weights: f.members().iter().map(|&v| (v, w)).collect(),
        }
    }

    #[inline]
    pub fn dim(&self) -> u32 {
        self.dim
    }

    #[inline]
    pub fn get(&self, v: Vertex) -> f64 {
        self.weights.get(&v).copied().unwrap_or(0.0)
    }

    pub fn set(&mut self, v: Vertex, x: f64) {
        debug_assert!(v.fits(self.dim));
        if x == 0.0 {
            self.weights.remove(&v);
        } else {
            self.weights.insert(v, x);
        }
    }

    /// Nonzero entries in binary order.
    pub fn iter(&self) -> impl Iterator<Item = (Vertex, f64)> + '_ {
        self.weights.iter().map(|(&v, &x)| (v, x))
    }

    pub fn support_len(&self) -> usize {
        self.weights.len()
    }

    pub fn support(&self) -> VertexFamily {
        VertexFamily::from_sorted_unchecked(self.dim, self.weights.keys().copied().collect())
    }

    pub fn norm_squared(&self) -> f64 {
        self.weights.values().map(|x| x * x).sum()
    }

    pub fn norm(&self) -> f64 {
        libm::sqrt(self.norm_squared())
    }

    /// Nonzero weights sorted ascending (by total order on floats).
    pub fn sorted_weights(&self) -> Vec<f64> {
        let mut w: Vec<f64> = self.weights.values().copied().collect();
        w.sort_by(f64::total_cmp);
        w
    }
}

/// One compression step.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum CompressionStep {
    /// `C_{U,V}`: weight moves from the `U` side to the `V` side.
    Uv { u: Vertex, v: Vertex },
    /// Binary `i`-compression: each half of the cube split by coordinate `i`
    /// is rearranged to be decreasing in binary order.
    Binary(u32),
}

impl CompressionStep {
    /// `C_{{i},∅}`.
    pub fn down(i: u32) -> Self {
        CompressionStep::Uv { u: Vertex::singleton(i), v: Vertex::EMPTY }
    }

    /// Shift from coordinate `from` to coordinate `to`, i.e. `C_{{from},{to}}`.
    pub fn shift(from: u32, to: u32) -> Self {
        CompressionStep::Uv { u: Vertex::singleton(from), v: Vertex::singleton(to) }
    }

    fn validate(&self, dim: u32) -> Result<()> {
        match *self {
            CompressionStep::Uv { u, v } => {
                if !u.is_disjoint(v) {
                    return Err(Error::OverlappingCompression { u, v });
                }
                for w in [u, v] {
                    if !w.fits(dim) {
                        return Err(Error::VertexOutsideCube { vertex: w, dim });
                    }
                }
                Ok(())
            }
            CompressionStep::Binary(i) => {
                if i == 0 || i > dim {
                    return Err(Error::OutOfRange { what: "coordinate", value: i as u64, max: dim as u64 });
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for CompressionStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CompressionStep::Uv { u, v } => write!(f, "C_{{{u},{v}}}"),
            CompressionStep::Binary(i) => write!(f, "C_{i}"),
        }
    }
}

/// Which steps a fixpoint run sweeps over.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Schedule {
    /// Singleton down-compressions and shifts; these never lower the Rayleigh quotient.
    #[default]
    Spectral,
    /// Additionally the binary compressions `C_i`.
    WithBinary,
}

impl Schedule {
    /// Steps of one sweep in application order.
    pub fn sweep(self, d: u32) -> Vec<CompressionStep> {
        let mut steps: Vec<CompressionStep> = (1..=d).map(CompressionStep::down).collect();
        for i in 1..=d {
            for j in i + 1..=d {
                steps.push(CompressionStep::shift(j, i));
            }
        }
        if self == Schedule::WithBinary {
            steps.extend((1..=d).map(CompressionStep::Binary));
        }
        steps
    }
}

/// `C_{U,V}` on a weight vector.
pub fn compress_vector_uv(x: &WeightVector, u: Vertex, v: Vertex) -> Result<WeightVector> {
    CompressionStep::Uv { u, v }.validate(x.dim)?;
    Ok(apply_uv_vector(x, u, v))
}

fn apply_uv_vector(x: &WeightVector, u: Vertex, v: Vertex) -> WeightVector {
    let flip = u.union(v);
    let mut out = x.clone();
    for &s in x.weights.keys() {
        // normalise to the max-side representative
        let hi = if v.is_subset(s) && u.is_disjoint(s) {
            s
        } else if u.is_subset(s) && v.is_disjoint(s) {
            s.symmetric_difference(flip)
        } else {
            continue;
        };
        let lo = hi.symmetric_difference(flip);
        let (a, b) = (x.get(hi), x.get(lo));
        if b > a {
            out.set(hi, b);
            out.set(lo, a);
        }
    }
    out
}

/// `C_{U,V}` on a family.
pub fn compress_family_uv(f: &VertexFamily, u: Vertex, v: Vertex) -> Result<VertexFamily> {
    CompressionStep::Uv { u, v }.validate(f.dim())?;
    Ok(apply_uv_family(f, u, v))
}

fn apply_uv_family(f: &VertexFamily, u: Vertex, v: Vertex) -> VertexFamily {
    let flip = u.union(v);
    let mut members: Vec<Vertex> = f
        .members()
        .iter()
        .map(|&s| {
            if u.is_subset(s) && v.is_disjoint(s) {
                let target = s.symmetric_difference(flip);
                if !f.contains(target) {
                    return target;
                }
            }
            s
        })
        .collect();
    members.sort_unstable();
    VertexFamily::from_sorted_unchecked(f.dim(), members)
}

/// Vertex of rank `k` (in binary order) within the half of `Q_d` where
/// coordinate `i` is absent (`upper = false`) or present (`upper = true`).
fn half_vertex(k: u64, i: u32, upper: bool) -> Vertex {
    let p = i - 1;
    let low = k & ((1u64 << p) - 1);
    let high = if p >= 63 { 0 } else { (k >> p) << (p + 1) };
    let bit = if upper { 1u64 << p } else { 0 };
    Vertex::from_mask(low | high | bit)
}

/// Binary `i`-compression of a weight vector.
pub fn binary_compression(x: &WeightVector, i: u32) -> Result<WeightVector> {
    CompressionStep::Binary(i).validate(x.dim)?;
    Ok(apply_binary_vector(x, i))
}

fn apply_binary_vector(x: &WeightVector, i: u32) -> WeightVector {
    let half_size: u64 = if x.dim >= 64 { 1u64 << 63 } else { 1u64 << (x.dim - 1) };
    let mut out = WeightVector { dim: x.dim, weights: BTreeMap::new() };
    for upper in [false, true] {
        let mut w: Vec<f64> = x
            .iter()
            .filter(|(s, _)| s.contains(i) == upper)
            .map(|(_, a)| a)
            .collect();
        // decreasing; positives first, negatives last, zeros (absent) between
        w.sort_by(|a, b| b.total_cmp(a));
        let positives = w.iter().take_while(|&&a| a > 0.0).count();
        for (k, &a) in w[..positives].iter().enumerate() {
            out.weights.insert(half_vertex(k as u64, i, upper), a);
        }
        let negatives = &w[positives..];
        let start = half_size - negatives.len() as u64;
        for (k, &a) in negatives.iter().enumerate() {
            out.weights.insert(half_vertex(start + k as u64, i, upper), a);
        }
    }
    out
}

fn apply_binary_family(f: &VertexFamily, i: u32) -> VertexFamily {
    let lower = f.members().iter().filter(|s| !s.contains(i)).count() as u64;
    let upper = f.len() as u64 - lower;
    let mut members: Vec<Vertex> = (0..lower)
        .map(|k| half_vertex(k, i, false))
        .chain((0..upper).map(|k| half_vertex(k, i, true)))
        .collect();
    members.sort_unstable();
    VertexFamily::from_sorted_unchecked(f.dim(), members)
}

/// `⟨A(Q_d)v, v⟩`: the sum over cube edges `(S, S+j)` of `2·v_S·v_{S+j}`.
pub fn rayleigh(x: &WeightVector) -> f64 {
    let mut total = 0.0;
    for (s, a) in x.iter() {
        for j in 1..=x.dim {
            if !s.contains(j) {
                let b = x.get(s.with(j));
                if b != 0.0 {
                    total += 2.0 * a * b;
                }
            }
        }
    }
    total
}

/// Objects the compression operators act on.
pub trait Compressible: Sized + PartialEq {
    fn dim(&self) -> u32;

    /// Applies one step; the step is assumed valid for `self.dim()`.
    fn apply_step(&self, step: CompressionStep) -> Self;

    /// Integer potential that every changing step strictly decreases.
    fn potential(&self) -> i128;

    /// Validates and applies one step.
    fn compress(&self, step: CompressionStep) -> Result<Self> {
        step.validate(self.dim())?;
        Ok(self.apply_step(step))
    }
}

impl Compressible for WeightVector {
    fn dim(&self) -> u32 {
        self.dim
    }

    fn apply_step(&self, step: CompressionStep) -> Self {
        match step {
            CompressionStep::Uv { u, v } => apply_uv_vector(self, u, v),
            CompressionStep::Binary(i) => apply_binary_vector(self, i),
        }
    }

    /// `Σ_S mask(S) · rank(v_S)` where `rank` is the dense rank of the
    /// weight among distinct values, with weight 0 at rank 0.
    fn potential(&self) -> i128 {
        let w = self.sorted_weights();
        let mut distinct: Vec<f64> = Vec::with_capacity(w.len() + 1);
        distinct.push(0.0);
        distinct.extend(w);
        distinct.sort_by(f64::total_cmp);
        distinct.dedup();
        let zero = distinct.iter().position(|&a| a == 0.0).unwrap() as i128;
        self.iter()
            .map(|(s, a)| {
                let r = distinct.binary_search_by(|p| p.total_cmp(&a)).unwrap() as i128 - zero;
                s.mask() as i128 * r
            })
            .sum()
    }
}

impl Compressible for VertexFamily {
    fn dim(&self) -> u32 {
        VertexFamily::dim(self)
    }

    fn apply_step(&self, step: CompressionStep) -> Self {
        match step {
            CompressionStep::Uv { u, v } => apply_uv_family(self, u, v),
            CompressionStep::Binary(i) => apply_binary_family(self, i),
        }
    }

    fn potential(&self) -> i128 {
        self.members().iter().map(|s| s.mask() as i128).sum()
    }
}

/// Result of a fixpoint run: the compressed object and every step that changed it.
#[derive(Clone, Debug)]
pub struct Compressed<T> {
    pub value: T,
    pub steps: Vec<CompressionStep>,
    pub sweeps: usize,
}

/// Iterates the sweep of `schedule` until a full sweep changes nothing.
///
/// Panics if a changing step fails to lower the potential; that would mean
/// the operators are broken, not that the input is bad.
pub fn fully_compress_with<T: Compressible + Clone>(x: &T, schedule: Schedule) -> Compressed<T> {
    let sweep = schedule.sweep(x.dim());
    let mut value = x.clone();
    let mut potential = value.potential();
    let mut steps = Vec::new();
    let mut sweeps = 0;
    loop {
        sweeps += 1;
        let mut changed = false;
        for &step in &sweep {
            let next = value.apply_step(step);
            if next != value {
                let p = next.potential();
                assert!(p < potential, "potential did not decrease under {step}");
                potential = p;
                value = next;
                steps.push(step);
                changed = true;
            }
        }
        if !changed {
            return Compressed { value, steps, sweeps };
        }
    }
}

/// Fixpoint of all singleton down-compressions and shifts.
pub fn fully_compress<T: Compressible + Clone>(x: &T) -> Compressed<T> {
    fully_compress_with(x, Schedule::Spectral)
}

/// First step (shifts first, then down-compressions) that changes `x`.
pub fn first_violation<T: Compressible>(x: &T) -> Option<CompressionStep> {
    let d = x.dim();
    let sweep = Schedule::Spectral.sweep(d);
    let (downs, shifts) = sweep.split_at(d as usize);
    shifts
        .iter()
        .chain(downs)
        .copied()
        .find(|&step| x.apply_step(step) != *x)
}

/// Fixpoint of every `C_{{i},∅}` and every shift toward a smaller coordinate.
pub fn is_compressed<T: Compressible>(x: &T) -> bool {
    first_violation(x).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{hamming_ball, initial_segment};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn v(elems: &[u32]) -> Vertex {
        Vertex::from_elements(elems.iter().copied())
    }

    fn fam(d: u32, sets: &[&[u32]]) -> VertexFamily {
        VertexFamily::new(d, sets.iter().map(|s| v(s))).unwrap()
    }

    fn random_vector(rng: &mut ChaCha8Rng, d: u32, density: f64) -> WeightVector {
        let mut entries = Vec::new();
        for m in 0..1u64 << d {
            if rng.gen_bool(density) {
                entries.push((Vertex::from_mask(m), rng.gen_range(-1.0..1.0)));
            }
        }
        WeightVector::from_entries(d, entries).unwrap()
    }

    #[test]
    fn uv_single_swap_toward_empty_set() {
        let x = WeightVector::from_entries(1, [(v(&[1]), 1.0)]).unwrap();
        let y = compress_vector_uv(&x, v(&[1]), Vertex::EMPTY).unwrap();
        assert_eq!(y, WeightVector::from_entries(1, [(v(&[]), 1.0)]).unwrap());
    }

    #[test]
    fn uv_fixpoint_is_unchanged() {
        let x = WeightVector::from_entries(2, [(v(&[]), 3.0), (v(&[1]), 2.0), (v(&[2]), 2.0), (v(&[1, 2]), 1.0)])
            .unwrap();
        for step in Schedule::Spectral.sweep(2) {
            assert_eq!(x.compress(step).unwrap(), x);
        }
    }

    #[test]
    fn uv_preserves_multiset() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let x = random_vector(&mut rng, 3, 0.7);
            let y = compress_vector_uv(&x, v(&[2]), v(&[1])).unwrap();
            assert_eq!(x.sorted_weights(), y.sorted_weights());
            assert_eq!(x.support_len(), y.support_len());
        }
    }

    #[test]
    fn overlapping_sets_rejected() {
        let x = WeightVector::new(3).unwrap();
        assert!(matches!(
            compress_vector_uv(&x, v(&[1, 2]), v(&[2])),
            Err(Error::OverlappingCompression { .. })
        ));
        let f = fam(3, &[&[1]]);
        assert!(compress_family_uv(&f, v(&[1]), v(&[1])).is_err());
    }

    #[test]
    fn family_uv_examples() {
        assert_eq!(compress_family_uv(&fam(1, &[&[1]]), v(&[1]), Vertex::EMPTY).unwrap(), fam(1, &[&[]]));
        assert_eq!(
            compress_family_uv(&fam(2, &[&[2], &[1, 2]]), v(&[2]), v(&[1])).unwrap(),
            fam(2, &[&[1], &[1, 2]])
        );
        let ball = hamming_ball(5, 2).unwrap();
        for step in Schedule::Spectral.sweep(5) {
            assert_eq!(ball.compress(step).unwrap(), ball);
        }
    }

    #[test]
    fn family_uv_equals_indicator_route() {
        // every family in Q_3, every valid (U, V) pair
        for bits in 0u32..256 {
            let f = VertexFamily::new(3, (0..8u64).filter(|m| bits >> m & 1 == 1).map(Vertex::from_mask)).unwrap();
            for um in 0..8u64 {
                for vm in 0..8u64 {
                    if um & vm != 0 {
                        continue;
                    }
                    let (u, w) = (Vertex::from_mask(um), Vertex::from_mask(vm));
                    let by_set = compress_family_uv(&f, u, w).unwrap();
                    let by_vec = compress_vector_uv(&WeightVector::indicator(&f), u, w).unwrap().support();
                    assert_eq!(by_set, by_vec);
                    assert_eq!(by_set.len(), f.len());
                }
            }
        }
    }

    #[test]
    fn binary_compression_example() {
        let x = WeightVector::from_entries(2, [(v(&[1]), 3.0), (v(&[2]), 5.0), (v(&[1, 2]), 1.0)]).unwrap();
        let y = binary_compression(&x, 2).unwrap();
        let expected = WeightVector::from_entries(2, [(v(&[]), 3.0), (v(&[2]), 5.0), (v(&[1, 2]), 1.0)]).unwrap();
        assert_eq!(y, expected);
        assert!(binary_compression(&x, 3).is_err());
        assert!(binary_compression(&x, 0).is_err());
    }

    #[test]
    fn binary_compression_constant_halves_and_idempotence() {
        let full = VertexFamily::full_cube(3).unwrap();
        let x = WeightVector::from_entries(3, full.members().iter().map(|&s| (s, if s.contains(2) { 2.0 } else { 1.0 })))
            .unwrap();
        assert_eq!(binary_compression(&x, 2).unwrap(), x);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let x = random_vector(&mut rng, 4, 0.5);
            for i in 1..=4 {
                let once = binary_compression(&x, i).unwrap();
                assert_eq!(binary_compression(&once, i).unwrap(), once);
                assert_eq!(once.sorted_weights(), x.sorted_weights());
            }
        }
    }

    #[test]
    fn binary_compression_brute_force() {
        // oracle: sort every vertex of the half explicitly, including zeros
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let x = random_vector(&mut rng, 4, 0.4);
            for i in 1..=4u32 {
                let mut expected = WeightVector::new(4).unwrap();
                for upper in [false, true] {
                    let verts: Vec<Vertex> =
                        (0..16u64).map(Vertex::from_mask).filter(|s| s.contains(i) == upper).collect();
                    let mut w: Vec<f64> = verts.iter().map(|&s| x.get(s)).collect();
                    w.sort_by(|a, b| b.total_cmp(a));
                    for (s, a) in verts.into_iter().zip(w) {
                        expected.set(s, a);
                    }
                }
                assert_eq!(binary_compression(&x, i).unwrap(), expected);
            }
        }
    }

    #[test]
    fn binary_compression_high_dimension() {
        let x = WeightVector::from_entries(64, [(v(&[64]), -1.0), (v(&[3, 5]), 2.0)]).unwrap();
        let y = binary_compression(&x, 64).unwrap();
        assert_eq!(y.get(v(&[64])), 0.0);
        assert_eq!(y.get(Vertex::EMPTY), 2.0);
        assert_eq!(y.get(Vertex::from_mask(u64::MAX)), -1.0);
    }

    #[test]
    fn rayleigh_examples() {
        let star = hamming_ball(4, 1).unwrap();
        assert!((rayleigh(&WeightVector::uniform(&star)) - 8.0 / 5.0).abs() < 1e-15);
        let single = WeightVector::from_entries(3, [(v(&[2]), 0.7)]).unwrap();
        assert_eq!(rayleigh(&single), 0.0);
        let q2 = initial_segment(4, 2).unwrap();
        assert!((rayleigh(&WeightVector::uniform(&q2)) - 2.0).abs() < 1e-15);
    }

    #[test]
    fn fully_compress_examples() {
        for (d, i) in [(4, 1), (5, 2), (6, 3)] {
            let ball = hamming_ball(d, i).unwrap();
            let out = fully_compress(&ball);
            assert_eq!(out.value, ball);
            assert!(out.steps.is_empty());
        }
        assert_eq!(fully_compress(&fam(3, &[&[3]])).value, fam(3, &[&[]]));
        let target = fam(3, &[&[], &[1]]);
        for a in 0..8u64 {
            for b in a + 1..8 {
                let f = VertexFamily::new(3, [Vertex::from_mask(a), Vertex::from_mask(b)]).unwrap();
                assert_eq!(fully_compress(&f).value, target);
            }
        }
    }

    #[test]
    fn is_compressed_examples() {
        assert!(is_compressed(&hamming_ball(5, 2).unwrap()));
        for d in 1..=5 {
            for n in 0..=(1u64 << d) {
                assert!(is_compressed(&initial_segment(n, d).unwrap()));
            }
        }
        assert_eq!(first_violation(&fam(2, &[&[2]])), Some(CompressionStep::shift(2, 1)));
        assert_eq!(CompressionStep::shift(2, 1).to_string(), "C_{{2},{1}}");
    }

    #[test]
    fn fully_compressed_families_are_down_closed_and_idempotent() {
        for d in 1..=4u32 {
            let n = 1u64 << d;
            for bits in 0u64..(1u64 << n) {
                let f = VertexFamily::new(d, (0..n).filter(|m| bits >> m & 1 == 1).map(Vertex::from_mask)).unwrap();
                let c = fully_compress(&f).value;
                assert!(c.is_down_closed());
                assert!(is_compressed(&c));
                assert_eq!(c.len(), f.len());
                assert_eq!(fully_compress(&c).value, c);
            }
        }
    }

    #[test]
    fn singleton_and_shift_fixpoints_are_fixed_by_every_down_compression() {
        for d in 1..=4u32 {
            let n = 1u64 << d;
            for bits in 0u64..(1u64 << n) {
                let f = VertexFamily::new(d, (0..n).filter(|m| bits >> m & 1 == 1).map(Vertex::from_mask)).unwrap();
                if !is_compressed(&f) {
                    continue;
                }
                for u in 1..n {
                    let c = compress_family_uv(&f, Vertex::from_mask(u), Vertex::EMPTY).unwrap();
                    assert_eq!(c, f);
                }
            }
        }
    }

    #[test]
    fn fully_compress_vector_raises_rayleigh() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let x = random_vector(&mut rng, 5, 0.5);
            let out = fully_compress(&x);
            assert!(rayleigh(&out.value) >= rayleigh(&x) - 1e-12);
            assert_eq!(out.value.sorted_weights(), x.sorted_weights());
            assert!(is_compressed(&out.value));
            assert_eq!(fully_compress(&out.value).value, out.value);
        }
    }

    #[test]
    fn binary_schedule_reaches_initial_like_families() {
        let ball = hamming_ball(4, 2).unwrap();
        let out = fully_compress_with(&ball, Schedule::WithBinary);
        assert_ne!(out.value, ball);
        assert_eq!(out.value.len(), ball.len());
        for i in 1..=4 {
            assert_eq!(out.value.compress(CompressionStep::Binary(i)).unwrap(), out.value);
        }
    }
}
