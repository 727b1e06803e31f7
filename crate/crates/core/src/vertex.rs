//! Hypercube vertices as bitmasks over 1-based coordinates.

use core::cmp::Ordering;
use core::fmt;

/// Largest supported cube dimension.
pub const MAX_DIM: u32 = 64;

/// A vertex of `Q_d`: a finite subset of `{1..=64}`.
///
/// Element `j` is stored in bit `j - 1`. Comparing the raw masks as integers
/// is exactly the binary order: `S < T` iff `max(S △ T) ∈ T`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Vertex(u64);

impl Vertex {
    pub const EMPTY: Vertex = Vertex(0);

    #[inline]
    pub const fn from_mask(mask: u64) -> Self {
        Vertex(mask)
    }

    #[inline]
    pub const fn mask(self) -> u64 {
        self.0
    }

    /// Builds a vertex from 1-based elements. Panics if an element is outside `1..=64`.
    pub fn from_elements<I: IntoIterator<Item = u32>>(elements: I) -> Self {
        let mut mask = 0u64;
        for e in elements {
            assert!((1..=MAX_DIM).contains(&e), "coordinate {e} outside 1..=64");
            mask |= 1u64 << (e - 1);
        }
        Vertex(mask)
    }

    /// The singleton `{i}`.
    #[inline]
    pub fn singleton(i: u32) -> Self {
        Vertex::from_elements([i])
    }

    #[inline]
    pub const fn contains(self, i: u32) -> bool {
        i >= 1 && i <= MAX_DIM && self.0 & (1u64 << (i - 1)) != 0
    }

    #[inline]
    pub const fn len(self) -> u32 {
        self.0.count_ones()
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Largest element, `None` for the empty set.
    #[inline]
    pub const fn max_element(self) -> Option<u32> {
        if self.0 == 0 {
            None
        } else {
            Some(64 - self.0.leading_zeros())
        }
    }

    #[inline]
    pub const fn union(self, other: Vertex) -> Vertex {
        Vertex(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: Vertex) -> Vertex {
        Vertex(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: Vertex) -> Vertex {
        Vertex(self.0 & !other.0)
    }

    #[inline]
    pub const fn symmetric_difference(self, other: Vertex) -> Vertex {
        Vertex(self.0 ^ other.0)
    }

    #[inline]
    pub const fn is_subset(self, other: Vertex) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn is_disjoint(self, other: Vertex) -> bool {
        self.0 & other.0 == 0
    }

    /// `S + i`.
    #[inline]
    pub fn with(self, i: u32) -> Vertex {
        Vertex(self.0 | Vertex::singleton(i).0)
    }

    /// `S - i`.
    #[inline]
    pub fn without(self, i: u32) -> Vertex {
        Vertex(self.0 & !Vertex::singleton(i).0)
    }

    /// `S △ {i}`.
    #[inline]
    pub fn toggle(self, i: u32) -> Vertex {
        Vertex(self.0 ^ Vertex::singleton(i).0)
    }

    #[inline]
    pub const fn hamming_distance(self, other: Vertex) -> u32 {
        (self.0 ^ other.0).count_ones()
    }

    /// True iff every element lies in `1..=d`.
    #[inline]
    pub const fn fits(self, d: u32) -> bool {
        d >= 64 || self.0 >> d == 0
    }

    /// Ascending iterator over the elements.
    pub fn elements(self) -> Elements {
        Elements(self.0)
    }

    /// Binary string of length `d`; character `j` (1-indexed) is `1` iff `j ∈ S`.
    pub fn write_binary(self, d: u32, out: &mut impl fmt::Write) -> fmt::Result {
        for j in 1..=d {
            out.write_char(if self.contains(j) { '1' } else { '0' })?;
        }
        Ok(())
    }

    /// Parses the binary-string encoding written by [`Vertex::write_binary`].
    pub fn parse_binary(s: &str) -> Option<(Vertex, u32)> {
        let len = s.len();
        if len as u64 > MAX_DIM as u64 {
            return None;
        }
        let mut mask = 0u64;
        for (j, c) in s.bytes().enumerate() {
            match c {
                b'0' => {}
                b'1' => mask |= 1u64 << j,
                _ => return None,
            }
        }
        Some((Vertex(mask), len as u32))
    }
}

/// Total order `S < T` iff `max(S △ T) ∈ T`.
#[inline]
pub fn binary_compare(s: Vertex, t: Vertex) -> Ordering {
    s.0.cmp(&t.0)
}

pub struct Elements(u64);

impl Iterator for Elements {
    type Item = u32;

    #[inline]
    fn next(&mut self) -> Option<u32> {
        if self.0 == 0 {
            return None;
        }
        let tz = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(tz + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

// Vertices print as `{}` or `{1,3}`.
impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, e) in self.elements().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::{String, ToString};
    use alloc::vec::Vec;

    fn v(elems: &[u32]) -> Vertex {
        Vertex::from_elements(elems.iter().copied())
    }

    #[test]
    fn binary_compare_examples() {
        assert_eq!(binary_compare(v(&[]), v(&[1])), Ordering::Less);
        assert_eq!(binary_compare(v(&[1, 2]), v(&[3])), Ordering::Less);
        assert_eq!(binary_compare(v(&[1, 3]), v(&[2, 3])), Ordering::Less);
        assert_eq!(binary_compare(v(&[2, 3]), v(&[2, 3])), Ordering::Equal);
    }

    #[test]
    fn binary_compare_matches_definition_exhaustively() {
        for d in 1..=6u32 {
            let all: Vec<Vertex> = (0..1u64 << d).map(Vertex::from_mask).collect();
            for &s in &all {
                for &t in &all {
                    let expected = if s == t {
                        Ordering::Equal
                    } else if t.contains(s.symmetric_difference(t).max_element().unwrap()) {
                        Ordering::Less
                    } else {
                        Ordering::Greater
                    };
                    assert_eq!(binary_compare(s, t), expected, "{s} vs {t}");
                    assert_eq!(binary_compare(t, s), expected.reverse());
                }
            }
            // transitivity on a sample of triples
            for &a in &all {
                for &b in &all {
                    for &c in all.iter().step_by(3) {
                        if binary_compare(a, b).is_lt() && binary_compare(b, c).is_lt() {
                            assert!(binary_compare(a, c).is_lt());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn display_and_binary_roundtrip() {
        assert_eq!(Vertex::EMPTY.to_string(), "{}");
        assert_eq!(v(&[3, 1]).to_string(), "{1,3}");
        let mut s = String::new();
        v(&[1, 3]).write_binary(4, &mut s).unwrap();
        assert_eq!(s, "1010");
        assert_eq!(Vertex::parse_binary("1010"), Some((v(&[1, 3]), 4)));
        assert_eq!(Vertex::parse_binary("10x0"), None);
    }

    #[test]
    fn set_operations() {
        let a = v(&[1, 2, 5]);
        assert_eq!(a.max_element(), Some(5));
        assert_eq!(Vertex::EMPTY.max_element(), None);
        assert_eq!(a.without(2), v(&[1, 5]));
        assert_eq!(a.with(64).max_element(), Some(64));
        assert!(v(&[1]).is_subset(a));
        assert!(a.fits(5) && !a.fits(4));
        assert_eq!(a.elements().collect::<Vec<_>>(), [1, 2, 5]);
        assert_eq!(a.hamming_distance(v(&[2, 3])), 3);
    }
}
