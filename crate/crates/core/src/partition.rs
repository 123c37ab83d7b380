//! Integer partitions stored as cycle types.
//!
//! A [`CycleType`] is the multiplicity map `part -> count`, so two cycle types
//! describing the same multiset compare equal structurally. Enumeration is lazy
//! and yields partitions in lexicographically decreasing order of their part
//! lists, e.g. `4, 3+1, 2+2, 2+1+1, 1+1+1+1`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_even(self) -> bool {
        self == Parity::Even
    }
}

impl std::ops::BitXor for Parity {
    type Output = Parity;

    fn bitxor(self, rhs: Parity) -> Parity {
        if self == rhs {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Cycle type of a permutation: cycle length -> number of cycles of that length.
///
/// Fixed points may be recorded as parts equal to 1, but most callers leave
/// them implicit and pass the group degree separately.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType {
    parts: BTreeMap<usize, usize>,
}

impl CycleType {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a cycle type from a list of parts in any order. Zero parts are ignored.
    pub fn from_parts<I: IntoIterator<Item = usize>>(parts: I) -> Self {
        let mut ct = Self::new();
        for p in parts {
            ct.add_cycles(p, 1);
        }
        ct
    }

    pub fn add_cycles(&mut self, len: usize, count: usize) {
        if len == 0 || count == 0 {
            return;
        }
        *self.parts.entry(len).or_insert(0) += count;
    }

    pub fn multiplicity(&self, len: usize) -> usize {
        self.parts.get(&len).copied().unwrap_or(0)
    }

    /// `(length, multiplicity)` pairs in increasing length.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts.iter().map(|(&k, &m)| (k, m))
    }

    /// Sum of all parts, i.e. the number of points the cycles cover.
    pub fn support(&self) -> usize {
        self.parts.iter().map(|(k, m)| k * m).sum()
    }

    /// Number of parts counted with multiplicity.
    pub fn num_parts(&self) -> usize {
        self.parts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn has_fixed_points(&self) -> bool {
        self.parts.contains_key(&1)
    }

    pub fn largest_part(&self) -> Option<usize> {
        self.parts.keys().next_back().copied()
    }

    /// Parts in decreasing order, with multiplicity.
    pub fn to_parts(&self) -> Vec<usize> {
        self.parts.iter().rev().flat_map(|(&k, &m)| std::iter::repeat_n(k, m)).collect()
    }

    /// Multiset union.
    pub fn union(&self, other: &CycleType) -> CycleType {
        let mut out = self.clone();
        for (k, m) in other.iter() {
            out.add_cycles(k, m);
        }
        out
    }

    /// Returns this type with fixed points added so that its support is `n`.
    /// Returns `None` when the support already exceeds `n`.
    pub fn padded(&self, n: usize) -> Option<CycleType> {
        let s = self.support();
        if s > n {
            return None;
        }
        let mut out = self.clone();
        out.add_cycles(1, n - s);
        Some(out)
    }

    pub fn parity(&self) -> Parity {
        parity(self)
    }
}

impl fmt::Debug for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycleType({})", self)
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = self.to_parts();
        if parts.is_empty() {
            return write!(f, "()");
        }
        write!(f, "(")?;
        for (i, p) in parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for CycleType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_parts().serialize(s)
    }
}

impl<'de> Deserialize<'de> for CycleType {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        if parts.contains(&0) {
            return Err(serde::de::Error::custom("cycle lengths must be positive"));
        }
        Ok(CycleType::from_parts(parts))
    }
}

/// Sign of a permutation with cycle type `ct`: even iff support minus the
/// number of cycles is even.
pub fn parity(ct: &CycleType) -> Parity {
    // Each k-cycle is a product of k - 1 transpositions.
    let transpositions: usize = ct.iter().map(|(k, m)| (k - 1) * m).sum();
    if transpositions.is_multiple_of(2) {
        Parity::Even
    } else {
        Parity::Odd
    }
}

/// Lazy iterator over partitions of `total` whose parts are all `>= min_part`.
#[derive(Clone, Debug)]
pub struct Partitions {
    parts: Vec<usize>,
    min_part: usize,
    done: bool,
}

impl Partitions {
    fn new(total: usize, min_part: usize) -> Self {
        debug_assert!(min_part >= 1);
        let mut parts = Vec::new();
        let done = !fill(&mut parts, total, total, min_part);
        Partitions { parts, min_part, done }
    }

    fn advance(&mut self) {
        let k = self.min_part;
        let mut suffix = 0;
        for i in (0..self.parts.len()).rev() {
            suffix += self.parts[i];
            let cur = self.parts[i];
            for c in (k..cur).rev() {
                if fillable(suffix - c, c, k) {
                    self.parts.truncate(i);
                    self.parts.push(c);
                    let ok = fill(&mut self.parts, suffix - c, c, k);
                    debug_assert!(ok);
                    return;
                }
            }
        }
        self.done = true;
    }
}

impl Iterator for Partitions {
    type Item = CycleType;

    fn next(&mut self) -> Option<CycleType> {
        if self.done {
            return None;
        }
        let out = CycleType::from_parts(self.parts.iter().copied());
        self.advance();
        Some(out)
    }
}

/// Whether `rest` can be written as a sum of parts in `[min, max]`.
fn fillable(rest: usize, max: usize, min: usize) -> bool {
    if rest == 0 {
        return true;
    }
    if max < min {
        return false;
    }
    rest.div_ceil(max) * min <= rest
}

/// Appends the lexicographically largest partition of `rest` into parts in
/// `[min, max]`. Returns false if none exists.
fn fill(parts: &mut Vec<usize>, mut rest: usize, mut max: usize, min: usize) -> bool {
    if !fillable(rest, max, min) {
        return false;
    }
    while rest > 0 {
        let x = (min..=max.min(rest))
            .rev()
            .find(|&x| fillable(rest - x, x, min))
            .expect("fillable remainder has a valid next part");
        parts.push(x);
        rest -= x;
        max = x;
    }
    true
}

/// Every partition of `m`, each exactly once, as a cycle type of support `m`.
pub fn partitions(m: usize) -> Partitions {
    Partitions::new(m, 1)
}

/// Partitions of `m` with every part at least 2: cycle types of permutations
/// that move all `m` points of their support.
pub fn fixed_point_free_partitions(m: usize) -> Partitions {
    Partitions::new(m, 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lists(it: Partitions) -> Vec<Vec<usize>> {
        it.map(|c| c.to_parts()).collect()
    }

    #[test]
    fn zero_has_one_empty_partition() {
        let all: Vec<_> = partitions(0).collect();
        assert_eq!(all, vec![CycleType::new()]);
        assert_eq!(all[0].support(), 0);
        assert_eq!(fixed_point_free_partitions(0).count(), 1);
    }

    #[test]
    fn four_in_decreasing_lex_order() {
        assert_eq!(lists(partitions(4)), vec![vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]);
    }

    #[test]
    fn ten_has_forty_two() {
        assert_eq!(partitions(10).count(), 42);
    }

    #[test]
    fn fixed_point_free_small() {
        assert_eq!(fixed_point_free_partitions(1).count(), 0);
        assert_eq!(lists(fixed_point_free_partitions(5)), vec![vec![5], vec![3, 2]]);
        assert_eq!(lists(fixed_point_free_partitions(4)), vec![vec![4], vec![2, 2]]);
        assert_eq!(lists(fixed_point_free_partitions(7)), vec![vec![7], vec![5, 2], vec![4, 3], vec![3, 2, 2]]);
    }

    #[test]
    fn parity_examples() {
        assert_eq!(parity(&CycleType::new()), Parity::Even);
        assert_eq!(parity(&CycleType::from_parts([2])), Parity::Odd);
        assert_eq!(parity(&CycleType::from_parts([3, 2])), Parity::Odd);
        assert_eq!(parity(&CycleType::from_parts([3, 1, 1])), Parity::Even);
    }

    #[test]
    fn multiset_equality_is_structural() {
        assert_eq!(CycleType::from_parts([2, 3, 2]), CycleType::from_parts([3, 2, 2]));
        assert_eq!(CycleType::from_parts([2, 3, 2]).to_string(), "(3,2,2)");
        assert_eq!(CycleType::from_parts([3]).padded(5).unwrap().to_parts(), vec![3, 1, 1]);
        assert!(CycleType::from_parts([3]).padded(2).is_none());
    }

    #[test]
    fn serde_as_part_list() {
        let ct = CycleType::from_parts([2, 5, 2]);
        let json = serde_json::to_string(&ct).unwrap();
        assert_eq!(json, "[5,2,2]");
        let back: CycleType = serde_json::from_str(&json).unwrap();
        assert_eq!(back, ct);
        assert!(serde_json::from_str::<CycleType>("[2,0]").is_err());
    }
}
