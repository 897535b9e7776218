//! Bitmask sets over small index ranges (edges, columns, vertices).

use std::fmt;

use serde::{Serialize, Serializer};

/// Maximum number of elements a [`IndexSet`] can hold.
pub const MAX_ELEMENTS: usize = 64;

/// A subset of `0..64`, stored as a bitmask.
///
/// The derived ordering is by mask value; use [`IndexSet::lex_key`] for the
/// lexicographic ordering by sorted element lists.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSet(pub u64);

/// Edge subsets of a digraph, or column subsets of a matrix.
pub type EdgeSet = IndexSet;

impl IndexSet {
    pub const EMPTY: IndexSet = IndexSet(0);

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ELEMENTS);
        if n == MAX_ELEMENTS {
            IndexSet(u64::MAX)
        } else {
            IndexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        IndexSet(1u64 << i)
    }

    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> Self {
        IndexSet(indices.into_iter().fold(0u64, |acc, i| acc | 1u64 << i))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_ELEMENTS && self.0 >> i & 1 == 1
    }

    pub fn insert(self, i: usize) -> Self {
        IndexSet(self.0 | 1u64 << i)
    }

    pub fn remove(self, i: usize) -> Self {
        IndexSet(self.0 & !(1u64 << i))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        IndexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        IndexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        IndexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Sort key realizing the lexicographic order on sorted element lists.
    pub fn lex_key(self) -> Vec<usize> {
        self.to_vec()
    }

    /// All subsets of `0..n` with exactly `k` elements, in lexicographic order.
    pub fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = IndexSet> {
        itertools::Itertools::combinations(0..n, k).map(IndexSet::from_indices)
    }

    /// All subsets of `self`, including the empty set and `self`.
    pub fn subsets(self) -> impl Iterator<Item = IndexSet> {
        let full = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full {
                None
            } else {
                Some((cur.wrapping_sub(full)) & full)
            };
            Some(IndexSet(cur))
        })
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for IndexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        IndexSet::from_indices(iter)
    }
}

impl Serialize for IndexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// A signed subset: disjoint positive and negative parts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SignedSet {
    pub positive: IndexSet,
    pub negative: IndexSet,
}

impl SignedSet {
    pub fn support(&self) -> IndexSet {
        self.positive.union(self.negative)
    }

    pub fn negated(&self) -> SignedSet {
        SignedSet {
            positive: self.negative,
            negative: self.positive,
        }
    }

    /// Flips the signs if needed so the smallest element of the support is positive.
    pub fn canonical(&self) -> SignedSet {
        match self.support().min() {
            Some(i) if self.negative.contains(i) => self.negated(),
            _ => *self,
        }
    }

    /// Builds from a sign vector with entries in {-1, 0, +1}.
    pub fn from_signs(signs: &[i8]) -> SignedSet {
        let mut s = SignedSet {
            positive: IndexSet::EMPTY,
            negative: IndexSet::EMPTY,
        };
        for (i, &v) in signs.iter().enumerate() {
            match v {
                1 => s.positive = s.positive.insert(i),
                -1 => s.negative = s.negative.insert(i),
                _ => {}
            }
        }
        s
    }

    pub fn sign(&self, i: usize) -> i8 {
        if self.positive.contains(i) {
            1
        } else if self.negative.contains(i) {
            -1
        } else {
            0
        }
    }
}
