//! Sparse subsets of `[n-1]`, the closure operator, the order `⪯`, the
//! composition families indexing the bases, and partition counts.

mod compositions;
mod partitions;
mod poset;

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::bitset::BitSet;
use crate::cache::Memo;
use crate::error::{Error, Result};

pub use compositions::{
    almostodd_from_sparse, enumerate_almost_odd, enumerate_compositions, enumerate_pseudo,
    enumerate_thin, refines_admissibly, sparse_from_almostodd, sparse_from_thin,
    thin_from_almostodd, thin_from_sparse, thin_segments, AlmostOddComposition, Composition,
    PseudoComposition, ThinComposition,
};
pub use partitions::{
    almost_odd_partitions, count_almostodd_partitions, count_odd_partitions, count_partitions,
};
pub use poset::{catalan, is_catalan_product, moebius_preceq, preceq, PreceqPoset};

/// Fibonacci numbers with `f_0 = f_1 = 1`.
pub fn fibonacci(n: usize) -> u64 {
    let (mut a, mut b) = (1u64, 1u64);
    for _ in 0..n {
        let c = a + b;
        a = b;
        b = c;
    }
    a
}

/// A subset of `[n-1]` without two consecutive integers.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SparseSubset {
    n: usize,
    set: BitSet,
}

impl SparseSubset {
    pub fn new(n: usize, elements: &[usize]) -> Result<Self> {
        Self::from_bits(n, BitSet::from_slice(elements))
    }

    pub fn from_bits(n: usize, set: BitSet) -> Result<Self> {
        check_range(set, 1, n as i64 - 1)?;
        let adjacent = set.intersection(set.shift_up());
        if let Some(i) = adjacent.min() {
            return Err(Error::NotSparse(i - 1, i));
        }
        Ok(SparseSubset { n, set })
    }

    pub fn empty(n: usize) -> Self {
        SparseSubset { n, set: BitSet::EMPTY }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> BitSet {
        self.set
    }

    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.set.contains(i)
    }

    pub fn elements(&self) -> Vec<usize> {
        self.set.iter().collect()
    }

    /// Position of this subset in [`enumerate_sparse`] order.
    pub fn index(&self) -> usize {
        sparse_index(self.n).position(self.set)
    }

    pub fn closure(&self) -> BitSet {
        closure_bits(self.set, self.n)
    }
}

impl PartialOrd for SparseSubset {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SparseSubset {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.n.cmp(&other.n).then_with(|| self.set.lex_cmp(other.set))
    }
}

impl fmt::Display for SparseSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.set, self.n)
    }
}

impl fmt::Debug for SparseSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub(crate) fn check_range(set: BitSet, lo: i64, hi: i64) -> Result<()> {
    for i in set.iter() {
        let v = i as i64;
        if v < lo || v > hi {
            return Err(Error::OutOfRange { value: v, lo, hi });
        }
    }
    Ok(())
}

/// `M ∪ ((M-1) ∩ (M+1))`, for `M ⊆ [n-1]`.
pub fn closure(m: BitSet, n: usize) -> Result<BitSet> {
    check_range(m, 1, n as i64 - 1)?;
    Ok(closure_bits(m, n))
}

#[inline]
pub(crate) fn closure_bits(m: BitSet, n: usize) -> BitSet {
    let inner = m.shift_down(1).intersection(m.shift_up());
    m.union(inner).intersection(BitSet::interval(1, n as i64 - 1))
}

/// All sparse subsets of `[n-1]`, lexicographic on the increasing element
/// lists (so `∅` first).
pub fn enumerate_sparse(n: usize) -> Vec<SparseSubset> {
    sparse_index(n).list.clone()
}

fn enumerate_sparse_uncached(n: usize) -> Vec<SparseSubset> {
    fn walk(n: usize, start: usize, cur: BitSet, out: &mut Vec<SparseSubset>) {
        out.push(SparseSubset { n, set: cur });
        for e in start..n {
            walk(n, e + 2, cur.with(e), out);
        }
    }
    let mut out = Vec::new();
    walk(n, 1, BitSet::EMPTY, &mut out);
    out
}

pub(crate) struct SparseIndex {
    pub(crate) list: Vec<SparseSubset>,
    pos: BTreeMap<BitSet, usize>,
}

impl SparseIndex {
    pub(crate) fn position(&self, set: BitSet) -> usize {
        self.pos[&set]
    }
}

static SPARSE: Memo<usize, SparseIndex> = Memo::new();

pub(crate) fn sparse_index(n: usize) -> Arc<SparseIndex> {
    SPARSE.get_or_insert_with(n, || {
        let list = enumerate_sparse_uncached(n);
        let pos = list.iter().enumerate().map(|(i, f)| (f.set, i)).collect();
        SparseIndex { list, pos }
    })
}

/// All subsets of `[lo, hi]`, lexicographic on element lists.
pub fn enumerate_subsets(lo: usize, hi: i64) -> Vec<BitSet> {
    let mut all: Vec<BitSet> = BitSet::interval(lo as i64, hi).subsets().collect();
    all.sort_by(|a, b| a.lex_cmp(*b));
    all
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bits(v: &[usize]) -> BitSet {
        BitSet::from_slice(v)
    }

    #[test]
    fn closure_examples() {
        assert_eq!(closure(bits(&[1, 3]), 4).unwrap(), bits(&[1, 2, 3]));
        assert_eq!(closure(BitSet::EMPTY, 5).unwrap(), BitSet::EMPTY);
        assert_eq!(closure(bits(&[2, 4]), 5).unwrap(), bits(&[2, 3, 4]));
        assert!(matches!(closure(bits(&[4]), 4), Err(Error::OutOfRange { .. })));
        assert!(closure(bits(&[0]), 4).is_err());
    }

    #[test]
    fn closure_idempotent_and_monotone() {
        for n in 0..=8 {
            let all = enumerate_subsets(1, n as i64 - 1);
            for &m in &all {
                let c = closure(m, n).unwrap();
                assert_eq!(closure(c, n).unwrap(), c);
                assert!(m.is_subset(c));
                for &k in &all {
                    if m.is_subset(k) {
                        assert!(c.is_subset(closure(k, n).unwrap()));
                    }
                }
            }
        }
    }

    #[test]
    fn sparse_enumeration() {
        let two: Vec<_> = enumerate_sparse(2).iter().map(|f| f.bits()).collect();
        assert_eq!(two, [BitSet::EMPTY, bits(&[1])]);
        let four: Vec<_> = enumerate_sparse(4).iter().map(|f| f.bits()).collect();
        assert_eq!(four, [BitSet::EMPTY, bits(&[1]), bits(&[1, 3]), bits(&[2]), bits(&[3])]);
        assert_eq!(enumerate_sparse(8).len(), 34);
        for n in 0..=12 {
            assert_eq!(enumerate_sparse(n).len() as u64, fibonacci(n));
        }
        assert_eq!(enumerate_sparse(0), [SparseSubset::empty(0)]);
        assert_eq!(enumerate_sparse(1), [SparseSubset::empty(1)]);
    }

    #[test]
    fn sparse_validation() {
        assert_eq!(SparseSubset::new(5, &[2, 3]), Err(Error::NotSparse(2, 3)));
        assert!(SparseSubset::new(4, &[4]).is_err());
        assert!(SparseSubset::new(4, &[0]).is_err());
        let f = SparseSubset::new(6, &[1, 3]).unwrap();
        assert_eq!(alloc::format!("{f}"), "{1,3}@6");
        assert_eq!(enumerate_sparse(6)[f.index()], f);
    }

    #[test]
    fn subsets_in_lex_order() {
        let s = enumerate_subsets(0, 2);
        assert_eq!(s.len(), 8);
        assert_eq!(s[0], BitSet::EMPTY);
        assert_eq!(s[1], bits(&[0]));
        assert_eq!(s[2], bits(&[0, 1]));
        assert_eq!(s[3], bits(&[0, 1, 2]));
    }
}
