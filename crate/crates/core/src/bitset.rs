use core::fmt;

/// A subset of `{0, 1, ..., 63}` stored as a bit mask.
///
/// Every subset handled by the crate (descent sets, peak sets, index sets of
/// compositions) lives in `[0, n]` for a small `n`, so a single word suffices.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BitSet(pub u64);

impl BitSet {
    pub const EMPTY: BitSet = BitSet(0);

    /// The interval `[lo, hi]`; empty when `hi < lo`.
    pub fn interval(lo: i64, hi: i64) -> BitSet {
        let mut s = BitSet::EMPTY;
        let mut i = lo.max(0);
        while i <= hi {
            s.insert(i as usize);
            i += 1;
        }
        s
    }

    pub fn from_slice(elements: &[usize]) -> BitSet {
        elements.iter().copied().collect()
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 >> i & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        assert!(i < 64, "bitset element {i} out of range");
        self.0 |= 1 << i;
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        if i < 64 {
            self.0 &= !(1 << i);
        }
    }

    #[inline]
    pub fn with(mut self, i: usize) -> BitSet {
        self.insert(i);
        self
    }

    #[inline]
    pub fn without(mut self, i: usize) -> BitSet {
        self.remove(i);
        self
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn is_subset(self, other: BitSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn union(self, other: BitSet) -> BitSet {
        BitSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: BitSet) -> BitSet {
        BitSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: BitSet) -> BitSet {
        BitSet(self.0 & !other.0)
    }

    /// `{ j + 1 : j in self }`.
    #[inline]
    pub fn shift_up(self) -> BitSet {
        BitSet(self.0 << 1)
    }

    /// `{ j - k : j in self, j >= k }`.
    #[inline]
    pub fn shift_down(self, k: usize) -> BitSet {
        BitSet(self.0 >> k)
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    /// Lexicographic comparison of the increasing element lists.
    pub fn lex_cmp(self, other: BitSet) -> core::cmp::Ordering {
        self.iter().cmp(other.iter())
    }

    /// All subsets of `self`, in increasing mask order.
    pub fn subsets(self) -> Subsets {
        Subsets { full: self.0, next: Some(0) }
    }
}

pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

pub struct Subsets {
    full: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = BitSet;

    fn next(&mut self) -> Option<BitSet> {
        let cur = self.next?;
        self.next = if cur == self.full {
            None
        } else {
            Some((cur.wrapping_sub(self.full)) & self.full)
        };
        Some(BitSet(cur))
    }
}

impl FromIterator<usize> for BitSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = BitSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl fmt::Display for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
