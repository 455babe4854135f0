//! Elements of `S_n` and `B_n` in one-line notation.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;
use core::hash::Hash;
use core::str::FromStr;

use crate::bitset::BitSet;
use crate::cache::Memo;
use crate::combinatorics::SparseSubset;
use crate::error::{Error, Result};
use crate::Caps;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GroupType {
    A,
    B,
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupType::A => "A",
            GroupType::B => "B",
        })
    }
}

impl FromStr for GroupType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(GroupType::A),
            "B" | "b" => Ok(GroupType::B),
            _ => Err(Error::InvalidPermutation(alloc::format!("unknown group type {s:?}"))),
        }
    }
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Common interface of `S_n` and `B_n` elements.
pub trait GroupElement:
    Clone + Ord + Hash + fmt::Debug + fmt::Display + Send + Sync + Sized + 'static
{
    const TYPE: GroupType;

    fn degree(&self) -> usize;
    fn identity(n: usize) -> Self;
    /// `(self ∘ other)(i) = self(other(i))`.
    fn compose(&self, other: &Self) -> Self;
    fn inverse(&self) -> Self;
    /// Block sum `σ × τ` of degree `p + q`.
    fn cross(&self, other: &Self) -> Self;
    /// `ξ · self` for an unsigned `ξ` of the same degree.
    fn left_by_unsigned(&self, xi: &Permutation) -> Self;
    fn descent_set(&self) -> BitSet;
    fn group_order(n: usize) -> usize;
    /// Position in [`GroupElement::elements`].
    fn rank(&self) -> usize;
    fn unrank(n: usize, r: usize) -> Self;
    /// Signed images `σ(1), ..., σ(n)`.
    fn images(&self) -> Vec<i64>;

    fn cap(caps: &Caps) -> usize {
        match Self::TYPE {
            GroupType::A => caps.type_a,
            GroupType::B => caps.type_b,
        }
    }

    /// All elements of degree `n` in rank order. Shared per degree.
    fn elements(n: usize) -> Arc<Vec<Self>>;
}

/// A permutation of `[n]`, stored as `σ(1) ... σ(n)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    pub fn new(images: Vec<u8>) -> Result<Self> {
        let n = images.len();
        let mut seen = 0u64;
        for &v in &images {
            let v = v as usize;
            if v == 0 || v > n || seen >> v & 1 == 1 {
                return Err(Error::InvalidPermutation(alloc::format!("{images:?}")));
            }
            seen |= 1 << v;
        }
        Ok(Permutation(images))
    }

    pub fn from_slice(images: &[usize]) -> Result<Self> {
        if images.iter().any(|&v| v > u8::MAX as usize) {
            return Err(Error::InvalidPermutation(alloc::format!("{images:?}")));
        }
        Permutation::new(images.iter().map(|&v| v as u8).collect())
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.0
    }

    /// `σ(i)` for `i ∈ [0, n]`, with `σ(0) = 0`.
    pub fn at(&self, i: usize) -> usize {
        if i == 0 {
            0
        } else {
            self.0[i - 1] as usize
        }
    }

    /// Peak positions `i ∈ [n-1]` with `σ(i-1) < σ(i) > σ(i+1)`, `σ(0) = 0`.
    pub fn peak_set(&self) -> SparseSubset {
        let n = self.0.len();
        let mut s = BitSet::EMPTY;
        for i in 1..n {
            if self.at(i - 1) < self.at(i) && self.at(i) > self.at(i + 1) {
                s.insert(i);
            }
        }
        SparseSubset::from_bits(n, s).expect("peak sets are sparse")
    }

    /// Views the permutation as an element of `B_n` with no negative entries.
    pub fn to_signed(&self) -> SignedPermutation {
        SignedPermutation(self.0.iter().map(|&v| v as i8).collect())
    }
}

impl GroupElement for Permutation {
    const TYPE: GroupType = GroupType::A;

    fn degree(&self) -> usize {
        self.0.len()
    }

    fn identity(n: usize) -> Self {
        Permutation((1..=n as u8).collect())
    }

    fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.0.len(), other.0.len(), "degree mismatch in product");
        Permutation(other.0.iter().map(|&i| self.0[i as usize - 1]).collect())
    }

    fn inverse(&self) -> Self {
        let mut inv = alloc::vec![0u8; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v as usize - 1] = i as u8 + 1;
        }
        Permutation(inv)
    }

    fn cross(&self, other: &Self) -> Self {
        let p = self.0.len() as u8;
        Permutation(self.0.iter().copied().chain(other.0.iter().map(|&v| v + p)).collect())
    }

    fn left_by_unsigned(&self, xi: &Permutation) -> Self {
        xi.compose(self)
    }

    fn descent_set(&self) -> BitSet {
        let mut s = BitSet::EMPTY;
        for (i, w) in self.0.windows(2).enumerate() {
            if w[0] > w[1] {
                s.insert(i + 1);
            }
        }
        s
    }

    fn group_order(n: usize) -> usize {
        factorial(n)
    }

    fn rank(&self) -> usize {
        lehmer_rank(&self.0)
    }

    fn unrank(n: usize, r: usize) -> Self {
        Permutation(lehmer_unrank(n, r))
    }

    fn images(&self) -> Vec<i64> {
        self.0.iter().map(|&v| v as i64).collect()
    }

    fn elements(n: usize) -> Arc<Vec<Self>> {
        static CACHE: Memo<usize, Vec<Permutation>> = Memo::new();
        CACHE.get_or_insert_with(n, || (0..factorial(n)).map(|r| Self::unrank(n, r)).collect())
    }
}

pub(crate) fn lehmer_rank(v: &[u8]) -> usize {
    let n = v.len();
    let mut r = 0;
    let mut used = 0u32;
    for (i, &x) in v.iter().enumerate() {
        let smaller_unused = (x as u32 - 1) - (used & ((1u32 << (x - 1)) - 1)).count_ones();
        r = r * (n - i) + smaller_unused as usize;
        used |= 1 << (x - 1);
    }
    r
}

fn lehmer_unrank(n: usize, mut r: usize) -> Vec<u8> {
    let mut digits = alloc::vec![0usize; n];
    for i in (0..n).rev() {
        let base = n - i;
        digits[i] = r % base;
        r /= base;
    }
    let mut avail: Vec<u8> = (1..=n as u8).collect();
    digits.into_iter().map(|d| avail.remove(d)).collect()
}

/// A signed permutation, stored as `σ(1) ... σ(n)` with `|σ|` a permutation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedPermutation(Vec<i8>);

impl SignedPermutation {
    pub fn new(images: Vec<i8>) -> Result<Self> {
        let n = images.len();
        let mut seen = 0u64;
        for &v in &images {
            let a = v.unsigned_abs() as usize;
            if a == 0 || a > n || seen >> a & 1 == 1 {
                return Err(Error::InvalidPermutation(alloc::format!("{images:?}")));
            }
            seen |= 1 << a;
        }
        Ok(SignedPermutation(images))
    }

    pub fn from_slice(images: &[i64]) -> Result<Self> {
        if images.iter().any(|&v| v.unsigned_abs() > i8::MAX as u64) {
            return Err(Error::InvalidPermutation(alloc::format!("{images:?}")));
        }
        SignedPermutation::new(images.iter().map(|&v| v as i8).collect())
    }

    pub fn as_slice(&self) -> &[i8] {
        &self.0
    }

    /// `σ(i)` for `i ∈ [0, n]`, with `σ(0) = 0`.
    pub fn at(&self, i: usize) -> i64 {
        if i == 0 {
            0
        } else {
            self.0[i - 1] as i64
        }
    }

    /// The sign-forgetting map `B_n → S_n`.
    pub fn forget_signs(&self) -> Permutation {
        Permutation(self.0.iter().map(|&v| v.unsigned_abs()).collect())
    }

    fn sign_mask(&self) -> usize {
        self.0.iter().enumerate().filter(|(_, &v)| v < 0).fold(0, |m, (i, _)| m | 1 << i)
    }
}

impl GroupElement for SignedPermutation {
    const TYPE: GroupType = GroupType::B;

    fn degree(&self) -> usize {
        self.0.len()
    }

    fn identity(n: usize) -> Self {
        SignedPermutation((1..=n as i8).collect())
    }

    fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.0.len(), other.0.len(), "degree mismatch in product");
        SignedPermutation(
            other
                .0
                .iter()
                .map(|&i| {
                    let v = self.0[i.unsigned_abs() as usize - 1];
                    if i < 0 {
                        -v
                    } else {
                        v
                    }
                })
                .collect(),
        )
    }

    fn inverse(&self) -> Self {
        let mut inv = alloc::vec![0i8; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            let s = if v < 0 { -1 } else { 1 };
            inv[v.unsigned_abs() as usize - 1] = s * (i as i8 + 1);
        }
        SignedPermutation(inv)
    }

    fn cross(&self, other: &Self) -> Self {
        let p = self.0.len() as i8;
        SignedPermutation(
            self.0
                .iter()
                .copied()
                .chain(other.0.iter().map(|&v| if v < 0 { v - p } else { v + p }))
                .collect(),
        )
    }

    fn left_by_unsigned(&self, xi: &Permutation) -> Self {
        SignedPermutation(
            self.0
                .iter()
                .map(|&v| {
                    let w = xi.0[v.unsigned_abs() as usize - 1] as i8;
                    if v < 0 {
                        -w
                    } else {
                        w
                    }
                })
                .collect(),
        )
    }

    fn descent_set(&self) -> BitSet {
        let mut s = BitSet::EMPTY;
        let mut prev = 0i8;
        for (i, &v) in self.0.iter().enumerate() {
            if prev > v {
                s.insert(i);
            }
            prev = v;
        }
        s
    }

    fn group_order(n: usize) -> usize {
        factorial(n) << n
    }

    fn rank(&self) -> usize {
        let abs: Vec<u8> = self.0.iter().map(|v| v.unsigned_abs()).collect();
        (lehmer_rank(&abs) << self.0.len()) | self.sign_mask()
    }

    fn unrank(n: usize, r: usize) -> Self {
        let mask = r & ((1 << n) - 1);
        let abs = lehmer_unrank(n, r >> n);
        SignedPermutation(
            abs.into_iter()
                .enumerate()
                .map(|(i, a)| if mask >> i & 1 == 1 { -(a as i8) } else { a as i8 })
                .collect(),
        )
    }

    fn images(&self) -> Vec<i64> {
        self.0.iter().map(|&v| v as i64).collect()
    }

    fn elements(n: usize) -> Arc<Vec<Self>> {
        static CACHE: Memo<usize, Vec<SignedPermutation>> = Memo::new();
        CACHE.get_or_insert_with(n, || (0..Self::group_order(n)).map(|r| Self::unrank(n, r)).collect())
    }
}

/// All elements of degree `n`, refusing degrees above the configured cap.
pub fn enumerate_group<G: GroupElement>(n: usize, caps: &Caps) -> Result<Arc<Vec<G>>> {
    let cap = G::cap(caps);
    if n > cap {
        return Err(Error::CapExceeded { what: group_name(G::TYPE), n, cap });
    }
    Ok(G::elements(n))
}

pub(crate) fn group_name(t: GroupType) -> &'static str {
    match t {
        GroupType::A => "S_n",
        GroupType::B => "B_n",
    }
}

/// `(p, q)`-shuffles: permutations increasing on `[1, p]` and `[p+1, p+q]`,
/// in lexicographic order.
pub fn shuffles(p: usize, q: usize) -> Vec<Permutation> {
    let n = p + q;
    let mut out = Vec::new();
    for set in crate::combinatorics::enumerate_subsets(1, n as i64) {
        if set.len() != p {
            continue;
        }
        let mut images: Vec<u8> = set.iter().map(|i| i as u8).collect();
        images.extend((1..=n).filter(|&i| !set.contains(i)).map(|i| i as u8));
        out.push(Permutation(images));
    }
    out.sort();
    out
}

fn write_images(f: &mut fmt::Formatter<'_>, images: &[i64]) -> fmt::Result {
    if images.is_empty() {
        return f.write_str("()");
    }
    let n = images.len();
    for (i, v) in images.iter().enumerate() {
        if n > 9 && i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_images(f, &self.images())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_images(f, &self.images())
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `"132"`, `"-21"`, `"10,1,2,..."` or `"()"`.
pub fn parse_images(s: &str) -> Result<Vec<i64>> {
    let s = s.trim();
    let bad = || Error::InvalidPermutation(String::from(s));
    if s.is_empty() || s == "()" {
        return Ok(Vec::new());
    }
    let s = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(s);
    if s.contains(',') {
        return s.split(',').map(|t| t.trim().parse::<i64>().map_err(|_| bad())).collect();
    }
    let mut out = Vec::new();
    let mut neg = false;
    for c in s.chars() {
        match c {
            '-' if !neg => neg = true,
            '0'..='9' => {
                let d = c as i64 - '0' as i64;
                out.push(if neg { -d } else { d });
                neg = false;
            }
            ' ' => {}
            _ => return Err(bad()),
        }
    }
    if neg {
        return Err(bad());
    }
    Ok(out)
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let v = parse_images(s)?;
        if v.iter().any(|&x| x <= 0) {
            return Err(Error::InvalidPermutation(String::from(s)));
        }
        Permutation::from_slice(&v.iter().map(|&x| x as usize).collect::<Vec<_>>())
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SignedPermutation::from_slice(&parse_images(s)?)
    }
}
