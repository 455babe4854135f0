use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::{enumerate_sparse, sparse_index, SparseSubset};
use crate::cache::Memo;
use crate::error::{Error, Result};

/// `F ⪯ G` iff `G ⊆ F̄`.
pub fn preceq(f: &SparseSubset, g: &SparseSubset) -> Result<bool> {
    if f.n() != g.n() {
        return Err(Error::DegreeMismatch(f.n(), g.n()));
    }
    Ok(g.bits().is_subset(f.closure()))
}

/// The sparse subsets of `[n-1]` under `⪯`, with the order relation and
/// Möbius function tabulated in [`enumerate_sparse`] order.
pub struct PreceqPoset {
    pub elements: Vec<SparseSubset>,
    leq: Vec<Vec<bool>>,
    mu: Vec<Vec<i64>>,
}

impl PreceqPoset {
    pub fn get(n: usize) -> Arc<PreceqPoset> {
        static CACHE: Memo<usize, PreceqPoset> = Memo::new();
        CACHE.get_or_insert_with(n, || PreceqPoset::build(n))
    }

    fn build(n: usize) -> PreceqPoset {
        let elements = enumerate_sparse(n);
        let m = elements.len();
        let leq: Vec<Vec<bool>> = elements
            .iter()
            .map(|f| {
                let c = f.closure();
                elements.iter().map(|g| g.bits().is_subset(c)).collect()
            })
            .collect();
        // a strict relation F ≺ G forces #G < #F, so decreasing size is a
        // linear extension
        let mut order: Vec<usize> = (0..m).collect();
        order.sort_by_key(|&i| core::cmp::Reverse(elements[i].len()));
        let mut mu = alloc::vec![alloc::vec![0i64; m]; m];
        for a in 0..m {
            for (pos, &b) in order.iter().enumerate() {
                if !leq[a][b] {
                    continue;
                }
                if a == b {
                    mu[a][b] = 1;
                    continue;
                }
                let mut s = 0i64;
                for &h in &order[..pos] {
                    if leq[a][h] && leq[h][b] {
                        s += mu[a][h];
                    }
                }
                mu[a][b] = -s;
            }
        }
        PreceqPoset { elements, leq, mu }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    /// `μ(F, G)` by index; zero when `F ⋠ G`.
    pub fn mu(&self, a: usize, b: usize) -> i64 {
        self.mu[a][b]
    }

    /// Cover relations `(a, b)` with `a ≺ b` and nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let m = self.len();
        let mut out = Vec::new();
        for a in 0..m {
            for b in 0..m {
                if a == b || !self.leq[a][b] {
                    continue;
                }
                let between = (0..m).any(|h| h != a && h != b && self.leq[a][h] && self.leq[h][b]);
                if !between {
                    out.push((a, b));
                }
            }
        }
        out
    }
}

/// Möbius function of `⪯`, computed by the defining recursion.
pub fn moebius_preceq(f: &SparseSubset, g: &SparseSubset) -> Result<i64> {
    if !preceq(f, g)? {
        return Err(Error::NotComparable(format!("{f}"), format!("{g}")));
    }
    let poset = PreceqPoset::get(f.n());
    let idx = sparse_index(f.n());
    Ok(poset.mu(idx.position(f.bits()), idx.position(g.bits())))
}

pub fn catalan(k: usize) -> u64 {
    let mut c = 1u64;
    for i in 0..k as u64 {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c
}

/// Whether `v` factors as a product of Catalan numbers.
pub fn is_catalan_product(v: u64) -> bool {
    fn go(v: u64, from: usize) -> bool {
        if v == 1 {
            return true;
        }
        let mut k = from;
        loop {
            let c = catalan(k);
            if c > v {
                return false;
            }
            if v % c == 0 && go(v / c, k) {
                return true;
            }
            k += 1;
        }
    }
    v != 0 && go(v, 2)
}
