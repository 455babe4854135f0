use alloc::vec::Vec;

use super::{Alphabet, LieTree};

/// A nonempty word strictly smaller than each of its proper suffixes.
pub fn is_lyndon(w: &[u8]) -> bool {
    !w.is_empty() && (1..w.len()).all(|i| w < &w[i..])
}

/// Lyndon words of length `d` over the sorted letters, in lexicographic
/// order (Duval's generation).
pub fn lyndon_words(letters: &[u8], d: usize) -> Vec<Vec<u8>> {
    let mut sorted = letters.to_vec();
    sorted.sort_unstable();
    let k = sorted.len();
    let mut out = Vec::new();
    if k == 0 || d == 0 {
        return out;
    }
    let mut w: Vec<usize> = alloc::vec![0];
    while !w.is_empty() {
        if w.len() == d {
            out.push(w.iter().map(|&i| sorted[i]).collect());
        }
        let m = w.len();
        while w.len() < d {
            let c = w[w.len() - m];
            w.push(c);
        }
        while w.last() == Some(&(k - 1)) {
            w.pop();
        }
        if let Some(last) = w.last_mut() {
            *last += 1;
        }
    }
    out
}

/// `w = uv` with `v` the longest proper Lyndon suffix, bracketed as
/// `[std(u), std(v)]`.
pub fn standard_bracketing(w: &[u8]) -> LieTree {
    assert!(is_lyndon(w), "standard bracketing needs a Lyndon word");
    if w.len() == 1 {
        return LieTree::Leaf(w[0]);
    }
    let split = (1..w.len()).find(|&i| is_lyndon(&w[i..])).expect("last letter is Lyndon");
    LieTree::bracket(standard_bracketing(&w[..split]), standard_bracketing(&w[split..]))
}

/// Standard bracketings of the Lyndon words of length `d`.
pub fn lyndon_lie_basis(d: usize, alphabet: &Alphabet) -> Vec<LieTree> {
    lyndon_words(alphabet.letters(), d).iter().map(|w| standard_bracketing(w)).collect()
}

/// Number of Lyndon words of length `d` over `k` letters,
/// `(1/d) Σ_{e | d} μ(e) k^{d/e}`.
pub fn lyndon_count(k: u64, d: usize) -> u64 {
    if d == 0 {
        return 0;
    }
    let mut total: i128 = 0;
    for e in (1..=d).filter(|e| d % e == 0) {
        total += mobius(e) as i128 * (k as i128).pow((d / e) as u32);
    }
    (total / d as i128) as u64
}

fn mobius(mut n: usize) -> i64 {
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}
