//! Brute-force oracles shared by the integration tests. Nothing here calls
//! the library's own class computations.
#![allow(dead_code)]

use num_bigint::BigInt;
use peakalg::algebra::{BnElement, Element, SnElement};
use peakalg::permutations::{Permutation, SignedPermutation};
use peakalg::Rational;

pub fn int(x: i64) -> Rational {
    Rational::from_integer(BigInt::from(x))
}

/// All permutations of `1..=n` in lexicographic order.
pub fn perms(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 1..=n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                go(n, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut vec![false; n + 1], &mut out);
    out
}

pub fn signed_perms(n: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for p in perms(n) {
        for mask in 0..1u32 << n {
            out.push(
                p.iter()
                    .enumerate()
                    .map(|(i, &v)| if mask >> i & 1 == 1 { -(v as i64) } else { v as i64 })
                    .collect(),
            );
        }
    }
    out
}

/// Peaks `i ∈ [1, n-1]` with `σ(i-1) < σ(i) > σ(i+1)`, reading `σ(0) = 0`.
pub fn peaks(p: &[usize]) -> Vec<usize> {
    let n = p.len();
    (1..n).filter(|&i| (i == 1 || p[i - 2] < p[i - 1]) && p[i - 1] > p[i]).collect()
}

/// Descents `i ∈ [0, n-1]` with `σ(i) > σ(i+1)`, reading `σ(0) = 0`.
pub fn signed_descents(p: &[i64]) -> Vec<usize> {
    (0..p.len()).filter(|&i| (if i == 0 { 0 } else { p[i - 1] }) > p[i]).collect()
}

pub fn subsets(lo: usize, hi: usize) -> Vec<Vec<usize>> {
    if hi < lo {
        return vec![vec![]];
    }
    let range: Vec<usize> = (lo..=hi).collect();
    (0..1u64 << range.len())
        .map(|m| range.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).map(|(_, &v)| v).collect())
        .collect()
}

pub fn is_sparse(s: &[usize]) -> bool {
    s.windows(2).all(|w| w[1] > w[0] + 1)
}

pub fn sparse_subsets(n: usize) -> Vec<Vec<usize>> {
    subsets(1, n.saturating_sub(1)).into_iter().filter(|s| is_sparse(s)).collect()
}

pub fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.contains(x))
}

pub fn fib(n: i64) -> i64 {
    if n < 0 {
        return 0;
    }
    let (mut a, mut b) = (1i64, 1i64);
    for _ in 0..n {
        (a, b) = (b, a + b);
    }
    a
}

/// `P_H`: the sum of permutations with peak set `H`.
pub fn p_class(n: usize, h: &[usize]) -> SnElement {
    let members: Vec<Permutation> = perms(n)
        .into_iter()
        .filter(|p| peaks(p) == h)
        .map(|p| Permutation::from_slice(&p).unwrap())
        .collect();
    Element::sum_of(n, members.iter())
}

pub fn p_sum(n: usize, sets: &[Vec<usize>], scale: &Rational) -> SnElement {
    sets.iter().fold(SnElement::zero(n), |acc, h| &acc + &p_class(n, h).scale(scale))
}

/// `X_J`: signed permutations with descent set inside `J`.
pub fn x_class(n: usize, j: &[usize]) -> BnElement {
    let members: Vec<SignedPermutation> = signed_perms(n)
        .into_iter()
        .filter(|p| is_subset(&signed_descents(p), j))
        .map(|p| SignedPermutation::from_slice(&p).unwrap())
        .collect();
    Element::sum_of(n, members.iter())
}

/// `F̄ = F ∪ ((F - 1) ∩ (F + 1))`.
pub fn closure(f: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = f.to_vec();
    for &a in f {
        if f.contains(&(a + 2)) {
            out.push(a + 1);
        }
    }
    out.sort_unstable();
    out
}

pub fn q_oracle(n: usize, f: &[usize]) -> SnElement {
    let sets: Vec<Vec<usize>> = sparse_subsets(n).into_iter().filter(|g| is_subset(f, g)).collect();
    p_sum(n, &sets, &int(1))
}

pub fn obar_oracle(n: usize, f: &[usize]) -> SnElement {
    let c = closure(f);
    let sets: Vec<Vec<usize>> = sparse_subsets(n).into_iter().filter(|g| g.iter().all(|x| !c.contains(x))).collect();
    p_sum(n, &sets, &int(1))
}

pub fn o_oracle(n: usize, f: &[usize]) -> SnElement {
    let sets: Vec<Vec<usize>> = sparse_subsets(n).into_iter().filter(|g| g.iter().all(|x| !f.contains(x))).collect();
    p_sum(n, &sets, &int(1))
}

/// Partitions of `n` into odd parts.
pub fn odd_partitions(n: usize) -> u64 {
    fn go(n: usize, max: usize) -> u64 {
        if n == 0 {
            return 1;
        }
        (1..=max.min(n)).filter(|p| p % 2 == 1).map(|p| go(n - p, p)).sum()
    }
    go(n, n)
}

pub fn partitions(n: usize) -> u64 {
    fn go(n: usize, max: usize) -> u64 {
        if n == 0 {
            return 1;
        }
        (1..=max.min(n)).map(|p| go(n - p, p)).sum()
    }
    go(n, n)
}
