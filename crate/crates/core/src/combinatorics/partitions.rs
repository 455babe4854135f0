use alloc::vec::Vec;

/// Weakly decreasing partitions of `n` whose parts satisfy `keep`.
fn partitions_with(n: usize, keep: &dyn Fn(usize) -> bool) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, keep: &dyn Fn(usize) -> bool, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            if keep(p) {
                cur.push(p);
                go(rest - p, p, keep, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, n, keep, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `n` with at most one even part.
pub fn almost_odd_partitions(n: usize) -> Vec<Vec<usize>> {
    partitions_with(n, &|_| true)
        .into_iter()
        .filter(|p| p.iter().filter(|&&x| x % 2 == 0).count() <= 1)
        .collect()
}

fn count_with(n: usize, keep: impl Fn(usize) -> bool) -> u64 {
    let mut ways = alloc::vec![0u64; n + 1];
    ways[0] = 1;
    for part in 1..=n {
        if keep(part) {
            for m in part..=n {
                ways[m] += ways[m - part];
            }
        }
    }
    ways[n]
}

pub fn count_partitions(n: usize) -> u64 {
    count_with(n, |_| true)
}

pub fn count_odd_partitions(n: usize) -> u64 {
    count_with(n, |p| p % 2 == 1)
}

/// `p_o(n) + p_o(n-2) + p_o(n-4) + ...`: an almost-odd partition is an odd
/// partition plus at most one even part.
pub fn count_almostodd_partitions(n: usize) -> u64 {
    (0..=n / 2).map(|j| count_odd_partitions(n - 2 * j)).sum()
}
