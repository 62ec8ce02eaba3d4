//! Brute-force reference implementations for differential testing. Nothing
//! in this module uses inclusion-exclusion, transforms, or any other sieve
//! machinery; each function enumerates the counted objects directly. Size
//! caps are hard errors so test suites cannot silently run forever.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::Matrix01;
use crate::ring::Count;
use crate::steiner::SteinerInstance;
use crate::subset::BitSubset;

fn check(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::cap(format!("oracle {what}")))
    }
}

fn is_independent(graph: &Graph, mask: u64) -> bool {
    let mut rest = mask;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        if graph.adj(v) & mask != 0 {
            return false;
        }
        rest &= rest - 1;
    }
    true
}

/// Ordered k-tuples of nonempty independent sets whose union is the whole
/// node set, by direct enumeration of the tuples. Caps: n <= 5, k <= 3.
pub fn brute_cover_count(graph: &Graph, k: u64) -> Result<Count> {
    brute_cover_count_over(graph, k, &BitSubset::full(graph.node_count()))
}

/// Ordered k-tuples of nonempty independent sets with union exactly
/// `target`. Same caps as [`brute_cover_count`].
pub fn brute_cover_count_over(graph: &Graph, k: u64, target: &BitSubset) -> Result<Count> {
    let n = graph.node_count();
    check(n <= 5, "cover count capped at n <= 5")?;
    check((1..=3).contains(&k), "cover count capped at k in 1..=3")?;
    let independents: Vec<u64> = (1..1u64 << n)
        .filter(|&m| is_independent(graph, m))
        .collect();
    // Depth-first over ordered tuples.
    fn rec(independents: &[u64], depth: u64, k: u64, union: u64, target: u64, count: &mut u64) {
        if depth == k {
            if union == target {
                *count += 1;
            }
            return;
        }
        for &m in independents {
            rec(independents, depth + 1, k, union | m, target, count);
        }
    }
    let mut count = 0u64;
    rec(&independents, 0, k, 0, target.mask(), &mut count);
    Ok(Count::from(count))
}

/// Whether the graph admits a proper k-coloring, by trying all k^n color
/// assignments. Cap n <= 8.
pub fn brute_colorable(graph: &Graph, k: u64) -> Result<bool> {
    let n = graph.node_count();
    check(n <= 8, "colorability capped at n <= 8")?;
    if n == 0 {
        return Ok(true);
    }
    if k == 0 {
        return Ok(false);
    }
    let edges = graph.edges();
    let mut colors = vec![0u64; n];
    loop {
        if edges.iter().all(|&(u, v)| colors[u] != colors[v]) {
            return Ok(true);
        }
        // Odometer increment in base k.
        let mut pos = 0;
        loop {
            if pos == n {
                return Ok(false);
            }
            colors[pos] += 1;
            if colors[pos] < k {
                break;
            }
            colors[pos] = 0;
            pos += 1;
        }
    }
}

/// Chromatic number by exhaustive coloring search. Cap n <= 8.
pub fn brute_chromatic(graph: &Graph) -> Result<u64> {
    let n = graph.node_count();
    check(n <= 8, "chromatic number capped at n <= 8")?;
    if n == 0 {
        return Ok(0);
    }
    for k in 1..=n as u64 {
        if brute_colorable(graph, k)? {
            return Ok(k);
        }
    }
    unreachable!("n colors always suffice")
}

/// The permanent as the literal permutation sum. Cap n <= 8.
pub fn brute_permanent(a: &Matrix01) -> Result<Count> {
    let n = a.dim();
    check(n <= 8, "permanent capped at n <= 8")?;
    fn rec(a: &Matrix01, row: usize, used: u64) -> u64 {
        if row == a.dim() {
            return 1;
        }
        let mut total = 0;
        for j in 0..a.dim() {
            if used >> j & 1 == 0 && a.get(row, j) == 1 {
                total += rec(a, row + 1, used | 1 << j);
            }
        }
        total
    }
    Ok(Count::from(rec(a, 0, 0)))
}

/// Number of perfect matchings by enumerating n/2-edge subsets. Cap n <= 10.
pub fn brute_pm_count(graph: &Graph) -> Result<Count> {
    let n = graph.node_count();
    check(n <= 10, "perfect matching count capped at n <= 10")?;
    if n == 0 {
        return Ok(Count::from(1));
    }
    if n % 2 == 1 {
        return Ok(Count::from(0));
    }
    let edges = graph.edges();
    fn rec(edges: &[(usize, usize)], idx: usize, left: usize, covered: u64) -> u64 {
        if left == 0 {
            return 1;
        }
        if idx == edges.len() {
            return 0;
        }
        let (u, v) = edges[idx];
        let mut total = rec(edges, idx + 1, left, covered);
        if covered >> u & 1 == 0 && covered >> v & 1 == 0 {
            total += rec(edges, idx + 1, left - 1, covered | 1 << u | 1 << v);
        }
        total
    }
    Ok(Count::from(rec(&edges, 0, n / 2, 0)))
}

/// Number of Hamiltonian paths from `start` by enumerating all orderings of
/// the remaining nodes and checking adjacency. Cap n <= 8.
pub fn brute_ham_count(graph: &Graph, start: usize) -> Result<Count> {
    let n = graph.node_count();
    check(n <= 8, "hamiltonian count capped at n <= 8")?;
    if start >= n {
        return Err(Error::invalid(format!("start node {start} outside 0..{n}")));
    }
    fn rec(graph: &Graph, seq: &mut Vec<usize>, used: u64) -> u64 {
        let n = graph.node_count();
        if seq.len() == n {
            // Validate the completed ordering.
            let ok = seq.windows(2).all(|w| graph.has_edge(w[0], w[1]));
            return u64::from(ok);
        }
        let mut total = 0;
        for v in 0..n {
            if used >> v & 1 == 0 {
                seq.push(v);
                total += rec(graph, seq, used | 1 << v);
                seq.pop();
            }
        }
        total
    }
    let mut seq = vec![start];
    Ok(Count::from(rec(graph, &mut seq, 1 << start)))
}

fn connected_within(graph: &Graph, mask: u64) -> bool {
    if mask == 0 {
        return true;
    }
    let first = mask.trailing_zeros() as usize;
    let mut seen = 1u64 << first;
    let mut frontier = vec![first];
    while let Some(v) = frontier.pop() {
        let nbrs = graph.adj(v) & mask & !seen;
        for u in BitSubset::new(graph.node_count(), nbrs).unwrap().elements() {
            seen |= 1 << u;
            frontier.push(u);
        }
    }
    seen == mask
}

/// Minimum size of a connected node set containing all terminals, by
/// checking every subset. Cap n <= 8.
pub fn brute_steiner(inst: &SteinerInstance) -> Result<Option<usize>> {
    let n = inst.graph().node_count();
    check(n <= 8, "steiner capped at n <= 8")?;
    let mut best: Option<usize> = None;
    for s in BitSubset::all(n) {
        if inst.terminals().is_subset_of(&s)
            && connected_within(inst.graph(), s.mask())
            && best.is_none_or(|b| (s.len() as usize) < b)
        {
            best = Some(s.len() as usize);
        }
    }
    Ok(best)
}

/// Whether a simple path on k nodes exists, by depth-first enumeration of
/// simple paths. Cap n <= 10.
pub fn brute_kpath(graph: &Graph, k: usize) -> Result<bool> {
    let n = graph.node_count();
    check(n <= 10, "k-path capped at n <= 10")?;
    if k == 0 {
        return Ok(true);
    }
    if k > n {
        return Ok(false);
    }
    fn dfs(graph: &Graph, v: usize, visited: u64, remaining: usize) -> bool {
        if remaining == 0 {
            return true;
        }
        for u in graph.neighbors(v).elements() {
            if visited >> u & 1 == 0 && dfs(graph, u, visited | 1 << u, remaining - 1) {
                return true;
            }
        }
        false
    }
    Ok((0..n).any(|s| dfs(graph, s, 1 << s, k - 1)))
}
