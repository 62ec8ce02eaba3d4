//! Perfect matchings: Ryser's alternating sum over column subsets for the
//! bipartite case (the permanent), and the edge-count binomial sieve for
//! general graphs.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::Matrix01;
use crate::ring::CountRing;

/// Cap for the 2^n loops in this module.
pub const MATCHING_CAP: usize = 30;

fn check_cap(n: usize, what: &str) -> Result<()> {
    if n > MATCHING_CAP {
        return Err(Error::cap(format!("{what} on {n} nodes (cap {MATCHING_CAP})")));
    }
    Ok(())
}

/// The permanent of a 0/1 matrix by Ryser's formula:
/// `sum over S of (-1)^{n-|S|} prod_i (row sum of i over S)`.
///
/// Equals the number of perfect matchings of the bipartite graph with this
/// biadjacency. O(2^n n) time with popcount row sums, polynomial space.
/// The permanent of the 0x0 matrix is 1.
pub fn permanent_ryser<R: CountRing>(a: &Matrix01) -> Result<R> {
    let n = a.dim();
    check_cap(n, "permanent")?;
    let mut acc = R::zero();
    for cols in 0..1u64 << n {
        let term = row_sum_product::<R>(a, cols);
        add_signed(&mut acc, term, (n as u32 - cols.count_ones()).is_multiple_of(2));
    }
    finish_nonneg(acc, "permanent")
}

/// Same value as [`permanent_ryser`], iterating column subsets in reflected
/// binary Gray order (subset at step t is `t ^ (t >> 1)`) so the n row sums
/// are maintained under single-element flips. O(2^n n) ring operations.
pub fn permanent_ryser_gray<R: CountRing>(a: &Matrix01) -> Result<R> {
    let n = a.dim();
    check_cap(n, "permanent")?;
    let mut row_sums = vec![0u32; n];
    let mut cols = 0u64;
    let mut even = n.is_multiple_of(2); // parity of (-1)^{n-|S|} at S = empty
    let mut acc = R::zero();
    // Step 0 is the empty set: all row sums are zero.
    add_signed(&mut acc, product_of(&row_sums), even);
    for t in 1..1u64 << n {
        let flip = t.trailing_zeros() as usize;
        let next = t ^ (t >> 1);
        debug_assert_eq!(next ^ cols, 1 << flip);
        let added = next >> flip & 1 == 1;
        for (i, rs) in row_sums.iter_mut().enumerate() {
            let bit = (a.row_mask(i) >> flip & 1) as u32;
            if added {
                *rs += bit;
            } else {
                *rs -= bit;
            }
        }
        cols = next;
        even = !even; // the sign flips on every Gray step
        add_signed(&mut acc, product_of(&row_sums), even);
    }
    finish_nonneg(acc, "permanent")
}

fn row_sum_product<R: CountRing>(a: &Matrix01, cols: u64) -> R {
    let mut prod = R::one();
    for i in 0..a.dim() {
        let rs = a.row_sum_in(i, cols);
        if rs == 0 {
            return R::zero();
        }
        prod *= &R::from(u64::from(rs));
    }
    prod
}

fn product_of<R: CountRing>(row_sums: &[u32]) -> R {
    let mut prod = R::one();
    for &rs in row_sums {
        if rs == 0 {
            return R::zero();
        }
        prod *= &R::from(u64::from(rs));
    }
    prod
}

#[inline]
fn add_signed<R: CountRing>(acc: &mut R, term: R, positive: bool) {
    if positive {
        *acc += &term;
    } else {
        *acc -= &term;
    }
}

fn finish_nonneg<R: CountRing>(acc: R, what: &str) -> Result<R> {
    assert!(
        acc >= R::zero(),
        "{what} came out negative; sieve arithmetic is corrupted"
    );
    Ok(acc)
}

/// Outcome of the general perfect-matching sieve, including the full-set
/// term `C(m, n/2)` for trace output.
#[derive(Clone, Debug)]
pub struct PmReport<R> {
    pub count: R,
    /// The `S = N` term of the sieve, `C(m, n/2)`; zero for odd n.
    pub full_set_term: R,
}

/// Number of perfect matchings in a general graph:
/// `sum over S of (-1)^{n-|S|} C(e[S], n/2)` for even n, where `e[S]` is the
/// number of edges inside `S`. Odd n has none; n = 0 has exactly one (the
/// empty matching). Edge counts are maintained incrementally over a Gray
/// walk, so the whole sieve is O*(2^n) with polynomial space.
pub fn pm_count_general<R: CountRing>(graph: &Graph) -> Result<R> {
    Ok(pm_count_report(graph)?.count)
}

/// As [`pm_count_general`], also reporting the full-set term.
pub fn pm_count_report<R: CountRing>(graph: &Graph) -> Result<PmReport<R>> {
    let n = graph.node_count();
    check_cap(n, "perfect matching count")?;
    if n % 2 == 1 {
        return Ok(PmReport { count: R::zero(), full_set_term: R::zero() });
    }
    let half = n / 2;
    let m = graph.edge_count();

    // binom[e] = C(e, n/2) for e = 0..m, built from one Pascal row by
    // additions only (exact in any ring).
    let mut row: Vec<R> = vec![R::zero(); half + 1];
    row[0] = R::one();
    let mut binom: Vec<R> = Vec::with_capacity(m + 1);
    binom.push(row[half].clone());
    for _e in 1..=m {
        for j in (1..=half).rev() {
            let prev = row[j - 1].clone();
            row[j] += &prev;
        }
        binom.push(row[half].clone());
    }

    let mut acc = R::zero();
    let mut inside = 0usize;
    let mut even = n.is_multiple_of(2);
    add_signed(&mut acc, binom[inside].clone(), even);
    for t in 1..1u64 << n {
        let flip = t.trailing_zeros() as usize;
        let nodes = t ^ (t >> 1);
        let added = nodes >> flip & 1 == 1;
        let delta = (graph.adj(flip) & (nodes & !(1 << flip))).count_ones() as usize;
        if added {
            inside += delta;
        } else {
            inside -= delta;
        }
        even = !even;
        add_signed(&mut acc, binom[inside].clone(), even);
    }
    let count = finish_nonneg(acc, "perfect matching count")?;
    Ok(PmReport { count, full_set_term: binom[m].clone() })
}

/// The 2n-node graph whose perfect matchings are exactly the permanent's
/// permutations: left node i is i, right node j is n + j.
pub fn graph_from_biadjacency(a: &Matrix01) -> Result<Graph> {
    let n = a.dim();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if a.get(i, j) == 1 {
                edges.push((i, n + j));
            }
        }
    }
    Graph::from_edges(2 * n, &edges)
}
