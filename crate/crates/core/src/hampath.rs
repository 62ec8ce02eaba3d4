//! Hamiltonian path counting by sieving walks: a per-subset walk DP over
//! lengths and endpoints, and the alternating sum over avoided node sets.
//! Polynomial space throughout.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ring::{Count, CountRing};
use crate::sieve::sieve_complement_of_union;
use crate::subset::BitSubset;

/// Cap for the 2^{n-1}-term sieve.
pub const HAMPATH_CAP: usize = 30;

/// Number of walks on `len` nodes starting at `start` with every node
/// outside `avoid`. Two DP layers over endpoints; O(len |E|) time.
pub fn walks_avoiding<R: CountRing>(
    graph: &Graph,
    avoid: &BitSubset,
    start: usize,
    len: usize,
) -> Result<R> {
    let n = graph.node_count();
    if start >= n {
        return Err(Error::invalid(format!("start node {start} outside 0..{n}")));
    }
    if avoid.ground_size() != n {
        return Err(Error::invalid("avoid set is over a different ground set"));
    }
    if len == 0 {
        return Err(Error::invalid("walks have at least one node"));
    }
    if avoid.contains(start) {
        return Ok(R::zero());
    }
    let allowed = !avoid.mask();
    let mut cur = vec![R::zero(); n];
    cur[start] = R::one();
    for _ in 1..len {
        let mut next = vec![R::zero(); n];
        for (t, slot) in next.iter_mut().enumerate() {
            if allowed >> t & 1 == 0 {
                continue;
            }
            for v in BitSubset::new(n, graph.adj(t) & allowed).unwrap().elements() {
                *slot += &cur[v];
            }
        }
        cur = next;
    }
    let mut total = R::zero();
    for (t, v) in cur.iter().enumerate() {
        if allowed >> t & 1 == 1 {
            total += v;
        }
    }
    Ok(total)
}

/// Number of Hamiltonian paths starting at `start`, by the sieve
/// `sum over X of (-1)^{|X|} (walks of n nodes avoiding X)`. Terms with
/// `start` in X vanish, so X ranges over subsets of the other n-1 nodes.
pub fn hamiltonian_count_from<R: CountRing>(graph: &Graph, start: usize) -> Result<R> {
    let n = graph.node_count();
    if n == 0 {
        return Err(Error::invalid("hamiltonian count needs at least one node"));
    }
    if start >= n {
        return Err(Error::invalid(format!("start node {start} outside 0..{n}")));
    }
    if n > HAMPATH_CAP {
        return Err(Error::cap(format!(
            "hamiltonian sieve on {n} nodes (cap {HAMPATH_CAP})"
        )));
    }
    // Index the n-1 non-start nodes and run the generic sieve over them;
    // terms with the start avoided would contribute nothing anyway.
    let others: Vec<usize> = graph
        .nodes()
        .difference(&BitSubset::singleton(n, start))
        .elements()
        .collect();
    let acc: R = sieve_complement_of_union(others.len(), |x| {
        let mut avoid = BitSubset::empty(n);
        for i in x.elements() {
            avoid.insert(others[i]);
        }
        walks_avoiding(graph, &avoid, start, n)
    })?;
    assert!(
        acc >= R::zero(),
        "hamiltonian count came out negative; sieve arithmetic is corrupted"
    );
    Ok(acc)
}

/// Total number of undirected Hamiltonian paths: half the sum over all
/// starting nodes, since every path is counted once per endpoint.
pub fn hamiltonian_count_total(graph: &Graph) -> Result<Count> {
    let n = graph.node_count();
    if n < 2 {
        return Err(Error::invalid("total path count needs at least two nodes"));
    }
    let mut sum = Count::from(0);
    for start in 0..n {
        sum += hamiltonian_count_from::<Count>(graph, start)?;
    }
    assert!(
        (&sum % 2u32) == Count::from(0),
        "endpoint sum must be even; sieve arithmetic is corrupted"
    );
    Ok(sum / 2)
}
