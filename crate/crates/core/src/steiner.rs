//! Minimum Steiner tree size by sieving willows.
//!
//! A willow is a node multiset with a parent function draining into a root;
//! a walk-like relaxation of a tree. A minimum-size willow spanning a node
//! set is a tree, so it suffices to ask, for growing sizes l, whether some
//! size-l willow contains every terminal. That question is answered by an
//! inclusion-exclusion sieve over avoided terminal subsets.
//!
//! The willow recurrence counts rooted willow encodings with some inherent
//! multiplicity (how often a repeated-node willow is counted is not pinned
//! down); only positivity of the sieve matters for the minimum, so the
//! counts here must not be read as a willow census.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ring::CountRing;
use crate::sieve::sieve_complement_of_union;
use crate::subset::BitSubset;

/// A graph with a nonempty terminal set.
#[derive(Clone, Debug)]
pub struct SteinerInstance {
    graph: Graph,
    terminals: BitSubset,
}

impl SteinerInstance {
    pub fn new(graph: Graph, terminals: BitSubset) -> Result<Self> {
        if terminals.ground_size() != graph.node_count() {
            return Err(Error::invalid(
                "terminal set is over a different ground set than the graph",
            ));
        }
        if terminals.is_empty() {
            return Err(Error::invalid("terminal set must be nonempty"));
        }
        Ok(SteinerInstance { graph, terminals })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn terminals(&self) -> &BitSubset {
        &self.terminals
    }
}

/// Number of rooted willow encodings of the given size avoiding the nodes in
/// `avoid`, via `a^1(u) = 1` and
/// `a^k(u) = sum over edges uv, i+j=k of a^i(u) a^j(v)`.
/// All layers up to `size` stay live because the recurrence splits
/// arbitrarily; memory O(size * n).
pub fn willow_count_avoiding<R: CountRing>(
    graph: &Graph,
    avoid: &BitSubset,
    size: usize,
) -> Result<R> {
    let n = graph.node_count();
    if avoid.ground_size() != n {
        return Err(Error::invalid("avoid set is over a different ground set"));
    }
    if size == 0 {
        return Err(Error::invalid("willows have at least one node"));
    }
    let allowed = !avoid.mask();
    let mut layers: Vec<Vec<R>> = Vec::with_capacity(size + 1);
    layers.push(Vec::new()); // no size-0 willows
    let base: Vec<R> = (0..n)
        .map(|u| if allowed >> u & 1 == 1 { R::one() } else { R::zero() })
        .collect();
    layers.push(base);
    for k in 2..=size {
        let mut layer = vec![R::zero(); n];
        for (u, slot) in layer.iter_mut().enumerate() {
            if allowed >> u & 1 == 0 {
                continue;
            }
            for v in BitSubset::new(n, graph.adj(u) & allowed).unwrap().elements() {
                for i in 1..k {
                    let mut prod = layers[i][u].clone();
                    prod *= &layers[k - i][v];
                    *slot += &prod;
                }
            }
        }
        layers.push(layer);
    }
    let mut total = R::zero();
    for (u, v) in layers[size].iter().enumerate() {
        if allowed >> u & 1 == 1 {
            total += v;
        }
    }
    Ok(total)
}

/// The sieve sum at size `l`: number (with multiplicity) of size-l willow
/// encodings containing every terminal. Never negative; positive exactly
/// when some size-l willow spans the terminals.
pub fn steiner_sieve_sum<R: CountRing>(inst: &SteinerInstance, size: usize) -> Result<R> {
    let n = inst.graph.node_count();
    // The sieve ranges over subsets of the terminal set only: index the
    // terminals and run the generic driver over them.
    let terminals: Vec<usize> = inst.terminals.elements().collect();
    let acc: R = sieve_complement_of_union(terminals.len(), |x| {
        let mut avoid = BitSubset::empty(n);
        for i in x.elements() {
            avoid.insert(terminals[i]);
        }
        willow_count_avoiding(inst.graph(), &avoid, size)
    })?;
    assert!(
        acc >= R::zero(),
        "willow sieve came out negative; sieve arithmetic is corrupted"
    );
    Ok(acc)
}

/// Smallest node count of a connected subtree containing all terminals, or
/// `None` when the terminals lie in different components. Tries sizes
/// l = (number of terminals)..=n and stops at the first positive sieve sum.
pub fn steiner_min_size<R: CountRing>(inst: &SteinerInstance) -> Result<Option<usize>> {
    let n = inst.graph().node_count();
    let k = inst.terminals.len() as usize;
    for l in k..=n {
        if steiner_sieve_sum::<R>(inst, l)? > R::zero() {
            return Ok(Some(l));
        }
    }
    Ok(None)
}
