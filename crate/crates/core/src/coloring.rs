//! Graph coloring through independent-set counting.
//!
//! With `g(S)` the number of nonempty independent subsets of `S`, the
//! alternating sum `sum over S of (-1)^{n-|S|} g(S)^k` counts the ordered
//! k-tuples of nonempty independent sets whose union is the whole node set.
//! It is positive exactly when the graph is k-colorable. Note this counts
//! covers, not proper colorings (colorings are the disjoint covers); the
//! Boolean "k-colorable" is what the count shares with a coloring oracle.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ring::{ring_pow, CountRing};
use crate::setfn::{table_cap, SetFunction};
use crate::subset::BitSubset;
use crate::transforms::{mobius_yates_in_place, pointwise_pow, zeta_yates_in_place};

/// Cap on `|s|` for per-subset enumeration (cost 2^{|s|} per call).
pub const POLYSPACE_SUBSET_CAP: u32 = 25;

/// Evaluation strategies for [`cover_count`]; all three produce the same
/// value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoverMethod {
    /// One 2^n table of g via the deletion recurrence, then the alternating
    /// sum. O*(2^n) time, 2^n space.
    Table,
    /// Per-subset enumeration of independent sets. O*(3^n) time, polynomial
    /// space.
    Polyspace,
    /// Transform route: Möbius of the k-th power of the zeta of the
    /// indicator.
    Mobius,
}

/// The full table of `g(S)` = number of nonempty independent subsets of `S`.
#[derive(Clone, Debug)]
pub struct IndepTable<R> {
    graph: Graph,
    table: SetFunction<R>,
}

impl<R: CountRing> IndepTable<R> {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn table(&self) -> &SetFunction<R> {
        &self.table
    }

    pub fn count(&self, s: &BitSubset) -> &R {
        self.table.get(s)
    }
}

/// Builds the g table bottom-up with the deletion recurrence
/// `g(S) = g(S \ {v}) + g(S \ N[v]) + 1`, pivoting on the lowest-index node
/// of `S`.
pub fn indep_table<R: CountRing>(graph: &Graph) -> Result<IndepTable<R>> {
    let n = graph.node_count();
    let mut table = SetFunction::<R>::zeroed(n)?;
    for mask in 1..1u64 << n {
        let v = mask.trailing_zeros() as usize;
        let without_v = mask & !(1 << v);
        let without_nbhd = mask & !graph.closed_neighborhood(v);
        let mut val = table.get_mask(without_v).clone();
        val += table.get_mask(without_nbhd);
        val += &R::one();
        table.set_mask(mask, val);
    }
    Ok(IndepTable { graph: graph.clone(), table })
}

#[inline]
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

/// Counts the nonempty independent subsets of `s` by constructing and
/// testing every nonempty subset; polynomial space, 2^{|s|} |E| time.
pub fn indep_count_polyspace<R: CountRing>(graph: &Graph, s: &BitSubset) -> Result<R> {
    if s.ground_size() != graph.node_count() {
        return Err(Error::invalid("subset is over a different ground set"));
    }
    if s.len() > POLYSPACE_SUBSET_CAP {
        return Err(Error::cap(format!(
            "enumeration over 2^{} subsets (cap 2^{POLYSPACE_SUBSET_CAP})",
            s.len()
        )));
    }
    let mut count = 0u64;
    for sub in s.subsets() {
        if !sub.is_empty() && is_independent(graph, sub.mask()) {
            count += 1;
        }
    }
    Ok(R::from(count))
}

/// Number of ordered k-tuples of nonempty independent sets covering the node
/// set; positive iff the graph is k-colorable.
pub fn cover_count<R: CountRing>(graph: &Graph, k: u64, method: CoverMethod) -> Result<R> {
    if k == 0 {
        return Err(Error::invalid("cover_count requires k >= 1"));
    }
    let n = graph.node_count();
    let result = match method {
        CoverMethod::Table => {
            let tab = indep_table::<R>(graph)?;
            alternating_power_sum(tab.table().values(), n, k)
        }
        CoverMethod::Polyspace => {
            if n as u32 > POLYSPACE_SUBSET_CAP {
                return Err(Error::cap(format!(
                    "polyspace method on {n} nodes (cap {POLYSPACE_SUBSET_CAP})"
                )));
            }
            let mut acc = R::zero();
            for s in BitSubset::all(n) {
                let g: R = indep_count_polyspace(graph, &s)?;
                let term = ring_pow(&g, k);
                if (n as u32 - s.len()).is_multiple_of(2) {
                    acc += &term;
                } else {
                    acc -= &term;
                }
            }
            acc
        }
        CoverMethod::Mobius => cover_table::<R>(graph, k)?.at_full().clone(),
    };
    assert!(
        result >= R::zero(),
        "cover count came out negative; sieve arithmetic is corrupted"
    );
    Ok(result)
}

fn alternating_power_sum<R: CountRing>(values: &[R], n: usize, k: u64) -> R {
    let mut acc = R::zero();
    for (mask, g) in values.iter().enumerate() {
        let term = ring_pow(g, k);
        if (n as u32 - (mask as u64).count_ones()).is_multiple_of(2) {
            acc += &term;
        } else {
            acc -= &term;
        }
    }
    acc
}

/// Table of cover counts for every subset: entry `S` is the number of
/// ordered k-tuples of nonempty independent sets with union exactly `S`.
/// Computed as Möbius of the k-th power of the zeta of the indicator.
pub fn cover_table<R: CountRing>(graph: &Graph, k: u64) -> Result<SetFunction<R>> {
    if k == 0 {
        return Err(Error::invalid("cover_table requires k >= 1"));
    }
    let n = graph.node_count();
    let mut f = SetFunction::<R>::indicator(n, |s| {
        !s.is_empty() && is_independent(graph, s.mask())
    })?;
    zeta_yates_in_place(&mut f);
    let mut powered = pointwise_pow(&f, k)?;
    mobius_yates_in_place(&mut powered);
    Ok(powered)
}

/// Whether the graph is k-colorable, by positivity of the cover count.
pub fn is_k_colorable(graph: &Graph, k: u64) -> Result<bool> {
    Ok(cover_count::<crate::ring::Count>(graph, k, CoverMethod::Table)? > 0.into())
}

/// The chromatic number: smallest k with a positive cover count, searched
/// upward from k = 1 over a single g table. Empty graph: 0.
pub fn chromatic_number<R: CountRing>(graph: &Graph) -> Result<u64> {
    let n = graph.node_count();
    if n == 0 {
        return Ok(0);
    }
    if n > table_cap() {
        return Err(Error::cap(format!(
            "chromatic number needs a 2^{n}-entry table (cap {})",
            table_cap()
        )));
    }
    let tab = indep_table::<R>(graph)?;
    let g = tab.table().values();
    // Maintain g(S)^k incrementally: one multiply per entry per k.
    let mut powers: Vec<R> = g.to_vec();
    for k in 1..=n as u64 {
        if k > 1 {
            for (p, base) in powers.iter_mut().zip(g.iter()) {
                *p *= base;
            }
        }
        let mut acc = R::zero();
        for (mask, p) in powers.iter().enumerate() {
            if (n as u32 - (mask as u64).count_ones()).is_multiple_of(2) {
                acc += p;
            } else {
                acc -= p;
            }
        }
        assert!(
            acc >= R::zero(),
            "cover count came out negative; sieve arithmetic is corrupted"
        );
        if acc > R::zero() {
            return Ok(k);
        }
    }
    unreachable!("a graph on n >= 1 nodes is always n-colorable")
}
