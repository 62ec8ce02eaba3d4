//! Randomized detection of a simple path on k nodes.
//!
//! Every walk on k nodes from a fixed start, labelled by a permutation of
//! {1..k}, contributes a monomial in random GF(2^16) values: one factor per
//! walk edge, one per (node, label) pair. Non-simple walks cancel in
//! characteristic 2 (swap the labels at the first self-intersection), while
//! each simple path contributes a nonzero polynomial; by DeMillo-Lipton-
//! Schwartz-Zippel the random evaluation vanishes with probability below
//! 1/2 when a path exists, and is identically zero when none does.
//!
//! The permutation sum is computed as a sum over label subsets S of {1..k}
//! of walks labelled by arbitrary functions into S (the signs of that sieve
//! vanish in characteristic 2). Per subset, the function sum factorizes
//! through the per-node label sums, leaving a walk DP of k rounds.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::gf16::GF16;
use crate::graph::Graph;
use crate::rng::SplitMix64;

/// Largest supported path length: label subsets must fit one machine word,
/// and 2k(k-1) <= 2^16 keeps the zero-probability bound below 1/2.
pub const KPATH_MAX: usize = 32;

/// Verdict of the randomized detector. `Found` is never wrong; `NotFound`
/// errs with probability below 2^-trials when a path exists.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Detection {
    Found,
    NotFound,
}

/// The random field values for one (seed, graph, k) triple. Regeneration
/// from the same triple is bit-identical: a SplitMix64 stream seeded with
/// `seed`, taking the low 16 bits per draw, assigns values to all edges in
/// (min,max) lexicographic order and then to all (node, label) pairs in
/// lexicographic order, labels 1..=k.
#[derive(Clone, Debug)]
pub struct KPathRandomness {
    seed: u64,
    k: usize,
    n: usize,
    edge_values: HashMap<(usize, usize), GF16>,
    label_values: Vec<GF16>, // node-major, then label 1..=k
}

impl KPathRandomness {
    pub fn new(seed: u64, graph: &Graph, k: usize) -> Self {
        let mut rng = SplitMix64::new(seed);
        let n = graph.node_count();
        let mut edge_values = HashMap::new();
        for (u, v) in graph.edges() {
            edge_values.insert((u, v), GF16(rng.next_u64() as u16));
        }
        let label_values = (0..n * k).map(|_| GF16(rng.next_u64() as u16)).collect();
        KPathRandomness { seed, k, n, edge_values, label_values }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// The edge value r(uv).
    pub fn edge(&self, u: usize, v: usize) -> GF16 {
        let key = (u.min(v), u.max(v));
        *self
            .edge_values
            .get(&key)
            .expect("randomness was generated for a different graph")
    }

    /// The label value r(v, j) for labels j in 1..=k.
    pub fn label(&self, v: usize, j: usize) -> GF16 {
        debug_assert!((1..=self.k).contains(&j));
        self.label_values[v * self.k + (j - 1)]
    }
}

fn validate_k(k: usize) -> Result<()> {
    if !(2..=KPATH_MAX).contains(&k) {
        return Err(Error::invalid(format!("k must be in 2..={KPATH_MAX}, got {k}")));
    }
    // Field-size condition for the error bound; always true for k <= 32.
    if 2 * k * (k - 1) > 1 << 16 {
        return Err(Error::invalid("field too small for this k"));
    }
    Ok(())
}

fn validate(graph: &Graph, k: usize, start: usize, rnd: &KPathRandomness) -> Result<()> {
    validate_k(k)?;
    if start >= graph.node_count() {
        return Err(Error::invalid(format!(
            "start node {start} outside 0..{}",
            graph.node_count()
        )));
    }
    if rnd.k != k || rnd.n != graph.node_count() {
        return Err(Error::invalid(
            "randomness was generated for a different graph or k",
        ));
    }
    Ok(())
}

/// The anchored path statistic: the permutation-labelled walk sum over all
/// walks on k nodes starting at `start`, evaluated at the given randomness.
/// Zero for every seed when no k-path starts at `start`; nonzero with
/// probability above 1/2 per seed when one does.
pub fn kpath_statistic(
    graph: &Graph,
    k: usize,
    start: usize,
    rnd: &KPathRandomness,
) -> Result<GF16> {
    validate(graph, k, start, rnd)?;
    let n = graph.node_count();

    // Adjacency with edge values, for the DP inner loop.
    let neighbors: Vec<Vec<(usize, GF16)>> = (0..n)
        .map(|u| {
            graph
                .neighbors(u)
                .elements()
                .map(|v| (v, rnd.edge(u, v)))
                .collect()
        })
        .collect();

    let mut total = GF16::ZERO;
    let mut label_sum = vec![GF16::ZERO; n];
    for subset in 0..1u64 << k {
        // label_sum(v) = sum of r(v, j) over labels j in the subset.
        for (v, slot) in label_sum.iter_mut().enumerate() {
            let mut acc = GF16::ZERO;
            for j in 1..=k {
                if subset >> (j - 1) & 1 == 1 {
                    acc += &rnd.label(v, j);
                }
            }
            *slot = acc;
        }
        // Walk DP: d_1(v) = [v = start] label_sum(v);
        // d_{i+1}(u) = label_sum(u) * sum over neighbors v of r(vu) d_i(v).
        let mut cur = vec![GF16::ZERO; n];
        cur[start] = label_sum[start];
        for _ in 2..=k {
            let mut next = vec![GF16::ZERO; n];
            for (u, slot) in next.iter_mut().enumerate() {
                let mut acc = GF16::ZERO;
                for &(v, r_e) in &neighbors[u] {
                    acc += &(r_e * cur[v]);
                }
                *slot = label_sum[u] * acc;
            }
            cur = next;
        }
        for d in &cur {
            total += d; // signs vanish in characteristic 2
        }
    }
    Ok(total)
}

/// Runs `trials` independent anchored statistics (per-trial seeds derived
/// from the master seed by counter); without an anchor, each trial sweeps
/// every start node with that trial's randomness. Returns `Found` on the
/// first nonzero statistic.
pub fn kpath_detect(
    graph: &Graph,
    k: usize,
    trials: u32,
    seed: u64,
    anchored_start: Option<usize>,
) -> Result<Detection> {
    if trials == 0 {
        return Err(Error::invalid("at least one trial is required"));
    }
    validate_k(k)?;
    for trial in 0..trials {
        let trial_seed = seed.wrapping_add(u64::from(trial));
        let rnd = KPathRandomness::new(trial_seed, graph, k);
        let starts = match anchored_start {
            Some(start) => start..start + 1,
            None => 0..graph.node_count(),
        };
        for start in starts {
            if kpath_statistic(graph, k, start, &rnd)? != GF16::ZERO {
                return Ok(Detection::Found);
            }
        }
    }
    Ok(Detection::NotFound)
}
