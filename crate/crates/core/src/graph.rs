//! Undirected simple graphs on at most 63 nodes, stored as per-node adjacency
//! bitmasks.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::rng::SplitMix64;
use crate::subset::{BitSubset, GROUND_SET_MAX};

/// Undirected simple graph. Invariants: adjacency is symmetric, no
/// self-loops, `m` equals half the total popcount of the rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    m: usize,
}

impl Graph {
    pub fn edgeless(n: usize) -> Result<Self> {
        if n > GROUND_SET_MAX {
            return Err(Error::invalid(format!(
                "node count {n} exceeds the maximum of {GROUND_SET_MAX}"
            )));
        }
        Ok(Graph { n, adj: vec![0; n], m: 0 })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::edgeless(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph directly from adjacency rows, rejecting asymmetric data
    /// and self-loops.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self> {
        let n = adj.len();
        if n > GROUND_SET_MAX {
            return Err(Error::invalid(format!(
                "node count {n} exceeds the maximum of {GROUND_SET_MAX}"
            )));
        }
        let full = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
        let mut total = 0u32;
        for (v, &row) in adj.iter().enumerate() {
            if row & !full != 0 {
                return Err(Error::invalid(format!(
                    "adjacency row {v} has bits outside the node set"
                )));
            }
            if row >> v & 1 == 1 {
                return Err(Error::invalid(format!("self-loop at node {v}")));
            }
            total += row.count_ones();
            for u in BitSubset::new(n, row)?.elements() {
                if adj[u] >> v & 1 == 0 {
                    return Err(Error::invalid(format!(
                        "asymmetric adjacency between nodes {u} and {v}"
                    )));
                }
            }
        }
        Ok(Graph { n, adj, m: (total / 2) as usize })
    }

    fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::invalid(format!(
                "edge ({u},{v}) references a node outside 0..{}",
                self.n
            )));
        }
        if u == v {
            return Err(Error::invalid(format!("self-loop at node {u}")));
        }
        if self.adj[u] >> v & 1 == 1 {
            return Err(Error::invalid(format!("duplicate edge ({u},{v})")));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        self.m += 1;
        Ok(())
    }

    #[inline]
    pub fn node_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.m
    }

    /// Neighbor mask of `v`.
    #[inline]
    pub fn adj(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> BitSubset {
        BitSubset::new(self.n, self.adj[v]).unwrap()
    }

    /// Closed neighborhood mask: `v` together with its neighbors.
    #[inline]
    pub fn closed_neighborhood(&self, v: usize) -> u64 {
        self.adj[v] | 1 << v
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> u32 {
        self.adj[v].count_ones()
    }

    pub fn nodes(&self) -> BitSubset {
        BitSubset::full(self.n)
    }

    /// Edges as `(u, v)` pairs with `u < v`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for v in BitSubset::new(self.n, self.adj[u] & !((1 << u) | ((1 << u) - 1)))
                .unwrap()
                .elements()
            {
                out.push((u, v));
            }
        }
        out
    }

    /// Number of edges with both endpoints in `mask`.
    pub fn edges_within(&self, mask: u64) -> u32 {
        let mut e = 0;
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            e += (self.adj[v] & rest).count_ones();
        }
        e
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Self::edgeless(n)?;
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v)?;
            }
        }
        Ok(g)
    }

    /// Path 0-1-..-(n-1).
    pub fn path(n: usize) -> Result<Self> {
        let mut g = Self::edgeless(n)?;
        for v in 1..n {
            g.add_edge(v - 1, v)?;
        }
        Ok(g)
    }

    /// Cycle on n >= 3 nodes.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::invalid("cycle needs at least 3 nodes"));
        }
        let mut g = Self::path(n)?;
        g.add_edge(0, n - 1)?;
        Ok(g)
    }

    /// Star with center 0 and n-1 leaves.
    pub fn star(n: usize) -> Result<Self> {
        let mut g = Self::edgeless(n)?;
        for v in 1..n {
            g.add_edge(0, v)?;
        }
        Ok(g)
    }

    /// Erdos-Renyi style graph: each pair is an edge with probability
    /// `num/den`, drawn from the given generator.
    pub fn random(n: usize, num: u64, den: u64, rng: &mut SplitMix64) -> Result<Self> {
        let mut g = Self::edgeless(n)?;
        for u in 0..n {
            for v in u + 1..n {
                if rng.next_bool(num, den) {
                    g.add_edge(u, v)?;
                }
            }
        }
        Ok(g)
    }

    /// Random connected graph: a random tree plus extra edges with
    /// probability `num/den`.
    pub fn random_connected(n: usize, num: u64, den: u64, rng: &mut SplitMix64) -> Result<Self> {
        let mut g = Self::edgeless(n)?;
        for v in 1..n {
            let parent = rng.next_below(v as u64) as usize;
            g.add_edge(parent, v)?;
        }
        for u in 0..n {
            for v in u + 1..n {
                if !g.has_edge(u, v) && rng.next_bool(num, den) {
                    g.add_edge(u, v)?;
                }
            }
        }
        Ok(g)
    }

    /// Parses the graph file format: optional `#` comment lines, a header
    /// `n m`, then `m` lines `u v` with `0 <= u < v < n`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = content_lines(text);
        let (header_no, header) = lines
            .next()
            .ok_or_else(|| Error::parse(1, "missing header line \"n m\""))?;
        let mut it = header.split_whitespace();
        let n: usize = parse_field(it.next(), header_no, "node count")?;
        let m: usize = parse_field(it.next(), header_no, "edge count")?;
        if it.next().is_some() {
            return Err(Error::parse(header_no, "header must be exactly \"n m\""));
        }
        let mut g = Self::edgeless(n).map_err(|e| Error::parse(header_no, e.to_string()))?;
        let mut seen = 0usize;
        for (line_no, line) in lines {
            if seen == m {
                return Err(Error::parse(line_no, format!("more than {m} edge lines")));
            }
            let mut it = line.split_whitespace();
            let u: usize = parse_field(it.next(), line_no, "edge endpoint")?;
            let v: usize = parse_field(it.next(), line_no, "edge endpoint")?;
            if it.next().is_some() {
                return Err(Error::parse(line_no, "edge line must be exactly \"u v\""));
            }
            if u == v {
                return Err(Error::parse(line_no, format!("self-loop at node {u}")));
            }
            if u > v {
                return Err(Error::parse(
                    line_no,
                    format!("edge ({u},{v}) must satisfy u < v"),
                ));
            }
            g.add_edge(u, v).map_err(|e| Error::parse(line_no, e.to_string()))?;
            seen += 1;
        }
        if seen != m {
            return Err(Error::parse(
                last_line(text),
                format!("expected {m} edges, found {seen}"),
            ));
        }
        Ok(g)
    }

    /// Serializes in the same file format, edges in lexicographic order.
    pub fn to_file_string(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.n, self.m);
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

/// Yields `(1-based line number, trimmed content)` for lines that are neither
/// blank nor `#` comments.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r').trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub(crate) fn last_line(text: &str) -> usize {
    text.lines().count().max(1)
}

pub(crate) fn parse_field<T: std::str::FromStr>(
    tok: Option<&str>,
    line: usize,
    what: &str,
) -> Result<T> {
    let tok = tok.ok_or_else(|| Error::parse(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| Error::parse(line, format!("invalid {what} {tok:?}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Triangle 0,1,2 plus pendant node 3 attached to 0.
    pub(crate) fn paw() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (0, 3)]).unwrap()
    }

    #[test]
    fn parse_g1() {
        let g = Graph::parse("4 4\n0 1\n0 2\n1 2\n0 3\n").unwrap();
        assert_eq!(g, paw());
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.degree(0), 3);
        assert_eq!(g.neighbors(3).elements().collect::<Vec<_>>(), vec![0]);
    }

    #[test]
    fn parse_k1_and_comments_and_crlf() {
        let g = Graph::parse("1 0").unwrap();
        assert_eq!(g.node_count(), 1);
        assert_eq!(g.edge_count(), 0);

        let g = Graph::parse("# a comment\r\n3 1\r\n# another\r\n0 2\r\n").unwrap();
        assert!(g.has_edge(0, 2));
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        match Graph::parse("2 1\n0 0\n") {
            Err(Error::Parse { line, msg }) => {
                assert_eq!(line, 2);
                assert!(msg.contains("self-loop"), "{msg}");
            }
            other => panic!("expected self-loop parse error, got {other:?}"),
        }
        match Graph::parse("3 2\n0 1\n0 1\n") {
            Err(Error::Parse { line: 3, msg }) => assert!(msg.contains("duplicate")),
            other => panic!("expected duplicate-edge error, got {other:?}"),
        }
        match Graph::parse("2 1\n0 5\n") {
            Err(Error::Parse { line: 2, msg }) => assert!(msg.contains("outside")),
            other => panic!("expected out-of-range error, got {other:?}"),
        }
        match Graph::parse("2 1\n1 0\n") {
            Err(Error::Parse { line: 2, .. }) => {}
            other => panic!("expected u < v error, got {other:?}"),
        }
        assert!(Graph::parse("x y\n").is_err());
        assert!(Graph::parse("3 2\n0 1\n").is_err(), "missing edge line");
    }

    #[test]
    fn symmetry_and_edge_count_invariants() {
        let g = paw();
        let total: u32 = (0..g.node_count()).map(|v| g.degree(v)).sum();
        assert_eq!(total as usize, 2 * g.edge_count());
        for u in 0..g.node_count() {
            for v in 0..g.node_count() {
                assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
            }
            assert!(!g.has_edge(u, u));
        }
    }

    #[test]
    fn from_adjacency_rejects_asymmetry() {
        assert!(Graph::from_adjacency(vec![0b010, 0b000, 0b000]).is_err());
        assert!(Graph::from_adjacency(vec![0b001]).is_err(), "self-loop");
        let g = Graph::from_adjacency(vec![0b010, 0b001]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn roundtrip() {
        let g = paw();
        assert_eq!(Graph::parse(&g.to_file_string()).unwrap(), g);
    }

    #[test]
    fn edges_within_counts() {
        let g = paw();
        assert_eq!(g.edges_within(0b0111), 3); // the triangle
        assert_eq!(g.edges_within(0b1111), 4);
        assert_eq!(g.edges_within(0b1010), 0); // B and D are not adjacent
    }

    #[test]
    fn random_connected_is_connected() {
        let mut rng = SplitMix64::new(7);
        for _ in 0..20 {
            let g = Graph::random_connected(8, 1, 4, &mut rng).unwrap();
            // BFS from 0
            let mut seen = 1u64;
            let mut frontier = vec![0usize];
            while let Some(v) = frontier.pop() {
                for u in g.neighbors(v).elements() {
                    if seen >> u & 1 == 0 {
                        seen |= 1 << u;
                        frontier.push(u);
                    }
                }
            }
            assert_eq!(seen, g.nodes().mask());
        }
    }
}
