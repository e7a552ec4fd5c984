//! Simple undirected graphs on vertices `0..n`.

mod bicyclic;
mod families;
mod metrics;

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::sequence::DegreeSequence;

pub use bicyclic::{bicyclic_core, two_core, BicyclicCore, CoreKind};
pub use families::{
    make_bowtie, make_complete_bipartite, make_cycle, make_double_star, make_path, make_sandglass,
    make_star, make_theta,
};
pub use metrics::{PeripheralForest, StructuralClass};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}")]
    DuplicateEdge(Edge),
    #[error("invalid parameters for {family}: {reason}")]
    Construction {
        family: &'static str,
        reason: String,
    },
    #[error("graph is not bicyclic ({0:?})")]
    NotBicyclic(StructuralClass),
    #[error("edge list line {line}: {reason}")]
    EdgeList { line: usize, reason: String },
}

/// An undirected edge, stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Self {
        if a <= b {
            Self { u: a, v: b }
        } else {
            Self { u: b, v: a }
        }
    }

    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    pub fn touches(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

impl From<(usize, usize)> for Edge {
    fn from((a, b): (usize, usize)) -> Self {
        Edge::new(a, b)
    }
}

/// Adjacency-set graph. Symmetric and loop-free by construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adjacency: Vec<BTreeSet<usize>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Self {
            adjacency: vec![BTreeSet::new(); n],
        }
    }

    pub fn from_edges<I, E>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = E>,
        E: Into<Edge>,
    {
        let mut g = Self::empty(n);
        for e in edges {
            let e = e.into();
            g.check_vertex(e.v)?;
            if e.is_loop() {
                return Err(GraphError::SelfLoop(e.u));
            }
            if !g.add_edge(e.u, e.v) {
                return Err(GraphError::DuplicateEdge(e));
            }
        }
        Ok(g)
    }

    /// Row `i` of `masks` is the neighbor bitset of vertex `i`.
    pub(crate) fn from_masks(masks: &[u64]) -> Self {
        let adjacency = masks
            .iter()
            .map(|&m| {
                let mut set = BTreeSet::new();
                let mut bits = m;
                while bits != 0 {
                    set.insert(bits.trailing_zeros() as usize);
                    bits &= bits - 1;
                }
                set
            })
            .collect();
        Self { adjacency }
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[v].iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency.get(u).is_some_and(|s| s.contains(&v))
    }

    /// Inserts `uv`; returns `false` if it was already present.
    ///
    /// Panics on a loop or an out-of-range endpoint.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(u != v, "self-loop at vertex {u}");
        assert!(u < self.n() && v < self.n(), "edge {u}-{v} out of range");
        let fresh = self.adjacency[u].insert(v);
        self.adjacency[v].insert(u);
        fresh
    }

    /// Removes `uv`; returns `false` if it was absent.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if u >= self.n() || v >= self.n() {
            return false;
        }
        let present = self.adjacency[u].remove(&v);
        self.adjacency[v].remove(&u);
        present
    }

    /// Appends a new isolated vertex and returns its id.
    pub fn add_vertex(&mut self) -> usize {
        self.adjacency.push(BTreeSet::new());
        self.n() - 1
    }

    /// Attaches `count` new pendant vertices to `v`.
    pub fn add_pendants(&mut self, v: usize, count: usize) {
        for _ in 0..count {
            let p = self.add_vertex();
            self.add_edge(v, p);
        }
    }

    /// All edges, sorted lexicographically.
    pub fn edges(&self) -> Vec<Edge> {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.range(u + 1..).map(move |&v| Edge { u, v }))
            .collect()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(BTreeSet::len).collect()
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::new(self.degrees())
    }

    /// Checks the representation invariants: symmetry and no loops.
    pub fn is_simple(&self) -> bool {
        self.adjacency.iter().enumerate().all(|(u, nbrs)| {
            nbrs.iter()
                .all(|&v| v != u && v < self.n() && self.adjacency[v].contains(&u))
        })
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }

    /// Subgraph induced on `vertices`, relabeled `0..k` in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut sub = Graph::empty(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            for w in self.neighbors(v) {
                let j = index[w];
                if j != usize::MAX && i < j {
                    sub.add_edge(i, j);
                }
            }
        }
        sub
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let offset = self.n();
        let mut g = self.clone();
        g.adjacency.extend(
            other
                .adjacency
                .iter()
                .map(|s| s.iter().map(|&v| v + offset).collect()),
        );
        g
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::empty(self.n());
        for e in self.edges() {
            g.add_edge(perm[e.u], perm[e.v]);
        }
        g
    }

    /// Edge-list text: `n` on the first line, then one sorted `u v` pair per line.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{}\n", self.n());
        for e in self.edges() {
            out.push_str(&format!("{} {}\n", e.u, e.v));
        }
        out
    }

    pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let bad = |line, reason: &str| GraphError::EdgeList {
            line,
            reason: reason.to_string(),
        };
        let (first, header) = lines.next().ok_or_else(|| bad(1, "missing vertex count"))?;
        let n: usize = header
            .parse()
            .map_err(|_| bad(first, "expected vertex count"))?;
        let mut g = Graph::empty(n);
        for (line, text) in lines {
            let mut parts = text.split_whitespace();
            let mut endpoint = || -> Result<usize, GraphError> {
                parts
                    .next()
                    .ok_or_else(|| bad(line, "expected `u v`"))?
                    .parse()
                    .map_err(|_| bad(line, "endpoint is not a vertex id"))
            };
            let (u, v) = (endpoint()?, endpoint()?);
            if parts.next().is_some() {
                return Err(bad(line, "trailing tokens"));
            }
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if !g.add_edge(u, v) {
                return Err(GraphError::DuplicateEdge(Edge::new(u, v)));
            }
        }
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edges_are_normalized_and_sorted() {
        let g = Graph::from_edges(4, [(3, 1), (0, 2), (1, 0)]).unwrap();
        let edges: Vec<_> = g.edges().iter().map(|e| (e.u, e.v)).collect();
        assert_eq!(edges, vec![(0, 1), (0, 2), (1, 3)]);
        assert!(g.is_simple());
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert_eq!(Graph::from_edges(2, [(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert!(matches!(
            Graph::from_edges(2, [(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        ));
        assert!(matches!(
            Graph::from_edges(3, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(_))
        ));
    }

    #[test]
    fn edge_list_round_trip() {
        let g = make_theta(1, 2, 2).unwrap();
        let text = g.to_edge_list();
        assert_eq!(text, "4\n0 1\n0 2\n0 3\n1 2\n1 3\n");
        assert_eq!(Graph::parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn edge_list_errors_carry_line_numbers() {
        assert!(matches!(
            Graph::parse_edge_list("3\n0 1\n1 x\n"),
            Err(GraphError::EdgeList { line: 3, .. })
        ));
        assert!(matches!(
            Graph::parse_edge_list("3\n0 5\n"),
            Err(GraphError::VertexOutOfRange { .. })
        ));
        assert!(Graph::parse_edge_list("").is_err());
    }

    #[test]
    fn union_and_induced() {
        let g = make_cycle(3)
            .unwrap()
            .disjoint_union(&make_path(1).unwrap());
        assert_eq!(g.n(), 5);
        assert!(g.has_edge(3, 4));
        let sub = g.induced_subgraph(&[4, 3, 0]);
        assert_eq!(sub.edges(), vec![Edge::new(0, 1)]);
    }
}
