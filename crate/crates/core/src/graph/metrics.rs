use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;

use super::{Edge, Graph, GraphError};

/// Coarse shape of a graph by connectivity and edge count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StructuralClass {
    /// Acyclic and disconnected.
    Forest,
    Tree,
    Unicyclic,
    Bicyclic,
    Other,
}

/// The components left after deleting every cycle edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeripheralForest {
    /// `component_of[x]` indexes into `components`.
    pub component_of: Vec<usize>,
    /// Vertex sets, each sorted, ordered by smallest member.
    pub components: Vec<Vec<usize>>,
}

impl PeripheralForest {
    /// Vertex set of the tree containing `x`.
    pub fn tree_of(&self, x: usize) -> &[usize] {
        &self.components[self.component_of[x]]
    }
}

impl Graph {
    /// BFS distances from `source`; `None` marks unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for w in self.neighbors(u) {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Shortest-path length, `None` when `u` and `v` are disconnected.
    pub fn distance(&self, u: usize, v: usize) -> Result<Option<usize>, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.distances_from(u)[v])
    }

    /// Largest pairwise distance; `None` (infinite) when disconnected.
    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for v in 0..self.n() {
            for d in self.distances_from(v) {
                best = best.max(d?);
            }
        }
        Some(best)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.distances_from(0).iter().all(Option::is_some)
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; self.n()];
        let mut parent = vec![usize::MAX; self.n()];
        for root in 0..self.n() {
            dist.fill(usize::MAX);
            parent.fill(usize::MAX);
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                // Nothing shorter can close beyond this depth.
                if best.is_some_and(|b| 2 * dist[u] + 1 >= b) {
                    break;
                }
                for w in self.neighbors(u) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    pub fn pendant_vertices(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.degree(v) == 1).collect()
    }

    /// Edges that are not bridges, i.e. that lie on at least one cycle.
    pub fn cycle_edges(&self) -> BTreeSet<Edge> {
        let bridges = self.bridges();
        self.edges()
            .into_iter()
            .filter(|e| !bridges.contains(e))
            .collect()
    }

    /// Bridges via iterative low-link DFS.
    pub fn bridges(&self) -> BTreeSet<Edge> {
        let n = self.n();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut bridges = BTreeSet::new();
        let mut time = 0;
        let adj: Vec<Vec<usize>> = (0..n).map(|v| self.neighbors(v).collect()).collect();
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            // (vertex, parent, next neighbor index)
            let mut stack = vec![(root, usize::MAX, 0usize)];
            disc[root] = time;
            low[root] = time;
            time += 1;
            while let Some(&mut (u, p, ref mut i)) = stack.last_mut() {
                if let Some(&w) = adj[u].get(*i) {
                    *i += 1;
                    if w == p {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        stack.push((w, u, 0));
                    } else {
                        low[u] = low[u].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if p != usize::MAX {
                        low[p] = low[p].min(low[u]);
                        if low[u] > disc[p] {
                            bridges.insert(Edge::new(p, u));
                        }
                    }
                }
            }
        }
        bridges
    }

    /// Components of the graph with all cycle edges deleted.
    pub fn peripheral_forest(&self) -> PeripheralForest {
        let mut forest = self.clone();
        for e in self.cycle_edges() {
            forest.remove_edge(e.u, e.v);
        }
        let components = forest.components();
        let mut component_of = vec![0; self.n()];
        for (i, comp) in components.iter().enumerate() {
            for &v in comp {
                component_of[v] = i;
            }
        }
        PeripheralForest {
            component_of,
            components,
        }
    }

    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.edge_count() + 1 == self.n() && self.is_connected()
    }

    /// Tree of diameter at most 2; `K1` and `K2` count.
    pub fn is_star(&self) -> bool {
        self.is_tree() && self.diameter().is_some_and(|d| d <= 2)
    }

    /// Tree of diameter exactly 3.
    pub fn is_double_star(&self) -> bool {
        self.is_tree() && self.diameter() == Some(3)
    }

    pub fn structural_class(&self) -> StructuralClass {
        let n = self.n();
        let m = self.edge_count();
        if self.is_connected() && n > 0 {
            match m + 1 {
                x if x == n => StructuralClass::Tree,
                x if x == n + 1 => StructuralClass::Unicyclic,
                x if x == n + 2 => StructuralClass::Bicyclic,
                _ => StructuralClass::Other,
            }
        } else if m + self.components().len() == n {
            StructuralClass::Forest
        } else {
            StructuralClass::Other
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::*;

    fn tri_plus_edge() -> Graph {
        make_cycle(3)
            .unwrap()
            .disjoint_union(&make_path(1).unwrap())
    }

    #[test]
    fn connectivity() {
        assert!(!tri_plus_edge().is_connected());
        assert!(make_cycle(5).unwrap().is_connected());
        assert!(Graph::empty(0).is_connected());
        assert!(Graph::empty(1).is_connected());
        assert!(!Graph::empty(2).is_connected());
    }

    #[test]
    fn girth_values() {
        assert_eq!(make_cycle(5).unwrap().girth(), Some(5));
        assert_eq!(make_theta(2, 2, 2).unwrap().girth(), Some(4));
        assert_eq!(make_path(6).unwrap().girth(), None);
        assert_eq!(make_double_star(3, 4).unwrap().girth(), None);
        assert_eq!(make_complete_bipartite(3, 3).unwrap().girth(), Some(4));
    }

    #[test]
    fn distances() {
        let p = make_path(2).unwrap();
        assert_eq!(p.distance(0, 2), Ok(Some(2)));
        assert_eq!(p.distance(1, 1), Ok(Some(0)));
        assert!(p.distance(0, 3).is_err());
        assert_eq!(tri_plus_edge().distance(0, 4), Ok(None));

        // Θ(1,2,4) with a pendant on each of the two middle vertices of
        // the long path: the leaves sit 1 + 2 + 1 apart.
        let mut g = make_theta(1, 2, 4).unwrap();
        // long path is 0-3-4-5-1
        let a = g.add_vertex();
        g.add_edge(3, a);
        let b = g.add_vertex();
        g.add_edge(5, b);
        assert_eq!(g.distance(a, b), Ok(Some(4)));
    }

    #[test]
    fn diameters() {
        assert_eq!(make_star(5).unwrap().diameter(), Some(2));
        assert_eq!(make_double_star(2, 3).unwrap().diameter(), Some(3));
        assert_eq!(tri_plus_edge().diameter(), None);
    }

    #[test]
    fn pendants() {
        assert_eq!(make_star(4).unwrap().pendant_vertices(), vec![1, 2, 3]);
        assert!(make_cycle(4).unwrap().pendant_vertices().is_empty());
        let mut g = make_bowtie(3, 3).unwrap();
        g.add_pendants(0, 1);
        assert_eq!(g.pendant_vertices(), vec![5]);
    }

    #[test]
    fn cycle_edges_are_non_bridges() {
        assert!(make_path(5).unwrap().cycle_edges().is_empty());
        let mut g = make_cycle(3).unwrap();
        g.add_pendants(0, 1);
        assert_eq!(
            g.cycle_edges().into_iter().collect::<Vec<_>>(),
            vec![Edge::new(0, 1), Edge::new(0, 2), Edge::new(1, 2)]
        );
        let s = make_sandglass(3, 3, 1).unwrap();
        let cyc = s.cycle_edges();
        assert_eq!(cyc.len(), 6);
        // Oracle: an edge is a bridge iff deleting it disconnects the graph.
        for e in s.edges() {
            let mut h = s.clone();
            h.remove_edge(e.u, e.v);
            assert_eq!(cyc.contains(&e), h.is_connected(), "{e}");
        }
    }

    #[test]
    fn peripheral_forests() {
        let mut g = make_cycle(3).unwrap();
        g.add_pendants(1, 2);
        let f = g.peripheral_forest();
        assert_eq!(f.tree_of(1), &[1, 3, 4]);
        assert!(g.induced_subgraph(f.tree_of(1)).is_star());
        assert_eq!(
            make_cycle(5).unwrap().peripheral_forest().components.len(),
            5
        );
        let ds = make_double_star(3, 3).unwrap();
        assert_eq!(
            ds.peripheral_forest().components,
            vec![(0..6).collect::<Vec<_>>()]
        );
    }

    #[test]
    fn stars() {
        assert!(make_star(6).unwrap().is_star());
        assert!(make_star(1).unwrap().is_star());
        assert!(make_star(2).unwrap().is_star());
        assert!(make_path(3).unwrap().is_double_star());
        let c4 = make_cycle(4).unwrap();
        assert!(!c4.is_star() && !c4.is_double_star());
    }

    #[test]
    fn structural_classes() {
        assert_eq!(
            make_cycle(7).unwrap().structural_class(),
            StructuralClass::Unicyclic
        );
        assert_eq!(
            make_theta(1, 2, 3).unwrap().structural_class(),
            StructuralClass::Bicyclic
        );
        assert_eq!(tri_plus_edge().structural_class(), StructuralClass::Other);
        assert_eq!(
            make_path(3).unwrap().structural_class(),
            StructuralClass::Tree
        );
        assert_eq!(Graph::empty(3).structural_class(), StructuralClass::Forest);
        assert_eq!(
            make_complete_bipartite(3, 3).unwrap().structural_class(),
            StructuralClass::Other
        );
    }
}
