//! Locating the sandglass / bowtie / theta skeleton of a bicyclic graph.

use serde::Serialize;

use super::{Graph, GraphError, StructuralClass};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CoreKind {
    Sandglass,
    Bowtie,
    Theta,
}

/// The 2-core of a bicyclic graph, with explicit vertex walks.
///
/// * sandglass `S(r,s,t)`: `cycles[0]` has length `r <= s = cycles[1].len()`,
///   each listed from its attachment vertex; `paths[0]` runs from
///   `cycles[0][0]` to `cycles[1][0]` with `t` edges.
/// * bowtie `B(r,s)`: two cycles listed from the shared hub, `r <= s`.
/// * theta `Θ(r,s,t)`: three paths from one branch vertex to the other,
///   ordered by length `r <= s <= t`.
///
/// Cycles are listed without repeating the start vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BicyclicCore {
    pub kind: CoreKind,
    pub cycles: Vec<Vec<usize>>,
    pub paths: Vec<Vec<usize>>,
}

impl BicyclicCore {
    /// `(r, s, t)`; `t` is `None` for a bowtie.
    pub fn params(&self) -> (usize, usize, Option<usize>) {
        match self.kind {
            CoreKind::Sandglass => (
                self.cycles[0].len(),
                self.cycles[1].len(),
                Some(self.paths[0].len() - 1),
            ),
            CoreKind::Bowtie => (self.cycles[0].len(), self.cycles[1].len(), None),
            CoreKind::Theta => (
                self.paths[0].len() - 1,
                self.paths[1].len() - 1,
                Some(self.paths[2].len() - 1),
            ),
        }
    }
}

/// Vertices of the 2-core: what survives repeatedly deleting vertices of
/// degree at most one.
pub fn two_core(g: &Graph) -> Vec<bool> {
    let mut alive = vec![true; g.n()];
    let mut degree = g.degrees();
    let mut stack: Vec<usize> = (0..g.n()).filter(|&v| degree[v] <= 1).collect();
    while let Some(v) = stack.pop() {
        if !alive[v] {
            continue;
        }
        alive[v] = false;
        for w in g.neighbors(v) {
            if alive[w] {
                degree[w] -= 1;
                if degree[w] == 1 {
                    stack.push(w);
                }
            }
        }
    }
    alive
}

/// Identifies the unique bicyclic skeleton by peeling to the 2-core.
///
/// Branch vertices and walk directions are taken in ascending id order,
/// so the result is deterministic.
pub fn bicyclic_core(g: &Graph) -> Result<BicyclicCore, GraphError> {
    let class = g.structural_class();
    if class != StructuralClass::Bicyclic {
        return Err(GraphError::NotBicyclic(class));
    }
    let alive = two_core(g);
    let core_nbrs = |v: usize| -> Vec<usize> { g.neighbors(v).filter(|&w| alive[w]).collect() };
    let branch: Vec<usize> = (0..g.n())
        .filter(|&v| alive[v] && core_nbrs(v).len() >= 3)
        .collect();

    // Follow degree-2 core vertices from `start` through `first` until the
    // next branch vertex.
    let walk = |start: usize, first: usize| -> Vec<usize> {
        let mut path = vec![start, first];
        let (mut prev, mut cur) = (start, first);
        while core_nbrs(cur).len() == 2 {
            let next = core_nbrs(cur).into_iter().find(|&w| w != prev).unwrap();
            path.push(next);
            prev = cur;
            cur = next;
        }
        path
    };

    match branch.as_slice() {
        &[hub] => {
            let mut cycles: Vec<Vec<usize>> = Vec::new();
            for w in core_nbrs(hub) {
                if cycles.iter().any(|c| c.contains(&w)) {
                    continue;
                }
                let mut cycle = walk(hub, w);
                cycle.pop();
                cycles.push(cycle);
            }
            cycles.sort_by_key(Vec::len);
            Ok(BicyclicCore {
                kind: CoreKind::Bowtie,
                cycles,
                paths: Vec::new(),
            })
        }
        &[a, b] => {
            let mut loops: Vec<Vec<usize>> = Vec::new();
            let mut bridges: Vec<Vec<usize>> = Vec::new();
            for w in core_nbrs(a) {
                if loops
                    .iter()
                    .chain(&bridges)
                    .any(|p| p[1] == w || p[p.len() - 2] == w)
                {
                    continue;
                }
                let path = walk(a, w);
                if *path.last().unwrap() == a {
                    loops.push(path);
                } else {
                    bridges.push(path);
                }
            }
            if loops.is_empty() {
                bridges.sort_by_key(Vec::len);
                return Ok(BicyclicCore {
                    kind: CoreKind::Theta,
                    cycles: Vec::new(),
                    paths: bridges,
                });
            }
            // Sandglass: one cycle at `a`, the connecting path, one cycle at `b`.
            let mut cycle_a = loops.remove(0);
            cycle_a.pop();
            let connector = bridges.remove(0);
            let back = connector[connector.len() - 2];
            let first_b = core_nbrs(b).into_iter().find(|&w| w != back).unwrap();
            let mut cycle_b = walk(b, first_b);
            cycle_b.pop();
            let (cycles, path) = if cycle_a.len() <= cycle_b.len() {
                (vec![cycle_a, cycle_b], connector)
            } else {
                (
                    vec![cycle_b, cycle_a],
                    connector.into_iter().rev().collect(),
                )
            };
            Ok(BicyclicCore {
                kind: CoreKind::Sandglass,
                cycles,
                paths: vec![path],
            })
        }
        other => unreachable!("bicyclic 2-core with {} branch vertices", other.len()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::*;

    #[test]
    fn detects_each_kind() {
        let mut s = make_sandglass(3, 4, 2).unwrap();
        s.add_pendants(0, 2);
        s.add_pendants(3, 1);
        let p = s.n() - 1;
        s.add_pendants(p, 1);
        let core = bicyclic_core(&s).unwrap();
        assert_eq!(core.kind, CoreKind::Sandglass);
        assert_eq!(core.params(), (3, 4, Some(2)));

        let b = bicyclic_core(&make_bowtie(5, 3).unwrap()).unwrap();
        assert_eq!((b.kind, b.params()), (CoreKind::Bowtie, (3, 5, None)));

        let t = bicyclic_core(&make_theta(1, 2, 4).unwrap()).unwrap();
        assert_eq!((t.kind, t.params()), (CoreKind::Theta, (1, 2, Some(4))));
    }

    #[test]
    fn walks_are_real_cycles_and_paths() {
        let g = make_sandglass(5, 3, 3).unwrap();
        let core = bicyclic_core(&g).unwrap();
        for c in &core.cycles {
            for i in 0..c.len() {
                assert!(g.has_edge(c[i], c[(i + 1) % c.len()]));
            }
        }
        let path = &core.paths[0];
        assert_eq!(path[0], core.cycles[0][0]);
        assert_eq!(*path.last().unwrap(), core.cycles[1][0]);
        for w in path.windows(2) {
            assert!(g.has_edge(w[0], w[1]));
        }
    }

    #[test]
    fn rejects_non_bicyclic() {
        assert_eq!(
            bicyclic_core(&make_cycle(5).unwrap()),
            Err(GraphError::NotBicyclic(StructuralClass::Unicyclic))
        );
    }

    #[test]
    fn every_small_core_is_recognized() {
        for r in 3..=6 {
            for s in 3..=6 {
                for t in 1..=4 {
                    let core = bicyclic_core(&make_sandglass(r, s, t).unwrap()).unwrap();
                    assert_eq!(core.params(), (r.min(s), r.max(s), Some(t)));
                }
                let core = bicyclic_core(&make_bowtie(r, s).unwrap()).unwrap();
                assert_eq!(core.params(), (r.min(s), r.max(s), None));
            }
        }
        for r in 1..=5 {
            for s in r.max(2)..=5 {
                for t in s..=5 {
                    let core = bicyclic_core(&make_theta(r, s, t).unwrap()).unwrap();
                    assert_eq!(core.params(), (r, s, Some(t)));
                }
            }
        }
    }
}
