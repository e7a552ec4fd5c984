//! Degree-preserving edge exchanges and the structural transforms built on
//! them.
//!
//! Every transform here is a single [`SwitchMove`] (or a short chain of
//! them) whose edges are read off an explicit skeleton, so the output is a
//! deterministic function of the input graph and core.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::graph::{bicyclic_core, two_core, BicyclicCore, CoreKind, Edge, Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SwitchError {
    #[error(
        "a switch must remove and add the same number (>= 2) of edges, got {removed} and {added}"
    )]
    BadSize { removed: usize, added: usize },
    #[error("edge {0} is listed more than once")]
    Repeated(Edge),
    #[error("edge {0} is both removed and added")]
    Overlap(Edge),
    #[error("added edge {0} is a loop")]
    Loop(Edge),
    #[error("vertex {0} would change degree")]
    Unbalanced(usize),
    #[error("removed edge {0} is not in the graph")]
    MissingEdge(Edge),
    #[error("added edge {0} is already in the graph")]
    EdgePresent(Edge),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("expected a {expected:?} core, got {found:?}")]
    WrongCore { expected: CoreKind, found: CoreKind },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Remove one edge set, add another of the same size, every vertex keeping
/// its degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SwitchMove {
    removed: Vec<Edge>,
    added: Vec<Edge>,
}

impl SwitchMove {
    pub fn new<R, A>(removed: R, added: A) -> Result<Self, SwitchError>
    where
        R: IntoIterator,
        R::Item: Into<Edge>,
        A: IntoIterator,
        A::Item: Into<Edge>,
    {
        let removed: Vec<Edge> = removed.into_iter().map(Into::into).collect();
        let added: Vec<Edge> = added.into_iter().map(Into::into).collect();
        if removed.len() != added.len() || removed.len() < 2 {
            return Err(SwitchError::BadSize {
                removed: removed.len(),
                added: added.len(),
            });
        }
        if let Some(e) = added.iter().find(|e| e.is_loop()) {
            return Err(SwitchError::Loop(*e));
        }
        for list in [&removed, &added] {
            let mut seen = BTreeSet::new();
            if let Some(e) = list.iter().find(|e| !seen.insert(**e)) {
                return Err(SwitchError::Repeated(*e));
            }
        }
        if let Some(e) = removed.iter().find(|e| added.contains(e)) {
            return Err(SwitchError::Overlap(*e));
        }
        let mut delta: BTreeMap<usize, isize> = BTreeMap::new();
        for e in &removed {
            *delta.entry(e.u).or_default() -= 1;
            *delta.entry(e.v).or_default() -= 1;
        }
        for e in &added {
            *delta.entry(e.u).or_default() += 1;
            *delta.entry(e.v).or_default() += 1;
        }
        if let Some((&v, _)) = delta.iter().find(|(_, &d)| d != 0) {
            return Err(SwitchError::Unbalanced(v));
        }
        Ok(Self { removed, added })
    }

    /// The classic two-edge switch `{uv, xy} -> {ux, vy}`.
    pub fn pair(
        uv: (usize, usize),
        xy: (usize, usize),
        ux: (usize, usize),
        vy: (usize, usize),
    ) -> Result<Self, SwitchError> {
        Self::new([uv, xy], [ux, vy])
    }

    pub fn removed(&self) -> &[Edge] {
        &self.removed
    }

    pub fn added(&self) -> &[Edge] {
        &self.added
    }

    /// The move that undoes this one.
    pub fn inverse(&self) -> Self {
        Self {
            removed: self.added.clone(),
            added: self.removed.clone(),
        }
    }
}

impl fmt::Display for SwitchMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |es: &[Edge]| {
            es.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(
            f,
            "{{{}}} -> {{{}}}",
            join(&self.removed),
            join(&self.added)
        )
    }
}

/// Applies `m` to a copy of `g`. The degree sequence is unchanged.
pub fn apply_switch(g: &Graph, m: &SwitchMove) -> Result<Graph, SwitchError> {
    for e in m.removed.iter().chain(&m.added) {
        if e.v >= g.n() {
            return Err(SwitchError::VertexOutOfRange {
                vertex: e.v,
                n: g.n(),
            });
        }
    }
    if let Some(e) = m.removed.iter().find(|e| !g.has_edge(e.u, e.v)) {
        return Err(SwitchError::MissingEdge(*e));
    }
    if let Some(e) = m.added.iter().find(|e| g.has_edge(e.u, e.v)) {
        return Err(SwitchError::EdgePresent(*e));
    }
    let mut out = g.clone();
    for e in &m.removed {
        out.remove_edge(e.u, e.v);
    }
    for e in &m.added {
        out.add_edge(e.u, e.v);
    }
    debug_assert_eq!(out.degrees(), g.degrees());
    Ok(out)
}

fn expect_kind(core: &BicyclicCore, expected: CoreKind) -> Result<(), SwitchError> {
    if core.kind == expected {
        Ok(())
    } else {
        Err(SwitchError::WrongCore {
            expected,
            found: core.kind,
        })
    }
}

/// Turns a sandglass `S(r,s,t)` into a theta `Θ(3, r+s-3, t)`:
/// `{x2x3, y2y3} -> {x2y2, x3y3}` on cycles `x1..xr`, `y1..ys` whose
/// attachment vertices are `x1` and `y1`.
pub fn sandglass_to_theta(g: &Graph, core: &BicyclicCore) -> Result<Graph, SwitchError> {
    expect_kind(core, CoreKind::Sandglass)?;
    let (x, y) = (&core.cycles[0], &core.cycles[1]);
    let m = SwitchMove::pair((x[1], x[2]), (y[1], y[2]), (x[1], y[1]), (x[2], y[2]))?;
    apply_switch(g, &m)
}

/// Shrinks one cycle of a bowtie `B(r,s)` to a triangle, giving
/// `B(3, r+s-3)`: `{x2x3, y2y3} -> {x2y2, y3x3}` with `x1 = y1` the hub.
pub fn bowtie_normalize(g: &Graph, core: &BicyclicCore) -> Result<Graph, SwitchError> {
    expect_kind(core, CoreKind::Bowtie)?;
    let (x, y) = (&core.cycles[0], &core.cycles[1]);
    let m = SwitchMove::pair((x[1], x[2]), (y[1], y[2]), (x[1], y[1]), (y[2], x[2]))?;
    apply_switch(g, &m)
}

/// Result of [`theta_normalize`]: the final graph, its theta paths, and the
/// switches applied in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaNormalization {
    pub graph: Graph,
    /// Three branch-to-branch paths, shortest first.
    pub paths: Vec<Vec<usize>>,
    pub moves: Vec<SwitchMove>,
}

impl ThetaNormalization {
    pub fn lengths(&self) -> (usize, usize, usize) {
        (
            self.paths[0].len() - 1,
            self.paths[1].len() - 1,
            self.paths[2].len() - 1,
        )
    }
}

/// Drives a theta `Θ(r,s,t)` to `Θ(1, 2, r+s+t-3)` with at most two switches.
///
/// With every path of length at least 2, the two shortest paths `x`, `y`
/// are rewired by `{x1x2, y_s y_{s+1}} -> {x1 y_{s+1}, x2 y_s}`, creating a
/// direct branch-to-branch edge. Then, while both other paths have length
/// at least 3, `{y2y3, z_t z_{t+1}} -> {y2 z_{t+1}, y3 z_t}` shortens `y`
/// to length 2.
pub fn theta_normalize(g: &Graph, core: &BicyclicCore) -> Result<ThetaNormalization, SwitchError> {
    expect_kind(core, CoreKind::Theta)?;
    let mut graph = g.clone();
    let mut paths = core.paths.clone();
    let mut moves = Vec::new();
    loop {
        paths.sort_by_key(Vec::len);
        let lens: Vec<usize> = paths.iter().map(|p| p.len() - 1).collect();
        if lens[0] >= 2 {
            let (x, y) = (&paths[0], &paths[1]);
            let s = lens[1];
            let m = SwitchMove::pair(
                (x[0], x[1]),
                (y[s - 1], y[s]),
                (x[0], y[s]),
                (x[1], y[s - 1]),
            )?;
            graph = apply_switch(&graph, &m)?;
            moves.push(m);
            let (a, b) = (x[0], y[s]);
            // a - y2 .. y_s - x2 .. x_r - b
            let mut merged: Vec<usize> = y[..s].to_vec();
            merged.extend_from_slice(&x[1..]);
            paths = vec![vec![a, b], merged, paths[2].clone()];
        } else if lens[1] >= 3 {
            let (y, z) = (&paths[1], &paths[2]);
            let t = lens[2];
            let m = SwitchMove::pair(
                (y[1], y[2]),
                (z[t - 1], z[t]),
                (y[1], z[t]),
                (y[2], z[t - 1]),
            )?;
            graph = apply_switch(&graph, &m)?;
            moves.push(m);
            let (a, b) = (y[0], z[t]);
            // a - z2 .. z_t - y3 .. y_{s+1}
            let mut merged: Vec<usize> = z[..t].to_vec();
            merged.extend_from_slice(&y[2..]);
            paths = vec![paths[0].clone(), vec![a, y[1], b], merged];
        } else {
            break;
        }
    }
    paths.sort_by_key(Vec::len);
    Ok(ThetaNormalization {
        graph,
        paths,
        moves,
    })
}

/// Vertices of the unique cycle of a unicyclic graph, in cyclic order.
fn unique_cycle(g: &Graph, start: usize) -> Vec<usize> {
    let alive = two_core(g);
    let mut cycle = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = g
            .neighbors(cur)
            .find(|&w| alive[w] && w != prev)
            .expect("2-core of a unicyclic graph is a cycle");
        if next == start {
            break;
        }
        cycle.push(next);
        prev = cur;
        cur = next;
    }
    cycle
}

/// For a unicyclic graph of girth 4 or 5 on at least 6 vertices, produces a
/// realization of girth 3: with `y` off the cycle adjacent to `x1`, switch
/// `{x1y, x3x4} -> {x1x3, x4y}`.
pub fn girth_reduce_to_3(g: &Graph) -> Result<Graph, SwitchError> {
    use crate::graph::StructuralClass;
    let bad = |why: &str| Err(SwitchError::Precondition(why.to_string()));
    if g.structural_class() != StructuralClass::Unicyclic {
        return bad("graph is not unicyclic");
    }
    if g.n() < 6 {
        return bad("needs at least 6 vertices");
    }
    let girth = g.girth().unwrap_or(0);
    if !(4..=5).contains(&girth) {
        return bad("girth must be 4 or 5");
    }
    let on_cycle = two_core(g);
    let Some((x1, y)) = (0..g.n())
        .filter(|&v| on_cycle[v])
        .find_map(|v| g.neighbors(v).find(|&w| !on_cycle[w]).map(|w| (v, w)))
    else {
        return bad("no vertex off the cycle is adjacent to it");
    };
    let x = unique_cycle(g, x1);
    let m = SwitchMove::pair((x1, y), (x[2], x[3]), (x1, x[2]), (x[3], y))?;
    apply_switch(g, &m)
}

/// Pinches a cycle `x1..xk` (`k >= 6`) into two shorter ones:
/// `{x1x2, x4x5} -> {x1x5, x2x4}`.
///
/// Degrees are always preserved; whether the result is disconnected depends
/// on what hangs off the cycle, so callers should check
/// [`Graph::is_connected`].
pub fn long_cycle_disconnect(g: &Graph, cycle: &[usize]) -> Result<Graph, SwitchError> {
    let k = cycle.len();
    if k < 6 {
        return Err(SwitchError::Precondition(format!("cycle length {k} < 6")));
    }
    for &v in cycle {
        g.check_vertex(v)?;
    }
    for i in 0..k {
        let e = Edge::new(cycle[i], cycle[(i + 1) % k]);
        if !g.has_edge(e.u, e.v) {
            return Err(SwitchError::MissingEdge(e));
        }
    }
    let x = cycle;
    let m = SwitchMove::pair((x[0], x[1]), (x[3], x[4]), (x[0], x[4]), (x[1], x[3]))?;
    apply_switch(g, &m)
}

/// Convenience: detect the core, then apply the matching normalization.
pub fn normalize_bicyclic(g: &Graph) -> Result<Graph, SwitchError> {
    let core = bicyclic_core(g)?;
    match core.kind {
        CoreKind::Sandglass => sandglass_to_theta(g, &core),
        CoreKind::Bowtie => bowtie_normalize(g, &core),
        CoreKind::Theta => Ok(theta_normalize(g, &core)?.graph),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::*;

    fn core_of(g: &Graph) -> (CoreKind, (usize, usize, Option<usize>)) {
        let c = bicyclic_core(g).unwrap();
        (c.kind, c.params())
    }

    #[test]
    fn move_validation() {
        assert!(matches!(
            SwitchMove::new([(0, 1)], [(0, 1)]),
            Err(SwitchError::BadSize { .. })
        ));
        assert!(matches!(
            SwitchMove::new([(0, 1), (2, 3)], [(0, 2), (1, 1)]),
            Err(SwitchError::Loop(_))
        ));
        assert!(matches!(
            SwitchMove::new([(0, 1), (2, 3)], [(0, 2), (1, 4)]),
            Err(SwitchError::Unbalanced(_))
        ));
        assert!(matches!(
            SwitchMove::new([(0, 1), (2, 3)], [(0, 1), (2, 3)]),
            Err(SwitchError::Overlap(_))
        ));
        assert!(SwitchMove::new([(0, 1), (2, 3)], [(0, 2), (1, 3)]).is_ok());
    }

    #[test]
    fn c6_pinches_into_two_triangles() {
        let c6 = make_cycle(6).unwrap();
        // x1..x6 = 0..5: {x1x2, x4x5} -> {x1x5, x2x4}
        let m = SwitchMove::new([(0, 1), (3, 4)], [(0, 4), (1, 3)]).unwrap();
        let out = apply_switch(&c6, &m).unwrap();
        assert_eq!(out.components(), vec![vec![0, 4, 5], vec![1, 2, 3]]);
        assert_eq!(out.degree_sequence(), c6.degree_sequence());
        assert_eq!(apply_switch(&out, &m.inverse()).unwrap(), c6);
    }

    #[test]
    fn apply_rejects_missing_and_present_edges() {
        let c6 = make_cycle(6).unwrap();
        let m = SwitchMove::new([(0, 2), (3, 4)], [(0, 4), (2, 3)]).unwrap();
        assert_eq!(
            apply_switch(&c6, &m),
            Err(SwitchError::MissingEdge(Edge::new(0, 2)))
        );
        let m = SwitchMove::new([(0, 1), (2, 3)], [(1, 2), (0, 3)]).unwrap();
        assert_eq!(
            apply_switch(&c6, &m),
            Err(SwitchError::EdgePresent(Edge::new(1, 2)))
        );
    }

    #[test]
    fn sandglass_examples() {
        for (r, s, t, want) in [
            (3, 3, 1, (1, 3, 3)),
            (3, 4, 2, (2, 3, 4)),
            (4, 4, 1, (1, 3, 5)),
        ] {
            let g = make_sandglass(r, s, t).unwrap();
            let out = sandglass_to_theta(&g, &bicyclic_core(&g).unwrap()).unwrap();
            assert_eq!(out.degree_sequence(), g.degree_sequence());
            assert_eq!(
                core_of(&out),
                (CoreKind::Theta, (want.0, want.1, Some(want.2)))
            );
        }
    }

    #[test]
    fn bowtie_examples() {
        for (r, s) in [(4, 4), (3, 4), (5, 5), (3, 3)] {
            let g = make_bowtie(r, s).unwrap();
            let out = bowtie_normalize(&g, &bicyclic_core(&g).unwrap()).unwrap();
            assert_eq!(core_of(&out), (CoreKind::Bowtie, (3, r + s - 3, None)));
        }
    }

    #[test]
    fn theta_examples() {
        for ((r, s, t), last) in [((2, 2, 2), 3), ((1, 2, 4), 4), ((2, 3, 3), 5)] {
            let g = make_theta(r, s, t).unwrap();
            let res = theta_normalize(&g, &bicyclic_core(&g).unwrap()).unwrap();
            assert_eq!(res.lengths(), (1, 2, last));
            assert_eq!(core_of(&res.graph), (CoreKind::Theta, (1, 2, Some(last))));
            assert_eq!(res.graph.degree_sequence(), g.degree_sequence());
        }
        let g = make_theta(1, 2, 4).unwrap();
        let res = theta_normalize(&g, &bicyclic_core(&g).unwrap()).unwrap();
        assert!(res.moves.is_empty());
        assert_eq!(res.graph, g);
    }

    #[test]
    fn transforms_check_core_kind() {
        let g = make_bowtie(3, 4).unwrap();
        let core = bicyclic_core(&g).unwrap();
        assert!(matches!(
            sandglass_to_theta(&g, &core),
            Err(SwitchError::WrongCore { .. })
        ));
        assert!(matches!(
            theta_normalize(&g, &core),
            Err(SwitchError::WrongCore { .. })
        ));
    }

    #[test]
    fn girth_reduction() {
        let mut small = make_cycle(4).unwrap();
        small.add_pendants(0, 1);
        assert!(matches!(
            girth_reduce_to_3(&small),
            Err(SwitchError::Precondition(_))
        ));
        assert!(girth_reduce_to_3(&make_cycle(6).unwrap()).is_err());

        // C5 with a pendant path of length 2 at x1.
        let mut g = make_cycle(5).unwrap();
        let a = g.add_vertex();
        let b = g.add_vertex();
        g.add_edge(0, a);
        g.add_edge(a, b);
        let out = girth_reduce_to_3(&g).unwrap();
        assert_eq!(out.girth(), Some(3));
        assert_eq!(out.degree_sequence(), g.degree_sequence());

        // C4 with two pendants at x1 and one at x2.
        let mut g = make_cycle(4).unwrap();
        g.add_pendants(0, 2);
        g.add_pendants(1, 1);
        let out = girth_reduce_to_3(&g).unwrap();
        assert_eq!(out.girth(), Some(3));
        assert_eq!(out.degree_sequence(), g.degree_sequence());
    }

    #[test]
    fn long_cycles_split() {
        let c6 = make_cycle(6).unwrap();
        let out = long_cycle_disconnect(&c6, &[0, 1, 2, 3, 4, 5]).unwrap();
        assert_eq!(out.components().len(), 2);
        assert!(out.components().iter().all(|c| c.len() == 3));

        let c7 = make_cycle(7).unwrap();
        let out = long_cycle_disconnect(&c7, &(0..7).collect::<Vec<_>>()).unwrap();
        let mut sizes: Vec<usize> = out.components().iter().map(Vec::len).collect();
        sizes.sort();
        assert_eq!(sizes, vec![3, 4]);

        assert!(long_cycle_disconnect(&make_cycle(5).unwrap(), &[0, 1, 2, 3, 4]).is_err());
        assert!(matches!(
            long_cycle_disconnect(&c7, &[0, 2, 1, 3, 4, 5]),
            Err(SwitchError::MissingEdge(_))
        ));
    }
}
