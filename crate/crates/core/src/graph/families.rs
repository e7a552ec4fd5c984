//! Named graph families with deterministic vertex labels.

use super::{Graph, GraphError};

fn invalid(family: &'static str, reason: impl Into<String>) -> GraphError {
    GraphError::Construction {
        family,
        reason: reason.into(),
    }
}

/// Adds a path from `from` to `to` with `len` edges, creating `len - 1`
/// fresh internal vertices. Returns the full vertex list.
pub(crate) fn attach_path(g: &mut Graph, from: usize, to: usize, len: usize) -> Vec<usize> {
    debug_assert!(len >= 1);
    let mut path = vec![from];
    for _ in 1..len {
        path.push(g.add_vertex());
    }
    path.push(to);
    for w in path.windows(2) {
        g.add_edge(w[0], w[1]);
    }
    path
}

/// Adds a cycle of length `len` through the existing vertex `anchor`.
fn attach_cycle(g: &mut Graph, anchor: usize, len: usize) {
    let mut prev = anchor;
    for _ in 1..len {
        let v = g.add_vertex();
        g.add_edge(prev, v);
        prev = v;
    }
    g.add_edge(prev, anchor);
}

/// `C_k` on `0..k` in cyclic order.
pub fn make_cycle(k: usize) -> Result<Graph, GraphError> {
    if k < 3 {
        return Err(invalid("cycle", format!("length {k} < 3")));
    }
    let mut g = Graph::empty(1);
    attach_cycle(&mut g, 0, k);
    Ok(g)
}

/// `P_k`: a path with `k` edges on `0..=k`.
pub fn make_path(k: usize) -> Result<Graph, GraphError> {
    let mut g = Graph::empty(k + 1);
    for i in 0..k {
        g.add_edge(i, i + 1);
    }
    Ok(g)
}

/// `K_{1,n-1}` on `n` vertices, centre 0.
pub fn make_star(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(invalid("star", "needs at least one vertex"));
    }
    Graph::from_edges(n, (1..n).map(|v| (0, v)))
}

/// Adjacent centres 0 and 1 of degrees `a` and `b`, with `a - 1` and
/// `b - 1` leaves hung on them.
pub fn make_double_star(a: usize, b: usize) -> Result<Graph, GraphError> {
    if a < 2 || b < 2 {
        return Err(invalid(
            "double-star",
            format!("centre degrees ({a},{b}) need both >= 2"),
        ));
    }
    let mut g = Graph::empty(2);
    g.add_edge(0, 1);
    g.add_pendants(0, a - 1);
    g.add_pendants(1, b - 1);
    Ok(g)
}

/// `K_{s,t}` with parts `0..s` and `s..s+t`.
pub fn make_complete_bipartite(s: usize, t: usize) -> Result<Graph, GraphError> {
    if s == 0 || t == 0 {
        return Err(invalid(
            "complete bipartite",
            "both parts must be non-empty",
        ));
    }
    Graph::from_edges(s + t, (0..s).flat_map(|u| (s..s + t).map(move |v| (u, v))))
}

/// `Θ(r,s,t)`: branch vertices 0 and 1 joined by internally disjoint paths
/// of lengths `r <= s <= t` (sorted internally), internal vertices numbered
/// path by path from 2.
pub fn make_theta(r: usize, s: usize, t: usize) -> Result<Graph, GraphError> {
    let mut lens = [r, s, t];
    lens.sort_unstable();
    if lens[0] == 0 {
        return Err(invalid("theta", "path lengths must be positive"));
    }
    if lens[1] < 2 {
        return Err(invalid("theta", "at most one path may have length 1"));
    }
    let mut g = Graph::empty(2);
    for len in lens {
        attach_path(&mut g, 0, 1, len);
    }
    Ok(g)
}

/// `B(r,s)`: hub 0, the `C_r` vertices next, then the `C_s` vertices.
pub fn make_bowtie(r: usize, s: usize) -> Result<Graph, GraphError> {
    if r < 3 || s < 3 {
        return Err(invalid(
            "bowtie",
            format!("cycle lengths ({r},{s}) need both >= 3"),
        ));
    }
    let mut g = Graph::empty(1);
    attach_cycle(&mut g, 0, r);
    attach_cycle(&mut g, 0, s);
    Ok(g)
}

/// `S(r,s,t)`: `C_r` on `0..r` (attachment 0), then the internal path
/// vertices, then `C_s` starting at its attachment vertex.
pub fn make_sandglass(r: usize, s: usize, t: usize) -> Result<Graph, GraphError> {
    if r < 3 || s < 3 || t < 1 {
        return Err(invalid(
            "sandglass",
            format!("parameters ({r},{s},{t}) need r,s >= 3 and t >= 1"),
        ));
    }
    let mut g = make_cycle(r)?;
    let mut prev = 0;
    for _ in 1..t {
        let v = g.add_vertex();
        g.add_edge(prev, v);
        prev = v;
    }
    let anchor = g.add_vertex();
    g.add_edge(prev, anchor);
    attach_cycle(&mut g, anchor, s);
    Ok(g)
}
