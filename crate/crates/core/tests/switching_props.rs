use forcibly::graph::{bicyclic_core, make_bowtie, make_sandglass, make_theta, CoreKind, Edge};
use forcibly::switching::{
    apply_switch, bowtie_normalize, sandglass_to_theta, theta_normalize, SwitchMove,
};
use forcibly::Graph;
use proptest::prelude::*;

fn graph_strategy() -> impl Strategy<Value = Graph> {
    (4usize..=12).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut g = Graph::empty(n);
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        g.add_edge(u, v);
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

proptest! {
    #[test]
    fn two_edge_switches_preserve_degrees(g in graph_strategy(), i in any::<usize>(), j in any::<usize>(), flip in any::<bool>()) {
        let edges = g.edges();
        let m = edges.len();
        // First valid switch found scanning from the random offsets.
        let found = (0..m * m).find_map(|k| {
            let a = edges[(i + k / m.max(1)) % m];
            let b = edges[(j + k) % m];
            let (x, y) = if flip { (b.v, b.u) } else { (b.u, b.v) };
            let vs = [a.u, a.v, x, y];
            let distinct = (0..4).all(|p| (p + 1..4).all(|q| vs[p] != vs[q]));
            (distinct && !g.has_edge(a.u, x) && !g.has_edge(a.v, y))
                .then(|| SwitchMove::pair((a.u, a.v), (x, y), (a.u, x), (a.v, y)).unwrap())
        });
        if let Some(mv) = found {
            let h = apply_switch(&g, &mv).unwrap();
            prop_assert_eq!(h.degrees(), g.degrees());
            prop_assert_eq!(h.edge_count(), g.edge_count());
            prop_assert_eq!(apply_switch(&h, &mv.inverse()).unwrap(), g);
        }
    }

    #[test]
    fn invalid_moves_are_rejected(g in graph_strategy(), u in 0usize..12, v in 0usize..12) {
        prop_assume!(u < g.n() && v < g.n() && u != v && !g.has_edge(u, v));
        // Removing an absent edge must fail whatever is added.
        let w = (0..g.n()).find(|&w| w != u && w != v).unwrap();
        let z = (0..g.n()).find(|&z| z != u && z != v && z != w).unwrap();
        if let Ok(m) = SwitchMove::new([Edge::new(u, v), Edge::new(w, z)], [Edge::new(u, w), Edge::new(v, z)]) {
            prop_assert!(apply_switch(&g, &m).is_err());
        }
    }
}

fn decorate(mut g: Graph) -> Graph {
    // One pendant on every core vertex, then a second on vertex 0.
    for v in 0..g.n() {
        g.add_pendants(v, 1);
    }
    g.add_pendants(0, 1);
    g
}

#[test]
fn transforms_keep_core_size_with_pendants() {
    for r in 3..=6 {
        for s in 3..=6 {
            for t in 1..=6 {
                let g = decorate(make_sandglass(r, s, t).unwrap());
                let h = sandglass_to_theta(&g, &bicyclic_core(&g).unwrap()).unwrap();
                assert_eq!(h.degrees(), g.degrees());
                let c = bicyclic_core(&h).unwrap();
                let (a, b, cc) = c.params();
                assert_eq!(c.kind, CoreKind::Theta);
                assert_eq!(a + b + cc.unwrap(), r + s + t);
            }
            let g = decorate(make_bowtie(r, s).unwrap());
            let h = bowtie_normalize(&g, &bicyclic_core(&g).unwrap()).unwrap();
            assert_eq!(h.degrees(), g.degrees());
            assert_eq!(bicyclic_core(&h).unwrap().params(), (3, r + s - 3, None));
        }
    }
    for r in 1..=6 {
        for s in r.max(2)..=6 {
            for t in s..=6 {
                let g = decorate(make_theta(r, s, t).unwrap());
                let out = theta_normalize(&g, &bicyclic_core(&g).unwrap()).unwrap();
                assert_eq!(out.graph.degrees(), g.degrees());
                let p = bicyclic_core(&out.graph).unwrap().params();
                assert_eq!(p, (1, 2, Some(r + s + t - 3)), "Θ({r},{s},{t})");
            }
        }
    }
}
