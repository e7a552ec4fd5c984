//! Disconnected realizations: explicit evidence that a sequence is not
//! forcibly connected in any class.
//!
//! [`disconnected_witness`] tries a catalog of fixed constructions first,
//! then switches applied to the greedy realization, and only then the
//! exhaustive enumerator.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::enumeration::{check_forcibly, EnumerationError, ForciblyCheck};
use crate::graph::{
    bicyclic_core, make_bowtie, make_star, make_theta, two_core, CoreKind, Graph, StructuralClass,
};
use crate::sequence::{havel_hakimi_realize, DegreeSequence};
use crate::switching::{apply_switch, long_cycle_disconnect, SwitchMove};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("sequence {0} is not graphic")]
    NotGraphic(DegreeSequence),
    #[error("gadget {gadget}: {reason}")]
    Gadget { gadget: Gadget, reason: String },
    #[error("unknown gadget `{0}`")]
    UnknownGadget(String),
    #[error("{0}")]
    Precondition(String),
}

/// The fixed disconnected constructions, each realizing one sequence
/// pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gadget {
    /// Kite and `K2`, pendants `r-3, s-3, t-2`: `(r,s,t,2,1^{n-4})`.
    G1Uni,
    /// Bowtie `B(3,3)` and `K2`, `n-7` pendants on the hub:
    /// `(n-3,2^4,1^{n-5})`.
    G2Uni,
    /// `Θ(1,2,3)` and `K2`, pendants `r-3, s-3, t-2`: `(r,s,t,2^2,1^{n-5})`.
    G3Uni,
    /// `K_{1,n-3}` and `K2`, a path on four leaves: `(n-3,3^2,2^2,1^{n-5})`.
    BStar1,
    /// `K_{1,n-3}` and `K2`, a 3-vertex and a 2-vertex path on the leaves:
    /// `(n-3,3,2^4,1^{n-6})`.
    BStar2,
    /// `K_{1,n-4}` and `K_{1,2}`, a path on four leaves:
    /// `(n-4,3^2,2^3,1^{n-6})`.
    BStar3,
    /// `Θ(2,2,2)` plus the edge between its branch vertices, and `K2`,
    /// pendants `r-4, s-4, t-2`: `(r,s,t,2^2,1^{n-5})`.
    BTheta1,
    /// As [`Gadget::BTheta1`] over `Θ(2,2,3)`: `(r,s,t,2^3,1^{n-6})`.
    BTheta2,
}

impl Gadget {
    pub const ALL: [Gadget; 8] = [
        Gadget::G1Uni,
        Gadget::G2Uni,
        Gadget::G3Uni,
        Gadget::BStar1,
        Gadget::BStar2,
        Gadget::BStar3,
        Gadget::BTheta1,
        Gadget::BTheta2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Gadget::G1Uni => "G1-uni",
            Gadget::G2Uni => "G2-uni",
            Gadget::G3Uni => "G3-uni",
            Gadget::BStar1 => "B-star-1",
            Gadget::BStar2 => "B-star-2",
            Gadget::BStar3 => "B-star-3",
            Gadget::BTheta1 => "B-theta-1",
            Gadget::BTheta2 => "B-theta-2",
        }
    }

    /// Whether the gadget is parameterized by `(r, s, t)` rather than `n`.
    pub fn takes_rst(self) -> bool {
        matches!(
            self,
            Gadget::G1Uni | Gadget::G3Uni | Gadget::BTheta1 | Gadget::BTheta2
        )
    }
}

impl fmt::Display for Gadget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Gadget {
    type Err = WitnessError;

    fn from_str(s: &str) -> Result<Self, WitnessError> {
        Gadget::ALL
            .into_iter()
            .find(|g| g.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| WitnessError::UnknownGadget(s.to_string()))
    }
}

/// Gadget parameters. `rst` gadgets read `r, s, t`; the others read `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct GadgetParams {
    pub r: usize,
    pub s: usize,
    pub t: usize,
    pub n: usize,
}

impl GadgetParams {
    pub fn rst(r: usize, s: usize, t: usize) -> Self {
        Self { r, s, t, n: 0 }
    }

    pub fn order(n: usize) -> Self {
        Self {
            n,
            ..Self::default()
        }
    }
}

/// Builds a gadget. Pendants are attached in ascending vertex order, so the
/// labels are fixed by the parameters.
pub fn build_gadget(gadget: Gadget, p: GadgetParams) -> Result<Graph, WitnessError> {
    let fail = |reason: String| Err(WitnessError::Gadget { gadget, reason });
    let with_k2 = |g: Graph| g.disjoint_union(&Graph::from_edges(2, [(0, 1)]).unwrap());
    match gadget {
        Gadget::G1Uni | Gadget::G3Uni => {
            if p.r < 3 || p.s < 3 || p.t < 2 {
                return fail(format!(
                    "needs r, s >= 3 and t >= 2, got ({},{},{})",
                    p.r, p.s, p.t
                ));
            }
            let core = if gadget == Gadget::G1Uni {
                make_theta(1, 2, 2)
            } else {
                make_theta(1, 2, 3)
            };
            let mut g = with_k2(core.unwrap());
            g.add_pendants(0, p.r - 3);
            g.add_pendants(1, p.s - 3);
            g.add_pendants(2, p.t - 2);
            Ok(g)
        }
        Gadget::G2Uni => {
            if p.n < 7 {
                return fail(format!("needs n >= 7, got {}", p.n));
            }
            let mut g = with_k2(make_bowtie(3, 3).unwrap());
            g.add_pendants(0, p.n - 7);
            Ok(g)
        }
        Gadget::BStar1 | Gadget::BStar2 | Gadget::BStar3 => {
            let (min_n, star_order, second): (usize, usize, Graph) = match gadget {
                Gadget::BStar1 => (7, p.n.saturating_sub(2), make_star(2).unwrap()),
                Gadget::BStar2 => (8, p.n.saturating_sub(2), make_star(2).unwrap()),
                _ => (8, p.n.saturating_sub(3), make_star(3).unwrap()),
            };
            if p.n < min_n {
                return fail(format!("needs n >= {min_n}, got {}", p.n));
            }
            let mut g = make_star(star_order).unwrap().disjoint_union(&second);
            // Leaves are 1, 2, ...
            let extra: &[(usize, usize)] = match gadget {
                Gadget::BStar2 => &[(1, 2), (2, 3), (4, 5)],
                _ => &[(1, 2), (2, 3), (3, 4)],
            };
            for &(a, b) in extra {
                g.add_edge(a, b);
            }
            Ok(g)
        }
        Gadget::BTheta1 | Gadget::BTheta2 => {
            if p.r < 4 || p.s < 4 || p.t < 2 {
                return fail(format!(
                    "needs r, s >= 4 and t >= 2, got ({},{},{})",
                    p.r, p.s, p.t
                ));
            }
            let mut core = if gadget == Gadget::BTheta1 {
                make_theta(2, 2, 2)
            } else {
                make_theta(2, 2, 3)
            }
            .unwrap();
            core.add_edge(0, 1);
            let mut g = with_k2(core);
            g.add_pendants(0, p.r - 4);
            g.add_pendants(1, p.s - 4);
            g.add_pendants(2, p.t - 2);
            Ok(g)
        }
    }
}

/// Reads gadget parameters off a sorted sequence and returns the gadget's
/// graph if its degree sequence is exactly `seq`.
pub fn gadget_for(seq: &DegreeSequence, gadget: Gadget) -> Option<Graph> {
    let d = seq.degrees();
    if d.len() < 3 {
        return None;
    }
    let params = if gadget.takes_rst() {
        // Every rst gadget has at least r + s + t - 3 vertices.
        if d[0] + d[1] + d[2] > d.len() + 3 {
            return None;
        }
        GadgetParams::rst(d[0], d[1], d[2])
    } else {
        GadgetParams::order(d.len())
    };
    build_gadget(gadget, params)
        .ok()
        .filter(|g| g.degree_sequence() == *seq)
}

/// How a witness was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessMethod {
    /// The greedy realization itself was disconnected.
    HavelHakimi,
    PendantSwitch,
    LongCycleSwitch,
    Gadget(Gadget),
    Enumeration,
}

impl fmt::Display for WitnessMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessMethod::HavelHakimi => f.write_str("havel-hakimi"),
            WitnessMethod::PendantSwitch => f.write_str("pendant-switch"),
            WitnessMethod::LongCycleSwitch => f.write_str("long-cycle-switch"),
            WitnessMethod::Gadget(g) => write!(f, "gadget:{g}"),
            WitnessMethod::Enumeration => f.write_str("enumeration"),
        }
    }
}

impl Serialize for WitnessMethod {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessResult {
    pub graph: Graph,
    pub method: WitnessMethod,
    pub components: usize,
}

impl WitnessResult {
    fn new(graph: Graph, method: WitnessMethod) -> Self {
        let components = graph.components().len();
        Self {
            graph,
            method,
            components,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessOutcome {
    Found(WitnessResult),
    /// Every realization is connected; established by full enumeration.
    None,
    /// No construction applied and the sequence is beyond the enumeration
    /// limit.
    Undecided,
}

/// Splits off an isolated edge: for pendants `u, v` at distance more than
/// 3 with neighbours `u', v'`, switch `{uu', vv'} -> {uv, u'v'}`.
///
/// Takes the lexicographically first qualifying pair.
pub fn pendant_disconnect(g: &Graph) -> Result<Graph, WitnessError> {
    if !g.is_connected() {
        return Err(WitnessError::Precondition("graph is not connected".into()));
    }
    let pendants = g.pendant_vertices();
    for (i, &u) in pendants.iter().enumerate() {
        let dist = g.distances_from(u);
        for &v in &pendants[i + 1..] {
            if dist[v].is_some_and(|d| d > 3) {
                let u1 = g.neighbors(u).next().unwrap();
                let v1 = g.neighbors(v).next().unwrap();
                let m = SwitchMove::pair((u, u1), (v, v1), (u, v), (u1, v1))
                    .expect("distance > 3 keeps the four vertices distinct");
                return Ok(apply_switch(g, &m).expect("switch edges checked by distance"));
            }
        }
    }
    Err(WitnessError::Precondition(
        "no two pendant vertices are more than distance 3 apart".into(),
    ))
}

/// Cycles to try pinching: the unique cycle of a unicyclic graph, or the
/// cycles of a bicyclic skeleton.
fn candidate_cycles(g: &Graph) -> Vec<Vec<usize>> {
    match g.structural_class() {
        StructuralClass::Unicyclic => {
            let on = two_core(g);
            let start = (0..g.n()).find(|&v| on[v]).unwrap();
            let mut cycle = vec![start];
            let mut prev = usize::MAX;
            let mut cur = start;
            loop {
                let next = g.neighbors(cur).find(|&w| on[w] && w != prev).unwrap();
                if next == start {
                    break;
                }
                cycle.push(next);
                prev = cur;
                cur = next;
            }
            vec![cycle]
        }
        StructuralClass::Bicyclic => {
            let core = bicyclic_core(g).unwrap();
            match core.kind {
                CoreKind::Theta => {
                    let p = &core.paths;
                    let join = |a: &Vec<usize>, b: &Vec<usize>| -> Vec<usize> {
                        let mut c = a.clone();
                        c.extend(b.iter().rev().skip(1).take(b.len() - 2));
                        c
                    };
                    vec![join(&p[0], &p[1]), join(&p[0], &p[2]), join(&p[1], &p[2])]
                }
                _ => core.cycles,
            }
        }
        _ => Vec::new(),
    }
}

fn try_long_cycle(g: &Graph) -> Option<Graph> {
    for cycle in candidate_cycles(g).into_iter().filter(|c| c.len() >= 6) {
        let k = cycle.len();
        for dir in [false, true] {
            for shift in 0..k {
                let mut rot: Vec<usize> = (0..k).map(|i| cycle[(shift + i) % k]).collect();
                if dir {
                    rot.reverse();
                }
                if let Ok(h) = long_cycle_disconnect(g, &rot) {
                    if !h.is_connected() {
                        return Some(h);
                    }
                }
            }
        }
    }
    None
}

/// Finds a disconnected realization of `seq`, or proves there is none.
///
/// Order: gadget catalog, then the greedy realization (as is, after a
/// pendant switch, after a long-cycle switch), then enumeration up to
/// `limit` vertices.
pub fn disconnected_witness(
    seq: &DegreeSequence,
    limit: usize,
) -> Result<WitnessOutcome, WitnessError> {
    if !seq.is_graphic() {
        return Err(WitnessError::NotGraphic(seq.clone()));
    }
    let found = |g: Graph, m: WitnessMethod| Ok(WitnessOutcome::Found(WitnessResult::new(g, m)));

    for gadget in Gadget::ALL {
        if let Some(g) = gadget_for(seq, gadget) {
            return found(g, WitnessMethod::Gadget(gadget));
        }
    }

    let greedy = havel_hakimi_realize(seq).expect("graphic");
    if !greedy.is_connected() {
        return found(greedy, WitnessMethod::HavelHakimi);
    }
    if let Ok(g) = pendant_disconnect(&greedy) {
        return found(g, WitnessMethod::PendantSwitch);
    }
    if let Some(g) = try_long_cycle(&greedy) {
        return found(g, WitnessMethod::LongCycleSwitch);
    }

    match check_forcibly(seq, limit, Graph::is_connected) {
        Ok(ForciblyCheck::Counterexample(g)) => found(g, WitnessMethod::Enumeration),
        Ok(ForciblyCheck::Holds) => Ok(WitnessOutcome::None),
        Ok(ForciblyCheck::NotGraphic) => Err(WitnessError::NotGraphic(seq.clone())),
        Err(EnumerationError::LimitExceeded { .. }) => Ok(WitnessOutcome::Undecided),
    }
}
