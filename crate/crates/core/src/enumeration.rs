//! Exhaustive realization enumeration and the brute-force forcibly oracle.
//!
//! Labeled realizations are produced by a backtracking search that always
//! completes the neighbourhood of the vertex with the largest residual
//! degree (lowest index on ties), choosing its partners among the vertices
//! not yet completed. The choice of vertex depends only on the search state,
//! so every labeled graph is reached along exactly one branch. Branches whose
//! residual degrees fail Erdős–Gallai are cut immediately.

use std::collections::HashSet;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, StructuralClass};
use crate::sequence::{is_graphic_sorted, DegreeSequence};

/// Default cap on the number of vertices the enumerator accepts.
pub const DEFAULT_VERTEX_LIMIT: usize = 10;

/// Hard ceiling imposed by the 64-bit adjacency rows.
pub const MAX_VERTEX_LIMIT: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("sequence has {n} vertices, above the enumeration limit of {limit}")]
    LimitExceeded { n: usize, limit: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EnumerationMode {
    Labeled,
    Nonisomorphic,
}

fn check_limit(seq: &DegreeSequence, limit: usize) -> Result<(), EnumerationError> {
    let limit = limit.min(MAX_VERTEX_LIMIT);
    if seq.len() > limit {
        Err(EnumerationError::LimitExceeded {
            n: seq.len(),
            limit,
        })
    } else {
        Ok(())
    }
}

struct Frame {
    vertex: usize,
    candidates: Vec<usize>,
    /// Indices into `candidates`, strictly increasing.
    choice: Vec<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Phase {
    Start,
    Descend,
    Backtrack,
    Exhausted,
}

/// Labeled realizations of a sequence, vertex `i` carrying degree `d_i`.
pub struct LabeledRealizations {
    adjacency: Vec<u64>,
    residual: Vec<usize>,
    completed: u64,
    stack: Vec<Frame>,
    phase: Phase,
    emitted: u64,
    scratch: Vec<usize>,
}

impl LabeledRealizations {
    fn new(seq: &DegreeSequence) -> Self {
        Self {
            adjacency: vec![0; seq.len()],
            residual: seq.degrees().to_vec(),
            completed: 0,
            stack: Vec::new(),
            phase: Phase::Start,
            emitted: 0,
            scratch: Vec::with_capacity(seq.len()),
        }
    }

    fn n(&self) -> usize {
        self.residual.len()
    }

    fn is_open(&self, v: usize) -> bool {
        self.completed & (1 << v) == 0
    }

    fn residual_is_graphic(&mut self) -> bool {
        self.scratch.clear();
        for v in 0..self.n() {
            if self.is_open(v) {
                self.scratch.push(self.residual[v]);
            }
        }
        self.scratch.sort_unstable_by(|a, b| b.cmp(a));
        is_graphic_sorted(&self.scratch)
    }

    fn apply(&mut self, frame: &Frame, sign: bool) {
        let v = frame.vertex;
        for &i in &frame.choice {
            let u = frame.candidates[i];
            self.adjacency[v] ^= 1 << u;
            self.adjacency[u] ^= 1 << v;
            if sign {
                self.residual[u] -= 1;
                self.residual[v] -= 1;
            } else {
                self.residual[u] += 1;
                self.residual[v] += 1;
            }
        }
    }

    fn pick_vertex(&self) -> Option<usize> {
        (0..self.n())
            .filter(|&v| self.is_open(v) && self.residual[v] > 0)
            .max_by(|&a, &b| self.residual[a].cmp(&self.residual[b]).then(b.cmp(&a)))
    }

    /// Advances to the next k-combination of `0..len`; false when exhausted.
    fn next_combination(choice: &mut [usize], len: usize) -> bool {
        let k = choice.len();
        for i in (0..k).rev() {
            if choice[i] < len - k + i {
                choice[i] += 1;
                for j in i + 1..k {
                    choice[j] = choice[j - 1] + 1;
                }
                return true;
            }
        }
        false
    }

    /// Next realization as raw adjacency rows.
    fn next_masks(&mut self) -> Option<&[u64]> {
        loop {
            match self.phase {
                Phase::Exhausted => return None,
                Phase::Start => {
                    self.phase = if self.residual_is_graphic() {
                        Phase::Descend
                    } else {
                        Phase::Exhausted
                    };
                }
                Phase::Descend => {
                    let Some(v) = self.pick_vertex() else {
                        self.phase = Phase::Backtrack;
                        self.emitted += 1;
                        return Some(&self.adjacency);
                    };
                    let candidates: Vec<usize> = (0..self.n())
                        .filter(|&u| u != v && self.is_open(u) && self.residual[u] > 0)
                        .collect();
                    let k = self.residual[v];
                    if candidates.len() < k {
                        self.phase = Phase::Backtrack;
                        continue;
                    }
                    let frame = Frame {
                        vertex: v,
                        candidates,
                        choice: (0..k).collect(),
                    };
                    self.completed |= 1 << v;
                    self.apply(&frame, true);
                    self.stack.push(frame);
                    if !self.residual_is_graphic() {
                        self.phase = Phase::Backtrack;
                    }
                }
                Phase::Backtrack => {
                    let Some(mut frame) = self.stack.pop() else {
                        self.phase = Phase::Exhausted;
                        continue;
                    };
                    self.apply(&frame, false);
                    if Self::next_combination(&mut frame.choice, frame.candidates.len()) {
                        self.apply(&frame, true);
                        self.stack.push(frame);
                        if self.residual_is_graphic() {
                            self.phase = Phase::Descend;
                        }
                    } else {
                        self.completed &= !(1 << frame.vertex);
                    }
                }
            }
        }
    }

    /// Realizations produced so far.
    pub fn emitted(&self) -> u64 {
        self.emitted
    }

    /// Counts the remaining realizations without building graphs.
    pub fn count_remaining(mut self) -> u64 {
        let mut c = 0;
        while self.next_masks().is_some() {
            c += 1;
        }
        c
    }
}

impl Iterator for LabeledRealizations {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        self.next_masks().map(Graph::from_masks)
    }
}

/// All labeled realizations of `seq`. Yields nothing for a non-graphic
/// sequence.
pub fn enumerate_labeled(
    seq: &DegreeSequence,
    limit: usize,
) -> Result<LabeledRealizations, EnumerationError> {
    check_limit(seq, limit)?;
    Ok(LabeledRealizations::new(seq))
}

/// One representative per isomorphism class, in order of first labeled
/// appearance.
pub struct NonisomorphicRealizations {
    labeled: LabeledRealizations,
    seen: HashSet<Vec<u64>>,
}

impl NonisomorphicRealizations {
    pub fn emitted(&self) -> usize {
        self.seen.len()
    }
}

impl Iterator for NonisomorphicRealizations {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        loop {
            let masks = self.labeled.next_masks()?;
            let key = canonical_form(masks);
            if self.seen.insert(key) {
                return Some(Graph::from_masks(masks));
            }
        }
    }
}

pub fn enumerate_nonisomorphic(
    seq: &DegreeSequence,
    limit: usize,
) -> Result<NonisomorphicRealizations, EnumerationError> {
    Ok(NonisomorphicRealizations {
        labeled: enumerate_labeled(seq, limit)?,
        seen: HashSet::new(),
    })
}

/// A realization stream in either mode.
pub enum RealizationStream {
    Labeled(LabeledRealizations),
    Nonisomorphic(NonisomorphicRealizations),
}

impl RealizationStream {
    pub fn new(
        seq: &DegreeSequence,
        mode: EnumerationMode,
        limit: usize,
    ) -> Result<Self, EnumerationError> {
        Ok(match mode {
            EnumerationMode::Labeled => Self::Labeled(enumerate_labeled(seq, limit)?),
            EnumerationMode::Nonisomorphic => {
                Self::Nonisomorphic(enumerate_nonisomorphic(seq, limit)?)
            }
        })
    }

    pub fn mode(&self) -> EnumerationMode {
        match self {
            Self::Labeled(_) => EnumerationMode::Labeled,
            Self::Nonisomorphic(_) => EnumerationMode::Nonisomorphic,
        }
    }

    /// Graphs emitted so far.
    pub fn emitted(&self) -> u64 {
        match self {
            Self::Labeled(s) => s.emitted(),
            Self::Nonisomorphic(s) => s.emitted() as u64,
        }
    }
}

impl Iterator for RealizationStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        match self {
            Self::Labeled(s) => s.next(),
            Self::Nonisomorphic(s) => s.next(),
        }
    }
}

/// Canonical adjacency string of a graph given by bitmask rows.
///
/// Vertices are split into cells by iterated degree refinement (an
/// isomorphism invariant), then the lexicographically smallest sequence of
/// lower-triangular rows over all cell-respecting orderings is taken.
pub fn canonical_form(masks: &[u64]) -> Vec<u64> {
    let n = masks.len();
    let cells = refine_cells(masks);
    // slot -> allowed cell
    let slot_cell: Vec<usize> = cells
        .iter()
        .enumerate()
        .flat_map(|(c, members)| std::iter::repeat_n(c, members.len()))
        .collect();
    let mut cell_of = vec![0; n];
    for (c, members) in cells.iter().enumerate() {
        for &v in members {
            cell_of[v] = c;
        }
    }
    let mut search = CanonSearch {
        masks,
        slot_cell,
        cell_of,
        order: Vec::with_capacity(n),
        used: 0,
        current: Vec::with_capacity(n),
        best: None,
    };
    search.run();
    search.best.unwrap_or_default()
}

fn refine_cells(masks: &[u64]) -> Vec<Vec<usize>> {
    let n = masks.len();
    let max_degree = masks
        .iter()
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0);
    // Colour 0 is the largest degree; each round splits colours by the
    // multiset of neighbour colours until nothing changes.
    let mut color: Vec<usize> = masks
        .iter()
        .map(|m| max_degree - m.count_ones() as usize)
        .collect();
    let mut classes = 0;
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nbr: Vec<usize> = (0..n)
                    .filter(|&w| masks[v] & (1 << w) != 0)
                    .map(|w| color[w])
                    .collect();
                nbr.sort_unstable();
                (color[v], nbr)
            })
            .collect();
        let mut distinct: Vec<&(usize, Vec<usize>)> = signatures.iter().collect();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = signatures
            .iter()
            .map(|sig| distinct.binary_search(&sig).unwrap())
            .collect();
        let count = distinct.len();
        color = next;
        if count == classes {
            break;
        }
        classes = count;
    }
    let mut cells = vec![Vec::new(); classes];
    for v in 0..n {
        cells[color[v]].push(v);
    }
    cells
}

struct CanonSearch<'a> {
    masks: &'a [u64],
    slot_cell: Vec<usize>,
    cell_of: Vec<usize>,
    order: Vec<usize>,
    used: u64,
    current: Vec<u64>,
    best: Option<Vec<u64>>,
}

impl CanonSearch<'_> {
    fn run(&mut self) {
        self.extend();
    }

    fn extend(&mut self) {
        let slot = self.order.len();
        if slot == self.masks.len() {
            if self.best.as_ref().is_none_or(|b| self.current < *b) {
                self.best = Some(self.current.clone());
            }
            return;
        }
        let cell = self.slot_cell[slot];
        for v in 0..self.masks.len() {
            if self.used & (1 << v) != 0 || self.cell_of[v] != cell {
                continue;
            }
            let mut row = 0u64;
            for (i, &w) in self.order.iter().enumerate() {
                if self.masks[v] & (1 << w) != 0 {
                    row |= 1 << i;
                }
            }
            self.current.push(row);
            let worse = self
                .best
                .as_ref()
                .is_some_and(|b| self.current[..] > b[..=slot]);
            if !worse {
                self.order.push(v);
                self.used |= 1 << v;
                self.extend();
                self.used &= !(1 << v);
                self.order.pop();
            }
            self.current.pop();
        }
    }
}

/// Whether two graphs are isomorphic, by canonical form.
pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n()
        && a.edge_count() == b.edge_count()
        && canonical_form(&to_masks(a)) == canonical_form(&to_masks(b))
}

pub(crate) fn to_masks(g: &Graph) -> Vec<u64> {
    (0..g.n())
        .map(|v| g.neighbors(v).fold(0u64, |m, w| m | (1 << w)))
        .collect()
}

/// Outcome of checking a property over every realization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ForciblyCheck {
    Holds,
    Counterexample(Graph),
    NotGraphic,
}

/// Tests `property` on every realization of `seq`, stopping at the first
/// failure. The property must be isomorphism invariant; labeled realizations
/// are scanned, which covers every isomorphism class.
pub fn check_forcibly<P>(
    seq: &DegreeSequence,
    limit: usize,
    mut property: P,
) -> Result<ForciblyCheck, EnumerationError>
where
    P: FnMut(&Graph) -> bool,
{
    check_limit(seq, limit)?;
    if !seq.is_graphic() {
        return Ok(ForciblyCheck::NotGraphic);
    }
    for g in enumerate_labeled(seq, limit)? {
        if !property(&g) {
            return Ok(ForciblyCheck::Counterexample(g));
        }
    }
    Ok(ForciblyCheck::Holds)
}

/// The structural classes the oracles test for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, PartialOrd, Ord)]
#[serde(rename_all = "kebab-case")]
pub enum TargetClass {
    Tree,
    Unicyclic,
    Bicyclic,
}

impl TargetClass {
    pub const ALL: [TargetClass; 3] = [
        TargetClass::Tree,
        TargetClass::Unicyclic,
        TargetClass::Bicyclic,
    ];

    /// Degree sum every member on `n` vertices must have.
    pub fn degree_sum(self, n: usize) -> usize {
        match self {
            TargetClass::Tree => (2 * n).saturating_sub(2),
            TargetClass::Unicyclic => 2 * n,
            TargetClass::Bicyclic => 2 * n + 2,
        }
    }

    /// Fewest vertices a member of the class can have.
    pub fn min_order(self) -> usize {
        match self {
            TargetClass::Tree => 1,
            TargetClass::Unicyclic => 3,
            TargetClass::Bicyclic => 4,
        }
    }

    pub fn structural(self) -> StructuralClass {
        match self {
            TargetClass::Tree => StructuralClass::Tree,
            TargetClass::Unicyclic => StructuralClass::Unicyclic,
            TargetClass::Bicyclic => StructuralClass::Bicyclic,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TargetClass::Tree => "tree",
            TargetClass::Unicyclic => "unicyclic",
            TargetClass::Bicyclic => "bicyclic",
        }
    }
}

impl std::str::FromStr for TargetClass {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "tree" => Ok(TargetClass::Tree),
            "unicyclic" => Ok(TargetClass::Unicyclic),
            "bicyclic" => Ok(TargetClass::Bicyclic),
            other => Err(format!("unknown class `{other}`")),
        }
    }
}

/// Brute-force verdict on whether a sequence is forcibly in a class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleVerdict {
    Holds,
    Counterexample(Graph),
    NotGraphic,
    /// The sum rules out every realization having the class's edge count.
    SumMismatch,
}

impl OracleVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, OracleVerdict::Holds)
    }
}

pub fn oracle_forcibly(
    seq: &DegreeSequence,
    class: TargetClass,
    limit: usize,
) -> Result<OracleVerdict, EnumerationError> {
    check_limit(seq, limit)?;
    if !seq.is_graphic() {
        return Ok(OracleVerdict::NotGraphic);
    }
    if seq.is_empty() || seq.sum() != class.degree_sum(seq.len()) {
        return Ok(OracleVerdict::SumMismatch);
    }
    let target = class.structural();
    Ok(
        match check_forcibly(seq, limit, |g| g.structural_class() == target)? {
            ForciblyCheck::Holds => OracleVerdict::Holds,
            ForciblyCheck::Counterexample(g) => OracleVerdict::Counterexample(g),
            ForciblyCheck::NotGraphic => OracleVerdict::NotGraphic,
        },
    )
}

pub fn oracle_forcibly_tree(
    seq: &DegreeSequence,
    limit: usize,
) -> Result<OracleVerdict, EnumerationError> {
    oracle_forcibly(seq, TargetClass::Tree, limit)
}

pub fn oracle_forcibly_unicyclic(
    seq: &DegreeSequence,
    limit: usize,
) -> Result<OracleVerdict, EnumerationError> {
    oracle_forcibly(seq, TargetClass::Unicyclic, limit)
}

pub fn oracle_forcibly_bicyclic(
    seq: &DegreeSequence,
    limit: usize,
) -> Result<OracleVerdict, EnumerationError> {
    oracle_forcibly(seq, TargetClass::Bicyclic, limit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::*;
    use crate::sequence::parse_sequence;

    fn seq(s: &str) -> DegreeSequence {
        parse_sequence(s).unwrap()
    }

    #[test]
    fn small_labeled_counts() {
        assert_eq!(enumerate_labeled(&seq("2,2,2"), 10).unwrap().count(), 1);
        assert_eq!(enumerate_labeled(&seq("2^4"), 10).unwrap().count(), 3);
        let stars: Vec<Graph> = enumerate_labeled(&seq("3,1,1,1"), 10).unwrap().collect();
        assert_eq!(stars, vec![make_star(4).unwrap()]);
        assert_eq!(enumerate_labeled(&seq("3,3,1,1"), 10).unwrap().count(), 0);
        assert_eq!(enumerate_labeled(&seq("0,0"), 10).unwrap().count(), 1);
        assert_eq!(
            enumerate_labeled(&DegreeSequence::default(), 10)
                .unwrap()
                .count(),
            1
        );
    }

    #[test]
    fn labeled_vertices_carry_their_degrees() {
        let s = seq("4,3,2,2,2,1");
        for g in enumerate_labeled(&s, 10).unwrap() {
            assert_eq!(g.degrees(), s.degrees());
        }
    }

    #[test]
    fn limit_is_enforced() {
        assert_eq!(
            enumerate_labeled(&seq("1^12"), 10).err(),
            Some(EnumerationError::LimitExceeded { n: 12, limit: 10 })
        );
        assert!(enumerate_labeled(&seq("1^12"), 12).is_ok());
    }

    #[test]
    fn nonisomorphic_counts() {
        assert_eq!(enumerate_nonisomorphic(&seq("2^5"), 10).unwrap().count(), 1);
        let kites: Vec<Graph> = enumerate_nonisomorphic(&seq("3,3,2,2"), 10)
            .unwrap()
            .collect();
        assert_eq!(kites.len(), 1);
        assert!(are_isomorphic(&kites[0], &make_theta(1, 2, 2).unwrap()));
        // C6 and two triangles.
        assert_eq!(enumerate_nonisomorphic(&seq("2^6"), 10).unwrap().count(), 2);
    }

    #[test]
    fn sequence_has_both_connected_shapes() {
        let reps: Vec<Graph> = enumerate_nonisomorphic(&seq("4,3,2,2,2,1"), 10)
            .unwrap()
            .collect();
        let labeled: Vec<Graph> = enumerate_labeled(&seq("4,3,2,2,2,1"), 10)
            .unwrap()
            .collect();
        // Every labeled realization is isomorphic to exactly one representative.
        for g in &labeled {
            assert_eq!(reps.iter().filter(|r| are_isomorphic(r, g)).count(), 1);
        }
        // B(3,3) plus a pendant on a rim vertex, and Θ(1,2,3) plus a pendant
        // on a degree-2 vertex... both realize the sequence.
        let mut bowtie = make_bowtie(3, 3).unwrap();
        bowtie.add_pendants(1, 1);
        let mut theta = make_theta(1, 2, 3).unwrap();
        theta.add_pendants(0, 1);
        for g in [bowtie, theta] {
            assert_eq!(g.degree_sequence(), seq("4,3,2,2,2,1"));
            assert!(g.is_connected());
            assert!(reps.iter().any(|r| are_isomorphic(r, &g)));
        }
    }

    #[test]
    fn canonical_form_is_label_invariant() {
        let g = make_sandglass(3, 4, 1).unwrap();
        let perm = [5, 2, 0, 6, 1, 3, 4];
        assert!(are_isomorphic(&g, &g.permuted(&perm)));
        assert!(!are_isomorphic(
            &make_cycle(6).unwrap(),
            &make_bowtie(3, 3).unwrap().disjoint_union(&Graph::empty(1))
        ));
        let two_triangles = make_cycle(3)
            .unwrap()
            .disjoint_union(&make_cycle(3).unwrap());
        assert!(!are_isomorphic(&make_cycle(6).unwrap(), &two_triangles));
    }

    #[test]
    fn forcibly_checks() {
        let unicyclic = |g: &Graph| g.structural_class() == StructuralClass::Unicyclic;
        assert_eq!(
            check_forcibly(&seq("2,2,2"), 10, unicyclic).unwrap(),
            ForciblyCheck::Holds
        );
        match check_forcibly(&seq("4,2,2,2,2,1,1"), 10, unicyclic).unwrap() {
            ForciblyCheck::Counterexample(g) => {
                assert!(!g.is_connected());
                assert_eq!(g.degree_sequence(), seq("4,2,2,2,2,1,1"));
                let expected = make_bowtie(3, 3)
                    .unwrap()
                    .disjoint_union(&make_path(1).unwrap());
                assert!(are_isomorphic(&g, &expected));
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(
            check_forcibly(&seq("1,1"), 10, |g| g.edge_count() > 0).unwrap(),
            ForciblyCheck::Holds
        );
        assert_eq!(
            check_forcibly(&seq("3,1"), 10, |_| true).unwrap(),
            ForciblyCheck::NotGraphic
        );
    }

    #[test]
    fn oracles() {
        assert!(oracle_forcibly_bicyclic(&seq("3^3,2^3,1"), 10)
            .unwrap()
            .holds());
        assert!(matches!(
            oracle_forcibly_bicyclic(&seq("4,3,3,2,2,2,1,1"), 10).unwrap(),
            OracleVerdict::Counterexample(g) if !g.is_connected()
        ));
        assert!(oracle_forcibly_unicyclic(&seq("2^4"), 10).unwrap().holds());
        assert_eq!(
            oracle_forcibly_tree(&seq("2^4"), 10).unwrap(),
            OracleVerdict::SumMismatch
        );
        assert_eq!(
            oracle_forcibly_tree(&seq("3,3,1,1"), 10).unwrap(),
            OracleVerdict::NotGraphic
        );
        assert!(oracle_forcibly_tree(&seq("3,3,1,1,1,1"), 10)
            .unwrap()
            .holds());
        assert!(oracle_forcibly_tree(&seq("2,2,1,1"), 10).unwrap().holds());
    }
}
