//! Closed-form recognizers for forcibly tree, unicyclic and bicyclic
//! sequences, plus the harness that checks them against the oracle.
//!
//! Each recognizer tests the families of its characterization in a fixed
//! order and reports the first one that matches. Families are matched on
//! the sorted sequence: literal members by equality, parametric ones by
//! binding the leading entries and counting the trailing 2s and 1s.

use std::fmt;

use serde::Serialize;

use crate::enumeration::{oracle_forcibly, EnumerationError, OracleVerdict, TargetClass};
use crate::graph::Graph;
use crate::sequence::{DegreeSequence, EdgeClass};

/// Which clause of a characterization matched.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    #[serde(rename = "T-star")]
    TreeStar,
    #[serde(rename = "T-double-star")]
    TreeDoubleStar,
    U1,
    U2,
    U3,
    B1,
    B2,
    B3,
    B4,
    B5,
}

impl Family {
    pub fn id(self) -> &'static str {
        match self {
            Family::TreeStar => "T-star",
            Family::TreeDoubleStar => "T-double-star",
            Family::U1 => "U1",
            Family::U2 => "U2",
            Family::U3 => "U3",
            Family::B1 => "B1",
            Family::B2 => "B2",
            Family::B3 => "B3",
            Family::B4 => "B4",
            Family::B5 => "B5",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// Parameters bound by a family match. `r`, `s`, `t` are the leading
/// entries for the parametric clauses (the two centre degrees for a
/// double-star).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FamilyParams {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<usize>,
}

impl FamilyParams {
    fn n(n: usize) -> Self {
        Self {
            n,
            r: None,
            s: None,
            t: None,
        }
    }

    fn rst(n: usize, r: usize, s: usize, t: Option<usize>) -> Self {
        Self {
            n,
            r: Some(r),
            s: Some(s),
            t,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Reason {
    NotGraphic,
    SumMismatch,
    TooSmall,
    NoFamily,
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Reason::NotGraphic => "not graphic",
            Reason::SumMismatch => "sum mismatch",
            Reason::TooSmall => "too small",
            Reason::NoFamily => "no family matched",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ForciblyVerdict {
    pub class: TargetClass,
    pub decision: bool,
    pub family: Option<Family>,
    pub params: Option<FamilyParams>,
    pub reason: Option<Reason>,
}

impl ForciblyVerdict {
    fn yes(class: TargetClass, family: Family, params: FamilyParams) -> Self {
        Self {
            class,
            decision: true,
            family: Some(family),
            params: Some(params),
            reason: None,
        }
    }

    fn no(class: TargetClass, reason: Reason) -> Self {
        Self {
            class,
            decision: false,
            family: None,
            params: None,
            reason: Some(reason),
        }
    }
}

/// Common gate: graphic, large enough, right sum.
fn precheck(seq: &DegreeSequence, class: TargetClass) -> Option<Reason> {
    if !seq.is_graphic() {
        return Some(Reason::NotGraphic);
    }
    let n = seq.len();
    if n < class.min_order() {
        return Some(Reason::TooSmall);
    }
    if seq.sum() != class.degree_sum(n) {
        return Some(Reason::SumMismatch);
    }
    None
}

/// Families of each class in first-match order.
pub fn families_of(class: TargetClass) -> &'static [Family] {
    match class {
        TargetClass::Tree => &[Family::TreeStar, Family::TreeDoubleStar],
        TargetClass::Unicyclic => &[Family::U1, Family::U2, Family::U3],
        TargetClass::Bicyclic => &[Family::B1, Family::B2, Family::B3, Family::B4, Family::B5],
    }
}

/// Literal members of clause B1.
pub const B1_SEQUENCES: [&[usize]; 6] = [
    &[3, 3, 2, 2, 2, 2],
    &[3, 3, 3, 2, 2, 1],
    &[3, 3, 3, 2, 2, 2, 1],
    &[4, 2, 2, 2, 2, 2, 2],
    &[4, 3, 2, 2, 2, 2, 1],
    &[5, 2, 2, 2, 2, 2, 2, 1],
];

/// Literal members of clause U1.
pub const U1_SEQUENCES: [&[usize]; 2] = [&[2, 2, 2, 2, 2], &[3, 2, 2, 2, 2, 1]];

/// Matches one family's pattern against a sorted sequence that already has
/// the class's degree sum.
fn match_family(d: &[usize], family: Family) -> Option<FamilyParams> {
    let n = d.len();
    // `d[from..]` are all 1s.
    let ones_from = |from: usize| from <= n && d[from..].iter().all(|&x| x == 1);
    let twos = |range: std::ops::Range<usize>| range.end <= n && d[range].iter().all(|&x| x == 2);
    let lead = |i: usize| d.get(i).copied().unwrap_or(0);
    let (r, s, t) = (lead(0), lead(1), lead(2));
    let hit = match family {
        Family::TreeStar => n >= 1 && r == n - 1 && ones_from(1),
        Family::TreeDoubleStar => n >= 4 && s >= 2 && r + s == n && ones_from(2),
        Family::U1 => U1_SEQUENCES.contains(&d),
        Family::U2 => n >= 4 && r == n - 2 && twos(1..4) && ones_from(4),
        Family::U3 => n >= 3 && t >= 2 && r + s + t == n + 3 && ones_from(3),
        Family::B1 => B1_SEQUENCES.contains(&d),
        Family::B2 => n >= 5 && r == n - 1 && twos(1..5) && ones_from(5),
        Family::B3 => n >= 6 && r == n - 2 && twos(1..6) && ones_from(6),
        Family::B4 => n >= 5 && r == n - 2 && s == 3 && twos(2..5) && ones_from(5),
        Family::B5 => {
            n >= 4 && s >= 3 && t >= 2 && twos(3..4) && ones_from(4) && r + s + t == n + 4
        }
    };
    hit.then(|| match family {
        Family::TreeDoubleStar => FamilyParams::rst(n, r, s, None),
        Family::U3 | Family::B5 => FamilyParams::rst(n, r, s, Some(t)),
        _ => FamilyParams::n(n),
    })
}

pub fn classify(seq: &DegreeSequence, class: TargetClass) -> ForciblyVerdict {
    if let Some(reason) = precheck(seq, class) {
        return ForciblyVerdict::no(class, reason);
    }
    families_of(class)
        .iter()
        .find_map(|&f| match_family(seq.degrees(), f).map(|p| ForciblyVerdict::yes(class, f, p)))
        .unwrap_or_else(|| ForciblyVerdict::no(class, Reason::NoFamily))
}

/// Forcibly tree: the sequence of a star `(n-1, 1^{n-1})` or of a
/// double-star `(a, b, 1^{n-2})` with `a >= b >= 2`, `a + b = n`.
pub fn classify_forcibly_tree(seq: &DegreeSequence) -> ForciblyVerdict {
    classify(seq, TargetClass::Tree)
}

/// Forcibly unicyclic:
/// * U1: `(2^5)` or `(3, 2^4, 1)`;
/// * U2: `(n-2, 2^3, 1^{n-4})`, `n >= 4`;
/// * U3: `(r, s, t, 1^{n-3})`, `r >= s >= t >= 2`, `r + s + t = n + 3`.
pub fn classify_forcibly_unicyclic(seq: &DegreeSequence) -> ForciblyVerdict {
    classify(seq, TargetClass::Unicyclic)
}

/// Forcibly bicyclic:
/// * B1: six literal sequences, see [`B1_SEQUENCES`];
/// * B2: `(n-1, 2^4, 1^{n-5})`, `n >= 5`;
/// * B3: `(n-2, 2^5, 1^{n-6})`, `n >= 6`;
/// * B4: `(n-2, 3, 2^3, 1^{n-5})`, `n >= 5`;
/// * B5: `(r, s, t, 2, 1^{n-4})`, `r >= s >= 3`, `t >= 2`, `r + s + t = n + 4`.
pub fn classify_forcibly_bicyclic(seq: &DegreeSequence) -> ForciblyVerdict {
    classify(seq, TargetClass::Bicyclic)
}

/// The class a sequence's degree sum points at, if any.
pub fn target_for(seq: &DegreeSequence) -> Option<TargetClass> {
    match seq.edge_class() {
        EdgeClass::TreeCandidate => Some(TargetClass::Tree),
        EdgeClass::UnicyclicCandidate => Some(TargetClass::Unicyclic),
        EdgeClass::BicyclicCandidate => Some(TargetClass::Bicyclic),
        EdgeClass::Other => None,
    }
}

/// Every family a sequence matches, not just the first.
pub fn all_matching_families(seq: &DegreeSequence, class: TargetClass) -> Vec<Family> {
    if precheck(seq, class).is_some() {
        return Vec::new();
    }
    families_of(class)
        .iter()
        .copied()
        .filter(|&f| match_family(seq.degrees(), f).is_some())
        .collect()
}

/// Every member of the class's families on exactly `n` vertices, largest
/// first. Built from the clause formulas, independently of the matcher.
pub fn family_members(class: TargetClass, n: usize) -> Vec<DegreeSequence> {
    let build = |head: &[usize], twos: usize, ones: usize| -> DegreeSequence {
        let mut v = head.to_vec();
        v.extend(std::iter::repeat_n(2, twos));
        v.extend(std::iter::repeat_n(1, ones));
        DegreeSequence::new(v)
    };
    let mut out: Vec<DegreeSequence> = Vec::new();
    match class {
        TargetClass::Tree => {
            if n >= 1 {
                out.push(build(&[n - 1], 0, n - 1));
            }
            for b in 2..=n / 2 {
                out.push(build(&[n - b, b], 0, n - 2));
            }
        }
        TargetClass::Unicyclic => {
            for lit in U1_SEQUENCES.iter().filter(|l| l.len() == n) {
                out.push(DegreeSequence::new(lit.to_vec()));
            }
            if n >= 4 {
                out.push(build(&[n - 2], 3, n - 4));
            }
            for t in 2..n {
                for s in t..n {
                    if let Some(r) = (n + 3).checked_sub(s + t).filter(|&r| r >= s && r < n) {
                        out.push(build(&[r, s, t], 0, n - 3));
                    }
                }
            }
        }
        TargetClass::Bicyclic => {
            for lit in B1_SEQUENCES.iter().filter(|l| l.len() == n) {
                out.push(DegreeSequence::new(lit.to_vec()));
            }
            if n >= 5 {
                out.push(build(&[n - 1], 4, n - 5));
                out.push(build(&[n - 2, 3], 3, n - 5));
            }
            if n >= 6 {
                out.push(build(&[n - 2], 5, n - 6));
            }
            if n >= 4 {
                for t in 2..n {
                    for s in t.max(3)..n {
                        if let Some(r) = (n + 4).checked_sub(s + t).filter(|&r| r >= s && r < n) {
                            out.push(build(&[r, s, t, 2], 0, n - 4));
                        }
                    }
                }
            }
        }
    }
    out.retain(|s| s.len() == n);
    out.sort_by(|a, b| b.cmp(a));
    out.dedup();
    out
}

/// Classifier and oracle disagree on a sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Discrepancy {
    pub sequence: DegreeSequence,
    pub verdict: ForciblyVerdict,
    pub oracle: OracleVerdict,
}

impl Discrepancy {
    /// The oracle's counterexample, when it has one.
    pub fn counterexample(&self) -> Option<&Graph> {
        match &self.oracle {
            OracleVerdict::Counterexample(g) => Some(g),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CrossCheck {
    Agree {
        class: TargetClass,
        verdict: ForciblyVerdict,
    },
    Discrepancy(Box<Discrepancy>),
    /// The degree sum matches none of the three classes.
    NoClass,
}

/// Runs the closed form and the oracle for the class picked by the degree
/// sum and compares the decisions.
pub fn cross_check(seq: &DegreeSequence, limit: usize) -> Result<CrossCheck, EnumerationError> {
    match target_for(seq) {
        Some(class) => cross_check_class(seq, class, limit),
        None => Ok(CrossCheck::NoClass),
    }
}

pub fn cross_check_class(
    seq: &DegreeSequence,
    class: TargetClass,
    limit: usize,
) -> Result<CrossCheck, EnumerationError> {
    let verdict = classify(seq, class);
    let oracle = oracle_forcibly(seq, class, limit)?;
    Ok(if verdict.decision == oracle.holds() {
        CrossCheck::Agree { class, verdict }
    } else {
        CrossCheck::Discrepancy(Box::new(Discrepancy {
            sequence: seq.clone(),
            verdict,
            oracle,
        }))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequence::parse_sequence;

    fn verdict(s: &str, class: TargetClass) -> ForciblyVerdict {
        classify(&parse_sequence(s).unwrap(), class)
    }

    fn family(s: &str, class: TargetClass) -> Option<Family> {
        verdict(s, class).family
    }

    #[test]
    fn tree_examples() {
        use TargetClass::Tree;
        assert_eq!(family("3,1,1,1", Tree), Some(Family::TreeStar));
        assert_eq!(family("3,3,1,1,1,1", Tree), Some(Family::TreeDoubleStar));
        assert_eq!(family("2,2,1,1", Tree), Some(Family::TreeDoubleStar));
        assert_eq!(family("0", Tree), Some(Family::TreeStar));
        assert_eq!(family("1,1", Tree), Some(Family::TreeStar));
        assert_eq!(verdict("2,2,2,1,1", Tree).reason, Some(Reason::NoFamily));
        let p = verdict("3,3,1,1,1,1", Tree).params.unwrap();
        assert_eq!((p.n, p.r, p.s), (6, Some(3), Some(3)));
    }

    #[test]
    fn unicyclic_examples() {
        use TargetClass::Unicyclic;
        assert_eq!(family("2^5", Unicyclic), Some(Family::U1));
        assert_eq!(family("3,2^4,1", Unicyclic), Some(Family::U1));
        assert_eq!(family("4,2,2,2,1,1", Unicyclic), Some(Family::U2));
        let v = verdict("4,2,2,1,1", Unicyclic);
        assert_eq!(v.family, Some(Family::U3));
        assert_eq!(v.params.unwrap().t, Some(2));
        assert_eq!(
            verdict("4,2,2,2,2,1,1", Unicyclic).reason,
            Some(Reason::NoFamily)
        );
        assert_eq!(verdict("2,2", Unicyclic).reason, Some(Reason::NotGraphic));
        assert_eq!(verdict("1,1", Unicyclic).reason, Some(Reason::TooSmall));
        assert_eq!(
            verdict("2,2,1,1", Unicyclic).reason,
            Some(Reason::SumMismatch)
        );
    }

    #[test]
    fn bicyclic_examples() {
        use TargetClass::Bicyclic;
        let v = verdict("3,3,2,2", Bicyclic);
        assert_eq!(v.family, Some(Family::B5));
        assert_eq!(v.params.unwrap(), FamilyParams::rst(4, 3, 3, Some(2)));
        assert_eq!(family("5,2,2,2,2,1", Bicyclic), Some(Family::B2));
        assert_eq!(family("4,2^6", Bicyclic), Some(Family::B1));
        assert_eq!(family("4,2^5", Bicyclic), Some(Family::B3));
        assert_eq!(family("3,3,2,2,2", Bicyclic), Some(Family::B4));
        assert!(!verdict("4,3,3,2,2,2,1,1", Bicyclic).decision);
        assert_eq!(verdict("7", Bicyclic).reason, Some(Reason::NotGraphic));
    }

    #[test]
    fn clauses_do_not_overlap_in_small_range() {
        for class in TargetClass::ALL {
            for n in 1..=25 {
                for m in family_members(class, n) {
                    assert_eq!(all_matching_families(&m, class).len(), 1, "{m}");
                }
            }
        }
    }

    #[test]
    fn members_match_and_have_the_class_sum() {
        for class in TargetClass::ALL {
            for n in 1..=30 {
                for m in family_members(class, n) {
                    assert_eq!(m.sum(), class.degree_sum(n), "{m}");
                    assert!(classify(&m, class).decision, "{m} rejected");
                }
            }
        }
    }

    #[test]
    fn positives_have_consistent_params() {
        for class in TargetClass::ALL {
            for n in 1..=20 {
                for m in family_members(class, n) {
                    let v = classify(&m, class);
                    let p = v.params.unwrap();
                    assert_eq!(p.n, n);
                    if let (Some(r), Some(s)) = (p.r, p.s) {
                        assert!(r >= s);
                        assert_eq!((m.d(1), m.d(2)), (Some(r), Some(s)));
                    }
                }
            }
        }
    }

    #[test]
    fn small_members_agree_with_the_oracle() {
        for class in TargetClass::ALL {
            for n in class.min_order()..=7 {
                for m in family_members(class, n) {
                    match cross_check_class(&m, class, 10).unwrap() {
                        CrossCheck::Agree { .. } => {}
                        other => panic!("{m}: {other:?}"),
                    }
                }
            }
        }
    }
}
