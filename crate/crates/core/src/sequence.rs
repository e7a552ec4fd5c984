//! Degree sequences: parsing, rendering, graphicality and greedy realization.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("malformed token `{token}`: {reason}")]
    Parse { token: String, reason: &'static str },
    #[error("sequence {0} is not graphic")]
    NotGraphic(DegreeSequence),
}

/// A multiset of vertex degrees, stored non-increasing.
///
/// Entries are normalized on construction, so two sequences compare equal
/// exactly when they are equal as multisets.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DegreeSequence {
    degrees: Vec<usize>,
}

impl DegreeSequence {
    pub fn new(mut degrees: Vec<usize>) -> Self {
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        Self { degrees }
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.degrees.iter().sum()
    }

    /// The 1-based entry `d_i`, or `None` past the end.
    pub fn d(&self, i: usize) -> Option<usize> {
        i.checked_sub(1).and_then(|i| self.degrees.get(i).copied())
    }

    pub fn max(&self) -> Option<usize> {
        self.degrees.first().copied()
    }

    /// Number of entries equal to `value`.
    pub fn count_of(&self, value: usize) -> usize {
        self.degrees.iter().filter(|&&d| d == value).count()
    }

    /// Runs of equal entries as `(degree, multiplicity)`, largest degree first.
    pub fn runs(&self) -> Vec<(usize, usize)> {
        let mut runs: Vec<(usize, usize)> = Vec::new();
        for &d in &self.degrees {
            match runs.last_mut() {
                Some((value, count)) if *value == d => *count += 1,
                _ => runs.push((d, 1)),
            }
        }
        runs
    }

    /// Erdős–Gallai test: even sum and, for every k,
    /// `sum_{i<=k} d_i <= k(k-1) + sum_{i>k} min(d_i, k)`.
    pub fn is_graphic(&self) -> bool {
        is_graphic_sorted(&self.degrees)
    }

    pub fn edge_class(&self) -> EdgeClass {
        class_by_edge_count(self)
    }
}

impl fmt::Display for DegreeSequence {
    /// Exponent form, bases decreasing: `(5,2,2,2,2,2,1)` renders as `5,2^5,1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (d, c)) in self.runs().into_iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            if c == 1 {
                write!(f, "{d}")?;
            } else {
                write!(f, "{d}^{c}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for DegreeSequence {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl FromStr for DegreeSequence {
    type Err = SequenceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_sequence(s)
    }
}

impl From<Vec<usize>> for DegreeSequence {
    fn from(degrees: Vec<usize>) -> Self {
        Self::new(degrees)
    }
}

impl<const N: usize> From<[usize; N]> for DegreeSequence {
    fn from(degrees: [usize; N]) -> Self {
        Self::new(degrees.to_vec())
    }
}

/// Parses `d` / `d^c` tokens separated by commas or whitespace.
///
/// Surrounding parentheses and braces around exponents (`1^{3}`) are
/// tolerated, so `(4,2^6)` parses as well.
pub fn parse_sequence(text: &str) -> Result<DegreeSequence, SequenceError> {
    let body = text.trim();
    let body = body
        .strip_prefix('(')
        .and_then(|b| b.strip_suffix(')'))
        .unwrap_or(body);
    let mut degrees = Vec::new();
    for token in body
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
    {
        let err = |reason| SequenceError::Parse {
            token: token.to_string(),
            reason,
        };
        let (base, count) = match token.split_once('^') {
            Some((base, exp)) => {
                let exp = exp
                    .strip_prefix('{')
                    .and_then(|e| e.strip_suffix('}'))
                    .unwrap_or(exp);
                (base, parse_number(exp).map_err(err)?)
            }
            None => (token, 1),
        };
        let base = parse_number(base).map_err(err)?;
        if count == 0 {
            return Err(err("exponent must be at least 1"));
        }
        degrees.extend(std::iter::repeat_n(base, count));
    }
    Ok(DegreeSequence::new(degrees))
}

fn parse_number(s: &str) -> Result<usize, &'static str> {
    if s.starts_with('-') {
        return Err("negative value");
    }
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err("expected a non-negative integer");
    }
    s.parse().map_err(|_| "integer out of range")
}

/// Erdős–Gallai on a slice that is already sorted non-increasing.
pub(crate) fn is_graphic_sorted(d: &[usize]) -> bool {
    let n = d.len();
    if d.iter().sum::<usize>() % 2 == 1 {
        return false;
    }
    if n > 0 && d[0] >= n {
        return false;
    }
    let mut lhs = 0;
    for k in 1..=n {
        lhs += d[k - 1];
        let rhs = k * (k - 1) + d[k..].iter().map(|&x| x.min(k)).sum::<usize>();
        if lhs > rhs {
            return false;
        }
    }
    true
}

/// Builds one realization greedily: the highest remaining degree vertex is
/// joined to the next highest ones, ties going to the lower vertex index.
/// Vertex `i` of the result has degree `d_i`.
pub fn havel_hakimi_realize(seq: &DegreeSequence) -> Result<Graph, SequenceError> {
    if !seq.is_graphic() {
        return Err(SequenceError::NotGraphic(seq.clone()));
    }
    let n = seq.len();
    let mut residual = seq.degrees().to_vec();
    let mut graph = Graph::empty(n);
    loop {
        let mut order: Vec<usize> = (0..n).filter(|&v| residual[v] > 0).collect();
        order.sort_by(|&a, &b| residual[b].cmp(&residual[a]).then(a.cmp(&b)));
        let Some((&v, rest)) = order.split_first() else {
            break;
        };
        let k = residual[v];
        // Erdős–Gallai guarantees enough partners; anything else is a bug.
        assert!(rest.len() >= k, "greedy realization ran out of partners");
        for &u in &rest[..k] {
            graph.add_edge(v, u);
            residual[u] -= 1;
        }
        residual[v] = 0;
    }
    debug_assert_eq!(graph.degree_sequence(), *seq);
    Ok(graph)
}

/// Which edge-count class a sequence could realize, from its sum alone.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EdgeClass {
    TreeCandidate,
    UnicyclicCandidate,
    BicyclicCandidate,
    Other,
}

pub fn class_by_edge_count(seq: &DegreeSequence) -> EdgeClass {
    let n = seq.len();
    if n == 0 {
        return EdgeClass::Other;
    }
    let sum = seq.sum();
    if sum + 2 == 2 * n {
        EdgeClass::TreeCandidate
    } else if sum == 2 * n {
        EdgeClass::UnicyclicCandidate
    } else if sum == 2 * n + 2 {
        EdgeClass::BicyclicCandidate
    } else {
        EdgeClass::Other
    }
}
