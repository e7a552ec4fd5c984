//! Exhaustive sweeps comparing the closed-form classifiers with the oracle.

use serde::Serialize;

use rayon::prelude::*;

use crate::classifier::{all_matching_families, classify, Family, ForciblyVerdict};
use crate::enumeration::{oracle_forcibly, EnumerationError, OracleVerdict, TargetClass};
use crate::sequence::DegreeSequence;

/// Every non-increasing sequence of length `n` with entries in `0..n` and
/// the given sum, in lexicographically decreasing order. Graphicality is not
/// checked.
pub fn sequences_with_sum(n: usize, sum: usize) -> Vec<DegreeSequence> {
    fn fill(
        prefix: &mut Vec<usize>,
        n: usize,
        cap: usize,
        remaining: usize,
        out: &mut Vec<DegreeSequence>,
    ) {
        let slots = n - prefix.len();
        if slots == 0 {
            if remaining == 0 {
                out.push(DegreeSequence::new(prefix.clone()));
            }
            return;
        }
        if remaining > cap * slots {
            return;
        }
        for x in (0..=cap.min(remaining)).rev() {
            prefix.push(x);
            fill(prefix, n, x, remaining - x, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if sum == 0 {
            out.push(DegreeSequence::default());
        }
        return out;
    }
    fill(&mut Vec::with_capacity(n), n, n - 1, sum, &mut out);
    out
}

/// Smallest `n` a sweep covers. Trees start at 2 so the one-vertex sequence
/// `(0)` stays out of the reported lists.
pub fn sweep_start(class: TargetClass) -> usize {
    class.min_order().max(2)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SequenceCheck {
    pub sequence: DegreeSequence,
    pub graphic: bool,
    pub verdict: ForciblyVerdict,
    pub oracle_holds: bool,
    #[serde(skip)]
    pub oracle: OracleVerdict,
    /// More than one clause matched; only the first is in `verdict`.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub also_matches: Vec<Family>,
}

impl SequenceCheck {
    pub fn agrees(&self) -> bool {
        self.verdict.decision == self.oracle_holds
    }

    pub fn positive(&self) -> bool {
        self.verdict.decision || self.oracle_holds
    }
}

pub fn check_sequence(
    seq: &DegreeSequence,
    class: TargetClass,
    limit: usize,
) -> Result<SequenceCheck, EnumerationError> {
    let verdict = classify(seq, class);
    let oracle = oracle_forcibly(seq, class, limit)?;
    let mut families = all_matching_families(seq, class);
    if !families.is_empty() {
        families.remove(0);
    }
    Ok(SequenceCheck {
        sequence: seq.clone(),
        graphic: seq.is_graphic(),
        oracle_holds: oracle.holds(),
        verdict,
        oracle,
        also_matches: families,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct Tally {
    pub n: usize,
    pub sequences: usize,
    pub graphic: usize,
    pub positives: usize,
    pub agreements: usize,
    pub discrepancies: usize,
}

/// Results for one `n`, sequences in sweep order.
#[derive(Debug, Clone)]
pub struct LevelResult {
    pub tally: Tally,
    pub checks: Vec<SequenceCheck>,
}

impl LevelResult {
    pub fn positives(&self) -> impl Iterator<Item = &SequenceCheck> {
        self.checks.iter().filter(|c| c.positive())
    }

    pub fn discrepancies(&self) -> impl Iterator<Item = &SequenceCheck> {
        self.checks.iter().filter(|c| !c.agrees())
    }
}

/// Checks every candidate sequence on `n` vertices. Work is spread over the
/// current rayon pool; the result order does not depend on it.
pub fn verify_level(
    class: TargetClass,
    n: usize,
    limit: usize,
) -> Result<LevelResult, EnumerationError> {
    let candidates = sequences_with_sum(n, class.degree_sum(n));
    let checks: Vec<SequenceCheck> = candidates
        .par_iter()
        .map(|s| check_sequence(s, class, limit))
        .collect::<Result<_, _>>()?;
    let mut tally = Tally {
        n,
        sequences: checks.len(),
        ..Tally::default()
    };
    for c in &checks {
        tally.graphic += usize::from(c.graphic);
        tally.positives += usize::from(c.positive());
        if c.agrees() {
            tally.agreements += 1;
        } else {
            tally.discrepancies += 1;
        }
    }
    Ok(LevelResult { tally, checks })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct Summary {
    pub checked: usize,
    pub graphic: usize,
    pub positives: usize,
    pub agreements: usize,
    pub discrepancies: usize,
}

impl Summary {
    pub fn add(&mut self, t: &Tally) {
        self.checked += t.sequences;
        self.graphic += t.graphic;
        self.positives += t.positives;
        self.agreements += t.agreements;
        self.discrepancies += t.discrepancies;
    }
}

/// Runs [`verify_level`] for every `n` from the class's start to `max_n`
/// on a pool of `workers` threads, calling `on_level` as each finishes.
pub fn verify_sweep<F>(
    class: TargetClass,
    max_n: usize,
    limit: usize,
    workers: usize,
    mut on_level: F,
) -> Result<Summary, EnumerationError>
where
    F: FnMut(&LevelResult),
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .expect("thread pool");
    let mut summary = Summary::default();
    for n in sweep_start(class)..=max_n {
        let level = pool.install(|| verify_level(class, n, limit))?;
        summary.add(&level.tally);
        on_level(&level);
    }
    Ok(summary)
}
