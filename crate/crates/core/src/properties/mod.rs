//! Eight structural properties of the infinity series, checked at bounded
//! scale against any radix recurrence.
//!
//! | id | property |
//! |----|----------|
//! | 1 | every integer occurs |
//! | 2 | `k`-self-similar: each `seq(k^i·n + j)` is `±seq(n) + a` |
//! | 3 | every interval magnitude occurs |
//! | 4 | every occurring interval starts from many different notes |
//! | 5 | runs of negative / positive / non-negative / non-positive notes are bounded |
//! | 6 | recurrent: every block occurs again |
//! | 7 | slowly growing: `max |seq(n)|` is `Θ(log n)` |
//! | 8 | squarefree |
//!
//! Most of these are statements about the whole infinite sequence, so a
//! pass only means "no violation up to the recorded bounds". A fail always
//! carries a counterexample that [`PropertyEntry::reverify`] can re-check.

mod checks;

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::analysis::{PowerReport, RepetitionReport, RunPredicate};
use crate::sequence::RadixRecurrence;

pub use checks::{
    check_bounded_runs, check_every_interval, check_growth, check_interval_starts, check_intervals,
    check_recurrence, check_self_similarity, check_squarefree, check_surjectivity, interval_census,
    IntervalCensus,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

pub const PROPERTY_NAMES: [&str; 8] = [
    "surjective",
    "self-similar",
    "every interval occurs",
    "intervals start from infinitely many notes",
    "bounded runs",
    "recurrent",
    "slowly growing",
    "squarefree",
];

/// `seq(k^level·n + offset) = sign·seq(n) + shift` on the tested prefix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SelfSimilarityMap {
    pub k: u64,
    pub level: u32,
    pub offset: u64,
    pub sign: i64,
    pub shift: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SurjectivityWitness {
    pub value: i64,
    pub position: u64,
    /// Taken from a closed-form witness rather than found by search.
    pub analytic: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IntervalStarts {
    pub interval: i64,
    pub starts: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunLevel {
    pub prefix_len: usize,
    pub maxima: BTreeMap<RunPredicate, usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockShortfall {
    pub values: Vec<i64>,
    pub occurrences: Vec<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AnalyticRecurrence {
    /// Block `seq[0..2^exponent)` …
    pub exponent: u32,
    /// … found again at `5·2^(exponent + t)`.
    pub t: u32,
    pub position: u64,
    pub holds: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GrowthLevel {
    pub exponent: u32,
    pub max_abs: u64,
    pub argmax: u64,
}

/// What a check saw.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Evidence {
    Surjectivity {
        witnesses: Vec<SurjectivityWitness>,
        missing: Vec<i64>,
    },
    SelfSimilarity {
        maps: Vec<SelfSimilarityMap>,
        /// `(level, offset, n)` where no `±seq(n) + a` form fits.
        counterexample: Option<(u32, u64, u64)>,
        constant: Vec<(u32, u64)>,
    },
    Intervals {
        observed: Vec<IntervalStarts>,
        missing_magnitudes: Vec<u64>,
        all_odd: bool,
        /// Intervals where the census disagrees with the exact
        /// characterization (only computed for the infinity series).
        characterization_mismatches: Vec<i64>,
    },
    IntervalStarts {
        sparse: Vec<IntervalStarts>,
        min_starts: usize,
    },
    Runs {
        levels: Vec<RunLevel>,
    },
    Recurrence {
        blocks_checked: usize,
        shortfalls: Vec<BlockShortfall>,
        analytic: Vec<AnalyticRecurrence>,
    },
    Growth {
        profile: Vec<GrowthLevel>,
        fitted_constant: String,
    },
    Squares {
        squares: Vec<RepetitionReport>,
        cubes: Vec<PowerReport>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyEntry {
    pub id: u8,
    pub verdict: Verdict,
    pub evidence: Evidence,
    pub bounds: BTreeMap<&'static str, u64>,
}

impl PropertyEntry {
    pub fn name(&self) -> &'static str {
        PROPERTY_NAMES[self.id as usize - 1]
    }

    /// Re-checks a fail verdict's counterexample by direct evaluation.
    /// Non-fail entries have nothing to re-check and return `true`.
    pub fn reverify(&self, seq: &RadixRecurrence) -> bool {
        if self.verdict != Verdict::Fail {
            return true;
        }
        checks::reverify_failure(self, seq)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub sequence: String,
    pub properties: Vec<PropertyEntry>,
}

impl PropertyReport {
    pub fn verdict(&self, id: u8) -> Option<Verdict> {
        self.entry(id).map(|e| e.verdict)
    }

    pub fn entry(&self, id: u8) -> Option<&PropertyEntry> {
        self.properties.iter().find(|e| e.id == id)
    }

    pub fn to_json(&self) -> serde_json::Result<String> {
        serde_json::to_string_pretty(self)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("sequence {}\n", self.sequence);
        for e in &self.properties {
            let bounded = if e.verdict == Verdict::Pass {
                " (bounded)"
            } else {
                ""
            };
            out.push_str(&format!(
                "{} {:<44} {}{}",
                e.id,
                e.name(),
                e.verdict,
                bounded
            ));
            let bounds: Vec<String> = e.bounds.iter().map(|(k, v)| format!("{k}={v}")).collect();
            if !bounds.is_empty() {
                out.push_str(&format!("  [{}]", bounds.join(", ")));
            }
            out.push('\n');
            if let Some(detail) = checks::summarize(&e.evidence) {
                out.push_str(&format!("  {detail}\n"));
            }
        }
        out
    }
}

/// Bounds for [`run_all`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HarnessConfig {
    pub prefix_len: usize,
    pub range_bound: i64,
    pub self_similarity_depth: u32,
    pub self_similarity_prefix: usize,
    pub interval_bound: u64,
    pub interval_multiplicity: usize,
    pub recurrence_block_len: usize,
    pub recurrence_occurrences: usize,
    pub analytic_max_exponent: u32,
    pub squarefree_max_len: usize,
}

impl HarnessConfig {
    /// `2^16` terms for radix 2 and 4, `3^10` for radix 3; in general the
    /// largest power of the radix not above `2^16`, or its tenth power when
    /// that is smaller.
    pub fn for_sequence(seq: &RadixRecurrence) -> Self {
        let k = seq.radix();
        let exponent = match k {
            2 => 16,
            3 => 10,
            _ => largest_power_exponent(k, 1 << 16),
        };
        Self::with_exponent(seq, exponent)
    }

    /// Same defaults, with the prefix set to `radix^exponent` terms.
    pub fn with_exponent(seq: &RadixRecurrence, exponent: u32) -> Self {
        let k = seq.radix();
        let prefix_len = k.saturating_pow(exponent).min(1 << 26) as usize;
        HarnessConfig {
            prefix_len,
            range_bound: 10,
            self_similarity_depth: largest_power_exponent(k, 64).max(1),
            self_similarity_prefix: 1 << 10,
            interval_bound: 10,
            interval_multiplicity: 3,
            recurrence_block_len: 8,
            recurrence_occurrences: 3,
            analytic_max_exponent: 8,
            squarefree_max_len: 16,
        }
    }
}

fn largest_power_exponent(k: u64, limit: u64) -> u32 {
    let mut e = 0;
    let mut p = 1u64;
    while p.saturating_mul(k) <= limit {
        p *= k;
        e += 1;
    }
    e
}

/// Runs all eight checks. The checks run concurrently; the report is in
/// property order either way.
pub fn run_all(seq: &RadixRecurrence, config: &HarnessConfig) -> PropertyReport {
    let properties = (1..=8u8)
        .into_par_iter()
        .map(|id| run_one(seq, config, id))
        .collect();
    PropertyReport {
        sequence: seq.name().to_string(),
        properties,
    }
}

pub fn run_one(seq: &RadixRecurrence, c: &HarnessConfig, id: u8) -> PropertyEntry {
    match id {
        1 => check_surjectivity(seq, c.range_bound, c.prefix_len as u64),
        2 => check_self_similarity(
            seq,
            seq.radix(),
            c.self_similarity_depth,
            c.self_similarity_prefix,
        ),
        3 => check_every_interval(&interval_census(seq, c.prefix_len), seq, c.interval_bound),
        4 => check_interval_starts(
            &interval_census(seq, c.prefix_len),
            c.interval_bound,
            c.interval_multiplicity,
        ),
        5 => check_bounded_runs(seq, c.prefix_len),
        6 => check_recurrence(
            seq,
            c.recurrence_block_len,
            c.recurrence_occurrences,
            c.prefix_len as u64,
            c.analytic_max_exponent,
        ),
        7 => check_growth(seq, c.prefix_len),
        8 => check_squarefree(seq, c.prefix_len, c.squarefree_max_len),
        other => panic!("no property {other}"),
    }
}
