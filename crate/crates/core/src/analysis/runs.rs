//! Longest runs of notes with a given sign, and the parity of note pairs.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::Error;
use crate::sequence::RadixRecurrence;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RunPredicate {
    Negative,
    Positive,
    NonNegative,
    NonPositive,
}

impl RunPredicate {
    pub const ALL: [RunPredicate; 4] = [
        RunPredicate::Negative,
        RunPredicate::Positive,
        RunPredicate::NonNegative,
        RunPredicate::NonPositive,
    ];

    pub fn holds(self, value: i64) -> bool {
        match self {
            RunPredicate::Negative => value < 0,
            RunPredicate::Positive => value > 0,
            RunPredicate::NonNegative => value >= 0,
            RunPredicate::NonPositive => value <= 0,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            RunPredicate::Negative => "negative",
            RunPredicate::Positive => "positive",
            RunPredicate::NonNegative => "non-negative",
            RunPredicate::NonPositive => "non-positive",
        }
    }
}

impl fmt::Display for RunPredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for RunPredicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        RunPredicate::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown predicate {s:?}")))
    }
}

pub fn max_run(values: &[i64], predicate: RunPredicate) -> usize {
    let mut best = 0;
    let mut current = 0;
    for &v in values {
        if predicate.holds(v) {
            current += 1;
            best = best.max(current);
        } else {
            current = 0;
        }
    }
    best
}

/// Longest run of consecutive terms satisfying `predicate` in the first
/// `prefix_len` terms.
pub fn scan_runs(seq: &RadixRecurrence, prefix_len: usize, predicate: RunPredicate) -> usize {
    max_run(&seq.prefix(prefix_len), predicate)
}

/// A note pair seen at both an even and an odd position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ParityConflict {
    pub pair: (i64, i64),
    pub even_position: u64,
    pub odd_position: u64,
}

/// First pair `(seq(n), seq(n+1))`, `n + 1 < prefix_len`, occurring at
/// positions of both parities.
pub fn find_parity_conflict(seq: &RadixRecurrence, prefix_len: usize) -> Option<ParityConflict> {
    let values = seq.prefix(prefix_len);
    let mut first_seen: HashMap<(i64, i64), [Option<u64>; 2]> = HashMap::new();
    for (n, w) in values.windows(2).enumerate() {
        let slots = first_seen.entry((w[0], w[1])).or_default();
        slots[n % 2].get_or_insert(n as u64);
        if let [Some(even), Some(odd)] = *slots {
            return Some(ParityConflict {
                pair: (w[0], w[1]),
                even_position: even,
                odd_position: odd,
            });
        }
    }
    None
}

/// True when no note pair occurs at both an even and an odd position within
/// the first `prefix_len` terms.
pub fn pair_parity_check(seq: &RadixRecurrence, prefix_len: usize) -> bool {
    find_parity_conflict(seq, prefix_len).is_none()
}
