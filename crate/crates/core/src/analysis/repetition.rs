//! Repetitions `x y x` within a prefix of a sequence.
//!
//! The infinity series has no `xyx` with `|y| < 2|x|`; the bound is met
//! with equality infinitely often (`x = (1)`, `y = (-1, 2)` at position 1,
//! then its images under the doubling substitution).

use num_rational::Ratio;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::sequence::{Block, RadixRecurrence};

/// Which gaps `|y|` to look for, relative to `|x|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GapMode {
    /// `|y| < 2|x|`.
    Proximal,
    /// `|y| = 2|x|`.
    Boundary,
    /// `|y| = 0`.
    Square,
}

impl GapMode {
    fn gaps(self, x_len: usize) -> std::ops::Range<usize> {
        match self {
            GapMode::Proximal => 0..2 * x_len,
            GapMode::Boundary => 2 * x_len..2 * x_len + 1,
            GapMode::Square => 0..1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RepetitionReport {
    pub position: u64,
    pub x_len: usize,
    pub y_len: usize,
    #[serde(serialize_with = "values_only")]
    pub x_values: Block,
    #[serde(serialize_with = "ratio_string")]
    pub ratio: Ratio<u64>,
}

fn values_only<S: Serializer>(block: &Block, s: S) -> Result<S::Ok, S::Error> {
    block.values.serialize(s)
}

fn ratio_string<S: Serializer>(ratio: &Ratio<u64>, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&ratio.to_string())
}

impl RepetitionReport {
    /// Re-checks `seq[p..p+|x|] = seq[p+|x|+|y|..p+2|x|+|y|]` by evaluation.
    pub fn verify(&self, seq: &RadixRecurrence) -> bool {
        let x = seq.block(self.position, self.x_len);
        let again = seq.block(self.position + (self.x_len + self.y_len) as u64, self.x_len);
        x.values == again.values && x.values == self.x_values.values
    }
}

fn reports_at(values: &[i64], p: usize, max_x: usize, mode: GapMode) -> Vec<RepetitionReport> {
    let mut out = Vec::new();
    for x_len in 1..=max_x {
        for y_len in mode.gaps(x_len) {
            let second = p + x_len + y_len;
            if second + x_len > values.len() {
                break;
            }
            if values[p..p + x_len] == values[second..second + x_len] {
                out.push(RepetitionReport {
                    position: p as u64,
                    x_len,
                    y_len,
                    x_values: Block {
                        start: p as u64,
                        values: values[p..p + x_len].to_vec(),
                    },
                    ratio: Ratio::new(y_len as u64, x_len as u64),
                });
            }
        }
    }
    out
}

/// Every `(position, |x| ≤ max_x, |y|)` with `x y x` inside the first
/// `prefix_len` terms and `|y|` selected by `mode`, ordered by position,
/// then `|x|`, then `|y|`.
pub fn scan_repetitions(
    seq: &RadixRecurrence,
    prefix_len: usize,
    max_x: usize,
    mode: GapMode,
) -> Vec<RepetitionReport> {
    let values = seq.prefix(prefix_len);
    (0..values.len())
        .flat_map(|p| reports_at(&values, p, max_x, mode))
        .collect()
}

/// Same result as [`scan_repetitions`], with positions split across the
/// rayon pool.
pub fn scan_repetitions_parallel(
    seq: &RadixRecurrence,
    prefix_len: usize,
    max_x: usize,
    mode: GapMode,
) -> Vec<RepetitionReport> {
    let values = seq.prefix(prefix_len);
    (0..values.len())
        .into_par_iter()
        .flat_map_iter(|p| reports_at(&values, p, max_x, mode))
        .collect()
}

/// Proximal repetitions, `|y| < 2|x|`.
pub fn scan_proximal_repetitions(
    seq: &RadixRecurrence,
    prefix_len: usize,
    max_x: usize,
) -> Vec<RepetitionReport> {
    scan_repetitions_parallel(seq, prefix_len, max_x, GapMode::Proximal)
}

/// `x^exponent` occurrences (`x x`, `x x x`, …) with `|x| ≤ max_x`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PowerReport {
    pub position: u64,
    pub exponent: usize,
    #[serde(serialize_with = "values_only")]
    pub x_values: Block,
}

pub fn scan_powers(
    seq: &RadixRecurrence,
    prefix_len: usize,
    max_x: usize,
    exponent: usize,
) -> Vec<PowerReport> {
    let values = seq.prefix(prefix_len);
    let mut out = Vec::new();
    for p in 0..values.len() {
        for x_len in 1..=max_x {
            if p + exponent * x_len > values.len() {
                break;
            }
            let x = &values[p..p + x_len];
            if (1..exponent).all(|e| &values[p + e * x_len..p + (e + 1) * x_len] == x) {
                out.push(PowerReport {
                    position: p as u64,
                    exponent,
                    x_values: Block {
                        start: p as u64,
                        values: x.to_vec(),
                    },
                });
            }
        }
    }
    out
}
