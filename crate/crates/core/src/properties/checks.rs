use std::collections::{BTreeMap, BTreeSet};

use num_rational::Ratio;

use super::{
    AnalyticRecurrence, BlockShortfall, Evidence, GrowthLevel, IntervalStarts, PropertyEntry,
    RunLevel, SelfSimilarityMap, SurjectivityWitness, Verdict,
};
use crate::analysis::{
    interval_attainable, max_run, scan_powers, scan_repetitions_parallel, GapMode, RunPredicate,
};
use crate::sequence::RadixRecurrence;

/// Evidence lists are truncated to this many items.
const EVIDENCE_CAP: usize = 16;

/// Number of `t` values checked for each analytic recurrence witness.
const ANALYTIC_SHIFTS: u32 = 5;

fn entry(
    id: u8,
    verdict: Verdict,
    evidence: Evidence,
    bounds: &[(&'static str, u64)],
) -> PropertyEntry {
    PropertyEntry {
        id,
        verdict,
        evidence,
        bounds: bounds.iter().copied().collect(),
    }
}

fn is_infinity_series(seq: &RadixRecurrence) -> bool {
    *seq == RadixRecurrence::infinity()
}

/// Closed-form positions of `a` in the infinity series:
/// `(2^a - 1)_2 = 1^a` and `(2^{1-a} - 2)_2 = 1^{-a} 0`.
fn analytic_surjectivity_witness(a: i64) -> Option<u64> {
    match a {
        0 => Some(0),
        a if a > 0 && a < 64 => Some((1u64 << a) - 1),
        a if a < 0 && a > -63 => Some((1u64 << (1 - a)) - 2),
        _ => None,
    }
}

/// Property 1. Every `|a| ≤ range_bound` must occur at some
/// `n < search_bound`; a missing value is inconclusive, never a failure.
pub fn check_surjectivity(
    seq: &RadixRecurrence,
    range_bound: i64,
    search_bound: u64,
) -> PropertyEntry {
    let mut witnesses = Vec::new();
    let mut pending: BTreeSet<i64> = (-range_bound..=range_bound).collect();

    if is_infinity_series(seq) {
        pending.retain(|&a| match analytic_surjectivity_witness(a) {
            Some(n) if seq.eval_uncached(n) == a => {
                witnesses.push(SurjectivityWitness {
                    value: a,
                    position: n,
                    analytic: true,
                });
                false
            }
            _ => true,
        });
    }

    if !pending.is_empty() {
        let mut start = 0;
        while start < search_bound && !pending.is_empty() {
            let len = (search_bound - start).min(1 << 16) as usize;
            let block = seq.block(start, len);
            for (n, v) in block.positions() {
                if pending.remove(&v) {
                    witnesses.push(SurjectivityWitness {
                        value: v,
                        position: n,
                        analytic: false,
                    });
                }
            }
            start += len as u64;
        }
    }
    witnesses.sort_by_key(|w| w.value);

    let verdict = if pending.is_empty() {
        Verdict::Pass
    } else {
        Verdict::Inconclusive
    };
    entry(
        1,
        verdict,
        Evidence::Surjectivity {
            witnesses,
            missing: pending.into_iter().collect(),
        },
        &[
            ("range_bound", range_bound as u64),
            ("search_bound", search_bound),
        ],
    )
}

/// Property 2. For every level `i ≤ depth` and offset `j < k^i`, fits
/// `seq(k^i·n + j) = ±seq(n) + a` from two sample points and checks it on
/// `n < prefix_len`.
pub fn check_self_similarity(
    seq: &RadixRecurrence,
    k: u64,
    depth: u32,
    prefix_len: usize,
) -> PropertyEntry {
    let bounds = [
        ("k", k),
        ("depth", depth as u64),
        ("prefix_len", prefix_len as u64),
    ];
    let base = seq.prefix(prefix_len);
    let mut maps = Vec::new();
    let mut constant = Vec::new();

    let Some(pivot) = base.iter().position(|&v| v != base[0]) else {
        let evidence = Evidence::SelfSimilarity {
            maps,
            counterexample: None,
            constant: vec![(0, 0)],
        };
        return entry(2, Verdict::Inconclusive, evidence, &bounds);
    };

    for level in 1..=depth {
        let Some(stride) = k.checked_pow(level) else {
            break;
        };
        for offset in 0..stride {
            let sub = |n: usize| seq.eval_uncached(stride * n as u64 + offset);
            let (d_base, d_sub) = (base[pivot] - base[0], sub(pivot) - sub(0));
            let sign = if d_sub == d_base {
                1
            } else if d_sub == -d_base {
                -1
            } else {
                let evidence = Evidence::SelfSimilarity {
                    maps,
                    counterexample: Some((level, offset, pivot as u64)),
                    constant,
                };
                return entry(2, Verdict::Fail, evidence, &bounds);
            };
            let shift = sub(0) - sign * base[0];
            if let Some(n) = (0..prefix_len).find(|&n| sub(n) != sign * base[n] + shift) {
                let evidence = Evidence::SelfSimilarity {
                    maps,
                    counterexample: Some((level, offset, n as u64)),
                    constant,
                };
                return entry(2, Verdict::Fail, evidence, &bounds);
            }
            if (1..prefix_len).all(|n| sub(n) == sub(0)) {
                constant.push((level, offset));
            }
            maps.push(SelfSimilarityMap {
                k,
                level,
                offset,
                sign,
                shift,
            });
        }
    }

    let verdict = if constant.is_empty() {
        Verdict::Pass
    } else {
        Verdict::Inconclusive
    };
    entry(
        2,
        verdict,
        Evidence::SelfSimilarity {
            maps,
            counterexample: None,
            constant,
        },
        &bounds,
    )
}

/// Intervals `seq(n+1) - seq(n)` over a prefix and the notes they start on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalCensus {
    pub prefix_len: usize,
    pub starts: BTreeMap<i64, BTreeSet<i64>>,
}

impl IntervalCensus {
    pub fn intervals(&self) -> impl Iterator<Item = i64> + '_ {
        self.starts.keys().copied()
    }

    pub fn contains_magnitude(&self, m: u64) -> bool {
        let m = m as i64;
        self.starts.contains_key(&m) || self.starts.contains_key(&-m)
    }
}

pub fn interval_census(seq: &RadixRecurrence, prefix_len: usize) -> IntervalCensus {
    let values = seq.prefix(prefix_len);
    let mut starts: BTreeMap<i64, BTreeSet<i64>> = BTreeMap::new();
    for w in values.windows(2) {
        starts.entry(w[1] - w[0]).or_default().insert(w[0]);
    }
    IntervalCensus { prefix_len, starts }
}

/// Property 3: every magnitude `1..=bound` occurs as an interval, in at
/// least one direction. For the infinity series the census is also checked
/// against the exact list of attainable intervals.
pub fn check_every_interval(
    census: &IntervalCensus,
    seq: &RadixRecurrence,
    bound: u64,
) -> PropertyEntry {
    let missing: Vec<u64> = (1..=bound)
        .filter(|&m| !census.contains_magnitude(m))
        .collect();
    let all_odd = census.intervals().all(|k| k % 2 != 0);
    let mut mismatches = Vec::new();
    if is_infinity_series(seq) {
        mismatches.extend(census.intervals().filter(|&k| !interval_attainable(k)));
        let b = bound as i64;
        mismatches.extend(
            (-b..=b).filter(|&k| interval_attainable(k) && !census.starts.contains_key(&k)),
        );
        mismatches.sort_unstable();
        mismatches.dedup();
    }
    let verdict = if missing.is_empty() && mismatches.is_empty() {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    let observed = census
        .starts
        .iter()
        .filter(|(k, _)| k.unsigned_abs() <= bound)
        .map(|(&interval, s)| IntervalStarts {
            interval,
            starts: s.len(),
        })
        .collect();
    entry(
        3,
        verdict,
        Evidence::Intervals {
            observed,
            missing_magnitudes: missing,
            all_odd,
            characterization_mismatches: mismatches,
        },
        &[
            ("prefix_len", census.prefix_len as u64),
            ("interval_bound", bound),
        ],
    )
}

/// Property 4: each interval with `|k| ≤ bound` that occurs starts from at
/// least `multiplicity` distinct notes. Too few starts is inconclusive: more
/// may appear further out.
pub fn check_interval_starts(
    census: &IntervalCensus,
    bound: u64,
    multiplicity: usize,
) -> PropertyEntry {
    let considered: Vec<_> = census
        .starts
        .iter()
        .filter(|(k, _)| k.unsigned_abs() <= bound)
        .collect();
    let min_starts = considered.iter().map(|(_, s)| s.len()).min().unwrap_or(0);
    let sparse: Vec<IntervalStarts> = considered
        .iter()
        .filter(|(_, s)| s.len() < multiplicity)
        .map(|(&interval, s)| IntervalStarts {
            interval,
            starts: s.len(),
        })
        .collect();
    let verdict = if sparse.is_empty() && !considered.is_empty() {
        Verdict::Pass
    } else {
        Verdict::Inconclusive
    };
    entry(
        4,
        verdict,
        Evidence::IntervalStarts { sparse, min_starts },
        &[
            ("prefix_len", census.prefix_len as u64),
            ("interval_bound", bound),
            ("multiplicity", multiplicity as u64),
        ],
    )
}

/// Properties 3 and 4 from one census.
pub fn check_intervals(
    seq: &RadixRecurrence,
    prefix_len: usize,
    bound: u64,
    multiplicity: usize,
) -> (PropertyEntry, PropertyEntry) {
    let census = interval_census(seq, prefix_len);
    (
        check_every_interval(&census, seq, bound),
        check_interval_starts(&census, bound, multiplicity),
    )
}

/// Property 5. Longest runs per predicate over the prefix and its first
/// half and quarter; passes when none grew over the last two doublings.
pub fn check_bounded_runs(seq: &RadixRecurrence, prefix_len: usize) -> PropertyEntry {
    let values = seq.prefix(prefix_len);
    let levels: Vec<RunLevel> = [prefix_len / 4, prefix_len / 2, prefix_len]
        .into_iter()
        .map(|len| RunLevel {
            prefix_len: len,
            maxima: RunPredicate::ALL
                .into_iter()
                .map(|p| (p, max_run(&values[..len], p)))
                .collect(),
        })
        .collect();
    let stable = levels.windows(2).all(|w| w[0].maxima == w[1].maxima);
    let verdict = if stable && prefix_len >= 4 {
        Verdict::Pass
    } else {
        Verdict::Inconclusive
    };
    entry(
        5,
        verdict,
        Evidence::Runs { levels },
        &[("prefix_len", prefix_len as u64)],
    )
}

/// Property 6. Every block inside `seq[0..block_len)` must occur at least
/// `occurrences` times below `bound`. For the infinity series the closed
/// form also predicts `seq[0..2^N)` at `5·2^{N+t}`; those are checked for
/// `N ≤ analytic_max_exponent`, `t ≤ 5`.
pub fn check_recurrence(
    seq: &RadixRecurrence,
    block_len: usize,
    occurrences: usize,
    bound: u64,
    analytic_max_exponent: u32,
) -> PropertyEntry {
    let values = seq.prefix(bound as usize);
    let head = &values[..block_len.min(values.len())];
    let mut blocks: BTreeSet<&[i64]> = BTreeSet::new();
    for len in 1..=head.len() {
        for start in 0..=head.len() - len {
            blocks.insert(&head[start..start + len]);
        }
    }

    let mut shortfalls = Vec::new();
    for block in &blocks {
        let found: Vec<u64> = values
            .windows(block.len())
            .enumerate()
            .filter(|(_, w)| w == block)
            .map(|(n, _)| n as u64)
            .take(occurrences)
            .collect();
        if found.len() < occurrences {
            shortfalls.push(BlockShortfall {
                values: block.to_vec(),
                occurrences: found,
            });
        }
    }

    let mut analytic = Vec::new();
    if is_infinity_series(seq) {
        for exponent in 0..=analytic_max_exponent {
            let head = seq.prefix(1 << exponent);
            for t in 0..=ANALYTIC_SHIFTS {
                let position = 5u64 << (exponent + t);
                let holds = seq.block(position, head.len()).values == head;
                analytic.push(AnalyticRecurrence {
                    exponent,
                    t,
                    position,
                    holds,
                });
            }
        }
    }

    let verdict = if analytic.iter().any(|a| !a.holds) {
        Verdict::Fail
    } else if shortfalls.is_empty() {
        Verdict::Pass
    } else {
        Verdict::Inconclusive
    };
    entry(
        6,
        verdict,
        Evidence::Recurrence {
            blocks_checked: blocks.len(),
            shortfalls,
            analytic,
        },
        &[
            ("block_len", block_len as u64),
            ("occurrences", occurrences as u64),
            ("bound", bound),
            ("analytic_max_exponent", analytic_max_exponent as u64),
        ],
    )
}

/// Property 7. `M(N) = max |seq(n)|` over `n < k^N`. A constant `C` is
/// fitted on the lower half of the levels; passes when `M(N) ≤ C·N` on all
/// levels and the last two levels each set a new record.
pub fn check_growth(seq: &RadixRecurrence, prefix_len: usize) -> PropertyEntry {
    let k = seq.radix();
    let values = seq.prefix(prefix_len);
    let mut profile = Vec::new();
    let mut running_max = 0u64;
    let mut argmax = 0u64;
    let mut scanned = 0usize;
    let mut exponent = 1u32;
    while let Some(level_len) = k
        .checked_pow(exponent)
        .filter(|&l| l as usize <= prefix_len)
    {
        for (n, v) in values
            .iter()
            .enumerate()
            .take(level_len as usize)
            .skip(scanned)
        {
            if v.unsigned_abs() > running_max {
                running_max = v.unsigned_abs();
                argmax = n as u64;
            }
        }
        scanned = level_len as usize;
        profile.push(GrowthLevel {
            exponent,
            max_abs: running_max,
            argmax,
        });
        exponent += 1;
    }

    let fit_levels = profile.len().div_ceil(2);
    let constant = profile[..fit_levels]
        .iter()
        .map(|l| Ratio::new(l.max_abs, l.exponent as u64))
        .max()
        .unwrap_or_else(|| Ratio::from_integer(0));
    let linear = profile.iter().all(|l| {
        Ratio::from_integer(l.max_abs) <= constant * Ratio::from_integer(l.exponent as u64)
    });
    let records = profile.len() >= 3
        && profile[profile.len() - 3..]
            .windows(2)
            .all(|w| w[1].max_abs > w[0].max_abs);
    let verdict = if linear && records {
        Verdict::Pass
    } else {
        Verdict::Inconclusive
    };
    entry(
        7,
        verdict,
        Evidence::Growth {
            profile,
            fitted_constant: constant.to_string(),
        },
        &[("prefix_len", prefix_len as u64)],
    )
}

/// Property 8. Fails on the first squares `x x` with `|x| ≤ max_len`;
/// cubes found in the same range are reported alongside.
pub fn check_squarefree(seq: &RadixRecurrence, prefix_len: usize, max_len: usize) -> PropertyEntry {
    let mut squares = scan_repetitions_parallel(seq, prefix_len, max_len, GapMode::Square);
    let verdict = if squares.is_empty() {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    squares.truncate(EVIDENCE_CAP);
    let mut cubes = if squares.is_empty() {
        Vec::new()
    } else {
        scan_powers(seq, prefix_len, max_len, 3)
    };
    cubes.truncate(EVIDENCE_CAP);
    entry(
        8,
        verdict,
        Evidence::Squares { squares, cubes },
        &[
            ("prefix_len", prefix_len as u64),
            ("max_len", max_len as u64),
        ],
    )
}

pub(super) fn reverify_failure(e: &PropertyEntry, seq: &RadixRecurrence) -> bool {
    match &e.evidence {
        Evidence::SelfSimilarity {
            counterexample: Some((level, offset, n)),
            ..
        } => {
            // Two sample points pin down (sign, shift); if the fitted map
            // cannot explain `n`, neither candidate sign can fit both.
            let stride = e.bounds["k"].pow(*level);
            let sub = |m: u64| seq.eval_uncached(stride * m + offset);
            let base = |m: u64| seq.eval_uncached(m);
            [1i64, -1].into_iter().all(|sign| {
                let shift = sub(0) - sign * base(0);
                sub(*n) != sign * base(*n) + shift
                    || (0..=*n).any(|m| sub(m) != sign * base(m) + shift)
            })
        }
        Evidence::Intervals {
            missing_magnitudes,
            characterization_mismatches,
            ..
        } => {
            let len = e.bounds["prefix_len"];
            let seen: BTreeSet<i64> = (0..len.saturating_sub(1))
                .map(|n| seq.eval_uncached(n + 1) - seq.eval_uncached(n))
                .collect();
            let absent = missing_magnitudes
                .iter()
                .all(|&m| !seen.contains(&(m as i64)) && !seen.contains(&-(m as i64)));
            let mismatched = characterization_mismatches
                .iter()
                .all(|&k| seen.contains(&k) != interval_attainable(k));
            !(missing_magnitudes.is_empty() && characterization_mismatches.is_empty())
                && absent
                && mismatched
        }
        Evidence::Recurrence { analytic, .. } => analytic.iter().filter(|a| !a.holds).all(|a| {
            let head = seq.block(0, 1 << a.exponent);
            seq.block(a.position, head.len()).values != head.values
        }),
        Evidence::Squares { squares, cubes } => {
            !squares.is_empty()
                && squares.iter().all(|r| r.y_len == 0 && r.verify(seq))
                && cubes.iter().all(|c| {
                    let x = c.x_values.len() as u64;
                    (0..c.exponent as u64).all(|e| {
                        seq.block(c.position + e * x, x as usize).values == c.x_values.values
                    })
                })
        }
        _ => false,
    }
}

/// One-line digest of the evidence for text reports.
pub(super) fn summarize(evidence: &Evidence) -> Option<String> {
    Some(match evidence {
        Evidence::Surjectivity { witnesses, missing } => {
            let shown: Vec<String> = witnesses
                .iter()
                .map(|w| format!("{}@{}", w.value, w.position))
                .collect();
            let mut line = format!("witnesses {}", shown.join(" "));
            if !missing.is_empty() {
                line.push_str(&format!("; missing {missing:?}"));
            }
            line
        }
        Evidence::SelfSimilarity {
            maps,
            counterexample,
            ..
        } => match counterexample {
            Some((level, offset, n)) => {
                format!("no ±seq(n)+a form for level {level}, offset {offset}, at n = {n}")
            }
            None => format!("{} maps verified", maps.len()),
        },
        Evidence::Intervals {
            missing_magnitudes,
            all_odd,
            characterization_mismatches,
            ..
        } => {
            let mut line = format!("missing magnitudes {missing_magnitudes:?}");
            if *all_odd {
                line.push_str("; every observed interval is odd");
            }
            if !characterization_mismatches.is_empty() {
                line.push_str(&format!(
                    "; census disagrees at {characterization_mismatches:?}"
                ));
            }
            line
        }
        Evidence::IntervalStarts { sparse, min_starts } => {
            format!(
                "fewest starting notes {min_starts}; sparse intervals {}",
                sparse.len()
            )
        }
        Evidence::Runs { levels } => {
            let last = levels.last()?;
            let parts: Vec<String> = last
                .maxima
                .iter()
                .map(|(p, m)| format!("{p} {m}"))
                .collect();
            format!("max runs: {}", parts.join(", "))
        }
        Evidence::Recurrence {
            blocks_checked,
            shortfalls,
            analytic,
        } => format!(
            "{blocks_checked} blocks, {} short; {} analytic occurrences checked",
            shortfalls.len(),
            analytic.len()
        ),
        Evidence::Growth {
            profile,
            fitted_constant,
        } => {
            let maxima: Vec<String> = profile.iter().map(|l| l.max_abs.to_string()).collect();
            format!("M(N) = {}; C = {fitted_constant}", maxima.join(" "))
        }
        Evidence::Squares { squares, cubes } => {
            let first = squares.first()?;
            let mut line = format!("square {:?} at {}", first.x_values.values, first.position);
            if let Some(c) = cubes.first() {
                line.push_str(&format!("; cube {:?} at {}", c.x_values.values, c.position));
            }
            line
        }
    })
}
