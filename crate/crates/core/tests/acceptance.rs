//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Every comparison is exact unless a tolerance below
//! says otherwise.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::Instant;

use infinity_series::analysis::{
    classify_pair, count_note_brute, count_note_formula, density, pair_parity_check, quad_table,
    scan_proximal_repetitions, scan_repetitions, scan_repetitions_parallel, scan_runs,
    Attainability, GapMode, RunPredicate,
};
use infinity_series::position::{build_recognizer, enumerate_positions, pumping_witness};
use infinity_series::properties::{run_all, Evidence, HarnessConfig, Verdict};
use infinity_series::{eval_closed_form, RadixRecurrence};
use num_rational::Ratio;

/// Values 0..20 of the opening table.
const OPENING: [i64; 20] = [
    0, 1, -1, 2, 1, 0, -2, 3, -1, 2, 0, 1, 2, -1, -3, 4, 1, 0, -2, 3,
];
/// Positions of note 0 below 120.
const ZERO_POSITIONS: [u64; 19] = [
    0, 5, 10, 17, 20, 27, 34, 40, 45, 54, 65, 68, 75, 80, 85, 90, 99, 105, 108,
];

const CLOSED_FORM_EXPONENT: u32 = 20;
const RECOGNIZER_EXPONENT: u32 = 16;
const RECOGNIZER_NOTE_BOUND: i64 = 16;
const PUMPING_NOTE_BOUND: i64 = 8;
const PUMPING_CONSTANT_BOUND: usize = 12;
const COUNTING_EXPONENT: u32 = 20;
const DENSITY_EXPONENT: u32 = 20;
/// Upper bound on the density of note 0 below 2^20, strict.
const DENSITY_CEILING: f64 = 0.1;
const PAIR_SCAN_EXPONENT: u32 = 20;
const PAIR_BOUND: i64 = 12;
const REPETITION_PREFIX: usize = 1 << 14;
const REPETITION_MAX_X: usize = 32;
const RUN_EXPONENT: u32 = 20;
const PARITY_EXPONENT: u32 = 16;
const QUAD_EXPONENT: u32 = 16;
const RECURRENCE_MAX_N: u32 = 8;
const RECURRENCE_MAX_T: u32 = 5;
const DETERMINISM_REPEATS: usize = 3;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn prefix_fidelity() -> Outcome {
    let got = RadixRecurrence::infinity().block(0, 20).values;
    ensure(got == OPENING, || format!("got {got:?}"))?;
    Ok("20 values exact".into())
}

fn closed_form() -> Outcome {
    let s = RadixRecurrence::infinity();
    let mismatches = (0..1u64 << CLOSED_FORM_EXPONENT)
        .filter(|&n| eval_closed_form(n) != s.eval_uncached(n))
        .count();
    ensure(mismatches == 0, || format!("{mismatches} mismatches"))?;
    Ok(format!("0 mismatches below 2^{CLOSED_FORM_EXPONENT}"))
}

fn position_list() -> Outcome {
    let got = enumerate_positions(0, 19, 120);
    ensure(got == ZERO_POSITIONS, || format!("got {got:?}"))?;
    Ok("19 positions exact".into())
}

fn recognizer_equivalence() -> Outcome {
    let s = RadixRecurrence::infinity();
    let values = s.prefix(1 << RECOGNIZER_EXPONENT);
    let mut mismatches = 0usize;
    for a in -RECOGNIZER_NOTE_BOUND..=RECOGNIZER_NOTE_BOUND {
        let m = build_recognizer(a);
        for (n, &v) in values.iter().enumerate() {
            if m.accepts_number(n as u64) != (v == a) {
                mismatches += 1;
            }
        }
    }
    ensure(mismatches == 0, || format!("{mismatches} mismatches"))?;
    Ok(format!(
        "0 mismatches, n < 2^{RECOGNIZER_EXPONENT}, |a| <= {RECOGNIZER_NOTE_BOUND}"
    ))
}

fn pumping() -> Outcome {
    let mut witnesses = 0;
    let mut splits = 0;
    for a in -PUMPING_NOTE_BOUND..=PUMPING_NOTE_BOUND {
        for p in 1..=PUMPING_CONSTANT_BOUND {
            let w = pumping_witness(a, p).map_err(|e| format!("a = {a}, p = {p}: {e}"))?;
            ensure(w.verify(), || {
                format!("a = {a}, p = {p}: witness does not verify")
            })?;
            witnesses += 1;
            splits += w.refutations.len();
        }
    }
    Ok(format!("{witnesses} witnesses, {splits} splits refuted"))
}

fn counting() -> Outcome {
    let s = RadixRecurrence::infinity();
    let mut checked = 0;
    for n in 1..=COUNTING_EXPONENT {
        let bound = n as i64 + 1;
        for a in -bound..=bound {
            let formula = count_note_formula(a, n).map_err(|e| e.to_string())?;
            let brute = count_note_brute(&s, a, n) as u128;
            ensure(formula == brute, || {
                format!("a = {a}, N = {n}: {formula} vs {brute}")
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} (a, N) cells exact"))
}

/// C(n, k) by the multiplicative formula, independent of the library.
fn choose(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn density_decay() -> Outcome {
    let ds: Vec<_> = (2..=DENSITY_EXPONENT)
        .map(|n| density(0, n).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    for (k, w) in ds.windows(2).enumerate() {
        ensure(w[1] <= w[0], || format!("density rises at N = {}", k + 3))?;
    }
    let last = ds.last().unwrap();
    let expected = choose(19, 10);
    ensure(expected == 92378, || {
        format!("oracle C(19,10) = {expected}")
    })?;
    ensure(*last == Ratio::new(expected, 1 << DENSITY_EXPONENT), || {
        format!("density(0, 20) = {last}")
    })?;
    let value = *last.numer() as f64 / *last.denom() as f64;
    ensure(value < DENSITY_CEILING, || {
        format!("{value} >= {DENSITY_CEILING}")
    })?;
    Ok(format!(
        "non-increasing; density(0, 20) = 92378/2^20 = {value:.4}"
    ))
}

fn table_reproduction() -> Outcome {
    let golden = include_str!("golden/table1.txt");
    let grid =
        infinity_series::analysis::case_table(-10..=11, -12..=11).map_err(|e| e.to_string())?;
    let text = grid.to_text();
    let differing = text
        .lines()
        .zip(golden.lines())
        .filter(|(a, b)| a != b)
        .count();
    ensure(text == golden, || format!("{differing} rows differ"))?;
    Ok("22 x 24 cells match the golden file".into())
}

fn pair_soundness() -> Outcome {
    let s = RadixRecurrence::infinity();
    let values = s.prefix(1 << PAIR_SCAN_EXPONENT);
    let observed: BTreeSet<(i64, i64)> = values.windows(2).map(|w| (w[0], w[1])).collect();
    for &(i, j) in &observed {
        ensure(
            classify_pair(i, j).verdict == Attainability::Attainable,
            || format!("observed ({i}, {j}) classified unattainable"),
        )?;
    }
    let mut witnessed = 0;
    for i in -PAIR_BOUND..=PAIR_BOUND {
        for j in -PAIR_BOUND..=PAIR_BOUND {
            let c = classify_pair(i, j);
            if c.verdict != Attainability::Attainable {
                continue;
            }
            let w = c
                .witness
                .ok_or_else(|| format!("({i}, {j}) has no witness"))?;
            let n = w
                .position
                .ok_or_else(|| format!("({i}, {j}) witness exceeds 64 bits"))?;
            ensure(
                s.eval_uncached(n) == i && s.eval_uncached(n + 1) == j,
                || format!("witness {n} for ({i}, {j}) fails"),
            )?;
            witnessed += 1;
        }
    }
    Ok(format!(
        "{} observed pairs attainable; {witnessed} witnesses verified",
        observed.len()
    ))
}

fn repetition_theorem() -> Outcome {
    let s = RadixRecurrence::infinity();
    let close = scan_proximal_repetitions(&s, REPETITION_PREFIX, REPETITION_MAX_X);
    ensure(close.is_empty(), || {
        format!("{} proximal repetitions", close.len())
    })?;
    let boundary = scan_repetitions(&s, 16, 1, GapMode::Boundary);
    let first = boundary.first().ok_or("no boundary repetition")?;
    let y = s.block(first.position + 1, first.y_len).values;
    ensure(
        first.position == 1 && first.x_values.values == [1] && y == [-1, 2],
        || format!("first boundary case {first:?}"),
    )?;
    Ok("none with |y| < 2|x|; x = (1), y = (-1, 2) at 1".into())
}

fn run_bounds() -> Outcome {
    let s = RadixRecurrence::infinity();
    let len = 1usize << RUN_EXPONENT;
    let nonneg = scan_runs(&s, len, RunPredicate::NonNegative);
    let pos = scan_runs(&s, len, RunPredicate::Positive);
    ensure(nonneg == 4 && pos == 2, || {
        format!("non-negative {nonneg}, positive {pos}")
    })?;
    Ok("non-negative 4, positive 2".into())
}

fn parity() -> Outcome {
    let s = RadixRecurrence::infinity();
    ensure(pair_parity_check(&s, 1 << PARITY_EXPONENT), || {
        "parity conflict".into()
    })?;
    Ok(format!(
        "no pair at both parities below 2^{PARITY_EXPONENT}"
    ))
}

fn quad_relations() -> Outcome {
    for n in 0..1u64 << QUAD_EXPONENT {
        let q = quad_table(n).map_err(|e| format!("n = {n}: {e}"))?;
        for (name, lhs, rhs) in q.relations() {
            ensure(lhs == rhs, || format!("n = {n}: {name} {lhs} != {rhs}"))?;
        }
    }
    Ok(format!("all n < 2^{QUAD_EXPONENT}"))
}

fn recurrence_witnesses() -> Outcome {
    let s = RadixRecurrence::infinity();
    let mut count = 0;
    for n in 0..=RECURRENCE_MAX_N {
        let head = s.prefix(1 << n);
        for t in 0..=RECURRENCE_MAX_T {
            let at = 5u64 << (n + t);
            ensure(s.block(at, head.len()).values == head, || {
                format!("N = {n}, t = {t}")
            })?;
            count += 1;
        }
    }
    Ok(format!("{count} occurrences verbatim"))
}

fn verdict_matrix() -> Outcome {
    let mut summary = Vec::new();
    for name in RadixRecurrence::BUILTIN_NAMES {
        let seq = RadixRecurrence::builtin(name).unwrap();
        let report = run_all(&seq, &HarnessConfig::for_sequence(&seq));
        let failing: Vec<u8> = report
            .properties
            .iter()
            .filter(|e| e.verdict != Verdict::Pass)
            .map(|e| e.id)
            .collect();
        let expected: &[u8] = match name {
            "u" => &[8],
            "v" => &[3],
            _ => &[],
        };
        ensure(failing == expected, || {
            format!("{name}: non-passing {failing:?}")
        })?;
        for &id in expected {
            let entry = report.entry(id).unwrap();
            ensure(entry.verdict == Verdict::Fail, || {
                format!("{name}: {id} is {}", entry.verdict)
            })?;
            ensure(entry.reverify(&seq), || {
                format!("{name}: {id} does not reverify")
            })?;
        }
        match name {
            "u" => {
                let Evidence::Squares { cubes, .. } = &report.entry(8).unwrap().evidence else {
                    return Err("u: wrong evidence".into());
                };
                ensure(
                    cubes
                        .iter()
                        .any(|c| c.position == 32 && c.x_values.values == [-1]),
                    || "u: no cube at 32".into(),
                )?;
            }
            "v" => {
                let entry = report.entry(3).unwrap();
                let Evidence::Intervals { all_odd, .. } = &entry.evidence else {
                    return Err("v: wrong evidence".into());
                };
                ensure(*all_odd, || "v: an even interval occurs".into())?;
                ensure(entry.bounds["prefix_len"] == 3u64.pow(10), || {
                    "v: prefix is not 3^10".into()
                })?;
            }
            _ => {}
        }
        summary.push(format!("{name} {}/8", 8 - failing.len()));
    }
    Ok(summary.join(", "))
}

fn determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_infinity");
    let commands: &[&[&str]] = &[
        &["table"],
        &["block", "--len", "64", "--format", "csv"],
        &["properties", "--seq", "v", "--format", "json"],
        &[
            "scan",
            "--seq",
            "u",
            "--prefix-exp",
            "5",
            "--mode",
            "square",
            "--format",
            "json",
        ],
        &["render", "--len", "32"],
    ];
    for args in commands {
        let runs: Vec<Vec<u8>> = (0..DETERMINISM_REPEATS)
            .map(|_| Command::new(bin).args(*args).output().map(|o| o.stdout))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        ensure(!runs[0].is_empty(), || format!("{args:?}: empty output"))?;
        ensure(runs.windows(2).all(|w| w[0] == w[1]), || {
            format!("{args:?} differs")
        })?;
    }
    let mut scans = 0;
    for name in RadixRecurrence::BUILTIN_NAMES {
        let seq = RadixRecurrence::builtin(name).unwrap();
        for mode in [GapMode::Proximal, GapMode::Boundary, GapMode::Square] {
            let a = scan_repetitions(&seq, 1 << 12, 16, mode);
            let b = scan_repetitions_parallel(&seq, 1 << 12, 16, mode);
            ensure(a == b, || format!("{name} {mode:?}: parallel scan differs"))?;
            scans += 1;
        }
    }
    Ok(format!(
        "{} commands x {DETERMINISM_REPEATS} runs identical; {scans} scans agree",
        commands.len()
    ))
}

fn main() {
    let criteria: [Criterion; 16] = [
        ("prefix fidelity", prefix_fidelity),
        ("closed form = recursion", closed_form),
        ("position list", position_list),
        ("recognizer equivalence", recognizer_equivalence),
        ("pumping witnesses", pumping),
        ("counting formula", counting),
        ("density", density_decay),
        ("case table", table_reproduction),
        ("pair soundness", pair_soundness),
        ("repetition bound", repetition_theorem),
        ("run bounds", run_bounds),
        ("pair parity", parity),
        ("quad relations", quad_relations),
        ("recurrence witnesses", recurrence_witnesses),
        ("verdict matrix", verdict_matrix),
        ("determinism", determinism),
    ];
    let mut failures = 0;
    for (idx, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({ms} ms)", idx + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL {:>2} {name}: {why} ({ms} ms)", idx + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
