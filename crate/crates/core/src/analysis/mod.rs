//! Counting, note-pair, repetition and run analyses of the infinity series.

pub mod counting;
pub mod pairs;
pub mod quad;
pub mod repetition;
pub mod runs;

pub use counting::{binomial, count_note_brute, count_note_formula, density, note_histogram};
pub use pairs::{
    case_label, case_table, classify_pair, interval_attainable, satisfies_conditions, witness_pair,
    Attainability, CaseGrid, CaseLabel, PairClass, PairWitness, WitnessSource,
};
pub use quad::{quad_table, QuadRecord};
pub use repetition::{
    scan_powers, scan_proximal_repetitions, scan_repetitions, scan_repetitions_parallel, GapMode,
    PowerReport, RepetitionReport,
};
pub use runs::{
    find_parity_conflict, max_run, pair_parity_check, scan_runs, ParityConflict, RunPredicate,
};
