//! The `infinity` command line.
//!
//! Exit status is 0 on success, 1 on a domain error and 2 on a usage
//! error. `pda` also reports rejection with status 1.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::Ratio;

use crate::analysis::{
    case_table, classify_pair, count_note_brute, count_note_formula, density, scan_powers,
    scan_repetitions, scan_repetitions_parallel, scan_runs, GapMode, RunPredicate,
};
use crate::error::{Error, Result};
use crate::export::{
    grid_output, BlockRow, CountRow, Format, MelodyRow, MembershipRow, NoteRow, OutputRecord,
    PositionRow, Record, RunRow,
};
use crate::pitch::{render_note, Pitch};
use crate::position::{binary_word, build_recognizer, enumerate_positions};
use crate::properties::{run_all, run_one, HarnessConfig};
use crate::sequence::RadixRecurrence;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "infinity",
    version,
    about = "Explore radix-recurrence note sequences"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Builtin sequence (s, t, u, v) or a path to a recurrence file.
    #[arg(long, global = true, default_value = "s")]
    pub seq: String,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Scan prefixes of length radix^E.
    #[arg(long, global = true, value_name = "E")]
    pub prefix_exp: Option<u32>,
    /// Suppress output; only the exit status reports the result.
    #[arg(long, global = true)]
    pub quiet: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Value at one position.
    Eval {
        #[arg(long)]
        n: u64,
    },
    /// Consecutive values.
    Block {
        #[arg(long, default_value_t = 0)]
        start: u64,
        #[arg(long)]
        len: usize,
    },
    /// Positions where a note occurs, found by the pushdown recognizer.
    Positions {
        #[arg(long, allow_hyphen_values = true)]
        note: i64,
        /// Stop after this many positions.
        #[arg(long, default_value_t = 20)]
        limit: usize,
        /// Search positions below this bound.
        #[arg(long, default_value_t = 1 << 20)]
        bound: u64,
    },
    /// Run the pushdown recognizer for a note on a binary word.
    Pda {
        #[arg(long, allow_hyphen_values = true)]
        note: i64,
        #[arg(long)]
        word: String,
    },
    /// Classify a consecutive note pair and find where it occurs.
    Pairs {
        #[arg(long, allow_hyphen_values = true)]
        i: i64,
        #[arg(long, allow_hyphen_values = true)]
        j: i64,
    },
    /// Grid of pair cases.
    Table {
        #[arg(long, default_value = "-10:11", allow_hyphen_values = true, value_parser = parse_range)]
        i_range: RangeInclusive<i64>,
        #[arg(long, default_value = "-12:11", allow_hyphen_values = true, value_parser = parse_range)]
        j_range: RangeInclusive<i64>,
    },
    /// Occurrences of a note among the first 2^exp terms.
    Count {
        #[arg(long, allow_hyphen_values = true)]
        note: i64,
        #[arg(long)]
        exp: u32,
        /// Also count by direct evaluation of the selected sequence.
        #[arg(long)]
        brute: bool,
    },
    /// Repetitions x y x in a prefix.
    Scan {
        #[arg(long, default_value_t = 32)]
        max_x: usize,
        #[arg(long, value_enum, default_value_t = ScanMode::Proximal)]
        mode: ScanMode,
        /// Use a single thread.
        #[arg(long)]
        sequential: bool,
    },
    /// Longest runs of same-signed notes in a prefix.
    Runs {
        #[arg(long, value_parser = parse_predicate)]
        predicate: Option<RunPredicate>,
    },
    /// Bounded checks of the eight structural properties.
    Properties {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=8))]
        id: Option<u8>,
    },
    /// Values as note names above a base pitch.
    Render {
        #[arg(long, default_value_t = 0)]
        start: u64,
        #[arg(long)]
        len: usize,
        #[arg(long, default_value = "G4")]
        base: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ScanMode {
    /// |y| < 2|x|
    Proximal,
    /// |y| = 2|x|
    Boundary,
    /// |y| = 0
    Square,
    /// x x x
    Cube,
}

fn parse_range(s: &str) -> std::result::Result<RangeInclusive<i64>, String> {
    let (lo, hi) = s
        .split_once(':')
        .ok_or_else(|| format!("expected LO:HI, got {s:?}"))?;
    let lo: i64 = lo.parse().map_err(|e| format!("{lo:?}: {e}"))?;
    let hi: i64 = hi.parse().map_err(|e| format!("{hi:?}: {e}"))?;
    if lo > hi {
        return Err(format!("empty range {lo}:{hi}"));
    }
    Ok(lo..=hi)
}

fn parse_predicate(s: &str) -> std::result::Result<RunPredicate, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Result of one command, ready to write.
struct Outcome {
    bytes: Vec<u8>,
    status: i32,
}

impl Outcome {
    fn ok(bytes: Vec<u8>) -> Self {
        Outcome {
            bytes,
            status: EXIT_OK,
        }
    }
}

fn records<R: Record>(format: Format, rows: Vec<R>) -> Result<Outcome> {
    OutputRecord::new(format, rows).to_bytes().map(Outcome::ok)
}

fn prefix_len(
    seq: &RadixRecurrence,
    exponent: Option<u32>,
    default_exponent: u32,
) -> Result<usize> {
    let e = exponent.unwrap_or(default_exponent);
    seq.radix()
        .checked_pow(e)
        .filter(|&len| len <= 1 << 32)
        .map(|len| len as usize)
        .ok_or_else(|| Error::Domain(format!("prefix {}^{e} is too long", seq.radix())))
}

fn execute(cli: &Cli) -> Result<Outcome> {
    let g = &cli.global;
    let format = g.format;
    let seq = RadixRecurrence::resolve(&g.seq)?;
    match &cli.command {
        Command::Eval { n } => records(
            format,
            vec![NoteRow {
                position: *n,
                value: seq.eval(*n),
            }],
        ),
        Command::Block { start, len } => {
            records(format, vec![BlockRow::from(seq.block(*start, *len))])
        }
        Command::Positions { note, limit, bound } => {
            let found = if seq == RadixRecurrence::infinity() {
                enumerate_positions(*note, *limit, *bound)
            } else {
                scan_positions(&seq, *note, *limit, *bound)
            };
            let rows = found
                .into_iter()
                .map(|position| PositionRow {
                    position,
                    binary: binary_word(position),
                })
                .collect();
            records(format, rows)
        }
        Command::Pda { note, word } => {
            let accepted = build_recognizer(*note).accepts(word)?;
            let mut outcome = records(
                format,
                vec![MembershipRow {
                    note: *note,
                    word: word.clone(),
                    accepted,
                }],
            )?;
            if !accepted {
                outcome.status = EXIT_DOMAIN;
            }
            Ok(outcome)
        }
        Command::Pairs { i, j } => records(format, vec![classify_pair(*i, *j)]),
        Command::Table { i_range, j_range } => {
            let grid = case_table(i_range.clone(), j_range.clone())?;
            match format {
                Format::Text => Ok(Outcome::ok(grid.to_text().into_bytes())),
                _ => grid_output(&grid, format).to_bytes().map(Outcome::ok),
            }
        }
        Command::Count { note, exp, brute } => {
            let formula = count_note_formula(*note, *exp)?;
            let brute = if *brute {
                if *exp >= 40 {
                    return Err(Error::Domain(format!(
                        "brute count over 2^{exp} terms is too slow"
                    )));
                }
                Some(count_note_brute(&seq, *note, *exp))
            } else {
                None
            };
            let d: Ratio<u128> = density(*note, *exp)?;
            let row = CountRow {
                note: *note,
                exponent: *exp,
                formula,
                brute,
                density: d.to_string(),
            };
            records(format, vec![row])
        }
        Command::Scan {
            max_x,
            mode,
            sequential,
        } => {
            let len = prefix_len(&seq, g.prefix_exp, 14)?;
            let gap = match mode {
                ScanMode::Proximal => GapMode::Proximal,
                ScanMode::Boundary => GapMode::Boundary,
                ScanMode::Square => GapMode::Square,
                ScanMode::Cube => return records(format, scan_powers(&seq, len, *max_x, 3)),
            };
            let found = if *sequential {
                scan_repetitions(&seq, len, *max_x, gap)
            } else {
                scan_repetitions_parallel(&seq, len, *max_x, gap)
            };
            records(format, found)
        }
        Command::Runs { predicate } => {
            let len = prefix_len(&seq, g.prefix_exp, 16)?;
            let preds = match predicate {
                Some(p) => vec![*p],
                None => RunPredicate::ALL.to_vec(),
            };
            let rows = preds
                .into_iter()
                .map(|predicate| RunRow {
                    predicate,
                    prefix_len: len,
                    max_run: scan_runs(&seq, len, predicate),
                })
                .collect();
            records(format, rows)
        }
        Command::Properties { id } => {
            let config = match g.prefix_exp {
                Some(e) => HarnessConfig::with_exponent(&seq, e),
                None => HarnessConfig::for_sequence(&seq),
            };
            match id {
                Some(id) => records(format, vec![run_one(&seq, &config, *id)]),
                None => {
                    let report = run_all(&seq, &config);
                    match format {
                        Format::Text => Ok(Outcome::ok(report.to_text().into_bytes())),
                        Format::Json => Ok(Outcome::ok(report.to_json()?.into_bytes())),
                        Format::Csv => records(format, report.properties),
                    }
                }
            }
        }
        Command::Render { start, len, base } => {
            let base_pitch: Pitch = base.parse()?;
            let block = seq.block(*start, *len);
            let row = MelodyRow {
                start: *start,
                base: base_pitch.to_string(),
                notes: block
                    .values
                    .iter()
                    .map(|&v| render_note(base_pitch, v))
                    .collect(),
            };
            records(format, vec![row])
        }
    }
}

fn scan_positions(seq: &RadixRecurrence, note: i64, limit: usize, bound: u64) -> Vec<u64> {
    let mut found = Vec::new();
    let mut start = 0;
    while start < bound && found.len() < limit {
        let len = (bound - start).min(1 << 16) as usize;
        let block = seq.block(start, len);
        found.extend(
            block
                .positions()
                .filter(|&(_, v)| v == note)
                .map(|(n, _)| n)
                .take(limit - found.len()),
        );
        start += len as u64;
    }
    found
}

fn write_output(global: &GlobalArgs, mut bytes: Vec<u8>) -> Result<()> {
    if global.quiet {
        return Ok(());
    }
    if bytes.last().is_some_and(|&b| b != b'\n') {
        bytes.push(b'\n');
    }
    match &global.out {
        Some(path) => File::create(path)?.write_all(&bytes)?,
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(&bytes)?;
            stdout.flush()?;
        }
    }
    Ok(())
}

/// Parses `argv` (program name first), runs the command and returns the
/// exit status. Diagnostics go to standard error.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let result = execute(&cli).and_then(|outcome| {
        write_output(&cli.global, outcome.bytes)?;
        Ok(outcome.status)
    });
    match result {
        Ok(status) => status,
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_usage() {
                EXIT_USAGE
            } else {
                EXIT_DOMAIN
            }
        }
    }
}
