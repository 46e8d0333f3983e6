//! Text, CSV and JSON serialization of command results.
//!
//! Every result is a list of records. Text puts one record per line, CSV
//! one row per record (never quoting integers), JSON a single array with
//! keys in declaration order.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::analysis::{
    CaseGrid, CaseLabel, PairClass, PowerReport, RepetitionReport, RunPredicate,
};
use crate::error::{Error, Result};
use crate::properties::PropertyEntry;
use crate::sequence::Block;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Csv,
    Json,
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Format::Text => "text",
            Format::Csv => "csv",
            Format::Json => "json",
        })
    }
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(Error::Config {
                line: 0,
                message: format!("unknown format {s:?}"),
            }),
        }
    }
}

/// A row of command output.
pub trait Record: Serialize {
    fn text(&self) -> String;
    fn csv_fields(&self) -> Vec<String>;
}

/// A command's records with an optional CSV header row.
#[derive(Debug, Clone, PartialEq)]
pub struct OutputRecord<R> {
    pub format: Format,
    pub header: Option<Vec<String>>,
    pub payload: Vec<R>,
}

impl<R: Record> OutputRecord<R> {
    pub fn new(format: Format, payload: Vec<R>) -> Self {
        OutputRecord {
            format,
            header: None,
            payload,
        }
    }

    pub fn with_header(mut self, header: Vec<String>) -> Self {
        self.header = Some(header);
        self
    }

    pub fn to_bytes(&self) -> Result<Vec<u8>> {
        render(self.format, self.header.as_deref(), &self.payload)
    }
}

/// Serializes `records` without a header.
pub fn export<R: Record>(records: &[R], format: Format) -> Result<Vec<u8>> {
    render(format, None, records)
}

fn render<R: Record>(format: Format, header: Option<&[String]>, records: &[R]) -> Result<Vec<u8>> {
    let mut out = Vec::new();
    match format {
        Format::Text => {
            for r in records {
                writeln!(out, "{}", r.text())?;
            }
        }
        Format::Csv => {
            let mut w = csv::WriterBuilder::new()
                .flexible(true)
                .quote_style(csv::QuoteStyle::Necessary)
                .from_writer(&mut out);
            if let Some(h) = header {
                w.write_record(h)?;
            }
            for r in records {
                w.write_record(r.csv_fields())?;
            }
            w.flush()?;
        }
        Format::Json => serde_json::to_writer_pretty(&mut out, records)?,
    }
    Ok(out)
}

/// `seq(position) = value`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct NoteRow {
    pub position: u64,
    pub value: i64,
}

impl Record for NoteRow {
    fn text(&self) -> String {
        self.value.to_string()
    }

    fn csv_fields(&self) -> Vec<String> {
        vec![self.position.to_string(), self.value.to_string()]
    }
}

/// A block, one line in text and CSV.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockRow {
    pub start: u64,
    pub values: Vec<i64>,
}

impl From<Block> for BlockRow {
    fn from(b: Block) -> Self {
        BlockRow {
            start: b.start,
            values: b.values,
        }
    }
}

impl Record for BlockRow {
    fn text(&self) -> String {
        join(&self.values, " ")
    }

    fn csv_fields(&self) -> Vec<String> {
        self.values.iter().map(i64::to_string).collect()
    }
}

/// One position of a note, in decimal and binary.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PositionRow {
    pub position: u64,
    pub binary: String,
}

impl Record for PositionRow {
    fn text(&self) -> String {
        self.position.to_string()
    }

    fn csv_fields(&self) -> Vec<String> {
        vec![self.position.to_string(), self.binary.clone()]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MembershipRow {
    pub note: i64,
    pub word: String,
    pub accepted: bool,
}

impl Record for MembershipRow {
    fn text(&self) -> String {
        if self.accepted { "accept" } else { "reject" }.to_string()
    }

    fn csv_fields(&self) -> Vec<String> {
        vec![
            self.note.to_string(),
            self.word.clone(),
            self.accepted.to_string(),
        ]
    }
}

impl Record for PairClass {
    fn text(&self) -> String {
        let mut line = format!(
            "({}, {}) {} case {}",
            self.i,
            self.j,
            attainability(self),
            self.case_label
        );
        if let Some(w) = &self.witness {
            match w.position {
                Some(n) => line.push_str(&format!(" at {n} ({})", w.word)),
                None => line.push_str(&format!(" at ({})_2", w.word)),
            }
        }
        line
    }

    fn csv_fields(&self) -> Vec<String> {
        let w = self.witness.as_ref();
        vec![
            self.i.to_string(),
            self.j.to_string(),
            attainability(self).to_string(),
            self.case_label.to_string(),
            w.and_then(|w| w.position)
                .map(|n| n.to_string())
                .unwrap_or_default(),
            w.map(|w| w.word.clone()).unwrap_or_default(),
        ]
    }
}

fn attainability(c: &PairClass) -> &'static str {
    match c.verdict {
        crate::analysis::Attainability::Attainable => "attainable",
        crate::analysis::Attainability::Unattainable => "unattainable",
    }
}

/// One row `i` of a case grid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GridRow {
    pub i: i64,
    pub cells: Vec<CaseLabel>,
}

impl Record for GridRow {
    fn text(&self) -> String {
        format!("{} {}", self.i, join(&self.cells, " "))
    }

    fn csv_fields(&self) -> Vec<String> {
        std::iter::once(self.i.to_string())
            .chain(self.cells.iter().map(|c| c.to_string()))
            .collect()
    }
}

/// Grid rows plus the `i\j, j...` header.
pub fn grid_output(grid: &CaseGrid, format: Format) -> OutputRecord<GridRow> {
    let rows = grid
        .rows()
        .map(|(i, cells)| GridRow {
            i,
            cells: cells.to_vec(),
        })
        .collect();
    let header = std::iter::once("i\\j".to_string())
        .chain(grid.j_range.clone().map(|j| j.to_string()))
        .collect();
    OutputRecord::new(format, rows).with_header(header)
}

/// Occurrences of a note among the first `k^exponent` terms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountRow {
    pub note: i64,
    pub exponent: u32,
    pub formula: u128,
    pub brute: Option<u64>,
    pub density: String,
}

impl Record for CountRow {
    fn text(&self) -> String {
        let mut line = format!(
            "r_{}({}) = {} (density {})",
            self.note, self.exponent, self.formula, self.density
        );
        if let Some(b) = self.brute {
            line.push_str(&format!("; counted {b}"));
        }
        line
    }

    fn csv_fields(&self) -> Vec<String> {
        vec![
            self.note.to_string(),
            self.exponent.to_string(),
            self.formula.to_string(),
            self.brute.map(|b| b.to_string()).unwrap_or_default(),
            self.density.clone(),
        ]
    }
}

impl Record for RepetitionReport {
    fn text(&self) -> String {
        format!(
            "position {} |x| {} |y| {} x = {}",
            self.position,
            self.x_len,
            self.y_len,
            join(&self.x_values.values, " ")
        )
    }

    fn csv_fields(&self) -> Vec<String> {
        vec![
            self.position.to_string(),
            self.x_len.to_string(),
            self.y_len.to_string(),
            join(&self.x_values.values, " "),
            self.ratio.to_string(),
        ]
    }
}

impl Record for PowerReport {
    fn text(&self) -> String {
        format!(
            "position {} exponent {} x = {}",
            self.position,
            self.exponent,
            join(&self.x_values.values, " ")
        )
    }

    fn csv_fields(&self) -> Vec<String> {
        vec![
            self.position.to_string(),
            self.exponent.to_string(),
            join(&self.x_values.values, " "),
        ]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunRow {
    pub predicate: RunPredicate,
    pub prefix_len: usize,
    pub max_run: usize,
}

impl Record for RunRow {
    fn text(&self) -> String {
        format!("{} {}", self.predicate, self.max_run)
    }

    fn csv_fields(&self) -> Vec<String> {
        vec![
            self.predicate.to_string(),
            self.prefix_len.to_string(),
            self.max_run.to_string(),
        ]
    }
}

impl Record for PropertyEntry {
    fn text(&self) -> String {
        format!("{} {} {}", self.id, self.name(), self.verdict)
    }

    fn csv_fields(&self) -> Vec<String> {
        vec![
            self.id.to_string(),
            self.name().to_string(),
            self.verdict.to_string(),
        ]
    }
}

/// A block rendered as pitch names.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MelodyRow {
    pub start: u64,
    pub base: String,
    pub notes: Vec<String>,
}

impl Record for MelodyRow {
    fn text(&self) -> String {
        self.notes.join(" ")
    }

    fn csv_fields(&self) -> Vec<String> {
        self.notes.clone()
    }
}

fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}
