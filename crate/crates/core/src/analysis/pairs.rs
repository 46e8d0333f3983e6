//! Note pairs `(i, j) = (s(n), s(n+1))`.
//!
//! A pair is attainable iff one of
//!
//! * (a) `i > 0` and `-i ≤ j ≤ i-1`,
//! * (b) `j ≥ 1`, `1-j ≤ i ≤ j+1` and `i ≢ j (mod 2)`,
//! * (c) `j ≤ -2`, `j+2 ≤ i ≤ -j-2` and `i ≡ j (mod 2)`
//!
//! holds. Attainable pairs fall into four constructive cases, each giving a
//! position `n` of the shape `1^a 0 1^c` or `1^a 00 1^c`; the rest fall into
//! three refuted cases, where cases 5 and 6 overlap on two diagonals
//! (label `A`).

use std::fmt;
use std::ops::RangeInclusive;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::run_length::{word_from_runs, RunLengthWord};
use crate::sequence::RadixRecurrence;

/// Positions searched when a constructed witness fails verification.
pub const FALLBACK_SEARCH_BOUND: u64 = 1 << 22;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseLabel {
    One,
    Two,
    Three,
    Four,
    Five,
    Six,
    Seven,
    /// Both case 5 and case 6 hold.
    A,
}

impl CaseLabel {
    pub fn is_constructive(self) -> bool {
        matches!(
            self,
            CaseLabel::One | CaseLabel::Two | CaseLabel::Three | CaseLabel::Four
        )
    }

    pub fn symbol(self) -> &'static str {
        match self {
            CaseLabel::One => "1",
            CaseLabel::Two => "2",
            CaseLabel::Three => "3",
            CaseLabel::Four => "4",
            CaseLabel::Five => "5",
            CaseLabel::Six => "6",
            CaseLabel::Seven => "7",
            CaseLabel::A => "A",
        }
    }

    pub fn from_symbol(symbol: &str) -> Option<CaseLabel> {
        Some(match symbol {
            "1" => CaseLabel::One,
            "2" => CaseLabel::Two,
            "3" => CaseLabel::Three,
            "4" => CaseLabel::Four,
            "5" => CaseLabel::Five,
            "6" => CaseLabel::Six,
            "7" => CaseLabel::Seven,
            "A" => CaseLabel::A,
            _ => return None,
        })
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.symbol())
    }
}

impl Serialize for CaseLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.symbol())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Attainability {
    Attainable,
    Unattainable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum WitnessSource {
    Construction,
    Search,
}

/// A position `n` with `s(n) = i`, `s(n+1) = j`, kept as `(n)_2` so that
/// pairs needing more than 64 bits still have a checkable witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairWitness {
    pub word: String,
    pub position: Option<u64>,
    pub source: WitnessSource,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairClass {
    pub i: i64,
    pub j: i64,
    pub verdict: Attainability,
    pub case_label: CaseLabel,
    pub witness: Option<PairWitness>,
}

fn same_parity(x: i64, y: i64) -> bool {
    (x - y).rem_euclid(2) == 0
}

/// Attainability straight from the three conditions above.
pub fn satisfies_conditions(i: i64, j: i64) -> bool {
    (i > 0 && -i <= j && j < i)
        || (j >= 1 && 1 - j <= i && i <= j + 1 && !same_parity(i, j))
        || (j <= -2 && j + 2 <= i && i <= -j - 2 && same_parity(i, j))
}

/// The case of the attainability proof that `(i, j)` falls under.
pub fn case_label(i: i64, j: i64) -> CaseLabel {
    let parity = same_parity(i, j);
    if j <= (-1).min(i - 1) && parity {
        return CaseLabel::One;
    }
    if j >= 2.max(1 - i) && !parity {
        return CaseLabel::Two;
    }
    if i >= 0 && 1 - i <= j && j <= 1 && !parity {
        return CaseLabel::Three;
    }
    if i >= 0 && 0 <= j && j < i && parity {
        return CaseLabel::Four;
    }
    let five = i <= 0 && i - 1 <= j && j <= -i;
    let six = i <= 0 && ((j >= -i && parity) || (j <= i && !parity));
    match (five, six) {
        (true, true) => CaseLabel::A,
        (true, false) => CaseLabel::Five,
        (false, true) => CaseLabel::Six,
        (false, false) => {
            debug_assert!(i > 0 && ((j <= -(i + 1) && !parity) || (j >= i && parity)));
            CaseLabel::Seven
        }
    }
}

/// `(n)_2` from the construction of the given case.
fn construct_word(i: i64, j: i64, label: CaseLabel) -> Option<String> {
    let (a, c, double_zero) = match label {
        CaseLabel::One => (-(j + 1), i - (j + 1), false),
        CaseLabel::Two => (j - 1, i + j - 1, false),
        CaseLabel::Three => (1 - j, i + j - 1, true),
        CaseLabel::Four => (j + 1, i - (j + 1), true),
        _ => return None,
    };
    debug_assert!(a >= 0 && c >= 0);
    let parts = if double_zero {
        [(a as u64, 1), (0, 1), (c as u64, 0)]
    } else {
        [(a as u64, 1), (c as u64, 0), (0, 0)]
    };
    Some(word_from_runs(&parts))
}

/// Binary successor of a 0/1 word; the result has no leading zeros.
pub fn increment_word(word: &str) -> String {
    let mut bits: Vec<u8> = word.bytes().collect();
    let mut idx = bits.len();
    loop {
        if idx == 0 {
            bits.insert(0, b'1');
            break;
        }
        idx -= 1;
        if bits[idx] == b'1' {
            bits[idx] = b'0';
        } else {
            bits[idx] = b'1';
            break;
        }
    }
    let text = String::from_utf8(bits).expect("binary digits");
    text.trim_start_matches('0').to_string()
}

fn word_value(word: &str) -> i64 {
    RunLengthWord::parse(word)
        .map(|w| w.infinity_value())
        .expect("constructed words are binary")
}

/// `n` from `(n)_2`, if it fits in 64 bits.
fn word_position(word: &str) -> Option<u64> {
    if word.is_empty() {
        Some(0)
    } else {
        u64::from_str_radix(word, 2).ok()
    }
}

/// Checks a witness word by the closed form and, when `n + 1` fits in 64
/// bits, by the recurrence as well.
fn verify_witness(word: &str, i: i64, j: i64) -> bool {
    if word_value(word) != i || word_value(&increment_word(word)) != j {
        return false;
    }
    match word_position(word) {
        Some(n) if n < u64::MAX => {
            let s = RadixRecurrence::infinity();
            s.eval_uncached(n) == i && s.eval_uncached(n + 1) == j
        }
        _ => true,
    }
}

fn search_witness(i: i64, j: i64, bound: u64) -> Option<u64> {
    let s = RadixRecurrence::infinity();
    let mut start = 0u64;
    while start < bound {
        let len = (bound - start).min(1 << 16) as usize;
        let block = s.block(start, len + 1);
        if let Some(offset) = block.values.windows(2).position(|w| w[0] == i && w[1] == j) {
            return Some(start + offset as u64);
        }
        start += len as u64;
    }
    None
}

/// Classifies `(i, j)` and, when attainable, constructs and verifies a
/// witness. A construction that fails verification falls back to a bounded
/// search.
pub fn classify_pair(i: i64, j: i64) -> PairClass {
    let label = case_label(i, j);
    debug_assert_eq!(label.is_constructive(), satisfies_conditions(i, j));
    if !label.is_constructive() {
        return PairClass {
            i,
            j,
            verdict: Attainability::Unattainable,
            case_label: label,
            witness: None,
        };
    }

    let raw = construct_word(i, j, label).expect("constructive case");
    let word = raw.trim_start_matches('0').to_string();
    let witness = if verify_witness(&word, i, j) {
        PairWitness {
            position: word_position(&word),
            word,
            source: WitnessSource::Construction,
        }
    } else {
        let n = search_witness(i, j, FALLBACK_SEARCH_BOUND).unwrap_or_else(|| {
            panic!("pair ({i}, {j}) meets the attainability conditions but no witness was found")
        });
        PairWitness {
            word: crate::position::binary_word(n),
            position: Some(n),
            source: WitnessSource::Search,
        }
    };
    PairClass {
        i,
        j,
        verdict: Attainability::Attainable,
        case_label: label,
        witness: Some(witness),
    }
}

/// A verified position `n` with `s(n) = i` and `s(n+1) = j`.
pub fn witness_pair(i: i64, j: i64) -> Result<u64> {
    let class = classify_pair(i, j);
    match class.witness {
        None => Err(Error::NotAttainable { i, j }),
        Some(PairWitness {
            position: Some(n), ..
        }) => Ok(n),
        Some(w) => Err(Error::Overflow(format!(
            "witness for ({i}, {j}) has {} bits",
            w.word.len()
        ))),
    }
}

/// `s(n+1) - s(n) = k` for some `n` iff `k < 0`, or `k > 0` and odd.
pub fn interval_attainable(k: i64) -> bool {
    k < 0 || (k > 0 && k % 2 == 1)
}

/// Case labels over a rectangle of pairs, rows indexed by `i`, columns by `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseGrid {
    pub i_range: RangeInclusive<i64>,
    pub j_range: RangeInclusive<i64>,
    pub cells: Vec<Vec<CaseLabel>>,
}

/// Column width of the text rendering.
const CELL_WIDTH: usize = 4;

impl CaseGrid {
    pub fn get(&self, i: i64, j: i64) -> Option<CaseLabel> {
        if !self.i_range.contains(&i) || !self.j_range.contains(&j) {
            return None;
        }
        let row = (i - self.i_range.start()) as usize;
        let col = (j - self.j_range.start()) as usize;
        Some(self.cells[row][col])
    }

    pub fn rows(&self) -> impl Iterator<Item = (i64, &[CaseLabel])> + '_ {
        self.i_range
            .clone()
            .zip(self.cells.iter().map(|r| r.as_slice()))
    }

    /// Right-aligned columns, `i\j` in the corner, one row per `i`.
    pub fn to_text(&self) -> String {
        let mut out = format!("{:>w$}", "i\\j", w = CELL_WIDTH);
        for j in self.j_range.clone() {
            out.push_str(&format!("{j:>w$}", w = CELL_WIDTH));
        }
        out.push('\n');
        for (i, row) in self.rows() {
            out.push_str(&format!("{i:>w$}", w = CELL_WIDTH));
            for label in row {
                out.push_str(&format!("{label:>w$}", w = CELL_WIDTH));
            }
            out.push('\n');
        }
        out
    }
}

pub fn case_table(i_range: RangeInclusive<i64>, j_range: RangeInclusive<i64>) -> Result<CaseGrid> {
    if i_range.is_empty() || j_range.is_empty() {
        return Err(Error::Domain("case table ranges must be nonempty".into()));
    }
    let cells = i_range
        .clone()
        .map(|i| j_range.clone().map(|j| case_label(i, j)).collect())
        .collect();
    Ok(CaseGrid {
        i_range,
        j_range,
        cells,
    })
}
