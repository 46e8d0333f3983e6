//! Notes as half-step offsets from a base pitch, named in twelve-tone equal
//! temperament with sharps only.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub const NOTE_NAMES: [&str; 12] = [
    "C", "C#", "D", "D#", "E", "F", "F#", "G", "G#", "A", "A#", "B",
];

/// Octave assumed when a base note is given without one.
pub const DEFAULT_OCTAVE: i64 = 4;

/// A pitch as a count of half-steps above `C-1`, the MIDI convention
/// (`C4 = 60`), kept signed so low offsets stay representable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pitch(pub i64);

impl Pitch {
    pub fn name(self) -> &'static str {
        NOTE_NAMES[self.0.rem_euclid(12) as usize]
    }

    pub fn octave(self) -> i64 {
        self.0.div_euclid(12) - 1
    }

    pub fn transpose(self, half_steps: i64) -> Pitch {
        Pitch(self.0 + half_steps)
    }
}

impl Default for Pitch {
    /// `G4`.
    fn default() -> Self {
        Pitch(67)
    }
}

impl fmt::Display for Pitch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.name(), self.octave())
    }
}

impl FromStr for Pitch {
    type Err = Error;

    /// Accepts `G`, `G4`, `F#3`, `C-1`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Domain(format!("unrecognized note name {s:?}"));
        let letter_len = if s.get(1..2) == Some("#") { 2 } else { 1 };
        let (name, octave) = s.split_at(letter_len.min(s.len()));
        let class = NOTE_NAMES.iter().position(|&n| n == name).ok_or_else(bad)? as i64;
        let octave = if octave.is_empty() {
            DEFAULT_OCTAVE
        } else {
            octave.parse::<i64>().map_err(|_| bad())?
        };
        Ok(Pitch((octave + 1) * 12 + class))
    }
}

/// Name of the note `offset` half-steps from `base`.
pub fn render_note(base: Pitch, offset: i64) -> String {
    base.transpose(offset).to_string()
}

/// Space-separated names for a run of offsets.
pub fn render_melody(base: Pitch, offsets: &[i64]) -> String {
    offsets
        .iter()
        .map(|&o| render_note(base, o))
        .collect::<Vec<_>>()
        .join(" ")
}
