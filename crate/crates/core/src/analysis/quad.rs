//! Values around `k = ⌊n/4⌋` that determine a note pair at `n`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::sequence::RadixRecurrence;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct QuadRecord {
    pub n: u64,
    pub k: u64,
    pub residue: u8,
    pub s_k: i64,
    pub s_2k: i64,
    pub s_2k1: i64,
    pub s_2k2: i64,
    pub i: i64,
    pub j: i64,
}

impl QuadRecord {
    /// Reads every entry off the series directly.
    pub fn compute(seq: &RadixRecurrence, n: u64) -> QuadRecord {
        let k = n / 4;
        QuadRecord {
            n,
            k,
            residue: (n % 4) as u8,
            s_k: seq.eval_uncached(k),
            s_2k: seq.eval_uncached(2 * k),
            s_2k1: seq.eval_uncached(2 * k + 1),
            s_2k2: seq.eval_uncached(2 * k + 2),
            i: seq.eval_uncached(n),
            j: seq.eval_uncached(n + 1),
        }
    }

    /// The relations of the row selected by the residue, as
    /// `(name, expected, actual)`.
    pub fn relations(&self) -> Vec<(&'static str, i64, i64)> {
        let i = self.i;
        match self.residue {
            0 => vec![
                ("s(k)", i, self.s_k),
                ("s(2k)", -i, self.s_2k),
                ("s(2k+1)", i + 1, self.s_2k1),
                ("j", 1 - i, self.j),
            ],
            1 => vec![
                ("s(k)", 1 - i, self.s_k),
                ("s(2k)", i - 1, self.s_2k),
                ("s(2k+1)", 2 - i, self.s_2k1),
                ("j", i - 2, self.j),
            ],
            2 => vec![
                ("s(k)", -i - 1, self.s_k),
                ("s(2k)", i + 1, self.s_2k),
                ("s(2k+1)", -i, self.s_2k1),
                ("j", 1 - i, self.j),
            ],
            _ => vec![
                ("s(k)", i - 2, self.s_k),
                ("s(2k)", 2 - i, self.s_2k),
                ("s(2k+1)", i - 1, self.s_2k1),
                ("s(2k+2)", -self.j, self.s_2k2),
            ],
        }
    }

    pub fn check(&self) -> Result<()> {
        for (name, expected, actual) in self.relations() {
            if expected != actual {
                return Err(Error::Domain(format!(
                    "n = {}: {name} should be {expected}, found {actual}",
                    self.n
                )));
            }
        }
        Ok(())
    }
}

/// The record for position `n` of the infinity series, with its relations
/// checked.
pub fn quad_table(n: u64) -> Result<QuadRecord> {
    if n > (u64::MAX - 2) / 2 {
        return Err(Error::Overflow(format!("position {n} too large")));
    }
    let record = QuadRecord::compute(&RadixRecurrence::infinity(), n);
    record.check()?;
    Ok(record)
}
