//! Run-length normal form of binary words, `1^{b_1} 0^{a_1} … 1^{b_n} 0^{a_n}`,
//! and the closed form of the infinity series read off from it:
//!
//! ```text
//! s([w]_2) = Σ_j (-1)^{a_j + … + a_n} · b_j
//! ```
//!
//! Working on run lengths instead of integers lets the closed form handle
//! words far longer than 64 bits.

use std::fmt;

use crate::error::{Error, Result};

/// `ones` 1s followed by `zeros` 0s.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Run {
    pub ones: u64,
    pub zeros: u64,
}

/// A binary word without leading zeros as a list of runs. Every run has
/// `ones ≥ 1`; the empty list is the empty word, i.e. the number 0.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RunLengthWord {
    runs: Vec<Run>,
}

impl RunLengthWord {
    pub fn new(runs: Vec<Run>) -> Result<Self> {
        if let Some(pos) = runs.iter().position(|r| r.ones == 0) {
            return Err(Error::Domain(format!("run {pos} has no ones")));
        }
        Ok(RunLengthWord { runs })
    }

    /// Decomposes `(n)_2`. Zero has no decomposition (its word is empty).
    pub fn decompose(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain(
                "0 has an empty binary word and no run decomposition".into(),
            ));
        }
        Self::parse(&format!("{n:b}"))
    }

    /// Parses a 0/1 string, dropping leading zeros (they do not change `[w]_2`).
    pub fn parse(word: &str) -> Result<Self> {
        let mut runs: Vec<Run> = Vec::new();
        for (offset, ch) in word.chars().enumerate() {
            match ch {
                '1' => match runs.last_mut() {
                    Some(run) if run.zeros == 0 => run.ones += 1,
                    _ => runs.push(Run { ones: 1, zeros: 0 }),
                },
                '0' => {
                    if let Some(run) = runs.last_mut() {
                        run.zeros += 1;
                    }
                }
                digit => return Err(Error::InvalidDigit { digit, offset }),
            }
        }
        Ok(RunLengthWord { runs })
    }

    pub fn runs(&self) -> &[Run] {
        &self.runs
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    pub fn bit_len(&self) -> u64 {
        self.runs.iter().map(|r| r.ones + r.zeros).sum()
    }

    /// `[w]_2`, or `None` if it needs more than 64 bits.
    pub fn recompose(&self) -> Option<u64> {
        if self.bit_len() > 64 {
            return None;
        }
        let mut n: u64 = 0;
        for run in &self.runs {
            for _ in 0..run.ones {
                n = (n << 1) | 1;
            }
            if run.zeros > 0 {
                n = n.checked_shl(run.zeros as u32)?;
            }
        }
        Some(n)
    }

    /// Value of the infinity series at `[w]_2` from the run lengths alone.
    pub fn infinity_value(&self) -> i64 {
        let mut suffix_zeros = 0u64;
        let mut total = 0i64;
        for run in self.runs.iter().rev() {
            suffix_zeros += run.zeros;
            let b = run.ones as i64;
            total += if suffix_zeros.is_multiple_of(2) {
                b
            } else {
                -b
            };
        }
        total
    }
}

impl fmt::Display for RunLengthWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for run in &self.runs {
            for _ in 0..run.ones {
                f.write_str("1")?;
            }
            for _ in 0..run.zeros {
                f.write_str("0")?;
            }
        }
        Ok(())
    }
}

/// The infinity series by its closed form on `(n)_2`.
pub fn eval_closed_form(n: u64) -> i64 {
    match RunLengthWord::decompose(n) {
        Ok(word) => word.infinity_value(),
        Err(_) => 0,
    }
}

/// Builds `1^{runs[0].0} 0^{runs[0].1} …` as a word; runs with zero ones
/// are allowed here and simply contribute zeros.
pub fn word_from_runs(parts: &[(u64, u64)]) -> String {
    let mut out = String::new();
    for &(ones, zeros) in parts {
        out.extend(std::iter::repeat_n('1', ones as usize));
        out.extend(std::iter::repeat_n('0', zeros as usize));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequence::RadixRecurrence;
    use proptest::prelude::*;

    fn runs(parts: &[(u64, u64)]) -> Vec<Run> {
        parts
            .iter()
            .map(|&(ones, zeros)| Run { ones, zeros })
            .collect()
    }

    #[test]
    fn decompose_examples() {
        assert_eq!(
            RunLengthWord::decompose(43).unwrap().runs(),
            runs(&[(1, 1), (1, 1), (2, 0)])
        );
        assert_eq!(RunLengthWord::decompose(4).unwrap().runs(), runs(&[(1, 2)]));
        assert_eq!(RunLengthWord::decompose(7).unwrap().runs(), runs(&[(3, 0)]));
        assert_eq!(RunLengthWord::decompose(1).unwrap().runs(), runs(&[(1, 0)]));
        assert_eq!(
            RunLengthWord::decompose(u64::MAX).unwrap().runs(),
            runs(&[(64, 0)])
        );
        assert_eq!(
            RunLengthWord::decompose(1 << 63).unwrap().runs(),
            runs(&[(1, 63)])
        );
        assert!(matches!(RunLengthWord::decompose(0), Err(Error::Domain(_))));
    }

    #[test]
    fn word_rendering() {
        assert_eq!(RunLengthWord::decompose(43).unwrap().to_string(), "101011");
        assert_eq!(
            RunLengthWord::parse("000101011").unwrap().recompose(),
            Some(43)
        );
        assert!(RunLengthWord::parse("").unwrap().is_empty());
        assert!(RunLengthWord::parse("000").unwrap().is_empty());
        assert!(matches!(
            RunLengthWord::parse("10a1"),
            Err(Error::InvalidDigit {
                digit: 'a',
                offset: 2
            })
        ));
        assert_eq!(word_from_runs(&[(1, 1), (0, 1), (2, 0)]), "10011");
        assert!(RunLengthWord::new(runs(&[(0, 1)])).is_err());
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(eval_closed_form(0), 0);
        assert_eq!(eval_closed_form(43), 2);
        assert_eq!(eval_closed_form((1 << 5) - 1), 5);
        assert_eq!(eval_closed_form(6), -2);
    }

    #[test]
    fn closed_form_matches_recursion_below_2_20() {
        let s = RadixRecurrence::infinity();
        let values = s.prefix(1 << 20);
        for (n, &value) in values.iter().enumerate() {
            assert_eq!(eval_closed_form(n as u64), value, "n = {n}");
        }
    }

    #[test]
    fn round_trip_below_2_20() {
        for n in 1u64..1 << 20 {
            let word = RunLengthWord::decompose(n).unwrap();
            assert_eq!(word.recompose(), Some(n));
        }
    }

    #[test]
    fn long_words_use_run_lengths() {
        // 1^100 0 1^130: the slice law gives 130 - 100
        let word = RunLengthWord::parse(&word_from_runs(&[(100, 1), (130, 0)])).unwrap();
        assert_eq!(word.recompose(), None);
        assert_eq!(word.infinity_value(), 30);
    }

    proptest! {
        #[test]
        fn decompose_round_trips(n in 1u64..) {
            let word = RunLengthWord::decompose(n).unwrap();
            prop_assert_eq!(word.recompose(), Some(n));
            prop_assert!(word.runs().iter().all(|r| r.ones >= 1));
            prop_assert_eq!(RunLengthWord::parse(&word.to_string()).unwrap(), word.clone());
            prop_assert_eq!(word.infinity_value(), RadixRecurrence::infinity().eval_uncached(n));
        }
    }
}
