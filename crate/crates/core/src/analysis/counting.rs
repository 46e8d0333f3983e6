//! Occurrence counts of a note in the first `2^N` terms.
//!
//! For the infinity series the count is `C(N-1, ⌊(N-a)/2⌋)`; the brute
//! count works for any radix recurrence and serves as its oracle.

use std::collections::BTreeMap;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::sequence::RadixRecurrence;

/// Largest `N` for which the formula and density are computed exactly
/// (`C(126, 63)` and `2^127` both fit in `u128`).
pub const MAX_EXPONENT: u32 = 127;

const CHUNK: usize = 1 << 16;

/// Number of `n < 2^N` with `seq(n) = a`, by enumeration.
///
/// # Panics
/// If `N ≥ 64`.
pub fn count_note_brute(seq: &RadixRecurrence, a: i64, exponent: u32) -> u64 {
    assert!(exponent < 64, "2^{exponent} positions cannot be enumerated");
    let mut count = 0;
    seq.for_each_chunk(1u64 << exponent, CHUNK, |block| {
        count += block.values.iter().filter(|&&v| v == a).count() as u64;
    });
    count
}

/// Occurrence count of every value among the first `len` terms.
pub fn note_histogram(seq: &RadixRecurrence, len: u64) -> BTreeMap<i64, u64> {
    let mut hist = BTreeMap::new();
    seq.for_each_chunk(len, CHUNK, |block| {
        for &v in &block.values {
            *hist.entry(v).or_insert(0) += 1;
        }
    });
    hist
}

/// `C(n, k)` from Pascal's rule; zero when `k < 0` or `k > n`.
pub fn binomial(n: u32, k: i64) -> u128 {
    if k < 0 || k > n as i64 {
        return 0;
    }
    let k = k.min(n as i64 - k) as usize;
    let mut row = vec![0u128; k + 1];
    row[0] = 1;
    for m in 1..=n as usize {
        for j in (1..=k.min(m)).rev() {
            row[j] = row[j]
                .checked_add(row[j - 1])
                .expect("binomial overflows u128");
        }
    }
    row[k]
}

fn check_exponent(exponent: u32) -> Result<()> {
    if exponent == 0 {
        return Err(Error::Domain("the counting formula needs N ≥ 1".into()));
    }
    if exponent > MAX_EXPONENT {
        return Err(Error::Overflow(format!(
            "N = {exponent} exceeds {MAX_EXPONENT}"
        )));
    }
    Ok(())
}

/// `r_a(N) = C(N-1, ⌊(N-a)/2⌋)` for the infinity series.
pub fn count_note_formula(a: i64, exponent: u32) -> Result<u128> {
    check_exponent(exponent)?;
    let lower = (exponent as i64 - a).div_euclid(2);
    Ok(binomial(exponent - 1, lower))
}

/// `r_a(N) / 2^N`, reduced.
pub fn density(a: i64, exponent: u32) -> Result<Ratio<u128>> {
    let count = count_note_formula(a, exponent)?;
    Ok(Ratio::new(count, 1u128 << exponent))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Multiplicative formula, independent of the Pascal table.
    fn choose(n: u64, k: u64) -> u128 {
        if k > n {
            return 0;
        }
        let mut acc: u128 = 1;
        for i in 0..k {
            acc = acc * (n - i) as u128 / (i + 1) as u128;
        }
        acc
    }

    #[test]
    fn pascal_matches_multiplicative() {
        for n in 0..60u32 {
            for k in -2..=n as i64 + 2 {
                let expected = if k < 0 { 0 } else { choose(n as u64, k as u64) };
                assert_eq!(binomial(n, k), expected, "C({n},{k})");
            }
        }
        // largest value the formula needs at N = 127
        assert!(binomial(126, 63) > 1u128 << 120);
        assert_eq!(binomial(126, 63), binomial(125, 62) + binomial(125, 63));
    }

    #[test]
    fn brute_examples() {
        let s = RadixRecurrence::infinity();
        assert_eq!(count_note_brute(&s, 0, 1), 1);
        assert_eq!(count_note_brute(&s, 4, 4), 1);
        assert_eq!(count_note_brute(&s, 1, 4), 3);
        assert_eq!(count_note_brute(&s, 0, 0), 1);
    }

    #[test]
    fn formula_examples() {
        assert_eq!(count_note_formula(0, 1).unwrap(), 1);
        assert_eq!(count_note_formula(2, 1).unwrap(), 0);
        assert_eq!(choose(19, 10), 92378);
        assert_eq!(count_note_formula(0, 20).unwrap(), 92378);
        assert!(matches!(count_note_formula(0, 0), Err(Error::Domain(_))));
        assert!(matches!(
            count_note_formula(0, 128),
            Err(Error::Overflow(_))
        ));
    }

    #[test]
    fn density_examples() {
        assert_eq!(density(0, 1).unwrap(), Ratio::new(1, 2));
        assert_eq!(density(0, 2).unwrap(), Ratio::new(1, 4));
        assert_eq!(density(0, 20).unwrap(), Ratio::new(92378, 1 << 20));
    }

    #[test]
    fn formula_matches_histogram_up_to_16() {
        let s = RadixRecurrence::infinity();
        for exponent in 1..=16u32 {
            let hist = note_histogram(&s, 1 << exponent);
            for a in -(exponent as i64 + 1)..=exponent as i64 + 1 {
                let brute = hist.get(&a).copied().unwrap_or(0);
                assert_eq!(
                    count_note_formula(a, exponent).unwrap(),
                    brute as u128,
                    "a={a} N={exponent}"
                );
            }
        }
    }
}
