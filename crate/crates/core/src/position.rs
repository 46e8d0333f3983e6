//! The languages `L_a = (s⁻¹(a))_2` of binary positions where the note `a`
//! occurs in the infinity series.
//!
//! [`PushdownRecognizer`] is the counter-stack machine reading `(n)_2` most
//! significant digit first: it keeps `|s(prefix)|` counters above a bottom
//! marker and the sign of `s(prefix)` in its finite control. Intersecting
//! with `1*01*` gives `{1^i 0 1^{i+a}}`, which no finite automaton accepts;
//! [`pumping_witness`] checks that argument for a concrete pumping constant.

use crate::error::{Error, Result};
use crate::run_length::{word_from_runs, RunLengthWord};
use crate::sequence::RadixRecurrence;

/// Sign marker kept in the finite control. Negating `Zero` keeps it `Zero`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(value: i64) -> Sign {
        match value.signum() {
            -1 => Sign::Negative,
            0 => Sign::Zero,
            _ => Sign::Positive,
        }
    }

    pub fn negate(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }
}

/// Stack contents: the bottom symbol `Z` with `counters` identical unit
/// counters above it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Configuration {
    pub sign: Sign,
    pub counters: u64,
}

impl Configuration {
    pub const INITIAL: Configuration = Configuration {
        sign: Sign::Zero,
        counters: 0,
    };

    /// Signed value represented by the configuration.
    pub fn value(&self) -> i64 {
        match self.sign {
            Sign::Negative => -(self.counters as i64),
            Sign::Zero => 0,
            Sign::Positive => self.counters as i64,
        }
    }

    /// Whether `Z` is on top of the stack.
    pub fn at_bottom(&self) -> bool {
        self.counters == 0
    }
}

/// The machine `M_a` accepting `L_a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PushdownRecognizer {
    target: i64,
    config: Configuration,
}

impl PushdownRecognizer {
    pub fn new(target_note: i64) -> Self {
        PushdownRecognizer {
            target: target_note,
            config: Configuration::INITIAL,
        }
    }

    pub fn target_note(&self) -> i64 {
        self.target
    }

    pub fn configuration(&self) -> Configuration {
        self.config
    }

    pub fn reset(&mut self) {
        self.config = Configuration::INITIAL;
    }

    /// One transition.
    ///
    /// * `0`: `m := -m`.
    /// * `1` with `m ∈ {0, +1}`: push a counter, `m := +1`.
    /// * `1` with `m = -1`: pop a counter, `m := 0` once `Z` is exposed.
    pub fn step(&mut self, bit: bool) {
        let c = &mut self.config;
        if !bit {
            c.sign = c.sign.negate();
            return;
        }
        match c.sign {
            Sign::Zero | Sign::Positive => {
                c.counters += 1;
                c.sign = Sign::Positive;
            }
            Sign::Negative => {
                debug_assert!(c.counters > 0, "m = -1 with an empty stack");
                c.counters -= 1;
                if c.at_bottom() {
                    c.sign = Sign::Zero;
                }
            }
        }
        debug_assert_eq!(c.sign == Sign::Zero, c.at_bottom());
    }

    /// Feeds a 0/1 word, most significant digit first.
    pub fn feed(&mut self, word: &str) -> Result<()> {
        for (offset, ch) in word.chars().enumerate() {
            match ch {
                '0' => self.step(false),
                '1' => self.step(true),
                digit => return Err(Error::InvalidDigit { digit, offset }),
            }
        }
        Ok(())
    }

    /// End-of-input acceptance: stored sign is `sgn(a)` and exactly `|a|`
    /// counters sit above `Z`.
    pub fn is_accepting(&self) -> bool {
        self.config.sign == Sign::of(self.target)
            && self.config.counters == self.target.unsigned_abs()
    }

    /// Runs a fresh copy of the machine on `word`. Leading zeros are allowed
    /// and never change the outcome: with no counters, `-0 = 0`.
    pub fn accepts(&self, word: &str) -> Result<bool> {
        let mut run = PushdownRecognizer::new(self.target);
        run.feed(word)?;
        Ok(run.is_accepting())
    }

    /// Membership of the number `n` itself, through `(n)_2`.
    pub fn accepts_number(&self, n: u64) -> bool {
        let mut run = PushdownRecognizer::new(self.target);
        if n > 0 {
            for shift in (0..64 - n.leading_zeros()).rev() {
                run.step((n >> shift) & 1 == 1);
            }
        }
        run.is_accepting()
    }
}

pub fn build_recognizer(a: i64) -> PushdownRecognizer {
    PushdownRecognizer::new(a)
}

/// `(n)_2` without leading zeros; empty for `n = 0`.
pub fn binary_word(n: u64) -> String {
    if n == 0 {
        String::new()
    } else {
        format!("{n:b}")
    }
}

/// The first `limit` positions `n < bound` with `s(n) = a`, ascending.
pub fn enumerate_positions(a: i64, limit: usize, bound: u64) -> Vec<u64> {
    let s = RadixRecurrence::infinity();
    let mut found = Vec::new();
    let mut start = 0u64;
    const CHUNK: u64 = 1 << 16;
    while start < bound && found.len() < limit {
        let len = (bound - start).min(CHUNK) as usize;
        let block = s.block(start, len);
        found.extend(
            block
                .positions()
                .filter(|&(_, v)| v == a)
                .map(|(n, _)| n)
                .take(limit - found.len()),
        );
        start += len as u64;
    }
    found
}

/// Membership in `L_a ∩ 1*01*`, i.e. the shape `1^i 0 1^{i+a}`.
pub fn slice_membership(a: i64, word: &str) -> bool {
    let Some(zero) = word.find('0') else {
        return false;
    };
    let (head, tail) = (&word[..zero], &word[zero + 1..]);
    if !head.bytes().all(|b| b == b'1') || !tail.bytes().all(|b| b == b'1') {
        return false;
    }
    tail.len() as i64 - head.len() as i64 == a
}

/// One split `z = u·v·w` and the evidence that `u·w ∉ L_a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Refutation {
    pub u_len: usize,
    pub v_len: usize,
    pub pumped: String,
    /// `s([u·w]_2)` from the closed form.
    pub pumped_value: i64,
}

/// A fully checked pumping-lemma counterexample for `L_a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PumpingWitness {
    pub note: i64,
    pub pump_constant: usize,
    pub word: String,
    pub refutations: Vec<Refutation>,
}

impl PumpingWitness {
    /// Re-checks every refutation from scratch.
    pub fn verify(&self) -> bool {
        let recognizer = PushdownRecognizer::new(self.note);
        self.refutations.iter().all(|r| {
            let expected = format!(
                "{}{}",
                &self.word[..r.u_len],
                &self.word[r.u_len + r.v_len..]
            );
            expected == r.pumped
                && RunLengthWord::parse(&r.pumped)
                    .map(|w| w.infinity_value())
                    .ok()
                    == Some(r.pumped_value)
                && r.pumped_value != self.note
                && matches!(recognizer.accepts(&r.pumped), Ok(false))
        })
    }

    pub fn distinct_pump_lengths(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.refutations.iter().map(|r| r.v_len).collect();
        lens.sort_unstable();
        lens.dedup();
        lens
    }
}

/// Builds `z = 1^N 0 1^{N+a}` with `N = p + |a|` and refutes every split
/// `z = uvw` with `|uv| ≤ p`, `|v| ≥ 1` by evaluating `u·w` through the
/// closed form and running it through `M_a`.
pub fn pumping_witness(a: i64, p: usize) -> Result<PumpingWitness> {
    if p == 0 {
        return Err(Error::Domain("pumping constant must be at least 1".into()));
    }
    let big_n = p as u64 + a.unsigned_abs();
    let right = (big_n as i64 + a) as u64;
    let word = word_from_runs(&[(big_n, 1), (right, 0)]);
    debug_assert!(slice_membership(a, &word));

    let recognizer = PushdownRecognizer::new(a);
    let mut refutations = Vec::new();
    for u_len in 0..p {
        for v_len in 1..=p - u_len {
            let pumped = format!("{}{}", &word[..u_len], &word[u_len + v_len..]);
            let pumped_value = RunLengthWord::parse(&pumped)?.infinity_value();
            if pumped_value == a || recognizer.accepts(&pumped)? {
                return Err(Error::PumpingSurvived {
                    note: a,
                    word,
                    u_len,
                    v_len,
                });
            }
            refutations.push(Refutation {
                u_len,
                v_len,
                pumped,
                pumped_value,
            });
        }
    }
    Ok(PumpingWitness {
        note: a,
        pump_constant: p,
        word,
        refutations,
    })
}
