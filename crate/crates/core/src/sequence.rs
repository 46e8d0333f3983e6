//! Radix recurrences: integer sequences with `v(0) = 0` and one affine
//! branch per base-`k` digit, `v(k·q + r) = σ_r·v(q) + δ_r`.
//!
//! The infinity series is the radix-2 instance with branches `(-1, 0)` and
//! `(+1, +1)`. The other builtins are a radix-4 sequence sharing its
//! structural properties and two radix-3 variations.
//!
//! Values are plain `i64`. Every digit peeled off changes the magnitude by
//! at most `max |δ_r|`, and a `u64` position has at most 64 digits, so
//! offsets are capped at [`MAX_OFFSET`] and no evaluation can overflow.

use std::collections::HashMap;
use std::fmt;
use std::fs;
use std::path::Path;
use std::sync::RwLock;

use crate::error::{Error, Result};

/// Largest accepted `|δ_r|`; `64 · MAX_OFFSET` stays well inside `i64`.
pub const MAX_OFFSET: i64 = 1 << 48;

/// Prefixes up to this length are generated left to right; longer or
/// far-off blocks go through the parent-range recursion.
const DIRECT_PREFIX: u64 = 1 << 12;

/// One digit's affine map `x ↦ sign·x + offset`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Branch {
    negate: bool,
    offset: i64,
}

impl Branch {
    pub fn new(sign: i64, offset: i64) -> Result<Self> {
        let negate = match sign {
            1 => false,
            -1 => true,
            other => return Err(Error::InvalidSign(other)),
        };
        if offset.unsigned_abs() > MAX_OFFSET as u64 {
            return Err(Error::OffsetOutOfRange(offset));
        }
        Ok(Branch { negate, offset })
    }

    pub fn sign(&self) -> i64 {
        if self.negate {
            -1
        } else {
            1
        }
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    #[inline]
    pub fn apply(&self, value: i64) -> i64 {
        if self.negate {
            self.offset - value
        } else {
            value + self.offset
        }
    }
}

/// A finite run of consecutive terms, `values[i] = seq(start + i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub start: u64,
    pub values: Vec<i64>,
}

impl Block {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn end(&self) -> u64 {
        self.start + self.values.len() as u64
    }

    /// `(position, value)` pairs in order.
    pub fn positions(&self) -> impl Iterator<Item = (u64, i64)> + '_ {
        (self.start..).zip(self.values.iter().copied())
    }
}

#[derive(Debug, Default)]
struct Cache {
    map: RwLock<HashMap<u64, i64>>,
    cap: Option<usize>,
}

impl Cache {
    fn get(&self, n: u64) -> Option<i64> {
        self.map.read().ok()?.get(&n).copied()
    }

    fn insert(&self, n: u64, value: i64) {
        let Ok(mut map) = self.map.write() else {
            return;
        };
        if self.cap.is_none_or(|cap| map.len() < cap) {
            map.insert(n, value);
        }
    }

    fn len(&self) -> usize {
        self.map.read().map(|m| m.len()).unwrap_or(0)
    }
}

/// A sequence defined by `v(0) = 0` and `v(k·q + r) = σ_r·v(q) + δ_r`.
///
/// Evaluation is memoized behind a lock, so a single instance can be shared
/// across threads. Clones start with an empty cache.
#[derive(Debug)]
pub struct RadixRecurrence {
    name: String,
    radix: u64,
    branches: Vec<Branch>,
    cache: Cache,
}

impl Clone for RadixRecurrence {
    fn clone(&self) -> Self {
        RadixRecurrence {
            name: self.name.clone(),
            radix: self.radix,
            branches: self.branches.clone(),
            cache: Cache {
                map: RwLock::default(),
                cap: self.cache.cap,
            },
        }
    }
}

impl PartialEq for RadixRecurrence {
    fn eq(&self, other: &Self) -> bool {
        self.radix == other.radix && self.branches == other.branches
    }
}

impl RadixRecurrence {
    pub fn new(name: impl Into<String>, radix: u64, branches: Vec<Branch>) -> Result<Self> {
        if radix < 2 {
            return Err(Error::InvalidRadix(radix));
        }
        if branches.len() as u64 != radix {
            return Err(Error::BranchCount {
                radix,
                found: branches.len(),
            });
        }
        Ok(RadixRecurrence {
            name: name.into(),
            radix,
            branches,
            cache: Cache::default(),
        })
    }

    fn from_table(name: &str, radix: u64, table: &[(i64, i64)]) -> Self {
        let branches = table
            .iter()
            .map(|&(sign, offset)| Branch::new(sign, offset).expect("builtin branch"))
            .collect();
        RadixRecurrence::new(name, radix, branches).expect("builtin recurrence")
    }

    /// The infinity series: `s(2n) = -s(n)`, `s(2n+1) = s(n) + 1`.
    pub fn infinity() -> Self {
        Self::from_table("s", 2, &[(-1, 0), (1, 1)])
    }

    /// Radix-4 sequence with the same eight structural properties as `s`.
    pub fn radix4_companion() -> Self {
        Self::from_table("t", 4, &[(1, 0), (1, -2), (-1, -1), (1, 2)])
    }

    /// First radix-3 variation; contains squares and cubes.
    pub fn first_variation() -> Self {
        Self::from_table("u", 3, &[(-1, 0), (1, -2), (1, -1)])
    }

    /// Second radix-3 variation; only odd intervals occur.
    pub fn second_variation() -> Self {
        Self::from_table("v", 3, &[(-1, 0), (1, -3), (-1, -2)])
    }

    pub const BUILTIN_NAMES: [&'static str; 4] = ["s", "t", "u", "v"];

    pub fn builtin(name: &str) -> Option<Self> {
        match name {
            "s" => Some(Self::infinity()),
            "t" => Some(Self::radix4_companion()),
            "u" => Some(Self::first_variation()),
            "v" => Some(Self::second_variation()),
            _ => None,
        }
    }

    /// A builtin name, or else a path to a config file.
    pub fn resolve(name_or_path: &str) -> Result<Self> {
        if let Some(seq) = Self::builtin(name_or_path) {
            return Ok(seq);
        }
        let path = Path::new(name_or_path);
        if path.exists() {
            Self::load(path)
        } else {
            Err(Error::UnknownSequence(name_or_path.to_string()))
        }
    }

    /// Reads a config file; the sequence is named after the file stem unless
    /// the file has a `name` line.
    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)?;
        let stem = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "custom".to_string());
        Self::parse_config(&stem, &text)
    }

    /// Parses the plain-text definition format:
    ///
    /// ```text
    /// # comment
    /// name s
    /// radix 2
    /// branch 0 -1 0
    /// branch 1 +1 1
    /// ```
    pub fn parse_config(default_name: &str, text: &str) -> Result<Self> {
        let mut name = default_name.to_string();
        let mut radix: Option<(u64, usize)> = None;
        let mut slots: Vec<Option<Branch>> = Vec::new();

        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let err = |message: String| Error::Config {
                line: line_no,
                message,
            };
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            match fields.as_slice() {
                ["name", value] => name = value.to_string(),
                ["radix", value] => {
                    if radix.is_some() {
                        return Err(err("radix given twice".into()));
                    }
                    let k: u64 = value
                        .parse()
                        .map_err(|_| err(format!("bad radix {value:?}")))?;
                    if !(2..=1 << 16).contains(&k) {
                        return Err(err(format!("radix {k} out of range")));
                    }
                    radix = Some((k, line_no));
                    slots = vec![None; k as usize];
                }
                ["branch", digit, sign, offset] => {
                    let Some((k, _)) = radix else {
                        return Err(err("branch before radix".into()));
                    };
                    let r: u64 = digit
                        .parse()
                        .map_err(|_| err(format!("bad digit {digit:?}")))?;
                    if r >= k {
                        return Err(err(format!("digit {r} not below radix {k}")));
                    }
                    let sign: i64 = match *sign {
                        "+" | "+1" | "1" => 1,
                        "-" | "-1" => -1,
                        other => return Err(err(format!("bad sign {other:?}"))),
                    };
                    let offset: i64 = offset
                        .parse()
                        .map_err(|_| err(format!("bad offset {offset:?}")))?;
                    let branch = Branch::new(sign, offset).map_err(|e| err(e.to_string()))?;
                    let slot = &mut slots[r as usize];
                    if slot.is_some() {
                        return Err(err(format!("digit {r} defined twice")));
                    }
                    *slot = Some(branch);
                }
                _ => return Err(err(format!("unrecognized line {line:?}"))),
            }
        }

        let Some((k, radix_line)) = radix else {
            return Err(Error::Config {
                line: 0,
                message: "missing radix line".into(),
            });
        };
        let branches = slots
            .into_iter()
            .enumerate()
            .map(|(r, b)| {
                b.ok_or_else(|| Error::Config {
                    line: radix_line,
                    message: format!("no branch for digit {r}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        RadixRecurrence::new(name, k, branches)
    }

    /// The definition in the config format accepted by [`parse_config`](Self::parse_config).
    pub fn to_config(&self) -> String {
        let mut out = format!("name {}\nradix {}\n", self.name, self.radix);
        for (r, b) in self.branches.iter().enumerate() {
            let sign = if b.negate { "-1" } else { "+1" };
            out.push_str(&format!("branch {r} {sign} {}\n", b.offset));
        }
        out
    }

    /// Caps the memo table; `None` leaves it unbounded.
    pub fn with_cache_cap(mut self, cap: Option<usize>) -> Self {
        self.cache.cap = cap;
        self
    }

    pub fn cached_len(&self) -> usize {
        self.cache.len()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn radix(&self) -> u64 {
        self.radix
    }

    pub fn branches(&self) -> &[Branch] {
        &self.branches
    }

    pub fn branch(&self, digit: u64) -> Branch {
        self.branches[digit as usize]
    }

    /// `max |δ_r|`: the most one digit can move the value.
    pub fn max_step(&self) -> i64 {
        self.branches
            .iter()
            .map(|b| b.offset.abs())
            .max()
            .unwrap_or(0)
    }

    /// Number of base-`k` digits of `n` (zero for `n = 0`).
    pub fn digit_count(&self, mut n: u64) -> u32 {
        let mut count = 0;
        while n > 0 {
            n /= self.radix;
            count += 1;
        }
        count
    }

    /// `v(n)`, memoized.
    pub fn eval(&self, n: u64) -> i64 {
        if n == 0 {
            return 0;
        }
        if let Some(v) = self.cache.get(n) {
            return v;
        }
        let v = self.eval_uncached(n);
        self.cache.insert(n, v);
        v
    }

    /// `v(n)` by digit peeling, folding the digits most significant first.
    pub fn eval_uncached(&self, n: u64) -> i64 {
        let mut digits = [0u8; 64];
        let mut len = 0;
        let mut q = n;
        while q > 0 {
            digits[len] = (q % self.radix) as u8;
            q /= self.radix;
            len += 1;
        }
        let value = digits[..len]
            .iter()
            .rev()
            .fold(0i64, |acc, &r| self.branches[r as usize].apply(acc));
        debug_assert!(
            value.unsigned_abs() <= self.max_step() as u64 * len as u64,
            "|v({n})| exceeds the per-digit growth bound"
        );
        value
    }

    /// The first `len` values, computed left to right from `v(n / k)`.
    pub fn prefix(&self, len: usize) -> Vec<i64> {
        let mut values = Vec::with_capacity(len);
        if len == 0 {
            return values;
        }
        values.push(0);
        let k = self.radix as usize;
        for n in 1..len {
            let parent = values[n / k];
            values.push(self.branches[n % k].apply(parent));
        }
        values
    }

    /// `len` consecutive values starting at `start`.
    ///
    /// Each value depends only on its parent `n / k`, so a far-off block is
    /// built from the (k times shorter) parent block, down to a short prefix.
    ///
    /// # Panics
    /// If `start + len` overflows `u64`.
    pub fn block(&self, start: u64, len: usize) -> Block {
        let end = start
            .checked_add(len as u64)
            .expect("block end overflows u64");
        Block {
            start,
            values: self.range(start, end),
        }
    }

    fn range(&self, lo: u64, hi: u64) -> Vec<i64> {
        if lo >= hi {
            return Vec::new();
        }
        if hi <= DIRECT_PREFIX.max(2 * (hi - lo)) {
            let mut values = self.prefix(hi as usize);
            values.drain(..lo as usize);
            return values;
        }
        let k = self.radix;
        let parent_lo = lo / k;
        let parent = self.range(parent_lo, (hi - 1) / k + 1);
        (lo..hi)
            .map(|n| {
                if n == 0 {
                    0
                } else {
                    self.branches[(n % k) as usize].apply(parent[(n / k - parent_lo) as usize])
                }
            })
            .collect()
    }

    /// Calls `f` on successive blocks covering `0..len`, each at most
    /// `chunk` long. Keeps memory flat for very long scans.
    pub fn for_each_chunk(&self, len: u64, chunk: usize, mut f: impl FnMut(&Block)) {
        let mut start = 0;
        while start < len {
            let take = (len - start).min(chunk as u64) as usize;
            let block = self.block(start, take);
            f(&block);
            start += take as u64;
        }
    }

    /// The first `len` values produced by iterating the substitution
    /// `a ↦ (σ_0·a + δ_0, …, σ_{k-1}·a + δ_{k-1})` from the seed `0`.
    ///
    /// The sequence is a fixed point of this substitution only when the
    /// zero digit maps `0` to itself, i.e. `δ_0 = 0`.
    pub fn morphic_prefix(&self, len: usize) -> Result<Block> {
        if self.branches[0].apply(0) != 0 {
            return Err(Error::Domain(format!(
                "sequence {} is not a fixed point of its substitution (δ_0 ≠ 0)",
                self.name
            )));
        }
        let mut word = vec![0i64];
        while word.len() < len {
            word = word
                .iter()
                .flat_map(|&a| self.branches.iter().map(move |b| b.apply(a)))
                .collect();
        }
        word.truncate(len);
        Ok(Block {
            start: 0,
            values: word,
        })
    }
}

impl fmt::Display for RadixRecurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(0) = 0", self.name)?;
        for (r, b) in self.branches.iter().enumerate() {
            let sign = if b.negate { "-" } else { "" };
            write!(
                f,
                "; {}({}n+{r}) = {sign}{}(n)",
                self.name, self.radix, self.name
            )?;
            if b.offset != 0 {
                write!(
                    f,
                    " {} {}",
                    if b.offset < 0 { '-' } else { '+' },
                    b.offset.abs()
                )?;
            }
        }
        Ok(())
    }
}

/// The first `len` terms of the infinity series, generated by the map
/// `a ↦ (-a, a + 1)` rather than by the recurrence.
pub fn expand_morphism(len: usize) -> Block {
    let mut word = vec![0i64];
    while word.len() < len {
        word = word.iter().flat_map(|&a| [-a, a + 1]).collect();
    }
    word.truncate(len);
    Block {
        start: 0,
        values: word,
    }
}
