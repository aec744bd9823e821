use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{checked_sum, validate_prefix};
use crate::error::{Error, Result};
use crate::semigroup::{build_apery, build_sieve, obstruction_set_fast};

/// How an obstruction set is computed. All three give the same answer.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Backend {
    /// Direct enumeration of exponent vectors.
    Brute,
    /// DP sieve up to the window's upper end.
    #[default]
    Sieve,
    /// Residue table modulo the smallest weight.
    Apery,
}

impl Backend {
    pub const ALL: [Backend; 3] = [Backend::Brute, Backend::Sieve, Backend::Apery];

    pub fn name(self) -> &'static str {
        match self {
            Backend::Brute => "brute",
            Backend::Sieve => "sieve",
            Backend::Apery => "apery",
        }
    }
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Backend {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "brute" => Ok(Backend::Brute),
            "sieve" => Ok(Backend::Sieve),
            "apery" => Ok(Backend::Apery),
            other => Err(format!("unknown backend `{other}`")),
        }
    }
}

/// The integers strictly between `(M-1)·Σ` and `M·Σ` of the form
/// `m_i + Σ_q m_q k_q` with `k ≠ 0`, where `Σ` is the prefix sum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionSet {
    prefix: Vec<u64>,
    window: u64,
    lower: u64,
    upper: u64,
    elements: Vec<u64>,
}

impl ObstructionSet {
    pub(crate) fn from_parts(prefix: &[u64], window: u64, elements: Vec<u64>) -> Self {
        let sum: u64 = prefix.iter().sum();
        Self {
            prefix: prefix.to_vec(),
            window,
            lower: (window - 1) * sum,
            upper: window * sum,
            elements,
        }
    }

    /// Exclusive bounds `((M-1)·Σ, M·Σ)` of window `M` over `prefix`.
    pub fn window_bounds(prefix: &[u64], window: u64) -> Result<(u64, u64)> {
        let sum = checked_sum(prefix)?;
        let upper = window
            .checked_mul(sum)
            .ok_or(Error::Overflow("window bound"))?;
        Ok((upper - sum, upper))
    }

    pub fn prefix(&self) -> &[u64] {
        &self.prefix
    }

    pub fn window(&self) -> u64 {
        self.window
    }

    /// Exclusive interval `(lower, upper)`.
    pub fn interval(&self) -> (u64, u64) {
        (self.lower, self.upper)
    }

    /// Sorted members.
    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, r: u64) -> bool {
        self.elements.binary_search(&r).is_ok()
    }

    /// Integers of the open window that are not in the set.
    pub fn complement(&self) -> Vec<u64> {
        (self.lower + 1..self.upper)
            .filter(|&r| !self.contains(r))
            .collect()
    }
}

/// Computes the obstruction set of `prefix` for window `window` (`M >= 1`).
pub fn obstruction_set(prefix: &[u64], window: u64, backend: Backend) -> Result<ObstructionSet> {
    validate_prefix(prefix)?;
    if window < 1 {
        return Err(Error::InvalidWindow);
    }
    let (_, upper) = ObstructionSet::window_bounds(prefix, window)?;
    match backend {
        Backend::Brute => Ok(brute(prefix, window)),
        Backend::Sieve => obstruction_set_fast(prefix, window, &build_sieve(prefix, upper)?),
        Backend::Apery => obstruction_set_fast(prefix, window, &build_apery(prefix)?),
    }
}

/// Walks every exponent vector whose r-value stays below the upper bound.
fn brute(prefix: &[u64], window: u64) -> ObstructionSet {
    let sum: u64 = prefix.iter().sum();
    let (lower, upper) = ((window - 1) * sum, window * sum);
    let mut found = BTreeSet::new();

    fn walk(
        prefix: &[u64],
        q: usize,
        value: u64,
        nonzero: bool,
        lower: u64,
        upper: u64,
        found: &mut BTreeSet<u64>,
    ) {
        if q == prefix.len() {
            if nonzero && value > lower {
                found.insert(value);
            }
            return;
        }
        let mut v = value;
        let mut kq = 0u64;
        while v < upper {
            walk(prefix, q + 1, v, nonzero || kq > 0, lower, upper, found);
            v += prefix[q];
            kq += 1;
        }
    }

    for &mi in prefix {
        walk(prefix, 0, mi, false, lower, upper, &mut found);
    }
    ObstructionSet::from_parts(prefix, window, found.into_iter().collect())
}
