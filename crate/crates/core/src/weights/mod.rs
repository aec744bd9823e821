//! Weight tuples and the integer machinery built on them: r-values,
//! automorphism exponents, obstruction sets, class membership, resonances and
//! admissible extensions.
//!
//! Indices `i`, `j` are 1-based throughout, matching how weights are usually
//! written `(m_1, ..., m_n)`.

mod admissible;
mod membership;
mod obstruction;
mod resonance;

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use admissible::{
    check_n3_criteria, enumerate_admissible, enumerate_admissible_with, N3Criterion,
};
pub use membership::{classify_sequence, is_in_class, Failure, MembershipVerdict};
pub use obstruction::{obstruction_set, Backend, ObstructionSet};
pub use resonance::{resonances, resonances_of, zero_set_equivalence_check, ResonanceWitness};

/// A strictly increasing tuple of positive weights with overall gcd 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct WeightTuple(Vec<u64>);

impl WeightTuple {
    pub fn new(m: Vec<u64>) -> Result<Self> {
        validate_increasing(&m)?;
        let g = gcd_all(&m);
        if g != 1 {
            return Err(Error::GcdNotOne(g));
        }
        Ok(Self(m))
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Entry `m_i` for 1-based `i`.
    pub fn entry(&self, i: usize) -> Result<u64> {
        check_index(i, self.0.len())?;
        Ok(self.0[i - 1])
    }

    /// The first `len` entries. These are strictly increasing but need not
    /// have gcd 1.
    pub fn prefix(&self, len: usize) -> &[u64] {
        &self.0[..len]
    }
}

impl TryFrom<Vec<u64>> for WeightTuple {
    type Error = Error;

    fn try_from(m: Vec<u64>) -> Result<Self> {
        Self::new(m)
    }
}

impl From<WeightTuple> for Vec<u64> {
    fn from(w: WeightTuple) -> Self {
        w.0
    }
}

impl fmt::Display for WeightTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (idx, m) in self.0.iter().enumerate() {
            if idx > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, ")")
    }
}

/// Nonnegative exponent vector `(k_1, ..., k_l)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiIndex(Vec<u64>);

impl MultiIndex {
    pub fn new(k: Vec<u64>) -> Self {
        Self(k)
    }

    pub fn zeros(len: usize) -> Self {
        Self(vec![0; len])
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&k| k == 0)
    }

    /// Total degree `k_1 + ... + k_l`.
    pub fn degree(&self) -> u64 {
        self.0.iter().sum()
    }

    /// Copy padded with trailing zeros up to `len`.
    pub fn padded(&self, len: usize) -> Self {
        let mut k = self.0.clone();
        k.resize(len.max(k.len()), 0);
        Self(k)
    }
}

impl From<Vec<u64>> for MultiIndex {
    fn from(k: Vec<u64>) -> Self {
        Self(k)
    }
}

/// Validates raw signed input into a [`WeightTuple`].
pub fn validate_weight(raw: &[i64]) -> Result<WeightTuple> {
    if raw.len() < 2 {
        return Err(Error::TooShort(raw.len()));
    }
    if let Some((position, &value)) = raw.iter().enumerate().find(|(_, &v)| v < 1) {
        return Err(Error::NonPositive {
            position: position + 1,
            value,
        });
    }
    WeightTuple::new(raw.iter().map(|&v| v as u64).collect())
}

/// Checks length, positivity and strict increase, but not the gcd.
pub(crate) fn validate_increasing(m: &[u64]) -> Result<()> {
    if m.len() < 2 {
        return Err(Error::TooShort(m.len()));
    }
    if let Some(position) = m.iter().position(|&v| v == 0) {
        return Err(Error::NonPositive {
            position: position + 1,
            value: 0,
        });
    }
    if let Some(w) = m.windows(2).position(|w| w[0] >= w[1]) {
        return Err(Error::NotStrictlyIncreasing {
            position: w + 2,
            prev: m[w] as i64,
            next: m[w + 1] as i64,
        });
    }
    Ok(())
}

/// A prefix `(m_1, ..., m_l)` must be positive and strictly increasing with
/// `l >= 2`. Prefixes of valid weights can have a nontrivial gcd, so it is
/// not checked here.
pub fn validate_prefix(prefix: &[u64]) -> Result<()> {
    validate_increasing(prefix)
}

pub(crate) fn gcd_all(m: &[u64]) -> u64 {
    m.iter().fold(0, |acc, &v| acc.gcd(&v))
}

pub(crate) fn checked_sum(m: &[u64]) -> Result<u64> {
    m.iter()
        .try_fold(0u64, |acc, &v| acc.checked_add(v))
        .ok_or(Error::Overflow("prefix sum"))
}

fn check_index(i: usize, len: usize) -> Result<()> {
    if i == 0 || i > len {
        return Err(Error::IndexOutOfRange { index: i, len });
    }
    Ok(())
}

fn check_multi_index(k: &MultiIndex, expected: usize) -> Result<()> {
    if k.len() != expected {
        return Err(Error::MultiIndexLength {
            expected,
            got: k.len(),
        });
    }
    Ok(())
}

/// `r = m_i + sum_q m_q k_q` over a prefix of length `l = k.len()`.
pub fn r_value(prefix: &[u64], i: usize, k: &MultiIndex) -> Result<u64> {
    check_index(i, prefix.len())?;
    check_multi_index(k, prefix.len())?;
    prefix
        .iter()
        .zip(k.as_slice())
        .try_fold(prefix[i - 1], |acc, (&m, &kq)| {
            m.checked_mul(kq).and_then(|t| acc.checked_add(t))
        })
        .ok_or(Error::Overflow("r-value"))
}

/// Exponent `c = (m_i - m_j) + sum_r m_r k_r` of the monomial `z^k` in the
/// `(j, i)` entry of the kernel matrix.
pub fn c_exponent(m: &WeightTuple, i: usize, j: usize, k: &MultiIndex) -> Result<i64> {
    let n = m.len();
    check_index(i, n)?;
    check_index(j, n)?;
    if i == j {
        return Err(Error::EqualIndices(i));
    }
    check_multi_index(k, n)?;
    let ov = Error::Overflow("exponent");
    let mut acc = m.0[i - 1] as i64 - m.0[j - 1] as i64;
    for (&mr, &kr) in m.0.iter().zip(k.as_slice()) {
        let term = i64::try_from(mr)
            .ok()
            .zip(i64::try_from(kr).ok())
            .and_then(|(a, b)| a.checked_mul(b))
            .ok_or_else(|| ov.clone())?;
        acc = acc.checked_add(term).ok_or_else(|| ov.clone())?;
    }
    Ok(acc)
}
