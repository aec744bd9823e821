use serde::{Deserialize, Serialize};

use super::{checked_sum, validate_increasing, WeightTuple};
use crate::error::Result;
use crate::semigroup::{build_apery, Representability};

/// Why a weight is outside the class. Levels are 1-based positions `j` of
/// the weight `m_j` being tested.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "reason", rename_all = "kebab-case")]
pub enum Failure {
    /// `m_1 < 2`.
    BaseCaseM1,
    /// `m_1` divides `m_2`.
    BaseCaseDivisibility,
    /// `m_j` is a multiple of `m_1 + ... + m_{j-1}`, so it sits on a window
    /// boundary and no window contains it.
    NoWindowExists { level: usize, prefix_sum: u64 },
    /// `m_j` is in the obstruction set of its window.
    ObstructionSetHit { level: usize, window: u64 },
}

impl Failure {
    pub fn tag(&self) -> &'static str {
        match self {
            Failure::BaseCaseM1 => "base-case-m1",
            Failure::BaseCaseDivisibility => "base-case-divisibility",
            Failure::NoWindowExists { .. } => "no-window-exists",
            Failure::ObstructionSetHit { .. } => "obstruction-set-hit",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MembershipVerdict {
    pub weight: WeightTuple,
    pub in_class: bool,
    /// Windows `M_3, ..., M_n` of the levels that passed.
    pub witnesses: Vec<u64>,
    pub failure: Option<Failure>,
}

/// Decides class membership level by level.
///
/// Level `j >= 3` has prefix sum `Σ = m_1 + ... + m_{j-1}`. If `Σ | m_j` no
/// window works; otherwise the only candidate is `M_j = ⌊m_j/Σ⌋ + 1` and the
/// level passes iff `m_j` avoids that window's obstruction set.
pub fn is_in_class(m: &WeightTuple) -> MembershipVerdict {
    let (witnesses, failure) =
        classify_sequence(m.as_slice()).expect("a validated weight has a class verdict");
    MembershipVerdict {
        weight: m.clone(),
        in_class: failure.is_none(),
        witnesses,
        failure,
    }
}

/// Class test on any strictly increasing sequence of length >= 2, without
/// requiring gcd 1. Returns the passing windows and the first failure.
pub fn classify_sequence(m: &[u64]) -> Result<(Vec<u64>, Option<Failure>)> {
    validate_increasing(m)?;
    if m[0] < 2 {
        return Ok((Vec::new(), Some(Failure::BaseCaseM1)));
    }
    if m[1].is_multiple_of(m[0]) {
        return Ok((Vec::new(), Some(Failure::BaseCaseDivisibility)));
    }

    let mut witnesses = Vec::with_capacity(m.len().saturating_sub(2));
    for j in 3..=m.len() {
        let prefix = &m[..j - 1];
        let mj = m[j - 1];
        let sum = checked_sum(prefix)?;
        if mj.is_multiple_of(sum) {
            return Ok((
                witnesses,
                Some(Failure::NoWindowExists {
                    level: j,
                    prefix_sum: sum,
                }),
            ));
        }
        let window = mj / sum + 1;
        if hits_obstruction(prefix, mj)? {
            return Ok((
                witnesses,
                Some(Failure::ObstructionSetHit { level: j, window }),
            ));
        }
        witnesses.push(window);
    }
    Ok((witnesses, None))
}

/// `value` (inside its window) is an obstruction iff `value - m_i` is a
/// nonzero combination of the prefix for some `i`.
fn hits_obstruction(prefix: &[u64], value: u64) -> Result<bool> {
    let table = build_apery(prefix)?;
    for &mi in prefix {
        if mi < value && table.is_representable_nonzero(value - mi)? {
            return Ok(true);
        }
    }
    Ok(false)
}
