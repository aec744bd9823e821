//! Counting admissible third weights in the second window of a pair
//! `(m_1, m_2)`.
//!
//! The obstruction set `I` of window 2 splits into four explicit pieces
//! `S_1..S_4`; when the pieces are disjoint their sizes give closed forms for
//! the number of gaps:
//!
//! | hypothesis                         | count                                  |
//! |------------------------------------|----------------------------------------|
//! | primes `5 <= m1 < m2`, `2m1 < m2`  | `d  = m1 + m2 - 5 - ⌊2m2/m1⌋`          |
//! | primes `5 <= m1 < m2`, `2m1 > m2`  | `d' = m1 + m2 - 6 - ⌊2m2/m1⌋`          |
//! | `m1 = 3`, prime `m2 >= 5`          | `f  = m2 - 2 - ⌊2m2/3⌋`                |
//!
//! Outside these hypotheses only the enumerated count is reported.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weights::{obstruction_set, Backend};

/// Deterministic trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn check_pair(m1: u64, m2: u64) -> Result<()> {
    if m1 < 2 || m1 >= m2 {
        return Err(Error::PairOrder { m1, m2 });
    }
    Ok(())
}

/// The four pieces of the window-2 obstruction set of `(m1, m2)`, each built
/// from its defining formula rather than by enumeration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SPartition {
    pub m1: u64,
    pub m2: u64,
    /// `{r·m1 : r >= 2}` inside the window.
    pub s1: Vec<u64>,
    /// `{r·m1 + m2 : r >= 2}` inside the window.
    pub s2: Vec<u64>,
    /// `{m1 + 2·m2}`.
    pub s3: Vec<u64>,
    /// `{r·m2 : r ∈ {2, 3}}` inside the window.
    pub s4: Vec<u64>,
    /// `S1 ∩ S4`.
    pub overlap: Vec<u64>,
}

impl SPartition {
    pub fn parts(&self) -> [&[u64]; 4] {
        [&self.s1, &self.s2, &self.s3, &self.s4]
    }

    pub fn union(&self) -> Vec<u64> {
        let all: BTreeSet<u64> = self.parts().into_iter().flatten().copied().collect();
        all.into_iter().collect()
    }

    pub fn pairwise_disjoint(&self) -> bool {
        let total: usize = self.parts().iter().map(|p| p.len()).sum();
        total == self.union().len()
    }
}

pub fn s_partition(m1: u64, m2: u64) -> Result<SPartition> {
    check_pair(m1, m2)?;
    let lo = m1 + m2;
    let hi = 2 * lo;
    let inside = |v: &u64| *v > lo && *v < hi;

    let s1: Vec<u64> = (2..=hi / m1).map(|r| r * m1).filter(inside).collect();
    let s2: Vec<u64> = (2..=hi / m1).map(|r| r * m1 + m2).filter(inside).collect();
    let s3 = vec![m1 + 2 * m2];
    let s4: Vec<u64> = [2, 3].iter().map(|r| r * m2).filter(inside).collect();
    let overlap = s1.iter().copied().filter(|v| s4.contains(v)).collect();

    Ok(SPartition {
        m1,
        m2,
        s1,
        s2,
        s3,
        s4,
        overlap,
    })
}

/// Which closed form applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ClosedFormKind {
    #[serde(rename = "d")]
    D,
    #[serde(rename = "d'")]
    DPrime,
    #[serde(rename = "f")]
    F,
}

impl fmt::Display for ClosedFormKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClosedFormKind::D => "d",
            ClosedFormKind::DPrime => "d'",
            ClosedFormKind::F => "f",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedForm {
    pub kind: ClosedFormKind,
    pub value: i64,
}

/// The closed-form gap count, or `None` outside the hypotheses.
pub fn closed_form(m1: u64, m2: u64) -> Option<ClosedForm> {
    if m1 >= m2 || !is_prime(m2) {
        return None;
    }
    let (a, b) = (m1 as i64, m2 as i64);
    let floor = 2 * b / a;
    if m1 == 3 && m2 >= 5 {
        return Some(ClosedForm {
            kind: ClosedFormKind::F,
            value: b - 2 - floor,
        });
    }
    if m1 < 5 || !is_prime(m1) {
        return None;
    }
    match (2 * m1).cmp(&m2) {
        std::cmp::Ordering::Less => Some(ClosedForm {
            kind: ClosedFormKind::D,
            value: a + b - 5 - floor,
        }),
        std::cmp::Ordering::Greater => Some(ClosedForm {
            kind: ClosedFormKind::DPrime,
            value: a + b - 6 - floor,
        }),
        // m2 odd prime makes this unreachable
        std::cmp::Ordering::Equal => None,
    }
}

/// Enumerated gap set of window 2 next to the closed form (when one applies).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountReport {
    pub m1: u64,
    pub m2: u64,
    /// Integers strictly inside `(m1 + m2, 2(m1 + m2))`, i.e. `m1 + m2 - 1`.
    pub window_size: u64,
    pub i_set_size: u64,
    pub gap_set: Vec<u64>,
    pub closed_form: Option<ClosedForm>,
    /// `Some(closed form == |gap_set|)`, `None` without a closed form.
    pub matches: Option<bool>,
    /// `S1 ∩ S4`; nonempty only when the pieces fail to be disjoint.
    pub overlap: Vec<u64>,
}

pub fn closed_form_count(m1: u64, m2: u64) -> Result<CountReport> {
    check_pair(m1, m2)?;
    let iset = obstruction_set(&[m1, m2], 2, Backend::Sieve)?;
    let gap_set = iset.complement();
    let closed = closed_form(m1, m2);
    let matches = closed.map(|c| c.value == gap_set.len() as i64);
    let overlap = s_partition(m1, m2)?.overlap;
    Ok(CountReport {
        m1,
        m2,
        window_size: m1 + m2 - 1,
        i_set_size: iset.len() as u64,
        gap_set,
        closed_form: closed,
        matches,
        overlap,
    })
}

fn checked_report(m1: u64, m2: u64) -> Result<(CountReport, ClosedForm)> {
    let report = closed_form_count(m1, m2)?;
    let closed = report
        .closed_form
        .ok_or(Error::HypothesisViolation { m1, m2 })?;
    if report.matches != Some(true) {
        return Err(Error::OracleMismatch(format!(
            "closed form {} = {} but {} gaps enumerated for ({m1}, {m2})",
            closed.kind,
            closed.value,
            report.gap_set.len()
        )));
    }
    Ok((report, closed))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DRow {
    pub m2: u64,
    pub d: i64,
    pub gaps: Vec<u64>,
}

/// Rows `(m2, d, S)` for a fixed prime `m1`.
pub fn table_d(m1: u64, m2_list: &[u64]) -> Result<Vec<DRow>> {
    m2_list
        .iter()
        .map(|&m2| {
            let (report, closed) = checked_report(m1, m2)?;
            Ok(DRow {
                m2,
                d: closed.value,
                gaps: report.gap_set,
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FRow {
    pub m2: u64,
    pub f: i64,
}

/// Rows `(m2, f(m2))` for `m1 = 3`.
pub fn table_f(m2_list: &[u64]) -> Result<Vec<FRow>> {
    m2_list
        .iter()
        .map(|&m2| {
            if !is_prime(m2) {
                return Err(Error::NotPrime(m2));
            }
            if m2 < 5 {
                return Err(Error::HypothesisViolation { m1: 3, m2 });
            }
            let (_, closed) = checked_report(3, m2)?;
            Ok(FRow {
                m2,
                f: closed.value,
            })
        })
        .collect()
}

/// `m2` values of the published `d` table for `m1 = 5`.
pub const D_TABLE_M2: [u64; 5] = [11, 13, 17, 19, 23];

/// `m2` values of the published `f` table.
pub const F_TABLE_M2: [u64; 13] = [5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47];
