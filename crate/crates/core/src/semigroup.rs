//! Membership tables for the numerical semigroup spanned by a set of
//! generators.
//!
//! Two independent backends answer "is `t` a nonnegative integer combination
//! of the generators?":
//!
//! - [`RepresentabilityTable`], a forward DP sieve over `0..=bound`, and
//! - [`AperyTable`], the least element of every residue class modulo the
//!   smallest generator.
//!
//! Each one is the other's oracle in the test suite.

use std::collections::VecDeque;

use bitvec::prelude::*;

use crate::error::{Error, Result};
use crate::weights::{validate_prefix, ObstructionSet};

/// Common query surface of the sieve and Apéry backends.
pub trait Representability {
    /// Generators the table was built from, in the order given.
    fn generators(&self) -> &[u64];

    /// Largest value the table can answer for, `None` if unbounded.
    fn bound(&self) -> Option<u64>;

    /// Whether `t` is a nonnegative combination of the generators.
    fn is_representable(&self, t: u64) -> Result<bool>;

    /// Whether `t` is a combination with at least one nonzero coefficient.
    ///
    /// All generators are positive, so this is `t > 0` plus representability.
    fn is_representable_nonzero(&self, t: u64) -> Result<bool> {
        if t == 0 {
            return Ok(false);
        }
        self.is_representable(t)
    }
}

fn check_generators(generators: &[u64]) -> Result<()> {
    if generators.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    if generators.contains(&0) {
        return Err(Error::ZeroGenerator);
    }
    Ok(())
}

/// Bit table of representable integers in `0..=bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepresentabilityTable {
    generators: Vec<u64>,
    bound: u64,
    flags: BitVec<u64, Lsb0>,
}

impl RepresentabilityTable {
    pub fn bound(&self) -> u64 {
        self.bound
    }

    /// All representable values in `0..=bound`, ascending.
    pub fn representable(&self) -> impl Iterator<Item = u64> + '_ {
        self.flags.iter_ones().map(|t| t as u64)
    }

    fn flag(&self, t: u64) -> bool {
        self.flags[t as usize]
    }
}

/// Builds the representability sieve for `generators` up to `bound`
/// (inclusive) by forward DP, `O(bound * |generators|)`.
pub fn build_sieve(generators: &[u64], bound: u64) -> Result<RepresentabilityTable> {
    check_generators(generators)?;
    let len = usize::try_from(bound)
        .ok()
        .and_then(|b| b.checked_add(1))
        .ok_or(Error::Overflow("sieve size"))?;
    let mut flags = bitvec![u64, Lsb0; 0; len];
    flags.set(0, true);
    for t in 1..len {
        let hit = generators
            .iter()
            .any(|&g| (g as usize) <= t && flags[t - g as usize]);
        if hit {
            flags.set(t, true);
        }
    }
    Ok(RepresentabilityTable {
        generators: generators.to_vec(),
        bound,
        flags,
    })
}

impl Representability for RepresentabilityTable {
    fn generators(&self) -> &[u64] {
        &self.generators
    }

    fn bound(&self) -> Option<u64> {
        Some(self.bound)
    }

    fn is_representable(&self, t: u64) -> Result<bool> {
        if t > self.bound {
            return Err(Error::OutOfBound {
                query: t,
                bound: self.bound,
            });
        }
        Ok(self.flag(t))
    }
}

/// Least representable integer in each residue class modulo the smallest
/// generator. `None` marks a class the semigroup never reaches, which
/// happens when the generators share a common factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AperyTable {
    generators: Vec<u64>,
    modulus: u64,
    least: Vec<Option<u64>>,
}

impl AperyTable {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn least(&self) -> &[Option<u64>] {
        &self.least
    }

    /// Largest non-representable integer, if the generators are coprime.
    pub fn frobenius_number(&self) -> Option<i64> {
        let max = self
            .least
            .iter()
            .copied()
            .collect::<Option<Vec<u64>>>()?
            .into_iter()
            .max()?;
        Some(max as i64 - self.modulus as i64)
    }
}

/// Builds the Apéry table of `generators` with respect to the smallest one.
///
/// Residues are relaxed with a FIFO label-correcting loop until no entry
/// improves; every edge adds a generator, so all labels are exact at the
/// fixpoint.
pub fn build_apery(generators: &[u64]) -> Result<AperyTable> {
    check_generators(generators)?;
    let modulus = *generators.iter().min().expect("nonempty");
    let size = usize::try_from(modulus).map_err(|_| Error::Overflow("apery modulus"))?;
    let steps: Vec<u64> = {
        let mut s: Vec<u64> = generators
            .iter()
            .copied()
            .filter(|&g| g % modulus != 0)
            .collect();
        s.sort_unstable();
        s.dedup();
        s
    };

    let mut least: Vec<Option<u64>> = vec![None; size];
    least[0] = Some(0);
    let mut queued = vec![false; size];
    let mut queue = VecDeque::from([0usize]);
    queued[0] = true;

    while let Some(c) = queue.pop_front() {
        queued[c] = false;
        let base = least[c].expect("queued residues are labelled");
        for &g in &steps {
            let next = base.checked_add(g).ok_or(Error::Overflow("apery label"))?;
            let nc = ((c as u64 + g) % modulus) as usize;
            if least[nc].is_none_or(|cur| next < cur) {
                least[nc] = Some(next);
                if !queued[nc] {
                    queued[nc] = true;
                    queue.push_back(nc);
                }
            }
        }
    }

    Ok(AperyTable {
        generators: generators.to_vec(),
        modulus,
        least,
    })
}

impl Representability for AperyTable {
    fn generators(&self) -> &[u64] {
        &self.generators
    }

    fn bound(&self) -> Option<u64> {
        None
    }

    fn is_representable(&self, t: u64) -> Result<bool> {
        let c = (t % self.modulus) as usize;
        Ok(self.least[c].is_some_and(|l| t >= l))
    }
}

/// Obstruction set computed from a prebuilt representability table:
/// `r` lies in the set iff `r - m_i` is a nonzero combination of the prefix
/// for some `i`.
pub fn obstruction_set_fast<T: Representability + ?Sized>(
    prefix: &[u64],
    window: u64,
    table: &T,
) -> Result<ObstructionSet> {
    validate_prefix(prefix)?;
    if window < 1 {
        return Err(Error::InvalidWindow);
    }
    let mut have = table.generators().to_vec();
    have.sort_unstable();
    have.dedup();
    if have != prefix {
        return Err(Error::GeneratorMismatch {
            table: table.generators().to_vec(),
            prefix: prefix.to_vec(),
        });
    }
    let (lower, upper) = ObstructionSet::window_bounds(prefix, window)?;
    if let Some(bound) = table.bound() {
        if bound < upper {
            return Err(Error::OutOfBound {
                query: upper,
                bound,
            });
        }
    }

    let mut elements = Vec::new();
    for r in lower + 1..upper {
        for &m in prefix {
            if m < r && table.is_representable_nonzero(r - m)? {
                elements.push(r);
                break;
            }
        }
    }
    Ok(ObstructionSet::from_parts(prefix, window, elements))
}
