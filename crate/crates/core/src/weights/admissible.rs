use std::collections::BTreeSet;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::{
    classify_sequence, gcd_all, is_in_class, obstruction_set, validate_prefix, Backend, WeightTuple,
};
use crate::counting::is_prime;
use crate::error::{Error, Result};

/// Every `s` in the open window `M` of `prefix` such that `prefix ++ [s]` is
/// a valid weight in the class: `s` avoids the obstruction set, exceeds the
/// last prefix entry, and makes the overall gcd 1.
///
/// The prefix itself only has to be strictly increasing and in the class;
/// its gcd may exceed 1.
pub fn enumerate_admissible(prefix: &[u64], window: u64) -> Result<Vec<u64>> {
    enumerate_admissible_with(prefix, window, Backend::Sieve)
}

/// [`enumerate_admissible`] with an explicit obstruction-set backend.
pub fn enumerate_admissible_with(
    prefix: &[u64],
    window: u64,
    backend: Backend,
) -> Result<Vec<u64>> {
    validate_prefix(prefix)?;
    if window < 1 {
        return Err(Error::InvalidWindow);
    }
    if classify_sequence(prefix)?.1.is_some() {
        return Err(Error::PrefixNotInClass(prefix.to_vec()));
    }
    let iset = obstruction_set(prefix, window, backend)?;
    let last = *prefix.last().expect("validated prefix");
    let g = gcd_all(prefix);

    let admissible: Vec<u64> = iset
        .complement()
        .into_iter()
        .filter(|&s| s > last && g.gcd(&s) == 1)
        .collect();

    for &s in &admissible {
        let mut m = prefix.to_vec();
        m.push(s);
        let verdict = is_in_class(&WeightTuple::new(m)?);
        if !verdict.in_class {
            return Err(Error::OracleMismatch(format!(
                "admissible value {s} rejected by the class test: {:?}",
                verdict.failure
            )));
        }
    }
    Ok(admissible)
}

/// Sufficient conditions for linearity of three-dimensional weights.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum N3Criterion {
    /// `3 <= m_1`, `m_1 ∤ m_2`, `m_1 ∤ m_3`, `m_1 + m_2 > m_3`.
    BasicCriterion,
    /// `m_2 = p_1`, `m_3 = p_2` odd primes with `5 <= p_1` and
    /// `p_2 - p_1 < m_1 < p_1`.
    PrimePair,
    /// `(m_2, m_3)` twin primes other than `(3, 5)` and `3 <= m_1 < m_2`.
    TwinPrime,
    /// `3 <= m_1 < m_2 < m_3 < 2·m_1`.
    DoublingBound,
}

impl N3Criterion {
    pub fn tag(self) -> &'static str {
        match self {
            N3Criterion::BasicCriterion => "basic-criterion",
            N3Criterion::PrimePair => "prime-pair",
            N3Criterion::TwinPrime => "twin-prime",
            N3Criterion::DoublingBound => "doubling-bound",
        }
    }
}

/// Which of the sufficient criteria hold for a weight of length 3.
pub fn check_n3_criteria(m: &WeightTuple) -> Result<BTreeSet<N3Criterion>> {
    let &[m1, m2, m3] = m.as_slice() else {
        return Err(Error::WrongArity {
            expected: 3,
            got: m.len(),
        });
    };
    let mut tags = BTreeSet::new();

    if m1 >= 3 && m2 % m1 != 0 && m3 % m1 != 0 && m1 + m2 > m3 {
        tags.insert(N3Criterion::BasicCriterion);
    }
    let odd_primes = m2 % 2 == 1 && m3 % 2 == 1 && is_prime(m2) && is_prime(m3);
    if odd_primes && m2 >= 5 && m3 - m2 < m1 && m1 < m2 {
        tags.insert(N3Criterion::PrimePair);
    }
    if odd_primes && m3 == m2 + 2 && (m2, m3) != (3, 5) && m1 >= 3 && m1 < m2 {
        tags.insert(N3Criterion::TwinPrime);
    }
    if m1 >= 3 && m3 < 2 * m1 {
        tags.insert(N3Criterion::DoublingBound);
    }
    Ok(tags)
}

#[cfg(test)]
mod tests {
    use super::*;
    use N3Criterion::*;

    fn w(m: &[u64]) -> WeightTuple {
        WeightTuple::new(m.to_vec()).unwrap()
    }

    #[test]
    fn admissible_sets() {
        assert_eq!(
            enumerate_admissible(&[5, 7], 2).unwrap(),
            vec![13, 16, 18, 23]
        );
        assert_eq!(enumerate_admissible(&[3, 7], 2).unwrap(), vec![11]);
        assert!(enumerate_admissible(&[3, 5], 2).unwrap().is_empty());
        assert_eq!(enumerate_admissible(&[3, 13], 2).unwrap(), vec![17, 20, 23]);
        assert_eq!(enumerate_admissible(&[3, 5], 1).unwrap(), vec![7]);
    }

    #[test]
    fn admissible_filters_gcd() {
        // (6, 10) is in the class literally; 14 would leave gcd 2
        let raw = obstruction_set(&[6, 10], 1, Backend::Brute)
            .unwrap()
            .complement();
        assert_eq!(
            raw.into_iter().filter(|&s| s > 10).collect::<Vec<_>>(),
            vec![11, 13, 14, 15]
        );
        assert_eq!(enumerate_admissible(&[6, 10], 1).unwrap(), vec![11, 13, 15]);
    }

    #[test]
    fn admissible_errors() {
        assert_eq!(
            enumerate_admissible(&[3, 6], 2),
            Err(Error::PrefixNotInClass(vec![3, 6]))
        );
        assert_eq!(enumerate_admissible(&[3, 5], 0), Err(Error::InvalidWindow));
        assert_eq!(
            enumerate_admissible(&[1, 5], 1),
            Err(Error::PrefixNotInClass(vec![1, 5]))
        );
    }

    #[test]
    fn criteria() {
        assert_eq!(
            check_n3_criteria(&w(&[4, 5, 7])).unwrap(),
            BTreeSet::from([BasicCriterion, PrimePair, TwinPrime, DoublingBound])
        );
        // (5, 7) is a twin pair other than (3, 5) and 3 <= 3 < 5
        assert_eq!(
            check_n3_criteria(&w(&[3, 5, 7])).unwrap(),
            BTreeSet::from([BasicCriterion, PrimePair, TwinPrime])
        );
        assert!(check_n3_criteria(&w(&[3, 4, 8])).unwrap().is_empty());
        assert_eq!(
            check_n3_criteria(&w(&[2, 3, 5, 7])),
            Err(Error::WrongArity {
                expected: 3,
                got: 4
            })
        );
    }

    #[test]
    fn criteria_imply_membership() {
        for a in 1..30u64 {
            for b in a + 1..40 {
                for c in b + 1..60 {
                    let Ok(m) = WeightTuple::new(vec![a, b, c]) else {
                        continue;
                    };
                    let tags = check_n3_criteria(&m).unwrap();
                    if !tags.is_empty() {
                        assert!(is_in_class(&m).in_class, "{m} {tags:?}");
                    }
                }
            }
        }
    }
}
