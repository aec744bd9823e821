use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{c_exponent, MultiIndex, WeightTuple};

/// A solution of `m_i + Σ_{r<j} m_r k_r = m_j` with `i < j`. `k` has length
/// `j - 1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ResonanceWitness {
    pub i: usize,
    pub j: usize,
    pub k: MultiIndex,
}

/// All resonances of `m`, sorted by `(i, j, k)`.
pub fn resonances(m: &WeightTuple) -> Vec<ResonanceWitness> {
    resonances_of(m.as_slice())
}

/// [`resonances`] on a raw increasing sequence.
pub fn resonances_of(m: &[u64]) -> Vec<ResonanceWitness> {
    let mut out = Vec::new();
    for j in 2..=m.len() {
        let coeffs = &m[..j - 1];
        for i in 1..j {
            let Some(target) = m[j - 1].checked_sub(m[i - 1]) else {
                continue;
            };
            let mut k = vec![0u64; j - 1];
            solve(coeffs, coeffs.len(), target, &mut k, &mut |k| {
                out.push(ResonanceWitness {
                    i,
                    j,
                    k: MultiIndex::new(k.to_vec()),
                })
            });
        }
    }
    out.sort();
    out
}

/// Enumerates `k[..len]` with `Σ coeffs[r]·k[r] = target`, fixing the last
/// coordinate first. Each `k_r` is bounded by `target / coeffs[r]`.
fn solve(coeffs: &[u64], len: usize, target: u64, k: &mut [u64], emit: &mut impl FnMut(&[u64])) {
    if len == 0 {
        if target == 0 {
            emit(k);
        }
        return;
    }
    let c = coeffs[len - 1];
    if len == 1 {
        if target.is_multiple_of(c) {
            k[0] = target / c;
            emit(k);
            k[0] = 0;
        }
        return;
    }
    for kr in 0..=target / c {
        k[len - 1] = kr;
        solve(coeffs, len - 1, target - kr * c, k, emit);
    }
    k[len - 1] = 0;
}

/// Checks that the zero set of the exponent `c^{(i,j)}` over all full-length
/// `k` with `|k| <= degree_bound` and `i < j` is exactly the set of
/// resonances padded with zeros to length `n`.
pub fn zero_set_equivalence_check(m: &WeightTuple, degree_bound: u64) -> bool {
    let n = m.len();
    let mut zeros = BTreeSet::new();
    for_each_bounded_index(n, degree_bound, |k| {
        let k = MultiIndex::new(k.to_vec());
        for j in 2..=n {
            for i in 1..j {
                if c_exponent(m, i, j, &k) == Ok(0) {
                    zeros.insert((i, j, k.clone()));
                }
            }
        }
    });

    let embedded: BTreeSet<_> = resonances(m)
        .into_iter()
        .filter(|w| w.k.degree() <= degree_bound)
        .map(|w| (w.i, w.j, w.k.padded(n)))
        .collect();

    zeros == embedded
}

/// Calls `f` on every `k ∈ Z_{>=0}^n` with `k_1 + ... + k_n <= bound`.
pub(crate) fn for_each_bounded_index(n: usize, bound: u64, mut f: impl FnMut(&[u64])) {
    fn rec(k: &mut Vec<u64>, n: usize, left: u64, f: &mut impl FnMut(&[u64])) {
        if k.len() == n {
            f(k);
            return;
        }
        for v in 0..=left {
            k.push(v);
            rec(k, n, left - v, f);
            k.pop();
        }
    }
    let mut k = Vec::with_capacity(n);
    rec(&mut k, n, bound, &mut f);
}
