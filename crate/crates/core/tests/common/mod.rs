//! Brute-force oracles shared by the integration suites. Nothing here calls
//! into the sieve, Apéry or obstruction-set code paths it is used to check.

#![allow(dead_code)]

use std::collections::BTreeSet;

/// Every value `Σ g_q k_q <= bound` reached by nested loops over
/// `k_q <= bound / g_q`.
pub fn reachable(generators: &[u64], bound: u64) -> Vec<bool> {
    let mut hit = vec![false; bound as usize + 1];
    fn walk(gens: &[u64], q: usize, value: u64, bound: u64, hit: &mut [bool]) {
        if q == gens.len() {
            hit[value as usize] = true;
            return;
        }
        let mut v = value;
        while v <= bound {
            walk(gens, q + 1, v, bound, hit);
            v += gens[q];
        }
    }
    walk(generators, 0, 0, bound, &mut hit);
    hit
}

/// Lattice points the oracle above visits, roughly `Π(bound/g_q) / l!`.
pub fn oracle_cost(generators: &[u64], bound: u64) -> f64 {
    let mut cost = 1.0;
    for (idx, &g) in generators.iter().enumerate() {
        cost *= (bound as f64 / g as f64 + 1.0) / (idx as f64 + 1.0);
    }
    cost
}

/// The obstruction set by literal enumeration of r-values
/// `m_i + Σ m_q k_q` with `k ≠ 0`, `k_q <= M·Σ / m_q`.
pub fn obstruction_oracle(prefix: &[u64], window: u64) -> Vec<u64> {
    let sum: u64 = prefix.iter().sum();
    let (lower, upper) = ((window - 1) * sum, window * sum);
    let mut out = BTreeSet::new();
    let mut k = vec![0u64; prefix.len()];
    fn walk(
        prefix: &[u64],
        q: usize,
        k: &mut [u64],
        lower: u64,
        upper: u64,
        out: &mut BTreeSet<u64>,
    ) {
        if q == prefix.len() {
            if k.iter().all(|&v| v == 0) {
                return;
            }
            let combo: u64 = prefix.iter().zip(k.iter()).map(|(m, kq)| m * kq).sum();
            for &mi in prefix {
                let r = mi + combo;
                if r > lower && r < upper {
                    out.insert(r);
                }
            }
            return;
        }
        let cap = upper / prefix[q];
        let partial: u64 = prefix[..q].iter().zip(k.iter()).map(|(m, kq)| m * kq).sum();
        for v in 0..=cap {
            if partial + v * prefix[q] >= upper {
                break;
            }
            k[q] = v;
            walk(prefix, q + 1, k, lower, upper, out);
        }
        k[q] = 0;
    }
    walk(prefix, 0, &mut k, lower, upper, &mut out);
    out.into_iter().collect()
}

/// Resonances `(i, j, k)` by looping over the full box
/// `k_r <= (m_j - m_i) / m_r`, sorted.
pub fn resonance_oracle(m: &[u64]) -> Vec<(usize, usize, Vec<u64>)> {
    let mut out = Vec::new();
    for j in 2..=m.len() {
        for i in 1..j {
            let target = m[j - 1] - m[i - 1];
            let caps: Vec<u64> = m[..j - 1].iter().map(|&mr| target / mr).collect();
            let mut k = vec![0u64; j - 1];
            loop {
                let s: u64 = m.iter().zip(k.iter()).map(|(a, b)| a * b).sum();
                if m[i - 1] + s == m[j - 1] {
                    out.push((i, j, k.clone()));
                }
                // odometer step
                let mut pos = 0;
                loop {
                    if pos == k.len() {
                        break;
                    }
                    if k[pos] < caps[pos] {
                        k[pos] += 1;
                        break;
                    }
                    k[pos] = 0;
                    pos += 1;
                }
                if pos == k.len() {
                    break;
                }
            }
        }
    }
    out.sort();
    out
}

/// Class membership straight from the recursive definition, searching every
/// window `M` with the literal obstruction set.
pub fn class_oracle(m: &[u64]) -> bool {
    if m[0] < 2 || m[1].is_multiple_of(m[0]) {
        return false;
    }
    for j in 3..=m.len() {
        let prefix = &m[..j - 1];
        let sum: u64 = prefix.iter().sum();
        let mj = m[j - 1];
        let ok = (1..=mj / sum + 1).any(|window| {
            window * sum > mj
                && mj > (window - 1) * sum
                && !obstruction_oracle(prefix, window).contains(&mj)
        });
        if !ok {
            return false;
        }
    }
    true
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn trial_prime(n: u64) -> bool {
    n >= 2
        && (2..n)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

pub fn primes_in(lo: u64, hi: u64) -> Vec<u64> {
    (lo..=hi).filter(|&n| trial_prime(n)).collect()
}
