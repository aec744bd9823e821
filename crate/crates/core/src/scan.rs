//! Bulk sweep over all weights of a given length with entries up to a bound.
//!
//! Work is split by the first two entries and fanned out over a rayon pool;
//! the indexed collect keeps rows in lexicographic weight order, so the
//! result does not depend on the number of threads.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weights::{
    classify_sequence, gcd_all, obstruction_set, resonances_of, Backend, Failure,
};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScanFilter {
    #[default]
    All,
    InClass,
    ResonanceFree,
    /// In the class and resonance-free.
    Both,
    /// In the class but with a resonance. Must always be empty.
    Disagree,
}

impl ScanFilter {
    pub fn name(self) -> &'static str {
        match self {
            ScanFilter::All => "all",
            ScanFilter::InClass => "in-class",
            ScanFilter::ResonanceFree => "resonance-free",
            ScanFilter::Both => "both",
            ScanFilter::Disagree => "disagree",
        }
    }

    pub fn keep(self, row: &ScanRow) -> bool {
        match self {
            ScanFilter::All => true,
            ScanFilter::InClass => row.in_class,
            ScanFilter::ResonanceFree => row.resonances == 0,
            ScanFilter::Both => row.in_class && row.resonances == 0,
            ScanFilter::Disagree => row.in_class && row.resonances > 0,
        }
    }
}

impl fmt::Display for ScanFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ScanFilter {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        [
            ScanFilter::All,
            ScanFilter::InClass,
            ScanFilter::ResonanceFree,
            ScanFilter::Both,
            ScanFilter::Disagree,
        ]
        .into_iter()
        .find(|f| f.name() == s)
        .ok_or_else(|| format!("unknown filter `{s}`"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRow {
    pub weight: Vec<u64>,
    pub in_class: bool,
    pub witnesses: Vec<u64>,
    pub failure: Option<Failure>,
    /// Number of resonances.
    pub resonances: usize,
    /// Obstruction-set size at each level `3..=n`, `None` where `m_j` sits
    /// on a window boundary.
    pub iset_sizes: Vec<Option<usize>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScanConfig {
    pub n: usize,
    pub max_weight: u64,
    pub filter: ScanFilter,
    pub backend: Backend,
    /// Worker threads; 0 picks rayon's default.
    pub threads: usize,
}

/// Evaluates one weight.
pub fn scan_row(m: &[u64], backend: Backend) -> Result<ScanRow> {
    let (witnesses, failure) = classify_sequence(m)?;
    let mut iset_sizes = Vec::with_capacity(m.len().saturating_sub(2));
    for j in 3..=m.len() {
        let prefix = &m[..j - 1];
        let sum: u64 = prefix.iter().sum();
        let mj = m[j - 1];
        iset_sizes.push(if mj.is_multiple_of(sum) {
            None
        } else {
            Some(obstruction_set(prefix, mj / sum + 1, backend)?.len())
        });
    }
    Ok(ScanRow {
        weight: m.to_vec(),
        in_class: failure.is_none(),
        witnesses,
        failure,
        resonances: resonances_of(m).len(),
        iset_sizes,
    })
}

/// All weights of length `n` with entries in `1..=max_weight` and gcd 1, in
/// lexicographic order, that pass the filter.
pub fn scan(config: &ScanConfig) -> Result<Vec<ScanRow>> {
    let ScanConfig {
        n,
        max_weight,
        filter,
        backend,
        threads,
    } = *config;
    if n < 2 {
        return Err(Error::InvalidScan(format!("length {n} is below 2")));
    }
    if max_weight < n as u64 {
        return Err(Error::InvalidScan(format!(
            "max weight {max_weight} is below the length {n}"
        )));
    }

    let heads: Vec<(u64, u64)> = (1..=max_weight)
        .flat_map(|a| (a + 1..=max_weight).map(move |b| (a, b)))
        .collect();

    let work = || -> Result<Vec<ScanRow>> {
        let chunks: Vec<Vec<ScanRow>> = heads
            .par_iter()
            .map(|&(a, b)| {
                let mut rows = Vec::new();
                let mut m = vec![a, b];
                extend(&mut m, n, max_weight, &mut |w| {
                    if gcd_all(w) != 1 {
                        return Ok(());
                    }
                    let row = scan_row(w, backend)?;
                    if filter.keep(&row) {
                        rows.push(row);
                    }
                    Ok(())
                })?;
                Ok(rows)
            })
            .collect::<Result<_>>()?;
        Ok(chunks.into_iter().flatten().collect())
    };

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::InvalidScan(format!("thread pool: {e}")))?;
    pool.install(work)
}

fn extend(
    m: &mut Vec<u64>,
    n: usize,
    max: u64,
    visit: &mut impl FnMut(&[u64]) -> Result<()>,
) -> Result<()> {
    if m.len() == n {
        return visit(m);
    }
    let last = *m.last().expect("nonempty");
    for next in last + 1..=max {
        m.push(next);
        extend(m, n, max, visit)?;
        m.pop();
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(n: usize, max_weight: u64, filter: ScanFilter) -> ScanConfig {
        ScanConfig {
            n,
            max_weight,
            filter,
            backend: Backend::Sieve,
            threads: 2,
        }
    }

    fn weights(rows: &[ScanRow]) -> Vec<Vec<u64>> {
        rows.iter().map(|r| r.weight.clone()).collect()
    }

    #[test]
    fn pairs_in_class() {
        let rows = scan(&config(2, 5, ScanFilter::InClass)).unwrap();
        assert_eq!(
            weights(&rows),
            vec![vec![2, 3], vec![2, 5], vec![3, 4], vec![3, 5], vec![4, 5]]
        );
    }

    #[test]
    fn triples_include_known_members() {
        let rows = weights(&scan(&config(3, 12, ScanFilter::InClass)).unwrap());
        for w in [[3u64, 5, 7], [4, 5, 7], [3, 7, 11]] {
            assert!(rows.contains(&w.to_vec()), "{w:?}");
        }
        assert!(!rows.contains(&vec![3, 5, 9]));
    }

    #[test]
    fn disagree_is_empty() {
        assert!(scan(&config(3, 20, ScanFilter::Disagree))
            .unwrap()
            .is_empty());
        assert!(scan(&config(4, 14, ScanFilter::Disagree))
            .unwrap()
            .is_empty());
    }

    #[test]
    fn thread_count_does_not_change_output() {
        let mut single = config(3, 18, ScanFilter::All);
        single.threads = 1;
        let mut many = single;
        many.threads = 4;
        assert_eq!(scan(&single).unwrap(), scan(&many).unwrap());
    }

    #[test]
    fn rows_are_lexicographic_and_coprime() {
        let rows = weights(&scan(&config(3, 10, ScanFilter::All)).unwrap());
        assert!(rows.windows(2).all(|w| w[0] < w[1]));
        assert!(rows.iter().all(|w| gcd_all(w) == 1));
        assert!(!rows.contains(&vec![2, 4, 6]));
    }

    #[test]
    fn row_contents() {
        let row = scan_row(&[3, 7, 11], Backend::Brute).unwrap();
        assert!(row.in_class);
        assert_eq!(row.witnesses, vec![2]);
        assert_eq!(row.iset_sizes, vec![Some(8)]);
        assert_eq!(row.resonances, 0);

        let row = scan_row(&[3, 5, 16], Backend::Sieve).unwrap();
        assert_eq!(row.iset_sizes, vec![None]);
    }

    #[test]
    fn bad_config() {
        assert!(scan(&config(1, 5, ScanFilter::All)).is_err());
        assert!(scan(&config(3, 2, ScanFilter::All)).is_err());
    }
}
