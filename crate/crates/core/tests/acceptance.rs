//! Acceptance criteria. Every criterion is exact and carries a wall-clock
//! limit; the runner prints one PASS/FAIL line per criterion and fails if
//! any of them fails.
//!
//! Run with `cargo test -p qcweights --test acceptance -- --nocapture` to see
//! the report.

mod common;

use std::time::{Duration, Instant};

use common::*;
use qcweights::cli;
use qcweights::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

type Check = std::result::Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn run_json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["qcweights", "--format", "json"];
    full.extend_from_slice(args);
    let out = cli::run(full);
    let v = serde_json::from_str(&out.stdout).unwrap_or(Value::Null);
    (out.code, v)
}

fn table_1() -> Check {
    let expected: [(u64, i64, &[u64]); 5] = [
        (11, 7, &[17, 18, 19, 23, 24, 28, 29]),
        (13, 8, &[19, 21, 22, 24, 27, 29, 32, 34]),
        (17, 11, &[23, 24, 26, 28, 29, 31, 33, 36, 38, 41, 43]),
        (19, 12, &[26, 27, 28, 31, 32, 33, 36, 37, 41, 42, 46, 47]),
        (
            23,
            14,
            &[29, 31, 32, 34, 36, 37, 39, 41, 42, 44, 47, 49, 52, 54],
        ),
    ];
    let rows = table_d(5, &expected.map(|e| e.0)).map_err(|e| e.to_string())?;
    for ((m2, d, gaps), row) in expected.iter().zip(&rows) {
        ensure!(
            row.m2 == *m2 && row.d == *d,
            "m2={m2}: d={} expected {d}",
            row.d
        );
        ensure!(row.gaps == *gaps, "m2={m2}: S={:?}", row.gaps);

        let (code, v) = run_json(&["count", "5", &m2.to_string()]);
        ensure!(code == 0, "count 5 {m2} exited {code}");
        ensure!(
            v["result"]["closed_form"]["value"] == *d,
            "count 5 {m2}: {v}"
        );
        ensure!(
            v["result"]["gap_set"] == serde_json::json!(gaps),
            "count 5 {m2}: {v}"
        );
        ensure!(v["result"]["matches"] == true, "count 5 {m2}: mismatch");
    }
    let (code, v) = run_json(&["table", "d-table"]);
    ensure!(
        code == 0 && v["result"]["rows"].as_array().map(Vec::len) == Some(5),
        "table d-table: {v}"
    );
    Ok(())
}

fn table_2() -> Check {
    let primes = [5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47];
    let values = [0, 1, 2, 3, 4, 5, 6, 8, 9, 11, 12, 13, 14];
    let rows = table_f(&primes).map_err(|e| e.to_string())?;
    let got: Vec<i64> = rows.iter().map(|r| r.f).collect();
    ensure!(got == values, "f values {got:?}");
    let (code, v) = run_json(&["table", "f-table"]);
    ensure!(code == 0, "table f-table exited {code}");
    let cli_values: Vec<i64> = v["result"]["rows"]
        .as_array()
        .ok_or("no rows")?
        .iter()
        .map(|r| r["f"].as_i64().unwrap_or(-1))
        .collect();
    ensure!(cli_values == values, "cli f values {cli_values:?}");
    Ok(())
}

fn m1_three_gap_sets() -> Check {
    let expected: [(u64, &[u64]); 8] = [
        (5, &[]),
        (7, &[11]),
        (11, &[16, 19]),
        (13, &[17, 20, 23]),
        (17, &[22, 25, 28, 31]),
        (19, &[23, 26, 29, 32, 35]),
        (23, &[28, 31, 34, 37, 40, 43]),
        (29, &[34, 37, 40, 43, 46, 49, 52, 55]),
    ];
    for (m2, gaps) in expected {
        let r = closed_form_count(3, m2).map_err(|e| e.to_string())?;
        ensure!(r.gap_set == gaps, "(3, {m2}): S={:?}", r.gap_set);
        ensure!(r.matches == Some(true), "(3, {m2}): closed form mismatch");
        let admissible = enumerate_admissible(&[3, m2], 2).map_err(|e| e.to_string())?;
        ensure!(admissible == gaps, "(3, {m2}): admissible {admissible:?}");
    }
    Ok(())
}

fn obstruction_goldens() -> Check {
    let cases: [(&[u64], Vec<u64>); 2] = [
        (&[3, 7], (12..=19).collect()),
        (&[3, 5], (9..=15).collect()),
    ];
    for (prefix, expected) in cases {
        ensure!(
            obstruction_oracle(prefix, 2) == expected,
            "oracle {prefix:?}"
        );
        for backend in Backend::ALL {
            let set = obstruction_set(prefix, 2, backend).map_err(|e| e.to_string())?;
            ensure!(
                set.elements() == expected.as_slice(),
                "{prefix:?} {backend}: {:?}",
                set.elements()
            );
        }
    }
    Ok(())
}

fn classification_goldens() -> Check {
    for (m, window) in [([3u64, 5, 7], 1u64), ([4, 5, 7], 1), ([3, 7, 11], 2)] {
        let v = is_in_class(&WeightTuple::new(m.to_vec()).map_err(|e| e.to_string())?);
        ensure!(v.in_class && v.witnesses == [window], "{m:?}: {v:?}");
    }
    for window in 2..=10u64 {
        let (lower, upper) = ((window - 1) * 8, window * 8);
        let gaps = obstruction_set(&[3, 5], window, Backend::Brute)
            .map_err(|e| e.to_string())?
            .complement();
        ensure!(gaps.is_empty(), "N={window}: gaps {gaps:?}");
        for m3 in lower + 1..upper {
            if let Ok(w) = WeightTuple::new(vec![3, 5, m3]) {
                ensure!(!is_in_class(&w).in_class, "(3, 5, {m3}) classified in");
            }
        }
    }
    Ok(())
}

fn members_resonance_free() -> Check {
    let mut members = 0;
    for a in 1..=58u64 {
        for b in a + 1..=59 {
            for c in b + 1..=60 {
                let Ok(w) = WeightTuple::new(vec![a, b, c]) else {
                    continue;
                };
                if is_in_class(&w).in_class {
                    members += 1;
                    let found = resonances(&w);
                    ensure!(found.is_empty(), "{w} in class with resonances {found:?}");
                }
            }
        }
    }
    ensure!(members > 0, "no members found");
    let (code, v) = run_json(&["scan", "--n", "3", "--max", "60", "--filter", "disagree"]);
    ensure!(code == 0, "scan disagree exited {code}");
    ensure!(
        v["result"]["count"] == 0,
        "scan disagree rows: {}",
        v["result"]["count"]
    );
    Ok(())
}

fn closed_forms_vs_enumeration() -> Check {
    let primes = primes_in(5, 200);
    for (idx, &m1) in primes.iter().enumerate() {
        for &m2 in &primes[idx + 1..] {
            let r = closed_form_count(m1, m2).map_err(|e| e.to_string())?;
            ensure!(r.closed_form.is_some(), "({m1}, {m2}) has no closed form");
            ensure!(
                r.matches == Some(true),
                "({m1}, {m2}): {:?} vs {}",
                r.closed_form,
                r.gap_set.len()
            );
        }
    }
    for m2 in primes {
        let r = closed_form_count(3, m2).map_err(|e| e.to_string())?;
        ensure!(
            r.closed_form.map(|c| c.kind) == Some(ClosedFormKind::F),
            "(3, {m2}) not covered by f"
        );
        ensure!(
            r.matches == Some(true),
            "(3, {m2}): {:?} vs {}",
            r.closed_form,
            r.gap_set.len()
        );
    }
    Ok(())
}

fn shift_monotonicity() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0008);
    for _ in 0..50 {
        let m1 = rng.gen_range(1..50u64);
        let m2 = rng.gen_range(m1 + 1..=50u64);
        for window in 1..=10u64 {
            let a =
                obstruction_set(&[m1, m2], window, Backend::Sieve).map_err(|e| e.to_string())?;
            let b = obstruction_set(&[m1, m2], window + 1, Backend::Sieve)
                .map_err(|e| e.to_string())?;
            ensure!(
                a.len() <= b.len(),
                "({m1}, {m2}) N={window}: {} > {}",
                a.len(),
                b.len()
            );
        }
    }
    Ok(())
}

const ORACLE_BUDGET: f64 = 1e6;

fn backend_equivalence() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0009);
    let mut set_checks = 0;
    for case in 0..200 {
        let mut gens: Vec<u64>;
        loop {
            let size = rng.gen_range(2..=6usize);
            gens = (0..size).map(|_| rng.gen_range(1..=500u64)).collect();
            let mut distinct = gens.clone();
            distinct.sort_unstable();
            distinct.dedup();
            if distinct.len() >= 2 {
                break;
            }
        }
        let mut prefix = gens.clone();
        prefix.sort_unstable();
        prefix.dedup();
        let sum: u64 = prefix.iter().sum();

        let mut bound = 100_000u64;
        while bound > sum && oracle_cost(&prefix, bound) > ORACLE_BUDGET {
            bound = bound * 3 / 4;
        }
        let bound = bound.max(sum);

        let oracle = reachable(&prefix, bound);
        let sieve = build_sieve(&gens, bound).map_err(|e| e.to_string())?;
        let apery = build_apery(&gens).map_err(|e| e.to_string())?;
        for t in 0..=bound {
            let want = oracle[t as usize];
            let s = sieve.is_representable(t).map_err(|e| e.to_string())?;
            let a = apery.is_representable(t).map_err(|e| e.to_string())?;
            ensure!(
                s == want && a == want,
                "case {case} {gens:?} t={t}: oracle {want} sieve {s} apery {a}"
            );
            let nz = sieve
                .is_representable_nonzero(t)
                .map_err(|e| e.to_string())?;
            ensure!(nz == (want && t > 0), "case {case} nonzero t={t}");
        }

        let prefix_sieve = build_sieve(&prefix, bound).map_err(|e| e.to_string())?;
        let prefix_apery = build_apery(&prefix).map_err(|e| e.to_string())?;
        for window in (1..=4u64).filter(|w| w * sum <= bound) {
            let expected = obstruction_oracle(&prefix, window);
            for backend in Backend::ALL {
                let set = obstruction_set(&prefix, window, backend).map_err(|e| e.to_string())?;
                ensure!(
                    set.elements() == expected.as_slice(),
                    "case {case} {prefix:?} M={window} {backend}"
                );
            }
            let fast =
                obstruction_set_fast(&prefix, window, &prefix_sieve).map_err(|e| e.to_string())?;
            ensure!(
                fast.elements() == expected.as_slice(),
                "case {case} fast sieve M={window}"
            );
            let fast =
                obstruction_set_fast(&prefix, window, &prefix_apery).map_err(|e| e.to_string())?;
            ensure!(
                fast.elements() == expected.as_slice(),
                "case {case} fast apery M={window}"
            );
            set_checks += 1;
        }
    }
    ensure!(
        set_checks >= 200,
        "only {set_checks} obstruction sets compared"
    );
    Ok(())
}

fn reduction_step() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0010);
    let mut done = 0;
    while done < 100 {
        let n = rng.gen_range(2..=5usize);
        let mut m: Vec<u64> = (0..n).map(|_| rng.gen_range(1..=40u64)).collect();
        m.sort_unstable();
        m.dedup();
        let Ok(w) = WeightTuple::new(m) else { continue };
        ensure!(
            zero_set_equivalence_check(&w, 12),
            "{w} fails the reduction check"
        );
        done += 1;
    }
    Ok(())
}

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Duration,
    check: fn() -> Check,
}

const CRITERIA: [Criterion; 10] = [
    Criterion {
        id: 1,
        name: "d table for m1 = 5",
        limit: Duration::from_secs(1),
        check: table_1,
    },
    Criterion {
        id: 2,
        name: "f table",
        limit: Duration::from_secs(1),
        check: table_2,
    },
    Criterion {
        id: 3,
        name: "gap sets for m1 = 3",
        limit: Duration::from_secs(1),
        check: m1_three_gap_sets,
    },
    Criterion {
        id: 4,
        name: "obstruction sets across backends",
        limit: Duration::from_secs(1),
        check: obstruction_goldens,
    },
    Criterion {
        id: 5,
        name: "classification goldens",
        limit: Duration::from_secs(1),
        check: classification_goldens,
    },
    Criterion {
        id: 6,
        name: "class members are resonance-free (m3 <= 60)",
        limit: Duration::from_secs(10),
        check: members_resonance_free,
    },
    Criterion {
        id: 7,
        name: "closed forms match enumeration (primes <= 200)",
        limit: Duration::from_secs(30),
        check: closed_forms_vs_enumeration,
    },
    Criterion {
        id: 8,
        name: "shift monotonicity",
        limit: Duration::from_secs(5),
        check: shift_monotonicity,
    },
    Criterion {
        id: 9,
        name: "sieve / apery / brute equivalence",
        limit: Duration::from_secs(60),
        check: backend_equivalence,
    },
    Criterion {
        id: 10,
        name: "exponent zero set equals resonances",
        limit: Duration::from_secs(30),
        check: reduction_step,
    },
];

#[test]
fn acceptance() {
    let mut failures = Vec::new();
    for c in &CRITERIA {
        let started = Instant::now();
        let outcome = (c.check)();
        let elapsed = started.elapsed();
        let verdict = match outcome {
            Ok(()) if elapsed <= c.limit => Ok(()),
            Ok(()) => Err(format!("took {elapsed:?}, limit {:?}", c.limit)),
            Err(e) => Err(e),
        };
        match &verdict {
            Ok(()) => println!("[PASS] AC{:<2} {} ({elapsed:.2?})", c.id, c.name),
            Err(e) => {
                println!("[FAIL] AC{:<2} {} ({elapsed:.2?}): {e}", c.id, c.name);
                failures.push(c.id);
            }
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
