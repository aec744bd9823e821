//! The three obstruction-set backends side by side, plus the semigroup
//! tables behind them.

use std::time::Instant;

use qcweights::{build_apery, build_sieve, obstruction_set, obstruction_set_fast, Backend};

fn main() -> qcweights::Result<()> {
    let prefix = [7u64, 11, 13, 17];
    let window = 3;

    for backend in Backend::ALL {
        let started = Instant::now();
        let set = obstruction_set(&prefix, window, backend)?;
        println!(
            "{backend:>6}: {} elements in {:?}",
            set.len(),
            started.elapsed()
        );
    }

    // one table reused across windows
    let apery = build_apery(&prefix)?;
    println!(
        "frobenius number of <7, 11, 13, 17>: {:?}",
        apery.frobenius_number()
    );
    for window in 1..=5 {
        let set = obstruction_set_fast(&prefix, window, &apery)?;
        println!("  M = {window}: |I| = {}", set.len());
    }

    let sieve = build_sieve(&[6, 10, 15], 40)?;
    let reps: Vec<u64> = sieve.representable().collect();
    println!("<6, 10, 15> up to 40: {reps:?}");
    Ok(())
}
