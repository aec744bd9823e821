//! Obstruction sets of a prefix over the first few windows, and the values
//! left free in each window.

use qcweights::{obstruction_set, Backend};

fn main() -> qcweights::Result<()> {
    for prefix in [[3u64, 5], [3, 7], [5, 11]] {
        println!("prefix {prefix:?}");
        for window in 1..=4 {
            let set = obstruction_set(&prefix, window, Backend::default())?;
            let (lo, hi) = set.interval();
            println!(
                "  M = {window}: ({lo}, {hi})  |I| = {:<3} free = {:?}",
                set.len(),
                set.complement()
            );
        }
    }
    Ok(())
}
