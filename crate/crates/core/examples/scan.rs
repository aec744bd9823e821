//! Parallel scan of all weights of length 3 up to a maximum entry.
//!
//! ```bash
//! cargo run -p qcweights --release --example scan -- 80
//! ```

use qcweights::scan::{scan, ScanConfig, ScanFilter};
use qcweights::Backend;

fn main() -> qcweights::Result<()> {
    let max_weight = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(40);
    let config = ScanConfig {
        n: 3,
        max_weight,
        filter: ScanFilter::All,
        backend: Backend::Apery,
        threads: 0,
    };
    let rows = scan(&config)?;
    let members = rows.iter().filter(|r| r.in_class).count();
    let free = rows.iter().filter(|r| r.resonances == 0).count();
    let disagree = rows.iter().filter(|r| ScanFilter::Disagree.keep(r)).count();
    println!("{} weights with m3 <= {max_weight}", rows.len());
    println!("  in class:        {members}");
    println!("  resonance-free:  {free}");
    println!("  class member with a resonance: {disagree}");
    Ok(())
}
