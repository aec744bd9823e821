//! Classify weight tuples given on the command line.
//!
//! ```bash
//! cargo run -p qcweights --example classify -- 3 7 11
//! ```

use qcweights::{check_n3_criteria, is_in_class, validate_weight};

fn main() -> qcweights::Result<()> {
    let raw: Vec<i64> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let raw = if raw.is_empty() { vec![3, 7, 11] } else { raw };
    let w = validate_weight(&raw)?;
    let verdict = is_in_class(&w);
    println!("{w}: in class = {}", verdict.in_class);
    println!("windows M_j per level: {:?}", verdict.witnesses);
    if let Some(f) = &verdict.failure {
        println!("rejected: {} ({f:?})", f.tag());
    }
    if w.len() == 3 {
        let tags: Vec<_> = check_n3_criteria(&w)?
            .into_iter()
            .map(|c| c.tag())
            .collect();
        println!("sufficient criteria: {tags:?}");
    }
    Ok(())
}
