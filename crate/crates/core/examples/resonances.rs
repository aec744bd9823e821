//! Resonances of a few weights, and the exponent zero-set check.

use qcweights::{is_in_class, resonances, zero_set_equivalence_check, WeightTuple};

fn main() -> qcweights::Result<()> {
    for m in [
        vec![1, 2, 3],
        vec![2, 3, 5],
        vec![3, 5, 7],
        vec![3, 4, 5, 7],
    ] {
        let w = WeightTuple::new(m)?;
        let found = resonances(&w);
        println!(
            "{w}: in class = {}, {} resonances",
            is_in_class(&w).in_class,
            found.len()
        );
        for r in &found {
            println!("  m_{} + {:?} . m = m_{}", r.i, r.k.as_slice(), r.j);
        }
        println!(
            "  zero-set check (degree <= 10): {}",
            zero_set_equivalence_check(&w, 10)
        );
    }
    Ok(())
}
