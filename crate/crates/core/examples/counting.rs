//! Gap-set counts for pairs of primes against their closed forms.

use qcweights::{closed_form_count, is_prime, s_partition};

fn main() -> qcweights::Result<()> {
    let primes: Vec<u64> = (3..60).filter(|&p| is_prime(p)).collect();
    println!(
        "{:>4} {:>4} {:>6} {:>6} {:>5}",
        "m1", "m2", "|S|", "form", "ok"
    );
    for (idx, &m1) in primes.iter().enumerate().take(4) {
        for &m2 in &primes[idx + 1..] {
            let r = closed_form_count(m1, m2)?;
            let form = r
                .closed_form
                .map(|c| c.value.to_string())
                .unwrap_or("-".into());
            println!(
                "{m1:>4} {m2:>4} {:>6} {form:>6} {:>5}",
                r.gap_set.len(),
                r.matches.unwrap_or(false)
            );
        }
    }

    let p = s_partition(5, 13)?;
    for (name, part) in ["S1", "S2", "S3", "S4"].iter().zip(p.parts()) {
        println!("(5, 13) {name}: {part:?}");
    }
    Ok(())
}
