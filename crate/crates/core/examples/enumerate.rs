//! Admissible third weights for a prefix, window by window.

use qcweights::{enumerate_admissible, Error};

fn main() -> qcweights::Result<()> {
    for prefix in [[3u64, 13], [5, 7], [5, 11], [4, 6]] {
        for window in 1..=3 {
            match enumerate_admissible(&prefix, window) {
                Ok(values) => println!("{prefix:?} M = {window}: {values:?}"),
                Err(Error::PrefixNotInClass(p)) => {
                    println!("{p:?} is not in the class, nothing to extend");
                    break;
                }
                Err(e) => return Err(e),
            }
        }
    }
    Ok(())
}
