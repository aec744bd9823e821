//! Regenerate both reference tables through the CLI entry point.

fn main() {
    for name in ["d-table", "f-table"] {
        let out = qcweights::cli::run(["qcweights", "table", name]);
        print!("{}", out.stdout);
        println!();
    }
}
