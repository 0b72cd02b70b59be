//! Compare `rd` and `srd` on every connected graph up to `n` vertices.
//!
//! ```text
//! cargo run --release --example conjecture_scan [-- 5]
//! ```

use std::error::Error;

use srd_kit::solve::{conjecture_scan, connected_graphs, ScanStatus, SolveOptions};

fn run(n: usize) -> Result<(), Box<dyn Error>> {
    let graphs: Vec<_> = (2..=n).flat_map(connected_graphs).collect();
    let opts = SolveOptions::default();
    let mut counterexamples = 0;
    for rec in conjecture_scan(graphs, &opts) {
        println!("{}", rec.line());
        if rec.status == ScanStatus::Counterexample {
            counterexamples += 1;
        }
    }
    println!("# counterexamples: {counterexamples}");
    Ok(())
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    run(4)
}

#[allow(dead_code)]
fn main() {
    let n = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(4);
    if let Err(e) = run(n) {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
