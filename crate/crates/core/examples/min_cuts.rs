//! Local edge connectivity and all minimum cuts of a pair.
//!
//! ```text
//! cargo run --example min_cuts
//! ```

use std::error::Error;

use srd_kit::connectivity::{enumerate_min_cuts, local_edge_connectivity, min_edge_cut, upper_edge_connectivity};
use srd_kit::graph::families;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let c6 = families::cycle(6);
    println!("C_6: lambda(0,3) = {}", local_edge_connectivity(&c6, 0, 3)?);
    let cuts = enumerate_min_cuts(&c6, 0, 3, usize::MAX)?;
    for cert in &cuts {
        println!("  {:?}", cert.cut.as_slice());
    }
    assert_eq!(cuts.len(), 9);

    let pet = families::petersen();
    let cert = min_edge_cut(&pet, 0, 7)?;
    println!("Petersen: min 0-7 cut {:?}, lambda+ = {}", cert.cut.as_slice(), upper_edge_connectivity(&pet)?);
    let all = enumerate_min_cuts(&pet, 0, 7, usize::MAX)?;
    println!("Petersen: {} minimum 0-7 cuts", all.len());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
