//! Color a graph, check the coloring, and compute `srd` and `rd` exactly.
//!
//! ```text
//! cargo run --example quickstart
//! ```

use std::error::Error;

use srd_kit::coloring::color_auto;
use srd_kit::connectivity::{edge_connectivity, upper_edge_connectivity};
use srd_kit::graph::parse_graph;
use srd_kit::solve::{rd_number, srd_number};
use srd_kit::verify::{is_rd_coloring, is_srd_coloring};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    // A 4-cycle with one chord.
    let g = parse_graph("4 5\n0 1\n1 2\n2 3\n3 0\n0 2\n")?;
    println!("lambda = {}, lambda+ = {}", edge_connectivity(&g)?, upper_edge_connectivity(&g)?);

    let c = color_auto(&g)?;
    println!("construction uses {} colors: {:?}", c.num_colors(), c.colors());

    let report = is_srd_coloring(&g, &c)?;
    println!("srd-coloring: {}", report.verdict);
    for ((u, v), cert) in &report.witnesses {
        println!("  {u} {v}: rainbow min cut {:?}", cert.cut.as_slice());
    }
    assert!(report.verdict);
    assert!(is_rd_coloring(&g, &c)?.verdict);

    let srd = srd_number(&g)?;
    let rd = rd_number(&g)?;
    println!("srd = {} (witness {:?}), rd = {}", srd.value, srd.witness.colors(), rd.value);
    assert_eq!((srd.value, rd.value), (3, 3));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
