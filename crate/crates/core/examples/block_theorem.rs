//! `srd` of a graph is the largest `srd` over its blocks.
//!
//! ```text
//! cargo run --example block_theorem
//! ```

use std::error::Error;

use srd_kit::graph::{blocks, families, parse_graph};
use srd_kit::solve::{srd_by_blocks, srd_number};
use srd_kit::verify::is_srd_coloring;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    // K_4 and a triangle sharing vertex 3, plus a pendant edge.
    let g = parse_graph("7 10\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n3 4\n4 5\n5 3\n5 6\n")?;
    let dec = blocks(&g)?;
    for (i, b) in dec.blocks.iter().enumerate() {
        let view = &b.view.graph;
        println!("block {i}: vertices {:?}, srd = {}", b.vertices.as_slice(), srd_number(view)?.value);
    }
    println!("cut vertices: {:?}", dec.cut_vertices.as_slice());

    let glued = srd_by_blocks(&g)?;
    println!("by blocks: srd = {}, glued witness {:?}", glued.value, glued.witness.colors());
    assert!(is_srd_coloring(&g, &glued.witness)?.verdict);
    assert_eq!(glued.value, srd_number(&g)?.value);

    let bowtie = families::bowtie();
    println!("bowtie: srd = {}", srd_by_blocks(&bowtie)?.value);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
