//! Grid colorings, and why two rows already need three colors.
//!
//! ```text
//! cargo run --example grids
//! ```

use std::error::Error;

use srd_kit::coloring::color_grid;
use srd_kit::connectivity::{local_edge_connectivity, upper_edge_connectivity};
use srd_kit::graph::families::{grid, grid_vertex};
use srd_kit::verify::is_srd_coloring;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for (rows, cols) in [(1, 5), (2, 2), (2, 5), (3, 5), (4, 5), (5, 6)] {
        let (g, c) = color_grid(rows, cols)?;
        let ok = is_srd_coloring(&g, &c)?.verdict;
        println!("G_{{{rows},{cols}}}: {} colors, valid = {ok}", c.num_colors());
        assert!(ok);
    }

    // The two middle vertices of G_{2,3} have degree 3 and are joined by
    // three edge-disjoint paths.
    let g = grid(2, 3);
    let (a, b) = (grid_vertex(3, 0, 1), grid_vertex(3, 1, 1));
    println!(
        "G_{{2,3}}: lambda({a},{b}) = {}, lambda+ = {}",
        local_edge_connectivity(&g, a, b)?,
        upper_edge_connectivity(&g)?
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
