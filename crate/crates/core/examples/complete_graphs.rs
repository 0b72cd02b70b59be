//! Complete graphs take exactly `n - 1` colors.
//!
//! ```text
//! cargo run --example complete_graphs
//! ```

use std::error::Error;

use srd_kit::coloring::color_complete;
use srd_kit::verify::is_srd_coloring;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for n in 2..=9 {
        let (g, c) = color_complete(n)?;
        let ok = is_srd_coloring(&g, &c)?.verdict;
        // For odd n some vertex sees every color.
        let rainbow_star = g.vertices().find(|&v| c.is_rainbow(&g.incident_edges(v).collect()));
        println!(
            "K_{n}: {} edges, {} colors, valid = {ok}, rainbow star at {}",
            g.edge_count(),
            c.num_colors(),
            rainbow_star.map_or("-".to_string(), |v| v.to_string())
        );
        assert!(ok && c.num_colors() == n as u32 - 1);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
