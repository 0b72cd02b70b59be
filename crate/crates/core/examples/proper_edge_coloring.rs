//! Proper edge colorings: fan recoloring, bipartite graphs, exact `χ'`.
//!
//! ```text
//! cargo run --example proper_edge_coloring
//! ```

use std::error::Error;

use srd_kit::coloring::{bipartite_proper_coloring, exact_chromatic_index, greedy_fan_coloring, is_proper};
use srd_kit::graph::families;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for (name, g) in [
        ("K_7", families::complete(7)),
        ("K_8", families::complete(8)),
        ("Petersen", families::petersen()),
        ("grid 4x5", families::grid(4, 5)),
    ] {
        let fan = greedy_fan_coloring(&g)?;
        assert!(is_proper(&g, &fan));
        let exact = exact_chromatic_index(&g, Some(1_000_000))?;
        println!(
            "{name}: max degree {}, fan {} colors, chromatic index {}",
            g.max_degree(),
            fan.num_colors(),
            exact.exact().map_or("unknown".to_string(), |x| x.to_string())
        );
    }
    let k34 = families::complete_multipartite(&[3, 4]);
    let c = bipartite_proper_coloring(&k34)?;
    println!("K_{{3,4}}: {} colors", c.num_colors());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
