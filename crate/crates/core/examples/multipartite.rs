//! Complete multipartite graphs.
//!
//! ```text
//! cargo run --example multipartite
//! ```

use std::error::Error;

use srd_kit::coloring::color_complete_multipartite;
use srd_kit::solve::srd_number;
use srd_kit::verify::is_srd_coloring;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for parts in [&[1, 2][..], &[2, 3], &[1, 1, 2], &[1, 2, 2], &[2, 2, 2], &[1, 3, 3], &[2, 2, 3, 3]] {
        let (g, c) = color_complete_multipartite(parts)?;
        let ok = is_srd_coloring(&g, &c)?.verdict;
        print!("K_{parts:?}: {} vertices, {} colors, valid = {ok}", g.vertex_count(), c.num_colors());
        if g.edge_count() <= 12 {
            print!(", srd = {}", srd_number(&g)?.value);
        }
        println!();
        assert!(ok);
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
