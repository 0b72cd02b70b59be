//! Regular graphs: a proper coloring makes every vertex star a rainbow
//! minimum cut. The Petersen graph is cubic but needs four colors.
//!
//! ```text
//! cargo run --release --example regular_graphs [-- --slow]
//! ```
//!
//! With `--slow` every canonical 3-coloring of the Petersen graph is
//! checked, proving `srd = 4`.

use std::error::Error;

use srd_kit::coloring::{color_regular, exact_chromatic_index};
use srd_kit::graph::families;
use srd_kit::solve::{srd_number_with, SolveOptions};
use srd_kit::verify::is_srd_coloring;

fn run(slow: bool) -> Result<(), Box<dyn Error>> {
    for (name, g) in [
        ("C_7", families::cycle(7)),
        ("K_4", families::complete(4)),
        ("K_5", families::complete(5)),
        ("K_{3,3}", families::complete_multipartite(&[3, 3])),
        ("Petersen", families::petersen()),
    ] {
        let chi = exact_chromatic_index(&g, None)?.exact().expect("unbounded search");
        let c = color_regular(&g)?;
        let ok = is_srd_coloring(&g, &c)?.verdict;
        println!("{name}: {}-regular, chromatic index {chi}, coloring valid = {ok}", g.max_degree());
        assert!(ok);
    }
    if slow {
        let opts = SolveOptions { max_edges: usize::MAX, ..SolveOptions::default() };
        let res = srd_number_with(&families::petersen(), &opts)?;
        println!("Petersen: srd = {} after {} canonical 3-colorings", res.value, res.colorings_tested);
    }
    Ok(())
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    run(false)
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run(std::env::args().any(|a| a == "--slow")) {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
