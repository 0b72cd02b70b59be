//! The 3-SAT reduction: build the instance for one clause, turn a satisfying
//! assignment into a rainbow minimum `s`-`t` cut and read it back.
//!
//! ```text
//! cargo run --example sat_reduction > clause.dot
//! ```

use std::error::Error;

use srd_kit::graph::export_dot_labeled;
use srd_kit::reduction::{
    build_reduction, check_equivalence, cut_from_assignment, extract_assignment, parse_dimacs_cnf, sat_brute_force,
};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let phi = parse_dimacs_cnf("p cnf 3 1\n1 -2 3 0\n")?;
    let inst = build_reduction(&phi)?;
    eprintln!(
        "{} vertices, {} edges, {} colors",
        inst.graph.vertex_count(),
        inst.graph.edge_count(),
        inst.coloring.num_colors()
    );

    let a = sat_brute_force(&phi)?.expect("satisfiable");
    let cut = cut_from_assignment(&inst, &a)?;
    eprintln!("assignment {a:?} -> cut {:?}", cut.as_slice());
    assert!(inst.coloring.is_rainbow(&cut));
    assert_eq!(extract_assignment(&inst, &cut)?, a);

    let report = check_equivalence(&phi)?;
    eprintln!("search agrees with brute force: {} ({} nodes)", report.is_consistent(), report.search_nodes);

    println!("{}", export_dot_labeled(&inst.graph, Some(&inst.coloring), &inst.dot_labels())?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
