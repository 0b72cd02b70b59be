//! Every example runs to completion.

macro_rules! examples {
    ($($name:ident => $path:literal),* $(,)?) => {
        $(
            #[path = $path]
            mod $name;

            #[test]
            fn $name() {
                $name::run_example().unwrap();
            }
        )*
    };
}

examples!(
    quickstart => "../examples/quickstart.rs",
    complete_graphs => "../examples/complete_graphs.rs",
    grids => "../examples/grids.rs",
    multipartite => "../examples/multipartite.rs",
    regular_graphs => "../examples/regular_graphs.rs",
    block_theorem => "../examples/block_theorem.rs",
    min_cuts => "../examples/min_cuts.rs",
    proper_edge_coloring => "../examples/proper_edge_coloring.rs",
    conjecture_scan => "../examples/conjecture_scan.rs",
    sat_reduction => "../examples/sat_reduction.rs",
);
