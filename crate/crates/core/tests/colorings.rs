mod common;

use proptest::prelude::*;
use srd_kit::coloring::{
    bipartite_proper_coloring, color_auto, color_by_blocks, color_cactus, color_complete,
    color_complete_multipartite, color_general_upper, color_grid, color_regular, color_tree,
    exact_chromatic_index, greedy_fan_coloring, is_proper, parse_coloring, serialize_coloring, ChromaticIndex,
};
use srd_kit::graph::{blocks, families};
use srd_kit::solve::connected_graphs;
use srd_kit::verify::is_srd_coloring;
use srd_kit::{EdgeColoring, Graph};

use common::*;

/// Valid per the verifier, and per the naive oracle when the graph is small.
fn assert_srd(g: &Graph, c: &EdgeColoring) {
    assert!(is_srd_coloring(g, c).unwrap().verdict, "{:?} {:?}", g.edges(), c.colors());
    if g.edge_count() <= 14 {
        assert!(NaiveOracle::srd(g).accepts(c.colors()), "oracle rejects {:?}", c.colors());
    }
}

fn is_bipartite(g: &Graph) -> bool {
    let mut side = vec![None; g.vertex_count()];
    for s in g.vertices() {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for &(y, _) in g.incident(x) {
                match side[y] {
                    None => {
                        side[y] = Some(!side[x].unwrap());
                        stack.push(y);
                    }
                    Some(b) if b == side[x].unwrap() => return false,
                    _ => {}
                }
            }
        }
    }
    true
}

#[test]
fn complete_graphs() {
    for n in 2..=9 {
        let (g, c) = color_complete(n).unwrap();
        assert_eq!(g, families::complete(n));
        assert_eq!(c.num_colors(), n as u32 - 1);
        assert_srd(&g, &c);
    }
}

#[test]
fn odd_complete_graphs_have_rainbow_star() {
    for n in [3, 5, 7, 9] {
        let (g, c) = color_complete(n).unwrap();
        let rainbow = g.vertices().any(|v| c.is_rainbow(&g.incident_edges(v).collect()));
        assert!(rainbow, "K_{n}");
    }
}

#[test]
fn grids() {
    for cols in 2..=6 {
        let (g, c) = color_grid(1, cols).unwrap();
        assert_eq!(c.num_colors(), 1);
        assert_srd(&g, &c);
    }
    for rows in 2..=5 {
        for cols in rows..=6 {
            let (g, c) = color_grid(rows, cols).unwrap();
            assert_eq!(g, families::grid(rows, cols));
            let expected = match rows {
                2 if cols == 2 => 2,
                2 | 3 => 3,
                _ => 4,
            };
            assert_eq!(c.num_colors(), expected, "G_{{{rows},{cols}}}");
            assert_srd(&g, &c);
        }
    }
    // Orientation does not matter.
    let (g, c) = color_grid(5, 2).unwrap();
    assert_srd(&g, &c);
}

#[test]
fn two_row_grids_need_three_colors() {
    for cols in 3..=4 {
        let g = families::grid(2, cols);
        assert_eq!(srd_kit::connectivity::upper_edge_connectivity(&g).unwrap(), 3);
        let opts = srd_kit::solve::SolveOptions { lower: Some(1), ..Default::default() };
        assert_eq!(srd_kit::solve::srd_number_with(&g, &opts).unwrap().value, 3);
    }
}

#[test]
fn complete_multipartite() {
    let cases: &[(&[usize], u32)] = &[
        (&[1, 1], 1),
        (&[1, 2], 1),
        (&[1, 1, 2], 3),
        (&[1, 2, 2], 3),
        (&[2, 2], 2),
        (&[2, 3], 3),
        (&[2, 2, 2], 4),
        (&[1, 1, 1, 1], 3),
        (&[1, 3, 3], 4),
        (&[3, 3], 3),
    ];
    for &(parts, expected) in cases {
        let (g, c) = color_complete_multipartite(parts).unwrap();
        assert_eq!(g, families::complete_multipartite(parts));
        assert_eq!(c.num_colors(), expected, "{parts:?}");
        assert_srd(&g, &c);
    }
    assert!(color_complete_multipartite(&[3]).is_err());
    assert!(color_complete_multipartite(&[2, 1]).is_err());
    assert!(color_complete_multipartite(&[0, 2]).is_err());
}

#[test]
fn odd_multipartite_has_rainbow_vertex() {
    for parts in [&[1, 2, 2][..], &[1, 1, 1, 2, 2]] {
        let (g, c) = color_complete_multipartite(parts).unwrap();
        assert!(g.vertices().any(|v| c.is_rainbow(&g.incident_edges(v).collect())), "{parts:?}");
    }
}

#[test]
fn regular_graphs() {
    let graphs = [families::cycle(6), families::complete(4), families::petersen(), families::grid(1, 2)];
    for g in graphs.iter().filter(|g| g.is_regular().is_some()) {
        let c = color_regular(g).unwrap();
        let k = g.is_regular().unwrap() as u32;
        assert!(c.num_colors() <= k + 1);
        assert_srd(g, &c);
    }
    assert_eq!(color_regular(&families::petersen()).unwrap().num_colors(), 4);
    assert!(color_regular(&families::path(3)).is_err());
}

#[test]
fn trees_and_cacti() {
    for g in (2..=6).flat_map(connected_graphs) {
        if g.is_tree() {
            let c = color_tree(&g).unwrap();
            assert_eq!(c.num_colors(), 1);
            assert_srd(&g, &c);
            assert!(color_cactus(&g).is_err());
        } else if g.is_cactus_with_cycle() {
            let c = color_cactus(&g).unwrap();
            assert_eq!(c.num_colors(), 2);
            assert_srd(&g, &c);
        } else {
            assert!(color_cactus(&g).is_err());
            assert!(color_tree(&g).is_err());
        }
    }
}

#[test]
fn general_upper_bound_on_small_graphs() {
    for g in (3..=6).flat_map(connected_graphs) {
        let c = color_general_upper(&g).unwrap();
        assert!((c.num_colors() as usize) < g.edge_count());
        assert_srd(&g, &c);
    }
}

#[test]
fn auto_and_block_gluing() {
    for g in (1..=6).flat_map(connected_graphs) {
        let c = color_auto(&g).unwrap();
        if g.edge_count() > 0 {
            assert_srd(&g, &c);
        }
        let dec = blocks(&g).unwrap();
        let parts: Vec<EdgeColoring> = dec
            .blocks
            .iter()
            .map(|b| color_auto(&g.edge_subgraph(&b.edges).graph).unwrap())
            .collect();
        let glued = color_by_blocks(&g, &dec, &parts).unwrap();
        let max = parts.iter().map(|p| p.num_colors()).max().unwrap_or(0);
        assert_eq!(glued.num_colors(), max);
        if g.edge_count() > 0 {
            assert_srd(&g, &glued);
        }
    }
}

fn brute_chromatic_index(g: &Graph) -> u32 {
    (1..=g.max_degree() as u32 + 1)
        .find(|&k| all_colorings(g.edge_count(), k).any(|c| is_proper(g, &EdgeColoring::new(c).unwrap())))
        .unwrap()
}

#[test]
fn chromatic_index_matches_brute_force() {
    for g in (2..=5).flat_map(connected_graphs).filter(|g| g.edge_count() <= 8) {
        let exact = exact_chromatic_index(&g, None).unwrap();
        let ChromaticIndex::Exact { value, coloring } = exact else { panic!("unbounded search") };
        assert!(is_proper(&g, &coloring));
        assert_eq!(coloring.num_colors(), value);
        let d = g.max_degree() as u32;
        assert!(value == d || value == d + 1);
        assert_eq!(value, brute_chromatic_index(&g), "{:?}", g.edges());
    }
}

#[test]
fn chromatic_index_budget_reports_bounds() {
    let res = exact_chromatic_index(&families::petersen(), Some(1)).unwrap();
    match res {
        ChromaticIndex::Unknown { lower, upper, coloring } => {
            assert_eq!((lower, upper), (3, 4));
            assert!(is_proper(&families::petersen(), &coloring));
        }
        ChromaticIndex::Exact { value, .. } => assert_eq!(value, 4),
    }
}

#[test]
fn bipartite_uses_max_degree() {
    for g in (2..=6).flat_map(connected_graphs).filter(is_bipartite) {
        let c = bipartite_proper_coloring(&g).unwrap();
        assert!(is_proper(&g, &c));
        assert_eq!(c.num_colors() as usize, g.max_degree());
    }
    assert!(bipartite_proper_coloring(&families::cycle(5)).is_err());
}

#[test]
fn coloring_format() {
    let c = parse_coloring("colors 2\n1\n2\n1").unwrap();
    assert_eq!(c.colors(), &[1, 2, 1]);
    assert_eq!(parse_coloring("1\n2\n1").unwrap(), c);
    assert_eq!(parse_coloring(&serialize_coloring(&c)).unwrap(), c);
    assert!(parse_coloring("1\n0").is_err());
    assert!(parse_coloring("colors 1\n1\n2").is_err());
    assert!(parse_coloring("1\ncolors 2").is_err());
}

prop_compose! {
    fn arb_simple_graph()(n in 2usize..9)(
        n in Just(n),
        mask in prop::collection::vec(any::<bool>(), n * (n - 1) / 2),
    ) -> Graph {
        let pairs = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
        let edges = pairs.zip(mask).filter(|(_, keep)| *keep).map(|(p, _)| p).collect();
        Graph::new(n, edges).unwrap()
    }
}

proptest! {
    #[test]
    fn fan_coloring_is_proper_within_vizing(g in arb_simple_graph()) {
        let c = greedy_fan_coloring(&g).unwrap();
        prop_assert!(is_proper(&g, &c));
        prop_assert!(c.num_colors() as usize <= g.max_degree() + 1);
    }

    #[test]
    fn auto_coloring_verifies(seed in 0u64..500) {
        let n = 3 + (seed % 5) as usize;
        let g = random_connected(n, (seed % 7) as usize, seed);
        let c = color_auto(&g).unwrap();
        prop_assert!(is_srd_coloring(&g, &c).unwrap().verdict);
        prop_assert!((c.num_colors() as usize) < g.edge_count() || g.edge_count() == 1);
    }
}
