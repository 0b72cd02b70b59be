mod common;

use std::collections::BTreeSet;

use srd_kit::graph::{blocks, families};
use srd_kit::solve::{
    canonical_colorings, conjecture_scan, connected_graphs, graph_string, rd_number_with, srd_by_blocks,
    srd_number, srd_number_with, LowerBound, RestrictedGrowth, ScanStatus, SolveOptions, UpperBound,
};
use srd_kit::{Error, Graph};

use common::*;

fn from_one() -> SolveOptions {
    SolveOptions { lower: Some(1), ..SolveOptions::default() }
}

#[test]
fn restricted_growth_is_one_per_renaming_orbit() {
    for m in 0..=6 {
        for k in 1..=4u32 {
            let got: Vec<Vec<u32>> = RestrictedGrowth::new(m, k, false).collect();
            let orbits: BTreeSet<Vec<u32>> = all_colorings(m, k).map(|c| canonicalize(&c)).collect();
            let expected: Vec<Vec<u32>> = if m == 0 { Vec::new() } else { orbits.into_iter().collect() };
            assert_eq!(got, expected, "m={m} k={k}");
            let exact: Vec<Vec<u32>> = RestrictedGrowth::new(m, k, true).collect();
            let filtered: Vec<Vec<u32>> =
                got.iter().filter(|c| c.iter().max() == Some(&k)).cloned().collect();
            assert_eq!(exact, filtered);
        }
    }
}

#[test]
fn connected_graph_classes() {
    let counts: Vec<usize> = (1..=6).map(|n| connected_graphs(n).len()).collect();
    assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
    for n in 2..=5 {
        let reps = connected_graphs(n);
        for g in labeled_connected_graphs(n) {
            let matches = reps
                .iter()
                .filter(|r| degree_signature(r) == degree_signature(&g) && isomorphic(r, &g))
                .count();
            assert_eq!(matches, 1, "{:?}", g.edges());
        }
    }
}

#[test]
fn numbers_match_brute_force() {
    let graphs = (2..=5).flat_map(connected_graphs).filter(|g| g.edge_count() <= 7);
    for g in graphs {
        let srd_oracle = NaiveOracle::srd(&g);
        let rd_oracle = NaiveOracle::rd(&g);
        for opts in [SolveOptions::default(), from_one()] {
            let srd = srd_number_with(&g, &opts).unwrap();
            assert_eq!(srd.value, brute_number(&g, &srd_oracle), "{}", graph_string(&g));
            assert!(srd_oracle.accepts(srd.witness.colors()));
            assert_eq!(srd.witness.num_colors(), srd.value);
            let rd = rd_number_with(&g, &opts).unwrap();
            assert_eq!(rd.value, brute_number(&g, &rd_oracle), "{}", graph_string(&g));
            assert!(rd_oracle.accepts(rd.witness.colors()));
        }
    }
}

/// The tested count is the position of the witness in the concatenated
/// exact-`k` enumerations, found here by a sequential oracle scan.
#[test]
fn colorings_tested_counts_up_to_witness() {
    for g in [families::complete(4), families::bowtie(), families::cycle(5), families::grid(2, 3)] {
        let oracle = NaiveOracle::srd(&g);
        let mut expected = 0u64;
        let mut first = None;
        'outer: for k in 1..=g.edge_count() as u32 {
            for c in RestrictedGrowth::new(g.edge_count(), k, true) {
                expected += 1;
                if oracle.accepts(&c) {
                    first = Some(c);
                    break 'outer;
                }
            }
        }
        let opts = SolveOptions { lower: Some(1), upper: Some(g.edge_count() as u32), ..SolveOptions::default() };
        let res = srd_number_with(&g, &opts).unwrap();
        assert_eq!(res.colorings_tested, expected, "{}", graph_string(&g));
        assert_eq!(Some(res.witness.colors().to_vec()), first);
        assert_eq!((res.bounds.lower_source, res.bounds.upper_source), (LowerBound::Given, UpperBound::Given));
    }
}

#[test]
fn parallel_search_is_deterministic() {
    for g in [families::complete(4), families::bowtie(), families::grid(2, 3), families::petersen()] {
        let base = SolveOptions { lower: Some(1), max_edges: 15, ..SolveOptions::default() };
        let one = srd_number_with(&g, &SolveOptions { jobs: 1, ..base });
        let many = srd_number_with(&g, &SolveOptions { jobs: 4, ..base });
        match (one, many) {
            (Ok(a), Ok(b)) => assert_eq!(a, b),
            (a, b) => panic!("{a:?} vs {b:?}"),
        }
    }
}

#[test]
fn block_decomposition_agrees() {
    for g in (3..=5).flat_map(connected_graphs) {
        if blocks(&g).unwrap().cut_vertices.is_empty() {
            continue;
        }
        let by_blocks = srd_by_blocks(&g).unwrap();
        assert_eq!(by_blocks.value, srd_number(&g).unwrap().value);
        assert!(NaiveOracle::srd(&g).accepts(by_blocks.witness.colors()));
    }
    assert_eq!(srd_by_blocks(&families::with_pendant(&families::complete(5), 0)).unwrap().value, 4);
}

#[test]
fn budget_and_preconditions() {
    let g = families::grid(2, 5);
    assert!(matches!(srd_number_with(&g, &from_one()), Err(Error::BudgetExceeded { lower: 1, .. })));
    assert!(srd_number(&Graph::empty(1)).is_err());
    let split = families::disjoint_union(&families::path(2), &families::path(2));
    assert!(matches!(srd_number(&split), Err(Error::Disconnected)));
    // Matching bounds skip the search entirely.
    let k6 = srd_number(&families::complete(6)).unwrap();
    assert_eq!((k6.value, k6.colorings_tested), (5, 0));
}

#[test]
fn scan_records() {
    let records: Vec<_> = conjecture_scan(connected_graphs(4), &SolveOptions::default()).collect();
    assert_eq!(records.len(), 6);
    for r in &records {
        assert_eq!(r.status, ScanStatus::Equal);
        assert!(r.chain_holds);
        assert!(r.line().ends_with(" equal"));
    }
    assert_eq!(records[0].line(), "4:0-1,0-2,0-3 1 1 equal");
    let defaults = SolveOptions::default();
    let skipped: Vec<_> = conjecture_scan(vec![families::petersen()], &defaults).collect();
    assert!(matches!(skipped[0].status, ScanStatus::Skipped { .. }));
    assert!(skipped[0].line().contains("skipped("));
}

#[test]
fn canonical_colorings_are_normalized() {
    for c in canonical_colorings(5, 3) {
        assert_eq!(c.colors().to_vec(), canonicalize(c.colors()));
    }
}
