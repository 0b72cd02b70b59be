use std::path::PathBuf;
use std::process::Command;

use srd_kit::cli::run;
use srd_kit::coloring::parse_coloring;
use srd_kit::graph::{families, serialize_graph};

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli").join(name);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn srd_kit(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("srd-kit").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn write_graph(dir: &std::path::Path, name: &str, g: &srd_kit::Graph) -> String {
    let path = dir.join(name);
    std::fs::write(&path, serialize_graph(g)).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn color_then_verify_round_trip() {
    let dir = scratch("round_trip");
    let graph = dir.join("k5.graph");
    let coloring = dir.join("k5.coloring");
    let (code, out, _) = srd_kit(&[
        "color",
        "complete",
        "--n",
        "5",
        "--out-graph",
        graph.to_str().unwrap(),
        "--out-coloring",
        coloring.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(out.starts_with("# srd-kit color seed=0\n"));
    assert!(out.contains("colors=4"));
    let (code, out, _) = srd_kit(&["verify", graph.to_str().unwrap(), coloring.to_str().unwrap()]);
    assert_eq!(code, 0, "{out}");
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[1], "verdict: true");
    assert_eq!(lines.len(), 2 + 10);
    assert!(lines[2].starts_with("0 1 : 4 "));
    // The stdout form of a coloring parses as a coloring file.
    let (_, printed, _) = srd_kit(&["color", "grid", "--rows", "2", "--cols", "3"]);
    assert_eq!(parse_coloring(&printed).unwrap().num_colors(), 3);
}

#[test]
fn verify_rejects_and_reports_failing_pair() {
    let dir = scratch("reject");
    let graph = write_graph(&dir, "c4.graph", &families::cycle(4));
    let coloring = dir.join("mono.coloring");
    std::fs::write(&coloring, "1\n1\n1\n1\n").unwrap();
    let (code, out, _) = srd_kit(&["verify", &graph, coloring.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.contains("verdict: false\nfailing pair: 0 1\n"), "{out}");
    let (code, out, _) = srd_kit(&["verify", &graph, coloring.to_str().unwrap(), "--mode", "rd", "--pair", "0", "2"]);
    assert_eq!(code, 1);
    assert!(out.contains("failing pair: 0 2"));
}

#[test]
fn exit_codes() {
    let dir = scratch("exit_codes");
    let (code, _, err) = srd_kit(&["verify", "/nonexistent.graph", "/nonexistent.coloring"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error:"));
    let (code, _, _) = srd_kit(&["no-such-command"]);
    assert_eq!(code, 2);
    let bad = dir.join("bad.graph");
    std::fs::write(&bad, "3 2\n0 1\n").unwrap();
    assert_eq!(srd_kit(&["blocks", bad.to_str().unwrap()]).0, 2);
    let petersen = write_graph(&dir, "petersen.graph", &families::petersen());
    let (code, out, _) = srd_kit(&["solve", &petersen]);
    assert_eq!(code, 3);
    assert!(out.contains("srd in [3,4]"));
    let (code, _, _) = srd_kit(&["solve", &petersen, "--max-edges", "0"]);
    assert_eq!(code, 2);
    let (code, _, _) = srd_kit(&["scan", "--n", "7"]);
    assert_eq!(code, 2);
    let (code, out, _) = srd_kit(&["--help"]);
    assert_eq!(code, 0);
    for sub in ["lambda", "blocks", "color", "verify", "solve", "scan", "reduce-3sat", "export-dot"] {
        assert!(out.contains(sub), "{sub} missing from help");
    }
}

#[test]
fn solve_and_lambda_output() {
    let dir = scratch("solve");
    let k4 = write_graph(&dir, "k4.graph", &families::complete(4));
    let (code, out, _) = srd_kit(&["solve", &k4, "--mode", "both"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().nth(1), Some("rd=3 srd=3"));
    let (code, out, _) = srd_kit(&["lambda", &k4, "0", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("lambda(0,1)=3"));
    let bowtie = write_graph(&dir, "bowtie.graph", &families::bowtie());
    let (_, out, _) = srd_kit(&["lambda", &bowtie]);
    assert!(out.contains("lambda=2 lambda_plus=2"), "{out}");
    let (_, out, _) = srd_kit(&["blocks", &bowtie]);
    assert!(out.contains("cut vertices: "));
    let (code, out, _) = srd_kit(&["solve", &bowtie, "--by-blocks"]);
    assert_eq!(code, 0);
    assert!(out.contains("srd=2"));
}

#[test]
fn json_output_is_one_object() {
    let dir = scratch("json");
    let k4 = write_graph(&dir, "k4.graph", &families::complete(4));
    let (code, out, _) = srd_kit(&["--json", "solve", &k4]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["command"], "solve");
    assert_eq!(v["srd"]["value"], 3);
    assert_eq!(v["exit_code"], 0);
}

#[test]
fn reduction_round_trip_through_files() {
    let dir = scratch("reduce");
    let cnf = dir.join("clause.cnf");
    std::fs::write(&cnf, "p cnf 3 1\n1 -2 3 0\n").unwrap();
    let prefix = dir.join("inst");
    let (code, out, _) =
        srd_kit(&["reduce-3sat", cnf.to_str().unwrap(), "--out-prefix", prefix.to_str().unwrap(), "--check"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("vertices=24 edges=49 colors=9 clauses=1 variables=3 lambda_st=6"));
    assert!(out.contains("equivalence: consistent (satisfiable"));
    let path = |ext: &str| format!("{}.{ext}", prefix.display());
    let (code, out, _) =
        srd_kit(&["verify", &path("graph"), &path("coloring"), "--pair", "0", "1", "--strategy", "dfs"]);
    assert_eq!(code, 0);
    assert!(out.contains("0 1 : 6 "));
    let (code, out, _) = srd_kit(&["export-dot", &path("graph"), &path("coloring"), "--roles", &path("roles")]);
    assert_eq!(code, 0);
    assert!(out.contains("graph") && out.contains("x_{1,0}") && out.contains("r_0"));
    let (code, out, _) = srd_kit(&["reduce-3sat", "--random", "3", "2", "--seed", "4", "--check"]);
    assert_eq!(code, 0, "{out}");
}

#[test]
fn output_is_deterministic_across_jobs() {
    let dir = scratch("determinism");
    let g = write_graph(&dir, "grid.graph", &families::grid(2, 3));
    let a = srd_kit(&["solve", &g, "--mode", "both", "--jobs", "1"]);
    let b = srd_kit(&["solve", &g, "--mode", "both", "--jobs", "4"]);
    assert_eq!(a, b);
    let a = srd_kit(&["scan", "--n", "4", "--jobs", "1"]);
    let b = srd_kit(&["scan", "--n", "4", "--jobs", "3"]);
    assert_eq!(a, b);
    assert!(a.1.contains("# graphs=9 equal=9 counterexamples=0 skipped=0"));
}

#[test]
fn binary_honors_jobs_environment() {
    let dir = scratch("binary");
    let g = write_graph(&dir, "c5.graph", &families::cycle(5));
    let run = |jobs: &str| {
        Command::new(env!("CARGO_BIN_EXE_srd-kit"))
            .args(["solve", &g])
            .env("SRD_KIT_JOBS", jobs)
            .output()
            .unwrap()
    };
    let one = run("1");
    let two = run("2");
    assert!(one.status.success());
    assert_eq!(one.stdout, two.stdout);
    assert!(String::from_utf8_lossy(&one.stdout).contains("srd=2"));
    let failed = Command::new(env!("CARGO_BIN_EXE_srd-kit")).args(["blocks", "/nonexistent"]).output().unwrap();
    assert_eq!(failed.status.code(), Some(2));
}
