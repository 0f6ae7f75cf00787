//! End-to-end checks of the command-line interface: flag handling, output
//! shapes, exit codes, and the strict/lenient contract.

use std::io::Write;
use std::process::{Command, Output, Stdio};

use bhnlab::g6::parse_graph6;
use bhnlab::graph::Graph;

const BIN: &str = env!("CARGO_BIN_EXE_bhnlab");

fn run(args: &[&str], stdin: &str) -> Output {
    run_env(args, stdin, &[])
}

fn run_env(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(BIN);
    cmd.args(args)
        .env_remove("BHNLAB_JOBS")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().expect("spawn bhnlab");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .expect("write stdin");
    child.wait_with_output().expect("wait for bhnlab")
}

fn stdout_lines(out: &Output) -> Vec<String> {
    String::from_utf8(out.stdout.clone())
        .unwrap()
        .lines()
        .map(str::to_string)
        .collect()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no exit code")
}

fn bowtie() -> Graph {
    Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap()
}

#[test]
fn gen_exc_b_m2_is_the_bowtie() {
    let out = run(&["gen", "--family", "exc_b", "--m", "2"], "");
    assert_eq!(code(&out), 0);
    let lines = stdout_lines(&out);
    assert_eq!(lines.len(), 1);
    let g = parse_graph6(lines[0].as_bytes()).unwrap();
    assert_eq!(g.canonical_code(), bowtie().canonical_code());
}

#[test]
fn gen_exc_a_order_5_has_two_members() {
    let out = run(&["gen", "--family", "exc_a", "--order", "5"], "");
    assert_eq!(code(&out), 0);
    let lines = stdout_lines(&out);
    assert_eq!(lines.len(), 2);
    for line in &lines {
        let g = parse_graph6(line.as_bytes()).unwrap();
        assert_eq!(g.n(), 5);
        assert!(bhnlab::families::recognize_exc_a(&g));
    }
}

#[test]
fn gen_exc_a_rejects_even_order() {
    let out = run(&["gen", "--family", "exc_a", "--order", "6"], "");
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("odd"));
}

#[test]
fn gen_other_families() {
    let out = run(&["gen", "--family", "complete", "--n", "4"], "");
    assert_eq!(stdout_lines(&out), vec!["C~"]);
    let out = run(&["gen", "--family", "edgeless", "--n", "2"], "");
    assert_eq!(stdout_lines(&out), vec!["A?"]);
    let out = run(
        &["gen", "--family", "complete_bipartite", "--a", "2", "--b", "3"],
        "",
    );
    let g = parse_graph6(stdout_lines(&out)[0].as_bytes()).unwrap();
    assert_eq!(
        g.canonical_code(),
        Graph::complete_bipartite(2, 3).canonical_code()
    );
    let out = run(&["gen", "--family", "trace_b", "--m", "3"], "");
    let g = parse_graph6(stdout_lines(&out)[0].as_bytes()).unwrap();
    assert_eq!((g.n(), g.edge_count(), g.is_connected()), (6, 6, false));
}

#[test]
fn gen_rejects_misplaced_parameters() {
    let out = run(&["gen", "--family", "exc_b", "--order", "5"], "");
    assert_eq!(code(&out), 2);
    let out = run(&["gen", "--family", "exc_a", "--m", "2"], "");
    assert_eq!(code(&out), 2);
    let out = run(&["gen", "--family", "exc_b"], "");
    assert_eq!(code(&out), 2);
}

#[test]
fn invariants_of_the_five_cycle() {
    let out = run(&["invariants"], "Dhc\n");
    assert_eq!(code(&out), 0);
    let lines = stdout_lines(&out);
    assert_eq!(lines.len(), 1);
    assert!(lines[0].contains("\"alpha_tilde\":3"));
    assert!(lines[0].contains("\"sigma2\":4"));
    assert!(lines[0].contains("\"hamiltonian\":true"));
}

#[test]
fn invariants_complete_graph_sigma2_is_inf() {
    let out = run(&["invariants"], "C~\n");
    assert!(stdout_lines(&out)[0].contains("\"sigma2\":\"inf\""));
}

#[test]
fn invariants_empty_stdin_is_quiet_success() {
    let out = run(&["invariants"], "");
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
}

#[test]
fn invariants_csv_has_header_and_rows() {
    let out = run(&["invariants", "--format", "csv"], "Dhc\nC~\n");
    let lines = stdout_lines(&out);
    assert_eq!(lines.len(), 3);
    assert_eq!(
        lines[0],
        "n,e,min_degree,sigma2,alpha_tilde,connected,two_connected,hamiltonian,traceable"
    );
    assert_eq!(lines[1], "5,5,2,4,3,true,true,true,true");
    assert_eq!(lines[2], "4,6,3,inf,1,true,true,true,true");
}

#[test]
fn strict_mode_fails_on_bad_line() {
    let out = run(&["invariants"], "A_\n!\nA?\n");
    assert_eq!(code(&out), 2);
    assert_eq!(stdout_lines(&out).len(), 1); // the line before the failure
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn lenient_mode_skips_and_reports() {
    let out = run(&["invariants", "--lenient"], "A_\n!\nA?\n");
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_lines(&out).len(), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("skipped 1"));
}

#[test]
fn strict_and_lenient_conflict() {
    let out = run(&["invariants", "--strict", "--lenient"], "");
    assert_eq!(code(&out), 2);
}

#[test]
fn verify_all_small_orders_certifies() {
    let out = run(&["verify", "--theorems", "all", "--builtin", "3..5"], "");
    assert_eq!(code(&out), 0);
    let lines = stdout_lines(&out);
    assert_eq!(lines.len(), 8);
    for line in &lines {
        assert!(line.contains("\"counterexamples\":[]"), "{line}");
    }
}

#[test]
fn verify_deg_stab_order_5_reports_exceptions() {
    let out = run(
        &["verify", "--theorems", "deg_stab", "--builtin", "5"],
        "",
    );
    assert_eq!(code(&out), 0);
    let lines = stdout_lines(&out);
    assert_eq!(lines.len(), 1);
    assert!(lines[0].contains("\"exceptions_found\":3"));
    assert!(lines[0].contains("\"graphs_checked\":34"));
}

#[test]
fn verify_rejects_bad_theorem_with_usage() {
    let out = run(&["verify", "--theorems", "bogus", "--builtin", "3"], "");
    assert_eq!(code(&out), 2);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("unknown theorem id"));
    assert!(err.contains("ore_stab"));
}

#[test]
fn verify_rejects_bad_builtin_ranges() {
    for bad in ["0..3", "9", "5..3", "x..y"] {
        let out = run(&["verify", "--builtin", bad], "");
        assert_eq!(code(&out), 2, "--builtin {bad}");
    }
}

#[test]
fn verify_rejects_two_sources() {
    let out = run(&["verify", "--builtin", "3", "--input", "-"], "");
    assert_eq!(code(&out), 2);
}

#[test]
fn verify_reads_graph6_stream() {
    let out = run(&["verify", "--theorems", "my_thm", "--input", "-"], "Dhc\nC~\n");
    assert_eq!(code(&out), 0);
    assert!(stdout_lines(&out)[0].contains("\"graphs_checked\":2"));
}

#[test]
fn verify_census_needs_builtin() {
    let out = run(&["verify", "--census", "--input", "-"], "");
    assert_eq!(code(&out), 2);
}

#[test]
fn verify_census_lists_boundary_graphs() {
    let out = run(
        &["verify", "--theorems", "ore_stab", "--builtin", "5", "--census"],
        "",
    );
    assert_eq!(code(&out), 0);
    let lines = stdout_lines(&out);
    assert_eq!(lines.len(), 2); // one report, one census line
    assert!(lines[1].contains("\"equality_census\":["));
    let v: serde_json::Value = serde_json::from_str(&lines[1]).unwrap();
    assert_eq!(v["equality_census"].as_array().unwrap().len(), 2);
}

#[test]
fn verify_csv_summary() {
    let out = run(
        &["verify", "--theorems", "my_thm", "--builtin", "3", "--format", "csv"],
        "",
    );
    let lines = stdout_lines(&out);
    assert_eq!(
        lines[0],
        "theorem,graphs_checked,hypothesis_hits,counterexamples,equality_cases,exceptions_found"
    );
    assert_eq!(lines[1], "MY_THM,4,1,0,0,0");
}

#[test]
fn verify_writes_counterexample_file() {
    let dir = std::env::temp_dir().join(format!("bhnlab-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("cex.g6");
    let out = run(
        &[
            "verify",
            "--builtin",
            "3..4",
            "--counterexamples-out",
            path.to_str().unwrap(),
        ],
        "",
    );
    assert_eq!(code(&out), 0);
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_env_jobs_is_honored_and_validated() {
    let out = run_env(&["verify", "--builtin", "3"], "", &[("BHNLAB_JOBS", "2")]);
    assert_eq!(code(&out), 0);
    let out = run_env(&["verify", "--builtin", "3"], "", &[("BHNLAB_JOBS", "0")]);
    assert_eq!(code(&out), 2);
    let out = run_env(&["verify", "--builtin", "3"], "", &[("BHNLAB_JOBS", "two")]);
    assert_eq!(code(&out), 2);
}

#[test]
fn ham_witnesses_validate() {
    let out = run(&["ham", "--witness"], "Dhc\nD?{\n");
    assert_eq!(code(&out), 0);
    let lines = stdout_lines(&out);
    let cycle_line: serde_json::Value = serde_json::from_str(&lines[0]).unwrap();
    assert_eq!(cycle_line["hamiltonian"], true);
    let cyc: Vec<usize> = cycle_line["cycle"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_u64().unwrap() as usize)
        .collect();
    let g = parse_graph6(b"Dhc").unwrap();
    assert!(bhnlab::hamilton::Cycle::new(&g, cyc).is_some());
    let star_line: serde_json::Value = serde_json::from_str(&lines[1]).unwrap();
    assert_eq!(star_line["hamiltonian"], false);
    assert_eq!(star_line["cycle"], serde_json::Value::Null);
}

#[test]
fn ham_without_witness_omits_sequences() {
    let out = run(&["ham"], "Dhc\n");
    let line = &stdout_lines(&out)[0];
    assert!(!line.contains("cycle"));
    assert!(line.contains("\"hamiltonian\":true"));
}

#[test]
fn bhn_reports_value_and_split() {
    let out = run(&["bhn"], "Dhc\n");
    let v: serde_json::Value = serde_json::from_str(&stdout_lines(&out)[0]).unwrap();
    assert_eq!(v["alpha_tilde"], 3);
    let split = v["certifying_split"].as_array().unwrap();
    assert_eq!(split.len(), 2);
    let (s, t) = (split[0].as_u64().unwrap(), split[1].as_u64().unwrap());
    assert_eq!(s + t, 4);
}

#[test]
fn bhn_witness_holes_are_genuine() {
    let out = run(&["bhn", "--witness"], "D?{\n");
    let v: serde_json::Value = serde_json::from_str(&stdout_lines(&out)[0]).unwrap();
    let g = parse_graph6(b"D?{").unwrap();
    for hole in v["holes"].as_array().unwrap() {
        let s_side: Vec<usize> = hole["s_side"]
            .as_array()
            .unwrap()
            .iter()
            .map(|x| x.as_u64().unwrap() as usize)
            .collect();
        let t_side: Vec<usize> = hole["t_side"]
            .as_array()
            .unwrap()
            .iter()
            .map(|x| x.as_u64().unwrap() as usize)
            .collect();
        for &u in &s_side {
            for &w in &t_side {
                assert!(u != w && !g.has_edge(u, w), "claimed hole has edge {u}-{w}");
            }
        }
    }
}

#[test]
fn jobs_do_not_change_verify_bytes() {
    let args = ["verify", "--theorems", "all", "--builtin", "3..5"];
    let one = run(&[&args[..], &["--jobs", "1"]].concat(), "");
    let two = run(&[&args[..], &["--jobs", "2"]].concat(), "");
    assert_eq!(code(&one), 0);
    assert_eq!(one.stdout, two.stdout);
}

#[test]
fn oversize_order_is_a_data_error() {
    // order 30 path graph: parseable, but beyond the hamiltonicity envelope
    let g6 = bhnlab::g6::emit_graph6(&Graph::path_graph(30)).unwrap();
    let out = run(&["invariants"], &format!("{g6}\n"));
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("envelope"));
    let out = run(&["invariants", "--lenient"], &format!("{g6}\n"));
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
}
