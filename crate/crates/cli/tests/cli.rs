use std::io::Write as _;

use alphak::io::write_graph6;
use alphak::Graph;
use alphak_cli::{run, EXIT_DOMAIN, EXIT_OK, EXIT_SOLVER_CAP, EXIT_USAGE};
use serde_json::Value;

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

fn invoke(args: &[&str], stdin: &str) -> Output {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("alphak").chain(args.iter().copied());
    let code = run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
    Output { code, stdout: String::from_utf8(out).unwrap(), stderr: String::from_utf8(err).unwrap() }
}

fn json(o: &Output) -> Value {
    serde_json::from_str(&o.stdout).unwrap_or_else(|e| panic!("bad json ({e}): {}", o.stdout))
}

fn validator() -> jsonschema::Validator {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/schema/report.schema.json")).unwrap();
    let schema: Value = serde_json::from_str(&text).unwrap();
    jsonschema::validator_for(&schema).unwrap()
}

fn assert_valid(v: &jsonschema::Validator, report: &Value) {
    let errors: Vec<String> = v.iter_errors(report).map(|e| format!("{e} at {}", e.instance_path())).collect();
    assert!(errors.is_empty(), "schema errors: {errors:#?}\n{report:#}");
}

fn c6() -> String {
    write_graph6(&Graph::cycle(6).unwrap())
}

#[test]
fn gen_emits_graph6_of_the_first_regular_family() {
    let o = invoke(&["gen", "--family", "g1", "--r", "3", "--l", "1", "--t", "1"], "");
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    let g = alphak::parse_graph6(o.stdout.trim()).unwrap();
    assert_eq!(g.vertex_count(), 12);
    assert!((0..12).all(|v| g.degree(v) == 3));
}

#[test]
fn gen_formats() {
    let dot = invoke(&["gen", "--family", "star", "--n", "3", "--format", "dot"], "");
    assert_eq!(dot.stdout, "graph G {\n  0;\n  1;\n  2;\n  0 -- 1;\n  0 -- 2;\n}\n");
    let text = invoke(&["gen", "--family", "star", "--n", "3", "--format", "text"], "");
    assert_eq!(text.stdout, "3 2\n0 1\n0 2\n");
    let j = json(&invoke(&["gen", "--family", "comb", "--n", "4", "--format", "json"], ""));
    assert_eq!(j["payload"]["family"]["family"], "comb");
    assert_eq!(j["payload"]["m"], 3);
}

#[test]
fn random_generation_requires_a_seed() {
    let o = invoke(&["gen", "--family", "random", "--n", "8", "--p", "0.3"], "");
    assert_eq!(o.code, EXIT_USAGE);
    assert!(o.stderr.contains("--seed"));
    let a = invoke(&["gen", "--family", "random", "--n", "8", "--p", "0.3", "--seed", "7"], "");
    let b = invoke(&["gen", "--family", "random", "--n", "8", "--p", "0.3", "--seed", "7"], "");
    assert_eq!(a.code, EXIT_OK);
    assert_eq!(a.stdout, b.stdout);
    assert!(alphak::parse_graph6(a.stdout.trim()).unwrap().is_connected());
}

#[test]
fn verify_comb_passes() {
    let o = invoke(&["verify", "--family", "comb", "--n", "10", "--k", "2"], "");
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    let j = json(&o);
    assert_eq!(j["payload"]["status"], "passed");
    assert_eq!(j["payload"]["achieved_alpha"], 5);
    assert_eq!(j["payload"]["bound_case"], "FH_EVEN");
}

#[test]
fn verify_rejects_mismatched_k_and_bad_family_params() {
    let o = invoke(&["verify", "--family", "comb", "--n", "10", "--k", "3"], "");
    assert_eq!(o.code, EXIT_DOMAIN);
    assert!(o.stderr.contains("targets k = 2"), "{}", o.stderr);
    let o = invoke(&["verify", "--family", "g1", "--r", "2", "--l", "1"], "");
    assert_eq!(o.code, EXIT_DOMAIN);
    assert!(o.stderr.contains("r >= 3"));
}

#[test]
fn verify_reports_indeterminate_when_capped() {
    let o = invoke(&["verify", "--family", "g4", "--r", "4", "--l", "1", "--node-limit", "1"], "");
    assert_eq!(o.code, EXIT_SOLVER_CAP);
    assert_eq!(json(&o)["payload"]["status"], "indeterminate");
}

#[test]
fn solve_reads_stdin_and_files() {
    let o = invoke(&["solve", "--k", "2", "--method", "exact"], &c6());
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    assert_eq!(json(&o)["payload"]["alpha"], 2);

    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(file, "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n").unwrap();
    let path = file.path().to_str().unwrap();
    let o = invoke(&["solve", "--k", "1", "--input", path, "--method", "brute-force"], "");
    assert_eq!(json(&o)["payload"]["alpha"], 3);
    assert_eq!(json(&o)["payload"]["method"], "brute_force");

    let o = invoke(&["solve", "--k", "1", "--graph6", &c6(), "--method", "greedy", "--format", "text"], "");
    assert!(o.stdout.starts_with("alpha_1 = 3"), "{}", o.stdout);
}

#[test]
fn solve_errors_map_to_exit_codes() {
    let o = invoke(&["solve", "--k", "1"], "D?\x3e");
    assert_eq!(o.code, EXIT_DOMAIN);
    assert!(o.stderr.contains("byte 2"), "{}", o.stderr);

    let big = write_graph6(&Graph::path(31));
    let o = invoke(&["solve", "--k", "1", "--method", "brute-force", "--graph6", &big], "");
    assert_eq!(o.code, EXIT_SOLVER_CAP);

    let o = invoke(&["solve", "--graph6", &c6()], "");
    assert_eq!(o.code, EXIT_USAGE);
    let o = invoke(&["solve", "--k", "2", "--graph6", &c6(), "--input", "x"], "");
    assert_eq!(o.code, EXIT_USAGE);
    let o = invoke(&["solve", "--k", "2", "--graph6", &c6(), "--format", "dot"], "");
    assert_eq!(o.code, EXIT_USAGE);
    let o = invoke(&["frobnicate"], "");
    assert_eq!(o.code, EXIT_USAGE);
    let o = invoke(&["--help"], "");
    assert_eq!(o.code, EXIT_OK);
    assert!(o.stdout.contains("verify"));
}

#[test]
fn power_and_chroma() {
    let o = invoke(&["power", "--k", "3"], &c6());
    assert_eq!(alphak::parse_graph6(o.stdout.trim()).unwrap(), Graph::complete(6));
    let o = invoke(&["chroma", "--k", "2", "--graph6", &write_graph6(&alphak::constructions::petersen())], "");
    assert_eq!(json(&o)["payload"]["num_colors"], 10);
    let big = write_graph6(&Graph::path(31));
    assert_eq!(invoke(&["chroma", "--k", "1", "--graph6", &big], "").code, EXIT_SOLVER_CAP);
    let o = invoke(&["chroma", "--k", "1", "--graph6", &big, "--method", "greedy"], "");
    assert_eq!(json(&o)["payload"]["exact"], false);
}

#[test]
fn bounds_json_and_text() {
    let comb = write_graph6(&alphak::constructions::comb(10).unwrap());
    let o = invoke(&["bounds", "--k", "2", "--graph6", &comb], "");
    let j = json(&o);
    assert_eq!(j["payload"]["exact_alpha"], 5);
    assert!(j["payload"]["tight"].as_array().unwrap().contains(&Value::from("FH_EVEN")));

    let text = invoke(&["bounds", "--k", "2", "--graph6", &comb, "--format", "text"], "").stdout;
    assert!(text.lines().any(|l| l.starts_with("FH_EVEN") && l.contains("[tight]")), "{text}");
    let k5 = write_graph6(&Graph::complete(5));
    let text = invoke(&["bounds", "--k", "2", "--graph6", &k5, "--format", "text"], "").stdout;
    assert!(text.lines().any(|l| l.starts_with("FH_EVEN") && l.contains("[n/a]")), "{text}");

    let j = json(&invoke(&["bounds", "--k", "2", "--graph6", &comb, "--no-exact"], ""));
    assert_eq!(j["payload"]["exact_alpha"], Value::Null);
}

#[test]
fn batch_grid() {
    let mut grid = tempfile::NamedTempFile::new().unwrap();
    writeln!(grid, "# regular families").unwrap();
    for family in ["g1", "g4", "g5"] {
        for r in [3, 4] {
            writeln!(grid, "family={family} r={r} l=1 t=1").unwrap();
        }
    }
    let path = grid.path().to_str().unwrap().to_string();
    let o = invoke(&["batch", &path], "");
    assert_eq!(o.code, EXIT_OK, "{}", o.stdout);
    let s = &json(&o)["payload"]["summary"];
    assert_eq!((s["total"].as_u64(), s["passed"].as_u64()), (Some(6), Some(6)));

    writeln!(grid, "family=g1 r=2 l=1").unwrap();
    writeln!(grid, "family=g1 r=3").unwrap();
    let o = invoke(&["batch", &path, "--format", "text"], "");
    assert_eq!(o.code, EXIT_DOMAIN);
    assert!(o.stdout.contains("line 8: invalid parameter: regular constructions need r >= 3"), "{}", o.stdout);
    assert!(o.stdout.contains("line 9: invalid parameter: missing parameter `l`"), "{}", o.stdout);
    assert!(o.stdout.contains("6 passed"));

    let empty = tempfile::NamedTempFile::new().unwrap();
    let o = invoke(&["batch", empty.path().to_str().unwrap()], "");
    assert_eq!(o.code, EXIT_OK);
    assert_eq!(json(&o)["payload"]["summary"]["total"], 0);

    assert_eq!(invoke(&["batch", "/nonexistent/grid"], "").code, EXIT_DOMAIN);
}

#[test]
fn every_json_report_matches_the_schema() {
    let v = validator();
    let comb = write_graph6(&alphak::constructions::comb(10).unwrap());
    let disconnected = write_graph6(&Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap());
    let mut grid = tempfile::NamedTempFile::new().unwrap();
    writeln!(grid, "family=g5 r=3 l=1\nfamily=g1 r=2 l=1\nfamily=star n=6").unwrap();
    let grid_path = grid.path().to_str().unwrap().to_string();
    let runs: Vec<Vec<&str>> = vec![
        vec!["gen", "--family", "g1", "--r", "3", "--l", "1", "--format", "json"],
        vec!["gen", "--family", "join_chain", "--sizes", "2,3", "--format", "json"],
        vec!["gen", "--family", "random", "--n", "9", "--p", "0.2", "--seed", "3", "--format", "json"],
        vec!["solve", "--k", "2", "--graph6", &comb],
        vec!["power", "--k", "2", "--graph6", &comb, "--format", "json"],
        vec!["bounds", "--k", "2", "--graph6", &comb],
        vec!["bounds", "--k", "3", "--graph6", &disconnected],
        vec!["bounds", "--k", "1", "--graph6", &comb, "--no-exact"],
        vec!["chroma", "--k", "2", "--graph6", &comb],
        vec!["verify", "--family", "g4", "--r", "3", "--l", "1"],
        vec!["verify", "--family", "subdivided_star", "--k", "3", "--legs", "3"],
        vec!["verify", "--family", "g4", "--r", "4", "--l", "1", "--node-limit", "1"],
        vec!["batch", &grid_path],
    ];
    for args in runs {
        let o = invoke(&args, "");
        assert!(o.stderr.is_empty(), "{args:?}: {}", o.stderr);
        assert_valid(&v, &json(&o));
    }
    let mut bad = json(&invoke(&["solve", "--k", "2", "--graph6", &comb], ""));
    bad["payload"]["extra"] = Value::from(1);
    assert!(!v.is_valid(&bad));
}
