// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_equicolor"));
    c.env_remove("EQUICOLOR_BUDGET");
    c
}

fn run(dir: &Path, args: &[&str]) -> Output {
    bin().current_dir(dir).args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn error_record(o: &Output) -> serde_json::Value {
    let err = String::from_utf8(o.stderr.clone()).unwrap();
    let line = err.lines().last().unwrap();
    serde_json::from_str(line).unwrap()
}

#[test]
fn lower_bound_pipeline() {
    let d = TempDir::new().unwrap();
    assert_eq!(code(&run(d.path(), &["gen", "lower-bound", "--delta", "3", "--output", "lb.txt"])), 0);
    let o = run(d.path(), &["color", "--algo", "2eq1", "--k", "4", "--input", "lb.txt", "--output", "c.txt"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("verified true"));
    let o = run(
        d.path(),
        &["verify", "--input", "lb.txt", "--coloring", "c.txt", "--threshold", "2"],
    );
    assert_eq!(code(&o), 0);
    let o = run(d.path(), &["oracle", "min-alpha", "--input", "lb.txt", "--k", "4"]);
    assert_eq!(code(&o), 0);
    let s = stdout(&o);
    assert!(s.contains("min_alpha_rational 0/1\n"));
    assert!(s.contains("min_alpha_sqrt2 1/1\n"));
    assert!(s.contains("exhausted true\n"));
}

#[test]
fn singleton_coloring_verifies_to_zero() {
    let d = TempDir::new().unwrap();
    fs::write(d.path().join("g.txt"), "p wgraph 3 1\nv 0 1/2\nv 1 3/1\nv 2 1/1\ne 0 1\n").unwrap();
    fs::write(d.path().join("c.txt"), "k 3\nc 0 0\nc 1 1\nc 2 2\n").unwrap();
    let o = run(d.path(), &["verify", "--input", "g.txt", "--coloring", "c.txt"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "0/1\n");
}

#[test]
fn improper_coloring_reports_the_edge() {
    let d = TempDir::new().unwrap();
    fs::write(d.path().join("g.txt"), "p wgraph 3 1\nv 0 1/1\nv 1 1/1\nv 2 1/1\ne 1 2\n").unwrap();
    fs::write(d.path().join("c.txt"), "k 2\nc 0 0\nc 1 1 2\n").unwrap();
    let o = run(d.path(), &["verify", "--input", "g.txt", "--coloring", "c.txt"]);
    assert_eq!(code(&o), 1);
    let rec = error_record(&o);
    assert_eq!(rec["exit"], 1);
    assert!(rec["message"].as_str().unwrap().contains("(1, 2)"));
}

#[test]
fn threshold_failure_exits_one() {
    let d = TempDir::new().unwrap();
    fs::write(d.path().join("g.txt"), "p wgraph 3 0\nv 0 1/1\nv 1 1/1\nv 2 1/1\n").unwrap();
    fs::write(d.path().join("c.txt"), "k 2\nc 0 0 1 2\nc 1\n").unwrap();
    let o = run(d.path(), &["verify", "--input", "g.txt", "--coloring", "c.txt"]);
    assert_eq!((code(&o), stdout(&o)), (0, "inf\n".to_string()));
    let o = run(d.path(), &["verify", "--input", "g.txt", "--coloring", "c.txt", "--threshold", "100"]);
    assert_eq!(code(&o), 1);
}

#[test]
fn usage_parse_and_io_codes() {
    let d = TempDir::new().unwrap();
    fs::write(d.path().join("g.txt"), "p wgraph 2 1\nv 0 1/1\nv 1 1/1\ne 0 1\n").unwrap();
    let o = run(d.path(), &["color", "--algo", "eps-eq1", "--input", "g.txt"]);
    assert_eq!(code(&o), 64);
    assert_eq!(error_record(&o)["error"], "Usage");
    assert_eq!(code(&run(d.path(), &["color", "--algo", "nope", "--input", "g.txt"])), 64);
    assert_eq!(code(&run(d.path(), &["--help"])), 0);
    assert_eq!(code(&run(d.path(), &["--version"])), 0);

    fs::write(d.path().join("bad.txt"), "p wgraph 2 1\nv 0 1/0\n").unwrap();
    let o = run(d.path(), &["color", "--algo", "2eq1", "--input", "bad.txt"]);
    assert_eq!(code(&o), 65);
    assert_eq!(error_record(&o)["error"], "Parse");

    let o = run(d.path(), &["color", "--algo", "2eq1", "--input", "missing.txt"]);
    assert_eq!(code(&o), 66);
}

#[test]
fn precondition_and_budget_codes() {
    let d = TempDir::new().unwrap();
    fs::write(d.path().join("g.txt"), "p wgraph 3 2\nv 0 1/1\nv 1 1/1\nv 2 1/1\ne 0 1\ne 1 2\n").unwrap();
    let o = run(d.path(), &["color", "--algo", "2eq1", "--k", "2", "--input", "g.txt"]);
    assert_eq!(code(&o), 2);
    assert_eq!(error_record(&o)["error"], "PreconditionViolated");

    assert_eq!(code(&run(d.path(), &["gen", "lower-bound", "--delta", "3", "--output", "lb.txt"])), 0);
    let o = bin()
        .current_dir(d.path())
        .env("EQUICOLOR_BUDGET", "5")
        .args(["oracle", "min-alpha", "--input", "lb.txt", "--k", "4"])
        .output()
        .unwrap();
    assert_eq!(code(&o), 3);
    assert!(stdout(&o).contains("exhausted false"));
    let o = bin()
        .current_dir(d.path())
        .env("EQUICOLOR_BUDGET", "lots")
        .args(["oracle", "chromatic", "--input", "lb.txt"])
        .output()
        .unwrap();
    assert_eq!(code(&o), 64);
}

#[test]
fn gen_parse_format_is_byte_identical() {
    let d = TempDir::new().unwrap();
    for args in [
        vec!["gen", "random", "--n", "50", "--delta", "3", "--seed", "4", "--output", "a.txt"],
        vec!["gen", "random", "--n", "50", "--delta", "2", "--model", "geometric", "--output", "a.txt"],
        vec!["gen", "eqx", "--n", "6", "--beta", "7/2", "--output", "a.txt"],
        vec!["gen", "lower-bound", "--delta", "5", "--output", "a.txt"],
    ] {
        assert_eq!(code(&run(d.path(), &args)), 0);
        let text = fs::read_to_string(d.path().join("a.txt")).unwrap();
        let g = equicolor::io::parse_any_graph(&text).unwrap();
        let again = match g {
            equicolor::io::AnyGraph::Rational(g) => equicolor::io::format_graph(&g),
            equicolor::io::AnyGraph::Surd(g) => equicolor::io::format_graph(&g),
        };
        assert_eq!(again, text);
    }
}

#[test]
fn every_algorithm_self_verifies() {
    let d = TempDir::new().unwrap();
    let gen = |args: &[&str]| assert_eq!(code(&run(d.path(), args)), 0);
    gen(&["gen", "random", "--n", "600", "--delta", "2", "--model", "few-distinct", "--seed", "2", "--output", "g.txt"]);
    gen(&["gen", "partition", "--n", "600", "--d", "4", "--seed", "2", "--output", "p.txt"]);
    gen(&["gen", "random", "--n", "14", "--delta", "3", "--seed", "5", "--output", "small.txt"]);
    let cases: Vec<Vec<&str>> = vec![
        vec!["--algo", "2eq1", "--input", "small.txt"],
        vec!["--algo", "partition", "--partition", "p.txt", "--input", "g.txt"],
        vec!["--algo", "eq1-d", "--input", "g.txt"],
        vec!["--algo", "eq1-sqrt", "--input", "g.txt"],
        vec!["--algo", "eps-eq1", "--eps", "1/10", "--input", "g.txt"],
        vec!["--algo", "lowmax", "--eps", "1/10", "--input", "g.txt"],
        vec!["--algo", "lowmax", "--eps", "1/10", "--start", "chromatic", "--input", "g.txt"],
    ];
    for case in cases {
        let mut args = vec!["color"];
        args.extend(&case);
        args.extend(["--output", "out.txt"]);
        let o = run(d.path(), &args);
        assert_eq!(code(&o), 0, "{case:?}: {}", String::from_utf8_lossy(&o.stderr));
        assert!(stdout(&o).contains("verified true"));
    }
}

#[test]
fn random_algorithm_reports_precondition_at_desk_scale() {
    let d = TempDir::new().unwrap();
    assert_eq!(code(&run(d.path(), &["gen", "random", "--n", "200", "--delta", "1", "--output", "g.txt"])), 0);
    let o = run(d.path(), &["color", "--algo", "random", "--eps", "1/100", "--input", "g.txt"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn mc_and_bench_outputs() {
    let d = TempDir::new().unwrap();
    let o = run(d.path(), &["mc", "lemma7", "--k", "8", "--trials", "20000", "--seed", "1"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).trim_end().ends_with("all_inside\ttrue"));
    let o = run(d.path(), &["mc", "tail", "--family", "pairs", "--n", "20", "--t", "6", "--trials", "20000"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("within\ttrue"));

    let o = run(d.path(), &["bench", "--n", "300", "--delta", "1,2", "--algos", "eq1-sqrt,partition"]);
    assert_eq!(code(&o), 0);
    let s = stdout(&o);
    assert_eq!(s.lines().count(), 5);
    assert!(s.lines().skip(1).all(|l| l.split('\t').nth(6) == Some("ok")));
    let o = run(d.path(), &["bench", "--n", "300", "--delta", "1", "--algos", "eq1-sqrt", "--timing"]);
    assert!(stdout(&o).starts_with("algo\tn\tdelta\teps\tk\tseed\tstatus\tfactor\tfactor_approx\taugmentations\tmillis\n"));
}
