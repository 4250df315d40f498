use std::path::Path;
use std::process::{Command, Output};

fn locdim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_locdim"))
        .args(args)
        .env_remove("LOCDIM_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

const BOWTIE: &str = "n 5\n0 1\n0 2\n1 2\n2 3\n2 4\n3 4\n";

#[test]
fn dim_json_on_bowtie() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "bowtie.edges", BOWTIE);
    let o = locdim(&["dim", "--input", &f, "--json"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "{\"dimension\":2,\"method\":\"decomposition\",\"witness\":[0,3]}\n");
    let o = locdim(&["dim", "--input", &f, "--json", "--method", "brute"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["dimension"], 2);
    assert_eq!(v["method"], "brute-force");
}

#[test]
fn dim_from_dsl() {
    let o = locdim(&["dim", "--dsl", "K(5)"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("dimension: 4\n"));
}

#[test]
fn reads_edge_lists() {
    let dir = tempfile::tempdir().unwrap();
    let tri = write(dir.path(), "k3.edges", "n 3\n0 1\n1 2\n0 2\n");
    assert!(stdout(&locdim(&["dim", "--input", &tri])).starts_with("dimension: 2"));
    let commented = write(dir.path(), "c.edges", "# triangle\n0 1 # edge\n1 2\n\n0 2\n");
    assert!(stdout(&locdim(&["dim", "--input", &commented])).starts_with("dimension: 2"));
    let named = write(dir.path(), "named.edges", "a b\nb c\nc a\nc d\n");
    let o = locdim(&["dim", "--input", &named]);
    assert!(stdout(&o).contains("witness: a"));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let looped = write(dir.path(), "loop.edges", "n 2\n0 1\n1 1\n");
    let o = locdim(&["dim", "--input", &looped]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));

    assert_eq!(locdim(&["dim", "--dsl", "union(K(2), K(2))"]).status.code(), Some(2));
    assert_eq!(locdim(&["bases", "--dsl", "K(20)"]).status.code(), Some(2));
    assert_eq!(locdim(&["dim", "--dsl", "C(31)", "--method", "brute", "--max-exact", "10"]).status.code(), Some(2));
    assert_eq!(locdim(&["dim", "--dsl", "K(30)", "--method", "brute", "--max-exact", "10"]).status.code(), Some(0));
    assert_eq!(locdim(&["dim"]).status.code(), Some(1));
    assert_eq!(locdim(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(locdim(&["dim", "--dsl", "K(3"]).status.code(), Some(1));
    assert_eq!(locdim(&["dim", "--input", "/no/such/file"]).status.code(), Some(1));
    assert_eq!(locdim(&["--help"]).status.code(), Some(0));
}

#[test]
fn decompose_bases_rho() {
    let o = locdim(&["decompose", "--dsl", "chain([K(3), K(3), K(3)], links=[(1, 2), (1, 2)])", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["blocks"].as_array().unwrap().len(), 3);
    assert_eq!(v["cut_vertices"], serde_json::json!([1, 4]));

    let o = locdim(&["bases", "--dsl", "P(3)", "--json"]);
    assert_eq!(stdout(&o), "{\"dimension\":1,\"bases\":[[0],[1],[2]]}\n");

    let o = locdim(&["rho", "--dsl", "K(4)", "--constraint", "0,1", "--json"]);
    assert_eq!(stdout(&o), "{\"rho\":1,\"witness\":[2]}\n");
}

#[test]
fn construct_prints_edge_list() {
    let o = locdim(&["construct", "--dsl", "bouquet([K(2), K(2), K(2)], roots=[0, 0, 0])"]);
    assert_eq!(stdout(&o), "n 4\n0 1\n0 2\n0 3\n");
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "c.dsl", "# corona\ncorona(P(2), [K(2), K(2)])\n");
    let o = locdim(&["construct", "--file", &f, "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["n"], 6);
    assert_eq!(v["m"], 7);
}

#[test]
fn closed_form_verifies() {
    let o = locdim(&[
        "closed-form",
        "--kind",
        "rooted",
        "--dsl",
        "rooted(P(3), join(K(1), union(K(2), K(2)))@0)",
        "--verify",
        "--json",
    ]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["value"], 6);
    assert_eq!(v["verify"]["engine"], 6);
    assert_eq!(v["details"]["bounds"], serde_json::json!([3, 6]));

    let o = locdim(&["closed-form", "--kind", "block", "--dsl", "chain([K(4), K(4), K(4)], links=[(1, 0), (1, 0)])", "--verify"]);
    assert!(stdout(&o).starts_with("value: 5\n"));

    let o = locdim(&["closed-form", "--kind", "chain", "--dsl", "K(3)"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn gen_is_deterministic() {
    let args = ["gen", "--family", "random-connected", "--n", "10", "--p", "0.3", "--seed", "3"];
    let a = locdim(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, locdim(&args).stdout);
    let o = locdim(&["gen", "--family", "unicyclic", "--n", "9", "--seed", "1"]);
    assert_eq!(stdout(&o).lines().count(), 1 + 9);
    assert_eq!(locdim(&["gen", "--family", "block-graph"]).status.code(), Some(1));
}

#[test]
fn bench_reports_agreement() {
    let o = locdim(&["bench", "--family", "suite", "--count", "20", "--compare", "--json", "--no-timing"]);
    assert!(o.status.success());
    let reports: Vec<serde_json::Value> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(reports.len(), 20);
    assert!(reports.iter().all(|r| r["agreement"] == true));
    let again = locdim(&["bench", "--family", "suite", "--count", "20", "--compare", "--json", "--no-timing"]);
    assert_eq!(o.stdout, again.stdout);

    let o = locdim(&[
        "bench", "--family", "block-graph", "--blocks", "10", "--max-order", "5", "--seed", "7", "--compare",
    ]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("skipped"));
}

#[test]
fn threads_from_environment() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_locdim"))
            .args(["dim", "--json", "--dsl", "chain([C(5), K(4), C(7)], links=[(0, 1), (2, 3)])"])
            .env("LOCDIM_THREADS", threads)
            .output()
            .unwrap()
            .stdout
    };
    assert_eq!(run("1"), run("4"));
}
