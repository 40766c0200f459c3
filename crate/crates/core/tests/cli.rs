use std::path::PathBuf;
use std::process::{Command, Output};

use splitlink::generators::{random_instance, Family, GenSpec};
use splitlink::io::serialize;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_splitlink")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn fig1() -> String {
    data("fig1.txt").to_str().unwrap().to_string()
}

#[test]
fn fig1_file_is_golden() {
    let spec = GenSpec::new(Family::Fig1, 0, 0);
    let inst = random_instance(&spec).unwrap();
    let text = std::fs::read_to_string(data("fig1.txt")).unwrap();
    assert_eq!(serialize(&inst.digraph, inst.partition.as_ref()), text);
}

#[test]
fn gen_fig1_matches_golden() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("g.txt");
    let o = run(&["gen", "--family", "fig1", "--with-partition", "--out", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(std::fs::read_to_string(out).unwrap(), std::fs::read_to_string(data("fig1.txt")).unwrap());
}

#[test]
fn seeded_gen_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let texts: Vec<String> = (0..2)
        .map(|i| {
            let out = dir.path().join(format!("g{i}.txt"));
            let args =
                ["gen", "--family", "random-scsplit", "--n1", "3", "--n2", "6", "--seed", "17", "--k-strong", "2"];
            let o = run(&[&args[..], &["--out", out.to_str().unwrap()]].concat());
            assert!(o.status.success(), "{}", stderr(&o));
            std::fs::read_to_string(out).unwrap()
        })
        .collect();
    assert_eq!(texts[0], texts[1]);
}

#[test]
fn classify_fig1() {
    let o = run(&["classify", &fig1()]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("order: 13"));
    assert!(s.contains("arcs: 51"));
    assert!(s.contains("split: yes"));
    assert!(s.contains("strong connectivity: 2"));
}

#[test]
fn kappa_with_deletion() {
    let o = run(&["kappa", &fig1(), "--from", "s1", "--to", "t1", "--delete", "s2,t2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "3");
    let o = run(&["kappa", &fig1(), "--from", "s2", "--to", "t2", "--delete", "s1,t1", "--paths"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next().unwrap().trim(), "3");
}

#[test]
fn kstrong_answers() {
    assert_eq!(stdout(&run(&["kstrong", &fig1(), "--k", "2"])).trim(), "yes");
    let o = run(&["kstrong", &fig1(), "--k", "3"]);
    assert_eq!(stdout(&o).trim(), "no");
}

#[test]
fn link2_negative_verdict_exits_2() {
    let o = run(&["link2", &fig1(), "--s1", "s1", "--t1", "t1", "--s2", "s2", "--t2", "t2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("not linked"));
}

#[test]
fn link2_certified_outside_premises_exits_1() {
    let args = ["link2", &fig1(), "--s1", "s1", "--t1", "t1", "--s2", "s2", "--t2", "t2", "--method", "certified"];
    let o = run(&args);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("hypothesis"));
}

#[test]
fn link2_budget_exhaustion_exits_3() {
    let o = run(&["link2", &fig1(), "--s1", "s1", "--t1", "x1", "--s2", "s2", "--t2", "t2", "--budget", "1"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn link2_positive_prints_paths() {
    let o = run(&["link2", &fig1(), "--s1", "s1", "--t1", "x1", "--s2", "s2", "--t2", "t2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("->"));
}

#[test]
fn usage_errors_exit_1() {
    assert_eq!(run(&["verify", "--theorem", "bogus"]).status.code(), Some(1));
    assert_eq!(run(&["nosuch"]).status.code(), Some(1));
    assert_eq!(run(&["classify", "/nonexistent/file"]).status.code(), Some(1));
}

#[test]
fn parse_errors_report_position() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("bad.txt");
    std::fs::write(&f, "digraph 3 2\n0 1\n1 x\n").unwrap();
    let o = run(&["classify", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));
}

#[test]
fn pins_all_hold() {
    let o = run(&["pins"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn verify_json_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let reports: Vec<serde_json::Value> = (0..2)
        .map(|i| {
            let json = dir.path().join(format!("r{i}.json"));
            let jobs = if i == 0 { "1" } else { "2" };
            let args = ["verify", "--theorem", "split-local", "--trials", "8", "--seed", "5", "--jobs", jobs];
            let o = run(&[&args[..], &["--json", json.to_str().unwrap()]].concat());
            assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
            serde_json::from_str(&std::fs::read_to_string(json).unwrap()).unwrap()
        })
        .collect();
    assert_eq!(reports[0], reports[1]);
    let keys: Vec<&str> = reports[0].as_object().unwrap().keys().map(|k| k.as_str()).collect();
    for k in ["theorem", "trials", "passes", "template_hits", "fallback_hits", "refutation_paths", "seed"] {
        assert!(keys.contains(&k), "{k}");
    }
    assert_eq!(reports[0]["passes"], 8);
}

#[test]
fn export_dot_highlights_paths() {
    let o = run(&["export-dot", &fig1(), "--highlight", data("fig1-paths.txt").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let s = stdout(&o);
    assert!(s.starts_with("digraph"));
    assert_eq!(s.matches("shape=diamond").count(), 6);
    assert_eq!(s.matches("label=\"P1\"").count(), 4);
    assert_eq!(s.matches("label=\"P2\"").count(), 4);
}

#[test]
fn export_dot_rejects_non_path() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("p.txt");
    std::fs::write(&f, "s1 t1\n").unwrap();
    let o = run(&["export-dot", &fig1(), "--highlight", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}
