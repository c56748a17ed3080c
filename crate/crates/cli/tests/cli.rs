use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

const C6: &str = "edge 1 2\nedge 2 3\nedge 3 4\nedge 4 5\nedge 5 6\nedge 6 1\n";
const EARS: &str = "clique E1: 1 2\nclique E2: 3 4\nclique E3: 5 6\n";
const L6: &str = "edge v1 v2\nedge v2 v3\nedge v3 v4\nedge v4 v5\nedge v5 v6\n";
const L6_MULTI: &str = "clique W1: v1 v2\nclique W2: v5 v6\nclique W3: v3 v4\ncluster U1: W1 W2\n\
                     whiskerA W1: size=2 edges=()\nwhiskerA W2: size=2 edges=()\nwhiskerB U1: size=2 edges=()\n";

struct Files {
    dir: TempDir,
}

impl Files {
    fn new() -> Files {
        Files { dir: TempDir::new().unwrap() }
    }

    fn put(&self, name: &str, text: &str) -> PathBuf {
        let p = self.dir.path().join(name);
        fs::write(&p, text).unwrap();
        p
    }
}

fn whisker(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_whisker")).args(args).output().unwrap()
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn c6_ears_has_18_facets() {
    let f = Files::new();
    let (g, p) = (f.put("c6.txt", C6), f.put("ears.txt", EARS));
    let o = whisker(&["facets", "--graph", s(&g), "--partition", s(&p), "--kind", "pi"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("18 facets"), "{}", stdout(&o));
}

#[test]
fn build_output_parses_back_to_the_same_graph() {
    let f = Files::new();
    let (g, p) = (f.put("l6.txt", L6), f.put("multi.txt", L6_MULTI));
    let out = f.dir.path().join("built.txt");
    let o = whisker(&["build", "--graph", s(&g), "--partition", s(&p), "--kind", "mc", "-o", s(&out)]);
    assert!(o.status.success());
    let built = whisker_core::Graph::parse(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(built.n(), 13);
    assert_eq!(built.to_text(), fs::read_to_string(&out).unwrap());
    let o = whisker(&["build", "--graph", s(&g), "--partition", s(&p), "--kind", "mc"]);
    assert_eq!(stdout(&o), built.to_text());
}

#[test]
fn check_vd_sheds_a_base_vertex_first() {
    let f = Files::new();
    let (g, p) = (f.put("l6.txt", L6), f.put("multi.txt", L6_MULTI));
    let o = whisker(&["check-vd", "--graph", s(&g), "--partition", s(&p), "--kind", "mc", "--expect-vd"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let first = text.lines().find(|l| l.starts_with("shed ")).unwrap();
    let v = first.trim_start_matches("shed ");
    assert!(["v1", "v2", "v3", "v4", "v5", "v6"].contains(&v), "{first}");
}

#[test]
fn expect_vd_fails_on_a_square() {
    let f = Files::new();
    let g = f.put("c4.txt", "edge 1 2\nedge 2 3\nedge 3 4\nedge 4 1\n");
    let o = whisker(&["check-vd", "--graph", s(&g), "--expect-vd"]);
    assert_eq!(o.status.code(), Some(1));
    let o = whisker(&["check-vd", "--graph", s(&g)]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn betti_methods_agree() {
    let f = Files::new();
    let (g, p) = (f.put("c6.txt", C6), f.put("ears.txt", EARS));
    let o = whisker(&["betti", "--graph", s(&g), "--partition", s(&p), "--kind", "pi", "--method", "both"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("diff: none"), "{}", stdout(&o));
    let o = whisker(&["--format", "tsv", "betti", "--graph", s(&g), "--partition", s(&p), "--kind", "pi"]);
    let tsv = stdout(&o);
    assert!(tsv.starts_with("i\\j"), "{tsv}");
    assert!(tsv.lines().nth(1).unwrap().split('\t').any(|x| x == "18"));
}

#[test]
fn oracle_bound_exceeded_exits_3() {
    let f = Files::new();
    let (g, p) = (f.put("c6.txt", C6), f.put("ears.txt", EARS));
    let o = whisker(&["betti", "--graph", s(&g), "--partition", s(&p), "--kind", "pi", "--oracle-bound", "6"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn rejected_partition_exits_1() {
    let f = Files::new();
    let g = f.put("l6.txt", L6);
    // v1 and v2 are adjacent, so they cannot share a cluster
    let p = f.put("bad.txt", "cluster U1: v1 v2\n");
    let o = whisker(&["build", "--graph", s(&g), "--partition", s(&p), "--kind", "cc"]);
    assert_eq!(o.status.code(), Some(1), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn bad_input_exits_2() {
    let f = Files::new();
    let g = f.put("g.txt", "edge 1\n");
    assert_eq!(whisker(&["facets", "--graph", s(&g)]).status.code(), Some(2));
    assert_eq!(whisker(&["build", "--graph", "/nonexistent/graph.txt"]).status.code(), Some(2));
    assert_eq!(whisker(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn properties_are_deterministic() {
    let a = whisker(&["properties", "--seed", "9", "--count", "8"]);
    let b = whisker(&["properties", "--seed", "9", "--count", "8"]);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));
    assert!(stdout(&a).lines().all(|l| l.starts_with("ok\t")), "{}", stdout(&a));
}

#[test]
fn poset_writes_a_hasse_diagram() {
    let f = Files::new();
    let (g, p) = (f.put("c6.txt", C6), f.put("ears.txt", EARS));
    let dot = f.dir.path().join("p.dot");
    let o = whisker(&["poset", "--graph", s(&g), "--partition", s(&p), "--dot", s(&dot)]);
    assert!(o.status.success());
    let text = fs::read_to_string(&dot).unwrap();
    assert_eq!(text.matches("[label=").count(), 18);
    assert!(text.contains("n17 -> n4"));
}
