use std::fs;
use std::process::{Command, Output};

use fdim_cli::document::EmbeddingDocument;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tempfile::TempDir;

fn fdim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fdim")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn complete_edges(n: usize) -> String {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| format!("{i} {j}\n"))).collect()
}

#[test]
fn cycle_ten_is_d_10_3_7() {
    let o = fdim(&["embed", "--method", "cycle", "--n", "10"]);
    assert!(o.status.success());
    let doc: EmbeddingDocument = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc.moves, [vec![3], vec![7]]);
    assert_eq!(doc.polytope, [vec![0], vec![9]]);
    assert_eq!(doc.vertex_map["1"], [3]);
}

#[test]
fn verify_accepts_then_rejects_a_deleted_move() {
    let dir = TempDir::new().unwrap();
    let graph = write(&dir, "c7.txt", "a b\nb c\nc d\nd e\ne f\nf g\ng a\n");
    let doc = dir.path().join("c7.json");
    let o = fdim(&["embed", "--method", "cycle", "--graph", &graph, "-o", doc.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 2, "temporary file left behind");
    let o = fdim(&["verify", "--graph", &graph, "--document", doc.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));

    let mut d: EmbeddingDocument = serde_json::from_str(&fs::read_to_string(&doc).unwrap()).unwrap();
    d.moves.remove(0);
    let broken = write(&dir, "broken.json", &serde_json::to_string(&d).unwrap());
    let o = fdim(&["verify", "--graph", &graph, "--document", &broken]);
    assert_eq!(o.status.code(), Some(1));
    assert!(o.stdout.is_empty());
    assert!(!o.stderr.is_empty());
}

#[test]
fn verify_rejects_a_different_graph() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "p4.txt", "a b\nb c\nc d\n");
    let star = write(&dir, "s3.txt", "a b\na c\na d\n");
    let doc = stdout(&fdim(&["embed", "--method", "simplex", "--graph", &path]));
    let doc = write(&dir, "p4.json", &doc);
    assert_eq!(fdim(&["verify", "--graph", &star, "--document", &doc]).status.code(), Some(1));
}

#[test]
fn loops_and_bad_documents_are_input_errors() {
    let dir = TempDir::new().unwrap();
    let looped = write(&dir, "loop.txt", "a b\nx x\n");
    let o = fdim(&["fdim", "--graph", &looped]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));

    let graph = write(&dir, "k2.txt", "a b\n");
    let doc = stdout(&fdim(&["embed", "--method", "simplex", "--graph", &graph]));
    let old = write(&dir, "old.json", &doc.replace("fdim/1", "fdim/0"));
    assert_eq!(fdim(&["verify", "--graph", &graph, "--document", &old]).status.code(), Some(2));
    let junk = write(&dir, "junk.json", "{\"version\": \"fdim/1\"}");
    assert_eq!(fdim(&["verify", "--graph", &graph, "--document", &junk]).status.code(), Some(2));
    let missing = dir.path().join("missing.txt");
    assert_eq!(fdim(&["fdim", "--graph", missing.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn fdim_of_k8() {
    let dir = TempDir::new().unwrap();
    let graph = write(&dir, "k8.txt", &complete_edges(8));
    let cert = dir.path().join("cert.json");
    let o = fdim(&["fdim", "--graph", &graph, "--certificate", cert.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("lower=3 upper=3 exact\n"));
    assert_eq!(fdim(&["verify", "--graph", &graph, "--document", cert.to_str().unwrap()]).status.code(), Some(0));
}

#[test]
fn fdim_of_a_star_names_both_certificates() {
    let dir = TempDir::new().unwrap();
    let graph = write(&dir, "star.txt", "c 1\nc 2\nc 3\nc 4\n");
    let out = stdout(&fdim(&["fdim", "--graph", &graph]));
    assert!(out.contains("lower=2 upper=2 exact"));
    assert!(out.contains("not a difference graph"));
    assert!(out.contains("apex embedding"));
}

#[test]
fn caps_exit_with_three() {
    let o = fdim(&["search-dps", "--n", "5", "--dim", "2", "--box", "50", "--max-box", "100"]);
    assert_eq!(o.status.code(), Some(3));
    let o = fdim(&["search-dps", "--n", "5", "--dim", "2", "--box", "4", "--budget", "3"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn search_dps_reports_none_or_a_set() {
    let o = fdim(&["search-dps", "--n", "5", "--dim", "2", "--box", "4"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("none"));
    let o = fdim(&["search-dps", "--n", "4", "--dim", "2", "--box", "2"]);
    assert!(stdout(&o).contains("\"generators\""));
}

#[test]
fn fiber_graph_dot_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "p.json", "{\"dimension\": 1, \"generators\": [[0], [4]], \"version\": \"fdim/1\"}");
    let m = write(&dir, "m.json", "{\"dimension\": 1, \"moves\": [[-2], [3]], \"version\": \"fdim/1\"}");
    let a = stdout(&fdim(&["fiber-graph", "--polytope", &p, "--moves", &m]));
    let b = stdout(&fdim(&["fiber-graph", "--polytope", &p, "--moves", &m]));
    assert_eq!(a, b);
    assert!(a.starts_with("graph G {\n  n0 [label=\"(0)\"];"));
    assert_eq!(a.matches(" -- ").count(), 3 + 2);
}

#[test]
fn markov_reports() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "p.json", "{\"dimension\": 1, \"generators\": [[1], [8]], \"version\": \"fdim/1\"}");
    let m = write(&dir, "m.json", "{\"dimension\": 1, \"moves\": [[3], [5]], \"version\": \"fdim/1\"}");
    let out = stdout(&fdim(&["markov", "--polytope", &p, "--moves", &m, "--min-size-cap", "4"]));
    assert!(out.contains("lattice points: 8\n"));
    assert!(out.contains("markov basis: true\n"));
    assert!(out.contains("bipartite criterion: applies=false bipartite=true\n"));
    assert!(out.contains("min markov basis size: 2\n"));
}

#[test]
fn embedding_is_label_order_independent() {
    let dir = TempDir::new().unwrap();
    let lines = ["a b", "b c", "c d", "d e", "e a", "a c", "node z"];
    let mut shuffled = lines.to_vec();
    shuffled.shuffle(&mut ChaCha8Rng::seed_from_u64(3));
    let first = write(&dir, "g1.txt", &lines.join("\n"));
    let second = write(&dir, "g2.txt", &shuffled.join("\n"));
    let doc = write(&dir, "g.json", &stdout(&fdim(&["embed", "--method", "best", "--graph", &first])));
    assert_eq!(fdim(&["verify", "--graph", &second, "--document", &doc]).status.code(), Some(0));
}

#[test]
fn product_and_multipartite_from_flags() {
    let dir = TempDir::new().unwrap();
    let a = write(&dir, "a.txt", "x y\n");
    let b = write(&dir, "b.txt", "p q\nq r\n");
    let o = fdim(&["embed", "--method", "product", "--graph", &a, "--graph", &b]);
    assert!(o.status.success());
    let doc: EmbeddingDocument = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc.vertex_map.len(), 6);
    assert!(doc.vertex_map.contains_key("(x,q)"));
    let o = fdim(&["embed", "--method", "complete-multipartite", "--sizes", "2,2,1"]);
    assert!(o.status.success());
    assert_eq!(fdim(&["embed", "--method", "difference", "--graph", &write(&dir, "k3.txt", "a b\nb c\nc a\n")]).status.code(), Some(2));
}
