use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

use pathchain::chains::allowed_paths;
use pathchain::linalg::rank;
use pathchain::{parse_digraph, serialize, Digraph, ExactMatrix, Ring, Scalar};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pathchain")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let o = bin(args);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

fn scratch(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("pathchain-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p
}

fn dims(v: &Value) -> Vec<u64> {
    v["omega_dims"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect()
}

/// `|A_n|` minus the rank of the map to non-allowed boundary terms.
fn brute_omega_dim(g: &Digraph, n: usize) -> u64 {
    let paths = allowed_paths(g, n);
    let mut rows: Vec<Vec<usize>> = Vec::new();
    let mut m: Vec<(usize, usize, i64)> = Vec::new();
    for (c, p) in paths.iter().enumerate() {
        for i in 0..=n {
            let q: Vec<usize> = p.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &v)| v).collect();
            let regular = q.windows(2).all(|w| w[0] != w[1]);
            let allowed = q.windows(2).all(|w| g.has_edge(w[0], w[1]));
            if n == 0 || !regular || allowed {
                continue;
            }
            let r = rows.iter().position(|x| *x == q).unwrap_or_else(|| {
                rows.push(q);
                rows.len() - 1
            });
            m.push((r, c, if i % 2 == 0 { 1 } else { -1 }));
        }
    }
    let mut mat = ExactMatrix::zeros(rows.len(), paths.len());
    for (r, c, s) in m {
        let x = mat.get(r, c) + Scalar::from_integer(s.into());
        mat.set(r, c, x);
    }
    (paths.len() - if rows.is_empty() { 0 } else { rank(&mat, Ring::Rationals) }) as u64
}

#[test]
fn gen_trapezohedron_lists_eight_edges() {
    let o = bin(&["gen", "--family", "trapezohedron", "--t", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with('#'));
    let edges = text.lines().filter(|l| !l.starts_with('#') && !l.starts_with("vertex ")).count();
    assert_eq!(edges, 4 * 2);
}

#[test]
fn gen_round_trips() {
    for family in ["euler", "trapezohedron", "multiplicity", "multisquare-chain"] {
        let o = bin(&["gen", "--family", family, "--t", "3"]);
        let text = stdout(&o);
        let g = parse_digraph(&text).unwrap();
        let body: String = text.lines().filter(|l| !l.starts_with('#')).map(|l| format!("{l}\n")).collect();
        assert_eq!(serialize(&g), body);
    }
    let o = bin(&["gen", "--random", "6", "--seed", "3", "--edge-prob", "1/2"]);
    assert!(parse_digraph(&stdout(&o)).is_ok());
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(bin(&["gen", "--family", "multiplicity", "--t", "1"]).status.code(), Some(1));
    assert_eq!(bin(&["gen", "--family", "nonesuch", "--t", "3"]).status.code(), Some(1));
    assert_eq!(bin(&["compute", "--family", "euler", "--t", "2", "--ring", "zp:4"]).status.code(), Some(1));
    assert_eq!(bin(&["compute", "--family", "euler", "--t", "2", "--emit", "xml"]).status.code(), Some(1));
    assert_eq!(bin(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(bin(&["compute"]).status.code(), Some(1));
}

#[test]
fn input_errors_exit_two() {
    assert_eq!(bin(&["compute", "--input", "/nonexistent/graph.txt"]).status.code(), Some(2));
    let bad = scratch("bad.txt", "a b c\n");
    assert_eq!(bin(&["compute", "--input", bad.to_str().unwrap()]).status.code(), Some(2));
    let cyclic = scratch("cyclic.txt", "a b\nb a\n");
    let path = cyclic.to_str().unwrap();
    assert_eq!(bin(&["compute", "--input", path]).status.code(), Some(2));
    let v = json(&["compute", "--input", path, "--max-dim", "3"]);
    assert_eq!(v["truncated"], Value::Bool(true));
    assert_eq!(v["euler"], Value::Null);
}

#[test]
fn mutation_cap_exits_three() {
    let o = bin(&["inductive", "--family", "multiplicity", "--t", "2", "--dim", "4", "--mutation-cap", "1"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn trapezohedron_dimensions() {
    let o = bin(&["gen", "--family", "trapezohedron", "--t", "2"]);
    let file = scratch("t2.txt", &stdout(&o));
    let v = json(&["compute", "--input", file.to_str().unwrap(), "--ring", "q", "--max-dim", "4"]);
    let g = parse_digraph(&stdout(&o)).unwrap();
    let oracle: Vec<u64> = (0..=4).map(|n| brute_omega_dim(&g, n)).collect();
    assert_eq!(oracle[..2], [6, 8]);
    assert_eq!(dims(&v), oracle);
    assert_eq!(dims(&v), [6, 8, 4, 1, 0]);
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(keys, ["betti", "digraph", "euler", "max_dim", "omega_dims", "ring", "torsion", "truncated"]);
}

#[test]
fn euler_three_over_z3() {
    let v = json(&["compute", "--family", "euler", "--t", "3", "--ring", "zp:3"]);
    assert_eq!(dims(&v)[4], 1);
    let v = json(&["compute", "--family", "euler", "--t", "3", "--ring", "q"]);
    assert_eq!(dims(&v)[4], 0);
}

#[test]
fn empty_input() {
    let file = scratch("empty.txt", "# nothing here\n");
    let v = json(&["compute", "--input", file.to_str().unwrap()]);
    assert_eq!(dims(&v), Vec::<u64>::new());
}

#[test]
fn csv_and_boundaries() {
    let o = bin(&["compute", "--family", "trapezohedron", "--t", "2", "--emit", "csv"]);
    assert_eq!(stdout(&o), "dim,omega,betti\n0,6,1\n1,8,0\n2,4,0\n3,1,0\n");
    let v = json(&["compute", "--family", "trapezohedron", "--t", "2", "--ring", "z", "--with-boundaries"]);
    let b = v["boundaries"].as_array().unwrap();
    assert_eq!(b.len(), 4);
    assert_eq!(b[3]["matrix"]["cols"], 1);
    assert_eq!(b[3]["basis"].as_array().unwrap().len(), 1);
}

#[test]
fn inductive_examples() {
    let sq = scratch("square.txt", "u v1\nu v2\nv1 w\nv2 w\n");
    let v = json(&["inductive", "--input", sq.to_str().unwrap(), "--dim", "2"]);
    let gens = &v["generators"];
    let els = gens["elements"].as_array().unwrap();
    assert_eq!(els.len(), 1);
    assert_eq!(els[0]["chain"].as_array().unwrap().len(), 2);
    assert_eq!(els[0]["structure"]["hyperedges"].as_array().unwrap().len(), 1);
    assert_eq!(gens["spans"], Value::Bool(true));

    let v = json(&["inductive", "--family", "multiplicity", "--t", "2", "--dim", "4", "--ring", "z"]);
    let els = v["generators"]["elements"].as_array().unwrap();
    assert_eq!(els.len(), 1);
    let labels: Vec<&Value> = els[0]["structure"]["vertices"].as_array().unwrap().iter().map(|x| &x["label"]).collect();
    assert!((0..labels.len()).any(|i| (i + 1..labels.len()).any(|j| labels[i] == labels[j])));

    let v = json(&["inductive", "--family", "trapezohedron", "--t", "2", "--dim", "0"]);
    let els = v["generators"]["elements"].as_array().unwrap();
    assert_eq!(els.len(), 6);
    assert!(els.iter().all(|e| e["structure"]["vertices"].as_array().unwrap().is_empty()));
}

#[test]
fn output_is_deterministic() {
    let args = ["inductive", "--family", "euler", "--t", "2", "--dim", "4", "--ring", "zp:2", "--direction", "lower"];
    assert_eq!(stdout(&bin(&args)), stdout(&bin(&args)));
}

#[test]
fn verify_suite_passes() {
    let o = bin(&["verify"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 12);
}
