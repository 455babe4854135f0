use std::process::{Command, Output};

use peakalg::combinatorics::{enumerate_sparse, moebius_preceq, preceq};
use peakalg::linalg::Matrix;
use peakalg::Rational;

fn peakalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_peakalg")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

/// Reads the body of a TSV matrix, dropping the header row and label column.
fn tsv_matrix(text: &str) -> Matrix {
    let rows = text
        .lines()
        .skip(1)
        .map(|l| l.split('\t').skip(1).map(|x| x.parse::<Rational>().unwrap()).collect())
        .collect();
    Matrix::from_rows(rows)
}

#[test]
fn bases_examples() {
    let o = peakalg(&["bases", "--n", "4", "--basis", "Q", "--format", "json"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o).as_array().unwrap().len(), 5);

    let o = peakalg(&["bases", "--n", "2", "--basis", "P"]);
    assert_eq!(stdout(&o), "P{}@2 = [12]\nP{1}@2 = [21]\n");

    let o = peakalg(&["bases", "--n", "4", "--basis", "X", "--type", "B", "--format", "json"]);
    let v = json(&o);
    assert_eq!(v.as_array().unwrap().len(), 16);
    assert_eq!(v[0]["type"], "B");
    // X_∅ is the identity
    assert_eq!(v[0]["terms"], serde_json::json!([{"perm": "1234", "coeff": "1"}]));
}

#[test]
fn json_terms_are_sorted_by_permutation() {
    let o = peakalg(&["bases", "--n", "3", "--basis", "Q", "--format", "json"]);
    for e in json(&o).as_array().unwrap() {
        let perms: Vec<&str> = e["terms"].as_array().unwrap().iter().map(|t| t["perm"].as_str().unwrap()).collect();
        let mut sorted = perms.clone();
        sorted.sort();
        assert_eq!(perms, sorted);
    }
}

#[test]
fn transition_matrices() {
    let pq = tsv_matrix(&stdout(&peakalg(&["matrix", "--from", "P", "--to", "Q", "--n", "6"])));
    let qp = tsv_matrix(&stdout(&peakalg(&["matrix", "--from", "Q", "--to", "P", "--n", "6"])));
    assert_eq!(pq.rows(), 13);
    assert!(pq.mul(&qp).is_identity());

    // Ō_F = Σ_{F⪯G} (-1)^{#G} Q_G, inverted by (-1)^{#F} Q_F = Σ_{F⪯G} μ(F,G) Ō_G
    let oq = tsv_matrix(&stdout(&peakalg(&["matrix", "--from", "Obar", "--to", "Q", "--n", "4"])));
    let qo = tsv_matrix(&stdout(&peakalg(&["matrix", "--from", "Q", "--to", "Obar", "--n", "4"])));
    let sign = |k: usize| if k % 2 == 0 { 1 } else { -1 };
    let sparse = enumerate_sparse(4);
    for (i, f) in sparse.iter().enumerate() {
        for (j, g) in sparse.iter().enumerate() {
            let (zeta, mu) = if preceq(f, g).unwrap() {
                (sign(g.elements().len()), sign(f.elements().len()) * moebius_preceq(f, g).unwrap())
            } else {
                (0, 0)
            };
            assert_eq!(oq.get(i, j), &Rational::from_integer(zeta.into()), "{f} {g}");
            assert_eq!(qo.get(i, j), &Rational::from_integer(mu.into()), "{f} {g}");
        }
    }

    let o = peakalg(&["matrix", "--from", "X", "--to", "Y", "--n", "3", "--type", "B", "--format", "json"]);
    let v = json(&o);
    let labels: Vec<Vec<usize>> = v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|l| {
            let s = l.as_str().unwrap().trim_matches(['{', '}']);
            s.split(',').filter(|x| !x.is_empty()).map(|x| x.parse().unwrap()).collect()
        })
        .collect();
    assert_eq!(labels.len(), 8);
    for (i, a) in labels.iter().enumerate() {
        for (j, b) in labels.iter().enumerate() {
            let zeta = if b.iter().all(|x| a.contains(x)) { "1" } else { "0" };
            assert_eq!(v["entries"][i][j], zeta);
        }
    }
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&peakalg(&["matrix", "--from", "P", "--to", "X", "--n", "3"])), 2);
    assert_eq!(code(&peakalg(&["bases", "--n", "3", "--basis", "Z"])), 2);
    assert_eq!(code(&peakalg(&["bases", "--n", "9", "--basis", "P"])), 2);
    assert_eq!(code(&peakalg(&["verify", "--suite", "nope", "--n", "2"])), 2);
    assert_eq!(code(&peakalg(&["verify", "--suite", "bases", "--n", "5..2"])), 2);
    assert_eq!(code(&peakalg(&["act", "--element", "P{1,2}@4", "--monomial", "a b c d"])), 2);
    assert_eq!(code(&peakalg(&["act", "--element", "P{1}@3", "--monomial", "a b"])), 2);
    assert_eq!(code(&peakalg(&[])), 2);
}

#[test]
fn verify_radical() {
    let o = peakalg(&["verify", "--suite", "radical", "--n", "2..6"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn verify_lie_reproduces_examples_deterministically() {
    let args = ["verify", "--suite", "lie", "--n", "5..6", "--seed", "7", "--format", "json"];
    let a = peakalg(&args);
    let b = peakalg(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["seed"], 7);
    let claims = v["claims"].as_array().unwrap();
    let example = claims
        .iter()
        .find(|c| c["anchor"].as_str().unwrap().starts_with("peak action example"))
        .expect("example claim");
    assert_eq!(example["pass"], true);
    assert_eq!(example["detail"], "-1*([a,b] c [a,[b,d]]) + 1*([a,b] [a,[b,d]] c)");
    let ids: Vec<&str> = claims.iter().map(|c| c["id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    sorted.dedup();
    assert_eq!(ids, sorted);
}

#[test]
fn verify_idempotents_reports_ideal_dimensions() {
    let o = peakalg(&["verify", "--suite", "idempotents", "--n", "2..6", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    let dims: Vec<(u64, String)> = v["claims"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["anchor"] == "dim kS_n rho_(n) = (n-1)!!^2")
        .map(|c| (c["n"].as_u64().unwrap(), c["detail"].as_str().unwrap().to_string()))
        .collect();
    assert_eq!(dims.len(), 3);
    for ((n, detail), want) in dims.iter().zip([1, 9, 225]) {
        assert_eq!(*detail, format!("trace {want} rank {want} expected {want}"), "n={n}");
    }
}

#[test]
fn config_file_and_overrides() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("peakalg.conf");
    std::fs::write(&cfg, "cap_a = 3\nseed = 11\n").unwrap();
    let cfg = cfg.to_str().unwrap();
    assert_eq!(code(&peakalg(&["--config", cfg, "bases", "--n", "4", "--basis", "P"])), 2);
    assert_eq!(code(&peakalg(&["--config", cfg, "--cap-a", "4", "bases", "--n", "4", "--basis", "P"])), 0);
    let o = peakalg(&["--config", cfg, "verify", "--suite", "ideals", "--n", "3"]);
    assert!(stdout(&o).starts_with("suite ideals n=3..3 seed=11\n"));
    let o = peakalg(&["--config", cfg, "verify", "--suite", "ideals", "--n", "3", "--seed", "5"]);
    assert!(stdout(&o).starts_with("suite ideals n=3..3 seed=5\n"));

    std::fs::write(dir.path().join("bad.conf"), "cap_z = 1\n").unwrap();
    let bad = dir.path().join("bad.conf");
    assert_eq!(code(&peakalg(&["--config", bad.to_str().unwrap(), "bases", "--n", "2", "--basis", "P"])), 2);
}

#[test]
fn export_writes_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("q.json");
    let o = peakalg(&["bases", "--n", "5", "--basis", "Obar", "--format", "json", "--export", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 8);

    let path = dir.path().join("report.json");
    let o = peakalg(&["verify", "--suite", "bases", "--n", "2..3", "--format", "json", "--export", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["passed"], v["total"]);
}

#[test]
fn act_examples() {
    let o = peakalg(&["act", "--element", "P{5}@6", "--monomial", "[a,b] c [a,[b,d]]", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["span"]["kind"], "odd factors rearranged");
    assert_eq!(
        v["span"]["terms"],
        serde_json::json!([
            {"monomial": "[a,b] c [a,[b,d]]", "coeff": "-1"},
            {"monomial": "[a,b] [a,[b,d]] c", "coeff": "1"},
        ])
    );

    let o = peakalg(&["act", "--element", "P{4}@5", "--monomial", "[a,b] [c,d] a"]);
    assert_eq!(stdout(&o), "result: 0\nspan (odd factors rearranged): 0\n");

    let o = peakalg(&["act", "--element", "[213]", "--monomial", "a b c"]);
    assert!(stdout(&o).starts_with("result: bac\n"));

    // the signed element swaps a with its partner A
    let o = peakalg(&["act", "--element", "B[-1,2]", "--monomial", "a b", "--pairs", "aA"]);
    assert_eq!(stdout(&o), "result: Ab\n");
}

#[test]
fn idempotents_command() {
    let o = peakalg(&["idempotents", "--n", "4", "--dims", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    let names: Vec<&str> = v["idempotents"].as_array().unwrap().iter().map(|r| r["name"].as_str().unwrap()).collect();
    assert_eq!(names, ["e_(4)", "e_(0,4)", "rho_(4)"]);
    assert_eq!(v["idempotents"][2]["left_ideal_dim"], "9");
    let o = peakalg(&["idempotents", "--n", "5", "--dims"]);
    assert!(stdout(&o).contains("rho_(0,5) ="));
    assert!(stdout(&o).contains("left ideal dimension 24"));
}
