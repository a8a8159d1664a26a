//! End-to-end behaviour of the command-line front end.

use cdgraph::classify::reference_graphs;
use cdgraph::cli::run;
use cdgraph::dot::{from_dot, to_dot};

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("cdgraph").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn a7_is_k4_in_dot() {
    let (code, out, err) = call(&["graph", "--group", "A7", "--format", "dot"]);
    assert_eq!((code, err.as_str()), (0, ""));
    let g = from_dot(&out).unwrap();
    assert_eq!(g.labels().unwrap(), &[2, 3, 5, 7]);
    assert!(g.is_complete());
}

#[test]
fn solvable_cubic_classification() {
    let (code, out, _) = call(&["classify", "--k", "3", "--hypothesis", "solvable"]);
    assert_eq!(code, 0);
    assert!(out.contains("unique survivor: K4\n"), "{out}");
}

#[test]
fn construct_quartic_is_octahedron() {
    let (code, out, _) = call(&["construct", "--k", "4"]);
    assert_eq!(code, 0);
    assert!(out.contains("reference match: octahedron\n"));
    assert!(out.contains("4-regular: yes\n"));
    let (code, _, err) = call(&["construct", "--k", "3"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("error:"));
    let (code, out, _) = call(&["construct", "--k", "2", "--primes", "11,13,17,19"]);
    assert_eq!(code, 0);
    assert!(out.contains("edges: 11-17 11-19 13-17 13-19\n"));
}

#[test]
fn census_with_constraints() {
    let (code, out, _) = call(&["census", "--n", "8", "--k", "3", "--constraints", "triangle,alpha<=3"]);
    assert_eq!(code, 0);
    assert!(out.contains("connected graphs: 5\n"));
    assert!(out.contains("survivors: 3\n"));
    assert_eq!(out.matches("excluded: ").count(), 2);
    let (code, out, _) = call(&["census", "--n", "7", "--k", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("note: parity"));
    let (code, _, err) = call(&["census", "--n", "6", "--k", "3", "--constraints", "nonsense"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("error: unknown constraint"));
}

#[test]
fn structured_format() {
    let (code, out, _) = call(&["classify", "--k", "2", "--hypothesis", "general", "--format", "structured"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("[classification k=2 general]\n"));
    assert!(out.lines().all(|l| l.starts_with('[') || l.contains('\t')));
    assert!(out.contains("remaining\tK3, C4\n"));
}

#[test]
fn verify_and_scan_pass() {
    for suite in ["figures", "handshake", "eqn1", "product-law"] {
        let (code, out, err) = call(&["verify", "--suite", suite]);
        assert_eq!(code, 0, "{suite}: {err}");
        assert!(out.contains("result: pass"));
    }
    let (code, out, _) = call(&["scan-psl2", "--qmax", "256"]);
    assert_eq!(code, 0);
    assert!(out.contains("row: q=256 "));
    let (code, _, err) = call(&["verify", "--suite", "figures", "--format", "dot"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("error:"));
}

#[test]
fn output_is_deterministic() {
    for args in [&["report"][..], &["verify", "--suite", "product-law"], &["classify", "--k", "4", "--hypothesis", "general"]] {
        assert_eq!(call(args), call(args), "{args:?}");
    }
}

#[test]
fn reference_graphs_round_trip_through_dot() {
    for r in reference_graphs() {
        let back = from_dot(&to_dot(&r.graph)).unwrap();
        assert!(back.is_isomorphic(&r.graph), "{}", r.name);
    }
}

#[test]
fn data_override_and_failed_check() {
    let dir = std::env::temp_dir().join(format!("cdgraph-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();

    let good = dir.join("good.txt");
    std::fs::write(&good, "group X\ndegrees 1 6 35\nend\n").unwrap();
    let (code, out, _) = call(&["graph", "--group", "X", "--data", good.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("edges: 2-3 5-7\n"));

    let broken = dir.join("broken.txt");
    std::fs::write(&broken, "group X\ndegrees 1 zero\nend\n").unwrap();
    let (code, _, err) = call(&["graph", "--group", "X", "--data", broken.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.starts_with("error: line 2"), "{err}");

    let (code, _, err) = call(&["graph", "--group", "A7", "--data", dir.join("missing.txt").to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.starts_with("error: cannot open"));

    // an A7 entry whose degrees do not give K4: the realized witness no longer rebuilds
    let wrong = dir.join("wrong.txt");
    std::fs::write(&wrong, "group A7\ndegrees 1 6 35\nend\n").unwrap();
    let (code, _, err) = call(&["classify", "--k", "3", "--hypothesis", "general", "--data", wrong.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.starts_with("check-failed:"), "{err}");

    std::fs::remove_dir_all(&dir).unwrap();
}
