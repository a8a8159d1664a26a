//! Acceptance criteria. Each criterion prints one PASS or FAIL line with its
//! running time; the process fails if any criterion fails or exceeds its
//! time limit.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use cdgraph::census::{enumerate_all, enumerate_regular_connected, filter_census, Constraint, Constraints};
use cdgraph::classify::{self, classify_regular_candidates, reference_graphs, Hypothesis};
use cdgraph::cli::run;
use cdgraph::degrees::{DegreeTable, GroupDescriptor};
use cdgraph::dot::from_dot;
use cdgraph::primegraph::{cocktail_party, construct_regular_product, prime_graph_of, PrimeGraph};
use cdgraph::{CanonicalForm, SmallGraph};

type Outcome = Result<String, String>;
/// Name, time limit in seconds, check.
type Criterion = (&'static str, u64, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn forms(graphs: &[SmallGraph]) -> BTreeSet<CanonicalForm> {
    graphs.iter().map(SmallGraph::canonical_form).collect()
}

fn reference(name: &str) -> SmallGraph {
    reference_graphs().into_iter().find(|r| r.name == name).expect("reference graph").graph
}

fn a7_example() -> Outcome {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(["cdgraph", "graph", "--group", "A7", "--format", "dot"], &mut out, &mut err);
    ensure(code == 0, || format!("exit code {code}"))?;
    let g = from_dot(std::str::from_utf8(&out).unwrap()).map_err(|e| e.to_string())?;
    ensure(g.labels() == Some(&[2, 3, 5, 7][..]), || format!("vertices {:?}", g.labels()))?;
    ensure(g.is_complete() && g.order() == 4, || "not K4".into())?;
    Ok("graph --group A7 is K4 on {2,3,5,7}".into())
}

fn cubic_census_counts() -> Outcome {
    let mut parts = Vec::new();
    let mut orderly_time = Duration::ZERO;
    for (n, want) in [(4, 1usize), (6, 2), (8, 5)] {
        let t = Instant::now();
        let classes = enumerate_regular_connected(n, 3).map_err(|e| e.to_string())?.graphs;
        orderly_time += t.elapsed();
        let cons = Constraints::new(vec![Constraint::Connected, Constraint::Regular(3)]);
        let mut labeled_forms = BTreeSet::new();
        let labeled = enumerate_all(n, &cons, |g| {
            labeled_forms.insert(g.canonical_form());
        })
        .map_err(|e| e.to_string())?;
        let orbit_sum: u64 = classes.iter().map(|g| common::factorial(n) / common::brute_automorphisms(g)).sum();
        ensure(classes.len() == want, || format!("n={n}: {} classes, want {want}", classes.len()))?;
        ensure(labeled_forms == forms(&classes), || format!("n={n}: labelled oracle disagrees"))?;
        ensure(orbit_sum == labeled, || format!("n={n}: orbit sum {orbit_sum} != labelled count {labeled}"))?;
        parts.push(format!("n={n}: {want} ({labeled} labelled)"));
    }
    ensure(orderly_time < Duration::from_secs(1), || format!("orderly generation took {orderly_time:?}"))?;
    Ok(format!("connected cubic graphs {}", parts.join(", ")))
}

fn cubic_candidates() -> Outcome {
    let cons = Constraints::new(vec![Constraint::Connected, Constraint::TriangleRequired, Constraint::MaxAlpha(3)]);
    let mut survivors = Vec::new();
    for n in [6, 8] {
        let census = enumerate_regular_connected(n, 3).map_err(|e| e.to_string())?;
        survivors.extend(filter_census(&census.graphs, &cons).survivors);
    }
    let expected: Vec<SmallGraph> =
        ["prism", "cubic8-4tri", "cubic8-2tri", "cubic8-1tri"].iter().map(|n| reference(n)).collect();
    ensure(survivors.len() == 4, || format!("{} survivors", survivors.len()))?;
    ensure(forms(&survivors) == forms(&expected), || "survivors differ from the reference graphs".into())?;
    Ok("4 survivors at n in {6,8}, canonically equal to prism and the three cubic graphs of order 8".into())
}

fn solvable_cubic() -> Outcome {
    let r = classify_regular_candidates(3, Hypothesis::Solvable).map_err(|e| e.to_string())?;
    ensure(r.constraints.iter().any(|c| *c == Constraint::MaxAlpha(2)), || "alpha <= 2 not applied".into())?;
    let unique = r.unique_survivor().ok_or("no unique survivor")?;
    ensure(unique.graph.is_isomorphic(&SmallGraph::complete(4).unwrap()), || format!("unique survivor {}", unique.name))?;
    ensure(r.witnesses_verified(), || "witness does not rebuild".into())?;
    Ok(format!("unique survivor {} (combinatorial: {})", unique.name, r.survivor_names().join(", ")))
}

fn small_valencies() -> Outcome {
    let mut lines = Vec::new();
    for (k, want) in [(0usize, vec!["K1", "E2", "E3"]), (1, vec!["K2"]), (2, vec!["K3", "C4"])] {
        let r = classify_regular_candidates(k, Hypothesis::General).map_err(|e| e.to_string())?;
        let got: Vec<&str> = r.remaining().iter().map(|s| s.name.as_str()).collect();
        ensure(got == want, || format!("k={k}: {got:?}"))?;
        lines.push(format!("k={k}: {{{}}}", got.join(", ")));
    }
    // check the shapes rather than trusting the names
    let k0 = classify_regular_candidates(0, Hypothesis::General).map_err(|e| e.to_string())?;
    ensure(k0.remaining().iter().all(|s| s.graph.edge_count() == 0 && s.graph.order() <= 3), || "k=0 shapes".into())?;
    let k2 = classify_regular_candidates(2, Hypothesis::General).map_err(|e| e.to_string())?;
    let shapes = [SmallGraph::cycle(3).unwrap(), SmallGraph::cycle(4).unwrap()];
    let remaining: Vec<SmallGraph> = k2.remaining().iter().map(|s| s.graph.clone()).collect();
    ensure(forms(&remaining) == forms(&shapes), || "k=2 shapes".into())?;
    Ok(lines.join("; "))
}

fn regular_construction() -> Outcome {
    for k in [2usize, 4, 6, 8] {
        let (_, pg) = construct_regular_product(k, None).map_err(|e| e.to_string())?;
        let g = &pg.graph;
        ensure(g.regular_degree() == Some(k) && g.order() == k + 2, || format!("k={k}: wrong shape"))?;
        let cp = cocktail_party((k + 2) / 2).map_err(|e| e.to_string())?;
        ensure(g.canonical_form() == cp.canonical_form(), || format!("k={k}: not cocktail-party"))?;
        if k == 4 {
            ensure(g.is_isomorphic(&reference("octahedron")), || "k=4 is not the octahedron".into())?;
        }
    }
    Ok("k in {2,4,6,8}: k-regular on k+2 primes, equal to the cocktail-party graph; k=4 is the octahedron".into())
}

fn psl2_scan() -> Outcome {
    let s = classify::psl2_scan_summary(8192).map_err(|e| e.to_string())?;
    ensure(s.criterion_mismatches.is_empty(), || format!("criterion mismatches {:?}", s.criterion_mismatches))?;
    ensure(s.structure_mismatches.is_empty(), || format!("structure mismatches {:?}", s.structure_mismatches))?;
    let even = s.rows.iter().filter(|r| r.q >= 8 && r.q.is_power_of_two()).count();
    ensure(s.rows.iter().filter(|r| r.q >= 8 && r.q.is_power_of_two()).all(|r| r.components == 3), || "even q".into())?;
    let first = s.first_not_k4_free.map_or("none".into(), |r| format!("q={}", r.q));
    Ok(format!("{} prime powers in [4,8192], 0 mismatches, {even} even q with 3 components; first K4 at {first}", s.rows.len()))
}

fn index_arithmetic() -> Outcome {
    let c = classify::verify_index_arithmetic().map_err(|e| e.to_string())?;
    ensure(c.passed, || c.counterexample.clone().unwrap_or_default())?;
    Ok(format!("{}; {}", c.summary, c.details[0]))
}

fn brooks() -> Outcome {
    let c = classify::verify_brooks_lemma(8).map_err(|e| e.to_string())?;
    ensure(c.passed, || c.counterexample.clone().unwrap_or_default())?;
    Ok(format!("{}: 0 counterexamples", c.summary))
}

fn product_law() -> Outcome {
    let c = classify::verify_product_law(classify::PRODUCT_LAW_PAIRS, classify::PRODUCT_LAW_SEED).map_err(|e| e.to_string())?;
    ensure(c.passed, || c.counterexample.clone().unwrap_or_default())?;
    Ok(format!("{}: 0 failures", c.summary))
}

fn tabulated_groups() -> Outcome {
    let table = DegreeTable::builtin();
    let pg = |name: &str| -> Result<PrimeGraph, String> {
        prime_graph_of(&GroupDescriptor::Tabulated { name: name.into() }, &table).map_err(|e| e.to_string())
    };
    let m11 = pg("M11")?;
    ensure(m11.prime_edges() == vec![(2, 5), (2, 11), (3, 5), (5, 11)], || format!("M11 edges {:?}", m11.prime_edges()))?;
    ensure(m11.graph.find_clique(4).is_none(), || "M11 has K4".into())?;
    let j1 = pg("J1")?;
    ensure(j1.graph.find_clique(4).is_none(), || "J1 has K4".into())?;
    let a8 = pg("A8")?;
    ensure(a8.graph.find_clique(4).is_none() && !a8.adjacent(2, 3), || "A8".into())?;
    let l17 = pg("PSL2(17)")?;
    let isolated = l17.graph.vertex_of_label(17).is_some_and(|v| l17.graph.degree(v) == 0);
    ensure(l17.prime_edges() == vec![(2, 3)] && isolated, || format!("PSL2(17) edges {:?}", l17.prime_edges()))?;
    Ok("M11 edges {2-5,2-11,3-5,5-11}; J1 K4-free; A8 K4-free without 2-3; PSL2(17) edge 2-3, 17 isolated".into())
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("A7 prime graph", 1, a7_example),
        ("cubic census counts", 30, cubic_census_counts),
        ("cubic candidates of order 6 and 8", 5, cubic_candidates),
        ("solvable cubic prime graphs", 5, solvable_cubic),
        ("valencies 0, 1, 2", 1, small_valencies),
        ("regular direct-product construction", 1, regular_construction),
        ("PSL2(q) K4-freeness scan", 10, psl2_scan),
        ("PSL2(2^f) maximal-subgroup indices", 5, index_arithmetic),
        ("Brooks bound exhaustive check", 60, brooks),
        ("product/join law", 10, product_law),
        ("tabulated group spot checks", 1, tabulated_groups),
    ];
    let mut failures = 0;
    for (i, (name, limit, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let result = match result {
            Ok(detail) if elapsed > Duration::from_secs(*limit) => Err(format!("{detail}; exceeded {limit}s")),
            other => other,
        };
        let secs = elapsed.as_secs_f64();
        match result {
            Ok(detail) => println!("PASS  criterion {:2}  {name}: {detail} ({secs:.2}s, limit {limit}s)", i + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL  criterion {:2}  {name}: {why} ({secs:.2}s, limit {limit}s)", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failures} failed", criteria.len() - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
