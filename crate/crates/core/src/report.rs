//! Text and structured rendering of results.
//!
//! Both formats are line oriented and share one layout. Text uses
//! `== section ==` headers and `key: value` lines; the structured format uses
//! `[section]` headers and `key<TAB>value` lines, with tabs and newlines in
//! values replaced by spaces. Output depends only on the rendered values, so
//! identical inputs give byte-identical documents.

use std::collections::BTreeMap;
use std::fmt::Display;

use crate::census::{FilterOutcome, RegularCensus};
use crate::classify::{describe, CheckOutcome, ClassificationReport, CubicReport, ScanRow, ScanSummary};
use crate::degrees::GroupDescriptor;
use crate::graph::SmallGraph;
use crate::primegraph::{check_conditions, PrimeGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Style {
    Text,
    Structured,
}

/// Exclusion lists longer than this are summarised by reason in text output.
pub const TEXT_EXCLUSION_LIMIT: usize = 40;

pub struct Doc {
    style: Style,
    out: String,
}

impl Doc {
    pub fn new(style: Style) -> Self {
        Doc { style, out: String::new() }
    }

    pub fn style(&self) -> Style {
        self.style
    }

    pub fn section(&mut self, name: &str) {
        match self.style {
            Style::Text => {
                if !self.out.is_empty() {
                    self.out.push('\n');
                }
                self.out.push_str(&format!("== {name} ==\n"));
            }
            Style::Structured => self.out.push_str(&format!("[{name}]\n")),
        }
    }

    pub fn field(&mut self, key: &str, value: impl Display) {
        let value = value.to_string();
        match self.style {
            Style::Text => self.out.push_str(&format!("{key}: {value}\n")),
            Style::Structured => {
                let clean: String = value.chars().map(|c| if c == '\t' || c == '\n' { ' ' } else { c }).collect();
                self.out.push_str(&format!("{key}\t{clean}\n"));
            }
        }
    }

    pub fn finish(self) -> String {
        self.out
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn pass(b: bool) -> &'static str {
    if b {
        "pass"
    } else {
        "FAIL"
    }
}

fn join<T: Display>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

fn prime_set(ps: &[u64]) -> String {
    format!("{{{}}}", join(ps, ","))
}

/// Edges by vertex name, `a-b` separated by spaces.
pub fn edge_list(g: &SmallGraph) -> String {
    let mut edges: Vec<(u64, u64)> = g
        .edges()
        .into_iter()
        .map(|(u, v)| {
            let (a, b) = (g.vertex_name(u), g.vertex_name(v));
            (a.min(b), a.max(b))
        })
        .collect();
    edges.sort_unstable();
    if edges.is_empty() {
        return "(none)".into();
    }
    join(edges.iter().map(|(a, b)| format!("{a}-{b}")), " ")
}

pub fn graph_fields(doc: &mut Doc, g: &SmallGraph) {
    let inv = g.invariants();
    doc.field("order", inv.order);
    doc.field("edges", edge_list(g));
    doc.field("edge count", inv.edge_count);
    doc.field("degree sequence", join(&inv.degree_sequence, " "));
    doc.field("regular", inv.regular_degree.map_or("no".to_string(), |k| format!("{k}-regular")));
    doc.field("components", inv.component_sizes.len());
    doc.field("diameter", inv.diameter.map_or("infinite".to_string(), |d| d.to_string()));
    doc.field("triangles", inv.triangle_count);
    doc.field("independence number", inv.independence_number);
    doc.field("clique number", inv.clique_number);
    doc.field("chromatic number", inv.chromatic_number);
    doc.field("k4-free", yes(inv.clique_number < 4));
    doc.field("canonical form", g.canonical_form());
    doc.field("shape", describe(g));
}

pub fn render_prime_graph(doc: &mut Doc, pg: &PrimeGraph, label: &str) {
    doc.section("prime graph");
    doc.field("source", label);
    if pg.is_synthetic() {
        doc.field("provenance", "synthetic degree set (no certified group)");
    }
    doc.field("degrees", &pg.degrees);
    doc.field("primes", prime_set(pg.primes()));
    graph_fields(doc, &pg.graph);
    for solvable in [true, false] {
        let c = check_conditions(pg, solvable);
        doc.section(if solvable { "conditions (solvable)" } else { "conditions (general)" });
        doc.field("all hold", yes(c.all_ok()));
        if solvable {
            doc.field("palfy", witness_text(c.palfy_ok, c.palfy_witness.as_deref()));
            doc.field("components", pass(c.components_ok_solvable));
        } else {
            doc.field("moreto-tiep", witness_text(c.moreto_tiep_ok, c.moreto_tiep_witness.as_deref()));
            doc.field("components", pass(c.components_ok_nonsolvable));
        }
        let diam = match c.diameter_witness {
            Some((p, q)) => format!("FAIL (distance {p}-{q} exceeds 3)"),
            None => pass(c.diameter_ok).to_string(),
        };
        doc.field("diameter", diam);
        for note in &c.notes {
            doc.field("note", note);
        }
    }
}

fn witness_text(ok: bool, witness: Option<&[u64]>) -> String {
    match (ok, witness) {
        (false, Some(w)) => format!("FAIL (independent {})", prime_set(w)),
        _ => pass(ok).to_string(),
    }
}

pub fn render_classification(doc: &mut Doc, r: &ClassificationReport) {
    doc.section(&format!("classification k={} {}", r.k, r.hypothesis));
    doc.field("k", r.k);
    doc.field("hypothesis", r.hypothesis);
    doc.field("mode", r.mode);
    doc.field("orders", format!("{}..{}", r.order_bounds.0, r.order_bounds.1));
    doc.field("constraints", &r.constraints);
    for o in &r.orders {
        let mut line = format!("census {}, survivors {}, excluded {}", o.census, o.survivors, o.excluded);
        if let Some(note) = &o.note {
            line.push_str(&format!(" ({note})"));
        }
        doc.field(&format!("order {}", o.n), line);
    }
    doc.field("graphs examined", r.census_total());
    for s in &r.survivors {
        doc.field("survivor", format!("{} (n={}) {}: {}", s.name, s.graph.order(), s.status, s.citation));
        if let Some(w) = &s.witness {
            doc.field("witness", format!("{} cd={} isomorphic={}", w.group, w.degrees, yes(w.verified)));
        }
    }
    doc.field("combinatorial survivors", join(r.survivor_names(), ", "));
    let realized: Vec<&str> = r.realized().iter().map(|s| s.name.as_str()).collect();
    doc.field("realized", if realized.is_empty() { "(none)".to_string() } else { realized.join(", ") });
    match r.unique_survivor() {
        Some(s) => doc.field("unique survivor", &s.name),
        None => doc.field("remaining", join(r.remaining().iter().map(|s| s.name.as_str()), ", ")),
    }
    if doc.style() == Style::Text && r.exclusions.len() > TEXT_EXCLUSION_LIMIT {
        let mut by_reason: BTreeMap<(usize, String), usize> = BTreeMap::new();
        for e in &r.exclusions {
            *by_reason.entry((e.graph.order(), e.failed.failure_reason())).or_default() += 1;
        }
        for ((n, reason), count) in by_reason {
            doc.field("excluded", format!("{count} graphs (n={n}): {reason}"));
        }
    } else {
        for e in &r.exclusions {
            doc.field("excluded", format!("{} (n={}): {}", e.name, e.graph.order(), e.failed.failure_reason()));
        }
    }
    for note in &r.notes {
        doc.field("note", note);
    }
}

pub fn render_check(doc: &mut Doc, c: &CheckOutcome) {
    doc.section(&format!("verify {}", c.name));
    doc.field("result", pass(c.passed));
    doc.field("summary", &c.summary);
    for d in &c.details {
        doc.field("detail", d);
    }
    if let Some(x) = &c.counterexample {
        doc.field("counterexample", x);
    }
}

fn scan_row(r: &ScanRow) -> String {
    format!(
        "q={} k4_free={} pi(q-1)={} pi(q+1)={} components={} criterion={} structure={}",
        r.q,
        yes(r.k4_free),
        r.pi_minus,
        r.pi_plus,
        r.components,
        pass(r.criterion_holds),
        pass(r.structure_holds)
    )
}

pub fn render_scan(doc: &mut Doc, s: &ScanSummary, rows: bool) {
    doc.section("scan PSL2(q)");
    doc.field("q range", format!("4..{}", s.q_max));
    doc.field("prime powers", s.rows.len());
    doc.field("k4-free", s.k4_free_count);
    doc.field("criterion", "K4-free iff |pi(q-1)| <= 3 and |pi(q+1)| <= 3");
    doc.field("criterion mismatches", if s.criterion_mismatches.is_empty() { "0".to_string() } else { join(&s.criterion_mismatches, " ") });
    doc.field(
        "component structure mismatches",
        if s.structure_mismatches.is_empty() { "0".to_string() } else { join(&s.structure_mismatches, " ") },
    );
    doc.field("first not k4-free", s.first_not_k4_free.as_ref().map_or("(none)".to_string(), scan_row));
    doc.field("result", pass(s.passed()));
    if rows {
        for r in &s.rows {
            doc.field("row", scan_row(r));
        }
    }
}

pub fn render_cubic(doc: &mut Doc, r: &CubicReport) {
    doc.section("cubic prime graphs");
    doc.field("statement", "a prime graph is 3-regular if and only if it is K4");
    doc.field("summary", r.headline());
    doc.field(
        "solvable",
        r.solvable.unique_survivor().map_or("no unique survivor".to_string(), |s| format!("unique survivor {}", s.name)),
    );
    doc.field("result", pass(r.passed()));
    render_classification(doc, &r.solvable);
    render_classification(doc, &r.general);
    render_check(doc, &r.figures);
    render_scan(doc, &r.scan, false);
    render_check(doc, &r.arithmetic);
}

pub fn render_census(doc: &mut Doc, c: &RegularCensus, filtered: Option<&FilterOutcome>) {
    doc.section(&format!("census n={} k={}", c.n, c.k));
    doc.field("connected graphs", c.graphs.len());
    if let Some(note) = &c.note {
        doc.field("note", note);
    }
    let Some(f) = filtered else {
        for g in &c.graphs {
            census_line(doc, "graph", g);
        }
        return;
    };
    doc.field("survivors", f.survivors.len());
    for g in &f.survivors {
        census_line(doc, "survivor", g);
    }
    for (g, failed) in &f.exclusions {
        doc.field("excluded", format!("{} {}: {}", describe(g), g.canonical_form(), failed.failure_reason()));
    }
}

fn census_line(doc: &mut Doc, key: &str, g: &SmallGraph) {
    doc.field(
        key,
        format!(
            "{} {} triangles={} alpha={} edges={}",
            describe(g),
            g.canonical_form(),
            g.triangle_count(),
            g.independence_number(),
            edge_list(g)
        ),
    );
}

pub fn render_construction(doc: &mut Doc, k: usize, group: &GroupDescriptor, pg: &PrimeGraph, matches: Option<&str>) {
    doc.section(&format!("construction k={k}"));
    doc.field("group", group);
    doc.field("provenance", "synthetic factors with degree sets {1,p,q}; realizing solvable groups exist but are not constructed");
    doc.field("degrees", &pg.degrees);
    doc.field("primes", prime_set(pg.primes()));
    graph_fields(doc, &pg.graph);
    doc.field("order k+2", yes(pg.graph.order() == k + 2));
    doc.field(&format!("{k}-regular"), yes(pg.graph.regular_degree() == Some(k)));
    doc.field(&format!("isomorphic to cocktail party K_({}x2)", (k + 2) / 2), yes(matches.is_some()));
    if let Some(name) = matches {
        doc.field("reference match", name);
    }
}
