//! Graphviz DOT export and a parser for the subset it emits.
//!
//! Output is an undirected `graph { ... }` block: one line per vertex, then
//! one line per edge, both sorted by vertex name. Labelled graphs use their
//! labels (primes) as names; unlabelled graphs use vertex indices.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::SmallGraph;

pub fn to_dot(g: &SmallGraph) -> String {
    let mut names: Vec<u64> = (0..g.order()).map(|v| g.vertex_name(v)).collect();
    let mut edges: Vec<(u64, u64)> = g
        .edges()
        .into_iter()
        .map(|(u, v)| {
            let (a, b) = (g.vertex_name(u), g.vertex_name(v));
            (a.min(b), a.max(b))
        })
        .collect();
    names.sort_unstable();
    edges.sort_unstable();
    let mut out = String::from("graph {\n");
    for v in names {
        let _ = writeln!(out, "  {v};");
    }
    for (a, b) in edges {
        let _ = writeln!(out, "  {a} -- {b};");
    }
    out.push_str("}\n");
    out
}

/// Parses DOT in the form written by [`to_dot`]: numeric vertex names,
/// `a;` vertex statements and `a -- b;` edge statements. When every name is
/// a distinct prime the result is labelled with them.
pub fn from_dot(text: &str) -> Result<SmallGraph> {
    let mut names: Vec<u64> = Vec::new();
    let mut edges = Vec::new();
    let mut opened = false;
    let mut closed = false;
    let index = |name: u64, names: &mut Vec<u64>| match names.iter().position(|&x| x == name) {
        Some(i) => i,
        None => {
            names.push(name);
            names.len() - 1
        }
    };
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let syntax = |msg: &str| Error::Syntax { line: lineno + 1, msg: msg.to_string() };
        if line.is_empty() || line.starts_with("//") || line.starts_with('#') {
            continue;
        }
        if !opened {
            let header = line.strip_suffix('{').map(str::trim).ok_or_else(|| syntax("expected `graph {`"))?;
            if header.split_whitespace().next() != Some("graph") {
                return Err(syntax("expected an undirected `graph` block"));
            }
            opened = true;
            continue;
        }
        if line == "}" {
            closed = true;
            continue;
        }
        if closed {
            return Err(syntax("content after closing brace"));
        }
        let stmt = line.strip_suffix(';').unwrap_or(line).trim();
        let parse = |s: &str| s.trim().parse::<u64>().map_err(|_| syntax(&format!("bad vertex name `{}`", s.trim())));
        match stmt.split_once("--") {
            Some((a, b)) => {
                let (a, b) = (parse(a)?, parse(b)?);
                let (u, v) = (index(a, &mut names), index(b, &mut names));
                edges.push((u, v));
            }
            None => {
                index(parse(stmt)?, &mut names);
            }
        }
    }
    if !opened || !closed {
        return Err(Error::Syntax { line: text.lines().count(), msg: "unterminated graph block".into() });
    }
    let g = SmallGraph::new(names.len(), &edges, None)?;
    match g.clone().with_labels(names) {
        Ok(labelled) => Ok(labelled),
        Err(_) => Ok(g),
    }
}
