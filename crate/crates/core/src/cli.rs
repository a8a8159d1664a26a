//! Command-line front end.
//!
//! Exit codes: 0 when the command succeeded and every check it ran passed,
//! 1 for usage or data errors (diagnostics prefixed `error:`), 2 when a
//! verification check failed (diagnostics prefixed `check-failed:`).

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufReader, Write};
use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use crate::census::{self, Constraints};
use crate::classify::{self, describe, Hypothesis};
use crate::degrees::{load_tabulated, DegreeSet, DegreeTable, GroupDescriptor};
use crate::dot::to_dot;
use crate::error::{Error, Result};
use crate::primegraph::{build_prime_graph, cocktail_party, construct_regular_product, prime_graph_of};
use crate::report::{self, Doc, Style};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Dot,
    Structured,
}

#[derive(Debug, Parser)]
#[command(name = "cdgraph", version, about = "Character-degree prime graphs: build, census, classify, verify")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Degree table replacing the built-in one.
    #[arg(long, global = true, value_name = "PATH")]
    data: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Prime graph of a group or degree set.
    Graph(GraphArgs),
    /// Connected k-regular graphs on n vertices, optionally filtered.
    Census {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Comma-separated filters, e.g. `triangle,alpha<=3,k4free`.
        #[arg(long)]
        constraints: Option<String>,
    },
    /// Census-and-filter pipeline for k-regular prime graphs.
    Classify {
        #[arg(long)]
        k: usize,
        #[arg(long, value_parser = ["solvable", "general"])]
        hypothesis: String,
    },
    /// K4-freeness of PSL2(q) against the |pi(q+-1)| <= 3 criterion.
    ScanPsl2 {
        #[arg(long, default_value_t = 8192)]
        qmax: u64,
    },
    /// Direct product whose prime graph is k-regular on k+2 primes.
    Construct {
        #[arg(long)]
        k: usize,
        /// Comma-separated primes; defaults to the first k+2 primes.
        #[arg(long)]
        primes: Option<String>,
    },
    /// Exhaustive checks.
    Verify {
        #[arg(long, default_value = "all", value_parser = ["figures", "brooks", "handshake", "eqn1", "product-law", "all"])]
        suite: String,
    },
    /// Consolidated cubic classification document.
    Report,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("source").required(true).args(["group", "psl2", "suzuki", "degrees"])))]
struct GraphArgs {
    /// Name of a tabulated group, e.g. A7 or M11.
    #[arg(long)]
    group: Option<String>,
    #[arg(long)]
    psl2: Option<u64>,
    /// Sz(q2) with q2 an odd power of two, at least 8.
    #[arg(long)]
    suzuki: Option<u64>,
    /// Degree list, e.g. "1,6,10,14".
    #[arg(long)]
    degrees: Option<String>,
}

/// What a command produced: the document, plus a failed check if any.
struct Outcome {
    output: String,
    failure: Option<String>,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome { output, failure: None }
    }
}

fn parse_numbers(s: &str) -> Result<Vec<u64>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| Error::Domain(format!("`{t}` is not a positive integer"))))
        .collect()
}

fn load_table(path: &Option<PathBuf>) -> Result<DegreeTable> {
    match path {
        None => Ok(DegreeTable::builtin()),
        Some(p) => {
            let file = File::open(p).map_err(|e| Error::Domain(format!("cannot open {}: {e}", p.display())))?;
            load_tabulated(BufReader::new(file))
        }
    }
}

fn style(format: Format) -> Style {
    match format {
        Format::Structured => Style::Structured,
        _ => Style::Text,
    }
}

fn no_dot(format: Format, command: &str) -> Result<()> {
    if format == Format::Dot {
        return Err(Error::Domain(format!("--format dot is not available for `{command}`")));
    }
    Ok(())
}

fn execute(cli: Cli) -> Result<Outcome> {
    let format = cli.format;
    let mut doc = Doc::new(style(format));
    match cli.command {
        Command::Graph(args) => {
            let table = load_table(&cli.data)?;
            let (pg, label) = if let Some(name) = args.group {
                let group = GroupDescriptor::Tabulated { name: name.clone() };
                (prime_graph_of(&group, &table)?, name)
            } else if let Some(q) = args.psl2 {
                let group = GroupDescriptor::Psl2 { q };
                (prime_graph_of(&group, &table)?, group.to_string())
            } else if let Some(q2) = args.suzuki {
                let group = GroupDescriptor::Suzuki { q2 };
                (prime_graph_of(&group, &table)?, group.to_string())
            } else {
                let degrees = DegreeSet::new(parse_numbers(args.degrees.as_deref().unwrap_or_default())?)?;
                (build_prime_graph(&degrees)?, format!("degrees {degrees}"))
            };
            if format == Format::Dot {
                return Ok(Outcome::ok(to_dot(&pg.graph)));
            }
            report::render_prime_graph(&mut doc, &pg, &label);
            Ok(Outcome::ok(doc.finish()))
        }
        Command::Census { n, k, constraints } => {
            let c = census::enumerate_regular_connected(n, k)?;
            let filter = match &constraints {
                Some(s) => Some(Constraints::parse_list(s)?),
                None => None,
            };
            let outcome = filter.as_ref().map(|f| census::filter_census(&c.graphs, f));
            // every survivor must satisfy the query when re-checked
            let mut failure = None;
            let survivors = outcome.as_ref().map_or(&c.graphs, |o| &o.survivors);
            for g in survivors {
                let ok = g.regular_degree() == Some(k) && g.is_connected() && filter.as_ref().is_none_or(|f| f.holds(g));
                if !ok {
                    failure = Some(format!("census output {} violates the query", g.canonical_form()));
                }
            }
            let output = if format == Format::Dot {
                survivors.iter().map(to_dot).collect::<String>()
            } else {
                report::render_census(&mut doc, &c, outcome.as_ref());
                doc.finish()
            };
            Ok(Outcome { output, failure })
        }
        Command::Classify { k, hypothesis } => {
            let hypothesis: Hypothesis = hypothesis.parse()?;
            let table = load_table(&cli.data)?;
            let r = classify::classify_with_table(k, hypothesis, &table)?;
            let failure = (!r.witnesses_verified()).then(|| "a realized survivor's witness does not rebuild to it".to_string());
            let output = if format == Format::Dot {
                r.survivors.iter().map(|s| to_dot(&s.graph)).collect()
            } else {
                report::render_classification(&mut doc, &r);
                doc.finish()
            };
            Ok(Outcome { output, failure })
        }
        Command::ScanPsl2 { qmax } => {
            no_dot(format, "scan-psl2")?;
            let s = classify::psl2_scan_summary(qmax)?;
            report::render_scan(&mut doc, &s, true);
            let failure = (!s.passed()).then(|| {
                format!(
                    "scan-psl2: criterion mismatches at q = {:?}, structure mismatches at q = {:?}",
                    s.criterion_mismatches, s.structure_mismatches
                )
            });
            Ok(Outcome { output: doc.finish(), failure })
        }
        Command::Construct { k, primes } => {
            let supply = primes.as_deref().map(parse_numbers).transpose()?;
            let (group, pg) = construct_regular_product(k, supply.as_deref())?;
            let expected = cocktail_party((k + 2) / 2)?;
            let matches = pg.graph.is_isomorphic(&expected).then(|| describe(&pg.graph));
            let failure = matches.is_none().then(|| format!("construct: k={k} graph is not the cocktail-party graph"));
            let output = if format == Format::Dot {
                to_dot(&pg.graph)
            } else {
                report::render_construction(&mut doc, k, &group, &pg, matches.as_deref());
                doc.finish()
            };
            Ok(Outcome { output, failure })
        }
        Command::Verify { suite } => {
            no_dot(format, "verify")?;
            let checks = classify::run_suite(&suite)?;
            for c in &checks {
                report::render_check(&mut doc, c);
            }
            let failed: Vec<String> = checks
                .iter()
                .filter(|c| !c.passed)
                .map(|c| format!("{}: {}", c.name, c.counterexample.as_deref().unwrap_or("failed")))
                .collect();
            let failure = (!failed.is_empty()).then(|| failed.join("; "));
            Ok(Outcome { output: doc.finish(), failure })
        }
        Command::Report => {
            no_dot(format, "report")?;
            let r = classify::cubic_classification_report()?;
            report::render_cubic(&mut doc, &r);
            let failure = (!r.passed()).then(|| "report: a consolidated check failed".to_string());
            Ok(Outcome { output: doc.finish(), failure })
        }
    }
}

/// Runs the command line `argv` (including the program name), writing the
/// document to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let text = e.render().to_string();
            let text = text.strip_prefix("error: ").unwrap_or(&text);
            let _ = write!(err, "error: {text}");
            return 1;
        }
    };
    match execute(cli) {
        Ok(outcome) => {
            let _ = out.write_all(outcome.output.as_bytes());
            match outcome.failure {
                None => 0,
                Some(f) => {
                    let _ = writeln!(err, "check-failed: {f}");
                    2
                }
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("cdgraph").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn a7_dot() {
        let (code, out, _) = call(&["graph", "--group", "A7", "--format", "dot"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("graph {\n  2;\n  3;\n  5;\n  7;\n"));
        assert_eq!(out.matches(" -- ").count(), 6);
    }

    #[test]
    fn usage_errors_exit_one() {
        let (code, _, err) = call(&["graph"]);
        assert_eq!(code, 1);
        assert!(err.starts_with("error:"));
        let (code, _, err) = call(&["graph", "--group", "Nope"]);
        assert_eq!((code, err.as_str()), (1, "error: unknown group `Nope`\n"));
        let (code, _, _) = call(&["census", "--n", "6", "--k", "3", "--bogus"]);
        assert_eq!(code, 1);
        let (code, _, err) = call(&["classify", "--k", "5", "--hypothesis", "general"]);
        assert_eq!(code, 1);
        assert!(err.contains("beyond the supported range"));
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = call(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("scan-psl2"));
    }

    #[test]
    fn degrees_flag() {
        let (code, out, _) = call(&["graph", "--degrees", "1,6,10,15", "--format", "structured"]);
        assert_eq!(code, 0);
        assert!(out.contains("primes\t{2,3,5}\n"));
        assert!(out.contains("edges\t2-3 2-5 3-5\n"));
    }
}
