//! Command-line front end: `analyze`, `reparam`, `io-equation`, `census`
//! and `conjectures`.
//!
//! [`run`] does all the work and returns the exit code with the text for
//! standard output and standard error, so the binary only prints it. JSON
//! output (`--json`) is the stable format; plain text is for reading.
//!
//! Exit codes: 0 on success, 1 when no reparametrization exists, 2 on bad
//! input.

use std::ffi::OsString;
use std::fmt::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::algebra::ArithmeticMode;
use crate::census::{census_row, test_conjectures, CensusOptions, CensusRow};
use crate::charpoly::{image_dimension, io_equation_text, DimensionOptions, DimensionReport};
use crate::error::{Error, Result};
use crate::graph::{
    has_exchange, io_strong_component, is_inductively_strongly_connected, is_strongly_connected, CompartmentGraph,
};
use crate::reparam::{matrix_entries, reparametrize, reparametrize_with_tree, ScalingReparametrization, SpanningTree};

#[derive(Debug, Parser)]
#[command(name = "compartment-ident", version, about = "Identifiable scaling reparametrizations of linear compartment models")]
pub struct Invocation {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub flags: Flags,
}

#[derive(Debug, Args)]
pub struct Flags {
    /// Seed for the random sample points.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Number of random sample points for Jacobian ranks.
    #[arg(long, global = true, default_value_t = 2, value_parser = clap::value_parser!(u64).range(1..))]
    pub trials: u64,
    /// Compute ranks over the rationals instead of a prime field.
    #[arg(long, global = true)]
    pub exact: bool,
    /// Emit JSON.
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dimension report and structural predicates for a graph file.
    Analyze { graph: PathBuf },
    /// Identifiable scaling reparametrization of a graph file.
    Reparam {
        graph: PathBuf,
        /// Spanning tree as comma-separated edges `j-i` (edge j -> i).
        #[arg(long)]
        tree: Option<String>,
    },
    /// The input-output equation of a graph file.
    IoEquation { graph: PathBuf },
    /// One census row as CSV (or JSON).
    Census {
        n: usize,
        m: usize,
        /// Include every symmetry class (implies JSON).
        #[arg(long)]
        detail: bool,
    },
    /// Collapse conjectures over all graphs on `n` vertices.
    Conjectures { n: usize },
}

/// What the binary should print and return.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }

    fn input_error(message: impl std::fmt::Display) -> Self {
        Outcome { code: 2, stdout: String::new(), stderr: format!("error: {message}\n") }
    }
}

/// Parses arguments (the first is the program name) and runs them.
pub fn run_from<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Invocation::try_parse_from(args) {
        Ok(inv) => run(&inv),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome::ok(text)
            }
        }
    }
}

pub fn run(inv: &Invocation) -> Outcome {
    let flags = &inv.flags;
    let dim = DimensionOptions::default()
        .with_seed(flags.seed)
        .with_trials(flags.trials as usize)
        .with_mode(if flags.exact { ArithmeticMode::Rational } else { ArithmeticMode::PrimeField });
    let result = match &inv.command {
        Command::Analyze { graph } => load(graph).and_then(|g| analyze(&g, dim, flags.json)),
        Command::Reparam { graph, tree } => match load(graph) {
            Ok(g) => return reparam(&g, tree.as_deref(), dim, flags.json),
            Err(e) => Err(e),
        },
        Command::IoEquation { graph } => load(graph).and_then(|g| io_equation(&g, flags.json)),
        Command::Census { n, m, detail } => census(*n, *m, dim, flags.json, *detail),
        Command::Conjectures { n } => conjectures(*n, dim, flags.json),
    };
    match result {
        Ok(text) => Outcome::ok(text),
        Err(e) => Outcome::input_error(e),
    }
}

fn load(path: &Path) -> Result<CompartmentGraph> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::MalformedInput(format!("{}: {e}", path.display())))?;
    CompartmentGraph::from_json(&text)
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn analyze(g: &CompartmentGraph, dim: DimensionOptions, as_json: bool) -> Result<String> {
    let sc = is_strongly_connected(g);
    let analyzed = if sc { g.clone() } else { io_strong_component(g) };
    let report = image_dimension(&analyzed, dim)?;
    let isc = is_inductively_strongly_connected(&analyzed).map(|c| c.ordering);
    let exchange = has_exchange(&analyzed);
    if as_json {
        return Ok(pretty(&json!({
            "graph": g.to_json_value(),
            "strongly_connected": sc,
            "analyzed": analyzed.to_json_value(),
            "inductively_strongly_connected": isc.is_some(),
            "isc_ordering": isc,
            "exchange": exchange,
            "dimension": report.to_json_value(),
        })));
    }
    let mut out = String::new();
    if !sc {
        writeln!(out, "not strongly connected; analyzing the input/output component {analyzed}").unwrap();
    }
    writeln!(out, "n = {}, m = {}", report.n, report.m).unwrap();
    writeln!(out, "dimension d = {} (expected m + 1 = {})", report.d, report.expected).unwrap();
    writeln!(out, "expected dimension: {}", yes_no(report.verdict)).unwrap();
    match isc {
        Some(order) => writeln!(out, "inductively strongly connected: yes, ordering {order:?}").unwrap(),
        None => writeln!(out, "inductively strongly connected: no").unwrap(),
    }
    match exchange {
        Some(v) => writeln!(out, "exchange: 1 <-> {v}").unwrap(),
        None => writeln!(out, "exchange: none").unwrap(),
    }
    writeln!(out, "({} trials, seed {}, {})", report.trials, report.seed, report.mode).unwrap();
    Ok(out)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Parses `j-i,j-i,...` into edge pairs `(j, i)`.
pub fn parse_tree_spec(spec: &str) -> Result<Vec<(usize, usize)>> {
    spec.split(',')
        .map(|item| {
            let bad = || Error::MalformedInput(format!("tree edge `{item}` is not of the form j-i"));
            let (j, i) = item.trim().split_once('-').ok_or_else(bad)?;
            Ok((j.trim().parse().map_err(|_| bad())?, i.trim().parse().map_err(|_| bad())?))
        })
        .collect()
}

fn reparam(g: &CompartmentGraph, tree: Option<&str>, dim: DimensionOptions, as_json: bool) -> Outcome {
    let result = match tree {
        Some(spec) => parse_tree_spec(spec)
            .and_then(|pairs| SpanningTree::from_pairs(g, &pairs))
            .and_then(|t| reparametrize_with_tree(g, &t, dim)),
        None => reparametrize(g, dim),
    };
    match result {
        Ok(r) if as_json => Outcome::ok(pretty(&r.to_json_value(g))),
        Ok(r) => Outcome::ok(reparam_text(g, &r)),
        Err(Error::NoReparametrization(report)) => Outcome { code: 1, stdout: no_reparam_text(&report, as_json), stderr: String::new() },
        Err(e) => Outcome::input_error(e),
    }
}

fn no_reparam_text(report: &DimensionReport, as_json: bool) -> String {
    if as_json {
        return pretty(&json!({ "reparametrization": null, "dimension": report.to_json_value() }));
    }
    format!(
        "no identifiable scaling reparametrization exists: d = {} < m + 1 = {}\n",
        report.d, report.expected
    )
}

fn reparam_text(g: &CompartmentGraph, r: &ScalingReparametrization) -> String {
    let mut out = String::new();
    let tree: Vec<String> = r.tree.edges.iter().map(|&k| g.edge(k).parameter_name()).collect();
    writeln!(out, "spanning tree: {}", tree.join(", ")).unwrap();
    let v = r.to_json_value(g);
    for f in v["f"].as_array().into_iter().flatten() {
        writeln!(out, "f{} = {}", f["vertex"], f["monomial"].as_str().unwrap_or_default()).unwrap();
    }
    writeln!(out, "reparametrized matrix:").unwrap();
    let entries = matrix_entries(g, r);
    let width = entries.iter().flatten().map(String::len).max().unwrap_or(1);
    for row in &entries {
        let cells: Vec<String> = row.iter().map(|e| format!("{e:>width$}")).collect();
        writeln!(out, "  [ {} ]", cells.join("  ")).unwrap();
    }
    writeln!(out, "cycle basis:").unwrap();
    for (l, c) in r.basis.monomial_strings(g).iter().enumerate() {
        writeln!(out, "  q{} = {c}", l + 1).unwrap();
    }
    for x in v["expressions"].as_array().into_iter().flatten() {
        let (j, i) = (x["edge"][0].as_u64().unwrap_or(0) as usize, x["edge"][1].as_u64().unwrap_or(0) as usize);
        let name = crate::graph::parameter_name(i, j).replacen('a', "b", 1);
        writeln!(out, "{name} = {}", x["in_cycles"].as_str().unwrap_or_default()).unwrap();
    }
    out
}

fn io_equation(g: &CompartmentGraph, as_json: bool) -> Result<String> {
    let eq = io_equation_text(g)?;
    Ok(if as_json { pretty(&json!({ "equation": eq })) } else { format!("{eq}\n") })
}

fn census(n: usize, m: usize, dim: DimensionOptions, as_json: bool, detail: bool) -> Result<String> {
    let opts = CensusOptions { dimension: dim, detail, ..CensusOptions::default() };
    let row = census_row(n, m, opts)?;
    if as_json || detail {
        return Ok(pretty(&row.to_json_value()));
    }
    Ok(format!("{}\n{}\n", CensusRow::CSV_HEADER, row.to_csv()))
}

fn conjectures(n: usize, dim: DimensionOptions, as_json: bool) -> Result<String> {
    let opts = CensusOptions { dimension: dim, ..CensusOptions::default() };
    let reports = test_conjectures(n, opts)?;
    if as_json {
        return Ok(pretty(&serde_json::to_value(&reports).expect("reports serialize")));
    }
    let mut out = String::new();
    for r in &reports {
        writeln!(
            out,
            "{}: {} graphs, {} collapses, {} counterexamples",
            r.id.as_str(),
            r.tested_graphs,
            r.tested_collapses,
            r.counterexamples.len()
        )
        .unwrap();
        for c in &r.counterexamples {
            writeln!(out, "  {} at exchange {} -> {}", c.graph, c.exchange, c.collapsed).unwrap();
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tree_specs() {
        assert_eq!(parse_tree_spec("2-1, 3-2").unwrap(), vec![(2, 1), (3, 2)]);
        assert!(parse_tree_spec("2>1").is_err());
        assert!(parse_tree_spec("a-1").is_err());
    }

    #[test]
    fn bad_flags_exit_two() {
        let out = run_from(["compartment-ident", "census", "3", "4", "--trials", "0"]);
        assert_eq!(out.code, 2);
        let out = run_from(["compartment-ident", "frobnicate"]);
        assert_eq!(out.code, 2);
    }

    #[test]
    fn census_csv() {
        let out = run_from(["compartment-ident", "census", "3", "4"]);
        assert_eq!(out.code, 0);
        assert_eq!(out.stdout, "n,m,A,B,C,D,E,F\n3,4,9,7,5,4,4,4\n");
        let out = run_from(["compartment-ident", "census", "6", "6"]);
        assert_eq!(out.code, 2);
    }
}
