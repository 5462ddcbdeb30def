//! Command-line front end. The binary only forwards its arguments to [`run`].

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::assignment_search::{
    list_color_function, threshold_search, unlabeled_list_color_function, SearchOptions, SearchResult, ThresholdTable,
};
use crate::catalog::{enumerate_unlabeled, filter, load_or_build, FlagFilter};
use crate::chromatic::{chromatic_polynomial, unlabeled_chromatic_polynomial};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::parse_graph6;
use crate::list_coloring::{burnside_lower_bound, count_list_colorings, unlabeled_list_coloring_count, ListAssignment};
use crate::polynomial::Polynomial;
use crate::symmetry::{automorphism_group, classify};
use crate::verifier::suite::{render_summary, run_suite, summarize, to_json_lines, Suite, SuiteConfig};
use crate::verifier::{explore_conjecture13, Status, VerificationReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_FAIL: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "ulcolor",
    version,
    about = "Exact colorings and list colorings of unlabeled graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct GraphInput {
    /// Graph in graph6 form, e.g. `Bw`.
    #[arg(long)]
    pub g6: Option<String>,
    /// Edge list, e.g. `"3: 0-1, 1-2"`.
    #[arg(long)]
    pub edges: Option<String>,
    /// Catalog entry `ORDER:INDEX`, e.g. `4:2`.
    #[arg(long)]
    pub catalog: Option<String>,
}

impl GraphInput {
    pub fn graph(&self) -> Result<Graph> {
        if let Some(s) = &self.g6 {
            return parse_graph6(s);
        }
        if let Some(s) = &self.edges {
            return s.parse();
        }
        let sel = self.catalog.as_deref().unwrap_or_default();
        let (n, i) = sel
            .split_once(':')
            .and_then(|(n, i)| Some((n.trim().parse::<usize>().ok()?, i.trim().parse::<usize>().ok()?)))
            .ok_or_else(|| Error::Precondition(format!("catalog selector {sel:?} is not ORDER:INDEX")))?;
        let entries = enumerate_unlabeled(n)?;
        let count = entries.len();
        entries
            .into_iter()
            .nth(i)
            .map(|e| e.graph)
            .ok_or_else(|| Error::Precondition(format!("order {n} has {count} classes; index {i} is out of range")))
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Automorphism group with cycle notation and independent-cycle counts.
    Aut {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Chromatic polynomial.
    Chrompoly {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        eval: Option<i64>,
    },
    /// Unlabeled chromatic polynomial.
    UnlabeledPoly {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        eval: Option<i64>,
    },
    /// List-coloring counts for one list assignment.
    Listcount {
        #[command(flatten)]
        input: GraphInput,
        /// Inline lists `0:1,2;1:1,2;2:2,3`, or `@FILE` for `{"lists": [...]}` JSON.
        #[arg(long)]
        lists: String,
    },
    /// Unlabeled list color function at `k`.
    Ulcf {
        #[command(flatten)]
        input: GraphInput,
        #[arg(short, long)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// List color function at `k`.
    Plcf {
        #[command(flatten)]
        input: GraphInput,
        #[arg(short, long)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Run a verification suite, `all`, or the `conjecture13` exploration.
    Verify {
        suite: String,
        #[arg(long, default_value_t = 5)]
        max_order: usize,
        #[arg(long = "kmax", default_value_t = 6)]
        k_max: usize,
        #[arg(long, default_value_t = SuiteConfig::default().seed)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Unlabeled graphs of one order, optionally filtered and cached.
    Catalog {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        connected: bool,
        #[arg(long)]
        point_determining: bool,
        #[arg(long)]
        chordal: bool,
        #[arg(long)]
        triangle_free: bool,
        /// Read or write the on-disk cache in this directory.
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Compare the unlabeled list color function with the unlabeled
    /// chromatic polynomial for `k = 1..=kmax`.
    Threshold {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long = "kmax")]
        k_max: usize,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
}

/// Parses `args` (program name first), runs the command and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match execute(&cli, out, err) {
        Ok(code) => code,
        Err(e @ Error::Infeasible { .. }) => {
            let _ = writeln!(err, "warning: skipped: {e}");
            let _ = match cli.format {
                Format::Json => print_json(out, &json!({"status": "skip", "note": e.to_string()})),
                Format::Table => writeln!(out, "skipped: {e}").map_err(Error::from),
            };
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn print_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    writeln!(out, "{}", serde_json::to_string(value)?)?;
    Ok(())
}

fn polynomial_json(p: &Polynomial, eval: Option<i64>) -> serde_json::Value {
    json!({
        "polynomial": p.to_string(),
        "coefficients": p,
        "factored": p.factored(),
        "value": eval.map(|k| p.eval_int(k).to_string()),
    })
}

fn print_polynomial(out: &mut dyn Write, label: &str, p: &Polynomial, eval: Option<i64>) -> Result<()> {
    writeln!(out, "{label} = {p}")?;
    if let Some(f) = p.factored() {
        writeln!(out, "factored: {f}")?;
    }
    if let Some(k) = eval {
        writeln!(out, "at k = {k}: {}", p.eval_int(k))?;
    }
    Ok(())
}

fn read_lists(spec: &str) -> Result<ListAssignment> {
    match spec.strip_prefix('@') {
        Some(path) => Ok(serde_json::from_str(&std::fs::read_to_string(path)?)?),
        None => spec.parse(),
    }
}

fn print_search(out: &mut dyn Write, format: Format, g: &Graph, k: usize, what: &str, r: &SearchResult) -> Result<()> {
    if format == Format::Json {
        return print_json(out, &json!({ "graph": g.to_string(), "k": k, "result": r }));
    }
    writeln!(out, "{what} = {}", r.value)?;
    writeln!(out, "patterns explored: {}; exhaustive: {}", r.explored, r.exhausted)?;
    for w in &r.witnesses {
        writeln!(out, "  witness: {w}  lists: {}", w.materialize())?;
    }
    Ok(())
}

fn print_table(out: &mut dyn Write, format: Format, t: &ThresholdTable, left: &str, right: &str) -> Result<()> {
    if format == Format::Json {
        return print_json(out, t);
    }
    writeln!(out, "G = {}", t.graph)?;
    writeln!(out, "{:>3} {:>12} {:>12} {:>6}", "k", left, right, "equal")?;
    for r in &t.rows {
        let list = r.list_value.map_or_else(|| "skipped".to_string(), |v| v.to_string());
        let eq = r.equal.map_or("-", |e| if e { "yes" } else { "no" });
        writeln!(out, "{:>3} {:>12} {:>12} {:>6}", r.k, list, r.polynomial_value, eq)?;
    }
    match t.empirical_k0 {
        Some(k0) => writeln!(out, "equality for every tested k >= {k0} ({})", t.note)?,
        None => writeln!(out, "no tested k0 ({})", t.note)?,
    }
    Ok(())
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let format = cli.format;
    match &cli.command {
        Command::Aut { input } => {
            let g = input.graph()?;
            let aut = automorphism_group(&g);
            let class = classify(&g, &aut);
            let elements: Vec<String> = aut.iter().map(|p| p.to_string()).collect();
            if format == Format::Json {
                print_json(
                    out,
                    &json!({"graph": g.to_string(), "order": aut.order(), "elements": elements, "classification": class}),
                )?;
            } else {
                writeln!(out, "|Aut(G)| = {}", aut.order())?;
                for (e, c) in elements.iter().zip(&class.per_element) {
                    let mark = if c.independent_cycles { "independent cycles" } else { "" };
                    writeln!(out, "  {e:<24} {:>2} cycles  {mark}", c.cycle_count)?;
                }
                writeln!(out, "a = {}, b = {}", class.a, class.b)?;
            }
        }
        Command::Chrompoly { input, eval } => {
            let g = input.graph()?;
            let p = chromatic_polynomial(&g);
            if format == Format::Json {
                print_json(out, &polynomial_json(&p, *eval))?;
            } else {
                print_polynomial(out, "P(G, k)", &p, *eval)?;
            }
        }
        Command::UnlabeledPoly { input, eval } => {
            let g = input.graph()?;
            let p = unlabeled_chromatic_polynomial(&g);
            if format == Format::Json {
                print_json(out, &polynomial_json(&p, *eval))?;
            } else {
                print_polynomial(out, "P(unlabeled G, k)", &p, *eval)?;
            }
        }
        Command::Listcount { input, lists } => {
            let g = input.graph()?;
            let lists = read_lists(lists)?;
            let aut = automorphism_group(&g);
            let labeled = count_list_colorings(&g, &lists)?;
            let unlabeled = unlabeled_list_coloring_count(&g, &aut, &lists)?;
            let bound = burnside_lower_bound(&g, &aut, &lists)?;
            if format == Format::Json {
                print_json(
                    out,
                    &json!({"graph": g.to_string(), "lists": lists, "count": labeled, "classes": unlabeled, "lower_bound": bound.to_string()}),
                )?;
            } else {
                writeln!(out, "P(G, L) = {labeled}")?;
                writeln!(out, "u_l(G, L) = {unlabeled}")?;
                writeln!(out, "averaged fixed points = {bound}")?;
            }
        }
        Command::Ulcf { input, k, workers } => {
            let g = input.graph()?;
            let r = unlabeled_list_color_function(&g, *k, &SearchOptions::with_workers(*workers))?;
            print_search(out, format, &g, *k, &format!("P_l(unlabeled G, {k})"), &r)?;
        }
        Command::Plcf { input, k, workers } => {
            let g = input.graph()?;
            let r = list_color_function(&g, *k, &SearchOptions::with_workers(*workers))?;
            print_search(out, format, &g, *k, &format!("P_l(G, {k})"), &r)?;
        }
        Command::Threshold { input, k_max, workers } => {
            let g = input.graph()?;
            let t = threshold_search(&g, *k_max, &SearchOptions::with_workers(*workers))?;
            print_table(out, format, &t, "P_l", "P")?;
        }
        Command::Catalog {
            order,
            connected,
            point_determining,
            chordal,
            triangle_free,
            cache,
        } => {
            let entries = match cache {
                Some(dir) => load_or_build(dir, *order)?,
                None => enumerate_unlabeled(*order)?,
            };
            let wanted = FlagFilter {
                connected: connected.then_some(true),
                point_determining: point_determining.then_some(true),
                chordal: chordal.then_some(true),
                triangle_free: triangle_free.then_some(true),
            };
            let kept = filter(&entries, &wanted);
            for e in &kept {
                if format == Format::Json {
                    print_json(
                        out,
                        &json!({"graph6": e.graph.to_graph6(), "edges": e.graph.to_string(), "flags": e.flags, "aut_order": e.aut_order}),
                    )?;
                } else {
                    let f = e.flags;
                    writeln!(
                        out,
                        "{:<10} |Aut|={:<5} conn={} pd={} chordal={} K3-free={}  {}",
                        e.graph.to_graph6(),
                        e.aut_order,
                        f.connected as u8,
                        f.point_determining as u8,
                        f.chordal as u8,
                        f.triangle_free as u8,
                        e.graph
                    )?;
                }
            }
            if format == Format::Table {
                writeln!(out, "{} of {} classes", kept.len(), entries.len())?;
            }
        }
        Command::Verify {
            suite,
            max_order,
            k_max,
            seed,
            workers,
        } => {
            if suite == "conjecture13" {
                let opts = SearchOptions::with_workers(*workers);
                for n in 1..=(*max_order).min(5) {
                    let t = explore_conjecture13(n, *k_max, &opts)?;
                    print_table(out, format, &t, "P_l", "closed")?;
                }
                return Ok(EXIT_OK);
            }
            let suites: Vec<Suite> = if suite == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![Suite::from_name(suite).ok_or_else(|| {
                    let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
                    Error::Precondition(format!(
                        "unknown suite {suite:?}; expected all, conjecture13, {}",
                        names.join(", ")
                    ))
                })?]
            };
            let cfg = SuiteConfig {
                max_order: *max_order,
                k_max: *k_max,
                seed: *seed,
                workers: (*workers).max(1),
            };
            let mut reports: Vec<VerificationReport> = Vec::new();
            for s in suites {
                reports.extend(run_suite(s, &cfg)?);
            }
            if format == Format::Json {
                write!(out, "{}", to_json_lines(&reports)?)?;
            } else {
                for r in reports.iter().filter(|r| r.status == Status::Fail) {
                    writeln!(out, "FAIL {} [{}]: lhs {} vs rhs {}", r.claim, r.instance, r.lhs, r.rhs)?;
                }
                write!(out, "{}", render_summary(&summarize(&reports)))?;
            }
            let skips = reports.iter().filter(|r| r.status == Status::Skip).count();
            if skips > 0 {
                writeln!(err, "warning: {skips} instance(s) skipped by feasibility guards")?;
            }
            if reports.iter().any(|r| r.status == Status::Fail) {
                return Ok(EXIT_FAIL);
            }
        }
    }
    Ok(EXIT_OK)
}
