//! Command-line front end: compute, family, search, verify.
//!
//! Data goes to the output stream (or `--output` file), diagnostics to the
//! error stream. Exit codes: 0 success / all checks pass, 1 a verification
//! found a counterexample, 2 usage or parse error.

use crate::error::{Error, Result};
use crate::families::{closed_form_ng, Family, FamilySpec};
use crate::graph6::{from_graph6, read_graph6_lines, to_graph6};
use crate::invariants::{report, InvariantReport};
use crate::search::{
    extremal_scan, verify_theorem, GraphClass, Objective, ScanSource, TheoremId,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::io::Read;
use std::path::PathBuf;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser)]
#[command(
    name = "nivs",
    about = "Nearly independent vertex subset counts and Nordhaus-Gaddum extremal verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct OutputOptions {
    /// Output format
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Write data to this file instead of standard output
    #[arg(long)]
    output: Option<PathBuf>,
    /// Worker thread count (default: available parallelism)
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Compute sigma invariants for graph6 input
    Compute {
        /// Inline graph6 string
        #[arg(long)]
        g6: Option<String>,
        /// File with newline-delimited graph6 (`-` for stdin)
        #[arg(long)]
        input: Option<String>,
        /// Extra sigma_k values to compute via the enumeration oracle
        #[arg(long = "k", value_delimiter = ',')]
        k: Vec<usize>,
        #[command(flatten)]
        out: OutputOptions,
    },
    /// Emit a named extremal family member as graph6
    Family {
        /// Family name: complete, edgeless, star, 3k2-iso, 4k2-iso, join-g64
        #[arg(long)]
        name: String,
        #[arg(long)]
        order: usize,
        /// Also print the family's closed-form Nordhaus-Gaddum value
        #[arg(long)]
        show_ng: bool,
        #[command(flatten)]
        out: OutputOptions,
    },
    /// Exact extremal scan over all isomorphism classes of one order
    Search {
        #[arg(long)]
        order: usize,
        /// Objective: ng-min, ng-max, sigma1-max, ng-min-tree
        #[arg(long)]
        objective: String,
        /// Class to scan: all or trees
        #[arg(long, default_value = "all")]
        class: String,
        /// Optional external graph6 stream (`-` for stdin) instead of the
        /// built-in generator
        #[arg(long)]
        input: Option<String>,
        #[command(flatten)]
        out: OutputOptions,
    },
    /// Verify a theorem exhaustively over a range of orders
    Verify {
        /// Theorem: ng-lower, ng-lower-tree, ng-max, sigma1-max
        #[arg(long)]
        theorem: String,
        /// Inclusive order range `a..b`, or a single order
        #[arg(long)]
        orders: String,
        #[command(flatten)]
        out: OutputOptions,
    },
}

pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32> {
    let out = match &cli.command {
        Command::Compute { out, .. }
        | Command::Family { out, .. }
        | Command::Search { out, .. }
        | Command::Verify { out, .. } => out,
    };
    if let Some(threads) = out.threads {
        // ignore failure: the global pool can only be installed once
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads.max(1))
            .build_global();
    }
    match cli.command {
        Command::Compute { g6, input, k, out } => cmd_compute(g6, input, &k, &out),
        Command::Family {
            name,
            order,
            show_ng,
            out,
        } => cmd_family(&name, order, show_ng, &out),
        Command::Search {
            order,
            objective,
            class,
            input,
            out,
        } => cmd_search(order, &objective, &class, input, &out),
        Command::Verify {
            theorem,
            orders,
            out,
        } => cmd_verify(&theorem, &orders, &out),
    }
}

fn read_source(g6: Option<String>, input: Option<String>) -> Result<Vec<crate::graph::Graph>> {
    match (g6, input) {
        (Some(s), None) => Ok(vec![from_graph6(&s)?]),
        (None, Some(path)) => {
            let text = if path == "-" {
                let mut buf = String::new();
                std::io::stdin().read_to_string(&mut buf)?;
                buf
            } else {
                std::fs::read_to_string(&path)?
            };
            read_graph6_lines(&text).map_err(|(line, e)| Error::StreamParse {
                line,
                source: Box::new(e),
            })
        }
        _ => Err(Error::Usage(
            "exactly one of --g6 and --input must be given".into(),
        )),
    }
}

fn write_out(out: &OutputOptions, data: &str) -> Result<()> {
    match &out.output {
        Some(path) => std::fs::write(path, data)?,
        None => print!("{data}"),
    }
    Ok(())
}

#[derive(Serialize)]
struct ComputeRow {
    graph6: String,
    #[serde(flatten)]
    report: InvariantReport,
}

fn cmd_compute(
    g6: Option<String>,
    input: Option<String>,
    k: &[usize],
    out: &OutputOptions,
) -> Result<i32> {
    let graphs = read_source(g6, input)?;
    let mut rows = Vec::with_capacity(graphs.len());
    for g in &graphs {
        rows.push(ComputeRow {
            graph6: to_graph6(g)?,
            report: report(g, k)?,
        });
    }
    let text = match out.format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&rows).expect("serializable")),
        Format::Csv => {
            let mut s = String::from("graph6,order,size,sigma0,sigma1");
            for ki in k {
                s.push_str(&format!(",sigma{ki}"));
            }
            s.push_str(",ng_sum,is_good\n");
            for row in &rows {
                let r = &row.report;
                s.push_str(&format!(
                    "{},{},{},{},{}",
                    row.graph6, r.order, r.size, r.sigma0, r.sigma1
                ));
                for ki in k {
                    s.push_str(&format!(",{}", r.sigma_k_extra.get(ki).copied().unwrap_or(0)));
                }
                s.push_str(&format!(",{},{}\n", r.ng_sum, r.is_good));
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for row in &rows {
                let r = &row.report;
                s.push_str(&format!(
                    "{}: order={} size={} sigma0={} sigma1={}",
                    row.graph6, r.order, r.size, r.sigma0, r.sigma1
                ));
                for (ki, v) in &r.sigma_k_extra {
                    s.push_str(&format!(" sigma{ki}={v}"));
                }
                s.push_str(&format!(" ng_sum={} good={}\n", r.ng_sum, r.is_good));
            }
            s
        }
    };
    write_out(out, &text)?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct FamilyRow {
    family: String,
    order: usize,
    graph6: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    ng_closed_form: Option<u128>,
}

fn cmd_family(name: &str, order: usize, show_ng: bool, out: &OutputOptions) -> Result<i32> {
    let family = Family::from_name(name)?;
    let spec = FamilySpec::new(family, order);
    let g = crate::families::build(&spec)?;
    let row = FamilyRow {
        family: family.name(),
        order,
        graph6: to_graph6(&g)?,
        ng_closed_form: if show_ng {
            Some(closed_form_ng(&spec)?)
        } else {
            None
        },
    };
    let text = match out.format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&row).expect("serializable")),
        Format::Csv => {
            let mut s = String::from("family,order,graph6");
            if show_ng {
                s.push_str(",ng_closed_form");
            }
            s.push('\n');
            s.push_str(&format!("{},{},{}", row.family, row.order, row.graph6));
            if let Some(v) = row.ng_closed_form {
                s.push_str(&format!(",{v}"));
            }
            s.push('\n');
            s
        }
        Format::Text => match row.ng_closed_form {
            Some(v) => format!("{}\nng_sum = {v}\n", row.graph6),
            None => format!("{}\n", row.graph6),
        },
    };
    write_out(out, &text)?;
    Ok(EXIT_OK)
}

fn cmd_search(
    order: usize,
    objective: &str,
    class: &str,
    input: Option<String>,
    out: &OutputOptions,
) -> Result<i32> {
    let objective = Objective::from_name(objective)?;
    let class = GraphClass::from_name(class)?;
    let source = match input {
        Some(path) => ScanSource::External(read_source(None, Some(path))?),
        None => ScanSource::Builtin,
    };
    let result = extremal_scan(order, objective, class, source)?;
    let text = match out.format {
        Format::Json => {
            format!("{}\n", serde_json::to_string_pretty(&result).expect("serializable"))
        }
        Format::Csv => {
            let mut s = String::from("order,objective,value,classes_scanned,attainers\n");
            let attainers: Vec<&str> = result.attainers.iter().map(|a| a.as_str()).collect();
            s.push_str(&format!(
                "{},{},{},{},{}\n",
                result.order,
                result.objective.name(),
                result.value,
                result.classes_scanned,
                attainers.join(";")
            ));
            s
        }
        Format::Text => {
            let mut s = format!(
                "order {} objective {}: value = {} over {} classes\nattainers:\n",
                result.order,
                result.objective.name(),
                result.value,
                result.classes_scanned
            );
            for a in &result.attainers {
                s.push_str(&format!("  {a}\n"));
            }
            s
        }
    };
    write_out(out, &text)?;
    Ok(EXIT_OK)
}

fn parse_orders(text: &str) -> Result<std::ops::RangeInclusive<usize>> {
    let parse_one = |s: &str| {
        s.parse::<usize>().map_err(|_| Error::InvalidRange {
            text: text.to_string(),
        })
    };
    match text.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (parse_one(a)?, parse_one(b)?);
            if a > b {
                return Err(Error::InvalidRange {
                    text: text.to_string(),
                });
            }
            Ok(a..=b)
        }
        None => {
            let n = parse_one(text)?;
            Ok(n..=n)
        }
    }
}

fn cmd_verify(theorem: &str, orders: &str, out: &OutputOptions) -> Result<i32> {
    let theorem = TheoremId::from_name(theorem)?;
    let range = parse_orders(orders)?;
    let report = verify_theorem(theorem, range)?;
    let text = match out.format {
        Format::Json => format!("{}\n", report.to_json()),
        Format::Csv => {
            let mut s = String::from(
                "theorem,order,pass,expected_value,observed_value,counterexamples,expected_attainers,observed_attainers,classes_scanned\n",
            );
            for check in &report.orders {
                s.push_str(&format!(
                    "{},{},{},{},{},{},{},{},{}\n",
                    report.theorem.name(),
                    check.order,
                    check.pass,
                    check.expected_extremal_value,
                    check.observed_extremal_value,
                    check.counterexamples.join(";"),
                    check.expected_attainers.join(";"),
                    check.observed_attainers.join(";"),
                    check.classes_scanned
                ));
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for check in &report.orders {
                s.push_str(&format!(
                    "{} n={}: {} (value {} over {} classes, attainers [{}])\n",
                    report.theorem.name(),
                    check.order,
                    if check.pass { "pass" } else { "FAIL" },
                    check.observed_extremal_value,
                    check.classes_scanned,
                    check.observed_attainers.join(", ")
                ));
                if !check.counterexamples.is_empty() {
                    s.push_str(&format!(
                        "  counterexamples: {}\n",
                        check.counterexamples.join(", ")
                    ));
                }
            }
            s.push_str(&format!(
                "{}: {}\n",
                report.theorem.name(),
                if report.pass { "PASS" } else { "FAIL" }
            ));
            s
        }
    };
    write_out(out, &text)?;
    Ok(if report.pass {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    })
}
