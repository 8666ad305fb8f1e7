use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use sbraid_core::artin_action::{artin_endo, full_order, projective_order, projectively_equal, OrderResult};
use sbraid_core::braid_words::{parse_expr, pi, xi, BraidWord, WordError};
use sbraid_core::classifier::{classify, summary, SubgroupDescriptor};
use sbraid_core::finite_groups::{
    coset_model, isomorphism_type, lattice_dot, quaternion_model, structure_checks, GroupName, GroupTable,
};
use sbraid_core::geometry::{build_configuration, build_equator, Polyhedron};
use sbraid_core::verifier::{any_failed, cross_validate_range, summarize, CheckId};

#[derive(Parser)]
#[command(name = "sbraid", version, about = "Finite subgroups of the sphere braid groups")]
struct Cli {
    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Model {
    Quaternion,
    Coset,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a word expression.
    Word {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        expr: String,
        /// Comma-separated subset of xi, pi, endo.
        #[arg(long, value_delimiter = ',')]
        show: Vec<String>,
    },
    /// Projective order and order in the braid group.
    Order {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        expr: String,
    },
    /// Compare two words in the mapping class group.
    Eq {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
    },
    /// Maximal finite subgroups, or the verdict for one descriptor.
    Classify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        descriptor: Option<String>,
    },
    /// Build a finite group model.
    Group {
        #[arg(long)]
        name: String,
        #[arg(long, value_enum, default_value = "quaternion")]
        model: Model,
        /// Write the subgroup lattice as Graphviz DOT.
        #[arg(long)]
        lattice: Option<PathBuf>,
    },
    /// Symmetric point configuration on a polyhedron or the equator.
    Realize {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        n: usize,
        /// Polar points for the equator.
        #[arg(long, default_value_t = 0)]
        poles: usize,
    },
    /// Run cross-checks over a range of n.
    Verify {
        #[arg(long, value_delimiter = ',', default_value = "MAXIMAL")]
        checks: Vec<String>,
        /// Inclusive range `A..B`.
        #[arg(long, default_value = "3..10")]
        n_range: String,
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

enum Failure {
    /// Bad input: exit 2.
    Input(String),
    /// A verification failed: exit 1.
    Verification,
}

impl From<WordError> for Failure {
    fn from(e: WordError) -> Self {
        match e {
            WordError::Parse(p) => Failure::Input(format!("invalid expression\n{}", p.render())),
            other => Failure::Input(other.to_string()),
        }
    }
}

fn input<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Input(e.to_string())
}

/// Writes to stdout; a closed pipe is not an error.
fn emit(format: Format, text: String, value: Value) {
    let out = match format {
        Format::Text => text,
        Format::Json => serde_json::to_string_pretty(&value).expect("serializable"),
    };
    let _ = writeln!(io::stdout().lock(), "{out}");
}

fn parse(n: usize, e: &str) -> Result<BraidWord, Failure> {
    Ok(parse_expr(e, n)?)
}

fn word_cmd(format: Format, n: usize, expr: &str, show: &[String]) -> Result<(), Failure> {
    let w = parse(n, expr)?;
    let mut lines = vec![format!("word: {w}"), format!("length: {}", w.len())];
    let mut v = json!({ "n": n, "word": w.to_string(), "letters": w.letters(), "length": w.len() });
    for s in show {
        match s.as_str() {
            "xi" => {
                let x = xi(&w);
                lines.push(format!("xi: {x}"));
                v["xi"] = json!({ "value": x.value(), "modulus": x.modulus() });
            }
            "pi" => {
                let p = pi(&w);
                lines.push(format!("pi: {p}"));
                v["pi"] = json!({ "cycles": p.to_string(), "images": p.images().iter().map(|i| i + 1).collect::<Vec<_>>() });
            }
            "endo" => {
                let e = artin_endo(&w);
                lines.push(format!("endo:\n{e}"));
                v["endo"] = json!(e.images().iter().map(|i| i.to_string()).collect::<Vec<_>>());
            }
            other => return Err(Failure::Input(format!("unknown --show item `{other}` (expected xi, pi, endo)"))),
        }
    }
    emit(format, lines.join("\n"), v);
    Ok(())
}

fn order_cmd(format: Format, n: usize, expr: &str) -> Result<(), Failure> {
    let w = parse(n, expr)?;
    let proj = projective_order(&w).map_err(input)?;
    let full = full_order(&w).map_err(input)?;
    let proj_text = match proj {
        OrderResult::Exact { order } => order.to_string(),
        other => other.to_string(),
    };
    let text = format!("projective order {proj_text}; order in B_{n}(S²): {full}");
    emit(format, text, json!({ "n": n, "word": w.to_string(), "projective_order": proj, "order": full }));
    Ok(())
}

fn eq_cmd(format: Format, n: usize, lhs: &str, rhs: &str) -> Result<(), Failure> {
    let (a, b) = (parse(n, lhs)?, parse(n, rhs)?);
    let proj = projectively_equal(&a, &b);
    let xi_match = xi(&a) == xi(&b);
    let text = format!("projectively equal: {proj}; xi match: {xi_match}");
    emit(format, text, json!({ "n": n, "projectively_equal": proj, "xi_match": xi_match }));
    Ok(())
}

fn classify_cmd(format: Format, n: usize, descriptor: Option<&str>) -> Result<(), Failure> {
    let v = match descriptor {
        None => summary(n).map_err(input)?,
        Some(d) => {
            let d: SubgroupDescriptor = d.parse().map_err(input)?;
            serde_json::to_value(classify(n, &d).map_err(input)?).expect("serializable")
        }
    };
    let text = match descriptor {
        None => format!(
            "maximal finite subgroups of B_{n}(S²): {}",
            v["maximal"].as_array().map(|a| a.iter().filter_map(|g| g.as_str()).collect::<Vec<_>>().join(", ")).unwrap_or_default()
        ),
        Some(_) => v["classes"]
            .as_array()
            .map(|cs| {
                cs.iter()
                    .enumerate()
                    .map(|(i, c)| {
                        format!("class {}: contained in {}; Γ2: {}; case {}", i + 1, c["contained_in"], c["gamma2"], c["case"])
                    })
                    .collect::<Vec<_>>()
                    .join("\n")
            })
            .unwrap_or_default(),
    };
    emit(format, text, v);
    Ok(())
}

fn census_json(g: &GroupTable) -> BTreeMap<String, usize> {
    g.census().into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn group_cmd(format: Format, name: &str, model: Model, lattice: Option<&PathBuf>) -> Result<(), Failure> {
    let g: GroupName = name.parse().map_err(input)?;
    let (table, coordinates) = match model {
        Model::Quaternion => {
            let m = quaternion_model(g).map_err(input)?;
            (m.table, Some(m.coordinates))
        }
        Model::Coset => (coset_model(g).map_err(input)?, None),
    };
    let ty = isomorphism_type(&table).to_string();
    let mut v = json!({
        "name": g.to_string(),
        "order": table.order(),
        "type": ty,
        "census": census_json(&table),
        "structure": structure_checks(&table),
    });
    if let Some(c) = coordinates {
        v["coordinates"] = json!(c);
    }
    if let Some(path) = lattice {
        fs::write(path, lattice_dot(&table, &g.to_string())).map_err(input)?;
    }
    emit(format, format!("{g}: order {}, type {ty}", table.order()), v);
    Ok(())
}

fn realize_cmd(format: Format, poly: &str, n: usize, poles: usize) -> Result<(), Failure> {
    let p: Polyhedron = poly.parse().map_err(input)?;
    let (text, v) = if p == Polyhedron::Equator {
        let c = build_equator(n, poles).map_err(input)?;
        (c.to_text(), c.to_json())
    } else {
        let c = build_configuration(p, n).map_err(input)?;
        (c.to_text(), c.to_json())
    };
    emit(format, text.trim_end().to_string(), v);
    Ok(())
}

fn parse_range(s: &str) -> Result<(usize, usize), Failure> {
    let bad = || Failure::Input(format!("bad range `{s}`, expected A..B"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let b = b.strip_prefix('=').unwrap_or(b);
    Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
}

fn verify_cmd(format: Format, checks: &[String], range: &str, report: Option<&PathBuf>) -> Result<(), Failure> {
    let ids = checks.iter().map(|c| c.parse::<CheckId>()).collect::<Result<Vec<_>, _>>().map_err(input)?;
    let (from, to) = parse_range(range)?;
    let reports = cross_validate_range(from, to, &ids).map_err(input)?;
    let out = json!({ "summary": summarize(&reports), "reports": reports });
    if let Some(path) = report {
        fs::write(path, serde_json::to_string_pretty(&out).expect("serializable")).map_err(input)?;
    }
    let mut lines: Vec<String> = reports
        .iter()
        .map(|r| format!("{} n={}: {} ({} facts)", r.check_id, r.n, r.status, r.facts_verified))
        .collect();
    let s = &out["summary"];
    lines.push(format!("{} reports: {} pass, {} fail, {} skipped-ambiguous", s["reports"], s["pass"], s["fail"], s["skipped-ambiguous"]));
    if reports.is_empty() {
        lines.push("no check applies to this range".into());
    }
    emit(format, lines.join("\n"), out);
    if any_failed(&reports) {
        return Err(Failure::Verification);
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    let f = |default: Format| cli.format.unwrap_or(default);
    match &cli.command {
        Command::Word { n, expr, show } => word_cmd(f(Format::Text), *n, expr, show),
        Command::Order { n, expr } => order_cmd(f(Format::Text), *n, expr),
        Command::Eq { n, lhs, rhs } => eq_cmd(f(Format::Text), *n, lhs, rhs),
        Command::Classify { n, descriptor } => classify_cmd(f(Format::Json), *n, descriptor.as_deref()),
        Command::Group { name, model, lattice } => group_cmd(f(Format::Json), name, *model, lattice.as_ref()),
        Command::Realize { poly, n, poles } => realize_cmd(f(Format::Json), poly, *n, *poles),
        Command::Verify { checks, n_range, report } => verify_cmd(f(Format::Text), checks, n_range, report.as_ref()),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification) => ExitCode::from(1),
    }
}
