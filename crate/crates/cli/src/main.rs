use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use hesitant_core::laws::{run_laws, Law, LawOutcome};
use hesitant_core::{
    eval_expr, explain_law, find_law, ingest_scores, law_registry, rank, relate, Document,
    GeneratorConfig, RelationKind, Status,
};

/// Exact hesitant fuzzy set algebra on JSON documents.
#[derive(Parser)]
#[command(name = "hfs", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compare two sets under every inclusion relation.
    Relate {
        file: PathBuf,
        a: String,
        b: String,
        /// Print the report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Evaluate an expression such as `(A ∪ B) ∩ Cᶜ`.
    ///
    /// `∩`/`&` binds tighter than `∪`/`|`; complement is postfix `ᶜ`, `'`
    /// or `^c`, or prefix `~`/`!`; `⋃F` and `⋂F` fold a family.
    Ops {
        file: PathBuf,
        expr: String,
        /// Print the result as a document holding one set.
        #[arg(long)]
        json: bool,
        /// Set name used with --json.
        #[arg(long, default_value = "result")]
        name: String,
    },
    /// Rank the elements of a set by the strict part of an inclusion.
    Rank {
        file: PathBuf,
        set: String,
        #[arg(long, value_parser = parse_kind)]
        kind: RelationKind,
        /// Emit the Hasse diagram in Graphviz format, to FILE or stdout.
        #[arg(long, value_name = "FILE", num_args = 0..=1)]
        dot: Option<Option<PathBuf>>,
        #[arg(long)]
        json: bool,
    },
    /// Run the law suite.
    Check {
        /// Decimal or 0x-prefixed hexadecimal.
        #[arg(long, value_parser = parse_seed)]
        seed: Option<u64>,
        #[arg(long)]
        trials: Option<u64>,
        /// Degree grid denominator.
        #[arg(long)]
        grid: Option<u64>,
        /// Restrict to these law ids (repeatable).
        #[arg(long = "law", value_name = "ID")]
        laws: Vec<String>,
        /// Also write the JSON report here.
        #[arg(long, value_name = "FILE")]
        report: Option<PathBuf>,
        /// Print the JSON report instead of the summary.
        #[arg(long)]
        json: bool,
        /// Run trials on one thread.
        #[arg(long)]
        sequential: bool,
    },
    /// Replay fixtures with full evaluation traces.
    Counterexamples {
        /// A law id; all refuted laws when omitted.
        id: Option<String>,
    },
    /// Build a document from a `scheme,expert,score` CSV table.
    Ingest {
        table: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long, default_value = "H")]
        set: String,
    },
}

fn parse_kind(s: &str) -> Result<RelationKind, String> {
    s.parse()
}

fn parse_seed(s: &str) -> Result<u64, String> {
    let parsed = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(&hex.replace('_', ""), 16),
        None => s.replace('_', "").parse(),
    };
    parsed.map_err(|e| format!("invalid seed {s:?}: {e}"))
}

fn load(path: &PathBuf) -> Result<Document> {
    Document::load(path).with_context(|| format!("loading {}", path.display()))
}

fn main() -> ExitCode {
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = run(Cli::parse().command, &mut out).and_then(|ok| Ok(out.flush().map(|()| ok)?));
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        // A closed pipe (`hfs ... | head`) is not an error.
        Err(e) if broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn broken_pipe(e: &anyhow::Error) -> bool {
    e.downcast_ref::<io::Error>()
        .is_some_and(|e| e.kind() == io::ErrorKind::BrokenPipe)
}

/// `Ok(false)` means a law did not behave as recorded.
fn run(command: Command, out: &mut impl Write) -> Result<bool> {
    match command {
        Command::Relate { file, a, b, json } => {
            let report = relate(&load(&file)?, &a, &b)?;
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
            } else {
                write!(out, "{}", report.render())?;
            }
        }
        Command::Ops {
            file,
            expr,
            json,
            name,
        } => {
            let doc = load(&file)?;
            let (term, set) = eval_expr(&doc, &expr)?;
            if json {
                let mut single = Document::new(doc.universe().clone());
                single.insert_set(name, set)?;
                write!(out, "{}", single.to_json())?;
            } else {
                writeln!(out, "{term}")?;
                for (id, h) in doc.universe().ids().iter().zip(set.memberships()) {
                    writeln!(out, "  {id}  {h}")?;
                }
            }
        }
        Command::Rank {
            file,
            set,
            kind,
            dot,
            json,
        } => {
            let ranking = rank(&load(&file)?, &set, kind)?;
            match dot {
                Some(Some(path)) => {
                    fs::write(&path, ranking.to_dot())
                        .with_context(|| format!("writing {}", path.display()))?;
                }
                Some(None) => {
                    write!(out, "{}", ranking.to_dot())?;
                    return Ok(true);
                }
                None => {}
            }
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&ranking)?)?;
            } else {
                write!(out, "{}", ranking.render())?;
            }
        }
        Command::Check {
            seed,
            trials,
            grid,
            laws,
            report,
            json,
            sequential,
        } => {
            let mut config = GeneratorConfig::default();
            config.seed = seed.unwrap_or(config.seed);
            config.trials = trials.unwrap_or(config.trials);
            config.degree_grid = grid.unwrap_or(config.degree_grid);
            let selected: Vec<Law> = if laws.is_empty() {
                law_registry().to_vec()
            } else {
                laws.iter()
                    .map(|id| {
                        find_law(id)
                            .cloned()
                            .with_context(|| format!("unknown law {id:?}"))
                    })
                    .collect::<Result<_>>()?
            };
            let start = std::time::Instant::now();
            let result = run_laws(&selected, &config, !sequential)?;
            if let Some(path) = &report {
                fs::write(path, result.to_json())
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            for id in &result.starved_laws {
                let o = result.law(id).expect("starved law is in the report");
                eprintln!(
                    "warning: {id}: {} of {} trials starved",
                    o.starved, o.trials
                );
            }
            if json {
                write!(out, "{}", result.to_json())?;
            } else {
                for outcome in &result.laws {
                    writeln!(out, "{}", summary_line(outcome))?;
                }
                writeln!(
                    out,
                    "{} laws ({} proved, {} refuted), {} failed; seed {:#x}, {} trials, grid 1/{}, {:.1?}",
                    result.laws.len(),
                    result.proved,
                    result.refuted,
                    result.failures.len(),
                    config.seed,
                    config.trials,
                    config.degree_grid,
                    start.elapsed()
                )?;
            }
            return Ok(result.passed);
        }
        Command::Counterexamples { id } => {
            let laws: Vec<&Law> = match id {
                Some(id) => vec![find_law(&id).with_context(|| format!("unknown law {id:?}"))?],
                None => law_registry()
                    .iter()
                    .filter(|l| l.status == Status::Refuted)
                    .collect(),
            };
            let mut ok = true;
            for law in laws {
                write!(out, "{}", explain_law(law)?)?;
                writeln!(out)?;
                for f in &law.fixtures {
                    let v = hesitant_core::evaluate_law(law, &f.binding)?;
                    ok &= match law.status {
                        Status::Refuted => v.is_violation(),
                        Status::Proved => !v.is_violation(),
                    };
                }
            }
            return Ok(ok);
        }
        Command::Ingest { table, output, set } => {
            let text = fs::read_to_string(&table)
                .with_context(|| format!("reading {}", table.display()))?;
            let doc = ingest_scores(&text, &set)?;
            doc.save(&output)
                .with_context(|| format!("writing {}", output.display()))?;
            eprintln!(
                "{} schemes written to {}",
                doc.universe().len(),
                output.display()
            );
        }
    }
    Ok(true)
}

fn summary_line(o: &LawOutcome) -> String {
    let verdict = if o.passed() { "ok  " } else { "FAIL" };
    let detail = match o.status {
        Status::Proved => format!(
            "{}/{} accepted, {} violations",
            o.accepted, o.trials, o.violations
        ),
        Status::Refuted => {
            let falsified = o.fixtures.iter().filter(|f| f.guard && !f.claim).count();
            format!("{falsified}/{} fixtures falsify", o.fixtures.len())
        }
    };
    format!(
        "{verdict} {:<34} {:<8} {detail}",
        o.id,
        format!("{:?}", o.status).to_uppercase()
    )
}
