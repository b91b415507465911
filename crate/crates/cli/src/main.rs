//! `dumont`: enumerate, count and verify pattern-restricted Dumont permutations.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use dumont::bijections::{
    composition_to_d4_1342, construct_1324_avoider, d4_1342_to_composition, d4_321_to_dyck, dyck_to_d4_321, foata,
    foata_inverse, reflect_1243_to_1324, reflect_1324_to_1243, split_single_321, Avoider1324,
};
use dumont::gfseries::{closed_form_range, d4_1423_series, gf_identities_check, solve_prst_system};
use dumont::harness::{self, conjecture1_counts, conjecture2_distribution, render_diagram};
use dumont::patterns::{generate_avoiders, AvoidanceQuery};
use dumont::{dumont as dm, ClassicalPattern, Composition, DumontKind, DyckPath, Permutation, RunOptions, SequenceId, Suite};

#[derive(Parser)]
#[command(name = "dumont", version, about = "Pattern-restricted Dumont permutations")]
struct Cli {
    /// Worker threads (default: DUMONT_THREADS, then all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ListFormat {
    Lines,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum MapName {
    Foata,
    FoataInv,
    Dyck,
    DyckInv,
    Comp,
    CompInv,
    Reflect,
    ReflectInv,
    Split321,
    Avoider1324,
}

#[derive(Subcommand)]
enum Command {
    /// List every Dumont permutation of one kind and size.
    Enumerate {
        #[arg(long)]
        kind: DumontKind,
        #[arg(long)]
        size: usize,
        #[arg(long, value_enum, default_value = "lines")]
        format: ListFormat,
    },
    /// Count (and optionally list) members avoiding patterns, or containing one exactly r times.
    Avoid {
        #[arg(long)]
        kind: DumontKind,
        #[arg(long)]
        size: usize,
        /// Repeatable; a comma list also works.
        #[arg(long = "pattern", required = true, value_delimiter = ',')]
        patterns: Vec<ClassicalPattern>,
        /// Count members with exactly this many occurrences of the single pattern.
        #[arg(long)]
        exactly: Option<u64>,
        #[arg(long)]
        list: bool,
    },
    /// Apply one of the bijections to a single object.
    Map {
        #[arg(long, value_enum)]
        name: MapName,
        /// A permutation, a Dyck path (`EENN`), a composition (`2+1`), or `n:k,l` for avoider1324.
        #[arg(long)]
        input: String,
    },
    /// Closed-form values of a named sequence, or the generating-function identity checks.
    Series {
        #[arg(long, required_unless_present = "cross_check")]
        id: Option<SequenceId>,
        #[arg(long, default_value_t = 10)]
        upto: u64,
        #[arg(long, default_value_t = 0)]
        from: u64,
        #[arg(long, value_enum, default_value = "csv")]
        format: TableFormat,
        /// Check the series identities and both D4(1423) computations instead.
        #[arg(long)]
        cross_check: bool,
        #[arg(long, default_value_t = 24)]
        order: usize,
    },
    /// Compare exhaustive counts against the stated formulas.
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 6)]
        max_n: u64,
        #[arg(long)]
        timings: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
    },
    /// Gather evidence for one of the open conjectures.
    Conjecture {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        which: u8,
        #[arg(long)]
        n: usize,
        /// Stop starting new shards after this many seconds.
        #[arg(long)]
        budget: Option<f64>,
        /// Resumable progress file.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
    },
    /// Print the permutation diagram.
    Diagram {
        #[arg(long)]
        input: Permutation,
    },
}

#[derive(Serialize)]
struct Listing<'a> {
    kind: DumontKind,
    size: usize,
    count: usize,
    elements: &'a [Permutation],
}

#[derive(Serialize)]
struct AvoidOutput {
    kind: DumontKind,
    size: usize,
    patterns: Vec<ClassicalPattern>,
    exactly: Option<u64>,
    count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    elements: Option<Vec<Permutation>>,
}

#[derive(Serialize)]
struct SeriesRow {
    n: u64,
    value: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// `Ok(false)` when a checked assertion failed.
fn run(cli: Cli) -> Result<bool> {
    let opts = RunOptions {
        threads: cli.threads,
        ..RunOptions::default()
    };
    match cli.command {
        Command::Enumerate { kind, size, format } => {
            let all = dm::generate_vec(kind, size)?;
            print_list(&all, format, kind, size)?;
            Ok(true)
        }
        Command::Avoid {
            kind,
            size,
            patterns,
            exactly,
            list,
        } => {
            let query = match exactly {
                Some(r) => {
                    let [q] = patterns.as_slice() else {
                        bail!("--exactly takes a single pattern");
                    };
                    AvoidanceQuery::exactly(kind, size, q.clone(), r)?
                }
                None => AvoidanceQuery::avoiding(kind, size, patterns.clone())?,
            };
            let members = generate_avoiders(&query)?;
            let out = AvoidOutput {
                kind,
                size,
                patterns,
                exactly,
                count: members.len(),
                elements: list.then_some(members),
            };
            println!("{}", serde_json::to_string_pretty(&out)?);
            Ok(true)
        }
        Command::Map { name, input } => {
            println!("{}", apply_map(name, &input)?);
            Ok(true)
        }
        Command::Series {
            id,
            upto,
            from,
            format,
            cross_check,
            order,
        } => {
            if cross_check {
                return cross_check_series(order);
            }
            let id = id.context("--id is required")?;
            let values = closed_form_range(id, from, upto)?;
            let rows: Vec<SeriesRow> = (from..=upto)
                .zip(values)
                .map(|(n, v)| SeriesRow { n, value: v.to_string() })
                .collect();
            match format {
                TableFormat::Csv => {
                    println!("n,{id}");
                    for r in rows {
                        println!("{},{}", r.n, r.value);
                    }
                }
                TableFormat::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&serde_json::json!({ "id": id, "formula": id.formula(), "values": rows }))?
                ),
            }
            Ok(true)
        }
        Command::Verify {
            suite,
            max_n,
            timings,
            format,
        } => {
            let mut report = harness::run_suite_with(suite, max_n, &opts)?;
            if !timings {
                report = report.without_timings();
            }
            match format {
                ReportFormat::Text => print!("{}", report.render_text()),
                ReportFormat::Json => println!("{}", serde_json::to_string_pretty(&report)?),
            }
            Ok(report.overall)
        }
        Command::Conjecture {
            which,
            n,
            budget,
            checkpoint,
            format,
        } => {
            let opts = RunOptions {
                budget: budget.map(Duration::from_secs_f64),
                checkpoint,
                ..opts
            };
            // evidence either way is a successful run
            if which == 1 {
                let report = conjecture1_counts(n, &opts)?;
                match format {
                    ReportFormat::Text => print!("{}", report.render_text()),
                    ReportFormat::Json => println!("{}", serde_json::to_string_pretty(&report)?),
                }
            } else {
                let table = conjecture2_distribution(n, &opts)?;
                match format {
                    ReportFormat::Text => print!("{}", table.render_text()),
                    ReportFormat::Json => println!("{}", serde_json::to_string_pretty(&table)?),
                }
            }
            Ok(true)
        }
        Command::Diagram { input } => {
            print!("{}", render_diagram(&input));
            Ok(true)
        }
    }
}

fn print_list(all: &[Permutation], format: ListFormat, kind: DumontKind, size: usize) -> Result<()> {
    match format {
        ListFormat::Lines => {
            for p in all {
                println!("{p}");
            }
        }
        ListFormat::Csv => {
            for p in all {
                let cells: Vec<String> = p.values().iter().map(|v| v.to_string()).collect();
                println!("{}", cells.join(","));
            }
        }
        ListFormat::Json => {
            let listing = Listing {
                kind,
                size,
                count: all.len(),
                elements: all,
            };
            println!("{}", serde_json::to_string_pretty(&listing)?);
        }
    }
    Ok(())
}

fn perm(input: &str) -> Result<Permutation> {
    input.parse().with_context(|| format!("reading permutation {input:?}"))
}

fn apply_map(name: MapName, input: &str) -> Result<String> {
    Ok(match name {
        MapName::Foata => foata(&perm(input)?).to_string(),
        MapName::FoataInv => foata_inverse(&perm(input)?).to_string(),
        MapName::Dyck => d4_321_to_dyck(&perm(input)?)?.to_string(),
        MapName::DyckInv => dyck_to_d4_321(&input.parse::<DyckPath>()?)?.to_string(),
        MapName::Comp => d4_1342_to_composition(&perm(input)?)?.to_string(),
        MapName::CompInv => composition_to_d4_1342(&input.parse::<Composition>()?)?.to_string(),
        MapName::Reflect => reflect_1324_to_1243(&perm(input)?)?.to_string(),
        MapName::ReflectInv => reflect_1243_to_1324(&perm(input)?)?.to_string(),
        MapName::Split321 => {
            let pair = split_single_321(&perm(input)?)?;
            serde_json::to_string(&serde_json::json!({
                "rho1": pair.rho1,
                "rho2": pair.rho2,
                "parity": pair.parity,
            }))?
        }
        MapName::Avoider1324 => {
            let (n, rest) = input.split_once(':').unwrap_or((input, ""));
            let n: usize = n.trim().parse().context("expected n:k,l or n")?;
            let which = if rest.trim().is_empty() {
                Avoider1324::Identity
            } else {
                let (k, l) = rest.split_once(',').context("expected n:k,l")?;
                Avoider1324::Shifted {
                    k: k.trim().parse()?,
                    l: l.trim().parse()?,
                }
            };
            construct_1324_avoider(n, which)?.to_string()
        }
    })
}

fn cross_check_series(order: usize) -> Result<bool> {
    let mut ok = true;
    for check in gf_identities_check(order)? {
        let status = if check.holds { "ok" } else { "FAIL" };
        match check.first_mismatch {
            Some(d) => println!("{status:<4} {} (first mismatch at degree {d})", check.name),
            None => println!("{status:<4} {}", check.name),
        }
        ok &= check.holds;
    }
    let n_max = order / 2;
    let cf = d4_1423_series(n_max)?;
    let sweep = solve_prst_system(n_max)?.d4_1423_counts(n_max)?;
    let agree = (0..=n_max).all(|n| cf.coeff(n) == sweep.coeff(n));
    println!(
        "{:<4} D4(1423): continued fraction and downward sweep agree through n = {n_max}",
        if agree { "ok" } else { "FAIL" }
    );
    Ok(ok && agree)
}
