//! Argument parsing and command dispatch.

use std::path::PathBuf;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use crate::report::{compare_golden, ReportDocument, Section};
use crate::sections::{self, Params};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "chowquot",
    version,
    about = "Exact checks for the Chow quotient of the complete flag variety of PGL(4)"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub options: Options,
}

#[derive(Debug, Clone, Args)]
pub struct Options {
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Seed for the sampled group checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Sample points per sampled check.
    #[arg(long, global = true, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
    pub samples: u64,
    /// Compare the report against this golden file.
    #[arg(long, global = true)]
    pub golden: Option<PathBuf>,
    /// Also write the command's table as CSV.
    #[arg(long, global = true)]
    pub csv: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Quotient fan of the nilpotent chart with relevance, GIT and polytope checks.
    Fan {
        #[command(subcommand)]
        action: FanAction,
    },
    /// Tile group relations, derived generators and the boundary table.
    Group {
        #[command(subcommand)]
        action: GroupAction,
    },
    /// Picard lattice, adjacency solve, intersection form and -K.
    Intersection {
        #[command(subcommand)]
        action: IntersectionAction,
    },
    /// Dimension of the quartic system through the base lines.
    Quartics {
        #[command(subcommand)]
        action: QuarticAction,
    },
    /// Cone computations.
    Cones {
        #[arg(value_enum)]
        which: ConeKind,
    },
    /// Every acceptance criterion.
    Report {
        #[command(subcommand)]
        action: ReportAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum FanAction {
    Quotient {
        /// Export the quotient fan in the RAYS/CONES text format.
        #[arg(long)]
        export: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum GroupAction {
    Verify,
}

#[derive(Debug, Subcommand)]
pub enum IntersectionAction {
    Table,
}

#[derive(Debug, Subcommand)]
pub enum QuarticAction {
    Rank,
}

#[derive(Debug, Subcommand)]
pub enum ReportAction {
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConeKind {
    Mori,
    Nef,
    Eff,
    Flags,
}

impl Command {
    pub fn name(&self) -> String {
        match self {
            Command::Fan { .. } => "fan quotient".into(),
            Command::Group { .. } => "group verify".into(),
            Command::Intersection { .. } => "intersection table".into(),
            Command::Quartics { .. } => "quartics rank".into(),
            Command::Cones { which } => format!("cones {}", which.to_possible_value().expect("named").get_name()),
            Command::Report { .. } => "report all".into(),
        }
    }

    pub fn criteria(&self) -> Vec<u32> {
        match self {
            Command::Fan { .. } => vec![1, 2, 3, 4],
            Command::Group { .. } => vec![5, 6, 7],
            Command::Intersection { .. } => vec![8, 9, 10, 11],
            Command::Quartics { .. } => vec![12],
            Command::Cones { which: ConeKind::Mori } => vec![13],
            Command::Cones { which: ConeKind::Nef } => vec![14],
            Command::Cones { which: ConeKind::Flags } => vec![15],
            Command::Cones { which: ConeKind::Eff } => vec![16],
            Command::Report { .. } => sections::CRITERIA.collect(),
        }
    }
}

/// Runs the given criteria and collects sections and timings.
pub fn build_report(command: &str, criteria: &[u32], params: Params) -> Result<ReportDocument> {
    let mut doc = ReportDocument::new(command, params.seed, params.samples);
    for &c in criteria {
        let start = Instant::now();
        let section: Section = if c == 17 {
            sections::determinism_section(&doc.sections, params)?
        } else {
            sections::section(c, params).with_context(|| format!("criterion {c}"))?
        };
        doc.timings.insert(section.key(), start.elapsed().as_secs_f64());
        doc.sections.push(section);
    }
    Ok(doc)
}

fn write_side_outputs(cli: &Cli) -> Result<()> {
    if let Command::Fan { action: FanAction::Quotient { export: Some(path) } } = &cli.command {
        let fan = sections::quotient_fan_of_chart()?;
        std::fs::write(path, fan.to_text()).with_context(|| format!("writing {}", path.display()))?;
    }
    if let Some(path) = &cli.options.csv {
        let text = match &cli.command {
            Command::Intersection { .. } => Some(sections::label_table_csv()?),
            Command::Cones { which: ConeKind::Mori } => {
                Some(sections::ray_table_csv(&chowquot::conelab::mori_cone()?.table)?)
            }
            Command::Cones { which: ConeKind::Nef } => {
                Some(sections::ray_table_csv(&chowquot::conelab::nef_cone()?.table)?)
            }
            _ => None,
        };
        match text {
            Some(t) => std::fs::write(path, t).with_context(|| format!("writing {}", path.display()))?,
            None => eprintln!("no table to export for this command"),
        }
    }
    Ok(())
}

/// Outcome of a run before the process exits.
#[derive(Debug)]
pub struct Outcome {
    pub report: ReportDocument,
    pub golden_diff: Option<Vec<String>>,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        let golden_ok = self.golden_diff.as_ref().is_none_or(Vec::is_empty);
        if self.report.passed() && golden_ok {
            EXIT_PASS
        } else {
            EXIT_MISMATCH
        }
    }
}

/// Errors from this function are invalid invocations or internal failures.
pub fn execute(cli: &Cli) -> Result<Outcome> {
    let golden = match &cli.options.golden {
        Some(path) => {
            let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            Some(serde_json::from_str::<Value>(&text).with_context(|| format!("parsing {}", path.display()))?)
        }
        None => None,
    };
    let params = Params { seed: cli.options.seed, samples: cli.options.samples as usize };
    let report = build_report(&cli.command.name(), &cli.command.criteria(), params)?;
    write_side_outputs(cli)?;
    let json = report.to_canonical_json();
    match &cli.options.out {
        Some(path) => std::fs::write(path, &json).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{json}"),
    }
    let golden_diff = golden.map(|g| compare_golden(&serde_json::to_value(&report).expect("serializable"), &g));
    Ok(Outcome { report, golden_diff })
}

/// Parses arguments, runs, prints a summary to stderr and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_PASS };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(outcome) => {
            for f in outcome.report.failures() {
                eprintln!("FAIL [{}] {}: expected {}, computed {}", f.criterion, f.name, f.expected, f.computed);
            }
            for s in &outcome.report.sections {
                for d in &s.discrepancies {
                    eprintln!("FLAG [{}] {}: reference {}, computed {}", s.criterion, d.name, d.reference, d.computed);
                }
            }
            if let Some(diff) = &outcome.golden_diff {
                for line in diff {
                    eprintln!("GOLDEN {line}");
                }
            }
            outcome.exit_code()
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            EXIT_INVALID
        }
    }
}
