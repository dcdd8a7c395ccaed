//! Command-line front end: scenario runs, traces, classification,
//! golden comparison and built-in listing.
//!
//! Exit codes: 0 on success or golden match, 1 on golden mismatch, 2 on
//! usage or input errors.

use clap::{Parser, Subcommand, ValueEnum};
use ptca::engine::{Point, Reversibility, TraceClass};
use ptca::scenario::{
    diff_scenario, load_scenario, load_snapshots_file, render_grid, render_structured,
    run_scenario, DiffOutcome, RunOptions, RunReport, BUILTIN_SCENARIOS,
};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "ptca",
    about = "Simulate cellular automata whose cells hold logical formulas and whose transition rule is an inference rule",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a scenario and print snapshots, fired rules and the verdicts
    Run {
        /// Built-in scenario name or path to a scenario file
        scenario: String,
        /// Override the scenario's horizon
        #[arg(long)]
        steps: Option<u64>,
        /// Which snapshots to print
        #[arg(long, value_enum, default_value_t = SnapshotChoice::All)]
        snapshots: SnapshotChoice,
        /// Output format; `structured` prints a reloadable TOML document
        #[arg(long, value_enum, default_value_t = FormatChoice::Grid)]
        format: FormatChoice,
    },
    /// Print one cell's derivation trace and its classification
    Trace {
        scenario: String,
        /// Cell coordinates, e.g. 1,1
        #[arg(long)]
        cell: String,
        #[arg(long)]
        steps: Option<u64>,
    },
    /// Classify every cell's trace and report the global verdicts
    Classify {
        scenario: String,
        #[arg(long)]
        steps: Option<u64>,
    },
    /// Compare a run against a golden snapshot file
    Diff { scenario: String, golden: String },
    /// List the built-in scenarios
    Scenarios,
}

#[derive(Clone, Copy, ValueEnum)]
enum SnapshotChoice {
    All,
    Last,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatChoice {
    Grid,
    Structured,
}

fn class_line(class: &TraceClass) -> String {
    match class {
        TraceClass::EventuallyConstant {
            settle,
            also_cyclic: None,
        } => format!("eventually constant from t={settle}"),
        TraceClass::EventuallyConstant {
            settle,
            also_cyclic: Some(period),
        } => format!("eventually constant from t={settle} (also cyclic, period {period})"),
        TraceClass::Cyclic { period } => format!("cyclic, period {period}"),
        TraceClass::Unknown => "unknown within horizon".to_string(),
    }
}

fn summary_lines(report: &RunReport) -> Vec<String> {
    let mut out = Vec::new();
    match report.cycle {
        Some(cycle) if cycle.period == 1 => out.push(format!(
            "global recurrence: fixpoint from t={}",
            cycle.start
        )),
        Some(cycle) => out.push(format!(
            "global recurrence: start {}, period {}",
            cycle.start, cycle.period
        )),
        None => out.push("global recurrence: none proven within horizon".to_string()),
    }
    out.push(match &report.reversibility {
        Reversibility::Reversible => "reversibility: reversible".to_string(),
        Reversibility::NotReversibleWitness(z) => {
            format!("reversibility: not reversible (witness {z})")
        }
        Reversibility::UnknownWithinHorizon => "reversibility: unknown within horizon".to_string(),
    });
    if let Some(stop) = report.fixpoint_stop {
        out.push(format!("(stepping stopped at the t={stop} fixpoint)"));
    }
    out
}

fn cmd_run(
    scenario_name: &str,
    steps: Option<u64>,
    snapshots: SnapshotChoice,
    format: FormatChoice,
) -> Result<(), String> {
    let scenario = load_scenario(scenario_name).map_err(|e| e.to_string())?;
    let opts = RunOptions {
        horizon_override: steps,
        early_stop: true,
    };
    let report = run_scenario(&scenario, &opts).map_err(|e| e.to_string())?;

    let chosen: Vec<_> = match snapshots {
        SnapshotChoice::All => report.snapshots.iter().collect(),
        SnapshotChoice::Last => report.snapshots.iter().rev().take(1).collect(),
    };

    match format {
        FormatChoice::Structured => {
            let owned: Vec<_> = chosen.into_iter().cloned().collect();
            print!("{}", render_structured(&owned));
        }
        FormatChoice::Grid => {
            println!(
                "scenario {} (ruleset {}, equality {}, horizon {})",
                report.scenario,
                report.ruleset,
                report.equality.name(),
                report.horizon
            );
            for snap in chosen {
                println!("\nt={}", snap.time);
                println!(
                    "{}",
                    render_grid(snap, &report.region).map_err(|e| e.to_string())?
                );
            }
            let fired: usize = report.fires.iter().map(|f| f.len()).sum();
            if fired > 0 {
                println!("\nfired rules:");
                for (t, step_fires) in report.fires.iter().enumerate() {
                    for (point, trace) in step_fires {
                        let bindings = trace
                            .bindings
                            .iter()
                            .map(|(k, v)| format!("{k}={v}"))
                            .collect::<Vec<_>>()
                            .join(" ");
                        let neighbor = trace
                            .neighbor_used
                            .map(|i| format!(" via neighbor {i}"))
                            .unwrap_or_default();
                        println!(
                            "  t={} {}: {} {}{}",
                            t + 1,
                            point,
                            trace.rule,
                            bindings,
                            neighbor
                        );
                    }
                }
            }
            println!();
            for line in summary_lines(&report) {
                println!("{line}");
            }
        }
    }
    Ok(())
}

fn cmd_trace(scenario_name: &str, cell: &str, steps: Option<u64>) -> Result<(), String> {
    let scenario = load_scenario(scenario_name).map_err(|e| e.to_string())?;
    let point = Point::parse(cell).map_err(|e| e.to_string())?;
    let opts = RunOptions {
        horizon_override: steps,
        early_stop: true,
    };
    let report = run_scenario(&scenario, &opts).map_err(|e| e.to_string())?;
    let cell_report = report
        .cells
        .iter()
        .find(|c| c.point == point)
        .ok_or_else(|| format!("cell {point} lies outside the region"))?;
    println!("trace of {} in {}:", point, report.scenario);
    for (t, state) in cell_report.states.iter().enumerate() {
        println!("t={t}  {state}");
    }
    println!("class: {}", class_line(&cell_report.class));
    for line in summary_lines(&report) {
        println!("{line}");
    }
    Ok(())
}

fn cmd_classify(scenario_name: &str, steps: Option<u64>) -> Result<(), String> {
    let scenario = load_scenario(scenario_name).map_err(|e| e.to_string())?;
    let opts = RunOptions {
        horizon_override: steps,
        early_stop: true,
    };
    let report = run_scenario(&scenario, &opts).map_err(|e| e.to_string())?;
    println!(
        "scenario {} (equality {}, horizon {})",
        report.scenario,
        report.equality.name(),
        report.horizon
    );
    for line in summary_lines(&report) {
        println!("{line}");
    }
    for cell in &report.cells {
        println!("{}: {}", cell.point, class_line(&cell.class));
    }
    Ok(())
}

enum DiffResult {
    Match,
    Mismatch,
}

fn cmd_diff(scenario_name: &str, golden_path: &str) -> Result<DiffResult, String> {
    let scenario = load_scenario(scenario_name).map_err(|e| e.to_string())?;
    let golden = load_snapshots_file(golden_path).map_err(|e| e.to_string())?;
    match diff_scenario(&scenario, &golden, golden_path).map_err(|e| e.to_string())? {
        DiffOutcome::Match { snapshots_checked } => {
            println!("match: {snapshots_checked} snapshots agree");
            Ok(DiffResult::Match)
        }
        DiffOutcome::Mismatch {
            time,
            cell,
            run,
            golden,
        } => {
            println!("mismatch at t={time} cell {cell}:");
            println!("  run:    {run}");
            println!("  golden: {golden}");
            Ok(DiffResult::Mismatch)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Run {
            scenario,
            steps,
            snapshots,
            format,
        } => cmd_run(scenario, *steps, *snapshots, *format).map(|()| ExitCode::SUCCESS),
        Command::Trace {
            scenario,
            cell,
            steps,
        } => cmd_trace(scenario, cell, *steps).map(|()| ExitCode::SUCCESS),
        Command::Classify { scenario, steps } => {
            cmd_classify(scenario, *steps).map(|()| ExitCode::SUCCESS)
        }
        Command::Diff { scenario, golden } => cmd_diff(scenario, golden).map(|r| match r {
            DiffResult::Match => ExitCode::SUCCESS,
            DiffResult::Mismatch => ExitCode::from(1),
        }),
        Command::Scenarios => {
            for (name, description) in BUILTIN_SCENARIOS {
                println!("{name:<22} {description}");
            }
            Ok(ExitCode::SUCCESS)
        }
    };
    match outcome {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
