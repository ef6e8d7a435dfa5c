use std::path::PathBuf;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};

use evidist::experiments::{run_sweep, sweep_csv, Scenario};
use evidist::metrics::{evidence_distance_report, DistanceParams, EvidenceMetric};
use evidist::{dempster_combine, format_sig, BpaDocument};

#[derive(Parser)]
#[command(name = "evidist", version, about = "Evidence combination and distances between basic probability assignments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a distance between two named BPAs from a document
    Distance {
        /// BPA document to read
        file: PathBuf,
        /// Name of the first BPA
        bpa1: String,
        /// Name of the second BPA
        bpa2: String,
        /// Distance metric to use
        #[arg(long, value_enum)]
        metric: Metric,
        /// Blend weight for the generalized metric
        #[arg(long, default_value_t = 0.5)]
        alpha: f64,
        /// Hausdorff similarity tuning constant
        #[arg(long, default_value_t = 1.0)]
        k: f64,
    },
    /// Combine two named BPAs with Dempster's rule
    Combine {
        /// BPA document to read
        file: PathBuf,
        /// Name of the first BPA
        bpa1: String,
        /// Name of the second BPA
        bpa2: String,
        /// Write the resulting document here instead of stdout
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run a benchmark sweep and write its distance table as CSV
    Sweep {
        /// Which sweep to run
        #[arg(value_enum)]
        scenario: ScenarioArg,
        /// Blend weight for the generalized metric
        #[arg(long, default_value_t = 0.5)]
        alpha: f64,
        /// Hausdorff similarity tuning constant
        #[arg(long, default_value_t = 1.0)]
        k: f64,
        /// Output CSV path
        #[arg(short, long)]
        output: PathBuf,
        /// Report clamped negative inner values on stderr
        #[arg(long)]
        verbose: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Metric {
    Jousselme,
    Sunberg,
    Generalized,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScenarioArg {
    Shifted,
    Growing,
}

fn main() {
    if let Err(err) = run(Cli::parse()) {
        eprintln!("error: {err:#}");
        std::process::exit(1);
    }
}

fn run(cli: Cli) -> anyhow::Result<()> {
    match cli.command {
        Command::Distance {
            file,
            bpa1,
            bpa2,
            metric,
            alpha,
            k,
        } => {
            let doc = read_document(&file)?;
            let metric = match metric {
                Metric::Jousselme => EvidenceMetric::Jousselme,
                Metric::Sunberg => EvidenceMetric::Sunberg { tuning: k },
                Metric::Generalized => EvidenceMetric::Generalized(DistanceParams::new(alpha, k)?),
            };
            let report = evidence_distance_report(doc.require(&bpa1)?, doc.require(&bpa2)?, &metric)?;
            println!("{}", format_sig(report.value, 12));
        }
        Command::Combine {
            file,
            bpa1,
            bpa2,
            output,
        } => {
            let doc = read_document(&file)?;
            let combined = dempster_combine(doc.require(&bpa1)?, doc.require(&bpa2)?)?;
            let out_doc = BpaDocument::new(doc.frame().clone(), [("combined", combined)])?;
            let text = out_doc.emit()?;
            match output {
                Some(path) => std::fs::write(&path, text)
                    .with_context(|| format!("writing {}", path.display()))?,
                None => print!("{text}"),
            }
        }
        Command::Sweep {
            scenario,
            alpha,
            k,
            output,
            verbose,
        } => {
            let scenario = match scenario {
                ScenarioArg::Shifted => Scenario::Shifted,
                ScenarioArg::Growing => Scenario::Growing,
            };
            let results = run_sweep(scenario, &DistanceParams::new(alpha, k)?)?;
            if verbose {
                for result in &results {
                    for event in &result.clamp_events {
                        eprintln!(
                            "step {}: clamped negative inner value {:e} in {} distance",
                            result.step, event.inner, event.metric
                        );
                    }
                }
            }
            std::fs::write(&output, sweep_csv(&results))
                .with_context(|| format!("writing {}", output.display()))?;
        }
    }
    Ok(())
}

fn read_document(path: &PathBuf) -> anyhow::Result<BpaDocument> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(BpaDocument::parse(&text)?)
}
