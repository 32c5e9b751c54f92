//! Thin command-line front end; all logic lives in the library.

use std::fs;
use std::path::PathBuf;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};

use normlap::bounds::bound_report;
use normlap::experiment::{
    curve_samples, render_text_report, report_csv, run_experiment, write_curves_csv,
    write_experiment_csv, ExperimentModel,
};
use normlap::graph::parse_edge_list;

#[derive(Parser)]
#[command(
    name = "normlap",
    version,
    about = "Normalized-Laplacian spectral sums and bounds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full bound report for a graph read from an edge-list file.
    Bounds {
        /// Edge-list file: "n m" header, then one "u v" line per edge.
        #[arg(long)]
        input: PathBuf,
        /// Power-sum exponent; any finite value except 0 and 1.
        #[arg(long)]
        alpha: f64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// One generated graph per size; bound report rows written as CSV.
    Experiment {
        #[arg(long, value_enum)]
        model: ModelArg,
        /// Comma-separated sizes, each at least 4.
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        /// Edge probability for the er model.
        #[arg(long, default_value_t = 0.5)]
        q: f64,
        #[arg(long)]
        alpha: f64,
        /// Base seed; each row uses seed*1000 + n.
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// P, Q and Q-P sampled across the admissible range of t for each n.
    Curves {
        /// Comma-separated vertex counts, each at least 3.
        #[arg(long = "n", value_delimiter = ',', required = true)]
        n: Vec<usize>,
        /// Samples per n, uniformly spaced inside (n/(n-1), n).
        #[arg(long)]
        samples: usize,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    Er,
    Tree,
}

fn main() -> anyhow::Result<()> {
    let cli = Cli::parse();
    match cli.command {
        Command::Bounds {
            input,
            alpha,
            format,
        } => {
            let text = fs::read_to_string(&input)
                .with_context(|| format!("cannot read {}", input.display()))?;
            let graph = parse_edge_list(&text)
                .with_context(|| format!("cannot parse {}", input.display()))?;
            let report = bound_report(&graph, alpha)?;
            match format {
                OutputFormat::Text => print!("{}", render_text_report(&report)),
                OutputFormat::Csv => print!("{}", report_csv(&report)),
            }
        }
        Command::Experiment {
            model,
            sizes,
            q,
            alpha,
            seed,
            out,
        } => {
            let model = match model {
                ModelArg::Er => ExperimentModel::Er { q },
                ModelArg::Tree => ExperimentModel::Tree,
            };
            let rows = run_experiment(model, &sizes, alpha, seed)?;
            let file = fs::File::create(&out)
                .with_context(|| format!("cannot create {}", out.display()))?;
            write_experiment_csv(&rows, file)?;
            eprintln!("wrote {} rows to {}", rows.len(), out.display());
        }
        Command::Curves { n, samples, out } => {
            let points = curve_samples(&n, samples)?;
            let file = fs::File::create(&out)
                .with_context(|| format!("cannot create {}", out.display()))?;
            write_curves_csv(&points, file)?;
            eprintln!("wrote {} samples to {}", points.len(), out.display());
        }
    }
    Ok(())
}
