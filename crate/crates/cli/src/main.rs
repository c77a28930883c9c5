use std::fs::File;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use alphashape_core::diagnostics::Report;
use alphashape_core::experiment::render_report;
use alphashape_core::{
    edge_diagnostics, emit_outputs, polygon_structure, replicate_rng, run_experiment,
    sandwich_check, AlphaShape, ConfigFile, Domain, Estimator, ExperimentConfig, Point2,
};
use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};

/// Perimeter estimation from uniform samples with alpha-shapes.
///
/// Domains are given as `disk:R`, `annulus:R_IN,R_OUT`,
/// `stadium:HALF_LENGTH,CAP_RADIUS` or `disks:(X1,Y1),R1,(X2,Y2),R2`.
#[derive(Parser)]
#[command(name = "alphashape", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Draw a uniform sample and write it as x,y CSV.
    Sample(Common),
    /// List the alpha-edges of a sample as CSV.
    Edges(Common),
    /// Print the shape and hull perimeters of a sample.
    Perimeter(Common),
    /// Print edge, sandwich and polygon diagnostics for a sample.
    Diagnose(Common),
    /// Run the Monte Carlo study and write raw.csv, summary.csv and report.txt.
    Experiment(ExperimentArgs),
}

#[derive(Args)]
struct Common {
    #[arg(long, default_value = "annulus:0.25,1")]
    domain: Domain,
    #[arg(long, default_value_t = 0.2)]
    alpha: f64,
    #[arg(long = "n", default_value_t = 1000)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output file; standard output when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ExperimentArgs {
    #[arg(long, default_value = "annulus:0.25,1")]
    domain: Domain,
    #[arg(long, value_delimiter = ',', default_value = "0.2")]
    alphas: Vec<f64>,
    #[arg(long, value_delimiter = ',', default_value = "1000,3000,10000,30000")]
    sizes: Vec<usize>,
    #[arg(long, default_value_t = 100)]
    reps: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value = "shape")]
    estimator: Estimator,
    /// TOML file; its values take precedence over the flags above.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Output directory.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Sample(c) => {
            let points = draw(&c);
            let mut w = csv::Writer::from_writer(sink(c.out.as_deref())?);
            w.write_record(["x", "y"])?;
            for p in points {
                w.write_record([p.x.to_string(), p.y.to_string()])?;
            }
            w.flush()?;
        }
        Command::Edges(c) => {
            let shape = build(&c)?;
            let mut w = csv::Writer::from_writer(sink(c.out.as_deref())?);
            w.write_record(["i", "j", "length", "empty_plus", "empty_minus"])?;
            for e in &shape.edges {
                w.write_record([
                    e.i.to_string(),
                    e.j.to_string(),
                    shape.edge_length(e).to_string(),
                    e.empty_plus.to_string(),
                    e.empty_minus.to_string(),
                ])?;
            }
            w.flush()?;
        }
        Command::Perimeter(c) => {
            let shape = build(&c)?;
            let truth = c.domain.exact_perimeter();
            let estimate = shape.shape_perimeter();
            let text = format!(
                "domain={}\nalpha={}\nn={}\nseed={}\nedges={}\nshape_perimeter={}\nhull_perimeter={}\ntrue_perimeter={}\nrelative_error={}\n",
                c.domain,
                c.alpha,
                c.n,
                c.seed,
                shape.edges.len(),
                estimate,
                shape.hull_perimeter(),
                truth,
                (estimate - truth) / truth
            );
            sink(c.out.as_deref())?.write_all(text.as_bytes())?;
        }
        Command::Diagnose(c) => {
            let shape = build(&c)?;
            let mut text = edge_diagnostics(&shape, &c.domain)?.to_key_value();
            match sandwich_check(&shape, &c.domain) {
                Ok(s) => text.push_str(&s.to_key_value()),
                Err(e) => text.push_str(&format!("sandwich=error: {e}\n")),
            }
            text.push_str(&polygon_structure(&shape, &c.domain).to_key_value());
            sink(c.out.as_deref())?.write_all(text.as_bytes())?;
        }
        Command::Experiment(a) => experiment(a)?,
    }
    Ok(())
}

/// The sample of replicate 0 in cell `(n, 0)` of an experiment with the same
/// master seed.
fn draw(c: &Common) -> Vec<Point2> {
    let mut rng = replicate_rng(c.seed, c.n, 0, 0);
    c.domain.sample_uniform(c.n, &mut rng)
}

fn build(c: &Common) -> Result<AlphaShape> {
    AlphaShape::build(draw(c), c.alpha).context("building the alpha-shape")
}

fn sink(out: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match out {
        Some(path) => {
            Box::new(File::create(path).with_context(|| format!("creating {}", path.display()))?)
        }
        None => Box::new(io::stdout().lock()),
    })
}

fn experiment(a: ExperimentArgs) -> Result<()> {
    let mut config = ExperimentConfig {
        domain: a.domain,
        alphas: a.alphas,
        sample_sizes: a.sizes,
        replicates: a.reps,
        master_seed: a.seed,
        estimator: a.estimator,
        output_path: a.out,
    };
    if let Some(path) = &a.config {
        ConfigFile::load(path)?.apply(&mut config)?;
    }
    let result = run_experiment(&config)?;
    let mut stdout = io::stdout().lock();
    if let Some(dir) = &config.output_path {
        let paths = emit_outputs(&result, dir)?;
        writeln!(stdout, "wrote {}", paths.raw.display())?;
        writeln!(stdout, "wrote {}", paths.summary.display())?;
        writeln!(stdout, "wrote {}", paths.report.display())?;
    }
    stdout.write_all(render_report(&result).as_bytes())?;
    Ok(())
}
