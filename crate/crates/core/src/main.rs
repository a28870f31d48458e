use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use queens_core::harness::{integer_spectrum_exact, run_range, verify_families};
use queens_core::linalg::DEFAULT_SEED;
use queens_core::spectra::{dense_spectrum, DEFAULT_TOL};
use queens_core::{Certifier, QueensGraph, Result};

#[derive(Parser)]
#[command(name = "queens", version, about = "Exact spectral analysis of the n-Queens graph")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportFormat {
    /// Matrix Market coordinate pattern
    Mm,
}

#[derive(Subcommand)]
enum Command {
    /// Build Q(n) and print its size, or export it.
    Graph {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        export: Option<ExportFormat>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify every closed-form eigenvector family on Q(n).
    Families {
        #[arg(long)]
        n: usize,
        /// Also print each nonzero family member as a board grid.
        #[arg(long)]
        render: bool,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Certified integer eigenvalues of Q(n).
    IntSpectrum {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the integer-spectrum conjecture for a range of boards.
    Conjecture {
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
        /// JSON-lines report path; a CSV summary is written alongside.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Approximate full spectrum by Jacobi rotations.
    Spectrum {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn emit(out: Option<&PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Graph { n, export, out } => {
            let g = QueensGraph::new(n)?;
            let text = match export {
                Some(ExportFormat::Mm) => g.to_matrix_market(),
                None => serde_json::json!({
                    "n": n,
                    "vertices": g.vertex_count(),
                    "edges": g.edge_count(),
                    "max_degree": g.max_degree(),
                })
                .to_string() + "\n",
            };
            emit(out.as_ref(), &text)?;
        }
        Command::Families { n, render, seed, out } => {
            let report = verify_families(n, &Certifier::from_seed(seed))?;
            let mut text = serde_json::to_string_pretty(&report)? + "\n";
            if render {
                for group in &report.groups {
                    for m in group.members.iter().filter(|m| m.nonzero) {
                        text.push_str(&format!("\n{} (eigenvalue {})\n", m.member, m.eigenvalue));
                        text.push_str(&m.descriptor.build()?.render_grid());
                    }
                }
            }
            emit(out.as_ref(), &text)?;
            if !report.ok {
                return Ok(ExitCode::from(1));
            }
        }
        Command::IntSpectrum { n, seed, out } => {
            let s = integer_spectrum_exact(n, &Certifier::from_seed(seed))?;
            emit(out.as_ref(), &(serde_json::to_string_pretty(&s)? + "\n"))?;
        }
        Command::Conjecture { from, to, out, jobs, seed } => {
            let summary = run_range(from, to, out.as_deref(), jobs, seed)?;
            if out.is_none() {
                let mut stdout = io::stdout().lock();
                for r in &summary.reports {
                    serde_json::to_writer(&mut stdout, r)?;
                    stdout.write_all(b"\n")?;
                }
            }
            for row in &summary.rows {
                eprintln!("n={:>2} predicted={:>2} all_ok={} {:.2}s", row.n, row.predicted, row.all_ok, row.wall_seconds);
            }
            let failed = summary.containment_failures();
            if !failed.is_empty() {
                eprintln!("containment failed for n in {failed:?}");
                return Ok(ExitCode::from(1));
            }
        }
        Command::Spectrum { n, tol, out } => {
            let s = dense_spectrum(&QueensGraph::new(n)?, tol)?;
            emit(out.as_ref(), &(serde_json::to_string(&s)? + "\n"))?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
