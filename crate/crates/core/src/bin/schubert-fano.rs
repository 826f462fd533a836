use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;

use schubert_fano::catalog::EntryFilter;
use schubert_fano::report::{self, Report};
use schubert_fano::CompleteIntersection;

#[derive(Parser)]
#[command(name = "schubert-fano", version, about = "Lines on complete intersections and embedding orders of Fano varieties")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CiArgs {
    /// Ambient projective space dimension N.
    #[arg(long)]
    ambient: u32,
    /// Comma-separated hypersurface degrees; omit for P^N itself.
    #[arg(long, value_delimiter = ',', value_parser = clap::value_parser!(u32).range(1..))]
    degrees: Vec<u32>,
}

impl CiArgs {
    fn build(&self) -> schubert_fano::Result<CompleteIntersection> {
        CompleteIntersection::new(self.ambient, self.degrees.clone())
    }
}

#[derive(Subcommand)]
enum Command {
    /// Count lines on a generic complete intersection.
    Lines(CiArgs),
    /// Jet order of -K_X for a complete intersection.
    FanoCi(CiArgs),
    /// Degree and section bounds for a k-very ample bundle.
    Bounds {
        #[arg(long)]
        dim: u32,
        #[arg(long)]
        order: u32,
        #[arg(long)]
        degree: Option<BigInt>,
        #[arg(long)]
        h0: Option<BigInt>,
    },
    /// List catalog entries, or `catalog verify` to recheck them.
    Catalog {
        #[command(subcommand)]
        action: Option<CatalogAction>,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        dim: Option<u32>,
    },
    /// Adjunction outcomes admitted by (n, k).
    Adjunction {
        #[arg(long)]
        dim: u32,
        #[arg(long)]
        order: u32,
    },
    /// Top Chern class of Sym^d of the rank-2 quotient bundle.
    Chern {
        #[arg(long)]
        sym: u32,
        /// Also print the closed formula with boundary coefficient (d+1)^2.
        #[arg(long)]
        paper_formula: bool,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    Verify,
}

fn run(cli: &Cli) -> schubert_fano::Result<(Report, bool)> {
    let report = match &cli.command {
        Command::Lines(a) => report::lines(&a.build()?)?,
        Command::FanoCi(a) => report::fano_ci(&a.build()?)?,
        Command::Bounds { dim, order, degree, h0 } => {
            report::bounds(*dim, *order, degree.clone(), h0.clone())?
        }
        Command::Catalog { action: Some(CatalogAction::Verify), .. } => {
            let r = report::catalog_verify();
            let passed = r.result["passed"] == serde_json::Value::Bool(true);
            return Ok((r, passed));
        }
        Command::Catalog { action: None, k, dim } => report::catalog(&EntryFilter {
            dim: *dim,
            k_very_ample: *k,
            id: None,
        }),
        Command::Adjunction { dim, order } => report::adjunction(*dim, *order)?,
        Command::Chern { sym, paper_formula } => report::chern(*sym, *paper_formula)?,
    };
    Ok((report, true))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((report, ok)) => {
            if cli.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
