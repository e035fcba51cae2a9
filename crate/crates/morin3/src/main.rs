//! Command-line front end. All the work happens in the library; this binary
//! parses arguments, loads JSON instance documents, and prints reports.
//!
//! Exit codes for `check`: 0 realizable, 1 not realizable, 2 invalid input.
//! Every other subcommand exits 0 on success and 2 on invalid input; no
//! failure panics the process.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use morin3::cohomology::CohomologyContext;
use morin3::error::Error;
use morin3::morin::verify_model_on_grid;
use morin3::verdict::InstanceDoc;
use morin3::{builtins, classes, verdict};

#[derive(Parser)]
#[command(
    name = "morin3",
    version,
    about = "Decide whether a map of closed 3-manifolds is homotopic to a generic map with a prescribed fold/cusp/swallowtail locus"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full realizability decision on an instance file.
    Check {
        file: PathBuf,
        /// Emit the verdict as a machine-readable JSON report.
        #[arg(long)]
        json: bool,
    },
    /// Mod-2 Betti numbers of the source complex of an instance file.
    Homology {
        file: PathBuf,
        /// Restrict to one degree (0..=3); all four when omitted.
        #[arg(long)]
        dim: Option<usize>,
    },
    /// Stiefel-Whitney representatives and Betti numbers of the source
    /// complex.
    Classes {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Verify the Thom-Boardman strata of a local normal form on a rational
    /// grid.
    Morin {
        /// One of: fold, cusp, swallowtail.
        #[arg(long)]
        model: String,
        /// Grid sweeps {-n/2..n/2}^3, i.e. (2n+1)^3 points.
        #[arg(long, default_value_t = 5)]
        grid: i64,
    },
    /// Print a built-in triangulation (S3, T3, RP3, S2xS1, RP2xS1).
    Builtin {
        name: String,
        /// Dump the full identity-map instance document as JSON.
        #[arg(long)]
        emit: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn load(file: &PathBuf) -> Result<InstanceDoc, Error> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", file.display())))?;
    InstanceDoc::from_json(&text)
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Check { file, json } => {
            let inst = load(&file)?.build_instance()?;
            let v = verdict::check_theorem2(&inst)?;
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&v).expect("verdict serializes")
                );
            } else {
                for line in &v.diagnostics {
                    println!("{line}");
                }
                println!(
                    "verdict: {}",
                    if v.realizable {
                        "realizable"
                    } else {
                        "not realizable"
                    }
                );
            }
            Ok(ExitCode::from(if v.realizable { 0 } else { 1 }))
        }
        Command::Homology { file, dim } => {
            let m = load(&file)?.build_m()?;
            let ctx = CohomologyContext::new(m);
            if let Some(k) = dim {
                if k > 3 {
                    return Err(Error::InvalidInput(format!("--dim {k} out of range 0..=3")));
                }
                println!("b_{k} = {}", ctx.betti(k));
            } else {
                for k in 0..=3 {
                    println!("b_{k} = {}", ctx.betti(k));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Classes { file, json } => {
            let m = load(&file)?.build_m()?;
            let ctx = CohomologyContext::new(m);
            let tangent = classes::tangent_classes(&ctx)?;
            if json {
                let report = serde_json::json!({
                    "betti": [ctx.betti(0), ctx.betti(1), ctx.betti(2), ctx.betti(3)],
                    "w1": tangent.w1.support(),
                    "w2": tangent.w2.support(),
                });
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report).expect("report serializes")
                );
            } else {
                println!(
                    "betti: {} {} {} {}",
                    ctx.betti(0),
                    ctx.betti(1),
                    ctx.betti(2),
                    ctx.betti(3)
                );
                println!("w1 edge-index support: {:?}", tangent.w1.support());
                println!("w2 triangle-index support: {:?}", tangent.w2.support());
                println!(
                    "orientable: {}",
                    ctx.complex().is_orientable()?
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Morin { model, grid } => {
            if grid < 1 {
                return Err(Error::InvalidInput("--grid must be at least 1".into()));
            }
            let report = verify_model_on_grid(&model, grid)?;
            println!(
                "model {}: {} grid points (step 1/2), {} on-locus samples",
                report.model, report.grid_points, report.locus_samples
            );
            println!(
                "  strata counts: regular={} fold={} cusp={} swallowtail={}",
                report.regular, report.folds, report.cusps, report.swallowtails
            );
            println!(
                "  grid mismatches: {}, on-locus mismatches: {}",
                report.grid_mismatches, report.locus_mismatches
            );
            println!("  {}", if report.all_ok() { "PASS" } else { "FAIL" });
            Ok(ExitCode::from(if report.all_ok() { 0 } else { 1 }))
        }
        Command::Builtin { name, emit } => {
            let facets = builtins::builtin_facets(&name)?;
            if emit {
                let doc = InstanceDoc::for_complex(&facets);
                println!("{}", doc.to_json());
            } else {
                let c = builtins::by_name(&name)?;
                println!(
                    "{name}: {} vertices, {} edges, {} triangles, {} facets",
                    c.n(0),
                    c.n(1),
                    c.n(2),
                    c.n(3)
                );
                println!("closed: {}", c.is_closed_pseudomanifold());
                println!("orientable: {}", c.is_orientable()?);
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
