//! Command-line front end: cell tables, boundary matrices, homology,
//! verification, and JSON/DOT export.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error,
//! 3 resource limit, 4 I/O failure.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use lagcell::cells::{enumerate, Bounds, Space};
use lagcell::chain::build;
use lagcell::export::{self, to_document};
use lagcell::homology::{homology, Coefficients};
use lagcell::verify::{run_check, Check, ALL_CHECKS};
use lagcell::Error;

#[derive(Parser)]
#[command(name = "lagcell", version, about = "Schubert cells, attaching degrees, and homology of Lagrangian Grassmannians")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum SpaceArg {
    Real,
    Complex,
    Mixed,
}

impl From<SpaceArg> for Space {
    fn from(s: SpaceArg) -> Space {
        match s {
            SpaceArg::Real => Space::Real,
            SpaceArg::Complex => Space::Complex,
            SpaceArg::Mixed => Space::Mixed,
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum CoeffArg {
    Z,
    Z2,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum CellsFormat {
    Table,
    Json,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum BoundaryFormat {
    Table,
    Csv,
    Json,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum ExportFormat {
    Json,
    Dot,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum CheckArg {
    Ddzero,
    Jacobian,
    Euler,
    Subdivision,
    Realembed,
    Lagrangian,
    Stabilize,
}

impl From<CheckArg> for Check {
    fn from(c: CheckArg) -> Check {
        match c {
            CheckArg::Ddzero => Check::DdZero,
            CheckArg::Jacobian => Check::Jacobian,
            CheckArg::Euler => Check::Euler,
            CheckArg::Subdivision => Check::Subdivision,
            CheckArg::Realembed => Check::RealEmbed,
            CheckArg::Lagrangian => Check::Lagrangian,
            CheckArg::Stabilize => Check::Stabilize,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// List the cells of a CW structure.
    Cells {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long, value_enum)]
        space: SpaceArg,
        #[arg(long, value_enum, default_value = "table")]
        format: CellsFormat,
        #[arg(long)]
        max_n: Option<u32>,
    },
    /// Print boundary matrices.
    Boundary {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long, value_enum)]
        space: SpaceArg,
        /// Restrict to one dimension; all dimensions otherwise.
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long, value_enum, default_value = "table")]
        format: BoundaryFormat,
        #[arg(long)]
        max_n: Option<u32>,
    },
    /// Integral (or mod 2) homology of a CW structure.
    Homology {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long, value_enum)]
        space: SpaceArg,
        #[arg(long, value_enum, default_value = "z", ignore_case = true)]
        coefficients: CoeffArg,
        #[arg(long)]
        max_n: Option<u32>,
    },
    /// Run the exact verification suite.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        /// Comma-separated subset of checks; all of them by default.
        #[arg(long, value_enum, value_delimiter = ',')]
        checks: Vec<CheckArg>,
        /// Random points per oracle comparison.
        #[arg(long, default_value_t = 3)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        max_n: Option<u32>,
    },
    /// Write a complex to disk as JSON or DOT.
    Export {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long, value_enum)]
        space: SpaceArg,
        #[arg(long, value_enum)]
        format: ExportFormat,
        #[arg(long)]
        out: PathBuf,
        /// Recorded in the document provenance.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        max_n: Option<u32>,
    },
}

fn bounds_with_override(max_n: Option<u32>) -> Bounds {
    let mut bounds = Bounds::default();
    if let Some(m) = max_n {
        let m = m as usize;
        eprintln!(
            "warning: raising enumeration bounds to {}; mixed complexes grow very quickly",
            m
        );
        bounds.real_complex = bounds.real_complex.max(m);
        bounds.mixed = bounds.mixed.max(m);
    }
    bounds
}

fn exit_for(err: &Error) -> u8 {
    match err {
        Error::Domain(_) => 2,
        Error::Resource(_) => 3,
        Error::Integrity(_) => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {}", err);
            ExitCode::from(exit_for(&err))
        }
    }
}

fn run(cmd: Cmd) -> Result<ExitCode, Error> {
    match cmd {
        Cmd::Cells { n, space, format, max_n } => {
            let bounds = bounds_with_override(max_n);
            cmd_cells(n as usize, space.into(), format, &bounds)
        }
        Cmd::Boundary { n, space, dim, format, max_n } => {
            let bounds = bounds_with_override(max_n);
            cmd_boundary(n as usize, space.into(), dim, format, &bounds)
        }
        Cmd::Homology { n, space, coefficients, max_n } => {
            let bounds = bounds_with_override(max_n);
            cmd_homology(n as usize, space.into(), coefficients, &bounds)
        }
        Cmd::Verify { n, checks, samples, seed, max_n } => {
            let bounds = bounds_with_override(max_n);
            cmd_verify(n as usize, &checks, samples, seed, &bounds)
        }
        Cmd::Export { n, space, format, out, seed, max_n } => {
            let bounds = bounds_with_override(max_n);
            cmd_export(n as usize, space.into(), format, &out, seed, &bounds)
        }
    }
}

fn cmd_cells(
    n: usize,
    space: Space,
    format: CellsFormat,
    bounds: &Bounds,
) -> Result<ExitCode, Error> {
    let cells = enumerate(n, space, bounds)?;
    match format {
        CellsFormat::Table => {
            println!("{} cells of the {} structure at n = {}", cells.len(), space, n);
            println!("{:<5} {:<4} {:<12} {:<12} {:<8} cell", "id", "dim", "lambda", "mu", "eps");
            for (id, cell) in cells.iter().enumerate() {
                let mu = cell.mu().map(|m| m.to_string()).unwrap_or_else(|| "-".into());
                let eps = cell.eps().map(|e| e.render()).unwrap_or_else(|| "-".into());
                println!(
                    "{:<5} {:<4} {:<12} {:<12} {:<8} {}",
                    id,
                    cell.dim(),
                    cell.lambda().to_string(),
                    mu,
                    eps,
                    cell.decorated()
                );
            }
        }
        CellsFormat::Json => {
            // The cells section of the export document, without boundaries.
            let cc = build(n, space, bounds)?;
            let doc = to_document(&cc, None);
            let cells_json = serde_json::to_string_pretty(&doc.cells)
                .expect("cell records serialize");
            println!("{}", cells_json);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_boundary(
    n: usize,
    space: Space,
    dim: Option<usize>,
    format: BoundaryFormat,
    bounds: &Bounds,
) -> Result<ExitCode, Error> {
    let cc = build(n, space, bounds)?;
    let dims: Vec<usize> = match dim {
        Some(d) => {
            if d > cc.max_dim() {
                return Err(Error::Domain(format!(
                    "dimension {} exceeds the top dimension {}",
                    d,
                    cc.max_dim()
                )));
            }
            vec![d]
        }
        None => (1..=cc.max_dim()).collect(),
    };
    match format {
        BoundaryFormat::Table => {
            for d in dims {
                let b = cc.boundary(d);
                println!("∂_{} ({} x {}):", d, b.nrows(), b.ncols());
                let dense = b.to_dense();
                for (r, row) in dense.iter().enumerate() {
                    let label = cc
                        .cells_in_dim(d - 1)
                        .get(r)
                        .map(|c| c.to_string())
                        .unwrap_or_default();
                    let cells: Vec<String> = row.iter().map(|v| format!("{:>3}", v)).collect();
                    println!("  {:<20} {}", label, cells.join(" "));
                }
                if b.nrows() == 0 {
                    println!("  (no rows)");
                }
            }
        }
        BoundaryFormat::Csv => {
            for d in dims {
                let dense = cc.boundary(d).to_dense();
                println!("# boundary {}", d);
                for row in dense {
                    let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
                    println!("{}", cells.join(","));
                }
            }
        }
        BoundaryFormat::Json => {
            let doc = to_document(&cc, None);
            let records: Vec<_> = match dim {
                Some(d) => {
                    let lo = cc.dim_offset(d);
                    let hi = lo + cc.cells_in_dim(d).len();
                    doc.boundary
                        .into_iter()
                        .filter(|b| (lo..hi).contains(&b.source_id))
                        .collect()
                }
                None => doc.boundary,
            };
            println!(
                "{}",
                serde_json::to_string_pretty(&records).expect("records serialize")
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_homology(
    n: usize,
    space: Space,
    coefficients: CoeffArg,
    bounds: &Bounds,
) -> Result<ExitCode, Error> {
    let cc = build(n, space, bounds)?;
    let coeff = match coefficients {
        CoeffArg::Z => Coefficients::Z,
        CoeffArg::Z2 => Coefficients::Z2,
    };
    let h = homology(&cc, coeff)?;
    let coeff_name = match coeff {
        Coefficients::Z => "Z",
        Coefficients::Z2 => "Z_2",
    };
    println!(
        "homology of the {} structure at n = {} with {} coefficients",
        space, n, coeff_name
    );
    println!("{:<4} group", "d");
    for (d, group) in h.groups.iter().enumerate() {
        println!("{:<4} {}", d, group);
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(
    n: usize,
    checks: &[CheckArg],
    samples: usize,
    seed: u64,
    bounds: &Bounds,
) -> Result<ExitCode, Error> {
    let selected: Vec<Check> = if checks.is_empty() {
        ALL_CHECKS.to_vec()
    } else {
        checks.iter().map(|&c| c.into()).collect()
    };
    let mut all_passed = true;
    for check in selected {
        let outcome = run_check(check, n, samples, seed, bounds)?;
        let status = if outcome.passed { "pass" } else { "FAIL" };
        println!("check {}: {} — {}", outcome.check, status, outcome.detail);
        all_passed &= outcome.passed;
    }
    Ok(if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_export(
    n: usize,
    space: Space,
    format: ExportFormat,
    out: &PathBuf,
    seed: Option<u64>,
    bounds: &Bounds,
) -> Result<ExitCode, Error> {
    let cc = build(n, space, bounds)?;
    let payload = match format {
        ExportFormat::Json => export::to_json(&to_document(&cc, seed)),
        ExportFormat::Dot => export::to_dot(&cc),
    };
    let write = |path: &PathBuf, data: &str| -> std::io::Result<()> {
        let mut f = std::fs::File::create(path)?;
        f.write_all(data.as_bytes())?;
        f.write_all(b"\n")?;
        Ok(())
    };
    if let Err(e) = write(out, &payload) {
        eprintln!("error: cannot write {}: {}", out.display(), e);
        return Ok(ExitCode::from(4));
    }
    println!("wrote {}", out.display());
    Ok(ExitCode::SUCCESS)
}
