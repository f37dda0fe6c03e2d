//! Named verification reports with text and JSON output.

pub mod check;
pub mod error;
pub mod reports;
pub mod samples;

use clap::ValueEnum;

pub use check::{Check, Report, Status};
pub use error::{CliError, Result};
pub use reports::Context;

pub const DEFAULT_SEED: u64 = 20240607;
pub const PRIMES: [u8; 3] = [2, 3, 5];

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum ReportName {
    TorusRing,
    Hilb2Basis,
    Hilb3Theta,
    SymplecticTables,
    GxiOrbits,
    H4Lattice,
    Appendix,
    Invariants,
    BbKprime,
    All,
}

impl ReportName {
    pub const SINGLE: [ReportName; 9] = [
        ReportName::TorusRing,
        ReportName::Hilb2Basis,
        ReportName::Hilb3Theta,
        ReportName::SymplecticTables,
        ReportName::GxiOrbits,
        ReportName::H4Lattice,
        ReportName::Appendix,
        ReportName::Invariants,
        ReportName::BbKprime,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ReportName::TorusRing => "torus-ring",
            ReportName::Hilb2Basis => "hilb2-basis",
            ReportName::Hilb3Theta => "hilb3-theta",
            ReportName::SymplecticTables => "symplectic-tables",
            ReportName::GxiOrbits => "gxi-orbits",
            ReportName::H4Lattice => "h4-lattice",
            ReportName::Appendix => "appendix",
            ReportName::Invariants => "invariants",
            ReportName::BbKprime => "bb-kprime",
            ReportName::All => "all",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReportSpec {
    pub name: ReportName,
    pub format: Format,
    /// Restricts the symplectic tables to one prime.
    pub q: Option<u8>,
    pub seed: u64,
}

impl ReportSpec {
    pub fn new(name: ReportName) -> Self {
        Self { name, format: Format::Text, q: None, seed: DEFAULT_SEED }
    }
}

/// Runs one report against a shared context, so the H⁴ model is built once.
pub fn run_in(ctx: &Context, name: ReportName, q: Option<u8>) -> Result<Report> {
    match name {
        ReportName::TorusRing => reports::torus_ring(ctx),
        ReportName::Hilb2Basis => reports::hilb2_basis(ctx),
        ReportName::Hilb3Theta => reports::hilb3_theta(ctx),
        ReportName::SymplecticTables => {
            let primes: Vec<u8> = PRIMES.iter().copied().filter(|&p| q.map_or(true, |q| q == p)).collect();
            reports::symplectic_tables(ctx, &primes)
        }
        ReportName::GxiOrbits => reports::gxi_orbits_report(ctx),
        ReportName::H4Lattice => reports::h4_lattice(ctx),
        ReportName::Appendix => reports::appendix(ctx),
        ReportName::Invariants => reports::invariants(ctx),
        ReportName::BbKprime => reports::bb_kprime(ctx),
        ReportName::All => {
            let mut names = ReportName::SINGLE.to_vec();
            names.sort_by_key(|n| n.as_str());
            let parts = names.into_iter().map(|n| run_in(ctx, n, q)).collect::<Result<Vec<_>>>()?;
            Ok(Report::combined("all", parts))
        }
    }
}

/// Runs the selected report.
pub fn run(request: &ReportSpec) -> Result<Report> {
    let ctx = Context::new(request.seed);
    run_in(&ctx, request.name, request.q)
}

pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json(),
    }
}
