//! `fractal-ac`: impedances, filter regions, convergence runs and oracle
//! reports for fractal AC circuits.
//!
//! Exit codes: 0 success, 2 parameter or usage error, 3 I/O error,
//! 4 numerical failure.

mod args;
mod commands;
mod error;
mod netlist;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::{converge, harmonic, impedance, netlist as netlist_cmd, oracle, region};
use error::CliError;

#[derive(Debug, Parser)]
#[command(name = "fractal-ac", version, about = "Fractal AC circuit computations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Characteristic impedance (fsl), characteristic pairs (hanoi1/2) or conductance (sg).
    Impedance(impedance::ImpedanceArgs),
    /// Filter-region sweep over an (r, ω²LC) grid.
    Region(region::RegionArgs),
    /// Harmonic interpolation of boundary values down to a cell.
    Harmonic(harmonic::HarmonicArgs),
    /// Orbits of the finite approximations, optionally regularized.
    Converge(converge::ConvergeArgs),
    /// Closed forms checked against Dirichlet solves on generated graphs.
    Oracle(oracle::OracleArgs),
    /// Level-N circuit graph as a JSON netlist.
    Netlist(netlist_cmd::NetlistArgs),
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Impedance(a) => impedance::run(&a),
        Command::Region(a) => region::run(&a),
        Command::Harmonic(a) => harmonic::run(&a),
        Command::Converge(a) => converge::run(&a),
        Command::Oracle(a) => oracle::run(&a),
        Command::Netlist(a) => netlist_cmd::run(&a),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code as u8)
        }
    }
}
