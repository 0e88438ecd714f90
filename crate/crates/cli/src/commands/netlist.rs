use std::path::PathBuf;

use clap::Args;
use fractal_ac::{fsl, hanoi};

use crate::args::{parse_complex, write_json, CircuitArgs, Model};
use crate::error::{AtPoint, CliError};
use crate::netlist::Netlist;

#[derive(Debug, Args)]
pub struct NetlistArgs {
    #[command(flatten)]
    pub circuit: CircuitArgs,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub epsilon: f64,
    #[arg(long, default_value_t = 1)]
    pub level: usize,
    /// Ladder level-0 impedance (default `Z_L`).
    #[arg(long, allow_hyphen_values = true)]
    pub z0: Option<String>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn run(args: &NetlistArgs) -> Result<(), CliError> {
    let point = args.circuit.point(args.epsilon);
    let graph = match args.circuit.model(args.epsilon)? {
        Model::Fsl(p) => {
            let z0 = args.z0.as_deref().map(parse_complex).transpose().map_err(CliError::usage)?;
            fsl::build_level_graph_with_base(&p, args.level, z0.unwrap_or(p.z_l())).at(&point)?
        }
        Model::Hanoi(p) => {
            if args.z0.is_some() {
                return Err(CliError::usage("--z0 applies to --circuit fsl only"));
            }
            // Hanoi graphs end in the characteristic Y, filter roots first
            let pair = hanoi::characteristic_pairs(&p).at(&point)?[0];
            hanoi::build_level_graph(&p, &pair, args.level).at(&point)?
        }
    };
    write_json(args.out.as_ref(), &Netlist::from(&graph))
}
