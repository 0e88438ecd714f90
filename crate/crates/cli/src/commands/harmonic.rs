use clap::Args;
use fractal_ac::fsl::harmonic_matrices;
use fractal_ac::hanoi::{characteristic_pairs, interp_matrices};
use fractal_ac::{Address, Vec3};
use serde::Serialize;

use crate::args::{parse_complex, write_json, CircuitArgs, JsonComplex, Model};
use crate::error::{AtPoint, CliError};

#[derive(Debug, Args)]
pub struct HarmonicArgs {
    #[command(flatten)]
    pub circuit: CircuitArgs,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub epsilon: f64,
    /// Boundary values at p0, p1, p2 as complex literals, e.g. `1,0,0.5-2i`.
    #[arg(long, allow_hyphen_values = true)]
    pub boundary: String,
    /// Cell address over {0,1,2}; empty for the whole circuit.
    #[arg(long, default_value = "")]
    pub address: String,
    /// Which filter root to use when a Hanoi circuit has several.
    #[arg(long, default_value_t = 0)]
    pub root: usize,
}

#[derive(Serialize)]
struct Report {
    circuit: &'static str,
    address: String,
    boundary: Vec<JsonComplex>,
    values: Vec<JsonComplex>,
    #[serde(skip_serializing_if = "Option::is_none")]
    kappa: Option<f64>,
}

pub fn parse_boundary(text: &str) -> Result<Vec3, CliError> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 3 {
        return Err(CliError::usage(format!("--boundary needs three values, got {}", parts.len())));
    }
    let mut v = [fractal_ac::Complex::new(0.0, 0.0); 3];
    for (slot, part) in v.iter_mut().zip(parts) {
        *slot = parse_complex(part).map_err(CliError::usage)?;
    }
    Ok(v)
}

pub fn run(args: &HarmonicArgs) -> Result<(), CliError> {
    let point = args.circuit.point(args.epsilon);
    let v = parse_boundary(&args.boundary)?;
    let addr: Address = args.address.parse()?;
    let (values, kappa) = match args.circuit.model(args.epsilon)? {
        Model::Fsl(p) => {
            let h = harmonic_matrices(&p).at(&point)?.evaluate(v, &addr);
            (h.values, Some(h.kappa))
        }
        Model::Hanoi(p) => {
            let filters: Vec<_> =
                characteristic_pairs(&p).at(&point)?.into_iter().filter(|q| q.is_filter_root).collect();
            let pair = filters.get(args.root).ok_or_else(|| {
                CliError::usage(format!("no filter root with index {} ({} available)", args.root, filters.len()))
            })?;
            (interp_matrices(&p, pair).at(&point)?.evaluate(v, &addr), None)
        }
    };
    write_json(
        None,
        &Report {
            circuit: args.circuit.circuit.name(),
            address: addr.to_string(),
            boundary: v.iter().map(|&z| z.into()).collect(),
            values: values.iter().map(|&z| z.into()).collect(),
            kappa,
        },
    )
}
