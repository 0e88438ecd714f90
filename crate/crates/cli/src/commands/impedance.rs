use clap::Args;
use fractal_ac::fsl::characteristic_impedance;
use fractal_ac::hanoi::characteristic_pairs;
use fractal_ac::sg::{symmetric_conductance, SgScaling};
use serde::Serialize;

use crate::args::{write_json, Circuit, CircuitArgs, JsonComplex, Model};
use crate::error::{AtPoint, CliError};

#[derive(Debug, Args)]
pub struct ImpedanceArgs {
    #[command(flatten)]
    pub circuit: CircuitArgs,
    /// Series resistance on every reactive component (ohms).
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub epsilon: f64,
    /// Scaling ratio `s = r1/r` (sg only).
    #[arg(long, allow_negative_numbers = true)]
    pub s: Option<f64>,
}

#[derive(Serialize)]
struct FslReport {
    circuit: &'static str,
    omega2lc: f64,
    #[serde(rename = "Z")]
    z: JsonComplex,
    regime: String,
    terminal_impedance: JsonComplex,
    residual: f64,
}

#[derive(Serialize)]
struct Root {
    #[serde(rename = "Z1")]
    z1: JsonComplex,
    #[serde(rename = "Z2")]
    z2: JsonComplex,
    is_filter_root: bool,
    residual: f64,
}

#[derive(Serialize)]
struct HanoiReport {
    circuit: &'static str,
    r: f64,
    omega2lc: f64,
    roots: Vec<Root>,
}

#[derive(Serialize)]
struct SgReport {
    circuit: &'static str,
    s: f64,
    g: JsonComplex,
    radicand: f64,
}

pub fn run(args: &ImpedanceArgs) -> Result<(), CliError> {
    let point = args.circuit.point(args.epsilon);
    if args.circuit.circuit == Circuit::Sg {
        let s = args.s.ok_or_else(|| CliError::usage("--s is required for --circuit sg"))?;
        let g = symmetric_conductance(SgScaling::new(s)?);
        return write_json(None, &SgReport { circuit: "sg", s, g: g.value.into(), radicand: g.radicand });
    }
    match args.circuit.model(args.epsilon)? {
        Model::Fsl(p) => {
            let z = characteristic_impedance(&p).at(&point)?;
            write_json(
                None,
                &FslReport {
                    circuit: "fsl",
                    omega2lc: p.omega2lc(),
                    z: z.z.into(),
                    regime: format!("{:?}", z.regime),
                    terminal_impedance: z.terminal_impedance().into(),
                    residual: z.residual,
                },
            )
        }
        Model::Hanoi(p) => {
            let roots = characteristic_pairs(&p)
                .at(&point)?
                .into_iter()
                .map(|q| Root {
                    z1: q.z1.into(),
                    z2: q.z2.into(),
                    is_filter_root: q.is_filter_root,
                    residual: q.residual,
                })
                .collect();
            write_json(
                None,
                &HanoiReport { circuit: args.circuit.circuit.name(), r: p.r, omega2lc: p.omega2lc(), roots },
            )
        }
    }
}
