use std::path::PathBuf;

use clap::Args;
use fractal_ac::fsl::{flt, iterate, regularized_limit};
use fractal_ac::hanoi::{characteristic_pairs, step};
use fractal_ac::Complex;
use serde::Serialize;

use crate::args::{num, open_output, parse_complex, write_json, CircuitArgs, Format, JsonComplex, Model};
use crate::error::{AtPoint, CliError};

#[derive(Debug, Args)]
pub struct ConvergeArgs {
    #[command(flatten)]
    pub circuit: CircuitArgs,
    /// Comma-separated series resistances; one block of rows each.
    #[arg(long, value_delimiter = ',', default_value = "0", allow_negative_numbers = true)]
    pub epsilon: Vec<f64>,
    /// Number of substitution steps.
    #[arg(long)]
    pub n: usize,
    /// Level-0 impedance (default `Z_L`); Hanoi runs start from arms `(z0, z0)`.
    #[arg(long, allow_hyphen_values = true)]
    pub z0: Option<String>,
    /// Emit every k-th step (the last step is always emitted).
    #[arg(long, default_value_t = 1)]
    pub every: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, Serialize)]
struct FslRow {
    n: usize,
    epsilon: f64,
    re: f64,
    im: f64,
    distance: f64,
}

#[derive(Debug, Clone, Copy, Serialize)]
struct HanoiRow {
    n: usize,
    epsilon: f64,
    z1_re: f64,
    z1_im: f64,
    z2_re: f64,
    z2_im: f64,
    distance: f64,
    exploratory: bool,
}

#[derive(Serialize)]
struct Limit {
    epsilon: f64,
    z_eps: JsonComplex,
    multiplier: f64,
    /// `|Zε - Z|` against the ideal characteristic impedance.
    distance: f64,
}

#[derive(Serialize)]
struct Report<R: Serialize> {
    circuit: &'static str,
    rows: Vec<R>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    regularized: Vec<Limit>,
}

fn keep(n: usize, last: usize, every: usize) -> bool {
    n.is_multiple_of(every) || n == last
}

pub fn run(args: &ConvergeArgs) -> Result<(), CliError> {
    if args.every == 0 {
        return Err(CliError::usage("--every must be at least 1"));
    }
    if args.epsilon.is_empty() {
        return Err(CliError::usage("--epsilon needs at least one value"));
    }
    let z0 = args.z0.as_deref().map(parse_complex).transpose().map_err(CliError::usage)?;
    let name = args.circuit.circuit.name();
    // validates the component values once, before any block runs
    let base = args.circuit.model(0.0)?;
    let mut fsl_rows = Vec::new();
    let mut hanoi_rows = Vec::new();
    let mut limits = Vec::new();
    for &eps in &args.epsilon {
        let point = args.circuit.point(eps);
        match (&base, args.circuit.model(eps)?) {
            (Model::Fsl(ideal), Model::Fsl(p)) => {
                let fixed = flt(&p).at(&point)?.z_plus;
                let orbit = iterate(&p, z0.unwrap_or(p.z_l()), args.n).at(&point)?;
                for (n, z) in orbit.into_iter().enumerate().filter(|(n, _)| keep(*n, args.n, args.every)) {
                    fsl_rows.push(FslRow { n, epsilon: eps, re: z.re, im: z.im, distance: (z - fixed).norm() });
                }
                if eps > 0.0 {
                    if let Ok(pts) = regularized_limit(ideal, &[eps]) {
                        let pt = pts[0];
                        limits.push(Limit {
                            epsilon: eps,
                            z_eps: pt.z_eps.into(),
                            multiplier: pt.multiplier,
                            distance: pt.distance,
                        });
                    }
                }
            }
            (_, Model::Hanoi(p)) => {
                let fixed = characteristic_pairs(&p).at(&point)?[0];
                let start = z0.unwrap_or(p.z_l());
                let (mut z1, mut z2) = (start, start);
                for n in 0..=args.n {
                    if n > 0 {
                        (z1, z2) = step(&p, z1, z2);
                    }
                    if !(finite(z1) && finite(z2)) {
                        return Err(CliError::numerical(format!("iterate {n} is not finite (at {point})")));
                    }
                    if keep(n, args.n, args.every) {
                        let distance = (z1 - fixed.z1).norm().max((z2 - fixed.z2).norm());
                        hanoi_rows.push(HanoiRow {
                            n,
                            epsilon: eps,
                            z1_re: z1.re,
                            z1_im: z1.im,
                            z2_re: z2.re,
                            z2_im: z2.im,
                            distance,
                            exploratory: true,
                        });
                    }
                }
            }
            _ => unreachable!("model kind depends only on the circuit"),
        }
    }
    match (args.format, hanoi_rows.is_empty()) {
        (Format::Json, true) => {
            write_json(args.out.as_ref(), &Report { circuit: name, rows: fsl_rows, regularized: limits })
        }
        (Format::Json, false) => {
            write_json(args.out.as_ref(), &Report { circuit: name, rows: hanoi_rows, regularized: limits })
        }
        (Format::Csv, true) => write_csv(args, &fsl_rows, &["n", "epsilon", "re", "im", "distance"], |r| {
            vec![r.n.to_string(), num(r.epsilon), num(r.re), num(r.im), num(r.distance)]
        }),
        (Format::Csv, false) => write_csv(
            args,
            &hanoi_rows,
            &["n", "epsilon", "z1_re", "z1_im", "z2_re", "z2_im", "distance", "exploratory"],
            |r| {
                vec![
                    r.n.to_string(),
                    num(r.epsilon),
                    num(r.z1_re),
                    num(r.z1_im),
                    num(r.z2_re),
                    num(r.z2_im),
                    num(r.distance),
                    r.exploratory.to_string(),
                ]
            },
        ),
    }
}

fn finite(z: Complex) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

fn write_csv<R>(
    args: &ConvergeArgs,
    rows: &[R],
    header: &[&str],
    fields: impl Fn(&R) -> Vec<String>,
) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(open_output(args.out.as_ref())?);
    w.write_record(header)?;
    for row in rows {
        w.write_record(fields(row))?;
    }
    w.flush()?;
    Ok(())
}
