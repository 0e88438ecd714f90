use std::path::PathBuf;

use clap::Args;
use fractal_ac::fsl::{characteristic_impedance, CircuitParams, Regime};
use fractal_ac::hanoi::{filter_region, Variant};
use serde::Serialize;

use crate::args::{num, open_output, write_json, Circuit, Format};
use crate::error::CliError;

#[derive(Debug, Args)]
pub struct RegionArgs {
    #[arg(long, value_enum)]
    pub circuit: Circuit,
    /// Fixed `r` instead of an `r` axis.
    #[arg(long, allow_negative_numbers = true)]
    pub r: Option<f64>,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub r_min: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub r_max: f64,
    #[arg(long, default_value_t = 200)]
    pub r_steps: usize,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub omega2lc_min: f64,
    #[arg(long, default_value_t = 10.0, allow_negative_numbers = true)]
    pub omega2lc_max: f64,
    #[arg(long, default_value_t = 200)]
    pub omega2lc_steps: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

/// Cell midpoints of `steps` equal subintervals of `(lo, hi)`.
pub fn midpoints(name: &str, lo: f64, hi: f64, steps: usize) -> Result<Vec<f64>, CliError> {
    if steps < 2 {
        return Err(CliError::usage(format!("--{name}-steps must be at least 2, got {steps}")));
    }
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(CliError::usage(format!("{name} range must be finite and ordered, got ({lo}, {hi})")));
    }
    let h = (hi - lo) / steps as f64;
    Ok((0..steps).map(|i| lo + (i as f64 + 0.5) * h).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Row {
    pub circuit: &'static str,
    pub r: Option<f64>,
    pub omega2lc: f64,
    pub is_filter: bool,
}

fn fsl_is_filter(omega2lc: f64) -> Result<bool, CliError> {
    let z = characteristic_impedance(&CircuitParams::from_omega2lc(omega2lc)?)?;
    Ok(z.regime == Regime::Filter)
}

/// Grid rows in row-major order, `r` outer.
pub fn sweep(args: &RegionArgs) -> Result<Vec<Row>, CliError> {
    let omegas = midpoints("omega2lc", args.omega2lc_min, args.omega2lc_max, args.omega2lc_steps)?;
    let name = args.circuit.name();
    let variant = match args.circuit {
        Circuit::Fsl => {
            return omegas
                .into_iter()
                .map(|w| Ok(Row { circuit: name, r: None, omega2lc: w, is_filter: fsl_is_filter(w)? }))
                .collect();
        }
        Circuit::Hanoi1 => Variant::I,
        Circuit::Hanoi2 => Variant::II,
        Circuit::Sg => return Err(CliError::usage("region sweeps cover fsl, hanoi1 and hanoi2")),
    };
    let rs = match args.r {
        Some(r) if r.is_finite() && r > 0.0 => vec![r],
        Some(r) => return Err(CliError::usage(format!("r must be finite and positive, got {r}"))),
        None => midpoints("r", args.r_min, args.r_max, args.r_steps)?,
    };
    let mut rows = Vec::with_capacity(rs.len() * omegas.len());
    for &r in &rs {
        let region = filter_region(variant, r);
        for &w in &omegas {
            rows.push(Row { circuit: name, r: Some(r), omega2lc: w, is_filter: region.contains_omega2lc(w) });
        }
    }
    Ok(rows)
}

pub fn run(args: &RegionArgs) -> Result<(), CliError> {
    let rows = sweep(args)?;
    if args.format == Format::Json {
        return write_json(args.out.as_ref(), &rows);
    }
    let mut w = csv::Writer::from_writer(open_output(args.out.as_ref())?);
    w.write_record(["circuit", "r", "omega2lc", "is_filter"])?;
    for row in &rows {
        let r = row.r.map(num).unwrap_or_default();
        w.write_record([row.circuit, &r, &num(row.omega2lc), &row.is_filter.to_string()])?;
    }
    w.flush()?;
    Ok(())
}
