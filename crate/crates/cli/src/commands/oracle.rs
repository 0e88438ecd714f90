use std::path::PathBuf;

use clap::Args;
use fractal_ac::fsl::{characteristic_impedance, harmonic_matrices, sub_matrices};
use fractal_ac::hanoi::{filter_root, interp_matrices};
use fractal_ac::oracle::{fsl_checks, hanoi_checks, stochastic_check, Check};
use fractal_ac::{Complex, Vec3};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::args::{write_json, CircuitArgs, JsonComplex, Model};
use crate::error::{AtPoint, CliError, NUMERICAL};

/// Largest deviation for which the report passes.
pub const TOLERANCE: f64 = 1e-8;

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[command(flatten)]
    pub circuit: CircuitArgs,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub epsilon: f64,
    /// Construction level of the solved graph (1 to 3).
    #[arg(long, default_value_t = 1)]
    pub level: usize,
    /// Number of random boundary triples.
    #[arg(long, default_value_t = 20)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Serialize)]
struct CheckRow {
    name: String,
    max_deviation: f64,
    pass: bool,
}

#[derive(Serialize)]
struct Report {
    circuit: &'static str,
    level: usize,
    trials: usize,
    seed: u64,
    tolerance: f64,
    omega2lc: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    r: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", rename = "Z")]
    z: Option<JsonComplex>,
    #[serde(skip_serializing_if = "Option::is_none", rename = "Z1")]
    z1: Option<JsonComplex>,
    #[serde(skip_serializing_if = "Option::is_none", rename = "Z2")]
    z2: Option<JsonComplex>,
    checks: Vec<CheckRow>,
    pass: bool,
}

/// Boundary triples with components uniform in `[-1, 1)`.
pub fn random_triples(seed: u64, trials: usize) -> Vec<Vec3> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..trials)
        .map(|_| core::array::from_fn(|_| Complex::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))))
        .collect()
}

pub fn run(args: &OracleArgs) -> Result<(), CliError> {
    let point = args.circuit.point(args.epsilon);
    let triples = random_triples(args.seed, args.trials);
    let mut report = Report {
        circuit: args.circuit.circuit.name(),
        level: args.level,
        trials: args.trials,
        seed: args.seed,
        tolerance: TOLERANCE,
        omega2lc: 0.0,
        r: None,
        z: None,
        z1: None,
        z2: None,
        checks: Vec::new(),
        pass: true,
    };
    let mut checks: Vec<Check> = match args.circuit.model(args.epsilon)? {
        Model::Fsl(p) => {
            report.omega2lc = p.omega2lc();
            report.z = Some(characteristic_impedance(&p).at(&point)?.z.into());
            let mut checks = fsl_checks(&p, args.level, &triples).at(&point)?;
            if !triples.is_empty() {
                let m = harmonic_matrices(&p).at(&point)?.m;
                let mut all = vec![m];
                all.extend(sub_matrices());
                checks.push(stochastic_check("row sums", &all));
            }
            checks
        }
        Model::Hanoi(p) => {
            report.omega2lc = p.omega2lc();
            report.r = Some(p.r);
            let pair = filter_root(&p).at(&point)?;
            report.z1 = Some(pair.z1.into());
            report.z2 = Some(pair.z2.into());
            let mut checks = hanoi_checks(&p, &pair, args.level, &triples).at(&point)?;
            if !triples.is_empty() {
                let set = interp_matrices(&p, &pair).at(&point)?;
                checks.push(stochastic_check("row sums", &[set.pq, set.m[0], set.m[1], set.m[2]]));
            }
            checks
        }
    };
    report.checks = checks
        .drain(..)
        .map(|c| CheckRow { pass: c.max_deviation <= TOLERANCE, name: c.name, max_deviation: c.max_deviation })
        .collect();
    report.pass = report.checks.iter().all(|c| c.pass);
    write_json(args.out.as_ref(), &report)?;
    if report.pass {
        Ok(())
    } else {
        Err(CliError { code: NUMERICAL, message: format!("oracle deviations exceed {TOLERANCE:e} (at {point})") })
    }
}
