use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, ValueEnum};
use fractal_ac::fsl::CircuitParams;
use fractal_ac::hanoi::{HanoiParams, Variant};
use fractal_ac::Complex;
use serde::Serialize;

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Circuit {
    Fsl,
    Hanoi1,
    Hanoi2,
    Sg,
}

impl Circuit {
    pub fn name(self) -> &'static str {
        match self {
            Circuit::Fsl => "fsl",
            Circuit::Hanoi1 => "hanoi1",
            Circuit::Hanoi2 => "hanoi2",
            Circuit::Sg => "sg",
        }
    }

    pub fn variant(self) -> Option<Variant> {
        match self {
            Circuit::Hanoi1 => Some(Variant::I),
            Circuit::Hanoi2 => Some(Variant::II),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// Circuit selection and component values.
#[derive(Debug, Clone, Args)]
pub struct CircuitArgs {
    #[arg(long, value_enum)]
    pub circuit: Circuit,
    /// Angular frequency (rad/s).
    #[arg(long, allow_negative_numbers = true)]
    pub omega: Option<f64>,
    /// Inductance (H).
    #[arg(long, allow_negative_numbers = true)]
    pub l: Option<f64>,
    /// Capacitance (F).
    #[arg(long, allow_negative_numbers = true)]
    pub c: Option<f64>,
    /// Scaling factor of the Hanoi copies.
    #[arg(long, allow_negative_numbers = true)]
    pub r: Option<f64>,
}

pub enum Model {
    Fsl(CircuitParams),
    Hanoi(HanoiParams),
}

impl CircuitArgs {
    fn component(&self, value: Option<f64>, flag: &str) -> Result<f64, CliError> {
        value.ok_or_else(|| CliError::usage(format!("--{flag} is required for --circuit {}", self.circuit.name())))
    }

    /// Parameters with a series resistance `epsilon` on every reactive component.
    pub fn model(&self, epsilon: f64) -> Result<Model, CliError> {
        let omega = self.component(self.omega, "omega")?;
        let l = self.component(self.l, "l")?;
        let c = self.component(self.c, "c")?;
        match self.circuit {
            Circuit::Fsl => Ok(Model::Fsl(CircuitParams::new(omega, l, c)?.with_epsilon(epsilon)?)),
            Circuit::Hanoi1 | Circuit::Hanoi2 => {
                let r = self.component(self.r, "r")?;
                let variant = self.circuit.variant().expect("hanoi circuit");
                Ok(Model::Hanoi(HanoiParams::new(variant, r, omega, l, c)?.with_epsilon(epsilon)?))
            }
            Circuit::Sg => Err(CliError::usage("this command does not apply to --circuit sg")),
        }
    }

    /// Human-readable parameter point for diagnostics.
    pub fn point(&self, epsilon: f64) -> String {
        let mut s = format!("circuit={}", self.circuit.name());
        for (name, v) in [("omega", self.omega), ("L", self.l), ("C", self.c), ("r", self.r)] {
            if let Some(v) = v {
                s.push_str(&format!(", {name}={v}"));
            }
        }
        if epsilon != 0.0 {
            s.push_str(&format!(", epsilon={epsilon}"));
        }
        s
    }
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct JsonComplex {
    pub re: f64,
    pub im: f64,
}

impl From<Complex> for JsonComplex {
    fn from(z: Complex) -> Self {
        JsonComplex { re: z.re, im: z.im }
    }
}

/// Shortest round-trip text for a CSV field; exponent form outside `[1e-5, 1e16)`.
pub fn num(x: f64) -> String {
    let a = x.abs();
    if a == 0.0 || !a.is_finite() || (1e-5..1e16).contains(&a) {
        x.to_string()
    } else {
        format!("{x:e}")
    }
}

/// Parses `re+imi` style literals: `1`, `-2.5`, `3i`, `-i`, `1-2e-3i`.
pub fn parse_complex(text: &str) -> Result<Complex, String> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || format!("invalid complex literal {text:?}");
    if s.is_empty() {
        return Err(bad());
    }
    let Some(body) = s.strip_suffix(['i', 'j']) else {
        let re = s.parse::<f64>().map_err(|_| bad())?;
        return if re.is_finite() { Ok(Complex::new(re, 0.0)) } else { Err(bad()) };
    };
    // split before the last sign that is not an exponent sign
    let bytes = body.as_bytes();
    let split =
        (1..bytes.len()).rev().find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        other => other.parse::<f64>().map_err(|_| bad())?,
    };
    let re = re.parse::<f64>().map_err(|_| bad())?;
    if !(re.is_finite() && im.is_finite()) {
        return Err(bad());
    }
    Ok(Complex::new(re, im))
}

/// Standard output, or a buffered file when `--out` is given.
pub fn open_output(out: Option<&PathBuf>) -> Result<Box<dyn Write>, CliError> {
    match out {
        None => Ok(Box::new(BufWriter::new(io::stdout().lock()))),
        Some(path) => {
            let file = File::create(path).map_err(|e| CliError {
                code: crate::error::IO,
                message: format!("cannot write {}: {e}", path.display()),
            })?;
            Ok(Box::new(BufWriter::new(file)))
        }
    }
}

pub fn write_json<T: Serialize>(out: Option<&PathBuf>, value: &T) -> Result<(), CliError> {
    let mut w = open_output(out)?;
    serde_json::to_writer_pretty(&mut w, value)?;
    writeln!(w)?;
    w.flush()?;
    Ok(())
}
