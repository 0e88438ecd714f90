//! The Feynman–Sierpinski ladder.
//!
//! Three copies of a triangular element are glued into a Sierpinski triple,
//! each outer corner is tied to the glued structure through a capacitor and
//! the outer corners are joined pairwise by inductors. The characteristic
//! impedance `(2/3)Z` is the fixed point of the resulting substitution:
//!
//! ```text
//! 1/Z = 1/Z_L + 1/(3 Z_C + 5Z/3)
//! ```

mod dynamics;
mod graph;
mod harmonic;

use num_traits::Float;

use crate::error::{Error, Result};
use crate::{c, Complex};

pub use dynamics::{flt, iterate, regularized_limit, FltMap, RegularizedPoint};
pub use graph::{build_level_graph, build_level_graph_with_base, cell_corner_names, MAX_LEVEL};
pub use harmonic::{
    harmonic_evaluate, harmonic_matrices, reduced_graph, sub_matrices, FslInterpolation, HarmonicValues,
};

/// Drive and component parameters. `epsilon` is a series resistance folded
/// into every capacitor and inductor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircuitParams {
    omega: f64,
    inductance: f64,
    capacitance: f64,
    epsilon: f64,
}

impl CircuitParams {
    pub fn new(omega: f64, inductance: f64, capacitance: f64) -> Result<Self> {
        for (name, v) in [("omega", omega), ("L", inductance), ("C", capacitance)] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::Param(alloc::format!("{name} must be finite and positive, got {v}")));
            }
        }
        Ok(CircuitParams { omega, inductance, capacitance, epsilon: 0.0 })
    }

    /// Parameters with `ω = 1`, `C = 1` and `L = Ω`.
    pub fn from_omega2lc(omega2lc: f64) -> Result<Self> {
        CircuitParams::new(1.0, omega2lc, 1.0)
    }

    pub fn with_epsilon(self, epsilon: f64) -> Result<Self> {
        if !(epsilon.is_finite() && epsilon >= 0.0) {
            return Err(Error::Param(alloc::format!("epsilon must be finite and >= 0, got {epsilon}")));
        }
        Ok(CircuitParams { epsilon, ..self })
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn inductance(&self) -> f64 {
        self.inductance
    }

    pub fn capacitance(&self) -> f64 {
        self.capacitance
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    /// Dimensionless `Ω = ω²LC`.
    pub fn omega2lc(&self) -> f64 {
        self.omega * self.omega * self.inductance * self.capacitance
    }

    /// `1/(iωC) + ε`.
    pub fn z_c(&self) -> Complex {
        c(self.epsilon, -1.0 / (self.omega * self.capacitance))
    }

    /// `iωL + ε`.
    pub fn z_l(&self) -> Complex {
        c(self.epsilon, self.omega * self.inductance)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Regime {
    Filter,
    BelowBand,
    AboveBand,
    BandEdge,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FslImpedance {
    pub z: Complex,
    pub regime: Regime,
    /// `|1/Z - 1/Z_L - 1/(3Z_C + 5Z/3)| / |1/Z|`.
    pub residual: f64,
}

impl FslImpedance {
    /// Impedance across two outer vertices, `(2/3)Z`.
    pub fn terminal_impedance(&self) -> Complex {
        self.z * (2.0 / 3.0)
    }
}

/// Filter band `(9(4-√15), 9(4+√15))` in the variable `2ω²LC`.
pub fn filter_band_2omega() -> (f64, f64) {
    // roots of x² - 72x + 81 with x = 2Ω
    let hi = 36.0 + Float::sqrt(36.0 * 36.0 - 81.0);
    (81.0 / hi, hi)
}

/// `144Ω - 4Ω² - 81`; positive exactly inside the filter band.
pub fn discriminant(omega2lc: f64) -> f64 {
    144.0 * omega2lc - 4.0 * omega2lc * omega2lc - 81.0
}

/// Residual of the self-consistency equation for a candidate `Z`.
pub fn self_consistency_residual(z: Complex, z_c: Complex, z_l: Complex) -> f64 {
    let lhs = z.inv();
    let rhs = z_l.inv() + (z_c * 3.0 + z * (5.0 / 3.0)).inv();
    (lhs - rhs).norm() / lhs.norm()
}

/// Characteristic impedance of the ideal (`ε = 0`) ladder.
pub fn characteristic_impedance(params: &CircuitParams) -> Result<FslImpedance> {
    if params.epsilon != 0.0 {
        return Err(Error::Param("closed-form impedance requires epsilon = 0".into()));
    }
    let big = params.omega2lc();
    let disc = discriminant(big);
    let scale = 144.0 * big + 4.0 * big * big + 81.0;
    let denom = 10.0 * params.omega * params.capacitance;
    let center = 9.0 + 2.0 * big;

    let (z, regime) = if disc.abs() <= 1e-12 * scale {
        (c(0.0, center / denom), Regime::BandEdge)
    } else if disc > 0.0 {
        (c(disc.sqrt() / denom, center / denom), Regime::Filter)
    } else if 2.0 * big < 36.0 {
        (c(0.0, (center - (-disc).sqrt()) / denom), Regime::BelowBand)
    } else {
        (c(0.0, (center + (-disc).sqrt()) / denom), Regime::AboveBand)
    };
    if !crate::is_finite(z) {
        return Err(Error::NonFinite("characteristic impedance"));
    }
    let residual = self_consistency_residual(z, params.z_c(), params.z_l());
    Ok(FslImpedance { z, regime, residual })
}
