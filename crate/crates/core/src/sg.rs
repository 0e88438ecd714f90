//! Bilaterally symmetric self-similar circuits on the Sierpinski gasket.
//!
//! When the two lower copies are scaled by `r` and the top copy by `r₁`, the
//! symmetric solution has, up to a constant complex factor, conductance
//!
//! ```text
//! g(s) = (s² - 1 + √((s² - 1)² + s²(3 - 2s))) / (3 - 2s),   s = r₁/r,
//! ```
//!
//! which is real for real positive `s`.

use crate::error::{Error, Result};
use crate::{c, Complex};

/// Ratio `s = r₁/r` of the impedance scalings.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct SgScaling(f64);

impl SgScaling {
    pub fn new(s: f64) -> Result<Self> {
        if !(s.is_finite() && s > 0.0) {
            return Err(Error::Param(alloc::format!("s must be finite and positive, got {s}")));
        }
        if (s - 1.5).abs() <= 1e-12 * 1.5 {
            return Err(Error::Param("s = 3/2 is a pole of the conductance".into()));
        }
        Ok(SgScaling(s))
    }

    pub fn value(&self) -> f64 {
        self.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymmetricConductance {
    /// Principal-branch value.
    pub value: Complex,
    /// `(s² - 1)² + s²(3 - 2s)`.
    pub radicand: f64,
    /// Both square-root branches when the radicand is negative.
    pub complex_radicand: Option<(Complex, Complex)>,
}

pub fn symmetric_conductance(s: SgScaling) -> SymmetricConductance {
    let s = s.0;
    let num = s * s - 1.0;
    let radicand = num * num + s * s * (3.0 - 2.0 * s);
    let den = c(3.0 - 2.0 * s, 0.0);
    let root = c(radicand, 0.0).sqrt();
    let value = (root + num) / den;
    let complex_radicand = (radicand < 0.0).then(|| (value, (-root + num) / den));
    SymmetricConductance { value, radicand, complex_radicand }
}
