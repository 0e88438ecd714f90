//! Fractal AC circuits built from capacitors and inductors.
//!
//! This crate computes characteristic impedances, filter bands, the
//! fractional-linear dynamics of finite approximations and harmonic
//! (equilibrium-voltage) interpolation for three weakly self-similar
//! circuits:
//!
//! - the Feynman–Sierpinski ladder ([`fsl`]),
//! - the Hanoi circuits I and II ([`hanoi`]),
//! - bilaterally symmetric self-similar circuits on the Sierpinski gasket ([`sg`]).
//!
//! Every closed form can be cross-checked against a brute-force Kirchhoff
//! solver ([`complexnet`]) running on generated finite circuit graphs; the
//! [`oracle`] module bundles those comparisons.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod address;
pub mod complexnet;
pub mod error;
pub mod fsl;
pub mod hanoi;
pub mod linalg;
pub mod mobius;
pub mod oracle;
pub mod sg;

pub use address::Address;
pub use complexnet::{CircuitGraph, DirichletSolution, NodeId};
pub use error::{Error, Result};
pub use linalg::{Mat3, Vec3};

/// Double-precision complex value carrying impedances, voltages and currents.
pub type Complex = num_complex::Complex64;

pub(crate) fn c(re: f64, im: f64) -> Complex {
    Complex::new(re, im)
}

pub(crate) fn is_finite(z: Complex) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

/// `|a - b| / max(|b|, tiny)`; the relative distance used throughout the tests.
pub fn rel_diff(a: Complex, b: Complex) -> f64 {
    let scale = b.norm().max(f64::MIN_POSITIVE);
    (a - b).norm() / scale
}
