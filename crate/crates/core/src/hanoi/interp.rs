use alloc::format;

use super::{CharacteristicPair, HanoiParams, Variant};
use crate::address::Address;
use crate::error::{Error, Result};
use crate::linalg::{Mat3, Vec3};
use crate::{c, Complex};

/// Eigen-structure of the map from boundary values at `p` to values at the
/// inner vertices `q`, in the order `(λ₀, λ₊, λ₋)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenData {
    pub lambda: Vec3,
    /// `v₀ = (1,1,1)`, `v₊ = (a,-1,-1)`, `v₋ = (0,1,-1)`.
    pub vectors: [Vec3; 3],
}

/// Harmonic interpolation data of a Hanoi circuit at a characteristic pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InterpolationSet {
    pub variant: Variant,
    /// Values at `p` to values at `q`.
    pub pq: Mat3,
    /// Values at `p` to the corners `(p_{j0}, p_{j1}, p_{j2})` of copy `j`.
    pub m: [Mat3; 3],
    /// `2Z1 + Z2`.
    pub b: Complex,
    /// Variant I: `(1-r)Z_L/(4rZ2 + 2Z_L)`; variant II: `rZ1 + rZ2 + Z_C`.
    pub c: Complex,
    /// Variant II only: `(1-r)Z2 - Z_C`.
    pub d: Option<Complex>,
    pub eigen: EigenData,
}

fn scale(params: &HanoiParams, pair: &CharacteristicPair) -> f64 {
    [pair.z1, pair.z2, params.z_c(), params.z_l()].iter().map(|z| z.norm()).fold(0.0, f64::max)
}

fn nonzero(z: Complex, tiny: f64, what: &str) -> Result<Complex> {
    if z.norm() <= tiny || !crate::is_finite(z) {
        return Err(Error::DegenerateCase(format!("{what} vanishes")));
    }
    Ok(z)
}

pub fn eigen_data(params: &HanoiParams, pair: &CharacteristicPair) -> Result<EigenData> {
    let (r, zc, zl) = (params.r, params.z_c(), params.z_l());
    let (z1, z2) = (pair.z1, pair.z2);
    let tiny = 1e-12 * scale(params, pair);
    let eig = |e: Error| match e {
        Error::DegenerateCase(msg) => Error::DegenerateEigenbasis(msg),
        other => other,
    };
    let one = c(1.0, 0.0);
    let (a, lambda_plus, lambda_minus) = match params.variant {
        Variant::I => {
            nonzero(z2, tiny, "Z2").map_err(eig)?;
            (z1 * 2.0 / z2, one * (1.0 - r), one * (1.0 - r))
        }
        Variant::II => {
            nonzero(z2, tiny, "Z2").map_err(eig)?;
            let den = nonzero(z2 * r + zc, tiny, "r Z2 + Z_C").map_err(eig)?;
            let b = nonzero(z1 * 2.0 + z2, tiny, "2 Z1 + Z2").map_err(eig)?;
            let a = (z1 * r + zl) * 2.0 / den;
            ((a), (z1 * r + z2 * r + zc) / b, one * (1.0 - r) - zc / z2)
        }
    };
    let m1 = c(-1.0, 0.0);
    let zero = c(0.0, 0.0);
    Ok(EigenData { lambda: [one, lambda_plus, lambda_minus], vectors: [[one, one, one], [a, m1, m1], [zero, one, m1]] })
}

/// `T = P diag(λ) P⁻¹` with `P = [v₀ v₊ v₋]`.
pub fn pq_map(params: &HanoiParams, pair: &CharacteristicPair) -> Result<Mat3> {
    let eigen = eigen_data(params, pair)?;
    pq_from_eigen(&eigen)
}

fn pq_from_eigen(eigen: &EigenData) -> Result<Mat3> {
    let p = Mat3::from_columns(eigen.vectors);
    let a = eigen.vectors[1][0];
    // det P = 2(1 + a)
    if p.det().norm() <= 1e-12 * 2.0 * (1.0 + a.norm()) {
        return Err(Error::DegenerateEigenbasis("v₊ is parallel to v₀".into()));
    }
    let inv = p.inverse().ok_or_else(|| Error::DegenerateEigenbasis("singular eigenvector matrix".into()))?;
    Ok(p * Mat3::diag(eigen.lambda) * inv)
}

pub fn interp_matrices(params: &HanoiParams, pair: &CharacteristicPair) -> Result<InterpolationSet> {
    let eigen = eigen_data(params, pair)?;
    let pq = pq_from_eigen(&eigen)?;
    let (r, zc, zl) = (params.r, params.z_c(), params.z_l());
    let (z1, z2) = (pair.z1, pair.z2);
    let tiny = 1e-12 * scale(params, pair);
    let one = c(1.0, 0.0);
    let zero = c(0.0, 0.0);
    let b = nonzero(z1 * 2.0 + z2, tiny, "b = 2 Z1 + Z2")?;

    match params.variant {
        Variant::I => {
            let cc = zl * (1.0 - r) / nonzero(z2 * (4.0 * r) + zl * 2.0, tiny, "4 r Z2 + 2 Z_L")?;
            let s = (z1 + z2) * r / b;
            let t = z1 * r / b;
            let u = one * (1.0 - r);
            let w = one * (r / 2.0) - z2 * r / (b * 2.0);
            let x = one * 0.5 - z2 * r / (b * 2.0);
            let y = z2 * r / b;
            let m0 = Mat3([[one, zero, zero], [u, s, t], [u, t, s]]);
            let m1 = Mat3([[s, u, w], [zero, one, zero], [y, x + cc, x - cc]]);
            let m2 = Mat3([[s, w, u], [y, x - cc, x + cc], [zero, zero, one]]);
            Ok(InterpolationSet { variant: Variant::I, pq, m: [m0, m1, m2], b, c: cc, d: None, eigen })
        }
        Variant::II => {
            let cc = nonzero(z1 * r + z2 * r + zc, tiny, "c = r Z1 + r Z2 + Z_C")?;
            let d = z2 * (1.0 - r) - zc;
            let z2n = nonzero(z2, tiny, "Z2")?;
            let loop_ = nonzero(z2 * (2.0 * r) + zl, tiny, "2 r Z2 + Z_L")?;
            let e = d * (z2 - d) / (cc * z2n * 2.0);
            let f = d * zl / (z2n * loop_ * 2.0);
            let g = one * (r / 2.0) + zl / b;
            let h = d * r / (cc * 2.0);
            let top = (cc + zc) / b;
            let row0 = [cc / b, (b - cc) / (b * 2.0) + e, (b - cc) / (b * 2.0) - e];
            let inner = [zc / b, one - zc * (z1 + z2) / (b * z2n), z1 * zc / (b * z2n)];
            let base = (b + d - z2) / (b * 2.0);
            let near = (z2 * r + zc) / b;
            let m0 = Mat3([[one - zl * 2.0 / b, zl / b, zl / b], [top, g + h, g - h], [top, g - h, g + h]]);
            let m1 = Mat3([row0, inner, [near, base + f, base - f]]);
            let m2 = Mat3([[row0[0], row0[2], row0[1]], [near, base - f, base + f], [inner[0], inner[2], inner[1]]]);
            Ok(InterpolationSet { variant: Variant::II, pq, m: [m0, m1, m2], b, c: cc, d: Some(d), eigen })
        }
    }
}

impl InterpolationSet {
    /// Boundary values of the cell at `addr`: `M_{w_n}···M_{w_1} v`.
    pub fn evaluate(&self, v: Vec3, addr: &Address) -> Vec3 {
        addr.symbols().iter().fold(v, |acc, &j| self.m[j as usize].apply(acc))
    }

    /// Largest row-sum defect over the four matrices.
    pub fn stochastic_defect(&self) -> f64 {
        self.m.iter().chain(core::iter::once(&self.pq)).map(Mat3::stochastic_defect).fold(0.0, f64::max)
    }
}

pub fn harmonic_evaluate(params: &HanoiParams, pair: &CharacteristicPair, v: Vec3, addr: &Address) -> Result<Vec3> {
    if v.iter().any(|z| !crate::is_finite(*z)) {
        return Err(Error::NonFinite("boundary values"));
    }
    Ok(interp_matrices(params, pair)?.evaluate(v, addr))
}
