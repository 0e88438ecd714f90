use super::{build_level_graph_with_base, characteristic_impedance, CircuitParams, Regime};
use crate::address::Address;
use crate::complexnet::CircuitGraph;
use crate::error::{Error, Result};
use crate::linalg::{Mat3, Vec3};
use crate::Complex;

/// Harmonic interpolation data for the ladder in its filter band.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FslInterpolation {
    /// Characteristic impedance the matrices are built from.
    pub z: Complex,
    /// Outer corners `p` to inner corners `q`.
    pub m: Mat3,
    /// Inner corners `q` to the corners of copy `j`.
    pub sub: [Mat3; 3],
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HarmonicValues {
    pub values: Vec3,
    /// Product of the ∞-norms of the applied steps; bounds the growth of the values.
    pub kappa: f64,
}

/// The constant matrices taking `q` values to copy `j`'s corners.
pub fn sub_matrices() -> [Mat3; 3] {
    core::array::from_fn(|j| {
        let mut rows = [[0.0; 3]; 3];
        for (k, row) in rows.iter_mut().enumerate() {
            if k == j {
                row[j] = 1.0;
            } else {
                row[j] = 0.4;
                row[k] = 0.4;
                row[3 - j - k] = 0.2;
            }
        }
        Mat3::from_real(rows)
    })
}

pub fn harmonic_matrices(params: &CircuitParams) -> Result<FslInterpolation> {
    let imp = characteristic_impedance(params)?;
    if imp.regime != Regime::Filter {
        return Err(Error::Regime(alloc::format!(
            "harmonic interpolation needs the filter band, got {:?} at Ω = {}",
            imp.regime,
            params.omega2lc()
        )));
    }
    let (z, zc) = (imp.z, params.z_c());
    let den = zc * 9.0 + z * 5.0;
    let off = zc * 3.0 / den;
    let on = (zc * 3.0 + z * 5.0) / den;
    let m = Mat3(core::array::from_fn(|i| core::array::from_fn(|j| if i == j { on } else { off })));
    Ok(FslInterpolation { z, m, sub: sub_matrices() })
}

impl FslInterpolation {
    /// Boundary values of the cell at `addr`: `(M_{w_n} M)···(M_{w_1} M) v`.
    pub fn evaluate(&self, v: Vec3, addr: &Address) -> HarmonicValues {
        let mut values = v;
        let mut kappa = 1.0;
        for &j in addr.symbols() {
            let step = self.sub[j as usize] * self.m;
            kappa *= step.norm_inf();
            values = step.apply(values);
        }
        HarmonicValues { values, kappa }
    }
}

pub fn harmonic_evaluate(params: &CircuitParams, v: Vec3, addr: &Address) -> Result<HarmonicValues> {
    if v.iter().any(|z| !crate::is_finite(*z)) {
        return Err(Error::NonFinite("boundary values"));
    }
    Ok(harmonic_matrices(params)?.evaluate(v, addr))
}

/// Level-`depth` ladder whose innermost cells are triangles of the
/// characteristic impedance, so the harmonic matrices are exact on it.
pub fn reduced_graph(params: &CircuitParams, depth: usize) -> Result<CircuitGraph> {
    let interp = harmonic_matrices(params)?;
    build_level_graph_with_base(params, depth, interp.z)
}
