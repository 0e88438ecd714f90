//! Hanoi circuits I and II.
//!
//! Both circuits are weakly self-similar: three copies of the circuit,
//! rescaled by a real factor `r`, are joined by capacitors and inductors. By
//! the reflection symmetry the infinite circuit is equivalent to a Y with a
//! vertical arm `Z1` and two arms `Z2`; the characteristic pair `(Z1, Z2)` is
//! the fixed point of that substitution.

mod graph;
mod interp;
mod quadratic;
mod region;

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::{c, Complex};

pub use graph::{build_level_graph, build_level_graph_with_arms, cell_corner_names, step, MAX_LEVEL};
pub use interp::{eigen_data, harmonic_evaluate, interp_matrices, pq_map, EigenData, InterpolationSet};
pub use region::{filter_polynomial, filter_polynomial_reduced, filter_region, FilterRegion};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    I,
    II,
}

/// Parameters of a Hanoi circuit. `z_c` and `z_l` already include any series
/// resistance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HanoiParams {
    pub variant: Variant,
    pub r: f64,
    z_c: Complex,
    z_l: Complex,
}

impl HanoiParams {
    pub fn new(variant: Variant, r: f64, omega: f64, inductance: f64, capacitance: f64) -> Result<Self> {
        for (name, v) in [("omega", omega), ("L", inductance), ("C", capacitance)] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::Param(format!("{name} must be finite and positive, got {v}")));
            }
        }
        HanoiParams::from_impedances(variant, r, c(0.0, -1.0 / (omega * capacitance)), c(0.0, omega * inductance))
    }

    /// Parameters with `ω = 1`, `C = 1` and `L = Ω`.
    pub fn from_omega2lc(variant: Variant, r: f64, omega2lc: f64) -> Result<Self> {
        HanoiParams::new(variant, r, 1.0, omega2lc, 1.0)
    }

    pub fn from_impedances(variant: Variant, r: f64, z_c: Complex, z_l: Complex) -> Result<Self> {
        if !(r.is_finite() && r > 0.0) {
            return Err(Error::Param(format!("r must be finite and positive, got {r}")));
        }
        for z in [z_c, z_l] {
            if !crate::is_finite(z) || z.norm() == 0.0 {
                return Err(Error::Param("component impedances must be finite and nonzero".into()));
            }
        }
        Ok(HanoiParams { variant, r, z_c, z_l })
    }

    /// Adds a series resistance `epsilon` to every capacitor and inductor.
    pub fn with_epsilon(self, epsilon: f64) -> Result<Self> {
        if !(epsilon.is_finite() && epsilon >= 0.0) {
            return Err(Error::Param(format!("epsilon must be finite and >= 0, got {epsilon}")));
        }
        HanoiParams::from_impedances(self.variant, self.r, self.z_c + epsilon, self.z_l + epsilon)
    }

    pub fn z_c(&self) -> Complex {
        self.z_c
    }

    pub fn z_l(&self) -> Complex {
        self.z_l
    }

    /// `ω²LC = -Re(Z_L / Z_C)`.
    pub fn omega2lc(&self) -> f64 {
        -(self.z_l / self.z_c).re
    }

    fn scale(&self) -> f64 {
        self.z_c.norm().max(self.z_l.norm())
    }
}

/// The self-consistent Y arms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CharacteristicPair {
    pub z1: Complex,
    pub z2: Complex,
    /// Largest relative residual of the two defining equations.
    pub residual: f64,
    pub is_filter_root: bool,
}

impl CharacteristicPair {
    fn new(params: &HanoiParams, z1: Complex, z2: Complex) -> Self {
        let residual = system_residual(params, z1, z2);
        let positive = |z: Complex| z.re > 1e-12 * z.norm();
        let is_filter_root = positive(z1 + z2) && positive(z2);
        CharacteristicPair { z1, z2, residual, is_filter_root }
    }

    /// Impedance between `p0` and `p1`.
    pub fn top_pair(&self) -> Complex {
        self.z1 + self.z2
    }

    /// Impedance between `p1` and `p2`.
    pub fn base(&self) -> Complex {
        self.z2 * 2.0
    }
}

/// Terms of the two defining equations for Y arms `(z1, z2)`: the impedance
/// `top` from `p0` to the joined `p1, p2`, and the impedance from `p1` to `p2`
/// as `series + (a ∥ b)`.
struct Terms {
    top: Complex,
    series: Complex,
    a: Complex,
    b: Complex,
}

fn terms(params: &HanoiParams, z1: Complex, z2: Complex) -> Terms {
    let (r, zc, zl) = (params.r, params.z_c, params.z_l);
    match params.variant {
        Variant::I => Terms {
            top: z1 * r + (z1 * r + z2 * (2.0 * r) + zc) / 2.0,
            series: z2 * (2.0 * r),
            a: z2 * (2.0 * r) + zl,
            b: (z1 * r + z2 * r + zc) * 2.0,
        },
        Variant::II => Terms {
            top: zl + z1 * r + (z1 * r + z2 * (2.0 * r) + zc * 2.0) / 2.0,
            series: z2 * (2.0 * r) + zc * 2.0,
            a: z2 * (2.0 * r) + zl,
            b: (z1 + z2) * (2.0 * r) + zc * 2.0,
        },
    }
}

/// Right-hand sides of the two defining equations: one substitution step
/// applied to the Y with arms `(z1, z2)`.
pub(crate) fn substitution_rhs(params: &HanoiParams, z1: Complex, z2: Complex) -> (Complex, Complex) {
    let t = terms(params, z1, z2);
    (t.top, t.series + (t.a.inv() + t.b.inv()).inv())
}

/// Largest relative residual of the defining equations, evaluated by direct
/// substitution. The parallel combination is cleared of its denominator and
/// each equation is scaled by the magnitudes of its terms, so a near-pole of
/// `a ∥ b` does not inflate the residual of an accurate root.
pub fn system_residual(params: &HanoiParams, z1: Complex, z2: Complex) -> f64 {
    let t = terms(params, z1, z2);
    let lhs1 = z1 + z2 / 2.0;
    let scale1 = z1.norm() + z2.norm() / 2.0 + t.top.norm();
    let r1 = (lhs1 - t.top).norm() / scale1.max(f64::MIN_POSITIVE);
    let lhs2 = z2 * 2.0;
    let d = lhs2 - t.series;
    let scale2 = (lhs2.norm() + t.series.norm()) * (t.a.norm() + t.b.norm()) + t.a.norm() * t.b.norm();
    let r2 = (d * (t.a + t.b) - t.a * t.b).norm() / scale2.max(f64::MIN_POSITIVE);
    let worst = r1.max(r2);
    if worst.is_finite() {
        worst
    } else {
        f64::INFINITY
    }
}

const SPECIAL_R: [f64; 4] = [0.5, 0.6, 2.0 / 3.0, 1.0];

/// Snaps `r` onto a special value within a relative window of `1e-12`.
pub(crate) fn snap(r: f64) -> f64 {
    SPECIAL_R.into_iter().find(|s| (r - s).abs() <= 1e-12 * s).unwrap_or(r)
}

/// Coefficients `(a2, a1, a0)` of the quadratic satisfied by `Z2`.
pub fn z2_quadratic(params: &HanoiParams) -> (Complex, Complex, Complex) {
    let r = snap(params.r);
    let (zc, zl) = (params.z_c, params.z_l);
    let linear = r == 0.6 || (params.variant == Variant::II && r == 1.0);
    match params.variant {
        Variant::I => {
            let a2 = if linear { 0.0 } else { r * (5.0 * r - 3.0) };
            (c(a2, 0.0), (zc * 2.0 + zl) * (2.0 * r - 1.0), zc * zl)
        }
        Variant::II => {
            let a2 = if linear { 0.0 } else { 2.0 * r * (1.0 - r) * (5.0 * r - 3.0) };
            let a1 = (zc * (2.0 * (1.0 - r) * (3.0 * r - 1.0)) + zl * ((2.0 * r - 1.0) * (r + 1.0))) * 2.0;
            let a0 = (zl + zc) * (zc * (2.0 - r) + zl * r) * 2.0;
            (c(a2, 0.0), a1, a0)
        }
    }
}

/// Coefficients `(a2, a1, a0)` of the quadratic satisfied by `Z1`, obtained by
/// eliminating `Z2` (not valid at `r = 2/3`).
pub fn z1_quadratic(params: &HanoiParams) -> (Complex, Complex, Complex) {
    let r = snap(params.r);
    let (zc, zl) = (params.z_c, params.z_l);
    let linear = r == 0.6 || (params.variant == Variant::II && r == 1.0);
    match params.variant {
        Variant::I => {
            let a2 = if linear { 0.0 } else { r * (3.0 * r - 2.0) * (5.0 * r - 3.0) };
            let a1 = zc * (2.0 * (r * r + r - 1.0)) - zl * ((2.0 * r - 1.0) * (2.0 * r - 1.0));
            (c(a2, 0.0), a1, zc * zc * (1.0 - r))
        }
        Variant::II => {
            let a2 = if linear { 0.0 } else { r * (r - 1.0) * (3.0 * r - 2.0) * (5.0 * r - 3.0) };
            let a1 = zc * (2.0 * (r - 1.0) * (4.0 * r * r - r - 1.0)) + zl * (((24.0 * r - 32.0) * r + 9.0) * r + 1.0);
            let a0 = (zc + zl) * (zl * (4.0 * r * (2.0 * r - 1.0)) - zc - zl);
            (c(a2, 0.0), a1, a0)
        }
    }
}

type Coeffs = (Complex, Complex, Complex);

/// Pairs each `Z2` root with a `Z1`: `z1_from_z2`, which is consistent with
/// `Z2`, unless its error bound exceeds that of the nearest direct `Z1` root
/// by a wide margin (heavy cancellation in `z1_from_z2`).
fn pair_roots(
    params: &HanoiParams,
    q2: Coeffs,
    z2s: &[Complex],
    q1: Coeffs,
    z1s: &[Complex],
) -> Vec<(Complex, Complex)> {
    let r = params.r;
    let (s, u) = ((2.0 * r - 1.0).abs(), (2.0 - 3.0 * r).abs());
    let w = match params.variant {
        Variant::I => params.z_c.norm(),
        Variant::II => 2.0 * (params.z_c.norm() + params.z_l.norm()),
    };
    let guesses: Vec<(Complex, f64)> = z2s
        .iter()
        .map(|&z2| {
            let e2 = quadratic::root_sensitivity(q2, z2);
            (z1_from_z2(params, z2), (s * (z2.norm() + e2) + w) / u)
        })
        .collect();
    let distance = |order: &[usize]| -> f64 { guesses.iter().zip(order).map(|((g, _), &k)| (z1s[k] - g).norm()).sum() };
    let order: &[usize] = match (z2s.len(), z1s.len()) {
        (1, 1) => &[0],
        (2, 2) if distance(&[0, 1]) <= distance(&[1, 0]) => &[0, 1],
        (2, 2) => &[1, 0],
        _ => &[],
    };
    z2s.iter()
        .enumerate()
        .map(|(i, &z2)| {
            let (guess, guess_err) = guesses[i];
            match order.get(i).map(|&k| z1s[k]) {
                Some(z1) if quadratic::root_sensitivity(q1, z1) * 64.0 < guess_err => (z1, z2),
                _ => (guess, z2),
            }
        })
        .collect()
}

/// `Z1` as a function of `Z2` (not valid at `r = 2/3`).
pub fn z1_from_z2(params: &HanoiParams, z2: Complex) -> Complex {
    let r = params.r;
    let (zc, zl) = (params.z_c, params.z_l);
    match params.variant {
        Variant::I => (z2 * (2.0 * r - 1.0) + zc) / (2.0 - 3.0 * r),
        Variant::II => (z2 * (2.0 * r - 1.0) + (zc + zl) * 2.0) / (2.0 - 3.0 * r),
    }
}

/// Residuals above this are treated as spurious roots.
const ROOT_ACCEPT: f64 = 1e-8;

/// All characteristic pairs, filter roots first.
pub fn characteristic_pairs(params: &HanoiParams) -> Result<Vec<CharacteristicPair>> {
    let r = snap(params.r);
    let p = HanoiParams { r, ..*params };
    let (zc, zl) = (p.z_c, p.z_l);
    let tiny = 1e-12 * p.scale();

    let mut pairs = Vec::new();
    match (p.variant, r) {
        (Variant::I, 1.0) => {
            return Err(Error::NoSolution("r = 1 makes the reciprocal on the right vanish".into()));
        }
        (Variant::I, r) if r == 2.0 / 3.0 => {
            if (zl - zc * 2.0).norm() <= tiny {
                return Err(Error::DegenerateCase("Z_L - 2 Z_C vanishes at r = 2/3".into()));
            }
            let z2 = zc * -3.0;
            let z1 = zc * zc * 3.0 / (zl - zc * 2.0);
            pairs.push(CharacteristicPair::new(&p, z1, z2));
        }
        (Variant::II, r) if r == 2.0 / 3.0 => {
            let z2 = (zc + zl) * -6.0;
            if z2.norm() <= tiny {
                return Err(Error::DegenerateCase("Z2 = -6(Z_C + Z_L) vanishes at r = 2/3".into()));
            }
            let den = zc * 2.0 + zl * 3.0;
            if den.norm() <= tiny {
                return Err(Error::DegenerateCase("2 Z_C + 3 Z_L vanishes at r = 2/3".into()));
            }
            let z1 = (zc + zl) * -3.0 * (zc * 9.0 + zl) / den;
            pairs.push(CharacteristicPair::new(&p, z1, z2));
        }
        _ => {
            let (q2, q1) = (z2_quadratic(&p), z1_quadratic(&p));
            let z2s = quadratic::solve_quadratic(q2.0, q2.1, q2.2)?;
            let z1s = quadratic::solve_quadratic(q1.0, q1.1, q1.2).unwrap_or_default();
            for (z1, z2) in pair_roots(&p, q2, &z2s, q1, &z1s) {
                pairs.push(CharacteristicPair::new(&p, z1, z2));
            }
        }
    }
    pairs.retain(|pair| pair.residual <= ROOT_ACCEPT);
    if pairs.is_empty() {
        return Err(Error::NoSolution(format!("no root satisfies the defining system at r = {r}")));
    }
    pairs.sort_by_key(|pair| !pair.is_filter_root);
    Ok(pairs)
}

/// The first filter root, if any.
pub fn filter_root(params: &HanoiParams) -> Result<CharacteristicPair> {
    characteristic_pairs(params)?
        .into_iter()
        .find(|p| p.is_filter_root)
        .ok_or_else(|| Error::Regime(format!("no filter root at r = {}, Ω = {}", params.r, params.omega2lc())))
}
