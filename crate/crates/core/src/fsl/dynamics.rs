use alloc::vec::Vec;

use num_traits::Float;

use super::{characteristic_impedance, CircuitParams};
use crate::error::{Error, Result};
use crate::mobius::Mobius;
use crate::{c, Complex};

/// The substitution map `F(z) = (5Z_L z + 9Z_L Z_C) / (5z + 3Z_L + 9Z_C)`
/// together with its fixed points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FltMap {
    pub map: Mobius,
    /// Physical fixed point.
    pub z_plus: Complex,
    pub z_minus: Complex,
}

impl FltMap {
    pub fn apply(&self, z: Complex) -> Option<Complex> {
        self.map.apply(z)
    }

    /// `F′(z) = 15 Z_L² / (5z + 3Z_L + 9Z_C)²`.
    pub fn multiplier_at(&self, z: Complex) -> Complex {
        self.map.derivative(z)
    }

    pub fn multipliers(&self) -> (Complex, Complex) {
        (self.multiplier_at(self.z_plus), self.multiplier_at(self.z_minus))
    }

    /// `(1 + F′(Z₊)) / (1 - F′(Z₊))`.
    pub fn cayley(&self) -> Complex {
        let m = self.multiplier_at(self.z_plus);
        (m + 1.0) / (c(1.0, 0.0) - m)
    }
}

/// Builds the substitution map for (possibly ε-perturbed) parameters.
pub fn flt(params: &CircuitParams) -> Result<FltMap> {
    let (zc, zl) = (params.z_c(), params.z_l());
    let map = Mobius::new(zl * 5.0, zl * zc * 9.0, c(5.0, 0.0), zl * 3.0 + zc * 9.0)?;

    let lin = zc * 9.0 + zl * 8.0;
    let rad = lin * lin - zl * zl * 60.0;
    let mut root = rad.sqrt();
    if params.epsilon() == 0.0 && rad.re < 0.0 {
        // purely reactive and out of band: the radicand sits on the cut; take
        // the side reached as ε → 0+
        root = c(0.0, Float::sqrt(-rad.re).copysign(lin.im));
    }
    let base = zl * 2.0 - zc * 9.0;
    let z_plus = (base + root) / 10.0;
    let z_minus = (base - root) / 10.0;
    if !(crate::is_finite(z_plus) && crate::is_finite(z_minus)) {
        return Err(Error::NonFinite("fixed points"));
    }
    Ok(FltMap { map, z_plus, z_minus })
}

/// `[Z₀, F(Z₀), …, Fⁿ(Z₀)]`.
pub fn iterate(params: &CircuitParams, z0: Complex, n: usize) -> Result<Vec<Complex>> {
    if !crate::is_finite(z0) {
        return Err(Error::NonFinite("initial impedance"));
    }
    flt(params)?.map.orbit(z0, n)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegularizedPoint {
    pub epsilon: f64,
    /// Attracting fixed point of the ε-perturbed map.
    pub z_eps: Complex,
    /// `|F′ε(Zε)|`.
    pub multiplier: f64,
    /// `|Zε - Z|` against the ideal characteristic impedance.
    pub distance: f64,
}

/// Fixed points of the ε-perturbed maps for a strictly decreasing list of
/// positive ε. The base `epsilon` of `params` is ignored.
pub fn regularized_limit(params: &CircuitParams, epsilons: &[f64]) -> Result<Vec<RegularizedPoint>> {
    if epsilons.is_empty() {
        return Err(Error::Param("epsilon list is empty".into()));
    }
    for (k, &e) in epsilons.iter().enumerate() {
        if !(e.is_finite() && e > 0.0) {
            return Err(Error::Param(alloc::format!("epsilon must be positive, got {e}")));
        }
        if k > 0 && e >= epsilons[k - 1] {
            return Err(Error::Param("epsilon list must be strictly decreasing".into()));
        }
    }
    let ideal = params.with_epsilon(0.0)?;
    let z = characteristic_impedance(&ideal)?.z;
    epsilons
        .iter()
        .map(|&epsilon| {
            let m = flt(&ideal.with_epsilon(epsilon)?)?;
            Ok(RegularizedPoint {
                epsilon,
                z_eps: m.z_plus,
                multiplier: m.multiplier_at(m.z_plus).norm(),
                distance: (m.z_plus - z).norm(),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fsl::{filter_band_2omega, Regime};

    fn ladder() -> CircuitParams {
        CircuitParams::new(1.0, 2.0, 1.0).unwrap()
    }

    #[test]
    fn coefficients_and_determinant() {
        let p = ladder();
        let m = flt(&p).unwrap();
        let (zc, zl) = (p.z_c(), p.z_l());
        assert_eq!(m.map.c, c(5.0, 0.0));
        assert!((m.map.determinant() - zl * zl * 15.0).norm() < 1e-13);
        let z = c(0.3, -0.2);
        let d = m.multiplier_at(z);
        let den = z * 5.0 + zl * 3.0 + zc * 9.0;
        assert!((d - zl * zl * 15.0 / (den * den)).norm() < 1e-13);
    }

    #[test]
    fn physical_fixed_point_matches_closed_form() {
        let m = flt(&ladder()).unwrap();
        let want = c(191f64.sqrt() / 10.0, 1.3);
        assert!(crate::rel_diff(m.z_plus, want) < 1e-14);
        assert!((m.multiplier_at(m.z_plus).norm() - 1.0).abs() < 1e-12);
        let (gp, gm) = m.map.fixed_points().unwrap();
        assert!(crate::rel_diff(gp, m.z_plus) < 1e-13);
        assert!(crate::rel_diff(gm, m.z_minus) < 1e-13);
    }

    #[test]
    fn fixed_point_consistency_over_grid() {
        for i in 0..100 {
            let big = 0.1 + (50.0 - 0.1) * (i as f64 + 0.5) / 100.0;
            let p = CircuitParams::from_omega2lc(big).unwrap();
            let z = characteristic_impedance(&p).unwrap();
            if z.regime == Regime::BandEdge {
                continue;
            }
            let m = flt(&p).unwrap();
            assert!(crate::rel_diff(m.z_plus, z.z) < 1e-11, "Ω={big}");
            for fp in [m.z_plus, m.z_minus] {
                assert!(crate::rel_diff(m.apply(fp).unwrap(), fp) < 1e-11);
            }
            let (a, b) = m.multipliers();
            assert!((a * b - c(1.0, 0.0)).norm() < 1e-10);
            if z.regime == Regime::Filter {
                assert!((a.norm() - 1.0).abs() < 1e-10);
            } else {
                // out of band the physical point attracts
                assert!(a.norm() < 1.0);
            }
        }
    }

    #[test]
    fn cayley_quantity_at_large_epsilon() {
        let m = flt(&ladder().with_epsilon(1e6).unwrap()).unwrap();
        let want = 17.0 / 229f64.sqrt();
        assert!(crate::rel_diff(m.cayley(), c(want, 0.0)) < 1e-4);
    }

    #[test]
    fn fixed_point_orbit_is_constant() {
        let p = ladder();
        let z = flt(&p).unwrap().z_plus;
        let orbit = iterate(&p, z, 50).unwrap();
        assert_eq!(orbit.len(), 51);
        assert!(orbit.iter().all(|w| (w - z).norm() < 1e-10));
    }

    #[test]
    fn ideal_orbit_does_not_converge() {
        let p = ladder();
        let m = flt(&p).unwrap();
        let orbit = iterate(&p, p.z_l(), 10_000).unwrap();
        let closest = orbit[100..].iter().map(|w| (w - m.z_plus).norm()).fold(f64::INFINITY, f64::min);
        assert!(closest > 0.01 * m.z_plus.norm(), "{closest}");
    }

    #[test]
    fn damped_orbit_converges() {
        let p = ladder().with_epsilon(0.01).unwrap();
        let m = flt(&p).unwrap();
        let orbit = iterate(&p, p.z_l(), 10_000).unwrap();
        assert!((orbit[10_000] - m.z_plus).norm() < 1e-10);
        assert!(m.multiplier_at(m.z_plus).norm() < 1.0);
    }

    #[test]
    fn pole_is_reported() {
        let p = ladder();
        let m = flt(&p).unwrap();
        let pole = -m.map.d / m.map.c;
        assert_eq!(iterate(&p, pole, 3), Err(Error::PoleHit { index: 0 }));
    }

    #[test]
    fn regularized_limit_approaches_ideal() {
        let pts = regularized_limit(&ladder(), &[1e-2, 1e-3, 1e-4]).unwrap();
        let z = characteristic_impedance(&ladder()).unwrap().z;
        for w in pts.windows(2) {
            assert!(w[1].distance < w[0].distance);
        }
        for pt in &pts {
            assert!(pt.multiplier < 1.0);
            assert!(pt.distance <= 10.0 * pt.epsilon * (1.0 + z.norm()));
        }
        assert!(pts[2].distance < 1e-3);
    }

    #[test]
    fn regularized_limit_rejects_bad_lists() {
        for bad in [&[][..], &[1e-2, 0.0], &[1e-3, 1e-2], &[1e-2, 1e-2], &[-1.0]] {
            assert!(matches!(regularized_limit(&ladder(), bad), Err(Error::Param(_))), "{bad:?}");
        }
    }

    #[test]
    fn band_edges_are_double_fixed_points() {
        let (lo, hi) = filter_band_2omega();
        for edge in [lo, hi] {
            let m = flt(&CircuitParams::from_omega2lc(edge / 2.0).unwrap()).unwrap();
            assert!((m.z_plus - m.z_minus).norm() < 1e-5);
        }
    }
}
