//! Fractional linear (Möbius) transformations `z ↦ (az + b) / (cz + d)`.

use crate::error::{Error, Result};
use crate::Complex;

/// Denominators smaller than this are treated as the pole.
pub const POLE_EPS: f64 = 1e-300;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mobius {
    pub a: Complex,
    pub b: Complex,
    pub c: Complex,
    pub d: Complex,
}

impl Mobius {
    pub fn new(a: Complex, b: Complex, c: Complex, d: Complex) -> Result<Self> {
        let m = Mobius { a, b, c, d };
        let scale = (a * d).norm().max((b * c).norm());
        if !(m.determinant().norm() > 1e-14 * scale) {
            return Err(Error::DegenerateMap);
        }
        Ok(m)
    }

    pub fn determinant(&self) -> Complex {
        self.a * self.d - self.b * self.c
    }

    /// `None` when `z` sits on the pole.
    pub fn apply(&self, z: Complex) -> Option<Complex> {
        let den = self.c * z + self.d;
        if den.norm() < POLE_EPS {
            return None;
        }
        Some((self.a * z + self.b) / den)
    }

    pub fn derivative(&self, z: Complex) -> Complex {
        let den = self.c * z + self.d;
        self.determinant() / (den * den)
    }

    /// Finite fixed points `(z₊, z₋)` of a map with `c ≠ 0`, using the principal
    /// square root for `z₊`.
    pub fn fixed_points(&self) -> Option<(Complex, Complex)> {
        if self.c.norm() == 0.0 {
            return None;
        }
        // c z² + (d - a) z - b = 0
        let p = self.a - self.d;
        let root = (p * p + self.b * self.c * 4.0).sqrt();
        let two_c = self.c * 2.0;
        Some(((p + root) / two_c, (p - root) / two_c))
    }

    pub fn compose(&self, inner: &Mobius) -> Mobius {
        Mobius {
            a: self.a * inner.a + self.b * inner.c,
            b: self.a * inner.b + self.b * inner.d,
            c: self.c * inner.a + self.d * inner.c,
            d: self.c * inner.b + self.d * inner.d,
        }
    }

    /// `[z₀, F(z₀), …, Fⁿ(z₀)]`.
    pub fn orbit(&self, z0: Complex, n: usize) -> Result<alloc::vec::Vec<Complex>> {
        let mut out = alloc::vec::Vec::with_capacity(n + 1);
        out.push(z0);
        let mut z = z0;
        for index in 1..=n {
            z = self.apply(z).ok_or(Error::PoleHit { index: index - 1 })?;
            if !crate::is_finite(z) {
                return Err(Error::NonFinite("orbit"));
            }
            out.push(z);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c;

    #[test]
    fn fixed_points_and_multipliers() {
        let m = Mobius::new(c(2.0, 1.0), c(1.0, 0.0), c(1.0, -1.0), c(0.5, 0.0)).unwrap();
        let (zp, zm) = m.fixed_points().unwrap();
        for z in [zp, zm] {
            assert!((m.apply(z).unwrap() - z).norm() < 1e-13 * z.norm().max(1.0));
        }
        let prod = m.derivative(zp) * m.derivative(zm);
        assert!((prod - c(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn degenerate_and_pole() {
        assert_eq!(Mobius::new(c(1.0, 0.0), c(2.0, 0.0), c(2.0, 0.0), c(4.0, 0.0)), Err(Error::DegenerateMap));
        let m = Mobius::new(c(1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0), c(-1.0, 0.0)).unwrap();
        assert_eq!(m.apply(c(1.0, 0.0)), None);
        assert_eq!(m.orbit(c(1.0, 0.0), 3), Err(Error::PoleHit { index: 0 }));
    }

    #[test]
    fn composition_matches_iteration() {
        let m = Mobius::new(c(1.0, 2.0), c(0.3, 0.0), c(0.5, 0.5), c(2.0, -1.0)).unwrap();
        let z = c(0.1, 0.2);
        let twice = m.compose(&m).apply(z).unwrap();
        let step = m.apply(m.apply(z).unwrap()).unwrap();
        assert!((twice - step).norm() < 1e-14);
    }
}
