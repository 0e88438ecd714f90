use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::Complex;

/// Discriminants below this fraction of their terms are treated as zero.
pub(crate) const DOUBLE_ROOT_TOL: f64 = 1e-12;

/// Roots of `a2 z² + a1 z + a0` without cancellation between `a1` and the
/// square root. A vanishing `a2` (exact zero) gives the single linear root.
pub(crate) fn solve_quadratic(a2: Complex, a1: Complex, a0: Complex) -> Result<Vec<Complex>> {
    if a2 == Complex::new(0.0, 0.0) {
        if a1.norm() == 0.0 {
            return Err(Error::DegenerateCase("quadratic has no z-dependence".into()));
        }
        return Ok(vec![-a0 / a1]);
    }
    let (sq, prod) = (a1 * a1, a2 * a0 * 4.0);
    let disc = sq - prod;
    if disc.norm() <= DOUBLE_ROOT_TOL * sq.norm().max(prod.norm()) {
        // a rounded double root would otherwise split by √(roundoff)
        let root = -a1 / (a2 * 2.0);
        return Ok(vec![root, root]);
    }
    let mut s = disc.sqrt();
    if (a1.conj() * s).re < 0.0 {
        s = -s;
    }
    let q = -(a1 + s) / 2.0;
    if q.norm() == 0.0 {
        // a1 = 0 and a0 = 0
        return Ok(vec![q, q]);
    }
    Ok(vec![q / a2, a0 / q])
}

/// First-order absolute error of a computed root `z` per unit relative
/// perturbation of the coefficients; infinite at a double root.
pub(crate) fn root_sensitivity((a2, a1, a0): (Complex, Complex, Complex), z: Complex) -> f64 {
    let size = a2.norm() * z.norm_sqr() + a1.norm() * z.norm() + a0.norm();
    let slope = (a2 * z * 2.0 + a1).norm();
    if slope == 0.0 {
        f64::INFINITY
    } else {
        size / slope
    }
}
