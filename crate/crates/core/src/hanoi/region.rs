use num_traits::Float;

use super::{snap, Variant};

/// Frequencies at which a Hanoi circuit is a filter, for fixed `r`.
///
/// For variant I the interval is stated in the variable `LCω²/2` and has
/// endpoints `γ ± √(γ² - 1)`; for variant II it is stated in `Ω = ω²LC`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FilterRegion {
    pub variant: Variant,
    pub r: f64,
    /// Open interval, `None` when empty.
    pub interval: Option<(f64, f64)>,
    /// `γ(r) = 1 + r(3 - 5r)/(2r - 1)²`; variant I with `r ≠ 1/2` only.
    pub gamma: Option<f64>,
}

impl FilterRegion {
    /// Whether `Ω = ω²LC` lies strictly inside the region.
    pub fn contains_omega2lc(&self, omega2lc: f64) -> bool {
        let x = match self.variant {
            Variant::I => omega2lc / 2.0,
            Variant::II => omega2lc,
        };
        self.interval.is_some_and(|(lo, hi)| lo < x && x < hi)
    }

    /// The interval converted to `Ω = ω²LC`.
    pub fn omega2lc_interval(&self) -> Option<(f64, f64)> {
        let k = match self.variant {
            Variant::I => 2.0,
            Variant::II => 1.0,
        };
        self.interval.map(|(lo, hi)| (k * lo, k * hi))
    }
}

pub fn filter_region(variant: Variant, r: f64) -> FilterRegion {
    let r = snap(r);
    let mut region = FilterRegion { variant, r, interval: None, gamma: None };
    if !(r.is_finite() && r > 0.0) {
        return region;
    }
    match variant {
        Variant::I => {
            if r == 0.5 {
                region.interval = Some((0.0, f64::INFINITY));
                return region;
            }
            let gamma = 1.0 + r * (3.0 - 5.0 * r) / ((2.0 * r - 1.0) * (2.0 * r - 1.0));
            region.gamma = Some(gamma);
            if r < 0.6 && gamma > 1.0 {
                let root = Float::sqrt(gamma * gamma - 1.0);
                let hi = gamma + root;
                // product of the endpoints is 1
                region.interval = Some((1.0 / hi, hi));
            }
        }
        Variant::II => {
            if r == 0.5 || (2.0 / 3.0..=1.0).contains(&r) {
                return region;
            }
            let (a, b, c) = polynomial_coefficients(r);
            let disc = b * b - 4.0 * a * c;
            if a < 0.0 && disc > 0.0 {
                let sq = Float::sqrt(disc);
                let q = -0.5 * (b + sq.copysign(b));
                let (x1, x2) = (q / a, c / q);
                let (lo, hi) = (x1.min(x2), x1.max(x2));
                if hi > 0.0 {
                    region.interval = Some((lo.max(0.0), hi));
                }
            }
        }
    }
    region
}

fn polynomial_coefficients(r: f64) -> (f64, f64, f64) {
    let r2 = r * r;
    let a = -24.0 * r2 * r2 + 28.0 * r2 * r - 9.0 * r2 + 2.0 * r - 1.0;
    let b = -4.0 * (r - 1.0) * (r - 1.0) * (6.0 * r2 - 3.0 * r - 1.0);
    let c = 4.0 * (1.0 - r) * (4.0 * r2 * r - 2.0 * r2 + r - 1.0);
    (a, b, c)
}

/// Quadratic in `Ω` whose positivity is the variant II filter condition
/// (for `r ∉ [2/3, 1]`).
pub fn filter_polynomial(r: f64, omega2lc: f64) -> f64 {
    let (a, b, c) = polynomial_coefficients(r);
    (a * omega2lc + b) * omega2lc + c
}

/// [`filter_polynomial`] at `Ω = 2`, which factors as `-8r(2r-1)²(5r-3)`.
pub fn filter_polynomial_reduced(r: f64) -> f64 {
    -8.0 * r * (2.0 * r - 1.0) * (2.0 * r - 1.0) * (5.0 * r - 3.0)
}
