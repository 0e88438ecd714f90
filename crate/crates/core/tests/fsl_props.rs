use fractal_ac::complexnet::{solve_dirichlet, PowerBalance};
use fractal_ac::fsl::{
    self, characteristic_impedance, filter_band_2omega, flt, harmonic_matrices, self_consistency_residual,
    CircuitParams, Regime,
};
use fractal_ac::{rel_diff, Address, Complex};
use proptest::prelude::*;

fn in_band_omega2lc() -> impl Strategy<Value = f64> {
    let (lo, hi) = filter_band_2omega();
    (0.001f64..0.999).prop_map(move |t| (lo + t * (hi - lo)) / 2.0)
}

fn voltage() -> impl Strategy<Value = Complex> {
    (-2.0f64..2.0, -2.0f64..2.0).prop_map(|(re, im)| Complex::new(re, im))
}

fn address(max_len: usize) -> impl Strategy<Value = Address> {
    proptest::collection::vec(0u8..3, 0..=max_len).prop_map(|w| Address::from_symbols(&w).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn residual_vanishes_in_band(big in in_band_omega2lc(), omega in 0.2f64..5.0, cap in 0.1f64..10.0) {
        let p = CircuitParams::new(omega, big / (omega * omega * cap), cap).unwrap();
        let z = characteristic_impedance(&p).unwrap();
        prop_assert_eq!(z.regime, Regime::Filter);
        prop_assert!(z.z.re > 0.0);
        prop_assert!(self_consistency_residual(z.z, p.z_c(), p.z_l()) <= 1e-11);
    }

    #[test]
    fn out_of_band_is_reactive(big in prop_oneof![0.01f64..0.55, 35.5f64..500.0]) {
        let p = CircuitParams::from_omega2lc(big).unwrap();
        let z = characteristic_impedance(&p).unwrap();
        prop_assert!(z.regime == Regime::BelowBand || z.regime == Regime::AboveBand);
        prop_assert!(z.z.re.abs() <= 1e-12 * z.z.norm());
        let m = flt(&p).unwrap();
        prop_assert!(rel_diff(m.z_plus, z.z) <= 1e-11);
    }

    #[test]
    fn physical_fixed_point_is_neutral(big in in_band_omega2lc()) {
        let m = flt(&CircuitParams::from_omega2lc(big).unwrap()).unwrap();
        prop_assert!(rel_diff(m.apply(m.z_plus).unwrap(), m.z_plus) <= 1e-11);
        let (a, b) = m.multipliers();
        prop_assert!((a.norm() - 1.0).abs() <= 1e-10);
        prop_assert!((a * b - Complex::new(1.0, 0.0)).norm() <= 1e-10);
    }

    #[test]
    fn damping_makes_fixed_point_attract(big in 0.05f64..50.0, eps in 1e-4f64..10.0) {
        let p = CircuitParams::from_omega2lc(big).unwrap().with_epsilon(eps).unwrap();
        let m = flt(&p).unwrap();
        prop_assert!(m.multiplier_at(m.z_plus).norm() < 1.0);
        prop_assert!(m.z_plus.re > 0.0);
    }

    #[test]
    fn homogeneity(big in in_band_omega2lc(), lambda in 0.01f64..100.0) {
        let p = CircuitParams::new(1.0, big, 1.0).unwrap();
        // Z_L and Z_C both scale by λ
        let q = CircuitParams::new(1.0, big * lambda, 1.0 / lambda).unwrap();
        let (zp, zq) = (characteristic_impedance(&p).unwrap().z, characteristic_impedance(&q).unwrap().z);
        prop_assert!(rel_diff(zq, zp * lambda) <= 1e-12);
        let (mp, mq) = (harmonic_matrices(&p).unwrap(), harmonic_matrices(&q).unwrap());
        prop_assert!(mp.m.max_abs_diff(&mq.m) <= 1e-12);
    }

    #[test]
    fn interpolation_is_affine_invariant(big in in_band_omega2lc(), addr in address(4), shift in voltage()) {
        // constants are harmonic, so adding a constant to v shifts every value by it
        let interp = harmonic_matrices(&CircuitParams::from_omega2lc(big).unwrap()).unwrap();
        let v = [Complex::new(1.0, 0.0), Complex::new(0.0, 0.5), Complex::new(-0.3, 0.2)];
        let a = interp.evaluate(v, &addr).values;
        let b = interp.evaluate(v.map(|x| x + shift), &addr).values;
        for k in 0..3 {
            prop_assert!((b[k] - a[k] - shift).norm() <= 1e-12 * (1.0 + interp.evaluate(v, &addr).kappa));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn harmonic_oracle(big in in_band_omega2lc(), seeds in proptest::collection::vec([voltage(), voltage(), voltage()], 20)) {
        let p = CircuitParams::from_omega2lc(big).unwrap();
        let interp = harmonic_matrices(&p).unwrap();
        let g = fsl::reduced_graph(&p, 2).unwrap();
        for v in seeds {
            let sol = solve_dirichlet(&g, &v).unwrap();
            let scale = v.iter().map(|z| z.norm()).fold(f64::MIN_POSITIVE, f64::max);
            for len in 1..=2 {
                for addr in Address::all_of_length(len) {
                    let want = interp.evaluate(v, &addr).values;
                    let names = fsl::cell_corner_names(&addr);
                    for k in 0..3 {
                        let got = sol.potential_of(&g, &names[k]).unwrap();
                        prop_assert!((got - want[k]).norm() <= 1e-9 * scale, "{addr} {k}");
                    }
                }
            }
            // the base cells carry Re Z > 0, so power flows in and is dissipated there
            let pb = PowerBalance::compute(&g, &sol).unwrap();
            prop_assert!(pb.defect() <= 1e-10, "{pb:?}");
            prop_assert!(pb.dissipated >= 0.0);
        }
    }
}

#[test]
fn interpolation_matrices_are_row_stochastic() {
    let interp = harmonic_matrices(&CircuitParams::new(1.0, 2.0, 1.0).unwrap()).unwrap();
    assert!(interp.m.stochastic_defect() <= 1e-12);
    for s in interp.sub {
        assert!(s.stochastic_defect() <= 1e-12);
    }
}

#[test]
fn outside_band_has_no_interpolation() {
    let p = CircuitParams::from_omega2lc(0.2).unwrap();
    assert!(matches!(harmonic_matrices(&p), Err(fractal_ac::Error::Regime(_))));
}

#[test]
fn limits_in_frequency() {
    let low = characteristic_impedance(&CircuitParams::from_omega2lc(1e-8).unwrap()).unwrap();
    assert!(low.z.norm() <= 1e-3);
    let p = CircuitParams::from_omega2lc(1e8).unwrap();
    let high = characteristic_impedance(&p).unwrap();
    assert!(rel_diff(high.z, p.z_l() * 0.4) <= 1e-3);
}
