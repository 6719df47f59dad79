use anyon_duality::anyon::anyon_energy;
use anyon_duality::oracle::{
    fd_oscillator_spectrum, quadrature, quadrature_scaled, shoot_anyon_energy, solve_level, ShootingConfig,
    SymTridiagonal,
};
use anyon_duality::specfun::{laguerre, log_gamma};
use anyon_duality::{Nu, PhysicalParams};
use proptest::prelude::*;

fn nu() -> impl Strategy<Value = Nu> {
    prop_oneof![Just(Nu::Quarter), Just(Nu::ThreeQuarters)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gamma_moments(k in 0.0f64..12.0) {
        // int_0^inf x^k e^-x dx = Γ(k+1)
        let v = quadrature_scaled(|x| x.powf(k) * (-x).exp(), 0.0, f64::INFINITY, 1e-13, 1.0 + k).unwrap();
        let want = log_gamma(k + 1.0).unwrap().exp();
        prop_assert!(((v - want) / want).abs() < 1e-10);
    }

    #[test]
    fn polynomial_exactness(c in prop::collection::vec(-3.0f64..3.0, 8), a in -2.0f64..0.0, b in 0.1f64..3.0) {
        let f = |x: f64| c.iter().rev().fold(0.0, |acc, &ci| acc * x + ci);
        let anti = |x: f64| c.iter().enumerate().map(|(i, &ci)| ci * x.powi(i as i32 + 1) / (i as f64 + 1.0)).sum::<f64>();
        let v = quadrature(f, a, b, 1e-13).unwrap();
        let want = anti(b) - anti(a);
        prop_assert!((v - want).abs() < 1e-11 * want.abs().max(1.0));
    }

    #[test]
    fn sturm_count_brackets_eigenvalues(d in prop::collection::vec(-5.0f64..5.0, 12), e in prop::collection::vec(0.1f64..2.0, 11)) {
        let m = SymTridiagonal::new(d, e).unwrap();
        let ev = m.lowest(12).unwrap();
        for w in ev.windows(2) {
            prop_assert!(w[0] <= w[1]);
        }
        for (k, &l) in ev.iter().enumerate() {
            prop_assert_eq!(m.sturm_count(l - 1e-9), k);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn laguerre_norm_integral(n in 0u32..=8, nu in nu()) {
        let a = 2.0 * nu.value() - 1.0;
        let v = quadrature_scaled(
            |y| {
                let l = laguerre(n, a, y).unwrap();
                (-y).exp() * y.powf(2.0 * nu.value()) * l * l
            },
            0.0,
            f64::INFINITY,
            1e-12,
            4.0,
        )
        .unwrap();
        let nf = f64::from(n);
        let want = 2.0 * (nf + nu.value()) * (log_gamma(nf + 2.0 * nu.value()).unwrap() - log_gamma(nf + 1.0).unwrap()).exp();
        prop_assert!(((v - want) / want).abs() < 1e-8);
    }

    #[test]
    fn shooting_matches_closed_form(n in 0u32..=3, nu in nu(), m in 0.5f64..2.0, h in 0.5f64..2.0, alpha in 0.5f64..2.0) {
        let p = PhysicalParams::anyon(m, h, alpha).unwrap();
        let e = solve_level(nu, n, &p).unwrap();
        let want = anyon_energy(n, nu, &p).unwrap();
        prop_assert!(((e.energy - want) / want).abs() < 1e-5);
        prop_assert_eq!(e.nodes, n);
    }

    #[test]
    fn fd_spacing(omega in 0.5f64..2.0) {
        let p = PhysicalParams::oscillator(1.0, 1.0, omega).unwrap();
        let half = 10.0 / omega.sqrt();
        let ev = fd_oscillator_spectrum(&p, half, 2001, 5).unwrap();
        for (k, l) in ev.iter().enumerate() {
            prop_assert!((l - omega * (k as f64 + 0.5)).abs() < 1e-3 * omega);
        }
    }
}

#[test]
fn shooting_insensitive_to_start_point() {
    let p = PhysicalParams::anyon_units();
    for nu in [Nu::Quarter, Nu::ThreeQuarters] {
        for n in 0..=3 {
            let base = ShootingConfig::new(nu, &p).unwrap();
            let (lo, hi) = anyon_duality::oracle::isolate_level(&base, &p, n).unwrap();
            let a = shoot_anyon_energy(&base.with_bracket(lo, hi), &p, n).unwrap().energy;
            let half = ShootingConfig {
                x_start: base.x_start / 2.0,
                ..base
            }
            .with_bracket(lo, hi);
            let b = shoot_anyon_energy(&half, &p, n).unwrap().energy;
            assert!(((a - b) / a).abs() < 1e-7, "nu={nu} n={n}: {a} vs {b}");
        }
    }
}

#[test]
fn shooting_is_deterministic() {
    let p = PhysicalParams::anyon_units();
    let a = solve_level(Nu::ThreeQuarters, 2, &p).unwrap();
    let b = solve_level(Nu::ThreeQuarters, 2, &p).unwrap();
    assert_eq!(a.energy.to_bits(), b.energy.to_bits());
    assert_eq!(a, b);
}

#[test]
fn fd_converges_at_second_order() {
    let p = PhysicalParams::oscillator_units();
    let errs: Vec<f64> = [501, 1001, 2001, 4001]
        .iter()
        .map(|&pts| fd_oscillator_spectrum(&p, 10.0, pts, 1).unwrap()[0] - 0.5)
        .collect();
    for w in errs.windows(2) {
        let order = (w[0] / w[1]).log2();
        assert!((order - 2.0).abs() < 0.05, "order {order}");
    }
}
