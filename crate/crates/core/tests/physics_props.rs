use std::f64::consts::PI;

use anyon_duality::anyon::{anyon_energy, normalization_constant, AnyonState};
use anyon_duality::duality::{
    constant_equality_residual, dual_constant, dual_frequency, to_anyon_params, to_oscillator_params, DualityPair,
};
use anyon_duality::oracle::{ode_residual, quadrature_scaled};
use anyon_duality::oscillator::{osc_energy, osc_wavefunction, OscillatorState};
use anyon_duality::{Grid, Nu, PhysicalParams, QuantumState, Spin};
use num_complex::Complex64;
use proptest::prelude::*;

fn nu() -> impl Strategy<Value = Nu> {
    prop_oneof![Just(Nu::Quarter), Just(Nu::ThreeQuarters)]
}

fn spin() -> impl Strategy<Value = Spin> {
    prop_oneof![Just(Spin::Zero), Just(Spin::Half)]
}

fn anyon_params() -> impl Strategy<Value = PhysicalParams> {
    (0.2f64..5.0, 0.2f64..5.0, 0.2f64..5.0).prop_map(|(m, h, a)| PhysicalParams::anyon(m, h, a).unwrap())
}

fn oscillator_params() -> impl Strategy<Value = PhysicalParams> {
    (0.2f64..5.0, 0.2f64..5.0, 0.2f64..5.0).prop_map(|(m, h, w)| PhysicalParams::oscillator(m, h, w).unwrap())
}

fn anyon_overlap(a: &AnyonState, b: &AnyonState) -> f64 {
    quadrature_scaled(
        |x| a.wavefunction(x).unwrap() * b.wavefunction(x).unwrap(),
        0.0,
        f64::INFINITY,
        1e-13,
        1.0 / a.beta.min(b.beta),
    )
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn anyon_energy_scales(n in 0u32..=30, nu in nu(), p in anyon_params()) {
        let e = anyon_energy(n, nu, &p).unwrap();
        let alpha = p.alpha().unwrap();
        let reduced = e * p.hbar * p.hbar / (p.mass * alpha * alpha);
        let lambda = f64::from(n) + nu.value();
        prop_assert!((reduced + 0.5 / (lambda * lambda)).abs() < 1e-14);
    }

    #[test]
    fn anyon_levels_interlace(n in 0u32..=30, p in anyon_params()) {
        let q = |n, nu| anyon_energy(n, nu, &p).unwrap();
        prop_assert!(q(n, Nu::Quarter) < q(n, Nu::ThreeQuarters));
        prop_assert!(q(n, Nu::ThreeQuarters) < q(n + 1, Nu::Quarter));
        prop_assert!(q(n + 1, Nu::Quarter) < 0.0);
    }

    #[test]
    fn oscillator_levels_equally_spaced(level in 0u32..60, p in oscillator_params()) {
        let w = p.omega().unwrap();
        let gap = osc_energy(level + 1, &p).unwrap() - osc_energy(level, &p).unwrap();
        prop_assert!((gap - p.hbar * w).abs() <= 1e-13 * p.hbar * w * f64::from(level + 1));
    }

    #[test]
    fn spectral_dictionary(n in 0u32..=20, nu in nu(), p in anyon_params()) {
        let e = anyon_energy(n, nu, &p).unwrap();
        let w = dual_frequency(n, nu, &p).unwrap();
        prop_assert!(((-p.mass * w * w / 8.0 - e) / e).abs() < 1e-14);
    }

    #[test]
    fn parameter_maps_invert(energy in 0.01f64..100.0, omega in 0.01f64..100.0, p in anyon_params()) {
        let (alpha, eps) = to_anyon_params(energy, omega, &p).unwrap();
        let (e2, w2) = to_oscillator_params(alpha, eps, &p).unwrap();
        prop_assert!(((e2 - energy) / energy).abs() < 1e-14);
        prop_assert!(((w2 - omega) / omega).abs() < 1e-14);
    }

    #[test]
    fn quantization_swap(n in 0u32..=20, s in spin(), p in anyon_params()) {
        let state = QuantumState::new(n, s);
        let a = DualityPair::from_anyon(state, p).unwrap();
        let b = DualityPair::from_oscillator(state, a.oscillator).unwrap();
        prop_assert!(((b.alpha() - a.alpha()) / a.alpha()).abs() < 1e-14);
        prop_assert!(((b.epsilon - a.epsilon) / a.epsilon).abs() < 1e-14);
    }

    #[test]
    fn wavefunction_map_pointwise(n in 0u32..=5, s in spin(), p in anyon_params(), t in 0.0f64..1.0) {
        let pair = DualityPair::from_anyon(QuantumState::new(n, s), p).unwrap();
        let anyon = AnyonState::new(n, s.nu(), p).unwrap();
        // sample where the eigenfunction lives, in units of 1/beta
        let x = (0.01 + 15.0 * t) * 2.0 / anyon.beta;
        let peak = Grid::positive(0.01 / anyon.beta, 60.0 / anyon.beta, 3000)
            .unwrap()
            .points()
            .map(|x| anyon.wavefunction(x).unwrap().abs())
            .fold(0.0, f64::max);
        let diff = (pair.map(x).unwrap() - anyon.wavefunction(x).unwrap()).abs();
        prop_assert!(diff <= 1e-8 * peak);
    }

    #[test]
    fn normalization_constants_agree(n in 0u32..=20, nu in nu(), p in anyon_params()) {
        let c = normalization_constant(n, nu, &p).unwrap();
        let d = dual_constant(n, nu, &p).unwrap();
        prop_assert!(((c - d) / c).abs() < 1e-11);
        prop_assert!(constant_equality_residual(n, nu) < 1e-11);
    }

    #[test]
    fn parity_extension_phase(n in 0u32..=8, nu in nu(), y in 1e-3f64..40.0) {
        let s = AnyonState::new(n, nu, PhysicalParams::anyon_units()).unwrap();
        let plus = s.extended_wavefunction(y).unwrap();
        let minus = s.extended_wavefunction(-y).unwrap();
        if plus.norm() > 1e-200 {
            let r = minus / plus;
            prop_assert!((r - Complex64::from_polar(1.0, PI * nu.value())).norm() < 1e-12);
        }
    }

    #[test]
    fn anyon_positive_near_origin(n in 0u32..=10, nu in nu(), p in anyon_params()) {
        let s = AnyonState::new(n, nu, p).unwrap();
        prop_assert!(s.wavefunction(1e-6 / s.beta).unwrap() > 0.0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn anyon_orthonormal(n in 0u32..=6, m in 0u32..=6, nu in nu(), p in anyon_params()) {
        let a = AnyonState::new(n, nu, p).unwrap();
        let b = AnyonState::new(m, nu, p).unwrap();
        let want = if n == m { 1.0 } else { 0.0 };
        prop_assert!((anyon_overlap(&a, &b) - want).abs() < 1e-7);
    }

    #[test]
    fn oscillator_orthonormal_within_parity(k in 0u32..=4, j in 0u32..=4, s in spin(), p in oscillator_params()) {
        let (n, m) = (2 * k + s.twice(), 2 * j + s.twice());
        let scale = (p.hbar / (p.mass * p.omega().unwrap())).sqrt();
        let v = quadrature_scaled(
            |u| osc_wavefunction(n, &p, u).unwrap() * osc_wavefunction(m, &p, u).unwrap(),
            0.0,
            f64::INFINITY,
            1e-13,
            scale,
        )
        .unwrap();
        let want = if n == m { 1.0 } else { 0.0 };
        prop_assert!((v - want).abs() < 1e-8);
    }

    #[test]
    fn anyon_solves_its_equation(n in 0u32..=5, nu in nu(), p in anyon_params()) {
        let s = AnyonState::new(n, nu, p).unwrap();
        // y = beta x in [0.8, 80]
        let g = Grid::positive(0.8 / s.beta, 80.0 / s.beta, 20_001).unwrap();
        let samples = g.sample(|x| s.wavefunction(x).unwrap());
        let r = ode_residual(&samples, |x| s.potential(x).unwrap(), s.epsilon, &p).unwrap();
        prop_assert!(r <= 1e-6, "{r:e}");
        let shifted = ode_residual(&samples, |x| s.potential(x).unwrap(), 1.01 * s.epsilon, &p).unwrap();
        prop_assert!(shifted > 1e-3, "{shifted:e}");
    }

    #[test]
    fn oscillator_solves_its_equation(level in 0u32..=8, p in oscillator_params()) {
        let s = OscillatorState::new(QuantumState::from_level(level), p).unwrap();
        let len = (p.hbar / (p.mass * p.omega().unwrap())).sqrt();
        let g = Grid::new(0.1 * len, 6.0 * len, 5901).unwrap();
        let samples = g.sample(|u| s.wavefunction(u).unwrap());
        let r = ode_residual(&samples, |u| s.potential(u), s.energy, &p).unwrap();
        prop_assert!(r <= 1e-6, "{r:e}");
    }
}
