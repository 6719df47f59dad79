use crate::error::{Error, Result};
use crate::model::{PhysicalParams, WaveSample};

/// Fewest samples for which an interior fourth-order stencil exists.
pub const MIN_SAMPLES: usize = 7;

/// Relative residual of `Φ'' + (2mu/hbar^2)(eps - V) Φ = 0` on uniformly
/// spaced samples:
///
/// `max_i |Φ''_i + k (eps - V_i) Φ_i| / max_i |k (eps - V_i) Φ_i|`
///
/// with `Φ''` from the fourth-order central stencil. Two points at each end
/// are excluded.
pub fn ode_residual<V: Fn(f64) -> f64>(
    samples: &[WaveSample],
    potential: V,
    energy: f64,
    p: &PhysicalParams,
) -> Result<f64> {
    p.validate()?;
    if samples.len() < MIN_SAMPLES {
        return Err(Error::Grid(format!(
            "need at least {MIN_SAMPLES} samples, got {}",
            samples.len()
        )));
    }
    let h = (samples[samples.len() - 1].x - samples[0].x) / (samples.len() - 1) as f64;
    if !(h > 0.0) {
        return Err(Error::Grid("samples must be in increasing order".into()));
    }
    for w in samples.windows(2) {
        if ((w[1].x - w[0].x) - h).abs() > 1e-6 * h {
            return Err(Error::Grid("non-uniform grid".into()));
        }
    }
    if samples.iter().all(|s| s.value == 0.0) {
        return Err(Error::TrivialFunction);
    }

    let k = 2.0 * p.mass / (p.hbar * p.hbar);
    let inv = 1.0 / (12.0 * h * h);
    let mut worst: f64 = 0.0;
    let mut scale: f64 = 0.0;
    for i in 2..samples.len() - 2 {
        let f = |j: usize| samples[j].value;
        let second = (-f(i - 2) + 16.0 * f(i - 1) - 30.0 * f(i) + 16.0 * f(i + 1) - f(i + 2)) * inv;
        let source = k * (energy - potential(samples[i].x)) * f(i);
        worst = worst.max((second + source).abs());
        scale = scale.max(source.abs());
    }
    if scale == 0.0 || !scale.is_finite() {
        return Err(Error::TrivialFunction);
    }
    Ok(worst / scale)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Grid;

    #[test]
    fn free_wave_satisfies_equation() {
        // Φ = sin(x), V = 0, eps = 1/2 with mu = hbar = 1
        let p = PhysicalParams::anyon_units();
        let g = Grid::new(0.0, 6.0, 601).unwrap();
        let s = g.sample(f64::sin);
        let r = ode_residual(&s, |_| 0.0, 0.5, &p).unwrap();
        assert!(r < 1e-9, "{r:e}");
        let r = ode_residual(&s, |_| 0.0, 0.505, &p).unwrap();
        assert!(r > 5e-3);
    }

    #[test]
    fn rejects_bad_input() {
        let p = PhysicalParams::anyon_units();
        let zeros = Grid::new(0.1, 1.0, 10).unwrap().sample(|_| 0.0);
        assert_eq!(ode_residual(&zeros, |_| 0.0, 1.0, &p), Err(Error::TrivialFunction));
        let few = Grid::new(0.1, 1.0, 6).unwrap().sample(f64::sin);
        assert!(ode_residual(&few, |_| 0.0, 1.0, &p).is_err());
        let mut uneven = Grid::new(0.1, 1.0, 10).unwrap().sample(f64::sin);
        uneven[4].x += 0.01;
        assert_eq!(
            ode_residual(&uneven, |_| 0.0, 1.0, &p),
            Err(Error::Grid("non-uniform grid".into()))
        );
    }
}
