use super::kummer::kummer;
use crate::error::{Error, Result};
use crate::model::Spin;

/// Associated Laguerre polynomial `L_n^{(a)}(y)` in the modern convention,
/// `L_n^{(a)}(0) = binom(n + a, n)`, by the three-term recurrence.
pub fn laguerre(n: u32, a: f64, y: f64) -> Result<f64> {
    if !(a > -1.0) {
        return Err(Error::Domain {
            arg: "a",
            value: a,
            reason: "Laguerre exponent must exceed -1",
        });
    }
    let mut prev = 1.0;
    if n == 0 {
        return Ok(prev);
    }
    let mut cur = 1.0 + a - y;
    for k in 1..n {
        let k = f64::from(k);
        let next = ((2.0 * k + 1.0 + a - y) * cur - (k + a) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Physicists' Hermite polynomial `H_n(z)` by recurrence.
pub fn hermite(n: u32, z: f64) -> f64 {
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = 2.0 * z;
    for k in 1..n {
        let next = 2.0 * z * cur - 2.0 * f64::from(k) * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Both sides of
/// `H_{2n+2s}(sqrt y) = (-1)^n (2n+2s)!/n! (2 sqrt y)^{2s} F(-n, 2s + 1/2, y)`.
pub fn hermite_kummer_sides(n: u32, spin: Spin, y: f64) -> Result<(f64, f64)> {
    if !(y > 0.0) || !y.is_finite() {
        return Err(Error::Domain {
            arg: "y",
            value: y,
            reason: "must be positive",
        });
    }
    let level = 2 * n + spin.twice();
    let root = y.sqrt();
    let lhs = hermite(level, root);

    // (2n+2s)! / n! = (n+1)(n+2)...(2n+2s)
    let ratio: f64 = (n + 1..=level).map(f64::from).product();
    let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    let prefactor = match spin {
        Spin::Zero => 1.0,
        Spin::Half => 2.0 * root,
    };
    let rhs = sign * ratio * prefactor * kummer(-f64::from(n), 2.0 * spin.value() + 0.5, y)?;
    Ok((lhs, rhs))
}

/// Sum of the absolute values of the monomial terms of `H_n(z)`, which is
/// `i^{-n} H_n(i z)` and obeys the recurrence with the sign of the second
/// term flipped.
pub fn hermite_abs_sum(n: u32, z: f64) -> f64 {
    let z = z.abs();
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = 2.0 * z;
    for k in 1..n {
        let next = 2.0 * z * cur + 2.0 * f64::from(k) * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Difference between the two sides of the Hermite–Kummer identity,
/// relative to the absolute term sum of the Hermite polynomial. Plain
/// relative error is meaningless at the zeros of `H`.
pub fn hermite_kummer_residual(n: u32, spin: Spin, y: f64) -> Result<f64> {
    let (lhs, rhs) = hermite_kummer_sides(n, spin, y)?;
    let scale = hermite_abs_sum(2 * n + spin.twice(), y.sqrt());
    Ok((lhs - rhs).abs() / scale)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::gamma::ln_gamma_pos;

    #[test]
    fn laguerre_examples() {
        assert_eq!(laguerre(0, -0.5, 3.3).unwrap(), 1.0);
        assert_eq!(laguerre(1, -0.5, 2.0).unwrap(), -1.5);
        // L_2^a(y) = (y^2 - 2(a+2)y + (a+1)(a+2)) / 2
        let (a, y) = (0.5, 1.7);
        let want = (y * y - 2.0 * (a + 2.0) * y + (a + 1.0) * (a + 2.0)) / 2.0;
        assert!((laguerre(2, a, y).unwrap() - want).abs() < 1e-15);
        assert!(laguerre(2, -1.0, 1.0).is_err());
    }

    #[test]
    fn laguerre_matches_kummer() {
        // F(-n, 2nu, y) = L_n^{2nu-1}(y) n! Γ(2nu) / Γ(n + 2nu)
        for nu in [0.25, 0.75] {
            for n in 0..=10u32 {
                for &y in &[0.1, 1.0, 3.5, 9.0, 17.0] {
                    let lag = laguerre(n, 2.0 * nu - 1.0, y).unwrap();
                    let nf = f64::from(n);
                    let factor = (ln_gamma_pos(nf + 1.0) + ln_gamma_pos(2.0 * nu) - ln_gamma_pos(nf + 2.0 * nu)).exp();
                    let f = kummer(-nf, 2.0 * nu, y).unwrap();
                    let scale = f.abs().max(1.0);
                    assert!((f - lag * factor).abs() <= 1e-12 * scale, "n={n} nu={nu} y={y}");
                }
            }
        }
    }

    #[test]
    fn hermite_examples() {
        assert_eq!(hermite(0, 0.7), 1.0);
        assert_eq!(hermite(1, 0.7), 1.4);
        assert_eq!(hermite(2, 1.5), 7.0);
        assert_eq!(hermite(3, 2.0), 40.0);
    }

    #[test]
    fn hermite_abs_sum_matches_terms() {
        // H_4(z) = 16z^4 - 48z^2 + 12
        let z: f64 = 0.7;
        let want = 16.0 * z.powi(4) + 48.0 * z * z + 12.0;
        assert!((hermite_abs_sum(4, z) - want).abs() < 1e-13);
        assert!((hermite_abs_sum(4, -z) - want).abs() < 1e-13);
    }

    #[test]
    fn hermite_kummer_at_a_zero_of_h() {
        // H_2(sqrt(1/2)) = 0
        assert!(hermite(2, 0.5f64.sqrt()).abs() < 1e-15);
        assert!(hermite_kummer_residual(1, Spin::Zero, 0.5).unwrap() < 1e-15);
    }

    #[test]
    fn hermite_kummer_examples() {
        assert_eq!(hermite_kummer_residual(0, Spin::Zero, 2.2).unwrap(), 0.0);
        assert!(hermite_kummer_residual(1, Spin::Zero, 1.0).unwrap() < 1e-14);
        let (lhs, rhs) = hermite_kummer_sides(1, Spin::Half, 4.0).unwrap();
        assert_eq!(lhs, 40.0);
        assert!((rhs - 40.0).abs() < 1e-13);
        assert!(hermite_kummer_residual(1, Spin::Half, 0.0).is_err());
    }
}
