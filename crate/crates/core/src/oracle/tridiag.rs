//! Symmetric tridiagonal eigenvalues by Sturm-sequence bisection, and the
//! finite-difference oscillator built on it.

use crate::error::{invalid, Error, Result};
use crate::model::PhysicalParams;

/// Symmetric tridiagonal matrix: `diag[0..n]`, `off[0..n-1]`.
#[derive(Debug, Clone)]
pub struct SymTridiagonal {
    diag: Vec<f64>,
    off: Vec<f64>,
}

impl SymTridiagonal {
    pub fn new(diag: Vec<f64>, off: Vec<f64>) -> Result<Self> {
        if diag.is_empty() || off.len() + 1 != diag.len() {
            return Err(Error::Solver(format!(
                "tridiagonal shape mismatch: {} diagonal, {} off-diagonal",
                diag.len(),
                off.len()
            )));
        }
        Ok(Self { diag, off })
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    /// Number of eigenvalues strictly below `x` (negative LDL^T pivots).
    pub fn sturm_count(&self, x: f64) -> usize {
        let mut count = 0;
        let mut q = self.diag[0] - x;
        if q < 0.0 {
            count += 1;
        }
        for (d, e) in self.diag[1..].iter().zip(&self.off) {
            let pivot = if q == 0.0 {
                f64::EPSILON * e.abs().max(f64::MIN_POSITIVE)
            } else {
                q
            };
            q = (d - x) - e * e / pivot;
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// Gershgorin interval containing the whole spectrum.
    pub fn gershgorin(&self) -> (f64, f64) {
        let n = self.dim();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let left = if i > 0 { self.off[i - 1].abs() } else { 0.0 };
            let right = if i + 1 < n { self.off[i].abs() } else { 0.0 };
            lo = lo.min(self.diag[i] - left - right);
            hi = hi.max(self.diag[i] + left + right);
        }
        (lo, hi)
    }

    /// The `k`-th smallest eigenvalue (0-based).
    pub fn eigenvalue(&self, k: usize) -> Result<f64> {
        if k >= self.dim() {
            return Err(Error::Solver(format!(
                "eigenvalue index {k} exceeds dimension {}",
                self.dim()
            )));
        }
        let (mut lo, mut hi) = self.gershgorin();
        let pad = 1e-12 * (hi - lo).abs().max(1.0);
        lo -= pad;
        hi += pad;
        if self.sturm_count(lo) > k || self.sturm_count(hi) <= k {
            return Err(Error::Solver("Sturm bracket failure".into()));
        }
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if self.sturm_count(mid) > k {
                hi = mid;
            } else {
                lo = mid;
            }
            if hi - lo <= 4.0 * f64::EPSILON * lo.abs().max(hi.abs()) {
                break;
            }
        }
        Ok(0.5 * (lo + hi))
    }

    /// The `k` smallest eigenvalues in ascending order.
    pub fn lowest(&self, k: usize) -> Result<Vec<f64>> {
        (0..k).map(|j| self.eigenvalue(j)).collect()
    }
}

/// Smallest allowed point count for the finite-difference oscillator.
pub const FD_MIN_POINTS: usize = 100;
/// Largest number of levels requested from the finite-difference oscillator.
pub const FD_MAX_LEVELS: usize = 20;

/// Lowest `k` eigenvalues of the three-point discretization of the full-line
/// oscillator on `[-half_width, half_width]` with `points` nodes (ends
/// included, Dirichlet).
pub fn fd_oscillator_spectrum(p: &PhysicalParams, half_width: f64, points: usize, k: usize) -> Result<Vec<f64>> {
    p.validate()?;
    let omega = p.omega()?;
    if !(half_width > 0.0) || !half_width.is_finite() {
        return Err(invalid("half_width", format!("must be positive, got {half_width}")));
    }
    if points < FD_MIN_POINTS {
        return Err(invalid(
            "points",
            format!("need at least {FD_MIN_POINTS}, got {points}"),
        ));
    }
    if k > FD_MAX_LEVELS {
        return Err(invalid("k", format!("at most {FD_MAX_LEVELS} levels, got {k}")));
    }
    // heuristic resolution guard: several grid points per node
    if 10 * (k + 1) > points - 2 {
        return Err(invalid("points", format!("{points} points cannot resolve {k} levels")));
    }
    let h = 2.0 * half_width / (points - 1) as f64;
    let kinetic = p.hbar * p.hbar / (2.0 * p.mass * h * h);
    let diag = (1..points - 1)
        .map(|i| {
            let u = -half_width + i as f64 * h;
            2.0 * kinetic + 0.5 * p.mass * omega * omega * u * u
        })
        .collect();
    let off = vec![-kinetic; points - 3];
    SymTridiagonal::new(diag, off)?.lowest(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sturm_count_small_matrix() {
        // tridiag(-1, 2, -1) of size 3 has eigenvalues 2 - sqrt2, 2, 2 + sqrt2
        let m = SymTridiagonal::new(vec![2.0; 3], vec![-1.0; 2]).unwrap();
        assert_eq!(m.sturm_count(0.0), 0);
        assert_eq!(m.sturm_count(1.0), 1);
        assert_eq!(m.sturm_count(2.5), 2);
        assert_eq!(m.sturm_count(10.0), 3);
        let ev = m.lowest(3).unwrap();
        let want = [2.0 - 2f64.sqrt(), 2.0, 2.0 + 2f64.sqrt()];
        for (a, b) in ev.iter().zip(want) {
            assert!((a - b).abs() < 1e-14);
        }
    }

    #[test]
    fn laplacian_spectrum() {
        // tridiag(-1, 2, -1), size n: 2 - 2 cos(j pi / (n+1))
        let n = 50;
        let m = SymTridiagonal::new(vec![2.0; n], vec![-1.0; n - 1]).unwrap();
        for j in 0..n {
            let want = 2.0 - 2.0 * ((j + 1) as f64 * std::f64::consts::PI / (n + 1) as f64).cos();
            assert!((m.eigenvalue(j).unwrap() - want).abs() < 1e-13);
        }
        assert!(m.eigenvalue(n).is_err());
    }

    #[test]
    fn shape_errors() {
        assert!(SymTridiagonal::new(vec![], vec![]).is_err());
        assert!(SymTridiagonal::new(vec![1.0, 2.0], vec![]).is_err());
    }

    #[test]
    fn oscillator_ground_state() {
        let p = PhysicalParams::oscillator_units();
        let ev = fd_oscillator_spectrum(&p, 10.0, 2001, 1).unwrap();
        assert!((ev[0] - 0.5).abs() < 1e-4);
    }

    #[test]
    fn oscillator_argument_errors() {
        let p = PhysicalParams::oscillator_units();
        assert!(fd_oscillator_spectrum(&p, 10.0, 99, 1).is_err());
        assert!(fd_oscillator_spectrum(&p, 10.0, 2001, 21).is_err());
        assert!(fd_oscillator_spectrum(&p, 10.0, 150, 20).is_err());
        assert!(fd_oscillator_spectrum(&p, -1.0, 2001, 1).is_err());
        assert!(fd_oscillator_spectrum(&PhysicalParams::anyon_units(), 10.0, 2001, 1).is_err());
    }
}
