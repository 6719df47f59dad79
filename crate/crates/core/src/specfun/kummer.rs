//! Confluent hypergeometric function F(a, b, y) = 1F1(a; b; y).

use std::f64::consts::PI;

use dashu_float::FBig;
use serde::{Deserialize, Serialize};

use super::dd::Dd;
use super::gamma::{is_nonpositive_integer, ln_gamma_signed};
use crate::error::{Error, Result};

/// Hard cap on the number of series terms.
pub const MAX_SERIES_TERMS: usize = 10_000;

/// Default lower bound on `y` for the asymptotic expansion.
pub const ASYMPTOTIC_THRESHOLD: f64 = 30.0;

/// Stagnation criterion: a term is negligible below this fraction of the
/// partial sum; two such terms in a row stop the summation.
const STAGNATION: f64 = 1e-17;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KummerParams {
    pub a: f64,
    pub b: f64,
    pub y: f64,
}

impl KummerParams {
    pub fn new(a: f64, b: f64, y: f64) -> Result<Self> {
        let p = Self { a, b, y };
        p.check()?;
        Ok(p)
    }

    fn check(&self) -> Result<()> {
        for (arg, v) in [("a", self.a), ("b", self.b), ("y", self.y)] {
            if !v.is_finite() {
                return Err(Error::Domain {
                    arg,
                    value: v,
                    reason: "must be finite",
                });
            }
        }
        if is_nonpositive_integer(self.b) {
            return Err(Error::Domain {
                arg: "b",
                value: self.b,
                reason: "b must not be a nonpositive integer",
            });
        }
        Ok(())
    }

    /// `Some(n)` when `a = -n` and the series is a polynomial of degree n.
    pub fn terminating_degree(&self) -> Option<usize> {
        if is_nonpositive_integer(self.a) {
            Some((-self.a) as usize)
        } else {
            None
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KummerSum {
    pub value: f64,
    /// Number of series terms included, counting the leading 1.
    pub terms: usize,
}

/// Sums `1 + (a/b) y + a(a+1)/(b(b+1)) y^2/2! + ...`.
///
/// The sum is accumulated in double-double arithmetic. When the terms
/// cancel by more than double-double can absorb (large negative `y`), the
/// same terms are summed again in a binary float with enough extra bits.
/// For `a = -n` exactly `n + 1` terms are summed.
pub fn kummer_series_sum(p: &KummerParams) -> Result<KummerSum> {
    p.check()?;
    if p.y == 0.0 {
        return Ok(KummerSum { value: 1.0, terms: 1 });
    }
    let (sum, abs_sum, terms) = dd_series(p)?;
    let value = sum.to_f64();
    // double-double keeps about 104 bits relative to the largest partial sums
    let lost = abs_sum / value.abs();
    if lost.is_finite() && lost < DD_CANCELLATION_LIMIT {
        return Ok(KummerSum { value, terms });
    }
    let bits = if lost.is_finite() {
        (lost.log2().ceil() as usize + 53 + GUARD_BITS).min(MAX_EXTENDED_BITS)
    } else {
        MAX_EXTENDED_BITS
    };
    Ok(KummerSum {
        value: extended_series(p, terms, bits),
        terms,
    })
}

/// Above this ratio of `sum |t_k|` to `|sum t_k|` the double-double result
/// is recomputed.
const DD_CANCELLATION_LIMIT: f64 = 1e13;
const GUARD_BITS: usize = 64;
const MAX_EXTENDED_BITS: usize = 2048;

/// Returns the sum, `sum |t_k|` as f64, and the number of terms.
fn dd_series(p: &KummerParams) -> Result<(Dd, f64, usize)> {
    let y = Dd::from(p.y);
    let a = Dd::from(p.a);
    let b = Dd::from(p.b);
    let mut term = Dd::ONE;
    let mut sum = Dd::ONE;
    let mut abs_sum = 1.0;

    if let Some(degree) = p.terminating_degree() {
        for k in 0..degree {
            let kd = Dd::from(k as f64);
            term = term * (a + kd) / ((b + kd) * Dd::from((k + 1) as f64)) * y;
            sum = sum + term;
            abs_sum += term.abs_f64();
        }
        return Ok((sum, abs_sum, degree + 1));
    }

    let mut quiet = 0;
    for k in 0..MAX_SERIES_TERMS - 1 {
        let kd = Dd::from(k as f64);
        term = term * (a + kd) / ((b + kd) * Dd::from((k + 1) as f64)) * y;
        sum = sum + term;
        abs_sum += term.abs_f64();
        // terms only shrink for good once k exceeds |y| and |a|
        let decaying = (k as f64) > p.y.abs() + p.a.abs();
        if decaying && term.abs_f64() < STAGNATION * sum.abs_f64() {
            quiet += 1;
            if quiet == 2 {
                return Ok((sum, abs_sum, k + 2));
            }
        } else {
            quiet = 0;
        }
    }
    Err(Error::NonConvergence {
        terms: MAX_SERIES_TERMS,
    })
}

/// The first `terms` terms summed at `bits` of binary precision.
fn extended_series(p: &KummerParams, terms: usize, bits: usize) -> f64 {
    let big = |x: f64| -> FBig { FBig::try_from(x).expect("finite").with_precision(bits).value() };
    let (a, b, y) = (big(p.a), big(p.b), big(p.y));
    let mut term = big(1.0);
    let mut sum = big(1.0);
    for k in 0..terms - 1 {
        let kd = big(k as f64);
        term = term * (&a + &kd) / ((&b + &kd) * big((k + 1) as f64)) * &y;
        sum = &sum + &term;
    }
    sum.to_f64().value()
}

/// F(a, b, y) by its power series.
pub fn kummer_series(p: &KummerParams) -> Result<f64> {
    kummer_series_sum(p).map(|s| s.value)
}

/// Convenience wrapper: validates and sums in one call.
pub fn kummer(a: f64, b: f64, y: f64) -> Result<f64> {
    kummer_series(&KummerParams::new(a, b, y)?)
}

/// Large-`y` asymptotic value, split into the real part and the imaginary
/// part carried by the multivalued power `(-y)^{-a}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoticValue {
    pub re: f64,
    pub im: f64,
    /// Algebraic contribution `Γ(b)/Γ(b-a) (-y)^{-a} (...)`, magnitude only.
    pub algebraic: f64,
    /// Exponential contribution `Γ(b)/Γ(a) e^y y^{a-b} (...)`.
    pub exponential: f64,
}

/// Asymptotic form of F(a, b, y) for large positive `y`:
///
/// `Γ(b)/Γ(b-a) (-y)^{-a} S1 + Γ(b)/Γ(a) e^y y^{a-b} S2`
///
/// where `S1`, `S2` are the standard inverse-power correction series, each
/// cut at its smallest term. A factor `1/Γ` at a pole is treated as zero,
/// which removes the corresponding contribution. The power `(-y)^{-a}` is
/// taken on the principal branch `y^{-a} e^{-iπa}`; its imaginary part is
/// reported separately and vanishes when `a` is an integer.
///
/// This is a diagnostic: for bound states (`a = -n`) it reproduces the
/// polynomial exactly, while for generic `a` the exponential part dominates.
pub fn kummer_asymptotic(p: &KummerParams, threshold: f64) -> Result<AsymptoticValue> {
    p.check()?;
    if !(p.y >= threshold) {
        return Err(Error::Domain {
            arg: "y",
            value: p.y,
            reason: "below the asymptotic threshold",
        });
    }
    let (a, b, y) = (p.a, p.b, p.y);
    let (lg_b, sg_b) = ln_gamma_signed(b);

    let algebraic = if is_nonpositive_integer(b - a) {
        0.0
    } else {
        let (lg, sg) = ln_gamma_signed(b - a);
        // S1 = sum (a)_k (a-b+1)_k / k! (-y)^{-k}
        let s1 = correction_series(a, a - b + 1.0, -y);
        sg_b * sg * (lg_b - lg - a * y.ln()).exp() * s1
    };

    let exponential = if is_nonpositive_integer(a) {
        0.0
    } else {
        let (lg, sg) = ln_gamma_signed(a);
        // S2 = sum (1-a)_k (b-a)_k / k! y^{-k}
        let s2 = correction_series(1.0 - a, b - a, y);
        sg_b * sg * (lg_b - lg + y + (a - b) * y.ln()).exp() * s2
    };

    let (cos, sin) = if a == a.floor() {
        let parity = if (a as i64).rem_euclid(2) == 0 { 1.0 } else { -1.0 };
        (parity, 0.0)
    } else {
        ((PI * a).cos(), -(PI * a).sin())
    };

    Ok(AsymptoticValue {
        re: algebraic * cos + exponential,
        im: algebraic * sin,
        algebraic,
        exponential,
    })
}

/// `sum_k (p)_k (q)_k / (k! z^k)`, truncated at the smallest term.
fn correction_series(p: f64, q: f64, z: f64) -> f64 {
    let mut term = 1.0f64;
    let mut sum = 1.0f64;
    let mut last = f64::INFINITY;
    for k in 0..200 {
        let kf = k as f64;
        let next = term * (p + kf) * (q + kf) / ((kf + 1.0) * z);
        if next == 0.0 {
            break;
        }
        if next.abs() >= last || next.abs() < 1e-17 * sum.abs() {
            if next.abs() < last {
                sum += next;
            }
            break;
        }
        last = next.abs();
        term = next;
        sum += term;
    }
    sum
}
