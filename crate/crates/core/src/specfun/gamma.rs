use std::f64::consts::PI;

use crate::error::{Error, Result};

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// ln(2 pi) / 2
const HALF_LN_2PI: f64 = 0.918_938_533_204_672_7;

/// zeta(k) - 1 for k = 2, 3, ..., 41.
const ZETA_MINUS_ONE: [f64; 40] = [
    0.644_934_066_848_226_4,
    0.202_056_903_159_594_3,
    0.082_323_233_711_138_19,
    0.036_927_755_143_369_93,
    0.017_343_061_984_449_14,
    0.008_349_277_381_922_827,
    0.004_077_356_197_944_339,
    0.002_008_392_826_082_214,
    0.000_994_575_127_818_085_3,
    0.000_494_188_604_119_464_6,
    0.000_246_086_553_308_048_3,
    0.000_122_713_347_578_489_1,
    6.124_813_505_870_483e-5,
    3.058_823_630_702_049e-5,
    1.528_225_940_865_187e-5,
    7.637_197_637_899_762e-6,
    3.817_293_264_999_840e-6,
    1.908_212_716_553_939e-6,
    9.539_620_338_727_961e-7,
    4.769_329_867_878_065e-7,
    2.384_505_027_277_330e-7,
    1.192_199_259_653_111e-7,
    5.960_818_905_125_948e-8,
    2.980_350_351_465_228e-8,
    1.490_155_482_836_504e-8,
    7.450_711_789_835_429e-9,
    3.725_334_024_788_457e-9,
    1.862_659_723_513_049e-9,
    9.313_274_324_196_682e-10,
    4.656_629_065_033_784e-10,
    2.328_311_833_676_505e-10,
    1.164_155_017_270_052e-10,
    5.820_772_087_902_701e-11,
    2.910_385_044_497_100e-11,
    1.455_192_189_104_198e-11,
    7.275_959_835_057_481e-12,
    3.637_979_547_378_651e-12,
    1.818_989_650_307_066e-12,
    9.094_947_840_263_889e-13,
    4.547_473_783_042_154e-13,
];

/// B_{2k} / (2k (2k-1)) for k = 1..8.
const STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
];

/// Below this argument the Stirling series is reached by upward recurrence.
const STIRLING_MIN: f64 = 10.0;

/// Natural logarithm of the gamma function for `z > 0`.
///
/// Relative accuracy is kept near the zeros of ln Γ at 1 and 2 by a power
/// series in `zeta(k) - 1`; larger arguments use Stirling's series.
pub fn log_gamma(z: f64) -> Result<f64> {
    if !(z > 0.0) || !z.is_finite() {
        return Err(Error::Domain {
            arg: "z",
            value: z,
            reason: "log_gamma requires a positive finite argument",
        });
    }
    Ok(ln_gamma_pos(z))
}

pub(crate) fn ln_gamma_pos(z: f64) -> f64 {
    if z < 0.5 {
        ln_gamma_1p(z) - z.ln()
    } else if z <= 1.5 {
        ln_gamma_1p(z - 1.0)
    } else if z <= 2.5 {
        let x = z - 2.0;
        x.ln_1p() + ln_gamma_1p(x)
    } else if z < STIRLING_MIN {
        let mut shifted = z;
        let mut prod = 1.0;
        while shifted < STIRLING_MIN {
            prod *= shifted;
            shifted += 1.0;
        }
        stirling(shifted) - prod.ln()
    } else {
        stirling(z)
    }
}

/// ln Γ(1 + x) for |x| <= 1/2.
fn ln_gamma_1p(x: f64) -> f64 {
    let mut sum = 0.0;
    let mut power = -x;
    for (i, zm1) in ZETA_MINUS_ONE.iter().enumerate() {
        let k = (i + 2) as f64;
        power *= -x;
        let term = zm1 * power / k;
        sum += term;
        if term.abs() < 1e-18 * sum.abs().max(f64::MIN_POSITIVE) {
            break;
        }
    }
    // -ln(1+x) + x(1-gamma) regrouped to avoid cancellation near zero
    (x - x.ln_1p()) - EULER_GAMMA * x + sum
}

fn stirling(z: f64) -> f64 {
    let inv = 1.0 / z;
    let inv2 = inv * inv;
    let mut corr = 0.0;
    let mut p = inv;
    for c in STIRLING {
        corr += c * p;
        p *= inv2;
    }
    (z - 0.5) * z.ln() - z + HALF_LN_2PI + corr
}

/// `true` when `x` is 0, -1, -2, ...
pub(crate) fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.floor()
}

/// `(ln|Γ(x)|, sign Γ(x))` for any real `x` that is not a pole.
pub(crate) fn ln_gamma_signed(x: f64) -> (f64, f64) {
    debug_assert!(!is_nonpositive_integer(x));
    if x > 0.0 {
        (ln_gamma_pos(x), 1.0)
    } else {
        // reflection: Γ(x) Γ(1-x) = π / sin(πx)
        let s = (PI * x).sin();
        (PI.ln() - s.abs().ln() - ln_gamma_pos(1.0 - x), s.signum())
    }
}

/// 1/Γ(x), exactly zero at the poles.
pub fn recip_gamma(x: f64) -> f64 {
    if is_nonpositive_integer(x) {
        return 0.0;
    }
    let (l, s) = ln_gamma_signed(x);
    s * (-l).exp()
}

/// Absolute defect of the Legendre duplication formula in log form:
/// `|ln Γ(2z) - [(2z-1) ln 2 - ln(π)/2 + ln Γ(z) + ln Γ(z+1/2)]|`.
pub fn duplication_residual(z: f64) -> Result<f64> {
    let lhs = log_gamma(2.0 * z)?;
    let rhs = (2.0 * z - 1.0) * std::f64::consts::LN_2 - 0.5 * PI.ln() + log_gamma(z)? + log_gamma(z + 0.5)?;
    Ok((lhs - rhs).abs())
}
