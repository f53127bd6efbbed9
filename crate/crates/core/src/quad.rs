//! One-dimensional quadrature rules used by the area and period modules.
//!
//! Three rules are provided, each returning a value together with an error
//! estimate:
//!
//! * [`gauss_kronrod`]: globally adaptive 7/15-point Gauss-Kronrod for smooth
//!   integrands on finite intervals.
//! * [`tanh_sinh`]: double-exponential rule for finite intervals with
//!   integrable endpoint singularities. The integrand receives the distance to
//!   each endpoint so it can avoid cancellation next to the singularity.
//! * [`exp_sinh`]: double-exponential rule for `[a, ∞)`.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};

/// Value and error estimate of a quadrature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    pub abs_err: f64,
    pub evals: usize,
}

// 15-point Kronrod abscissae; the odd entries (1, 3, 5, 7) are the 7-point
// Gauss abscissae.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

const MAX_INTERVALS: usize = 4096;

fn kronrod15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for j in 0..7 {
        let dx = half * XGK[j];
        let sum = f(center - dx) + f(center + dx);
        kronrod += WGK[j] * sum;
        if j % 2 == 1 {
            gauss += WG[j / 2] * sum;
        }
    }
    (kronrod * half, ((kronrod - gauss) * half).abs())
}

struct Segment {
    a: f64,
    b: f64,
    value: f64,
    err: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.err == other.err
    }
}
impl Eq for Segment {}
impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.err.total_cmp(&other.err)
    }
}

/// Globally adaptive Gauss-Kronrod (7/15) quadrature on `[a, b]`.
///
/// The reported error is the sum of the per-interval `|K15 - G7|`
/// differences, which for smooth integrands is a large overestimate of the
/// true error of the Kronrod sum.
pub fn gauss_kronrod<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, abs_tol: f64) -> Result<QuadResult> {
    let (value, err) = kronrod15(&f, a, b);
    let mut evals = 15;
    let mut heap = BinaryHeap::new();
    heap.push(Segment { a, b, value, err });
    let mut total = value;
    let mut total_err = err;

    while total_err > abs_tol.max(1e3 * f64::EPSILON * total.abs()) {
        if heap.len() >= MAX_INTERVALS {
            return Err(Error::Quadrature {
                estimate: total,
                abs_err: total_err,
                target: abs_tol,
            });
        }
        let worst = heap.pop().expect("heap is never empty");
        let mid = 0.5 * (worst.a + worst.b);
        let (lv, le) = kronrod15(&f, worst.a, mid);
        let (rv, re) = kronrod15(&f, mid, worst.b);
        evals += 30;
        total += lv + rv - worst.value;
        total_err += le + re - worst.err;
        heap.push(Segment { a: worst.a, b: mid, value: lv, err: le });
        heap.push(Segment { a: mid, b: worst.b, value: rv, err: re });
    }

    // Re-sum to shed the drift of the running updates.
    let (value, abs_err) = heap
        .iter()
        .fold((0.0, 0.0), |(v, e), s| (v + s.value, e + s.err));
    if !value.is_finite() {
        return Err(Error::Quadrature {
            estimate: value,
            abs_err,
            target: abs_tol,
        });
    }
    Ok(QuadResult { value, abs_err, evals })
}

const DE_MAX_LEVEL: u32 = 12;
const DE_T_MAX: f64 = 6.5;

/// Tanh-sinh quadrature on `[a, b]`.
///
/// The integrand is called as `f(x, x - a, b - x)`, with both distances
/// computed without cancellation, so singular factors such as
/// `1/sqrt(x - a)` can be evaluated from the distance directly.
pub fn tanh_sinh<F: Fn(f64, f64, f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    abs_tol: f64,
) -> Result<QuadResult> {
    let half = 0.5 * (b - a);
    let center = 0.5 * (a + b);
    let mut evals = 0usize;

    // Contribution of the pair of nodes at +t and -t.
    let pair = |t: f64, evals: &mut usize| -> Option<f64> {
        let u = FRAC_PI_2 * t.sinh();
        let cu = u.cosh();
        let w = FRAC_PI_2 * t.cosh() / (cu * cu);
        // b - x at +t, and x - a at -t: half * (1 - tanh u)
        let delta = half * 2.0 / ((2.0 * u).exp() + 1.0);
        if delta <= 0.0 || w == 0.0 {
            return None;
        }
        let far = 2.0 * half - delta;
        let right = f(b - delta, far, delta);
        let left = f(a + delta, delta, far);
        *evals += 2;
        let term = w * (left + right);
        term.is_finite().then_some(term)
    };

    let mut h = 1.0;
    let mut sum = FRAC_PI_2 * f(center, half, half);
    evals += 1;
    let mut j = 1;
    while (j as f64) * h <= DE_T_MAX {
        match pair(j as f64 * h, &mut evals) {
            Some(term) => sum += term,
            None => break,
        }
        j += 1;
    }
    let mut estimate = sum * h * half;
    let mut err = f64::INFINITY;

    for _ in 1..=DE_MAX_LEVEL {
        h *= 0.5;
        // only odd multiples of the new step are new nodes
        let mut j = 1;
        let mut fresh = 0.0;
        while (j as f64) * h <= DE_T_MAX {
            match pair(j as f64 * h, &mut evals) {
                Some(term) => {
                    fresh += term;
                    if term.abs() < 1e-18 * sum.abs() && j > 8 {
                        break;
                    }
                }
                None => break,
            }
            j += 2;
        }
        sum += fresh;
        let next = sum * h * half;
        err = (next - estimate).abs();
        estimate = next;
        if err <= abs_tol.max(4.0 * f64::EPSILON * estimate.abs()) {
            return Ok(QuadResult {
                value: estimate,
                abs_err: err,
                evals,
            });
        }
    }
    Err(Error::Quadrature {
        estimate,
        abs_err: err,
        target: abs_tol,
    })
}

/// Exp-sinh quadrature on `[a, ∞)`.
///
/// The integrand is called as `f(x, x - a)`.
pub fn exp_sinh<F: Fn(f64, f64) -> f64>(f: F, a: f64, abs_tol: f64) -> Result<QuadResult> {
    let mut evals = 0usize;
    let node = |t: f64, evals: &mut usize| -> Option<f64> {
        let u = FRAC_PI_2 * t.sinh();
        let d = u.exp();
        if d == 0.0 || !d.is_finite() {
            return None;
        }
        let w = FRAC_PI_2 * t.cosh() * d;
        *evals += 1;
        let term = w * f(a + d, d);
        term.is_finite().then_some(term)
    };
    // Sum over t in [-T, T] for the given step and offset; ascending and
    // descending branches stop independently once terms vanish.
    let sweep = |h: f64, start: i64, stride: i64, evals: &mut usize, scale: f64| -> f64 {
        let mut acc = 0.0;
        for dir in [1i64, -1] {
            let mut j = if dir == 1 { start } else { -start };
            if dir == -1 && start == 0 {
                j = -stride;
            }
            let mut small = 0;
            while (j as f64 * h).abs() <= DE_T_MAX {
                match node(j as f64 * h, evals) {
                    Some(term) => {
                        acc += term;
                        if term.abs() < 1e-18 * scale.max(acc.abs()) {
                            small += 1;
                            if small > 3 {
                                break;
                            }
                        } else {
                            small = 0;
                        }
                    }
                    None => break,
                }
                j += dir * stride;
            }
        }
        acc
    };

    let mut h = 1.0;
    let mut sum = sweep(h, 0, 1, &mut evals, 0.0);
    let mut estimate = sum * h;
    let mut err = f64::INFINITY;
    for _ in 1..=DE_MAX_LEVEL {
        h *= 0.5;
        sum += sweep(h, 1, 2, &mut evals, sum);
        let next = sum * h;
        err = (next - estimate).abs();
        estimate = next;
        if err <= abs_tol.max(4.0 * f64::EPSILON * estimate.abs()) {
            return Ok(QuadResult {
                value: estimate,
                abs_err: err,
                evals,
            });
        }
    }
    Err(Error::Quadrature {
        estimate,
        abs_err: err,
        target: abs_tol,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn kronrod_polynomial_is_exact() {
        let r = gauss_kronrod(|x| 3.0 * x * x - x + 2.0, -1.0, 2.0, 1e-12).unwrap();
        assert!((r.value - 13.5).abs() < 1e-13, "{r:?}");
    }

    #[test]
    fn kronrod_handles_a_sharp_peak() {
        // ∫_{-1}^{1} eps / (x^2 + eps^2) dx = 2 atan(1/eps)
        let eps = 1e-3;
        let r = gauss_kronrod(|x| eps / (x * x + eps * eps), -1.0, 1.0, 1e-10).unwrap();
        assert!((r.value - 2.0 * (1.0 / eps).atan()).abs() < 1e-9);
    }

    #[test]
    fn tanh_sinh_inverse_sqrt_endpoints() {
        // ∫_0^1 dx / sqrt(x(1-x)) = π
        let r = tanh_sinh(|_, da, db| 1.0 / (da * db).sqrt(), 0.0, 1.0, 1e-12).unwrap();
        assert!((r.value - PI).abs() < 1e-12, "{r:?}");
    }

    #[test]
    fn tanh_sinh_log_singularity() {
        // ∫_0^1 ln x dx = -1
        let r = tanh_sinh(|_, da, _| da.ln(), 0.0, 1.0, 1e-12).unwrap();
        assert!((r.value + 1.0).abs() < 1e-12);
    }

    #[test]
    fn exp_sinh_power_tail() {
        // ∫_1^∞ x^{-5/2} dx = 2/3
        let r = exp_sinh(|x, _| x.powf(-2.5), 1.0, 1e-12).unwrap();
        assert!((r.value - 2.0 / 3.0).abs() < 1e-12, "{r:?}");
    }

    #[test]
    fn exp_sinh_with_endpoint_singularity() {
        // ∫_0^∞ e^{-x}/sqrt(x) dx = sqrt(π)
        let r = exp_sinh(|x, d| (-x).exp() / d.sqrt(), 0.0, 1e-12).unwrap();
        assert!((r.value - PI.sqrt()).abs() < 1e-11, "{r:?}");
    }

    #[test]
    fn non_convergence_is_reported() {
        let err = gauss_kronrod(|x| 1.0 / x, 0.0, 1.0, 1e-12).unwrap_err();
        assert!(matches!(err, Error::Quadrature { .. }));
    }
}
