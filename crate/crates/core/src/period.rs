//! The period `P_{n,m,a}` of curves invariant under the `(n, m)` circle action:
//!
//! ```text
//! P = (2 sin a / m) ∫_a^{π-a} √(A - B cos x) / (sin x · √(sin²x - sin²a)) dx
//! ```
//!
//! with `A = (n² + m²)/2`, `B = (m² - n²)/2`.
//!
//! The main route substitutes `cos x = cos a · sin θ`, which removes both
//! endpoint singularities:
//! `P = (2 sin a / m) ∫_{-π/2}^{π/2} √(A - B cos a sin θ) / (1 - cos²a sin²θ) dθ`.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{precondition, Result};
use crate::quad::{exp_sinh, gauss_kronrod, tanh_sinh};

pub const PERIOD_QUAD_TARGET: f64 = 1e-10;
pub const DERIVATIVE_QUAD_TARGET: f64 = 1e-10;

/// Scans stay this far away from both ends of `(0, π/2)`.
pub const SCAN_MARGIN: f64 = 0.05;

/// Upper integration limit in `x` for [`period_derivative_truncated`].
pub const DEFAULT_CUTOFF: f64 = 1e6;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PeriodParams {
    n: u64,
    m: u64,
    a: f64,
}

fn check_pair(n: u64, m: u64) -> Result<()> {
    if n == 0 || n >= m || n.gcd(&m) != 1 {
        return precondition(format!("need coprime 0 < n < m, got ({n}, {m})"));
    }
    Ok(())
}

impl PeriodParams {
    pub fn new(n: u64, m: u64, a: f64) -> Result<Self> {
        check_pair(n, m)?;
        if !(a > 0.0 && a < FRAC_PI_2) {
            return precondition(format!("a = {a} outside (0, π/2)"));
        }
        Ok(PeriodParams { n, m, a })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn big_a(&self) -> f64 {
        let (n, m) = (self.n as f64, self.m as f64);
        0.5 * (n * n + m * m)
    }

    pub fn big_b(&self) -> f64 {
        let (n, m) = (self.n as f64, self.m as f64);
        0.5 * (m * m - n * n)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Route {
    /// Tanh-sinh on the singular integrand in `x`.
    Original,
    /// Gauss-Kronrod on the smooth integrand in `θ`.
    Substituted,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PeriodEval {
    pub value: f64,
    pub abs_err: f64,
    pub route: Route,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DerivativeEval {
    pub value: f64,
    pub abs_err: f64,
}

pub fn period(params: PeriodParams) -> Result<PeriodEval> {
    period_with_target(params, PERIOD_QUAD_TARGET)
}

pub fn period_with_target(params: PeriodParams, target: f64) -> Result<PeriodEval> {
    let (big_a, big_b) = (params.big_a(), params.big_b());
    let (sa, ca) = params.a.sin_cos();
    let scale = 2.0 * sa / params.m as f64;
    let r = gauss_kronrod(
        |t| {
            let y = ca * t.sin();
            (big_a - big_b * y).sqrt() / (1.0 - y * y)
        },
        -FRAC_PI_2,
        FRAC_PI_2,
        target / scale,
    )?;
    Ok(PeriodEval {
        value: scale * r.value,
        abs_err: scale * r.abs_err,
        route: Route::Substituted,
    })
}

/// The period computed directly from the singular form by tanh-sinh
/// quadrature. `sin²x - sin²a` is evaluated as `sin(x - a) sin(x + a)` near
/// the left end and the mirrored product near the right end.
pub fn period_original(params: PeriodParams, target: f64) -> Result<PeriodEval> {
    let (big_a, big_b) = (params.big_a(), params.big_b());
    let a = params.a;
    let sa = a.sin();
    let scale = 2.0 * sa / params.m as f64;
    let r = tanh_sinh(
        |x, dl, dr| {
            let (d, sx) = if dl <= dr {
                (dl.sin() * (2.0 * a + dl).sin(), (a + dl).sin())
            } else {
                (dr.sin() * (2.0 * a + dr).sin(), (a + dr).sin())
            };
            (big_a - big_b * x.cos()).sqrt() / (sx * d.sqrt())
        },
        a,
        PI - a,
        target / scale,
    )?;
    Ok(PeriodEval {
        value: scale * r.value,
        abs_err: scale * r.abs_err,
        route: Route::Original,
    })
}

/// `P' = (2 cos a / m) ∫_{A/B}^∞ √(Bx - A) / (x² - cos²a)^{3/2} dx`,
/// evaluated after `s² = Bx - A` by exp-sinh quadrature.
pub fn period_derivative(params: PeriodParams) -> Result<DerivativeEval> {
    period_derivative_with_target(params, DERIVATIVE_QUAD_TARGET)
}

fn derivative_integrand(params: PeriodParams) -> impl Fn(f64) -> f64 {
    let (big_a, big_b) = (params.big_a(), params.big_b());
    let c2 = params.a.cos().powi(2);
    move |s: f64| {
        let x = (big_a + s * s) / big_b;
        let den = x * x - c2;
        2.0 * s * s / (big_b * den * den.sqrt())
    }
}

pub fn period_derivative_with_target(params: PeriodParams, target: f64) -> Result<DerivativeEval> {
    let scale = 2.0 * params.a.cos() / params.m as f64;
    let g = derivative_integrand(params);
    let r = exp_sinh(|s, _| g(s), 0.0, target / scale)?;
    Ok(DerivativeEval {
        value: scale * r.value,
        abs_err: scale * r.abs_err,
    })
}

/// Same integral truncated at `x = cutoff` and integrated adaptively; the
/// neglected tail is added to the error estimate.
pub fn period_derivative_truncated(params: PeriodParams, cutoff: f64) -> Result<DerivativeEval> {
    let (big_a, big_b) = (params.big_a(), params.big_b());
    if !(cutoff > big_a / big_b) {
        return precondition("cutoff must exceed A/B");
    }
    let scale = 2.0 * params.a.cos() / params.m as f64;
    let g = derivative_integrand(params);
    let s_max = (big_b * cutoff - big_a).sqrt();
    let r = gauss_kronrod(g, 0.0, s_max, DERIVATIVE_QUAD_TARGET / scale)?;
    // √(Bx - A) <= √(Bx) and x² - cos²a >= x²(1 - 1/X²) beyond X
    let tail = big_b.sqrt() * (2.0 / 3.0) * cutoff.powf(-1.5) * (1.0 - cutoff.powi(-2)).powf(-1.5);
    Ok(DerivativeEval {
        value: scale * r.value,
        abs_err: scale * (r.abs_err + tail),
    })
}

/// `lim_{a→π/2} P = 2π √((n² + m²) / (2m²))`.
pub fn period_limit(n: u64, m: u64) -> Result<f64> {
    check_pair(n, m)?;
    Ok(limit_formula(n, m))
}

fn limit_formula(n: u64, m: u64) -> f64 {
    let (n, m) = (n as f64, m as f64);
    TAU * ((n * n + m * m) / (2.0 * m * m)).sqrt()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScanPoint {
    pub a: f64,
    pub value: f64,
    pub abs_err: f64,
    pub derivative: f64,
    pub derivative_err: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub index: usize,
    pub a_lo: f64,
    pub a_hi: f64,
    pub p_lo: f64,
    pub p_hi: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanReport {
    pub n: u64,
    pub m: u64,
    pub points: Vec<ScanPoint>,
    pub violations: Vec<Violation>,
}

/// Grid `a_i` uniform on `[0.05, π/2 - 0.05]`.
pub fn scan_grid(grid_size: usize) -> Vec<f64> {
    let (lo, hi) = (SCAN_MARGIN, FRAC_PI_2 - SCAN_MARGIN);
    let step = (hi - lo) / (grid_size - 1) as f64;
    (0..grid_size).map(|i| lo + step * i as f64).collect()
}

/// Evaluates `P` and `P'` on [`scan_grid`] in parallel and reports every
/// adjacent pair with `P(a_{i+1}) <= P(a_i) + err_i + err_{i+1}`.
pub fn monotonicity_scan(n: u64, m: u64, grid_size: usize) -> Result<ScanReport> {
    check_pair(n, m)?;
    if grid_size < 2 {
        return precondition("grid_size must be >= 2");
    }
    let points = scan_grid(grid_size)
        .into_par_iter()
        .map(|a| {
            let params = PeriodParams::new(n, m, a)?;
            let p = period(params)?;
            let d = period_derivative(params)?;
            Ok(ScanPoint {
                a,
                value: p.value,
                abs_err: p.abs_err,
                derivative: d.value,
                derivative_err: d.abs_err,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let violations = points
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[1].value <= w[0].value + w[0].abs_err + w[1].abs_err)
        .map(|(index, w)| Violation {
            index,
            a_lo: w[0].a,
            a_hi: w[1].a,
            p_lo: w[0].value,
            p_hi: w[1].value,
        })
        .collect();
    Ok(ScanReport {
        n,
        m,
        points,
        violations,
    })
}

/// Lower bound `P > π`, used by the two functions below.
pub const PERIOD_LOWER_BOUND: f64 = PI;

/// Lower bound on the self-intersections of an invariant curve: a period
/// strictly between `π` and `2π` forces the curve to wind more than once
/// and less than twice per closing, which yields at least two crossings.
pub fn min_self_intersections(n: u64, m: u64) -> Result<u32> {
    check_pair(n, m)?;
    debug_assert!(PERIOD_LOWER_BOUND >= PI && limit_formula(n, m) < TAU);
    Ok(2)
}

/// Whether an invariant curve could be `Z_k`-invariant. Invariance would
/// need `P <= 2π/k <= π`, which the lower bound excludes for every `k >= 2`.
pub fn zk_invariant_possible(n: u64, m: u64, k: u64) -> Result<bool> {
    check_pair(n, m)?;
    if k < 2 {
        return precondition("k must be >= 2");
    }
    Ok(TAU / k as f64 > PERIOD_LOWER_BOUND)
}
