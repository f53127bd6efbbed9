//! Jacobi fields on the Clifford torus that depend only on `ξ = ny - mx`.
//!
//! In flat coordinates the Jacobi equation is `2ΔJ + 4J = 0`. For
//! `J = g(ny - mx)` this reduces to `g'' + ω² g = 0` with
//! `ω = √(2 / (n² + m²))`. A candidate blowup set of `k` equally spaced
//! parallel `(n, m)`-curves forces `g` to keep one sign on an open interval
//! of length `2π/k`; every solution has a zero there iff `ω · 2π/k > π`.

use std::f64::consts::{PI, TAU};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{precondition, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BlowupCandidate {
    n: u64,
    m: u64,
    k: u64,
}

impl BlowupCandidate {
    pub fn new(n: u64, m: u64, k: u64) -> Result<Self> {
        if n == 0 || m == 0 || n.gcd(&m) != 1 {
            return precondition(format!("({n}, {m}) must be coprime and positive"));
        }
        if k == 0 {
            return precondition("k must be >= 1");
        }
        Ok(BlowupCandidate { n, m, k })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn k(&self) -> u64 {
        self.k
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Obstructed,
    Indeterminate,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BlowupVerdict {
    pub omega: f64,
    pub spacing: f64,
    /// `ω · spacing / π`.
    pub ratio: f64,
    pub verdict: Verdict,
    /// False for `(1,1,1)`, `(1,2,1)`, `(1,1,2)` up to swapping `n` and `m`,
    /// the three cases worked out by hand; true for everything else.
    pub derived_extension: bool,
}

pub fn reduced_frequency(n: u64, m: u64) -> f64 {
    let (n, m) = (n as f64, m as f64);
    (2.0 / (n * n + m * m)).sqrt()
}

pub fn line_spacing(_n: u64, _m: u64, k: u64) -> f64 {
    TAU / k as f64
}

const HAND_COMPUTED: [(u64, u64, u64); 3] = [(1, 1, 1), (1, 2, 1), (1, 1, 2)];

/// `Obstructed` iff `ω · 2π/k > π`, i.e. `8 > k²(n² + m²)`, decided in
/// integers so the boundary case is exact.
pub fn blowup_verdict(c: BlowupCandidate) -> BlowupVerdict {
    let omega = reduced_frequency(c.n, c.m);
    let spacing = line_spacing(c.n, c.m, c.k);
    let lhs = 8u128;
    let rhs = (c.k as u128).pow(2) * ((c.n as u128).pow(2) + (c.m as u128).pow(2));
    let verdict = if lhs > rhs {
        Verdict::Obstructed
    } else {
        Verdict::Indeterminate
    };
    let key = (c.n.min(c.m), c.n.max(c.m), c.k);
    BlowupVerdict {
        omega,
        spacing,
        ratio: omega * spacing / PI,
        verdict,
        derived_extension: !HAND_COMPUTED.contains(&key),
    }
}

/// `J(x, y) = A sin(ωξ) + B cos(ωξ)` with `ξ = ny - mx`.
pub fn jacobi_field(n: u64, m: u64, amp_sin: f64, amp_cos: f64) -> impl Fn(f64, f64) -> f64 {
    let omega = reduced_frequency(n, m);
    let (n, m) = (n as f64, m as f64);
    move |x, y| {
        let (s, c) = (omega * (n * y - m * x)).sin_cos();
        amp_sin * s + amp_cos * c
    }
}

/// Number of zeros of `A sin(ωξ) + B cos(ωξ)` in the open interval `(lo, hi)`.
///
/// Writing the function as `R sin(ωξ + φ)` with `φ = atan2(B, A)`, its zeros
/// are `ωξ + φ ∈ πZ`, so this counts integers strictly inside
/// `((ω lo + φ)/π, (ω hi + φ)/π)`. Zeros within a relative `1e-12` of an
/// endpoint count as on the endpoint.
pub fn jacobi_zeros(omega: f64, amp_sin: f64, amp_cos: f64, interval: (f64, f64)) -> Result<u64> {
    if amp_sin == 0.0 && amp_cos == 0.0 {
        return precondition("(A, B) must be nonzero");
    }
    let (lo, hi) = interval;
    if !(lo.is_finite() && hi.is_finite() && lo < hi) || !(omega > 0.0 && omega.is_finite()) {
        return precondition("need a finite interval lo < hi and omega > 0");
    }
    let phi = amp_cos.atan2(amp_sin);
    let u_lo = (omega * lo + phi) / PI;
    let u_hi = (omega * hi + phi) / PI;
    let eps = 1e-12 * u_lo.abs().max(u_hi.abs()).max(1.0);
    let first = (u_lo + eps).floor() as i64 + 1;
    let last = (u_hi - eps).ceil() as i64 - 1;
    Ok((last - first + 1).max(0) as u64)
}
