//! Lawson immersions `Φ_{n,m}(x, y) = (cos nx cos y, sin nx cos y, cos mx sin y, sin mx sin y)`
//! and their areas.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{precondition, Error, Result};
use crate::quad::gauss_kronrod;

/// Absolute quadrature target for areas.
pub const AREA_QUAD_TARGET: f64 = 1e-10;

/// `4π²`, twice the area of the Clifford torus.
pub const DOUBLE_CLIFFORD_AREA: f64 = 4.0 * PI * PI;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LawsonSurface {
    n: u64,
    m: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Topology {
    Torus,
    KleinBottle,
}

impl LawsonSurface {
    /// Any coprime positive pair. `(n, m)` and `(m, n)` are congruent
    /// surfaces; [`LawsonSurface::normalized`] picks `n <= m`.
    pub fn new(n: u64, m: u64) -> Result<Self> {
        if n == 0 || m == 0 || n.gcd(&m) != 1 {
            return precondition(format!("({n}, {m}) must be coprime and positive"));
        }
        Ok(LawsonSurface { n, m })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn normalized(self) -> Self {
        LawsonSurface {
            n: self.n.min(self.m),
            m: self.n.max(self.m),
        }
    }

    /// Klein bottle iff exactly one of `n`, `m` is even.
    pub fn topology(&self) -> Topology {
        if (self.n + self.m) % 2 == 1 {
            Topology::KleinBottle
        } else {
            Topology::Torus
        }
    }
}

pub fn lawson_immerse(s: LawsonSurface, x: f64, y: f64) -> [f64; 4] {
    let (n, m) = (s.n as f64, s.m as f64);
    let (sy, cy) = y.sin_cos();
    let (snx, cnx) = (n * x).sin_cos();
    let (smx, cmx) = (m * x).sin_cos();
    [cnx * cy, snx * cy, cmx * sy, smx * sy]
}

/// The `(n, m)` circle action `(z, w) ↦ (e^{inθ} z, e^{imθ} w)`.
pub fn nm_action(s: LawsonSurface, theta: f64, x: [f64; 4]) -> [f64; 4] {
    let rot = |a: f64, b: f64, t: f64| {
        let (st, ct) = t.sin_cos();
        (ct * a - st * b, st * a + ct * b)
    };
    let (a, b) = rot(x[0], x[1], s.n as f64 * theta);
    let (c, d) = rot(x[2], x[3], s.m as f64 * theta);
    [a, b, c, d]
}

/// Coefficient of `dx²` in the induced metric; the `dy²` coefficient is 1.
pub fn induced_metric_coeff(s: LawsonSurface, y: f64) -> f64 {
    let (n, m) = (s.n as f64, s.m as f64);
    let (sy, cy) = y.sin_cos();
    n * n * cy * cy + m * m * sy * sy
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AreaResult {
    pub value: f64,
    pub abs_err: f64,
}

/// `π ∫₀^{2π} √(n² cos² y + m² sin² y) dy`: the volume element integrated
/// over a fundamental domain of half the area of `[0, 2π]²`.
pub fn lawson_area(s: LawsonSurface) -> Result<AreaResult> {
    lawson_area_with_target(s, AREA_QUAD_TARGET)
}

/// [`lawson_area`] with an explicit absolute error target.
pub fn lawson_area_with_target(s: LawsonSurface, target: f64) -> Result<AreaResult> {
    if !(target > 0.0) {
        return precondition(format!("quadrature target {target} must be positive"));
    }
    // the integrand has period π and is even about π/2
    let r = gauss_kronrod(
        |y| induced_metric_coeff(s, y).sqrt(),
        0.0,
        FRAC_PI_2,
        target / (4.0 * PI),
    )?;
    Ok(AreaResult {
        value: 4.0 * PI * r.value,
        abs_err: 4.0 * PI * r.abs_err,
    })
}

/// Whether `Area(τ_{n,m}) > 4π²`. Fails with [`Error::Indeterminate`] when
/// the quadrature error straddles the threshold.
pub fn exceeds_double_clifford(s: LawsonSurface) -> Result<bool> {
    area_exceeds_double_clifford(lawson_area(s)?)
}

/// The comparison behind [`exceeds_double_clifford`], for an area already
/// computed.
pub fn area_exceeds_double_clifford(a: AreaResult) -> Result<bool> {
    let gap = a.value - DOUBLE_CLIFFORD_AREA;
    if gap.abs() <= a.abs_err {
        return Err(Error::Indeterminate {
            value: a.value,
            threshold: DOUBLE_CLIFFORD_AREA,
            abs_err: a.abs_err,
        });
    }
    Ok(gap > 0.0)
}

/// Area `4π² sin r cos r` of the torus `|z| = sin r`.
pub fn cmc_torus_area(r: f64) -> Result<f64> {
    if !(r > 0.0 && r < FRAC_PI_2) {
        return precondition(format!("radius {r} outside (0, π/2)"));
    }
    Ok(TAU * r.sin() * TAU * r.cos())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: u64, m: u64) -> LawsonSurface {
        LawsonSurface::new(n, m).unwrap()
    }

    #[test]
    fn immersion_basics() {
        assert_eq!(lawson_immerse(s(2, 3), 0.0, 0.0), [1.0, 0.0, 0.0, 0.0]);
        let p = lawson_immerse(s(2, 3), 0.3, 1.1);
        let q = lawson_immerse(s(2, 3), 0.3 + TAU, 1.1 - TAU);
        let norm: f64 = p.iter().map(|v| v * v).sum();
        assert!((norm - 1.0).abs() < 1e-15);
        for i in 0..4 {
            assert!((p[i] - q[i]).abs() < 1e-12);
        }
    }

    #[test]
    fn metric_coefficients() {
        assert!((induced_metric_coeff(s(1, 1), 0.7) - 1.0).abs() < 1e-15);
        assert!((induced_metric_coeff(s(1, 2), FRAC_PI_2) - 4.0).abs() < 1e-14);
    }

    #[test]
    fn areas() {
        let a = lawson_area(s(1, 1)).unwrap();
        assert!((a.value - 2.0 * PI * PI).abs() < 1e-9);
        let a = lawson_area(s(1, 2)).unwrap();
        assert!((a.value - 30.43716).abs() < 1e-4 && a.abs_err <= 1e-9);
        let a = lawson_area(s(1, 3)).unwrap();
        assert!((a.value - 41.98705).abs() < 1e-4);
    }

    #[test]
    fn thresholds() {
        assert!(!exceeds_double_clifford(s(1, 2)).unwrap());
        assert!(exceeds_double_clifford(s(1, 3)).unwrap());
        assert!(exceeds_double_clifford(s(3, 5)).unwrap());
    }

    #[test]
    fn topology_parity() {
        assert_eq!(s(1, 1).topology(), Topology::Torus);
        assert_eq!(s(1, 2).topology(), Topology::KleinBottle);
        assert_eq!(s(3, 5).topology(), Topology::Torus);
        assert_eq!(s(2, 3).topology(), Topology::KleinBottle);
        assert!(LawsonSurface::new(2, 4).is_err());
    }

    #[test]
    fn cmc_areas() {
        assert!((cmc_torus_area(PI / 4.0).unwrap() - 2.0 * PI * PI).abs() < 1e-12);
        assert!((cmc_torus_area(PI / 6.0).unwrap() - 3f64.sqrt() * PI * PI).abs() < 1e-12);
        assert!(cmc_torus_area(1e-9).unwrap() < 1e-7);
        assert!(cmc_torus_area(0.0).is_err());
        assert!(cmc_torus_area(FRAC_PI_2).is_err());
    }
}
