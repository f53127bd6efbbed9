//! Orbits of `Z_p^q` on the flat square torus `[0, 2π)²` and the parallel
//! `(n, m)`-curve configurations that carry them.
//!
//! The orbit of the origin is `{2π(j/p, jq/p) : j = 0..p}`. All counting is
//! done on the integer pairs `(j, jq mod p)`; [`FlatPoint`] is only for export.

use std::f64::consts::TAU;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{precondition, Result};
use crate::lens::{mul_mod, LensSpace};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FlatPoint {
    pub x: f64,
    pub y: f64,
}

impl FlatPoint {
    /// Reduces both coordinates into `[0, 2π)`.
    pub fn new(x: f64, y: f64) -> Self {
        let wrap = |v: f64| {
            let r = v.rem_euclid(TAU);
            if r >= TAU {
                0.0
            } else {
                r
            }
        };
        FlatPoint {
            x: wrap(x),
            y: wrap(y),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrbitConfiguration {
    pub n: u64,
    pub m: u64,
    pub k: u64,
}

impl OrbitConfiguration {
    /// The configuration with `n <= m`.
    pub fn normalized(self) -> Self {
        if self.n <= self.m {
            self
        } else {
            OrbitConfiguration {
                n: self.m,
                m: self.n,
                k: self.k,
            }
        }
    }

    pub fn complexity(&self) -> u64 {
        self.n.max(self.m)
    }
}

fn check_direction(n: u64, m: u64) -> Result<()> {
    if n == 0 || m == 0 {
        return precondition(format!("curve direction ({n}, {m}) must be positive"));
    }
    if n.gcd(&m) != 1 {
        return precondition(format!("curve direction ({n}, {m}) is not primitive"));
    }
    Ok(())
}

/// Integer labels `(j, jq mod p)` of the orbit of the origin, in order of `j`.
pub fn orbit_lattice(l: LensSpace) -> Vec<(u64, u64)> {
    let (p, q) = (l.p(), l.q());
    (0..p).map(|j| (j, mul_mod(j, q, p))).collect()
}

pub fn orbit_points(l: LensSpace) -> Vec<FlatPoint> {
    let p = l.p() as f64;
    orbit_lattice(l)
        .into_iter()
        .map(|(i, j)| FlatPoint::new(TAU * i as f64 / p, TAU * j as f64 / p))
        .collect()
}

/// Minimal number of parallel `(n, m)`-curves containing the orbit:
/// `p / gcd(m - nq mod p, p)`.
pub fn curves_containing_orbit(l: LensSpace, n: u64, m: u64) -> Result<u64> {
    check_direction(n, m)?;
    let (p, q) = (l.p(), l.q());
    let nq = mul_mod(n % p, q, p);
    let diff = (m % p + p - nq) % p;
    Ok(p / diff.gcd(&p))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrontierEntry {
    pub config: OrbitConfiguration,
    pub complexity: u64,
}

/// Pareto frontier of `(max(n, m), k)` over all primitive positive `(n, m)`
/// with `max(n, m) <= bound`. Ties are all kept, ordered by `(complexity, n, m)`.
pub fn classify_orbit(l: LensSpace, bound: u64) -> Result<Vec<FrontierEntry>> {
    if bound < 1 {
        return precondition("bound must be >= 1");
    }
    let mut frontier = Vec::new();
    let mut best = u64::MAX;
    for c in 1..=bound {
        let level: Vec<OrbitConfiguration> = (1..=c)
            .flat_map(|other| [(other, c), (c, other)])
            .filter(|&(n, m)| n.gcd(&m) == 1)
            .map(|(n, m)| {
                let k = curves_containing_orbit(l, n, m).expect("primitive");
                OrbitConfiguration { n, m, k }
            })
            .collect();
        let min_k = level.iter().map(|cfg| cfg.k).min().unwrap_or(u64::MAX);
        if min_k < best {
            best = min_k;
            let mut winners: Vec<_> = level.into_iter().filter(|cfg| cfg.k == min_k).collect();
            winners.sort_by_key(|cfg| (cfg.n, cfg.m));
            winners.dedup();
            frontier.extend(winners.into_iter().map(|config| FrontierEntry {
                config,
                complexity: c,
            }));
        }
    }
    Ok(frontier)
}

/// Smallest `k` reachable with `max(n, m) <= bound`, for each space of a
/// sequence. A sequence whose profile is unbounded for every fixed `bound`
/// is equidistributing; a bounded profile means the orbits stay on boundedly
/// many parallel curves.
pub fn best_k_profile(spaces: &[LensSpace], bound: u64) -> Result<Vec<u64>> {
    spaces
        .iter()
        .map(|&l| {
            let f = classify_orbit(l, bound)?;
            Ok(f.last().map(|e| e.config.k).unwrap_or(l.p()))
        })
        .collect()
}

/// A lens space whose orbit lies on exactly `k` parallel `(n, m)`-curves.
///
/// * `n >= 2`: write `m = nd + r` with `0 < r < n`; returns
///   `L(knp + k(n - r), p + d + 1)`.
/// * `n = 1, k = 1`: `L(p, m)`.
/// * `n = 1, k > 1`: `L(kp, m + cp)` for the smallest `c >= 1` with
///   `gcd(c, k) = 1` making the pair coprime.
///
/// Returns `None` when the candidate pair is not coprime (or degenerate).
pub fn realize_configuration(n: u64, m: u64, k: u64, p: u64) -> Result<Option<LensSpace>> {
    check_direction(n, m)?;
    if k < 1 || p < 1 {
        return precondition("need k >= 1 and p >= 1");
    }
    let make = |big_p: u64, big_q: u64| {
        if big_p < 2 {
            return None;
        }
        let q = big_q % big_p;
        LensSpace::new(big_p, q).ok()
    };
    if n >= 2 {
        let (d, r) = m.div_rem(&n);
        let big_p = k
            .checked_mul(n)
            .and_then(|v| v.checked_mul(p))
            .and_then(|v| v.checked_add(k * (n - r)));
        let Some(big_p) = big_p else {
            return precondition("realization overflows u64");
        };
        return Ok(make(big_p, p + d + 1));
    }
    if k == 1 {
        return Ok(make(p, m));
    }
    let Some(big_p) = k.checked_mul(p) else {
        return precondition("realization overflows u64");
    };
    Ok((1..k)
        .filter(|c| c.gcd(&k) == 1)
        .find_map(|c| make(big_p, (m % big_p + mul_mod(c, p, big_p)) % big_p)))
}

/// True iff every space in `spaces` carries its orbit on exactly `k`
/// parallel `(n, m)`-curves.
pub fn verify_class2(spaces: &[LensSpace], n: u64, m: u64, k: u64) -> Result<bool> {
    for &l in spaces {
        if curves_containing_orbit(l, n, m)? != k {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Realizes `(n, m, k)` for each `p` and checks the resulting sequence with
/// [`verify_class2`]. Every `p` must admit a realization.
pub fn verify_sequence_class2(n: u64, m: u64, k: u64, p_list: &[u64]) -> Result<bool> {
    if p_list.is_empty() {
        return precondition("empty p list");
    }
    let mut spaces = Vec::with_capacity(p_list.len());
    for &p in p_list {
        match realize_configuration(n, m, k, p)? {
            Some(l) => spaces.push(l),
            None => return precondition(format!("({n}, {m}, {k}) has no realization at p = {p}")),
        }
    }
    verify_class2(&spaces, n, m, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn l(p: u64, q: u64) -> LensSpace {
        LensSpace::new(p, q).unwrap()
    }

    #[test]
    fn small_orbits() {
        let pts = orbit_points(l(2, 1));
        assert_eq!(pts.len(), 2);
        assert!((pts[1].x - PI).abs() < 1e-15 && (pts[1].y - PI).abs() < 1e-15);
        assert_eq!(orbit_lattice(l(4, 3)), vec![(0, 0), (1, 3), (2, 2), (3, 1)]);
    }

    #[test]
    fn k_examples() {
        for p in 2..30 {
            assert_eq!(curves_containing_orbit(l(p, 1), 1, 1).unwrap(), 1);
        }
        for p in 3..30 {
            let big = 2 * p + 1;
            if let Ok(sp) = LensSpace::new(big, p + 2) {
                assert_eq!(curves_containing_orbit(sp, 2, 3).unwrap(), 1);
            }
            if let Ok(sp) = LensSpace::new(5 * p, 2 * p + 2) {
                assert_eq!(curves_containing_orbit(sp, 1, 2).unwrap(), 5);
            }
        }
        assert!(curves_containing_orbit(l(7, 3), 2, 4).is_err());
    }

    #[test]
    fn frontier_examples() {
        let f = classify_orbit(l(5, 2), 3).unwrap();
        assert!(f.iter().any(|e| e.config == OrbitConfiguration { n: 1, m: 2, k: 1 }));
        let f = classify_orbit(l(9, 1), 1).unwrap();
        assert_eq!(f[0].config, OrbitConfiguration { n: 1, m: 1, k: 1 });
        assert!(classify_orbit(l(9, 1), 0).is_err());
    }

    #[test]
    fn realization_examples() {
        assert_eq!(realize_configuration(2, 3, 1, 10).unwrap(), None);
        assert_eq!(realize_configuration(2, 3, 1, 11).unwrap(), Some(l(23, 13)));
        assert_eq!(realize_configuration(1, 4, 1, 9).unwrap(), Some(l(9, 4)));
        assert_eq!(realize_configuration(1, 3, 1, 9).unwrap(), None);
        let r = realize_configuration(1, 2, 5, 7).unwrap().unwrap();
        assert_eq!(r.p(), 35);
        assert_eq!(curves_containing_orbit(r, 1, 2).unwrap(), 5);
    }

    #[test]
    fn sequence_checks() {
        let ps: Vec<u64> = (10..=50).filter(|p| realize_configuration(2, 3, 1, *p).unwrap().is_some()).collect();
        assert!(verify_sequence_class2(2, 3, 1, &ps).unwrap());
        let spaces: Vec<_> = ps.iter().map(|&p| realize_configuration(2, 3, 1, p).unwrap().unwrap()).collect();
        assert!(!verify_class2(&spaces, 2, 3, 2).unwrap());
        assert!(verify_sequence_class2(2, 3, 1, &[]).is_err());
    }

    #[test]
    fn flat_point_wraps() {
        let p = FlatPoint::new(-0.5, 7.0);
        assert!((p.x - (TAU - 0.5)).abs() < 1e-15);
        assert!((p.y - (7.0 - TAU)).abs() < 1e-15);
    }
}
