//! Exact arithmetic of lens spaces `L(p, q) = S³ / ⟨ξ_{p,q}⟩` with
//! `ξ_{p,q}(z, w) = (e^{2πi/p} z, e^{2πiq/p} w)`.
//!
//! Everything here is integer arithmetic; products modulo `p` go through
//! `u128`, so any modulus below 2⁶³ is supported.

use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{precondition, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LensSpace {
    p: u64,
    q: u64,
}

impl LensSpace {
    pub fn new(p: u64, q: u64) -> Result<Self> {
        if p < 2 {
            return precondition(format!("lens space needs p >= 2, got {p}"));
        }
        if p > i64::MAX as u64 {
            return Err(Error::Overflow("lens space modulus"));
        }
        if q == 0 || q >= p {
            return precondition(format!("need 1 <= q < p, got q={q}, p={p}"));
        }
        if q.gcd(&p) != 1 {
            return precondition(format!("gcd({p}, {q}) != 1"));
        }
        Ok(LensSpace { p, q })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// All lens spaces with fundamental group of order `p`.
    pub fn all_with_order(p: u64) -> impl Iterator<Item = LensSpace> {
        (1..p).filter_map(move |q| LensSpace::new(p, q).ok())
    }

    /// Area `2π²/p` of the projected Clifford torus.
    pub fn clifford_area(&self) -> f64 {
        2.0 * std::f64::consts::PI.powi(2) / self.p as f64
    }
}

impl fmt::Display for LensSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({}, {})", self.p, self.q)
    }
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

/// Inverse of a unit modulo `p`.
pub fn inverse_mod(q: u64, p: u64) -> Option<u64> {
    let e = (q as i128).extended_gcd(&(p as i128));
    (e.gcd == 1).then(|| e.x.rem_euclid(p as i128) as u64)
}

/// `L(p,q)` and `L(p,q')` are isometric iff `q' = q`, `q + q' ≡ 0` or
/// `qq' ≡ ±1 (mod p)`.
pub fn are_isometric(l1: LensSpace, l2: LensSpace) -> Result<bool> {
    if l1.p != l2.p {
        return precondition(format!("cannot compare {l1} and {l2}: different p"));
    }
    let p = l1.p;
    let (q, r) = (l1.q, l2.q);
    let prod = mul_mod(q, r, p);
    Ok(q == r || (q + r) % p == 0 || prod == 1 || prod == p - 1)
}

/// The genus one Heegaard splitting is flippable iff `q ∈ {1, p-1}`.
pub fn is_flippable(l: LensSpace) -> bool {
    l.q == 1 || l.q == l.p - 1
}

/// Orders `(k1, k2) = (p / gcd(q-1, p), p / gcd(p, q+1))` of the rotations
/// induced on the two S² factors of the geodesic space.
pub fn seifert_order(l: LensSpace) -> (u64, u64) {
    let k1 = l.p / (l.q - 1).gcd(&l.p);
    let k2 = l.p / l.p.gcd(&((l.q + 1) % l.p));
    (k1, k2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ToriFamily {
    /// Exactly one invariant Clifford torus.
    UniquePoint,
    FamilyRP2,
    FamilyRP2xRP2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum KleinFamily {
    None,
    FamilyS1,
    FamilyS1xRP2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorusClassification {
    pub tori: ToriFamily,
    pub klein: KleinFamily,
}

/// Minimal tori and Klein bottles of `L(p, q)` (projections of
/// `Z_p^q`-invariant Clifford tori).
///
/// `p = 3` and `p = 4` are the boundary rows: `L(3, 1)` has the RP² family
/// of tori, and `L(4, 1)` has both the RP² torus family and the S¹ × RP²
/// family of Klein bottles.
pub fn classify_invariant_tori(l: LensSpace) -> TorusClassification {
    let p = l.p;
    let (tori, klein) = if p == 2 {
        (ToriFamily::FamilyRP2xRP2, KleinFamily::None)
    } else if is_flippable(l) {
        if p == 4 {
            (ToriFamily::FamilyRP2, KleinFamily::FamilyS1xRP2)
        } else {
            (ToriFamily::FamilyRP2, KleinFamily::None)
        }
    } else if admits_klein_bottle(l) {
        (ToriFamily::UniquePoint, KleinFamily::FamilyS1)
    } else {
        (ToriFamily::UniquePoint, KleinFamily::None)
    };
    TorusClassification { tori, klein }
}

/// `p = 4m` and `q = 2m ± 1`.
pub fn admits_klein_bottle(l: LensSpace) -> bool {
    l.p % 4 == 0 && (l.q + 1 == l.p / 2 || l.q == l.p / 2 + 1)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsometryCount {
    pub p: u64,
    /// Number of orbits of the units of Z_p under negation and inversion.
    pub n_exact: u64,
    pub phi: u64,
    /// Units fixed by identity, negation, inversion, and negated inversion.
    pub fixed_counts: [u64; 4],
}

impl IsometryCount {
    pub fn burnside(&self) -> Ratio<u64> {
        Ratio::new(self.fixed_counts.iter().sum::<u64>(), 4)
    }
}

/// Counts isometry classes of lens spaces with fundamental group `Z_p` by
/// direct orbit enumeration, and records the fixed-point counts entering
/// Burnside's formula.
pub fn count_isometry_classes(p: u64) -> Result<IsometryCount> {
    if p < 2 {
        return precondition(format!("need p >= 2, got {p}"));
    }
    if p > u32::MAX as u64 {
        return precondition("orbit enumeration limited to p < 2^32");
    }
    let n = p as usize;
    let mut seen = vec![false; n];
    let mut orbits = 0;
    let mut phi = 0;
    let mut fixed = [0u64; 4];
    for q in 1..p {
        if q.gcd(&p) != 1 {
            continue;
        }
        phi += 1;
        let neg = p - q;
        let inv = inverse_mod(q, p).expect("unit");
        let neg_inv = (p - inv) % p;
        fixed[0] += 1;
        fixed[1] += u64::from(neg == q);
        fixed[2] += u64::from(inv == q);
        fixed[3] += u64::from(neg_inv == q);
        if !seen[q as usize] {
            orbits += 1;
            for r in [q, neg, inv, neg_inv] {
                seen[r as usize] = true;
            }
        }
    }
    Ok(IsometryCount {
        p,
        n_exact: orbits,
        phi,
        fixed_counts: fixed,
    })
}

/// Euler's totient by trial factorisation.
pub fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut f = 2;
    while f * f <= n {
        if n % f == 0 {
            while n % f == 0 {
                n /= f;
            }
            result -= result / f;
        }
        f += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Data of a `p`-sheeted cover of a compact surface with boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoveringData {
    pub p: i64,
    /// Number of components of the quotient surface.
    pub components: i64,
    pub genus_quotient: i64,
    /// Boundary circles that are homologically non-trivial in the solid torus.
    pub w1: i64,
    pub w0: i64,
}

/// Genus of the lifted surface: `(p - 1)(w1/2 - |S|) + p·genus(S)`.
pub fn covering_genus(data: CoveringData) -> Result<i64> {
    let CoveringData {
        p,
        components,
        genus_quotient,
        w1,
        w0,
    } = data;
    if [p, components, genus_quotient, w1, w0].iter().any(|v| *v < 0) || p < 1 {
        return precondition("covering data must be non-negative with p >= 1");
    }
    if w1 % 2 != 0 {
        return precondition(format!("w1 = {w1} must be even"));
    }
    let a = (p - 1)
        .checked_mul(w1 / 2 - components)
        .ok_or(Error::Overflow("covering genus"))?;
    let b = p
        .checked_mul(genus_quotient)
        .ok_or(Error::Overflow("covering genus"))?;
    a.checked_add(b).ok_or(Error::Overflow("covering genus"))
}

/// Genus of a `p`-sheeted unbranched cover of a closed genus `g` surface.
pub fn lift_genus(g: u64, p: u64) -> Result<i64> {
    if p < 1 {
        return precondition("need p >= 1");
    }
    let (g, p) = (g as i64, p as i64);
    p.checked_mul(g - 1)
        .and_then(|v| v.checked_add(1))
        .ok_or(Error::Overflow("lift genus"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientGenus {
    pub numer: i64,
    pub denom: i64,
    pub integral: bool,
}

impl QuotientGenus {
    pub fn as_ratio(&self) -> Ratio<i64> {
        Ratio::new(self.numer, self.denom)
    }
}

/// Genus `1 + (g - 1)/|O|` a quotient by a free orientation-preserving group
/// of order `|O|` would have. Non-integral values are an obstruction.
pub fn quotient_genus(g: u64, order: u64) -> Result<QuotientGenus> {
    if order < 1 {
        return precondition("group order must be >= 1");
    }
    let r = Ratio::from_integer(1i64) + Ratio::new(g as i64 - 1, order as i64);
    Ok(QuotientGenus {
        numer: *r.numer(),
        denom: *r.denom(),
        integral: r.is_integer(),
    })
}

/// Genus after `n` successive double covers starting from genus 2:
/// `g_{k+1} = 2 g_k - 1`, i.e. `2ⁿ + 1`.
pub fn iterated_double_cover_genus(n: u32) -> Result<u64> {
    (0..n).try_fold(2u64, |g, _| {
        g.checked_mul(2)
            .map(|v| v - 1)
            .ok_or(Error::Overflow("iterated double cover genus"))
    })
}
