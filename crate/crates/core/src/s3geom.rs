//! Unit quaternions, the space of oriented great circles of S³ and the
//! isometries of the Clifford torus.
//!
//! A quaternion `a + bi + cj + dk` is identified with the point
//! `(z, w) = (a + bi, c + di)` of C², so that `q = z + w j`.
//!
//! An oriented great circle is the intersection of S³ with an oriented
//! 2-plane `<x, y>`. Such a plane is encoded by the pair of unit imaginary
//! quaternions `(y x⁻¹, x⁻¹ y)`, a point of S² × S². With this convention the
//! Hopf fibre `<x, i x>` through `x` maps to `(i, x⁻¹ i x)`, so the Hopf
//! fibres are exactly the circles whose first coordinate is `±i`.

use std::f64::consts::FRAC_PI_4;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{precondition, Error, Result};

/// Default tolerance for closed-form geometric comparisons.
pub const DEFAULT_TOL: f64 = 1e-9;

const UNIT_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Quat {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl Quat {
    pub const ONE: Quat = Quat::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Quat = Quat::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Quat = Quat::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Quat = Quat::new(0.0, 0.0, 0.0, 1.0);

    pub const fn new(a: f64, b: f64, c: f64, d: f64) -> Self {
        Quat { a, b, c, d }
    }

    /// The quaternion `z + w j` for complex `z = z.0 + i z.1`, `w = w.0 + i w.1`.
    pub const fn from_complex(z: (f64, f64), w: (f64, f64)) -> Self {
        Quat::new(z.0, z.1, w.0, w.1)
    }

    pub fn z(&self) -> (f64, f64) {
        (self.a, self.b)
    }

    pub fn w(&self) -> (f64, f64) {
        (self.c, self.d)
    }

    pub fn from_array(v: [f64; 4]) -> Self {
        Quat::new(v[0], v[1], v[2], v[3])
    }

    pub fn to_array(self) -> [f64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn conj(self) -> Self {
        Quat::new(self.a, -self.b, -self.c, -self.d)
    }

    pub fn dot(self, other: Quat) -> f64 {
        self.a * other.a + self.b * other.b + self.c * other.c + self.d * other.d
    }

    pub fn norm(self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn scale(self, s: f64) -> Self {
        Quat::new(self.a * s, self.b * s, self.c * s, self.d * s)
    }

    pub fn normalize(self) -> Self {
        self.scale(1.0 / self.norm())
    }

    pub fn inverse(self) -> Self {
        self.conj().scale(1.0 / self.dot(self))
    }

    pub fn is_unit(self, tol: f64) -> bool {
        (self.dot(self) - 1.0).abs() < tol
    }

    pub fn imag(self) -> PointS2 {
        PointS2::new(self.b, self.c, self.d)
    }

    /// Great-circle distance on S³ between unit quaternions.
    pub fn distance(self, other: Quat) -> f64 {
        2.0 * (self - other).norm().atan2((self + other).norm())
    }
}

impl Mul for Quat {
    type Output = Quat;
    fn mul(self, r: Quat) -> Quat {
        let l = self;
        Quat::new(
            l.a * r.a - l.b * r.b - l.c * r.c - l.d * r.d,
            l.a * r.b + l.b * r.a + l.c * r.d - l.d * r.c,
            l.a * r.c - l.b * r.d + l.c * r.a + l.d * r.b,
            l.a * r.d + l.b * r.c - l.c * r.b + l.d * r.a,
        )
    }
}

impl Add for Quat {
    type Output = Quat;
    fn add(self, r: Quat) -> Quat {
        Quat::new(self.a + r.a, self.b + r.b, self.c + r.c, self.d + r.d)
    }
}

impl Sub for Quat {
    type Output = Quat;
    fn sub(self, r: Quat) -> Quat {
        Quat::new(self.a - r.a, self.b - r.b, self.c - r.c, self.d - r.d)
    }
}

impl Neg for Quat {
    type Output = Quat;
    fn neg(self) -> Quat {
        self.scale(-1.0)
    }
}

/// A unit vector of R³, identified with the imaginary quaternion `xi + yj + zk`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PointS2 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl PointS2 {
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        PointS2 { x, y, z }
    }

    pub fn normalized(x: f64, y: f64, z: f64) -> Self {
        let n = (x * x + y * y + z * z).sqrt();
        PointS2::new(x / n, y / n, z / n)
    }

    pub fn as_quat(self) -> Quat {
        Quat::new(0.0, self.x, self.y, self.z)
    }

    pub fn dot(self, o: PointS2) -> f64 {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    pub fn cross(self, o: PointS2) -> PointS2 {
        PointS2::new(
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        )
    }

    pub fn neg(self) -> PointS2 {
        PointS2::new(-self.x, -self.y, -self.z)
    }

    /// Spherical distance, as `atan2(|a × b|, a · b)`.
    pub fn distance(self, o: PointS2) -> f64 {
        let c = self.cross(o);
        c.dot(c).sqrt().atan2(self.dot(o))
    }

    fn lex_nonnegative(self) -> bool {
        [self.x, self.y, self.z]
            .into_iter()
            .find(|c| *c != 0.0)
            .is_some_and(|c| c > 0.0)
    }

    /// The representative of `{self, -self}` that is lexicographically larger.
    pub fn canonical_sign(self) -> PointS2 {
        if self.lex_nonnegative() {
            self
        } else {
            self.neg()
        }
    }

    /// A unit quaternion `q` with `q i q⁻¹ = self`.
    pub fn rotor_from_i(self) -> Quat {
        let c = self.x;
        if c < -1.0 + 1e-15 {
            return Quat::J;
        }
        // (1 + i·v, i × v), normalized
        let q = Quat::new(1.0 + c, 0.0, -self.z, self.y);
        q.normalize()
    }
}

impl fmt::Display for PointS2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:.6}, {:.6}, {:.6})", self.x, self.y, self.z)
    }
}

/// An oriented great circle of S³ as a point `(first, second)` of S² × S².
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Geodesic {
    pub first: PointS2,
    pub second: PointS2,
}

impl Geodesic {
    pub fn new(first: PointS2, second: PointS2) -> Self {
        Geodesic { first, second }
    }

    /// Reverse orientation: `(a, b) -> (-a, -b)`.
    pub fn reversed(self) -> Self {
        Geodesic::new(self.first.neg(), self.second.neg())
    }

    /// The orientation whose first factor is lexicographically non-negative.
    pub fn canonical(self) -> Self {
        if self.first.lex_nonnegative() {
            self
        } else {
            self.reversed()
        }
    }

    /// An oriented orthonormal basis `(x, y)` of the plane of this circle,
    /// i.e. `geodesic_from_plane(x, y) == self`.
    pub fn plane(self) -> (Quat, Quat) {
        let q1 = self.first.rotor_from_i();
        let q2 = self.second.rotor_from_i();
        let q2inv = q2.conj();
        (q1 * q2inv, q1 * Quat::I * q2inv)
    }

    /// The circle at distance π/2 (the core of the complementary solid torus).
    pub fn polar(self) -> Self {
        Geodesic::new(self.first, self.second.neg())
    }

    pub fn point(self, s: f64) -> Quat {
        let (x, y) = self.plane();
        x.scale(s.cos()) + y.scale(s.sin())
    }

    /// Spherical distance from `x` to this great circle.
    pub fn distance_to(self, x: Quat) -> f64 {
        let (e1, e2) = self.plane();
        let proj = e1.scale(x.dot(e1)) + e2.scale(x.dot(e2));
        (x - proj).norm().atan2(proj.norm())
    }
}

/// The oriented great circle through the orthonormal pair `(a, b)`.
pub fn geodesic_from_plane(a: Quat, b: Quat) -> Result<Geodesic> {
    if !a.is_unit(UNIT_TOL) || !b.is_unit(UNIT_TOL) {
        return precondition("plane vectors must be unit quaternions");
    }
    if a.dot(b).abs() >= UNIT_TOL {
        return precondition(format!("plane vectors not orthogonal (dot = {:e})", a.dot(b)));
    }
    let ainv = a.conj();
    Ok(Geodesic::new(
        (b * ainv).imag().renormalized(),
        (ainv * b).imag().renormalized(),
    ))
}

impl PointS2 {
    fn renormalized(self) -> PointS2 {
        PointS2::normalized(self.x, self.y, self.z)
    }
}

/// The isometry `z ↦ q1 z q2⁻¹` of S³.
pub fn rho_apply(q1: Quat, q2: Quat, z: Quat) -> Quat {
    q1 * z * q2.inverse()
}

/// Whether two great circles meet: `dist(a, a') = dist(b, b')` within `tol`.
pub fn geodesics_intersect(g1: Geodesic, g2: Geodesic, tol: f64) -> bool {
    let g1 = g1.canonical();
    let g2 = g2.canonical();
    let da = g1.first.distance(g2.first);
    let db = g1.second.distance(g2.second);
    (da - db).abs() < tol
}

/// Spherical distance between two great circles (the smaller principal
/// angle between their planes), computed from the S² × S² coordinates.
pub fn geodesic_distance(g1: Geodesic, g2: Geodesic) -> f64 {
    let da = g1.first.distance(g2.first);
    let db = g1.second.distance(g2.second);
    0.5 * (da - db).abs()
}

/// Tube of constant distance `radius` about a great circle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CmcTorus {
    pub axis: Geodesic,
    pub radius: f64,
}

impl CmcTorus {
    pub fn new(axis: Geodesic, radius: f64) -> Result<Self> {
        if !(radius > 0.0 && radius < std::f64::consts::FRAC_PI_2) {
            return precondition(format!("cmc torus radius {radius} outside (0, π/2)"));
        }
        Ok(CmcTorus { axis, radius })
    }

    /// Point with angle `s` along the axis and `t` around it.
    pub fn point(&self, s: f64, t: f64) -> Quat {
        let (e1, e2) = self.axis.plane();
        let (f1, f2) = self.axis.polar().plane();
        let core = e1.scale(s.cos()) + e2.scale(s.sin());
        let around = f1.scale(t.cos()) + f2.scale(t.sin());
        core.scale(self.radius.cos()) + around.scale(self.radius.sin())
    }

    /// Distance from `x` to the torus surface.
    pub fn distance_to(&self, x: Quat) -> f64 {
        (self.axis.distance_to(x) - self.radius).abs()
    }
}

/// Clifford torus `ι(p, E)`: the union of the circles `(p, b)` with `b` on
/// the great circle `E` of S² whose pole is `circle_pole`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CliffordTorus {
    pub point: PointS2,
    pub circle_pole: PointS2,
}

impl CliffordTorus {
    /// `ι(p, E) = ι(-p, E) = ι(p, -E)`; both fields are put in canonical sign.
    pub fn new(point: PointS2, circle_pole: PointS2) -> Self {
        CliffordTorus {
            point: point.canonical_sign(),
            circle_pole: circle_pole.canonical_sign(),
        }
    }

    /// The circle through `x` with first coordinate `p` is `(p, x⁻¹ p x)`, so
    /// `x` lies on the torus iff `x⁻¹ p x` lies on `E`.
    pub fn contains(&self, x: Quat, tol: f64) -> bool {
        let image = (x.conj() * self.point.as_quat() * x).imag();
        image.dot(self.circle_pole).abs() < tol
    }

    /// The point at angle `s` along the ruling circle `(p, b(t))`, where
    /// `b(t)` runs around `E`.
    pub fn point(&self, s: f64, t: f64) -> Quat {
        let pole = self.circle_pole;
        let helper = if pole.x.abs() < 0.9 {
            PointS2::new(1.0, 0.0, 0.0)
        } else {
            PointS2::new(0.0, 1.0, 0.0)
        };
        let u = pole.cross(helper);
        let u = PointS2::normalized(u.x, u.y, u.z);
        let v = pole.cross(u);
        let b = PointS2::normalized(
            u.x * t.cos() + v.x * t.sin(),
            u.y * t.cos() + v.y * t.sin(),
            u.z * t.cos() + v.z * t.sin(),
        );
        Geodesic::new(self.point, b).point(s)
    }
}

/// Hopf projection `H(z, w) = z / w`, composed with inverse stereographic
/// projection from the north pole: `∞ ↦ (0, 0, 1)`, `0 ↦ (0, 0, -1)`.
pub fn hopf_project(x: Quat) -> PointS2 {
    let (z, w) = (x.z(), x.w());
    // z * conj(w)
    let re = z.0 * w.0 + z.1 * w.1;
    let im = z.1 * w.0 - z.0 * w.1;
    let h = z.0 * z.0 + z.1 * z.1 - w.0 * w.0 - w.1 * w.1;
    PointS2::normalized(2.0 * re, 2.0 * im, h)
}

/// Relative position of two cmc tori at the first internal tangency.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TangencyKind {
    Coincide,
    OneGeodesic,
    TwoAntipodalPoints,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tangency {
    /// Largest radius `t` with `F(axis2, t)` inside the solid torus bounded by
    /// `F(axis1, rho)`.
    pub t0: f64,
    pub kind: TangencyKind,
    pub dist_first: f64,
    pub dist_second: f64,
    /// `rho - dist_first - dist_second`, the value obtained when the S²
    /// distances are not halved.
    pub unhalved_t0: f64,
}

/// Orients `axis2` so that it is close to `axis1` and returns the S²
/// distances of the two factors.
fn aligned_distances(axis1: Geodesic, axis2: Geodesic) -> (Geodesic, f64, f64) {
    let d = |g: Geodesic| (axis1.first.distance(g.first), axis1.second.distance(g.second));
    let (da, db) = d(axis2);
    let (ra, rb) = d(axis2.reversed());
    if ra + rb < da + db {
        (axis2.reversed(), ra, rb)
    } else {
        (axis2, da, db)
    }
}

/// First internal tangency between the cmc torus of radius `rho` about
/// `axis1` and the tori about a nearby `axis2`.
///
/// The principal angles between the two circles are `(da + db) / 2` and
/// `|da - db| / 2`, where `da`, `db` are the S² distances of the factors, so
/// the tangency radius is `rho - (da + db) / 2`.
pub fn cmc_tangency(axis1: Geodesic, axis2: Geodesic, rho: f64, tol: f64) -> Result<Tangency> {
    if !(rho > 0.0 && rho <= FRAC_PI_4 + 1e-15) {
        return precondition(format!("rho = {rho} outside (0, π/4]"));
    }
    let (_, da, db) = aligned_distances(axis1, axis2);
    if da + db >= rho {
        return Err(Error::Neighbourhood { sum: da + db, rho });
    }
    let kind = match (da < tol, db < tol) {
        (true, true) => TangencyKind::Coincide,
        (true, false) | (false, true) => TangencyKind::OneGeodesic,
        (false, false) => TangencyKind::TwoAntipodalPoints,
    };
    Ok(Tangency {
        t0: rho - 0.5 * (da + db),
        kind,
        dist_first: da,
        dist_second: db,
        unhalved_t0: rho - da - db,
    })
}

/// Points where `F(axis2, t0)` touches `F(axis1, rho)`.
///
/// Returns the two antipodal contact points, or `samples` points along the
/// contact circle when the axes share a factor. Coincident axes yield an
/// empty list (the tori coincide).
pub fn tangency_locus(
    axis1: Geodesic,
    axis2: Geodesic,
    rho: f64,
    samples: usize,
    tol: f64,
) -> Result<Vec<Quat>> {
    let tangency = cmc_tangency(axis1, axis2, rho, tol)?;
    let (axis2, _, _) = aligned_distances(axis1, axis2);
    let (e1, e2) = axis1.plane();
    let (f1, f2) = axis2.plane();

    // Continue the geodesic from the foot point on axis1 through y to
    // distance rho.
    let contact = |y: Quat| -> Quat {
        let proj = e1.scale(y.dot(e1)) + e2.scale(y.dot(e2));
        let c = proj.norm();
        let foot = proj.scale(1.0 / c);
        let normal = (y - proj).normalize();
        foot.scale(rho.cos()) + normal.scale(rho.sin())
    };

    match tangency.kind {
        TangencyKind::Coincide => Ok(Vec::new()),
        TangencyKind::OneGeodesic => Ok((0..samples)
            .map(|k| {
                let s = std::f64::consts::TAU * k as f64 / samples as f64;
                contact(f1.scale(s.cos()) + f2.scale(s.sin()))
            })
            .collect()),
        TangencyKind::TwoAntipodalPoints => {
            // y on axis2 farthest from axis1: eigenvector of MᵀM for its
            // smaller eigenvalue, M_ij = <e_i, f_j>.
            let m = [[e1.dot(f1), e1.dot(f2)], [e2.dot(f1), e2.dot(f2)]];
            let g11 = m[0][0] * m[0][0] + m[1][0] * m[1][0];
            let g22 = m[0][1] * m[0][1] + m[1][1] * m[1][1];
            let g12 = m[0][0] * m[0][1] + m[1][0] * m[1][1];
            let mean = 0.5 * (g11 + g22);
            let disc = (0.25 * (g11 - g22).powi(2) + g12 * g12).sqrt();
            let lmin = mean - disc;
            let (u, v) = if g12.abs() > 1e-300 {
                (g12, lmin - g11)
            } else if g11 <= g22 {
                (1.0, 0.0)
            } else {
                (0.0, 1.0)
            };
            let y = (f1.scale(u) + f2.scale(v)).normalize();
            let x = contact(y);
            Ok(vec![x, -x])
        }
    }
}

/// The eight isometries of S³ generated by `τ(z, w) = (w, z)` and
/// `c(z, w) = (z̄, w)`. Words compose right to left: `CT` is `c ∘ τ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum IsometryD8 {
    E,
    C,
    T,
    CT,
    TC,
    CTC,
    TCT,
    CTCT,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Letter {
    C,
    T,
}

impl IsometryD8 {
    /// All elements, in the listing order `e, c, τ, cτ, τc, cτc, τcτ, cτcτ`.
    pub const ALL: [IsometryD8; 8] = [
        IsometryD8::E,
        IsometryD8::C,
        IsometryD8::T,
        IsometryD8::CT,
        IsometryD8::TC,
        IsometryD8::CTC,
        IsometryD8::TCT,
        IsometryD8::CTCT,
    ];

    /// The order in which the distinctness argument treats the elements.
    pub const CERTIFICATE_ORDER: [IsometryD8; 8] = [
        IsometryD8::E,
        IsometryD8::T,
        IsometryD8::C,
        IsometryD8::TC,
        IsometryD8::CT,
        IsometryD8::CTC,
        IsometryD8::TCT,
        IsometryD8::CTCT,
    ];

    fn word(self) -> &'static [Letter] {
        use Letter::{C, T};
        match self {
            IsometryD8::E => &[],
            IsometryD8::C => &[C],
            IsometryD8::T => &[T],
            IsometryD8::CT => &[C, T],
            IsometryD8::TC => &[T, C],
            IsometryD8::CTC => &[C, T, C],
            IsometryD8::TCT => &[T, C, T],
            IsometryD8::CTCT => &[C, T, C, T],
        }
    }

    fn from_reduced(first: Letter, len: usize) -> IsometryD8 {
        use Letter::{C, T};
        match (len, first) {
            (0, _) => IsometryD8::E,
            (1, C) => IsometryD8::C,
            (1, T) => IsometryD8::T,
            (2, C) => IsometryD8::CT,
            (2, T) => IsometryD8::TC,
            (3, C) => IsometryD8::CTC,
            (3, T) => IsometryD8::TCT,
            (4, _) => IsometryD8::CTCT,
            _ => unreachable!("reduced words have length at most 4"),
        }
    }

    /// Group product `self ∘ other`, by free reduction with `c² = τ² = e` and
    /// `(cτ)⁴ = e`.
    pub fn compose(self, other: IsometryD8) -> IsometryD8 {
        let mut word: Vec<Letter> = Vec::with_capacity(8);
        for &l in self.word().iter().chain(other.word()) {
            if word.last() == Some(&l) {
                word.pop();
            } else {
                word.push(l);
            }
        }
        // an alternating word of length L > 4 equals the alternating word of
        // length 8 - L starting with the other letter
        let len = word.len();
        if len == 0 {
            return IsometryD8::E;
        }
        if len > 4 {
            let other = match word[0] {
                Letter::C => Letter::T,
                Letter::T => Letter::C,
            };
            return IsometryD8::from_reduced(other, 8 - len);
        }
        IsometryD8::from_reduced(word[0], len)
    }

    pub fn inverse(self) -> IsometryD8 {
        IsometryD8::ALL
            .into_iter()
            .find(|g| self.compose(*g) == IsometryD8::E)
            .expect("every element has an inverse")
    }

    pub fn name(self) -> &'static str {
        match self {
            IsometryD8::E => "e",
            IsometryD8::C => "c",
            IsometryD8::T => "τ",
            IsometryD8::CT => "cτ",
            IsometryD8::TC => "τc",
            IsometryD8::CTC => "cτc",
            IsometryD8::TCT => "τcτ",
            IsometryD8::CTCT => "cτcτ",
        }
    }
}

impl fmt::Display for IsometryD8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Apply a D8 element to a point `(z, w)` of S³.
pub fn d8_apply(g: IsometryD8, x: Quat) -> Quat {
    g.word().iter().rev().fold(x, |q, l| match l {
        Letter::T => Quat::new(q.c, q.d, q.a, q.b),
        Letter::C => Quat::new(q.a, -q.b, q.c, q.d),
    })
}

/// Exponent `e` (mod p) such that a suitable power of `ξ_{p,q1}` composed
/// with `g ξ_{p,q2} g⁻¹` is `(z, w) ↦ (z, e^{2πi e/p} w)`.
pub fn d8_conjugate_exponent(g: IsometryD8, p: u64, q1: u64, q2: u64) -> u64 {
    let p128 = p as i128;
    let (q1, q2) = (q1 as i128, q2 as i128);
    let e = match g {
        IsometryD8::E => q1 - q2,
        IsometryD8::T => 1 - q1 * q2,
        IsometryD8::C => q1 + q2,
        IsometryD8::TC => -q1 * q2 - 1,
        IsometryD8::CT => q1 * q2 + 1,
        IsometryD8::CTC => q1 * q2 - 1,
        IsometryD8::TCT => -(q1 + q2),
        IsometryD8::CTCT => q1 - q2,
    };
    e.rem_euclid(p128) as u64
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Certificate {
    /// Every conjugate rotation is non-trivial.
    Valid,
    /// The first element whose rotation exponent vanishes.
    Invalid(IsometryD8),
}

impl Certificate {
    pub fn is_valid(self) -> bool {
        matches!(self, Certificate::Valid)
    }
}

/// Checks that no element of D8 conjugates `Z_p^{q2}` into a group whose
/// combination with `Z_p^{q1}` has a trivial second-factor rotation.
pub fn distinctness_certificate(p: u64, q1: u64, q2: u64) -> Result<Certificate> {
    use num_integer::Integer;
    if p < 2 || q1 == 0 || q2 == 0 || q1 >= p || q2 >= p {
        return precondition(format!("need 1 <= q1, q2 < p (p={p}, q1={q1}, q2={q2})"));
    }
    if q1.gcd(&p) != 1 || q2.gcd(&p) != 1 {
        return precondition(format!("q1={q1}, q2={q2} must be coprime to p={p}"));
    }
    Ok(IsometryD8::CERTIFICATE_ORDER
        .into_iter()
        .find(|g| d8_conjugate_exponent(*g, p, q1, q2) == 0)
        .map_or(Certificate::Valid, Certificate::Invalid))
}

/// The generator `ξ_{p,q}(z, w) = (e^{2πi/p} z, e^{2πiq/p} w)` raised to
/// the power `power`.
pub fn xi_apply(p: u64, q: u64, power: u64, x: Quat) -> Quat {
    let tau = std::f64::consts::TAU;
    let s1 = tau * ((power % p) as f64) / p as f64;
    let s2 = tau * (((power as u128 * q as u128) % p as u128) as f64) / p as f64;
    let rot = |(re, im): (f64, f64), t: f64| (re * t.cos() - im * t.sin(), re * t.sin() + im * t.cos());
    Quat::from_complex(rot(x.z(), s1), rot(x.w(), s2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    fn close(a: PointS2, b: PointS2) -> bool {
        a.distance(b) < 1e-12
    }

    #[test]
    fn base_plane_maps_to_i_i() {
        let g = geodesic_from_plane(Quat::ONE, Quat::I).unwrap();
        assert!(close(g.first, PointS2::new(1.0, 0.0, 0.0)));
        assert!(close(g.second, PointS2::new(1.0, 0.0, 0.0)));
    }

    #[test]
    fn jk_plane_maps_to_i_minus_i() {
        let g = geodesic_from_plane(Quat::J, Quat::K).unwrap();
        assert!(close(g.first, PointS2::new(1.0, 0.0, 0.0)));
        assert!(close(g.second, PointS2::new(-1.0, 0.0, 0.0)));
    }

    #[test]
    fn plane_roundtrip() {
        let g = Geodesic::new(PointS2::normalized(0.3, -0.2, 0.9), PointS2::normalized(-1.0, 0.5, 0.1));
        let (x, y) = g.plane();
        let back = geodesic_from_plane(x, y).unwrap();
        assert!(close(back.first, g.first) && close(back.second, g.second));
        let (e, f) = g.polar().plane();
        for u in [x, y] {
            for v in [e, f] {
                assert!(u.dot(v).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn rejects_bad_planes() {
        assert!(geodesic_from_plane(Quat::ONE, Quat::ONE).is_err());
        assert!(geodesic_from_plane(Quat::ONE.scale(2.0), Quat::I).is_err());
    }

    #[test]
    fn rho_identity_and_stabilizer() {
        let z = Quat::new(0.5, 0.5, 0.5, 0.5);
        assert_eq!(rho_apply(Quat::ONE, Quat::ONE, z), z);
        let r = rho_apply(Quat::I, Quat::I, Quat::ONE);
        assert!((r - Quat::ONE).norm() < 1e-15);
    }

    #[test]
    fn hopf_fibres_have_first_coordinate_i() {
        let x = Quat::new(0.1, 0.7, -0.3, 0.4).normalize();
        let g = geodesic_from_plane(x, Quat::I * x).unwrap();
        assert!(close(g.first, PointS2::new(1.0, 0.0, 0.0)));
    }

    #[test]
    fn intersection_examples() {
        let i = PointS2::new(1.0, 0.0, 0.0);
        let j = PointS2::new(0.0, 1.0, 0.0);
        assert!(!geodesics_intersect(Geodesic::new(i, i), Geodesic::new(i, j), DEFAULT_TOL));
        assert!(geodesics_intersect(Geodesic::new(i, i), Geodesic::new(j, j), DEFAULT_TOL));
        let g = Geodesic::new(j, i);
        assert!(geodesics_intersect(g, g, DEFAULT_TOL));
        assert!(geodesics_intersect(g, g.reversed(), DEFAULT_TOL));
    }

    #[test]
    fn canonical_picks_lexicographically_larger() {
        let g = Geodesic::new(PointS2::new(0.0, -1.0, 0.0), PointS2::new(1.0, 0.0, 0.0));
        let c = g.canonical();
        assert_eq!(c.first, PointS2::new(0.0, 1.0, 0.0));
        assert_eq!(c.second, PointS2::new(-1.0, 0.0, 0.0));
        assert_eq!(c.canonical(), c);
    }

    #[test]
    fn hopf_poles() {
        assert!(close(hopf_project(Quat::ONE), PointS2::new(0.0, 0.0, 1.0)));
        assert!(close(hopf_project(Quat::J), PointS2::new(0.0, 0.0, -1.0)));
    }

    #[test]
    fn tangency_kinds() {
        let i = PointS2::new(1.0, 0.0, 0.0);
        let near = PointS2::normalized(1.0, 0.05, 0.0);
        let axis = Geodesic::new(i, i);
        let t = cmc_tangency(axis, axis, 0.7, DEFAULT_TOL).unwrap();
        assert_eq!(t.kind, TangencyKind::Coincide);
        assert_eq!(t.t0, 0.7);
        let t = cmc_tangency(axis, Geodesic::new(i, near), 0.7, DEFAULT_TOL).unwrap();
        assert_eq!(t.kind, TangencyKind::OneGeodesic);
        let t = cmc_tangency(axis, Geodesic::new(near, near), 0.7, DEFAULT_TOL).unwrap();
        assert_eq!(t.kind, TangencyKind::TwoAntipodalPoints);
    }

    #[test]
    fn tangency_outside_neighbourhood() {
        let i = PointS2::new(1.0, 0.0, 0.0);
        let j = PointS2::new(0.0, 1.0, 0.0);
        let err = cmc_tangency(Geodesic::new(i, i), Geodesic::new(j, i), 0.5, DEFAULT_TOL).unwrap_err();
        assert!(matches!(err, Error::Neighbourhood { sum, .. } if (sum - FRAC_PI_2).abs() < 1e-12));
        assert!(cmc_tangency(Geodesic::new(i, i), Geodesic::new(i, i), 1.0, DEFAULT_TOL).is_err());
    }

    #[test]
    fn standard_clifford_torus() {
        // |z|² = 1/2 is ι(i, E) with E the great circle orthogonal to i
        let c = CliffordTorus::new(PointS2::new(1.0, 0.0, 0.0), PointS2::new(1.0, 0.0, 0.0));
        let s = 0.5f64.sqrt();
        for (a, b) in [(0.0, 0.0), (0.3, 2.0), (4.0, 1.0)] {
            let x = Quat::from_complex((s * f64::cos(a), s * f64::sin(a)), (s * f64::cos(b), s * f64::sin(b)));
            assert!(c.contains(x, 1e-12));
        }
        assert!(!c.contains(Quat::ONE, 1e-6));
        let y = c.point(0.4, 1.3);
        assert!((y.a * y.a + y.b * y.b - 0.5).abs() < 1e-12);
    }

    #[test]
    fn clifford_torus_sign_invariance() {
        let p = PointS2::normalized(0.2, -0.5, 0.3);
        let e = PointS2::normalized(-0.1, 0.4, 0.8);
        assert_eq!(CliffordTorus::new(p, e), CliffordTorus::new(p.neg(), e));
        assert_eq!(CliffordTorus::new(p, e), CliffordTorus::new(p, e.neg()));
    }

    #[test]
    fn d8_generators() {
        let x = Quat::new(0.1, 0.2, 0.3, 0.4);
        assert_eq!(d8_apply(IsometryD8::T, x), Quat::new(0.3, 0.4, 0.1, 0.2));
        assert_eq!(d8_apply(IsometryD8::C, x), Quat::new(0.1, -0.2, 0.3, 0.4));
        // cτ = c ∘ τ
        assert_eq!(d8_apply(IsometryD8::CT, x), Quat::new(0.3, -0.4, 0.1, 0.2));
    }

    #[test]
    fn d8_group_laws() {
        use IsometryD8::*;
        assert_eq!(T.compose(T), E);
        assert_eq!(C.compose(C), E);
        assert_eq!(TC.compose(TC).compose(TC).compose(TC), E);
        assert_ne!(TC.compose(TC), E);
        assert_eq!(TC.inverse(), CT);
        // τcτc and cτcτ are the same rotation
        assert_eq!(TCT.compose(C), CTCT);
    }

    #[test]
    fn exponent_examples() {
        assert_eq!(d8_conjugate_exponent(IsometryD8::E, 11, 2, 3), 10);
        assert_eq!(d8_conjugate_exponent(IsometryD8::C, 11, 2, 3), 5);
    }

    #[test]
    fn certificate_examples() {
        assert_eq!(distinctness_certificate(7, 2, 3).unwrap(), Certificate::Invalid(IsometryD8::TC));
        assert_eq!(distinctness_certificate(11, 2, 3).unwrap(), Certificate::Valid);
        assert_eq!(distinctness_certificate(11, 4, 4).unwrap(), Certificate::Invalid(IsometryD8::E));
        assert!(distinctness_certificate(12, 2, 5).is_err());
    }

    #[test]
    fn xi_is_a_rotation_of_order_p() {
        let x = Quat::new(0.3, -0.1, 0.5, 0.8).normalize();
        let y = xi_apply(7, 3, 7, x);
        assert!((y - x).norm() < 1e-12);
        let y = xi_apply(4, 1, 2, x);
        assert!((y + x).norm() < 1e-12, "ξ_{{4,1}}² is the antipodal map");
    }
}
