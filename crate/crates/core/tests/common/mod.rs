#![allow(dead_code)]

use lensgeom::s3geom::{Geodesic, PointS2, Quat};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn unit_quat(rng: &mut impl Rng) -> Quat {
    loop {
        let v = Quat::new(
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
        );
        let n = v.norm();
        if n > 0.1 && n <= 1.0 {
            return v.scale(1.0 / n);
        }
    }
}

pub fn unit_s2(rng: &mut impl Rng) -> PointS2 {
    let z: f64 = rng.gen_range(-1.0..1.0);
    let phi: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    let r = (1.0 - z * z).sqrt();
    PointS2::new(r * phi.cos(), r * phi.sin(), z)
}

/// A point at S² distance `d` from `a`, in a random direction.
pub fn at_distance(rng: &mut impl Rng, a: PointS2, d: f64) -> PointS2 {
    let u = loop {
        let c = a.cross(unit_s2(rng));
        let n = c.dot(c).sqrt();
        if n > 0.1 {
            break PointS2::new(c.x / n, c.y / n, c.z / n);
        }
    };
    let (s, c) = d.sin_cos();
    PointS2::normalized(c * a.x + s * u.x, c * a.y + s * u.y, c * a.z + s * u.z)
}

/// Orthonormal pair in R⁴ via Gram-Schmidt.
pub fn orthonormal_pair(rng: &mut impl Rng) -> (Quat, Quat) {
    let a = unit_quat(rng);
    loop {
        let b = unit_quat(rng);
        let c = b - a.scale(a.dot(b));
        if c.norm() > 0.1 {
            return (a, c.normalize());
        }
    }
}

pub fn random_geodesic(rng: &mut impl Rng) -> Geodesic {
    Geodesic::new(unit_s2(rng), unit_s2(rng))
}

/// Distance in S³ from `x` to the great circle through the orthonormal pair
/// `(e1, e2)`, computed from the projection onto the plane.
pub fn dist_to_circle(x: Quat, e1: Quat, e2: Quat) -> f64 {
    let (u, v) = (x.dot(e1), x.dot(e2));
    let rest = x - e1.scale(u) - e2.scale(v);
    rest.norm().atan2(u.hypot(v))
}

pub fn s3_distance(x: Quat, y: Quat) -> f64 {
    2.0 * (x - y).norm().atan2((x + y).norm())
}
