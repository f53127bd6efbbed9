mod common;

use common::*;
use lensgeom::lens::{are_isometric, LensSpace};
use lensgeom::s3geom::*;
use proptest::prelude::*;
use std::f64::consts::{FRAC_PI_4, TAU};

#[test]
fn plane_outputs_are_unit_and_pure_imaginary() {
    let mut r = rng(1);
    for _ in 0..1000 {
        let (a, b) = orthonormal_pair(&mut r);
        let g = geodesic_from_plane(a, b).unwrap();
        for p in [g.first, g.second] {
            let q = p.as_quat();
            assert!((q.norm() - 1.0).abs() < 1e-10);
            assert_eq!(q.a, 0.0);
        }
    }
}

#[test]
fn plane_map_matches_the_rho_orbit_of_the_base_plane() {
    let mut r = rng(2);
    for _ in 0..100 {
        let q1 = unit_quat(&mut r);
        let q2 = unit_quat(&mut r);
        let g = geodesic_from_plane(rho_apply(q1, q2, Quat::ONE), rho_apply(q1, q2, Quat::I)).unwrap();
        let want_a = (q1 * Quat::I * q1.inverse()).imag();
        let want_b = (q2 * Quat::I * q2.inverse()).imag();
        assert!(g.first.distance(want_a) < 1e-9);
        assert!(g.second.distance(want_b) < 1e-9);
    }
}

#[test]
fn jk_plane_by_sampling() {
    // every point of the circle through j and k is moved along the circle by
    // the rotation ρ(e^{iθ}, e^{-iθ}), which is how (i, -i) acts
    let g = geodesic_from_plane(Quat::J, Quat::K).unwrap();
    assert!(g.first.distance(PointS2::new(1.0, 0.0, 0.0)) < 1e-15);
    assert!(g.second.distance(PointS2::new(-1.0, 0.0, 0.0)) < 1e-15);
    let theta: f64 = 0.37;
    let u = Quat::new(theta.cos(), theta.sin(), 0.0, 0.0);
    for k in 0..50 {
        let s = TAU * k as f64 / 50.0;
        let x = Quat::J.scale(s.cos()) + Quat::K.scale(s.sin());
        let y = rho_apply(u, u.conj(), x);
        assert!(dist_to_circle(y, Quat::J, Quat::K) < 1e-12);
    }
}

/// Minimum distance between two great circles: a 10⁴ point grid on the
/// first, exact distance to the second, then golden-section refinement.
fn sampled_circle_distance(g1: Geodesic, g2: Geodesic) -> f64 {
    let (e1, e2) = g1.plane();
    let (f1, f2) = g2.plane();
    let at = |s: f64| dist_to_circle(e1.scale(s.cos()) + e2.scale(s.sin()), f1, f2);
    let n = 10_000;
    let h = TAU / n as f64;
    let (best_i, _) = (0..n)
        .map(|i| (i, at(h * i as f64)))
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .unwrap();
    let (mut lo, mut hi) = (h * (best_i as f64 - 1.0), h * (best_i as f64 + 1.0));
    let gr = (5f64.sqrt() - 1.0) / 2.0;
    for _ in 0..60 {
        let m1 = hi - gr * (hi - lo);
        let m2 = lo + gr * (hi - lo);
        if at(m1) < at(m2) {
            hi = m2;
        } else {
            lo = m1;
        }
    }
    at(0.5 * (lo + hi))
}

#[test]
fn distance_criterion_matches_sampled_intersection() {
    let mut r = rng(3);
    let mut checked = 0;
    let mut meeting = 0;
    for i in 0..500 {
        let g1 = random_geodesic(&mut r);
        let g2 = if i % 2 == 0 {
            let d = r.gen_range(0.0..3.0);
            Geodesic::new(at_distance(&mut r, g1.first, d), at_distance(&mut r, g1.second, d))
        } else {
            random_geodesic(&mut r)
        };
        let gap = (g1.first.distance(g2.first) - g1.second.distance(g2.second)).abs();
        if gap <= 1e-3 && gap > 1e-12 {
            continue;
        }
        let sampled = sampled_circle_distance(g1, g2) < 1e-4;
        assert_eq!(geodesics_intersect(g1, g2, 1e-9), sampled, "pair {i}, gap {gap}");
        checked += 1;
        meeting += usize::from(sampled);
    }
    assert!(checked > 450);
    assert!(meeting > 200);
}

#[test]
fn hopf_fibres_are_pairwise_disjoint() {
    let mut r = rng(4);
    let i = PointS2::new(1.0, 0.0, 0.0);
    let fibres: Vec<Geodesic> = (0..40)
        .map(|k| {
            let first = if k % 2 == 0 { i } else { i.neg() };
            Geodesic::new(first, unit_s2(&mut r))
        })
        .collect();
    for (a, g) in fibres.iter().enumerate() {
        for (b, h) in fibres.iter().enumerate() {
            let same = g.canonical().second.distance(h.canonical().second) < 1e-12;
            assert_eq!(geodesics_intersect(*g, *h, 1e-9), same || a == b);
        }
    }
}

#[test]
fn hopf_fibre_of_a_point_has_first_coordinate_i() {
    let mut r = rng(5);
    for _ in 0..200 {
        let x = unit_quat(&mut r);
        let g = geodesic_from_plane(x, Quat::I * x).unwrap();
        assert!(g.first.distance(PointS2::new(1.0, 0.0, 0.0)) < 1e-12);
        // and the projection is constant along the fibre
        let h = hopf_project(x);
        for k in 0..8 {
            let y = g.point(TAU * k as f64 / 8.0);
            assert!(hopf_project(y).distance(h) < 1e-9);
        }
    }
}

#[test]
fn d8_composition_is_pointwise() {
    let mut r = rng(6);
    let points: Vec<Quat> = (0..100).map(|_| unit_quat(&mut r)).collect();
    for g in IsometryD8::ALL {
        for h in IsometryD8::ALL {
            let gh = g.compose(h);
            for &x in &points {
                let lhs = d8_apply(g, d8_apply(h, x));
                assert!((lhs - d8_apply(gh, x)).norm() < 1e-12, "{g} {h}");
            }
        }
    }
}

/// Exponent read off numerically: choose the power of ξ_{q1} that fixes the
/// first factor of `ξ_{q1}^k ∘ g ξ_{q2} g⁻¹`, then measure the rotation of
/// the second factor.
fn numeric_exponent(g: IsometryD8, p: u64, q1: u64, q2: u64) -> u64 {
    let x = Quat::from_complex((0.6, 0.2), (-0.3, 0.71)).normalize();
    let conj = |y: Quat| d8_apply(g, xi_apply(p, q2, 1, d8_apply(g.inverse(), y)));
    let phase = |before: (f64, f64), after: (f64, f64)| {
        let re = after.0 * before.0 + after.1 * before.1;
        let im = after.1 * before.0 - after.0 * before.1;
        let steps = (im.atan2(re) / TAU * p as f64).round() as i64;
        steps.rem_euclid(p as i64) as u64
    };
    let y = conj(x);
    let k = (p - phase(x.z(), y.z())) % p;
    let z = xi_apply(p, q1, k, y);
    assert!(phase(x.z(), z.z()) == 0);
    phase(x.w(), z.w())
}

#[test]
fn exponent_table_matches_numeric_conjugation() {
    for p in [5u64, 7, 11, 12, 13] {
        for q1 in 1..p {
            for q2 in 1..p {
                if num_integer::gcd(q1, p) != 1 || num_integer::gcd(q2, p) != 1 {
                    continue;
                }
                for g in IsometryD8::ALL {
                    let table = d8_conjugate_exponent(g, p, q1, q2);
                    let seen = numeric_exponent(g, p, q1, q2);
                    assert!(seen == table || seen == (p - table) % p, "{g} p={p} q1={q1} q2={q2}");
                }
            }
        }
    }
}

#[test]
fn certificate_is_valid_iff_not_isometric() {
    for p in 2u64..=200 {
        for q1 in 1..p {
            for q2 in 1..p {
                if q1 == q2 || num_integer::gcd(q1, p) != 1 || num_integer::gcd(q2, p) != 1 {
                    continue;
                }
                let cert = distinctness_certificate(p, q1, q2).unwrap();
                let iso = are_isometric(LensSpace::new(p, q1).unwrap(), LensSpace::new(p, q2).unwrap()).unwrap();
                assert_eq!(cert.is_valid(), !iso, "p={p} q1={q1} q2={q2}");
            }
        }
    }
}

/// Exact distance from `x` to `F(axis, radius)`.
fn torus_gap(axis: Geodesic, radius: f64, x: Quat) -> f64 {
    (axis.distance_to(x) - radius).abs()
}

#[test]
fn tangency_kinds_by_sampling() {
    let mut r = rng(7);
    let rho = FRAC_PI_4;
    for i in 0..100 {
        let axis1 = random_geodesic(&mut r);
        let (da, db) = match i % 3 {
            0 => (0.0, r.gen_range(0.05..0.2)),
            1 => (r.gen_range(0.05..0.2), 0.0),
            _ => (r.gen_range(0.05..0.2), r.gen_range(0.05..0.2)),
        };
        let axis2 = Geodesic::new(at_distance(&mut r, axis1.first, da), at_distance(&mut r, axis1.second, db));
        let t = cmc_tangency(axis1, axis2, rho, 1e-9).unwrap();
        let want = if i % 3 == 2 { TangencyKind::TwoAntipodalPoints } else { TangencyKind::OneGeodesic };
        assert_eq!(t.kind, want);
        let locus = tangency_locus(axis1, axis2, rho, 64, 1e-9).unwrap();
        for &x in &locus {
            assert!(torus_gap(axis1, rho, x) < 1e-9);
            assert!(torus_gap(axis2, t.t0, x) < 1e-9);
        }
        // the inner torus stays inside and touches only at the locus
        let inner = CmcTorus::new(axis2, t.t0).unwrap();
        let n = 120;
        for a in 0..n {
            for b in 0..n {
                let x = inner.point(TAU * a as f64 / n as f64, TAU * b as f64 / n as f64);
                assert!(axis1.distance_to(x) <= rho + 1e-9);
                let far = locus.iter().map(|y| s3_distance(x, *y)).fold(f64::INFINITY, f64::min);
                if far > 0.25 {
                    assert!(torus_gap(axis1, rho, x) > 1e-3, "config {i}");
                }
            }
        }
    }
}

#[test]
fn coincident_axes() {
    let mut r = rng(8);
    let g = random_geodesic(&mut r);
    let t = cmc_tangency(g, g, 0.5, 1e-9).unwrap();
    assert_eq!(t.kind, TangencyKind::Coincide);
    assert_eq!(t.t0, 0.5);
    assert!(tangency_locus(g, g, 0.5, 16, 1e-9).unwrap().is_empty());
    assert!(cmc_tangency(g, g.reversed(), 0.5, 1e-9).unwrap().kind == TangencyKind::Coincide);
}

use rand::Rng;

proptest! {
    #[test]
    fn hopf_projection_is_fibre_invariant(a in -1.0f64..1.0, b in -1.0f64..1.0, c in -1.0f64..1.0, d in -1.0f64..1.0, th in 0.0f64..TAU) {
        let x = Quat::new(a, b, c, d);
        prop_assume!(x.norm() > 0.1);
        let x = x.normalize();
        let (s, co) = th.sin_cos();
        let rot = |(re, im): (f64, f64)| (co * re - s * im, s * re + co * im);
        let y = Quat::from_complex(rot(x.z()), rot(x.w()));
        prop_assert!(hopf_project(x).distance(hopf_project(y)) < 1e-9);
    }

    #[test]
    fn canonical_is_idempotent_and_identifies_reversal(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = random_geodesic(&mut r);
        prop_assert_eq!(g.canonical(), g.canonical().canonical());
        prop_assert_eq!(g.canonical(), g.reversed().canonical());
    }

    #[test]
    fn plane_roundtrip(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = random_geodesic(&mut r);
        let (x, y) = g.plane();
        let h = geodesic_from_plane(x, y).unwrap();
        prop_assert!(h.first.distance(g.first) < 1e-9);
        prop_assert!(h.second.distance(g.second) < 1e-9);
    }

    #[test]
    fn clifford_torus_contains_its_points(seed in any::<u64>(), s in 0.0f64..TAU, t in 0.0f64..TAU) {
        let mut r = rng(seed);
        let torus = CliffordTorus::new(unit_s2(&mut r), unit_s2(&mut r));
        prop_assert!(torus.contains(torus.point(s, t), 1e-9));
    }
}
