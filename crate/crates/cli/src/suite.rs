//! The twelve acceptance criteria, each checked against an oracle that does
//! not share code with the routine under test.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI, TAU};
use std::time::{Duration, Instant};

use lensgeom::jacobi::{blowup_verdict, BlowupCandidate, Verdict};
use lensgeom::lawson::{lawson_area, LawsonSurface};
use lensgeom::lens::{self, CoveringData, KleinFamily, LensSpace, ToriFamily};
use lensgeom::orbits;
use lensgeom::period::{self, PeriodParams};
use lensgeom::s3geom::{self, CmcTorus, Geodesic, PointS2, Quat, TangencyKind};
use num_integer::{gcd, Integer};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Tolerances and sizes, pinned here so the suite is reproducible.
pub mod pinned {
    pub const AREA_CLIFFORD_TOL: f64 = 1e-9;
    pub const AREA_SIMPSON_TOL: f64 = 1e-8;
    pub const PERIOD_PAIRS: [(u64, u64); 5] = [(1, 2), (1, 3), (2, 3), (2, 5), (3, 4)];
    pub const PERIOD_ANGLES: usize = 20;
    pub const SCAN_POINTS: usize = 100;
    pub const MIN_DERIVATIVE: f64 = 1e-6;
    pub const FD_STEP: f64 = 1e-4;
    pub const FD_TOL: f64 = 1e-5;
    pub const LIMIT_OFFSET: f64 = 1e-4;
    pub const LIMIT_TOL: f64 = 1e-3;
    pub const ORBIT_MAX_P: u64 = 300;
    pub const ORBIT_MAX_DIRECTION: u64 = 6;
    pub const REALIZE_PER_CONFIG: usize = 20;
    pub const REALIZE_SEARCH_LIMIT: u64 = 5000;
    pub const JACOBI_MAX_NORM: u64 = 25;
    pub const JACOBI_MAX_K: u64 = 4;
    pub const JACOBI_BOUNDARY: f64 = 1e-12;
    pub const CLASSIFY_MAX_P: u64 = 400;
    pub const BURNSIDE_MAX_P: u64 = 2000;
    pub const CERTIFICATE_MAX_P: u64 = 200;
    pub const GENUS_MAX_P: i64 = 100;
    pub const DOUBLINGS: u32 = 20;
    pub const GEODESIC_PAIRS: usize = 500;
    pub const BORDERLINE: f64 = 1e-3;
    pub const INTERSECT_TOL: f64 = 1e-9;
    pub const SAMPLED_MEET: f64 = 1e-4;
    pub const TANGENCY_CONFIGS: usize = 100;
    pub const TANGENCY_GRID: usize = 120;
    pub const TANGENCY_NEAR: f64 = 1e-4;
    pub const TANGENCY_FAR: f64 = 1e-3;
    pub const TANGENCY_EXCLUSION: f64 = 0.25;
}

use pinned::*;

#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub id: u32,
    pub name: &'static str,
    pub passed: bool,
    /// Deterministic summary of what was checked.
    pub detail: String,
    pub elapsed: Duration,
    pub budget: Option<Duration>,
}

type Check = fn(u64) -> (bool, String);

const CRITERIA: [(u32, &str, Check, Option<u64>); 12] = [
    (1, "lawson areas", lawson_areas, Some(1)),
    (2, "period bounds", period_bounds, Some(10)),
    (3, "period monotonicity", monotonicity, None),
    (4, "period limit", period_limit, None),
    (5, "orbit formula", orbit_formula, Some(30)),
    (6, "realized configurations", realized_configurations, None),
    (7, "jacobi exclusion list", jacobi_exclusions, None),
    (8, "classification table", classification, None),
    (9, "burnside count", burnside, Some(5)),
    (10, "distinctness certificates", certificates, None),
    (11, "genus arithmetic", genus, None),
    (12, "circles and tubes", geometry, None),
];

/// Runs the selected criteria (all when `only` is empty), in order.
pub fn run(seed: u64, only: &[u32]) -> Vec<CriterionResult> {
    CRITERIA
        .iter()
        .filter(|(id, ..)| only.is_empty() || only.contains(id))
        .map(|&(id, name, check, budget)| {
            let start = Instant::now();
            let (ok, detail) = check(seed);
            let elapsed = start.elapsed();
            let budget = budget.map(Duration::from_secs);
            let in_budget = budget.is_none_or(|b| elapsed <= b);
            let detail = if in_budget { detail } else { format!("{detail}; over time budget") };
            CriterionResult { id, name, passed: ok && in_budget, detail, elapsed, budget }
        })
        .collect()
}

/// One line per criterion.
pub fn summary_line(r: &CriterionResult) -> String {
    let budget = r.budget.map(|b| format!(", budget {}s", b.as_secs())).unwrap_or_default();
    format!(
        "criterion {:>2} {:<26} {} ({:.2}s{budget}) {}",
        r.id,
        r.name,
        if r.passed { "PASS" } else { "FAIL" },
        r.elapsed.as_secs_f64(),
        r.detail
    )
}

// Negated so that a NaN in the condition fails the criterion.
macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return (false, format!($($fmt)+));
        }
    };
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

macro_rules! tryc {
    ($e:expr) => {
        match ok($e) {
            Ok(v) => v,
            Err(msg) => return (false, msg),
        }
    };
}

/// Composite Simpson rule with `2n` panels.
fn simpson(f: impl Fn(f64) -> f64, a: f64, b: f64, n: usize) -> f64 {
    let h = (b - a) / (2 * n) as f64;
    let mut s = f(a) + f(b);
    for i in 1..2 * n {
        s += f(a + h * i as f64) * if i % 2 == 1 { 4.0 } else { 2.0 };
    }
    s * h / 3.0
}

fn lawson_areas(_seed: u64) -> (bool, String) {
    let double = 4.0 * PI * PI;
    let mut areas = Vec::new();
    for m in 1..=3u64 {
        let a = tryc!(lawson_area(tryc!(LawsonSurface::new(1, m))));
        let mf = m as f64;
        let oracle = 4.0 * PI * simpson(|y| (y.cos().powi(2) + mf * mf * y.sin().powi(2)).sqrt(), 0.0, FRAC_PI_2, 2000);
        ensure!((a.value - oracle).abs() < AREA_SIMPSON_TOL, "(1,{m}): {} vs Simpson {oracle}", a.value);
        areas.push(a);
    }
    ensure!((areas[0].value - 2.0 * PI * PI).abs() < AREA_CLIFFORD_TOL, "(1,1): {}", areas[0].value);
    let (a2, a3) = (areas[1], areas[2]);
    ensure!((30.43..=30.45).contains(&a2.value), "(1,2): {}", a2.value);
    ensure!(a2.value + a2.abs_err < double, "(1,2) not below 4π²");
    ensure!((41.98..=42.00).contains(&a3.value), "(1,3): {}", a3.value);
    ensure!(a3.value - a3.abs_err > double, "(1,3) not above 4π²");
    (true, format!("areas {:.6}, {:.6}, {:.6}", areas[0].value, a2.value, a3.value))
}

fn limit_oracle(n: u64, m: u64) -> f64 {
    let (n, m) = (n as f64, m as f64);
    2.0 * PI * ((n * n + m * m) / (2.0 * m * m)).sqrt()
}

fn angles(count: usize) -> Vec<f64> {
    let (lo, hi) = (0.05, FRAC_PI_2 - 0.05);
    (0..count).map(|i| lo + (hi - lo) * i as f64 / (count - 1) as f64).collect()
}

fn period_bounds(_seed: u64) -> (bool, String) {
    let mut checked = 0;
    let mut min_margin = f64::INFINITY;
    for (n, m) in PERIOD_PAIRS {
        let upper = limit_oracle(n, m);
        for a in angles(PERIOD_ANGLES) {
            let p = tryc!(period::period(tryc!(PeriodParams::new(n, m, a))));
            ensure!(p.value - p.abs_err > PI, "({n},{m},{a}): {} not above π", p.value);
            ensure!(p.value + p.abs_err < upper, "({n},{m},{a}): {} not below {upper}", p.value);
            min_margin = min_margin.min((p.value - PI).min(upper - p.value));
            checked += 1;
        }
    }
    (true, format!("{checked} evaluations, smallest margin {min_margin:.3e}"))
}

fn monotonicity(_seed: u64) -> (bool, String) {
    let mut worst_fd = 0.0f64;
    let mut min_derivative = f64::INFINITY;
    for (n, m) in PERIOD_PAIRS {
        let scan = tryc!(period::monotonicity_scan(n, m, SCAN_POINTS));
        ensure!(scan.violations.is_empty(), "({n},{m}): {} violations", scan.violations.len());
        ensure!(scan.points.len() == SCAN_POINTS, "({n},{m}): {} points", scan.points.len());
        for w in scan.points.windows(2) {
            ensure!(w[1].value > w[0].value, "({n},{m}): decrease at a = {}", w[1].a);
        }
        for pt in &scan.points {
            ensure!(pt.derivative > MIN_DERIVATIVE, "({n},{m},{}): derivative {}", pt.a, pt.derivative);
            let eval = |a: f64| period::period(PeriodParams::new(n, m, a)?).map(|p| p.value);
            let fd = (tryc!(eval(pt.a + FD_STEP)) - tryc!(eval(pt.a - FD_STEP))) / (2.0 * FD_STEP);
            let gap = (fd - pt.derivative).abs();
            ensure!(gap < FD_TOL, "({n},{m},{}): derivative {} vs difference {fd}", pt.a, pt.derivative);
            worst_fd = worst_fd.max(gap);
            min_derivative = min_derivative.min(pt.derivative);
        }
    }
    (true, format!("0 violations, min derivative {min_derivative:.4}, worst difference gap {worst_fd:.2e}"))
}

fn period_limit(_seed: u64) -> (bool, String) {
    let mut worst = 0.0f64;
    for (n, m) in PERIOD_PAIRS {
        let p = tryc!(period::period(tryc!(PeriodParams::new(n, m, FRAC_PI_2 - LIMIT_OFFSET))));
        let gap = (p.value - limit_oracle(n, m)).abs();
        ensure!(gap < LIMIT_TOL, "({n},{m}): gap {gap}");
        worst = worst.max(gap);
    }
    (true, format!("largest gap {worst:.3e}"))
}

/// Number of distinct residues `(m j - n (j q mod p)) mod p`: one per
/// parallel `(n, m)`-line through the orbit.
fn residue_count(p: u64, q: u64, n: u64, m: u64, scratch: &mut Vec<bool>) -> u64 {
    let (p, q, n, m) = (p as i64, q as i64, n as i64, m as i64);
    scratch.clear();
    scratch.resize(p as usize, false);
    let mut count = 0;
    for j in 0..p {
        let r = (m * j - n * ((j * q) % p)).rem_euclid(p) as usize;
        if !scratch[r] {
            scratch[r] = true;
            count += 1;
        }
    }
    count
}

fn orbit_formula(_seed: u64) -> (bool, String) {
    let mut dirs = Vec::new();
    for n in 1..=ORBIT_MAX_DIRECTION {
        for m in 1..=ORBIT_MAX_DIRECTION {
            if gcd(n, m) == 1 {
                dirs.push((n, m));
            }
        }
    }
    let mut scratch = Vec::new();
    let mut checked = 0u64;
    for p in 2..=ORBIT_MAX_P {
        for q in (1..p).filter(|q| gcd(*q, p) == 1) {
            let l = tryc!(LensSpace::new(p, q));
            for &(n, m) in &dirs {
                let k = tryc!(orbits::curves_containing_orbit(l, n, m));
                let brute = residue_count(p, q, n, m, &mut scratch);
                ensure!(k == brute, "L({p},{q}) ({n},{m}): {k} vs {brute}");
                checked += 1;
            }
        }
    }
    (true, format!("{checked} (space, direction) pairs"))
}

fn realized_configurations(_seed: u64) -> (bool, String) {
    let mut configs = vec![(2, 3, 1), (1, 2, 5), (3, 4, 2), (2, 5, 3)];
    configs.extend((1..=5).map(|m| (1, m, 1)));
    let mut scratch = Vec::new();
    let mut total = 0;
    for (n, m, k) in configs {
        let mut found = 0;
        let mut p = 1;
        while found < REALIZE_PER_CONFIG && p <= REALIZE_SEARCH_LIMIT {
            if let Some(l) = tryc!(orbits::realize_configuration(n, m, k, p)) {
                let brute = residue_count(l.p(), l.q(), n, m, &mut scratch);
                ensure!(brute == k, "({n},{m},{k}) p={p}: {l} has {brute} curves");
                found += 1;
            }
            p += 1;
        }
        ensure!(found == REALIZE_PER_CONFIG, "({n},{m},{k}): only {found} realizations");
        total += found;
    }
    (true, format!("{total} realizations checked"))
}

fn jacobi_exclusions(_seed: u64) -> (bool, String) {
    let mut obstructed = Vec::new();
    let mut count = 0;
    for n in 1..=5u64 {
        for m in n..=5u64 {
            if gcd(n, m) != 1 || n * n + m * m > JACOBI_MAX_NORM {
                continue;
            }
            for k in 1..=JACOBI_MAX_K {
                let v = blowup_verdict(tryc!(BlowupCandidate::new(n, m, k)));
                let omega = (2.0 / (n * n + m * m) as f64).sqrt();
                let spacing = TAU / k as f64;
                let product = omega * spacing;
                ensure!((v.omega * v.spacing - product).abs() < 1e-12, "({n},{m},{k}): ω·spacing mismatch");
                let want = if product > PI + JACOBI_BOUNDARY {
                    Verdict::Obstructed
                } else {
                    Verdict::Indeterminate
                };
                ensure!(v.verdict == want, "({n},{m},{k}): {:?}, ω·spacing/π = {}", v.verdict, product / PI);
                if v.verdict == Verdict::Obstructed {
                    obstructed.push((n, m, k));
                }
                count += 1;
            }
        }
    }
    ensure!(obstructed == [(1, 1, 1), (1, 2, 1)], "obstructed set {obstructed:?}");
    let boundary = blowup_verdict(tryc!(BlowupCandidate::new(1, 1, 2)));
    ensure!(boundary.verdict == Verdict::Indeterminate, "(1,1,2): {:?}", boundary.verdict);
    (true, format!("{count} candidates, obstructed {obstructed:?}"))
}

fn classification(_seed: u64) -> (bool, String) {
    let mut rows = 0;
    for p in 2..=CLASSIFY_MAX_P {
        for q in (1..p).filter(|q| gcd(*q, p) == 1) {
            let l = tryc!(LensSpace::new(p, q));
            let c = lens::classify_invariant_tori(l);
            let flip = q == 1 || q == p - 1;
            let klein_expected = p % 4 == 0 && {
                let h = p / 4;
                q == 2 * h + 1 || q + 1 == 2 * h
            };
            let want = match p {
                2 => (ToriFamily::FamilyRP2xRP2, KleinFamily::None),
                4 => (ToriFamily::FamilyRP2, KleinFamily::FamilyS1xRP2),
                _ if flip => (ToriFamily::FamilyRP2, KleinFamily::None),
                _ if klein_expected => (ToriFamily::UniquePoint, KleinFamily::FamilyS1),
                _ => (ToriFamily::UniquePoint, KleinFamily::None),
            };
            ensure!((c.tori, c.klein) == want, "{l}: {:?}", c);
            ensure!(lens::admits_klein_bottle(l) == klein_expected, "{l}: Klein admissibility");
            ensure!((c.klein != KleinFamily::None) == klein_expected, "{l}: Klein family");
            ensure!(lens::is_flippable(l) == flip, "{l}: flippability");
            rows += 1;
        }
    }
    (true, format!("{rows} lens spaces"))
}

fn inverse_by_euclid(q: u64, p: u64) -> u64 {
    let e = (q as i64).extended_gcd(&(p as i64));
    e.x.rem_euclid(p as i64) as u64
}

/// Orbits of the units under `q ↦ -q` and `q ↦ q⁻¹`, counted by marking.
fn orbit_count(p: u64) -> u64 {
    let mut seen = vec![false; p as usize];
    let mut orbits = 0;
    for q in 1..p {
        if gcd(q, p) != 1 || seen[q as usize] {
            continue;
        }
        let inv = inverse_by_euclid(q, p);
        for r in [q, (p - q) % p, inv, (p - inv) % p] {
            seen[r as usize] = true;
        }
        orbits += 1;
    }
    orbits
}

fn burnside(_seed: u64) -> (bool, String) {
    for p in 2..=BURNSIDE_MAX_P {
        let c = tryc!(lens::count_isometry_classes(p));
        let direct = orbit_count(p);
        ensure!(c.n_exact == direct, "p={p}: {} vs enumeration {direct}", c.n_exact);
        let units: Vec<u64> = (1..p).filter(|q| gcd(*q, p) == 1).collect();
        let fixed = [
            units.len() as u64,
            units.iter().filter(|q| (2 * **q) % p == 0).count() as u64,
            units.iter().filter(|q| (**q * **q) % p == 1 % p).count() as u64,
            units.iter().filter(|q| (**q * **q + 1) % p == 0).count() as u64,
        ];
        let sum: u64 = fixed.iter().sum();
        ensure!(sum % 4 == 0 && sum / 4 == direct, "p={p}: Burnside sum {sum}");
        ensure!(c.fixed_counts == fixed, "p={p}: fixed counts {:?}", c.fixed_counts);
        ensure!(4 * direct >= units.len() as u64, "p={p}: below φ/4");
    }
    let n5 = tryc!(lens::count_isometry_classes(5)).n_exact;
    let n7 = tryc!(lens::count_isometry_classes(7)).n_exact;
    ensure!(n5 == 2 && n7 == 2, "N(5) = {n5}, N(7) = {n7}");
    (true, format!("p ≤ {BURNSIDE_MAX_P}, N(5) = N(7) = 2"))
}

fn certificates(_seed: u64) -> (bool, String) {
    let mut pairs = 0u64;
    let mut valid = 0u64;
    for p in 3..=CERTIFICATE_MAX_P {
        let units: Vec<u64> = (1..p).filter(|q| gcd(*q, p) == 1).collect();
        // inverses by search, independent of the library's arithmetic
        let inv: Vec<u64> = (0..p).map(|q| (1..p).find(|r| (q * r) % p == 1).unwrap_or(0)).collect();
        for &q1 in &units {
            let class = [q1, p - q1, inv[q1 as usize], p - inv[q1 as usize]];
            for &q2 in &units {
                if q1 == q2 {
                    continue;
                }
                let isometric = class.contains(&q2);
                let cert = tryc!(s3geom::distinctness_certificate(p, q1, q2));
                ensure!(cert.is_valid() != isometric, "L({p},{q1}) vs L({p},{q2}): {cert:?}");
                let lib = tryc!(lens::are_isometric(tryc!(LensSpace::new(p, q1)), tryc!(LensSpace::new(p, q2))));
                ensure!(lib == isometric, "L({p},{q1}) vs L({p},{q2}): isometry test");
                pairs += 1;
                valid += u64::from(cert.is_valid());
            }
        }
    }
    (true, format!("{pairs} ordered pairs, {valid} certified distinct"))
}

fn genus(_seed: u64) -> (bool, String) {
    for p in 1..=GENUS_MAX_P {
        for (g, excess, want) in [(0, 1, p - 1), (1, 0, p), (2, -1, p + 1)] {
            for components in 1..4 {
                let w1 = 2 * (components + excess);
                let data = CoveringData { p, components, genus_quotient: g, w1, w0: 0 };
                let got = tryc!(lens::covering_genus(data));
                ensure!(got == want, "{data:?}: {got}");
            }
        }
        let lifted = tryc!(lens::lift_genus(2, p as u64));
        ensure!(lifted == p + 1, "lift_genus(2, {p}) = {lifted}");
        if p >= 2 {
            let q = tryc!(lens::quotient_genus(2, p as u64));
            ensure!(!q.integral, "quotient of genus 2 by {p} is integral");
            ensure!(q.numer * p == q.denom * (p + 1), "quotient of genus 2 by {p}: {}/{}", q.numer, q.denom);
        }
    }
    for n in 0..=DOUBLINGS {
        let g = tryc!(lens::iterated_double_cover_genus(n));
        ensure!(g == (1u64 << n) + 1, "{n} doublings: {g}");
    }
    (true, format!("p ≤ {GENUS_MAX_P}, doublings ≤ {DOUBLINGS}"))
}

fn unit_s2(rng: &mut impl Rng) -> PointS2 {
    let z: f64 = rng.gen_range(-1.0..1.0);
    let phi: f64 = rng.gen_range(0.0..TAU);
    let r = (1.0 - z * z).sqrt();
    PointS2::new(r * phi.cos(), r * phi.sin(), z)
}

fn at_distance(rng: &mut impl Rng, a: PointS2, d: f64) -> PointS2 {
    let u = loop {
        let b = unit_s2(rng);
        let c = [a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x];
        let n = (c[0] * c[0] + c[1] * c[1] + c[2] * c[2]).sqrt();
        if n > 0.1 {
            break [c[0] / n, c[1] / n, c[2] / n];
        }
    };
    let (s, c) = d.sin_cos();
    PointS2::normalized(c * a.x + s * u[0], c * a.y + s * u[1], c * a.z + s * u[2])
}

fn sphere_distance(a: PointS2, b: PointS2) -> f64 {
    let c = [a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x];
    (c[0] * c[0] + c[1] * c[1] + c[2] * c[2]).sqrt().atan2(a.x * b.x + a.y * b.y + a.z * b.z)
}

/// Distance from `x` to the great circle spanned by orthonormal `e1`, `e2`.
fn dist_to_circle(x: Quat, e1: Quat, e2: Quat) -> f64 {
    let (u, v) = (x.dot(e1), x.dot(e2));
    (x - e1.scale(u) - e2.scale(v)).norm().atan2(u.hypot(v))
}

fn s3_distance(x: Quat, y: Quat) -> f64 {
    2.0 * (x - y).norm().atan2((x + y).norm())
}

fn golden_min(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, iters: usize) -> f64 {
    let gr = (5f64.sqrt() - 1.0) / 2.0;
    for _ in 0..iters {
        let m1 = hi - gr * (hi - lo);
        let m2 = lo + gr * (hi - lo);
        if f(m1) < f(m2) {
            hi = m2;
        } else {
            lo = m1;
        }
    }
    0.5 * (lo + hi)
}

/// Smallest distance between two great circles, by sampling the first and
/// refining the best sample.
fn sampled_circle_distance(g1: Geodesic, g2: Geodesic) -> f64 {
    let (e1, e2) = g1.plane();
    let (f1, f2) = g2.plane();
    let at = |s: f64| dist_to_circle(e1.scale(s.cos()) + e2.scale(s.sin()), f1, f2);
    let n = 10_000;
    let h = TAU / n as f64;
    let best = (0..n).min_by(|a, b| at(h * *a as f64).total_cmp(&at(h * *b as f64))).unwrap_or(0) as f64;
    at(golden_min(at, h * (best - 1.0), h * (best + 1.0), 60))
}

fn geometry(seed: u64) -> (bool, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checked = 0;
    let mut meeting = 0;
    let mut i = 0;
    while checked < GEODESIC_PAIRS {
        let g1 = Geodesic::new(unit_s2(&mut rng), unit_s2(&mut rng));
        let g2 = if i % 2 == 0 {
            let d = rng.gen_range(0.0..3.0);
            Geodesic::new(at_distance(&mut rng, g1.first, d), at_distance(&mut rng, g1.second, d))
        } else {
            Geodesic::new(unit_s2(&mut rng), unit_s2(&mut rng))
        };
        i += 1;
        let (c1, c2) = (g1.canonical(), g2.canonical());
        let gap = (sphere_distance(c1.first, c2.first) - sphere_distance(c1.second, c2.second)).abs();
        if gap <= BORDERLINE && gap > 1e-12 {
            continue;
        }
        let sampled = sampled_circle_distance(g1, g2) < SAMPLED_MEET;
        ensure!(s3geom::geodesics_intersect(g1, g2, INTERSECT_TOL) == sampled, "pair {i}: gap {gap}");
        checked += 1;
        meeting += usize::from(sampled);
    }

    let rho = FRAC_PI_4;
    let mut worst_contact = 0.0f64;
    let mut closest_far = f64::INFINITY;
    for c in 0..TANGENCY_CONFIGS {
        let axis1 = Geodesic::new(unit_s2(&mut rng), unit_s2(&mut rng));
        let (da, db) = match c % 3 {
            0 => (0.0, rng.gen_range(0.05..0.2)),
            1 => (rng.gen_range(0.05..0.2), 0.0),
            _ => (rng.gen_range(0.05..0.2), rng.gen_range(0.05..0.2)),
        };
        let axis2 = Geodesic::new(at_distance(&mut rng, axis1.first, da), at_distance(&mut rng, axis1.second, db));
        let t = tryc!(s3geom::cmc_tangency(axis1, axis2, rho, INTERSECT_TOL));
        let want = if c % 3 == 2 { TangencyKind::TwoAntipodalPoints } else { TangencyKind::OneGeodesic };
        ensure!(t.kind == want, "config {c}: {:?}", t.kind);
        let locus = tryc!(s3geom::tangency_locus(axis1, axis2, rho, 64, INTERSECT_TOL));
        let (e1, e2) = axis1.plane();
        let outer_gap = |x: Quat| (dist_to_circle(x, e1, e2) - rho).abs();
        let inner = tryc!(CmcTorus::new(axis2, t.t0));
        let n = TANGENCY_GRID;
        let step = TAU / n as f64;
        let mut best = (f64::INFINITY, 0.0, 0.0);
        for a in 0..n {
            for b in 0..n {
                let (s, u) = (step * a as f64, step * b as f64);
                let x = inner.point(s, u);
                ensure!(dist_to_circle(x, e1, e2) <= rho + 1e-9, "config {c}: inner torus leaves the outer");
                let g = outer_gap(x);
                if g < best.0 {
                    best = (g, s, u);
                }
                let near = locus.iter().map(|y| s3_distance(x, *y)).fold(f64::INFINITY, f64::min);
                if near > TANGENCY_EXCLUSION {
                    ensure!(g > TANGENCY_FAR, "config {c}: gap {g} away from the locus");
                    closest_far = closest_far.min(g);
                }
            }
        }
        // refine the closest sample by alternating line searches
        let (_, mut s, mut u) = best;
        for _ in 0..8 {
            s = golden_min(|v| outer_gap(inner.point(v, u)), s - step, s + step, 40);
            u = golden_min(|v| outer_gap(inner.point(s, v)), u - step, u + step, 40);
        }
        let x = inner.point(s, u);
        let contact = outer_gap(x);
        let near = locus.iter().map(|y| s3_distance(x, *y)).fold(f64::INFINITY, f64::min);
        ensure!(contact < TANGENCY_NEAR, "config {c}: closest approach {contact}");
        ensure!(near < 0.1, "config {c}: contact {near} from the predicted locus");
        worst_contact = worst_contact.max(contact);
    }
    (
        true,
        format!(
            "{checked} circle pairs ({meeting} meeting), {TANGENCY_CONFIGS} tangencies, max contact gap {worst_contact:.1e}, min gap off locus {closest_far:.1e}"
        ),
    )
}
