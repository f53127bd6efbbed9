use std::collections::BTreeSet;

use lensgeom::lens::LensSpace;
use lensgeom::orbits::*;
use num_integer::gcd;
use proptest::prelude::*;

/// Residues `(m·j - n·jq) mod p` labelling the parallel `(n, m)`-lines
/// through the orbit points.
fn line_labels(l: LensSpace, n: u64, m: u64) -> BTreeSet<u64> {
    let (p, q) = (l.p() as i64, l.q() as i64);
    let mut hit = vec![false; p as usize];
    for j in 0..p {
        hit[(m as i64 * j - n as i64 * ((j * q) % p)).rem_euclid(p) as usize] = true;
    }
    (0..p as u64).filter(|r| hit[*r as usize]).collect()
}

fn primitive_directions(bound: u64) -> Vec<(u64, u64)> {
    let mut v = Vec::new();
    for n in 1..=bound {
        for m in 1..=bound {
            if gcd(n, m) == 1 {
                v.push((n, m));
            }
        }
    }
    v
}

#[test]
fn closed_form_matches_brute_force() {
    let dirs = primitive_directions(6);
    for p in 2..=300 {
        for l in LensSpace::all_with_order(p) {
            for &(n, m) in &dirs {
                let labels = line_labels(l, n, m);
                assert_eq!(curves_containing_orbit(l, n, m).unwrap(), labels.len() as u64, "{l} ({n},{m})");
            }
        }
    }
}

#[test]
fn lines_are_equally_spaced() {
    let dirs = primitive_directions(5);
    for p in 2..=120 {
        for l in LensSpace::all_with_order(p) {
            for &(n, m) in &dirs {
                let k = curves_containing_orbit(l, n, m).unwrap();
                let want: BTreeSet<u64> = (0..k).map(|i| i * (p / k)).collect();
                assert_eq!(line_labels(l, n, m), want);
            }
        }
    }
}

#[test]
fn realizations_have_the_requested_k() {
    for n in 1..=6u64 {
        for m in 1..=8u64 {
            if gcd(n, m) != 1 {
                continue;
            }
            for k in 1..=6 {
                for p in 1..=500 {
                    if let Some(l) = realize_configuration(n, m, k, p).unwrap() {
                        assert_eq!(curves_containing_orbit(l, n, m).unwrap(), k, "({n},{m},{k}) p={p}: {l}");
                    }
                }
            }
        }
    }
}

#[test]
fn realizations_exist_for_many_p() {
    for (n, m, k) in [(2, 3, 1), (1, 2, 5), (3, 4, 2), (2, 5, 3), (1, 4, 1)] {
        let found = (1..=500).filter(|p| realize_configuration(n, m, k, *p).unwrap().is_some()).count();
        assert!(found >= 100, "({n},{m},{k}): {found}");
    }
}

#[test]
fn the_5p_family() {
    for p in 1..200u64 {
        if let Ok(l) = LensSpace::new(5 * p, 2 * p + 2) {
            assert_eq!(curves_containing_orbit(l, 1, 2).unwrap(), 5);
        }
    }
}

#[test]
fn frontier_improves_with_bound() {
    for p in [13u64, 29, 64, 97, 210] {
        for l in LensSpace::all_with_order(p) {
            let mut last = u64::MAX;
            for bound in 1..=8 {
                let f = classify_orbit(l, bound).unwrap();
                let best = f.last().unwrap().config.k;
                assert!(best <= last);
                last = best;
                // frontier entries are strictly improving
                for w in f.windows(2) {
                    assert!(w[0].complexity < w[1].complexity || w[0].config.k == w[1].config.k);
                    assert!(w[0].config.k >= w[1].config.k);
                }
            }
        }
    }
}

#[test]
fn bounded_profile_along_a_class_two_sequence() {
    let spaces: Vec<_> = (10..80)
        .filter_map(|p| realize_configuration(2, 3, 1, p).unwrap())
        .collect();
    let profile = best_k_profile(&spaces, 3).unwrap();
    assert!(profile.iter().all(|k| *k == 1));
}

/// Coprime `(p, q)` with `1 <= q < p`.
fn lens_params(max_p: u64) -> impl Strategy<Value = (u64, u64)> {
    (2..max_p).prop_flat_map(|p| (Just(p), 1..p)).prop_filter("coprime", |(p, q)| gcd(*p, *q) == 1)
}

fn direction(max: u64) -> impl Strategy<Value = (u64, u64)> {
    (1..max, 1..max).prop_filter("primitive", |(n, m)| gcd(*n, *m) == 1)
}

proptest! {
    #[test]
    fn orbit_is_a_cyclic_group_orbit((p, q) in lens_params(400)) {
        let l = LensSpace::new(p, q).unwrap();
        let pts = orbit_lattice(l);
        prop_assert_eq!(pts.len() as u64, p);
        prop_assert_eq!(pts[0], (0, 0));
        let set: BTreeSet<_> = pts.iter().copied().collect();
        prop_assert_eq!(set.len() as u64, p);
        for &(x, y) in &pts {
            prop_assert!(set.contains(&((x + 1) % p, (y + q) % p)));
        }
        let flat = orbit_points(l);
        prop_assert!(flat.iter().all(|f| f.x >= 0.0 && f.x < std::f64::consts::TAU && f.y >= 0.0 && f.y < std::f64::consts::TAU));
    }

    #[test]
    fn k_divides_p((p, q) in lens_params(100_000), (n, m) in direction(20)) {
        let k = curves_containing_orbit(LensSpace::new(p, q).unwrap(), n, m).unwrap();
        prop_assert_eq!(p % k, 0);
    }
}
