mod common;

use proptest::prelude::*;
use windmill::{
    fixes, flip, halfway_fixed_point, is_involution, iterate, mills_enumerate, orbit_trace, pairs,
    period, while_until, zagier, zagier_flip, FiniteDomain, HalfwayKind, Triple,
};

fn t(x: u64, y: u64, z: u64) -> Triple<u64> {
    Triple::new(x, y, z)
}

fn mills(n: u64) -> FiniteDomain<Triple<u64>> {
    FiniteDomain::new(mills_enumerate(&n).unwrap().to_vec()).unwrap()
}

#[test]
fn involutions_on_mills_29() {
    let s = mills(29);
    assert!(is_involution(flip, &s));
    assert!(is_involution(zagier, &s));
    assert_eq!(fixes(flip, &s).to_vec(), vec![t(5, 1, 1)]);
    assert_eq!(fixes(zagier, &s).to_vec(), vec![t(1, 1, 7)]);
    assert_eq!(
        pairs(flip, &s).to_vec(),
        vec![t(1, 1, 7), t(1, 7, 1), t(3, 1, 5), t(3, 5, 1)]
    );
}

#[test]
fn zagier_pairs_on_mills_21() {
    let s = mills(21);
    assert_eq!(pairs(zagier, &s).to_vec(), vec![t(1, 5, 1), t(3, 1, 3)]);
    assert_eq!(fixes(zagier, &s).to_vec(), vec![t(1, 1, 5), t(3, 3, 1)]);
}

#[test]
fn iterate_and_period_on_windmills() {
    assert_eq!(iterate(zagier_flip, &t(1, 1, 7), 2), t(5, 1, 1));
    assert_eq!(iterate(zagier_flip, &t(1, 1, 7), 5), t(1, 1, 7));
    assert_eq!(period(zagier_flip, &t(1, 1, 7), 5), Ok(5));
    assert_eq!(period(zagier_flip, &t(1, 1, 1), 1), Ok(1));
    assert_eq!(period(zagier_flip, &t(1, 1, 5), 4), Ok(4));
}

#[test]
fn traces_on_windmills() {
    let tr = orbit_trace(zagier_flip, &t(1, 1, 7), 100).unwrap();
    assert_eq!(
        tr.iterates,
        vec![t(1, 1, 7), t(3, 1, 5), t(5, 1, 1), t(3, 5, 1), t(1, 7, 1)]
    );
    assert_eq!(tr.period, 5);
    assert_eq!(
        orbit_trace(zagier_flip, &t(1, 1, 1), 1).unwrap().iterates,
        vec![t(1, 1, 1)]
    );
    let tr = orbit_trace(zagier_flip, &t(1, 1, 5), 100).unwrap();
    assert_eq!(
        tr.iterates,
        vec![t(1, 1, 5), t(3, 1, 3), t(3, 3, 1), t(1, 5, 1)]
    );
}

#[test]
fn halfway_on_windmills() {
    let r = halfway_fixed_point(zagier, flip, &mills(29), &t(1, 1, 7)).unwrap();
    assert_eq!(
        (r.period, r.halfway, r.kind, r.distinct_from_start),
        (5, t(5, 1, 1), HalfwayKind::GFixed, true)
    );
    let r = halfway_fixed_point(zagier, flip, &mills(5), &t(1, 1, 1)).unwrap();
    assert_eq!(
        (r.period, r.halfway, r.kind, r.distinct_from_start),
        (1, t(1, 1, 1), HalfwayKind::GFixed, false)
    );
    let r = halfway_fixed_point(zagier, flip, &mills(21), &t(1, 1, 5)).unwrap();
    assert_eq!(
        (r.period, r.halfway, r.kind, r.distinct_from_start),
        (4, t(3, 3, 1), HalfwayKind::FFixed, true)
    );
}

#[test]
fn while_until_on_windmills() {
    let r = while_until(
        |u: &Triple<u64>| flip(u) != *u,
        zagier_flip,
        &t(1, 1, 7),
        24389,
    );
    assert_eq!(r, Ok((t(5, 1, 1), 2)));
}

#[test]
fn exhaustive_small_domains() {
    // every pair of seeded involutions on sizes 1..=12, a few seeds each
    let mut facts = 0;
    for size in 1..=12usize {
        for &a in &common::fixed_counts(size) {
            for &b in &common::fixed_counts(size) {
                for seed in 0..3u64 {
                    let (s, f, g) = common::involution_pair(size, a, b, seed);
                    facts += common::check_orbit_theorems(&s, &f, &g)
                        .unwrap_or_else(|e| panic!("size {size}, fixes {a}/{b}, seed {seed}: {e}"));
                }
            }
        }
    }
    println!("{facts} facts checked");
    assert!(facts > 100_000);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn orbit_theorems_hold(size in 1usize..=64, fa in 0usize..=64, fb in 0usize..=64, seed in any::<u64>()) {
        let fa = (fa.min(size) / 2) * 2 + size % 2;
        let fb = (fb.min(size) / 2) * 2 + size % 2;
        let fa = if fa > size { fa - 2 } else { fa };
        let fb = if fb > size { fb - 2 } else { fb };
        let (s, f, g) = common::involution_pair(size, fa, fb, seed);
        prop_assert!(is_involution(|x| f.apply(x), &s));
        prop_assert_eq!(fixes(|x| f.apply(x), &s).len(), fa);
        if let Err(e) = common::check_orbit_theorems(&s, &f, &g) {
            prop_assert!(false, "seed {}: {}", seed, e);
        }
    }
}
