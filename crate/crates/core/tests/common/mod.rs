#![allow(dead_code)]

use windmill::orbit::TableInvolution;
use windmill::{
    fixes, halfway_fixed_point, iterate, orbit_trace, pairs, period, random_involution,
    while_until, FiniteDomain, HalfwayKind,
};

/// Asserts every orbit theorem for the pair `(f, g)` on `domain`.
/// Returns the number of individual facts checked.
pub fn check_orbit_theorems(
    domain: &FiniteDomain<usize>,
    f: &TableInvolution,
    g: &TableInvolution,
) -> Result<u64, String> {
    let fa = |x: &usize| f.apply(x);
    let ga = |x: &usize| g.apply(x);
    let phi = |x: &usize| f.apply(&g.apply(x));
    let psi = |x: &usize| g.apply(&f.apply(x));
    let cap = domain.len() as u64;
    let mut checked = 0u64;
    let mut ensure = |ok: bool, msg: &dyn Fn() -> String| -> Result<(), String> {
        checked += 1;
        if ok {
            Ok(())
        } else {
            Err(msg())
        }
    };

    let fixes_f = fixes(fa, domain);
    let fixes_g = fixes(ga, domain);
    ensure(fixes_f.len() % 2 == fixes_g.len() % 2, &|| {
        format!(
            "parity: |fixes f| = {}, |fixes g| = {}",
            fixes_f.len(),
            fixes_g.len()
        )
    })?;
    ensure(pairs(fa, domain).len() % 2 == 0, &|| "odd |pairs f|".into())?;
    ensure(pairs(ga, domain).len() % 2 == 0, &|| "odd |pairs g|".into())?;

    for x in domain.iter() {
        let p = period(phi, x, cap).map_err(|e| e.to_string())?;

        // returns exactly at multiples of the period
        let mut cur = *x;
        for k in 0..=3 * p {
            ensure((cur == *x) == (k % p == 0), &|| {
                format!("x = {x}: φ^{k} vs period {p}")
            })?;
            cur = phi(&cur);
        }

        // constant period along the orbit
        let trace = orbit_trace(phi, x, cap).map_err(|e| e.to_string())?;
        ensure(
            trace.period == p && trace.iterates.len() as u64 == p,
            &|| "trace length".into(),
        )?;
        for y in &trace.iterates {
            let q = period(phi, y, cap).map_err(|e| e.to_string())?;
            ensure(q == p, &|| format!("period of {y} is {q}, of {x} is {p}"))?;
        }

        // (f∘g)^i x = (g∘f)^j x  ⇔  p | i + j
        let forward: Vec<usize> = (0..2 * p).map(|i| iterate(phi, x, i)).collect();
        let backward: Vec<usize> = (0..2 * p).map(|j| iterate(psi, x, j)).collect();
        for (i, left) in (0u64..).zip(&forward) {
            for (j, right) in (0u64..).zip(&backward) {
                ensure((left == right) == ((i + j) % p == 0), &|| {
                    format!("x = {x}: (f∘g)^{i} vs (g∘f)^{j}, p = {p}")
                })?;
            }
        }

        if fa(x) != *x {
            continue;
        }
        // from here on x is an f fixed point
        ensure((p == 1) == (ga(x) == *x), &|| {
            format!("x = {x}: period 1 iff g-fixed")
        })?;
        let f_images: Vec<usize> = forward.iter().map(fa).collect();
        let g_images: Vec<usize> = forward.iter().map(ga).collect();
        for (i, left) in (0u64..).zip(&forward) {
            for j in 0..2 * p {
                let ju = j as usize;
                ensure((*left == f_images[ju]) == ((i + j) % p == 0), &|| {
                    format!("x = {x}: φ^{i} = f φ^{j}, p = {p}")
                })?;
                ensure((*left == g_images[ju]) == ((i + j + 1) % p == 0), &|| {
                    format!("x = {x}: φ^{i} = g φ^{j}, p = {p}")
                })?;
            }
        }
        if fixes_f.len() == 1 {
            ensure(p % 2 == 1, &|| {
                format!("single f fixed point {x} has even period {p}")
            })?;
        }
        for j in 1..p {
            let y = iterate(phi, x, j);
            if p % 2 == 0 {
                ensure((fa(&y) == y) == (j == p / 2), &|| {
                    format!("x = {x}: f-fixed at {j}, p = {p}")
                })?;
            } else {
                ensure((ga(&y) == y) == (j == p / 2), &|| {
                    format!("x = {x}: g-fixed at {j}, p = {p}")
                })?;
            }
        }

        let report = halfway_fixed_point(fa, ga, domain, x).map_err(|e| e.to_string())?;
        let expected_kind = if p % 2 == 0 {
            HalfwayKind::FFixed
        } else {
            HalfwayKind::GFixed
        };
        ensure(report.period == p && report.kind == expected_kind, &|| {
            "halfway report".into()
        })?;
        ensure(report.halfway == iterate(phi, x, p / 2), &|| {
            "halfway element".into()
        })?;
        let fixed_by_kind = match report.kind {
            HalfwayKind::FFixed => fa(&report.halfway) == report.halfway,
            HalfwayKind::GFixed => ga(&report.halfway) == report.halfway,
        };
        ensure(fixed_by_kind, &|| "halfway point not fixed".into())?;
        let distinct_expected = p % 2 == 0 || p != 1;
        ensure(report.distinct_from_start == distinct_expected, &|| {
            "halfway distinctness".into()
        })?;

        // while loop stops at the first iterate fixed by either map
        let found = |y: &usize| ga(y) == *y || (fa(y) == *y && y != x);
        let (stop, k) = while_until(|y| !found(y), phi, x, cap).map_err(|e| e.to_string())?;
        let first = (0..p)
            .find(|&j| found(&iterate(phi, x, j)))
            .expect("halfway point qualifies");
        ensure(k == first && stop == iterate(phi, x, first), &|| {
            "while_until index".into()
        })?;
        ensure(k == p / 2, &|| format!("while stopped at {k}, p = {p}"))?;
    }
    Ok(checked)
}

/// A seeded pair of involutions on `0..size` with the requested fixed counts.
pub fn involution_pair(
    size: usize,
    fixed_f: usize,
    fixed_g: usize,
    seed: u64,
) -> (FiniteDomain<usize>, TableInvolution, TableInvolution) {
    let (domain, f) = random_involution(size, fixed_f, seed).expect("parity ok");
    let (_, g) = random_involution(size, fixed_g, seed.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ 1)
        .expect("parity ok");
    (domain, f, g)
}

/// All fixed counts compatible with `size`.
pub fn fixed_counts(size: usize) -> Vec<usize> {
    (size % 2..=size).step_by(2).collect()
}
