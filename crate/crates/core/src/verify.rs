//! Exhaustive property checks over a bounded range of `n`, shared by the
//! `verify` subcommand and the test suites.

use std::fmt;

use crate::nat::is_square;
use crate::orbit::{fixes, is_involution, FiniteDomain};
use crate::prime::is_prime_u64;
use crate::solver::{
    all_representations, brute_force_decompose, solve, start_period, verify_decomposition,
    SolveOutcome,
};
use crate::windmill::{flip, mills_enumerate, mind, zagier, Triple};

/// Outcome of one named property over the whole range.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PropertyResult {
    pub name: &'static str,
    pub checked: u64,
    pub violations: Vec<String>,
}

impl PropertyResult {
    fn new(name: &'static str) -> Self {
        PropertyResult {
            name,
            ..Default::default()
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.violations.push(what());
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for PropertyResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "ok" } else { "FAIL" };
        write!(f, "{status:4} {:<22} {} cases", self.name, self.checked)?;
        for v in self.violations.iter().take(5) {
            write!(f, "\n       {v}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub max: u64,
    pub properties: Vec<PropertyResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.properties.iter().all(PropertyResult::passed)
    }
}

/// Checks, for every `n ≤ max`:
/// involutions, invariants and fixed-point parity on `mills n` for non-square
/// `n ≡ 1 (mod 4)`; uniqueness, oracle agreement and odd periods for primes
/// `p ≡ 1 (mod 4)`; and the absence of representations for `n ≡ 3 (mod 4)`.
pub fn verify_up_to(max: u64) -> VerifyReport {
    let mut involution = PropertyResult::new("involutions");
    let mut invariants = PropertyResult::new("invariants");
    let mut parity = PropertyResult::new("fixed-point parity");
    let mut uniqueness = PropertyResult::new("uniqueness");
    let mut oracle = PropertyResult::new("oracle agreement");
    let mut odd_period = PropertyResult::new("odd period");
    let mut obstruction = PropertyResult::new("obstruction");

    for n in 1..=max {
        match n % 4 {
            1 if !is_square(&n) => {
                check_mills(n, &mut involution, &mut invariants, &mut parity);
                if is_prime_u64(n) {
                    check_prime(n, &mut uniqueness, &mut oracle, &mut odd_period);
                }
            }
            3 => obstruction.check(all_representations(&n).is_empty(), || {
                format!("{n} ≡ 3 (mod 4) has a representation")
            }),
            _ => {}
        }
    }

    VerifyReport {
        max,
        properties: vec![
            involution,
            invariants,
            parity,
            uniqueness,
            oracle,
            odd_period,
            obstruction,
        ],
    }
}

fn check_mills(
    n: u64,
    involution: &mut PropertyResult,
    invariants: &mut PropertyResult,
    parity: &mut PropertyResult,
) {
    let Ok(mills) = mills_enumerate(&n) else {
        return;
    };
    let Ok(domain) = FiniteDomain::new(mills.to_vec()) else {
        involution.check(false, || format!("mills {n} has duplicates"));
        return;
    };
    // every triple is proper here: x is odd and q ≥ 1
    involution.check(is_involution(flip, &domain), || {
        format!("flip on mills {n}")
    });
    involution.check(is_involution(zagier, &domain), || {
        format!("zagier on mills {n}")
    });
    for t in domain.iter() {
        let z = zagier(t);
        invariants.check(mind(&z) == mind(t), || format!("mind changes at {t}"));
        invariants.check(flip(t).arm_gap() == t.arm_gap(), || {
            format!("|y-z| changes at {t}")
        });
        invariants.check(t.is_proper(), || {
            format!("improper triple {t} in mills {n}")
        });
    }
    let fz = fixes(zagier, &domain).len();
    let ff = fixes(flip, &domain).len();
    parity.check(fz % 2 == ff % 2, || {
        format!("n = {n}: {fz} zagier fixes vs {ff} flip fixes")
    });
}

fn check_prime(
    p: u64,
    uniqueness: &mut PropertyResult,
    oracle: &mut PropertyResult,
    odd_period: &mut PropertyResult,
) {
    let positive = all_representations(&p)
        .into_iter()
        .filter(|&(a, _)| a > 0)
        .count();
    uniqueness.check(positive == 1, || {
        format!("{p} has {positive} representations")
    });

    let brute = brute_force_decompose(&p);
    match solve(&p) {
        Ok(SolveOutcome::Decomposed {
            decomposition: d,
            steps,
        }) => {
            let sorted = (d.u.min(d.v), d.u.max(d.v));
            let agrees = brute.is_some_and(|(a, b)| (a.min(b), a.max(b)) == sorted);
            oracle.check(verify_decomposition(&p, &d.u, &d.v) && agrees, || {
                format!("{p}: windmill ({}, {}) vs brute {brute:?}", d.u, d.v)
            });
            match start_period(&p) {
                Ok(period) => odd_period.check(period % 2 == 1 && steps == period / 2, || {
                    format!("{p}: period {period}, steps {steps}")
                }),
                Err(e) => odd_period.check(false, || format!("{p}: {e}")),
            }
        }
        other => oracle.check(false, || format!("{p}: solver returned {other:?}")),
    }
    let start = Triple::new(1u64, 1, p / 4);
    odd_period.check(zagier(&start) == start, || {
        format!("{p}: start not zagier-fixed")
    });
}
