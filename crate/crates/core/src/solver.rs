//! Two-squares decomposition by walking the `zagier ∘ flip` orbit.
//!
//! Starting from the Zagier fixed point `(1, 1, n div 4)` the orbit reaches,
//! at its halfway point, either a flip fixed point `(x, y, y)`, giving
//! `n = x² + (2y)²`, or (only for composite `n`) a second Zagier fixed point
//! `(x, x, z)`, giving the factorisation `n = x (x + 4z)`.

use std::fmt;

use thiserror::Error;

use crate::nat::{cube_cap, is_square, isqrt, Natural};
use crate::orbit::{period, while_until, OrbitError};
use crate::windmill::{zagier_flip, Triple};

pub use crate::prime::is_prime;

/// Why an input is outside the algorithm's domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Inapplicable {
    NotOneMod4,
    PerfectSquare,
}

impl fmt::Display for Inapplicable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Inapplicable::NotOneMod4 => f.write_str("NotOneMod4"),
            Inapplicable::PerfectSquare => f.write_str("PerfectSquare"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("input is inapplicable: {0}")]
    Inapplicable(Inapplicable),
    #[error("orbit reached no flip fixed point")]
    NoFlipFixedPoint,
    #[error("iteration cap of {0} steps exhausted")]
    CapExhausted(u64),
}

/// `n = u² + v²` with `u` odd and `v` even.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition<T> {
    pub u: T,
    pub v: T,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome<T> {
    Decomposed {
        decomposition: Decomposition<T>,
        steps: u64,
    },
    /// `1 < factor < n` and `factor | n`.
    CompositeFactor {
        factor: T,
        steps: u64,
    },
    Inapplicable(Inapplicable),
}

/// Checks `n ≡ 1 (mod 4)` and that `n` is not a square.
pub fn check_applicable<T: Natural>(n: &T) -> Result<(), Inapplicable> {
    if n.mod_floor(&T::from_small(4)) != T::one() {
        Err(Inapplicable::NotOneMod4)
    } else if is_square(n) {
        Err(Inapplicable::PerfectSquare)
    } else {
        Ok(())
    }
}

/// `(1, 1, n div 4)`, the Zagier fixed point every orbit starts from.
pub fn start_triple<T: Natural>(n: &T) -> Triple<T> {
    Triple::new(T::one(), T::one(), n.clone() / T::from_small(4))
}

/// Iterates `zagier ∘ flip` from [`start_triple`] until `y = z`; returns that
/// triple and the number of steps taken.
pub fn two_sq_steps<T: Natural>(n: &T) -> Result<(Triple<T>, u64), SolveError> {
    check_applicable(n).map_err(SolveError::Inapplicable)?;
    let start = start_triple(n);
    let cap = cube_cap(n);
    // A second zagier fixed point before any flip fixed point means the
    // orbit turns back without ever meeting y = z.
    let blocked = std::cell::Cell::new(false);
    let guard = |t: &Triple<T>| {
        if t.is_flip_fixed() {
            return false;
        }
        if t.is_zagier_fixed() && *t != start {
            blocked.set(true);
            return false;
        }
        true
    };
    let (found, steps) = while_until(guard, zagier_flip, &start, cap).map_err(|e| match e {
        OrbitError::CapExhausted { cap } => SolveError::CapExhausted(cap),
        _ => SolveError::NoFlipFixedPoint,
    })?;
    if blocked.get() {
        return Err(SolveError::NoFlipFixedPoint);
    }
    Ok((found, steps))
}

/// The flip fixed point on the orbit of `(1, 1, n div 4)`.
pub fn two_sq<T: Natural>(n: &T) -> Result<Triple<T>, SolveError> {
    two_sq_steps(n).map(|(t, _)| t)
}

/// `(u, v)` with `u` odd, `v` even and `n = u² + v²`.
pub fn two_squares<T: Natural>(n: &T) -> Result<(T, T), SolveError> {
    let t = two_sq(n)?;
    Ok((t.x, t.y + t.z))
}

/// Validates `n`, then runs the orbit walk with both exits: a flip fixed
/// point yields a decomposition, a Zagier fixed point `(x, x, z)` with
/// `x > 1` yields the factor `x` of `n = x (x + 4z)`.
pub fn solve<T: Natural>(n: &T) -> Result<SolveOutcome<T>, SolveError> {
    if let Err(reason) = check_applicable(n) {
        return Ok(SolveOutcome::Inapplicable(reason));
    }
    let cap = cube_cap(n);
    let mut t = start_triple(n);
    let mut steps = 0u64;
    loop {
        if t.is_flip_fixed() {
            let v = t.y.clone() + t.z;
            return Ok(SolveOutcome::Decomposed {
                decomposition: Decomposition { u: t.x, v },
                steps,
            });
        }
        // the start itself is zagier-fixed; only later hits count
        if steps > 0 && t.is_zagier_fixed() {
            if t.x.is_one() {
                return Err(SolveError::NoFlipFixedPoint);
            }
            return Ok(SolveOutcome::CompositeFactor { factor: t.x, steps });
        }
        if steps == cap {
            return Err(SolveError::CapExhausted(cap));
        }
        t = zagier_flip(&t);
        steps += 1;
    }
}

/// Period of `(1, 1, n div 4)` under `zagier ∘ flip`, capped at `n³`.
pub fn start_period<T: Natural>(n: &T) -> Result<u64, SolveError> {
    check_applicable(n).map_err(SolveError::Inapplicable)?;
    let cap = cube_cap(n);
    period(zagier_flip, &start_triple(n), cap).map_err(|_| SolveError::CapExhausted(cap))
}

/// Subtracts successive odd squares and stops at the first even square
/// remainder. Returns `(u, √(n − u²))`.
pub fn brute_force_decompose<T: Natural>(n: &T) -> Option<(T, T)> {
    let two = T::from_small(2);
    let mut u = T::one();
    while u.clone() * u.clone() < *n {
        let rest = n.clone() - u.clone() * u.clone();
        let r = isqrt(&rest);
        if r.clone() * r.clone() == rest && r.is_even() {
            return Some((u, r));
        }
        u = u + two.clone();
    }
    None
}

/// All `(a, b)` with `a ≤ b` and `n = a² + b²`, ascending in `a`.
pub fn all_representations<T: Natural>(n: &T) -> Vec<(T, T)> {
    let mut out = Vec::new();
    let mut a = T::zero();
    while a.clone() * a.clone() * T::from_small(2) <= *n {
        let rest = n.clone() - a.clone() * a.clone();
        let b = isqrt(&rest);
        if b.clone() * b.clone() == rest {
            out.push((a.clone(), b));
        }
        a = a + T::one();
    }
    out
}

/// `u` odd, `v` even and `n = u² + v²`.
pub fn verify_decomposition<T: Natural>(n: &T, u: &T, v: &T) -> bool {
    u.is_odd() && v.is_even() && u.clone() * u.clone() + v.clone() * v.clone() == *n
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    #[test]
    fn two_sq_examples() {
        assert_eq!(two_sq(&29u64), Ok(Triple::new(5, 1, 1)));
        assert_eq!(two_sq(&5u64), Ok(Triple::new(1, 1, 1)));
        assert_eq!(two_sq(&97u64), Ok(Triple::new(9, 2, 2)));
        assert_eq!(two_sq_steps(&29u64).unwrap().1, 2);
    }

    #[test]
    fn two_sq_errors() {
        assert_eq!(
            two_sq(&27u64),
            Err(SolveError::Inapplicable(Inapplicable::NotOneMod4))
        );
        assert_eq!(
            two_sq(&25u64),
            Err(SolveError::Inapplicable(Inapplicable::PerfectSquare))
        );
        assert_eq!(two_sq(&21u64), Err(SolveError::NoFlipFixedPoint));
    }

    #[test]
    fn two_squares_table_values() {
        assert_eq!(two_squares(&97u64), Ok((9, 4)));
        assert_eq!(two_squares(&1999999913u64), Ok((1093, 44708)));
        assert_eq!(
            two_squares(&BigUint::from(12345678949u64)),
            Ok((BigUint::from(110415u32), BigUint::from(12418u32)))
        );
    }

    #[test]
    fn solve_examples() {
        assert_eq!(
            solve(&29u64),
            Ok(SolveOutcome::Decomposed {
                decomposition: Decomposition { u: 5, v: 2 },
                steps: 2
            })
        );
        assert_eq!(
            solve(&21u64),
            Ok(SolveOutcome::CompositeFactor {
                factor: 3,
                steps: 2
            })
        );
        assert_eq!(
            solve(&27u64),
            Ok(SolveOutcome::Inapplicable(Inapplicable::NotOneMod4))
        );
        assert_eq!(
            solve(&49u64),
            Ok(SolveOutcome::Inapplicable(Inapplicable::PerfectSquare))
        );
        assert_eq!(
            solve(&1u64),
            Ok(SolveOutcome::Inapplicable(Inapplicable::PerfectSquare))
        );
        assert_eq!(
            solve(&5u64),
            Ok(SolveOutcome::Decomposed {
                decomposition: Decomposition { u: 1, v: 2 },
                steps: 0
            })
        );
    }

    #[test]
    fn composite_may_decompose() {
        match solve(&65u64).unwrap() {
            SolveOutcome::Decomposed {
                decomposition: Decomposition { u, v },
                ..
            } => {
                assert!(verify_decomposition(&65, &u, &v));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(brute_force_decompose(&29u64), Some((5, 2)));
        assert_eq!(brute_force_decompose(&21u64), None);
        assert_eq!(brute_force_decompose(&13u64), Some((3, 2)));
        assert_eq!(brute_force_decompose(&25u64), Some((3, 4)));
    }

    #[test]
    fn representation_examples() {
        assert_eq!(all_representations(&25u64), vec![(0, 5), (3, 4)]);
        assert_eq!(all_representations(&97u64), vec![(4, 9)]);
        assert!(all_representations(&3u64).is_empty());
        assert_eq!(all_representations(&0u64), vec![(0, 0)]);
        assert_eq!(all_representations(&2u64), vec![(1, 1)]);
    }

    #[test]
    fn verify_examples() {
        assert!(verify_decomposition(&97u64, &9, &4));
        assert!(!verify_decomposition(&97u64, &4, &9));
        assert!(verify_decomposition(&29u64, &5, &2));
        assert!(!verify_decomposition(&29u64, &5, &4));
    }

    #[test]
    fn period_of_start() {
        assert_eq!(start_period(&29u64), Ok(5));
        assert_eq!(start_period(&5u64), Ok(1));
        assert_eq!(start_period(&21u64), Ok(4));
        assert_eq!(start_period(&97u64), Ok(27));
    }
}
