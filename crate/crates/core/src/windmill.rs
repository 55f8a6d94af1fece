//! Windmill triples and the two involutions acting on them.
//!
//! A triple `(x, y, z)` is drawn as an `x × x` square with four `y × z` arms;
//! its area `x² + 4yz` is the windmill value. [`flip`] swaps the arm
//! dimensions, [`zagier`] re-centres the square on the windmill's mind.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::nat::{is_square, isqrt, Natural};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WindmillError {
    /// `mills n` is infinite for square `n`.
    #[error("{0} is a perfect square, so its set of windmills is infinite")]
    SquareInput(String),
}

/// A windmill triple `(x, y, z)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triple<T> {
    pub x: T,
    pub y: T,
    pub z: T,
}

impl<T> Triple<T> {
    pub const fn new(x: T, y: T, z: T) -> Self {
        Triple { x, y, z }
    }
}

impl<T: Natural> Triple<T> {
    /// Builds a triple from small constants.
    pub fn from_u32(x: u32, y: u32, z: u32) -> Self {
        Triple::new(T::from_small(x), T::from_small(y), T::from_small(z))
    }

    /// All three components are nonzero.
    pub fn is_proper(&self) -> bool {
        !self.x.is_zero() && !self.y.is_zero() && !self.z.is_zero()
    }

    /// `y = z`: the arms are squares and `x² + (2y)²` is the value.
    pub fn is_flip_fixed(&self) -> bool {
        self.y == self.z
    }

    /// `x = y`; for `x ≠ 0` this is exactly the fixed-point set of [`zagier`].
    pub fn is_zagier_fixed(&self) -> bool {
        self.x == self.y
    }

    /// `|y − z|`, the quantity preserved by [`flip`].
    pub fn arm_gap(&self) -> T {
        if self.y >= self.z {
            self.y.clone() - self.z.clone()
        } else {
            self.z.clone() - self.y.clone()
        }
    }
}

impl<T: fmt::Display> fmt::Display for Triple<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.x, self.y, self.z)
    }
}

impl<T: fmt::Display> Serialize for Triple<T> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [self.x.to_string(), self.y.to_string(), self.z.to_string()].serialize(s)
    }
}

/// The five geometric cases of the Zagier map.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ZagierCase {
    /// `x < y`, `x + z < y`: square grows by `z` on every side.
    Case1,
    /// `x < y`, `x + z ≥ y`.
    Case2,
    /// `x = y`: fixed.
    Case3,
    /// `y < x < 2y`.
    Case4,
    /// `y < x`, `x ≥ 2y`.
    Case5,
}

impl ZagierCase {
    /// The case a proper triple of this case is sent to by [`zagier`].
    pub fn partner(self) -> ZagierCase {
        match self {
            ZagierCase::Case1 => ZagierCase::Case5,
            ZagierCase::Case2 => ZagierCase::Case4,
            ZagierCase::Case3 => ZagierCase::Case3,
            ZagierCase::Case4 => ZagierCase::Case2,
            ZagierCase::Case5 => ZagierCase::Case1,
        }
    }
}

impl fmt::Display for ZagierCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self {
            ZagierCase::Case1 => 1,
            ZagierCase::Case2 => 2,
            ZagierCase::Case3 => 3,
            ZagierCase::Case4 => 4,
            ZagierCase::Case5 => 5,
        };
        write!(f, "case {k}")
    }
}

/// `x² + 4yz`.
pub fn windmill_value<T: Natural>(t: &Triple<T>) -> T {
    let four = T::from_small(4);
    t.x.clone() * t.x.clone() + four * t.y.clone() * t.z.clone()
}

pub fn flip<T: Natural>(t: &Triple<T>) -> Triple<T> {
    Triple::new(t.x.clone(), t.z.clone(), t.y.clone())
}

/// The Zagier map. Total on all triples; an involution whenever `x ≠ 0` and
/// `z ≠ 0`. Every subtraction below is guarded by the branch condition.
pub fn zagier<T: Natural>(t: &Triple<T>) -> Triple<T> {
    let Triple { x, y, z } = t;
    let two_y = y.clone() + y.clone();
    if x.clone() + z.clone() < *y {
        Triple::new(
            x.clone() + z.clone() + z.clone(),
            z.clone(),
            y.clone() - z.clone() - x.clone(),
        )
    } else if *x < two_y {
        Triple::new(
            two_y - x.clone(),
            y.clone(),
            x.clone() + z.clone() - y.clone(),
        )
    } else {
        Triple::new(
            x.clone() - two_y,
            x.clone() + z.clone() - y.clone(),
            y.clone(),
        )
    }
}

/// `zagier ∘ flip`.
pub fn zagier_flip<T: Natural>(t: &Triple<T>) -> Triple<T> {
    zagier(&flip(t))
}

/// Side of the largest central square the windmill's outline admits.
pub fn mind<T: Natural>(t: &Triple<T>) -> T {
    let Triple { x, y, z } = t;
    if x.clone() + z.clone() < *y {
        x.clone() + z.clone() + z.clone()
    } else if x < y {
        y.clone() + y.clone() - x.clone()
    } else {
        x.clone()
    }
}

/// Decision order: Case1, Case2, Case3, Case4, Case5. The boundaries
/// `x + z = y` and `x = 2y` land where [`zagier`]'s else-branches put them.
pub fn classify_case<T: Natural>(t: &Triple<T>) -> ZagierCase {
    let Triple { x, y, z } = t;
    if x < y {
        if x.clone() + z.clone() < *y {
            ZagierCase::Case1
        } else {
            ZagierCase::Case2
        }
    } else if x == y {
        ZagierCase::Case3
    } else if *x < y.clone() + y.clone() {
        ZagierCase::Case4
    } else {
        ZagierCase::Case5
    }
}

/// One row of the enumeration: a value of `x` with `n − x² = 4q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MillsRow<T> {
    pub x: T,
    /// `n − x²`.
    pub rest: T,
    /// `q = (n − x²) / 4 = yz`.
    pub q: T,
    pub triples: Vec<Triple<T>>,
}

/// The complete, ordered set `mills n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mills<T> {
    pub n: T,
    pub rows: Vec<MillsRow<T>>,
}

impl<T: Natural> Mills<T> {
    pub fn triples(&self) -> impl Iterator<Item = &Triple<T>> {
        self.rows.iter().flat_map(|r| r.triples.iter())
    }

    pub fn to_vec(&self) -> Vec<Triple<T>> {
        self.triples().cloned().collect()
    }

    pub fn len(&self) -> usize {
        self.rows.iter().map(|r| r.triples.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().all(|r| r.triples.is_empty())
    }
}

/// Divisors of `q ≥ 1` in ascending order, by trial division up to `√q`.
pub fn divisors<T: Natural>(q: &T) -> Vec<T> {
    let mut low = Vec::new();
    let mut high = Vec::new();
    let root = isqrt(q);
    let mut d = T::one();
    while d <= root {
        let (quot, rem) = q.div_rem(&d);
        if rem.is_zero() {
            if quot != d {
                high.push(quot);
            }
            low.push(d.clone());
        }
        d = d + T::one();
    }
    low.extend(high.into_iter().rev());
    low
}

/// Enumerates `mills n` by scanning `x` with `x² ≡ n (mod 4)` up to `⌊√n⌋`
/// and splitting each `q = (n − x²)/4` into divisor pairs `(d, q/d)`.
/// Output is ordered by ascending `x`, then ascending `y`.
pub fn mills_enumerate<T: Natural>(n: &T) -> Result<Mills<T>, WindmillError> {
    if is_square(n) {
        return Err(WindmillError::SquareInput(n.to_string()));
    }
    let four = T::from_small(4);
    let two = T::from_small(2);
    // x² mod 4 is 0 for even x and 1 for odd x; n ≡ 2, 3 (mod 4) has no triples.
    let start = match n.mod_floor(&four).to_u8() {
        Some(0) => T::zero(),
        Some(1) => T::one(),
        _ => {
            return Ok(Mills {
                n: n.clone(),
                rows: Vec::new(),
            })
        }
    };
    let top = isqrt(n);
    let mut rows = Vec::new();
    let mut x = start;
    while x <= top {
        let rest = n.clone() - x.clone() * x.clone();
        let q = rest.clone() / four.clone();
        if !q.is_zero() {
            let triples = divisors(&q)
                .into_iter()
                .map(|d| {
                    let e = q.clone() / d.clone();
                    Triple::new(x.clone(), d, e)
                })
                .collect();
            rows.push(MillsRow {
                x: x.clone(),
                rest,
                q,
                triples,
            });
        }
        x = x + two.clone();
    }
    Ok(Mills { n: n.clone(), rows })
}
