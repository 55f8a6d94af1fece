//! Fermat's two-squares theorem, computed.
//!
//! A prime `n ≡ 1 (mod 4)` is split as `n = u² + v²` by walking the orbit of
//! the Zagier fixed point `(1, 1, n div 4)` under `zagier ∘ flip` until it
//! meets the flip fixed point `(u, v/2, v/2)`.
//!
//! The arithmetic is generic over [`Natural`]; the aliases below fix the
//! scalar to an arbitrary-precision integer or to `u64`.
//!
//! ```
//! use windmill::two_squares;
//! use num_bigint::BigUint;
//!
//! let (u, v) = two_squares(&BigUint::from(97u32)).unwrap();
//! assert_eq!((u, v), (BigUint::from(9u32), BigUint::from(4u32)));
//! ```

pub mod bench;
pub mod cli;
pub mod nat;
pub mod orbit;
pub mod prime;
pub mod render;
pub mod solver;
pub mod verify;
pub mod windmill;

pub use nat::{is_square, Natural};
pub use orbit::{
    fixes, halfway_fixed_point, is_involution, iterate, orbit_trace, pairs, period,
    random_involution, while_until, FiniteDomain, HalfwayKind, HalfwayReport, OrbitError,
    OrbitTrace,
};
pub use prime::is_prime;
pub use solver::{
    all_representations, brute_force_decompose, solve, two_sq, two_squares, verify_decomposition,
    Decomposition, Inapplicable, SolveError, SolveOutcome,
};
pub use windmill::{
    classify_case, flip, mills_enumerate, mind, windmill_value, zagier, zagier_flip, Mills, Triple,
    WindmillError, ZagierCase,
};

/// Arbitrary-precision natural number.
pub type Nat = num_bigint::BigUint;
/// Windmill triple over [`Nat`].
pub type BigTriple = Triple<Nat>;
/// Windmill triple over `u64`, for inputs whose `x² + 4yz` fits a word.
pub type Triple64 = Triple<u64>;
pub type BigMills = Mills<Nat>;
pub type BigOutcome = SolveOutcome<Nat>;
