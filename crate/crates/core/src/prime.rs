//! Primality testing.
//!
//! Exact below 2^64 (strong pseudoprime test to the first twelve prime bases).
//! Above that, Baillie–PSW: a base-2 strong test followed by a strong Lucas
//! test with Selfridge parameters. No BPSW counterexample is known, but the
//! large-input path is not proven exact.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::nat::{is_square, to_big, Natural};

const SMALL_PRIMES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

pub fn is_prime<T: Natural>(n: &T) -> bool {
    match n.to_u64() {
        Some(v) => is_prime_u64(v),
        None => is_prime_big(&to_big(n)),
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in SMALL_PRIMES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in SMALL_PRIMES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn strong_probable_prime_base2(n: &BigUint) -> bool {
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    let mut x = BigUint::from(2u8).modpow(&d, n);
    if x == one || x == n_minus_1 {
        return true;
    }
    for _ in 1..s {
        x = x.modpow(&BigUint::from(2u8), n);
        if x == n_minus_1 {
            return true;
        }
    }
    false
}

/// Jacobi symbol `(a / n)` for odd positive `n`.
fn jacobi(a: &BigInt, n: &BigUint) -> i32 {
    let n_int = BigInt::from_biguint(Sign::Plus, n.clone());
    let mut a = a
        .mod_floor(&n_int)
        .to_biguint()
        .expect("nonnegative after mod_floor");
    let mut n = n.clone();
    let mut result = 1;
    let eight = BigUint::from(8u8);
    while !a.is_zero() {
        while a.is_even() {
            a >>= 1;
            let r = (&n % &eight).to_u8().unwrap_or(0);
            if r == 3 || r == 5 {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if (&a % 4u8) == BigUint::from(3u8) && (&n % 4u8) == BigUint::from(3u8) {
            result = -result;
        }
        a %= &n;
    }
    if n.is_one() {
        result
    } else {
        0
    }
}

fn reduce(v: BigInt, n: &BigInt) -> BigInt {
    v.mod_floor(n)
}

/// Halving modulo odd `n`.
fn half_mod(v: BigInt, n: &BigInt) -> BigInt {
    let v = if v.is_odd() { v + n } else { v };
    reduce(v >> 1, n)
}

/// Strong Lucas probable-prime test with Selfridge's method A (`P = 1`).
fn strong_lucas(n: &BigUint) -> bool {
    let mut d: i64 = 5;
    loop {
        let j = jacobi(&BigInt::from(d), n);
        if j == -1 {
            break;
        }
        if j == 0 && BigInt::from(d.abs()) != BigInt::from_biguint(Sign::Plus, n.clone()) {
            return false;
        }
        d = if d > 0 { -(d + 2) } else { -d + 2 };
        // Perfect squares never yield j = -1; callers filter them first.
        if d.abs() > 1_000_000 {
            return false;
        }
    }
    let n_int = BigInt::from_biguint(Sign::Plus, n.clone());
    let d_big = BigInt::from(d);
    let p = BigInt::one();
    let q = BigInt::from((1 - d) / 4);

    let delta = n + 1u8;
    let s = delta.trailing_zeros().unwrap_or(0);
    let k = &delta >> s;

    // Left-to-right binary ladder computing U_k, V_k, Q^k.
    let mut u = BigInt::one();
    let mut v = p.clone();
    let mut qk = reduce(q.clone(), &n_int);
    let bits = k.bits();
    for i in (0..bits - 1).rev() {
        // doubling
        u = reduce(&u * &v, &n_int);
        v = reduce(&v * &v - (&qk << 1), &n_int);
        qk = reduce(&qk * &qk, &n_int);
        if k.bit(i) {
            let u_next = half_mod(&p * &u + &v, &n_int);
            let v_next = half_mod(&d_big * &u + &p * &v, &n_int);
            u = u_next;
            v = v_next;
            qk = reduce(&qk * &q, &n_int);
        }
    }
    if u.is_zero() || v.is_zero() {
        return true;
    }
    for _ in 1..s {
        v = reduce(&v * &v - (&qk << 1), &n_int);
        if v.is_zero() {
            return true;
        }
        qk = reduce(&qk * &qk, &n_int);
    }
    false
}

pub fn is_prime_big(n: &BigUint) -> bool {
    if let Some(v) = n.to_u64() {
        return is_prime_u64(v);
    }
    for p in SMALL_PRIMES {
        if (n % p).is_zero() {
            return false;
        }
    }
    if !strong_probable_prime_base2(n) {
        return false;
    }
    if is_square(n) {
        return false;
    }
    strong_lucas(n)
}
