//! Involutions on finite sets and orbits of permutations.
//!
//! Mappings are plain closures `Fn(&E) -> E`; domains are ordered sets of
//! elements with structural equality. Iteration counts are `u64`.

use std::hash::Hash;

use indexmap::IndexSet;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrbitError {
    #[error("no return to the start within {cap} steps")]
    CapExhausted { cap: u64 },
    #[error("start element is not fixed by the first involution")]
    NotFFixed,
    #[error("mapping is not an involution on the domain")]
    NotInvolution,
    #[error("size {size} minus fixed count {fixed} is not even")]
    ParityError { size: usize, fixed: usize },
    #[error("duplicate element in domain")]
    DuplicateElement,
}

/// A finite set with a fixed iteration order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteDomain<E: Hash + Eq> {
    elements: IndexSet<E>,
}

impl<E: Hash + Eq + Clone> FiniteDomain<E> {
    /// Fails on duplicates.
    pub fn new(elements: impl IntoIterator<Item = E>) -> Result<Self, OrbitError> {
        let mut set = IndexSet::new();
        for e in elements {
            if !set.insert(e) {
                return Err(OrbitError::DuplicateElement);
            }
        }
        Ok(FiniteDomain { elements: set })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, e: &E) -> bool {
        self.elements.contains(e)
    }

    pub fn iter(&self) -> impl Iterator<Item = &E> {
        self.elements.iter()
    }

    pub fn to_vec(&self) -> Vec<E> {
        self.elements.iter().cloned().collect()
    }

    fn filtered(&self, keep: impl Fn(&E) -> bool) -> Self {
        FiniteDomain {
            elements: self.elements.iter().filter(|e| keep(e)).cloned().collect(),
        }
    }
}

/// `∀x ∈ S. f x ∈ S ∧ f (f x) = x`.
pub fn is_involution<E, F>(f: F, domain: &FiniteDomain<E>) -> bool
where
    E: Hash + Eq + Clone,
    F: Fn(&E) -> E,
{
    domain.iter().all(|x| {
        let fx = f(x);
        domain.contains(&fx) && f(&fx) == *x
    })
}

/// Elements of `S` with `f x = x`.
pub fn fixes<E, F>(f: F, domain: &FiniteDomain<E>) -> FiniteDomain<E>
where
    E: Hash + Eq + Clone,
    F: Fn(&E) -> E,
{
    domain.filtered(|x| f(x) == *x)
}

/// Elements of `S` with `f x ≠ x`.
pub fn pairs<E, F>(f: F, domain: &FiniteDomain<E>) -> FiniteDomain<E>
where
    E: Hash + Eq + Clone,
    F: Fn(&E) -> E,
{
    domain.filtered(|x| f(x) != *x)
}

/// `φᵏ(x)`.
pub fn iterate<E, F>(phi: F, x: &E, k: u64) -> E
where
    E: Clone,
    F: Fn(&E) -> E,
{
    let mut cur = x.clone();
    for _ in 0..k {
        cur = phi(&cur);
    }
    cur
}

/// Least `p` in `1..=cap` with `φᵖ(x) = x`.
pub fn period<E, F>(phi: F, x: &E, cap: u64) -> Result<u64, OrbitError>
where
    E: Clone + PartialEq,
    F: Fn(&E) -> E,
{
    let mut cur = phi(x);
    let mut p = 1u64;
    while p <= cap {
        if cur == *x {
            return Ok(p);
        }
        cur = phi(&cur);
        p += 1;
    }
    Err(OrbitError::CapExhausted { cap })
}

/// The orbit of `start`: `iterates[i] = φⁱ(start)` for `i < period`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitTrace<E> {
    pub start: E,
    pub iterates: Vec<E>,
    pub period: u64,
}

impl<E> OrbitTrace<E> {
    /// `(index, element)` pairs.
    pub fn steps(&self) -> impl Iterator<Item = (u64, &E)> {
        self.iterates.iter().enumerate().map(|(i, e)| (i as u64, e))
    }

    /// `φ^{p div 2}(start)`.
    pub fn halfway(&self) -> &E {
        &self.iterates[(self.period / 2) as usize]
    }
}

pub fn orbit_trace<E, F>(phi: F, x: &E, cap: u64) -> Result<OrbitTrace<E>, OrbitError>
where
    E: Clone + PartialEq,
    F: Fn(&E) -> E,
{
    let mut iterates = vec![x.clone()];
    let mut cur = phi(x);
    while cur != *x {
        if iterates.len() as u64 >= cap {
            return Err(OrbitError::CapExhausted { cap });
        }
        let next = phi(&cur);
        iterates.push(cur);
        cur = next;
    }
    let period = iterates.len() as u64;
    Ok(OrbitTrace {
        start: x.clone(),
        iterates,
        period,
    })
}

/// Which involution fixes the halfway point of an orbit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HalfwayKind {
    /// Even period: the halfway point is another fixed point of `f`.
    FFixed,
    /// Odd period: the halfway point is fixed by `g`.
    GFixed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfwayReport<E> {
    pub period: u64,
    pub halfway: E,
    pub kind: HalfwayKind,
    pub distinct_from_start: bool,
}

/// Walks half the orbit of an `f`-fixed `x` under `f ∘ g` and reports the
/// fixed point found there. Both involutions are checked on `domain` first.
pub fn halfway_fixed_point<E, F, G>(
    f: F,
    g: G,
    domain: &FiniteDomain<E>,
    x: &E,
) -> Result<HalfwayReport<E>, OrbitError>
where
    E: Hash + Eq + Clone,
    F: Fn(&E) -> E,
    G: Fn(&E) -> E,
{
    if !is_involution(&f, domain) || !is_involution(&g, domain) {
        return Err(OrbitError::NotInvolution);
    }
    if !domain.contains(x) || f(x) != *x {
        return Err(OrbitError::NotFFixed);
    }
    let phi = |e: &E| f(&g(e));
    let p = period(phi, x, domain.len() as u64)?;
    let halfway = iterate(phi, x, p / 2);
    let kind = if p % 2 == 0 {
        HalfwayKind::FFixed
    } else {
        HalfwayKind::GFixed
    };
    let distinct_from_start = halfway != *x;
    Ok(HalfwayReport {
        period: p,
        halfway,
        kind,
        distinct_from_start,
    })
}

/// `Bᵏ(x)` for the least `k ≤ cap` where `guard` fails, together with `k`.
pub fn while_until<E, P, B>(guard: P, body: B, x: &E, cap: u64) -> Result<(E, u64), OrbitError>
where
    E: Clone,
    P: Fn(&E) -> bool,
    B: Fn(&E) -> E,
{
    let mut cur = x.clone();
    let mut k = 0u64;
    loop {
        if !guard(&cur) {
            return Ok((cur, k));
        }
        if k == cap {
            return Err(OrbitError::CapExhausted { cap });
        }
        cur = body(&cur);
        k += 1;
    }
}

/// An involution on `0..n` stored as its image table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableInvolution {
    image: Vec<usize>,
}

impl TableInvolution {
    pub fn apply(&self, i: &usize) -> usize {
        self.image[*i]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }
}

/// Seeded involution on `{0, …, size−1}` with exactly `fixed_count` fixed
/// points: a random choice of fixed points and a random perfect matching on
/// the rest.
pub fn random_involution(
    size: usize,
    fixed_count: usize,
    seed: u64,
) -> Result<(FiniteDomain<usize>, TableInvolution), OrbitError> {
    if fixed_count > size || !(size - fixed_count).is_multiple_of(2) {
        return Err(OrbitError::ParityError {
            size,
            fixed: fixed_count,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..size).collect();
    order.shuffle(&mut rng);
    let mut image: Vec<usize> = (0..size).collect();
    for pair in order[fixed_count..].chunks_exact(2) {
        image[pair[0]] = pair[1];
        image[pair[1]] = pair[0];
    }
    let domain = FiniteDomain::new(0..size)?;
    Ok((domain, TableInvolution { image }))
}
