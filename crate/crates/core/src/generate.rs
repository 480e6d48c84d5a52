//! Seeded random instances of each ideal class.
//!
//! The generator is ChaCha8 seeded with `seed` through `seed_from_u64`, so a
//! parameter set always yields the same ideal on every platform.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classes::{
    count_degree, degree_monomials_desc, is_stably_lexsegment, lucas_nonzero, Characteristic,
    IdealClass,
};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::limits;
use crate::monomial::{Monomial, MAX_VARS};

/// Powers checked when sampling stably lexsegment ideals.
pub const STABLY_LEX_BOUND: u32 = 3;

const STABLY_LEX_ATTEMPTS: u64 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenParams {
    pub class: IdealClass,
    pub n: usize,
    /// Largest generator degree before closing under the class moves.
    pub max_deg: u32,
    /// Number of seed monomials (or initial-segment lengths).
    pub max_gens: usize,
    pub seed: u64,
    /// Used by the Borel-fixed class.
    pub characteristic: Characteristic,
}

impl GenParams {
    pub fn new(class: IdealClass, n: usize, max_deg: u32, max_gens: usize, seed: u64) -> Self {
        GenParams {
            class,
            n,
            max_deg,
            max_gens,
            seed,
            characteristic: Characteristic::ZERO,
        }
    }

    pub fn with_characteristic(mut self, ch: Characteristic) -> Self {
        self.characteristic = ch;
        self
    }
}

/// A proper nonzero ideal of the requested class.
pub fn gen_ideal(params: &GenParams) -> Result<MonomialIdeal> {
    let GenParams {
        class,
        n,
        max_deg,
        max_gens,
        seed,
        characteristic,
    } = *params;
    if n == 0 || n > MAX_VARS {
        return Err(Error::InvalidInput(format!("n must be in 1..={MAX_VARS}")));
    }
    if max_deg == 0 || max_gens == 0 {
        return Err(Error::InvalidInput(
            "max_deg and max_gens must be >= 1".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match class {
        IdealClass::UniversalLexsegment => Ok(universal_lexsegment(&mut rng, n, max_deg, max_gens)),
        IdealClass::Lexsegment => lexsegment(&mut rng, n, max_deg, max_gens),
        IdealClass::StronglyStable => {
            let seeds = random_monomials(&mut rng, n, max_deg, max_gens);
            borel_closure(n, seeds, 0)
        }
        IdealClass::BorelFixed => {
            let seeds = random_monomials(&mut rng, n, max_deg, max_gens);
            borel_closure(n, seeds, characteristic.value())
        }
        IdealClass::BorelType => borel_type(&mut rng, n, max_deg, max_gens),
        IdealClass::SquarefreeStronglyStable => squarefree_closure(&mut rng, n, max_deg, max_gens),
        IdealClass::StablyLexsegment => stably_lexsegment(&mut rng, n, max_deg, max_gens),
    }
}

fn random_monomial(rng: &mut ChaCha8Rng, n: usize, d: u32) -> Monomial {
    let mut e = vec![0u32; n];
    for _ in 0..d {
        e[rng.gen_range(0..n)] += 1;
    }
    Monomial::new(e)
}

fn random_monomials(rng: &mut ChaCha8Rng, n: usize, max_deg: u32, count: usize) -> Vec<Monomial> {
    let k = rng.gen_range(1..=count);
    (0..k)
        .map(|_| {
            let d = rng.gen_range(1..=max_deg);
            random_monomial(rng, n, d)
        })
        .collect()
}

/// Staircase `x_i^{a_i} * prod_{j<i} x_j^{a_j - 1}` in the first variables,
/// keeping every generator degree at most `max_deg`.
fn universal_lexsegment(
    rng: &mut ChaCha8Rng,
    n: usize,
    max_deg: u32,
    max_gens: usize,
) -> MonomialIdeal {
    let len = rng.gen_range(1..=n.min(max_gens));
    let mut stair = vec![0u32; n];
    let mut used = 0u32;
    let mut gens = Vec::with_capacity(len);
    for i in 0..len {
        if used >= max_deg {
            break;
        }
        let a = rng.gen_range(1..=max_deg - used);
        let mut g = stair.clone();
        g[i] = a;
        gens.push(Monomial::new(g));
        stair[i] = a - 1;
        used += a - 1;
    }
    MonomialIdeal::from_checked(n, gens)
}

/// Sum of ideals generated by initial lex segments of single degrees.
fn lexsegment(
    rng: &mut ChaCha8Rng,
    n: usize,
    max_deg: u32,
    max_gens: usize,
) -> Result<MonomialIdeal> {
    let pieces = rng.gen_range(1..=2);
    let mut gens = Vec::new();
    for _ in 0..pieces {
        let d = rng.gen_range(1..=max_deg);
        limits::check("degree-d monomials", count_degree(n, u64::from(d)))?;
        let all = degree_monomials_desc(n, d);
        let len = rng.gen_range(1..=all.len().min(max_gens));
        gens.extend(all.into_iter().take(len));
    }
    Ok(MonomialIdeal::from_checked(n, gens))
}

/// Smallest ideal containing `seeds` that is closed under the moves
/// `x_i^s * u / x_j^s` (`i < j`). In characteristic 0 only `s = 1` is used
/// (strong stability); in characteristic `p` every `s` with
/// `binomial(t, s) ≢ 0 mod p` is used.
fn borel_closure(n: usize, seeds: Vec<Monomial>, p: u64) -> Result<MonomialIdeal> {
    let mut seen: BTreeSet<Monomial> = BTreeSet::new();
    let mut stack = seeds;
    while let Some(u) = stack.pop() {
        if !seen.insert(u.clone()) {
            continue;
        }
        limits::check("closure orbit", seen.len())?;
        for j in u.support().iter() {
            let t = u.exponent(j);
            let steps: Vec<u32> = if p == 0 {
                vec![1]
            } else {
                (1..=t).filter(|&s| lucas_nonzero(t, s, p)).collect()
            };
            for s in steps {
                for i in 0..j {
                    let m = u
                        .shift(j, -i64::from(s))
                        .and_then(|m| m.shift(i, i64::from(s)))
                        .ok_or(Error::ExponentOverflow)?;
                    if !seen.contains(&m) {
                        stack.push(m);
                    }
                }
            }
        }
    }
    Ok(MonomialIdeal::from_checked(n, seen.into_iter().collect()))
}

/// A strongly stable ideal combined with `<x1^{a1}, .., xr^{ar}>` by a sum,
/// product or intersection.
fn borel_type(
    rng: &mut ChaCha8Rng,
    n: usize,
    max_deg: u32,
    max_gens: usize,
) -> Result<MonomialIdeal> {
    let seeds = random_monomials(rng, n, max_deg, max_gens);
    let stable = borel_closure(n, seeds, 0)?;
    let r = rng.gen_range(1..=n);
    let powers = MonomialIdeal::from_checked(
        n,
        (0..r)
            .map(|i| Monomial::var_power(n, i, rng.gen_range(1..=max_deg)))
            .collect::<Result<Vec<_>>>()?,
    );
    match rng.gen_range(0..3) {
        0 => stable.sum(&powers),
        1 => stable.product(&powers),
        _ => stable.intersect(&powers),
    }
}

/// Closure of random squarefree monomials under `x_i * u / x_j`
/// (`i < j`, `x_j | u`, `x_i ∤ u`).
fn squarefree_closure(
    rng: &mut ChaCha8Rng,
    n: usize,
    max_deg: u32,
    max_gens: usize,
) -> Result<MonomialIdeal> {
    let top = (max_deg as usize).min(n);
    let k = rng.gen_range(1..=max_gens);
    let mut stack = Vec::with_capacity(k);
    let vars: Vec<usize> = (0..n).collect();
    for _ in 0..k {
        let d = rng.gen_range(1..=top);
        let mut e = vec![0u32; n];
        for &v in vars.choose_multiple(rng, d) {
            e[v] = 1;
        }
        stack.push(Monomial::new(e));
    }
    let mut seen: BTreeSet<Monomial> = BTreeSet::new();
    while let Some(u) = stack.pop() {
        if !seen.insert(u.clone()) {
            continue;
        }
        limits::check("closure orbit", seen.len())?;
        for j in u.support().iter() {
            for i in (0..j).filter(|&i| u.exponent(i) == 0) {
                let mut e = u.exponents().to_vec();
                e[j] = 0;
                e[i] = 1;
                let m = Monomial::new(e);
                if !seen.contains(&m) {
                    stack.push(m);
                }
            }
        }
    }
    Ok(MonomialIdeal::from_checked(n, seen.into_iter().collect()))
}

/// Lexsegment samples kept when their first powers stay lexsegment; falls
/// back to `<x1^d>`, whose powers are all lexsegment.
fn stably_lexsegment(
    rng: &mut ChaCha8Rng,
    n: usize,
    max_deg: u32,
    max_gens: usize,
) -> Result<MonomialIdeal> {
    for _ in 0..STABLY_LEX_ATTEMPTS {
        let cand = lexsegment(rng, n, max_deg, max_gens)?;
        if is_stably_lexsegment(&cand, STABLY_LEX_BOUND)?.holds() {
            return Ok(cand);
        }
    }
    Ok(MonomialIdeal::principal(Monomial::var_power(
        n,
        0,
        rng.gen_range(1..=max_deg),
    )?))
}
