#![allow(dead_code)]

use monideal::monomial::MAX_VARS;
use monideal::{gen_ideal, Characteristic, GenParams, IdealClass, Monomial, MonomialIdeal, VarSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const CHARS: [u64; 4] = [0, 2, 3, 5];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn ideal(n: usize, rows: &[&[u32]]) -> MonomialIdeal {
    MonomialIdeal::from_exponents(n, rows).unwrap()
}

pub fn mono(e: &[u32]) -> Monomial {
    Monomial::new(e.to_vec())
}

/// Characteristic used for the Borel-fixed instance with this seed.
pub fn char_for(seed: u64) -> Characteristic {
    Characteristic::new(CHARS[(seed % 4) as usize]).unwrap()
}

/// Desk-scale parameters cycling with the seed: 2..=4 variables, degree
/// 2..=4, 1..=3 seed generators.
pub fn params(class: IdealClass, seed: u64) -> GenParams {
    let n = 2 + (seed % 3) as usize;
    let max_deg = 2 + ((seed / 3) % 3) as u32;
    let max_gens = 1 + ((seed / 9) % 3) as usize;
    GenParams::new(class, n, max_deg, max_gens, seed).with_characteristic(char_for(seed))
}

pub fn instance(class: IdealClass, seed: u64) -> MonomialIdeal {
    gen_ideal(&params(class, seed)).unwrap()
}

pub fn instances(class: IdealClass, count: u64, base: u64) -> Vec<(u64, MonomialIdeal)> {
    (base..base + count)
        .map(|s| (s, instance(class, s)))
        .collect()
}

/// An arbitrary monomial ideal with no class structure.
pub fn random_ideal(
    rng: &mut ChaCha8Rng,
    n: usize,
    max_deg: u32,
    max_gens: usize,
) -> MonomialIdeal {
    let k = rng.gen_range(1..=max_gens);
    let gens = (0..k)
        .map(|_| {
            let d = rng.gen_range(1..=max_deg);
            let mut e = vec![0u32; n];
            for _ in 0..d {
                e[rng.gen_range(0..n)] += 1;
            }
            Monomial::new(e)
        })
        .collect::<Vec<_>>();
    MonomialIdeal::minimalize(gens, n).unwrap()
}

pub fn random_squarefree(rng: &mut ChaCha8Rng, n: usize, max_gens: usize) -> MonomialIdeal {
    let k = rng.gen_range(1..=max_gens);
    let gens = (0..k)
        .map(|_| {
            let mut e: Vec<u32> = (0..n).map(|_| u32::from(rng.gen_bool(0.5))).collect();
            if e.iter().all(|&x| x == 0) {
                e[rng.gen_range(0..n)] = 1;
            }
            Monomial::new(e)
        })
        .collect::<Vec<_>>();
    MonomialIdeal::minimalize(gens, n).unwrap()
}

/// A nonempty set of variables.
pub fn random_varset(rng: &mut ChaCha8Rng, n: usize) -> VarSet {
    assert!(n <= MAX_VARS);
    loop {
        let bits = rng.gen_range(1u64..(1u64 << n));
        let s = VarSet::from_bits(bits);
        if !s.is_empty() {
            return s;
        }
    }
}

/// A mix of every generated class and arbitrary ideals.
pub fn mixed_instance(seed: u64) -> MonomialIdeal {
    let k = (seed % 8) as usize;
    if k < IdealClass::ALL.len() {
        instance(IdealClass::ALL[k], seed)
    } else {
        let mut r = rng(seed ^ 0x9e37_79b9);
        let n = 2 + (seed % 3) as usize;
        random_ideal(&mut r, n, 4, 4)
    }
}

/// Every monomial with exponents in `0..=bound` in each of `n` variables.
pub fn box_points(n: usize, bound: u32) -> Vec<Monomial> {
    let mut pts = vec![Vec::<u32>::new()];
    for _ in 0..n {
        pts = pts
            .into_iter()
            .flat_map(|p| {
                (0..=bound).map(move |e| {
                    let mut q = p.clone();
                    q.push(e);
                    q
                })
            })
            .collect();
    }
    pts.into_iter().map(Monomial::new).collect()
}

pub fn max_exponent(i: &MonomialIdeal) -> u32 {
    i.gens()
        .iter()
        .flat_map(|g| g.exponents().iter().copied())
        .max()
        .unwrap_or(0)
}

/// Whether multiplication by `x_i` on `S/L` has a kernel of finite length,
/// by counting standard monomials killed by `x_i`. Membership of `u` and of
/// `x_i u` only depends on `u` capped at `D + 1` (`D` the largest generator
/// exponent), so the kernel is infinite iff a witness with some coordinate
/// equal to `D + 1` exists in the box `[0, D + 1]^n`.
pub fn finite_kernel_oracle(l: &MonomialIdeal, i: usize) -> bool {
    let n = l.nvars();
    let d = max_exponent(l) + 1;
    box_points(n, d).iter().all(|u| {
        let capped = u.exponents().contains(&d);
        if !capped || l.contains(u).unwrap() {
            return true;
        }
        let mut e = u.exponents().to_vec();
        e[i] += 1;
        !l.contains(&Monomial::new(e)).unwrap()
    })
}

/// `x_n, .., x_1` almost regular on `S/I`, using the kernel oracle and
/// adding each tested variable to the ideal.
pub fn almost_regular_oracle(ideal: &MonomialIdeal) -> bool {
    let n = ideal.nvars();
    let mut cur = ideal.clone();
    for i in (0..n).rev() {
        if !finite_kernel_oracle(&cur, i) {
            return false;
        }
        cur = cur
            .sum(&MonomialIdeal::principal(Monomial::var(n, i).unwrap()))
            .unwrap();
    }
    true
}

/// Brute-force `u ∈ I` test through exponent rows, without library membership.
pub fn divides_some(ideal: &MonomialIdeal, u: &Monomial) -> bool {
    ideal
        .gens()
        .iter()
        .any(|g| g.exponents().iter().zip(u.exponents()).all(|(a, b)| a <= b))
}
