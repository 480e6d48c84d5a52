//! Minimal primes, localization kernels `J(I, P)`, radicals through the
//! Alexander dual, and irreducible decompositions.

use std::collections::HashMap;
use std::fmt;

use crate::complex::{minimal_transversals, SimplicialComplex};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::limits;
use crate::monomial::{Monomial, VarSet};

/// The monomial prime `P_B = <x_i : i ∈ B>`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct MonomialPrime {
    n: usize,
    vars: VarSet,
}

impl MonomialPrime {
    pub fn new(n: usize, vars: VarSet) -> Result<Self> {
        if !vars.is_subset(VarSet::full(n)) {
            return Err(Error::IndexOutOfRange {
                index: vars.max_index().map_or(0, |m| m + 1),
                nvars: n,
            });
        }
        Ok(MonomialPrime { n, vars })
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn vars(&self) -> VarSet {
        self.vars
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::prime(self.n, self.vars).expect("validated on construction")
    }
}

impl fmt::Display for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_ideal().fmt(f)
    }
}

fn sort_primes(primes: &mut Vec<MonomialPrime>) {
    primes.sort_by_key(|p| (p.vars.len(), p.vars.to_one_based()));
    primes.dedup();
}

fn require_proper_nonzero(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.is_zero() {
        Err(Error::ZeroIdeal)
    } else if ideal.is_unit() {
        Err(Error::UnitIdeal)
    } else {
        Ok(())
    }
}

/// The eliminating complex: `A` is a face iff some generator's support
/// misses `A`, so the minimal nonfaces are the minimal transversals of the
/// generator supports.
pub fn eliminating_complex(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    require_proper_nonzero(ideal)?;
    let supports: Vec<VarSet> = ideal.gens().iter().map(Monomial::support).collect();
    SimplicialComplex::from_nonfaces(ideal.nvars(), minimal_transversals(&supports)?)
}

/// One prime per minimal nonface of the eliminating complex.
pub fn min_primes(ideal: &MonomialIdeal) -> Result<Vec<MonomialPrime>> {
    let c = eliminating_complex(ideal)?;
    let mut out: Vec<MonomialPrime> = c
        .minimal_nonfaces()
        .iter()
        .map(|&b| MonomialPrime {
            n: ideal.nvars(),
            vars: b,
        })
        .collect();
    sort_primes(&mut out);
    Ok(out)
}

/// `J(I, P)`: the generators restricted to the variables of `P`.
pub fn localization_kernel(ideal: &MonomialIdeal, prime: &MonomialPrime) -> Result<MonomialIdeal> {
    if ideal.nvars() != prime.n {
        return Err(Error::AmbientMismatch {
            left: ideal.nvars(),
            right: prime.n,
        });
    }
    Ok(MonomialIdeal::from_checked(
        ideal.nvars(),
        ideal
            .gens()
            .iter()
            .map(|g| g.restrict_unchecked(&prime.vars))
            .collect(),
    ))
}

/// `√I` as the Stanley–Reisner ideal of the Alexander dual of the
/// eliminating complex.
pub fn radical_via_dual(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    Ok(eliminating_complex(ideal)?
        .alexander_dual()?
        .stanley_reisner())
}

/// Irredundant decomposition of `I` into ideals generated by pure powers.
///
/// Splits on a generator `g = x_j^e * b` with `b ≠ 1`:
/// `I = (I + <x_j^e>) ∩ (I + <b>)`, memoized on the canonical form.
/// Components containing another component are dropped; since irreducible
/// monomial ideals are prime in the lattice of monomial ideals, what is left
/// is irredundant.
pub fn irreducible_decomposition(ideal: &MonomialIdeal) -> Result<Vec<MonomialIdeal>> {
    require_proper_nonzero(ideal)?;
    let mut memo: HashMap<MonomialIdeal, Vec<MonomialIdeal>> = HashMap::new();
    let comps = split(ideal, &mut memo)?;
    let mut comps = comps;
    comps.sort_by(|a, b| b.gens().cmp(a.gens()));
    comps.dedup();
    let mut kept: Vec<MonomialIdeal> = Vec::new();
    for (i, q) in comps.iter().enumerate() {
        let redundant = comps
            .iter()
            .enumerate()
            .any(|(j, p)| i != j && p.is_subset(q).expect("same ambient") && p != q);
        if !redundant {
            kept.push(q.clone());
        }
    }
    Ok(kept)
}

fn split(
    ideal: &MonomialIdeal,
    memo: &mut HashMap<MonomialIdeal, Vec<MonomialIdeal>>,
) -> Result<Vec<MonomialIdeal>> {
    if let Some(hit) = memo.get(ideal) {
        return Ok(hit.clone());
    }
    limits::check("decomposition nodes", memo.len())?;
    let n = ideal.nvars();
    let result = match ideal.gens().iter().find(|g| g.support().len() >= 2) {
        None => vec![ideal.clone()],
        Some(g) => {
            let j = g.support().iter().next().expect("nonempty support");
            let a = Monomial::var_power(n, j, g.exponent(j))?;
            let b = g.colon(&a);
            let mut left = split(&ideal.sum(&MonomialIdeal::principal(a))?, memo)?;
            let right = split(&ideal.sum(&MonomialIdeal::principal(b))?, memo)?;
            left.extend(right);
            left
        }
    };
    memo.insert(ideal.clone(), result.clone());
    Ok(result)
}

/// Associated primes: the radicals of the irreducible components.
pub fn ass_primes(ideal: &MonomialIdeal) -> Result<Vec<MonomialPrime>> {
    let mut out: Vec<MonomialPrime> = irreducible_decomposition(ideal)?
        .iter()
        .map(|q| MonomialPrime {
            n: ideal.nvars(),
            vars: q.support(),
        })
        .collect();
    sort_primes(&mut out);
    Ok(out)
}
