//! Integral closure of monomial ideals via the Newton polyhedron.

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::limits;
use crate::lp::in_newton_polyhedron;
use crate::monomial::Monomial;

/// `u ∈ Ī`: the exponent of `u` lies in `conv(G(I)) + R^n_{>=0}`, decided
/// by exact rational linear programming.
pub fn is_integral_over(u: &Monomial, ideal: &MonomialIdeal) -> Result<bool> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.contains(u)? {
        return Ok(true);
    }
    if !ideal.radical().contains_unchecked(&u.sqfree_part()) {
        return Ok(false);
    }
    let verts: Vec<&[u32]> = ideal.gens().iter().map(Monomial::exponents).collect();
    Ok(in_newton_polyhedron(u.exponents(), &verts))
}

/// Minimal generators of `Ī`.
///
/// They lie in the box `prod [0, max_g g_i]`: a polyhedron point whose i-th
/// coordinate exceeds every generator's stays inside after lowering that
/// coordinate. Box points are scanned by total degree so that each accepted
/// point is minimal when found.
pub fn integral_closure(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let n = ideal.nvars();
    let mut bound = vec![0u32; n];
    for g in ideal.gens() {
        for (b, &e) in bound.iter_mut().zip(g.exponents()) {
            *b = (*b).max(e);
        }
    }
    let size = bound
        .iter()
        .try_fold(1usize, |acc, &b| acc.checked_mul(b as usize + 1))
        .unwrap_or(usize::MAX);
    limits::check("closure box points", size)?;

    let mut points: Vec<Monomial> = vec![Monomial::one(n)];
    for (i, &b) in bound.iter().enumerate() {
        points = points
            .into_iter()
            .flat_map(|p| (0..=b).map(move |e| p.shift(i, i64::from(e)).expect("small")))
            .collect();
    }
    points.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));

    let radical = ideal.radical();
    let verts: Vec<&[u32]> = ideal.gens().iter().map(Monomial::exponents).collect();
    let mut found: Vec<Monomial> = Vec::new();
    for p in points {
        if found.iter().any(|g| g.divides(&p)) {
            continue;
        }
        let member = ideal.contains_unchecked(&p)
            || (radical.contains_unchecked(&p.sqfree_part())
                && in_newton_polyhedron(p.exponents(), &verts));
        if member {
            found.push(p);
        }
    }
    Ok(MonomialIdeal::from_checked(n, found))
}

/// Outcome of [`closure_oracle`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OracleVerdict {
    /// `u^k ∈ I^k` for this least `k`.
    Member(u32),
    NotFoundUpToBound(u32),
}

/// Brute-force integral dependence: the least `k <= k_max` with `u^k ∈ I^k`.
pub fn closure_oracle(u: &Monomial, ideal: &MonomialIdeal, k_max: u32) -> Result<OracleVerdict> {
    if k_max == 0 {
        return Err(Error::Precondition("k_max must be >= 1".into()));
    }
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let mut power = ideal.clone();
    for k in 1..=k_max {
        if k > 1 {
            power = power.product(ideal)?;
        }
        if power.contains(&u.try_pow(k)?)? {
            return Ok(OracleVerdict::Member(k));
        }
    }
    Ok(OracleVerdict::NotFoundUpToBound(k_max))
}
