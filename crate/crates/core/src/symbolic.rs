//! Symbolic powers `I^(k)` of monomial ideals.
//!
//! For a monomial ideal, `I^(k)` is the intersection over the minimal primes
//! `P` of `J(I, P)^k`, which also equals the intersection of `J(I^k, P)`.

use crate::decomp::{ass_primes, localization_kernel, min_primes, MonomialPrime};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;

fn check_input(ideal: &MonomialIdeal, k: u32) -> Result<()> {
    if k == 0 {
        return Err(Error::Precondition(
            "symbolic power exponent must be >= 1".into(),
        ));
    }
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    Ok(())
}

/// `I^(k) = ∩_{P ∈ Min(I)} J(I, P)^k`.
pub fn symbolic_power(ideal: &MonomialIdeal, k: u32) -> Result<MonomialIdeal> {
    check_input(ideal, k)?;
    let kernels = min_primes(ideal)?
        .iter()
        .map(|p| localization_kernel(ideal, p)?.power(k))
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::intersect_all(ideal.nvars(), &kernels)
}

/// `I^(k) = ∩_{P ∈ Min(I)} J(I^k, P)`; powers `I` itself, so it is slower and
/// kept as an independent route.
pub fn symbolic_power_via_power(ideal: &MonomialIdeal, k: u32) -> Result<MonomialIdeal> {
    check_input(ideal, k)?;
    let pk = ideal.power(k)?;
    let kernels = min_primes(ideal)?
        .iter()
        .map(|p| localization_kernel(&pk, p))
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::intersect_all(ideal.nvars(), &kernels)
}

/// `I^(k) = ∩_{P ∈ Min(I)} P^k` for squarefree `I`.
pub fn symbolic_power_squarefree(ideal: &MonomialIdeal, k: u32) -> Result<MonomialIdeal> {
    check_input(ideal, k)?;
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let powers = min_primes(ideal)?
        .iter()
        .map(|p| p.to_ideal().power(k))
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::intersect_all(ideal.nvars(), &powers)
}

/// Result of [`symbolic_equals_ordinary`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicComparison {
    /// `I^(k) = I^k`, by direct comparison.
    pub equal: bool,
    /// `Ass(I^k) = Min(I)`, the associated-prime certificate.
    pub certificate: bool,
    /// `Ass(I^k) ⊆ Ass(I)`. Matches `equal` only when `I` has no embedded
    /// primes; reported for reference.
    pub ass_contained: bool,
    pub ass_power: Vec<MonomialPrime>,
}

/// Decides `I^(k) = I^k` and cross-checks it with the associated primes of
/// `I^k`: the two ideals agree exactly when `I^k` has no embedded primes.
pub fn symbolic_equals_ordinary(ideal: &MonomialIdeal, k: u32) -> Result<SymbolicComparison> {
    let symbolic = symbolic_power(ideal, k)?;
    let ordinary = ideal.power(k)?;
    let ass_power = ass_primes(&ordinary)?;
    let min = min_primes(ideal)?;
    let ass = ass_primes(ideal)?;
    let certificate = ass_power.iter().all(|p| min.contains(p));
    let ass_contained = ass_power.iter().all(|p| ass.contains(p));
    let equal = symbolic == ordinary;
    if equal != certificate {
        return Err(Error::Precondition(format!(
            "internal disagreement: I^(k) = I^k is {equal} but Ass(I^k) = Min(I) is {certificate}"
        )));
    }
    Ok(SymbolicComparison {
        equal,
        certificate,
        ass_contained,
        ass_power,
    })
}
