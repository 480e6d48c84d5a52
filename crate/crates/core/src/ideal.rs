//! Monomial ideals in canonical form and the basic ideal operations.

use std::fmt;

use crate::error::{Error, Result};
use crate::limits;
use crate::monomial::{Monomial, VarSet, MAX_VARS};

/// A monomial ideal of `K[x1, .., xn]`, stored by its minimal generators.
///
/// Generators are sorted descending in pure lex order, so two values are
/// equal exactly when the ideals are equal. The zero ideal has no generators;
/// the unit ideal is generated by `1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Builds the ideal generated by `raw`, discarding redundant monomials.
    pub fn minimalize<I>(raw: I, n: usize) -> Result<Self>
    where
        I: IntoIterator<Item = Monomial>,
    {
        if n > MAX_VARS {
            return Err(Error::InvalidInput(format!(
                "at most {MAX_VARS} variables are supported"
            )));
        }
        let mut cands: Vec<Monomial> = Vec::new();
        for u in raw {
            if u.nvars() != n {
                return Err(Error::AmbientMismatch {
                    left: n,
                    right: u.nvars(),
                });
            }
            cands.push(u);
        }
        Ok(Self::from_checked(n, cands))
    }

    /// Minimalizes monomials already known to live in `n` variables.
    pub(crate) fn from_checked(n: usize, mut cands: Vec<Monomial>) -> Self {
        cands.sort_unstable_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
        cands.dedup();
        let mut kept: Vec<Monomial> = Vec::new();
        for u in cands {
            // Anything that divides u has degree <= deg(u) and was seen first.
            if !kept.iter().any(|g| g.divides(&u)) {
                kept.push(u);
            }
        }
        kept.sort_unstable_by(|a, b| b.cmp(a));
        MonomialIdeal { n, gens: kept }
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: Vec::new(),
        }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: vec![Monomial::one(n)],
        }
    }

    pub fn principal(u: Monomial) -> Self {
        MonomialIdeal {
            n: u.nvars(),
            gens: vec![u],
        }
    }

    /// The monomial prime `<x_i : i in vars>`.
    pub fn prime(n: usize, vars: VarSet) -> Result<Self> {
        let gens = vars
            .iter()
            .map(|i| Monomial::var(n, i))
            .collect::<Result<Vec<_>>>()?;
        Self::minimalize(gens, n)
    }

    /// `<x1, .., xn>`.
    pub fn maximal(n: usize) -> Self {
        Self::prime(n, VarSet::full(n)).expect("indices are in range")
    }

    /// Parses exponent rows, e.g. `&[&[3, 0], &[1, 2]]`.
    pub fn from_exponents(n: usize, rows: &[&[u32]]) -> Result<Self> {
        Self::minimalize(rows.iter().map(|r| Monomial::new(r.to_vec())), n)
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    /// Number of minimal generators.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_proper(&self) -> bool {
        !self.is_unit()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    pub fn max_degree(&self) -> u64 {
        self.gens.iter().map(Monomial::degree).max().unwrap_or(0)
    }

    fn check_ambient(&self, n: usize) -> Result<()> {
        if self.n != n {
            return Err(Error::AmbientMismatch {
                left: self.n,
                right: n,
            });
        }
        Ok(())
    }

    pub fn contains(&self, u: &Monomial) -> Result<bool> {
        self.check_ambient(u.nvars())?;
        Ok(self.contains_unchecked(u))
    }

    pub(crate) fn contains_unchecked(&self, u: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(u))
    }

    /// `self ⊆ other`.
    pub fn is_subset(&self, other: &MonomialIdeal) -> Result<bool> {
        self.check_ambient(other.n)?;
        Ok(self.gens.iter().all(|g| other.contains_unchecked(g)))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ambient(other.n)?;
        let all = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(Self::from_checked(self.n, all))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ambient(other.n)?;
        limits::check("product terms", self.len().saturating_mul(other.len()))?;
        let mut all = Vec::with_capacity(self.len() * other.len());
        for a in &self.gens {
            for b in &other.gens {
                all.push(a.try_mul(b)?);
            }
        }
        Ok(Self::from_checked(self.n, all))
    }

    /// `self^k` by binary exponentiation, minimalizing after every product.
    pub fn power(&self, k: u32) -> Result<MonomialIdeal> {
        if k == 0 {
            return Err(Error::Precondition("power exponent must be >= 1".into()));
        }
        let mut result: Option<MonomialIdeal> = None;
        let mut base = self.clone();
        let mut k = k;
        loop {
            if k & 1 == 1 {
                result = Some(match result {
                    None => base.clone(),
                    Some(r) => r.product(&base)?,
                });
            }
            k >>= 1;
            if k == 0 {
                break;
            }
            base = base.product(&base)?;
        }
        Ok(result.expect("k >= 1"))
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ambient(other.n)?;
        limits::check("intersection terms", self.len().saturating_mul(other.len()))?;
        let mut all = Vec::with_capacity(self.len() * other.len());
        for a in &self.gens {
            for b in &other.gens {
                all.push(a.lcm(b));
            }
        }
        Ok(Self::from_checked(self.n, all))
    }

    /// Intersection of a family; the empty family gives the unit ideal.
    pub fn intersect_all<'a, I>(n: usize, ideals: I) -> Result<MonomialIdeal>
    where
        I: IntoIterator<Item = &'a MonomialIdeal>,
    {
        let mut acc = MonomialIdeal::unit(n);
        for j in ideals {
            acc = acc.intersect(j)?;
        }
        Ok(acc)
    }

    /// `self : <v>`.
    pub fn colon_monomial(&self, v: &Monomial) -> Result<MonomialIdeal> {
        self.check_ambient(v.nvars())?;
        Ok(Self::from_checked(
            self.n,
            self.gens.iter().map(|g| g.colon(v)).collect(),
        ))
    }

    /// `self : other`, the intersection of `self : v` over generators `v`.
    pub fn colon(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ambient(other.n)?;
        if other.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        let mut acc: Option<MonomialIdeal> = None;
        for v in &other.gens {
            let q = self.colon_monomial(v)?;
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersect(&q)?,
            });
        }
        Ok(acc.expect("nonzero divisor"))
    }

    /// `self : other^∞`, the stable value of iterated colons.
    pub fn saturate(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        let mut cur = self.colon(other)?;
        loop {
            let next = cur.colon(other)?;
            if next == cur {
                return Ok(cur);
            }
            cur = next;
        }
    }

    /// `√I`: the squarefree parts of the generators, minimalized.
    pub fn radical(&self) -> MonomialIdeal {
        Self::from_checked(
            self.n,
            self.gens.iter().map(Monomial::sqfree_part).collect(),
        )
    }

    /// Image of `I + <x_j>`: drops generators divisible by `x_j` and adds `x_j`.
    pub fn set_var_zero(&self, j: usize) -> Result<MonomialIdeal> {
        let xj = Monomial::var(self.n, j)?;
        let mut all: Vec<Monomial> = self
            .gens
            .iter()
            .filter(|g| g.exponent(j) == 0)
            .cloned()
            .collect();
        all.push(xj);
        Ok(Self::from_checked(self.n, all))
    }

    /// Union of the supports of all generators.
    pub fn support(&self) -> VarSet {
        self.gens
            .iter()
            .fold(VarSet::empty(), |acc, g| acc.union(g.support()))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return f.write_str("<0>");
        }
        f.write_str("<")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(">")
    }
}

/// One step of [`verify_almost_regular_sequence`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlmostRegularStep {
    /// 0-based index of the variable tested.
    pub variable: usize,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlmostRegularReport {
    pub steps: Vec<AlmostRegularStep>,
}

impl AlmostRegularReport {
    pub fn holds(&self) -> bool {
        self.steps.iter().all(|s| s.passed)
    }
}

/// Checks that `xn, .., x1` is an almost regular sequence on `S/I`.
///
/// At the step for `x_i` the current ring is `K[x1..xi]`, realized by keeping
/// `x_{i+1}, .., x_n` inside the ideal. `x_i` is almost regular on `S/L`
/// iff `(L : x_i) ⊆ L : <x1..xi>^∞`.
pub fn verify_almost_regular_sequence(ideal: &MonomialIdeal) -> Result<AlmostRegularReport> {
    let n = ideal.nvars();
    let mut cur = ideal.clone();
    let mut steps = Vec::with_capacity(n);
    for i in (0..n).rev() {
        let xi = Monomial::var(n, i)?;
        let ring_max = MonomialIdeal::prime(n, VarSet::full(i + 1))?;
        let colon = cur.colon_monomial(&xi)?;
        let sat = cur.saturate(&ring_max)?;
        steps.push(AlmostRegularStep {
            variable: i,
            passed: colon.is_subset(&sat)?,
        });
        cur = cur.set_var_zero(i)?;
    }
    Ok(AlmostRegularReport { steps })
}

#[cfg(test)]
pub(crate) mod test_util {
    use super::*;

    /// Ideal from 1-based-free exponent rows.
    pub fn ideal(n: usize, rows: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, rows).unwrap()
    }

    pub fn mono(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }
}
