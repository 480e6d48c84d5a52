//! Membership tests for the classes
//! universal lexsegment ⇒ lexsegment ⇒ strongly stable ⇒ Borel-fixed ⇒ Borel type,
//! plus squarefree strong stability and the bounded stably-lexsegment test.

use std::fmt;
use std::str::FromStr;

use crate::decomp;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::limits;
use crate::monomial::{Monomial, VarSet};

/// Default bound for [`is_stably_lexsegment`].
pub const DEFAULT_K_MAX: u32 = 5;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum IdealClass {
    BorelType,
    BorelFixed,
    StronglyStable,
    Lexsegment,
    UniversalLexsegment,
    SquarefreeStronglyStable,
    StablyLexsegment,
}

impl IdealClass {
    pub const ALL: [IdealClass; 7] = [
        IdealClass::BorelType,
        IdealClass::BorelFixed,
        IdealClass::StronglyStable,
        IdealClass::Lexsegment,
        IdealClass::UniversalLexsegment,
        IdealClass::SquarefreeStronglyStable,
        IdealClass::StablyLexsegment,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdealClass::BorelType => "borel-type",
            IdealClass::BorelFixed => "borel-fixed",
            IdealClass::StronglyStable => "strongly-stable",
            IdealClass::Lexsegment => "lexsegment",
            IdealClass::UniversalLexsegment => "universal-lexsegment",
            IdealClass::SquarefreeStronglyStable => "squarefree-strongly-stable",
            IdealClass::StablyLexsegment => "stably-lexsegment",
        }
    }
}

impl fmt::Display for IdealClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdealClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.replace('_', "-");
        IdealClass::ALL
            .into_iter()
            .find(|c| c.name() == norm)
            .ok_or_else(|| Error::InvalidInput(format!("unknown ideal class `{s}`")))
    }
}

/// Characteristic of the coefficient field: 0 or a prime.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Characteristic(u64);

impl Characteristic {
    pub const ZERO: Characteristic = Characteristic(0);

    pub fn new(p: u64) -> Result<Self> {
        if p == 0 || is_prime(p) {
            Ok(Characteristic(p))
        } else {
            Err(Error::InvalidCharacteristic(p))
        }
    }

    pub fn value(self) -> u64 {
        self.0
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// `binomial(t, s) ≢ 0 (mod p)`, by Lucas: every base-p digit of `s` is at
/// most the matching digit of `t`.
pub(crate) fn lucas_nonzero(t: u32, s: u32, p: u64) -> bool {
    let (mut t, mut s) = (u64::from(t), u64::from(s));
    while s > 0 {
        if s % p > t % p {
            return false;
        }
        s /= p;
        t /= p;
    }
    true
}

/// `I : x_i^∞ = I : <x1..xi>^∞` for every `i`.
pub fn is_borel_type(ideal: &MonomialIdeal) -> Result<bool> {
    let n = ideal.nvars();
    for i in 0..n {
        let xi = MonomialIdeal::principal(Monomial::var(n, i)?);
        let initial = MonomialIdeal::prime(n, VarSet::full(i + 1))?;
        if ideal.saturate(&xi)? != ideal.saturate(&initial)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Borel type via associated primes: each one must be `<x1..xr>`.
pub fn is_borel_type_via_ass(ideal: &MonomialIdeal) -> Result<bool> {
    if ideal.is_zero() || ideal.is_unit() {
        return Ok(true);
    }
    let ass = decomp::ass_primes(ideal)?;
    Ok(ass.iter().all(|p| p.vars() == VarSet::full(p.vars().len())))
}

/// Every exchange `x_i * g / x_j` (`i < j`, `x_j | g`) of a generator stays in `I`.
pub fn is_strongly_stable(ideal: &MonomialIdeal) -> bool {
    ideal.gens().iter().all(|g| {
        g.support().iter().all(|j| {
            (0..j).all(|i| {
                let moved = g.shift(j, -1).and_then(|m| m.shift(i, 1));
                moved.is_none_or(|m| ideal.contains_unchecked(&m))
            })
        })
    })
}

/// Borel-fixed over a field of characteristic `ch`.
///
/// In characteristic 0 this is strong stability. In characteristic `p` a
/// generator `g` with `x_j`-exponent `t` must admit every move
/// `x_i^s * g / x_j^s` (`i < j`) with `binomial(t, s) ≢ 0 mod p`.
pub fn is_borel_fixed(ideal: &MonomialIdeal, ch: Characteristic) -> bool {
    let p = ch.value();
    if p == 0 {
        return is_strongly_stable(ideal);
    }
    ideal.gens().iter().all(|g| {
        g.support().iter().all(|j| {
            let t = g.exponent(j);
            (1..=t).filter(|&s| lucas_nonzero(t, s, p)).all(|s| {
                (0..j).all(|i| {
                    let moved = g
                        .shift(j, -i64::from(s))
                        .and_then(|m| m.shift(i, i64::from(s)));
                    moved.is_none_or(|m| ideal.contains_unchecked(&m))
                })
            })
        })
    })
}

/// Number of degree-`d` monomials in `n` variables, saturating.
pub(crate) fn count_degree(n: usize, d: u64) -> usize {
    if n == 0 {
        return usize::from(d == 0);
    }
    // binomial(n - 1 + d, n - 1)
    let k = (n - 1) as u128;
    let mut acc: u128 = 1;
    for i in 1..=k {
        acc = acc * (u128::from(d) + i) / i;
        if acc > usize::MAX as u128 {
            return usize::MAX;
        }
    }
    acc as usize
}

/// All degree-`d` monomials in `n` variables, descending in lex order.
pub(crate) fn degree_monomials_desc(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        let n = cur.len();
        if i + 1 == n {
            cur[i] = left;
            out.push(Monomial::new(cur.clone()));
            cur[i] = 0;
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    rec(0, d, &mut vec![0; n], &mut out);
    out
}

/// In each degree up to the largest generator degree, the members of `I`
/// form an initial segment of the lex order on monomials of that degree.
/// Higher degrees follow because the shadow of a lex segment is a lex segment.
pub fn is_lexsegment(ideal: &MonomialIdeal) -> Result<bool> {
    let n = ideal.nvars();
    let min_d = ideal.gens().iter().map(Monomial::degree).min().unwrap_or(0);
    for d in min_d..=ideal.max_degree() {
        limits::check("degree-d monomials", count_degree(n, d))?;
        let d = u32::try_from(d).map_err(|_| Error::ExponentOverflow)?;
        let mut left_segment = false;
        for u in degree_monomials_desc(n, d) {
            let member = ideal.contains_unchecked(&u);
            if member && left_segment {
                return Ok(false);
            }
            if !member {
                left_segment = true;
            }
        }
    }
    Ok(true)
}

/// Universal lexsegment test by generator shape: sorted descending in lex,
/// `u_i = x_i^{a_i} * prod_{j<i} x_j^{a_j - 1}` with every `a_i >= 1`.
/// Returns the witness `(a_1, .., a_m)`.
///
/// The zero and unit ideals qualify with an empty witness.
pub fn universal_lexsegment_witness(ideal: &MonomialIdeal) -> Option<Vec<u32>> {
    if ideal.is_zero() || ideal.is_unit() {
        return Some(Vec::new());
    }
    let n = ideal.nvars();
    let gens = ideal.gens();
    if gens.len() > n {
        return None;
    }
    let mut a: Vec<u32> = Vec::with_capacity(gens.len());
    for (i, u) in gens.iter().enumerate() {
        let ai = u.exponent(i);
        if ai == 0 {
            return None;
        }
        let mut expected = vec![0u32; n];
        for (j, &aj) in a.iter().enumerate() {
            expected[j] = aj - 1;
        }
        expected[i] = ai;
        if u.exponents() != expected.as_slice() {
            return None;
        }
        a.push(ai);
    }
    Some(a)
}

pub fn is_universal_lexsegment(ideal: &MonomialIdeal) -> bool {
    universal_lexsegment_witness(ideal).is_some()
}

/// Universal lexsegment test by the exchange condition: for each generator
/// `u`, each `j` with `x_j | u` and each `i < j`, `x_i * u / x_j^{b_j} ∈ I`.
pub fn is_universal_lexsegment_by_exchange(ideal: &MonomialIdeal) -> bool {
    ideal.gens().iter().all(|u| {
        u.support().iter().all(|j| {
            let stripped = u
                .shift(j, -i64::from(u.exponent(j)))
                .expect("exact exponent");
            (0..j).all(|i| {
                let moved = stripped.shift(i, 1).expect("no overflow at desk scale");
                ideal.contains_unchecked(&moved)
            })
        })
    })
}

/// For a member `u` of `I` with largest support index `m(u)`: every
/// `x_i * u / x_{m(u)}^{b_{m(u)}}` with `i < m(u)` lies in `I`.
pub fn max_support_exchange_holds(ideal: &MonomialIdeal, u: &Monomial) -> Result<bool> {
    if !ideal.contains(u)? {
        return Err(Error::Precondition(format!(
            "{u} is not a member of {ideal}"
        )));
    }
    let Some(m) = u.max_support() else {
        return Ok(true);
    };
    let stripped = u
        .shift(m, -i64::from(u.exponent(m)))
        .expect("exact exponent");
    Ok((0..m).all(|i| {
        stripped
            .shift(i, 1)
            .is_some_and(|w| ideal.contains_unchecked(&w))
    }))
}

/// Squarefree strong stability for generators given as sorted variable lists.
///
/// `universe` lists every variable of the ambient ring; the derived `Ord` of
/// `V` is the priority order, smaller meaning larger in the monomial order.
pub fn is_sqfree_strongly_stable_over<V: Ord + Copy>(gens: &[Vec<V>], universe: &[V]) -> bool {
    let member = |w: &[V]| {
        gens.iter()
            .any(|g| g.iter().all(|v| w.binary_search(v).is_ok()))
    };
    gens.iter().all(|u| {
        u.iter().all(|&i| {
            universe
                .iter()
                .filter(|&&j| j < i && u.binary_search(&j).is_err())
                .all(|&j| {
                    let mut w: Vec<V> = u.iter().copied().filter(|&v| v != i).collect();
                    let pos = w.binary_search(&j).unwrap_err();
                    w.insert(pos, j);
                    member(&w)
                })
        })
    })
}

/// Squarefree strong stability with `x1 > x2 > ... > xn`.
pub fn is_squarefree_strongly_stable(ideal: &MonomialIdeal) -> Result<bool> {
    let order: Vec<usize> = (0..ideal.nvars()).collect();
    is_squarefree_strongly_stable_with_order(ideal, &order)
}

/// Squarefree strong stability under the variable order `order`, listed
/// from the largest variable to the smallest (0-based indices).
pub fn is_squarefree_strongly_stable_with_order(
    ideal: &MonomialIdeal,
    order: &[usize],
) -> Result<bool> {
    let n = ideal.nvars();
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let mut rank = vec![usize::MAX; n];
    for (r, &v) in order.iter().enumerate() {
        if v >= n || rank[v] != usize::MAX {
            return Err(Error::InvalidInput(
                "order is not a permutation of the variables".into(),
            ));
        }
        rank[v] = r;
    }
    if order.len() != n {
        return Err(Error::InvalidInput(
            "order is not a permutation of the variables".into(),
        ));
    }
    let gens: Vec<Vec<usize>> = ideal
        .gens()
        .iter()
        .map(|g| {
            let mut v: Vec<usize> = g.support().iter().map(|i| rank[i]).collect();
            v.sort_unstable();
            v
        })
        .collect();
    let universe: Vec<usize> = (0..n).collect();
    Ok(is_sqfree_strongly_stable_over(&gens, &universe))
}

/// Outcome of the bounded stably-lexsegment test.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StablyLexVerdict {
    /// `I^k` is lexsegment for every `k <= bound`.
    TrueUpToBound(u32),
    /// `I^k` is not lexsegment; `k` is the least such power.
    False(u32),
}

impl StablyLexVerdict {
    pub fn holds(self) -> bool {
        matches!(self, StablyLexVerdict::TrueUpToBound(_))
    }
}

pub fn is_stably_lexsegment(ideal: &MonomialIdeal, k_max: u32) -> Result<StablyLexVerdict> {
    if k_max == 0 {
        return Err(Error::Precondition("k_max must be >= 1".into()));
    }
    let mut power = ideal.clone();
    for k in 1..=k_max {
        if k > 1 {
            power = power.product(ideal)?;
        }
        if !is_lexsegment(&power)? {
            return Ok(StablyLexVerdict::False(k));
        }
    }
    Ok(StablyLexVerdict::TrueUpToBound(k_max))
}

/// `depth(S/I) = n - |G(I)|` for a universal lexsegment ideal.
pub fn depth_universal_lex(ideal: &MonomialIdeal) -> Result<usize> {
    if !is_universal_lexsegment(ideal) {
        return Err(Error::Precondition(format!(
            "{ideal} is not universal lexsegment"
        )));
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    Ok(ideal.nvars() - ideal.len())
}

/// Class membership, with the characteristic used for Borel-fixedness and
/// the bound used for stably-lexsegment.
pub fn satisfies(
    ideal: &MonomialIdeal,
    class: IdealClass,
    ch: Characteristic,
    k_max: u32,
) -> Result<bool> {
    Ok(match class {
        IdealClass::BorelType => is_borel_type(ideal)?,
        IdealClass::BorelFixed => is_borel_fixed(ideal, ch),
        IdealClass::StronglyStable => is_strongly_stable(ideal),
        IdealClass::Lexsegment => is_lexsegment(ideal)?,
        IdealClass::UniversalLexsegment => is_universal_lexsegment(ideal),
        IdealClass::SquarefreeStronglyStable => {
            ideal.is_squarefree() && is_squarefree_strongly_stable(ideal)?
        }
        IdealClass::StablyLexsegment => is_stably_lexsegment(ideal, k_max)?.holds(),
    })
}
