//! Exact monomial arithmetic over a fixed number of variables.
//!
//! A [`Monomial`] is an exponent vector. Indices in the Rust API are 0-based;
//! every text and JSON format uses 1-based names (`x1` is index 0).

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest ambient size supported by [`VarSet`].
pub const MAX_VARS: usize = 64;

/// A monomial `x1^a1 * ... * xn^an`, stored as its exponent vector.
///
/// The derived `Ord` is pure lexicographic order with `x1 > x2 > ... > xn`
/// and is only meaningful between monomials of the same ambient size.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The unit monomial of a ring with `n` variables.
    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    /// `x_{index}^exp` (0-based index).
    pub fn var_power(n: usize, index: usize, exp: u32) -> Result<Self> {
        if index >= n {
            return Err(Error::IndexOutOfRange {
                index: index + 1,
                nvars: n,
            });
        }
        let mut exps = vec![0; n];
        exps[index] = exp;
        Ok(Monomial { exps })
    }

    pub fn var(n: usize, index: usize) -> Result<Self> {
        Self::var_power(n, index, 1)
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, index: usize) -> u32 {
        self.exps[index]
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Indices of the variables that divide this monomial.
    pub fn support(&self) -> VarSet {
        let mut s = VarSet::empty();
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                s.insert(i);
            }
        }
        s
    }

    /// Largest index of a variable dividing the monomial.
    pub fn max_support(&self) -> Option<usize> {
        self.exps.iter().rposition(|&e| e > 0)
    }

    /// Squarefree part: every nonzero exponent clipped to 1.
    pub fn sqfree_part(&self) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|&e| e.min(1)).collect(),
        }
    }

    fn check_set(&self, set: &VarSet) -> Result<()> {
        match set.max_index() {
            Some(m) if m >= self.nvars() => Err(Error::IndexOutOfRange {
                index: m + 1,
                nvars: self.nvars(),
            }),
            _ => Ok(()),
        }
    }

    /// Keeps the exponents indexed by `set`, zeroing the rest.
    pub fn restrict(&self, set: &VarSet) -> Result<Monomial> {
        self.check_set(set)?;
        Ok(self.restrict_unchecked(set))
    }

    pub(crate) fn restrict_unchecked(&self, set: &VarSet) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .enumerate()
                .map(|(i, &e)| if set.contains(i) { e } else { 0 })
                .collect(),
        }
    }

    /// Sum of the exponents indexed by `set`.
    pub fn b_degree(&self, set: &VarSet) -> Result<u64> {
        self.check_set(set)?;
        Ok(set.iter().map(|i| u64::from(self.exps[i])).sum())
    }

    fn check_ambient(&self, other: &Monomial) -> Result<()> {
        if self.nvars() != other.nvars() {
            return Err(Error::AmbientMismatch {
                left: self.nvars(),
                right: other.nvars(),
            });
        }
        Ok(())
    }

    pub fn try_mul(&self, other: &Monomial) -> Result<Monomial> {
        self.check_ambient(other)?;
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.checked_add(b).ok_or(Error::ExponentOverflow))
            .collect::<Result<_>>()?;
        Ok(Monomial { exps })
    }

    pub fn try_pow(&self, k: u32) -> Result<Monomial> {
        let exps = self
            .exps
            .iter()
            .map(|&a| a.checked_mul(k).ok_or(Error::ExponentOverflow))
            .collect::<Result<_>>()?;
        Ok(Monomial { exps })
    }

    /// `self | other`. Both must share the ambient size.
    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.min(b))
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        }
    }

    /// `(gcd, lcm, self | other)`.
    pub fn lattice_ops(&self, other: &Monomial) -> Result<(Monomial, Monomial, bool)> {
        self.check_ambient(other)?;
        Ok((self.gcd(other), self.lcm(other), self.divides(other)))
    }

    /// `self / gcd(self, other)`: the generator of `<self> : other`.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.saturating_sub(b))
                .collect(),
        }
    }

    /// Exact quotient, if `other | self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if other.divides(self) {
            Some(self.colon(other))
        } else {
            None
        }
    }

    /// Multiplies in `x_index^by`, or divides when `by` is negative.
    /// Returns `None` if the exponent would become negative.
    pub(crate) fn shift(&self, index: usize, by: i64) -> Option<Monomial> {
        let e = i64::from(self.exps[index]) + by;
        if e < 0 || e > i64::from(u32::MAX) {
            return None;
        }
        let mut exps = self.exps.clone();
        exps[index] = e as u32;
        Some(Monomial { exps })
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Monomial orders with `x1 > x2 > ... > xn`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum MonomialOrder {
    /// Pure lexicographic order.
    #[default]
    Lex,
    /// Total degree first, ties broken by pure lex.
    GradedLex,
}

impl MonomialOrder {
    pub fn compare(self, u: &Monomial, v: &Monomial) -> Result<Ordering> {
        u.check_ambient(v)?;
        Ok(match self {
            MonomialOrder::Lex => u.cmp(v),
            MonomialOrder::GradedLex => u.degree().cmp(&v.degree()).then_with(|| u.cmp(v)),
        })
    }
}

/// Compares two monomials under `ord`.
pub fn compare(u: &Monomial, v: &Monomial, ord: MonomialOrder) -> Result<Ordering> {
    ord.compare(u, v)
}

/// A subset of the variable indices `{0, .., MAX_VARS-1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VarSet(u64);

impl VarSet {
    pub const fn empty() -> Self {
        VarSet(0)
    }

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VARS, "at most {MAX_VARS} variables");
        if n == MAX_VARS {
            VarSet(u64::MAX)
        } else {
            VarSet((1u64 << n) - 1)
        }
    }

    pub fn from_bits(bits: u64) -> Self {
        VarSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Result<Self> {
        let mut s = VarSet::empty();
        for i in indices {
            if i >= MAX_VARS {
                return Err(Error::IndexOutOfRange {
                    index: i + 1,
                    nvars: MAX_VARS,
                });
            }
            s.insert(i);
        }
        Ok(s)
    }

    pub fn singleton(i: usize) -> Self {
        let mut s = VarSet::empty();
        s.insert(i);
        s
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < MAX_VARS, "variable index {i} too large");
        self.0 |= 1 << i;
    }

    pub fn remove(&mut self, i: usize) {
        if i < MAX_VARS {
            self.0 &= !(1 << i);
        }
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_VARS && self.0 & (1 << i) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn max_index(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(63 - self.0.leading_zeros() as usize)
        }
    }

    pub fn is_subset(self, other: VarSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: VarSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn union(self, other: VarSet) -> VarSet {
        VarSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VarSet) -> VarSet {
        VarSet(self.0 & other.0)
    }

    pub fn difference(self, other: VarSet) -> VarSet {
        VarSet(self.0 & !other.0)
    }

    /// Complement inside `{0, .., n-1}`.
    pub fn complement(self, n: usize) -> VarSet {
        VarSet::full(n).difference(self)
    }

    /// Least index in `{0, .., n-1}` not in the set.
    pub fn first_missing(self, n: usize) -> Option<usize> {
        (0..n).find(|&i| !self.contains(i))
    }

    /// Ascending 0-based indices.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..MAX_VARS).filter(move |&i| bits & (1 << i) != 0)
    }

    /// 1-based indices, as used in every external format.
    pub fn to_one_based(self) -> Vec<usize> {
        self.iter().map(|i| i + 1).collect()
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        f.write_str("}")
    }
}
