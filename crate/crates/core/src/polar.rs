//! Polarization, exponent and extension vectors, and the structure of ideals
//! whose polarization is squarefree strongly stable.

use std::cmp::Ordering;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classes::is_sqfree_strongly_stable_over;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::limits;
use crate::monomial::{Monomial, MonomialOrder, VarSet};

/// The polarization variable `x_{var, slot}`.
///
/// `var` is 0-based, `slot` is 1-based. The derived order lists variables
/// from largest to smallest: `x_{1,1} ≻ x_{1,2} ≻ .. ≻ x_{2,1} ≻ ..`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SlotVar {
    pub var: usize,
    pub slot: u32,
}

impl fmt::Display for SlotVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}_{}", self.var + 1, self.slot)
    }
}

/// `T(u)`: `x_j^a` becomes `x_{j,1} * .. * x_{j,a}`.
pub fn polarize_monomial(u: &Monomial) -> Vec<SlotVar> {
    u.exponents()
        .iter()
        .enumerate()
        .flat_map(|(var, &a)| (1..=a).map(move |slot| SlotVar { var, slot }))
        .collect()
}

/// Pure lex comparison of squarefree monomials under `≻`, each given as a
/// sorted variable list.
pub fn compare_squarefree(u: &[SlotVar], v: &[SlotVar]) -> Ordering {
    let (mut i, mut j) = (0, 0);
    loop {
        match (u.get(i), v.get(j)) {
            (None, None) => return Ordering::Equal,
            (Some(_), None) => return Ordering::Greater,
            (None, Some(_)) => return Ordering::Less,
            (Some(a), Some(b)) => match a.cmp(b) {
                Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
                // The first variable in the symmetric difference decides.
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            },
        }
    }
}

/// A squarefree ideal in the polarization variables.
///
/// Generators are prefix-closed (`x_{j,k}` present forces `x_{j,k-1}`),
/// minimal, and sorted descending under `≻`-pure-lex.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PolarizedIdeal {
    n: usize,
    extension: Vec<u32>,
    gens: Vec<Vec<SlotVar>>,
}

impl PolarizedIdeal {
    pub fn from_generators(n: usize, gens: Vec<Vec<SlotVar>>) -> Result<Self> {
        let mut cleaned: Vec<Vec<SlotVar>> = Vec::with_capacity(gens.len());
        for mut g in gens {
            g.sort_unstable();
            if g.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidInput(
                    "repeated variable in a squarefree generator".into(),
                ));
            }
            for v in &g {
                if v.var >= n {
                    return Err(Error::IndexOutOfRange {
                        index: v.var + 1,
                        nvars: n,
                    });
                }
                if v.slot == 0 {
                    return Err(Error::InvalidInput("slots are numbered from 1".into()));
                }
                if v.slot > 1
                    && g.binary_search(&SlotVar {
                        var: v.var,
                        slot: v.slot - 1,
                    })
                    .is_err()
                {
                    return Err(Error::Precondition(format!(
                        "not prefix-closed: {v} without x{}_{}",
                        v.var + 1,
                        v.slot - 1
                    )));
                }
            }
            cleaned.push(g);
        }
        cleaned.sort_by_key(Vec::len);
        cleaned.dedup();
        let mut kept: Vec<Vec<SlotVar>> = Vec::new();
        for g in cleaned {
            if !kept
                .iter()
                .any(|k| k.iter().all(|v| g.binary_search(v).is_ok()))
            {
                kept.push(g);
            }
        }
        kept.sort_by(|a, b| compare_squarefree(b, a));
        let mut extension = vec![0u32; n];
        for v in kept.iter().flatten() {
            extension[v.var] = extension[v.var].max(v.slot);
        }
        Ok(PolarizedIdeal {
            n,
            extension,
            gens: kept,
        })
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    /// `b_j`: largest slot of `x_j` appearing in a generator.
    pub fn extension(&self) -> &[u32] {
        &self.extension
    }

    pub fn gens(&self) -> &[Vec<SlotVar>] {
        &self.gens
    }

    /// Every variable `x_{j,k}` with `k <= max(b_j, 1)`, largest first.
    pub fn universe(&self) -> Vec<SlotVar> {
        self.extension
            .iter()
            .enumerate()
            .flat_map(|(var, &b)| (1..=b.max(1)).map(move |slot| SlotVar { var, slot }))
            .collect()
    }

    /// Reads slot counts back into exponents.
    pub fn depolarize(&self) -> MonomialIdeal {
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut e = vec![0u32; self.n];
                for v in g {
                    e[v.var] += 1;
                }
                Monomial::new(e)
            })
            .collect();
        MonomialIdeal::from_checked(self.n, gens)
    }

    pub fn is_squarefree_strongly_stable(&self) -> bool {
        is_sqfree_strongly_stable_over(&self.gens, &self.universe())
    }
}

impl fmt::Display for PolarizedIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return f.write_str("<0>");
        }
        f.write_str("<")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            if g.is_empty() {
                f.write_str("1")?;
            }
            for (k, v) in g.iter().enumerate() {
                if k > 0 {
                    f.write_str("*")?;
                }
                write!(f, "{v}")?;
            }
        }
        f.write_str(">")
    }
}

/// `T(I)`.
pub fn polarize(ideal: &MonomialIdeal) -> Result<PolarizedIdeal> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    PolarizedIdeal::from_generators(
        ideal.nvars(),
        ideal.gens().iter().map(polarize_monomial).collect(),
    )
}

/// Componentwise maximum of the generator exponents.
pub fn exponent_vector(ideal: &MonomialIdeal) -> Vec<u32> {
    let mut a = vec![0u32; ideal.nvars()];
    for g in ideal.gens() {
        for (x, &e) in a.iter_mut().zip(g.exponents()) {
            *x = (*x).max(e);
        }
    }
    a
}

/// Samples members of `I` (generators times random monomials) and checks
/// that pure lex on monomials agrees with `≻`-pure-lex on polarizations.
pub fn order_preserving_check(ideal: &MonomialIdeal, sample_size: usize, seed: u64) -> bool {
    if ideal.is_zero() {
        return true;
    }
    let n = ideal.nvars();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut members: Vec<Monomial> = ideal.gens().to_vec();
    while members.len() < sample_size.max(ideal.len()) {
        let g = &ideal.gens()[rng.gen_range(0..ideal.len())];
        let extra = Monomial::new((0..n).map(|_| rng.gen_range(0..=2)).collect());
        members.push(g.try_mul(&extra).expect("small exponents"));
    }
    let polar: Vec<Vec<SlotVar>> = members.iter().map(polarize_monomial).collect();
    members.iter().zip(&polar).all(|(u, tu)| {
        members.iter().zip(&polar).all(|(v, tv)| {
            MonomialOrder::Lex.compare(u, v).expect("same ambient") == compare_squarefree(tu, tv)
        })
    })
}

/// One block `(A_t, B_t)` of consecutive indices: an `A`-run followed by a
/// (possibly empty) `B`-run. Only the first block may have an empty `A`-run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureReport {
    pub exponents: Vec<u32>,
    /// Variables with `a_j ≠ 0`.
    pub w: VarSet,
    /// Variables of `W` whose exponent in every generator is `0` or `a_j`.
    pub a: VarSet,
    pub b: VarSet,
    pub blocks: Vec<Block>,
    /// The ideal rebuilt from the blocks.
    pub candidate: MonomialIdeal,
    /// `candidate == I`.
    pub reconstructs: bool,
    /// Whether `T(I)` is squarefree strongly stable.
    pub polarization_stable: bool,
}

/// Splits the ordered variables of `w` into blocks given the `A` part.
fn blocks_for(w: VarSet, a: VarSet) -> Vec<Block> {
    let mut blocks: Vec<Block> = Vec::new();
    for j in w.iter() {
        if a.contains(j) {
            match blocks.last_mut() {
                Some(last) if last.b.is_empty() => last.a.push(j),
                _ => blocks.push(Block {
                    a: vec![j],
                    b: Vec::new(),
                }),
            }
        } else {
            match blocks.last_mut() {
                Some(last) => last.b.push(j),
                None => blocks.push(Block {
                    a: Vec::new(),
                    b: vec![j],
                }),
            }
        }
    }
    blocks
}

/// `Σ_t L_t M_t Π_{s<t} L_s M'_s` with `L_t = <Π_{A_t} x^a>`,
/// `M'_t = <Π_{B_t} x^{a-1}>` and `M_t` the full universal lexsegment ideal
/// on the variables of `B_t`.
fn build_from_blocks(n: usize, a: &[u32], blocks: &[Block]) -> Result<MonomialIdeal> {
    let mut prefix = MonomialIdeal::unit(n);
    let mut total = MonomialIdeal::zero(n);
    for blk in blocks {
        let mut l = vec![0u32; n];
        for &j in &blk.a {
            l[j] = a[j];
        }
        let l = MonomialIdeal::principal(Monomial::new(l));
        let m = if blk.b.is_empty() {
            MonomialIdeal::unit(n)
        } else {
            let mut gens = Vec::with_capacity(blk.b.len());
            let mut stair = vec![0u32; n];
            for &j in &blk.b {
                let mut g = stair.clone();
                g[j] = a[j];
                gens.push(Monomial::new(g));
                stair[j] = a[j].saturating_sub(1);
            }
            MonomialIdeal::from_checked(n, gens)
        };
        let mut mp = vec![0u32; n];
        for &j in &blk.b {
            mp[j] = a[j].saturating_sub(1);
        }
        let mp = MonomialIdeal::principal(Monomial::new(mp));
        total = total.sum(&l.product(&m)?.product(&prefix)?)?;
        prefix = prefix.product(&l)?.product(&mp)?;
    }
    Ok(total)
}

fn split_w_a(exponents: &[u32], ideal: &MonomialIdeal) -> (VarSet, VarSet) {
    let mut w = VarSet::empty();
    let mut a = VarSet::empty();
    for (j, &aj) in exponents.iter().enumerate() {
        if aj == 0 {
            continue;
        }
        w.insert(j);
        if ideal
            .gens()
            .iter()
            .all(|g| g.exponent(j) == 0 || g.exponent(j) == aj)
        {
            a.insert(j);
        }
    }
    (w, a)
}

/// Computes `W`, `A`, `B` and the block decomposition, and tries to rebuild
/// `I` from them. Rejects ideals with some exponent-vector entry equal to 1.
pub fn analyze_structure(ideal: &MonomialIdeal) -> Result<StructureReport> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let exponents = exponent_vector(ideal);
    if let Some(j) = exponents.iter().position(|&e| e == 1) {
        return Err(Error::UnsupportedShape(format!(
            "exponent vector entry a_{} = 1",
            j + 1
        )));
    }
    let (w, a) = split_w_a(&exponents, ideal);
    let blocks = blocks_for(w, a);
    let candidate = build_from_blocks(ideal.nvars(), &exponents, &blocks)?;
    let reconstructs = &candidate == ideal;
    let polarization_stable = polarize(ideal)?.is_squarefree_strongly_stable();
    Ok(StructureReport {
        b: w.difference(a),
        exponents,
        w,
        a,
        blocks,
        candidate,
        reconstructs,
        polarization_stable,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DepolarizationReport {
    /// `|W|`, the number of variables with nonzero extension.
    pub t: usize,
    pub subsets_tried: usize,
    /// Subsets `A ⊆ W` whose construction polarizes to `J`.
    pub matching_subsets: Vec<VarSet>,
    /// Distinct ideals `I` with `T(I) = J` found by the construction.
    pub ideals: Vec<MonomialIdeal>,
    /// The slot-count preimage of `J`.
    pub canonical: MonomialIdeal,
    /// `2^t`.
    pub predicted: u64,
}

impl DepolarizationReport {
    pub fn matches_prediction(&self) -> bool {
        self.ideals.len() as u64 == self.predicted
    }
}

/// Builds `I_A` for every `A ⊆ W` and keeps those with `T(I_A) = J`.
pub fn depolarize_enumerate(j: &PolarizedIdeal) -> Result<DepolarizationReport> {
    if j.gens().is_empty() {
        return Err(Error::ZeroIdeal);
    }
    if let Some(i) = j.extension().iter().position(|&b| b == 1) {
        return Err(Error::Precondition(format!(
            "extension entry b_{} = 1",
            i + 1
        )));
    }
    if !j.is_squarefree_strongly_stable() {
        return Err(Error::Precondition("not squarefree strongly stable".into()));
    }
    let n = j.nvars();
    let b = j.extension().to_vec();
    let w = VarSet::from_indices(b.iter().enumerate().filter(|(_, &x)| x > 0).map(|(i, _)| i))?;
    let t = w.len();
    let subsets = 1usize.checked_shl(t as u32).unwrap_or(usize::MAX);
    limits::check("depolarization subsets", subsets)?;
    let members: Vec<usize> = w.iter().collect();
    let mut matching = Vec::new();
    let mut ideals: Vec<MonomialIdeal> = Vec::new();
    for mask in 0..subsets as u64 {
        let a = VarSet::from_indices(
            members
                .iter()
                .enumerate()
                .filter(|(k, _)| mask & (1 << k) != 0)
                .map(|(_, &v)| v),
        )?;
        let cand = build_from_blocks(n, &b, &blocks_for(w, a))?;
        if cand.is_zero() || polarize(&cand)? != *j {
            continue;
        }
        matching.push(a);
        if !ideals.contains(&cand) {
            ideals.push(cand);
        }
    }
    Ok(DepolarizationReport {
        t,
        subsets_tried: subsets,
        matching_subsets: matching,
        ideals,
        canonical: j.depolarize(),
        predicted: 1u64.checked_shl(t as u32).unwrap_or(u64::MAX),
    })
}
