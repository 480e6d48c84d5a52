//! Simplicial complexes on `{1..n}` stored by their minimal nonfaces.

use std::fmt;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::limits;
use crate::monomial::{Monomial, VarSet, MAX_VARS};

/// Keeps the inclusion-minimal sets, in canonical order.
pub(crate) fn minimal_sets(mut sets: Vec<VarSet>) -> Vec<VarSet> {
    sets.sort_by_key(|s| (s.len(), s.to_one_based()));
    sets.dedup();
    let mut kept: Vec<VarSet> = Vec::new();
    for s in sets {
        if !kept.iter().any(|k| k.is_subset(s)) {
            kept.push(s);
        }
    }
    kept.sort_by_key(|s| s.to_one_based());
    kept
}

/// Minimal transversals (minimal vertex covers) of a hypergraph.
///
/// Berge's incremental algorithm: after each edge, every partial transversal
/// that misses the edge is extended by each of its vertices, then the family
/// is cut back to an antichain. A hypergraph with an empty edge has none; the
/// empty hypergraph has exactly the empty transversal.
pub fn minimal_transversals(edges: &[VarSet]) -> Result<Vec<VarSet>> {
    let mut cur = vec![VarSet::empty()];
    let mut edges = edges.to_vec();
    edges.sort_by_key(|e| e.len());
    for e in edges {
        let mut next = Vec::new();
        for t in &cur {
            if t.intersects(e) {
                next.push(*t);
            } else {
                next.extend(e.iter().map(|v| {
                    let mut s = *t;
                    s.insert(v);
                    s
                }));
            }
        }
        limits::check("partial transversals", next.len())?;
        cur = minimal_sets(next);
    }
    Ok(minimal_sets(cur))
}

/// A simplicial complex on the vertex set `{0..n-1}`; singletons need not
/// be faces. The minimal nonfaces form an antichain in canonical order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SimplicialComplex {
    n: usize,
    minimal_nonfaces: Vec<VarSet>,
}

impl SimplicialComplex {
    pub fn from_nonfaces(n: usize, nonfaces: Vec<VarSet>) -> Result<Self> {
        if n > MAX_VARS {
            return Err(Error::InvalidInput(format!("at most {MAX_VARS} vertices")));
        }
        let full = VarSet::full(n);
        if let Some(bad) = nonfaces.iter().find(|s| !s.is_subset(full)) {
            return Err(Error::IndexOutOfRange {
                index: bad.max_index().map_or(0, |m| m + 1),
                nvars: n,
            });
        }
        Ok(SimplicialComplex {
            n,
            minimal_nonfaces: minimal_sets(nonfaces),
        })
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn minimal_nonfaces(&self) -> &[VarSet] {
        &self.minimal_nonfaces
    }

    pub fn is_face(&self, set: VarSet) -> bool {
        set.is_subset(VarSet::full(self.n))
            && !self.minimal_nonfaces.iter().any(|b| b.is_subset(set))
    }

    /// Maximal faces: complements of the minimal transversals of the
    /// minimal nonfaces.
    pub fn facets(&self) -> Result<Vec<VarSet>> {
        let mut f: Vec<VarSet> = minimal_transversals(&self.minimal_nonfaces)?
            .into_iter()
            .map(|t| t.complement(self.n))
            .collect();
        f.sort_by_key(|s| s.to_one_based());
        Ok(f)
    }

    /// `{[n] \ B : B not a face}`. Its facets are the complements of the
    /// minimal nonfaces; its minimal nonfaces are their minimal transversals.
    pub fn alexander_dual(&self) -> Result<SimplicialComplex> {
        Ok(SimplicialComplex {
            n: self.n,
            minimal_nonfaces: minimal_transversals(&self.minimal_nonfaces)?,
        })
    }

    /// Ideal generated by `x_B` over the minimal nonfaces `B`.
    pub fn stanley_reisner(&self) -> MonomialIdeal {
        let gens = self
            .minimal_nonfaces
            .iter()
            .map(|b| {
                let mut e = vec![0u32; self.n];
                for i in b.iter() {
                    e[i] = 1;
                }
                Monomial::new(e)
            })
            .collect();
        MonomialIdeal::from_checked(self.n, gens)
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "complex(n={}; nonfaces [", self.n)?;
        for (i, b) in self.minimal_nonfaces.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{b}")?;
        }
        f.write_str("])")
    }
}
