//! JSON forms of ideals, complexes and polarized ideals (1-based indices).

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, VarSet};
use crate::polar::{PolarizedIdeal, SlotVar};

/// `{"nvars": 3, "gens": [[3,0,0],[1,2,0]]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    pub nvars: usize,
    pub gens: Vec<Vec<u32>>,
}

impl From<&MonomialIdeal> for IdealJson {
    fn from(ideal: &MonomialIdeal) -> Self {
        IdealJson {
            nvars: ideal.nvars(),
            gens: ideal
                .gens()
                .iter()
                .map(|g| g.exponents().to_vec())
                .collect(),
        }
    }
}

impl TryFrom<IdealJson> for MonomialIdeal {
    type Error = Error;

    fn try_from(j: IdealJson) -> Result<Self> {
        if let Some(row) = j.gens.iter().find(|r| r.len() != j.nvars) {
            return Err(Error::AmbientMismatch {
                left: j.nvars,
                right: row.len(),
            });
        }
        MonomialIdeal::minimalize(j.gens.into_iter().map(Monomial::new), j.nvars)
    }
}

/// `{"nvars": n, "minimal_nonfaces": [[1],[3]]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub nvars: usize,
    pub minimal_nonfaces: Vec<Vec<usize>>,
}

impl From<&SimplicialComplex> for ComplexJson {
    fn from(c: &SimplicialComplex) -> Self {
        ComplexJson {
            nvars: c.nvars(),
            minimal_nonfaces: c
                .minimal_nonfaces()
                .iter()
                .map(|b| b.to_one_based())
                .collect(),
        }
    }
}

fn one_based_index(i: usize, n: usize) -> Result<usize> {
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, nvars: n });
    }
    Ok(i - 1)
}

impl TryFrom<ComplexJson> for SimplicialComplex {
    type Error = Error;

    fn try_from(j: ComplexJson) -> Result<Self> {
        let n = j.nvars;
        let sets = j
            .minimal_nonfaces
            .iter()
            .map(|b| {
                let idx = b
                    .iter()
                    .map(|&i| one_based_index(i, n))
                    .collect::<Result<Vec<_>>>()?;
                VarSet::from_indices(idx)
            })
            .collect::<Result<Vec<_>>>()?;
        SimplicialComplex::from_nonfaces(n, sets)
    }
}

/// `{"extension": [3,2], "gens": [[[1,1],[1,2],[1,3]], ...]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolarizedJson {
    pub extension: Vec<u32>,
    pub gens: Vec<Vec<[u32; 2]>>,
}

impl From<&PolarizedIdeal> for PolarizedJson {
    fn from(p: &PolarizedIdeal) -> Self {
        PolarizedJson {
            extension: p.extension().to_vec(),
            gens: p
                .gens()
                .iter()
                .map(|g| g.iter().map(|v| [v.var as u32 + 1, v.slot]).collect())
                .collect(),
        }
    }
}

impl TryFrom<PolarizedJson> for PolarizedIdeal {
    type Error = Error;

    fn try_from(j: PolarizedJson) -> Result<Self> {
        let n = j.extension.len();
        let gens = j
            .gens
            .iter()
            .map(|g| {
                g.iter()
                    .map(|&[var, slot]| {
                        Ok(SlotVar {
                            var: one_based_index(var as usize, n)?,
                            slot,
                        })
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let p = PolarizedIdeal::from_generators(n, gens)?;
        if p.extension() != j.extension.as_slice() {
            return Err(Error::InvalidInput(format!(
                "extension {:?} does not match the generators ({:?})",
                j.extension,
                p.extension()
            )));
        }
        Ok(p)
    }
}

pub fn ideal_to_json(ideal: &MonomialIdeal) -> String {
    serde_json::to_string(&IdealJson::from(ideal)).expect("plain data")
}

pub fn ideal_from_json(text: &str) -> Result<MonomialIdeal> {
    let j: IdealJson =
        serde_json::from_str(text).map_err(|e| Error::InvalidInput(e.to_string()))?;
    j.try_into()
}

pub fn complex_to_json(c: &SimplicialComplex) -> String {
    serde_json::to_string(&ComplexJson::from(c)).expect("plain data")
}

pub fn complex_from_json(text: &str) -> Result<SimplicialComplex> {
    let j: ComplexJson =
        serde_json::from_str(text).map_err(|e| Error::InvalidInput(e.to_string()))?;
    j.try_into()
}

pub fn polarized_to_json(p: &PolarizedIdeal) -> String {
    serde_json::to_string(&PolarizedJson::from(p)).expect("plain data")
}

pub fn polarized_from_json(text: &str) -> Result<PolarizedIdeal> {
    let j: PolarizedJson =
        serde_json::from_str(text).map_err(|e| Error::InvalidInput(e.to_string()))?;
    j.try_into()
}
