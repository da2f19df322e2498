//! Complex-description files: generators as doubled `[grw2, grz2]` pairs,
//! differential and actions as lists of `{from, to, monomials: [[a, b], …]}`.
//! Serialization is canonical (entries sorted by `(from, to)`, monomials
//! sorted), so writing a parsed canonical file reproduces it byte for byte.

use serde::{Deserialize, Serialize};

use crate::error::OracleError;

use super::complex::{check_cap, BigradedComplex, Bigrading, ComplexWithActions, SparseMap};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EntryFile {
    pub from: usize,
    pub to: usize,
    pub monomials: Vec<[u32; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexFile {
    pub generators: Vec<[i64; 2]>,
    pub differential: Vec<EntryFile>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub actions: Vec<Vec<EntryFile>>,
}

fn entries(map: &SparseMap) -> Vec<EntryFile> {
    map.entries()
        .map(|(from, to, m)| EntryFile { from, to, monomials: m.iter().map(|(a, b)| [a, b]).collect() })
        .collect()
}

fn to_map(entries: &[EntryFile]) -> SparseMap {
    let mut map = SparseMap::new();
    for e in entries {
        for &[a, b] in &e.monomials {
            map.add(e.from, e.to, a, b);
        }
    }
    map
}

impl ComplexFile {
    pub fn from_model(model: &ComplexWithActions) -> Self {
        ComplexFile {
            generators: model.complex.gens().iter().map(|g| [g.w, g.z]).collect(),
            differential: entries(model.complex.diff()),
            actions: model.actions.iter().map(entries).collect(),
        }
    }

    /// Validates the description (cap, bidegrees, `∂² = 0`, chain-map actions).
    pub fn to_model(&self) -> Result<ComplexWithActions, OracleError> {
        check_cap(self.generators.len())?;
        let gens = self.generators.iter().map(|&[w, z]| Bigrading::new(w, z)).collect();
        let complex = BigradedComplex::new(gens, to_map(&self.differential))?;
        ComplexWithActions::new(complex, self.actions.iter().map(|a| to_map(a)).collect())
    }

    pub fn parse(text: &str) -> Result<Self, OracleError> {
        serde_json::from_str(text).map_err(|e| OracleError::Malformed(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes") + "\n"
    }
}
