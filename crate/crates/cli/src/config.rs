//! Curve configuration files.

use std::collections::BTreeMap;

use anyhow::{Context, Result};
use cusp_floer::{CurveConfig, NumericalSemigroup};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum CuspFile {
    TorusKnot { p: i64, q: i64 },
    Gaps { gaps: Vec<i64> },
}

impl CuspFile {
    pub fn semigroup(&self) -> Result<NumericalSemigroup> {
        Ok(match self {
            CuspFile::TorusKnot { p, q } => NumericalSemigroup::torus_knot(*p, *q)?,
            CuspFile::Gaps { gaps } => NumericalSemigroup::from_gaps(gaps)?,
        })
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OptionsFile {
    #[serde(default)]
    pub allow_genus_slack: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub degree: i64,
    pub genus: i64,
    #[serde(default)]
    pub cusps: Vec<CuspFile>,
    #[serde(default)]
    pub positive_tn: BTreeMap<i64, i64>,
    #[serde(default)]
    pub negative_tn: BTreeMap<i64, i64>,
    #[serde(default)]
    pub options: OptionsFile,
}

impl ConfigFile {
    pub fn read(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
    }

    pub fn to_config(&self, allow_genus_slack: bool) -> Result<CurveConfig> {
        let cusps = self.cusps.iter().map(CuspFile::semigroup).collect::<Result<Vec<_>>>()?;
        Ok(CurveConfig::new(
            self.degree,
            self.genus,
            cusps,
            self.positive_tn.clone(),
            self.negative_tn.clone(),
            allow_genus_slack || self.options.allow_genus_slack,
        )?)
    }
}
