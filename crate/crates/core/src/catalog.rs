//! Catalog files listing subalgebra pairs and endoscopic data.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lifting::{build_endoscopic_datum, EndoscopicDatum};
use crate::rootsys::{CartanType, Limits, RootSubsystem, RootSystem, WeylSystem};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairSpec {
    #[serde(rename = "type")]
    pub cartan_type: String,
    /// Simple roots of the subsystem in simple-root coordinates of `g`.
    pub simple_roots: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EndoscopySpec {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub k_simple: Vec<Vec<i64>>,
    pub h_simple: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sign_q: Option<i64>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogFile {
    #[serde(default)]
    pub pairs: Vec<PairSpec>,
    #[serde(default)]
    pub endoscopy: Vec<EndoscopySpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub caps: Option<Limits>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

/// A validated pair `r ⊂ g`.
#[derive(Clone, Debug)]
pub struct Pair {
    pub g: RootSystem,
    pub r: RootSubsystem,
}

impl Pair {
    pub fn label(&self) -> String {
        self.r.label()
    }
}

#[derive(Clone, Debug)]
pub struct Catalog {
    pub pairs: Vec<Pair>,
    pub endoscopy: Vec<EndoscopicDatum>,
    pub limits: Limits,
    pub seed: Option<u64>,
}

fn in_entry(what: &str, i: usize, e: Error) -> Error {
    match e {
        Error::Resource(m) => Error::Resource(format!("{what} #{i}: {m}")),
        Error::Internal(m) => Error::Internal(format!("{what} #{i}: {m}")),
        other => Error::Validation(format!("{what} #{i}: {other}")),
    }
}

impl CatalogFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Validation(format!("catalog: {e}")))
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Validation(format!("cannot read catalog {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    /// Re-validates every entry. `overrides` replaces the catalog caps.
    pub fn load(&self, overrides: Option<Limits>) -> Result<Catalog> {
        let limits = overrides.or(self.caps).unwrap_or_default();
        let pairs = self
            .pairs
            .iter()
            .enumerate()
            .map(|(i, p)| {
                let t: CartanType = p.cartan_type.parse().map_err(|e| in_entry("pair", i, e))?;
                let g = RootSystem::with_limits(&t, limits).map_err(|e| in_entry("pair", i, e))?;
                let r = RootSubsystem::validate(&g, &p.simple_roots).map_err(|e| in_entry("pair", i, e))?;
                Ok(Pair { g, r })
            })
            .collect::<Result<Vec<_>>>()?;
        let endoscopy = self
            .endoscopy
            .iter()
            .enumerate()
            .map(|(i, d)| {
                let t: CartanType = d.cartan_type.parse().map_err(|e| in_entry("endoscopic datum", i, e))?;
                build_endoscopic_datum(&t, &d.k_simple, &d.h_simple, d.sign_q, limits)
                    .map_err(|e| in_entry("endoscopic datum", i, e))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Catalog { pairs, endoscopy, limits, seed: self.seed })
    }
}

/// The catalog shipped with the crate.
pub const DEFAULT_CATALOG: &str = include_str!("../data/catalog.json");

pub fn default_catalog() -> Result<Catalog> {
    CatalogFile::parse(DEFAULT_CATALOG)?.load(None)
}
