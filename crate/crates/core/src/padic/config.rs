use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{CatalogEntry, PadicError, PadicOrigamiSpec, Shape, TriangleFamily};
use crate::cli::parse::parse_element;
use crate::group::{build_group, GroupSpec};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EntryConfig {
    pub family: String,
    #[serde(default)]
    pub params: Vec<u32>,
}

/// On-disk description of a p-adic origami, in TOML or JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PadicConfig {
    pub p: u64,
    pub entry: EntryConfig,
    #[serde(default = "default_shape")]
    pub shape: Shape,
    pub target_group: GroupSpec,
    /// Generator name to element literal.
    pub images: BTreeMap<String, String>,
}

fn default_shape() -> Shape {
    Shape::Hnn
}

impl PadicConfig {
    pub fn from_toml_str(text: &str) -> Result<Self, PadicError> {
        toml::from_str(text).map_err(|e| PadicError::Config(e.to_string()))
    }

    pub fn from_json_str(text: &str) -> Result<Self, PadicError> {
        serde_json::from_str(text).map_err(|e| PadicError::Config(e.to_string()))
    }

    /// Reads `.json` files as JSON and everything else as TOML.
    pub fn load(path: &Path) -> Result<Self, PadicError> {
        let text = std::fs::read_to_string(path).map_err(|e| PadicError::Config(format!("{}: {e}", path.display())))?;
        match path.extension().and_then(|e| e.to_str()) {
            Some("json") => Self::from_json_str(&text),
            _ => Self::from_toml_str(&text),
        }
    }

    pub fn catalog_entry(&self) -> Result<CatalogEntry, PadicError> {
        Ok(CatalogEntry::new(TriangleFamily::from_config(&self.entry.family, &self.entry.params)?))
    }

    pub fn to_spec(&self) -> Result<PadicOrigamiSpec, PadicError> {
        let entry = self.catalog_entry()?;
        let target = build_group(&self.target_group)?;
        let mut images = BTreeMap::new();
        for (name, literal) in &self.images {
            let x = parse_element(&target, literal)
                .map_err(|e| PadicError::Literal { generator: name.clone(), message: e.to_string() })?;
            images.insert(name.clone(), x);
        }
        PadicOrigamiSpec::new(self.p, entry, self.shape, target, &images)
    }
}
