//! p-adic triangle groups.
//!
//! For `p > 5` these are the spherical ones: `D_n = Δ(2,2,n)`,
//! `A₄ = Δ(2,3,3)`, `S₄ = Δ(2,3,4)` and `A₅ = Δ(2,3,5)`. At `p = 5` there
//! is also the family `Δ(3,3,5n) = A₅ *_{D₅} D_{5n} *_{D₅} A₅`. Other small
//! primes are not classified and are rejected.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::PadicError;
use crate::graph::{catalog as graphs, GraphOfGroups, GroupLabel};
use crate::group::{is_prime, GroupSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "family", content = "n", rename_all = "snake_case")]
pub enum TriangleFamily {
    Dihedral(u32),
    Tetrahedral,
    Octahedral,
    Icosahedral,
    /// `Δ(3,3,5n)`, valid at `p = 5` only.
    Amalgam335(u32),
}

impl TriangleFamily {
    pub fn from_label(label: &GroupLabel) -> Option<TriangleFamily> {
        match label {
            GroupLabel::Dihedral(n) if *n >= 2 => Some(TriangleFamily::Dihedral(*n)),
            GroupLabel::A4 => Some(TriangleFamily::Tetrahedral),
            GroupLabel::S4 => Some(TriangleFamily::Octahedral),
            GroupLabel::A5 => Some(TriangleFamily::Icosahedral),
            _ => None,
        }
    }

    /// Parses the `{family, params}` form used by configs.
    pub fn from_config(family: &str, params: &[u32]) -> Result<TriangleFamily, PadicError> {
        let bad = |detail: &str| PadicError::BadEntry { family: family.to_string(), detail: detail.to_string() };
        let one = || match params {
            [n] => Ok(*n),
            _ => Err(bad("expected exactly one parameter")),
        };
        let none = |f: TriangleFamily| if params.is_empty() { Ok(f) } else { Err(bad("takes no parameters")) };
        match family.to_ascii_lowercase().as_str() {
            "dihedral" | "d" => {
                let n = one()?;
                if n < 2 {
                    return Err(bad("dihedral triangle groups need n ≥ 2"));
                }
                Ok(TriangleFamily::Dihedral(n))
            }
            "tetrahedral" | "a4" => none(TriangleFamily::Tetrahedral),
            "octahedral" | "s4" => none(TriangleFamily::Octahedral),
            "icosahedral" | "a5" => none(TriangleFamily::Icosahedral),
            "amalgam_335" | "delta_335n" => {
                let n = one()?;
                if n < 1 {
                    return Err(bad("need n ≥ 1"));
                }
                Ok(TriangleFamily::Amalgam335(n))
            }
            _ => Err(PadicError::UnknownFamily(family.to_string())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CatalogEntry {
    #[serde(flatten)]
    pub family: TriangleFamily,
}

impl CatalogEntry {
    pub fn new(family: TriangleFamily) -> Self {
        CatalogEntry { family }
    }

    /// Sorted type triple `(n₁, n₂, n₃)`.
    pub fn triple(&self) -> (u64, u64, u64) {
        let mut t = match self.family {
            TriangleFamily::Dihedral(n) => [2, 2, n as u64],
            TriangleFamily::Tetrahedral => [2, 3, 3],
            TriangleFamily::Octahedral => [2, 3, 4],
            TriangleFamily::Icosahedral => [2, 3, 5],
            TriangleFamily::Amalgam335(n) => [3, 3, 5 * n as u64],
        };
        t.sort();
        (t[0], t[1], t[2])
    }

    pub fn is_spherical(&self) -> bool {
        let (a, b, c) = self.triple();
        a * b + b * c + c * a > a * b * c
    }

    /// Why the entry is not available at `p`, if it is not.
    pub fn invalid_reason(&self, p: u64) -> Option<String> {
        if !is_prime(p) {
            return Some(format!("{p} is not prime"));
        }
        match self.family {
            TriangleFamily::Amalgam335(_) if p != 5 => Some("the Δ(3,3,5n) family exists only for p = 5".into()),
            TriangleFamily::Amalgam335(_) => None,
            _ if p <= 5 => Some(format!("p-adic triangle groups for p = {p} ≤ 5 are not classified beyond Δ(3,3,5n)")),
            _ => None,
        }
    }

    pub fn valid_at(&self, p: u64) -> bool {
        self.invalid_reason(p).is_none()
    }

    /// The finite group itself, for spherical entries.
    pub fn realization(&self) -> Option<GroupSpec> {
        match self.family {
            TriangleFamily::Dihedral(n) => Some(GroupSpec::Dihedral(n)),
            TriangleFamily::Tetrahedral => Some(GroupSpec::Alternating(4)),
            TriangleFamily::Octahedral => Some(GroupSpec::Symmetric(4)),
            TriangleFamily::Icosahedral => Some(GroupSpec::Alternating(5)),
            TriangleFamily::Amalgam335(_) => None,
        }
    }

    pub fn label(&self) -> Option<GroupLabel> {
        match self.family {
            TriangleFamily::Dihedral(n) => Some(GroupLabel::Dihedral(n)),
            TriangleFamily::Tetrahedral => Some(GroupLabel::A4),
            TriangleFamily::Octahedral => Some(GroupLabel::S4),
            TriangleFamily::Icosahedral => Some(GroupLabel::A5),
            TriangleFamily::Amalgam335(_) => None,
        }
    }

    /// `(a, b)` when the entry has type `Δ(a, a, b)`.
    pub fn roles(&self) -> Option<(u64, u64)> {
        match self.family {
            TriangleFamily::Dihedral(n) => Some((2, n as u64)),
            TriangleFamily::Tetrahedral => Some((3, 2)),
            TriangleFamily::Amalgam335(n) => Some((3, 5 * n as u64)),
            TriangleFamily::Octahedral | TriangleFamily::Icosahedral => None,
        }
    }

    pub fn name(&self) -> String {
        let (a, b, c) = self.triple();
        match self.family {
            TriangleFamily::Amalgam335(1) => format!("A5 *_D5 A5 = Δ({a},{b},{c})"),
            TriangleFamily::Amalgam335(n) => format!("A5 *_D5 D{} *_D5 A5 = Δ({a},{b},{c})", 5 * n),
            _ => format!("{} = Δ({a},{b},{c})", self.label().expect("finite entry")),
        }
    }

    /// The graph `Δ` with loop `C_a` and end `C_b`, for `Δ(a,a,b)` entries.
    pub fn hnn_graph(&self) -> Option<GraphOfGroups> {
        let (a, b) = self.roles()?;
        Some(match self.family {
            TriangleFamily::Amalgam335(n) => graphs::amalgam_335_hnn(n),
            _ => graphs::hnn_graph(self.label()?, a, b),
        })
    }
}

impl fmt::Display for CatalogEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Catalog entries of type `Δ(a, a, b)` valid at `p`.
pub fn catalog_lookup(p: u64, a: u64, b: u64) -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    if a == 2 && b >= 2 && b <= u32::MAX as u64 {
        out.push(CatalogEntry::new(TriangleFamily::Dihedral(b as u32)));
    }
    if a == 3 && b == 2 {
        out.push(CatalogEntry::new(TriangleFamily::Tetrahedral));
    }
    if a == 3 && b.is_multiple_of(5) && b > 0 && b / 5 <= u32::MAX as u64 {
        out.push(CatalogEntry::new(TriangleFamily::Amalgam335((b / 5) as u32)));
    }
    out.retain(|e| e.valid_at(p));
    out
}

/// Catalog entries of the given type (in any order) valid at `p`.
pub fn catalog_by_type(p: u64, triple: (u64, u64, u64)) -> Vec<CatalogEntry> {
    let mut t = [triple.0, triple.1, triple.2];
    t.sort();
    let mut candidates = vec![
        CatalogEntry::new(TriangleFamily::Tetrahedral),
        CatalogEntry::new(TriangleFamily::Octahedral),
        CatalogEntry::new(TriangleFamily::Icosahedral),
    ];
    if t[0] == 2 && t[1] == 2 && t[2] >= 2 && t[2] <= u32::MAX as u64 {
        candidates.push(CatalogEntry::new(TriangleFamily::Dihedral(t[2] as u32)));
    }
    if t[0] == 3 && t[1] == 3 && t[2].is_multiple_of(5) && t[2] > 0 && t[2] / 5 <= u32::MAX as u64 {
        candidates.push(CatalogEntry::new(TriangleFamily::Amalgam335((t[2] / 5) as u32)));
    }
    candidates.retain(|e| e.valid_at(p) && e.triple() == (t[0], t[1], t[2]));
    candidates.sort();
    candidates
}
