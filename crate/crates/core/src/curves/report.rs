//! Serializable summary of an enumeration.

use serde::{Deserialize, Serialize};

use super::{AutType, InvolutionKind, OrigamiCurve};
use crate::group::{ElementId, FiniteGroup, GroupSpec};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentativeJson {
    pub a: ElementId,
    pub b: ElementId,
    /// Printed names of `a` and `b`.
    pub names: [String; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveReportEntry {
    pub rep: RepresentativeJson,
    pub ramification: u32,
    pub genus: u64,
    pub aut_type: AutType,
    pub involution: InvolutionKind,
    pub automorphism_order: u64,
    pub orbit_size: usize,
    pub trivial: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveReport {
    pub group: GroupSpec,
    pub degree: u64,
    pub curves: Vec<CurveReportEntry>,
}

impl CurveReport {
    pub fn new(group: &FiniteGroup, curves: &[OrigamiCurve]) -> Self {
        let entry = |c: &OrigamiCurve| {
            let (a, b) = c.representative.pair();
            CurveReportEntry {
                rep: RepresentativeJson { a, b, names: [group.name(a), group.name(b)] },
                ramification: c.ramification,
                genus: c.genus,
                aut_type: c.aut_type,
                involution: c.involution,
                automorphism_order: c.automorphism_group_order(),
                orbit_size: c.orbit_size,
                trivial: c.is_trivial(),
            }
        };
        CurveReport { group: group.spec().clone(), degree: group.order() as u64, curves: curves.iter().map(entry).collect() }
    }

    /// Drops unramified curves unless `keep_trivial`.
    pub fn filter_trivial(mut self, keep_trivial: bool) -> Self {
        if !keep_trivial {
            self.curves.retain(|c| !c.trivial);
        }
        self
    }

    pub fn to_human(&self) -> String {
        let mut out = format!("group {} (order {}): {} curve(s)\n", self.group, self.degree, self.curves.len());
        for (k, c) in self.curves.iter().enumerate() {
            let aut = match c.aut_type {
                AutType::GaloisOnly => "galois-only",
                AutType::ExtendedByInvolution => "extended-by-involution",
            };
            out.push_str(&format!(
                "  [{k}] a = {}, b = {}\n      r = {}, genus = {}, {aut}, |Aut| = {}, orbit = {}{}\n",
                c.rep.names[0],
                c.rep.names[1],
                c.ramification,
                c.genus,
                c.automorphism_order,
                c.orbit_size,
                if c.trivial { ", trivial" } else { "" }
            ));
        }
        out
    }
}
