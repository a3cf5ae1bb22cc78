//! Matching a p-adic origami to complex origami curves with the same Galois
//! group by ramification index and automorphism type.

use serde::{Deserialize, Serialize};

use crate::curves::{AutType, CurveEnumeration, CurveError, CurveReport, CurveReportEntry};
use crate::group::{build_group_with_cap, ElementId, GroupSpec, DEFAULT_ORDER_CAP};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchQuery {
    pub group: GroupSpec,
    pub ramification: u32,
    #[serde(default)]
    pub aut_type: Option<AutType>,
    /// Known subgroup order of the automorphism group; keeps curves whose
    /// automorphism group order it divides.
    #[serde(default)]
    pub automorphism_order: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", content = "count", rename_all = "snake_case")]
pub enum Verdict {
    Unique,
    Ambiguous(usize),
    NoMatch,
}

impl Verdict {
    fn from_count(k: usize) -> Verdict {
        match k {
            0 => Verdict::NoMatch,
            1 => Verdict::Unique,
            k => Verdict::Ambiguous(k),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchReport {
    pub group: GroupSpec,
    pub degree: u64,
    pub verdict: Verdict,
    pub candidates: Vec<CurveReportEntry>,
    /// Applied filters with the number of curves left after each.
    pub filters: Vec<String>,
}

impl MatchReport {
    /// Whether the curve containing `(a, b)` is among the candidates.
    pub fn contains_curve_of(&self, enumeration: &CurveEnumeration, a: ElementId, b: ElementId) -> bool {
        enumeration
            .curve_of(a, b)
            .map(|k| enumeration.curves()[k].representative.pair())
            .is_some_and(|rep| self.candidates.iter().any(|c| (c.rep.a, c.rep.b) == rep))
    }

    pub fn to_human(&self) -> String {
        let verdict = match self.verdict {
            Verdict::Unique => "unique".to_string(),
            Verdict::Ambiguous(k) => format!("ambiguous ({k} curves)"),
            Verdict::NoMatch => "no match".to_string(),
        };
        let mut out = format!("match in {} (order {}): {verdict}\n", self.group, self.degree);
        for f in &self.filters {
            out.push_str(&format!("  filter {f}\n"));
        }
        for c in &self.candidates {
            out.push_str(&format!("  a = {}, b = {}, r = {}, genus = {}\n", c.rep.names[0], c.rep.names[1], c.ramification, c.genus));
        }
        out
    }
}

pub fn match_curves(query: &MatchQuery) -> Result<MatchReport, CurveError> {
    match_curves_with_cap(query, DEFAULT_ORDER_CAP)
}

pub fn match_curves_with_cap(query: &MatchQuery, cap: usize) -> Result<MatchReport, CurveError> {
    let group = build_group_with_cap(&query.group, cap)?;
    let enumeration = CurveEnumeration::run_with_cap(&group, cap)?;
    Ok(match_in(query, &group, &enumeration))
}

/// Filters an existing enumeration; candidates keep the enumeration order.
pub fn match_in(query: &MatchQuery, group: &crate::group::FiniteGroup, enumeration: &CurveEnumeration) -> MatchReport {
    let report = CurveReport::new(group, enumeration.curves());
    let mut candidates = report.curves;
    let mut filters = vec![format!("all curves: {}", candidates.len())];
    candidates.retain(|c| c.ramification == query.ramification);
    filters.push(format!("ramification = {}: {}", query.ramification, candidates.len()));
    if let Some(t) = query.aut_type {
        candidates.retain(|c| c.aut_type == t);
        filters.push(format!("aut_type = {t:?}: {}", candidates.len()));
    }
    if let Some(order) = query.automorphism_order {
        candidates.retain(|c| order > 0 && c.automorphism_order % order == 0);
        filters.push(format!("{order} divides |Aut|: {}", candidates.len()));
    }
    MatchReport { group: report.group, degree: report.degree, verdict: Verdict::from_count(candidates.len()), candidates, filters }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn query(group: GroupSpec, r: u32) -> MatchQuery {
        MatchQuery { group, ramification: r, aut_type: None, automorphism_order: None }
    }

    #[test]
    fn dihedral_products_are_unique() {
        let q = query(GroupSpec::product(GroupSpec::Dihedral(5), GroupSpec::Cyclic(3)), 5);
        assert_eq!(match_curves(&q).unwrap().verdict, Verdict::Unique);
        let q = query(GroupSpec::product(GroupSpec::Dihedral(5), GroupSpec::Cyclic(3)), 3);
        assert_eq!(match_curves(&q).unwrap().verdict, Verdict::NoMatch);
    }

    #[test]
    fn filters_narrow_down() {
        let mut q = query(GroupSpec::Psl2(7), 4);
        assert_eq!(match_curves(&q).unwrap().verdict, Verdict::Ambiguous(2));
        q.aut_type = Some(AutType::ExtendedByInvolution);
        assert_eq!(match_curves(&q).unwrap().verdict, Verdict::NoMatch);
        q.aut_type = None;
        q.automorphism_order = Some(336);
        assert_eq!(match_curves(&q).unwrap().verdict, Verdict::Ambiguous(2));
    }
}
