//! Contraction to normal form and realizability diagnostics.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{GraphOfGroups, GroupLabel, SubgraphSelector, VertexId};
use crate::padic::{catalog_lookup, CatalogEntry, TriangleFamily};

/// Contracts the lowest contractible edge until none is left.
pub fn maximal_contraction(g: &GraphOfGroups) -> GraphOfGroups {
    let mut current = g.clone();
    'outer: loop {
        for e in 0..current.edges().len() {
            if let Ok(next) = current.contract_edge(e) {
                current = next;
                continue 'outer;
            }
        }
        return current;
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, passed: bool, detail: String) -> Self {
        Check { name: name.to_string(), passed, detail }
    }
}

/// A genus-1, one-ended graph identified as `⟨Δ, γ⟩` with loop `C_a` and end `C_b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleShape {
    pub entry: CatalogEntry,
    pub a: u64,
    pub b: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizabilityReport {
    pub p: u64,
    pub genus: u64,
    pub end_formula: i64,
    pub end_markers: usize,
    pub checks: Vec<Check>,
    pub identified: Option<TriangleShape>,
}

impl RealizabilityReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Runs the realizability checks at the prime `p`:
/// the non-cyclic subgraph is a forest, the end-count formula matches the
/// markers, and a genus-1 graph with one end contracts to a catalog
/// triangle group with one loop and one end.
pub fn validate_realizable(g: &GraphOfGroups, p: u64) -> RealizabilityReport {
    let mut checks = Vec::new();
    let nc = g.select_subgraph(SubgraphSelector::NonCyclic);
    let nc_genus = nc.genus();
    checks.push(Check::new(
        "noncyclic_genus_zero",
        nc_genus == 0,
        if nc_genus == 0 { "non-cyclic subgraph is a forest".into() } else { cycle_detail(&nc) },
    ));
    let count = g.end_count();
    checks.push(Check::new(
        "end_count",
        count.agrees(),
        format!("formula χ(nc) + 2χ(nt) = {}, markers = {}", count.formula, count.markers),
    ));
    let genus = g.genus();
    let mut identified = None;
    if genus == 1 && count.markers == 1 {
        match identify_hnn(g, p) {
            Ok(shape) => {
                checks.push(Check::new(
                    "triangle_shape",
                    true,
                    format!("{} with loop C{} and end C{}", shape.entry.name(), shape.a, shape.b),
                ));
                identified = Some(shape);
            }
            Err(detail) => checks.push(Check::new("triangle_shape", false, detail)),
        }
    }
    RealizabilityReport { p, genus, end_formula: count.formula, end_markers: count.markers, checks, identified }
}

fn cycle_detail(nc: &GraphOfGroups) -> String {
    let offending: Vec<String> = nc
        .components()
        .into_iter()
        .filter(|comp| {
            let set: BTreeSet<_> = comp.iter().collect();
            let edges = nc.edges().iter().filter(|e| set.contains(&e.u)).count();
            edges >= comp.len()
        })
        .map(|comp| format!("{comp:?}"))
        .collect();
    format!("non-cyclic subgraph has genus {}; cyclic components {}", nc.genus(), offending.join(", "))
}

/// Recognizes `A₅ -D₅- D_{5n} -D₅- A₅` and returns `n`. For `n = 1` the
/// middle vertex contracts away, leaving `A₅ -D₅- A₅`.
fn amalgam_parameter(nc: &GraphOfGroups, comp: &[VertexId]) -> Option<u32> {
    if comp.len() == 2 && nc.edges().len() == 1 {
        let ok = comp.iter().all(|&v| nc.label(v) == Some(&GroupLabel::A5)) && nc.edges()[0].label == GroupLabel::Dihedral(5);
        return ok.then_some(1);
    }
    if comp.len() != 3 || nc.edges().len() != 2 {
        return None;
    }
    let middle = comp.iter().copied().find(|v| matches!(nc.label(*v), Some(GroupLabel::Dihedral(_))))?;
    let GroupLabel::Dihedral(m) = nc.label(middle)? else { return None };
    if m % 5 != 0 {
        return None;
    }
    let outer: Vec<_> = comp.iter().copied().filter(|&v| v != middle).collect();
    if outer.iter().any(|&v| nc.label(v) != Some(&GroupLabel::A5)) {
        return None;
    }
    let mut joined = BTreeSet::new();
    for e in nc.edges() {
        if e.label != GroupLabel::Dihedral(5) {
            return None;
        }
        let other = match (e.u == middle, e.v == middle) {
            (true, false) => e.v,
            (false, true) => e.u,
            _ => return None,
        };
        joined.insert(other);
    }
    (joined.len() == 2).then_some(m / 5)
}

fn identify_hnn(g: &GraphOfGroups, p: u64) -> Result<TriangleShape, String> {
    let m = maximal_contraction(g);
    let nc = m.select_subgraph(SubgraphSelector::NonCyclic);
    let comps = nc.components();
    if comps.len() != 1 {
        return Err(format!("expected one non-cyclic component after contraction, found {}", comps.len()));
    }
    let comp = &comps[0];
    let family = if comp.len() == 1 {
        TriangleFamily::from_label(&nc.vertices()[&comp[0]])
            .ok_or_else(|| format!("vertex {} ({}) is not a triangle group", comp[0], nc.vertices()[&comp[0]]))?
    } else {
        TriangleFamily::Amalgam335(
            amalgam_parameter(&nc, comp).ok_or_else(|| format!("non-cyclic tree {comp:?} is not a catalog amalgam"))?,
        )
    };
    let inside: BTreeSet<_> = comp.iter().copied().collect();
    if let Some(v) = m.vertices().keys().find(|v| !inside.contains(v)) {
        return Err(format!("vertex {v} ({}) survives contraction outside the triangle group", m.vertices()[v]));
    }
    let loops: Vec<_> = m.edges().iter().filter(|e| e.label.is_cyclic()).collect();
    if loops.len() != 1 {
        return Err(format!("expected one cyclic loop after contraction, found {}", loops.len()));
    }
    let a = loops[0].label.order();
    let b = m.ends()[0].order;
    let entry = CatalogEntry::new(family);
    if catalog_lookup(p, a, b).contains(&entry) {
        Ok(TriangleShape { entry, a, b })
    } else {
        Err(format!("{} with a = {a}, b = {b} is not a catalog entry at p = {p}", entry.name()))
    }
}

#[cfg(test)]
mod tests {
    use super::super::catalog::*;
    use super::super::GraphBuilder;
    use super::*;

    #[test]
    fn catalog_graphs_are_realizable() {
        let r = validate_realizable(&dihedral_origami(5), 7);
        assert!(r.passed(), "{r:?}");
        let shape = r.identified.unwrap();
        assert_eq!((shape.entry.family, shape.a, shape.b), (TriangleFamily::Dihedral(5), 2, 5));

        let r = validate_realizable(&tetrahedral_origami(), 7);
        assert!(r.passed());
        let shape = r.identified.unwrap();
        assert_eq!((shape.entry.family, shape.a, shape.b), (TriangleFamily::Tetrahedral, 3, 2));

        for n in 1..4 {
            let r = validate_realizable(&amalgam_335_hnn(n), 5);
            assert!(r.passed(), "{r:?}");
            assert_eq!(r.identified.unwrap().entry.family, TriangleFamily::Amalgam335(n));
        }

        let r = validate_realizable(&dihedral_aut_extension(5), 7);
        assert!(r.passed());
        assert!(r.identified.is_none());
    }

    #[test]
    fn wrong_prime_is_rejected() {
        assert!(!validate_realizable(&dihedral_origami(5), 5).passed());
        assert!(!validate_realizable(&amalgam_335_hnn(1), 7).passed());
    }

    #[test]
    fn noncyclic_cycle_fails() {
        let g = GraphBuilder::new()
            .vertex(0, GroupLabel::Dihedral(3))
            .vertex(1, GroupLabel::Dihedral(3))
            .edge(0, 1, GroupLabel::Dihedral(3))
            .edge(0, 1, GroupLabel::Dihedral(3))
            .end(0, 3)
            .build()
            .unwrap();
        let r = validate_realizable(&g, 7);
        assert_eq!(r.genus, 1);
        assert!(!r.checks[0].passed);
    }

    #[test]
    fn subdivided_loop_contracts() {
        let g = GraphBuilder::new()
            .vertex(0, GroupLabel::A4)
            .vertex(1, GroupLabel::Cyclic(3))
            .edge(0, 1, GroupLabel::Cyclic(3))
            .edge(1, 0, GroupLabel::Cyclic(3))
            .end(0, 2)
            .build()
            .unwrap();
        let r = validate_realizable(&g, 11);
        assert!(r.passed(), "{r:?}");
    }
}
