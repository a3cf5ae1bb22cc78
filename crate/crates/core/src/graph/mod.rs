//! Finite graphs of groups with end markers.
//!
//! Ends are recorded as markers on their base vertex. An infinite ray has as
//! many vertices as edges, so markers contribute nothing to the Euler
//! characteristic.

mod label;
mod realize;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use label::GroupLabel;
pub use realize::{maximal_contraction, validate_realizable, Check, RealizabilityReport, TriangleShape};

pub type VertexId = u32;
pub type EdgeId = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge {edge} refers to missing vertex {vertex}")]
    MissingVertex { edge: EdgeId, vertex: VertexId },
    #[error("end {end} refers to missing vertex {vertex}")]
    MissingEndVertex { end: usize, vertex: VertexId },
    #[error("duplicate vertex id {0}")]
    DuplicateVertex(VertexId),
    #[error("edge {edge}: label {label} does not fit into vertex {vertex} ({vertex_label})")]
    EdgeLabel { edge: EdgeId, label: String, vertex: VertexId, vertex_label: String },
    #[error("end {end}: C{order} does not fit into vertex {vertex} ({vertex_label})")]
    EndLabel { end: usize, order: u64, vertex: VertexId, vertex_label: String },
    #[error("end {end} has order 0")]
    ZeroEnd { end: usize },
    #[error("no edge with id {0}")]
    NoSuchEdge(EdgeId),
    #[error("edge {0} is a loop")]
    LoopEdge(EdgeId),
    #[error("edge {edge}: label {label} is isomorphic to neither endpoint")]
    NotContractible { edge: EdgeId, label: String },
    #[error("invalid label `{0}`")]
    InvalidLabel(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
    pub label: GroupLabel,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }
}

/// End marker: a ray with cyclic stabilizer `C_order` based at `vertex`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct End {
    pub vertex: VertexId,
    pub order: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SubgraphSelector {
    All,
    NonTrivial,
    NonCyclic,
}

impl SubgraphSelector {
    fn keeps(self, label: &GroupLabel) -> bool {
        match self {
            SubgraphSelector::All => true,
            SubgraphSelector::NonTrivial => !label.is_trivial(),
            SubgraphSelector::NonCyclic => !label.is_cyclic(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
struct VertexJson {
    id: VertexId,
    label: GroupLabel,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
struct GraphJson {
    vertices: Vec<VertexJson>,
    #[serde(default)]
    edges: Vec<Edge>,
    #[serde(default)]
    ends: Vec<End>,
}

/// Finite graph of groups. Edge ids are positions in the edge list.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(try_from = "GraphJson", into = "GraphJson")]
pub struct GraphOfGroups {
    vertices: BTreeMap<VertexId, GroupLabel>,
    edges: Vec<Edge>,
    ends: Vec<End>,
}

impl TryFrom<GraphJson> for GraphOfGroups {
    type Error = GraphError;

    fn try_from(json: GraphJson) -> Result<Self, GraphError> {
        let mut vertices = BTreeMap::new();
        for v in json.vertices {
            if vertices.insert(v.id, v.label).is_some() {
                return Err(GraphError::DuplicateVertex(v.id));
            }
        }
        GraphOfGroups::new(vertices, json.edges, json.ends)
    }
}

impl From<GraphOfGroups> for GraphJson {
    fn from(g: GraphOfGroups) -> Self {
        GraphJson {
            vertices: g.vertices.into_iter().map(|(id, label)| VertexJson { id, label }).collect(),
            edges: g.edges,
            ends: g.ends,
        }
    }
}

impl GraphOfGroups {
    pub fn new(vertices: BTreeMap<VertexId, GroupLabel>, edges: Vec<Edge>, ends: Vec<End>) -> Result<Self, GraphError> {
        let vertices = vertices.into_iter().map(|(id, l)| (id, l.normalized())).collect();
        let edges = edges.into_iter().map(|e| Edge { label: e.label.normalized(), ..e }).collect();
        let g = GraphOfGroups { vertices, edges, ends };
        g.validate()?;
        Ok(g)
    }

    fn validate(&self) -> Result<(), GraphError> {
        for (k, e) in self.edges.iter().enumerate() {
            for w in [e.u, e.v] {
                let vl = self.vertices.get(&w).ok_or(GraphError::MissingVertex { edge: k, vertex: w })?;
                if !e.label.fits_into(vl) {
                    return Err(GraphError::EdgeLabel {
                        edge: k,
                        label: e.label.to_string(),
                        vertex: w,
                        vertex_label: vl.to_string(),
                    });
                }
            }
        }
        for (k, end) in self.ends.iter().enumerate() {
            if end.order == 0 {
                return Err(GraphError::ZeroEnd { end: k });
            }
            let vl = self.vertices.get(&end.vertex).ok_or(GraphError::MissingEndVertex { end: k, vertex: end.vertex })?;
            if vl.order() % end.order != 0 {
                return Err(GraphError::EndLabel { end: k, order: end.order, vertex: end.vertex, vertex_label: vl.to_string() });
            }
        }
        Ok(())
    }

    pub fn vertices(&self) -> &BTreeMap<VertexId, GroupLabel> {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn ends(&self) -> &[End] {
        &self.ends
    }

    pub fn label(&self, v: VertexId) -> Option<&GroupLabel> {
        self.vertices.get(&v)
    }

    /// Keeps vertices and edges whose labels pass `selector`. An end is kept
    /// iff its base vertex is kept and `C_order` passes too.
    pub fn select_subgraph(&self, selector: SubgraphSelector) -> GraphOfGroups {
        let vertices: BTreeMap<_, _> = self.vertices.iter().filter(|(_, l)| selector.keeps(l)).map(|(&k, l)| (k, l.clone())).collect();
        let edges = self
            .edges
            .iter()
            .filter(|e| selector.keeps(&e.label) && vertices.contains_key(&e.u) && vertices.contains_key(&e.v))
            .cloned()
            .collect();
        let ends = self
            .ends
            .iter()
            .filter(|end| vertices.contains_key(&end.vertex) && selector.keeps(&GroupLabel::cyclic(end.order)))
            .copied()
            .collect();
        GraphOfGroups { vertices, edges, ends }
    }

    /// `V − E` over the finite part.
    pub fn chi(&self) -> i64 {
        self.vertices.len() as i64 - self.edges.len() as i64
    }

    /// Connected components as sorted vertex lists, ordered by smallest id.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let ids: Vec<VertexId> = self.vertices.keys().copied().collect();
        let pos: BTreeMap<VertexId, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut parent: Vec<usize> = (0..ids.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for e in &self.edges {
            let (a, b) = (find(&mut parent, pos[&e.u]), find(&mut parent, pos[&e.v]));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut groups: BTreeMap<usize, Vec<VertexId>> = BTreeMap::new();
        for (i, &v) in ids.iter().enumerate() {
            let r = find(&mut parent, i);
            groups.entry(r).or_default().push(v);
        }
        groups.into_values().collect()
    }

    /// First Betti number `E − V + components`.
    pub fn genus(&self) -> u64 {
        (self.edges.len() as i64 - self.vertices.len() as i64 + self.components().len() as i64) as u64
    }

    pub fn end_count(&self) -> EndCount {
        let nc = self.select_subgraph(SubgraphSelector::NonCyclic).chi();
        let nt = self.select_subgraph(SubgraphSelector::NonTrivial).chi();
        EndCount { formula: nc + 2 * nt, markers: self.ends.len() }
    }

    /// Whether the edge group maps isomorphically onto an endpoint group.
    pub fn is_contractible(&self, e: EdgeId) -> bool {
        self.contract_edge(e).is_ok()
    }

    /// Contracts a non-loop edge whose group equals one endpoint group,
    /// keeping the label of larger order (the lower id on ties). Other
    /// edges and ends of the removed vertex move to the kept one.
    pub fn contract_edge(&self, e: EdgeId) -> Result<GraphOfGroups, GraphError> {
        let edge = self.edges.get(e).ok_or(GraphError::NoSuchEdge(e))?;
        if edge.is_loop() {
            return Err(GraphError::LoopEdge(e));
        }
        let (lu, lv) = (&self.vertices[&edge.u], &self.vertices[&edge.v]);
        if !edge.label.isomorphic_to(lu) && !edge.label.isomorphic_to(lv) {
            return Err(GraphError::NotContractible { edge: e, label: edge.label.to_string() });
        }
        let (keep, drop) = match lu.order().cmp(&lv.order()) {
            std::cmp::Ordering::Greater => (edge.u, edge.v),
            std::cmp::Ordering::Less => (edge.v, edge.u),
            std::cmp::Ordering::Equal => (edge.u.min(edge.v), edge.u.max(edge.v)),
        };
        let relink = |w: VertexId| if w == drop { keep } else { w };
        let mut vertices = self.vertices.clone();
        vertices.remove(&drop);
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != e)
            .map(|(_, x)| Edge { u: relink(x.u), v: relink(x.v), label: x.label.clone() })
            .collect();
        let ends = self.ends.iter().map(|x| End { vertex: relink(x.vertex), order: x.order }).collect();
        Ok(GraphOfGroups { vertices, edges, ends })
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for (id, l) in &self.vertices {
            let _ = writeln!(out, "  v{id} [label=\"{l}\"];");
        }
        for e in &self.edges {
            let _ = writeln!(out, "  v{} -- v{} [label=\"{}\"];", e.u, e.v, e.label);
        }
        for (k, end) in self.ends.iter().enumerate() {
            let _ = writeln!(out, "  end{k} [shape=point];");
            let _ = writeln!(out, "  v{} -- end{k} [label=\"C{}\", style=dashed];", end.vertex, end.order);
        }
        out.push_str("}\n");
        out
    }
}

/// End count from the Euler characteristic formula alongside the marker count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EndCount {
    pub formula: i64,
    pub markers: usize,
}

impl EndCount {
    pub fn agrees(&self) -> bool {
        self.formula == self.markers as i64
    }
}

/// Small builder used by the catalog graphs and tests.
#[derive(Clone, Debug, Default)]
pub struct GraphBuilder {
    vertices: BTreeMap<VertexId, GroupLabel>,
    edges: Vec<Edge>,
    ends: Vec<End>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn vertex(mut self, id: VertexId, label: GroupLabel) -> Self {
        self.vertices.insert(id, label);
        self
    }

    pub fn edge(mut self, u: VertexId, v: VertexId, label: GroupLabel) -> Self {
        self.edges.push(Edge { u, v, label });
        self
    }

    pub fn end(mut self, vertex: VertexId, order: u64) -> Self {
        self.ends.push(End { vertex, order });
        self
    }

    pub fn build(self) -> Result<GraphOfGroups, GraphError> {
        GraphOfGroups::new(self.vertices, self.edges, self.ends)
    }
}

/// Standard graphs of the triangle-group catalog.
pub mod catalog {
    use super::{GraphBuilder, GraphOfGroups, GroupLabel};

    /// Dihedral origami: `D_n` vertex, `⟨σ⟩ = C₂` loop, `⟨δ⟩ = C_n` end.
    pub fn dihedral_origami(n: u32) -> GraphOfGroups {
        hnn_graph(GroupLabel::Dihedral(n), 2, n as u64)
    }

    /// Tetrahedral origami: `A₄` vertex, `C₃` loop, `C₂` end.
    pub fn tetrahedral_origami() -> GraphOfGroups {
        hnn_graph(GroupLabel::A4, 3, 2)
    }

    /// One vertex `Δ` with a loop `C_a` and an end `C_b`.
    pub fn hnn_graph(delta: GroupLabel, a: u64, b: u64) -> GraphOfGroups {
        GraphBuilder::new()
            .vertex(0, delta)
            .edge(0, 0, GroupLabel::cyclic(a))
            .end(0, b)
            .build()
            .expect("catalog graph is valid")
    }

    /// Bare triangle group: one vertex with three ends.
    pub fn triangle_vertex(label: GroupLabel, ends: [u64; 3]) -> GraphOfGroups {
        let mut b = GraphBuilder::new().vertex(0, label);
        for n in ends {
            b = b.end(0, n);
        }
        b.build().expect("catalog graph is valid")
    }

    /// `A₅ *_{D₅} D_{5n} *_{D₅} A₅` with ends `C₃, C₅ₙ, C₃`.
    pub fn amalgam_335(n: u32) -> GraphOfGroups {
        GraphBuilder::new()
            .vertex(0, GroupLabel::A5)
            .vertex(1, GroupLabel::Dihedral(5 * n))
            .vertex(2, GroupLabel::A5)
            .edge(0, 1, GroupLabel::Dihedral(5))
            .edge(1, 2, GroupLabel::Dihedral(5))
            .end(0, 3)
            .end(1, 5 * n as u64)
            .end(2, 3)
            .build()
            .expect("catalog graph is valid")
    }

    /// HNN extension of the amalgam: the two `C₃` ends are joined by a loop.
    pub fn amalgam_335_hnn(n: u32) -> GraphOfGroups {
        GraphBuilder::new()
            .vertex(0, GroupLabel::A5)
            .vertex(1, GroupLabel::Dihedral(5 * n))
            .vertex(2, GroupLabel::A5)
            .edge(0, 1, GroupLabel::Dihedral(5))
            .edge(1, 2, GroupLabel::Dihedral(5))
            .edge(0, 2, GroupLabel::Cyclic(3))
            .end(1, 5 * n as u64)
            .build()
            .expect("catalog graph is valid")
    }

    /// Automorphism extension: `Δ₁ -C_a- Δ₂` with ends `C₂, C₂` on `Δ₁`
    /// and `C₂, C_{2b}` on `Δ₂`.
    pub fn aut_extension(delta1: GroupLabel, delta2: GroupLabel, a: u64, b: u64) -> GraphOfGroups {
        GraphBuilder::new()
            .vertex(0, delta1)
            .vertex(1, delta2)
            .edge(0, 1, GroupLabel::cyclic(a))
            .end(0, 2)
            .end(0, 2)
            .end(1, 2)
            .end(1, 2 * b)
            .build()
            .expect("catalog graph is valid")
    }

    /// The dihedral instance `D₂ -C₂- D_{2b}`.
    pub fn dihedral_aut_extension(b: u32) -> GraphOfGroups {
        aut_extension(GroupLabel::Dihedral(2), GroupLabel::Dihedral(2 * b), 2, b as u64)
    }
}

#[cfg(test)]
mod tests {
    use super::catalog::*;
    use super::*;

    fn loop_vertex() -> GraphOfGroups {
        GraphBuilder::new().vertex(0, GroupLabel::Trivial).edge(0, 0, GroupLabel::Trivial).build().unwrap()
    }

    #[test]
    fn chi_and_genus() {
        assert_eq!(GraphOfGroups::default().chi(), 0);
        assert_eq!(loop_vertex().chi(), 0);
        assert_eq!(loop_vertex().genus(), 1);
        let core = dihedral_aut_extension(5).select_subgraph(SubgraphSelector::NonTrivial);
        assert_eq!(core.chi(), 1);
        let parallel = GraphBuilder::new()
            .vertex(0, GroupLabel::Trivial)
            .vertex(1, GroupLabel::Trivial)
            .edge(0, 1, GroupLabel::Trivial)
            .edge(1, 0, GroupLabel::Trivial)
            .build()
            .unwrap();
        assert_eq!(parallel.genus(), 1);
        let path = GraphBuilder::new()
            .vertex(0, GroupLabel::Trivial)
            .vertex(1, GroupLabel::Trivial)
            .vertex(2, GroupLabel::Trivial)
            .edge(0, 1, GroupLabel::Trivial)
            .edge(1, 2, GroupLabel::Trivial)
            .build()
            .unwrap();
        assert_eq!(path.genus(), 0);
    }

    #[test]
    fn chi_is_additive_over_components() {
        let g = GraphBuilder::new()
            .vertex(0, GroupLabel::A4)
            .vertex(1, GroupLabel::Cyclic(3))
            .vertex(5, GroupLabel::Trivial)
            .edge(0, 1, GroupLabel::Cyclic(3))
            .edge(5, 5, GroupLabel::Trivial)
            .build()
            .unwrap();
        assert_eq!(g.components(), vec![vec![0, 1], vec![5]]);
        // χ([0, 1]) = 1, χ([5] with a loop) = 0
        assert_eq!(g.chi(), 1);
    }

    #[test]
    fn subgraph_selection() {
        let g = dihedral_origami(5);
        assert_eq!(g.select_subgraph(SubgraphSelector::All), g);
        let nc = g.select_subgraph(SubgraphSelector::NonCyclic);
        assert_eq!(nc.vertices().len(), 1);
        assert!(nc.edges().is_empty());
        assert!(nc.ends().is_empty());
        let nc = dihedral_aut_extension(5).select_subgraph(SubgraphSelector::NonCyclic);
        assert_eq!(nc.vertices().len(), 2);
        assert!(nc.edges().is_empty());
        for g in [amalgam_335(2), dihedral_origami(3), tetrahedral_origami()] {
            for s in [SubgraphSelector::All, SubgraphSelector::NonTrivial, SubgraphSelector::NonCyclic] {
                let once = g.select_subgraph(s);
                assert_eq!(once.select_subgraph(s), once);
            }
            let nt = g.select_subgraph(SubgraphSelector::NonTrivial);
            let nc = g.select_subgraph(SubgraphSelector::NonCyclic);
            assert!(nc.vertices().keys().all(|v| nt.vertices().contains_key(v)));
            assert!(nc.edges().iter().all(|e| nt.edges().contains(e)));
        }
    }

    #[test]
    fn end_counts() {
        for (g, n) in [
            (dihedral_origami(5), 1),
            (tetrahedral_origami(), 1),
            (triangle_vertex(GroupLabel::A5, [2, 3, 5]), 3),
            (dihedral_aut_extension(5), 4),
            (amalgam_335(1), 3),
            (amalgam_335_hnn(2), 1),
        ] {
            let c = g.end_count();
            assert_eq!(c.formula, n);
            assert!(c.agrees());
        }
    }

    #[test]
    fn contraction() {
        let g = GraphBuilder::new()
            .vertex(0, GroupLabel::Trivial)
            .vertex(1, GroupLabel::Trivial)
            .edge(0, 1, GroupLabel::Trivial)
            .build()
            .unwrap();
        let c = g.contract_edge(0).unwrap();
        assert_eq!(c.vertices().len(), 1);
        assert!(c.edges().is_empty());

        let g = GraphBuilder::new()
            .vertex(0, GroupLabel::Cyclic(2))
            .vertex(1, GroupLabel::Dihedral(10))
            .edge(0, 1, GroupLabel::Cyclic(2))
            .end(0, 2)
            .build()
            .unwrap();
        let c = g.contract_edge(0).unwrap();
        assert_eq!(c.vertices().values().collect::<Vec<_>>(), vec![&GroupLabel::Dihedral(10)]);
        assert_eq!(c.ends(), &[End { vertex: 1, order: 2 }]);

        let g = dihedral_aut_extension(5);
        assert_eq!(g.contract_edge(0), Err(GraphError::NotContractible { edge: 0, label: "C2".into() }));
        assert_eq!(loop_vertex().contract_edge(0), Err(GraphError::LoopEdge(0)));
    }

    #[test]
    fn contraction_preserves_invariants() {
        // Δ -C₂- C₂ -C₂- Δ' path with a loop through the middle
        let g = GraphBuilder::new()
            .vertex(0, GroupLabel::Dihedral(3))
            .vertex(1, GroupLabel::Cyclic(2))
            .vertex(2, GroupLabel::Cyclic(2))
            .edge(0, 1, GroupLabel::Cyclic(2))
            .edge(1, 2, GroupLabel::Cyclic(2))
            .edge(2, 0, GroupLabel::Cyclic(2))
            .end(0, 3)
            .build()
            .unwrap();
        for e in 0..g.edges().len() {
            if let Ok(c) = g.contract_edge(e) {
                assert_eq!(c.genus(), g.genus());
                assert_eq!(c.end_count(), g.end_count());
            }
        }
        let m = maximal_contraction(&g);
        assert_eq!(m, dihedral_origami(3));
    }

    #[test]
    fn rejects_bad_labels() {
        let err = GraphBuilder::new().vertex(0, GroupLabel::Cyclic(3)).end(0, 2).build().unwrap_err();
        assert!(matches!(err, GraphError::EndLabel { .. }));
        let err = GraphBuilder::new().vertex(0, GroupLabel::Cyclic(4)).edge(0, 1, GroupLabel::Trivial).build().unwrap_err();
        assert!(matches!(err, GraphError::MissingVertex { .. }));
        let err = GraphBuilder::new()
            .vertex(0, GroupLabel::Cyclic(6))
            .edge(0, 0, GroupLabel::Dihedral(3))
            .build()
            .unwrap_err();
        assert!(matches!(err, GraphError::EdgeLabel { .. }));
    }

    #[test]
    fn json_round_trip() {
        let g = amalgam_335_hnn(1);
        let text = serde_json::to_string(&g).unwrap();
        assert!(text.contains("\"vertices\""));
        let back: GraphOfGroups = serde_json::from_str(&text).unwrap();
        assert_eq!(back, g);
        let bad = r#"{"vertices":[{"id":0,"label":"C3"}],"ends":[{"vertex":0,"order":2}]}"#;
        assert!(serde_json::from_str::<GraphOfGroups>(bad).is_err());
        assert!(g.to_dot().contains("v0 -- v1"));
    }
}
