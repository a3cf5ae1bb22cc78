//! Normal p-adic origamis `Ω/Γ → Ω/G` given by a homomorphism `φ: G → H`
//! from a presented discontinuous group onto a finite group.
//!
//! `G` is never materialized. A candidate `φ` is checked by evaluating the
//! relators in `H`, and its kernel is Schottky iff `φ` is injective on every
//! finite vertex group of the quotient graph.

mod catalog;
mod config;
mod presentation;
mod valuation;

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::curves::origami_genus;
use crate::graph::GraphOfGroups;
use crate::group::{build_group, ElementId, FiniteGroup, GroupError, GroupSpec};

pub use catalog::{catalog_by_type, catalog_lookup, CatalogEntry, TriangleFamily};
pub use config::{EntryConfig, PadicConfig};
pub use presentation::{amalgam_identification_word, build_presentation, canonical_generator, Presentation, Relator, Shape, VertexGroup, Word};
pub use valuation::{mumford_pairing_check, parse_rational, pval, BranchPairing, PAdicAbs, PairingLine, RationalPAdic};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PadicError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("{entry} is not available at p = {p}: {reason}")]
    InvalidPrime { p: u64, entry: String, reason: String },
    #[error("shape `{shape}` is not supported for {entry}")]
    UnsupportedShape { entry: String, shape: Shape },
    #[error("unknown triangle-group family `{0}`")]
    UnknownFamily(String),
    #[error("family `{family}`: {detail}")]
    BadEntry { family: String, detail: String },
    #[error("no image given for generator `{0}`")]
    MissingImage(String),
    #[error("`{0}` is not a generator of the presentation")]
    UnknownGenerator(String),
    #[error("image of `{generator}`: {message}")]
    Literal { generator: String, message: String },
    #[error("config: {0}")]
    Config(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("genus 1 + {degree}·({ramification}-1)/(2·{ramification}) is not an integer")]
    NonIntegralGenus { degree: u64, ramification: u64 },
    #[error("the valuation of 0 is undefined")]
    ZeroValuation,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("the pairing check needs an odd prime, got {0}")]
    PairingPrime(u64),
    #[error("q = {q} gives the excluded parameter λ = {lambda}")]
    ExcludedParameter { q: String, lambda: String },
    #[error("q = {q} does not satisfy |q|_{p} < 1")]
    NotSmall { q: String, p: u64 },
    #[error("`{0}` is not a rational number")]
    BadRational(String),
}

/// A candidate `φ: G → H`: the presentation of `G`, the target and the
/// images of the generators.
#[derive(Clone, Debug)]
pub struct PadicOrigamiSpec {
    pub p: u64,
    pub presentation: Presentation,
    pub target: FiniteGroup,
    /// Image of generator `i` of the presentation.
    pub images: Vec<ElementId>,
}

impl PadicOrigamiSpec {
    pub fn new(
        p: u64,
        entry: CatalogEntry,
        shape: Shape,
        target: FiniteGroup,
        images: &BTreeMap<String, ElementId>,
    ) -> Result<Self, PadicError> {
        if let Some(reason) = entry.invalid_reason(p) {
            return Err(PadicError::InvalidPrime { p, entry: entry.name(), reason });
        }
        let presentation = build_presentation(entry, shape)?;
        let mut assigned: Vec<Option<ElementId>> = vec![None; presentation.generators.len()];
        for (name, &x) in images {
            let i = presentation.generator_index(name).ok_or_else(|| PadicError::UnknownGenerator(name.clone()))?;
            if !target.is_valid(x) {
                return Err(GroupError::InvalidElement(x).into());
            }
            assigned[i] = Some(x);
        }
        let images = assigned
            .into_iter()
            .zip(&presentation.generators)
            .map(|(x, name)| x.ok_or_else(|| PadicError::MissingImage(name.clone())))
            .collect::<Result<_, _>>()?;
        Ok(PadicOrigamiSpec { p, presentation, target, images })
    }

    pub fn from_spec(
        p: u64,
        entry: CatalogEntry,
        shape: Shape,
        target: &GroupSpec,
        images: &BTreeMap<String, ElementId>,
    ) -> Result<Self, PadicError> {
        Self::new(p, entry, shape, build_group(target)?, images)
    }

    pub fn image(&self, generator: &str) -> Option<ElementId> {
        self.presentation.generator_index(generator).map(|i| self.images[i])
    }

    pub fn eval(&self, w: &Word) -> ElementId {
        w.eval(&self.target, &self.images)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelatorCheck {
    pub name: String,
    pub word: String,
    pub value: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomomorphismReport {
    pub relators: Vec<RelatorCheck>,
    pub image_order: usize,
    pub target_order: usize,
    pub surjective: bool,
    pub passed: bool,
}

/// Evaluates every relator in `H` and checks that the images generate `H`.
pub fn verify_homomorphism(spec: &PadicOrigamiSpec) -> HomomorphismReport {
    let h = &spec.target;
    let relators: Vec<RelatorCheck> = spec
        .presentation
        .relators
        .iter()
        .map(|r| {
            let v = spec.eval(&r.word);
            RelatorCheck { name: r.name.clone(), word: spec.presentation.render(&r.word), value: h.name(v), holds: v == h.identity() }
        })
        .collect();
    let image_order = h.closure_size(&spec.images);
    let surjective = image_order == h.order();
    let passed = surjective && relators.iter().all(|r| r.holds);
    HomomorphismReport { relators, image_order, target_order: h.order(), surjective, passed }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexEmbedding {
    pub name: String,
    pub order: usize,
    pub image_order: usize,
    pub injective: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchottkyReport {
    pub vertex_groups: Vec<VertexEmbedding>,
    pub schottky: bool,
}

/// The kernel of `φ` is a Schottky group iff `φ` is injective on every
/// vertex group. Requires a verified homomorphism.
pub fn check_schottky_kernel(spec: &PadicOrigamiSpec) -> Result<SchottkyReport, PadicError> {
    let hom = verify_homomorphism(spec);
    if !hom.passed {
        return Err(PadicError::Precondition("φ is not a surjective homomorphism".into()));
    }
    let vertex_groups: Vec<VertexEmbedding> = spec
        .presentation
        .vertex_groups
        .iter()
        .map(|v| {
            let image: BTreeSet<ElementId> = v.words.iter().map(|w| spec.eval(w)).collect();
            VertexEmbedding { name: v.name.clone(), order: v.words.len(), image_order: image.len(), injective: image.len() == v.words.len() }
        })
        .collect();
    let schottky = vertex_groups.iter().all(|v| v.injective);
    Ok(SchottkyReport { vertex_groups, schottky })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PadicOrigamiReport {
    pub p: u64,
    pub entry: String,
    pub shape: Shape,
    pub target_group: GroupSpec,
    pub verified: bool,
    /// Order of `H`.
    pub galois_order: u64,
    /// Degree of the origami `X → E`; half the Galois order for the extension shape.
    pub origami_degree: u64,
    pub ramification: u64,
    pub genus: Option<u64>,
    pub graph: GraphOfGroups,
    pub homomorphism: HomomorphismReport,
    pub schottky: Option<SchottkyReport>,
    pub diagnostics: Vec<String>,
}

fn genus_for(spec: &PadicOrigamiSpec) -> Result<(u64, u64), PadicError> {
    let galois = spec.target.order() as u64;
    let degree = galois / spec.presentation.base_index;
    let b = spec.presentation.ramification;
    let genus = origami_genus(degree, b).map_err(|_| PadicError::NonIntegralGenus { degree, ramification: b })?;
    Ok((degree, genus))
}

/// Galois group order, ramification index `b` and genus
/// `1 + d(b−1)/(2b)` of `X`, where `d` is the degree of `X → E`.
/// Requires the Schottky-kernel check to pass.
pub fn padic_invariants(spec: &PadicOrigamiSpec) -> Result<PadicOrigamiReport, PadicError> {
    let report = run_padic(spec);
    if !report.verified {
        return Err(PadicError::Precondition(report.diagnostics.join("; ")));
    }
    Ok(report)
}

/// Runs every check and collects failures as diagnostics.
pub fn run_padic(spec: &PadicOrigamiSpec) -> PadicOrigamiReport {
    let homomorphism = verify_homomorphism(spec);
    let mut diagnostics = Vec::new();
    for r in homomorphism.relators.iter().filter(|r| !r.holds) {
        diagnostics.push(format!("relator {} evaluates to {}", r.name, r.value));
    }
    if !homomorphism.surjective {
        diagnostics.push(format!("images generate a subgroup of order {} in a group of order {}", homomorphism.image_order, homomorphism.target_order));
    }
    let schottky = check_schottky_kernel(spec).ok();
    if let Some(s) = &schottky {
        for v in s.vertex_groups.iter().filter(|v| !v.injective) {
            diagnostics.push(format!("vertex group {} of order {} maps onto {} elements", v.name, v.order, v.image_order));
        }
    }
    let galois_order = spec.target.order() as u64;
    let (origami_degree, genus) = match genus_for(spec) {
        Ok((d, g)) => (d, Some(g)),
        Err(e) => {
            diagnostics.push(e.to_string());
            (galois_order / spec.presentation.base_index, None)
        }
    };
    let verified = homomorphism.passed && schottky.as_ref().is_some_and(|s| s.schottky) && genus.is_some();
    PadicOrigamiReport {
        p: spec.p,
        entry: spec.presentation.entry.name(),
        shape: spec.presentation.shape,
        target_group: spec.target.spec().clone(),
        verified,
        galois_order,
        origami_degree,
        ramification: spec.presentation.ramification,
        genus,
        graph: spec.presentation.graph.clone(),
        homomorphism,
        schottky,
        diagnostics,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{Element, ProjMatrix};

    fn mat(h: &FiniteGroup, e: [i64; 4]) -> ElementId {
        h.lookup(&Element::Matrix(ProjMatrix::new(11, e).unwrap())).unwrap()
    }

    fn images(pairs: &[(&str, ElementId)]) -> BTreeMap<String, ElementId> {
        pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
    }

    fn psl2_11_spec(gamma: [i64; 4]) -> PadicOrigamiSpec {
        let h = build_group(&GroupSpec::Psl2(11)).unwrap();
        let im = images(&[("σ", mat(&h, [6, 7, 1, 5])), ("δ", mat(&h, [0, 9, 6, 3])), ("γ", mat(&h, gamma))]);
        PadicOrigamiSpec::new(7, CatalogEntry::new(TriangleFamily::Dihedral(5)), Shape::Hnn, h, &im).unwrap()
    }

    #[test]
    fn psl2_11_homomorphism() {
        let spec = psl2_11_spec([3, 7, 8, 8]);
        let hom = verify_homomorphism(&spec);
        assert!(hom.passed, "{hom:?}");
        assert_eq!(hom.image_order, 660);
        let s = check_schottky_kernel(&spec).unwrap();
        assert!(s.schottky);
        let rep = padic_invariants(&spec).unwrap();
        assert_eq!((rep.ramification, rep.genus), (5, Some(265)));
    }

    #[test]
    fn perturbed_gamma_fails() {
        let spec = psl2_11_spec([3, 7, 8, 9]);
        let hom = verify_homomorphism(&spec);
        assert!(hom.relators.iter().any(|r| !r.holds));
        assert!(matches!(check_schottky_kernel(&spec), Err(PadicError::Precondition(_))));
        assert!(!run_padic(&spec).verified);
    }

    #[test]
    fn trivial_target_collapses_vertex_group() {
        let h = build_group(&GroupSpec::Cyclic(1)).unwrap();
        let im = images(&[("s", 0), ("d", 0), ("g", 0)]);
        let spec = PadicOrigamiSpec::new(7, CatalogEntry::new(TriangleFamily::Dihedral(5)), Shape::Hnn, h, &im).unwrap();
        assert!(verify_homomorphism(&spec).passed);
        assert!(!check_schottky_kernel(&spec).unwrap().schottky);
    }

    #[test]
    fn identity_on_dihedral() {
        let h = build_group(&GroupSpec::Dihedral(5)).unwrap();
        let (r, f) = (h.generators()[0], h.generators()[1]);
        let im = images(&[("s", f), ("d", r), ("g", 0)]);
        let spec = PadicOrigamiSpec::new(7, CatalogEntry::new(TriangleFamily::Dihedral(5)), Shape::Hnn, h, &im).unwrap();
        let rep = padic_invariants(&spec).unwrap();
        assert_eq!(rep.genus, Some(5));
    }

    #[test]
    fn spec_errors() {
        let h = build_group(&GroupSpec::Dihedral(5)).unwrap();
        let entry = CatalogEntry::new(TriangleFamily::Dihedral(5));
        let err = PadicOrigamiSpec::new(5, entry, Shape::Hnn, h.clone(), &images(&[])).unwrap_err();
        assert!(matches!(err, PadicError::InvalidPrime { .. }));
        let err = PadicOrigamiSpec::new(7, entry, Shape::Hnn, h.clone(), &images(&[("s", 0)])).unwrap_err();
        assert_eq!(err, PadicError::MissingImage("d".into()));
        let err = PadicOrigamiSpec::new(7, entry, Shape::Hnn, h, &images(&[("x", 0)])).unwrap_err();
        assert_eq!(err, PadicError::UnknownGenerator("x".into()));
    }
}
