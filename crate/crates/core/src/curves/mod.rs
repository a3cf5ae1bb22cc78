//! Origami curves of normal origamis with a fixed finite Galois group.
//!
//! A normal origami with Galois group `H` is a generating pair `(a, b)` of
//! `H` (the images of the horizontal and vertical loops). Origamis on the
//! same curve differ by an automorphism of the free group `F₂` and an
//! automorphism of `H`. Enumeration runs in two phases:
//!
//! 1. breadth-first closure of each generating pair under the Nielsen moves
//!    `swap`, `invert`, `slide` and conjugation by the group generators;
//! 2. merging of phase-1 classes whose members are related by an
//!    automorphism of `H`, found by pair-map extension.

mod cyclic;
mod report;
mod tiling;

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::group::{ElementId, FiniteGroup, GroupError, PairExtender, DEFAULT_ORDER_CAP};

pub use cyclic::{normalize_cyclic, UnimodularMatrix};
pub use report::{CurveReport, CurveReportEntry, RepresentativeJson};
pub use tiling::{square_tiling, Tiling};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CurveError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("group of order {order} exceeds the enumeration cap {cap}")]
    TooLarge { order: usize, cap: usize },
    #[error("genus 1 + {degree}·({ramification}-1)/(2·{ramification}) is not an integer")]
    NonIntegralGenus { degree: u64, ramification: u64 },
    #[error("invariant `{invariant}` differs between {first:?} and {second:?} on the same curve")]
    InconsistentInvariant { invariant: &'static str, first: (ElementId, ElementId), second: (ElementId, ElementId) },
    #[error("gcd({cx}, {cy}, {modulus}) ≠ 1: the residues do not generate Z/{modulus}Z")]
    NotCyclicGenerating { modulus: u64, cx: i64, cy: i64 },
}

/// Monodromy `(a, b) = (f(x), f(y))` of a normal origami.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Monodromy {
    pub a: ElementId,
    pub b: ElementId,
}

impl Monodromy {
    pub fn new(group: &FiniteGroup, a: ElementId, b: ElementId) -> Result<Self, CurveError> {
        for x in [a, b] {
            if !group.is_valid(x) {
                return Err(GroupError::InvalidElement(x).into());
            }
        }
        if !group.generates(a, b) {
            return Err(GroupError::NotGenerating(a, b).into());
        }
        Ok(Monodromy { a, b })
    }

    pub fn pair(&self) -> (ElementId, ElementId) {
        (self.a, self.b)
    }
}

/// Whether the automorphism group of the origami is strictly larger than
/// its group of translations in the way the matcher cares about.
///
/// Any extra automorphism acts on the torus as the elliptic involution, and
/// on the monodromy as `a ↦ a⁻¹, b ↦ b⁻¹`. `ExtendedByInvolution` means that
/// this involution is realized by an automorphism of the origami commuting
/// with every translation, i.e. the inverting automorphism of `H` is inner
/// and the automorphism group contains `H × C₂`. See [`InvolutionKind`]
/// for the finer classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AutType {
    GaloisOnly,
    ExtendedByInvolution,
}

/// How `a ↦ a⁻¹, b ↦ b⁻¹` behaves on `H`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InvolutionKind {
    /// Does not extend; the automorphism group is `H`.
    None,
    /// Extends to an inner automorphism; the automorphism group is an
    /// extension of `C₂` by `H` containing an involution centralizing `H`.
    Inner,
    /// Extends only to an outer automorphism; the automorphism group is
    /// `C₂ ⋉ H` with `C₂` acting by that outer automorphism.
    Outer,
}

impl InvolutionKind {
    pub fn aut_type(self) -> AutType {
        match self {
            InvolutionKind::Inner => AutType::ExtendedByInvolution,
            InvolutionKind::None | InvolutionKind::Outer => AutType::GaloisOnly,
        }
    }
}

/// Order of the commutator `a b a⁻¹ b⁻¹`.
pub fn ramification_index(group: &FiniteGroup, m: Monodromy) -> u32 {
    group.element_order(group.commutator(m.a, m.b))
}

/// Genus `1 + d(r−1)/(2r)` of a normal origami of degree `d` and
/// ramification index `r`.
pub fn origami_genus(degree: u64, ramification: u64) -> Result<u64, CurveError> {
    let err = CurveError::NonIntegralGenus { degree, ramification };
    if degree == 0 || ramification == 0 || !degree.is_multiple_of(ramification) {
        return Err(err);
    }
    let num = degree * (ramification - 1);
    if !num.is_multiple_of(2 * ramification) {
        return Err(err);
    }
    Ok(1 + num / (2 * ramification))
}

pub fn involution_kind(group: &FiniteGroup, m: Monodromy) -> Result<InvolutionKind, CurveError> {
    let (ia, ib) = (group.inv(m.a), group.inv(m.b));
    let ext = PairExtender::new(group, m.a, m.b)?;
    if !ext.extends(ia, ib) {
        return Ok(InvolutionKind::None);
    }
    let inner = (0..group.order() as ElementId).any(|h| group.conj(h, m.a) == ia && group.conj(h, m.b) == ib);
    Ok(if inner { InvolutionKind::Inner } else { InvolutionKind::Outer })
}

pub fn aut_type(group: &FiniteGroup, m: Monodromy) -> Result<AutType, CurveError> {
    Ok(involution_kind(group, m)?.aut_type())
}

/// Sort key of a pair: element orders first, then ids.
fn pair_key(group: &FiniteGroup, (a, b): (ElementId, ElementId)) -> (u32, ElementId, u32, ElementId) {
    (group.element_order(a), a, group.element_order(b), b)
}

/// One origami curve with its canonical representative and invariants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrigamiCurve {
    pub representative: Monodromy,
    /// Number of generating pairs on the curve.
    pub orbit_size: usize,
    /// Number of phase-1 classes merged into this curve.
    pub phase1_classes: usize,
    pub degree: u64,
    pub ramification: u32,
    pub genus: u64,
    pub involution: InvolutionKind,
    pub aut_type: AutType,
}

impl OrigamiCurve {
    /// Unramified curves (`r = 1`) cover a torus by a torus.
    pub fn is_trivial(&self) -> bool {
        self.ramification == 1
    }

    pub fn automorphism_group_order(&self) -> u64 {
        match self.involution {
            InvolutionKind::None => self.degree,
            _ => 2 * self.degree,
        }
    }
}

const UNVISITED: u32 = u32::MAX;
const NOT_GENERATING: u32 = u32::MAX - 1;

/// Full result of an enumeration, including the curve of every pair.
#[derive(Clone, Debug)]
pub struct CurveEnumeration {
    order: usize,
    /// Curve index of every pair `a·|G| + b`, or a sentinel for non-generating pairs.
    assignment: Vec<u32>,
    curves: Vec<OrigamiCurve>,
}

impl CurveEnumeration {
    pub fn curves(&self) -> &[OrigamiCurve] {
        &self.curves
    }

    pub fn into_curves(self) -> Vec<OrigamiCurve> {
        self.curves
    }

    /// Index of the curve containing `(a, b)`, or `None` if the pair does not generate.
    pub fn curve_of(&self, a: ElementId, b: ElementId) -> Option<usize> {
        let idx = a as usize * self.order + b as usize;
        match self.assignment.get(idx) {
            Some(&c) if c < NOT_GENERATING => Some(c as usize),
            _ => None,
        }
    }

    /// Every generating pair on curve `index`, in id order.
    pub fn members(&self, index: usize) -> impl Iterator<Item = (ElementId, ElementId)> + '_ {
        let n = self.order;
        self.assignment
            .iter()
            .enumerate()
            .filter(move |(_, &c)| c as usize == index)
            .map(move |(i, _)| ((i / n) as ElementId, (i % n) as ElementId))
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut y = x;
        while self.parent[y] != r {
            let next = self.parent[y];
            self.parent[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

struct Phase1Class {
    rep: (ElementId, ElementId),
    size: usize,
}

/// Canonical conjugacy-class representative (smallest id) of every element.
fn conjugacy_minima(group: &FiniteGroup) -> Vec<ElementId> {
    let n = group.order();
    let mut rep = vec![UNVISITED; n];
    for x in 0..n as ElementId {
        if rep[x as usize] != UNVISITED {
            continue;
        }
        rep[x as usize] = x;
        let mut stack = vec![x];
        while let Some(y) = stack.pop() {
            for &g in group.generators() {
                let z = group.conj(g, y);
                if rep[z as usize] == UNVISITED {
                    rep[z as usize] = x;
                    stack.push(z);
                }
            }
        }
    }
    rep
}

impl CurveEnumeration {
    pub fn run(group: &FiniteGroup) -> Result<Self, CurveError> {
        Self::run_with_cap(group, DEFAULT_ORDER_CAP)
    }

    pub fn run_with_cap(group: &FiniteGroup, cap: usize) -> Result<Self, CurveError> {
        let n = group.order();
        if n > cap {
            return Err(CurveError::TooLarge { order: n, cap });
        }
        let (assignment, classes) = phase1(group)?;
        let mut uf = UnionFind::new(classes.len());
        phase2(group, &assignment, &classes, &mut uf)?;

        // Group phase-1 classes by root; roots are the smallest class index.
        let mut members: Vec<Vec<usize>> = vec![Vec::new(); classes.len()];
        for c in 0..classes.len() {
            let r = uf.find(c);
            members[r].push(c);
        }
        let mut curves = Vec::new();
        let mut root_curve: Vec<(usize, OrigamiCurve)> = Vec::new();
        for (root, list) in members.iter().enumerate().filter(|(_, l)| !l.is_empty()) {
            let rep = list.iter().map(|&c| classes[c].rep).min_by_key(|&p| pair_key(group, p)).expect("non-empty");
            let m = Monodromy { a: rep.0, b: rep.1 };
            let ramification = ramification_index(group, m);
            let involution = involution_kind(group, m)?;
            for &c in list {
                let (a, b) = classes[c].rep;
                let other = Monodromy { a, b };
                if involution_kind(group, other)? != involution {
                    return Err(CurveError::InconsistentInvariant { invariant: "aut_type", first: rep, second: (a, b) });
                }
            }
            let degree = n as u64;
            let curve = OrigamiCurve {
                representative: m,
                orbit_size: list.iter().map(|&c| classes[c].size).sum(),
                phase1_classes: list.len(),
                degree,
                ramification,
                genus: origami_genus(degree, ramification as u64)?,
                involution,
                aut_type: involution.aut_type(),
            };
            root_curve.push((root, curve));
        }
        root_curve.sort_by_key(|(_, c)| pair_key(group, c.representative.pair()));
        let mut curve_of_root = vec![0u32; classes.len()];
        for (k, (root, curve)) in root_curve.into_iter().enumerate() {
            curve_of_root[root] = k as u32;
            curves.push(curve);
        }
        let class_curve: Vec<u32> = (0..classes.len()).map(|c| curve_of_root[uf.find(c)]).collect();
        let assignment = assignment
            .into_iter()
            .map(|c| if c < NOT_GENERATING { class_curve[c as usize] } else { c })
            .collect();
        Ok(CurveEnumeration { order: n, assignment, curves })
    }
}

/// Enumerates all origami curves of normal origamis with Galois group `group`,
/// sorted by canonical representative. Empty if the group is not 2-generated.
pub fn enumerate_curves(group: &FiniteGroup) -> Result<Vec<OrigamiCurve>, CurveError> {
    Ok(CurveEnumeration::run(group)?.into_curves())
}

fn phase1(group: &FiniteGroup) -> Result<(Vec<u32>, Vec<Phase1Class>), CurveError> {
    let n = group.order();
    let idx = |a: ElementId, b: ElementId| a as usize * n + b as usize;
    let mut assignment = vec![UNVISITED; n * n];
    let mut classes = Vec::new();
    let mut queue = VecDeque::new();
    for a in 0..n as ElementId {
        for b in 0..n as ElementId {
            if assignment[idx(a, b)] != UNVISITED {
                continue;
            }
            if !group.generates(a, b) {
                assignment[idx(a, b)] = NOT_GENERATING;
                continue;
            }
            let cid = classes.len() as u32;
            let ram = group.element_order(group.commutator(a, b));
            let mut best = (a, b);
            let mut size = 0;
            assignment[idx(a, b)] = cid;
            queue.push_back((a, b));
            while let Some((x, y)) = queue.pop_front() {
                size += 1;
                if pair_key(group, (x, y)) < pair_key(group, best) {
                    best = (x, y);
                }
                if group.element_order(group.commutator(x, y)) != ram {
                    return Err(CurveError::InconsistentInvariant { invariant: "ramification", first: (a, b), second: (x, y) });
                }
                let moves = [(y, x), (group.inv(x), y), (group.mul(x, y), y)];
                let conjugates = group.generators().iter().map(|&g| (group.conj(g, x), group.conj(g, y)));
                for (u, v) in moves.into_iter().chain(conjugates) {
                    let slot = &mut assignment[idx(u, v)];
                    if *slot == UNVISITED {
                        *slot = cid;
                        queue.push_back((u, v));
                    }
                }
            }
            classes.push(Phase1Class { rep: best, size });
        }
    }
    Ok((assignment, classes))
}

/// Merges phase-1 classes related by an automorphism of the group.
///
/// For a class with representative `(a, b)`, every automorphism `ψ` can be
/// followed by an inner automorphism moving `ψ(a)` to the smallest element
/// of its conjugacy class. Since phase-1 classes are closed under
/// conjugation, testing the targets `(k, b′)` with `k` a conjugacy-class
/// minimum finds every class in the automorphism orbit.
fn phase2(group: &FiniteGroup, assignment: &[u32], classes: &[Phase1Class], uf: &mut UnionFind) -> Result<(), CurveError> {
    let n = group.order();
    let conj_min = conjugacy_minima(group);
    let mut class_sizes = vec![0usize; n];
    for &r in &conj_min {
        class_sizes[r as usize] += 1;
    }
    let size_of = |x: ElementId| class_sizes[conj_min[x as usize] as usize];
    for (c, class) in classes.iter().enumerate() {
        if uf.find(c) != c {
            continue;
        }
        let (a, b) = class.rep;
        let ext = PairExtender::new(group, a, b)?;
        let (oa, ob, oab) = (group.element_order(a), group.element_order(b), group.element_order(group.mul(a, b)));
        let ks: Vec<ElementId> = (0..n as ElementId)
            .filter(|&k| conj_min[k as usize] == k && group.element_order(k) == oa && size_of(k) == size_of(a))
            .collect();
        for &k in &ks {
            for bp in 0..n as ElementId {
                let target = assignment[k as usize * n + bp as usize];
                if target >= NOT_GENERATING {
                    continue;
                }
                if group.element_order(bp) != ob || group.element_order(group.mul(k, bp)) != oab {
                    continue;
                }
                if uf.find(target as usize) == uf.find(c) {
                    continue;
                }
                if ext.extends(k, bp) {
                    uf.union(c, target as usize);
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, Element, GroupSpec, Permutation, ProjMatrix};

    fn perm(g: &FiniteGroup, cycles: &[&[u32]]) -> ElementId {
        let cycles: Vec<Vec<u32>> = cycles.iter().map(|c| c.to_vec()).collect();
        let deg = match g.element(0) {
            Element::Perm(p) => p.degree(),
            _ => panic!("not a permutation group"),
        };
        g.lookup(&Element::Perm(Permutation::from_cycles(deg, &cycles).unwrap())).unwrap()
    }

    fn mat(g: &FiniteGroup, p: u32, e: [i64; 4]) -> ElementId {
        g.lookup(&Element::Matrix(ProjMatrix::new(p, e).unwrap())).unwrap()
    }

    #[test]
    fn genus_formula() {
        assert_eq!(origami_genus(17, 1).unwrap(), 1);
        assert_eq!(origami_genus(12, 2).unwrap(), 4);
        for n in 2..20 {
            assert_eq!(origami_genus(2 * n, n).unwrap(), n);
        }
        assert!(origami_genus(12, 5).is_err());
        // 3 | 6 but 6·2/6 = 2 is fine; 2 | 2 but 2·1/4 is not integral
        assert_eq!(origami_genus(6, 3).unwrap(), 3);
        assert!(origami_genus(2, 2).is_err());
    }

    #[test]
    fn a5_ramification_of_known_pairs() {
        let g = build_group(&GroupSpec::Alternating(5)).unwrap();
        let f1 = Monodromy::new(&g, perm(&g, &[&[1, 5, 3, 4, 2]]), perm(&g, &[&[1, 3, 2, 4, 5]])).unwrap();
        let f2 = Monodromy::new(&g, perm(&g, &[&[1, 5, 2, 4, 3]]), perm(&g, &[&[2, 3], &[4, 5]])).unwrap();
        assert_eq!(ramification_index(&g, f1), 5);
        assert_eq!(ramification_index(&g, f2), 3);
    }

    #[test]
    fn abelian_groups_are_unramified() {
        for spec in [GroupSpec::Cyclic(6), GroupSpec::product(GroupSpec::Cyclic(2), GroupSpec::Cyclic(4))] {
            let g = build_group(&spec).unwrap();
            for c in enumerate_curves(&g).unwrap() {
                assert_eq!(c.ramification, 1);
                assert!(c.is_trivial());
                assert_eq!(c.genus, 1);
            }
        }
    }

    #[test]
    fn klein_group_has_one_curve() {
        let g = build_group(&GroupSpec::product(GroupSpec::Cyclic(2), GroupSpec::Cyclic(2))).unwrap();
        let curves = enumerate_curves(&g).unwrap();
        assert_eq!(curves.len(), 1);
        assert_eq!(curves[0].ramification, 1);
        assert_eq!(curves[0].orbit_size, 6);
        assert_eq!(curves[0].aut_type, AutType::ExtendedByInvolution);
    }

    #[test]
    fn trivial_group() {
        let g = build_group(&GroupSpec::Cyclic(1)).unwrap();
        let curves = enumerate_curves(&g).unwrap();
        assert_eq!(curves.len(), 1);
        assert_eq!(curves[0].representative, Monodromy { a: 0, b: 0 });
    }

    #[test]
    fn not_two_generated_gives_no_curves() {
        let g = build_group(&GroupSpec::product(
            GroupSpec::product(GroupSpec::Cyclic(2), GroupSpec::Cyclic(2)),
            GroupSpec::Cyclic(2),
        ))
        .unwrap();
        assert!(enumerate_curves(&g).unwrap().is_empty());
    }

    #[test]
    fn a5_has_two_curves() {
        let g = build_group(&GroupSpec::Alternating(5)).unwrap();
        let e = CurveEnumeration::run(&g).unwrap();
        let mut rams: Vec<u32> = e.curves().iter().map(|c| c.ramification).collect();
        rams.sort();
        assert_eq!(rams, vec![3, 5]);
        let f1 = e.curve_of(perm(&g, &[&[1, 5, 3, 4, 2]]), perm(&g, &[&[1, 3, 2, 4, 5]])).unwrap();
        let f2 = e.curve_of(perm(&g, &[&[1, 5, 2, 4, 3]]), perm(&g, &[&[2, 3], &[4, 5]])).unwrap();
        assert_ne!(f1, f2);
        let total: usize = e.curves().iter().map(|c| c.orbit_size).sum();
        assert_eq!(total, (0..60).flat_map(|a| (0..60).map(move |b| (a, b))).filter(|&(a, b)| g.generates(a, b)).count());
    }

    #[test]
    fn canonical_representative_is_minimal() {
        let g = build_group(&GroupSpec::Symmetric(4)).unwrap();
        let e = CurveEnumeration::run(&g).unwrap();
        for (k, c) in e.curves().iter().enumerate() {
            let min = e.members(k).min_by_key(|&p| pair_key(&g, p)).unwrap();
            assert_eq!(c.representative.pair(), min);
            assert_eq!(e.members(k).count(), c.orbit_size);
        }
    }

    #[test]
    fn psl2_7_known_pairs() {
        let g = build_group(&GroupSpec::Psl2(7)).unwrap();
        let s1 = mat(&g, 7, [1, 2, 5, 4]);
        let t1 = mat(&g, 7, [6, 0, 2, 6]);
        let t2 = mat(&g, 7, [0, 6, 1, 6]);
        let f1 = Monodromy::new(&g, s1, t1).unwrap();
        let f2 = Monodromy::new(&g, s1, t2).unwrap();
        assert_eq!(ramification_index(&g, f1), 4);
        assert_eq!(ramification_index(&g, f2), 4);
    }

    #[test]
    fn involution_kinds() {
        let c3 = build_group(&GroupSpec::Cyclic(3)).unwrap();
        let m = Monodromy::new(&c3, 1, 0).unwrap();
        assert_eq!(involution_kind(&c3, m).unwrap(), InvolutionKind::Outer);
        let s3 = build_group(&GroupSpec::Symmetric(3)).unwrap();
        for c in enumerate_curves(&s3).unwrap() {
            assert_ne!(c.involution, InvolutionKind::None);
        }
    }
}
