//! Extension of generator assignments `a ↦ a′, b ↦ b′` to automorphisms.
//!
//! Every element is written as a breadth-first word in the source pair; the
//! candidate map sends that word to the same word in the target pair. The
//! candidate is rejected as soon as it fails to commute with left
//! multiplication by a source generator, and a surviving candidate is
//! checked against the full product table before it is returned.

use super::{ElementId, FiniteGroup, GroupError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PairMap {
    pub source: (ElementId, ElementId),
    pub target: (ElementId, ElementId),
}

/// A group automorphism as a permutation of element ids.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Automorphism {
    images: Vec<ElementId>,
}

impl Automorphism {
    pub fn identity(order: usize) -> Self {
        Automorphism { images: (0..order as ElementId).collect() }
    }

    #[inline]
    pub fn apply(&self, g: ElementId) -> ElementId {
        self.images[g as usize]
    }

    pub fn images(&self) -> &[ElementId] {
        &self.images
    }

    pub fn inverse(&self) -> Automorphism {
        let mut images = vec![0; self.images.len()];
        for (g, &h) in self.images.iter().enumerate() {
            images[h as usize] = g as ElementId;
        }
        Automorphism { images }
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        Automorphism { images: other.images.iter().map(|&g| self.apply(g)).collect() }
    }

    /// Conjugation `x ↦ g x g⁻¹`.
    pub fn inner(group: &FiniteGroup, g: ElementId) -> Automorphism {
        Automorphism { images: (0..group.order() as ElementId).map(|x| group.conj(g, x)).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(g, &h)| g as ElementId == h)
    }

    /// Bijective and multiplicative on the whole table.
    pub fn verify(&self, group: &FiniteGroup) -> bool {
        let n = group.order();
        if self.images.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for &h in &self.images {
            if (h as usize) >= n || std::mem::replace(&mut seen[h as usize], true) {
                return false;
            }
        }
        (0..n as ElementId).all(|x| {
            let fx = self.apply(x);
            (0..n as ElementId).all(|y| self.apply(group.mul(x, y)) == group.mul(fx, self.apply(y)))
        })
    }
}

/// Word tree of a generating pair, reusable across many target pairs.
#[derive(Clone, Debug)]
pub struct PairExtender<'g> {
    group: &'g FiniteGroup,
    source: (ElementId, ElementId),
    /// `(element, parent, which)` in BFS order with `element = s_which · parent`.
    tree: Vec<(ElementId, ElementId, u8)>,
}

impl<'g> PairExtender<'g> {
    pub fn new(group: &'g FiniteGroup, a: ElementId, b: ElementId) -> Result<Self, GroupError> {
        for x in [a, b] {
            if !group.is_valid(x) {
                return Err(GroupError::InvalidElement(x));
            }
        }
        let n = group.order();
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut tree = Vec::with_capacity(n);
        let mut head = 0;
        let mut frontier = vec![0 as ElementId];
        while head < frontier.len() {
            let x = frontier[head];
            head += 1;
            for (which, s) in [a, b].into_iter().enumerate() {
                let y = group.mul(s, x);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    tree.push((y, x, which as u8));
                    frontier.push(y);
                }
            }
        }
        if frontier.len() != n {
            return Err(GroupError::NotGenerating(a, b));
        }
        Ok(PairExtender { group, source: (a, b), tree })
    }

    pub fn source(&self) -> (ElementId, ElementId) {
        self.source
    }

    /// Cheap test: builds the word map and checks it against left
    /// multiplication by both source generators. Passing this check already
    /// forces a homomorphism; bijectivity is checked too.
    fn candidate(&self, ta: ElementId, tb: ElementId) -> Option<Vec<ElementId>> {
        let g = self.group;
        let n = g.order();
        if !g.is_valid(ta) || !g.is_valid(tb) {
            return None;
        }
        let (a, b) = self.source;
        if g.element_order(a) != g.element_order(ta) || g.element_order(b) != g.element_order(tb) {
            return None;
        }
        if g.element_order(g.mul(a, b)) != g.element_order(g.mul(ta, tb)) {
            return None;
        }
        const UNSET: ElementId = ElementId::MAX;
        let mut images = vec![UNSET; n];
        images[0] = 0;
        let targets = [ta, tb];
        for &(y, x, which) in &self.tree {
            images[y as usize] = g.mul(targets[which as usize], images[x as usize]);
        }
        let sources = [a, b];
        for x in 0..n as ElementId {
            let fx = images[x as usize];
            for k in 0..2 {
                if images[g.mul(sources[k], x) as usize] != g.mul(targets[k], fx) {
                    return None;
                }
            }
        }
        let mut seen = vec![false; n];
        for &h in &images {
            if std::mem::replace(&mut seen[h as usize], true) {
                return None;
            }
        }
        Some(images)
    }

    /// Extends `source ↦ (ta, tb)` to an automorphism, if possible. The
    /// returned witness has been verified on the full product table.
    pub fn extend(&self, ta: ElementId, tb: ElementId) -> Option<Automorphism> {
        let images = self.candidate(ta, tb)?;
        let aut = Automorphism { images };
        assert!(aut.verify(self.group), "word map passed generator checks but failed the table");
        Some(aut)
    }

    /// Like [`PairExtender::extend`] but skips the quadratic table check.
    /// The generator check alone is a proof of multiplicativity.
    pub fn extends(&self, ta: ElementId, tb: ElementId) -> bool {
        self.candidate(ta, tb).is_some()
    }
}

/// Extends the pair map to an automorphism if one exists.
pub fn extend_pair_map(group: &FiniteGroup, map: &PairMap) -> Result<Option<Automorphism>, GroupError> {
    let (a, b) = map.source;
    let ext = PairExtender::new(group, a, b)?;
    Ok(ext.extend(map.target.0, map.target.1))
}
