//! Brute-force oracles shared by the integration tests. Nothing here calls the
//! curve enumerator or the automorphism extender.

#![allow(dead_code)]

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use origami::group::{ElementId, FiniteGroup};

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.0[a.max(b)] = a.min(b);
        }
    }
}

fn generated(g: &FiniteGroup, a: ElementId, b: ElementId) -> bool {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([g.identity()]);
    seen[g.identity() as usize] = true;
    let mut count = 1;
    while let Some(x) = queue.pop_front() {
        for s in [a, b] {
            let y = g.mul(x, s);
            if !seen[y as usize] {
                seen[y as usize] = true;
                count += 1;
                queue.push_back(y);
            }
        }
    }
    count == n
}

/// Every automorphism of `g`, as image tables, found by mapping shortest
/// words in a fixed generating pair and checking the multiplication table.
pub fn all_automorphisms(g: &FiniteGroup) -> Vec<Vec<ElementId>> {
    let n = g.order();
    let ids = 0..n as ElementId;
    let Some((x, y)) = ids.clone().flat_map(|a| ids.clone().map(move |b| (a, b))).find(|&(a, b)| generated(g, a, b)) else {
        return vec![(0..n as ElementId).collect()];
    };
    // Spanning tree: parent element and the generator used to reach it.
    let mut parent: Vec<Option<(ElementId, usize)>> = vec![None; n];
    let mut order = vec![g.identity()];
    let mut seen = vec![false; n];
    seen[g.identity() as usize] = true;
    let mut i = 0;
    while i < order.len() {
        let e = order[i];
        for (k, s) in [x, y].into_iter().enumerate() {
            let f = g.mul(e, s);
            if !seen[f as usize] {
                seen[f as usize] = true;
                parent[f as usize] = Some((e, k));
                order.push(f);
            }
        }
        i += 1;
    }
    let mut out = Vec::new();
    for tx in 0..n as ElementId {
        if g.element_order(tx) != g.element_order(x) {
            continue;
        }
        for ty in 0..n as ElementId {
            if g.element_order(ty) != g.element_order(y) || !generated(g, tx, ty) {
                continue;
            }
            let mut img = vec![g.identity(); n];
            for &e in &order[1..] {
                let (p, k) = parent[e as usize].unwrap();
                img[e as usize] = g.mul(img[p as usize], [tx, ty][k]);
            }
            let hom = (0..n as ElementId).all(|a| (0..n as ElementId).all(|b| img[g.mul(a, b) as usize] == g.mul(img[a as usize], img[b as usize])));
            if hom {
                out.push(img);
            }
        }
    }
    out
}

/// Number of orbits of generating pairs under Nielsen moves and `Aut(g)`.
pub fn oracle_curve_count(g: &FiniteGroup) -> usize {
    let n = g.order();
    let idx = |a: ElementId, b: ElementId| a as usize * n + b as usize;
    let auts = all_automorphisms(g);
    let mut uf = UnionFind((0..n * n).collect());
    let mut pairs = Vec::new();
    for a in 0..n as ElementId {
        for b in 0..n as ElementId {
            if generated(g, a, b) {
                pairs.push((a, b));
            }
        }
    }
    for &(a, b) in &pairs {
        let here = idx(a, b);
        uf.union(here, idx(b, a));
        uf.union(here, idx(g.inv(a), b));
        uf.union(here, idx(g.mul(a, b), b));
        for phi in &auts {
            uf.union(here, idx(phi[a as usize], phi[b as usize]));
        }
    }
    let mut roots: Vec<usize> = pairs.iter().map(|&(a, b)| uf.find(idx(a, b))).collect();
    roots.sort_unstable();
    roots.dedup();
    roots.len()
}

/// Genus of a normal covering of a genus-one curve with one branch point of
/// index `r`, from `2g - 2 = d (r - 1) / r`. `None` if not integral.
pub fn riemann_hurwitz_genus(degree: u64, r: u64) -> Option<u64> {
    let twice = degree * (r - 1);
    if !twice.is_multiple_of(r) || !(twice / r).is_multiple_of(2) {
        return None;
    }
    Some(twice / r / 2 + 1)
}

/// Exponent of `p` by repeated division.
pub fn naive_pval(x: &BigRational, p: u64) -> i64 {
    assert!(!x.is_zero());
    let p = BigInt::from(p);
    let count = |mut v: BigInt| {
        v = v.abs();
        let mut k = 0;
        while (&v % &p).is_zero() {
            v /= &p;
            k += 1;
        }
        k
    };
    count(x.numer().clone()) - count(x.denom().clone())
}
