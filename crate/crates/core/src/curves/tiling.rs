//! Square tiling of a normal origami: squares are group elements, the right
//! neighbour of `g` is `a·g` and the upper neighbour is `b·g`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::Monodromy;
use crate::group::{ElementId, FiniteGroup};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tiling {
    pub right: Vec<ElementId>,
    pub up: Vec<ElementId>,
}

impl Tiling {
    pub fn squares(&self) -> usize {
        self.right.len()
    }

    /// Squares reachable from square 0 through right and up gluings.
    pub fn is_connected(&self) -> bool {
        let n = self.squares();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut stack = vec![0usize];
        let mut count = 1;
        while let Some(s) = stack.pop() {
            for t in [self.right[s], self.up[s]] {
                if !std::mem::replace(&mut seen[t as usize], true) {
                    count += 1;
                    stack.push(t as usize);
                }
            }
        }
        count == n
    }

    pub fn to_dot(&self, group: &FiniteGroup) -> String {
        let mut out = String::from("digraph origami {\n");
        for g in 0..self.squares() {
            let _ = writeln!(out, "  {g} [label=\"{}\"];", group.name(g as ElementId).replace('"', "'"));
        }
        for g in 0..self.squares() {
            let _ = writeln!(out, "  {g} -> {} [label=\"r\", color=blue];", self.right[g]);
            let _ = writeln!(out, "  {g} -> {} [label=\"u\", color=red];", self.up[g]);
        }
        out.push_str("}\n");
        out
    }
}

pub fn square_tiling(group: &FiniteGroup, m: Monodromy) -> Tiling {
    let n = group.order() as ElementId;
    Tiling {
        right: (0..n).map(|g| group.mul(m.a, g)).collect(),
        up: (0..n).map(|g| group.mul(m.b, g)).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, GroupSpec};

    #[test]
    fn connected_iff_generating() {
        let g = build_group(&GroupSpec::Dihedral(4)).unwrap();
        for a in 0..8 {
            for b in 0..8 {
                let t = square_tiling(&g, Monodromy { a, b });
                assert_eq!(t.is_connected(), g.generates(a, b));
            }
        }
    }

    #[test]
    fn gluings_are_permutations() {
        let g = build_group(&GroupSpec::Alternating(4)).unwrap();
        let t = square_tiling(&g, Monodromy { a: g.generators()[0], b: g.generators()[1] });
        for map in [&t.right, &t.up] {
            let mut sorted = map.clone();
            sorted.sort();
            assert_eq!(sorted, (0..12).collect::<Vec<_>>());
        }
        assert!(t.to_dot(&g).starts_with("digraph"));
    }
}
