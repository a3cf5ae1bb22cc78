//! Permutations of `{1, ..., n}` stored as 0-based image vectors.

use std::fmt;

/// A permutation of `n` points. Products compose like functions:
/// `(g * h)(i) = g(h(i))`, so `h` is applied first.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation { images: (0..degree as u32).collect() }
    }

    /// Builds a permutation from 0-based images, returning `None` unless the
    /// vector is a bijection of `0..len`.
    pub fn from_images(images: Vec<u32>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return None;
            }
            seen[i] = true;
        }
        Some(Permutation { images })
    }

    /// Builds a permutation from disjoint-or-not cycles of 1-based points.
    /// Cycles are multiplied right to left, matching [`Permutation::compose`].
    pub fn from_cycles(degree: usize, cycles: &[Vec<u32>]) -> Option<Self> {
        let mut result = Permutation::identity(degree);
        for cycle in cycles.iter().rev() {
            if cycle.iter().any(|&p| p == 0 || p as usize > degree) {
                return None;
            }
            let mut seen = std::collections::HashSet::new();
            if !cycle.iter().all(|p| seen.insert(*p)) {
                return None;
            }
            let mut c = Permutation::identity(degree);
            for (k, &p) in cycle.iter().enumerate() {
                let q = cycle[(k + 1) % cycle.len()];
                c.images[(p - 1) as usize] = q - 1;
            }
            result = c.compose(&result);
        }
        Some(result)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// `self ∘ other`: applies `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&i| self.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u32;
        }
        Permutation { images }
    }

    /// Extends to a larger degree by fixing the new points.
    pub fn padded(&self, degree: usize) -> Permutation {
        let mut images = self.images.clone();
        images.extend(self.images.len() as u32..degree as u32);
        Permutation { images }
    }

    pub fn is_even(&self) -> bool {
        let cycles = self.cycles();
        cycles.iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }

    /// Nontrivial cycles with 1-based points, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i as u32 + 1);
                i = self.images[i] as usize;
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (k, p) in cycle.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(degree: usize, cycles: &[&[u32]]) -> Permutation {
        let cycles: Vec<Vec<u32>> = cycles.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(degree, &cycles).unwrap()
    }

    #[test]
    fn products_compose_right_to_left() {
        // (1 2 3)(2 3 4) = (1 2)(3 4) and (1 2 3)(2 4 3) = (1 2 4)
        let p = cyc(4, &[&[1, 2, 3]]).compose(&cyc(4, &[&[2, 3, 4]]));
        assert_eq!(p, cyc(4, &[&[1, 2], &[3, 4]]));
        let q = cyc(4, &[&[1, 2, 3]]).compose(&cyc(4, &[&[2, 4, 3]]));
        assert_eq!(q, cyc(4, &[&[1, 2, 4]]));
    }

    #[test]
    fn display_round_trips_cycles() {
        let p = cyc(5, &[&[2, 3], &[4, 5]]);
        assert_eq!(p.to_string(), "(2 3)(4 5)");
        assert_eq!(Permutation::identity(3).to_string(), "()");
        assert_eq!(cyc(5, &[&[5, 1, 3]]).to_string(), "(1 3 5)");
    }

    #[test]
    fn rejects_bad_cycles() {
        assert!(Permutation::from_cycles(3, &[vec![1, 4]]).is_none());
        assert!(Permutation::from_cycles(3, &[vec![1, 2, 1]]).is_none());
        assert!(Permutation::from_images(vec![0, 0, 1]).is_none());
    }

    #[test]
    fn parity() {
        assert!(cyc(5, &[&[1, 2, 3]]).is_even());
        assert!(!cyc(5, &[&[1, 2]]).is_even());
        assert!(cyc(5, &[&[1, 2], &[3, 4]]).is_even());
    }
}
