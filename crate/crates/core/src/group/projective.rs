//! 2×2 matrices over `F_p` modulo scalars, i.e. elements of `PGL₂(F_p)`.

use std::fmt;

/// A projective 2×2 matrix over `F_p`, stored in normal form: the first
/// nonzero entry in row-major order is 1. Two matrices that differ by a
/// nonzero scalar have the same normal form, so equality is projective.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct ProjMatrix {
    p: u32,
    entries: [u32; 4],
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

fn inv_mod(x: u32, p: u32) -> u32 {
    pow_mod(x as u64, p as u64 - 2, p as u64) as u32
}

impl ProjMatrix {
    /// Normalizes `[[a, b], [c, d]]` (entries reduced mod `p`). Returns `None`
    /// when the determinant vanishes mod `p`. `p` must be prime.
    pub fn new(p: u32, entries: [i64; 4]) -> Option<Self> {
        let m = p as i64;
        let e = entries.map(|x| x.rem_euclid(m) as u32);
        let det = (e[0] as u64 * e[3] as u64 + (p - e[1]) as u64 * e[2] as u64) % p as u64;
        if det == 0 {
            return None;
        }
        Some(Self::normalize(p, e))
    }

    fn normalize(p: u32, e: [u32; 4]) -> Self {
        let lead = *e.iter().find(|&&x| x != 0).expect("invertible matrix has a nonzero entry");
        let s = inv_mod(lead, p) as u64;
        ProjMatrix { p, entries: e.map(|x| (x as u64 * s % p as u64) as u32) }
    }

    pub fn identity(p: u32) -> Self {
        ProjMatrix { p, entries: [1, 0, 0, 1] }
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn entries(&self) -> [u32; 4] {
        self.entries
    }

    pub fn mul(&self, other: &ProjMatrix) -> ProjMatrix {
        debug_assert_eq!(self.p, other.p);
        let p = self.p as u64;
        let [a, b, c, d] = self.entries.map(u64::from);
        let [e, f, g, h] = other.entries.map(u64::from);
        let out = [
            ((a * e + b * g) % p) as u32,
            ((a * f + b * h) % p) as u32,
            ((c * e + d * g) % p) as u32,
            ((c * f + d * h) % p) as u32,
        ];
        Self::normalize(self.p, out)
    }

    /// Whether some scalar multiple has determinant 1, i.e. the class lies in `PSL₂(F_p)`.
    pub fn is_special(&self) -> bool {
        let p = self.p as u64;
        let [a, b, c, d] = self.entries.map(u64::from);
        let det = (a * d + (p - b) * c) % p;
        // det·λ² = 1 is solvable iff det is a square mod p
        p == 2 || pow_mod(det, (p - 1) / 2, p) == 1
    }
}

impl fmt::Display for ProjMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.entries;
        write!(f, "[[{a},{b}],[{c},{d}]]")
    }
}
