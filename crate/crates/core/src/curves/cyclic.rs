//! Normalization of epimorphisms `F₂ → Z/mZ` to `x ↦ 1, y ↦ 0`.

use serde::{Deserialize, Serialize};

use super::CurveError;

/// Integer 2×2 matrix `[[a, b], [c, d]]` with determinant 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct UnimodularMatrix {
    entries: [i128; 4],
}

impl UnimodularMatrix {
    pub fn new(entries: [i128; 4]) -> Option<Self> {
        let m = UnimodularMatrix { entries };
        (m.determinant() == 1).then_some(m)
    }

    pub fn identity() -> Self {
        UnimodularMatrix { entries: [1, 0, 0, 1] }
    }

    pub fn entries(&self) -> [i128; 4] {
        self.entries
    }

    pub fn determinant(&self) -> i128 {
        let [a, b, c, d] = self.entries;
        a * d - b * c
    }

    /// Images of `x` and `y` under `f ∘ φ`, where `φ` lifts this matrix to
    /// `Aut(F₂)` and `f(x) = cx`, `f(y) = cy` in `Z/mZ`. The columns of the
    /// matrix are the abelianized images of `x` and `y`.
    pub fn pull_back(&self, modulus: u64, cx: i64, cy: i64) -> (u64, u64) {
        let [a, b, c, d] = self.entries;
        let m = modulus as i128;
        let (cx, cy) = (cx as i128, cy as i128);
        let fx = (a * cx + c * cy).rem_euclid(m);
        let fy = (b * cx + d * cy).rem_euclid(m);
        (fx as u64, fy as u64)
    }
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `(g, s, t)` with `s·a + t·b = g = gcd(a, b)`.
fn extended_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1, 0);
    let (mut t0, mut t1) = (0, 1);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

fn prime_factors(mut n: i128) -> Vec<i128> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Finds `A ∈ SL₂(Z)` whose lift `φ` satisfies `f∘φ(x) = 1`, `f∘φ(y) = 0`
/// for the epimorphism `f(x) = cx, f(y) = cy` onto `Z/mZ`.
///
/// Representatives are taken in `1..=m` for `cx` and `0..m` for `cy`. If
/// they are not coprime, `cy` is shifted by `m` times the product of the
/// primes of `cx` not dividing `cy`, which makes them coprime. Then
/// `a·cx + b·cy = 1` and `A = [[a, −cy], [b, cx]]`.
pub fn normalize_cyclic(modulus: u64, cx: i64, cy: i64) -> Result<UnimodularMatrix, CurveError> {
    let m = modulus as i128;
    if m < 1 || gcd(gcd(cx as i128, cy as i128), m) != 1 {
        return Err(CurveError::NotCyclicGenerating { modulus, cx, cy });
    }
    let mut x = (cx as i128).rem_euclid(m);
    if x == 0 {
        x = m;
    }
    let mut y = (cy as i128).rem_euclid(m);
    if gcd(x, y) != 1 {
        let shift: i128 = prime_factors(x).into_iter().filter(|p| y % p != 0).product();
        y += m * shift;
    }
    let (g, a, b) = extended_gcd(x, y);
    debug_assert_eq!(g, 1);
    let matrix = UnimodularMatrix::new([a, -y, b, x]).expect("a·x + b·y = 1");
    Ok(matrix)
}
