//! Exact p-adic valuations of rationals and the hyperelliptic pairing check.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::PadicError;
use crate::group::is_prime;

fn int_valuation(n: &BigInt, p: &BigInt) -> i64 {
    let mut n = n.abs();
    let mut v = 0;
    while (&n % p).is_zero() {
        n /= p;
        v += 1;
    }
    v
}

/// Exponent of `p` in the nonzero rational `x`.
pub fn pval(x: &BigRational, p: u64) -> Result<i64, PadicError> {
    if x.is_zero() {
        return Err(PadicError::ZeroValuation);
    }
    if !is_prime(p) {
        return Err(PadicError::NotPrime(p));
    }
    let p = BigInt::from(p);
    Ok(int_valuation(x.numer(), &p) - int_valuation(x.denom(), &p))
}

/// `|x|_p = p^exponent`, kept exact.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PAdicAbs {
    pub p: u64,
    pub exponent: i64,
}

impl PAdicAbs {
    pub fn one(p: u64) -> Self {
        PAdicAbs { p, exponent: 0 }
    }
}

impl PartialOrd for PAdicAbs {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        (self.p == other.p).then(|| self.exponent.cmp(&other.exponent))
    }
}

impl fmt::Display for PAdicAbs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.p, self.exponent)
    }
}

/// A nonzero rational viewed in `Q_p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPAdic {
    value: BigRational,
    p: u64,
    valuation: i64,
}

impl RationalPAdic {
    pub fn new(value: BigRational, p: u64) -> Result<Self, PadicError> {
        let valuation = pval(&value, p)?;
        Ok(RationalPAdic { value, p, valuation })
    }

    pub fn value(&self) -> &BigRational {
        &self.value
    }

    pub fn valuation(&self) -> i64 {
        self.valuation
    }

    pub fn abs(&self) -> PAdicAbs {
        PAdicAbs { p: self.p, exponent: -self.valuation }
    }
}

/// Parses `n` or `n/d`.
pub fn parse_rational(text: &str) -> Result<BigRational, PadicError> {
    let bad = || PadicError::BadRational(text.to_string());
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairingLine {
    pub a: String,
    pub b: String,
    /// The quantity whose absolute value is measured.
    pub measured: String,
    pub abs: PAdicAbs,
    pub expected: PAdicAbs,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchPairing {
    pub p: u64,
    pub q: String,
    pub lambda: String,
    pub branch_points: Vec<String>,
    pub abs_q: PAdicAbs,
    pub abs_inv_q: PAdicAbs,
    pub lines: Vec<PairingLine>,
    pub passed: bool,
}

/// Checks the pairing of the branch points `±1, ±λ, ±λ/(λ+1)` with
/// `λ = q − 1`: `|a₁−b₁| = |a₂−b₂| = |q| < 1` and `|a₃| = |b₃| = |1/q| > 1`.
pub fn mumford_pairing_check(p: u64, q: &BigRational) -> Result<BranchPairing, PadicError> {
    if !is_prime(p) || p <= 2 {
        return Err(PadicError::PairingPrime(p));
    }
    let one = BigRational::one();
    let lambda = q - &one;
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    let two = BigRational::from_integer(BigInt::from(2));
    for bad in [BigRational::zero(), one.clone(), -one.clone(), -half, -two] {
        if lambda == bad {
            return Err(PadicError::ExcludedParameter { q: q.to_string(), lambda: lambda.to_string() });
        }
    }
    if pval(q, p)? <= 0 {
        return Err(PadicError::NotSmall { q: q.to_string(), p });
    }
    let abs = |x: &BigRational| RationalPAdic::new(x.clone(), p).map(|r| r.abs());
    let abs_q = abs(q)?;
    let inv_q = q.recip();
    let abs_inv_q = abs(&inv_q)?;
    let a1 = one.clone();
    let b1 = -&lambda;
    let a2 = -one.clone();
    let b2 = lambda.clone();
    let a3 = &lambda / (&lambda + &one);
    let b3 = -&a3;
    let mut lines = Vec::new();
    for (a, b) in [(&a1, &b1), (&a2, &b2)] {
        let d = a - b;
        let v = abs(&d)?;
        lines.push(PairingLine {
            a: a.to_string(),
            b: b.to_string(),
            measured: format!("a - b = {d}"),
            abs: v,
            expected: abs_q,
            holds: v == abs_q && abs_q < PAdicAbs::one(p),
        });
    }
    for x in [&a3, &b3] {
        let v = abs(x)?;
        lines.push(PairingLine {
            a: a3.to_string(),
            b: b3.to_string(),
            measured: format!("{x}"),
            abs: v,
            expected: abs_inv_q,
            holds: v == abs_inv_q && abs_inv_q > PAdicAbs::one(p),
        });
    }
    let passed = lines.iter().all(|l| l.holds);
    let branch_points = [&a1, &a2, &b2, &b1, &a3, &b3].iter().map(|x| x.to_string()).collect();
    Ok(BranchPairing { p, q: q.to_string(), lambda: lambda.to_string(), branch_points, abs_q, abs_inv_q, lines, passed })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn valuations() {
        assert_eq!(pval(&r(9, 2), 3).unwrap(), 2);
        assert_eq!(pval(&r(1, 3), 3).unwrap(), -1);
        assert_eq!(pval(&r(660, 1), 11).unwrap(), 1);
        assert_eq!(pval(&r(-50, 7), 5).unwrap(), 2);
        assert!(matches!(pval(&r(0, 1), 3), Err(PadicError::ZeroValuation)));
        assert!(pval(&r(1, 1), 4).is_err());
    }

    #[test]
    fn pairing_examples() {
        let rep = mumford_pairing_check(3, &r(3, 1)).unwrap();
        assert!(rep.passed);
        assert_eq!(rep.abs_q, PAdicAbs { p: 3, exponent: -1 });
        assert_eq!(rep.abs_inv_q, PAdicAbs { p: 3, exponent: 1 });
        let rep = mumford_pairing_check(5, &r(25, 1)).unwrap();
        assert!(rep.passed);
        assert_eq!(rep.abs_q, PAdicAbs { p: 5, exponent: -2 });
        assert!(matches!(mumford_pairing_check(3, &r(1, 1)), Err(PadicError::ExcludedParameter { .. })));
        assert!(matches!(mumford_pairing_check(3, &r(2, 1)), Err(PadicError::ExcludedParameter { .. })));
        assert!(matches!(mumford_pairing_check(3, &r(1, 2)), Err(PadicError::ExcludedParameter { .. })));
        assert!(matches!(mumford_pairing_check(3, &r(5, 1)), Err(PadicError::NotSmall { .. })));
        assert!(matches!(mumford_pairing_check(2, &r(2, 1)), Err(PadicError::PairingPrime(2))));
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational(" 3/9 ").unwrap(), r(1, 3));
        assert_eq!(parse_rational("-4").unwrap(), r(-4, 1));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
