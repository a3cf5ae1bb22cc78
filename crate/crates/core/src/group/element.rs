use std::fmt;

use super::perm::Permutation;
use super::projective::ProjMatrix;

/// Concrete realization of a group element, used for naming and for
/// resolving element literals back to ids.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Element {
    Residue { value: u32, modulus: u32 },
    /// Klein four-group element as two bits.
    Klein(u8),
    Perm(Permutation),
    Matrix(ProjMatrix),
    /// Element of a direct product, one entry per (flattened) factor.
    Tuple(Vec<Element>),
}

/// Shape of one direct factor, enough to parse a literal for it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorKind {
    Residue(u32),
    Klein,
    Perm(usize),
    Matrix(u32),
}

pub(crate) const KLEIN_NAMES: [&str; 4] = ["e", "a", "b", "ab"];

impl Element {
    /// Entries of a product element, or the element itself as a single factor.
    pub fn flatten(&self) -> Vec<Element> {
        match self {
            Element::Tuple(items) => items.clone(),
            other => vec![other.clone()],
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Residue { value, .. } => write!(f, "{value}"),
            Element::Klein(bits) => write!(f, "{}", KLEIN_NAMES[*bits as usize & 3]),
            Element::Perm(p) => write!(f, "{p}"),
            Element::Matrix(m) => write!(f, "{m}"),
            Element::Tuple(items) => {
                write!(f, "(")?;
                for (k, item) in items.iter().enumerate() {
                    if k > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{item}")?;
                }
                write!(f, ")")
            }
        }
    }
}
