use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::GraphError;

/// Isomorphism type of a vertex, edge or end stabilizer.
///
/// Written as `1`, `C<n>`, `D<n>`, `A4`, `S4`, `A5` or `<name>#<order>`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum GroupLabel {
    Trivial,
    Cyclic(u64),
    /// Dihedral group of order `2n`.
    Dihedral(u32),
    A4,
    S4,
    A5,
    /// Any other finite group. Treated as cyclic iff its order is 1 or prime.
    Named { order: u64, display: String },
}

impl GroupLabel {
    pub fn cyclic(n: u64) -> GroupLabel {
        GroupLabel::Cyclic(n).normalized()
    }

    /// `C₁ → 1`, `D₁ → C₂`.
    pub fn normalized(self) -> GroupLabel {
        match self {
            GroupLabel::Cyclic(1) => GroupLabel::Trivial,
            GroupLabel::Dihedral(1) => GroupLabel::Cyclic(2),
            other => other,
        }
    }

    pub fn order(&self) -> u64 {
        match self {
            GroupLabel::Trivial => 1,
            GroupLabel::Cyclic(n) => *n,
            GroupLabel::Dihedral(n) => 2 * *n as u64,
            GroupLabel::A4 => 12,
            GroupLabel::S4 => 24,
            GroupLabel::A5 => 60,
            GroupLabel::Named { order, .. } => *order,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_cyclic(&self) -> bool {
        match self {
            GroupLabel::Trivial | GroupLabel::Cyclic(_) => true,
            GroupLabel::Dihedral(n) => *n == 1,
            GroupLabel::A4 | GroupLabel::S4 | GroupLabel::A5 => false,
            GroupLabel::Named { order, .. } => *order == 1 || crate::group::is_prime(*order),
        }
    }

    /// Order divides, and a non-cyclic group never sits inside a cyclic one.
    pub fn fits_into(&self, other: &GroupLabel) -> bool {
        other.order().is_multiple_of(self.order()) && (self.is_cyclic() || !other.is_cyclic())
    }

    /// Same order and same cyclicity; enough for the graphs handled here.
    pub fn isomorphic_to(&self, other: &GroupLabel) -> bool {
        self.order() == other.order() && self.is_cyclic() == other.is_cyclic()
    }
}

impl fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupLabel::Trivial => write!(f, "1"),
            GroupLabel::Cyclic(n) => write!(f, "C{n}"),
            GroupLabel::Dihedral(n) => write!(f, "D{n}"),
            GroupLabel::A4 => write!(f, "A4"),
            GroupLabel::S4 => write!(f, "S4"),
            GroupLabel::A5 => write!(f, "A5"),
            GroupLabel::Named { order, display } => write!(f, "{display}#{order}"),
        }
    }
}

impl FromStr for GroupLabel {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, GraphError> {
        let t = s.trim();
        let bad = || GraphError::InvalidLabel(s.to_string());
        let positive = |digits: &str| digits.parse::<u64>().ok().filter(|&n| n > 0).ok_or_else(bad);
        let label = match t {
            "1" | "Trivial" => GroupLabel::Trivial,
            "A4" => GroupLabel::A4,
            "S4" => GroupLabel::S4,
            "A5" => GroupLabel::A5,
            _ => {
                if let Some((name, order)) = t.rsplit_once('#') {
                    if name.is_empty() {
                        return Err(bad());
                    }
                    GroupLabel::Named { order: positive(order)?, display: name.to_string() }
                } else if let Some(n) = t.strip_prefix('C') {
                    GroupLabel::Cyclic(positive(n)?)
                } else if let Some(n) = t.strip_prefix('D') {
                    GroupLabel::Dihedral(u32::try_from(positive(n)?).map_err(|_| bad())?)
                } else {
                    return Err(bad());
                }
            }
        };
        Ok(label.normalized())
    }
}

impl TryFrom<String> for GroupLabel {
    type Error = GraphError;

    fn try_from(s: String) -> Result<Self, GraphError> {
        s.parse()
    }
}

impl From<GroupLabel> for String {
    fn from(l: GroupLabel) -> String {
        l.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization_and_orders() {
        assert_eq!(GroupLabel::cyclic(1), GroupLabel::Trivial);
        assert_eq!(GroupLabel::Dihedral(1).normalized(), GroupLabel::Cyclic(2));
        assert_eq!(GroupLabel::Dihedral(5).order(), 10);
        assert!(!GroupLabel::Dihedral(2).is_cyclic());
        assert!(GroupLabel::Named { order: 7, display: "X".into() }.is_cyclic());
        assert!(!GroupLabel::Named { order: 8, display: "Q8".into() }.is_cyclic());
    }

    #[test]
    fn parse_round_trip() {
        for s in ["1", "C7", "D5", "A4", "S4", "A5", "Q8#8"] {
            assert_eq!(s.parse::<GroupLabel>().unwrap().to_string(), s);
        }
        assert_eq!("C1".parse::<GroupLabel>().unwrap(), GroupLabel::Trivial);
        assert_eq!("D1".parse::<GroupLabel>().unwrap(), GroupLabel::Cyclic(2));
        for s in ["", "C0", "X", "#3", "D", "Q#0"] {
            assert!(s.parse::<GroupLabel>().is_err(), "{s}");
        }
    }

    #[test]
    fn inclusion() {
        assert!(GroupLabel::Cyclic(2).fits_into(&GroupLabel::Dihedral(5)));
        assert!(GroupLabel::Dihedral(5).fits_into(&GroupLabel::A5));
        assert!(!GroupLabel::Dihedral(3).fits_into(&GroupLabel::Cyclic(6)));
        assert!(!GroupLabel::Cyclic(7).fits_into(&GroupLabel::A5));
    }
}
