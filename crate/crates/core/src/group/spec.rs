use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::perm::Permutation;

/// Description of a finite group, closed under binary direct products.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    Cyclic(u32),
    Dihedral(u32),
    Alternating(u32),
    Symmetric(u32),
    Psl2(u32),
    PermGens(Vec<Permutation>),
    /// Subgroup of `PGL₂(F_p)` generated by raw matrices `[a, b, c, d]`.
    ProjMatGens { p: u32, matrices: Vec<[i64; 4]> },
    DirectProduct(Box<GroupSpec>, Box<GroupSpec>),
}

impl GroupSpec {
    pub fn product(a: GroupSpec, b: GroupSpec) -> GroupSpec {
        GroupSpec::DirectProduct(Box::new(a), Box::new(b))
    }

    /// Direct factors from left to right, with nested products flattened.
    pub fn factors(&self) -> Vec<&GroupSpec> {
        match self {
            GroupSpec::DirectProduct(a, b) => {
                let mut f = a.factors();
                f.extend(b.factors());
                f
            }
            other => vec![other],
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "C{n}"),
            GroupSpec::Dihedral(n) => write!(f, "D{n}"),
            GroupSpec::Alternating(n) => write!(f, "A{n}"),
            GroupSpec::Symmetric(n) => write!(f, "S{n}"),
            GroupSpec::Psl2(p) => write!(f, "PSL2({p})"),
            GroupSpec::PermGens(gens) => {
                write!(f, "perm[")?;
                for (k, g) in gens.iter().enumerate() {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{g}")?;
                }
                write!(f, "]")
            }
            GroupSpec::ProjMatGens { p, matrices } => {
                write!(f, "proj({p})[")?;
                for (k, [a, b, c, d]) in matrices.iter().enumerate() {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "[[{a},{b}],[{c},{d}]]")?;
                }
                write!(f, "]")
            }
            GroupSpec::DirectProduct(a, b) => write!(f, "{a}x{b}"),
        }
    }
}

impl Serialize for GroupSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for GroupSpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        crate::cli::parse::parse_group_spec(&text).map_err(serde::de::Error::custom)
    }
}
