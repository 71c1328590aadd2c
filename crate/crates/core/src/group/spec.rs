use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// The finite groups acting on `sl2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupKind {
    Cyclic(u32),
    Dihedral(u32),
    A4,
    S4,
    A5,
}

impl GroupKind {
    /// Smallest conductor containing every root of unity the action needs.
    pub fn minimal_conductor(self) -> u32 {
        match self {
            GroupKind::Cyclic(n) | GroupKind::Dihedral(n) => n,
            GroupKind::A4 => 4,
            GroupKind::S4 => 8,
            GroupKind::A5 => 20,
        }
    }

    /// `true` for the groups whose image in `End(sl2)` is all of `M3`.
    pub fn is_epsilon(self) -> bool {
        matches!(self, GroupKind::A4 | GroupKind::S4 | GroupKind::A5)
    }

    /// Order of the generator `g` for cyclic and dihedral groups.
    pub fn cyclic_order(self) -> Option<u32> {
        match self {
            GroupKind::Cyclic(n) | GroupKind::Dihedral(n) => Some(n),
            _ => None,
        }
    }
}

/// A group together with the conductor `N` of the coefficient field
/// `Q(zeta_N)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupSpec {
    pub kind: GroupKind,
    pub conductor: u32,
}

impl GroupSpec {
    pub fn new(kind: GroupKind) -> Result<GroupSpec> {
        match kind {
            GroupKind::Cyclic(0) => {
                return Err(Error::InvalidGroup("Zn needs n >= 1".into()));
            }
            GroupKind::Dihedral(n) if n < 3 => {
                return Err(Error::InvalidGroup(format!("Dn needs n >= 3, got {n}")));
            }
            _ => {}
        }
        Ok(GroupSpec { kind, conductor: kind.minimal_conductor() })
    }

    pub fn cyclic(n: u32) -> Result<GroupSpec> {
        GroupSpec::new(GroupKind::Cyclic(n))
    }

    pub fn dihedral(n: u32) -> Result<GroupSpec> {
        GroupSpec::new(GroupKind::Dihedral(n))
    }

    /// The same group over a larger field `Q(zeta_m)`; `m` must be a
    /// multiple of the minimal conductor.
    pub fn with_conductor(self, m: u32) -> Result<GroupSpec> {
        let need = self.kind.minimal_conductor();
        if m == 0 || !m.is_multiple_of(need) {
            return Err(Error::NotDivisor { order: need, conductor: m });
        }
        Ok(GroupSpec { kind: self.kind, conductor: m })
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            GroupKind::Cyclic(n) => write!(f, "Zn:{n}"),
            GroupKind::Dihedral(n) => write!(f, "Dn:{n}"),
            GroupKind::A4 => write!(f, "A4"),
            GroupKind::S4 => write!(f, "S4"),
            GroupKind::A5 => write!(f, "A5"),
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    /// Accepts `Zn:<n>`, `Dn:<n>`, `A4`, `S4`, `A5`.
    fn from_str(s: &str) -> Result<GroupSpec> {
        let s = s.trim();
        let bad = || Error::InvalidGroup(format!("`{s}` (expected Zn:<n>, Dn:<n>, A4, S4 or A5)"));
        let kind = match s {
            "A4" => GroupKind::A4,
            "S4" => GroupKind::S4,
            "A5" => GroupKind::A5,
            _ => {
                let (head, num) = s.split_once(':').ok_or_else(bad)?;
                let n: u32 = num.trim().parse().map_err(|_| bad())?;
                match head {
                    "Zn" => GroupKind::Cyclic(n),
                    "Dn" => GroupKind::Dihedral(n),
                    _ => return Err(bad()),
                }
            }
        };
        GroupSpec::new(kind)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        for s in ["Zn:1", "Zn:3", "Dn:4", "A4", "S4", "A5"] {
            assert_eq!(s.parse::<GroupSpec>().unwrap().to_string(), s);
        }
        assert_eq!("S4".parse::<GroupSpec>().unwrap().conductor, 8);
        assert_eq!("A5".parse::<GroupSpec>().unwrap().conductor, 20);
    }

    #[test]
    fn rejects_invalid() {
        assert!("Dn:2".parse::<GroupSpec>().is_err());
        assert!("Zn:0".parse::<GroupSpec>().is_err());
        assert!("Qn:3".parse::<GroupSpec>().is_err());
        assert!("Zn:x".parse::<GroupSpec>().is_err());
        assert!(GroupSpec::cyclic(3).unwrap().with_conductor(4).is_err());
        assert_eq!(GroupSpec::cyclic(3).unwrap().with_conductor(12).unwrap().conductor, 12);
    }
}
