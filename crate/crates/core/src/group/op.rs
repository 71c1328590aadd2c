use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use super::Op3;
use crate::arith::CycNum;

/// The group element `h^flip g^power`.
///
/// For cyclic groups `flip` is always false. For the larger groups `g` and
/// `h` denote the two shipped generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GroupElem {
    pub flip: bool,
    pub power: u32,
}

impl GroupElem {
    pub const IDENTITY: GroupElem = GroupElem { flip: false, power: 0 };

    pub fn g(power: u32) -> GroupElem {
        GroupElem { flip: false, power }
    }

    pub fn hg(power: u32) -> GroupElem {
        GroupElem { flip: true, power }
    }

    /// Product in the dihedral group of order `2n` (`g^p h = h g^-p`);
    /// also valid in the cyclic group when neither factor flips.
    pub fn compose(self, other: GroupElem, n: u32) -> GroupElem {
        let n = n as i64;
        let p1 = if other.flip { -(self.power as i64) } else { self.power as i64 };
        GroupElem {
            flip: self.flip ^ other.flip,
            power: (p1 + other.power as i64).rem_euclid(n) as u32,
        }
    }
}

impl fmt::Display for GroupElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.flip, self.power) {
            (false, 0) => write!(f, "id"),
            (false, 1) => write!(f, "g"),
            (false, p) => write!(f, "g^{p}"),
            (true, 0) => write!(f, "h"),
            (true, 1) => write!(f, "hg"),
            (true, p) => write!(f, "hg^{p}"),
        }
    }
}

/// A named operator that can be applied to a variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Op {
    /// A group element acting directly.
    Group(GroupElem),
    /// The idempotent `e_i`.
    E(i64),
    /// The product `h e_i`.
    HE(i64),
    /// The matrix unit `eps_ij`, indices in `1..=3`.
    Eps(u8, u8),
}

/// Sort key for idempotent indices: `0 < 1 < -1 < 2 < -2 < ..`.
pub(crate) fn index_key(i: i64) -> u64 {
    match i.cmp(&0) {
        Ordering::Equal => 0,
        Ordering::Greater => 2 * i as u64 - 1,
        Ordering::Less => 2 * i.unsigned_abs(),
    }
}

impl Op {
    pub const ID: Op = Op::Group(GroupElem::IDENTITY);

    fn key(&self) -> (u8, u64, u64) {
        match *self {
            Op::Group(g) => (0, g.flip as u64, g.power as u64),
            Op::E(i) => (1, index_key(i), 0),
            Op::HE(i) => (2, index_key(i), 0),
            Op::Eps(i, j) => (3, i as u64, j as u64),
        }
    }

    pub fn is_group(&self) -> bool {
        matches!(self, Op::Group(_))
    }
}

impl PartialOrd for Op {
    fn partial_cmp(&self, other: &Op) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Op {
    fn cmp(&self, other: &Op) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Op::Group(g) => write!(f, "{g}"),
            Op::E(i) => write!(f, "e{i}"),
            Op::HE(i) => write!(f, "he{i}"),
            Op::Eps(i, j) => write!(f, "eps{i}{j}"),
        }
    }
}

/// An element of the group algebra of a cyclic or dihedral group: a formal
/// combination of group elements together with its action on `sl2`.
#[derive(Clone, PartialEq, Eq)]
pub struct GAElem {
    pub(crate) order: u32,
    pub formal: BTreeMap<GroupElem, CycNum>,
    pub realized: Op3,
}

impl GAElem {
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn add(&self, other: &GAElem) -> GAElem {
        let mut formal = self.formal.clone();
        for (g, c) in &other.formal {
            add_into(&mut formal, *g, c);
        }
        GAElem { order: self.order, formal, realized: &self.realized + &other.realized }
    }

    pub fn scale(&self, c: &CycNum) -> GAElem {
        let mut formal = BTreeMap::new();
        for (g, k) in &self.formal {
            add_into(&mut formal, *g, &(k * c));
        }
        GAElem { order: self.order, formal, realized: self.realized.scale(c) }
    }

    /// Product in the group algebra; the realization is the composite
    /// operator (`self` applied after `other`).
    pub fn mul(&self, other: &GAElem) -> GAElem {
        let mut formal = BTreeMap::new();
        for (g1, c1) in &self.formal {
            for (g2, c2) in &other.formal {
                add_into(&mut formal, g1.compose(*g2, self.order), &(c1 * c2));
            }
        }
        GAElem { order: self.order, formal, realized: &self.realized * &other.realized }
    }
}

fn add_into(map: &mut BTreeMap<GroupElem, CycNum>, g: GroupElem, c: &CycNum) {
    let s = match map.get(&g) {
        Some(k) => k + c,
        None => c.clone(),
    };
    if s.is_zero() {
        map.remove(&g);
    } else {
        map.insert(g, s);
    }
}

impl fmt::Display for GAElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.formal.is_empty() {
            return write!(f, "0");
        }
        for (k, (g, c)) in self.formal.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*{g}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for GAElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} -> {:?}", self.realized)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn op_order() {
        let mut v = vec![Op::E(-2), Op::Eps(1, 1), Op::E(-1), Op::HE(1), Op::E(2), Op::E(1), Op::E(0), Op::ID];
        v.sort();
        assert_eq!(v, vec![Op::ID, Op::E(0), Op::E(1), Op::E(-1), Op::E(2), Op::E(-2), Op::HE(1), Op::Eps(1, 1)]);
    }

    #[test]
    fn dihedral_relation() {
        let n = 5;
        let (g, h) = (GroupElem::g(1), GroupElem::hg(0));
        assert_eq!(h.compose(g, n).compose(h, n), GroupElem::g(4));
        assert_eq!(h.compose(h, n), GroupElem::IDENTITY);
    }

    #[test]
    fn display() {
        assert_eq!(Op::E(-1).to_string(), "e-1");
        assert_eq!(Op::HE(1).to_string(), "he1");
        assert_eq!(Op::Eps(2, 3).to_string(), "eps23");
        assert_eq!(Op::Group(GroupElem::hg(2)).to_string(), "hg^2");
    }
}
