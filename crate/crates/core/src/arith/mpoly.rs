use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{CycNum, Rat};

/// The three coordinate families of a generic traceless matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VarKind {
    A,
    B,
    C,
}

/// A commuting indeterminate `a_i`, `b_i` or `c_i`.
///
/// Ordered `a_1 < a_2 < .. < b_1 < .. < c_1 < ..`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var {
    pub kind: VarKind,
    pub index: u32,
}

impl Var {
    pub fn a(i: u32) -> Var {
        Var { kind: VarKind::A, index: i }
    }
    pub fn b(i: u32) -> Var {
        Var { kind: VarKind::B, index: i }
    }
    pub fn c(i: u32) -> Var {
        Var { kind: VarKind::C, index: i }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            VarKind::A => 'a',
            VarKind::B => 'b',
            VarKind::C => 'c',
        };
        write!(f, "{k}{}", self.index)
    }
}

/// A commutative monomial: sorted `(variable, exponent)` pairs with
/// positive exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Monomial {
        Monomial(vec![(v, 1)])
    }

    /// Build from arbitrary pairs, merging repeats and dropping zero exponents.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, u32)>) -> Monomial {
        let mut map: BTreeMap<Var, u32> = BTreeMap::new();
        for (v, e) in pairs {
            *map.entry(v).or_default() += e;
        }
        Monomial(map.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn pairs(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, (v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A polynomial in the commuting indeterminates with coefficients in
/// `Q(zeta_N)`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MPoly {
    n: u32,
    terms: BTreeMap<Monomial, CycNum>,
}

impl MPoly {
    pub fn zero(n: u32) -> MPoly {
        MPoly { n, terms: BTreeMap::new() }
    }

    pub fn constant(c: CycNum) -> MPoly {
        let n = c.conductor();
        let mut p = MPoly::zero(n);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(), c);
        }
        p
    }

    pub fn one(n: u32) -> MPoly {
        MPoly::constant(CycNum::one(n))
    }

    pub fn var(n: u32, v: Var) -> MPoly {
        MPoly::term(Monomial::var(v), CycNum::one(n))
    }

    pub fn term(m: Monomial, c: CycNum) -> MPoly {
        let mut p = MPoly::zero(c.conductor());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, CycNum> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> CycNum {
        self.terms.get(m).cloned().unwrap_or_else(|| CycNum::zero(self.n))
    }

    /// Add `c * m` in place.
    pub fn add_term(&mut self, m: Monomial, c: &CycNum) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn scale(&self, c: &CycNum) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(self.n);
        }
        MPoly { n: self.n, terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect() }
    }

    pub fn scale_rat(&self, r: &Rat) -> MPoly {
        if r.is_zero() {
            return MPoly::zero(self.n);
        }
        MPoly { n: self.n, terms: self.terms.iter().map(|(m, k)| (m.clone(), k.scale(r))).collect() }
    }

    /// Apply a Galois automorphism to every coefficient.
    pub fn galois(&self, k: i64) -> MPoly {
        MPoly { n: self.n, terms: self.terms.iter().map(|(m, c)| (m.clone(), c.galois(k))).collect() }
    }

    fn check(&self, other: &MPoly) {
        assert_eq!(self.n, other.n, "conductor mismatch in polynomial arithmetic");
    }
}

impl<'a> Add<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn add(self, rhs: &'a MPoly) -> MPoly {
        self.check(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c);
        }
        out
    }
}

impl<'a> Sub<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &'a MPoly) -> MPoly {
        self.check(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), &-c);
        }
        out
    }
}

impl<'a> Mul<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &'a MPoly) -> MPoly {
        self.check(rhs);
        let mut out = MPoly::zero(self.n);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly { n: self.n, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Add for MPoly {
    type Output = MPoly;
    fn add(self, rhs: MPoly) -> MPoly {
        &self + &rhs
    }
}

impl Sub for MPoly {
    type Output = MPoly;
    fn sub(self, rhs: MPoly) -> MPoly {
        &self - &rhs
    }
}

impl Mul for MPoly {
    type Output = MPoly;
    fn mul(self, rhs: MPoly) -> MPoly {
        &self * &rhs
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

/// Sign and magnitude text of a coefficient; the magnitude is empty for 1.
fn split_sign(c: &CycNum) -> (bool, String) {
    let nz: Vec<(usize, &Rat)> = c.coeffs().iter().enumerate().filter(|(_, r)| !r.is_zero()).collect();
    match nz.as_slice() {
        [(k, r)] => {
            let abs = r.abs();
            let pow = match k {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{k}"),
            };
            let body = match (abs.is_one(), pow.is_empty()) {
                (true, _) => pow,
                (false, true) => abs.to_string(),
                (false, false) => format!("{abs}*{pow}"),
            };
            (r.is_negative(), body)
        }
        _ => (false, format!("({c})")),
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let (neg, body) = split_sign(c);
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            match (body.is_empty(), m.is_one()) {
                (true, true) => write!(f, "1")?,
                (true, false) => write!(f, "{m}")?,
                (false, true) => write!(f, "{body}")?,
                (false, false) => write!(f, "{body}*{m}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
