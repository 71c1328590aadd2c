use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::arith::{CycNum, Rat};
use crate::group::Op;

/// An operator applied to the variable `x_var`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub op: Op,
    pub var: u32,
}

impl Letter {
    pub fn new(op: Op, var: u32) -> Letter {
        Letter { op, var }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.op == Op::ID {
            write!(f, "x{}", self.var)
        } else {
            write!(f, "{}(x{})", self.op, self.var)
        }
    }
}

/// A word of letters; the empty word is the unit.
///
/// Ordered by length, then lexicographically by letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GMonomial(pub Vec<Letter>);

impl GMonomial {
    pub fn unit() -> GMonomial {
        GMonomial(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &GMonomial) -> GMonomial {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        GMonomial(v)
    }

    pub fn multidegree(&self) -> Multidegree {
        Multidegree::from_vars(self.0.iter().map(|l| l.var))
    }
}

impl PartialOrd for GMonomial {
    fn partial_cmp(&self, other: &GMonomial) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GMonomial {
    fn cmp(&self, other: &GMonomial) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Display for GMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// A multiset of variable indices: `var -> number of occurrences`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Multidegree(pub BTreeMap<u32, u32>);

impl Multidegree {
    pub fn from_vars(vars: impl IntoIterator<Item = u32>) -> Multidegree {
        let mut m = BTreeMap::new();
        for v in vars {
            *m.entry(v).or_insert(0) += 1;
        }
        Multidegree(m)
    }

    pub fn total(&self) -> u32 {
        self.0.values().sum()
    }

    /// The multiset as a sorted list, e.g. `[1, 1, 2]`.
    pub fn to_list(&self) -> Vec<u32> {
        self.0.iter().flat_map(|(&v, &k)| std::iter::repeat_n(v, k as usize)).collect()
    }

    /// Every multidegree over `x_1..x_vars` with total degree in `1..=max_total`.
    pub fn all_up_to(vars: u32, max_total: u32) -> Vec<Multidegree> {
        fn rec(v: u32, vars: u32, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Multidegree>) {
            if v > vars {
                if !cur.is_empty() {
                    out.push(Multidegree::from_vars(cur.iter().copied()));
                }
                return;
            }
            for k in 0..=left {
                cur.extend(std::iter::repeat_n(v, k as usize));
                rec(v + 1, vars, left - k, cur, out);
                cur.truncate(cur.len() - k as usize);
            }
        }
        let mut out = Vec::new();
        rec(1, vars, max_total, &mut Vec::new(), &mut out);
        out.sort_by(|a, b| a.total().cmp(&b.total()).then_with(|| a.to_list().cmp(&b.to_list())));
        out
    }
}

impl fmt::Display for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.to_list().iter().map(|v| format!("x{v}")).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// A linear combination of words with coefficients in `Q(zeta_N)`; zero
/// coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GPolynomial {
    n: u32,
    terms: BTreeMap<GMonomial, CycNum>,
}

impl GPolynomial {
    pub fn zero(n: u32) -> GPolynomial {
        GPolynomial { n, terms: BTreeMap::new() }
    }

    pub fn unit(n: u32) -> GPolynomial {
        GPolynomial::monomial(GMonomial::unit(), CycNum::one(n))
    }

    pub fn scalar(c: CycNum) -> GPolynomial {
        GPolynomial::monomial(GMonomial::unit(), c)
    }

    pub fn monomial(m: GMonomial, c: CycNum) -> GPolynomial {
        let mut p = GPolynomial::zero(c.conductor());
        p.add_term(m, &c);
        p
    }

    pub fn word(n: u32, letters: Vec<Letter>) -> GPolynomial {
        GPolynomial::monomial(GMonomial(letters), CycNum::one(n))
    }

    pub fn letter(n: u32, op: Op, var: u32) -> GPolynomial {
        GPolynomial::word(n, vec![Letter::new(op, var)])
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<GMonomial, CycNum> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<GMonomial, CycNum> {
        self.terms
    }

    pub fn from_terms(n: u32, terms: impl IntoIterator<Item = (GMonomial, CycNum)>) -> GPolynomial {
        let mut p = GPolynomial::zero(n);
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &GMonomial) -> CycNum {
        self.terms.get(m).cloned().unwrap_or_else(|| CycNum::zero(self.n))
    }

    pub fn add_term(&mut self, m: GMonomial, c: &CycNum) {
        assert_eq!(c.conductor(), self.n, "conductor mismatch in G-polynomial");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(k) => {
                let s = &*k + c;
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *k = s;
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn scale(&self, c: &CycNum) -> GPolynomial {
        GPolynomial::from_terms(self.n, self.terms.iter().map(|(m, k)| (m.clone(), k * c)))
    }

    pub fn scale_rat(&self, r: &Rat) -> GPolynomial {
        GPolynomial::from_terms(self.n, self.terms.iter().map(|(m, k)| (m.clone(), k.scale(r))))
    }

    /// Split by variable multidegree; the components sum to `self`.
    pub fn multidegree_components(&self) -> BTreeMap<Multidegree, GPolynomial> {
        let mut out: BTreeMap<Multidegree, GPolynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.multidegree()).or_insert_with(|| GPolynomial::zero(self.n)).add_term(m.clone(), c);
        }
        out
    }

    /// `pq - qp`.
    pub fn commutator(p: &GPolynomial, q: &GPolynomial) -> GPolynomial {
        &(p * q) - &(q * p)
    }
}

impl<'a> Add<&'a GPolynomial> for &'a GPolynomial {
    type Output = GPolynomial;
    fn add(self, rhs: &'a GPolynomial) -> GPolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c);
        }
        out
    }
}

impl<'a> Sub<&'a GPolynomial> for &'a GPolynomial {
    type Output = GPolynomial;
    fn sub(self, rhs: &'a GPolynomial) -> GPolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), &-c);
        }
        out
    }
}

impl<'a> Mul<&'a GPolynomial> for &'a GPolynomial {
    type Output = GPolynomial;
    fn mul(self, rhs: &'a GPolynomial) -> GPolynomial {
        let mut out = GPolynomial::zero(self.n);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.concat(m2), &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for &GPolynomial {
    type Output = GPolynomial;
    fn neg(self) -> GPolynomial {
        GPolynomial { n: self.n, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Add for GPolynomial {
    type Output = GPolynomial;
    fn add(self, rhs: GPolynomial) -> GPolynomial {
        &self + &rhs
    }
}

impl Sub for GPolynomial {
    type Output = GPolynomial;
    fn sub(self, rhs: GPolynomial) -> GPolynomial {
        &self - &rhs
    }
}

impl Mul for GPolynomial {
    type Output = GPolynomial;
    fn mul(self, rhs: GPolynomial) -> GPolynomial {
        &self * &rhs
    }
}

impl Neg for GPolynomial {
    type Output = GPolynomial;
    fn neg(self) -> GPolynomial {
        -&self
    }
}

impl fmt::Display for GPolynomial {
    /// Canonical syntax accepted by [`parse`](super::parse).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let Some(r) = c.to_rat() else {
                if k > 0 {
                    write!(f, " + ")?;
                }
                if m.is_empty() {
                    write!(f, "({c})")?;
                } else {
                    write!(f, "({c})*{m}")?;
                }
                continue;
            };
            match (k, r.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = r.abs();
            if m.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
