//! Flattened evaluations and exact sparse rank.

use std::collections::{BTreeMap, HashSet};

use crate::arith::{CycNum, Monomial};
use crate::pair::Mat2;

/// A matrix evaluation flattened to `(entry index, monomial) -> coefficient`
/// with entries numbered `0..4` row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct EvalVector(pub BTreeMap<(u8, Monomial), CycNum>);

impl EvalVector {
    pub fn from_mat2(m: &Mat2) -> EvalVector {
        let mut v = BTreeMap::new();
        for (k, p) in m.m.iter().enumerate() {
            for (mono, c) in p.terms() {
                v.insert((k as u8, mono.clone()), c.clone());
            }
        }
        EvalVector(v)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Smallest key, the pivot position used by elimination.
    pub fn leading(&self) -> Option<&(u8, Monomial)> {
        self.0.keys().next()
    }

    /// Scale so that the leading coefficient is one.
    pub fn monic(&self) -> EvalVector {
        let Some(lead) = self.0.values().next() else { return self.clone() };
        let inv = lead.inv().expect("stored coefficients are non-zero");
        EvalVector(self.0.iter().map(|(k, c)| (k.clone(), c * &inv)).collect())
    }

    /// `self - c * other`.
    fn sub_scaled(&mut self, c: &CycNum, other: &EvalVector) {
        for (k, v) in &other.0 {
            let t = v * c;
            match self.0.get_mut(k) {
                Some(x) => {
                    let s = &*x - &t;
                    if s.is_zero() {
                        self.0.remove(k);
                    } else {
                        *x = s;
                    }
                }
                None => {
                    self.0.insert(k.clone(), -&t);
                }
            }
        }
    }
}

type Combo = BTreeMap<usize, CycNum>;

fn combo_sub_scaled(a: &mut Combo, c: &CycNum, b: &Combo) {
    for (k, v) in b {
        let t = v * c;
        let s = match a.get(k) {
            Some(x) => x - &t,
            None => -&t,
        };
        if s.is_zero() {
            a.remove(k);
        } else {
            a.insert(*k, s);
        }
    }
}

/// Result of an exact rank computation.
#[derive(Debug, Clone)]
pub struct RankResult {
    pub rank: usize,
    /// A non-trivial kernel vector `(input index, coefficient)` when the
    /// inputs are dependent.
    pub kernel: Option<Vec<(usize, CycNum)>>,
}

/// Exact rank of the span of `vectors`, by incremental elimination on
/// leading keys with monic pivots. Tracks row combinations so that a
/// kernel vector can be reported.
pub fn rank_with_witness(vectors: &[EvalVector]) -> RankResult {
    let mut pivots: BTreeMap<(u8, Monomial), (EvalVector, Combo)> = BTreeMap::new();
    let mut kernel = None;
    for (idx, v) in vectors.iter().enumerate() {
        let mut row = v.clone();
        let n = match row.0.values().next() {
            Some(c) => c.conductor(),
            None => {
                if kernel.is_none() {
                    kernel = Some(vec![(idx, CycNum::one(1))]);
                }
                continue;
            }
        };
        let mut combo: Combo = BTreeMap::from([(idx, CycNum::one(n))]);
        loop {
            let Some(lead) = row.leading().cloned() else {
                if kernel.is_none() {
                    kernel = Some(combo.into_iter().collect());
                }
                break;
            };
            match pivots.get(&lead) {
                Some((prow, pcombo)) => {
                    let c = row.0[&lead].clone();
                    row.sub_scaled(&c, prow);
                    combo_sub_scaled(&mut combo, &c, pcombo);
                }
                None => {
                    let inv = row.0[&lead].inv().expect("non-zero");
                    let prow = EvalVector(row.0.iter().map(|(k, c)| (k.clone(), c * &inv)).collect());
                    let pc: Combo = combo.iter().map(|(k, c)| (*k, c * &inv)).collect();
                    pivots.insert(lead, (prow, pc));
                    break;
                }
            }
        }
    }
    RankResult { rank: pivots.len(), kernel }
}

/// Rank only; duplicate directions are removed before elimination.
pub fn rank(vectors: impl IntoIterator<Item = EvalVector>) -> usize {
    let mut seen: HashSet<EvalVector> = HashSet::new();
    let distinct: Vec<EvalVector> = vectors
        .into_iter()
        .filter(|v| !v.is_zero())
        .map(|v| v.monic())
        .filter(|v| seen.insert(v.clone()))
        .collect();
    rank_with_witness(&distinct).rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{MPoly, Var};

    fn vec_of(n: u32, entries: &[(u8, Var, i64)]) -> EvalVector {
        let mut m = Mat2::zero(n);
        for &(k, v, c) in entries {
            m.m[k as usize] = &m.m[k as usize] + &MPoly::var(n, v).scale(&CycNum::from_int(n, c));
        }
        EvalVector::from_mat2(&m)
    }

    #[test]
    fn rank_and_witness() {
        let a = vec_of(1, &[(0, Var::a(1), 1), (3, Var::a(1), -1)]);
        let b = a.monic();
        let twice = vec_of(1, &[(0, Var::a(1), 2), (3, Var::a(1), -2)]);
        let c = vec_of(1, &[(2, Var::c(1), 1)]);
        let r = rank_with_witness(&[a.clone(), c.clone(), twice]);
        assert_eq!(r.rank, 2);
        let k = r.kernel.unwrap();
        assert_eq!(k.len(), 2);
        assert_eq!(k[0], (0, CycNum::from_int(1, -2)));
        assert_eq!(k[1], (2, CycNum::from_int(1, 1)));
        assert_eq!(rank([a, b, c]), 2);
    }
}
