//! Brute-force dimension of a multihomogeneous component of the relatively
//! free pair, computed without the rewriting machinery.

use std::collections::{BTreeMap, HashSet};

use super::evalvec::{rank, EvalVector};
use crate::arith::linalg;
use crate::error::{Error, Result};
use crate::gpoly::Multidegree;
use crate::group::{GroupAction, GroupSpec, Op3};
use crate::pair::{generic_matrix, Mat2, SL2Coords};

/// Default cap on the number of words the oracle may evaluate.
pub const ORACLE_WORD_BUDGET: u64 = 2_000_000;

/// Dimension of the span of the evaluations of all words of multidegree
/// `md` over the full operator alphabet.
pub fn quotient_dimension_oracle(spec: &GroupSpec, md: &Multidegree) -> Result<usize> {
    quotient_dimension_oracle_with(spec, md, ORACLE_WORD_BUDGET)
}

pub fn quotient_dimension_oracle_with(spec: &GroupSpec, md: &Multidegree, word_budget: u64) -> Result<usize> {
    let action = GroupAction::get(spec);
    let ops = operator_basis(action);
    let words = word_count(md, ops.len());
    if words > word_budget as u128 {
        return Err(Error::Budget(format!("{words} words exceed the oracle budget of {word_budget}")));
    }
    let n = spec.conductor;
    let mut letters: BTreeMap<(usize, u32), Mat2> = BTreeMap::new();
    for &v in md.0.keys() {
        let x = SL2Coords::from_mat2(&generic_matrix(v, n))?;
        for (k, t) in ops.iter().enumerate() {
            letters.insert((k, v), t.apply(&x).to_mat2());
        }
    }
    let mut remaining: BTreeMap<u32, u32> = md.0.clone();
    let mut out: HashSet<EvalVector> = HashSet::new();
    let prefix = Mat2::identity(n);
    expand(&prefix, &mut remaining, ops.len(), &letters, &mut out);
    Ok(rank(out))
}

/// A basis of the linear span of the realized group, found by closing the
/// generators under composition.
pub fn operator_basis(action: &GroupAction) -> Vec<Op3> {
    let n = action.conductor();
    let mut gens = vec![action.g().clone()];
    gens.extend(action.h().cloned());
    let mut elems = vec![Op3::identity(n)];
    let mut seen: HashSet<Op3> = elems.iter().cloned().collect();
    let mut i = 0;
    while i < elems.len() {
        for s in &gens {
            let t = &elems[i] * s;
            if seen.insert(t.clone()) {
                elems.push(t);
            }
        }
        i += 1;
    }
    let rows: Vec<_> = elems.iter().map(Op3::flatten).collect();
    let (basis, _) = linalg::rref(&rows);
    basis.into_iter().map(|r| Op3::from_fn(|i, j| r[3 * i + j].clone())).collect()
}

fn word_count(md: &Multidegree, letters: usize) -> u128 {
    let total = md.total();
    let mut perms: u128 = (1..=total as u128).product();
    for &k in md.0.values() {
        perms /= (1..=k as u128).product::<u128>();
    }
    perms.saturating_mul((letters as u128).saturating_pow(total))
}

fn expand(
    prefix: &Mat2,
    remaining: &mut BTreeMap<u32, u32>,
    nops: usize,
    letters: &BTreeMap<(usize, u32), Mat2>,
    out: &mut HashSet<EvalVector>,
) {
    let vars: Vec<u32> = remaining.iter().filter(|(_, &k)| k > 0).map(|(&v, _)| v).collect();
    if vars.is_empty() {
        let e = EvalVector::from_mat2(prefix);
        if !e.is_zero() {
            out.insert(e.monic());
        }
        return;
    }
    for v in vars {
        *remaining.get_mut(&v).unwrap() -= 1;
        for k in 0..nops {
            let next = prefix * &letters[&(k, v)];
            if !next.is_zero() {
                expand(&next, remaining, nops, letters, out);
            }
        }
        *remaining.get_mut(&v).unwrap() += 1;
    }
}
