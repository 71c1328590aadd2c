//! Membership in the normal-form sets `B`, written directly from their
//! definitions and independent of the rewrite rules.

use crate::error::{Error, Result};
use crate::gpoly::{GMonomial, Letter, Multidegree};
use crate::group::{GroupAction, GroupKind, GroupSpec, Op};

/// `true` iff `m` belongs to the normal-form set `B` of the group.
///
/// Letters outside the group's operator universe are rejected; letters in
/// the universe but outside the normal-form alphabet give `false`.
pub fn is_normal_form(m: &GMonomial, spec: &GroupSpec) -> Result<bool> {
    let action = GroupAction::get(spec);
    for l in m.letters() {
        if !action.contains(&l.op) {
            return Err(Error::OutsideAlphabet { letter: l.to_string(), group: spec.to_string() });
        }
    }
    let w = m.letters();
    Ok(match spec.kind {
        GroupKind::Cyclic(1) => w.iter().all(|l| l.op == Op::ID),
        GroupKind::Cyclic(2) => cyclic_form(w, &[Op::E(1)]),
        GroupKind::Cyclic(_) => cyclic_form(w, &[Op::E(1), Op::E(-1)]),
        GroupKind::Dihedral(_) => dihedral_form(w),
        GroupKind::A4 | GroupKind::S4 | GroupKind::A5 => epsilon_form(w),
    })
}

/// Length of the leading run of `e0` letters, or `None` if those are not
/// sorted by variable.
fn sorted_e0_prefix(w: &[Letter]) -> Option<usize> {
    let k = w.iter().take_while(|l| l.op == Op::E(0)).count();
    w[..k].windows(2).all(|p| p[0].var <= p[1].var).then_some(k)
}

/// Odd positions and even positions each non-decreasing in variable.
fn parity_sorted(u: &[Letter]) -> bool {
    u.windows(3).all(|t| t[0].var <= t[2].var)
}

/// `e0(x)^n` followed by a chain whose letters come from `chain_ops`; for
/// two chain letters the chain must alternate.
fn cyclic_form(w: &[Letter], chain_ops: &[Op]) -> bool {
    let Some(k) = sorted_e0_prefix(w) else { return false };
    let u = &w[k..];
    if !u.iter().all(|l| chain_ops.contains(&l.op)) {
        return false;
    }
    let alternates = chain_ops.len() == 1 || u.windows(2).all(|p| p[0].op != p[1].op);
    alternates && parity_sorted(u)
}

fn sign(op: Op) -> Option<(bool, i64)> {
    match op {
        Op::E(a @ (1 | -1)) => Some((false, a)),
        Op::HE(a @ (1 | -1)) => Some((true, a)),
        _ => None,
    }
}

fn dihedral_form(w: &[Letter]) -> bool {
    let Some(k) = sorted_e0_prefix(w) else { return false };
    let u = &w[k..];
    let Some(kinds) = u.iter().map(|l| sign(l.op)).collect::<Option<Vec<_>>>() else {
        return false;
    };
    // B1: he1 and he-1 not both present
    if kinds.contains(&(true, 1)) && kinds.contains(&(true, -1)) {
        return false;
    }
    // B2: every e_-a precedes every he_a
    for (p, &(h, a)) in kinds.iter().enumerate() {
        if h && kinds[p + 1..].contains(&(false, -a)) {
            return false;
        }
    }
    // B3: e_a -> e_-a | he_a ; he_a -> e_a
    for pair in kinds.windows(2) {
        let ((h, a), next) = (pair[0], pair[1]);
        let ok = if h { next == (false, a) } else { next == (false, -a) || next == (true, a) };
        if !ok {
            return false;
        }
    }
    // B4: each letter type in increasing variable order
    for t in [(false, 1), (false, -1), (true, 1), (true, -1)] {
        let vars: Vec<u32> = u.iter().zip(&kinds).filter(|(_, &k)| k == t).map(|(l, _)| l.var).collect();
        if vars.windows(2).any(|p| p[0] > p[1]) {
            return false;
        }
    }
    // B5: no adjacent f(x_j) g(x_i), i < j, f, g in {e_a, he_a}
    for (p, pair) in kinds.windows(2).enumerate() {
        if pair[0].1 == pair[1].1 && u[p + 1].var < u[p].var {
            return false;
        }
    }
    true
}

fn epsilon_form(w: &[Letter]) -> bool {
    let Some(cells) = w
        .iter()
        .map(|l| match l.op {
            Op::Eps(i, j) => Some((i, j, l.var)),
            _ => None,
        })
        .collect::<Option<Vec<_>>>()
    else {
        return false;
    };
    let k = cells.iter().take_while(|c| c.0 == 1).count();
    let (u1, u2) = cells.split_at(k);
    // B1: u1 ordered by column, then by variable
    if u1.windows(2).any(|p| (p[0].1, p[0].2) > (p[1].1, p[1].2)) {
        return false;
    }
    // B2: u2 in {1, eps2i, eps3j, eps2i eps3j}
    let rows: Vec<u8> = u2.iter().map(|c| c.0).collect();
    if !matches!(rows.as_slice(), [] | [2] | [3] | [2, 3]) {
        return false;
    }
    // B3: every u1 key is at most the key of each u2 letter
    for &(_, j, a) in u2 {
        if u1.iter().any(|&(_, s, p)| (s, p) > (j, a)) {
            return false;
        }
    }
    // B4
    if let [(_, i, a), (_, j, b)] = u2 {
        if (i, a) > (j, b) {
            return false;
        }
    }
    true
}

/// All normal-form monomials of the given multidegree, sorted.
pub fn enumerate_b(spec: &GroupSpec, md: &Multidegree) -> Vec<GMonomial> {
    let alphabet = GroupAction::get(spec).core_alphabet();
    let mut out: Vec<GMonomial> = words_of_multidegree(md, &alphabet)
        .into_iter()
        .filter(|m| is_normal_form(m, spec).expect("core alphabet is in the universe"))
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Every word of the multidegree over `alphabet`: each distinct variable
/// ordering, each choice of operators.
pub fn words_of_multidegree(md: &Multidegree, alphabet: &[Op]) -> Vec<GMonomial> {
    let mut out = Vec::new();
    for vars in multiset_permutations(&md.to_list()) {
        let mut cur: Vec<Letter> = Vec::with_capacity(vars.len());
        fill(&vars, alphabet, &mut cur, &mut out);
    }
    out
}

fn fill(vars: &[u32], alphabet: &[Op], cur: &mut Vec<Letter>, out: &mut Vec<GMonomial>) {
    if cur.len() == vars.len() {
        out.push(GMonomial(cur.clone()));
        return;
    }
    let v = vars[cur.len()];
    for &op in alphabet {
        cur.push(Letter::new(op, v));
        fill(vars, alphabet, cur, out);
        cur.pop();
    }
}

/// Distinct orderings of a sorted multiset, in lexicographic order.
pub fn multiset_permutations(sorted: &[u32]) -> Vec<Vec<u32>> {
    let mut cur = sorted.to_vec();
    let mut out = vec![cur.clone()];
    // standard next-permutation loop
    loop {
        let Some(i) = (0..cur.len().saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            return out;
        };
        let j = (i + 1..cur.len()).rev().find(|&j| cur[j] > cur[i]).expect("successor exists");
        cur.swap(i, j);
        cur[i + 1..].reverse();
        out.push(cur.clone());
    }
}
