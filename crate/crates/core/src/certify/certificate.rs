//! Bounded-degree basis certificates.

use std::collections::{HashMap, HashSet};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::identities::verify_identity_suite;
use super::independence_check;
use super::oracle::{quotient_dimension_oracle_with, ORACLE_WORD_BUDGET};
use crate::error::{Error, Result};
use crate::gpoly::{Evaluator, GMonomial, Multidegree};
use crate::group::{GroupAction, GroupElem, GroupSpec, Op};
use crate::pair::Mat2;
use crate::rewrite::{enumerate_b, rules_for, words_of_multidegree, NormalizeOptions, Normalizer, RuleSet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityRecord {
    pub tag: String,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultidegreeRecord {
    /// Variable indices with multiplicity, e.g. `[1, 1, 2]`.
    pub degree: Vec<u32>,
    pub b_count: usize,
    pub rank: usize,
    pub oracle_dim: usize,
    pub spanning_ok: bool,
    /// Present only on failure.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl MultidegreeRecord {
    pub fn passed(&self) -> bool {
        self.spanning_ok && self.b_count == self.rank && self.rank == self.oracle_dim
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub group: String,
    pub conductor: u32,
    pub degree_bound: u32,
    pub identities: Vec<IdentityRecord>,
    pub multidegrees: Vec<MultidegreeRecord>,
    /// `"pass"` or `"fail"`.
    pub verdict: String,
    pub runtime_ms: u64,
}

impl Certificate {
    pub fn passed(&self) -> bool {
        self.verdict == "pass"
    }

    pub fn failures(&self) -> impl Iterator<Item = &MultidegreeRecord> {
        self.multidegrees.iter().filter(|r| !r.passed())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }
}

#[derive(Debug, Clone)]
pub struct CertifyOptions {
    /// Rules to normalize with; the group's own list when `None`.
    pub rules: Option<RuleSet>,
    pub step_budget: u64,
    /// Check every applied rule instance by evaluation.
    pub check_soundness: bool,
    /// Stop after the first total degree with a failing record.
    pub stop_on_failure: bool,
    pub oracle_budget: u64,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions {
            rules: None,
            step_budget: NormalizeOptions::default().step_budget,
            check_soundness: false,
            stop_on_failure: false,
            oracle_budget: ORACLE_WORD_BUDGET,
        }
    }
}

/// Certify the normal-form set of `spec` on every multidegree over
/// `x_1..x_bound` of total degree at most `bound`.
pub fn certify_basis(spec: &GroupSpec, bound: u32) -> Result<Certificate> {
    certify_basis_with(spec, bound, &CertifyOptions::default())
}

pub fn certify_basis_with(spec: &GroupSpec, bound: u32, opts: &CertifyOptions) -> Result<Certificate> {
    let start = Instant::now();
    let rules = opts.rules.clone().unwrap_or_else(|| rules_for(spec));
    let identities: Vec<IdentityRecord> = verify_identity_suite(spec, None)?
        .into_iter()
        .map(|r| IdentityRecord { tag: r.tag, ok: r.ok })
        .collect();
    let all = Multidegree::all_up_to(bound, bound);
    let mut multidegrees = Vec::new();
    for d in 1..=bound {
        let level: Vec<&Multidegree> = all.iter().filter(|m| m.total() == d).collect();
        let records: Vec<MultidegreeRecord> =
            level.par_iter().map(|md| certify_multidegree(spec, md, &rules, opts)).collect::<Result<_>>()?;
        let failed = records.iter().any(|r| !r.passed());
        multidegrees.extend(records);
        if failed && opts.stop_on_failure {
            break;
        }
    }
    let ok = identities.iter().all(|r| r.ok) && multidegrees.iter().all(MultidegreeRecord::passed);
    Ok(Certificate {
        group: spec.to_string(),
        conductor: spec.conductor,
        degree_bound: bound,
        identities,
        multidegrees,
        verdict: if ok { "pass" } else { "fail" }.to_string(),
        runtime_ms: start.elapsed().as_millis() as u64,
    })
}

/// Letters whose words must normalize into `B`: the normal-form alphabet
/// together with the raw group letters.
pub fn spanning_alphabet(spec: &GroupSpec) -> Vec<Op> {
    let action = GroupAction::get(spec);
    let mut ops = action.core_alphabet();
    let raw: Vec<Op> = if spec.kind.is_epsilon() {
        vec![Op::ID, Op::Group(GroupElem::g(1)), Op::Group(GroupElem::hg(0))]
    } else {
        action.group_elements().into_iter().map(Op::Group).collect()
    };
    for op in raw {
        if !ops.contains(&op) {
            ops.push(op);
        }
    }
    ops
}

fn certify_multidegree(
    spec: &GroupSpec,
    md: &Multidegree,
    rules: &RuleSet,
    opts: &CertifyOptions,
) -> Result<MultidegreeRecord> {
    let b = enumerate_b(spec, md);
    let mut witness = None;

    let spanning_ok = match check_spanning(spec, md, &b, rules, opts)? {
        None => true,
        Some(w) => {
            witness = Some(w);
            false
        }
    };
    let report = independence_check(&b, spec);
    if witness.is_none() {
        if let Some(k) = &report.dependent_subset {
            let terms: Vec<String> = k.iter().map(|(m, c)| format!("({c})*{m}")).collect();
            witness = Some(format!("kernel vector: {}", terms.join(" + ")));
        }
    }
    let oracle_dim = quotient_dimension_oracle_with(spec, md, opts.oracle_budget)?;
    if witness.is_none() && (b.len() != report.rank || report.rank != oracle_dim) {
        witness =
            Some(format!("dimension mismatch: |B| = {}, rank = {}, oracle = {oracle_dim}", b.len(), report.rank));
    }
    Ok(MultidegreeRecord {
        degree: md.to_list(),
        b_count: b.len(),
        rank: report.rank,
        oracle_dim,
        spanning_ok,
        witness,
    })
}

/// `None` when every word normalizes into `span(B)` with its evaluation
/// preserved, otherwise a description of the first offending word.
fn check_spanning(
    spec: &GroupSpec,
    md: &Multidegree,
    b: &[GMonomial],
    rules: &RuleSet,
    opts: &CertifyOptions,
) -> Result<Option<String>> {
    let bset: HashSet<&GMonomial> = b.iter().collect();
    let nopts = NormalizeOptions {
        step_budget: opts.step_budget,
        check_soundness: opts.check_soundness,
        check_measure: false,
    };
    let mut norm = Normalizer::new(rules, nopts);
    let mut ev = Evaluator::new(GroupAction::get(spec));
    let mut b_evals: HashMap<GMonomial, Mat2> = HashMap::new();
    for w in words_of_multidegree(md, &spanning_alphabet(spec)) {
        let nf = match norm.word(&w) {
            Ok(nf) => nf,
            Err(Error::StepBudget { budget }) => {
                return Ok(Some(format!("step budget of {budget} exhausted on {w}")));
            }
            Err(e) => return Err(e),
        };
        if let Some((m, _)) = nf.terms().iter().find(|(m, _)| !bset.contains(m)) {
            return Ok(Some(format!("non-normal residue: {w} -> ... + {m} + ...")));
        }
        let mut rhs = Mat2::zero(spec.conductor);
        for (m, c) in nf.terms() {
            if !b_evals.contains_key(m) {
                let e = ev.monomial(m)?;
                b_evals.insert(m.clone(), e);
            }
            rhs = &rhs + &b_evals[m].scale(c);
        }
        if ev.monomial(&w)? != rhs {
            return Ok(Some(format!("evaluation changed: {w} -> {nf}")));
        }
    }
    Ok(None)
}
