//! Oriented identity lists, normalization and the normal-form sets `B`.
//!
//! Strategy: at the leftmost position where some rule matches, the first
//! matching rule in list order is applied. Each rule carries the family tag
//! of the identity it instantiates.

mod normal_form;
mod rules;

use std::collections::{HashMap, HashSet};
use std::fmt;

pub use normal_form::{enumerate_b, is_normal_form, multiset_permutations, words_of_multidegree};
pub use rules::{Replacement, Rule, RuleCtx};

use crate::arith::CycNum;
use crate::error::{Error, Result};
use crate::gpoly::{Evaluator, GMonomial, GPolynomial, Letter};
use crate::group::{GroupAction, GroupSpec};
use rules::Measure;

/// The oriented rules of one group together with their termination measure.
#[derive(Clone)]
pub struct RuleSet {
    pub spec: GroupSpec,
    pub rules: Vec<Rule>,
    measure: Measure,
    pub measure_description: &'static str,
}

impl RuleSet {
    /// Distinct family tags in rule order.
    pub fn families(&self) -> Vec<&'static str> {
        let mut out: Vec<&'static str> = Vec::new();
        for r in &self.rules {
            if !out.contains(&r.family) {
                out.push(r.family);
            }
        }
        out
    }

    /// The same rule set with one family removed.
    pub fn without(&self, family: &str) -> RuleSet {
        let mut rs = self.clone();
        rs.rules.retain(|r| r.family != family);
        rs
    }

    pub fn measure(&self, w: &[Letter]) -> Vec<i64> {
        (self.measure)(w)
    }

    /// Text listing with family tags, one rule per line.
    pub fn listing(&self) -> String {
        let mut s = format!("rules for {} (measure: {})\n", self.spec, self.measure_description);
        for r in &self.rules {
            s.push_str(&format!("[{}] {}\n", r.family, r.text));
        }
        s
    }
}

impl fmt::Debug for RuleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RuleSet({}, {:?})", self.spec, self.families())
    }
}

/// The oriented identity list for the group.
pub fn rules_for(spec: &GroupSpec) -> RuleSet {
    let (rules, measure, measure_description) = rules::rules_for_kind(spec.kind);
    RuleSet { spec: *spec, rules, measure, measure_description }
}

#[derive(Debug, Clone, Copy)]
pub struct NormalizeOptions {
    /// Maximum number of rule applications.
    pub step_budget: u64,
    /// Check every applied rule instance by evaluation.
    pub check_soundness: bool,
    /// Check that every rule strictly decreases the termination measure.
    pub check_measure: bool,
}

impl Default for NormalizeOptions {
    fn default() -> Self {
        NormalizeOptions { step_budget: 1_000_000, check_soundness: false, check_measure: cfg!(debug_assertions) }
    }
}

/// Rewrites words to normal form, memoizing results per word.
pub struct Normalizer<'a> {
    rules: &'a RuleSet,
    ctx: RuleCtx,
    opts: NormalizeOptions,
    memo: HashMap<GMonomial, GPolynomial>,
    steps: u64,
    checked: HashSet<(&'static str, Vec<Letter>)>,
    eval: Option<Evaluator<'static>>,
}

impl<'a> Normalizer<'a> {
    pub fn new(rules: &'a RuleSet, opts: NormalizeOptions) -> Normalizer<'a> {
        let action = GroupAction::get(&rules.spec);
        Normalizer {
            rules,
            ctx: RuleCtx { n: rules.spec.conductor, action },
            opts,
            memo: HashMap::new(),
            steps: 0,
            checked: HashSet::new(),
            eval: opts.check_soundness.then(|| Evaluator::new(action)),
        }
    }

    /// Rule applications performed so far.
    pub fn steps(&self) -> u64 {
        self.steps
    }

    fn find(&self, w: &[Letter]) -> Option<(usize, &'a Rule, Replacement)> {
        for p in 0..w.len() {
            for r in &self.rules.rules {
                if let Some(rep) = r.try_at(&self.ctx, w, p) {
                    return Some((p, r, rep));
                }
            }
        }
        None
    }

    fn check_step(&mut self, rule: &Rule, w: &[Letter], window: &[Letter], rep: &Replacement, results: &[Vec<Letter>]) -> Result<()> {
        if self.opts.check_measure {
            let before = self.rules.measure(w);
            if results.iter().any(|r| self.rules.measure(r) >= before) {
                return Err(Error::MeasureIncrease { rule: rule.family.to_string() });
            }
        }
        if let Some(ev) = self.eval.as_mut() {
            if self.checked.insert((rule.family, window.to_vec())) {
                let lhs = ev.monomial(&GMonomial(window.to_vec()))?;
                let mut rhs = crate::pair::Mat2::zero(self.ctx.n);
                for (c, word) in rep {
                    rhs = &rhs + &ev.monomial(&GMonomial(word.clone()))?.scale(c);
                }
                if lhs != rhs {
                    let shown = GMonomial(window.to_vec()).to_string();
                    return Err(Error::UnsoundStep { rule: rule.family.to_string(), window: shown });
                }
            }
        }
        Ok(())
    }

    /// Normal form of a single word.
    pub fn word(&mut self, m: &GMonomial) -> Result<GPolynomial> {
        if let Some(nf) = self.memo.get(m) {
            return Ok(nf.clone());
        }
        let w = m.letters();
        let n = self.ctx.n;
        let result = match self.find(w) {
            None => GPolynomial::monomial(m.clone(), CycNum::one(n)),
            Some((p, rule, rep)) => {
                self.steps += 1;
                if self.steps > self.opts.step_budget {
                    return Err(Error::StepBudget { budget: self.opts.step_budget });
                }
                let results: Vec<Vec<Letter>> = rep
                    .iter()
                    .map(|(_, r)| {
                        let mut v = w[..p].to_vec();
                        v.extend_from_slice(r);
                        v.extend_from_slice(&w[p + rule.width..]);
                        v
                    })
                    .collect();
                self.check_step(rule, w, &w[p..p + rule.width], &rep, &results)?;
                let mut acc = GPolynomial::zero(n);
                for ((c, _), word) in rep.iter().zip(results) {
                    let nf = self.word(&GMonomial(word))?;
                    acc = &acc + &nf.scale(c);
                }
                acc
            }
        };
        self.memo.insert(m.clone(), result.clone());
        Ok(result)
    }

    pub fn poly(&mut self, f: &GPolynomial) -> Result<GPolynomial> {
        let mut acc = GPolynomial::zero(self.ctx.n);
        for (m, c) in f.terms() {
            acc = &acc + &self.word(m)?.scale(c);
        }
        Ok(acc)
    }
}

/// Normal form of `f` under the group's rule set with default options.
pub fn normalize(f: &GPolynomial, spec: &GroupSpec) -> Result<GPolynomial> {
    normalize_with(f, &rules_for(spec), NormalizeOptions::default())
}

pub fn normalize_with(f: &GPolynomial, rules: &RuleSet, opts: NormalizeOptions) -> Result<GPolynomial> {
    Normalizer::new(rules, opts).poly(f)
}

#[cfg(test)]
mod tests;
