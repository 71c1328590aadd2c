//! Identity suites, exact ranks, the brute-force dimension oracle and
//! bounded-degree basis certificates.

mod certificate;
mod evalvec;
mod identities;
mod oracle;

pub use certificate::{
    certify_basis, certify_basis_with, spanning_alphabet, Certificate, CertifyOptions, IdentityRecord,
    MultidegreeRecord,
};
pub use evalvec::{rank, rank_with_witness, EvalVector, RankResult};
pub use identities::{sign_flip, verify_identity_suite, verify_instances, IdentityResult, Suite};
pub use oracle::{operator_basis, quotient_dimension_oracle, quotient_dimension_oracle_with, ORACLE_WORD_BUDGET};

use crate::arith::CycNum;
use crate::gpoly::{Evaluator, GMonomial};
use crate::group::{GroupAction, GroupSpec};

/// Rank of the evaluations of a list of monomials.
#[derive(Debug, Clone)]
pub struct IndependenceReport {
    pub rank: usize,
    /// A vanishing non-trivial combination when the monomials are dependent.
    pub dependent_subset: Option<Vec<(GMonomial, CycNum)>>,
}

impl IndependenceReport {
    pub fn independent(&self) -> bool {
        self.dependent_subset.is_none()
    }
}

/// Exact rank of the evaluations of `monomials` over `Q(zeta_N)`.
pub fn independence_check(monomials: &[GMonomial], spec: &GroupSpec) -> IndependenceReport {
    let mut ev = Evaluator::new(GroupAction::get(spec));
    let vectors: Vec<EvalVector> = monomials
        .iter()
        .map(|m| EvalVector::from_mat2(&ev.monomial(m).expect("monomials use the group's letters")))
        .collect();
    let r = rank_with_witness(&vectors);
    IndependenceReport {
        rank: r.rank,
        dependent_subset: r.kernel.map(|k| k.into_iter().map(|(i, c)| (monomials[i].clone(), c)).collect()),
    }
}

#[cfg(test)]
mod tests;
