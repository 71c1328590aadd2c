//! Exact verification of weak G-identities for the pair (M2(C), sl2(C)).
//!
//! The crate is layered bottom-up:
//!
//! * [`arith`] - rationals, cyclotomic fields `Q(zeta_N)` and commutative
//!   polynomials over them;
//! * [`pair`] - 2x2 matrices over those polynomials and the generic
//!   traceless matrices `X_i = [[a_i, b_i], [c_i, -a_i]]`;
//! * [`group`] - finite group actions on `sl2` realized as exact 3x3
//!   operators (idempotents, matrix units, adjoint representations);
//! * [`gpoly`] - G-polynomials, their text syntax and evaluation;
//! * [`rewrite`] - oriented identity lists and normal forms;
//! * [`certify`] - identity suites, rank computations, the brute-force
//!   dimension oracle and bounded-degree basis certificates.

pub mod arith;
pub mod certify;
pub mod error;
pub mod gpoly;
pub mod group;
pub mod pair;
pub mod rewrite;

pub use arith::{cyc_embed, cyclotomic_polynomial, CycNum, MPoly, Monomial, Rat, Var, VarKind};
pub use certify::{
    certify_basis, certify_basis_with, independence_check, quotient_dimension_oracle, verify_identity_suite,
    CertifyOptions, Certificate, IndependenceReport, MultidegreeRecord, Suite,
};
pub use error::{Error, Result};
pub use gpoly::{evaluate, is_weak_g_identity, parse, GMonomial, GPolynomial, Letter, Multidegree};
pub use group::{GAElem, GroupAction, GroupElem, GroupKind, GroupSpec, Op, Op3};
pub use pair::{commutator, generic_matrix, is_zero_mat, Mat2, SL2Coords};
pub use rewrite::{enumerate_b, is_normal_form, normalize, rules_for, RuleSet};
