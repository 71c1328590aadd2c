//! Finite group actions on `sl2` as exact 3x3 operators.

mod action;
mod op;
mod op3;
mod spec;

pub use action::{
    action_generator_g, action_generator_h, adjoint_of_pgl2, check_irreducible, conjugated_action,
    epsilon, group_closure_size, h_idempotent, idempotent, pi_operators, shipped_generators,
    GroupAction, Irreducibility, Mat2Const,
};
pub use op::{GAElem, GroupElem, Op};
pub use op3::Op3;
pub use spec::{GroupKind, GroupSpec};
