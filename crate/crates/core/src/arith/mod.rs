//! Exact arithmetic: rationals, cyclotomic fields and commutative polynomials.

mod cyclotomic;
pub mod linalg;
mod mpoly;
mod rat;

pub use cyclotomic::{cyc_embed, cyclotomic_polynomial, euler_phi, CycNum};
pub use mpoly::{MPoly, Monomial, Var, VarKind};
pub use rat::Rat;
