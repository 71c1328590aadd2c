//! G-polynomials: words in operator-applied variables, their text syntax
//! and evaluation at generic matrices.

mod eval;
mod parse;
mod poly;

pub use eval::{evaluate, evaluate_with, is_weak_g_identity, Evaluator};
pub use parse::parse;
pub use poly::{GMonomial, GPolynomial, Letter, Multidegree};
