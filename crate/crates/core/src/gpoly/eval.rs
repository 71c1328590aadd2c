use std::collections::HashMap;

use super::{GMonomial, GPolynomial, Letter};
use crate::error::Result;
use crate::group::{GroupAction, GroupSpec};
use crate::pair::{generic_matrix, Mat2};

/// Evaluates G-polynomials at generic matrices, caching letter images.
pub struct Evaluator<'a> {
    action: &'a GroupAction,
    letters: HashMap<Letter, Mat2>,
}

impl<'a> Evaluator<'a> {
    pub fn new(action: &'a GroupAction) -> Evaluator<'a> {
        Evaluator { action, letters: HashMap::new() }
    }

    pub fn for_spec(spec: &GroupSpec) -> Evaluator<'static> {
        Evaluator::new(GroupAction::get(spec))
    }

    pub fn action(&self) -> &GroupAction {
        self.action
    }

    /// `op` applied to the generic matrix `X_var`.
    pub fn letter(&mut self, l: &Letter) -> Result<&Mat2> {
        if !self.letters.contains_key(l) {
            let op = self.action.realize(&l.op)?;
            let img = op
                .apply_mat2(&generic_matrix(l.var, self.action.conductor()))
                .expect("generic matrices are traceless");
            self.letters.insert(*l, img);
        }
        Ok(&self.letters[l])
    }

    pub fn monomial(&mut self, m: &GMonomial) -> Result<Mat2> {
        let n = self.action.conductor();
        let mut acc: Option<Mat2> = None;
        for l in m.letters() {
            let x = self.letter(l)?;
            if x.is_zero() {
                return Ok(Mat2::zero(n));
            }
            acc = Some(match acc {
                None => x.clone(),
                Some(a) => &a * x,
            });
        }
        Ok(acc.unwrap_or_else(|| Mat2::identity(n)))
    }

    pub fn poly(&mut self, f: &GPolynomial) -> Result<Mat2> {
        let mut acc = Mat2::zero(self.action.conductor());
        for (m, c) in f.terms() {
            acc = &acc + &self.monomial(m)?.scale(c);
        }
        Ok(acc)
    }
}

/// Substitute the generic matrix `X_i` for every `x_i`, apply the letter
/// operators and multiply out.
pub fn evaluate(f: &GPolynomial, spec: &GroupSpec) -> Result<Mat2> {
    Evaluator::for_spec(spec).poly(f)
}

/// Evaluate under an explicit (for instance conjugated) action.
pub fn evaluate_with(f: &GPolynomial, action: &GroupAction) -> Result<Mat2> {
    Evaluator::new(action).poly(f)
}

/// `true` iff `f` vanishes at generic matrices.
pub fn is_weak_g_identity(f: &GPolynomial, spec: &GroupSpec) -> Result<bool> {
    Ok(evaluate(f, spec)?.is_zero())
}
