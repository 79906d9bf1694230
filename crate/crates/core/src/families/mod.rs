//! Closed-form families of planar functions and their predicates.
//!
//! For `n = 2` every family uses `a = 1/2`, so `Tr(a) = 1` and
//! `f = x^{q+1} + ℓ(x²)`.

mod cubic;
mod example1;
mod monomial;
mod nbc;
mod nonexistence;

pub use cubic::{cubic_lemma_bruteforce, cubic_lemma_predicate, cubic_theorem_predicate, CubicCoeffs};
pub use example1::{example1_construct, example1_ell, example1_general};
pub use monomial::{theorem_monomial_predicate, MonomialFamilyParams};
pub use nbc::{
    example2_recipe_one, example2_recipe_two, theorem_nbc_evaluate, theorem_nbc_predicate, NbcEvaluation,
    NbcFamilyParams,
};
pub use nonexistence::nonexistence_witness;

use crate::field::{Element, FieldCtx, FieldError};
use crate::linpoly::LinPolyError;
use crate::planarity::{PlanarCandidate, PlanarityError};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FamilyError {
    #[error("family needs n = {expected}, got n = {found}")]
    WrongDegree { expected: &'static str, found: u32 },
    #[error("invalid parameters: {0}")]
    BadParams(String),
    #[error("the simplified and bullet forms disagree; this is a bug")]
    FormsDisagree,
    #[error("internal error: {0}")]
    Internal(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    LinPoly(#[from] LinPolyError),
    #[error(transparent)]
    Planarity(#[from] PlanarityError),
}

pub type Result<T, E = FamilyError> = std::result::Result<T, E>;

pub(crate) fn require_n(ctx: &FieldCtx, n: u32) -> Result<()> {
    if ctx.n() != n {
        let expected = match n {
            2 => "2",
            3 => "3",
            _ => "?",
        };
        return Err(FamilyError::WrongDegree { expected, found: ctx.n() });
    }
    Ok(())
}

/// `x^{q+1} + ℓ(x²)` on F_{q^2}, realized with `a = 1/2`.
pub fn quadratic_candidate(ctx: &FieldCtx, ell: crate::linpoly::LinearizedPoly) -> Result<PlanarCandidate> {
    require_n(ctx, 2)?;
    Ok(PlanarCandidate::new(ctx, half(ctx), ell)?)
}

pub(crate) fn half(ctx: &FieldCtx) -> Element {
    ctx.inv(ctx.from_int(2)).expect("odd characteristic")
}
