use super::{quadratic_candidate, require_n, FamilyError, Result};
use crate::field::{Element, FieldCtx};
use crate::linpoly::{LinearizedPoly, Subspace};
use crate::planarity::PlanarCandidate;

/// `ℓ(x) = x^{p^{3k}} − x^{p^{2k}} − x^{p^k} − x` on F_{q^2}, `q = p^{2k}`.
pub fn example1_ell(ctx: &FieldCtx) -> Result<LinearizedPoly> {
    require_n(ctx, 2)?;
    if !ctx.m().is_multiple_of(2) {
        return Err(FamilyError::BadParams(format!("m = {} must be even", ctx.m())));
    }
    let k = ctx.m() / 2;
    let minus = ctx.neg(Element::ONE);
    let mut coeffs = vec![Element::ZERO; ctx.degree() as usize];
    coeffs[3 * k as usize] = Element::ONE;
    for t in [0, k, 2 * k] {
        coeffs[t as usize] = minus;
    }
    Ok(LinearizedPoly::from_coeffs(ctx, coeffs)?)
}

/// The candidate `x^{q+1} + ℓ(x²)` for [`example1_ell`].
///
/// On F_q the map is `u ↦ −2u`, so planarity needs `ℓ(u)² − u² = 3u²` to be
/// a nonzero square. That holds for `p > 3` and fails for `p = 3`, where
/// `3u² = 0`; characteristic 3 is rejected.
pub fn example1_construct(ctx: &FieldCtx) -> Result<PlanarCandidate> {
    let ell = example1_ell(ctx)?;
    if ctx.p() == 3 {
        return Err(FamilyError::BadParams(
            "in characteristic 3, l(u)^2 - u^2 = 3u^2 vanishes on F_q".into(),
        ));
    }
    quadratic_candidate(ctx, ell)
}

/// Generalized construction: `α ∈ F_q` with `α² − 1` a nonzero square, and a
/// linearized permutation `ℓ` with `ℓ(u) = αu` on F_q.
pub fn example1_general(ctx: &FieldCtx, alpha: Element, ell: LinearizedPoly) -> Result<PlanarCandidate> {
    require_n(ctx, 2)?;
    if !ctx.in_base(alpha) {
        return Err(FamilyError::BadParams("alpha must lie in F_q".into()));
    }
    let disc = ctx.sub(ctx.mul(alpha, alpha), Element::ONE);
    if ctx.eta_base(disc) != 1 {
        return Err(FamilyError::BadParams("alpha^2 - 1 must be a nonzero square in F_q".into()));
    }
    if !ell.is_permutation(ctx) {
        return Err(FamilyError::BadParams("l must permute the field".into()));
    }
    let base = Subspace::base_field(ctx);
    if base.basis().iter().any(|&u| ell.eval(ctx, u) != ctx.mul(alpha, u)) {
        return Err(FamilyError::BadParams("l must act as multiplication by alpha on F_q".into()));
    }
    quadratic_candidate(ctx, ell)
}
