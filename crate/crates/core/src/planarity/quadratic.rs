use super::{PlanarCandidate, PlanarityError, Result};
use crate::field::FieldCtx;
use crate::linpoly::LinearizedPoly;

/// For `n = 2`, `Tr(a x^{q+1}) = Tr(a)·x^{q+1}`. Returns `Tr(a)^{−1}ℓ`, the `ℓ`
/// of the equivalent function `x^{q+1} + ℓ(x²)`, or `None` when `Tr(a) = 0`.
pub fn normalize_quadratic(ctx: &FieldCtx, cand: &PlanarCandidate) -> Result<Option<LinearizedPoly>> {
    if ctx.n() != 2 {
        return Err(PlanarityError::NotQuadratic(ctx.n()));
    }
    let t = ctx.rel_trace(cand.a);
    if t.is_zero() {
        return Ok(None);
    }
    Ok(Some(cand.ell.scale(ctx, ctx.inv(t)?)))
}

/// Closed-form planarity test on F_{q^2}.
///
/// With `Tr(a) = 0` the function is `ℓ(x²)`, planar iff `ℓ` permutes. Otherwise
/// after normalizing, `x^{q+1} + ℓ(x²)` is planar iff `ℓ(u)² − N(u)` is a
/// nonzero square in F_q for every nonzero `u` with `ℓ(u) ∈ F_q`; those `u`
/// form the kernel of `ℓ^q − ℓ`, which is walked in Gray-code order.
pub fn criterion_quadratic(ctx: &FieldCtx, cand: &PlanarCandidate) -> Result<bool> {
    let Some(ell) = normalize_quadratic(ctx, cand)? else {
        return Ok(cand.ell.is_permutation(ctx));
    };
    let fixed = ell.frobenius_power(ctx, ctx.m()).sub(ctx, &ell)?;
    let kernel = fixed.kernel(ctx);
    for u in kernel.walk(ctx).skip(1) {
        let lu = ell.eval(ctx, u);
        let disc = ctx.sub(ctx.mul(lu, lu), ctx.rel_norm(u));
        if ctx.eta_base(disc) != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}
