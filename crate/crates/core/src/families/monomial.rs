use super::{quadratic_candidate, require_n, FamilyError, Result};
use crate::field::{Element, FieldCtx};
use crate::linpoly::LinearizedPoly;
use crate::planarity::PlanarCandidate;

/// `ℓ(x) = (b x^q + c x)^{p^k}` on F_{q^2} with `N(b) ≠ N(c)` and `0 < k < m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MonomialFamilyParams {
    pub k: u32,
    pub b: Element,
    pub c: Element,
}

impl MonomialFamilyParams {
    pub fn new(ctx: &FieldCtx, k: u32, b: Element, c: Element) -> Result<Self> {
        require_n(ctx, 2)?;
        if k == 0 || k >= ctx.m() {
            return Err(FamilyError::BadParams(format!("need 0 < k < m, got k = {k}")));
        }
        if ctx.rel_norm(b) == ctx.rel_norm(c) {
            return Err(FamilyError::BadParams("N(b) = N(c)".into()));
        }
        Ok(Self { k, b, c })
    }

    /// `b^{p^k} x^{p^{m+k}} + c^{p^k} x^{p^k}`.
    pub fn ell(&self, ctx: &FieldCtx) -> LinearizedPoly {
        let inner = LinearizedPoly::monomial(ctx, self.b, ctx.m())
            .add(ctx, &LinearizedPoly::monomial(ctx, self.c, 0))
            .expect("same field");
        inner.frobenius_power(ctx, self.k)
    }

    pub fn candidate(&self, ctx: &FieldCtx) -> PlanarCandidate {
        quadratic_candidate(ctx, self.ell(ctx)).expect("validated parameters")
    }
}

/// Planar iff `p^k ≡ 1 (mod 4)`, `m = 2k` and
/// `N(b − c^q)^{(p^k+1)/2} = −(N(b) − N(c))^{p^k+1}`.
pub fn theorem_monomial_predicate(ctx: &FieldCtx, params: &MonomialFamilyParams) -> bool {
    let pk = ctx.p_pow(params.k) as u64;
    if pk % 4 != 1 || ctx.m() != 2 * params.k {
        return false;
    }
    let (b, c) = (params.b, params.c);
    let lhs = ctx.pow(ctx.rel_norm(ctx.sub(b, ctx.frobenius(c, ctx.m()))), pk.div_ceil(2));
    let diff = ctx.sub(ctx.rel_norm(b), ctx.rel_norm(c));
    let rhs = ctx.neg(ctx.pow(diff, pk + 1));
    lhs == rhs
}
