use super::{FamilyError, Result};
use crate::field::{Element, FieldCtx};
use crate::poly::gcd_u64;

/// For `n ≥ 5`, a `u ≠ 0` with `a² u^{q+1} ∈ F_q`, which rules out planarity
/// of every `Tr(a x^{q+1}) + ℓ(x²)`.
///
/// If `a = α^{(q+1)/2}` then `u = α^{−1}`; otherwise, for odd `n`,
/// `gcd(q² − 1, q^n − 1) = q − 1` makes `u^{q²−1} = a^{−2(q−1)}` solvable.
/// Returns `None` when neither hypothesis holds.
pub fn nonexistence_witness(ctx: &FieldCtx, a: Element) -> Result<Option<Element>> {
    if ctx.n() < 5 {
        return Err(FamilyError::BadParams(format!("needs n >= 5, got n = {}", ctx.n())));
    }
    if a.is_zero() {
        return Err(FamilyError::BadParams("a must be nonzero".into()));
    }
    let q = ctx.q() as u64;
    let hyp_power = ctx.is_power(a, q.div_ceil(2));
    let hyp_odd = ctx.n() % 2 == 1;
    let u = if hyp_power {
        let alpha = ctx.power_preimages(a, q.div_ceil(2))[0];
        ctx.inv(alpha)?
    } else if hyp_odd {
        let order = (ctx.size() - 1) as u64;
        debug_assert_eq!(gcd_u64(q * q - 1, order), q - 1);
        let rhs = ctx.inv(ctx.pow(a, 2 * (q - 1)))?;
        match ctx.power_preimages(rhs, q * q - 1).first() {
            Some(&u) => u,
            None => return Err(FamilyError::Internal("u^(q^2-1) = a^(-2(q-1)) has no solution".into())),
        }
    } else {
        return Ok(None);
    };
    let check = ctx.mul(ctx.mul(a, a), ctx.pow(u, q + 1));
    if !ctx.in_base(check) {
        return Err(FamilyError::Internal("a^2 u^(q+1) is not in F_q".into()));
    }
    Ok(Some(u))
}
