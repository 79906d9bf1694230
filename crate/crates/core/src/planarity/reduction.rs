use super::{check_cap, Method, PlanarCandidate, Result, VerificationReport, Witness};
use crate::field::{Element, FieldCtx};
use std::time::Instant;

/// Planar iff `Tr(a u^q v^{1−q} + a u v^{q−1}) + 2ℓ(u) ≠ 0` for all `u, v ≠ 0`.
///
/// The trace term lies in F_q, so only `u` with `ℓ(u) ∈ F_q` can give zero.
/// A zero at `(u, v)` means `x = u/v` is a nonzero root of `B(v, ·)`, and the
/// witness is `(c = v, x1 = u/v, x2 = 0)`.
pub fn is_planar_reduction(ctx: &FieldCtx, cand: &PlanarCandidate, cap: u64) -> Result<VerificationReport> {
    reduction(ctx, cand, cap, true)
}

/// [`is_planar_reduction`] without skipping `u` with `ℓ(u) ∉ F_q`.
pub fn is_planar_reduction_unfiltered(
    ctx: &FieldCtx,
    cand: &PlanarCandidate,
    cap: u64,
) -> Result<VerificationReport> {
    reduction(ctx, cand, cap, false)
}

fn reduction(ctx: &FieldCtx, cand: &PlanarCandidate, cap: u64, filter: bool) -> Result<VerificationReport> {
    check_cap(ctx, cap)?;
    let start = Instant::now();
    let m = ctx.m();
    // v^{1−q} and v^{q−1} for every nonzero v
    let powers: Vec<(Element, Element, Element)> = ctx
        .nonzero_elements()
        .map(|v| {
            let vq1 = ctx.div(ctx.frobenius(v, m), v).expect("v nonzero");
            (v, ctx.inv(vq1).expect("nonzero"), vq1)
        })
        .collect();
    let two = ctx.from_int(2);
    let mut witness = None;
    'outer: for u in ctx.nonzero_elements() {
        let lu = cand.ell.eval(ctx, u);
        if filter && !ctx.in_base(lu) {
            continue;
        }
        let tail = ctx.mul(two, lu);
        let auq = ctx.mul(cand.a, ctx.frobenius(u, m));
        let au = ctx.mul(cand.a, u);
        for &(v, v1q, vq1) in &powers {
            let t = ctx.rel_trace(ctx.add(ctx.mul(auq, v1q), ctx.mul(au, vq1)));
            if ctx.add(t, tail).is_zero() {
                let x = ctx.div(u, v).expect("v nonzero");
                witness = Some(Witness { c: v, x1: x, x2: Element::ZERO });
                break 'outer;
            }
        }
    }
    Ok(VerificationReport::from_witness(Method::Reduction, witness, start))
}
