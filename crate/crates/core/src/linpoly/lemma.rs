//! Subspace polynomials and the linearized polynomial whose image is a given subspace.

use super::{FormalLinPoly, LinPolyError, Subspace};
use crate::field::{Element, FieldCtx};

/// The monic `g_V(x) = Π_{ξ∈V} (x − ξ)`, of p-degree `dim V`.
///
/// Built one basis vector at a time: `g_{V+⟨ξ⟩} = g_V^p − g_V(ξ)^{p−1}·g_V`.
pub fn annihilator_poly(ctx: &FieldCtx, v: &Subspace) -> FormalLinPoly {
    let mut g = FormalLinPoly::x();
    for &xi in v.basis() {
        let gx = g.eval(ctx, xi);
        let s = ctx.pow(gx, ctx.p() as u64 - 1);
        let k = g.coeffs().len();
        let mut next = vec![Element::ZERO; k + 1];
        for (t, &c) in g.coeffs().iter().enumerate() {
            next[t + 1] = ctx.add(next[t + 1], ctx.frobenius(c, 1));
            next[t] = ctx.sub(next[t], ctx.mul(s, c));
        }
        g = FormalLinPoly::new(next);
    }
    g
}

/// A monic `g` of p-degree `mn − dim W` with `g(F) = W`.
///
/// `h = annihilator_poly(W)` has p-degree `k`, and `g` is the unique monic
/// solution of `h∘g = x^{p^{mn}} − x`. Writing `g = Σ α_t x^{p^t}`, the
/// coefficient of `x^{p^j}` in `h∘g` is `Σ_s h_s α_{j−s}^{p^s}`; taking
/// `j = mn−1, …, k` in turn isolates `α_{j−k}^{p^k}`, which is inverted by a
/// Frobenius power. The remaining coefficients `j < k` are then checked.
pub fn image_poly_for_subspace(ctx: &FieldCtx, w: &Subspace) -> Result<FormalLinPoly, LinPolyError> {
    let d = ctx.degree() as usize;
    let h = annihilator_poly(ctx, w);
    let k = w.dim();
    debug_assert_eq!(h.p_degree(), Some(k));
    let hc = h.coeffs();
    let target = FormalLinPoly::full_field(ctx);
    let tc = target.coeffs();
    let mut alpha = vec![Element::ZERO; d - k + 1];
    alpha[d - k] = Element::ONE;
    let term = |alpha: &[Element], j: usize, s: usize| {
        if s > j || j - s > d - k {
            Element::ZERO
        } else {
            ctx.mul(hc[s], ctx.frobenius(alpha[j - s], s as u32))
        }
    };
    for j in (k..d).rev() {
        let mut rhs = tc[j];
        for s in 0..k {
            rhs = ctx.sub(rhs, term(&alpha, j, s));
        }
        alpha[j - k] = ctx.frobenius_root(rhs, k as u32);
    }
    for j in 0..k {
        let lhs = (0..=j).fold(Element::ZERO, |acc, s| ctx.add(acc, term(&alpha, j, s)));
        if lhs != tc[j] {
            return Err(LinPolyError::InconsistentRecursion(j));
        }
    }
    Ok(FormalLinPoly::new(alpha))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linpoly::LinearizedPoly;

    #[test]
    fn trivial_cases() {
        let ctx = FieldCtx::new(3, 1, 3).unwrap();
        assert_eq!(annihilator_poly(&ctx, &Subspace::zero()), FormalLinPoly::x());
        assert_eq!(annihilator_poly(&ctx, &Subspace::full(&ctx)), FormalLinPoly::full_field(&ctx));
        let g = image_poly_for_subspace(&ctx, &Subspace::full(&ctx)).unwrap();
        assert_eq!(g, FormalLinPoly::x());
    }

    #[test]
    fn base_field_annihilator_is_x_q_minus_x() {
        let ctx = FieldCtx::new(3, 2, 2).unwrap();
        let h = annihilator_poly(&ctx, &Subspace::base_field(&ctx));
        let mut expect = vec![Element::ZERO; 3];
        expect[0] = ctx.neg(Element::ONE);
        expect[2] = Element::ONE;
        assert_eq!(h, FormalLinPoly::new(expect));
    }

    #[test]
    fn round_trip_on_f27() {
        let ctx = FieldCtx::new(3, 1, 3).unwrap();
        for k in 0..=3 {
            for w in Subspace::enumerate(&ctx, k) {
                let g = image_poly_for_subspace(&ctx, &w).unwrap();
                assert!(g.is_monic());
                let lin: LinearizedPoly = g.reduce(&ctx);
                assert_eq!(lin.image(&ctx), w);
                let h = annihilator_poly(&ctx, &w);
                assert_eq!(h.compose(&ctx, &g), FormalLinPoly::full_field(&ctx));
            }
        }
    }
}
