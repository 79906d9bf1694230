use super::{quadratic_candidate, require_n, FamilyError, Result};
use crate::field::{Element, FieldCtx};
use crate::linpoly::LinearizedPoly;
use crate::planarity::PlanarCandidate;
use crate::poly::gcd_u64;

/// `ℓ(x) = (b x^q + c x)^{p^k} − c_0 (b x^q + c x)` on F_{q^2} with
/// `b, c ≠ 0`, `N(b) = N(c)` and `0 < k < m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NbcFamilyParams {
    pub k: u32,
    pub b: Element,
    pub c: Element,
    pub c0: Element,
}

impl NbcFamilyParams {
    pub fn new(ctx: &FieldCtx, k: u32, b: Element, c: Element, c0: Element) -> Result<Self> {
        require_n(ctx, 2)?;
        if k == 0 || k >= ctx.m() {
            return Err(FamilyError::BadParams(format!("need 0 < k < m, got k = {k}")));
        }
        if b.is_zero() || c.is_zero() {
            return Err(FamilyError::BadParams("b and c must be nonzero".into()));
        }
        if ctx.rel_norm(b) != ctx.rel_norm(c) {
            return Err(FamilyError::BadParams("N(b) != N(c)".into()));
        }
        Ok(Self { k, b, c, c0 })
    }

    /// `b = 1, c = −1`, the setting of the worked examples.
    pub fn unit(ctx: &FieldCtx, k: u32, c0: Element) -> Result<Self> {
        Self::new(ctx, k, Element::ONE, ctx.neg(Element::ONE), c0)
    }

    pub fn ell(&self, ctx: &FieldCtx) -> LinearizedPoly {
        let inner = LinearizedPoly::monomial(ctx, self.b, ctx.m())
            .add(ctx, &LinearizedPoly::monomial(ctx, self.c, 0))
            .expect("same field");
        inner.frobenius_power(ctx, self.k).sub(ctx, &inner.scale(ctx, self.c0)).expect("same field")
    }

    pub fn candidate(&self, ctx: &FieldCtx) -> PlanarCandidate {
        quadratic_candidate(ctx, self.ell(ctx)).expect("validated parameters")
    }

    /// `(K, R)` with `K = (b^{−1}c^q)^{p^k} − 1`, `R = b^{−1}c^q c_0^q − c_0`.
    fn third_equation(&self, ctx: &FieldCtx) -> (Element, Element) {
        let m = ctx.m();
        let binv = ctx.inv(self.b).expect("b nonzero");
        let s = ctx.mul(binv, ctx.frobenius(self.c, m));
        let k = ctx.sub(ctx.frobenius(s, self.k), Element::ONE);
        let r = ctx.sub(ctx.mul(s, ctx.frobenius(self.c0, m)), self.c0);
        (k, r)
    }
}

/// Each condition of the theorem, in both forms where both apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NbcEvaluation {
    pub bullets: [bool; 3],
    /// The power-test forms of bullets two and three, when `d | q − 1`.
    pub simplified: Option<[bool; 2]>,
}

impl NbcEvaluation {
    pub fn planar(&self) -> bool {
        self.bullets.iter().all(|&b| b)
    }
}

/// Evaluates all conditions. Bullets two and three are decided by listing
/// the solutions of `ω^{p^k−1} = rhs` through discrete logs.
pub fn theorem_nbc_evaluate(ctx: &FieldCtx, params: &NbcFamilyParams) -> NbcEvaluation {
    let q = ctx.q() as u64;
    let m = ctx.m();
    let e = ctx.p_pow(params.k) as u64 - 1;
    let cinv = ctx.inv(params.c).expect("c nonzero");
    let binv = ctx.inv(params.b).expect("b nonzero");
    let first = ctx.pow(ctx.mul(binv, params.c), q.div_ceil(2)) == ctx.neg(Element::ONE);

    // α^{q−1} = b^q c^{−1}
    let target = ctx.mul(ctx.frobenius(params.b, m), cinv);
    let avoids = |rhs: Element| {
        ctx.power_preimages(rhs, e).into_iter().all(|w| ctx.pow(w, q - 1) != target)
    };
    let second = avoids(params.c0);
    let (kk, rr) = params.third_equation(ctx);
    let third = if kk.is_zero() {
        // 0 = R: no solutions unless R = 0, in which case every ω solves it
        !rr.is_zero()
    } else {
        avoids(ctx.div(rr, kk).expect("K nonzero"))
    };

    let order = (ctx.size() - 1) as u64;
    let d = gcd_u64(e, order);
    let simplified = (q - 1).is_multiple_of(d).then(|| {
        let t = ctx.pow(target, e / d);
        let s2 = ctx.pow(params.c0, (q - 1) / d) != t;
        let s3 = ctx.pow(rr, (q - 1) / d) != ctx.mul(ctx.pow(kk, (q - 1) / d), t);
        [s2, s3]
    });
    NbcEvaluation { bullets: [first, second, third], simplified }
}

/// The predicate, with the simplified form cross-checked when it applies.
pub fn theorem_nbc_predicate(ctx: &FieldCtx, params: &NbcFamilyParams) -> Result<bool> {
    let ev = theorem_nbc_evaluate(ctx, params);
    if let Some([s2, s3]) = ev.simplified {
        if s2 != ev.bullets[1] || s3 != ev.bullets[2] {
            return Err(FamilyError::FormsDisagree);
        }
    }
    Ok(ev.planar())
}

/// First worked recipe (`b = 1, c = −1`): neither `c_0` nor `Tr(c_0)/2` is a
/// `(p^k − 1)`-th power of a nonzero element.
pub fn example2_recipe_one(ctx: &FieldCtx, k: u32, c0: Element) -> bool {
    let e = ctx.p_pow(k) as u64 - 1;
    let half_tr = ctx.mul(ctx.rel_trace(c0), super::half(ctx));
    !ctx.is_power(c0, e) && !ctx.is_power(half_tr, e)
}

/// Second worked recipe (`b = 1, c = −1`, `gcd(k, 2m) | m`): `c_0 ∉ F_q` and
/// `(Tr(c_0)/2)^{(q−1)/d} ≠ (−1)^{(p^k−1)/d}`. `None` when `gcd(k, 2m) ∤ m`.
pub fn example2_recipe_two(ctx: &FieldCtx, k: u32, c0: Element) -> Option<bool> {
    if !ctx.m().is_multiple_of(gcd_u64(k as u64, 2 * ctx.m() as u64) as u32) {
        return None;
    }
    let q = ctx.q() as u64;
    let e = ctx.p_pow(k) as u64 - 1;
    let d = gcd_u64(e, (ctx.size() - 1) as u64);
    let half_tr = ctx.mul(ctx.rel_trace(c0), super::half(ctx));
    let minus_one = ctx.neg(Element::ONE);
    Some(!ctx.in_base(c0) && ctx.pow(half_tr, (q - 1) / d) != ctx.pow(minus_one, e / d))
}
