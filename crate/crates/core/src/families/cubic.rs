use super::{require_n, FamilyError, Result};
use crate::field::{Element, FieldCtx};
use crate::linpoly::LinearizedPoly;

/// Coefficients `b_{ij}` of `ℓ(x) = Σ_{i<m} Σ_{j<3} b_{ij} x^{p^i q^j}` on F_{q^3}.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CubicCoeffs {
    /// `b[i][j]`.
    pub b: Vec<[Element; 3]>,
}

impl CubicCoeffs {
    pub fn from_ell(ctx: &FieldCtx, ell: &LinearizedPoly) -> Result<Self> {
        require_n(ctx, 3)?;
        let m = ctx.m() as usize;
        let b = (0..m).map(|i| [0, 1, 2].map(|j| ell.coeff(i + m * j))).collect();
        Ok(Self { b })
    }

    pub fn to_ell(&self, ctx: &FieldCtx) -> Result<LinearizedPoly> {
        require_n(ctx, 3)?;
        let m = ctx.m() as usize;
        if self.b.len() != m {
            return Err(FamilyError::BadParams(format!("expected {m} rows of coefficients")));
        }
        let mut coeffs = vec![Element::ZERO; 3 * m];
        for (i, row) in self.b.iter().enumerate() {
            for (j, &c) in row.iter().enumerate() {
                coeffs[i + m * j] = c;
            }
        }
        Ok(LinearizedPoly::from_coeffs(ctx, coeffs)?)
    }
}

/// `Tr(a x^{q+1}) + ℓ(x²)` on F_{q^3} is planar iff `ℓ` permutes and
/// `Σ_j b_{ij} a^{2p^i q^{j+1}}` is `N(a)` for `i = 0` and zero otherwise.
pub fn cubic_theorem_predicate(ctx: &FieldCtx, a: Element, coeffs: &CubicCoeffs) -> Result<bool> {
    if a.is_zero() {
        return Err(FamilyError::BadParams("a must be nonzero".into()));
    }
    let ell = coeffs.to_ell(ctx)?;
    if !ell.is_permutation(ctx) {
        return Ok(false);
    }
    Ok(coefficient_identities(ctx, a, coeffs))
}

fn coefficient_identities(ctx: &FieldCtx, a: Element, coeffs: &CubicCoeffs) -> bool {
    let m = ctx.m();
    let a2 = ctx.mul(a, a);
    let na = ctx.rel_norm(a);
    coeffs.b.iter().enumerate().all(|(i, row)| {
        let sum = row.iter().enumerate().fold(Element::ZERO, |acc, (j, &b)| {
            ctx.add(acc, ctx.mul(b, ctx.frobenius(a2, i as u32 + m * (j as u32 + 1))))
        });
        sum == if i == 0 { na } else { Element::ZERO }
    })
}

/// True iff `Tr(A x^{q−1} + B x^{1−q}) + r` has no root in F_{q^3}^*, decided
/// in closed form: `Q = (N(A) + N(B))/(AB)` must lie in F_q, be nonzero and
/// equal `r`. When `AB ∉ F_q` a root always exists.
pub fn cubic_lemma_predicate(ctx: &FieldCtx, a: Element, b: Element, r: Element) -> Result<bool> {
    check_lemma_args(ctx, a, b, r)?;
    let ab = ctx.mul(a, b);
    if !ctx.in_base(ab) {
        return Ok(false);
    }
    let q = ctx.div(ctx.add(ctx.rel_norm(a), ctx.rel_norm(b)), ab)?;
    Ok(!q.is_zero() && q == r)
}

/// The same question, answered by evaluating at every `x ≠ 0`.
pub fn cubic_lemma_bruteforce(ctx: &FieldCtx, a: Element, b: Element, r: Element) -> Result<bool> {
    check_lemma_args(ctx, a, b, r)?;
    let m = ctx.m();
    let no_root = ctx.nonzero_elements().all(|x| {
        let xq1 = ctx.div(ctx.frobenius(x, m), x).expect("x nonzero");
        let x1q = ctx.inv(xq1).expect("nonzero");
        let t = ctx.rel_trace(ctx.add(ctx.mul(a, xq1), ctx.mul(b, x1q)));
        !ctx.add(t, r).is_zero()
    });
    Ok(no_root)
}

fn check_lemma_args(ctx: &FieldCtx, a: Element, b: Element, r: Element) -> Result<()> {
    require_n(ctx, 3)?;
    if a.is_zero() || b.is_zero() {
        return Err(FamilyError::BadParams("A and B must be nonzero".into()));
    }
    if !ctx.in_base(r) {
        return Err(FamilyError::BadParams("r must lie in F_q".into()));
    }
    Ok(())
}
