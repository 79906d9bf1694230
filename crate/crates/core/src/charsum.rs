//! Character sums over F_q and F_{q^k} behind the counting argument for
//! `n ≥ 5`, and Weil-bound checks for quadratic-character sums.
//!
//! A context with parameters `(p, m, k)` plays the role of F_{q^k} over
//! F_q. Characters are complex doubles.

use crate::field::{AdditiveChar, Element, FieldCtx, MultiplicativeChar};
use crate::linpoly::FormalLinPoly;
use crate::poly;
use num_complex::Complex64;
use serde_json::Value;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CharsumError {
    #[error("c and omega must be nonzero")]
    ZeroParameter,
    #[error("coefficients must lie in the subfield of degree {0}")]
    NotInSubfield(u32),
    #[error("{0} does not divide the extension degree")]
    BadLevel(u32),
    #[error("polynomial is constant or a constant times a square; the Weil bound does not apply")]
    NotWeilAdmissible,
    #[error("polynomial must be monic of degree at least 1")]
    NotMonic,
}

pub type Result<T, E = CharsumError> = std::result::Result<T, E>;

/// A monic polynomial over F_q, coefficients low degree first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonicPoly {
    coeffs: Vec<Element>,
}

impl MonicPoly {
    pub fn new(ctx: &FieldCtx, coeffs: Vec<Element>) -> Result<Self> {
        if coeffs.len() < 2 || coeffs.last() != Some(&Element::ONE) {
            return Err(CharsumError::NotMonic);
        }
        if coeffs.iter().any(|&c| !ctx.in_base(c)) {
            return Err(CharsumError::NotInSubfield(ctx.m()));
        }
        Ok(Self { coeffs })
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Element] {
        &self.coeffs
    }

    /// `α_j` in `g = x^M − α_{M−1}x^{M−1} + ⋯ + (−1)^M α_0`, i.e.
    /// `α_j = (−1)^{M−j} g_j`, with `α_M = 1`.
    pub fn alpha(&self, ctx: &FieldCtx, j: usize) -> Element {
        let g = self.coeffs[j];
        if (self.degree() - j).is_multiple_of(2) { g } else { ctx.neg(g) }
    }

    pub fn mul(&self, ctx: &FieldCtx, other: &Self) -> Self {
        Self { coeffs: poly::mul(ctx, &self.coeffs, &other.coeffs) }
    }

    /// Every monic polynomial of degree `d` over F_q, coefficient vectors in
    /// lexicographic order (constant term most significant last).
    pub fn enumerate(ctx: &FieldCtx, d: usize) -> Vec<Self> {
        let base = ctx.base_elements();
        let q = base.len() as u64;
        let total = q.pow(d as u32);
        (0..total)
            .map(|mut code| {
                let mut coeffs = Vec::with_capacity(d + 1);
                for _ in 0..d {
                    coeffs.push(base[(code % q) as usize]);
                    code /= q;
                }
                coeffs.push(Element::ONE);
                Self { coeffs }
            })
            .collect()
    }

    pub fn is_irreducible(&self, ctx: &FieldCtx) -> bool {
        poly::is_irreducible(ctx, ctx.q() as u64, &self.coeffs)
    }
}

/// `Φ(g) = χ(α_{M−1} + c·α_1·α_0^{−1})·ψ(α_0)`, or 0 when `α_0 = 0`.
pub fn phi(ctx: &FieldCtx, chi: AdditiveChar, psi: MultiplicativeChar, g: &MonicPoly, c: Element) -> Complex64 {
    let a0 = g.alpha(ctx, 0);
    if a0.is_zero() {
        return Complex64::new(0.0, 0.0);
    }
    let m = g.degree();
    let arg = ctx.add(g.alpha(ctx, m - 1), ctx.mul(c, ctx.div(g.alpha(ctx, 1), a0).expect("nonzero")));
    chi.eval(ctx, arg) * psi.eval(ctx, a0)
}

/// `A(k) = Σ_{ξ ≠ 0} χ(Tr(ξ + cξ^{−1}))·ψ(N(ξ))` summed directly over the field.
pub fn a_sum(ctx: &FieldCtx, chi: AdditiveChar, psi: MultiplicativeChar, c: Element) -> Result<Complex64> {
    if c.is_zero() {
        return Err(CharsumError::ZeroParameter);
    }
    Ok(ctx
        .nonzero_elements()
        .map(|xi| {
            let t = ctx.rel_trace(ctx.add(xi, ctx.mul(c, ctx.inv(xi).expect("nonzero"))));
            chi.eval(ctx, t) * psi.eval(ctx, ctx.rel_norm(xi))
        })
        .sum())
}

/// The same sum through minimal polynomials: `Σ_P deg(P)·Φ(P)^{k/deg P}` over
/// monic irreducible `P` over F_q with `deg P | k`.
pub fn a_sum_via_irreducibles(
    ctx: &FieldCtx,
    chi: AdditiveChar,
    psi: MultiplicativeChar,
    c: Element,
) -> Result<Complex64> {
    if c.is_zero() {
        return Err(CharsumError::ZeroParameter);
    }
    let k = ctx.n() as usize;
    let mut total = Complex64::new(0.0, 0.0);
    for d in (1..=k).filter(|d| k.is_multiple_of(*d)) {
        for g in MonicPoly::enumerate(ctx, d) {
            if g.is_irreducible(ctx) {
                total += phi(ctx, chi, psi, &g, c).powu((k / d) as u32) * d as f64;
            }
        }
    }
    Ok(total)
}

/// `Σ_{deg g = d} Φ(g)` over all monic `g` of degree `d`.
pub fn degree_sum(ctx: &FieldCtx, chi: AdditiveChar, psi: MultiplicativeChar, d: usize, c: Element) -> Complex64 {
    MonicPoly::enumerate(ctx, d).iter().map(|g| phi(ctx, chi, psi, g, c)).sum()
}

/// One solution count with its explicit lower bound.
#[derive(Debug, Clone, PartialEq)]
pub struct CountRecord {
    pub k: u32,
    pub upsilon: Element,
    pub omega: Element,
    pub c: Element,
    /// `#{ξ ≠ 0 : Tr(ξ + cξ^{−1}) + υ = 0, ω·N(ξ) = 1}`.
    pub m: u64,
    /// `(q^k − 1 − 2(q−1)q^{k/2} − 2(q−1)(q−2)q^{k/2}) / (q(q−1))`.
    pub bound: f64,
}

impl CountRecord {
    pub fn meets_bound(&self) -> bool {
        self.m as f64 >= self.bound
    }

    pub fn to_json(&self, ctx: &FieldCtx) -> Value {
        serde_json::json!({
            "q": ctx.q(),
            "k": self.k,
            "upsilon": ctx.format_element(self.upsilon),
            "omega": ctx.format_element(self.omega),
            "c": ctx.format_element(self.c),
            "M": self.m,
            "bound": self.bound,
        })
    }
}

/// The lower bound on `M_k`, as a real number.
pub fn count_lower_bound(q: u32, k: u32) -> f64 {
    let q = q as f64;
    let s = q.powf(k as f64 / 2.0);
    (q.powi(k as i32) - 1.0 - 2.0 * (q - 1.0) * s - 2.0 * (q - 1.0) * (q - 2.0) * s) / (q * (q - 1.0))
}

/// Exact count by looping over F_{q^k}^*.
pub fn count_m(ctx: &FieldCtx, upsilon: Element, omega: Element, c: Element) -> Result<CountRecord> {
    if omega.is_zero() || c.is_zero() {
        return Err(CharsumError::ZeroParameter);
    }
    if !ctx.in_base(upsilon) || !ctx.in_base(omega) || !ctx.in_base(c) {
        return Err(CharsumError::NotInSubfield(ctx.m()));
    }
    let m = ctx
        .nonzero_elements()
        .filter(|&xi| {
            let t = ctx.rel_trace(ctx.add(xi, ctx.mul(c, ctx.inv(xi).expect("nonzero"))));
            ctx.add(t, upsilon).is_zero() && ctx.mul(omega, ctx.rel_norm(xi)) == Element::ONE
        })
        .count() as u64;
    Ok(CountRecord { k: ctx.n(), upsilon, omega, c, m, bound: count_lower_bound(ctx.q(), ctx.n()) })
}

/// `Σ_{χ,ψ} χ(υ)ψ(ω)A_{χ,ψ}(k)`, which equals `q(q−1)·M_k(υ, ω)`.
pub fn orthogonality_sum(ctx: &FieldCtx, upsilon: Element, omega: Element, c: Element) -> Result<Complex64> {
    let mut total = Complex64::new(0.0, 0.0);
    for chi in ctx.additive_chars() {
        for psi in ctx.multiplicative_chars() {
            total += chi.eval(ctx, upsilon) * psi.eval(ctx, omega) * a_sum(ctx, chi, psi, c)?;
        }
    }
    Ok(total)
}

/// Elements of F_{p^level} in increasing index order.
pub fn subfield_elements(ctx: &FieldCtx, level: u32) -> Result<Vec<Element>> {
    if level == 0 || !ctx.degree().is_multiple_of(level) {
        return Err(CharsumError::BadLevel(level));
    }
    let size = ctx.p_pow(level);
    let g = ctx.pow(ctx.generator(), ((ctx.size() - 1) / (size - 1)) as u64);
    let mut out = Vec::with_capacity(size as usize);
    out.push(Element::ZERO);
    let mut cur = Element::ONE;
    for _ in 0..size - 1 {
        out.push(cur);
        cur = ctx.mul(cur, g);
    }
    out.sort();
    Ok(out)
}

/// `Σ_{ξ ∈ F_{p^level}} η(g(ξ))` for a dense polynomial `g` over that subfield.
pub fn weil_eta_sum(ctx: &FieldCtx, g: &[Element], level: u32) -> Result<i64> {
    let elems = subfield_elements(ctx, level)?;
    if g.iter().any(|&c| !ctx.in_subfield(c, level)) {
        return Err(CharsumError::NotInSubfield(level));
    }
    let mut sum = 0i64;
    for &x in &elems {
        let v = poly::eval(ctx, g, x);
        sum += ctx.quadratic_character(v, level).expect("value lies in the subfield") as i64;
    }
    Ok(sum)
}

/// `|Σ η(g(ξ))| ≤ (deg g − 1)·√Q`, after checking that `g` is not a constant
/// times a square (all squarefree multiplicities even).
pub fn weil_bound_check(ctx: &FieldCtx, g: &[Element], level: u32) -> Result<bool> {
    let g = poly::trim(ctx, g.to_vec());
    let deg = poly::degree(&g).ok_or(CharsumError::NotWeilAdmissible)?;
    if deg == 0 {
        return Err(CharsumError::NotWeilAdmissible);
    }
    if poly::squarefree_factorization(ctx, &g).iter().all(|(_, mult)| mult % 2 == 0) {
        return Err(CharsumError::NotWeilAdmissible);
    }
    let sum = weil_eta_sum(ctx, &g, level)?;
    let root_q = (ctx.p_pow(level) as f64).sqrt();
    Ok((sum.unsigned_abs() as f64) <= (deg as f64 - 1.0) * root_q + 1e-9)
}

/// Dense form of a linearized polynomial: coefficient at `x^{p^t}`.
pub fn linearized_to_dense(ctx: &FieldCtx, l: &FormalLinPoly) -> Vec<Element> {
    let Some(top) = l.p_degree() else { return Vec::new() };
    let mut out = vec![Element::ZERO; ctx.p_pow(top as u32) as usize + 1];
    for (t, &c) in l.coeffs().iter().enumerate() {
        out[ctx.p_pow(t as u32) as usize] = c;
    }
    out
}

/// `Σ_{u ∈ F_q^*} η(u^{2p^k} − δu²)`, the sum behind the monomial family.
pub fn monomial_family_eta_sum(ctx: &FieldCtx, k: u32, delta: Element) -> Result<i64> {
    let pk = ctx.p_pow(k) as usize;
    let mut g = vec![Element::ZERO; 2 * pk + 1];
    g[2 * pk] = Element::ONE;
    g[2] = ctx.neg(delta);
    weil_eta_sum(ctx, &g, ctx.m())
}
