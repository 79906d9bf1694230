//! Linearized polynomials `ℓ(x) = Σ c_t x^{p^t}` and the F_p-subspaces they cut out.
//!
//! [`LinearizedPoly`] is always reduced modulo `x^{p^{mn}} − x`, so it carries
//! exactly `mn` coefficients and is determined by the map it induces.
//! [`FormalLinPoly`] keeps the unreduced p-degree; it is needed where the
//! polynomial identity itself matters, e.g. `h∘g = x^{p^{mn}} − x`.

mod lemma;
mod subspace;

pub use lemma::{annihilator_poly, image_poly_for_subspace};
pub use subspace::{GrayWalk, Subspace};

use crate::field::{Element, FieldCtx};
use crate::fpmat::FpMatrix;
use serde_json::{Map, Value};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinPolyError {
    #[error("polynomial belongs to F_{{{}^{{{}}}}}, not F_{{{}^{{{}}}}}", .found.p, .found.degree, .expected.p, .expected.degree)]
    CtxMismatch { expected: CtxKey, found: CtxKey },
    #[error("expected {expected} coefficients, got {found}")]
    BadLength { expected: usize, found: usize },
    #[error("coefficient {0} is not a field element")]
    BadCoefficient(u32),
    #[error("triangular recursion inconsistent at coefficient {0}")]
    InconsistentRecursion(usize),
    #[error("malformed polynomial JSON: {0}")]
    Json(String),
}

/// The part of a context a polynomial depends on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CtxKey {
    pub p: u32,
    pub degree: u32,
}

impl CtxKey {
    pub fn of(ctx: &FieldCtx) -> Self {
        Self { p: ctx.p(), degree: ctx.degree() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearizedPoly {
    key: CtxKey,
    coeffs: Vec<Element>,
}

impl LinearizedPoly {
    pub fn zero(ctx: &FieldCtx) -> Self {
        Self { key: CtxKey::of(ctx), coeffs: vec![Element::ZERO; ctx.degree() as usize] }
    }

    pub fn identity(ctx: &FieldCtx) -> Self {
        Self::monomial(ctx, Element::ONE, 0)
    }

    /// `x^{p^t}`.
    pub fn frobenius(ctx: &FieldCtx, t: u32) -> Self {
        Self::monomial(ctx, Element::ONE, t)
    }

    /// `c·x^{p^t}`, with `t` taken mod `mn`.
    pub fn monomial(ctx: &FieldCtx, c: Element, t: u32) -> Self {
        let mut l = Self::zero(ctx);
        l.coeffs[(t % ctx.degree()) as usize] = c;
        l
    }

    pub fn from_coeffs(ctx: &FieldCtx, coeffs: Vec<Element>) -> Result<Self, LinPolyError> {
        if coeffs.len() != ctx.degree() as usize {
            return Err(LinPolyError::BadLength { expected: ctx.degree() as usize, found: coeffs.len() });
        }
        if let Some(c) = coeffs.iter().find(|c| c.index() >= ctx.size()) {
            return Err(LinPolyError::BadCoefficient(c.index()));
        }
        Ok(Self { key: CtxKey::of(ctx), coeffs })
    }

    pub fn key(&self) -> CtxKey {
        self.key
    }

    pub fn coeffs(&self) -> &[Element] {
        &self.coeffs
    }

    pub fn coeff(&self, t: usize) -> Element {
        self.coeffs[t]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn check(&self, ctx: &FieldCtx) -> Result<(), LinPolyError> {
        let k = CtxKey::of(ctx);
        if k != self.key {
            return Err(LinPolyError::CtxMismatch { expected: k, found: self.key });
        }
        Ok(())
    }

    fn check_pair(&self, other: &Self) -> Result<(), LinPolyError> {
        if self.key != other.key {
            return Err(LinPolyError::CtxMismatch { expected: self.key, found: other.key });
        }
        Ok(())
    }

    #[inline]
    pub fn eval(&self, ctx: &FieldCtx, x: Element) -> Element {
        debug_assert_eq!(CtxKey::of(ctx), self.key);
        let mut acc = Element::ZERO;
        for (t, &c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc = ctx.add(acc, ctx.mul(c, ctx.frobenius(x, t as u32)));
            }
        }
        acc
    }

    /// `self ∘ other`, reduced mod `x^{p^{mn}} − x`.
    pub fn compose(&self, ctx: &FieldCtx, other: &Self) -> Result<Self, LinPolyError> {
        self.check(ctx)?;
        self.check_pair(other)?;
        let d = ctx.degree() as usize;
        let mut out = vec![Element::ZERO; d];
        for (s, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (t, &b) in other.coeffs.iter().enumerate() {
                let term = ctx.mul(a, ctx.frobenius(b, s as u32));
                out[(s + t) % d] = ctx.add(out[(s + t) % d], term);
            }
        }
        Ok(Self { key: self.key, coeffs: out })
    }

    pub fn add(&self, ctx: &FieldCtx, other: &Self) -> Result<Self, LinPolyError> {
        self.check_pair(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| ctx.add(a, b)).collect();
        Ok(Self { key: self.key, coeffs })
    }

    pub fn sub(&self, ctx: &FieldCtx, other: &Self) -> Result<Self, LinPolyError> {
        self.check_pair(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| ctx.sub(a, b)).collect();
        Ok(Self { key: self.key, coeffs })
    }

    /// `c·ℓ(x)`.
    pub fn scale(&self, ctx: &FieldCtx, c: Element) -> Self {
        let coeffs = self.coeffs.iter().map(|&a| ctx.mul(c, a)).collect();
        Self { key: self.key, coeffs }
    }

    /// `ℓ(λx)`.
    pub fn precompose_scalar(&self, ctx: &FieldCtx, lambda: Element) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(t, &a)| ctx.mul(a, ctx.frobenius(lambda, t as u32)))
            .collect();
        Self { key: self.key, coeffs }
    }

    /// `ℓ(x)^{p^e}`.
    pub fn frobenius_power(&self, ctx: &FieldCtx, e: u32) -> Self {
        let d = ctx.degree() as usize;
        let mut out = vec![Element::ZERO; d];
        for (t, &a) in self.coeffs.iter().enumerate() {
            out[(t + e as usize) % d] = ctx.frobenius(a, e);
        }
        Self { key: self.key, coeffs: out }
    }

    /// Matrix over the power basis `1, α, …, α^{mn−1}`: column `j` holds the
    /// digits of `ℓ(α^j)`.
    pub fn as_matrix(&self, ctx: &FieldCtx) -> FpMatrix {
        let d = ctx.degree() as usize;
        let cols: Vec<Vec<u32>> = (0..d)
            .map(|j| ctx.digits(self.eval(ctx, Element::from_index(ctx.p_pow(j as u32)))))
            .collect();
        FpMatrix::from_columns(ctx.p(), d, &cols)
    }

    pub fn rank(&self, ctx: &FieldCtx) -> usize {
        self.as_matrix(ctx).rank()
    }

    pub fn kernel(&self, ctx: &FieldCtx) -> Subspace {
        let vecs: Vec<Element> = self
            .as_matrix(ctx)
            .nullspace()
            .iter()
            .map(|v| ctx.from_digits(v).expect("digits in range"))
            .collect();
        Subspace::span(ctx, &vecs)
    }

    pub fn image(&self, ctx: &FieldCtx) -> Subspace {
        let vecs: Vec<Element> = self
            .as_matrix(ctx)
            .column_space()
            .iter()
            .map(|v| ctx.from_digits(v).expect("digits in range"))
            .collect();
        Subspace::span(ctx, &vecs)
    }

    pub fn is_permutation(&self, ctx: &FieldCtx) -> bool {
        self.rank(ctx) == ctx.degree() as usize
    }

    /// `{"coeffs": {"t": "<digits>", …}}` with zero terms omitted.
    pub fn to_json(&self, ctx: &FieldCtx) -> Value {
        let mut map = Map::new();
        for (t, &c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                map.insert(t.to_string(), Value::String(ctx.format_element(c)));
            }
        }
        serde_json::json!({ "coeffs": map })
    }

    pub fn from_json(ctx: &FieldCtx, v: &Value) -> Result<Self, LinPolyError> {
        let bad = |s: &str| LinPolyError::Json(s.to_string());
        let map = v
            .get("coeffs")
            .and_then(Value::as_object)
            .ok_or_else(|| bad("missing \"coeffs\" object"))?;
        let mut l = Self::zero(ctx);
        for (k, val) in map {
            let t: usize = k.parse().map_err(|_| bad(&format!("term key {k:?}")))?;
            if t >= ctx.degree() as usize {
                return Err(bad(&format!("term {t} exceeds the extension degree")));
            }
            let s = val.as_str().ok_or_else(|| bad("coefficient must be a digit string"))?;
            l.coeffs[t] = ctx.parse_element(s).map_err(|e| bad(&e.to_string()))?;
        }
        Ok(l)
    }
}

/// A linearized polynomial with unreduced p-degree: `coeffs[t]` multiplies
/// `x^{p^t}` for any `t`, trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FormalLinPoly {
    coeffs: Vec<Element>,
}

impl FormalLinPoly {
    pub fn new(mut coeffs: Vec<Element>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn x() -> Self {
        Self { coeffs: vec![Element::ONE] }
    }

    /// `x^{p^{mn}} − x`.
    pub fn full_field(ctx: &FieldCtx) -> Self {
        let mut c = vec![Element::ZERO; ctx.degree() as usize + 1];
        c[0] = ctx.neg(Element::ONE);
        c[ctx.degree() as usize] = Element::ONE;
        Self { coeffs: c }
    }

    pub fn coeffs(&self) -> &[Element] {
        &self.coeffs
    }

    /// The largest `t` with a nonzero coefficient, or `None` for zero.
    pub fn p_degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&Element::ONE)
    }

    pub fn eval(&self, ctx: &FieldCtx, x: Element) -> Element {
        self.coeffs.iter().enumerate().fold(Element::ZERO, |acc, (t, &c)| {
            ctx.add(acc, ctx.mul(c, ctx.frobenius(x, t as u32)))
        })
    }

    /// Composition without reducing exponents.
    pub fn compose(&self, ctx: &FieldCtx, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::new(Vec::new());
        }
        let mut out = vec![Element::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (s, &a) in self.coeffs.iter().enumerate() {
            for (t, &b) in other.coeffs.iter().enumerate() {
                out[s + t] = ctx.add(out[s + t], ctx.mul(a, ctx.frobenius(b, s as u32)));
            }
        }
        Self::new(out)
    }

    pub fn reduce(&self, ctx: &FieldCtx) -> LinearizedPoly {
        let d = ctx.degree() as usize;
        let mut l = LinearizedPoly::zero(ctx);
        for (t, &c) in self.coeffs.iter().enumerate() {
            l.coeffs[t % d] = ctx.add(l.coeffs[t % d], c);
        }
        l
    }
}

impl From<&LinearizedPoly> for FormalLinPoly {
    fn from(l: &LinearizedPoly) -> Self {
        Self::new(l.coeffs.clone())
    }
}
