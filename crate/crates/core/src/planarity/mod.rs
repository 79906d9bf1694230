//! Planarity of `f(x) = Tr(a·x^{q+1}) + ℓ(x²)` on F_{q^n}.
//!
//! `f` is planar when `x ↦ f(x+c) − f(x)` permutes the field for every
//! `c ≠ 0`. Since `f` is Dembowski–Ostrom,
//! `f(x+v) − f(x) − f(v) = Tr(a v x^q + a v^q x) + 2ℓ(vx)` is F_p-linear in
//! `x`, which gives three independent tests: direct difference tables
//! ([`is_planar_bruteforce`]), the rank of that linear map
//! ([`is_planar_rank`]), and the substitution `u = vx`
//! ([`is_planar_reduction`]). [`criterion_quadratic`] is the closed-form
//! test for `n = 2`.

mod brute;
mod quadratic;
mod rank;
mod reduction;

pub use brute::{eval_general, is_planar_bruteforce, is_planar_bruteforce_general, BruteForcer, Monomial};
pub use quadratic::{criterion_quadratic, normalize_quadratic};
pub use rank::{is_planar_rank, BilinearForm};
pub use reduction::{is_planar_reduction, is_planar_reduction_unfiltered};

use crate::field::{CtxSpec, Element, FieldCtx, FieldError};
use crate::linpoly::{CtxKey, LinPolyError, LinearizedPoly};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PlanarityError {
    #[error("field with {size} elements exceeds the cap {cap} for this method")]
    TooLarge { size: u64, cap: u64 },
    #[error("the quadratic criterion needs n = 2, got n = {0}")]
    NotQuadratic(u32),
    #[error("candidate does not belong to this field")]
    CtxMismatch,
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    LinPoly(#[from] LinPolyError),
    #[error("malformed candidate JSON: {0}")]
    Json(String),
}

pub type Result<T, E = PlanarityError> = std::result::Result<T, E>;

/// `f(x) = Tr(a·x^{q+1}) + ℓ(x²)`. The field is passed alongside.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlanarCandidate {
    pub a: Element,
    pub ell: LinearizedPoly,
}

impl PlanarCandidate {
    pub fn new(ctx: &FieldCtx, a: Element, ell: LinearizedPoly) -> Result<Self> {
        if ell.key() != CtxKey::of(ctx) || a.index() >= ctx.size() {
            return Err(PlanarityError::CtxMismatch);
        }
        Ok(Self { a, ell })
    }

    #[inline]
    pub fn eval(&self, ctx: &FieldCtx, x: Element) -> Element {
        eval_f(ctx, self, x)
    }

    /// The candidate `f(λx)`, i.e. `(a·λ^{q+1}, ℓ∘(λ²·))`.
    pub fn substitute(&self, ctx: &FieldCtx, lambda: Element) -> Self {
        let q = ctx.q() as u64;
        Self {
            a: ctx.mul(self.a, ctx.pow(lambda, q + 1)),
            ell: self.ell.precompose_scalar(ctx, ctx.mul(lambda, lambda)),
        }
    }

    /// The candidate `μ·f` for `μ ∈ F_q^*`.
    pub fn scale(&self, ctx: &FieldCtx, mu: Element) -> Self {
        debug_assert!(ctx.in_base(mu));
        Self { a: ctx.mul(mu, self.a), ell: self.ell.scale(ctx, mu) }
    }

    /// Field evaluation table `f(0), f(1), …` in index order.
    pub fn table(&self, ctx: &FieldCtx) -> Vec<Element> {
        ctx.elements().map(|x| self.eval(ctx, x)).collect()
    }

    /// `{"ctx":{…},"a":"<digits>","ell":{"coeffs":{…}}}`.
    pub fn to_json(&self, ctx: &FieldCtx) -> Value {
        serde_json::json!({
            "ctx": ctx.spec(),
            "a": ctx.format_element(self.a),
            "ell": self.ell.to_json(ctx),
        })
    }

    /// Parses a candidate together with the context it lives in.
    pub fn from_json(v: &Value, table_cap: u64) -> Result<(FieldCtx, Self)> {
        let bad = |s: String| PlanarityError::Json(s);
        let spec: CtxSpec = serde_json::from_value(v.get("ctx").cloned().ok_or_else(|| bad("missing \"ctx\"".into()))?)
            .map_err(|e| bad(e.to_string()))?;
        let ctx = FieldCtx::from_spec(&spec, table_cap)?;
        let a = match v.get("a") {
            None => Element::ZERO,
            Some(Value::String(s)) => ctx.parse_element(s)?,
            Some(_) => return Err(bad("\"a\" must be a digit string".into())),
        };
        let ell = match v.get("ell") {
            None => LinearizedPoly::zero(&ctx),
            Some(e) => LinearizedPoly::from_json(&ctx, e)?,
        };
        let cand = Self::new(&ctx, a, ell)?;
        Ok((ctx, cand))
    }
}

/// `Tr(a·x^{q+1}) + ℓ(x²)`.
#[inline]
pub fn eval_f(ctx: &FieldCtx, cand: &PlanarCandidate, x: Element) -> Element {
    let xq1 = ctx.mul(ctx.frobenius(x, ctx.m()), x);
    ctx.add(ctx.rel_trace(ctx.mul(cand.a, xq1)), cand.ell.eval(ctx, ctx.mul(x, x)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Method {
    #[serde(rename = "bruteforce")]
    Bruteforce,
    #[serde(rename = "rank")]
    Rank,
    #[serde(rename = "reduction")]
    Reduction,
    #[serde(rename = "criterion-n2")]
    CriterionN2,
    #[serde(rename = "criterion-n3")]
    CriterionN3,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Bruteforce => "bruteforce",
            Method::Rank => "rank",
            Method::Reduction => "reduction",
            Method::CriterionN2 => "criterion-n2",
            Method::CriterionN3 => "criterion-n3",
        }
    }
}

/// `c ≠ 0` and `x1 ≠ x2` with `f(x1+c) − f(x1) = f(x2+c) − f(x2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Witness {
    pub c: Element,
    pub x1: Element,
    pub x2: Element,
}

impl Witness {
    /// Re-evaluates the collision with an arbitrary function.
    pub fn verify_with(&self, ctx: &FieldCtx, f: impl Fn(Element) -> Element) -> bool {
        if self.c.is_zero() || self.x1 == self.x2 {
            return false;
        }
        let d = |x: Element| ctx.sub(f(ctx.add(x, self.c)), f(x));
        d(self.x1) == d(self.x2)
    }

    pub fn verify(&self, ctx: &FieldCtx, cand: &PlanarCandidate) -> bool {
        self.verify_with(ctx, |x| cand.eval(ctx, x))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub planar: bool,
    pub method: Method,
    pub witness: Option<Witness>,
    /// Wall-clock milliseconds.
    pub ms: f64,
}

#[derive(Serialize, Deserialize)]
struct WitnessJson {
    c: String,
    x1: String,
    x2: String,
}

#[derive(Serialize, Deserialize)]
struct ReportJson {
    planar: bool,
    method: Method,
    witness: Option<WitnessJson>,
    ms: f64,
}

impl VerificationReport {
    pub(crate) fn from_witness(method: Method, witness: Option<Witness>, start: std::time::Instant) -> Self {
        Self { planar: witness.is_none(), method, witness, ms: start.elapsed().as_secs_f64() * 1e3 }
    }

    pub fn to_json(&self, ctx: &FieldCtx) -> Value {
        let r = ReportJson {
            planar: self.planar,
            method: self.method,
            witness: self.witness.map(|w| WitnessJson {
                c: ctx.format_element(w.c),
                x1: ctx.format_element(w.x1),
                x2: ctx.format_element(w.x2),
            }),
            ms: self.ms,
        };
        serde_json::to_value(r).expect("report serializes")
    }

    pub fn from_json(ctx: &FieldCtx, v: &Value) -> Result<Self> {
        let r: ReportJson = serde_json::from_value(v.clone()).map_err(|e| PlanarityError::Json(e.to_string()))?;
        let witness = match r.witness {
            None => None,
            Some(w) => Some(Witness {
                c: ctx.parse_element(&w.c)?,
                x1: ctx.parse_element(&w.x1)?,
                x2: ctx.parse_element(&w.x2)?,
            }),
        };
        if r.planar == witness.is_some() {
            return Err(PlanarityError::Json("planar reports carry no witness, others must".into()));
        }
        Ok(Self { planar: r.planar, method: r.method, witness, ms: r.ms })
    }
}

pub(crate) fn check_cap(ctx: &FieldCtx, cap: u64) -> Result<()> {
    if ctx.size() as u64 > cap {
        return Err(PlanarityError::TooLarge { size: ctx.size() as u64, cap });
    }
    Ok(())
}
