use super::SearchError;
use crate::config::Config;
use crate::families::{
    cubic_theorem_predicate, example1_construct, theorem_monomial_predicate, theorem_nbc_predicate,
    CubicCoeffs, MonomialFamilyParams, NbcFamilyParams,
};
use crate::field::{Element, FieldCtx};
use crate::linpoly::LinearizedPoly;
use crate::planarity::{criterion_quadratic, PlanarCandidate};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

/// Declarative description of a sweep, loadable from JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SearchJob {
    pub p: u32,
    pub m: u32,
    pub n: u32,
    /// `monomial-ell`, `binomial-ell`, `cubic`, `monomial`, `nbc` or `example1`.
    pub family: String,
    /// Predicate names run before the oracle, in order.
    #[serde(default)]
    pub filters: Vec<String>,
    /// `rank`, `bruteforce` or `reduction`.
    #[serde(default = "default_oracle")]
    pub oracle: String,
    #[serde(default)]
    pub sample: Sample,
    /// Family parameter `k`, default 1.
    #[serde(default)]
    pub k: Option<u32>,
    /// `b`, `c` for the nbc family (default `1`, `−1`).
    #[serde(default)]
    pub b: Option<String>,
    #[serde(default)]
    pub c: Option<String>,
    /// Values of `a` for the cubic family (default `1` and the generator).
    #[serde(default)]
    pub a_values: Option<Vec<String>>,
    /// Largest domain accepted in exhaustive mode.
    #[serde(default = "default_exhaustive_limit")]
    pub exhaustive_limit: u64,
    /// Include per-candidate wall-clock timings (makes output nondeterministic).
    #[serde(default)]
    pub timing: bool,
}

fn default_oracle() -> String {
    "rank".into()
}

fn default_exhaustive_limit() -> u64 {
    1 << 24
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum Sample {
    #[default]
    Exhaustive,
    /// `count` candidates drawn with the configured seed.
    Seeded { count: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Oracle {
    Rank,
    Bruteforce,
    Reduction,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Filter {
    CriterionN2,
    CriterionN3,
    TheoremMonomial,
    TheoremNbc,
}

impl Filter {
    pub fn parse(s: &str) -> Result<Self, SearchError> {
        match s {
            "criterion-n2" => Ok(Self::CriterionN2),
            "criterion-n3" => Ok(Self::CriterionN3),
            "theorem-monomial" => Ok(Self::TheoremMonomial),
            "theorem-nbc" => Ok(Self::TheoremNbc),
            other => Err(SearchError::UnknownFilter(other.into())),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::CriterionN2 => "criterion-n2",
            Self::CriterionN3 => "criterion-n3",
            Self::TheoremMonomial => "theorem-monomial",
            Self::TheoremNbc => "theorem-nbc",
        }
    }
}

/// Candidate spaces, each with a canonical index order.
#[derive(Debug, Clone)]
pub enum Domain {
    /// `(a, b, t)` with `ℓ = b·x^{p^t}`.
    MonomialEll,
    /// `(a, {t1 < t2}, b1, b2)` with `ℓ = b1·x^{p^{t1}} + b2·x^{p^{t2}}`.
    BinomialEll { pairs: Vec<(u32, u32)> },
    /// `(a, coefficients)` for every linearized `ℓ` on F_{q^3}.
    Cubic { a_values: Vec<Element> },
    /// `(b, c)` for `ℓ = (b x^q + c x)^{p^k}`; tuples with `N(b) = N(c)` are skipped.
    TheoremMonomial { k: u32 },
    /// `c_0` for `ℓ = (b x^q + c x)^{p^k} − c_0(b x^q + c x)`.
    Nbc { k: u32, b: Element, c: Element },
    /// The single Example 1 candidate.
    Example1,
}

/// A decoded domain point.
pub struct Point {
    pub cand: PlanarCandidate,
    pub params: Params,
}

pub enum Params {
    None,
    Monomial(MonomialFamilyParams),
    Nbc(NbcFamilyParams),
    Cubic(CubicCoeffs),
}

impl Domain {
    pub fn size(&self, ctx: &FieldCtx) -> u64 {
        let n = ctx.size() as u64;
        let d = ctx.degree() as u64;
        match self {
            Domain::MonomialEll => n * n * d,
            Domain::BinomialEll { pairs } => n * pairs.len() as u64 * n * n,
            Domain::Cubic { a_values } => (a_values.len() as u64).saturating_mul(n.saturating_pow(d as u32)),
            Domain::TheoremMonomial { .. } => n * n,
            Domain::Nbc { .. } => n,
            Domain::Example1 => 1,
        }
    }

    /// The point at `idx`, or `None` for tuples outside the family.
    pub fn decode(&self, ctx: &FieldCtx, idx: u64) -> Option<Point> {
        let n = ctx.size() as u64;
        let d = ctx.degree() as u64;
        let el = |i: u64| Element::from_index(i as u32);
        let plain = |a: Element, ell: LinearizedPoly| Point {
            cand: PlanarCandidate::new(ctx, a, ell).expect("same field"),
            params: Params::None,
        };
        match self {
            Domain::MonomialEll => {
                let (t, rest) = (idx % d, idx / d);
                let (b, a) = (rest % n, rest / n);
                Some(plain(el(a), LinearizedPoly::monomial(ctx, el(b), t as u32)))
            }
            Domain::BinomialEll { pairs } => {
                let (b2, rest) = (idx % n, idx / n);
                let (b1, rest) = (rest % n, rest / n);
                let np = pairs.len() as u64;
                let (pi, a) = (rest % np, rest / np);
                let (t1, t2) = pairs[pi as usize];
                let ell = LinearizedPoly::monomial(ctx, el(b1), t1)
                    .add(ctx, &LinearizedPoly::monomial(ctx, el(b2), t2))
                    .expect("same field");
                Some(plain(el(a), ell))
            }
            Domain::Cubic { a_values } => {
                let per_a = n.pow(d as u32);
                let a = a_values[(idx / per_a) as usize];
                let mut rest = idx % per_a;
                // the last coefficient varies fastest
                let mut coeffs = vec![Element::ZERO; d as usize];
                for t in (0..d as usize).rev() {
                    coeffs[t] = el(rest % n);
                    rest /= n;
                }
                let ell = LinearizedPoly::from_coeffs(ctx, coeffs).expect("in range");
                let cc = CubicCoeffs::from_ell(ctx, &ell).expect("n = 3");
                Some(Point { cand: PlanarCandidate::new(ctx, a, ell).expect("same field"), params: Params::Cubic(cc) })
            }
            Domain::TheoremMonomial { k } => {
                let p = MonomialFamilyParams::new(ctx, *k, el(idx / n), el(idx % n)).ok()?;
                Some(Point { cand: p.candidate(ctx), params: Params::Monomial(p) })
            }
            Domain::Nbc { k, b, c } => {
                let p = NbcFamilyParams::new(ctx, *k, *b, *c, el(idx)).ok()?;
                Some(Point { cand: p.candidate(ctx), params: Params::Nbc(p) })
            }
            Domain::Example1 => {
                let cand = example1_construct(ctx).ok()?;
                Some(Point { cand, params: Params::None })
            }
        }
    }

    pub fn allows(&self, ctx: &FieldCtx, f: Filter) -> bool {
        match f {
            Filter::CriterionN2 => ctx.n() == 2,
            Filter::CriterionN3 => ctx.n() == 3,
            Filter::TheoremMonomial => matches!(self, Domain::TheoremMonomial { .. }),
            Filter::TheoremNbc => matches!(self, Domain::Nbc { .. }),
        }
    }
}

impl Point {
    pub fn params_json(&self, ctx: &FieldCtx) -> Value {
        let e = |x: Element| ctx.format_element(x);
        match &self.params {
            Params::None => Value::Null,
            Params::Monomial(p) => json!({"k": p.k, "b": e(p.b), "c": e(p.c)}),
            Params::Nbc(p) => json!({"k": p.k, "b": e(p.b), "c": e(p.c), "c0": e(p.c0)}),
            Params::Cubic(cc) => {
                let rows: Vec<Vec<String>> =
                    cc.b.iter().map(|row| row.iter().map(|&x| e(x)).collect()).collect();
                json!({"b": rows})
            }
        }
    }

    pub fn apply(&self, ctx: &FieldCtx, f: Filter) -> Result<bool, SearchError> {
        Ok(match (f, &self.params) {
            (Filter::CriterionN2, _) => criterion_quadratic(ctx, &self.cand)?,
            (Filter::CriterionN3, Params::Cubic(cc)) if !self.cand.a.is_zero() => {
                cubic_theorem_predicate(ctx, self.cand.a, cc)?
            }
            (Filter::CriterionN3, _) if self.cand.a.is_zero() => self.cand.ell.is_permutation(ctx),
            (Filter::CriterionN3, _) => {
                let cc = CubicCoeffs::from_ell(ctx, &self.cand.ell)?;
                cubic_theorem_predicate(ctx, self.cand.a, &cc)?
            }
            (Filter::TheoremMonomial, Params::Monomial(p)) => theorem_monomial_predicate(ctx, p),
            (Filter::TheoremNbc, Params::Nbc(p)) => theorem_nbc_predicate(ctx, p)?,
            (f, _) => return Err(SearchError::FilterNotApplicable(f.name().into())),
        })
    }
}

/// A job checked against its field, ready to run.
pub struct Plan {
    pub ctx: FieldCtx,
    pub domain: Domain,
    pub filters: Vec<Filter>,
    pub oracle: Oracle,
    pub size: u64,
}

impl SearchJob {
    pub fn plan(&self, cfg: &Config) -> Result<Plan, SearchError> {
        let ctx = FieldCtx::with_table_cap(self.p, self.m, self.n, cfg.table_cap)?;
        let parse = |s: &str| ctx.parse_element(s).map_err(SearchError::from);
        let k = self.k.unwrap_or(1);
        let domain = match self.family.as_str() {
            "monomial-ell" => Domain::MonomialEll,
            "binomial-ell" => {
                let d = ctx.degree();
                let pairs = (0..d).flat_map(|a| (a + 1..d).map(move |b| (a, b))).collect();
                Domain::BinomialEll { pairs }
            }
            "cubic" => {
                if self.n != 3 {
                    return Err(SearchError::Invalid("the cubic family needs n = 3".into()));
                }
                let a_values = match &self.a_values {
                    Some(v) => v.iter().map(|s| parse(s)).collect::<Result<Vec<_>, _>>()?,
                    None => vec![Element::ONE, ctx.generator()],
                };
                Domain::Cubic { a_values }
            }
            "monomial" => Domain::TheoremMonomial { k },
            "nbc" => {
                let b = self.b.as_deref().map(parse).transpose()?.unwrap_or(Element::ONE);
                let c = self.c.as_deref().map(parse).transpose()?.unwrap_or(ctx.neg(Element::ONE));
                NbcFamilyParams::new(&ctx, k, b, c, Element::ZERO)?;
                Domain::Nbc { k, b, c }
            }
            "example1" => Domain::Example1,
            other => return Err(SearchError::UnknownFamily(other.into())),
        };
        if matches!(domain, Domain::TheoremMonomial { .. })
            && (self.n != 2 || k == 0 || k >= self.m) {
                return Err(SearchError::Invalid("the monomial family needs n = 2 and 0 < k < m".into()));
            }
        let filters = self.filters.iter().map(|s| Filter::parse(s)).collect::<Result<Vec<_>, _>>()?;
        if let Some(f) = filters.iter().find(|&&f| !domain.allows(&ctx, f)) {
            return Err(SearchError::FilterNotApplicable(f.name().into()));
        }
        let oracle = match self.oracle.as_str() {
            "rank" => Oracle::Rank,
            "bruteforce" => Oracle::Bruteforce,
            "reduction" => Oracle::Reduction,
            other => return Err(SearchError::UnknownOracle(other.into())),
        };
        if oracle != Oracle::Rank && ctx.size() as u64 > cfg.brute_cap {
            return Err(SearchError::Invalid(format!(
                "oracle {} needs at most {} field elements",
                self.oracle, cfg.brute_cap
            )));
        }
        let size = domain.size(&ctx);
        if self.sample == Sample::Exhaustive && size > self.exhaustive_limit {
            return Err(SearchError::DomainTooLarge { size, limit: self.exhaustive_limit });
        }
        Ok(Plan { ctx, domain, filters, oracle, size })
    }
}
