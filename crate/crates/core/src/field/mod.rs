//! Arithmetic in F_{p^{mn}} with the intermediate field F_q, q = p^m, marked.
//!
//! An [`Element`] is an index in `[0, p^{mn})` whose base-p digits are the
//! coefficients of `1, α, α², …`, with α a root of the context modulus. The
//! modulus is the lexicographically smallest monic primitive polynomial of
//! degree `mn` over F_p, so a given `(p, m, n)` always produces the same
//! context and the same element encoding.
//!
//! Two arithmetic back ends share one interface: discrete-log tables (with a
//! Zech table for addition) when the field fits under the table cap, and
//! plain modular polynomial arithmetic otherwise. They agree elementwise.

mod chars;
mod codec;
mod modulus;

pub use chars::{AdditiveChar, MultiplicativeChar};
pub use codec::CtxSpec;

use crate::poly::{self, PrimeField};
use thiserror::Error;

/// Largest field that gets discrete-log tables unless configured otherwise.
pub const DEFAULT_TABLE_CAP: u64 = 1 << 22;
/// Element indices are `u32` and table offsets go up to `2(N-1)`.
pub const MAX_FIELD_SIZE: u64 = 1 << 31;

const NO_LOG: u32 = u32::MAX;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("characteristic {0} is not an odd prime")]
    BadCharacteristic(u64),
    #[error("extension degrees must be positive (m = {m}, n = {n})")]
    ZeroDegree { m: u32, n: u32 },
    #[error("a field with {p}^{degree} elements exceeds the supported size 2^31")]
    SizeOverflow { p: u32, degree: u32 },
    #[error("inverse of zero")]
    InverseOfZero,
    #[error("element index {index} out of range for a field with {size} elements")]
    OutOfRange { index: u64, size: u64 },
    #[error("{0} does not divide the extension degree")]
    BadSubfield(u32),
    #[error("element is not in the subfield of degree {0} over F_p")]
    NotInSubfield(u32),
    #[error("modulus rejected: {0}")]
    BadModulus(String),
    #[error("field invariant violated: {0}")]
    Invariant(String),
    #[error("cannot parse element {0:?}")]
    Parse(String),
}

pub type Result<T, E = FieldError> = std::result::Result<T, E>;

/// A field element, identified by its canonical index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Element(u32);

impl Element {
    pub const ZERO: Element = Element(0);
    pub const ONE: Element = Element(1);

    /// Wraps a raw index. Range is checked by [`FieldCtx::element`], not here.
    pub const fn from_index(index: u32) -> Self {
        Element(index)
    }

    pub const fn index(self) -> u32 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }
}

struct Tables {
    /// `log[e]` for nonzero `e`; `log[0]` is unused.
    log: Vec<u32>,
    /// `exp[i] = g^i` for `i < 2(N-1)`, doubled so sums of two logs need no reduction.
    exp: Vec<u32>,
    /// `zech[s] = log(1 + g^s)`, or `NO_LOG` where `1 + g^s = 0`.
    zech: Vec<u32>,
}

/// Immutable description of F_{p^{mn}} with the subfield F_{p^m} identified.
pub struct FieldCtx {
    p: u32,
    m: u32,
    n: u32,
    degree: u32,
    size: u32,
    q: u32,
    modulus: Vec<u32>,
    generator: Element,
    /// `p^i` for `i = 0..=degree`.
    pow_p: Vec<u32>,
    /// `p^i mod (N-1)` for `i < degree`.
    frob_exp: Vec<u64>,
    tables: Option<Tables>,
}

impl std::fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FieldCtx")
            .field("p", &self.p)
            .field("m", &self.m)
            .field("n", &self.n)
            .field("modulus", &self.modulus)
            .field("generator", &self.generator)
            .field("tables", &self.tables.is_some())
            .finish()
    }
}

fn validate_params(p: u32, m: u32, n: u32) -> Result<u32> {
    if p == 2 || !poly::is_prime(p as u64) {
        return Err(FieldError::BadCharacteristic(p as u64));
    }
    if m == 0 || n == 0 {
        return Err(FieldError::ZeroDegree { m, n });
    }
    let degree = m.checked_mul(n).ok_or(FieldError::SizeOverflow { p, degree: u32::MAX })?;
    let mut size = 1u64;
    for _ in 0..degree {
        size *= p as u64;
        if size > MAX_FIELD_SIZE {
            return Err(FieldError::SizeOverflow { p, degree });
        }
    }
    Ok(degree)
}

impl FieldCtx {
    /// Deterministic context for F_{p^{mn}} with the default table cap.
    pub fn new(p: u32, m: u32, n: u32) -> Result<Self> {
        Self::with_table_cap(p, m, n, DEFAULT_TABLE_CAP)
    }

    pub fn with_table_cap(p: u32, m: u32, n: u32, table_cap: u64) -> Result<Self> {
        let degree = validate_params(p, m, n)?;
        let modulus = modulus::smallest_primitive(p, degree);
        let ctx = Self::assemble(p, m, n, modulus, None, table_cap);
        Ok(ctx)
    }

    /// Context over an explicitly supplied monic irreducible modulus.
    pub fn with_modulus(p: u32, m: u32, n: u32, modulus: Vec<u32>, table_cap: u64) -> Result<Self> {
        let degree = validate_params(p, m, n)?;
        if modulus.len() != degree as usize + 1 || modulus.last() != Some(&1) {
            return Err(FieldError::BadModulus(format!(
                "expected a monic polynomial of degree {degree}"
            )));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(FieldError::BadModulus("coefficient out of range".into()));
        }
        let fp = PrimeField { p };
        if !poly::is_irreducible(&fp, p as u64, &modulus) {
            return Err(FieldError::BadModulus("not irreducible over F_p".into()));
        }
        let mut ctx = Self::assemble(p, m, n, modulus, None, 0);
        let generator = ctx.smallest_primitive_element();
        ctx = Self::assemble(p, m, n, ctx.modulus, Some(generator), table_cap);
        Ok(ctx)
    }

    /// Builds tables from an arbitrary modulus without validating it.
    ///
    /// Exists so invariant checks can be exercised against a broken context;
    /// [`FieldCtx::check_invariants`] rejects anything built from a bad modulus.
    #[doc(hidden)]
    pub fn from_modulus_unchecked(p: u32, m: u32, n: u32, modulus: Vec<u32>) -> Result<Self> {
        validate_params(p, m, n)?;
        Ok(Self::assemble(p, m, n, modulus, None, DEFAULT_TABLE_CAP))
    }

    fn assemble(
        p: u32,
        m: u32,
        n: u32,
        modulus: Vec<u32>,
        generator: Option<Element>,
        table_cap: u64,
    ) -> Self {
        let degree = m * n;
        let pow_p: Vec<u32> = (0..=degree).map(|i| p.pow(i)).collect();
        let size = pow_p[degree as usize];
        let order = (size - 1) as u64;
        let frob_exp = (0..degree).map(|i| pow_p[i as usize] as u64 % order.max(1)).collect();
        let x = if degree == 1 { Element((p - modulus[0]) % p) } else { Element(p) };
        let mut ctx = Self {
            p,
            m,
            n,
            degree,
            size,
            q: pow_p[m as usize],
            modulus,
            generator: generator.unwrap_or(x),
            pow_p,
            frob_exp,
            tables: None,
        };
        if (size as u64) <= table_cap {
            ctx.tables = Some(ctx.build_tables());
        }
        ctx
    }

    fn build_tables(&self) -> Tables {
        let n = self.size as usize;
        let order = n - 1;
        let mut log = vec![NO_LOG; n];
        let mut exp = vec![0u32; 2 * order];
        let mut cur = Element::ONE;
        for i in 0..order {
            exp[i] = cur.0;
            exp[i + order] = cur.0;
            if log[cur.0 as usize] == NO_LOG {
                log[cur.0 as usize] = i as u32;
            }
            cur = self.poly_mul(cur, self.generator);
        }
        let p = self.p;
        let zech = (0..order)
            .map(|s| {
                let y = exp[s];
                let one_plus = if y % p == p - 1 { y - (p - 1) } else { y + 1 };
                if one_plus == 0 { NO_LOG } else { log[one_plus as usize] }
            })
            .collect();
        Tables { log, exp, zech }
    }

    fn smallest_primitive_element(&self) -> Element {
        let order = (self.size - 1) as u64;
        let factors = poly::prime_factors(order);
        (1..self.size)
            .map(Element)
            .find(|&g| factors.iter().all(|&r| self.poly_pow(g, order / r) != Element::ONE))
            .expect("a finite field has a primitive element")
    }

    pub fn p(&self) -> u32 {
        self.p
    }
    pub fn m(&self) -> u32 {
        self.m
    }
    pub fn n(&self) -> u32 {
        self.n
    }
    /// Extension degree `mn` over the prime field.
    pub fn degree(&self) -> u32 {
        self.degree
    }
    /// Number of elements `p^{mn}`.
    pub fn size(&self) -> u32 {
        self.size
    }
    /// Size of the intermediate field F_q.
    pub fn q(&self) -> u32 {
        self.q
    }
    /// Modulus coefficients, constant term first; the last entry is 1.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }
    pub fn generator(&self) -> Element {
        self.generator
    }
    pub fn has_tables(&self) -> bool {
        self.tables.is_some()
    }
    /// `p^i` for `i <= degree`.
    pub fn p_pow(&self, i: u32) -> u32 {
        self.pow_p[i as usize]
    }

    pub fn element(&self, index: u64) -> Result<Element> {
        if index >= self.size as u64 {
            return Err(FieldError::OutOfRange { index, size: self.size as u64 });
        }
        Ok(Element(index as u32))
    }

    /// All elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = Element> + Clone {
        (0..self.size).map(Element)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Element> + Clone {
        (1..self.size).map(Element)
    }

    /// The image of an integer in the prime field.
    pub fn from_int(&self, k: i64) -> Element {
        Element(k.rem_euclid(self.p as i64) as u32)
    }

    pub fn digits(&self, x: Element) -> Vec<u32> {
        let mut v = x.0;
        (0..self.degree)
            .map(|_| {
                let d = v % self.p;
                v /= self.p;
                d
            })
            .collect()
    }

    pub fn from_digits(&self, digits: &[u32]) -> Result<Element> {
        if digits.len() > self.degree as usize {
            return Err(FieldError::Parse(format!("{digits:?}")));
        }
        let mut idx = 0u32;
        for (i, &d) in digits.iter().enumerate() {
            if d >= self.p {
                return Err(FieldError::Parse(format!("{digits:?}")));
            }
            idx += d * self.pow_p[i];
        }
        Ok(Element(idx))
    }

    /// Digit `i` (coefficient of α^i) of `x`.
    #[inline]
    pub fn digit(&self, x: Element, i: u32) -> u32 {
        (x.0 / self.pow_p[i as usize]) % self.p
    }

    #[inline]
    pub fn add(&self, a: Element, b: Element) -> Element {
        match &self.tables {
            Some(t) => {
                if a.0 == 0 {
                    return b;
                }
                if b.0 == 0 {
                    return a;
                }
                let order = self.size - 1;
                let la = t.log[a.0 as usize];
                let lb = t.log[b.0 as usize];
                let d = if lb >= la { lb - la } else { lb + order - la };
                let z = t.zech[d as usize];
                if z == NO_LOG {
                    Element::ZERO
                } else {
                    Element(t.exp[(la + z) as usize])
                }
            }
            None => self.digit_add(a, b),
        }
    }

    #[inline]
    pub fn neg(&self, a: Element) -> Element {
        if a.0 == 0 {
            return a;
        }
        match &self.tables {
            Some(t) => Element(t.exp[(t.log[a.0 as usize] + (self.size - 1) / 2) as usize]),
            None => self.digit_neg(a),
        }
    }

    #[inline]
    pub fn sub(&self, a: Element, b: Element) -> Element {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        if a.0 == 0 || b.0 == 0 {
            return Element::ZERO;
        }
        match &self.tables {
            Some(t) => Element(t.exp[(t.log[a.0 as usize] + t.log[b.0 as usize]) as usize]),
            None => self.poly_mul(a, b),
        }
    }

    pub fn inv(&self, a: Element) -> Result<Element> {
        if a.0 == 0 {
            return Err(FieldError::InverseOfZero);
        }
        Ok(match &self.tables {
            Some(t) => Element(t.exp[(self.size - 1 - t.log[a.0 as usize]) as usize]),
            None => self.poly_pow(a, self.size as u64 - 2),
        })
    }

    pub fn div(&self, a: Element, b: Element) -> Result<Element> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^e` with the convention `0^0 = 1`.
    pub fn pow(&self, a: Element, e: u64) -> Element {
        if e == 0 {
            return Element::ONE;
        }
        if a.0 == 0 {
            return Element::ZERO;
        }
        match &self.tables {
            Some(t) => {
                let order = (self.size - 1) as u64;
                let l = (t.log[a.0 as usize] as u64 * (e % order)) % order;
                Element(t.exp[l as usize])
            }
            None => self.poly_pow(a, e),
        }
    }

    /// `x^{p^e}` with `e` taken mod `mn`.
    #[inline]
    pub fn frobenius(&self, x: Element, e: u32) -> Element {
        let e = e % self.degree;
        if e == 0 || x.0 == 0 {
            return x;
        }
        match &self.tables {
            Some(t) => {
                let order = (self.size - 1) as u64;
                let l = (t.log[x.0 as usize] as u64 * self.frob_exp[e as usize]) % order;
                Element(t.exp[l as usize])
            }
            None => self.poly_pow(x, self.pow_p[e as usize] as u64),
        }
    }

    /// The unique `y` with `y^{p^e} = x`.
    pub fn frobenius_root(&self, x: Element, e: u32) -> Element {
        let e = e % self.degree;
        self.frobenius(x, self.degree - e)
    }

    /// Trace from F_{p^from} down to F_{p^to}; `to` must divide `from`.
    pub fn subfield_trace(&self, x: Element, from: u32, to: u32) -> Element {
        debug_assert!(from.is_multiple_of(to));
        (0..from / to).fold(Element::ZERO, |acc, i| self.add(acc, self.frobenius(x, to * i)))
    }

    /// Norm from F_{p^from} down to F_{p^to}; `to` must divide `from`.
    pub fn subfield_norm(&self, x: Element, from: u32, to: u32) -> Element {
        debug_assert!(from.is_multiple_of(to));
        let e = (self.pow_p[from as usize] as u64 - 1) / (self.pow_p[to as usize] as u64 - 1);
        self.pow(x, e)
    }

    /// Relative trace F_{q^n} -> F_q.
    #[inline]
    pub fn rel_trace(&self, x: Element) -> Element {
        self.subfield_trace(x, self.degree, self.m)
    }

    /// Relative norm F_{q^n} -> F_q.
    #[inline]
    pub fn rel_norm(&self, x: Element) -> Element {
        self.subfield_norm(x, self.degree, self.m)
    }

    /// Whether `x` lies in F_{p^level}, tested as `x^{p^level} = x`.
    pub fn in_subfield(&self, x: Element, level: u32) -> bool {
        level > 0 && self.degree.is_multiple_of(level) && self.frobenius(x, level) == x
    }

    /// Whether `x` lies in F_q.
    #[inline]
    pub fn in_base(&self, x: Element) -> bool {
        self.frobenius(x, self.m) == x
    }

    /// Quadratic character of F_{p^level} evaluated at `x`: +1, -1 or 0.
    pub fn quadratic_character(&self, x: Element, level: u32) -> Result<i8> {
        if level == 0 || !self.degree.is_multiple_of(level) {
            return Err(FieldError::BadSubfield(level));
        }
        if !self.in_subfield(x, level) {
            return Err(FieldError::NotInSubfield(level));
        }
        Ok(self.eta_unchecked(x, level))
    }

    /// Quadratic character of F_q; `x` must lie in F_q.
    #[inline]
    pub fn eta_base(&self, x: Element) -> i8 {
        debug_assert!(self.in_base(x));
        self.eta_unchecked(x, self.m)
    }

    fn eta_unchecked(&self, x: Element, level: u32) -> i8 {
        if x.0 == 0 {
            return 0;
        }
        let half = (self.pow_p[level as usize] as u64 - 1) / 2;
        let y = self.pow(x, half);
        if y == Element::ONE {
            1
        } else {
            debug_assert_eq!(y, self.neg(Element::ONE));
            -1
        }
    }

    /// Discrete logarithm to the base [`FieldCtx::generator`].
    pub fn discrete_log(&self, x: Element) -> Option<u64> {
        if x.0 == 0 {
            return None;
        }
        match &self.tables {
            Some(t) => Some(t.log[x.0 as usize] as u64),
            None => self.bsgs_log(x),
        }
    }

    fn bsgs_log(&self, x: Element) -> Option<u64> {
        let order = (self.size - 1) as u64;
        let step = (order as f64).sqrt().ceil() as u64 + 1;
        let mut baby = std::collections::HashMap::with_capacity(step as usize);
        let mut cur = Element::ONE;
        for j in 0..step {
            baby.entry(cur).or_insert(j);
            cur = self.poly_mul(cur, self.generator);
        }
        let giant = self.poly_pow(self.poly_pow(self.generator, step), order - 1);
        let mut y = x;
        for i in 0..=step {
            if let Some(&j) = baby.get(&y) {
                return Some((i * step + j) % order);
            }
            y = self.poly_mul(y, giant);
        }
        None
    }

    /// Every `ω ≠ 0` with `ω^e = r`, in increasing discrete-log order.
    pub fn power_preimages(&self, r: Element, e: u64) -> Vec<Element> {
        let Some(l) = self.discrete_log(r) else { return Vec::new() };
        let order = (self.size - 1) as u64;
        let d = poly::gcd_u64(e % order, order);
        if l % d != 0 {
            return Vec::new();
        }
        let step = order / d;
        let s0 = ((l / d) as u128 * mod_inverse((e / d) % step, step) as u128 % step.max(1) as u128) as u64;
        (0..d).map(|j| self.pow(self.generator, s0 + j * step)).collect()
    }

    /// Whether `r` is an `e`-th power of a nonzero element.
    pub fn is_power(&self, r: Element, e: u64) -> bool {
        if r.is_zero() {
            return false;
        }
        let order = (self.size - 1) as u64;
        let d = poly::gcd_u64(e % order, order);
        self.pow(r, order / d) == Element::ONE
    }

    /// A generator of F_q^*.
    pub fn base_generator(&self) -> Element {
        self.pow(self.generator, ((self.size - 1) / (self.q - 1)) as u64)
    }

    /// Elements of F_q in increasing index order.
    pub fn base_elements(&self) -> Vec<Element> {
        let g = self.base_generator();
        let mut out = Vec::with_capacity(self.q as usize);
        out.push(Element::ZERO);
        let mut cur = Element::ONE;
        for _ in 0..self.q - 1 {
            out.push(cur);
            cur = self.mul(cur, g);
        }
        out.sort();
        out
    }

    /// Element with relative trace 1, namely `n^{-1}` when `p` does not divide `n`.
    pub fn unit_trace_element(&self) -> Element {
        let n = self.from_int(self.n as i64);
        if !n.is_zero() {
            return self.inv(n).expect("nonzero");
        }
        let y = self
            .nonzero_elements()
            .find(|&y| !self.rel_trace(y).is_zero())
            .expect("the trace is surjective");
        let t = self.rel_trace(y);
        self.div(y, t).expect("nonzero trace")
    }

    // ---- polynomial-mode arithmetic, also used to build and audit tables ----

    fn digit_add(&self, a: Element, b: Element) -> Element {
        let (mut x, mut y, mut out) = (a.0, b.0, 0u32);
        for i in 0..self.degree as usize {
            let d = (x % self.p + y % self.p) % self.p;
            out += d * self.pow_p[i];
            x /= self.p;
            y /= self.p;
        }
        Element(out)
    }

    fn digit_neg(&self, a: Element) -> Element {
        let (mut x, mut out) = (a.0, 0u32);
        for i in 0..self.degree as usize {
            let d = (self.p - x % self.p) % self.p;
            out += d * self.pow_p[i];
            x /= self.p;
        }
        Element(out)
    }

    /// Multiplication by modular polynomial arithmetic, independent of the tables.
    pub fn poly_mul(&self, a: Element, b: Element) -> Element {
        let d = self.degree as usize;
        let p = self.p as u64;
        let da = self.digits(a);
        let db = self.digits(b);
        let mut prod = vec![0u64; 2 * d - 1];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        for k in (d..2 * d - 1).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            for j in 0..d {
                let sub = c * self.modulus[j] as u64 % p;
                prod[k - d + j] = (prod[k - d + j] + p - sub) % p;
            }
            prod[k] = 0;
        }
        let mut idx = 0u32;
        for i in 0..d {
            idx += prod[i] as u32 * self.pow_p[i];
        }
        Element(idx)
    }

    /// Exponentiation by polynomial arithmetic only.
    pub fn poly_pow(&self, a: Element, mut e: u64) -> Element {
        let mut acc = Element::ONE;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.poly_mul(acc, base);
            }
            e >>= 1;
            if e > 0 {
                base = self.poly_mul(base, base);
            }
        }
        acc
    }

    /// Addition by base-p digits only.
    pub fn poly_add(&self, a: Element, b: Element) -> Element {
        self.digit_add(a, b)
    }

    /// Re-verifies the construction invariants: irreducible modulus, a
    /// generator of full order, and mutually inverse log/exp tables.
    pub fn check_invariants(&self) -> Result<()> {
        let fp = PrimeField { p: self.p };
        if self.modulus.len() != self.degree as usize + 1 || self.modulus.last() != Some(&1) {
            return Err(FieldError::Invariant("modulus is not monic of degree mn".into()));
        }
        if !poly::is_irreducible(&fp, self.p as u64, &self.modulus) {
            return Err(FieldError::Invariant("modulus is reducible over F_p".into()));
        }
        let order = (self.size - 1) as u64;
        if self.poly_pow(self.generator, order) != Element::ONE {
            return Err(FieldError::Invariant("generator^(N-1) != 1".into()));
        }
        for r in poly::prime_factors(order) {
            if self.poly_pow(self.generator, order / r) == Element::ONE {
                return Err(FieldError::Invariant(format!(
                    "generator order divides (N-1)/{r}"
                )));
            }
        }
        if let Some(t) = &self.tables {
            for e in 1..self.size {
                let l = t.log[e as usize];
                if l == NO_LOG || t.exp[l as usize] != e {
                    return Err(FieldError::Invariant(format!("exp[log[{e}]] != {e}")));
                }
            }
            for i in 0..order as usize {
                let next = self.poly_mul(Element(t.exp[i]), self.generator);
                if t.exp[(i + 1) % order as usize] != next.0 {
                    return Err(FieldError::Invariant(format!("exp[{}] != g * exp[{i}]", i + 1)));
                }
            }
        }
        Ok(())
    }
}

/// Inverse of `a` modulo `m` for coprime `a`, `m`; `m = 1` gives 0.
fn mod_inverse(a: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1);
    old_s.rem_euclid(m as i128) as u64
}

impl crate::poly::CoeffField for FieldCtx {
    type Elem = Element;

    fn zero(&self) -> Element {
        Element::ZERO
    }
    fn one(&self) -> Element {
        Element::ONE
    }
    fn add(&self, a: Element, b: Element) -> Element {
        FieldCtx::add(self, a, b)
    }
    fn sub(&self, a: Element, b: Element) -> Element {
        FieldCtx::sub(self, a, b)
    }
    fn mul(&self, a: Element, b: Element) -> Element {
        FieldCtx::mul(self, a, b)
    }
    fn inverse(&self, a: Element) -> Element {
        self.inv(a).expect("inverse of zero")
    }
    fn characteristic(&self) -> u32 {
        self.p
    }
    fn pth_root(&self, a: Element) -> Element {
        self.frobenius_root(a, 1)
    }
    fn from_int(&self, k: u64) -> Element {
        Element((k % self.p as u64) as u32)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(FieldCtx::new(2, 1, 2).unwrap_err(), FieldError::BadCharacteristic(2));
        assert_eq!(FieldCtx::new(9, 1, 2).unwrap_err(), FieldError::BadCharacteristic(9));
        assert!(matches!(FieldCtx::new(3, 0, 2), Err(FieldError::ZeroDegree { .. })));
        assert!(matches!(FieldCtx::new(3, 5, 5), Err(FieldError::SizeOverflow { .. })));
    }

    #[test]
    fn f9_basics() {
        let ctx = FieldCtx::new(3, 1, 2).unwrap();
        assert_eq!(ctx.size(), 9);
        assert_eq!(ctx.q(), 3);
        ctx.check_invariants().unwrap();
        // the smallest primitive quadratic over F_3 with c0 compared first is x^2 + x + 2
        assert_eq!(ctx.modulus(), &[2, 1, 1]);
        for u in 0..3 {
            let u = ctx.from_int(u);
            assert_eq!(ctx.rel_trace(u), ctx.mul(ctx.from_int(2), u));
        }
    }

    #[test]
    fn inverse_and_negation() {
        let ctx = FieldCtx::new(5, 1, 3).unwrap();
        for x in ctx.nonzero_elements() {
            assert_eq!(ctx.mul(x, ctx.inv(x).unwrap()), Element::ONE);
            assert_eq!(ctx.add(x, ctx.neg(x)), Element::ZERO);
        }
        assert_eq!(ctx.inv(Element::ZERO), Err(FieldError::InverseOfZero));
    }

    #[test]
    fn frobenius_order() {
        let ctx = FieldCtx::new(3, 2, 2).unwrap();
        for x in ctx.elements() {
            assert_eq!(ctx.frobenius(x, 0), x);
            assert_eq!(ctx.frobenius(x, ctx.degree()), x);
            assert_eq!(ctx.frobenius_root(ctx.frobenius(x, 3), 3), x);
        }
    }

    #[test]
    fn quadratic_character_values() {
        let ctx = FieldCtx::new(3, 1, 1).unwrap();
        assert_eq!(ctx.quadratic_character(Element::ONE, 1), Ok(1));
        assert_eq!(ctx.quadratic_character(Element::ZERO, 1), Ok(0));
        assert_eq!(ctx.quadratic_character(ctx.from_int(2), 1), Ok(-1));
        let f9 = FieldCtx::new(3, 1, 2).unwrap();
        assert_eq!(
            f9.quadratic_character(f9.generator(), 1),
            Err(FieldError::NotInSubfield(1))
        );
    }

    #[test]
    fn bsgs_matches_tables() {
        let with = FieldCtx::new(3, 1, 5).unwrap();
        let without = FieldCtx::with_table_cap(3, 1, 5, 0).unwrap();
        assert!(!without.has_tables());
        for x in with.nonzero_elements() {
            assert_eq!(with.discrete_log(x), without.discrete_log(x));
        }
    }

    #[test]
    fn custom_modulus_gets_primitive_generator() {
        // x^2 + 1 is irreducible over F_3 but x has order 4, not 8
        let ctx = FieldCtx::with_modulus(3, 1, 2, vec![1, 0, 1], DEFAULT_TABLE_CAP).unwrap();
        ctx.check_invariants().unwrap();
        assert_ne!(ctx.generator(), Element::from_index(3));
        assert!(FieldCtx::with_modulus(3, 1, 2, vec![2, 0, 1], DEFAULT_TABLE_CAP).is_err());
    }

    #[test]
    fn corrupted_modulus_fails_invariants() {
        let ctx = FieldCtx::from_modulus_unchecked(3, 1, 2, vec![2, 0, 1]).unwrap();
        assert!(ctx.check_invariants().is_err());
    }

    #[test]
    fn power_preimages_are_complete() {
        let ctx = FieldCtx::new(3, 1, 4).unwrap();
        for e in [1u64, 2, 5, 8, 16, 80] {
            for r in ctx.nonzero_elements() {
                let mut brute: Vec<Element> = ctx.nonzero_elements().filter(|&w| ctx.pow(w, e) == r).collect();
                let mut got = ctx.power_preimages(r, e);
                brute.sort();
                got.sort();
                assert_eq!(got, brute, "e = {e}");
                assert_eq!(ctx.is_power(r, e), !brute.is_empty());
            }
        }
    }

    #[test]
    fn unit_trace() {
        for (p, m, n) in [(3, 1, 2), (3, 1, 3), (5, 1, 5), (3, 2, 2)] {
            let ctx = FieldCtx::new(p, m, n).unwrap();
            assert_eq!(ctx.rel_trace(ctx.unit_trace_element()), Element::ONE);
        }
    }
}
