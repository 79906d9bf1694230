use crate::field::{Element, FieldCtx};
use crate::fpmat::FpMatrix;
use serde_json::Value;

/// An F_p-subspace of the field, stored by its reduced row-echelon basis
/// over the digit coordinates, so equal subspaces compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    basis: Vec<Element>,
}

impl Subspace {
    pub fn zero() -> Self {
        Self { basis: Vec::new() }
    }

    pub fn full(ctx: &FieldCtx) -> Self {
        let basis = (0..ctx.degree()).map(|i| Element::from_index(ctx.p_pow(i))).collect();
        Self { basis }
    }

    /// F_q as a subspace.
    pub fn base_field(ctx: &FieldCtx) -> Self {
        let g = ctx.base_generator();
        let mut gens = Vec::with_capacity(ctx.m() as usize);
        let mut cur = Element::ONE;
        for _ in 0..ctx.m() {
            gens.push(cur);
            cur = ctx.mul(cur, g);
        }
        let s = Self::span(ctx, &gens);
        debug_assert_eq!(s.dim(), ctx.m() as usize);
        s
    }

    /// Span of arbitrary vectors.
    pub fn span(ctx: &FieldCtx, vectors: &[Element]) -> Self {
        if vectors.is_empty() {
            return Self::zero();
        }
        let rows: Vec<Vec<u32>> = vectors.iter().map(|&v| ctx.digits(v)).collect();
        let m = FpMatrix::from_rows(ctx.p(), ctx.degree() as usize, &rows);
        let (r, pivots) = m.rref();
        let basis = (0..pivots.len())
            .map(|i| ctx.from_digits(r.row(i)).expect("digits in range"))
            .collect();
        Self { basis }
    }

    /// Wraps vectors already in reduced row-echelon form.
    fn from_rref(basis: Vec<Element>) -> Self {
        Self { basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Element] {
        &self.basis
    }

    /// Number of elements, `p^dim`.
    pub fn cardinality(&self, ctx: &FieldCtx) -> u64 {
        (ctx.p() as u64).pow(self.dim() as u32)
    }

    pub fn contains(&self, ctx: &FieldCtx, x: Element) -> bool {
        let mut v = self.basis.clone();
        v.push(x);
        Self::span(ctx, &v).dim() == self.dim()
    }

    pub fn is_subspace_of(&self, ctx: &FieldCtx, other: &Self) -> bool {
        self.basis.iter().all(|&b| other.contains(ctx, b))
    }

    pub fn walk<'a>(&'a self, ctx: &'a FieldCtx) -> GrayWalk<'a> {
        GrayWalk::new(ctx, &self.basis)
    }

    /// All elements, in Gray-code order starting from 0.
    pub fn elements(&self, ctx: &FieldCtx) -> Vec<Element> {
        self.walk(ctx).collect()
    }

    /// Every `k`-dimensional subspace of the field, enumerated through their
    /// reduced echelon forms (pivot sets in lexicographic order, then free
    /// entries in counting order).
    pub fn enumerate(ctx: &FieldCtx, k: usize) -> Vec<Self> {
        let d = ctx.degree() as usize;
        let p = ctx.p();
        let mut out = Vec::new();
        if k > d {
            return out;
        }
        for pivots in combinations(d, k) {
            // free positions: (row, column) with column > pivot[row] and not a pivot
            let free: Vec<(usize, usize)> = (0..k)
                .flat_map(|r| {
                    let pivots = &pivots;
                    (pivots[r] + 1..d).filter(move |c| !pivots.contains(c)).map(move |c| (r, c))
                })
                .collect();
            let total = (p as u64).pow(free.len() as u32);
            for mut code in 0..total {
                let mut rows = vec![vec![0u32; d]; k];
                for (r, &c) in pivots.iter().enumerate() {
                    rows[r][c] = 1;
                }
                for &(r, c) in &free {
                    rows[r][c] = (code % p as u64) as u32;
                    code /= p as u64;
                }
                let basis = rows.iter().map(|r| ctx.from_digits(r).expect("digits in range")).collect();
                out.push(Self::from_rref(basis));
            }
        }
        out
    }

    /// `{"basis": ["<digits>", …]}`.
    pub fn to_json(&self, ctx: &FieldCtx) -> Value {
        let basis: Vec<String> = self.basis.iter().map(|&b| ctx.format_element(b)).collect();
        serde_json::json!({ "basis": basis })
    }

    pub fn from_json(ctx: &FieldCtx, v: &Value) -> Result<Self, String> {
        let arr = v.get("basis").and_then(Value::as_array).ok_or("missing \"basis\" array")?;
        let mut vecs = Vec::with_capacity(arr.len());
        for item in arr {
            let s = item.as_str().ok_or("basis entries must be digit strings")?;
            vecs.push(ctx.parse_element(s).map_err(|e| e.to_string())?);
        }
        let s = Self::span(ctx, &vecs);
        if s.dim() != vecs.len() {
            return Err("basis vectors are linearly dependent".into());
        }
        Ok(s)
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Visits every element of a span, one field addition per step.
///
/// A base-p counter runs alongside; when it carries through `j` trailing
/// digits equal to `p − 1`, the modular Gray code changes only in digit `j`,
/// so the current element changes by exactly `basis[j]`.
pub struct GrayWalk<'a> {
    ctx: &'a FieldCtx,
    basis: &'a [Element],
    counter: Vec<u32>,
    current: Element,
    remaining: u64,
}

impl<'a> GrayWalk<'a> {
    pub fn new(ctx: &'a FieldCtx, basis: &'a [Element]) -> Self {
        let remaining = (ctx.p() as u64).pow(basis.len() as u32);
        Self { ctx, basis, counter: vec![0; basis.len()], current: Element::ZERO, remaining }
    }
}

impl Iterator for GrayWalk<'_> {
    type Item = Element;

    fn next(&mut self) -> Option<Element> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let out = self.current;
        if self.remaining > 0 {
            let top = self.ctx.p() - 1;
            let j = self.counter.iter().take_while(|&&d| d == top).count();
            for d in &mut self.counter[..j] {
                *d = 0;
            }
            self.counter[j] += 1;
            self.current = self.ctx.add(self.current, self.basis[j]);
        }
        Some(out)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        (self.remaining as usize, Some(self.remaining as usize))
    }
}

impl ExactSizeIterator for GrayWalk<'_> {}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn gray_walk_visits_each_element_once() {
        let ctx = FieldCtx::new(3, 1, 4).unwrap();
        let s = Subspace::span(&ctx, &[ctx.generator(), ctx.from_int(1), ctx.pow(ctx.generator(), 7)]);
        let elems = s.elements(&ctx);
        assert_eq!(elems.len(), 27);
        assert_eq!(elems.iter().collect::<HashSet<_>>().len(), 27);
        assert!(elems.iter().all(|&x| s.contains(&ctx, x)));
    }

    #[test]
    fn enumeration_counts() {
        let ctx = FieldCtx::new(3, 1, 3).unwrap();
        let counts: Vec<usize> = (0..=3).map(|k| Subspace::enumerate(&ctx, k).len()).collect();
        assert_eq!(counts, vec![1, 13, 13, 1]);
    }

    #[test]
    fn canonical_form() {
        let ctx = FieldCtx::new(5, 1, 3).unwrap();
        let a = ctx.generator();
        let b = ctx.pow(a, 10);
        let s1 = Subspace::span(&ctx, &[a, b]);
        let s2 = Subspace::span(&ctx, &[ctx.add(a, b), ctx.sub(a, ctx.mul(ctx.from_int(2), b))]);
        assert_eq!(s1, s2);
        let base = Subspace::base_field(&ctx);
        assert_eq!(base.dim(), 1);
    }
}
