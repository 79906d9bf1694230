use super::{check_cap, Method, PlanarCandidate, Result, VerificationReport, Witness};
use crate::field::{Element, FieldCtx};
use std::time::Instant;

/// A term `coeff·x^exponent` of an arbitrary polynomial function.
pub type Monomial = (Element, u64);

pub fn eval_general(ctx: &FieldCtx, monomials: &[Monomial], x: Element) -> Element {
    monomials
        .iter()
        .fold(Element::ZERO, |acc, &(c, e)| ctx.add(acc, ctx.mul(c, ctx.pow(x, e))))
}

/// Exhaustive difference-table test, for fields up to `cap` elements.
pub fn is_planar_bruteforce(ctx: &FieldCtx, cand: &PlanarCandidate, cap: u64) -> Result<VerificationReport> {
    BruteForcer::new(ctx, cap)?.check(cand)
}

/// [`is_planar_bruteforce`] for `x ↦ Σ c·x^e`.
pub fn is_planar_bruteforce_general(
    ctx: &FieldCtx,
    monomials: &[Monomial],
    cap: u64,
) -> Result<VerificationReport> {
    let bf = BruteForcer::new(ctx, cap)?;
    let start = Instant::now();
    let table: Vec<Element> = ctx.elements().map(|x| eval_general(ctx, monomials, x)).collect();
    Ok(VerificationReport::from_witness(Method::Bruteforce, bf.first_collision(&table), start))
}

/// Largest field for which addition and subtraction are tabulated.
const TABLE_LIMIT: u32 = 1024;

/// Difference-table tester for one field, reusable across candidates.
pub struct BruteForcer<'a> {
    ctx: &'a FieldCtx,
    /// `add[c·N + x] = x + c` and `sub[y·N + x] = y − x`, for small fields.
    add: Vec<u16>,
    sub: Vec<u16>,
}

impl<'a> BruteForcer<'a> {
    pub fn new(ctx: &'a FieldCtx, cap: u64) -> Result<Self> {
        check_cap(ctx, cap)?;
        let n = ctx.size();
        let (mut add, mut sub) = (Vec::new(), Vec::new());
        if n <= TABLE_LIMIT {
            add.reserve((n * n) as usize);
            sub.reserve((n * n) as usize);
            for y in ctx.elements() {
                for x in ctx.elements() {
                    add.push(ctx.add(x, y).index() as u16);
                    sub.push(ctx.sub(y, x).index() as u16);
                }
            }
        }
        Ok(Self { ctx, add, sub })
    }

    pub fn check(&self, cand: &PlanarCandidate) -> Result<VerificationReport> {
        let start = Instant::now();
        let table = cand.table(self.ctx);
        Ok(VerificationReport::from_witness(Method::Bruteforce, self.first_collision(&table), start))
    }

    /// Smallest `c`, then smallest `x`, at which `x ↦ f(x+c) − f(x)` repeats a value.
    pub(crate) fn first_collision(&self, table: &[Element]) -> Option<Witness> {
        let ctx = self.ctx;
        let n = ctx.size() as usize;
        // seen[value] = (stamp, x) with stamp = c marking entries written for this c
        let mut seen = vec![(0u32, 0u32); n];
        let tabulated = !self.add.is_empty();
        let t: Vec<u16> = if tabulated { table.iter().map(|e| e.index() as u16).collect() } else { Vec::new() };
        for c in 1..n {
            for x in 0..n {
                let d = if tabulated {
                    let xc = self.add[c * n + x] as usize;
                    self.sub[t[xc] as usize * n + t[x] as usize] as usize
                } else {
                    let (ce, xe) = (Element::from_index(c as u32), Element::from_index(x as u32));
                    ctx.sub(table[ctx.add(xe, ce).index() as usize], table[x]).index() as usize
                };
                let slot = &mut seen[d];
                if slot.0 == c as u32 {
                    return Some(Witness {
                        c: Element::from_index(c as u32),
                        x1: Element::from_index(slot.1),
                        x2: Element::from_index(x as u32),
                    });
                }
                *slot = (c as u32, x as u32);
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linpoly::LinearizedPoly;
    use crate::planarity::PlanarityError;

    #[test]
    fn square_is_planar_on_f9() {
        let ctx = FieldCtx::new(3, 1, 2).unwrap();
        let sq = PlanarCandidate::new(&ctx, Element::ZERO, LinearizedPoly::identity(&ctx)).unwrap();
        assert!(is_planar_bruteforce(&ctx, &sq, 1 << 16).unwrap().planar);
    }

    #[test]
    fn constant_is_not_planar() {
        let ctx = FieldCtx::new(3, 1, 2).unwrap();
        let r = is_planar_bruteforce_general(&ctx, &[(Element::ONE, 0)], 1 << 16).unwrap();
        assert!(!r.planar);
        let w = r.witness.unwrap();
        assert!(w.verify_with(&ctx, |_| Element::ONE));
    }

    #[test]
    fn cap_is_enforced() {
        let ctx = FieldCtx::new(3, 1, 3).unwrap();
        let sq = PlanarCandidate::new(&ctx, Element::ZERO, LinearizedPoly::identity(&ctx)).unwrap();
        assert_eq!(
            is_planar_bruteforce(&ctx, &sq, 26).unwrap_err(),
            PlanarityError::TooLarge { size: 27, cap: 26 }
        );
    }
}
