use super::{Method, PlanarCandidate, VerificationReport, Witness};
use crate::field::{Element, FieldCtx};
use crate::fpmat::FpMatrix;
use std::time::Instant;

/// The symmetric F_p-bilinear form `B(v, x) = Tr(a v x^q + a v^q x) + 2ℓ(vx)`,
/// stored as one `mn × mn` matrix per basis vector `e_i = α^i`:
/// `mats[i]` has `B(e_i, e_j)` in column `j`, so `M_v = Σ v_i·mats[i]` is the
/// matrix of `x ↦ B(v, x)`.
pub struct BilinearForm {
    p: u64,
    d: usize,
    mats: Vec<u32>,
}

impl BilinearForm {
    pub fn new(ctx: &FieldCtx, cand: &PlanarCandidate) -> Self {
        let d = ctx.degree() as usize;
        let basis: Vec<Element> = (0..d as u32).map(|i| Element::from_index(ctx.p_pow(i))).collect();
        let two_ell = cand.ell.scale(ctx, ctx.from_int(2));
        let m = ctx.m();
        let mut mats = vec![0u32; d * d * d];
        for (i, &v) in basis.iter().enumerate() {
            let av = ctx.mul(cand.a, v);
            let avq = ctx.mul(cand.a, ctx.frobenius(v, m));
            for (j, &x) in basis.iter().enumerate() {
                let tr = ctx.rel_trace(ctx.add(ctx.mul(av, ctx.frobenius(x, m)), ctx.mul(avq, x)));
                let b = ctx.add(tr, two_ell.eval(ctx, ctx.mul(v, x)));
                for r in 0..d {
                    mats[(i * d + r) * d + j] = ctx.digit(b, r as u32);
                }
            }
        }
        Self { p: ctx.p() as u64, d, mats }
    }

    /// Row-major matrix of `x ↦ B(v, x)` for `v` given by its digits.
    pub fn matrix_for(&self, v_digits: &[u32], out: &mut [u32]) {
        let dd = self.d * self.d;
        let mut acc = vec![0u64; dd];
        for (i, &vi) in v_digits.iter().enumerate() {
            if vi == 0 {
                continue;
            }
            for (a, &m) in acc.iter_mut().zip(&self.mats[i * dd..(i + 1) * dd]) {
                *a += vi as u64 * m as u64;
            }
        }
        for (o, a) in out.iter_mut().zip(acc) {
            *o = (a % self.p) as u32;
        }
    }
}

/// Rank of a row-major square matrix over F_p, destroying it.
fn rank_in_place(m: &mut [u32], d: usize, p: u64) -> usize {
    let mut r = 0;
    for c in 0..d {
        let Some(pr) = (r..d).find(|&i| m[i * d + c] != 0) else { continue };
        if pr != r {
            for j in 0..d {
                m.swap(r * d + j, pr * d + j);
            }
        }
        let inv = crate::poly::mod_pow(m[r * d + c] as u64, p - 2, p);
        for i in r + 1..d {
            let f = m[i * d + c] as u64;
            if f == 0 {
                continue;
            }
            let f = f * inv % p;
            for j in c..d {
                let v = (m[i * d + j] as u64 + (p - f) * m[r * d + j] as u64 % p) % p;
                m[i * d + j] = v as u32;
            }
        }
        r += 1;
        if r == d {
            break;
        }
    }
    r
}

/// Planar iff `x ↦ B(v, x)` has full rank for every `v ≠ 0`.
///
/// Ranks are invariant under `v ↦ λv` for `λ ∈ F_p^*`, so only `v` whose
/// highest nonzero digit is 1 are tested. Visiting those in index order
/// finds the lowest-index deficient `v` overall; the witness is
/// `(c = v, x1 = x0, x2 = 0)` for a kernel vector `x0`.
pub fn is_planar_rank(ctx: &FieldCtx, cand: &PlanarCandidate) -> VerificationReport {
    let start = Instant::now();
    let witness = rank_witness(ctx, cand);
    VerificationReport::from_witness(Method::Rank, witness, start)
}

pub(crate) fn rank_witness(ctx: &FieldCtx, cand: &PlanarCandidate) -> Option<Witness> {
    let form = BilinearForm::new(ctx, cand);
    let d = form.d;
    let p = ctx.p();
    let mut digits = vec![0u32; d];
    let mut mat = vec![0u32; d * d];
    for top in 0..d {
        let low = ctx.p_pow(top as u32) as u64;
        for rest in 0..low {
            let mut r = rest;
            for dg in digits.iter_mut().take(top) {
                *dg = (r % p as u64) as u32;
                r /= p as u64;
            }
            digits[top] = 1;
            for dg in digits.iter_mut().skip(top + 1) {
                *dg = 0;
            }
            form.matrix_for(&digits, &mut mat);
            let keep = mat.clone();
            if rank_in_place(&mut mat, d, p as u64) < d {
                let v = ctx.from_digits(&digits).expect("digits in range");
                let rows: Vec<Vec<u32>> = keep.chunks(d).map(<[u32]>::to_vec).collect();
                let kernel = FpMatrix::from_rows(p, d, &rows).nullspace();
                let x0 = ctx.from_digits(&kernel[0]).expect("digits in range");
                return Some(Witness { c: v, x1: x0, x2: Element::ZERO });
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linpoly::LinearizedPoly;

    #[test]
    fn matrix_matches_direct_evaluation() {
        let ctx = FieldCtx::new(3, 1, 3).unwrap();
        let cand = PlanarCandidate::new(&ctx, ctx.generator(), LinearizedPoly::frobenius(&ctx, 1)).unwrap();
        let form = BilinearForm::new(&ctx, &cand);
        let d = 3;
        let mut m = vec![0; 9];
        for v in ctx.nonzero_elements() {
            form.matrix_for(&ctx.digits(v), &mut m);
            for x in ctx.elements() {
                let direct = ctx.sub(
                    ctx.sub(cand.eval(&ctx, ctx.add(x, v)), cand.eval(&ctx, x)),
                    cand.eval(&ctx, v),
                );
                let xd = ctx.digits(x);
                let via: Vec<u32> = (0..d)
                    .map(|r| (0..d).map(|j| m[r * d + j] * xd[j]).sum::<u32>() % 3)
                    .collect();
                assert_eq!(ctx.digits(direct), via);
            }
        }
    }

    #[test]
    fn non_permutation_with_a_zero() {
        let ctx = FieldCtx::new(3, 1, 2).unwrap();
        let ell = LinearizedPoly::from_coeffs(&ctx, vec![Element::ONE, ctx.neg(Element::ONE)]).unwrap();
        let cand = PlanarCandidate::new(&ctx, Element::ZERO, ell).unwrap();
        let r = is_planar_rank(&ctx, &cand);
        assert!(!r.planar);
        assert!(r.witness.unwrap().verify(&ctx, &cand));
    }
}
