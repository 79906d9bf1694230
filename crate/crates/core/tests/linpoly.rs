use ffplanar::families::example1_ell;
use ffplanar::field::{Element, FieldCtx};
use ffplanar::linpoly::{annihilator_poly, image_poly_for_subspace, FormalLinPoly, LinPolyError, LinearizedPoly, Subspace};
use std::collections::BTreeSet;

fn leibniz(m: &[[i64; 4]; 4]) -> i64 {
    let mut total = 0;
    for code in 0..256usize {
        let perm: Vec<usize> = (0..4).map(|i| (code >> (2 * i)) & 3).collect();
        if (0..4).any(|i| (0..i).any(|j| perm[i] == perm[j])) {
            continue;
        }
        let inversions = (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j))).filter(|&(i, j)| perm[i] > perm[j]).count();
        let sign = if inversions % 2 == 0 { 1 } else { -1 };
        total += sign * (0..4).map(|i| m[i][perm[i]]).product::<i64>();
    }
    total
}

fn gaussian_binomial(q: u64, n: u32, k: u32) -> u64 {
    let (mut num, mut den) = (1u64, 1u64);
    for i in 0..k {
        num *= q.pow(n - i) - 1;
        den *= q.pow(i + 1) - 1;
    }
    num / den
}

#[test]
fn example1_circulant_determinant_is_16() {
    let m = [[-1, -1, -1, 1], [1, -1, -1, -1], [-1, 1, -1, -1], [-1, -1, 1, -1]];
    assert_eq!(leibniz(&m), 16);
    for p in [3, 5] {
        let ctx = FieldCtx::new(p, 2, 2).unwrap();
        assert!(example1_ell(&ctx).unwrap().is_permutation(&ctx), "p = {p}");
    }
}

#[test]
fn subspace_counts_are_gaussian_binomials() {
    let ctx = FieldCtx::new(3, 4, 1).unwrap();
    let counts: Vec<u64> = (0..=4).map(|k| Subspace::enumerate(&ctx, k).len() as u64).collect();
    let want: Vec<u64> = (0..=4).map(|k| gaussian_binomial(3, 4, k)).collect();
    assert_eq!(want, [1, 40, 130, 40, 1]);
    assert_eq!(counts, want);
    let ctx = FieldCtx::new(5, 1, 3).unwrap();
    let counts: Vec<u64> = (0..=3).map(|k| Subspace::enumerate(&ctx, k).len() as u64).collect();
    assert_eq!(counts, (0..=3).map(|k| gaussian_binomial(5, 3, k)).collect::<Vec<_>>());
}

#[test]
fn enumerated_subspaces_are_distinct_and_closed() {
    let ctx = FieldCtx::new(3, 1, 3).unwrap();
    let mut seen = BTreeSet::new();
    for k in 0..=3 {
        for w in Subspace::enumerate(&ctx, k) {
            let elems: BTreeSet<u32> = w.elements(&ctx).iter().map(|e| e.index()).collect();
            assert_eq!(elems.len() as u64, 3u64.pow(k as u32));
            for &x in &elems {
                for &y in &elems {
                    let s = ctx.add(Element::from_index(x), Element::from_index(y));
                    assert!(elems.contains(&s.index()));
                }
            }
            assert!(seen.insert(elems));
        }
    }
}

#[test]
fn eval_is_additive_and_compose_is_composition() {
    let ctx = FieldCtx::new(3, 2, 2).unwrap();
    let g = ctx.generator();
    let l1 = LinearizedPoly::from_coeffs(&ctx, vec![g, Element::ONE, ctx.pow(g, 7), Element::ZERO]).unwrap();
    let l2 = LinearizedPoly::from_coeffs(&ctx, vec![ctx.pow(g, 3), Element::ZERO, g, ctx.pow(g, 40)]).unwrap();
    let comp = l1.compose(&ctx, &l2).unwrap();
    for x in ctx.elements().step_by(3) {
        assert_eq!(comp.eval(&ctx, x), l1.eval(&ctx, l2.eval(&ctx, x)));
        for y in ctx.elements().step_by(17) {
            assert_eq!(l1.eval(&ctx, ctx.add(x, y)), ctx.add(l1.eval(&ctx, x), l1.eval(&ctx, y)));
        }
        let lam = ctx.pow(g, 5);
        assert_eq!(l1.precompose_scalar(&ctx, lam).eval(&ctx, x), l1.eval(&ctx, ctx.mul(lam, x)));
        assert_eq!(l1.scale(&ctx, lam).eval(&ctx, x), ctx.mul(lam, l1.eval(&ctx, x)));
        assert_eq!(l1.frobenius_power(&ctx, 1).eval(&ctx, x), ctx.frobenius(l1.eval(&ctx, x), 1));
    }
}

#[test]
fn kernel_and_image_by_enumeration() {
    let ctx = FieldCtx::new(3, 1, 4).unwrap();
    // x^3 − x vanishes exactly on F_3
    let ell = LinearizedPoly::frobenius(&ctx, 1).sub(&ctx, &LinearizedPoly::identity(&ctx)).unwrap();
    let zeros: BTreeSet<u32> = ctx.elements().filter(|&x| ell.eval(&ctx, x).is_zero()).map(|e| e.index()).collect();
    let ker: BTreeSet<u32> = ell.kernel(&ctx).elements(&ctx).iter().map(|e| e.index()).collect();
    assert_eq!(ker, zeros);
    assert_eq!(ker.len(), 3);
    let image: BTreeSet<u32> = ctx.elements().map(|x| ell.eval(&ctx, x).index()).collect();
    let im: BTreeSet<u32> = ell.image(&ctx).elements(&ctx).iter().map(|e| e.index()).collect();
    assert_eq!(im, image);
    assert_eq!(ell.rank(&ctx), 3);
    assert!(!ell.is_permutation(&ctx));
    assert!(LinearizedPoly::frobenius(&ctx, 2).is_permutation(&ctx));
}

#[test]
fn annihilator_vanishes_exactly_on_the_subspace() {
    let ctx = FieldCtx::new(5, 1, 3).unwrap();
    for k in 0..=2 {
        for w in Subspace::enumerate(&ctx, k).into_iter().step_by(5) {
            let h = annihilator_poly(&ctx, &w);
            assert!(h.is_monic());
            assert_eq!(h.p_degree(), Some(k));
            for x in ctx.elements() {
                assert_eq!(h.eval(&ctx, x).is_zero(), w.contains(&ctx, x));
            }
        }
    }
}

#[test]
fn image_polynomial_round_trip_on_f125() {
    let ctx = FieldCtx::new(5, 1, 3).unwrap();
    let full = FormalLinPoly::full_field(&ctx);
    for k in 0..=3 {
        for w in Subspace::enumerate(&ctx, k).into_iter().step_by(3) {
            let g = image_poly_for_subspace(&ctx, &w).unwrap();
            assert!(g.is_monic());
            assert_eq!(g.p_degree(), Some(3 - k));
            let image: BTreeSet<u32> = ctx.elements().map(|x| g.eval(&ctx, x).index()).collect();
            assert_eq!(image.len() as u64, w.cardinality(&ctx));
            assert!(image.iter().all(|&i| w.contains(&ctx, Element::from_index(i))));
            assert_eq!(annihilator_poly(&ctx, &w).compose(&ctx, &g), full);
        }
    }
}

#[test]
fn json_round_trips_and_key_mismatch() {
    let ctx = FieldCtx::new(3, 1, 3).unwrap();
    let ell = LinearizedPoly::from_coeffs(&ctx, vec![Element::ONE, Element::ZERO, ctx.generator()]).unwrap();
    let v = ell.to_json(&ctx);
    assert_eq!(v, serde_json::json!({"coeffs": {"0": "1,0,0", "2": "0,1,0"}}));
    assert_eq!(LinearizedPoly::from_json(&ctx, &v).unwrap(), ell);
    let w = Subspace::span(&ctx, &[ctx.generator(), Element::ONE]);
    assert_eq!(Subspace::from_json(&ctx, &w.to_json(&ctx)).unwrap(), w);
    let other = FieldCtx::new(3, 1, 2).unwrap();
    let foreign = LinearizedPoly::identity(&other);
    assert!(matches!(ell.compose(&ctx, &foreign), Err(LinPolyError::CtxMismatch { .. })));
    assert!(LinearizedPoly::from_coeffs(&ctx, vec![Element::ONE; 4]).is_err());
}
