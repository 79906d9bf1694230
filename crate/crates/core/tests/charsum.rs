use ffplanar::charsum::{
    a_sum, a_sum_via_irreducibles, count_lower_bound, count_m, degree_sum, orthogonality_sum, subfield_elements,
    weil_bound_check, weil_eta_sum, CharsumError, MonicPoly,
};
use ffplanar::field::{Element, FieldCtx};

fn close(a: num_complex::Complex64, b: num_complex::Complex64) -> bool {
    (a - b).norm() < 1e-8 * (1.0 + b.norm())
}

fn trace_by_powers(ctx: &FieldCtx, x: Element) -> Element {
    let q = ctx.q() as u64;
    let mut acc = Element::ZERO;
    let mut cur = x;
    for _ in 0..ctx.n() {
        acc = ctx.add(acc, cur);
        cur = ctx.pow(cur, q);
    }
    acc
}

#[test]
fn solution_counts_at_q3_k5_match_a_direct_loop() {
    let ctx = FieldCtx::new(3, 1, 5).unwrap();
    let exp = (ctx.size() as u64 - 1) / 2;
    let mut seen = Vec::new();
    for up in 0..3 {
        for om in 1..3 {
            for c in 1..3 {
                let (up, om, c) = (ctx.from_int(up), ctx.from_int(om), ctx.from_int(c));
                let rec = count_m(&ctx, up, om, c).unwrap();
                let direct = (1..ctx.size())
                    .map(Element::from_index)
                    .filter(|&xi| {
                        let s = ctx.add(xi, ctx.mul(c, ctx.inv(xi).unwrap()));
                        let norm = ctx.pow(xi, exp);
                        ctx.add(trace_by_powers(&ctx, s), up).is_zero() && ctx.mul(om, norm) == Element::ONE
                    })
                    .count() as u64;
                assert_eq!(rec.m, direct);
                assert!(rec.meets_bound());
                seen.push(rec.m);
            }
        }
    }
    seen.sort();
    seen.dedup();
    assert_eq!(seen, vec![30, 40, 41, 50]);
    let b = count_lower_bound(3, 5);
    assert!((b - (242.0 - 8.0 * 243f64.sqrt()) / 6.0).abs() < 1e-9);
}

#[test]
fn orthogonality_recovers_the_count() {
    let ctx = FieldCtx::new(3, 1, 4).unwrap();
    let (up, om, c) = (ctx.from_int(1), ctx.from_int(2), Element::ONE);
    let m = count_m(&ctx, up, om, c).unwrap().m as f64;
    let s = orthogonality_sum(&ctx, up, om, c).unwrap();
    assert!((s.re - 6.0 * m).abs() < 1e-7 && s.im.abs() < 1e-7);
}

#[test]
fn direct_and_irreducible_sums_agree() {
    for (p, k) in [(3, 4), (5, 2), (3, 3)] {
        let ctx = FieldCtx::new(p, 1, k).unwrap();
        for chi in ctx.additive_chars() {
            for psi in ctx.multiplicative_chars() {
                for c in [Element::ONE, ctx.from_int(2)] {
                    let a = a_sum(&ctx, chi, psi, c).unwrap();
                    let b = a_sum_via_irreducibles(&ctx, chi, psi, c).unwrap();
                    assert!(close(a, b), "p={p} k={k}: {a} vs {b}");
                }
            }
        }
    }
}

#[test]
fn degree_sums_vanish_above_two_for_nontrivial_characters() {
    let ctx = FieldCtx::new(5, 1, 2).unwrap();
    for chi in ctx.additive_chars().into_iter().skip(1) {
        for psi in ctx.multiplicative_chars() {
            assert!(degree_sum(&ctx, chi, psi, 3, Element::ONE).norm() < 1e-8);
        }
    }
}

#[test]
fn monic_poly_validation() {
    let ctx = FieldCtx::new(3, 1, 2).unwrap();
    assert_eq!(MonicPoly::new(&ctx, vec![Element::ONE]), Err(CharsumError::NotMonic));
    assert_eq!(MonicPoly::new(&ctx, vec![Element::ONE, ctx.from_int(2)]), Err(CharsumError::NotMonic));
    assert!(MonicPoly::new(&ctx, vec![ctx.generator(), Element::ONE]).is_err());
    assert_eq!(MonicPoly::enumerate(&ctx, 2).len(), 9);
    let irr = MonicPoly::enumerate(&ctx, 2).iter().filter(|g| g.is_irreducible(&ctx)).count();
    assert_eq!(irr, 3);
    assert_eq!(count_m(&ctx, Element::ZERO, Element::ZERO, Element::ONE).unwrap_err(), CharsumError::ZeroParameter);
}

#[test]
fn subfields_and_weil_bound() {
    let ctx = FieldCtx::new(3, 2, 2).unwrap();
    for level in [1, 2, 4] {
        let sub = subfield_elements(&ctx, level).unwrap();
        assert_eq!(sub.len(), 3usize.pow(level));
        assert!(sub.iter().all(|&x| ctx.pow(x, 3u64.pow(level)) == x));
    }
    assert_eq!(subfield_elements(&ctx, 3), Err(CharsumError::BadLevel(3)));
    // x² − 1 over F_9: η sums to −1
    let g = vec![ctx.neg(Element::ONE), Element::ZERO, Element::ONE];
    assert_eq!(weil_eta_sum(&ctx, &g, 2).unwrap(), -1);
    assert!(weil_bound_check(&ctx, &g, 2).unwrap());
    let cube = vec![Element::ONE, ctx.from_int(1), Element::ZERO, Element::ONE];
    assert!(weil_bound_check(&ctx, &cube, 4).unwrap());
    let square = vec![Element::ONE, ctx.from_int(2), Element::ONE];
    assert_eq!(weil_bound_check(&ctx, &square, 2), Err(CharsumError::NotWeilAdmissible));
    assert!(weil_eta_sum(&ctx, &[ctx.generator()], 1).is_err());
}
