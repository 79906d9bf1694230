use ffplanar::field::{Element, FieldCtx, FieldError};

/// Schoolbook `a·b mod f` over F_p on little-endian coefficient vectors.
fn naive_mulmod(p: u32, a: &[u32], b: &[u32], f: &[u32]) -> Vec<u32> {
    let d = f.len() - 1;
    let mut prod = vec![0u32; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for i in (d..prod.len()).rev() {
        let c = prod[i];
        if c == 0 {
            continue;
        }
        for j in 0..=d {
            prod[i - d + j] = (prod[i - d + j] + (p - c) * f[j]) % p;
        }
    }
    prod.truncate(d);
    prod
}

fn order_of_x(p: u32, f: &[u32]) -> Option<u64> {
    let d = f.len() - 1;
    let mut one = vec![0u32; d];
    one[0] = 1;
    let mut x = vec![0u32; d];
    if d == 1 {
        x[0] = (p - f[0]) % p;
    } else {
        x[1] = 1;
    }
    let mut cur = x.clone();
    let n = (p as u64).pow(d as u32);
    for k in 1..n {
        if cur == one {
            return Some(k);
        }
        cur = naive_mulmod(p, &cur, &x, f);
    }
    None
}

/// First monic `f` of degree `d`, constant term most significant, with `x` of order `p^d − 1`.
fn first_primitive(p: u32, d: usize) -> Vec<u32> {
    let total = (p as u64).pow(d as u32);
    let mut best = None;
    for code in 0..total {
        // code's base-p digits, most significant first, are c0, c1, ...
        let mut f = vec![0u32; d + 1];
        let mut r = code;
        for i in (0..d).rev() {
            f[i] = (r % p as u64) as u32;
            r /= p as u64;
        }
        f[d] = 1;
        if f[0] != 0 && order_of_x(p, &f) == Some(total - 1) {
            best = Some(f);
            break;
        }
    }
    best.expect("a primitive polynomial exists")
}

fn legendre(p: u32, a: u32) -> i8 {
    if a.is_multiple_of(p) {
        return 0;
    }
    let mut r = 1u64;
    for _ in 0..(p - 1) / 2 {
        r = r * a as u64 % p as u64;
    }
    if r == 1 { 1 } else { -1 }
}

#[test]
fn default_modulus_for_f9() {
    let ctx = FieldCtx::new(3, 1, 2).unwrap();
    assert_eq!(ctx.modulus(), &[2, 1, 1]);
}

#[test]
fn default_modulus_is_first_primitive() {
    for (p, m, n) in [(3, 1, 3), (3, 2, 2), (5, 1, 2), (5, 1, 3), (7, 1, 2), (3, 1, 5)] {
        let ctx = FieldCtx::new(p, m, n).unwrap();
        assert_eq!(ctx.modulus(), first_primitive(p, (m * n) as usize).as_slice(), "p={p} m={m} n={n}");
    }
}

#[test]
fn multiplication_matches_schoolbook() {
    let ctx = FieldCtx::new(5, 1, 3).unwrap();
    for x in ctx.elements().step_by(7) {
        for y in ctx.elements().step_by(11) {
            let want = naive_mulmod(5, &ctx.digits(x), &ctx.digits(y), ctx.modulus());
            assert_eq!(ctx.digits(ctx.mul(x, y)), want);
        }
    }
}

#[test]
fn table_and_polynomial_modes_agree() {
    for (p, m, n) in [(3, 1, 2), (3, 1, 3), (3, 2, 2), (5, 2, 2)] {
        let t = FieldCtx::new(p, m, n).unwrap();
        let s = FieldCtx::with_table_cap(p, m, n, 0).unwrap();
        assert!(t.has_tables() && !s.has_tables());
        assert_eq!(t.modulus(), s.modulus());
        let step = (t.size() / 40).max(1) as usize;
        for x in t.elements().step_by(step) {
            for y in t.elements().step_by(step + 1) {
                assert_eq!(t.add(x, y), s.add(x, y));
                assert_eq!(t.sub(x, y), s.sub(x, y));
                assert_eq!(t.mul(x, y), s.mul(x, y));
            }
            assert_eq!(t.neg(x), s.neg(x));
            assert_eq!(t.pow(x, 12345), s.pow(x, 12345));
            assert_eq!(t.frobenius(x, 1), s.frobenius(x, 1));
            assert_eq!(t.rel_norm(x), s.rel_norm(x));
            assert_eq!(t.rel_trace(x), s.rel_trace(x));
            if !x.is_zero() {
                assert_eq!(t.inv(x).unwrap(), s.inv(x).unwrap());
                assert_eq!(t.discrete_log(x), s.discrete_log(x));
            }
        }
        s.check_invariants().unwrap();
        t.check_invariants().unwrap();
    }
}

#[test]
fn inverses_and_logs() {
    let ctx = FieldCtx::new(3, 1, 4).unwrap();
    let g = ctx.generator();
    for x in ctx.nonzero_elements() {
        assert_eq!(ctx.mul(x, ctx.inv(x).unwrap()), Element::ONE);
        let l = ctx.discrete_log(x).unwrap();
        assert_eq!(ctx.pow(g, l), x);
    }
    assert_eq!(ctx.discrete_log(Element::ZERO), None);
    assert_eq!(ctx.inv(Element::ZERO), Err(FieldError::InverseOfZero));
}

#[test]
fn frobenius_is_the_p_th_power() {
    let ctx = FieldCtx::new(5, 1, 3).unwrap();
    for x in ctx.elements() {
        assert_eq!(ctx.frobenius(x, 1), ctx.pow(x, 5));
        assert_eq!(ctx.frobenius(x, 2), ctx.pow(x, 25));
        assert_eq!(ctx.frobenius(x, 3), x);
        assert_eq!(ctx.frobenius(ctx.frobenius_root(x, 1), 1), x);
    }
}

#[test]
fn trace_and_norm_by_conjugates() {
    let ctx = FieldCtx::new(3, 2, 2).unwrap();
    let q = ctx.q() as u64;
    for x in ctx.elements() {
        let xq = ctx.pow(x, q);
        assert_eq!(ctx.rel_trace(x), ctx.add(x, xq));
        assert_eq!(ctx.rel_norm(x), ctx.mul(x, xq));
        assert!(ctx.in_base(ctx.rel_trace(x)));
        // Tr_{F_81/F_3} = Tr_{F_9/F_3} ∘ Tr_{F_81/F_9}
        let full = ctx.subfield_trace(x, 4, 1);
        let tower = ctx.subfield_trace(ctx.subfield_trace(x, 4, 2), 2, 1);
        assert_eq!(full, tower);
        let direct = (0..4).fold(Element::ZERO, |acc, i| ctx.add(acc, ctx.pow(x, 3u64.pow(i))));
        assert_eq!(full, direct);
    }
}

#[test]
fn f27_norm_fibres_have_13_elements() {
    let ctx = FieldCtx::new(3, 1, 3).unwrap();
    let mut counts = [0u32; 3];
    for x in ctx.elements() {
        let nx = ctx.rel_norm(x);
        assert!(ctx.in_base(nx));
        counts[nx.index() as usize] += 1;
    }
    assert_eq!(counts, [1, 13, 13]);
}

#[test]
fn eta_on_f9_is_legendre_of_the_norm() {
    let ctx = FieldCtx::new(3, 1, 2).unwrap();
    for x in ctx.elements() {
        let want = legendre(3, ctx.rel_norm(x).index());
        assert_eq!(ctx.quadratic_character(x, 2).unwrap(), want);
    }
    for x in ctx.base_elements() {
        assert_eq!(ctx.eta_base(x), legendre(3, x.index()));
    }
}

#[test]
fn power_preimages_are_exactly_the_roots() {
    let ctx = FieldCtx::new(5, 1, 2).unwrap();
    for r in ctx.elements() {
        for e in [2u64, 3, 4, 6] {
            let want: Vec<Element> = ctx.nonzero_elements().filter(|&w| ctx.pow(w, e) == r).collect();
            let mut got = ctx.power_preimages(r, e);
            got.sort();
            assert_eq!(got, want, "r={r:?} e={e}");
            assert_eq!(ctx.is_power(r, e), !want.is_empty());
        }
    }
}

#[test]
fn digit_codec_round_trips() {
    let ctx = FieldCtx::new(7, 1, 2).unwrap();
    for x in ctx.elements() {
        let s = ctx.format_element(x);
        assert_eq!(ctx.parse_element(&s).unwrap(), x);
        assert_eq!(ctx.from_digits(&ctx.digits(x)).unwrap(), x);
    }
    assert_eq!(ctx.format_element(Element::from_index(10)), "3,1");
    assert!(ctx.parse_element("7,0").is_err());
    assert!(ctx.parse_element("1,2,3").is_err());
    let back = FieldCtx::from_spec(&ctx.spec(), 1 << 20).unwrap();
    assert_eq!(back.modulus(), ctx.modulus());
}

#[test]
fn bad_parameters_are_rejected() {
    assert!(matches!(FieldCtx::new(2, 1, 3), Err(FieldError::BadCharacteristic(_))));
    assert!(matches!(FieldCtx::new(9, 1, 1), Err(FieldError::BadCharacteristic(_))));
    assert!(matches!(FieldCtx::new(3, 0, 2), Err(FieldError::ZeroDegree { .. })));
    assert!(FieldCtx::with_modulus(3, 1, 2, vec![2, 0, 1], 1 << 20).is_err());
    let nonprimitive = FieldCtx::with_modulus(3, 1, 2, vec![1, 0, 1], 1 << 20).unwrap();
    nonprimitive.check_invariants().unwrap();
    assert_eq!(ctx_order(&nonprimitive, nonprimitive.generator()), 8);
}

#[test]
fn corrupted_modulus_fails_invariants() {
    let bad = FieldCtx::from_modulus_unchecked(3, 1, 2, vec![1, 0, 1]).unwrap();
    assert!(matches!(bad.check_invariants(), Err(FieldError::Invariant(_))));
    let reducible = FieldCtx::from_modulus_unchecked(3, 1, 2, vec![2, 0, 1]).unwrap();
    assert!(reducible.check_invariants().is_err());
}

fn ctx_order(ctx: &FieldCtx, x: Element) -> u64 {
    (1..ctx.size() as u64).find(|&k| ctx.pow(x, k) == Element::ONE).unwrap()
}
