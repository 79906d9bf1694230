//! The acceptance suite, shared by the `acceptance` test target and `ffplanar selftest`.
//!
//! Each criterion prints one line. Randomized checks draw from ChaCha8 with
//! the configured seed and a per-criterion stream, so reruns are identical.

use crate::charsum::{count_m, degree_sum, orthogonality_sum};
use crate::config::Config;
use crate::families::{
    cubic_lemma_bruteforce, cubic_lemma_predicate, example2_recipe_one, example2_recipe_two,
    nonexistence_witness, theorem_nbc_evaluate, theorem_nbc_predicate, MonomialFamilyParams, NbcFamilyParams,
};
use crate::field::{Element, FieldCtx};
use crate::linpoly::{annihilator_poly, image_poly_for_subspace, FormalLinPoly, LinearizedPoly, Subspace};
use crate::planarity::{
    criterion_quadratic, eval_general, is_planar_bruteforce_general, is_planar_rank, is_planar_reduction,
    BruteForcer, Monomial, PlanarCandidate,
};
use crate::search::{run as run_search, SearchJob, Summary};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use std::time::Instant;

#[derive(Debug, Clone)]
#[derive(Default)]
pub struct Options {
    /// Criterion number or tag (`classical`, `methods`, `criterion`,
    /// `theorem-f`, `nbc`, `cubic`, `kernel`, `subspace`, `counting`,
    /// `nonexistence`, `determinism`).
    pub filter: Option<String>,
    /// Replaces one preflight field with one built over a non-primitive modulus.
    pub corrupt_modulus: bool,
    pub config: Config,
}


#[derive(Debug, Clone)]
pub struct Outcome {
    /// 0 for the field preflight, otherwise the criterion number.
    pub id: u32,
    pub tag: &'static str,
    pub pass: bool,
    pub detail: String,
    pub secs: f64,
}

impl Outcome {
    pub fn line(&self) -> String {
        let label = if self.id == 0 { " -".to_string() } else { format!("{:>2}", self.id) };
        format!(
            "{} {} {:<12} {} ({:.2} s)",
            if self.pass { "PASS" } else { "FAIL" },
            label,
            self.tag,
            self.detail,
            self.secs
        )
    }
}

type Check = Result<(bool, String), String>;

const CRITERIA: [(u32, &str); 12] = [
    (1, "classical"),
    (2, "methods"),
    (3, "criterion"),
    (4, "theorem-f"),
    (5, "nbc"),
    (6, "cubic"),
    (7, "cubic"),
    (8, "kernel"),
    (9, "subspace"),
    (10, "counting"),
    (11, "nonexistence"),
    (12, "determinism"),
];

/// Runs the selected criteria in order, passing each outcome to `each` as it finishes.
pub fn run(opts: &Options, mut each: impl FnMut(&Outcome)) -> Vec<Outcome> {
    let mut out = Vec::new();
    let mut record = |id: u32, tag: &'static str, f: &dyn Fn() -> Check| {
        let t0 = Instant::now();
        let (pass, detail) = match f() {
            Ok(r) => r,
            Err(e) => (false, format!("error: {e}")),
        };
        let o = Outcome { id, tag, pass, detail, secs: t0.elapsed().as_secs_f64() };
        each(&o);
        out.push(o);
    };
    record(0, "field", &|| preflight(opts.corrupt_modulus));
    let cfg = &opts.config;
    for (id, tag) in CRITERIA {
        let selected = match &opts.filter {
            None => true,
            Some(f) => f == tag || f.parse::<u32>() == Ok(id),
        };
        if !selected {
            continue;
        }
        let check: &dyn Fn() -> Check = match id {
            1 => &classical,
            2 => &|| methods(cfg),
            3 => &|| criterion(cfg),
            4 => &|| theorem_f(cfg),
            5 => &|| nbc(cfg),
            6 => &|| cubic_scan(cfg),
            7 => &|| cubic_lemma(cfg),
            8 => &kernel_bound,
            9 => &subspaces,
            10 => &counting,
            11 => &|| nonexistence(cfg),
            _ => &|| determinism(cfg),
        };
        record(id, tag, check);
    }
    out
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn rng(cfg: &Config, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(cfg.seed);
    r.set_stream(stream);
    r
}

fn within(budget: f64, t0: Instant) -> (bool, String) {
    let dt = t0.elapsed().as_secs_f64();
    (dt <= budget, format!("{dt:.1}s of {budget:.0}s budget"))
}

fn job(s: &str) -> SearchJob {
    serde_json::from_str(s).expect("built-in job parses")
}

fn sweep(job: &SearchJob, cfg: &Config) -> Result<Summary, String> {
    run_search(job, cfg, |_| Ok(())).map_err(err)
}

fn random_elem(ctx: &FieldCtx, r: &mut ChaCha8Rng) -> Element {
    Element::from_index(r.random_range(0..ctx.size()))
}

fn random_nonzero(ctx: &FieldCtx, r: &mut ChaCha8Rng) -> Element {
    Element::from_index(r.random_range(1..ctx.size()))
}

fn random_ell(ctx: &FieldCtx, r: &mut ChaCha8Rng) -> LinearizedPoly {
    let coeffs = (0..ctx.degree()).map(|_| random_elem(ctx, r)).collect();
    LinearizedPoly::from_coeffs(ctx, coeffs).expect("in range")
}

fn preflight(corrupt: bool) -> Check {
    let mut names = Vec::new();
    for (p, m, n) in [(3, 1, 2), (3, 1, 3), (3, 2, 2), (3, 1, 5), (5, 1, 3), (5, 2, 2)] {
        let ctx = if corrupt && (p, m, n) == (3, 1, 2) {
            // x^2 + 1 is irreducible over F_3 but x has order 4
            FieldCtx::from_modulus_unchecked(3, 1, 2, vec![1, 0, 1]).map_err(err)?
        } else {
            FieldCtx::new(p, m, n).map_err(err)?
        };
        if let Err(e) = ctx.check_invariants() {
            return Ok((false, format!("F_{} with modulus {:?}: {e}", ctx.size(), ctx.modulus())));
        }
        names.push(format!("F_{}", ctx.size()));
    }
    Ok((true, format!("tables consistent for {}", names.join(", "))))
}

fn classical() -> Check {
    let t0 = Instant::now();
    let cap = 1 << 16;
    let mut planar = 0;
    let mut bad = Vec::new();
    let mut test = |ctx: &FieldCtx, name: String, monos: Vec<Monomial>| -> Result<(), String> {
        let r = is_planar_bruteforce_general(ctx, &monos, cap).map_err(err)?;
        if r.planar {
            planar += 1;
        } else {
            bad.push(name);
        }
        Ok(())
    };
    let f9 = FieldCtx::new(3, 1, 2).map_err(err)?;
    let f27 = FieldCtx::new(3, 1, 3).map_err(err)?;
    let f243 = FieldCtx::new(3, 1, 5).map_err(err)?;
    let one = Element::ONE;
    let neg = |ctx: &FieldCtx, x| ctx.neg(x);
    test(&f9, "x^2 on F_9".into(), vec![(one, 2)])?;
    test(&f27, "x^4 on F_27".into(), vec![(one, 4)])?;
    test(&f243, "x^14 on F_243".into(), vec![(one, 14)])?;
    test(&f9, "x^10+x^6-x^2 on F_9".into(), vec![(one, 10), (one, 6), (neg(&f9, one), 2)])?;
    for u in f27.elements() {
        let monos = vec![(one, 10), (neg(&f27, u), 6), (neg(&f27, f27.mul(u, u)), 2)];
        test(&f27, format!("x^10-ux^6-u^2x^2, u={}", f27.format_element(u)), monos)?;
    }
    let x4 = [(one, 4)];
    let r = is_planar_bruteforce_general(&f9, &x4, cap).map_err(err)?;
    let witness_ok = !r.planar && r.witness.is_some_and(|w| w.verify_with(&f9, |x| eval_general(&f9, &x4, x)));
    let (fast, timing) = within(5.0, t0);
    let pass = bad.is_empty() && witness_ok && fast;
    let detail = if bad.is_empty() {
        format!("{planar} fixtures planar, x^4 on F_9 refuted with valid witness: {witness_ok}, {timing}")
    } else {
        format!("not planar: {}", bad.join("; "))
    };
    Ok((pass, detail))
}

fn methods(cfg: &Config) -> Check {
    let mut checked = 0;
    let mut disagreements = 0;
    let mut bad_witness = 0;
    let mut compare = |ctx: &FieldCtx, bf: &BruteForcer, cand: &PlanarCandidate| -> Result<(), String> {
        let reports = [
            bf.check(cand).map_err(err)?,
            is_planar_rank(ctx, cand),
            is_planar_reduction(ctx, cand, cfg.brute_cap).map_err(err)?,
        ];
        checked += 1;
        if reports.iter().any(|r| r.planar != reports[0].planar) {
            disagreements += 1;
        }
        bad_witness += reports.iter().filter(|r| r.witness.is_some_and(|w| !w.verify(ctx, cand))).count();
        Ok(())
    };
    let f9 = FieldCtx::new(3, 1, 2).map_err(err)?;
    let bf9 = BruteForcer::new(&f9, cfg.brute_cap).map_err(err)?;
    for a in f9.elements() {
        for b in f9.elements() {
            for t in 0..f9.degree() {
                let cand = PlanarCandidate::new(&f9, a, LinearizedPoly::monomial(&f9, b, t)).map_err(err)?;
                compare(&f9, &bf9, &cand)?;
            }
        }
    }
    let f27 = FieldCtx::new(3, 1, 3).map_err(err)?;
    let bf27 = BruteForcer::new(&f27, cfg.brute_cap).map_err(err)?;
    let mut r = rng(cfg, 2);
    for _ in 0..500 {
        let a = random_elem(&f27, &mut r);
        let cand = PlanarCandidate::new(&f27, a, random_ell(&f27, &mut r)).map_err(err)?;
        compare(&f27, &bf27, &cand)?;
    }
    Ok((
        disagreements == 0 && bad_witness == 0,
        format!("{checked} candidates, {disagreements} disagreements, {bad_witness} invalid witnesses"),
    ))
}

fn criterion(cfg: &Config) -> Check {
    let f9 = FieldCtx::new(3, 1, 2).map_err(err)?;
    let bf = BruteForcer::new(&f9, cfg.brute_cap).map_err(err)?;
    let mut small = 0;
    let mut small_bad = 0;
    for a in f9.elements() {
        for b in f9.elements() {
            for t in 0..f9.degree() {
                let cand = PlanarCandidate::new(&f9, a, LinearizedPoly::monomial(&f9, b, t)).map_err(err)?;
                small += 1;
                if criterion_quadratic(&f9, &cand).map_err(err)? != bf.check(&cand).map_err(err)?.planar {
                    small_bad += 1;
                }
            }
        }
    }
    let t0 = Instant::now();
    let mut all = cfg.clone();
    all.audit_ratio = 1;
    let s = sweep(
        &job(r#"{"p":5,"m":2,"n":2,"family":"monomial","k":1,"filters":["criterion-n2"],"oracle":"bruteforce"}"#),
        &all,
    )?;
    let budget = if cfg.workers >= 8 { 120.0 } else { 600.0 };
    let (fast, timing) = within(budget, t0);
    let pass = small_bad == 0 && s.disagreements == 0 && s.oracle_runs == s.candidates && fast;
    Ok((
        pass,
        format!(
            "F_9: {small} candidates, {small_bad} disagreements; F_625: {} candidates, {} planar, {} disagreements, {timing}",
            s.candidates, s.planar, s.disagreements
        ),
    ))
}

fn theorem_f(cfg: &Config) -> Check {
    let mut all = cfg.clone();
    all.audit_ratio = 1;
    let big = sweep(
        &job(r#"{"p":5,"m":2,"n":2,"family":"monomial","k":1,"filters":["theorem-monomial"],"oracle":"rank"}"#),
        &all,
    )?;
    let small = sweep(
        &job(r#"{"p":3,"m":2,"n":2,"family":"monomial","k":1,"filters":["theorem-monomial"],"oracle":"rank"}"#),
        &all,
    )?;
    let pass = big.disagreements == 0 && big.planar > 0 && small.planar == 0 && small.filter_planar == 0;
    Ok((
        pass,
        format!(
            "q=25: {} predicate-true, {} planar, {} disagreements; q=9: {} predicate-true, {} planar",
            big.filter_planar, big.planar, big.disagreements, small.filter_planar, small.planar
        ),
    ))
}

fn nbc(cfg: &Config) -> Check {
    let ctx = FieldCtx::new(3, 2, 2).map_err(err)?;
    let bf = BruteForcer::new(&ctx, cfg.brute_cap).map_err(err)?;
    let (mut planar, mut mismatches, mut simplified) = (0, 0, 0);
    let (mut r1, mut r1_planar, mut r2, mut r2_planar) = (0, 0, 0, 0);
    for c0 in ctx.elements() {
        let p = NbcFamilyParams::unit(&ctx, 1, c0).map_err(err)?;
        let pred = theorem_nbc_predicate(&ctx, &p).map_err(err)?;
        simplified += theorem_nbc_evaluate(&ctx, &p).simplified.is_some() as u32;
        let oracle = bf.check(&p.candidate(&ctx)).map_err(err)?.planar;
        planar += oracle as u32;
        mismatches += (pred != oracle) as u32;
        if example2_recipe_one(&ctx, 1, c0) {
            r1 += 1;
            r1_planar += oracle as u32;
        }
        if example2_recipe_two(&ctx, 1, c0) == Some(true) {
            r2 += 1;
            r2_planar += oracle as u32;
        }
    }
    let pass = mismatches == 0 && r1 > 0 && r1 == r1_planar && r2 == r2_planar;
    Ok((
        pass,
        format!(
            "81 c0: {planar} planar, {mismatches} mismatches, simplified form checked on {simplified}; \
             recipes {r1_planar}/{r1} and {r2_planar}/{r2} planar"
        ),
    ))
}

fn cubic_scan(cfg: &Config) -> Check {
    let t0 = Instant::now();
    let mut all = cfg.clone();
    all.audit_ratio = 1;
    let s = sweep(&job(r#"{"p":3,"m":1,"n":3,"family":"cubic","filters":["criterion-n3"],"oracle":"rank"}"#), &all)?;
    let (fast, timing) = within(60.0, t0);
    Ok((
        s.disagreements == 0 && s.candidates == 2 * 19683 && fast,
        format!("{} candidates, {} planar, {} disagreements, {timing}", s.candidates, s.planar, s.disagreements),
    ))
}

fn det3(ctx: &FieldCtx, m: [[Element; 3]; 3]) -> Element {
    let mut acc = Element::ZERO;
    for (perm, sign) in [([0, 1, 2], 1), ([1, 2, 0], 1), ([2, 0, 1], 1), ([0, 2, 1], -1), ([2, 1, 0], -1), ([1, 0, 2], -1)] {
        let term = ctx.mul(ctx.mul(m[0][perm[0]], m[1][perm[1]]), m[2][perm[2]]);
        acc = if sign > 0 { ctx.add(acc, term) } else { ctx.sub(acc, term) };
    }
    acc
}

fn cubic_lemma(cfg: &Config) -> Check {
    let f27 = FieldCtx::new(3, 1, 3).map_err(err)?;
    let mut cases = 0;
    let mut bad = 0;
    for a in f27.nonzero_elements() {
        for b in f27.nonzero_elements() {
            for r in f27.base_elements() {
                cases += 1;
                let pred = cubic_lemma_predicate(&f27, a, b, r).map_err(err)?;
                bad += (pred != cubic_lemma_bruteforce(&f27, a, b, r).map_err(err)?) as u32;
            }
        }
    }
    let f125 = FieldCtx::new(5, 1, 3).map_err(err)?;
    let base = f125.base_elements();
    let mut rg = rng(cfg, 7);
    for _ in 0..10_000 {
        let (a, b) = (random_nonzero(&f125, &mut rg), random_nonzero(&f125, &mut rg));
        let r = base[rg.random_range(0..base.len())];
        cases += 1;
        let pred = cubic_lemma_predicate(&f125, a, b, r).map_err(err)?;
        bad += (pred != cubic_lemma_bruteforce(&f125, a, b, r).map_err(err)?) as u32;
    }
    let mut det_bad = 0;
    let fr = |x, e| f125.frobenius(x, e);
    for _ in 0..1000 {
        let (u, a, b) = (random_elem(&f125, &mut rg), random_elem(&f125, &mut rg), random_elem(&f125, &mut rg));
        let lhs = f125.sub(
            f125.add(f125.add(f125.rel_norm(u), f125.rel_norm(a)), f125.rel_norm(b)),
            f125.rel_trace(f125.mul(f125.mul(a, b), fr(u, 2))),
        );
        let d = det3(&f125, [[u, a, fr(b, 2)], [b, fr(u, 1), fr(a, 1)], [fr(a, 2), fr(b, 1), fr(u, 2)]]);
        det_bad += (lhs != d) as u32;
    }
    Ok((
        bad == 0 && det_bad == 0,
        format!("{cases} (A,B,r) triples, {bad} disagreements; determinant identity failed on {det_bad}/1000"),
    ))
}

/// `(|ker ℓ|, whether ℓ(F) ∩ F_q = {0})`.
fn kernel_shape(ctx: &FieldCtx, ell: &LinearizedPoly) -> (u64, bool) {
    let image = ell.image(ctx);
    let meets = ctx.base_elements().into_iter().any(|x| !x.is_zero() && image.contains(ctx, x));
    (ell.kernel(ctx).cardinality(ctx), !meets)
}

fn kernel_bound() -> Check {
    let mut planar = 0;
    let mut disjoint = 0;
    let mut bad = Vec::new();
    let mut inspect = |ctx: &FieldCtx, cand: &PlanarCandidate| {
        if !is_planar_rank(ctx, cand).planar {
            return;
        }
        planar += 1;
        let q = ctx.q() as u64;
        let (k, avoids) = kernel_shape(ctx, &cand.ell);
        disjoint += avoids as u32;
        if k > q || (avoids && k != q) {
            bad.push(format!("F_{}: |ker| = {k}, image avoids F_q: {avoids}", ctx.size()));
        }
    };
    let f9 = FieldCtx::new(3, 1, 2).map_err(err)?;
    for a in f9.elements() {
        for b in f9.elements() {
            for t in 0..2 {
                inspect(&f9, &PlanarCandidate::new(&f9, a, LinearizedPoly::monomial(&f9, b, t)).map_err(err)?);
            }
        }
    }
    let f625 = FieldCtx::new(5, 2, 2).map_err(err)?;
    for b in f625.elements() {
        for c in f625.elements() {
            if let Ok(p) = MonomialFamilyParams::new(&f625, 1, b, c) {
                inspect(&f625, &p.candidate(&f625));
            }
        }
    }
    let f81 = FieldCtx::new(3, 2, 2).map_err(err)?;
    for c0 in f81.elements() {
        inspect(&f81, &NbcFamilyParams::unit(&f81, 1, c0).map_err(err)?.candidate(&f81));
    }
    let detail = format!("{planar} planar candidates, {disjoint} with image avoiding F_q, {} violations", bad.len());
    Ok((bad.is_empty() && planar > 0, bad.first().map_or(detail.clone(), |b| format!("{detail}; {b}"))))
}

fn subspaces() -> Check {
    let mut count = 0;
    let mut bad = 0;
    for (p, m) in [(3, 3), (3, 4)] {
        let ctx = FieldCtx::new(p, m, 1).map_err(err)?;
        let full = FormalLinPoly::full_field(&ctx);
        for k in 0..=ctx.degree() as usize {
            for w in Subspace::enumerate(&ctx, k) {
                count += 1;
                let Ok(g) = image_poly_for_subspace(&ctx, &w) else {
                    bad += 1;
                    continue;
                };
                let image: BTreeSet<u32> = ctx.elements().map(|x| g.eval(&ctx, x).index()).collect();
                let want: BTreeSet<u32> = w.elements(&ctx).iter().map(|e| e.index()).collect();
                if image != want || annihilator_poly(&ctx, &w).compose(&ctx, &g) != full {
                    bad += 1;
                }
            }
        }
    }
    Ok((bad == 0 && count == 28 + 212, format!("{count} subspaces of F_27 and F_81, {bad} failures")))
}

fn counting() -> Check {
    let t0 = Instant::now();
    let mut notes = Vec::new();
    let mut ok = true;
    for k in [5, 6] {
        let ctx = FieldCtx::new(3, 1, k).map_err(err)?;
        let c = Element::ONE;
        let mut min_m = u64::MAX;
        let mut worst = 0f64;
        for upsilon in ctx.base_elements() {
            for omega in ctx.base_elements().into_iter().filter(|x| !x.is_zero()) {
                let rec = count_m(&ctx, upsilon, omega, c).map_err(err)?;
                let orth = orthogonality_sum(&ctx, upsilon, omega, c).map_err(err)?;
                let q = ctx.q() as f64;
                worst = worst.max((orth - Complex64::new(q * (q - 1.0) * rec.m as f64, 0.0)).norm());
                ok &= rec.m >= 1 && rec.meets_bound();
                min_m = min_m.min(rec.m);
            }
        }
        ok &= worst < 1e-4;
        notes.push(format!("k={k}: min M = {min_m}, orthogonality error {worst:.1e}"));
    }
    for p in [3, 5] {
        let ctx = FieldCtx::new(p, 1, 1).map_err(err)?;
        let q = p as f64;
        let c = Element::ONE;
        let mut worst = 0f64;
        for chi in ctx.additive_chars().into_iter().filter(|x| !x.is_trivial()) {
            for psi in ctx.multiplicative_chars() {
                let want = if psi.is_trivial() { Complex64::new(q, 0.0) } else { psi.eval(&ctx, ctx.neg(c)) * q };
                worst = worst.max((degree_sum(&ctx, chi, psi, 2, c) - want).norm());
                if psi.is_trivial() {
                    worst = worst.max(degree_sum(&ctx, chi, psi, 3, c).norm());
                }
            }
        }
        ok &= worst < 1e-9;
        notes.push(format!("q={p}: degree sums off by {worst:.1e}"));
    }
    let (fast, timing) = within(30.0, t0);
    notes.push(timing);
    Ok((ok && fast, notes.join("; ")))
}

fn nonexistence(cfg: &Config) -> Check {
    let t0 = Instant::now();
    let ctx = FieldCtx::new(3, 1, 5).map_err(err)?;
    let mut rg = rng(cfg, 11);
    let (mut no_witness, mut planar, mut bad_witness) = (0, 0, 0);
    for _ in 0..1000 {
        let a = random_nonzero(&ctx, &mut rg);
        let cand = PlanarCandidate::new(&ctx, a, random_ell(&ctx, &mut rg)).map_err(err)?;
        no_witness += nonexistence_witness(&ctx, a).map_err(err)?.is_none() as u32;
        let r = is_planar_rank(&ctx, &cand);
        planar += r.planar as u32;
        bad_witness += r.witness.is_some_and(|w| !w.verify(&ctx, &cand)) as u32;
    }
    let (fast, timing) = within(600.0, t0);
    Ok((
        no_witness == 0 && planar == 0 && bad_witness == 0 && fast,
        format!("1000 candidates on F_243: {no_witness} without u, {planar} planar, {bad_witness} bad witnesses, {timing}"),
    ))
}

fn determinism(cfg: &Config) -> Check {
    let jobs = [
        r#"{"p":3,"m":1,"n":2,"family":"monomial-ell","filters":["criterion-n2"],"oracle":"bruteforce"}"#,
        r#"{"p":5,"m":1,"n":3,"family":"cubic","filters":["criterion-n3"],"sample":{"seeded":{"count":3000}}}"#,
        r#"{"p":5,"m":2,"n":2,"family":"monomial","filters":["theorem-monomial","criterion-n2"],"sample":{"seeded":{"count":3000}}}"#,
    ];
    let mut identical = 0;
    for j in jobs {
        let j = job(j);
        let mut streams = Vec::new();
        for workers in [1, 2, 4] {
            let mut c = cfg.clone();
            c.workers = workers;
            let mut buf = String::new();
            run_search(&j, &c, |v| {
                buf.push_str(&v.to_string());
                buf.push('\n');
                Ok(())
            })
            .map_err(err)?;
            streams.push(buf);
        }
        identical += streams.windows(2).all(|w| w[0] == w[1]) as u32;
    }
    Ok((identical == 3, format!("{identical}/3 scans byte-identical across 1, 2 and 4 workers")))
}
