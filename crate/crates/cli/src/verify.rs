use crate::Failure;
use ffplanar::config::{Config, OutputFormat};
use ffplanar::families::{cubic_theorem_predicate, example1_ell, CubicCoeffs};
use ffplanar::field::{Element, FieldCtx};
use ffplanar::linpoly::LinearizedPoly;
use ffplanar::planarity::{
    criterion_quadratic, is_planar_bruteforce, is_planar_rank, is_planar_reduction, Method, PlanarCandidate,
    VerificationReport,
};
use serde_json::{json, Value};
use std::path::PathBuf;
use std::time::Instant;

#[derive(clap::Args, Debug)]
pub struct Args {
    /// Candidate JSON file (`-` for stdin); otherwise use the inline flags.
    #[arg(conflicts_with_all = ["p", "m", "n", "a", "ell", "ell_preset"])]
    file: Option<PathBuf>,
    #[arg(long, required_unless_present = "file")]
    p: Option<u32>,
    #[arg(long, required_unless_present = "file")]
    m: Option<u32>,
    #[arg(long, required_unless_present = "file")]
    n: Option<u32>,
    /// `a` as a digit string, e.g. `1,2`.
    #[arg(long, default_value = "0")]
    a: String,
    /// `ℓ` as `{"coeffs":{"t":"digits"}}`.
    #[arg(long, conflicts_with = "ell_preset")]
    ell: Option<String>,
    #[arg(long, value_enum)]
    ell_preset: Option<Preset>,
}

#[derive(clap::ValueEnum, Clone, Copy, Debug)]
enum Preset {
    /// `Tr(a)·(x^{p^{3k}} − x^{p^{2k}} − x^{p^k} − x)` for `q = p^{2k}`, `n = 2`.
    Example1,
    /// `ℓ(x) = x`.
    Identity,
}

fn load(args: &Args, cfg: &Config) -> Result<(FieldCtx, PlanarCandidate), Failure> {
    if let Some(path) = &args.file {
        let text = if path.as_os_str() == "-" {
            std::io::read_to_string(std::io::stdin())
        } else {
            std::fs::read_to_string(path)
        }
        .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
        let v: Value = serde_json::from_str(&text).map_err(|e| Failure::usage(format!("malformed JSON: {e}")))?;
        return PlanarCandidate::from_json(&v, cfg.table_cap).map_err(Failure::usage);
    }
    let (p, m, n) = (args.p.unwrap_or(0), args.m.unwrap_or(0), args.n.unwrap_or(0));
    let ctx = FieldCtx::with_table_cap(p, m, n, cfg.table_cap).map_err(Failure::usage)?;
    let a = ctx.parse_element(&args.a).map_err(Failure::usage)?;
    let ell = match (&args.ell, args.ell_preset) {
        (Some(s), _) => {
            let v: Value = serde_json::from_str(s).map_err(|e| Failure::usage(format!("malformed --ell: {e}")))?;
            LinearizedPoly::from_json(&ctx, &v).map_err(Failure::usage)?
        }
        (None, Some(Preset::Identity)) => LinearizedPoly::identity(&ctx),
        (None, Some(Preset::Example1)) => {
            let base = example1_ell(&ctx).map_err(Failure::usage)?;
            let t = ctx.rel_trace(a);
            if t.is_zero() { base } else { base.scale(&ctx, t) }
        }
        (None, None) => LinearizedPoly::zero(&ctx),
    };
    let cand = PlanarCandidate::new(&ctx, a, ell).map_err(Failure::usage)?;
    Ok((ctx, cand))
}

/// A closed-form report, borrowing the rank witness when it says not planar.
fn closed_form(ctx: &FieldCtx, cand: &PlanarCandidate, method: Method, planar: bool, t0: Instant) -> VerificationReport {
    let ms = t0.elapsed().as_secs_f64() * 1e3;
    let witness = if planar { None } else { is_planar_rank(ctx, cand).witness };
    VerificationReport { planar, method, witness, ms }
}

pub fn reports(ctx: &FieldCtx, cand: &PlanarCandidate, cfg: &Config) -> Result<Vec<VerificationReport>, Failure> {
    let mut out = vec![is_planar_rank(ctx, cand)];
    if ctx.size() as u64 <= cfg.brute_cap {
        out.push(is_planar_bruteforce(ctx, cand, cfg.brute_cap).map_err(Failure::usage)?);
        out.push(is_planar_reduction(ctx, cand, cfg.brute_cap).map_err(Failure::usage)?);
    }
    if ctx.n() == 2 {
        let t0 = Instant::now();
        let v = criterion_quadratic(ctx, cand).map_err(Failure::usage)?;
        out.push(closed_form(ctx, cand, Method::CriterionN2, v, t0));
    }
    if ctx.n() == 3 {
        let t0 = Instant::now();
        let v = if cand.a.is_zero() {
            cand.ell.is_permutation(ctx)
        } else {
            let cc = CubicCoeffs::from_ell(ctx, &cand.ell).map_err(Failure::usage)?;
            cubic_theorem_predicate(ctx, cand.a, &cc).map_err(Failure::usage)?
        };
        out.push(closed_form(ctx, cand, Method::CriterionN3, v, t0));
    }
    Ok(out)
}

pub fn run(args: &Args, cfg: &Config) -> Result<u8, Failure> {
    let (ctx, cand) = load(args, cfg)?;
    let reports = reports(&ctx, &cand, cfg)?;
    let planar = reports[0].planar;
    let agree = reports.iter().all(|r| r.planar == planar);
    let witness_ok = reports.iter().all(|r| r.witness.is_none_or(|w| w.verify(&ctx, &cand)));
    let agree = agree && witness_ok;
    let doc = json!({
        "candidate": cand.to_json(&ctx),
        "reports": reports.iter().map(|r| r.to_json(&ctx)).collect::<Vec<_>>(),
        "agree": agree,
        "planar": planar,
    });
    match cfg.format {
        OutputFormat::Json => println!("{}", serde_json::to_string_pretty(&doc).expect("serializes")),
        OutputFormat::Jsonl => println!("{doc}"),
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(std::io::stdout());
            let io = |e: csv::Error| Failure { code: 74, message: e.to_string() };
            w.write_record(["method", "planar", "c", "x1", "x2", "ms"]).map_err(io)?;
            for r in &reports {
                let f = |x: Option<Element>| x.map(|e| ctx.format_element(e)).unwrap_or_default();
                w.write_record([
                    r.method.as_str().to_string(),
                    r.planar.to_string(),
                    f(r.witness.map(|w| w.c)),
                    f(r.witness.map(|w| w.x1)),
                    f(r.witness.map(|w| w.x2)),
                    format!("{:.3}", r.ms),
                ])
                .map_err(io)?;
            }
            w.flush().map_err(|e| Failure { code: 74, message: e.to_string() })?;
        }
    }
    Ok(if !agree {
        2
    } else if planar {
        0
    } else {
        1
    })
}
