use crate::Failure;
use ffplanar::config::{Config, OutputFormat};
use ffplanar::field::FieldCtx;
use ffplanar::linpoly::{annihilator_poly, image_poly_for_subspace, FormalLinPoly, Subspace};
use serde_json::{json, Value};
use std::collections::BTreeSet;

#[derive(clap::Args, Debug)]
pub struct Args {
    #[arg(long)]
    p: u32,
    #[arg(long)]
    m: u32,
    #[arg(long, default_value_t = 1)]
    n: u32,
    /// Spanning vector as a digit string; repeat for more.
    #[arg(long, required_unless_present = "all")]
    basis: Vec<String>,
    /// Every subspace of the field instead.
    #[arg(long, conflicts_with = "basis")]
    all: bool,
}

fn coeffs(ctx: &FieldCtx, g: &FormalLinPoly) -> Vec<String> {
    g.coeffs().iter().map(|&c| ctx.format_element(c)).collect()
}

fn round_trip(ctx: &FieldCtx, w: &Subspace) -> Result<(Value, bool), Failure> {
    let g = image_poly_for_subspace(ctx, w).map_err(Failure::usage)?;
    let h = annihilator_poly(ctx, w);
    let image: BTreeSet<u32> = ctx.elements().map(|x| g.eval(ctx, x).index()).collect();
    let want: BTreeSet<u32> = w.elements(ctx).iter().map(|e| e.index()).collect();
    let image_ok = image == want;
    let compose_ok = h.compose(ctx, &g) == FormalLinPoly::full_field(ctx);
    let v = json!({
        "subspace": w.to_json(ctx),
        "dim": w.dim(),
        "g": coeffs(ctx, &g),
        "annihilator": coeffs(ctx, &h),
        "image_matches": image_ok,
        "compose_is_full": compose_ok,
    });
    Ok((v, image_ok && compose_ok))
}

pub fn run(args: &Args, cfg: &Config) -> Result<u8, Failure> {
    let ctx = FieldCtx::with_table_cap(args.p, args.m, args.n, cfg.table_cap).map_err(Failure::usage)?;
    let spaces = if args.all {
        (0..=ctx.degree() as usize).flat_map(|k| Subspace::enumerate(&ctx, k)).collect()
    } else {
        let vs = args.basis.iter().map(|s| ctx.parse_element(s)).collect::<Result<Vec<_>, _>>().map_err(Failure::usage)?;
        vec![Subspace::span(&ctx, &vs)]
    };
    let mut ok = true;
    let mut out = Vec::new();
    for w in &spaces {
        let (v, good) = round_trip(&ctx, w)?;
        ok &= good;
        out.push(v);
    }
    match cfg.format {
        OutputFormat::Json if out.len() == 1 => println!("{}", serde_json::to_string_pretty(&out[0]).expect("serializes")),
        OutputFormat::Json => println!("{}", serde_json::to_string_pretty(&out).expect("serializes")),
        OutputFormat::Jsonl | OutputFormat::Csv => out.iter().for_each(|v| println!("{v}")),
    }
    Ok(if ok { 0 } else { 2 })
}
