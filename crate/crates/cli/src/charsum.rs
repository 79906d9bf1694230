use crate::Failure;
use ffplanar::charsum::count_m;
use ffplanar::config::{Config, OutputFormat};
use ffplanar::field::{Element, FieldCtx};
use ffplanar::poly::prime_factors;
use serde_json::Value;

#[derive(clap::Args, Debug)]
pub struct Args {
    /// Base field size, a prime power.
    #[arg(long)]
    q: u32,
    /// Extension degree.
    #[arg(long)]
    k: u32,
    /// `c ∈ F_q^*` as a digit string.
    #[arg(long, default_value = "1")]
    c: String,
    /// `υ ∈ F_q`.
    #[arg(long, default_value = "0", conflicts_with = "all_targets")]
    upsilon: String,
    /// `ω ∈ F_q^*`.
    #[arg(long, default_value = "1", conflicts_with = "all_targets")]
    omega: String,
    /// Every `(υ, ω) ∈ F_q × F_q^*`.
    #[arg(long)]
    all_targets: bool,
}

fn prime_power(q: u32) -> Option<(u32, u32)> {
    let f = prime_factors(q as u64);
    if f.len() != 1 {
        return None;
    }
    let p = f[0] as u32;
    let mut m = 0;
    let mut r = q;
    while r.is_multiple_of(p) {
        r /= p;
        m += 1;
    }
    Some((p, m))
}

pub fn run(args: &Args, cfg: &Config) -> Result<u8, Failure> {
    let (p, m) = prime_power(args.q).ok_or_else(|| Failure::usage(format!("q = {} is not a prime power", args.q)))?;
    let ctx = FieldCtx::with_table_cap(p, m, args.k, cfg.table_cap).map_err(Failure::usage)?;
    let parse = |s: &str| ctx.parse_element(s).map_err(Failure::usage);
    let c = parse(&args.c)?;
    let targets: Vec<(Element, Element)> = if args.all_targets {
        let base = ctx.base_elements();
        base.iter().flat_map(|&u| base.iter().filter(|w| !w.is_zero()).map(move |&w| (u, w))).collect()
    } else {
        vec![(parse(&args.upsilon)?, parse(&args.omega)?)]
    };
    let mut records = Vec::new();
    for (u, w) in targets {
        let rec = count_m(&ctx, u, w, c).map_err(Failure::usage)?;
        let mut v = rec.to_json(&ctx);
        v["meets_bound"] = Value::Bool(rec.meets_bound());
        records.push(v);
    }
    match cfg.format {
        OutputFormat::Json if records.len() == 1 => {
            println!("{}", serde_json::to_string_pretty(&records[0]).expect("serializes"))
        }
        OutputFormat::Json => println!("{}", serde_json::to_string_pretty(&records).expect("serializes")),
        OutputFormat::Jsonl => records.iter().for_each(|r| println!("{r}")),
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(std::io::stdout());
            let cols = ["q", "k", "upsilon", "omega", "c", "M", "bound", "meets_bound"];
            let io = |e: csv::Error| Failure { code: 74, message: e.to_string() };
            w.write_record(cols).map_err(io)?;
            for r in &records {
                w.write_record(cols.map(|k| match &r[k] {
                    Value::String(s) => s.clone(),
                    other => other.to_string(),
                }))
                .map_err(io)?;
            }
            w.flush().map_err(|e| Failure { code: 74, message: e.to_string() })?;
        }
    }
    Ok(0)
}
