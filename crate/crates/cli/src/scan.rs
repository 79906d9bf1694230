use crate::Failure;
use ffplanar::config::{Config, OutputFormat};
use ffplanar::search::{self, SearchError, SearchJob};
use serde_json::Value;
use std::io::Write;
use std::path::PathBuf;

#[derive(clap::Args, Debug)]
pub struct Args {
    /// Job spec JSON file (`-` for stdin).
    job: PathBuf,
    /// Write records here instead of stdout.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

const CSV_HEADER: [&str; 12] = [
    "index", "domain_index", "a", "ell", "params", "filters", "oracle_planar", "c", "x1", "x2", "audit",
    "disagreement",
];

fn csv_row(v: &Value) -> Vec<String> {
    let s = |v: &Value| match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    };
    let filters = v["filters"]
        .as_object()
        .map(|m| m.iter().map(|(k, b)| format!("{k}={b}")).collect::<Vec<_>>().join(";"))
        .unwrap_or_default();
    let w = &v["oracle"]["witness"];
    vec![
        s(&v["index"]),
        s(&v["domain_index"]),
        s(&v["candidate"]["a"]),
        s(&v["candidate"]["ell"]["coeffs"]),
        s(&v["params"]),
        filters,
        s(&v["oracle"]["planar"]),
        s(&w["c"]),
        s(&w["x1"]),
        s(&w["x2"]),
        s(&v["audit"]),
        s(&v["disagreement"]),
    ]
}

pub fn run(args: &Args, cfg: &Config) -> Result<u8, Failure> {
    let text = if args.job.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin())
    } else {
        std::fs::read_to_string(&args.job)
    }
    .map_err(|e| Failure::usage(format!("{}: {e}", args.job.display())))?;
    let job: SearchJob = serde_json::from_str(&text).map_err(|e| Failure::usage(format!("malformed job: {e}")))?;
    let sink: Box<dyn Write> = match &args.out {
        Some(p) => Box::new(std::fs::File::create(p).map_err(|e| Failure::usage(format!("{}: {e}", p.display())))?),
        None => Box::new(std::io::stdout().lock()),
    };
    let mut sink = std::io::BufWriter::new(sink);
    let result = if cfg.format == OutputFormat::Csv {
        let mut w = csv::Writer::from_writer(&mut sink);
        w.write_record(CSV_HEADER).map_err(std::io::Error::other).map_err(io_failure)?;
        let r = search::run(&job, cfg, |v| {
            if v.get("summary").is_some() {
                eprintln!("{v}");
                return Ok(());
            }
            w.write_record(csv_row(v)).map_err(std::io::Error::other)
        });
        w.flush().map_err(io_failure)?;
        r
    } else {
        search::run(&job, cfg, |v| writeln!(sink, "{v}"))
    };
    let summary = result.map_err(|e| match e {
        SearchError::Io(e) => io_failure(e),
        other => Failure::usage(other),
    })?;
    sink.flush().map_err(io_failure)?;
    Ok(if summary.disagreements == 0 { 0 } else { 2 })
}

fn io_failure(e: std::io::Error) -> Failure {
    Failure { code: 74, message: e.to_string() }
}
