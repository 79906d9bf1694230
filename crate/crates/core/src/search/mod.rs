//! Parallel, reproducible sweeps over candidate families.
//!
//! A [`SearchJob`] names a family, the predicate filters to apply and an
//! oracle. Every candidate yields one record; the oracle runs whenever a
//! filter says planar, the filters disagree, the candidate falls on the
//! audit lattice, or no filters are set. Records come out in index order
//! regardless of the worker count.

mod dedup;
mod job;

pub use dedup::{dedup_by_scaling, scaling_orbit, ScalingClass};
pub use job::{Domain, Filter, Oracle, Params, Plan, Point, Sample, SearchJob};

use crate::config::Config;
use crate::families::FamilyError;
use crate::field::FieldError;
use crate::planarity::{
    is_planar_rank, is_planar_reduction, BruteForcer, PlanarityError, VerificationReport,
};
use crate::linpoly::LinPolyError;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};
use std::time::Instant;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("unknown filter `{0}`")]
    UnknownFilter(String),
    #[error("filter `{0}` does not apply to this family")]
    FilterNotApplicable(String),
    #[error("unknown oracle `{0}`")]
    UnknownOracle(String),
    #[error("domain of {size} candidates exceeds the exhaustive limit {limit}")]
    DomainTooLarge { size: u64, limit: u64 },
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    LinPoly(#[from] LinPolyError),
    #[error(transparent)]
    Planarity(#[from] PlanarityError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error("worker pool: {0}")]
    Pool(String),
    #[error("output: {0}")]
    Io(#[from] std::io::Error),
}

/// Totals for a finished sweep; also the last record of the stream.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub family: String,
    pub domain_size: u64,
    /// Records emitted (points outside the family are skipped).
    pub candidates: u64,
    pub skipped: u64,
    pub oracle_runs: u64,
    pub planar: u64,
    pub filter_planar: u64,
    pub disagreements: u64,
}

impl Summary {
    pub fn to_json(&self) -> Value {
        let mut v = serde_json::to_value(self).expect("summary serializes");
        v.as_object_mut().expect("object").insert("summary".into(), Value::Bool(true));
        v
    }
}

/// One evaluated candidate.
#[derive(Debug, Clone)]
pub struct Finding {
    pub index: u64,
    pub domain_index: u64,
    pub record: Value,
    pub filter_planar: bool,
    pub oracle_planar: Option<bool>,
    pub disagreement: bool,
}

const BLOCK: u64 = 256;

/// Runs `job`, handing each record to `sink` in index order, then the summary.
pub fn run(
    job: &SearchJob,
    cfg: &Config,
    mut sink: impl FnMut(&Value) -> std::io::Result<()>,
) -> Result<Summary, SearchError> {
    cfg.validate().map_err(|e| SearchError::Invalid(e.to_string()))?;
    let plan = job.plan(cfg)?;
    let count = match job.sample {
        Sample::Exhaustive => plan.size,
        Sample::Seeded { count } => count,
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers)
        .build()
        .map_err(|e| SearchError::Pool(e.to_string()))?;
    let brute = match plan.oracle {
        Oracle::Bruteforce => Some(BruteForcer::new(&plan.ctx, cfg.brute_cap)?),
        _ => None,
    };
    let mut summary = Summary { family: job.family.clone(), domain_size: plan.size, ..Default::default() };
    let blocks = count.div_ceil(BLOCK);
    let wave = (cfg.workers as u64 * 4).max(1);
    let mut start = 0;
    while start < blocks {
        let end = (start + wave).min(blocks);
        let results: Vec<Result<Vec<Option<Finding>>, SearchError>> = pool.install(|| {
            use rayon::prelude::*;
            (start..end)
                .into_par_iter()
                .map(|b| {
                    (b * BLOCK..((b + 1) * BLOCK).min(count))
                        .map(|i| evaluate(&plan, brute.as_ref(), job, cfg, i))
                        .collect()
                })
                .collect()
        });
        for block in results {
            for f in block? {
                let Some(f) = f else {
                    summary.skipped += 1;
                    continue;
                };
                summary.candidates += 1;
                summary.filter_planar += f.filter_planar as u64;
                if let Some(p) = f.oracle_planar {
                    summary.oracle_runs += 1;
                    summary.planar += p as u64;
                }
                summary.disagreements += f.disagreement as u64;
                sink(&f.record)?;
            }
        }
        start = end;
    }
    sink(&summary.to_json())?;
    Ok(summary)
}

/// [`run`] with the records collected in memory.
pub fn run_collect(job: &SearchJob, cfg: &Config) -> Result<(Vec<Value>, Summary), SearchError> {
    let mut out = Vec::new();
    let summary = run(job, cfg, |v| {
        out.push(v.clone());
        Ok(())
    })?;
    out.pop();
    Ok((out, summary))
}

/// Domain index of the `i`-th visited candidate.
pub fn sample_index(seed: u64, i: u64, size: u64) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(i);
    rng.random_range(0..size)
}

fn evaluate(plan: &Plan, brute: Option<&BruteForcer>, job: &SearchJob, cfg: &Config, i: u64) -> Result<Option<Finding>, SearchError> {
    let ctx = &plan.ctx;
    let t0 = Instant::now();
    let domain_index = match job.sample {
        Sample::Exhaustive => i,
        Sample::Seeded { .. } => sample_index(cfg.seed, i, plan.size),
    };
    let Some(point) = plan.domain.decode(ctx, domain_index) else {
        return Ok(None);
    };
    let mut verdicts = Map::new();
    let mut values = Vec::with_capacity(plan.filters.len());
    for &f in &plan.filters {
        let v = point.apply(ctx, f)?;
        verdicts.insert(f.name().into(), Value::Bool(v));
        values.push(v);
    }
    let filter_planar = values.iter().any(|&v| v);
    let split = values.windows(2).any(|w| w[0] != w[1]);
    let audit = i.is_multiple_of(cfg.audit_ratio);
    let need_oracle = values.is_empty() || filter_planar || split || audit;
    let report: Option<VerificationReport> = if need_oracle {
        Some(match plan.oracle {
            Oracle::Rank => is_planar_rank(ctx, &point.cand),
            Oracle::Bruteforce => brute.expect("built for this oracle").check(&point.cand)?,
            Oracle::Reduction => is_planar_reduction(ctx, &point.cand, cfg.brute_cap)?,
        })
    } else {
        None
    };
    let oracle_planar = report.as_ref().map(|r| r.planar);
    let disagreement = split || oracle_planar.is_some_and(|o| values.iter().any(|&v| v != o));
    let oracle_json = report.as_ref().map(|r| {
        let mut v = r.to_json(ctx);
        let obj = v.as_object_mut().expect("object");
        if !job.timing {
            obj.remove("ms");
        }
        v
    });
    let mut record = json!({
        "index": i,
        "domain_index": domain_index,
        "family": job.family,
        "candidate": point.cand.to_json(ctx),
        "params": point.params_json(ctx),
        "filters": verdicts,
        "oracle": oracle_json,
        "audit": audit,
        "disagreement": disagreement,
    });
    if job.timing {
        record["ms"] = json!(t0.elapsed().as_secs_f64() * 1e3);
    }
    Ok(Some(Finding { index: i, domain_index, record, filter_planar, oracle_planar, disagreement }))
}
