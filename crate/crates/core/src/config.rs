//! Run-time limits and defaults shared by the library and the CLI.

use crate::field::DEFAULT_TABLE_CAP;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Json,
    Jsonl,
    Csv,
}

impl std::str::FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "json" => Ok(Self::Json),
            "jsonl" => Ok(Self::Jsonl),
            "csv" => Ok(Self::Csv),
            other => Err(format!("unknown output format {other:?} (expected json, jsonl or csv)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    /// Largest field that gets discrete-log tables.
    pub table_cap: u64,
    /// Largest field the brute-force and reduction tests accept.
    pub brute_cap: u64,
    /// Seed for every sampled domain.
    pub seed: u64,
    /// Every `audit_ratio`-th candidate gets the oracle even when filters agree.
    pub audit_ratio: u64,
    pub workers: usize,
    pub format: OutputFormat,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            table_cap: DEFAULT_TABLE_CAP,
            brute_cap: 1 << 16,
            seed: 0x5EED,
            audit_ratio: 97,
            workers: std::thread::available_parallelism().map_or(1, |n| n.get()),
            format: OutputFormat::Json,
        }
    }
}

impl Config {
    pub fn validate(&self) -> Result<(), String> {
        if self.table_cap == 0 || self.brute_cap == 0 {
            return Err("caps must be positive".into());
        }
        if self.audit_ratio == 0 {
            return Err("audit_ratio must be positive".into());
        }
        if self.workers == 0 {
            return Err("workers must be positive".into());
        }
        Ok(())
    }
}
