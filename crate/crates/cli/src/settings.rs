use crate::{Cli, Failure};
use ffplanar::config::Config;

/// Defaults, then the config file, then `FFPLANAR_TABLE_CAP`, then flags.
pub fn load(cli: &Cli) -> Result<Config, Failure> {
    let mut cfg = match &cli.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
            toml::from_str(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?
        }
        None => Config::default(),
    };
    if let Some(c) = cli.table_cap {
        cfg.table_cap = c;
    }
    if let Some(w) = cli.workers {
        cfg.workers = w;
    }
    if let Some(f) = cli.format {
        cfg.format = f;
    }
    if let Some(s) = cli.seed {
        cfg.seed = s;
    }
    cfg.validate().map_err(Failure::usage)?;
    Ok(cfg)
}
