//! Key=value configuration file support with CLI override.
//!
//! The file path comes from the `RAMANUJAN_CONFIG` environment variable;
//! every key is optional and falls back to the engine defaults. Lines
//! starting with `#` are comments.

use ramanujan_core::suite::EngineConfig;

pub const CONFIG_ENV_VAR: &str = "RAMANUJAN_CONFIG";

#[derive(Debug, Clone)]
pub struct CliConfig {
    pub engine: EngineConfig,
    /// Echoed into reports so a run is reproducible from its output.
    pub source: String,
}

impl Default for CliConfig {
    fn default() -> Self {
        CliConfig {
            engine: EngineConfig::default(),
            source: "defaults".to_string(),
        }
    }
}

pub fn load() -> Result<CliConfig, String> {
    let mut cfg = CliConfig::default();
    let Some(path) = std::env::var_os(CONFIG_ENV_VAR) else {
        return Ok(cfg);
    };
    let path = std::path::PathBuf::from(path);
    let text = std::fs::read_to_string(&path)
        .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(format!(
                "{}:{}: expected key=value, got '{line}'",
                path.display(),
                lineno + 1
            ));
        };
        let key = key.trim();
        let value = value.trim();
        let parse_f64 = || -> Result<f64, String> {
            value
                .parse::<f64>()
                .map_err(|_| format!("{}:{}: bad number '{value}'", path.display(), lineno + 1))
        };
        let parse_usize = || -> Result<usize, String> {
            value
                .parse::<usize>()
                .map_err(|_| format!("{}:{}: bad integer '{value}'", path.display(), lineno + 1))
        };
        match key {
            "quad_abs_tol" => cfg.engine.quad_abs_tol = parse_f64()?,
            "series_rel_tol" => cfg.engine.series_rel_tol = parse_f64()?,
            "g_abs_tol" => cfg.engine.g_abs_tol = parse_f64()?,
            "identity_tol" => cfg.engine.identity_tol = parse_f64()?,
            "max_series_terms" => cfg.engine.max_series_terms = parse_usize()?,
            "max_panels" => cfg.engine.max_panels = parse_usize()?,
            other => {
                return Err(format!(
                    "{}:{}: unknown key '{other}'",
                    path.display(),
                    lineno + 1
                ));
            }
        }
    }
    cfg.source = path.display().to_string();
    Ok(cfg)
}
