//! Optional JSON config file, located through `DCL_CONFIG`.
//!
//! Every key is optional. A flag given on the command line always wins over
//! the file, and the file wins over built-in defaults.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::Format;

pub const CONFIG_ENV: &str = "DCL_CONFIG";

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub format: Option<Format>,
    pub horizon: Option<u64>,
    pub representation: Option<String>,
    pub modulus: Option<u64>,
    pub seed: Option<u64>,
    pub exact_bits_cap: Option<u64>,
    pub allow_modular_collisions: Option<bool>,
    pub solve_max_nodes: Option<u64>,
}

impl Config {
    pub fn load(path: &Path) -> Result<Config, String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
        serde_json::from_str(&text).map_err(|e| format!("bad config {}: {e}", path.display()))
    }

    /// The file named by `DCL_CONFIG`, or an empty config when unset.
    pub fn from_env() -> Result<Config, String> {
        match std::env::var_os(CONFIG_ENV) {
            Some(p) if !p.is_empty() => Config::load(Path::new(&p)),
            _ => Ok(Config::default()),
        }
    }
}
