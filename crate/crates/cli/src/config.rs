//! `key = value` configuration: degree caps and the default seed.

use std::path::Path;

use peakalg::Caps;

use crate::CliError;

pub const DEFAULT_SEED: u64 = 2024;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Config {
    pub caps: Caps,
    pub seed: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config { caps: Caps::default(), seed: DEFAULT_SEED }
    }
}

impl Config {
    /// Blank lines and `#` comments are ignored; unknown keys are errors.
    pub fn parse(text: &str) -> Result<Config, CliError> {
        let mut cfg = Config::default();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = |msg: &str| CliError::Usage(format!("config line {}: {msg}", lineno + 1));
            let (key, value) = line.split_once('=').ok_or_else(|| bad("expected key = value"))?;
            let value = value.trim();
            let number = || value.parse::<u64>().map_err(|_| bad(&format!("{value:?} is not a number")));
            match key.trim() {
                "cap_a" => cfg.caps.type_a = number()? as usize,
                "cap_b" => cfg.caps.type_b = number()? as usize,
                "seed" => cfg.seed = number()?,
                k => return Err(bad(&format!("unknown key {k:?}"))),
            }
        }
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Config, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", path.display())))?;
        Config::parse(&text)
    }

    /// Applies command-line overrides.
    pub fn with_overrides(mut self, cap_a: Option<usize>, cap_b: Option<usize>, seed: Option<u64>) -> Config {
        if let Some(a) = cap_a {
            self.caps.type_a = a;
        }
        if let Some(b) = cap_b {
            self.caps.type_b = b;
        }
        if let Some(s) = seed {
            self.seed = s;
        }
        self
    }
}
