//! Flat `key = value` config files and the merge with command-line flags.

use crate::error::{Error, Result};
use std::collections::BTreeMap;
use std::path::Path;

/// Keys accepted in a config file, spelled like the long flags.
pub const KEYS: &[&str] = &[
    "family",
    "params",
    "command",
    "N",
    "y",
    "y-min",
    "y-max",
    "y-count",
    "region",
    "out",
    "format",
    "tol",
    "only",
    "json",
    "scaled",
    "zeros",
    "slope-min",
    "slope-max",
];

/// Parses `key = value` lines. Blank lines and lines starting with `#` are
/// ignored; a later duplicate key replaces an earlier one.
pub fn parse_config(text: &str) -> Result<BTreeMap<String, String>> {
    let mut map = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| Error::Usage(format!("config line {}: expected key = value, got '{line}'", i + 1)))?;
        let (k, v) = (k.trim(), v.trim());
        if !KEYS.contains(&k) {
            return Err(Error::Usage(format!("config line {}: unknown key '{k}'", i + 1)));
        }
        map.insert(k.to_string(), v.to_string());
    }
    Ok(map)
}

/// Reads and parses a config file.
pub fn load_config(path: &Path) -> Result<BTreeMap<String, String>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Usage(format!("--config: cannot read {}: {e}", path.display())))?;
    parse_config(&text)
}

/// Parses a boolean config value.
pub fn parse_bool(key: &str, v: &str) -> Result<bool> {
    match v.to_ascii_lowercase().as_str() {
        "true" | "yes" | "1" | "on" => Ok(true),
        "false" | "no" | "0" | "off" => Ok(false),
        _ => Err(Error::Usage(format!("--{key}: expected a boolean, got '{v}'"))),
    }
}
