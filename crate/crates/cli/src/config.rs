use std::path::PathBuf;

use serde::Serialize;

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunConfig {
    pub precision_bits: u32,
    pub confirm_bits: u32,
    /// Largest number of summands any brute-force oracle may evaluate.
    pub oracle_cap: u64,
    pub seed: u64,
    pub table2_path: Option<PathBuf>,
    pub region_catalog_path: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            precision_bits: 256,
            confirm_bits: 512,
            oracle_cap: 100_000_000,
            seed: 42,
            table2_path: None,
            region_catalog_path: None,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        if self.precision_bits < 64 {
            return Err(CliError::Usage("precision must be at least 64 bits".into()));
        }
        if self.confirm_bits < self.precision_bits {
            return Err(CliError::Usage(format!(
                "confirm precision {} is below the working precision {}",
                self.confirm_bits, self.precision_bits
            )));
        }
        if self.oracle_cap == 0 {
            return Err(CliError::Usage("oracle_cap must be positive".into()));
        }
        Ok(())
    }

    /// Applies `key = value` lines on top of `self`. `#` starts a comment.
    pub fn apply_config_text(&mut self, src: &str) -> Result<(), CliError> {
        for (i, raw) in src.lines().enumerate() {
            let n = i + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| CliError::Usage(format!("config line {n}: expected `key = value`")))?;
            let (key, value) = (key.trim(), value.trim());
            let bad = || CliError::Usage(format!("config line {n}: bad value `{value}` for `{key}`"));
            match key {
                "precision" | "precision_bits" => self.precision_bits = value.parse().map_err(|_| bad())?,
                "confirm_precision" | "confirm_bits" => self.confirm_bits = value.parse().map_err(|_| bad())?,
                "oracle_cap" => self.oracle_cap = parse_count(value).ok_or_else(bad)?,
                "seed" => self.seed = value.parse().map_err(|_| bad())?,
                "table2" | "table2_path" => self.table2_path = Some(PathBuf::from(value)),
                "catalog" | "region_catalog_path" => self.region_catalog_path = Some(PathBuf::from(value)),
                other => return Err(CliError::Usage(format!("config line {n}: unknown key `{other}`"))),
            }
        }
        Ok(())
    }
}

/// Accepts plain integers and forms like `1e8`.
pub fn parse_count(s: &str) -> Option<u64> {
    if let Ok(v) = s.parse::<u64>() {
        return Some(v);
    }
    let (m, e) = s.split_once(['e', 'E'])?;
    let m: u64 = m.parse().ok()?;
    let e: u32 = e.parse().ok()?;
    10u64.checked_pow(e).and_then(|p| p.checked_mul(m))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_text_overrides_defaults() {
        let mut c = RunConfig::default();
        c.apply_config_text("# run\nprecision = 128\nconfirm_precision=192\noracle_cap = 1e6\nseed = 7\n")
            .unwrap();
        assert_eq!((c.precision_bits, c.confirm_bits, c.oracle_cap, c.seed), (128, 192, 1_000_000, 7));
        c.validate().unwrap();
    }

    #[test]
    fn config_errors_name_the_line() {
        let mut c = RunConfig::default();
        let e = c.apply_config_text("seed = 1\nprecision: 3\n").unwrap_err().to_string();
        assert!(e.contains("line 2"), "{e}");
        let e = c.apply_config_text("colour = red").unwrap_err().to_string();
        assert!(e.contains("colour"), "{e}");
    }

    #[test]
    fn confirm_below_working_precision_is_rejected() {
        let c = RunConfig {
            precision_bits: 512,
            confirm_bits: 256,
            ..RunConfig::default()
        };
        assert!(c.validate().is_err());
    }

    #[test]
    fn counts() {
        assert_eq!(parse_count("100"), Some(100));
        assert_eq!(parse_count("3e6"), Some(3_000_000));
        assert_eq!(parse_count("x"), None);
    }
}
