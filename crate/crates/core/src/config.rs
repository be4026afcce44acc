//! `key = value` run configuration.
//!
//! ```text
//! # comments and blank lines are ignored
//! jobs = 4
//! oracle_cap = 18
//! out_dir = results
//! render = unicode
//! format = json
//! seed = 7
//! budget.thm_main = 10
//! ```

use std::path::{Path, PathBuf};

use crate::dimensions::DEFAULT_ORACLE_BOUND;
use crate::harness::{Budgets, Format, SweepKind};
use crate::render::RenderStyle;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    pub budgets: Budgets,
    pub oracle_cap: usize,
    pub jobs: usize,
    pub out_dir: Option<PathBuf>,
    pub render: RenderStyle,
    pub format: Format,
    pub seed: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            budgets: Budgets::default(),
            oracle_cap: DEFAULT_ORACLE_BOUND,
            jobs: std::thread::available_parallelism().map_or(1, |n| n.get()),
            out_dir: None,
            render: RenderStyle::default(),
            format: Format::default(),
            seed: 0,
        }
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ConfigError {
    #[error("line {line}: expected key = value")]
    Syntax { line: usize },
    #[error("line {line}: unknown key {key:?}")]
    UnknownKey { line: usize, key: String },
    #[error("line {line}: bad value for {key}: {reason}")]
    Value { line: usize, key: String, reason: String },
    #[error("cannot read {path}: {reason}")]
    Io { path: String, reason: String },
}

fn budget_kind(name: &str) -> Option<SweepKind> {
    Some(match name {
        "orthogonality" => SweepKind::Orthogonality,
        "thm_main" => SweepKind::ThmMain,
        "thm_balanced" => SweepKind::ThmBalanced,
        "thm_diag" => SweepKind::ThmDiag,
        "skew_bound" => SweepKind::SkewBound,
        "line_bounds" => SweepKind::LineBounds,
        "general_bound" => SweepKind::GeneralBound,
        "compression" => SweepKind::Compression,
        "sharpness" => SweepKind::Sharpness,
        "oracle" => SweepKind::Oracle,
        "branching" => SweepKind::Branching,
        _ => return None,
    })
}

impl Config {
    pub fn load(path: &Path) -> Result<Config, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|e| ConfigError::Io {
            path: path.display().to_string(),
            reason: e.to_string(),
        })?;
        Config::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Config, ConfigError> {
        let mut cfg = Config::default();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (key, value) = content.split_once('=').ok_or(ConfigError::Syntax { line })?;
            cfg.set(line, key.trim(), value.trim())?;
        }
        Ok(cfg)
    }

    fn set(&mut self, line: usize, key: &str, value: &str) -> Result<(), ConfigError> {
        let bad = |reason: String| ConfigError::Value { line, key: key.to_string(), reason };
        let positive = |v: &str| match v.parse::<usize>() {
            Ok(0) => Err(bad("must be positive".into())),
            Ok(n) => Ok(n),
            Err(e) => Err(bad(e.to_string())),
        };
        match key {
            "jobs" => self.jobs = positive(value)?,
            "oracle_cap" => self.oracle_cap = positive(value)?,
            "out_dir" => self.out_dir = Some(PathBuf::from(value)),
            "render" => self.render = value.parse().map_err(bad)?,
            "format" => self.format = value.parse().map_err(bad)?,
            "seed" => self.seed = value.parse().map_err(|e: std::num::ParseIntError| bad(e.to_string()))?,
            _ => {
                let kind = key
                    .strip_prefix("budget.")
                    .and_then(budget_kind)
                    .ok_or_else(|| ConfigError::UnknownKey { line, key: key.to_string() })?;
                *self.budgets.cap_mut(kind) = positive(value)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_keys() {
        let cfg = Config::parse(
            "# run\njobs = 3\noracle_cap=12\nout_dir = out\nrender = unicode\nformat = json\nseed = 9\nbudget.thm_diag = 7 # lower\n",
        )
        .unwrap();
        assert_eq!(cfg.jobs, 3);
        assert_eq!(cfg.oracle_cap, 12);
        assert_eq!(cfg.out_dir, Some(PathBuf::from("out")));
        assert_eq!(cfg.render, RenderStyle::Unicode);
        assert_eq!(cfg.format, Format::Json);
        assert_eq!(cfg.seed, 9);
        assert_eq!(cfg.budgets.thm_diag, 7);
        assert_eq!(cfg.budgets.thm_main, Budgets::default().thm_main);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(Config::parse("jobs 3"), Err(ConfigError::Syntax { line: 1 }));
        assert!(matches!(Config::parse("jobs = 0"), Err(ConfigError::Value { .. })));
        assert!(matches!(Config::parse("\nbudget.nope = 3"), Err(ConfigError::UnknownKey { line: 2, .. })));
        assert!(matches!(Config::parse("render = svg"), Err(ConfigError::Value { .. })));
    }
}
