//! Versioned JSON run configuration.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::cpo::CpoConfig;
use crate::error::{Error, Result};
use crate::params::CodeParams;
use crate::protograph::{cv_partition, PartitionMatrix};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Oo,
    Cpo,
    Full,
    Census,
    CvBaseline,
    Uncoupled,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SolverChoice {
    /// Exhaustive when the search space fits the guard, local search otherwise.
    #[default]
    Auto,
    Exhaustive,
    Local,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct OoConfig {
    pub strategy: SolverChoice,
    pub guard: u64,
    pub restarts: usize,
    /// Objective evaluations per restart.
    pub budget: u64,
}

impl Default for OoConfig {
    fn default() -> Self {
        Self { strategy: SolverChoice::Auto, guard: 10_000_000, restarts: 20, budget: 100_000 }
    }
}

/// Where a fixed partition comes from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PartitionSource {
    Uncoupled,
    /// Row-major `γ×κ` component indices.
    Rows(Vec<Vec<u8>>),
    CuttingVector(Vec<usize>),
}

impl PartitionSource {
    pub fn realize(&self, params: &CodeParams) -> Result<PartitionMatrix> {
        let p = match self {
            Self::Uncoupled => PartitionMatrix::uncoupled(params),
            Self::Rows(rows) => PartitionMatrix::from_rows(params.m, rows)?,
            Self::CuttingVector(z) => cv_partition(z, params)?,
        };
        p.check_params(params)?;
        Ok(p)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub schema: u32,
    pub params: CodeParams,
    pub mode: Mode,
    #[serde(default)]
    pub seed: u64,
    #[serde(default)]
    pub oo: OoConfig,
    #[serde(default)]
    pub cpo: CpoConfig,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub partition: Option<PartitionSource>,
    /// Starting powers for `cpo`; SCB powers when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub powers: Option<Vec<Vec<u32>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub out_dir: Option<PathBuf>,
    /// Record wall times in the report (breaks byte-identical output).
    #[serde(default)]
    pub timings: bool,
}

impl RunConfig {
    pub fn new(params: CodeParams, mode: Mode) -> Self {
        Self {
            schema: SCHEMA_VERSION,
            params,
            mode,
            seed: 0,
            oo: OoConfig::default(),
            cpo: CpoConfig::default(),
            partition: None,
            powers: None,
            out_dir: None,
            timings: false,
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let cfg: Self = serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serialises")
    }

    pub fn validate(&self) -> Result<()> {
        if self.schema != SCHEMA_VERSION {
            return Err(Error::Config(format!(
                "unsupported schema {} (this build reads schema {SCHEMA_VERSION})",
                self.schema
            )));
        }
        self.params.validate().map_err(|e| Error::Config(e.to_string()))?;
        let xi = self.params.xi();
        match self.mode {
            Mode::Cpo if self.partition.is_none() => {
                return Err(Error::Config("mode cpo needs a partition source".into()));
            }
            Mode::CvBaseline if self.params.m != 1 => {
                return Err(Error::Config("cutting vectors need m = 1".into()));
            }
            _ => {}
        }
        if self.params.l < xi {
            return Err(Error::Config(format!(
                "L = {} is below ξ = 2m+1 = {xi}, which both the closed-form census and window counting need",
                self.params.l
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let mut c = RunConfig::new(CodeParams::new(3, 7, 13, 1, 10).unwrap(), Mode::Cpo);
        c.partition = Some(PartitionSource::CuttingVector(vec![2, 4, 6]));
        let back = RunConfig::from_json(&c.to_json()).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn minimal_json() {
        let c = RunConfig::from_json(r#"{"schema":1,"params":{"gamma":3,"kappa":7,"z":13,"m":1,"L":10},"mode":"oo"}"#)
            .unwrap();
        assert_eq!(c.oo, OoConfig::default());
        assert_eq!(c.mode, Mode::Oo);
    }

    #[test]
    fn rejections() {
        let bad_schema = r#"{"schema":9,"params":{"gamma":3,"kappa":7,"z":13,"m":1,"L":10},"mode":"oo"}"#;
        assert!(matches!(RunConfig::from_json(bad_schema), Err(Error::Config(_))));
        let no_partition = r#"{"schema":1,"params":{"gamma":3,"kappa":7,"z":13,"m":1,"L":10},"mode":"cpo"}"#;
        assert!(matches!(RunConfig::from_json(no_partition), Err(Error::Config(_))));
        let short = r#"{"schema":1,"params":{"gamma":3,"kappa":7,"z":13,"m":1,"L":2},"mode":"full"}"#;
        assert!(matches!(RunConfig::from_json(short), Err(Error::Config(_))));
        let gamma2 = r#"{"schema":1,"params":{"gamma":2,"kappa":7,"z":13,"m":1,"L":10},"mode":"oo"}"#;
        assert!(RunConfig::from_json(gamma2).is_err());
    }
}
