use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Code dimensions: column weight `gamma`, row weight `kappa`, circulant size
/// `z`, memory `m` and coupling length `l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CodeParams {
    pub gamma: usize,
    pub kappa: usize,
    pub z: usize,
    pub m: usize,
    #[serde(rename = "L")]
    pub l: usize,
}

impl CodeParams {
    pub fn new(gamma: usize, kappa: usize, z: usize, m: usize, l: usize) -> Result<Self> {
        let p = Self { gamma, kappa, z, m, l };
        p.validate()?;
        Ok(p)
    }

    /// Parameters for protograph-only work where the circulant size is irrelevant.
    pub fn protograph(gamma: usize, kappa: usize, m: usize, l: usize) -> Result<Self> {
        Self::new(gamma, kappa, kappa + 1, m, l)
    }

    pub fn validate(&self) -> Result<()> {
        if self.gamma == 2 {
            return Err(Error::GammaTwo);
        }
        if self.gamma < 3 {
            return Err(Error::InvalidParams(format!("γ = {} must be at least 3", self.gamma)));
        }
        if self.z <= self.kappa {
            return Err(Error::InvalidParams(format!("circulant size z = {} must exceed κ = {}", self.z, self.kappa)));
        }
        if self.l == 0 {
            return Err(Error::InvalidParams("coupling length L must be at least 1".into()));
        }
        Ok(())
    }

    /// Rows of the stacked replica, `(m+1)γ`.
    pub fn replica_rows(&self) -> usize {
        (self.m + 1) * self.gamma
    }

    /// Window width in replicas, `ξ = 2m+1`.
    pub fn xi(&self) -> usize {
        2 * self.m + 1
    }

    pub fn with_l(&self, l: usize) -> Self {
        Self { l, ..*self }
    }
}

/// `|O_ind| = (m+1)^γ - 1`.
pub fn independent_param_count(gamma: usize, m: usize) -> usize {
    (m + 1).pow(gamma as u32) - 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_gamma_two_with_reason() {
        let err = CodeParams::new(2, 5, 7, 1, 3).unwrap_err();
        assert!(matches!(err, Error::GammaTwo));
        assert!(err.to_string().contains("γ ≥ 3"));
    }

    #[test]
    fn rejects_small_circulants() {
        assert!(CodeParams::new(3, 7, 7, 1, 10).is_err());
        assert!(CodeParams::new(3, 7, 13, 1, 0).is_err());
        assert!(CodeParams::new(3, 7, 13, 1, 10).is_ok());
    }

    #[test]
    fn independent_counts() {
        assert_eq!(independent_param_count(3, 1), 7);
        assert_eq!(independent_param_count(3, 2), 26);
        assert_eq!(independent_param_count(4, 1), 15);
    }
}
