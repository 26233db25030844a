use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::CodeParams;

/// Circulant powers `f_{i,j} ∈ [0, z)` of the base matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PowersRepr", into = "PowersRepr")]
pub struct CirculantPowers {
    gamma: usize,
    kappa: usize,
    z: usize,
    f: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct PowersRepr {
    z: usize,
    rows: Vec<Vec<u32>>,
}

impl TryFrom<PowersRepr> for CirculantPowers {
    type Error = Error;
    fn try_from(r: PowersRepr) -> Result<Self> {
        Self::from_rows(r.z, &r.rows)
    }
}

impl From<CirculantPowers> for PowersRepr {
    fn from(p: CirculantPowers) -> Self {
        PowersRepr { z: p.z, rows: p.rows() }
    }
}

impl CirculantPowers {
    /// Entries are reduced mod `z`.
    pub fn new(gamma: usize, kappa: usize, z: usize, f: Vec<u32>) -> Result<Self> {
        if z == 0 {
            return Err(Error::InvalidParams("circulant size must be positive".into()));
        }
        if f.len() != gamma * kappa {
            return Err(Error::InvalidParams(format!(
                "expected {} powers for a {gamma}x{kappa} base matrix, got {}",
                gamma * kappa,
                f.len()
            )));
        }
        let f = f.into_iter().map(|x| x % z as u32).collect();
        Ok(Self { gamma, kappa, z, f })
    }

    pub fn from_rows(z: usize, rows: &[Vec<u32>]) -> Result<Self> {
        let kappa = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != kappa) {
            return Err(Error::InvalidParams("ragged power rows".into()));
        }
        Self::new(rows.len(), kappa, z, rows.concat())
    }

    pub fn zeros(params: &CodeParams) -> Self {
        Self { gamma: params.gamma, kappa: params.kappa, z: params.z, f: vec![0; params.gamma * params.kappa] }
    }

    pub fn gamma(&self) -> usize {
        self.gamma
    }

    pub fn kappa(&self) -> usize {
        self.kappa
    }

    pub fn z(&self) -> usize {
        self.z
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.f[i * self.kappa + j]
    }

    /// Power of circulant with flat index `i·κ + j`.
    #[inline]
    pub fn flat(&self, idx: usize) -> u32 {
        self.f[idx]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.f[i * self.kappa + j] = v % self.z as u32;
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.f.chunks(self.kappa.max(1)).map(<[u32]>::to_vec).take(self.gamma).collect()
    }

    pub fn check_params(&self, params: &CodeParams) -> Result<()> {
        if (self.gamma, self.kappa, self.z) != (params.gamma, params.kappa, params.z) {
            return Err(Error::InvalidParams(format!(
                "powers are {}x{} mod {} but the code is {}x{} mod {}",
                self.gamma, self.kappa, self.z, params.gamma, params.kappa, params.z
            )));
        }
        Ok(())
    }
}

/// Separable initial powers `f_{i,j} = i²·2j mod z`.
pub fn scb_powers(params: &CodeParams) -> CirculantPowers {
    let z = params.z as u64;
    let f = (0..params.gamma)
        .flat_map(|i| (0..params.kappa).map(move |j| ((i * i) as u64 * 2 * j as u64 % z) as u32))
        .collect();
    CirculantPowers { gamma: params.gamma, kappa: params.kappa, z: params.z, f }
}
