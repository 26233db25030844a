use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One of the nine protograph patterns that can lift to an 8-cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub struct PatternId(u8);

impl PatternId {
    pub const ALL: [PatternId; 9] = [
        PatternId(1),
        PatternId(2),
        PatternId(3),
        PatternId(4),
        PatternId(5),
        PatternId(6),
        PatternId(7),
        PatternId(8),
        PatternId(9),
    ];

    pub fn new(l: u8) -> Result<Self> {
        if (1..=9).contains(&l) {
            Ok(Self(l))
        } else {
            Err(Error::UnknownPattern(l))
        }
    }

    pub fn get(self) -> u8 {
        self.0
    }

    pub fn index(self) -> usize {
        self.0 as usize - 1
    }

    /// `(CNs, VNs)` of the pattern.
    pub fn dims(self) -> (usize, usize) {
        match self.0 {
            1 => (2, 2),
            2 => (2, 3),
            3 => (3, 2),
            4 => (2, 4),
            5 => (4, 2),
            6 => (3, 3),
            7 => (3, 4),
            8 => (4, 3),
            _ => (4, 4),
        }
    }

    pub fn from_dims(cns: usize, vns: usize) -> Option<Self> {
        Self::ALL.into_iter().find(|p| p.dims() == (cns, vns))
    }

    /// Candidates per instance.
    pub fn zeta(self) -> i64 {
        match self.0 {
            1 | 6 | 9 => 1,
            7 | 8 => 2,
            2 | 3 => 3,
            _ => 6,
        }
    }

    /// Weight in `F_sum`.
    pub fn beta(self) -> Ratio<i64> {
        if self.0 == 1 {
            Ratio::new(1, 2)
        } else {
            Ratio::from_integer(self.zeta())
        }
    }

    /// Most internal connections an instance can carry.
    pub fn eta(self) -> usize {
        match self.0 {
            1 | 3 | 5 => 0,
            2 | 6 | 8 => 1,
            _ => 2,
        }
    }

    /// Most replicas an instance can span.
    pub fn chi(self, m: usize) -> usize {
        if self.0 >= 8 {
            2 * m + 1
        } else {
            m + 1
        }
    }

    /// Whether the pattern can occur for column weight `gamma`.
    pub fn exists_for(self, gamma: usize) -> bool {
        !(gamma < 4 && matches!(self.0, 5 | 8))
    }
}

impl TryFrom<u8> for PatternId {
    type Error = Error;
    fn try_from(l: u8) -> Result<Self> {
        Self::new(l)
    }
}

impl From<PatternId> for u8 {
    fn from(p: PatternId) -> u8 {
        p.0
    }
}

impl fmt::Display for PatternId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P{}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_tables() {
        let zeta: Vec<i64> = PatternId::ALL.iter().map(|p| p.zeta()).collect();
        assert_eq!(zeta, vec![1, 3, 3, 6, 6, 1, 2, 2, 1]);
        let eta: Vec<usize> = PatternId::ALL.iter().map(|p| p.eta()).collect();
        assert_eq!(eta, vec![0, 1, 0, 2, 0, 1, 2, 1, 2]);
        assert_eq!(PatternId(1).beta(), Ratio::new(1, 2));
        assert_eq!(PatternId(4).beta(), Ratio::from_integer(6));
        assert_eq!(PatternId(7).chi(2), 3);
        assert_eq!(PatternId(9).chi(2), 5);
    }

    #[test]
    fn dims_are_unique() {
        for p in PatternId::ALL {
            let (c, v) = p.dims();
            assert_eq!(PatternId::from_dims(c, v), Some(p));
        }
        assert!(PatternId::new(0).is_err() && PatternId::new(10).is_err());
        assert!(!PatternId(5).exists_for(3) && PatternId(5).exists_for(4));
    }
}
