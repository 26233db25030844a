//! Closed-form census of the nine protograph patterns.

pub mod cases;
pub mod constants;
pub mod theorems;

use num_rational::Ratio;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::num::{round_ratio, Count};
use crate::params::CodeParams;
use crate::protograph::OverlapParams;

pub use cases::{case_count, Case};
pub use constants::PatternId;
pub use theorems::{pattern_span_count, pattern_span_counts, pattern_total};

/// Per-pattern instance counts of an SC protograph.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PatternCensus<C: Count> {
    /// `per_span[ℓ-1][k-1] = F^k_{Pℓ,1}`.
    pub per_span: Vec<Vec<Ratio<C>>>,
    /// `totals[ℓ-1] = F_{Pℓ}`.
    pub totals: Vec<Ratio<C>>,
    /// `F_sum = Σ β_ℓ F_{Pℓ}`.
    pub f_sum: Ratio<C>,
}

impl<C: Count> PatternCensus<C> {
    pub fn total(&self, p: PatternId) -> &Ratio<C> {
        &self.totals[p.index()]
    }

    pub fn span_counts(&self, p: PatternId) -> &[Ratio<C>] {
        &self.per_span[p.index()]
    }

    /// `F_sum` rounded to the nearest integer.
    pub fn f_sum_rounded(&self) -> C {
        round_ratio(&self.f_sum)
    }
}

fn lift_ratio<C: Count>(r: Ratio<i64>) -> Ratio<C> {
    Ratio::new(C::of(*r.numer()), C::of(*r.denom()))
}

/// `Σ_ℓ β_ℓ F_{Pℓ}` over already computed totals.
pub fn weighted_sum<C: Count>(totals: &[Ratio<C>]) -> Ratio<C> {
    PatternId::ALL
        .iter()
        .zip(totals)
        .fold(Ratio::from_integer(C::zero()), |acc, (p, f)| acc + lift_ratio::<C>(p.beta()) * f)
}

/// Evaluates every pattern for the given overlap parameters.
///
/// Fails when `L` is below the span threshold `2m + 1` of the widest patterns.
pub fn census<C: Count>(t: &OverlapParams, params: &CodeParams) -> Result<PatternCensus<C>> {
    if t.gamma() != params.gamma || t.m() != params.m {
        return Err(Error::InvalidParams(format!(
            "overlap parameters are for γ={}, m={} but the code has γ={}, m={}",
            t.gamma(),
            t.m(),
            params.gamma,
            params.m
        )));
    }
    let required = 2 * params.m + 1;
    if params.l < required {
        return Err(Error::BelowThreshold { pattern: 9, l: params.l, required });
    }
    let per_span: Vec<Vec<Ratio<C>>> = PatternId::ALL.par_iter().map(|&p| pattern_span_counts::<C>(p, t)).collect();
    let totals: Vec<Ratio<C>> = per_span.iter().map(|s| theorems::extrapolate(s, params.l)).collect();
    let f_sum = weighted_sum(&totals);
    Ok(PatternCensus { per_span, totals, f_sum })
}

/// `F_sum` alone, for inner optimisation loops.
pub fn f_sum<C: Count>(t: &OverlapParams, params: &CodeParams) -> Result<Ratio<C>> {
    census::<C>(t, params).map(|c| c.f_sum)
}
