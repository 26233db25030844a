//! Circulant lifting of SC protographs and the lifted `(4, 4(γ-2))` count.

pub mod candidates;
pub mod powers;
pub mod window;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::BinaryMatrix;
use crate::params::CodeParams;
use crate::protograph::{build_sc_protograph, PartitionMatrix};

pub use candidates::{Candidate, CandidateSet, FourCycles, Status};
pub use powers::{scb_powers, CirculantPowers};
pub use window::{build_window, Window};

/// `F_SC`: lifted `(4, 4(γ-2))` objects of the full SC code.
pub fn count_f_sc(p: &PartitionMatrix, f: &CirculantPowers, params: &CodeParams) -> Result<Ratio<i64>> {
    f.check_params(params)?;
    let w = build_window(p, params)?;
    Ok(CandidateSet::enumerate(&w).f_sc(f, params.l))
}

/// No protograph 4-cycle lifts to a 4-cycle.
pub fn girth_ok(p: &PartitionMatrix, f: &CirculantPowers, params: &CodeParams) -> Result<bool> {
    f.check_params(params)?;
    let w = build_window(p, params)?;
    Ok(FourCycles::enumerate(&w).girth_ok(f))
}

/// Lifted 8-cycles with both diagonals chorded, i.e. cycles inside `(4, 0)`
/// objects. Only meaningful for `γ = 3`.
pub fn count_40_uas(p: &PartitionMatrix, f: &CirculantPowers, params: &CodeParams) -> Result<i64> {
    if params.gamma != 3 {
        return Err(Error::NotGammaThree(params.gamma));
    }
    f.check_params(params)?;
    let w = build_window(p, params)?;
    Ok(CandidateSet::enumerate(&w).fully_chorded(f, params.l))
}

/// Length-`w_k` weight `(L-k+1)/(ξ-k+1)` of a candidate spanning `k` replicas.
pub fn weight_of_span(k: usize, params: &CodeParams) -> Ratio<i64> {
    let xi = params.xi() as i64;
    let (l, k) = (params.l as i64, k as i64);
    Ratio::new(l - k + 1, xi - k + 1)
}

/// A lifted parity-check matrix `H_SC`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftedCode {
    pub params: CodeParams,
    pub partition: PartitionMatrix,
    pub powers: CirculantPowers,
    pub h: BinaryMatrix,
}

/// `σ^f` puts a one at `(u, (u - f) mod z)`.
pub fn assemble_parity_matrix(p: &PartitionMatrix, f: &CirculantPowers, params: &CodeParams) -> Result<LiftedCode> {
    p.check_params(params)?;
    f.check_params(params)?;
    let sc = build_sc_protograph(p, params.l);
    let z = params.z;
    let (g, k) = (params.gamma, params.kappa);
    let entries = sc.matrix.entries().flat_map(|(r, c)| {
        let s = f.get(r % g, c % k) as usize;
        (0..z).map(move |u| (r * z + u, c * z + (u + z - s) % z))
    });
    let h = BinaryMatrix::from_entries(sc.matrix.rows() * z, sc.matrix.cols() * z, entries.collect::<Vec<_>>());
    Ok(LiftedCode { params: *params, partition: p.clone(), powers: f.clone(), h })
}
