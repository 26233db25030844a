use crate::error::{Error, Result};
use crate::params::CodeParams;
use crate::protograph::{build_sc_protograph, PartitionMatrix, SCProtograph};

/// The `ξ = 2m+1` replica window of the SC protograph. Every entry inherits
/// the power of the base circulant with the same row and column residues.
#[derive(Debug, Clone)]
pub struct Window {
    pub params: CodeParams,
    pub sc: SCProtograph,
}

impl Window {
    pub fn replicas(&self) -> usize {
        self.sc.l
    }

    pub fn rows(&self) -> usize {
        self.sc.matrix.rows()
    }

    pub fn cols(&self) -> usize {
        self.sc.matrix.cols()
    }

    /// Flat base-circulant index `i·κ + j` of window entry `(r, c)`.
    #[inline]
    pub fn circulant(&self, r: usize, c: usize) -> u16 {
        let (g, k) = (self.params.gamma, self.params.kappa);
        ((r % g) * k + c % k) as u16
    }

    pub fn replica_of_col(&self, c: usize) -> usize {
        self.sc.replica_of_col(c)
    }
}

pub fn build_window(p: &PartitionMatrix, params: &CodeParams) -> Result<Window> {
    p.check_params(params)?;
    let xi = params.xi();
    if params.l < xi {
        return Err(Error::InvalidParams(format!("window counting needs L ≥ 2m+1 = {xi}, got L = {}", params.l)));
    }
    if params.gamma * params.kappa > u16::MAX as usize {
        return Err(Error::GuardExceeded {
            what: "base circulants".into(),
            size: (params.gamma * params.kappa) as u128,
            guard: u16::MAX as u128,
        });
    }
    Ok(Window { params: *params, sc: build_sc_protograph(p, xi) })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        let p = CodeParams::new(3, 4, 5, 1, 3).unwrap();
        let w = build_window(&PartitionMatrix::uncoupled(&p), &p).unwrap();
        assert_eq!((w.rows(), w.cols()), (12, 12));
        let p0 = CodeParams::new(3, 4, 5, 0, 3).unwrap();
        let w0 = build_window(&PartitionMatrix::uncoupled(&p0), &p0).unwrap();
        assert_eq!((w0.rows(), w0.cols()), (3, 4));
        assert_eq!(w0.sc.matrix.nnz(), 12);
    }

    #[test]
    fn entries_follow_replica_cover() {
        let p = CodeParams::new(3, 3, 5, 1, 4).unwrap();
        let part = PartitionMatrix::from_rows(1, &[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]]).unwrap();
        let w = build_window(&part, &p).unwrap();
        for (r, c) in w.sc.matrix.entries() {
            let rho = c / 3;
            let (i, j) = (r % 3, c % 3);
            assert_eq!(r / 3, rho + part.component(i, j));
        }
    }

    #[test]
    fn short_coupling_rejected() {
        let p = CodeParams::new(3, 4, 5, 1, 2).unwrap();
        assert!(build_window(&PartitionMatrix::uncoupled(&p), &p).is_err());
    }
}
