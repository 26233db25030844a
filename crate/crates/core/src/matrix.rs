//! Sparse binary matrices with row and column adjacency.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinaryMatrix {
    rows: usize,
    cols: usize,
    row_adj: Vec<Vec<usize>>,
    col_adj: Vec<Vec<usize>>,
}

impl BinaryMatrix {
    /// Build from `(row, col)` coordinates. Duplicates collapse to a single one.
    pub fn from_entries(rows: usize, cols: usize, entries: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut row_adj = vec![Vec::new(); rows];
        let mut col_adj = vec![Vec::new(); cols];
        for (r, c) in entries {
            assert!(r < rows && c < cols, "entry ({r}, {c}) outside {rows}x{cols}");
            row_adj[r].push(c);
            col_adj[c].push(r);
        }
        for v in row_adj.iter_mut().chain(col_adj.iter_mut()) {
            v.sort_unstable();
            v.dedup();
        }
        Self { rows, cols, row_adj, col_adj }
    }

    pub fn from_dense(dense: &[Vec<u8>]) -> Self {
        let rows = dense.len();
        let cols = dense.first().map_or(0, Vec::len);
        let entries = dense
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().enumerate().filter(|(_, &b)| b != 0).map(move |(c, _)| (r, c)));
        Self::from_entries(rows, cols, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[usize] {
        &self.row_adj[r]
    }

    pub fn col(&self, c: usize) -> &[usize] {
        &self.col_adj[c]
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.row_adj[r].binary_search(&c).is_ok()
    }

    pub fn nnz(&self) -> usize {
        self.row_adj.iter().map(Vec::len).sum()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.row_adj.iter().enumerate().flat_map(|(r, cs)| cs.iter().map(move |&c| (r, c)))
    }

    pub fn to_dense(&self) -> Vec<Vec<u8>> {
        let mut d = vec![vec![0u8; self.cols]; self.rows];
        for (r, c) in self.entries() {
            d[r][c] = 1;
        }
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dense_round_trip() {
        let d = vec![vec![1, 0, 1], vec![0, 1, 1]];
        let m = BinaryMatrix::from_dense(&d);
        assert_eq!(m.nnz(), 4);
        assert_eq!(m.col(2), &[0, 1]);
        assert!(m.get(1, 1) && !m.get(1, 0));
        assert_eq!(m.to_dense(), d);
    }
}
