//! Base and spatially-coupled protographs, partitions and overlap parameters.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::BinaryMatrix;
use crate::params::CodeParams;

/// Component index per row of one base column, `a ∈ {0..m}^γ`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ColumnType(pub Vec<u8>);

impl ColumnType {
    /// Position of this type in lexicographic order among all `(m+1)^γ` types.
    pub fn index(&self, m: usize) -> usize {
        self.0.iter().fold(0, |acc, &a| acc * (m + 1) + a as usize)
    }

    pub fn from_index(mut idx: usize, gamma: usize, m: usize) -> Self {
        let mut a = vec![0u8; gamma];
        for slot in a.iter_mut().rev() {
            *slot = (idx % (m + 1)) as u8;
            idx /= m + 1;
        }
        Self(a)
    }

    /// Rows of the stacked replica covered by this column, as a bit mask.
    pub fn row_mask(&self, gamma: usize) -> u64 {
        self.0.iter().enumerate().fold(0u64, |acc, (i, &y)| acc | 1 << (y as usize * gamma + i))
    }
}

impl fmt::Display for ColumnType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u8::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Multiset of column types; the search coordinate of the OO stage.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ColumnTypeDistribution {
    pub gamma: usize,
    pub m: usize,
    pub counts: BTreeMap<ColumnType, usize>,
}

impl ColumnTypeDistribution {
    pub fn new(gamma: usize, m: usize) -> Self {
        Self { gamma, m, counts: BTreeMap::new() }
    }

    pub fn with(mut self, a: &[u8], n: usize) -> Self {
        self.add(ColumnType(a.to_vec()), n);
        self
    }

    pub fn add(&mut self, a: ColumnType, n: usize) {
        if n > 0 {
            *self.counts.entry(a).or_insert(0) += n;
        }
    }

    pub fn mass(&self) -> usize {
        self.counts.values().sum()
    }

    /// Dense count vector indexed by [`ColumnType::index`].
    pub fn dense(&self) -> Vec<usize> {
        let mut v = vec![0; (self.m + 1).pow(self.gamma as u32)];
        for (a, &n) in &self.counts {
            v[a.index(self.m)] += n;
        }
        v
    }

    pub fn from_dense(gamma: usize, m: usize, dense: &[usize]) -> Self {
        let mut d = Self::new(gamma, m);
        for (idx, &n) in dense.iter().enumerate() {
            d.add(ColumnType::from_index(idx, gamma, m), n);
        }
        d
    }
}

/// Assignment of every circulant of the base matrix to a component `H_y`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PartitionMatrix {
    gamma: usize,
    kappa: usize,
    m: usize,
    assign: Vec<u8>,
}

impl PartitionMatrix {
    /// Row-major `γ×κ` assignment.
    pub fn new(gamma: usize, kappa: usize, m: usize, assign: Vec<u8>) -> Result<Self> {
        if assign.len() != gamma * kappa {
            return Err(Error::InvalidPartition(format!("expected {} entries, got {}", gamma * kappa, assign.len())));
        }
        if let Some(&bad) = assign.iter().find(|&&y| y as usize > m) {
            return Err(Error::InvalidPartition(format!("component {bad} exceeds m = {m}")));
        }
        Ok(Self { gamma, kappa, m, assign })
    }

    pub fn from_rows(m: usize, rows: &[Vec<u8>]) -> Result<Self> {
        let gamma = rows.len();
        let kappa = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != kappa) {
            return Err(Error::InvalidPartition("ragged rows".into()));
        }
        Self::new(gamma, kappa, m, rows.concat())
    }

    /// Everything in `H_0`.
    pub fn uncoupled(params: &CodeParams) -> Self {
        Self { gamma: params.gamma, kappa: params.kappa, m: params.m, assign: vec![0; params.gamma * params.kappa] }
    }

    pub fn gamma(&self) -> usize {
        self.gamma
    }

    pub fn kappa(&self) -> usize {
        self.kappa
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn component(&self, i: usize, j: usize) -> usize {
        self.assign[i * self.kappa + j] as usize
    }

    pub fn rows(&self) -> Vec<Vec<u8>> {
        self.assign.chunks(self.kappa.max(1)).take(self.gamma).map(<[u8]>::to_vec).collect()
    }

    pub fn column_type(&self, j: usize) -> ColumnType {
        ColumnType((0..self.gamma).map(|i| self.assign[i * self.kappa + j]).collect())
    }

    pub fn histogram(&self) -> ColumnTypeDistribution {
        let mut d = ColumnTypeDistribution::new(self.gamma, self.m);
        for j in 0..self.kappa {
            d.add(self.column_type(j), 1);
        }
        d
    }

    /// Number of circulants in each component.
    pub fn component_sizes(&self) -> Vec<usize> {
        let mut s = vec![0; self.m + 1];
        for &y in &self.assign {
            s[y as usize] += 1;
        }
        s
    }

    /// The stacked replica `[H_0; …; H_m]` of size `(m+1)γ × κ`.
    pub fn stacked(&self) -> BinaryMatrix {
        let g = self.gamma;
        BinaryMatrix::from_entries(
            (self.m + 1) * g,
            self.kappa,
            (0..g).flat_map(|i| (0..self.kappa).map(move |j| (i, j))).map(|(i, j)| (self.component(i, j) * g + i, j)),
        )
    }

    pub fn check_params(&self, params: &CodeParams) -> Result<()> {
        if (self.gamma, self.kappa, self.m) != (params.gamma, params.kappa, params.m) {
            return Err(Error::InvalidPartition(format!(
                "partition is {}x{} with m = {}, parameters ask for {}x{} with m = {}",
                self.gamma, self.kappa, self.m, params.gamma, params.kappa, params.m
            )));
        }
        Ok(())
    }
}

/// Columns take types in ascending lexicographic order.
pub fn partition_from_distribution(dist: &ColumnTypeDistribution, params: &CodeParams) -> Result<PartitionMatrix> {
    if dist.mass() != params.kappa {
        return Err(Error::DistributionMass { expected: params.kappa, got: dist.mass() });
    }
    let (g, k) = (params.gamma, params.kappa);
    let mut assign = vec![0u8; g * k];
    let mut j = 0;
    for (a, &n) in &dist.counts {
        if a.0.len() != g || a.0.iter().any(|&y| y as usize > params.m) {
            return Err(Error::InvalidColumnType(a.0.clone()));
        }
        for _ in 0..n {
            for (i, &y) in a.0.iter().enumerate() {
                assign[i * k + j] = y;
            }
            j += 1;
        }
    }
    PartitionMatrix::new(g, k, params.m, assign)
}

/// Overlap counts `t_S` for every row subset `S` of the stacked replica.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OverlapParams {
    gamma: usize,
    m: usize,
    kappa: usize,
    table: Vec<u32>,
}

const MAX_REPLICA_ROWS: usize = 24;

impl OverlapParams {
    pub fn from_distribution(dist: &ColumnTypeDistribution) -> Result<Self> {
        let rows = (dist.m + 1) * dist.gamma;
        if rows > MAX_REPLICA_ROWS {
            return Err(Error::GuardExceeded {
                what: "overlap table rows (m+1)γ".into(),
                size: rows as u128,
                guard: MAX_REPLICA_ROWS as u128,
            });
        }
        let mut table = vec![0u32; 1 << rows];
        for (a, &n) in &dist.counts {
            let mask = a.row_mask(dist.gamma);
            let mut sub = mask;
            loop {
                table[sub as usize] += n as u32;
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & mask;
            }
        }
        Ok(Self { gamma: dist.gamma, m: dist.m, kappa: dist.mass(), table })
    }

    /// Raw table indexed by row mask; `table[0]` must equal κ.
    pub fn from_table(gamma: usize, m: usize, table: Vec<u32>) -> Result<Self> {
        if table.len() != 1 << ((m + 1) * gamma) {
            return Err(Error::InvalidParams("overlap table has the wrong size".into()));
        }
        Ok(Self { gamma, m, kappa: table[0] as usize, table })
    }

    pub fn gamma(&self) -> usize {
        self.gamma
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn kappa(&self) -> usize {
        self.kappa
    }

    pub fn rows(&self) -> usize {
        (self.m + 1) * self.gamma
    }

    pub fn by_mask(&self, mask: u64) -> u32 {
        self.table[mask as usize]
    }

    /// `t_S` for in-range indices.
    pub fn get(&self, set: &[usize]) -> u32 {
        let mask = set.iter().fold(0u64, |acc, &i| acc | 1 << i);
        self.table[mask as usize]
    }

    /// `t_S` for signed indices; zero when any index leaves `[0, (m+1)γ-1]`.
    #[inline]
    pub fn t_lookup(&self, set: &[i64]) -> u32 {
        let rows = self.rows() as i64;
        let mut mask = 0u64;
        for &i in set {
            if i < 0 || i >= rows {
                return 0;
            }
            mask |= 1 << i;
        }
        self.table[mask as usize]
    }

    /// `O_ind` in canonical order: non-empty subsets of rows `0..mγ` with
    /// pairwise distinct residues, by size then lexicographically.
    pub fn independent_sets(gamma: usize, m: usize) -> Vec<Vec<usize>> {
        let limit = (m.max(1)) * gamma;
        let mut sets: Vec<Vec<usize>> = (1u64..1 << limit)
            .map(|mask| (0..limit).filter(|&i| mask >> i & 1 == 1).collect::<Vec<_>>())
            .filter(|s: &Vec<usize>| {
                let mut res: Vec<usize> = s.iter().map(|i| i % gamma).collect();
                res.sort_unstable();
                res.dedup();
                res.len() == s.len()
            })
            .collect();
        sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        sets
    }

    /// The `O_ind` vector, e.g. `[t0 t1 t2 t01 t02 t12 t012]` for γ=3, m=1.
    pub fn independent_vector(&self) -> Vec<u32> {
        Self::independent_sets(self.gamma, self.m).iter().map(|s| self.get(s)).collect()
    }

    /// Whether some partition produces exactly these counts.
    pub fn is_realizable(&self) -> bool {
        let rows = self.rows();
        let mut exact: Vec<i64> = self.table.iter().map(|&x| x as i64).collect();
        for b in 0..rows {
            for mask in 0..exact.len() {
                if mask >> b & 1 == 0 {
                    exact[mask] -= exact[mask | 1 << b];
                }
            }
        }
        let full = |mask: usize| {
            (0..self.gamma).all(|i| (0..=self.m).filter(|y| mask >> (y * self.gamma + i) & 1 == 1).count() == 1)
        };
        exact.iter().enumerate().all(|(mask, &n)| n >= 0 && (n == 0 || full(mask)))
    }

    /// Circulants per component, `Σ_{i=yγ}^{(y+1)γ-1} t_i`.
    pub fn component_totals(&self) -> Vec<usize> {
        (0..=self.m).map(|y| (0..self.gamma).map(|i| self.get(&[y * self.gamma + i]) as usize).sum()).collect()
    }
}

pub fn overlap_params(p: &PartitionMatrix, params: &CodeParams) -> Result<OverlapParams> {
    p.check_params(params)?;
    OverlapParams::from_distribution(&p.histogram())
}

/// The SC protograph of size `γ(L+m) × κL`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SCProtograph {
    pub gamma: usize,
    pub kappa: usize,
    pub m: usize,
    pub l: usize,
    pub matrix: BinaryMatrix,
}

impl SCProtograph {
    /// Zero-based replica of a column.
    pub fn replica_of_col(&self, c: usize) -> usize {
        c / self.kappa
    }
}

pub fn build_sc_protograph(p: &PartitionMatrix, l: usize) -> SCProtograph {
    let (g, k) = (p.gamma, p.kappa);
    let entries = (0..l).flat_map(move |rho| (0..g).flat_map(move |i| (0..k).map(move |j| (rho, i, j))));
    let matrix = BinaryMatrix::from_entries(
        g * (l + p.m),
        k * l,
        entries.map(|(rho, i, j)| (rho * g + p.component(i, j) * g + i, rho * k + j)),
    );
    SCProtograph { gamma: g, kappa: k, m: p.m, l, matrix }
}

/// Which side of a cut goes to `H_0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CvConvention {
    /// `(i, j) ∈ H_0` iff `j < ζ_i`.
    H0BelowCut,
    /// `(i, j) ∈ H_1` iff `j < ζ_i`.
    H1BelowCut,
}

/// Default cutting convention.
pub const CV_CONVENTION: CvConvention = CvConvention::H0BelowCut;

pub fn cv_partition(zeta: &[usize], params: &CodeParams) -> Result<PartitionMatrix> {
    cv_partition_with(zeta, params, CV_CONVENTION)
}

pub fn cv_partition_with(zeta: &[usize], params: &CodeParams, conv: CvConvention) -> Result<PartitionMatrix> {
    if params.m != 1 {
        return Err(Error::InvalidCuttingVector(format!("cutting vectors need m = 1, got m = {}", params.m)));
    }
    if zeta.len() != params.gamma {
        return Err(Error::InvalidCuttingVector(format!("expected {} entries, got {}", params.gamma, zeta.len())));
    }
    if zeta.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidCuttingVector(format!("{zeta:?} is not strictly ascending")));
    }
    if let Some(&z) = zeta.iter().find(|&&z| z > params.kappa) {
        return Err(Error::InvalidCuttingVector(format!("entry {z} exceeds κ = {}", params.kappa)));
    }
    let (g, k) = (params.gamma, params.kappa);
    let mut assign = vec![0u8; g * k];
    for i in 0..g {
        for j in 0..k {
            let below = j < zeta[i];
            assign[i * k + j] = match conv {
                CvConvention::H0BelowCut => u8::from(!below),
                CvConvention::H1BelowCut => u8::from(below),
            };
        }
    }
    PartitionMatrix::new(g, k, 1, assign)
}

/// All strictly ascending cutting vectors `0 ≤ ζ_0 < … < ζ_{γ-1} ≤ κ`.
pub fn cutting_vectors(gamma: usize, kappa: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, left: usize, kappa: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for z in start..=kappa {
            cur.push(z);
            rec(z + 1, left - 1, kappa, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, gamma, kappa, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(g: usize, k: usize, m: usize) -> CodeParams {
        CodeParams::protograph(g, k, m, 10).unwrap()
    }

    /// Reference: scan columns of the stacked replica.
    fn scan(p: &PartitionMatrix, set: &[usize]) -> u32 {
        let s = p.stacked();
        (0..s.cols()).filter(|&c| set.iter().all(|&r| s.get(r, c))).count() as u32
    }

    #[test]
    fn single_type_distribution() {
        let d = ColumnTypeDistribution::new(3, 1).with(&[0, 0, 0], 2);
        let part = partition_from_distribution(&d, &p(3, 2, 1)).unwrap();
        assert_eq!(part.component_sizes(), vec![6, 0]);
    }

    #[test]
    fn ordering_rule() {
        let d = ColumnTypeDistribution::new(3, 1).with(&[1, 0, 1], 1).with(&[0, 1, 0], 1);
        let part = partition_from_distribution(&d, &p(3, 2, 1)).unwrap();
        assert_eq!(part.rows(), vec![vec![0, 1], vec![1, 0], vec![0, 1]]);
    }

    #[test]
    fn mass_mismatch_is_an_error() {
        let d = ColumnTypeDistribution::new(3, 1).with(&[0, 0, 0], 3);
        assert!(matches!(
            partition_from_distribution(&d, &p(3, 2, 1)),
            Err(Error::DistributionMass { expected: 2, got: 3 })
        ));
    }

    #[test]
    fn uncoupled_overlaps() {
        let params = p(3, 7, 1);
        let t = overlap_params(&PartitionMatrix::uncoupled(&params), &params).unwrap();
        assert_eq!(t.independent_vector(), vec![7, 7, 7, 7, 7, 7, 7]);
        for r in 3..6 {
            assert_eq!(t.get(&[r]), 0);
        }
        assert_eq!(t.t_lookup(&[-3, 1]), 0);
        assert_eq!(t.t_lookup(&[0]), 7);
        assert_eq!(t.t_lookup(&[0, 3]), 0);
    }

    #[test]
    fn overlaps_match_column_scan() {
        let part =
            PartitionMatrix::from_rows(2, &[vec![0, 1, 2, 1, 0], vec![2, 2, 0, 1, 1], vec![1, 0, 0, 2, 0]]).unwrap();
        let params = p(3, 5, 2);
        let t = overlap_params(&part, &params).unwrap();
        for mask in 1u64..1 << 9 {
            let set: Vec<usize> = (0..9).filter(|&i| mask >> i & 1 == 1).collect();
            assert_eq!(t.get(&set), scan(&part, &set), "set {set:?}");
        }
        assert_eq!((0..9).map(|i| t.get(&[i])).sum::<u32>(), 15);
        assert!(t.is_realizable());
    }

    #[test]
    fn realizability_rejects_non_monotone_tables() {
        let params = p(3, 2, 1);
        let t = overlap_params(&PartitionMatrix::uncoupled(&params), &params).unwrap();
        let mut table: Vec<u32> = (0..64).map(|mask| t.by_mask(mask)).collect();
        table[0b011] = 3;
        assert!(!OverlapParams::from_table(3, 1, table).unwrap().is_realizable());
    }

    #[test]
    fn sc_protograph_memory_zero_is_block_diagonal() {
        let params = p(3, 4, 0);
        let part = PartitionMatrix::uncoupled(&params);
        let sc = build_sc_protograph(&part, 3);
        assert_eq!((sc.matrix.rows(), sc.matrix.cols()), (9, 12));
        for (r, c) in sc.matrix.entries() {
            assert_eq!(r / 3, c / 4);
        }
        assert_eq!(sc.matrix.nnz(), 36);
    }

    #[test]
    fn sc_protograph_shape_and_row_weights() {
        let part = PartitionMatrix::from_rows(1, &[vec![0, 1, 0], vec![1, 1, 0], vec![0, 0, 1]]).unwrap();
        let sc = build_sc_protograph(&part, 2);
        assert_eq!((sc.matrix.rows(), sc.matrix.cols()), (9, 6));
        let sizes = |i: usize, y: usize| (0..3).filter(|&j| part.component(i, j) == y).count();
        for r in 0..9 {
            let (blk, i) = (r / 3, r % 3);
            let expect: usize =
                (0..2usize).filter(|rho| blk >= *rho && blk - rho <= 1).map(|rho| sizes(i, blk - rho)).sum();
            assert_eq!(sc.matrix.row(r).len(), expect, "row {r}");
        }
    }

    #[test]
    fn cutting_vector_partitions() {
        let params = CodeParams::new(3, 19, 46, 1, 5).unwrap();
        let part = cv_partition(&[4, 9, 15], &params).unwrap();
        assert_eq!(part.component_sizes()[0], 28);
        let params4 = CodeParams::new(4, 17, 37, 1, 6).unwrap();
        assert_eq!(cv_partition(&[3, 7, 11, 14], &params4).unwrap().component_sizes()[0], 35);
        assert!(cv_partition(&[19, 19, 19], &params).is_err());
        assert!(cv_partition(&[4, 9, 20], &params).is_err());
        assert!(cv_partition(&[4, 9], &params).is_err());
    }

    #[test]
    fn column_type_index_round_trip() {
        for idx in 0..27 {
            let a = ColumnType::from_index(idx, 3, 2);
            assert_eq!(a.index(2), idx);
        }
        assert_eq!(ColumnType(vec![0, 1, 1]).index(1), 3);
    }

    #[test]
    fn histogram_inverts_partition_from_distribution() {
        let d = ColumnTypeDistribution::new(3, 2).with(&[0, 1, 2], 2).with(&[2, 0, 0], 1).with(&[1, 1, 0], 3);
        let part = partition_from_distribution(&d, &p(3, 6, 2)).unwrap();
        assert_eq!(part.histogram(), d);
    }
}
