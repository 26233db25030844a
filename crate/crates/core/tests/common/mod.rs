//! Brute-force oracles. They share only the matrix type with the library.
#![allow(dead_code)]

use std::collections::HashSet;

use num_rational::Ratio;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use scforge::matrix::BinaryMatrix;
use scforge::protograph::PartitionMatrix;
use scforge::CodeParams;

/// Instance multiplicity of each pattern: canonical walks per instance.
pub const ZETA: [i64; 9] = [1, 3, 3, 6, 6, 1, 2, 2, 1];

/// `(#CNs, #VNs)` touched by each pattern.
pub const DIMS: [(usize, usize); 9] = [(2, 2), (2, 3), (3, 2), (2, 4), (4, 2), (3, 3), (3, 4), (4, 3), (4, 4)];

pub fn beta(idx: usize) -> Ratio<i64> {
    if idx == 0 {
        Ratio::new(1, 2)
    } else {
        Ratio::from_integer(ZETA[idx])
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleCensus {
    pub walks: [i64; 9],
    pub counts: [i64; 9],
    pub weighted: Ratio<i64>,
}

fn canonical(w: [usize; 8]) -> [usize; 8] {
    let mut best = w;
    for s in 0..4 {
        let mut rot = [0; 8];
        let mut rev = [0; 8];
        for i in 0..8 {
            rot[i] = w[(2 * s + i) % 8];
            rev[i] = w[(2 * s + 8 - i) % 8];
        }
        best = best.min(rot).min(rev);
    }
    best
}

fn distinct(xs: impl Iterator<Item = usize>) -> usize {
    xs.collect::<HashSet<_>>().len()
}

/// Non-backtracking closed CN/VN walks of length 8, up to rotation and reflection.
pub fn closed_walks(h: &BinaryMatrix, guard: usize) -> Vec<[usize; 8]> {
    assert!(h.rows() + h.cols() <= guard, "graph exceeds oracle guard");
    let mut seen = HashSet::new();
    for c0 in 0..h.rows() {
        for &v0 in h.row(c0) {
            for &c1 in h.col(v0) {
                if c1 == c0 {
                    continue;
                }
                for &v1 in h.row(c1) {
                    if v1 == v0 {
                        continue;
                    }
                    for &c2 in h.col(v1) {
                        if c2 == c1 {
                            continue;
                        }
                        for &v2 in h.row(c2) {
                            if v2 == v1 {
                                continue;
                            }
                            for &c3 in h.col(v2) {
                                if c3 == c2 || c3 == c0 {
                                    continue;
                                }
                                for &v3 in h.row(c3) {
                                    if v3 == v2 || v3 == v0 || !h.get(c0, v3) {
                                        continue;
                                    }
                                    seen.insert(canonical([c0, v0, c1, v1, c2, v2, c3, v3]));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    let mut out: Vec<_> = seen.into_iter().collect();
    out.sort();
    out
}

pub fn brute_force_candidate_census(h: &BinaryMatrix, guard: usize) -> OracleCensus {
    let mut walks = [0i64; 9];
    for w in closed_walks(h, guard) {
        let dims = (distinct(w.iter().step_by(2).copied()), distinct(w.iter().skip(1).step_by(2).copied()));
        let idx = DIMS.iter().position(|&d| d == dims).expect("walk touches 2..=4 nodes per side");
        walks[idx] += 1;
    }
    let mut counts = [0i64; 9];
    let mut weighted = Ratio::from_integer(0);
    for i in 0..9 {
        assert_eq!(walks[i] % ZETA[i], 0, "P{} walks {} not a multiple of ζ", i + 1, walks[i]);
        counts[i] = walks[i] / ZETA[i];
        weighted += beta(i) * counts[i];
    }
    OracleCensus { walks, counts, weighted }
}

/// Lifted 8-cycles whose diagonal VN pairs share no CN. `None` when the
/// graph has a 4-cycle.
pub fn brute_force_lifted_count(h: &BinaryMatrix, guard: usize) -> Option<i64> {
    lifted_cycles(h, guard, |a, b| !a && !b)
}

/// Lifted 8-cycles with both diagonals adjacent.
pub fn brute_force_fully_chorded(h: &BinaryMatrix, guard: usize) -> Option<i64> {
    lifted_cycles(h, guard, |a, b| a && b)
}

/// 8-cycles kept by `keep(diagonal 0 adjacent, diagonal 1 adjacent)`.
fn lifted_cycles(h: &BinaryMatrix, guard: usize, keep: impl Fn(bool, bool) -> bool) -> Option<i64> {
    assert!(h.rows() + h.cols() <= guard, "graph exceeds oracle guard");
    let adjacent = |a: usize, b: usize| {
        let (ca, cb) = (h.col(a), h.col(b));
        ca.iter().any(|c| cb.contains(c))
    };
    for v in 0..h.cols() {
        for u in v + 1..h.cols() {
            let shared = h.col(v).iter().filter(|c| h.col(u).contains(c)).count();
            if shared > 1 {
                return None;
            }
        }
    }
    let mut walks = 0i64;
    for c0 in 0..h.rows() {
        for &v0 in h.row(c0) {
            for &c1 in h.col(v0) {
                if c1 == c0 {
                    continue;
                }
                for &v1 in h.row(c1) {
                    if v1 == v0 {
                        continue;
                    }
                    for &c2 in h.col(v1) {
                        if c2 == c1 || c2 == c0 {
                            continue;
                        }
                        for &v2 in h.row(c2) {
                            if v2 == v1 || v2 == v0 {
                                continue;
                            }
                            for &c3 in h.col(v2) {
                                if c3 == c2 || c3 == c1 || c3 == c0 {
                                    continue;
                                }
                                for &v3 in h.row(c3) {
                                    if v3 == v2 || v3 == v1 || v3 == v0 || !h.get(c0, v3) {
                                        continue;
                                    }
                                    if keep(adjacent(v0, v2), adjacent(v1, v3)) {
                                        walks += 1;
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    assert_eq!(walks % 8, 0);
    Some(walks / 8)
}

pub fn random_partition(params: &CodeParams, rng: &mut ChaCha8Rng) -> PartitionMatrix {
    let assign = (0..params.gamma * params.kappa).map(|_| rng.gen_range(0..=params.m as u8)).collect();
    PartitionMatrix::new(params.gamma, params.kappa, params.m, assign).unwrap()
}
