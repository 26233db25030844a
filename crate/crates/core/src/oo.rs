//! Optimal-overlap partitioning: minimise `F_sum` over balanced partitions.

use std::cmp::Ordering;

use num_rational::Ratio;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::census;
use crate::error::{Error, Result};
use crate::params::CodeParams;
use crate::protograph::{partition_from_distribution, ColumnTypeDistribution, OverlapParams, PartitionMatrix};

/// Default cap on the number of distributions scanned exhaustively.
pub const EXHAUSTIVE_GUARD: u128 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    Exhaustive,
    LocalSearch,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OOSolution {
    /// Independent overlap parameters of the chosen partition.
    pub t_star: Vec<u32>,
    pub f_star: Ratio<i64>,
    pub distribution: Vec<usize>,
    pub partition: PartitionMatrix,
    pub strategy: Strategy,
    /// Objective evaluations performed.
    pub visited: u64,
    pub restarts: usize,
    /// Distinct `t` vectors attaining `f_star` (exhaustive only).
    pub co_optimal: Vec<Vec<u32>>,
}

/// Allowed per-component circulant range `[⌊γκ/(m+1)⌋, ⌈γκ/(m+1)⌉]`.
fn balance_range(params: &CodeParams) -> (usize, usize) {
    let total = params.gamma * params.kappa;
    let parts = params.m + 1;
    (total / parts, total.div_ceil(parts))
}

/// Realisable and balanced.
pub fn check_constraints(t: &OverlapParams, params: &CodeParams) -> bool {
    let (lo, hi) = balance_range(params);
    t.gamma() == params.gamma
        && t.m() == params.m
        && t.kappa() == params.kappa
        && t.is_realizable()
        && t.component_totals().iter().all(|&c| (lo..=hi).contains(&c))
}

/// Circulants each column type puts into each component.
fn type_loads(params: &CodeParams) -> Vec<Vec<usize>> {
    let n_types = (params.m + 1).pow(params.gamma as u32);
    (0..n_types)
        .map(|idx| {
            let a = crate::protograph::ColumnType::from_index(idx, params.gamma, params.m);
            (0..=params.m).map(|y| a.0.iter().filter(|&&v| v as usize == y).count()).collect()
        })
        .collect()
}

fn balanced(dense: &[usize], loads: &[Vec<usize>], params: &CodeParams) -> bool {
    let (lo, hi) = balance_range(params);
    (0..=params.m).all(|y| {
        let s: usize = dense.iter().zip(loads).map(|(n, l)| n * l[y]).sum();
        (lo..=hi).contains(&s)
    })
}

fn objective(dense: &[usize], params: &CodeParams) -> Result<(Ratio<i64>, OverlapParams)> {
    let dist = ColumnTypeDistribution::from_dense(params.gamma, params.m, dense);
    let t = OverlapParams::from_distribution(&dist)?;
    Ok((census::f_sum::<i64>(&t, params)?, t))
}

fn solution(
    dense: Vec<usize>,
    params: &CodeParams,
    strategy: Strategy,
    visited: u64,
    restarts: usize,
) -> Result<OOSolution> {
    let (f_star, t) = objective(&dense, params)?;
    let dist = ColumnTypeDistribution::from_dense(params.gamma, params.m, &dense);
    Ok(OOSolution {
        t_star: t.independent_vector(),
        f_star,
        partition: partition_from_distribution(&dist, params)?,
        distribution: dense,
        strategy,
        visited,
        restarts,
        co_optimal: Vec::new(),
    })
}

fn binom_u128(n: u128, k: u128) -> u128 {
    let k = k.min(n.saturating_sub(k));
    (0..k).fold(1u128, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// Size of the distribution simplex, `C(κ+T-1, T-1)` with `T = (m+1)^γ`.
pub fn search_space(params: &CodeParams) -> u128 {
    let t = (params.m as u128 + 1).pow(params.gamma as u32);
    binom_u128(params.kappa as u128 + t - 1, t - 1)
}

/// Calls `f` on every composition of `total` into `parts` parts extending `prefix`, in lex order.
fn for_each_composition(prefix: &mut Vec<usize>, parts: usize, total: usize, f: &mut impl FnMut(&[usize])) {
    if prefix.len() + 1 == parts {
        prefix.push(total);
        f(prefix);
        prefix.pop();
        return;
    }
    for n in 0..=total {
        prefix.push(n);
        for_each_composition(prefix, parts, total - n, f);
        prefix.pop();
    }
}

#[derive(Default)]
struct Best {
    f: Option<Ratio<i64>>,
    dense: Vec<usize>,
    ties: Vec<Vec<u32>>,
    visited: u64,
}

impl Best {
    fn offer(&mut self, f: Ratio<i64>, dense: &[usize], t: &OverlapParams) {
        match self.f.map(|b| f.cmp(&b)) {
            Some(Ordering::Greater) => {}
            Some(Ordering::Equal) => {
                if dense < self.dense.as_slice() {
                    self.dense = dense.to_vec();
                }
                self.ties.push(t.independent_vector());
            }
            _ => {
                self.f = Some(f);
                self.dense = dense.to_vec();
                self.ties = vec![t.independent_vector()];
            }
        }
    }

    fn merge(mut self, other: Best) -> Best {
        self.visited += other.visited;
        match (self.f, other.f) {
            (_, None) => self,
            (None, Some(_)) => Best { visited: self.visited, ..other },
            (Some(a), Some(b)) => match b.cmp(&a) {
                Ordering::Less => Best { visited: self.visited, ..other },
                Ordering::Greater => self,
                Ordering::Equal => {
                    if other.dense < self.dense {
                        self.dense = other.dense;
                    }
                    self.ties.extend(other.ties);
                    self
                }
            },
        }
    }
}

/// Global minimum of `F_sum` over balanced column-type distributions.
pub fn solve_exhaustive(params: &CodeParams) -> Result<OOSolution> {
    solve_exhaustive_with_guard(params, EXHAUSTIVE_GUARD)
}

pub fn solve_exhaustive_with_guard(params: &CodeParams, guard: u128) -> Result<OOSolution> {
    params.validate()?;
    let size = search_space(params);
    if size > guard {
        return Err(Error::GuardExceeded { what: "OO search space".into(), size, guard });
    }
    let loads = type_loads(params);
    let parts = loads.len();
    let kappa = params.kappa;
    // Shard on the first two coordinates so the scan parallelises.
    let mut shards = Vec::new();
    if parts >= 3 {
        for a in 0..=kappa {
            for b in 0..=kappa - a {
                shards.push(vec![a, b]);
            }
        }
    } else {
        shards.push(Vec::new());
    }
    let best = shards
        .into_par_iter()
        .map(|mut prefix| {
            let mut best = Best::default();
            let mut err = None;
            let rest = kappa - prefix.iter().sum::<usize>();
            for_each_composition(&mut prefix, parts, rest, &mut |dense| {
                if err.is_some() || !balanced(dense, &loads, params) {
                    return;
                }
                best.visited += 1;
                match objective(dense, params) {
                    Ok((f, t)) => best.offer(f, dense, &t),
                    Err(e) => err = Some(e),
                }
            });
            match err {
                Some(e) => Err(e),
                None => Ok(best),
            }
        })
        .try_reduce(Best::default, |a, b| Ok(a.merge(b)))?;
    let Best { f, dense, mut ties, visited } = best;
    if f.is_none() {
        return Err(Error::InvalidParams("no balanced distribution exists".into()));
    }
    ties.sort();
    ties.dedup();
    let mut sol = solution(dense, params, Strategy::Exhaustive, visited, 0)?;
    sol.co_optimal = ties;
    Ok(sol)
}

/// Random balanced distribution: shuffle a balanced multiset of component labels.
pub fn random_balanced(params: &CodeParams, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let (g, k, m) = (params.gamma, params.kappa, params.m);
    let total = g * k;
    let parts = m + 1;
    let mut labels: Vec<u8> = (0..total).map(|x| (x * parts / total.max(1)) as u8).collect();
    labels.shuffle(rng);
    let part = PartitionMatrix::new(g, k, m, labels).expect("labels within range");
    part.histogram().dense()
}

/// Best neighbour reached by moving one column between two types.
fn best_move(
    dense: &[usize],
    loads: &[Vec<usize>],
    params: &CodeParams,
    visited: &mut u64,
    budget: &mut u64,
) -> Result<Option<(Ratio<i64>, Vec<usize>)>> {
    let mut best: Option<(Ratio<i64>, Vec<usize>)> = None;
    for from in 0..dense.len() {
        if dense[from] == 0 {
            continue;
        }
        for to in 0..dense.len() {
            if to == from {
                continue;
            }
            let mut next = dense.to_vec();
            next[from] -= 1;
            next[to] += 1;
            if !balanced(&next, loads, params) {
                continue;
            }
            if *budget == 0 {
                return Ok(best);
            }
            *budget -= 1;
            *visited += 1;
            let (f, _) = objective(&next, params)?;
            let better = match &best {
                None => true,
                Some((bf, bd)) => f < *bf || (f == *bf && next < *bd),
            };
            if better {
                best = Some((f, next));
            }
        }
    }
    Ok(best)
}

/// Local optimum value, its distribution and the accepted objective sequence.
type Descent = (Ratio<i64>, Vec<usize>, Vec<Ratio<i64>>);

/// One steepest-descent run. Returns the local optimum, its value and the
/// accepted objective sequence.
fn descend(
    start: Vec<usize>,
    loads: &[Vec<usize>],
    params: &CodeParams,
    mut budget: u64,
    visited: &mut u64,
) -> Result<Descent> {
    let (mut f, _) = objective(&start, params)?;
    let mut cur = start;
    let mut trail = vec![f];
    while budget > 0 {
        match best_move(&cur, loads, params, visited, &mut budget)? {
            Some((nf, next)) if nf < f => {
                f = nf;
                cur = next;
                trail.push(f);
            }
            _ => break,
        }
    }
    Ok((f, cur, trail))
}

/// Result of one seeded restart.
#[derive(Debug, Clone, PartialEq)]
pub struct Restart {
    pub f: Ratio<i64>,
    pub distribution: Vec<usize>,
    /// Incumbent values after each accepted move.
    pub trail: Vec<Ratio<i64>>,
}

/// Runs every restart and returns them in seed order.
pub fn local_restarts(params: &CodeParams, seed: u64, restarts: usize, budget: u64) -> Result<(Vec<Restart>, u64)> {
    params.validate()?;
    let loads = type_loads(params);
    let runs: Vec<Result<(Restart, u64)>> = (0..restarts.max(1))
        .into_par_iter()
        .map(|r| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(r as u64);
            let start = random_balanced(params, &mut rng);
            let mut visited = 0;
            let (f, distribution, trail) = descend(start, &loads, params, budget, &mut visited)?;
            Ok((Restart { f, distribution, trail }, visited))
        })
        .collect();
    let mut out = Vec::new();
    let mut visited = 0;
    for r in runs {
        let (run, v) = r?;
        visited += v;
        out.push(run);
    }
    Ok((out, visited))
}

/// Steepest descent on the distribution simplex with seeded restarts.
/// `budget` caps objective evaluations per restart.
pub fn solve_local(params: &CodeParams, seed: u64, restarts: usize, budget: u64) -> Result<OOSolution> {
    let (runs, visited) = local_restarts(params, seed, restarts, budget)?;
    let best = runs
        .iter()
        .min_by(|a, b| a.f.cmp(&b.f).then_with(|| a.distribution.cmp(&b.distribution)))
        .expect("at least one restart");
    solution(best.distribution.clone(), params, Strategy::LocalSearch, visited, runs.len())
}
