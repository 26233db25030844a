//! Circulant power optimiser: greedy power changes that lower `F_SC` while
//! keeping girth ≥ 6 and, for `γ = 3`, no `(4, 0)` objects.

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lifting::{
    build_window, scb_powers, weight_of_span, CandidateSet, CirculantPowers, FourCycles, Status, Window,
};
use crate::params::CodeParams;
use crate::protograph::PartitionMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct CpoConfig {
    /// Circulants changed per proposal before annealing.
    pub subset_size: usize,
    /// Total proposals evaluated.
    pub budget: u64,
    /// Stop once `F_SC` is at or below this value.
    pub target: i64,
    pub seed: u64,
    /// Proposals per selected subset, as a multiple of `z`.
    pub retries_per_z: usize,
    /// Rejected subsets before switching to ±1 perturbations.
    pub perturb_after: usize,
    /// Rejected subsets before giving up.
    pub stop_after: usize,
}

impl Default for CpoConfig {
    fn default() -> Self {
        Self {
            subset_size: 3,
            budget: 200_000,
            target: 0,
            seed: 0,
            retries_per_z: 8,
            perturb_after: 200,
            stop_after: 1000,
        }
    }
}

/// One evaluated proposal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceRecord {
    pub iteration: u64,
    pub selected: Vec<(usize, usize)>,
    pub proposed: Vec<u32>,
    pub f_sc: Ratio<i64>,
    pub accepted: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CpoState {
    pub powers: CirculantPowers,
    pub f_sc: Ratio<i64>,
    pub initial_f_sc: Ratio<i64>,
    /// `ψ_{i,j}` of the final state.
    pub psi: Vec<Vec<Ratio<i64>>>,
    /// `ψ'_{i',j'}` over the window of the final state.
    pub psi_window: Vec<Vec<Ratio<i64>>>,
    pub proposals: u64,
    pub seed: u64,
    /// Accepted proposals in order.
    pub accepted: Vec<TraceRecord>,
    #[serde(skip)]
    pub trace: Vec<TraceRecord>,
}

/// Per-circulant values indexed `[i][j]`.
pub type Grid = Vec<Vec<Ratio<i64>>>;

/// `(ψ', ψ)` from candidate statuses. Each active candidate adds `w_k`
/// (halved for P1) to every distinct window entry on its walk.
pub fn accumulate_psi(set: &CandidateSet, statuses: &[Status], window: &Window) -> (Grid, Grid) {
    let params = &window.params;
    let zero = Ratio::from_integer(0);
    let mut psi_w = vec![vec![zero; window.cols()]; window.rows()];
    let mut psi = vec![vec![zero; params.kappa]; params.gamma];
    for (n, st) in statuses.iter().enumerate() {
        if !st.active() {
            continue;
        }
        let c = set.get(n);
        let mut w = weight_of_span(c.span as usize, params);
        if c.pattern.get() == 1 {
            w /= 2;
        }
        let mut cells: Vec<(usize, usize)> = (0..4)
            .flat_map(|t| [(c.cns[t], c.vns[t]), (c.cns[t], c.vns[(t + 3) % 4])])
            .map(|(r, v)| (r as usize, v as usize))
            .collect();
        cells.sort_unstable();
        cells.dedup();
        for (r, v) in cells {
            psi_w[r][v] += w;
            psi[r % params.gamma][v % params.kappa] += w;
        }
    }
    (psi_w, psi)
}

struct Engine<'a> {
    params: CodeParams,
    set: &'a CandidateSet,
    fours: &'a FourCycles,
    powers: CirculantPowers,
    statuses: Vec<Status>,
    twice_fsc: i64,
    fully_chorded: i64,
}

impl<'a> Engine<'a> {
    fn new(params: CodeParams, set: &'a CandidateSet, fours: &'a FourCycles, powers: CirculantPowers) -> Self {
        let statuses = set.statuses(&powers);
        let l = params.l;
        let twice_fsc = (0..set.len()).filter(|&n| statuses[n].active()).map(|n| set.twice_weight(n, l)).sum();
        let fully_chorded = statuses.iter().filter(|s| s.fully_chorded()).count() as i64;
        Self { params, set, fours, powers, statuses, twice_fsc, fully_chorded }
    }

    fn f_sc(&self) -> Ratio<i64> {
        Ratio::new(self.twice_fsc, 2)
    }

    /// Applies `new` to `circs`, keeping it only if every acceptance rule holds.
    fn try_change(&mut self, circs: &[usize], new: &[u32]) -> (bool, Ratio<i64>) {
        let old: Vec<u32> = circs.iter().map(|&c| self.powers.flat(c)).collect();
        let kappa = self.params.kappa;
        for (&c, &v) in circs.iter().zip(new) {
            self.powers.set(c / kappa, c % kappa, v);
        }
        let mut affected: Vec<u32> = circs.iter().flat_map(|&c| self.set.touching(c).iter().copied()).collect();
        affected.sort_unstable();
        affected.dedup();
        let l = self.params.l;
        let mut d_fsc = 0i64;
        let mut d_full = 0i64;
        let fresh: Vec<(u32, Status)> = affected
            .iter()
            .map(|&n| {
                let st = self.set.status(n as usize, &self.powers);
                let was = self.statuses[n as usize];
                let w = self.set.twice_weight(n as usize, l);
                d_fsc += w * (i64::from(st.active()) - i64::from(was.active()));
                d_full += i64::from(st.fully_chorded()) - i64::from(was.fully_chorded());
                (n, st)
            })
            .collect();
        let new_twice = self.twice_fsc + d_fsc;
        let new_full = self.fully_chorded + d_full;
        let ok = new_twice < self.twice_fsc
            && (self.params.gamma != 3 || new_full == 0)
            && self.fours.girth_ok_near(&self.powers, circs);
        if ok {
            for (n, st) in fresh {
                self.statuses[n as usize] = st;
            }
            self.twice_fsc = new_twice;
            self.fully_chorded = new_full;
        } else {
            for (&c, &v) in circs.iter().zip(&old) {
                self.powers.set(c / kappa, c % kappa, v);
            }
        }
        (ok, Ratio::new(new_twice, 2))
    }
}

/// Circulants in descending `ψ`, ties by `(i, j)`.
fn ranked(psi: &[Vec<Ratio<i64>>]) -> Vec<usize> {
    let kappa = psi.first().map_or(0, Vec::len);
    let mut idx: Vec<usize> = (0..psi.len() * kappa).collect();
    idx.sort_by(|&a, &b| psi[b / kappa][b % kappa].cmp(&psi[a / kappa][a % kappa]).then(a.cmp(&b)));
    idx
}

/// Runs the optimiser from SCB powers.
pub fn run_cpo(p: &PartitionMatrix, params: &CodeParams, cfg: &CpoConfig) -> Result<CpoState> {
    run_cpo_from(p, params, scb_powers(params), cfg)
}

pub fn run_cpo_from(
    p: &PartitionMatrix,
    params: &CodeParams,
    start: CirculantPowers,
    cfg: &CpoConfig,
) -> Result<CpoState> {
    start.check_params(params)?;
    let window = build_window(p, params)?;
    let set = CandidateSet::enumerate(&window);
    let fours = FourCycles::enumerate(&window);
    if !fours.girth_ok(&start) {
        return Err(Error::Girth);
    }
    let mut eng = Engine::new(*params, &set, &fours, start);
    if params.gamma == 3 && eng.fully_chorded > 0 {
        return Err(Error::InvalidParams("initial powers contain (4,0) objects".into()));
    }
    let initial_f_sc = eng.f_sc();
    let z = params.z as u32;
    let n_circ = params.gamma * params.kappa;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut trace = Vec::new();
    let mut accepted = Vec::new();
    let mut proposals = 0u64;
    let mut rejected_subsets = 0usize;
    let mut offset = 0usize;
    let (_, mut psi) = accumulate_psi(&set, &eng.statuses, &window);
    let mut order = ranked(&psi);
    let retries = (cfg.retries_per_z * params.z).max(1);

    'outer: while proposals < cfg.budget
        && eng.f_sc() > Ratio::from_integer(cfg.target)
        && rejected_subsets < cfg.stop_after
    {
        let anneal = rejected_subsets.saturating_sub(cfg.perturb_after / 2) / (cfg.perturb_after / 4).max(1);
        let size = cfg.subset_size.saturating_sub(anneal).clamp(1, n_circ.max(1));
        let perturb = rejected_subsets >= cfg.perturb_after;
        let subset: Vec<usize> = (0..size).map(|x| order[(offset + x) % n_circ]).collect();
        let mut hit = false;
        for _ in 0..retries {
            if proposals >= cfg.budget {
                break 'outer;
            }
            let proposed: Vec<u32> = subset
                .iter()
                .map(|&c| {
                    let cur = eng.powers.flat(c);
                    if perturb {
                        if rng.gen::<bool>() {
                            (cur + 1) % z
                        } else {
                            (cur + z - 1) % z
                        }
                    } else {
                        rng.gen_range(0..z)
                    }
                })
                .collect();
            if subset.iter().zip(&proposed).all(|(&c, &v)| eng.powers.flat(c) == v) {
                continue;
            }
            proposals += 1;
            let (ok, f_new) = eng.try_change(&subset, &proposed);
            let rec = TraceRecord {
                iteration: proposals,
                selected: subset.iter().map(|&c| (c / params.kappa, c % params.kappa)).collect(),
                proposed,
                f_sc: if ok { f_new } else { eng.f_sc() },
                accepted: ok,
            };
            if ok {
                accepted.push(rec.clone());
            }
            trace.push(rec);
            if ok {
                hit = true;
                break;
            }
        }
        if hit {
            rejected_subsets = 0;
            offset = 0;
            psi = accumulate_psi(&set, &eng.statuses, &window).1;
            order = ranked(&psi);
        } else {
            rejected_subsets += 1;
            offset = (offset + size) % n_circ.max(1);
        }
    }
    let (psi_window, psi) = accumulate_psi(&set, &eng.statuses, &window);
    Ok(CpoState {
        f_sc: eng.f_sc(),
        powers: eng.powers,
        initial_f_sc,
        psi,
        psi_window,
        proposals,
        seed: cfg.seed,
        accepted,
        trace,
    })
}
