//! Run orchestration for every mode.

use std::collections::BTreeMap;
use std::path::Path;
use std::time::Instant;

use num_rational::Ratio;
use rayon::prelude::*;

use crate::census::{census, PatternCensus};
use crate::cpo::{run_cpo_from, CpoConfig, CpoState};
use crate::error::{Error, Result};
use crate::io::alist::to_alist;
use crate::io::atomic_write;
use crate::io::config::{Mode, PartitionSource, RunConfig, SolverChoice};
use crate::io::report::{pattern_rows, CpoStep, CpoSummary, DesignReport, Exact, OoSummary};
use crate::lifting::{assemble_parity_matrix, count_f_sc, scb_powers, CirculantPowers, LiftedCode};
use crate::oo::{search_space, solve_exhaustive_with_guard, solve_local, OOSolution, Strategy};
use crate::params::CodeParams;
use crate::protograph::{cutting_vectors, cv_partition, overlap_params, PartitionMatrix};

/// A finished run: the report and, when powers are fixed, the lifted code.
#[derive(Debug, Clone)]
pub struct RunOutcome {
    pub report: DesignReport,
    pub code: Option<LiftedCode>,
}

#[derive(Default)]
struct Clock {
    on: bool,
    laps: BTreeMap<String, u64>,
}

impl Clock {
    fn time<T>(&mut self, name: &str, f: impl FnOnce() -> T) -> T {
        let t0 = Instant::now();
        let out = f();
        if self.on {
            self.laps.insert(name.into(), t0.elapsed().as_millis() as u64);
        }
        out
    }
}

pub fn run(cfg: &RunConfig) -> Result<RunOutcome> {
    cfg.validate()?;
    let params = cfg.params;
    let mut clock = Clock { on: cfg.timings, ..Clock::default() };
    let mut report = DesignReport::new(cfg.mode, params, cfg.seed);
    let mut code = None;

    match cfg.mode {
        Mode::Oo => {
            let sol = clock.time("oo", || solve_oo(cfg))?;
            fill_oo(&mut report, &sol);
            fill_census(&mut report, &sol.partition, &params)?;
            let f = scb_powers(&params);
            let fsc = clock.time("f_sc", || count_f_sc(&sol.partition, &f, &params))?;
            report.f_sc_initial = Some(Exact::new(&fsc));
            code = Some(finish(&mut report, &sol.partition, f, fsc, &params)?);
        }
        Mode::Census => {
            let p = fixed_partition(cfg)?;
            report.partition = Some(p.rows());
            fill_census(&mut report, &p, &params)?;
        }
        Mode::Uncoupled => {
            let p = PartitionMatrix::uncoupled(&params);
            fill_census(&mut report, &p, &params)?;
            let f = scb_powers(&params);
            let fsc = clock.time("f_sc", || count_f_sc(&p, &f, &params))?;
            code = Some(finish(&mut report, &p, f, fsc, &params)?);
        }
        Mode::CvBaseline => {
            let (zeta, fsc) = clock.time("cv_scan", || cv_scan(&params))?;
            report.cutting_vector = Some(zeta.clone());
            let p = cv_partition(&zeta, &params)?;
            fill_census(&mut report, &p, &params)?;
            code = Some(finish(&mut report, &p, scb_powers(&params), fsc, &params)?);
        }
        Mode::Cpo => {
            let p = fixed_partition(cfg)?;
            if let Some(PartitionSource::CuttingVector(z)) = &cfg.partition {
                report.cutting_vector = Some(z.clone());
            }
            fill_census(&mut report, &p, &params)?;
            let start = start_powers(cfg)?;
            let st = clock.time("cpo", || run_cpo_from(&p, &params, start, &cpo_cfg(cfg)))?;
            code = Some(fill_cpo(&mut report, &p, st, &params)?);
        }
        Mode::Full => {
            let sol = clock.time("oo", || solve_oo(cfg))?;
            fill_oo(&mut report, &sol);
            fill_census(&mut report, &sol.partition, &params)?;
            let start = start_powers(cfg)?;
            let st = clock.time("cpo", || run_cpo_from(&sol.partition, &params, start, &cpo_cfg(cfg)))?;
            code = Some(fill_cpo(&mut report, &sol.partition, st, &params)?);
        }
    }
    if cfg.timings {
        report.timings_ms = Some(clock.laps);
    }
    Ok(RunOutcome { report, code })
}

fn cpo_cfg(cfg: &RunConfig) -> CpoConfig {
    CpoConfig { seed: cfg.seed, ..cfg.cpo.clone() }
}

fn fixed_partition(cfg: &RunConfig) -> Result<PartitionMatrix> {
    match &cfg.partition {
        Some(src) => src.realize(&cfg.params),
        None if cfg.mode == Mode::Census => Ok(PartitionMatrix::uncoupled(&cfg.params)),
        None => Err(Error::Config("this mode needs a partition source".into())),
    }
}

fn start_powers(cfg: &RunConfig) -> Result<CirculantPowers> {
    match &cfg.powers {
        Some(rows) => {
            let f = CirculantPowers::from_rows(cfg.params.z, rows)?;
            f.check_params(&cfg.params)?;
            Ok(f)
        }
        None => Ok(scb_powers(&cfg.params)),
    }
}

pub fn solve_oo(cfg: &RunConfig) -> Result<OOSolution> {
    let p = &cfg.params;
    let o = &cfg.oo;
    let guard = u128::from(o.guard);
    match o.strategy {
        SolverChoice::Exhaustive => solve_exhaustive_with_guard(p, guard),
        SolverChoice::Local => solve_local(p, cfg.seed, o.restarts, o.budget),
        SolverChoice::Auto if search_space(p) <= guard => solve_exhaustive_with_guard(p, guard),
        SolverChoice::Auto => solve_local(p, cfg.seed, o.restarts, o.budget),
    }
}

fn fill_oo(r: &mut DesignReport, sol: &OOSolution) {
    r.t_star = Some(sol.t_star.clone());
    r.partition = Some(sol.partition.rows());
    r.oo = Some(OoSummary {
        strategy: match sol.strategy {
            Strategy::Exhaustive => "exhaustive".into(),
            Strategy::LocalSearch => "local-search".into(),
        },
        visited: sol.visited,
        restarts: sol.restarts,
        co_optimal: sol.co_optimal.len(),
    });
}

fn fill_census(r: &mut DesignReport, p: &PartitionMatrix, params: &CodeParams) -> Result<()> {
    let t = overlap_params(p, params)?;
    let c: PatternCensus<i64> = census(&t, params)?;
    r.f_sum = Some(Exact::new(&c.f_sum));
    r.patterns = pattern_rows(&c);
    if r.t_star.is_none() {
        r.t_star = Some(t.independent_vector());
    }
    Ok(())
}

fn finish(
    r: &mut DesignReport,
    p: &PartitionMatrix,
    f: CirculantPowers,
    fsc: Ratio<i64>,
    params: &CodeParams,
) -> Result<LiftedCode> {
    r.partition = Some(p.rows());
    r.f_sc_final = Some(Exact::new(&fsc));
    r.powers = Some(f.rows());
    assemble_parity_matrix(p, &f, params)
}

fn fill_cpo(r: &mut DesignReport, p: &PartitionMatrix, st: CpoState, params: &CodeParams) -> Result<LiftedCode> {
    r.f_sc_initial = Some(Exact::new(&st.initial_f_sc));
    r.cpo = Some(CpoSummary {
        proposals: st.proposals,
        accepted: st
            .accepted
            .iter()
            .map(|t| CpoStep {
                iteration: t.iteration,
                selected: t.selected.clone(),
                proposed: t.proposed.clone(),
                f_sc: t.f_sc.to_string(),
            })
            .collect(),
    });
    finish(r, p, st.powers, st.f_sc, params)
}

/// Minimum `F_SC` over all ascending cutting vectors under SCB powers; ties
/// go to the lexicographically least vector.
pub fn cv_scan(params: &CodeParams) -> Result<(Vec<usize>, Ratio<i64>)> {
    let f = scb_powers(params);
    let scored: Vec<Result<(Ratio<i64>, Vec<usize>)>> = cutting_vectors(params.gamma, params.kappa)
        .into_par_iter()
        .map(|z| {
            let p = cv_partition(&z, params)?;
            Ok((count_f_sc(&p, &f, params)?, z))
        })
        .collect();
    let mut best: Option<(Ratio<i64>, Vec<usize>)> = None;
    for s in scored {
        let s = s?;
        if best.as_ref().is_none_or(|b| s < *b) {
            best = Some(s);
        }
    }
    let (f, z) = best.ok_or_else(|| Error::InvalidParams("no cutting vector".into()))?;
    Ok((z, f))
}

/// Writes `report.json`, `report.txt` and, when present, `H.alist`.
pub fn write_artifacts(out: &RunOutcome, dir: &Path) -> Result<()> {
    atomic_write(&dir.join("report.json"), out.report.to_json().as_bytes())?;
    atomic_write(&dir.join("report.txt"), out.report.to_table().as_bytes())?;
    if let Some(code) = &out.code {
        atomic_write(&dir.join("H.alist"), to_alist(&code.h).as_bytes())?;
    }
    Ok(())
}

/// Rebuilds the lifted code embedded in a report.
pub fn code_from_report(r: &DesignReport) -> Result<LiftedCode> {
    let rows = r.partition.as_ref().ok_or_else(|| Error::Config("report has no partition".into()))?;
    let powers = r.powers.as_ref().ok_or_else(|| Error::Config("report has no powers".into()))?;
    let p = PartitionMatrix::from_rows(r.params.m, rows)?;
    let f = CirculantPowers::from_rows(r.params.z, powers)?;
    assemble_parity_matrix(&p, &f, &r.params)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uncoupled_mode() {
        let cfg = RunConfig::new(CodeParams::new(3, 7, 13, 0, 10).unwrap(), Mode::Uncoupled);
        let out = run(&cfg).unwrap();
        assert_eq!(out.report.f_sc_final.as_ref().unwrap().rounded, 32370);
        let back = code_from_report(&out.report).unwrap();
        assert_eq!(back.h, out.code.unwrap().h);
    }

    #[test]
    fn cpo_needs_partition() {
        let cfg = RunConfig::new(CodeParams::new(3, 7, 13, 1, 10).unwrap(), Mode::Cpo);
        assert!(matches!(run(&cfg), Err(Error::Config(_))));
    }

    #[test]
    fn identical_runs_identical_bytes() {
        let mut cfg = RunConfig::new(CodeParams::new(3, 5, 7, 1, 4).unwrap(), Mode::Full);
        cfg.cpo.budget = 50;
        let a = run(&cfg).unwrap().report.to_json();
        let b = run(&cfg).unwrap().report.to_json();
        assert_eq!(a, b);
    }
}
