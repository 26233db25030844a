//! Design reports in JSON and as a plain-text table.

use std::collections::BTreeMap;
use std::fmt::Write;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::census::{PatternCensus, PatternId};
use crate::error::{Error, Result};
use crate::io::config::Mode;
use crate::num::round_ratio;
use crate::params::CodeParams;

/// An exact rational with its rounded value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Exact {
    pub exact: String,
    pub rounded: i64,
}

impl Exact {
    pub fn new(r: &Ratio<i64>) -> Self {
        Self { exact: r.to_string(), rounded: round_ratio(r) }
    }

    pub fn value(&self) -> Result<Ratio<i64>> {
        self.exact.parse().map_err(|_| Error::Config(format!("bad rational {:?}", self.exact)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternRow {
    pub pattern: String,
    pub total: Exact,
    /// `F^k_{Pℓ,1}` for `k = 1..=χ`.
    pub per_span: Vec<String>,
}

pub fn pattern_rows(c: &PatternCensus<i64>) -> Vec<PatternRow> {
    PatternId::ALL
        .iter()
        .map(|&p| PatternRow {
            pattern: p.to_string(),
            total: Exact::new(c.total(p)),
            per_span: c.span_counts(p).iter().map(|x| x.to_string()).collect(),
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OoSummary {
    pub strategy: String,
    pub visited: u64,
    pub restarts: usize,
    pub co_optimal: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CpoStep {
    pub iteration: u64,
    pub selected: Vec<(usize, usize)>,
    pub proposed: Vec<u32>,
    pub f_sc: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CpoSummary {
    pub proposals: u64,
    pub accepted: Vec<CpoStep>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DesignReport {
    pub tool: String,
    pub version: String,
    pub mode: Mode,
    pub params: CodeParams,
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub partition: Option<Vec<Vec<u8>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cutting_vector: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t_star: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f_sum: Option<Exact>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub patterns: Vec<PatternRow>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f_sc_initial: Option<Exact>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f_sc_final: Option<Exact>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub powers: Option<Vec<Vec<u32>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oo: Option<OoSummary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cpo: Option<CpoSummary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<String, u64>>,
}

impl DesignReport {
    pub fn new(mode: Mode, params: CodeParams, seed: u64) -> Self {
        Self {
            tool: env!("CARGO_PKG_NAME").into(),
            version: env!("CARGO_PKG_VERSION").into(),
            mode,
            params,
            seed,
            partition: None,
            cutting_vector: None,
            t_star: None,
            f_sum: None,
            patterns: Vec::new(),
            f_sc_initial: None,
            f_sc_final: None,
            powers: None,
            oo: None,
            cpo: None,
            timings_ms: None,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialises");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_table(&self) -> String {
        let p = &self.params;
        let mut out = String::new();
        let w = &mut out;
        let _ = writeln!(w, "{} {}  mode={}", self.tool, self.version, mode_name(self.mode));
        let _ = writeln!(w, "γ={} κ={} z={} m={} L={}  seed={}", p.gamma, p.kappa, p.z, p.m, p.l, self.seed);
        if let Some(cv) = &self.cutting_vector {
            let _ = writeln!(w, "cutting vector: {cv:?}");
        }
        if let Some(t) = &self.t_star {
            let _ = writeln!(w, "t*: {t:?}");
        }
        if let Some(rows) = &self.partition {
            let _ = writeln!(w, "partition:");
            for r in rows {
                let cells: Vec<String> = r.iter().map(u8::to_string).collect();
                let _ = writeln!(w, "  {}", cells.join(" "));
            }
        }
        if !self.patterns.is_empty() {
            let _ = writeln!(w, "{:<8}{:>16}  per span", "pattern", "F_P");
            for row in &self.patterns {
                let _ = writeln!(w, "{:<8}{:>16}  {}", row.pattern, row.total.exact, row.per_span.join(" "));
            }
        }
        if let Some(f) = &self.f_sum {
            let _ = writeln!(w, "F_sum: {} (rounded {})", f.exact, f.rounded);
        }
        if let Some(f) = &self.f_sc_initial {
            let _ = writeln!(w, "F_SC (initial powers): {}", f.exact);
        }
        if let Some(f) = &self.f_sc_final {
            let _ = writeln!(w, "F_SC (final powers): {}", f.exact);
        }
        if let Some(o) = &self.oo {
            let _ = writeln!(
                w,
                "OO: {} visited={} restarts={} co-optimal={}",
                o.strategy, o.visited, o.restarts, o.co_optimal
            );
        }
        if let Some(c) = &self.cpo {
            let _ = writeln!(w, "CPO: proposals={} accepted={}", c.proposals, c.accepted.len());
        }
        if let Some(f) = &self.powers {
            let _ = writeln!(w, "powers:");
            for r in f {
                let cells: Vec<String> = r.iter().map(|x| format!("{x:>3}")).collect();
                let _ = writeln!(w, " {}", cells.join(""));
            }
        }
        if let Some(t) = &self.timings_ms {
            for (k, v) in t {
                let _ = writeln!(w, "time {k}: {v} ms");
            }
        }
        out
    }
}

pub fn mode_name(m: Mode) -> &'static str {
    match m {
        Mode::Oo => "oo",
        Mode::Cpo => "cpo",
        Mode::Full => "full",
        Mode::Census => "census",
        Mode::CvBaseline => "cv-baseline",
        Mode::Uncoupled => "uncoupled",
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_round_trip() {
        let e = Exact::new(&Ratio::new(10339, 2));
        assert_eq!(e.rounded, 5170);
        assert_eq!(e.value().unwrap(), Ratio::new(10339, 2));
    }

    #[test]
    fn json_round_trip() {
        let mut r = DesignReport::new(Mode::Uncoupled, CodeParams::new(3, 7, 13, 0, 10).unwrap(), 1);
        r.f_sc_final = Some(Exact::new(&Ratio::from_integer(32370)));
        r.powers = Some(vec![vec![0, 0], vec![0, 2]]);
        assert_eq!(DesignReport::from_json(&r.to_json()).unwrap(), r);
        assert!(r.to_table().contains("F_SC (final powers): 32370"));
    }
}
