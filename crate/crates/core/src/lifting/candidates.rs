//! Cycle-8 candidates of the window and their lifted status.

use num_rational::Ratio;
use rayon::prelude::*;

use crate::census::PatternId;
use crate::lifting::powers::CirculantPowers;
use crate::lifting::window::Window;

/// A closed walk `c_0 v_0 c_1 v_1 c_2 v_2 c_3 v_3` without immediate
/// backtracking, where `c_t` is adjacent to `v_{t-1}` and `v_t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Candidate {
    pub cns: [u32; 4],
    pub vns: [u32; 4],
    pub pattern: PatternId,
    /// Leftmost replica touched by a VN.
    pub start: u16,
    /// Number of consecutive replicas spanned by the VNs.
    pub span: u16,
}

/// Lifted status of one candidate under a power assignment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Status {
    /// The walk lifts to 8-cycles.
    pub cycle: bool,
    /// Whether each diagonal pair `(v_a, v_{a+2})` is joined by a lifted chord.
    pub connected: [bool; 2],
}

impl Status {
    pub fn active(&self) -> bool {
        self.cycle && !self.connected[0] && !self.connected[1]
    }

    pub fn fully_chorded(&self) -> bool {
        self.cycle && self.connected[0] && self.connected[1]
    }
}

/// Every canonical candidate of a window, compiled for fast re-evaluation.
#[derive(Debug, Clone)]
pub struct CandidateSet {
    pub z: usize,
    cands: Vec<Candidate>,
    /// `edges[n][2t] = f(c_t, v_t)`, `edges[n][2t+1] = f(c_t, v_{t-1})` as circulant indices.
    edges: Vec<[u16; 8]>,
    /// CSR offsets into `chords`, two slots per candidate.
    chord_off: Vec<u32>,
    /// `(f(c, v_{a+2}), f(c, v_a))` circulant indices per chord CN.
    chords: Vec<(u16, u16)>,
    /// Candidates that read each base circulant.
    touching: Vec<Vec<u32>>,
}

fn is_canonical(xs: &[u32; 4], vs: &[u32; 4]) -> bool {
    let seq = [xs[0], vs[0], xs[1], vs[1], xs[2], vs[2], xs[3], vs[3]];
    for s in 0..4 {
        let mut rot = [0u32; 8];
        let mut refl = [0u32; 8];
        for t in 0..4 {
            rot[2 * t] = xs[(t + s) % 4];
            rot[2 * t + 1] = vs[(t + s) % 4];
            refl[2 * t] = xs[(s + 4 - t) % 4];
            refl[2 * t + 1] = vs[(s + 7 - t) % 4];
        }
        if rot < seq || refl < seq {
            return false;
        }
    }
    true
}

fn distinct(a: &[u32; 4]) -> usize {
    let mut v = *a;
    v.sort_unstable();
    1 + v.windows(2).filter(|w| w[0] != w[1]).count()
}

/// All canonical walks, in a deterministic order.
fn walks(w: &Window) -> Vec<([u32; 4], [u32; 4])> {
    let h = &w.sc.matrix;
    (0..h.rows())
        .into_par_iter()
        .map(|x0| {
            let mut out = Vec::new();
            for &v0 in h.row(x0) {
                for &x1 in h.col(v0).iter().filter(|&&x| x > x0) {
                    for &v1 in h.row(x1).iter().filter(|&&v| v != v0) {
                        for &x2 in h.col(v1).iter().filter(|&&x| x >= x0 && x != x1) {
                            for &v2 in h.row(x2).iter().filter(|&&v| v != v1) {
                                for &x3 in h.col(v2).iter().filter(|&&x| x > x0 && x != x2) {
                                    for &v3 in h.row(x3).iter().filter(|&&v| v != v2 && v != v0) {
                                        if !h.get(x0, v3) {
                                            continue;
                                        }
                                        let xs = [x0 as u32, x1 as u32, x2 as u32, x3 as u32];
                                        let vs = [v0 as u32, v1 as u32, v2 as u32, v3 as u32];
                                        if is_canonical(&xs, &vs) {
                                            out.push((xs, vs));
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
            out
        })
        .flatten()
        .collect()
}

impl CandidateSet {
    pub fn enumerate(w: &Window) -> Self {
        let h = &w.sc.matrix;
        let n_circ = w.params.gamma * w.params.kappa;
        let mut cands = Vec::new();
        let mut edges = Vec::new();
        let mut chord_off = vec![0u32];
        let mut chords = Vec::new();
        let mut touching = vec![Vec::new(); n_circ];
        for (xs, vs) in walks(w) {
            let pattern = PatternId::from_dims(distinct(&xs), distinct(&vs)).expect("walk touches 2..=4 CNs and VNs");
            let reps = vs.map(|v| w.replica_of_col(v as usize));
            let lo = *reps.iter().min().unwrap();
            let hi = *reps.iter().max().unwrap();
            let ci = |x: u32, v: u32| w.circulant(x as usize, v as usize);
            let mut e = [0u16; 8];
            for t in 0..4 {
                e[2 * t] = ci(xs[t], vs[t]);
                e[2 * t + 1] = ci(xs[t], vs[(t + 3) % 4]);
            }
            let n = cands.len() as u32;
            let mut touched: Vec<u16> = e.to_vec();
            for a in 0..2 {
                let (va, vb) = (vs[a], vs[a + 2]);
                if va != vb {
                    for &c in h.col(va as usize) {
                        if h.get(c, vb as usize) && !xs.contains(&(c as u32)) {
                            let pair = (ci(c as u32, vb), ci(c as u32, va));
                            touched.extend([pair.0, pair.1]);
                            chords.push(pair);
                        }
                    }
                }
                chord_off.push(chords.len() as u32);
            }
            touched.sort_unstable();
            touched.dedup();
            for c in touched {
                touching[c as usize].push(n);
            }
            edges.push(e);
            cands.push(Candidate { cns: xs, vns: vs, pattern, start: lo as u16, span: (hi - lo + 1) as u16 });
        }
        Self { z: w.params.z, cands, edges, chord_off, chords, touching }
    }

    pub fn len(&self) -> usize {
        self.cands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cands.is_empty()
    }

    pub fn get(&self, n: usize) -> &Candidate {
        &self.cands[n]
    }

    pub fn iter(&self) -> impl Iterator<Item = &Candidate> {
        self.cands.iter()
    }

    /// Chord CNs' circulant pairs for diagonal `a` of candidate `n`.
    pub fn chords(&self, n: usize, a: usize) -> &[(u16, u16)] {
        let lo = self.chord_off[2 * n + a] as usize;
        let hi = self.chord_off[2 * n + a + 1] as usize;
        &self.chords[lo..hi]
    }

    /// Base circulant indices on the walk itself (each listed once).
    pub fn cycle_circulants(&self, n: usize) -> Vec<u16> {
        let mut v = self.edges[n].to_vec();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Candidates whose status depends on base circulant `c`.
    pub fn touching(&self, c: usize) -> &[u32] {
        &self.touching[c]
    }

    pub fn status(&self, n: usize, f: &CirculantPowers) -> Status {
        let z = self.z as i64;
        let e = &self.edges[n];
        let p = |k: usize| f.flat(e[k] as usize) as i64;
        let total: i64 = (0..4).map(|t| p(2 * t) - p(2 * t + 1)).sum();
        let mut st = Status { cycle: total.rem_euclid(z) == 0, connected: [false; 2] };
        for a in 0..2 {
            // c_{a+1}, c_{a+2} carry the walk from v_a to v_{a+2}
            let (s, t) = (2 * (a + 1), 2 * (a + 2));
            let path = p(s + 1) - p(s) + p((t + 1) % 8) - p(t % 8);
            st.connected[a] = self.chords(n, a).iter().any(|&(to, from)| {
                (path + f.flat(to as usize) as i64 - f.flat(from as usize) as i64).rem_euclid(z) == 0
            });
        }
        st
    }

    pub fn statuses(&self, f: &CirculantPowers) -> Vec<Status> {
        (0..self.len()).into_par_iter().map(|n| self.status(n, f)).collect()
    }

    /// Twice the lifted-object contribution of candidate `n` when active:
    /// `(L-k+1)·z` for candidates starting at the first replica, halved for P1.
    pub fn twice_weight(&self, n: usize, l: usize) -> i64 {
        let c = &self.cands[n];
        if c.start != 0 {
            return 0;
        }
        let reps = (l as i64 - c.span as i64 + 1).max(0);
        let per = if c.pattern.get() == 1 { self.z as i64 } else { 2 * self.z as i64 };
        reps * per
    }

    /// `F_SC` from precomputed statuses.
    pub fn f_sc_from(&self, st: &[Status], l: usize) -> Ratio<i64> {
        let twice: i64 =
            (0..self.len()).into_par_iter().filter(|&n| st[n].active()).map(|n| self.twice_weight(n, l)).sum();
        Ratio::new(twice, 2)
    }

    pub fn f_sc(&self, f: &CirculantPowers, l: usize) -> Ratio<i64> {
        self.f_sc_from(&self.statuses(f), l)
    }

    /// Lifted 8-cycles whose both diagonals are chorded, extrapolated to `L`.
    pub fn fully_chorded(&self, f: &CirculantPowers, l: usize) -> i64 {
        (0..self.len())
            .into_par_iter()
            .filter(|&n| self.status(n, f).fully_chorded())
            .map(|n| self.twice_weight(n, l) / 2)
            .sum()
    }
}

/// 4-cycles of a window as circulant quadruples `(a, b, c, d)` that lift to
/// 4-cycles when `f_a + f_b ≡ f_c + f_d`.
#[derive(Debug, Clone)]
pub struct FourCycles {
    pub z: usize,
    quads: Vec<[u16; 4]>,
    touching: Vec<Vec<u32>>,
}

impl FourCycles {
    pub fn enumerate(w: &Window) -> Self {
        let h = &w.sc.matrix;
        let mut quads = Vec::new();
        for c1 in 0..h.cols() {
            for c2 in c1 + 1..h.cols() {
                let common: Vec<usize> = h.col(c1).iter().copied().filter(|&r| h.get(r, c2)).collect();
                for (x, &r1) in common.iter().enumerate() {
                    for &r2 in &common[x + 1..] {
                        quads.push([
                            w.circulant(r1, c1),
                            w.circulant(r2, c2),
                            w.circulant(r1, c2),
                            w.circulant(r2, c1),
                        ]);
                    }
                }
            }
        }
        let mut touching = vec![Vec::new(); w.params.gamma * w.params.kappa];
        for (n, q) in quads.iter().enumerate() {
            let mut v = q.to_vec();
            v.sort_unstable();
            v.dedup();
            for c in v {
                touching[c as usize].push(n as u32);
            }
        }
        Self { z: w.params.z, quads, touching }
    }

    pub fn len(&self) -> usize {
        self.quads.len()
    }

    pub fn is_empty(&self) -> bool {
        self.quads.is_empty()
    }

    pub fn lifts(&self, n: usize, f: &CirculantPowers) -> bool {
        let q = self.quads[n];
        let p = |k: usize| f.flat(q[k] as usize) as i64;
        (p(0) + p(1) - p(2) - p(3)).rem_euclid(self.z as i64) == 0
    }

    pub fn girth_ok(&self, f: &CirculantPowers) -> bool {
        !(0..self.len()).into_par_iter().any(|n| self.lifts(n, f))
    }

    /// Girth check restricted to 4-cycles through the given circulants.
    pub fn girth_ok_near(&self, f: &CirculantPowers, circulants: &[usize]) -> bool {
        circulants.iter().all(|&c| self.touching[c].iter().all(|&n| !self.lifts(n as usize, f)))
    }
}
