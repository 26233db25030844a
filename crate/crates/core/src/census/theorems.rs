//! Per-span instance counts `F^k_{Pℓ,1}` as sums of the case formulas over
//! row indices of the stacked replica.
//!
//! The printed `k = 2` and `k = 3` blocks of each pattern coincide with the
//! general `k ≥ 2` block once the empty `h`/`w` sums are dropped, so each
//! pattern carries one block for `k = 1` and one for `k ≥ 2`.

use std::ops::RangeInclusive;

use num_rational::Ratio;

use crate::census::cases::*;
use crate::census::constants::PatternId;
use crate::error::{Error, Result};
use crate::num::Count;
use crate::params::CodeParams;
use crate::protograph::OverlapParams;

pub(crate) struct Ctx<'a> {
    t: &'a OverlapParams,
    g: i64,
    m: i64,
}

impl<'a> Ctx<'a> {
    pub(crate) fn new(t: &'a OverlapParams) -> Self {
        Self { t, g: t.gamma() as i64, m: t.m() as i64 }
    }

    #[inline]
    fn t<C: Count>(&self, set: &[i64]) -> C {
        C::of(self.t.t_lookup(set) as i64)
    }

    fn top(&self) -> i64 {
        (self.m + 1) * self.g - 1
    }

    /// Distinct residues mod γ.
    #[inline]
    fn ne(&self, a: i64, b: i64) -> bool {
        a.rem_euclid(self.g) != b.rem_euclid(self.g)
    }
}

fn r(lo: i64, hi: i64) -> RangeInclusive<i64> {
    lo..=hi
}

/// Unordered pairs `{a < b}` of `[lo, hi]`.
fn pairs(lo: i64, hi: i64) -> impl Iterator<Item = (i64, i64)> {
    (lo..=hi).flat_map(move |a| (a + 1..=hi).map(move |b| (a, b)))
}

fn triples(lo: i64, hi: i64) -> impl Iterator<Item = (i64, i64, i64)> {
    pairs(lo, hi).flat_map(move |(a, b)| (b + 1..=hi).map(move |c| (a, b, c)))
}

fn quads(lo: i64, hi: i64) -> impl Iterator<Item = (i64, i64, i64, i64)> {
    triples(lo, hi).flat_map(move |(a, b, c)| (c + 1..=hi).map(move |d| (a, b, c, d)))
}

fn whole<C: Count>(x: C) -> Ratio<C> {
    Ratio::from_integer(x)
}

fn halved<C: Count>(full: C, half: C) -> Ratio<C> {
    Ratio::from_integer(full) + Ratio::new(half, C::one() + C::one())
}

fn p1<C: Count>(c: &Ctx, k: i64) -> Ratio<C> {
    let (g, top) = (c.g, c.top());
    let mut s = C::zero();
    if k == 1 {
        for (i1, i2) in pairs(0, top).filter(|&(a, b)| c.ne(a, b)) {
            s += p1_a(c.t(&[i1, i2]));
        }
    } else {
        let d = (1 - k) * g;
        for (i1, i2) in pairs((k - 1) * g, top).filter(|&(a, b)| c.ne(a, b)) {
            s += p1_b(c.t(&[i1, i2]), c.t(&[i1 + d, i2 + d]));
        }
    }
    whole(s)
}

fn p2<C: Count>(c: &Ctx, k: i64) -> Ratio<C> {
    let (g, m, top) = (c.g, c.m, c.top());
    let ok = |&(a, b): &(i64, i64)| c.ne(a, b);
    let mut s = C::zero();
    if k == 1 {
        for (i1, i2) in pairs(0, top).filter(ok) {
            s += p2_a(c.t(&[i1, i2]));
        }
        return whole(s);
    }
    let d = (1 - k) * g;
    for (i1, i2) in pairs((k - 1) * g, top).filter(ok) {
        s += p2_b(c.t(&[i1, i2]), c.t(&[i1 + d, i2 + d]));
    }
    for (i1, i2) in pairs(0, (m - k + 2) * g - 1).filter(ok) {
        s += p2_b(c.t(&[i1, i2]), c.t(&[i1 - d, i2 - d]));
    }
    for h in 2..k {
        let e = (1 - h) * g;
        for (i1, i2) in pairs((k - 1) * g, top).filter(ok) {
            s += p2_c(c.t(&[i1, i2]), c.t(&[i1 + e, i2 + e]), c.t(&[i1 + d, i2 + d]));
        }
    }
    whole(s)
}

fn p3<C: Count>(c: &Ctx, k: i64) -> Ratio<C> {
    let (g, top) = (c.g, c.top());
    let ok = |&(a, b, e): &(i64, i64, i64)| c.ne(a, b) && c.ne(a, e) && c.ne(b, e);
    let mut s = C::zero();
    if k == 1 {
        for (i1, i2, i3) in triples(0, top).filter(ok) {
            s += p3_a(c.t(&[i1, i2, i3]));
        }
    } else {
        let d = (1 - k) * g;
        for (i1, i2, i3) in triples((k - 1) * g, top).filter(ok) {
            s += p3_b(c.t(&[i1, i2, i3]), c.t(&[i1 + d, i2 + d, i3 + d]));
        }
    }
    whole(s)
}

fn p4<C: Count>(c: &Ctx, k: i64) -> Ratio<C> {
    let (g, m, top) = (c.g, c.m, c.top());
    let ok = |&(a, b): &(i64, i64)| c.ne(a, b);
    let sh = |i1: i64, i2: i64, d: i64| -> C { c.t(&[i1 + d, i2 + d]) };
    let mut s = C::zero();
    if k == 1 {
        for (i1, i2) in pairs(0, top).filter(ok) {
            s += p4_a(c.t(&[i1, i2]));
        }
        return whole(s);
    }
    let d = (1 - k) * g;
    for (i1, i2) in pairs((k - 1) * g, top).filter(ok) {
        s += p4_b(c.t(&[i1, i2]), sh(i1, i2, d));
    }
    for (i1, i2) in pairs(0, (m - k + 2) * g - 1).filter(ok) {
        s += p4_b(c.t(&[i1, i2]), sh(i1, i2, -d));
    }
    for (i1, i2) in pairs((k - 1) * g, top).filter(ok) {
        s += p4_c(c.t(&[i1, i2]), sh(i1, i2, d));
    }
    for h in 2..k {
        for (i1, i2) in pairs((k - 1) * g, top).filter(ok) {
            s += p4_d(c.t(&[i1, i2]), sh(i1, i2, (1 - h) * g), sh(i1, i2, d));
        }
        for (i1, i2) in pairs((k - h) * g, (m - h + 2) * g - 1).filter(ok) {
            s += p4_d(c.t(&[i1, i2]), sh(i1, i2, (h - 1) * g), sh(i1, i2, (h - k) * g));
        }
        for (i1, i2) in pairs(0, (m - k + 2) * g - 1).filter(ok) {
            s += p4_d(c.t(&[i1, i2]), sh(i1, i2, (k - 1) * g), sh(i1, i2, (k - h) * g));
        }
    }
    for h in 2..k - 1 {
        for w in h + 1..k {
            for (i1, i2) in pairs((k - 1) * g, top).filter(ok) {
                s += p4_e(c.t(&[i1, i2]), sh(i1, i2, (1 - h) * g), sh(i1, i2, (1 - w) * g), sh(i1, i2, d));
            }
        }
    }
    whole(s)
}

fn p5<C: Count>(c: &Ctx, k: i64) -> Ratio<C> {
    let (g, top) = (c.g, c.top());
    let ok = |&(a, b, e, f): &(i64, i64, i64, i64)| {
        c.ne(a, b) && c.ne(a, e) && c.ne(a, f) && c.ne(b, e) && c.ne(b, f) && c.ne(e, f)
    };
    let mut s = C::zero();
    if k == 1 {
        for (i1, i2, i3, i4) in quads(0, top).filter(ok) {
            s += p5_a(c.t(&[i1, i2, i3, i4]));
        }
    } else {
        let d = (1 - k) * g;
        for (i1, i2, i3, i4) in quads((k - 1) * g, top).filter(ok) {
            s += p5_b(c.t(&[i1, i2, i3, i4]), c.t(&[i1 + d, i2 + d, i3 + d, i4 + d]));
        }
    }
    whole(s)
}

fn p6<C: Count>(c: &Ctx, k: i64) -> Ratio<C> {
    let (g, m, top) = (c.g, c.m, c.top());
    let ok = |i1: i64, i2: i64, i3: i64| c.ne(i1, i2) && c.ne(i1, i3) && c.ne(i2, i3);
    let base = |i1: i64, i2: i64, i3: i64| -> (C, C, C) { (c.t(&[i1, i2]), c.t(&[i1, i3]), c.t(&[i1, i2, i3])) };
    let mut s = C::zero();
    if k == 1 {
        for i1 in r(0, top) {
            for (i2, i3) in pairs(0, top) {
                if ok(i1, i2, i3) {
                    let (t12, t13, t123) = base(i1, i2, i3);
                    s += p6_a(t12, t13, t123);
                }
            }
        }
        return whole(s);
    }
    let d = (1 - k) * g;
    let lo = (k - 1) * g;
    let hi_low = (m - k + 2) * g - 1;
    for i1 in r(lo, top) {
        for (i2, i3) in pairs(lo, top) {
            if ok(i1, i2, i3) {
                let (t12, t13, t123) = base(i1, i2, i3);
                s += p6_b(t12, t13, t123, c.t(&[i1 + d, i2 + d, i3 + d]));
            }
        }
    }
    for i1 in r(0, hi_low) {
        for (i2, i3) in pairs(0, hi_low) {
            if ok(i1, i2, i3) {
                let (t12, t13, t123) = base(i1, i2, i3);
                s += p6_b(t12, t13, t123, c.t(&[i1 - d, i2 - d, i3 - d]));
            }
        }
    }
    for i1 in r(lo, top) {
        for i2 in r(0, top) {
            for i3 in r(lo, top) {
                if ok(i1, i2, i3) {
                    s += p6_c(c.t(&[i1, i2]), c.t(&[i1, i2, i3]), c.t(&[i1 + d, i3 + d]));
                }
            }
        }
    }
    for i1 in r(0, hi_low) {
        for i2 in r(0, top) {
            for i3 in r(0, hi_low) {
                if ok(i1, i2, i3) {
                    s += p6_c(c.t(&[i1, i2]), c.t(&[i1, i2, i3]), c.t(&[i1 - d, i3 - d]));
                }
            }
        }
    }
    for h in 2..k {
        let e = (1 - h) * g;
        for i1 in r(lo, top) {
            for i2 in r(lo, top) {
                for i3 in r(lo, (m + h) * g - 1) {
                    if ok(i1, i2, i3) {
                        s += p6_d(c.t(&[i1, i2]), c.t(&[i1 + e, i3 + e]), c.t(&[i1 + d, i2 + d, i3 + d]));
                    }
                }
            }
        }
        // The printed lower bound of i2 here is h-1; every extra index shifts
        // out of the replica and contributes zero.
        for i1 in r(lo, top) {
            for i2 in r(h - 1, top) {
                for i3 in r(lo, (m + h) * g - 1) {
                    if ok(i1, i2, i3) {
                        s += p6_d(c.t(&[i1, i2]), c.t(&[i1 + d, i3 + d]), c.t(&[i1 + e, i2 + e, i3 + e]));
                    }
                }
            }
        }
        let hi_h = (m - h + 2) * g - 1;
        for i1 in r((k - h) * g, hi_h) {
            for i2 in r(0, hi_h) {
                for i3 in r((k - h) * g, hi_h) {
                    if ok(i1, i2, i3) {
                        s += p6_d(
                            c.t(&[i1, i2]),
                            c.t(&[i1 + (h - k) * g, i3 + (h - k) * g]),
                            c.t(&[i1 - e, i2 - e, i3 - e]),
                        );
                    }
                }
            }
        }
    }
    whole(s)
}

fn p7<C: Count>(c: &Ctx, k: i64) -> Ratio<C> {
    let (g, m, top) = (c.g, c.m, c.top());
    let ok = |i1: i64, i2: i64, i3: i64| c.ne(i1, i2) && c.ne(i1, i3) && i2 != i3;
    let base = |i1: i64, i2: i64, i3: i64| -> (C, C, C) { (c.t(&[i1, i2]), c.t(&[i1, i3]), c.t(&[i1, i2, i3])) };
    let t2 = |a: i64, b: i64, d: i64| -> C { c.t(&[a + d, b + d]) };
    let mut s = C::zero();
    if k == 1 {
        for i1 in r(0, top) {
            for (i2, i3) in pairs(0, top) {
                if ok(i1, i2, i3) {
                    let (t12, t13, t123) = base(i1, i2, i3);
                    s += p7_a(t12, t13, t123);
                }
            }
        }
        return whole(s);
    }
    let d = (1 - k) * g;
    let lo = (k - 1) * g;
    let hi_low = (m - k + 2) * g - 1;
    for i1 in r(lo, top) {
        for i2 in r(0, top) {
            for i3 in r(lo, top) {
                if ok(i1, i2, i3) {
                    let (t12, t13, t123) = base(i1, i2, i3);
                    s += p7_b(t12, t13, t123, t2(i1, i3, d));
                }
            }
        }
    }
    for i1 in r(0, hi_low) {
        for i2 in r(0, top) {
            for i3 in r(0, hi_low) {
                if ok(i1, i2, i3) {
                    let (t12, t13, t123) = base(i1, i2, i3);
                    s += p7_b(t12, t13, t123, t2(i1, i3, -d));
                }
            }
        }
    }
    for i1 in r(lo, top) {
        for i2 in r(0, top) {
            for i3 in r(lo, (m + k) * g - 1) {
                if ok(i1, i2, i3) {
                    s += p7_c(c.t(&[i1, i2]), t2(i1, i3, d));
                }
            }
        }
    }
    for i1 in r(lo, top) {
        for (i2, i3) in pairs(lo, top) {
            if ok(i1, i2, i3) {
                let (t12, t13, t123) = base(i1, i2, i3);
                s += p7_d(t12, t13, t123, t2(i1, i2, d), t2(i1, i3, d), c.t(&[i1 + d, i2 + d, i3 + d]));
            }
        }
    }
    for h in 2..k {
        let (up, dn) = ((h - 1) * g, (1 - h) * g);
        for i1 in r(lo, top) {
            for i2 in r(0, top) {
                for i3 in r(lo, (m + h) * g - 1) {
                    if ok(i1, i2, i3) {
                        s += p7_e(c.t(&[i1, i2]), t2(i1, i3, dn), t2(i1, i3, d));
                    }
                }
            }
        }
        let hi_h = (m - h + 2) * g - 1;
        for i1 in r((k - h) * g, hi_h) {
            for i2 in r(0, top) {
                for i3 in r((k - h) * g, hi_h) {
                    if ok(i1, i2, i3) {
                        s += p7_e(c.t(&[i1, i2]), t2(i1, i3, up), t2(i1, i3, (h - k) * g));
                    }
                }
            }
        }
        for i1 in r(0, hi_low) {
            for i2 in r(0, top) {
                for i3 in r((h - k) * g, hi_low) {
                    if ok(i1, i2, i3) {
                        s += p7_e(c.t(&[i1, i2]), t2(i1, i3, -d), t2(i1, i3, (k - h) * g));
                    }
                }
            }
        }
        for i1 in r(lo, top) {
            for i2 in r(up, top) {
                for i3 in r(lo, top) {
                    if ok(i1, i2, i3) {
                        let (t12, t13, t123) = base(i1, i2, i3);
                        s += p7_g(t12, t13, t123, t2(i1, i2, dn), t2(i1, i3, d));
                    }
                }
            }
        }
        for i1 in r((k - h) * g, hi_h) {
            for i2 in r(0, hi_h) {
                for i3 in r((k - h) * g, top) {
                    if ok(i1, i2, i3) {
                        let (t12, t13, t123) = base(i1, i2, i3);
                        s += p7_g(t12, t13, t123, t2(i1, i2, up), t2(i1, i3, (h - k) * g));
                    }
                }
            }
        }
        for i1 in r(0, hi_low) {
            for i2 in r(0, hi_low) {
                for i3 in r(0, (m - k + h + 1) * g - 1) {
                    if ok(i1, i2, i3) {
                        let (t12, t13, t123) = base(i1, i2, i3);
                        s += p7_g(t12, t13, t123, t2(i1, i2, -d), t2(i1, i3, (k - h) * g));
                    }
                }
            }
        }
    }
    for h in 2..k - 1 {
        for w in h + 1..k {
            let (dh, dw) = ((1 - h) * g, (1 - w) * g);
            for i1 in r(lo, top) {
                for i2 in r((h - 1) * g, top) {
                    for i3 in r(lo, (m + w) * g - 1) {
                        if ok(i1, i2, i3) {
                            s += p7_i(c.t(&[i1, i2]), t2(i1, i2, dh), t2(i1, i3, dw), t2(i1, i3, d));
                        }
                    }
                }
            }
            for i1 in r(lo, top) {
                for i2 in r((w - 1) * g, top) {
                    for i3 in r(lo, (m + h) * g - 1) {
                        if ok(i1, i2, i3) {
                            s += p7_i(c.t(&[i1, i2]), t2(i1, i2, dw), t2(i1, i3, dh), t2(i1, i3, d));
                        }
                    }
                }
            }
            for i1 in r(lo, top) {
                for i2 in r(lo, top) {
                    for i3 in r((w - 1) * g, (m + h) * g - 1) {
                        if ok(i1, i2, i3) {
                            s += p7_i(c.t(&[i1, i2]), t2(i1, i2, d), t2(i1, i3, dh), t2(i1, i3, dw));
                        }
                    }
                }
            }
        }
    }
    whole(s)
}

fn p8<C: Count>(c: &Ctx, k: i64) -> Ratio<C> {
    let (g, m, top) = (c.g, c.m, c.top());
    let ok = |a: (i64, i64), b: (i64, i64)| {
        let v = [a.0, a.1, b.0, b.1];
        (0..4).all(|x| (x + 1..4).all(|y| c.ne(v[x], v[y])))
    };
    let t4 = |a: (i64, i64), b: (i64, i64), d: i64| -> C { c.t(&[a.0 + d, a.1 + d, b.0 + d, b.1 + d]) };
    let t2 = |a: (i64, i64), d: i64| -> C { c.t(&[a.0 + d, a.1 + d]) };
    let (mut full, mut half) = (C::zero(), C::zero());
    if k == 1 {
        for p12 in pairs(0, top) {
            for p34 in pairs(0, top) {
                if ok(p12, p34) {
                    half += p8_a(t2(p12, 0), t2(p34, 0), t4(p12, p34, 0));
                }
            }
        }
        return halved(full, half);
    }
    let d = (1 - k) * g;
    let lo = (k - 1) * g;
    let hi_low = (m - k + 2) * g - 1;
    for p12 in pairs(lo, top) {
        for p34 in pairs(lo, top) {
            if ok(p12, p34) {
                half += p8_b(t2(p12, 0), t2(p34, 0), t4(p12, p34, 0), t4(p12, p34, d));
            }
        }
    }
    for p12 in pairs(0, hi_low) {
        for p34 in pairs(0, hi_low) {
            if ok(p12, p34) {
                half += p8_b(t2(p12, 0), t2(p34, 0), t4(p12, p34, 0), t4(p12, p34, -d));
            }
        }
    }
    for p12 in pairs(0, top) {
        for p34 in pairs(lo, top) {
            if ok(p12, p34) {
                full += p8_c(t2(p12, 0), t4(p12, p34, 0), t2(p34, d));
            }
        }
        for p34 in pairs(0, hi_low) {
            if ok(p12, p34) {
                full += p8_c(t2(p12, 0), t4(p12, p34, 0), t2(p34, -d));
            }
        }
    }
    for h in 2..k {
        let e = (1 - h) * g;
        for p12 in pairs(lo, top) {
            for p34 in pairs(lo, (m + h) * g - 1) {
                if ok(p12, p34) {
                    full += p8_d(t2(p12, 0), t2(p34, e), t4(p12, p34, d));
                }
            }
        }
        for p12 in pairs((h - 1) * g, top) {
            for p34 in pairs(lo, (m + h) * g - 1) {
                if ok(p12, p34) {
                    full += p8_d(t2(p12, 0), t2(p34, d), t4(p12, p34, e));
                }
            }
        }
        let hi_h = (m - h + 2) * g - 1;
        for p12 in pairs(0, hi_h) {
            for p34 in pairs((k - h) * g, hi_h) {
                if ok(p12, p34) {
                    full += p8_d(t2(p12, 0), t2(p34, (h - k) * g), t4(p12, p34, -e));
                }
            }
        }
    }
    halved(full, half)
}

fn p9<C: Count>(c: &Ctx, k: i64) -> Ratio<C> {
    let (g, m, top) = (c.g, c.m, c.top());
    let ok = |i1: i64, i2: i64, i3: i64, i4: i64| {
        c.ne(i1, i2) && i1 != i3 && c.ne(i1, i4) && c.ne(i2, i3) && i2 != i4 && c.ne(i3, i4)
    };
    let t2 = |a: i64, b: i64, d: i64| -> C { c.t(&[a + d, b + d]) };
    let (mut full, mut half) = (C::zero(), C::zero());
    if k == 1 {
        for (i1, i3) in pairs(0, top) {
            for (i2, i4) in pairs(0, top) {
                if ok(i1, i2, i3, i4) {
                    let o = P9Overlaps {
                        t12: c.t(&[i1, i2]),
                        t23: c.t(&[i2, i3]),
                        t34: c.t(&[i3, i4]),
                        t14: c.t(&[i1, i4]),
                        t123: c.t(&[i1, i2, i3]),
                        t124: c.t(&[i1, i2, i4]),
                        t134: c.t(&[i1, i3, i4]),
                        t234: c.t(&[i2, i3, i4]),
                        t1234: c.t(&[i1, i2, i3, i4]),
                    };
                    half += p9_a(&o);
                }
            }
        }
        return halved(full, half);
    }
    let d = (1 - k) * g;
    let lo = (k - 1) * g;
    let hi_low = (m - k + 2) * g - 1;
    let b_term = |i1: i64, i2: i64, i3: i64, i4: i64, sh: i64| -> C {
        p9_b(
            c.t(&[i1, i2]),
            c.t(&[i2, i3]),
            c.t(&[i3, i4]),
            c.t(&[i1, i2, i3]),
            c.t(&[i2, i3, i4]),
            c.t(&[i1, i2, i3, i4]),
            t2(i1, i4, sh),
        )
    };
    for (i1, i4) in pairs(lo, top) {
        for i2 in r(0, top) {
            for i3 in r(0, top) {
                if ok(i1, i2, i3, i4) {
                    full += b_term(i1, i2, i3, i4, d);
                }
            }
        }
    }
    for (i1, i4) in pairs(0, hi_low) {
        for i2 in r(0, top) {
            for i3 in r(0, top) {
                if ok(i1, i2, i3, i4) {
                    full += b_term(i1, i2, i3, i4, -d);
                }
            }
        }
    }
    for (i1, i3) in pairs(lo, top) {
        for i2 in r(0, top) {
            for i4 in r(lo, (m + k) * g - 1) {
                if ok(i1, i2, i3, i4) {
                    full += p9_c(
                        c.t(&[i1, i2]),
                        c.t(&[i2, i3]),
                        c.t(&[i1, i2, i3]),
                        t2(i3, i4, d),
                        t2(i1, i4, d),
                        c.t(&[i1 + d, i3 + d, i4 + d]),
                    );
                }
            }
        }
    }
    for (i1, i4) in pairs(lo, top) {
        for i2 in r(lo, top) {
            for i3 in r(lo, top) {
                if ok(i1, i2, i3, i4) {
                    half += p9_d(
                        c.t(&[i1, i2]),
                        c.t(&[i3, i4]),
                        c.t(&[i1, i2, i3, i4]),
                        t2(i2, i3, d),
                        t2(i1, i4, d),
                        c.t(&[i1 + d, i2 + d, i3 + d, i4 + d]),
                    );
                }
            }
        }
    }
    let e_term = |i1: i64, i2: i64, i3: i64, i4: i64, d34: i64, d14: i64| -> C {
        p9_e(c.t(&[i1, i2]), c.t(&[i2, i3]), c.t(&[i1, i2, i3]), t2(i3, i4, d34), t2(i1, i4, d14))
    };
    let g_term = |i1: i64, i2: i64, i3: i64, i4: i64, d23: i64, d14: i64| -> C {
        p9_g(c.t(&[i1, i2]), c.t(&[i3, i4]), c.t(&[i1, i2, i3, i4]), t2(i2, i3, d23), t2(i1, i4, d14))
    };
    for h in 2..k {
        let (up, dn) = ((h - 1) * g, (1 - h) * g);
        let hi_h = (m - h + 2) * g - 1;
        for i1 in r(lo, top) {
            for i2 in r(0, top) {
                for i3 in r(up, top) {
                    for i4 in r(lo, (m + h) * g - 1) {
                        if ok(i1, i2, i3, i4) {
                            full += e_term(i1, i2, i3, i4, dn, d);
                        }
                    }
                }
            }
        }
        for i1 in r((k - h) * g, top) {
            for i2 in r(0, top) {
                for i3 in r(0, hi_h) {
                    for i4 in r((k - h) * g, hi_h) {
                        if ok(i1, i2, i3, i4) {
                            full += e_term(i1, i2, i3, i4, up, (h - k) * g);
                        }
                    }
                }
            }
        }
        for i1 in r(0, (m - k + h + 1) * g - 1) {
            for i2 in r(0, top) {
                for i3 in r(0, hi_low) {
                    for i4 in r((h - k) * g, hi_low) {
                        if ok(i1, i2, i3, i4) {
                            full += e_term(i1, i2, i3, i4, -d, (k - h) * g);
                        }
                    }
                }
            }
        }
        for (i1, i4) in pairs(lo, top) {
            for i2 in r(up, top) {
                for i3 in r(up, top) {
                    if ok(i1, i2, i3, i4) {
                        full += g_term(i1, i2, i3, i4, dn, d);
                    }
                }
            }
        }
        for (i1, i4) in pairs((k - h) * g, top) {
            for i2 in r(0, hi_h) {
                for i3 in r(0, hi_h) {
                    if ok(i1, i2, i3, i4) {
                        full += g_term(i1, i2, i3, i4, up, (h - k) * g);
                    }
                }
            }
        }
        for (i1, i4) in pairs(0, (m - k + h + 1) * g - 1) {
            for i2 in r(0, hi_low) {
                for i3 in r(0, hi_low) {
                    if ok(i1, i2, i3, i4) {
                        full += g_term(i1, i2, i3, i4, -d, (k - h) * g);
                    }
                }
            }
        }
    }
    for h in 2..k - 1 {
        for w in h + 1..k {
            let (dh, dw) = ((1 - h) * g, (1 - w) * g);
            for i1 in r(lo, top) {
                for i2 in r((h - 1) * g, top) {
                    for i3 in r((w - 1) * g, (m + h) * g - 1) {
                        for i4 in r(lo, (m + w) * g - 1) {
                            if ok(i1, i2, i3, i4) {
                                full += p9_i(c.t(&[i1, i2]), t2(i2, i3, dh), t2(i3, i4, dw), t2(i1, i4, d));
                            }
                        }
                    }
                }
            }
            for i1 in r(lo, top) {
                for i2 in r((w - 1) * g, top) {
                    for i3 in r((w - 1) * g, (m + h) * g - 1) {
                        for i4 in r(lo, (m + h) * g - 1) {
                            if ok(i1, i2, i3, i4) {
                                full += p9_i(c.t(&[i1, i2]), t2(i2, i3, dw), t2(i3, i4, dh), t2(i1, i4, d));
                            }
                        }
                    }
                }
            }
            for i1 in r((w - 1) * g, top) {
                for i2 in r((h - 1) * g, top) {
                    for i3 in r(lo, (m + h) * g - 1) {
                        for i4 in r(lo, (m + w) * g - 1) {
                            if ok(i1, i2, i3, i4) {
                                full += p9_i(c.t(&[i1, i2]), t2(i2, i3, dh), t2(i3, i4, d), t2(i1, i4, dw));
                            }
                        }
                    }
                }
            }
        }
    }
    halved(full, half)
}

/// `F^k_{Pℓ,1}`: instances whose leftmost VN lies in the first replica and
/// which span `k` replicas.
pub fn pattern_span_count<C: Count>(pattern: PatternId, k: usize, t: &OverlapParams) -> Result<Ratio<C>> {
    let chi = pattern.chi(t.m());
    if k == 0 || k > chi {
        return Err(Error::SpanOutOfRange { pattern: pattern.get(), k, max: chi });
    }
    let c = Ctx::new(t);
    let k = k as i64;
    Ok(match pattern.get() {
        1 => p1(&c, k),
        2 => p2(&c, k),
        3 => p3(&c, k),
        4 => p4(&c, k),
        5 => p5(&c, k),
        6 => p6(&c, k),
        7 => p7(&c, k),
        8 => p8(&c, k),
        _ => p9(&c, k),
    })
}

/// Every `F^k_{Pℓ,1}` for `k = 1..=χ`.
pub fn pattern_span_counts<C: Count>(pattern: PatternId, t: &OverlapParams) -> Vec<Ratio<C>> {
    (1..=pattern.chi(t.m())).map(|k| pattern_span_count(pattern, k, t).expect("span within range")).collect()
}

/// `F_{Pℓ} = Σ_k (L-k+1) F^k_{Pℓ,1}`.
pub fn pattern_total<C: Count>(pattern: PatternId, t: &OverlapParams, params: &CodeParams) -> Result<Ratio<C>> {
    let chi = pattern.chi(params.m);
    if params.l < chi {
        return Err(Error::BelowThreshold { pattern: pattern.get(), l: params.l, required: chi });
    }
    Ok(extrapolate(&pattern_span_counts(pattern, t), params.l))
}

pub(crate) fn extrapolate<C: Count>(per_span: &[Ratio<C>], l: usize) -> Ratio<C> {
    per_span.iter().enumerate().fold(Ratio::from_integer(C::zero()), |acc, (idx, f)| acc + f * C::of((l - idx) as i64))
}
