//! Instance counts for each replica layout of each pattern.
//!
//! Arguments follow the printed order of the overlap parameters. A `t` prefix
//! marks overlaps in the reference replica, `s`, `u` and `w` mark overlaps
//! shifted into other replicas.

use std::fmt;
use std::str::FromStr;

use crate::census::constants::PatternId;
use crate::error::{Error, Result};
use crate::num::{binomial, positive_part as pp, Count};

fn one<C: Count>() -> C {
    C::one()
}

fn two<C: Count>() -> C {
    C::one() + C::one()
}

fn three<C: Count>() -> C {
    two::<C>() + C::one()
}

pub fn p1_a<C: Count>(t12: C) -> C {
    binomial(t12, 2)
}

pub fn p1_b<C: Count>(t12: C, s12: C) -> C {
    t12 * s12
}

pub fn p2_a<C: Count>(t12: C) -> C {
    binomial(t12, 3)
}

pub fn p2_b<C: Count>(t12: C, s12: C) -> C {
    binomial(t12, 2) * s12
}

pub fn p2_c<C: Count>(t12: C, s12: C, u12: C) -> C {
    t12 * s12 * u12
}

pub fn p3_a<C: Count>(t123: C) -> C {
    binomial(t123, 2)
}

pub fn p3_b<C: Count>(t123: C, s123: C) -> C {
    t123 * s123
}

pub fn p4_a<C: Count>(t12: C) -> C {
    binomial(t12, 4)
}

pub fn p4_b<C: Count>(t12: C, s12: C) -> C {
    binomial(t12, 3) * s12
}

pub fn p4_c<C: Count>(t12: C, s12: C) -> C {
    binomial(t12, 2) * binomial(s12, 2)
}

pub fn p4_d<C: Count>(t12: C, s12: C, u12: C) -> C {
    binomial(t12, 2) * s12 * u12
}

pub fn p4_e<C: Count>(t12: C, s12: C, u12: C, w12: C) -> C {
    t12 * s12 * u12 * w12
}

pub fn p5_a<C: Count>(t1234: C) -> C {
    binomial(t1234, 2)
}

pub fn p5_b<C: Count>(t1234: C, s1234: C) -> C {
    t1234 * s1234
}

pub fn p6_a<C: Count>(t12: C, t13: C, t123: C) -> C {
    t123 * pp(t123 - one()) * pp(t13 - two()) + t123 * (t12 - t123) * pp(t13 - one())
}

pub fn p6_b<C: Count>(t12: C, t13: C, t123: C, s123: C) -> C {
    (t123 * pp(t13 - one()) + (t12 - t123) * t13) * s123
}

pub fn p6_c<C: Count>(t12: C, t123: C, s13: C) -> C {
    t123 * pp(t12 - one()) * s13
}

pub fn p6_d<C: Count>(t12: C, s13: C, u123: C) -> C {
    t12 * s13 * u123
}

pub fn p7_a<C: Count>(t12: C, t13: C, t123: C) -> C {
    binomial(t123, 2) * binomial(pp(t13 - two()), 2)
        + t123 * (t12 - t123) * binomial(pp(t13 - one()), 2)
        + binomial(t12 - t123, 2) * binomial(t13, 2)
}

pub fn p7_b<C: Count>(t12: C, t13: C, t123: C, s13: C) -> C {
    (binomial(t123, 2) * pp(t13 - two()) + t123 * (t12 - t123) * pp(t13 - one()) + binomial(t12 - t123, 2) * t13) * s13
}

pub fn p7_c<C: Count>(t12: C, s13: C) -> C {
    binomial(t12, 2) * binomial(s13, 2)
}

pub fn p7_d<C: Count>(t12: C, t13: C, t123: C, s12: C, s13: C, s123: C) -> C {
    (t123 * pp(t13 - one()) + (t12 - t123) * t13) * (s123 * pp(s13 - one()) + (s12 - s123) * s13)
}

pub fn p7_e<C: Count>(t12: C, s13: C, u13: C) -> C {
    binomial(t12, 2) * s13 * u13
}

pub fn p7_g<C: Count>(t12: C, t13: C, t123: C, s12: C, u13: C) -> C {
    (t123 * pp(t13 - one()) + (t12 - t123) * t13) * s12 * u13
}

pub fn p7_i<C: Count>(t12: C, s12: C, u13: C, w13: C) -> C {
    t12 * s12 * u13 * w13
}

pub fn p8_a<C: Count>(t12: C, t34: C, t1234: C) -> C {
    t1234 * pp(t1234 - one()) * pp(t34 - two()) + t1234 * (t12 - t1234) * pp(t34 - one())
}

pub fn p8_b<C: Count>(t12: C, t34: C, t1234: C, s1234: C) -> C {
    (t1234 * pp(t34 - one()) + (t12 - t1234) * t34) * s1234
}

pub fn p8_c<C: Count>(t12: C, t1234: C, s34: C) -> C {
    t1234 * pp(t12 - one()) * s34
}

pub fn p8_d<C: Count>(t12: C, s34: C, u1234: C) -> C {
    t12 * s34 * u1234
}

/// Overlaps of one replica feeding the single-replica count of P9.
#[derive(Debug, Clone, Copy)]
pub struct P9Overlaps<C> {
    pub t12: C,
    pub t23: C,
    pub t34: C,
    pub t14: C,
    pub t123: C,
    pub t124: C,
    pub t134: C,
    pub t234: C,
    pub t1234: C,
}

pub fn p9_a1<C: Count>(o: &P9Overlaps<C>) -> C {
    let P9Overlaps { t23, t34, t14, t134, t234, t1234, .. } = *o;
    t1234 * pp(t1234 - one()) * pp(t134 - two()) * pp(t14 - three())
        + t1234 * pp(t1234 - one()) * (t34 - t134) * pp(t14 - two())
        + t1234 * (t234 - t1234) * pp(t134 - one()) * pp(t14 - two())
        + t1234 * (t234 - t1234) * pp(t34 - t134 - one()) * pp(t14 - one())
        + t1234 * (t23 - t234) * pp(t134 - one()) * pp(t14 - two())
        + t1234 * (t23 - t234) * (t34 - t134) * pp(t14 - one())
}

pub fn p9_a2<C: Count>(o: &P9Overlaps<C>) -> C {
    let P9Overlaps { t23, t34, t14, t123, t134, t234, t1234, .. } = *o;
    let x = t123 - t1234;
    x * t1234 * pp(t134 - one()) * pp(t14 - two())
        + x * t1234 * (t34 - t134) * pp(t14 - one())
        + x * (t234 - t1234) * t134 * pp(t14 - one())
        + x * (t234 - t1234) * pp(t34 - t134 - one()) * t14
        + x * pp(t23 - t234 - one()) * t134 * pp(t14 - one())
        + x * pp(t23 - t234 - one()) * (t34 - t134) * t14
}

pub fn p9_a3<C: Count>(o: &P9Overlaps<C>) -> C {
    let P9Overlaps { t23, t34, t14, t124, t134, t234, t1234, .. } = *o;
    let y = t124 - t1234;
    y * t1234 * pp(t134 - one()) * pp(t14 - three())
        + y * t1234 * (t34 - t134) * pp(t14 - two())
        + y * (t234 - t1234) * t134 * pp(t14 - two())
        + y * (t234 - t1234) * pp(t34 - t134 - one()) * pp(t14 - one())
        + y * (t23 - t234) * t134 * pp(t14 - two())
        + y * (t23 - t234) * (t34 - t134) * pp(t14 - one())
}

pub fn p9_a4<C: Count>(o: &P9Overlaps<C>) -> C {
    let P9Overlaps { t12, t23, t34, t14, t123, t124, t134, t234, t1234 } = *o;
    let w = t12 - t123 - t124 + t1234;
    w * t1234 * pp(t134 - one()) * pp(t14 - two())
        + w * t1234 * (t34 - t134) * pp(t14 - one())
        + w * (t234 - t1234) * t134 * pp(t14 - one())
        + w * (t234 - t1234) * pp(t34 - t134 - one()) * t14
        + w * (t23 - t234) * t134 * pp(t14 - one())
        + w * (t23 - t234) * (t34 - t134) * t14
}

pub fn p9_a<C: Count>(o: &P9Overlaps<C>) -> C {
    p9_a1(o) + p9_a2(o) + p9_a3(o) + p9_a4(o)
}

#[allow(clippy::too_many_arguments)]
pub fn p9_b<C: Count>(t12: C, t23: C, t34: C, t123: C, t234: C, t1234: C, s14: C) -> C {
    (t1234 * pp(t234 - one()) * pp(t34 - two())
        + t1234 * (t23 - t234) * pp(t34 - one())
        + (t123 - t1234) * t234 * pp(t34 - one())
        + (t123 - t1234) * pp(t23 - t234 - one()) * t34
        + (t12 - t123) * t234 * pp(t34 - one())
        + (t12 - t123) * (t23 - t234) * t34)
        * s14
}

pub fn p9_c<C: Count>(t12: C, t23: C, t123: C, s34: C, s14: C, s134: C) -> C {
    (t123 * pp(t23 - one()) + (t12 - t123) * t23) * (s134 * pp(s14 - one()) + (s34 - s134) * s14)
}

pub fn p9_d<C: Count>(t12: C, t34: C, t1234: C, s23: C, s14: C, s1234: C) -> C {
    (t1234 * pp(t34 - one()) + (t12 - t1234) * t34) * (s1234 * pp(s14 - one()) + (s23 - s1234) * s14)
}

pub fn p9_e<C: Count>(t12: C, t23: C, t123: C, s34: C, u14: C) -> C {
    (t123 * pp(t23 - one()) + (t12 - t123) * t23) * s34 * u14
}

pub fn p9_g<C: Count>(t12: C, t34: C, t1234: C, s23: C, u14: C) -> C {
    (t1234 * pp(t34 - one()) + (t12 - t1234) * t34) * s23 * u14
}

pub fn p9_i<C: Count>(t12: C, s23: C, u34: C, w14: C) -> C {
    t12 * s23 * u34 * w14
}

/// Case label within a pattern's lemma.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Case {
    A,
    /// One of the four parts of the P9 single-replica count.
    APart(u8),
    B,
    C,
    D,
    E,
    G,
    I,
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Case::A => write!(f, "A"),
            Case::APart(n) => write!(f, "A{n}"),
            Case::B => write!(f, "B"),
            Case::C => write!(f, "C"),
            Case::D => write!(f, "D"),
            Case::E => write!(f, "E"),
            Case::G => write!(f, "G"),
            Case::I => write!(f, "I"),
        }
    }
}

impl FromStr for Case {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "A" => Case::A,
            "A1" => Case::APart(1),
            "A2" => Case::APart(2),
            "A3" => Case::APart(3),
            "A4" => Case::APart(4),
            "B" => Case::B,
            "C" => Case::C,
            "D" => Case::D,
            "E" => Case::E,
            "G" => Case::G,
            "I" => Case::I,
            other => return Err(Error::UnknownCase { pattern: 0, case: other.to_string() }),
        })
    }
}

/// Evaluate a case formula by name with its printed argument list.
pub fn case_count<C: Count>(pattern: PatternId, case: Case, args: &[C]) -> Result<C> {
    let l = pattern.get();
    let arity = case_arity(l, case).ok_or_else(|| Error::UnknownCase { pattern: l, case: case.to_string() })?;
    if args.len() != arity {
        return Err(Error::CaseArity { pattern: l, case: case.to_string(), expected: arity, got: args.len() });
    }
    let a = args;
    let p9 = || P9Overlaps {
        t12: a[0],
        t23: a[1],
        t34: a[2],
        t14: a[3],
        t123: a[4],
        t124: a[5],
        t134: a[6],
        t234: a[7],
        t1234: a[8],
    };
    Ok(match (l, case) {
        (1, Case::A) => p1_a(a[0]),
        (1, Case::B) => p1_b(a[0], a[1]),
        (2, Case::A) => p2_a(a[0]),
        (2, Case::B) => p2_b(a[0], a[1]),
        (2, Case::C) => p2_c(a[0], a[1], a[2]),
        (3, Case::A) => p3_a(a[0]),
        (3, Case::B) => p3_b(a[0], a[1]),
        (4, Case::A) => p4_a(a[0]),
        (4, Case::B) => p4_b(a[0], a[1]),
        (4, Case::C) => p4_c(a[0], a[1]),
        (4, Case::D) => p4_d(a[0], a[1], a[2]),
        (4, Case::E) => p4_e(a[0], a[1], a[2], a[3]),
        (5, Case::A) => p5_a(a[0]),
        (5, Case::B) => p5_b(a[0], a[1]),
        (6, Case::A) => p6_a(a[0], a[1], a[2]),
        (6, Case::B) => p6_b(a[0], a[1], a[2], a[3]),
        (6, Case::C) => p6_c(a[0], a[1], a[2]),
        (6, Case::D) => p6_d(a[0], a[1], a[2]),
        (7, Case::A) => p7_a(a[0], a[1], a[2]),
        (7, Case::B) => p7_b(a[0], a[1], a[2], a[3]),
        (7, Case::C) => p7_c(a[0], a[1]),
        (7, Case::D) => p7_d(a[0], a[1], a[2], a[3], a[4], a[5]),
        (7, Case::E) => p7_e(a[0], a[1], a[2]),
        (7, Case::G) => p7_g(a[0], a[1], a[2], a[3], a[4]),
        (7, Case::I) => p7_i(a[0], a[1], a[2], a[3]),
        (8, Case::A) => p8_a(a[0], a[1], a[2]),
        (8, Case::B) => p8_b(a[0], a[1], a[2], a[3]),
        (8, Case::C) => p8_c(a[0], a[1], a[2]),
        (8, Case::D) => p8_d(a[0], a[1], a[2]),
        (9, Case::A) => p9_a(&p9()),
        (9, Case::APart(1)) => p9_a1(&p9()),
        (9, Case::APart(2)) => p9_a2(&p9()),
        (9, Case::APart(3)) => p9_a3(&p9()),
        (9, Case::APart(4)) => p9_a4(&p9()),
        (9, Case::B) => p9_b(a[0], a[1], a[2], a[3], a[4], a[5], a[6]),
        (9, Case::C) => p9_c(a[0], a[1], a[2], a[3], a[4], a[5]),
        (9, Case::D) => p9_d(a[0], a[1], a[2], a[3], a[4], a[5]),
        (9, Case::E) => p9_e(a[0], a[1], a[2], a[3], a[4]),
        (9, Case::G) => p9_g(a[0], a[1], a[2], a[3], a[4]),
        (9, Case::I) => p9_i(a[0], a[1], a[2], a[3]),
        _ => unreachable!("arity table and dispatch disagree"),
    })
}

fn case_arity(l: u8, case: Case) -> Option<usize> {
    Some(match (l, case) {
        (1 | 3 | 5, Case::A) | (2 | 4, Case::A) => 1,
        (1 | 3 | 5, Case::B) | (2 | 4, Case::B) | (4, Case::C) | (7, Case::C) => 2,
        (2, Case::C) | (4, Case::D) | (6..=8, Case::A) | (6 | 8, Case::C) | (6 | 8, Case::D) | (7, Case::E) => 3,
        (4, Case::E) | (6..=8, Case::B) | (7 | 9, Case::I) => 4,
        (7, Case::G) | (9, Case::E) | (9, Case::G) => 5,
        (7, Case::D) | (9, Case::C) | (9, Case::D) => 6,
        (9, Case::B) => 7,
        (9, Case::A) | (9, Case::APart(1..=4)) => 9,
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pid(l: u8) -> PatternId {
        PatternId::new(l).unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(case_count(pid(1), Case::A, &[2i64]).unwrap(), 1);
        assert_eq!(case_count(pid(1), Case::A, &[1i64]).unwrap(), 0);
        assert_eq!(case_count(pid(1), Case::B, &[3i64, 2]).unwrap(), 6);
        assert_eq!(case_count(pid(6), Case::A, &[2i64, 2, 1]).unwrap(), 1);
    }

    #[test]
    fn unknown_cases_are_errors() {
        assert!(matches!(case_count(pid(1), Case::C, &[1i64]), Err(Error::UnknownCase { .. })));
        assert!(matches!(case_count(pid(5), Case::E, &[1i64]), Err(Error::UnknownCase { .. })));
        assert!(matches!(case_count(pid(2), Case::B, &[1i64]), Err(Error::CaseArity { .. })));
        assert!("Q".parse::<Case>().is_err());
        assert_eq!("A3".parse::<Case>().unwrap(), Case::APart(3));
    }

    #[test]
    fn p9_parts_sum() {
        let args = [3i64, 3, 3, 3, 2, 2, 2, 2, 1];
        let whole = case_count(pid(9), Case::A, &args).unwrap();
        let parts: i64 = (1..=4).map(|n| case_count(pid(9), Case::APart(n), &args).unwrap()).sum();
        assert_eq!(whole, parts);
    }
}
