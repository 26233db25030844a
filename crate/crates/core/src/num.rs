//! Integer scalar abstraction shared by the counting modules.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{FromPrimitive, NumAssign, PrimInt, Signed, ToPrimitive};

/// Signed machine integer used for exact combinatorial counts.
pub trait Count:
    PrimInt + Signed + Integer + NumAssign + FromPrimitive + ToPrimitive + Hash + Debug + Display + Send + Sync + 'static
{
    fn of(x: i64) -> Self {
        Self::from_i64(x).expect("count does not fit the scalar type")
    }
}

impl<T> Count for T where
    T: PrimInt
        + Signed
        + Integer
        + NumAssign
        + FromPrimitive
        + ToPrimitive
        + Hash
        + Debug
        + Display
        + Send
        + Sync
        + 'static
{
}

/// `(x)^+ = max(x, 0)`.
pub fn positive_part<C: Count>(x: C) -> C {
    x.max(C::zero())
}

/// Binomial coefficient that vanishes when `n < k` or `n < 0`.
pub fn binomial<C: Count>(n: C, k: u32) -> C {
    let k_c = C::of(k as i64);
    if n < k_c || n < C::zero() {
        return C::zero();
    }
    let mut acc = C::one();
    for i in 0..k {
        let i = C::of(i as i64);
        acc = acc * (n - i) / (i + C::one());
    }
    acc
}

/// Round a rational to the nearest integer, halves away from zero.
pub fn round_ratio<C: Count>(x: &num_rational::Ratio<C>) -> C {
    x.round().to_integer()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positive_part_clamps() {
        assert_eq!(positive_part(-3i64), 0);
        assert_eq!(positive_part(0i64), 0);
        assert_eq!(positive_part(5i64), 5);
    }

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(2i64, 2), 1);
        assert_eq!(binomial(1i64, 2), 0);
        assert_eq!(binomial(-1i64, 2), 0);
        assert_eq!(binomial(7i64, 3), 35);
        assert_eq!(binomial(5i128, 0), 1);
        assert_eq!(binomial(0i32, 0), 1);
    }

    #[test]
    fn rounding_halves() {
        use num_rational::Ratio;
        assert_eq!(round_ratio(&Ratio::new(10339i64, 2)), 5170);
        assert_eq!(round_ratio(&Ratio::new(7i64, 1)), 7);
    }
}
