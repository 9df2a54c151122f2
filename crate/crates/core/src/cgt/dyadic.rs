use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// A rational number `numerator / 2^exponent`, kept in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DyadicRational {
    numerator: i64,
    exponent: u32,
}

impl DyadicRational {
    pub const ZERO: Self = Self { numerator: 0, exponent: 0 };

    pub fn new(numerator: i64, exponent: u32) -> Self {
        let mut value = Self { numerator, exponent };
        value.normalize();
        value
    }

    pub fn integer(n: i64) -> Self {
        Self { numerator: n, exponent: 0 }
    }

    fn normalize(&mut self) {
        if self.numerator == 0 {
            self.exponent = 0;
            return;
        }
        let shift = self.numerator.trailing_zeros().min(self.exponent);
        self.numerator >>= shift;
        self.exponent -= shift;
    }

    pub fn numerator(&self) -> i64 {
        self.numerator
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn is_integer(&self) -> bool {
        self.exponent == 0
    }

    pub fn as_integer(&self) -> Option<i64> {
        self.is_integer().then_some(self.numerator)
    }

    /// Numerator scaled to the given (larger or equal) exponent.
    fn scaled(&self, exponent: u32) -> i128 {
        i128::from(self.numerator) << (exponent - self.exponent)
    }

    pub fn floor(&self) -> i64 {
        self.numerator >> self.exponent
    }

    pub fn ceil(&self) -> i64 {
        -((-self.numerator) >> self.exponent)
    }

    /// The simplest dyadic strictly between the bounds; `None` means unbounded.
    ///
    /// Integers closest to zero win; otherwise the smallest denominator.
    pub fn simplest_between(lower: Option<Self>, upper: Option<Self>) -> Self {
        if let (Some(lo), Some(hi)) = (lower, upper) {
            assert!(lo < hi, "empty interval in simplest_between");
        }
        let lowest_int = lower.map(|lo| lo.floor() + 1);
        let highest_int = upper.map(|hi| hi.ceil() - 1);
        let int_exists = match (lowest_int, highest_int) {
            (Some(a), Some(b)) => a <= b,
            _ => true,
        };
        if int_exists {
            let n = match (lowest_int, highest_int) {
                (Some(a), _) if a > 0 => a,
                (_, Some(b)) if b < 0 => b,
                _ => 0,
            };
            return Self::integer(n);
        }
        let (lo, hi) = (lower.unwrap(), upper.unwrap());
        let mut exponent = 1;
        loop {
            let common = exponent.max(lo.exponent);
            let candidate = Self::new((lo.scaled(common) >> (common - exponent)) as i64 + 1, exponent);
            if candidate > lo && candidate < hi {
                return candidate;
            }
            exponent += 1;
        }
    }

    pub fn checked_add(self, other: Self) -> Self {
        let e = self.exponent.max(other.exponent);
        let sum = self.scaled(e) + other.scaled(e);
        Self::new(i64::try_from(sum).expect("dyadic overflow"), e)
    }

}

impl std::ops::Neg for DyadicRational {
    type Output = Self;

    fn neg(self) -> Self {
        Self { numerator: -self.numerator, exponent: self.exponent }
    }
}

impl PartialOrd for DyadicRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for DyadicRational {
    fn cmp(&self, other: &Self) -> Ordering {
        let e = self.exponent.max(other.exponent);
        self.scaled(e).cmp(&other.scaled(e))
    }
}

impl fmt::Display for DyadicRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponent == 0 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/{}", self.numerator, 1u128 << self.exponent)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(n: i64, e: u32) -> DyadicRational {
        DyadicRational::new(n, e)
    }

    #[test]
    fn normalizes() {
        assert_eq!(d(4, 2), DyadicRational::integer(1));
        assert_eq!(d(6, 2), d(3, 1));
        assert_eq!(d(0, 5), DyadicRational::ZERO);
        assert_eq!(d(-3, 1).to_string(), "-3/2");
    }

    #[test]
    fn floor_and_ceil() {
        assert_eq!(d(-3, 1).floor(), -2);
        assert_eq!(d(-3, 1).ceil(), -1);
        assert_eq!(d(5, 2).floor(), 1);
        assert_eq!(d(5, 2).ceil(), 2);
    }

    #[test]
    fn simplicity_rule() {
        let i = DyadicRational::integer;
        assert_eq!(DyadicRational::simplest_between(None, None), i(0));
        assert_eq!(DyadicRational::simplest_between(Some(i(0)), Some(i(1))), d(1, 1));
        assert_eq!(DyadicRational::simplest_between(Some(i(1)), None), i(2));
        assert_eq!(DyadicRational::simplest_between(None, Some(i(-2))), i(-3));
        assert_eq!(DyadicRational::simplest_between(Some(i(-1)), Some(i(3))), i(0));
        assert_eq!(DyadicRational::simplest_between(Some(d(1, 1)), Some(i(1))), d(3, 2));
        assert_eq!(DyadicRational::simplest_between(Some(d(-1, 1)), Some(d(-1, 2))), d(-3, 3));
        assert_eq!(DyadicRational::simplest_between(Some(d(1, 2)), Some(i(3))), i(1));
    }
}
