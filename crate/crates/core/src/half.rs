use core::fmt;
use core::str::FromStr;

use crate::Rational;

/// A number in `Z/2`, stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfInt(i64);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);
    pub const HALF: HalfInt = HalfInt(1);
    pub const ONE: HalfInt = HalfInt(2);

    pub const fn from_twice(twice: i64) -> Self {
        HalfInt(twice)
    }

    pub const fn from_int(v: i64) -> Self {
        HalfInt(2 * v)
    }

    pub const fn twice(self) -> i64 {
        self.0
    }

    pub const fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    pub const fn abs(self) -> Self {
        HalfInt(self.0.abs())
    }

    pub fn to_f64(self) -> f64 {
        self.0 as f64 / 2.0
    }

    pub fn to_rational(self) -> Rational {
        Rational::new(self.0 as i128, 2)
    }

    /// `n/2 + self` when that is a non-negative integer.
    pub fn offset_half(self, n: usize) -> Option<usize> {
        let twice = n as i64 + self.0;
        (twice >= 0 && twice % 2 == 0).then_some((twice / 2) as usize)
    }
}

impl core::ops::Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt(-self.0)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("not a half-integer: expected forms like 0, -1, 1/2, -0.5")]
pub struct ParseHalfIntError;

impl FromStr for HalfInt {
    type Err = ParseHalfIntError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if let Some(num) = s.strip_suffix("/2") {
            let v: i64 = num.parse().map_err(|_| ParseHalfIntError)?;
            return Ok(HalfInt(v));
        }
        if let Some((int, frac)) = s.split_once('.') {
            let neg = int.starts_with('-');
            let whole: i64 = if int == "-" || int.is_empty() { 0 } else { int.parse().map_err(|_| ParseHalfIntError)? };
            let half = match frac.trim_end_matches('0') {
                "" => 0,
                "5" => 1,
                _ => return Err(ParseHalfIntError),
            };
            let twice = 2 * whole.abs() + half;
            return Ok(HalfInt(if neg { -twice } else { twice }));
        }
        s.parse::<i64>().map(HalfInt::from_int).map_err(|_| ParseHalfIntError)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        for (text, twice) in [("0", 0), ("1", 2), ("-1", -2), ("1/2", 1), ("-1/2", -1), ("0.5", 1), ("-0.5", -1), ("1.0", 2)] {
            assert_eq!(text.parse::<HalfInt>().unwrap().twice(), twice, "{text}");
        }
        assert!("0.25".parse::<HalfInt>().is_err());
        assert!("x".parse::<HalfInt>().is_err());
        assert_eq!(HalfInt::from_twice(-1).to_string(), "-1/2");
        assert_eq!(HalfInt::ONE.to_string(), "1");
    }

    #[test]
    fn offsets() {
        assert_eq!(HalfInt::HALF.offset_half(21), Some(11));
        assert_eq!((-HalfInt::HALF).offset_half(21), Some(10));
        assert_eq!(HalfInt::HALF.offset_half(20), None);
        assert_eq!(HalfInt::ONE.offset_half(20), Some(11));
    }
}
