//! Exact reduced fractions.
//!
//! Values are stored as `i64 / i64` with a positive denominator and a
//! numerator/denominator gcd of 1. Every arithmetic step widens to `i128`,
//! reduces, and narrows back with a check, so overflow is reported as
//! [`Error::Overflow`] and never wraps.

use alloc::string::String;
use core::cmp::Ordering;
use core::fmt::{self, Write};
use core::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Rational {
    num: i64,
    den: i64,
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

impl Rational {
    pub const ZERO: Rational = Rational { num: 0, den: 1 };
    pub const ONE: Rational = Rational { num: 1, den: 1 };

    pub fn new(num: i64, den: i64) -> Result<Self> {
        Self::from_i128(num as i128, den as i128)
    }

    pub const fn from_integer(value: i64) -> Self {
        Rational { num: value, den: 1 }
    }

    /// Reduces `num / den` and narrows it to 64-bit parts.
    pub fn from_i128(num: i128, den: i128) -> Result<Self> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        let g = gcd(num.unsigned_abs(), den.unsigned_abs());
        // g >= 1 because den != 0. Dividing magnitudes first keeps i128::MIN safe.
        let negative = (num < 0) != (den < 0);
        let n = num.unsigned_abs() / g;
        let d = den.unsigned_abs() / g;
        let d = i64::try_from(d).map_err(|_| Error::Overflow { node: None })?;
        let n = if negative {
            let n = i128::try_from(n).map_err(|_| Error::Overflow { node: None })?;
            i64::try_from(-n).map_err(|_| Error::Overflow { node: None })?
        } else {
            i64::try_from(n).map_err(|_| Error::Overflow { node: None })?
        };
        Ok(Rational { num: n, den: d })
    }

    pub const fn numer(&self) -> i64 {
        self.num
    }

    pub const fn denom(&self) -> i64 {
        self.den
    }

    pub const fn is_integer(&self) -> bool {
        self.den == 1
    }

    pub fn checked_add(self, rhs: Self) -> Result<Self> {
        let num = self.num as i128 * rhs.den as i128 + rhs.num as i128 * self.den as i128;
        Self::from_i128(num, self.den as i128 * rhs.den as i128)
    }

    pub fn checked_sub(self, rhs: Self) -> Result<Self> {
        let num = self.num as i128 * rhs.den as i128 - rhs.num as i128 * self.den as i128;
        Self::from_i128(num, self.den as i128 * rhs.den as i128)
    }

    pub fn checked_mul(self, rhs: Self) -> Result<Self> {
        Self::from_i128(
            self.num as i128 * rhs.num as i128,
            self.den as i128 * rhs.den as i128,
        )
    }

    pub fn checked_div(self, rhs: Self) -> Result<Self> {
        if rhs.num == 0 {
            return Err(Error::DivisionByZero);
        }
        Self::from_i128(
            self.num as i128 * rhs.den as i128,
            self.den as i128 * rhs.num as i128,
        )
    }

    pub fn recip(self) -> Result<Self> {
        Self::ONE.checked_div(self)
    }

    /// Lossy conversion for display and plotting only.
    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// Decimal rendering with `places` fractional digits, rounding half to even.
    ///
    /// Computed from the exact fraction, so e.g. `1/8` at two places is
    /// `"0.12"` and `3/8` is `"0.38"`.
    pub fn to_decimal_string(self, places: u32) -> String {
        let scale = 10u128.pow(places);
        let mag = self.num.unsigned_abs() as u128 * scale;
        let den = self.den as u128;
        let mut q = mag / den;
        let r = mag % den;
        match (2 * r).cmp(&den) {
            Ordering::Greater => q += 1,
            Ordering::Equal if q % 2 == 1 => q += 1,
            _ => {}
        }
        let mut out = String::new();
        if self.num < 0 && q != 0 {
            out.push('-');
        }
        let int_part = q / scale;
        let frac_part = q % scale;
        let _ = write!(out, "{int_part}");
        if places > 0 {
            let _ = write!(out, ".{:0width$}", frac_part, width = places as usize);
        }
        out
    }
}

impl Default for Rational {
    fn default() -> Self {
        Self::ZERO
    }
}

impl From<i64> for Rational {
    fn from(value: i64) -> Self {
        Self::from_integer(value)
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        // Denominators are positive, so cross-multiplying preserves order.
        (self.num as i128 * other.den as i128).cmp(&(other.num as i128 * self.den as i128))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Renders `p/q`, or just `p` when the denominator is 1.
impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRationalError;

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("expected a rational of the form p or p/q with q != 0")
    }
}

impl core::error::Error for ParseRationalError {}

impl FromStr for Rational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> core::result::Result<Self, Self::Err> {
        let s = s.trim();
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n: i64 = n.parse().map_err(|_| ParseRationalError)?;
        let d: i64 = d.parse().map_err(|_| ParseRationalError)?;
        Rational::new(n, d).map_err(|_| ParseRationalError)
    }
}
