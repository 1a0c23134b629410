use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

/// Decimal digits after the point. 40 digits keeps accumulator rounding
/// orders of magnitude below every analytic tail bound at desk scale.
pub const SCALE_DIGITS: u32 = 40;

fn unit() -> BigInt {
    BigInt::from(10u32).pow(SCALE_DIGITS)
}

/// Fixed-point decimal: value = mantissa / 10^40. Multiplications round to
/// nearest, so each operation contributes at most half an ulp of error;
/// callers track operation counts to bound the total drift.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigFixed {
    mantissa: BigInt,
}

impl BigFixed {
    pub fn zero() -> Self {
        BigFixed { mantissa: BigInt::zero() }
    }

    pub fn one() -> Self {
        BigFixed { mantissa: unit() }
    }

    pub fn from_u64(v: u64) -> Self {
        BigFixed { mantissa: BigInt::from(v) * unit() }
    }

    /// Nearest fixed-point value to num/den (den > 0).
    pub fn from_ratio(num: &BigInt, den: &BigInt) -> Self {
        assert!(den.is_positive(), "denominator must be positive");
        BigFixed { mantissa: div_round_nearest(&(num * unit()), den) }
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    /// self * num/den, rounded to nearest (den > 0).
    pub fn mul_rat(&self, num: &BigInt, den: &BigInt) -> Self {
        assert!(den.is_positive(), "denominator must be positive");
        BigFixed { mantissa: div_round_nearest(&(&self.mantissa * num), den) }
    }

    pub fn add(&self, other: &Self) -> Self {
        BigFixed { mantissa: &self.mantissa + &other.mantissa }
    }

    pub fn sub(&self, other: &Self) -> Self {
        BigFixed { mantissa: &self.mantissa - &other.mantissa }
    }

    /// 1/self rounded to nearest; self must be nonzero.
    pub fn recip(&self) -> Self {
        assert!(!self.mantissa.is_zero(), "reciprocal of zero");
        let num = unit() * unit();
        BigFixed { mantissa: div_round_nearest(&num, &self.mantissa) }
    }

    pub fn to_f64(&self) -> f64 {
        // Split off the integer part so the fraction keeps full f64
        // precision even for large values.
        let u = unit();
        let (q, r) = self.mantissa.div_rem(&u);
        q.to_f64().unwrap_or(f64::NAN) + r.to_f64().unwrap_or(f64::NAN) / 1e40
    }

    /// Plain decimal string with trailing zeros trimmed (at least one
    /// fractional digit kept).
    pub fn to_decimal_string(&self) -> String {
        let u = unit();
        let neg = self.mantissa.is_negative();
        let abs = self.mantissa.abs();
        let (q, r) = abs.div_rem(&u);
        let mut frac = format!("{:0width$}", r, width = SCALE_DIGITS as usize);
        while frac.len() > 1 && frac.ends_with('0') {
            frac.pop();
        }
        format!("{}{}.{}", if neg { "-" } else { "" }, q, frac)
    }
}

impl PartialOrd for BigFixed {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BigFixed {
    fn cmp(&self, other: &Self) -> Ordering {
        self.mantissa.cmp(&other.mantissa)
    }
}

impl fmt::Display for BigFixed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal_string())
    }
}

/// Round-to-nearest integer division, ties away from zero; den > 0.
fn div_round_nearest(num: &BigInt, den: &BigInt) -> BigInt {
    let (q, r) = num.div_rem(den);
    let twice = r.abs() * 2;
    if twice >= *den {
        if num.is_negative() {
            q - 1
        } else {
            q + 1
        }
    } else {
        q
    }
}
