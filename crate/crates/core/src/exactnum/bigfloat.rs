//! Binary floating point with a working precision stated in decimal digits.
//!
//! A value is `mantissa · 2^exponent` with `|mantissa| < 2^bits`, where `bits`
//! is the binary width of the requested decimal precision. Every primitive
//! operation is computed exactly on integers and rounded once, to nearest with
//! ties to even, so results are correctly rounded at the working precision.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::rational::biguint_pow10;
use crate::error::{Error, Result};

const LOG2_10: f64 = std::f64::consts::LOG2_10;

/// Working precision in significant decimal digits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Precision(u32);

impl Precision {
    pub const DEFAULT: Precision = Precision(200);

    pub fn new(digits: u32) -> Self {
        Precision(digits.max(1))
    }

    pub fn digits(self) -> u32 {
        self.0
    }

    pub fn bits(self) -> u64 {
        (self.0 as f64 * LOG2_10).ceil() as u64 + 1
    }

    pub fn plus(self, extra: u32) -> Self {
        Precision(self.0 + extra)
    }
}

impl Default for Precision {
    fn default() -> Self {
        Self::DEFAULT
    }
}

impl fmt::Display for Precision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Clone, Debug)]
pub struct BigFloat {
    mantissa: BigInt,
    exponent: i64,
    precision: Precision,
}

/// Rounds `num · 2^exp` to `bits` significant bits.
fn round_integer(num: BigInt, exp: i64, bits: u64) -> (BigInt, i64) {
    if num.is_zero() {
        return (num, 0);
    }
    let (sign, mag) = num.into_parts();
    let len = mag.bits();
    if len <= bits {
        return (BigInt::from_biguint(sign, mag), exp);
    }
    let shift = len - bits;
    let mut q: BigUint = &mag >> shift;
    let rem = &mag - (&q << shift);
    let half = BigUint::one() << (shift - 1);
    match rem.cmp(&half) {
        Ordering::Greater => q += 1u32,
        Ordering::Equal if q.is_odd() => q += 1u32,
        _ => {}
    }
    let mut e = exp + shift as i64;
    if q.bits() > bits {
        q >>= 1;
        e += 1;
    }
    (BigInt::from_biguint(sign, q), e)
}

impl BigFloat {
    fn from_rounded(num: BigInt, exp: i64, precision: Precision) -> Self {
        let (mantissa, exponent) = round_integer(num, exp, precision.bits());
        BigFloat {
            mantissa,
            exponent,
            precision,
        }
    }

    /// Correctly rounded `num / den · 2^exp`.
    fn from_ratio(num: &BigInt, den: &BigInt, exp: i64, precision: Precision) -> Self {
        assert!(!den.is_zero(), "BigFloat::from_ratio with zero denominator");
        if num.is_zero() {
            return Self::zero(precision);
        }
        let (num, den) = if den.is_negative() {
            (-num, -den)
        } else {
            (num.clone(), den.clone())
        };
        let target = precision.bits() as i64 + 2;
        let s = target + den.bits() as i64 - num.bits() as i64;
        let (n, d) = if s >= 0 {
            (num << s as u64, den)
        } else {
            (num, den << (-s) as u64)
        };
        let (q, r) = n.div_rem(&d);
        let sticky = if r.is_zero() { 0 } else { 1 };
        // q and r share the sign of n; fold the sticky bit into the magnitude
        let q2: BigInt = (Signed::abs(&q) << 1u32) + sticky;
        let q2 = if n.is_negative() { -q2 } else { q2 };
        Self::from_rounded(q2, exp - s - 1, precision)
    }

    pub fn zero(precision: Precision) -> Self {
        BigFloat {
            mantissa: BigInt::zero(),
            exponent: 0,
            precision,
        }
    }

    pub fn one(precision: Precision) -> Self {
        Self::from_i64(1, precision)
    }

    pub fn from_i64(v: i64, precision: Precision) -> Self {
        Self::from_rounded(BigInt::from(v), 0, precision)
    }

    pub fn from_bigint(v: &BigInt, precision: Precision) -> Self {
        Self::from_rounded(v.clone(), 0, precision)
    }

    pub fn from_rational(r: &BigRational, precision: Precision) -> Self {
        Self::from_ratio(r.numer(), r.denom(), 0, precision)
    }

    /// Parses a decimal literal (`"2.449…"`, `"-1e-30"`, `"p/q"`) and rounds it.
    pub fn parse(s: &str, precision: Precision) -> Result<Self> {
        let r = super::rational::parse_rational(s)?;
        Ok(Self::from_rational(&r, precision))
    }

    pub fn precision(&self) -> Precision {
        self.precision
    }

    /// Rounds to a new working precision.
    pub fn with_precision(&self, precision: Precision) -> Self {
        Self::from_rounded(self.mantissa.clone(), self.exponent, precision)
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.is_negative()
    }

    pub fn signum(&self) -> i32 {
        match self.mantissa.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn abs(&self) -> Self {
        BigFloat {
            mantissa: self.mantissa.abs(),
            ..self.clone()
        }
    }

    /// The exact value as a rational.
    pub fn to_rational(&self) -> BigRational {
        let m = BigRational::from_integer(self.mantissa.clone());
        m * super::rational::pow2(self.exponent)
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let len = self.mantissa.bits();
        let (m, e) = if len > 62 {
            (&self.mantissa >> (len - 62), self.exponent + (len - 62) as i64)
        } else {
            (self.mantissa.clone(), self.exponent)
        };
        let m = m.to_f64().unwrap_or(0.0);
        // split the scaling so intermediate powers stay finite
        let e = e.clamp(-3000, 3000) as i32;
        let half = e / 2;
        m * 2f64.powi(half) * 2f64.powi(e - half)
    }

    /// Approximate base-2 logarithm of |x|; `None` for zero.
    fn top_bit(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.exponent + self.mantissa.bits() as i64)
        }
    }

    /// Approximate log10 |x|, good to a few units in the last place of an f64.
    pub fn log10_abs(&self) -> Option<f64> {
        let top = self.top_bit()?;
        let len = self.mantissa.bits();
        let lead = if len > 62 {
            (self.mantissa.magnitude() >> (len - 62)).to_f64().unwrap_or(1.0) / 2f64.powi(62)
        } else {
            self.mantissa.magnitude().to_f64().unwrap_or(1.0) / 2f64.powi(len as i32)
        };
        Some(lead.log10() + top as f64 * std::f64::consts::LOG10_2)
    }

    pub fn recip(&self) -> Result<Self> {
        Self::one(self.precision).checked_div(self)
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let p = self.precision.min(rhs.precision);
        Ok(Self::from_ratio(
            &self.mantissa,
            &rhs.mantissa,
            self.exponent - rhs.exponent,
            p,
        ))
    }

    pub fn sqrt(&self) -> Result<Self> {
        if self.is_negative() {
            return Err(crate::error::domain(
                "BigFloat::sqrt",
                "negative argument",
            ));
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        let bits = self.precision.bits() as i64;
        let mut s = 2 * (bits + 2) - self.mantissa.bits() as i64;
        if (self.exponent - s).rem_euclid(2) != 0 {
            s += 1;
        }
        let m = self.mantissa.magnitude();
        let big = if s >= 0 { m << s as u64 } else { m >> (-s) as u64 };
        let lost = s < 0 && !(m & ((BigUint::one() << (-s) as u64) - 1u32)).is_zero();
        let r = big.sqrt();
        let sticky = lost || &r * &r != big;
        let n = BigInt::from((r << 1u32) + if sticky { 1u32 } else { 0u32 });
        Ok(Self::from_rounded(
            n,
            (self.exponent - s) / 2 - 1,
            self.precision,
        ))
    }

    pub fn powi(&self, n: i64) -> Result<Self> {
        if n < 0 {
            return self.powi(-n)?.recip();
        }
        // exact power, single rounding
        let mant = num_traits::pow(self.mantissa.clone(), n as usize);
        Ok(Self::from_rounded(mant, self.exponent * n, self.precision))
    }

    pub fn pi(precision: Precision) -> Self {
        let guard = 48u64;
        let b = precision.bits() + guard;
        let one = BigInt::one() << b;
        let atan_inv = |x: u32| -> BigInt {
            let x2 = BigInt::from(x * x);
            let mut term = &one / x;
            let mut sum = BigInt::zero();
            let mut k = 0u64;
            loop {
                let t = &term / (2 * k + 1);
                if t.is_zero() {
                    break;
                }
                if k.is_multiple_of(2) {
                    sum += t;
                } else {
                    sum -= t;
                }
                term /= &x2;
                k += 1;
            }
            sum
        };
        let pi_fixed = atan_inv(5) * 16 - atan_inv(239) * 4;
        Self::from_rounded(pi_fixed, -(b as i64), precision)
    }

    pub fn sqrt_of(n: i64, precision: Precision) -> Self {
        Self::from_i64(n, precision)
            .sqrt()
            .expect("square root of a non-negative integer")
    }

    pub fn sqrt2(precision: Precision) -> Self {
        Self::sqrt_of(2, precision)
    }

    pub fn sqrt3(precision: Precision) -> Self {
        Self::sqrt_of(3, precision)
    }

    pub fn sqrt6(precision: Precision) -> Self {
        Self::sqrt_of(6, precision)
    }

    /// Decimal digits of |x| rounded to `digits` significant places, and the
    /// decimal exponent of the leading digit.
    pub fn decimal_digits(&self, digits: u32) -> (bool, String, i64) {
        let digits = digits.max(1);
        if self.is_zero() {
            return (false, "0".repeat(digits as usize), 0);
        }
        let exact = self.to_rational().abs();
        let mut k = self.log10_abs().unwrap().floor() as i64;
        let upper = biguint_pow10(digits);
        let lower = biguint_pow10(digits - 1);
        loop {
            let scaled = scale_pow10(&exact, digits as i64 - 1 - k);
            let n = round_half_even(&scaled);
            if n >= upper {
                k += 1;
            } else if n < lower {
                k -= 1;
            } else {
                return (self.is_negative(), n.to_string(), k);
            }
        }
    }

    /// Fixed-point rendering with exactly `decimals` digits after the point.
    pub fn to_fixed(&self, decimals: u32) -> String {
        let scaled = scale_pow10(&self.to_rational().abs(), decimals as i64);
        let n = round_half_even(&scaled).to_string();
        let neg = self.is_negative() && n.chars().any(|c| c != '0');
        let d = decimals as usize;
        let padded = if n.len() <= d {
            format!("{}{}", "0".repeat(d + 1 - n.len()), n)
        } else {
            n
        };
        let (whole, frac) = padded.split_at(padded.len() - d);
        let sign = if neg { "-" } else { "" };
        if d == 0 {
            format!("{sign}{whole}")
        } else {
            format!("{sign}{whole}.{frac}")
        }
    }

    /// Rendering with `digits` significant digits; positional for moderate
    /// exponents, scientific otherwise.
    pub fn to_string_digits(&self, digits: u32) -> String {
        let (neg, ds, k) = self.decimal_digits(digits);
        let sign = if neg { "-" } else { "" };
        if self.is_zero() {
            return "0".to_string();
        }
        if (-6..21).contains(&k) {
            if k >= 0 {
                let k = k as usize;
                if ds.len() > k + 1 {
                    format!("{sign}{}.{}", &ds[..=k], &ds[k + 1..])
                } else {
                    format!("{sign}{}{}", ds, "0".repeat(k + 1 - ds.len()))
                }
            } else {
                format!("{sign}0.{}{}", "0".repeat((-k - 1) as usize), ds)
            }
        } else {
            let (head, tail) = ds.split_at(1);
            if tail.is_empty() {
                format!("{sign}{head}e{k}")
            } else {
                format!("{sign}{head}.{tail}e{k}")
            }
        }
    }
}

fn scale_pow10(r: &BigRational, k: i64) -> BigRational {
    let p = BigRational::from_integer(BigInt::from(biguint_pow10(k.unsigned_abs() as u32)));
    if k >= 0 {
        r * p
    } else {
        r / p
    }
}

fn round_half_even(r: &BigRational) -> BigUint {
    let (q, rem) = r.numer().div_rem(r.denom());
    let twice: BigInt = Signed::abs(&rem) * 2;
    let q = q.magnitude().clone();
    match twice.cmp(r.denom()) {
        Ordering::Greater => q + 1u32,
        Ordering::Equal if q.is_odd() => q + 1u32,
        _ => q,
    }
}

impl PartialEq for BigFloat {
    fn eq(&self, other: &Self) -> bool {
        self.cmp_value(other) == Ordering::Equal
    }
}

impl PartialOrd for BigFloat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp_value(other))
    }
}

impl BigFloat {
    /// Exact comparison of the represented values.
    pub fn cmp_value(&self, other: &Self) -> Ordering {
        let (a, b) = (self.signum(), other.signum());
        if a != b {
            return a.cmp(&b);
        }
        if a == 0 {
            return Ordering::Equal;
        }
        let e = self.exponent.min(other.exponent);
        let x = &self.mantissa << (self.exponent - e) as u64;
        let y = &other.mantissa << (other.exponent - e) as u64;
        x.cmp(&y)
    }

    fn add_impl(&self, rhs: &Self, negate_rhs: bool) -> Self {
        let p = self.precision.min(rhs.precision);
        let rm = if negate_rhs {
            -&rhs.mantissa
        } else {
            rhs.mantissa.clone()
        };
        if rhs.is_zero() {
            return self.with_precision(p);
        }
        if self.is_zero() {
            return Self::from_rounded(rm, rhs.exponent, p);
        }
        let (hi_m, hi_e, lo_m, lo_e) = if self.top_bit() >= rhs.top_bit() {
            (self.mantissa.clone(), self.exponent, rm, rhs.exponent)
        } else {
            (rm, rhs.exponent, self.mantissa.clone(), self.exponent)
        };
        let gap = (hi_e + hi_m.bits() as i64) - (lo_e + lo_m.bits() as i64);
        let pad = p.bits() as i64 + 4;
        if gap > pad && lo_e < hi_e {
            // the smaller operand only affects rounding: replace it by a
            // sticky unit below the guard bits
            let sticky = if lo_m.is_negative() { -1 } else { 1 };
            let n = (hi_m << pad as u64) * 4 + sticky;
            return Self::from_rounded(n, hi_e - pad - 2, p);
        }
        let e = hi_e.min(lo_e);
        let n = (hi_m << (hi_e - e) as u64) + (lo_m << (lo_e - e) as u64);
        Self::from_rounded(n, e, p)
    }

    fn mul_impl(&self, rhs: &Self) -> Self {
        let p = self.precision.min(rhs.precision);
        Self::from_rounded(
            &self.mantissa * &rhs.mantissa,
            self.exponent + rhs.exponent,
            p,
        )
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, |$a:ident, $b:ident| $body:expr) => {
        impl $tr<&BigFloat> for &BigFloat {
            type Output = BigFloat;
            fn $method(self, rhs: &BigFloat) -> BigFloat {
                let ($a, $b) = (self, rhs);
                $body
            }
        }
        impl $tr<BigFloat> for BigFloat {
            type Output = BigFloat;
            fn $method(self, rhs: BigFloat) -> BigFloat {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&BigFloat> for BigFloat {
            type Output = BigFloat;
            fn $method(self, rhs: &BigFloat) -> BigFloat {
                (&self).$method(rhs)
            }
        }
        impl $tr<BigFloat> for &BigFloat {
            type Output = BigFloat;
            fn $method(self, rhs: BigFloat) -> BigFloat {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.add_impl(b, false));
forward_binop!(Sub, sub, |a, b| a.add_impl(b, true));
forward_binop!(Mul, mul, |a, b| a.mul_impl(b));
forward_binop!(Div, div, |a, b| a
    .checked_div(b)
    .expect("BigFloat division by zero"));

impl Neg for BigFloat {
    type Output = BigFloat;
    fn neg(self) -> BigFloat {
        BigFloat {
            mantissa: -self.mantissa,
            ..self
        }
    }
}

impl Neg for &BigFloat {
    type Output = BigFloat;
    fn neg(self) -> BigFloat {
        -self.clone()
    }
}

impl fmt::Display for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().map(|d| d as u32).unwrap_or(self.precision.digits());
        f.write_str(&self.to_string_digits(digits))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational::rat;

    const SQRT6_40: &str = "2.449489742783178098197284074705891391966";
    const PI_60: &str = "3.14159265358979323846264338327950288419716939937510582097494";

    fn p(d: u32) -> Precision {
        Precision::new(d)
    }

    #[test]
    fn pi_and_roots_match_reference_digits() {
        assert_eq!(BigFloat::pi(p(80)).to_string_digits(60), PI_60);
        assert_eq!(BigFloat::sqrt6(p(60)).to_string_digits(40), SQRT6_40);
        assert_eq!(BigFloat::sqrt2(p(30)).to_string_digits(20), "1.4142135623730950488");
    }

    #[test]
    fn radical_products_agree() {
        for d in [50, 100, 200] {
            let prod = BigFloat::sqrt2(p(d)) * BigFloat::sqrt3(p(d));
            let six = BigFloat::sqrt6(p(d));
            let rel = ((&prod - &six) / &six).abs();
            let tol = BigFloat::parse(&format!("1e-{}", d - 2), p(d)).unwrap();
            assert!(rel < tol, "P = {d}");
        }
    }

    #[test]
    fn rational_conversion_is_correctly_rounded() {
        let third = BigFloat::from_rational(&rat(1, 3), p(30));
        assert_eq!(third.to_string_digits(30), "0.333333333333333333333333333333");
        let x = BigFloat::from_rational(&rat(-1, 24), p(50));
        assert_eq!(x.to_string_digits(5), "-0.041667");
        assert_eq!(x.to_fixed(6), "-0.041667");
    }

    #[test]
    fn fixed_and_scientific_rendering() {
        let x = BigFloat::parse("-0.0000000000000000000000000000016", p(40)).unwrap();
        assert_eq!(x.to_fixed(30), "-0.000000000000000000000000000002");
        assert_eq!(x.to_string_digits(2), "-1.6e-30");
        let big = BigFloat::parse("123456", p(10)).unwrap();
        assert_eq!(big.to_string_digits(3), "123000");
        assert_eq!(BigFloat::parse("2.5", p(10)).unwrap().to_fixed(0), "2");
        assert_eq!(BigFloat::parse("3.5", p(10)).unwrap().to_fixed(0), "4");
    }

    #[test]
    fn addition_of_disparate_magnitudes_rounds() {
        let one = BigFloat::one(p(20));
        let tiny = BigFloat::parse("1e-100", p(20)).unwrap();
        assert_eq!(&one + &tiny, one);
        assert_eq!(&one - &tiny, one);
        assert!((&tiny - &one).is_negative());
    }

    #[test]
    fn division_and_powers() {
        let two = BigFloat::from_i64(2, p(40));
        let x = two.powi(-3).unwrap();
        assert_eq!(x.to_rational(), rat(1, 8));
        assert!(two.checked_div(&BigFloat::zero(p(40))).is_err());
        let seven = BigFloat::from_i64(7, p(40));
        let back = (&seven / &two) * &two;
        assert_eq!(back, seven);
    }

    #[test]
    fn single_operations_stay_within_one_ulp() {
        let prec = p(60);
        let a = rat(355, 113);
        let b = rat(-7, 9);
        let fa = BigFloat::from_rational(&a, prec);
        let fb = BigFloat::from_rational(&b, prec);
        let ulp = super::super::rational::pow2(-(prec.bits() as i64) + 2);
        for (got, exact) in [
            (&fa * &fb, &a * &b),
            (&fa + &fb, &a + &b),
            (&fa / &fb, &a / &b),
        ] {
            let exact_from_inputs = exact;
            let rel = ((got.to_rational() - &exact_from_inputs) / &exact_from_inputs).abs();
            assert!(rel < ulp);
        }
    }

    #[test]
    fn to_f64_round_trip() {
        let x = BigFloat::parse("-1234.5e-7", p(30)).unwrap();
        assert!((x.to_f64() + 1.2345e-4).abs() < 1e-18);
    }
}
