//! Helpers around [`BigRational`]: construction, parsing, the `"p/q"` string
//! form used in JSON, and a few exact integer routines (factorials, Gamma at
//! half-integers).

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Parses `"p/q"`, `"p"`, or a plain decimal such as `"-0.25"`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let t = s.trim();
    let err = || Error::Parse(s.to_string());
    if let Some((p, q)) = t.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| err())?;
        let q: BigInt = q.trim().parse().map_err(|_| err())?;
        if q.is_zero() {
            return Err(Error::DivisionByZero);
        }
        return Ok(BigRational::new(p, q));
    }
    let (mantissa, exp10) = match t.find(['e', 'E']) {
        Some(pos) => (&t[..pos], t[pos + 1..].parse::<i64>().map_err(|_| err())?),
        None => (t, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (whole, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if whole.is_empty() && frac.is_empty() {
        return Err(err());
    }
    if !whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(err());
    }
    let joined = format!("{whole}{frac}");
    let mut value = BigRational::from_integer(joined.parse::<BigInt>().map_err(|_| err())?);
    let shift = exp10 - frac.len() as i64;
    let ten = BigRational::from_integer(BigInt::from(10));
    if shift >= 0 {
        value *= num_traits::pow(ten, shift as usize);
    } else {
        value /= num_traits::pow(ten, (-shift) as usize);
    }
    Ok(if neg { -value } else { value })
}

/// `"p/q"` rendering; integers render without a denominator.
pub fn to_string(r: &BigRational) -> String {
    r.to_string()
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

pub fn pow2(e: i64) -> BigRational {
    let p = BigInt::one() << e.unsigned_abs();
    if e >= 0 {
        BigRational::from_integer(p)
    } else {
        BigRational::new(BigInt::one(), p)
    }
}

/// `10^e` for any integer exponent.
pub fn pow10(e: i64) -> BigRational {
    let p = BigRational::from_integer(BigInt::from(biguint_pow10(e.unsigned_abs() as u32)));
    if e >= 0 {
        p
    } else {
        p.recip()
    }
}

/// Γ(m + 1/2) / √π = (2m)! / (4^m m!) for m ≥ 0, and the reflected value
/// (−4)^m m! / (2m)! for m < 0.
pub fn gamma_half_integer_over_sqrt_pi(m: i64) -> BigRational {
    if m >= 0 {
        let m = m as u64;
        BigRational::new(factorial(2 * m), (BigInt::one() << (2 * m)) * factorial(m))
    } else {
        let k = m.unsigned_abs();
        let sign = if k.is_multiple_of(2) { 1 } else { -1 };
        BigRational::new(
            BigInt::from(sign) * (BigInt::one() << (2 * k)) * factorial(k),
            factorial(2 * k),
        )
    }
}

/// Exact rational square root, if there is one.
pub fn sqrt_exact(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().magnitude();
    let d = r.denom().magnitude();
    let sn = n.sqrt();
    let sd = d.sqrt();
    if &(&sn * &sn) == n && &(&sd * &sd) == d {
        Some(BigRational::new(BigInt::from(sn), BigInt::from(sd)))
    } else {
        None
    }
}

pub fn is_integer(r: &BigRational) -> bool {
    r.denom().is_one()
}

pub fn magnitude_bits(n: &BigInt) -> u64 {
    n.magnitude().bits()
}

pub(crate) fn biguint_pow10(k: u32) -> BigUint {
    num_traits::pow(BigUint::from(10u32), k as usize)
}

/// Serde adapter storing a rational as its `"p/q"` string.
pub mod ratio_str {
    use num_rational::BigRational;
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let s = String::deserialize(d)?;
        super::parse_rational(&s).map_err(D::Error::custom)
    }

    pub mod option {
        use num_rational::BigRational;
        use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

        pub fn serialize<S: Serializer>(r: &Option<BigRational>, s: S) -> Result<S::Ok, S::Error> {
            match r {
                Some(r) => s.serialize_some(&r.to_string()),
                None => s.serialize_none(),
            }
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigRational>, D::Error> {
            Option::<String>::deserialize(d)?
                .map(|s| super::super::parse_rational(&s).map_err(D::Error::custom))
                .transpose()
        }
    }
}
