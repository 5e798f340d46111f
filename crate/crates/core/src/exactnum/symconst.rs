//! Closed-form constants of the shape
//!
//! ```text
//!     coeff · √2^rad2 · √3^rad3 · √π^piHalf / Γ(gammaArg)
//! ```
//!
//! A [`SymExpr`] allows arbitrary integer exponents and any rational Γ
//! argument; [`SymExpr::normalize`] reduces it to the canonical [`SymConst`],
//! where radical exponents are 0 or 1 and the Γ argument lies in (−1, 1] and is
//! neither an integer nor a half-integer. Canonical values compare equal
//! exactly when the fields agree.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::bigfloat::{BigFloat, Precision};
use super::rational::{int, is_integer, rat};
use crate::error::{Error, Result};

/// An unnormalized closed-form constant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymExpr {
    pub coeff: BigRational,
    pub rad2: i32,
    pub rad3: i32,
    pub pi_half: i32,
    /// Γ(gamma_arg) appears in the denominator.
    pub gamma_arg: Option<BigRational>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SymConst {
    #[serde(with = "super::rational::ratio_str")]
    coeff: BigRational,
    rad2: u8,
    rad3: u8,
    pi_half: i32,
    #[serde(with = "super::rational::ratio_str::option")]
    gamma_arg: Option<BigRational>,
}

impl SymExpr {
    pub fn rational(coeff: BigRational) -> Self {
        SymExpr {
            coeff,
            rad2: 0,
            rad3: 0,
            pi_half: 0,
            gamma_arg: None,
        }
    }

    pub fn with_rad2(mut self, e: i32) -> Self {
        self.rad2 += e;
        self
    }

    pub fn with_rad3(mut self, e: i32) -> Self {
        self.rad3 += e;
        self
    }

    /// Multiplies by √6^e.
    pub fn with_rad6(self, e: i32) -> Self {
        self.with_rad2(e).with_rad3(e)
    }

    pub fn with_pi_half(mut self, e: i32) -> Self {
        self.pi_half += e;
        self
    }

    /// Divides by Γ(arg). At most one Γ factor is supported.
    pub fn over_gamma(mut self, arg: BigRational) -> Self {
        assert!(self.gamma_arg.is_none(), "only one Gamma factor is supported");
        self.gamma_arg = Some(arg);
        self
    }

    pub fn normalize(&self) -> Result<SymConst> {
        symconst_normalize(self)
    }
}

/// Reduces a raw expression to canonical form.
pub fn symconst_normalize(raw: &SymExpr) -> Result<SymConst> {
    let mut coeff = raw.coeff.clone();
    let mut pi_half = raw.pi_half;

    let mut gamma_arg = None;
    if let Some(q0) = &raw.gamma_arg {
        if is_integer(q0) && !q0.is_positive() {
            return Err(Error::GammaPole(q0.clone()));
        }
        let one = BigRational::one();
        let mut q = q0.clone();
        // 1/Γ(q) = 1/((q−1)Γ(q−1))
        while q > one {
            q -= &one;
            coeff /= &q;
        }
        // 1/Γ(q) = q/Γ(q+1)
        while q <= -&one {
            coeff *= &q;
            q += &one;
        }
        if q == one {
            // Γ(1) = 1
        } else if q == rat(1, 2) {
            pi_half -= 1;
        } else if q == rat(-1, 2) {
            // Γ(−1/2) = −2√π
            coeff /= int(-2);
            pi_half -= 1;
        } else {
            gamma_arg = Some(q);
        }
    }

    if coeff.is_zero() {
        return Ok(SymConst::zero());
    }
    let (rad2, f2) = split_radical(raw.rad2, 2);
    let (rad3, f3) = split_radical(raw.rad3, 3);
    coeff = coeff * f2 * f3;

    Ok(SymConst {
        coeff,
        rad2,
        rad3,
        pi_half,
        gamma_arg,
    })
}

/// √p^e = p^k · √p^r with r ∈ {0, 1}.
fn split_radical(e: i32, p: i64) -> (u8, BigRational) {
    let k = e.div_euclid(2);
    let r = e.rem_euclid(2) as u8;
    let base = BigRational::from_integer(BigInt::from(p));
    let f = if k >= 0 {
        num_traits::pow(base, k as usize)
    } else {
        num_traits::pow(base.recip(), (-k) as usize)
    };
    (r, f)
}

impl SymConst {
    pub fn zero() -> Self {
        SymConst {
            coeff: BigRational::zero(),
            rad2: 0,
            rad3: 0,
            pi_half: 0,
            gamma_arg: None,
        }
    }

    pub fn from_rational(r: BigRational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        SymConst {
            coeff: r,
            rad2: 0,
            rad3: 0,
            pi_half: 0,
            gamma_arg: None,
        }
    }

    pub fn coeff(&self) -> &BigRational {
        &self.coeff
    }

    pub fn rad2(&self) -> u8 {
        self.rad2
    }

    pub fn rad3(&self) -> u8 {
        self.rad3
    }

    pub fn pi_half(&self) -> i32 {
        self.pi_half
    }

    pub fn gamma_arg(&self) -> Option<&BigRational> {
        self.gamma_arg.as_ref()
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn to_expr(&self) -> SymExpr {
        SymExpr {
            coeff: self.coeff.clone(),
            rad2: self.rad2 as i32,
            rad3: self.rad3 as i32,
            pi_half: self.pi_half,
            gamma_arg: self.gamma_arg.clone(),
        }
    }

    pub fn to_float(&self, precision: Precision) -> Result<BigFloat> {
        symconst_to_float(self, precision)
    }
}

/// Numerical value; constants with a residual quarter-integer Γ are refused.
pub fn symconst_to_float(c: &SymConst, precision: Precision) -> Result<BigFloat> {
    if let Some(q) = &c.gamma_arg {
        return Err(Error::SymbolicOnly(q.clone()));
    }
    let work = precision.plus(10);
    let mut x = BigFloat::from_rational(&c.coeff, work);
    match (c.rad2, c.rad3) {
        (1, 1) => x = x * BigFloat::sqrt6(work),
        (1, 0) => x = x * BigFloat::sqrt2(work),
        (0, 1) => x = x * BigFloat::sqrt3(work),
        _ => {}
    }
    if c.pi_half != 0 {
        let root_pi = BigFloat::pi(work).sqrt()?;
        x = x * root_pi.powi(c.pi_half as i64)?;
    }
    Ok(x.with_precision(precision))
}

impl fmt::Display for SymConst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut num = String::new();
        let mut den = String::new();
        let mut den_parts = 0;

        if self.coeff.is_negative() {
            f.write_str("-")?;
        }
        let p = self.coeff.numer().abs();
        let radical = match (self.rad2, self.rad3) {
            (1, 1) => "√6",
            (1, 0) => "√2",
            (0, 1) => "√3",
            _ => "",
        };
        let pi_text = |e: i32| match e {
            1 => "√π".to_string(),
            2 => "π".to_string(),
            e if e % 2 == 0 => format!("π^{}", e / 2),
            e => format!("π^({e}/2)"),
        };
        if !p.is_one() || (radical.is_empty() && self.pi_half <= 0) {
            num.push_str(&p.to_string());
        }
        num.push_str(radical);
        if self.pi_half > 0 {
            num.push_str(&pi_text(self.pi_half));
        }

        let q = self.coeff.denom();
        if !q.is_one() {
            den.push_str(&q.to_string());
            den_parts += 1;
        }
        if self.pi_half < 0 {
            den.push_str(&pi_text(-self.pi_half));
            den_parts += 1;
        }
        if let Some(g) = &self.gamma_arg {
            den.push_str(&format!("Γ({g})"));
            den_parts += 1;
        }
        match den_parts {
            0 => f.write_str(&num),
            1 => write!(f, "{num}/{den}"),
            _ => write!(f, "{num}/({den})"),
        }
    }
}
