//! Exact arithmetic in the quadratic field ℚ(√3).

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::bigfloat::{BigFloat, Precision};
use super::rational::{int, sqrt_exact};
use crate::error::{Error, Result};

/// The element `a + b·√3`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Qf3 {
    #[serde(with = "super::rational::ratio_str")]
    a: BigRational,
    #[serde(with = "super::rational::ratio_str")]
    b: BigRational,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Field arithmetic with an explicit error for division by zero.
pub fn qf3_arith(x: &Qf3, y: &Qf3, op: ArithOp) -> Result<Qf3> {
    Ok(match op {
        ArithOp::Add => x + y,
        ArithOp::Sub => x - y,
        ArithOp::Mul => x * y,
        ArithOp::Div => x.checked_div(y)?,
    })
}

impl Qf3 {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        Qf3 { a, b }
    }

    pub fn rational(a: BigRational) -> Self {
        Qf3 {
            a,
            b: BigRational::zero(),
        }
    }

    /// `b·√3`.
    pub fn surd(b: BigRational) -> Self {
        Qf3 {
            a: BigRational::zero(),
            b,
        }
    }

    pub fn from_i64(a: i64) -> Self {
        Self::rational(int(a))
    }

    pub fn sqrt3() -> Self {
        Self::surd(BigRational::one())
    }

    /// The instanton action 8√3/5.
    pub fn instanton_action() -> Self {
        Self::surd(super::rational::rat(8, 5))
    }

    pub fn a(&self) -> &BigRational {
        &self.a
    }

    pub fn b(&self) -> &BigRational {
        &self.b
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn is_pure_surd(&self) -> bool {
        self.a.is_zero()
    }

    pub fn conj(&self) -> Self {
        Qf3 {
            a: self.a.clone(),
            b: -&self.b,
        }
    }

    /// a² − 3b²
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - int(3) * &self.b * &self.b
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        Ok(Qf3 {
            a: &self.a / &n,
            b: -&self.b / &n,
        })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Qf3 {
            a: &self.a * c,
            b: &self.b * c,
        }
    }

    pub fn powi(&self, n: i64) -> Result<Self> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let mut acc = Qf3::one();
        let mut sq = base;
        let mut e = n.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Sign of the real number a + b√3, decided exactly.
    pub fn signum(&self) -> i32 {
        let sa = sign(&self.a);
        let sb = sign(&self.b);
        if sa == sb || sb == 0 {
            return sa;
        }
        if sa == 0 {
            return sb;
        }
        // opposite signs: compare a² with 3b²
        let a2 = &self.a * &self.a;
        let b2 = int(3) * &self.b * &self.b;
        if a2 > b2 {
            sa
        } else if a2 < b2 {
            sb
        } else {
            0
        }
    }

    /// Rounded value; computed with a few guard digits and rounded once more.
    pub fn to_float(&self, precision: Precision) -> BigFloat {
        let work = precision.plus(8);
        let a = BigFloat::from_rational(&self.a, work);
        if self.b.is_zero() {
            return a.with_precision(precision);
        }
        // b√3 = sign(b)·√(3b²)
        let three_b2 = int(3) * &self.b * &self.b;
        let mut root = match sqrt_exact(&three_b2) {
            Some(r) => BigFloat::from_rational(&r, work),
            None => BigFloat::from_rational(&three_b2, work)
                .sqrt()
                .expect("non-negative"),
        };
        if self.b.is_negative() {
            root = -root;
        }
        (a + root).with_precision(precision)
    }
}

fn sign(r: &BigRational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_negative() {
        -1
    } else {
        1
    }
}

impl Zero for Qf3 {
    fn zero() -> Self {
        Qf3::default()
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for Qf3 {
    fn one() -> Self {
        Qf3::from_i64(1)
    }
}

impl From<BigRational> for Qf3 {
    fn from(a: BigRational) -> Self {
        Qf3::rational(a)
    }
}

impl From<i64> for Qf3 {
    fn from(a: i64) -> Self {
        Qf3::from_i64(a)
    }
}

impl<'a> Add<&'a Qf3> for &'a Qf3 {
    type Output = Qf3;
    fn add(self, rhs: &Qf3) -> Qf3 {
        Qf3 {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

impl<'a> Sub<&'a Qf3> for &'a Qf3 {
    type Output = Qf3;
    fn sub(self, rhs: &Qf3) -> Qf3 {
        Qf3 {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
}

impl<'a> Mul<&'a Qf3> for &'a Qf3 {
    type Output = Qf3;
    fn mul(self, rhs: &Qf3) -> Qf3 {
        // sequences here are mostly rational or pure surds; skip zero parts
        let mut a = BigRational::zero();
        let mut b = BigRational::zero();
        if !self.a.is_zero() {
            if !rhs.a.is_zero() {
                a += &self.a * &rhs.a;
            }
            if !rhs.b.is_zero() {
                b += &self.a * &rhs.b;
            }
        }
        if !self.b.is_zero() {
            if !rhs.b.is_zero() {
                a += &self.b * &rhs.b * BigInt::from(3);
            }
            if !rhs.a.is_zero() {
                b += &self.b * &rhs.a;
            }
        }
        Qf3 { a, b }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<Qf3> for Qf3 {
            type Output = Qf3;
            fn $method(self, rhs: Qf3) -> Qf3 {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Qf3> for Qf3 {
            type Output = Qf3;
            fn $method(self, rhs: &Qf3) -> Qf3 {
                (&self).$method(rhs)
            }
        }
        impl $tr<Qf3> for &Qf3 {
            type Output = Qf3;
            fn $method(self, rhs: Qf3) -> Qf3 {
                self.$method(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl AddAssign<&Qf3> for Qf3 {
    fn add_assign(&mut self, rhs: &Qf3) {
        if !rhs.a.is_zero() {
            self.a += &rhs.a;
        }
        if !rhs.b.is_zero() {
            self.b += &rhs.b;
        }
    }
}

impl AddAssign<Qf3> for Qf3 {
    fn add_assign(&mut self, rhs: Qf3) {
        *self += &rhs;
    }
}

impl SubAssign<&Qf3> for Qf3 {
    fn sub_assign(&mut self, rhs: &Qf3) {
        self.a -= &rhs.a;
        self.b -= &rhs.b;
    }
}

impl Neg for Qf3 {
    type Output = Qf3;
    fn neg(self) -> Qf3 {
        Qf3 {
            a: -self.a,
            b: -self.b,
        }
    }
}

impl Neg for &Qf3 {
    type Output = Qf3;
    fn neg(self) -> Qf3 {
        -self.clone()
    }
}

/// Renders `a`, `b√3`, or `a+b√3` with rationals in `p/q` form, e.g. `5/48√3`.
impl fmt::Display for Qf3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}√3", self.b),
            (false, false) => {
                if self.b.is_negative() {
                    write!(f, "{}-{}√3", self.a, -&self.b)
                } else {
                    write!(f, "{}+{}√3", self.a, self.b)
                }
            }
        }
    }
}
