//! Truncated Laurent series with exact coefficients.
//!
//! A series is stored as `Σ_{e=low}^{order} c_e λ^e + O(λ^{order+1})`.
//! Every operation derives the order of its result from the orders of its
//! inputs (the pessimistic rule), so a coefficient is never reported unless
//! it is fully determined.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::rational::sqrt_exact;
use crate::exactnum::Qf3;

/// Exact coefficient field for [`Laurent`].
pub trait Coeff: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rational(r: BigRational) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self>;
    /// An exact square root with positive leading part, if one exists here.
    fn sqrt(&self) -> Option<Self>;
}

impl Coeff for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_rational(r: BigRational) -> Self {
        r
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Result<Self> {
        if Zero::is_zero(self) {
            Err(Error::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }
    fn sqrt(&self) -> Option<Self> {
        sqrt_exact(self)
    }
}

impl Coeff for Qf3 {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_rational(r: BigRational) -> Self {
        Qf3::rational(r)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Result<Self> {
        Qf3::inv(self)
    }
    fn sqrt(&self) -> Option<Self> {
        if self.is_rational() {
            sqrt_exact(self.a()).map(Qf3::rational)
        } else {
            None
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Laurent<C> {
    /// Exponent of `coeffs[0]`; for a series that vanishes to its known
    /// order this is `order + 1` and `coeffs` is empty.
    low: i64,
    coeffs: Vec<C>,
    order: i64,
}

pub type LaurentQ = Laurent<BigRational>;
pub type LaurentQf3 = Laurent<Qf3>;

impl<C: Coeff> Laurent<C> {
    /// `Σ coeffs[i] λ^{low+i}` known through `λ^order`; extra coefficients
    /// beyond the order are dropped.
    pub fn new(low: i64, mut coeffs: Vec<C>, order: i64) -> Self {
        let keep = (order - low + 1).max(0) as usize;
        coeffs.truncate(keep);
        let mut s = Laurent { low, coeffs, order };
        s.normalize();
        s
    }

    pub fn from_poly(coeffs: Vec<C>, order: i64) -> Self {
        Self::new(0, coeffs, order)
    }

    pub fn zero(order: i64) -> Self {
        Laurent {
            low: order + 1,
            coeffs: Vec::new(),
            order,
        }
    }

    pub fn constant(c: C, order: i64) -> Self {
        Self::monomial(c, 0, order)
    }

    /// `c·λ^e`, exact through `order`.
    pub fn monomial(c: C, e: i64, order: i64) -> Self {
        Self::new(e, vec![c], order)
    }

    fn normalize(&mut self) {
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == self.coeffs.len() {
            self.low = self.order + 1;
            self.coeffs.clear();
        } else if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
        // trailing slots up to the order are implicit zeros
        let len = (self.order - self.low + 1).max(0) as usize;
        self.coeffs.resize(len, C::zero());
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    /// Exponent of the leading nonzero coefficient, `None` if the series
    /// vanishes to its known order.
    pub fn valuation(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then_some(self.low)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `λ^e`, or `None` when `e` lies beyond the known order.
    pub fn coeff(&self, e: i64) -> Option<C> {
        if e > self.order {
            None
        } else if e < self.low {
            Some(C::zero())
        } else {
            Some(self.coeffs[(e - self.low) as usize].clone())
        }
    }

    /// Coefficients of `λ^from … λ^order`.
    pub fn coeffs_from(&self, from: i64) -> Vec<C> {
        (from..=self.order).map(|e| self.coeff(e).unwrap()).collect()
    }

    pub fn truncate(&self, order: i64) -> Self {
        Self::new(self.low, self.coeffs.clone(), order.min(self.order))
    }

    /// Coefficients of negative powers, as `(exponent, coefficient)` pairs.
    pub fn principal_part(&self) -> Vec<(i64, C)> {
        (self.low..0.min(self.order + 1))
            .map(|e| (e, self.coeff(e).unwrap()))
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    /// The series with all negative powers removed.
    pub fn regular_part(&self) -> Self {
        if self.low >= 0 {
            return self.clone();
        }
        Self::new(0, self.coeffs_from(0), self.order)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.zip(rhs, C::add)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.zip(rhs, C::sub)
    }

    fn zip(&self, rhs: &Self, f: impl Fn(&C, &C) -> C) -> Self {
        let order = self.order.min(rhs.order);
        let low = self.low.min(rhs.low);
        let coeffs = (low..=order)
            .map(|e| f(&self.coeff(e).unwrap(), &rhs.coeff(e).unwrap()))
            .collect();
        Self::new(low, coeffs, order)
    }

    pub fn neg(&self) -> Self {
        Laurent {
            low: self.low,
            coeffs: self.coeffs.iter().map(C::neg).collect(),
            order: self.order,
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::new(self.low, self.coeffs.iter().map(|x| x.mul(c)).collect(), self.order)
    }

    /// Multiplication by `λ^k`.
    pub fn shift(&self, k: i64) -> Self {
        Laurent {
            low: self.low + k,
            coeffs: self.coeffs.clone(),
            order: self.order + k,
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        // f = λ^a(…) + O(λ^{of+1}), g = λ^b(…) + O(λ^{og+1})
        let order = (self.order + rhs.low).min(rhs.order + self.low);
        let low = self.low + rhs.low;
        if self.is_zero() || rhs.is_zero() {
            return Self::zero(order);
        }
        let len = (order - low + 1).max(0) as usize;
        let mut out = vec![C::zero(); len];
        for (i, x) in self.coeffs.iter().enumerate().take(len) {
            if x.is_zero() {
                continue;
            }
            for (j, y) in rhs.coeffs.iter().enumerate().take(len - i) {
                out[i + j] = out[i + j].add(&x.mul(y));
            }
        }
        Self::new(low, out, order)
    }

    /// `f^k`; `f^0` is the constant 1 at the order of `f`.
    pub fn powi(&self, k: u32) -> Self {
        if k == 0 {
            return Self::constant(C::one(), self.order);
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplicative inverse; needs a nonzero leading coefficient.
    pub fn inv(&self) -> Result<Self> {
        let v = self.valuation().ok_or(Error::DivisionByZero)?;
        let rel = self.order - v;
        let a0inv = self.coeffs[0].inv()?;
        let mut out: Vec<C> = Vec::with_capacity(rel as usize + 1);
        out.push(a0inv.clone());
        for n in 1..=rel as usize {
            let mut t = C::zero();
            for i in 1..=n {
                t = t.add(&self.coeffs[i].mul(&out[n - i]));
            }
            out.push(t.mul(&a0inv).neg());
        }
        Ok(Self::new(-v, out, rel - v))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(&rhs.inv()?))
    }

    /// Formal derivative `d/dλ`.
    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c.mul(&C::from_rational(BigRational::from_integer(BigInt::from(self.low + i as i64)))))
            .collect();
        Self::new(self.low - 1, coeffs, self.order - 1)
    }
}

/// Square root with positive leading coefficient.
///
/// The valuation must be even and the leading coefficient an exact square
/// in the coefficient field.
pub fn series_sqrt<C: Coeff>(f: &Laurent<C>) -> Result<Laurent<C>> {
    let v = f
        .valuation()
        .ok_or_else(|| Error::SeriesSqrt("argument vanishes to its known order".into()))?;
    if v % 2 != 0 {
        return Err(Error::SeriesSqrt(format!("odd leading exponent {v}")));
    }
    let a0 = &f.coeffs[0];
    let g0 = a0
        .sqrt()
        .ok_or_else(|| Error::SeriesSqrt(format!("leading coefficient {a0} is not a square")))?;
    let rel = (f.order - v) as usize;
    // (Σ g_i)^2 = Σ a_i  ⇒  2 g_0 g_n = a_n − Σ_{i=1}^{n−1} g_i g_{n−i}
    let inv_two_g0 = g0.add(&g0).inv()?;
    let mut g = Vec::with_capacity(rel + 1);
    g.push(g0);
    for n in 1..=rel {
        let mut t = f.coeffs[n].clone();
        for i in 1..n {
            t = t.sub(&g[i].mul(&g[n - i]));
        }
        g.push(t.mul(&inv_two_g0));
    }
    Ok(Laurent::new(v / 2, g, f.order - v / 2))
}

impl<C: Coeff> fmt::Display for Laurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = self.low + i as i64;
            let s = c.to_string();
            let (neg, body) = match s.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, s),
            };
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let needs_parens = body.contains(['+', '-']);
            let body = if needs_parens { format!("({body})") } else { body };
            match e {
                0 => write!(f, "{body}")?,
                1 => write!(f, "{body}λ")?,
                _ => write!(f, "{body}λ^{e}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(λ^{})", self.order + 1)
    }
}
