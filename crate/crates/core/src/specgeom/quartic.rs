//! The quartic matrix model at 't Hooft parameter t = 1, as series in the
//! quartic coupling λ.
//!
//! The endpoint of the eigenvalue cut satisfies
//! `α² = (−1 + √(1 + 48λ))/(24λ)`, the zero of the moment function sits at
//! `x₀² = −(1 + 8λα²)/(4λ)`, and the cross-cap correlator is
//!
//! ```text
//!     ⟨tr Λ⁴⟩ = x₀⁴ − α⁴ − x₀²(x₀² + 2α²)·√(1 − 4α²/x₀²)
//!             = Σ c_n (−4λ)^{n−1},
//! ```
//!
//! where `c_n` counts rooted quadrangulations of RP² with n vertices.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::Serialize;

use super::laurent::{series_sqrt, LaurentQ};
use crate::error::{domain, Error, Result};
use crate::exactnum::rational::{int, rat};

fn one_plus(f: &LaurentQ) -> LaurentQ {
    LaurentQ::constant(int(1), f.order()).add(f)
}

/// `α²(λ)` through `λ^order`; a power series with constant term 1.
pub fn alpha2_series(order: i64) -> Result<LaurentQ> {
    if order < 0 {
        return Err(domain("alpha2_series", format!("order {order} is negative")));
    }
    let root = series_sqrt(&LaurentQ::from_poly(vec![int(1), int(48)], order + 1))?;
    let numer = root.sub(&LaurentQ::constant(int(1), order + 1));
    Ok(numer.shift(-1).scale(&rat(1, 24)))
}

/// `x₀²(λ)` through `λ^order`, with principal part `−1/(4λ)`.
pub fn x02_series(order: i64) -> Result<LaurentQ> {
    let a2 = alpha2_series(order)?;
    Ok(eval_x02(&a2))
}

fn eval_x02(a2: &LaurentQ) -> LaurentQ {
    let eight_lambda_a2 = a2.shift(1).scale(&int(8));
    one_plus(&eight_lambda_a2).shift(-1).scale(&rat(-1, 4))
}

/// The regular part of the correlator through `λ^order`.
///
/// The principal part must cancel exactly; a surviving negative power is
/// reported as a consistency error.
pub fn rp2_correlator_series(order: i64) -> Result<LaurentQ> {
    if order < 0 {
        return Err(domain("rp2_correlator_series", format!("order {order} is negative")));
    }
    // x₀² has a simple pole, so the products below lose one order.
    let a2 = alpha2_series(order + 1)?;
    let x02 = eval_x02(&a2);
    let eight_lambda_a2 = a2.shift(1).scale(&int(8));
    // 4α²/x₀² = −16λα²/(1 + 8λα²), regular at λ = 0
    let ratio = eight_lambda_a2.scale(&int(-2)).checked_div(&one_plus(&eight_lambda_a2))?;
    let root = series_sqrt(&LaurentQ::constant(int(1), ratio.order()).sub(&ratio))?;
    if root.coeff(0) != Some(int(1)) {
        return Err(Error::Consistency("square-root branch lost its unit constant term".into()));
    }
    let x04 = x02.mul(&x02);
    let a4 = a2.mul(&a2);
    let bracket = x02.add(&a2.scale(&int(2)));
    let corr = x04.sub(&a4).sub(&x02.mul(&bracket).mul(&root));
    if corr.order() < order {
        return Err(Error::Consistency(format!(
            "correlator known only through order {} < {order}",
            corr.order()
        )));
    }
    let principal = corr.principal_part();
    if let Some((e, c)) = principal.first() {
        return Err(Error::Consistency(format!(
            "correlator has a nonzero coefficient {c} at λ^{e}"
        )));
    }
    Ok(corr.regular_part().truncate(order))
}

/// `c_1 … c_N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuadCounts {
    #[serde(serialize_with = "serialize_bigints")]
    values: Vec<BigInt>,
}

fn serialize_bigints<S: serde::Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

impl QuadCounts {
    /// Counts indexed from `c_1`.
    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    pub fn get(&self, n: usize) -> Option<&BigInt> {
        n.checked_sub(1).and_then(|i| self.values.get(i))
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// `c_n = [λ^{n−1}]⟨tr Λ⁴⟩ / (−4)^{n−1}`, each checked to be a positive
/// integer.
pub fn quadrangulation_counts(n: usize) -> Result<QuadCounts> {
    if n == 0 {
        return Err(domain("quadrangulation_counts", "N must be at least 1"));
    }
    let corr = rp2_correlator_series(n as i64 - 1)?;
    let mut values = Vec::with_capacity(n);
    let mut scale = BigRational::from_integer(1.into());
    for k in 1..=n {
        let c = corr.coeff(k as i64 - 1).unwrap() / &scale;
        if !c.denom().is_one() || !c.is_positive() {
            return Err(Error::Consistency(format!("c_{k} = {c} is not a positive integer")));
        }
        values.push(c.to_integer());
        scale *= int(-4);
    }
    Ok(QuadCounts { values })
}
