//! Large-order asymptotics of `u_n`, `v_n` and `v_{n,k}`, evaluated at a
//! chosen truncation order.
//!
//! The Stokes constants `S = −i·3^{1/4}/√π`, `S' = i√6` and `S₋₁ = −i√6/12`
//! are purely imaginary, so each enters only through the real quotient
//! `S/(2πi)`. Everything except those quotients (and `√A`, `√π` in the
//! u-sector) is exact in ℚ(√3) and rounded once.

use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exactnum::rational::{factorial, gamma_half_integer_over_sqrt_pi, int, rat};
use crate::exactnum::{BigFloat, Precision, Qf3};
use crate::transseries::{MuSeq, NuSeq, VkTable};

/// Guard digits used inside the evaluators before the final rounding.
const GUARD: u32 = 10;

/// The constants of the expansions, rendered at a fixed precision.
#[derive(Clone, Debug)]
pub struct AsymParams {
    /// `A = 8√3/5`, exact.
    pub a: Qf3,
    /// `λ = A/2`, exact.
    pub lambda: Qf3,
    pub a_float: BigFloat,
    /// `S/(2πi) = −3^{1/4}/(2π^{3/2})`.
    pub s_u: BigFloat,
    /// `S'/(2πi) = √6/(2π)`.
    pub s_prime: BigFloat,
    /// `S₋₁/(2πi) = −√6/(24π)`.
    pub s_minus1: BigFloat,
    /// Exponent of the prefactor of the Riccati sectors; zero here.
    pub beta: i32,
    precision: Precision,
}

impl AsymParams {
    pub fn new(precision: Precision) -> Self {
        let a = Qf3::instanton_action();
        let lambda = a.scale(&rat(1, 2));
        let pi = BigFloat::pi(precision);
        let sqrt_pi = pi.sqrt().expect("pi > 0");
        let sqrt6 = BigFloat::sqrt6(precision);
        let fourth_root3 = BigFloat::sqrt3(precision).sqrt().expect("positive");
        let two = BigFloat::from_i64(2, precision);
        AsymParams {
            a_float: a.to_float(precision),
            s_u: -(fourth_root3 / (&two * &pi * &sqrt_pi)),
            s_prime: &sqrt6 / (&two * &pi),
            s_minus1: -(&sqrt6 / (BigFloat::from_i64(24, precision) * &pi)),
            a,
            lambda,
            beta: 0,
            precision,
        }
    }

    pub fn precision(&self) -> Precision {
        self.precision
    }
}

/// `A² = 192/25`.
pub fn instanton_action_squared() -> Qf3 {
    let a = Qf3::instanton_action();
    &a * &a
}

/// `c_0 + Σ_{l=1}^{L} c_l x^l / ∏_{m=1}^{l}(s − m)`, exactly.
fn corrected_sum(coeffs: &[Qf3], x: &Qf3, s: &BigRational, truncation: usize) -> Qf3 {
    let mut total = coeffs[0].clone();
    let mut x_pow = Qf3::one();
    let mut denom = BigRational::one();
    for (l, c) in coeffs.iter().enumerate().take(truncation + 1).skip(1) {
        x_pow = &x_pow * x;
        denom *= s - int(l as i64);
        let term = (c * &x_pow).scale(&denom.recip());
        total += term;
    }
    total
}

fn require(available: usize, needed: usize) -> Result<()> {
    if needed > available {
        Err(Error::InsufficientTerms { needed, available })
    } else {
        Ok(())
    }
}

fn check_truncation(n: usize, truncation: usize) -> Result<()> {
    if n == 0 {
        return Err(crate::error::domain("asymptotics", "n must be at least 1"));
    }
    if truncation >= n {
        return Err(Error::TruncationTooLarge {
            order: truncation,
            n,
        });
    }
    Ok(())
}

/// `A^{−2n+1/2} Γ(2n−1/2) (S/2πi) {1 + Σ_{l≤L} μ_l A^l / ∏_{m≤l}(2n−1/2−m)}`.
pub fn asym_u(n: usize, truncation: usize, mu: &MuSeq, precision: Precision) -> Result<BigFloat> {
    if n == 0 {
        return Err(crate::error::domain("asym_u", "n must be at least 1"));
    }
    require(mu.values().len() - 1, truncation)?;
    let work = precision.plus(GUARD);
    let params = AsymParams::new(work);
    let s = rat(4 * n as i64 - 1, 2);
    let bracket = corrected_sum(mu.values(), &params.a, &s, truncation);
    // A^{−2n} = (25/192)^n and Γ(2n − 1/2) = r·√π, both exact
    let a_pow = num_traits::pow(rat(25, 192), n);
    let gamma = gamma_half_integer_over_sqrt_pi(2 * n as i64 - 1);
    let exact = bracket.scale(&(a_pow * gamma));
    let sqrt_a = params.a_float.sqrt()?;
    let sqrt_pi = BigFloat::pi(work).sqrt()?;
    let value = exact.to_float(work) * sqrt_a * sqrt_pi * &params.s_u;
    Ok(value.with_precision(precision))
}

/// `λ^{−n} Γ(n) (S'/2πi) {1 + Σ_{l≤L} ν_l λ^l / ∏_{m≤l}(n−m)}`.
pub fn asym_v(n: usize, truncation: usize, nu: &NuSeq, precision: Precision) -> Result<BigFloat> {
    check_truncation(n, truncation)?;
    require(nu.values().len() - 1, truncation)?;
    let work = precision.plus(GUARD);
    let params = AsymParams::new(work);
    let part = sector(nu.values(), &params.lambda, n, truncation)?;
    Ok((part.to_float(work) * &params.s_prime).with_precision(precision))
}

/// `x^{−n} Γ(n) {c_0 + Σ_{l≤L} c_l x^l/∏(n−m)}`, exactly.
fn sector(coeffs: &[Qf3], x: &Qf3, n: usize, truncation: usize) -> Result<Qf3> {
    let bracket = corrected_sum(coeffs, x, &int(n as i64), truncation);
    let gamma = BigRational::from_integer(factorial(n as u64 - 1));
    Ok((&bracket * &x.powi(-(n as i64))?).scale(&gamma))
}

/// The two exponential sectors contributing to `v_{n,k}`.
#[derive(Clone, Debug)]
pub struct AsymParts {
    /// The `λ^{−n}` sector, weighted by `(k+1)·S'/(2πi)`.
    pub forward: BigFloat,
    /// The `(−λ)^{−n}` sector, weighted by `(k−1)·S₋₁/(2πi)`; zero for `k ≤ 1`.
    pub backward: BigFloat,
}

impl AsymParts {
    pub fn total(&self) -> BigFloat {
        &self.forward + &self.backward
    }
}

/// Both sectors of the large-n expansion of `v_{n,k}`; needs table rows
/// through `k + 1` and columns through `L`.
pub fn asym_vk_parts(
    k: usize,
    n: usize,
    truncation: usize,
    table: &VkTable,
    precision: Precision,
) -> Result<AsymParts> {
    check_truncation(n, truncation)?;
    require(table.max_k(), k + 1)?;
    require(table.max_n(), truncation)?;
    let work = precision.plus(GUARD);
    let params = AsymParams::new(work);
    let up = table.row(k + 1).expect("checked above");
    let forward = sector(up, &params.lambda, n, truncation)?.scale(&int(k as i64 + 1));
    let forward = forward.to_float(work) * &params.s_prime;
    let backward = if k >= 2 {
        let down = table.row(k - 1).expect("k − 1 < k + 1");
        let neg_lambda = -&params.lambda;
        let b = sector(down, &neg_lambda, n, truncation)?.scale(&int(k as i64 - 1));
        b.to_float(work) * &params.s_minus1
    } else {
        BigFloat::zero(work)
    };
    Ok(AsymParts {
        forward: forward.with_precision(precision),
        backward: backward.with_precision(precision),
    })
}

pub fn asym_vk(k: usize, n: usize, truncation: usize, table: &VkTable, precision: Precision) -> Result<BigFloat> {
    Ok(asym_vk_parts(k, n, truncation, table, precision)?.total())
}

/// `|approx/exact − 1|`, with the exact value rounded at `P + 20`.
pub fn relative_error(approx: &BigFloat, exact: &Qf3) -> Result<BigFloat> {
    let p = approx.precision().plus(20);
    let e = exact.to_float(p);
    if e.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let ratio = approx.with_precision(p).checked_div(&e)?;
    Ok((ratio - BigFloat::one(p)).abs())
}

/// Relative errors of `asym_v(n, L)` for `L = 0 ..= l_max` (capped at n−1).
pub fn truncation_profile(n: usize, l_max: usize, nu: &NuSeq, exact: &Qf3, precision: Precision) -> Result<Vec<BigFloat>> {
    (0..=l_max.min(n - 1))
        .map(|l| relative_error(&asym_v(n, l, nu, precision)?, exact))
        .collect()
}

/// The truncation order with the smallest error in a profile.
pub fn optimal_truncation(profile: &[BigFloat]) -> usize {
    profile
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.cmp_value(b.1))
        .map(|(i, _)| i)
        .unwrap_or(0)
}

/// `2π λ^n x / Γ(n)` for a real or ℚ(√3) coefficient `x`, the normalization
/// under which the `λ^{−n}` sector of `v_{n,k}` tends to a constant.
pub fn normalized(x: &Qf3, n: usize, precision: Precision) -> Result<BigFloat> {
    let lambda = Qf3::instanton_action().scale(&rat(1, 2));
    let gamma = BigRational::from_integer(factorial(n as u64 - 1));
    let exact = (x * &lambda.powi(n as i64)?).scale(&gamma.recip());
    let work = precision.plus(GUARD);
    let two_pi = BigFloat::pi(work) * BigFloat::from_i64(2, work);
    Ok((exact.to_float(work) * two_pi).with_precision(precision))
}
