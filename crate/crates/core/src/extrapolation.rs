//! Richardson extrapolation of the normalized coefficient sequences and the
//! resulting numerical estimates of the Stokes constants.
//!
//! ```text
//!     s_n = 2π λ^n v_n / Γ(n)                  → −iS' = √6
//!     r_n = n (s_n/√6 − 1)                     → ν_1 A/2 = −1/5
//!     s^{(N)}_n = Σ_{k=0}^{N} s_{n+k} (n+k)^N (−1)^{k+N} / (k!(N−k)!)
//! ```

use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::exactnum::rational::{factorial, int, rat};
use crate::exactnum::{BigFloat, Precision, Qf3};
use crate::sequences::VSeq;
use crate::transseries::VkTable;

/// Digits of headroom below which a Richardson evaluation is flagged.
pub const MIN_GUARD_DIGITS: i64 = 30;

/// Extra digits carried by the sequence builders before the final rounding.
const GUARD: u32 = 10;

/// Values `x_start, x_{start+1}, …` sharing one precision.
#[derive(Clone, Debug, PartialEq)]
pub struct FloatSeq {
    start: usize,
    values: Vec<BigFloat>,
    precision: Precision,
}

impl FloatSeq {
    /// Rounds every entry to `precision`.
    pub fn new(start: usize, values: Vec<BigFloat>, precision: Precision) -> Self {
        let values = values.into_iter().map(|v| v.with_precision(precision)).collect();
        FloatSeq {
            start,
            values,
            precision,
        }
    }

    /// Rounds exact rationals once each.
    pub fn from_rationals(start: usize, values: &[BigRational], precision: Precision) -> Self {
        let values = values.iter().map(|r| BigFloat::from_rational(r, precision)).collect();
        FloatSeq {
            start,
            values,
            precision,
        }
    }

    pub fn start(&self) -> usize {
        self.start
    }

    /// Last index held.
    pub fn end(&self) -> usize {
        self.start + self.values.len() - 1
    }

    pub fn precision(&self) -> Precision {
        self.precision
    }

    pub fn get(&self, n: usize) -> Option<&BigFloat> {
        n.checked_sub(self.start).and_then(|i| self.values.get(i))
    }

    pub fn values(&self) -> &[BigFloat] {
        &self.values
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &BigFloat)> {
        self.values.iter().enumerate().map(move |(i, v)| (self.start + i, v))
    }

    /// Entry-wise map keeping indices and precision.
    pub fn map(&self, f: impl Fn(usize, &BigFloat) -> BigFloat) -> Self {
        let values = self.iter().map(|(n, v)| f(n, v)).collect();
        FloatSeq::new(self.start, values, self.precision)
    }
}

fn two_pi(precision: Precision) -> BigFloat {
    BigFloat::pi(precision) * BigFloat::from_i64(2, precision)
}

/// `2π λ^n x_n / Γ(n)` for `n = 1 ..= n_max`; the exact part is rounded once.
fn normalize_row(row: &[Qf3], n_max: usize, precision: Precision) -> FloatSeq {
    let work = precision.plus(GUARD);
    let lambda = Qf3::instanton_action().scale(&rat(1, 2));
    let tau = two_pi(work);
    let mut lambda_pow = Qf3::one();
    let mut inv_gamma = BigRational::one();
    let mut values = Vec::with_capacity(n_max);
    for (n, x) in row.iter().enumerate().take(n_max + 1).skip(1) {
        lambda_pow = &lambda_pow * &lambda;
        if n >= 2 {
            inv_gamma /= int(n as i64 - 1);
        }
        let exact = (x * &lambda_pow).scale(&inv_gamma);
        values.push(exact.to_float(work) * &tau);
    }
    FloatSeq::new(1, values, precision)
}

/// `s_1 … s_{n_max}`.
pub fn s_seq(n_max: usize, precision: Precision) -> Result<FloatSeq> {
    if n_max == 0 {
        return Err(domain("s_seq", "nMax must be at least 1"));
    }
    Ok(s_seq_from(&VSeq::compute(n_max), n_max, precision))
}

pub fn s_seq_from(v: &VSeq, n_max: usize, precision: Precision) -> FloatSeq {
    normalize_row(v.values(), n_max, precision)
}

/// `r_1 … r_{n_max}`.
pub fn r_seq(n_max: usize, precision: Precision) -> Result<FloatSeq> {
    Ok(r_from_s(&s_seq(n_max, precision)?))
}

/// `r_n = n(s_n/√6 − 1)`.
pub fn r_from_s(s: &FloatSeq) -> FloatSeq {
    let work = s.precision().plus(GUARD);
    let sqrt6 = BigFloat::sqrt6(work);
    let one = BigFloat::one(work);
    s.map(|n, x| {
        let q = x.with_precision(work) / &sqrt6 - &one;
        q * BigFloat::from_i64(n as i64, work)
    })
}

/// `(−1)^{k+N} (n+k)^N / (k!(N−k)!)`, exact.
pub fn richardson_weights(order: usize, n: usize) -> Vec<BigRational> {
    (0..=order)
        .map(|k| {
            let mut w = BigRational::from_integer(num_traits::pow(num_bigint::BigInt::from(n + k), order));
            w /= BigRational::from_integer(factorial(k as u64) * factorial((order - k) as u64));
            if (k + order) % 2 == 1 {
                -w
            } else {
                w
            }
        })
        .collect()
}

/// Value of one transform plus the number of digits lost to cancellation.
fn transform_at(seq: &FloatSeq, order: usize, n: usize) -> Result<(BigFloat, i64)> {
    if n < seq.start() {
        return Err(domain("richardson", format!("index {n} precedes the sequence start {}", seq.start())));
    }
    if n + order > seq.end() {
        return Err(Error::InsufficientTerms {
            needed: n + order,
            available: seq.end(),
        });
    }
    let p = seq.precision();
    let mut sum = BigFloat::zero(p);
    let mut largest: Option<f64> = None;
    for (k, w) in richardson_weights(order, n).iter().enumerate() {
        let term = BigFloat::from_rational(w, p) * seq.get(n + k).unwrap();
        if let Some(l) = term.log10_abs() {
            largest = Some(largest.map_or(l, |m: f64| m.max(l)));
        }
        sum = sum + term;
    }
    let lost = match (largest, sum.log10_abs()) {
        (Some(l), Some(s)) => (l - s).ceil().max(0.0) as i64,
        (Some(_), None) => p.digits() as i64,
        _ => 0,
    };
    Ok((sum, lost))
}

/// `s^{(N)}_n` of one sequence.
#[derive(Clone, Debug)]
pub struct RichardsonResult {
    pub order: usize,
    pub n: usize,
    pub value: BigFloat,
    /// `s^{(N)}_m` for `m = seq.start() ..= n`.
    pub prefix: FloatSeq,
    /// Precision minus the digits cancelled in the final sum.
    pub guard_digits: i64,
    pub warning: Option<String>,
}

/// The order-N transform at index n, together with the transformed prefix.
pub fn richardson(seq: &FloatSeq, order: usize, n: usize) -> Result<RichardsonResult> {
    let (value, lost) = transform_at(seq, order, n)?;
    let prefix = (seq.start()..=n)
        .map(|m| transform_at(seq, order, m).map(|(v, _)| v))
        .collect::<Result<Vec<_>>>()?;
    let guard_digits = seq.precision().digits() as i64 - lost;
    let warning = (guard_digits < MIN_GUARD_DIGITS).then(|| {
        format!(
            "only {guard_digits} guard digits left at order {order}, n = {n}, precision {}; raise the precision",
            seq.precision()
        )
    });
    Ok(RichardsonResult {
        order,
        n,
        value,
        prefix: FloatSeq::new(seq.start(), prefix, seq.precision()),
        guard_digits,
        warning,
    })
}

/// Just the value `s^{(N)}_n`.
pub fn richardson_value(seq: &FloatSeq, order: usize, n: usize) -> Result<BigFloat> {
    transform_at(seq, order, n).map(|(v, _)| v)
}

/// Rows `(n, s^{(N_1)}_n, s^{(N_2)}_n, …)` for every n whose transforms
/// all fit inside the sequence.
pub fn convergence_table(seq: &FloatSeq, orders: &[usize], n_range: std::ops::RangeInclusive<usize>) -> Result<Vec<(usize, Vec<BigFloat>)>> {
    n_range
        .map(|n| {
            let row = orders
                .iter()
                .map(|&o| richardson_value(seq, o, n))
                .collect::<Result<Vec<_>>>()?;
            Ok((n, row))
        })
        .collect()
}

/// Largest k with `|a/b − 1| < 0.5·10^{1−k}`; capped at the working
/// precision when the two agree exactly.
pub fn matched_digits(a: &BigFloat, b: &BigFloat) -> u32 {
    let p = a.precision().min(b.precision());
    let cap = p.digits();
    if b.is_zero() {
        return if a.is_zero() { cap } else { 0 };
    }
    let rel = ((a / b) - BigFloat::one(p)).abs();
    if rel.is_zero() {
        return cap;
    }
    let half = BigFloat::from_rational(&rat(1, 2), p);
    let holds = |k: i64| -> bool {
        let bound = &half * BigFloat::from_rational(&crate::exactnum::rational::pow10(1 - k), p);
        rel < bound
    };
    // estimate from the logarithm, then settle the boundary exactly
    let est = (0.5f64.log10() - rel.log10_abs().unwrap()).ceil() as i64;
    let mut k = est.max(0);
    while k > 0 && !holds(k) {
        k -= 1;
    }
    while holds(k + 1) && k < cap as i64 {
        k += 1;
    }
    k.clamp(0, cap as i64) as u32
}

/// Which Stokes constant to estimate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum StokesKind {
    /// `−iS' = √6`, from `s_n`.
    Sprime,
    /// `−iS₋₁ = −√6/12`, from the alternating remainder of `v_{n,2}`.
    Sminus1,
}

impl std::str::FromStr for StokesKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sprime" => Ok(StokesKind::Sprime),
            "sminus1" => Ok(StokesKind::Sminus1),
            other => Err(Error::Parse(other.to_string())),
        }
    }
}

#[derive(Clone, Debug)]
pub struct StokesEstimate {
    pub kind: StokesKind,
    pub value: BigFloat,
    /// The conjectured value the estimate is compared with.
    pub target: BigFloat,
    pub matched_digits: u32,
    pub richardson: RichardsonResult,
}

/// The conjectured real value `−iS` for each constant.
pub fn stokes_target(kind: StokesKind, precision: Precision) -> BigFloat {
    let sqrt6 = BigFloat::sqrt6(precision);
    match kind {
        StokesKind::Sprime => sqrt6,
        StokesKind::Sminus1 => -(sqrt6 / BigFloat::from_i64(12, precision)),
    }
}

/// Richardson-extrapolated estimate of `−iS'` or `−iS₋₁` at index `n` and
/// order `N`.
pub fn estimate_stokes(kind: StokesKind, n: usize, order: usize, precision: Precision) -> Result<StokesEstimate> {
    let seq = match kind {
        StokesKind::Sprime => s_seq(n + order, precision)?,
        StokesKind::Sminus1 => sminus1_seq(n + order, precision)?,
    };
    let richardson = richardson(&seq, order, n)?;
    let target = stokes_target(kind, precision);
    Ok(StokesEstimate {
        kind,
        matched_digits: matched_digits(&richardson.value, &target),
        value: richardson.value.clone(),
        target,
        richardson,
    })
}

/// Truncation of the subtracted `S'` sector at index n: ⌊n/2⌋, capped by the
/// table width.
pub fn sminus1_truncation(n: usize, table_width: usize) -> usize {
    (n / 2).min(table_width).min(n.saturating_sub(1))
}

/// `(−1)^n w_n` for `n = 1 ..= n_max`, with
/// `w_n = 2πλ^n v_{n,2}/Γ(n) − 3√6{v_{0,3} + Σ_{l≤L} v_{l,3} λ^l/∏_{m≤l}(n−m)}`.
pub fn sminus1_seq(n_max: usize, precision: Precision) -> Result<FloatSeq> {
    if n_max == 0 {
        return Err(domain("sminus1_seq", "nMax must be at least 1"));
    }
    let table = VkTable::compute(n_max, 3);
    sminus1_seq_from(&table, n_max, precision)
}

pub fn sminus1_seq_from(table: &VkTable, n_max: usize, precision: Precision) -> Result<FloatSeq> {
    if table.max_k() < 3 || table.max_n() < n_max {
        return Err(Error::InsufficientTerms {
            needed: n_max,
            available: table.max_n(),
        });
    }
    let work = precision.plus(GUARD);
    let normalized = normalize_row(table.row(2).unwrap(), n_max, work);
    let lambda = Qf3::instanton_action().scale(&rat(1, 2));
    let three_sqrt6 = BigFloat::sqrt6(work) * BigFloat::from_i64(3, work);
    let row3 = table.row(3).unwrap();
    let mut values = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let trunc = sminus1_truncation(n, table.max_n());
        let mut bracket = row3[0].clone();
        let mut lambda_pow = Qf3::one();
        let mut denom = BigRational::one();
        for (l, c) in row3.iter().enumerate().take(trunc + 1).skip(1) {
            lambda_pow = &lambda_pow * &lambda;
            denom *= int((n - l) as i64);
            bracket += (c * &lambda_pow).scale(&denom.recip());
        }
        let w = normalized.get(n).unwrap() - &(bracket.to_float(work) * &three_sqrt6);
        values.push(if n % 2 == 1 { -w } else { w });
    }
    Ok(FloatSeq::new(1, values, precision))
}

/// Exact limit of `r_n`: ν_1·A/2 = −1/5.
pub fn r_limit() -> BigRational {
    rat(-1, 5)
}
