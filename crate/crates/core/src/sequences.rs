//! The coefficient sequences of the formal solutions
//!
//! ```text
//!     u(z) = z^{1/2} Σ u_n z^{-5n/2}     (Painlevé I)
//!     v(z) = z^{1/4} Σ v_n z^{-5n/4}     (Riccati, 2v' − v² + 3u = 0)
//! ```
//!
//! and the constants derived from them: `t_g` (orientable maps), the
//! conjectural `p_g` (non-orientable maps) and the intersection numbers
//! `⟨σ₂^{3g−3}⟩_g`.
//!
//! Both builders keep their table and extend it on demand, so repeated
//! overlapping requests only pay for the new terms.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{domain, Error, Result};
use crate::exactnum::rational::{factorial, int, pow2, rat};
use crate::exactnum::{Qf3, SymConst, SymExpr};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct USeq {
    values: Vec<BigRational>,
}

impl Default for USeq {
    fn default() -> Self {
        USeq { values: vec![int(1)] }
    }
}

impl USeq {
    pub fn compute(n: usize) -> Self {
        let mut s = USeq::default();
        s.extend_to(n);
        s
    }

    /// Extends the table so that `u_n` is available.
    pub fn extend_to(&mut self, n: usize) {
        let half = rat(1, 2);
        for m in self.values.len()..=n {
            let m_i = m as i64;
            let lead = rat(25 * (m_i - 1) * (m_i - 1) - 1, 48) * &self.values[m - 1];
            let conv = symmetric_convolution(&self.values, m, |a, b| a * b);
            self.values.push(lead - conv * &half);
        }
    }

    /// Index of the last computed term.
    pub fn max_index(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, n: usize) -> Option<&BigRational> {
        self.values.get(n)
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    /// `u_{m/2}`, zero when `m` is odd.
    pub fn half_index(&self, m: usize) -> BigRational {
        if m % 2 == 1 {
            BigRational::zero()
        } else {
            self.values[m / 2].clone()
        }
    }
}

/// Σ_{k=1}^{n−1} x_k x_{n−k}, summing each unordered pair once.
fn symmetric_convolution<T, F>(xs: &[T], n: usize, mul: F) -> T
where
    T: Clone + Zero + for<'a> std::ops::Add<&'a T, Output = T>,
    F: Fn(&T, &T) -> T,
{
    let mut acc = T::zero();
    for k in 1..n.div_ceil(2) {
        acc = acc + &mul(&xs[k], &xs[n - k]);
    }
    acc = acc.clone() + &acc;
    if n.is_multiple_of(2) && n >= 2 {
        acc = acc + &mul(&xs[n / 2], &xs[n / 2]);
    }
    acc
}

pub fn u_seq(n: usize) -> USeq {
    USeq::compute(n)
}

/// `v_0 … v_N` in ℚ(√3), together with the `u` table it consumes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VSeq {
    values: Vec<Qf3>,
    u: USeq,
}

impl Default for VSeq {
    fn default() -> Self {
        VSeq {
            values: vec![Qf3::surd(int(-1))],
            u: USeq::default(),
        }
    }
}

impl VSeq {
    pub fn compute(n: usize) -> Self {
        let mut s = VSeq::default();
        s.extend_to(n);
        s
    }

    pub fn extend_to(&mut self, n: usize) {
        self.u.extend_to(n.div_ceil(2));
        // 1/(2√3) = √3/6
        let inv_two_sqrt3 = Qf3::surd(rat(1, 6));
        for m in self.values.len()..=n {
            let m_i = m as i64;
            let mut acc = Qf3::rational(self.u.half_index(m) * int(-3));
            acc += self.values[m - 1].scale(&rat(5 * m_i - 6, 2));
            acc += symmetric_convolution(&self.values, m, |a, b| a * b);
            self.values.push(&inv_two_sqrt3 * &acc);
        }
    }

    pub fn max_index(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, n: usize) -> Option<&Qf3> {
        self.values.get(n)
    }

    pub fn values(&self) -> &[Qf3] {
        &self.values
    }

    pub fn u(&self) -> &USeq {
        &self.u
    }

    /// Checks that odd terms are rational and even terms are rational
    /// multiples of √3.
    pub fn check_parity(&self) -> Result<()> {
        for (n, v) in self.values.iter().enumerate() {
            let ok = if n % 2 == 1 {
                v.is_rational()
            } else {
                v.is_pure_surd()
            };
            if !ok {
                return Err(Error::Consistency(format!("v_{n} = {v} breaks the parity pattern")));
            }
        }
        Ok(())
    }
}

pub fn v_seq(n: usize) -> VSeq {
    VSeq::compute(n)
}

/// t_g = −u_g / (2^{g−2} Γ((5g−1)/2)).
pub fn t_of_g(g: usize, u: &USeq) -> Result<SymConst> {
    let ug = u.get(g).ok_or(Error::InsufficientTerms {
        needed: g,
        available: u.max_index(),
    })?;
    let g_i = g as i64;
    SymExpr::rational(-ug * pow2(2 - g_i))
        .over_gamma(rat(5 * g_i - 1, 2))
        .normalize()
}

/// p_{(n+1)/2} = v_n / (2^{(n−3)/2} Γ((5n−1)/4)) with n = twog − 1.
///
/// The half-integer power of two contributes a √2, which merges with the √3
/// of even-index `v_n` into the √6 of the closed forms.
pub fn p_of_g(twog: usize, v: &VSeq) -> Result<SymConst> {
    if twog == 0 {
        return Err(domain("p_of_g", "2g must be at least 1"));
    }
    let n = twog - 1;
    let vn = v.get(n).ok_or(Error::InsufficientTerms {
        needed: n,
        available: v.max_index(),
    })?;
    let n_i = n as i64;
    let expr = match (vn.is_rational(), vn.is_pure_surd()) {
        (true, _) => SymExpr::rational(vn.a().clone()),
        (false, true) => SymExpr::rational(vn.b().clone()).with_rad3(1),
        (false, false) => {
            return Err(Error::Consistency(format!("v_{n} = {vn} mixes ℚ and √3ℚ")));
        }
    };
    // 1/2^{(n−3)/2} = √2^{3−n}
    expr.with_rad2(3 - n_i as i32)
        .over_gamma(rat(5 * n_i - 1, 4))
        .normalize()
}

/// ⟨σ₂^{3g−3}⟩_g = (3g−3)! · (−4^g / ((5g−5)(5g−3))) · u_g, for g ≥ 2.
pub fn intersection_number(g: usize, u: &USeq) -> Result<BigRational> {
    if g < 2 {
        return Err(domain(
            "intersection_number",
            format!("g = {g}: the formula needs g >= 2 (the factor 5g-5 vanishes at g = 1)"),
        ));
    }
    let ug = u.get(g).ok_or(Error::InsufficientTerms {
        needed: g,
        available: u.max_index(),
    })?;
    let g_i = g as i64;
    let four_g = BigRational::from_integer(BigInt::from(1) << (2 * g));
    let denom = int((5 * g_i - 5) * (5 * g_i - 3));
    let fact = BigRational::from_integer(factorial(3 * g as u64 - 3));
    Ok(fact * (-four_g / denom) * ug)
}

/// Convenience wrappers building their own tables.
pub fn t_constant(g: usize) -> Result<SymConst> {
    t_of_g(g, &USeq::compute(g))
}

pub fn p_constant(twog: usize) -> Result<SymConst> {
    p_of_g(twog, &VSeq::compute(twog.saturating_sub(1)))
}

/// Numerical sign of p_g for integer g (no quarter-integer Γ appears).
pub fn p_is_positive(c: &SymConst) -> bool {
    c.coeff().is_positive()
}
