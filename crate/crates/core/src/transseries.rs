//! One-instanton coefficients and the multi-instanton table of the Riccati
//! trans-series.
//!
//! With `t = z^{-5/4}` the sectors are
//!
//! ```text
//!     u_1(z) = z^{1/2} z^{-5/8} e^{-A z^{5/4}}   Σ μ_l t^l
//!     v_k(z) = z^{1/4}          e^{-kA z^{5/4}/2} Σ v_{n,k} t^n
//! ```
//!
//! where `v_{n,0} = v_n` and `v_{n,1} = ν_n`. The generating series of the
//! rows factor through two universal series `v_±`:
//! `v̂_k = (−1)^{k−1} v_+^{k−1} v_−^k (1 − v_+ v̂_0)`.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::exactnum::rational::{int, rat};
use crate::exactnum::Qf3;
use crate::sequences::{USeq, VSeq};
use crate::specgeom::LaurentQf3;

/// `μ_0 … μ_L`, the coefficients of the Painlevé I one-instanton sector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct MuSeq {
    values: Vec<Qf3>,
}

impl MuSeq {
    pub fn compute(l: usize) -> Self {
        let u = USeq::compute(l.div_ceil(2) + 1);
        Self::from_u(l, &u)
    }

    /// μ_l = 5/(16√3·l)·{(192/25)Σ_{k<l} μ_k u_{(l−k+1)/2} − (l − 9/10)(l − 1/10)μ_{l−1}}
    pub fn from_u(l_max: usize, u: &USeq) -> Self {
        let mut values = vec![Qf3::one()];
        let c192 = rat(192, 25);
        for l in 1..=l_max {
            let li = l as i64;
            let mut sum = Qf3::zero();
            // only l − k odd contributes
            for k in (0..l).rev().step_by(2) {
                sum += values[k].scale(&u.half_index(l - k + 1));
            }
            let mut inner = sum.scale(&c192);
            inner -= &values[l - 1].scale(&(rat(10 * li - 9, 10) * rat(10 * li - 1, 10)));
            // 5/(16√3 l) = 5√3/(48 l)
            values.push(&Qf3::surd(rat(5, 48 * li)) * &inner);
        }
        MuSeq { values }
    }

    pub fn values(&self) -> &[Qf3] {
        &self.values
    }

    pub fn get(&self, l: usize) -> Option<&Qf3> {
        self.values.get(l)
    }
}

pub fn mu_seq(l: usize) -> MuSeq {
    MuSeq::compute(l)
}

/// `ν_0 … ν_L`, the coefficients of the first Riccati instanton sector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct NuSeq {
    values: Vec<Qf3>,
}

impl NuSeq {
    pub fn compute(l: usize) -> Self {
        Self::from_v(l, &VSeq::compute(l + 1))
    }

    /// ν_n = −(4/(5n)) Σ_{k<n} v_{n+1−k} ν_k; needs `v` through index L+1.
    pub fn from_v(l_max: usize, v: &VSeq) -> Self {
        assert!(v.max_index() > l_max, "nu_seq({l_max}) needs v through {}", l_max + 1);
        let v = v.values();
        let mut values = vec![Qf3::one()];
        for n in 1..=l_max {
            let mut sum = Qf3::zero();
            for (k, nu) in values.iter().enumerate() {
                sum += &v[n + 1 - k] * nu;
            }
            values.push(sum.scale(&rat(-4, 5 * n as i64)));
        }
        NuSeq { values }
    }

    pub fn values(&self) -> &[Qf3] {
        &self.values
    }

    pub fn get(&self, n: usize) -> Option<&Qf3> {
        self.values.get(n)
    }
}

pub fn nu_seq(l: usize) -> NuSeq {
    NuSeq::compute(l)
}

/// `v_{n,k}` for `0 ≤ n ≤ N`, `0 ≤ k ≤ K`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VkTable {
    rows: Vec<Vec<Qf3>>,
}

impl VkTable {
    pub fn compute(n_max: usize, k_max: usize) -> Self {
        Self::from_v(n_max, k_max, &VSeq::compute(n_max + 1))
    }

    pub fn from_v(n_max: usize, k_max: usize, v: &VSeq) -> Self {
        let mut rows = vec![v.values()[..=n_max].to_vec()];
        if k_max >= 1 {
            rows.push(NuSeq::from_v(n_max, v).values);
        }
        let v = v.values();
        for k in 2..=k_max {
            // −1/(√3(k−1)) = −√3/(3(k−1))
            let pre = Qf3::surd(rat(-1, 3 * (k as i64 - 1)));
            let half = rat(1, 2);
            let mut row: Vec<Qf3> = Vec::with_capacity(n_max + 1);
            // m = n + 1; m = 0 is the n = −1 instance, where only the
            // quadratic term survives and yields the seed v_{0,k}
            for m in 0..=n_max {
                let mut t = Qf3::zero();
                if m >= 1 {
                    let n = m - 1;
                    t += row[n].scale(&rat(5 * n as i64, 4));
                    for l in 2..=m {
                        t += &row[m - l] * &v[l];
                    }
                }
                let mut quad = Qf3::zero();
                for i in 1..k {
                    for l in 0..=m {
                        quad += &rows[i][l] * &rows[k - i][m - l];
                    }
                }
                t += quad.scale(&half);
                row.push(&pre * &t);
            }
            rows.push(row);
        }
        VkTable { rows }
    }

    pub fn get(&self, n: usize, k: usize) -> Option<&Qf3> {
        self.rows.get(k).and_then(|r| r.get(n))
    }

    pub fn row(&self, k: usize) -> Option<&[Qf3]> {
        self.rows.get(k).map(Vec::as_slice)
    }

    pub fn max_n(&self) -> usize {
        self.rows[0].len() - 1
    }

    pub fn max_k(&self) -> usize {
        self.rows.len() - 1
    }

    /// `v̂_k(x) = Σ_{n≥0} v_{n,k} x^{−n}` as a series in `y = 1/x`.
    pub fn hat(&self, k: usize) -> LaurentQf3 {
        let row = &self.rows[k];
        LaurentQf3::from_poly(row.clone(), row.len() as i64 - 1)
    }

    /// `v̂_0(x) = Σ_{n≥2} v_n x^{−n}`.
    pub fn hat0(&self) -> LaurentQf3 {
        let mut row = self.rows[0].clone();
        row[0] = Qf3::zero();
        row[1] = Qf3::zero();
        LaurentQf3::from_poly(row, self.max_n() as i64)
    }
}

pub fn vk_table(n: usize, k: usize) -> VkTable {
    VkTable::compute(n, k)
}

/// `v_{0,k} = (−1)^{k−1}(2√3)^{1−k}` for `k ≥ 1`.
pub fn v0k_closed_form(k: usize) -> Result<Qf3> {
    if k == 0 {
        return Err(domain("v0k_closed_form", "k must be at least 1"));
    }
    let two_sqrt3 = Qf3::surd(int(2));
    let p = two_sqrt3.powi(1 - k as i64)?;
    Ok(if k.is_multiple_of(2) { -p } else { p })
}

/// The series `v_+` and `v_−` in `y = 1/x`, known through `y^order`.
#[derive(Clone, Debug, PartialEq)]
pub struct Vpm {
    pub plus: LaurentQf3,
    pub minus: LaurentQf3,
}

impl Vpm {
    pub fn order(&self) -> i64 {
        self.plus.order().min(self.minus.order())
    }

    /// `(−1)^{k−1} v_+^{k−1} v_−^k (1 − v_+ v̂_0)`.
    pub fn predicted_hat(&self, k: usize, hat0: &LaurentQf3) -> LaurentQf3 {
        let order = self.order().min(hat0.order());
        let one = LaurentQf3::constant(Qf3::one(), order);
        let tail = one.sub(&self.plus.mul(hat0));
        let mut p = tail;
        for _ in 1..k {
            p = p.mul(&self.plus);
        }
        for _ in 0..k {
            p = p.mul(&self.minus);
        }
        if k.is_multiple_of(2) {
            p.neg()
        } else {
            p
        }
    }
}

/// Solves the k = 1, 2 identities for `v_±` through `x^{−order}` and checks
/// the k = 3 identity.
pub fn vpm_series(order: usize) -> Result<Vpm> {
    if order < 1 {
        return Err(domain("vpm_series", "order must be at least 1"));
    }
    let table = vk_table(order + 1, 3);
    let vpm = solve_vpm(&table, order as i64)?;
    check_factorization(&vpm, &table, 3)?;
    Ok(vpm)
}

/// From `v̂_1 = v_−(1 − v_+ v̂_0)` and `v̂_2 = −v_+ v_−²(1 − v_+ v̂_0)`:
/// `R = v̂_2/v̂_1 = −v_+ v_−`, hence `v_− = v̂_1 − R v̂_0` and `v_+ = −R/v_−`.
pub fn solve_vpm(table: &VkTable, order: i64) -> Result<Vpm> {
    if table.max_k() < 2 {
        return Err(domain("solve_vpm", "table needs rows k = 0, 1, 2"));
    }
    let h0 = table.hat0().truncate(order);
    let h1 = table.hat(1).truncate(order);
    let h2 = table.hat(2).truncate(order);
    let r = h2.checked_div(&h1).map_err(|_| Error::Factorization { order: 0 })?;
    let minus = h1.sub(&r.mul(&h0));
    if minus.valuation() != Some(0) {
        return Err(Error::Factorization { order: 0 });
    }
    let plus = r.checked_div(&minus)?.neg();
    Ok(Vpm { plus, minus })
}

/// Compares row `k` of the table with the factorized prediction and reports
/// the first order at which they differ.
pub fn check_factorization(vpm: &Vpm, table: &VkTable, k: usize) -> Result<()> {
    let predicted = vpm.predicted_hat(k, &table.hat0());
    let actual = table.hat(k);
    let order = predicted.order().min(actual.order());
    for e in 0..=order {
        if predicted.coeff(e) != actual.coeff(e) {
            return Err(Error::Factorization { order: e as usize });
        }
    }
    Ok(())
}

/// Coefficient list of a series in `1/x`, from `x^0`.
pub fn coefficient_list(s: &LaurentQf3) -> Vec<Qf3> {
    s.coeffs_from(0)
}

/// Exact value of `(1/2)·ν_1·A`, the limit of the auxiliary sequence `r_n`.
pub fn first_correction(nu: &NuSeq) -> Qf3 {
    &nu.values[1] * &Qf3::instanton_action().scale(&rat(1, 2))
}
