//! Trans-series coefficients checked against independent formal expansions
//! of the linearized equations and against the published v± coefficients.

use crosscap::exactnum::rational::{int, rat};
use crosscap::sequences::{u_seq, v_seq};
use crosscap::specgeom::LaurentQf3;
use crosscap::transseries::{
    check_factorization, coefficient_list, mu_seq, nu_seq, solve_vpm, v0k_closed_form, vk_table, vpm_series,
};
use crosscap::Qf3;
use num_traits::Zero;

fn q(p: i64, d: i64) -> Qf3 {
    Qf3::rational(rat(p, d))
}

/// p/(d√3) = p√3/(3d)
fn over_sqrt3(p: i64, d: i64) -> Qf3 {
    Qf3::surd(rat(p, 3 * d))
}

fn series(cs: &[Qf3], order: i64) -> LaurentQf3 {
    LaurentQf3::from_poly(cs.to_vec(), order)
}

fn c(r: num_rational::BigRational) -> Qf3 {
    Qf3::rational(r)
}

#[test]
fn published_vpm_coefficients() {
    let vpm = vpm_series(5).unwrap();
    let plus = coefficient_list(&vpm.plus);
    let minus = coefficient_list(&vpm.minus);
    let plus_expected = [
        over_sqrt3(1, 2),
        Qf3::zero(),
        over_sqrt3(5, 192),
        q(-25, 1152),
        over_sqrt3(3149, 36864),
        q(-15995, 110592),
    ];
    let minus_expected = [
        Qf3::from(1),
        over_sqrt3(-1, 4),
        q(-1, 24),
        over_sqrt3(-1459, 11520),
        q(-5429, 34560),
        over_sqrt3(-114343, 138240),
    ];
    assert_eq!(&plus[..6], &plus_expected);
    assert_eq!(&minus[..6], &minus_expected);
}

#[test]
fn factorization_identity_through_order_ten() {
    let table = vk_table(11, 4);
    let vpm = solve_vpm(&table, 10).unwrap();
    for k in 1..=4 {
        check_factorization(&vpm, &table, k).unwrap_or_else(|e| panic!("k = {k}: {e}"));
    }
    // the check is not vacuous: perturbing a coefficient breaks it
    let mut bad = vpm.clone();
    bad.minus = bad.minus.add(&LaurentQf3::monomial(q(1, 1000), 4, 10));
    assert!(check_factorization(&bad, &table, 3).is_err());
}

#[test]
fn seed_row_matches_closed_form_up_to_twenty() {
    let table = vk_table(1, 20);
    for k in 1..=20 {
        assert_eq!(table.get(0, k).unwrap(), &v0k_closed_form(k).unwrap(), "k = {k}");
    }
}

/// With `t = z^{-5/4}` and `δv = e^{−λ z^{5/4}} z^{1/4} f(t)`, the
/// linearization `δv' = v·δv` of `2v' − v² + 3u = 0` becomes
/// `−(5/4)λ f + (1/4) t f − (5/4) t² f' = V f`, `V(t) = Σ v_n t^n`.
#[test]
fn nu_solves_linearized_riccati() {
    let l = 30;
    let v = v_seq(l + 1);
    let nu = nu_seq(l);
    let f = series(nu.values(), l as i64);
    let big_v = series(v.values(), l as i64 + 1);
    let lambda = Qf3::instanton_action().scale(&rat(1, 2));
    let lhs = f
        .scale(&lambda.scale(&rat(-5, 4)))
        .add(&f.shift(1).scale(&q(1, 4)))
        .sub(&f.derivative().shift(2).scale(&q(5, 4)));
    let residual = lhs.sub(&big_v.mul(&f));
    assert!(residual.order() >= l as i64);
    assert!(residual.is_zero(), "residual {residual}");
}

/// With `u_1 = e^{−A z^{5/4}} z^{−1/8} g(t)` and `u = z^{1/2} U(t)`,
/// `U(t) = Σ u_n t^{2n}`, the equation `u_1'' = 12 u u_1` reads
/// `(25/16)A² g + (9/64)t² g + (25/8)A t² g' + (25/8)t³ g' + (25/16)t⁴ g'' = 12 U g`.
#[test]
fn mu_solves_linearized_painleve() {
    let l = 30;
    let mu = mu_seq(l);
    let u = u_seq(l / 2 + 1);
    let g = series(mu.values(), l as i64);
    let mut u_coeffs = vec![Qf3::zero(); l + 1];
    for (n, un) in u.values().iter().enumerate() {
        if 2 * n <= l {
            u_coeffs[2 * n] = c(un.clone());
        }
    }
    let big_u = series(&u_coeffs, l as i64);
    let a = Qf3::instanton_action();
    let a2 = &a * &a;
    assert_eq!(a2, q(192, 25));
    let g1 = g.derivative();
    let g2 = g1.derivative();
    let lhs = g
        .scale(&a2.scale(&rat(25, 16)))
        .add(&g.shift(2).scale(&q(9, 64)))
        .add(&g1.shift(2).scale(&a.scale(&rat(25, 8))))
        .add(&g1.shift(3).scale(&q(25, 8)))
        .add(&g2.shift(4).scale(&q(25, 16)));
    let rhs = big_u.mul(&g).scale(&c(int(12)));
    let residual = lhs.sub(&rhs);
    assert!(residual.order() >= l as i64);
    assert!(residual.is_zero(), "residual {residual}");
}
