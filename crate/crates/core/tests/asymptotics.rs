//! Exact-versus-asymptotic comparisons.

use crosscap::asymptotics::{
    asym_u, asym_v, asym_vk, asym_vk_parts, normalized, optimal_truncation, relative_error, truncation_profile,
    AsymParams,
};
use crosscap::sequences::{u_seq, v_seq};
use crosscap::transseries::{mu_seq, nu_seq, vk_table};
use crosscap::{BigFloat, Precision, Qf3};


fn p(d: u32) -> Precision {
    Precision::new(d)
}

#[test]
fn optimal_truncation_grows_with_n() {
    let v = v_seq(120);
    let nu = nu_seq(119);
    let profile = |n: usize| truncation_profile(n, n - 1, &nu, &v.values()[n], p(120)).unwrap();
    let at40 = profile(40);
    let at120 = profile(120);
    let l40 = optimal_truncation(&at40);
    let l120 = optimal_truncation(&at120);
    assert!(l40 < l120, "argmin {l40} at n = 40, {l120} at n = 120");
    // error first falls, then rises past the optimum
    assert!(at40[l40] < at40[0] && at40[l40] < at40[39]);
}

#[test]
fn u_sector_converges_at_fixed_truncation() {
    let mu = mu_seq(2);
    let u = u_seq(100);
    for n in 20..=100 {
        let exact = Qf3::rational(u.values()[n].clone());
        let err = relative_error(&asym_u(n, 2, &mu, p(50)).unwrap(), &exact).unwrap();
        assert!(err.to_f64() < 10.0 / n as f64, "n = {n}");
    }
}

#[test]
fn v_sector_leading_order_within_three_over_n() {
    let v = v_seq(250);
    let nu = nu_seq(0);
    for n in (30..=250).step_by(11) {
        let err = relative_error(&asym_v(n, 0, &nu, p(50)).unwrap(), &v.values()[n]).unwrap();
        assert!(err.to_f64() < 3.0 / n as f64, "n = {n}");
    }
}

#[test]
fn second_row_leading_order() {
    let t = vk_table(60, 3);
    let exact = t.get(60, 2).unwrap();
    let err = relative_error(&asym_vk(2, 60, 0, &t, p(50)).unwrap(), exact).unwrap();
    assert!(err.to_f64() < 5.0 / 60.0, "relative error {}", err.to_f64());
}

#[test]
fn second_row_residual_alternates() {
    // the remainder after removing the λ^{−n} sector is the (−λ)^{−n} sector;
    // the normalization 2πλ^n/Γ(n) is positive, so signs can be read directly
    let t = vk_table(60, 3);
    let prec = p(80);
    let signs: Vec<i32> = (40..=60)
        .map(|n| {
            let parts = asym_vk_parts(2, n, n / 2, &t, prec).unwrap();
            (t.get(n, 2).unwrap().to_float(prec) - &parts.forward).signum()
        })
        .collect();
    assert!(signs.windows(2).all(|w| w[0] == -w[1]), "{signs:?}");
    let s = normalized(t.get(50, 2).unwrap(), 50, prec).unwrap();
    // 3·√6·v_{0,3} = √6/4 from the λ^{−n} sector, ±√6/12 from the other
    assert!((s.to_f64() - 6f64.sqrt() / 4.0).abs() < 0.25);
}

#[test]
fn stokes_quotients_are_real_and_consistent() {
    let params = AsymParams::new(p(50));
    let expected = BigFloat::sqrt6(p(50)) / (BigFloat::pi(p(50)) * BigFloat::from_i64(2, p(50)));
    assert_eq!(params.s_prime, expected);
    assert_eq!(params.beta, 0);
}
