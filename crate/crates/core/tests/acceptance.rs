//! Acceptance suite: one PASS/FAIL line per criterion, then a non-zero exit
//! status if any criterion failed.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crosscap::asymptotics::{asym_u, asym_v, relative_error};
use crosscap::exactnum::rational::{int, parse_rational, rat};
use crosscap::extrapolation::{
    estimate_stokes, matched_digits, r_from_s, richardson, richardson_value, s_seq, FloatSeq, StokesKind,
};
use crosscap::sequences::{intersection_number, p_of_g, t_of_g, u_seq, v_seq};
use crosscap::specgeom::quadrangulation_counts;
use crosscap::transseries::{check_factorization, coefficient_list, mu_seq, nu_seq, solve_vpm, v0k_closed_form, vk_table, vpm_series};
use crosscap::{BigFloat, Precision, Qf3, SymConst, SymExpr};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn within(elapsed: Duration, budget: Duration) -> (bool, String) {
    (elapsed < budget, format!("{:.2?} of {:?} budget", elapsed, budget))
}

fn sym(coeff: &str) -> SymExpr {
    SymExpr::rational(parse_rational(coeff).unwrap())
}

fn canon(e: SymExpr) -> SymConst {
    e.normalize().unwrap()
}

fn criterion_1() -> Outcome {
    let t = Instant::now();
    let u = u_seq(2);
    let expected = [
        canon(sym("2").with_pi_half(-1)),
        canon(sym("1/24")),
        canon(sym("7/4320").with_pi_half(-1)),
    ];
    let mut bad = Vec::new();
    for (g, e) in expected.iter().enumerate() {
        let got = t_of_g(g, &u).unwrap();
        if &got != e {
            bad.push(format!("t_{g} = {got}, expected {e}"));
        }
    }
    let (fast, time) = within(t.elapsed(), Duration::from_secs(1));
    outcome(bad.is_empty() && fast, if bad.is_empty() { format!("t_0, t_1, t_2 exact; {time}") } else { bad.join("; ") })
}

fn criterion_2() -> Outcome {
    let t = Instant::now();
    let v = v_seq(40);
    let q = |s: &str| parse_rational(s).unwrap();
    let expected: Vec<(usize, SymConst)> = vec![
        (1, canon(sym("-2").with_rad6(1).over_gamma(rat(-1, 4)))),
        (2, canon(sym("1/2"))),
        (3, canon(sym("1/3").with_rad6(1).over_gamma(rat(1, 4)))),
        (4, canon(sym("5/36").with_pi_half(-1))),
        (5, canon(sym("1033/1024").with_rad6(-1).over_gamma(rat(19, 4)))),
        (6, canon(sym("3149/442368"))),
        (7, canon(sym("1599895/294912").with_rad6(-1).over_gamma(rat(29, 4)))),
        (8, canon(sym("484667/560431872").with_pi_half(-1))),
        (
            41,
            canon(
                SymExpr::rational(
                    q("1238878081129358302459331398309144842472024202171957968278854904568087551305256373")
                        / q("10986030082548950321157435333449889551411576832"),
                )
                .with_rad6(-1)
                .over_gamma(rat(199, 4)),
            ),
        ),
    ];
    let mut bad = Vec::new();
    for (twog, e) in &expected {
        let got = p_of_g(*twog, &v).unwrap();
        if &got != e {
            bad.push(format!("p_({twog}/2) = {got}, expected {e}"));
        }
    }
    let (fast, time) = within(t.elapsed(), Duration::from_secs(5));
    outcome(
        bad.is_empty() && fast,
        if bad.is_empty() { format!("9 constants exact incl. p_(41/2); {time}") } else { bad.join("; ") },
    )
}

fn criterion_3() -> Outcome {
    let t = Instant::now();
    let counts = match quadrangulation_counts(20) {
        Ok(c) => c,
        Err(e) => return outcome(false, e.to_string()),
    };
    let first: Vec<BigInt> = [5, 38, 331, 3098, 30330, 306276, 3163737].iter().map(|&c| BigInt::from(c)).collect();
    let ok_first = counts.values()[..7] == first[..];
    let ok_rest = counts.values()[7..].iter().all(|c| c > &BigInt::from(0));
    let (fast, time) = within(t.elapsed(), Duration::from_secs(5));
    outcome(
        ok_first && ok_rest && fast,
        format!(
            "c_1..c_7 {}; c_8..c_20 {} (c_20 = {}); {time}",
            if ok_first { "match" } else { "differ" },
            if ok_rest { "positive integers" } else { "not all positive" },
            counts.values()[19]
        ),
    )
}

/// Rounds `x` to the number of decimals in `printed` and returns the
/// difference in units of that last place.
fn ulp_distance(x: &BigFloat, printed: &str) -> BigInt {
    let decimals = printed.split('.').nth(1).map_or(0, str::len) as u32;
    let ours: BigInt = x.to_fixed(decimals).replace('.', "").parse().unwrap();
    let theirs: BigInt = printed.replace('.', "").parse().unwrap();
    let d = ours - theirs;
    if d < BigInt::from(0) {
        -d
    } else {
        d
    }
}

fn criterion_4() -> Outcome {
    let t = Instant::now();
    let p = Precision::new(200);
    let s = s_seq(280, p).unwrap();
    let r = r_from_s(&s);
    let sqrt6 = BigFloat::sqrt6(p);
    let cases = [
        ("s(20)_250", &s, 20, "2.44948974278317809819728407459"),
        ("s(30)_250", &s, 30, "2.44948974278317809819728407471"),
        ("r(20)_250", &r, 20, "-0.200000000000000000000000001520"),
        ("r(30)_250", &r, 30, "-0.200000000000000000000000000002"),
    ];
    let mut pass = true;
    let mut parts = Vec::new();
    for (name, seq, order, printed) in cases {
        let value = richardson(seq, order, 250).unwrap().value;
        let dist = ulp_distance(&value, printed);
        let ok = dist <= BigInt::from(1);
        pass &= ok;
        parts.push(format!(
            "{name} {} {} ({dist} ulp from printed)",
            value.to_string_digits(31),
            if ok { "ok" } else { "MISMATCH" }
        ));
    }
    let d20 = matched_digits(&richardson_value(&s, 20, 250).unwrap(), &sqrt6);
    let d30 = matched_digits(&richardson_value(&s, 30, 250).unwrap(), &sqrt6);
    pass &= d20 >= 28 && d30 >= 30;
    parts.push(format!("sqrt(6) digits: N=20 {d20} (need 28), N=30 {d30} (need 30)"));
    let (fast, time) = within(t.elapsed(), Duration::from_secs(180));
    parts.push(time);
    outcome(pass && fast, parts.join("; "))
}

fn criterion_5() -> Outcome {
    let vpm = match vpm_series(5) {
        Ok(v) => v,
        Err(e) => return outcome(false, e.to_string()),
    };
    let over_sqrt3 = |p: i64, d: i64| Qf3::surd(rat(p, 3 * d));
    let q = |p: i64, d: i64| Qf3::rational(rat(p, d));
    let plus = [over_sqrt3(1, 2), q(0, 1), over_sqrt3(5, 192), q(-25, 1152), over_sqrt3(3149, 36864), q(-15995, 110592)];
    let minus = [
        q(1, 1),
        over_sqrt3(-1, 4),
        q(-1, 24),
        over_sqrt3(-1459, 11520),
        q(-5429, 34560),
        over_sqrt3(-114343, 138240),
    ];
    let ok_coeffs = coefficient_list(&vpm.plus)[..6] == plus && coefficient_list(&vpm.minus)[..6] == minus;
    let table = vk_table(11, 4);
    let ok_fact = solve_vpm(&table, 10)
        .map(|v| (3..=4).all(|k| check_factorization(&v, &table, k).is_ok()))
        .unwrap_or(false);
    outcome(
        ok_coeffs && ok_fact,
        format!(
            "v± through x^-5 {}; k = 3, 4 factorization through order 10 {}",
            if ok_coeffs { "match" } else { "differ" },
            if ok_fact { "exact" } else { "fails" }
        ),
    )
}

fn criterion_6() -> Outcome {
    let table = vk_table(0, 20);
    let bad: Vec<usize> = (2..=20)
        .filter(|&k| table.get(0, k) != Some(&v0k_closed_form(k).unwrap()))
        .collect();
    outcome(bad.is_empty(), if bad.is_empty() { "v_{0,k} for k = 2..20 exact".to_string() } else { format!("mismatch at k = {bad:?}") })
}

fn criterion_7() -> Outcome {
    let p = Precision::new(60);
    let v = v_seq(250);
    let nu = nu_seq(6);
    let mut worst = (0usize, 0.0f64);
    let mut ok_leading = true;
    for n in 30..=250 {
        let err = relative_error(&asym_v(n, 0, &nu, p).unwrap(), &v.values()[n]).unwrap().to_f64();
        let scaled = err * n as f64;
        if scaled > worst.1 {
            worst = (n, scaled);
        }
        ok_leading &= err < 3.0 / n as f64;
    }
    let errs: Vec<BigFloat> = (0..=5)
        .map(|l| relative_error(&asym_v(100, l, &nu, p).unwrap(), &v.values()[100]).unwrap())
        .collect();
    let ok_decrease = errs.windows(2).all(|w| w[1] < w[0]);
    let ok_l5 = errs[5].to_f64() < 1e-8;
    let mu = mu_seq(2);
    let u = u_seq(100);
    let mut ok_u = true;
    for n in 20..=100 {
        let exact = Qf3::rational(u.values()[n].clone());
        let err = relative_error(&asym_u(n, 2, &mu, p).unwrap(), &exact).unwrap().to_f64();
        ok_u &= err < 10.0 / n as f64;
    }
    outcome(
        ok_leading && ok_decrease && ok_l5 && ok_u,
        format!(
            "L=0 max n*err = {:.3} at n = {} (< 3); n=100 errors L=0..5 decreasing: {ok_decrease}, L=5 err = {:.2e}; u-sector L=2 within 10/n: {ok_u}",
            worst.1,
            worst.0,
            errs[5].to_f64()
        ),
    )
}

fn criterion_8() -> Outcome {
    let t = Instant::now();
    let est = match estimate_stokes(StokesKind::Sminus1, 200, 10, Precision::new(200)) {
        Ok(e) => e,
        Err(e) => return outcome(false, e.to_string()),
    };
    let (fast, time) = within(t.elapsed(), Duration::from_secs(300));
    outcome(
        est.matched_digits >= 6 && fast,
        format!(
            "estimate {} matches -sqrt(6)/12 to {} digits (need 6); {time}",
            est.value.to_string_digits(25),
            est.matched_digits
        ),
    )
}

/// Working precision for target digits `t` following the transform's
/// precondition `P ≥ 2·digits((n+N)^N) + t`.
fn working_precision(target: u32, n: usize, order: usize) -> Precision {
    let digits = (order as f64 * ((n + order) as f64).log10()).ceil() as u32 + 1;
    Precision::new(2 * digits + target)
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_2024);
    let target = Precision::new(50);
    let mut failures = 0;
    let mut trials = 0;
    for &order in &[1usize, 5, 10] {
        for _ in 0..100 {
            let coeffs: Vec<BigRational> = (0..=order)
                .map(|_| rat(rng.gen_range(-1000..=1000), rng.gen_range(1..=97)))
                .collect();
            let n0: usize = rng.gen_range(1..=300);
            let values: Vec<BigRational> = (n0..=n0 + order)
                .map(|n| {
                    let x = rat(1, n as i64);
                    coeffs.iter().rev().fold(int(0), |acc, c| acc * &x + c)
                })
                .collect();
            let p = working_precision(target.digits(), n0, order);
            let seq = FloatSeq::from_rationals(n0, &values, p);
            let got = richardson_value(&seq, order, n0).unwrap().with_precision(target);
            let a0 = BigFloat::from_rational(&coeffs[0], target);
            trials += 1;
            if !within_ulps(&got, &a0, &coeffs[0], target, 10) {
                failures += 1;
            }
        }
    }
    outcome(failures == 0, format!("{trials} random polynomials (N = 1, 5, 10); {failures} outside 10 ulp"))
}

/// `|got − exact| ≤ k·ulp(exact)` at the given precision.
fn within_ulps(got: &BigFloat, rounded: &BigFloat, exact: &BigRational, p: Precision, k: i64) -> bool {
    if exact == &int(0) {
        return got.abs() < BigFloat::parse("1e-40", p).unwrap();
    }
    let diff = num_traits::Signed::abs(&(got.to_rational() - exact));
    let mag = rounded.abs().to_rational();
    // one ulp ≤ |x|·2^{1−bits}
    let ulp = mag * crosscap::exactnum::rational::pow2(1 - p.bits() as i64);
    diff <= ulp * int(k)
}

fn criterion_10() -> Outcome {
    let got = intersection_number(2, &u_seq(2)).unwrap();
    // direct substitution: 3! · (−16/(5·7)) · (−49/4608)
    let by_hand = int(6) * rat(-16, 35) * rat(-49, 4608);
    outcome(
        got == rat(7, 240) && got == by_hand,
        format!("<sigma_2^3>_2 = {got}"),
    )
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("exact t_g", criterion_1),
        ("exact p_g", criterion_2),
        ("quadrangulations of RP^2", criterion_3),
        ("Richardson digits at P = 200", criterion_4),
        ("v± series and factorization", criterion_5),
        ("closed form v_{0,k}", criterion_6),
        ("asymptotic error bounds", criterion_7),
        ("S_-1 estimate", criterion_8),
        ("Richardson exactness", criterion_9),
        ("intersection number", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let o = check();
        if !o.pass {
            failed += 1;
        }
        println!(
            "criterion {:>2} [{}] {name}: {}",
            i + 1,
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
