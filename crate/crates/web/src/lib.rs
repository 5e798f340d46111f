//! Browser bindings. Each exported function is a thin wrapper around a
//! plain Rust function returning JSON, so the logic is testable natively.

use crosscap::extrapolation::{matched_digits, r_from_s, r_limit, richardson, s_seq};
use crosscap::sequences::p_constant;
use crosscap::specgeom::quadrangulation_counts;
use crosscap::{BigFloat, Precision};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Upper bounds keeping one call well under a second in the browser.
pub const MAX_N: usize = 300;
pub const MAX_ORDER: usize = 30;
pub const MAX_TWO_G: usize = 80;
pub const MAX_QUAD: usize = 40;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Curve {
    pub order: usize,
    /// `log10 |x^{(N)}_m − limit|` for `m = 1 ..= n`; `None` on exact agreement.
    pub log_error: Vec<Option<f64>>,
    /// The transform at `m = n`, as a decimal string.
    pub last: String,
    pub matched_digits: u32,
    pub guard_digits: i64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Curves {
    pub target: String,
    pub limit: String,
    pub n: usize,
    pub precision: u32,
    pub curves: Vec<Curve>,
}

/// Richardson transforms of `s_n` (`target = "s"`, limit √6) or `r_n`
/// (`"r"`, limit −1/5) for each order, over `m = 1 ..= n`.
pub fn richardson_curves(target: &str, n: usize, orders: &[usize], precision: u32) -> Result<Curves, String> {
    if n == 0 || n > MAX_N {
        return Err(format!("n must lie in 1..={MAX_N}"));
    }
    if orders.is_empty() || orders.iter().any(|&o| o > MAX_ORDER) {
        return Err(format!("give between one and several orders, each at most {MAX_ORDER}"));
    }
    if !(30..=400).contains(&precision) {
        return Err("precision must lie in 30..=400 digits".into());
    }
    let p = Precision::new(precision);
    let top = n + orders.iter().max().unwrap();
    let s = s_seq(top, p).map_err(|e| e.to_string())?;
    let (seq, limit) = match target {
        "s" => (s, BigFloat::sqrt6(p)),
        "r" => (r_from_s(&s), BigFloat::from_rational(&r_limit(), p)),
        other => return Err(format!("unknown target `{other}`; use `s` or `r`")),
    };
    let curves = orders
        .iter()
        .map(|&order| {
            let res = richardson(&seq, order, n).map_err(|e| e.to_string())?;
            let log_error = res.prefix.iter().map(|(_, x)| (x - &limit).log10_abs()).collect();
            Ok(Curve {
                order,
                log_error,
                last: res.value.to_string_digits(40.min(precision)),
                matched_digits: matched_digits(&res.value, &limit),
                guard_digits: res.guard_digits,
            })
        })
        .collect::<Result<Vec<_>, String>>()?;
    Ok(Curves {
        target: target.to_string(),
        limit: limit.to_string_digits(40.min(precision)),
        n,
        precision,
        curves,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PConstant {
    /// `g` as `1/2`, `1`, `3/2`, …
    pub g: String,
    pub symbolic: String,
    /// Decimal value when no quarter-integer Γ remains.
    pub value: Option<String>,
}

/// `p_g` for `g = twog/2`.
pub fn p_of_genus(twog: usize) -> Result<PConstant, String> {
    if twog == 0 || twog > MAX_TWO_G {
        return Err(format!("2g must lie in 1..={MAX_TWO_G}"));
    }
    let c = p_constant(twog).map_err(|e| e.to_string())?;
    let g = if twog.is_multiple_of(2) { (twog / 2).to_string() } else { format!("{twog}/2") };
    Ok(PConstant {
        g,
        symbolic: c.to_string(),
        value: c.to_float(Precision::new(40)).ok().map(|x| x.to_string_digits(20)),
    })
}

/// `c_1 … c_n` as decimal strings.
pub fn quadrangulations(n: usize) -> Result<Vec<String>, String> {
    if n == 0 || n > MAX_QUAD {
        return Err(format!("n must lie in 1..={MAX_QUAD}"));
    }
    let counts = quadrangulation_counts(n).map_err(|e| e.to_string())?;
    Ok(counts.values().iter().map(|c| c.to_string()).collect())
}

fn to_js<T: Serialize>(r: Result<T, String>) -> Result<String, JsValue> {
    r.and_then(|v| serde_json::to_string(&v).map_err(|e| e.to_string()))
        .map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = richardsonCurves)]
pub fn richardson_curves_js(target: &str, n: u32, orders: Vec<u32>, precision: u32) -> Result<String, JsValue> {
    let orders: Vec<usize> = orders.into_iter().map(|o| o as usize).collect();
    to_js(richardson_curves(target, n as usize, &orders, precision))
}

#[wasm_bindgen(js_name = pOfGenus)]
pub fn p_of_genus_js(twog: u32) -> Result<String, JsValue> {
    to_js(p_of_genus(twog as usize))
}

#[wasm_bindgen(js_name = quadrangulations)]
pub fn quadrangulations_js(n: u32) -> Result<String, JsValue> {
    to_js(quadrangulations(n as usize))
}
