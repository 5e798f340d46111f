//! The `crosscap` command line: argument parsing, dispatch and rendering,
//! kept separate from `main` so it can be driven in-process.

pub mod args;
pub mod report;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;
use crosscap::asymptotics::{asym_u, asym_v, asym_vk, relative_error};
use crosscap::exactnum::rational::rat;
use crosscap::extrapolation::{
    estimate_stokes, matched_digits, r_from_s, r_limit, richardson, s_seq, StokesKind,
};
use crosscap::sequences::{intersection_number, p_of_g, t_of_g, u_seq, v_seq};
use crosscap::specgeom::quadrangulation_counts;
use crosscap::transseries::{coefficient_list, mu_seq, nu_seq, vk_table, vpm_series};
use crosscap::{BigFloat, BigRational, Precision, Qf3, SymConst};
use serde_json::{json, Value};

use args::{AsymKind, Cli, Command, PlotKind, SeqKind, StokesWhich, Target};
use report::{Body, Cell, Report};

/// Largest sequence index accepted; the exact recursions are quadratic.
pub const MAX_INDEX: usize = 4000;

pub const EXIT_OK: i32 = 0;
pub const EXIT_COMPUTE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Parses `argv` (including the program name), runs the command and writes
/// the result; returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    if let Err(msg) = validate(&cli) {
        let _ = writeln!(err, "error: {msg}");
        return EXIT_USAGE;
    }
    let report = match execute(&cli, err) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_COMPUTE;
        }
    };
    let text = report.render(cli.format);
    let written = match &cli.output {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => out.write_all(text.as_bytes()).map_err(|e| e.to_string()),
    };
    match written {
        Ok(()) => EXIT_OK,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_COMPUTE
        }
    }
}

fn validate(cli: &Cli) -> Result<(), String> {
    let bounded = |name: &str, v: usize, lo: usize| -> Result<(), String> {
        if v < lo || v > MAX_INDEX {
            Err(format!("--{name} must lie in {lo}..={MAX_INDEX}, got {v}"))
        } else {
            Ok(())
        }
    };
    match &cli.command {
        Command::Seq { n, .. } | Command::Transseries { n, .. } => bounded("n", *n, 0),
        Command::Vpm { order } => bounded("order", *order, 1),
        Command::Asym { n, trunc, k, .. } => {
            bounded("n", *n, 1)?;
            if trunc >= n {
                return Err(format!("--trunc must be below --n ({trunc} >= {n})"));
            }
            bounded("k", *k, 1)
        }
        Command::Richardson { n, order, .. } => {
            bounded("n", *n, 1)?;
            bounded("order", *order, 0)
        }
        Command::Stokes { n, order, .. } => {
            if let Some(n) = n {
                bounded("n", *n, 1)?;
            }
            if let Some(o) = order {
                bounded("order", *o, 0)?;
            }
            Ok(())
        }
        Command::Quad { n, .. } => bounded("n", *n, 1),
        Command::Intersect { g } => bounded("g", *g, 2),
        Command::Plotdata { n, .. } => bounded("n", *n, 1),
    }
}

/// Float rendering of exact values, when `--float` asks for it.
struct Render {
    float: Option<Precision>,
    digits: u32,
}

impl Render {
    fn digits(&self, p: Precision) -> u32 {
        self.digits.min(p.digits())
    }

    fn float(&self, x: &BigFloat) -> Cell {
        Cell::Number(x.to_string_digits(self.digits(x.precision())))
    }

    fn rational(&self, r: &BigRational) -> Cell {
        match self.float {
            Some(p) => self.float(&BigFloat::from_rational(r, p)),
            None => Cell::Exact(r.to_string()),
        }
    }

    fn qf3(&self, x: &Qf3) -> Cell {
        match self.float {
            Some(p) => self.float(&x.to_float(p)),
            None => Cell::Exact(x.to_string()),
        }
    }

    /// Constants with a quarter-integer Γ stay symbolic even under `--float`.
    fn sym(&self, c: &SymConst) -> Cell {
        match self.float.map(|p| c.to_float(p)) {
            Some(Ok(x)) => self.float(&x),
            _ => Cell::Exact(c.to_string()),
        }
    }
}

fn indexed<T>(items: &[T], mut cell: impl FnMut(&T) -> Cell) -> Vec<(String, Vec<Cell>)> {
    items.iter().enumerate().map(|(i, x)| (i.to_string(), vec![cell(x)])).collect()
}

fn single(index: &'static str, rows: Vec<(String, Vec<Cell>)>) -> Body {
    Body::Table {
        index,
        columns: vec!["value".into()],
        rows,
    }
}

fn qf3_json(xs: &[Qf3]) -> Value {
    serde_json::to_value(xs).expect("Qf3 serializes")
}

fn execute(cli: &Cli, err: &mut dyn Write) -> crosscap::Result<Report> {
    let prec = Precision::new(cli.prec);
    let r = Render {
        float: cli.float.map(Precision::new),
        digits: cli.digits,
    };
    let exact_prec = cli.float;
    Ok(match &cli.command {
        Command::Seq { which, n } => {
            let n = *n;
            let name = format!("seq {}", seq_name(*which));
            let params = json!({"n": n});
            match which {
                SeqKind::U => {
                    let u = u_seq(n);
                    Report::new(name, params, exact_prec, single("n", indexed(u.values(), |x| r.rational(x))))
                }
                SeqKind::V => {
                    let v = v_seq(n);
                    Report::new(name, params, exact_prec, single("n", indexed(v.values(), |x| r.qf3(x))))
                        .extra("qf3", qf3_json(v.values()))
                }
                SeqKind::Mu | SeqKind::Nu => {
                    let xs = if *which == SeqKind::Mu {
                        mu_seq(n).values().to_vec()
                    } else {
                        nu_seq(n).values().to_vec()
                    };
                    let index = if *which == SeqKind::Mu { "l" } else { "n" };
                    Report::new(name, params, exact_prec, single(index, indexed(&xs, |x| r.qf3(x))))
                        .extra("qf3", qf3_json(&xs))
                }
                SeqKind::T => {
                    let u = u_seq(n);
                    let ts = (0..=n).map(|g| t_of_g(g, &u)).collect::<crosscap::Result<Vec<_>>>()?;
                    Report::new(name, params, exact_prec, single("g", indexed(&ts, |c| r.sym(c))))
                        .extra("symbolic", serde_json::to_value(&ts).expect("SymConst serializes"))
                }
                SeqKind::P => {
                    // p_g for 2g = 1 ..= n + 1, from v_0 ..= v_n
                    let v = v_seq(n);
                    let ps = (1..=n + 1).map(|tg| p_of_g(tg, &v)).collect::<crosscap::Result<Vec<_>>>()?;
                    let rows = ps
                        .iter()
                        .enumerate()
                        .map(|(i, c)| (half_label(i + 1), vec![r.sym(c)]))
                        .collect();
                    Report::new(name, params, exact_prec, single("g", rows))
                        .extra("symbolic", serde_json::to_value(&ps).expect("SymConst serializes"))
                }
            }
        }
        Command::Transseries { k, n } => {
            let table = vk_table(*n, *k);
            let row = table.row(*k).expect("table built through row k");
            Report::new("transseries", json!({"k": k, "n": n}), exact_prec, single("n", indexed(row, |x| r.qf3(x))))
                .extra("qf3", qf3_json(row))
        }
        Command::Vpm { order } => {
            let vpm = vpm_series(*order)?;
            let plus = coefficient_list(&vpm.plus);
            let minus = coefficient_list(&vpm.minus);
            let rows = (0..=*order)
                .map(|j| {
                    let get = |xs: &[Qf3]| xs.get(j).cloned().unwrap_or_default();
                    (j.to_string(), vec![r.qf3(&get(&plus)), r.qf3(&get(&minus))])
                })
                .collect();
            Report::new(
                "vpm",
                json!({"order": order}),
                exact_prec,
                Body::Table {
                    index: "j",
                    columns: vec!["plus".into(), "minus".into()],
                    rows,
                },
            )
            .note("coefficients of x^-j; the factorization identity holds for k = 1, 2, 3")
        }
        Command::Asym { which, n, trunc, k } => {
            let (n, l) = (*n, *trunc);
            let (exact, approx, label) = match which {
                AsymKind::U => {
                    let u = u_seq(n);
                    let exact = Qf3::rational(u.values()[n].clone());
                    (exact, asym_u(n, l, &mu_seq(l), prec)?, format!("u_{n}"))
                }
                AsymKind::V => {
                    let v = v_seq(n);
                    (v.values()[n].clone(), asym_v(n, l, &nu_seq(l), prec)?, format!("v_{n}"))
                }
                AsymKind::Vk => {
                    let table = vk_table(n.max(l), k + 1);
                    let exact = table.get(n, *k).expect("table covers (n, k)").clone();
                    (exact, asym_vk(*k, n, l, &table, prec)?, format!("v_{{{n},{k}}}"))
                }
            };
            let rel = relative_error(&approx, &exact)?;
            let mut params = json!({"n": n, "trunc": l});
            if *which == AsymKind::Vk {
                params["k"] = json!(k);
            }
            let fields = vec![
                ("exact", r.qf3(&exact)),
                ("exactFloat", r.float(&exact.to_float(prec))),
                ("asymptotic", r.float(&approx)),
                ("relativeError", Cell::Number(rel.to_string_digits(6))),
            ];
            Report::new(format!("asym {}", asym_name(*which)), params, Some(cli.prec), Body::Fields(fields))
                .note(format!("{label} against its large-n expansion truncated at L = {l}"))
        }
        Command::Richardson { target, n, order } => {
            let s = s_seq(n + order, prec)?;
            let (seq, limit, name) = match target {
                Target::S => (s, BigFloat::sqrt6(prec), "sqrt(6)"),
                Target::R => (r_from_s(&s), BigFloat::from_rational(&r_limit(), prec), "-1/5"),
            };
            let res = richardson(&seq, *order, *n)?;
            if let Some(w) = &res.warning {
                let _ = writeln!(err, "warning: {w}");
            }
            let digits = matched_digits(&res.value, &limit);
            let fields = vec![
                ("value", r.float(&res.value)),
                ("limit", r.float(&limit)),
                ("matchedDigits", Cell::Number(digits.to_string())),
                ("guardDigits", Cell::Number(res.guard_digits.to_string())),
            ];
            let tname = if *target == Target::S { "s" } else { "r" };
            Report::new(
                "richardson",
                json!({"target": tname, "n": n, "order": order}),
                Some(cli.prec),
                Body::Fields(fields),
            )
            .note(matched_note(digits, r.digits(prec), name))
        }
        Command::Stokes { which, n, order } => {
            let (kind, dn, dorder, name) = match which {
                StokesWhich::Sprime => (StokesKind::Sprime, 250, 30, "sqrt(6)"),
                StokesWhich::Sminus1 => (StokesKind::Sminus1, 200, 10, "-sqrt(6)/12"),
            };
            let (n, order) = (n.unwrap_or(dn), order.unwrap_or(dorder));
            let est = estimate_stokes(kind, n, order, prec)?;
            if let Some(w) = &est.richardson.warning {
                let _ = writeln!(err, "warning: {w}");
            }
            let fields = vec![
                ("estimate", r.float(&est.value)),
                ("target", r.float(&est.target)),
                ("matchedDigits", Cell::Number(est.matched_digits.to_string())),
                ("guardDigits", Cell::Number(est.richardson.guard_digits.to_string())),
            ];
            let wname = if *which == StokesWhich::Sprime { "sprime" } else { "sminus1" };
            Report::new("stokes", json!({"which": wname, "n": n, "order": order}), Some(cli.prec), Body::Fields(fields))
                .note(matched_note(est.matched_digits, r.digits(prec), name))
        }
        Command::Quad { n, oeis } => {
            let counts = quadrangulation_counts(*n)?;
            let strs: Vec<String> = counts.values().iter().map(|c| c.to_string()).collect();
            let rows = strs
                .iter()
                .enumerate()
                .map(|(i, c)| ((i + 1).to_string(), vec![Cell::Number(c.clone())]))
                .collect();
            let mut rep = Report::new("quad", json!({"n": n}), None, single("n", rows));
            rep.plain = Some(if *oeis { strs.join("\n") } else { strs.join(" ") });
            rep
        }
        Command::Intersect { g } => {
            let u = u_seq(*g);
            let x = intersection_number(*g, &u)?;
            Report::new("intersect", json!({"g": g}), exact_prec, Body::Fields(vec![("value", r.rational(&x))]))
                .note(format!("<sigma_2^{}>_{g}", 3 * g - 3))
        }
        Command::Plotdata { which, n } => {
            let orders = [0usize, 1, 5];
            let s = s_seq(n + 5, prec)?;
            let seq = match which {
                PlotKind::Unorquot => s,
                PlotKind::Firstcorr => r_from_s(&s),
            };
            let prefixes = orders
                .iter()
                .map(|&o| richardson(&seq, o, *n).map(|res| res.prefix))
                .collect::<crosscap::Result<Vec<_>>>()?;
            let rows = (1..=*n)
                .map(|m| {
                    let cells = prefixes.iter().map(|p| r.float(p.get(m).expect("prefix covers 1..=n"))).collect();
                    (m.to_string(), cells)
                })
                .collect();
            let (label, sym) = match which {
                PlotKind::Unorquot => ("unorquot", "s"),
                PlotKind::Firstcorr => ("firstcorr", "r"),
            };
            Report::new(
                format!("plotdata {label}"),
                json!({"n": n, "orders": orders}),
                Some(cli.prec),
                Body::Table {
                    index: "n",
                    columns: orders.iter().map(|o| format!("{sym}{o}")).collect(),
                    rows,
                },
            )
        }
    })
}

/// The digit match of the printed estimate; the full count follows when the
/// estimate is better than what is shown.
fn matched_note(matched: u32, shown: u32, name: &str) -> String {
    if matched > shown {
        format!("matched {shown} digits of {name} ({matched} before rounding to {shown} printed digits)")
    } else {
        format!("matched {matched} digits of {name}")
    }
}

fn seq_name(k: SeqKind) -> &'static str {
    match k {
        SeqKind::U => "u",
        SeqKind::V => "v",
        SeqKind::T => "t",
        SeqKind::P => "p",
        SeqKind::Mu => "mu",
        SeqKind::Nu => "nu",
    }
}

fn asym_name(k: AsymKind) -> &'static str {
    match k {
        AsymKind::U => "u",
        AsymKind::V => "v",
        AsymKind::Vk => "vk",
    }
}

/// `twog/2` rendered as `1/2`, `1`, `3/2`, …
fn half_label(twog: usize) -> String {
    rat(twog as i64, 2).to_string()
}
