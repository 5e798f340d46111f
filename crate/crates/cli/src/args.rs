use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

/// Smallest working precision accepted anywhere, in decimal digits.
pub const MIN_PRECISION: u32 = 30;

fn precision(s: &str) -> Result<u32, String> {
    let p: u32 = s.parse().map_err(|_| format!("`{s}` is not a digit count"))?;
    if p < MIN_PRECISION {
        return Err(format!("precision {p} is below the minimum of {MIN_PRECISION} digits"));
    }
    Ok(p)
}

#[derive(Debug, Parser)]
#[command(name = "crosscap", version, about = "Exact coefficients, trans-series and Richardson estimates for maps on non-orientable surfaces")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    pub format: Format,

    /// Working precision for float computations, in decimal digits.
    #[arg(long, env = "CROSSCAP_PRECISION", default_value_t = 200, value_parser = precision, global = true)]
    pub prec: u32,

    /// Render exact values as floats computed at this precision.
    #[arg(long = "float", value_name = "P", value_parser = precision, global = true)]
    pub float: Option<u32>,

    /// Significant digits shown for float values.
    #[arg(long, default_value_t = 30, value_parser = clap::value_parser!(u32).range(1..), global = true)]
    pub digits: u32,

    /// Write to this file instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact terms of one sequence, indices 0..=n.
    Seq {
        #[arg(value_enum)]
        which: SeqKind,
        #[arg(long)]
        n: usize,
    },
    /// Row k of the trans-series table, v_{0,k} ..= v_{n,k}.
    Transseries {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
    },
    /// Coefficients of v_+ and v_- in 1/x through x^-order.
    Vpm {
        #[arg(long)]
        order: usize,
    },
    /// Large-n asymptotic approximation against the exact term.
    Asym {
        #[arg(value_enum)]
        which: AsymKind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        trunc: usize,
        /// Trans-series row, for `vk`.
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
    /// Order-N Richardson transform of s_n or r_n at index n.
    Richardson {
        #[arg(long, value_enum)]
        target: Target,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        order: usize,
    },
    /// Richardson estimate of a Stokes constant.
    Stokes {
        #[arg(long, value_enum)]
        which: StokesWhich,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        order: Option<usize>,
    },
    /// Rooted quadrangulations of the projective plane, c_1 ..= c_n.
    Quad {
        #[arg(long)]
        n: usize,
        /// One integer per line.
        #[arg(long)]
        oeis: bool,
    },
    /// The intersection number <sigma_2^{3g-3}>_g, for g >= 2.
    Intersect {
        #[arg(long)]
        g: usize,
    },
    /// Convergence data: Richardson orders 0, 1, 5 for n = 1..=n.
    Plotdata {
        #[arg(value_enum)]
        which: PlotKind,
        #[arg(long, default_value_t = 250)]
        n: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeqKind {
    U,
    V,
    T,
    P,
    Mu,
    Nu,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AsymKind {
    U,
    V,
    Vk,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    S,
    R,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum StokesWhich {
    Sprime,
    Sminus1,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PlotKind {
    Unorquot,
    Firstcorr,
}
