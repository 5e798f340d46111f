//! Exact sequences, trans-series and Stokes-constant numerics for rooted
//! maps on non-orientable surfaces.
//!
//! The orientable sector is the formal solution `u` of Painlevé I
//! (`u² − u''/6 = z`), the non-orientable sector the formal solution `v` of
//! the Riccati equation `2v' − v² + 3u = 0`. Everything exact lives in ℚ or
//! ℚ(√3); numerics use [`BigFloat`] at a caller-chosen decimal precision.

pub mod asymptotics;
pub mod error;
pub mod exactnum;
pub mod extrapolation;
pub mod sequences;
pub mod specgeom;
pub mod transseries;

pub use error::{Error, Result};
pub use exactnum::{BigFloat, BigRational, Precision, Qf3, SymConst, SymExpr};
