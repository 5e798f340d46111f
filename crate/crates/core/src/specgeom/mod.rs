//! Exact Laurent series and the quartic spectral curve, down to the counts of
//! rooted quadrangulations of the projective plane.

pub mod laurent;
pub mod quartic;

pub use laurent::{series_sqrt, Coeff, Laurent, LaurentQ, LaurentQf3};
pub use quartic::{alpha2_series, quadrangulation_counts, rp2_correlator_series, x02_series, QuadCounts};
