//! Exact arithmetic foundations: big rationals, the field ℚ(√3), canonical
//! closed-form constants, and a precision-parameterized float.

pub mod bigfloat;
pub mod qf3;
pub mod rational;
pub mod symconst;

pub use bigfloat::{BigFloat, Precision};
pub use num_rational::BigRational;
pub use qf3::{qf3_arith, ArithOp, Qf3};
pub use symconst::{symconst_normalize, symconst_to_float, SymConst, SymExpr};
