//! Exact scalars: rationals, algebraic number fields Q(w), sparse
//! multivariate polynomials over them, and the fraction field of the
//! polynomial ring (the coefficient field of the parametric cubic family).

mod fraction;
pub mod gcd;
mod numfield;
mod parse;
mod poly;

pub use fraction::{elem_arith, substitute_poly, BinOp, Fe};
pub use numfield::{rat, ratio, same_field, Field, NfElem, NumberField, Rat};
pub use parse::{parse_expr, parse_scalar};
pub use poly::{Mono, Poly, Var, COORD_VARS, NVARS, PARAM_VARS};
