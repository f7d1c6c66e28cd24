//! Sparse multivariate polynomials and canonical rational functions over the
//! rationals, with a small infix expression language for entering them.
//!
//! Variables are ordered globally: `n, k, j, alpha, beta, s, t, p` first,
//! then any other name alphabetically. Monomials are compared graded
//! lexicographically under that order, so a normalized polynomial has one
//! stored form and one rendering.

mod expr;
mod gcd;
mod poly;
mod ratfunc;
mod var;

pub use expr::{parse_expr, Expr, ParseError};
pub use gcd::gcd;
pub use poly::{Monomial, MultiPoly};
pub use ratfunc::{to_ratfunc, Assignment, RatFunc, RatFuncError};
pub use var::Var;
