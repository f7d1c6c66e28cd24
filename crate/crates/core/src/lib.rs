//! Exact verification of binomial-coefficient and harmonic-number identities.
//!
//! The crate is layered bottom-up:
//!
//! - [`exact`]: rationals, jets, binomials, harmonic numbers.
//! - [`polyrat`]: multivariate polynomials, canonical rational functions and
//!   the expression parser used to enter certificates.
//! - [`wz`]: hypergeometric terms, shift ratios and symbolic verification of
//!   WZ pairs.
//! - [`special`]: Legendre polynomials and half-integer binomial lemmas.
//! - [`catalog`]: the identity catalog, the jet derivation oracle and the
//!   suite runner.
//! - [`cli`]: the command-line front end.

pub mod catalog;
pub mod cli;
pub mod draw;
pub mod exact;
pub mod polyrat;
pub mod report;
pub mod special;
pub mod wz;
