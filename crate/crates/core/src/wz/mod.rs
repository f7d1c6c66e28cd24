//! Hypergeometric terms and Wilf-Zeilberger pair verification.
//!
//! A WZ pair `(T, G)` with `G = c * T` for a rational certificate `c`
//! satisfies `sigma * (T(n+1,k) - T(n,k)) = G(n,k+1) - G(n,k)`. Dividing by
//! `T(n,k)` turns this into an identity between rational functions built
//! from the shift ratios of `T`, which [`certificate_residual`] reduces to
//! canonical form. Summing over `k` then telescopes to `sum_k T(n,k) = 1`,
//! which [`telescoping_sum_check`] confirms by direct exact summation.

mod affine;
mod fixture;
mod pair;
mod term;

pub use affine::AffineForm;
pub use fixture::{builtin_pair, builtin_pair_names, load_pair, parse_pair, FixtureError};
pub use pair::{
    certificate_residual, draw_pair_params, sum_over_k, telescoping_sum_check, verify_wz_pair,
    DrawOutcome, VerificationReport, WZPair, WzMutation,
};
pub use term::{BinomFactor, HyperTerm, TermError};
