//! Legendre polynomials and half-integer binomial reductions.

mod halfint;
mod legendre;

pub use halfint::{central_binomial, half_shift_binom, half_shift_diag, CentralBinomials};
pub use legendre::{
    legendre, legendre_inversion_check, legendre_inversion_rhs, legendre_new_repr,
    legendre_product_form, legendre_table, DomainError,
};
