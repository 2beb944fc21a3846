//! Exact sparse polynomial and fraction-field arithmetic in the variable q.
//!
//! - [`QPoly`]: sparse polynomial with arbitrary-precision integer coefficients
//!   and arbitrary-precision non-negative exponents. Exponents must be big:
//!   base-k fingerprints produce exponents on the order of d^(d+1), which
//!   overflows 64 bits well inside the supported range.
//! - [`QRat`]: reduced fraction of two `QPoly` values, the coefficients in
//!   Z(q) that show up when expanding in powers of `[n]_q`.
//! - [`ZNumerator`]: the numerator N(q,z) of a generating function over the
//!   common denominator (1-z)(1-qz)...(1-q^d z).
//! - q-integers [`qint`], q-factorials [`qfactorial`], Gaussian binomials
//!   [`qbinomial`], and the q-binomial series expansion [`series_coeffs`].

mod poly;
mod rat;
mod znum;

pub use poly::{qbinomial, qfactorial, qint, QPoly};
pub use rat::QRat;
pub use znum::{series_coeffs, ZNumerator};
