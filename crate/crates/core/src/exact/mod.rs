//! Exact arithmetic substrate: polynomials, truncated series, integer
//! matrices and the classical algorithms built on them.

pub mod cyclotomic;
pub mod hankel;
pub mod matrix;
pub mod pade;
pub mod poly;
pub mod recurrence;
pub mod series;

pub use cyclotomic::{cyclotomic, euler_phi};
pub use hankel::{hankel_rank_factor, HankelFactor};
pub use matrix::{kronecker, rev_char_poly, IntMatrix};
pub use pade::pade;
pub use poly::{IntPoly, Poly, RatPoly};
pub use recurrence::{berlekamp_massey, berlekamp_massey_int};
pub use series::{series_exp, series_log, TruncSeries};
