//! Exact computational algebra for the rings that carry zeta functions of
//! counting problems.
//!
//! * [`witt`]: the big Witt ring `W(Z) ⊂ W(Q)` of power series with constant
//!   term 1, its ghost map and Adams operations.
//! * [`almkvist`]: Almkvist's ring `W0(Z)` of endomorphism classes, with the
//!   maps `L` into `W(Z)` and `Tr` into `H(Z)`.
//! * [`hadamard`]: the Hadamard biring `H(Z)` of integral linear recursive
//!   sequences.
//! * [`motive`]: `Z[L]`, the ring of motives of torified varieties, with its
//!   counting measures, lambda and biring structures.
//! * [`variety`]: brute-force point counting over finite fields and Weil zeta
//!   functions.
//! * [`dynamics`]: finite dynamical systems, Artin-Mazur zeta functions and
//!   homology actions of Morse-Smale type.
//!
//! Everything is exact: arbitrary precision integers and rationals, no
//! floating point.

pub mod almkvist;
pub mod dynamics;
pub mod error;
pub mod exact;
pub mod hadamard;
pub mod motive;
pub mod variety;
pub mod witt;

pub use error::{Error, Result};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
