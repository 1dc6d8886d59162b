//! Exact arithmetic: rationals, polynomials in the equivariant parameters,
//! and series and rational functions in `q`.

pub mod equivariant;
pub mod mpoly;
pub mod qrational;
pub mod qseries;
pub mod scalar;
pub mod upoly;

pub use equivariant::{s1, s2, s3, EquivariantRat, SPoly, Substitution};
pub use mpoly::MPoly;
pub use qrational::{laurent_coefficient, QRationalFn};
pub use qseries::QSeries;
pub use scalar::{int, rat, Field, Rational, Ring};
pub use upoly::UPoly;
