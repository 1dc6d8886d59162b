//! Stationary descendent series of stable pairs on capped local curves,
//! computed in exact arithmetic, together with checkers for the identities
//! they satisfy.

pub mod algebra;
pub mod error;
pub mod fock;
pub mod hilbert;
pub mod partition;
pub mod reduction;
pub mod series;

pub use error::{Error, Result};
