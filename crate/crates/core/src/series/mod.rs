//! Capped stationary series, their coefficients, and the identities they
//! satisfy.

pub mod cap;
pub mod coefficients;
pub mod identities;

pub use cap::{assemble_f, c_r, cap_series, dt_series, closed_form_f, CapSeries};
pub use coefficients::{a_r, a_r_vertex, b_r, b_r_rubber};
pub use identities::{run_suite, IdentityReport, SUITES};
