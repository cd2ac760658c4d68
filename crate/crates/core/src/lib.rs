//! Exact-arithmetic polyhedral computations for the cones of
//! quasi-semi-metrics (QMET_n), oriented multicuts (OMCUT_n), oriented cuts
//! (OCUT_n) and hypermetric quasi-semi-metrics (QHYP_n): generator families,
//! double description in both directions, symmetry orbits under
//! Z2 x Sym(n), skeleton/ridge graphs, and executable checks for the known
//! structure theorems on these cones.

pub mod bits;
pub mod facegraphs;
mod error;
pub mod exact;
pub mod dualdesc;
pub mod generators;
pub(crate) mod linalg;
pub mod io;
pub mod reference;
pub mod symmetry;
pub mod verifiers;

pub use error::{Error, Result};
pub use exact::{ConeVector, Rational, SymVector};
pub use generators::ConeDescription;
