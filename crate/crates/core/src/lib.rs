//! Certified numerics for explicit van der Corput bounds, explicit bounds on
//! the Riemann zeta-function inside the critical strip, and the constant chain
//! behind a Littlewood-type zero-free region.
//!
//! Every inequality is decided on outward-rounded enclosures
//! ([`DirectedReal`]), so a `Pass` verdict is a proof modulo the correctness of
//! MPFR and of the formulas themselves.

pub mod error;
pub mod expsum;
pub mod numerics;
pub mod report;
pub mod zeta_bounds;
pub mod zfr;

pub use error::{Error, Result};
pub use numerics::{DirectedReal, DEFAULT_PRECISION};
pub use report::{CheckItem, Verdict};
