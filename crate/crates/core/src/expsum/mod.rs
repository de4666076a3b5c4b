//! Explicit exponential-sum bounds from the van der Corput processes and a
//! brute-force oracle to test them against.

pub mod aprocess;
pub mod bounds;
pub mod constants;
pub mod oracle;
pub mod sweep;

pub use aprocess::{a_process_check, AProcessCheck};
pub use bounds::{
    kth_derivative_bound, kuzmin_landau, kuzmin_landau_general, second_derivative_ab,
    second_derivative_bound, trivial_bound, uniform_kth_bound, weighted_power_sum_bound,
    DerivTestParams, SecondDerivBound,
};
pub use constants::{
    kth_derivative_constants, third_derivative_constants, uniform_kth_constants,
    DerivTestConstants, ThirdDerivConstants, UniformCertificate,
};
pub use oracle::{brute_force_expsum, PhaseFunction};
