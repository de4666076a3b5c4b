//! Explicit bounds for `zeta(sigma_k + it)`.

pub mod certificate;
pub mod partial_sum;
pub mod sigma;
pub mod small_t;

pub use certificate::{
    alpha_k, beta_k, cd_constants, gamma_certificate, parse_table2, table2, uniform_branch_certificate,
    Table2Row, UniformBranch, ZetaBoundCertificate,
};
pub use partial_sum::{partial_sum, s_minus_one_zeta, zeta_abs_upper, zeta_abs_upper_with, ZetaUpper};
pub use sigma::{em_tail_bound, log_t_k, sigma_line, theorem1_bound, SigmaLine};
pub use small_t::{premise_checks, small_t_certificate, small_t_suite, SmallTCertificate};
