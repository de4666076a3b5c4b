//! The constant chain behind the Littlewood-type zero-free region
//! `sigma > 1 - log log t / (21.233 log t)`, and comparison with other
//! published regions.

pub mod chain;
pub mod lemmas;
pub mod regions;
pub mod smoothing;

use serde::Serialize;

use crate::numerics::DirectedReal as DR;

pub use chain::{large_t_chain, main_inequality_large_t, main_inequality_small_t, small_t_chain, ZfrChain};
pub use lemmas::{
    log_zeta_integral_bound, zero_count_bound, zero_sum_bound_large_eta, zero_sum_bound_small_eta,
    IntegralBranch, ZeroSumBound,
};
pub use regions::{crossovers, parse_catalog, region_width, standard_regions, RegionFormula, RegionSpec};
pub use smoothing::{c_of_r, smoothing_certificate, smoothing_constants, SmoothingConstants};

/// The non-negative trigonometric polynomial of degree 46.
#[derive(Clone, Debug, Serialize)]
pub struct TrigPolyData {
    pub d: u32,
    pub b0: String,
    pub b1: String,
    pub b: String,
    /// `(1/b) sum b_j log(jt) <= L_1 - log_weight_constant`; needs all of
    /// `b_2..b_46`, so it is taken as given.
    pub log_weight_constant: String,
}

impl Default for TrigPolyData {
    fn default() -> Self {
        TrigPolyData {
            d: 46,
            b0: "1".into(),
            b1: "1.74708744081848".into(),
            b: "3.57440943022073".into(),
            log_weight_constant: "3.377".into(),
        }
    }
}

impl TrigPolyData {
    pub fn b0(&self, p: u32) -> DR {
        DR::lit(&self.b0, p)
    }
    pub fn b1(&self, p: u32) -> DR {
        DR::lit(&self.b1, p)
    }
    pub fn b(&self, p: u32) -> DR {
        DR::lit(&self.b, p)
    }
    pub fn log_weight(&self, p: u32) -> DR {
        DR::lit(&self.log_weight_constant, p)
    }
}

/// Fixed inputs of the chain.
pub mod consts {
    pub const ALPHA: &str = "0.13913";
    pub const M1: &str = "0.0470978";
    pub const LOG_T0: &str = "170.2";
    pub const LOG_T1: &str = "967.6";
    pub const H_RH: &str = "5.45e8";
    pub const A_FR: &str = "76.2";
    pub const B_FR: &str = "4.45";
    pub const R: &str = "441.729";
    pub const R_PRIME: &str = "350.588";
    pub const E: &str = "30.95461";
    pub const REGION_CONSTANT: &str = "21.233";
    pub const THEOREM1: &str = "1.546";
    /// Height above which the lemmas on zero sums apply.
    pub const LEMMA_T0: &str = "3e12";
    pub const DELTA_SMALL: &str = "0.90114";
    pub const DELTA_LARGE: &str = "1.2185";
    /// Counting-function constants: `|S(t)| <= 0.11 log t + 0.29 log log t + 2.305`.
    pub const S_LOG: &str = "0.11";
    pub const S_LOGLOG: &str = "0.29";
    pub const S_CONST: &str = "2.305";
}

/// `L_1 = log(D t + 1)` from `log t`, without forming `t`.
pub fn l1_of_log_t(log_t: &DR, d: u32) -> DR {
    let p = log_t.precision();
    log_t + (DR::int(d as i64, p) + (-log_t).exp()).ln()
}

pub fn l2_of_log_t(log_t: &DR, d: u32) -> DR {
    l1_of_log_t(log_t, d).ln()
}

/// `eta_k = k / (2^k - 2)`.
pub fn eta_k(k: u32, p: u32) -> DR {
    DR::int(k as i64, p) / (DR::int(2, p).powi(k as i64) - 2)
}
