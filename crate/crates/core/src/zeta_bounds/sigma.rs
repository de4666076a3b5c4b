//! The lines `sigma_k = 1 - k/(2^k - 2)`, the thresholds `T_k` and the
//! Euler-Maclaurin tail `G`.

use rug::{Integer, Rational};
use serde::Serialize;

use crate::error::{domain, usage, Result};
use crate::expsum::constants::big_k;
use crate::numerics::DirectedReal as DR;

/// Constant of the main theorem.
pub const THEOREM1_CONSTANT: &str = "1.546";

#[derive(Clone, Debug, Serialize)]
pub struct SigmaLine {
    pub k: u32,
    #[serde(serialize_with = "ser_int")]
    pub big_k: Integer,
    #[serde(serialize_with = "ser_rat")]
    pub sigma: Rational,
    #[serde(serialize_with = "ser_rat")]
    pub eta: Rational,
    /// `1/(2K - 2)`, the exponent of `t`.
    #[serde(serialize_with = "ser_rat")]
    pub exponent: Rational,
    /// `log T_k`; `T_k` itself overflows for large `k`.
    #[serde(skip)]
    pub log_t_k: DR,
}

fn ser_int<S: serde::Serializer>(v: &Integer, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn ser_rat<S: serde::Serializer>(v: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub fn eta_k(k: u32) -> Rational {
    let two_k_minus_2 = (Integer::from(1) << k) - 2u32;
    Rational::from((Integer::from(k), two_k_minus_2))
}

pub fn sigma_k(k: u32) -> Rational {
    Rational::from(1) - eta_k(k)
}

/// `theta_r = R / (rR - 2R + 2)`.
pub fn theta(r: u32) -> Rational {
    let rr = big_k(r);
    let den = Integer::from(&rr * r) - Integer::from(&rr * 2u32) + 2u32;
    Rational::from((rr, den))
}

/// `log T_k = (2.6134 (2^(k-1) - 1) + 2.8876 k) / (k - 3)`.
pub fn log_t_k(k: u32, prec: u32) -> DR {
    let kk = DR::integer(&big_k(k), prec);
    (DR::lit("2.6134", prec) * (kk - 1) + DR::lit("2.8876", prec) * k as i64) / (k as i64 - 3)
}

pub fn sigma_line(k: u32, prec: u32) -> Result<SigmaLine> {
    if k < 4 {
        return Err(usage(format!("sigma_k is defined for k >= 4, got {k}")));
    }
    let big = big_k(k);
    let exponent = Rational::from((Integer::from(1), Integer::from(&big * 2u32) - 2u32));
    Ok(SigmaLine {
        k,
        big_k: big,
        sigma: sigma_k(k),
        eta: eta_k(k),
        exponent,
        log_t_k: log_t_k(k, prec),
    })
}

/// `1.546 t^(1/(2^k - 2)) log t`.
pub fn theorem1_bound(k: u32, t: &DR) -> Result<DR> {
    let p = t.precision();
    if k < 4 || !t.certainly_ge(&DR::e(p).lower()) {
        return Err(usage("theorem1_bound needs k >= 4 and t >= e"));
    }
    let line = sigma_line(k, p)?;
    let lt = t.ln();
    Ok(DR::lit(THEOREM1_CONSTANT, p) * (DR::rational(&line.exponent, p) * &lt).exp() * lt)
}

/// Tail of the partial sum, `G(h, sigma)` with `log t0` supplied.
pub fn em_tail_bound_log(h: &DR, sigma: &DR, log_t0: &DR) -> Result<DR> {
    let p = h.precision().max(sigma.precision()).max(log_t0.precision());
    let h_min = (DR::int(2, p) * DR::pi(p)).recip();
    if !h.certainly_gt(&h_min) {
        return Err(domain(format!("em_tail_bound(h = {h}) needs h > 1/(2 pi)")));
    }
    let x = (DR::int(2, p) * h).recip();
    let inner = DR::one(p) - &x * x.cot();
    let root = (DR::one(p) + (log_t0 * -2).exp()).sqrt();
    let num = h + DR::ratio(1, 2, p) + DR::int(3, p) * root * inner;
    Ok(num / (sigma * (h.ln() + log_t0)).exp())
}

/// `((h t0)^-sigma)(h + 1/2 + 3 sqrt(1 + t0^-2)(1 - cot(1/(2h))/(2h)))`.
pub fn em_tail_bound(h: &DR, sigma: &DR, t0: &DR) -> Result<DR> {
    if !t0.certainly_positive() {
        return Err(domain("em_tail_bound needs t0 > 0"));
    }
    em_tail_bound_log(h, sigma, &t0.ln())
}
