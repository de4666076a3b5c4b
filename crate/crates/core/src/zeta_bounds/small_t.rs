//! The range `3 <= t <= T_k`: convexity between the half-line and the
//! 1-line, in two stages.

use serde::Serialize;

use crate::error::{usage, Error, Result};
use crate::numerics::{ComplexInterval as CI, DirectedReal as DR};
use crate::report::CheckItem;

use super::partial_sum::s_minus_one_zeta;
use super::sigma::{log_t_k, THEOREM1_CONSTANT};

pub const Q0: &str = "1.31";
pub const STAGE1_T0: i64 = 3;
pub const STAGE2_LOG_T0: &str = "8.7";
pub const STAGE1_A_BOUND: &str = "1.4747";
pub const STAGE2_A_BOUND: &str = "1.0001";
pub const HALF_LINE_CONSTANT: &str = "0.618";

/// `A(t0) = (2.31^2/t0^2 + 1)^(23/42) (1 + log(2.31^2/t0^2 + 1) / (2 log t0))`.
pub fn a_of_t0_log(log_t0: &DR) -> DR {
    let p = log_t0.precision();
    let q = DR::lit("2.31", p).sqr() * (log_t0 * -2).exp() + 1;
    let ln_q = q.ln();
    (DR::ratio(23, 42, p) * &ln_q).exp() * (DR::one(p) + ln_q / (log_t0 * 2))
}

pub fn a_of_t0(t0: &DR) -> DR {
    a_of_t0_log(&t0.ln())
}

/// `log t_1(k) = ((6K - 6) log(1.546 / A) - 6k log 0.618) / (k - 3)`.
pub fn log_t1(k: u32, a: &DR) -> DR {
    let p = a.precision();
    let kk = DR::integer(&crate::expsum::constants::big_k(k), p);
    let c = DR::lit(THEOREM1_CONSTANT, p);
    let half = DR::lit(HALF_LINE_CONSTANT, p);
    ((kk * 6 - 6) * (c / a).ln() - half.ln() * (6 * k as i64)) / (k as i64 - 3)
}

#[derive(Clone, Debug, Serialize)]
pub struct SmallTCertificate {
    pub k_max: u32,
    pub items: Vec<CheckItem>,
    /// Values of `k` at which stage 1 fails to reach `exp(8.7)`.
    pub stage1_failures: Vec<u32>,
    pub stage2_failures: Vec<u32>,
}

impl SmallTCertificate {
    pub fn passed(&self) -> bool {
        self.items.iter().all(CheckItem::passed)
    }
}

/// Checks both stages for `4 <= k <= k_max`, plus the coefficient comparison
/// that makes stage 2 hold for every `k`.
pub fn small_t_suite(k_max: u32, prec: u32) -> Result<SmallTCertificate> {
    if k_max < 4 {
        return Err(usage("small-t certificate needs k_max >= 4"));
    }
    let p = prec;
    let a1 = a_of_t0(&DR::int(STAGE1_T0, p));
    let log_t0_2 = DR::lit(STAGE2_LOG_T0, p);
    let a2 = a_of_t0_log(&log_t0_2);
    let mut items = vec![
        CheckItem::le("A(3)", &a1, STAGE1_A_BOUND),
        CheckItem::le("A(exp(8.7))", &a2, STAGE2_A_BOUND),
    ];
    let a1_used = DR::lit(STAGE1_A_BOUND, p);
    let a2_used = DR::lit(STAGE2_A_BOUND, p);
    let mut stage1_failures = Vec::new();
    let mut stage2_failures = Vec::new();
    let mut worst1: Option<DR> = None;
    let mut worst2: Option<DR> = None;
    for k in 4..=k_max {
        // Stage 1 with the actual enclosure of A(3), stage 2 with the stated bound.
        let l1 = log_t1(k, &a1.upper());
        if !l1.certainly_ge(&log_t0_2) {
            stage1_failures.push(k);
        }
        worst1 = Some(worst1.map_or(l1.clone(), |w| w.min(&l1)));
        let margin = log_t1(k, &a2_used) - log_t_k(k, p);
        if !margin.certainly_nonneg() {
            stage2_failures.push(k);
        }
        worst2 = Some(worst2.map_or(margin.clone(), |w| w.min(&margin)));
    }
    items.push(CheckItem::holds(
        &format!("stage 1: log t_1(k) >= 8.7 for 4 <= k <= {k_max} (A = A(3))"),
        ">= 8.7",
        worst1.as_ref().unwrap(),
        stage1_failures.is_empty(),
    ));
    // Stage 1 as stated, with A(3) replaced by its claimed bound.
    let stated_ok = (4..=k_max).all(|k| log_t1(k, &a1_used).certainly_ge(&log_t0_2));
    items.push(CheckItem::holds(
        &format!("stage 1 with A = 1.4747: log t_1(k) >= 8.7 for 4 <= k <= {k_max}"),
        ">= 8.7",
        &log_t1(k_max, &a1_used),
        stated_ok,
    ));
    items.push(CheckItem::holds(
        &format!("stage 2: log t_1(k) - log T_k >= 0 for 4 <= k <= {k_max}"),
        ">= 0",
        worst2.as_ref().unwrap(),
        stage2_failures.is_empty(),
    ));
    let c = DR::lit(THEOREM1_CONSTANT, p);
    items.push(CheckItem::ge(
        "stage 2 all k: 6 log(1.546/1.0001)",
        &(DR::int(6, p) * (&c / &a2_used).ln()),
        "2.6134",
    ));
    items.push(CheckItem::ge(
        "stage 2 all k: -6 log 0.618",
        &(-(DR::lit(HALF_LINE_CONSTANT, p).ln() * 6)),
        "2.8876",
    ));
    Ok(SmallTCertificate {
        k_max,
        items,
        stage1_failures,
        stage2_failures,
    })
}

/// The certificate for a single `k`; a failed stage is an error.
pub fn small_t_certificate(k: u32, prec: u32) -> Result<SmallTCertificate> {
    if k < 4 {
        return Err(usage("small-t certificate needs k >= 4"));
    }
    let mut cert = small_t_suite(k, prec)?;
    cert.items.retain(|i| !i.name.starts_with("stage 1 with"));
    if cert.stage1_failures.contains(&k) {
        return Err(Error::CertificateFailure {
            name: format!("small-t stage 1, k = {k}"),
            detail: "t_1(k) < exp(8.7) with t0 = 3".into(),
        });
    }
    if cert.stage2_failures.contains(&k) {
        return Err(Error::CertificateFailure {
            name: format!("small-t stage 2, k = {k}"),
            detail: "t_1(k) < T_k with t0 = exp(8.7)".into(),
        });
    }
    Ok(cert)
}

#[derive(Clone, Debug, Serialize)]
pub struct PremiseCheck {
    pub item: CheckItem,
    pub cells: usize,
}

/// Verifies `|(s - 1) zeta(s)| < c |Q0 + s|^e log|Q0 + s|` on `s = sigma + it`,
/// `0 <= t <= 3` (the bound is symmetric in `t`), by adaptive subdivision.
pub fn premise_check(name: &str, sigma: &DR, c: &DR, e: &DR, prec: u32) -> Result<PremiseCheck> {
    let q0 = DR::lit(Q0, prec);
    let rhs = |t: &DR| {
        let m = CI::new(&q0 + sigma, t.clone()).abs();
        c * m.pow(e) * m.ln()
    };
    let mut stack = vec![(DR::zero(prec), DR::int(3, prec), 0u32)];
    let mut cells = 0usize;
    let mut worst: Option<DR> = None;
    let mut ok = true;
    while let Some((a, b, depth)) = stack.pop() {
        let cell = a.hull(&b);
        let lhs = s_minus_one_zeta(sigma, &cell, 10, 6)?.abs();
        let r = rhs(&cell);
        let margin = &r - &lhs;
        if margin.certainly_positive() {
            cells += 1;
            worst = Some(worst.map_or(margin.clone(), |w| w.min(&margin)));
        } else if depth >= 40 {
            ok = false;
            cells += 1;
            worst = Some(worst.map_or(margin.clone(), |w| w.min(&margin)));
        } else {
            let mid = DR::point(cell.mid());
            stack.push((mid.clone(), b, depth + 1));
            stack.push((a, mid, depth + 1));
        }
    }
    let w = worst.unwrap_or_else(|| DR::zero(prec));
    Ok(PremiseCheck {
        item: CheckItem::holds(name, "min(rhs - lhs) > 0", &w, ok && w.certainly_positive()),
        cells,
    })
}

/// Both premise checks for `|t| <= 3`.
pub fn premise_checks(prec: u32) -> Result<Vec<PremiseCheck>> {
    let p = prec;
    Ok(vec![
        premise_check(
            "|(s-1) zeta(s)| < 0.618 |1.31+s|^(7/6) log|1.31+s|, s = 1/2 + it, |t| <= 3",
            &DR::ratio(1, 2, p),
            &DR::lit(HALF_LINE_CONSTANT, p),
            &DR::ratio(7, 6, p),
            p,
        )?,
        premise_check(
            "|(s-1) zeta(s)| < |1.31+s| log|1.31+s|, s = 1 + it, |t| <= 3",
            &DR::one(p),
            &DR::one(p),
            &DR::one(p),
            p,
        )?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: u32 = 256;

    #[test]
    fn a_at_the_two_stages() {
        let a1 = a_of_t0(&DR::int(3, P));
        // Independent evaluation: (1 + 2.31^2/9)^(23/42) (1 + log(1 + 2.31^2/9) / (2 log 3)).
        let q: f64 = 1.0 + 2.31f64 * 2.31 / 9.0;
        let want = q.powf(23.0 / 42.0) * (1.0 + q.ln() / (2.0 * 3f64.ln()));
        assert!((a1.mid_f64() - want).abs() < 1e-14);
        let a2 = a_of_t0_log(&DR::lit("8.7", P));
        assert!(a2.certainly_le(&DR::lit("1.0001", P)));
    }

    #[test]
    fn stage_two_reaches_every_threshold() {
        let c = small_t_suite(60, P).unwrap();
        assert!(c.stage2_failures.is_empty());
        assert!(c.items.iter().filter(|i| i.name.starts_with("stage 2")).all(|i| i.passed()));
    }

    #[test]
    fn stage_one_with_computed_a3_only_covers_k4() {
        let c = small_t_suite(12, P).unwrap();
        assert_eq!(c.stage1_failures, (5..=12).collect::<Vec<_>>());
        assert!(small_t_certificate(4, P).is_ok());
        assert!(matches!(small_t_certificate(5, P), Err(Error::CertificateFailure { .. })));
    }

    #[test]
    fn premises_near_the_real_axis() {
        for c in premise_checks(128).unwrap() {
            assert!(c.item.passed(), "{:?}", c.item);
        }
    }
}
