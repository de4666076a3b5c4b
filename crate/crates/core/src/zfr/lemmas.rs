//! Zero-counting and zero-sum lemmas, and the bound for the `cosh^-2`-weighted
//! integral of `log |zeta|`, with the coefficient assemblies behind them.

use rug::ops::Pow;
use rug::{Float, Integer, Rational};

use crate::error::{domain, Result};
use crate::numerics::{max_on_ray, DirectedReal as DR, RayMaxProblem};
use crate::report::CheckItem;

use super::consts;

fn lit(s: &str, p: u32) -> DR {
    DR::lit(s, p)
}

fn log_t_at_least(log_t: &DR, t: &str) -> bool {
    log_t.lo() >= lit(t, log_t.precision()).ln().lo()
}

/// `lo <= x <= hi` up to the rounding of the bounds themselves.
fn in_range(x: &DR, lo: &DR, hi: &DR) -> bool {
    x.lo() >= lo.lo() && x.hi() <= hi.hi()
}

/// Exact value of a decimal literal.
fn dec(s: &str) -> Rational {
    let (int, frac) = s.split_once('.').unwrap_or((s, ""));
    let digits: Integer = format!("{int}{frac}").parse().expect("decimal literal");
    Rational::from((digits, Integer::from(10).pow(frac.len() as u32)))
}

fn exact(name: &str, ok: bool, p: u32) -> CheckItem {
    CheckItem::holds(name, "exact", &DR::zero(p), ok)
}

/// `N(t, eta) <= 5.9975 eta^(3/2) log t + 6.12 + ((2/3) log log t - log eta) / 1.879`
/// for `0 < eta <= 2/7` and `t >= 100`, given `log t`.
pub fn zero_count_bound(log_t: &DR, eta: &DR) -> Result<DR> {
    let p = log_t.precision();
    if !log_t_at_least(log_t, "100") {
        return Err(domain("N(t, eta) needs t >= 100"));
    }
    if !(eta.certainly_positive() && in_range(eta, eta, &DR::ratio(2, 7, p))) {
        return Err(domain("N(t, eta) needs 0 < eta <= 2/7"));
    }
    Ok(lit("5.9975", p) * eta.pow_ratio(3, 2) * log_t
        + lit("6.12", p)
        + (DR::ratio(2, 3, p) * log_t.ln() - eta.ln()) / lit("1.879", p))
}

/// Where the displayed coefficients of the zero-counting bound come from:
/// zeros counted at `s = 1 + 0.6421 eta` with weight `0.3758 / eta`, the
/// Ford-Richert bound at `sigma = 1 - 1.8579 eta`, and `zeta(1 + 3.1421 eta)`.
pub fn zero_count_provenance(prec: u32) -> Result<Vec<CheckItem>> {
    let p = prec;
    let w = lit("0.3758", p);
    let (a, b) = (lit(consts::A_FR, p), lit(consts::B_FR, p));
    let five_w = &w * 5;
    let r = lit("3.1421", p);
    let gamma = DR::euler_gamma(p);
    // 3.1421 gamma eta - log 3.1421 is increasing, so its sup over (0, 2/7] sits at 2/7;
    // certified on the ray x = 1/eta >= 7/2.
    let (rr, gg) = (r.clone(), gamma.clone());
    let f = move |x: &DR| &rr * &gg / x - rr.ln();
    let f2 = f.clone();
    let prob = RayMaxProblem::new(f, Float::with_val(p, 3.5), Float::with_val(p, 1000), f2);
    let sup = max_on_ray(&prob, 256)?.bound;
    let six = (&w * lit("0.6421", p)).recip() + (a.ln() + lit("-0.6267", p)) / &five_w;
    Ok(vec![
        CheckItem::le("sup over 0 < eta <= 2/7 of 3.1421 gamma eta - log 3.1421", &sup, "-0.6267"),
        CheckItem::le(
            "eta^(3/2) log t coefficient (1.8579)^(3/2) B / (5 * 0.3758)",
            &(lit("1.8579", p).pow_ratio(3, 2) * &b / &five_w),
            "5.9975",
        ),
        exact("5 * 0.3758 = 1.879", dec("0.3758") * 5u32 == dec("1.879"), p),
        CheckItem::le("1/(0.6421 * 0.3758) + (log A - 0.6267)/1.879", &six, "6.12"),
        exact(
            "radius split 3.1421 = 2.5 + 0.6421 and 1.8579 = 2.5 - 0.6421",
            dec("2.5") + dec("0.6421") == dec("3.1421") && dec("2.5") - dec("0.6421") == dec("1.8579"),
            p,
        ),
    ])
}

/// A bound `sum_{|1 + it - rho| >= eta} |1 + it - rho|^-2 <= value - n_coefficient * N(t, eta)`.
#[derive(Clone, Debug)]
pub struct ZeroSumBound {
    pub value: DR,
    pub n_coefficient: DR,
}

/// The small-`eta` zero sum: `0 < eta <= 2/7`, `t >= 3e12`.
pub fn zero_sum_bound_small_eta(log_t: &DR, eta: &DR) -> Result<ZeroSumBound> {
    let p = log_t.precision();
    if !log_t_at_least(log_t, consts::LEMMA_T0) {
        return Err(domain("zero sum needs t >= 3e12"));
    }
    if !(eta.certainly_positive() && in_range(eta, eta, &DR::ratio(2, 7, p))) {
        return Err(domain("zero sum needs 0 < eta <= 2/7"));
    }
    let ie2 = eta.sqr().recip();
    let value = (lit("23.99", p) / eta.sqrt() - lit("40.385", p)) * log_t
        + (lit("0.3548", p) * &ie2 + lit("1.2031", p)) * log_t.ln()
        - lit("40.236", p)
        + lit("5.86", p) * &ie2
        - eta.ln() * &ie2 / lit("1.879", p);
    Ok(ZeroSumBound { value, n_coefficient: ie2 })
}

/// `nu = (eta^-2 + (1 - eta)^-2) / 2`.
pub fn nu(eta: &DR) -> DR {
    (eta.sqr().recip() + (DR::one(eta.precision()) - eta).sqr().recip()) / 2
}

/// The large-`eta` zero sum: `2/7 <= eta <= 1/2`, `t >= 3e12`.
pub fn zero_sum_bound_large_eta(log_t: &DR, eta: &DR) -> Result<ZeroSumBound> {
    let p = log_t.precision();
    if !log_t_at_least(log_t, consts::LEMMA_T0) {
        return Err(domain("zero sum needs t >= 3e12"));
    }
    if !in_range(eta, &DR::ratio(2, 7, p), &DR::ratio(1, 2, p)) {
        return Err(domain("zero sum needs 2/7 <= eta <= 1/2"));
    }
    let v = nu(eta);
    let value = (lit("0.5576", p) + lit("0.6079", p) * &v) * log_t
        + (lit("0.7813", p) + lit("0.58", p) * &v) * log_t.ln()
        + lit("5.732", p)
        + lit("3.898", p) * &v;
    Ok(ZeroSumBound {
        value,
        n_coefficient: eta.sqr().recip(),
    })
}

/// The counting-function constants, doubled and quadrupled as they enter
/// the split of the zero sum.
struct CountingInputs {
    s_log: DR,
    s_loglog: DR,
    s_const: DR,
    s_const_shifted: DR,
}

impl CountingInputs {
    fn new(p: u32) -> Self {
        CountingInputs {
            s_log: lit(consts::S_LOG, p),
            s_loglog: lit(consts::S_LOGLOG, p),
            s_const: lit(consts::S_CONST, p),
            // 2.305 + 0.11 delta/t + 0.29 delta/(t log t) for t >= 10^4.
            s_const_shifted: lit("2.306", p),
        }
    }
}

/// Recomputes the constants of the small-`eta` lemma from the split with
/// `delta = 0.90114`, `eta_0 = 2/7`, `t_0 = 3e12`.
pub fn small_eta_rederivation(prec: u32) -> Vec<CheckItem> {
    let p = prec;
    let ci = CountingInputs::new(p);
    let delta = lit(consts::DELTA_SMALL, p);
    let eta0 = DR::ratio(2, 7, p);
    let t0 = lit(consts::LEMMA_T0, p);
    let pi = DR::pi(p);
    let two_pi = &pi * 2;
    let ln2pi = two_pi.ln();
    let id2 = delta.sqr().recip();
    let nu0 = nu(&eta0);
    let ie02 = eta0.sqr().recip();
    let n_const = lit("6.12", p);
    let n_den = lit("1.879", p);

    let a = &ci.s_log * 4 * &id2 + (delta.recip() * 2 + t0.recip()) / &two_pi
        + &nu0 * (&delta / &pi + &ci.s_log * 2)
        - lit("23.99", p) / eta0.sqrt();
    let b = &ci.s_loglog * 4 * &id2 + &ci.s_loglog * 2 * &nu0 - DR::ratio(2, 3, p) / &n_den * &ie02;
    let n_c = &n_const - (&n_den * 2).recip();
    let c = (&ci.s_const_shifted * 2 + &ci.s_const * 2) * &id2
        + (DR::one(p) + &delta / &t0) / (&two_pi * &t0)
        - delta.ln() / &t0
        - &ln2pi / (&pi * &delta)
        + &nu0 * (&delta / &pi * (&delta / &t0 - &ln2pi) + &ci.s_const * 2)
        - lit("5.86", p) * &ie02
        + eta0.ln() * &ie02 / &n_den
        + lit("0.00014", p);
    vec![
        CheckItem::le("small-eta: 2.29 + 0.2/14 (counting constant)", &(lit("2.29", p) + lit("0.2", p) / 14), "2.305"),
        exact("small-eta: 4 * 5.9975 = 23.99 (eta^-1/2 log t)", dec("5.9975") * 4u32 == dec("23.99"), p),
        CheckItem::le("small-eta: (2/3)/1.879 (eta^-2 log log t)", &(DR::ratio(2, 3, p) / &n_den), "0.3548"),
        CheckItem::le("small-eta: 6.12 - 1/(2 * 1.879) (eta^-2)", &n_c, "5.86"),
        CheckItem::le("small-eta: log t constant A''", &a, "-40.385"),
        CheckItem::le("small-eta: log log t constant B''", &b, "1.2031"),
        CheckItem::le("small-eta: constant C''", &c, "-40.236"),
    ]
}

/// Recomputes the constants of the large-`eta` lemma with `delta = 1.2185`.
pub fn large_eta_rederivation(prec: u32) -> Vec<CheckItem> {
    let p = prec;
    let ci = CountingInputs::new(p);
    let delta = lit(consts::DELTA_LARGE, p);
    let t0 = lit(consts::LEMMA_T0, p);
    let pi = DR::pi(p);
    let two_pi = &pi * 2;
    let ln2pi = two_pi.ln();
    let id2 = delta.sqr().recip();
    let a0 = &ci.s_log * 4 * &id2 + (delta.recip() * 2 + t0.recip()) / &two_pi;
    let a1 = &delta / &pi + &ci.s_log * 2;
    let b0 = &ci.s_loglog * 4 * &id2;
    // -log(delta)/t_0 is negative for delta > 1 and is left out.
    let c0 = (&ci.s_const_shifted * 2 + &ci.s_const * 2) * &id2
        + (DR::one(p) + &delta / &t0) / (&two_pi * &t0)
        - &ln2pi / (&pi * &delta)
        + lit("0.00014", p);
    let c1 = &delta / &pi * (&delta / &t0 - &ln2pi) + &ci.s_const * 2;
    vec![
        CheckItem::le("large-eta: log t constant", &a0, "0.5576"),
        CheckItem::le("large-eta: log t coefficient of nu", &a1, "0.6079"),
        CheckItem::le("large-eta: log log t constant", &b0, "0.7813"),
        exact("large-eta: log log t coefficient of nu, 2 * 0.29 = 0.58", dec(consts::S_LOGLOG) * 2u32 == dec("0.58"), p),
        CheckItem::le("large-eta: constant", &c0, "5.732"),
        CheckItem::le("large-eta: coefficient of nu", &c1, "3.898"),
    ]
}

#[derive(Clone, Debug, PartialEq)]
pub enum IntegralBranch {
    /// On the line `sigma_k`, from the bound `1.546 t^(1/(2^k - 2)) log t`.
    KLine { k: u32 },
    /// Between `1/2` and `5/7` by convexity, at `sigma = 1 - eta`.
    Convexity { eta: DR },
}

/// Upper bound for `(1/2) int log|zeta(sigma + it + iau)| cosh^-2(u) du`.
pub fn log_zeta_integral_bound(branch: &IntegralBranch, log_t: &DR, a: &DR) -> Result<DR> {
    let p = log_t.precision();
    if !(a.certainly_positive() && in_range(a, a, &DR::ratio(1, 2, p))) {
        return Err(domain("integral bound needs 0 < a <= 1/2"));
    }
    if !log_t_at_least(log_t, consts::LEMMA_T0) {
        return Err(domain("integral bound needs t >= 3e12"));
    }
    let ll = log_t.ln();
    match branch {
        IntegralBranch::KLine { k } => {
            if *k < 4 {
                return Err(domain("k-line integral bound needs k >= 4"));
            }
            if !log_t.certainly_ge(&(DR::ln2(p) * *k as i64)) {
                return Err(domain("k-line integral bound needs t >= 2^k"));
            }
            let den = DR::int(2, p).powi(*k as i64) - 2;
            Ok(log_t / den + ll + lit(consts::THEOREM1, p).ln())
        }
        IntegralBranch::Convexity { eta } => {
            if !in_range(eta, &DR::ratio(2, 7, p), &DR::ratio(1, 2, p)) {
                return Err(domain("convexity integral bound needs 2/7 <= eta <= 1/2"));
            }
            Ok((eta * 8 - 1) / 18 * log_t + ll + lit("1.659", p) - lit("4.279", p) * eta)
        }
    }
}

/// `log C_1` and `log C_2` of the convexity bound `|zeta(s)| <= C_1 C_2^sigma t^((7 - 8 sigma)/18) log t`.
pub fn convexity_constants(prec: u32) -> (DR, DR) {
    let p = prec;
    let q = lit("1.31", p);
    let t0 = lit("1e12", p);
    let half_line = lit("0.618", p);
    let k4 = lit(consts::THEOREM1, p);
    let u = ((q + DR::ratio(5, 7, p)) / &t0).sqr() + 1;
    let log_c1 = half_line.ln() * DR::ratio(10, 3, p) - k4.ln() * DR::ratio(7, 3, p)
        + u.ln() * DR::ratio(7, 12, p)
        + (DR::one(p) + u.ln() / (t0.ln() * 2)).ln();
    let log_c2 = (k4 / half_line).ln() * DR::ratio(14, 3, p);
    (log_c1, log_c2)
}

pub fn convexity_rederivation(prec: u32) -> Vec<CheckItem> {
    let p = prec;
    let (l1, l2) = convexity_constants(p);
    let mut items = vec![
        CheckItem::le("convexity: log C1 + log C2", &(&l1 + &l2), "1.659"),
        CheckItem::ge("convexity: log C2", &l2, "4.279"),
    ];
    for (n, d) in [(2, 7), (1, 2)] {
        let eta = DR::ratio(n, d, p);
        let slack = lit("1.659", p) - lit("4.279", p) * &eta - (&l1 + (DR::one(p) - &eta) * &l2);
        items.push(CheckItem::ge(
            &format!("convexity: 1.659 - 4.279 eta - log(C1 C2^(1 - eta)) at eta = {n}/{d}"),
            &slack,
            "0",
        ));
    }
    items
}

/// The error terms in the integral lemma are negative at the corner
/// `t_0 = 100`, `a = 1/2`, `t = 3 t_0`, where they are largest.
pub fn integral_lemma_error_items(prec: u32) -> Vec<CheckItem> {
    let p = prec;
    let t0 = DR::int(100, p);
    let a = DR::ratio(1, 2, p);
    let t = &t0 * 3;
    let first = &t0 * 8 * (&t0 * 4 + 1).ln() / (&t0 * 2).exp();
    // int_X^inf u^3 e^(-2u) du = e^(-2X)(X^3/2 + 3X^2/4 + 3X/4 + 3/8) at X = 2 t_0 / a = 400.
    let x = DR::int(400, p);
    let tail = (-(&x * 2)).exp() * (x.powi(3) / 2 + x.sqr() * 3 / 4 + &x * 3 / 4 + DR::ratio(3, 8, p));
    let last = (-(&t / &a)).exp() - a.sqr() / (t.sqr() * 2 * t.ln());
    vec![
        CheckItem::lt("integral lemma: 8 t0 log(4 t0 + 1) / e^(2 t0)", &first, "1"),
        CheckItem::lt("integral lemma: (40/3) int_400^inf u^3 e^(-2u) du", &(tail * 40 / 3), "1e-100"),
        CheckItem::lt("integral lemma: e^(-t/a) - a^2/(2 t^2 log t)", &last, "0"),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::all_pass;

    const P: u32 = 256;

    #[test]
    fn zero_count_at_two_sevenths() {
        let eta = DR::ratio(2, 7, P);
        let lt = DR::int(1000, P);
        let v = zero_count_bound(&lt, &eta).unwrap();
        let e = 2.0f64 / 7.0;
        let want = 5.9975 * e.powf(1.5) * 1000.0 + 6.12 + (2.0 / 3.0 * 1000f64.ln() - e.ln()) / 1.879;
        assert!((v.mid_f64() - want).abs() < 1e-9 * want);
    }

    #[test]
    fn zero_count_diverges_as_eta_shrinks() {
        let lt = DR::int(50, P);
        let mut prev = zero_count_bound(&lt, &DR::lit("1e-3", P)).unwrap();
        for e in ["1e-6", "1e-12", "1e-30"] {
            let v = zero_count_bound(&lt, &DR::lit(e, P)).unwrap();
            assert!(v.certainly_gt(&prev));
            prev = v;
        }
        assert!(zero_count_bound(&lt, &DR::ratio(1, 3, P)).is_err());
        assert!(zero_count_bound(&DR::int(4, P), &DR::ratio(1, 4, P)).is_err());
    }

    #[test]
    fn zero_count_coefficients() {
        let items = zero_count_provenance(P).unwrap();
        assert!(all_pass(&items), "{items:#?}");
    }

    #[test]
    fn zero_sum_coefficients_reassemble() {
        let a = small_eta_rederivation(P);
        assert!(all_pass(&a), "{a:#?}");
        let b = large_eta_rederivation(P);
        assert!(all_pass(&b), "{b:#?}");
    }

    #[test]
    fn the_two_zero_sum_lemmas_agree_at_the_seam() {
        let eta = DR::ratio(2, 7, P);
        {
            let lt = DR::lit("3e12", P).ln();
            let s = zero_sum_bound_small_eta(&lt, &eta).unwrap().value;
            let l = zero_sum_bound_large_eta(&lt, &eta).unwrap().value;
            assert!(s.certainly_positive() && l.certainly_positive());
            let rel = ((&s - &l) / &l).abs();
            assert!(rel.certainly_le(&DR::lit("0.05", P)), "{rel}");
        }
    }

    #[test]
    fn nu_at_one_half_is_four() {
        let v = nu(&DR::ratio(1, 2, P));
        assert!(v.is_point() && v.contains_f64(4.0));
    }

    #[test]
    fn zero_sum_domains() {
        let lt = DR::int(100, P);
        assert!(zero_sum_bound_small_eta(&lt, &DR::ratio(1, 3, P)).is_err());
        assert!(zero_sum_bound_large_eta(&lt, &DR::ratio(1, 4, P)).is_err());
        assert!(zero_sum_bound_large_eta(&DR::int(20, P), &DR::ratio(1, 3, P)).is_err());
    }

    #[test]
    fn k_line_bound_at_k5() {
        let lt = DR::lit("1e13", P).ln();
        let v = log_zeta_integral_bound(&IntegralBranch::KLine { k: 5 }, &lt, &DR::ratio(1, 2, P)).unwrap();
        let x = 13.0 * 10f64.ln();
        let want = x / 30.0 + x.ln() + 1.546f64.ln();
        assert!((v.mid_f64() - want).abs() < 1e-12);
        let big_k = IntegralBranch::KLine { k: 60 };
        assert!(log_zeta_integral_bound(&big_k, &lt, &DR::ratio(1, 2, P)).is_err());
        assert!(log_zeta_integral_bound(&IntegralBranch::KLine { k: 5 }, &lt, &DR::one(P)).is_err());
    }

    #[test]
    fn convexity_branch() {
        let lt = DR::int(100, P);
        let half = DR::ratio(1, 2, P);
        let v = log_zeta_integral_bound(&IntegralBranch::Convexity { eta: half.clone() }, &lt, &half).unwrap();
        let want = 3.0 / 18.0 * 100.0 + 100f64.ln() + 1.659 - 4.279 / 2.0;
        assert!((v.mid_f64() - want).abs() < 1e-12);
        // (8 eta - 1)/18 vanishes at eta = 1/8.
        let q = Rational::from((1, 8)) * 8u32 - 1u32;
        assert_eq!(q, 0);
        let out = IntegralBranch::Convexity { eta: DR::ratio(1, 8, P) };
        assert!(log_zeta_integral_bound(&out, &lt, &half).is_err());
    }

    #[test]
    fn convexity_constants_reproduce() {
        let items = convexity_rederivation(P);
        assert!(all_pass(&items), "{items:#?}");
    }

    #[test]
    fn convexity_exponents_interpolate() {
        // Exponent of |Q + s| is linear between 7/6 at 1/2 and 15/14 at 5/7.
        let e = |s: Rational| (Rational::from(25) - s * 8u32) / 18u32;
        assert_eq!(e(Rational::from((1, 2))), Rational::from((7, 6)));
        assert_eq!(e(Rational::from((5, 7))), Rational::from((15, 14)));
        // t-exponent after dividing by |s - 1|, at sigma = 1 - eta.
        let eta = Rational::from((3, 10));
        assert_eq!(e(Rational::from(1) - &eta) - 1u32, (eta * 8u32 - 1u32) / 18u32);
    }

    #[test]
    fn integral_lemma_errors_are_negative() {
        let items = integral_lemma_error_items(P);
        assert!(all_pass(&items), "{items:#?}");
    }
}
