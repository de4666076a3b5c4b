//! The smoothing function built from `h(u) = (cos(u tan th) - cos th) sec^2 th`
//! and its Laplace-transform constants.

use rug::Float;

use crate::error::{domain, Result};
use crate::numerics::{bisect_root, DirectedReal as DR};
use crate::report::CheckItem;

use super::TrigPolyData;

#[derive(Clone, Debug)]
pub struct SmoothingConstants {
    pub theta: DR,
    /// `g(0)`, written `w(0)` in the bound for `c(R)`.
    pub g0: DR,
    pub gprime0: DR,
    pub c0: DR,
    pub c1: DR,
    pub c2: DR,
    pub c3: DR,
    /// `cos^2 th = b_0 G(-1) / (b_1 g(0))`, the leading constant of the main inequality.
    pub cos2: DR,
    /// `b_1 |G'(0)| / (b_0 g(0))`.
    pub kappa: DR,
}

fn theta_equation(x: &DR, ratio: &DR) -> DR {
    x.sin().sqr() - ratio * (DR::one(x.precision()) - x * x.cot())
}

/// Number of certified sign changes of the defining equation on a uniform
/// grid of `(0, pi/2)`.
pub fn theta_sign_changes(poly: &TrigPolyData, cells: usize, prec: u32) -> usize {
    let ratio = poly.b1(prec) / poly.b0(prec);
    let half_pi = DR::pi(prec) / 2;
    let mut signs = Vec::new();
    for i in 1..cells {
        let x = &half_pi * DR::ratio(i as i64, cells as i64, prec);
        let v = theta_equation(&x, &ratio);
        if v.certainly_positive() {
            signs.push(1);
        } else if v.certainly_negative() {
            signs.push(-1);
        }
    }
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

pub fn smoothing_constants(poly: &TrigPolyData, prec: u32) -> Result<SmoothingConstants> {
    let p = prec;
    let b0 = poly.b0(p);
    let b1 = poly.b1(p);
    if !(b1.certainly_positive() && b0.certainly_positive()) {
        return Err(domain("b1 / b0"));
    }
    let ratio = &b1 / &b0;
    let half_pi = (DR::pi(p) / 2).lower();
    let lo = Float::with_val(p, 1e-3);
    let hi = Float::with_val(p, half_pi.lo()) - Float::with_val(p, 1e-3);
    let theta = bisect_root(|x| theta_equation(x, &ratio), &lo, &hi, None, p)?;
    let (s, c, t) = (theta.sin(), theta.cos(), theta.tan());
    let cot = theta.cot();
    let sec2 = c.sqr().recip();
    let g0 = &sec2 * (&theta * &t + &theta * &cot * 3 - 3);
    let th2 = theta.sqr();
    let csc2 = s.sqr().recip();
    let gprime0 = &csc2 * ((&th2 * 4 - 5) * 3 + &theta * (15 - &th2 * 4) * &cot) / 3
        - &theta / (&s * &c);
    let c0 = (&s * c.powi(3)).recip();
    let sc = &theta - &s * &c;
    let c1 = &sc * t.powi(4);
    let c2 = t.powi(3) * s.sqr();
    let c3 = &sc * t.sqr();
    let cos2 = c.sqr();
    let kappa = &b1 * gprime0.abs() / (&b0 * &g0);
    Ok(SmoothingConstants {
        theta,
        g0,
        gprime0,
        c0,
        c1,
        c2,
        c3,
        cos2,
        kappa,
    })
}

/// `H(R) = c0 / (1 - tan^2 th / R^2)^2 (c2 (R + 1) / R^3 (e^(2 th / tan th) + 1) + c1 / R^2 + c3)`.
pub fn h_of_r(r: &DR, s: &SmoothingConstants) -> Result<DR> {
    let t2 = s.theta.tan().sqr();
    if !r.certainly_gt(&t2.sqrt()) {
        return Err(domain("1 - tan^2(theta) / R^2"));
    }
    let den = (DR::one(r.precision()) - &t2 / r.sqr()).sqr();
    let e = ((&s.theta * 2) / s.theta.tan()).exp() + 1;
    let inner = &s.c2 * (r + 1) / r.powi(3) * e + &s.c1 / r.sqr() + &s.c3;
    Ok(&s.c0 / den * inner)
}

/// `c(R) = H(R) (R + 1)^2 / (R^3 w(0)) + 1 + 1/R`, the constant in
/// `|F_0(z)| <= c lambda f(0) / |z|^2`.
pub fn c_of_r(r: &DR, s: &SmoothingConstants) -> Result<DR> {
    let h = h_of_r(r, s)?;
    if !r.certainly_ge(&DR::int(3, r.precision())) {
        return Err(domain("c(R) needs R >= 3"));
    }
    Ok(h * (r + 1).sqr() / (r.powi(3) * &s.g0) + 1 + r.recip())
}

/// The published smoothing constants, checked against the enclosures.
pub fn smoothing_certificate(prec: u32) -> Result<Vec<CheckItem>> {
    let s = smoothing_constants(&TrigPolyData::default(), prec)?;
    Ok(vec![
        CheckItem::digits("theta", &s.theta, "1.132693699"),
        CheckItem::digits("g(0)", &s.g0, "5.610921922"),
        CheckItem::digits("c0", &s.c0, "14.464"),
        CheckItem::digits("c1", &s.c1, "15.541"),
        CheckItem::digits("c2", &s.c2, "7.9763"),
        CheckItem::digits("c3", &s.c3, "3.4108"),
        CheckItem::ge("G'(0)", &s.gprime0, "-0.659108"),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: u32 = 256;

    fn s() -> SmoothingConstants {
        smoothing_constants(&TrigPolyData::default(), P).unwrap()
    }

    #[test]
    fn theta_is_tight_and_unique() {
        let s = s();
        assert!(s.theta.width_f64() < 1e-25);
        assert_eq!(theta_sign_changes(&TrigPolyData::default(), 512, P), 1);
    }

    #[test]
    fn gprime0_just_misses_the_printed_bound() {
        let g = s().gprime0;
        // Independent double evaluation of the closed form.
        let th: f64 = 1.1326936996923232;
        let (sn, cs) = th.sin_cos();
        let cot = cs / sn;
        let want = (3.0 * (4.0 * th * th - 5.0) + th * (15.0 - 4.0 * th * th) * cot) / (3.0 * sn * sn)
            - th / (sn * cs);
        assert!((g.mid_f64() - want).abs() < 1e-12);
        assert!(g.certainly_lt(&DR::lit("-0.659108", P)));
        assert!(g.certainly_gt(&DR::lit("-0.6591082", P)));
    }

    #[test]
    fn c_of_r_values_and_monotonicity() {
        let s = s();
        let c1 = c_of_r(&DR::lit("441.729", P), &s).unwrap();
        let c2 = c_of_r(&DR::lit("350.588", P), &s).unwrap();
        assert!(c1.certainly_le(&DR::lit("1.02268", P)));
        assert!(c2.certainly_le(&DR::lit("1.0288", P)));
        let mut prev = c_of_r(&DR::int(10, P), &s).unwrap();
        for i in 1..=60 {
            let r = DR::int(10, P) * DR::from_f64(1000f64.powf(i as f64 / 60.0), P);
            let c = c_of_r(&r, &s).unwrap();
            assert!(c.certainly_lt(&prev));
            prev = c;
        }
        assert!(prev.certainly_gt(&DR::one(P)));
    }

    #[test]
    fn c_of_r_domain() {
        let s = s();
        assert!(c_of_r(&DR::int(2, P), &s).is_err());
        assert!(h_of_r(&s.theta.tan(), &s).is_err());
    }

    #[test]
    fn derived_constants_of_the_main_inequality() {
        let s = s();
        assert!(s.cos2.certainly_ge(&DR::lit("0.17996", P)));
        assert!(s.kappa.certainly_le(&DR::lit("0.20523", P)));
        let k = DR::lit("0.659108", P) / &s.g0;
        assert!(k.certainly_le(&DR::lit("0.11747", P)));
    }
}
