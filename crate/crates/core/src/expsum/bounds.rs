//! Explicit majorants for `|sum e(f(n))|`.

use crate::error::{domain, usage, Result};
use crate::numerics::DirectedReal as DR;

use super::constants::{big_k, DerivTestConstants};

/// Hypotheses of the k-th derivative test on `(a, a + N]`:
/// `lambda <= |f^(k)| <= h lambda`.
#[derive(Clone, Debug)]
pub struct DerivTestParams {
    pub k: u32,
    pub a: i64,
    pub n: u64,
    pub h: DR,
    pub lambda: DR,
}

impl DerivTestParams {
    pub fn big_k(&self) -> rug::Integer {
        big_k(self.k)
    }
}

pub fn trivial_bound(n: u64, prec: u32) -> DR {
    DR::integer(&n.into(), prec)
}

/// `2 / (pi lambda1)`.
pub fn kuzmin_landau(lambda1: &DR) -> Result<DR> {
    if !lambda1.certainly_positive() {
        return Err(domain(format!("kuzmin_landau(lambda1 = {lambda1})")));
    }
    let p = lambda1.precision();
    Ok(DR::int(2, p) / (DR::pi(p) * lambda1))
}

/// `(1/lambda1 + 1/mu1) / pi` when `l + lambda1 <= f' <= l + 1 - mu1`.
pub fn kuzmin_landau_general(lambda1: &DR, mu1: &DR) -> Result<DR> {
    let p = lambda1.precision().max(mu1.precision());
    if !lambda1.certainly_positive()
        || !mu1.certainly_positive()
        || !(lambda1 + mu1).certainly_le(&DR::one(p))
    {
        return Err(domain(format!(
            "kuzmin_landau_general(lambda1 = {lambda1}, mu1 = {mu1})"
        )));
    }
    Ok((lambda1.recip() + mu1.recip()) / DR::pi(p))
}

/// `A_2 = (2 + sqrt(4 + pi)) / sqrt(pi)`.
pub fn a2(p: u32) -> DR {
    let pi = DR::pi(p);
    (DR::int(2, p) + (DR::int(4, p) + &pi).sqrt()) / pi.sqrt()
}

/// `B_2 = 4 / sqrt(pi)`.
pub fn b2(p: u32) -> DR {
    DR::int(4, p) / DR::pi(p).sqrt()
}

/// `1 + 4(2 - sqrt(4 + pi))/pi`, the crossover in the proof of the `A_2, B_2` form.
pub fn second_derivative_lambda0(p: u32) -> DR {
    let pi = DR::pi(p);
    DR::one(p) + DR::int(4, p) * (DR::int(2, p) - (DR::int(4, p) + &pi).sqrt()) / pi
}

#[derive(Clone, Debug)]
pub struct SecondDerivBound {
    pub value: DR,
    /// Split point `sqrt(lambda2 / pi)` used by the argument.
    pub delta0: DR,
    /// Set when `lambda2 > pi/16`, where the trivial bound already suffices.
    pub trivial_branch: bool,
}

/// `4/sqrt(pi) N h lambda2^(1/2) + N h lambda2 + 4/sqrt(pi) lambda2^(-1/2)`.
pub fn second_derivative_bound(n: u64, h: &DR, lambda2: &DR) -> Result<SecondDerivBound> {
    let p = h.precision().max(lambda2.precision());
    if n == 0 || !lambda2.certainly_positive() || !h.certainly_gt(&DR::one(p)) {
        return Err(domain("second_derivative_bound needs N >= 1, h > 1, lambda2 > 0"));
    }
    let pi = DR::pi(p);
    let nn = trivial_bound(n, p);
    let c = b2(p);
    let s = lambda2.sqrt();
    let value = &c * &nn * h * &s + &nn * h * lambda2 + &c / &s;
    Ok(SecondDerivBound {
        value,
        delta0: (lambda2 / &pi).sqrt(),
        trivial_branch: lambda2.certainly_gt(&(pi / 16)),
    })
}

/// `A_2 N h lambda2^(1/2) + B_2 lambda2^(-1/2)`.
pub fn second_derivative_ab(n: u64, h: &DR, lambda2: &DR) -> Result<DR> {
    let p = h.precision().max(lambda2.precision());
    if n == 0 || !lambda2.certainly_positive() {
        return Err(domain("second_derivative_ab needs N >= 1, lambda2 > 0"));
    }
    let s = lambda2.sqrt();
    Ok(a2(p) * trivial_bound(n, p) * h * &s + b2(p) / &s)
}

/// `q^(1+s) / ((1+s)(2+s))`, a majorant of `sum_{r<=q} (1 - r/q) r^s`.
pub fn weighted_power_sum_bound(q: u64, s: &DR) -> Result<DR> {
    let p = s.precision();
    let one = DR::one(p);
    if q == 0 || !s.certainly_gt(&(-&one)) || !s.certainly_le(&one) {
        return Err(domain(format!("weighted_power_sum_bound(q = {q}, s = {s})")));
    }
    let qq = trivial_bound(q, p);
    Ok(qq.pow(&(&one + s)) / ((&one + s) * (DR::int(2, p) + s)))
}

/// The two terms `A_k h^(2/K) N lambda^(1/(2K-2))` and `B_k N^(1-2/K) lambda^(-1/(2K-2))`.
pub fn kth_derivative_terms(p: &DerivTestParams, c: &DerivTestConstants) -> Result<(DR, DR)> {
    if p.k != c.k {
        return Err(usage(format!(
            "parameters are for k = {} but constants for k = {}",
            p.k, c.k
        )));
    }
    if !c.h.certainly_ge(&p.h) {
        return Err(usage("constants were computed for a smaller h than the instance needs"));
    }
    if !p.lambda.certainly_positive() || p.n == 0 {
        return Err(domain("k-th derivative test needs lambda > 0 and N >= 1"));
    }
    let prec = c.a_k.precision().max(p.lambda.precision());
    let kk = DR::integer(&big_k(p.k), prec);
    let e1 = (DR::int(2, prec) * &kk - 2).recip();
    let nn = trivial_bound(p.n, prec);
    let a_term = &c.a_k * c.h.pow(&(DR::int(2, prec) / &kk)) * &nn * p.lambda.pow(&e1);
    let b_term = &c.b_k * nn.pow(&(DR::one(prec) - DR::int(2, prec) / &kk)) * p.lambda.pow(&(-&e1));
    Ok((a_term, b_term))
}

pub fn kth_derivative_bound(p: &DerivTestParams, c: &DerivTestConstants) -> Result<DR> {
    let (a, b) = kth_derivative_terms(p, c)?;
    Ok(a + b)
}

/// The uniform form `2.762 h^(2/K) N lambda^(1/(2K-2)) + 1.02 N^(1-2/K) lambda^(-1/(2K-2))`
/// for `k >= 10`, `1 < h <= 3`.
pub fn uniform_kth_bound(p: &DerivTestParams, prec: u32) -> Result<DR> {
    if p.k < 10 || !p.h.certainly_le(&DR::int(3, prec)) || !p.h.certainly_gt(&DR::one(prec)) {
        return Err(usage("uniform bound needs k >= 10 and 1 < h <= 3"));
    }
    let kk = DR::integer(&big_k(p.k), prec);
    let e1 = (DR::int(2, prec) * &kk - 2).recip();
    let nn = trivial_bound(p.n, prec);
    Ok(DR::lit("2.762", prec) * p.h.pow(&(DR::int(2, prec) / &kk)) * &nn * p.lambda.pow(&e1)
        + DR::lit("1.02", prec) * nn.pow(&(DR::one(prec) - DR::int(2, prec) / &kk)) * p.lambda.pow(&(-&e1)))
}

/// `lambda_0(k) = (9 pi eta3 / 1024)^(-2 + 2/K) N^(-4 + 4/K)`; below it the
/// `B` term alone exceeds `N`.
pub fn lambda0_k(k: u32, eta3: &DR, n: u64) -> DR {
    let p = eta3.precision();
    let kk = DR::integer(&big_k(k), p);
    let two_k = DR::int(2, p) / &kk;
    let base = DR::int(9, p) * DR::pi(p) * eta3 / 1024;
    base.pow(&(&two_k - 2)) * trivial_bound(n, p).pow(&(DR::int(2, p) * &two_k - 4))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expsum::constants::kth_derivative_constants;

    const P: u32 = 256;

    #[test]
    fn kuzmin_landau_values() {
        let v = kuzmin_landau(&(DR::int(2, P) / DR::pi(P))).unwrap();
        assert!(v.contains_f64(1.0) || (v.mid_f64() - 1.0).abs() < 1e-60);
        let w = kuzmin_landau(&DR::lit("0.1", P)).unwrap();
        assert!((w.mid_f64() - 6.366197723675814).abs() < 1e-14);
        let half = kuzmin_landau(&DR::ratio(1, 2, P)).unwrap();
        assert!((half - DR::int(4, P) / DR::pi(P)).abs().hi_f64() < 1e-70);
        assert!(kuzmin_landau(&DR::zero(P)).is_err());
    }

    #[test]
    fn general_kuzmin_landau() {
        let half = DR::ratio(1, 2, P);
        let v = kuzmin_landau_general(&half, &half).unwrap();
        assert!((v - DR::int(4, P) / DR::pi(P)).abs().hi_f64() < 1e-70);
        let l = DR::lit("0.2", P);
        let sym = kuzmin_landau_general(&l, &l).unwrap();
        let kl = kuzmin_landau(&l).unwrap();
        assert!((sym - kl).abs().hi_f64() < 1e-70);
        let x = kuzmin_landau_general(&DR::lit("0.1", P), &DR::lit("0.3", P)).unwrap();
        assert!((x.mid_f64() - 4.244131815783876).abs() < 1e-13);
        assert!(kuzmin_landau_general(&DR::lit("0.6", P), &DR::lit("0.6", P)).is_err());
    }

    #[test]
    fn second_derivative_example() {
        let b = second_derivative_bound(100, &DR::lit("1.01", P), &DR::lit("1e-4", P)).unwrap();
        let want = 4.0 / std::f64::consts::PI.sqrt() * 1.01 + 1.01e-2 + 4.0 / std::f64::consts::PI.sqrt() * 100.0;
        assert!((b.value.mid_f64() - want).abs() < 1e-10);
        assert!((b.delta0.mid_f64() - (1e-4f64 / std::f64::consts::PI).sqrt()).abs() < 1e-15);
        assert!(!b.trivial_branch);
        let big = second_derivative_bound(1000, &DR::lit("1.5", P), &DR::lit("0.3", P)).unwrap();
        assert!(big.trivial_branch && big.value.certainly_gt(&DR::int(1000, P)));
    }

    #[test]
    fn a2_b2_and_their_crossover() {
        assert!((a2(P).mid_f64() - 2.6361057818).abs() < 1e-9);
        assert!((b2(P).mid_f64() - 2.256758).abs() < 5e-7);
        let l0 = second_derivative_lambda0(P);
        assert!((l0.mid_f64() - 0.1439).abs() < 1e-4);
        // (4/sqrt(pi) + sqrt(l0)) sqrt(l0) = 1, so both proof branches meet here.
        let lhs = (b2(P) + l0.sqrt()) * l0.sqrt();
        assert!((lhs - DR::one(P)).abs().hi_f64() < 1e-60);
        assert!((b2(P) + l0.sqrt() - a2(P)).abs().hi_f64() < 1e-60);
    }

    #[test]
    fn weighted_sum_majorant() {
        let one = weighted_power_sum_bound(10, &DR::one(P)).unwrap();
        assert!((one.mid_f64() - 100.0 / 6.0).abs() < 1e-12);
        assert!(one.certainly_ge(&DR::lit("16.5", P)));
        let zero = weighted_power_sum_bound(7, &DR::zero(P)).unwrap();
        assert!((zero.mid_f64() - 3.5).abs() < 1e-12);
        assert!(weighted_power_sum_bound(1, &DR::lit("-0.5", P)).unwrap().certainly_positive());
        assert!(weighted_power_sum_bound(3, &DR::int(-1, P)).is_err());
        assert!(weighted_power_sum_bound(3, &DR::lit("1.5", P)).is_err());
    }

    #[test]
    fn mismatched_orders_are_rejected() {
        let c = kth_derivative_constants(4, &DR::one(P), &DR::int(2, P)).unwrap();
        let p = DerivTestParams {
            k: 5,
            a: 10,
            n: 10,
            h: DR::int(2, P),
            lambda: DR::lit("1e-3", P),
        };
        assert!(kth_derivative_bound(&p, &c).is_err());
    }

    #[test]
    fn small_lambda_branch_b_term_reaches_n() {
        let eta = DR::lit("1.3", P);
        for k in 4..=9u32 {
            for n in [2337u64, 10_000, 99_999] {
                let lam = lambda0_k(k, &eta, n);
                let c = kth_derivative_constants(k, &eta, &DR::lit("1.5", P)).unwrap();
                let p = DerivTestParams {
                    k,
                    a: 0,
                    n,
                    h: DR::lit("1.5", P),
                    lambda: lam,
                };
                let (_, b) = kth_derivative_terms(&p, &c).unwrap();
                assert!(b.certainly_ge(&DR::int(n as i64, P)), "k={k}, N={n}");
            }
        }
    }
}
