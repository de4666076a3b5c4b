//! Rigorous enclosures of `zeta(sigma + it)`: direct partial sums with the
//! Euler-Maclaurin tail for large `t`, and the full Euler-Maclaurin formula
//! near the real axis.

use rayon::prelude::*;
use rug::{Float, Integer, Rational};

use crate::error::{usage, Error, Result};
use crate::numerics::{ComplexInterval as CI, DirectedReal as DR};

use super::sigma::em_tail_bound;

pub const DEFAULT_TERM_CAP: u64 = 100_000_000;
const CHUNK: u64 = 1 << 14;

/// `n^(-sigma - it)`.
pub fn n_pow_minus_s(n: u64, sigma: &DR, t: &DR) -> CI {
    let p = sigma.precision().max(t.precision());
    let ln = DR::integer(&Integer::from(n), p).ln();
    CI::polar(&(-(sigma * &ln)).exp(), &-(t * &ln))
}

/// `sum_{1 <= n <= m} n^(-sigma - it)`, summed in fixed-size chunks and
/// combined in index order.
pub fn partial_sum(sigma: &DR, t: &DR, m: u64) -> CI {
    let p = sigma.precision().max(t.precision());
    let chunks = m.div_ceil(CHUNK);
    let parts: Vec<CI> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut acc = CI::zero(p);
            for n in c * CHUNK + 1..=((c + 1) * CHUNK).min(m) {
                acc = &acc + &n_pow_minus_s(n, sigma, t);
            }
            acc
        })
        .collect();
    parts.iter().fold(CI::zero(p), |a, b| &a + b)
}

/// Working precision of [`partial_sum_ball`].
pub const BALL_PREC: u32 = 128;

/// Same sum as [`partial_sum`], evaluated once at the midpoint of `(sigma, t)`
/// with round-to-nearest at [`BALL_PREC`] bits, then widened by an a-priori
/// bound on rounding error plus the variation of the sum over the input box.
/// Needs `sigma >= 0`.
pub fn partial_sum_ball(sigma: &DR, t: &DR, m: u64) -> CI {
    let p = sigma.precision().max(t.precision());
    let wp = BALL_PREC;
    let s_mid = Float::with_val(wp, sigma.mid());
    let t_mid = Float::with_val(wp, t.mid());
    let chunks = m.div_ceil(CHUNK);
    let parts: Vec<(Float, Float)> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut re = Float::new(wp);
            let mut im = Float::new(wp);
            for n in c * CHUNK + 1..=((c + 1) * CHUNK).min(m) {
                let ln = Float::with_val(wp, n).ln();
                let a = (-Float::with_val(wp, &s_mid * &ln)).exp();
                let x = Float::with_val(wp, &t_mid * &ln);
                let (sin, cos) = x.sin_cos(Float::new(wp));
                re += Float::with_val(wp, &a * &cos);
                im -= Float::with_val(wp, &a * &sin);
            }
            (re, im)
        })
        .collect();
    let (mut re, mut im) = (Float::new(wp), Float::new(wp));
    for (a, b) in parts {
        re += a;
        im += b;
    }
    // Per component: m (3u|t| ln m + 6u ln m + 8u) + 1.02 m^2 u, doubled,
    // plus |s - s_mid| m log m for the spread of the input box.
    let u = DR::int(2, p).powi(1 - wp as i64);
    let mm = DR::integer(&Integer::from(m), p);
    let ln_m = mm.ln();
    let t_abs = t.abs().upper();
    let rounding = &mm * &u * (&t_abs * &ln_m * 3 + &ln_m * 6 + 8 + &mm * DR::lit("1.02", p)) * 2;
    let ds = (sigma - DR::point(s_mid)).abs().upper();
    let dt = (t - DR::point(t_mid)).abs().upper();
    let spread = (ds + dt) * &mm * &ln_m;
    let r = (rounding + spread).hi().clone();
    let rad = DR::from_bounds(-r.clone(), r);
    CI::new(
        DR::point(Float::with_val(p, re)) + &rad,
        DR::point(Float::with_val(p, im)) + &rad,
    )
}

#[derive(Clone, Debug)]
pub struct ZetaUpper {
    pub bound: DR,
    pub partial: CI,
    pub tail: DR,
    pub terms: u64,
}

/// Upper bound on `|zeta(sigma + it)|` from the sum over `n <= ht` plus
/// the tail bound with `t0 = t`.
pub fn zeta_abs_upper_with(sigma: &DR, t: &DR, h: &DR, cap: u64) -> Result<ZetaUpper> {
    let p = sigma.precision().max(t.precision());
    if !sigma.certainly_ge(&DR::ratio(1, 2, p)) || !sigma.certainly_le(&DR::one(p)) {
        return Err(usage("zeta_abs_upper needs 1/2 <= sigma <= 1"));
    }
    if !t.certainly_ge(&DR::int(3, p)) {
        return Err(usage("zeta_abs_upper needs t >= 3"));
    }
    let ht = (h * t).floor();
    if !ht.is_point() {
        return Err(usage("h t straddles an integer; pass a point value"));
    }
    let m = ht.hi().to_f64();
    if !(m >= 0.0) {
        return Err(usage("h t must be non-negative"));
    }
    let m = m as u64;
    if m > cap {
        return Err(Error::CapExceeded { requested: m, cap });
    }
    let tail = em_tail_bound(h, sigma, t)?;
    let partial = partial_sum_ball(sigma, t, m);
    let bound = partial.abs().upper() + &tail;
    Ok(ZetaUpper {
        bound,
        partial,
        tail,
        terms: m,
    })
}

pub fn zeta_abs_upper(sigma: &DR, t: &DR, h: &DR) -> Result<DR> {
    zeta_abs_upper_with(sigma, t, h, DEFAULT_TERM_CAP).map(|z| z.bound)
}

/// `B_2, B_4, ..., B_16`.
fn bernoulli_even(j: usize) -> Rational {
    const B: [(i64, i64); 8] = [
        (1, 6),
        (-1, 30),
        (1, 42),
        (-1, 30),
        (5, 66),
        (-691, 2730),
        (7, 6),
        (-3617, 510),
    ];
    Rational::from(B[j - 1])
}

fn factorial(n: u32) -> Integer {
    Integer::from(Integer::factorial(n))
}

/// Enclosure of `(s - 1) zeta(s)` by Euler-Maclaurin with `n_cut` terms and
/// `nu` correction terms; `s = sigma + it` may be a box.
pub fn s_minus_one_zeta(sigma: &DR, t: &DR, n_cut: u64, nu: usize) -> Result<CI> {
    if nu == 0 || nu > 7 || n_cut < 1 {
        return Err(usage("Euler-Maclaurin needs 1 <= nu <= 7 and N >= 1"));
    }
    let p = sigma.precision().max(t.precision());
    if !(sigma + (2 * nu as i64 + 1)).certainly_positive() {
        return Err(usage("Euler-Maclaurin remainder needs sigma > -2 nu - 1"));
    }
    let s = CI::new(sigma.clone(), t.clone());
    let s_minus_1 = CI::new(sigma - 1, t.clone());
    let n_big = DR::integer(&Integer::from(n_cut), p);
    let ln_n = n_big.ln();
    let n_to_minus_s = n_pow_minus_s(n_cut, sigma, t);

    let mut inner = partial_sum(sigma, t, n_cut - 1);
    inner = &inner + &n_to_minus_s.scale(&DR::ratio(1, 2, p));
    // rising factorial s (s + 1) ... (s + 2j - 2)
    let mut rising = s.clone();
    let mut n_pow = n_to_minus_s.scale(&n_big.recip());
    for j in 1..=nu {
        let coeff = DR::rational(&(bernoulli_even(j) / factorial(2 * j as u32)), p);
        inner = &inner + &(&rising * &n_pow).scale(&coeff);
        let a = CI::new(sigma + (2 * j as i64 - 1), t.clone());
        let b = CI::new(sigma + (2 * j as i64), t.clone());
        rising = &(&rising * &a) * &b;
        n_pow = n_pow.scale(&n_big.sqr().recip());
    }
    // rising now holds s (s + 1) ... (s + 2 nu); one more factor for the remainder.
    let last = CI::new(sigma + (2 * nu as i64 + 1), t.clone());
    let full = &rising * &last;
    let b = DR::rational(&(bernoulli_even(nu + 1).abs() / factorial(2 * nu as u32 + 2)), p);
    let decay = (-((sigma + (2 * nu as i64 + 1)) * &ln_n)).exp();
    let rem = full.abs() * b * decay / (sigma + (2 * nu as i64 + 1));
    let rem = rem * s_minus_1.abs();
    let r = rem.hi().clone();
    let disc = DR::from_bounds(-r.clone(), r);

    let n_one_minus_s = n_to_minus_s.scale(&n_big);
    let main = &(&s_minus_1 * &inner) + &n_one_minus_s;
    Ok(CI::new(&main.re + &disc, &main.im + &disc))
}
