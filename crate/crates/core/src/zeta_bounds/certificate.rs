//! Certificates for `|zeta(sigma_k + it)| <= gamma_k t^(1/(2K-2)) log t` when
//! `t >= T_k`: the parameter rows for `4 <= k <= 9` and the uniform branch.

use rug::{Integer, Rational};
use serde::Serialize;

use crate::error::{domain, usage, Result};
use crate::expsum::constants::{ab_constants, big_k, UNIFORM_ETA3};
use crate::numerics::DirectedReal as DR;
use crate::report::CheckItem;

use super::sigma::{em_tail_bound_log, log_t_k, sigma_k, theta, THEOREM1_CONSTANT};

/// One parameter row. Decimals are kept as written and rounded outward on use.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Table2Row {
    pub k: u32,
    pub eta3: String,
    pub h0: String,
    pub h1: String,
    pub h2: String,
    pub h3: String,
    pub gamma: String,
    /// Tabulated `alpha_k`, `beta_k`, when known.
    pub alpha: Option<String>,
    pub beta: Option<String>,
    /// Split exponent; `1/k` when absent. Accepts `p/q` or a decimal.
    pub phi: Option<String>,
}

const TABLE2_DATA: [(u32, &str, &str, &str, &str, &str, &str, &str, &str); 6] = [
    (4, "1.22626", "0.03640", "1.30262", "4.37500", "1.30021", "1.1796", "0.3655", "1.546"),
    (5, "1.43074", "0.10750", "1.17205", "17.2191", "1.28297", "0.7253", "0.6401", "1.366"),
    (6, "1.79198", "0.40548", "1.08095", "25.8377", "1.19628", "0.4944", "0.6267", "1.122"),
    (7, "1.95195", "0.97083", "1.02940", "6.87426", "1.09787", "0.3634", "0.5350", "0.899"),
    (8, "1.94390", "0.98846", "1.01101", "5.00587", "1.05355", "0.2824", "0.4405", "0.723"),
    (9, "1.85285", "0.99604", "1.00392", "3.80684", "1.02923", "0.2285", "0.3652", "0.594"),
];

/// The published rows for `k = 4..=9`.
pub fn table2() -> Vec<Table2Row> {
    TABLE2_DATA
        .iter()
        .map(|&(k, e, h0, h1, h2, h3, a, b, g)| Table2Row {
            k,
            eta3: e.into(),
            h0: h0.into(),
            h1: h1.into(),
            h2: h2.into(),
            h3: h3.into(),
            gamma: g.into(),
            alpha: Some(a.into()),
            beta: Some(b.into()),
            phi: None,
        })
        .collect()
}

fn check_decimal(s: &str, line: usize) -> Result<String> {
    DR::decimal(s, 64).map_err(|_| usage(format!("line {line}: `{s}` is not a decimal number")))?;
    Ok(s.to_string())
}

/// Parses rows of the form `k, eta3, h0, h1, h2, h3, gamma` with optional
/// trailing `alpha=..`, `beta=..`, `phi=..` fields. `#` starts a comment.
pub fn parse_table2(src: &str) -> Result<Vec<Table2Row>> {
    let mut rows = Vec::new();
    for (i, raw) in src.lines().enumerate() {
        let line = i + 1;
        let text = raw.split('#').next().unwrap_or("").trim();
        if text.is_empty() {
            continue;
        }
        let fields: Vec<&str> = text.split(',').map(str::trim).collect();
        if fields.len() < 7 {
            return Err(usage(format!("line {line}: expected k, eta3, h0, h1, h2, h3, gamma")));
        }
        let k: u32 = fields[0]
            .parse()
            .map_err(|_| usage(format!("line {line}: bad k `{}`", fields[0])))?;
        if k < 4 {
            return Err(usage(format!("line {line}: k must be >= 4")));
        }
        let mut row = Table2Row {
            k,
            eta3: check_decimal(fields[1], line)?,
            h0: check_decimal(fields[2], line)?,
            h1: check_decimal(fields[3], line)?,
            h2: check_decimal(fields[4], line)?,
            h3: check_decimal(fields[5], line)?,
            gamma: check_decimal(fields[6], line)?,
            alpha: None,
            beta: None,
            phi: None,
        };
        for extra in &fields[7..] {
            let (key, value) = extra
                .split_once('=')
                .ok_or_else(|| usage(format!("line {line}: expected key=value, got `{extra}`")))?;
            let value = value.trim();
            match key.trim() {
                "alpha" => row.alpha = Some(check_decimal(value, line)?),
                "beta" => row.beta = Some(check_decimal(value, line)?),
                "phi" => {
                    parse_phi(value).map_err(|_| usage(format!("line {line}: bad phi `{value}`")))?;
                    row.phi = Some(value.to_string());
                }
                other => return Err(usage(format!("line {line}: unknown field `{other}`"))),
            }
        }
        rows.push(row);
    }
    Ok(rows)
}

/// `p/q` or a terminating decimal, exactly.
pub fn parse_phi(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || usage(format!("bad phi `{s}`"));
    if let Some((a, b)) = s.split_once('/') {
        let q: Rational = format!("{}/{}", a.trim(), b.trim()).parse().map_err(|_| bad())?;
        return Ok(q);
    }
    let (int, frac) = s.split_once('.').unwrap_or((s, ""));
    let digits: Integer = format!("{int}{frac}").parse().map_err(|_| bad())?;
    Ok(Rational::from((digits, Integer::from(Integer::u_pow_u(10, frac.len() as u32)))))
}

fn rat(q: &Rational, p: u32) -> DR {
    DR::rational(q, p)
}

fn inv(n: &Integer) -> Rational {
    Rational::from((Integer::from(1), n.clone()))
}

/// `(C_r(eta3, h), D_r(eta3, h))`.
pub fn cd_constants(r: u32, eta3: &DR, h: &DR) -> Result<(DR, DR)> {
    let p = eta3.precision().max(h.precision());
    if r < 2 {
        return Err(usage("C_r, D_r need r >= 2"));
    }
    if !h.certainly_gt(&DR::one(p)) {
        return Err(domain("cd_constants needs h > 1"));
    }
    let rr = big_k(r);
    let (a_r, b_r) = if r == 2 {
        ab_constants(2, eta3, h)?
    } else {
        let (a, _) = ab_constants(r, eta3, &h.powi(r as i64))?;
        let (_, b) = ab_constants(r, eta3, h)?;
        (a, b)
    };
    let two_r_minus_2 = Integer::from(&rr * 2u32) - 2u32;
    let e_inv = rat(&inv(&two_r_minus_2), p);
    let ri = r as i64;
    let ln_h = h.ln();
    let ln_fact = DR::integer(&Integer::from(Integer::factorial(r - 1)), p).ln();
    let ln_2pi = (DR::pi(p) * 2).ln();
    let h_minus_1 = h - 1;
    let c_exp = rat(&Rational::from((Integer::from(2 * r), rr.clone())), p) - &e_inv * ri;
    let c = &a_r * (c_exp * &ln_h + (&ln_fact - &ln_2pi) * &e_inv).exp() * &h_minus_1;
    let d_exp = &e_inv * ri;
    let h1_exp = DR::one(p) - rat(&Rational::from((Integer::from(2), rr)), p);
    let d = &b_r * (d_exp * &ln_h + (&ln_2pi - &ln_fact) * &e_inv + h1_exp * h_minus_1.ln()).exp();
    Ok((c, d))
}

#[derive(Clone, Debug)]
pub struct AlphaTerms {
    pub terms: [DR; 4],
    pub total: DR,
}

/// `phi` must lie in `[1/(kK - 2K + 2), 1/k]`.
pub fn phi_range(k: u32) -> (Rational, Rational) {
    let kk = big_k(k);
    let den = Integer::from(&kk * k) - Integer::from(&kk * 2u32) + 2u32;
    (inv(&den), Rational::from((1, k)))
}

fn log_t_floor(p: u32) -> DR {
    DR::int(3, p).ln()
}

/// `alpha_k(h0, h1, eta3, phi, t)` with `log t` supplied.
pub fn alpha_k(k: u32, h0: &DR, h1: &DR, eta3: &DR, phi: &Rational, log_t: &DR) -> Result<AlphaTerms> {
    let p = log_t.precision();
    let cd = cd_constants(k, eta3, h1)?;
    alpha_k_with(k, h0, h1, phi, log_t, &cd, p)
}

fn alpha_k_with(k: u32, h0: &DR, h1: &DR, phi_q: &Rational, log_t: &DR, cd: &(DR, DR), p: u32) -> Result<AlphaTerms> {
    if k < 4 {
        return Err(usage("alpha_k needs k >= 4"));
    }
    let (lo, hi) = phi_range(k);
    if *phi_q < lo || *phi_q > hi {
        return Err(domain(format!("phi = {phi_q} outside [1/(kK-2K+2), 1/k]")));
    }
    let phi = &rat(phi_q, p);
    if !h1.certainly_gt(&DR::one(p)) || !h0.certainly_positive() {
        return Err(domain("alpha_k needs h0 > 0 and h1 > 1"));
    }
    if !log_t.certainly_ge(&log_t_floor(p)) {
        return Err(domain("alpha_k needs t >= 3"));
    }
    let kk = big_k(k);
    let ki = k as i64;
    let two_k_minus_2 = DR::integer(&(Integer::from(&kk * 2u32) - 2u32), p);
    let big = DR::integer(&kk, p);
    let l = log_t;
    let (c_k, d_k) = cd;
    let a1 = &two_k_minus_2 / (l * ki) * (-(l * (DR::one(p) - phi * ki) / &two_k_minus_2)).exp();
    let a2 = (DR::one(p) - &two_k_minus_2 / ki) * (-(l / &two_k_minus_2)).exp() / l;
    let ln_h1 = h1.ln();
    let theta_k = rat(&theta(k), p);
    let cut = ((h0 * h1).ln() / &ln_h1).max(&DR::zero(p));
    let h1_pow = ((DR::int(2, p) / &big - DR::int(ki, p) / (&big - 1)) * &ln_h1).exp();
    let a3 = ((&theta_k - phi) / &ln_h1 + cut / l) * (c_k + d_k * h1_pow);
    let kappa = DR::int(ki, p) / &two_k_minus_2;
    let delta2 = ((DR::one(p) - &kappa) * &ln_h1).exp();
    let (lo_phi, _) = phi_range(k);
    let a4 = l.recip() * &delta2 / (&delta2 - 1)
        * ((&kappa - 1) * h0.ln()).exp()
        * (l * (rat(&lo_phi, p) - phi)).exp();
    let total = &a1 + &a2 + &a3 + &a4;
    Ok(AlphaTerms {
        terms: [a1, a2, a3, a4],
        total,
    })
}

/// `F_k(r, t)` for `r = 2..k-1` and their sum `beta_k(t)`.
#[derive(Clone, Debug)]
pub struct BetaTerms {
    pub f: Vec<(u32, DR)>,
    pub h: Vec<(u32, DR)>,
    pub total: DR,
}

pub fn beta_k(k: u32, h0: &DR, h2: &DR, h3: &DR, eta3: &DR, log_t: &DR) -> Result<BetaTerms> {
    let cds = (2..k).map(|r| cd_constants(r, eta3, h3)).collect::<Result<Vec<_>>>()?;
    beta_k_with(k, h0, h2, h3, log_t, &cds)
}

/// `cds[r - 2] = (C_r, D_r)` at `h3`.
fn beta_k_with(k: u32, h0: &DR, h2: &DR, h3: &DR, log_t: &DR, cds: &[(DR, DR)]) -> Result<BetaTerms> {
    let p = log_t.precision();
    if k < 4 {
        return Err(usage("beta_k needs k >= 4"));
    }
    if !h3.certainly_gt(&DR::one(p)) || !h0.certainly_positive() || !h2.certainly_positive() {
        return Err(domain("beta_k needs h0, h2 > 0 and h3 > 1"));
    }
    let ln_h2 = h2.ln();
    if !ln_h2.certainly_lt(&DR::int(k as i64 - 2, p)) {
        return Err(domain("beta_k needs h2 < e^(k-2)"));
    }
    if !log_t.certainly_ge(&log_t_floor(p)) {
        return Err(domain("beta_k needs t >= 3"));
    }
    let kk = big_k(k);
    let ki = k as i64;
    let two_k_minus_2 = DR::integer(&(Integer::from(&kk * 2u32) - 2u32), p);
    let kappa_k = DR::int(ki, p) / &two_k_minus_2;
    let l = log_t;
    let ln_h3 = h3.ln();
    let ceil_h3 = h3.ceil();
    if !ceil_h3.is_point() {
        return Err(domain("beta_k needs h3 away from an integer"));
    }
    let mut f = Vec::new();
    let mut hs = Vec::new();
    let mut total = DR::zero(p);
    for r in 2..k {
        let rr = big_k(r);
        let big_r = DR::integer(&rr, p);
        let two_r_minus_2 = DR::integer(&(Integer::from(&rr * 2u32) - 2u32), p);
        let th = rat(&theta(r), p);
        let th1 = rat(&theta(r + 1), p);
        let hh = h0 * ((&ln_h2 * (ki - r as i64) / (ki - 2)).exp()) / h3;
        let ln_hh = hh.ln();
        let kappa3 = &kappa_k - DR::int(r as i64, p) / &two_r_minus_2;
        let kappa4 = &kappa_k - DR::int(2, p) / &big_r + DR::int(r as i64, p) / &two_r_minus_2;
        let front = (&th - &th1) / &ln_h3 - &ln_h2 / (l * (ki - 2)) + l.recip();
        let growth = (l * (&th * ki - 1) / &two_k_minus_2).exp();
        let (c_r, d_r) = &cds[(r - 2) as usize];
        let smooth = (c_r * (&kappa3 * &ln_hh).exp() + d_r * (&kappa4 * &ln_hh).exp()) * (-(l * &th / &big_r)).exp();
        let rough = &ceil_h3 * ((&kappa_k - 1) * (&ln_h3 + &ln_hh)).exp() * (-(l * &th)).exp();
        let term = front * growth * (smooth + rough);
        total = &total + &term;
        f.push((r, term));
        hs.push((r, hh));
    }
    Ok(BetaTerms { f, h: hs, total })
}

/// Everything behind one row's verdict.
#[derive(Clone, Debug)]
pub struct ZetaBoundCertificate {
    pub row: Table2Row,
    pub phi: Rational,
    pub log_t0: DR,
    pub theta: Vec<(u32, Rational)>,
    pub cd: Vec<(u32, DR, DR)>,
    pub alpha: AlphaTerms,
    pub beta: BetaTerms,
    pub g_term: DR,
    pub gamma_sum: DR,
    pub items: Vec<CheckItem>,
}

impl ZetaBoundCertificate {
    pub fn passed(&self) -> bool {
        self.items.iter().all(CheckItem::passed)
    }
}

fn plus_tolerance(s: &str) -> String {
    let v: f64 = s.parse().unwrap_or(0.0);
    let d = s.split_once('.').map(|(_, f)| f.len()).unwrap_or(0).max(4);
    format!("{:.*}", d, v + 1e-4)
}

/// Checks a row at `t0 = T_k`.
pub fn gamma_certificate(row: &Table2Row, prec: u32) -> Result<ZetaBoundCertificate> {
    let p = prec;
    let k = row.k;
    let (eta3, h0, h1, h2, h3) = (
        DR::decimal(&row.eta3, p)?,
        DR::decimal(&row.h0, p)?,
        DR::decimal(&row.h1, p)?,
        DR::decimal(&row.h2, p)?,
        DR::decimal(&row.h3, p)?,
    );
    let phi = match &row.phi {
        Some(s) => parse_phi(s)?,
        None => Rational::from((1, k)),
    };
    let log_t0 = log_t_k(k, p);
    let cd_k = cd_constants(k, &eta3, &h1)?;
    let alpha = alpha_k_with(k, &h0, &h1, &phi, &log_t0, &cd_k, p)?;
    let cds = (2..k).map(|r| cd_constants(r, &eta3, &h3)).collect::<Result<Vec<_>>>()?;
    let beta = beta_k_with(k, &h0, &h2, &h3, &log_t0, &cds)?;

    let kk = big_k(k);
    let two_k_minus_2 = DR::integer(&(Integer::from(&kk * 2u32) - 2u32), p);
    let h = &h0 * &h2;
    let sigma = rat(&sigma_k(k), p);
    let g = em_tail_bound_log(&h, &sigma, &log_t0)?;
    let g_term = g / ((&log_t0 / &two_k_minus_2).exp() * &log_t0);
    let gamma_sum = &alpha.total + &beta.total + &g_term;

    let mut items = Vec::new();
    if let Some(a) = &row.alpha {
        items.push(CheckItem::le(&format!("k={k}: alpha_k(T_k)"), &alpha.total, &plus_tolerance(a)));
    }
    if let Some(b) = &row.beta {
        items.push(CheckItem::le(&format!("k={k}: beta_k(T_k)"), &beta.total, &plus_tolerance(b)));
    }
    items.push(CheckItem::le(
        &format!("k={k}: alpha_k + beta_k + G(h0 h2, sigma_k)/(T_k^(1/(2K-2)) log T_k)"),
        &gamma_sum,
        &row.gamma,
    ));
    items.push(CheckItem::gt(
        &format!("k={k}: h0 h2 > 1/(2 pi)"),
        &(&h - (DR::pi(p) * 2).recip()),
        "0",
    ));
    let (lo, hi) = phi_range(k);
    items.push(CheckItem::holds(
        &format!("k={k}: 1/(kK-2K+2) <= phi <= 1/k"),
        "in range",
        &rat(&phi, p),
        lo <= phi && phi <= hi,
    ));
    Ok(ZetaBoundCertificate {
        row: row.clone(),
        phi,
        log_t0,
        theta: (2..=k).map(|r| (r, theta(r))).collect(),
        cd: (2..k)
            .zip(cds)
            .map(|(r, (c, d))| (r, c, d))
            .chain(std::iter::once((k, cd_k.0.clone(), cd_k.1.clone())))
            .collect(),
        alpha,
        beta,
        g_term,
        gamma_sum,
        items,
    })
}

/// Largest `k` at which `alpha_k`, `beta_k` are evaluated directly in the
/// uniform branch; beyond it closed-form majorants take over.
pub const UNIFORM_K0: u32 = 20;

#[derive(Clone, Debug)]
pub struct UniformBranch {
    /// `(k, alpha_k(T_k), beta_k(T_k))` for `10 <= k <= K0`.
    pub direct: Vec<(u32, DR, DR)>,
    pub alpha_tail: DR,
    pub beta_tail: DR,
    pub alpha_sup: DR,
    pub beta_sup: DR,
    pub combined: DR,
    pub g_sup: DR,
    pub final_constant: DR,
    /// Links of the published argument, each checked as stated.
    pub chain: Vec<CheckItem>,
    /// The four headline claims.
    pub items: Vec<CheckItem>,
}

impl UniformBranch {
    pub fn passed(&self) -> bool {
        self.items.iter().all(CheckItem::passed)
    }
}

/// Majorant of `C_r(eta3, e)` valid for every `r >= r0 >= 10`, from
/// `A_r(eta3, e^r) <= A_r(eta3, 3) <= 2.762` and `(r-1)! <= r^r`.
fn c_bar(r0: u32, p: u32) -> DR {
    let rr = DR::integer(&big_k(r0), p);
    let r = DR::int(r0 as i64, p);
    let e = DR::e(p);
    DR::lit("2.762", p) * (&r * 2 / &rr + &r * r.ln() / (&rr * 2 - 2)).exp() * (e - 1)
}

/// Majorant of `D_r(eta3, e)` for every `r >= r0 >= 10`, from `B_r <= 1.02`.
fn d_bar(r0: u32, p: u32) -> DR {
    let rr = DR::integer(&big_k(r0), p);
    let r = DR::int(r0 as i64, p);
    DR::lit("1.02", p) * (r / (rr * 2 - 2)).exp() * (DR::e(p) - 1)
}

/// The branch `k >= 10` with `h0 = h1 = h3 = e`, `h2 = 1`, `eta3 = 4.7399`,
/// `phi = 1/k`, at `t0 = T_k`.
pub fn uniform_branch_certificate(prec: u32) -> Result<UniformBranch> {
    let p = prec;
    let k0 = UNIFORM_K0;
    let e = DR::e(p);
    let one = DR::one(p);
    let eta3 = DR::lit(UNIFORM_ETA3, p);
    let cds: Vec<(DR, DR)> = (2..=k0).map(|r| cd_constants(r, &eta3, &e)).collect::<Result<_>>()?;
    let cd = |r: u32| &cds[(r - 2) as usize];

    let mut direct = Vec::new();
    let mut alpha_sup = DR::zero(p);
    let mut beta_sup = DR::zero(p);
    let mut third_sup = DR::zero(p);
    for k in 10..=k0 {
        let lt = log_t_k(k, p);
        let a = alpha_k_with(k, &e, &e, &Rational::from((1, k)), &lt, cd(k), p)?;
        let b = beta_k_with(k, &e, &one, &e, &lt, &cds[..(k - 2) as usize])?;
        alpha_sup = alpha_sup.max(&a.total);
        beta_sup = beta_sup.max(&b.total);
        third_sup = third_sup.max(&a.terms[2]);
        direct.push((k, a.total, b.total));
    }

    // k > K0.
    let k1 = k0 + 1;
    let l1 = log_t_k(k1, p);
    let kk1 = DR::integer(&big_k(k1), p);
    let k1i = k1 as i64;
    let first_two = DR::ratio(1, k1i, p) + l1.recip();
    let multiplier = DR::ratio(2, k1i * (k1i - 2), p) + l1.recip() * 2;
    let x_lo = (one.clone() - DR::int(k1i, p) / (&kk1 * 2 - 2)).exp();
    let last = (&l1 * (&x_lo - 1)).recip();
    let alpha_tail = &first_two + &multiplier * (c_bar(k1, p) + d_bar(k1, p)) + &last;

    // beta_k(T_k) <= beta_K0(T_K0) + sum_{r=K0}^{k-1} F_k(r, T_k).
    let rough = DR::int(3, p) * (DR::int(k1i, p) / (&kk1 * 2 - 2) - 1).exp();
    let cbar0 = c_bar(k0, p).max(&cd(k0).0);
    let dbar0 = d_bar(k0, p).max(&cd(k0).1);
    let front = rat(&theta(k0), p) + DR::int(k1i * k1i, p) / (DR::lit("2.6134", p) * (&kk1 - 1));
    let beta_k0 = direct.last().expect("K0 >= 10").2.clone();
    let beta_tail = &beta_k0 + &front * (&rough + &cbar0 + &dbar0);

    let alpha_sup = alpha_sup.max(&alpha_tail);
    let beta_sup = beta_sup.max(&beta_tail);
    let combined = &alpha_sup + &beta_sup;
    let lt10 = log_t_k(10, p);
    let g_sup = em_tail_bound_log(&e, &rat(&sigma_k(10), p), &lt10)?;
    let final_constant = &combined + &g_sup;

    let chain = published_chain(&cds, &beta_sup, third_sup, p)?;
    let items = vec![
        CheckItem::le("k>=10: sup alpha_k(T_k)", &alpha_sup, "0.252"),
        CheckItem::le("k>=10: sup beta_k(T_k)", &beta_sup, "1.2235"),
        CheckItem::le("k>=10: sup alpha_k + sup beta_k", &combined, "1.476"),
        CheckItem::lt("k>=10: combined + G(e, sigma_10, T_10)", &final_constant, THEOREM1_CONSTANT),
    ];
    Ok(UniformBranch {
        direct,
        alpha_tail,
        beta_tail,
        alpha_sup,
        beta_sup,
        combined,
        g_sup,
        final_constant,
        chain,
        items,
    })
}

/// The intermediate bounds of the published `k >= 10` argument. Suprema over
/// `k` or `r` are attained at 10 or 11 by the monotonicity of each expression;
/// the maxima below are taken over `10..=60` as a check.
fn published_chain(cds: &[(DR, DR)], beta_sup: &DR, third_sup: DR, p: u32) -> Result<Vec<CheckItem>> {
    let e = DR::e(p);
    let eta3 = DR::lit(UNIFORM_ETA3, p);
    let mut first_two = DR::zero(p);
    let mut mult = DR::zero(p);
    let mut rough = DR::zero(p);
    let mut front = DR::zero(p);
    let mut c_fac = DR::zero(p);
    let mut d_fac = DR::zero(p);
    let mut x_min: Option<DR> = None;
    let theta10 = rat(&theta(10), p);
    for k in 10..=60u32 {
        let lt = log_t_k(k, p);
        let kk = DR::integer(&big_k(k), p);
        let ki = k as i64;
        let two_k_minus_2 = &kk * 2 - 2;
        first_two = first_two.max(&(DR::ratio(1, 10, p) + ((&lt / &two_k_minus_2).exp() * &lt).recip()));
        mult = mult.max(&(DR::ratio(2, ki * (ki - 2), p) + lt.recip() * 2));
        let kap = DR::int(ki, p) / &two_k_minus_2;
        rough = rough.max(&(DR::int(3, p) * (&kap - 1).exp()));
        let x = (DR::one(p) - &kap).exp();
        x_min = Some(x_min.map_or(x.clone(), |m| m.min(&x)));
        if k >= 11 {
            front = front.max(&(&theta10 + DR::int(ki - 10, p) / &lt));
        }
        let ln_fact = DR::integer(&Integer::from(Integer::factorial(k - 1)), p).ln();
        let ln_2pi = (DR::pi(p) * 2).ln();
        let cf = ((DR::int(2 * ki, p) / &kk - DR::int(ki, p) / &two_k_minus_2)
            + (&ln_fact - &ln_2pi) / &two_k_minus_2)
            .exp()
            * (&e - 1);
        let df = (DR::int(ki, p) / &two_k_minus_2
            + (DR::one(p) - DR::int(2, p) / &kk) * (&e - 1).ln()
            + (&ln_2pi - &ln_fact) / &two_k_minus_2)
            .exp();
        c_fac = c_fac.max(&cf);
        d_fac = d_fac.max(&df);
    }
    let mut c_max = DR::zero(p);
    let mut d_max = DR::zero(p);
    for r in 10..=UNIFORM_K0 {
        c_max = c_max.max(&cds[(r - 2) as usize].0);
        d_max = d_max.max(&cds[(r - 2) as usize].1);
    }
    let lt10 = log_t_k(10, p);
    let x_min = x_min.unwrap();
    let last = lt10.recip() * &x_min / (&x_min - 1);
    let beta10 = beta_k(10, &e, &DR::one(p), &e, &eta3, &lt10)?.total;
    let tail_sum = &front * (&rough + &c_max + &d_max);
    let g10 = em_tail_bound_log(&e, &rat(&sigma_k(10), p), &lt10)?;
    Ok(vec![
        CheckItem::le("chain: 1/10 + 1/(T_k^(1/(2K-2)) log T_k), k >= 10", &first_two, "0.105"),
        CheckItem::le("chain: 2/(k(k-2)) + 2/log T_k, k >= 10", &mult, "0.036"),
        CheckItem::le("chain: C_r(4.7399, e), r >= 10", &c_max, "2.804"),
        CheckItem::le("chain: D_r(4.7399, e), r >= 10", &d_max, "1.02"),
        CheckItem::le("chain: e^(2r/R - r/(2R-2)) (e-1) ((r-1)!/(2 pi))^(1/(2R-2)), r >= 10", &c_fac, "1.0179"),
        CheckItem::lt("chain: e^(r/(2R-2)) (e-1)^(1-2/R) (2 pi/(r-1)!)^(1/(2R-2)), r >= 10", &d_fac, "1"),
        CheckItem::le("chain: third term of alpha_k, k >= 10", &third_sup, "0.138"),
        CheckItem::ge("chain: e^(1 - k/(2K-2)), k >= 10", &x_min, "2.691"),
        CheckItem::le("chain: last term of alpha_k, k >= 10", &last, "0.009"),
        CheckItem::le("chain: ceil(h3) h0^(k/(2K-2) - 1), k >= 10", &rough, "1.115"),
        CheckItem::le("chain: theta_10 + (k - 10)/log T_k, k >= 11", &front, "0.12494"),
        CheckItem::le("chain: beta_10(T_10)", &beta10, "0.6064"),
        CheckItem::le("chain: sum_{r>=10} F_k(r, T_k) majorant", &tail_sum, "0.6171"),
        CheckItem::le("chain: G(e, sigma_10, T_10)", &g10, "0.001"),
        CheckItem::le("chain: repaired sup beta_k (K0 = 20)", beta_sup, "1.2235"),
    ])
}
