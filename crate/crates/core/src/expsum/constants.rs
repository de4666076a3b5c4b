//! The constants `A_k`, `B_k` of the k-th derivative test and the uniform
//! certificate for `k >= 10`.

use rug::{Integer, Rational};

use crate::error::{usage, Error, Result};
use crate::numerics::DirectedReal as DR;
use crate::report::CheckItem;

/// `K = 2^(k-1)` as an exact integer.
pub fn big_k(k: u32) -> Integer {
    Integer::from(1) << (k - 1)
}

/// Constants of the third derivative test for given `(eta3, h)`.
#[derive(Clone, Debug)]
pub struct ThirdDerivConstants {
    pub a3: DR,
    pub b3: DR,
    pub lambda0: DR,
    pub delta3: DR,
    pub kappa: DR,
}

pub fn third_derivative_constants(eta3: &DR, h: &DR) -> ThirdDerivConstants {
    let p = eta3.precision().max(h.precision());
    let pi = DR::pi(p);
    let sp = pi.sqrt();
    let s_eta = eta3.sqrt();
    // lambda0^(1/3) is the reciprocal of the bracket, so no cube root is needed.
    let l13 = (eta3.recip() + DR::int(32, p) * &s_eta * h / (DR::int(15, p) * &sp)).recip();
    let lambda0 = l13.powi(3);
    let inner = (DR::one(p) + DR::ratio(3, 8, p) * &sp * eta3.powi(3).sqrt()).sqrt();
    let kappa = (&inner - 1) / 2;
    let delta3 = ((&inner + 1) / 2).sqrt();
    let e_l = eta3 + &l13;
    let a3 = ((eta3 * h).recip()
        + DR::int(32, p) / (DR::int(15, p) * &sp) * e_l.sqrt()
        + &e_l * &l13 / 3)
        .sqrt()
        * &delta3;
    let b3 = DR::int(32, p).sqrt() / (DR::int(3, p).sqrt() * sp.sqrt() * eta3.sqrt().sqrt()) * &delta3;
    ThirdDerivConstants {
        a3,
        b3,
        lambda0,
        delta3,
        kappa,
    }
}

/// `delta_j = sqrt(1 + 2 / 2337^(1 - 2/J) * (9 pi eta3 / 1024)^(1/J))`, `J = 2^(j-1)`.
pub fn delta_j(j: u32, eta3: &DR) -> DR {
    let p = eta3.precision();
    let jj = big_k(j);
    let two_over_j = DR::rational(&Rational::from((Integer::from(2), jj.clone())), p);
    let inv_j = DR::rational(&Rational::from((Integer::from(1), jj)), p);
    let base = DR::int(9, p) * DR::pi(p) * eta3 / 1024;
    let t = DR::int(2, p) / DR::int(2337, p).pow(&(DR::one(p) - two_over_j)) * base.pow(&inv_j);
    (DR::one(p) + t).sqrt()
}

/// `alpha_j = 4(J-1)^2 / ((2J-1)(4J-3))`, exact.
pub fn alpha_j(j: u32) -> Rational {
    let jj = big_k(j);
    let num = Integer::from(4) * Integer::from(&jj - 1u32).square();
    let den = (Integer::from(2u32 * &jj) - 1u32) * (Integer::from(4u32 * &jj) - 3u32);
    Rational::from((num, den))
}

/// `beta_j = 4(J-1)^2 / ((2J-3)(4J-5))`, exact.
pub fn beta_j(j: u32) -> Rational {
    let jj = big_k(j);
    let num = Integer::from(4) * Integer::from(&jj - 1u32).square();
    let den = (Integer::from(2u32 * &jj) - 3u32) * (Integer::from(4u32 * &jj) - 5u32);
    Rational::from((num, den))
}

/// Coefficient of `A_j^(1/2)` in the recursion, `2^(19/12)(J-1)/sqrt((2J-1)(4J-3))`.
pub fn coef_a(j: u32, p: u32) -> DR {
    DR::int(2, p).pow_ratio(7, 12) * DR::rational(&alpha_j(j), p).sqrt()
}

/// Coefficient of `B_j^(1/2)`, `2^(3/2)(J-1)/sqrt((2J-3)(4J-5))`.
pub fn coef_b(j: u32, p: u32) -> DR {
    (DR::int(2, p) * DR::rational(&beta_j(j), p)).sqrt()
}

/// `A_k`, `B_k` and every intermediate of the recursion.
#[derive(Clone, Debug)]
pub struct DerivTestConstants {
    pub k: u32,
    pub eta3: DR,
    pub h: DR,
    pub a_k: DR,
    pub b_k: DR,
    /// `(j, A_j, B_j)` for `j = 3..=k`.
    pub levels: Vec<(u32, DR, DR)>,
    /// `(j, delta_j)` for `j = 3..k`.
    pub deltas: Vec<(u32, DR)>,
    pub alphas: Vec<(u32, Rational)>,
    pub betas: Vec<(u32, Rational)>,
    pub third: ThirdDerivConstants,
}

impl DerivTestConstants {
    pub fn a(&self, j: u32) -> Option<&DR> {
        self.levels.iter().find(|l| l.0 == j).map(|l| &l.1)
    }

    pub fn b(&self, j: u32) -> Option<&DR> {
        self.levels.iter().find(|l| l.0 == j).map(|l| &l.2)
    }

    /// Copy truncated to order `k`.
    pub fn truncated(&self, k: u32) -> DerivTestConstants {
        let mut c = self.clone();
        c.k = k;
        c.levels.retain(|l| l.0 <= k);
        c.deltas.retain(|d| d.0 < k);
        c.alphas.retain(|d| d.0 < k);
        c.betas.retain(|d| d.0 < k);
        let last = c.levels.last().expect("k >= 3").clone();
        c.a_k = last.1;
        c.b_k = last.2;
        c
    }
}

pub fn kth_derivative_constants(k: u32, eta3: &DR, h: &DR) -> Result<DerivTestConstants> {
    if k < 3 {
        return Err(usage(format!("k-th derivative constants need k >= 3, got {k}")));
    }
    if !eta3.certainly_positive() || !h.certainly_gt(&DR::one(h.precision())) {
        return Err(usage("need eta3 > 0 and h > 1"));
    }
    let p = eta3.precision().max(h.precision());
    let third = third_derivative_constants(eta3, h);
    let mut a = third.a3.clone();
    let mut b = third.b3.clone();
    let mut levels = vec![(3, a.clone(), b.clone())];
    let mut deltas = Vec::new();
    let mut alphas = Vec::new();
    let mut betas = Vec::new();
    for j in 3..k {
        let d = delta_j(j, eta3);
        let inv_j = DR::rational(&Rational::from((Integer::from(-1), big_k(j))), p);
        a = &d * (h.pow(&inv_j) + coef_a(j, p) * a.sqrt());
        b = &d * coef_b(j, p) * b.sqrt();
        deltas.push((j, d));
        alphas.push((j, alpha_j(j)));
        betas.push((j, beta_j(j)));
        levels.push((j + 1, a.clone(), b.clone()));
    }
    Ok(DerivTestConstants {
        k,
        eta3: eta3.clone(),
        h: h.clone(),
        a_k: a,
        b_k: b,
        levels,
        deltas,
        alphas,
        betas,
        third,
    })
}

/// `(A_r, B_r)`; order 2 uses the closed forms of the second-derivative test.
pub fn ab_constants(r: u32, eta3: &DR, h: &DR) -> Result<(DR, DR)> {
    if r == 2 {
        let p = eta3.precision().max(h.precision());
        return Ok((super::bounds::a2(p), super::bounds::b2(p)));
    }
    let c = kth_derivative_constants(r, eta3, h)?;
    Ok((c.a_k, c.b_k))
}

/// Fixed point of `x -> delta (1 + 2^(1/12) sqrt(x))`.
pub fn fixed_point(delta: &DR) -> DR {
    let p = delta.precision();
    let c = DR::int(2, p).pow_ratio(-11, 12) * delta;
    (&c + (c.sqr() + delta).sqrt()).sqr()
}

/// The uniform statement `A_k <= 2.762`, `B_k <= 1.02` for `10 <= k <= k_max`.
#[derive(Clone, Debug)]
pub struct UniformCertificate {
    pub k_max: u32,
    pub constants: DerivTestConstants,
    pub x_star: DR,
    pub y_star: DR,
    pub items: Vec<CheckItem>,
}

impl UniformCertificate {
    pub fn passed(&self) -> bool {
        self.items.iter().all(CheckItem::passed)
    }
}

pub const UNIFORM_ETA3: &str = "4.7399";

/// Builds every check; never fails early so the report lists all items.
pub fn uniform_certificate(k_max: u32, prec: u32) -> Result<UniformCertificate> {
    if k_max < 10 {
        return Err(usage("uniform constants need k_max >= 10"));
    }
    let eta = DR::lit(UNIFORM_ETA3, prec);
    let h = DR::int(3, prec);
    let c = kth_derivative_constants(k_max, &eta, &h)?;
    let mut items = vec![
        CheckItem::le("A_10(4.7399, 3)", c.a(10).unwrap(), "2.744"),
        CheckItem::le("B_10(4.7399)", c.b(10).unwrap(), "1.020"),
    ];
    let mut worst_a = c.a(10).unwrap().clone();
    let mut worst_b = c.b(10).unwrap().clone();
    for k in 10..=k_max {
        worst_a = worst_a.max(c.a(k).unwrap());
        worst_b = worst_b.max(c.b(k).unwrap());
    }
    items.push(CheckItem::le(&format!("max A_k, 10 <= k <= {k_max}"), &worst_a, "2.762"));
    items.push(CheckItem::le(&format!("max B_k, 10 <= k <= {k_max}"), &worst_b, "1.02"));

    let d10 = delta_j(10, &eta);
    let x_star = fixed_point(&d10);
    items.push(CheckItem::le("fixed point x*", &x_star, "2.762"));
    items.push(CheckItem::holds(
        "A_10 <= x*",
        "A_10 <= x*",
        c.a(10).unwrap(),
        c.a(10).unwrap().certainly_le(&x_star),
    ));
    let mut worst_db = DR::zero(prec);
    let mut worst_delta_growth = false;
    for j in 10..=k_max.max(10) {
        let d = delta_j(j, &eta);
        worst_db = worst_db.max(&(&d * coef_b(j, prec)));
        if j > 10 && !d.certainly_le(&d10) {
            worst_delta_growth = true;
        }
    }
    items.push(CheckItem::le("max delta_k 2^(3/2)(K-1)/sqrt((2K-3)(4K-5)), k >= 10", &worst_db, "1.002"));
    items.push(CheckItem::holds("delta_k <= delta_10, k >= 10", "decreasing", &d10, !worst_delta_growth));
    let y_star = DR::lit("1.002", prec).sqr();
    items.push(CheckItem::lt("fixed point y* = 1.002^2", &y_star, "1.02"));
    let limit = DR::int(2, prec).pow_ratio(1, 12);
    let mut coef_ok = true;
    let mut worst_coef = DR::zero(prec);
    for j in 2..=61 {
        let cf = coef_a(j, prec);
        coef_ok &= cf.certainly_lt(&limit);
        worst_coef = worst_coef.max(&cf);
    }
    items.push(CheckItem::holds(
        "2^(19/12)(K-1)/sqrt((2K-1)(4K-3)) < 2^(1/12), K = 2..2^60",
        "< 2^(1/12)",
        &worst_coef,
        coef_ok,
    ));
    Ok(UniformCertificate {
        k_max,
        constants: c,
        x_star,
        y_star,
        items,
    })
}

/// Like [`uniform_certificate`] but turns a failed item into an error naming it.
pub fn uniform_kth_constants(k_max: u32, prec: u32) -> Result<UniformCertificate> {
    let cert = uniform_certificate(k_max, prec)?;
    if let Some(bad) = cert.items.iter().find(|i| !i.passed()) {
        return Err(Error::CertificateFailure {
            name: bad.name.clone(),
            detail: format!(
                "[{}, {}] vs {}",
                bad.computed_lo, bad.computed_hi, bad.paper_target
            ),
        });
    }
    Ok(cert)
}
