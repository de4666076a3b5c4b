//! Brute-force evaluation of `|sum_{a < n <= a+N} e(f(n))|` and the random
//! instances used to test the bounds against it.

use std::f64::consts::TAU;
use std::sync::Arc;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use rug::{Float, Integer};

use crate::error::{usage, Error, Result};
use crate::numerics::DirectedReal as DR;

use super::bounds::DerivTestParams;

pub const DEFAULT_ORACLE_CAP: u64 = 10_000_000;
pub const CHUNK: u64 = 1 << 16;

type Deriv = Arc<dyn Fn(u32, &DR) -> DR + Send + Sync>;
type Phase = Arc<dyn Fn(i64) -> f64 + Send + Sync>;

#[derive(Clone)]
pub enum PhaseKind {
    /// `f(x) = -(t / 2 pi) log x`.
    ZetaLog { t: Float },
    /// `f(x) = sum c_i x^i`.
    Polynomial { coeffs: Vec<Float> },
    /// A phase given by its values mod 1 and a derivative envelope.
    Custom { name: String, phase: Phase, deriv: Deriv },
}

#[derive(Clone)]
pub struct PhaseFunction {
    pub kind: PhaseKind,
}

impl std::fmt::Debug for PhaseFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.kind {
            PhaseKind::ZetaLog { t } => write!(f, "ZetaLog(t = {})", t.to_f64()),
            PhaseKind::Polynomial { coeffs } => {
                write!(f, "Polynomial({:?})", coeffs.iter().map(Float::to_f64).collect::<Vec<_>>())
            }
            PhaseKind::Custom { name, .. } => write!(f, "Custom({name})"),
        }
    }
}

impl PhaseFunction {
    pub fn zeta_log(t: Float) -> Self {
        PhaseFunction {
            kind: PhaseKind::ZetaLog { t },
        }
    }

    pub fn polynomial(coeffs: Vec<Float>) -> Self {
        PhaseFunction {
            kind: PhaseKind::Polynomial { coeffs },
        }
    }

    pub fn polynomial_f64(coeffs: &[f64]) -> Self {
        Self::polynomial(coeffs.iter().map(|&c| Float::with_val(64, c)).collect())
    }

    pub fn custom(
        name: &str,
        phase_mod1: impl Fn(i64) -> f64 + Send + Sync + 'static,
        deriv: impl Fn(u32, &DR) -> DR + Send + Sync + 'static,
    ) -> Self {
        PhaseFunction {
            kind: PhaseKind::Custom {
                name: name.to_string(),
                phase: Arc::new(phase_mod1),
                deriv: Arc::new(deriv),
            },
        }
    }

    /// Bits needed so that `f(n)` for `|n| <= n_max` keeps 64 fractional bits.
    fn phase_prec(&self, n_max: i64) -> u32 {
        let mag = match &self.kind {
            PhaseKind::ZetaLog { t } => {
                (t.to_f64().abs() + 1.0).log2() + ((n_max.unsigned_abs() as f64 + 2.0).ln().log2()).max(0.0)
            }
            PhaseKind::Polynomial { coeffs } => coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    let e = c.get_exp().unwrap_or(0) as f64;
                    e + i as f64 * (n_max.unsigned_abs() as f64 + 1.0).log2()
                })
                .fold(0.0, f64::max),
            PhaseKind::Custom { .. } => 0.0,
        };
        let coeff_bits = match &self.kind {
            PhaseKind::Polynomial { coeffs } => coeffs.iter().map(Float::prec).max().unwrap_or(64),
            _ => 0,
        };
        (mag.max(0.0) as u32 + 96).max(128) + coeff_bits
    }

    /// A closure returning `f(n) mod 1` in `[0, 1)`.
    pub fn phase_fn(&self, n_max: i64) -> Phase {
        let prec = self.phase_prec(n_max);
        match &self.kind {
            PhaseKind::ZetaLog { t } => {
                let c = Float::with_val(prec, t) / (Float::with_val(prec, rug::float::Constant::Pi) * 2u32);
                let c = -c;
                Arc::new(move |n: i64| {
                    let v = Float::with_val(prec, Float::with_val(prec, n).ln()) * &c;
                    frac(v)
                })
            }
            PhaseKind::Polynomial { coeffs } => {
                let coeffs = coeffs.clone();
                Arc::new(move |n: i64| {
                    let x = Float::with_val(prec, n);
                    let mut acc = Float::new(prec);
                    for c in coeffs.iter().rev() {
                        acc *= &x;
                        acc += c;
                    }
                    frac(acc)
                })
            }
            PhaseKind::Custom { phase, .. } => phase.clone(),
        }
    }

    pub fn phase_mod1(&self, n: i64) -> f64 {
        (self.phase_fn(n.abs() + 1))(n)
    }

    /// Enclosure of `f^(order)` over `x`.
    pub fn derivative(&self, order: u32, x: &DR) -> DR {
        let p = x.precision();
        match &self.kind {
            PhaseKind::ZetaLog { t } => {
                let c = DR::point(t.clone()).with_precision(p) / (DR::pi(p) * 2);
                if order == 0 {
                    return -(c * x.ln());
                }
                // f^(m)(x) = -(t/2pi) (-1)^(m-1) (m-1)! / x^m
                let fact = DR::integer(&Integer::from(Integer::factorial(order - 1)), p);
                let sign = if order % 2 == 1 { -1 } else { 1 };
                c * fact * sign / x.powi(order as i64)
            }
            PhaseKind::Polynomial { coeffs } => {
                let mut acc = DR::zero(p);
                for (i, c) in coeffs.iter().enumerate().rev() {
                    let i = i as u32;
                    if i < order {
                        break;
                    }
                    // falling factorial i (i-1) ... (i-order+1)
                    let ff = (i - order + 1..=i).fold(Integer::from(1), |a, v| a * v);
                    let term = DR::point(c.clone()).with_precision(p) * DR::integer(&ff, p);
                    acc = acc * x + term;
                }
                acc
            }
            PhaseKind::Custom { deriv, .. } => deriv(order, x),
        }
    }
}

fn frac(v: Float) -> f64 {
    let f = Float::with_val(v.prec(), v.floor_ref());
    let r = v - f;
    let x = r.to_f64();
    if x >= 1.0 {
        0.0
    } else {
        x
    }
}

#[derive(Clone, Copy, Default)]
struct Kahan {
    sum: f64,
    c: f64,
}

impl Kahan {
    fn add(&mut self, x: f64) {
        let y = x - self.c;
        let t = self.sum + y;
        self.c = (t - self.sum) - y;
        self.sum = t;
    }
}

/// `sum e(phase(n))` over `a < n <= a + N` by compensated summation in
/// chunks of `2^16` terms, combined in index order.
pub fn sum_phases(a: i64, n: u64, phase: &(dyn Fn(i64) -> f64 + Sync)) -> (f64, f64) {
    let chunks = n.div_ceil(CHUNK);
    let parts: Vec<(Kahan, Kahan)> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let (mut re, mut im) = (Kahan::default(), Kahan::default());
            let lo = c * CHUNK + 1;
            let hi = ((c + 1) * CHUNK).min(n);
            for j in lo..=hi {
                let (s, co) = (TAU * phase(a + j as i64)).sin_cos();
                re.add(co);
                im.add(s);
            }
            (re, im)
        })
        .collect();
    let (mut re, mut im) = (Kahan::default(), Kahan::default());
    for (r, i) in parts {
        re.add(r.sum);
        re.add(-r.c);
        im.add(i.sum);
        im.add(-i.c);
    }
    (re.sum, im.sum)
}

pub fn brute_force_expsum_capped(f: &PhaseFunction, a: i64, n: u64, cap: u64) -> Result<f64> {
    if n > cap {
        return Err(Error::CapExceeded { requested: n, cap });
    }
    let phase = f.phase_fn(a.abs() + n as i64 + 1);
    let (re, im) = sum_phases(a, n, &*phase);
    Ok(re.hypot(im))
}

pub fn brute_force_expsum(f: &PhaseFunction, a: i64, n: u64) -> Result<f64> {
    brute_force_expsum_capped(f, a, n, DEFAULT_ORACLE_CAP)
}

/// Rigorous `(lambda_k, h)` for the zeta-log phase on `(a, a + N]`, from
/// `|f^(k)|` decreasing in `x`.
pub fn zeta_log_params(f: &PhaseFunction, k: u32, a: i64, n: u64, prec: u32) -> Result<DerivTestParams> {
    if !matches!(f.kind, PhaseKind::ZetaLog { .. }) || a < 1 {
        return Err(usage("zeta_log_params needs a zeta-log phase and a >= 1"));
    }
    let lo_end = f.derivative(k, &DR::int(a + n as i64, prec)).abs();
    let hi_end = f.derivative(k, &DR::int(a, prec)).abs();
    let lambda = lo_end.lower();
    let h = DR::point((hi_end.upper() / &lambda).hi().clone());
    Ok(DerivTestParams { k, a, n, h, lambda })
}

/// A sampled zeta-log instance for the dominance sweep.
#[derive(Clone, Debug)]
pub struct ZetaLogInstance {
    pub k: u32,
    pub t: f64,
    pub a: i64,
    pub n: u64,
    pub eta3: f64,
}

impl ZetaLogInstance {
    pub fn phase(&self) -> PhaseFunction {
        PhaseFunction::zeta_log(Float::with_val(64, self.t))
    }
}

fn log_uniform(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    (rng.gen_range(lo.ln()..hi.ln())).exp()
}

/// Draws an instance with `k` in `[3, 8]`, `N <= n_max`, `t` in `[1e3, 1e9]`,
/// `h <= 3` and `lambda_k` between `N^(-2+2/K)` and `N^(-1+1/K)`.
pub fn random_zeta_log_instance(rng: &mut ChaCha8Rng, n_max: u64) -> ZetaLogInstance {
    let k: u32 = rng.gen_range(3..=8);
    let kk = (1u64 << (k - 1)) as f64;
    let fact: f64 = (1..k).map(|i| i as f64).product();
    loop {
        let n = log_uniform(rng, 2.0, n_max as f64).round().max(2.0) as u64;
        let h_target: f64 = rng.gen_range(1.05..=3.0);
        let a = (n as f64 / (h_target.powf(1.0 / k as f64) - 1.0)).ceil() as i64;
        let nf = n as f64;
        let lam = log_uniform(rng, nf.powf(-2.0 + 2.0 / kk), nf.powf(-1.0 + 1.0 / kk));
        let t = TAU * lam * ((a as f64) + nf).powi(k as i32) / fact;
        if !(1e3..=1e9).contains(&t) {
            continue;
        }
        let eta3 = rng.gen_range(0.5..=5.0);
        return ZetaLogInstance { k, t, a, n, eta3 };
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn constant_phase_sums_to_length() {
        let f = PhaseFunction::polynomial_f64(&[0.0]);
        assert!((brute_force_expsum(&f, 0, 17).unwrap() - 17.0).abs() < 1e-12);
    }

    #[test]
    fn alternating_phase_cancels() {
        let f = PhaseFunction::polynomial_f64(&[0.0, 0.5]);
        for m in [1u64, 5, 1000, 70_001] {
            assert!(brute_force_expsum(&f, 0, 2 * m).unwrap() < 1e-9);
        }
    }

    #[test]
    fn zeta_log_value_is_reproducible_and_matches_high_precision() {
        let f = PhaseFunction::zeta_log(Float::with_val(64, 1000));
        let v = brute_force_expsum(&f, 10, 100).unwrap();
        assert_eq!(v, brute_force_expsum(&f, 10, 100).unwrap());
        assert!(v <= 100.0);
        // Independent evaluation with 300-bit phases and 300-bit trig.
        let p = 300;
        let (mut re, mut im) = (Float::new(p), Float::new(p));
        let c = Float::with_val(p, 1000) / (Float::with_val(p, rug::float::Constant::Pi) * 2u32);
        let two_pi = Float::with_val(p, rug::float::Constant::Pi) * 2u32;
        for n in 11..=110 {
            let ph = -Float::with_val(p, Float::with_val(p, n).ln()) * &c * &two_pi;
            re += Float::with_val(p, ph.cos_ref());
            im += Float::with_val(p, ph.sin_ref());
        }
        let exact = Float::with_val(p, re.hypot(&im)).to_f64();
        assert!((v - exact).abs() < 1e-9, "{v} vs {exact}");
    }

    #[test]
    fn cap_is_enforced() {
        let f = PhaseFunction::polynomial_f64(&[0.0]);
        assert!(matches!(
            brute_force_expsum_capped(&f, 0, 11, 10),
            Err(Error::CapExceeded { requested: 11, cap: 10 })
        ));
    }

    #[test]
    fn derivatives_match_finite_differences() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let fz = PhaseFunction::zeta_log(Float::with_val(64, 12345.5));
        let fp = PhaseFunction::polynomial_f64(&[0.3, -1.25, 0.5, 0.125, -0.0625]);
        for f in [fz, fp] {
            for _ in 0..200 {
                let x: f64 = rng.gen_range(2.0..500.0);
                for m in 1..=4u32 {
                    let d = f.derivative(m, &DR::from_f64(x, 200)).mid_f64();
                    // Differences taken at 200 bits so that cancellation is harmless.
                    let step = DR::from_f64(x * 1e-12, 200);
                    let xx = DR::from_f64(x, 200);
                    let g = |y: DR| f.derivative(m - 1, &y);
                    let fd = (g(&xx + &step) - g(&xx - &step)) / (step * 2);
                    let fd = fd.mid_f64();
                    assert!((d - fd).abs() <= 1e-6 * d.abs().max(1e-12), "m={m}, x={x}: {d} vs {fd}");
                }
            }
        }
    }

    #[test]
    fn generated_instances_are_admissible() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let inst = random_zeta_log_instance(&mut rng, 100_000);
            assert!((3..=8).contains(&inst.k) && inst.n <= 100_000 && inst.a >= 1);
            let p = zeta_log_params(&inst.phase(), inst.k, inst.a, inst.n, 128).unwrap();
            assert!(p.h.certainly_le(&DR::lit("3.0001", 128)), "{inst:?} {:?}", p.h);
            assert!(p.h.certainly_gt(&DR::one(128)));
        }
    }
}
