//! Seeded comparisons of every applicable bound against the brute-force sum.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rug::Float;
use serde::Serialize;

use crate::error::Result;
use crate::numerics::DirectedReal as DR;

use super::bounds::{
    kth_derivative_bound, kuzmin_landau_general, second_derivative_ab, second_derivative_bound,
    trivial_bound,
};
use super::constants::kth_derivative_constants;
use super::oracle::{
    brute_force_expsum_capped, random_zeta_log_instance, zeta_log_params, PhaseFunction,
    ZetaLogInstance,
};

/// Absolute tolerance for floating-point error in the oracle.
pub const DOMINANCE_TOL: f64 = 1e-6;

#[derive(Clone, Debug, Serialize)]
pub struct BoundValue {
    pub name: String,
    /// Lower endpoint of the enclosure of the bound.
    pub value: f64,
    pub margin: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepSample {
    pub index: usize,
    pub k: u32,
    pub t: f64,
    pub a: i64,
    pub n: u64,
    pub eta3: f64,
    pub brute: f64,
    pub bounds: Vec<BoundValue>,
}

impl SweepSample {
    pub fn worst(&self) -> Option<&BoundValue> {
        self.bounds.iter().min_by(|x, y| x.margin.total_cmp(&y.margin))
    }

    pub fn violations(&self) -> usize {
        self.bounds.iter().filter(|b| b.margin < -DOMINANCE_TOL).count()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub seed: u64,
    pub samples: Vec<SweepSample>,
    pub violations: usize,
    /// Smallest `bound - brute` over all samples and bounds.
    pub worst_margin: Option<f64>,
    pub worst_bound: Option<String>,
}

fn push(out: &mut Vec<BoundValue>, name: &str, v: &DR, brute: f64) {
    let value = v.lo_f64();
    out.push(BoundValue {
        name: name.to_string(),
        value,
        margin: value - brute,
    });
}

/// Every bound whose hypotheses are certified for `inst`.
pub fn bounds_for_instance(inst: &ZetaLogInstance, brute: f64, prec: u32) -> Result<Vec<BoundValue>> {
    let f = inst.phase();
    let mut out = Vec::new();
    push(&mut out, "trivial", &trivial_bound(inst.n, prec), brute);

    let p = zeta_log_params(&f, inst.k, inst.a, inst.n, prec)?;
    let eta3 = DR::from_f64(inst.eta3, prec);
    let c = kth_derivative_constants(inst.k, &eta3, &p.h)?;
    push(&mut out, &format!("kth_derivative(k={})", inst.k), &kth_derivative_bound(&p, &c)?, brute);

    let p2 = zeta_log_params(&f, 2, inst.a, inst.n, prec)?;
    push(&mut out, "second_derivative", &second_derivative_bound(inst.n, &p2.h, &p2.lambda)?.value, brute);
    push(&mut out, "second_derivative_ab", &second_derivative_ab(inst.n, &p2.h, &p2.lambda)?, brute);

    // f' is monotone, so its range on (a, a + N] lies between the endpoint values.
    let d_lo = f.derivative(1, &DR::int(inst.a, prec));
    let d_hi = f.derivative(1, &DR::int(inst.a + inst.n as i64, prec));
    let range = d_lo.hull(&d_hi);
    let l = range.lo().to_f64().floor();
    let lam1 = (range.clone() - DR::from_f64(l, prec)).lower();
    let mu1 = (DR::from_f64(l + 1.0, prec) - range).lower();
    if let Ok(v) = kuzmin_landau_general(&lam1, &mu1) {
        push(&mut out, "kuzmin_landau_general", &v, brute);
    }
    Ok(out)
}

/// Runs `samples` seeded instances with `N <= n_max`.
pub fn dominance_sweep(samples: usize, seed: u64, n_max: u64, cap: u64, prec: u32) -> Result<SweepReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(samples);
    for index in 0..samples {
        let inst = random_zeta_log_instance(&mut rng, n_max);
        let brute = brute_force_expsum_capped(&inst.phase(), inst.a, inst.n, cap)?;
        let bounds = bounds_for_instance(&inst, brute, prec)?;
        out.push(SweepSample {
            index,
            k: inst.k,
            t: inst.t,
            a: inst.a,
            n: inst.n,
            eta3: inst.eta3,
            brute,
            bounds,
        });
    }
    let violations = out.iter().map(SweepSample::violations).sum();
    let worst = out
        .iter()
        .filter_map(|s| s.worst())
        .min_by(|x, y| x.margin.total_cmp(&y.margin));
    Ok(SweepReport {
        seed,
        violations,
        worst_margin: worst.map(|w| w.margin),
        worst_bound: worst.map(|w| w.name.clone()),
        samples: out,
    })
}

/// A quadratic phase `lambda2 x^2 / 2 + c x` with `f'' = lambda2` exactly.
#[derive(Clone, Debug)]
pub struct QuadraticInstance {
    pub a: i64,
    pub n: u64,
    pub h: f64,
    pub lambda2: f64,
    pub linear: f64,
}

impl QuadraticInstance {
    pub fn random(rng: &mut ChaCha8Rng, n_max: u64) -> Self {
        let n = rng.gen_range(1..=n_max);
        let lambda2 = (rng.gen_range((1e-7f64).ln()..(0.5f64).ln())).exp();
        QuadraticInstance {
            a: rng.gen_range(-1000..1000),
            n,
            h: rng.gen_range(1.0001..4.0),
            lambda2,
            linear: rng.gen_range(0.0..1.0),
        }
    }

    pub fn phase(&self) -> PhaseFunction {
        PhaseFunction::polynomial(vec![
            Float::with_val(64, 0),
            Float::with_val(64, self.linear),
            Float::with_val(64, self.lambda2) / 2u32,
        ])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweep_has_no_violations_and_is_deterministic() {
        let r1 = dominance_sweep(12, 7, 5_000, 10_000_000, 128).unwrap();
        let r2 = dominance_sweep(12, 7, 5_000, 10_000_000, 128).unwrap();
        assert_eq!(r1.violations, 0, "{r1:?}");
        assert_eq!(
            serde_json::to_string(&r1).unwrap(),
            serde_json::to_string(&r2).unwrap()
        );
    }

    #[test]
    fn zero_samples_is_vacuous() {
        let r = dominance_sweep(0, 1, 100, 100, 128).unwrap();
        assert!(r.samples.is_empty() && r.violations == 0 && r.worst_margin.is_none());
    }
}
