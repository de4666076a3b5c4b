//! Numerical check of the Weyl differencing inequality
//! `S_f^2 <= (N - 1 + q)(N/q + (2/q) sum_{r<q} (1 - r/q) S_{g_r}(a, N - r))`.

use crate::error::{usage, Error, Result};

use super::oracle::{sum_phases, PhaseFunction, DEFAULT_ORACLE_CAP};

#[derive(Clone, Debug)]
pub struct AProcessCheck {
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
}

/// Relative slack allowed for floating-point error in the brute-force sums.
const SLACK: f64 = 1e-9;

pub fn a_process_check(f: &PhaseFunction, a: i64, n: u64, q: u64) -> Result<AProcessCheck> {
    if q == 0 || n == 0 {
        return Err(usage("a_process_check needs q >= 1 and N >= 1"));
    }
    let work = n.saturating_mul(q);
    if work > DEFAULT_ORACLE_CAP {
        return Err(Error::CapExceeded {
            requested: work,
            cap: DEFAULT_ORACLE_CAP,
        });
    }
    let phase = f.phase_fn(a.abs() + (n + q) as i64 + 1);
    let len = (n + q.min(n)) as usize;
    let table: Vec<f64> = (1..=len as i64).map(|j| phase(a + j)).collect();
    let at = |m: i64| table[(m - a - 1) as usize];
    let (re, im) = sum_phases(a, n, &at);
    let s = re.hypot(im);
    let lhs = s * s;
    let qf = q as f64;
    let mut weighted = 0.0;
    for r in 1..q.min(n) {
        let ri = r as i64;
        let g = |m: i64| {
            let d = at(m + ri) - at(m);
            d - d.floor()
        };
        let (gr, gi) = sum_phases(a, n - r, &g);
        weighted += (1.0 - r as f64 / qf) * gr.hypot(gi);
    }
    // Terms with r >= N are empty sums.
    let nf = n as f64;
    let rhs = (nf - 1.0 + qf) * (nf / qf + 2.0 / qf * weighted);
    Ok(AProcessCheck {
        lhs,
        rhs,
        holds: lhs <= rhs * (1.0 + SLACK) + SLACK,
    })
}
