use std::cmp::Ordering;
use std::collections::BinaryHeap;

use rayon::prelude::*;
use rug::float::Round;
use rug::Float;

use super::expr::{interval_eval, Env, Expr};
use super::DirectedReal;
use crate::error::{domain, usage, Error, Result};

type DR = DirectedReal;

fn newton_w(x: &Float, prec: u32) -> Float {
    let one = Float::with_val(prec, 1);
    let mut w = if *x > std::f64::consts::E {
        let l1 = Float::with_val(prec, x.ln_ref());
        let l2 = Float::with_val(prec, l1.ln_ref());
        l1 - l2
    } else {
        Float::with_val(prec, x.ln_1p_ref())
    };
    let lx = Float::with_val(prec, x.ln_ref());
    let eps = Float::with_val(prec, Float::i_exp(1, 8 - prec as i32));
    for _ in 0..400 {
        let step = if *x > 1 {
            // w + ln w = ln x is better conditioned for large x.
            let g = Float::with_val(prec, w.ln_ref()) + &w - &lx;
            g / (Float::with_val(prec, &one / &w) + &one)
        } else {
            let ew = Float::with_val(prec, w.exp_ref());
            let g = Float::with_val(prec, &w * &ew) - x;
            g / (ew * Float::with_val(prec, &w + &one))
        };
        w -= &step;
        if step.is_zero() || Float::with_val(prec, step.abs_ref()) <= Float::with_val(prec, &w * &eps).abs() {
            break;
        }
    }
    w
}

fn w_exp_w(w: &Float, prec: u32) -> DR {
    let p = DR::point(w.clone()).with_precision(prec);
    &p * &p.exp()
}

fn w_endpoint(x: &Float, prec: u32, upper: bool) -> Float {
    if x.is_zero() {
        return Float::new(prec);
    }
    if x.is_infinite() {
        return x.clone();
    }
    let work = prec + 32;
    let approx = newton_w(&Float::with_val(work, x), work);
    let round = if upper { Round::Up } else { Round::Down };
    let mut w = Float::with_val_round(prec, &approx, round).0;
    let target = DR::point(x.clone());
    loop {
        let v = w_exp_w(&w, work);
        let ok = if upper {
            v.certainly_ge(&target)
        } else {
            v.certainly_le(&target)
        };
        if ok {
            return w;
        }
        if upper {
            w.next_up();
        } else {
            w.next_down();
        }
    }
}

/// Principal branch of the Lambert W function on `[0, inf)`.
pub fn lambert_w0(x: &DR) -> Result<DR> {
    if x.lo() < &0 || x.lo().is_nan() {
        return Err(domain(format!("w0({x})")));
    }
    let prec = x.precision();
    let lo = w_endpoint(x.lo(), prec, false);
    let hi = w_endpoint(x.hi(), prec, true);
    Ok(DR::from_bounds(lo, hi))
}

/// Default bisection tolerance: `2^-100` relative to the bracket size.
pub fn default_tolerance(lo: &Float, hi: &Float) -> Float {
    let m = Float::with_val(64, lo.abs_ref()).max(&Float::with_val(64, hi.abs_ref()));
    let m = if m < 1e-300 { Float::with_val(64, 1) } else { m };
    m * Float::with_val(64, Float::i_exp(1, -100))
}

fn sign(v: &DR) -> Option<Ordering> {
    if v.certainly_positive() {
        Some(Ordering::Greater)
    } else if v.certainly_negative() {
        Some(Ordering::Less)
    } else if v.is_point() && v.lo().is_zero() {
        Some(Ordering::Equal)
    } else {
        None
    }
}

/// Narrows `[lo, hi]` around a root of `f`, which must change sign with
/// certainty across the bracket. When the sign at the midpoint cannot be
/// decided, the 3/8 and 5/8 points are tried before giving up, so the result
/// can be wider than `tol`.
pub fn bisect_root<F>(f: F, lo: &Float, hi: &Float, tol: Option<&Float>, prec: u32) -> Result<DR>
where
    F: Fn(&DR) -> DR,
{
    let bracket_err = || Error::BracketError {
        lo: lo.to_string(),
        hi: hi.to_string(),
    };
    let mut a = Float::with_val(prec, lo);
    let mut b = Float::with_val(prec, hi);
    if a > b {
        std::mem::swap(&mut a, &mut b);
    }
    let sa = sign(&f(&DR::point(a.clone())));
    let sb = sign(&f(&DR::point(b.clone())));
    match (sa, sb) {
        (Some(Ordering::Equal), _) => return Ok(DR::point(a)),
        (_, Some(Ordering::Equal)) => return Ok(DR::point(b)),
        (Some(x), Some(y)) if x != y => {}
        _ => return Err(bracket_err()),
    }
    let s_lo = sa.unwrap();
    let tol = tol.cloned().unwrap_or_else(|| default_tolerance(&a, &b));
    for _ in 0..(4 * prec as usize + 64) {
        if Float::with_val(prec, &b - &a) <= tol {
            break;
        }
        let width = Float::with_val(prec, &b - &a);
        let probe = |num: u32| {
            let mut m = Float::with_val(prec, &width * num);
            m /= 8;
            m += &a;
            m
        };
        let mut moved = false;
        for num in [4, 3, 5] {
            let m = probe(num);
            if m <= a || m >= b {
                continue;
            }
            match sign(&f(&DR::point(m.clone()))) {
                Some(Ordering::Equal) => return Ok(DR::point(m)),
                Some(s) if s == s_lo => {
                    a = m;
                    moved = true;
                }
                Some(_) => {
                    b = m;
                    moved = true;
                }
                None => continue,
            }
            break;
        }
        if !moved {
            break;
        }
    }
    Ok(DR::from_bounds(a, b))
}

/// [`bisect_root`] for an expression in one variable.
pub fn bisect_root_expr(
    expr: &Expr,
    var: &str,
    lo: &Float,
    hi: &Float,
    tol: Option<&Float>,
    prec: u32,
) -> Result<DR> {
    if let Some(v) = expr.free_vars().into_iter().find(|v| v != var) {
        return Err(Error::UnboundVariable(v));
    }
    let f = |x: &DR| {
        let mut env = Env::new();
        env.insert(var.to_string(), x.clone());
        interval_eval(expr, &env, prec).unwrap_or_else(|_| DR::entire(prec))
    };
    bisect_root(f, lo, hi, tol, prec)
}

pub type RealFn = Box<dyn Fn(&DR) -> DR + Send + Sync>;

/// Maximization of `f` over `[x_lo, inf)`.
///
/// The scan covers `[x_lo, tail_threshold]`; `tail_bound(X)` must return an
/// upper bound for `f` on `[X, inf)`, derived by the caller from term
/// dominance or a derivative sign.
pub struct RayMaxProblem {
    pub f: RealFn,
    pub x_lo: Float,
    pub tail_threshold: Float,
    pub tail_bound: RealFn,
}

impl RayMaxProblem {
    pub fn new(
        f: impl Fn(&DR) -> DR + Send + Sync + 'static,
        x_lo: Float,
        tail_threshold: Float,
        tail_bound: impl Fn(&DR) -> DR + Send + Sync + 'static,
    ) -> Self {
        RayMaxProblem {
            f: Box::new(f),
            x_lo,
            tail_threshold,
            tail_bound: Box::new(tail_bound),
        }
    }

    /// Builds a problem from expressions in the variable `x`; the tail
    /// expression is evaluated at `x = tail_threshold`.
    pub fn from_exprs(f: Expr, x_lo: Float, tail_threshold: Float, tail: Expr, prec: u32) -> Result<Self> {
        for e in [&f, &tail] {
            if let Some(v) = e.free_vars().into_iter().find(|v| v != "x") {
                return Err(Error::UnboundVariable(v));
            }
        }
        let wrap = move |e: Expr| {
            move |x: &DR| {
                let mut env = Env::new();
                env.insert("x".to_string(), x.clone());
                interval_eval(&e, &env, prec).unwrap_or_else(|_| DR::entire(prec))
            }
        };
        Ok(Self::new(wrap(f), x_lo, tail_threshold, wrap(tail)))
    }
}

#[derive(Clone, Debug)]
pub struct RayMax {
    /// Lower end: a certified attained value. Upper end: the certified supremum bound.
    pub bound: DR,
    pub argmax: DR,
    pub tail: DR,
    pub cells: usize,
}

#[derive(Clone, Debug)]
pub struct RayMaxOptions {
    pub grid_points: usize,
    pub prec: u32,
    /// Refinement stops once the gap is below `tol * max(1, |best|)`.
    pub tol: f64,
    pub max_cells: usize,
}

impl Default for RayMaxOptions {
    fn default() -> Self {
        RayMaxOptions {
            grid_points: 1 << 14,
            prec: 128,
            tol: 1e-9,
            max_cells: 400_000,
        }
    }
}

struct Cell {
    key: f64,
    seq: usize,
    lo: Float,
    hi: Float,
    upper: Float,
}

impl PartialEq for Cell {
    fn eq(&self, o: &Self) -> bool {
        self.cmp(o) == Ordering::Equal
    }
}
impl Eq for Cell {}
impl PartialOrd for Cell {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}
impl Ord for Cell {
    fn cmp(&self, o: &Self) -> Ordering {
        self.key
            .total_cmp(&o.key)
            .then_with(|| o.seq.cmp(&self.seq))
    }
}

/// Certified upper bound for `sup f` on `[x_lo, inf)`, using the default grid.
pub fn max_on_ray(p: &RayMaxProblem, grid_points: usize) -> Result<RayMax> {
    max_on_ray_with(
        p,
        &RayMaxOptions {
            grid_points,
            ..RayMaxOptions::default()
        },
    )
}

pub fn max_on_ray_with(p: &RayMaxProblem, opt: &RayMaxOptions) -> Result<RayMax> {
    if !p.x_lo.is_finite() || !p.tail_threshold.is_finite() || p.tail_threshold < p.x_lo {
        return Err(usage("ray maximization needs finite x_lo <= tail_threshold"));
    }
    let (bound, argmax, evaluated) = scan_max(&p.f, &p.x_lo, &p.tail_threshold, opt);
    let x1 = Float::with_val(opt.prec, &p.tail_threshold);
    let upper = bound.hi().clone();
    let tail = (p.tail_bound)(&DR::point(x1.clone()));
    if tail.hi() > &upper || tail.hi().is_nan() {
        return Err(Error::TailError {
            threshold: x1.to_string(),
            tail: tail.hi_string(12),
            scan: render_up(&upper),
        });
    }
    Ok(RayMax {
        bound,
        argmax,
        tail,
        cells: evaluated,
    })
}

/// Certified upper bound for `sup f` on the closed interval `[lo, hi]`.
/// The returned `tail` is the bound itself.
pub fn max_on_interval(
    f: &(dyn Fn(&DR) -> DR + Send + Sync),
    lo: &Float,
    hi: &Float,
    opt: &RayMaxOptions,
) -> Result<RayMax> {
    if !lo.is_finite() || !hi.is_finite() || hi < lo {
        return Err(usage("interval maximization needs finite lo <= hi"));
    }
    let (bound, argmax, cells) = scan_max(f, lo, hi, opt);
    Ok(RayMax {
        tail: bound.clone(),
        bound,
        argmax,
        cells,
    })
}

fn scan_max(
    f: &(dyn Fn(&DR) -> DR + Send + Sync),
    lo: &Float,
    hi: &Float,
    opt: &RayMaxOptions,
) -> (DR, DR, usize) {
    let prec = opt.prec;
    let n = opt.grid_points.max(1);
    let x0 = Float::with_val(prec, lo);
    let x1 = Float::with_val(prec, hi);
    let span = Float::with_val(prec, &x1 - &x0);
    let node = |i: usize| -> Float {
        if i == 0 {
            return x0.clone();
        }
        if i == n {
            return x1.clone();
        }
        let mut v = Float::with_val(prec, &span * i as u64);
        v /= n as u64;
        v += &x0;
        v
    };
    let eval_cell = |lo: &Float, hi: &Float| -> Float {
        let v = f(&DR::from_bounds(lo.clone(), hi.clone()));
        v.hi().clone()
    };
    let eval_point = |x: &Float| f(&DR::point(x.clone()));

    let nodes: Vec<Float> = (0..=n).map(node).collect();
    let point_vals: Vec<DR> = nodes.par_iter().map(eval_point).collect();
    let uppers: Vec<Float> = (0..n)
        .into_par_iter()
        .map(|i| eval_cell(&nodes[i], &nodes[i + 1]))
        .collect();

    let mut best = point_vals[0].clone();
    for v in &point_vals[1..] {
        if v.lo() > best.lo() {
            best = v.clone();
        }
    }
    let mut heap = BinaryHeap::new();
    let mut seq = 0usize;
    for (i, up) in uppers.into_iter().enumerate() {
        let key = up.to_f64_round(Round::Up);
        heap.push(Cell {
            key: if key.is_nan() { f64::INFINITY } else { key },
            seq,
            lo: nodes[i].clone(),
            hi: nodes[i + 1].clone(),
            upper: up,
        });
        seq += 1;
    }
    let mut evaluated = n;
    let min_width = {
        let scale = Float::with_val(prec, x0.abs_ref()).max(&Float::with_val(prec, x1.abs_ref()));
        scale * Float::with_val(prec, Float::i_exp(1, -(prec as i32 / 2)))
    };

    let mut stuck: Vec<Cell> = Vec::new();
    while let Some(top) = heap.pop() {
        let best_lo = best.lo().to_f64_round(Round::Down);
        let gap_ok = top.key - best_lo <= opt.tol * best_lo.abs().max(1.0);
        if gap_ok || evaluated >= opt.max_cells {
            heap.push(top);
            break;
        }
        if top.upper <= *best.lo() {
            // Nothing in this cell beats a value already attained.
            continue;
        }
        let w = Float::with_val(prec, &top.hi - &top.lo);
        let mut mid = Float::with_val(prec, &top.lo + &top.hi);
        mid /= 2;
        if w <= min_width || mid <= top.lo || mid >= top.hi {
            stuck.push(top);
            continue;
        }
        let mv = eval_point(&mid);
        if mv.lo() > best.lo() {
            best = mv;
        }
        for (lo, hi) in [(top.lo.clone(), mid.clone()), (mid.clone(), top.hi.clone())] {
            let up = eval_cell(&lo, &hi);
            evaluated += 1;
            let key = up.to_f64_round(Round::Up);
            heap.push(Cell {
                key: if key.is_nan() { f64::INFINITY } else { key },
                seq,
                lo,
                hi,
                upper: up,
            });
            seq += 1;
        }
    }

    let mut upper = best.hi().clone();
    let mut arg: Option<(Float, Float)> = None;
    for c in heap.iter().chain(stuck.iter()) {
        if c.upper > upper || arg.is_none() && c.upper >= upper {
            upper = c.upper.clone();
            arg = Some((c.lo.clone(), c.hi.clone()));
        }
    }
    let argmax = match arg {
        Some((lo, hi)) => DR::from_bounds(lo, hi),
        None => DR::point(x0.clone()),
    };
    (DR::from_bounds(best.lo().clone(), upper), argmax, evaluated)
}

fn render_up(x: &Float) -> String {
    DR::point(x.clone()).hi_string(12)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lambert_w_special_values() {
        let z = lambert_w0(&DR::zero(128)).unwrap();
        assert!(z.is_point() && z.lo().is_zero());
        let w = lambert_w0(&DR::e(256)).unwrap();
        assert!(w.contains_f64(1.0) || w.width_f64() < 1e-70 && (w.mid_f64() - 1.0).abs() < 1e-70);
        assert!(lambert_w0(&DR::int(-1, 64)).is_err());
    }

    #[test]
    fn lambert_w_of_160_log2_is_5_log2() {
        let p = 256;
        let x = DR::ln2(p) * 160;
        let w = lambert_w0(&x).unwrap();
        let want = DR::ln2(p) * 5;
        assert!(w.intersect(&want).is_some());
        assert!(w.width_f64() < 1e-70);
        let back = &w * &w.exp();
        assert!(back.intersect(&x).is_some());
    }

    #[test]
    fn lambert_w_tiny_and_huge() {
        for s in ["1e-6", "0.3", "1", "7.5", "1e9", "1e300"] {
            let x = DR::lit(s, 200);
            let w = lambert_w0(&x).unwrap();
            let back = &w * &w.exp();
            assert!(back.encloses(&x) || back.intersect(&x).is_some(), "{s}");
            assert!(w.width_f64() <= 4.0 * w.hi_f64().abs() * 2f64.powi(-199), "{s}: {w:?}");
        }
    }

    #[test]
    fn bisect_linear_and_sqrt2() {
        let p = 256;
        let r = bisect_root(|x| x - 1, &Float::with_val(p, 0), &Float::with_val(p, 2), None, p).unwrap();
        assert!(r.contains_f64(1.0));
        let s = bisect_root(|x| x.sqr() - 2, &Float::with_val(p, 1), &Float::with_val(p, 2), None, p).unwrap();
        assert!(s.width_f64() <= 2f64.powi(-99));
        let sq = s.sqr();
        assert!(sq.lo_f64() <= 2.0 + 1e-25 && sq.hi_f64() >= 2.0 - 1e-25);
        assert!(s.lo() * Float::with_val(p, s.lo()) <= 2 && s.hi() * Float::with_val(p, s.hi()) >= 2);
    }

    #[test]
    fn bisect_requires_a_certified_bracket() {
        let p = 64;
        let e = bisect_root(|x| x.sqr() + 1, &Float::with_val(p, -1), &Float::with_val(p, 1), None, p);
        assert!(matches!(e, Err(Error::BracketError { .. })));
    }

    #[test]
    fn bisect_expression_wrapper() {
        let e = Expr::parse("x^3 - x - 1").unwrap();
        let r = bisect_root_expr(&e, "x", &Float::with_val(128, 1), &Float::with_val(128, 2), None, 128).unwrap();
        assert!((r.mid_f64() - 1.324717957244746).abs() < 1e-14);
    }

    #[test]
    fn decreasing_function_peaks_at_left_end() {
        let p = RayMaxProblem::new(
            |x: &DR| -x.clone(),
            Float::with_val(64, 3),
            Float::with_val(64, 100),
            |x: &DR| -x.clone(),
        );
        let r = max_on_ray(&p, 256).unwrap();
        assert!(r.bound.contains_f64(-3.0));
        assert!(r.bound.hi_f64() <= -3.0 + 1e-8);
    }

    #[test]
    fn tail_failure_is_reported() {
        let p = RayMaxProblem::new(
            |x: &DR| x.clone(),
            Float::with_val(64, 0),
            Float::with_val(64, 1),
            |_: &DR| DR::int(5, 64),
        );
        assert!(matches!(max_on_ray(&p, 16), Err(Error::TailError { .. })));
    }

    #[test]
    fn interior_maximum_is_bracketed_tightly() {
        // x e^{-x} peaks at 1/e when x = 1.
        let p = RayMaxProblem::new(
            |x: &DR| x * &(-x).exp(),
            Float::with_val(128, 0),
            Float::with_val(128, 40),
            |x: &DR| x * &(-x).exp(),
        );
        let r = max_on_ray(&p, 64).unwrap();
        let e_inv = (-DR::one(128)).exp();
        assert!(r.bound.certainly_ge(&e_inv) || r.bound.hi() >= e_inv.hi());
        assert!(r.bound.hi_f64() - (-1f64).exp() < 1e-8);
        assert!((r.argmax.mid_f64() - 1.0).abs() < 1e-3);
    }

    #[test]
    fn interval_maximum_of_sine() {
        // sin on [0, 3] peaks at pi/2 with value 1.
        let f = |x: &DR| x.sin();
        let r = max_on_interval(&f, &Float::with_val(128, 0), &Float::with_val(128, 3), &RayMaxOptions::default())
            .unwrap();
        assert!(r.bound.contains_f64(1.0) || (r.bound.hi_f64() - 1.0).abs() < 1e-8);
        assert!(r.bound.lo_f64() > 1.0 - 1e-8);
        assert!((r.argmax.mid_f64() - std::f64::consts::FRAC_PI_2).abs() < 1e-3);
        assert_eq!(r.tail, r.bound);
        let bad = max_on_interval(&f, &Float::with_val(64, 2), &Float::with_val(64, 1), &RayMaxOptions::default());
        assert!(bad.is_err());
    }
}
