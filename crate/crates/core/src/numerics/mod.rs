//! Outward-rounded interval arithmetic on MPFR floats, an expression
//! evaluator and the solvers built on them.

mod complex;
pub mod expr;
mod real;
mod solve;

pub use complex::ComplexInterval;
pub use expr::{eval_str, interval_eval, Env, Expr};
pub use real::{DirectedReal, DEFAULT_PRECISION};
pub use solve::{
    bisect_root, bisect_root_expr, default_tolerance, lambert_w0, max_on_interval, max_on_ray, max_on_ray_with,
    RayMax, RayMaxOptions, RayMaxProblem, RealFn,
};

/// Outward-rounded decimal literal at precision `prec`.
pub fn lit(s: &str, prec: u32) -> DirectedReal {
    DirectedReal::lit(s, prec)
}
