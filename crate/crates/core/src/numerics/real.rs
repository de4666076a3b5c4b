use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use rug::float::{Constant, Round, Special};
use rug::ops::AssignRound;
use rug::ops::Pow;
use rug::{Float, Integer, Rational};

use crate::error::{Error, Result};

pub const DEFAULT_PRECISION: u32 = 256;

fn dn<T>(prec: u32, src: T) -> Float
where
    Float: AssignRound<T, Round = Round, Ordering = Ordering>,
{
    Float::with_val_round(prec, src, Round::Down).0
}

fn up<T>(prec: u32, src: T) -> Float
where
    Float: AssignRound<T, Round = Round, Ordering = Ordering>,
{
    Float::with_val_round(prec, src, Round::Up).0
}

fn neg_inf(prec: u32) -> Float {
    Float::with_val(prec, Special::NegInfinity)
}

fn pos_inf(prec: u32) -> Float {
    Float::with_val(prec, Special::Infinity)
}

fn fmin(a: Float, b: Float) -> Float {
    if b < a {
        b
    } else {
        a
    }
}

fn fmax(a: Float, b: Float) -> Float {
    if b > a {
        b
    } else {
        a
    }
}

/// A closed interval `[lo, hi]` of extended reals whose endpoints were
/// produced with rounding toward `-inf` and `+inf` respectively.
///
/// Operations never fail: leaving a function's domain yields the whole line,
/// which makes any later certified comparison fail rather than pass.
#[derive(Clone, PartialEq)]
pub struct DirectedReal {
    lo: Float,
    hi: Float,
}

impl DirectedReal {
    fn make(lo: Float, hi: Float) -> Self {
        let prec = lo.prec().max(hi.prec());
        let lo = if lo.is_nan() { neg_inf(prec) } else { lo };
        let hi = if hi.is_nan() { pos_inf(prec) } else { hi };
        debug_assert!(lo <= hi, "inverted enclosure [{lo}, {hi}]");
        DirectedReal { lo, hi }
    }

    /// Builds an enclosure from explicit bounds. Panics if `lo > hi`.
    pub fn from_bounds(lo: Float, hi: Float) -> Self {
        assert!(!(lo > hi), "lower bound exceeds upper bound");
        Self::make(lo, hi)
    }

    pub fn point(x: Float) -> Self {
        DirectedReal {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn entire(prec: u32) -> Self {
        DirectedReal {
            lo: neg_inf(prec),
            hi: pos_inf(prec),
        }
    }

    pub fn zero(prec: u32) -> Self {
        Self::int(0, prec)
    }

    pub fn one(prec: u32) -> Self {
        Self::int(1, prec)
    }

    pub fn int(n: i64, prec: u32) -> Self {
        DirectedReal {
            lo: dn(prec, n),
            hi: up(prec, n),
        }
    }

    pub fn integer(n: &Integer, prec: u32) -> Self {
        DirectedReal {
            lo: dn(prec, n),
            hi: up(prec, n),
        }
    }

    pub fn from_f64(x: f64, prec: u32) -> Self {
        DirectedReal {
            lo: dn(prec, x),
            hi: up(prec, x),
        }
    }

    pub fn ratio(num: i64, den: i64, prec: u32) -> Self {
        Self::rational(&Rational::from((num, den)), prec)
    }

    pub fn rational(q: &Rational, prec: u32) -> Self {
        DirectedReal {
            lo: dn(prec, q),
            hi: up(prec, q),
        }
    }

    /// Parses a decimal literal and rounds it outward.
    pub fn decimal(s: &str, prec: u32) -> Result<Self> {
        let parse = |r| {
            Float::parse(s)
                .map(|p| Float::with_val_round(prec, p, r).0)
                .map_err(|e| Error::Parse {
                    pos: 0,
                    message: format!("bad decimal `{s}`: {e}"),
                })
        };
        Ok(DirectedReal {
            lo: parse(Round::Down)?,
            hi: parse(Round::Up)?,
        })
    }

    /// Decimal literal known to be well formed.
    pub fn lit(s: &str, prec: u32) -> Self {
        Self::decimal(s, prec).expect("malformed decimal literal")
    }

    pub fn pi(prec: u32) -> Self {
        DirectedReal {
            lo: dn(prec, Constant::Pi),
            hi: up(prec, Constant::Pi),
        }
    }

    pub fn euler_gamma(prec: u32) -> Self {
        DirectedReal {
            lo: dn(prec, Constant::Euler),
            hi: up(prec, Constant::Euler),
        }
    }

    pub fn ln2(prec: u32) -> Self {
        DirectedReal {
            lo: dn(prec, Constant::Log2),
            hi: up(prec, Constant::Log2),
        }
    }

    pub fn e(prec: u32) -> Self {
        Self::one(prec).exp()
    }

    pub fn precision(&self) -> u32 {
        self.lo.prec().max(self.hi.prec())
    }

    pub fn lo(&self) -> &Float {
        &self.lo
    }

    pub fn hi(&self) -> &Float {
        &self.hi
    }

    pub fn lo_f64(&self) -> f64 {
        self.lo.to_f64_round(Round::Down)
    }

    pub fn hi_f64(&self) -> f64 {
        self.hi.to_f64_round(Round::Up)
    }

    pub fn mid(&self) -> Float {
        let prec = self.precision() + 1;
        if self.lo.is_infinite() || self.hi.is_infinite() {
            if self.lo.is_infinite() && self.hi.is_infinite() {
                return Float::new(prec);
            }
            return if self.lo.is_infinite() {
                self.hi.clone()
            } else {
                self.lo.clone()
            };
        }
        let mut m = Float::with_val(prec, &self.lo + &self.hi);
        m /= 2;
        m
    }

    pub fn mid_f64(&self) -> f64 {
        self.mid().to_f64()
    }

    pub fn width(&self) -> Float {
        up(self.precision(), &self.hi - &self.lo)
    }

    pub fn width_f64(&self) -> f64 {
        self.width().to_f64_round(Round::Up)
    }

    pub fn with_precision(&self, prec: u32) -> Self {
        DirectedReal {
            lo: dn(prec, &self.lo),
            hi: up(prec, &self.hi),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.lo.is_finite() && self.hi.is_finite()
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &Float) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_f64(&self, x: f64) -> bool {
        self.lo <= x && self.hi >= x
    }

    pub fn contains_zero(&self) -> bool {
        self.lo <= 0 && self.hi >= 0
    }

    pub fn encloses(&self, other: &DirectedReal) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    /// True when some integer lies in the enclosure.
    pub fn contains_integer(&self) -> bool {
        if !self.is_finite() {
            return true;
        }
        let c = self.lo.clone().ceil();
        c <= self.hi
    }

    pub fn certainly_lt(&self, other: &DirectedReal) -> bool {
        self.hi < other.lo
    }

    pub fn certainly_le(&self, other: &DirectedReal) -> bool {
        self.hi <= other.lo
    }

    pub fn certainly_gt(&self, other: &DirectedReal) -> bool {
        other.certainly_lt(self)
    }

    pub fn certainly_ge(&self, other: &DirectedReal) -> bool {
        other.certainly_le(self)
    }

    pub fn certainly_positive(&self) -> bool {
        self.lo > 0
    }

    pub fn certainly_negative(&self) -> bool {
        self.hi < 0
    }

    pub fn certainly_nonneg(&self) -> bool {
        self.lo >= 0
    }

    pub fn hull(&self, other: &DirectedReal) -> Self {
        Self::make(
            fmin(self.lo.clone(), other.lo.clone()),
            fmax(self.hi.clone(), other.hi.clone()),
        )
    }

    pub fn intersect(&self, other: &DirectedReal) -> Option<Self> {
        let lo = fmax(self.lo.clone(), other.lo.clone());
        let hi = fmin(self.hi.clone(), other.hi.clone());
        (lo <= hi).then(|| Self::make(lo, hi))
    }

    /// Upper endpoint as a point enclosure.
    pub fn upper(&self) -> Self {
        Self::point(self.hi.clone())
    }

    /// Lower endpoint as a point enclosure.
    pub fn lower(&self) -> Self {
        Self::point(self.lo.clone())
    }

    pub fn min(&self, other: &DirectedReal) -> Self {
        Self::make(
            fmin(self.lo.clone(), other.lo.clone()),
            fmin(self.hi.clone(), other.hi.clone()),
        )
    }

    pub fn max(&self, other: &DirectedReal) -> Self {
        Self::make(
            fmax(self.lo.clone(), other.lo.clone()),
            fmax(self.hi.clone(), other.hi.clone()),
        )
    }

    pub fn abs(&self) -> Self {
        if self.lo >= 0 {
            self.clone()
        } else if self.hi <= 0 {
            -self
        } else {
            let prec = self.precision();
            let m = fmax(Float::with_val(prec, -&self.lo), self.hi.clone());
            Self::make(Float::new(prec), m)
        }
    }

    pub fn floor(&self) -> Self {
        Self::make(self.lo.clone().floor(), self.hi.clone().floor())
    }

    pub fn ceil(&self) -> Self {
        Self::make(self.lo.clone().ceil(), self.hi.clone().ceil())
    }

    pub fn recip(&self) -> Self {
        Self::one(self.precision()) / self
    }

    pub fn sqr(&self) -> Self {
        let prec = self.precision();
        if self.lo >= 0 {
            Self::make(dn(prec, self.lo.square_ref()), up(prec, self.hi.square_ref()))
        } else if self.hi <= 0 {
            Self::make(dn(prec, self.hi.square_ref()), up(prec, self.lo.square_ref()))
        } else {
            let a = up(prec, self.lo.square_ref());
            let b = up(prec, self.hi.square_ref());
            Self::make(Float::new(prec), fmax(a, b))
        }
    }

    pub fn powi(&self, n: i64) -> Self {
        let prec = self.precision();
        if n == 0 {
            return Self::one(prec);
        }
        if n < 0 {
            return self.powi(-n).recip();
        }
        let e = u32::try_from(n).expect("exponent too large");
        if e % 2 == 1 {
            return Self::make(dn(prec, (&self.lo).pow(e)), up(prec, (&self.hi).pow(e)));
        }
        let a = self.abs();
        Self::make(dn(prec, (&a.lo).pow(e)), up(prec, (&a.hi).pow(e)))
    }

    /// `self^y` for a positive base.
    pub fn pow(&self, y: &DirectedReal) -> Self {
        if !self.certainly_positive() {
            return Self::entire(self.precision().max(y.precision()));
        }
        (y * &self.ln()).exp()
    }

    /// `self^(num/den)` for a positive base.
    pub fn pow_ratio(&self, num: i64, den: i64) -> Self {
        self.pow(&Self::ratio(num, den, self.precision()))
    }

    pub fn sqrt(&self) -> Self {
        let prec = self.precision();
        if self.lo < 0 {
            return Self::entire(prec);
        }
        Self::make(dn(prec, self.lo.sqrt_ref()), up(prec, self.hi.sqrt_ref()))
    }

    pub fn exp(&self) -> Self {
        let prec = self.precision();
        Self::make(dn(prec, self.lo.exp_ref()), up(prec, self.hi.exp_ref()))
    }

    pub fn ln(&self) -> Self {
        let prec = self.precision();
        if self.lo < 0 {
            return Self::entire(prec);
        }
        Self::make(dn(prec, self.lo.ln_ref()), up(prec, self.hi.ln_ref()))
    }

    pub fn ln_1p(&self) -> Self {
        let prec = self.precision();
        if self.lo < -1 {
            return Self::entire(prec);
        }
        Self::make(dn(prec, self.lo.ln_1p_ref()), up(prec, self.hi.ln_1p_ref()))
    }

    pub fn cosh(&self) -> Self {
        let prec = self.precision();
        if self.lo >= 0 {
            Self::make(dn(prec, self.lo.cosh_ref()), up(prec, self.hi.cosh_ref()))
        } else if self.hi <= 0 {
            Self::make(dn(prec, self.hi.cosh_ref()), up(prec, self.lo.cosh_ref()))
        } else {
            let a = up(prec, self.lo.cosh_ref());
            let b = up(prec, self.hi.cosh_ref());
            Self::make(Float::with_val(prec, 1), fmax(a, b))
        }
    }

    // Does (x - shift) / period contain an integer?
    fn hits_lattice(&self, shift: &DirectedReal, period: &DirectedReal) -> bool {
        ((self - shift) / period).contains_integer()
    }

    pub fn sin(&self) -> Self {
        let prec = self.precision();
        if !self.is_finite() {
            return Self::make(Float::with_val(prec, -1), Float::with_val(prec, 1));
        }
        let pi = Self::pi(prec + 16);
        let two_pi = &pi * 2;
        let half_pi = &pi / 2;
        let mut lo = fmin(dn(prec, self.lo.sin_ref()), dn(prec, self.hi.sin_ref()));
        let mut hi = fmax(up(prec, self.lo.sin_ref()), up(prec, self.hi.sin_ref()));
        if self.hits_lattice(&half_pi, &two_pi) {
            hi = Float::with_val(prec, 1);
        }
        if self.hits_lattice(&(-&half_pi), &two_pi) {
            lo = Float::with_val(prec, -1);
        }
        Self::make(lo, hi)
    }

    pub fn cos(&self) -> Self {
        let prec = self.precision();
        if !self.is_finite() {
            return Self::make(Float::with_val(prec, -1), Float::with_val(prec, 1));
        }
        let pi = Self::pi(prec + 16);
        let two_pi = &pi * 2;
        let mut lo = fmin(dn(prec, self.lo.cos_ref()), dn(prec, self.hi.cos_ref()));
        let mut hi = fmax(up(prec, self.lo.cos_ref()), up(prec, self.hi.cos_ref()));
        if self.hits_lattice(&Self::zero(prec), &two_pi) {
            hi = Float::with_val(prec, 1);
        }
        if self.hits_lattice(&pi, &two_pi) {
            lo = Float::with_val(prec, -1);
        }
        Self::make(lo, hi)
    }

    /// True when the enclosure meets a pole of `tan`.
    pub fn meets_tan_pole(&self) -> bool {
        let prec = self.precision() + 16;
        let pi = Self::pi(prec);
        !self.is_finite() || self.hits_lattice(&(&pi / 2), &pi)
    }

    /// True when the enclosure meets a pole of `cot`.
    pub fn meets_cot_pole(&self) -> bool {
        let prec = self.precision() + 16;
        !self.is_finite() || self.hits_lattice(&Self::zero(prec), &Self::pi(prec))
    }

    pub fn tan(&self) -> Self {
        let prec = self.precision();
        if self.meets_tan_pole() {
            return Self::entire(prec);
        }
        Self::make(dn(prec, self.lo.tan_ref()), up(prec, self.hi.tan_ref()))
    }

    pub fn cot(&self) -> Self {
        let prec = self.precision();
        if self.meets_cot_pole() {
            return Self::entire(prec);
        }
        Self::make(dn(prec, self.hi.cot_ref()), up(prec, self.lo.cot_ref()))
    }

    /// Decimal rendering of the lower endpoint, rounded down.
    pub fn lo_string(&self, digits: usize) -> String {
        render(&self.lo, digits, Round::Down)
    }

    /// Decimal rendering of the upper endpoint, rounded up.
    pub fn hi_string(&self, digits: usize) -> String {
        render(&self.hi, digits, Round::Up)
    }
}

fn render(x: &Float, digits: usize, round: Round) -> String {
    if x.is_infinite() {
        return if x.is_sign_negative() { "-inf".into() } else { "inf".into() };
    }
    if x.is_zero() {
        return "0".into();
    }
    x.to_string_radix_round(10, Some(digits), round)
}

impl fmt::Debug for DirectedReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo_string(20), self.hi_string(20))
    }
}

impl fmt::Display for DirectedReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo_string(12), self.hi_string(12))
    }
}

fn add(a: &DirectedReal, b: &DirectedReal) -> DirectedReal {
    let prec = a.precision().max(b.precision());
    DirectedReal::make(dn(prec, &a.lo + &b.lo), up(prec, &a.hi + &b.hi))
}

fn sub(a: &DirectedReal, b: &DirectedReal) -> DirectedReal {
    let prec = a.precision().max(b.precision());
    DirectedReal::make(dn(prec, &a.lo - &b.hi), up(prec, &a.hi - &b.lo))
}

fn mul(a: &DirectedReal, b: &DirectedReal) -> DirectedReal {
    let prec = a.precision().max(b.precision());
    let pairs = [(&a.lo, &b.lo), (&a.lo, &b.hi), (&a.hi, &b.lo), (&a.hi, &b.hi)];
    // 0 * inf only arises from an exact zero factor, whose products are all 0.
    let fix = |x: Float| if x.is_nan() { Float::new(prec) } else { x };
    let mut lo: Option<Float> = None;
    let mut hi: Option<Float> = None;
    for (x, y) in pairs {
        let l = fix(dn(prec, x * y));
        let h = fix(up(prec, x * y));
        lo = Some(match lo {
            None => l,
            Some(c) => fmin(c, l),
        });
        hi = Some(match hi {
            None => h,
            Some(c) => fmax(c, h),
        });
    }
    DirectedReal::make(lo.unwrap(), hi.unwrap())
}

fn div(a: &DirectedReal, b: &DirectedReal) -> DirectedReal {
    let prec = a.precision().max(b.precision());
    if b.contains_zero() {
        return DirectedReal::entire(prec);
    }
    let pairs = [(&a.lo, &b.lo), (&a.lo, &b.hi), (&a.hi, &b.lo), (&a.hi, &b.hi)];
    let mut lo = pos_inf(prec);
    let mut hi = neg_inf(prec);
    for (x, y) in pairs {
        let l = dn(prec, x / y);
        let h = up(prec, x / y);
        lo = fmin(lo, if l.is_nan() { neg_inf(prec) } else { l });
        hi = fmax(hi, if h.is_nan() { pos_inf(prec) } else { h });
    }
    DirectedReal::make(lo, hi)
}

impl Neg for &DirectedReal {
    type Output = DirectedReal;
    fn neg(self) -> DirectedReal {
        let prec = self.precision();
        DirectedReal::make(Float::with_val(prec, -&self.hi), Float::with_val(prec, -&self.lo))
    }
}

impl Neg for DirectedReal {
    type Output = DirectedReal;
    fn neg(self) -> DirectedReal {
        -&self
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $f:ident) => {
        impl $tr<&DirectedReal> for &DirectedReal {
            type Output = DirectedReal;
            fn $method(self, rhs: &DirectedReal) -> DirectedReal {
                $f(self, rhs)
            }
        }
        impl $tr<DirectedReal> for DirectedReal {
            type Output = DirectedReal;
            fn $method(self, rhs: DirectedReal) -> DirectedReal {
                $f(&self, &rhs)
            }
        }
        impl $tr<&DirectedReal> for DirectedReal {
            type Output = DirectedReal;
            fn $method(self, rhs: &DirectedReal) -> DirectedReal {
                $f(&self, rhs)
            }
        }
        impl $tr<DirectedReal> for &DirectedReal {
            type Output = DirectedReal;
            fn $method(self, rhs: DirectedReal) -> DirectedReal {
                $f(self, &rhs)
            }
        }
        impl $tr<i64> for &DirectedReal {
            type Output = DirectedReal;
            fn $method(self, rhs: i64) -> DirectedReal {
                $f(self, &DirectedReal::int(rhs, self.precision()))
            }
        }
        impl $tr<i64> for DirectedReal {
            type Output = DirectedReal;
            fn $method(self, rhs: i64) -> DirectedReal {
                $f(&self, &DirectedReal::int(rhs, self.precision()))
            }
        }
        impl $tr<&DirectedReal> for i64 {
            type Output = DirectedReal;
            fn $method(self, rhs: &DirectedReal) -> DirectedReal {
                $f(&DirectedReal::int(self, rhs.precision()), rhs)
            }
        }
        impl $tr<DirectedReal> for i64 {
            type Output = DirectedReal;
            fn $method(self, rhs: DirectedReal) -> DirectedReal {
                $f(&DirectedReal::int(self, rhs.precision()), &rhs)
            }
        }
    };
}

binop!(Add, add, add);
binop!(Sub, sub, sub);
binop!(Mul, mul, mul);
binop!(Div, div, div);

impl std::iter::Sum for DirectedReal {
    fn sum<I: Iterator<Item = DirectedReal>>(iter: I) -> Self {
        let mut iter = iter;
        let first = iter.next().expect("empty sum has no precision");
        iter.fold(first, |acc, x| acc + x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: u32 = 128;

    fn d(s: &str) -> DirectedReal {
        DirectedReal::lit(s, P)
    }

    #[test]
    fn decimal_literals_round_outward() {
        let x = d("0.1");
        assert!(x.lo() < x.hi());
        assert!(x.contains(&Float::with_val(P, Float::parse("0.1").unwrap())));
        let y = d("0.5");
        assert!(y.is_point());
    }

    #[test]
    fn self_subtraction_of_a_point_is_exact() {
        let x = DirectedReal::one(P);
        let z = &x - &x;
        assert!(z.is_point() && z.lo().is_zero());
    }

    #[test]
    fn division_by_zero_straddle_is_entire() {
        let x = DirectedReal::from_bounds(Float::with_val(P, -1), Float::with_val(P, 1));
        let q = DirectedReal::one(P) / &x;
        assert!(q.lo().is_infinite() && q.hi().is_infinite());
    }

    #[test]
    fn zero_times_entire_is_zero() {
        let z = DirectedReal::zero(P) * DirectedReal::entire(P);
        assert!(z.is_point() && z.lo().is_zero());
    }

    #[test]
    fn sqr_of_straddling_interval_starts_at_zero() {
        let x = DirectedReal::from_bounds(Float::with_val(P, -2), Float::with_val(P, 1));
        let s = x.sqr();
        assert!(s.lo().is_zero());
        assert_eq!(s.hi().to_f64(), 4.0);
        assert_eq!(x.powi(2).hi().to_f64(), 4.0);
        assert_eq!(x.powi(3).lo().to_f64(), -8.0);
    }

    #[test]
    fn trig_extrema_are_detected() {
        let x = DirectedReal::from_bounds(Float::with_val(P, 1), Float::with_val(P, 2));
        let s = x.sin();
        assert_eq!(s.hi().to_f64(), 1.0);
        assert!(s.lo_f64() > 0.84);
        let c = DirectedReal::from_bounds(Float::with_val(P, 3), Float::with_val(P, 4)).cos();
        assert_eq!(c.lo().to_f64(), -1.0);
        let c0 = DirectedReal::from_bounds(Float::with_val(P, -1), Float::with_val(P, 1)).cos();
        assert_eq!(c0.hi().to_f64(), 1.0);
    }

    #[test]
    fn tan_and_cot_poles() {
        let x = DirectedReal::from_bounds(Float::with_val(P, 1), Float::with_val(P, 2));
        assert!(x.tan().lo().is_infinite());
        assert!(x.cot().is_finite());
        let y = DirectedReal::from_bounds(Float::with_val(P, 3), Float::with_val(P, 4));
        assert!(y.cot().lo().is_infinite());
    }

    #[test]
    fn cosh_minimum_at_origin() {
        let x = DirectedReal::from_bounds(Float::with_val(P, -1), Float::with_val(P, 2));
        let c = x.cosh();
        assert_eq!(c.lo().to_f64(), 1.0);
        assert!(c.hi_f64() >= 2f64.cosh());
    }

    #[test]
    fn logs_of_nonpositive_values_are_entire() {
        let x = DirectedReal::from_bounds(Float::with_val(P, -1), Float::with_val(P, 2));
        assert!(!x.ln().is_finite());
        assert!(!x.sqrt().is_finite());
    }

    #[test]
    fn constants_enclose_known_digits() {
        let pi = DirectedReal::pi(P);
        assert!(pi.width_f64() < 1e-30 && (pi.mid_f64() - std::f64::consts::PI).abs() < 1e-15);
        let g = DirectedReal::euler_gamma(P);
        assert!((g.mid_f64() - 0.5772156649015329).abs() < 1e-15);
        let e = DirectedReal::e(P);
        assert!((e.mid_f64() - std::f64::consts::E).abs() < 1e-15);
    }

    #[test]
    fn contains_integer_checks_lattice() {
        let x = DirectedReal::from_bounds(Float::with_val(P, 1.5), Float::with_val(P, 1.75));
        assert!(!x.contains_integer());
        let y = DirectedReal::from_bounds(Float::with_val(P, 1.5), Float::with_val(P, 2));
        assert!(y.contains_integer());
    }
}
