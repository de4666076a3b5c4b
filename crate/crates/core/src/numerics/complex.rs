use std::ops::{Add, Mul, Sub};

use super::DirectedReal;

/// Rectangular enclosure of a complex number.
#[derive(Clone, Debug)]
pub struct ComplexInterval {
    pub re: DirectedReal,
    pub im: DirectedReal,
}

impl ComplexInterval {
    pub fn new(re: DirectedReal, im: DirectedReal) -> Self {
        ComplexInterval { re, im }
    }

    pub fn real(re: DirectedReal) -> Self {
        let p = re.precision();
        ComplexInterval {
            re,
            im: DirectedReal::zero(p),
        }
    }

    pub fn zero(prec: u32) -> Self {
        Self::real(DirectedReal::zero(prec))
    }

    /// `r * (cos phi + i sin phi)`
    pub fn polar(r: &DirectedReal, phi: &DirectedReal) -> Self {
        ComplexInterval {
            re: r * &phi.cos(),
            im: r * &phi.sin(),
        }
    }

    pub fn scale(&self, k: &DirectedReal) -> Self {
        ComplexInterval {
            re: &self.re * k,
            im: &self.im * k,
        }
    }

    pub fn abs(&self) -> DirectedReal {
        (self.re.sqr() + self.im.sqr()).sqrt()
    }

    pub fn recip(&self) -> Self {
        let d = self.re.sqr() + self.im.sqr();
        ComplexInterval {
            re: &self.re / &d,
            im: -(&self.im / &d),
        }
    }
}

impl Add for &ComplexInterval {
    type Output = ComplexInterval;
    fn add(self, rhs: &ComplexInterval) -> ComplexInterval {
        ComplexInterval {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub for &ComplexInterval {
    type Output = ComplexInterval;
    fn sub(self, rhs: &ComplexInterval) -> ComplexInterval {
        ComplexInterval {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul for &ComplexInterval {
    type Output = ComplexInterval;
    fn mul(self, rhs: &ComplexInterval) -> ComplexInterval {
        ComplexInterval {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}
