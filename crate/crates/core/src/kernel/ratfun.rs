//! Univariate rational functions, the coefficient field for the
//! linear-dependency search over `K(T)`.

use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use super::UniPoly;

/// A rational function `num/den`, kept normalized: `den` monic and
/// `gcd(num, den) = 1`; zero is `0/1`.
#[derive(Clone, PartialEq, Eq)]
pub struct RatFun {
    num: UniPoly,
    den: UniPoly,
}

impl RatFun {
    /// Builds `num/den`, normalizing. Panics on a zero denominator.
    pub fn new(num: UniPoly, den: UniPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatFun { num, den: UniPoly::one() };
        }
        let g = num.gcd(&den);
        let num = num.div_exact(&g);
        let den = den.div_exact(&g);
        let lead = den.leading();
        RatFun {
            num: num.scale(&lead.recip()),
            den: den.scale(&lead.recip()),
        }
    }

    pub fn from_poly(p: UniPoly) -> Self {
        RatFun { num: p, den: UniPoly::one() }
    }

    pub fn zero() -> Self {
        RatFun::from_poly(UniPoly::zero())
    }

    pub fn one() -> Self {
        RatFun::from_poly(UniPoly::one())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    pub fn recip(&self) -> RatFun {
        assert!(!self.is_zero(), "reciprocal of zero");
        RatFun::new(self.den.clone(), self.num.clone())
    }

    /// Derivative by the quotient rule.
    pub fn derivative(&self) -> RatFun {
        let num = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        RatFun::new(num, &self.den * &self.den)
    }
}

impl Add for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        RatFun::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        RatFun::new(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        RatFun::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RatFun {
    type Output = RatFun;
    fn div(self, rhs: &RatFun) -> RatFun {
        assert!(!rhs.is_zero(), "division by zero rational function");
        RatFun::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == UniPoly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization_is_canonical() {
        // (2x + 2)/(4x) and (x + 1)/(2x) normalize identically.
        let a = RatFun::new(UniPoly::from_integers(&[2, 2]), UniPoly::from_integers(&[0, 4]));
        let b = RatFun::new(UniPoly::from_integers(&[1, 1]), UniPoly::from_integers(&[0, 2]));
        assert_eq!(a, b);
        assert_eq!(a.den().leading(), crate::kernel::rat_int(1));
    }

    #[test]
    fn field_identities() {
        let x = RatFun::from_poly(UniPoly::variable());
        let one = RatFun::one();
        let inv = x.recip();
        assert_eq!(&x * &inv, one);
        assert_eq!(&(&x - &x), &RatFun::zero());
    }
}
