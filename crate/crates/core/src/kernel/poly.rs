//! Dense univariate polynomials over the rationals.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{rat_int, Int, Rational};
use crate::{Error, Result};

/// A univariate polynomial with rational coefficients, stored low degree
/// first and kept canonical: the highest-index coefficient is nonzero unless
/// the polynomial is zero (empty coefficient list).
#[derive(Clone, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        UniPoly::constant(rat_int(1))
    }

    /// The identity polynomial `x`.
    pub fn variable() -> Self {
        UniPoly::from_coeffs(vec![rat_int(0), rat_int(1)])
    }

    /// A constant polynomial.
    pub fn constant(c: Rational) -> Self {
        UniPoly::from_coeffs(vec![c])
    }

    /// `c * x^deg`.
    pub fn monomial(deg: usize, c: Rational) -> Self {
        if c.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![rat_int(0); deg + 1];
        coeffs[deg] = c;
        UniPoly { coeffs }
    }

    /// Builds a polynomial from coefficients (low degree first), trimming
    /// trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    /// Builds a polynomial from integer coefficients (low degree first).
    pub fn from_integers(coeffs: &[i64]) -> Self {
        UniPoly::from_coeffs(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^i` (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(|| rat_int(0))
    }

    /// All coefficients, low degree first.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(|| rat_int(0))
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = rat_int(0);
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_int(&self, x: &Int) -> Rational {
        self.eval(&Rational::from_integer(x.clone()))
    }

    pub fn derivative(&self) -> UniPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rational::from_integer(Int::from(i)))
            .collect();
        UniPoly::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &Rational) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `p(x + shift)`.
    pub fn compose_shift(&self, shift: &Rational) -> UniPoly {
        // Horner on p with x replaced by (x + shift).
        let mut acc = UniPoly::zero();
        let x_plus = UniPoly::from_coeffs(vec![shift.clone(), rat_int(1)]);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &x_plus) + &UniPoly::constant(c.clone());
        }
        acc
    }

    /// Division with remainder by a nonzero divisor.
    pub fn divrem(&self, den: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let dd = den.degree().ok_or(Error::ZeroPolynomial)?;
        if self.degree().map_or(true, |d| d < dd) {
            return Ok((UniPoly::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let qd = self.coeffs.len() - 1 - dd;
        let mut quot = vec![rat_int(0); qd + 1];
        let lead = den.leading();
        for k in (0..=qd).rev() {
            let c = &rem[k + dd] / &lead;
            for (j, dc) in den.coeffs.iter().enumerate() {
                let t = dc * &c;
                rem[k + j] = &rem[k + j] - &t;
            }
            quot[k] = c;
        }
        Ok((UniPoly::from_coeffs(quot), UniPoly::from_coeffs(rem)))
    }

    /// Exact division; panics if the division leaves a remainder (used only
    /// where exactness is guaranteed, e.g. fraction-free elimination).
    pub fn div_exact(&self, den: &UniPoly) -> UniPoly {
        let (q, r) = self.divrem(den).expect("division by zero polynomial");
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Scales so the leading coefficient is 1 (zero stays zero).
    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let lead = self.leading();
        self.scale(&lead.recip())
    }

    /// Clears denominators and the integer content: returns the primitive
    /// integer-coefficient polynomial with the same roots and positive
    /// leading coefficient.
    pub fn primitive_integer_coeffs(&self) -> Vec<Int> {
        if self.is_zero() {
            return Vec::new();
        }
        let mut lcm = Int::one();
        for c in &self.coeffs {
            lcm = num_integer::lcm(lcm, c.denom().clone());
        }
        let mut ints: Vec<Int> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let mut content = Int::zero();
        for v in &ints {
            content = num_integer::gcd(content, v.clone());
        }
        if ints.last().map_or(false, |l| l.is_negative()) {
            content = -content;
        }
        for v in &mut ints {
            *v = &*v / &content;
        }
        ints
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        UniPoly::from_coeffs(coeffs)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        UniPoly::from_coeffs(coeffs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![rat_int(0); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        UniPoly::from_coeffs(coeffs)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*m")?,
                _ => write!(f, "{c}*m^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
