//! Bivariate polynomials `Q(T, Y)`, stored as polynomials in `Y` with
//! `UniPoly` coefficients in `T`.

use alloc::vec::Vec;
use core::fmt;

use super::{Rational, UniPoly};

/// `Q(T, Y) = sum_i q_i(T) Y^i`, canonical in `Y` (top coefficient nonzero
/// unless zero).
#[derive(Clone, PartialEq, Eq)]
pub struct BiPoly {
    y_coeffs: Vec<UniPoly>,
}

impl BiPoly {
    /// Builds from `Y`-coefficients, low degree first, trimming zeros.
    pub fn from_y_coeffs(mut y_coeffs: Vec<UniPoly>) -> Self {
        while y_coeffs.last().is_some_and(UniPoly::is_zero) {
            y_coeffs.pop();
        }
        BiPoly { y_coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.y_coeffs.is_empty()
    }

    pub fn degree_y(&self) -> Option<usize> {
        self.y_coeffs.len().checked_sub(1)
    }

    pub fn y_coeff(&self, i: usize) -> UniPoly {
        self.y_coeffs.get(i).cloned().unwrap_or_else(UniPoly::zero)
    }

    pub fn y_coeffs(&self) -> &[UniPoly] {
        &self.y_coeffs
    }

    /// Partial derivative in `Y`.
    pub fn d_dy(&self) -> BiPoly {
        let coeffs = self
            .y_coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, q)| q.scale(&super::rat_int(i as i64)))
            .collect();
        BiPoly::from_y_coeffs(coeffs)
    }

    /// Partial derivative in `T`.
    pub fn d_dt(&self) -> BiPoly {
        BiPoly::from_y_coeffs(self.y_coeffs.iter().map(UniPoly::derivative).collect())
    }

    /// Evaluates at `(t, y)`.
    pub fn eval(&self, t: &Rational, y: &Rational) -> Rational {
        let mut acc = super::rat_int(0);
        for q in self.y_coeffs.iter().rev() {
            acc = &(&acc * y) + &q.eval(t);
        }
        acc
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, q) in self.y_coeffs.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({q})*Y^{i}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
