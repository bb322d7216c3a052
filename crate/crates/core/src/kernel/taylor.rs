//! Truncated power series over the rationals and the Taylor-coefficient
//! oracle for simple roots of bivariate polynomials.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use super::{rat_int, BiPoly, Rational};
use crate::{Error, Result};

/// A truncated power series: `coeffs[m]` is the coefficient of `T^m`; every
/// operation is exact modulo `T^len`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries {
    coeffs: Vec<Rational>,
}

impl TruncSeries {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        TruncSeries { coeffs }
    }

    pub fn constant(c: Rational, prec: usize) -> Self {
        let mut coeffs = vec![rat_int(0); prec];
        if prec > 0 {
            coeffs[0] = c;
        }
        TruncSeries { coeffs }
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, m: usize) -> Rational {
        self.coeffs.get(m).cloned().unwrap_or_else(|| rat_int(0))
    }

    pub fn truncate(&self, prec: usize) -> TruncSeries {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(prec, rat_int(0));
        TruncSeries { coeffs }
    }

    pub fn add(&self, rhs: &TruncSeries) -> TruncSeries {
        let prec = self.precision().min(rhs.precision());
        TruncSeries {
            coeffs: (0..prec).map(|i| self.coeff(i) + rhs.coeff(i)).collect(),
        }
    }

    pub fn sub(&self, rhs: &TruncSeries) -> TruncSeries {
        let prec = self.precision().min(rhs.precision());
        TruncSeries {
            coeffs: (0..prec).map(|i| self.coeff(i) - rhs.coeff(i)).collect(),
        }
    }

    pub fn mul(&self, rhs: &TruncSeries) -> TruncSeries {
        let prec = self.precision().min(rhs.precision());
        let mut coeffs = vec![rat_int(0); prec];
        for (i, a) in self.coeffs.iter().enumerate().take(prec) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(prec - i) {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        TruncSeries { coeffs }
    }

    /// Multiplicative inverse; requires a unit constant term.
    pub fn inv(&self) -> TruncSeries {
        let prec = self.precision();
        assert!(prec > 0 && !self.coeffs[0].is_zero(), "series is not a unit");
        let a0 = self.coeffs[0].clone().recip();
        let mut coeffs = vec![rat_int(0); prec];
        coeffs[0] = a0.clone();
        for m in 1..prec {
            let mut s = rat_int(0);
            for k in 1..=m {
                let t = &self.coeff(k) * &coeffs[m - k];
                s = s + t;
            }
            coeffs[m] = -(&s * &a0);
        }
        TruncSeries { coeffs }
    }

    /// Evaluates `q(T, self)` modulo `T^prec` by Horner in `Y`.
    pub fn eval_bipoly(q: &BiPoly, y: &TruncSeries, prec: usize) -> TruncSeries {
        let mut acc = TruncSeries::constant(rat_int(0), prec);
        let yt = y.truncate(prec);
        for p in q.y_coeffs().iter().rev() {
            let mut pc: Vec<Rational> = p.coeffs().to_vec();
            pc.resize(prec.max(pc.len()), rat_int(0));
            pc.truncate(prec);
            acc = acc.mul(&yt).add(&TruncSeries::new(pc));
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

/// First `d + 1` Taylor coefficients of the unique power-series root
/// `Y(T)` of `q(T, Y) = 0` with `Y(0) = y0`, computed by quadratic Newton
/// iteration on truncated series.
///
/// Requires `q(0, y0) = 0` and a nonvanishing `Y`-derivative at the point
/// (simple root).
pub fn taylor_of_algebraic(q: &BiPoly, y0: &Rational, d: usize) -> Result<Vec<Rational>> {
    let zero = rat_int(0);
    if q.eval(&zero, y0) != zero {
        return Err(Error::NotARoot);
    }
    let qy = q.d_dy();
    if qy.eval(&zero, y0) == zero {
        return Err(Error::NotSimpleRoot);
    }

    let target = d + 1;
    let mut prec = 1usize;
    let mut y = TruncSeries::constant(y0.clone(), 1);
    while prec < target {
        prec = (prec * 2).min(target);
        let yc = y.truncate(prec);
        let qv = TruncSeries::eval_bipoly(q, &yc, prec);
        let dv = TruncSeries::eval_bipoly(&qy, &yc, prec);
        y = yc.sub(&qv.mul(&dv.inv()));
    }
    Ok(y.coeffs().to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{rat, UniPoly};

    fn sqrt_poly() -> BiPoly {
        // Y^2 - (1 + T)
        BiPoly::from_y_coeffs(vec![
            UniPoly::from_integers(&[-1, -1]),
            UniPoly::zero(),
            UniPoly::one(),
        ])
    }

    /// Independent oracle: binomial series for (1 + T)^(1/2).
    fn binomial_half(d: usize) -> Vec<Rational> {
        let mut out = vec![rat(1, 1)];
        for m in 1..=d {
            let m_i = rat_int(m as i64);
            let prev = out[m - 1].clone();
            let factor = (rat(1, 2) - rat_int(m as i64 - 1)) / m_i;
            out.push(prev * factor);
        }
        out
    }

    #[test]
    fn sqrt_series_matches_binomial_oracle() {
        let got = taylor_of_algebraic(&sqrt_poly(), &rat(1, 1), 3).unwrap();
        assert_eq!(got, vec![rat(1, 1), rat(1, 2), rat(-1, 8), rat(1, 16)]);
        let long = taylor_of_algebraic(&sqrt_poly(), &rat(1, 1), 40).unwrap();
        assert_eq!(long, binomial_half(40));
    }

    #[test]
    fn identity_and_geometric() {
        // Q = Y - T, y0 = 0 -> (0, 1, 0)
        let q = BiPoly::from_y_coeffs(vec![
            UniPoly::from_integers(&[0, -1]),
            UniPoly::one(),
        ]);
        assert_eq!(
            taylor_of_algebraic(&q, &rat(0, 1), 2).unwrap(),
            vec![rat(0, 1), rat(1, 1), rat(0, 1)]
        );
        // Q = (1 - T)Y - 1, y0 = 1 -> all ones
        let q = BiPoly::from_y_coeffs(vec![
            UniPoly::from_integers(&[-1]),
            UniPoly::from_integers(&[1, -1]),
        ]);
        assert_eq!(
            taylor_of_algebraic(&q, &rat(1, 1), 3).unwrap(),
            vec![rat(1, 1); 4]
        );
    }

    #[test]
    fn residual_vanishes_exactly() {
        let d = 25;
        let q = sqrt_poly();
        let coeffs = taylor_of_algebraic(&q, &rat(1, 1), d).unwrap();
        let y = TruncSeries::new(coeffs);
        let r = TruncSeries::eval_bipoly(&q, &y, d + 1);
        assert!(r.is_zero());
    }

    #[test]
    fn error_paths() {
        let q = sqrt_poly();
        assert_eq!(taylor_of_algebraic(&q, &rat(2, 1), 3), Err(Error::NotARoot));
        // Y^2 has a double root at 0.
        let dbl = BiPoly::from_y_coeffs(vec![UniPoly::zero(), UniPoly::zero(), UniPoly::one()]);
        assert_eq!(
            taylor_of_algebraic(&dbl, &rat(0, 1), 3),
            Err(Error::NotSimpleRoot)
        );
    }
}
