//! Integer and rational root finding by divisor enumeration.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use super::{Int, Rational, UniPoly};
use crate::{Error, Result};

/// All positive divisors of `n > 0`, by trial division.
fn divisors(n: &Int) -> Vec<Int> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = Int::one();
    while &i * &i <= *n {
        if (n % &i).is_zero() {
            small.push(i.clone());
            let q = n / &i;
            if q != i {
                large.push(q);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Exactly the integers `z` with `p(z) = 0`, found by rational-root-theorem
/// divisor enumeration on the primitive integer form of `p`.
pub fn poly_integer_roots(p: &UniPoly) -> Result<BTreeSet<Int>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let ints = p.primitive_integer_coeffs();
    let mut roots = BTreeSet::new();

    // Low-order zero coefficients mean z = 0 is a root.
    let shift = ints.iter().take_while(|c| c.is_zero()).count();
    if shift > 0 {
        roots.insert(Int::zero());
    }
    let reduced = &ints[shift..];
    if reduced.len() <= 1 {
        return Ok(roots);
    }
    let eval = |z: &Int| -> Int {
        let mut acc = Int::zero();
        for c in reduced.iter().rev() {
            acc = acc * z + c;
        }
        acc
    };
    let constant = reduced[0].abs();
    for d in divisors(&constant) {
        if eval(&d).is_zero() {
            roots.insert(d.clone());
        }
        let neg = -d;
        if eval(&neg).is_zero() {
            roots.insert(neg);
        }
    }
    Ok(roots)
}

/// All rational roots of `p`, with multiplicities, found by enumerating
/// `±(divisor of constant)/(divisor of leading)` on the primitive integer
/// form and deflating.
pub fn poly_rational_roots(p: &UniPoly) -> Result<Vec<(Rational, usize)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let ints = p.primitive_integer_coeffs();
    let mut out = Vec::new();

    let shift = ints.iter().take_while(|c| c.is_zero()).count();
    if shift > 0 {
        out.push((Rational::zero(), shift));
    }
    let reduced: Vec<Int> = ints[shift..].to_vec();
    if reduced.len() <= 1 {
        return Ok(out);
    }
    let constant = reduced[0].abs();
    let leading = reduced.last().expect("nonzero").abs();
    let mut candidates = BTreeSet::new();
    for num in divisors(&constant) {
        for den in divisors(&leading) {
            let c = Rational::new(num.clone(), den.clone());
            candidates.insert(c.clone());
            candidates.insert(-c);
        }
    }
    let poly = UniPoly::from_coeffs(
        reduced
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect(),
    );
    for c in candidates {
        if !poly.eval(&c).is_zero() {
            continue;
        }
        // Deflate to get the multiplicity.
        let factor = UniPoly::from_coeffs(alloc::vec![-c.clone(), super::rat_int(1)]);
        let mut q = poly.clone();
        let mut mult = 0usize;
        loop {
            let (quot, rem) = q.divrem(&factor).expect("nonzero factor");
            if !rem.is_zero() {
                break;
            }
            mult += 1;
            q = quot;
        }
        out.push((c, mult));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{int, rat, rat_int};

    #[test]
    fn symmetric_factorization() {
        // m^2 - 1 -> {-1, 1}
        let p = UniPoly::from_integers(&[-1, 0, 1]);
        let roots = poly_integer_roots(&p).unwrap();
        assert_eq!(roots, BTreeSet::from([int(-1), int(1)]));
    }

    #[test]
    fn odd_even_mismatch_has_no_roots() {
        // 2m + 1 -> {}
        let p = UniPoly::from_integers(&[1, 2]);
        assert!(poly_integer_roots(&p).unwrap().is_empty());
    }

    #[test]
    fn divisor_scan_oracle() {
        // m^2 - 3m + 2 -> {1, 2}, confirmed against a brute-force scan of
        // the divisors of 2.
        let p = UniPoly::from_integers(&[2, -3, 1]);
        let roots = poly_integer_roots(&p).unwrap();
        let brute: BTreeSet<Int> = (-2..=2)
            .map(int)
            .filter(|z| p.eval_int(z) == rat_int(0))
            .collect();
        assert_eq!(roots, brute);
        assert_eq!(roots, BTreeSet::from([int(1), int(2)]));
    }

    #[test]
    fn zero_polynomial_is_an_error() {
        assert_eq!(poly_integer_roots(&UniPoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn rational_roots_with_multiplicity() {
        // (2x - 1)^2 (x + 3)
        let f = UniPoly::from_integers(&[-1, 2]);
        let p = &(&f * &f) * &UniPoly::from_integers(&[3, 1]);
        let roots = poly_rational_roots(&p).unwrap();
        assert!(roots.contains(&(rat(1, 2), 2)));
        assert!(roots.contains(&(rat(-3, 1), 1)));
        assert_eq!(roots.len(), 2);
    }
}
