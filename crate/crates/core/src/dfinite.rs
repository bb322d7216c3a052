//! From an algebraic power series to a linear ODE, to a recurrence with
//! polynomial coefficients, to the gap constant bounding the index
//! distance between consecutive nonzero coefficients.

use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::geometry::{LatticeVector, RationalVector};
use crate::kernel::{
    self, poly_integer_roots, rat_int, BiPoly, Int, RatFun, Rational, UniPoly,
};
use crate::support::cauchy_root_bound;
use crate::{Error, Result};

/// A homogeneous linear ODE `sum_j p_j(T) F^(j)(T) = 0` with polynomial
/// coefficients, top coefficient nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearOde {
    coeffs: Vec<UniPoly>,
}

impl LinearOde {
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[UniPoly] {
        &self.coeffs
    }

    /// Applies the operator to a truncated series; exact wherever enough
    /// coefficients are supplied.
    pub fn apply_to_series(&self, coeffs: &[Rational], prec: usize) -> Vec<Rational> {
        let mut out = alloc::vec![rat_int(0); prec];
        for (j, p) in self.coeffs.iter().enumerate() {
            // j-th derivative coefficients: (m+1)...(m+j) a_{m+j}.
            let mut deriv = Vec::with_capacity(coeffs.len().saturating_sub(j));
            for m in 0..coeffs.len().saturating_sub(j) {
                let mut factor = rat_int(1);
                for s in 1..=j {
                    factor = factor * rat_int((m + s) as i64);
                }
                deriv.push(factor * &coeffs[m + j]);
            }
            for (a, pc) in p.coeffs().iter().enumerate() {
                if pc.is_zero() {
                    continue;
                }
                for (m, dv) in deriv.iter().enumerate() {
                    let target = m + a;
                    if target < prec {
                        out[target] = &out[target] + &(pc * dv);
                    }
                }
            }
        }
        out
    }
}

/// Polynomials in `Y` with `K(T)` coefficients, low degree first and
/// trimmed; the arithmetic needed for modular computation in
/// `K(T)[Y]/(Q)`.
mod ypoly {
    use super::*;

    pub type YPoly = Vec<RatFun>;

    pub fn trim(mut p: YPoly) -> YPoly {
        while p.last().is_some_and(RatFun::is_zero) {
            p.pop();
        }
        p
    }

    pub fn from_bipoly(q: &BiPoly) -> YPoly {
        trim(q.y_coeffs().iter().cloned().map(RatFun::from_poly).collect())
    }

    pub fn is_zero(p: &YPoly) -> bool {
        p.is_empty()
    }

    pub fn sub(a: &YPoly, b: &YPoly) -> YPoly {
        let n = a.len().max(b.len());
        let zero = RatFun::zero();
        trim(
            (0..n)
                .map(|i| {
                    let x = a.get(i).unwrap_or(&zero);
                    let y = b.get(i).unwrap_or(&zero);
                    x - y
                })
                .collect(),
        )
    }

    pub fn mul(a: &YPoly, b: &YPoly) -> YPoly {
        if is_zero(a) || is_zero(b) {
            return Vec::new();
        }
        let mut out = alloc::vec![RatFun::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] = &out[i + j] + &(x * y);
            }
        }
        trim(out)
    }

    pub fn scale(a: &YPoly, c: &RatFun) -> YPoly {
        trim(a.iter().map(|x| x * c).collect())
    }

    /// Division with remainder (the divisor's leading coefficient is a
    /// unit of `K(T)`).
    pub fn divrem(a: &YPoly, b: &YPoly) -> (YPoly, YPoly) {
        assert!(!is_zero(b), "division by zero");
        let db = b.len() - 1;
        if a.len() <= db {
            return (Vec::new(), a.clone());
        }
        let lead = b.last().expect("nonzero").clone();
        let mut rem = a.clone();
        let mut quot = alloc::vec![RatFun::zero(); a.len() - db];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + db] / &lead;
            if !c.is_zero() {
                for (j, bc) in b.iter().enumerate() {
                    let t = bc * &c;
                    rem[k + j] = &rem[k + j] - &t;
                }
            }
            quot[k] = c;
        }
        (trim(quot), trim(rem))
    }

    pub fn rem(a: &YPoly, b: &YPoly) -> YPoly {
        divrem(a, b).1
    }

    pub fn gcd(a: &YPoly, b: &YPoly) -> YPoly {
        let mut x = a.clone();
        let mut y = b.clone();
        while !is_zero(&y) {
            let r = rem(&x, &y);
            x = y;
            y = r;
        }
        x
    }

    /// Inverse of `a` modulo `b` by the extended Euclidean algorithm;
    /// `None` when they share a factor.
    pub fn inverse_mod(a: &YPoly, b: &YPoly) -> Option<YPoly> {
        let (mut r0, mut r1) = (b.clone(), rem(a, b));
        let (mut s0, mut s1): (YPoly, YPoly) =
            (Vec::new(), alloc::vec![RatFun::one()]);
        while !is_zero(&r1) {
            let (q, r) = divrem(&r0, &r1);
            let s = sub(&s0, &mul(&q, &s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        if r0.len() != 1 {
            return None;
        }
        Some(scale(&s0, &r0[0].recip()))
    }

    pub fn derivative_y(p: &YPoly) -> YPoly {
        trim(
            p.iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| {
                    c * &RatFun::from_poly(UniPoly::constant(rat_int(i as i64)))
                })
                .collect(),
        )
    }

    pub fn derivative_t(p: &YPoly) -> YPoly {
        trim(p.iter().map(RatFun::derivative).collect())
    }
}

/// Converts the minimal polynomial of an algebraic power series into a
/// homogeneous linear ODE with polynomial coefficients annihilating it.
///
/// In `K(T)[Y]/(Q)` the derivative of the root is `-Q_T / Q_Y`; iterating
/// derivations gives representatives of `F, F', F'', ...` in a space of
/// dimension `deg_Y(Q)`, and the first linear dependency over `K(T)`
/// (found with the exact kernel routine) is the ODE. Its order is at most
/// `deg_Y(Q)`.
pub fn algebraic_to_ode(q: &BiPoly) -> Result<LinearOde> {
    let delta = q.degree_y().filter(|d| *d >= 1).ok_or(Error::NotSquarefree)?;
    let qy_full = ypoly::from_bipoly(&q.d_dy());
    let qm = ypoly::from_bipoly(q);
    if ypoly::gcd(&qm, &qy_full).len() != 1 {
        return Err(Error::NotSquarefree);
    }
    let qy_inv = ypoly::inverse_mod(&qy_full, &qm).ok_or(Error::NotSquarefree)?;
    let qt = ypoly::from_bipoly(&q.d_dt());
    let minus_qt = ypoly::scale(&qt, &(-&RatFun::one()));
    let y_prime = ypoly::rem(&ypoly::mul(&minus_qt, &qy_inv), &qm);

    // Derivation on representatives: d(rho) = rho_T + rho_Y * y'.
    let derive = |rho: &ypoly::YPoly| -> ypoly::YPoly {
        let a = ypoly::derivative_t(rho);
        let b = ypoly::rem(&ypoly::mul(&ypoly::derivative_y(rho), &y_prime), &qm);
        ypoly::sub(&a, &ypoly::scale(&b, &(-&RatFun::one())))
    };

    let mut reps: Vec<ypoly::YPoly> = Vec::new();
    // F itself is the class of Y.
    reps.push(ypoly::rem(
        &alloc::vec![RatFun::zero(), RatFun::one()],
        &qm,
    ));
    for order in 1..=delta {
        let next = derive(reps.last().expect("nonempty"));
        reps.push(next);
        // Matrix rows are the coordinates 0..delta, columns the reps.
        let rows: Vec<Vec<RatFun>> = (0..delta)
            .map(|k| {
                reps.iter()
                    .map(|r| r.get(k).cloned().unwrap_or_else(RatFun::zero))
                    .collect()
            })
            .collect();
        let kernel = kernel::ratfun_kernel(&rows);
        let Some(rel) = kernel.first() else {
            continue;
        };
        debug_assert_eq!(rel.len(), order + 1);
        return Ok(normalize_ode(rel));
    }
    unreachable!("delta + 1 vectors in a delta-dimensional space are dependent")
}

/// Clears denominators, removes polynomial and rational content, and signs
/// the coefficient vector so the top polynomial has a positive leading
/// coefficient.
fn normalize_ode(rel: &[RatFun]) -> LinearOde {
    let mut lcm = UniPoly::one();
    for c in rel {
        let g = lcm.gcd(c.den());
        lcm = &lcm * &c.den().div_exact(&g);
    }
    let mut polys: Vec<UniPoly> = rel
        .iter()
        .map(|c| c.num() * &lcm.div_exact(c.den()))
        .collect();
    let mut content = UniPoly::zero();
    for p in &polys {
        content = content.gcd(p);
    }
    if let Some(d) = content.degree() {
        if d > 0 {
            polys = polys.iter().map(|p| p.div_exact(&content)).collect();
        }
    }
    // Make all coefficients primitive integers jointly.
    let mut denom = Int::from(1);
    let mut numer = Int::zero();
    for p in &polys {
        for c in p.coeffs() {
            denom = denom.lcm(c.denom());
            numer = numer.gcd(c.numer());
        }
    }
    let scale = Rational::new(denom, numer.max(Int::from(1)));
    for p in &mut polys {
        *p = p.scale(&scale);
    }
    if polys.last().expect("nonempty").leading().is_negative() {
        for p in &mut polys {
            *p = -&*p;
        }
    }
    while polys.last().is_some_and(UniPoly::is_zero) {
        polys.pop();
    }
    LinearOde { coeffs: polys }
}

/// A recurrence `sum_j Q_j(m+j) a_{m+j} = 0` for `m >= valid_from`, with
/// `Q_N` nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PRecurrence {
    qs: Vec<UniPoly>,
    valid_from: i64,
}

impl PRecurrence {
    pub fn new(qs: Vec<UniPoly>, valid_from: i64) -> Result<PRecurrence> {
        if qs.is_empty() || qs.last().is_some_and(UniPoly::is_zero) {
            return Err(Error::ZeroPolynomial);
        }
        Ok(PRecurrence { qs, valid_from })
    }

    /// The span `N`.
    pub fn span(&self) -> usize {
        self.qs.len() - 1
    }

    pub fn qs(&self) -> &[UniPoly] {
        &self.qs
    }

    pub fn valid_from(&self) -> i64 {
        self.valid_from
    }

    /// `sum_j Q_j(m+j) a_{m+j}` for the given coefficient prefix.
    pub fn apply(&self, coeffs: &[Rational], m: usize) -> Rational {
        let mut acc = rat_int(0);
        for (j, q) in self.qs.iter().enumerate() {
            let idx = m + j;
            if idx >= coeffs.len() {
                continue;
            }
            acc = acc + q.eval(&rat_int((m + j) as i64)) * &coeffs[idx];
        }
        acc
    }

    /// True iff the recurrence annihilates the prefix at every applicable
    /// index (those where the full window is inside the prefix).
    pub fn annihilates(&self, coeffs: &[Rational]) -> bool {
        let n = self.span();
        if coeffs.len() < n + 1 {
            return true;
        }
        let start = self.valid_from.max(0) as usize;
        (start..=coeffs.len() - n - 1).all(|m| self.apply(coeffs, m).is_zero())
    }
}

/// Transcribes `T^a (d/dT)^j` into shift-and-multiply form: the ODE
/// becomes `sum_j Q_j(m+j) a_{m+j} = 0`, valid from index 0 (windows
/// reaching below index 0 vanish through their falling factorials).
pub fn ode_to_recurrence(ode: &LinearOde) -> Result<PRecurrence> {
    // Offsets e = j - a range over [emin, emax].
    let mut emin = i64::MAX;
    let mut emax = i64::MIN;
    for (j, p) in ode.coeffs().iter().enumerate() {
        for (a, c) in p.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = j as i64 - a as i64;
            emin = emin.min(e);
            emax = emax.max(e);
        }
    }
    if emin > emax {
        return Err(Error::ZeroPolynomial);
    }
    let span = (emax - emin) as usize;
    let mut c_hat = alloc::vec![UniPoly::zero(); span + 1];
    for (j, p) in ode.coeffs().iter().enumerate() {
        for (a, c) in p.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            // c * (m - a + 1)(m - a + 2)...(m - a + j), a polynomial in m.
            let mut poch = UniPoly::constant(c.clone());
            for s in 1..=j {
                poch = &poch
                    * &UniPoly::from_coeffs(alloc::vec![
                        rat_int(s as i64 - a as i64),
                        rat_int(1),
                    ]);
            }
            let e = (j as i64 - a as i64 - emin) as usize;
            c_hat[e] = &c_hat[e] + &poch;
        }
    }
    // Q_i(y) = C_hat_i(y - i - emin); then sum_i Q_i(m+i) a_{m+i} matches
    // sum_e C_hat_e(m') a_{m'+e} under m = m' + emin.
    let qs: Vec<UniPoly> = c_hat
        .iter()
        .enumerate()
        .map(|(i, p)| p.compose_shift(&rat_int(-(i as i64) - emin)))
        .collect();
    PRecurrence::new(qs, 0)
}

/// The gap data of a recurrence: span, integer-root bound, zero-run bound,
/// and the per-step constant `2(N + r)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapBound {
    /// Recurrence span `N`.
    pub span: usize,
    /// `r`: bound on the indices `m` at which some `Q_i(m+i)` vanishes.
    pub root_bound: Int,
    /// `N + r`.
    pub run: Int,
    /// `2(N + r)`.
    pub per_step: Int,
}

/// Gap bound plus the level constant `C = 2(N+r) * omega.v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapConstant {
    pub bound: GapBound,
    /// `omega . v`, the level increment per ray index.
    pub step: Rational,
    /// `C = 2(N + r) * omega.v`.
    pub c: Rational,
}

fn gap_from_root_bound(rec: &PRecurrence, omega: &RationalVector, v: &LatticeVector, r: Int)
    -> Result<GapConstant>
{
    let step = omega.dot_lattice(v);
    if !step.is_positive() {
        return Err(Error::NonpositiveStep);
    }
    let span = rec.span();
    let run = &r + Int::from(span);
    let per_step = &run * Int::from(2);
    let c = Rational::from_integer(per_step.clone()) * &step;
    Ok(GapConstant {
        bound: GapBound { span, root_bound: r, run, per_step },
        step,
        c,
    })
}

/// Gap constant from the integer roots of the shifted recurrence
/// polynomials `m -> Q_i(m+i)`: only integer arguments are ever
/// substituted, so the integer-root bound is sound and exactly computable.
pub fn gap_constant(
    rec: &PRecurrence,
    omega: &RationalVector,
    v: &LatticeVector,
) -> Result<GapConstant> {
    let mut r = Int::zero();
    for (i, q) in rec.qs().iter().enumerate() {
        if q.is_zero() {
            continue;
        }
        let shifted = q.compose_shift(&rat_int(i as i64));
        for z in poly_integer_roots(&shifted)? {
            let a = z.abs();
            if a > r {
                r = a;
            }
        }
    }
    gap_from_root_bound(rec, omega, v, r)
}

/// Audit variant: bounds `r` by the Cauchy bound on all complex roots of
/// the shifted polynomials instead of enumerating integer roots; always at
/// least as large as the integer-root version.
pub fn gap_constant_cauchy(
    rec: &PRecurrence,
    omega: &RationalVector,
    v: &LatticeVector,
) -> Result<GapConstant> {
    let mut r = Int::zero();
    for (i, q) in rec.qs().iter().enumerate() {
        if q.is_zero() {
            continue;
        }
        let shifted = q.compose_shift(&rat_int(i as i64));
        let b = cauchy_root_bound(&shifted).ceil().to_integer();
        if b > r {
            r = b;
        }
    }
    gap_from_root_bound(rec, omega, v, r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{rat, taylor_of_algebraic};

    fn sqrt_bipoly() -> BiPoly {
        BiPoly::from_y_coeffs(alloc::vec![
            UniPoly::from_integers(&[-1, -1]),
            UniPoly::zero(),
            UniPoly::one(),
        ])
    }

    #[test]
    fn ode_for_sqrt() {
        // 2(1+T) F' - F = 0.
        let ode = algebraic_to_ode(&sqrt_bipoly()).unwrap();
        assert_eq!(ode.order(), 1);
        assert_eq!(ode.coeffs()[0], UniPoly::from_integers(&[-1]));
        assert_eq!(ode.coeffs()[1], UniPoly::from_integers(&[2, 2]));
    }

    #[test]
    fn ode_for_monomial_and_geometric() {
        // Q = Y - T^3 -> T F' - 3 F = 0.
        let q = BiPoly::from_y_coeffs(alloc::vec![
            UniPoly::from_integers(&[0, 0, 0, -1]),
            UniPoly::one(),
        ]);
        let ode = algebraic_to_ode(&q).unwrap();
        assert_eq!(ode.order(), 1);
        assert_eq!(ode.coeffs()[0], UniPoly::from_integers(&[-3]));
        assert_eq!(ode.coeffs()[1], UniPoly::from_integers(&[0, 1]));

        // Q = (1-T)Y - 1 -> (T-1) F' + F = 0 in the signed canonical form,
        // the same operator as (1-T) F' - F = 0.
        let q = BiPoly::from_y_coeffs(alloc::vec![
            UniPoly::from_integers(&[-1]),
            UniPoly::from_integers(&[1, -1]),
        ]);
        let ode = algebraic_to_ode(&q).unwrap();
        assert_eq!(ode.order(), 1);
        assert_eq!(ode.coeffs()[0], UniPoly::from_integers(&[1]));
        assert_eq!(ode.coeffs()[1], UniPoly::from_integers(&[-1, 1]));
        let ones = alloc::vec![rat(1, 1); 12];
        assert!(ode.apply_to_series(&ones, 10).iter().all(Zero::is_zero));
    }

    #[test]
    fn ode_rejects_square() {
        let y_minus_t = BiPoly::from_y_coeffs(alloc::vec![
            UniPoly::from_integers(&[0, -1]),
            UniPoly::one(),
        ]);
        // (Y - T)^2 = Y^2 - 2TY + T^2.
        let sq = BiPoly::from_y_coeffs(alloc::vec![
            UniPoly::from_integers(&[0, 0, 1]),
            UniPoly::from_integers(&[0, -2]),
            UniPoly::one(),
        ]);
        assert!(algebraic_to_ode(&y_minus_t).is_ok());
        assert_eq!(algebraic_to_ode(&sq), Err(Error::NotSquarefree));
    }

    #[test]
    fn ode_verified_against_taylor_oracle() {
        let ode = algebraic_to_ode(&sqrt_bipoly()).unwrap();
        let coeffs = taylor_of_algebraic(&sqrt_bipoly(), &rat(1, 1), 12).unwrap();
        let image = ode.apply_to_series(&coeffs, 10);
        assert!(image.iter().all(Zero::is_zero));
    }

    #[test]
    fn recurrence_for_sqrt() {
        // 2(m+1) a_{m+1} + (2m-1) a_m = 0 from index 0.
        let ode = algebraic_to_ode(&sqrt_bipoly()).unwrap();
        let rec = ode_to_recurrence(&ode).unwrap();
        assert_eq!(rec.span(), 1);
        assert_eq!(rec.valid_from(), 0);
        // Q_0(m) = 2m - 1, Q_1 evaluated at m+1 gives 2(m+1).
        assert_eq!(rec.qs()[0], UniPoly::from_integers(&[-1, 2]));
        assert_eq!(rec.qs()[1], UniPoly::from_integers(&[0, 2]));
        let coeffs = taylor_of_algebraic(&sqrt_bipoly(), &rat(1, 1), 50).unwrap();
        assert!(rec.annihilates(&coeffs));
    }

    #[test]
    fn recurrence_for_exponential_shape() {
        // F' - F = 0 -> (m+1) a_{m+1} - a_m = 0.
        let ode = LinearOde {
            coeffs: alloc::vec![UniPoly::from_integers(&[-1]), UniPoly::one()],
        };
        let rec = ode_to_recurrence(&ode).unwrap();
        assert_eq!(rec.span(), 1);
        assert_eq!(rec.qs()[0], UniPoly::from_integers(&[-1]));
        assert_eq!(rec.qs()[1], UniPoly::from_integers(&[0, 1]));
        // Check against 1/m! coefficients.
        let mut coeffs = alloc::vec![rat(1, 1)];
        for m in 1..20usize {
            let prev = coeffs[m - 1].clone();
            coeffs.push(prev / rat_int(m as i64));
        }
        assert!(rec.annihilates(&coeffs));
    }

    #[test]
    fn recurrence_for_geometric() {
        let q = BiPoly::from_y_coeffs(alloc::vec![
            UniPoly::from_integers(&[-1]),
            UniPoly::from_integers(&[1, -1]),
        ]);
        let rec = ode_to_recurrence(&algebraic_to_ode(&q).unwrap()).unwrap();
        // (m+1) a_m - (m+1) a_{m+1} = 0 in canonical signs.
        let ones = alloc::vec![rat(1, 1); 30];
        assert!(rec.annihilates(&ones));
        assert_eq!(rec.qs()[0], UniPoly::from_integers(&[1, 1]));
        assert_eq!(rec.qs()[1], UniPoly::from_integers(&[0, -1]));
    }

    #[test]
    fn gap_constant_for_sqrt() {
        let rec = ode_to_recurrence(&algebraic_to_ode(&sqrt_bipoly()).unwrap()).unwrap();
        let omega = RationalVector::from_i64(&[1, 2]);
        let v = LatticeVector::from_i64(&[-1, 1]);
        let gc = gap_constant(&rec, &omega, &v).unwrap();
        assert_eq!(gc.bound.span, 1);
        assert_eq!(gc.bound.root_bound, Int::from(1));
        assert_eq!(gc.c, rat(4, 1));

        let audit = gap_constant_cauchy(&rec, &omega, &v).unwrap();
        assert!(audit.bound.root_bound >= gc.bound.root_bound);
        assert!(audit.c >= gc.c);
    }

    #[test]
    fn gap_constant_simple_cases() {
        // a_{m+1} - a_m = 0: N = 1, r = 0, C = 2 * step.
        let rec = PRecurrence::new(
            alloc::vec![UniPoly::from_integers(&[-1]), UniPoly::one()],
            0,
        )
        .unwrap();
        let omega = RationalVector::from_i64(&[2, 1]);
        let v = LatticeVector::from_i64(&[1, -1]);
        // omega.v = 1; spec step 3 means scaling omega.
        let gc = gap_constant(&rec, &RationalVector::from_i64(&[3, 0]), &v).unwrap();
        assert_eq!(gc.c, rat(6, 1));
        let gc = gap_constant(&rec, &omega, &v).unwrap();
        assert_eq!(gc.bound.root_bound, Int::zero());
        assert_eq!(gc.c, rat(2, 1));

        // Q_0 = m - 5 contributes r = 5.
        let rec = PRecurrence::new(
            alloc::vec![UniPoly::from_integers(&[-5, 1]), UniPoly::one()],
            0,
        )
        .unwrap();
        let gc = gap_constant(&rec, &omega, &v).unwrap();
        assert_eq!(gc.bound.root_bound, Int::from(5));
        assert_eq!(gc.c, rat(2, 1) * rat_int(6));

        // Nonpositive step rejected.
        assert_eq!(
            gap_constant(&rec, &omega, &LatticeVector::from_i64(&[-1, 1])),
            Err(Error::NonpositiveStep)
        );
    }

    #[test]
    fn zero_run_bound_on_sparse_algebraic() {
        // F = sqrt(1+T^3): minimal polynomial Y^2 - (1 + T^3). Coefficients
        // vanish except at multiples of 3; runs of zeros have length 2.
        let q = BiPoly::from_y_coeffs(alloc::vec![
            UniPoly::from_integers(&[-1, 0, 0, -1]),
            UniPoly::zero(),
            UniPoly::one(),
        ]);
        let ode = algebraic_to_ode(&q).unwrap();
        let rec = ode_to_recurrence(&ode).unwrap();
        let coeffs = taylor_of_algebraic(&q, &rat(1, 1), 200).unwrap();
        assert!(rec.annihilates(&coeffs));

        let omega = RationalVector::from_i64(&[1, 2]);
        let v = LatticeVector::from_i64(&[-1, 1]);
        let gc = gap_constant(&rec, &omega, &v).unwrap();
        // Observed max zero-run beyond r stays below N + r.
        let r = num_traits::ToPrimitive::to_usize(&gc.bound.root_bound).unwrap();
        let mut run = 0usize;
        let mut max_run = 0usize;
        for c in coeffs.iter().skip(r + 1) {
            if c.is_zero() {
                run += 1;
                max_run = max_run.max(run);
            } else {
                run = 0;
            }
        }
        assert!(Int::from(max_run) < gc.bound.run, "run {max_run} vs {}", gc.bound.run);
        // And the ODE order respects the degree bound.
        assert!(ode.order() <= 2);
    }
}
