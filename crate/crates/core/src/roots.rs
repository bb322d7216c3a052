//! Monomial initial solutions of polynomials over series via the weighted
//! Newton polygon, and graded Hensel lifting of simple initial roots to a
//! truncated series.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::geometry::{Cone, LatticeVector, RationalVector};
use crate::kernel::{self, rat_int, Int, Rational, UniPoly};
use crate::orders::VectorOrder;
use crate::series::{CombineOp, KnownRegion, LaurentSeriesValue};
use crate::support::{SupportSpec, TailSpec};
use crate::{Error, Result};

/// A polynomial `P(T) = sum a_i T^i` with series coefficients.
#[derive(Clone, Debug)]
pub struct PolyOverSeries {
    coeffs: Vec<LaurentSeriesValue>,
}

impl PolyOverSeries {
    /// Requires degree at least 1, a nonzero leading coefficient, and all
    /// coefficient supports inside one strongly convex cone (together with
    /// the first orthant).
    pub fn new(coeffs: Vec<LaurentSeriesValue>) -> Result<PolyOverSeries> {
        if coeffs.len() < 2 {
            return Err(Error::InvalidSeries("degree must be at least 1".into()));
        }
        if coeffs.last().expect("nonempty").is_zero_value() {
            return Err(Error::InvalidSeries("leading coefficient is zero".into()));
        }
        let dim = coeffs[0].dim();
        let mut gens: Vec<LatticeVector> = Vec::new();
        for c in &coeffs {
            if c.dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim, got: c.dim() });
            }
            gens.extend_from_slice(c.support().enclosing_cone()?.generators());
        }
        let ambient = Cone::new(dim, gens)?;
        if !ambient.is_strongly_convex() {
            return Err(Error::InvalidSeries(
                "coefficient supports span no strongly convex cone".into(),
            ));
        }
        Ok(PolyOverSeries { coeffs })
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[LaurentSeriesValue] {
        &self.coeffs
    }

    pub fn dim(&self) -> usize {
        self.coeffs[0].dim()
    }

    /// Evaluates `P` at a series value, exact below `d`.
    pub fn eval(
        &self,
        xi: &LaurentSeriesValue,
        omega: &RationalVector,
        d: &Rational,
    ) -> Result<LaurentSeriesValue> {
        let mut acc = self.coeffs.last().expect("nonempty").clone();
        for a in self.coeffs.iter().rev().skip(1) {
            acc = acc.combine(xi, CombineOp::Multiply, omega, d)?;
            acc = acc.combine(a, CombineOp::Add, omega, d)?;
        }
        Ok(acc)
    }
}

/// A candidate initial term `c x^alpha` of a root, at valuation `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InitialRoot {
    /// `nu_omega` of the root.
    pub t: Rational,
    /// Exponent of the initial monomial, in true (unscaled) coordinates.
    pub alpha: RationalVector,
    /// Minimal ramification making `alpha` integral, folded with the
    /// coefficients' ramification.
    pub ramification: u32,
    /// Leading coefficient.
    pub c: Rational,
    pub multiplicity: usize,
}

struct EdgeData {
    /// Indices on the edge, with their monomial initial data
    /// (stored-scale exponent, coefficient).
    terms: Vec<(usize, LatticeVector, Rational)>,
    t: Rational,
}

/// Monomial initial data of the nonzero coefficients: `(i, nu_i, alpha_i,
/// c_i)` in stored scale `ram`.
fn monomial_initials(
    p: &PolyOverSeries,
    omega: &RationalVector,
    ram: u32,
) -> Result<Vec<(usize, Rational, LatticeVector, Rational)>> {
    let mut out = Vec::new();
    for (i, a) in p.coeffs.iter().enumerate() {
        let a = a.rescale(ram)?;
        if a.is_zero_value() {
            if matches!(a.known_region(), KnownRegion::Exact) {
                continue;
            }
            return Err(Error::NoMinimum);
        }
        let nu = a.nu_omega(omega)?;
        let init = a.initial_part(omega)?;
        if init.coefficients().len() != 1
            || !init.support().rays().is_empty()
            || !init.support().tails().is_empty()
        {
            return Err(Error::DegenerateInitialForm);
        }
        let (alpha, c) = init.coefficients().iter().next().expect("one term");
        out.push((i, nu, alpha.clone(), c.clone()));
    }
    Ok(out)
}

/// Lower-hull edges of the points `(i, nu_i)` under `min(nu_i + i t)`.
fn newton_edges(points: &[(usize, Rational)]) -> Vec<(Rational, Vec<usize>)> {
    let mut edges = Vec::new();
    if points.len() < 2 {
        return edges;
    }
    // Candidate slopes from all pairs; for each, keep it if at least two
    // points attain the minimum. Small inputs make this quadratic scan fine.
    let mut slopes: Vec<Rational> = Vec::new();
    for (k, (i, ni)) in points.iter().enumerate() {
        for (j, nj) in points.iter().skip(k + 1) {
            let t = (ni - nj) / rat_int(*j as i64 - *i as i64);
            if !slopes.contains(&t) {
                slopes.push(t);
            }
        }
    }
    slopes.sort();
    for t in slopes {
        let values: Vec<Rational> = points
            .iter()
            .map(|(i, ni)| ni + &t * rat_int(*i as i64))
            .collect();
        let min = values.iter().min().expect("nonempty").clone();
        let attain: Vec<usize> = points
            .iter()
            .zip(&values)
            .filter(|(_, v)| **v == min)
            .map(|((i, _), _)| *i)
            .collect();
        if attain.len() >= 2 {
            edges.push((t, attain));
        }
    }
    edges
}

/// All monomial initial solutions `(t, alpha, c)` of the `omega`-initial
/// equation, with multiplicities.
///
/// Candidate valuations `t` are the Newton-polygon slopes where the
/// minimum of `nu_i + i t` is attained at least twice; for each, the
/// exponent `alpha` is pinned by matching initial exponents and `c` ranges
/// over the nonzero rational roots common to every exponent class of the
/// edge equation.
pub fn newton_polygon_initials(
    p: &PolyOverSeries,
    omega: &RationalVector,
) -> Result<Vec<InitialRoot>> {
    let ram = common_ramification(p)?;
    let initials = monomial_initials(p, omega, ram)?;
    let points: Vec<(usize, Rational)> =
        initials.iter().map(|(i, nu, _, _)| (*i, nu.clone())).collect();
    let mut out: Vec<InitialRoot> = Vec::new();

    for (t, edge) in newton_edges(&points) {
        let terms: Vec<(usize, LatticeVector, Rational)> = initials
            .iter()
            .filter(|(i, _, _, _)| edge.contains(i))
            .map(|(i, _, a, c)| (*i, a.clone(), c.clone()))
            .collect();
        let data = EdgeData { terms, t };

        // Candidate alphas from pairs against the lowest edge index.
        let (i0, a0, _) = data.terms.first().expect("edge has two points").clone();
        let mut alphas: Vec<RationalVector> = Vec::new();
        for (i, a, _) in data.terms.iter().skip(1) {
            let diff = a0.sub(a).to_rational();
            let alpha = diff.scale(&(rat_int(1) / rat_int(*i as i64 - i0 as i64)));
            if !alphas.contains(&alpha) {
                alphas.push(alpha);
            }
        }
        for alpha in alphas {
            // Group edge terms into exponent classes under this alpha.
            let mut classes: Vec<(RationalVector, UniPoly)> = Vec::new();
            for (i, a, c) in &data.terms {
                let key = a
                    .to_rational()
                    .add(&alpha.scale(&rat_int(*i as i64)));
                let poly = UniPoly::monomial(*i, c.clone());
                match classes.iter_mut().find(|(k, _)| *k == key) {
                    Some((_, acc)) => *acc = &*acc + &poly,
                    None => classes.push((key, poly)),
                }
            }
            // Every class must vanish: common roots of the class polynomials.
            let mut gcd = classes
                .first()
                .map(|(_, p)| p.clone())
                .expect("nonempty edge");
            for (_, p) in classes.iter().skip(1) {
                gcd = gcd.gcd(p);
            }
            if gcd.degree().map_or(true, |d| d == 0) {
                continue;
            }
            for (c, mult) in kernel::poly_rational_roots(&gcd)? {
                if c.is_zero() {
                    continue;
                }
                // True-scale exponent and minimal ramification.
                let alpha_true = alpha.scale(&(rat_int(1) / rat_int(i64::from(ram))));
                let mut denom = Int::one();
                for x in alpha_true.coords() {
                    denom = denom.lcm(x.denom());
                }
                let k_min = denom.to_u32().ok_or_else(|| {
                    Error::InvalidSeries("ramification overflow".into())
                })?;
                let k_total = lcm_u32(ram, k_min)?;
                let root = InitialRoot {
                    t: data.t.clone(),
                    alpha: alpha_true,
                    ramification: k_total,
                    c,
                    multiplicity: mult,
                };
                if !out.contains(&root) {
                    out.push(root);
                }
            }
        }
    }
    Ok(out)
}

fn common_ramification(p: &PolyOverSeries) -> Result<u32> {
    let mut ram = Int::one();
    for c in &p.coeffs {
        ram = ram.lcm(&Int::from(c.ramification()));
    }
    ram.to_u32()
        .ok_or_else(|| Error::InvalidSeries("ramification overflow".into()))
}

fn lcm_u32(a: u32, b: u32) -> Result<u32> {
    Int::from(a)
        .lcm(&Int::from(b))
        .to_u32()
        .ok_or_else(|| Error::InvalidSeries("ramification overflow".into()))
}

/// Granularity of the value group: levels of stored-scale lattice points
/// under `omega / ram` differ by multiples of this.
fn level_step(omega: &RationalVector, ram: u32) -> Rational {
    let mut denom = Int::one();
    for c in omega.coords() {
        denom = denom.lcm(c.denom());
    }
    let mut g = Int::zero();
    for c in omega.coords() {
        let scaled = c * Rational::from_integer(denom.clone());
        debug_assert!(scaled.is_integer());
        g = g.gcd(&scaled.to_integer());
    }
    Rational::new(g, denom * Int::from(ram))
}

/// Result of a lift: the truncated root plus its reported enclosing cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftedRoot {
    pub value: LaurentSeriesValue,
    /// All realized and future exponents lie in `alpha + cone` (stored
    /// scale).
    pub origin: LatticeVector,
    pub cone: Cone,
}

/// Hensel-lifts a simple initial root to a series with
/// `nu_omega(P(result)) > horizon`, level by level in the `omega` grading.
///
/// The order `o` must refine the weight preorder of `omega` (its first
/// vector parallel to `omega`); the reported support cone is checked
/// `o`-non-negative so the result lies in the corresponding field family.
pub fn hensel_lift(
    p: &PolyOverSeries,
    initial: &InitialRoot,
    o: &VectorOrder,
    omega: &RationalVector,
    horizon: &Rational,
) -> Result<LiftedRoot> {
    if crate::series::parallel(&o.vectors()[0], omega).is_none() {
        return Err(Error::InvalidOrder(
            "order must refine the weight preorder of omega".into(),
        ));
    }
    let ram = initial.ramification;
    let alpha_scaled = initial
        .alpha
        .scale(&rat_int(i64::from(ram)))
        .to_lattice()
        .ok_or_else(|| Error::InvalidSeries("alpha not integral at its ramification".into()))?;

    // Edge data at the root's valuation, in the working scale.
    let initials = monomial_initials(p, omega, ram)?;
    let ram_q = rat_int(i64::from(ram));
    let mut edge: Vec<(usize, LatticeVector, Rational)> = Vec::new();
    let mut level_min: Option<Rational> = None;
    for (i, nu, a, c) in &initials {
        let level = nu + &initial.t * rat_int(*i as i64);
        match &level_min {
            None => {
                level_min = Some(level);
                edge = alloc::vec![(*i, a.clone(), c.clone())];
            }
            Some(m) => {
                if level < *m {
                    level_min = Some(level);
                    edge = alloc::vec![(*i, a.clone(), c.clone())];
                } else if level == *m {
                    edge.push((*i, a.clone(), c.clone()));
                }
            }
        }
    }
    let ell_star = level_min.ok_or(Error::NotARoot)?;

    // All edge terms must share one exponent class at this alpha, and the
    // class polynomial must have the initial coefficient as a simple root.
    let mut phi = UniPoly::zero();
    let mut mu: Option<LatticeVector> = None;
    for (i, a, c) in &edge {
        let class = a.add(&alpha_scaled.scale(&Int::from(*i)));
        match &mu {
            None => mu = Some(class),
            Some(m) if *m == class => {}
            _ => return Err(Error::DegenerateInitialForm),
        }
        phi = &phi + &UniPoly::monomial(*i, c.clone());
    }
    let mu = mu.expect("nonempty edge");
    if !phi.eval(&initial.c).is_zero() {
        return Err(Error::NotARoot);
    }
    let sigma1 = phi.derivative().eval(&initial.c);
    if sigma1.is_zero() {
        return Err(Error::NotSimpleRoot);
    }

    // Predicted support cone: directions beta + i*alpha - mu over the
    // symbolic coefficient supports, plus their ray directions and tail
    // generators.
    let dim = p.dim();
    let mut dirs: Vec<LatticeVector> = Vec::new();
    for (i, a) in p.coeffs.iter().enumerate() {
        let a = a.rescale(ram)?;
        let spec = a.support();
        let shift = alpha_scaled.scale(&Int::from(i));
        let mut origins: Vec<LatticeVector> = spec.points().to_vec();
        for r in spec.rays() {
            origins.push(r.origin.clone());
            dirs.push(r.direction.clone());
        }
        for t in spec.tails() {
            origins.push(t.origin.clone());
            dirs.extend_from_slice(t.cone.generators());
        }
        for beta in origins {
            let d = beta.add(&shift).sub(&mu);
            if !d.is_zero() {
                dirs.push(d);
            }
        }
    }
    let cone = Cone::new(dim, dirs)?;
    if !o.cone_nonnegative(&cone) {
        return Err(Error::ConeNotInHalfSpace);
    }

    // Lifting loop: kill the lowest residual level each round. The working
    // approximant is treated as the exact finite sum it is; the residual of
    // that finite sum is what certifies the horizon.
    let step = level_step(omega, ram);
    let d_req = horizon + &step;
    let deriv_level = &ell_star - &initial.t;
    let support = SupportSpec::new(
        dim,
        ram,
        Vec::new(),
        Vec::new(),
        alloc::vec![TailSpec { origin: alpha_scaled.clone(), cone: cone.clone() }],
    )?;

    let mut xi_map: BTreeMap<LatticeVector, Rational> = BTreeMap::new();
    xi_map.insert(alpha_scaled.clone(), initial.c.clone());
    let max_rounds = {
        let span = (&d_req - &initial.t) / &step;
        span.ceil().to_integer().to_u64().unwrap_or(0) as usize + p.degree() + 8
    };

    let residual_floor;
    let mut rounds = 0usize;
    loop {
        let xi = LaurentSeriesValue::new(xi_map.clone(), support.clone(), KnownRegion::Exact)?;
        let residual = p.eval(&xi, omega, &d_req).map_err(|e| match e {
            Error::HorizonExceedsKnowledge => Error::HorizonExceedsCoefficientKnowledge,
            other => other,
        })?;
        let stored_min = residual
            .coefficients()
            .keys()
            .map(|e| omega.dot_lattice(e) / &ram_q)
            .min();
        match stored_min {
            None => {
                residual_floor = d_req.clone();
                break;
            }
            Some(level) if level > *horizon => {
                residual_floor = level;
                break;
            }
            Some(level) => {
                rounds += 1;
                assert!(rounds <= max_rounds, "lift failed to make progress");
                // delta = -In(residual) / (sigma1 x^(mu - alpha))
                let level_stored = &level * &ram_q;
                for (e, c) in residual.coefficients() {
                    if omega.dot_lattice(e) != level_stored {
                        continue;
                    }
                    let exp = e.sub(&mu).add(&alpha_scaled);
                    let updated = xi_map.get(&exp).cloned().unwrap_or_else(|| rat_int(0))
                        - c / &sigma1;
                    if updated.is_zero() {
                        xi_map.remove(&exp);
                    } else {
                        xi_map.insert(exp, updated);
                    }
                }
            }
        }
    }

    let known_to = &residual_floor - &deriv_level;
    xi_map.retain(|e, _| omega.dot_lattice(e) / &ram_q < known_to);
    let value = LaurentSeriesValue::new(
        xi_map,
        support,
        KnownRegion::Below { omega: omega.clone(), degree: known_to },
    )?;
    Ok(LiftedRoot { value, origin: alpha_scaled, cone })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rat;

    fn lv(v: &[i64]) -> LatticeVector {
        LatticeVector::from_i64(v)
    }

    fn rv(v: &[i64]) -> RationalVector {
        RationalVector::from_i64(v)
    }

    fn mono(dim: usize, e: &[i64], c: Rational) -> LaurentSeriesValue {
        LaurentSeriesValue::from_monomials(dim, 1, &[(lv(e), c)]).unwrap()
    }

    /// P = T^2 - (x1 + x2)
    fn sqrt_poly() -> PolyOverSeries {
        let a0 = LaurentSeriesValue::from_monomials(
            2,
            1,
            &[(lv(&[1, 0]), rat(-1, 1)), (lv(&[0, 1]), rat(-1, 1))],
        )
        .unwrap();
        PolyOverSeries::new(alloc::vec![
            a0,
            LaurentSeriesValue::zero(2),
            mono(2, &[0, 0], rat(1, 1)),
        ])
        .unwrap()
    }

    /// P = x2 T^2 - (x1 + x2)
    fn scaled_sqrt_poly() -> PolyOverSeries {
        let a0 = LaurentSeriesValue::from_monomials(
            2,
            1,
            &[(lv(&[1, 0]), rat(-1, 1)), (lv(&[0, 1]), rat(-1, 1))],
        )
        .unwrap();
        PolyOverSeries::new(alloc::vec![
            a0,
            LaurentSeriesValue::zero(2),
            mono(2, &[0, 1], rat(1, 1)),
        ])
        .unwrap()
    }

    #[test]
    fn initials_for_sqrt() {
        let p = sqrt_poly();
        let roots = newton_polygon_initials(&p, &rv(&[1, 2])).unwrap();
        assert_eq!(roots.len(), 2);
        for r in &roots {
            assert_eq!(r.t, rat(1, 2));
            assert_eq!(r.ramification, 2);
            assert_eq!(
                r.alpha,
                RationalVector::new(alloc::vec![rat(1, 2), rat(0, 1)])
            );
            assert_eq!(r.multiplicity, 1);
        }
        let cs: Vec<Rational> = roots.iter().map(|r| r.c.clone()).collect();
        assert!(cs.contains(&rat(1, 1)) && cs.contains(&rat(-1, 1)));
    }

    #[test]
    fn initials_for_linear_poly() {
        // P = T - x1: t = omega_1, alpha = (1,0), c = 1.
        let p = PolyOverSeries::new(alloc::vec![
            mono(2, &[1, 0], rat(-1, 1)),
            mono(2, &[0, 0], rat(1, 1)),
        ])
        .unwrap();
        let roots = newton_polygon_initials(&p, &rv(&[1, 2])).unwrap();
        assert_eq!(roots.len(), 1);
        assert_eq!(roots[0].t, rat(1, 1));
        assert_eq!(roots[0].c, rat(1, 1));
        assert_eq!(roots[0].ramification, 1);
    }

    #[test]
    fn initials_for_scaled_sqrt_both_weights() {
        let p = scaled_sqrt_poly();
        // omega = (1,2): slope -1/2.
        let roots = newton_polygon_initials(&p, &rv(&[1, 2])).unwrap();
        assert_eq!(roots.len(), 2);
        for r in &roots {
            assert_eq!(r.t, rat(-1, 2));
            assert_eq!(r.ramification, 2);
        }
        // omega = (2,1): t = 0, c = ±1.
        let roots = newton_polygon_initials(&p, &rv(&[2, 1])).unwrap();
        assert_eq!(roots.len(), 2);
        for r in &roots {
            assert_eq!(r.t, rat(0, 1));
            assert_eq!(r.alpha, RationalVector::from_i64(&[0, 0]));
            assert_eq!(r.ramification, 1);
        }
    }

    #[test]
    fn lift_identity_root() {
        // P = T - x1 lifts to exactly x1.
        let p = PolyOverSeries::new(alloc::vec![
            mono(2, &[1, 0], rat(-1, 1)),
            mono(2, &[0, 0], rat(1, 1)),
        ])
        .unwrap();
        let omega = rv(&[1, 2]);
        let initial = newton_polygon_initials(&p, &omega).unwrap().remove(0);
        let o = crate::orders::refine_over_cone(&omega, &Cone::first_orthant(2)).unwrap();
        let lift = hensel_lift(&p, &initial, &o, &omega, &rat(5, 1)).unwrap();
        assert_eq!(lift.value.coefficients().len(), 1);
        assert_eq!(lift.value.coeff(&lv(&[1, 0])), rat(1, 1));
        let res = p.eval(&lift.value, &omega, &rat(5, 1)).unwrap();
        assert!(res.is_zero_value());
    }

    #[test]
    fn lift_sqrt_matches_binomial_oracle() {
        let p = sqrt_poly();
        let omega = rv(&[1, 2]);
        let roots = newton_polygon_initials(&p, &omega).unwrap();
        let plus = roots.iter().find(|r| r.c == rat(1, 1)).unwrap();
        let o = crate::orders::refine_over_cone(&omega, &Cone::first_orthant(2)).unwrap();
        let d = rat(8, 1);
        let lift = hensel_lift(&p, plus, &o, &omega, &d).unwrap();

        // Residual valuation beyond the horizon.
        let res = p.eval(&lift.value, &omega, &d).unwrap();
        assert!(res.is_zero_value());

        // Coefficients along alpha + j(-1,1) (stored scale: (1,0)+j(-2,2))
        // match the sqrt(1+U) Taylor oracle.
        let q = kernel::BiPoly::from_y_coeffs(alloc::vec![
            UniPoly::from_integers(&[-1, -1]),
            UniPoly::zero(),
            UniPoly::one(),
        ]);
        let oracle = kernel::taylor_of_algebraic(&q, &rat(1, 1), 7).unwrap();
        for (j, expected) in oracle.iter().enumerate() {
            let e = lv(&[1 - 2 * j as i64, 2 * j as i64]);
            assert_eq!(lift.value.coeff(&e), *expected, "coefficient {j}");
        }
        // Support cone is the predicted ray direction.
        assert!(lift.cone.generators().contains(&lv(&[-1, 1])));
        assert!(lift
            .value
            .support()
            .contains_stored(&lv(&[1 - 14, 14]))
            .unwrap());
    }

    #[test]
    fn lift_conjugates_cancel() {
        let p = sqrt_poly();
        let omega = rv(&[1, 2]);
        let roots = newton_polygon_initials(&p, &omega).unwrap();
        let o = crate::orders::refine_over_cone(&omega, &Cone::first_orthant(2)).unwrap();
        let d = rat(6, 1);
        let lifts: Vec<_> = roots
            .iter()
            .map(|r| hensel_lift(&p, r, &o, &omega, &d).unwrap())
            .collect();
        let sum = lifts[0]
            .value
            .combine(&lifts[1].value, CombineOp::Add, &omega, &rat(5, 1))
            .unwrap();
        assert!(sum.is_zero_value());
    }

    #[test]
    fn lift_scaled_sqrt_at_unit_level() {
        // x2 T^2 = x1 + x2 at omega = (2,1): root 1 + (1/2)(x1/x2) - ...
        let p = scaled_sqrt_poly();
        let omega = rv(&[2, 1]);
        let roots = newton_polygon_initials(&p, &omega).unwrap();
        let plus = roots.iter().find(|r| r.c == rat(1, 1)).unwrap();
        let enclosing = Cone::from_i64(2, &[&[1, 0], &[0, 1], &[1, -1]]).unwrap();
        let o = crate::orders::refine_over_cone(&omega, &enclosing).unwrap();
        let d = rat(10, 1);
        let lift = hensel_lift(&p, plus, &o, &omega, &d).unwrap();
        let res = p.eval(&lift.value, &omega, &d).unwrap();
        assert!(res.is_zero_value());

        let q = kernel::BiPoly::from_y_coeffs(alloc::vec![
            UniPoly::from_integers(&[-1, -1]),
            UniPoly::zero(),
            UniPoly::one(),
        ]);
        let oracle = kernel::taylor_of_algebraic(&q, &rat(1, 1), 9).unwrap();
        for (m, expected) in oracle.iter().enumerate() {
            let e = lv(&[m as i64, -(m as i64)]);
            assert_eq!(lift.value.coeff(&e), *expected, "coefficient {m}");
        }
        assert!(lift.cone.generators().contains(&lv(&[1, -1])));
    }

    #[test]
    fn lift_rejects_multiple_root() {
        // P = T^2 - 2 x1 T + x1^2 = (T - x1)^2: double initial root.
        let p = PolyOverSeries::new(alloc::vec![
            mono(2, &[2, 0], rat(1, 1)),
            mono(2, &[1, 0], rat(-2, 1)),
            mono(2, &[0, 0], rat(1, 1)),
        ])
        .unwrap();
        let omega = rv(&[1, 2]);
        let roots = newton_polygon_initials(&p, &omega).unwrap();
        assert_eq!(roots.len(), 1);
        assert_eq!(roots[0].multiplicity, 2);
        let o = crate::orders::refine_over_cone(&omega, &Cone::first_orthant(2)).unwrap();
        assert_eq!(
            hensel_lift(&p, &roots[0], &o, &omega, &rat(4, 1)),
            Err(Error::NotSimpleRoot)
        );
    }
}
