//! Exact sparse Laurent series values over symbolic supports, truncated to
//! a weighted valuation horizon.
//!
//! A value stores finitely many exact coefficients (stored-scale exponents,
//! integral after multiplying by the ramification) together with a support
//! spec covering all present and potential exponents, and a known-region
//! marker: either exact everywhere (finite closed forms) or exact below a
//! weighted degree. Below the horizon, a missing exponent is a determined
//! zero; at or above it, nothing is claimed.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{Signed, ToPrimitive, Zero};

use crate::geometry::{LatticeVector, RationalVector};
use crate::kernel::{rat_int, Int, Rational};
use crate::support::{ray_index, RaySpec, SupportSpec, TailSpec};
use crate::{Error, Result};

/// Where a value's coefficients are exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KnownRegion {
    /// The stored coefficients are the whole series.
    Exact,
    /// Exact below `omega`-degree `degree` (true scale, strict).
    Below { omega: RationalVector, degree: Rational },
}

/// How far a value is known in a given weight direction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Horizon {
    Infinite,
    UpTo(Rational),
}

impl Horizon {
    fn min(self, other: Horizon) -> Horizon {
        match (self, other) {
            (Horizon::Infinite, h) | (h, Horizon::Infinite) => h,
            (Horizon::UpTo(a), Horizon::UpTo(b)) => Horizon::UpTo(a.min(b)),
        }
    }

    fn covers(&self, d: &Rational) -> bool {
        match self {
            Horizon::Infinite => true,
            Horizon::UpTo(h) => d <= h,
        }
    }

    fn plus(self, shift: &Rational) -> Horizon {
        match self {
            Horizon::Infinite => Horizon::Infinite,
            Horizon::UpTo(h) => Horizon::UpTo(h + shift),
        }
    }
}

/// If `a = c * b` with `c > 0`, returns `c`.
pub fn parallel(a: &RationalVector, b: &RationalVector) -> Option<Rational> {
    if a.dim() != b.dim() || a.is_zero() || b.is_zero() {
        return None;
    }
    let mut scale: Option<Rational> = None;
    for (x, y) in a.coords().iter().zip(b.coords()) {
        match (x.is_zero(), y.is_zero()) {
            (true, true) => continue,
            (false, false) => {
                let c = x / y;
                match &scale {
                    None => scale = Some(c),
                    Some(s) if *s == c => {}
                    _ => return None,
                }
            }
            _ => return None,
        }
    }
    scale.filter(Signed::is_positive)
}

/// Binary ring operations on series values.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CombineOp {
    Add,
    Multiply,
}

/// Coefficients of a value along a lattice ray.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RayPart {
    /// Dense coefficients `G(0), G(1), ...` up to the largest stored index.
    pub coeffs: Vec<Rational>,
    /// Indices `m < exact_upto` are determined (stored or zero); `None`
    /// means all of them are.
    pub exact_upto: Option<Int>,
    /// Whether the whole value lives on the ray `origin + Z>=0 * direction`.
    pub entirely_on_ray: bool,
}

/// An exact truncated Laurent series value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentSeriesValue {
    coefficients: BTreeMap<LatticeVector, Rational>,
    support: SupportSpec,
    known: KnownRegion,
}

impl LaurentSeriesValue {
    /// Validates: no zero coefficients, exponents inside the support spec,
    /// and no stored exponent at or above the known horizon.
    pub fn new(
        coefficients: BTreeMap<LatticeVector, Rational>,
        support: SupportSpec,
        known: KnownRegion,
    ) -> Result<LaurentSeriesValue> {
        for (alpha, c) in &coefficients {
            if alpha.dim() != support.dim() {
                return Err(Error::DimensionMismatch {
                    expected: support.dim(),
                    got: alpha.dim(),
                });
            }
            if c.is_zero() {
                return Err(Error::InvalidSeries("stored zero coefficient".into()));
            }
            if !support.contains_stored(alpha)? {
                return Err(Error::InvalidSeries(
                    "stored exponent outside the support spec".into(),
                ));
            }
            if let KnownRegion::Below { omega, degree } = &known {
                if support.level(alpha, omega) >= *degree {
                    return Err(Error::InvalidSeries(
                        "stored exponent at or above the known horizon".into(),
                    ));
                }
            }
        }
        Ok(LaurentSeriesValue { coefficients, support, known })
    }

    /// An exact finite sum of monomials (builds a point support).
    pub fn from_monomials(
        dim: usize,
        ramification: u32,
        terms: &[(LatticeVector, Rational)],
    ) -> Result<LaurentSeriesValue> {
        let mut map = BTreeMap::new();
        for (e, c) in terms {
            if c.is_zero() {
                continue;
            }
            let entry = map.entry(e.clone()).or_insert_with(|| rat_int(0));
            *entry = &*entry + c;
        }
        map.retain(|_, c: &mut Rational| !c.is_zero());
        let support = SupportSpec::new(
            dim,
            ramification,
            map.keys().cloned().collect(),
            Vec::new(),
            Vec::new(),
        )?;
        LaurentSeriesValue::new(map, support, KnownRegion::Exact)
    }

    pub fn zero(dim: usize) -> LaurentSeriesValue {
        LaurentSeriesValue {
            coefficients: BTreeMap::new(),
            support: SupportSpec::from_points(dim, Vec::new()).expect("empty spec"),
            known: KnownRegion::Exact,
        }
    }

    pub fn dim(&self) -> usize {
        self.support.dim()
    }

    pub fn ramification(&self) -> u32 {
        self.support.ramification()
    }

    pub fn coefficients(&self) -> &BTreeMap<LatticeVector, Rational> {
        &self.coefficients
    }

    pub fn support(&self) -> &SupportSpec {
        &self.support
    }

    pub fn known_region(&self) -> &KnownRegion {
        &self.known
    }

    pub fn is_zero_value(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn coeff(&self, alpha: &LatticeVector) -> Rational {
        self.coefficients
            .get(alpha)
            .cloned()
            .unwrap_or_else(|| rat_int(0))
    }

    pub fn negate(&self) -> LaurentSeriesValue {
        LaurentSeriesValue {
            coefficients: self
                .coefficients
                .iter()
                .map(|(e, c)| (e.clone(), -c))
                .collect(),
            support: self.support.clone(),
            known: self.known.clone(),
        }
    }

    /// How far this value is exact in the `omega` direction.
    pub fn horizon(&self, omega: &RationalVector) -> Result<Horizon> {
        match &self.known {
            KnownRegion::Exact => Ok(Horizon::Infinite),
            KnownRegion::Below { omega: w, degree } => match parallel(omega, w) {
                Some(c) => Ok(Horizon::UpTo(degree * &c)),
                None => Err(Error::HorizonExceedsKnowledge),
            },
        }
    }

    /// Rescales to a finer ramification (multiplying stored exponents).
    pub fn rescale(&self, ramification: u32) -> Result<LaurentSeriesValue> {
        let old = self.ramification();
        if ramification == old {
            return Ok(self.clone());
        }
        if ramification % old != 0 {
            return Err(Error::InvalidSeries(
                "new ramification must be a multiple of the old".into(),
            ));
        }
        let f = Int::from(ramification / old);
        let coefficients = self
            .coefficients
            .iter()
            .map(|(e, c)| (e.scale(&f), c.clone()))
            .collect();
        Ok(LaurentSeriesValue {
            coefficients,
            support: self.support.rescale(ramification)?,
            known: self.known.clone(),
        })
    }

    /// The weighted order: minimal `alpha . omega` over the support.
    ///
    /// Defined when the minimal stored term is inside the known region, or
    /// when it meets the symbolic minimum of the support spec.
    pub fn nu_omega(&self, omega: &RationalVector) -> Result<Rational> {
        let stored_min = self
            .coefficients
            .keys()
            .map(|e| self.support.level(e, omega))
            .min();
        let Some(stored_min) = stored_min else {
            return Err(Error::NoMinimum);
        };
        match &self.known {
            KnownRegion::Exact => Ok(stored_min),
            KnownRegion::Below { .. } => {
                if let Ok(h) = self.horizon(omega) {
                    if match &h {
                        Horizon::Infinite => true,
                        Horizon::UpTo(d) => stored_min < *d,
                    } {
                        return Ok(stored_min);
                    }
                }
                match self.support.nu_min(omega) {
                    Ok(spec_min) if spec_min == stored_min => Ok(stored_min),
                    _ => Err(Error::NoMinimum),
                }
            }
        }
    }

    /// The sub-value at the minimal `omega`-level. Whole components at the
    /// level stay symbolic (the result can be an infinite ray); single
    /// at-level slots must be determined, else `LevelNotFullyKnown`.
    pub fn initial_part(&self, omega: &RationalVector) -> Result<LaurentSeriesValue> {
        let nu = self.nu_omega(omega)?;
        let ram = self.ramification();
        let ram_q = rat_int(i64::from(ram));
        let nu_stored = &nu * &ram_q;

        let determined = |level: &Rational| -> bool {
            match &self.known {
                KnownRegion::Exact => true,
                KnownRegion::Below { .. } => match self.horizon(omega) {
                    Ok(h) => matches!(h, Horizon::Infinite) || {
                        let Horizon::UpTo(d) = h else { unreachable!() };
                        *level < d
                    },
                    Err(_) => false,
                },
            }
        };

        let mut points: Vec<LatticeVector> = Vec::new();
        let mut rays: Vec<RaySpec> = Vec::new();
        let mut tails: Vec<TailSpec> = Vec::new();

        for p in self.support.points() {
            let level = omega.dot_lattice(p);
            if level != nu_stored {
                continue;
            }
            if self.coefficients.contains_key(p) {
                points.push(p.clone());
            } else if !determined(&self.support.level(p, omega)) {
                return Err(Error::LevelNotFullyKnown);
            }
        }
        for r in self.support.rays() {
            let step = omega.dot_lattice(&r.direction);
            let base = omega.dot_lattice(&r.origin);
            if step.is_zero() {
                if base == nu_stored {
                    rays.push(r.clone());
                }
                continue;
            }
            // At most one index sits at the level.
            let j = (&nu_stored - &base) / &step;
            if !j.is_integer() || j.is_negative() {
                continue;
            }
            let j = j.to_integer();
            if !r.indices.contains(&j) {
                continue;
            }
            let hit = r.origin.add(&r.direction.scale(&j));
            if self.coefficients.contains_key(&hit) {
                points.push(hit);
            } else if !determined(&nu) {
                return Err(Error::LevelNotFullyKnown);
            }
        }
        for t in self.support.tails() {
            let base = omega.dot_lattice(&t.origin);
            if base != nu_stored {
                continue;
            }
            // The at-level part of the tail is its face orthogonal to omega.
            let normal = omega.to_primitive_lattice();
            let face = t.cone.intersect_hyperplane(&normal)?;
            if face.is_trivial() {
                if self.coefficients.contains_key(&t.origin) {
                    points.push(t.origin.clone());
                } else if !determined(&nu) {
                    return Err(Error::LevelNotFullyKnown);
                }
            } else {
                tails.push(TailSpec { origin: t.origin.clone(), cone: face });
            }
        }

        let coefficients: BTreeMap<LatticeVector, Rational> = self
            .coefficients
            .iter()
            .filter(|(e, _)| omega.dot_lattice(e) == nu_stored)
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        let support = SupportSpec::new(self.dim(), ram, points, rays, tails)?;
        LaurentSeriesValue::new(coefficients, support, self.known.clone())
    }

    /// Coefficient sequence along `origin + m * direction`, `m >= 0`.
    /// Off-ray terms are ignored; the flag reports whether the whole value
    /// sits on the ray.
    pub fn ray_part(&self, origin: &LatticeVector, direction: &LatticeVector) -> RayPart {
        let direction = direction.primitive();
        let mut on_ray: BTreeMap<Int, Rational> = BTreeMap::new();
        let mut all_on_ray = true;
        for (e, c) in &self.coefficients {
            match ray_index(&e.sub(origin), &direction) {
                Some(j) => {
                    on_ray.insert(j, c.clone());
                }
                None => all_on_ray = false,
            }
        }
        // Structural check on the symbolic support.
        for r in self.support.rays() {
            if r.direction != direction || ray_index(&r.origin.sub(origin), &direction).is_none()
            {
                all_on_ray = false;
            }
        }
        for p in self.support.points() {
            if ray_index(&p.sub(origin), &direction).is_none() {
                all_on_ray = false;
            }
        }
        if !self.support.tails().is_empty() {
            all_on_ray = false;
        }

        let max_index = on_ray.keys().max().cloned().unwrap_or_else(Int::zero);
        let len = max_index
            .to_u64()
            .map(|v| v as usize + 1)
            .unwrap_or(0)
            .max(if on_ray.is_empty() { 0 } else { 1 });
        let mut coeffs = alloc::vec![rat_int(0); len];
        for (j, c) in &on_ray {
            if let Some(idx) = j.to_u64() {
                coeffs[idx as usize] = c.clone();
            }
        }
        let exact_upto = match &self.known {
            KnownRegion::Exact => None,
            KnownRegion::Below { omega, degree } => {
                let step = omega.dot_lattice(&direction);
                let base = omega.dot_lattice(origin);
                let ram = rat_int(i64::from(self.ramification()));
                if step.is_positive() {
                    // level(origin + m v) < degree  <=>  m < bound
                    let bound = (degree * &ram - &base) / &step;
                    Some(bound.ceil().to_integer().max(Int::zero()))
                } else {
                    Some(Int::zero())
                }
            }
        };
        RayPart { coeffs, exact_upto, entirely_on_ray: all_on_ray }
    }

    /// Exact ring operation below the horizon `d` in the `omega` grading.
    pub fn combine(
        &self,
        other: &LaurentSeriesValue,
        op: CombineOp,
        omega: &RationalVector,
        d: &Rational,
    ) -> Result<LaurentSeriesValue> {
        let ram = num_integer::lcm(
            Int::from(self.ramification()),
            Int::from(other.ramification()),
        );
        let ram = num_traits::ToPrimitive::to_u32(&ram)
            .ok_or_else(|| Error::InvalidSeries("ramification overflow".into()))?;
        let f = self.rescale(ram)?;
        let g = other.rescale(ram)?;
        let hf = f.horizon(omega)?;
        let hg = g.horizon(omega)?;
        let both_exact = matches!(
            (&f.known, &g.known),
            (KnownRegion::Exact, KnownRegion::Exact)
        );

        let (map, support, reach) = match op {
            CombineOp::Add => {
                let reach = hf.min(hg);
                if !reach.covers(d) {
                    return Err(Error::HorizonExceedsKnowledge);
                }
                let mut map = f.coefficients.clone();
                for (e, c) in &g.coefficients {
                    let entry = map.entry(e.clone()).or_insert_with(|| rat_int(0));
                    *entry = &*entry + c;
                }
                map.retain(|_, c| !c.is_zero());
                (map, f.support.union(&g.support)?, reach)
            }
            CombineOp::Multiply => {
                // A value with no stored terms that is exact is the zero
                // series; one that is only known below a horizon is zero
                // there, and its lowest possible term sits at the horizon.
                if f.is_zero_value() && matches!(f.known, KnownRegion::Exact) {
                    return Ok(LaurentSeriesValue::zero(self.dim()));
                }
                if g.is_zero_value() && matches!(g.known, KnownRegion::Exact) {
                    return Ok(LaurentSeriesValue::zero(self.dim()));
                }
                let nu_f = match f.nu_omega(omega) {
                    Ok(v) => v,
                    Err(Error::NoMinimum) if f.is_zero_value() => match &hf {
                        Horizon::UpTo(h) => h.clone(),
                        Horizon::Infinite => unreachable!("exact zero handled above"),
                    },
                    Err(e) => return Err(e),
                };
                let nu_g = match g.nu_omega(omega) {
                    Ok(v) => v,
                    Err(Error::NoMinimum) if g.is_zero_value() => match &hg {
                        Horizon::UpTo(h) => h.clone(),
                        Horizon::Infinite => unreachable!("exact zero handled above"),
                    },
                    Err(e) => return Err(e),
                };
                let reach = hf.plus(&nu_g).min(hg.plus(&nu_f));
                if !reach.covers(d) {
                    return Err(Error::HorizonExceedsKnowledge);
                }
                let mut map: BTreeMap<LatticeVector, Rational> = BTreeMap::new();
                for (e1, c1) in &f.coefficients {
                    for (e2, c2) in &g.coefficients {
                        let e = e1.add(e2);
                        let entry = map.entry(e).or_insert_with(|| rat_int(0));
                        *entry = &*entry + &(c1 * c2);
                    }
                }
                map.retain(|_, c| !c.is_zero());
                (map, f.support.minkowski(&g.support)?, reach)
            }
        };

        if both_exact && matches!(reach, Horizon::Infinite) {
            LaurentSeriesValue::new(map, support, KnownRegion::Exact)
        } else {
            let mut map = map;
            map.retain(|e, _| support.level(e, omega) < *d);
            LaurentSeriesValue::new(
                map,
                support,
                KnownRegion::Below { omega: omega.clone(), degree: d.clone() },
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rat;
    use crate::support::IndexSet;

    fn lv(v: &[i64]) -> LatticeVector {
        LatticeVector::from_i64(v)
    }

    fn rv(v: &[i64]) -> RationalVector {
        RationalVector::from_i64(v)
    }

    fn mono(e: &[i64]) -> LaurentSeriesValue {
        LaurentSeriesValue::from_monomials(2, 1, &[(lv(e), rat(1, 1))]).unwrap()
    }

    #[test]
    fn nu_of_monomials_and_sums() {
        let m = mono(&[2, 1]);
        assert_eq!(m.nu_omega(&rv(&[1, 3])).unwrap(), rat(5, 1));

        let s = LaurentSeriesValue::from_monomials(
            2,
            1,
            &[(lv(&[1, 0]), rat(1, 1)), (lv(&[0, 1]), rat(1, 1))],
        )
        .unwrap();
        assert_eq!(s.nu_omega(&rv(&[1, 2])).unwrap(), rat(1, 1));
    }

    #[test]
    fn nu_with_factorial_prefix() {
        // Terms at (0,0) and (-1,1); omega = (1,2) gives levels 0 and 1.
        let spec = SupportSpec::new(
            2,
            1,
            alloc::vec![lv(&[0, 0])],
            alloc::vec![RaySpec {
                origin: lv(&[0, 0]),
                direction: lv(&[-1, 1]),
                indices: IndexSet::FactorialValues,
            }],
            Vec::new(),
        )
        .unwrap();
        let mut map = BTreeMap::new();
        map.insert(lv(&[0, 0]), rat(1, 1));
        map.insert(lv(&[-1, 1]), rat(1, 1));
        let f = LaurentSeriesValue::new(
            map,
            spec,
            KnownRegion::Below { omega: rv(&[1, 2]), degree: rat(10, 1) },
        )
        .unwrap();
        assert_eq!(f.nu_omega(&rv(&[1, 2])).unwrap(), rat(0, 1));
    }

    #[test]
    fn initial_part_examples() {
        let s = LaurentSeriesValue::from_monomials(
            2,
            1,
            &[(lv(&[1, 0]), rat(1, 1)), (lv(&[0, 1]), rat(1, 1))],
        )
        .unwrap();
        // omega = (1,1): both terms at level 1.
        let whole = s.initial_part(&rv(&[1, 1])).unwrap();
        assert_eq!(whole.coefficients().len(), 2);
        // omega = (1,2): only x1.
        let x1 = s.initial_part(&rv(&[1, 2])).unwrap();
        assert_eq!(x1.coefficients().len(), 1);
        assert_eq!(x1.coeff(&lv(&[1, 0])), rat(1, 1));

        // Idempotence.
        let again = x1.initial_part(&rv(&[1, 2])).unwrap();
        assert_eq!(again, x1);
    }

    #[test]
    fn initial_part_keeps_symbolic_level_rays() {
        // 1 + sum (x2/x1)^(i^2) known below (1,2)-degree 9.
        let squares = IndexSet::PolynomialValues(crate::kernel::UniPoly::from_integers(&[0, 0, 1]));
        let spec = SupportSpec::new(
            2,
            1,
            alloc::vec![lv(&[0, 0])],
            alloc::vec![RaySpec {
                origin: lv(&[0, 0]),
                direction: lv(&[-1, 1]),
                indices: squares,
            }],
            Vec::new(),
        )
        .unwrap();
        let mut map = BTreeMap::new();
        map.insert(lv(&[0, 0]), rat(1, 1));
        map.insert(lv(&[-1, 1]), rat(1, 1));
        map.insert(lv(&[-4, 4]), rat(1, 1));
        let f = LaurentSeriesValue::new(
            map,
            spec,
            KnownRegion::Below { omega: rv(&[1, 2]), degree: rat(9, 1) },
        )
        .unwrap();
        // Under (1,1) every support element has level 0: the initial part
        // is the entire series, ray kept symbolic.
        let init = f.initial_part(&rv(&[1, 1])).unwrap();
        assert_eq!(init.coefficients(), f.coefficients());
        assert_eq!(init.support().rays().len(), 1);
        // And In is idempotent.
        assert_eq!(init.initial_part(&rv(&[1, 1])).unwrap(), init);
    }

    #[test]
    fn ray_part_examples() {
        let f = LaurentSeriesValue::from_monomials(
            2,
            1,
            &[(lv(&[1, 0]), rat(1, 1)), (lv(&[0, 1]), rat(1, 1))],
        )
        .unwrap();
        let rp = f.ray_part(&lv(&[1, 0]), &lv(&[-1, 1]));
        assert_eq!(rp.coeffs, alloc::vec![rat(1, 1), rat(1, 1)]);
        assert!(rp.entirely_on_ray);
        assert_eq!(rp.exact_upto, None);

        let g = mono(&[2, 2]);
        let rp = g.ray_part(&lv(&[0, 0]), &lv(&[1, 1]));
        assert_eq!(rp.coeffs, alloc::vec![rat(0, 1), rat(0, 1), rat(1, 1)]);
    }

    #[test]
    fn combine_add_cancels_exactly() {
        let f = LaurentSeriesValue::from_monomials(
            2,
            1,
            &[(lv(&[1, 0]), rat(2, 1)), (lv(&[-1, 1]), rat(1, 2))],
        )
        .unwrap();
        let sum = f
            .combine(&f.negate(), CombineOp::Add, &rv(&[1, 2]), &rat(100, 1))
            .unwrap();
        assert!(sum.is_zero_value());
    }

    #[test]
    fn combine_multiply_polynomial_identity() {
        // (1 + u)(1 - u) = 1 - u^2 with u = x2/x1.
        let u = lv(&[-1, 1]);
        let one_plus = LaurentSeriesValue::from_monomials(
            2,
            1,
            &[(lv(&[0, 0]), rat(1, 1)), (u.clone(), rat(1, 1))],
        )
        .unwrap();
        let one_minus = LaurentSeriesValue::from_monomials(
            2,
            1,
            &[(lv(&[0, 0]), rat(1, 1)), (u.clone(), rat(-1, 1))],
        )
        .unwrap();
        let prod = one_plus
            .combine(&one_minus, CombineOp::Multiply, &rv(&[1, 2]), &rat(10, 1))
            .unwrap();
        assert_eq!(prod.coeff(&lv(&[0, 0])), rat(1, 1));
        assert_eq!(prod.coeff(&lv(&[-2, 2])), rat(-1, 1));
        assert_eq!(prod.coefficients().len(), 2);
        assert_eq!(*prod.known_region(), KnownRegion::Exact);
    }

    #[test]
    fn nu_additivity_on_products() {
        let f = LaurentSeriesValue::from_monomials(
            2,
            1,
            &[(lv(&[1, 0]), rat(3, 1)), (lv(&[0, 1]), rat(-2, 1))],
        )
        .unwrap();
        let g = LaurentSeriesValue::from_monomials(
            2,
            1,
            &[(lv(&[2, -1]), rat(1, 5)), (lv(&[0, 2]), rat(7, 1))],
        )
        .unwrap();
        let omega = rv(&[3, 2]);
        let prod = f
            .combine(&g, CombineOp::Multiply, &omega, &rat(1000, 1))
            .unwrap();
        assert_eq!(
            prod.nu_omega(&omega).unwrap(),
            f.nu_omega(&omega).unwrap() + g.nu_omega(&omega).unwrap()
        );
    }

    #[test]
    fn horizon_violations_are_rejected() {
        let f = LaurentSeriesValue::new(
            BTreeMap::from([(lv(&[1, 0]), rat(1, 1))]),
            SupportSpec::from_points(2, alloc::vec![lv(&[1, 0])]).unwrap(),
            KnownRegion::Below { omega: rv(&[1, 2]), degree: rat(5, 1) },
        )
        .unwrap();
        let g = mono(&[0, 0]);
        let err = f.combine(&g, CombineOp::Add, &rv(&[1, 2]), &rat(50, 1));
        assert_eq!(err, Err(Error::HorizonExceedsKnowledge));
        // Mismatched grading direction is also rejected.
        let err = f.combine(&g, CombineOp::Add, &rv(&[2, 1]), &rat(1, 1));
        assert_eq!(err, Err(Error::HorizonExceedsKnowledge));
    }

    #[test]
    fn stored_exponent_above_horizon_rejected() {
        let res = LaurentSeriesValue::new(
            BTreeMap::from([(lv(&[9, 0]), rat(1, 1))]),
            SupportSpec::from_points(2, alloc::vec![lv(&[9, 0])]).unwrap(),
            KnownRegion::Below { omega: rv(&[1, 1]), degree: rat(5, 1) },
        );
        assert!(matches!(res, Err(Error::InvalidSeries(_))));
    }
}
