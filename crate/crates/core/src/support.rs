//! Symbolic support sets: finite points, lattice rays with index
//! sequences, and cone tails, with the support-side predicates (slab
//! counting, weight classification, field-family membership, order
//! minimum, localized-ring membership).
//!
//! Infinite supports are never materialized; every predicate is decided
//! per component with exact index-threshold arithmetic. Tail components
//! carry no occupancy information, so predicates over tails answer for the
//! worst case and report `Unknown` where the answer would depend on which
//! tail points actually occur.

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::geometry::{Cone, LatticeVector, RationalVector};
use crate::kernel::{rat_int, Int, Rational, UniPoly};
use crate::orders::VectorOrder;
use crate::{Error, Result};

/// Cauchy bound on the absolute value of the real roots:
/// `1 + max |a_i| / |a_d|`; zero for constants.
pub fn cauchy_root_bound(p: &UniPoly) -> Rational {
    let Some(d) = p.degree() else {
        return rat_int(0);
    };
    if d == 0 {
        return rat_int(0);
    }
    let lead = p.leading();
    let mut m = rat_int(0);
    for i in 0..d {
        let r = (p.coeff(i) / &lead).abs();
        if r > m {
            m = r;
        }
    }
    m + rat_int(1)
}

/// A symbolic subset of the nonnegative integers, listing the indices at
/// which a ray is occupied.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IndexSet {
    /// Every index.
    All,
    /// `start + j * step` for `j >= 0`.
    Arithmetic { start: Int, step: Int },
    /// The values `p(0) < p(1) < ...` of an integer-valued, strictly
    /// increasing polynomial.
    PolynomialValues(UniPoly),
    /// The factorials `{m! | m >= 1} = {1, 2, 6, 24, ...}`.
    FactorialValues,
    /// A finite, strictly increasing list.
    Explicit(Vec<Int>),
    /// An infinite set containing `from`, contained in `from..`, whose
    /// consecutive gaps are at most `max_gap`. Which indices actually occur
    /// is not specified.
    BoundedGapTail { from: Int, max_gap: Int },
}

/// How much an index-count query can say.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CountLe {
    Exact(Int),
    UpperBound(Int),
}

impl CountLe {
    pub fn bound(&self) -> &Int {
        match self {
            CountLe::Exact(b) | CountLe::UpperBound(b) => b,
        }
    }
}

/// Symbolic gap behavior of an index set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GapClass {
    /// Consecutive elements differ by at most this much.
    BoundedBy(Int),
    /// Gaps grow without bound (sublinear counting function).
    Unbounded,
    /// The set is finite.
    FiniteSet,
}

impl IndexSet {
    /// Validates the variant invariants.
    pub fn validate(&self) -> Result<()> {
        match self {
            IndexSet::All | IndexSet::FactorialValues => Ok(()),
            IndexSet::Arithmetic { start, step } => {
                if start.is_negative() {
                    return Err(Error::InvalidIndexSet("start must be >= 0".into()));
                }
                if *step < Int::one() {
                    return Err(Error::InvalidIndexSet("step must be >= 1".into()));
                }
                Ok(())
            }
            IndexSet::PolynomialValues(p) => {
                let d = p.degree().ok_or_else(|| zero_poly_err())?;
                if d == 0 {
                    return Err(Error::InvalidIndexSet(
                        "polynomial must be nonconstant".into(),
                    ));
                }
                // Integer-valued on Z iff integral at d+1 consecutive points.
                for j in 0..=d {
                    if !p.eval(&rat_int(j as i64)).is_integer() {
                        return Err(Error::InvalidIndexSet(
                            "polynomial is not integer-valued".into(),
                        ));
                    }
                }
                if p.eval(&rat_int(0)).is_negative() {
                    return Err(Error::InvalidIndexSet("p(0) must be >= 0".into()));
                }
                // Strictly increasing on Z>=0: the difference polynomial is
                // positive at 0..=ceil(cauchy bound) and has positive
                // leading coefficient, so it has no later sign change.
                let shifted = p.compose_shift(&rat_int(1));
                let diff = &shifted - p;
                if !diff.leading().is_positive() {
                    return Err(Error::InvalidIndexSet(
                        "polynomial is not increasing".into(),
                    ));
                }
                let bound = cauchy_root_bound(&diff).ceil().to_integer();
                let upper = bound.to_i64().unwrap_or(64).max(0);
                for j in 0..=upper {
                    if !p.eval(&rat_int(j + 1)).gt(&p.eval(&rat_int(j))) {
                        return Err(Error::InvalidIndexSet(
                            "polynomial is not strictly increasing".into(),
                        ));
                    }
                }
                Ok(())
            }
            IndexSet::Explicit(values) => {
                if values.is_empty() {
                    return Err(Error::InvalidIndexSet("empty explicit set".into()));
                }
                if values[0].is_negative() {
                    return Err(Error::InvalidIndexSet("indices must be >= 0".into()));
                }
                for w in values.windows(2) {
                    if w[0] >= w[1] {
                        return Err(Error::InvalidIndexSet(
                            "explicit indices must strictly increase".into(),
                        ));
                    }
                }
                Ok(())
            }
            IndexSet::BoundedGapTail { from, max_gap } => {
                if from.is_negative() {
                    return Err(Error::InvalidIndexSet("from must be >= 0".into()));
                }
                if *max_gap < Int::one() {
                    return Err(Error::InvalidIndexSet("max_gap must be >= 1".into()));
                }
                Ok(())
            }
        }
    }

    pub fn is_infinite(&self) -> bool {
        !matches!(self, IndexSet::Explicit(_))
    }

    /// The `j`-th element in increasing order, when determined.
    /// `BoundedGapTail` only determines its first element.
    pub fn nth(&self, j: usize) -> Option<Int> {
        match self {
            IndexSet::All => Some(Int::from(j)),
            IndexSet::Arithmetic { start, step } => Some(start + step * Int::from(j)),
            IndexSet::PolynomialValues(p) => {
                let v = p.eval(&rat_int(j as i64));
                debug_assert!(v.is_integer());
                Some(v.to_integer())
            }
            IndexSet::FactorialValues => {
                let mut f = Int::one();
                for i in 2..=(j as u64 + 1) {
                    f *= Int::from(i);
                }
                Some(f)
            }
            IndexSet::Explicit(values) => values.get(j).cloned(),
            IndexSet::BoundedGapTail { from, .. } => (j == 0).then(|| from.clone()),
        }
    }

    /// Smallest element. Defined for every variant (`BoundedGapTail`
    /// contains its `from`).
    pub fn min_value(&self) -> Int {
        match self {
            IndexSet::BoundedGapTail { from, .. } => from.clone(),
            other => other.nth(0).expect("nonempty index set"),
        }
    }

    /// Largest element of a finite set.
    pub fn max_value(&self) -> Option<Int> {
        match self {
            IndexSet::Explicit(values) => values.last().cloned(),
            _ => None,
        }
    }

    /// How many elements are `<= t`.
    pub fn count_le(&self, t: &Rational) -> CountLe {
        let floor = if t.is_negative() {
            return CountLe::Exact(Int::zero());
        } else {
            t.floor().to_integer()
        };
        match self {
            IndexSet::All => CountLe::Exact(floor + Int::one()),
            IndexSet::Arithmetic { start, step } => {
                if floor < *start {
                    CountLe::Exact(Int::zero())
                } else {
                    CountLe::Exact((floor - start) / step + Int::one())
                }
            }
            IndexSet::PolynomialValues(p) => {
                // Exponential search then bisection on the increasing values.
                let tv = t.clone();
                if p.eval(&rat_int(0)) > tv {
                    return CountLe::Exact(Int::zero());
                }
                let mut hi = Int::one();
                while p.eval(&Rational::from_integer(hi.clone())) <= tv {
                    hi = &hi * Int::from(2);
                }
                let mut lo = Int::zero();
                // Invariant: p(lo) <= t < p(hi).
                while &hi - &lo > Int::one() {
                    let mid: Int = (&hi + &lo) / Int::from(2);
                    if p.eval(&Rational::from_integer(mid.clone())) <= tv {
                        lo = mid;
                    } else {
                        hi = mid;
                    }
                }
                CountLe::Exact(lo + Int::one())
            }
            IndexSet::FactorialValues => {
                let mut count = Int::zero();
                let mut m = Int::from(2);
                let mut f = Int::one(); // 1!
                while Rational::from_integer(f.clone()) <= *t {
                    count += Int::one();
                    f *= m.clone();
                    m += Int::one();
                }
                CountLe::Exact(count)
            }
            IndexSet::Explicit(values) => CountLe::Exact(Int::from(
                values
                    .iter()
                    .filter(|v| Rational::from_integer((*v).clone()) <= *t)
                    .count(),
            )),
            IndexSet::BoundedGapTail { from, .. } => {
                if floor < *from {
                    CountLe::Exact(Int::zero())
                } else {
                    CountLe::UpperBound(floor - from + Int::one())
                }
            }
        }
    }

    /// How many elements are `>= t` (exact only for finite sets).
    fn count_ge_finite(&self, t: &Rational) -> Option<Int> {
        match self {
            IndexSet::Explicit(values) => Some(Int::from(
                values
                    .iter()
                    .filter(|v| Rational::from_integer((*v).clone()) >= *t)
                    .count(),
            )),
            _ => None,
        }
    }

    /// Symbolic gap behavior.
    pub fn gap_class(&self) -> GapClass {
        match self {
            IndexSet::All => GapClass::BoundedBy(Int::one()),
            IndexSet::Arithmetic { step, .. } => GapClass::BoundedBy(step.clone()),
            IndexSet::PolynomialValues(p) => {
                if p.degree() == Some(1) {
                    GapClass::BoundedBy(p.leading().ceil().to_integer())
                } else {
                    GapClass::Unbounded
                }
            }
            IndexSet::FactorialValues => GapClass::Unbounded,
            IndexSet::Explicit(_) => GapClass::FiniteSet,
            IndexSet::BoundedGapTail { max_gap, .. } => GapClass::BoundedBy(max_gap.clone()),
        }
    }

    /// Whether `j` is (possibly) a member. Exact for every variant except
    /// `BoundedGapTail`, which answers "possibly" for any `j` in its range.
    pub fn contains(&self, j: &Int) -> bool {
        if j.is_negative() {
            return false;
        }
        match self {
            IndexSet::All => true,
            IndexSet::Arithmetic { start, step } => {
                j >= start && ((j - start) % step).is_zero()
            }
            IndexSet::PolynomialValues(_) => {
                let t = Rational::from_integer(j.clone());
                // j is a value iff the count at j exceeds the count below j.
                let at = self.count_le(&t);
                let below = self.count_le(&(t - rat_int(1)));
                at.bound() > below.bound()
            }
            IndexSet::FactorialValues => {
                let mut f = Int::one();
                let mut m = Int::from(2);
                while f < *j {
                    f *= m.clone();
                    m += Int::one();
                }
                f == *j
            }
            IndexSet::Explicit(values) => values.binary_search(j).is_ok(),
            IndexSet::BoundedGapTail { from, .. } => j >= from,
        }
    }
}

fn zero_poly_err() -> Error {
    Error::InvalidIndexSet("zero polynomial".into())
}

/// A lattice ray `origin + j * direction` for `j` in an index set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RaySpec {
    pub origin: LatticeVector,
    pub direction: LatticeVector,
    pub indices: IndexSet,
}

/// A shifted cone region `origin + cone`, with unknown occupancy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TailSpec {
    pub origin: LatticeVector,
    pub cone: Cone,
}

/// A symbolic description of a (possibly infinite) subset of the scaled
/// lattice `(1/ramification) Z^n`: stored coordinates are integral and are
/// interpreted divided by the ramification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportSpec {
    dim: usize,
    ramification: u32,
    points: Vec<LatticeVector>,
    rays: Vec<RaySpec>,
    tails: Vec<TailSpec>,
}

/// Result of a slab-count query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SlabCount {
    /// At most this many support elements in the slab (exact when no
    /// bounded-gap tail or cone tail contributes).
    Finite(Int),
    Infinite,
    Unknown,
}

/// Classification of a weight vector against a support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TauClass {
    /// Every slab meets the support finitely.
    InTau0,
    /// Every slab meets the support infinitely.
    InTau1,
    /// Slabs below the value are finite; the level set at the value is
    /// infinite. The payload is `sup A_omega`.
    Boundary(Rational),
    Unknown,
}

impl SupportSpec {
    pub fn new(
        dim: usize,
        ramification: u32,
        points: Vec<LatticeVector>,
        rays: Vec<RaySpec>,
        tails: Vec<TailSpec>,
    ) -> Result<SupportSpec> {
        if ramification == 0 {
            return Err(Error::InvalidSupport("ramification must be >= 1".into()));
        }
        for p in &points {
            check_dim(dim, p.dim())?;
        }
        for r in &rays {
            check_dim(dim, r.origin.dim())?;
            check_dim(dim, r.direction.dim())?;
            if r.direction.is_zero() {
                return Err(Error::InvalidSupport("zero ray direction".into()));
            }
            if r.direction != r.direction.primitive() {
                return Err(Error::InvalidSupport("ray direction must be primitive".into()));
            }
            r.indices.validate()?;
        }
        for t in &tails {
            check_dim(dim, t.origin.dim())?;
            check_dim(dim, t.cone.ambient_dim())?;
            if !t.cone.is_strongly_convex() {
                return Err(Error::InvalidSupport("tail cone must be strongly convex".into()));
            }
        }
        let mut points = points;
        points.sort();
        points.dedup();
        Ok(SupportSpec { dim, ramification, points, rays, tails })
    }

    /// A finite point set.
    pub fn from_points(dim: usize, points: Vec<LatticeVector>) -> Result<SupportSpec> {
        SupportSpec::new(dim, 1, points, Vec::new(), Vec::new())
    }

    /// A single ray.
    pub fn single_ray(
        dim: usize,
        origin: LatticeVector,
        direction: LatticeVector,
        indices: IndexSet,
    ) -> Result<SupportSpec> {
        SupportSpec::new(
            dim,
            1,
            Vec::new(),
            alloc::vec![RaySpec { origin, direction, indices }],
            Vec::new(),
        )
    }

    /// A single shifted cone tail.
    pub fn single_tail(dim: usize, origin: LatticeVector, cone: Cone) -> Result<SupportSpec> {
        SupportSpec::new(
            dim,
            1,
            Vec::new(),
            Vec::new(),
            alloc::vec![TailSpec { origin, cone }],
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ramification(&self) -> u32 {
        self.ramification
    }

    pub fn points(&self) -> &[LatticeVector] {
        &self.points
    }

    pub fn rays(&self) -> &[RaySpec] {
        &self.rays
    }

    pub fn tails(&self) -> &[TailSpec] {
        &self.tails
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty() && self.rays.is_empty() && self.tails.is_empty()
    }

    /// Returns a copy rescaled to a finer ramification (a multiple of the
    /// current one): stored coordinates are multiplied accordingly.
    pub fn rescale(&self, ramification: u32) -> Result<SupportSpec> {
        if ramification % self.ramification != 0 {
            return Err(Error::InvalidSupport(
                "new ramification must be a multiple of the old".into(),
            ));
        }
        let f = Int::from(ramification / self.ramification);
        if f.is_one() {
            return Ok(self.clone());
        }
        // Scaling a ray direction by f would make it imprimitive; fold the
        // factor into the index values instead when possible, otherwise
        // scale the direction and re-primitivize (f * v stays primitive only
        // for f = 1), so scale indices: (gamma + j v) * f = f gamma + (f j) v.
        let rays = self
            .rays
            .iter()
            .map(|r| -> Result<RaySpec> {
                let indices = match &r.indices {
                    IndexSet::All => IndexSet::Arithmetic { start: Int::zero(), step: f.clone() },
                    IndexSet::Arithmetic { start, step } => IndexSet::Arithmetic {
                        start: start * &f,
                        step: step * &f,
                    },
                    IndexSet::PolynomialValues(p) => IndexSet::PolynomialValues(
                        p.scale(&Rational::from_integer(f.clone())),
                    ),
                    IndexSet::FactorialValues => {
                        return Err(Error::InvalidSupport(
                            "cannot rescale a factorial index set".into(),
                        ))
                    }
                    IndexSet::Explicit(values) => {
                        IndexSet::Explicit(values.iter().map(|v| v * &f).collect())
                    }
                    IndexSet::BoundedGapTail { from, max_gap } => IndexSet::BoundedGapTail {
                        from: from * &f,
                        max_gap: max_gap * &f,
                    },
                };
                Ok(RaySpec {
                    origin: r.origin.scale(&f),
                    direction: r.direction.clone(),
                    indices,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        SupportSpec::new(
            self.dim,
            ramification,
            self.points.iter().map(|p| p.scale(&f)).collect(),
            rays,
            self.tails
                .iter()
                .map(|t| TailSpec { origin: t.origin.scale(&f), cone: t.cone.clone() })
                .collect(),
        )
    }

    /// True level (in the unscaled exponent lattice) of a stored vector.
    pub fn level(&self, stored: &LatticeVector, omega: &RationalVector) -> Rational {
        omega.dot_lattice(stored) / rat_int(i64::from(self.ramification))
    }

    /// Counts support elements with `alpha . omega <= k` (true scale).
    pub fn slab_count(&self, omega: &RationalVector, k: &Rational) -> SlabCount {
        let ram = rat_int(i64::from(self.ramification));
        let k_stored = k * &ram;
        let mut total = Int::zero();
        let mut unknown = false;

        for p in &self.points {
            if omega.dot_lattice(p) <= k_stored {
                total += Int::one();
            }
        }

        for r in &self.rays {
            let step = omega.dot_lattice(&r.direction);
            let base = omega.dot_lattice(&r.origin);
            let margin = &k_stored - &base;
            if step.is_positive() {
                // Bounded-gap tails only bound this from above; Finite
                // carries an upper bound by contract.
                let t = &margin / &step;
                total += r.indices.count_le(&t).bound();
            } else if step.is_zero() {
                if margin.is_negative() {
                    // Nothing in the slab.
                } else if r.indices.is_infinite() {
                    return SlabCount::Infinite;
                } else {
                    total += r.indices.count_le(&Rational::from_integer(
                        r.indices.max_value().expect("finite set"),
                    ))
                    .bound();
                }
            } else {
                // Levels decrease along the ray.
                if r.indices.is_infinite() {
                    return SlabCount::Infinite;
                }
                let t = &margin / &step; // flipped inequality: j >= t
                total += r
                    .indices
                    .count_ge_finite(&t)
                    .expect("finite index set");
            }
        }

        for t in &self.tails {
            let base = omega.dot_lattice(&t.origin);
            let margin = &k_stored - &base;
            let gens = t.cone.generators();
            let all_pos = gens.iter().all(|g| omega.dot_lattice(g).is_positive());
            let any_neg = gens.iter().any(|g| omega.dot_lattice(g).is_negative());
            if all_pos {
                if margin.is_negative() {
                    // Slab below the origin level: empty.
                } else {
                    total += count_tail_slab(&t.cone, omega, &margin);
                }
            } else if any_neg {
                // Worst case: occupied arbitrarily far down.
                return SlabCount::Infinite;
            } else {
                // omega on the boundary of the dual: the face has infinitely
                // many lattice points, occupancy unspecified.
                if margin.is_negative() {
                    // Still empty below the origin level.
                } else {
                    unknown = true;
                }
            }
        }

        if unknown {
            SlabCount::Unknown
        } else {
            SlabCount::Finite(total)
        }
    }

    /// Classifies `omega` against the support: every slab finite, every
    /// slab infinite, or boundary behavior at `sup A_omega`.
    pub fn tau_classify(&self, omega: &RationalVector) -> Result<TauClass> {
        if !omega.is_strictly_positive() {
            return Err(Error::NonPositiveOmega);
        }
        let ram = rat_int(i64::from(self.ramification));
        let mut boundary_levels: Vec<Rational> = Vec::new();
        let mut unknown_levels: Vec<Rational> = Vec::new();

        for r in &self.rays {
            if !r.indices.is_infinite() {
                continue;
            }
            let step = omega.dot_lattice(&r.direction);
            if step.is_negative() {
                return Ok(TauClass::InTau1);
            }
            if step.is_zero() {
                boundary_levels.push(omega.dot_lattice(&r.origin) / &ram);
            }
        }
        for t in &self.tails {
            let gens = t.cone.generators();
            let any_neg = gens.iter().any(|g| omega.dot_lattice(g).is_negative());
            let all_pos = gens.iter().all(|g| omega.dot_lattice(g).is_positive());
            if any_neg {
                return Ok(TauClass::InTau1);
            }
            if !all_pos {
                unknown_levels.push(omega.dot_lattice(&t.origin) / &ram);
            }
        }

        let lambda0 = boundary_levels.iter().min().cloned();
        match lambda0 {
            None => {
                if unknown_levels.is_empty() {
                    Ok(TauClass::InTau0)
                } else {
                    Ok(TauClass::Unknown)
                }
            }
            Some(l0) => {
                if unknown_levels.iter().any(|u| *u < l0) {
                    Ok(TauClass::Unknown)
                } else {
                    Ok(TauClass::Boundary(l0))
                }
            }
        }
    }

    /// True iff a single shifted `o`-non-negative rational cone contains
    /// the whole spec: the join of the tail cones, the ray directions and
    /// the first orthant must be `o`-non-negative (the shift then exists
    /// because the join is full dimensional).
    pub fn in_field_family(&self, o: &VectorOrder) -> Result<bool> {
        if !o.is_total() {
            return Err(Error::InvalidOrder("order must be total".into()));
        }
        let joined = self.enclosing_cone()?;
        Ok(o.cone_nonnegative(&joined))
    }

    /// The join of all tail cones, ray directions and the first orthant.
    pub fn enclosing_cone(&self) -> Result<Cone> {
        let mut gens: Vec<LatticeVector> = (0..self.dim)
            .map(|j| LatticeVector::unit(self.dim, j))
            .collect();
        for r in &self.rays {
            gens.push(r.direction.clone());
        }
        for t in &self.tails {
            gens.extend_from_slice(t.cone.generators());
        }
        Cone::new(self.dim, gens)
    }

    /// The `o`-minimal support element (stored scale). Rays attain their
    /// minimum at the least index since directions are `o`-positive inside
    /// a field family; tails are treated as occupied from their origin.
    pub fn min_support(&self, o: &VectorOrder) -> Result<LatticeVector> {
        if self.is_empty() {
            return Err(Error::EmptySupport);
        }
        if !self.in_field_family(o)? {
            return Err(Error::NotWellOrdered);
        }
        let mut best: Option<LatticeVector> = None;
        let mut consider = |cand: LatticeVector| -> Result<()> {
            match &best {
                None => best = Some(cand),
                Some(b) => {
                    if o.compare_lattice(&cand, b)? == Ordering::Less {
                        best = Some(cand);
                    }
                }
            }
            Ok(())
        };
        for p in &self.points {
            consider(p.clone())?;
        }
        for r in &self.rays {
            let j = r.indices.min_value();
            consider(r.origin.add(&r.direction.scale(&j)))?;
        }
        for t in &self.tails {
            consider(t.origin.clone())?;
        }
        Ok(best.expect("nonempty"))
    }

    /// True iff the spec is coordinatewise bounded below: all tail cones
    /// inside the first orthant and all infinite rays directed into it.
    pub fn in_localized_ring(&self) -> bool {
        let orthant_ok =
            |v: &LatticeVector| v.coords().iter().all(|c| !c.is_negative());
        for r in &self.rays {
            if r.indices.is_infinite() && !orthant_ok(&r.direction) {
                return false;
            }
        }
        for t in &self.tails {
            if !t.cone.generators().iter().all(&orthant_ok) {
                return false;
            }
        }
        true
    }

    /// Minimal possible `omega`-value over the spec (true scale), treating
    /// rays and tails as occupied.
    pub fn nu_min(&self, omega: &RationalVector) -> Result<Rational> {
        if self.is_empty() {
            return Err(Error::EmptySupport);
        }
        let ram = rat_int(i64::from(self.ramification));
        let mut best: Option<Rational> = None;
        let mut consider = |v: Rational| match &best {
            None => best = Some(v),
            Some(b) => {
                if v < *b {
                    best = Some(v);
                }
            }
        };
        for p in &self.points {
            consider(omega.dot_lattice(p) / &ram);
        }
        for r in &self.rays {
            let step = omega.dot_lattice(&r.direction);
            let base = omega.dot_lattice(&r.origin);
            if step.is_negative() && r.indices.is_infinite() {
                return Err(Error::NoMinimum);
            }
            let j = if step.is_negative() {
                r.indices.max_value().expect("finite")
            } else {
                r.indices.min_value()
            };
            consider((&base + &step * Rational::from_integer(j)) / &ram);
        }
        for t in &self.tails {
            let ok = t
                .cone
                .generators()
                .iter()
                .all(|g| !omega.dot_lattice(g).is_negative());
            if !ok {
                return Err(Error::NoMinimum);
            }
            consider(omega.dot_lattice(&t.origin) / &ram);
        }
        Ok(best.expect("nonempty"))
    }

    /// Whether a stored exponent can belong to this support. Exact for
    /// points and rays; tails and bounded-gap tails answer "possibly".
    pub fn contains_stored(&self, alpha: &LatticeVector) -> Result<bool> {
        if self.points.binary_search(alpha).is_ok() {
            return Ok(true);
        }
        for r in &self.rays {
            let delta = alpha.sub(&r.origin);
            if let Some(j) = ray_index(&delta, &r.direction) {
                if r.indices.contains(&j) {
                    return Ok(true);
                }
            }
        }
        for t in &self.tails {
            if t.cone.contains_lattice(&alpha.sub(&t.origin))? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Union of two specs over a common ramification.
    pub fn union(&self, other: &SupportSpec) -> Result<SupportSpec> {
        let ram = num_integer::lcm(
            Int::from(self.ramification),
            Int::from(other.ramification),
        );
        let ram = ram.to_u32().ok_or_else(|| {
            Error::InvalidSupport("ramification overflow".into())
        })?;
        let a = self.rescale(ram)?;
        let b = other.rescale(ram)?;
        let mut points = a.points;
        points.extend(b.points);
        let mut rays = a.rays;
        for r in b.rays {
            if !rays.contains(&r) {
                rays.push(r);
            }
        }
        let mut tails = a.tails;
        for t in b.tails {
            if !tails.contains(&t) {
                tails.push(t);
            }
        }
        SupportSpec::new(self.dim, ram, points, rays, tails)
    }

    /// Minkowski-sum over-approximation for series products.
    pub fn minkowski(&self, other: &SupportSpec) -> Result<SupportSpec> {
        let ram = num_integer::lcm(
            Int::from(self.ramification),
            Int::from(other.ramification),
        )
        .to_u32()
        .ok_or_else(|| Error::InvalidSupport("ramification overflow".into()))?;
        let a = self.rescale(ram)?;
        let b = other.rescale(ram)?;

        let mut points = Vec::new();
        let mut rays: Vec<RaySpec> = Vec::new();
        let mut tails: Vec<TailSpec> = Vec::new();

        for p in &a.points {
            for q in &b.points {
                points.push(p.add(q));
            }
        }
        // point + ray keeps the ray structure; any other mixed pair
        // over-approximates as a shifted cone.
        let mut push_tail = |origin: LatticeVector, cone: Cone| {
            tails.push(TailSpec { origin, cone });
        };
        for p in &a.points {
            for r in &b.rays {
                rays.push(RaySpec {
                    origin: r.origin.add(p),
                    direction: r.direction.clone(),
                    indices: r.indices.clone(),
                });
            }
        }
        for p in &b.points {
            for r in &a.rays {
                rays.push(RaySpec {
                    origin: r.origin.add(p),
                    direction: r.direction.clone(),
                    indices: r.indices.clone(),
                });
            }
        }
        for r in &a.rays {
            for s in &b.rays {
                let cone = Cone::new(
                    self.dim,
                    alloc::vec![r.direction.clone(), s.direction.clone()],
                )?;
                push_tail(r.origin.add(&s.origin), cone);
            }
        }
        for (pts, other_tails) in [(&a.points, &b.tails), (&b.points, &a.tails)] {
            for p in pts.iter() {
                for t in other_tails.iter() {
                    push_tail(t.origin.add(p), t.cone.clone());
                }
            }
        }
        for r in &a.rays {
            for t in &b.tails {
                let mut gens = t.cone.generators().to_vec();
                gens.push(r.direction.clone());
                push_tail(r.origin.add(&t.origin), Cone::new(self.dim, gens)?);
            }
        }
        for r in &b.rays {
            for t in &a.tails {
                let mut gens = t.cone.generators().to_vec();
                gens.push(r.direction.clone());
                push_tail(r.origin.add(&t.origin), Cone::new(self.dim, gens)?);
            }
        }
        for t in &a.tails {
            for u in &b.tails {
                let mut gens = t.cone.generators().to_vec();
                gens.extend_from_slice(u.cone.generators());
                push_tail(t.origin.add(&u.origin), Cone::new(self.dim, gens)?);
            }
        }
        SupportSpec::new(self.dim, ram, points, rays, tails)
    }
}

fn check_dim(expected: usize, got: usize) -> Result<()> {
    if expected != got {
        return Err(Error::DimensionMismatch { expected, got });
    }
    Ok(())
}

/// If `delta = j * direction` for an integer `j >= 0`, returns `j`.
pub fn ray_index(delta: &LatticeVector, direction: &LatticeVector) -> Option<Int> {
    let mut j: Option<Int> = None;
    for (d, v) in delta.coords().iter().zip(direction.coords()) {
        if v.is_zero() {
            if !d.is_zero() {
                return None;
            }
            continue;
        }
        let (q, r) = d.div_rem(v);
        if !r.is_zero() {
            return None;
        }
        match &j {
            None => j = Some(q),
            Some(prev) if *prev == q => {}
            _ => return None,
        }
    }
    match j {
        Some(q) if !q.is_negative() => Some(q),
        // delta = 0 on a nonzero direction means index 0.
        None => Some(Int::zero()),
        _ => None,
    }
}

/// Exact count of lattice points `c` in the cone with `omega . c <= margin`
/// (all pairings strictly positive on the generators, so the region is
/// bounded): enumerate a bounding box.
fn count_tail_slab(cone: &Cone, omega: &RationalVector, margin: &Rational) -> Int {
    let n = cone.ambient_dim();
    if margin.is_negative() {
        return Int::zero();
    }
    // Coordinates of region points are bounded by the extreme points
    // margin/(omega.g) * g of the slice.
    let mut lo = alloc::vec![Int::zero(); n];
    let mut hi = alloc::vec![Int::zero(); n];
    for g in cone.generators() {
        let scale = margin / omega.dot_lattice(g);
        for (j, c) in g.coords().iter().enumerate() {
            let extreme = &scale * Rational::from_integer(c.clone());
            let fl = extreme.floor().to_integer();
            let ce = extreme.ceil().to_integer();
            if fl < lo[j] {
                lo[j] = fl;
            }
            if ce > hi[j] {
                hi[j] = ce;
            }
        }
    }
    let mut count = Int::zero();
    let mut cursor: Vec<Int> = lo.clone();
    'outer: loop {
        let p = LatticeVector::new(cursor.clone());
        let level = omega.dot_lattice(&p);
        if level <= *margin && cone.contains_lattice(&p).unwrap_or(false) {
            count += Int::one();
        }
        // Advance the odometer.
        for j in 0..n {
            if cursor[j] < hi[j] {
                cursor[j] += Int::one();
                continue 'outer;
            }
            cursor[j] = lo[j].clone();
        }
        break;
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lv(v: &[i64]) -> LatticeVector {
        LatticeVector::from_i64(v)
    }

    fn rv(v: &[i64]) -> RationalVector {
        RationalVector::from_i64(v)
    }

    fn squares() -> IndexSet {
        IndexSet::PolynomialValues(UniPoly::from_integers(&[0, 0, 1]))
    }

    fn i2_ray() -> SupportSpec {
        SupportSpec::single_ray(2, lv(&[0, 0]), lv(&[-1, 1]), squares()).unwrap()
    }

    #[test]
    fn index_set_validation() {
        assert!(squares().validate().is_ok());
        // Decreasing polynomial rejected.
        let bad = IndexSet::PolynomialValues(UniPoly::from_integers(&[0, -1]));
        assert!(bad.validate().is_err());
        // Non-integer-valued rejected.
        let half = IndexSet::PolynomialValues(UniPoly::from_coeffs(alloc::vec![
            crate::kernel::rat(0, 1),
            crate::kernel::rat(1, 2),
        ]));
        assert!(half.validate().is_err());
        // x(x+1)/2 is integer-valued despite fractional coefficients.
        let tri = IndexSet::PolynomialValues(UniPoly::from_coeffs(alloc::vec![
            crate::kernel::rat(0, 1),
            crate::kernel::rat(1, 2),
            crate::kernel::rat(1, 2),
        ]));
        assert!(tri.validate().is_ok());
    }

    #[test]
    fn index_set_counts_and_values() {
        let s = squares();
        assert_eq!(s.count_le(&rat_int(100)), CountLe::Exact(Int::from(11)));
        assert_eq!(s.nth(3), Some(Int::from(9)));
        assert!(s.contains(&Int::from(16)));
        assert!(!s.contains(&Int::from(15)));

        let f = IndexSet::FactorialValues;
        assert_eq!(f.nth(0), Some(Int::from(1)));
        assert_eq!(f.nth(2), Some(Int::from(6)));
        assert_eq!(f.count_le(&rat_int(24)), CountLe::Exact(Int::from(4)));
        assert!(f.contains(&Int::from(120)));
        assert!(!f.contains(&Int::from(5)));
    }

    #[test]
    fn slab_examples_from_square_ray() {
        // omega = (1,2): step = 1, so i^2 <= 100 gives 11 points.
        let s = i2_ray();
        assert_eq!(
            s.slab_count(&rv(&[1, 2]), &rat_int(100)),
            SlabCount::Finite(Int::from(11))
        );
        // omega = (1,1): step = 0 and the index set is infinite.
        assert_eq!(s.slab_count(&rv(&[1, 1]), &rat_int(0)), SlabCount::Infinite);
        // Single point.
        let pt = SupportSpec::from_points(2, alloc::vec![lv(&[3, 4])]).unwrap();
        assert_eq!(
            pt.slab_count(&rv(&[1, 1]), &rat_int(100)),
            SlabCount::Finite(Int::from(1))
        );
    }

    #[test]
    fn tau_examples() {
        let tail = SupportSpec::single_tail(2, lv(&[0, 0]), Cone::first_orthant(2)).unwrap();
        assert_eq!(tail.tau_classify(&rv(&[1, 1])).unwrap(), TauClass::InTau0);

        let all_ray =
            SupportSpec::single_ray(2, lv(&[0, 0]), lv(&[-1, 1]), IndexSet::All).unwrap();
        assert_eq!(all_ray.tau_classify(&rv(&[1, 2])).unwrap(), TauClass::InTau0);
        assert_eq!(all_ray.tau_classify(&rv(&[2, 1])).unwrap(), TauClass::InTau1);

        let with_point = i2_ray()
            .union(&SupportSpec::from_points(2, alloc::vec![lv(&[0, 0])]).unwrap())
            .unwrap();
        assert_eq!(
            with_point.tau_classify(&rv(&[1, 1])).unwrap(),
            TauClass::Boundary(rat_int(0))
        );
    }

    #[test]
    fn field_family_examples() {
        let ray = SupportSpec::single_ray(2, lv(&[0, 0]), lv(&[1, -1]), IndexSet::All).unwrap();
        let o1 = VectorOrder::from_i64(&[&[2, 1], &[0, 1]]).unwrap();
        assert!(ray.in_field_family(&o1).unwrap());
        let o2 = VectorOrder::from_i64(&[&[1, 1], &[1, 0]]).unwrap();
        assert!(ray.in_field_family(&o2).unwrap());

        let opposite = ray
            .union(
                &SupportSpec::single_ray(2, lv(&[0, 0]), lv(&[-1, 1]), IndexSet::All).unwrap(),
            )
            .unwrap();
        for o in [&o1, &o2] {
            assert!(!opposite.in_field_family(o).unwrap());
        }
    }

    #[test]
    fn min_support_examples() {
        let pts = SupportSpec::from_points(2, alloc::vec![lv(&[0, 0]), lv(&[1, 0]), lv(&[0, 1])])
            .unwrap();
        let o = VectorOrder::from_i64(&[&[1, 2], &[1, 0]]).unwrap();
        assert_eq!(pts.min_support(&o).unwrap(), lv(&[0, 0]));

        let ray = SupportSpec::single_ray(
            2,
            lv(&[0, 0]),
            lv(&[1, -1]),
            IndexSet::Arithmetic { start: Int::one(), step: Int::one() },
        )
        .unwrap();
        let o = VectorOrder::from_i64(&[&[2, 1], &[0, 1]]).unwrap();
        assert_eq!(ray.min_support(&o).unwrap(), lv(&[1, -1]));

        let bad = SupportSpec::single_ray(2, lv(&[0, 0]), lv(&[-1, 1]), IndexSet::All)
            .unwrap()
            .union(&SupportSpec::single_ray(2, lv(&[0, 0]), lv(&[1, -1]), IndexSet::All).unwrap())
            .unwrap();
        let o_total = VectorOrder::from_i64(&[&[1, 1], &[1, 0]]).unwrap();
        assert_eq!(bad.min_support(&o_total), Err(Error::NotWellOrdered));

        let empty = SupportSpec::from_points(2, Vec::new()).unwrap();
        assert_eq!(empty.min_support(&o_total), Err(Error::EmptySupport));
    }

    #[test]
    fn localized_ring_examples() {
        assert!(!i2_ray().in_localized_ring());
        let pts =
            SupportSpec::from_points(2, alloc::vec![lv(&[-2, 1]), lv(&[3, -4])]).unwrap();
        assert!(pts.in_localized_ring());
        let tail = SupportSpec::single_tail(
            2,
            lv(&[0, 0]),
            Cone::from_i64(2, &[&[1, 0], &[-1, 1]]).unwrap(),
        )
        .unwrap();
        assert!(!tail.in_localized_ring());
    }

    #[test]
    fn tail_slab_count_is_exact() {
        let tail = SupportSpec::single_tail(2, lv(&[0, 0]), Cone::first_orthant(2)).unwrap();
        // Points of the orthant with x + y <= 3: C(5,2) = 10.
        assert_eq!(
            tail.slab_count(&rv(&[1, 1]), &rat_int(3)),
            SlabCount::Finite(Int::from(10))
        );
        // Boundary omega: unknown at/above the origin level, empty below.
        assert_eq!(tail.slab_count(&rv(&[1, 0]), &rat_int(5)), SlabCount::Unknown);
        assert_eq!(
            tail.slab_count(&rv(&[1, 0]), &crate::kernel::rat(-1, 1)),
            SlabCount::Finite(Int::zero())
        );
    }

    #[test]
    fn ray_index_solves_divisibility() {
        assert_eq!(ray_index(&lv(&[-3, 3]), &lv(&[-1, 1])), Some(Int::from(3)));
        assert_eq!(ray_index(&lv(&[-3, 2]), &lv(&[-1, 1])), None);
        assert_eq!(ray_index(&lv(&[3, -3]), &lv(&[-1, 1])), None);
        assert_eq!(ray_index(&lv(&[0, 0]), &lv(&[-1, 1])), Some(Int::zero()));
    }

    #[test]
    fn rescale_preserves_true_levels() {
        let s = i2_ray();
        let s2 = s.rescale(2).unwrap();
        assert_eq!(s2.ramification(), 2);
        let omega = rv(&[1, 2]);
        assert_eq!(
            s.slab_count(&omega, &rat_int(100)),
            s2.slab_count(&omega, &rat_int(100))
        );
    }
}
