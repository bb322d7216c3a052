//! Verdict layer: gap refutation, Liouville refutation, and the
//! exponent-denominator Diophantine bound, all emitted as replayable
//! certificates with exact witnesses.
//!
//! A refutation is only produced from a symbolic argument (closed-form
//! unbounded gaps or ratios), never from sampling; the instantiated
//! witness rows are recomputable from the inputs alone.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::geometry::{LatticeVector, LinSystem, RationalVector};
use crate::kernel::{rat_int, Int, Rational};
use crate::support::{GapClass, IndexSet, SupportSpec, TauClass};
use crate::{Error, Result};

/// Verdicts a certificate can carry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    NotAlgebraicGap,
    NotAlgebraicLiouville,
    ConsistentToHorizon,
    DiophantineA1Holds,
    DiophantineA1Fails,
}

/// Which criterion produced the certificate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Criterion {
    Gap,
    Liouville,
    DiophantineA1,
}

/// The field a negative verdict speaks about: the gap criterion refutes
/// algebraicity over the power-series ring, the Liouville criterion over
/// the Laurent-series field.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConclusionField {
    PowerSeriesRing,
    LaurentSeriesField,
}

/// An instantiated pair of consecutive occupied levels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapSample {
    pub i: Int,
    pub k_i: Rational,
    pub k_next: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapWitness {
    /// Closed form of the level gaps, per infinite stream.
    pub gap_form: String,
    /// Three instantiated gaps from the leading stream (refutations only).
    pub gaps: Vec<GapSample>,
    /// Eventual gap bound (consistency verdicts only).
    pub bound: Option<Rational>,
    /// `sup A_omega` when the weight sits on the boundary.
    pub boundary_level: Option<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatioSample {
    /// Number of kept terms.
    pub n: usize,
    pub residual_nu: Rational,
    pub denominator_nu: Rational,
    pub ratio: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiouvilleWitness {
    pub ratio_form: String,
    pub ratios: Vec<RatioSample>,
    pub max_ratio: Option<Rational>,
    pub a_max: Rational,
    pub n_max: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiophBalance {
    /// `omega . v`, the level step along the ray.
    pub step: Rational,
    /// `sum over negative coordinates of -omega_j v_j`.
    pub neg_sum: Rational,
    /// Whether the nonzero-coefficient indices have bounded gaps.
    pub bounded_gaps: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiophDivergence {
    pub direction: LatticeVector,
    /// `(beta, b(beta))` along the divergent ray.
    pub samples: Vec<(LatticeVector, Rational)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiophWitness {
    pub beta_box: u32,
    pub b_guess: Option<Rational>,
    /// Largest `sup_g nu(xi - g/x^beta) - omega.beta` over the scanned box
    /// (the minimal valid `b` there).
    pub b_box: Option<Rational>,
    pub argmax_beta: Option<LatticeVector>,
    /// A bound valid for every `beta`, certified from the closed form.
    pub certified_bound: Option<Rational>,
    pub balance: DiophBalance,
    pub divergence: Option<DiophDivergence>,
    /// `(beta, b(beta))` rows achieving `b_box` (capped).
    pub scan: Vec<(LatticeVector, Rational)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Gap(GapWitness),
    Liouville(LiouvilleWitness),
    Dioph(DiophWitness),
}

/// A replayable verdict document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub verdict: Verdict,
    pub criterion: Criterion,
    pub conclusion_field: ConclusionField,
    pub omega: RationalVector,
    pub witness: Witness,
}

/// Gap analysis of a symbolic support against a strictly positive weight:
/// unbounded level gaps refute algebraicity over the power-series ring for
/// series outside the localized ring.
///
/// The decision is per index-set variant: polynomial values of degree at
/// least 2 and factorials have sublinear counting functions, so any union
/// of such streams keeps unbounded gaps; any stream with a bounded gap
/// class bounds the union's gaps. Cone tails carry no occupancy, so they
/// block refutation.
pub fn gap_certificate(spec: &SupportSpec, omega: &RationalVector) -> Result<Certificate> {
    if !omega.is_strictly_positive() {
        return Err(Error::NonPositiveOmega);
    }
    if spec.in_localized_ring() {
        return Err(Error::PreconditionLocalized);
    }
    let tau = spec.tau_classify(omega)?;
    let boundary_level = match &tau {
        TauClass::InTau0 => None,
        TauClass::Boundary(l) => Some(l.clone()),
        TauClass::InTau1 => {
            return Err(Error::Inconclusive(
                "every slab is infinite for this weight".into(),
            ))
        }
        TauClass::Unknown => {
            return Err(Error::Inconclusive("tail occupancy is unknown".into()))
        }
    };

    let ram = rat_int(i64::from(spec.ramification()));
    let mut bounded: Vec<(Rational, String)> = Vec::new();
    let mut unbounded: Vec<(&crate::support::RaySpec, Rational, String)> = Vec::new();
    for r in spec.rays() {
        if !r.indices.is_infinite() {
            continue;
        }
        let step = omega.dot_lattice(&r.direction) / &ram;
        if !step.is_positive() {
            // Zero-step rays are the boundary level; negative steps were
            // excluded by the tau classification.
            continue;
        }
        match r.indices.gap_class() {
            GapClass::BoundedBy(g) => {
                let level_gap = Rational::from_integer(g.clone()) * &step;
                bounded.push((
                    level_gap,
                    format!("index gaps bounded by {g}, level step {step}"),
                ));
            }
            GapClass::Unbounded => {
                let form = match &r.indices {
                    IndexSet::PolynomialValues(p) => {
                        let diff = &p.compose_shift(&rat_int(1)) - p;
                        format!("level gap at index m: ({diff}) * {step}")
                    }
                    IndexSet::FactorialValues => {
                        format!("level gap at index m: ((m+2)! - (m+1)!) * {step}")
                    }
                    _ => "unbounded index gaps".into(),
                };
                unbounded.push((r, step, form));
            }
            GapClass::FiniteSet => {}
        }
    }

    if let Some((level_gap, form)) = bounded.iter().min_by(|a, b| a.0.cmp(&b.0)) {
        // One bounded-gap stream bounds the gaps of the whole union.
        return Ok(Certificate {
            verdict: Verdict::ConsistentToHorizon,
            criterion: Criterion::Gap,
            conclusion_field: ConclusionField::PowerSeriesRing,
            omega: omega.clone(),
            witness: Witness::Gap(GapWitness {
                gap_form: form.clone(),
                gaps: Vec::new(),
                bound: Some(level_gap.clone()),
                boundary_level,
            }),
        });
    }

    if !spec.tails().is_empty() {
        return Err(Error::Inconclusive(
            "tail occupancy is unknown and no bounded stream dominates".into(),
        ));
    }

    if unbounded.is_empty() {
        // Only finitely many levels (finite rays, points, or a pure
        // boundary level): nothing for the criterion to refute.
        return Ok(Certificate {
            verdict: Verdict::ConsistentToHorizon,
            criterion: Criterion::Gap,
            conclusion_field: ConclusionField::PowerSeriesRing,
            omega: omega.clone(),
            witness: Witness::Gap(GapWitness {
                gap_form: "finitely many positive-step levels".into(),
                gaps: Vec::new(),
                bound: None,
                boundary_level,
            }),
        });
    }

    // All infinite positive-step streams are sublinear: the union has
    // unbounded gaps. Witness gaps instantiated from the leading stream.
    let (ray, step, form) = &unbounded[0];
    let base = omega.dot_lattice(&ray.origin) / &ram;
    let mut gaps = Vec::new();
    for i in 1..=3usize {
        let vi = ray.indices.nth(i).expect("infinite index set");
        let vnext = ray.indices.nth(i + 1).expect("infinite index set");
        gaps.push(GapSample {
            i: Int::from(i),
            k_i: &base + Rational::from_integer(vi) * step,
            k_next: &base + Rational::from_integer(vnext) * step,
        });
    }
    let mut gap_form = form.clone();
    for (_, _, other) in unbounded.iter().skip(1) {
        gap_form.push_str("; ");
        gap_form.push_str(other);
    }
    Ok(Certificate {
        verdict: Verdict::NotAlgebraicGap,
        criterion: Criterion::Gap,
        conclusion_field: ConclusionField::PowerSeriesRing,
        omega: omega.clone(),
        witness: Witness::Gap(GapWitness {
            gap_form,
            gaps,
            bound: None,
            boundary_level,
        }),
    })
}

/// Which coefficient indices of a ray series are nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NonzeroPredicate {
    /// Exactly the indices of the set.
    Indices(IndexSet),
    /// Only a finite prefix of nonzero flags is decidable.
    Prefix(Vec<bool>),
}

/// A series supported on a single lattice ray, `x^origin * F(x^direction)`,
/// with a decidable nonzero-coefficient predicate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RaySeries {
    pub dim: usize,
    pub ramification: u32,
    /// Stored scale (interpreted divided by the ramification).
    pub origin: LatticeVector,
    pub direction: LatticeVector,
    pub nonzero: NonzeroPredicate,
}

impl RaySeries {
    pub fn new(
        dim: usize,
        ramification: u32,
        origin: LatticeVector,
        direction: LatticeVector,
        nonzero: NonzeroPredicate,
    ) -> Result<RaySeries> {
        if ramification == 0 {
            return Err(Error::InvalidSupport("ramification must be >= 1".into()));
        }
        if origin.dim() != dim || direction.dim() != dim {
            return Err(Error::DimensionMismatch { expected: dim, got: origin.dim().max(direction.dim()) });
        }
        if direction.is_zero() || direction != direction.primitive() {
            return Err(Error::InvalidSupport("direction must be primitive".into()));
        }
        if let NonzeroPredicate::Indices(ix) = &nonzero {
            ix.validate()?;
        }
        Ok(RaySeries { dim, ramification, origin, direction, nonzero })
    }

    fn ram_q(&self) -> Rational {
        rat_int(i64::from(self.ramification))
    }

    /// The `j`-th nonzero index, when determined.
    fn nth_index(&self, j: usize) -> Option<Int> {
        match &self.nonzero {
            NonzeroPredicate::Indices(ix) => ix.nth(j),
            NonzeroPredicate::Prefix(flags) => flags
                .iter()
                .enumerate()
                .filter(|(_, f)| **f)
                .map(|(m, _)| Int::from(m))
                .nth(j),
        }
    }

    /// Least nonzero index strictly greater than `t`, when determined.
    fn first_index_above(&self, t: &Rational) -> Result<Int> {
        match &self.nonzero {
            NonzeroPredicate::Indices(ix) => {
                let count = ix.count_le(t);
                match count {
                    crate::support::CountLe::Exact(c) => {
                        let j = c.to_usize().ok_or_else(|| {
                            Error::Inconclusive("index overflow".into())
                        })?;
                        ix.nth(j).ok_or_else(|| {
                            Error::Inconclusive(
                                "index set exhausted or occupancy unknown".into(),
                            )
                        })
                    }
                    crate::support::CountLe::UpperBound(_) => Err(Error::Inconclusive(
                        "bounded-gap occupancy is unknown".into(),
                    )),
                }
            }
            NonzeroPredicate::Prefix(flags) => {
                let mut m = if t.is_negative() {
                    Int::zero()
                } else {
                    t.floor().to_integer() + Int::one()
                };
                loop {
                    let idx = m.to_usize().ok_or_else(|| {
                        Error::Inconclusive("index overflow".into())
                    })?;
                    if idx >= flags.len() {
                        return Err(Error::Inconclusive(
                            "prefix exhausted before a nonzero coefficient".into(),
                        ));
                    }
                    if flags[idx] {
                        return Ok(m);
                    }
                    m += Int::one();
                }
            }
        }
    }
}

/// Prefix-truncation Liouville analysis along a ray: the `N`-term prefix
/// is `f_N / g_N` with `g_N` the monomial clearing its denominators, and
/// the residual valuation is carried by the first omitted term. A provably
/// unbounded ratio sequence refutes algebraicity over the Laurent-series
/// field; factorial index growth is the unbounded case, every other
/// variant has `v_(N+1)/v_N -> 1`.
pub fn liouville_certificate(
    ray: &RaySeries,
    omega: &RationalVector,
    a_max: &Rational,
    n_max: usize,
) -> Result<Certificate> {
    let step = omega.dot_lattice(&ray.direction) / ray.ram_q();
    if !step.is_positive() {
        return Err(Error::NonpositiveStep);
    }
    if !ray.direction.coords().iter().any(Signed::is_negative) {
        return Err(Error::Inconclusive(
            "denominators do not grow along this ray".into(),
        ));
    }
    let indices = match &ray.nonzero {
        NonzeroPredicate::Indices(ix) => ix.clone(),
        NonzeroPredicate::Prefix(_) => {
            return Err(Error::Inconclusive(
                "residual valuations need a closed-form index set".into(),
            ))
        }
    };
    if matches!(indices, IndexSet::BoundedGapTail { .. }) {
        return Err(Error::Inconclusive(
            "bounded-gap occupancy is unknown".into(),
        ));
    }

    let ram = ray.ram_q();
    let gamma = &ray.origin;
    let v = &ray.direction;
    let first = indices.min_value();
    // Denominator exponent of the N-term prefix and the two valuations.
    let data = |n: usize| -> Option<RatioSample> {
        let last = indices.nth(n - 1)?;
        let next = indices.nth(n)?;
        let mut denom_nu = rat_int(0);
        for (c, (gc, vc)) in gamma.coords().iter().zip(v.coords()).enumerate() {
            // Most negative kept exponent in this coordinate.
            let worst = if vc.is_negative() {
                gc + &last * vc
            } else {
                gc + &first * vc
            };
            if worst.is_negative() {
                denom_nu = denom_nu + &omega.coords()[c] * Rational::from_integer(-worst) / &ram;
            }
        }
        let residual_nu =
            (omega.dot_lattice(gamma) + Rational::from_integer(next) * omega.dot_lattice(v))
                / &ram;
        if !denom_nu.is_positive() {
            return None;
        }
        let ratio = &residual_nu / &denom_nu;
        Some(RatioSample { n, residual_nu, denominator_nu: denom_nu, ratio })
    };

    let mut ratios = Vec::new();
    let mut max_ratio: Option<Rational> = None;
    for n in 1..=n_max {
        let Some(sample) = data(n) else { continue };
        if max_ratio.as_ref().map_or(true, |m| sample.ratio > *m) {
            max_ratio = Some(sample.ratio.clone());
        }
        if ratios.len() < 3 {
            ratios.push(sample);
        }
    }

    let unbounded = matches!(indices, IndexSet::FactorialValues);
    let (verdict, ratio_form) = if unbounded {
        (
            Verdict::NotAlgebraicLiouville,
            "ratio at N-term prefix: residual/denominator = v_(N+1)/v_N with factorial \
             indices, unbounded"
                .into(),
        )
    } else {
        (
            Verdict::ConsistentToHorizon,
            format!(
                "index ratio v_(N+1)/v_N is bounded for this index set; scanned N <= {n_max} \
                 against a_max = {a_max}"
            ),
        )
    };
    Ok(Certificate {
        verdict,
        criterion: Criterion::Liouville,
        conclusion_field: ConclusionField::LaurentSeriesField,
        omega: omega.clone(),
        witness: Witness::Liouville(LiouvilleWitness {
            ratio_form,
            ratios,
            max_ratio,
            a_max: a_max.clone(),
            n_max,
        }),
    })
}

/// Whether `m v + beta + gamma` leaves the first orthant, split by the
/// sign pattern of `v`: coordinates with `v_c = 0` block every index when
/// negative; positive coordinates block small indices; negative ones block
/// everything past a threshold.
struct BlockProfile {
    always: bool,
    small_bound: Option<Rational>,
    tail_threshold: Option<Rational>,
}

fn block_profile(ray: &RaySeries, beta: &LatticeVector) -> BlockProfile {
    let ram = Int::from(ray.ramification);
    let mut always = false;
    let mut small: Option<Rational> = None;
    let mut tail: Option<Rational> = None;
    for (c, vc) in ray.direction.coords().iter().enumerate() {
        let offset = &ray.origin.coords()[c] + &beta.coords()[c] * &ram;
        if vc.is_zero() {
            if offset.is_negative() {
                always = true;
            }
        } else if vc.is_positive() {
            // blocked for m < -offset / vc
            let t = Rational::new(-offset, vc.clone());
            if t.is_positive() && small.as_ref().map_or(true, |s| t > *s) {
                small = Some(t);
            }
        } else {
            // blocked for m > offset / (-vc)
            let t = Rational::new(offset, -vc.clone());
            if tail.as_ref().map_or(true, |s| t < *s) {
                tail = Some(t);
            }
        }
    }
    BlockProfile { always, small_bound: small, tail_threshold: tail }
}

/// The first nonzero index whose shifted exponent leaves the first
/// orthant.
fn blocked_index(ray: &RaySeries, beta: &LatticeVector) -> Result<Int> {
    let profile = block_profile(ray, beta);
    let first = ray
        .nth_index(0)
        .ok_or_else(|| Error::Inconclusive("empty coefficient sequence".into()))?;
    if profile.always {
        return Ok(first);
    }
    // Small blocks kick in below the bound, so only the least index can be
    // caught by them.
    if let Some(bound) = &profile.small_bound {
        if Rational::from_integer(first.clone()) < *bound {
            return Ok(first);
        }
    }
    match &profile.tail_threshold {
        Some(t) => ray.first_index_above(t),
        None => Err(Error::NoBlockedIndex),
    }
}

/// `sup over power series g of nu_omega(xi - g / x^beta)`, which is the
/// valuation of the first term that no power-series numerator can match:
/// `omega . (m0 v + gamma)` at the least nonzero `m0` with
/// `m0 v + beta + gamma` outside the first orthant.
pub fn dioph_sup_nu(
    ray: &RaySeries,
    beta: &LatticeVector,
    omega: &RationalVector,
) -> Result<Rational> {
    if beta.coords().iter().any(Signed::is_negative) {
        return Err(Error::InvalidSupport("beta must be nonnegative".into()));
    }
    let step = omega.dot_lattice(&ray.direction);
    if !step.is_positive() {
        return Err(Error::NonpositiveStep);
    }
    let m0 = blocked_index(ray, beta)?;
    Ok((omega.dot_lattice(&ray.origin) + Rational::from_integer(m0) * step) / ray.ram_q())
}

/// Scans `beta` over `[0, beta_box]^n` for the minimal valid additive
/// constant in `nu(xi - g/x^beta) <= omega.beta + b`, and certifies
/// boundedness for every `beta` from the closed form: bounded exactly when
/// `omega.v` does not exceed the negative-coordinate weight sum and the
/// coefficient indices have bounded gaps.
pub fn dioph_a1_scan(
    ray: &RaySeries,
    omega: &RationalVector,
    beta_box: u32,
    b_guess: Option<Rational>,
) -> Result<Certificate> {
    let n = ray.dim;
    let step_true = omega.dot_lattice(&ray.direction) / ray.ram_q();
    if !step_true.is_positive() {
        return Err(Error::NonpositiveStep);
    }
    if !ray.direction.coords().iter().any(Signed::is_negative) {
        return Err(Error::PreconditionLocalized);
    }

    let neg_sum: Rational = ray
        .direction
        .coords()
        .iter()
        .zip(omega.coords())
        .filter(|(vc, _)| vc.is_negative())
        .map(|(vc, wc)| wc * Rational::from_integer(-vc.clone()))
        .sum();
    let gap_class = match &ray.nonzero {
        NonzeroPredicate::Indices(ix) => ix.gap_class(),
        NonzeroPredicate::Prefix(_) => {
            return Err(Error::Inconclusive(
                "tail certification needs a closed-form index set".into(),
            ))
        }
    };
    let bounded_gaps = !matches!(gap_class, GapClass::Unbounded);
    let balance = DiophBalance {
        step: step_true.clone(),
        neg_sum: neg_sum.clone(),
        bounded_gaps,
    };

    // Box scan: exact b(beta) wherever a blocked index exists.
    let mut b_box: Option<Rational> = None;
    let mut argmax: Option<LatticeVector> = None;
    let mut best_rows: Vec<(LatticeVector, Rational)> = Vec::new();
    let mut cursor = alloc::vec![0i64; n];
    let boxed = i64::from(beta_box);
    'scan: loop {
        let beta = LatticeVector::from_i64(&cursor);
        match dioph_sup_nu(ray, &beta, omega) {
            Ok(sup) => {
                let b = sup - omega.dot_lattice(&beta);
                let better = b_box.as_ref().map_or(true, |m| b > *m);
                if better {
                    b_box = Some(b.clone());
                    argmax = Some(beta.clone());
                    best_rows.clear();
                }
                if b_box.as_ref() == Some(&b) && best_rows.len() < 16 {
                    best_rows.push((beta.clone(), b));
                }
            }
            Err(Error::NoBlockedIndex) => {}
            Err(e) => return Err(e),
        }
        for j in 0..n {
            if cursor[j] < boxed {
                cursor[j] += 1;
                continue 'scan;
            }
            cursor[j] = 0;
        }
        break;
    }

    let holds = step_true <= neg_sum && bounded_gaps;
    if holds {
        let certified = certified_tail_bound(ray, omega, &gap_class)
            .map(|t| match &b_box {
                Some(b) => t.max(b.clone()),
                None => t,
            });
        return Ok(Certificate {
            verdict: Verdict::DiophantineA1Holds,
            criterion: Criterion::DiophantineA1,
            conclusion_field: ConclusionField::LaurentSeriesField,
            omega: omega.clone(),
            witness: Witness::Dioph(DiophWitness {
                beta_box,
                b_guess,
                b_box,
                argmax_beta: argmax,
                certified_bound: certified,
                balance,
                divergence: None,
                scan: best_rows,
            }),
        });
    }

    // Divergent direction: equalized weight on the negative coordinates.
    let mut dir = alloc::vec![Int::zero(); n];
    for (c, vc) in ray.direction.coords().iter().enumerate() {
        if vc.is_negative() {
            dir[c] = -vc.clone();
        }
    }
    let direction = LatticeVector::new(dir);
    let mut samples = Vec::new();
    let mut lambda = Int::from(i64::from(beta_box) + 1);
    for _ in 0..3 {
        let beta = direction.scale(&lambda);
        if let Ok(sup) = dioph_sup_nu(ray, &beta, omega) {
            let b = sup - omega.dot_lattice(&beta);
            samples.push((beta, b));
        }
        lambda *= Int::from(4);
    }
    Ok(Certificate {
        verdict: Verdict::DiophantineA1Fails,
        criterion: Criterion::DiophantineA1,
        conclusion_field: ConclusionField::LaurentSeriesField,
        omega: omega.clone(),
        witness: Witness::Dioph(DiophWitness {
            beta_box,
            b_guess,
            b_box,
            argmax_beta: argmax,
            certified_bound: None,
            balance,
            divergence: Some(DiophDivergence { direction, samples }),
            scan: best_rows,
        }),
    })
}

/// A bound on `b(beta)` valid for every nonnegative `beta`, from the
/// piecewise-linear upper envelope
/// `step * min_c (gamma_c + beta_c)/(-v_c) + K - omega.beta`
/// maximized exactly by Fourier–Motzkin; `K` collects the index-gap slack
/// and the small-block escape.
fn certified_tail_bound(
    ray: &RaySeries,
    omega: &RationalVector,
    gap_class: &GapClass,
) -> Option<Rational> {
    let n = ray.dim;
    let ram = ray.ram_q();
    let step = omega.dot_lattice(&ray.direction) / &ram;
    let gap_slack = match gap_class {
        GapClass::BoundedBy(g) => Rational::from_integer(g.clone()),
        GapClass::FiniteSet => return None,
        GapClass::Unbounded => return None,
    };
    // Small blocks can only push past max(0, -gamma_c/v_c) for v_c > 0,
    // then at most one gap further.
    let mut small = rat_int(0);
    for (c, vc) in ray.direction.coords().iter().enumerate() {
        if vc.is_positive() {
            let t = Rational::new(-ray.origin.coords()[c].clone(), vc.clone());
            if t > small {
                small = t;
            }
        }
    }
    let first = match &ray.nonzero {
        NonzeroPredicate::Indices(ix) => Rational::from_integer(ix.min_value()),
        NonzeroPredicate::Prefix(_) => rat_int(0),
    };
    let k0 = (&small + &gap_slack + &gap_slack + rat_int(1) + first.abs()) * &step
        + omega.dot_lattice(&ray.origin) / &ram;

    // Maximize z subject to z <= step*(gamma_c/ram + beta_c)/(-v_c) + K
    //                             - omega.beta  for every negative c,
    // over beta >= 0.
    let mut sys = LinSystem::new(n + 1);
    for j in 0..n {
        let mut coeffs = alloc::vec![rat_int(0); n + 1];
        coeffs[j + 1] = rat_int(1);
        sys.add_ge(coeffs, rat_int(0));
    }
    for (c, vc) in ray.direction.coords().iter().enumerate() {
        if !vc.is_negative() {
            continue;
        }
        let inv = Rational::new(Int::one(), -vc.clone());
        let gamma_true = Rational::from_integer(ray.origin.coords()[c].clone()) / &ram;
        // -z + step*inv*beta_c - omega.beta + (step*inv*gamma_c + K) >= 0
        let mut coeffs = alloc::vec![rat_int(0); n + 1];
        coeffs[0] = rat_int(-1);
        for j in 0..n {
            coeffs[j + 1] = -omega.coords()[j].clone();
        }
        coeffs[c + 1] = &coeffs[c + 1] + &(&step * &inv);
        let constant = &step * &inv * &gamma_true + &k0;
        sys.add_ge(coeffs, constant);
    }
    sys.max_of_first()
}
