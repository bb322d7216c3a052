//! Exact rational polyhedral cone operations: duals, strong convexity,
//! relative-interior membership, shifted-cone containment and separating
//! weight vectors.

mod cone;
mod fm;
mod vector;

use alloc::vec::Vec;

use num_traits::Signed;

pub use cone::{Cone, MAX_DUAL_DIM};
pub use fm::LinSystem;
pub use vector::{LatticeVector, RationalVector};

use crate::kernel::{self, rat_int, Int, Rational};
use crate::{Error, Result};

/// The dual cone (extreme rays plus a plus/minus lineality basis).
pub fn dual_cone(c: &Cone) -> Result<Cone> {
    c.dual()
}

/// True iff `c` contains no nontrivial linear subspace.
pub fn is_strongly_convex(c: &Cone) -> bool {
    c.is_strongly_convex()
}

/// True iff `omega` lies in the relative interior of the dual of `c`,
/// i.e. pairs strictly positively with every nonzero generator.
pub fn relint_dual_contains(c: &Cone, omega: &RationalVector) -> Result<bool> {
    if !c.is_strongly_convex() {
        return Err(Error::NotStronglyConvex);
    }
    if omega.dim() != c.ambient_dim() {
        return Err(Error::DimensionMismatch { expected: c.ambient_dim(), got: omega.dim() });
    }
    Ok(c.generators().iter().all(|u| omega.dot_lattice(u).is_positive()))
}

/// A vector `gamma` with `gamma1 - gamma` and `gamma2 - gamma` both inside
/// `c1 ∩ c2`, so `(gamma1 + c1) ∩ (gamma2 + c2) ⊂ gamma + c1 ∩ c2`.
///
/// Requires the intersection to be full dimensional. The output follows
/// one construction; it is not canonical.
pub fn shift_containment(
    gamma1: &LatticeVector,
    c1: &Cone,
    gamma2: &LatticeVector,
    c2: &Cone,
) -> Result<LatticeVector> {
    let n = c1.ambient_dim();
    let inter = c1.intersect(c2)?;
    if inter.dimension() != n {
        return Err(Error::IntersectionNotFullDimensional);
    }

    // Pick n linearly independent generators of the intersection.
    let mut chosen: Vec<&LatticeVector> = Vec::new();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for g in inter.generators() {
        let mut attempt = rows.clone();
        attempt.push(g.to_rational().coords().to_vec());
        if kernel::rank(&attempt) > rows.len() {
            rows = attempt;
            chosen.push(g);
            if chosen.len() == n {
                break;
            }
        }
    }
    debug_assert_eq!(chosen.len(), n);

    // Solve gamma1 - gamma2 = sum lambda_i w_i, then shift by the rounded-up
    // positive part: gamma = gamma1 - sum ceil(max(lambda_i, 0)) w_i.
    let delta = gamma1.sub(gamma2);
    let cols: Vec<Vec<Rational>> = (0..n)
        .map(|r| {
            chosen
                .iter()
                .map(|w| Rational::from_integer(w.coords()[r].clone()))
                .collect()
        })
        .collect();
    let rhs: Vec<Rational> = delta
        .coords()
        .iter()
        .map(|c| Rational::from_integer(c.clone()))
        .collect();
    let lambda = kernel::solve(&cols, &rhs).expect("independent generators span the space");

    let mut shift = LatticeVector::zeros(n);
    for (l, w) in lambda.iter().zip(&chosen) {
        if l.is_positive() {
            shift = shift.add(&w.scale(&l.ceil().to_integer()));
        }
    }
    Ok(gamma1.sub(&shift))
}

/// A weight vector strictly positive on `tau` with `0 < omega.v < -omega_j v_j`
/// for every coordinate `j` with `v_j < 0`.
///
/// `v` must be a vertex (extreme ray) of the strongly convex cone `tau`,
/// with at least one negative and one strictly positive coordinate. The
/// construction separates `tau` from the cone spanned by the vectors `v`
/// with one negative coordinate doubled, by exact Fourier–Motzkin search.
pub fn separating_omega(tau: &Cone, v: &LatticeVector) -> Result<RationalVector> {
    let n = tau.ambient_dim();
    if !tau.is_strongly_convex() {
        return Err(Error::NotStronglyConvex);
    }
    if v.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, got: v.dim() });
    }
    if !v.coords().iter().any(Signed::is_negative) {
        return Err(Error::NotAVertex(
            "v must have at least one negative coordinate".into(),
        ));
    }
    if !v.coords().iter().any(Signed::is_positive) {
        return Err(Error::NotAVertex(
            "v must have at least one positive coordinate".into(),
        ));
    }
    let vp = v.primitive();
    if !tau.generators().contains(&vp) {
        return Err(Error::NotAVertex("v is not an extreme ray of tau".into()));
    }

    let mut sys = LinSystem::new(n);
    for u in tau.generators() {
        sys.add_gt(u.to_rational().coords().to_vec(), rat_int(0));
    }
    for (j, vj) in v.coords().iter().enumerate() {
        if vj.is_negative() {
            // omega . v^(j) < 0 where v^(j) doubles the j-th coordinate.
            let mut coords: Vec<Int> = v.coords().to_vec();
            coords[j] = &coords[j] * Int::from(2);
            let doubled = LatticeVector::new(coords);
            sys.add_gt(doubled.neg().to_rational().coords().to_vec(), rat_int(0));
        }
    }
    let omega = RationalVector::new(sys.solve().ok_or(Error::NoSeparator)?);

    // The strict inequalities of the statement, checked exactly.
    let val = omega.dot_lattice(v);
    debug_assert!(val.is_positive());
    for (j, vj) in v.coords().iter().enumerate() {
        if vj.is_negative() {
            let bound = -(&omega.coords()[j] * Rational::from_integer(vj.clone()));
            debug_assert!(val < bound);
            let _ = bound;
        }
    }
    Ok(omega)
}

/// The cone generated by the union of the generator sets, canonicalized.
pub fn cone_join(c1: &Cone, c2: &Cone) -> Result<Cone> {
    let mut gens = c1.generators().to_vec();
    gens.extend_from_slice(c2.generators());
    Cone::new(c1.ambient_dim(), gens)
}

/// Independent membership route for tests and cross-checks: feasibility of
/// `sum lambda_i u_i = p`, `lambda >= 0` by Fourier–Motzkin elimination.
pub fn member_by_feasibility(gens: &[LatticeVector], p: &RationalVector) -> bool {
    let k = gens.len();
    if k == 0 {
        return p.is_zero();
    }
    let n = p.dim();
    let mut sys = LinSystem::new(k);
    for j in 0..k {
        let mut coeffs = alloc::vec![rat_int(0); k];
        coeffs[j] = rat_int(1);
        sys.add_ge(coeffs, rat_int(0));
    }
    for c in 0..n {
        let coeffs: Vec<Rational> = gens
            .iter()
            .map(|g| Rational::from_integer(g.coords()[c].clone()))
            .collect();
        sys.add_eq(coeffs, -p.coords()[c].clone());
    }
    sys.feasible()
}
