//! Continuous preorders and orders on exponent space given by vector
//! sequences: lexicographic comparison of dot products, positivity, cone
//! compatibility, and the constructive refinement of a weight preorder to
//! a total order keeping a given cone non-negative.

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_traits::{Signed, Zero};

use crate::geometry::{Cone, LatticeVector, RationalVector};
use crate::kernel::{self, Rational};
use crate::{Error, Result};

/// The preorder on `R^n` comparing `p(a) = (a.u_1, ..., a.u_s)`
/// lexicographically; a total order when the vectors span `R^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorOrder {
    vectors: Vec<RationalVector>,
    total: bool,
}

impl VectorOrder {
    pub fn new(vectors: Vec<RationalVector>) -> Result<VectorOrder> {
        let Some(first) = vectors.first() else {
            return Err(Error::InvalidOrder("at least one vector required".into()));
        };
        let n = first.dim();
        if vectors.len() > n {
            return Err(Error::InvalidOrder("more vectors than the ambient dimension".into()));
        }
        for v in &vectors {
            if v.dim() != n {
                return Err(Error::DimensionMismatch { expected: n, got: v.dim() });
            }
            if v.is_zero() {
                return Err(Error::InvalidOrder("zero vector".into()));
            }
        }
        let matrix: Vec<Vec<Rational>> = vectors.iter().map(|v| v.coords().to_vec()).collect();
        let total = kernel::rank(&matrix) == n;
        Ok(VectorOrder { vectors, total })
    }

    pub fn from_i64(vectors: &[&[i64]]) -> Result<VectorOrder> {
        VectorOrder::new(vectors.iter().map(|v| RationalVector::from_i64(v)).collect())
    }

    /// The single-vector preorder given by a weight vector.
    pub fn from_weight(omega: &RationalVector) -> Result<VectorOrder> {
        VectorOrder::new(alloc::vec![omega.clone()])
    }

    pub fn vectors(&self) -> &[RationalVector] {
        &self.vectors
    }

    pub fn ambient_dim(&self) -> usize {
        self.vectors[0].dim()
    }

    /// True when the vectors span the space, so the preorder is a total
    /// order on `Q^n`.
    pub fn is_total(&self) -> bool {
        self.total
    }

    /// Lexicographic comparison of the dot-product tuples.
    pub fn compare(&self, a: &RationalVector, b: &RationalVector) -> Result<Ordering> {
        let n = self.ambient_dim();
        if a.dim() != n {
            return Err(Error::DimensionMismatch { expected: n, got: a.dim() });
        }
        if b.dim() != n {
            return Err(Error::DimensionMismatch { expected: n, got: b.dim() });
        }
        for u in &self.vectors {
            match u.dot(a).cmp(&u.dot(b)) {
                Ordering::Equal => continue,
                other => return Ok(other),
            }
        }
        Ok(Ordering::Equal)
    }

    pub fn compare_lattice(&self, a: &LatticeVector, b: &LatticeVector) -> Result<Ordering> {
        self.compare(&a.to_rational(), &b.to_rational())
    }

    /// Sign of a single vector against zero.
    pub fn sign_lattice(&self, a: &LatticeVector) -> Result<Ordering> {
        self.compare(&a.to_rational(), &RationalVector::zeros(self.ambient_dim()))
    }

    /// True iff every canonical basis vector is non-negative.
    pub fn is_positive(&self) -> bool {
        let n = self.ambient_dim();
        (0..n).all(|j| {
            let e = LatticeVector::unit(n, j);
            self.sign_lattice(&e).expect("dimensions agree") != Ordering::Less
        })
    }

    /// True iff every generator of the cone is non-negative; sufficient for
    /// the whole cone by compatibility with the vector-space structure.
    pub fn cone_nonnegative(&self, c: &Cone) -> bool {
        c.generators()
            .iter()
            .all(|g| self.sign_lattice(g).expect("dimensions agree") != Ordering::Less)
    }
}

/// Exact Gram–Schmidt orthogonalization (no normalization), returning
/// primitive integer direction vectors.
fn orthogonalize(basis: &[Vec<Rational>]) -> Vec<LatticeVector> {
    let mut ortho: Vec<RationalVector> = Vec::new();
    for b in basis {
        let mut v = RationalVector::new(b.clone());
        for prev in &ortho {
            let factor = v.dot(prev) / prev.dot(prev);
            v = v.sub(&prev.scale(&factor));
        }
        if !v.is_zero() {
            ortho.push(v);
        }
    }
    ortho.iter().map(RationalVector::to_primitive_lattice).collect()
}

/// A total continuous order refining the weight preorder of `omega` and
/// keeping the strongly convex cone `c` non-negative, built by recursion
/// on the dimension: at each level, intersect the cone with the orthogonal
/// complement of the vectors chosen so far and pick a vector of that
/// subspace on whose half-space the intersected cone lives.
///
/// Candidate vectors are the orthogonalized basis of the complement and
/// their negations, tried in lexicographic order; when no basis vector
/// works, the relative-interior point of the dual of the intersected cone
/// inside the subspace is used. The output is implementation-canonical.
pub fn refine_over_cone(omega: &RationalVector, c: &Cone) -> Result<VectorOrder> {
    if omega.is_zero() {
        return Err(Error::InvalidOrder("omega must be nonzero".into()));
    }
    if !c.is_strongly_convex() {
        return Err(Error::NotStronglyConvex);
    }
    let n = c.ambient_dim();
    if omega.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, got: omega.dim() });
    }
    for g in c.generators() {
        if omega.dot_lattice(g).is_negative() {
            return Err(Error::ConeNotInHalfSpace);
        }
    }

    let mut chosen: Vec<RationalVector> = alloc::vec![omega.clone()];
    let mut current = c.intersect_hyperplane(&omega.to_primitive_lattice())?;

    while chosen.len() < n {
        let matrix: Vec<Vec<Rational>> = chosen.iter().map(|v| v.coords().to_vec()).collect();
        let complement = kernel::nullspace_basis(&matrix);
        let mut candidates: Vec<LatticeVector> = Vec::new();
        for b in orthogonalize(&complement) {
            candidates.push(b.neg());
            candidates.push(b);
        }
        candidates.sort();

        let one_sided = |u: &LatticeVector| {
            current
                .generators()
                .iter()
                .all(|g| !u.to_rational().dot_lattice(g).is_negative())
        };
        let next = match candidates.iter().find(|u| one_sided(u)) {
            Some(u) => u.clone(),
            None => subspace_dual_interior(&complement, &current)?,
        };
        current = current.intersect_hyperplane(&next)?;
        chosen.push(next.to_rational());
    }
    VectorOrder::new(chosen)
}

/// Sum of the dual generators of `cone` viewed inside the subspace spanned
/// by `basis`; the cone must lie in that subspace.
fn subspace_dual_interior(basis: &[Vec<Rational>], cone: &Cone) -> Result<LatticeVector> {
    let d = basis.len();
    let n = cone.ambient_dim();
    // Coordinates of each generator in the subspace basis.
    let cols: Vec<Vec<Rational>> = (0..n)
        .map(|r| basis.iter().map(|b| b[r].clone()).collect())
        .collect();
    let mut sub_gens: Vec<LatticeVector> = Vec::new();
    for g in cone.generators() {
        let rhs: Vec<Rational> = g.to_rational().coords().to_vec();
        let y = kernel::solve(&cols, &rhs).ok_or(Error::ConeNotInHalfSpace)?;
        sub_gens.push(RationalVector::new(y).to_primitive_lattice());
    }
    let sub = Cone::new(d, sub_gens)?;
    let dual = sub.dual()?;
    let mut sum = LatticeVector::zeros(d);
    for g in dual.generators() {
        sum = sum.add(g);
    }
    if sum.is_zero() {
        return Err(Error::NoSeparator);
    }
    // Map back to ambient coordinates.
    let mut w = RationalVector::zeros(n);
    for (c, b) in sum.coords().iter().zip(basis) {
        w = w.add(&RationalVector::new(b.clone()).scale(&Rational::from_integer(c.clone())));
    }
    Ok(w.to_primitive_lattice())
}

/// Checks cone non-negativity for all `2^(n-1)` sign-flip orders
/// `(omega, ±u_2, ..., ±u_n)`; equivalent to `omega` lying in the relative
/// interior of the dual of `c`.
pub fn signflip_relint_test(
    c: &Cone,
    omega: &RationalVector,
    basis: &[RationalVector],
) -> Result<bool> {
    let n = c.ambient_dim();
    if omega.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, got: omega.dim() });
    }
    if basis.len() != n - 1 {
        return Err(Error::BadBasis("need n - 1 vectors".into()));
    }
    for b in basis {
        if b.dim() != n {
            return Err(Error::DimensionMismatch { expected: n, got: b.dim() });
        }
        if !b.dot(omega).is_zero() {
            return Err(Error::BadBasis("basis vector not orthogonal to omega".into()));
        }
    }
    let matrix: Vec<Vec<Rational>> = basis.iter().map(|b| b.coords().to_vec()).collect();
    if kernel::rank(&matrix) != n - 1 {
        return Err(Error::BadBasis("basis does not span the complement".into()));
    }

    for mask in 0..(1u32 << (n - 1)) {
        let mut vectors = alloc::vec![omega.clone()];
        for (i, b) in basis.iter().enumerate() {
            if mask & (1 << i) != 0 {
                vectors.push(b.neg());
            } else {
                vectors.push(b.clone());
            }
        }
        let order = VectorOrder::new(vectors)?;
        if !order.cone_nonnegative(c) {
            return Ok(false);
        }
    }
    Ok(true)
}
