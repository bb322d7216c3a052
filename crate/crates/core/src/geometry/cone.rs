//! Rational polyhedral cones with exact duals.
//!
//! A cone is stored by a canonical generating set: primitive integer
//! vectors, deduplicated and lexicographically sorted, consisting of the
//! extreme rays of the pointed part plus a plus/minus basis of the
//! lineality space. Canonicalization is the double dual, so equal cones
//! compare equal as generator sets.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Signed;

use super::fm::LinSystem;
use super::vector::{LatticeVector, RationalVector};
use crate::kernel::{self, rat_int, Rational};
use crate::{Error, Result};

/// Maximum ambient dimension for exact dual computation.
pub const MAX_DUAL_DIM: usize = 4;

/// A finitely generated rational polyhedral cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone {
    dim: usize,
    generators: Vec<LatticeVector>,
    dual_generators: Option<Vec<LatticeVector>>,
    dimension: usize,
    strongly_convex: bool,
}

impl Cone {
    /// Builds a cone from any generating set, canonicalizing.
    ///
    /// For ambient dimension at most [`MAX_DUAL_DIM`] the dual generators
    /// are computed and cached here; beyond that the generators are only
    /// cleaned up (primitive, deduplicated, sorted) and dual-based
    /// operations report [`Error::DimensionUnsupported`].
    pub fn new(dim: usize, generators: Vec<LatticeVector>) -> Result<Cone> {
        for g in &generators {
            if g.dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim, got: g.dim() });
            }
        }
        let cleaned = clean(generators);
        if dim > MAX_DUAL_DIM {
            let matrix: Vec<Vec<Rational>> = cleaned
                .iter()
                .map(|g| g.to_rational().coords().to_vec())
                .collect();
            let dimension = kernel::rank(&matrix);
            let strongly_convex = !has_positive_circuit(dim, &cleaned);
            return Ok(Cone {
                dim,
                generators: cleaned,
                dual_generators: None,
                dimension,
                strongly_convex,
            });
        }
        let dual = dual_generators_raw(dim, &cleaned);
        let canonical = dual_generators_raw(dim, &dual);
        let matrix: Vec<Vec<Rational>> = canonical
            .iter()
            .map(|g| g.to_rational().coords().to_vec())
            .collect();
        let dual_matrix: Vec<Vec<Rational>> = dual
            .iter()
            .map(|g| g.to_rational().coords().to_vec())
            .collect();
        let dimension = kernel::rank(&matrix);
        let strongly_convex = kernel::rank(&dual_matrix) == dim;
        debug_assert_eq!(strongly_convex, !has_positive_circuit(dim, &canonical));
        Ok(Cone {
            dim,
            generators: canonical,
            dual_generators: Some(dual),
            dimension,
            strongly_convex,
        })
    }

    pub fn from_i64(dim: usize, gens: &[&[i64]]) -> Result<Cone> {
        Cone::new(dim, gens.iter().map(|g| LatticeVector::from_i64(g)).collect())
    }

    /// The zero cone `{0}`.
    pub fn trivial(dim: usize) -> Cone {
        Cone::new(dim, Vec::new()).expect("trivial cone")
    }

    /// The first orthant.
    pub fn first_orthant(dim: usize) -> Cone {
        Cone::new(dim, (0..dim).map(|j| LatticeVector::unit(dim, j)).collect())
            .expect("orthant")
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    /// Canonical generators: extreme rays of the pointed part plus a
    /// plus/minus lineality basis.
    pub fn generators(&self) -> &[LatticeVector] {
        &self.generators
    }

    /// Dimension of the linear span.
    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.is_empty()
    }

    /// True iff the cone contains no nontrivial linear subspace.
    ///
    /// Computed at construction from the dual dimension (the dual is full
    /// dimensional iff the cone is strongly convex), cross-checked against
    /// the direct search for a vanishing positive combination of
    /// generators.
    pub fn is_strongly_convex(&self) -> bool {
        self.strongly_convex
    }

    /// Generators of the dual cone.
    pub fn dual_generators(&self) -> Result<&[LatticeVector]> {
        self.dual_generators
            .as_deref()
            .ok_or(Error::DimensionUnsupported(self.dim))
    }

    /// The dual cone. Its own dual is the original cone, so both caches are
    /// filled without recomputation.
    pub fn dual(&self) -> Result<Cone> {
        let dual = self.dual_generators()?.to_vec();
        let matrix: Vec<Vec<Rational>> = dual
            .iter()
            .map(|g| g.to_rational().coords().to_vec())
            .collect();
        Ok(Cone {
            dim: self.dim,
            generators: dual,
            dual_generators: Some(self.generators.clone()),
            dimension: kernel::rank(&matrix),
            strongly_convex: self.dimension == self.dim,
        })
    }

    /// Exact membership via the dual half-space description.
    pub fn contains(&self, p: &RationalVector) -> Result<bool> {
        if p.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: p.dim() });
        }
        let dual = self.dual_generators()?;
        Ok(dual.iter().all(|d| !p.dot_lattice(d).is_negative()))
    }

    pub fn contains_lattice(&self, p: &LatticeVector) -> Result<bool> {
        self.contains(&p.to_rational())
    }

    /// Intersection, computed by dualizing the union of the dual
    /// generators.
    pub fn intersect(&self, other: &Cone) -> Result<Cone> {
        let mut union = self.dual_generators()?.to_vec();
        union.extend_from_slice(other.dual_generators()?);
        let gens = dual_generators_raw(self.dim, &clean(union));
        Cone::new(self.dim, gens)
    }

    /// Intersection with the hyperplane orthogonal to `normal`.
    pub fn intersect_hyperplane(&self, normal: &LatticeVector) -> Result<Cone> {
        let mut union = self.dual_generators()?.to_vec();
        union.push(normal.clone());
        union.push(normal.neg());
        let gens = dual_generators_raw(self.dim, &clean(union));
        Cone::new(self.dim, gens)
    }
}

/// Removes zero vectors, reduces to primitives, deduplicates and sorts.
fn clean(gens: Vec<LatticeVector>) -> Vec<LatticeVector> {
    let set: BTreeSet<LatticeVector> = gens
        .into_iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.primitive())
        .collect();
    set.into_iter().collect()
}

/// Generators of the dual cone `{v | v.u >= 0 for all generators u}`:
/// a plus/minus basis of its lineality space (the null space of the
/// generator matrix) plus the extreme rays of its pointed part, found by
/// enumerating rank-(d-1) subsets of the active constraints inside the row
/// space of the generators. The output depends only on the cone, not on
/// the generating set.
fn dual_generators_raw(dim: usize, gens: &[LatticeVector]) -> Vec<LatticeVector> {
    if gens.is_empty() {
        // Dual of {0} is everything.
        let mut out = Vec::new();
        for j in 0..dim {
            out.push(LatticeVector::unit(dim, j));
            out.push(LatticeVector::unit(dim, j).neg());
        }
        return clean(out);
    }
    let matrix: Vec<Vec<Rational>> = gens
        .iter()
        .map(|g| g.to_rational().coords().to_vec())
        .collect();

    let mut out: Vec<LatticeVector> = Vec::new();

    // Lineality space of the dual: vectors orthogonal to every generator.
    for b in kernel::nullspace_basis(&matrix) {
        let v = RationalVector::new(b).to_primitive_lattice();
        out.push(v.neg());
        out.push(v);
    }

    // Pointed part lives in the row space; use the canonical RREF basis.
    let (red, pivots) = kernel::rref(matrix);
    let d = pivots.len();
    if d == 0 {
        return clean(out);
    }
    let basis: Vec<Vec<Rational>> = red.into_iter().take(d).collect();

    // Constraint rows: generator i in row-space coordinates.
    let rows: Vec<Vec<Rational>> = gens
        .iter()
        .map(|g| {
            basis
                .iter()
                .map(|b| RationalVector::new(b.clone()).dot_lattice(g))
                .collect()
        })
        .collect();

    let satisfied = |y: &[Rational]| -> bool {
        rows.iter().all(|row| {
            let dot: Rational = row.iter().zip(y).map(|(a, b)| a * b).sum();
            !dot.is_negative()
        })
    };

    let mut rays: BTreeSet<LatticeVector> = BTreeSet::new();
    let mut add_ray = |y: Vec<Rational>| {
        // Map back to ambient coordinates through the basis.
        let mut w = RationalVector::zeros(dim);
        for (c, b) in y.iter().zip(&basis) {
            w = w.add(&RationalVector::new(b.clone()).scale(c));
        }
        rays.insert(w.to_primitive_lattice());
    };

    if d == 1 {
        for y in [vec![rat_int(1)], vec![rat_int(-1)]] {
            if satisfied(&y) {
                add_ray(y);
            }
        }
    } else {
        for subset in subsets(rows.len(), d - 1) {
            let sub: Vec<Vec<Rational>> = subset.iter().map(|&i| rows[i].clone()).collect();
            if kernel::rank(&sub) != d - 1 {
                continue;
            }
            let ns = kernel::nullspace_basis(&sub);
            debug_assert_eq!(ns.len(), 1);
            let z = ns.into_iter().next().expect("one-dimensional null space");
            let neg: Vec<Rational> = z.iter().map(|c| -c).collect();
            if satisfied(&z) {
                add_ray(z);
            } else if satisfied(&neg) {
                add_ray(neg);
            }
        }
    }
    out.extend(rays);
    clean(out)
}

/// All `k`-element subsets of `0..n`.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            current.push(i);
            rec(i + 1, n, k, current, out);
            current.pop();
        }
    }
    rec(0, n, k, &mut current, &mut out);
    out
}

/// True iff some nonnegative, not-all-zero combination of the generators
/// vanishes, i.e. the cone contains a line. Decided by exact
/// Fourier–Motzkin feasibility; independent of the dual computation.
fn has_positive_circuit(dim: usize, gens: &[LatticeVector]) -> bool {
    if gens.is_empty() {
        return false;
    }
    let k = gens.len();
    let mut sys = LinSystem::new(k);
    for j in 0..k {
        let mut coeffs = vec![rat_int(0); k];
        coeffs[j] = rat_int(1);
        sys.add_ge(coeffs, rat_int(0));
    }
    // Sum of multipliers is 1, so the combination is nontrivial.
    sys.add_eq(vec![rat_int(1); k], rat_int(-1));
    for c in 0..dim {
        let coeffs: Vec<Rational> = gens
            .iter()
            .map(|g| Rational::from_integer(g.coords()[c].clone()))
            .collect();
        sys.add_eq(coeffs, rat_int(0));
    }
    sys.feasible()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lv(v: &[i64]) -> LatticeVector {
        LatticeVector::from_i64(v)
    }

    #[test]
    fn orthant_is_self_dual() {
        let c = Cone::first_orthant(2);
        assert_eq!(c.dual().unwrap().generators(), c.generators());
        assert!(c.is_strongly_convex());
        assert_eq!(c.dimension(), 2);
    }

    #[test]
    fn halfspace_enumeration_example() {
        // <(1,0), (-1,1)> has dual <(0,1), (1,1)>.
        let c = Cone::from_i64(2, &[&[1, 0], &[-1, 1]]).unwrap();
        assert_eq!(
            c.dual_generators().unwrap(),
            &[lv(&[0, 1]), lv(&[1, 1])]
        );
    }

    #[test]
    fn upper_halfplane_has_ray_dual() {
        let c = Cone::from_i64(2, &[&[1, 0], &[-1, 0], &[0, 1]]).unwrap();
        assert_eq!(c.dual_generators().unwrap(), &[lv(&[0, 1])]);
        assert!(!c.is_strongly_convex());
        // Brute-force lattice check: every box point with nonneg pairing
        // against the dual generator is in the half-plane.
        for x in -4..=4 {
            for y in -4..=4 {
                let p = lv(&[x, y]);
                let inside = c.contains_lattice(&p).unwrap();
                assert_eq!(inside, y >= 0, "point ({x},{y})");
            }
        }
    }

    #[test]
    fn line_is_not_strongly_convex() {
        let c = Cone::from_i64(2, &[&[1, 0], &[-1, 0]]).unwrap();
        assert!(!c.is_strongly_convex());
        assert_eq!(c.dimension(), 1);
    }

    #[test]
    fn intro_cone_is_strongly_convex_with_known_dual() {
        let c = Cone::from_i64(2, &[&[0, 1], &[1, 0], &[-1, 1]]).unwrap();
        assert!(c.is_strongly_convex());
        assert_eq!(c.dual_generators().unwrap(), &[lv(&[0, 1]), lv(&[1, 1])]);
    }

    #[test]
    fn redundant_generator_is_dropped() {
        let c = Cone::from_i64(2, &[&[1, 0], &[1, 1], &[0, 1]]).unwrap();
        assert_eq!(c.generators(), &[lv(&[0, 1]), lv(&[1, 0])]);
    }

    #[test]
    fn trivial_cone_dual_is_everything() {
        let c = Cone::trivial(2);
        assert!(c.is_strongly_convex());
        assert_eq!(c.dimension(), 0);
        let dual = c.dual().unwrap();
        assert_eq!(dual.dimension(), 2);
        assert!(dual.contains_lattice(&lv(&[-3, 5])).unwrap());
    }

    #[test]
    fn intersect_orthant_with_halfplane() {
        let orthant = Cone::first_orthant(2);
        let wedge = Cone::from_i64(2, &[&[1, 0], &[-1, 1]]).unwrap();
        let inter = orthant.intersect(&wedge).unwrap();
        assert_eq!(inter.generators(), &[lv(&[0, 1]), lv(&[1, 0])]);
    }
}
