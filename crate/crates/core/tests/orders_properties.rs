//! Order-theoretic properties: antisymmetry of total orders, translation
//! compatibility, the refinement contract of the constructed orders, and
//! the sign-flip characterization of relative-interior membership.

mod common;

use core::cmp::Ordering;

use common::{random_cone, XorShift};
use coneseries_core::geometry::{relint_dual_contains, LatticeVector, RationalVector};
use coneseries_core::kernel::{self, Rational};
use coneseries_core::orders::{refine_over_cone, signflip_relint_test, VectorOrder};

fn random_rational_vector(rng: &mut XorShift, n: usize) -> RationalVector {
    RationalVector::new(
        (0..n)
            .map(|_| kernel::rat(rng.range(-6, 6), rng.range(1, 4)))
            .collect(),
    )
}

fn random_total_order(rng: &mut XorShift, n: usize) -> VectorOrder {
    loop {
        let vectors: Vec<RationalVector> =
            (0..n).map(|_| random_rational_vector(rng, n)).collect();
        if vectors.iter().any(RationalVector::is_zero) {
            continue;
        }
        let Ok(o) = VectorOrder::new(vectors) else { continue };
        if o.is_total() {
            return o;
        }
    }
}

#[test]
fn total_orders_are_antisymmetric() {
    let mut rng = XorShift::new(0xa11_0001);
    for case in 0..500 {
        let n = 2 + (case % 2);
        let o = random_total_order(&mut rng, n);
        let a = random_rational_vector(&mut rng, n);
        let b = random_rational_vector(&mut rng, n);
        if o.compare(&a, &b).unwrap() == Ordering::Equal {
            assert_eq!(a, b, "case {case}");
        }
        // And reflexivity.
        assert_eq!(o.compare(&a, &a).unwrap(), Ordering::Equal);
    }
}

#[test]
fn comparison_is_translation_invariant() {
    let mut rng = XorShift::new(0xa11_0002);
    for case in 0..300 {
        let n = 2 + (case % 2);
        let o = random_total_order(&mut rng, n);
        let a = random_rational_vector(&mut rng, n);
        let b = random_rational_vector(&mut rng, n);
        let w = random_rational_vector(&mut rng, n);
        let plain = o.compare(&a, &b).unwrap();
        let shifted = o.compare(&a.add(&w), &b.add(&w)).unwrap();
        assert_eq!(plain, shifted, "case {case}");
    }
}

#[test]
fn refinement_preserves_strict_weight_comparisons() {
    let mut rng = XorShift::new(0xa11_0003);
    let mut done = 0;
    while done < 120 {
        let n = 2 + (done % 2);
        let c = random_cone(&mut rng, n, 3, 3);
        if !c.is_strongly_convex() {
            continue;
        }
        let omega = random_rational_vector(&mut rng, n);
        if omega.is_zero() {
            continue;
        }
        let Ok(o) = refine_over_cone(&omega, &c) else {
            continue;
        };
        done += 1;
        assert!(o.is_total());
        assert!(o.cone_nonnegative(&c), "constructed order rejects its cone");
        assert_eq!(o.vectors()[0], omega);
        let weight = VectorOrder::from_weight(&omega).unwrap();
        for _ in 0..10 {
            let a = random_rational_vector(&mut rng, n);
            let zero = RationalVector::zeros(n);
            if weight.compare(&a, &zero).unwrap() == Ordering::Less {
                assert_eq!(
                    o.compare(&a, &zero).unwrap(),
                    Ordering::Less,
                    "refinement flipped a strict weight comparison"
                );
            }
        }
    }
}

#[test]
fn signflip_test_matches_relint_membership() {
    let mut rng = XorShift::new(0xa11_0004);
    let mut done = 0;
    while done < 100 {
        let n = 2 + (done % 2);
        let c = random_cone(&mut rng, n, 4, 3);
        if !c.is_strongly_convex() {
            continue;
        }
        let omega = random_rational_vector(&mut rng, n);
        if omega.is_zero() {
            continue;
        }
        // Basis of the orthogonal complement of omega.
        let matrix = vec![omega.coords().to_vec()];
        let basis: Vec<RationalVector> = kernel::nullspace_basis(&matrix)
            .into_iter()
            .map(RationalVector::new)
            .collect();
        if basis.len() != n - 1 {
            continue;
        }
        done += 1;
        let flips = signflip_relint_test(&c, &omega, &basis).unwrap();
        let relint = relint_dual_contains(&c, &omega).unwrap();
        assert_eq!(flips, relint, "cone {:?} omega {omega:?}", c.generators());
    }
}

#[test]
fn well_ordering_consequence_minimum_on_explicit_sets() {
    // The observable consequence of well-ordering: the order minimum over
    // explicit finite sets is attained and unique for total orders.
    let mut rng = XorShift::new(0xa11_0005);
    for _ in 0..100 {
        let n = 2;
        let o = random_total_order(&mut rng, n);
        let points: Vec<LatticeVector> = (0..12)
            .map(|_| common::random_lattice_vector(&mut rng, n, 6))
            .collect();
        let mut best = points[0].clone();
        for p in &points[1..] {
            if o.compare_lattice(p, &best).unwrap() == Ordering::Less {
                best = p.clone();
            }
        }
        for p in &points {
            assert_ne!(o.compare_lattice(p, &best).unwrap(), Ordering::Less);
        }
    }
}
