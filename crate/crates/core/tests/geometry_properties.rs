//! Randomized cone-kernel properties: dual involution, the strong
//! convexity criterion, membership cross-checked against an independent
//! feasibility route, shifted-cone containment, and separating weights.

mod common;

use common::{random_cone, random_lattice_vector, XorShift};
use coneseries_core::geometry::{
    cone_join, member_by_feasibility, separating_omega, shift_containment, Cone, LatticeVector,
};
use num_traits::Signed;

#[test]
fn dual_involution_on_random_cones() {
    let mut rng = XorShift::new(0x5eed_0001);
    for case in 0..200 {
        let n = if case % 2 == 0 { 2 } else { 3 };
        let c = random_cone(&mut rng, n, 5, 4);
        let dd = c.dual().unwrap().dual().unwrap();
        assert_eq!(dd.generators(), c.generators(), "case {case}");
    }
}

#[test]
fn strong_convexity_iff_dual_full_dimensional() {
    let mut rng = XorShift::new(0x5eed_0002);
    for case in 0..200 {
        let n = if case % 2 == 0 { 2 } else { 3 };
        let c = random_cone(&mut rng, n, 5, 4);
        let dual = c.dual().unwrap();
        assert_eq!(
            c.is_strongly_convex(),
            dual.dimension() == n,
            "case {case}: gens {:?}",
            c.generators()
        );
    }
}

#[test]
fn membership_agrees_with_feasibility_route() {
    let mut rng = XorShift::new(0x5eed_0003);
    for case in 0..120 {
        let n = if case % 2 == 0 { 2 } else { 3 };
        let c = random_cone(&mut rng, n, 4, 3);
        for _ in 0..12 {
            let p = random_lattice_vector(&mut rng, n, 5);
            let by_dual = c.contains_lattice(&p).unwrap();
            let by_fm = member_by_feasibility(c.generators(), &p.to_rational());
            assert_eq!(by_dual, by_fm, "case {case}, point {p:?}");
        }
    }
}

#[test]
fn join_contains_both_sides() {
    let mut rng = XorShift::new(0x5eed_0004);
    for _ in 0..50 {
        let a = random_cone(&mut rng, 2, 3, 4);
        let b = random_cone(&mut rng, 2, 3, 4);
        let j = cone_join(&a, &b).unwrap();
        for g in a.generators().iter().chain(b.generators()) {
            assert!(j.contains_lattice(g).unwrap());
        }
    }
}

#[test]
fn shift_containment_soundness_by_sampling() {
    let mut rng = XorShift::new(0x5eed_0005);
    let mut done = 0;
    while done < 40 {
        let c1 = random_cone(&mut rng, 2, 4, 3);
        let c2 = random_cone(&mut rng, 2, 4, 3);
        let g1 = random_lattice_vector(&mut rng, 2, 3);
        let g2 = random_lattice_vector(&mut rng, 2, 3);
        let Ok(gamma) = shift_containment(&g1, &c1, &g2, &c2) else {
            continue;
        };
        done += 1;
        let inter = c1.intersect(&c2).unwrap();
        for x in -8..=8 {
            for y in -8..=8 {
                let p = LatticeVector::from_i64(&[x, y]);
                let in1 = c1.contains_lattice(&p.sub(&g1)).unwrap();
                let in2 = c2.contains_lattice(&p.sub(&g2)).unwrap();
                if in1 && in2 {
                    assert!(
                        inter.contains_lattice(&p.sub(&gamma)).unwrap(),
                        "point ({x},{y}) escapes gamma + intersection"
                    );
                }
            }
        }
    }
}

#[test]
fn separating_omega_satisfies_strict_system() {
    // Cones built as orthant + one mixed-sign vertex.
    let mut rng = XorShift::new(0x5eed_0006);
    let mut done = 0;
    while done < 60 {
        let n = 2 + (rng.range(0, 1) as usize);
        let mut coords = vec![0i64; n];
        for c in coords.iter_mut() {
            *c = rng.range(-3, 3);
        }
        if !coords.iter().any(|c| *c < 0) || !coords.iter().any(|c| *c > 0) {
            continue;
        }
        let v = LatticeVector::from_i64(&coords).primitive();
        let mut gens: Vec<LatticeVector> = (0..n).map(|j| LatticeVector::unit(n, j)).collect();
        gens.push(v.clone());
        let tau = Cone::new(n, gens).unwrap();
        if !tau.is_strongly_convex() || !tau.generators().contains(&v) {
            continue;
        }
        done += 1;
        let omega = separating_omega(&tau, &v).unwrap();
        let val = omega.dot_lattice(&v);
        assert!(val.is_positive());
        for u in tau.generators() {
            assert!(omega.dot_lattice(u).is_positive(), "omega not interior");
        }
        for (j, vj) in v.coords().iter().enumerate() {
            if vj.is_negative() {
                let bound = -(&omega.coords()[j]
                    * coneseries_core::kernel::Rational::from_integer(vj.clone()));
                assert!(val < bound, "coordinate {j} bound violated");
            }
        }
    }
}
