//! Exact Fourier–Motzkin elimination for small linear systems, used for
//! strict-feasibility searches (separating weights) and as an independent
//! membership route.

use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::kernel::{rat_int, Rational};

/// A linear constraint `coeffs . x + constant REL 0` with `REL` either
/// `>=` or `>` (strict).
#[derive(Clone, Debug)]
struct Constraint {
    coeffs: Vec<Rational>,
    constant: Rational,
    strict: bool,
}

impl Constraint {
    fn is_trivial(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn holds_trivially(&self) -> bool {
        if self.strict {
            self.constant.is_positive()
        } else {
            !self.constant.is_negative()
        }
    }

    /// Scales so the first nonzero coefficient has absolute value 1,
    /// making dominated duplicates comparable.
    fn normalized(mut self) -> Constraint {
        if let Some(a) = self.coeffs.iter().find(|a| !a.is_zero()) {
            let s = a.abs();
            for c in &mut self.coeffs {
                *c = &*c / &s;
            }
            self.constant = &self.constant / &s;
        }
        self
    }
}

/// Keeps, per coefficient vector, only the tightest constraint; dominated
/// copies blow up the elimination exponentially otherwise.
fn prune(constraints: Vec<Constraint>) -> Vec<Constraint> {
    let mut best: alloc::collections::BTreeMap<Vec<Rational>, (Rational, bool)> =
        alloc::collections::BTreeMap::new();
    let mut trivial: Vec<Constraint> = Vec::new();
    for c in constraints {
        let c = c.normalized();
        if c.is_trivial() {
            if !c.holds_trivially() {
                // Keep one witness of infeasibility.
                trivial.push(c);
            }
            continue;
        }
        match best.get(&c.coeffs) {
            Some((b, s)) => {
                let tighter = c.constant < *b || (c.constant == *b && c.strict && !s);
                if tighter {
                    best.insert(c.coeffs.clone(), (c.constant.clone(), c.strict));
                }
            }
            None => {
                best.insert(c.coeffs.clone(), (c.constant.clone(), c.strict));
            }
        }
    }
    let mut out = trivial;
    out.extend(
        best.into_iter()
            .map(|(coeffs, (constant, strict))| Constraint { coeffs, constant, strict }),
    );
    out
}

/// A conjunction of linear constraints over `n` rational variables.
#[derive(Clone, Debug, Default)]
pub struct LinSystem {
    n: usize,
    constraints: Vec<Constraint>,
}

impl LinSystem {
    pub fn new(n: usize) -> Self {
        LinSystem { n, constraints: Vec::new() }
    }

    /// `coeffs . x + constant >= 0`
    pub fn add_ge(&mut self, coeffs: Vec<Rational>, constant: Rational) {
        debug_assert_eq!(coeffs.len(), self.n);
        self.constraints.push(Constraint { coeffs, constant, strict: false });
    }

    /// `coeffs . x + constant > 0`
    pub fn add_gt(&mut self, coeffs: Vec<Rational>, constant: Rational) {
        debug_assert_eq!(coeffs.len(), self.n);
        self.constraints.push(Constraint { coeffs, constant, strict: true });
    }

    /// `coeffs . x + constant = 0`
    pub fn add_eq(&mut self, coeffs: Vec<Rational>, constant: Rational) {
        let neg: Vec<Rational> = coeffs.iter().map(|c| -c).collect();
        let negc = -&constant;
        self.add_ge(coeffs, constant);
        self.add_ge(neg, negc);
    }

    /// Finds an exact rational solution, or `None` when infeasible.
    ///
    /// Eliminates the last variable first, then back-substitutes, picking
    /// interval midpoints (or a unit step into an unbounded side).
    pub fn solve(&self) -> Option<Vec<Rational>> {
        self.solve_impl(false)
    }

    /// Exact supremum of the first variable over the feasible set, or
    /// `None` when the system is infeasible or unbounded above in it.
    pub fn max_of_first(&self) -> Option<Rational> {
        self.solve_impl(true).map(|sol| sol[0].clone())
    }

    fn solve_impl(&self, maximize_first: bool) -> Option<Vec<Rational>> {
        // stages[k] holds constraints over variables x_0..x_{k-1}.
        let mut stages: Vec<Vec<Constraint>> = Vec::with_capacity(self.n + 1);
        stages.push(self.constraints.clone());
        for k in (1..=self.n).rev() {
            let current = stages.last().expect("stage exists");
            let mut next: Vec<Constraint> = Vec::new();
            let var = k - 1;
            let mut lowers: Vec<&Constraint> = Vec::new();
            let mut uppers: Vec<&Constraint> = Vec::new();
            for c in current {
                let a = &c.coeffs[var];
                if a.is_zero() {
                    let mut c2 = c.clone();
                    c2.coeffs.truncate(var);
                    next.push(c2);
                } else if a.is_positive() {
                    lowers.push(c);
                } else {
                    uppers.push(c);
                }
            }
            for lo in &lowers {
                for up in &uppers {
                    // Positive combination cancelling x_var:
                    //   (-up_a) * lo + lo_a * up
                    let la = lo.coeffs[var].clone();
                    let ua = up.coeffs[var].clone();
                    let mut coeffs = Vec::with_capacity(var);
                    for j in 0..var {
                        coeffs.push(&(-&ua) * &lo.coeffs[j] + &la * &up.coeffs[j]);
                    }
                    let constant = &(-&ua) * &lo.constant + &la * &up.constant;
                    next.push(Constraint {
                        coeffs,
                        constant,
                        strict: lo.strict || up.strict,
                    });
                }
            }
            stages.push(prune(next));
        }

        // The fully eliminated stage has 0 variables: check consistency.
        for c in stages.last().expect("final stage") {
            debug_assert!(c.is_trivial());
            if !c.holds_trivially() {
                return None;
            }
        }

        // Back-substitute from x_0 up.
        let mut solution: Vec<Rational> = Vec::with_capacity(self.n);
        for k in 1..=self.n {
            let stage = &stages[self.n - k];
            let var = k - 1;
            let mut lower: Option<(Rational, bool)> = None;
            let mut upper: Option<(Rational, bool)> = None;
            for c in stage {
                let a = &c.coeffs[var];
                if a.is_zero() {
                    continue;
                }
                let mut rest = c.constant.clone();
                for j in 0..var {
                    rest = rest + &c.coeffs[j] * &solution[j];
                }
                let bound = -&rest / a;
                if a.is_positive() {
                    // x >= bound (or >)
                    let better = lower.as_ref().map_or(true, |(b, s)| {
                        bound > *b || (bound == *b && c.strict && !s)
                    });
                    if better {
                        lower = Some((bound, c.strict));
                    }
                } else {
                    let better = upper.as_ref().map_or(true, |(b, s)| {
                        bound < *b || (bound == *b && c.strict && !s)
                    });
                    if better {
                        upper = Some((bound, c.strict));
                    }
                }
            }
            // When maximizing the first variable, pin it to its upper
            // bound (the supremum; every other variable still gets a
            // feasible value).
            if maximize_first && var == 0 {
                match &upper {
                    None => return None,
                    Some((up, _)) => {
                        solution.push(up.clone());
                        continue;
                    }
                }
            }
            let value = match (&lower, &upper) {
                (None, None) => rat_int(0),
                (Some((lo, ls)), None) => {
                    if *ls {
                        lo + rat_int(1)
                    } else {
                        lo.clone()
                    }
                }
                (None, Some((up, us))) => {
                    if *us {
                        up - rat_int(1)
                    } else {
                        up.clone()
                    }
                }
                (Some((lo, ls)), Some((up, us))) => {
                    if lo > up || (lo == up && (*ls || *us)) {
                        // Should be ruled out by the elimination.
                        return None;
                    }
                    if lo == up {
                        lo.clone()
                    } else {
                        (lo + up) / rat_int(2)
                    }
                }
            };
            solution.push(value);
        }
        debug_assert!(self.check(&solution));
        Some(solution)
    }

    pub fn feasible(&self) -> bool {
        self.solve().is_some()
    }

    /// Exact check that `x` satisfies every constraint.
    pub fn check(&self, x: &[Rational]) -> bool {
        self.constraints.iter().all(|c| {
            let mut v = c.constant.clone();
            for (a, xi) in c.coeffs.iter().zip(x) {
                v = v + a * xi;
            }
            if c.strict {
                v.is_positive()
            } else {
                !v.is_negative()
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rat;

    #[test]
    fn strict_wedge_has_interior_point() {
        // x > 0, y > 0, x - y > 0
        let mut sys = LinSystem::new(2);
        sys.add_gt(alloc::vec![rat(1, 1), rat(0, 1)], rat(0, 1));
        sys.add_gt(alloc::vec![rat(0, 1), rat(1, 1)], rat(0, 1));
        sys.add_gt(alloc::vec![rat(1, 1), rat(-1, 1)], rat(0, 1));
        let x = sys.solve().unwrap();
        assert!(sys.check(&x));
    }

    #[test]
    fn infeasible_strict_pair() {
        // x > 0 and -x > 0
        let mut sys = LinSystem::new(1);
        sys.add_gt(alloc::vec![rat(1, 1)], rat(0, 1));
        sys.add_gt(alloc::vec![rat(-1, 1)], rat(0, 1));
        assert!(sys.solve().is_none());
    }

    #[test]
    fn equalities_and_bounds() {
        // x + y = 3, x >= 1, y >= 1
        let mut sys = LinSystem::new(2);
        sys.add_eq(alloc::vec![rat(1, 1), rat(1, 1)], rat(-3, 1));
        sys.add_ge(alloc::vec![rat(1, 1), rat(0, 1)], rat(-1, 1));
        sys.add_ge(alloc::vec![rat(0, 1), rat(1, 1)], rat(-1, 1));
        let x = sys.solve().unwrap();
        assert!(sys.check(&x));
        assert_eq!(&x[0] + &x[1], rat(3, 1));
    }
}
