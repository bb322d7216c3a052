//! Exact linear algebra over the rationals and over `K(T)`.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use super::{rat_int, RatFun, Rational, UniPoly};

/// Reduced row echelon form. Returns the reduced matrix and the pivot
/// column of each nonzero row.
pub fn rref(mut m: Vec<Vec<Rational>>) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].clone().recip();
        for v in &mut m[r] {
            *v = &*v * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let t = &m[r][j] * &f;
                    m[i][j] = &m[i][j] - &t;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    (m, pivots)
}

pub fn rank(m: &[Vec<Rational>]) -> usize {
    rref(m.to_vec()).1.len()
}

/// Canonical basis of the right null space, read off the reduced row
/// echelon form (one vector per free column, entry 1 at that column).
pub fn nullspace_basis(m: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let cols = m.first().map_or(0, Vec::len);
    let (red, pivots) = rref(m.to_vec());
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![rat_int(0); cols];
        v[free] = rat_int(1);
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -red[row][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// A particular solution of `m x = b`, or `None` if the system is
/// inconsistent.
pub fn solve(m: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let cols = m.first().map_or(0, Vec::len);
    let aug: Vec<Vec<Rational>> = m
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let (red, pivots) = rref(aug);
    // Inconsistent iff some pivot lands in the augmented column.
    if pivots.contains(&cols) {
        return None;
    }
    let mut x = vec![rat_int(0); cols];
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = red[row][cols].clone();
    }
    Some(x)
}

/// Basis of the right kernel of a matrix over `K(T)`, computed by
/// fraction-free (division-postponed) elimination on a cleared polynomial
/// matrix, then back substitution. Each basis vector is normalized so its
/// first nonzero entry is 1; the basis is empty when the kernel is trivial.
pub fn ratfun_kernel(m: &[Vec<RatFun>]) -> Vec<Vec<RatFun>> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    if cols == 0 {
        return Vec::new();
    }

    // Clear denominators row by row; the kernel is unchanged.
    let mut e: Vec<Vec<UniPoly>> = m
        .iter()
        .map(|row| {
            let mut lcm = UniPoly::one();
            for v in row {
                let g = lcm.gcd(v.den());
                lcm = &lcm * &v.den().div_exact(&g);
            }
            row.iter()
                .map(|v| v.num() * &lcm.div_exact(v.den()))
                .collect()
        })
        .collect();

    // Bareiss one-step fraction-free elimination to row echelon form.
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut prev = UniPoly::one();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !e[i][c].is_zero()) else {
            continue;
        };
        e.swap(r, p);
        for i in (r + 1)..rows {
            for j in (c + 1)..cols {
                let t = &(&e[r][c] * &e[i][j]) - &(&e[i][c] * &e[r][j]);
                e[i][j] = t.div_exact(&prev);
            }
            e[i][c] = UniPoly::zero();
        }
        prev = e[r][c].clone();
        pivots.push((r, c));
        r += 1;
        if r == rows {
            break;
        }
    }

    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![RatFun::zero(); cols];
        v[free] = RatFun::one();
        for &(row, pc) in pivots.iter().rev() {
            let mut s = RatFun::zero();
            for j in (pc + 1)..cols {
                if !e[row][j].is_zero() && !v[j].is_zero() {
                    s = &s + &(&RatFun::from_poly(e[row][j].clone()) * &v[j]);
                }
            }
            v[pc] = &(-&s) / &RatFun::from_poly(e[row][pc].clone());
        }
        // Normalize: first nonzero entry becomes 1.
        let first = v.iter().find(|x| !x.is_zero()).cloned().expect("nonzero kernel vector");
        let inv = first.recip();
        for x in &mut v {
            *x = &*x * &inv;
        }
        basis.push(v);
    }
    basis
}
