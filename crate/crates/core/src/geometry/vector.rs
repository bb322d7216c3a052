//! Exponent vectors: integer lattice points and rational weight vectors.

use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::kernel::{rat_int, Int, Rational};

/// A point of the exponent lattice `Z^n`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticeVector {
    coords: Vec<Int>,
}

impl LatticeVector {
    pub fn new(coords: Vec<Int>) -> Self {
        LatticeVector { coords }
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        LatticeVector::new(coords.iter().map(|&c| Int::from(c)).collect())
    }

    pub fn zeros(n: usize) -> Self {
        LatticeVector::new(alloc::vec![Int::zero(); n])
    }

    /// The `j`-th canonical basis vector of `Z^n`.
    pub fn unit(n: usize, j: usize) -> Self {
        let mut v = Self::zeros(n);
        v.coords[j] = Int::from(1);
        v
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Int] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &LatticeVector) -> Int {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn add(&self, other: &LatticeVector) -> LatticeVector {
        LatticeVector::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &LatticeVector) -> LatticeVector {
        LatticeVector::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn neg(&self) -> LatticeVector {
        LatticeVector::new(self.coords.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, k: &Int) -> LatticeVector {
        LatticeVector::new(self.coords.iter().map(|a| a * k).collect())
    }

    /// Divides by the gcd of the coordinates; zero stays zero.
    pub fn primitive(&self) -> LatticeVector {
        let mut g = Int::zero();
        for c in &self.coords {
            g = g.gcd(c);
        }
        if g.is_zero() {
            return self.clone();
        }
        LatticeVector::new(self.coords.iter().map(|c| c / &g).collect())
    }

    pub fn to_rational(&self) -> RationalVector {
        RationalVector::new(
            self.coords
                .iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect(),
        )
    }
}

impl fmt::Debug for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A rational vector: weight vectors and order vectors.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RationalVector {
    coords: Vec<Rational>,
}

impl RationalVector {
    pub fn new(coords: Vec<Rational>) -> Self {
        RationalVector { coords }
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        RationalVector::new(coords.iter().map(|&c| rat_int(c)).collect())
    }

    pub fn zeros(n: usize) -> Self {
        RationalVector::new(alloc::vec![rat_int(0); n])
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &RationalVector) -> Rational {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn dot_lattice(&self, other: &LatticeVector) -> Rational {
        self.coords
            .iter()
            .zip(other.coords())
            .map(|(a, b)| a * Rational::from_integer(b.clone()))
            .sum()
    }

    pub fn add(&self, other: &RationalVector) -> RationalVector {
        RationalVector::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &RationalVector) -> RationalVector {
        RationalVector::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn neg(&self) -> RationalVector {
        RationalVector::new(self.coords.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, k: &Rational) -> RationalVector {
        RationalVector::new(self.coords.iter().map(|a| a * k).collect())
    }

    pub fn is_strictly_positive(&self) -> bool {
        self.coords.iter().all(Signed::is_positive)
    }

    /// Exact integer coordinates, when all are integral.
    pub fn to_lattice(&self) -> Option<LatticeVector> {
        let mut out = Vec::with_capacity(self.coords.len());
        for c in &self.coords {
            if !c.is_integer() {
                return None;
            }
            out.push(c.to_integer());
        }
        Some(LatticeVector::new(out))
    }

    /// Clears denominators and divides by the gcd: the primitive lattice
    /// vector spanning the same ray.
    pub fn to_primitive_lattice(&self) -> LatticeVector {
        let mut lcm = Int::from(1);
        for c in &self.coords {
            lcm = lcm.lcm(c.denom());
        }
        let ints: Vec<Int> = self
            .coords
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        LatticeVector::new(ints).primitive()
    }
}

impl fmt::Debug for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
