//! Exact rational vectors in ε-coordinates.

use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use num::rational::Rational64;
use num::{One, Signed, Zero};

/// Exact rational number used throughout the crate.
pub type Rational = Rational64;

/// Shorthand for the rational `n / d`.
pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

/// A vector of exact rationals in the orthonormal ε-basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalVector(Vec<Rational>);

impl RationalVector {
    pub fn new(coords: Vec<Rational>) -> Self {
        RationalVector(coords)
    }

    pub fn zero(dim: usize) -> Self {
        RationalVector(vec![Rational::zero(); dim])
    }

    /// The unit vector ε_{index+1} (zero-based `index`).
    pub fn unit(dim: usize, index: usize) -> Self {
        let mut v = Self::zero(dim);
        v.0[index] = Rational::one();
        v
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        RationalVector(coords.iter().map(|&c| Rational::from_integer(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = &Rational> {
        self.0.iter()
    }

    pub fn dot(&self, other: &Self) -> Rational {
        debug_assert_eq!(self.dim(), other.dim());
        self.0
            .iter()
            .zip(&other.0)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn scale(&self, factor: Rational) -> Self {
        RationalVector(self.0.iter().map(|c| c * factor).collect())
    }

    /// `self + factor * other`.
    pub fn add_scaled(&self, factor: Rational, other: &Self) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        RationalVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + factor * b)
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }

    pub fn coordinate_sum(&self) -> Rational {
        self.0.iter().fold(Rational::zero(), |acc, c| acc + c)
    }
}

impl Index<usize> for RationalVector {
    type Output = Rational;

    fn index(&self, index: usize) -> &Rational {
        &self.0[index]
    }
}

impl From<Vec<Rational>> for RationalVector {
    fn from(coords: Vec<Rational>) -> Self {
        RationalVector(coords)
    }
}

impl Add for &RationalVector {
    type Output = RationalVector;

    fn add(self, rhs: &RationalVector) -> RationalVector {
        self.add_scaled(Rational::one(), rhs)
    }
}

impl Add for RationalVector {
    type Output = RationalVector;

    fn add(self, rhs: RationalVector) -> RationalVector {
        &self + &rhs
    }
}

impl Sub for &RationalVector {
    type Output = RationalVector;

    fn sub(self, rhs: &RationalVector) -> RationalVector {
        self.add_scaled(-Rational::one(), rhs)
    }
}

impl Sub for RationalVector {
    type Output = RationalVector;

    fn sub(self, rhs: RationalVector) -> RationalVector {
        &self - &rhs
    }
}

impl Neg for &RationalVector {
    type Output = RationalVector;

    fn neg(self) -> RationalVector {
        RationalVector(self.0.iter().map(|c| -c).collect())
    }
}

impl Neg for RationalVector {
    type Output = RationalVector;

    fn neg(self) -> RationalVector {
        -&self
    }
}

impl fmt::Display for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            if c.is_integer() {
                write!(f, "{}", c.numer())?;
            } else if c.is_negative() {
                write!(f, "-{}/{}", c.numer().abs(), c.denom())?;
            } else {
                write!(f, "{}/{}", c.numer(), c.denom())?;
            }
        }
        write!(f, ")")
    }
}
