use std::fmt;

use crate::linalg;
use crate::scalar::{Field, RealField};

/// A point of affine n-space.
#[derive(Clone, Debug, PartialEq)]
pub struct Point<T>(pub Vec<T>);

impl<T: Field> Point<T> {
    pub fn new(coords: Vec<T>) -> Self {
        Point(coords)
    }

    pub fn origin(dim: usize) -> Self {
        Point(vec![T::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[T] {
        &self.0
    }

    /// `self - other` as a vector.
    pub fn vector_to(&self, other: &Point<T>) -> Vec<T> {
        linalg::sub(&other.0, &self.0)
    }

    /// `self + t * direction`
    pub fn offset(&self, direction: &[T], t: &T) -> Point<T> {
        Point(linalg::axpy(&self.0, t, direction))
    }

    /// `(1 - t) * self + t * other`
    pub fn lerp(&self, other: &Point<T>, t: &T) -> Point<T> {
        self.offset(&self.vector_to(other), t)
    }

    pub fn midpoint(&self, other: &Point<T>) -> Point<T> {
        self.lerp(other, &T::from_ratio(1, 2))
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> Point<U> {
        Point(self.0.iter().map(f).collect())
    }
}

impl<T: RealField> Point<T> {
    pub fn to_f64(&self) -> Point<f64> {
        self.map(RealField::to_f64)
    }

    pub fn from_f64(p: &Point<f64>) -> Self {
        p.map(|&v| T::from_f64(v))
    }

    /// Euclidean distance in `f64`.
    pub fn distance(&self, other: &Point<T>) -> f64 {
        linalg::norm2(&self.vector_to(other))
    }
}

impl<T: fmt::Display> fmt::Display for Point<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl<T> From<Vec<T>> for Point<T> {
    fn from(v: Vec<T>) -> Self {
        Point(v)
    }
}

impl<T: Clone, const N: usize> From<[T; N]> for Point<T> {
    fn from(v: [T; N]) -> Self {
        Point(v.to_vec())
    }
}
