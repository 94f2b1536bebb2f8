use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use smallvec::SmallVec;

use crate::error::{Error, Result};

type Coords = SmallVec<[f64; 4]>;

/// A point (or displacement vector) in ℝⁿ, n ≥ 2.
#[derive(Clone, PartialEq)]
pub struct Point {
    coords: Coords,
}

impl Point {
    pub fn new(coords: &[f64]) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::InvalidDimension(coords.len()));
        }
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Self {
            coords: Coords::from_slice(coords),
        })
    }

    pub fn xy(x: f64, y: f64) -> Self {
        debug_assert!(x.is_finite() && y.is_finite());
        Self {
            coords: Coords::from_slice(&[x, y]),
        }
    }

    pub fn xyz(x: f64, y: f64, z: f64) -> Self {
        debug_assert!(x.is_finite() && y.is_finite() && z.is_finite());
        Self {
            coords: Coords::from_slice(&[x, y, z]),
        }
    }

    pub fn origin(dim: usize) -> Self {
        Self {
            coords: SmallVec::from_elem(0.0, dim),
        }
    }

    /// Unit vector along axis `axis`.
    pub fn basis(dim: usize, axis: usize) -> Self {
        let mut p = Self::origin(dim);
        p.coords[axis] = 1.0;
        p
    }

    pub(crate) fn from_iter_unchecked(it: impl IntoIterator<Item = f64>) -> Self {
        Self {
            coords: it.into_iter().collect(),
        }
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    #[inline]
    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    #[inline]
    pub fn dot(&self, other: &Point) -> f64 {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a * b)
            .sum()
    }

    #[inline]
    pub fn norm_sq(&self) -> f64 {
        self.dot(self)
    }

    #[inline]
    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    #[inline]
    pub fn dist(&self, other: &Point) -> f64 {
        self.dist_sq(other).sqrt()
    }

    #[inline]
    pub fn dist_sq(&self, other: &Point) -> f64 {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| (a - b) * (a - b))
            .sum()
    }

    /// `self + t (other - self)`.
    #[inline]
    pub fn lerp(&self, other: &Point, t: f64) -> Point {
        Point::from_iter_unchecked(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + t * (b - a)),
        )
    }

    /// `self + t * dir`.
    #[inline]
    pub fn offset(&self, dir: &Point, t: f64) -> Point {
        Point::from_iter_unchecked(self.coords.iter().zip(&dir.coords).map(|(a, d)| a + t * d))
    }

    pub fn normalized(&self) -> Option<Point> {
        let n = self.norm();
        (n > 0.0 && n.is_finite()).then(|| self * (1.0 / n))
    }

    pub fn check_dim(&self, dim: usize) -> Result<()> {
        if self.dim() == dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: dim,
                found: self.dim(),
            })
        }
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Point{:?}", self.coords.as_slice())
    }
}

impl fmt::Display for Point {
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

impl Add for &Point {
    type Output = Point;
    fn add(self, rhs: &Point) -> Point {
        Point::from_iter_unchecked(self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b))
    }
}

impl Sub for &Point {
    type Output = Point;
    fn sub(self, rhs: &Point) -> Point {
        Point::from_iter_unchecked(self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b))
    }
}

impl Mul<f64> for &Point {
    type Output = Point;
    fn mul(self, rhs: f64) -> Point {
        Point::from_iter_unchecked(self.coords.iter().map(|a| a * rhs))
    }
}

/// Nonnegative extended real: a finite value or +∞.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ExtendedReal {
    Finite(f64),
    Infinite,
}

impl ExtendedReal {
    pub fn finite(self) -> Option<f64> {
        match self {
            ExtendedReal::Finite(v) => Some(v),
            ExtendedReal::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, ExtendedReal::Finite(_))
    }

    pub fn to_f64(self) -> f64 {
        match self {
            ExtendedReal::Finite(v) => v,
            ExtendedReal::Infinite => f64::INFINITY,
        }
    }
}

impl From<f64> for ExtendedReal {
    fn from(v: f64) -> Self {
        if v.is_finite() {
            ExtendedReal::Finite(v)
        } else {
            ExtendedReal::Infinite
        }
    }
}

impl Add for ExtendedReal {
    type Output = ExtendedReal;
    fn add(self, rhs: ExtendedReal) -> ExtendedReal {
        match (self, rhs) {
            (ExtendedReal::Finite(a), ExtendedReal::Finite(b)) => ExtendedReal::from(a + b),
            _ => ExtendedReal::Infinite,
        }
    }
}

impl Eq for ExtendedReal {}

impl PartialOrd for ExtendedReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtendedReal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.to_f64().total_cmp(&other.to_f64())
    }
}

impl fmt::Display for ExtendedReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedReal::Finite(v) => write!(f, "{v}"),
            ExtendedReal::Infinite => write!(f, "inf"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_coordinates() {
        assert!(matches!(Point::new(&[1.0]), Err(Error::InvalidDimension(1))));
        assert!(matches!(Point::new(&[1.0, f64::NAN]), Err(Error::NonFinite)));
        assert!(Point::new(&[1.0, 2.0, 3.0]).is_ok());
    }

    #[test]
    fn extended_real_arithmetic() {
        let a = ExtendedReal::Finite(1.5);
        let b = ExtendedReal::Finite(2.0);
        assert_eq!(a + b, ExtendedReal::Finite(3.5));
        assert_eq!(a + ExtendedReal::Infinite, ExtendedReal::Infinite);
        assert!(a < b && b < ExtendedReal::Infinite);
        assert_eq!(ExtendedReal::from(f64::INFINITY), ExtendedReal::Infinite);
    }
}
