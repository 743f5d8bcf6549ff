use nalgebra::{DMatrix, DVector};

use crate::error::{GeometryError, Result};
use crate::point::Point;

use super::{ConvexDomain, Position};

/// `{x : (x - c)^T Q (x - c) <= 1}` with `Q` symmetric positive definite.
#[derive(Clone, Debug)]
pub struct Ellipsoid {
    center: DVector<f64>,
    shape: DMatrix<f64>,
    inverse: DMatrix<f64>,
}

impl Ellipsoid {
    pub fn new(center: Point<f64>, shape: Vec<Vec<f64>>) -> Result<Self> {
        let n = center.dim();
        if n == 0 {
            return Err(GeometryError::InvalidBody(
                "zero-dimensional ellipsoid".into(),
            ));
        }
        if shape.len() != n || shape.iter().any(|r| r.len() != n) {
            return Err(GeometryError::DimensionMismatch {
                expected: n,
                found: shape.len(),
            });
        }
        let m = DMatrix::from_fn(n, n, |i, j| shape[i][j]);
        if m.iter().chain(center.coords()).any(|v| !v.is_finite()) {
            return Err(GeometryError::InvalidBody("non-finite entry".into()));
        }
        let scale = m.amax().max(f64::MIN_POSITIVE);
        if (&m - m.transpose()).amax() > 1e-12 * scale {
            return Err(GeometryError::InvalidBody(
                "shape matrix is not symmetric".into(),
            ));
        }
        let m = (&m + m.transpose()) * 0.5;
        let eig = m.clone().symmetric_eigen();
        if eig.eigenvalues.min() <= 1e-12 * scale {
            return Err(GeometryError::InvalidBody(
                "shape matrix is not positive definite".into(),
            ));
        }
        let inverse = m.clone().cholesky().expect("positive definite").inverse();
        Ok(Ellipsoid {
            center: DVector::from_column_slice(center.coords()),
            shape: m,
            inverse,
        })
    }

    pub fn ball(center: Point<f64>, radius: f64) -> Result<Self> {
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(GeometryError::InvalidBody("radius must be positive".into()));
        }
        let n = center.dim();
        let mut q = vec![vec![0.0; n]; n];
        for (i, row) in q.iter_mut().enumerate() {
            row[i] = 1.0 / (radius * radius);
        }
        Self::new(center, q)
    }

    pub fn dim(&self) -> usize {
        self.center.len()
    }

    pub fn center(&self) -> Point<f64> {
        Point(self.center.iter().copied().collect())
    }

    pub fn shape(&self) -> &DMatrix<f64> {
        &self.shape
    }

    /// `Q^{-1}`, whose quadratic form is the squared support width.
    pub fn inverse_shape(&self) -> &DMatrix<f64> {
        &self.inverse
    }

    /// `(p - c)^T Q (p - c)`: below 1 inside.
    pub fn level(&self, p: &[f64]) -> f64 {
        let d = DVector::from_column_slice(p) - &self.center;
        d.dot(&(&self.shape * &d))
    }

    /// `max_{x in E} n . x`.
    pub fn support(&self, normal: &[f64]) -> f64 {
        let n = DVector::from_column_slice(normal);
        n.dot(&self.center) + n.dot(&(&self.inverse * &n)).sqrt()
    }

    pub fn bounding_box(&self) -> (Vec<f64>, Vec<f64>) {
        let half: Vec<f64> = (0..self.dim())
            .map(|i| self.inverse[(i, i)].sqrt())
            .collect();
        (
            self.center.iter().zip(&half).map(|(c, h)| c - h).collect(),
            self.center.iter().zip(&half).map(|(c, h)| c + h).collect(),
        )
    }
}

impl ConvexDomain<f64> for Ellipsoid {
    fn dim(&self) -> usize {
        self.center.len()
    }

    /// The distance used is the radial gap along the ray from the center,
    /// exact for balls and within the axis ratio of the true distance.
    fn classify(&self, p: &Point<f64>, eps: f64) -> Position {
        let level = self.level(p.coords());
        if eps == 0.0 {
            return if level < 1.0 {
                Position::Interior
            } else if level == 1.0 {
                Position::Boundary
            } else {
                Position::Exterior
            };
        }
        let r = (DVector::from_column_slice(p.coords()) - &self.center).norm();
        let gap = if level > 0.0 {
            r - r / level.sqrt()
        } else {
            f64::NEG_INFINITY
        };
        if gap > eps {
            Position::Exterior
        } else if gap >= -eps {
            Position::Boundary
        } else {
            Position::Interior
        }
    }

    fn clip_line(&self, origin: &Point<f64>, direction: &[f64]) -> Result<(f64, f64)> {
        let d = DVector::from_column_slice(direction);
        let o = DVector::from_column_slice(origin.coords()) - &self.center;
        let qd = &self.shape * &d;
        let a = d.dot(&qd);
        if a <= 0.0 {
            return Err(GeometryError::ZeroDirection);
        }
        let b = o.dot(&qd);
        let k = o.dot(&(&self.shape * &o)) - 1.0;
        if k >= 0.0 {
            return Err(GeometryError::PointsNotInterior);
        }
        // Roots of a t^2 + 2 b t + k, avoiding cancellation.
        let disc = (b * b - a * k).sqrt();
        let q = -(b + b.signum() * disc);
        let (t1, t2) = if b == 0.0 {
            (-disc / a, disc / a)
        } else {
            (q / a, k / q)
        };
        Ok((t1.min(t2), t1.max(t2)))
    }

    fn interior_point(&self) -> Point<f64> {
        self.center()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_shapes() {
        let c = Point(vec![0.0, 0.0]);
        assert!(Ellipsoid::new(c.clone(), vec![vec![1.0, 0.0], vec![0.0, -1.0]]).is_err());
        assert!(Ellipsoid::new(c.clone(), vec![vec![1.0, 0.5], vec![0.0, 1.0]]).is_err());
        assert!(Ellipsoid::new(c, vec![vec![1.0]]).is_err());
    }

    #[test]
    fn axis_aligned_clip_and_support() {
        // Semi-axes 2 and 1 centred at (1, 0).
        let e =
            Ellipsoid::new(Point(vec![1.0, 0.0]), vec![vec![0.25, 0.0], vec![0.0, 1.0]]).unwrap();
        let (lo, hi) = e.clip_line(&Point(vec![1.0, 0.0]), &[1.0, 0.0]).unwrap();
        assert!((lo + 2.0).abs() < 1e-15 && (hi - 2.0).abs() < 1e-15);
        let (lo, hi) = e.clip_line(&Point(vec![2.0, 0.0]), &[0.5, 0.0]).unwrap();
        assert!((lo + 6.0).abs() < 1e-14 && (hi - 2.0).abs() < 1e-14);
        assert!((e.support(&[1.0, 0.0]) - 3.0).abs() < 1e-15);
        assert!((e.support(&[0.0, -1.0]) - 1.0).abs() < 1e-15);
        let (lo, hi) = e.bounding_box();
        assert_eq!((lo, hi), (vec![-1.0, -1.0], vec![3.0, 1.0]));
    }
}
