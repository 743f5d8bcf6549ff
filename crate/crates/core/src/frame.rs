//! Affine coordinate frames on 2-planes of an ambient space.

use crate::error::{GeometryError, Result};
use crate::linalg;
use crate::point::Point;
use crate::projective::ProjectivePoint;
use crate::scalar::Field;

/// The plane `origin + s u + t v`, with plane coordinates `(s, t)`.
#[derive(Clone, Debug)]
pub struct PlaneFrame<T> {
    pub origin: Point<T>,
    pub u: Vec<T>,
    pub v: Vec<T>,
}

impl<T: Field> PlaneFrame<T> {
    pub fn new(origin: Point<T>, u: Vec<T>, v: Vec<T>) -> Result<Self> {
        if u.len() != origin.dim() || v.len() != origin.dim() {
            return Err(GeometryError::DimensionMismatch {
                expected: origin.dim(),
                found: u.len().max(v.len()),
            });
        }
        if linalg::rank(&[u.clone(), v.clone()]) < 2 {
            return Err(GeometryError::DegenerateFrame);
        }
        Ok(PlaneFrame { origin, u, v })
    }

    /// Frame with origin `a` and axes towards `b` and `c`.
    pub fn through(a: &Point<T>, b: &Point<T>, c: &Point<T>) -> Result<Self> {
        Self::new(a.clone(), a.vector_to(b), a.vector_to(c))
    }

    /// The standard frame of the plane itself.
    pub fn standard() -> Self {
        PlaneFrame {
            origin: Point::origin(2),
            u: vec![T::one(), T::zero()],
            v: vec![T::zero(), T::one()],
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.origin.dim()
    }

    pub fn to_ambient(&self, p: &Point<T>) -> Point<T> {
        let q = self.origin.offset(&self.u, &p.0[0]);
        q.offset(&self.v, &p.0[1])
    }

    /// Plane coordinates of `p`, which is assumed to lie in the plane.
    pub fn to_plane(&self, p: &Point<T>) -> Point<T> {
        let d = self.origin.vector_to(p);
        let (uu, uv, vv) = (
            linalg::dot(&self.u, &self.u),
            linalg::dot(&self.u, &self.v),
            linalg::dot(&self.v, &self.v),
        );
        let (du, dv) = (linalg::dot(&d, &self.u), linalg::dot(&d, &self.v));
        let det = linalg::det2(&uu, &uv, &uv, &vv);
        Point(vec![
            linalg::det2(&du, &uv, &dv, &vv) / det.clone(),
            linalg::det2(&uu, &du, &uv, &dv) / det,
        ])
    }

    /// Lifts a homogeneous plane point `(w, s, t)` to ambient homogeneous
    /// coordinates; ideal points stay ideal.
    pub fn lift(&self, p: &ProjectivePoint<T>) -> Result<ProjectivePoint<T>> {
        let c = p.coords();
        let mut out = vec![c[0].clone()];
        for k in 0..self.ambient_dim() {
            out.push(
                c[0].clone() * self.origin.0[k].clone()
                    + c[1].clone() * self.u[k].clone()
                    + c[2].clone() * self.v[k].clone(),
            );
        }
        ProjectivePoint::new(out)
    }

    /// Homogeneous plane coordinates of an ambient affine point.
    pub fn project(&self, p: &Point<T>) -> ProjectivePoint<T> {
        ProjectivePoint::from_affine(&self.to_plane(p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    #[test]
    fn round_trip_in_space() {
        let q = |n: i64, d: i64| Rational::from_ratio(n, d);
        let f = PlaneFrame::new(
            Point(vec![q(1, 1), q(0, 1), q(2, 1)]),
            vec![q(1, 2), q(1, 1), q(0, 1)],
            vec![q(0, 1), q(1, 3), q(-1, 1)],
        )
        .unwrap();
        let p = Point(vec![q(3, 7), q(-5, 2)]);
        let a = f.to_ambient(&p);
        assert_eq!(f.to_plane(&a), p);
        let lifted = f.lift(&ProjectivePoint::from_affine(&p)).unwrap();
        assert_eq!(lifted.to_affine().unwrap(), a);
        let ideal = f
            .lift(&ProjectivePoint::ideal(&[q(1, 1), q(0, 1)]).unwrap())
            .unwrap();
        assert!(ideal.is_ideal());
    }

    #[test]
    fn rejects_parallel_axes() {
        let f = PlaneFrame::new(Point(vec![0.0, 0.0]), vec![1.0, 2.0], vec![2.0, 4.0]);
        assert_eq!(f.unwrap_err(), GeometryError::DegenerateFrame);
    }
}
