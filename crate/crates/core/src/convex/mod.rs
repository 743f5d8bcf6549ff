//! Bounded convex bodies and their chords.
//!
//! A body only has to answer two questions to carry a Hilbert metric: where
//! a point sits relative to it, and where a line through an interior point
//! leaves it. [`ConvexDomain`] captures exactly that, and is implemented by
//! exact-capable polytopes, ellipsoids and membership oracles.

mod ellipsoid;
mod flats;
mod nesting;
mod oracle;
mod polytope;

pub use ellipsoid::Ellipsoid;
pub use flats::{degenerate_flats, FlatPair, FlatPiece, Section};
pub use nesting::{is_nested, is_nested_sampled};
pub use oracle::{Membership, OracleBody};
pub use polytope::{Facet, HalfSpace, Polytope};

use crate::error::{GeometryError, Result};
use crate::point::Point;
use crate::scalar::RealField;

/// Location of a point relative to a closed body.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Position {
    Interior,
    Boundary,
    Exterior,
}

/// A bounded convex body with nonempty interior.
pub trait ConvexDomain<T: RealField> {
    fn dim(&self) -> usize;

    /// `Boundary` within distance `eps` of the boundary. With `eps == 0`
    /// the test is as sharp as the arithmetic allows.
    fn classify(&self, p: &Point<T>, eps: f64) -> Position;

    /// Parameters `(t_min, t_max)` where `origin + t * direction` leaves the
    /// body. `origin` must be interior, so `t_min < 0 < t_max`.
    fn clip_line(&self, origin: &Point<T>, direction: &[T]) -> Result<(T, T)>;

    /// Some interior point.
    fn interior_point(&self) -> Point<T>;
}

/// The chord `X, A, B, Y` of a body through two interior points, recorded
/// with its line parameters (`A` at 0, `B` at 1).
#[derive(Clone, Debug, PartialEq)]
pub struct Chord<T> {
    pub x: Point<T>,
    pub a: Point<T>,
    pub b: Point<T>,
    pub y: Point<T>,
    pub t_x: T,
    pub t_y: T,
}

impl<T: RealField> Chord<T> {
    pub fn direction(&self) -> Vec<T> {
        self.a.vector_to(&self.b)
    }

    pub fn point_at(&self, t: &T) -> Point<T> {
        self.a.offset(&self.direction(), t)
    }

    /// `[X, Y, B, A] = (YA / YB) (XB / XA)` from the line parameters.
    pub fn cross_ratio(&self) -> T {
        let one = T::one();
        (self.t_y.clone() / (self.t_y.clone() - one.clone()))
            * ((one - self.t_x.clone()) / -self.t_x.clone())
    }

    /// The same chord traversed from `B` to `A`.
    pub fn reversed(&self) -> Chord<T> {
        let one = T::one();
        Chord {
            x: self.y.clone(),
            a: self.b.clone(),
            b: self.a.clone(),
            y: self.x.clone(),
            t_x: one.clone() - self.t_y.clone(),
            t_y: one - self.t_x.clone(),
        }
    }
}

fn check_dim<T: RealField, D: ConvexDomain<T> + ?Sized>(body: &D, p: &Point<T>) -> Result<()> {
    if p.dim() != body.dim() {
        return Err(GeometryError::DimensionMismatch {
            expected: body.dim(),
            found: p.dim(),
        });
    }
    Ok(())
}

/// True when `a` and `b` coincide (exactly, or to float tolerance).
pub(crate) fn coincident<T: RealField>(a: &Point<T>, b: &Point<T>) -> bool {
    let scale = crate::linalg::max_magnitude(a.coords())
        .max(crate::linalg::max_magnitude(b.coords()))
        .max(1.0);
    a.vector_to(b).iter().all(|c| c.negligible(scale * 1e-3))
}

/// Chord of `body` through the interior points `a != b`.
pub fn chord<T: RealField, D: ConvexDomain<T> + ?Sized>(
    body: &D,
    a: &Point<T>,
    b: &Point<T>,
) -> Result<Chord<T>> {
    check_dim(body, a)?;
    check_dim(body, b)?;
    if coincident(a, b) {
        return Err(GeometryError::CoincidentPoints);
    }
    if body.classify(a, 0.0) != Position::Interior || body.classify(b, 0.0) != Position::Interior {
        return Err(GeometryError::PointsNotInterior);
    }
    let dir = a.vector_to(b);
    let (t_x, t_y) = body.clip_line(a, &dir)?;
    if !(t_x < T::zero() && t_y > T::one()) {
        return Err(GeometryError::PointsNotInterior);
    }
    Ok(Chord {
        x: a.offset(&dir, &t_x),
        a: a.clone(),
        b: b.clone(),
        y: a.offset(&dir, &t_y),
        t_x,
        t_y,
    })
}

/// A floating-point body of any supported kind.
#[derive(Clone, Debug)]
pub enum ConvexBody {
    Polytope(Polytope<f64>),
    Ellipsoid(Ellipsoid),
    Oracle(OracleBody),
}

impl ConvexBody {
    pub fn polygon(vertices: Vec<Point<f64>>) -> Result<Self> {
        Polytope::from_vertices(vertices).map(ConvexBody::Polytope)
    }

    pub fn from_halfspaces(halfspaces: Vec<HalfSpace<f64>>) -> Result<Self> {
        Polytope::from_halfspaces(halfspaces).map(ConvexBody::Polytope)
    }

    pub fn ball(center: Point<f64>, radius: f64) -> Result<Self> {
        Ellipsoid::ball(center, radius).map(ConvexBody::Ellipsoid)
    }

    /// The cube `[-h, h]^n`.
    pub fn cube(dim: usize, h: f64) -> Result<Self> {
        let mut hs = Vec::new();
        for j in 0..dim {
            let mut e = vec![0.0; dim];
            e[j] = 1.0;
            hs.push(HalfSpace::new(e.clone(), h));
            e[j] = -1.0;
            hs.push(HalfSpace::new(e, h));
        }
        Self::from_halfspaces(hs)
    }

    pub fn as_polytope(&self) -> Option<&Polytope<f64>> {
        match self {
            ConvexBody::Polytope(p) => Some(p),
            _ => None,
        }
    }

    pub fn bounding_box(&self) -> (Vec<f64>, Vec<f64>) {
        match self {
            ConvexBody::Polytope(p) => p.bounding_box(),
            ConvexBody::Ellipsoid(e) => e.bounding_box(),
            ConvexBody::Oracle(o) => (o.lower().to_vec(), o.upper().to_vec()),
        }
    }

    /// Length of the bounding box diagonal.
    pub fn diameter(&self) -> f64 {
        let (lo, hi) = self.bounding_box();
        lo.iter()
            .zip(&hi)
            .map(|(a, b)| (b - a) * (b - a))
            .sum::<f64>()
            .sqrt()
    }
}

impl ConvexDomain<f64> for ConvexBody {
    fn dim(&self) -> usize {
        match self {
            ConvexBody::Polytope(p) => p.dim(),
            ConvexBody::Ellipsoid(e) => e.dim(),
            ConvexBody::Oracle(o) => o.dim(),
        }
    }

    fn classify(&self, p: &Point<f64>, eps: f64) -> Position {
        match self {
            ConvexBody::Polytope(b) => b.classify(p, eps),
            ConvexBody::Ellipsoid(b) => b.classify(p, eps),
            ConvexBody::Oracle(b) => b.classify(p, eps),
        }
    }

    fn clip_line(&self, origin: &Point<f64>, direction: &[f64]) -> Result<(f64, f64)> {
        match self {
            ConvexBody::Polytope(b) => b.clip_line(origin, direction),
            ConvexBody::Ellipsoid(b) => b.clip_line(origin, direction),
            ConvexBody::Oracle(b) => b.clip_line(origin, direction),
        }
    }

    fn interior_point(&self) -> Point<f64> {
        match self {
            ConvexBody::Polytope(b) => b.interior_point(),
            ConvexBody::Ellipsoid(b) => b.interior_point(),
            ConvexBody::Oracle(b) => b.interior_point(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Field, Rational};

    fn disk() -> ConvexBody {
        ConvexBody::ball(Point(vec![0.0, 0.0]), 1.0).unwrap()
    }

    #[test]
    fn classify_examples() {
        let d = disk();
        assert_eq!(d.classify(&Point(vec![0.0, 0.0]), 1e-9), Position::Interior);
        assert_eq!(d.classify(&Point(vec![1.0, 0.0]), 1e-9), Position::Boundary);
        let sq = ConvexBody::polygon(vec![
            Point(vec![0.0, 0.0]),
            Point(vec![1.0, 0.0]),
            Point(vec![1.0, 1.0]),
            Point(vec![0.0, 1.0]),
        ])
        .unwrap();
        assert_eq!(
            sq.classify(&Point(vec![2.0, 2.0]), 1e-9),
            Position::Exterior
        );
    }

    #[test]
    fn disk_axis_chord() {
        let c = chord(&disk(), &Point(vec![0.0, 0.0]), &Point(vec![0.5, 0.0])).unwrap();
        assert!(c.x.distance(&Point(vec![-1.0, 0.0])) < 1e-15);
        assert!(c.y.distance(&Point(vec![1.0, 0.0])) < 1e-15);
        assert!((c.cross_ratio() - 3.0).abs() < 1e-14);
    }

    #[test]
    fn square_diagonal_chord() {
        // Clipping against x = +-1, y = +-1 by hand: t = +-2 on both axes.
        let sq = ConvexBody::cube(2, 1.0).unwrap();
        let c = chord(&sq, &Point(vec![0.0, 0.0]), &Point(vec![0.5, 0.5])).unwrap();
        assert_eq!((c.t_x, c.t_y), (-2.0, 2.0));
        assert_eq!(c.x, Point(vec![-1.0, -1.0]));
        assert_eq!(c.y, Point(vec![1.0, 1.0]));
    }

    #[test]
    fn triangle_chord_is_exact() {
        let q = |n: i64| Rational::from_i64(n);
        let t = Polytope::from_vertices(vec![
            Point(vec![q(0), q(0)]),
            Point(vec![q(4), q(0)]),
            Point(vec![q(0), q(4)]),
        ])
        .unwrap();
        let c = chord(&t, &Point(vec![q(1), q(1)]), &Point(vec![q(2), q(1)])).unwrap();
        assert_eq!(c.x, Point(vec![q(0), q(1)]));
        assert_eq!(c.y, Point(vec![q(3), q(1)]));
        let rev = chord(&t, &c.b, &c.a).unwrap();
        assert_eq!(rev, c.reversed());
    }

    #[test]
    fn chord_errors() {
        let d = disk();
        let o = Point(vec![0.0, 0.0]);
        assert_eq!(chord(&d, &o, &o), Err(GeometryError::CoincidentPoints));
        assert_eq!(
            chord(&d, &o, &Point(vec![1.0, 0.0])),
            Err(GeometryError::PointsNotInterior)
        );
        assert_eq!(
            chord(&d, &o, &Point(vec![0.0, 0.0, 0.1])),
            Err(GeometryError::DimensionMismatch {
                expected: 2,
                found: 3
            })
        );
    }
}
