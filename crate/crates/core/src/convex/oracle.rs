use std::fmt;
use std::sync::Arc;

use crate::error::{GeometryError, Result};
use crate::point::Point;

use super::{ConvexDomain, Position};

/// Closed-set membership test. Must be pure: it may be called concurrently.
pub type Membership = Arc<dyn Fn(&[f64]) -> bool + Send + Sync>;

/// A convex body known only through membership queries.
#[derive(Clone)]
pub struct OracleBody {
    membership: Membership,
    lower: Vec<f64>,
    upper: Vec<f64>,
    interior: Point<f64>,
}

/// Relative bisection tolerance for boundary crossings.
const CHORD_TOL: f64 = 1e-12;

impl OracleBody {
    /// `lower..upper` must contain the body and `interior` must be a member.
    pub fn new(
        membership: Membership,
        lower: Vec<f64>,
        upper: Vec<f64>,
        interior: Point<f64>,
    ) -> Result<Self> {
        let n = lower.len();
        if n == 0 || upper.len() != n || interior.dim() != n {
            return Err(GeometryError::DimensionMismatch {
                expected: n,
                found: upper.len().max(interior.dim()),
            });
        }
        if lower
            .iter()
            .zip(&upper)
            .any(|(a, b)| !(a < b && b.is_finite() && a.is_finite()))
        {
            return Err(GeometryError::InvalidBody("empty or unbounded box".into()));
        }
        if !membership(interior.coords()) {
            return Err(GeometryError::PointsNotInterior);
        }
        Ok(OracleBody {
            membership,
            lower,
            upper,
            interior,
        })
    }

    pub fn dim(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    pub fn contains(&self, p: &[f64]) -> bool {
        let in_box = p
            .iter()
            .zip(self.lower.iter().zip(&self.upper))
            .all(|(x, (a, b))| a <= x && x <= b);
        in_box && (self.membership)(p)
    }

    pub fn diameter(&self) -> f64 {
        self.lower
            .iter()
            .zip(&self.upper)
            .map(|(a, b)| (b - a) * (b - a))
            .sum::<f64>()
            .sqrt()
    }

    /// Boundary crossing along `origin + t d`, `t > 0`, by bisection.
    fn crossing(&self, origin: &[f64], d: &[f64]) -> f64 {
        let norm = d.iter().map(|v| v * v).sum::<f64>().sqrt();
        let mut lo = 0.0;
        let mut hi = 1.01 * self.diameter() / norm;
        let tol = CHORD_TOL * self.diameter() / norm;
        let at = |t: f64| -> Vec<f64> { origin.iter().zip(d).map(|(o, v)| o + t * v).collect() };
        while hi - lo > tol {
            let mid = 0.5 * (lo + hi);
            if self.contains(&at(mid)) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }
}

impl fmt::Debug for OracleBody {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("OracleBody")
            .field("lower", &self.lower)
            .field("upper", &self.upper)
            .field("interior", &self.interior)
            .finish_non_exhaustive()
    }
}

impl ConvexDomain<f64> for OracleBody {
    fn dim(&self) -> usize {
        self.lower.len()
    }

    /// Membership only tells inside from outside; a member is reported as
    /// `Boundary` when one of the `2n` axis probes at distance `eps` fails.
    fn classify(&self, p: &Point<f64>, eps: f64) -> Position {
        if !self.contains(p.coords()) {
            return Position::Exterior;
        }
        let step = eps.max(CHORD_TOL * self.diameter());
        for k in 0..self.dim() {
            for s in [-step, step] {
                let mut q = p.0.clone();
                q[k] += s;
                if !self.contains(&q) {
                    return Position::Boundary;
                }
            }
        }
        Position::Interior
    }

    fn clip_line(&self, origin: &Point<f64>, direction: &[f64]) -> Result<(f64, f64)> {
        if direction.iter().all(|v| *v == 0.0) {
            return Err(GeometryError::ZeroDirection);
        }
        if !self.contains(origin.coords()) {
            return Err(GeometryError::PointsNotInterior);
        }
        let back: Vec<f64> = direction.iter().map(|v| -v).collect();
        let hi = self.crossing(origin.coords(), direction);
        let lo = -self.crossing(origin.coords(), &back);
        Ok((lo, hi))
    }

    fn interior_point(&self) -> Point<f64> {
        self.interior.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn disk_oracle_matches_closed_form() {
        let disk = OracleBody::new(
            Arc::new(|p: &[f64]| p[0] * p[0] + p[1] * p[1] <= 1.0),
            vec![-1.0, -1.0],
            vec![1.0, 1.0],
            Point(vec![0.0, 0.0]),
        )
        .unwrap();
        let (lo, hi) = disk.clip_line(&Point(vec![0.0, 0.5]), &[0.5, 0.0]).unwrap();
        let half = (0.75f64).sqrt() / 0.5;
        assert!((lo + half).abs() < 1e-11 && (hi - half).abs() < 1e-11);
        assert_eq!(
            disk.classify(&Point(vec![0.0, 0.0]), 1e-9),
            Position::Interior
        );
        assert_eq!(
            disk.classify(&Point(vec![0.6, 0.8]), 1e-9),
            Position::Boundary
        );
        assert_eq!(
            disk.classify(&Point(vec![0.9, 0.9]), 1e-9),
            Position::Exterior
        );
    }

    #[test]
    fn interior_point_must_be_member() {
        let r = OracleBody::new(
            Arc::new(|p: &[f64]| p[0].abs() <= 1.0),
            vec![-1.0],
            vec![1.0],
            Point(vec![2.0]),
        );
        assert_eq!(r.unwrap_err(), GeometryError::PointsNotInterior);
    }
}
