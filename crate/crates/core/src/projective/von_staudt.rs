//! Coordinates on a projective line from harmonic constructions alone.
//!
//! With a frame `P0 -> 0`, `P1 -> 1`, `Pinf -> inf`, the midpoint of two
//! constructed points `P, Q` is the harmonic conjugate of `Pinf` with respect
//! to `P` and `Q`. Repeated bisection of `[P0, P1]` by complete quadrangles
//! therefore reaches every dyadic rational `m / 2^k`, and locating a target
//! point among those needs nothing but the separation of point pairs.

use serde::Serialize;

use crate::error::{GeometryError, Result};
use crate::scalar::{Field, Rational, RealField};

use super::{collinear, harmonic_conjugate_synthetic, separates, ProjectivePoint};

/// A dyadic rational `numerator / 2^depth`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DyadicCoordinate {
    pub numerator: u64,
    pub depth: u32,
    /// Set when the target lies outside `[P0, P1]`; the value is then the
    /// nearer endpoint.
    pub out_of_range: bool,
}

impl DyadicCoordinate {
    pub fn to_f64(&self) -> f64 {
        self.numerator as f64 / 2f64.powi(self.depth as i32)
    }

    pub fn to_rational(&self) -> Rational {
        Rational::new(self.numerator.into(), (1u64 << self.depth).into())
    }
}

/// Closed segment from `p` to `q` that avoids `away`.
fn in_segment<T: RealField>(
    p: &ProjectivePoint<T>,
    q: &ProjectivePoint<T>,
    away: &ProjectivePoint<T>,
    x: &ProjectivePoint<T>,
) -> Result<bool> {
    Ok(x.same_point(p) || x.same_point(q) || separates(p, q, x, away)?)
}

/// Dyadic coordinate of `x` in the scale fixed by `(p0, p1, pinf)`, found by
/// `depth` synthetic bisections using the auxiliary pair `e`, `f` (with `f`
/// on the line through `pinf` and `e`).
///
/// The returned value is the dyadic `m / 2^depth` nearest to the coordinate
/// of `x`; one extra bisection of the final interval decides the rounding.
pub fn von_staudt_coordinate<T: RealField>(
    p0: &ProjectivePoint<T>,
    p1: &ProjectivePoint<T>,
    pinf: &ProjectivePoint<T>,
    x: &ProjectivePoint<T>,
    depth: u32,
    e: &ProjectivePoint<T>,
    f: &ProjectivePoint<T>,
) -> Result<DyadicCoordinate> {
    if depth == 0 || depth > 62 {
        return Err(GeometryError::InvalidConfig("depth must be in 1..=62"));
    }
    if p0.same_point(p1) || p0.same_point(pinf) || p1.same_point(pinf) {
        return Err(GeometryError::DegenerateFrame);
    }
    if !collinear(&[p0, p1, pinf, x]) {
        return Err(GeometryError::NonCollinear);
    }
    if x.same_point(pinf) {
        return Err(GeometryError::DegenerateInput(
            "X coincides with the point at infinity",
        ));
    }

    if !in_segment(p0, p1, pinf, x)? {
        // Below zero iff X lies on the arc from Pinf to P0 avoiding P1.
        let below = separates(pinf, p0, x, p1)?;
        return Ok(DyadicCoordinate {
            numerator: if below { 0 } else { 1 << depth },
            depth,
            out_of_range: true,
        });
    }

    let mut lo = p0.normalized();
    let mut hi = p1.normalized();
    let mut numerator: u64 = 0;
    for step in 1..=depth {
        let mid = harmonic_conjugate_synthetic(&lo, &hi, pinf, e, f)?;
        if x.same_point(&mid) {
            let remaining = depth - step;
            return Ok(DyadicCoordinate {
                numerator: (2 * numerator + 1) << remaining,
                depth,
                out_of_range: false,
            });
        }
        if in_segment(&lo, &mid, pinf, x)? {
            hi = mid;
            numerator *= 2;
        } else {
            lo = mid;
            numerator = 2 * numerator + 1;
        }
    }
    if !x.same_point(&lo) && !x.same_point(&hi) {
        let mid = harmonic_conjugate_synthetic(&lo, &hi, pinf, e, f)?;
        if !in_segment(&lo, &mid, pinf, x)? || x.same_point(&mid) {
            numerator += 1;
        }
    } else if x.same_point(&hi) {
        numerator += 1;
    }
    Ok(DyadicCoordinate {
        numerator,
        depth,
        out_of_range: false,
    })
}

/// Analytic coordinate of `x` in the frame, `[X, P1, P0, Pinf]`.
pub fn analytic_coordinate<T: Field>(
    p0: &ProjectivePoint<T>,
    p1: &ProjectivePoint<T>,
    pinf: &ProjectivePoint<T>,
    x: &ProjectivePoint<T>,
) -> Result<super::ProjectiveScalar<T>> {
    super::cross_ratio_of(x, p1, p0, pinf)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::point::Point;
    use crate::projective::{default_auxiliaries, harmonic_conjugate_analytic, ProjectiveScalar};

    fn r2(x: Rational, y: Rational) -> ProjectivePoint<Rational> {
        ProjectivePoint::from_affine(&Point(vec![x, y]))
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    /// Frame on the x-axis with the point at infinity ideal.
    fn axis_frame() -> [ProjectivePoint<Rational>; 3] {
        [
            r2(q(0, 1), q(0, 1)),
            r2(q(1, 1), q(0, 1)),
            ProjectivePoint::ideal(&[q(1, 1), q(0, 1)]).unwrap(),
        ]
    }

    #[test]
    fn first_bisection_is_one_half() {
        let [p0, p1, pinf] = axis_frame();
        let (e, f) = default_auxiliaries(&p0, &pinf).unwrap();
        let x = harmonic_conjugate_analytic(&p0, &p1, &pinf).unwrap();
        let c = von_staudt_coordinate(&p0, &p1, &pinf, &x, 1, &e, &f).unwrap();
        assert_eq!(c.to_rational(), q(1, 2));
        assert!(!c.out_of_range);
    }

    #[test]
    fn recovers_three_eighths_in_a_finite_frame() {
        // Frame on the line y = x/2 + 1 with Pinf a finite point.
        let p0 = r2(q(0, 1), q(1, 1));
        let p1 = r2(q(2, 1), q(2, 1));
        let pinf = r2(q(-4, 1), q(-1, 1));
        // X = P0' + t Pinf' where P1 = P0' + Pinf'; its coordinate is t.
        let (a, b) = {
            // Solve P1 = a P0 + b Pinf in homogeneous coordinates (w, x, y).
            let (p, i, r) = (p0.coords(), pinf.coords(), p1.coords());
            let det = p[0].clone() * i[1].clone() - i[0].clone() * p[1].clone();
            let a = (r[0].clone() * i[1].clone() - i[0].clone() * r[1].clone()) / det.clone();
            let b = (p[0].clone() * r[1].clone() - r[0].clone() * p[1].clone()) / det;
            (a, b)
        };
        let t = q(3, 8);
        let coords: Vec<Rational> = (0..3)
            .map(|k| {
                a.clone() * p0.coords()[k].clone()
                    + t.clone() * b.clone() * pinf.coords()[k].clone()
            })
            .collect();
        let x = ProjectivePoint::new(coords).unwrap();
        assert_eq!(
            analytic_coordinate(&p0, &p1, &pinf, &x).unwrap(),
            ProjectiveScalar::Finite(t.clone())
        );
        let e = r2(q(0, 1), q(5, 1));
        let f = r2(q(-2, 1), q(2, 1));
        let c = von_staudt_coordinate(&p0, &p1, &pinf, &x, 3, &e, &f).unwrap();
        assert_eq!(c.to_rational(), t);
    }

    #[test]
    fn approximates_point_three() {
        let [p0, p1, pinf] = axis_frame();
        let (e, f) = default_auxiliaries(&p0, &pinf).unwrap();
        let x = r2(q(3, 10), q(0, 1));
        let c = von_staudt_coordinate(&p0, &p1, &pinf, &x, 10, &e, &f).unwrap();
        assert!((c.to_f64() - 0.3).abs() <= 2f64.powi(-11));
        assert_eq!(c.numerator, 307); // 0.3 * 1024 = 307.2
    }

    #[test]
    fn out_of_range_targets_snap_to_endpoints() {
        let [p0, p1, pinf] = axis_frame();
        let (e, f) = default_auxiliaries(&p0, &pinf).unwrap();
        let below =
            von_staudt_coordinate(&p0, &p1, &pinf, &r2(q(-2, 1), q(0, 1)), 4, &e, &f).unwrap();
        assert!(below.out_of_range);
        assert_eq!(below.numerator, 0);
        let above =
            von_staudt_coordinate(&p0, &p1, &pinf, &r2(q(7, 3), q(0, 1)), 4, &e, &f).unwrap();
        assert!(above.out_of_range);
        assert_eq!(above.to_rational(), q(1, 1));
    }

    #[test]
    fn frame_errors() {
        let [p0, _, pinf] = axis_frame();
        let (e, f) = default_auxiliaries(&p0, &pinf).unwrap();
        assert_eq!(
            von_staudt_coordinate(&p0, &p0, &pinf, &p0, 3, &e, &f),
            Err(GeometryError::DegenerateFrame)
        );
        let off = r2(q(1, 2), q(1, 2));
        assert_eq!(
            von_staudt_coordinate(&p0, &r2(q(1, 1), q(0, 1)), &pinf, &off, 3, &e, &f),
            Err(GeometryError::NonCollinear)
        );
    }
}
