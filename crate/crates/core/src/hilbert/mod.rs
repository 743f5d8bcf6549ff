//! The Hilbert metric of a bounded convex body.
//!
//! For interior `A != B` on the chord `X, A, B, Y`,
//! `d(A, B) = scale * log [X, Y, B, A]`, with `[X, Y, B, A] = (YA/YB)(XB/XA)`.
//! Everything here works from the chord's line parameters (`A` at 0, `B` at
//! 1), which keeps the ratios free of coordinate cancellation.

mod triangle;

pub use triangle::{find_equality_triple, triangle_construction, TriangleCertificate};

use rayon::prelude::*;

use crate::convex::{chord, is_nested, Chord, ConvexBody, ConvexDomain, Position};
use crate::error::{GeometryError, Result};
use crate::point::Point;
use crate::scalar::RealField;

/// Distances closer to the boundary than this fraction of the chord are
/// refused in float mode.
pub const BOUNDARY_GUARD: f64 = 1e-13;

/// Multiplier applied to the log cross ratio.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HilbertConfig {
    scale: f64,
}

impl HilbertConfig {
    pub fn new(scale: f64) -> Result<Self> {
        if !(scale > 0.0 && scale.is_finite()) {
            return Err(GeometryError::InvalidConfig("scale must be positive"));
        }
        Ok(HilbertConfig { scale })
    }

    /// Scale 1, the unhalved normalisation.
    pub fn unhalved() -> Self {
        HilbertConfig { scale: 1.0 }
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }
}

impl Default for HilbertConfig {
    /// Scale 1/2, under which the unit ball is the Klein model of curvature -1.
    fn default() -> Self {
        HilbertConfig { scale: 0.5 }
    }
}

fn require_interior<T: RealField, D: ConvexDomain<T> + ?Sized>(
    body: &D,
    p: &Point<T>,
) -> Result<()> {
    if p.dim() != body.dim() {
        return Err(GeometryError::DimensionMismatch {
            expected: body.dim(),
            found: p.dim(),
        });
    }
    if body.classify(p, 0.0) != Position::Interior {
        return Err(GeometryError::PointsNotInterior);
    }
    Ok(())
}

/// `log [X, Y, B, A]` from chord parameters, at scale 1.
fn log_cross_ratio(t_x: f64, t_y: f64) -> f64 {
    (-1.0 / t_x).ln_1p() + (1.0 / (t_y - 1.0)).ln_1p()
}

fn guard(t_x: f64, t_y: f64) -> Result<()> {
    if (-t_x).min(t_y - 1.0) < BOUNDARY_GUARD * (t_y - t_x) {
        return Err(GeometryError::NumericallyUnstable);
    }
    Ok(())
}

/// Distance carried by a chord.
pub fn chord_distance<T: RealField>(ch: &Chord<T>, cfg: &HilbertConfig) -> Result<f64> {
    let (t_x, t_y) = (ch.t_x.to_f64(), ch.t_y.to_f64());
    if !T::EXACT {
        guard(t_x, t_y)?;
    }
    Ok(cfg.scale * log_cross_ratio(t_x, t_y))
}

/// `[X, Y, B, A]`, exact for exact bodies; 1 when `A = B`.
pub fn hilbert_cross_ratio<T: RealField, D: ConvexDomain<T> + ?Sized>(
    body: &D,
    a: &Point<T>,
    b: &Point<T>,
) -> Result<T> {
    require_interior(body, a)?;
    require_interior(body, b)?;
    if a == b {
        return Ok(T::one());
    }
    Ok(chord(body, a, b)?.cross_ratio())
}

/// Hilbert distance between interior points.
pub fn hilbert_distance<T: RealField, D: ConvexDomain<T> + ?Sized>(
    body: &D,
    a: &Point<T>,
    b: &Point<T>,
    cfg: &HilbertConfig,
) -> Result<f64> {
    require_interior(body, a)?;
    require_interior(body, b)?;
    if a == b {
        return Ok(0.0);
    }
    chord_distance(&chord(body, a, b)?, cfg)
}

/// Parameter `t` with `d(P(0), P(t)) = s` on a chord with end parameters
/// `t_x < 0 < t_y`; solves `[X, Y, P, A] = e^{s/scale}` in closed form.
fn parameter_at(t_x: f64, t_y: f64, s: f64, cfg: &HilbertConfig) -> f64 {
    let k = (s / cfg.scale).exp();
    if !k.is_finite() {
        return t_y;
    }
    t_x * t_y * (1.0 - k) / (t_y - k * t_x)
}

/// The point of segment `[A, B]` at distance `s` from `A`.
pub fn geodesic_point<D: ConvexDomain<f64> + ?Sized>(
    body: &D,
    a: &Point<f64>,
    b: &Point<f64>,
    s: f64,
    cfg: &HilbertConfig,
) -> Result<Point<f64>> {
    let ch = chord(body, a, b)?;
    let total = chord_distance(&ch, cfg)?;
    if !(s >= 0.0 && s <= total * (1.0 + 1e-12)) {
        return Err(GeometryError::OutOfRange);
    }
    if s == 0.0 {
        return Ok(a.clone());
    }
    if s >= total {
        return Ok(b.clone());
    }
    Ok(ch.point_at(&parameter_at(ch.t_x, ch.t_y, s, cfg)))
}

fn directions(dim: usize, n: usize) -> Result<Vec<Vec<f64>>> {
    use std::f64::consts::PI;
    match dim {
        1 => Ok((0..n)
            .map(|k| vec![if k % 2 == 0 { 1.0 } else { -1.0 }])
            .collect()),
        2 => Ok((0..n)
            .map(|k| {
                let th = 2.0 * PI * k as f64 / n as f64;
                vec![th.cos(), th.sin()]
            })
            .collect()),
        3 => {
            // Fibonacci lattice on the sphere.
            let golden = PI * (3.0 - 5f64.sqrt());
            Ok((0..n)
                .map(|k| {
                    let z = 1.0 - 2.0 * (k as f64 + 0.5) / n as f64;
                    let r = (1.0 - z * z).sqrt();
                    let phi = golden * k as f64;
                    vec![r * phi.cos(), r * phi.sin(), z]
                })
                .collect())
        }
        d => Err(GeometryError::UnsupportedDimension(d)),
    }
}

/// Samples of the metric sphere of radius `r` about `center`.
pub fn ball_boundary<D: ConvexDomain<f64> + Sync + ?Sized>(
    body: &D,
    center: &Point<f64>,
    r: f64,
    n_samples: usize,
    cfg: &HilbertConfig,
) -> Result<Vec<Point<f64>>> {
    if !(r > 0.0 && r.is_finite()) {
        return Err(GeometryError::OutOfRange);
    }
    if n_samples < 3 {
        return Err(GeometryError::InvalidConfig(
            "at least 3 samples are required",
        ));
    }
    require_interior(body, center)?;
    directions(body.dim(), n_samples)?
        .into_par_iter()
        .map(|dir| {
            let (lo, hi) = body.clip_line(center, &dir)?;
            let t = parameter_at(lo, hi, r, cfg);
            guard(lo / t, hi / t)?;
            Ok(center.offset(&dir, &t))
        })
        .collect()
}

/// Distances of `A, B` in a body and in a body containing it.
pub fn compare_nested(
    inner: &ConvexBody,
    outer: &ConvexBody,
    a: &Point<f64>,
    b: &Point<f64>,
    cfg: &HilbertConfig,
) -> Result<(f64, f64)> {
    if !is_nested(inner, outer)? {
        return Err(GeometryError::NotNested);
    }
    Ok((
        hilbert_distance(inner, a, b, cfg)?,
        hilbert_distance(outer, a, b, cfg)?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn disk() -> ConvexBody {
        ConvexBody::ball(Point(vec![0.0, 0.0]), 1.0).unwrap()
    }

    fn p(x: f64, y: f64) -> Point<f64> {
        Point(vec![x, y])
    }

    #[test]
    fn disk_distance_examples() {
        let cfg = HilbertConfig::default();
        let d = hilbert_distance(&disk(), &p(0.0, 0.0), &p(0.5, 0.0), &cfg).unwrap();
        assert!((d - 0.5 * 3f64.ln()).abs() < 1e-15);
        assert!((d - 0.5f64.atanh()).abs() < 1e-15);
        let d1 = hilbert_distance(
            &disk(),
            &p(0.0, 0.0),
            &p(0.5, 0.0),
            &HilbertConfig::unhalved(),
        )
        .unwrap();
        assert!((d1 - 3f64.ln()).abs() < 1e-15);
        assert_eq!(
            hilbert_distance(&disk(), &p(0.2, 0.1), &p(0.2, 0.1), &cfg),
            Ok(0.0)
        );
        assert_eq!(
            hilbert_distance(&disk(), &p(0.0, 0.0), &p(1.0, 0.0), &cfg),
            Err(GeometryError::PointsNotInterior)
        );
    }

    #[test]
    fn config_validation() {
        assert!(HilbertConfig::new(0.0).is_err());
        assert!(HilbertConfig::new(f64::NAN).is_err());
        assert_eq!(HilbertConfig::default().scale(), 0.5);
    }

    #[test]
    fn near_boundary_is_refused() {
        let cfg = HilbertConfig::default();
        let r = hilbert_distance(&disk(), &p(0.0, 0.0), &p(1.0 - 1e-15, 0.0), &cfg);
        assert_eq!(r, Err(GeometryError::NumericallyUnstable));
    }

    #[test]
    fn geodesic_midpoint_in_disk() {
        let cfg = HilbertConfig::default();
        let (a, b) = (p(0.0, 0.0), p(0.8, 0.0));
        let d = hilbert_distance(&disk(), &a, &b, &cfg).unwrap();
        let m = geodesic_point(&disk(), &a, &b, d / 2.0, &cfg).unwrap();
        assert!(m.distance(&p(0.5, 0.0)) < 1e-14);
        assert_eq!(geodesic_point(&disk(), &a, &b, 0.0, &cfg).unwrap(), a);
        assert_eq!(geodesic_point(&disk(), &a, &b, d, &cfg).unwrap(), b);
        assert_eq!(
            geodesic_point(&disk(), &a, &b, d * 1.1, &cfg),
            Err(GeometryError::OutOfRange)
        );
    }

    #[test]
    fn disk_balls_are_circles() {
        let cfg = HilbertConfig::default();
        let pts = ball_boundary(&disk(), &p(0.0, 0.0), 0.7, 12, &cfg).unwrap();
        assert_eq!(pts.len(), 12);
        for q in pts {
            assert!((q.distance(&p(0.0, 0.0)) - 0.7f64.tanh()).abs() < 1e-14);
        }
        assert!(ball_boundary(&disk(), &p(0.0, 0.0), 0.7, 2, &cfg).is_err());
        assert!(ball_boundary(&disk(), &p(0.0, 0.0), -1.0, 8, &cfg).is_err());
    }

    #[test]
    fn nested_disks() {
        let cfg = HilbertConfig::default();
        let inner = ConvexBody::ball(p(0.0, 0.0), 0.5).unwrap();
        let (di, dout) =
            compare_nested(&inner, &disk(), &p(0.0, 0.0), &p(0.25, 0.0), &cfg).unwrap();
        assert!((di - 0.5f64.atanh()).abs() < 1e-15);
        assert!((dout - 0.25f64.atanh()).abs() < 1e-15);
        assert_eq!(
            compare_nested(&disk(), &inner, &p(0.0, 0.0), &p(0.25, 0.0), &cfg),
            Err(GeometryError::NotNested)
        );
    }
}
