#![allow(dead_code)]

use projmetric::convex::{ConvexBody, ConvexDomain, Polytope, Position};
use projmetric::scalar::{Field, Rational};
use projmetric::Point;
use rand::Rng;

pub fn p2(x: f64, y: f64) -> Point<f64> {
    Point(vec![x, y])
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::from_ratio(n, d)
}

pub fn disk() -> ConvexBody {
    ConvexBody::ball(Point(vec![0.0, 0.0]), 1.0).unwrap()
}

pub fn ball3() -> ConvexBody {
    ConvexBody::ball(Point(vec![0.0, 0.0, 0.0]), 1.0).unwrap()
}

pub fn triangle() -> ConvexBody {
    ConvexBody::polygon(vec![p2(0.0, 0.0), p2(4.0, 0.0), p2(0.0, 4.0)]).unwrap()
}

pub fn square() -> ConvexBody {
    ConvexBody::cube(2, 1.0).unwrap()
}

pub fn tetrahedron() -> ConvexBody {
    ConvexBody::Polytope(
        Polytope::from_vertices(vec![
            Point(vec![0.0, 0.0, 0.0]),
            Point(vec![1.0, 0.0, 0.0]),
            Point(vec![0.0, 1.0, 0.0]),
            Point(vec![0.0, 0.0, 1.0]),
        ])
        .unwrap(),
    )
}

/// Convex octagon with jittered vertex angles and radii.
pub fn random_octagon(rng: &mut impl Rng) -> ConvexBody {
    let pts = (0..8)
        .map(|k| {
            let th = (k as f64 + rng.random_range(-0.3..0.3)) * std::f64::consts::TAU / 8.0;
            let r = rng.random_range(0.8..1.2);
            p2(r * th.cos(), r * th.sin())
        })
        .collect();
    ConvexBody::polygon(pts).unwrap()
}

/// Uniform point of the bounding box that is interior with a margin of
/// `1e-6` of the diameter.
pub fn interior_point(body: &ConvexBody, rng: &mut impl Rng) -> Point<f64> {
    let (lo, hi) = body.bounding_box();
    let margin = 1e-6 * body.diameter();
    loop {
        let p = Point(
            lo.iter()
                .zip(&hi)
                .map(|(a, b)| rng.random_range(*a..*b))
                .collect(),
        );
        if body.classify(&p, margin) == Position::Interior {
            return p;
        }
    }
}

/// Closed-form Klein-model distance on the unit ball.
pub fn klein_distance(a: &[f64], b: &[f64]) -> f64 {
    let dot = |u: &[f64], v: &[f64]| u.iter().zip(v).map(|(x, y)| x * y).sum::<f64>();
    let c = (1.0 - dot(a, b)) / ((1.0 - dot(a, a)) * (1.0 - dot(b, b))).sqrt();
    c.max(1.0).acosh()
}

pub fn rational_triangle() -> Polytope<Rational> {
    Polytope::from_vertices(vec![
        Point(vec![q(0, 1), q(0, 1)]),
        Point(vec![q(4, 1), q(0, 1)]),
        Point(vec![q(0, 1), q(4, 1)]),
    ])
    .unwrap()
}
