mod common;

use common::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use projmetric::cayley_klein::{ck_distance, laguerre_angle, Convention, LinePair, Quadric};
use projmetric::hilbert::{hilbert_distance, HilbertConfig};
use projmetric::projective::{Collineation, ProjectivePoint};
use projmetric::Point;

fn hp(v: &[f64]) -> ProjectivePoint<f64> {
    ProjectivePoint::new(v.to_vec()).unwrap()
}

fn cross(a: &[f64], b: &[f64]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Angle between the lines spanned by `a` and `b`, in `[0, pi/2]`.
fn line_angle(a: &[f64], b: &[f64]) -> f64 {
    let c = cross(a, b);
    dot(&c, &c).sqrt().atan2(dot(a, b).abs())
}

fn vec3() -> impl Strategy<Value = Vec<f64>> {
    proptest::collection::vec(-1.0f64..1.0, 3).prop_filter("nonzero", |v| dot(v, v) > 1e-4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn laguerre_matches_the_euclidean_angle(
        l in (-1.0f64..1.0, -1.0f64..1.0),
        m in (-1.0f64..1.0, -1.0f64..1.0),
    ) {
        prop_assume!(l.0.hypot(l.1) > 1e-3 && m.0.hypot(m.1) > 1e-3);
        let a = laguerre_angle(&LinePair::new([l.0, l.1], [m.0, m.1]).unwrap()).unwrap();
        let oracle = line_angle(&[l.0, l.1, 0.0], &[m.0, m.1, 0.0]);
        prop_assert!((a - oracle).abs() <= 1e-12, "{a} vs {oracle}");
    }

    #[test]
    fn elliptic_distance_is_spherical(a in vec3(), b in vec3()) {
        let q = Quadric::sum_of_squares(2);
        let d = ck_distance(&q, &hp(&a), &hp(&b), Convention::Elliptic, 0.5).unwrap();
        prop_assert!((d - line_angle(&a, &b)).abs() <= 1e-10);
    }

    #[test]
    fn elliptic_triangle_inequality(a in vec3(), b in vec3(), c in vec3()) {
        let q = Quadric::sum_of_squares(2);
        let d = |x: &[f64], y: &[f64]| ck_distance(&q, &hp(x), &hp(y), Convention::Elliptic, 0.5).unwrap();
        prop_assert!(d(&a, &b) <= d(&a, &c) + d(&c, &b) + 1e-10);
    }
}

#[test]
fn hyperbolic_distance_is_the_ball_metric() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let cfg = HilbertConfig::default();
    for (n, body) in [(2, disk()), (3, ball3())] {
        let q = Quadric::standard_cone(n);
        for _ in 0..200 {
            let a = interior_point(&body, &mut rng);
            let b = interior_point(&body, &mut rng);
            let lift = |p: &Point<f64>| ProjectivePoint::from_affine(p);
            let ck = ck_distance(&q, &lift(&a), &lift(&b), Convention::Hyperbolic, 0.5).unwrap();
            let h = hilbert_distance(&body, &a, &b, &cfg).unwrap();
            assert!((ck - h).abs() <= 1e-9 * h.max(1.0), "{ck} vs {h}");
        }
    }
}

#[test]
fn collineations_carry_the_absolute() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let base = Quadric::standard_cone(2);
    let mut done = 0;
    while done < 200 {
        let m: Vec<Vec<f64>> = (0..3)
            .map(|i| {
                (0..3)
                    .map(|j| rng.random_range(-0.4..0.4) + if i == j { 1.0 } else { 0.0 })
                    .collect()
            })
            .collect();
        let Ok(g) = Collineation::new(m) else {
            continue;
        };
        let image = base.transformed(&g).unwrap();
        let a = hp(&[
            1.0,
            rng.random_range(-0.6..0.6),
            rng.random_range(-0.6..0.6),
        ]);
        let b = hp(&[
            1.0,
            rng.random_range(-0.6..0.6),
            rng.random_range(-0.6..0.6),
        ]);
        let before = ck_distance(&base, &a, &b, Convention::Hyperbolic, 0.5).unwrap();
        let after = ck_distance(
            &image,
            &g.apply(&a).unwrap(),
            &g.apply(&b).unwrap(),
            Convention::Hyperbolic,
            0.5,
        )
        .unwrap();
        assert!((before - after).abs() <= 1e-9 * before.max(1.0));
        done += 1;
    }
}
