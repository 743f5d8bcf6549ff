mod common;

use common::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use projmetric::convex::{degenerate_flats, is_nested, ConvexBody, Polytope};
use projmetric::hilbert::{
    ball_boundary, compare_nested, find_equality_triple, geodesic_point, hilbert_distance,
    triangle_construction, HilbertConfig,
};
use projmetric::projective::Collineation;
use projmetric::Point;

fn d(body: &ConvexBody, a: &Point<f64>, b: &Point<f64>) -> f64 {
    hilbert_distance(body, a, b, &HilbertConfig::default()).unwrap()
}

fn bodies(rng: &mut ChaCha8Rng) -> Vec<ConvexBody> {
    vec![
        disk(),
        triangle(),
        square(),
        random_octagon(rng),
        tetrahedron(),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn metric_axioms(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for body in bodies(&mut rng) {
            let a = interior_point(&body, &mut rng);
            let b = interior_point(&body, &mut rng);
            let c = interior_point(&body, &mut rng);
            let (ab, ba) = (d(&body, &a, &b), d(&body, &b, &a));
            prop_assert!(ab > 0.0);
            prop_assert!((ab - ba).abs() <= 1e-12 * ab.max(1.0));
            prop_assert_eq!(d(&body, &a, &a), 0.0);
            prop_assert!(ab <= d(&body, &a, &c) + d(&body, &c, &b) + 1e-9);
        }
    }

    #[test]
    fn additive_along_lines(seed in any::<u64>(), s in 0.05f64..0.95) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for body in bodies(&mut rng) {
            let a = interior_point(&body, &mut rng);
            let b = interior_point(&body, &mut rng);
            let c = a.lerp(&b, &s);
            let sum = d(&body, &a, &c) + d(&body, &c, &b);
            prop_assert!((sum - d(&body, &a, &b)).abs() <= 1e-10 * sum.max(1.0));
        }
    }

    #[test]
    fn klein_model_on_the_ball(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for body in [disk(), ball3()] {
            let a = interior_point(&body, &mut rng);
            let b = interior_point(&body, &mut rng);
            let oracle = klein_distance(a.coords(), b.coords());
            prop_assert!((d(&body, &a, &b) - oracle).abs() <= 1e-9 * oracle.max(1.0));
        }
    }

    #[test]
    fn affine_maps_preserve_distance(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = loop {
            let m: Vec<Vec<f64>> = (0..2)
                .map(|_| (0..2).map(|_| rng.random_range(-2.0..2.0)).collect())
                .collect();
            if (m[0][0] * m[1][1] - m[0][1] * m[1][0]).abs() > 0.2 {
                break m;
            }
        };
        let t = vec![rng.random_range(-3.0..3.0), rng.random_range(-3.0..3.0)];
        let g = Collineation::affine(&m, &t).unwrap();
        let map = |p: &Point<f64>| g.apply_affine(p).unwrap().unwrap();
        let body = random_octagon(&mut rng);
        let poly = body.as_polytope().unwrap();
        let image = ConvexBody::Polytope(poly.map_affine(&m, &t).unwrap());
        let a = interior_point(&body, &mut rng);
        let b = interior_point(&body, &mut rng);
        let before = d(&body, &a, &b);
        prop_assert!((d(&image, &map(&a), &map(&b)) - before).abs() <= 1e-9 * before.max(1.0));
    }

    #[test]
    fn projective_maps_preserve_distance(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        // Weight row positive on the triangle (0,0), (4,0), (0,4).
        let w = [1.0, rng.random_range(-0.2..0.5), rng.random_range(-0.2..0.5)];
        let mut matrix = vec![w.to_vec()];
        for _ in 0..2 {
            matrix.push((0..3).map(|_| rng.random_range(-2.0..2.0)).collect());
        }
        let Ok(g) = Collineation::new(matrix) else { return Ok(()); };
        let map = |p: &Point<f64>| g.apply_affine(p).unwrap().unwrap();
        let body = triangle();
        let verts: Vec<_> = body.as_polytope().unwrap().vertices().iter().map(map).collect();
        let Ok(image) = ConvexBody::polygon(verts) else { return Ok(()); };
        let a = interior_point(&body, &mut rng);
        let b = interior_point(&body, &mut rng);
        let before = d(&body, &a, &b);
        let after = d(&image, &map(&a), &map(&b));
        prop_assert!((after - before).abs() <= 1e-8 * before.max(1.0));
    }

    #[test]
    fn certificates_are_sound(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for body in bodies(&mut rng) {
            let a = interior_point(&body, &mut rng);
            let c = interior_point(&body, &mut rng);
            let b = interior_point(&body, &mut rng);
            let cert = triangle_construction(&body, &a, &c, &b).unwrap();
            prop_assert!(cert.identities_hold());
            prop_assert!(cert.inequality_holds());
            let defect = d(&body, &a, &c) + d(&body, &c, &b) - d(&body, &a, &b);
            prop_assert!((0.5 * cert.excess() - defect).abs() <= 1e-8);
        }
    }

    #[test]
    fn geodesic_points_split_the_distance(seed in any::<u64>(), frac in 0.0f64..=1.0) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let cfg = HilbertConfig::default();
        for body in bodies(&mut rng) {
            let a = interior_point(&body, &mut rng);
            let b = interior_point(&body, &mut rng);
            let total = d(&body, &a, &b);
            let p = geodesic_point(&body, &a, &b, frac * total, &cfg).unwrap();
            prop_assert!((d(&body, &a, &p) - frac * total).abs() <= 1e-9 * total.max(1.0));
        }
    }

    #[test]
    fn balls_have_constant_radius(seed in any::<u64>(), r in 0.1f64..2.0) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let cfg = HilbertConfig::default();
        for body in bodies(&mut rng) {
            let c = interior_point(&body, &mut rng);
            for p in ball_boundary(&body, &c, r, 24, &cfg).unwrap() {
                prop_assert!((d(&body, &c, &p) - r).abs() <= 1e-9 * r.max(1.0));
            }
        }
    }
}

#[test]
fn smaller_bodies_give_larger_distances() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let cfg = HilbertConfig::default();
    let pairs = [
        (ConvexBody::ball(p2(0.0, 0.0), 0.9).unwrap(), disk()),
        (disk(), ConvexBody::cube(2, 1.0).unwrap()),
        (ConvexBody::cube(2, 0.7).unwrap(), disk()),
        (
            ConvexBody::polygon(vec![p2(-0.5, -0.5), p2(0.6, -0.4), p2(0.0, 0.7)]).unwrap(),
            square(),
        ),
    ];
    for (inner, outer) in &pairs {
        assert!(is_nested(inner, outer).unwrap());
        for _ in 0..50 {
            let a = interior_point(inner, &mut rng);
            let b = interior_point(inner, &mut rng);
            let (di, dout) = compare_nested(inner, outer, &a, &b, &cfg).unwrap();
            assert!(di > dout, "{di} vs {dout}");
        }
    }
}

#[test]
fn equality_triples_on_polytopes() {
    let exact = rational_triangle();
    for flats in degenerate_flats(&exact).unwrap() {
        let (a, c, b) = find_equality_triple(&exact, &flats).unwrap();
        let cert = triangle_construction(&exact, &a, &c, &b).unwrap();
        assert_eq!(cert.cr_prod, cert.cr_ab);
    }
    let tet = tetrahedron();
    let poly: &Polytope<f64> = tet.as_polytope().unwrap();
    let cfg = HilbertConfig::default();
    for flats in degenerate_flats(poly).unwrap() {
        let (a, c, b) = find_equality_triple(poly, &flats).unwrap();
        let defect = d(&tet, &a, &c) + d(&tet, &c, &b) - d(&tet, &a, &b);
        assert!(defect.abs() <= 1e-9);
        assert!(hilbert_distance(poly, &a, &b, &cfg).unwrap() > 0.0);
    }
}

#[test]
fn disk_triangles_are_strict() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let body = disk();
    let mut checked = 0;
    while checked < 300 {
        let a = interior_point(&body, &mut rng);
        let c = interior_point(&body, &mut rng);
        let b = interior_point(&body, &mut rng);
        let area = (c.0[0] - a.0[0]) * (b.0[1] - a.0[1]) - (c.0[1] - a.0[1]) * (b.0[0] - a.0[0]);
        if area.abs() < 1e-2 {
            continue;
        }
        checked += 1;
        let defect = d(&body, &a, &c) + d(&body, &c, &b) - d(&body, &a, &b);
        assert!(defect > 1e-6, "{defect}");
    }
}
