mod common;

use common::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use projmetric::convex::{
    chord, is_nested, ConvexBody, ConvexDomain, HalfSpace, Polytope, Position,
};
use projmetric::scalar::Rational;
use projmetric::Point;

fn bodies(seed: u64) -> Vec<ConvexBody> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    vec![
        disk(),
        triangle(),
        square(),
        random_octagon(&mut rng),
        tetrahedron(),
        ball3(),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn chord_endpoints_lie_on_the_boundary(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for body in bodies(seed) {
            let a = interior_point(&body, &mut rng);
            let b = interior_point(&body, &mut rng);
            let ch = chord(&body, &a, &b).unwrap();
            let eps = 1e-9 * body.diameter();
            prop_assert_eq!(body.classify(&ch.x, eps), Position::Boundary);
            prop_assert_eq!(body.classify(&ch.y, eps), Position::Boundary);
            prop_assert!(ch.t_x < 0.0 && ch.t_y > 1.0);
            // Points just past the ends are outside.
            let dir = ch.direction();
            let out = a.offset(&dir, &(ch.t_y + 1e-3 * (ch.t_y - ch.t_x)));
            prop_assert_eq!(body.classify(&out, 0.0), Position::Exterior);
        }
    }

    #[test]
    fn reversal_swaps_the_ends(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for body in bodies(seed) {
            let a = interior_point(&body, &mut rng);
            let b = interior_point(&body, &mut rng);
            let fwd = chord(&body, &a, &b).unwrap();
            let back = chord(&body, &b, &a).unwrap();
            let rev = fwd.reversed();
            prop_assert!(back.x.distance(&rev.x) < 1e-9);
            prop_assert!(back.y.distance(&rev.y) < 1e-9);
            prop_assert!((back.cross_ratio() / fwd.cross_ratio() - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn nested_chords_are_contained(seed in any::<u64>(), r in 0.2f64..0.95) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let outer = square();
        let inner = ConvexBody::ball(p2(0.0, 0.0), r).unwrap();
        prop_assert!(is_nested(&inner, &outer).unwrap());
        let a = interior_point(&inner, &mut rng);
        let b = interior_point(&inner, &mut rng);
        let ci = chord(&inner, &a, &b).unwrap();
        let co = chord(&outer, &a, &b).unwrap();
        prop_assert!(co.t_x <= ci.t_x && ci.t_y <= co.t_y);
    }

    #[test]
    fn halfspace_and_vertex_forms_agree(
        raw in proptest::collection::vec((-20i64..=20, -20i64..=20), 4..10),
    ) {
        let pts: Vec<Point<Rational>> =
            raw.iter().map(|&(x, y)| Point(vec![q(x, 1), q(y, 1)])).collect();
        let Ok(v) = Polytope::from_vertices(pts.clone()) else { return Ok(()); };
        let hs: Vec<HalfSpace<Rational>> = v.halfspaces().cloned().collect();
        let h = Polytope::from_halfspaces(hs).unwrap();
        let mut a: Vec<_> = v.vertices().to_vec();
        let mut b: Vec<_> = h.vertices().to_vec();
        a.sort_by(|p, q| p.coords().partial_cmp(q.coords()).unwrap());
        b.sort_by(|p, q| p.coords().partial_cmp(q.coords()).unwrap());
        prop_assert_eq!(a, b);
        for p in &pts {
            prop_assert!(h.contains(p));
        }
    }
}

#[test]
fn order_along_a_chord() {
    let t = rational_triangle();
    let a = Point(vec![q(1, 3), q(1, 2)]);
    let b = Point(vec![q(2, 1), q(5, 4)]);
    let ch = chord(&t, &a, &b).unwrap();
    assert_eq!(t.classify(&ch.x, 0.0), Position::Boundary);
    assert_eq!(t.classify(&ch.y, 0.0), Position::Boundary);
    for k in 1..10 {
        let s = ch.t_x.clone() + (ch.t_y.clone() - ch.t_x.clone()) * q(k, 10);
        assert_eq!(t.classify(&ch.point_at(&s), 0.0), Position::Interior);
    }
}
