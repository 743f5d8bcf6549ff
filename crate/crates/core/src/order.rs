//! Betweenness on a convex body and a sampled check of the order axioms.
//!
//! Lines of the model are chords of the body and `C` lies between `A` and `B`
//! when it is in the open segment `(A, B)`. The harness verifies axioms
//! II.1-II.5 on random rational configurations; the continuity group III
//! cannot be decided on finite samples and is only recorded in the report.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::convex::{chord, ConvexDomain, HalfSpace, Polytope, Position};
use crate::error::{GeometryError, Result};
use crate::linalg;
use crate::point::Point;
use crate::scalar::{Field, Rational, RealField};

/// Collinearity of three points: every 2x2 minor of `(C - A, B - A)`
/// vanishes, relative to the lengths in float mode.
pub fn collinear_points<T: RealField>(a: &Point<T>, c: &Point<T>, b: &Point<T>) -> bool {
    let (u, v) = (a.vector_to(c), a.vector_to(b));
    let scale = linalg::norm2(&u) * linalg::norm2(&v);
    for i in 0..u.len() {
        for j in i + 1..u.len() {
            if !linalg::det2(&u[i], &u[j], &v[i], &v[j]).negligible(scale) {
                return false;
            }
        }
    }
    true
}

/// Position of `C` on the line `A -> B` (0 at `A`, 1 at `B`), when collinear
/// and `A != B`.
fn parameter<T: RealField>(a: &Point<T>, c: &Point<T>, b: &Point<T>) -> Option<T> {
    let v = a.vector_to(b);
    let vv = linalg::dot(&v, &v);
    if vv.is_zero() || !collinear_points(a, c, b) {
        return None;
    }
    Some(linalg::dot(&a.vector_to(c), &v) / vv)
}

/// `C` lies strictly between the distinct points `A` and `B`.
pub fn between<T: RealField>(a: &Point<T>, c: &Point<T>, b: &Point<T>) -> bool {
    match parameter(a, c, b) {
        Some(t) => t.sign(1.0) > 0 && (T::one() - t).sign(1.0) > 0,
        None => false,
    }
}

/// `C` lies in the closed segment `[A, B]` (which may be a single point).
pub fn between_closed<T: RealField>(a: &Point<T>, c: &Point<T>, b: &Point<T>) -> bool {
    if a == b {
        return a == c;
    }
    match parameter(a, c, b) {
        Some(t) => t.sign(1.0) >= 0 && (T::one() - t).sign(1.0) >= 0,
        None => false,
    }
}

/// `A` and `B` lie in the same open half-space of the hyperplane.
pub fn same_side<T: RealField>(h: &HalfSpace<T>, a: &Point<T>, b: &Point<T>) -> Result<bool> {
    let side = |p: &Point<T>| {
        let s = linalg::norm2(&h.normal) * linalg::max_magnitude(p.coords()).max(1.0)
            + h.offset.magnitude();
        h.eval(p.coords()).sign(s)
    };
    let (sa, sb) = (side(a), side(b));
    if sa == 0 || sb == 0 {
        return Err(GeometryError::PointOnHyperplane);
    }
    Ok(sa == sb)
}

/// One sampled configuration: four distinct collinear interior points, and
/// a hyperplane with two interior points off it.
#[derive(Clone, Debug)]
pub struct Configuration {
    pub line: [Point<Rational>; 4],
    pub hyperplane: HalfSpace<Rational>,
    pub pair: [Point<Rational>; 2],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Axiom {
    /// A third point between any two.
    #[serde(rename = "II.1")]
    Density,
    /// Exactly one of three collinear points is between the others.
    #[serde(rename = "II.2")]
    Trichotomy,
    /// A point beyond `B` on the line `AB`.
    #[serde(rename = "II.3")]
    Extension,
    /// Four collinear points can be ordered coherently.
    #[serde(rename = "II.4")]
    FourPoints,
    /// A hyperplane separates space into two sides.
    #[serde(rename = "II.5")]
    Separation,
}

impl Axiom {
    pub fn label(self) -> &'static str {
        match self {
            Axiom::Density => "II.1",
            Axiom::Trichotomy => "II.2",
            Axiom::Extension => "II.3",
            Axiom::FourPoints => "II.4",
            Axiom::Separation => "II.5",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Axiom::Density => "density",
            Axiom::Trichotomy => "trichotomy",
            Axiom::Extension => "extension",
            Axiom::FourPoints => "four points",
            Axiom::Separation => "separation",
        }
    }
}

const AXIOMS: [Axiom; 5] = [
    Axiom::Density,
    Axiom::Trichotomy,
    Axiom::Extension,
    Axiom::FourPoints,
    Axiom::Separation,
];

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Counterexample {
    pub configuration: usize,
    pub points: Vec<String>,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AxiomResult {
    pub axiom: Axiom,
    pub checked: usize,
    pub passed: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl AxiomResult {
    pub fn ok(&self) -> bool {
        self.passed == self.checked
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AxiomReport {
    pub header: String,
    pub seed: u64,
    pub configurations: usize,
    pub results: Vec<AxiomResult>,
}

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(AxiomResult::ok)
    }
}

const REPORT_HEADER: &str = "Order axioms II.1-II.5 checked in exact rational arithmetic. \
Axiom group III (continuity) is not decidable on finite samples and is not checked.";

/// Counterexamples kept per axiom.
const MAX_COUNTEREXAMPLES: usize = 5;

/// Parallel shards used by the sampler; each has its own derived seed.
const SHARDS: usize = 8;

fn random_interior(body: &Polytope<Rational>, rng: &mut ChaCha8Rng) -> Point<Rational> {
    let weights: Vec<i64> = body
        .vertices()
        .iter()
        .map(|_| rng.random_range(1..=1000))
        .collect();
    let total: i64 = weights.iter().sum();
    let mut acc = vec![Rational::zero(); body.dim()];
    for (v, w) in body.vertices().iter().zip(&weights) {
        acc = linalg::axpy(&acc, &Rational::from_ratio(*w, total), v.coords());
    }
    Point(acc)
}

fn sample_one(body: &Polytope<Rational>, rng: &mut ChaCha8Rng) -> Configuration {
    let (p, q) = loop {
        let p = random_interior(body, rng);
        let q = random_interior(body, rng);
        if p != q {
            break (p, q);
        }
    };
    let mut params: Vec<i64> = Vec::new();
    while params.len() < 4 {
        let s = rng.random_range(1..1000);
        if !params.contains(&s) {
            params.push(s);
        }
    }
    params.shuffle(rng);
    let line = std::array::from_fn(|i| p.lerp(&q, &Rational::from_ratio(params[i], 1000)));

    let normal: Vec<Rational> = loop {
        let n: Vec<i64> = (0..body.dim()).map(|_| rng.random_range(-9..=9)).collect();
        if n.iter().any(|&c| c != 0) {
            break n.into_iter().map(Rational::from_i64).collect();
        }
    };
    let anchor = random_interior(body, rng);
    let hyperplane = HalfSpace::new(normal.clone(), linalg::dot(&normal, anchor.coords()));
    let pair = loop {
        let a = random_interior(body, rng);
        let b = random_interior(body, rng);
        if !hyperplane.eval(a.coords()).is_zero() && !hyperplane.eval(b.coords()).is_zero() {
            break [a, b];
        }
    };
    Configuration {
        line,
        hyperplane,
        pair,
    }
}

/// `n` random configurations inside `body`, reproducible from `seed`
/// regardless of thread scheduling.
pub fn sample_configurations(body: &Polytope<Rational>, n: usize, seed: u64) -> Vec<Configuration> {
    let per_shard = n.div_ceil(SHARDS);
    let mut out: Vec<Configuration> = (0..SHARDS)
        .into_par_iter()
        .flat_map_iter(|shard| {
            let mut rng = ChaCha8Rng::seed_from_u64(
                seed.wrapping_add((shard as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)),
            );
            (0..per_shard)
                .map(|_| sample_one(body, &mut rng))
                .collect::<Vec<_>>()
        })
        .collect();
    out.truncate(n);
    out
}

fn show(points: &[&Point<Rational>]) -> Vec<String> {
    points.iter().map(|p| p.to_string()).collect()
}

/// Outcome of each axiom on one configuration: `None` on success.
fn check_one(body: &Polytope<Rational>, cfg: &Configuration) -> [Option<(Vec<String>, String)>; 5] {
    let [a, b, c, d] = &cfg.line;
    let fail = |pts: &[&Point<Rational>], note: &str| Some((show(pts), note.to_string()));

    let density = {
        let m = a.midpoint(b);
        if between(a, &m, b) && body.classify(&m, 0.0) == Position::Interior {
            None
        } else {
            fail(&[a, b], "midpoint witness fails")
        }
    };

    let trichotomy = {
        let count = [between(b, a, c), between(a, b, c), between(a, c, b)]
            .iter()
            .filter(|&&x| x)
            .count();
        if count == 1 {
            None
        } else {
            fail(&[a, b, c], &format!("{count} betweenness relations hold"))
        }
    };

    let extension = match chord(body, a, b) {
        Ok(ch) => {
            // Witness midway between B and the boundary point beyond it.
            let t = (Rational::one() + ch.t_y.clone()) / Rational::from_i64(2);
            let w = ch.point_at(&t);
            if between(a, b, &w) && body.classify(&w, 0.0) == Position::Interior {
                None
            } else {
                fail(&[a, b, &w], "extension witness fails")
            }
        }
        Err(e) => fail(&[a, b], &format!("no chord: {e}")),
    };

    let four = {
        let mut sorted = [a, b, c, d];
        let key = |p: &Point<Rational>| parameter(a, p, b).expect("collinear sample");
        sorted.sort_by_key(|p| key(p));
        let ok = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
            .iter()
            .all(|&(h, i, k)| between(sorted[h], sorted[i], sorted[k]));
        if ok {
            None
        } else {
            fail(&sorted, "sorted order is not coherent")
        }
    };

    let separation = {
        let [p, q] = &cfg.pair;
        let h = &cfg.hyperplane;
        // Oracle: the segment meets the hyperplane strictly inside iff the
        // crossing parameter lies in (0, 1).
        let (hp, hq) = (h.eval(p.coords()), h.eval(q.coords()));
        let crosses = if hp == hq {
            false
        } else {
            let t = hp.clone() / (hp - hq);
            let x = p.lerp(q, &t);
            t > Rational::zero()
                && t < Rational::one()
                && h.eval(x.coords()).is_zero()
                && between(p, &x, q)
        };
        match same_side(h, p, q) {
            Ok(same) if same != crosses => None,
            Ok(_) => fail(&[p, q], "side test disagrees with segment crossing"),
            Err(e) => fail(&[p, q], &e.to_string()),
        }
    };

    [density, trichotomy, extension, four, separation]
}

/// Checks axioms II.1-II.5 on every configuration.
pub fn check_order_axioms(
    body: &Polytope<Rational>,
    configs: &[Configuration],
    seed: u64,
) -> AxiomReport {
    let outcomes: Vec<_> = configs.par_iter().map(|c| check_one(body, c)).collect();
    let results = AXIOMS
        .iter()
        .enumerate()
        .map(|(k, &axiom)| {
            let mut counterexamples = Vec::new();
            let mut passed = 0;
            for (i, o) in outcomes.iter().enumerate() {
                match &o[k] {
                    None => passed += 1,
                    Some((points, note)) if counterexamples.len() < MAX_COUNTEREXAMPLES => {
                        counterexamples.push(Counterexample {
                            configuration: i,
                            points: points.clone(),
                            note: note.clone(),
                        })
                    }
                    Some(_) => {}
                }
            }
            AxiomResult {
                axiom,
                checked: configs.len(),
                passed,
                counterexamples,
            }
        })
        .collect();
    AxiomReport {
        header: REPORT_HEADER.to_string(),
        seed,
        configurations: configs.len(),
        results,
    }
}

/// Samples `n` configurations from `seed` and checks them.
pub fn run_order_axioms(body: &Polytope<Rational>, n: usize, seed: u64) -> AxiomReport {
    check_order_axioms(body, &sample_configurations(body, n, seed), seed)
}
