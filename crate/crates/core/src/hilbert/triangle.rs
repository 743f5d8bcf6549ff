//! The perspective argument for the triangle inequality, made executable.
//!
//! For a triangle `A, C, B` with chords `U A C V`, `Z C B T` and `X A B Y`,
//! let `W = UZ ∩ VT`, `X' = UZ ∩ AB`, `Y' = VT ∩ AB` and `D = WC ∩ AB`.
//! Projecting from `W` maps `U, V, C, A` to `X', Y', D, A` and `Z, T, B, C` to
//! `X', Y', B, D`, so `[U,V,C,A] [Z,T,B,C] = [X',Y',B,A]`, and convexity puts
//! `X'` and `Y'` outside `[X, Y]`, whence `[X',Y',B,A] >= [X,Y,B,A]`.
//!
//! The construction runs in homogeneous coordinates of the plane `ACB`, so
//! `W` (and `X'`, `Y'`) may be ideal points.

use crate::convex::{chord, coincident, ConvexDomain, FlatPair, Polytope, Position};
use crate::error::{GeometryError, Result};
use crate::frame::PlaneFrame;
use crate::linalg;
use crate::point::Point;
use crate::projective::{cross_ratio_of, join, meet, ProjectivePoint};
use crate::scalar::{RealField, FLOAT_TOL};

/// All points and cross ratios of the construction for one triangle.
#[derive(Clone, Debug)]
pub struct TriangleCertificate<T> {
    pub a: Point<T>,
    pub c: Point<T>,
    pub b: Point<T>,
    pub u: Point<T>,
    pub v: Point<T>,
    pub z: Point<T>,
    pub t: Point<T>,
    pub x: Point<T>,
    pub y: Point<T>,
    pub w: ProjectivePoint<T>,
    pub x_prime: ProjectivePoint<T>,
    pub y_prime: ProjectivePoint<T>,
    pub d: ProjectivePoint<T>,
    /// `[U, V, C, A]`
    pub cr_ac: T,
    /// `[Z, T, B, C]`
    pub cr_cb: T,
    /// `[X, Y, B, A]`
    pub cr_ab: T,
    /// `[X', Y', B, A]`
    pub cr_prod: T,
    /// `[X', Y', D, A]`, the image of `[U, V, C, A]` from `W`.
    pub perspective_ac: T,
    /// `[X', Y', B, D]`, the image of `[Z, T, B, C]` from `W`.
    pub perspective_cb: T,
}

fn agree<T: RealField>(a: &T, b: &T) -> bool {
    if T::EXACT {
        a == b
    } else {
        let (a, b) = (a.to_f64(), b.to_f64());
        (a - b).abs() <= FLOAT_TOL * a.abs().max(b.abs()).max(1.0)
    }
}

impl<T: RealField> TriangleCertificate<T> {
    /// The perspective identities and the product rule (exact in exact mode).
    pub fn identities_hold(&self) -> bool {
        agree(&self.cr_ac, &self.perspective_ac)
            && agree(&self.cr_cb, &self.perspective_cb)
            && agree(&(self.cr_ac.clone() * self.cr_cb.clone()), &self.cr_prod)
    }

    /// `cr_prod >= cr_ab`, up to float tolerance.
    pub fn inequality_holds(&self) -> bool {
        self.cr_prod >= self.cr_ab || agree(&self.cr_prod, &self.cr_ab)
    }

    /// `log cr_prod - log cr_ab`: the defect `d(A,C) + d(C,B) - d(A,B)` at
    /// scale 1.
    pub fn excess(&self) -> f64 {
        self.cr_prod.to_f64().ln() - self.cr_ab.to_f64().ln()
    }
}

fn finite<T: RealField>(
    p: &ProjectivePoint<T>,
    q: &ProjectivePoint<T>,
    r: &ProjectivePoint<T>,
    s: &ProjectivePoint<T>,
) -> Result<T> {
    cross_ratio_of(p, q, r, s)?
        .into_finite()
        .ok_or(GeometryError::DegenerateConstruction(
            "cross ratio at infinity",
        ))
}

fn non_collinear<T: RealField>(a: &Point<T>, c: &Point<T>, b: &Point<T>) -> bool {
    linalg::rank(&[a.vector_to(c), a.vector_to(b)]) == 2
}

/// The perspective part of the construction in plane coordinates where
/// `A = (1, 0, 0)`, `C = (1, 1, 0)` and `B = (1, 0, 1)`.
struct PlaneConstruction<F> {
    w: ProjectivePoint<F>,
    x_prime: ProjectivePoint<F>,
    y_prime: ProjectivePoint<F>,
    d: ProjectivePoint<F>,
    cr_prod: F,
    perspective_ac: F,
    perspective_cb: F,
}

/// `params` are the chord parameters `t_x, t_y` of `AC` and of `CB`.
fn perspective<F: RealField>(params: [F; 4]) -> Result<PlaneConstruction<F>> {
    let [uac, vac, zcb, tcb] = params;
    let pt = |s: F, t: F| ProjectivePoint::new(vec![F::one(), s, t]);
    let (zero, one) = (F::zero(), F::one());
    let pa = pt(zero.clone(), zero.clone())?;
    let pb = pt(zero.clone(), one.clone())?;
    let pc = pt(one.clone(), zero.clone())?;
    let pu = pt(uac, zero.clone())?;
    let pv = pt(vac, zero.clone())?;
    let pz = pt(one.clone() - zcb.clone(), zcb)?;
    let pt_ = pt(one - tcb.clone(), tcb)?;

    let degenerate = |_| GeometryError::DegenerateConstruction("coincident construction lines");
    let uz = join(&pu, &pz).map_err(degenerate)?;
    let vt = join(&pv, &pt_).map_err(degenerate)?;
    let line_ab = join(&pa, &pb)?;
    let w = meet(&uz, &vt).map_err(degenerate)?;
    let xp = meet(&uz, &line_ab).map_err(degenerate)?;
    let yp = meet(&vt, &line_ab).map_err(degenerate)?;
    let dp = meet(&join(&w, &pc).map_err(degenerate)?, &line_ab).map_err(degenerate)?;

    Ok(PlaneConstruction {
        cr_prod: finite(&xp, &yp, &pb, &pa)?,
        perspective_ac: finite(&xp, &yp, &dp, &pa)?,
        perspective_cb: finite(&xp, &yp, &pb, &dp)?,
        w,
        x_prime: xp,
        y_prime: yp,
        d: dp,
    })
}

/// Builds the perspective certificate for the non-collinear interior
/// triangle `A, C, B`.
pub fn triangle_construction<T: RealField, D: ConvexDomain<T> + ?Sized>(
    body: &D,
    a: &Point<T>,
    c: &Point<T>,
    b: &Point<T>,
) -> Result<TriangleCertificate<T>> {
    if body.dim() < 2 {
        return Err(GeometryError::CollinearTriple);
    }
    let ac = chord(body, a, c)?;
    let cb = chord(body, c, b)?;
    let ab = chord(body, a, b)?;
    if !non_collinear(a, c, b) {
        return Err(GeometryError::CollinearTriple);
    }
    if coincident(&ac.x, &cb.x) || coincident(&ac.y, &cb.y) {
        return Err(GeometryError::DegenerateConstruction(
            "chords share an endpoint; perturb C",
        ));
    }

    // In the frame with origin A and axes C - A, B - A the construction is
    // determined by the chord parameters of AC and CB alone; solving for
    // plane coordinates of the chord endpoints instead loses precision.
    let frame = PlaneFrame::through(a, c, b)?;
    let params = [&ac.t_x, &ac.t_y, &cb.t_x, &cb.t_y];
    let PlaneConstruction {
        w,
        x_prime: xp,
        y_prime: yp,
        d: dp,
        cr_prod,
        perspective_ac,
        perspective_cb,
    } = perspective(params.map(|t| t.clone()))?;

    Ok(TriangleCertificate {
        a: a.clone(),
        c: c.clone(),
        b: b.clone(),
        cr_ac: ac.cross_ratio(),
        cr_cb: cb.cross_ratio(),
        cr_ab: ab.cross_ratio(),
        u: ac.x,
        v: ac.y,
        z: cb.x,
        t: cb.y,
        x: ab.x,
        y: ab.y,
        w: frame.lift(&w)?,
        x_prime: frame.lift(&xp)?,
        y_prime: frame.lift(&yp)?,
        d: frame.lift(&dp)?,
        cr_prod,
        perspective_ac,
        perspective_cb,
    })
}

/// Fractions along each flat tried for the three chord endpoints.
const PLACEMENTS: [[(i64, i64); 3]; 4] = [
    [(1, 4), (1, 2), (3, 4)],
    [(1, 5), (1, 2), (4, 5)],
    [(1, 10), (1, 3), (2, 3)],
    [(1, 8), (3, 8), (5, 8)],
];

const PERMUTATIONS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

/// Checks `[U,V,C,A] [Z,T,B,C] = [X,Y,B,A]` on the body itself.
fn is_equality<T: RealField>(body: &Polytope<T>, a: &Point<T>, c: &Point<T>, b: &Point<T>) -> bool {
    let cr = |p: &Point<T>, q: &Point<T>| chord(body, p, q).map(|ch| ch.cross_ratio());
    match (cr(a, c), cr(c, b), cr(a, b)) {
        (Ok(ac), Ok(cb), Ok(ab)) => {
            if T::EXACT {
                ac * cb == ab
            } else {
                (ac.to_f64().ln() + cb.to_f64().ln() - ab.to_f64().ln()).abs() <= FLOAT_TOL
            }
        }
        _ => false,
    }
}

/// A non-collinear interior triple on which the triangle inequality is an
/// equality, built from two flats of a common plane section.
///
/// Three chords are strung between the flats, endpoints `U, Z, X` on the
/// first and `V, T, Y` on the second; their pairwise intersections give
/// `C = UV ∩ ZT`, `A = UV ∩ XY`, `B = ZT ∩ XY`. With every endpoint on the
/// two carrier lines the perspective from `W` sends `X, Y` to themselves,
/// and the inequality collapses. Placements are tried from a small grid and
/// the first one that verifies on `body` is returned.
pub fn find_equality_triple<T: RealField>(
    body: &Polytope<T>,
    flats: &FlatPair<T>,
) -> Result<(Point<T>, Point<T>, Point<T>)> {
    let frame = &flats.section.frame;
    let polygon = &flats.section.polygon;
    let plane = |p: &Point<T>| frame.to_plane(p);
    let (s1, e1) = (plane(&flats.first.start), plane(&flats.first.end));
    let (s2, e2) = (plane(&flats.second.start), plane(&flats.second.end));
    let line = |p: &Point<T>, q: &Point<T>| {
        join(
            &ProjectivePoint::from_affine(p),
            &ProjectivePoint::from_affine(q),
        )
    };
    let cross = |l1: &Result<_>, l2: &Result<_>| -> Option<Point<T>> {
        match (l1, l2) {
            (Ok(l1), Ok(l2)) => meet(l1, l2).ok()?.to_affine(),
            _ => None,
        }
    };

    let along = |s: &Point<T>, e: &Point<T>, fractions: &[(i64, i64); 3]| -> Vec<Point<T>> {
        fractions
            .iter()
            .map(|&(n, d)| s.lerp(e, &T::from_ratio(n, d)))
            .collect()
    };
    // Equal fractions on both flats can make all chords concurrent (opposite
    // sides of a centrally symmetric section), so the two grids differ.
    let grids = (0..PLACEMENTS.len())
        .flat_map(|i| (0..PLACEMENTS.len()).map(move |j| (i, j)))
        .filter(|(i, j)| i != j);
    for (i, j) in grids {
        let on1 = along(&s1, &e1, &PLACEMENTS[i]);
        let on2 = along(&s2, &e2, &PLACEMENTS[j]);
        for p in PERMUTATIONS {
            for q in PERMUTATIONS {
                let (u, z, x) = (&on1[p[0]], &on1[p[1]], &on1[p[2]]);
                let (v, t, y) = (&on2[q[0]], &on2[q[1]], &on2[q[2]]);
                let (uv, zt, xy) = (line(u, v), line(z, t), line(x, y));
                let (Some(c), Some(a), Some(b)) =
                    (cross(&uv, &zt), cross(&uv, &xy), cross(&zt, &xy))
                else {
                    continue;
                };
                let inside = [&a, &b, &c]
                    .iter()
                    .all(|p| polygon.classify(p, 0.0) == Position::Interior);
                if !inside || !non_collinear(&a, &c, &b) {
                    continue;
                }
                let (a, c, b) = (
                    frame.to_ambient(&a),
                    frame.to_ambient(&c),
                    frame.to_ambient(&b),
                );
                if is_equality(body, &a, &c, &b) {
                    return Ok((a, c, b));
                }
            }
        }
    }
    Err(GeometryError::InfeasibleFlats)
}
