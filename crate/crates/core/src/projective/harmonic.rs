use crate::error::{GeometryError, Result};
use crate::linalg;
use crate::point::Point;
use crate::scalar::{Field, RealField};

use super::{collinear, ProjectivePoint};

/// A line of the projective plane in homogeneous line coordinates: the
/// point `p` is incident iff `l · p = 0`.
#[derive(Clone, Debug)]
pub struct ProjectiveLine<T> {
    coords: Vec<T>,
}

impl<T: Field> ProjectiveLine<T> {
    pub fn coords(&self) -> &[T] {
        &self.coords
    }

    pub fn contains(&self, p: &ProjectivePoint<T>) -> bool {
        let p = p.normalized();
        let scale = linalg::max_magnitude(&self.coords);
        linalg::dot(&self.coords, p.coords()).negligible(scale)
    }

    fn normalized(&self) -> Self {
        let pivot = self
            .coords
            .iter()
            .max_by(|a, b| a.magnitude().total_cmp(&b.magnitude()))
            .cloned()
            .expect("nonzero line");
        ProjectiveLine {
            coords: self
                .coords
                .iter()
                .map(|c| c.clone() / pivot.clone())
                .collect(),
        }
    }
}

fn require_plane<T: Field>(points: &[&ProjectivePoint<T>]) -> Result<()> {
    for p in points {
        if p.dim() != 2 {
            return Err(GeometryError::DimensionMismatch {
                expected: 2,
                found: p.dim(),
            });
        }
    }
    Ok(())
}

fn cross_or_none<T: Field>(a: &[T], b: &[T]) -> Option<Vec<T>> {
    let c = linalg::cross3(a, b);
    if c.iter().all(|v| v.negligible(1.0)) {
        None
    } else {
        Some(c)
    }
}

/// The line through two distinct points of the projective plane.
pub fn join<T: Field>(p: &ProjectivePoint<T>, q: &ProjectivePoint<T>) -> Result<ProjectiveLine<T>> {
    require_plane(&[p, q])?;
    let (p, q) = (p.normalized(), q.normalized());
    cross_or_none(p.coords(), q.coords())
        .map(|coords| ProjectiveLine { coords }.normalized())
        .ok_or(GeometryError::CoincidentPoints)
}

/// The common point of two distinct lines of the projective plane.
pub fn meet<T: Field>(l: &ProjectiveLine<T>, m: &ProjectiveLine<T>) -> Result<ProjectivePoint<T>> {
    cross_or_none(&l.coords, &m.coords)
        .map(|coords| ProjectivePoint { coords }.normalized())
        .ok_or(GeometryError::DegenerateInput("lines coincide"))
}

/// Writes `c = alpha * a + beta * b` for collinear points.
fn line_coefficients<T: Field>(
    a: &ProjectivePoint<T>,
    b: &ProjectivePoint<T>,
    c: &ProjectivePoint<T>,
) -> Result<(T, T)> {
    let a = a.normalized();
    let b = b.normalized();
    let c = c.normalized();
    // Solve on the best-conditioned pair of columns.
    let width = a.coords().len();
    let mut best = (0.0, 0, 1);
    for i in 0..width {
        for j in i + 1..width {
            let m = linalg::det2(
                &a.coords()[i],
                &a.coords()[j],
                &b.coords()[i],
                &b.coords()[j],
            )
            .magnitude();
            if m > best.0 {
                best = (m, i, j);
            }
        }
    }
    let (_, i, j) = best;
    let (ai, aj, bi, bj) = (
        &a.coords()[i],
        &a.coords()[j],
        &b.coords()[i],
        &b.coords()[j],
    );
    let (ci, cj) = (&c.coords()[i], &c.coords()[j]);
    let d = linalg::det2(ai, bi, aj, bj);
    let alpha = linalg::det2(ci, bi, cj, bj) / d.clone();
    let beta = linalg::det2(ai, ci, aj, cj) / d;
    Ok((alpha, beta))
}

/// The harmonic conjugate `D` of `C` with respect to `A, B`, characterized by
/// `[A, B, C, D] = -1`. Writing `C = αA + βB` gives `D = αA − βB`.
pub fn harmonic_conjugate_analytic<T: Field>(
    a: &ProjectivePoint<T>,
    b: &ProjectivePoint<T>,
    c: &ProjectivePoint<T>,
) -> Result<ProjectivePoint<T>> {
    if a.dim() != b.dim() || a.dim() != c.dim() {
        return Err(GeometryError::DimensionMismatch {
            expected: a.dim(),
            found: if a.dim() != b.dim() { b.dim() } else { c.dim() },
        });
    }
    if !collinear(&[a, b, c]) {
        return Err(GeometryError::NonCollinear);
    }
    if a.same_point(b) {
        return Err(GeometryError::DegenerateInput("A and B coincide"));
    }
    if c.same_point(a) || c.same_point(b) {
        return Err(GeometryError::DegenerateInput("C coincides with A or B"));
    }
    let (alpha, beta) = line_coefficients(a, b, c)?;
    let a = a.normalized();
    let b = b.normalized();
    let coords = linalg::sub(
        &linalg::scale(a.coords(), &alpha),
        &linalg::scale(b.coords(), &beta),
    );
    Ok(ProjectivePoint::new(coords)?.normalized())
}

/// Harmonic conjugate by the complete-quadrangle construction, using only
/// joins and meets.
///
/// `E` is any point off the base line `AB` and `F` any further point of the
/// line `CE`. With `P = AF ∩ BE` and `Q = AE ∩ BF`, the quadrangle `EFPQ`
/// has `A` and `B` as diagonal points and its side `PQ` cuts the base line
/// in the conjugate `D`. The result does not depend on the choice of `E, F`.
pub fn harmonic_conjugate_synthetic<T: Field>(
    a: &ProjectivePoint<T>,
    b: &ProjectivePoint<T>,
    c: &ProjectivePoint<T>,
    e: &ProjectivePoint<T>,
    f: &ProjectivePoint<T>,
) -> Result<ProjectivePoint<T>> {
    require_plane(&[a, b, c, e, f])?;
    if !collinear(&[a, b, c]) {
        return Err(GeometryError::NonCollinear);
    }
    if a.same_point(b) || c.same_point(a) || c.same_point(b) {
        return Err(GeometryError::DegenerateInput("A, B, C must be distinct"));
    }
    let base = join(a, b)?;
    if base.contains(e) {
        return Err(GeometryError::DegenerateAuxiliary(
            "E lies on the base line",
        ));
    }
    if f.same_point(c) || f.same_point(e) {
        return Err(GeometryError::DegenerateAuxiliary(
            "F must differ from C and E",
        ));
    }
    if !collinear(&[c, e, f]) {
        return Err(GeometryError::DegenerateAuxiliary("F must lie on line CE"));
    }
    let aux = |r: Result<ProjectiveLine<T>>| {
        r.map_err(|_| GeometryError::DegenerateAuxiliary("coincident join"))
    };
    let at = |r: Result<ProjectivePoint<T>>| {
        r.map_err(|_| GeometryError::DegenerateAuxiliary("undefined intersection"))
    };
    let p = at(meet(&aux(join(a, f))?, &aux(join(b, e))?))?;
    let q = at(meet(&aux(join(a, e))?, &aux(join(b, f))?))?;
    at(meet(&aux(join(&p, &q))?, &base))
}

/// Default auxiliary points for the quadrangle construction on the base line
/// through `a` and `c`: `E` is an affine point of the line offset by a unit
/// along the coordinate axis most transverse to it, and `F` is the midpoint
/// of `C` and `E` (or `E` shifted along `C` when `C` is ideal).
pub fn default_auxiliaries<T: RealField>(
    a: &ProjectivePoint<T>,
    c: &ProjectivePoint<T>,
) -> Result<(ProjectivePoint<T>, ProjectivePoint<T>)> {
    require_plane(&[a, c])?;
    let line = join(a, c)?;
    let anchor = a
        .to_affine()
        .or_else(|| c.to_affine())
        .ok_or(GeometryError::DegenerateInput(
            "base line is the line at infinity",
        ))?;
    // Direction of the line l0 + l1 x + l2 y = 0 is (-l2, l1).
    let (l1, l2) = (line.coords()[1].clone(), line.coords()[2].clone());
    let offset = if l2.magnitude() >= l1.magnitude() {
        vec![T::zero(), T::one()]
    } else {
        vec![T::one(), T::zero()]
    };
    let e_aff = anchor.offset(&offset, &T::one());
    let f_aff = match c.to_affine() {
        Some(c_aff) => e_aff.midpoint(&c_aff),
        None => {
            let c = c.normalized();
            Point(linalg::add(e_aff.coords(), &c.coords()[1..]))
        }
    };
    Ok((
        ProjectivePoint::from_affine(&e_aff),
        ProjectivePoint::from_affine(&f_aff),
    ))
}
