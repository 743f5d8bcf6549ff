//! Homogeneous coordinates, cross ratios, collineations and harmonic
//! conjugates.
//!
//! Affine points embed with the homogenizing weight first:
//! `(x_1, ..., x_n) -> (1, x_1, ..., x_n)`. Ideal points have weight zero.
//! On a projective line (two components) the chart coordinate of `(a, b)` is
//! `b / a`, so `(0, 1)` is the point at infinity.

mod harmonic;
mod von_staudt;

pub use harmonic::{
    default_auxiliaries, harmonic_conjugate_analytic, harmonic_conjugate_synthetic, join, meet,
    ProjectiveLine,
};
pub use von_staudt::{analytic_coordinate, von_staudt_coordinate, DyadicCoordinate};

use std::fmt;

use crate::error::{GeometryError, Result};
use crate::linalg;
use crate::point::Point;
use crate::scalar::{Field, RealField};

/// A value on the projective line: a finite chart value or the point at
/// infinity.
#[derive(Clone, Debug, PartialEq)]
pub enum ProjectiveScalar<T> {
    Finite(T),
    Infinity,
}

impl<T: Field> ProjectiveScalar<T> {
    pub fn is_infinite(&self) -> bool {
        matches!(self, ProjectiveScalar::Infinity)
    }

    pub fn finite(&self) -> Option<&T> {
        match self {
            ProjectiveScalar::Finite(v) => Some(v),
            ProjectiveScalar::Infinity => None,
        }
    }

    pub fn into_finite(self) -> Option<T> {
        match self {
            ProjectiveScalar::Finite(v) => Some(v),
            ProjectiveScalar::Infinity => None,
        }
    }
}

impl<T: fmt::Display> fmt::Display for ProjectiveScalar<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjectiveScalar::Finite(v) => write!(f, "{v}"),
            ProjectiveScalar::Infinity => write!(f, "inf"),
        }
    }
}

/// A point of projective n-space in homogeneous coordinates.
///
/// Equality is projective: two points are equal iff their coordinate
/// vectors are proportional (within `FLOAT_TOL` in float mode).
#[derive(Clone, Debug)]
pub struct ProjectivePoint<T> {
    coords: Vec<T>,
}

impl<T: Field> ProjectivePoint<T> {
    pub fn new(coords: Vec<T>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(GeometryError::DimensionMismatch {
                expected: 2,
                found: coords.len(),
            });
        }
        if coords.iter().all(Field::is_zero) {
            return Err(GeometryError::ZeroPoint);
        }
        Ok(ProjectivePoint { coords })
    }

    pub fn from_affine(p: &Point<T>) -> Self {
        let mut coords = Vec::with_capacity(p.dim() + 1);
        coords.push(T::one());
        coords.extend(p.coords().iter().cloned());
        ProjectivePoint { coords }
    }

    /// The ideal point in direction `direction`.
    pub fn ideal(direction: &[T]) -> Result<Self> {
        let mut coords = Vec::with_capacity(direction.len() + 1);
        coords.push(T::zero());
        coords.extend(direction.iter().cloned());
        Self::new(coords)
    }

    /// Point of the projective line with the given chart value.
    pub fn from_scalar(s: &ProjectiveScalar<T>) -> Self {
        let coords = match s {
            ProjectiveScalar::Finite(v) => vec![T::one(), v.clone()],
            ProjectiveScalar::Infinity => vec![T::zero(), T::one()],
        };
        ProjectivePoint { coords }
    }

    pub fn coords(&self) -> &[T] {
        &self.coords
    }

    /// Dimension of the ambient projective space.
    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn weight(&self) -> &T {
        &self.coords[0]
    }

    pub fn is_ideal(&self) -> bool {
        let n = self.normalized();
        if T::EXACT {
            n.coords[0].is_zero()
        } else {
            n.coords[0].magnitude() <= 1e-12
        }
    }

    /// Representative scaled to a canonical size: exact fields divide by the
    /// first nonzero coordinate, float fields by the largest one.
    pub fn normalized(&self) -> Self {
        let pivot = if T::EXACT {
            self.coords.iter().find(|c| !c.is_zero())
        } else {
            self.coords
                .iter()
                .max_by(|a, b| a.magnitude().total_cmp(&b.magnitude()))
        }
        .cloned()
        .expect("nonzero point");
        ProjectivePoint {
            coords: self
                .coords
                .iter()
                .map(|c| c.clone() / pivot.clone())
                .collect(),
        }
    }

    /// Affine chart representative, or `None` for ideal points.
    pub fn to_affine(&self) -> Option<Point<T>> {
        if self.is_ideal() {
            return None;
        }
        let w = self.coords[0].clone();
        Some(Point(
            self.coords[1..]
                .iter()
                .map(|c| c.clone() / w.clone())
                .collect(),
        ))
    }

    /// Chart value on a projective line.
    pub fn to_scalar(&self) -> Result<ProjectiveScalar<T>> {
        if self.dim() != 1 {
            return Err(GeometryError::DimensionMismatch {
                expected: 1,
                found: self.dim(),
            });
        }
        Ok(match self.to_affine() {
            Some(p) => ProjectiveScalar::Finite(p.0[0].clone()),
            None => ProjectiveScalar::Infinity,
        })
    }

    pub fn same_point(&self, other: &ProjectivePoint<T>) -> bool {
        if self.coords.len() != other.coords.len() {
            return false;
        }
        let a = self.normalized();
        let b = other.normalized();
        let n = a.coords.len();
        (0..n).all(|i| {
            (i + 1..n).all(|j| {
                linalg::det2(&a.coords[i], &a.coords[j], &b.coords[i], &b.coords[j]).negligible(1.0)
            })
        })
    }

    pub fn map<U: Field>(&self, f: impl Fn(&T) -> U) -> ProjectivePoint<U> {
        ProjectivePoint {
            coords: self.coords.iter().map(f).collect(),
        }
    }
}

impl<T: RealField> ProjectivePoint<T> {
    pub fn to_f64(&self) -> ProjectivePoint<f64> {
        self.map(RealField::to_f64)
    }
}

impl<T: Field> PartialEq for ProjectivePoint<T> {
    fn eq(&self, other: &Self) -> bool {
        self.same_point(other)
    }
}

/// True when the points span at most a projective line.
///
/// Float mode normalizes each vector and requires every 3x3 minor of the
/// stacked coordinates to stay below `FLOAT_TOL`.
pub fn collinear<T: Field>(points: &[&ProjectivePoint<T>]) -> bool {
    let Some(first) = points.first() else {
        return true;
    };
    let width = first.coords.len();
    if points.iter().any(|p| p.coords.len() != width) {
        return false;
    }
    if width < 3 || points.len() < 3 {
        return true;
    }
    let rows: Vec<ProjectivePoint<T>> = points.iter().map(|p| p.normalized()).collect();
    let cols = linalg::combinations(width, 3);
    linalg::combinations(rows.len(), 3).iter().all(|tri| {
        cols.iter().all(|c| {
            let m: Vec<Vec<T>> = tri
                .iter()
                .map(|&r| c.iter().map(|&k| rows[r].coords[k].clone()).collect())
                .collect();
            linalg::det(&m).negligible(1.0)
        })
    })
}

fn check_dims<T>(points: &[&ProjectivePoint<T>]) -> Result<usize> {
    let width = points[0].coords.len();
    for p in points {
        if p.coords.len() != width {
            return Err(GeometryError::DimensionMismatch {
                expected: width - 1,
                found: p.coords.len() - 1,
            });
        }
    }
    Ok(width)
}

/// Four points on a common projective line, in order.
#[derive(Clone, Debug)]
pub struct CollinearQuad<T> {
    points: [ProjectivePoint<T>; 4],
}

impl<T: Field> CollinearQuad<T> {
    pub fn new(
        x: ProjectivePoint<T>,
        y: ProjectivePoint<T>,
        z: ProjectivePoint<T>,
        t: ProjectivePoint<T>,
    ) -> Result<Self> {
        check_dims(&[&x, &y, &z, &t])?;
        if !collinear(&[&x, &y, &z, &t]) {
            return Err(GeometryError::NonCollinear);
        }
        Ok(CollinearQuad {
            points: [x, y, z, t],
        })
    }

    /// Quad of chart values on the projective line.
    pub fn from_scalars(values: [ProjectiveScalar<T>; 4]) -> Self {
        CollinearQuad {
            points: values.map(|v| ProjectivePoint::from_scalar(&v)),
        }
    }

    pub fn points(&self) -> &[ProjectivePoint<T>; 4] {
        &self.points
    }
}

/// Two-component coordinates of collinear points with respect to the best
/// conditioned pair of columns of the line they span. `None` if all points
/// coincide.
pub(crate) fn line_chart<T: Field>(points: &[&ProjectivePoint<T>]) -> Option<Vec<[T; 2]>> {
    let normalized: Vec<ProjectivePoint<T>> = points.iter().map(|p| p.normalized()).collect();
    let width = normalized[0].coords.len();
    let mut best: Option<(f64, usize, usize)> = None;
    for a in 0..normalized.len() {
        for b in a + 1..normalized.len() {
            for i in 0..width {
                for j in i + 1..width {
                    let (p, q) = (&normalized[a].coords, &normalized[b].coords);
                    let m = linalg::det2(&p[i], &p[j], &q[i], &q[j]).magnitude();
                    if best.is_none_or(|(bm, _, _)| m > bm) {
                        best = Some((m, i, j));
                    }
                }
            }
        }
    }
    let (m, i, j) = best?;
    if m == 0.0 || (!T::EXACT && m <= 1e-14) {
        return None;
    }
    let chart = normalized
        .iter()
        .map(|p| {
            let (u, v) = (p.coords[i].clone(), p.coords[j].clone());
            if T::EXACT {
                [u, v]
            } else {
                let s = 1.0 / u.magnitude().max(v.magnitude());
                [u.mul_f64(s), v.mul_f64(s)]
            }
        })
        .collect();
    Some(chart)
}

fn chart_det<T: Field>(p: &[T; 2], q: &[T; 2]) -> T {
    linalg::det2(&p[0], &p[1], &q[0], &q[1])
}

fn det_vanishes<T: Field>(d: &T) -> bool {
    if T::EXACT {
        d.is_zero()
    } else {
        d.magnitude() <= 1e-14
    }
}

/// The cross ratio `[X,Y,Z,T] = (x-z)/(x-t) * (y-t)/(y-z)` of a collinear quad.
///
/// Computed from 2x2 determinants of the homogeneous line coordinates, so
/// ideal points need no special case: a factor `(p - inf)/(q - inf)` is 1.
pub fn cross_ratio<T: Field>(q: &CollinearQuad<T>) -> Result<ProjectiveScalar<T>> {
    let [x, y, z, t] = &q.points;
    let Some(chart) = line_chart(&[x, y, z, t]) else {
        return Err(GeometryError::IndeterminateCrossRatio);
    };
    let (cx, cy, cz, ct) = (&chart[0], &chart[1], &chart[2], &chart[3]);
    let num = chart_det(cx, cz) * chart_det(cy, ct);
    let den = chart_det(cx, ct) * chart_det(cy, cz);
    let num_zero = det_vanishes(&chart_det(cx, cz)) || det_vanishes(&chart_det(cy, ct));
    let den_zero = det_vanishes(&chart_det(cx, ct)) || det_vanishes(&chart_det(cy, cz));
    match (num_zero, den_zero) {
        (true, true) => Err(GeometryError::IndeterminateCrossRatio),
        (false, true) => Ok(ProjectiveScalar::Infinity),
        (true, false) => Ok(ProjectiveScalar::Finite(T::zero())),
        (false, false) => Ok(ProjectiveScalar::Finite(num / den)),
    }
}

/// Cross ratio of four points that the caller knows to be collinear.
pub fn cross_ratio_of<T: Field>(
    x: &ProjectivePoint<T>,
    y: &ProjectivePoint<T>,
    z: &ProjectivePoint<T>,
    t: &ProjectivePoint<T>,
) -> Result<ProjectiveScalar<T>> {
    cross_ratio(&CollinearQuad::new(
        x.clone(),
        y.clone(),
        z.clone(),
        t.clone(),
    )?)
}

/// True when the pair `{p, q}` separates the pair `{x, r}` on their common
/// line, i.e. `[p, q, x, r] < 0`.
pub fn separates<T: RealField>(
    p: &ProjectivePoint<T>,
    q: &ProjectivePoint<T>,
    x: &ProjectivePoint<T>,
    r: &ProjectivePoint<T>,
) -> Result<bool> {
    Ok(match cross_ratio_of(p, q, x, r)? {
        ProjectiveScalar::Finite(v) => v < T::zero() && !v.negligible(1.0),
        ProjectiveScalar::Infinity => false,
    })
}

/// An invertible projective transformation, identified up to scale.
#[derive(Clone, Debug)]
pub struct Collineation<T> {
    matrix: Vec<Vec<T>>,
}

impl<T: Field> Collineation<T> {
    /// Builds a collineation from a square `(n+1) x (n+1)` matrix.
    pub fn new(matrix: Vec<Vec<T>>) -> Result<Self> {
        let n = matrix.len();
        if n < 2 {
            return Err(GeometryError::DimensionMismatch {
                expected: 2,
                found: n,
            });
        }
        for row in &matrix {
            if row.len() != n {
                return Err(GeometryError::DimensionMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
        }
        let scale: f64 = matrix.iter().map(|r| linalg::norm2(r)).product();
        if linalg::det(&matrix).negligible(scale) {
            return Err(GeometryError::SingularCollineation);
        }
        Ok(Collineation { matrix })
    }

    pub fn identity(dim: usize) -> Self {
        Collineation {
            matrix: linalg::identity(dim + 1),
        }
    }

    /// The affine map `x -> m x + t` as a collineation.
    pub fn affine(linear: &[Vec<T>], translation: &[T]) -> Result<Self> {
        let n = linear.len();
        let mut matrix = vec![vec![T::zero(); n + 1]; n + 1];
        matrix[0][0] = T::one();
        for i in 0..n {
            matrix[i + 1][0] = translation[i].clone();
            for j in 0..n {
                matrix[i + 1][j + 1] = linear[i][j].clone();
            }
        }
        Self::new(matrix)
    }

    pub fn dim(&self) -> usize {
        self.matrix.len() - 1
    }

    pub fn matrix(&self) -> &[Vec<T>] {
        &self.matrix
    }

    pub fn apply(&self, p: &ProjectivePoint<T>) -> Result<ProjectivePoint<T>> {
        if p.dim() != self.dim() {
            return Err(GeometryError::DimensionMismatch {
                expected: self.dim(),
                found: p.dim(),
            });
        }
        ProjectivePoint::new(linalg::mat_vec(&self.matrix, &p.coords))
    }

    /// Applies the collineation to an affine point; `None` if it goes ideal.
    pub fn apply_affine(&self, p: &Point<T>) -> Result<Option<Point<T>>> {
        Ok(self.apply(&ProjectivePoint::from_affine(p))?.to_affine())
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Collineation<T>) -> Result<Self> {
        if other.dim() != self.dim() {
            return Err(GeometryError::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(Collineation {
            matrix: linalg::mat_mul(&self.matrix, &other.matrix),
        })
    }

    pub fn inverse(&self) -> Result<Self> {
        let scale: f64 = self.matrix.iter().map(|r| linalg::norm2(r)).product();
        linalg::inverse(&self.matrix, scale.powf(1.0 / self.matrix.len() as f64))
            .map(|matrix| Collineation { matrix })
            .ok_or(GeometryError::SingularCollineation)
    }
}

/// Applies `g` to `p`.
pub fn apply_collineation<T: Field>(
    g: &Collineation<T>,
    p: &ProjectivePoint<T>,
) -> Result<ProjectivePoint<T>> {
    g.apply(p)
}
