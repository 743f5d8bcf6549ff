//! Distances and angles measured against a quadric absolute.
//!
//! A line `AB` meets the quadric `Q` where `(mu A + lambda B)^T Q (mu A + lambda B)`
//! vanishes, a binary quadratic form `a00 mu^2 + 2 a01 mu lambda + a11 lambda^2`.
//! The two roots `U, V` are real for a line crossing a real conic and complex
//! conjugate for a definite `Q`; the distance is read off `[A, B, U, V]`.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{GeometryError, Result};
use crate::linalg;
use crate::projective::{cross_ratio_of, Collineation, ProjectivePoint};
use crate::scalar::FLOAT_TOL;

/// Inertia of a symmetric matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Signature {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

/// A quadric `x^T Q x = 0` in homogeneous coordinates, `Q` up to scale.
#[derive(Clone, Debug)]
pub struct Quadric {
    matrix: Vec<Vec<f64>>,
    signature: Signature,
}

impl Quadric {
    pub fn new(matrix: Vec<Vec<f64>>) -> Result<Self> {
        let n = matrix.len();
        if n < 2 || matrix.iter().any(|r| r.len() != n) {
            return Err(GeometryError::InvalidQuadric(
                "matrix must be square, size >= 2",
            ));
        }
        let m = DMatrix::from_fn(n, n, |i, j| matrix[i][j]);
        if m.iter().any(|v| !v.is_finite()) {
            return Err(GeometryError::InvalidQuadric("non-finite entry"));
        }
        let scale = m.amax();
        if scale == 0.0 {
            return Err(GeometryError::InvalidQuadric("zero matrix"));
        }
        if (&m - m.transpose()).amax() > 1e-12 * scale {
            return Err(GeometryError::InvalidQuadric("matrix is not symmetric"));
        }
        let eig = m.symmetric_eigen();
        let tol = 1e-12 * eig.eigenvalues.amax();
        let mut signature = Signature {
            positive: 0,
            negative: 0,
            zero: 0,
        };
        for &l in eig.eigenvalues.iter() {
            if l > tol {
                signature.positive += 1;
            } else if l < -tol {
                signature.negative += 1;
            } else {
                signature.zero += 1;
            }
        }
        Ok(Quadric { matrix, signature })
    }

    /// `sum u_i^2` on `RP^n`: the elliptic absolute, with no real points.
    pub fn sum_of_squares(n: usize) -> Self {
        Self::new(linalg::identity(n + 1)).expect("identity is a valid quadric")
    }

    /// `-u_0^2 + sum_{i >= 1} u_i^2`; its interior is the unit ball.
    pub fn standard_cone(n: usize) -> Self {
        let mut m: Vec<Vec<f64>> = linalg::identity(n + 1);
        m[0][0] = -1.0;
        Self::new(m).expect("diagonal quadric is valid")
    }

    pub fn matrix(&self) -> &[Vec<f64>] {
        &self.matrix
    }

    pub fn signature(&self) -> Signature {
        self.signature
    }

    pub fn dim(&self) -> usize {
        self.matrix.len() - 1
    }

    pub fn is_definite(&self) -> bool {
        self.signature.zero == 0 && (self.signature.positive == 0 || self.signature.negative == 0)
    }

    /// Nondegenerate with exactly one eigenvalue of one sign.
    pub fn is_lorentzian(&self) -> bool {
        let s = self.signature;
        s.zero == 0 && s.positive.min(s.negative) == 1
    }

    pub fn form(&self, p: &[f64], q: &[f64]) -> f64 {
        linalg::dot(p, &linalg::mat_vec(&self.matrix, q))
    }

    /// The image quadric `g^{-T} Q g^{-1}` under the collineation `g`.
    pub fn transformed(&self, g: &Collineation<f64>) -> Result<Self> {
        let gi = g.inverse()?;
        let gi = gi.matrix();
        Self::new(linalg::mat_mul(
            &linalg::transpose(gi),
            &linalg::mat_mul(&self.matrix, gi),
        ))
    }

    /// Sign of `x^T Q x` inside the cone, when it is determined by `Q`.
    fn interior_sign(&self) -> Option<f64> {
        let s = self.signature;
        match (s.positive, s.negative) {
            (1, 1) => None,
            (1, _) => Some(1.0),
            _ => Some(-1.0),
        }
    }
}

/// Metric read off the absolute.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Convention {
    /// Definite absolute: `scale * |arg [A, B, U, V]|`.
    Elliptic,
    /// Lorentzian absolute, points inside the cone: `scale * |log [A, B, U, V]|`.
    Hyperbolic,
}

/// Roots `(mu, lambda)` of the binary form on the line `AB`, with the
/// discriminant `a01^2 - a00 a11`.
struct LineRoots {
    u: [Complex64; 2],
    v: [Complex64; 2],
    discriminant: f64,
}

fn line_roots(q: &Quadric, a: &[f64], b: &[f64]) -> Result<LineRoots> {
    let n = q.matrix.len();
    if a.len() != n || b.len() != n {
        return Err(GeometryError::DimensionMismatch {
            expected: n,
            found: if a.len() != n { a.len() } else { b.len() },
        });
    }
    let a00 = q.form(a, a);
    let a01 = q.form(a, b);
    let a11 = q.form(b, b);
    let qn = q
        .matrix
        .iter()
        .flatten()
        .fold(0.0f64, |m, v| m.max(v.abs()));
    let scale = qn * linalg::norm2(a).max(linalg::norm2(b)).powi(2);
    if [a00, a01, a11].iter().all(|c| c.abs() <= FLOAT_TOL * scale) {
        return Err(GeometryError::LineInAbsolute);
    }
    // The discriminant in the basis (A, B - A) has the same value and avoids
    // cancellation for nearby points.
    let h = linalg::sub(b, a);
    let a0h = q.form(a, &h);
    let ahh = q.form(&h, &h);
    let disc = a0h * a0h - a00 * ahh;
    if disc.abs() <= FLOAT_TOL * (a0h * a0h + (a00 * ahh).abs()) {
        return Err(GeometryError::Tangent);
    }
    let c = |re: f64, im: f64| Complex64::new(re, im);
    if disc > 0.0 {
        let root = disc.sqrt();
        let qq = -(a01 + a01.signum() * root);
        let qq = if a01 == 0.0 { -root } else { qq };
        Ok(LineRoots {
            u: [c(qq, 0.0), c(a00, 0.0)],
            v: [c(a11, 0.0), c(qq, 0.0)],
            discriminant: disc,
        })
    } else {
        let s = (-disc).sqrt();
        Ok(LineRoots {
            u: [c(a11, 0.0), c(-a01, s)],
            v: [c(a11, 0.0), c(-a01, -s)],
            discriminant: disc,
        })
    }
}

fn combine(a: &[f64], b: &[f64], r: &[Complex64; 2]) -> Result<ProjectivePoint<Complex64>> {
    ProjectivePoint::new(a.iter().zip(b).map(|(x, y)| r[0] * x + r[1] * y).collect())
}

/// The two points where the line `AB` meets the quadric, possibly complex.
pub fn absolute_intersections(
    q: &Quadric,
    a: &ProjectivePoint<f64>,
    b: &ProjectivePoint<f64>,
) -> Result<(ProjectivePoint<Complex64>, ProjectivePoint<Complex64>)> {
    if a.same_point(b) {
        return Err(GeometryError::CoincidentPoints);
    }
    let r = line_roots(q, a.coords(), b.coords())?;
    Ok((
        combine(a.coords(), b.coords(), &r.u)?,
        combine(a.coords(), b.coords(), &r.v)?,
    ))
}

/// `[A, B, U, V]` in the line coordinates where `A = (1, 0)`, `B = (0, 1)`.
fn line_cross_ratio(r: &LineRoots) -> Complex64 {
    (r.u[1] * r.v[0]) / (r.v[1] * r.u[0])
}

/// Cayley-Klein distance between two real points.
pub fn ck_distance(
    q: &Quadric,
    a: &ProjectivePoint<f64>,
    b: &ProjectivePoint<f64>,
    convention: Convention,
    scale: f64,
) -> Result<f64> {
    if !(scale > 0.0 && scale.is_finite()) {
        return Err(GeometryError::InvalidConfig("scale must be positive"));
    }
    if a.dim() != q.dim() || b.dim() != q.dim() {
        return Err(GeometryError::DimensionMismatch {
            expected: q.dim(),
            found: if a.dim() != q.dim() { a.dim() } else { b.dim() },
        });
    }
    let (a, b) = (a.normalized(), b.normalized());
    match convention {
        Convention::Elliptic => {
            if !q.is_definite() {
                return Err(GeometryError::InvalidQuadric(
                    "elliptic absolute must be definite",
                ));
            }
            if a.same_point(&b) {
                return Ok(0.0);
            }
            let r = line_roots(q, a.coords(), b.coords())?;
            Ok(scale * line_cross_ratio(&r).arg().abs())
        }
        Convention::Hyperbolic => {
            if !q.is_lorentzian() {
                return Err(GeometryError::InvalidQuadric(
                    "hyperbolic absolute must have Lorentz signature",
                ));
            }
            let (qa, qb) = (
                q.form(a.coords(), a.coords()),
                q.form(b.coords(), b.coords()),
            );
            let side = q.interior_sign().unwrap_or(qa.signum());
            if qa * side <= 0.0 || qb * side <= 0.0 {
                return Err(GeometryError::OutsideDomain);
            }
            if a.same_point(&b) {
                return Ok(0.0);
            }
            let r = line_roots(q, a.coords(), b.coords())?;
            debug_assert!(r.discriminant > 0.0);
            Ok(scale * line_cross_ratio(&r).re.abs().ln().abs())
        }
    }
}

/// Two lines through a common point, given by direction vectors.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LinePair {
    pub l: [f64; 2],
    pub m: [f64; 2],
}

impl LinePair {
    pub fn new(l: [f64; 2], m: [f64; 2]) -> Result<Self> {
        let zero = |d: &[f64; 2]| !(d[0] != 0.0 || d[1] != 0.0) || d.iter().any(|v| !v.is_finite());
        if zero(&l) || zero(&m) {
            return Err(GeometryError::ZeroDirection);
        }
        Ok(LinePair { l, m })
    }
}

/// Angle between two lines from the cross ratio with the isotropic
/// directions `(1, i)` and `(1, -i)`: `|arg [X, Y, U, V]| / 2`.
pub fn laguerre_angle(p: &LinePair) -> Result<f64> {
    let pt = |d: [f64; 2]| {
        ProjectivePoint::new(vec![Complex64::new(d[0], 0.0), Complex64::new(d[1], 0.0)])
    };
    let i = Complex64::new(0.0, 1.0);
    let u = ProjectivePoint::new(vec![Complex64::new(1.0, 0.0), i])?;
    let v = ProjectivePoint::new(vec![Complex64::new(1.0, 0.0), -i])?;
    let cr = cross_ratio_of(&pt(p.l)?, &pt(p.m)?, &u, &v)?
        .into_finite()
        .ok_or(GeometryError::ZeroDirection)?;
    Ok(cr.arg().abs() / 2.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

    fn pp(c: &[f64]) -> ProjectivePoint<f64> {
        ProjectivePoint::new(c.to_vec()).unwrap()
    }

    #[test]
    fn signatures() {
        assert!(Quadric::sum_of_squares(2).is_definite());
        let cone = Quadric::standard_cone(2);
        assert_eq!(
            cone.signature(),
            Signature {
                positive: 2,
                negative: 1,
                zero: 0
            }
        );
        assert!(cone.is_lorentzian());
        assert!(Quadric::new(vec![vec![0.0; 3]; 3]).is_err());
        assert!(Quadric::new(vec![vec![1.0, 2.0], vec![0.0, 1.0]]).is_err());
        let degenerate = Quadric::new(vec![vec![1.0, 0.0], vec![0.0, 0.0]]).unwrap();
        assert_eq!(degenerate.signature().zero, 1);
        assert!(!degenerate.is_definite() && !degenerate.is_lorentzian());
    }

    #[test]
    fn unit_circle_intersections() {
        let (u, v) = absolute_intersections(
            &Quadric::standard_cone(2),
            &pp(&[1.0, 0.0, 0.0]),
            &pp(&[1.0, 0.5, 0.0]),
        )
        .unwrap();
        let affine = |p: &ProjectivePoint<Complex64>| {
            let c = p.coords();
            [(c[1] / c[0]).re, (c[2] / c[0]).re, (c[1] / c[0]).im.abs()]
        };
        let (mut xu, mut xv) = (affine(&u), affine(&v));
        if xu[0] > xv[0] {
            std::mem::swap(&mut xu, &mut xv);
        }
        assert!((xu[0] + 1.0).abs() < 1e-15 && (xv[0] - 1.0).abs() < 1e-15);
        assert!(xu[1].abs() < 1e-15 && xu[2] < 1e-15);
    }

    #[test]
    fn definite_absolute_gives_conjugates() {
        let (u, v) = absolute_intersections(
            &Quadric::sum_of_squares(2),
            &pp(&[1.0, 0.2, -0.3]),
            &pp(&[0.4, 1.0, 2.0]),
        )
        .unwrap();
        let conj: Vec<Complex64> = u.coords().iter().map(|c| c.conj()).collect();
        assert!(ProjectivePoint::new(conj).unwrap().same_point(&v));
        assert!(u.coords().iter().any(|c| c.im.abs() > 1e-3));
    }

    #[test]
    fn incident_point_is_a_root() {
        let cone = Quadric::standard_cone(2);
        let a = pp(&[1.0, 0.6, 0.8]);
        let (u, _) = absolute_intersections(&cone, &a, &pp(&[1.0, 0.0, 0.0])).unwrap();
        let ar = a.map(|x| Complex64::new(*x, 0.0));
        assert!(u.same_point(&ar));
    }

    #[test]
    fn tangent_and_absolute_lines() {
        let cone = Quadric::standard_cone(2);
        // The line y = 1 touches the unit circle at (0, 1).
        let r = absolute_intersections(&cone, &pp(&[1.0, -1.0, 1.0]), &pp(&[1.0, 2.0, 1.0]));
        assert_eq!(r.unwrap_err(), GeometryError::Tangent);
        // A degenerate quadric can contain a whole line.
        let pair = Quadric::new(vec![
            vec![0.0, 0.0, 0.0],
            vec![0.0, 1.0, 0.0],
            vec![0.0, 0.0, -1.0],
        ])
        .unwrap();
        let r = absolute_intersections(&pair, &pp(&[1.0, 0.0, 0.0]), &pp(&[1.0, 1.0, 1.0]));
        assert_eq!(r.unwrap_err(), GeometryError::LineInAbsolute);
    }

    #[test]
    fn elliptic_line_distance() {
        let q = Quadric::sum_of_squares(1);
        let d = ck_distance(
            &q,
            &pp(&[1.0, 0.0]),
            &pp(&[1.0, 1.0]),
            Convention::Elliptic,
            0.5,
        )
        .unwrap();
        assert!((d - FRAC_PI_4).abs() < 1e-15);
        let d = ck_distance(
            &q,
            &pp(&[1.0, 2.0]),
            &pp(&[-1.0, -2.0]),
            Convention::Elliptic,
            0.5,
        )
        .unwrap();
        assert_eq!(d, 0.0);
    }

    #[test]
    fn hyperbolic_matches_klein_model() {
        let d = ck_distance(
            &Quadric::standard_cone(2),
            &pp(&[1.0, 0.0, 0.0]),
            &pp(&[1.0, 0.5, 0.0]),
            Convention::Hyperbolic,
            0.5,
        )
        .unwrap();
        assert!((d - 0.5f64.atanh()).abs() < 1e-15);
        let outside = ck_distance(
            &Quadric::standard_cone(2),
            &pp(&[1.0, 0.0, 0.0]),
            &pp(&[1.0, 1.5, 0.0]),
            Convention::Hyperbolic,
            0.5,
        );
        assert_eq!(outside.unwrap_err(), GeometryError::OutsideDomain);
        let wrong = ck_distance(
            &Quadric::standard_cone(2),
            &pp(&[1.0, 0.0, 0.0]),
            &pp(&[1.0, 0.5, 0.0]),
            Convention::Elliptic,
            0.5,
        );
        assert!(matches!(wrong, Err(GeometryError::InvalidQuadric(_))));
    }

    #[test]
    fn laguerre_examples() {
        let a = laguerre_angle(&LinePair::new([1.0, 0.0], [1.0, 1.0]).unwrap()).unwrap();
        assert!((a - FRAC_PI_4).abs() < 1e-15);
        let a = laguerre_angle(&LinePair::new([1.0, 0.0], [0.0, 1.0]).unwrap()).unwrap();
        assert!((a - FRAC_PI_2).abs() < 1e-15);
        let a = laguerre_angle(&LinePair::new([2.0, 3.0], [-4.0, -6.0]).unwrap()).unwrap();
        assert_eq!(a, 0.0);
        assert_eq!(
            LinePair::new([0.0, 0.0], [1.0, 0.0]).unwrap_err(),
            GeometryError::ZeroDirection
        );
    }
}
