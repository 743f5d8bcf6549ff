use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{GeometryError, Result};

use super::{ConvexBody, ConvexDomain, Ellipsoid, Polytope, Position};

/// Relative slack for containment of computed boundary points.
const NEST_TOL: f64 = 1e-12;

/// True when every point of `inner` lies in `outer`.
///
/// Polytope inners are decided by their vertices, ellipsoid inners by
/// support functions (polytope outer) or by maximising the outer quadratic
/// form over the inner ellipsoid. Oracle inners, and ellipsoids inside an
/// oracle, have no exact test; see [`is_nested_sampled`].
pub fn is_nested(inner: &ConvexBody, outer: &ConvexBody) -> Result<bool> {
    if inner.dim() != outer.dim() {
        return Err(GeometryError::DimensionMismatch {
            expected: outer.dim(),
            found: inner.dim(),
        });
    }
    match (inner, outer) {
        (ConvexBody::Polytope(p), _) => Ok(vertices_inside(p, outer)),
        (ConvexBody::Ellipsoid(e), ConvexBody::Polytope(p)) => Ok(p.halfspaces().all(|h| {
            let n = crate::linalg::norm2(&h.normal);
            e.support(&h.normal) <= h.offset + NEST_TOL * n * p.scale()
        })),
        (ConvexBody::Ellipsoid(e), ConvexBody::Ellipsoid(f)) => {
            Ok(max_level_over(e, f) <= 1.0 + NEST_TOL)
        }
        _ => Err(GeometryError::UnsupportedPair),
    }
}

fn vertices_inside(p: &Polytope<f64>, outer: &ConvexBody) -> bool {
    let scale = p.scale();
    p.vertices().iter().all(|v| match outer {
        ConvexBody::Polytope(q) => q.contains(v),
        ConvexBody::Ellipsoid(e) => e.level(v.coords()) <= 1.0 + NEST_TOL,
        ConvexBody::Oracle(o) => o.classify(v, NEST_TOL * scale) != Position::Exterior,
    })
}

/// `max (x - c_f)^T Q_f (x - c_f)` over `x` in `e`.
///
/// With `x = c_e + L u`, `L L^T = Q_e^{-1}`, this is a convex quadratic over
/// the unit ball, maximised on the sphere. The Lagrange condition
/// `(lambda - M) u = b` is solved in the eigenbasis of `M` by bisection on the
/// secular equation `sum b_i^2 / (lambda - mu_i)^2 = 1`.
fn max_level_over(e: &Ellipsoid, f: &Ellipsoid) -> f64 {
    let l = e
        .inverse_shape()
        .clone()
        .cholesky()
        .expect("positive definite")
        .l();
    let d: DVector<f64> = DVector::from_column_slice(e.center().coords())
        - DVector::from_column_slice(f.center().coords());
    let m: DMatrix<f64> = l.transpose() * f.shape() * &l;
    let b: DVector<f64> = l.transpose() * (f.shape() * &d);
    let k = d.dot(&(f.shape() * &d));

    let eig = m.symmetric_eigen();
    let mu = &eig.eigenvalues;
    let beta: DVector<f64> = eig.eigenvectors.transpose() * &b;
    let top = mu.max();
    let bnorm = beta.norm();
    let value = |u: &DVector<f64>| -> f64 {
        (0..u.len())
            .map(|i| mu[i] * u[i] * u[i] + 2.0 * beta[i] * u[i])
            .sum::<f64>()
            + k
    };
    if bnorm == 0.0 {
        return top + k;
    }
    let gap_tol = 1e-12 * top.abs().max(1.0);
    let secular = |lambda: f64, skip_top: bool| -> f64 {
        (0..mu.len())
            .filter(|&i| !(skip_top && top - mu[i] <= gap_tol))
            .map(|i| (beta[i] / (lambda - mu[i])).powi(2))
            .sum()
    };
    let top_weight: f64 = (0..mu.len())
        .filter(|&i| top - mu[i] <= gap_tol)
        .map(|i| beta[i] * beta[i])
        .sum();
    if top_weight.sqrt() <= 1e-14 * bnorm && secular(top, true) <= 1.0 {
        // Hard case: lambda = top, and the top eigenspace absorbs the slack.
        let mut u = DVector::zeros(mu.len());
        let mut rest = 0.0;
        for i in 0..mu.len() {
            if top - mu[i] > gap_tol {
                u[i] = beta[i] / (top - mu[i]);
                rest += u[i] * u[i];
            }
        }
        let i_top = (0..mu.len()).find(|&i| top - mu[i] <= gap_tol).unwrap();
        u[i_top] = (1.0 - rest).max(0.0).sqrt();
        return value(&u);
    }
    let (mut lo, mut hi) = (top, top + bnorm);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid == lo || mid == hi {
            break;
        }
        if secular(mid, false) > 1.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let u = DVector::from_fn(mu.len(), |i, _| beta[i] / (hi - mu[i]));
    value(&u)
}

/// Heuristic nesting test: checks `samples` boundary points of `inner`,
/// taken along seeded random directions from an interior point.
///
/// A `true` answer is evidence, not proof; `false` is always a witness.
pub fn is_nested_sampled(
    inner: &ConvexBody,
    outer: &ConvexBody,
    samples: usize,
    seed: u64,
) -> Result<bool> {
    if inner.dim() != outer.dim() {
        return Err(GeometryError::DimensionMismatch {
            expected: outer.dim(),
            found: inner.dim(),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let origin = inner.interior_point();
    let tol = 1e-9 * inner.diameter().max(outer.diameter());
    for _ in 0..samples {
        let dir: Vec<f64> = (0..inner.dim())
            .map(|_| rng.random_range(-1.0..1.0))
            .collect();
        if dir.iter().all(|v| *v == 0.0) {
            continue;
        }
        let (_, t) = inner.clip_line(&origin, &dir)?;
        let p = origin.offset(&dir, &t);
        if outer.classify(&p, tol) == Position::Exterior {
            return Ok(false);
        }
    }
    Ok(true)
}
