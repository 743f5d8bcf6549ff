//! Bounded convex polytopes carrying both representations.
//!
//! Whatever the input form, construction produces the extreme vertices and
//! the facet half-spaces `n · x <= c`, each facet with its incident vertices.
//! Facets are found by brute force over affinely independent `n`-subsets of
//! vertices; vertices of a half-space system by brute force over `n`-subsets
//! of constraints. Inputs are small, so the combinatorial cost is fine, and
//! the same code runs in exact arithmetic.

use crate::error::{GeometryError, Result};
use crate::linalg;
use crate::point::Point;
use crate::scalar::RealField;

use super::{ConvexDomain, Position};

/// Closed half-space `normal · x <= offset`.
#[derive(Clone, Debug, PartialEq)]
pub struct HalfSpace<T> {
    pub normal: Vec<T>,
    pub offset: T,
}

impl<T: RealField> HalfSpace<T> {
    pub fn new(normal: Vec<T>, offset: T) -> Self {
        HalfSpace { normal, offset }
    }

    /// `normal · p - offset`: negative inside, zero on the boundary.
    pub fn eval(&self, p: &[T]) -> T {
        linalg::dot(&self.normal, p) - self.offset.clone()
    }

    pub(crate) fn canonical(self) -> Self {
        // Exact: scale by the largest |component| (kept rational). Float: unit normal.
        let s = if T::EXACT {
            self.normal
                .iter()
                .map(RealField::abs)
                .fold(T::zero(), T::max_of)
        } else {
            T::from_f64(linalg::norm2(&self.normal))
        };
        HalfSpace {
            normal: self.normal.iter().map(|v| v.clone() / s.clone()).collect(),
            offset: self.offset / s,
        }
    }

    pub(crate) fn same_plane(&self, other: &Self, scale: f64) -> bool {
        self.normal
            .iter()
            .zip(&other.normal)
            .all(|(a, b)| (a.clone() - b.clone()).negligible(1.0))
            && (self.offset.clone() - other.offset.clone()).negligible(scale)
    }
}

/// A facet: its supporting half-space and the indices of its vertices.
#[derive(Clone, Debug)]
pub struct Facet<T> {
    pub halfspace: HalfSpace<T>,
    pub vertices: Vec<usize>,
}

/// A bounded convex polytope with nonempty interior.
#[derive(Clone, Debug)]
pub struct Polytope<T> {
    dim: usize,
    vertices: Vec<Point<T>>,
    facets: Vec<Facet<T>>,
    edges: Vec<[usize; 2]>,
    cycle: Option<Vec<usize>>,
    scale: f64,
}

fn feature_scale<T: RealField>(points: &[Point<T>]) -> f64 {
    points
        .iter()
        .map(|p| linalg::max_magnitude(p.coords()))
        .fold(1.0, f64::max)
}

impl<T: RealField> Polytope<T> {
    /// Convex hull of `points`. Duplicate and non-extreme points are dropped.
    pub fn from_vertices(points: Vec<Point<T>>) -> Result<Self> {
        let dim = points
            .first()
            .map(Point::dim)
            .ok_or(GeometryError::EmptyInterior)?;
        if dim == 0 {
            return Err(GeometryError::InvalidBody("zero-dimensional points".into()));
        }
        if let Some(p) = points.iter().find(|p| p.dim() != dim) {
            return Err(GeometryError::DimensionMismatch {
                expected: dim,
                found: p.dim(),
            });
        }
        if points
            .iter()
            .any(|p| p.coords().iter().any(|c| !c.to_f64().is_finite()))
        {
            return Err(GeometryError::InvalidBody("non-finite coordinate".into()));
        }
        let scale = feature_scale(&points);
        let mut pts: Vec<Point<T>> = Vec::new();
        for p in points {
            let dup = pts.iter().any(|q| {
                q.coords()
                    .iter()
                    .zip(p.coords())
                    .all(|(a, b)| (a.clone() - b.clone()).negligible(scale))
            });
            if !dup {
                pts.push(p);
            }
        }
        if pts.len() < dim + 1 {
            return Err(GeometryError::EmptyInterior);
        }
        let diffs: Vec<Vec<T>> = pts[1..].iter().map(|p| pts[0].vector_to(p)).collect();
        if linalg::rank(&diffs) < dim {
            return Err(GeometryError::EmptyInterior);
        }

        let mut planes: Vec<HalfSpace<T>> = Vec::new();
        for combo in linalg::combinations(pts.len(), dim) {
            let refs: Vec<&[T]> = combo.iter().map(|&i| pts[i].coords()).collect();
            let normal = linalg::hyperplane_normal(&refs);
            let nmag = linalg::norm2(&normal);
            if normal
                .iter()
                .all(|v| v.negligible(scale.powi(dim as i32 - 1)))
                || nmag == 0.0
            {
                continue;
            }
            let offset = linalg::dot(&normal, refs[0]);
            let h = HalfSpace::new(normal, offset).canonical();
            let vals: Vec<T> = pts.iter().map(|p| h.eval(p.coords())).collect();
            let pos = vals.iter().any(|v| v.sign(scale) > 0);
            let neg = vals.iter().any(|v| v.sign(scale) < 0);
            let h = match (pos, neg) {
                (true, true) => continue,
                (true, false) => {
                    HalfSpace::new(h.normal.iter().map(|v| -v.clone()).collect(), -h.offset)
                }
                _ => h,
            };
            if !planes.iter().any(|q| q.same_plane(&h, scale)) {
                planes.push(h);
            }
        }

        let incident = |h: &HalfSpace<T>, p: &Point<T>| h.eval(p.coords()).negligible(scale);
        let extreme: Vec<usize> = (0..pts.len())
            .filter(|&i| {
                let normals: Vec<Vec<T>> = planes
                    .iter()
                    .filter(|h| incident(h, &pts[i]))
                    .map(|h| h.normal.clone())
                    .collect();
                linalg::rank(&normals) == dim
            })
            .collect();
        let vertices: Vec<Point<T>> = extreme.iter().map(|&i| pts[i].clone()).collect();
        let facets: Vec<Facet<T>> = planes
            .into_iter()
            .map(|h| {
                let vs = (0..vertices.len())
                    .filter(|&i| incident(&h, &vertices[i]))
                    .collect();
                Facet {
                    halfspace: h,
                    vertices: vs,
                }
            })
            .collect();

        let mut edges = Vec::new();
        if dim >= 2 {
            for i in 0..vertices.len() {
                for j in i + 1..vertices.len() {
                    let normals: Vec<Vec<T>> = facets
                        .iter()
                        .filter(|f| f.vertices.contains(&i) && f.vertices.contains(&j))
                        .map(|f| f.halfspace.normal.clone())
                        .collect();
                    if linalg::rank(&normals) == dim - 1 {
                        edges.push([i, j]);
                    }
                }
            }
        }

        let mut poly = Polytope {
            dim,
            vertices,
            facets,
            edges,
            cycle: None,
            scale,
        };
        if dim == 2 {
            poly.cycle = Some(poly.boundary_cycle());
        }
        Ok(poly)
    }

    /// Intersection of half-spaces; fails unless bounded with nonempty interior.
    pub fn from_halfspaces(halfspaces: Vec<HalfSpace<T>>) -> Result<Self> {
        let dim = halfspaces
            .first()
            .map(|h| h.normal.len())
            .ok_or(GeometryError::UnboundedBody)?;
        if dim == 0 {
            return Err(GeometryError::InvalidBody(
                "zero-dimensional normals".into(),
            ));
        }
        if let Some(h) = halfspaces.iter().find(|h| h.normal.len() != dim) {
            return Err(GeometryError::DimensionMismatch {
                expected: dim,
                found: h.normal.len(),
            });
        }
        if halfspaces
            .iter()
            .any(|h| h.normal.iter().all(|v| v.is_zero()))
        {
            return Err(GeometryError::InvalidBody("zero normal".into()));
        }
        let scale = halfspaces
            .iter()
            .map(|h| h.offset.magnitude() / linalg::norm2(&h.normal))
            .fold(1.0, f64::max);

        // Bounded iff the recession cone {d : n_i · d <= 0} is trivial, i.e.
        // the cone clipped to the unit box has no vertex other than 0.
        let mut cone: Vec<HalfSpace<T>> = halfspaces
            .iter()
            .map(|h| HalfSpace::new(h.normal.clone(), T::zero()))
            .collect();
        for j in 0..dim {
            let mut e = vec![T::zero(); dim];
            e[j] = T::one();
            cone.push(HalfSpace::new(e.clone(), T::one()));
            e[j] = -T::one();
            cone.push(HalfSpace::new(e, T::one()));
        }
        let cone_vertices = enumerate_vertices(&cone, 1.0);
        if cone_vertices
            .iter()
            .any(|v| v.coords().iter().any(|c| !c.negligible(1.0)))
        {
            return Err(GeometryError::UnboundedBody);
        }

        let vertices = enumerate_vertices(&halfspaces, scale);
        if vertices.is_empty() {
            return Err(GeometryError::EmptyInterior);
        }
        let poly = Self::from_vertices(vertices)?;
        // Every input constraint must hold strictly at an interior point.
        let c = poly.centroid();
        if halfspaces
            .iter()
            .any(|h| h.eval(c.coords()).sign(scale) >= 0)
        {
            return Err(GeometryError::EmptyInterior);
        }
        Ok(poly)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Point<T>] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet<T>] {
        &self.facets
    }

    pub fn halfspaces(&self) -> impl Iterator<Item = &HalfSpace<T>> {
        self.facets.iter().map(|f| &f.halfspace)
    }

    /// Vertex index pairs spanning edges (dimension 2 and up).
    pub fn edges(&self) -> &[[usize; 2]] {
        &self.edges
    }

    /// Counter-clockwise vertex order of a polygon.
    pub fn cycle(&self) -> Option<&[usize]> {
        self.cycle.as_deref()
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }

    /// Vertex centroid; always interior.
    pub fn centroid(&self) -> Point<T> {
        let n = T::from_i64(self.vertices.len() as i64);
        let mut acc = vec![T::zero(); self.dim];
        for v in &self.vertices {
            acc = linalg::add(&acc, v.coords());
        }
        Point(acc.into_iter().map(|c| c / n.clone()).collect())
    }

    pub fn bounding_box(&self) -> (Vec<f64>, Vec<f64>) {
        let mut lo = vec![f64::INFINITY; self.dim];
        let mut hi = vec![f64::NEG_INFINITY; self.dim];
        for v in &self.vertices {
            for (k, c) in v.coords().iter().enumerate() {
                lo[k] = lo[k].min(c.to_f64());
                hi[k] = hi[k].max(c.to_f64());
            }
        }
        (lo, hi)
    }

    /// Closed containment, exact in exact mode.
    pub fn contains(&self, p: &Point<T>) -> bool {
        self.halfspaces()
            .all(|h| h.eval(p.coords()).sign(self.scale) <= 0)
    }

    pub fn contains_polytope(&self, inner: &Polytope<T>) -> bool {
        inner.vertices.iter().all(|v| self.contains(v))
    }

    /// Image under the affine map `x -> m x + t`.
    pub fn map_affine(&self, m: &[Vec<T>], t: &[T]) -> Result<Self> {
        Self::from_vertices(
            self.vertices
                .iter()
                .map(|v| Point(linalg::add(&linalg::mat_vec(m, v.coords()), t)))
                .collect(),
        )
    }

    pub fn to_f64(&self) -> Polytope<f64> {
        Polytope {
            dim: self.dim,
            vertices: self.vertices.iter().map(Point::to_f64).collect(),
            facets: self
                .facets
                .iter()
                .map(|f| Facet {
                    halfspace: HalfSpace::new(
                        f.halfspace.normal.iter().map(RealField::to_f64).collect(),
                        f.halfspace.offset.to_f64(),
                    ),
                    vertices: f.vertices.clone(),
                })
                .collect(),
            edges: self.edges.clone(),
            cycle: self.cycle.clone(),
            scale: self.scale,
        }
    }

    fn boundary_cycle(&self) -> Vec<usize> {
        let n = self.vertices.len();
        let neighbours = |i: usize| -> Vec<usize> {
            self.edges
                .iter()
                .filter_map(|&[a, b]| {
                    if a == i {
                        Some(b)
                    } else if b == i {
                        Some(a)
                    } else {
                        None
                    }
                })
                .collect()
        };
        let mut cycle = vec![0];
        let mut prev = usize::MAX;
        let mut cur = 0;
        while cycle.len() < n {
            let next = neighbours(cur)
                .into_iter()
                .find(|&v| v != prev && !cycle.contains(&v));
            match next {
                Some(v) => {
                    cycle.push(v);
                    prev = cur;
                    cur = v;
                }
                None => break,
            }
        }
        // Orient counter-clockwise by the sign of the shoelace sum.
        let area = (0..cycle.len()).fold(T::zero(), |acc, k| {
            let p = &self.vertices[cycle[k]];
            let q = &self.vertices[cycle[(k + 1) % cycle.len()]];
            acc + linalg::det2(&p.0[0], &p.0[1], &q.0[0], &q.0[1])
        });
        if area < T::zero() {
            cycle.reverse();
        }
        cycle
    }
}

/// Vertices of `{x : h_i(x) <= 0}` by solving every `n`-subset of
/// constraints with equality and keeping feasible, distinct solutions.
fn enumerate_vertices<T: RealField>(halfspaces: &[HalfSpace<T>], scale: f64) -> Vec<Point<T>> {
    let dim = halfspaces[0].normal.len();
    let mut out: Vec<Point<T>> = Vec::new();
    for combo in linalg::combinations(halfspaces.len(), dim) {
        let rows: Vec<Vec<T>> = combo
            .iter()
            .map(|&i| halfspaces[i].normal.clone())
            .collect();
        let rhs: Vec<T> = combo
            .iter()
            .map(|&i| halfspaces[i].offset.clone())
            .collect();
        let row_scale = rows.iter().map(|r| linalg::norm2(r)).fold(0.0, f64::max);
        let Some(x) = linalg::solve(&rows, &rhs, row_scale) else {
            continue;
        };
        let feasible = halfspaces.iter().all(|h| {
            let s = linalg::norm2(&h.normal) * scale.max(linalg::max_magnitude(&x));
            h.eval(&x).sign(s) <= 0
        });
        if !feasible {
            continue;
        }
        let dup = out.iter().any(|q| {
            q.coords()
                .iter()
                .zip(&x)
                .all(|(a, b)| (a.clone() - b.clone()).negligible(scale))
        });
        if !dup {
            out.push(Point(x));
        }
    }
    out
}

impl<T: RealField> ConvexDomain<T> for Polytope<T> {
    fn dim(&self) -> usize {
        self.dim
    }

    fn classify(&self, p: &Point<T>, eps: f64) -> Position {
        if eps == 0.0 {
            let mut boundary = false;
            for h in self.halfspaces() {
                let v = h.eval(p.coords());
                if v > T::zero() {
                    return Position::Exterior;
                }
                if v.is_zero() {
                    boundary = true;
                }
            }
            return if boundary {
                Position::Boundary
            } else {
                Position::Interior
            };
        }
        let signed = self
            .halfspaces()
            .map(|h| h.eval(p.coords()).to_f64() / linalg::norm2(&h.normal))
            .fold(f64::NEG_INFINITY, f64::max);
        if signed > eps {
            Position::Exterior
        } else if signed >= -eps {
            Position::Boundary
        } else {
            Position::Interior
        }
    }

    fn clip_line(&self, origin: &Point<T>, direction: &[T]) -> Result<(T, T)> {
        let mut lower: Option<T> = None;
        let mut upper: Option<T> = None;
        for h in self.halfspaces() {
            let slope = linalg::dot(&h.normal, direction);
            if slope.is_zero() {
                continue;
            }
            let t = -h.eval(origin.coords()) / slope.clone();
            if slope > T::zero() {
                upper = Some(match upper {
                    Some(u) => T::min_of(u, t),
                    None => t,
                });
            } else {
                lower = Some(match lower {
                    Some(l) => T::max_of(l, t),
                    None => t,
                });
            }
        }
        match (lower, upper) {
            (Some(l), Some(u)) if l < T::zero() && u > T::zero() => Ok((l, u)),
            (Some(_), Some(_)) => Err(GeometryError::PointsNotInterior),
            _ => Err(GeometryError::ZeroDirection),
        }
    }

    fn interior_point(&self) -> Point<T> {
        self.centroid()
    }
}
