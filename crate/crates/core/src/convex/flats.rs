//! Pairs of flat boundary pieces lying in a common plane section.
//!
//! These are where the triangle inequality of the Hilbert metric can become
//! an equality for non-collinear triples.

use crate::error::{GeometryError, Result};
use crate::frame::PlaneFrame;
use crate::linalg;
use crate::point::Point;
use crate::scalar::RealField;

use super::{HalfSpace, Polytope};

/// A boundary segment of positive length, in ambient coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct FlatPiece<T> {
    pub start: Point<T>,
    pub end: Point<T>,
}

impl<T: RealField> FlatPiece<T> {
    pub fn direction(&self) -> Vec<T> {
        self.start.vector_to(&self.end)
    }

    pub fn at(&self, t: &T) -> Point<T> {
        self.start.lerp(&self.end, t)
    }
}

/// A plane section of a body: the frame of the plane and the section
/// polygon in plane coordinates. In dimension 2 the plane is the ambient
/// plane with the standard frame.
#[derive(Clone, Debug)]
pub struct Section<T> {
    pub frame: PlaneFrame<T>,
    pub polygon: Polytope<T>,
}

/// Two boundary flats of one section.
#[derive(Clone, Debug)]
pub struct FlatPair<T> {
    pub first: FlatPiece<T>,
    pub second: FlatPiece<T>,
    pub section: Section<T>,
    /// The carrier lines are parallel, so they meet at an ideal point.
    pub parallel: bool,
}

/// All pairs of flats of a polygon, or of the plane sections of a 3D
/// polytope through its vertex centroid and the midpoints of two edges.
pub fn degenerate_flats<T: RealField>(body: &Polytope<T>) -> Result<Vec<FlatPair<T>>> {
    match body.dim() {
        2 => Ok(section_pairs(&Section {
            frame: PlaneFrame::standard(),
            polygon: body.clone(),
        })),
        3 => {
            let mut out = Vec::new();
            for section in sections(body)? {
                out.extend(section_pairs(&section));
            }
            Ok(out)
        }
        d => Err(GeometryError::UnsupportedDimension(d)),
    }
}

fn section_pairs<T: RealField>(section: &Section<T>) -> Vec<FlatPair<T>> {
    let poly = &section.polygon;
    let v = poly.vertices();
    let edges = poly.edges();
    let mut out = Vec::new();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            let (e, f) = (edges[i], edges[j]);
            let de = v[e[0]].vector_to(&v[e[1]]);
            let df = v[f[0]].vector_to(&v[f[1]]);
            let cross = linalg::det2(&de[0], &de[1], &df[0], &df[1]);
            let piece = |k: [usize; 2]| FlatPiece {
                start: section.frame.to_ambient(&v[k[0]]),
                end: section.frame.to_ambient(&v[k[1]]),
            };
            out.push(FlatPair {
                first: piece(e),
                second: piece(f),
                section: section.clone(),
                parallel: cross.negligible(poly.scale() * poly.scale()),
            });
        }
    }
    out
}

/// Distinct cutting planes, each with its section polygon.
fn sections<T: RealField>(body: &Polytope<T>) -> Result<Vec<Section<T>>> {
    let g = body.centroid();
    let v = body.vertices();
    let mids: Vec<Point<T>> = body
        .edges()
        .iter()
        .map(|&[a, b]| v[a].midpoint(&v[b]))
        .collect();
    let scale = body.scale();
    let mut planes: Vec<HalfSpace<T>> = Vec::new();
    let mut out = Vec::new();
    for i in 0..mids.len() {
        for j in i + 1..mids.len() {
            let (u, w) = (g.vector_to(&mids[i]), g.vector_to(&mids[j]));
            let normal = linalg::cross3(&u, &w);
            if normal.iter().all(|c| c.negligible(scale * scale)) {
                continue;
            }
            let offset = linalg::dot(&normal, g.coords());
            let mut plane = HalfSpace::new(normal, offset).canonical();
            // Fix the sign so that a plane and its negation coincide.
            if let Some(first) = plane.normal.iter().find(|c| !c.negligible(1.0)) {
                if *first < T::zero() {
                    plane = HalfSpace::new(
                        plane.normal.iter().map(|c| -c.clone()).collect(),
                        -plane.offset,
                    );
                }
            }
            if planes.iter().any(|p| p.same_plane(&plane, scale)) {
                continue;
            }
            let frame = PlaneFrame::new(g.clone(), u, w)?;
            let polygon = Polytope::from_vertices(cut(body, &plane, &frame))?;
            planes.push(plane);
            out.push(Section { frame, polygon });
        }
    }
    Ok(out)
}

/// Plane coordinates of the points where the edges of `body` meet `plane`.
fn cut<T: RealField>(
    body: &Polytope<T>,
    plane: &HalfSpace<T>,
    frame: &PlaneFrame<T>,
) -> Vec<Point<T>> {
    let v = body.vertices();
    let scale = body.scale();
    let mut pts = Vec::new();
    for &[a, b] in body.edges() {
        let va = plane.eval(v[a].coords());
        let vb = plane.eval(v[b].coords());
        let (sa, sb) = (va.sign(scale), vb.sign(scale));
        if sa == 0 {
            pts.push(frame.to_plane(&v[a]));
        }
        if sb == 0 {
            pts.push(frame.to_plane(&v[b]));
        }
        if sa * sb < 0 {
            let t = va.clone() / (va - vb);
            pts.push(frame.to_plane(&v[a].lerp(&v[b], &t)));
        }
    }
    pts
}
