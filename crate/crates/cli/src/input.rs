//! Body files and point arguments.

use std::path::Path;

use projmetric::cayley_klein::Quadric;
use projmetric::convex::{ConvexBody, Ellipsoid, HalfSpace, Polytope};
use projmetric::scalar::{parse_rational, Rational, RealField};
use projmetric::Point;
use serde::Deserialize;

use crate::error::{CliError, CliResult};

/// A number in a body file: a JSON number or a string such as `"1/3"`.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum Num {
    Number(serde_json::Number),
    Text(String),
}

impl Num {
    fn text(&self) -> String {
        match self {
            Num::Number(n) => n.to_string(),
            Num::Text(s) => s.clone(),
        }
    }

    fn value<T: Scalar>(&self) -> CliResult<T> {
        let text = self.text();
        T::parse(&text).ok_or_else(|| CliError::Parse(format!("bad number {text:?}")))
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(tag = "type", deny_unknown_fields)]
pub enum BodySpec {
    /// Vertex list; any dimension is accepted.
    #[serde(rename = "polygon")]
    Polygon { vertices: Vec<Vec<Num>> },
    /// Rows `[n_1, ..., n_d, c]` meaning `n . x <= c`.
    #[serde(rename = "polytope-h")]
    PolytopeH { halfspaces: Vec<Vec<Num>> },
    /// `(x - center)^T shape (x - center) <= 1`.
    #[serde(rename = "ellipsoid")]
    Ellipsoid {
        center: Vec<Num>,
        shape: Vec<Vec<Num>>,
    },
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuadricSpec {
    pub matrix: Vec<Vec<Num>>,
}

/// Scalars the CLI can read from text.
pub trait Scalar: RealField {
    fn parse(text: &str) -> Option<Self>;
}

impl Scalar for f64 {
    fn parse(text: &str) -> Option<Self> {
        let text = text.trim();
        let v = match text.parse::<f64>() {
            Ok(v) => v,
            Err(_) => parse_rational(text)?.to_f64(),
        };
        v.is_finite().then_some(v)
    }
}

impl Scalar for Rational {
    fn parse(text: &str) -> Option<Self> {
        parse_rational(text)
    }
}

fn row<T: Scalar>(values: &[Num]) -> CliResult<Vec<T>> {
    values.iter().map(Num::value).collect()
}

fn read_json<S: for<'de> Deserialize<'de>>(path: &Path) -> CliResult<S> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

pub fn read_body(path: &Path) -> CliResult<BodySpec> {
    read_json(path)
}

pub fn read_quadric(path: &Path) -> CliResult<Quadric> {
    let spec: QuadricSpec = read_json(path)?;
    let m = spec
        .matrix
        .iter()
        .map(|r| row::<f64>(r))
        .collect::<CliResult<Vec<_>>>()?;
    Ok(Quadric::new(m)?)
}

fn points<T: Scalar>(rows: &[Vec<Num>]) -> CliResult<Vec<Point<T>>> {
    rows.iter().map(|r| row(r).map(Point)).collect()
}

fn halfspaces<T: Scalar>(rows: &[Vec<Num>]) -> CliResult<Vec<HalfSpace<T>>> {
    rows.iter()
        .map(|r| {
            let mut v: Vec<T> = row(r)?;
            let c = v.pop().filter(|_| !v.is_empty()).ok_or_else(|| {
                CliError::Parse("half-space rows need a normal and an offset".into())
            })?;
            Ok(HalfSpace::new(v, c))
        })
        .collect()
}

impl BodySpec {
    pub fn to_float(&self) -> CliResult<ConvexBody> {
        Ok(match self {
            BodySpec::Polygon { vertices } => ConvexBody::polygon(points(vertices)?)?,
            BodySpec::PolytopeH { halfspaces: rows } => {
                ConvexBody::from_halfspaces(halfspaces(rows)?)?
            }
            BodySpec::Ellipsoid { center, shape } => {
                let shape = shape
                    .iter()
                    .map(|r| row(r))
                    .collect::<CliResult<Vec<_>>>()?;
                ConvexBody::Ellipsoid(Ellipsoid::new(Point(row(center)?), shape)?)
            }
        })
    }

    pub fn to_exact(&self) -> CliResult<Polytope<Rational>> {
        match self {
            BodySpec::Polygon { vertices } => Ok(Polytope::from_vertices(points(vertices)?)?),
            BodySpec::PolytopeH { halfspaces: rows } => {
                Ok(Polytope::from_halfspaces(halfspaces(rows)?)?)
            }
            BodySpec::Ellipsoid { .. } => Err(CliError::Unsupported(
                "ellipsoids have no exact representation; use --mode float".into(),
            )),
        }
    }
}

/// Parses `"x y"`, `"x,y"` or a single value into a point.
pub fn parse_point<T: Scalar>(text: &str) -> CliResult<Point<T>> {
    let coords = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| {
            T::parse(s).ok_or_else(|| CliError::Parse(format!("bad coordinate {s:?} in {text:?}")))
        })
        .collect::<CliResult<Vec<T>>>()?;
    if coords.is_empty() {
        return Err(CliError::Parse(format!("empty point {text:?}")));
    }
    Ok(Point(coords))
}

#[cfg(test)]
mod tests {
    use super::*;
    use projmetric::scalar::Field;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    #[test]
    fn numbers_in_both_forms() {
        let spec: BodySpec =
            serde_json::from_str(r#"{"type":"polygon","vertices":[[0,0],["1/3",0],[0,0.5]]}"#)
                .unwrap();
        let exact = spec.to_exact().unwrap();
        assert!(exact.vertices().contains(&Point(vec![q(1, 3), q(0, 1)])));
        assert!(exact.vertices().contains(&Point(vec![q(0, 1), q(1, 2)])));
        assert_eq!(
            spec.to_float()
                .unwrap()
                .as_polytope()
                .unwrap()
                .vertices()
                .len(),
            3
        );
    }

    #[test]
    fn halfspace_rows() {
        let spec: BodySpec = serde_json::from_str(
            r#"{"type":"polytope-h","halfspaces":[[1,0,1],[-1,0,1],[0,1,1],[0,-1,1]]}"#,
        )
        .unwrap();
        assert_eq!(spec.to_exact().unwrap().vertices().len(), 4);
        let bad: BodySpec =
            serde_json::from_str(r#"{"type":"polytope-h","halfspaces":[[1]]}"#).unwrap();
        assert!(matches!(bad.to_float(), Err(CliError::Parse(_))));
    }

    #[test]
    fn ellipsoids_are_float_only() {
        let spec: BodySpec =
            serde_json::from_str(r#"{"type":"ellipsoid","center":[0,0],"shape":[[1,0],[0,1]]}"#)
                .unwrap();
        assert!(spec.to_float().is_ok());
        assert!(matches!(spec.to_exact(), Err(CliError::Unsupported(_))));
    }

    #[test]
    fn unknown_types_fail_to_parse() {
        assert!(serde_json::from_str::<BodySpec>(r#"{"type":"blob"}"#).is_err());
    }

    #[test]
    fn point_syntax() {
        assert_eq!(
            parse_point::<f64>("0.5 -1").unwrap(),
            Point(vec![0.5, -1.0])
        );
        assert_eq!(parse_point::<f64>("1/4,2").unwrap(), Point(vec![0.25, 2.0]));
        assert!(parse_point::<f64>("x").is_err());
        assert!(parse_point::<f64>(" ").is_err());
    }
}
