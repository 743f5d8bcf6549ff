use std::io::Write;
use std::path::Path;

use projmetric::cayley_klein::{ck_distance, laguerre_angle, Convention, LinePair, Quadric};
use projmetric::convex::{degenerate_flats, ConvexBody, ConvexDomain, Polytope};
use projmetric::hilbert::{
    ball_boundary, find_equality_triple, geodesic_point, hilbert_distance, triangle_construction,
    HilbertConfig, TriangleCertificate,
};
use projmetric::order::run_order_axioms;
use projmetric::projective::{
    default_auxiliaries, harmonic_conjugate_analytic, harmonic_conjugate_synthetic, ProjectivePoint,
};
use projmetric::scalar::{Rational, RealField};
use projmetric::{GeometryError, Point};

use crate::error::{CliError, CliResult};
use crate::input::{parse_point, read_body, read_quadric, Scalar};
use crate::output::{axis_names, coords, csv_row, num};
use crate::svg::Figure;

/// Samples used to draw a curved boundary.
const OUTLINE_SAMPLES: usize = 256;

fn point_in<T: Scalar>(text: &str, dim: usize) -> CliResult<Point<T>> {
    let p = parse_point(text)?;
    if p.dim() != dim {
        return Err(GeometryError::DimensionMismatch {
            expected: dim,
            found: p.dim(),
        }
        .into());
    }
    Ok(p)
}

pub fn dist(
    out: &mut dyn Write,
    body: &Path,
    a: &str,
    b: &str,
    scale: f64,
    exact: bool,
) -> CliResult<()> {
    let spec = read_body(body)?;
    let cfg = HilbertConfig::new(scale)?;
    let d = if exact {
        let body = spec.to_exact()?;
        let (a, b) = (
            point_in::<Rational>(a, body.dim())?,
            point_in(b, body.dim())?,
        );
        hilbert_distance(&body, &a, &b, &cfg)?
    } else {
        let body = spec.to_float()?;
        let (a, b) = (point_in::<f64>(a, body.dim())?, point_in(b, body.dim())?);
        hilbert_distance(&body, &a, &b, &cfg)?
    };
    writeln!(out, "{}", num(d))?;
    Ok(())
}

fn outline(body: &ConvexBody) -> CliResult<Vec<[f64; 2]>> {
    if body.dim() != 2 {
        return Err(CliError::Unsupported("figures need a planar body".into()));
    }
    if let Some(cycle) = body.as_polytope().and_then(|p| p.cycle().map(|c| (p, c))) {
        let (poly, cycle) = cycle;
        return Ok(cycle
            .iter()
            .map(|&i| {
                let v = poly.vertices()[i].coords();
                [v[0], v[1]]
            })
            .collect());
    }
    let o = body.interior_point();
    (0..OUTLINE_SAMPLES)
        .map(|k| {
            let th = std::f64::consts::TAU * k as f64 / OUTLINE_SAMPLES as f64;
            let dir = [th.cos(), th.sin()];
            let (_, t) = body.clip_line(&o, &dir)?;
            Ok([o.0[0] + t * dir[0], o.0[1] + t * dir[1]])
        })
        .collect()
}

fn planar<T: RealField>(p: &Point<T>) -> [f64; 2] {
    let p = p.to_f64();
    [p.0[0], p.0[1]]
}

fn planar_projective<T: RealField>(p: &ProjectivePoint<T>) -> Option<[f64; 2]> {
    p.to_f64().to_affine().map(|q| [q.0[0], q.0[1]])
}

fn figure<T: RealField>(cert: &TriangleCertificate<T>, boundary: Vec<[f64; 2]>) -> Figure {
    let w = cert.w.to_f64();
    let (dx, dy) = (w.coords()[1], w.coords()[2]);
    let len = dx.hypot(dy);
    Figure {
        boundary,
        a: planar(&cert.a),
        c: planar(&cert.c),
        b: planar(&cert.b),
        u: planar(&cert.u),
        v: planar(&cert.v),
        z: planar(&cert.z),
        t: planar(&cert.t),
        x: planar(&cert.x),
        y: planar(&cert.y),
        w: planar_projective(&cert.w),
        w_direction: [dx / len, dy / len],
        x_prime: planar_projective(&cert.x_prime),
        y_prime: planar_projective(&cert.y_prime),
        d: planar_projective(&cert.d),
    }
}

fn report<T: RealField>(out: &mut dyn Write, cert: &TriangleCertificate<T>) -> CliResult<()> {
    let equality = if T::EXACT {
        cert.cr_prod == cert.cr_ab
    } else {
        cert.excess().abs() <= 1e-9
    };
    let rows = [
        ("A", coords(cert.a.to_f64().coords())),
        ("C", coords(cert.c.to_f64().coords())),
        ("B", coords(cert.b.to_f64().coords())),
        ("cr_AC", num(cert.cr_ac.to_f64())),
        ("cr_CB", num(cert.cr_cb.to_f64())),
        ("cr_prod", num(cert.cr_prod.to_f64())),
        ("cr_AB", num(cert.cr_ab.to_f64())),
        (
            "identities",
            if cert.identities_hold() {
                "hold"
            } else {
                "fail"
            }
            .to_string(),
        ),
        (
            "verdict",
            if equality {
                "equality"
            } else {
                "inequality strict"
            }
            .to_string(),
        ),
    ];
    for (name, value) in rows {
        writeln!(out, "{name:<10} {value}")?;
    }
    Ok(())
}

fn certificate<T: Scalar, D: ConvexDomain<T>>(
    body: &D,
    poly: Option<&Polytope<T>>,
    points: Option<[&str; 3]>,
    flats: Option<usize>,
) -> CliResult<TriangleCertificate<T>> {
    let (a, c, b) = match (points, flats) {
        (_, Some(k)) => {
            let poly =
                poly.ok_or_else(|| CliError::Unsupported("--flats needs a polytope body".into()))?;
            let pairs = degenerate_flats(poly)?;
            let pair = pairs.get(k).ok_or_else(|| {
                CliError::Parse(format!(
                    "flat pair {k} out of range (body has {})",
                    pairs.len()
                ))
            })?;
            find_equality_triple(poly, pair)?
        }
        (Some([a, c, b]), None) => {
            let n = body.dim();
            (point_in(a, n)?, point_in(c, n)?, point_in(b, n)?)
        }
        (None, None) => return Err(CliError::Parse("give A C B or --flats".into())),
    };
    Ok(triangle_construction(body, &a, &c, &b)?)
}

pub fn triangle(
    out: &mut dyn Write,
    body: &Path,
    points: Option<[&str; 3]>,
    flats: Option<usize>,
    svg: Option<&Path>,
    exact: bool,
) -> CliResult<()> {
    let spec = read_body(body)?;
    let mut text = Vec::new();
    let drawing = if exact {
        let body = spec.to_exact()?;
        let cert = certificate(&body, Some(&body), points, flats)?;
        report(&mut text, &cert)?;
        match svg {
            Some(_) => Some(figure(
                &cert,
                outline(&ConvexBody::Polytope(body.to_f64()))?,
            )),
            None => None,
        }
    } else {
        let body = spec.to_float()?;
        let cert = certificate(&body, body.as_polytope(), points, flats)?;
        report(&mut text, &cert)?;
        match svg {
            Some(_) => Some(figure(&cert, outline(&body)?)),
            None => None,
        }
    };
    if let (Some(path), Some(fig)) = (svg, drawing) {
        std::fs::write(path, fig.render())?;
    }
    out.write_all(&text)?;
    Ok(())
}

pub fn ball(
    out: &mut dyn Write,
    body: &Path,
    center: &str,
    r: f64,
    samples: usize,
    scale: f64,
) -> CliResult<()> {
    let body = read_body(body)?.to_float()?;
    let cfg = HilbertConfig::new(scale)?;
    let c = point_in::<f64>(center, body.dim())?;
    let pts = ball_boundary(&body, &c, r, samples, &cfg)?;
    let mut header = axis_names(body.dim());
    header.push("distance".into());
    writeln!(out, "{}", header.join(","))?;
    for p in pts {
        let mut row = p.0.clone();
        row.push(hilbert_distance(&body, &c, &p, &cfg)?);
        writeln!(out, "{}", csv_row(&row))?;
    }
    Ok(())
}

pub fn geodesic(
    out: &mut dyn Write,
    body: &Path,
    a: &str,
    b: &str,
    samples: usize,
    scale: f64,
) -> CliResult<()> {
    if samples < 2 {
        return Err(GeometryError::InvalidConfig("at least 2 samples are required").into());
    }
    let body = read_body(body)?.to_float()?;
    let cfg = HilbertConfig::new(scale)?;
    let (a, b) = (point_in::<f64>(a, body.dim())?, point_in(b, body.dim())?);
    let total = hilbert_distance(&body, &a, &b, &cfg)?;
    let mut header = vec!["s".to_string()];
    header.extend(axis_names(body.dim()));
    header.push("distance".into());
    writeln!(out, "{}", header.join(","))?;
    for k in 0..samples {
        let s = if k + 1 == samples {
            total
        } else {
            total * k as f64 / (samples - 1) as f64
        };
        let p = if total == 0.0 {
            a.clone()
        } else {
            geodesic_point(&body, &a, &b, s, &cfg)?
        };
        let mut row = vec![s];
        row.extend_from_slice(p.coords());
        row.push(hilbert_distance(&body, &a, &p, &cfg)?);
        writeln!(out, "{}", csv_row(&row))?;
    }
    Ok(())
}

fn direction(text: &str) -> CliResult<[f64; 2]> {
    let p = point_in::<f64>(text, 2)?;
    Ok([p.0[0], p.0[1]])
}

pub fn angle(out: &mut dyn Write, l: &str, m: &str) -> CliResult<()> {
    let pair = LinePair::new(direction(l)?, direction(m)?)?;
    writeln!(out, "{}", num(laguerre_angle(&pair)?))?;
    Ok(())
}

pub fn ck(
    out: &mut dyn Write,
    a: &str,
    b: &str,
    convention: Convention,
    quadric: Option<&Path>,
    scale: f64,
    homogeneous: bool,
) -> CliResult<()> {
    let lift = |text: &str| -> CliResult<ProjectivePoint<f64>> {
        let p = parse_point::<f64>(text)?;
        Ok(if homogeneous {
            ProjectivePoint::new(p.0)?
        } else {
            ProjectivePoint::from_affine(&p)
        })
    };
    let (a, b) = (lift(a)?, lift(b)?);
    let q = match quadric {
        Some(path) => read_quadric(path)?,
        None => {
            let n = a.dim();
            match convention {
                Convention::Elliptic => Quadric::sum_of_squares(n),
                Convention::Hyperbolic => Quadric::standard_cone(n),
            }
        }
    };
    writeln!(out, "{}", num(ck_distance(&q, &a, &b, convention, scale)?))?;
    Ok(())
}

/// A point of the line (1D input, embedded as `(1, x, 0)`, with `inf`
/// allowed) or of the plane.
fn harmonic_point<T: Scalar>(text: &str) -> CliResult<(usize, ProjectivePoint<T>)> {
    if text.trim().eq_ignore_ascii_case("inf") {
        return Ok((
            1,
            ProjectivePoint::new(vec![T::zero(), T::one(), T::zero()])?,
        ));
    }
    let p = parse_point::<T>(text)?;
    match p.dim() {
        1 => Ok((
            1,
            ProjectivePoint::from_affine(&Point(vec![p.0[0].clone(), T::zero()])),
        )),
        2 => Ok((2, ProjectivePoint::from_affine(&p))),
        n => Err(GeometryError::UnsupportedDimension(n).into()),
    }
}

fn conjugate<T: Scalar>(
    a: &str,
    b: &str,
    c: &str,
    synthetic: bool,
) -> CliResult<(usize, ProjectivePoint<T>)> {
    let (da, pa) = harmonic_point::<T>(a)?;
    let (db, pb) = harmonic_point::<T>(b)?;
    let (dc, pc) = harmonic_point::<T>(c)?;
    if da != db || da != dc {
        return Err(CliError::Parse(
            "points must all be on a line or all in the plane".into(),
        ));
    }
    let d = if synthetic {
        let (e, f) = default_auxiliaries(&pa, &pc)?;
        harmonic_conjugate_synthetic(&pa, &pb, &pc, &e, &f)?
    } else {
        harmonic_conjugate_analytic(&pa, &pb, &pc)?
    };
    Ok((da, d))
}

fn show_conjugate<T: RealField>(
    dim: usize,
    d: &ProjectivePoint<T>,
    show: impl Fn(&T) -> String,
) -> String {
    match d.to_affine() {
        None => "inf".into(),
        Some(p) => p.0[..dim].iter().map(show).collect::<Vec<_>>().join(" "),
    }
}

pub fn harmonic(
    out: &mut dyn Write,
    a: &str,
    b: &str,
    c: &str,
    synthetic: bool,
    exact: bool,
) -> CliResult<()> {
    let text = if exact {
        let (dim, d) = conjugate::<Rational>(a, b, c, synthetic)?;
        show_conjugate(dim, &d, |v| v.to_string())
    } else {
        let (dim, d) = conjugate::<f64>(a, b, c, synthetic)?;
        show_conjugate(dim, &d, |v| num(*v))
    };
    writeln!(out, "{text}")?;
    Ok(())
}

pub fn axioms(
    out: &mut dyn Write,
    body: &Path,
    samples: usize,
    seed: u64,
    json: bool,
) -> CliResult<()> {
    let body = read_body(body)?.to_exact()?;
    let report = run_order_axioms(&body, samples, seed);
    if json {
        let text =
            serde_json::to_string_pretty(&report).map_err(|e| CliError::Parse(e.to_string()))?;
        writeln!(out, "{text}")?;
        return Ok(());
    }
    writeln!(out, "{}", report.header)?;
    writeln!(
        out,
        "seed {}, {} configurations",
        report.seed, report.configurations
    )?;
    for r in &report.results {
        let verdict = if r.ok() { "pass" } else { "FAIL" };
        writeln!(
            out,
            "{} {:<12} {}/{} {verdict}",
            r.axiom.label(),
            r.axiom.name(),
            r.passed,
            r.checked
        )?;
        for c in &r.counterexamples {
            writeln!(
                out,
                "  #{}: {} [{}]",
                c.configuration,
                c.note,
                c.points.join(", ")
            )?;
        }
    }
    let summary = if report.all_passed() {
        "all axioms hold"
    } else {
        "counterexamples found"
    };
    writeln!(out, "{summary}")?;
    Ok(())
}
