//! SVG rendering of the triangle construction.

use std::fmt::Write;

/// Planar data for one figure; `None` positions are ideal points.
pub struct Figure {
    pub boundary: Vec<[f64; 2]>,
    pub a: [f64; 2],
    pub c: [f64; 2],
    pub b: [f64; 2],
    pub u: [f64; 2],
    pub v: [f64; 2],
    pub z: [f64; 2],
    pub t: [f64; 2],
    pub x: [f64; 2],
    pub y: [f64; 2],
    pub w: Option<[f64; 2]>,
    /// Direction of `W` when it is ideal.
    pub w_direction: [f64; 2],
    pub x_prime: Option<[f64; 2]>,
    pub y_prime: Option<[f64; 2]>,
    pub d: Option<[f64; 2]>,
}

fn f(v: f64) -> String {
    let s = format!("{v:.6}");
    if s == "-0.000000" {
        "0.000000".into()
    } else {
        s
    }
}

/// Point in SVG user space; the y axis points down there.
fn xy(p: [f64; 2]) -> (String, String) {
    (f(p[0]), f(-p[1]))
}

struct Canvas {
    out: String,
    unit: f64,
}

impl Canvas {
    fn line(&mut self, p: [f64; 2], q: [f64; 2], class: &str) {
        let ((x1, y1), (x2, y2)) = (xy(p), xy(q));
        writeln!(
            self.out,
            r#"  <line class="{class}" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>"#
        )
        .unwrap();
    }

    fn point(&mut self, label: &str, p: [f64; 2]) {
        let (cx, cy) = xy(p);
        let r = f(self.unit * 0.6);
        writeln!(
            self.out,
            r#"  <circle class="pt" cx="{cx}" cy="{cy}" r="{r}"/>"#
        )
        .unwrap();
        let (tx, ty) = xy([p[0] + self.unit, p[1] + self.unit]);
        writeln!(self.out, r#"  <text x="{tx}" y="{ty}">{label}</text>"#).unwrap();
    }
}

impl Figure {
    fn finite_points(&self) -> Vec<[f64; 2]> {
        let mut pts = vec![
            self.a, self.c, self.b, self.u, self.v, self.z, self.t, self.x, self.y,
        ];
        pts.extend(
            [self.w, self.x_prime, self.y_prime, self.d]
                .into_iter()
                .flatten(),
        );
        pts.extend(self.boundary.iter().copied());
        pts
    }

    pub fn render(&self) -> String {
        let pts = self.finite_points();
        let (mut lo, mut hi) = ([f64::INFINITY; 2], [f64::NEG_INFINITY; 2]);
        for p in &pts {
            for k in 0..2 {
                lo[k] = lo[k].min(p[k]);
                hi[k] = hi[k].max(p[k]);
            }
        }
        let span = (hi[0] - lo[0]).max(hi[1] - lo[1]).max(1e-9);
        let margin = [
            0.05 * (hi[0] - lo[0]).max(1e-9),
            0.05 * (hi[1] - lo[1]).max(1e-9),
        ];
        let (x0, y0) = (lo[0] - margin[0], -(hi[1] + margin[1]));
        let (w, h) = (
            hi[0] - lo[0] + 2.0 * margin[0],
            hi[1] - lo[1] + 2.0 * margin[1],
        );
        let unit = span / 100.0;

        let mut c = Canvas {
            out: String::new(),
            unit,
        };
        writeln!(c.out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
        writeln!(
            c.out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{} {} {} {}">"#,
            f(x0),
            f(y0),
            f(w),
            f(h)
        )
        .unwrap();
        writeln!(
            c.out,
            "  <style>\n    .body {{ fill: #f4f4f4; stroke: #000; stroke-width: {s}; }}\n    \
             .chord {{ stroke: #1f5fa8; stroke-width: {s}; }}\n    \
             .side {{ stroke: #b02020; stroke-width: {s2}; }}\n    \
             .ray {{ stroke: #666; stroke-width: {s}; stroke-dasharray: {dash}; }}\n    \
             .pt {{ fill: #000; }}\n    \
             text {{ font-family: serif; font-size: {fs}px; }}\n  </style>",
            s = f(unit * 0.3),
            s2 = f(unit * 0.5),
            dash = f(unit * 1.5),
            fs = f(unit * 4.0),
        )
        .unwrap();

        let outline: Vec<String> = self
            .boundary
            .iter()
            .map(|&p| {
                let (x, y) = xy(p);
                format!("{x},{y}")
            })
            .collect();
        writeln!(
            c.out,
            r#"  <polygon class="body" points="{}"/>"#,
            outline.join(" ")
        )
        .unwrap();

        for (p, q) in [(self.u, self.v), (self.z, self.t), (self.x, self.y)] {
            c.line(p, q, "chord");
        }
        for (p, q) in [(self.a, self.c), (self.c, self.b), (self.a, self.b)] {
            c.line(p, q, "side");
        }
        // Rays of the perspective from W; with W ideal they are parallel.
        for (through, image) in [
            (self.u, self.x_prime),
            (self.v, self.y_prime),
            (self.c, self.d),
        ] {
            if let Some(image) = image {
                c.line(self.w.unwrap_or(through), image, "ray");
            }
        }
        if let (Some(xp), Some(yp)) = (self.x_prime, self.y_prime) {
            c.line(xp, yp, "ray");
        }

        for (label, p) in [
            ("A", self.a),
            ("B", self.b),
            ("C", self.c),
            ("U", self.u),
            ("V", self.v),
            ("Z", self.z),
            ("T", self.t),
            ("X", self.x),
            ("Y", self.y),
        ] {
            c.point(label, p);
        }
        let mut notes = 0;
        for (label, p) in [
            ("W", self.w),
            ("X′", self.x_prime),
            ("Y′", self.y_prime),
            ("D", self.d),
        ] {
            let Some(p) = p else {
                notes += 1;
                let note = if label == "W" {
                    let [dx, dy] = self.w_direction;
                    format!("W at infinity, direction ({}, {})", f(dx), f(dy))
                } else {
                    format!("{label} at infinity")
                };
                let (tx, ty) = (f(x0 + unit), f(y0 + 5.0 * unit * notes as f64));
                writeln!(c.out, r#"  <text x="{tx}" y="{ty}">{note}</text>"#).unwrap();
                continue;
            };
            c.point(label, p);
        }
        c.out.push_str("</svg>\n");
        c.out
    }
}
