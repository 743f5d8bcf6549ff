use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use projmetric::cayley_klein::Convention;

mod commands;
mod error;
mod input;
mod output;
mod svg;

use error::CliResult;

/// Hilbert and Cayley-Klein metrics on convex bodies.
///
/// Bodies are JSON files: {"type":"polygon","vertices":[[x,y],...]},
/// {"type":"polytope-h","halfspaces":[[n...,c],...]} (n.x <= c) or
/// {"type":"ellipsoid","center":[...],"shape":[[...]]}. Numbers may be JSON
/// numbers or strings like "1/3". Points are passed as "x y" or "x,y".
///
/// Exit codes: 0 ok, 2 parse error, 3 geometric failure, 4 numerical
/// instability.
#[derive(Parser)]
#[command(name = "projmetric", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    Float,
    Rational,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Metric {
    Elliptic,
    Hyperbolic,
}

#[derive(Subcommand)]
enum Command {
    /// Hilbert distance between two interior points.
    Dist {
        body: PathBuf,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(long, default_value_t = 0.5)]
        scale: f64,
        #[arg(long, value_enum, default_value_t = Mode::Float)]
        mode: Mode,
    },
    /// Perspective certificate for the triangle A, C, B.
    Triangle {
        body: PathBuf,
        #[arg(allow_hyphen_values = true, required_unless_present = "flats")]
        a: Option<String>,
        #[arg(allow_hyphen_values = true, required_unless_present = "flats")]
        c: Option<String>,
        #[arg(allow_hyphen_values = true, required_unless_present = "flats")]
        b: Option<String>,
        /// Use the equality triple built on this pair of boundary flats.
        #[arg(long, conflicts_with_all = ["a", "c", "b"])]
        flats: Option<usize>,
        /// Write the construction figure here.
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Mode::Float)]
        mode: Mode,
    },
    /// CSV samples of the metric sphere about a center.
    Ball {
        body: PathBuf,
        #[arg(allow_hyphen_values = true)]
        center: String,
        #[arg(long)]
        radius: f64,
        #[arg(long, default_value_t = 64)]
        samples: usize,
        #[arg(long, default_value_t = 0.5)]
        scale: f64,
    },
    /// CSV samples of the segment A, B at evenly spaced distances.
    Geodesic {
        body: PathBuf,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(long, default_value_t = 11)]
        samples: usize,
        #[arg(long, default_value_t = 0.5)]
        scale: f64,
    },
    /// Angle between two lines through the origin, given by directions.
    Angle {
        #[arg(allow_hyphen_values = true)]
        l: String,
        #[arg(allow_hyphen_values = true)]
        m: String,
    },
    /// Cayley-Klein distance from a quadric absolute.
    Ck {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(long, value_enum)]
        metric: Metric,
        /// JSON {"matrix": [[...]]}; defaults to the unit sphere form
        /// (elliptic) or the unit-ball cone (hyperbolic).
        #[arg(long)]
        quadric: Option<PathBuf>,
        #[arg(long, default_value_t = 0.5)]
        scale: f64,
        /// Read points as homogeneous coordinates, weight first.
        #[arg(long)]
        homogeneous: bool,
    },
    /// Harmonic conjugate of C with respect to A, B.
    ///
    /// Scalars are points of a line ("inf" is its ideal point); pairs are
    /// points of the plane.
    Harmonic {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
        /// Use the complete-quadrangle construction.
        #[arg(long)]
        synthetic: bool,
        #[arg(long, value_enum, default_value_t = Mode::Float)]
        mode: Mode,
    },
    /// Check the order axioms on random exact configurations in a polytope.
    Axioms {
        body: PathBuf,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

fn run(command: Command, out: &mut dyn Write) -> CliResult<()> {
    let exact = |m: Mode| matches!(m, Mode::Rational);
    match command {
        Command::Dist {
            body,
            a,
            b,
            scale,
            mode,
        } => commands::dist(out, &body, &a, &b, scale, exact(mode)),
        Command::Triangle {
            body,
            a,
            c,
            b,
            flats,
            svg,
            mode,
        } => {
            let points = match (&a, &c, &b) {
                (Some(a), Some(c), Some(b)) => Some([a.as_str(), c.as_str(), b.as_str()]),
                _ => None,
            };
            commands::triangle(out, &body, points, flats, svg.as_deref(), exact(mode))
        }
        Command::Ball {
            body,
            center,
            radius,
            samples,
            scale,
        } => commands::ball(out, &body, &center, radius, samples, scale),
        Command::Geodesic {
            body,
            a,
            b,
            samples,
            scale,
        } => commands::geodesic(out, &body, &a, &b, samples, scale),
        Command::Angle { l, m } => commands::angle(out, &l, &m),
        Command::Ck {
            a,
            b,
            metric,
            quadric,
            scale,
            homogeneous,
        } => {
            let convention = match metric {
                Metric::Elliptic => Convention::Elliptic,
                Metric::Hyperbolic => Convention::Hyperbolic,
            };
            commands::ck(
                out,
                &a,
                &b,
                convention,
                quadric.as_deref(),
                scale,
                homogeneous,
            )
        }
        Command::Harmonic {
            a,
            b,
            c,
            synthetic,
            mode,
        } => commands::harmonic(out, &a, &b, &c, synthetic, exact(mode)),
        Command::Axioms {
            body,
            samples,
            seed,
            json,
        } => commands::axioms(out, &body, samples, seed, json),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match run(cli.command, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
