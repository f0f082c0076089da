//! Command-line front end: argument types, text and JSON reports, CSV and
//! SVG writers. The `quadpot` binary is a thin wrapper around [`run`].

use std::fmt::Write as _;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::accessory::POLE_RESIDUAL_TOL;
use crate::cases::TABLE1;
use crate::disk_exterior::{
    default_levels, disk_setup, disk_trace_level, disk_u_infinity, DiskQuadrilateral,
};
use crate::error::Error;
use crate::potential::{trace_level, u_infinity, CurvePoint, LevelCurve, PotentialSolution};
use crate::quad_geometry::Quadrilateral;

/// Default end-to-end tolerance; overridden by `QUADPOT_TOL`.
pub const DEFAULT_TOL: f64 = 1e-8;
pub const TOL_ENV: &str = "QUADPOT_TOL";

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_SOLVER: i32 = 3;
pub const EXIT_IO: i32 = 4;
pub const EXIT_TABLE: i32 = 5;

pub const REPORT_SCHEMA: u32 = 1;

/// Half-width of the disk plot window.
pub const DISK_PLOT_RANGE: f64 = 2.8;

#[derive(Debug, Parser)]
#[command(
    name = "quadpot",
    version,
    about = "Potential at infinity and level curves of quadrilateral exteriors"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve one quadrilateral and report u(inf).
    Uinf {
        /// First vertex; the four are listed clockwise, e.g. `1 0 -1+2i 7+5i`.
        #[arg(allow_hyphen_values = true)]
        z1: String,
        #[arg(allow_hyphen_values = true)]
        z2: String,
        #[arg(allow_hyphen_values = true)]
        z3: String,
        #[arg(allow_hyphen_values = true)]
        z4: String,
        /// Print a JSON report instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Trace level curves of the potential.
    Levels {
        #[arg(long, num_args = 4, allow_hyphen_values = true, required = true)]
        vertices: Vec<String>,
        /// `auto` or a comma-separated list of levels in (0,1).
        #[arg(long, default_value = "auto")]
        levels: String,
        /// Points per curve.
        #[arg(long, default_value_t = 400)]
        n: usize,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Level curves of the disk exterior with vertices e^{+-i alpha}, e^{+-i beta}.
    Disk {
        #[arg(long, allow_hyphen_values = true)]
        alpha: f64,
        #[arg(long, allow_hyphen_values = true)]
        beta: f64,
        #[arg(long, default_value = "auto")]
        levels: String,
        #[arg(long, default_value_t = 400)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Recompute the benchmark table.
    Table1,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Svg,
}

/// A failed command: exit code plus message for stderr.
#[derive(Debug, Clone, PartialEq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }

    fn parse(e: impl std::fmt::Display) -> Self {
        Self::new(EXIT_PARSE, e.to_string())
    }

    fn solver(e: impl std::fmt::Display) -> Self {
        Self::new(EXIT_SOLVER, e.to_string())
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.message)
    }
}

fn parse_real(s: &str) -> Result<f64, Error> {
    let bad = || Error::Parse(format!("not a number: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let (p, q): (f64, f64) = (p.parse().map_err(|_| bad())?, q.parse().map_err(|_| bad())?);
            if q == 0.0 {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(p / q)
        }
        None => s.parse().map_err(|_| bad()),
    }
}

/// Parses `a`, `bi`, `a+bi`, `a-bi` where `a` and `b` may be decimals or
/// fractions `p/q`, and `b` may be omitted (`i`, `1-i`).
pub fn parse_complex(input: &str) -> Result<Complex64, Error> {
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Parse("empty complex literal".into()));
    }
    let Some(body) = s.strip_suffix('i') else {
        return Ok(Complex64::new(parse_real(&s)?, 0.0));
    };
    // the imaginary part starts at the last sign that is not an exponent sign
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'))
        .unwrap_or(0);
    let (re, im) = body.split_at(split);
    let re = if re.is_empty() { 0.0 } else { parse_real(re)? };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        other => parse_real(other)?,
    };
    let z = Complex64::new(re, im);
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::Parse(format!("non-finite literal {input:?}")));
    }
    Ok(z)
}

/// Parses four vertex literals into a validated quadrilateral.
pub fn parse_quadrilateral(vertices: &[String]) -> Result<Quadrilateral, Error> {
    if vertices.len() != 4 {
        return Err(Error::Parse(format!(
            "expected 4 vertices, got {}",
            vertices.len()
        )));
    }
    let mut z = [Complex64::new(0.0, 0.0); 4];
    for (slot, v) in z.iter_mut().zip(vertices) {
        *slot = parse_complex(v)?;
    }
    Quadrilateral::try_new(z)
}

/// A level list: `auto` or explicit values.
#[derive(Debug, Clone, PartialEq)]
pub enum LevelSpec {
    Auto,
    List(Vec<f64>),
}

pub fn parse_levels(spec: &str) -> Result<LevelSpec, Error> {
    if spec.trim().eq_ignore_ascii_case("auto") {
        return Ok(LevelSpec::Auto);
    }
    let mut out = Vec::new();
    for part in spec.split(',') {
        let x = parse_real(part.trim())?;
        if !(x > 0.0 && x < 1.0) {
            return Err(Error::Parse(format!("level {x} is outside (0,1)")));
        }
        out.push(x);
    }
    Ok(LevelSpec::List(out))
}

/// `0.1, ..., 0.9` with the decile nearest `u_inf` replaced by `u_inf`.
pub fn auto_levels(u_inf: f64) -> Vec<f64> {
    let mut levels: Vec<f64> = (1..10).map(|k| k as f64 / 10.0).collect();
    let nearest = (0..9)
        .min_by(|&i, &j| {
            (levels[i] - u_inf)
                .abs()
                .total_cmp(&(levels[j] - u_inf).abs())
        })
        .unwrap_or(0);
    levels[nearest] = u_inf;
    levels
}

/// End-to-end tolerance from `QUADPOT_TOL`, or [`DEFAULT_TOL`].
pub fn tolerance() -> Result<f64, CliError> {
    match std::env::var(TOL_ENV) {
        Ok(v) => match v.trim().parse::<f64>() {
            Ok(t) if t > 0.0 && t.is_finite() => Ok(t),
            _ => Err(CliError::parse(format!(
                "{TOL_ENV} must be a positive number, got {v:?}"
            ))),
        },
        Err(_) => Ok(DEFAULT_TOL),
    }
}

/// Output of `uinf`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub schema: u32,
    pub input: Vec<String>,
    pub vertices: Vec<Complex64>,
    pub u_inf: f64,
    pub v_inf: f64,
    pub h: f64,
    pub t: f64,
    pub z0: Complex64,
    pub eqz0_residual: f64,
    pub closure_residual: f64,
    pub wall_ms: f64,
}

impl RunReport {
    pub fn from_solution(input: &[String], sol: &PotentialSolution, wall_ms: f64) -> Self {
        let p = sol.params();
        Self {
            schema: REPORT_SCHEMA,
            input: input.to_vec(),
            vertices: sol.quadrilateral().vertices().to_vec(),
            u_inf: sol.u_inf,
            v_inf: sol.v_inf,
            h: p.h,
            t: p.t,
            z0: p.z0(),
            eqz0_residual: p.eqz0_residual(),
            closure_residual: sol.map().closure_residual(),
            wall_ms,
        }
    }

    /// Residuals below their tolerances?
    pub fn check(&self, tol: f64) -> Result<(), CliError> {
        let pole_tol = POLE_RESIDUAL_TOL * (1.0 / self.z0.im).max(1.0);
        if !(self.eqz0_residual <= pole_tol) {
            return Err(CliError::solver(format!(
                "pole residual {:e} exceeds {pole_tol:e}",
                self.eqz0_residual
            )));
        }
        if !(self.closure_residual <= tol) {
            return Err(CliError::solver(format!(
                "closure residual {:e} exceeds {tol:e}",
                self.closure_residual
            )));
        }
        Ok(())
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "u_inf            {:.16}", self.u_inf);
        let _ = writeln!(s, "v_inf            {:.16}", self.v_inf);
        let _ = writeln!(s, "modulus h        {:.16}", self.h);
        let _ = writeln!(s, "t                {:.16}", self.t);
        let _ = writeln!(s, "z0               {}", format_complex(self.z0));
        let _ = writeln!(s, "eqz0 residual    {:.3e}", self.eqz0_residual);
        let _ = writeln!(s, "closure residual {:.3e}", self.closure_residual);
        let _ = writeln!(s, "wall time ms     {:.1}", self.wall_ms);
        s
    }
}

fn format_complex(z: Complex64) -> String {
    let sign = if z.im.is_sign_negative() { '-' } else { '+' };
    format!("{:.16}{sign}{:.16}i", z.re, z.im.abs())
}

/// `printf("%.17g")`: 17 significant digits, trailing zeros removed.
pub fn format_g17(x: f64) -> String {
    if x == 0.0 {
        return if x.is_sign_negative() {
            "-0".into()
        } else {
            "0".into()
        };
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let sci = format!("{x:.16e}");
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("exponent");
    if (-4..17).contains(&exp) {
        let fixed = format!("{x:.*}", (16 - exp) as usize);
        trim_fraction(&fixed).to_string()
    } else {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", trim_fraction(mantissa), exp.abs())
    }
}

fn trim_fraction(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// CSV with header `level,eta,re,im`; branches of a split curve are
/// separated by a blank line.
pub fn curves_to_csv(curves: &[LevelCurve]) -> String {
    let mut s = String::from("level,eta,re,im\n");
    for curve in curves {
        for (b, branch) in curve.branches.iter().enumerate() {
            if b > 0 {
                s.push('\n');
            }
            let level = format_g17(curve.level);
            for p in branch {
                let _ = writeln!(
                    s,
                    "{level},{},{},{}",
                    format_g17(p.eta),
                    format_g17(p.w.re),
                    format_g17(p.w.im)
                );
            }
        }
    }
    s
}

/// Reads what [`curves_to_csv`] writes.
pub fn curves_from_csv(text: &str) -> Result<Vec<LevelCurve>, Error> {
    let mut lines = text.lines();
    if lines.next().map(str::trim) != Some("level,eta,re,im") {
        return Err(Error::Parse("missing header `level,eta,re,im`".into()));
    }
    let mut curves: Vec<LevelCurve> = Vec::new();
    let mut new_branch = false;
    for (k, line) in lines.enumerate() {
        if line.trim().is_empty() {
            new_branch = true;
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 4 {
            return Err(Error::Parse(format!("line {}: expected 4 fields", k + 2)));
        }
        let num = |s: &str| {
            s.trim()
                .parse::<f64>()
                .map_err(|_| Error::Parse(format!("line {}: bad number {s:?}", k + 2)))
        };
        let level = num(fields[0])?;
        let point = CurvePoint {
            eta: num(fields[1])?,
            w: Complex64::new(num(fields[2])?, num(fields[3])?),
        };
        match curves.last_mut() {
            Some(c) if c.level.to_bits() == level.to_bits() => {
                if new_branch {
                    c.branches.push(Vec::new());
                }
                c.branches
                    .last_mut()
                    .expect("curve has a branch")
                    .push(point);
            }
            _ => curves.push(LevelCurve {
                level,
                branches: vec![vec![point]],
            }),
        }
        new_branch = false;
    }
    Ok(curves)
}

struct Viewport {
    min: Complex64,
    max: Complex64,
}

impl Viewport {
    fn around(points: impl Iterator<Item = Complex64>) -> Self {
        let mut min = Complex64::new(f64::INFINITY, f64::INFINITY);
        let mut max = Complex64::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for p in points {
            min = Complex64::new(min.re.min(p.re), min.im.min(p.im));
            max = Complex64::new(max.re.max(p.re), max.im.max(p.im));
        }
        let pad = 0.1 * (max.re - min.re).max(max.im - min.im).max(1e-12);
        Self {
            min: min - Complex64::new(pad, pad),
            max: max + Complex64::new(pad, pad),
        }
    }

    fn header(&self, s: &mut String) {
        let (w, h) = (self.max.re - self.min.re, self.max.im - self.min.im);
        let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="800" height="{:.0}" viewBox="{:.6} {:.6} {:.6} {:.6}">"#,
            800.0 * h / w,
            self.min.re,
            -self.max.im,
            w,
            h
        );
    }
}

fn svg_polyline(s: &mut String, pts: &[Complex64], attrs: &str) {
    if pts.is_empty() {
        return;
    }
    let mut d = String::new();
    for (k, p) in pts.iter().enumerate() {
        let _ = write!(
            d,
            "{}{:.6} {:.6}",
            if k == 0 { "M" } else { " L" },
            p.re,
            -p.im
        );
    }
    let _ = writeln!(
        s,
        r#"<path d="{d}" fill="none" {attrs} vector-effect="non-scaling-stroke"/>"#
    );
}

const CURVE_STYLE: &str = r#"stroke="black" stroke-width="1""#;
const OUTLINE_STYLE: &str = r#"stroke="black" stroke-width="1" stroke-dasharray="4 3""#;

fn curve_paths(s: &mut String, curves: &[LevelCurve], keep: impl Fn(Complex64) -> bool) {
    for curve in curves {
        let _ = writeln!(s, r#"<g data-level="{}">"#, format_g17(curve.level));
        for branch in &curve.branches {
            let pts: Vec<Complex64> = branch.iter().map(|p| p.w).filter(|&w| keep(w)).collect();
            svg_polyline(s, &pts, CURVE_STYLE);
        }
        let _ = writeln!(s, "</g>");
    }
}

/// Polygon outline (dashed) plus one path group per level. The view fits
/// the polygon and the curve points within three diameters of it.
pub fn quadrilateral_svg(q: &Quadrilateral, curves: &[LevelCurve]) -> String {
    let v = q.vertices();
    let center = v.iter().sum::<Complex64>() / 4.0;
    let reach = 3.0 * q.diameter();
    let near = |w: Complex64| (w - center).norm() <= reach;
    let view = Viewport::around(
        v.iter().copied().chain(
            curves
                .iter()
                .flat_map(|c| c.points().map(|p| p.w))
                .filter(|&w| near(w)),
        ),
    );
    let mut s = String::new();
    view.header(&mut s);
    let mut outline = v.to_vec();
    outline.push(v[0]);
    svg_polyline(&mut s, &outline, OUTLINE_STYLE);
    curve_paths(&mut s, curves, |w| (w - center).norm() <= 2.0 * reach);
    s.push_str("</svg>\n");
    s
}

/// Unit circle, the four vertex radii, and the level curves on
/// `[-2.8, 2.8]^2`.
pub fn disk_svg(d: &DiskQuadrilateral, curves: &[LevelCurve]) -> String {
    let r = DISK_PLOT_RANGE;
    let view = Viewport {
        min: Complex64::new(-r, -r),
        max: Complex64::new(r, r),
    };
    let mut s = String::new();
    view.header(&mut s);
    let _ = writeln!(
        s,
        r#"<circle cx="0" cy="0" r="1" fill="none" {OUTLINE_STYLE} vector-effect="non-scaling-stroke"/>"#
    );
    for v in d.vertices() {
        svg_polyline(
            &mut s,
            &[v, v * r * std::f64::consts::SQRT_2],
            OUTLINE_STYLE,
        );
    }
    curve_paths(&mut s, curves, |w| w.norm() <= 2.0 * r);
    s.push_str("</svg>\n");
    s
}

/// Writes `contents` to a sibling temp file and renames it into place.
pub fn atomic_write(path: &Path, contents: &str) -> io::Result<()> {
    let name = path.file_name().ok_or_else(|| {
        io::Error::new(io::ErrorKind::InvalidInput, "output path has no file name")
    })?;
    let mut tmp_name = std::ffi::OsString::from(".");
    tmp_name.push(name);
    tmp_name.push(format!(".tmp{}", std::process::id()));
    let tmp = path.with_file_name(tmp_name);
    let result = std::fs::write(&tmp, contents).and_then(|()| std::fs::rename(&tmp, path));
    if result.is_err() {
        let _ = std::fs::remove_file(&tmp);
    }
    result
}

fn write_output(path: &Path, contents: &str) -> Result<(), CliError> {
    atomic_write(path, contents)
        .map_err(|e| CliError::new(EXIT_IO, format!("cannot write {}: {e}", path.display())))
}

fn solve(vertices: &[String], tol: f64) -> Result<(PotentialSolution, RunReport), CliError> {
    let q = parse_quadrilateral(vertices).map_err(CliError::parse)?;
    let start = Instant::now();
    let sol = u_infinity(&q).map_err(CliError::solver)?;
    let report = RunReport::from_solution(vertices, &sol, start.elapsed().as_secs_f64() * 1e3);
    report.check(tol)?;
    Ok((sol, report))
}

pub fn cmd_uinf(
    vertices: &[String],
    json: bool,
    out: &mut dyn Write,
) -> Result<RunReport, CliError> {
    let (_, report) = solve(vertices, tolerance()?)?;
    let text = if json {
        serde_json::to_string_pretty(&report).map_err(CliError::solver)? + "\n"
    } else {
        report.to_text()
    };
    out.write_all(text.as_bytes())
        .map_err(|e| CliError::new(EXIT_IO, e.to_string()))?;
    Ok(report)
}

pub fn cmd_levels(
    vertices: &[String],
    levels: &str,
    n: usize,
    path: &Path,
    format: Format,
    out: &mut dyn Write,
) -> Result<Vec<LevelCurve>, CliError> {
    let spec = parse_levels(levels).map_err(CliError::parse)?;
    let (sol, report) = solve(vertices, tolerance()?)?;
    let levels = match spec {
        LevelSpec::Auto => auto_levels(sol.u_inf),
        LevelSpec::List(v) => v,
    };
    let curves = levels
        .iter()
        .map(|&c| trace_level(&sol, c, n))
        .collect::<Result<Vec<_>, _>>()
        .map_err(CliError::solver)?;
    let contents = match format {
        Format::Csv => curves_to_csv(&curves),
        Format::Svg => quadrilateral_svg(sol.quadrilateral(), &curves),
    };
    write_output(path, &contents)?;
    let _ = writeln!(out, "u_inf  {:.16}", report.u_inf);
    let _ = writeln!(out, "wrote  {} curves to {}", curves.len(), path.display());
    Ok(curves)
}

pub fn cmd_disk(
    alpha: f64,
    beta: f64,
    levels: &str,
    n: usize,
    path: Option<&Path>,
    format: Format,
    out: &mut dyn Write,
) -> Result<Vec<LevelCurve>, CliError> {
    let spec = parse_levels(levels).map_err(CliError::parse)?;
    let d = disk_setup(alpha, beta).map_err(CliError::parse)?;
    let u0 = disk_u_infinity(&d).map_err(CliError::solver)?;
    let _ = writeln!(out, "u_inf      {u0:.16}");
    let _ = writeln!(out, "modulus h  {:.16}", d.h);
    let _ = writeln!(out, "lambda     {:.16}", d.lambda);
    let Some(path) = path else {
        return Ok(Vec::new());
    };
    let levels = match spec {
        LevelSpec::Auto => default_levels(u0),
        LevelSpec::List(v) => v,
    };
    let curves = levels
        .iter()
        .map(|&c| disk_trace_level(&d, c, n))
        .collect::<Result<Vec<_>, _>>()
        .map_err(CliError::solver)?;
    let contents = match format {
        Format::Csv => curves_to_csv(&curves),
        Format::Svg => disk_svg(&d, &curves),
    };
    write_output(path, &contents)?;
    let _ = writeln!(
        out,
        "wrote      {} curves to {}",
        curves.len(),
        path.display()
    );
    Ok(curves)
}

/// One recomputed benchmark row.
#[derive(Debug, Clone, PartialEq)]
pub struct TableRow {
    pub a: Complex64,
    pub b: Complex64,
    pub computed: Option<f64>,
    pub published: f64,
}

impl TableRow {
    pub fn difference(&self) -> f64 {
        self.computed
            .map_or(f64::INFINITY, |c| (c - self.published).abs())
    }
}

pub fn cmd_table1(out: &mut dyn Write) -> Result<Vec<TableRow>, CliError> {
    let tol = tolerance()?;
    let mut rows = Vec::new();
    let _ = writeln!(
        out,
        "{:>8} {:>8} {:>20} {:>20} {:>10}",
        "A", "B", "computed", "published", "|diff|"
    );
    for r in TABLE1 {
        let computed = u_infinity(&r.quadrilateral()).ok().map(|s| s.u_inf);
        let row = TableRow {
            a: r.a,
            b: r.b,
            computed,
            published: r.u_inf,
        };
        let shown = computed.map_or("failed".to_string(), |c| format!("{c:.16}"));
        let _ = writeln!(
            out,
            "{:>8} {:>8} {:>20} {:>20.16} {:>10.1e}",
            short_complex(r.a),
            short_complex(r.b),
            shown,
            r.u_inf,
            row.difference()
        );
        rows.push(row);
    }
    let worst = rows.iter().map(TableRow::difference).fold(0.0, f64::max);
    if worst <= tol {
        Ok(rows)
    } else {
        Err(CliError::new(
            EXIT_TABLE,
            format!("largest difference {worst:e} exceeds {tol:e}"),
        ))
    }
}

fn short_complex(z: Complex64) -> String {
    match (z.re, z.im) {
        (re, 0.0) => format!("{re}"),
        (0.0, im) => format!("{im}i"),
        (re, im) => format!("{re}{}{}i", if im < 0.0 { "-" } else { "+" }, im.abs()),
    }
}

/// Runs a parsed command line; returns the process exit code.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match cli.command {
        Command::Uinf {
            z1,
            z2,
            z3,
            z4,
            json,
        } => cmd_uinf(&[z1, z2, z3, z4], json, out).map(drop),
        Command::Levels {
            vertices,
            levels,
            n,
            out: path,
            format,
        } => cmd_levels(&vertices, &levels, n, &path, format, out).map(drop),
        Command::Disk {
            alpha,
            beta,
            levels,
            n,
            out: path,
            format,
        } => cmd_disk(alpha, beta, &levels, n, path.as_deref(), format, out).map(drop),
        Command::Table1 => cmd_table1(out).map(drop),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.code
        }
    }
}
