//! On-disk formats: sample CSV, field CSV, guiding-point CSV, JSON reports and
//! plain (P2) PGM images.
//!
//! Sample files carry a header, `x,value` or `x,y,value`. Field files list
//! every vertex; 2-D field files start with a `# width=W height=H` comment.
//! Values are written in the shortest representation that parses back to the
//! same `f64`.

use std::collections::HashSet;
use std::fmt::Write as _;

use serde::Serialize;

use crate::domain::{Adjacency, Domain, DomainKind};
use crate::error::{Error, Result};
use crate::field::value_bounds;

/// Shape of a field on disk.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Layout {
    Line(usize),
    Grid { width: usize, height: usize },
}

impl Layout {
    pub fn of(dom: &Domain) -> Result<Self> {
        match (dom.kind(), dom.dims()) {
            (DomainKind::Path, _) => Ok(Layout::Line(dom.len())),
            (_, Some((width, height))) => Ok(Layout::Grid { width, height }),
            _ => Err(Error::invalid("graph domains have no file layout")),
        }
    }

    pub fn len(&self) -> usize {
        match *self {
            Layout::Line(n) => n,
            Layout::Grid { width, height } => width * height,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn domain(&self, adjacency: Adjacency) -> Result<Domain> {
        match *self {
            Layout::Line(n) => Domain::path(n),
            Layout::Grid { width, height } => Domain::grid(width, height, adjacency),
        }
    }

    /// Vertex id of a coordinate, if it lies inside the layout.
    pub fn vertex(&self, coord: Coord) -> Option<usize> {
        match (*self, coord) {
            (Layout::Line(n), Coord::X(x)) => (x < n).then_some(x),
            (Layout::Grid { width, height }, Coord::XY(x, y)) => {
                (x < width && y < height).then_some(y * width + x)
            }
            _ => None,
        }
    }

    pub fn coord(&self, v: usize) -> Coord {
        match *self {
            Layout::Line(_) => Coord::X(v),
            Layout::Grid { width, .. } => Coord::XY(v % width, v / width),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Coord {
    X(usize),
    XY(usize, usize),
}

impl std::fmt::Display for Coord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Coord::X(x) => write!(f, "{x}"),
            Coord::XY(x, y) => write!(f, "({x},{y})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampleRecord {
    pub coord: Coord,
    pub value: f64,
}

fn reader(text: &str) -> csv::Reader<&[u8]> {
    csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .has_headers(true)
        .from_reader(text.as_bytes())
}

fn parse_err(line: u64, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn csv_err(e: csv::Error) -> Error {
    let line = e.position().map_or(0, |p| p.line());
    parse_err(line, e.to_string())
}

/// Reads the header and checks it against the accepted column layouts.
/// Returns the index of the matching layout.
fn expect_header(rdr: &mut csv::Reader<&[u8]>, accepted: &[&[&str]]) -> Result<usize> {
    let header = rdr.headers().map_err(csv_err)?.clone();
    let line = header.position().map_or(1, |p| p.line());
    let cols: Vec<&str> = header.iter().collect();
    accepted
        .iter()
        .position(|a| *a == cols.as_slice())
        .ok_or_else(|| {
            let want: Vec<String> = accepted.iter().map(|a| a.join(",")).collect();
            parse_err(
                line,
                format!(
                    "header `{}` is not one of: {}",
                    cols.join(","),
                    want.join(" | ")
                ),
            )
        })
}

fn parse_index(field: &str, line: u64, name: &str) -> Result<usize> {
    field.parse::<usize>().map_err(|_| {
        parse_err(
            line,
            format!("{name} `{field}` is not a nonnegative integer"),
        )
    })
}

fn parse_value(field: &str, line: u64) -> Result<f64> {
    let v: f64 = field
        .parse()
        .map_err(|_| parse_err(line, format!("value `{field}` is not a number")))?;
    if !v.is_finite() {
        return Err(parse_err(line, format!("value `{field}` is not finite")));
    }
    Ok(v)
}

fn parse_coord(rec: &csv::StringRecord, two_d: bool, line: u64) -> Result<Coord> {
    let x = parse_index(&rec[0], line, "x")?;
    Ok(if two_d {
        Coord::XY(x, parse_index(&rec[1], line, "y")?)
    } else {
        Coord::X(x)
    })
}

/// Parses a sample file; coordinates must be distinct.
pub fn parse_samples(text: &str) -> Result<Vec<SampleRecord>> {
    let mut rdr = reader(text);
    let two_d = expect_header(&mut rdr, &[&["x", "value"], &["x", "y", "value"]])? == 1;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for rec in rdr.records() {
        let rec = rec.map_err(csv_err)?;
        let line = rec.position().map_or(0, |p| p.line());
        let coord = parse_coord(&rec, two_d, line)?;
        let value = parse_value(&rec[rec.len() - 1], line)?;
        if !seen.insert(coord) {
            return Err(parse_err(line, format!("duplicate coordinate {coord}")));
        }
        out.push(SampleRecord { coord, value });
    }
    if out.is_empty() {
        return Err(parse_err(1, "sample file has no rows"));
    }
    Ok(out)
}

/// Parses a guiding-point file (`x` or `x,y` per row).
pub fn parse_coords(text: &str) -> Result<Vec<Coord>> {
    let mut rdr = reader(text);
    let two_d = expect_header(&mut rdr, &[&["x"], &["x", "y"]])? == 1;
    rdr.records()
        .map(|rec| {
            let rec = rec.map_err(csv_err)?;
            let line = rec.position().map_or(0, |p| p.line());
            parse_coord(&rec, two_d, line)
        })
        .collect()
}

fn parse_grid_comment(text: &str) -> Result<Option<(usize, usize)>> {
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let Some(rest) = line.strip_prefix('#') else {
            return Ok(None);
        };
        let mut width = None;
        let mut height = None;
        for tok in rest.split_whitespace() {
            if let Some(v) = tok.strip_prefix("width=") {
                width = Some(parse_index(v, i as u64 + 1, "width")?);
            } else if let Some(v) = tok.strip_prefix("height=") {
                height = Some(parse_index(v, i as u64 + 1, "height")?);
            }
        }
        if let (Some(w), Some(h)) = (width, height) {
            return Ok(Some((w, h)));
        }
    }
    Ok(None)
}

/// Parses a field file into its layout and row-major values.
pub fn parse_field(text: &str) -> Result<(Layout, Vec<f64>)> {
    let dims = parse_grid_comment(text)?;
    let mut rdr = reader(text);
    let two_d = expect_header(&mut rdr, &[&["x", "value"], &["x", "y", "value"]])? == 1;
    let mut cells: Vec<(Coord, f64, u64)> = Vec::new();
    for rec in rdr.records() {
        let rec = rec.map_err(csv_err)?;
        let line = rec.position().map_or(0, |p| p.line());
        cells.push((
            parse_coord(&rec, two_d, line)?,
            parse_value(&rec[rec.len() - 1], line)?,
            line,
        ));
    }
    let layout = match (two_d, dims) {
        (true, Some((width, height))) if width > 0 && height > 0 => Layout::Grid { width, height },
        (true, _) => return Err(parse_err(1, "2-D field needs a `# width=W height=H` line")),
        (false, _) => Layout::Line(cells.len()),
    };
    if layout.is_empty() {
        return Err(parse_err(1, "field file has no rows"));
    }
    let mut values = vec![None; layout.len()];
    for (coord, value, line) in cells {
        let v = layout
            .vertex(coord)
            .ok_or_else(|| parse_err(line, format!("coordinate {coord} is outside the field")))?;
        if values[v].replace(value).is_some() {
            return Err(parse_err(line, format!("duplicate coordinate {coord}")));
        }
    }
    let values = values
        .into_iter()
        .enumerate()
        .map(|(v, val)| {
            val.ok_or_else(|| parse_err(0, format!("field has no value at {}", layout.coord(v))))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((layout, values))
}

/// Renders a field file.
pub fn format_field(layout: Layout, values: &[f64]) -> Result<String> {
    if values.len() != layout.len() {
        return Err(Error::invalid(format!(
            "{} values do not fill a layout of {}",
            values.len(),
            layout.len()
        )));
    }
    let mut out = String::new();
    match layout {
        Layout::Line(_) => {
            out.push_str("x,value\n");
            for (x, v) in values.iter().enumerate() {
                let _ = writeln!(out, "{x},{v}");
            }
        }
        Layout::Grid { width, height } => {
            let _ = writeln!(out, "# width={width} height={height}");
            out.push_str("x,y,value\n");
            for (i, v) in values.iter().enumerate() {
                let _ = writeln!(out, "{},{},{v}", i % width, i / width);
            }
        }
    }
    Ok(out)
}

/// Plain PGM (P2), min-max normalized to 0..=255. Constant fields map to 0.
pub fn format_pgm(layout: Layout, values: &[f64]) -> String {
    let (width, height) = match layout {
        Layout::Line(n) => (n, 1),
        Layout::Grid { width, height } => (width, height),
    };
    let (lo, hi) = value_bounds(values);
    let span = hi - lo;
    let mut out = format!("P2\n{width} {height}\n255\n");
    for row in values.chunks(width) {
        let line: Vec<String> = row
            .iter()
            .map(|&v| {
                let g = if span > 0.0 {
                    ((v - lo) / span * 255.0).round()
                } else {
                    0.0
                };
                (g as u8).to_string()
            })
            .collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NaturalSmoothness1DReport {
    pub n_samples: usize,
    pub sign_changes: usize,
    pub ratio: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NaturalSmoothnessKDReport {
    pub sn: usize,
    pub en: usize,
    /// `(SN - EN) / EN`; null when there are no extreme points.
    pub ratio_paper: Option<f64>,
    /// `(SN - EN) / SN`.
    pub ratio_alt: f64,
    pub perfectly_smooth: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LadderReport {
    pub lip: Vec<f64>,
    pub decrease_onset: Option<usize>,
    pub class: Option<String>,
    #[serde(rename = "K")]
    pub k: Option<usize>,
    pub c1: f64,
    pub c2: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PolishReport {
    pub converged: bool,
    pub iterations: usize,
    pub max_residual: f64,
    pub ratio_before: Option<f64>,
    pub ratio_after: Option<f64>,
}

/// JSON analysis report; absent analyses are omitted.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Report {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub natural_smoothness_1d: Option<NaturalSmoothness1DReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub natural_smoothness_kd: Option<NaturalSmoothnessKDReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ladder: Option<LadderReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub polish: Option<PolishReport>,
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}
