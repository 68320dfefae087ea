//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage / parse / I/O errors, 2 Lipschitz constant
//! below the tight constant (`extend`), 3 no gradually varied extension
//! exists (`fit`).

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::domain::{Adjacency, Domain};
use crate::error::{Error, Result};
use crate::field::{LevelSamples, LevelSequence, RealSamples, ScalarField};
use crate::formats::{
    format_field, format_pgm, parse_coords, parse_field, parse_samples, LadderReport, Layout,
    NaturalSmoothness1DReport, NaturalSmoothnessKDReport, PolishReport, Report, SampleRecord,
};
use crate::gvf::{gvf_fill, GvfStrategy};
use crate::mwk::{lipschitz_constant, Extensions, Metric};
use crate::polish::{polish_1d, polish_grid, PolishConfig, PolishOutcome, DEFAULT_MAX_ITERS};
use crate::smoothness::{
    classify_discrete_smoothness, decompose_micro_macro, default_constants, difference_ladder,
    natural_smoothness_1d, natural_smoothness_kd, ExtremaConfig, MacroMethod, DEFAULT_LADDER_DEPTH,
};

#[derive(Debug, Parser)]
#[command(
    name = "dsmooth",
    version,
    about = "Lipschitz and gradually varied reconstruction with smoothness analysis"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Lipschitz (McShane-Whitney) extension of real samples.
    Extend(ExtendArgs),
    /// Gradually varied fill of level-indexed samples.
    Fit(FitArgs),
    /// Natural smoothness, difference ladder and optional PGM rendering.
    Analyze(AnalyzeArgs),
    /// Second-difference polishing with frozen guiding points.
    Polish(PolishArgs),
    /// Split a field into macro (coarse reconstruction) and micro (residual).
    Decompose(DecomposeArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridSize {
    pub width: usize,
    pub height: usize,
}

impl FromStr for GridSize {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let (w, h) = s
            .split_once(['x', 'X'])
            .ok_or_else(|| format!("expected WxH, got `{s}`"))?;
        let parse = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("expected WxH, got `{s}`"))
        };
        Ok(GridSize {
            width: parse(w)?,
            height: parse(h)?,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AdjArg {
    #[value(name = "4")]
    Four,
    #[value(name = "8")]
    Eight,
}

impl From<AdjArg> for Adjacency {
    fn from(a: AdjArg) -> Self {
        match a {
            AdjArg::Four => Adjacency::Four,
            AdjArg::Eight => Adjacency::Eight,
        }
    }
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false, id = "domain")]
pub struct DomainArgs {
    /// Path domain with N vertices.
    #[arg(long, value_name = "N")]
    pub path: Option<usize>,
    /// Grid domain of W columns and H rows.
    #[arg(long, value_name = "WxH")]
    pub grid: Option<GridSize>,
}

impl DomainArgs {
    fn build(&self, adj: AdjArg) -> Result<Domain> {
        match (self.path, self.grid) {
            (Some(n), _) => Domain::path(n),
            (_, Some(g)) => Domain::grid(g.width, g.height, adj.into()),
            _ => Err(Error::invalid("one of --path or --grid is required")),
        }
    }
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false, id = "level_spec")]
pub struct LevelArgs {
    /// Explicit increasing level values.
    #[arg(
        long,
        value_delimiter = ',',
        allow_hyphen_values = true,
        value_name = "V1,V2,..."
    )]
    pub levels: Option<Vec<f64>>,
    /// `n` evenly spaced levels from `lo` to `hi`.
    #[arg(long, allow_hyphen_values = true, value_name = "LO:HI:N")]
    pub levels_range: Option<String>,
}

impl LevelArgs {
    fn build(&self) -> Result<LevelSequence> {
        if let Some(v) = &self.levels {
            return LevelSequence::new(v.clone());
        }
        let text = self.levels_range.as_deref().unwrap_or_default();
        let parts: Vec<&str> = text.split(':').collect();
        let bad = || Error::invalid(format!("--levels-range expects LO:HI:N, got `{text}`"));
        if parts.len() != 3 {
            return Err(bad());
        }
        let lo: f64 = parts[0].trim().parse().map_err(|_| bad())?;
        let hi: f64 = parts[1].trim().parse().map_err(|_| bad())?;
        let n: usize = parts[2].trim().parse().map_err(|_| bad())?;
        LevelSequence::range(lo, hi, n)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Inf,
    Sup,
    Mid,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MetricArg {
    Geodesic,
    Euclidean,
}

#[derive(Debug, Args)]
pub struct ExtendArgs {
    /// Sample CSV (`x,value` or `x,y,value`).
    #[arg(long)]
    pub samples: PathBuf,
    #[command(flatten)]
    pub domain: DomainArgs,
    #[arg(long, value_enum, default_value = "4")]
    pub adj: AdjArg,
    #[arg(long, value_enum, default_value = "mid")]
    pub method: MethodArg,
    /// Lipschitz constant; defaults to the tight constant of the samples.
    #[arg(long)]
    pub lip: Option<f64>,
    #[arg(long, value_enum, default_value = "geodesic")]
    pub metric: MetricArg,
    /// Output field CSV.
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct FitArgs {
    /// Sample CSV whose values are 1-based level indices.
    #[arg(long)]
    pub samples: PathBuf,
    #[command(flatten)]
    pub domain: DomainArgs,
    #[arg(long, value_enum, default_value = "4")]
    pub adj: AdjArg,
    #[command(flatten)]
    pub levels: LevelArgs,
    #[arg(long, value_enum, default_value = "mid")]
    pub strategy: MethodArg,
    /// Output field CSV (level values, not indices).
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    /// Field CSV to analyze.
    #[arg(long)]
    pub field: PathBuf,
    /// Output JSON report.
    #[arg(long)]
    pub out: PathBuf,
    /// Difference-ladder depth (1-D fields).
    #[arg(long, default_value_t = DEFAULT_LADDER_DEPTH)]
    pub depth: usize,
    /// Classification constant c1 (default 0).
    #[arg(long, allow_hyphen_values = true)]
    pub c1: Option<f64>,
    /// Classification constant c2 (default max(Lip0, 1)).
    #[arg(long)]
    pub c2: Option<f64>,
    /// Number of samples the field was reconstructed from (2-D ratio).
    #[arg(long)]
    pub sn: Option<usize>,
    /// Grid adjacency used to merge neighboring extrema.
    #[arg(long, value_enum, default_value = "4")]
    pub adj: AdjArg,
    /// Also write the field as a plain PGM image.
    #[arg(long)]
    pub pgm: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PolishArgs {
    /// Field CSV to polish.
    #[arg(long)]
    pub field: PathBuf,
    /// CSV of coordinates to freeze (`x` or `x,y`).
    #[arg(long)]
    pub guiding: Option<PathBuf>,
    /// Residual bound; defaults to 1e-6 times the value range.
    #[arg(long)]
    pub epsilon: Option<f64>,
    #[arg(long, default_value_t = DEFAULT_MAX_ITERS)]
    pub max_iters: usize,
    #[arg(long, default_value_t = 1.0)]
    pub relaxation: f64,
    /// Sample count for the 2-D ratio; defaults to the number of guiding points.
    #[arg(long)]
    pub sn: Option<usize>,
    #[arg(long, value_enum, default_value = "4")]
    pub adj: AdjArg,
    /// Output field CSV.
    #[arg(long)]
    pub out: PathBuf,
    /// Output JSON report.
    #[arg(long)]
    pub report: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DecomposeStrategy {
    MwkMid,
    GvfInf,
    GvfSup,
    GvfMid,
}

#[derive(Debug, Args)]
pub struct DecomposeArgs {
    /// Field CSV to decompose.
    #[arg(long)]
    pub field: PathBuf,
    /// Keep every stride-th vertex along each axis for the macro part.
    #[arg(long)]
    pub stride: usize,
    #[arg(long, value_enum, default_value = "mwk-mid")]
    pub strategy: DecomposeStrategy,
    /// Levels for the gvf-* strategies.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub levels: Option<Vec<f64>>,
    /// Evenly spaced levels `LO:HI:N` for the gvf-* strategies.
    #[arg(long, allow_hyphen_values = true)]
    pub levels_range: Option<String>,
    #[arg(long, value_enum, default_value = "4")]
    pub adj: AdjArg,
    /// Output macro field CSV.
    #[arg(long)]
    pub macro_out: PathBuf,
    /// Output micro field CSV.
    #[arg(long)]
    pub micro_out: PathBuf,
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    match execute(&cli.command) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InfeasibleLip { .. } => 2,
        Error::Infeasible(_) => 3,
        _ => 1,
    }
}

pub fn execute(cmd: &Command) -> Result<()> {
    match cmd {
        Command::Extend(a) => cmd_extend(a),
        Command::Fit(a) => cmd_fit(a),
        Command::Analyze(a) => cmd_analyze(a),
        Command::Polish(a) => cmd_polish(a),
        Command::Decompose(a) => cmd_decompose(a),
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| {
        Error::Io(std::io::Error::new(
            e.kind(),
            format!("{}: {e}", path.display()),
        ))
    })
}

fn write(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|e| {
        Error::Io(std::io::Error::new(
            e.kind(),
            format!("{}: {e}", path.display()),
        ))
    })
}

fn sample_vertices(records: &[SampleRecord], layout: Layout) -> Result<Vec<(usize, f64)>> {
    records
        .iter()
        .map(|r| {
            layout.vertex(r.coord).map(|v| (v, r.value)).ok_or_else(|| {
                Error::invalid(format!("sample {} lies outside the domain", r.coord))
            })
        })
        .collect()
}

fn cmd_extend(a: &ExtendArgs) -> Result<()> {
    let dom = a.domain.build(a.adj)?;
    let layout = Layout::of(&dom)?;
    let records = parse_samples(&read(&a.samples)?)?;
    let samples = RealSamples::new(&dom, sample_vertices(&records, layout)?)?;
    let metric = match a.metric {
        MetricArg::Geodesic => Metric::Geodesic,
        MetricArg::Euclidean => Metric::Euclidean,
    };
    let tight = lipschitz_constant(&samples, &dom, metric)?;
    match tight.witness {
        Some((x, y)) => println!(
            "tight lip={} witness=({},{})",
            tight.lip,
            layout.coord(x),
            layout.coord(y)
        ),
        None => println!("tight lip={} witness=none", tight.lip),
    }
    let ext = Extensions::compute(&samples, &dom, a.lip.unwrap_or(tight.lip), metric)?;
    let field = match a.method {
        MethodArg::Inf => ext.inf,
        MethodArg::Sup => ext.sup,
        MethodArg::Mid => ext.mid,
    };
    write(&a.out, &format_field(layout, field.values())?)
}

fn strategy(m: MethodArg) -> GvfStrategy {
    match m {
        MethodArg::Inf => GvfStrategy::InfEnvelope,
        MethodArg::Sup => GvfStrategy::SupEnvelope,
        MethodArg::Mid => GvfStrategy::MidEnvelope,
    }
}

fn cmd_fit(a: &FitArgs) -> Result<()> {
    let dom = a.domain.build(a.adj)?;
    let layout = Layout::of(&dom)?;
    let levels = a.levels.build()?;
    let records = parse_samples(&read(&a.samples)?)?;
    let indexed = sample_vertices(&records, layout)?
        .into_iter()
        .map(|(v, value)| {
            if value.fract() != 0.0 || value < 1.0 {
                return Err(Error::invalid(format!(
                    "sample at {} has value {value}, expected a level index >= 1",
                    layout.coord(v)
                )));
            }
            Ok((v, value as usize))
        })
        .collect::<Result<Vec<_>>>()?;
    let samples = LevelSamples::new(&dom, indexed)?;
    let filled = match gvf_fill(&samples, &dom, &levels, strategy(a.strategy)) {
        Err(Error::Infeasible(v)) => {
            eprintln!(
                "witness ({},{}): d={} < |{}-{}|={}",
                layout.coord(v.x),
                layout.coord(v.y),
                v.distance,
                v.i,
                v.j,
                v.i.abs_diff(v.j)
            );
            return Err(Error::Infeasible(v));
        }
        other => other?,
    };
    let values = filled.to_values(&levels)?;
    write(&a.out, &format_field(layout, values.values())?)
}

fn ladder_report(
    values: &[f64],
    depth: usize,
    c1: Option<f64>,
    c2: Option<f64>,
) -> Result<LadderReport> {
    let ladder = difference_ladder(values, depth)?;
    let (d1, d2) = default_constants(&ladder);
    let (c1, c2) = (c1.unwrap_or(d1), c2.unwrap_or(d2));
    let class = if ladder.lip.len() >= 2 {
        Some(classify_discrete_smoothness(&ladder, c1, c2)?.class)
    } else {
        None
    };
    Ok(LadderReport {
        lip: ladder.lip,
        decrease_onset: ladder.decrease_onset,
        class: class.map(|c| c.name().to_string()),
        k: class.and_then(|c| c.order()),
        c1,
        c2,
    })
}

fn kd_report(sn: usize, field: &ScalarField, dom: &Domain) -> Result<NaturalSmoothnessKDReport> {
    let kd = natural_smoothness_kd(sn, field, dom, &ExtremaConfig::default())?;
    Ok(NaturalSmoothnessKDReport {
        sn: kd.sn,
        en: kd.en,
        ratio_paper: kd.ratio(),
        ratio_alt: kd.ratio_alt(),
        perfectly_smooth: kd.is_perfectly_smooth(),
    })
}

fn ns1d_report(values: &[f64]) -> Result<NaturalSmoothness1DReport> {
    let ns = natural_smoothness_1d(values)?;
    Ok(NaturalSmoothness1DReport {
        n_samples: ns.n_samples,
        sign_changes: ns.sign_changes,
        ratio: ns.ratio,
    })
}

fn cmd_analyze(a: &AnalyzeArgs) -> Result<()> {
    let (layout, values) = parse_field(&read(&a.field)?)?;
    let dom = layout.domain(a.adj.into())?;
    let field = ScalarField::new(&dom, values)?;
    let mut report = Report::default();
    match layout {
        Layout::Line(n) if n >= 2 => {
            report.natural_smoothness_1d = Some(ns1d_report(field.values())?);
            report.ladder = Some(ladder_report(field.values(), a.depth, a.c1, a.c2)?);
        }
        Layout::Line(_) => {}
        Layout::Grid { .. } => {
            if let Some(sn) = a.sn {
                report.natural_smoothness_kd = Some(kd_report(sn, &field, &dom)?);
            }
        }
    }
    write(&a.out, &report.to_json())?;
    if let Some(pgm) = &a.pgm {
        write(pgm, &format_pgm(layout, field.values()))?;
    }
    Ok(())
}

fn cmd_polish(a: &PolishArgs) -> Result<()> {
    let (layout, values) = parse_field(&read(&a.field)?)?;
    let dom = layout.domain(a.adj.into())?;
    let field = ScalarField::new(&dom, values)?;

    let mut mask = vec![false; dom.len()];
    if let Some(path) = &a.guiding {
        for coord in parse_coords(&read(path)?)? {
            let v = layout.vertex(coord).ok_or_else(|| {
                Error::invalid(format!("guiding coordinate {coord} is outside the field"))
            })?;
            mask[v] = true;
        }
    }
    let defaults = PolishConfig::for_values(field.values());
    let cfg = PolishConfig::new(
        a.epsilon.unwrap_or(defaults.epsilon),
        a.max_iters,
        a.relaxation,
    )?;

    let guided = mask.iter().filter(|&&g| g).count();
    let mut report = Report::default();
    let outcome: PolishOutcome;
    let (before, after);
    match layout {
        Layout::Line(_) => {
            outcome = polish_1d(field.values(), &mask, &cfg)?;
            let ratio = |v: &[f64]| natural_smoothness_1d(v).ok().map(|r| r.ratio);
            before = ratio(field.values());
            after = ratio(&outcome.values);
            if outcome.values.len() >= 2 {
                report.natural_smoothness_1d = Some(ns1d_report(&outcome.values)?);
            }
        }
        Layout::Grid { .. } => {
            outcome = polish_grid(&field, &dom, &mask, &cfg)?;
            let sn = a.sn.or((guided > 0).then_some(guided));
            match sn {
                Some(sn) => {
                    let polished = ScalarField::new(&dom, outcome.values.clone())?;
                    let b = kd_report(sn, &field, &dom)?;
                    let k = kd_report(sn, &polished, &dom)?;
                    before = b.ratio_paper;
                    after = k.ratio_paper;
                    report.natural_smoothness_kd = Some(k);
                }
                None => (before, after) = (None, None),
            }
        }
    }
    report.polish = Some(PolishReport {
        converged: outcome.converged,
        iterations: outcome.iterations,
        max_residual: outcome.max_residual,
        ratio_before: before,
        ratio_after: after,
    });
    write(&a.out, &format_field(layout, &outcome.values)?)?;
    write(&a.report, &report.to_json())
}

fn cmd_decompose(a: &DecomposeArgs) -> Result<()> {
    let (layout, values) = parse_field(&read(&a.field)?)?;
    let dom = layout.domain(a.adj.into())?;
    let field = ScalarField::new(&dom, values)?;
    let gvf = |strategy| -> Result<MacroMethod> {
        let levels = LevelArgs {
            levels: a.levels.clone(),
            levels_range: a.levels_range.clone(),
        };
        if levels.levels.is_none() && levels.levels_range.is_none() {
            return Err(Error::invalid(
                "gvf strategies need --levels or --levels-range",
            ));
        }
        Ok(MacroMethod::Gradual {
            levels: levels.build()?,
            strategy,
        })
    };
    let method = match a.strategy {
        DecomposeStrategy::MwkMid => MacroMethod::MwkMid,
        DecomposeStrategy::GvfInf => gvf(GvfStrategy::InfEnvelope)?,
        DecomposeStrategy::GvfSup => gvf(GvfStrategy::SupEnvelope)?,
        DecomposeStrategy::GvfMid => gvf(GvfStrategy::MidEnvelope)?,
    };
    let d = decompose_micro_macro(&field, &dom, a.stride, &method)?;
    for v in 0..dom.len() {
        let f = field.get(v);
        let sum = d.macro_part.get(v) + d.micro_part.get(v);
        if (sum - f).abs() > 1e-12 * f.abs().max(1.0) {
            return Err(Error::invalid(format!(
                "macro + micro does not reproduce the field at {}",
                layout.coord(v)
            )));
        }
    }
    write(&a.macro_out, &format_field(layout, d.macro_part.values())?)?;
    write(&a.micro_out, &format_field(layout, d.micro_part.values())?)
}
