//! Trapezoidal datasets, depth reports, SVG plots and the axiom verdict
//! table behind the `fuzzy-depth` command.

use clap::{Args, Parser, Subcommand, ValueEnum};
use fuzzy_depth::properties::{run_suite, Expectation, Suite};
use fuzzy_depth::{
    depth_table, DepthConfig, DepthReport, EmpiricalFrv, FuzzySet, Method, Trapezoid,
};
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use thiserror::Error;

pub const HEADER: [&str; 6] = ["id", "a", "b", "c", "d", "frequency"];

#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}: {message}")]
    Parse { line: u64, message: String },
    #[error("line {line}: record '{id}' violates a <= b <= c <= d")]
    OrderViolation { line: u64, id: String },
    #[error("no record has a positive frequency")]
    NoPositiveFrequency,
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error(transparent)]
    Depth(#[from] fuzzy_depth::Error),
}

/// One trapezoidal observation `Tra(a, b, c, d)` with its count.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DatasetRecord {
    pub id: String,
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub frequency: u64,
}

impl DatasetRecord {
    pub fn trapezoid(&self) -> Trapezoid {
        Trapezoid {
            a: self.a,
            b: self.b,
            c: self.c,
            d: self.d,
        }
    }

    pub fn fuzzy(&self) -> FuzzySet {
        self.trapezoid().to_fuzzy()
    }
}

/// Parses `id,a,b,c,d,frequency` records. Line numbers count the header as 1.
pub fn parse_dataset(text: &str) -> Result<Vec<DatasetRecord>, CliError> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let headers = reader.headers().map_err(|e| CliError::Parse {
        line: 1,
        message: e.to_string(),
    })?;
    if headers.iter().ne(HEADER) {
        return Err(CliError::Parse {
            line: 1,
            message: format!("expected header '{}'", HEADER.join(",")),
        });
    }
    let mut out = Vec::new();
    for row in reader.records() {
        let row = row.map_err(|e| CliError::Parse {
            line: e.position().map_or(0, |p| p.line()),
            message: e.to_string(),
        })?;
        let line = row.position().map_or(0, |p| p.line());
        let rec: DatasetRecord = row.deserialize(None).map_err(|e| CliError::Parse {
            line,
            message: e.to_string(),
        })?;
        let finite = [rec.a, rec.b, rec.c, rec.d].iter().all(|v| v.is_finite());
        if !finite {
            return Err(CliError::Parse {
                line,
                message: format!("record '{}' has a non-finite knot", rec.id),
            });
        }
        if !(rec.a <= rec.b && rec.b <= rec.c && rec.c <= rec.d) {
            return Err(CliError::OrderViolation { line, id: rec.id });
        }
        out.push(rec);
    }
    Ok(out)
}

/// Writes records in the format read by [`parse_dataset`].
pub fn write_dataset(records: &[DatasetRecord]) -> String {
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(Vec::new());
    w.write_record(HEADER).expect("in-memory write");
    for r in records {
        w.serialize(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 output")
}

pub fn read_dataset(path: &Path) -> Result<Vec<DatasetRecord>, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_dataset(&text)
}

/// The empirical FRV of a dataset, weighted by frequency.
pub fn dataset_frv(records: &[DatasetRecord]) -> Result<EmpiricalFrv, CliError> {
    if !records.iter().any(|r| r.frequency > 0) {
        return Err(CliError::NoPositiveFrequency);
    }
    let atoms = records.iter().map(DatasetRecord::fuzzy).collect();
    let freq: Vec<f64> = records.iter().map(|r| r.frequency as f64).collect();
    Ok(EmpiricalFrv::from_frequencies(atoms, &freq)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    /// Aligned columns, 4 decimals, deepest rows marked with `*`.
    #[default]
    Table,
    Csv,
    Json,
}

#[derive(Serialize)]
struct JsonRow<'a> {
    id: &'a str,
    depth: f64,
    rank: f64,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    method: Method,
    r: Option<f64>,
    theta: Option<f64>,
    results: Vec<JsonRow<'a>>,
}

/// Renders a report with one row per id, in input order.
pub fn emit_report(ids: &[String], report: &DepthReport, format: Format) -> String {
    match format {
        Format::Csv => {
            let mut s = String::from("id,depth,rank\n");
            for (i, id) in ids.iter().enumerate() {
                let _ = writeln!(s, "{id},{:.6},{}", report.depths[i], report.ranks[i]);
            }
            s
        }
        Format::Json => {
            let doc = JsonReport {
                method: report.method,
                r: report.r,
                theta: report.theta,
                results: ids
                    .iter()
                    .enumerate()
                    .map(|(i, id)| JsonRow {
                        id,
                        depth: report.depths[i],
                        rank: report.ranks[i],
                    })
                    .collect(),
            };
            let mut s = serde_json::to_string_pretty(&doc).expect("serializable report");
            s.push('\n');
            s
        }
        Format::Table => {
            let width = ids.iter().map(String::len).max().unwrap_or(2).max(2);
            let mut s = format!("# method: {}", report.method);
            if let Some(r) = report.r {
                let _ = write!(s, ", r = {r}");
            }
            if let Some(t) = report.theta {
                let _ = write!(s, ", theta = {t}");
            }
            s.push('\n');
            let _ = writeln!(s, "{:<width$}  {:>8}  {:>6}", "id", "depth", "rank");
            let deepest = report.argmax();
            for (i, id) in ids.iter().enumerate() {
                let flag = if deepest.contains(&i) { " *" } else { "" };
                let _ = writeln!(
                    s,
                    "{id:<width$}  {:>8.4}  {:>6}{flag}",
                    report.depths[i], report.ranks[i]
                );
            }
            s
        }
    }
}

/// Stroke color for a rank: pure red for rank 1, pure blue for rank `n`.
pub fn rank_color(rank: f64, n: usize) -> (u8, u8, u8) {
    let t = if n > 1 {
        ((rank - 1.0) / (n as f64 - 1.0)).clamp(0.0, 1.0)
    } else {
        0.0
    };
    let red = (255.0 * (1.0 - t)).round() as u8;
    let blue = (255.0 * t).round() as u8;
    (red, 0, blue)
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

/// Membership functions of the records, colored by depth rank.
pub fn emit_svg(records: &[DatasetRecord], report: &DepthReport) -> String {
    const W: f64 = 640.0;
    const H: f64 = 360.0;
    const M: f64 = 48.0;
    let lo = records.iter().map(|r| r.a).fold(f64::INFINITY, f64::min);
    let hi = records
        .iter()
        .map(|r| r.d)
        .fold(f64::NEG_INFINITY, f64::max);
    let (lo, hi) = if hi > lo {
        (lo, hi)
    } else {
        (lo - 1.0, hi + 1.0)
    };
    let px = |x: f64| M + (x - lo) / (hi - lo) * (W - 2.0 * M);
    let py = |y: f64| H - M - y * (H - 2.0 * M);
    let n = records.len();
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" viewBox="0 0 {W} {H}">"#
    );
    let _ = writeln!(s, r#"<rect width="{W}" height="{H}" fill="white"/>"#);
    let _ = writeln!(
        s,
        r#"<g stroke="black" stroke-width="1"><line x1="{M}" y1="{y0}" x2="{x1}" y2="{y0}"/><line x1="{M}" y1="{y0}" x2="{M}" y2="{M}"/></g>"#,
        y0 = H - M,
        x1 = W - M
    );
    let _ = writeln!(
        s,
        r#"<g font-family="sans-serif" font-size="11" fill="black">"#
    );
    for i in 0..=4 {
        let v = lo + (hi - lo) * i as f64 / 4.0;
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">{v:.2}</text>"#,
            px(v),
            H - M + 16.0
        );
    }
    for y in [0.0, 0.5, 1.0] {
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="end">{y:.1}</text>"#,
            M - 6.0,
            py(y) + 4.0
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">quality</text>"#,
        W / 2.0,
        H - 8.0
    );
    let _ = writeln!(
        s,
        r#"<text x="14" y="{:.2}" text-anchor="middle" transform="rotate(-90 14 {:.2})">membership</text>"#,
        H / 2.0,
        H / 2.0
    );
    s.push_str("</g>\n");
    // deepest last, so red is drawn on top
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| report.ranks[j].total_cmp(&report.ranks[i]).then(i.cmp(&j)));
    for i in order {
        let r = &records[i];
        let (cr, cg, cb) = rank_color(report.ranks[i], n);
        let _ = writeln!(
            s,
            r#"<polyline fill="none" stroke-width="1.5" stroke="rgb({cr},{cg},{cb})" points="{:.2},{:.2} {:.2},{:.2} {:.2},{:.2} {:.2},{:.2}"><title>{} depth {:.4}</title></polyline>"#,
            px(r.a),
            py(0.0),
            px(r.b),
            py(1.0),
            px(r.c),
            py(1.0),
            px(r.d),
            py(0.0),
            xml_escape(&r.id),
            report.depths[i]
        );
    }
    s.push_str("</svg>\n");
    s
}

/// Runs the verdict table and renders one line per entry.
/// Returns the text and whether every verdict was as expected.
pub fn run_verify(suite: Suite, seed: u64) -> Result<(String, bool), CliError> {
    let rows = run_suite(suite, seed)?;
    let mut s = String::new();
    let mut ok = true;
    for r in &rows {
        let expected = match r.expected {
            Expectation::Holds => "holds",
            Expectation::Fails => "fails",
        };
        let status = if r.as_expected() { "ok" } else { "UNEXPECTED" };
        ok &= r.as_expected();
        let metric = r.verdict.metric.as_deref().unwrap_or("-");
        let _ = writeln!(
            s,
            "{status:<10} {:<4} {:<8} {metric:<9} expected {expected}, got {}",
            r.verdict.axiom.to_string(),
            r.verdict.depth,
            r.verdict.outcome
        );
        if let (false, Some(w)) = (r.as_expected(), &r.verdict.witness) {
            let _ = writeln!(s, "           witness: {} {:?}", w.description, w.values);
        }
    }
    let unexpected = rows.iter().filter(|r| !r.as_expected()).count();
    let _ = writeln!(s, "{} verdicts, {} unexpected", rows.len(), unexpected);
    Ok((s, ok))
}

#[derive(Debug, Parser)]
#[command(
    name = "fuzzy-depth",
    version,
    about = "Depth of trapezoidal fuzzy data"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the depth of every record (or of every query record).
    Depth(DepthArgs),
    /// Draw the membership functions colored by depth.
    Plot(PlotArgs),
    /// Check the depth axioms against the expected verdict table.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Projection,
    Natural,
    NaturalRaised,
    Location,
    LocationRaised,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Projection => Method::Projection,
            MethodArg::Natural => Method::Natural,
            MethodArg::NaturalRaised => Method::NaturalRaised,
            MethodArg::Location => Method::Location,
            MethodArg::LocationRaised => Method::LocationRaised,
        }
    }
}

#[derive(Debug, Args)]
pub struct MethodArgs {
    /// Dataset with header `id,a,b,c,d,frequency`.
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, value_enum)]
    pub method: MethodArg,
    /// Order of the L^r-type depths.
    #[arg(long)]
    pub r: Option<f64>,
    /// Spread weight of the location depths.
    #[arg(long)]
    pub theta: Option<f64>,
    /// Uniform α steps added to the knot levels.
    #[arg(long = "alpha-grid", default_value_t = DepthConfig::DEFAULT_ALPHA_STEPS)]
    pub alpha_grid: usize,
}

#[derive(Debug, Args)]
pub struct DepthArgs {
    #[command(flatten)]
    pub common: MethodArgs,
    /// Records to evaluate instead of the dataset itself.
    #[arg(long)]
    pub queries: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct PlotArgs {
    #[command(flatten)]
    pub common: MethodArgs,
    #[arg(long)]
    pub output: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    All,
    P1,
    P2,
    P3,
    P4,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::All => Suite::All,
            SuiteArg::P1 => Suite::P1,
            SuiteArg::P2 => Suite::P2,
            SuiteArg::P3 => Suite::P3,
            SuiteArg::P4 => Suite::P4,
        }
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = SuiteArg::All)]
    pub suite: SuiteArg,
    #[arg(long, default_value_t = 2024)]
    pub seed: u64,
}

impl MethodArgs {
    fn config(&self) -> Result<DepthConfig, String> {
        let method = Method::from(self.method);
        if !method.uses_r() && self.r.is_some() {
            return Err(format!("--r does not apply to {method} depth"));
        }
        let r = self.r.unwrap_or(1.0);
        DepthConfig::new(method, r, self.theta)
            .and_then(|c| c.with_alpha_steps(self.alpha_grid))
            .map_err(|e| e.to_string())
    }
}

/// Exit status for usage errors.
pub const EXIT_USAGE: i32 = 2;
/// Exit status for data errors and unexpected verdicts.
pub const EXIT_FAILURE: i32 = 1;

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
                return EXIT_USAGE;
            }
            let _ = write!(out, "{text}");
            return 0;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Data(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAILURE
        }
    }
}

enum Failure {
    Usage(String),
    Data(CliError),
}

impl From<CliError> for Failure {
    fn from(e: CliError) -> Self {
        Failure::Data(e)
    }
}

fn report_for(
    common: &MethodArgs,
    queries: Option<&Path>,
) -> Result<(Vec<DatasetRecord>, Vec<String>, DepthReport), Failure> {
    let config = common.config().map_err(Failure::Usage)?;
    let records = read_dataset(&common.input)?;
    let x = dataset_frv(&records)?;
    let (ids, sets) = match queries {
        Some(p) => {
            let q = read_dataset(p)?;
            (
                q.iter().map(|r| r.id.clone()).collect(),
                q.iter().map(DatasetRecord::fuzzy).collect::<Vec<_>>(),
            )
        }
        None => (
            records.iter().map(|r| r.id.clone()).collect(),
            records.iter().map(DatasetRecord::fuzzy).collect(),
        ),
    };
    let report = depth_table(&x, Some(&sets), &config).map_err(CliError::from)?;
    Ok((records, ids, report))
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    let io = |e: std::io::Error, path: &Path| {
        Failure::Data(CliError::Io {
            path: path.to_path_buf(),
            source: e,
        })
    };
    match command {
        Command::Depth(args) => {
            let (_, ids, report) = report_for(&args.common, args.queries.as_deref())?;
            out.write_all(emit_report(&ids, &report, args.format).as_bytes())
                .map_err(|e| io(e, Path::new("<stdout>")))?;
            Ok(0)
        }
        Command::Plot(args) => {
            let (records, _, report) = report_for(&args.common, None)?;
            std::fs::write(&args.output, emit_svg(&records, &report))
                .map_err(|e| io(e, &args.output))?;
            Ok(0)
        }
        Command::Verify(args) => {
            let (text, ok) = run_verify(args.suite.into(), args.seed)?;
            out.write_all(text.as_bytes())
                .map_err(|e| io(e, Path::new("<stdout>")))?;
            Ok(if ok { 0 } else { EXIT_FAILURE })
        }
    }
}
