//! Command-line front end.
//!
//! Exit codes: 0 success, 2 I/O, parse or usage error, 3 validation error,
//! 4 ranking undefined (ideal ratio with a zero denominator).

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::attributes::AttributeVector;
use crate::dataset::{load_dataset, parse_csv, MultiCriteriaDataset};
use crate::error::Error;
use crate::fixtures;
use crate::iaa::{FuzzyNumber, Region};
use crate::interval::{ideal_interval_set, Ideal, ScaleConfig};
use crate::ranking::{rank_baseline_mean, rank_by_ideal_ratio, rank_universal, RankingResult};
use crate::similarity::{similarity, similarity_matrix, Measure, SimilarityWeights};
use crate::topsis::{topsis_rank, DecisionMatrix, Direction, TopsisOptions, TopsisResult};

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 2;
pub const EXIT_INVALID: i32 = 3;
pub const EXIT_UNDEFINED: i32 = 4;

/// Prefix selecting a bundled dataset instead of a file, e.g. `builtin:films`.
const BUILTIN: &str = "builtin:";

#[derive(Debug, Parser)]
#[command(name = "iaa", version, about = "Fuzzy numbers from interval-valued data: build, compare, rank")]
pub struct RunConfig {
    /// Dataset (CSV or .json), or `builtin:films` / `builtin:topsis`.
    #[arg(long, global = true)]
    pub input: Option<String>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub scale_min: Option<f64>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub scale_max: Option<f64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Relative tolerance of the universal ranking comparisons.
    #[arg(long, global = true, default_value_t = crate::ranking::DEFAULT_EPSILON)]
    pub epsilon: f64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Construct one fuzzy number per (alternative, criterion).
    Build(CriterionArg),
    /// Geometric attributes of every fuzzy number.
    Attributes(CriterionArg),
    /// Similarity of two alternatives, or the full matrix.
    Similarity(SimilarityArgs),
    /// Rank alternatives.
    Rank(RankArgs),
    /// Similarity-based TOPSIS over all criteria.
    Topsis(TopsisArgs),
    /// Membership outline vertices for plotting.
    Plotdata(CriterionArg),
}

#[derive(Debug, Args)]
pub struct CriterionArg {
    /// Restrict to one criterion (default: all).
    #[arg(long)]
    pub criterion: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MeasureArg {
    Jaccard,
    Attribute,
    Combined,
}

impl From<MeasureArg> for Measure {
    fn from(m: MeasureArg) -> Measure {
        match m {
            MeasureArg::Jaccard => Measure::Jaccard,
            MeasureArg::Attribute => Measure::Attribute,
            MeasureArg::Combined => Measure::Combined,
        }
    }
}

#[derive(Debug, Args)]
pub struct SimilarityArgs {
    #[arg(long, value_enum, default_value_t = MeasureArg::Combined)]
    pub measure: MeasureArg,
    #[arg(long)]
    pub criterion: Option<String>,
    #[arg(long, conflicts_with_all = ["a", "b"])]
    pub matrix: bool,
    #[arg(required_unless_present = "matrix")]
    pub a: Option<String>,
    #[arg(required_unless_present = "matrix")]
    pub b: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Universal,
    IdealRatio,
    Baseline,
}

#[derive(Debug, Args)]
pub struct RankArgs {
    #[arg(long, value_enum, default_value_t = MethodArg::Universal)]
    pub method: MethodArg,
    #[arg(long, value_enum, default_value_t = MeasureArg::Combined)]
    pub measure: MeasureArg,
    /// `auto` synthesizes ideals from the scale; otherwise a dataset file with
    /// alternatives `best` and `worst`.
    #[arg(long, default_value = "auto")]
    pub ideal: String,
    #[arg(long)]
    pub criterion: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TopsisMeasureArg {
    Attribute,
    Combined,
}

#[derive(Debug, Args)]
pub struct TopsisArgs {
    #[arg(long, value_enum, default_value_t = TopsisMeasureArg::Combined)]
    pub measure: TopsisMeasureArg,
    /// Comma-separated criterion weights (default: equal).
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub weights: Option<Vec<f64>>,
    /// Comma-separated `b`/`c` (benefit/cost) per criterion (default: all benefit).
    #[arg(long, value_delimiter = ',')]
    pub directions: Option<Vec<String>>,
    #[arg(long)]
    pub exclude_criterion: Vec<String>,
    /// Criterion used to break exact closeness ties with the universal relation.
    #[arg(long)]
    pub tie_break: Option<String>,
}

/// Errors surfaced by the CLI, each with its exit code.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Core(Error),
    Write(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) | Failure::Write(_) => EXIT_IO,
            Failure::Core(e) => exit_code(e),
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Usage(m) => m.clone(),
            Failure::Core(Error::DivisionByZero { label }) => {
                format!("UNDEF: ideal ratio of `{label}` divides by zero (no similarity to either ideal)")
            }
            Failure::Core(e) => e.to_string(),
            Failure::Write(e) => format!("cannot write output: {e}"),
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Io { .. } | Error::MalformedRow { .. } | Error::MalformedInterval(_) => EXIT_IO,
        Error::DivisionByZero { .. } => EXIT_UNDEFINED,
        _ => EXIT_INVALID,
    }
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_IO } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    match execute(&config, stderr) {
        Ok(text) => match emit(&config, &text, stdout) {
            Ok(()) => EXIT_OK,
            Err(e) => report(Failure::Write(e), stderr),
        },
        Err(f) => report(f, stderr),
    }
}

fn report(failure: Failure, stderr: &mut dyn Write) -> i32 {
    let _ = writeln!(stderr, "error: {}", failure.message());
    failure.exit_code()
}

fn emit(config: &RunConfig, text: &str, stdout: &mut dyn Write) -> std::io::Result<()> {
    match &config.output {
        Some(path) => std::fs::write(path, text),
        None => stdout.write_all(text.as_bytes()),
    }
}

fn execute(config: &RunConfig, stderr: &mut dyn Write) -> Result<String, Failure> {
    if !(config.epsilon >= 0.0 && config.epsilon.is_finite()) {
        return Err(Failure::Usage("--epsilon must be a finite value >= 0".into()));
    }
    let scale = scale_of(config)?;
    let dataset = read_input(config, scale)?;
    for alt in dataset.ragged_alternatives() {
        let _ = writeln!(stderr, "warning: `{alt}` has differing source counts across criteria");
    }
    match &config.command {
        Command::Build(args) => cmd_build(config, &dataset, args),
        Command::Attributes(args) => cmd_attributes(config, &dataset, args),
        Command::Similarity(args) => cmd_similarity(config, &dataset, args),
        Command::Rank(args) => cmd_rank(config, &dataset, args),
        Command::Topsis(args) => cmd_topsis(config, &dataset, args),
        Command::Plotdata(args) => cmd_plotdata(config, &dataset, args),
    }
}

fn scale_of(config: &RunConfig) -> Result<ScaleConfig, Failure> {
    match (config.scale_min, config.scale_max) {
        (Some(min), Some(max)) => Ok(ScaleConfig::new(min, max)?),
        _ => Err(Failure::Usage(
            "--scale-min and --scale-max are required (the scale is never inferred)".into(),
        )),
    }
}

fn read_input(config: &RunConfig, scale: ScaleConfig) -> Result<MultiCriteriaDataset, Failure> {
    let input = config
        .input
        .as_deref()
        .ok_or_else(|| Failure::Usage("--input is required".into()))?;
    read_dataset(input, scale)
}

fn read_dataset(input: &str, scale: ScaleConfig) -> Result<MultiCriteriaDataset, Failure> {
    if let Some(name) = input.strip_prefix(BUILTIN) {
        let text = match name {
            "films" => fixtures::FILMS_CSV,
            "topsis" => fixtures::TOPSIS_CSV,
            other => return Err(Failure::Usage(format!("unknown builtin dataset `{other}`"))),
        };
        return Ok(parse_csv(text.as_bytes(), Path::new(input), scale)?);
    }
    Ok(load_dataset(input, scale)?)
}

/// Criterion indices selected by an optional `--criterion`.
fn criteria_of(dataset: &MultiCriteriaDataset, criterion: Option<&str>) -> Result<Vec<usize>, Failure> {
    match criterion {
        Some(label) => Ok(vec![dataset.criterion_index(label)?]),
        None => Ok((0..dataset.criteria().len()).collect()),
    }
}

/// Exactly one criterion: the named one, or the only one.
fn single_criterion(dataset: &MultiCriteriaDataset, criterion: Option<&str>) -> Result<usize, Failure> {
    match criterion {
        Some(label) => Ok(dataset.criterion_index(label)?),
        None if dataset.criteria().len() == 1 => Ok(0),
        None => Err(Failure::Usage(format!(
            "dataset has {} criteria; choose one with --criterion",
            dataset.criteria().len()
        ))),
    }
}

/// Fuzzy numbers of one criterion, labelled by alternative.
fn column(dataset: &MultiCriteriaDataset, c: usize) -> Result<Vec<FuzzyNumber>, Failure> {
    dataset
        .column(c)
        .into_iter()
        .map(|s| FuzzyNumber::construct(s, dataset.scale()).map_err(Failure::from))
        .collect()
}

/// All selected cells; labels carry the criterion when there are several.
fn cells(dataset: &MultiCriteriaDataset, criterion: Option<&str>) -> Result<Vec<FuzzyNumber>, Failure> {
    let selected = criteria_of(dataset, criterion)?;
    let qualify = dataset.criteria().len() > 1;
    let mut out = Vec::new();
    for (a, alt) in dataset.alternatives().iter().enumerate() {
        for &c in &selected {
            let fz = FuzzyNumber::construct(dataset.cell(a, c), dataset.scale())?;
            let label = if qualify {
                format!("{alt}/{}", dataset.criteria()[c])
            } else {
                alt.clone()
            };
            out.push(fz.with_label(label));
        }
    }
    Ok(out)
}

fn f4(x: f64) -> String {
    format!("{x:.4}")
}

fn json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("serializable");
    s.push('\n');
    s
}

fn json_pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn cmd_build(config: &RunConfig, dataset: &MultiCriteriaDataset, args: &CriterionArg) -> Result<String, Failure> {
    let fns = cells(dataset, args.criterion.as_deref())?;
    let mut out = String::new();
    match config.format {
        Format::Json => fns.iter().for_each(|fz| out.push_str(&json_line(fz))),
        Format::Csv => {
            out.push_str("label,left,right,height\n");
            for fz in &fns {
                for r in fz.regions() {
                    let _ = writeln!(out, "{},{},{},{}", csv_field(fz.label()), r.left, r.right, r.height);
                }
            }
        }
        Format::Text => {
            for fz in &fns {
                let _ = writeln!(out, "{} (n={})", fz.label(), fz.n());
                for r in fz.regions() {
                    let _ = writeln!(out, "  [{}, {}]  {}", f4(r.left), f4(r.right), f4(r.height));
                }
            }
        }
    }
    Ok(out)
}

#[derive(Serialize)]
struct LabelledAttributes<'a> {
    label: &'a str,
    #[serde(flatten)]
    attributes: AttributeVector,
}

fn cmd_attributes(config: &RunConfig, dataset: &MultiCriteriaDataset, args: &CriterionArg) -> Result<String, Failure> {
    let fns = cells(dataset, args.criterion.as_deref())?;
    let rows: Vec<(&str, AttributeVector)> = fns.iter().map(|f| (f.label(), AttributeVector::of(f))).collect();
    let mut out = String::new();
    match config.format {
        Format::Json => {
            for (label, attributes) in &rows {
                out.push_str(&json_line(&LabelledAttributes { label, attributes: *attributes }));
            }
        }
        Format::Csv | Format::Text => {
            let csv = config.format == Format::Csv;
            let num = |x: f64| if csv { x.to_string() } else { f4(x) };
            let sep = if csv { "," } else { "\t" };
            out.push_str(
                &["label", "a1", "a2", "a3", "a4", "a5", "centroid_x", "centroid_y", "area", "height", "perimeter", "agreement_ratio"]
                    .join(sep),
            );
            out.push('\n');
            for (label, a) in &rows {
                let mut fields = vec![if csv { csv_field(label) } else { label.to_string() }];
                fields.extend(a.quartiles.iter().map(|&q| num(q)));
                fields.extend(
                    [a.centroid_x, a.centroid_y, a.area, a.height, a.perimeter, a.agreement_ratio].map(num),
                );
                out.push_str(&fields.join(sep));
                out.push('\n');
            }
        }
    }
    Ok(out)
}

fn cmd_similarity(config: &RunConfig, dataset: &MultiCriteriaDataset, args: &SimilarityArgs) -> Result<String, Failure> {
    let c = single_criterion(dataset, args.criterion.as_deref())?;
    let items = column(dataset, c)?;
    let measure = Measure::from(args.measure);
    let weights = SimilarityWeights::default();
    let mut out = String::new();

    if args.matrix {
        let m = similarity_matrix(&items, measure, &weights)?;
        let labels: Vec<&str> = items.iter().map(FuzzyNumber::label).collect();
        match config.format {
            Format::Json => out.push_str(&json_pretty(&json!({
                "measure": measure, "labels": labels, "matrix": m,
            }))),
            Format::Csv | Format::Text => {
                let csv = config.format == Format::Csv;
                let sep = if csv { "," } else { "\t" };
                let mut header = vec![String::new()];
                header.extend(labels.iter().map(|l| if csv { csv_field(l) } else { l.to_string() }));
                out.push_str(&header.join(sep));
                out.push('\n');
                for (label, row) in labels.iter().zip(&m) {
                    let mut fields = vec![if csv { csv_field(label) } else { label.to_string() }];
                    fields.extend(row.iter().map(|&s| if csv { s.to_string() } else { f4(s) }));
                    out.push_str(&fields.join(sep));
                    out.push('\n');
                }
            }
        }
        return Ok(out);
    }

    let (a, b) = (args.a.as_deref().unwrap_or_default(), args.b.as_deref().unwrap_or_default());
    let ia = dataset.alternative_index(a)?;
    let ib = dataset.alternative_index(b)?;
    let s = similarity(&items[ia], &items[ib], measure, &weights)?;
    match config.format {
        Format::Json => out.push_str(&json_line(&json!({
            "a": a, "b": b, "measure": measure, "similarity": s,
        }))),
        Format::Csv => {
            out.push_str("a,b,measure,similarity\n");
            let _ = writeln!(out, "{},{},{measure},{s}", csv_field(a), csv_field(b));
        }
        Format::Text => {
            let _ = writeln!(out, "{}", f4(s));
        }
    }
    Ok(out)
}

fn cmd_rank(config: &RunConfig, dataset: &MultiCriteriaDataset, args: &RankArgs) -> Result<String, Failure> {
    let c = single_criterion(dataset, args.criterion.as_deref())?;
    let result = match args.method {
        MethodArg::Universal => rank_universal(&column(dataset, c)?, config.epsilon)?,
        MethodArg::Baseline => rank_baseline_mean(&dataset.column(c))?,
        MethodArg::IdealRatio => {
            let items = column(dataset, c)?;
            let (best, worst) = ideals(dataset, c, &args.ideal)?;
            rank_by_ideal_ratio(
                &items,
                &best,
                &worst,
                args.measure.into(),
                &SimilarityWeights::default(),
                config.epsilon,
            )?
        }
    };
    Ok(render_ranking(config.format, &result))
}

/// Ideal best and worst for criterion `c`.
fn ideals(dataset: &MultiCriteriaDataset, c: usize, ideal_arg: &str) -> Result<(FuzzyNumber, FuzzyNumber), Failure> {
    let scale = dataset.scale();
    if ideal_arg == "auto" {
        // Ideal spikes look the same for every source count, so the first cell's n serves all.
        let n = dataset.cell(0, c).len();
        let best = FuzzyNumber::construct(&ideal_interval_set(&scale, n, Ideal::Best)?, scale)?;
        let worst = FuzzyNumber::construct(&ideal_interval_set(&scale, n, Ideal::Worst)?, scale)?;
        return Ok((best, worst));
    }
    let file = read_dataset(ideal_arg, scale)?;
    let crit = file
        .criterion_index(&dataset.criteria()[c])
        .or_else(|_| if file.criteria().len() == 1 { Ok(0) } else { Err(()) })
        .map_err(|_| {
            Failure::Core(Error::UnknownLabel {
                kind: "criterion",
                label: dataset.criteria()[c].clone(),
            })
        })?;
    let pick = |label: &str| -> Result<FuzzyNumber, Failure> {
        let a = file.alternative_index(label)?;
        Ok(FuzzyNumber::construct(file.cell(a, crit), scale)?)
    };
    Ok((pick("best")?, pick("worst")?))
}

fn render_ranking(format: Format, result: &RankingResult) -> String {
    let mut out = String::new();
    match format {
        Format::Json => out.push_str(&json_pretty(result)),
        Format::Csv => {
            out.push_str("label,score,rank\n");
            for e in &result.entries {
                let score = e.score.map(|s| s.to_string()).unwrap_or_default();
                let _ = writeln!(out, "{},{score},{}", csv_field(&e.label), e.rank);
            }
        }
        Format::Text => {
            let width = result.entries.iter().map(|e| e.label.len()).max().unwrap_or(0).max(5);
            let _ = writeln!(out, "method: {}", result.method);
            let _ = writeln!(out, "{:<width$}  {:>6}  {:>4}", "label", "score", "rank");
            for e in &result.entries {
                let score = e.score.map(f4).unwrap_or_else(|| "-".into());
                let _ = writeln!(out, "{:<width$}  {:>6}  {:>4}", e.label, score, e.rank);
            }
            for group in &result.ties {
                let _ = writeln!(out, "tie: {}", group.join(", "));
            }
        }
    }
    out
}

fn cmd_topsis(config: &RunConfig, dataset: &MultiCriteriaDataset, args: &TopsisArgs) -> Result<String, Failure> {
    let mut dataset = dataset.clone();
    for label in &args.exclude_criterion {
        dataset = dataset.without_criterion(label)?;
    }
    let k = dataset.criteria().len();
    let weights = args.weights.clone().unwrap_or_else(|| vec![1.0; k]);
    let directions = match &args.directions {
        Some(ds) => ds.iter().map(|d| d.parse()).collect::<Result<Vec<Direction>, _>>()?,
        None => vec![Direction::Benefit; k],
    };
    let matrix = DecisionMatrix::new(&dataset, weights, directions)?;
    let tie_break = args
        .tie_break
        .as_deref()
        .map(|label| dataset.criterion_index(label))
        .transpose()?;
    let options = TopsisOptions {
        epsilon: config.epsilon,
        tie_break,
        ..TopsisOptions::default()
    };
    let measure = match args.measure {
        TopsisMeasureArg::Attribute => Measure::Attribute,
        TopsisMeasureArg::Combined => Measure::Combined,
    };
    let result = topsis_rank(&matrix, measure, &options)?;
    Ok(render_topsis(config.format, &matrix, &result))
}

const TOPSIS_NOTE: &str = "similarity-based TOPSIS reconstruction: PIS/NIS chosen per criterion by the universal ranking, separation = weighted sum of (1 - similarity)";

fn render_topsis(format: Format, matrix: &DecisionMatrix, result: &TopsisResult) -> String {
    let mut out = String::new();
    match format {
        Format::Json => out.push_str(&json_pretty(&json!({
            "note": TOPSIS_NOTE,
            "criteria": matrix.criteria(),
            "weights": matrix.weights(),
            "directions": matrix.directions(),
            "result": result,
        }))),
        Format::Csv => {
            out.push_str("label,d_plus,d_minus,closeness,rank,degenerate\n");
            for e in &result.entries {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    csv_field(&e.label),
                    e.d_plus,
                    e.d_minus,
                    e.closeness,
                    e.rank,
                    e.degenerate
                );
            }
        }
        Format::Text => {
            let _ = writeln!(out, "# {TOPSIS_NOTE}");
            let _ = writeln!(out, "measure: {}", result.measure);
            let width = result.entries.iter().map(|e| e.label.len()).max().unwrap_or(0).max(5);
            let _ = writeln!(out, "{:<width$}  {:>6}  {:>6}  {:>6}  {:>4}", "label", "D+", "D-", "CC", "rank");
            for e in &result.entries {
                let flag = if e.degenerate { "  (degenerate)" } else { "" };
                let _ = writeln!(
                    out,
                    "{:<width$}  {:>6}  {:>6}  {:>6}  {:>4}{flag}",
                    e.label,
                    f4(e.d_plus),
                    f4(e.d_minus),
                    f4(e.closeness),
                    e.rank
                );
            }
            for group in &result.ties {
                let _ = writeln!(out, "tie: {}", group.join(", "));
            }
            out.push('\n');
            let _ = writeln!(out, "criterion  weight  direction  PIS  NIS");
            for (c, ideal) in result.ideals.iter().enumerate() {
                let dir = match matrix.directions()[c] {
                    Direction::Benefit => "benefit",
                    Direction::Cost => "cost",
                };
                let flag = if ideal.degenerate { "  (degenerate)" } else { "" };
                let _ = writeln!(
                    out,
                    "{}  {}  {dir}  {}  {}{flag}",
                    ideal.criterion,
                    f4(matrix.weights()[c]),
                    ideal.pis_label,
                    ideal.nis_label
                );
            }
        }
    }
    out
}

/// Outline of the membership function as `(x, mu)` vertices: a vertical pair
/// at every jump, a triplet at every spike, a run of vertices per connected
/// piece of the support.
pub fn outline(regions: &[Region]) -> Vec<(f64, f64)> {
    let mut points: Vec<(f64, f64)> = Vec::new();
    let mut i = 0;
    while i < regions.len() {
        // one connected piece
        let mut j = i;
        let mut reach = regions[i].right;
        while j + 1 < regions.len() && regions[j + 1].left <= reach {
            j += 1;
            reach = reach.max(regions[j].right);
        }
        let piece = &regions[i..=j];
        let mut xs: Vec<f64> = piece.iter().flat_map(|r| [r.left, r.right]).collect();
        xs.sort_by(f64::total_cmp);
        xs.dedup();
        for x in xs {
            let before = piece.iter().find(|r| !r.is_line() && r.right == x).map_or(0.0, |r| r.height);
            let after = piece.iter().find(|r| !r.is_line() && r.left == x).map_or(0.0, |r| r.height);
            let spike = piece.iter().find(|r| r.is_line() && r.left == x).map(|r| r.height);
            let mut run = vec![before];
            run.extend(spike);
            run.push(after);
            run.dedup();
            points.extend(run.into_iter().map(|h| (x, h)));
        }
        i = j + 1;
    }
    points
}

fn cmd_plotdata(config: &RunConfig, dataset: &MultiCriteriaDataset, args: &CriterionArg) -> Result<String, Failure> {
    let fns = cells(dataset, args.criterion.as_deref())?;
    let mut out = String::new();
    match config.format {
        Format::Json => {
            let series: Vec<_> = fns
                .iter()
                .map(|fz| {
                    let pts: Vec<[f64; 2]> = outline(fz.regions()).into_iter().map(|(x, m)| [x, m]).collect();
                    json!({ "label": fz.label(), "points": pts })
                })
                .collect();
            out.push_str(&json_pretty(&series));
        }
        Format::Csv | Format::Text => {
            let full = config.format == Format::Csv;
            out.push_str("label,x,mu\n");
            for fz in &fns {
                for (x, m) in outline(fz.regions()) {
                    let (x, m) = if full { (x.to_string(), m.to_string()) } else { (f4(x), f4(m)) };
                    let _ = writeln!(out, "{},{x},{m}", csv_field(fz.label()));
                }
            }
        }
    }
    Ok(out)
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
