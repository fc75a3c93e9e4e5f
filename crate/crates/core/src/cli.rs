//! Command-line front end.
//!
//! ```text
//! ellgenus genus --space A4[1] --bundle 5,0,0,0 --order 2
//! ellgenus chern --space A4[3] --degrees 1,2,3
//! ellgenus chi-y --space A3[1] --bundle 4,0,0 --format json
//! ellgenus basis --weight 0 --double-index 6 --prec 7
//! ellgenus info  --space F4[2]
//! ```
//!
//! Exit codes: 0 success, 2 malformed input, 3 mathematically invalid input, 4 integration
//! failure.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bundles::EquivariantVectorBundle;
use crate::ci::{chern_number_with, CompleteIntersection, Manifold};
use crate::error::Error;
use crate::genus::elliptic_genus_with;
use crate::homog::{HomogeneousSpace, Mode, DEFAULT_SEED};
use crate::jacobi::basis_half_integral;
use crate::qseries::{LaurentY, QYSeries};
use crate::rational::{format_rational, parse_rational};
use crate::roots::ParabolicSubgroup;

pub const EXIT_MALFORMED: i32 = 2;
pub const EXIT_INVALID: i32 = 3;
pub const EXIT_INTEGRATION: i32 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Basis,
    Chern,
    Genus,
    ChiY,
    Info,
}

impl Command {
    fn name(self) -> &'static str {
        match self {
            Command::Basis => "basis",
            Command::Chern => "chern",
            Command::Genus => "genus",
            Command::ChiY => "chi-y",
            Command::Info => "info",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Exact,
    Float,
}

#[derive(Parser, Debug)]
#[command(name = "ellgenus", version, about = "Elliptic genera of complete intersections in flag manifolds")]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Subcommand, Debug)]
enum Sub {
    /// Basis of weak Jacobi forms of the given weight and index double_index/2.
    Basis(BasisArgs),
    /// A Chern number of a flag manifold or complete intersection.
    Chern(SpaceArgs),
    /// Elliptic genus, multiplied by y^(d/2).
    Genus(SpaceArgs),
    /// chi_y genus, the q^0 term of the elliptic genus.
    #[command(name = "chi-y")]
    ChiY(SpaceArgs),
    /// Dynkin diagram, dimension and Euler number.
    Info(SpaceArgs),
}

#[derive(Args, Debug)]
struct BasisArgs {
    #[arg(long, allow_hyphen_values = true)]
    weight: i64,
    #[arg(long)]
    double_index: u32,
    /// Absolute precision: output ends in `O(q^prec)`.
    #[arg(long, default_value_t = 7)]
    prec: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct SpaceArgs {
    /// Flag manifold such as `A4[3]` or `G2[1,2]`.
    #[arg(long)]
    space: String,
    /// Highest weight of a bundle summand, e.g. `5,0,0,0`; repeat or separate by `;`.
    #[arg(long, allow_hyphen_values = true)]
    bundle: Vec<String>,
    #[arg(long, default_value_t = 2)]
    order: u32,
    /// Chern class degrees, e.g. `1,2,3`.
    #[arg(long)]
    degrees: Option<String>,
    #[arg(long, value_enum, default_value_t = ModeArg::Exact)]
    mode: ModeArg,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long)]
    seed: Option<u64>,
}

/// A validated job.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JobSpec {
    pub command: Command,
    /// Normalized space such as `A4[3]`; `None` for `basis`.
    pub space: Option<String>,
    pub bundle: Vec<Vec<i64>>,
    pub order: u32,
    pub degrees: Vec<usize>,
    pub weight: i64,
    pub double_index: u32,
    pub prec: u32,
    pub mode: Mode,
    pub format: Format,
    pub seed: Option<u64>,
}

/// Failure with its exit code and a one-line diagnostic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn malformed(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_MALFORMED,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        Self {
            code: exit_code(&e),
            message: e.to_string(),
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::UnknownType(_) | Error::InvalidCrossing(_) | Error::WeightLength { .. } | Error::Parse(_) => {
            EXIT_MALFORMED
        }
        Error::DegeneratePoint(_) | Error::FloatUnstable(_) | Error::NonConstantLocalization(..) => EXIT_INTEGRATION,
        _ => EXIT_INVALID,
    }
}

fn parse_int_list<T: std::str::FromStr>(s: &str, what: &str) -> Result<Vec<T>, CliError> {
    s.split(',')
        .map(|t| t.trim().parse::<T>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| CliError::malformed(format!("cannot parse {what} `{s}` as a comma-separated integer list")))
}

impl JobSpec {
    /// Parses and validates `argv` (including the program name).
    pub fn parse_from<I, T>(argv: I) -> Result<Self, CliError>
    where
        I: IntoIterator<Item = T>,
        T: Into<OsString> + Clone,
    {
        let cli = Cli::try_parse_from(argv).map_err(|e| CliError {
            code: if e.use_stderr() { EXIT_MALFORMED } else { 0 },
            message: e.to_string(),
        })?;
        let job = match cli.command {
            Sub::Basis(a) => JobSpec {
                command: Command::Basis,
                space: None,
                bundle: Vec::new(),
                order: 2,
                degrees: Vec::new(),
                weight: a.weight,
                double_index: a.double_index,
                prec: a.prec,
                mode: Mode::Exact,
                format: a.format,
                seed: None,
            },
            Sub::Chern(a) => Self::from_space_args(Command::Chern, a)?,
            Sub::Genus(a) => Self::from_space_args(Command::Genus, a)?,
            Sub::ChiY(a) => Self::from_space_args(Command::ChiY, a)?,
            Sub::Info(a) => Self::from_space_args(Command::Info, a)?,
        };
        job.validate()?;
        Ok(job)
    }

    fn from_space_args(command: Command, a: SpaceArgs) -> Result<Self, CliError> {
        let parabolic: ParabolicSubgroup = a.space.parse()?;
        let mut bundle = Vec::new();
        for group in &a.bundle {
            for w in group.split(';').filter(|w| !w.trim().is_empty()) {
                bundle.push(parse_int_list::<i64>(w, "bundle weight")?);
            }
        }
        let degrees = match (&a.degrees, command) {
            (Some(d), _) => parse_int_list::<usize>(d, "degrees")?,
            (None, Command::Chern) => return Err(CliError::malformed("chern needs --degrees")),
            (None, _) => Vec::new(),
        };
        Ok(JobSpec {
            command,
            space: Some(parabolic.to_string()),
            bundle,
            order: if command == Command::ChiY { 0 } else { a.order },
            degrees,
            weight: 0,
            double_index: 0,
            prec: 7,
            mode: match a.mode {
                ModeArg::Exact => Mode::Exact,
                ModeArg::Float => Mode::Float,
            },
            format: a.format,
            seed: a.seed,
        })
    }

    fn validate(&self) -> Result<(), CliError> {
        match self.command {
            Command::Basis => {
                if self.prec == 0 {
                    return Err(CliError::malformed("--prec must be at least 1"));
                }
                if self.weight % 2 != 0 {
                    return Err(Error::OddWeight(self.weight).into());
                }
                Ok(())
            }
            _ => {
                let m = self.manifold()?;
                if self.command == Command::Chern {
                    let dim = m.dimension();
                    if let Some(&degree) = self.degrees.iter().find(|&&k| k == 0 || k > dim) {
                        return Err(Error::DegreeOutOfRange { degree, dim }.into());
                    }
                }
                Ok(())
            }
        }
    }

    /// Argument vector that parses back to `self` (without the program name).
    pub fn render(&self) -> Vec<String> {
        let mut v = vec![self.command.name().to_string()];
        let mut push = |k: &str, val: String| {
            v.push(format!("--{k}"));
            v.push(val);
        };
        let join = |xs: &[i64]| xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        match self.command {
            Command::Basis => {
                push("weight", self.weight.to_string());
                push("double-index", self.double_index.to_string());
                push("prec", self.prec.to_string());
            }
            _ => {
                push("space", self.space.clone().unwrap_or_default());
                for b in &self.bundle {
                    push("bundle", join(b));
                }
                if self.command != Command::ChiY {
                    push("order", self.order.to_string());
                }
                if !self.degrees.is_empty() {
                    let d: Vec<i64> = self.degrees.iter().map(|&x| x as i64).collect();
                    push("degrees", join(&d));
                }
                push("mode", self.mode.to_string());
                if let Some(seed) = self.seed {
                    push("seed", seed.to_string());
                }
            }
        }
        push(
            "format",
            match self.format {
                Format::Text => "text",
                Format::Json => "json",
            }
            .to_string(),
        );
        v
    }

    fn space(&self) -> Result<HomogeneousSpace, CliError> {
        let s = self.space.as_deref().ok_or_else(|| CliError::malformed("missing --space"))?;
        Ok(s.parse()?)
    }

    fn manifold(&self) -> Result<AnyManifold, CliError> {
        let base = self.space()?;
        if self.bundle.is_empty() {
            return Ok(AnyManifold::Space(base));
        }
        let e = EquivariantVectorBundle::completely_reducible(&base, &self.bundle)?;
        Ok(AnyManifold::Complete(CompleteIntersection::new(e)?))
    }
}

enum AnyManifold {
    Space(HomogeneousSpace),
    Complete(CompleteIntersection),
}

impl AnyManifold {
    fn dimension(&self) -> usize {
        match self {
            AnyManifold::Space(m) => Manifold::dimension(m),
            AnyManifold::Complete(m) => m.dimension(),
        }
    }

    fn ambient(&self) -> &HomogeneousSpace {
        match self {
            AnyManifold::Space(m) => m,
            AnyManifold::Complete(m) => m.ambient(),
        }
    }
}

/// JSON form of a genus or `chi_y` result.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeriesReport {
    pub dimension: usize,
    pub y_half_power: usize,
    pub terms: Vec<SeriesTerm>,
    pub order: u32,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeriesTerm {
    pub q: u32,
    pub coeffs: BTreeMap<String, String>,
}

impl SeriesReport {
    pub fn new(dimension: usize, series: &QYSeries) -> Self {
        let terms = (0..=series.order())
            .filter_map(|n| {
                let c = series.coeff(n);
                (!c.is_zero()).then(|| SeriesTerm {
                    q: n,
                    coeffs: c.terms().map(|(e, v)| (e.to_string(), format_rational(v))).collect(),
                })
            })
            .collect();
        Self {
            dimension,
            y_half_power: dimension,
            terms,
            order: series.order(),
        }
    }

    pub fn to_series(&self) -> Result<QYSeries, Error> {
        let mut terms = Vec::new();
        for t in &self.terms {
            let mut lp = Vec::new();
            for (e, v) in &t.coeffs {
                let e: i64 = e.parse().map_err(|_| Error::Parse(format!("bad y exponent `{e}`")))?;
                lp.push((e, parse_rational(v)?));
            }
            terms.push((t.q, LaurentY::from_terms(lp)));
        }
        Ok(QYSeries::from_q_terms(self.order, terms))
    }
}

/// Text output of `command` reconstructed from its JSON output.
pub fn text_from_json(command: Command, json: &str) -> Result<String, CliError> {
    let bad = |e: serde_json::Error| CliError::malformed(format!("invalid JSON report: {e}"));
    match command {
        Command::Genus => {
            let r: SeriesReport = serde_json::from_str(json).map_err(bad)?;
            Ok(format!("{}\n", r.to_series()?))
        }
        Command::ChiY => {
            let r: SeriesReport = serde_json::from_str(json).map_err(bad)?;
            Ok(format!("{}\n", r.to_series()?.coeff(0)))
        }
        Command::Chern => {
            let v: serde_json::Value = serde_json::from_str(json).map_err(bad)?;
            let s = v["value"].as_str().ok_or_else(|| CliError::malformed("missing value"))?;
            Ok(format!("{}\n", format_rational(&parse_rational(s)?)))
        }
        _ => Err(CliError::malformed(format!("{} has no JSON round trip", command.name()))),
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

/// Runs a validated job and returns what goes to stdout.
pub fn run(job: &JobSpec) -> Result<String, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(job.seed.unwrap_or(DEFAULT_SEED));
    match job.command {
        Command::Basis => {
            let basis = basis_half_integral(job.weight, job.double_index, job.prec - 1)?;
            match job.format {
                Format::Text => {
                    let mut out = String::new();
                    for el in &basis {
                        writeln!(out, "{}: {}", el.label(), el.value).expect("write to string");
                    }
                    Ok(out)
                }
                Format::Json => {
                    let items: Vec<serde_json::Value> = basis
                        .iter()
                        .map(|el| {
                            let r = SeriesReport::new(0, &el.value);
                            serde_json::json!({"label": el.label(), "terms": r.terms, "order": r.order})
                        })
                        .collect();
                    Ok(to_json(&serde_json::json!({
                        "weight": job.weight,
                        "double_index": job.double_index,
                        "y_half_power": job.double_index % 2,
                        "elements": items,
                    })))
                }
            }
        }
        Command::Chern => {
            let m = job.manifold()?;
            let v = match &m {
                AnyManifold::Space(x) => chern_number_with(x, &job.degrees, job.mode, &mut rng)?,
                AnyManifold::Complete(x) => chern_number_with(x, &job.degrees, job.mode, &mut rng)?,
            };
            Ok(match job.format {
                Format::Text => format!("{}\n", format_rational(&v)),
                Format::Json => to_json(&serde_json::json!({
                    "dimension": m.dimension(),
                    "degrees": job.degrees,
                    "value": format_rational(&v),
                })),
            })
        }
        Command::Genus | Command::ChiY => {
            let m = job.manifold()?;
            let series = match &m {
                AnyManifold::Space(x) => elliptic_genus_with(x, job.order, job.mode, &mut rng)?,
                AnyManifold::Complete(x) => elliptic_genus_with(x, job.order, job.mode, &mut rng)?,
            };
            Ok(match (job.format, job.command) {
                (Format::Json, _) => to_json(&SeriesReport::new(m.dimension(), &series)),
                (Format::Text, Command::ChiY) => format!("{}\n", series.coeff(0)),
                (Format::Text, _) => format!("{series}\n"),
            })
        }
        Command::Info => {
            let m = job.manifold()?;
            let base = m.ambient();
            let euler = match &m {
                AnyManifold::Space(x) => chern_number_with(x, &[x.dimension()], job.mode, &mut rng)?,
                AnyManifold::Complete(x) if x.dimension() > 0 => {
                    chern_number_with(x, &[x.dimension()], job.mode, &mut rng)?
                }
                AnyManifold::Complete(x) => chern_number_with(x, &[], job.mode, &mut rng)?,
            };
            let rs = base.parabolic().root_system();
            match job.format {
                Format::Text => {
                    let mut out = String::new();
                    writeln!(out, "{}", base.parabolic().dynkin_diagram()).expect("write to string");
                    writeln!(out, "ambient dimension  {}", base.dimension()).expect("write to string");
                    writeln!(out, "fixed points       {}", base.euler_characteristic()).expect("write to string");
                    writeln!(out, "|W|                {}", rs.weyl_group_order()).expect("write to string");
                    writeln!(out, "positive roots     {}", rs.positive_roots().len()).expect("write to string");
                    if !job.bundle.is_empty() {
                        writeln!(out, "bundle rank        {}", base.dimension() - m.dimension())
                            .expect("write to string");
                    }
                    writeln!(out, "dimension          {}", m.dimension()).expect("write to string");
                    writeln!(out, "Euler number       {}", format_rational(&euler)).expect("write to string");
                    Ok(out)
                }
                Format::Json => Ok(to_json(&serde_json::json!({
                    "space": job.space,
                    "ambient_dimension": base.dimension(),
                    "fixed_points": base.euler_characteristic(),
                    "weyl_group_order": rs.weyl_group_order().to_string(),
                    "positive_roots": rs.positive_roots().len(),
                    "dimension": m.dimension(),
                    "euler_number": format_rational(&euler),
                }))),
            }
        }
    }
}

/// Entry point used by the binary: returns the process exit code.
pub fn main_with_args<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let result = JobSpec::parse_from(argv).and_then(|job| run(&job));
    match result {
        Ok(out) => {
            print!("{out}");
            0
        }
        Err(e) if e.code == 0 => {
            print!("{}", e.message);
            0
        }
        Err(e) => {
            eprintln!("error: {}", e.message.lines().next().unwrap_or("").trim_start_matches("error: "));
            e.code
        }
    }
}
