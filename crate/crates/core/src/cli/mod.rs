//! Command-line surface.
//!
//! Exit codes: `0` success, `1` a verification failed, `2` usage error.

mod verify;

use std::io::Write;
use std::ops::RangeInclusive;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;

use crate::algebra::{format_rational, PolyR};
use crate::distribution::build_dist;
use crate::matrices::{self, SquareMatrix};
use crate::symfunc;
use crate::triangles::{convert, routes, Kind, Triangle};

pub use verify::{run_suite, CheckRecord, Status, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Standard-error bands used for the sampler's mean check.
pub const SAMPLER_SIGMAS: u32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "rcentral",
    version,
    about = "Exact r-central factorial numbers with even indices"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print every entry (n,k) of a triangle or matrix up to max-n.
    Table {
        #[arg(long)]
        kind: TableKind,
        #[arg(long)]
        max_n: usize,
        /// Evaluate at this integer r instead of printing polynomials.
        #[arg(long, allow_hyphen_values = true)]
        r: Option<BigInt>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Compute one entry by a chosen route.
    Eval {
        #[arg(long)]
        kind: EvalKind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Route::Recurrence)]
        route: Route,
        #[arg(long, allow_hyphen_values = true)]
        r: Option<BigInt>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Run identity checks and report each one.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        /// Inclusive range `a..b`, or a single value.
        #[arg(long = "r", value_parser = parse_r_range, default_value = "0..5")]
        r_range: RangeInclusive<u64>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Exact Poisson-binomial law of row n, optionally sampled.
    Dist {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        r: u64,
        #[arg(long)]
        samples: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    #[value(name = "u")]
    U0First,
    #[value(name = "U")]
    U0Second,
    #[value(name = "u_r")]
    UrFirst,
    #[value(name = "U_r")]
    UrSecond,
    #[value(name = "U1r")]
    U1r,
    #[value(name = "U2r")]
    U2r,
    #[value(name = "A1")]
    A1,
    #[value(name = "A2")]
    A2,
    #[value(name = "pascal")]
    Pascal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EvalKind {
    #[value(name = "u")]
    U0First,
    #[value(name = "U")]
    U0Second,
    #[value(name = "u_r")]
    UrFirst,
    #[value(name = "U_r")]
    UrSecond,
}

impl From<EvalKind> for Kind {
    fn from(k: EvalKind) -> Kind {
        match k {
            EvalKind::U0First => Kind::FirstKind,
            EvalKind::U0Second => Kind::SecondKind,
            EvalKind::UrFirst => Kind::FirstKindR,
            EvalKind::UrSecond => Kind::SecondKindR,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Route {
    /// Defining two-term recurrence.
    Recurrence,
    /// Explicit alternating sum (second kind).
    Explicit,
    /// Column recurrence with products of (i^2 + r) (first kind).
    RowRec,
    /// Column recurrence with powers of (k^2 + r) (second kind).
    GeomRec,
    /// Conversion identity between the r-array and the r = 0 array.
    FromR0,
    /// Products of Stirling numbers of the first kind (first kind).
    Stirling,
    /// Elementary symmetric function form (first kind).
    Sigma,
    /// Complete homogeneous symmetric function form (second kind).
    H,
}

impl Route {
    pub fn name(self) -> &'static str {
        match self {
            Route::Recurrence => "recurrence",
            Route::Explicit => "explicit",
            Route::RowRec => "row-rec",
            Route::GeomRec => "geom-rec",
            Route::FromR0 => "from-r0",
            Route::Stirling => "stirling",
            Route::Sigma => "sigma",
            Route::H => "h",
        }
    }

    fn applies_to_first(self) -> bool {
        matches!(
            self,
            Route::Recurrence | Route::RowRec | Route::FromR0 | Route::Stirling | Route::Sigma
        )
    }

    fn applies_to_second(self) -> bool {
        matches!(
            self,
            Route::Recurrence | Route::Explicit | Route::GeomRec | Route::FromR0 | Route::H
        )
    }
}

/// One table cell or evaluated entry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OutputRecord {
    pub n: usize,
    pub k: usize,
    pub value: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub route: Option<String>,
}

impl OutputRecord {
    fn csv(&self) -> String {
        match &self.route {
            Some(route) => format!("{},{},{},{}", self.n, self.k, self.value, route),
            None => format!("{},{},{}", self.n, self.k, self.value),
        }
    }
}

fn parse_r_range(s: &str) -> Result<RangeInclusive<u64>, String> {
    let bad = || format!("expected `a..b` or a single non-negative integer, got {s:?}");
    match s.split_once("..") {
        Some((a, b)) => {
            let a: u64 = a.trim().parse().map_err(|_| bad())?;
            let b: u64 = b
                .trim()
                .trim_start_matches('=')
                .parse()
                .map_err(|_| bad())?;
            if a > b {
                return Err(format!("empty range {s:?}"));
            }
            Ok(a..=b)
        }
        None => {
            let a: u64 = s.trim().parse().map_err(|_| bad())?;
            Ok(a..=a)
        }
    }
}

/// Usage error raised after argument parsing succeeded.
#[derive(Debug)]
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let result = match cli.command {
        Command::Table {
            kind,
            max_n,
            r,
            format,
        } => cmd_table(kind, max_n, r.as_ref(), format, out),
        Command::Eval {
            kind,
            n,
            k,
            route,
            r,
            format,
        } => cmd_eval(kind, n, k, route, r.as_ref(), format, out),
        Command::Verify {
            suite,
            max_n,
            r_range,
            format,
        } => cmd_verify(suite, max_n, r_range, format, out),
        Command::Dist {
            n,
            r,
            samples,
            seed,
            format,
        } => cmd_dist(n, r, samples, seed, format, out),
    };
    match result {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn render(p: &PolyR, r: Option<&BigInt>) -> String {
    match r {
        Some(x) => p.eval(x).to_string(),
        None => p.to_string(),
    }
}

fn write_records(
    records: &[OutputRecord],
    format: Format,
    out: &mut dyn Write,
) -> Result<(), UsageError> {
    match format {
        Format::Csv => {
            for rec in records {
                writeln!(out, "{}", rec.csv())?;
            }
        }
        Format::Json => {
            writeln!(out, "{}", serde_json::to_string_pretty(records)?)?;
        }
    }
    Ok(())
}

/// Builds the records that `table` prints.
pub fn table_records(kind: TableKind, max_n: usize, r: Option<&BigInt>) -> Vec<OutputRecord> {
    let dim = max_n + 1;
    let matrix: SquareMatrix = match kind {
        TableKind::U0First | TableKind::U0Second | TableKind::UrFirst | TableKind::UrSecond => {
            let kind = match kind {
                TableKind::U0First => Kind::FirstKind,
                TableKind::U0Second => Kind::SecondKind,
                TableKind::UrFirst => Kind::FirstKindR,
                _ => Kind::SecondKindR,
            };
            let t = Triangle::build(kind, max_n);
            SquareMatrix::from_fn(dim, |i, j| t.get(i, j).clone())
        }
        TableKind::U1r => matrices::build_u1(dim).expect("dim >= 1"),
        TableKind::U2r => matrices::build_u2(dim).expect("dim >= 1"),
        TableKind::A1 => matrices::build_a1(dim).expect("dim >= 1"),
        TableKind::A2 => matrices::build_a2(dim).expect("dim >= 1"),
        TableKind::Pascal => matrices::build_pascal(dim, &PolyR::r()).expect("dim >= 1"),
    };
    (0..dim)
        .flat_map(|n| (0..=n).map(move |k| (n, k)))
        .map(|(n, k)| OutputRecord {
            n,
            k,
            value: render(matrix.get(n, k), r),
            route: None,
        })
        .collect()
}

fn cmd_table(
    kind: TableKind,
    max_n: usize,
    r: Option<&BigInt>,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, UsageError> {
    write_records(&table_records(kind, max_n, r), format, out)?;
    Ok(EXIT_OK)
}

/// Computes entry `(n,k)` of `kind` by `route`, symbolic in `r` unless
/// `r` is given. Errors are usage errors (route/kind mismatch, bad indices).
pub fn eval_entry(
    kind: Kind,
    n: usize,
    k: usize,
    route: Route,
    r: Option<&BigInt>,
) -> Result<String, String> {
    if k > n {
        return Err(format!("need k <= n, got n={n}, k={k}"));
    }
    let fits = if kind.is_first() {
        route.applies_to_first()
    } else {
        route.applies_to_second()
    };
    if !fits {
        return Err(format!(
            "route {} does not apply to kind {}",
            route.name(),
            kind
        ));
    }
    let e = |x: crate::triangles::TriangleError| x.to_string();

    // the r = 0 kinds go through the parametric route and specialize,
    // except from-r0, which there means the collapsing inverse conversion
    if !kind.is_parametric() {
        let value: BigInt = match route {
            Route::FromR0 if kind.is_first() => {
                convert::convert_u_from_ur_first(n, k).map_err(e)?
            }
            Route::FromR0 => convert::convert_u_from_ur_second(n, k).map_err(e)?,
            _ => eval_entry(kind.parametric(), n, k, route, Some(&BigInt::from(0)))?
                .parse()
                .map_err(|x: num_bigint::ParseBigIntError| x.to_string())?,
        };
        return Ok(value.to_string());
    }

    if route == Route::Explicit {
        if let Some(x) = r {
            return Ok(routes::explicit_second_kind(n, k, x)
                .map_err(e)?
                .to_string());
        }
    }
    let poly = match (kind.is_first(), route) {
        (_, Route::Recurrence) => Triangle::build(kind, n).get(n, k).clone(),
        (true, Route::RowRec) => routes::row_recurrence_first(n, k).map_err(e)?,
        (true, Route::FromR0) => convert::convert_ur_from_u_first(n, k).map_err(e)?,
        (true, Route::Stirling) => routes::ur_via_stirling(n, k).map_err(e)?,
        (true, Route::Sigma) => symfunc::triangle_as_sigma(n, n - k).map_err(|x| x.to_string())?,
        (false, Route::Explicit) => routes::explicit_second_kind_poly(n, k).map_err(e)?,
        (false, Route::GeomRec) => routes::geometric_recurrence_second(n, k).map_err(e)?,
        (false, Route::FromR0) => convert::convert_ur_from_u_second(n, k).map_err(e)?,
        (false, Route::H) => symfunc::triangle_as_h(k, n - k),
        _ => unreachable!("route applicability checked above"),
    };
    Ok(render(&poly, r))
}

fn cmd_eval(
    kind: EvalKind,
    n: usize,
    k: usize,
    route: Route,
    r: Option<&BigInt>,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, UsageError> {
    let value = eval_entry(kind.into(), n, k, route, r).map_err(UsageError)?;
    match format {
        Format::Csv => writeln!(out, "{value}")?,
        Format::Json => {
            let rec = OutputRecord {
                n,
                k,
                value,
                route: Some(route.name().to_string()),
            };
            writeln!(out, "{}", serde_json::to_string_pretty(&rec)?)?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_verify(
    suite: Suite,
    max_n: usize,
    r_range: RangeInclusive<u64>,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, UsageError> {
    let records = run_suite(suite, max_n, r_range);
    match format {
        Format::Csv => {
            writeln!(out, "suite,check,status,detail")?;
            for rec in &records {
                writeln!(out, "{}", rec.csv())?;
            }
        }
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&records)?)?,
    }
    let failed = records.iter().any(|r| r.status == Status::Fail);
    Ok(if failed { EXIT_FAILED } else { EXIT_OK })
}

#[derive(Debug, Serialize)]
struct DistReport {
    n: usize,
    r: u64,
    probs: Vec<String>,
    pmf: Vec<String>,
    mean: String,
    variance: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    sampling: Option<SamplingReport>,
}

#[derive(Debug, Serialize)]
struct SamplingReport {
    samples: u64,
    seed: u64,
    histogram: Vec<u64>,
    empirical_mean: String,
    deviation: String,
    band: String,
    within_band: bool,
}

fn cmd_dist(
    n: usize,
    r: u64,
    samples: Option<u64>,
    seed: u64,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, UsageError> {
    let d = build_dist(n, r)?;
    let sampling = match samples {
        Some(count) => {
            let h = d.sample(count, seed)?;
            let (dev, band) = h.deviation_report(d.mean(), d.variance(), SAMPLER_SIGMAS);
            Some(SamplingReport {
                samples: count,
                seed,
                histogram: h.counts().to_vec(),
                empirical_mean: format_rational(&h.empirical_mean()),
                deviation: format!("{dev:.9}"),
                band: format!("{band:.9}"),
                within_band: h.mean_within(d.mean(), d.variance(), SAMPLER_SIGMAS),
            })
        }
        None => None,
    };
    let report = DistReport {
        n,
        r,
        probs: d.probs().iter().map(format_rational).collect(),
        pmf: d.pmf().iter().map(format_rational).collect(),
        mean: format_rational(d.mean()),
        variance: format_rational(d.variance()),
        sampling,
    };
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?,
        Format::Csv => {
            writeln!(out, "probs,{}", report.probs.join(","))?;
            writeln!(out, "pmf,{}", report.pmf.join(","))?;
            writeln!(out, "mean,{}", report.mean)?;
            writeln!(out, "variance,{}", report.variance)?;
            if let Some(s) = &report.sampling {
                let hist: Vec<String> = s.histogram.iter().map(u64::to_string).collect();
                writeln!(out, "samples,{}", s.samples)?;
                writeln!(out, "seed,{}", s.seed)?;
                writeln!(out, "histogram,{}", hist.join(","))?;
                writeln!(out, "empirical_mean,{}", s.empirical_mean)?;
                writeln!(out, "deviation,{}", s.deviation)?;
                writeln!(out, "band,{}", s.band)?;
                writeln!(out, "within_band,{}", s.within_band)?;
            }
        }
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn r_range_parsing() {
        assert_eq!(parse_r_range("0..5").unwrap(), 0..=5);
        assert_eq!(parse_r_range("0..=5").unwrap(), 0..=5);
        assert_eq!(parse_r_range("3").unwrap(), 3..=3);
        assert!(parse_r_range("5..1").is_err());
        assert!(parse_r_range("a..b").is_err());
    }

    #[test]
    fn eval_route_mismatch() {
        assert!(eval_entry(Kind::FirstKindR, 3, 1, Route::Explicit, None).is_err());
        assert!(eval_entry(Kind::SecondKindR, 3, 1, Route::Stirling, None).is_err());
        assert!(eval_entry(Kind::SecondKindR, 1, 3, Route::Recurrence, None).is_err());
        assert!(eval_entry(Kind::FirstKindR, 3, 0, Route::RowRec, None).is_err());
    }

    #[test]
    fn eval_plain_kinds_specialize() {
        for route in [
            Route::Recurrence,
            Route::RowRec,
            Route::FromR0,
            Route::Stirling,
            Route::Sigma,
        ] {
            assert_eq!(
                eval_entry(Kind::FirstKind, 4, 2, route, None).unwrap(),
                "49"
            );
        }
        for route in [
            Route::Recurrence,
            Route::Explicit,
            Route::GeomRec,
            Route::FromR0,
            Route::H,
        ] {
            assert_eq!(
                eval_entry(Kind::SecondKind, 4, 2, route, None).unwrap(),
                "21"
            );
        }
    }
}
