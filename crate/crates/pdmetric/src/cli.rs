//! The `pdmetric` command-line front end.
//!
//! Four subcommands over diagram files in the text format of
//! [`crate::diagram`]: `profile` (full bottleneck profile as JSON or CSV),
//! `dist` (a single distance), `matrix` (a pairwise distance matrix,
//! computed on a worker pool) and `check` (the inequality audit; its exit
//! status is the CI hook).
//!
//! Exit codes: 0 success, 1 violated inequality in `check`, 2 unreadable or
//! malformed diagram file, 3 invalid metric specification.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::atomic::{AtomicUsize, Ordering};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::diagram::{GroundMetric, PersistenceDiagram, PlanePoint};
use crate::matching::candidate_distances;
use crate::oracle::{self, SizeCapExceeded};
use crate::profile::{full_profile, profile_value};
use crate::prokhorov::{kth_bottleneck, prokhorov_distance, ParamFunction};
use crate::wasserstein::{audit_bounds, bottleneck_distance, wasserstein_distance, BoundsReport};

/// A fully resolved distance specification: the kind, its parameters and the
/// ground metric. Construction validates that exactly the parameters
/// demanded by the kind are present.
#[derive(Debug, Clone)]
pub struct MetricSpec {
    kind: SpecKind,
    ground: GroundMetric,
}

#[derive(Debug, Clone)]
enum SpecKind {
    Prokhorov(ParamFunction),
    Bottleneck,
    KthBottleneck(u64),
    Wasserstein(f64),
}

impl MetricSpec {
    pub fn prokhorov(f: ParamFunction, ground: GroundMetric) -> Self {
        Self {
            kind: SpecKind::Prokhorov(f),
            ground,
        }
    }

    pub fn bottleneck(ground: GroundMetric) -> Self {
        Self {
            kind: SpecKind::Bottleneck,
            ground,
        }
    }

    pub fn kth_bottleneck(k: u64, ground: GroundMetric) -> Self {
        Self {
            kind: SpecKind::KthBottleneck(k),
            ground,
        }
    }

    pub fn wasserstein(p: f64, ground: GroundMetric) -> Self {
        Self {
            kind: SpecKind::Wasserstein(p),
            ground,
        }
    }

    /// Whether this specification is a genuine metric: Prokhorov with a
    /// polynomial `f`, the bottleneck (also as `kth-bottleneck --k 1`), and
    /// Wasserstein qualify; higher bottleneck orders are queries.
    pub fn is_metric(&self) -> bool {
        match &self.kind {
            SpecKind::Prokhorov(f) => f.is_metric(),
            SpecKind::Bottleneck | SpecKind::Wasserstein(_) => true,
            SpecKind::KthBottleneck(k) => *k == 1,
        }
    }

    pub fn distance(&self, x: &PersistenceDiagram, y: &PersistenceDiagram) -> f64 {
        match &self.kind {
            SpecKind::Prokhorov(f) => prokhorov_distance(x, y, f, self.ground),
            SpecKind::Bottleneck => bottleneck_distance(x, y, self.ground),
            SpecKind::KthBottleneck(k) => kth_bottleneck(x, y, *k, self.ground),
            SpecKind::Wasserstein(p) => wasserstein_distance(x, y, *p, self.ground),
        }
    }

    /// The same distance through the exhaustive oracle.
    pub fn oracle_distance(
        &self,
        x: &PersistenceDiagram,
        y: &PersistenceDiagram,
    ) -> Result<f64, SizeCapExceeded> {
        match &self.kind {
            SpecKind::Prokhorov(f) => oracle::brute_prokhorov(x, y, f, self.ground),
            SpecKind::Bottleneck => {
                let f = ParamFunction::constant(1).expect("1 >= 1");
                oracle::brute_prokhorov(x, y, &f, self.ground)
            }
            SpecKind::KthBottleneck(k) => {
                let f = ParamFunction::constant(*k).expect("validated on construction");
                oracle::brute_prokhorov(x, y, &f, self.ground)
            }
            SpecKind::Wasserstein(p) => oracle::brute_wasserstein(x, y, *p, self.ground),
        }
    }
}

/// Fixed 12-significant-digit decimal rendering; keeps golden outputs stable
/// across platforms.
pub fn format_distance(value: f64) -> String {
    if value == 0.0 {
        return "0".to_string();
    }
    let magnitude = value.abs().log10().floor() as i32;
    let decimals = (11 - magnitude).max(0) as usize;
    format!("{value:.decimals$}")
}

/// Symmetric pairwise distance table, row-major, diagonal exactly 0.
///
/// Upper-triangle pairs are scheduled dynamically over `threads` workers;
/// every entry depends only on its pair of diagrams, so the table does not
/// depend on the thread count.
pub fn pairwise_matrix(
    diagrams: &[PersistenceDiagram],
    spec: &MetricSpec,
    threads: usize,
) -> Vec<f64> {
    let n = diagrams.len();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let workers = threads.max(1).min(pairs.len().max(1));
    let next = AtomicUsize::new(0);
    let worker_outputs: Vec<Vec<(usize, f64)>> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|_| {
                scope.spawn(|| {
                    let mut local = Vec::new();
                    loop {
                        let k = next.fetch_add(1, Ordering::Relaxed);
                        let Some(&(i, j)) = pairs.get(k) else { break };
                        local.push((k, spec.distance(&diagrams[i], &diagrams[j])));
                    }
                    local
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("matrix worker panicked"))
            .collect()
    });
    let mut table = vec![0.0; n * n];
    for (k, value) in worker_outputs.into_iter().flatten() {
        let (i, j) = pairs[k];
        table[i * n + j] = value;
        table[j * n + i] = value;
    }
    table
}

#[derive(Debug, Parser)]
#[command(
    name = "pdmetric",
    version,
    about = "Bottleneck profiles and Prokhorov-family distances for persistence diagrams",
    long_about = "Distances between persistence diagrams given as text files \
                  (one `birth death` pair per line, `#` comments). Exit codes: \
                  0 success, 1 violated inequality (check), 2 bad input file, \
                  3 invalid metric specification."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute the full bottleneck profile of a diagram pair
    Profile(ProfileArgs),
    /// Compute a single distance between two diagrams
    Dist(DistArgs),
    /// Compute a symmetric pairwise distance matrix as CSV
    Matrix(MatrixArgs),
    /// Audit the proved inequalities on a diagram pair (exit 1 on violation)
    Check(CheckArgs),
}

#[derive(Debug, Args)]
struct ProfileArgs {
    diagram_a: PathBuf,
    diagram_b: PathBuf,
    /// Ground metric order: a real >= 1 or "inf"
    #[arg(long, default_value = "inf")]
    ground_p: GroundMetric,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
    /// Write to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    /// `{"ground_order", "n_x", "n_y", "steps": [[t, value], ...]}`
    Json,
    /// One `t,value` row per step
    Csv,
}

#[derive(Debug, Args)]
struct DistArgs {
    diagram_a: PathBuf,
    diagram_b: PathBuf,
    #[command(flatten)]
    metric: MetricFlags,
    /// Cross-check through the exhaustive oracle (small diagrams only)
    #[arg(long, hide = true)]
    oracle: bool,
}

#[derive(Debug, Args)]
struct MatrixArgs {
    /// Diagram files, or directories to take every file from (sorted by name)
    #[arg(required = true)]
    inputs: Vec<PathBuf>,
    #[command(flatten)]
    metric: MetricFlags,
    /// Worker threads for the pair computations
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Write to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct CheckArgs {
    diagram_a: PathBuf,
    diagram_b: PathBuf,
    /// Wasserstein orders to audit
    #[arg(long, value_delimiter = ',', default_value = "1,2")]
    p: Vec<f64>,
    /// Monomial exponents q (f = c·t^q) to audit
    #[arg(long, value_delimiter = ',', default_value = "1,2")]
    q: Vec<u32>,
    /// Monomial scales c (f = c·t^q) to audit
    #[arg(long, value_delimiter = ',', default_value = "1,3")]
    c: Vec<f64>,
    /// Also check the scaled and π_f triangle inequalities against a
    /// synthetic midpoint diagram
    #[arg(long)]
    triple: bool,
    /// Ground metric order: a real >= 1 or "inf"
    #[arg(long, default_value = "inf")]
    ground_p: GroundMetric,
}

#[derive(Debug, Args)]
struct MetricFlags {
    /// Distance to compute
    #[arg(long, value_enum)]
    metric: MetricKind,
    /// Parameter function for prokhorov: poly:c0,c1,... (c0 = 0) or const:k.
    /// Defaults to poly:0,1, the classical discrete Prokhorov distance.
    /// Candidates derived from f carry the documented 1e-12 relative
    /// tolerance of the polynomial inverse.
    #[arg(long)]
    f: Option<String>,
    /// Bottleneck order for kth-bottleneck (k >= 1; k = 1 is the bottleneck)
    #[arg(long)]
    k: Option<u64>,
    /// Wasserstein order (p >= 1)
    #[arg(long)]
    p: Option<f64>,
    /// Ground metric order: a real >= 1 or "inf"
    #[arg(long, default_value = "inf")]
    ground_p: GroundMetric,
}

impl MetricFlags {
    fn build(&self) -> Result<MetricSpec, CliError> {
        let spec = |kind| MetricSpec {
            kind,
            ground: self.ground_p,
        };
        let reject = |flag: &str| {
            Err(CliError::Spec(format!(
                "--{flag} does not apply to --metric {}",
                self.metric.name()
            )))
        };
        match self.metric {
            MetricKind::Prokhorov => {
                if self.k.is_some() {
                    return reject("k");
                }
                if self.p.is_some() {
                    return reject("p");
                }
                let f = match &self.f {
                    None => ParamFunction::identity(),
                    Some(text) => text
                        .parse()
                        .map_err(|e| CliError::Spec(format!("--f {text}: {e}")))?,
                };
                Ok(spec(SpecKind::Prokhorov(f)))
            }
            MetricKind::Bottleneck => {
                if self.f.is_some() {
                    return reject("f");
                }
                if self.k.is_some() {
                    return reject("k");
                }
                if self.p.is_some() {
                    return reject("p");
                }
                Ok(spec(SpecKind::Bottleneck))
            }
            MetricKind::KthBottleneck => {
                if self.f.is_some() {
                    return reject("f");
                }
                if self.p.is_some() {
                    return reject("p");
                }
                let k = self
                    .k
                    .ok_or_else(|| CliError::Spec("--metric kth-bottleneck requires --k".into()))?;
                if k < 1 {
                    return Err(CliError::Spec("--k must be at least 1".into()));
                }
                Ok(spec(SpecKind::KthBottleneck(k)))
            }
            MetricKind::Wasserstein => {
                if self.f.is_some() {
                    return reject("f");
                }
                if self.k.is_some() {
                    return reject("k");
                }
                let p = self
                    .p
                    .ok_or_else(|| CliError::Spec("--metric wasserstein requires --p".into()))?;
                if !(p >= 1.0 && p.is_finite()) {
                    return Err(CliError::Spec(format!("--p must satisfy 1 <= p < inf, got {p}")));
                }
                Ok(spec(SpecKind::Wasserstein(p)))
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MetricKind {
    Prokhorov,
    Bottleneck,
    KthBottleneck,
    Wasserstein,
}

impl MetricKind {
    fn name(&self) -> &'static str {
        match self {
            MetricKind::Prokhorov => "prokhorov",
            MetricKind::Bottleneck => "bottleneck",
            MetricKind::KthBottleneck => "kth-bottleneck",
            MetricKind::Wasserstein => "wasserstein",
        }
    }
}

#[derive(Debug)]
enum CliError {
    /// Unreadable or malformed input file.
    Input(String),
    /// Invalid metric specification or flag combination.
    Spec(String),
    /// `check` found a violated inequality.
    Violation,
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Violation => 1,
            CliError::Input(_) => 2,
            CliError::Spec(_) => 3,
        }
    }
}

pub fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            match &err {
                CliError::Input(msg) | CliError::Spec(msg) => eprintln!("pdmetric: {msg}"),
                CliError::Violation => eprintln!("pdmetric: at least one inequality is violated"),
            }
            ExitCode::from(err.exit_code())
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Profile(args) => cmd_profile(args),
        Command::Dist(args) => cmd_dist(args),
        Command::Matrix(args) => cmd_matrix(args),
        Command::Check(args) => cmd_check(args),
    }
}

fn load_diagram(path: &Path) -> Result<PersistenceDiagram, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    PersistenceDiagram::parse(&text)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// Writes to stdout, tolerating a closed pipe (`pdmetric ... | head`).
fn print_stdout(content: &str) {
    use std::io::Write;
    let _ = std::io::stdout().write_all(content.as_bytes());
}

fn write_output(out: Option<&Path>, content: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, content)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display()))),
        None => {
            print_stdout(content);
            Ok(())
        }
    }
}

fn cmd_profile(args: ProfileArgs) -> Result<(), CliError> {
    let x = load_diagram(&args.diagram_a)?;
    let y = load_diagram(&args.diagram_b)?;
    let profile = full_profile(&x, &y, args.ground_p);
    let content = match args.format {
        OutputFormat::Json => {
            let doc = profile.document(args.ground_p);
            let mut json = serde_json::to_string(&doc).expect("profile documents serialize");
            json.push('\n');
            json
        }
        OutputFormat::Csv => {
            let mut csv = String::new();
            for &(t, value) in profile.steps() {
                csv.push_str(&format!("{},{value}\n", format_distance(t)));
            }
            csv
        }
    };
    write_output(args.out.as_deref(), &content)
}

fn cmd_dist(args: DistArgs) -> Result<(), CliError> {
    let spec = args.metric.build()?;
    let x = load_diagram(&args.diagram_a)?;
    let y = load_diagram(&args.diagram_b)?;
    let value = if args.oracle {
        spec.oracle_distance(&x, &y)
            .map_err(|e| CliError::Spec(e.to_string()))?
    } else {
        spec.distance(&x, &y)
    };
    print_stdout(&format!("{}\n", format_distance(value)));
    Ok(())
}

/// Directories expand to their regular files sorted by name; plain paths are
/// taken as given.
fn expand_inputs(inputs: &[PathBuf]) -> Result<Vec<PathBuf>, CliError> {
    let mut files = Vec::new();
    for input in inputs {
        if input.is_dir() {
            let mut entries: Vec<PathBuf> = fs::read_dir(input)
                .map_err(|e| CliError::Input(format!("{}: {e}", input.display())))?
                .filter_map(|entry| entry.ok().map(|e| e.path()))
                .filter(|p| p.is_file())
                .collect();
            entries.sort();
            files.extend(entries);
        } else {
            files.push(input.clone());
        }
    }
    Ok(files)
}

fn cmd_matrix(args: MatrixArgs) -> Result<(), CliError> {
    let spec = args.metric.build()?;
    if !spec.is_metric() {
        return Err(CliError::Spec(
            "matrix requires a metric-mode specification (constant-form f and k > 1 are queries)"
                .into(),
        ));
    }
    let files = expand_inputs(&args.inputs)?;
    if files.len() < 2 {
        return Err(CliError::Spec("matrix needs at least two diagrams".into()));
    }
    // Parse everything before computing anything: no partial output.
    let diagrams = files
        .iter()
        .map(|p| load_diagram(p))
        .collect::<Result<Vec<_>, _>>()?;
    let names: Vec<String> = files
        .iter()
        .map(|p| {
            p.file_name()
                .map(|n| n.to_string_lossy().into_owned())
                .unwrap_or_else(|| p.display().to_string())
        })
        .collect();
    let table = pairwise_matrix(&diagrams, &spec, args.threads);

    let n = names.len();
    let mut csv = String::from("name");
    for name in &names {
        csv.push(',');
        csv.push_str(name);
    }
    csv.push('\n');
    for i in 0..n {
        csv.push_str(&names[i]);
        for j in 0..n {
            csv.push(',');
            csv.push_str(&format_distance(table[i * n + j]));
        }
        csv.push('\n');
    }
    write_output(args.out.as_deref(), &csv)
}

/// Both diagrams pulled halfway toward the diagonal: a cheap diagram
/// "between" the two, used to exercise the triangle inequalities.
fn synthetic_midpoint(x: &PersistenceDiagram, y: &PersistenceDiagram) -> PersistenceDiagram {
    let pull = |p: PlanePoint| {
        let mid = 0.5 * (p.birth() + p.death());
        PlanePoint::new(0.5 * (p.birth() + mid), 0.5 * (p.death() + mid))
            .expect("pulled points stay above the diagonal")
    };
    PersistenceDiagram::new(x.off_diagonal().chain(y.off_diagonal()).map(pull).collect())
}

fn cmd_check(args: CheckArgs) -> Result<(), CliError> {
    let x = load_diagram(&args.diagram_a)?;
    let y = load_diagram(&args.diagram_b)?;
    for &p in &args.p {
        if !(p >= 1.0 && p.is_finite()) {
            return Err(CliError::Spec(format!("--p entries must satisfy 1 <= p, got {p}")));
        }
    }
    for &q in &args.q {
        if q < 1 {
            return Err(CliError::Spec("--q entries must be at least 1".into()));
        }
    }
    for &c in &args.c {
        if !(c > 0.0 && c.is_finite()) {
            return Err(CliError::Spec(format!("--c entries must be positive, got {c}")));
        }
    }

    let mut report = BoundsReport::default();
    for &p in &args.p {
        for &q in &args.q {
            for &c in &args.c {
                report
                    .checks
                    .extend(audit_bounds(&x, &y, p, q, c, args.ground_p).checks);
            }
        }
    }
    if args.triple {
        let z = synthetic_midpoint(&x, &y);
        let mut functions = vec![ParamFunction::identity()];
        for &q in &args.q {
            for &c in &args.c {
                functions.push(ParamFunction::monomial(c, q).expect("validated above"));
            }
        }
        triangle_checks(&x, &y, &z, &functions, args.ground_p, &mut report);
    }
    print_stdout(&report.to_string());
    if report.all_hold() {
        Ok(())
    } else {
        Err(CliError::Violation)
    }
}

/// `D_{A,C}(s+t) <= D_{A,B}(s) + D_{B,C}(t)` at sampled (s, t), and
/// `π_f(A,C) <= π_f(A,B) + π_f(B,C)`, for the three cyclic arrangements.
fn triangle_checks(
    x: &PersistenceDiagram,
    y: &PersistenceDiagram,
    z: &PersistenceDiagram,
    functions: &[ParamFunction],
    ground: GroundMetric,
    report: &mut BoundsReport,
) {
    let arrangements = [[x, y, z], [y, z, x], [z, x, y]];
    let top = arrangements
        .iter()
        .flat_map(|[a, b, _]| candidate_distances(a, b, ground))
        .fold(0.0f64, f64::max);
    let samples = [0.25 * top, 0.5 * top];
    for (idx, [a, b, c]) in arrangements.iter().enumerate() {
        for &s in &samples {
            for &t in &samples {
                report.push(
                    format!("scaled_triangle[arr={idx},s={s},t={t}]"),
                    profile_value(a, c, s + t, ground) as f64,
                    (profile_value(a, b, s, ground) + profile_value(b, c, t, ground)) as f64,
                );
            }
        }
        for f in functions {
            report.push(
                format!("prokhorov_triangle[arr={idx},f={f}]"),
                prokhorov_distance(a, c, f, ground),
                prokhorov_distance(a, b, f, ground) + prokhorov_distance(b, c, f, ground),
            );
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats_twelve_significant_digits() {
        assert_eq!(format_distance(0.0), "0");
        assert_eq!(format_distance(1.0), "1.00000000000");
        assert_eq!(format_distance(10f64.sqrt()), "3.16227766017");
        assert_eq!(format_distance(0.5), "0.500000000000");
        assert_eq!(format_distance(1234.5), "1234.50000000");
    }

    #[test]
    fn metric_spec_validation() {
        let flags = |metric, f: Option<&str>, k, p| MetricFlags {
            metric,
            f: f.map(str::to_string),
            k,
            p,
            ground_p: GroundMetric::LInfinity,
        };
        assert!(flags(MetricKind::Prokhorov, None, None, None).build().is_ok());
        assert!(flags(MetricKind::Prokhorov, Some("poly:0,3,2"), None, None)
            .build()
            .is_ok());
        // const:0 is not a valid parameter function
        assert!(matches!(
            flags(MetricKind::Prokhorov, Some("const:0"), None, None).build(),
            Err(CliError::Spec(_))
        ));
        assert!(matches!(
            flags(MetricKind::Prokhorov, None, Some(1), None).build(),
            Err(CliError::Spec(_))
        ));
        assert!(matches!(
            flags(MetricKind::Bottleneck, Some("poly:0,1"), None, None).build(),
            Err(CliError::Spec(_))
        ));
        assert!(matches!(
            flags(MetricKind::KthBottleneck, None, None, None).build(),
            Err(CliError::Spec(_))
        ));
        assert!(matches!(
            flags(MetricKind::Wasserstein, None, None, Some(0.5)).build(),
            Err(CliError::Spec(_))
        ));
        assert!(flags(MetricKind::Wasserstein, None, None, Some(2.0)).build().is_ok());
        // query mode builds but is rejected for matrices
        let query = flags(MetricKind::KthBottleneck, None, Some(3), None)
            .build()
            .unwrap();
        assert!(!query.is_metric());
        let first = flags(MetricKind::KthBottleneck, None, Some(1), None)
            .build()
            .unwrap();
        assert!(first.is_metric());
    }

    #[test]
    fn pairwise_matrix_is_symmetric_with_zero_diagonal() {
        let diagrams = vec![
            PersistenceDiagram::from_pairs(&[(0.0, 4.0)]).unwrap(),
            PersistenceDiagram::from_pairs(&[(1.0, 5.0)]).unwrap(),
            PersistenceDiagram::from_pairs(&[(0.0, 2.0), (3.0, 7.0)]).unwrap(),
        ];
        let spec = MetricSpec::prokhorov(ParamFunction::identity(), GroundMetric::LInfinity);
        for threads in [1, 4] {
            let table = pairwise_matrix(&diagrams, &spec, threads);
            for i in 0..3 {
                assert_eq!(table[i * 3 + i], 0.0);
                for j in 0..3 {
                    assert_eq!(table[i * 3 + j], table[j * 3 + i]);
                }
            }
            assert_eq!(table[1], 1.0);
        }
    }

    #[test]
    fn midpoint_diagram_stays_valid() {
        let x = PersistenceDiagram::from_pairs(&[(0.0, 4.0), (2.0, 2.5)]).unwrap();
        let y = PersistenceDiagram::from_pairs(&[(1.0, 9.0)]).unwrap();
        let z = synthetic_midpoint(&x, &y);
        assert_eq!(z.len(), 3);
        for p in z.points() {
            assert!(p.is_off_diagonal());
        }
    }

    #[test]
    fn cli_parses_subcommands() {
        let cli = Cli::try_parse_from([
            "pdmetric", "dist", "a.dgm", "b.dgm", "--metric", "wasserstein", "--p", "2",
        ])
        .unwrap();
        assert!(matches!(cli.command, Command::Dist(_)));
        let cli = Cli::try_parse_from([
            "pdmetric", "matrix", "a.dgm", "b.dgm", "--metric", "bottleneck", "--threads", "4",
        ])
        .unwrap();
        assert!(matches!(cli.command, Command::Matrix(_)));
        assert!(Cli::try_parse_from(["pdmetric", "profile", "a.dgm"]).is_err());
    }
}
