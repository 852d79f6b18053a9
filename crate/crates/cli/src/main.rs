//! `lieclosed`: invariants, eigenprojectors, matrix exponentials and Chern
//! conversions from the command line. Results are JSON documents with the
//! keys `command`, `inputs`, `outputs` and `diagnostics`.
//!
//! Exit status: 0 on success, 1 on bad input, 2 on numerical failure or
//! when a `--check` comparison exceeds the tolerance.

mod doc;
mod group;
mod sequence;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lieclosed::invariants::{char_poly_invariants, det_via_bell, trace_powers};
use lieclosed::oracle::{series_exp, DEFAULT_SERIES_TOL};
use lieclosed::zmethod::{
    confluent_basis, matrix_exp, projectors_from_invariants, projectors_product_form,
    spectrum_from_invariants, Spectrum, NEAR_DEGENERACY,
};
use lieclosed::SquareMatrix;
use serde_json::{json, Map, Value};

use group::{Group, GroupArgs};
use sequence::Direction;

#[derive(Debug)]
pub enum CliError {
    /// Malformed or inconsistent input; exit status 1.
    Input(String),
    /// Non-convergence or a failed consistency check; exit status 2.
    Numerical(String),
}

impl From<lieclosed::Error> for CliError {
    fn from(e: lieclosed::Error) -> Self {
        use lieclosed::Error as E;
        match e {
            E::NonConvergence { .. }
            | E::SingularInterpolation
            | E::Consistency(_)
            | E::DegenerateSpectrum { .. } => CliError::Numerical(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 1,
            CliError::Numerical(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Numerical(m) => m,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "lieclosed", version, about = "Closed-form Lie group exponentials and invariants")]
struct Cli {
    /// Tolerance for --check comparisons, relative to the size of the
    /// quantities compared.
    #[arg(long, global = true, env = "LIECLOSED_TOL", default_value_t = 1e-9, allow_negative_numbers = true)]
    tol: f64,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Characteristic-polynomial invariants, determinant and power traces.
    Invariants(MatrixArgs),
    /// Matrix exponential.
    Exp {
        #[command(flatten)]
        input: MatrixArgs,
        #[arg(long, value_enum, default_value_t = Method::Zmethod)]
        method: Method,
    },
    /// Spectrum and eigenprojectors, or quasi-projectors for a repeated
    /// eigenvalue.
    Projectors(MatrixArgs),
    /// Algebra element, invariants and closed-form element of a built-in group.
    Group {
        #[command(flatten)]
        group: GroupArgs,
        /// Compare the closed form against the series exponential.
        #[arg(long)]
        check: bool,
    },
    /// Convert between Chern classes and Chern characters.
    Chern {
        /// JSON array of numbers, "p/q" strings, [re, im] pairs or form
        /// polynomials such as {"1": 1, "x^2*y": "1/2"}.
        #[arg(long)]
        sequence: PathBuf,
        #[arg(long, value_enum)]
        direction: Direction,
        /// Fiber dimension; defaults to an integer ch_0 when converting
        /// characters, otherwise to the sequence length minus one.
        #[arg(long)]
        fiber_dim: Option<usize>,
        /// Convert back and report the roundtrip residual.
        #[arg(long)]
        check: bool,
    },
}

#[derive(Debug, Clone, Args)]
struct MatrixArgs {
    /// Matrix document: {"n": N, "entries": [[[re, im], ...], ...]}.
    #[arg(long, conflicts_with = "group")]
    matrix: Option<PathBuf>,
    #[command(flatten)]
    group: GroupArgs,
    /// Cross-check against independent computations.
    #[arg(long)]
    check: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Zmethod,
    Oracle,
    Closed,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Zmethod => "zmethod",
            Method::Oracle => "oracle",
            Method::Closed => "closed",
        }
    }
}

/// The matrix a command acts on, with its echo for `inputs`.
struct Input {
    matrix: SquareMatrix,
    group: Option<Group>,
    echo: Value,
}

fn load(args: &MatrixArgs, use_generator: bool) -> Result<Input, CliError> {
    let group = args.group.resolve()?;
    match (&args.matrix, group) {
        (Some(path), None) => {
            let matrix = doc::parse_matrix(&doc::read_json(path)?)?;
            Ok(Input { echo: json!({ "matrix": doc::matrix(&matrix) }), matrix, group: None })
        }
        (None, Some(g)) => {
            let matrix = if use_generator { g.generator() } else { g.algebra() };
            Ok(Input { echo: g.echo(), matrix, group: Some(g) })
        }
        (None, None) => Err(CliError::Input("give either --matrix or --group".into())),
        (Some(_), Some(_)) => Err(CliError::Input("--matrix and --group are exclusive".into())),
    }
}

/// A finished result plus whether a `--check` comparison failed.
struct Report {
    doc: Value,
    breach: Option<String>,
}

#[derive(Default)]
struct Checks {
    breaches: Vec<String>,
}

impl Checks {
    fn record(&mut self, name: &str, value: f64, limit: f64) {
        if value.is_nan() || value > limit {
            self.breaches.push(format!("{name} = {value:e} exceeds {limit:e}"));
        }
    }

    fn finish(self) -> Option<String> {
        if self.breaches.is_empty() {
            None
        } else {
            Some(format!("check failed: {}", self.breaches.join("; ")))
        }
    }
}

fn document(command: &str, inputs: Value, outputs: Map<String, Value>, diagnostics: Map<String, Value>) -> Value {
    json!({
        "command": command,
        "inputs": inputs,
        "outputs": outputs,
        "diagnostics": diagnostics,
    })
}

fn spectrum_json(sp: &Spectrum) -> Value {
    let roots: Vec<Value> = sp
        .roots
        .iter()
        .map(|(l, m)| json!({ "value": doc::complex(*l), "multiplicity": m }))
        .collect();
    json!({ "roots": roots, "cluster_tol": sp.cluster_tol })
}

fn cmd_invariants(args: &MatrixArgs, tol: f64) -> Result<Report, CliError> {
    let input = load(args, false)?;
    let a = &input.matrix;
    let phi = char_poly_invariants(a)?;
    let det = det_via_bell(a)?;
    let mut outputs = Map::new();
    outputs.insert("n".into(), json!(a.dim()));
    outputs.insert("phi".into(), doc::complexes(&phi.phi));
    outputs.insert("det_bell".into(), doc::complex(det));
    outputs.insert("traces".into(), doc::complexes(&trace_powers(a, a.dim())));
    let mut diagnostics = Map::new();
    let mut checks = Checks::default();
    if args.check {
        let lu = a.determinant();
        let dev = (det - lu).norm();
        diagnostics.insert("det_lu".into(), doc::complex(lu));
        diagnostics.insert("det_deviation".into(), json!(dev));
        checks.record("det_deviation", dev, tol * (1.0 + lu.norm()));
    }
    Ok(Report {
        doc: document("invariants", input.echo, outputs, diagnostics),
        breach: checks.finish(),
    })
}

fn cmd_exp(args: &MatrixArgs, method: Method, tol: f64) -> Result<Report, CliError> {
    let input = load(args, true)?;
    if method == Method::Closed && input.group.is_none() {
        return Err(CliError::Input("--method closed requires --group".into()));
    }
    let a = &input.matrix;
    let compute = |m: Method| -> Result<SquareMatrix, CliError> {
        Ok(match m {
            Method::Zmethod => matrix_exp(a)?,
            Method::Oracle => series_exp(a, DEFAULT_SERIES_TOL)?,
            Method::Closed => input.group.as_ref().expect("checked above").exp_closed()?,
        })
    };
    let result = compute(method)?;
    let mut outputs = Map::new();
    outputs.insert("method".into(), json!(method.name()));
    outputs.insert("exp".into(), doc::matrix(&result));
    let mut diagnostics = Map::new();
    let mut checks = Checks::default();
    if args.check {
        let oracle = if method == Method::Oracle { result.clone() } else { compute(Method::Oracle)? };
        let limit = tol * (1.0 + oracle.max_abs());
        let mut paths = vec![Method::Zmethod];
        if input.group.is_some() {
            paths.push(Method::Closed);
        }
        let mut deviations = Map::new();
        for m in paths {
            let value = if m == method { result.clone() } else { compute(m)? };
            let dev = value.max_abs_diff(&oracle);
            deviations.insert(m.name().into(), json!(dev));
            checks.record(&format!("{} vs oracle", m.name()), dev, limit);
        }
        diagnostics.insert("max_abs_deviation_vs_oracle".into(), Value::Object(deviations));
        diagnostics.insert("limit".into(), json!(limit));
    }
    Ok(Report { doc: document("exp", input.echo, outputs, diagnostics), breach: checks.finish() })
}

fn cmd_projectors(args: &MatrixArgs, tol: f64) -> Result<Report, CliError> {
    let input = load(args, false)?;
    let a = &input.matrix;
    let n = a.dim();
    let phi = char_poly_invariants(a)?;
    let raw = spectrum_from_invariants(a, &phi, None)?;
    let sp = raw.merged(NEAR_DEGENERACY * (1.0 + raw.scale()));
    let limit = tol * (1.0 + a.max_abs());
    let mut outputs = Map::new();
    let mut diagnostics = Map::new();
    let mut checks = Checks::default();
    outputs.insert("spectrum".into(), spectrum_json(&sp));
    outputs.insert("degenerate".into(), json!(!sp.is_simple()));
    if sp.is_simple() {
        let basis = projectors_product_form(a, &sp)?;
        let projectors: Vec<Value> = basis
            .projectors
            .iter()
            .map(|(l, z)| json!({ "eigenvalue": doc::complex(*l), "matrix": doc::matrix(z) }))
            .collect();
        outputs.insert("projectors".into(), Value::Array(projectors));
        let r = basis.residuals(a);
        let residuals = json!({
            "completeness": r.completeness,
            "idempotence": r.idempotence,
            "orthogonality": r.orthogonality,
            "trace": r.trace,
            "reconstruction": r.reconstruction,
        });
        diagnostics.insert("residuals".into(), residuals);
        let invariant = projectors_from_invariants(a, &sp, &phi)?;
        let dev = basis
            .projectors
            .iter()
            .zip(&invariant.projectors)
            .map(|((_, x), (_, y))| x.max_abs_diff(y))
            .fold(0.0, f64::max);
        diagnostics.insert("invariant_form_deviation".into(), json!(dev));
        if args.check {
            checks.record("completeness", r.completeness, tol);
            checks.record("idempotence", r.idempotence, tol);
            checks.record("orthogonality", r.orthogonality, tol);
            checks.record("reconstruction", r.reconstruction, limit);
            checks.record("invariant_form_deviation", dev, tol);
        }
    } else {
        let multiplicities: Vec<usize> = sp.roots.iter().map(|r| r.1).collect();
        outputs.insert("multiplicities".into(), json!(multiplicities));
        let basis = confluent_basis(a, &sp)?;
        let quasi: Vec<Value> = basis
            .iter()
            .map(|q| {
                json!({
                    "eigenvalue": doc::complex(q.eigenvalue),
                    "order": q.order,
                    "matrix": doc::matrix(&q.matrix),
                })
            })
            .collect();
        outputs.insert("quasi_projectors".into(), Value::Array(quasi));
        // sum_i Z_{i,0} = I and sum_i (lambda_i Z_{i,0} + Z_{i,1}) = A.
        let mut total = SquareMatrix::zeros(n);
        let mut rebuilt = SquareMatrix::zeros(n);
        for q in &basis {
            match q.order {
                0 => {
                    total = &total + &q.matrix;
                    rebuilt = &rebuilt + &q.matrix.scale(q.eigenvalue);
                }
                1 => rebuilt = &rebuilt + &q.matrix,
                _ => {}
            }
        }
        let completeness = total.max_abs_diff(&SquareMatrix::identity(n));
        let reconstruction = rebuilt.max_abs_diff(a);
        diagnostics.insert(
            "residuals".into(),
            json!({ "completeness": completeness, "reconstruction": reconstruction }),
        );
        if args.check {
            checks.record("completeness", completeness, tol);
            checks.record("reconstruction", reconstruction, limit);
        }
    }
    Ok(Report {
        doc: document("projectors", input.echo, outputs, diagnostics),
        breach: checks.finish(),
    })
}

fn cmd_group(args: &GroupArgs, check: bool, tol: f64) -> Result<Report, CliError> {
    let g = args
        .resolve()?
        .ok_or_else(|| CliError::Input("the group command needs --group".into()))?;
    let a = g.algebra();
    let phi = char_poly_invariants(&a)?;
    let element = g.exp_closed()?;
    let mut outputs = Map::new();
    outputs.insert("algebra".into(), doc::matrix(&a));
    outputs.insert("phi".into(), doc::complexes(&phi.phi));
    outputs.insert("element".into(), doc::matrix(&element));
    outputs.extend(g.details()?);
    let mut diagnostics = Map::new();
    let mut checks = Checks::default();
    if check {
        let oracle = series_exp(&g.generator(), DEFAULT_SERIES_TOL)?;
        let dev = element.max_abs_diff(&oracle);
        let limit = tol * (1.0 + oracle.max_abs());
        diagnostics.insert("max_abs_deviation_vs_oracle".into(), json!(dev));
        diagnostics.insert("limit".into(), json!(limit));
        checks.record("closed vs oracle", dev, limit);
    }
    Ok(Report { doc: document("group", g.echo(), outputs, diagnostics), breach: checks.finish() })
}

fn cmd_chern(
    path: &Path,
    direction: Direction,
    fiber_dim: Option<usize>,
    check: bool,
    tol: f64,
) -> Result<Report, CliError> {
    let conv = sequence::run(path, direction, fiber_dim)?;
    let mut outputs = Map::new();
    let key = match direction {
        Direction::ClassesToCharacters => "characters",
        Direction::CharactersToClasses => "classes",
    };
    outputs.insert(key.into(), conv.output.clone());
    let mut diagnostics = Map::new();
    let mut checks = Checks::default();
    if check {
        diagnostics.insert("roundtrip_residual".into(), json!(conv.roundtrip_residual));
        let limit = if conv.exact { 0.0 } else { tol };
        checks.record("roundtrip_residual", conv.roundtrip_residual, limit);
    }
    Ok(Report {
        doc: document("chern", sequence::echo(direction, &conv), outputs, diagnostics),
        breach: checks.finish(),
    })
}

fn run(cli: &Cli) -> Result<Report, CliError> {
    if !(cli.tol.is_finite() && cli.tol > 0.0) {
        return Err(CliError::Input(format!("--tol must be positive and finite, got {}", cli.tol)));
    }
    let tol = cli.tol;
    match &cli.command {
        Command::Invariants(args) => cmd_invariants(args, tol),
        Command::Exp { input, method } => cmd_exp(input, *method, tol),
        Command::Projectors(args) => cmd_projectors(args, tol),
        Command::Group { group, check } => cmd_group(group, *check, tol),
        Command::Chern { sequence, direction, fiber_dim, check } => {
            cmd_chern(sequence, *direction, *fiber_dim, *check, tol)
        }
    }
}

fn emit(doc: &Value, out: Option<&Path>) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(doc).expect("JSON values serialise");
    text.push('\n');
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display()))),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Input(format!("cannot write to stdout: {e}"))),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let outcome = run(&cli).and_then(|report| {
        emit(&report.doc, cli.out.as_deref())?;
        match report.breach {
            Some(msg) => Err(CliError::Numerical(msg)),
            None => Ok(()),
        }
    });
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("lieclosed: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}
