//! Front end for the `albert` binary: input parsing, command dispatch and
//! report rendering.

pub mod config;
pub mod text;
pub mod verify;

use std::fmt::Write as _;
use std::io::{Read, Write};

use albert_core::{
    classify_psquare, decompose, diagonalize, dirac_solve, modified_char_check, solve_char_poly,
    AlbertError, CharPoly, CubicRoots, Diagonalization64, DiracSolution, Hermitian2F64, Jordan64,
    Multiplicity, OracleReport64, PSquareClass, Spectral64, Tolerances,
};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use config::{Cli, Command, Format, InputSource, RunConfig};
pub use verify::{verify, CheckKind, CheckResult, VerifyReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad input or arguments.
    #[error("{0}")]
    Invalid(String),
    /// Inconsistent result or residual over tolerance.
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) => EXIT_INVALID,
            CliError::Internal(_) => EXIT_INTERNAL,
        }
    }
}

impl From<AlbertError> for CliError {
    fn from(e: AlbertError) -> Self {
        match e {
            AlbertError::Inconsistent(_) | AlbertError::NoConvergence { .. } => {
                CliError::Internal(e.to_string())
            }
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CharPolyReport {
    pub trace: f64,
    pub sigma: f64,
    pub det: f64,
    pub roots: CubicRoots<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub class: PSquareClass,
    pub invariants: CharPoly<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DiracReport {
    pub solution: DiracSolution<f64>,
    /// `‖P - sign θθ†‖ / ‖P‖`.
    pub residual: f64,
}

/// Command output. Serializes as the bare module report.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
#[allow(clippy::large_enum_variant)]
pub enum Report {
    CharPoly(CharPolyReport),
    Decompose(Spectral64),
    Diagonalize(Diagonalization64),
    Classify(ClassifyReport),
    Oracle(OracleReport64),
    Dirac(DiracReport),
    Verify(VerifyReport),
}

impl Report {
    /// Whether the report is a PASS; a failing report exits with status 1.
    pub fn pass(&self) -> bool {
        match self {
            Report::Oracle(r) => r.pass,
            Report::Verify(r) => r.pass,
            _ => true,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize") + "\n"
    }

    pub fn to_text(&self) -> String {
        match self {
            Report::CharPoly(r) => charpoly_text(r),
            Report::Decompose(d) => decompose_text(d),
            Report::Diagonalize(d) => diagonalize_text(d),
            Report::Classify(c) => format!("class: {}\n", c.class.0),
            Report::Oracle(o) => oracle_text(o),
            Report::Dirac(d) => dirac_text(d),
            Report::Verify(v) => verify_text(v),
        }
    }
}

/// Parses JSON input; errors carry serde's line and column.
pub fn parse<T: DeserializeOwned>(json: &str) -> Result<T, CliError> {
    serde_json::from_str(json).map_err(|e| CliError::Invalid(format!("malformed input: {e}")))
}

fn read_input(source: &InputSource) -> Result<String, CliError> {
    match source {
        InputSource::None => Err(CliError::Invalid(
            "no input: pass --input PATH or --inline JSON".to_owned(),
        )),
        InputSource::Inline(s) => Ok(s.clone()),
        InputSource::Path(p) if p.as_os_str() == "-" => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| CliError::Invalid(format!("reading standard input: {e}")))?;
            Ok(s)
        }
        InputSource::Path(p) => std::fs::read_to_string(p)
            .map_err(|e| CliError::Invalid(format!("reading {}: {e}", p.display()))),
    }
}

/// Runs one command and returns its report.
pub fn execute(config: &RunConfig) -> Result<Report, CliError> {
    let tol = &config.tolerances;
    if config.command == Command::Verify {
        return Ok(Report::Verify(verify(config.seed, config.count, tol)));
    }
    let input = read_input(&config.input)?;
    if config.command == Command::Dirac {
        let p: Hermitian2F64 = parse(&input)?;
        return dirac(&p, tol).map(Report::Dirac);
    }
    let a: Jordan64 = parse(&input)?;
    check_finite(&a)?;
    let report = match config.command {
        Command::Charpoly => {
            let cp = a.char_poly();
            Report::CharPoly(CharPolyReport {
                trace: cp.trace,
                sigma: cp.sigma,
                det: cp.det,
                roots: solve_char_poly(&cp, tol)?,
            })
        }
        Command::Decompose => Report::Decompose(decompose(&a, tol)?),
        Command::Diagonalize => Report::Diagonalize(diagonalize(&a, tol)?),
        Command::Classify => Report::Classify(ClassifyReport {
            class: classify_psquare(&a),
            invariants: a.char_poly(),
        }),
        Command::Oracle => Report::Oracle(modified_char_check(&a)?),
        Command::Dirac | Command::Verify => unreachable!("handled above"),
    };
    Ok(report)
}

fn check_finite(a: &Jordan64) -> Result<(), CliError> {
    let finite = a.diagonal().iter().all(|x| x.is_finite())
        && a.off_diagonal()
            .iter()
            .all(|o| o.coeffs().iter().all(|x| x.is_finite()));
    if finite {
        Ok(())
    } else {
        Err(CliError::Invalid(
            "matrix entries must be finite".to_owned(),
        ))
    }
}

fn dirac(p: &Hermitian2F64, tol: &Tolerances) -> Result<DiracReport, CliError> {
    let solution = dirac_solve(p, tol)?;
    let back = solution.theta.outer().scale(f64::from(solution.sign));
    let norm = p.norm();
    let residual = if norm == 0.0 {
        0.0
    } else {
        p.sub(&back).norm() / norm
    };
    if residual > tol.rtol.sqrt() {
        return Err(CliError::Internal(format!(
            "reconstructed momentum differs by {residual:e}"
        )));
    }
    Ok(DiracReport { solution, residual })
}

/// Runs `config`, writing the report to `out` and diagnostics to `err`.
/// Returns the process exit status.
pub fn run(config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match execute(config) {
        Ok(report) => {
            let body = match config.format {
                Format::Json => report.to_json(),
                Format::Text => report.to_text(),
            };
            if out.write_all(body.as_bytes()).is_err() {
                return EXIT_INTERNAL;
            }
            if report.pass() {
                EXIT_OK
            } else {
                let _ = writeln!(err, "error: report did not pass");
                EXIT_INTERNAL
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn multiplicity_name(m: &Multiplicity<f64>) -> String {
    match m {
        Multiplicity::Distinct => "distinct".to_owned(),
        Multiplicity::Double(l) => format!("double at {}", text::real(*l)),
        Multiplicity::Triple(l) => format!("triple at {}", text::real(*l)),
    }
}

fn charpoly_text(r: &CharPolyReport) -> String {
    format!(
        "trace: {}\nsigma: {}\ndet: {}\nroots: {}\nmultiplicity: {}\n",
        text::real(r.trace),
        text::real(r.sigma),
        text::real(r.det),
        text::reals(&r.roots.roots),
        multiplicity_name(&r.roots.multiplicity),
    )
}

fn decompose_text(d: &Spectral64) -> String {
    let mut s = format!("eigenvalues: {}\n", text::reals(&d.eigenvalues));
    for (i, (l, p)) in d.eigenvalues.iter().zip(&d.idempotents).enumerate() {
        let _ = write!(
            s,
            "\nP{} (lambda = {}):\n{}",
            i + 1,
            text::real(*l),
            text::grid(p)
        );
    }
    let r = &d.residuals;
    let _ = write!(
        s,
        "\nresiduals: eigen {}, orthogonality {}, reconstruction {}\n",
        text::sci(r.max_eigen()),
        text::sci(r.max_orthogonality()),
        text::sci(r.reconstruction),
    );
    s
}

fn diagonalize_text(d: &Diagonalization64) -> String {
    let mut s = format!("diagonal: {}\n", text::reals(&d.diagonal));
    for (i, m) in d.steps.iter().enumerate() {
        let _ = write!(s, "\nM{}:\n{}", i + 1, text::grid(m));
    }
    let _ = write!(s, "\nresidual: {}\n", text::sci(d.residual));
    s
}

fn oracle_text(o: &OracleReport64) -> String {
    let mut s = String::from("lambda        mult  r\n");
    for c in &o.clusters {
        let _ = writeln!(
            s,
            "{:<12}  {:<4}  {}",
            text::real(c.lambda),
            c.mult,
            text::sci(c.r)
        );
    }
    s.push_str(if o.pass { "PASS\n" } else { "FAIL\n" });
    s
}

fn dirac_text(d: &DiracReport) -> String {
    let [t1, t2] = d.solution.theta.0;
    format!(
        "sign: {}\ntheta: [{}, {}]\nresidual: {}\n",
        d.solution.sign,
        text::octonion(&t1),
        text::octonion(&t2),
        text::sci(d.residual),
    )
}

fn verify_text(v: &VerifyReport) -> String {
    let width = v.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
    let mut s = format!("seed {} count {}\n", v.seed, v.count);
    for c in &v.checks {
        let value = match c.kind {
            CheckKind::Max => text::sci(c.value),
            CheckKind::Count => format!("{}", c.value),
        };
        let _ = writeln!(
            s,
            "{:<width$}  {:>10}  <= {:<9}  {}",
            c.name,
            value,
            text::sci(c.threshold),
            if c.pass { "ok" } else { "FAIL" },
        );
    }
    s.push_str(if v.pass { "PASS\n" } else { "FAIL\n" });
    s
}
