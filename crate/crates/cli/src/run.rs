use std::time::Instant;

use stabcode::channel::{build_table, run_with_table, PauliChannel, SimOptions};
use stabcode::codefile::{parse_code_file, parse_code_text};
use stabcode::degeneracy::{classify_with, standard_form_shortcut, ClassifyOptions, ScanMode};
use stabcode::distance::{column_bounds, min_distance, Distance};
use stabcode::enumerate::count_at_weight;
use stabcode::{standard_form, validate, Error, PauliOperator, StabilizerCode};

use crate::args::{ClassifyArgs, Cli, Command, DistanceArgs, SimulateArgs, SyndromeArgs};
use crate::report::{
    matrix_rows, symplectic_rows, CodeSummary, DistancePayload, MatricesPayload, Payload, Report,
    SimulatePayload, StandardFormPayload, SyndromePayload, ValidatePayload,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

const WORKERS_ENV: &str = "STABCODE_WORKERS";

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Library(Error),
    /// The code failed validation; the report lists the violations.
    Invalid(Box<Report>),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Library(Error::BudgetExhausted { .. }) => EXIT_BUDGET,
            _ => EXIT_INVALID,
        }
    }

    /// Stable snake_case name for JSON error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Library(Error::BudgetExhausted { .. }) => "budget_exhausted",
            CliError::Library(
                Error::CodeFile { .. } | Error::PauliParse { .. } | Error::EmptyPauli,
            ) => "parse",
            CliError::Library(Error::Io(_)) => "io",
            CliError::Library(Error::Validation(_)) | CliError::Invalid(_) => "validation",
            CliError::Library(_) => "invalid_argument",
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => f.write_str(m),
            CliError::Library(e) => write!(f, "{e}"),
            CliError::Invalid(r) => match &r.result {
                Payload::Validate(v) => {
                    write!(f, "invalid check matrix: {}", v.violations.join("; "))
                }
                _ => f.write_str("invalid check matrix"),
            },
        }
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Library(e)
    }
}

fn summary(code: &StabilizerCode) -> CodeSummary {
    CodeSummary {
        n: code.n(),
        k: code.k(),
        label: code.label().map(str::to_owned),
        generators: code.num_generators(),
    }
}

fn resolve_workers(flag: Option<usize>) -> usize {
    flag.or_else(|| std::env::var(WORKERS_ENV).ok()?.parse().ok())
        .or_else(|| std::thread::available_parallelism().ok().map(|n| n.get()))
        .unwrap_or(1)
}

fn resolve_t(flag: Option<usize>, code: &StabilizerCode) -> Option<usize> {
    flag.or_else(|| code.default_t().filter(|&t| t >= 1))
}

fn report(cli: &Cli, code: CodeSummary, result: Payload) -> Report {
    Report {
        tool: "stabcode".into(),
        version: env!("CARGO_PKG_VERSION").into(),
        command: cli.command.clone(),
        code,
        result,
        elapsed_ms: None,
    }
}

/// Runs the parsed command. Messages meant for stderr are appended to
/// `warnings`, also when the command fails.
pub fn execute(cli: &Cli, warnings: &mut Vec<String>) -> Result<Report, CliError> {
    let start = Instant::now();
    let mut out = match &cli.command {
        Command::Validate(a) => run_validate(cli, &a.code)?,
        cmd => {
            let code = parse_code_file(cmd.code_path())?;
            let payload = match cmd {
                Command::Syndrome(a) => syndrome(&code, a)?,
                Command::Classify(a) => classify(&code, a)?,
                Command::Distance(a) => distance(&code, a, warnings)?,
                Command::StandardForm(_) => standard(&code),
                Command::Simulate(a) => simulate(&code, a, resolve_workers(cli.workers))?,
                Command::Matrices(_) => matrices(&code),
                Command::Validate(_) => unreachable!(),
            };
            report(cli, summary(&code), payload)
        }
    };
    if cli.timing {
        out.elapsed_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    }
    Ok(out)
}

fn run_validate(cli: &Cli, path: &std::path::Path) -> Result<Report, CliError> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let file = parse_code_text(&text)?;
    let rows = file.generators.len();
    let code_summary = CodeSummary {
        n: file.n,
        k: file.n.saturating_sub(rows),
        label: file.label.clone(),
        generators: rows,
    };
    match validate(&file.generators) {
        Ok(_) => {
            let code = file.into_code()?;
            let payload = ValidatePayload {
                valid: true,
                violations: Vec::new(),
                css: Some(code.is_css().is_some()),
            };
            Ok(report(cli, summary(&code), Payload::Validate(payload)))
        }
        Err(Error::Validation(v)) => {
            let payload = ValidatePayload {
                valid: false,
                violations: v.violations.iter().map(ToString::to_string).collect(),
                css: None,
            };
            Err(CliError::Invalid(Box::new(report(
                cli,
                code_summary,
                Payload::Validate(payload),
            ))))
        }
        Err(e) => Err(e.into()),
    }
}

fn syndrome(code: &StabilizerCode, a: &SyndromeArgs) -> Result<Payload, CliError> {
    let e: PauliOperator = a.error.parse()?;
    let s = code.syndrome(&e)?;
    Ok(Payload::Syndrome(SyndromePayload {
        weight: e.weight(),
        syndrome: s.bits().to_bit_string(),
        violated: s.bits().iter_ones().map(|j| j + 1).collect(),
        error: e,
    }))
}

fn require_t(flag: Option<usize>, code: &StabilizerCode) -> Result<usize, CliError> {
    resolve_t(flag, code).ok_or_else(|| {
        CliError::Usage("--t is required: the code file declares no distance of 3 or more".into())
    })
}

fn classify(code: &StabilizerCode, a: &ClassifyArgs) -> Result<Payload, CliError> {
    let t = require_t(a.t, code)?;
    let opts = ClassifyOptions {
        mode: if a.exhaustive {
            ScanMode::Exhaustive
        } else {
            ScanMode::FirstCollision
        },
        run_criteria: !a.no_criteria,
        budget: a.budget,
    };
    Ok(Payload::Classify(classify_with(code, t, &opts)?))
}

/// Largest weight `w <= limit` whose cumulative error count fits the budget.
fn affordable_limit(n: usize, limit: usize, budget: u64) -> usize {
    let mut total = 0u64;
    for w in 1..=limit {
        total = total.saturating_add(count_at_weight(n, w));
        if total > budget {
            return w - 1;
        }
    }
    limit
}

fn distance(
    code: &StabilizerCode,
    a: &DistanceArgs,
    warnings: &mut Vec<String>,
) -> Result<Payload, CliError> {
    let n = code.n();
    let requested = a.limit.unwrap_or(n);
    if requested > n {
        return Err(Error::OutOfRange {
            name: "limit",
            value: requested,
            min: 0,
            max: n,
        }
        .into());
    }
    let limit = if code.k() == 0 {
        requested
    } else {
        affordable_limit(n, requested, a.budget)
    };
    if limit < requested {
        warnings.push(format!(
            "weight {} would exceed the budget of {} errors; searching up to weight {limit}",
            limit + 1,
            a.budget
        ));
    }
    let r = min_distance(code, limit)?;
    if r.d == Distance::ExceedsSearchLimit && limit < requested {
        return Err(Error::BudgetExhausted { budget: a.budget }.into());
    }
    let bounds = match resolve_t(a.t, code) {
        Some(t) => Some(column_bounds(code, t, a.budget)?),
        None => None,
    };
    Ok(Payload::Distance(DistancePayload {
        d: r.d,
        witness: r.witness,
        search_limit: r.search_limit,
        bounds,
    }))
}

fn standard(code: &StabilizerCode) -> Payload {
    let sf = standard_form(code);
    let shortcut = resolve_t(None, code).map(|t| standard_form_shortcut(&sf, t));
    Payload::StandardForm(StandardFormPayload {
        r: sf.r,
        qubit_order: sf.qubit_permutation.iter().map(|q| q + 1).collect(),
        matrix: symplectic_rows(&sf.matrix),
        row_transform: matrix_rows(&sf.row_transform),
        shortcut,
    })
}

fn channel(a: &SimulateArgs) -> Result<PauliChannel, CliError> {
    let ch = match (a.depolarizing, a.px, a.py, a.pz) {
        (Some(p), None, None, None) => PauliChannel::depolarizing(p)?,
        (Some(_), ..) => {
            return Err(CliError::Usage(
                "--depolarizing cannot be combined with --px/--py/--pz".into(),
            ))
        }
        (None, None, None, None) => {
            return Err(CliError::Usage(
                "a channel is required: --depolarizing <p> or --px/--py/--pz".into(),
            ))
        }
        (None, x, y, z) => PauliChannel::new(x.unwrap_or(0.0), y.unwrap_or(0.0), z.unwrap_or(0.0))?,
    };
    Ok(ch)
}

fn simulate(code: &StabilizerCode, a: &SimulateArgs, workers: usize) -> Result<Payload, CliError> {
    let ch = channel(a)?;
    let table = build_table(code, None);
    let opts = SimOptions {
        workers,
        strict: a.strict,
    };
    let r = run_with_table(code, &table, &ch, a.trials, a.seed, &opts)?;
    Ok(Payload::Simulate(SimulatePayload {
        channel: ch,
        trials: r.trials,
        seed: r.seed,
        logical_failures: r.logical_failures,
        rate: r.rate,
        ci95: r.ci95,
        exact_mismatches: r.exact_mismatches,
        table_size: table.len(),
        table_coverage: table.coverage(),
        table_max_weight: table.max_weight(),
    }))
}

fn matrices(code: &StabilizerCode) -> Payload {
    let h = code.check_matrix();
    let m = code.bsm_psm();
    Payload::Matrices(MatricesPayload {
        h_x: matrix_rows(&h.h_x()),
        h_z: matrix_rows(&h.h_z()),
        bsm: matrix_rows(&m.bsm),
        psm: matrix_rows(&m.psm),
    })
}
