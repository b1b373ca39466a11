//! `quadsum`: experiments on large quadratic character sums.

mod args;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use quadsum_core::char_sums::{search_max, MaxMode, SearchWindow};
use quadsum_core::discriminant_avg::{average_report, fit_reports};
use quadsum_core::polya::{choose_z, polya_truncated, reconstruct_bound, PolyaParams};
use quadsum_core::report::{write_report, AverageRow, Format, PredictionRow, ReportRow};
use quadsum_core::resonance::{
    build_resonator, default_support, predicted_lower_bound, ratio_bound, rmrn_lhs, DiscriminantWindow,
    ResonatorOverrides, ZRule,
};
use quadsum_core::{Error as CoreError, FundamentalDiscriminant};

#[derive(Parser, Debug)]
#[command(name = "quadsum", version, about = "Experiments on large quadratic character sums over fundamental discriminants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Largest prefix sum Σ_{n ≤ |d|/x} χ_d(n) over fundamental discriminants X < |d| ≤ 2X.
    SearchMax(SearchArgs),
    /// Truncated Pólya Fourier expansion of character prefix sums against the exact sums.
    VerifyPolya(PolyaArgs),
    /// Discriminant average Σ_{|d| ≤ X} χ_d(n) against its square-n main term, with the fitted error exponent.
    VerifyLemma22(AverageArgs),
    /// Resonator moments M₁, M₂ over X < |d| ≤ 2X and the bound max C_d(z)² ≥ M₂/M₁.
    ResonanceBound(ResonanceArgs),
    /// Normalised quadruple resonator sum over m₁, n₁ ≤ W and its exp(2√(log Y/log log Y)) growth rate.
    Rmrn(RmrnArgs),
    /// Closed-form large-value prediction √(X/x)·exp((√2/2)√(log X/log log X)).
    Predict(PredictArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Args, Debug)]
struct OutputArgs {
    /// Report format [default: csv, json for predict]
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    /// Report file; standard output when absent
    #[arg(long)]
    output: Option<PathBuf>,
    /// Worker threads; hardware parallelism when absent
    #[arg(long, value_parser = args::positive_count)]
    threads: Option<usize>,
}

#[derive(Args, Debug)]
struct SearchArgs {
    /// Scale X of the window X < |d| ≤ 2X
    #[arg(long = "X", value_parser = args::unsigned)]
    scale: u64,
    /// Cut x; the prefix has length ⌊|d|/x⌋
    #[arg(long = "x", value_parser = args::finite)]
    cut: f64,
    /// Maximise |Σ χ_d(n)| instead of the signed sum
    #[arg(long)]
    abs: bool,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args, Debug)]
struct PolyaArgs {
    /// A single fundamental discriminant
    #[arg(long = "d", value_parser = args::signed, allow_hyphen_values = true, conflicts_with = "scale", required_unless_present = "scale")]
    discriminant: Option<i64>,
    /// Check every discriminant with X < |d| ≤ 2X
    #[arg(long = "X", value_parser = args::unsigned)]
    scale: Option<u64>,
    /// Cut x; the prefix ends at α|d| with α = 1/x
    #[arg(long = "x", value_parser = args::finite, default_value = "100")]
    cut: f64,
    /// Prefix fraction α in (0, 1), overriding 1/x
    #[arg(long, value_parser = args::finite, conflicts_with = "reconstruct")]
    alpha: Option<f64>,
    /// Truncation height z, overriding √(|d|x)·log|d|
    #[arg(long, value_parser = args::finite, conflicts_with = "reconstruct")]
    z: Option<f64>,
    /// Rebuild Σ_{n ≤ |d|/x} χ_d(n) from the cosine part of the expansion (d < 0 only)
    #[arg(long)]
    reconstruct: bool,
    /// Check only this many discriminants drawn from the window
    #[arg(long, value_parser = args::positive_count, requires = "scale")]
    sample: Option<usize>,
    /// Seed for --sample
    #[arg(long, value_parser = args::unsigned, default_value = "0")]
    seed: u64,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args, Debug)]
struct AverageArgs {
    /// The fixed integer n ≥ 1
    #[arg(long, value_parser = args::unsigned)]
    n: u64,
    /// Ascending comma-separated scales X, at least three
    #[arg(long = "X-list", value_parser = args::unsigned, value_delimiter = ',', required = true)]
    scales: Vec<u64>,
    /// ε in the error factors f(n₀), g(n₁)
    #[arg(long, value_parser = args::finite, default_value = "0.1")]
    epsilon: f64,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args, Debug)]
struct ResonatorArgs {
    /// Resonator scale λ, overriding √(log y · log log y)
    #[arg(long, value_parser = args::finite)]
    lambda: Option<f64>,
    /// Lower end of the prime window
    #[arg(long, value_parser = args::finite, requires = "window_hi")]
    window_lo: Option<f64>,
    /// Upper end of the prime window
    #[arg(long, value_parser = args::finite, requires = "window_lo")]
    window_hi: Option<f64>,
    /// δ in the default support length
    #[arg(long, value_parser = args::finite, default_value = "0.1")]
    delta: f64,
}

impl ResonatorArgs {
    fn overrides(&self) -> ResonatorOverrides {
        ResonatorOverrides {
            lambda: self.lambda,
            window: self.window_lo.zip(self.window_hi),
        }
    }
}

#[derive(Args, Debug)]
struct ResonanceArgs {
    /// Scale X of the window X < |d| ≤ 2X
    #[arg(long = "X", value_parser = args::unsigned)]
    scale: u64,
    /// Cut x in C_d(z)
    #[arg(long = "x", value_parser = args::finite)]
    cut: f64,
    /// Resonator support length y, overriding X^{1/2−δ}/(2 log z)²
    #[arg(long, value_parser = args::finite)]
    y: Option<f64>,
    /// Use each discriminant's own z instead of the window-wide one
    #[arg(long)]
    per_d_z: bool,
    #[command(flatten)]
    resonator: ResonatorArgs,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args, Debug)]
struct RmrnArgs {
    /// Outer cap Y
    #[arg(long = "Y", value_parser = args::finite)]
    y_cap: f64,
    /// Cap W on m₁, n₁
    #[arg(long = "W", value_parser = args::finite)]
    w_cap: f64,
    /// Resonator support length y [default: Y]
    #[arg(long, value_parser = args::finite)]
    y: Option<f64>,
    #[command(flatten)]
    resonator: ResonatorArgs,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args, Debug)]
struct PredictArgs {
    /// Scale X
    #[arg(long = "X", value_parser = args::finite)]
    scale: f64,
    /// Cut x
    #[arg(long = "x", value_parser = args::finite)]
    cut: f64,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Core(CoreError),
    Io(io::Error),
    Internal(String),
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Core(e) if e.is_data_error() => 3,
            Failure::Core(_) => 2,
            Failure::Io(_) | Failure::Internal(_) => 4,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            Failure::Usage(_) => "usage",
            Failure::Core(CoreError::NotFundamental(_)) => "not_fundamental",
            Failure::Core(CoreError::InvalidParameter { .. }) => "invalid_parameter",
            Failure::Core(CoreError::EmptyWindow { .. }) => "empty_window",
            Failure::Core(CoreError::DegenerateFit { .. }) => "degenerate_fit",
            Failure::Core(CoreError::DegenerateResonator) => "degenerate_resonator",
            Failure::Io(_) => "io",
            Failure::Internal(_) => "internal",
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Usage(m) | Failure::Internal(m) => m.clone(),
            Failure::Core(e) => e.to_string(),
            Failure::Io(e) => e.to_string(),
        }
    }

    fn report(&self) -> ExitCode {
        let code = self.exit_code();
        let body = json!({ "error": self.kind(), "message": self.message(), "exit_code": code });
        eprintln!("{body}");
        ExitCode::from(code)
    }
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        Failure::Core(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = Result<(), Failure>;

fn emit<R: ReportRow>(rows: &[R], out: &OutputArgs, default: Format) -> Outcome {
    let format = match out.format {
        Some(FormatArg::Csv) => Format::Csv,
        Some(FormatArg::Json) => Format::Json,
        None => default,
    };
    match &out.output {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            write_report(rows, format, &mut w)?;
            w.flush()?;
        }
        None => {
            let mut w = io::stdout().lock();
            write_report(rows, format, &mut w)?;
            w.flush()?;
        }
    }
    Ok(())
}

fn search(a: &SearchArgs) -> Outcome {
    let mode = if a.abs { MaxMode::Absolute } else { MaxMode::Signed };
    let result = search_max(&SearchWindow::new(a.scale, a.cut)?, mode)?;
    emit(&[result], &a.out, Format::Csv)
}

fn polya_targets(a: &PolyaArgs) -> Result<Vec<FundamentalDiscriminant>, Failure> {
    let Some(scale) = a.scale else {
        let d = a.discriminant.expect("clap requires --d or --X");
        return Ok(vec![FundamentalDiscriminant::new(d)?]);
    };
    let window = DiscriminantWindow::dyadic(scale)?;
    let mut ds = window.discriminants()?;
    if a.reconstruct {
        ds.retain(|d| d.get() < 0);
    }
    if let Some(n) = a.sample {
        if n < ds.len() {
            let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
            let mut picked = rand::seq::index::sample(&mut rng, ds.len(), n).into_vec();
            picked.sort_unstable();
            ds = picked.into_iter().map(|i| ds[i]).collect();
        }
    }
    Ok(ds)
}

fn polya(a: &PolyaArgs) -> Outcome {
    let ds = polya_targets(a)?;
    if a.reconstruct {
        let rows = ds
            .par_iter()
            .map(|&d| reconstruct_bound(d, a.cut))
            .collect::<Result<Vec<_>, _>>()?;
        return emit(&rows, &a.out, Format::Csv);
    }
    let alpha = a.alpha.unwrap_or(1.0 / a.cut);
    let rows = ds
        .par_iter()
        .map(|&d| {
            let z = match a.z {
                Some(z) => z,
                None => choose_z(d, 1.0 / alpha)?,
            };
            PolyaParams::new(d, alpha, z).map(|p| polya_truncated(&p))
        })
        .collect::<Result<Vec<_>, _>>()?;
    emit(&rows, &a.out, Format::Csv)
}

fn average(a: &AverageArgs) -> Outcome {
    if a.scales.len() < 3 {
        return Err(Failure::Usage(format!(
            "--X-list needs at least 3 scales, got {}",
            a.scales.len()
        )));
    }
    if a.scales.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Failure::Usage("--X-list must be strictly ascending".into()));
    }
    let reports = a
        .scales
        .iter()
        .map(|&x| average_report(x, a.n, a.epsilon))
        .collect::<Result<Vec<_>, _>>()?;
    let slope = fit_reports(&reports)?;
    let rows: Vec<AverageRow> = reports.into_iter().map(|report| AverageRow { report, slope }).collect();
    emit(&rows, &a.out, Format::Csv)
}

fn resonance(a: &ResonanceArgs) -> Outcome {
    let y = match a.y {
        Some(y) => y,
        None => default_support(a.scale, a.cut, a.resonator.delta)?,
    };
    let spec = build_resonator(y, a.resonator.delta, a.resonator.overrides())?;
    let window = DiscriminantWindow::dyadic(a.scale)?;
    let rule = if a.per_d_z { ZRule::PerDiscriminant } else { ZRule::FixedAtUpper };
    let report = ratio_bound(&spec, &window, a.cut, rule)?;
    emit(&[report], &a.out, Format::Csv)
}

fn rmrn(a: &RmrnArgs) -> Outcome {
    let spec = build_resonator(a.y.unwrap_or(a.y_cap), a.resonator.delta, a.resonator.overrides())?;
    let report = rmrn_lhs(&spec, a.y_cap, a.w_cap)?;
    emit(&[report], &a.out, Format::Csv)
}

fn predict(a: &PredictArgs) -> Outcome {
    let row = PredictionRow {
        scale: a.scale,
        x: a.cut,
        bound: predicted_lower_bound(a.scale, a.cut)?,
    };
    emit(&[row], &a.out, Format::Json)
}

impl Command {
    fn output(&self) -> &OutputArgs {
        match self {
            Command::SearchMax(a) => &a.out,
            Command::VerifyPolya(a) => &a.out,
            Command::VerifyLemma22(a) => &a.out,
            Command::ResonanceBound(a) => &a.out,
            Command::Rmrn(a) => &a.out,
            Command::Predict(a) => &a.out,
        }
    }

    fn run(&self) -> Outcome {
        match self {
            Command::SearchMax(a) => search(a),
            Command::VerifyPolya(a) => polya(a),
            Command::VerifyLemma22(a) => average(a),
            Command::ResonanceBound(a) => resonance(a),
            Command::Rmrn(a) => rmrn(a),
            Command::Predict(a) => predict(a),
        }
    }
}

fn dispatch(command: &Command) -> Outcome {
    match command.output().threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Failure::Internal(e.to_string()))?
            .install(|| command.run()),
        None => command.run(),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => return Failure::Usage(e.to_string().trim_end().to_string()).report(),
    };
    match dispatch(&cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => f.report(),
    }
}
