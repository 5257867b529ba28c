use std::path::PathBuf;

use clap::{Args, ValueEnum};
use spectre_core::report::{analyze, AnalyzeOptions, Provenance, SpectrumDetail};

use crate::input::{load, InputFormat};
use crate::{emit, CliError, CliResult, ExactMode, EXIT_FAILURE, EXIT_OK};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub(crate) enum SpectrumArg {
    None,
    Summary,
    Full,
}

#[derive(Debug, Args)]
pub(crate) struct AnalyzeArgs {
    /// Edge-list or graph6 file, or a generator spec such as
    /// `petersen` or `random_regular:n=50,d=6,seed=42`.
    input: String,
    /// Connectivity target; repeat for several.
    #[arg(long = "k", default_values_t = [2])]
    ks: Vec<usize>,
    /// Shift `a` of `aD + A`; repeat for several.
    #[arg(long = "a", default_values_t = [0.0], allow_negative_numbers = true)]
    shifts: Vec<f64>,
    /// Exact κ′ and τ: `auto` computes τ only for n <= 200.
    #[arg(long, value_enum, default_value = "auto", num_args = 0..=1, default_missing_value = "always")]
    exact: ExactMode,
    #[arg(long, value_enum, default_value = "summary")]
    spectrum: SpectrumArg,
    #[arg(long, value_enum, default_value = "auto")]
    format: InputFormat,
    /// Single-line JSON.
    #[arg(long)]
    compact: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

pub(crate) fn run(args: AnalyzeArgs) -> CliResult<i32> {
    let loaded = load(&args.input, args.format)?;
    let opts = AnalyzeOptions {
        ks: args.ks,
        shifts: args.shifts,
        exact: args.exact.into(),
        spectrum: match args.spectrum {
            SpectrumArg::None => SpectrumDetail::None,
            SpectrumArg::Summary => SpectrumDetail::Summary,
            SpectrumArg::Full => SpectrumDetail::Full,
        },
    };
    let report = analyze(&loaded.graph, &opts, Provenance::new(args.input, loaded.seed))?;
    let mut text = if args.compact {
        serde_json::to_string(&report)
    } else {
        serde_json::to_string_pretty(&report)
    }
    .map_err(|e| CliError::input(e.to_string()))?;
    text.push('\n');
    emit(args.out.as_ref(), &text)?;
    if report.verdicts.iter().any(|v| !v.sound) {
        eprintln!("spectre: a verdict is unsound (hypothesis held but the conclusion failed)");
        return Ok(EXIT_FAILURE);
    }
    Ok(EXIT_OK)
}
