use std::path::PathBuf;

use clap::{Args, ValueEnum};
use serde::Serialize;
use spectre_core::bounds::n1_star;
use spectre_core::generators::{named, GeneratorSpec};
use spectre_core::graph::{girth, to_graph6};
use spectre_core::theorems::{
    check_theorem, run_trials, CheckOptions, CheckParams, SearchConfig, SearchFamily, TheoremId,
    Verdict, NEAR_BOUNDARY_DEFAULT,
};
use spectre_core::Graph;

use crate::{emit, CliError, CliResult, ExactMode, EXIT_FAILURE, EXIT_OK};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub(crate) enum Family {
    RandomRegular,
    RandomMinDegree,
    /// The four bundled cubic cages.
    Cages,
    Complete,
    Cycle,
}

#[derive(Debug, Args)]
pub(crate) struct VerifyArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// Order range `LO..HI` (inclusive) or a single order.
    #[arg(long, default_value = "30..60")]
    n: String,
    /// Degree for `random_regular`.
    #[arg(long)]
    d: Option<usize>,
    /// Minimum degree for `random_min_degree`.
    #[arg(long)]
    delta: Option<usize>,
    #[arg(long, default_value_t = 2)]
    k: usize,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    a: f64,
    /// Coefficient of A for the general (a, b) conditions.
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    b: f64,
    /// MAIN1_I, MAIN1_II, MAIN2, COR2_I..III, CO3_2_I/II, CO3_3_I..III,
    /// CO3_5 or TAU_AB_I/II (case-insensitive).
    #[arg(long)]
    theorem: TheoremId,
    /// Number of random instances (random families only).
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value = "auto", num_args = 0..=1, default_missing_value = "always")]
    exact: ExactMode,
    /// CSV destination; stdout by default.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write per-instance JSON detail here.
    #[arg(long)]
    json: Option<PathBuf>,
}

pub(crate) const CSV_HEADER: [&str; 15] = [
    "spec",
    "theorem",
    "n",
    "m",
    "min_degree",
    "girth",
    "n1_star",
    "eigenvalue",
    "threshold",
    "margin",
    "applicable",
    "hypothesis",
    "kappa_prime",
    "tau",
    "sound",
];

/// `LO..HI`, `LO..=HI` (both inclusive) or `N`.
pub(crate) fn parse_range(text: &str) -> CliResult<(usize, usize)> {
    let bad = || CliError::input(format!("invalid order range `{text}`"));
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    let (lo, hi) = match text.split_once("..") {
        Some((lo, hi)) => (num(lo)?, num(hi.strip_prefix('=').unwrap_or(hi))?),
        None => {
            let n = num(text)?;
            (n, n)
        }
    };
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

/// Shortest round-trip decimal, as in the JSON output.
pub(crate) fn fmt_float(x: f64) -> String {
    serde_json::to_string(&x).expect("finite floats serialize")
}

fn opt<T: ToString>(x: Option<T>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

struct Row {
    spec: String,
    graph: Graph,
    verdict: Verdict,
}

impl Row {
    fn record(&self) -> Vec<String> {
        let g = &self.graph;
        let v = &self.verdict;
        let gi = girth(g);
        let n1 = gi
            .finite()
            .and_then(|gg| n1_star(g.min_degree() as u64, gg as u64).ok());
        vec![
            self.spec.clone(),
            v.theorem.to_string(),
            g.n().to_string(),
            g.m().to_string(),
            g.min_degree().to_string(),
            gi.to_string(),
            opt(n1),
            v.eigenvalue.map(fmt_float).unwrap_or_default(),
            v.threshold.map(fmt_float).unwrap_or_default(),
            v.margin.map(fmt_float).unwrap_or_default(),
            v.applicable.to_string(),
            v.hypothesis_holds.to_string(),
            opt(v.exact_values.kappa_prime),
            opt(v.exact_values.tau),
            v.sound.to_string(),
        ]
    }
}

#[derive(Serialize)]
struct Detail<'a> {
    schema: &'static str,
    theorem: TheoremId,
    rows: Vec<DetailRow<'a>>,
}

#[derive(Serialize)]
struct DetailRow<'a> {
    spec: &'a str,
    graph6: String,
    verdict: &'a Verdict,
}

fn deterministic_rows(
    specs: Vec<GeneratorSpec>,
    theorem: TheoremId,
    params: CheckParams,
    opts: CheckOptions,
) -> CliResult<Vec<Row>> {
    specs
        .into_iter()
        .map(|spec| {
            let graph = spec.generate()?;
            let verdict = check_theorem(theorem, &graph, params, opts)?;
            Ok(Row { spec: spec.to_string(), graph, verdict })
        })
        .collect()
}

pub(crate) fn run(args: VerifyArgs) -> CliResult<i32> {
    let params = CheckParams { k: args.k, a: args.a, b: args.b };
    let opts = CheckOptions { verification: args.exact.into() };
    if !args.theorem.has_verdict() {
        return Err(CliError::input(format!(
            "{} is a lemma; run `spectre oracle-test --suite` for lemma checks",
            args.theorem
        )));
    }
    let rows = match args.family {
        Family::Cages => {
            let specs = vec![
                GeneratorSpec::Petersen,
                GeneratorSpec::Heawood,
                GeneratorSpec::McGee,
                GeneratorSpec::TutteCoxeter,
            ];
            debug_assert_eq!(specs.len(), named::cages().len());
            deterministic_rows(specs, args.theorem, params, opts)?
        }
        Family::Complete | Family::Cycle => {
            let (lo, hi) = parse_range(&args.n)?;
            let specs = (lo..=hi)
                .map(|n| match args.family {
                    Family::Complete => GeneratorSpec::Complete { n },
                    _ => GeneratorSpec::Cycle { n },
                })
                .collect();
            deterministic_rows(specs, args.theorem, params, opts)?
        }
        Family::RandomRegular | Family::RandomMinDegree => {
            let (lo, hi) = parse_range(&args.n)?;
            let family = match args.family {
                Family::RandomRegular => SearchFamily::RandomRegular {
                    d: args.d.ok_or_else(|| CliError::input("random_regular needs --d"))?,
                },
                _ => SearchFamily::RandomMinDegree {
                    delta: args
                        .delta
                        .ok_or_else(|| CliError::input("random_min_degree needs --delta"))?,
                },
            };
            let config = SearchConfig {
                params,
                trials: args.trials,
                master_seed: args.seed,
                near_boundary: NEAR_BOUNDARY_DEFAULT,
                verification: opts.verification,
                ..SearchConfig::new(family, lo, hi, args.theorem)
            };
            run_trials(&config)?
                .into_iter()
                .map(|r| Row { spec: r.spec.to_string(), graph: r.graph, verdict: r.verdict })
                .collect()
        }
    };

    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record(CSV_HEADER)
        .map_err(|e| CliError::input(e.to_string()))?;
    for row in &rows {
        writer
            .write_record(row.record())
            .map_err(|e| CliError::input(e.to_string()))?;
    }
    let bytes = writer.into_inner().map_err(|e| CliError::input(e.to_string()))?;
    emit(args.out.as_ref(), &String::from_utf8(bytes).expect("CSV is UTF-8"))?;

    if let Some(path) = &args.json {
        let detail = Detail {
            schema: spectre_core::report::SCHEMA,
            theorem: args.theorem,
            rows: rows
                .iter()
                .map(|r| DetailRow {
                    spec: &r.spec,
                    graph6: to_graph6(&r.graph),
                    verdict: &r.verdict,
                })
                .collect(),
        };
        let mut text =
            serde_json::to_string_pretty(&detail).map_err(|e| CliError::input(e.to_string()))?;
        text.push('\n');
        emit(Some(path), &text)?;
    }

    let unsound: Vec<&Row> = rows.iter().filter(|r| !r.verdict.sound).collect();
    for r in &unsound {
        eprintln!(
            "spectre: UNSOUND {} on {} (graph6 {})",
            r.verdict.theorem,
            r.spec,
            to_graph6(&r.graph)
        );
    }
    Ok(if unsound.is_empty() { EXIT_OK } else { EXIT_FAILURE })
}
