//! Oracle-equivalence suites: each fast algorithm against an exhaustive or
//! closed-form reference on seeded random inputs.

use std::f64::consts::PI;

use clap::{Args, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use spectre_core::connectivity::{
    brute_force_edge_connectivity, check_catlin_lai_shao, edge_connectivity,
    nash_williams_oracle, tau_at_least,
};
use spectre_core::generators::{
    circulant, complete, complete_bipartite, cycle, gnp, named, random_min_degree, rng::mix64,
    trial_seed, SplitMix64,
};
use spectre_core::graph::{boundary, brute_force_girth, girth, is_connected};
use spectre_core::spectral::{
    build_matrix, check_interlacing, eigenvalues, graph_spectrum, quotient_eigenvalues,
    MatrixKind,
};
use spectre_core::theorems::check_lemma3_1;
use spectre_core::{Graph, Partition};

use crate::{emit, CliResult, EXIT_FAILURE, EXIT_OK};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Tau,
    Kappa,
    Girth,
    Eigen,
    Interlacing,
    #[value(name = "lemma3_1")]
    Lemma3_1,
    #[value(name = "edge_deletion")]
    EdgeDeletion,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Tau,
        Suite::Kappa,
        Suite::Girth,
        Suite::Eigen,
        Suite::Interlacing,
        Suite::Lemma3_1,
        Suite::EdgeDeletion,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Tau => "tau",
            Suite::Kappa => "kappa",
            Suite::Girth => "girth",
            Suite::Eigen => "eigen",
            Suite::Interlacing => "interlacing",
            Suite::Lemma3_1 => "lemma3_1",
            Suite::EdgeDeletion => "edge_deletion",
        }
    }

    pub fn default_trials(self) -> usize {
        match self {
            Suite::Tau | Suite::Kappa | Suite::Girth => 500,
            Suite::Eigen | Suite::Interlacing => 200,
            Suite::Lemma3_1 | Suite::EdgeDeletion => 300,
        }
    }

    fn salt(self) -> u64 {
        mix64(Suite::ALL.iter().position(|&s| s == self).expect("listed") as u64 + 1)
    }

    /// Runs trial `i`; `Err` carries a description of the mismatch.
    fn trial(self, rng: &mut SplitMix64) -> Result<(), String> {
        match self {
            Suite::Tau => tau_trial(rng),
            Suite::Kappa => kappa_trial(rng),
            Suite::Girth => girth_trial(rng),
            Suite::Eigen => eigen_trial(rng),
            Suite::Interlacing => interlacing_trial(rng),
            Suite::Lemma3_1 => lemma3_1_trial(rng),
            Suite::EdgeDeletion => edge_deletion_trial(rng),
        }
    }
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    /// Suites to run; all by default.
    #[arg(long = "suite", value_enum)]
    suites: Vec<Suite>,
    /// Trials per suite (each suite has its own default).
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Print the summary as JSON.
    #[arg(long)]
    json: bool,
    /// Negative control: corrupt the first trial of every suite.
    #[arg(long, hide = true)]
    inject_fault: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub suite: Suite,
    pub trials: usize,
    pub passed: usize,
    pub failed: usize,
    /// First failing trial and what went wrong.
    pub first_failure: Option<(usize, String)>,
}

/// Runs `trials` trials of `suite`; trial `i` is seeded from `(seed, suite, i)`.
pub fn run_suite(suite: Suite, trials: usize, seed: u64, inject_fault: bool) -> SuiteResult {
    let master = seed ^ suite.salt();
    let outcomes: Vec<Result<(), String>> = (0..trials)
        .into_par_iter()
        .map(|i| {
            let mut rng = SplitMix64::new(trial_seed(master, i as u64));
            let outcome = suite.trial(&mut rng);
            if inject_fault && i == 0 {
                return Err("injected fault".to_string());
            }
            outcome
        })
        .collect();
    let failed = outcomes.iter().filter(|o| o.is_err()).count();
    let first_failure = outcomes
        .iter()
        .enumerate()
        .find_map(|(i, o)| o.as_ref().err().map(|e| (i, e.clone())));
    SuiteResult {
        suite,
        trials,
        passed: trials - failed,
        failed,
        first_failure,
    }
}

pub(crate) fn run(args: OracleArgs) -> CliResult<i32> {
    let suites = if args.suites.is_empty() { Suite::ALL.to_vec() } else { args.suites };
    let results: Vec<SuiteResult> = suites
        .iter()
        .map(|&s| run_suite(s, args.trials.unwrap_or(s.default_trials()), args.seed, args.inject_fault))
        .collect();
    let text = if args.json {
        let mut t = serde_json::to_string_pretty(&results).expect("serializable");
        t.push('\n');
        t
    } else {
        let mut t = String::new();
        for r in &results {
            let status = if r.failed == 0 { "PASS" } else { "FAIL" };
            t.push_str(&format!(
                "{status} {:<16} {}/{} passed\n",
                r.suite.name(),
                r.passed,
                r.trials
            ));
            if let Some((i, why)) = &r.first_failure {
                t.push_str(&format!("     first failure at trial {i}: {why}\n"));
            }
        }
        t
    };
    emit(None, &text)?;
    Ok(if results.iter().all(|r| r.failed == 0) { EXIT_OK } else { EXIT_FAILURE })
}

/// A connected G(n, p) graph with `n` in `lo..=hi`, redrawn until connected.
pub fn random_connected(rng: &mut SplitMix64, lo: usize, hi: usize) -> Graph {
    loop {
        let n = lo + rng.index(hi - lo + 1);
        let p = 0.25 + 0.7 * rng.next_f64();
        let g = gnp(n, p, rng.next_u64()).expect("valid p");
        if is_connected(&g) {
            return g;
        }
    }
}

fn tau_trial(rng: &mut SplitMix64) -> Result<(), String> {
    let g = random_connected(rng, 2, 8);
    let k = 1 + rng.index(3);
    let fast = tau_at_least(&g, k).map_err(|e| e.to_string())?;
    let oracle = nash_williams_oracle(&g, k).map_err(|e| e.to_string())?;
    if fast.answer != oracle.holds {
        return Err(format!("k={k}: packing says {}, partitions say {}", fast.answer, oracle.holds));
    }
    fast.evidence.verify(&g, k, fast.answer)
}

fn kappa_trial(rng: &mut SplitMix64) -> Result<(), String> {
    let n = 2 + rng.index(11);
    let g = gnp(n, 0.2 + 0.7 * rng.next_f64(), rng.next_u64()).expect("valid p");
    let cut = edge_connectivity(&g).map_err(|e| e.to_string())?;
    let brute = brute_force_edge_connectivity(&g).map_err(|e| e.to_string())?;
    if cut.value != brute {
        return Err(format!("n={n}: Stoer-Wagner {} vs brute force {brute}", cut.value));
    }
    let side = boundary(&g, &cut.witness).map_err(|e| e.to_string())?;
    if side != cut.value {
        return Err(format!("witness has d(X) = {side}, cut value {}", cut.value));
    }
    Ok(())
}

fn girth_trial(rng: &mut SplitMix64) -> Result<(), String> {
    let n = 1 + rng.index(12);
    let g = gnp(n, 0.1 + 0.4 * rng.next_f64(), rng.next_u64()).expect("valid p");
    let fast = girth(&g);
    let brute = brute_force_girth(&g).map_err(|e| e.to_string())?;
    if fast != brute {
        return Err(format!("n={n}: BFS girth {fast} vs enumeration {brute}"));
    }
    Ok(())
}

/// Closed-form adjacency spectra of standard families, sorted descending.
pub fn closed_form_adjacency(g_kind: &ClosedForm) -> Vec<f64> {
    let mut v = match *g_kind {
        ClosedForm::Complete(n) => {
            let mut v = vec![-1.0; n - 1];
            v.push((n - 1) as f64);
            v
        }
        ClosedForm::Cycle(n) => (0..n).map(|j| 2.0 * (2.0 * PI * j as f64 / n as f64).cos()).collect(),
        ClosedForm::CompleteBipartite(a, b) => {
            let r = ((a * b) as f64).sqrt();
            let mut v = vec![0.0; a + b - 2];
            v.extend([r, -r]);
            v
        }
        ClosedForm::Circulant(n, ref steps) => (0..n)
            .map(|j| {
                steps
                    .iter()
                    .map(|&s| {
                        let c = (2.0 * PI * (j * s) as f64 / n as f64).cos();
                        if 2 * s == n { c } else { 2.0 * c }
                    })
                    .sum()
            })
            .collect(),
        ClosedForm::Petersen => {
            let mut v = vec![3.0];
            v.extend([1.0; 5]);
            v.extend([-2.0; 4]);
            v
        }
    };
    v.sort_by(|x, y| y.total_cmp(x));
    v
}

#[derive(Debug, Clone, PartialEq)]
pub enum ClosedForm {
    Complete(usize),
    Cycle(usize),
    CompleteBipartite(usize, usize),
    /// Distinct steps in `1..=n/2`.
    Circulant(usize, Vec<usize>),
    Petersen,
}

impl ClosedForm {
    pub fn graph(&self) -> Graph {
        match *self {
            ClosedForm::Complete(n) => complete(n),
            ClosedForm::Cycle(n) => cycle(n),
            ClosedForm::CompleteBipartite(a, b) => complete_bipartite(a, b),
            ClosedForm::Circulant(n, ref s) => circulant(n, s),
            ClosedForm::Petersen => Ok(named::petersen()),
        }
        .expect("valid family parameters")
    }

    fn random(rng: &mut SplitMix64) -> ClosedForm {
        match rng.index(5) {
            0 => ClosedForm::Complete(1 + rng.index(30)),
            1 => ClosedForm::Cycle(3 + rng.index(58)),
            2 => ClosedForm::CompleteBipartite(1 + rng.index(15), 1 + rng.index(15)),
            3 => {
                let n = 3 + rng.index(38);
                let mut steps: Vec<usize> = (1..=n / 2).filter(|_| rng.next_f64() < 0.4).collect();
                if steps.is_empty() {
                    steps.push(1);
                }
                ClosedForm::Circulant(n, steps)
            }
            _ => ClosedForm::Petersen,
        }
    }
}

/// For regular graphs the Laplacian and signless spectra follow from the
/// adjacency spectrum: `μ = d − λ`, `q = d + λ`.
fn eigen_trial(rng: &mut SplitMix64) -> Result<(), String> {
    let form = ClosedForm::random(rng);
    let g = form.graph();
    let expected = closed_form_adjacency(&form);
    let mut cases = vec![(MatrixKind::ADJACENCY, expected.clone())];
    if g.is_regular() && g.n() > 0 {
        let d = g.max_degree() as f64;
        let mut lap: Vec<f64> = expected.iter().map(|l| d - l).collect();
        lap.sort_by(|x, y| y.total_cmp(x));
        cases.push((MatrixKind::LAPLACIAN, lap));
        cases.push((MatrixKind::SIGNLESS, expected.iter().map(|l| d + l).collect()));
    }
    for (kind, want) in cases {
        let m = build_matrix(&g, kind).map_err(|e| e.to_string())?;
        let tol = 1e-9 * (1.0 + m.norm_inf());
        let got = eigenvalues(&m).map_err(|e| e.to_string())?;
        for (i, (x, y)) in got.values().iter().zip(&want).enumerate() {
            if (x - y).abs() > tol {
                return Err(format!("{form:?} {kind:?}: eigenvalue {i} is {x}, expected {y}"));
            }
        }
    }
    Ok(())
}

fn random_partition(rng: &mut SplitMix64, n: usize) -> Partition {
    let blocks = 1 + rng.index(n - 1);
    let mut labels: Vec<usize> = (0..n).map(|v| if v < blocks { v } else { rng.index(blocks) }).collect();
    rng.shuffle(&mut labels);
    Partition::from_labels(&labels)
}

fn interlacing_trial(rng: &mut SplitMix64) -> Result<(), String> {
    let n = 3 + rng.index(10);
    let g = gnp(n, 0.2 + 0.7 * rng.next_f64(), rng.next_u64()).expect("valid p");
    let kind = [MatrixKind::ADJACENCY, MatrixKind::LAPLACIAN, MatrixKind::SIGNLESS][rng.index(3)];
    let p = random_partition(rng, n);
    let m = build_matrix(&g, kind).map_err(|e| e.to_string())?;
    let theta = graph_spectrum(&g, kind).map_err(|e| e.to_string())?;
    let eta = quotient_eigenvalues(&m, &p).map_err(|e| e.to_string())?;
    let check = check_interlacing(&theta, &eta).map_err(|e| e.to_string())?;
    if !check.holds {
        return Err(format!("interlacing fails at index {:?}", check.witness));
    }
    Ok(())
}

fn lemma3_1_trial(rng: &mut SplitMix64) -> Result<(), String> {
    let delta = 2 + rng.index(3);
    let n = delta + 2 + rng.index(12 - delta);
    let g = random_min_degree(n, delta, rng.next_u64()).map_err(|e| e.to_string())?;
    let r = check_lemma3_1(&g).map_err(|e| e.to_string())?;
    if !r.holds {
        return Err(format!("n={n}: small cut side {:?} below n1* = {}", r.violations[0], r.n1_star));
    }
    Ok(())
}

fn edge_deletion_trial(rng: &mut SplitMix64) -> Result<(), String> {
    let g = loop {
        let g = random_connected(rng, 2, 7);
        if g.m() <= 14 {
            break g;
        }
    };
    let k = 1 + rng.index(2);
    let r = check_catlin_lai_shao(&g, k).map_err(|e| e.to_string())?;
    if !r.equiv_holds {
        return Err(format!("k={k}: equivalence fails, witness {:?}", r.counterexample));
    }
    Ok(())
}
