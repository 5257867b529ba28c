//! The JSON analysis report: graph metadata, spectra, bounds, exact
//! invariants and verdicts for a single graph.

use serde::Serialize;

use crate::bounds::{
    kappa_threshold_strong, kappa_threshold_weak, moore_bound, n1_star, tau_threshold,
};
use crate::connectivity::{edge_connectivity, tau};
use crate::error::{domain, Result};
use crate::graph::{girth, is_bipartite, is_connected, Girth, Graph};
use crate::spectral::{graph_spectrum, MatrixKind};
use crate::theorems::{
    check_co3_3, check_co3_5, check_cor2, check_main1, check_main2, CheckOptions, Main1Variant,
    StandardForm, Verdict, Verification, AUTO_TAU_MAX_N,
};

pub const SCHEMA: &str = "spectre-pack/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SpectrumDetail {
    None,
    /// λ₁, λ₂, λ_{n−1}, λₙ for each matrix.
    #[default]
    Summary,
    /// Summary plus every eigenvalue.
    Full,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AnalyzeOptions {
    pub ks: Vec<usize>,
    pub shifts: Vec<f64>,
    pub exact: Verification,
    pub spectrum: SpectrumDetail,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            ks: vec![2],
            shifts: vec![0.0],
            exact: Verification::Auto,
            spectrum: SpectrumDetail::Summary,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Provenance {
    pub source: String,
    pub tool: &'static str,
    pub version: &'static str,
    pub seed: Option<u64>,
}

impl Provenance {
    pub fn new(source: impl Into<String>, seed: Option<u64>) -> Self {
        Provenance {
            source: source.into(),
            tool: "spectre",
            version: env!("CARGO_PKG_VERSION"),
            seed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GraphInfo {
    pub n: usize,
    pub m: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub average_degree: f64,
    pub girth: Girth,
    pub bipartite: bool,
    pub connected: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumSummary {
    pub matrix: String,
    pub a: f64,
    pub b: f64,
    pub lambda_1: f64,
    pub lambda_2: Option<f64>,
    pub lambda_n_minus_1: Option<f64>,
    pub lambda_n: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub values: Option<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ThresholdRow {
    pub k: usize,
    pub a: f64,
    pub tau: Option<f64>,
    pub kappa_weak: Option<f64>,
    pub kappa_strong: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Bounds {
    pub n1_star: Option<u64>,
    /// Moore bound for `(Δ, g)`; only reported for regular graphs.
    pub moore_bound: Option<u64>,
    pub thresholds: Vec<ThresholdRow>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Invariants {
    pub kappa_prime: Option<usize>,
    pub tau: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub graph: GraphInfo,
    pub spectra: Vec<SpectrumSummary>,
    pub bounds: Bounds,
    pub exact: Invariants,
    pub verdicts: Vec<Verdict>,
    pub provenance: Provenance,
}

fn matrices(shifts: &[f64]) -> Vec<(String, MatrixKind)> {
    let mut out = vec![
        ("adjacency".to_string(), MatrixKind::ADJACENCY),
        ("laplacian".to_string(), MatrixKind::LAPLACIAN),
        ("signless_laplacian".to_string(), MatrixKind::SIGNLESS),
    ];
    for &a in shifts {
        let kind = MatrixKind::shifted(a);
        if !out.iter().any(|(_, k)| *k == kind) {
            out.push((format!("shifted(a={a})"), kind));
        }
    }
    out
}

fn summary(name: String, kind: MatrixKind, g: &Graph, full: bool) -> Result<SpectrumSummary> {
    let spectrum = graph_spectrum(g, kind)?;
    let v = spectrum.values();
    let n = v.len();
    Ok(SpectrumSummary {
        matrix: name,
        a: kind.a,
        b: kind.b,
        lambda_1: v[0],
        lambda_2: (n >= 2).then(|| v[1]),
        lambda_n_minus_1: (n >= 2).then(|| v[n - 2]),
        lambda_n: v[n - 1],
        values: full.then(|| v.to_vec()),
    })
}

/// Builds the full report. Shifts must satisfy `a ≥ −1`; `k` values must
/// be positive.
pub fn analyze(g: &Graph, opts: &AnalyzeOptions, provenance: Provenance) -> Result<Report> {
    let n = g.n();
    if n == 0 {
        return Err(domain("cannot analyse the empty graph"));
    }
    crate::spectral::check_dense_order(n)?;
    if let Some(&a) = opts.shifts.iter().find(|&&a| !(a.is_finite() && a >= -1.0)) {
        return Err(domain(format!("shift a = {a} must be finite and >= -1")));
    }
    if opts.ks.contains(&0) {
        return Err(domain("k must be positive"));
    }
    let stats = g.degree_stats()?;
    let girth = girth(g);
    let info = GraphInfo {
        n,
        m: g.m(),
        min_degree: stats.min,
        max_degree: stats.max,
        average_degree: stats.average,
        girth,
        bipartite: is_bipartite(g),
        connected: is_connected(g),
    };

    let spectra = match opts.spectrum {
        SpectrumDetail::None => Vec::new(),
        detail => matrices(&opts.shifts)
            .into_iter()
            .map(|(name, kind)| summary(name, kind, g, detail == SpectrumDetail::Full))
            .collect::<Result<_>>()?,
    };

    let delta = stats.min as u64;
    let finite = girth.finite().map(|x| x as u64);
    let n1 = finite.and_then(|gg| n1_star(delta, gg).ok());
    let moore = match finite {
        Some(gg) if g.is_regular() => moore_bound(stats.max as u64, gg).ok(),
        _ => None,
    };
    let mut thresholds = Vec::new();
    if let Some(gg) = finite {
        for &k in &opts.ks {
            for &a in &opts.shifts {
                let k64 = k as u64;
                thresholds.push(ThresholdRow {
                    k,
                    a,
                    tau: tau_threshold(delta, k64, gg, a).ok(),
                    kappa_weak: kappa_threshold_weak(delta, k64, gg, a).ok(),
                    kappa_strong: kappa_threshold_strong(delta, k64, gg, a, n as u64).ok(),
                });
            }
        }
    }

    let exact = match opts.exact {
        Verification::Never => Invariants { kappa_prime: None, tau: None },
        mode => Invariants {
            kappa_prime: (n >= 2).then(|| edge_connectivity(g).map(|c| c.value)).transpose()?,
            tau: (mode == Verification::Always || n <= AUTO_TAU_MAX_N).then(|| tau(g)),
        },
    };

    let check = CheckOptions { verification: opts.exact };
    let mut verdicts = Vec::new();
    for &k in &opts.ks {
        for &a in &opts.shifts {
            verdicts.push(check_main1(g, k, a, Main1Variant::Strong, check));
            verdicts.push(check_main1(g, k, a, Main1Variant::Weak, check));
            verdicts.push(check_main2(g, k, a, check));
        }
        for form in [StandardForm::Adjacency, StandardForm::Laplacian, StandardForm::Signless] {
            verdicts.push(check_cor2(g, k, form, check));
        }
        for form in [StandardForm::Adjacency, StandardForm::Laplacian, StandardForm::Signless] {
            verdicts.push(check_co3_3(g, k, form, check));
        }
        verdicts.push(check_co3_5(g, k, check));
    }

    Ok(Report {
        schema: SCHEMA,
        graph: info,
        spectra,
        bounds: Bounds {
            n1_star: n1,
            moore_bound: moore,
            thresholds,
        },
        exact,
        verdicts,
        provenance,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, named, path};

    #[test]
    fn petersen_report() {
        let opts = AnalyzeOptions {
            exact: Verification::Always,
            ..AnalyzeOptions::default()
        };
        let r = analyze(&named::petersen(), &opts, Provenance::new("petersen", None)).unwrap();
        assert_eq!(r.schema, SCHEMA);
        assert_eq!(r.graph.girth, Girth::Finite(5));
        assert_eq!(r.bounds.n1_star, Some(8));
        assert_eq!(r.bounds.moore_bound, Some(10));
        assert!((r.spectra[0].lambda_2.unwrap() - 1.0).abs() < 1e-12);
        assert_eq!(r.exact, Invariants { kappa_prime: Some(3), tau: Some(1) });
        assert!(r.verdicts.iter().all(|v| v.sound));
        assert!(r.exact.kappa_prime.unwrap() <= r.graph.min_degree);
        assert!(r.spectra[0].values.is_none());
    }

    #[test]
    fn full_spectrum_and_invariants_are_consistent() {
        let g = complete(7).unwrap();
        let opts = AnalyzeOptions {
            ks: vec![2, 3],
            shifts: vec![0.0, -1.0, 0.5],
            spectrum: SpectrumDetail::Full,
            ..AnalyzeOptions::default()
        };
        let r = analyze(&g, &opts, Provenance::new("complete:n=7", None)).unwrap();
        // a = 0 coincides with the adjacency matrix.
        assert_eq!(r.spectra.len(), 5);
        assert!(r.spectra.iter().all(|s| s.values.as_ref().unwrap().len() == 7));
        assert_eq!(r.bounds.thresholds.len(), 6);
        assert_eq!(r.exact.tau, Some(3));
        assert!(r.exact.tau.unwrap() <= g.m() / (g.n() - 1));
    }

    #[test]
    fn acyclic_graphs_have_no_bounds() {
        let r = analyze(&path(4).unwrap(), &AnalyzeOptions::default(), Provenance::new("p", None))
            .unwrap();
        assert_eq!(r.bounds.n1_star, None);
        assert!(r.bounds.thresholds.is_empty());
        assert!(r.verdicts.iter().all(|v| !v.applicable));
    }

    #[test]
    fn rejects_bad_options() {
        let g = complete(3).unwrap();
        let bad = AnalyzeOptions { shifts: vec![-2.0], ..AnalyzeOptions::default() };
        assert!(analyze(&g, &bad, Provenance::new("x", None)).is_err());
        let bad = AnalyzeOptions { ks: vec![0], ..AnalyzeOptions::default() };
        assert!(analyze(&g, &bad, Provenance::new("x", None)).is_err());
        assert!(analyze(&Graph::empty(0), &AnalyzeOptions::default(), Provenance::new("x", None)).is_err());
    }
}
