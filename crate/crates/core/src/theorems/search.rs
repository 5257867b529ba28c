//! Seeded sweeps over random families looking for unsound verdicts.

use rayon::prelude::*;
use serde::Serialize;

use super::{check_theorem, CheckOptions, CheckParams, TheoremId, Verdict, Verification};
use crate::error::{domain, Error, Result};
use crate::generators::{trial_seed, GeneratorSpec, SplitMix64};
use crate::graph::{to_graph6, Graph};

pub const NEAR_BOUNDARY_DEFAULT: f64 = 0.05;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchFamily {
    RandomRegular { d: usize },
    RandomMinDegree { delta: usize },
}

impl SearchFamily {
    fn degree(self) -> usize {
        match self {
            SearchFamily::RandomRegular { d } => d,
            SearchFamily::RandomMinDegree { delta } => delta,
        }
    }

    fn spec(self, n: usize, seed: u64) -> GeneratorSpec {
        match self {
            SearchFamily::RandomRegular { d } => GeneratorSpec::RandomRegular { n, d, seed },
            SearchFamily::RandomMinDegree { delta } => {
                GeneratorSpec::RandomMinDegree { n, delta, seed }
            }
        }
    }

    /// Whether order `n` is realisable (a d-regular graph needs `n·d` even).
    fn admits(self, n: usize) -> bool {
        n > self.degree()
            && match self {
                SearchFamily::RandomRegular { d } => n * d % 2 == 0,
                SearchFamily::RandomMinDegree { .. } => true,
            }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchConfig {
    pub family: SearchFamily,
    pub n_min: usize,
    pub n_max: usize,
    pub theorem: TheoremId,
    #[serde(flatten)]
    pub params: CheckParams,
    pub trials: usize,
    pub master_seed: u64,
    /// Instances with `|margin|` below this are listed in the report.
    pub near_boundary: f64,
    #[serde(skip)]
    pub verification: Verification,
    /// Worker threads; 0 uses the global pool.
    #[serde(skip)]
    pub threads: usize,
}

impl SearchConfig {
    pub fn new(family: SearchFamily, n_min: usize, n_max: usize, theorem: TheoremId) -> Self {
        SearchConfig {
            family,
            n_min,
            n_max,
            theorem,
            params: CheckParams::default(),
            trials: 0,
            master_seed: 0,
            near_boundary: NEAR_BOUNDARY_DEFAULT,
            verification: Verification::Always,
            threads: 0,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.n_min > self.n_max {
            return Err(domain(format!("empty order range {}..{}", self.n_min, self.n_max)));
        }
        if !self.theorem.has_verdict() {
            return Err(domain(format!("{} has no graph-level verdict to search", self.theorem)));
        }
        if !(self.near_boundary >= 0.0) {
            return Err(domain("near-boundary width must be non-negative"));
        }
        if !(self.n_min..=self.n_max).any(|n| self.family.admits(n)) {
            return Err(domain(format!(
                "no order in {}..={} admits degree {}",
                self.n_min,
                self.n_max,
                self.family.degree()
            )));
        }
        Ok(())
    }

    /// Order for a trial: uniform in the range, moved to the nearest
    /// admissible order above (or else below) when needed.
    fn order(&self, rng: &mut SplitMix64) -> usize {
        let span = (self.n_max - self.n_min + 1) as u64;
        let n = self.n_min + rng.below(span) as usize;
        (n..=self.n_max)
            .chain((self.n_min..n).rev())
            .find(|&m| self.family.admits(m))
            .expect("validated range")
    }
}

impl Serialize for CheckParams {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("CheckParams", 3)?;
        st.serialize_field("k", &self.k)?;
        st.serialize_field("a", &self.a)?;
        st.serialize_field("b", &self.b)?;
        st.end()
    }
}

/// One generated instance and its verdict.
#[derive(Debug, Clone, PartialEq)]
pub struct TrialRecord {
    pub trial: usize,
    pub spec: GeneratorSpec,
    pub graph: Graph,
    pub verdict: Verdict,
}

/// Runs the configured checker on every trial, in trial order. The graph
/// for trial `i` depends only on the master seed and `i`.
pub fn run_trials(config: &SearchConfig) -> Result<Vec<TrialRecord>> {
    config.validate()?;
    let opts = CheckOptions {
        verification: config.verification,
    };
    let run = || {
        (0..config.trials)
            .into_par_iter()
            .map(|trial| {
                let mut rng = SplitMix64::new(trial_seed(config.master_seed, trial as u64));
                let n = config.order(&mut rng);
                let spec = config.family.spec(n, rng.next_u64());
                let graph = spec.generate()?;
                let verdict = check_theorem(config.theorem, &graph, config.params, opts)?;
                Ok(TrialRecord { trial, spec, graph, verdict })
            })
            .collect::<Result<Vec<_>>>()
    };
    if config.threads == 0 {
        run()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(config.threads)
            .build()
            .map_err(|e| Error::Domain(format!("thread pool: {e}")))?
            .install(run)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct SearchCounts {
    pub trials: usize,
    pub inapplicable: usize,
    pub hypothesis_false: usize,
    pub hypothesis_true: usize,
    pub conclusion_skipped: usize,
    pub sound: usize,
    pub unsound: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchInstance {
    pub trial: usize,
    pub spec: String,
    pub n: usize,
    pub m: usize,
    pub graph6: String,
    pub verdict: Verdict,
}

impl SearchInstance {
    fn from_record(r: &TrialRecord) -> Self {
        SearchInstance {
            trial: r.trial,
            spec: r.spec.to_string(),
            n: r.graph.n(),
            m: r.graph.m(),
            graph6: to_graph6(&r.graph),
            verdict: r.verdict.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchReport {
    pub config: SearchConfig,
    pub counts: SearchCounts,
    /// Smallest margin over applicable verdicts.
    pub min_margin: Option<f64>,
    pub min_margin_trial: Option<usize>,
    pub near_boundary: Vec<SearchInstance>,
    /// Every instance with `sound = false`.
    pub unsound: Vec<SearchInstance>,
}

impl SearchReport {
    pub fn from_records(config: &SearchConfig, records: &[TrialRecord]) -> Self {
        let mut counts = SearchCounts {
            trials: records.len(),
            ..SearchCounts::default()
        };
        let mut min_margin: Option<(f64, usize)> = None;
        let mut near_boundary = Vec::new();
        let mut unsound = Vec::new();
        for r in records {
            let v = &r.verdict;
            if !v.applicable {
                counts.inapplicable += 1;
            } else if v.hypothesis_holds {
                counts.hypothesis_true += 1;
            } else {
                counts.hypothesis_false += 1;
            }
            if v.applicable && v.conclusion_verified == super::Conclusion::Skipped {
                counts.conclusion_skipped += 1;
            }
            if v.sound {
                counts.sound += 1;
            } else {
                counts.unsound += 1;
                unsound.push(SearchInstance::from_record(r));
            }
            if let Some(margin) = v.margin {
                if min_margin.map_or(true, |(best, _)| margin < best) {
                    min_margin = Some((margin, r.trial));
                }
                if margin.abs() < config.near_boundary {
                    near_boundary.push(SearchInstance::from_record(r));
                }
            }
        }
        SearchReport {
            config: config.clone(),
            counts,
            min_margin: min_margin.map(|(m, _)| m),
            min_margin_trial: min_margin.map(|(_, t)| t),
            near_boundary,
            unsound,
        }
    }
}

/// Generates `config.trials` graphs, checks each, and aggregates. Any
/// `sound = false` verdict is kept in [`SearchReport::unsound`].
pub fn counterexample_search(config: &SearchConfig) -> Result<SearchReport> {
    let records = run_trials(config)?;
    Ok(SearchReport::from_records(config, &records))
}
