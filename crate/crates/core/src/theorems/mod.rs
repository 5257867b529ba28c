//! Verdict engine: evaluates each eigenvalue condition on a concrete graph
//! and checks the promised conclusion against the exact invariant.
//!
//! Inapplicability is reported inside the [`Verdict`], never as an error, so
//! sweeps can aggregate over whole families.

mod lemmas;
mod search;

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::bounds::{self, finite_girth};
use crate::connectivity::{edge_connectivity, tau};
use crate::error::{domain, Error, Result};
use crate::graph::{girth, is_bipartite, Graph};
use crate::spectral::{lambda_i, MatrixKind};

pub use lemmas::{
    check_lemma3_1, check_lemma4_1, check_lemma4_1_with, Lemma31Check, Lemma41Check,
    LEMMA3_1_MAX_N, LEMMA4_1_TOL,
};
pub use search::{
    counterexample_search, run_trials, SearchConfig, SearchCounts, SearchFamily, SearchInstance,
    SearchReport, TrialRecord, NEAR_BOUNDARY_DEFAULT,
};

/// Exact τ is computed by default only up to this order.
pub const AUTO_TAU_MAX_N: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum TheoremId {
    Main1I,
    Main1Ii,
    Main2,
    Cor2I,
    Cor2Ii,
    Cor2Iii,
    Co3_2I,
    Co3_2Ii,
    Co3_3I,
    Co3_3Ii,
    Co3_3Iii,
    Co3_5,
    /// Tree-packing form of the general `(a, b)` condition, `b > 0`.
    TauAbI,
    /// Tree-packing form of the general `(a, b)` condition, `b < 0`.
    TauAbIi,
    Lemma3_1,
    Lemma4_1,
}

impl TheoremId {
    pub const ALL: [TheoremId; 16] = [
        TheoremId::Main1I,
        TheoremId::Main1Ii,
        TheoremId::Main2,
        TheoremId::Cor2I,
        TheoremId::Cor2Ii,
        TheoremId::Cor2Iii,
        TheoremId::Co3_2I,
        TheoremId::Co3_2Ii,
        TheoremId::Co3_3I,
        TheoremId::Co3_3Ii,
        TheoremId::Co3_3Iii,
        TheoremId::Co3_5,
        TheoremId::TauAbI,
        TheoremId::TauAbIi,
        TheoremId::Lemma3_1,
        TheoremId::Lemma4_1,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::Main1I => "MAIN1_I",
            TheoremId::Main1Ii => "MAIN1_II",
            TheoremId::Main2 => "MAIN2",
            TheoremId::Cor2I => "COR2_I",
            TheoremId::Cor2Ii => "COR2_II",
            TheoremId::Cor2Iii => "COR2_III",
            TheoremId::Co3_2I => "CO3_2_I",
            TheoremId::Co3_2Ii => "CO3_2_II",
            TheoremId::Co3_3I => "CO3_3_I",
            TheoremId::Co3_3Ii => "CO3_3_II",
            TheoremId::Co3_3Iii => "CO3_3_III",
            TheoremId::Co3_5 => "CO3_5",
            TheoremId::TauAbI => "TAU_AB_I",
            TheoremId::TauAbIi => "TAU_AB_II",
            TheoremId::Lemma3_1 => "LEMMA3_1",
            TheoremId::Lemma4_1 => "LEMMA4_1",
        }
    }

    /// Whether the id names a graph-level condition with a [`Verdict`]
    /// (as opposed to a lemma over vertex subsets).
    pub fn has_verdict(self) -> bool {
        !matches!(self, TheoremId::Lemma3_1 | TheoremId::Lemma4_1)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let wanted = s.trim().to_ascii_uppercase().replace(['-', '.'], "_");
        TheoremId::ALL
            .into_iter()
            .find(|id| id.as_str() == wanted)
            .ok_or_else(|| domain(format!("unknown theorem `{s}`")))
    }
}

/// When to run the exact (and potentially expensive) conclusion check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Verification {
    /// κ′ always; τ only for `n ≤ 200`.
    #[default]
    Auto,
    Always,
    Never,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CheckOptions {
    pub verification: Verification,
}

impl CheckOptions {
    pub const ALWAYS: CheckOptions = CheckOptions {
        verification: Verification::Always,
    };
}

/// Outcome of the exact check; serialized as `true`, `false` or `"SKIPPED"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Conclusion {
    Verified(bool),
    Skipped,
}

impl Conclusion {
    pub fn is_false(self) -> bool {
        self == Conclusion::Verified(false)
    }
}

impl Serialize for Conclusion {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Conclusion::Verified(b) => s.serialize_bool(*b),
            Conclusion::Skipped => s.serialize_str("SKIPPED"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct ExactValues {
    pub kappa_prime: Option<usize>,
    pub tau: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Claim {
    Kappa(usize),
    Tau(usize),
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Claim::Kappa(k) => write!(f, "κ′ ≥ {k}"),
            Claim::Tau(k) => write!(f, "τ ≥ {k}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Verdict {
    pub theorem: TheoremId,
    pub applicable: bool,
    /// Why the verdict is not applicable.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub hypothesis_holds: bool,
    /// The eigenvalue in the form the condition is stated (λ₂, μ_{n−1}, ...).
    pub eigenvalue: Option<f64>,
    pub threshold: Option<f64>,
    /// Signed distance to the boundary; positive means the hypothesis holds
    /// with room to spare.
    pub margin: Option<f64>,
    pub conclusion_claim: String,
    pub conclusion_verified: Conclusion,
    pub exact_values: ExactValues,
    pub sound: bool,
}

impl Verdict {
    fn inapplicable(theorem: TheoremId, claim: Claim, reason: impl Into<String>) -> Self {
        Verdict {
            theorem,
            applicable: false,
            reason: Some(reason.into()),
            hypothesis_holds: false,
            eigenvalue: None,
            threshold: None,
            margin: None,
            conclusion_claim: claim.to_string(),
            conclusion_verified: Conclusion::Skipped,
            exact_values: ExactValues::default(),
            sound: true,
        }
    }

    fn evaluated(
        theorem: TheoremId,
        claim: Claim,
        g: &Graph,
        eval: Evaluation,
        opts: CheckOptions,
    ) -> Self {
        let (conclusion_verified, exact_values) = conclude(g, claim, opts);
        Verdict {
            theorem,
            applicable: true,
            reason: None,
            hypothesis_holds: eval.holds,
            eigenvalue: Some(eval.eigenvalue),
            threshold: Some(eval.threshold),
            margin: Some(eval.margin),
            conclusion_claim: claim.to_string(),
            conclusion_verified,
            exact_values,
            sound: !(eval.holds && conclusion_verified.is_false()),
        }
    }

    fn relabel(mut self, theorem: TheoremId) -> Self {
        self.theorem = theorem;
        self
    }
}

/// Comparison of an eigenvalue with its threshold.
#[derive(Debug, Clone, Copy)]
struct Evaluation {
    eigenvalue: f64,
    threshold: f64,
    holds: bool,
    margin: f64,
}

impl Evaluation {
    /// `eigenvalue ≤ threshold` (or `<` when strict).
    fn upper(eigenvalue: f64, threshold: f64, strict: bool) -> Self {
        let holds = if strict { eigenvalue < threshold } else { eigenvalue <= threshold };
        Evaluation { eigenvalue, threshold, holds, margin: threshold - eigenvalue }
    }

    /// `eigenvalue ≥ threshold` (or `>` when strict).
    fn lower(eigenvalue: f64, threshold: f64, strict: bool) -> Self {
        let holds = if strict { eigenvalue > threshold } else { eigenvalue >= threshold };
        Evaluation { eigenvalue, threshold, holds, margin: eigenvalue - threshold }
    }
}

fn conclude(g: &Graph, claim: Claim, opts: CheckOptions) -> (Conclusion, ExactValues) {
    let mut exact = ExactValues::default();
    if opts.verification == Verification::Never {
        return (Conclusion::Skipped, exact);
    }
    match claim {
        Claim::Kappa(k) => {
            let value = edge_connectivity(g).map(|c| c.value).unwrap_or(0);
            exact.kappa_prime = Some(value);
            (Conclusion::Verified(value >= k), exact)
        }
        Claim::Tau(k) => {
            if opts.verification == Verification::Auto && g.n() > AUTO_TAU_MAX_N {
                return (Conclusion::Skipped, exact);
            }
            let value = tau(g);
            exact.tau = Some(value);
            (Conclusion::Verified(value >= k), exact)
        }
    }
}

/// Minimum degree and finite girth, or the reason the structural
/// preconditions `k ≥ 2`, `δ ≥ min_delta` and `g < ∞` fail.
fn structure(g: &Graph, k: usize, min_delta: usize) -> std::result::Result<(u64, u64), String> {
    if k < 2 {
        return Err(format!("k = {k} < 2"));
    }
    if g.n() < 2 {
        return Err(format!("order n = {} < 2", g.n()));
    }
    let delta = g.min_degree();
    if delta < min_delta {
        return Err(format!("minimum degree {delta} < {min_delta}"));
    }
    let girth = finite_girth(girth(g)).map_err(|e| e.to_string())?;
    Ok((delta as u64, girth))
}

fn check_shift(a: f64) -> std::result::Result<(), String> {
    if !a.is_finite() || a < -1.0 {
        return Err(format!("a = {a} must be finite and >= -1"));
    }
    Ok(())
}

fn lambda2(g: &Graph, a: f64) -> f64 {
    lambda_i(g, MatrixKind::shifted(a), 2).expect("n >= 2 and a finite")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Main1Variant {
    /// `λ₂(G, a) ≤ (a+1)δ − (k−1)n / (n₁*(n − n₁*))`.
    Strong,
    /// `λ₂(G, a) < (a+1)δ − 2(k−1)/n₁*`.
    Weak,
}

/// Edge-connectivity condition on `λ₂(G, a)`.
pub fn check_main1(g: &Graph, k: usize, a: f64, variant: Main1Variant, opts: CheckOptions) -> Verdict {
    let (theorem, claim) = match variant {
        Main1Variant::Strong => (TheoremId::Main1I, Claim::Kappa(k)),
        Main1Variant::Weak => (TheoremId::Main1Ii, Claim::Kappa(k)),
    };
    let (delta, girth) = match structure(g, k, k).and_then(|s| check_shift(a).map(|_| s)) {
        Ok(s) => s,
        Err(reason) => return Verdict::inapplicable(theorem, claim, reason),
    };
    let threshold = match variant {
        Main1Variant::Strong => {
            bounds::kappa_threshold_strong(delta, k as u64, girth, a, g.n() as u64)
        }
        Main1Variant::Weak => bounds::kappa_threshold_weak(delta, k as u64, girth, a),
    };
    let threshold = match threshold {
        Ok(t) => t,
        Err(e) => return Verdict::inapplicable(theorem, claim, e.to_string()),
    };
    let eval = Evaluation::upper(lambda2(g, a), threshold, variant == Main1Variant::Weak);
    Verdict::evaluated(theorem, claim, g, eval, opts)
}

/// Spanning-tree packing condition `λ₂(G, a) < (a+1)δ − (2k−1)/n₁*`.
pub fn check_main2(g: &Graph, k: usize, a: f64, opts: CheckOptions) -> Verdict {
    let theorem = TheoremId::Main2;
    let claim = Claim::Tau(k);
    let (delta, girth) =
        match structure(g, k, 2 * k).and_then(|s| check_shift(a).map(|_| s)) {
            Ok(s) => s,
            Err(reason) => return Verdict::inapplicable(theorem, claim, reason),
        };
    let threshold = match bounds::tau_threshold(delta, k as u64, girth, a) {
        Ok(t) => t,
        Err(e) => return Verdict::inapplicable(theorem, claim, e.to_string()),
    };
    let eval = Evaluation::upper(lambda2(g, a), threshold, true);
    Verdict::evaluated(theorem, claim, g, eval, opts)
}

/// Which of the three standard matrices a corollary is phrased in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StandardForm {
    /// `λ₂(G)`, shift `a = 0`.
    Adjacency,
    /// `μ_{n−1}(G)`, shift `a = −1`.
    Laplacian,
    /// `q₂(G)`, shift `a = 1`.
    Signless,
}

impl StandardForm {
    pub fn shift(self) -> f64 {
        match self {
            StandardForm::Adjacency => 0.0,
            StandardForm::Laplacian => -1.0,
            StandardForm::Signless => 1.0,
        }
    }
}

/// `λ₂(G, −1) = −μ_{n−1}(G)`: restate a verdict in Laplacian terms. The
/// margin is unchanged.
fn to_laplacian(mut v: Verdict) -> Verdict {
    v.eigenvalue = v.eigenvalue.map(|x| -x);
    v.threshold = v.threshold.map(|x| -x);
    v
}

fn standard(v: Verdict, form: StandardForm, theorem: TheoremId) -> Verdict {
    let v = v.relabel(theorem);
    match form {
        StandardForm::Laplacian => to_laplacian(v),
        _ => v,
    }
}

/// The tree-packing condition with `a ∈ {0, −1, 1}`: `λ₂(G) < δ − c`,
/// `μ_{n−1}(G) > c`, or `q₂(G) < 2δ − c`, where `c = (2k−1)/n₁*`.
pub fn check_cor2(g: &Graph, k: usize, form: StandardForm, opts: CheckOptions) -> Verdict {
    let theorem = match form {
        StandardForm::Adjacency => TheoremId::Cor2I,
        StandardForm::Laplacian => TheoremId::Cor2Ii,
        StandardForm::Signless => TheoremId::Cor2Iii,
    };
    standard(check_main2(g, k, form.shift(), opts), form, theorem)
}

/// The strong edge-connectivity condition with `a ∈ {0, −1, 1}`.
pub fn check_co3_3(g: &Graph, k: usize, form: StandardForm, opts: CheckOptions) -> Verdict {
    let theorem = match form {
        StandardForm::Adjacency => TheoremId::Co3_3I,
        StandardForm::Laplacian => TheoremId::Co3_3Ii,
        StandardForm::Signless => TheoremId::Co3_3Iii,
    };
    standard(check_main1(g, k, form.shift(), Main1Variant::Strong, opts), form, theorem)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneralTarget {
    KappaStrong,
    KappaWeak,
    Tau,
}

/// The conditions in `aD + bA` form: for `b > 0`,
/// `λ₂(G, a, b) ≤ / < (a+b)δ − b·c`; for `b < 0`, `λ_{n−1}(G, a, b) ≥ / > `
/// the same expression, where `c` is the term subtracted in the matching
/// `b = 1` threshold.
pub fn check_co3_general(
    g: &Graph,
    k: usize,
    a: f64,
    b: f64,
    target: GeneralTarget,
    opts: CheckOptions,
) -> Verdict {
    let positive = b > 0.0;
    let (theorem, claim) = match (target, positive) {
        (GeneralTarget::Tau, true) => (TheoremId::TauAbI, Claim::Tau(k)),
        (GeneralTarget::Tau, false) => (TheoremId::TauAbIi, Claim::Tau(k)),
        (_, true) => (TheoremId::Co3_2I, Claim::Kappa(k)),
        (_, false) => (TheoremId::Co3_2Ii, Claim::Kappa(k)),
    };
    let kind = match MatrixKind::new(a, b) {
        Ok(kind) => kind,
        Err(e) => return Verdict::inapplicable(theorem, claim, e.to_string()),
    };
    let min_delta = match target {
        GeneralTarget::Tau => 2 * k,
        _ => k,
    };
    let (delta, girth) = match structure(g, k, min_delta) {
        Ok(s) => s,
        Err(reason) => return Verdict::inapplicable(theorem, claim, reason),
    };
    let n1 = match bounds::n1_star(delta, girth) {
        Ok(n1) => n1,
        Err(e) => return Verdict::inapplicable(theorem, claim, e.to_string()),
    };
    let k64 = k as u64;
    let term = match target {
        GeneralTarget::Tau => (2 * k64 - 1) as f64 / n1 as f64,
        GeneralTarget::KappaWeak => (2 * (k64 - 1)) as f64 / n1 as f64,
        GeneralTarget::KappaStrong => {
            let n = g.n() as u64;
            if n <= n1 {
                return Verdict::inapplicable(
                    theorem,
                    claim,
                    format!("order n = {n} does not exceed n1* = {n1}"),
                );
            }
            match ((k64 - 1).checked_mul(n), n1.checked_mul(n - n1)) {
                (Some(num), Some(den)) => num as f64 / den as f64,
                _ => return Verdict::inapplicable(theorem, claim, Error::Overflow("threshold").to_string()),
            }
        }
    };
    let threshold = (a + b) * delta as f64 - b * term;
    let strict = target != GeneralTarget::KappaStrong;
    let eval = if positive {
        Evaluation::upper(lambda_i(g, kind, 2).expect("n >= 2"), threshold, strict)
    } else {
        Evaluation::lower(lambda_i(g, kind, g.n() - 1).expect("n >= 2"), threshold, strict)
    };
    Verdict::evaluated(theorem, claim, g, eval, opts)
}

/// Bipartite graphs: `λ₂(G) < δ − (k−1)/δ` gives `κ′ ≥ k`.
pub fn check_co3_5(g: &Graph, k: usize, opts: CheckOptions) -> Verdict {
    let theorem = TheoremId::Co3_5;
    let claim = Claim::Kappa(k);
    if !is_bipartite(g) {
        return Verdict::inapplicable(theorem, claim, "graph is not bipartite");
    }
    let (delta, _) = match structure(g, k, k) {
        Ok(s) => s,
        Err(reason) => return Verdict::inapplicable(theorem, claim, reason),
    };
    let threshold = delta as f64 - (k - 1) as f64 / delta as f64;
    debug_assert_eq!(
        Ok(threshold),
        bounds::kappa_threshold_weak(delta, k as u64, 4, 0.0)
    );
    let eval = Evaluation::upper(lambda2(g, 0.0), threshold, true);
    Verdict::evaluated(theorem, claim, g, eval, opts)
}

/// Parameters for dispatching by [`TheoremId`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CheckParams {
    pub k: usize,
    /// Shift `a`; ignored by conditions with a fixed matrix.
    pub a: f64,
    /// Coefficient `b` of `A`, used by the general `(a, b)` conditions.
    pub b: f64,
}

impl Default for CheckParams {
    fn default() -> Self {
        CheckParams { k: 2, a: 0.0, b: 1.0 }
    }
}

/// Runs the checker for `theorem`. The general `(a, b)` ids use the sign
/// of `params.b` they name (an opposite sign is an error); `CO3_2_*`
/// checks the strong form. Lemmas have no graph-level verdict.
pub fn check_theorem(
    theorem: TheoremId,
    g: &Graph,
    params: CheckParams,
    opts: CheckOptions,
) -> Result<Verdict> {
    let CheckParams { k, a, b } = params;
    let general = |target, want_positive: bool| {
        if (b > 0.0) != want_positive {
            return Err(domain(format!(
                "{theorem} needs b {} 0, got b = {b}",
                if want_positive { ">" } else { "<" }
            )));
        }
        Ok(check_co3_general(g, k, a, b, target, opts))
    };
    crate::spectral::check_dense_order(g.n())?;
    Ok(match theorem {
        TheoremId::Main1I => check_main1(g, k, a, Main1Variant::Strong, opts),
        TheoremId::Main1Ii => check_main1(g, k, a, Main1Variant::Weak, opts),
        TheoremId::Main2 => check_main2(g, k, a, opts),
        TheoremId::Cor2I => check_cor2(g, k, StandardForm::Adjacency, opts),
        TheoremId::Cor2Ii => check_cor2(g, k, StandardForm::Laplacian, opts),
        TheoremId::Cor2Iii => check_cor2(g, k, StandardForm::Signless, opts),
        TheoremId::Co3_2I => general(GeneralTarget::KappaStrong, true)?,
        TheoremId::Co3_2Ii => general(GeneralTarget::KappaStrong, false)?,
        TheoremId::Co3_3I => check_co3_3(g, k, StandardForm::Adjacency, opts),
        TheoremId::Co3_3Ii => check_co3_3(g, k, StandardForm::Laplacian, opts),
        TheoremId::Co3_3Iii => check_co3_3(g, k, StandardForm::Signless, opts),
        TheoremId::Co3_5 => check_co3_5(g, k, opts),
        TheoremId::TauAbI => general(GeneralTarget::Tau, true)?,
        TheoremId::TauAbIi => general(GeneralTarget::Tau, false)?,
        TheoremId::Lemma3_1 | TheoremId::Lemma4_1 => {
            return Err(domain(format!("{theorem} is a lemma; use its dedicated checker")))
        }
    })
}
