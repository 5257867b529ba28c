//! Lemma-level inequalities, checked over explicit vertex subsets.

use serde::Serialize;

use crate::bounds::{finite_girth, n1_star};
use crate::connectivity::cut_size;
use crate::error::{domain, Error, Result};
use crate::graph::{boundary, cross_edges, girth, Graph, VertexSet};
use crate::spectral::{lambda_i, MatrixKind};

/// Largest order accepted by [`check_lemma3_1`].
pub const LEMMA3_1_MAX_N: usize = 16;

/// Relative tolerance of the `e(X, Y)²` comparison.
pub const LEMMA4_1_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Lemma31Check {
    pub delta: usize,
    pub girth: u64,
    pub n1_star: u64,
    /// Number of non-empty proper subsets examined.
    pub subsets_checked: u64,
    /// Subsets with `d(X) < δ`.
    pub small_cuts: u64,
    pub holds: bool,
    /// Sets with `d(X) < δ` and `|X| < n₁*`.
    pub violations: Vec<VertexSet>,
}

/// Exhaustively checks that every non-empty proper `X` with `d(X) < δ` has
/// `|X| ≥ n₁*(δ, g)`. Requires `n ≤ 16` and `δ ≥ 2`.
pub fn check_lemma3_1(g: &Graph) -> Result<Lemma31Check> {
    let n = g.n();
    if n > LEMMA3_1_MAX_N {
        return Err(Error::Refused(format!(
            "exhaustive subset check needs n <= {LEMMA3_1_MAX_N}, got {n}"
        )));
    }
    let delta = g.min_degree();
    if n == 0 || delta < 2 {
        return Err(Error::NotApplicable(format!("minimum degree {delta} < 2")));
    }
    let girth = finite_girth(girth(g))?;
    let n1 = n1_star(delta as u64, girth)?;
    let masks = g.adjacency_masks();
    let full = (1u64 << n) - 1;
    let mut small_cuts = 0;
    let mut violations = Vec::new();
    for x in 1..full {
        if cut_size(&masks, x) < delta {
            small_cuts += 1;
            if (x.count_ones() as u64) < n1 {
                violations.push(VertexSet::from_mask(x));
            }
        }
    }
    Ok(Lemma31Check {
        delta,
        girth,
        n1_star: n1,
        subsets_checked: full - 1,
        small_cuts,
        holds: violations.is_empty(),
        violations,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Lemma41Check {
    pub applicable: bool,
    /// `lhs ≥ rhs` up to tolerance; meaningful for every input, guaranteed
    /// only when applicable.
    pub inequality_holds: bool,
    /// `e(X, Y)²`.
    pub lhs: f64,
    /// `[(a+1)δ − d(X)/|X| − λ₂][(a+1)δ − d(Y)/|Y| − λ₂]·|X||Y|`.
    pub rhs: f64,
}

/// Checks `e(X,Y)² ≥ [(a+1)δ − d(X)/|X| − λ₂(G,a)][(a+1)δ − d(Y)/|Y| −
/// λ₂(G,a)]|X||Y|` for disjoint non-empty `X`, `Y`. Applicable when
/// `a ≥ −1` and `λ₂(G, a) ≤ (a+1)δ − max(d(X)/|X|, d(Y)/|Y|)`.
pub fn check_lemma4_1(g: &Graph, x: &VertexSet, y: &VertexSet, a: f64) -> Result<Lemma41Check> {
    if g.n() < 2 {
        return Err(domain("the lemma needs at least two vertices"));
    }
    MatrixKind::shifted(a).validate()?;
    let l2 = lambda_i(g, MatrixKind::shifted(a), 2)?;
    check_lemma4_1_with(g, x, y, a, l2)
}

/// [`check_lemma4_1`] with a precomputed `λ₂(G, a)`.
pub fn check_lemma4_1_with(
    g: &Graph,
    x: &VertexSet,
    y: &VertexSet,
    a: f64,
    lambda2: f64,
) -> Result<Lemma41Check> {
    let e = cross_edges(g, x, y)? as f64;
    let dx = boundary(g, x)? as f64 / x.len() as f64;
    let dy = boundary(g, y)? as f64 / y.len() as f64;
    let top = (a + 1.0) * g.min_degree() as f64;
    let applicable = a >= -1.0 && lambda2 <= top - dx.max(dy);
    let lhs = e * e;
    let rhs = (top - dx - lambda2) * (top - dy - lambda2) * x.len() as f64 * y.len() as f64;
    let inequality_holds = lhs >= rhs - LEMMA4_1_TOL * (1.0 + rhs.abs());
    Ok(Lemma41Check {
        applicable,
        inequality_holds,
        lhs,
        rhs,
    })
}
