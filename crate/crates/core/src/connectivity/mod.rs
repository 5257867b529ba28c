//! Exact edge-connectivity and spanning-tree packing, each with an
//! independent brute-force oracle for small graphs.

mod cut;
mod packing;
mod partition;

use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::graph::{components, delete_edges, is_connected, Edge, Graph, Partition};

pub use cut::{brute_force_edge_connectivity, edge_connectivity, MinCut, BRUTE_FORCE_CUT_MAX_N};
pub use partition::{nash_williams_oracle, NashWilliamsCheck, SetPartitions, PARTITION_ORACLE_MAX_N};

pub(crate) use cut::cut_size;
use packing::{pack_spanning_trees, PackingOutcome};

/// `k` pairwise edge-disjoint forests; spanning trees when certifying `τ ≥ k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreePacking {
    pub k: usize,
    pub forests: Vec<Vec<Edge>>,
}

impl TreePacking {
    /// Checks that the forests are edge-disjoint subgraphs of `g` and that
    /// each is a spanning tree.
    pub fn verify(&self, g: &Graph) -> std::result::Result<(), String> {
        if self.forests.len() != self.k {
            return Err(format!("expected {} forests, found {}", self.k, self.forests.len()));
        }
        let n = g.n();
        let mut used = std::collections::HashSet::new();
        for (i, forest) in self.forests.iter().enumerate() {
            if forest.len() != n.saturating_sub(1) {
                return Err(format!("forest {i} has {} edges, expected {}", forest.len(), n - 1));
            }
            let mut dsu = DisjointSets::new(n);
            for &(u, v) in forest {
                if !g.has_edge(u, v) {
                    return Err(format!("forest {i} uses non-edge ({u}, {v})"));
                }
                if !used.insert((u.min(v), u.max(v))) {
                    return Err(format!("edge ({u}, {v}) used twice"));
                }
                if !dsu.union(u, v) {
                    return Err(format!("forest {i} contains a cycle through ({u}, {v})"));
                }
            }
        }
        Ok(())
    }
}

/// A vertex partition with its Nash-Williams deficiency
/// `2k(t − 1) − Σ d(Vᵢ)`. Positive deficiency proves `τ < k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartitionCertificate {
    pub partition: Partition,
    pub deficiency: i64,
}

impl PartitionCertificate {
    pub(crate) fn evaluate(g: &Graph, k: usize, partition: Partition) -> Self {
        let deficiency = deficiency(g, k, &partition);
        PartitionCertificate { partition, deficiency }
    }

    /// Recomputes the deficiency and checks it is positive.
    pub fn verify(&self, g: &Graph, k: usize) -> std::result::Result<(), String> {
        let p = Partition::new(self.partition.blocks().to_vec(), g.n())
            .map_err(|e| format!("invalid partition: {e}"))?;
        let actual = deficiency(g, k, &p);
        if actual != self.deficiency {
            return Err(format!("stated deficiency {} but actual {actual}", self.deficiency));
        }
        if actual <= 0 {
            return Err(format!("deficiency {actual} does not certify tau < {k}"));
        }
        Ok(())
    }
}

fn deficiency(g: &Graph, k: usize, p: &Partition) -> i64 {
    let labels = p.labels(g.n());
    let crossing = g
        .edges()
        .iter()
        .filter(|&&(u, v)| labels[u] != labels[v])
        .count() as i64;
    2 * k as i64 * (p.len() as i64 - 1) - 2 * crossing
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PackingEvidence {
    Packing(TreePacking),
    Certificate(PartitionCertificate),
}

impl PackingEvidence {
    /// Re-checks the evidence from scratch; `answer` is the claimed verdict.
    pub fn verify(&self, g: &Graph, k: usize, answer: bool) -> std::result::Result<(), String> {
        match (self, answer) {
            (PackingEvidence::Packing(p), true) if p.k == k => p.verify(g),
            (PackingEvidence::Certificate(c), false) => c.verify(g, k),
            _ => Err("evidence does not match the answer".into()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TauDecision {
    pub answer: bool,
    pub evidence: PackingEvidence,
}

fn decide(g: &Graph, k: usize, canonicalize: bool) -> Result<TauDecision> {
    if k == 0 {
        return Err(domain("k must be positive"));
    }
    let n = g.n();
    if n <= 1 {
        return Ok(TauDecision {
            answer: true,
            evidence: PackingEvidence::Packing(TreePacking {
                k,
                forests: vec![Vec::new(); k],
            }),
        });
    }
    let comps = components(g);
    let outcome = if comps.len() > 1 {
        PackingOutcome::Deficient(PartitionCertificate::evaluate(
            g,
            k,
            Partition::new(comps, n).expect("components partition the vertices"),
        ))
    } else {
        pack_spanning_trees(g, k)
    };
    let decision = match outcome {
        PackingOutcome::Packed(p) => TauDecision {
            answer: true,
            evidence: PackingEvidence::Packing(p),
        },
        PackingOutcome::Deficient(mut cert) => {
            if canonicalize && n <= PARTITION_ORACLE_MAX_N {
                let oracle = nash_williams_oracle(g, k)?;
                debug_assert!(!oracle.holds);
                cert = oracle.worst;
            }
            TauDecision {
                answer: false,
                evidence: PackingEvidence::Certificate(cert),
            }
        }
    };
    debug_assert_eq!(decision.evidence.verify(g, k, decision.answer), Ok(()));
    Ok(decision)
}

/// Decides `τ(G) ≥ k` with checkable evidence: `k` edge-disjoint spanning
/// trees, or a partition of positive deficiency. Disconnected graphs get
/// their component partition; for `n ≤ 12` negative certificates are
/// replaced by the exhaustive oracle's worst partition.
pub fn tau_at_least(g: &Graph, k: usize) -> Result<TauDecision> {
    decide(g, k, true)
}

/// τ(G): the largest `k` with `k` edge-disjoint spanning trees, searched
/// upwards from 1 and capped by `⌊m/(n − 1)⌋`. Zero for disconnected
/// graphs; graphs with fewer than two vertices also report 0.
pub fn tau(g: &Graph) -> usize {
    let n = g.n();
    if n <= 1 || !is_connected(g) {
        return 0;
    }
    let cap = g.m() / (n - 1);
    let mut best = 0;
    for k in 1..=cap {
        match decide(g, k, false) {
            Ok(d) if d.answer => best = k,
            _ => break,
        }
    }
    best
}

/// Outcome of checking `κ′(G) ≥ 2k ⟺ ∀X ⊆ E, |X| ≤ k: τ(G − X) ≥ k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatlinLaiShaoCheck {
    pub kappa_prime: usize,
    /// Left side: `κ′ ≥ 2k`.
    pub connectivity_side: bool,
    /// Right side: every deletion of at most `k` edges keeps `τ ≥ k`.
    pub deletion_side: bool,
    pub equiv_holds: bool,
    /// When the sides disagree: a deletion set that kills the packing, or
    /// the edges of a cut smaller than `2k`.
    pub counterexample: Option<Vec<Edge>>,
}

pub const CATLIN_MAX_N: usize = 8;
pub const CATLIN_MAX_M: usize = 16;
pub const CATLIN_MAX_K: usize = 2;

/// Exhaustive check of the edge-connectivity / tree-packing equivalence
/// over every edge subset of size at most `k`. Guards: `n ≤ 8`, `m ≤ 16`,
/// `k ≤ 2`.
pub fn check_catlin_lai_shao(g: &Graph, k: usize) -> Result<CatlinLaiShaoCheck> {
    if k == 0 {
        return Err(domain("k must be positive"));
    }
    if g.n() > CATLIN_MAX_N || g.m() > CATLIN_MAX_M || k > CATLIN_MAX_K {
        return Err(Error::Refused(format!(
            "exhaustive deletion check needs n <= {CATLIN_MAX_N}, m <= {CATLIN_MAX_M}, \
             k <= {CATLIN_MAX_K}; got n={}, m={}, k={k}",
            g.n(),
            g.m()
        )));
    }
    let cut = edge_connectivity(g)?;
    let connectivity_side = cut.value >= 2 * k;
    let edges = g.edges();
    let mut failing: Option<Vec<Edge>> = None;
    'subsets: for size in 0..=k.min(edges.len()) {
        for subset in Combinations::new(edges.len(), size) {
            let removed: Vec<Edge> = subset.iter().map(|&i| edges[i]).collect();
            let h = delete_edges(g, &removed)?;
            if !decide(&h, k, false)?.answer {
                failing = Some(removed);
                break 'subsets;
            }
        }
    }
    let deletion_side = failing.is_none();
    let equiv_holds = connectivity_side == deletion_side;
    let counterexample = if equiv_holds {
        None
    } else if connectivity_side {
        failing
    } else {
        let side = cut.witness.indicator(g.n());
        Some(edges.iter().copied().filter(|&(u, v)| side[u] != side[v]).collect())
    };
    Ok(CatlinLaiShaoCheck {
        kappa_prime: cut.value,
        connectivity_side,
        deletion_side,
        equiv_holds,
        counterexample,
    })
}

/// k-subsets of `0..n` in lexicographic order.
struct Combinations {
    n: usize,
    idx: Vec<usize>,
    first: bool,
    done: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            idx: (0..k).collect(),
            first: true,
            done: k > n,
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        if self.first {
            self.first = false;
            return Some(self.idx.clone());
        }
        let k = self.idx.len();
        let i = (0..k).rev().find(|&i| self.idx[i] < self.n - k + i)?;
        self.idx[i] += 1;
        for j in i + 1..k {
            self.idx[j] = self.idx[j - 1] + 1;
        }
        Some(self.idx.clone())
    }
}

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}
