//! Global minimum edge cut.

use crate::error::{domain, Error, Result};
use crate::graph::{components, Graph, VertexSet};

/// Largest order accepted by [`brute_force_edge_connectivity`].
pub const BRUTE_FORCE_CUT_MAX_N: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinCut {
    pub value: usize,
    /// One side of a minimum cut; `d(witness) == value`.
    pub witness: VertexSet,
}

/// κ′(G) by Stoer–Wagner. Each phase runs a maximum-adjacency ordering that
/// starts from the lowest-indexed live super-vertex and breaks ties towards
/// the lower index, so the witness is reproducible. Disconnected graphs
/// return 0 with the component of vertex 0 as witness.
pub fn edge_connectivity(g: &Graph) -> Result<MinCut> {
    let n = g.n();
    if n < 2 {
        return Err(domain(format!("edge connectivity needs n >= 2, got {n}")));
    }
    let comps = components(g);
    if comps.len() > 1 {
        return Ok(MinCut {
            value: 0,
            witness: comps.into_iter().next().expect("at least one component"),
        });
    }

    let mut w = vec![0usize; n * n];
    for (u, v) in g.edges() {
        w[u * n + v] = 1;
        w[v * n + u] = 1;
    }
    // members[s]: original vertices merged into super-vertex s.
    let mut members: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    let mut alive: Vec<usize> = (0..n).collect();
    let mut best_value = usize::MAX;
    let mut best_side: Vec<usize> = Vec::new();

    let mut in_a = vec![false; n];
    let mut key = vec![0usize; n];
    while alive.len() > 1 {
        for &v in &alive {
            in_a[v] = false;
            key[v] = 0;
        }
        let mut prev = usize::MAX;
        let mut last = alive[0];
        for _ in 0..alive.len() {
            // Maximum key among vertices outside A; `alive` is sorted, so the
            // first maximum is the lowest index.
            let mut sel = usize::MAX;
            for &v in &alive {
                if !in_a[v] && (sel == usize::MAX || key[v] > key[sel]) {
                    sel = v;
                }
            }
            in_a[sel] = true;
            prev = last;
            last = sel;
            for &v in &alive {
                if !in_a[v] {
                    key[v] += w[sel * n + v];
                }
            }
        }
        let cut_of_phase = key[last];
        if cut_of_phase < best_value {
            best_value = cut_of_phase;
            best_side = members[last].clone();
        }
        // Merge `last` into `prev`.
        let moved = std::mem::take(&mut members[last]);
        members[prev].extend(moved);
        for &v in &alive {
            if v != prev && v != last {
                w[prev * n + v] += w[last * n + v];
                w[v * n + prev] = w[prev * n + v];
            }
        }
        alive.retain(|&v| v != last);
    }
    best_side.sort_unstable();
    Ok(MinCut {
        value: best_value,
        witness: VertexSet::new(best_side, n)?,
    })
}

/// κ′(G) as the minimum of d(X) over all non-empty proper X containing
/// vertex 0 (2^(n−1) − 1 sets). Refuses `n > 16`.
pub fn brute_force_edge_connectivity(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n < 2 {
        return Err(domain(format!("edge connectivity needs n >= 2, got {n}")));
    }
    if n > BRUTE_FORCE_CUT_MAX_N {
        return Err(Error::Refused(format!(
            "exhaustive cut enumeration needs n <= {BRUTE_FORCE_CUT_MAX_N}, got {n}"
        )));
    }
    let masks = g.adjacency_masks();
    let full = (1u64 << n) - 1;
    let mut best = usize::MAX;
    // Bit 0 always set: X and its complement give the same cut.
    for rest in 0..(1u64 << (n - 1)) - 1 {
        let x = 1 | (rest << 1);
        debug_assert!(x != full);
        best = best.min(cut_size(&masks, x));
    }
    Ok(best)
}

/// d(X) for a bitmask-encoded vertex set.
pub(crate) fn cut_size(masks: &[u64], x: u64) -> usize {
    let mut total = 0;
    let mut bits = x;
    while bits != 0 {
        let v = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        total += (masks[v] & !x).count_ones() as usize;
    }
    total
}
