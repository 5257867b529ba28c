//! Simple undirected graphs and the combinatorial quantities the spectral
//! checks are built on: girth, degrees, cuts, induced subgraphs.
//!
//! Vertices are dense indices `0..n`. A [`Graph`] is an immutable value;
//! every operation that "modifies" a graph returns a new one.

mod edgelist;
mod graph6;

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize, Serializer};

use crate::error::{domain, Error, Result};

pub use edgelist::{parse_edge_list, parse_edge_list_compacted, to_edge_list};
pub use graph6::{parse_graph6, to_graph6};

/// An undirected edge stored with `u < v`.
pub type Edge = (usize, usize);

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("m", &self.m)
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list, rejecting self-loops, parallel
    /// edges and out-of-range endpoints.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        let mut m = 0;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Validation(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::Validation(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
            m += 1;
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = (u.min(w[0]), u.max(w[0]));
                return Err(Error::Validation(format!("duplicate edge ({a}, {b})")));
            }
        }
        Ok(Graph { adj, m })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.m);
        for (u, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    /// Minimum degree, 0 for the empty vertex set.
    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_regular(&self) -> bool {
        self.min_degree() == self.max_degree()
    }

    pub fn degree_stats(&self) -> Result<DegreeStats> {
        degree_stats(self)
    }

    /// Vertex adjacency as bitmasks; only meaningful for `n <= 64`.
    pub(crate) fn adjacency_masks(&self) -> Vec<u64> {
        debug_assert!(self.n() <= 64);
        self.adj
            .iter()
            .map(|list| list.iter().fold(0u64, |acc, &v| acc | (1u64 << v)))
            .collect()
    }
}

/// A set of vertices of some graph, kept sorted and duplicate-free.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    /// Validates members against the vertex count `n`. Duplicates are an error.
    pub fn new(members: impl IntoIterator<Item = usize>, n: usize) -> Result<Self> {
        let mut v: Vec<usize> = members.into_iter().collect();
        v.sort_unstable();
        if v.windows(2).any(|w| w[0] == w[1]) {
            return Err(domain("vertex set contains duplicates"));
        }
        if let Some(&last) = v.last() {
            if last >= n {
                return Err(domain(format!("vertex {last} out of range 0..{n}")));
            }
        }
        Ok(VertexSet(v))
    }

    /// Members of the bitmask `mask` (bit i = vertex i).
    pub fn from_mask(mask: u64) -> Self {
        VertexSet((0..64).filter(|i| mask >> i & 1 == 1).collect())
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// Membership indicator over `0..n`.
    pub fn indicator(&self, n: usize) -> Vec<bool> {
        let mut ind = vec![false; n];
        for &v in &self.0 {
            ind[v] = true;
        }
        ind
    }

    pub fn complement(&self, n: usize) -> VertexSet {
        let ind = self.indicator(n);
        VertexSet((0..n).filter(|&v| !ind[v]).collect())
    }
}

/// Ordered blocks that partition `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    blocks: Vec<VertexSet>,
}

impl Partition {
    pub fn new(blocks: Vec<VertexSet>, n: usize) -> Result<Self> {
        let mut seen = vec![false; n];
        for block in &blocks {
            if block.is_empty() {
                return Err(domain("partition has an empty block"));
            }
            for &v in block.members() {
                if v >= n {
                    return Err(domain(format!("vertex {v} out of range 0..{n}")));
                }
                if seen[v] {
                    return Err(domain(format!("vertex {v} appears in two blocks")));
                }
                seen[v] = true;
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(domain(format!("vertex {v} is not covered by the partition")));
        }
        Ok(Partition { blocks })
    }

    /// Builds a partition from a block label per vertex. Blocks are ordered
    /// by first appearance of their label.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut index_of = std::collections::HashMap::new();
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (v, &label) in labels.iter().enumerate() {
            let idx = *index_of.entry(label).or_insert_with(|| {
                blocks.push(Vec::new());
                blocks.len() - 1
            });
            blocks[idx].push(v);
        }
        Partition {
            blocks: blocks.into_iter().map(VertexSet).collect(),
        }
    }

    pub fn singletons(n: usize) -> Self {
        Partition {
            blocks: (0..n).map(|v| VertexSet(vec![v])).collect(),
        }
    }

    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Block index of every vertex.
    pub fn labels(&self, n: usize) -> Vec<usize> {
        let mut labels = vec![usize::MAX; n];
        for (i, b) in self.blocks.iter().enumerate() {
            for &v in b.members() {
                labels[v] = i;
            }
        }
        labels
    }
}

/// Shortest cycle length, or `Infinite` for forests.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Infinite => None,
        }
    }
}

impl PartialOrd for Girth {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Girth {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use std::cmp::Ordering::*;
        match (self, other) {
            (Girth::Finite(a), Girth::Finite(b)) => a.cmp(b),
            (Girth::Finite(_), Girth::Infinite) => Less,
            (Girth::Infinite, Girth::Finite(_)) => Greater,
            (Girth::Infinite, Girth::Infinite) => Equal,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("infinite"),
        }
    }
}

// JSON form: an integer, or the string "infinite".
impl Serialize for Girth {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Girth::Finite(g) => s.serialize_u64(*g as u64),
            Girth::Infinite => s.serialize_str("infinite"),
        }
    }
}

/// Exact girth by breadth-first search from every root.
///
/// A non-tree edge `(u, w)` met while exploring from a root closes a closed
/// walk of length `dist[u] + dist[w] + 1` through the root; the minimum of
/// these over all roots is the girth. O(n·m).
pub fn girth(g: &Graph) -> Girth {
    let n = g.n();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        parent[root] = usize::MAX;
        queue.clear();
        queue.push_back(root);
        'bfs: while let Some(u) = queue.pop_front() {
            // Every cycle closed from here has length >= 2 * dist[u].
            if 2 * dist[u] >= best {
                break;
            }
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                    if best == 3 {
                        break 'bfs;
                    }
                }
            }
        }
        if best == 3 {
            break;
        }
    }
    if best == usize::MAX {
        Girth::Infinite
    } else {
        Girth::Finite(best)
    }
}

/// Girth by enumerating simple cycles with a depth-first search from each
/// lowest-indexed cycle vertex. Exponential; intended as an oracle for
/// small graphs.
pub fn brute_force_girth(g: &Graph) -> Result<Girth> {
    if g.n() > 24 {
        return Err(Error::Refused(format!(
            "cycle enumeration needs n <= 24, got {}",
            g.n()
        )));
    }
    fn extend(g: &Graph, start: usize, u: usize, len: usize, on_path: &mut [bool], best: &mut usize) {
        for &w in g.neighbors(u) {
            if w == start && len >= 3 {
                *best = (*best).min(len);
            } else if w > start && !on_path[w] && len + 1 < *best {
                on_path[w] = true;
                extend(g, start, w, len + 1, on_path, best);
                on_path[w] = false;
            }
        }
    }
    let mut best = usize::MAX;
    let mut on_path = vec![false; g.n()];
    for start in 0..g.n() {
        on_path[start] = true;
        extend(g, start, start, 1, &mut on_path, &mut best);
        on_path[start] = false;
    }
    Ok(if best == usize::MAX {
        Girth::Infinite
    } else {
        Girth::Finite(best)
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DegreeStats {
    pub min: usize,
    pub max: usize,
    pub average: f64,
}

pub fn degree_stats(g: &Graph) -> Result<DegreeStats> {
    if g.n() == 0 {
        return Err(domain("degree statistics need at least one vertex"));
    }
    Ok(DegreeStats {
        min: g.min_degree(),
        max: g.max_degree(),
        average: (2 * g.m()) as f64 / g.n() as f64,
    })
}

/// d(X): edges with exactly one end in `x`. `x` must be a non-empty proper subset.
pub fn boundary(g: &Graph, x: &VertexSet) -> Result<usize> {
    if x.is_empty() || x.len() >= g.n() {
        return Err(domain("boundary needs a non-empty proper vertex subset"));
    }
    check_members(g, x)?;
    let inside = x.indicator(g.n());
    Ok(x
        .members()
        .iter()
        .map(|&u| g.neighbors(u).iter().filter(|&&w| !inside[w]).count())
        .sum())
}

/// e(X, Y) for disjoint non-empty `x`, `y`.
pub fn cross_edges(g: &Graph, x: &VertexSet, y: &VertexSet) -> Result<usize> {
    if x.is_empty() || y.is_empty() {
        return Err(domain("cross_edges needs non-empty vertex sets"));
    }
    check_members(g, x)?;
    check_members(g, y)?;
    let in_y = y.indicator(g.n());
    if x.members().iter().any(|&v| in_y[v]) {
        return Err(domain("vertex sets overlap"));
    }
    Ok(x
        .members()
        .iter()
        .map(|&u| g.neighbors(u).iter().filter(|&&w| in_y[w]).count())
        .sum())
}

fn check_members(g: &Graph, x: &VertexSet) -> Result<()> {
    match x.members().last() {
        Some(&v) if v >= g.n() => Err(domain(format!("vertex {v} out of range 0..{}", g.n()))),
        _ => Ok(()),
    }
}

/// Subgraph induced by `x`, relabelled to `0..|x|` in increasing order.
pub fn induced(g: &Graph, x: &VertexSet) -> Result<Graph> {
    check_members(g, x)?;
    let mut new_index = vec![usize::MAX; g.n()];
    for (i, &v) in x.members().iter().enumerate() {
        new_index[v] = i;
    }
    let edges = g
        .edges()
        .into_iter()
        .filter(|&(u, v)| new_index[u] != usize::MAX && new_index[v] != usize::MAX)
        .map(|(u, v)| (new_index[u], new_index[v]));
    Graph::from_edges(x.len(), edges)
}

/// Copy of `g` without the listed edges. Every listed edge must exist and be
/// listed once.
pub fn delete_edges(g: &Graph, edges: &[Edge]) -> Result<Graph> {
    let mut removed: Vec<Edge> = edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    removed.sort_unstable();
    if removed.windows(2).any(|w| w[0] == w[1]) {
        return Err(domain("edge listed twice for deletion"));
    }
    if let Some(&(u, v)) = removed.iter().find(|&&(u, v)| !g.has_edge(u, v)) {
        return Err(domain(format!("edge ({u}, {v}) is not in the graph")));
    }
    let kept = g
        .edges()
        .into_iter()
        .filter(|e| removed.binary_search(e).is_err());
    Graph::from_edges(g.n(), kept)
}

/// Connected components, each sorted, ordered by smallest vertex.
pub fn components(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    let mut comp = vec![usize::MAX; n];
    let mut out = Vec::new();
    let mut stack = Vec::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut members = vec![s];
        comp[s] = id;
        stack.push(s);
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if comp[w] == usize::MAX {
                    comp[w] = id;
                    members.push(w);
                    stack.push(w);
                }
            }
        }
        members.sort_unstable();
        out.push(VertexSet(members));
    }
    out
}

/// Reachability from vertex 0; graphs with at most one vertex are connected.
pub fn is_connected(g: &Graph) -> bool {
    g.n() <= 1 || components(g).len() == 1
}

/// Proper 2-colouring if one exists.
pub fn bipartition(g: &Graph) -> Option<Vec<bool>> {
    let n = g.n();
    let mut color: Vec<Option<bool>> = vec![None; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(false);
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].unwrap();
            for &w in g.neighbors(u) {
                match color[w] {
                    None => {
                        color[w] = Some(!cu);
                        queue.push_back(w);
                    }
                    Some(cw) if cw == cu => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(color.into_iter().map(Option::unwrap).collect())
}

pub fn is_bipartite(g: &Graph) -> bool {
    bipartition(g).is_some()
}
