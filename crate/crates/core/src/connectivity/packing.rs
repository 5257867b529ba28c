//! Edge-disjoint spanning forests by graphic-matroid union.
//!
//! Edges are inserted one at a time into `k` forests. An edge that closes a
//! cycle in every forest starts a breadth-first search over exchanges: an
//! edge `x` may enter forest `i` by evicting any edge `y` on the `F_i` path
//! between its endpoints, after which `y` must be placed elsewhere. The
//! search ends when some labelled edge fits into a forest without closing a
//! cycle; the exchanges along that (shortest) path are then applied
//! together. If no such path exists the edge is rejected for good.
//!
//! When the final union is short of `k(n − 1)` edges, a search started from
//! every rejected edge labels a set `T` in which each forest restricted to
//! `T` spans `T`. The components of `(V, T)` then form a partition with
//! fewer than `k(t − 1)` crossing edges.

use std::collections::VecDeque;

use super::{PartitionCertificate, TreePacking};
use crate::graph::{components, Edge, Graph, Partition};

struct Forests {
    k: usize,
    edges: Vec<Edge>,
    owner: Vec<Option<usize>>,
    // adj[i][v]: (neighbour, edge id) pairs of forest i
    adj: Vec<Vec<Vec<(usize, usize)>>>,
    sizes: Vec<usize>,
}

impl Forests {
    fn new(g: &Graph, k: usize) -> Self {
        let edges = g.edges();
        let owner = vec![None; edges.len()];
        Forests {
            k,
            edges,
            owner,
            adj: vec![vec![Vec::new(); g.n()]; k],
            sizes: vec![0; k],
        }
    }

    fn insert(&mut self, e: usize, forest: usize) {
        let (u, v) = self.edges[e];
        self.adj[forest][u].push((v, e));
        self.adj[forest][v].push((u, e));
        self.owner[e] = Some(forest);
        self.sizes[forest] += 1;
    }

    fn remove(&mut self, e: usize) {
        let forest = self.owner[e].take().expect("edge is in a forest");
        let (u, v) = self.edges[e];
        self.adj[forest][u].retain(|&(_, id)| id != e);
        self.adj[forest][v].retain(|&(_, id)| id != e);
        self.sizes[forest] -= 1;
    }

    /// Edge ids on the path between the endpoints of `e` in forest `i`, or
    /// `None` if they lie in different trees.
    fn cycle_path(&self, i: usize, e: usize) -> Option<Vec<usize>> {
        let (src, dst) = self.edges[e];
        let adj = &self.adj[i];
        let n = adj.len();
        let mut via = vec![usize::MAX; n];
        let mut seen = vec![false; n];
        let mut stack = vec![src];
        seen[src] = true;
        while let Some(u) = stack.pop() {
            if u == dst {
                break;
            }
            for &(w, id) in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    via[w] = id;
                    stack.push(w);
                }
            }
        }
        if !seen[dst] {
            return None;
        }
        let mut path = Vec::new();
        let mut cur = dst;
        while cur != src {
            let id = via[cur];
            path.push(id);
            let (a, b) = self.edges[id];
            cur = if a == cur { b } else { a };
        }
        Some(path)
    }

    /// Breadth-first exchange search from `sources`. Returns `Ok(())` after
    /// applying an augmenting path, or `Err(labelled)` with the indicator of
    /// every labelled edge when none exists.
    fn search(&mut self, sources: &[usize]) -> Result<(), Vec<bool>> {
        let m = self.edges.len();
        let mut labelled = vec![false; m];
        let mut parent = vec![usize::MAX; m];
        let mut queue = VecDeque::new();
        for &s in sources {
            labelled[s] = true;
            queue.push_back(s);
        }
        while let Some(x) = queue.pop_front() {
            for i in 0..self.k {
                if self.owner[x] == Some(i) {
                    continue;
                }
                match self.cycle_path(i, x) {
                    None => {
                        self.augment(x, i, &parent);
                        return Ok(());
                    }
                    Some(path) => {
                        for y in path {
                            if !labelled[y] {
                                labelled[y] = true;
                                parent[y] = x;
                                queue.push_back(y);
                            }
                        }
                    }
                }
            }
        }
        Err(labelled)
    }

    /// `x` enters forest `target`; each edge's parent takes the slot the
    /// edge vacated, back to the unassigned source.
    fn augment(&mut self, mut x: usize, mut target: usize, parent: &[usize]) {
        loop {
            let vacated = self.owner[x];
            if vacated.is_some() {
                self.remove(x);
            }
            self.insert(x, target);
            let p = parent[x];
            if p == usize::MAX {
                break;
            }
            target = vacated.expect("only the source is unassigned");
            x = p;
        }
    }

    fn packing(&self) -> TreePacking {
        let mut forests = vec![Vec::new(); self.k];
        for (e, owner) in self.owner.iter().enumerate() {
            if let Some(i) = owner {
                forests[*i].push(self.edges[e]);
            }
        }
        TreePacking { k: self.k, forests }
    }
}

pub(crate) enum PackingOutcome {
    Packed(TreePacking),
    Deficient(PartitionCertificate),
}

/// Decides `τ(G) ≥ k` for connected `g` with `n >= 2`.
pub(crate) fn pack_spanning_trees(g: &Graph, k: usize) -> PackingOutcome {
    let n = g.n();
    let target = k * (n - 1);
    if g.m() < target {
        // Singletons: Σ d(Vᵢ) = 2m < 2k(n − 1).
        return PackingOutcome::Deficient(PartitionCertificate::evaluate(
            g,
            k,
            Partition::singletons(n),
        ));
    }
    let mut forests = Forests::new(g, k);
    let mut rejected = Vec::new();
    for e in 0..forests.edges.len() {
        if forests.search(&[e]).is_err() {
            rejected.push(e);
        }
        if forests.sizes.iter().sum::<usize>() == target {
            return PackingOutcome::Packed(forests.packing());
        }
    }
    let labelled = match forests.search(&rejected) {
        Err(labelled) => labelled,
        Ok(()) => unreachable!("a rejected edge stays dependent on the growing union"),
    };
    let spanned: Vec<Edge> = forests
        .edges
        .iter()
        .zip(&labelled)
        .filter(|(_, &l)| l)
        .map(|(&e, _)| e)
        .collect();
    let h = Graph::from_edges(n, spanned).expect("subgraph of a simple graph");
    let blocks = components(&h);
    let partition = Partition::new(blocks, n).expect("components partition the vertices");
    PackingOutcome::Deficient(PartitionCertificate::evaluate(g, k, partition))
}
