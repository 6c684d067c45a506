//! Graph powers and the k-independence number, computed as the independence
//! number of `G^k`.

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest graph the subset-enumeration oracle accepts.
pub const BRUTE_FORCE_CAP: usize = 30;

/// `G^k`: same vertices, `u ~ v` iff `1 <= d_G(u, v) <= k`.
pub fn graph_power(g: &Graph, k: usize) -> Result<Graph> {
    if k < 1 {
        return Err(Error::invalid("graph power needs k >= 1"));
    }
    let n = g.vertex_count();
    let mut edges = Vec::new();
    for u in 0..n {
        let dist = g.bfs_bounded(&[u], k);
        edges.extend((u + 1..n).filter(|&v| dist[v].is_some()).map(|v| (u, v)));
    }
    Ok(Graph::from_valid_edges(n, edges))
}

/// Adjacency of `G^k` as bitsets; `k = 0` yields the edgeless graph.
pub(crate) fn power_adjacency(g: &Graph, k: usize) -> Vec<FixedBitSet> {
    let n = g.vertex_count();
    (0..n)
        .map(|u| {
            let mut row = FixedBitSet::with_capacity(n);
            if k > 0 {
                for (v, d) in g.bfs_bounded(&[u], k).into_iter().enumerate() {
                    if v != u && d.is_some() {
                        row.insert(v);
                    }
                }
            }
            row
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Exact,
    BruteForce,
    Greedy,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveResult {
    pub alpha: usize,
    /// Sorted ascending.
    pub witness: Vec<usize>,
    pub method: Method,
    pub nodes_explored: u64,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct SolverOptions {
    /// Abort the branch and bound after this many search nodes.
    pub node_limit: Option<u64>,
}

/// Exact `α_k(G)` with no search budget.
pub fn alpha_k_exact(g: &Graph, k: usize) -> Result<SolveResult> {
    alpha_k_exact_with(g, k, &SolverOptions::default())
}

/// Exact `α_k(G)` by branch and bound on `G^k`.
///
/// Branches on a maximum-degree vertex of the residual graph (lowest id on
/// ties), include-branch first, and prunes with a greedy clique cover.
/// Degree-0 and degree-1 residual vertices are taken without branching.
/// Among optima of equal size the lexicographically smallest witness found
/// is kept.
pub fn alpha_k_exact_with(g: &Graph, k: usize, opts: &SolverOptions) -> Result<SolveResult> {
    let n = g.vertex_count();
    if k == 0 {
        return Ok(SolveResult { alpha: n, witness: (0..n).collect(), method: Method::Exact, nodes_explored: 0 });
    }
    let adj = power_adjacency(g, k);
    let mut search = MisSearch { adj: &adj, best: Vec::new(), nodes: 0, node_limit: opts.node_limit };
    let mut all = FixedBitSet::with_capacity(n);
    all.insert_range(..);
    let mut current = Vec::new();
    search.branch(all, &mut current)?;
    let mut witness = search.best;
    witness.sort_unstable();
    Ok(SolveResult { alpha: witness.len(), witness, method: Method::Exact, nodes_explored: search.nodes })
}

struct MisSearch<'a> {
    adj: &'a [FixedBitSet],
    best: Vec<usize>,
    nodes: u64,
    node_limit: Option<u64>,
}

impl MisSearch<'_> {
    fn branch(&mut self, mut cand: FixedBitSet, current: &mut Vec<usize>) -> Result<()> {
        self.nodes += 1;
        if let Some(limit) = self.node_limit {
            if self.nodes > limit {
                return Err(Error::NodeLimit { limit });
            }
        }
        let mark = current.len();
        let pivot = self.reduce(&mut cand, current);

        match pivot {
            None => self.offer(current),
            Some(v) if current.len() + self.clique_cover_bound(&cand, current.len()) > self.best.len() => {
                let mut with = cand.clone();
                with.difference_with(&self.adj[v]);
                with.remove(v);
                current.push(v);
                self.branch(with, current)?;
                current.pop();

                cand.remove(v);
                self.branch(cand, current)?;
            }
            Some(_) => {}
        }
        current.truncate(mark);
        Ok(())
    }

    /// Takes every residual vertex of degree 0 or 1 (lowest id first) and
    /// returns the branching vertex, or `None` once the residual is empty.
    fn reduce(&self, cand: &mut FixedBitSet, current: &mut Vec<usize>) -> Option<usize> {
        loop {
            let mut pivot: Option<(usize, usize)> = None;
            let mut forced = None;
            for v in cand.ones() {
                let deg = self.adj[v].intersection_count(cand);
                if deg <= 1 {
                    forced = Some(v);
                    break;
                }
                if pivot.is_none_or(|(_, d)| deg > d) {
                    pivot = Some((v, deg));
                }
            }
            match forced {
                Some(v) => {
                    current.push(v);
                    cand.difference_with(&self.adj[v]);
                    cand.remove(v);
                }
                None => return pivot.map(|(v, _)| v),
            }
        }
    }

    /// Number of cliques in a greedy cover of `cand`, stopping as soon as it
    /// can no longer prune.
    fn clique_cover_bound(&self, cand: &FixedBitSet, taken: usize) -> usize {
        let mut rest = cand.clone();
        let mut cliques = 0;
        while let Some(u) = rest.minimum() {
            rest.remove(u);
            let mut common = rest.clone();
            common.intersect_with(&self.adj[u]);
            while let Some(w) = common.minimum() {
                rest.remove(w);
                common.remove(w);
                common.intersect_with(&self.adj[w]);
            }
            cliques += 1;
            if taken + cliques > self.best.len() {
                break;
            }
        }
        cliques
    }

    fn offer(&mut self, current: &[usize]) {
        if current.len() < self.best.len() {
            return;
        }
        let mut sorted = current.to_vec();
        sorted.sort_unstable();
        if sorted.len() > self.best.len() || sorted < self.best {
            self.best = sorted;
        }
    }
}

/// Exhaustive oracle: scans every vertex subset of `G^k` and keeps the
/// largest independent one (lexicographically smallest among ties).
pub fn alpha_k_bruteforce(g: &Graph, k: usize) -> Result<SolveResult> {
    let n = g.vertex_count();
    if n > BRUTE_FORCE_CAP {
        return Err(Error::SizeCap { what: "brute-force α_k", limit: BRUTE_FORCE_CAP, n, hint: "" });
    }
    // Vertex v maps to bit n-1-v, so that among subsets of equal size the
    // numerically largest mask is the lexicographically smallest vertex list.
    let bit = |v: usize| 1u64 << (n - 1 - v);
    let adj: Vec<u64> = (0..n)
        .map(|u| {
            if k == 0 {
                return 0;
            }
            let dist = g.bfs_bounded(&[u], k);
            (0..n).filter(|&v| v != u && dist[v].is_some()).fold(0, |m, v| m | bit(v))
        })
        .collect();
    let adj_by_bit: Vec<u64> = (0..n).map(|b| adj[n - 1 - b]).collect();

    let mut best_mask = 0u64;
    let mut best_size = 0u32;
    let mut checked = 0u64;
    for mask in (0..(1u64 << n)).rev() {
        let size = mask.count_ones();
        if size <= best_size {
            continue;
        }
        checked += 1;
        let mut rest = mask;
        let mut independent = true;
        while rest != 0 {
            let b = rest.trailing_zeros() as usize;
            if adj_by_bit[b] & mask != 0 {
                independent = false;
                break;
            }
            rest &= rest - 1;
        }
        if independent {
            best_mask = mask;
            best_size = size;
        }
    }
    let witness: Vec<usize> = (0..n).filter(|&v| best_mask & bit(v) != 0).collect();
    Ok(SolveResult { alpha: witness.len(), witness, method: Method::BruteForce, nodes_explored: checked })
}

/// Greedy lower bound: scan vertices by ascending `G^k` degree (ties by id)
/// and keep each one farther than `k` from everything kept so far.
pub fn alpha_k_greedy(g: &Graph, k: usize) -> Result<SolveResult> {
    let n = g.vertex_count();
    let adj = power_adjacency(g, k);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (adj[v].count_ones(..), v));
    let mut blocked = FixedBitSet::with_capacity(n);
    let mut witness = Vec::new();
    for v in order {
        if !blocked.contains(v) {
            witness.push(v);
            blocked.insert(v);
            blocked.union_with(&adj[v]);
        }
    }
    witness.sort_unstable();
    Ok(SolveResult { alpha: witness.len(), witness, method: Method::Greedy, nodes_explored: n as u64 })
}
