//! Distance-k colorings: proper colorings of `G^k`.

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::power::power_adjacency;

/// Largest graph the exact colorer accepts.
pub const EXACT_COLORING_CAP: usize = 30;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColoringResult {
    pub num_colors: usize,
    /// `assignment[v]` is the color of vertex `v`, in `0..num_colors`.
    pub assignment: Vec<usize>,
    pub exact: bool,
}

impl ColoringResult {
    /// True when every two vertices within distance `k` differ in color.
    pub fn is_proper_distance_coloring(&self, g: &Graph, k: usize) -> bool {
        let adj = power_adjacency(g, k);
        self.assignment.len() == g.vertex_count()
            && adj.iter().enumerate().all(|(u, row)| row.ones().all(|v| self.assignment[u] != self.assignment[v]))
    }
}

/// Saturation-ordered greedy coloring of `G^k`: repeatedly colors the vertex
/// seeing the most distinct colors (ties by higher degree, then lower id)
/// with the smallest free color. Uses at most `Δ(G^k) + 1` colors.
pub fn chi_k_greedy(g: &Graph, k: usize) -> Result<ColoringResult> {
    if k < 1 {
        return Err(Error::invalid("distance coloring needs k >= 1"));
    }
    let adj = power_adjacency(g, k);
    let assignment = dsatur_greedy(&adj);
    let num_colors = assignment.iter().map(|&c| c + 1).max().unwrap_or(0);
    Ok(ColoringResult { num_colors, assignment, exact: false })
}

/// Minimum coloring of `G^k` by DSATUR branch and bound, seeded with a
/// greedy clique as lower bound and fixed colors on that clique.
pub fn chi_k_exact(g: &Graph, k: usize) -> Result<ColoringResult> {
    if k < 1 {
        return Err(Error::invalid("distance coloring needs k >= 1"));
    }
    let n = g.vertex_count();
    if n > EXACT_COLORING_CAP {
        return Err(Error::SizeCap {
            what: "exact distance coloring",
            limit: EXACT_COLORING_CAP,
            n,
            hint: "; use the greedy colorer for larger graphs",
        });
    }
    let adj = power_adjacency(g, k);
    let best = dsatur_greedy(&adj);
    let upper = best.iter().map(|&c| c + 1).max().unwrap_or(0);
    let clique = greedy_clique(&adj);

    let mut search = ColorSearch {
        adj: &adj,
        colors: vec![None; n],
        best_count: upper,
        best,
        lower: clique.len(),
    };
    if search.lower < search.best_count {
        for (c, &v) in clique.iter().enumerate() {
            search.colors[v] = Some(c);
        }
        search.extend(clique.len(), n - clique.len());
    }
    Ok(ColoringResult { num_colors: search.best_count, assignment: search.best, exact: true })
}

fn saturation(adj: &[FixedBitSet], colors: &[Option<usize>], v: usize) -> usize {
    let mut seen = 0u64;
    let mut extra = FixedBitSet::new();
    for w in adj[v].ones() {
        if let Some(c) = colors[w] {
            if c < 64 {
                seen |= 1 << c;
            } else {
                extra.grow_and_insert(c);
            }
        }
    }
    seen.count_ones() as usize + extra.count_ones(..)
}

/// Uncolored vertex with maximum saturation, then maximum degree, then
/// minimum id.
fn pick_vertex(adj: &[FixedBitSet], colors: &[Option<usize>]) -> Option<usize> {
    (0..adj.len())
        .filter(|&v| colors[v].is_none())
        .max_by_key(|&v| (saturation(adj, colors, v), adj[v].count_ones(..), std::cmp::Reverse(v)))
}

fn used_by_neighbors(adj: &[FixedBitSet], colors: &[Option<usize>], v: usize, limit: usize) -> Vec<bool> {
    let mut used = vec![false; limit];
    for w in adj[v].ones() {
        if let Some(c) = colors[w] {
            if c < limit {
                used[c] = true;
            }
        }
    }
    used
}

fn dsatur_greedy(adj: &[FixedBitSet]) -> Vec<usize> {
    let n = adj.len();
    let mut colors = vec![None; n];
    while let Some(v) = pick_vertex(adj, &colors) {
        let used = used_by_neighbors(adj, &colors, v, n + 1);
        colors[v] = used.iter().position(|&u| !u);
    }
    colors.into_iter().map(Option::unwrap).collect()
}

/// Largest clique found by growing greedily (by residual degree, then id)
/// from every start vertex.
fn greedy_clique(adj: &[FixedBitSet]) -> Vec<usize> {
    let mut best = Vec::new();
    for start in 0..adj.len() {
        let mut clique = vec![start];
        let mut cand = adj[start].clone();
        while !cand.is_clear() {
            let v = cand
                .ones()
                .max_by_key(|&v| (adj[v].intersection_count(&cand), std::cmp::Reverse(v)))
                .unwrap();
            clique.push(v);
            cand.intersect_with(&adj[v]);
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best
}

struct ColorSearch<'a> {
    adj: &'a [FixedBitSet],
    colors: Vec<Option<usize>>,
    best: Vec<usize>,
    best_count: usize,
    lower: usize,
}

impl ColorSearch<'_> {
    /// Returns true once a coloring meeting the lower bound is found.
    fn extend(&mut self, used: usize, remaining: usize) -> bool {
        if remaining == 0 {
            self.best_count = used;
            self.best = self.colors.iter().map(|c| c.unwrap()).collect();
            return self.best_count == self.lower;
        }
        let v = pick_vertex(self.adj, &self.colors).unwrap();
        let blocked = used_by_neighbors(self.adj, &self.colors, v, used + 1);
        // a fresh color is only worth trying if it still beats the incumbent
        let limit = if used + 1 < self.best_count { used + 1 } else { used };
        for c in 0..limit {
            if blocked[c] {
                continue;
            }
            self.colors[v] = Some(c);
            let next_used = used.max(c + 1);
            if next_used < self.best_count && self.extend(next_used, remaining - 1) {
                return true;
            }
        }
        self.colors[v] = None;
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn petersen() -> Graph {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (i + 5, (i + 2) % 5 + 5));
        Graph::from_valid_edges(10, outer.chain(spokes).chain(inner))
    }

    #[test]
    fn exact_examples() {
        for n in 1..7 {
            for k in 1..4 {
                assert_eq!(chi_k_exact(&Graph::complete(n), k).unwrap().num_colors, n);
            }
        }
        let p4 = chi_k_exact(&Graph::path(4), 2).unwrap();
        assert_eq!(p4.num_colors, 3);
        assert!(p4.exact);
        assert!(p4.is_proper_distance_coloring(&Graph::path(4), 2));

        let pet = petersen();
        assert_eq!(pet.degree_stats().unwrap().max_degree, 3);
        assert_eq!(chi_k_exact(&pet, 2).unwrap().num_colors, 10);
        assert_eq!(chi_k_exact(&pet, 1).unwrap().num_colors, 3);
        assert_eq!(chi_k_exact(&Graph::cycle(5).unwrap(), 1).unwrap().num_colors, 3);
        assert_eq!(chi_k_exact(&Graph::cycle(6).unwrap(), 1).unwrap().num_colors, 2);
        // C_7 squared needs 4 colors: 7 vertices, α(C_7^2) = 2
        assert_eq!(chi_k_exact(&Graph::cycle(7).unwrap(), 2).unwrap().num_colors, 4);
    }

    #[test]
    fn greedy_examples() {
        let e = chi_k_greedy(&Graph::empty(5), 3).unwrap();
        assert_eq!(e.num_colors, 1);
        assert!(!e.exact);
        let g = petersen();
        for k in 1..4 {
            let r = chi_k_greedy(&g, k).unwrap();
            assert!(r.is_proper_distance_coloring(&g, k));
            assert!(r.num_colors >= chi_k_exact(&g, k).unwrap().num_colors);
        }
    }

    #[test]
    fn caps_and_parameters() {
        assert!(matches!(chi_k_exact(&Graph::path(31), 1), Err(Error::SizeCap { .. })));
        assert!(chi_k_greedy(&Graph::path(31), 1).is_ok());
        assert!(chi_k_exact(&Graph::path(3), 0).is_err());
        assert_eq!(chi_k_exact(&Graph::empty(0), 1).unwrap().num_colors, 0);
    }
}
