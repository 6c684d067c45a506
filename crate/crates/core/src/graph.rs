//! Undirected simple graphs on dense vertex ids `0..n` and the elementary
//! metrics every other module builds on.

use std::collections::VecDeque;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Undirected simple graph. Neighbor lists are sorted and deduplicated, so
/// every traversal visits vertices in ascending id order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.vertex_count())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse; loops and out-of-range endpoints are rejected.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::EndpointOutOfRange { u, v, n });
            }
            if u == v {
                return Err(Error::Loop { v });
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adjacency })
    }

    /// Internal constructor for generators whose edges are valid by
    /// construction.
    pub(crate) fn from_valid_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let edges: Vec<_> = edges.into_iter().collect();
        Self::from_edge_list(n, &edges).expect("generator produced an invalid edge")
    }

    pub fn empty(n: usize) -> Self {
        Graph { adjacency: vec![Vec::new(); n] }
    }

    /// Path on `n` vertices `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        Self::from_valid_edges(n, (1..n).map(|v| (v - 1, v)))
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::invalid(format!("a cycle needs at least 3 vertices, got {n}")));
        }
        Ok(Self::from_valid_edges(n, (0..n).map(|v| (v, (v + 1) % n))))
    }

    pub fn complete(n: usize) -> Self {
        Self::from_valid_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        self.adjacency.iter().all(|list| list.len() + 1 == n)
    }

    pub(crate) fn check_vertex(&self, vertex: usize) -> Result<()> {
        if vertex < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex, n: self.vertex_count() })
        }
    }

    /// Single-source shortest path lengths.
    pub fn bfs_distances(&self, source: usize) -> Result<DistanceVector> {
        self.check_vertex(source)?;
        Ok(DistanceVector { source, dist: self.bfs_bounded(&[source], usize::MAX) })
    }

    /// Multi-source BFS that stops expanding past depth `max_depth`.
    pub(crate) fn bfs_bounded(&self, sources: &[usize], max_depth: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        let mut queue = VecDeque::new();
        for &s in sources {
            if dist[s].is_none() {
                dist[s] = Some(0);
                queue.push_back(s);
            }
        }
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            if du >= max_depth {
                continue;
            }
            for &w in &self.adjacency[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Largest pairwise distance. `Infinite` when disconnected; zero for
    /// graphs with at most one vertex.
    pub fn diameter(&self) -> Diameter {
        let mut best = 0;
        for s in 0..self.vertex_count() {
            for d in self.bfs_bounded(&[s], usize::MAX) {
                match d {
                    Some(d) => best = best.max(d),
                    None => return Diameter::Infinite,
                }
            }
        }
        Diameter::Finite(best)
    }

    pub fn degree_stats(&self) -> Result<DegreeStats> {
        let min_degree = (0..self.vertex_count()).map(|v| self.degree(v)).min().ok_or(Error::EmptyGraph)?;
        let max_degree = (0..self.vertex_count()).map(|v| self.degree(v)).max().unwrap();
        Ok(DegreeStats { min_degree, max_degree, is_regular: min_degree == max_degree })
    }

    /// Connected components, each sorted ascending, ordered by their
    /// smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.vertex_count()];
        let mut components = Vec::new();
        for start in 0..self.vertex_count() {
            if seen[start] {
                continue;
            }
            let mut component = Vec::new();
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(u) = stack.pop() {
                component.push(u);
                for &w in &self.adjacency[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            component.sort_unstable();
            components.push(component);
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// `t` disjoint copies; copy `c` occupies ids `c*n .. (c+1)*n`.
    pub fn disjoint_union(&self, t: usize) -> Result<Self> {
        if t == 0 {
            return Err(Error::invalid("disjoint union needs at least one copy"));
        }
        let n = self.vertex_count();
        let mut adjacency = Vec::with_capacity(n * t);
        for c in 0..t {
            for list in &self.adjacency {
                adjacency.push(list.iter().map(|&v| v + c * n).collect());
            }
        }
        Ok(Graph { adjacency })
    }

    /// Subgraph induced by `vertices` (sorted, distinct), relabelled to
    /// `0..vertices.len()` in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Self {
        let mut index = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let adjacency = vertices
            .iter()
            .map(|&v| {
                let mut list: Vec<usize> =
                    self.adjacency[v].iter().filter(|&&w| index[w] != usize::MAX).map(|&w| index[w]).collect();
                list.sort_unstable();
                list
            })
            .collect();
        Graph { adjacency }
    }
}

/// Distances from one source; `None` marks vertices in other components.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistanceVector {
    pub source: usize,
    pub dist: Vec<Option<usize>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DegreeStats {
    pub min_degree: usize,
    pub max_degree: usize,
    pub is_regular: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl Diameter {
    pub fn finite(self) -> Option<usize> {
        match self {
            Diameter::Finite(d) => Some(d),
            Diameter::Infinite => None,
        }
    }

    /// `diam >= bound`, with an infinite diameter exceeding everything.
    pub fn at_least(self, bound: usize) -> bool {
        self.finite().is_none_or(|d| d >= bound)
    }
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => f.write_str("infinite"),
        }
    }
}

impl Serialize for Diameter {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Diameter::Finite(d) => serializer.serialize_u64(*d as u64),
            Diameter::Infinite => serializer.serialize_str("infinite"),
        }
    }
}
