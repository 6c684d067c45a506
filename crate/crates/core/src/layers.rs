//! Layered neighborhoods `N^j(S)` of a seed set and audits of the
//! three-consecutive-layer inequalities used by the degree bounds.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Diameter, Graph};

/// `layers[j]` holds the vertices whose distance to the seed set is exactly
/// `j`, up to the last nonempty layer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LayerDecomposition {
    pub seed: Vec<usize>,
    pub layers: Vec<Vec<usize>>,
}

impl LayerDecomposition {
    /// Size of layer `j`, zero past the last layer.
    pub fn layer_size(&self, j: usize) -> usize {
        self.layers.get(j).map_or(0, Vec::len)
    }
}

fn normalize_set(g: &Graph, s: &[usize]) -> Result<Vec<usize>> {
    for &v in s {
        g.check_vertex(v)?;
    }
    let mut s = s.to_vec();
    s.sort_unstable();
    s.dedup();
    Ok(s)
}

/// Builds the layers with the recursive rule
/// `N^j = N(N^{j-1}) \ (N^{j-2} ∪ N^{j-1})`, starting from `N^0 = S`.
pub fn layer_decomposition(g: &Graph, s: &[usize]) -> Result<LayerDecomposition> {
    if s.is_empty() {
        return Err(Error::EmptySeed);
    }
    let seed = normalize_set(g, s)?;
    let n = g.vertex_count();
    let mut layers = vec![seed.clone()];
    let mut in_prev = vec![false; n];
    let mut in_prev2 = vec![false; n];
    for &v in &seed {
        in_prev[v] = true;
    }
    loop {
        let prev = layers.last().unwrap();
        let mut mark = vec![false; n];
        for &u in prev {
            for &w in g.neighbors(u) {
                if !in_prev[w] && !in_prev2[w] {
                    mark[w] = true;
                }
            }
        }
        let next: Vec<usize> = (0..n).filter(|&v| mark[v]).collect();
        if next.is_empty() {
            break;
        }
        in_prev2 = std::mem::replace(&mut in_prev, mark);
        layers.push(next);
    }
    Ok(LayerDecomposition { seed, layers })
}

/// A pair of distinct members of `s` at distance at most `k`, if any.
pub fn find_close_pair(g: &Graph, s: &[usize], k: usize) -> Result<Option<(usize, usize)>> {
    let s = normalize_set(g, s)?;
    for &u in &s {
        let dist = g.bfs_bounded(&[u], k);
        if let Some(v) = s.iter().copied().find(|&v| v != u && dist[v].is_some()) {
            return Ok(Some((u.min(v), u.max(v))));
        }
    }
    Ok(None)
}

/// True when every two distinct members of `s` are more than `k` apart;
/// vertices in different components count as infinitely far.
pub fn is_k_independent(g: &Graph, s: &[usize], k: usize) -> Result<bool> {
    Ok(find_close_pair(g, s, k)?.is_none())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaRow {
    pub i: usize,
    pub prev_size: usize,
    pub size: usize,
    pub next_size: usize,
    /// `sum >= 3|S|`; `None` when `N^{i+1}(S)` is empty.
    pub holds_ineq1: Option<bool>,
    /// `sum >= (δ+1)|S|`; `None` when `δ < 2` or `N^{i+1}(S)` is empty.
    pub holds_ineq2: Option<bool>,
}

impl LemmaRow {
    pub fn sum(&self) -> usize {
        self.prev_size + self.size + self.next_size
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaAudit {
    pub k: usize,
    pub delta: usize,
    pub seed_size: usize,
    pub rows: Vec<LemmaRow>,
}

impl LemmaAudit {
    /// No audited row reports a violated inequality.
    pub fn all_hold(&self) -> bool {
        self.rows.iter().all(|r| r.holds_ineq1 != Some(false) && r.holds_ineq2 != Some(false))
    }
}

/// Evaluates both inequalities for every `i` in `3..=floor(k/2) - 1`.
///
/// Requires `s` to be `k`-independent in a connected `g` of diameter at
/// least `k + 1`.
pub fn check_lemma1(g: &Graph, s: &[usize], k: usize) -> Result<LemmaAudit> {
    if s.is_empty() {
        return Err(Error::EmptySeed);
    }
    if let Some((u, v)) = find_close_pair(g, s, k)? {
        return Err(Error::NotKIndependent { k, u, v });
    }
    match g.diameter() {
        Diameter::Infinite => return Err(Error::Disconnected),
        Diameter::Finite(d) if d < k + 1 => return Err(Error::DiameterTooSmall { diameter: d, required: k + 1 }),
        Diameter::Finite(_) => {}
    }
    let delta = g.degree_stats()?.min_degree;
    let decomposition = layer_decomposition(g, s)?;
    let seed_size = decomposition.seed.len();

    let rows = (3..k / 2)
        .map(|i| {
            let prev_size = decomposition.layer_size(i - 1);
            let size = decomposition.layer_size(i);
            let next_size = decomposition.layer_size(i + 1);
            let sum = prev_size + size + next_size;
            let reachable = next_size > 0;
            LemmaRow {
                i,
                prev_size,
                size,
                next_size,
                holds_ineq1: reachable.then_some(sum >= 3 * seed_size),
                holds_ineq2: (reachable && delta >= 2).then_some(sum >= (delta + 1) * seed_size),
            }
        })
        .collect();
    Ok(LemmaAudit { k, delta, seed_size, rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sizes(d: &LayerDecomposition) -> Vec<usize> {
        d.layers.iter().map(Vec::len).collect()
    }

    #[test]
    fn decomposition_examples() {
        let p6 = Graph::path(6);
        let d = layer_decomposition(&p6, &[0]).unwrap();
        assert_eq!(d.layers, (0..6).map(|v| vec![v]).collect::<Vec<_>>());

        let c6 = Graph::cycle(6).unwrap();
        assert_eq!(sizes(&layer_decomposition(&c6, &[0]).unwrap()), vec![1, 2, 2, 1]);

        let all: Vec<usize> = (0..6).collect();
        assert_eq!(layer_decomposition(&c6, &all).unwrap().layers, vec![all.clone()]);

        assert_eq!(layer_decomposition(&c6, &[]), Err(Error::EmptySeed));
        assert!(layer_decomposition(&c6, &[6]).is_err());
    }

    #[test]
    fn decomposition_stays_in_component() {
        let g = Graph::from_edge_list(5, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        let d = layer_decomposition(&g, &[0]).unwrap();
        assert_eq!(d.layers, vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn k_independence_examples() {
        let c6 = Graph::cycle(6).unwrap();
        for k in 0..5 {
            assert!(is_k_independent(&c6, &[2], k).unwrap());
        }
        for k in 1..6 {
            assert!(is_k_independent(&Graph::path(k + 2), &[0, k + 1], k).unwrap());
        }
        assert!(!is_k_independent(&c6, &[0, 3], 3).unwrap());
        assert!(is_k_independent(&c6, &[0, 3], 2).unwrap());
        assert!(is_k_independent(&c6, &[0, 1, 2], 0).unwrap());
        let two = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(is_k_independent(&two, &[0, 2], 100).unwrap());
    }

    #[test]
    fn audit_is_vacuous_for_small_k() {
        let p = Graph::path(12);
        for k in 1..=7 {
            let audit = check_lemma1(&p, &[0, 11], k).unwrap();
            assert!(audit.rows.is_empty(), "k = {k}");
        }
    }

    #[test]
    fn audit_path_hand_count() {
        let p12 = Graph::path(12);
        let audit = check_lemma1(&p12, &[0, 11], 10).unwrap();
        assert_eq!(audit.rows.iter().map(|r| r.i).collect::<Vec<_>>(), vec![3, 4]);
        let row = &audit.rows[0];
        assert_eq!((row.prev_size, row.size, row.next_size), (2, 2, 2));
        assert_eq!(row.holds_ineq1, Some(true));
        assert_eq!(row.holds_ineq2, None);
        assert!(audit.all_hold());
    }

    #[test]
    fn audit_cycle_checks_second_inequality() {
        let c = Graph::cycle(24).unwrap();
        let audit = check_lemma1(&c, &[0, 12], 10).unwrap();
        assert_eq!(audit.delta, 2);
        assert!(audit.rows.iter().all(|r| r.holds_ineq2 == Some(true)));
    }

    #[test]
    fn audit_preconditions() {
        let p12 = Graph::path(12);
        assert_eq!(check_lemma1(&p12, &[0, 5], 10), Err(Error::NotKIndependent { k: 10, u: 0, v: 5 }));
        assert_eq!(check_lemma1(&p12, &[0], 11), Err(Error::DiameterTooSmall { diameter: 11, required: 12 }));
        let two = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(check_lemma1(&two, &[0], 1), Err(Error::Disconnected));
    }
}
