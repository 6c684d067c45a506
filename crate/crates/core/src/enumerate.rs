//! Exhaustive enumeration of small graphs up to isomorphism.
//!
//! Graphs on `n` vertices are grown from those on `n - 1` by adding a vertex
//! with every possible neighborhood, then deduplicated by a canonical code:
//! the maximum upper-triangle bit string over all relabelings that respect
//! an equitable degree-refined partition.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order supported; the canonical code packs the upper triangle
/// into a `u64`.
pub const MAX_ENUMERATION_ORDER: usize = 10;

fn adjacency_rows(g: &Graph) -> Vec<u16> {
    (0..g.vertex_count()).map(|v| g.neighbors(v).iter().fold(0u16, |m, &w| m | (1 << w))).collect()
}

/// Color classes after refining by degree until stable, listed in a
/// labeling-independent order.
fn refined_cells(rows: &[u16]) -> Vec<Vec<usize>> {
    let n = rows.len();
    let mut color: Vec<usize> = vec![0; n];
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = (0..n).filter(|&w| rows[v] >> w & 1 == 1).map(|w| color[w]).collect();
                nb.sort_unstable();
                (color[v], nb)
            })
            .collect();
        let mut distinct = signatures.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = signatures.iter().map(|s| distinct.binary_search(s).unwrap()).collect();
        let stable = distinct.len() == color.iter().collect::<HashSet<_>>().len();
        color = next;
        if stable {
            break;
        }
    }
    let classes = color.iter().max().map_or(0, |&m| m + 1);
    let mut cells = vec![Vec::new(); classes];
    for v in 0..n {
        cells[color[v]].push(v);
    }
    cells
}

fn code_of(rows: &[u16], order: &[usize]) -> u64 {
    let n = order.len();
    let mut code = 0u64;
    for j in 1..n {
        for i in 0..j {
            code = code << 1 | u64::from(rows[order[i]] >> order[j] & 1);
        }
    }
    code
}

fn best_code(rows: &[u16], cells: &[Vec<usize>], cell: usize, order: &mut Vec<usize>, pool: &mut Vec<usize>, best: &mut u64) {
    if pool.is_empty() {
        if cell + 1 >= cells.len() {
            *best = (*best).max(code_of(rows, order));
        } else {
            let mut next = cells[cell + 1].clone();
            best_code(rows, cells, cell + 1, order, &mut next, best);
        }
        return;
    }
    for i in 0..pool.len() {
        let v = pool.swap_remove(i);
        order.push(v);
        best_code(rows, cells, cell, order, pool, best);
        order.pop();
        pool.push(v);
        let last = pool.len() - 1;
        pool.swap(i, last);
    }
}

/// Isomorphism-invariant code; equal codes mean isomorphic graphs.
pub fn canonical_code(g: &Graph) -> Result<u64> {
    let n = g.vertex_count();
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::SizeCap { what: "canonical code", limit: MAX_ENUMERATION_ORDER, n, hint: "" });
    }
    if n == 0 {
        return Ok(0);
    }
    let rows = adjacency_rows(g);
    let cells = refined_cells(&rows);
    let mut best = 0;
    let mut pool = cells[0].clone();
    best_code(&rows, &cells, 0, &mut Vec::with_capacity(n), &mut pool, &mut best);
    Ok(best)
}

fn from_code(n: usize, code: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = n * n.saturating_sub(1) / 2;
    for j in 1..n {
        for i in 0..j {
            bit -= 1;
            if code >> bit & 1 == 1 {
                edges.push((i, j));
            }
        }
    }
    Graph::from_valid_edges(n, edges)
}

/// One representative of every isomorphism class of graphs on `n`
/// vertices, in increasing canonical-code order.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::SizeCap { what: "graph enumeration", limit: MAX_ENUMERATION_ORDER, n, hint: "" });
    }
    let mut level: Vec<Graph> = vec![Graph::empty(0)];
    for m in 1..=n {
        let mut seen = HashSet::new();
        for g in &level {
            let base: Vec<(usize, usize)> = g.edges().collect();
            for mask in 0u32..(1 << (m - 1)) {
                let mut edges = base.clone();
                edges.extend((0..m - 1).filter(|&u| mask >> u & 1 == 1).map(|u| (u, m - 1)));
                seen.insert(canonical_code(&Graph::from_valid_edges(m, edges))?);
            }
        }
        let mut codes: Vec<u64> = seen.into_iter().collect();
        codes.sort_unstable();
        level = codes.into_iter().map(|c| from_code(m, c)).collect();
    }
    Ok(level)
}

/// The connected members of [`all_graphs`].
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(all_graphs(n)?.into_iter().filter(Graph::is_connected).collect())
}
