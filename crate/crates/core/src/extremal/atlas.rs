use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::ExtremalError;
use crate::graph::{canonical_key, cartesian_product, delete_edge, identify_empty_pair, CanonKey, Graph};
use crate::vertex_set::Vertex;

/// Largest `t` accepted by [`generate_th_le`]. At `t = 5` the largest grid
/// has `2^16` operation subsets; `t = 6` would need `2^26`.
pub const MAX_ATLAS_T: usize = 5;

/// One grid shape of the characterization: `K_a □ K̄_{b+1}` with `a + b = t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharParams {
    pub t: usize,
    pub a: usize,
    pub b: usize,
}

impl CharParams {
    pub fn all(t: usize) -> Vec<CharParams> {
        (1..=t).map(|a| CharParams { t, a, b: t - a }).collect()
    }
}

/// `K_a □ K̄_{b+1}` with vertex `(row i, column j)` labeled `i (b+1) + j`;
/// columns induce `K_a`, rows are independent.
pub fn grid_graph(p: CharParams) -> Graph {
    let ka = Graph::from_edges(p.a, &(0..p.a).flat_map(|i| (i + 1..p.a).map(move |j| (i, j))).collect::<Vec<_>>())
        .expect("grid fits");
    let empty = Graph::new(p.b + 1).expect("grid fits");
    cartesian_product(&ka, &empty).expect("grid fits")
}

/// Vertices on the same row in adjacent columns.
fn empty_pairs(p: CharParams) -> Vec<(Vertex, Vertex)> {
    let w = p.b + 1;
    (0..p.a).flat_map(|i| (0..p.b).map(move |j| (i * w + j, i * w + j + 1))).collect()
}

/// Deletes `edges`, then identifies `pairs` one at a time, following each
/// original vertex through the relabelings.
fn apply(g: &Graph, edges: &[(Vertex, Vertex)], pairs: &[(Vertex, Vertex)]) -> Graph {
    let mut h = g.clone();
    for &(u, v) in edges {
        h = delete_edge(&h, u, v).expect("complete edge present");
    }
    let mut label: Vec<Vertex> = (0..g.order()).collect();
    for &(u, v) in pairs {
        let (x, y) = (label[u], label[v]);
        if x == y {
            continue;
        }
        h = identify_empty_pair(&h, x, y).expect("row vertices stay nonadjacent");
        let (keep, gone) = (x.min(y), x.max(y));
        for l in label.iter_mut() {
            if *l == gone {
                *l = keep;
            } else if *l > gone {
                *l -= 1;
            }
        }
    }
    h
}

/// Every graph obtained from some `K_a □ K̄_{b+1}` with `a + b = t` by
/// deleting complete edges and identifying empty pairs, up to isomorphism.
/// These are exactly the graphs with `th_H <= t`.
pub fn generate_th_le(t: usize) -> Result<BTreeSet<CanonKey>, ExtremalError> {
    if t == 0 || t > MAX_ATLAS_T {
        return Err(ExtremalError::AtlasRange { t, max: MAX_ATLAS_T });
    }
    let mut all = BTreeSet::new();
    for p in CharParams::all(t) {
        let g = grid_graph(p);
        let complete: Vec<(Vertex, Vertex)> = g.edges().collect();
        let pairs = empty_pairs(p);
        let (ce, np) = (complete.len(), pairs.len());
        let found: BTreeSet<CanonKey> = (0u64..1 << (ce + np))
            .into_par_iter()
            .fold(BTreeSet::new, |mut acc, mask| {
                let del: Vec<_> = (0..ce).filter(|&i| mask >> i & 1 == 1).map(|i| complete[i]).collect();
                let ids: Vec<_> = (0..np).filter(|&i| mask >> (ce + i) & 1 == 1).map(|i| pairs[i]).collect();
                acc.insert(canonical_key(&apply(&g, &del, &ids)).expect("grid order within canonical cap"));
                acc
            })
            .reduce(BTreeSet::new, |mut a, b| {
                a.extend(b);
                a
            });
        all.extend(found);
    }
    Ok(all)
}

/// The graphs with `th_H = t` exactly.
pub fn generate_th_eq(t: usize) -> Result<BTreeSet<CanonKey>, ExtremalError> {
    let all = generate_th_le(t)?;
    if t == 1 {
        return Ok(all);
    }
    let below = generate_th_le(t - 1)?;
    Ok(all.difference(&below).copied().collect())
}
