use std::collections::BTreeSet;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::kangaroo::{compositions, generate_kangaroos};
use super::ExtremalError;
use crate::graph::{induced_embedding, is_induced_subgraph, CanonKey, Graph};
use crate::vertex_set::Vertex;

/// Drops members containing a smaller kept member, scanning by order.
pub fn minimize_by_containment(family: &BTreeSet<CanonKey>) -> BTreeSet<CanonKey> {
    let mut kept: Vec<(CanonKey, Graph)> = Vec::new();
    for &key in family {
        let g = key.graph();
        if !kept.iter().any(|(_, h)| h.order() < g.order() && is_induced_subgraph(h, &g)) {
            kept.push((key, g));
        }
    }
    kept.into_iter().map(|(k, _)| k).collect()
}

/// Drops every member that contains some other member, comparing all
/// pairs independently of any order.
pub fn minimize_pairwise(family: &BTreeSet<CanonKey>) -> BTreeSet<CanonKey> {
    let graphs: Vec<(CanonKey, Graph)> = family.iter().map(|&k| (k, k.graph())).collect();
    graphs
        .par_iter()
        .filter(|(k, g)| !graphs.iter().any(|(k2, h)| k2 != k && h.order() <= g.order() && is_induced_subgraph(h, g)))
        .map(|(k, _)| *k)
        .collect()
}

/// The union of all kangaroo families over compositions of `k + 1`,
/// minimized under induced containment.
pub fn generate_gk(k: usize) -> Result<BTreeSet<CanonKey>, ExtremalError> {
    if k > 1 {
        return Err(ExtremalError::UnsupportedK(k));
    }
    let mut union = BTreeSet::new();
    for parts in compositions(k + 1) {
        union.extend(generate_kangaroos(&parts)?);
    }
    Ok(minimize_by_containment(&union))
}

static FAMILIES: [OnceLock<BTreeSet<CanonKey>>; 2] = [OnceLock::new(), OnceLock::new()];

/// Cached [`generate_gk`].
pub fn forbidden_family(k: usize) -> Result<&'static BTreeSet<CanonKey>, ExtremalError> {
    let slot = FAMILIES.get(k).ok_or(ExtremalError::UnsupportedK(k))?;
    Ok(slot.get_or_init(|| generate_gk(k).expect("k within range")))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremeVerdict {
    pub n: usize,
    pub k: usize,
    /// `th_H >= n - k`.
    pub at_least: bool,
    /// `th_H = n - k`.
    pub equal: bool,
    /// A member of the family for `k` found as an induced subgraph, with
    /// its embedding.
    pub witness: Option<(CanonKey, Vec<Vertex>)>,
}

fn find_member(g: &Graph, k: usize) -> Result<Option<(CanonKey, Vec<Vertex>)>, ExtremalError> {
    Ok(forbidden_family(k)?
        .iter()
        .filter(|key| key.order() <= g.order())
        .find_map(|&key| induced_embedding(&key.graph(), g).map(|phi| (key, phi))))
}

/// Decides `th_H >= n - k` and `th_H = n - k` from forbidden induced
/// subgraphs alone.
pub fn classify_extreme(g: &Graph, k: usize) -> Result<ExtremeVerdict, ExtremalError> {
    if k > 1 {
        return Err(ExtremalError::UnsupportedK(k));
    }
    let witness = find_member(g, k)?;
    let at_least = witness.is_none();
    let equal = at_least && (k == 0 || find_member(g, k - 1)?.is_some());
    Ok(ExtremeVerdict { n: g.order(), k, at_least, equal, witness })
}
