use serde::{Deserialize, Serialize};

use super::Graph;
use crate::vertex_set::{combinations, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuralReport {
    pub kappa: usize,
    pub alpha: usize,
    pub delta: usize,
}

pub fn structural_report(g: &Graph) -> StructuralReport {
    StructuralReport { kappa: vertex_connectivity(g), alpha: independence_number(g), delta: g.min_degree() }
}

/// Whether the subgraph induced by `within` is connected (an empty set counts
/// as connected).
pub(crate) fn connected_within(g: &Graph, within: VertexSet) -> bool {
    let Some(start) = within.first() else {
        return true;
    };
    let mut seen = VertexSet::singleton(start);
    let mut frontier = seen;
    while !frontier.is_empty() {
        let mut next = VertexSet::EMPTY;
        for v in frontier.iter() {
            next = next.union(g.neighbors(v));
        }
        frontier = next.intersection(within).difference(seen);
        seen = seen.union(frontier);
    }
    seen == within
}

pub fn is_connected(g: &Graph) -> bool {
    connected_within(g, g.vertices())
}

/// Minimum number of vertices whose removal disconnects `g`; `n - 1` for
/// complete graphs and `0` for disconnected graphs or `K_1`.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.order();
    if g.is_complete() {
        return n - 1;
    }
    if !is_connected(g) {
        return 0;
    }
    // A noncomplete graph has a cut of size at most delta (the neighborhood of
    // a minimum-degree vertex), so this loop always returns.
    let all = g.vertices();
    for k in 1..=g.min_degree() {
        for cut in combinations(n, k) {
            if !connected_within(g, all.difference(cut)) {
                return k;
            }
        }
    }
    unreachable!("noncomplete connected graph without a cut of size <= delta")
}

pub fn independence_number(g: &Graph) -> usize {
    let mut best = 0;
    mis(g, g.vertices(), 0, &mut best);
    best
}

fn mis(g: &Graph, mut cand: VertexSet, mut size: usize, best: &mut usize) {
    // Vertices with at most one candidate neighbor can always be taken.
    loop {
        let low = cand.iter().find(|&v| g.neighbors(v).intersection(cand).len() <= 1);
        match low {
            Some(v) => {
                size += 1;
                cand = cand.difference(g.closed_neighbors(v));
            }
            None => break,
        }
    }
    if cand.is_empty() {
        *best = (*best).max(size);
        return;
    }
    if size + cand.len() <= *best {
        return;
    }
    let v = cand
        .iter()
        .max_by_key(|&v| g.neighbors(v).intersection(cand).len())
        .expect("nonempty candidates");
    mis(g, cand.difference(g.closed_neighbors(v)), size + 1, best);
    mis(g, cand.without(v), size, best);
}

#[cfg(test)]
mod tests {
    use super::super::{make_family, Family};
    use super::*;

    fn report(f: Family) -> StructuralReport {
        structural_report(&make_family(&f).unwrap())
    }

    #[test]
    fn known_parameters() {
        assert_eq!(report(Family::Petersen).kappa, 3);
        assert_eq!(report(Family::Petersen).alpha, 4);
        let cross = report(Family::Cross);
        assert_eq!((cross.kappa, cross.alpha), (1, 4));
        let k35 = report(Family::CompleteBipartite(3, 5));
        assert_eq!((k35.kappa, k35.alpha, k35.delta), (3, 5, 3));
        assert_eq!(report(Family::Complete(5)), StructuralReport { kappa: 4, alpha: 1, delta: 4 });
        assert_eq!(report(Family::Empty(1)), StructuralReport { kappa: 0, alpha: 1, delta: 0 });
        assert_eq!(report(Family::Empty(3)).kappa, 0);
        assert_eq!(report(Family::Cycle(7)).kappa, 2);
        assert_eq!(report(Family::Cycle(7)).alpha, 3);
        assert_eq!(report(Family::KstAugmented(2, 8)).kappa, 2);
    }
}
