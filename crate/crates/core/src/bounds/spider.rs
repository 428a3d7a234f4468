//! Restricted search for zero-slack hopping schedules on connected graphs
//! given as `u128` adjacency rows (so orders past the [`Graph`] cap work).
//!
//! With `|B| = k` and `kappa >= 1`, at most `k - 1` vertices turn blue per
//! round. A schedule reaching `n = k + r(k - 1)` in `r` rounds must therefore
//! force exactly `k - 1` every round, which needs exactly one blue vertex
//! with a white neighbor after every round but the last. In a connected
//! graph such a blue set is `{d}` plus a proper union of components of
//! `G - d`, so the search only walks chains of those sets.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use super::{lower_bound_kappa, range, BoundsError};
use crate::graph::{spider_adjacency, Graph};

fn full(n: usize) -> u128 {
    if n == 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    }
}

fn bits(mut s: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if s == 0 {
            return None;
        }
        let v = s.trailing_zeros() as usize;
        s &= s - 1;
        Some(v)
    })
}

fn neighborhood(adj: &[u128], s: u128) -> u128 {
    bits(s).fold(0, |acc, v| acc | adj[v])
}

/// Components of the graph induced on `within`.
fn components(adj: &[u128], within: u128) -> Vec<u128> {
    let mut left = within;
    let mut out = Vec::new();
    while left != 0 {
        let mut comp = left & left.wrapping_neg();
        loop {
            let grown = (comp | neighborhood(adj, comp)) & within;
            if grown == comp {
                break;
            }
            comp = grown;
        }
        left &= !comp;
        out.push(comp);
    }
    out
}

/// Blue sets of size `size` with exactly one vertex that has a white
/// neighbor.
fn one_boundary_sets(adj: &[u128], size: usize) -> Result<Vec<u128>, BoundsError> {
    let n = adj.len();
    let mut out = HashSet::new();
    for d in 0..n {
        let comps = components(adj, full(n) & !(1u128 << d));
        if comps.len() > 20 {
            return Err(range("degree", format!("vertex {d} leaves {} components", comps.len())));
        }
        for pick in 0u32..(1 << comps.len()) - 1 {
            let s = bits(pick as u128).fold(1u128 << d, |acc, i| acc | comps[i]);
            if s.count_ones() as usize == size {
                out.insert(s);
            }
        }
    }
    let mut v: Vec<u128> = out.into_iter().collect();
    v.sort_unstable();
    Ok(v)
}

/// Searches for a base of size `k` whose hopping process forces exactly
/// `k - 1` vertices in each of `rounds` rounds. Returns the chain of blue
/// sets when one exists. Requires a connected graph and
/// `k + rounds (k - 1) = n`.
pub fn tight_schedule_exists(adj: &[u128], k: usize, rounds: usize) -> Result<Option<Vec<u128>>, BoundsError> {
    let n = adj.len();
    if n == 0 || n > 128 {
        return Err(range("order", format!("need 1 <= n <= 128, got {n}")));
    }
    if components(adj, full(n)).len() != 1 {
        return Err(range("graph", "restricted search needs a connected graph".into()));
    }
    if k < 1 || k + rounds * k.saturating_sub(1) != n || (rounds > 0 && k < 2) {
        return Err(range("size", format!("k + rounds (k - 1) must equal n = {n}, got k = {k}, rounds = {rounds}")));
    }
    if rounds == 0 {
        return Ok(Some(vec![full(n)]));
    }
    let mut layer: Vec<u128> = one_boundary_sets(adj, k)?;
    let mut parents: Vec<HashMap<u128, u128>> = Vec::new();
    for t in 1..rounds {
        let mut parent = HashMap::new();
        for s in one_boundary_sets(adj, k + t * (k - 1))? {
            if let Some(&p) = layer.iter().find(|&&p| p & !s == 0) {
                parent.insert(s, p);
            }
        }
        let mut next: Vec<u128> = parent.keys().copied().collect();
        next.sort_unstable();
        parents.push(parent);
        layer = next;
        if layer.is_empty() {
            return Ok(None);
        }
    }
    let Some(&last) = layer.first() else { return Ok(None) };
    let mut chain = vec![full(n), last];
    let mut at = last;
    for parent in parents.iter().rev() {
        at = parent[&at];
        chain.push(at);
    }
    chain.reverse();
    Ok(Some(chain))
}

/// Rows of a [`Graph`] as `u128` masks.
pub fn adjacency_rows(g: &Graph) -> Vec<u128> {
    (0..g.order()).map(|v| g.neighbors(v).0 as u128).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpiderVerdict {
    pub m: usize,
    pub legs: [usize; 3],
    pub n: usize,
    pub lower_bound: u64,
    /// Every base size `k` with `k + (lb - k)(k - 1) >= n`, with that
    /// capacity.
    pub candidate_sizes: Vec<(usize, usize)>,
    /// Some candidate size admits a schedule meeting the bound.
    pub meets_bound: bool,
    /// `th_H > lower_bound`.
    pub strict_gap: bool,
}

/// Checks whether a connected graph meets `lower` using only zero-slack
/// base sizes; errors when some size has slack, since the restricted
/// search does not cover it.
pub fn zero_slack_verdict(adj: &[u128], lower: u64) -> Result<(Vec<(usize, usize)>, bool), BoundsError> {
    let n = adj.len();
    let lower = lower as usize;
    let mut sizes = Vec::new();
    let mut meets = false;
    for k in 1..=lower.min(n) {
        let cap = k + (lower - k) * (k - 1);
        if cap < n {
            continue;
        }
        sizes.push((k, cap));
        if cap > n {
            return Err(range("size", format!("k = {k} has slack {} and is outside the restricted search", cap - n)));
        }
        meets |= tight_schedule_exists(adj, k, lower - k)?.is_some();
    }
    Ok((sizes, meets))
}

/// Decides whether `S(3m^2 - 1, 3m^2, 3m^2 + 1)` misses the connectivity
/// lower bound `6m` by the zero-slack search.
pub fn spider_strict_gap(m: usize) -> Result<SpiderVerdict, BoundsError> {
    if m < 2 {
        return Err(range("m", format!("need m >= 2, got {m}")));
    }
    let legs = [3 * m * m - 1, 3 * m * m, 3 * m * m + 1];
    let n = 9 * m * m + 1;
    if n > 128 {
        return Err(range("m", format!("spider order {n} exceeds 128")));
    }
    let adj = spider_adjacency(legs[0], legs[1], legs[2]);
    let lower_bound = lower_bound_kappa(n, 1)?;
    let (candidate_sizes, meets_bound) = zero_slack_verdict(&adj, lower_bound)?;
    Ok(SpiderVerdict { m, legs, n, lower_bound, candidate_sizes, meets_bound, strict_gap: !meets_bound })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, Family};

    fn path_rows(n: usize) -> Vec<u128> {
        (0..n)
            .map(|v| {
                let mut r = 0u128;
                if v > 0 {
                    r |= 1 << (v - 1);
                }
                if v + 1 < n {
                    r |= 1 << (v + 1);
                }
                r
            })
            .collect()
    }

    #[test]
    fn spider_m2_misses_the_bound() {
        let v = spider_strict_gap(2).unwrap();
        assert_eq!(v.n, 37);
        assert_eq!(v.lower_bound, 12);
        assert_eq!(v.candidate_sizes, vec![(7, 37)]);
        assert!(v.strict_gap);
    }

    #[test]
    fn spider_m3_misses_the_bound() {
        let v = spider_strict_gap(3).unwrap();
        assert_eq!((v.n, v.lower_bound), (82, 18));
        assert_eq!(v.candidate_sizes, vec![(10, 82)]);
        assert!(v.strict_gap);
    }

    #[test]
    fn path_37_meets_the_bound() {
        let adj = path_rows(37);
        let (sizes, meets) = zero_slack_verdict(&adj, 12).unwrap();
        assert_eq!(sizes, vec![(7, 37)]);
        assert!(meets);
        let chain = tight_schedule_exists(&adj, 7, 5).unwrap().unwrap();
        let sizes: Vec<u32> = chain.iter().map(|s| s.count_ones()).collect();
        assert_eq!(sizes, vec![7, 13, 19, 25, 31, 37]);
    }

    #[test]
    fn one_boundary_sets_on_a_star() {
        let s = make_family(&Family::Star(4)).unwrap();
        let adj = adjacency_rows(&s);
        // Any single vertex, or the center with one or two leaves
        assert_eq!(one_boundary_sets(&adj, 1).unwrap().len(), 4);
        assert_eq!(one_boundary_sets(&adj, 2).unwrap().len(), 3);
        assert_eq!(one_boundary_sets(&adj, 3).unwrap().len(), 3);
        assert!(one_boundary_sets(&adj, 4).unwrap().is_empty());
    }

    #[test]
    fn rejects_slack_and_bad_sizes() {
        assert!(spider_strict_gap(1).is_err());
        assert!(spider_strict_gap(4).is_err());
        assert!(tight_schedule_exists(&path_rows(10), 3, 3).is_err());
        assert!(zero_slack_verdict(&path_rows(10), 7).is_err());
    }
}
