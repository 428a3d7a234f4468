//! Naive reference implementations: explicit `(blue, spent)` states, every
//! simultaneous round enumerated, no memoization, no symmetry reduction and
//! no bounds. Only for tiny graphs.

use crate::extended::Extended;
use crate::forcing::Rule;
use crate::graph::Graph;
use crate::vertex_set::{combinations, Vertex, VertexSet};

#[derive(Clone, Copy)]
struct State {
    blue: VertexSet,
    spent: VertexSet,
}

/// Targets `v` may color from `s` under `rule`.
fn targets(g: &Graph, s: State, v: Vertex, rule: Rule) -> VertexSet {
    let white = g.vertices().difference(s.blue);
    let open = g.neighbors(v).difference(s.blue);
    let mut out = VertexSet::EMPTY;
    if matches!(rule, Rule::H | Rule::FloorZ) && !s.spent.contains(v) && open.is_empty() {
        out = out.union(white);
    }
    if matches!(rule, Rule::Z | Rule::FloorZ) && open.len() == 1 {
        out = out.union(open);
    }
    out
}

/// Every nonempty round from `s`: distinct sources, distinct targets, each
/// force valid against the blue set at the start of the round.
fn rounds(g: &Graph, s: State, rule: Rule) -> Vec<State> {
    let sources: Vec<(Vertex, VertexSet)> =
        s.blue.iter().map(|v| (v, targets(g, s, v, rule))).filter(|(_, t)| !t.is_empty()).collect();
    let mut out = Vec::new();
    fn go(i: usize, sources: &[(Vertex, VertexSet)], base: State, cur: State, out: &mut Vec<State>) {
        if i == sources.len() {
            if cur.blue != base.blue {
                out.push(cur);
            }
            return;
        }
        go(i + 1, sources, base, cur, out);
        let (v, t) = sources[i];
        for w in t.difference(cur.blue).iter() {
            go(i + 1, sources, base, State { blue: cur.blue.with(w), spent: cur.spent.with(v) }, out);
        }
    }
    go(0, &sources, s, s, &mut out);
    out
}

fn finishes_within(g: &Graph, s: State, rule: Rule, depth: usize) -> bool {
    if s.blue == g.vertices() {
        return true;
    }
    depth > 0 && rounds(g, s, rule).into_iter().any(|next| finishes_within(g, next, rule, depth - 1))
}

/// `pt(G; B)` by iterative deepening over explicit rounds.
pub fn propagation_time(g: &Graph, base: VertexSet, rule: Rule) -> Extended {
    let start = State { blue: base, spent: VertexSet::EMPTY };
    let most = g.order() - base.len();
    (0..=most)
        .find(|&d| finishes_within(g, start, rule, d))
        .map_or(Extended::Infinite, |d| Extended::Finite(d as u64))
}

pub fn forcing_number(g: &Graph, rule: Rule) -> usize {
    (0..=g.order())
        .find(|&k| combinations(g.order(), k).any(|b| propagation_time(g, b, rule).is_finite()))
        .expect("the full vertex set forces")
}

pub fn throttling_number(g: &Graph, rule: Rule) -> u64 {
    (0..=g.order())
        .flat_map(|k| combinations(g.order(), k))
        .filter_map(|b| (propagation_time(g, b, rule) + b.len() as u64).finite())
        .min()
        .expect("the full vertex set forces")
}

/// Least propagation time over size-`k` sets.
pub fn pt_of_size(g: &Graph, k: usize, rule: Rule) -> Extended {
    combinations(g.order(), k).map(|b| propagation_time(g, b, rule)).min().unwrap_or(Extended::Infinite)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, Family};

    #[test]
    fn small_values() {
        let p4 = make_family(&Family::Path(4)).unwrap();
        assert_eq!(propagation_time(&p4, [0, 1].into_iter().collect(), Rule::H), Extended::Finite(2));
        assert_eq!(forcing_number(&p4, Rule::Z), 1);
        assert_eq!(forcing_number(&p4, Rule::H), 2);
        let e4 = Graph::new(4).unwrap();
        assert_eq!(pt_of_size(&e4, 2, Rule::H), Extended::Finite(1));
        assert_eq!(throttling_number(&e4, Rule::H), 3);
        let k3 = make_family(&Family::Complete(3)).unwrap();
        assert_eq!(propagation_time(&k3, [0, 1].into_iter().collect(), Rule::H), Extended::Infinite);
        assert_eq!(propagation_time(&k3, [0, 1].into_iter().collect(), Rule::Z), Extended::Finite(1));
    }
}
