//! Explicit hopping schedules for paths, cycles and complete bipartite
//! graphs.

use super::{range, BoundsError};
use crate::forcing::{boundary, round_decompose, Force, ForceSet, Rule};
use crate::graph::{make_family, Family, Graph};
use crate::solvers::ThrottleCertificate;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// Column sizes of a snaking schedule: the base, then the number of
/// vertices colored in each round. Hops may land on any white vertex, so
/// only the sizes matter once the base is fixed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Snake {
    pub family: Family,
    /// Box height.
    pub m: usize,
    pub base: usize,
    pub rounds: Vec<usize>,
}

impl Snake {
    /// Paths: the first column plus the leaf, then columns of `m`.
    /// Cycles: the first column plus both neighbors, then columns of `m`.
    pub fn plan(family: Family) -> Result<Snake, BoundsError> {
        let (n, extra) = match family {
            Family::Path(n) if n >= 2 => (n, 1),
            Family::Cycle(n) if n >= 3 => (n, 2),
            Family::Path(_) | Family::Cycle(_) => {
                return Err(range("n", format!("{family} needs n >= 2 for paths, n >= 3 for cycles")))
            }
            _ => return Err(range("family", format!("snaking covers paths and cycles, got {family}"))),
        };
        let m = ((n - extra) as u64).isqrt() as usize;
        let base = (m + extra).min(n);
        let mut rounds = Vec::new();
        let mut left = n - base;
        while left > 0 {
            let c = left.min(m);
            rounds.push(c);
            left -= c;
        }
        Ok(Snake { family, m, base, rounds })
    }

    pub fn pt(&self) -> usize {
        self.rounds.len()
    }

    pub fn th(&self) -> usize {
        self.base + self.pt()
    }
}

/// Realizes rounds of hop targets from the least unspent vertices whose
/// neighborhoods are blue, then re-derives the rounds.
fn hop_certificate(g: &Graph, base: VertexSet, rounds: &[VertexSet]) -> Result<ThrottleCertificate, BoundsError> {
    let mut blue = base;
    let mut spent = VertexSet::EMPTY;
    let mut forces = Vec::new();
    for (i, &round) in rounds.iter().enumerate() {
        let sources = blue.difference(boundary(g, blue)).difference(spent);
        if sources.len() < round.len() || !round.intersection(blue).is_empty() {
            return Err(BoundsError::Witness(format!("round {} cannot color {:?}", i + 1, round)));
        }
        for (v, w) in sources.iter().zip(round.iter()) {
            forces.push(Force::new(v, w));
            spent.insert(v);
        }
        blue = blue.union(round);
    }
    let fs = ForceSet::new(base, forces);
    let schedule = round_decompose(g, &fs, Rule::H).map_err(|e| BoundsError::Witness(e.to_string()))?;
    if schedule.covered() != g.vertices() || schedule.pt() != rounds.len() {
        return Err(BoundsError::Witness(format!("schedule covers {:?} in {} rounds", schedule.covered(), schedule.pt())));
    }
    Ok(ThrottleCertificate::from_schedule(schedule))
}

fn span(from: usize, len: usize) -> VertexSet {
    (from..from + len).collect()
}

/// The snaking schedule on a path or cycle, with vertices consumed in
/// label order (paths from vertex 0, cycles around from vertex 0).
pub fn build_snaking_witness(family: Family) -> Result<ThrottleCertificate, BoundsError> {
    let plan = Snake::plan(family)?;
    let n = family.order();
    if n > MAX_VERTICES {
        return Err(range("n", format!("witness graphs are capped at {MAX_VERTICES} vertices, got {n}")));
    }
    let g = make_family(&family).map_err(|e| range("family", e.to_string()))?;
    let mut at = plan.base;
    let rounds: Vec<VertexSet> = plan
        .rounds
        .iter()
        .map(|&c| {
            at += c;
            span(at - c, c)
        })
        .collect();
    hop_certificate(&g, span(0, plan.base), &rounds)
}

/// Least `b` minimizing `b + ceil((t - b) / b)`, the empty-graph strategy.
pub(crate) fn empty_graph_base(t: usize) -> usize {
    (1..=t).min_by_key(|&b| b + (t - b).div_ceil(b)).expect("t >= 1")
}

/// `K_{s,t}` with `U = 0..s`: color `U` and the best empty-graph base of
/// `V`, then fill `V` at `b` vertices per round.
pub fn build_bipartite_witness(s: usize, t: usize) -> Result<ThrottleCertificate, BoundsError> {
    if t == 0 || s > t {
        return Err(range("(s, t)", format!("need 0 <= s <= t and t >= 1, got ({s}, {t})")));
    }
    if s + t > MAX_VERTICES {
        return Err(range("(s, t)", format!("witness graphs are capped at {MAX_VERTICES} vertices")));
    }
    let g = make_family(&Family::CompleteBipartite(s, t)).map_err(|e| range("(s, t)", e.to_string()))?;
    let b = empty_graph_base(t);
    let mut rounds = Vec::new();
    let mut at = s + b;
    while at < s + t {
        let c = b.min(s + t - at);
        rounds.push(span(at, c));
        at += c;
    }
    hop_certificate(&g, span(0, s + b), &rounds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::{ceil_two_sqrt, family_formula};
    use crate::extended::Extended;

    #[test]
    fn path_15() {
        let c = build_snaking_witness(Family::Path(15)).unwrap();
        assert_eq!(c.base, span(0, 4));
        assert_eq!((c.pt, c.th), (Extended::Finite(4), Extended::Finite(8)));
        let two = build_snaking_witness(Family::Path(2)).unwrap();
        assert_eq!((two.size, two.pt), (2, Extended::Finite(0)));
    }

    #[test]
    fn cycle_16() {
        let plan = Snake::plan(Family::Cycle(16)).unwrap();
        assert_eq!((plan.m, plan.base, plan.rounds.clone()), (3, 5, vec![3, 3, 3, 2]));
        let c = build_snaking_witness(Family::Cycle(16)).unwrap();
        assert_eq!((c.size, c.pt, c.th), (5, Extended::Finite(4), Extended::Finite(9)));
    }

    #[test]
    fn snakes_match_formulas() {
        for n in 2..=32 {
            let c = build_snaking_witness(Family::Path(n)).unwrap();
            assert_eq!(c.th, Extended::Finite(ceil_two_sqrt(n as u64 - 1)), "path {n}");
        }
        for n in 3..=32 {
            let c = build_snaking_witness(Family::Cycle(n)).unwrap();
            let f = family_formula(&Family::Cycle(n)).unwrap().th_h.unwrap();
            assert_eq!(c.th, Extended::Finite(f), "cycle {n}");
        }
        for n in 2..=5000usize {
            assert_eq!(Snake::plan(Family::Path(n)).unwrap().th() as u64, ceil_two_sqrt(n as u64 - 1));
            if n >= 3 {
                assert_eq!(Snake::plan(Family::Cycle(n)).unwrap().th() as u64, ceil_two_sqrt(n as u64 - 2) + 1);
            }
        }
    }

    #[test]
    fn bipartite() {
        let c = build_bipartite_witness(3, 5).unwrap();
        assert_eq!((c.size, c.pt, c.th), (5, Extended::Finite(2), Extended::Finite(7)));
        assert_eq!(build_bipartite_witness(0, 9).unwrap().th, Extended::Finite(5));
        assert_eq!(build_bipartite_witness(1, 1).unwrap().th, Extended::Finite(2));
        for t in 1..=20 {
            for s in 0..=t.min(32 - t) {
                let c = build_bipartite_witness(s, t).unwrap();
                let f = family_formula(&Family::CompleteBipartite(s, t)).unwrap().th_h.unwrap();
                assert_eq!(c.th, Extended::Finite(f), "K_{s},{t}");
            }
        }
        assert!(build_bipartite_witness(4, 3).is_err());
        assert!(build_bipartite_witness(0, 0).is_err());
    }
}
