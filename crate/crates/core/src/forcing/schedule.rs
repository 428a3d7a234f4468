use serde::{Deserialize, Serialize};

use super::{execute_chronological, is_valid_force, Force, ForcingError, ForcingState, Rule};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// An unordered set of forces together with the initial blue set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForceSet {
    pub base: VertexSet,
    /// Kept sorted by `(src, dst)`.
    pub forces: Vec<Force>,
}

impl ForceSet {
    pub fn new(base: VertexSet, mut forces: Vec<Force>) -> ForceSet {
        forces.sort();
        ForceSet { base, forces }
    }

    pub fn sources(&self) -> VertexSet {
        self.forces.iter().map(|f| f.src).collect()
    }

    pub fn targets(&self) -> VertexSet {
        self.forces.iter().map(|f| f.dst).collect()
    }

    /// Structural checks: distinct sources, distinct targets, targets
    /// outside the base, endpoints in range.
    pub fn check(&self, n: usize) -> Result<(), ForcingError> {
        let mut src = VertexSet::EMPTY;
        let mut dst = VertexSet::EMPTY;
        if let Some(v) = self.base.iter().find(|&v| v >= n) {
            return Err(ForcingError::VertexOutOfRange(v));
        }
        for &f in &self.forces {
            for v in [f.src, f.dst] {
                if v >= n {
                    return Err(ForcingError::VertexOutOfRange(v));
                }
            }
            if f.src == f.dst {
                return Err(ForcingError::Loop(f));
            }
            if src.contains(f.src) {
                return Err(ForcingError::DuplicateSource(f.src));
            }
            if dst.contains(f.dst) {
                return Err(ForcingError::DuplicateTarget(f.dst));
            }
            if self.base.contains(f.dst) {
                return Err(ForcingError::TargetInBase(f.dst));
            }
            src.insert(f.src);
            dst.insert(f.dst);
        }
        Ok(())
    }
}

/// Greedy earliest round decomposition of a force set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoundSchedule {
    /// `rounds[0]` is the base; `rounds[t]` the vertices colored at time `t`.
    pub rounds: Vec<VertexSet>,
    /// `forces[t]` are the forces performed at time `t`; `forces[0]` is empty.
    pub forces: Vec<Vec<Force>>,
}

impl RoundSchedule {
    pub fn pt(&self) -> usize {
        self.rounds.len() - 1
    }

    /// Blue vertices after round `i` (the union of rounds `0..=i`).
    pub fn blue_after(&self, i: usize) -> VertexSet {
        self.rounds[..=i.min(self.pt())].iter().fold(VertexSet::EMPTY, |a, &r| a.union(r))
    }

    pub fn covered(&self) -> VertexSet {
        self.blue_after(self.pt())
    }

    pub fn base(&self) -> VertexSet {
        self.rounds[0]
    }

    /// The forces in round order, each round sorted by `(src, dst)`.
    pub fn chronological(&self) -> Vec<Force> {
        self.forces.iter().flatten().copied().collect()
    }

    pub fn force_set(&self) -> ForceSet {
        ForceSet::new(self.base(), self.chronological())
    }
}

/// Schedules each force at the first time step at which it is valid given
/// that exactly the previously colored vertices are blue.
pub fn round_decompose(g: &Graph, fs: &ForceSet, rule: Rule) -> Result<RoundSchedule, ForcingError> {
    fs.check(g.order())?;
    let mut blue = fs.base;
    let mut pending: Vec<Force> = fs.forces.clone();
    let mut rounds = vec![fs.base];
    let mut forces = vec![Vec::new()];
    while !pending.is_empty() {
        // Sources that force in this schedule never force before their one
        // force, so the state seen at each step has no extinct sources.
        let state = ForcingState::initial(blue);
        let (now, later): (Vec<Force>, Vec<Force>) =
            pending.iter().partition(|&&f| blue.contains(f.src) && is_valid_force(g, &state, f, rule));
        if now.is_empty() {
            return Err(ForcingError::NotLinearizable(later));
        }
        let colored: VertexSet = now.iter().map(|f| f.dst).collect();
        blue = blue.union(colored);
        rounds.push(colored);
        forces.push(now);
        pending = later;
    }
    let schedule = RoundSchedule { rounds, forces };
    debug_assert!(execute_chronological(g, fs.base, &schedule.chronological(), rule).is_ok());
    Ok(schedule)
}

fn require_covering(g: &Graph, fs: &ForceSet) -> Result<(), ForcingError> {
    fs.check(g.order())?;
    let missing = g.vertices().difference(fs.base.union(fs.targets()));
    if missing.is_empty() {
        Ok(())
    } else {
        Err(ForcingError::NotCovering(missing))
    }
}

/// Vertices that never perform a force.
pub fn terminus(g: &Graph, fs: &ForceSet) -> Result<VertexSet, ForcingError> {
    require_covering(g, fs)?;
    Ok(g.vertices().difference(fs.sources()))
}

/// Every force reversed, based at the terminus.
pub fn reverse(g: &Graph, fs: &ForceSet) -> Result<ForceSet, ForcingError> {
    let term = terminus(g, fs)?;
    Ok(ForceSet::new(term, fs.forces.iter().map(|f| Force::new(f.dst, f.src)).collect()))
}

/// Adds the edge `src dst` for every force. For a hopping force set the base
/// is then a standard zero forcing set of the result.
pub fn augment(g: &Graph, fs: &ForceSet) -> Result<Graph, ForcingError> {
    fs.check(g.order())?;
    let mut h = g.clone();
    for &f in &fs.forces {
        if g.has_edge(f.src, f.dst) {
            return Err(ForcingError::AlreadyAdjacent(f));
        }
        h.add_edge(f.src, f.dst);
    }
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, Family};

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    fn forces(v: &[(usize, usize)]) -> Vec<Force> {
        v.iter().map(|&(a, b)| Force::new(a, b)).collect()
    }

    #[test]
    fn p4_rounds() {
        let g = make_family(&Family::Path(4)).unwrap();
        let fs = ForceSet::new(set(&[0, 1]), forces(&[(0, 2), (1, 3)]));
        let s = round_decompose(&g, &fs, Rule::H).unwrap();
        assert_eq!(s.rounds, vec![set(&[0, 1]), set(&[2]), set(&[3])]);
        assert_eq!(s.pt(), 2);
        let all = ForceSet::new(g.vertices(), vec![]);
        assert_eq!(round_decompose(&g, &all, Rule::H).unwrap().pt(), 0);
        let stuck = ForceSet::new(set(&[0, 1]), forces(&[(1, 3)]));
        assert!(matches!(round_decompose(&g, &stuck, Rule::H), Err(ForcingError::NotLinearizable(_))));
    }

    #[test]
    fn structural_violations() {
        let g = make_family(&Family::Path(4)).unwrap();
        let two_src = ForceSet::new(set(&[0, 1]), forces(&[(0, 2), (0, 3)]));
        assert_eq!(round_decompose(&g, &two_src, Rule::H), Err(ForcingError::DuplicateSource(0)));
        let in_base = ForceSet::new(set(&[0, 1]), forces(&[(0, 1)]));
        assert_eq!(round_decompose(&g, &in_base, Rule::H), Err(ForcingError::TargetInBase(1)));
    }

    #[test]
    fn terminus_and_reversal() {
        let g = make_family(&Family::Path(4)).unwrap();
        let fs = ForceSet::new(set(&[0, 1]), forces(&[(0, 2), (1, 3)]));
        assert_eq!(terminus(&g, &fs).unwrap(), set(&[2, 3]));
        let rev = reverse(&g, &fs).unwrap();
        assert_eq!(rev, ForceSet::new(set(&[2, 3]), forces(&[(2, 0), (3, 1)])));
        assert!(round_decompose(&g, &rev, Rule::H).is_ok());
        let all = ForceSet::new(g.vertices(), vec![]);
        assert_eq!(reverse(&g, &all).unwrap(), all);
        let partial = ForceSet::new(set(&[0, 1]), forces(&[(0, 2)]));
        assert!(matches!(terminus(&g, &partial), Err(ForcingError::NotCovering(_))));
    }

    #[test]
    fn augmentation() {
        let g = make_family(&Family::Path(4)).unwrap();
        let fs = ForceSet::new(set(&[0, 1]), forces(&[(0, 2), (1, 3)]));
        let h = augment(&g, &fs).unwrap();
        assert!(h.has_edge(0, 2) && h.has_edge(1, 3));
        assert_eq!(round_decompose(&h, &fs, Rule::Z).unwrap(), round_decompose(&g, &fs, Rule::H).unwrap());
        assert_eq!(augment(&g, &ForceSet::new(set(&[0]), vec![])).unwrap(), g);
        let e3 = Graph::new(3).unwrap();
        let chain = ForceSet::new(set(&[0]), forces(&[(0, 1), (1, 2)]));
        let p3 = augment(&e3, &chain).unwrap();
        assert_eq!(p3, make_family(&Family::Path(3)).unwrap());
        assert_eq!(round_decompose(&p3, &chain, Rule::Z).unwrap().covered(), p3.vertices());
        let bad = ForceSet::new(set(&[0]), forces(&[(0, 1)]));
        assert!(augment(&g, &bad).is_err());
    }
}
