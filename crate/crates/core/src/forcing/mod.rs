//! Color change rules, force validity and forcing processes.

mod cert;
mod schedule;

pub use cert::{Certificate, CertificateError, Quantity, ScheduledForce};
pub use schedule::{augment, reverse, round_decompose, terminus, ForceSet, RoundSchedule};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::vertex_set::{Vertex, VertexSet};

/// Which color change rule is in force.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Rule {
    /// Hopping: an unspent blue vertex with an all-blue neighborhood may
    /// color any white vertex.
    H,
    /// Standard: a blue vertex with exactly one white neighbor colors it.
    Z,
    /// Either of the above at each step.
    #[serde(rename = "floorZ")]
    FloorZ,
}

impl Rule {
    pub const ALL: [Rule; 3] = [Rule::H, Rule::Z, Rule::FloorZ];

    pub fn as_str(self) -> &'static str {
        match self {
            Rule::H => "H",
            Rule::Z => "Z",
            Rule::FloorZ => "floorZ",
        }
    }

    pub(crate) fn hops(self) -> bool {
        matches!(self, Rule::H | Rule::FloorZ)
    }

    pub(crate) fn zforces(self) -> bool {
        matches!(self, Rule::Z | Rule::FloorZ)
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Rule {
    type Err = String;
    fn from_str(s: &str) -> Result<Rule, String> {
        match s {
            "H" | "h" => Ok(Rule::H),
            "Z" | "z" => Ok(Rule::Z),
            "floorZ" | "floorz" | "FloorZ" => Ok(Rule::FloorZ),
            _ => Err(format!("unknown rule {s:?}; expected H, Z or floorZ")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Force {
    pub src: Vertex,
    pub dst: Vertex,
}

impl Force {
    pub fn new(src: Vertex, dst: Vertex) -> Force {
        Force { src, dst }
    }
}

impl fmt::Display for Force {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}", self.src, self.dst)
    }
}

/// Blue vertices plus the blue vertices that have already forced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ForcingState {
    pub blue: VertexSet,
    pub extinct: VertexSet,
}

impl ForcingState {
    pub fn initial(base: VertexSet) -> ForcingState {
        ForcingState { blue: base, extinct: VertexSet::EMPTY }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VertexStatus {
    White,
    Dormant,
    Active,
    Extinct,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ForcingError {
    #[error("force {force} at index {index} is not valid under {rule}")]
    InvalidForce { index: usize, force: Force, rule: Rule },
    #[error("vertex {0} out of range")]
    VertexOutOfRange(Vertex),
    #[error("force {0} has equal endpoints")]
    Loop(Force),
    #[error("vertex {0} performs more than one force")]
    DuplicateSource(Vertex),
    #[error("vertex {0} is forced more than once")]
    DuplicateTarget(Vertex),
    #[error("vertex {0} is forced but already in the base")]
    TargetInBase(Vertex),
    #[error("forces {0:?} never become valid")]
    NotLinearizable(Vec<Force>),
    #[error("the forces leave {0:?} white")]
    NotCovering(VertexSet),
    #[error("force {0} joins adjacent vertices, so it is not a hop")]
    AlreadyAdjacent(Force),
}

/// Blue vertices with at least one white neighbor. These are dormant under
/// the hopping rule, and in any reachable state none of them has forced.
#[inline]
pub(crate) fn boundary(g: &Graph, blue: VertexSet) -> VertexSet {
    blue.iter().filter(|&v| !g.neighbors(v).is_subset(blue)).collect()
}

/// White vertices that are the unique white neighbor of some blue vertex.
#[inline]
pub(crate) fn z_targets(g: &Graph, blue: VertexSet) -> VertexSet {
    let mut out = VertexSet::EMPTY;
    for v in blue.iter() {
        let white = g.neighbors(v).difference(blue);
        if white.len() == 1 {
            out = out.union(white);
        }
    }
    out
}

/// Least blue vertex whose unique white neighbor is `w`.
pub(crate) fn z_source(g: &Graph, blue: VertexSet, w: Vertex) -> Option<Vertex> {
    blue.iter().find(|&v| g.neighbors(v).difference(blue) == VertexSet::singleton(w))
}

fn hop_valid(g: &Graph, s: &ForcingState, v: Vertex) -> bool {
    s.blue.contains(v)
        && !s.extinct.contains(v)
        && g.neighbors(v).is_subset(s.blue)
        && s.blue != g.vertices()
}

fn z_valid(g: &Graph, s: &ForcingState, v: Vertex) -> bool {
    s.blue.contains(v) && g.neighbors(v).difference(s.blue).len() == 1
}

pub fn vertex_status(g: &Graph, s: &ForcingState, v: Vertex, rule: Rule) -> VertexStatus {
    if !s.blue.contains(v) {
        return VertexStatus::White;
    }
    if s.extinct.contains(v) {
        return VertexStatus::Extinct;
    }
    let active = (rule.hops() && hop_valid(g, s, v)) || (rule.zforces() && z_valid(g, s, v));
    if active {
        VertexStatus::Active
    } else {
        VertexStatus::Dormant
    }
}

pub fn is_valid_force(g: &Graph, s: &ForcingState, f: Force, rule: Rule) -> bool {
    let n = g.order();
    if f.src >= n || f.dst >= n || f.src == f.dst || s.blue.contains(f.dst) {
        return false;
    }
    (rule.hops() && hop_valid(g, s, f.src))
        || (rule.zforces() && z_valid(g, s, f.src) && g.has_edge(f.src, f.dst))
}

/// Every force executable from `s`, sorted by `(src, dst)`.
pub fn valid_forces(g: &Graph, s: &ForcingState, rule: Rule) -> Vec<Force> {
    let white = g.vertices().difference(s.blue);
    let mut out = Vec::new();
    for v in s.blue.iter() {
        if rule.hops() && hop_valid(g, s, v) {
            out.extend(white.iter().map(|w| Force::new(v, w)));
        } else if rule.zforces() && z_valid(g, s, v) {
            let w = g.neighbors(v).difference(s.blue).first().expect("one white neighbor");
            out.push(Force::new(v, w));
        }
    }
    out
}

pub fn apply_force(g: &Graph, s: &ForcingState, f: Force, rule: Rule) -> Result<ForcingState, ForcingError> {
    if !is_valid_force(g, s, f, rule) {
        return Err(ForcingError::InvalidForce { index: 0, force: f, rule });
    }
    Ok(ForcingState { blue: s.blue.with(f.dst), extinct: s.extinct.with(f.src) })
}

/// Runs a chronological list of forces, validating each in turn.
pub fn execute_chronological(
    g: &Graph,
    base: VertexSet,
    list: &[Force],
    rule: Rule,
) -> Result<ForcingState, ForcingError> {
    if let Some(v) = base.iter().find(|&v| v >= g.order()) {
        return Err(ForcingError::VertexOutOfRange(v));
    }
    let mut s = ForcingState::initial(base);
    for (index, &f) in list.iter().enumerate() {
        s = apply_force(g, &s, f, rule).map_err(|_| ForcingError::InvalidForce { index, force: f, rule })?;
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, Family};

    fn p4() -> Graph {
        make_family(&Family::Path(4)).unwrap()
    }

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn statuses_on_p4() {
        let s = ForcingState::initial(set(&[0, 1]));
        assert_eq!(vertex_status(&p4(), &s, 0, Rule::H), VertexStatus::Active);
        assert_eq!(vertex_status(&p4(), &s, 1, Rule::H), VertexStatus::Dormant);
        assert_eq!(vertex_status(&p4(), &s, 1, Rule::Z), VertexStatus::Active);
        assert_eq!(vertex_status(&p4(), &s, 2, Rule::H), VertexStatus::White);
        let k4 = make_family(&Family::Complete(4)).unwrap();
        let s = ForcingState::initial(set(&[0, 1, 2]));
        assert!((0..3).all(|v| vertex_status(&k4, &s, v, Rule::H) == VertexStatus::Dormant));
        let s = ForcingState { blue: set(&[0, 1, 2]), extinct: set(&[2]) };
        assert_eq!(vertex_status(&p4(), &s, 2, Rule::FloorZ), VertexStatus::Extinct);
    }

    #[test]
    fn force_lists() {
        let s = ForcingState::initial(set(&[0, 1]));
        let f = |v: &[(usize, usize)]| v.iter().map(|&(a, b)| Force::new(a, b)).collect::<Vec<_>>();
        assert_eq!(valid_forces(&p4(), &s, Rule::H), f(&[(0, 2), (0, 3)]));
        assert_eq!(valid_forces(&p4(), &s, Rule::Z), f(&[(1, 2)]));
        assert_eq!(valid_forces(&p4(), &s, Rule::FloorZ), f(&[(0, 2), (0, 3), (1, 2)]));
        let e3 = Graph::new(3).unwrap();
        assert_eq!(valid_forces(&e3, &ForcingState::initial(set(&[0])), Rule::H), f(&[(0, 1), (0, 2)]));
    }

    #[test]
    fn applying_forces() {
        let e2 = Graph::new(2).unwrap();
        let s = apply_force(&e2, &ForcingState::initial(set(&[0])), Force::new(0, 1), Rule::H).unwrap();
        assert_eq!(s, ForcingState { blue: set(&[0, 1]), extinct: set(&[0]) });
        assert!(valid_forces(&e2, &s, Rule::H).is_empty());
        let s = apply_force(&p4(), &ForcingState::initial(set(&[0, 1])), Force::new(0, 2), Rule::H).unwrap();
        assert_eq!(vertex_status(&p4(), &s, 1, Rule::H), VertexStatus::Active);
    }

    #[test]
    fn chronological_lists() {
        let done = execute_chronological(&p4(), set(&[0, 1]), &[Force::new(0, 2), Force::new(1, 3)], Rule::H).unwrap();
        assert_eq!(done.blue, p4().vertices());
        let none = execute_chronological(&p4(), set(&[0, 1]), &[], Rule::H).unwrap();
        assert_eq!(none, ForcingState::initial(set(&[0, 1])));
        let err = execute_chronological(&p4(), set(&[0, 1]), &[Force::new(1, 3)], Rule::H).unwrap_err();
        assert!(matches!(err, ForcingError::InvalidForce { index: 0, .. }));
    }

    #[test]
    fn rule_names_round_trip() {
        for r in Rule::ALL {
            assert_eq!(r.as_str().parse::<Rule>().unwrap(), r);
            assert_eq!(serde_json::to_string(&r).unwrap(), format!("\"{r}\""));
        }
    }
}
