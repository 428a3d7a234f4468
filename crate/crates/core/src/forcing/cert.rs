use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{round_decompose, Force, ForceSet, ForcingError, RoundSchedule, Rule};
use crate::extended::Extended;
use crate::graph::{parse_graph6, write_graph6, Graph, GraphError};
use crate::vertex_set::{Vertex, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScheduledForce {
    pub src: Vertex,
    pub dst: Vertex,
    pub round: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    Number,
    Pt,
    Throttle,
    ProductX,
    ProductStar,
}

/// Serializable record of a base set, its scheduled forces and the claimed
/// numbers, re-checkable against the graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub base: VertexSet,
    pub forces: Vec<ScheduledForce>,
    pub rule: Rule,
    pub pt: Extended,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parameter: Option<Rule>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quantity: Option<Quantity>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<Extended>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph: Option<String>,
}

#[derive(Debug, Error)]
pub enum CertificateError {
    #[error(transparent)]
    Forcing(#[from] ForcingError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("certificate carries no graph and none was supplied")]
    NoGraph,
    #[error("force {force} is listed in round {listed} but is scheduled in round {actual}")]
    RoundMismatch { force: Force, listed: usize, actual: usize },
    #[error("claimed pt {claimed} but the schedule gives {actual}")]
    PtMismatch { claimed: Extended, actual: Extended },
    #[error("finite pt claimed but {0:?} stays white")]
    NotCovering(VertexSet),
    #[error("claimed value {claimed} but the certificate implies {actual}")]
    ValueMismatch { claimed: Extended, actual: Extended },
}

impl Certificate {
    pub fn from_schedule(schedule: &RoundSchedule, rule: Rule) -> Certificate {
        let forces = schedule
            .forces
            .iter()
            .enumerate()
            .flat_map(|(round, fs)| fs.iter().map(move |f| ScheduledForce { src: f.src, dst: f.dst, round }))
            .collect();
        Certificate {
            base: schedule.base(),
            forces,
            rule,
            pt: Extended::Finite(schedule.pt() as u64),
            parameter: None,
            quantity: None,
            value: None,
            graph: None,
        }
    }

    /// A certificate for a base that is not a forcing set.
    pub fn infinite(base: VertexSet, rule: Rule) -> Certificate {
        Certificate {
            base,
            forces: Vec::new(),
            rule,
            pt: Extended::Infinite,
            parameter: None,
            quantity: None,
            value: None,
            graph: None,
        }
    }

    pub fn with_claim(mut self, quantity: Quantity, value: Extended) -> Certificate {
        self.parameter = Some(self.rule);
        self.quantity = Some(quantity);
        self.value = Some(value);
        self
    }

    pub fn with_graph(mut self, g: &Graph) -> Certificate {
        self.graph = Some(write_graph6(g));
        self
    }

    pub fn force_set(&self) -> ForceSet {
        ForceSet::new(self.base, self.forces.iter().map(|f| Force::new(f.src, f.dst)).collect())
    }

    /// Recomputes the greedy schedule and checks the listed rounds, the
    /// claimed propagation time and the claimed value implied by `|B|` and `pt`.
    /// For an infinite claim only the structure is checked.
    pub fn validate(&self, g: Option<&Graph>) -> Result<Option<RoundSchedule>, CertificateError> {
        let owned;
        let g = match (g, &self.graph) {
            (Some(g), _) => g,
            (None, Some(text)) => {
                owned = parse_graph6(text)?;
                &owned
            }
            (None, None) => return Err(CertificateError::NoGraph),
        };
        let fs = self.force_set();
        fs.check(g.order())?;
        if self.pt == Extended::Infinite {
            return Ok(None);
        }
        let schedule = round_decompose(g, &fs, self.rule)?;
        for (round, forces) in schedule.forces.iter().enumerate() {
            for f in forces {
                let listed = self.forces.iter().find(|s| s.src == f.src && s.dst == f.dst).expect("same force set");
                if listed.round != round {
                    return Err(CertificateError::RoundMismatch { force: *f, listed: listed.round, actual: round });
                }
            }
        }
        let missing = g.vertices().difference(schedule.covered());
        if !missing.is_empty() {
            return Err(CertificateError::NotCovering(missing));
        }
        let actual = Extended::Finite(schedule.pt() as u64);
        if actual != self.pt {
            return Err(CertificateError::PtMismatch { claimed: self.pt, actual });
        }
        if let (Some(q), Some(v)) = (self.quantity, self.value) {
            let k = self.base.len() as u64;
            let implied = match q {
                Quantity::Number => Extended::Finite(k),
                Quantity::Pt => actual,
                Quantity::Throttle => actual + k,
                Quantity::ProductX => (actual + 1) * k,
                Quantity::ProductStar => actual * k,
            };
            if implied != v {
                return Err(CertificateError::ValueMismatch { claimed: v, actual: implied });
            }
        }
        Ok(Some(schedule))
    }
}
