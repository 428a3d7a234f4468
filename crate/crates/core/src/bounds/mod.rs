//! Closed-form throttling bounds, family values, explicit witnesses and the
//! bound checks against exact solver output.

mod spider;
mod witness;

pub use spider::{adjacency_rows, spider_strict_gap, tight_schedule_exists, zero_slack_verdict, SpiderVerdict};
pub use witness::{build_bipartite_witness, build_snaking_witness, Snake};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::extended::Extended;
use crate::forcing::Rule;
use crate::graph::{structural_report, write_graph6, Family, Graph};
use crate::solvers::{Solver, SolveError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundsError {
    #[error("{what} out of range: {detail}")]
    Range { what: &'static str, detail: String },
    #[error("no closed form recorded for {0}")]
    Unsupported(String),
    #[error("bound violated for {graph}: lower {lower} <= exact {exact} <= upper {upper} fails")]
    SandwichViolation { graph: String, lower: u64, exact: u64, upper: u64 },
    #[error("witness failed to validate: {0}")]
    Witness(String),
    #[error(transparent)]
    Solve(#[from] SolveError),
}

fn range(what: &'static str, detail: String) -> BoundsError {
    BoundsError::Range { what, detail }
}

/// `ceil(2 sqrt(x))`, the least `j` with `j^2 >= 4x`, in exact integers.
pub fn ceil_two_sqrt(x: u64) -> u64 {
    if x == 0 {
        return 0;
    }
    let j = (4 * x - 1).isqrt() + 1;
    debug_assert!(j * j >= 4 * x && (j - 1) * (j - 1) < 4 * x);
    j
}

/// `ceil(2 sqrt(n - kappa) + kappa - 1)`.
pub fn lower_bound_kappa(n: usize, kappa: usize) -> Result<u64, BoundsError> {
    if n == 0 || kappa >= n {
        return Err(range("kappa", format!("need 0 <= kappa <= n - 1, got n = {n}, kappa = {kappa}")));
    }
    Ok(ceil_two_sqrt((n - kappa) as u64) + kappa as u64 - 1)
}

/// `ceil(n - alpha + 2 sqrt(alpha) - 1)`.
pub fn upper_bound_alpha(n: usize, alpha: usize) -> Result<u64, BoundsError> {
    if alpha == 0 || alpha > n {
        return Err(range("alpha", format!("need 1 <= alpha <= n, got n = {n}, alpha = {alpha}")));
    }
    Ok((n - alpha) as u64 + ceil_two_sqrt(alpha as u64) - 1)
}

/// Known exact values for a family member; absent entries have no closed
/// form recorded here.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyValues {
    pub h: Option<u64>,
    pub z: Option<u64>,
    pub th_h: Option<u64>,
    pub th_z: Option<u64>,
    pub th_star: Option<Extended>,
}

pub fn family_formula(family: &Family) -> Result<FamilyValues, BoundsError> {
    let c2 = |x: usize| ceil_two_sqrt(x as u64);
    let mut v = FamilyValues::default();
    match *family {
        Family::Path(n) if n >= 2 => {
            v.h = Some(2);
            v.z = Some(1);
            v.th_h = Some(c2(n - 1));
            v.th_z = Some(c2(n) - 1);
            if n >= 3 {
                v.th_star = Some(Extended::Finite(n.div_ceil(2) as u64 + (n % 2 == 0) as u64));
            }
        }
        Family::Cycle(n) => {
            v.h = Some(3);
            v.z = Some(2);
            v.th_h = Some(c2(n - 2) + 1);
        }
        Family::Wheel(_) => {
            v.h = Some(4);
            v.z = Some(3);
        }
        Family::Star(n) => {
            v.h = Some(2);
            if n >= 3 {
                v.z = Some(n as u64 - 2);
            }
            v.th_h = Some(c2(n - 1));
        }
        Family::Complete(n) => {
            v.h = Some(n as u64);
            v.th_h = Some(n as u64);
            v.th_star = Some(Extended::Infinite);
        }
        Family::Empty(n) => {
            v.h = Some(1);
            v.th_h = Some(c2(n) - 1);
        }
        Family::CompleteBipartite(s, t) => {
            let (s, t) = (s.min(t), s.max(t));
            v.h = Some(s as u64 + 1);
            v.th_h = Some(c2(t) + s as u64 - 1);
            if s >= 1 && t >= 2 {
                v.z = Some((s + t - 2) as u64);
            }
            if s >= 2 {
                v.th_z = Some((s + t - 1) as u64);
            }
        }
        Family::Petersen => {
            v.h = Some(6);
            v.z = Some(5);
            v.th_h = Some(8);
            v.th_z = Some(6);
        }
        Family::Cross => v.th_h = Some(5),
        Family::KsP2(s) => {
            v.th_h = Some(c2(s) + s as u64 - 1);
            v.th_z = Some(s as u64 + 1);
        }
        _ => return Err(BoundsError::Unsupported(family.to_string())),
    }
    Ok(v)
}

/// Both bounds for one graph, with the exact value when known.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub graph6: String,
    pub n: usize,
    pub kappa: usize,
    pub alpha: usize,
    pub delta: usize,
    pub lower: u64,
    pub exact: Option<u64>,
    pub upper: u64,
    pub tight_lower: bool,
    pub tight_upper: bool,
    /// The exact value follows from `kappa + alpha = n` without search.
    #[serde(skip)]
    pub by_shortcut: bool,
}

/// Computes both bounds and checks them against `exact`, or against the
/// exact solver when `exact` is `None` (skipped when `kappa + alpha = n`,
/// where the bounds coincide).
pub fn verify_bounds(g: &Graph, exact: Option<u64>, solver: &Solver) -> Result<BoundReport, BoundsError> {
    let s = structural_report(g);
    let n = g.order();
    let lower = lower_bound_kappa(n, s.kappa)?;
    let upper = upper_bound_alpha(n, s.alpha)?;
    let shortcut = s.kappa + s.alpha == n;
    let (exact, by_shortcut) = match exact {
        Some(e) => (e, false),
        None if shortcut => (lower, true),
        None => {
            let th = solver.throttling_number(g, Rule::H)?.th;
            (th.finite().expect("full set gives finite throttling"), false)
        }
    };
    if !(lower <= exact && exact <= upper) || (shortcut && lower != upper) {
        return Err(BoundsError::SandwichViolation { graph: write_graph6(g), lower, exact, upper });
    }
    Ok(BoundReport {
        graph6: write_graph6(g),
        n,
        kappa: s.kappa,
        alpha: s.alpha,
        delta: s.delta,
        lower,
        exact: Some(exact),
        upper,
        tight_lower: exact == lower,
        tight_upper: exact == upper,
        by_shortcut,
    })
}

/// The report without any exact value.
pub fn bound_report(g: &Graph) -> BoundReport {
    let s = structural_report(g);
    let n = g.order();
    let lower = lower_bound_kappa(n, s.kappa).expect("kappa < n");
    let upper = upper_bound_alpha(n, s.alpha).expect("1 <= alpha <= n");
    BoundReport {
        graph6: write_graph6(g),
        n,
        kappa: s.kappa,
        alpha: s.alpha,
        delta: s.delta,
        lower,
        exact: None,
        upper,
        tight_lower: false,
        tight_upper: false,
        by_shortcut: false,
    }
}
