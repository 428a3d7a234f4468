//! Exact forcing numbers, propagation times and throttling numbers.
//!
//! Subsets are enumerated by size, then lexicographically; only subsets that
//! take a prefix of every twin class are examined (any other subset is the
//! image of a kept one under a twin-permuting automorphism, and the kept one
//! is lexicographically smaller). Ties always go to the first subset in this
//! order, also when the work is spread over threads.

mod search;

use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds::lower_bound_kappa;
use crate::extended::Extended;
use crate::forcing::{Certificate, Force, Quantity, RoundSchedule, Rule};
use crate::graph::{vertex_connectivity, Graph};
use crate::vertex_set::{combinations, Vertex, VertexSet};
use search::Search;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("search limit reached after {explored} states")]
    LimitExceeded { explored: u64, best: Option<u64> },
    #[error("k = {k} is out of range 0..={n}")]
    SizeOutOfRange { k: usize, n: usize },
}

/// Search limits shared by all workers of one solver call.
#[derive(Debug, Default)]
pub struct Budget {
    max_states: Option<u64>,
    deadline: Option<Instant>,
    explored: AtomicU64,
}

impl Budget {
    pub fn unlimited() -> Budget {
        Budget::default()
    }

    pub fn new(max_states: Option<u64>, time: Option<Duration>) -> Budget {
        Budget { max_states, deadline: time.map(|d| Instant::now() + d), explored: AtomicU64::new(0) }
    }

    pub fn explored(&self) -> u64 {
        self.explored.load(Ordering::Relaxed)
    }

    pub(crate) fn tick(&self) -> Result<(), SolveError> {
        let k = self.explored.fetch_add(1, Ordering::Relaxed) + 1;
        if self.max_states.is_some_and(|m| k > m) || (k.is_multiple_of(1024) && self.deadline.is_some_and(|d| Instant::now() > d)) {
            return Err(SolveError::LimitExceeded { explored: k, best: None });
        }
        Ok(())
    }
}

/// Base set, greedy schedule and the resulting numbers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThrottleCertificate {
    pub base: VertexSet,
    pub schedule: Option<RoundSchedule>,
    pub size: usize,
    pub pt: Extended,
    pub th: Extended,
}

impl ThrottleCertificate {
    pub(crate) fn from_schedule(schedule: RoundSchedule) -> ThrottleCertificate {
        let size = schedule.base().len();
        let pt = schedule.pt() as u64;
        ThrottleCertificate {
            base: schedule.base(),
            size,
            pt: Extended::Finite(pt),
            th: Extended::Finite(pt + size as u64),
            schedule: Some(schedule),
        }
    }

    pub fn certificate(&self, rule: Rule, quantity: Quantity, value: Extended) -> Certificate {
        match &self.schedule {
            Some(s) => Certificate::from_schedule(s, rule),
            None => Certificate::infinite(self.base, rule),
        }
        .with_claim(quantity, value)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProductVariant {
    /// `min k (1 + pt(G, k))` over `X(G) <= k <= n`.
    InitialCost,
    /// `min k pt(G, k)` over `X(G) <= k < n`.
    NoCost,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductCertificate {
    pub variant: ProductVariant,
    /// Minimizing `k`, absent when no admissible `k` has finite `pt`.
    pub k: Option<usize>,
    pub pt_k: Extended,
    pub value: Extended,
    pub witness: Option<ThrottleCertificate>,
}

impl ProductCertificate {
    pub fn recompute(&self) -> Extended {
        match (self.k, self.variant) {
            (None, _) => Extended::Infinite,
            (Some(k), ProductVariant::InitialCost) => (self.pt_k + 1) * k as u64,
            (Some(k), ProductVariant::NoCost) => self.pt_k * k as u64,
        }
    }
}

/// Minimum witness of a forcing number, with one chronological list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForcingNumber {
    pub value: usize,
    pub witness: VertexSet,
    pub list: Vec<Force>,
}

/// Entry point for all searches; carries the shared limits.
#[derive(Debug, Default)]
pub struct Solver {
    budget: Budget,
}

struct Ctx<'a> {
    g: &'a Graph,
    rule: Rule,
    kappa: usize,
    twin: Vec<Vertex>,
    /// Previous member of the same twin class, if any.
    prev_twin: Vec<Option<Vertex>>,
}

impl<'a> Ctx<'a> {
    fn new(g: &'a Graph, rule: Rule) -> Ctx<'a> {
        let twin = g.twin_classes();
        let prev_twin = (0..g.order()).map(|v| (0..v).rev().find(|&u| twin[u] == twin[v])).collect();
        Ctx { g, rule, kappa: vertex_connectivity(g), twin, prev_twin }
    }

    fn search<'b>(&'b self, b: usize, budget: &'b Budget) -> Search<'b> {
        Search { g: self.g, rule: self.rule, b, kappa: self.kappa, twin: &self.twin, budget }
    }

    fn keep(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.prev_twin[v].is_none_or(|u| s.contains(u)))
    }

    fn subsets(&self, k: usize) -> Vec<VertexSet> {
        combinations(self.g.order(), k).filter(|&s| self.keep(s)).collect()
    }

    /// Lower bound on `pt(G; B)` over all `B` with `|B| = k`; `None` when no
    /// such set forces.
    fn pt_lb(&self, k: usize) -> Option<u64> {
        let n = self.g.order();
        if k >= n {
            return Some(0);
        }
        match self.rule {
            Rule::H if k <= self.kappa => None,
            Rule::H => Some((n - k).div_ceil(k - self.kappa) as u64),
            _ => Some(1),
        }
    }
}

fn with_best(e: SolveError, best: Option<u64>) -> SolveError {
    match e {
        SolveError::LimitExceeded { explored, best: None } => SolveError::LimitExceeded { explored, best },
        e => e,
    }
}

impl Solver {
    pub fn new() -> Solver {
        Solver::default()
    }

    pub fn with_limits(max_states: Option<u64>, time: Option<Duration>) -> Solver {
        Solver { budget: Budget::new(max_states, time) }
    }

    pub fn explored(&self) -> u64 {
        self.budget.explored()
    }

    /// Whether `base` is an `rule` forcing set, with a chronological list.
    pub fn is_forcing_set(&self, g: &Graph, base: VertexSet, rule: Rule) -> Result<Option<Vec<Force>>, SolveError> {
        let ctx = Ctx::new(g, rule);
        self.forcing_list(&ctx, base)
    }

    fn forcing_list(&self, ctx: &Ctx, base: VertexSet) -> Result<Option<Vec<Force>>, SolveError> {
        let s = ctx.search(base.len(), &self.budget);
        Ok(s.reach_all(base)?.map(|path| s.realize(&path).forces_in(&path)))
    }

    /// Exact forcing number with the lexicographically least minimum set.
    pub fn forcing_number(&self, g: &Graph, rule: Rule) -> Result<ForcingNumber, SolveError> {
        let ctx = Ctx::new(g, rule);
        let start = if rule == Rule::H { g.min_degree() + 1 } else { 1 };
        for k in start..=g.order() {
            let found = ctx
                .subsets(k)
                .into_par_iter()
                .map(|s| self.forcing_list(&ctx, s).map(|l| l.map(|l| (s, l))))
                .find_first(|r| !matches!(r, Ok(None)));
            match found {
                Some(Ok(Some((witness, list)))) => return Ok(ForcingNumber { value: k, witness, list }),
                Some(Err(e)) => return Err(e),
                _ => {}
            }
        }
        unreachable!("the full vertex set is always forcing")
    }

    fn min_pt_ctx(&self, ctx: &Ctx, base: VertexSet, max: Option<u64>) -> Result<Option<RoundSchedule>, SolveError> {
        let s = ctx.search(base.len(), &self.budget);
        Ok(s.min_rounds(base, max.map(|m| m as usize))?.map(|path| s.schedule(&path)))
    }

    /// `pt(G; base)` minimized over all sets of forces, with an optimal
    /// schedule; with a budget, `None` schedules mean "more than budget".
    pub fn min_propagation_time(
        &self,
        g: &Graph,
        base: VertexSet,
        rule: Rule,
        budget: Option<u64>,
    ) -> Result<(Extended, Option<RoundSchedule>), SolveError> {
        let ctx = Ctx::new(g, rule);
        match self.min_pt_ctx(&ctx, base, budget)? {
            Some(s) => Ok((Extended::Finite(s.pt() as u64), Some(s))),
            None => Ok((Extended::Infinite, None)),
        }
    }

    /// Best `(index, schedule)` among `cands` with `pt <= cap(incumbent)`,
    /// where the incumbent is the least value found so far. Ties go to the
    /// least index.
    fn best_of(
        &self,
        ctx: &Ctx,
        cands: &[VertexSet],
        score: impl Fn(usize) -> u64 + Sync,
        cap: impl Fn(u64) -> Option<u64> + Sync,
        incumbent: &AtomicU64,
    ) -> Result<Option<(usize, RoundSchedule)>, SolveError> {
        let results: Vec<Result<Option<(u64, usize, RoundSchedule)>, SolveError>> = cands
            .par_iter()
            .enumerate()
            .map(|(i, &s)| {
                let Some(max) = cap(incumbent.load(Ordering::Relaxed)) else {
                    return Ok(None);
                };
                let found = self.min_pt_ctx(ctx, s, Some(max))?;
                Ok(found.map(|sch| {
                    let value = score(sch.pt());
                    incumbent.fetch_min(value, Ordering::Relaxed);
                    (value, i, sch)
                }))
            })
            .collect();
        let mut best: Option<(u64, usize, RoundSchedule)> = None;
        for r in results {
            if let Some((v, i, sch)) = r? {
                if best.as_ref().is_none_or(|(bv, bi, _)| (v, i) < (*bv, *bi)) {
                    best = Some((v, i, sch));
                }
            }
        }
        Ok(best.map(|(_, i, s)| (i, s)))
    }

    /// Exact throttling number with the first optimal base.
    pub fn throttling_number(&self, g: &Graph, rule: Rule) -> Result<ThrottleCertificate, SolveError> {
        let ctx = Ctx::new(g, rule);
        let n = g.order();
        let floor = if rule == Rule::H { lower_bound_kappa(n, ctx.kappa).unwrap_or(1) } else { 1 };
        let start = self.forcing_number(g, rule)?.value;
        let mut best: Option<ThrottleCertificate> = None;
        let cur = |best: &Option<ThrottleCertificate>| best.as_ref().and_then(|c| c.th.finite()).unwrap_or(u64::MAX);
        for k in start..=n {
            let incumbent = cur(&best);
            if incumbent <= floor {
                break;
            }
            let Some(lb) = ctx.pt_lb(k) else { continue };
            if k as u64 + lb >= incumbent {
                continue;
            }
            // Strictly better than earlier sizes; ties within this size are
            // kept so the least index wins deterministically.
            let shared = AtomicU64::new(incumbent.saturating_sub(1));
            let cands = ctx.subsets(k);
            let found = self
                .best_of(&ctx, &cands, |pt| pt as u64 + k as u64, |inc| inc.checked_sub(k as u64), &shared)
                .map_err(|e| with_best(e, best.as_ref().and_then(|c| c.th.finite())))?;
            if let Some((_, sch)) = found {
                best = Some(ThrottleCertificate::from_schedule(sch));
            }
        }
        Ok(best.expect("the full vertex set gives a finite value"))
    }

    /// `min pt(G; B)` over `|B| = k`, at most `max` when given.
    fn pt_of_size_capped(&self, ctx: &Ctx, k: usize, max: Option<u64>) -> Result<Option<RoundSchedule>, SolveError> {
        let n = ctx.g.order();
        if k > n {
            return Err(SolveError::SizeOutOfRange { k, n });
        }
        let Some(lb) = ctx.pt_lb(k) else { return Ok(None) };
        if max.is_some_and(|m| lb > m) {
            return Ok(None);
        }
        let cands = ctx.subsets(k);
        let shared = AtomicU64::new(max.unwrap_or(u64::MAX - 1));
        Ok(self.best_of(ctx, &cands, |pt| pt as u64, Some, &shared)?.map(|(_, s)| s))
    }

    /// `pt(G, k)`: least propagation time over sets of size `k`.
    pub fn pt_of_size(&self, g: &Graph, k: usize, rule: Rule) -> Result<(Extended, Option<ThrottleCertificate>), SolveError> {
        let ctx = Ctx::new(g, rule);
        Ok(match self.pt_of_size_capped(&ctx, k, None)? {
            Some(s) => (Extended::Finite(s.pt() as u64), Some(ThrottleCertificate::from_schedule(s))),
            None => (Extended::Infinite, None),
        })
    }

    /// Product throttling by direct evaluation over the admissible sizes.
    pub fn product_throttling(&self, g: &Graph, rule: Rule, variant: ProductVariant) -> Result<ProductCertificate, SolveError> {
        let ctx = Ctx::new(g, rule);
        let n = g.order();
        let start = self.forcing_number(g, rule)?.value;
        let end = match variant {
            ProductVariant::InitialCost => n,
            ProductVariant::NoCost => n - 1,
        };
        let mut best: Option<(u64, usize, RoundSchedule)> = None;
        for k in start..=end {
            let ku = k as u64;
            let Some(lb) = ctx.pt_lb(k) else { continue };
            let value_of = |pt: u64| match variant {
                ProductVariant::InitialCost => ku * (1 + pt),
                ProductVariant::NoCost => ku * pt,
            };
            let incumbent = best.as_ref().map_or(u64::MAX, |b| b.0);
            if value_of(lb) >= incumbent {
                continue;
            }
            // Largest pt with value strictly below the incumbent.
            let max = match (variant, incumbent) {
                (_, u64::MAX) => None,
                (ProductVariant::InitialCost, inc) => Some((inc - 1) / ku - 1),
                (ProductVariant::NoCost, inc) => Some((inc - 1) / ku),
            };
            if let Some(s) = self.pt_of_size_capped(&ctx, k, max)? {
                best = Some((value_of(s.pt() as u64), k, s));
            }
        }
        Ok(match best {
            Some((value, k, s)) => ProductCertificate {
                variant,
                k: Some(k),
                pt_k: Extended::Finite(s.pt() as u64),
                value: Extended::Finite(value),
                witness: Some(ThrottleCertificate::from_schedule(s)),
            },
            None => ProductCertificate { variant, k: None, pt_k: Extended::Infinite, value: Extended::Infinite, witness: None },
        })
    }

    /// `k(G, p)`: least `|B|` with `pt(G; B) = p` exactly.
    pub fn k_of_pt(&self, g: &Graph, p: usize, rule: Rule) -> Result<Option<(usize, ThrottleCertificate)>, SolveError> {
        let ctx = Ctx::new(g, rule);
        let n = g.order();
        if p == 0 {
            let s = RoundSchedule { rounds: vec![g.vertices()], forces: vec![Vec::new()] };
            return Ok(Some((n, ThrottleCertificate::from_schedule(s))));
        }
        let start = self.forcing_number(g, rule)?.value;
        for k in start..n {
            if ctx.pt_lb(k).is_none_or(|lb| lb > p as u64) {
                continue;
            }
            let cands = ctx.subsets(k);
            let hit = AtomicUsize::new(usize::MAX);
            let results: Vec<Result<Option<RoundSchedule>, SolveError>> = cands
                .par_iter()
                .enumerate()
                .map(|(i, &s)| {
                    if hit.load(Ordering::Relaxed) < i {
                        return Ok(None);
                    }
                    let found = self.min_pt_ctx(&ctx, s, Some(p as u64))?;
                    Ok(found.filter(|sch| sch.pt() == p).inspect(|_| {
                        hit.fetch_min(i, Ordering::Relaxed);
                    }))
                })
                .collect();
            for r in results {
                if let Some(s) = r? {
                    return Ok(Some((k, ThrottleCertificate::from_schedule(s))));
                }
            }
        }
        Ok(None)
    }
}

impl crate::forcing::ForceSet {
    /// Orders the forces by the step at which each target turns blue along
    /// `path` (consecutive blue sets differing in one vertex).
    fn forces_in(&self, path: &[VertexSet]) -> Vec<Force> {
        path.windows(2)
            .map(|w| {
                let dst = w[1].difference(w[0]).first().expect("one new vertex per step");
                *self.forces.iter().find(|f| f.dst == dst).expect("every target has a force")
            })
            .collect()
    }
}

pub fn forcing_number(g: &Graph, rule: Rule) -> ForcingNumber {
    Solver::new().forcing_number(g, rule).expect("unlimited")
}

pub fn is_forcing_set(g: &Graph, base: VertexSet, rule: Rule) -> bool {
    Solver::new().is_forcing_set(g, base, rule).expect("unlimited").is_some()
}

pub fn min_propagation_time(g: &Graph, base: VertexSet, rule: Rule) -> Extended {
    Solver::new().min_propagation_time(g, base, rule, None).expect("unlimited").0
}

pub fn throttling_number(g: &Graph, rule: Rule) -> ThrottleCertificate {
    Solver::new().throttling_number(g, rule).expect("unlimited")
}

pub fn pt_of_size(g: &Graph, k: usize, rule: Rule) -> Extended {
    Solver::new().pt_of_size(g, k, rule).expect("k in range").0
}

pub fn product_throttling(g: &Graph, variant: ProductVariant) -> ProductCertificate {
    Solver::new().product_throttling(g, Rule::H, variant).expect("unlimited")
}

pub fn k_of_pt(g: &Graph, p: usize) -> Option<usize> {
    Solver::new().k_of_pt(g, p, Rule::H).expect("unlimited").map(|(k, _)| k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, Family};

    fn fam(f: Family) -> Graph {
        make_family(&f).unwrap()
    }

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn forcing_numbers() {
        assert_eq!(forcing_number(&fam(Family::Petersen), Rule::H).value, 6);
        assert_eq!(forcing_number(&fam(Family::Petersen), Rule::Z).value, 5);
        assert_eq!(forcing_number(&fam(Family::CompleteBipartite(2, 3)), Rule::H).value, 3);
        assert_eq!(forcing_number(&fam(Family::CompleteBipartite(2, 3)), Rule::Z).value, 3);
        assert_eq!(forcing_number(&fam(Family::Wheel(6)), Rule::H).value, 4);
        assert_eq!(forcing_number(&fam(Family::Star(9)), Rule::H).value, 2);
        assert_eq!(forcing_number(&fam(Family::Cycle(7)), Rule::H).value, 3);
        assert_eq!(forcing_number(&fam(Family::Path(8)), Rule::H).value, 2);
        assert_eq!(forcing_number(&fam(Family::Path(8)), Rule::Z).value, 1);
        assert_eq!(forcing_number(&fam(Family::Star(5)), Rule::FloorZ).value, 2);
    }

    #[test]
    fn forcing_sets() {
        let k5 = fam(Family::Complete(5));
        assert!(!is_forcing_set(&k5, set(&[0, 1, 2, 3]), Rule::H));
        assert!(is_forcing_set(&Graph::new(6).unwrap(), set(&[4]), Rule::H));
        // u = 0, N(u) = {1, 4, 5}, plus 2 at distance two.
        assert!(!is_forcing_set(&fam(Family::Petersen), set(&[0, 1, 4, 5, 2]), Rule::H));
        let list = Solver::new().is_forcing_set(&fam(Family::Cycle(6)), set(&[0, 1, 2]), Rule::H).unwrap().unwrap();
        assert!(crate::forcing::execute_chronological(&fam(Family::Cycle(6)), set(&[0, 1, 2]), &list, Rule::H).is_ok());
    }

    #[test]
    fn propagation_times() {
        let p4 = fam(Family::Path(4));
        assert_eq!(min_propagation_time(&p4, set(&[0, 1]), Rule::H), Extended::Finite(2));
        assert_eq!(min_propagation_time(&p4, p4.vertices(), Rule::H), Extended::Finite(0));
        let k35 = fam(Family::CompleteBipartite(3, 5));
        assert_eq!(min_propagation_time(&k35, set(&[0, 1, 2, 3, 4]), Rule::H), Extended::Finite(2));
        assert_eq!(min_propagation_time(&fam(Family::Complete(3)), set(&[0, 1]), Rule::H), Extended::Infinite);
    }

    #[test]
    fn throttling() {
        assert_eq!(throttling_number(&fam(Family::Path(10)), Rule::H).th, Extended::Finite(6));
        assert_eq!(throttling_number(&fam(Family::Petersen), Rule::H).th, Extended::Finite(8));
        assert_eq!(throttling_number(&fam(Family::Petersen), Rule::Z).th, Extended::Finite(6));
        assert_eq!(throttling_number(&fam(Family::Empty(9)), Rule::H).th, Extended::Finite(5));
        assert_eq!(throttling_number(&fam(Family::Cycle(11)), Rule::H).th, Extended::Finite(7));
        assert_eq!(throttling_number(&fam(Family::Cross), Rule::H).th, Extended::Finite(5));
    }

    #[test]
    fn sizes_and_products() {
        let e4 = Graph::new(4).unwrap();
        // Both blue vertices hop in the first round
        assert_eq!(pt_of_size(&e4, 2, Rule::H), Extended::Finite(1));
        assert_eq!(pt_of_size(&e4, 1, Rule::H), Extended::Finite(3));
        assert_eq!(pt_of_size(&e4, 4, Rule::H), Extended::Finite(0));
        assert_eq!(pt_of_size(&fam(Family::Complete(4)), 3, Rule::H), Extended::Infinite);
        assert!(Solver::new().pt_of_size(&e4, 5, Rule::H).is_err());
        assert_eq!(product_throttling(&fam(Family::Cycle(5)), ProductVariant::InitialCost).value, Extended::Finite(5));
        assert_eq!(product_throttling(&fam(Family::Path(7)), ProductVariant::NoCost).value, Extended::Finite(4));
        assert_eq!(product_throttling(&fam(Family::Complete(4)), ProductVariant::NoCost).value, Extended::Infinite);
        assert_eq!(k_of_pt(&fam(Family::Path(5)), 1), Some(3));
        assert_eq!(k_of_pt(&fam(Family::Path(5)), 0), Some(5));
        assert_eq!(k_of_pt(&e4, 1), Some(2));
    }

    #[test]
    fn limits_are_reported() {
        let solver = Solver::with_limits(Some(10), None);
        let err = solver.throttling_number(&fam(Family::Petersen), Rule::H).unwrap_err();
        assert!(matches!(err, SolveError::LimitExceeded { .. }));
    }
}
