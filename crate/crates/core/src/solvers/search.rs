//! State-space search over blue sets.
//!
//! In every reachable state of a process under any of the three rules, the
//! blue vertices that have not yet forced always number `|B|`, and no vertex
//! with a white neighbor has forced. So the unspent blue vertices are the
//! boundary (blue vertices with a white neighbor) plus
//! `c = |B| - |boundary|` interchangeable vertices with all-blue
//! neighborhoods, which are exactly the hop-capable ones. The blue set alone
//! is therefore a complete state, and one round may color any nonempty white
//! set `W` with `|W - Zcov| <= c` (hop rules) or `W ⊆ Zcov` (standard rule),
//! where `Zcov` holds the unique white neighbors of blue vertices.

use std::collections::{HashMap, HashSet};

use super::{Budget, SolveError};
use crate::forcing::{boundary, round_decompose, z_source, z_targets, Force, ForceSet, RoundSchedule, Rule};
use crate::graph::Graph;
use crate::vertex_set::{Vertex, VertexSet};

pub(crate) struct Search<'a> {
    pub g: &'a Graph,
    pub rule: Rule,
    /// Size of the initial blue set.
    pub b: usize,
    pub kappa: usize,
    /// Twin class label (least member) of each vertex.
    pub twin: &'a [Vertex],
    pub budget: &'a Budget,
}

impl<'a> Search<'a> {
    fn all(&self) -> VertexSet {
        self.g.vertices()
    }

    /// Hop-capable vertex count in state `blue` (may be negative only for
    /// unreachable states).
    fn actives(&self, blue: VertexSet) -> isize {
        if !self.rule.hops() {
            return 0;
        }
        self.b as isize - boundary(self.g, blue).len() as isize
    }

    fn zcov(&self, blue: VertexSet) -> VertexSet {
        if self.rule.zforces() {
            z_targets(self.g, blue)
        } else {
            VertexSet::EMPTY
        }
    }

    /// Admissible lower bound on the rounds still needed from `blue`, or
    /// `None` when no force is possible.
    pub fn remaining_lb(&self, blue: VertexSet) -> Option<usize> {
        let white = self.all().difference(blue).len();
        if white == 0 {
            return Some(0);
        }
        let c = self.actives(blue).max(0) as usize;
        match self.rule {
            Rule::H => {
                if c == 0 {
                    return None;
                }
                if white <= c {
                    return Some(1);
                }
                // Later rounds have at least kappa dormant vertices.
                let per = self.b.saturating_sub(self.kappa).max(1);
                Some(1 + (white - c).div_ceil(per))
            }
            Rule::Z | Rule::FloorZ => {
                if c == 0 && self.zcov(blue).is_empty() {
                    None
                } else {
                    Some(1)
                }
            }
        }
    }

    /// White vertices grouped by twin class, classes in order of least
    /// member, members ascending.
    fn white_classes(&self, white: VertexSet) -> Vec<VertexSet> {
        let mut classes: Vec<(Vertex, VertexSet)> = Vec::new();
        for w in white.iter() {
            match classes.iter_mut().find(|(rep, _)| *rep == self.twin[w]) {
                Some((_, set)) => set.insert(w),
                None => classes.push((self.twin[w], VertexSet::singleton(w))),
            }
        }
        classes.into_iter().map(|(_, s)| s).collect()
    }

    /// One representative for every round move up to automorphisms that
    /// permute white twins: from each class only a prefix is chosen.
    pub fn round_moves(&self, blue: VertexSet) -> Vec<VertexSet> {
        let white = self.all().difference(blue);
        if white.is_empty() {
            return Vec::new();
        }
        let zcov = self.zcov(blue);
        if self.rule == Rule::Z {
            return if zcov.is_empty() { Vec::new() } else { vec![zcov] };
        }
        let c = self.actives(blue).max(0) as usize;
        let classes = self.white_classes(white);
        let mut out = Vec::new();
        prefix_choices(&classes, 0, VertexSet::EMPTY, c, zcov, &mut out);
        out.retain(|w| !w.is_empty());
        out
    }

    /// Single-force moves, one per white twin class.
    fn single_moves(&self, blue: VertexSet) -> Vec<Vertex> {
        let white = self.all().difference(blue);
        let zcov = self.zcov(blue);
        let hop = self.actives(blue) > 0;
        let mut seen = VertexSet::EMPTY;
        let mut zs = Vec::new();
        let mut hs = Vec::new();
        for w in white.iter() {
            if seen.contains(self.twin[w]) {
                continue;
            }
            seen.insert(self.twin[w]);
            if zcov.contains(w) {
                zs.push(w);
            } else if hop {
                hs.push(w);
            }
        }
        zs.extend(hs);
        zs
    }

    /// Whether some chronological list from `base` colors every vertex;
    /// returns the sequence of blue sets along one such list.
    pub fn reach_all(&self, base: VertexSet) -> Result<Option<Vec<VertexSet>>, SolveError> {
        let all = self.all();
        if self.rule == Rule::Z {
            let mut path = vec![base];
            let mut blue = base;
            while blue != all {
                let z = z_targets(self.g, blue);
                let Some(w) = z.first() else {
                    return Ok(None);
                };
                blue.insert(w);
                path.push(blue);
            }
            return Ok(Some(path));
        }
        let mut dead: HashSet<VertexSet> = HashSet::new();
        let mut path = vec![base];
        if self.dfs(base, &mut dead, &mut path)? {
            Ok(Some(path))
        } else {
            Ok(None)
        }
    }

    fn dfs(&self, blue: VertexSet, dead: &mut HashSet<VertexSet>, path: &mut Vec<VertexSet>) -> Result<bool, SolveError> {
        let all = self.all();
        if blue == all {
            return Ok(true);
        }
        let white = all.difference(blue);
        if self.rule == Rule::H && self.actives(blue) as usize >= white.len() {
            for w in white.iter() {
                let last = *path.last().expect("nonempty path");
                path.push(last.with(w));
            }
            return Ok(true);
        }
        self.budget.tick()?;
        for w in self.single_moves(blue) {
            let next = blue.with(w);
            if dead.contains(&next) {
                continue;
            }
            path.push(next);
            if self.dfs(next, dead, path)? {
                return Ok(true);
            }
            path.pop();
            dead.insert(next);
        }
        Ok(false)
    }

    /// Fewest rounds from `base` to all blue, if at most `max_rounds`;
    /// returns the blue set after each round.
    pub fn min_rounds(&self, base: VertexSet, max_rounds: Option<usize>) -> Result<Option<Vec<VertexSet>>, SolveError> {
        let all = self.all();
        if base == all {
            return Ok(Some(vec![base]));
        }
        let limit = max_rounds.unwrap_or(usize::MAX);
        if self.rule == Rule::Z {
            let mut path = vec![base];
            let mut blue = base;
            while blue != all {
                let z = z_targets(self.g, blue);
                if z.is_empty() || path.len() > limit {
                    return Ok(None);
                }
                blue = blue.union(z);
                path.push(blue);
            }
            return Ok(if path.len() - 1 <= limit { Some(path) } else { None });
        }
        let mut parent: HashMap<VertexSet, VertexSet> = HashMap::new();
        parent.insert(base, base);
        let mut level = vec![base];
        let mut depth = 0;
        while !level.is_empty() && depth < limit {
            let mut next_level = Vec::new();
            for &blue in &level {
                for w in self.round_moves(blue) {
                    let next = blue.union(w);
                    if parent.contains_key(&next) {
                        continue;
                    }
                    self.budget.tick()?;
                    if next == all {
                        parent.insert(next, blue);
                        return Ok(Some(unwind(&parent, base, next)));
                    }
                    match self.remaining_lb(next) {
                        Some(lb) if depth + 1 + lb <= limit => {
                            parent.insert(next, blue);
                            next_level.push(next);
                        }
                        _ => {
                            // Still mark as seen: any later arrival is deeper.
                            parent.insert(next, blue);
                        }
                    }
                }
            }
            level = next_level;
            depth += 1;
        }
        Ok(None)
    }

    /// Turns a sequence of blue sets into concrete forces. Targets in
    /// `Zcov` are taken by standard forces when the rule permits, the rest by
    /// hops from the least unspent vertices with all-blue neighborhoods.
    pub fn realize(&self, path: &[VertexSet]) -> ForceSet {
        let mut spent = VertexSet::EMPTY;
        let mut forces = Vec::new();
        for step in path.windows(2) {
            let (blue, next) = (step[0], step[1]);
            let targets = next.difference(blue);
            let mut hop_targets = Vec::new();
            for w in targets.iter() {
                match (self.rule.zforces(), z_source(self.g, blue, w)) {
                    (true, Some(v)) => {
                        forces.push(Force::new(v, w));
                        spent.insert(v);
                    }
                    _ => hop_targets.push(w),
                }
            }
            let interior = blue.difference(boundary(self.g, blue)).difference(spent);
            assert!(interior.len() >= hop_targets.len(), "move exceeds available hop sources");
            for (v, w) in interior.iter().zip(hop_targets) {
                forces.push(Force::new(v, w));
                spent.insert(v);
            }
        }
        ForceSet::new(path[0], forces)
    }

    pub fn schedule(&self, path: &[VertexSet]) -> RoundSchedule {
        let fs = self.realize(path);
        let schedule = round_decompose(self.g, &fs, self.rule).expect("realized force set is linearizable");
        debug_assert!(schedule.pt() < path.len());
        schedule
    }
}

fn unwind(parent: &HashMap<VertexSet, VertexSet>, base: VertexSet, mut at: VertexSet) -> Vec<VertexSet> {
    let mut path = vec![at];
    while at != base {
        at = parent[&at];
        path.push(at);
    }
    path.reverse();
    path
}

fn prefix_choices(classes: &[VertexSet], i: usize, acc: VertexSet, hops_left: usize, zcov: VertexSet, out: &mut Vec<VertexSet>) {
    if i == classes.len() {
        out.push(acc);
        return;
    }
    let class = classes[i];
    let free = class.is_subset(zcov);
    let max = if free { class.len() } else { class.len().min(hops_left) };
    let mut chosen = acc;
    let mut members = class.iter();
    for j in 0..=max {
        if j > 0 {
            chosen.insert(members.next().expect("class member"));
        }
        let left = if free { hops_left } else { hops_left - j };
        prefix_choices(classes, i + 1, chosen, left, zcov, out);
    }
}
