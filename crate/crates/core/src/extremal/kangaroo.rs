//! Layered kangaroo graphs. For parts `(k_1, ..., k_r)` the layers `S_i`,
//! `T_i` have `k_i + 1` vertices each, so that coloring everything outside
//! the `T_i` and hopping `S_i -> T_i` in round `i` finishes with
//! `th_H <= n - (k_1 + ... + k_r)`.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::ExtremalError;
use crate::graph::{canonical_key, CanonKey, Graph, MAX_CANONICAL_VERTICES};
use crate::vertex_set::{Vertex, VertexSet};

/// Generation is refused when a composition could need more vertices.
pub const MAX_KANGAROO_VERTICES: usize = MAX_CANONICAL_VERTICES;

/// Largest number of unconstrained vertex pairs enumerated for one layer
/// structure.
const MAX_FREE_PAIRS: usize = 26;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KangarooStructure {
    pub parts: Vec<usize>,
    pub s: Vec<VertexSet>,
    pub t: Vec<VertexSet>,
}

/// All compositions of `n` in lexicographic order.
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    (1..=n)
        .flat_map(|first| {
            compositions(n - first).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

fn check_parts(parts: &[usize]) -> Result<(), ExtremalError> {
    if parts.is_empty() || parts.contains(&0) {
        return Err(ExtremalError::BadComposition(parts.to_vec()));
    }
    Ok(())
}

/// Pairs that may not be edges: `S_i`–`T_j` with `i <= j`.
fn forbidden_pair(st: &KangarooStructure, x: Vertex, y: Vertex) -> bool {
    let r = st.parts.len();
    (0..r).any(|i| {
        (i..r).any(|j| {
            (st.s[i].contains(x) && st.t[j].contains(y)) || (st.s[i].contains(y) && st.t[j].contains(x))
        })
    })
}

fn dominated(g: &Graph, set: VertexSet, by: VertexSet) -> bool {
    set.iter().all(|v| by.contains(v) || !g.neighbors(v).intersection(by).is_empty())
}

/// Checks that `st` is a valid layering of `g`: sizes, cover, the three
/// disjointness conditions, no `S_i`–`T_j` edges for `i <= j`, and `S_i`
/// dominated by `T_{i-1}`.
pub fn check_kangaroo(g: &Graph, st: &KangarooStructure) -> bool {
    let r = st.parts.len();
    if st.s.len() != r || st.t.len() != r || check_parts(&st.parts).is_err() {
        return false;
    }
    let sizes_ok = (0..r).all(|i| st.s[i].len() == st.parts[i] + 1 && st.t[i].len() == st.parts[i] + 1);
    let cover = st.s.iter().chain(&st.t).fold(VertexSet::EMPTY, |a, &b| a.union(b));
    let pairwise = |sets: &[VertexSet]| {
        (0..r).all(|i| (i + 1..r).all(|j| sets[i].intersection(sets[j]).is_empty()))
    };
    let s_before_t = (0..r).all(|i| (i..r).all(|j| st.s[i].intersection(st.t[j]).is_empty()));
    let no_edges = (0..r).all(|i| {
        (i..r).all(|j| st.s[i].iter().all(|v| g.neighbors(v).intersection(st.t[j]).is_empty()))
    });
    let dom = (1..r).all(|i| dominated(g, st.s[i], st.t[i - 1]));
    sizes_ok && cover == g.vertices() && pairwise(&st.s) && pairwise(&st.t) && s_before_t && no_edges && dom
}

/// Role of a vertex: member of `S_i`, of `T_j`, or of both (then `i > j`).
#[derive(Clone, Copy)]
struct Role {
    s: Option<usize>,
    t: Option<usize>,
}

fn roles(r: usize) -> Vec<Role> {
    let mut out = Vec::new();
    for i in 0..r {
        out.push(Role { s: Some(i), t: None });
        out.push(Role { s: None, t: Some(i) });
        for j in 0..i {
            out.push(Role { s: Some(i), t: Some(j) });
        }
    }
    out
}

/// Searches for a layering of `g` with the given parts.
pub fn recognize_kangaroo(g: &Graph, parts: &[usize]) -> Option<KangarooStructure> {
    check_parts(parts).ok()?;
    let r = parts.len();
    let total: usize = parts.iter().map(|k| 2 * (k + 1)).sum();
    let n = g.order();
    if n > total || n < total / 2 {
        return None;
    }
    let mut st = KangarooStructure { parts: parts.to_vec(), s: vec![VertexSet::EMPTY; r], t: vec![VertexSet::EMPTY; r] };
    let options = roles(r);
    fn go(g: &Graph, v: Vertex, options: &[Role], st: &mut KangarooStructure) -> bool {
        let r = st.parts.len();
        if v == g.order() {
            return check_kangaroo(g, st);
        }
        for role in options {
            let full = |set: &VertexSet, i: usize| set.len() > st.parts[i];
            if role.s.is_some_and(|i| full(&st.s[i], i)) || role.t.is_some_and(|j| full(&st.t[j], j)) {
                continue;
            }
            // No edge from an S_i vertex into T_j, j >= i, in either direction
            let bad_edge = g.neighbors(v).intersection(VertexSet::full(v)).iter().any(|w| {
                role.s.is_some_and(|i| (i..r).any(|j| st.t[j].contains(w)))
                    || role.t.is_some_and(|j| (0..=j).any(|i| st.s[i].contains(w)))
            });
            if bad_edge {
                continue;
            }
            if let Some(i) = role.s {
                st.s[i].insert(v);
            }
            if let Some(j) = role.t {
                st.t[j].insert(v);
            }
            if go(g, v + 1, options, st) {
                return true;
            }
            if let Some(i) = role.s {
                st.s[i].remove(v);
            }
            if let Some(j) = role.t {
                st.t[j].remove(v);
            }
        }
        false
    }
    go(g, 0, &options, &mut st).then_some(st)
}

/// Overlap matrices `c[i][j] = |S_i ∩ T_j|` for `i > j` within the layer
/// sizes.
fn overlap_patterns(sizes: &[usize]) -> Vec<Vec<Vec<usize>>> {
    let r = sizes.len();
    let cells: Vec<(usize, usize)> = (0..r).flat_map(|i| (0..i).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    let mut c = vec![vec![0; r]; r];
    fn go(
        idx: usize,
        cells: &[(usize, usize)],
        sizes: &[usize],
        c: &mut Vec<Vec<usize>>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if idx == cells.len() {
            out.push(c.clone());
            return;
        }
        let (i, j) = cells[idx];
        let row: usize = c[i].iter().sum();
        let col: usize = (0..c.len()).map(|x| c[x][j]).sum();
        for v in 0..=(sizes[i] - row).min(sizes[j] - col) {
            c[i][j] = v;
            go(idx + 1, cells, sizes, c, out);
        }
        c[i][j] = 0;
    }
    go(0, &cells, sizes, &mut c, &mut out);
    out
}

/// Lays out vertices for one overlap pattern.
fn layout(parts: &[usize], c: &[Vec<usize>]) -> KangarooStructure {
    let r = parts.len();
    let mut st = KangarooStructure { parts: parts.to_vec(), s: vec![VertexSet::EMPTY; r], t: vec![VertexSet::EMPTY; r] };
    let mut next = 0;
    for i in 0..r {
        for j in 0..i {
            for _ in 0..c[i][j] {
                st.s[i].insert(next);
                st.t[j].insert(next);
                next += 1;
            }
        }
    }
    for i in 0..r {
        while st.s[i].len() < parts[i] + 1 {
            st.s[i].insert(next);
            next += 1;
        }
        while st.t[i].len() < parts[i] + 1 {
            st.t[i].insert(next);
            next += 1;
        }
    }
    st
}

/// All `(k_1, ..., k_r)`-kangaroos up to isomorphism: every overlap
/// pattern, then every edge set on the unconstrained pairs that satisfies
/// the domination condition.
pub fn generate_kangaroos(parts: &[usize]) -> Result<BTreeSet<CanonKey>, ExtremalError> {
    check_parts(parts)?;
    let sizes: Vec<usize> = parts.iter().map(|k| k + 1).collect();
    let most = 2 * sizes.iter().sum::<usize>();
    if most > MAX_KANGAROO_VERTICES {
        return Err(ExtremalError::SizeCap { parts: parts.to_vec(), min: most, max: MAX_KANGAROO_VERTICES });
    }
    let mut all = BTreeSet::new();
    for c in overlap_patterns(&sizes) {
        let st = layout(parts, &c);
        let n = st.s.iter().chain(&st.t).fold(VertexSet::EMPTY, |a, &b| a.union(b)).len();
        let free: Vec<(Vertex, Vertex)> =
            (0..n).flat_map(|x| (x + 1..n).map(move |y| (x, y))).filter(|&(x, y)| !forbidden_pair(&st, x, y)).collect();
        if free.len() > MAX_FREE_PAIRS {
            return Err(ExtremalError::SizeCap { parts: parts.to_vec(), min: most, max: MAX_KANGAROO_VERTICES });
        }
        let found = (0u64..1 << free.len())
            .into_par_iter()
            .fold(BTreeSet::new, |mut acc, mask| {
                let mut g = Graph::new(n).expect("kangaroo order in range");
                for (b, &(x, y)) in free.iter().enumerate() {
                    if mask >> b & 1 == 1 {
                        g.add_edge(x, y);
                    }
                }
                if (1..parts.len()).all(|i| dominated(&g, st.s[i], st.t[i - 1])) {
                    acc.insert(canonical_key(&g).expect("kangaroo order within canonical cap"));
                }
                acc
            })
            .reduce(BTreeSet::new, |mut a, b| {
                a.extend(b);
                a
            });
        all.extend(found);
    }
    Ok(all)
}
