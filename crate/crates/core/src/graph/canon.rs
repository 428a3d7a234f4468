use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Graph, GraphError};
use crate::vertex_set::Vertex;

/// Largest order accepted by [`canonical_form`].
pub const MAX_CANONICAL_VERTICES: usize = 12;

/// Isomorphism-class identifier: the order plus the upper-triangle adjacency
/// bits of the canonically relabeled graph, most significant bit first in
/// graph6 order. Ordering by key equals ordering by `(n, canonical graph6)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonKey {
    n: u8,
    code: u128,
}

impl CanonKey {
    pub fn order(self) -> usize {
        self.n as usize
    }

    pub fn graph(self) -> Graph {
        let n = self.order();
        let bits = n * n.saturating_sub(1) / 2;
        let mut g = Graph::new(n).expect("canonical order in range");
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if self.code >> (bits - 1 - k) & 1 == 1 {
                    g.add_edge(i, j);
                }
                k += 1;
            }
        }
        g
    }

    pub fn graph6(self) -> String {
        super::write_graph6(&self.graph())
    }
}

impl fmt::Display for CanonKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.graph6())
    }
}

impl Serialize for CanonKey {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.graph6())
    }
}

impl<'de> Deserialize<'de> for CanonKey {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        let g = super::parse_graph6(&text).map_err(serde::de::Error::custom)?;
        canonical_key(&g).map_err(serde::de::Error::custom)
    }
}

impl fmt::Debug for CanonKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonKey({})", self.graph6())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    /// `labeling[v]` is the canonical label of original vertex `v`.
    pub labeling: Vec<Vertex>,
    pub key: CanonKey,
}

impl CanonicalForm {
    pub fn graph6(&self) -> String {
        self.key.graph6()
    }
}

/// Canonical labeling by individualization and refinement.
///
/// Every leaf of the search tree (a discrete ordered partition reached by
/// refining after individualizing vertices of the first nonsingleton cell)
/// yields a labeling; the canonical one has the least code. The tree depends
/// only on the isomorphism class, so the minimum is an invariant. Within a
/// target cell only one vertex per twin class is tried: swapping twins is an
/// automorphism fixing the current partition, so the skipped subtrees are
/// images of explored ones.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, GraphError> {
    let n = g.order();
    if n > MAX_CANONICAL_VERTICES {
        return Err(GraphError::CanonicalCap { n, max: MAX_CANONICAL_VERTICES });
    }
    let twins = g.twin_classes();
    let mut best: Option<(u128, Vec<Vertex>)> = None;
    let start = refine(g, vec![(0..n).collect()]);
    search(g, &twins, start, &mut best);
    let (code, order) = best.expect("search reaches at least one leaf");
    let mut labeling = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        labeling[v] = pos;
    }
    Ok(CanonicalForm { labeling, key: CanonKey { n: n as u8, code } })
}

pub fn canonical_key(g: &Graph) -> Result<CanonKey, GraphError> {
    canonical_form(g).map(|c| c.key)
}

type Partition = Vec<Vec<Vertex>>;

fn search(g: &Graph, twins: &[Vertex], part: Partition, best: &mut Option<(u128, Vec<Vertex>)>) {
    let Some(target) = part.iter().position(|c| c.len() > 1) else {
        let order: Vec<Vertex> = part.iter().map(|c| c[0]).collect();
        let code = code_of(g, &order);
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            *best = Some((code, order));
        }
        return;
    };
    let mut tried: Vec<Vertex> = Vec::new();
    for &v in &part[target] {
        if tried.contains(&twins[v]) {
            continue;
        }
        tried.push(twins[v]);
        let mut next = part.clone();
        let rest: Vec<Vertex> = next[target].iter().copied().filter(|&w| w != v).collect();
        next[target] = vec![v];
        next.insert(target + 1, rest);
        search(g, twins, refine(g, next), best);
    }
}

/// Splits cells by neighbor counts into every cell until the ordered
/// partition is equitable. Equivariant under relabeling.
fn refine(g: &Graph, mut part: Partition) -> Partition {
    loop {
        let cell_sets: Vec<u32> = part.iter().map(|c| c.iter().fold(0u32, |m, &v| m | 1 << v)).collect();
        let mut next: Partition = Vec::with_capacity(part.len());
        for cell in &part {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, Vertex)> = cell
                .iter()
                .map(|&v| (cell_sets.iter().map(|&s| (g.neighbors(v).0 & s).count_ones()).collect(), v))
                .collect();
            keyed.sort();
            let mut i = 0;
            while i < keyed.len() {
                let mut j = i + 1;
                while j < keyed.len() && keyed[j].0 == keyed[i].0 {
                    j += 1;
                }
                next.push(keyed[i..j].iter().map(|(_, v)| *v).collect());
                i = j;
            }
        }
        if next.len() == part.len() {
            return next;
        }
        part = next;
    }
}

fn code_of(g: &Graph, order: &[Vertex]) -> u128 {
    let mut code = 0u128;
    for j in 1..order.len() {
        for i in 0..j {
            code = code << 1 | g.has_edge(order[i], order[j]) as u128;
        }
    }
    code
}

#[cfg(test)]
mod tests {
    use super::super::{make_family, Family};
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn eleven_graphs_on_four_vertices() {
        let pairs: Vec<(usize, usize)> = (0..4).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        let mut keys = HashSet::new();
        for mask in 0u32..64 {
            let edges: Vec<_> = (0..6).filter(|b| mask >> b & 1 == 1).map(|b| pairs[b]).collect();
            keys.insert(canonical_key(&Graph::from_edges(4, &edges).unwrap()).unwrap());
        }
        assert_eq!(keys.len(), 11);
    }

    #[test]
    fn labeling_reproduces_key() {
        let p = make_family(&Family::Petersen).unwrap();
        let c = canonical_form(&p).unwrap();
        assert_eq!(p.permute(&c.labeling), c.key.graph());
        let perm = [3, 1, 4, 0, 9, 2, 6, 5, 8, 7];
        assert_eq!(canonical_key(&p.permute(&perm)).unwrap(), c.key);
    }

    #[test]
    fn distinguishes_small_graphs() {
        let a = Graph::from_edges(4, &[(0, 1)]).unwrap();
        let b = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_ne!(canonical_key(&a).unwrap(), canonical_key(&b).unwrap());
        assert!(canonical_key(&Graph::new(13).unwrap()).is_err());
        assert_eq!(canonical_key(&Graph::new(12).unwrap()).unwrap().graph(), Graph::new(12).unwrap());
    }
}
