use super::{Graph, GraphError};
use crate::vertex_set::{Vertex, VertexSet, MAX_VERTICES};

/// `g` box `h`; vertex `(i, j)` becomes `i * |V(h)| + j`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    let (a, b) = (g.order(), h.order());
    if a * b > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(a * b));
    }
    let mut p = Graph::new(a * b)?;
    for i in 0..a {
        for j in 0..b {
            for j2 in h.neighbors(j).iter().filter(|&j2| j2 > j) {
                p.add_edge(i * b + j, i * b + j2);
            }
            for i2 in g.neighbors(i).iter().filter(|&i2| i2 > i) {
                p.add_edge(i * b + j, i2 * b + j);
            }
        }
    }
    Ok(p)
}

/// Merges the nonadjacent pair `u`, `v` into one vertex adjacent to
/// `N(u) ∪ N(v)`. The merged vertex takes the smaller label; labels above
/// the larger one shift down by one.
pub fn identify_empty_pair(g: &Graph, u: Vertex, v: Vertex) -> Result<Graph, GraphError> {
    let n = g.order();
    for x in [u, v] {
        if x >= n {
            return Err(GraphError::VertexOutOfRange(x));
        }
    }
    if u == v || g.has_edge(u, v) {
        return Err(GraphError::NotEmptyPair(u, v));
    }
    let (keep, gone) = (u.min(v), u.max(v));
    let mut h = g.clone();
    for w in g.neighbors(gone).iter() {
        h.add_edge(keep, w);
    }
    Ok(h.remove_vertex(gone))
}

pub fn delete_edge(g: &Graph, u: Vertex, v: Vertex) -> Result<Graph, GraphError> {
    if !g.has_edge(u, v) {
        return Err(GraphError::EdgeAbsent(u, v));
    }
    let mut h = g.clone();
    h.remove_edge(u, v);
    Ok(h)
}

pub fn is_induced_subgraph(h: &Graph, g: &Graph) -> bool {
    induced_embedding(h, g).is_some()
}

/// An injective map `phi` from `V(h)` into `V(g)` with `xy ∈ E(h)` iff
/// `phi(x)phi(y) ∈ E(g)`, if one exists.
pub fn induced_embedding(h: &Graph, g: &Graph) -> Option<Vec<Vertex>> {
    let (nh, ng) = (h.order(), g.order());
    if nh > ng || h.edge_count() > g.edge_count() || h.complement().edge_count() > g.complement().edge_count() {
        return None;
    }
    // Place high-degree vertices of `h` first, each subsequent one adjacent to
    // an already placed vertex when possible, so constraints bite early.
    let mut order = Vec::with_capacity(nh);
    let mut placed = VertexSet::EMPTY;
    while order.len() < nh {
        let remaining = h.vertices().difference(placed);
        let next = remaining
            .iter()
            .max_by_key(|&x| (h.neighbors(x).intersection(placed).len(), h.degree(x), usize::MAX - x))
            .expect("remaining vertex");
        order.push(next);
        placed.insert(next);
    }
    let mut phi = vec![usize::MAX; nh];
    if extend(h, g, &order, 0, &mut phi, VertexSet::EMPTY) {
        Some(phi)
    } else {
        None
    }
}

fn extend(h: &Graph, g: &Graph, order: &[Vertex], depth: usize, phi: &mut [Vertex], used: VertexSet) -> bool {
    if depth == order.len() {
        return true;
    }
    let x = order[depth];
    let hdeg = h.degree(x);
    let hco = h.order() - 1 - hdeg;
    'cand: for y in g.vertices().difference(used).iter() {
        if g.degree(y) < hdeg || g.order() - 1 - g.degree(y) < hco {
            continue;
        }
        for &z in &order[..depth] {
            if h.has_edge(x, z) != g.has_edge(y, phi[z]) {
                continue 'cand;
            }
        }
        phi[x] = y;
        if extend(h, g, order, depth + 1, phi, used.with(y)) {
            return true;
        }
    }
    phi[x] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::super::{make_family, Family};
    use super::*;

    #[test]
    fn products() {
        let p = cartesian_product(&make_family(&Family::Complete(4)).unwrap(), &Graph::new(5).unwrap()).unwrap();
        assert_eq!((p.order(), p.edge_count()), (20, 30));
        let c5 = make_family(&Family::Cycle(5)).unwrap();
        assert_eq!(cartesian_product(&Graph::new(1).unwrap(), &c5).unwrap(), c5);
        assert!(cartesian_product(&Graph::new(6).unwrap(), &Graph::new(6).unwrap()).is_err());
    }

    #[test]
    fn identification() {
        let k1 = identify_empty_pair(&Graph::new(2).unwrap(), 0, 1).unwrap();
        assert_eq!(k1.order(), 1);
        let p3 = make_family(&Family::Path(3)).unwrap();
        assert!(identify_empty_pair(&p3, 0, 1).is_err());
        assert!(identify_empty_pair(&p3, 1, 1).is_err());
        let merged = identify_empty_pair(&p3, 0, 2).unwrap();
        assert_eq!(merged, Graph::from_edges(2, &[(0, 1)]).unwrap());
    }

    #[test]
    fn deletion() {
        let k2 = make_family(&Family::Complete(2)).unwrap();
        assert_eq!(delete_edge(&k2, 0, 1).unwrap(), Graph::new(2).unwrap());
        assert!(delete_edge(&Graph::new(2).unwrap(), 0, 1).is_err());
        let k3 = make_family(&Family::Complete(3)).unwrap();
        let p3 = delete_edge(&k3, 0, 2).unwrap();
        assert_eq!(p3, make_family(&Family::Path(3)).unwrap());
    }

    #[test]
    fn embeddings() {
        let c6 = make_family(&Family::Cycle(6)).unwrap();
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let phi = induced_embedding(&two_k2, &c6).unwrap();
        assert_eq!(c6.induced(phi.iter().copied().collect()).edge_count(), 2);
        assert!(!is_induced_subgraph(&Graph::new(4).unwrap(), &make_family(&Family::Complete(4)).unwrap()));
        let id = induced_embedding(&c6, &c6).unwrap();
        assert_eq!(c6.permute(&inverse(&id)), c6);
    }

    fn inverse(p: &[usize]) -> Vec<usize> {
        let mut q = vec![0; p.len()];
        for (i, &x) in p.iter().enumerate() {
            q[x] = i;
        }
        q
    }
}
