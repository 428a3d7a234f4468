use std::fmt;

use super::{cartesian_product, Graph, GraphError};

/// Named graph families with frozen labelings:
///
/// * `path n`: `0-1-...-(n-1)`; `cycle n` adds `(n-1)-0`.
/// * `wheel n`: hub `0`, rim `1..n-1` in cyclic order.
/// * `star n`: `K_{1,n-1}` with center `0`.
/// * `complete_bipartite s t`: parts `{0..s-1}` and `{s..s+t-1}`.
/// * `spider a b c`: center `0`, then the legs of lengths `a`, `b`, `c`, each
///   numbered outward from the center.
/// * `petersen`: outer 5-cycle `0..4`, spokes `i ~ i+5`, inner pentagram.
/// * `kst_augmented s t`: `K_{s,t}` plus a clique on the second part minus
///   its first vertex `s`.
/// * `cross`: `spider 1 1 3`.
/// * `ksp2 s`: `K_s` box `P_2`, vertex `(i, j)` numbered `2i + j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Empty(usize),
    Wheel(usize),
    Star(usize),
    CompleteBipartite(usize, usize),
    Spider(usize, usize, usize),
    Petersen,
    KstAugmented(usize, usize),
    Cross,
    KsP2(usize),
}

impl Family {
    pub const NAMES: &'static [&'static str] = &[
        "path",
        "cycle",
        "complete",
        "empty",
        "wheel",
        "star",
        "complete_bipartite",
        "spider",
        "petersen",
        "kst_augmented",
        "cross",
        "ksp2",
    ];

    pub fn parse(name: &str, params: &[usize]) -> Result<Family, GraphError> {
        let arity = |k: usize| -> Result<(), GraphError> {
            if params.len() == k {
                Ok(())
            } else {
                Err(GraphError::BadParameter {
                    family: name.to_string(),
                    reason: format!("expected {k} parameter(s), got {}", params.len()),
                })
            }
        };
        let fam = match name {
            "path" => arity(1).map(|_| Family::Path(params[0])),
            "cycle" => arity(1).map(|_| Family::Cycle(params[0])),
            "complete" => arity(1).map(|_| Family::Complete(params[0])),
            "empty" => arity(1).map(|_| Family::Empty(params[0])),
            "wheel" => arity(1).map(|_| Family::Wheel(params[0])),
            "star" => arity(1).map(|_| Family::Star(params[0])),
            "complete_bipartite" => arity(2).map(|_| Family::CompleteBipartite(params[0], params[1])),
            "spider" => arity(3).map(|_| Family::Spider(params[0], params[1], params[2])),
            "petersen" => arity(0).map(|_| Family::Petersen),
            "kst_augmented" => arity(2).map(|_| Family::KstAugmented(params[0], params[1])),
            "cross" => arity(0).map(|_| Family::Cross),
            "ksp2" => arity(1).map(|_| Family::KsP2(params[0])),
            _ => Err(GraphError::UnknownFamily(name.to_string())),
        }?;
        fam.check()?;
        Ok(fam)
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::Path(_) => "path",
            Family::Cycle(_) => "cycle",
            Family::Complete(_) => "complete",
            Family::Empty(_) => "empty",
            Family::Wheel(_) => "wheel",
            Family::Star(_) => "star",
            Family::CompleteBipartite(..) => "complete_bipartite",
            Family::Spider(..) => "spider",
            Family::Petersen => "petersen",
            Family::KstAugmented(..) => "kst_augmented",
            Family::Cross => "cross",
            Family::KsP2(_) => "ksp2",
        }
    }

    pub fn params(&self) -> Vec<usize> {
        match *self {
            Family::Path(n)
            | Family::Cycle(n)
            | Family::Complete(n)
            | Family::Empty(n)
            | Family::Wheel(n)
            | Family::Star(n)
            | Family::KsP2(n) => vec![n],
            Family::CompleteBipartite(s, t) | Family::KstAugmented(s, t) => vec![s, t],
            Family::Spider(a, b, c) => vec![a, b, c],
            Family::Petersen | Family::Cross => vec![],
        }
    }

    /// Number of vertices of the family member.
    pub fn order(&self) -> usize {
        match *self {
            Family::Path(n)
            | Family::Cycle(n)
            | Family::Complete(n)
            | Family::Empty(n)
            | Family::Wheel(n)
            | Family::Star(n) => n,
            Family::CompleteBipartite(s, t) | Family::KstAugmented(s, t) => s + t,
            Family::Spider(a, b, c) => a + b + c + 1,
            Family::Petersen => 10,
            Family::Cross => 6,
            Family::KsP2(s) => 2 * s,
        }
    }

    fn check(&self) -> Result<(), GraphError> {
        let bad = |reason: &str| {
            Err(GraphError::BadParameter { family: self.name().to_string(), reason: reason.to_string() })
        };
        match *self {
            Family::Cycle(n) if n < 3 => bad("cycle needs n >= 3"),
            Family::Wheel(n) if n < 4 => bad("wheel needs n >= 4"),
            Family::Star(n) if n < 2 => bad("star needs n >= 2"),
            Family::CompleteBipartite(s, t) if s + t == 0 => bad("s + t must be positive"),
            Family::KstAugmented(s, t) if t == 0 || s > t => bad("needs 0 <= s <= t and t >= 1"),
            Family::Spider(a, b, c) if a == 0 || b == 0 || c == 0 => bad("leg lengths must be positive"),
            Family::KsP2(0) => bad("s must be positive"),
            _ if self.order() == 0 => bad("graph must have at least one vertex"),
            _ if self.order() > crate::vertex_set::MAX_VERTICES => {
                Err(GraphError::TooManyVertices(self.order()))
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())?;
        for p in self.params() {
            write!(f, " {p}")?;
        }
        Ok(())
    }
}

pub fn make_family(family: &Family) -> Result<Graph, GraphError> {
    family.check()?;
    let n = family.order();
    let mut g = Graph::new(n)?;
    match *family {
        Family::Path(n) => {
            for v in 1..n {
                g.add_edge(v - 1, v);
            }
        }
        Family::Cycle(n) => {
            for v in 0..n {
                g.add_edge(v, (v + 1) % n);
            }
        }
        Family::Complete(n) => {
            for u in 0..n {
                for v in u + 1..n {
                    g.add_edge(u, v);
                }
            }
        }
        Family::Empty(_) => {}
        Family::Wheel(n) => {
            let rim = n - 1;
            for i in 0..rim {
                g.add_edge(0, 1 + i);
                g.add_edge(1 + i, 1 + (i + 1) % rim);
            }
        }
        Family::Star(n) => {
            for v in 1..n {
                g.add_edge(0, v);
            }
        }
        Family::CompleteBipartite(s, t) => {
            for u in 0..s {
                for v in s..s + t {
                    g.add_edge(u, v);
                }
            }
        }
        Family::Spider(a, b, c) => {
            for (u, v) in spider_edges(a, b, c) {
                g.add_edge(u, v);
            }
        }
        Family::Cross => return make_family(&Family::Spider(1, 1, 3)),
        Family::Petersen => {
            for i in 0..5 {
                g.add_edge(i, (i + 1) % 5);
                g.add_edge(i, i + 5);
                g.add_edge(5 + i, 5 + (i + 2) % 5);
            }
        }
        Family::KstAugmented(s, t) => {
            g = make_family(&Family::CompleteBipartite(s, t))?;
            for u in s + 1..s + t {
                for v in u + 1..s + t {
                    g.add_edge(u, v);
                }
            }
        }
        Family::KsP2(s) => {
            return cartesian_product(&make_family(&Family::Complete(s))?, &make_family(&Family::Path(2))?);
        }
    }
    Ok(g)
}

fn spider_edges(a: usize, b: usize, c: usize) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    let mut next = 1;
    for len in [a, b, c] {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    edges
}

/// Adjacency rows of `spider a b c` for orders up to 128, beyond the
/// [`Graph`] cap; labeling as in [`make_family`].
pub fn spider_adjacency(a: usize, b: usize, c: usize) -> Vec<u128> {
    let n = a + b + c + 1;
    assert!(n <= 128, "spider with {n} vertices exceeds 128");
    let mut adj = vec![0u128; n];
    for (u, v) in spider_edges(a, b, c) {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    adj
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn petersen_is_srg_10_3_0_1() {
        let p = make_family(&Family::Petersen).unwrap();
        assert_eq!(p.edge_count(), 15);
        for u in 0..10 {
            assert_eq!(p.degree(u), 3);
            for v in u + 1..10 {
                let common = p.neighbors(u).intersection(p.neighbors(v)).len();
                assert_eq!(common, if p.has_edge(u, v) { 0 } else { 1 });
            }
        }
    }

    #[test]
    fn edge_counts() {
        let count = |f: Family| make_family(&f).unwrap().edge_count();
        assert_eq!(count(Family::CompleteBipartite(3, 5)), 15);
        assert_eq!(count(Family::KstAugmented(3, 5)), 21);
        assert_eq!(count(Family::Wheel(6)), 10);
        assert_eq!(count(Family::Cross), 5);
        assert_eq!(count(Family::KsP2(4)), 16);
        assert_eq!(count(Family::Spider(3, 4, 5)), 12);
    }

    #[test]
    fn parse_checks_ranges() {
        assert_eq!(Family::parse("cycle", &[5]).unwrap(), Family::Cycle(5));
        assert!(Family::parse("cycle", &[2]).is_err());
        assert!(Family::parse("cycle", &[]).is_err());
        assert!(Family::parse("wheel", &[3]).is_err());
        assert!(Family::parse("spider", &[11, 12, 13]).is_err());
        assert!(matches!(Family::parse("moebius", &[]), Err(GraphError::UnknownFamily(_))));
        assert_eq!(Family::KstAugmented(3, 5).to_string(), "kst_augmented 3 5");
    }

    #[test]
    fn big_spider_rows() {
        let adj = spider_adjacency(11, 12, 13);
        assert_eq!(adj.len(), 37);
        assert_eq!(adj[0].count_ones(), 3);
        assert_eq!(adj.iter().map(|r| r.count_ones()).sum::<u32>(), 72);
    }
}
