use std::collections::BTreeSet;

use rayon::prelude::*;

use super::canon::{canonical_key, CanonKey, MAX_CANONICAL_VERTICES};
use super::Graph;

/// All graphs on exactly `n` vertices up to isomorphism, sorted by canonical
/// key. Built by adding a vertex with every possible neighborhood to each
/// class on `n - 1` vertices.
pub fn enumerate_graphs(n: usize) -> Vec<CanonKey> {
    assert!((1..=MAX_CANONICAL_VERTICES).contains(&n), "enumeration supports 1..={MAX_CANONICAL_VERTICES} vertices");
    let mut level = vec![canonical_key(&Graph::new(1).expect("K_1")).expect("K_1")];
    for m in 2..=n {
        let next: BTreeSet<CanonKey> = level
            .par_iter()
            .flat_map_iter(|key| {
                let g = key.graph();
                (0u32..1 << (m - 1)).map(move |nbrs| {
                    let mut rows: Vec<u32> = (0..m - 1).map(|v| g.neighbors(v).0 | (nbrs >> v & 1) << (m - 1)).collect();
                    rows.push(nbrs);
                    canonical_key(&Graph::from_rows(m, &rows)).expect("within cap")
                })
            })
            .collect::<Vec<_>>()
            .into_iter()
            .collect();
        level = next.into_iter().collect();
    }
    level
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| enumerate_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34, 156]);
    }
}
