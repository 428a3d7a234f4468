use hopforce::extended::Extended;
use hopforce::forcing::{execute_chronological, Quantity, Rule};
use hopforce::graph::{canonical_key, parse_graph6, write_graph6, Graph};
use hopforce::solvers::Solver;
use hopforce::verify::reference;
use hopforce::VertexSet;
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::new(n).unwrap();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        g.add_edge(u, v);
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn rule() -> impl Strategy<Value = Rule> {
    prop_oneof![Just(Rule::H), Just(Rule::Z), Just(Rule::FloorZ)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn pt_matches_reference(g in graph(6), mask in any::<u32>(), r in rule()) {
        let base = VertexSet(mask) .intersection(g.vertices());
        let (pt, schedule) = Solver::new().min_propagation_time(&g, base, r, None).unwrap();
        prop_assert_eq!(pt, reference::propagation_time(&g, base, r));
        if let Some(s) = schedule {
            prop_assert_eq!(s.base(), base);
            prop_assert_eq!(s.covered(), g.vertices());
            let end = execute_chronological(&g, base, &s.chronological(), r).unwrap();
            prop_assert_eq!(end.blue, g.vertices());
        }
    }

    #[test]
    fn throttle_certificates_revalidate(g in graph(7), r in rule()) {
        let cert = Solver::new().throttling_number(&g, r).unwrap();
        prop_assert_eq!(cert.th, cert.pt + cert.size as u64);
        prop_assert!(cert.th <= Extended::Finite(g.order() as u64));
        let claim = cert.certificate(r, Quantity::Throttle, cert.th).with_graph(&g);
        prop_assert!(claim.validate(None).is_ok());
        let json = serde_json::to_string(&claim).unwrap();
        let back: hopforce::forcing::Certificate = serde_json::from_str(&json).unwrap();
        prop_assert!(back.validate(None).is_ok());
    }

    #[test]
    fn floor_z_throttles_no_worse(g in graph(7)) {
        let s = Solver::new();
        let fz = s.throttling_number(&g, Rule::FloorZ).unwrap().th;
        let z = s.throttling_number(&g, Rule::Z).unwrap().th;
        let h = s.throttling_number(&g, Rule::H).unwrap().th;
        prop_assert!(fz <= z.min(h));
    }

    #[test]
    fn forcing_witness_executes(g in graph(7), r in rule()) {
        let f = Solver::new().forcing_number(&g, r).unwrap();
        prop_assert_eq!(f.witness.len(), f.value);
        let end = execute_chronological(&g, f.witness, &f.list, r).unwrap();
        prop_assert_eq!(end.blue, g.vertices());
    }

    #[test]
    fn canonical_key_ignores_labels(g in graph(9), seed in any::<u64>()) {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut x = seed;
        for i in (1..n).rev() {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (x >> 33) as usize % (i + 1));
        }
        prop_assert_eq!(canonical_key(&g).unwrap(), canonical_key(&g.permute(&perm)).unwrap());
    }

    #[test]
    fn graph6_round_trips(g in graph(20)) {
        prop_assert_eq!(parse_graph6(&write_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn throttling_matches_reference(g in graph(5), r in rule()) {
        let th = Solver::new().throttling_number(&g, r).unwrap().th;
        prop_assert_eq!(th, Extended::Finite(reference::throttling_number(&g, r)));
    }
}
