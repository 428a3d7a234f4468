use hopforce::bounds::{
    build_bipartite_witness, build_snaking_witness, ceil_two_sqrt, lower_bound_kappa, upper_bound_alpha,
};
use hopforce::extended::Extended;
use hopforce::forcing::{Quantity, Rule};
use hopforce::graph::{make_family, Family};
use hopforce::solvers::Solver;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `j` is `ceil(2 sqrt(x))` exactly when `(j - 1)^2 < 4x <= j^2`.
fn is_ceil_two_sqrt(j: u64, x: u64) -> bool {
    let (j, x) = (j as u128, x as u128);
    j * j >= 4 * x && (x == 0 || (j - 1) * (j - 1) < 4 * x)
}

#[test]
fn integer_ceilings_at_ten_thousand_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..10_000 {
        let n = rng.gen_range(1..=1_000_000usize);
        let kappa = rng.gen_range(0..n);
        let alpha = rng.gen_range(1..=n);
        let lo = lower_bound_kappa(n, kappa).unwrap();
        assert!(is_ceil_two_sqrt(lo + 1 - kappa as u64, (n - kappa) as u64), "n = {n}, kappa = {kappa}");
        let hi = upper_bound_alpha(n, alpha).unwrap();
        assert!(is_ceil_two_sqrt(hi + 1 + alpha as u64 - n as u64, alpha as u64), "n = {n}, alpha = {alpha}");
    }
    for r in 1..2000u64 {
        // Perfect squares and their neighbors
        for x in [r * r - 1, r * r, r * r + 1] {
            assert!(is_ceil_two_sqrt(ceil_two_sqrt(x), x), "x = {x}");
        }
    }
}

#[test]
fn witnesses_are_optimal_where_the_solver_reaches() {
    let solver = Solver::new();
    for n in 2..=12 {
        for f in [Family::Path(n), Family::Cycle(n.max(3))] {
            let w = build_snaking_witness(f).unwrap();
            let exact = solver.throttling_number(&make_family(&f).unwrap(), Rule::H).unwrap().th;
            assert_eq!(w.th, exact, "{f}");
            let g = make_family(&f).unwrap();
            assert!(w.certificate(Rule::H, Quantity::Throttle, w.th).with_graph(&g).validate(None).is_ok());
        }
    }
    for t in 1..=6 {
        for s in 0..=t {
            let w = build_bipartite_witness(s, t).unwrap();
            let exact = solver.throttling_number(&make_family(&Family::CompleteBipartite(s, t)).unwrap(), Rule::H).unwrap().th;
            assert_eq!(w.th, exact, "K_{s},{t}");
        }
    }
    assert_eq!(build_snaking_witness(Family::Path(32)).unwrap().th, Extended::Finite(12));
    assert!(build_snaking_witness(Family::Path(1)).is_err());
    assert!(build_snaking_witness(Family::Petersen).is_err());
}
