use ordpath::patterns::contains_pattern;
use ordpath::patterns::generators::{crossing_pair, gen_mi, k2, nested_pair, planar_base};
use ordpath::patterns::{concat, hat};
use ordpath::rng::random_host;
use ordpath::solvers::{
    ceil_log2, find_gap_or_path, gm, gnc, grs_search, solve_crossing_free, solve_matching, solve_noncrossing, span_path,
    GrsResult, SolveError,
};
use ordpath::{OrderedGraph, PathGraph, PatternEmbedding};
use proptest::prelude::*;

fn matchings() -> Vec<OrderedGraph> {
    vec![
        k2(),
        crossing_pair(),
        nested_pair(),
        planar_base(),
        concat(&crossing_pair(), &k2()),
        hat(&crossing_pair()),
        OrderedGraph::new(6, [(0, 4), (1, 2), (3, 5)]).unwrap(),
        OrderedGraph::new(6, [(0, 2), (1, 4), (3, 5)]).unwrap(),
        OrderedGraph::new(5, [(0, 2), (1, 4)]).unwrap(),
        OrderedGraph::new(6, [(1, 3), (2, 5)]).unwrap(),
    ]
}

fn host() -> impl Strategy<Value = PathGraph> {
    (1usize..=40, 0.0f64..0.5, any::<u64>()).prop_map(|(n, d, s)| random_host(n, d, s))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn matching_outcomes_validate(g in host(), which in 0usize..10) {
        let h = &matchings()[which];
        let r = solve_matching(&g, h).unwrap();
        prop_assert_eq!(r.guarantee, gm(g.n(), h));
        prop_assert!(r.check(&g, h).is_ok(), "{:?}", r);
        if contains_pattern(&g, h).is_none() {
            prop_assert!(r.is_path());
        }
    }

    #[test]
    fn noncrossing_outcomes_validate(g in host(), nested in any::<bool>()) {
        let h = if nested { nested_pair() } else { gen_mi(2) };
        let r = solve_noncrossing(&g, &h).unwrap();
        prop_assert_eq!(r.guarantee, gnc(g.n(), &h));
        prop_assert!(r.check(&g, &h).is_ok(), "{:?}", r);
    }

    #[test]
    fn crossing_free_sum(n in 2usize..=40, d in 0.0f64..0.6, seed in any::<u64>()) {
        let g = random_host(n, d, seed);
        match solve_crossing_free(&g) {
            Ok((l, r)) => {
                prop_assert!(l.order() + r.order() >= ceil_log2(n));
                prop_assert_eq!(l.vertices()[0], 0);
                prop_assert_eq!(*r.vertices().last().unwrap(), n - 1);
                prop_assert!(l.vertices().last().unwrap() < &r.vertices()[0]);
            }
            Err(e) => prop_assert!(matches!(e, SolveError::HostCrossing(..)) && g.crossing_pair().is_some()),
        }
    }

    #[test]
    fn gap_dichotomy(g in host(), m in prop::sample::select(vec![3usize, 5, 7]), t in 2usize..=4) {
        let h = crossing_pair();
        match find_gap_or_path(&g, &h, m, t) {
            Ok(r) => {
                prop_assert!(r.check(&g, &h).is_ok());
                match r.positions() {
                    Some(p) => prop_assert!(PatternEmbedding::new(p.to_vec()).gap_at_least(g.n().div_ceil(m * t))),
                    None => prop_assert!(r.vertices().unwrap().len() >= t),
                }
            }
            Err(SolveError::Parameter(_)) => prop_assert!(m > g.n()),
            Err(SolveError::HypothesisUnmet { got, t: want }) => prop_assert!(got < want),
            Err(e) => prop_assert!(false, "{}", e),
        }
    }

    #[test]
    fn span_path_bound(g in host().prop_filter("n >= 2", |g| g.n() >= 2)) {
        let p = span_path(&g).unwrap();
        prop_assert!(p.order() * g.max_span() >= g.n());
    }

    #[test]
    fn grs_outcomes_validate(n in 4usize..=13, d in 0.0f64..0.7, seed in any::<u64>()) {
        let g = random_host(n, d, seed);
        match grs_search(&g, 4).unwrap() {
            GrsResult::Found(r) => {
                let h = ordpath::patterns::generators::gen_halfgraph_pattern(1);
                prop_assert!(r.check(&g, &h).is_ok());
                if let Some(v) = r.vertices() {
                    prop_assert!(v.len() >= 4);
                }
            }
            GrsResult::NoCliqueFound => {}
        }
    }
}

#[test]
fn matching_goldens() {
    let h = planar_base();
    let r = solve_matching(&PathGraph::bare(1024), &h).unwrap();
    assert!(r.vertices().unwrap().len() >= gm(1024, &h));
    assert_eq!(gm(1024, &h), 2);
    let dense = PathGraph::new(12, (0..12).flat_map(|i| (i + 2..12).map(move |j| (i, j)))).unwrap();
    // Order 2 already meets the guarantee on the complete host, so a path comes back.
    let r = solve_matching(&dense, &h).unwrap();
    assert_eq!((r.vertices(), r.guarantee), (Some(&[1, 3][..]), 1));
    for h in [crossing_pair(), concat(&crossing_pair(), &k2()), hat(&crossing_pair())] {
        let r = solve_matching(&dense, &h).unwrap();
        assert!(!r.is_path() && r.check(&dense, &h).is_ok(), "{r:?}");
    }
    let p3 = OrderedGraph::new(3, [(0, 1), (1, 2)]).unwrap();
    let e1 = ordpath::extremal::gen_example1(20).unwrap();
    assert_eq!(solve_matching(&e1, &p3), Err(SolveError::NotMatching));
}
