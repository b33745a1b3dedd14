use ordpath::extremal::{gen_example1, gen_example2};
use ordpath::ktt::{main_pipeline, PipelineOutcome};
use ordpath::oracles::{
    contains_ktt, ghn_exact, longest_increasing_induced_path_exact, longest_induced_path_exact,
};
use ordpath::patterns::contains_pattern;
use ordpath::patterns::generators::{crossing_pair, k2, nested_pair, ordered_p3};
use ordpath::rng::random_host;
use ordpath::solvers::gnc;
use ordpath::{validate_induced_path, PathGraph};

/// Longest induced path by extending every induced sequence one vertex at a time;
/// ties go to the lexicographically smallest sequence.
fn naive_longest(g: &PathGraph, increasing: bool) -> Vec<usize> {
    fn go(g: &PathGraph, increasing: bool, seq: &mut Vec<usize>, best: &mut Vec<usize>) {
        if seq.len() > best.len() || (seq.len() == best.len() && *seq < *best) {
            *best = seq.clone();
        }
        for v in 0..g.n() {
            if seq.contains(&v) || (increasing && seq.last().is_some_and(|&l| v <= l)) {
                continue;
            }
            let k = seq.len();
            let ok = seq.iter().enumerate().all(|(x, &u)| g.adjacent(u, v) == (x + 1 == k));
            if ok {
                seq.push(v);
                go(g, increasing, seq, best);
                seq.pop();
            }
        }
    }
    let mut best = Vec::new();
    go(g, increasing, &mut Vec::new(), &mut best);
    best
}

#[test]
fn longest_paths_match_naive_enumeration() {
    for seed in 0..100u64 {
        let n = 1 + (seed % 8) as usize;
        let g = random_host(n, 0.1 + (seed % 5) as f64 * 0.1, seed);
        let p = longest_induced_path_exact(&g).unwrap();
        assert_eq!(p.vertices(), naive_longest(&g, false), "{g:?}");
        let q = longest_increasing_induced_path_exact(&g).unwrap();
        assert_eq!(q.vertices(), naive_longest(&g, true), "{g:?}");
        assert!(validate_induced_path(&g, q.vertices()).is_ok());
    }
}

#[test]
fn ghn_single_edge_is_n() {
    for n in 2..=7 {
        let r = ghn_exact(&k2(), n, 2).unwrap();
        assert_eq!((r.value, r.count_avoiding), (Some(n), 1));
    }
}

#[test]
fn ghn_meets_guarantees() {
    let (m, nested) = (crossing_pair(), nested_pair());
    for n in 4..=8 {
        let r = ghn_exact(&m, n, 4).unwrap();
        assert!(r.value.unwrap() as f64 >= ((n as f64).log2() / 2.0).ceil(), "M n={n}");
        let r = ghn_exact(&nested, n, 4).unwrap();
        assert!(r.value.unwrap() >= gnc(n, &nested), "nested n={n}");
        let w = r.witness.unwrap();
        assert!(contains_pattern(&w, &nested).is_none());
        assert_eq!(longest_induced_path_exact(&w).unwrap().order(), r.value.unwrap());
    }
}

#[test]
fn ghn_goldens() {
    let value = |h, n| ghn_exact(h, n, 1).unwrap().value;
    let m = crossing_pair();
    assert_eq!((4..=8).map(|n| value(&m, n)).collect::<Vec<_>>(), [3, 3, 3, 3, 4].map(Some));
    let nested = nested_pair();
    assert_eq!((4..=8).map(|n| value(&nested, n)).collect::<Vec<_>>(), [2, 3, 3, 3, 3].map(Some));
}

#[test]
fn ghn_thread_independence() {
    for h in [k2(), crossing_pair(), nested_pair(), ordered_p3()] {
        for n in [6, 7] {
            let base = ghn_exact(&h, n, 1).unwrap();
            for t in [2, 4, 8] {
                assert_eq!(ghn_exact(&h, n, t).unwrap(), base, "{h:?} n={n} threads={t}");
            }
        }
    }
}

#[test]
fn pipeline_respects_ktt_oracle() {
    for seed in 0..300u64 {
        let n = 4 + (seed % 9) as usize;
        let g = random_host(n, 0.2 + (seed % 4) as f64 * 0.15, seed);
        for t in 1..=2 {
            if contains_ktt(&g, t).unwrap().is_none() {
                let r = main_pipeline(&g, t, Some(3)).unwrap();
                assert!(!matches!(r.outcome, PipelineOutcome::Ktt(_)), "seed {seed} t={t}");
            }
        }
    }
}

#[test]
fn example1_longest_is_four() {
    for n in 6..=20 {
        let g = gen_example1(n).unwrap();
        assert_eq!(longest_induced_path_exact(&g).unwrap().order(), 4, "n={n}");
        assert!(contains_pattern(&g, &ordered_p3()).is_none(), "n={n}");
    }
    assert_eq!(naive_longest(&gen_example1(9).unwrap(), false).len(), 4);
}

#[test]
fn example2_goldens() {
    let want = [(1, 1), (5, 4), (13, 11), (29, 19)];
    for (i, &(n, lip)) in (1..=4).zip(&want) {
        let g = gen_example2(i).unwrap();
        assert_eq!(g.n(), n);
        let p = longest_induced_path_exact(&g).unwrap();
        assert_eq!(p.order(), lip, "i={i}");
        if n <= 13 {
            assert_eq!(p.vertices(), naive_longest(&g, false));
        }
        if i >= 2 {
            assert!(lip as f64 <= 4.0 * (n as f64).log2(), "i={i}");
        }
    }
    for i in 1..=5 {
        let g = gen_example2(i).unwrap();
        assert!((0..g.n()).all(|v| g.chord_neighbors(v).iter().filter(|&&w| w < v).count() <= 1));
    }
}
