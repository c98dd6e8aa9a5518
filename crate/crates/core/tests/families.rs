use std::collections::HashMap;

use kstable::families::{
    gen_greedy_adversary, gen_outerpath_ub, gen_planar_ub_a, gen_planar_ub_b, random_maximal_outerplanar,
    random_maximal_outerpath, random_planar_triangulation,
};
use kstable::io::GraphFile;
use kstable::oracle::{exact_max_kstable, Budget};
use kstable::{Error, Rational};

#[test]
fn figure_sized_instances() {
    let a = gen_outerpath_ub(18, 3).unwrap();
    assert_eq!((a.n, a.h, a.graph.n()), (18, 6, 18));
    assert_eq!(a.claimed_upper_bound, Rational::from_integer(14));
    let small = gen_outerpath_ub(3, 3).unwrap();
    assert_eq!((small.h, small.graph.m()), (1, 3));
    let b = gen_planar_ub_a(21, 3).unwrap();
    assert_eq!(b.h, 3);
    assert_eq!(b.claimed_upper_bound, Rational::new(4 * 21, 7) + 5);
    assert_eq!(gen_planar_ub_a(6, 3).unwrap().graph.m(), 0);
    let c = gen_planar_ub_b(21, 3).unwrap();
    assert_eq!(c.h, 3);
    assert_eq!(c.claimed_upper_bound, Rational::new(5 * 21, 7) + 2);
    assert!(matches!(gen_planar_ub_b(8, 3), Err(Error::ParamsTooSmall(_))));
}

#[test]
fn deterministic_and_round_trips() {
    for inst in [gen_outerpath_ub(20, 4).unwrap(), gen_planar_ub_a(22, 3).unwrap(), gen_planar_ub_b(21, 3).unwrap()] {
        let again = match inst.family {
            "outerpath-ub" => gen_outerpath_ub(20, 4),
            "planar-ub-a" => gen_planar_ub_a(22, 3),
            _ => gen_planar_ub_b(21, 3),
        }
        .unwrap();
        assert_eq!(inst, again);
        let file = GraphFile::from_json(&inst.to_file().to_json()).unwrap();
        assert_eq!(file.graph().unwrap(), inst.graph);
        assert_eq!(file.outer_order, inst.outer_order);
    }
}

#[test]
fn oracle_stays_under_the_claimed_bound() {
    for n in [18usize, 21, 24] {
        for k in 3..=5 {
            let inst = gen_outerpath_ub(n, k).unwrap();
            let (s, st) = exact_max_kstable(&inst.graph, k, Budget::default());
            assert!(st.proven_optimal);
            // Every block of k vertices loses one; fillers need not.
            assert!(s.len() <= n - n / k + 2);
        }
    }
    for inst in [gen_planar_ub_a(21, 3).unwrap(), gen_planar_ub_b(21, 3).unwrap()] {
        let (s, st) = exact_max_kstable(&inst.graph, 3, Budget::default());
        assert!(st.proven_optimal);
        assert!(Rational::from_integer(s.len() as i64) <= inst.claimed_upper_bound);
    }
}

#[test]
fn adversary_is_four_regular_planar_sized() {
    for n in (6..=60).step_by(2) {
        let g = gen_greedy_adversary(n).unwrap().graph;
        assert!((0..n).all(|v| g.degree(v) == 4), "n={n}");
        assert_eq!(g.m(), 2 * n);
        assert_eq!(g.components().len(), 1);
    }
    assert!(gen_greedy_adversary(7).is_err());
}

#[test]
fn uniform_small_polygons() {
    for (n, classes) in [(4usize, 2usize), (5, 5), (6, 14)] {
        let draws = 14_000u64;
        let mut seen: HashMap<Vec<(usize, usize)>, u64> = HashMap::new();
        for seed in 0..draws {
            let og = random_maximal_outerplanar(n, seed).unwrap();
            assert_eq!(og.chords().len(), n - 3);
            *seen.entry(og.chords().to_vec()).or_default() += 1;
        }
        assert_eq!(seen.len(), classes);
        let expected = draws as f64 / classes as f64;
        let chi2: f64 = seen.values().map(|&c| (c as f64 - expected).powi(2) / expected).sum();
        // 99.9% quantiles of chi-square with 1, 4 and 13 degrees of freedom are below 35.
        assert!(chi2 < 35.0, "n={n} chi2={chi2}");
    }
}

#[test]
fn random_generators() {
    for seed in 0..50 {
        assert!(random_maximal_outerpath(30, seed).unwrap().is_outerpath());
        assert_eq!(random_maximal_outerplanar(12, seed).unwrap().chords().len(), 9);
        let t = random_planar_triangulation(40, seed).unwrap();
        assert_eq!(t.m(), 3 * 40 - 6);
        assert!((0..40).all(|v| t.degree(v) >= 3));
    }
    assert_eq!(random_planar_triangulation(4, 0).unwrap().m(), 6);
}
