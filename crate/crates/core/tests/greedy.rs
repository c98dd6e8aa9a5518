use kstable::families::{gen_greedy_adversary, random_planar_triangulation, random_regular, subdivide};
use kstable::greedy::augment::{gadget_budget, residual_cases};
use kstable::greedy::{
    augment_to_regular, bound_calculator, dominating_set, edge_saturate, find_gadget, greedy_removal,
    greedy_removal_with, planar_corollary, BoundCase, DomMode, GreedyOptions, Strategy, TieBreak,
};
use kstable::oracle::is_dominating;
use kstable::{Error, Graph, Rational};
use proptest::prelude::*;

fn q(p: i64, d: i64) -> Rational {
    Rational::new(p, d)
}

#[test]
fn every_residual_clique_has_a_small_gadget() {
    for (r, budget) in [(4usize, 6usize), (5, 7)] {
        assert_eq!(gadget_budget(r), budget);
        for degrees in residual_cases(r) {
            let x = degrees.len();
            let gadget = find_gadget(&degrees, r, budget).unwrap_or_else(|| panic!("no gadget for {degrees:?}"));
            assert!(gadget.new_vertices <= budget);
            let mut count = vec![0usize; x + gadget.new_vertices];
            let g = Graph::from_edges(x + gadget.new_vertices, gadget.edges.iter().copied()).unwrap();
            for &(a, b) in &gadget.edges {
                assert!(a >= x || b >= x, "gadget edge inside the clique");
                count[a] += 1;
                count[b] += 1;
            }
            for (i, &d) in degrees.iter().enumerate() {
                assert_eq!(count[i], r - d, "{degrees:?}");
            }
            assert!((x..g.n()).all(|v| g.degree(v) == r), "{degrees:?}");
        }
    }
}

#[test]
fn listed_cases() {
    // Nine cases for r = 4, matching the residual clique shapes.
    let four = residual_cases(4);
    assert_eq!(four.len(), 9);
    for c in [vec![0], vec![2], vec![1, 1], vec![2, 2], vec![1, 3], vec![3, 3], vec![2, 2, 2], vec![2, 3, 3], vec![3, 3, 3, 3]] {
        assert!(four.contains(&c), "{c:?}");
    }
    assert!(find_gadget(&[3, 3], 4, 6).unwrap().new_vertices <= 6);
    assert!(find_gadget(&[0], 4, 6).unwrap().new_vertices <= 4);
}

#[test]
fn edge_saturation_examples() {
    let two = edge_saturate(&Graph::empty(2), 4).unwrap();
    assert_eq!(two.m(), 1);
    let k5 = Graph::from_edges(5, (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b)))).unwrap();
    assert_eq!(edge_saturate(&k5, 4).unwrap(), k5);
}

#[test]
fn closed_forms() {
    let n = 110i64;
    let b = bound_calculator(110, 200, 4, 3, None).unwrap();
    assert_eq!((b.value, b.case_id), (q(7, 11) * n - q(24, 11), BoundCase::D4K3));
    let b = bound_calculator(110, 200, 5, 3, None).unwrap();
    assert_eq!((b.value, b.case_id), (q(35, 78) * n - q(8, 13), BoundCase::D5K3));
    let b = bound_calculator(110, 300, 7, 3, None).unwrap();
    assert_eq!(b.value, q(10, 13) * n - q(5, 39) * 300 - q(8, 13));
    let b = bound_calculator(110, 200, 5, 4, None).unwrap();
    assert_eq!((b.value, b.case_id), (q(9, 14) * n - q(1, 2), BoundCase::D5K4));
    let b = bound_calculator(110, 300, 8, 4, None).unwrap();
    assert_eq!(b.value, q(54, 59) * n - q(9, 59) * 300 - q(35, 59));
    let b = bound_calculator(110, 300, 8, 6, None).unwrap();
    assert_eq!((b.value, b.case_id), (Rational::from_integer(n) - q(300, 7), BoundCase::EdgeCount));
    assert_eq!(planar_corollary(110, 3).unwrap().value, q(5, 13) * n + q(2, 13));
    assert_eq!(planar_corollary(110, 4).unwrap().value, q(27, 59) * n + q(19, 59));
    assert_eq!(planar_corollary(110, 6).unwrap().value, q(4, 7) * n + q(6, 7));
    for n in [10usize, 39, 1000] {
        let b = bound_calculator(n, 0, 0, 3, Some(4)).unwrap();
        assert_eq!(b.value, q(20, 39) * n as i64 - q(4, 39));
    }
    assert!(matches!(bound_calculator(10, 20, 4, 4, None), Err(Error::NoCaseApplies { .. })));
}

#[test]
fn dominating_set_examples() {
    let c6 = Graph::from_edges(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
    assert_eq!(dominating_set(&c6, DomMode::Exact).unwrap().len(), 2);
    let mut sizes = Vec::new();
    for seed in 0..8 {
        let g = random_regular(22, 4, seed).unwrap();
        let (h, rep) = augment_to_regular(&g, 4).unwrap();
        assert_eq!(rep.added_vertices, 0);
        let d = dominating_set(&h, DomMode::Exact).unwrap();
        assert!(is_dominating(&h, &d));
        assert!(d.len() <= 8);
        sizes.push(d.len());
    }
    assert!(sizes.iter().all(|&s| s >= 5));
}

#[test]
fn adversary_removes_about_half() {
    for n in (20..=200).step_by(6) {
        let g = gen_greedy_adversary(n).unwrap().graph;
        let opts = GreedyOptions { strategy: Strategy::Plain, tiebreak: TieBreak::Adversarial, ..Default::default() };
        let (cert, trace) = greedy_removal_with(&g, 3, &opts).unwrap();
        assert!(2 * trace.removed() + 4 >= n, "n={n} removed {}", trace.removed());
        assert_eq!(cert.achieved_size + trace.removed(), n);
        let (best, _) = greedy_removal(&g, 3, Strategy::Best).unwrap();
        assert!(11 * best.achieved_size + 24 >= 7 * n);
    }
}

#[test]
fn triangulations_meet_the_planar_bound() {
    for seed in 0..10 {
        let g = random_planar_triangulation(120, seed).unwrap();
        for k in 3..=7 {
            let (cert, _) = greedy_removal(&g, k, Strategy::Best).unwrap();
            let want = planar_corollary(120, k).unwrap().value;
            assert!(Rational::from_integer(cert.achieved_size as i64) >= want, "k={k}");
        }
    }
}

#[test]
fn subdivided_triangulations_meet_the_girth_bound() {
    for seed in 0..5 {
        let g = subdivide(&random_planar_triangulation(40, seed).unwrap());
        let (cert, _) = greedy_removal(&g, 3, Strategy::Best).unwrap();
        let want = bound_calculator(g.n(), g.m(), g.max_degree(), 3, Some(4)).unwrap().value;
        assert!(Rational::from_integer(cert.achieved_size as i64) >= want);
    }
}

#[test]
fn trace_json_lines() {
    let g = random_planar_triangulation(50, 3).unwrap();
    let (_, t) = greedy_removal(&g, 3, Strategy::DominatingSet).unwrap();
    let text = t.to_json_lines();
    assert_eq!(text.lines().count(), t.removals.len() + 1);
    let first: serde_json::Value = serde_json::from_str(text.lines().next().unwrap()).unwrap();
    assert!(first.get("vertex").is_some() && first.get("degree").is_some());
    let last: serde_json::Value = serde_json::from_str(text.lines().last().unwrap()).unwrap();
    assert!(last.get("snapshots").is_some());
}

/// A graph of maximum degree at most `r`: a random `r`-regular graph minus some edges.
fn thinned(n: usize, r: usize, seed: u64, keep: &[bool]) -> Graph {
    let g = random_regular(n, r, seed).unwrap();
    let edges: Vec<(usize, usize)> = g.edges().enumerate().filter(|(i, _)| keep[i % keep.len()]).map(|(_, e)| e).collect();
    Graph::from_edges(n, edges).unwrap()
}

fn check_trace(g: &Graph, k: usize, strategy: Strategy) {
    let (cert, t) = greedy_removal(g, k, strategy).unwrap();
    assert!(cert.violation(g).is_none());
    assert_eq!(t.r.values().sum::<usize>(), g.n() - cert.achieved_size);
    assert!(t.removals.windows(2).all(|w| w[0].degree >= w[1].degree));
    assert!(t.snapshots.windows(2).all(|w| w[0].size >= w[1].size && w[0].degree == w[1].degree + 1));
    if t.strategy == Strategy::Plain && k >= 5 {
        assert!((k + 1) * t.removed() <= g.m());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn augmentation_is_regular_and_recoverable(
        r in 4usize..6,
        half in 5usize..20,
        seed in any::<u64>(),
        keep in prop::collection::vec(any::<bool>(), 1..9),
    ) {
        let n = 2 * half;
        let g = thinned(n, r, seed % 1000, &keep);
        let (h, rep) = augment_to_regular(&g, r).unwrap();
        prop_assert!((0..h.n()).all(|v| h.degree(v) == r));
        prop_assert!(rep.added_vertices <= gadget_budget(r));
        prop_assert_eq!(h.n(), n + rep.added_vertices);
        let restored: Vec<(usize, usize)> = h
            .edges()
            .filter(|&(a, b)| a < n && b < n && !rep.added_edges.contains(&(a, b)) && !rep.added_edges.contains(&(b, a)))
            .collect();
        prop_assert_eq!(Graph::from_edges(n, restored).unwrap(), g);
    }

    #[test]
    fn exact_never_beats_heuristic_from_below(half in 4usize..14, seed in any::<u64>()) {
        let g = random_regular(2 * half, 4, seed % 1000).unwrap();
        let e = dominating_set(&g, DomMode::Exact).unwrap();
        let h = dominating_set(&g, DomMode::Heuristic).unwrap();
        prop_assert!(is_dominating(&g, &e) && is_dominating(&g, &h));
        prop_assert!(e.len() <= h.len());
    }

    #[test]
    fn greedy_traces(n in 6usize..80, k in 3usize..8, seed in any::<u64>()) {
        let g = random_planar_triangulation(n.max(4), seed).unwrap();
        for s in [Strategy::Plain, Strategy::Best] {
            check_trace(&g, k, s);
        }
        if k <= 4 {
            check_trace(&g, k, Strategy::DominatingSet);
            let (b, _) = greedy_removal(&g, k, Strategy::Best).unwrap();
            let (p, _) = greedy_removal(&g, k, Strategy::Plain).unwrap();
            let (d, _) = greedy_removal(&g, k, Strategy::DominatingSet).unwrap();
            prop_assert!(b.achieved_size >= p.achieved_size.max(d.achieved_size));
        }
    }

    #[test]
    fn five_regular_plain_edge_inequality(half in 4usize..20, seed in any::<u64>()) {
        let g = random_regular(2 * half, 5, seed % 1000).unwrap();
        let (_, t) = greedy_removal(&g, 3, Strategy::Plain).unwrap();
        let (r4, r5) = (t.r_at(4) as i64, t.r_at(5) as i64);
        prop_assert!(8 * (r4 + r5) <= 5 * g.n() as i64 - 2 * r5);
    }
}
