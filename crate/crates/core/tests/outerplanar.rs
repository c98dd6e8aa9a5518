use kstable::families::{random_glued_fans, random_maximal_outerplanar};
use kstable::oracle::{enumerate_polygon_triangulations, exact_max_kstable, Budget};
use kstable::outerplanar::{
    build_qualified_set, outerplanar_guarantee, search_qualified, solve_outerplanar, solve_outerplanar_traced,
    solve_outerplanar_with, H11Order, QualifiedSetSpec,
};
use kstable::{certificate::ceil, Graph, OuterplaneGraph};
use proptest::prelude::*;

/// A side as a nested split: `E` is a bare edge, `N(a, b)` glues `a` and `b` at the apex.
#[derive(Clone)]
enum T {
    E,
    N(Box<T>, Box<T>),
}

use T::E;

fn n(a: T, b: T) -> T {
    T::N(Box::new(a), Box::new(b))
}

fn size(t: &T) -> usize {
    match t {
        E => 2,
        T::N(a, b) => size(a) + size(b) - 1,
    }
}

fn edges(t: &T, lo: usize, out: &mut Vec<(usize, usize)>) {
    if let T::N(a, b) = t {
        let w = lo + size(a) - 1;
        let hi = lo + size(t) - 1;
        out.push((lo, w));
        out.push((w, hi));
        edges(a, lo, out);
        edges(b, w, out);
    }
}

/// The graph whose outer edge `(0, n-1)` has the whole graph as its side.
fn build(t: &T) -> OuterplaneGraph {
    let n = size(t);
    let mut e = vec![(0, n - 1)];
    edges(t, 0, &mut e);
    let g = Graph::from_edges_dedup(n, e).unwrap();
    OuterplaneGraph::from_graph(&g, &(0..n).collect::<Vec<_>>()).unwrap()
}

/// Seven vertices, apex in the middle and adjacent to all.
fn fan7() -> T {
    n(n(E, n(E, E)), n(n(E, E), E))
}

/// Five vertices whose last vertex sees all others.
fn fan5_right() -> T {
    n(E, n(E, n(E, E)))
}

/// Eleven vertices split 5 + 7 with the apex adjacent to the three inner vertices of the 5-part.
fn s11() -> T {
    n(fan5_right(), fan7())
}

/// Eight vertices split 2 + 7.
fn s8() -> T {
    n(E, fan7())
}

fn first_case(t: &T) -> String {
    let og = build(&n(t.clone(), t.clone()));
    let (cert, trace) = solve_outerplanar_traced(&og, 3).unwrap();
    assert!(cert.achieved_size as i64 >= ceil(outerplanar_guarantee(og.n(), 3)));
    assert!(trace.steps.iter().all(|s| s.merge_ok));
    trace.steps[0].case.clone()
}

#[test]
fn large_rungs_fire_on_built_sides() {
    let cases = [
        (n(E, s11()), "h=12 (2,11)"),
        (n(n(E, E), s11()), "h=13 (3,11)"),
        (n(fan7(), fan7()), "h=13 (7,7)"),
        (n(fan7(), s8()), "h=14 (7,8)"),
        (n(s8(), s8()), "h=15 (8,8)"),
        (n(fan7(), s11()), "h=17 (7,11)"),
        (n(s8(), s11()), "h=18 (8,11)"),
        (n(s11(), s11()), "h=21 (11,11)"),
    ];
    for (t, want) in cases {
        let got = first_case(&t);
        assert!(got.starts_with(want), "wanted {want}, got {got}");
    }
}

#[test]
fn thirteen_seven_seven_keeps_apex_degree_two() {
    let t = n(fan7(), fan7());
    let og = build(&n(t.clone(), t));
    let (cert, trace) = solve_outerplanar_traced(&og, 3).unwrap();
    assert!(trace.steps[0].case.starts_with("h=13 (7,7)"));
    // The apex of the first 13-side is vertex 6 of the first copy.
    let deg = og.graph().neighbors(6).iter().filter(|&&x| cert.set.contains(x)).count();
    assert!(cert.set.contains(6));
    assert!(deg <= 2);
}

#[test]
fn constructions_match_exhaustive_search() {
    let og = build(&s11());
    let side = og.side_from(0, og.n() - 1).unwrap();
    for x in [side.u, side.v] {
        let spec = QualifiedSetSpec::with_end(&side, x, 8, 1, 3);
        let set = build_qualified_set(&og, &side, &spec).unwrap();
        assert!(spec.violation(&og, &side, &set).is_none());
        assert!(search_qualified(&og, &side, &spec).is_some());
    }
    let og = build(&s8());
    let side = og.side_from(0, og.n() - 1).unwrap();
    let spec = QualifiedSetSpec::with_end(&side, side.u, 6, 2, 3);
    let set = build_qualified_set(&og, &side, &spec).unwrap();
    assert_eq!(set.to_vec(), vec![0, 1, 2, 3, 5, 6]);
}

#[test]
fn exhaustive_small_graphs_k3() {
    for n in 3..=12 {
        for og in enumerate_polygon_triangulations(n).unwrap() {
            let cert = solve_outerplanar(&og, 3).unwrap();
            let (best, stats) = exact_max_kstable(og.graph(), 3, Budget::default());
            assert!(stats.proven_optimal);
            assert!(cert.achieved_size as i64 >= ceil(outerplanar_guarantee(n, 3)));
            assert!(cert.achieved_size <= best.len());
        }
    }
}

#[test]
fn both_eleven_vertex_orders_meet_the_guarantee() {
    for seed in 0..400 {
        let og = random_glued_fans(2 + (seed % 10) as usize, &[4, 5, 7, 8], seed).unwrap();
        let g = outerplanar_guarantee(og.n(), 3);
        for order in [H11Order::EndDegreeFirst, H11Order::ApexNeighborsFirst] {
            let (cert, _) = solve_outerplanar_with(&og, 3, order).unwrap();
            assert!(cert.achieved_size as i64 >= ceil(g));
        }
    }
}

#[test]
fn random_instances_all_k() {
    for k in 3..=8 {
        for (i, &n) in [12usize, 25, 60, 140, 300].iter().enumerate() {
            for seed in 0..6u64 {
                let og = random_maximal_outerplanar(n, 97 * seed + 13 * i as u64 + k as u64).unwrap();
                let (cert, trace) = solve_outerplanar_traced(&og, k).unwrap();
                assert!(cert.achieved_size as i64 >= ceil(outerplanar_guarantee(n, k)));
                assert!(trace.steps.iter().all(|s| s.merge_ok));
                // Each step removes the whole side, ends included.
                for w in trace.steps.windows(2) {
                    assert_eq!(w[1].n, w[0].n - w[0].h);
                    assert!(w[0].h >= 6);
                }
            }
        }
    }
}

#[test]
fn sixty_vertex_k4() {
    let og = random_maximal_outerplanar(60, 4).unwrap();
    let cert = solve_outerplanar(&og, 4).unwrap();
    assert!(cert.achieved_size >= 42);
}

#[test]
fn small_inputs() {
    let og = OuterplaneGraph::from_graph(&Graph::from_edges(2, [(0, 1)]).unwrap(), &[0, 1]).unwrap();
    assert_eq!(solve_outerplanar(&og, 3).unwrap().achieved_size, 2);
    let og = build(&n(E, n(E, E)));
    assert_eq!(solve_outerplanar(&og, 3).unwrap().achieved_size, 4);
    assert!(solve_outerplanar(&og, 2).is_err());
}

#[test]
fn trace_is_json_lines() {
    let og = random_maximal_outerplanar(80, 1).unwrap();
    let (_, trace) = solve_outerplanar_traced(&og, 3).unwrap();
    let text = trace.to_json_lines();
    assert_eq!(text.lines().count(), trace.steps.len());
    for line in text.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(v.get("h").is_some() && v.get("h1").is_some() && v.get("spec").is_some());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn guarantee_and_stability(n in 3usize..120, k in 3usize..9, seed in any::<u64>()) {
        let og = random_maximal_outerplanar(n, seed).unwrap();
        let cert = solve_outerplanar(&og, k).unwrap();
        prop_assert!(cert.violation(&og.labeled_graph().unwrap()).is_none());
        prop_assert!(cert.achieved_size as i64 >= ceil(outerplanar_guarantee(n, k)));
    }

    #[test]
    fn glued_fans_k3(blocks in 1usize..16, seed in any::<u64>()) {
        let og = random_glued_fans(blocks, &[3, 4, 5, 7, 8], seed).unwrap();
        let cert = solve_outerplanar(&og, 3).unwrap();
        prop_assert!(cert.achieved_size as i64 >= ceil(outerplanar_guarantee(og.n(), 3)));
    }
}
