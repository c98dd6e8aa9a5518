//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Exits 0 regardless of the outcome so that known failures stay visible
//! without breaking `cargo test`; set `ACCEPTANCE_STRICT=1` to exit 1 on any FAIL.

use std::time::Instant;

use kstable::certificate::ceil;
use kstable::families::{
    gen_greedy_adversary, gen_outerpath_ub, gen_planar_ub_a, gen_planar_ub_b, random_maximal_outerpath,
    random_maximal_outerplanar, random_planar_triangulation, random_regular, subdivide,
};
use kstable::greedy::augment::{gadget_budget, residual_cases};
use kstable::greedy::domset::cited_bound;
use kstable::greedy::{
    bound_calculator, find_gadget, greedy_removal, greedy_removal_with, planar_corollary, GreedyOptions, Strategy,
    TieBreak,
};
use kstable::oracle::{enumerate_polygon_triangulations, exact_max_kstable, exact_min_dominating, Budget};
use kstable::outerpath::{outerpath_guarantee, solve_outerpath};
use kstable::outerplanar::{outerplanar_guarantee, solve_outerplanar_traced};
use kstable::{verify_kstable, Graph, OuterplaneGraph, Rational};
use rayon::prelude::*;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(failures: Vec<String>, summary: String) -> Outcome {
    if failures.is_empty() {
        Outcome { pass: true, detail: summary }
    } else {
        let shown: Vec<&str> = failures.iter().take(6).map(String::as_str).collect();
        let more = if failures.len() > 6 { format!(" (+{} more)", failures.len() - 6) } else { String::new() };
        Outcome { pass: false, detail: format!("{summary}; {} failures: {}{more}", failures.len(), shown.join("; ")) }
    }
}

fn int(x: usize) -> Rational {
    Rational::from_integer(x as i64)
}

fn outerpath_case(og: &OuterplaneGraph, k: usize, tag: &str) -> Option<String> {
    let n = og.n();
    match solve_outerpath(og, k) {
        Err(e) => Some(format!("{tag} k={k}: {e}")),
        Ok(c) => {
            let g = og.labeled_graph().unwrap();
            let stable = verify_kstable(&g, &c.set, k).unwrap();
            let big = c.achieved_size as i64 >= ceil(outerpath_guarantee(n, k));
            (!stable || !big).then(|| format!("{tag} k={k}: size {} stable {stable}", c.achieved_size))
        }
    }
}

fn c1() -> Outcome {
    let small: Vec<OuterplaneGraph> = (3..=12)
        .flat_map(|n| enumerate_polygon_triangulations(n).unwrap().filter(|og| og.is_outerpath()))
        .collect();
    let mut fails: Vec<String> = small
        .par_iter()
        .flat_map_iter(|og| (3..=8).filter_map(move |k| outerpath_case(og, k, &format!("n={}", og.n()))))
        .collect();
    let jobs: Vec<(usize, u64)> = [20usize, 50, 100, 200].iter().flat_map(|&n| (0..500).map(move |s| (n, s))).collect();
    fails.par_extend(jobs.par_iter().flat_map_iter(|&(n, seed)| {
        let og = random_maximal_outerpath(n, seed).unwrap();
        (3..=8).filter_map(move |k| outerpath_case(&og, k, &format!("n={n} seed={seed}")))
    }));
    outcome(fails, format!("{} exhaustive outerpaths and 2000 random, k=3..8", small.len()))
}

fn c2() -> Outcome {
    let mut fails = Vec::new();
    let mut values = Vec::new();
    for n in 9..=24 {
        let inst = gen_outerpath_ub(n, 3).unwrap();
        let (s, st) = exact_max_kstable(&inst.graph, 3, Budget::default());
        let opt = int(s.len());
        let lo = Rational::new(2 * n as i64, 3);
        values.push(format!("{n}:{}", s.len()));
        if !st.proven_optimal || opt < lo || opt > lo + 2 {
            fails.push(format!("n={n} opt={} window [{lo}, {}]", s.len(), lo + 2));
        }
    }
    outcome(fails, format!("opt per n {}", values.join(" ")))
}

fn outerplanar_case(og: &OuterplaneGraph, k: usize, tag: &str) -> Option<String> {
    match solve_outerplanar_traced(og, k) {
        Err(e) => Some(format!("{tag}: {e}")),
        Ok((c, trace)) => {
            let g = og.labeled_graph().unwrap();
            let stable = verify_kstable(&g, &c.set, k).unwrap();
            let big = c.achieved_size as i64 >= ceil(outerplanar_guarantee(og.n(), k));
            let merges = trace.steps.iter().all(|s| s.merge_ok);
            (!stable || !big || !merges)
                .then(|| format!("{tag}: size {} stable {stable} merges {merges}", c.achieved_size))
        }
    }
}

fn c3() -> Outcome {
    let small: Vec<OuterplaneGraph> = (3..=12).flat_map(|n| enumerate_polygon_triangulations(n).unwrap()).collect();
    let mut fails: Vec<String> =
        small.par_iter().filter_map(|og| outerplanar_case(og, 3, &format!("n={}", og.n()))).collect();
    let jobs: Vec<(usize, u64)> = [30usize, 100, 300].iter().flat_map(|&n| (0..300).map(move |s| (n, s))).collect();
    fails.par_extend(jobs.par_iter().filter_map(|&(n, seed)| {
        outerplanar_case(&random_maximal_outerplanar(n, seed).unwrap(), 3, &format!("n={n} seed={seed}"))
    }));
    outcome(fails, format!("{} exhaustive triangulations and 900 random", small.len()))
}

fn c4() -> Outcome {
    let jobs: Vec<(usize, usize, u64)> = [50usize, 150]
        .iter()
        .flat_map(|&n| (4..=7).flat_map(move |k| (0..100).map(move |s| (n, k, s))))
        .collect();
    let fails = jobs
        .par_iter()
        .filter_map(|&(n, k, seed)| {
            let og = random_maximal_outerplanar(n, 1000 + seed).unwrap();
            outerplanar_case(&og, k, &format!("n={n} k={k} seed={seed}"))
        })
        .collect();
    outcome(fails, "100 random triangulations per (n, k), n in {50,150}, k=4..7".into())
}

fn c5() -> Outcome {
    let mut fails = Vec::new();
    let mut seen = Vec::new();
    for (n, k) in [(21usize, 3usize), (26, 3)] {
        let (ni, ki) = (n as i64, k as i64);
        let cap_a = (Rational::new((2 * ki - 2) * ni, 2 * ki + 1) + 5).floor().to_integer();
        let cap_b = (Rational::new((ki + 2) * ni, ki + 4) + 2).floor().to_integer();
        for (name, g, cap) in
            [("a", gen_planar_ub_a(n, k).unwrap().graph, cap_a), ("b", gen_planar_ub_b(n, k).unwrap().graph, cap_b)]
        {
            let (s, st) = exact_max_kstable(&g, k, Budget::default());
            seen.push(format!("{name}(n={n}) opt {} cap {cap}", s.len()));
            if !st.proven_optimal || s.len() as i64 > cap {
                fails.push(format!("{name} n={n}: opt {} proven {} cap {cap}", s.len(), st.proven_optimal));
            }
        }
    }
    outcome(fails, seen.join(", "))
}

fn c6() -> Outcome {
    let jobs: Vec<(usize, u64)> = [100usize, 300, 500].iter().flat_map(|&n| (0..200).map(move |s| (n, s))).collect();
    let results: Vec<(Vec<String>, usize, usize)> = jobs
        .par_iter()
        .map(|&(n, seed)| {
            let g = random_planar_triangulation(n, seed).unwrap();
            let mut fails = Vec::new();
            for k in 3..=7 {
                let want = planar_corollary(n, k).unwrap().value;
                match greedy_removal(&g, k, Strategy::Best) {
                    Ok((c, _)) if int(c.achieved_size) >= want => {}
                    Ok((c, _)) => fails.push(format!("n={n} seed={seed} k={k}: {} < {want}", c.achieved_size)),
                    Err(e) => fails.push(format!("n={n} seed={seed} k={k}: {e}")),
                }
            }
            let (_, t) = greedy_removal(&g, 3, Strategy::DominatingSet).unwrap();
            let exact = t.domination.iter().all(|d| d.exact);
            let g4 = t.snapshot(4).unwrap();
            let eq = 11 * t.r_at(4) <= 4 * (g4 + 6);
            let checked = (exact || t.domination_bounds_met()) as usize;
            if !eq && (exact || t.domination_bounds_met()) {
                fails.push(format!("n={n} seed={seed}: r4={} above 4/11({g4}+6)", t.r_at(4)));
            }
            (fails, exact as usize, checked)
        })
        .collect();
    let exact: usize = results.iter().map(|r| r.1).sum();
    let checked: usize = results.iter().map(|r| r.2).sum();
    let fails = results.into_iter().flat_map(|r| r.0).collect();
    outcome(
        fails,
        format!(
            "600 triangulations, k=3..7 against the planar closed forms; r4 <= 4/11(n+6) held on {checked} runs \
             whose dominating sets met the cited size ({exact} of them proven minimum)"
        ),
    )
}

fn c7() -> Outcome {
    let mut fails = Vec::new();
    let mut count = 0;
    for r in [4usize, 5] {
        let budget = gadget_budget(r);
        for degrees in residual_cases(r) {
            count += 1;
            let x = degrees.len();
            let Some(gadget) = find_gadget(&degrees, r, budget) else {
                fails.push(format!("r={r} {degrees:?}: none"));
                continue;
            };
            // Clique plus gadget, with each clique vertex's outside edges replaced by pendant stubs.
            let mut edges: Vec<(usize, usize)> = (0..x).flat_map(|a| (a + 1..x).map(move |b| (a, b))).collect();
            let mut next = x + gadget.new_vertices;
            for (i, &d) in degrees.iter().enumerate() {
                for _ in 0..d - (x - 1) {
                    edges.push((i, next));
                    next += 1;
                }
            }
            edges.extend(gadget.edges.iter().copied());
            let g = Graph::from_edges(next, edges).unwrap();
            let regular = (0..x + gadget.new_vertices).all(|v| g.degree(v) == r);
            if !regular || gadget.new_vertices > budget {
                fails.push(format!("r={r} {degrees:?}: {} added, regular {regular}", gadget.new_vertices));
            }
        }
    }
    outcome(fails, format!("{count} residual multisets (r=4 budget 6, r=5 budget 7)"))
}

fn c8() -> Outcome {
    let jobs: Vec<(usize, u64)> = [4usize, 5].iter().flat_map(|&r| (0..50).map(move |s| (r, s))).collect();
    let fails = jobs
        .par_iter()
        .filter_map(|&(r, seed)| {
            let n = 12 + 2 * (seed as usize % 10);
            let g = random_regular(n, r, seed).unwrap();
            let (d, st) = exact_min_dominating(&g, Budget::default()).unwrap();
            let cap = cited_bound(r, n).unwrap().floor().to_integer() as usize;
            (!st.proven_optimal || d.len() > cap).then(|| format!("r={r} n={n} seed={seed}: {} > {cap}", d.len()))
        })
        .collect();
    outcome(fails, "50 connected 4-regular and 50 connected 5-regular graphs, n=12..30".into())
}

fn c9() -> Outcome {
    let mut fails = Vec::new();
    let mut least = i64::MAX;
    for n in (20..=200).step_by(2) {
        let g = gen_greedy_adversary(n).unwrap().graph;
        let opts = GreedyOptions { strategy: Strategy::Plain, tiebreak: TieBreak::Adversarial, ..Default::default() };
        let (_, t) = greedy_removal_with(&g, 3, &opts).unwrap();
        let slack = 2 * t.removed() as i64 - n as i64;
        least = least.min(slack);
        if 2 * t.removed() + 8 < n {
            fails.push(format!("n={n}: removed {}", t.removed()));
        }
        let want = bound_calculator(n, g.m(), 4, 3, None).unwrap().value;
        let (best, _) = greedy_removal(&g, 3, Strategy::Best).unwrap();
        if int(best.achieved_size) < want {
            fails.push(format!("n={n}: best {} < {want}", best.achieved_size));
        }
    }
    outcome(fails, format!("even n=20..200; smallest removals - n/2 = {}", least as f64 / 2.0))
}

fn c10() -> Outcome {
    let mut fails = Vec::new();
    for n in 1..=400usize {
        let v = bound_calculator(n, 0, 0, 3, Some(4)).unwrap().value;
        if v != Rational::new(20 * n as i64 - 4, 39) {
            fails.push(format!("n={n}: {v}"));
        }
    }
    let jobs: Vec<(usize, u64)> = [20usize, 60, 150].iter().flat_map(|&n| (0..40).map(move |s| (n, s))).collect();
    fails.par_extend(jobs.par_iter().filter_map(|&(t, seed)| {
        let g = subdivide(&random_planar_triangulation(t, seed).unwrap());
        let want = Rational::new(20 * g.n() as i64 - 4, 39);
        let (c, _) = greedy_removal(&g, 3, Strategy::Best).ok()?;
        (int(c.achieved_size) < want).then(|| format!("t={t} seed={seed}: {} < {want}", c.achieved_size))
    }));
    outcome(fails, "closed form for n=1..400; 120 subdivided triangulations".into())
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 10] = [
        ("outerpath guarantee", c1),
        ("outerpath family window", c2),
        ("outerplanar k=3", c3),
        ("outerplanar k=4..7", c4),
        ("planar upper-bound families", c5),
        ("greedy planar bounds", c6),
        ("augmentation gadgets", c7),
        ("dominating-set targets", c8),
        ("greedy adversary", c9),
        ("girth bound", c10),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = run();
        let secs = start.elapsed().as_secs_f64();
        failed += usize::from(!o.pass);
        let tag = if o.pass { "PASS" } else { "FAIL" };
        println!("{tag} {:>2} {name} [{secs:.1}s]: {}", i + 1, o.detail);
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 && std::env::var("ACCEPTANCE_STRICT").is_ok_and(|v| v == "1") {
        std::process::exit(1);
    }
}
