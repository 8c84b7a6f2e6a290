//! Acceptance suite. Prints one line per criterion and exits non-zero if any
//! criterion fails.

use std::time::{Duration, Instant};

use fallkit::parallel;
use fallkit_core::graph::{
    classify, cycle, f_k, line_graph, petersen, power, random_chordal_ktree, random_gnp,
    random_maximal_outerplanar, random_regular, Graph,
};
use fallkit_core::reduce::{
    reduce_3col_to_fall3, reduce_edgecol_to_fallk, reduce_kcol_to_fallk, reduce_sat_to_2ids,
    source_instance, Family, HarnessConfig, HarnessReport, SourceInstance,
};
use fallkit_core::solve::{
    chromatic_number, fall_count_incexc, fall_decide_backtrack, fall_decide_polyspace, fall_probe,
    oracle_fall, Limits,
};

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict { pass, detail: detail.into() }
}

fn within(limit: Duration, took: Duration, detail: String) -> Verdict {
    let pass = took <= limit;
    verdict(pass, format!("{detail}; {:.2?} (limit {:.0?})", took, limit))
}

fn fall_set(g: &Graph) -> Vec<usize> {
    parallel::fall_set(g, &Limits::default()).unwrap().members
}

/// Labeled fall k-colorings by trying all k^n color vectors.
fn brute_force_fall_count(g: &Graph, k: usize) -> u128 {
    let n = g.n();
    let mut colors = vec![0usize; n];
    let mut count = 0;
    loop {
        let proper = g.edges().iter().all(|&(u, v)| colors[u] != colors[v]);
        let colorful = proper
            && (0..n).all(|v| {
                (0..k).all(|c| c == colors[v] || g.neighbors(v).iter().any(|u| colors[u] == c))
            });
        let onto = (0..k).all(|c| colors.contains(&c));
        if colorful && onto {
            count += 1;
        }
        let mut i = 0;
        while i < n && colors[i] == k - 1 {
            colors[i] = 0;
            i += 1;
        }
        if i == n {
            return count;
        }
        colors[i] += 1;
    }
}

fn criterion_1() -> Verdict {
    let start = Instant::now();
    let mut bad = Vec::new();
    for n in 3..=12 {
        let want: Vec<usize> = [2, 3].into_iter().filter(|k| n % k == 0).collect();
        if fall_set(&cycle(n).unwrap()) != want {
            bad.push(n);
        }
    }
    let took = start.elapsed();
    if !bad.is_empty() {
        return verdict(false, format!("wrong fall set for C_n, n in {bad:?}"));
    }
    within(Duration::from_secs(1), took, "C_3..C_12 match {k in {2,3} : k | n}".into())
}

fn criterion_2() -> Verdict {
    let g = cycle(6).unwrap();
    let limits = Limits::default();
    let members = fall_set(&g);
    let incexc = fall_count_incexc(&g, 3, &limits).unwrap().count;
    let oracle = oracle_fall(&g, 3, &limits).unwrap().count;
    let brute = brute_force_fall_count(&g, 3);
    let pass = members == [2, 3] && incexc == Some(brute) && oracle == Some(brute);
    verdict(
        pass,
        format!("fall set {members:?}; incexc {incexc:?}, oracle {oracle:?}, brute force {brute}"),
    )
}

fn criterion_3() -> Verdict {
    let start = Instant::now();
    let limits = Limits::default();
    let mut notes = Vec::new();
    let mut pass = true;
    for k in 3..=5 {
        let g = f_k(k).unwrap();
        let factorial: u128 = (1..=k as u128).product();
        let count = oracle_fall(&g, k, &limits).unwrap().count;
        let ok = fall_set(&g).contains(&k) && count == Some(factorial);
        pass &= ok;
        notes.push(format!("F_{k}: {count:?}"));
    }
    let v = within(Duration::from_secs(10), start.elapsed(), notes.join(", "));
    verdict(pass && v.pass, v.detail)
}

fn criterion_4() -> Verdict {
    let start = Instant::now();
    let limits = Limits::default();
    let mut disagreements = Vec::new();
    let mut probes = 0;
    for seed in 0..200u64 {
        let n = 1 + (seed as usize % 10);
        let p = 0.15 + 0.8 * ((seed * 37 % 100) as f64 / 100.0);
        let g = random_gnp(n, p, seed);
        for k in 1..=g.min_degree() + 1 {
            probes += 1;
            let o = oracle_fall(&g, k, &limits).unwrap();
            let b = fall_decide_backtrack(&g, k).unwrap();
            let i = fall_count_incexc(&g, k, &limits).unwrap();
            let p = fall_decide_polyspace(&g, k).unwrap();
            let feasible = [b.feasible, i.feasible, p.feasible].iter().all(|&f| f == o.feasible);
            if !feasible || i.count != o.count {
                disagreements.push((seed, k));
            }
        }
    }
    let took = start.elapsed();
    if !disagreements.is_empty() {
        return verdict(false, format!("disagreements at (seed, k): {disagreements:?}"));
    }
    within(Duration::from_secs(120), took, format!("200 graphs, {probes} probes, 0 disagreements"))
}

fn criterion_5() -> Verdict {
    let mut violations = Vec::new();
    let mut nonempty = 0;
    for seed in 0..50u64 {
        let k = 1 + (seed as usize % 3);
        let n = k + 1 + (seed as usize * 7 % (12 - k));
        let g = random_chordal_ktree(n, k, seed).unwrap();
        let members = fall_set(&g);
        if !members.is_empty() {
            nonempty += 1;
        }
        if members.iter().any(|&m| m != g.min_degree() + 1) {
            violations.push((seed, members));
        }
    }
    verdict(
        violations.is_empty(),
        format!("50 k-trees, {nonempty} with fall set {{δ+1}}, violations {violations:?}"),
    )
}

fn criterion_6() -> Verdict {
    let mut violations = Vec::new();
    for seed in 0..50u64 {
        let n = 3 + (seed as usize % 10);
        let members = fall_set(&random_maximal_outerplanar(n, seed).unwrap());
        if members != [3] {
            violations.push((seed, members));
        }
    }
    verdict(violations.is_empty(), format!("50 triangulations, violations {violations:?}"))
}

fn criterion_7() -> Verdict {
    let limits = Limits::default();
    let mut disagreements = Vec::new();
    let mut yes = 0;
    for seed in 0..30u64 {
        let n = 4 + 2 * (seed as usize % 6);
        let g = random_regular(n, 3, seed).unwrap();
        let fall = fall_decide_backtrack(&g, 4).unwrap().feasible;
        let square = chromatic_number(&power(&g, 2).unwrap(), &limits).unwrap() == 4;
        yes += usize::from(fall);
        if fall != square {
            disagreements.push(seed);
        }
    }
    verdict(
        disagreements.is_empty(),
        format!("30 cubic graphs, {yes} fall 4-colorable, disagreements {disagreements:?}"),
    )
}

fn harness_configs() -> Vec<HarnessConfig> {
    vec![
        HarnessConfig::new(Family::ThreeColFall3, 25, 8, 1),
        HarnessConfig::new(Family::KColFallK(4), 25, 8, 2),
        HarnessConfig::new(Family::EdgeColFallK { k: 3, with_box: false }, 25, 10, 3),
        HarnessConfig::new(Family::EdgeColFallK { k: 3, with_box: true }, 25, 10, 4),
        HarnessConfig::new(Family::SatTwoIds, 25, 6, 5),
    ]
}

fn criterion_8(reports: &[HarnessReport], took: Duration) -> Verdict {
    let failures: usize = reports.iter().map(|r| r.failures.len()).sum();
    let summary: Vec<String> = reports
        .iter()
        .map(|r| format!("{} {}/{} feasible", r.family, r.feasible, r.trials))
        .collect();
    if failures > 0 {
        let first = reports.iter().flat_map(|r| &r.failures).next().unwrap();
        return verdict(
            false,
            format!("{failures} failures; first: trial {} {} ({})", first.trial, first.reason, first.instance),
        );
    }
    within(Duration::from_secs(600), took, summary.join(", "))
}

fn criterion_9() -> Verdict {
    let limits = Limits::default();
    let lk4 = fall_probe(&line_graph(&fallkit_core::graph::complete(4).unwrap()).unwrap(), 3, &limits)
        .unwrap()
        .feasible;
    let lp = fall_decide_backtrack(&line_graph(&petersen()).unwrap(), 3).unwrap().feasible;
    let edge_3 = fallkit_core::reduce::brute_force_edge_coloring(&petersen(), 3).is_some();
    let (t, _) = reduce_3col_to_fall3(&fallkit_core::graph::complete(3).unwrap()).unwrap();
    let pass = lk4 && !lp && !edge_3 && (t.n(), t.m()) == (21, 24);
    verdict(
        pass,
        format!(
            "L(K4) fall-3 {lk4}; L(Petersen) fall-3 {lp} (edge 3-colorable {edge_3}); \
             3col target of K3 has {} vertices, {} edges",
            t.n(),
            t.m()
        ),
    )
}

/// Recomputes the structural facts of every harness target outside the
/// harness itself.
fn criterion_10(configs: &[HarnessConfig]) -> Verdict {
    let mut bad = Vec::new();
    let mut checked = 0;
    for config in configs {
        for trial in 0..config.trials {
            checked += 1;
            let source = source_instance(config, trial).unwrap();
            let ok = match (config.family, source) {
                (Family::ThreeColFall3, SourceInstance::Graph(g)) => vertex_structure(&g, 3),
                (Family::KColFallK(k), SourceInstance::Graph(g)) => vertex_structure(&g, k),
                (Family::EdgeColFallK { k, with_box }, SourceInstance::Graph(g)) => {
                    let (t, _) = reduce_edgecol_to_fallk(&g, k, with_box).unwrap();
                    let layers = if with_box { 2 } else { 1 };
                    t.n() == layers * g.m() && t.regular_degree() == Some(2 * k - 2 + layers - 1)
                }
                (Family::SatTwoIds, SourceInstance::Formula(phi)) => {
                    let (t, _) = reduce_sat_to_2ids(&phi).unwrap();
                    let (n, m) = (phi.num_vars(), phi.clauses().len());
                    classify(&t).triangle_free && t.n() == 8 * n + m && t.m() == 8 * n + 3 * m
                }
                _ => false,
            };
            if !ok {
                bad.push(format!("{} trial {trial}", config.family));
            }
        }
    }
    verdict(bad.is_empty(), format!("{checked} targets checked, violations {bad:?}"))
}

fn vertex_structure(g: &Graph, k: usize) -> bool {
    let (t, _) = if k == 3 { reduce_3col_to_fall3(g) } else { reduce_kcol_to_fallk(g, k) }.unwrap();
    let degree_cap = g.max_degree() > 2 * k - 2 || t.max_degree() <= 3 * (k - 1);
    classify(&t).bipartite && degree_cap
}

fn main() {
    let mut results = vec![
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(),
    ];
    let configs = harness_configs();
    let start = Instant::now();
    let reports: Vec<HarnessReport> = configs.iter().map(parallel::harness).collect();
    results.push(criterion_8(&reports, start.elapsed()));
    results.push(criterion_9());
    results.push(criterion_10(&configs));

    let mut failed = 0;
    for (i, v) in results.iter().enumerate() {
        println!("criterion {}: {} {}", i + 1, if v.pass { "PASS" } else { "FAIL" }, v.detail);
        failed += usize::from(!v.pass);
    }
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
