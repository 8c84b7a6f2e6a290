use fallkit_core::graph::*;
use fallkit_core::solve::*;
use fallkit_core::verify::*;
use fallkit_core::{Coloring, Graph, VertexSet};
use proptest::prelude::*;

fn limits() -> Limits {
    Limits::default()
}

fn small_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, 0.0..1.0f64, any::<u64>()).prop_map(|(n, p, seed)| random_gnp(n, p, seed))
}

/// Counts proper k-colorings by plain enumeration.
fn count_proper(g: &Graph, k: usize) -> u64 {
    fn go(g: &Graph, k: usize, v: usize, c: &mut Vec<usize>) -> u64 {
        if v == g.n() {
            return 1;
        }
        let mut total = 0;
        for col in 1..=k {
            if g.neighbors(v).iter().all(|u| u >= v || c[u] != col) {
                c[v] = col;
                total += go(g, k, v + 1, c);
            }
        }
        total
    }
    go(g, k, 0, &mut vec![0; g.n()])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn all_solvers_agree(g in small_graph(8)) {
        for k in 1..=g.min_degree() + 1 {
            let oracle = oracle_fall(&g, k, &limits()).unwrap();
            let back = fall_decide_backtrack(&g, k).unwrap();
            let incexc = fall_count_incexc(&g, k, &limits()).unwrap();
            let poly = fall_decide_polyspace(&g, k).unwrap();
            prop_assert_eq!(oracle.feasible, back.feasible);
            prop_assert_eq!(oracle.feasible, poly.feasible);
            prop_assert_eq!(oracle.count, incexc.count);
            prop_assert_eq!(oracle.feasible, incexc.count.unwrap() > 0);
            for w in [&oracle.witness, &back.witness, &poly.witness].into_iter().flatten() {
                prop_assert!(is_fall_coloring(&g, w).unwrap().valid);
            }
            if let Some(fast) = special_case_dispatch(&g, k, &limits()).unwrap() {
                prop_assert_eq!(fast.feasible, oracle.feasible);
                if let Some(w) = &fast.witness {
                    prop_assert!(is_fall_coloring(&g, w).unwrap().valid);
                }
            }
        }
    }

    #[test]
    fn ids_are_exactly_the_maximal_independent_sets(g in small_graph(9), mask in any::<u16>()) {
        let mis = enumerate_mis(&g);
        let s = VertexSet::from_vertices(g.n(), (0..g.n()).filter(|v| mask >> v & 1 == 1)).unwrap();
        prop_assert_eq!(is_ids(&g, &s).unwrap(), mis.contains(&s));
        for m in &mis {
            prop_assert!(is_ids(&g, m).unwrap());
        }
    }

    #[test]
    fn fall_set_of_disjoint_union_is_intersection(g in small_graph(6), h in small_graph(6)) {
        let joint = fall_set(&disjoint_union(&g, &h), &limits()).unwrap();
        let a = fall_set(&g, &limits()).unwrap();
        let b = fall_set(&h, &limits()).unwrap();
        let both: Vec<usize> = a.members.iter().copied().filter(|k| b.contains(*k)).collect();
        prop_assert_eq!(joint.members, both);
    }

    #[test]
    fn fall_validity_ignores_color_names(g in small_graph(7), seed in any::<u64>()) {
        let top = g.min_degree() + 1;
        if let Some(w) = fall_decide_backtrack(&g, top).unwrap().witness {
            let mut perm: Vec<usize> = (1..=top).collect();
            let rot = (seed as usize) % top;
            perm.rotate_left(rot);
            let renamed = w.relabeled(&perm).unwrap();
            prop_assert!(is_fall_coloring(&g, &renamed).unwrap().valid);
            prop_assert_eq!(renamed.canonical(), w.canonical());
        }
    }

    #[test]
    fn fall_set_respects_degree_bound(g in small_graph(9)) {
        let fs = fall_set(&g, &limits()).unwrap();
        if let Some(top) = fs.psi_fall() {
            prop_assert!(top <= g.min_degree() + 1);
            prop_assert!(chromatic_number(&g, &limits()).unwrap() <= fs.chi_fall().unwrap());
        }
    }

    #[test]
    fn uniquely_colorable_graphs_are_fall_colorable(g in small_graph(7)) {
        let chi = chromatic_number(&g, &limits()).unwrap();
        let factorial: u64 = (1..=chi as u64).product();
        if count_proper(&g, chi) == factorial {
            prop_assert!(fall_decide_backtrack(&g, chi).unwrap().feasible);
        }
    }

    #[test]
    fn line_graph_of_regular_graph_is_regular(half in 2..6usize, r in 2..4usize, seed in any::<u64>()) {
        let n = 2 * half;
        prop_assume!(r < n);
        let g = random_regular(n, r, seed).unwrap();
        let l = line_graph(&g).unwrap();
        prop_assert_eq!(l.n(), n * r / 2);
        prop_assert_eq!(l.regular_degree(), Some(2 * r - 2));
    }

    #[test]
    fn categorical_product_with_k2_is_bipartite(h in small_graph(7)) {
        let p = categorical_product(&complete(2).unwrap(), &h).unwrap();
        prop_assert!(is_bipartite(&p));
        prop_assert_eq!(p.m(), 2 * h.m());
    }

    #[test]
    fn cubic_graphs_follow_the_square_criterion(half in 2..7usize, seed in any::<u64>()) {
        let g = random_regular(2 * half, 3, seed).unwrap();
        let square = power(&g, 2).unwrap();
        let chi = chromatic_number(&square, &limits()).unwrap();
        prop_assert_eq!(fall_decide_backtrack(&g, 4).unwrap().feasible, chi == 4);
    }

    #[test]
    fn chordal_fall_sets(n in 3..12usize, k in 1..4usize, seed in any::<u64>()) {
        prop_assume!(k < n);
        let g = random_chordal_ktree(n, k, seed).unwrap();
        prop_assert!(is_chordal(&g));
        let fs = fall_set(&g, &limits()).unwrap();
        prop_assert!(fs.members.iter().all(|&m| m == g.min_degree() + 1));
        for m in 1..=g.min_degree() + 1 {
            prop_assert_eq!(fs.contains(m), fall_decide_backtrack(&g, m).unwrap().feasible);
        }
    }

    #[test]
    fn maximal_outerplanar_fall_set_is_three(n in 3..13usize, seed in any::<u64>()) {
        let g = random_maximal_outerplanar(n, seed).unwrap();
        prop_assert_eq!(g.m(), 2 * n - 3);
        prop_assert_eq!(fall_set(&g, &limits()).unwrap().members, vec![3]);
    }

    #[test]
    fn incexc_and_oracle_agree_on_counts(g in small_graph(7), k in 1..5usize) {
        prop_assert_eq!(
            fall_count_incexc(&g, k, &limits()).unwrap().count,
            oracle_fall(&g, k, &limits()).unwrap().count
        );
    }

    #[test]
    fn two_disjoint_ids_matches_fall_two_on_small_graphs(g in small_graph(8)) {
        // Two disjoint IDS exist whenever the graph is fall 2-colorable.
        if fall_decide_backtrack(&g, 2).unwrap().feasible {
            let (a, b) = two_disjoint_ids(&g, &limits()).unwrap().unwrap();
            prop_assert!(are_disjoint_ids(&g, &a, &b).unwrap());
        }
    }
}

#[test]
fn cycle_characterization() {
    for n in 3..=12 {
        let expected: Vec<usize> = [2, 3].into_iter().filter(|k| n % k == 0).collect();
        let fs = fall_set(&cycle(n).unwrap(), &limits()).unwrap();
        assert_eq!(fs.members, expected, "C_{n}");
        for k in 2..=3 {
            let back = fall_decide_backtrack(&cycle(n).unwrap(), k).unwrap();
            assert_eq!(back.feasible, n % k == 0);
        }
    }
}

#[test]
fn f_k_is_uniquely_fall_colorable() {
    // F_2 is two disjoint edges, with four fall 2-colorings.
    assert_eq!(fall_count_incexc(&f_k(2).unwrap(), 2, &limits()).unwrap().count, Some(4));
    for k in 3..=5 {
        let g = f_k(k).unwrap();
        assert!(is_bipartite(&g));
        let count = fall_count_incexc(&g, k, &limits()).unwrap().count.unwrap();
        let factorial: u128 = (1..=k as u128).product();
        assert_eq!(count, factorial, "F_{k}");
    }
    let oracle = oracle_fall(&f_k(4).unwrap(), 4, &limits()).unwrap();
    assert_eq!(oracle.count, Some(24));
}

#[test]
fn petersen_facts() {
    let p = petersen();
    assert_eq!(p.regular_degree(), Some(3));
    assert!(edge_color_decide(&p, 3, &limits()).unwrap().is_none());
    assert!(edge_color_decide(&p, 4, &limits()).unwrap().is_some());
    let fs = fall_set(&p, &limits()).unwrap();
    for k in 1..=4 {
        assert_eq!(fs.contains(k), oracle_fall(&p, k, &limits()).unwrap().feasible);
    }
}

#[test]
fn witnesses_are_total_and_surjective() {
    let g = cycle(9).unwrap();
    let w: Coloring = fall_decide_backtrack(&g, 3).unwrap().witness.unwrap();
    assert_eq!(w.len(), 9);
    assert!(w.is_surjective());
}
