use fallkit::formats::*;
use fallkit_core::graph::random_gnp;
use fallkit_core::reduce::CnfFormula;
use fallkit_core::{Coloring, VertexSet};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn graph_round_trips(n in 0usize..15, p in 0.0f64..1.0, seed: u64) {
        let g = random_gnp(n, p, seed);
        let dimacs = parse_dimacs(&write_dimacs(&g)).unwrap();
        prop_assert!(dimacs.warnings.is_empty());
        prop_assert_eq!(dimacs.value.n(), g.n());
        prop_assert_eq!(dimacs.value.edges(), g.edges());
        let json = parse_graph(&write_graph_json(&g)).unwrap().value;
        prop_assert_eq!(json.edges(), g.edges());
    }

    #[test]
    fn coloring_round_trips(k in 1usize..6, raw in prop::collection::vec(0usize..100, 0..20)) {
        let colors: Vec<usize> = raw.iter().map(|c| c % k + 1).collect();
        let c = Coloring::new(k, colors.clone()).unwrap();
        let back = parse_coloring(&write_coloring(&c), colors.len(), Some(k)).unwrap();
        prop_assert_eq!(back.colors(), &colors[..]);
    }

    #[test]
    fn cnf_round_trips(n in 3usize..8, picks in prop::collection::vec((any::<bool>(), 0usize..1000), 1..8)) {
        let clauses: Vec<Vec<i32>> = picks
            .iter()
            .map(|&(pos, r)| {
                let a = r % n;
                let b = (a + 1 + r / n % (n - 1)) % n;
                let c = (0..n).find(|&x| x != a && x != b).unwrap();
                let s = if pos { 1 } else { -1 };
                vec![s * (a as i32 + 1), s * (b as i32 + 1), s * (c as i32 + 1)]
            })
            .collect();
        let phi = CnfFormula::new(n, clauses).unwrap();
        let back = parse_cnf(&write_cnf(&phi)).unwrap().value;
        prop_assert_eq!(back, phi);
    }

    #[test]
    fn certificates_round_trip(tau in prop::collection::vec(any::<bool>(), 1..12), bits in prop::collection::vec(0u8..3, 1..20)) {
        prop_assert_eq!(parse_assignment(&write_assignment(&tau), tau.len()).unwrap(), tau);
        let n = bits.len();
        let a = VertexSet::from_vertices(n, (0..n).filter(|&v| bits[v] == 1)).unwrap();
        let b = VertexSet::from_vertices(n, (0..n).filter(|&v| bits[v] == 2)).unwrap();
        let (a2, b2) = parse_set_pair(&write_set_pair(&a, &b), n).unwrap();
        prop_assert_eq!((a2, b2), (a, b));
    }
}
