use proptest::prelude::*;

use sparing::corpus::{erdos_renyi, random_graphs};
use sparing::families::{generate, FamilySpec};
use sparing::graph::{Graph, VertexSet};
use sparing::io::{read_graph, read_labeling, write_graph, write_labeling};
use sparing::setlabel::{mono_edges, sumset, verify_weak, IntegerSet, Labeling};
use sparing::solver::{construct_witness, sparing_bruteforce, sparing_exact, Solver};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn arb_set() -> impl Strategy<Value = IntegerSet> {
    proptest::collection::vec(0u64..=100, 1..=5).prop_map(|v| IntegerSet::new(v).unwrap())
}

proptest! {
    #[test]
    fn sumset_laws(a in arb_set(), b in arb_set()) {
        let ab = sumset(&a, &b);
        prop_assert_eq!(&ab, &sumset(&b, &a));
        prop_assert_eq!(sumset(&a, &IntegerSet::singleton(0).unwrap()), a.clone());
        prop_assert!(ab.len() >= a.len().max(b.len()));
        prop_assert!(ab.len() <= a.len() * b.len());
        // Cardinality equals the larger one exactly when one side is a singleton.
        prop_assert_eq!(ab.len() == a.len().max(b.len()), a.len().min(b.len()) == 1);
    }

    #[test]
    fn edges_within_monotone(g in arb_graph(12), a in any::<u64>(), b in any::<u64>()) {
        let all = g.vertices().bits();
        let small = VertexSet::from_bits(a & b & all);
        let large = VertexSet::from_bits((a | b) & all);
        prop_assert!(g.edges_within(small).len() <= g.edges_within(large).len());
        prop_assert_eq!(g.edges_within(g.vertices()).len(), g.edge_count());
    }

    #[test]
    fn structural_counts(g in arb_graph(12), pick in any::<u64>()) {
        prop_assert!(g.validate());
        let s = g.shadow().unwrap();
        let degree_sum: usize = (0..g.vertex_count()).map(|v| g.degree(v)).sum();
        prop_assert_eq!(s.edge_count(), g.edge_count() + degree_sum);
        prop_assert_eq!(s.edge_count(), 3 * g.edge_count());
        prop_assert!(s.validate());
        let edges: Vec<_> = g.edges().into_iter().enumerate()
            .filter(|(i, _)| pick >> (i % 64) & 1 == 1).map(|(_, e)| e).collect();
        let sub = g.subdivide_edges(&edges).unwrap();
        prop_assert_eq!(sub.edge_count(), g.edge_count() + edges.len());
        prop_assert_eq!(sub.vertex_count(), g.vertex_count() + edges.len());
        prop_assert!(sub.validate());
    }

    #[test]
    fn graph_text_round_trip(g in arb_graph(16)) {
        prop_assert_eq!(read_graph(&write_graph(&g)).unwrap(), g);
    }

    #[test]
    fn exact_matches_oracle(g in arb_graph(10)) {
        prop_assert_eq!(sparing_exact(&g), sparing_bruteforce(&g).unwrap());
    }

    #[test]
    fn witness_realises_every_independent_set(g in arb_graph(9), pick in any::<u64>()) {
        // Greedily thin a random set down to an independent one.
        let mut set = VertexSet::EMPTY;
        for v in VertexSet::from_bits(pick & g.vertices().bits()).iter() {
            if g.neighbors(v).intersection(set).is_empty() {
                set.insert(v);
            }
        }
        let f = construct_witness(&g, set).unwrap();
        prop_assert!(verify_weak(&g, &f).unwrap().ok());
        let mono = mono_edges(&g, &f).unwrap();
        prop_assert_eq!(mono, g.edges_within(g.vertices().difference(set)));
        let text = write_labeling(&f, g.vertex_count()).unwrap();
        prop_assert_eq!(read_labeling(&text).unwrap(), (g.vertex_count(), f));
    }

    #[test]
    fn weak_labelings_have_independent_non_singletons(
        g in arb_graph(7),
        labels in proptest::collection::vec(proptest::collection::vec(0u64..1_000_000, 1..=3), 7),
    ) {
        let f = Labeling::from_vec(
            labels.into_iter().take(g.vertex_count()).map(|v| IntegerSet::new(v).unwrap()).collect(),
        );
        if verify_weak(&g, &f).unwrap().ok() {
            let big = f.non_singleton_vertices();
            prop_assert!(g.is_independent(big));
            let mono = mono_edges(&g, &f).unwrap();
            prop_assert_eq!(&mono, &g.edges_within(g.vertices().difference(big)));
            prop_assert!(mono.len() >= sparing_bruteforce(&g).unwrap().value);
        }
    }
}

#[test]
fn cycle_parity_over_every_pattern() {
    for n in 3..=10 {
        let c = generate(&FamilySpec::Cycle { n }).unwrap().graph;
        let mut valid = 0;
        for mask in 0..1u64 << n {
            let set = VertexSet::from_bits(mask);
            match construct_witness(&c, set) {
                Ok(f) => {
                    assert!(verify_weak(&c, &f).unwrap().ok());
                    let mono = mono_edges(&c, &f).unwrap().len();
                    assert_eq!(mono % 2, n % 2, "C_{n} pattern {set}");
                    valid += 1;
                }
                Err(sparing::Error::NotIndependent(..)) => {}
                Err(e) => panic!("{e}"),
            }
        }
        // Independent sets of C_n number L_n, the Lucas numbers.
        let lucas = [2u64, 1, 3, 4, 7, 11, 18, 29, 47, 76, 123];
        assert_eq!(valid, lucas[n]);
    }
}

#[test]
fn adding_an_edge_never_lowers_phi() {
    for seed in 0..60 {
        let g = erdos_renyi(9, 0.35, seed).unwrap();
        let before = sparing_bruteforce(&g).unwrap().value;
        let missing: Vec<_> = (0..9)
            .flat_map(|u| (u + 1..9).map(move |v| (u, v)))
            .filter(|&(u, v)| !g.has_edge(u, v))
            .collect();
        if missing.is_empty() {
            continue;
        }
        let (u, v) = missing[seed as usize % missing.len()];
        let mut edges = g.edges();
        edges.push((u, v));
        let h = Graph::from_edges(9, &edges).unwrap();
        assert!(
            sparing_bruteforce(&h).unwrap().value >= before,
            "seed {seed}"
        );
    }
}

#[test]
fn disjoint_union_is_additive() {
    use FamilySpec::*;
    let specs = [
        Complete { n: 4 },
        Cycle { n: 5 },
        Cycle { n: 6 },
        CompleteSun { n: 4 },
        Friendship { r: 2 },
        Wheel { m: 5 },
        Cone { m: 4, n: 2 },
        CompleteBisplit { x: 1, y: 2, z: 3 },
    ];
    for a in &specs {
        for b in &specs {
            let ga = generate(a).unwrap().graph;
            let gb = generate(b).unwrap().graph;
            let u = ga.disjoint_union(&gb).unwrap();
            assert_eq!(
                sparing_exact(&u).value,
                sparing_exact(&ga).value + sparing_exact(&gb).value,
                "{a} + {b}"
            );
        }
    }
}

#[test]
fn seeded_random_graphs_match_oracle_across_threads() {
    for (i, g) in random_graphs(200, 10, 0xC0FFEE).unwrap().iter().enumerate() {
        let oracle = sparing_bruteforce(g).unwrap();
        assert_eq!(sparing_exact(g), oracle, "graph {i}: {g:?}");
        assert_eq!(
            Solver::new().threads(4).solve(g),
            oracle,
            "graph {i} threaded"
        );
    }
}
