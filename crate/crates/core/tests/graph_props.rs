mod common;

use common::{brute_k_connected, fan_flow, naive_separations, set_flow};
use proptest::prelude::*;
use rootminor::gen::{gnp, nonisomorphic_graphs};
use rootminor::graph::{disjoint_paths_between_sets, fan_paths, separations_up_to_order};
use rootminor::{Graph, Path};
use std::collections::BTreeSet;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let len = pairs.len();
        proptest::collection::vec(any::<bool>(), len).prop_map(move |keep| {
            let edges: Vec<_> = pairs
                .iter()
                .zip(&keep)
                .filter(|(_, &k)| k)
                .map(|(&e, _)| e)
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn assert_path_in(g: &Graph, p: &Path) {
    for w in p.vertices().windows(2) {
        assert!(g.has_edge(w[0], w[1]), "{:?} is not a path", p.vertices());
    }
    let distinct: BTreeSet<_> = p.vertices().iter().collect();
    assert_eq!(
        distinct.len(),
        p.vertices().len(),
        "{:?} repeats a vertex",
        p.vertices()
    );
}

#[test]
fn k_connectivity_matches_brute_force() {
    for n in 1..=7 {
        for g in nonisomorphic_graphs(n) {
            for k in 1..=4 {
                assert_eq!(
                    g.is_k_connected(k),
                    brute_k_connected(&g, k),
                    "{:?} k={k}",
                    g.edges()
                );
            }
        }
    }
}

#[test]
fn separations_match_naive_enumeration() {
    for n in 2..=6 {
        for g in nonisomorphic_graphs(n) {
            for max in 0..=3 {
                let got: Vec<_> = separations_up_to_order(&g, max).collect();
                for s in &got {
                    s.validate(&g).unwrap();
                }
                let set: BTreeSet<_> = got.iter().map(|s| (s.a_vec(), s.b_vec())).collect();
                assert_eq!(set.len(), got.len(), "duplicates for {:?}", g.edges());
                assert_eq!(set, naive_separations(&g, max), "{:?} max={max}", g.edges());
                let keys: Vec<_> = got.iter().map(|s| (s.order(), s.separator())).collect();
                assert!(
                    keys.windows(2).all(|w| w[0] <= w[1]),
                    "not in canonical order"
                );
            }
        }
    }
}

#[test]
fn menger_counts_match_flow() {
    for seed in 0..400u64 {
        let n = 2 + (seed % 11) as usize;
        let g = gnp(n, 0.15 + 0.05 * (seed % 7) as f64, seed);
        let a: Vec<usize> = (0..n)
            .filter(|v| (v + seed as usize).is_multiple_of(3))
            .collect();
        let b: Vec<usize> = (0..n)
            .filter(|v| (v * 7 + seed as usize) % 4 == 1)
            .collect();
        if a.is_empty() || b.is_empty() {
            continue;
        }
        let paths = disjoint_paths_between_sets(&g, &a, &b, n).unwrap();
        assert_eq!(
            paths.len(),
            set_flow(&g, &a, &b),
            "{:?} A={a:?} B={b:?}",
            g.edges()
        );
        let mut used = BTreeSet::new();
        for p in &paths {
            assert_path_in(&g, p);
            assert!(a.contains(&p.first()) && b.contains(&p.last()));
            for &v in p.vertices() {
                assert!(used.insert(v), "paths share {v}");
            }
        }
        let v = (seed as usize) % n;
        let targets: Vec<usize> = a.iter().copied().filter(|&x| x != v).collect();
        if targets.is_empty() {
            continue;
        }
        let fan = fan_paths(&g, v, &targets, n).unwrap();
        assert_eq!(fan.len(), fan_flow(&g, v, &targets));
        let mut used = BTreeSet::new();
        for p in &fan {
            assert_path_in(&g, p);
            assert_eq!(p.first(), v);
            assert!(targets.contains(&p.last()));
            assert!(p.vertices()[..p.vertices().len() - 1]
                .iter()
                .all(|x| !targets.contains(x)));
            for &x in &p.vertices()[1..] {
                assert!(used.insert(x));
            }
        }
    }
}

#[test]
fn path_count_is_capped_by_k() {
    let g = rootminor::graph::named::complete(6);
    let paths = disjoint_paths_between_sets(&g, &[0, 1, 2], &[3, 4, 5], 2).unwrap();
    assert_eq!(paths.len(), 2);
}

proptest! {
    #[test]
    fn identify_drops_one_vertex(g in arb_graph(9), u in 0usize..9, v in 0usize..9) {
        prop_assume!(u < g.n() && v < g.n() && u != v);
        let (h, map) = g.identify_vertices(u, v).unwrap();
        prop_assert_eq!(h.n(), g.n() - 1);
        prop_assert!(h.vertices().all(|x| !h.neighbors(x).contains(&x)));
        prop_assert_eq!(map.new_id(u), map.new_id(v));
        for (a, b) in g.edges() {
            let (x, y) = (map.new_id(a).unwrap(), map.new_id(b).unwrap());
            prop_assert!(x == y || h.has_edge(x, y));
        }
    }

    #[test]
    fn induced_keeps_exactly_inner_edges(g in arb_graph(9), mask in any::<u16>()) {
        let keep: Vec<usize> = g.vertices().filter(|&v| mask >> v & 1 == 1).collect();
        let (h, map) = g.induced(&keep).unwrap();
        prop_assert_eq!(h.n(), keep.len());
        let lifted: BTreeSet<(usize, usize)> = h
            .edges()
            .into_iter()
            .map(|(a, b)| (map.preimage(a)[0], map.preimage(b)[0]))
            .collect();
        let inner: BTreeSet<(usize, usize)> =
            g.edges().into_iter().filter(|(a, b)| keep.contains(a) && keep.contains(b)).collect();
        prop_assert_eq!(lifted, inner);
    }

    #[test]
    fn connectivity_is_monotone_in_k(g in arb_graph(8)) {
        let ks: Vec<bool> = (1..=5).map(|k| g.is_k_connected(k)).collect();
        prop_assert!(ks.windows(2).all(|w| w[0] || !w[1]));
    }
}
