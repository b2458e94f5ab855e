mod common;

use common::MinorPlanarity;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rootminor::gen::{gnp, nonisomorphic_graphs, planar, planar_3conn, random_3conn};
use rootminor::graph::separations_up_to_order;
use rootminor::minors::brute_force_rooted_kt;
use rootminor::planar::{
    apex_graph, embed_with_roots_on_outer_face, is_planar, planarity, Planarity,
};
use rootminor::solver::{spread_out, Spread};
use rootminor::Graph;

fn check_certificate(g: &Graph) -> bool {
    match planarity(g) {
        Planarity::Planar(emb) => {
            emb.validate(g).unwrap();
            true
        }
        Planarity::NonPlanar(w) => {
            w.verify(g).unwrap();
            false
        }
    }
}

#[test]
fn planarity_matches_minor_search() {
    let mut oracle = MinorPlanarity::new();
    for n in 1..=7 {
        for g in nonisomorphic_graphs(n) {
            let got = check_certificate(&g);
            assert_eq!(got, oracle.is_planar(&g), "{:?}", g.edges());
            if n >= 3 && g.m() > 3 * n - 6 {
                assert!(!got);
            }
        }
    }
}

#[test]
fn certificates_on_random_graphs() {
    for seed in 0..300u64 {
        let n = 3 + (seed % 10) as usize;
        let g = gnp(n, 0.2 + 0.05 * (seed % 9) as f64, seed);
        check_certificate(&g);
    }
}

#[test]
fn roots_share_the_outer_face() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for seed in 0..200u64 {
        let n = 4 + (seed % 7) as usize;
        let g = planar(n, seed);
        let mut vs: Vec<usize> = g.vertices().collect();
        vs.shuffle(&mut rng);
        let roots = &vs[..3 + (seed % 2) as usize];
        let apex_ok = is_planar(&apex_graph(&g, roots).unwrap().graph);
        match embed_with_roots_on_outer_face(&g, roots).unwrap() {
            Some(emb) => {
                assert!(apex_ok);
                emb.validate(&g).unwrap();
                let outer = emb.outer_face_vertices();
                assert!(roots.iter().all(|r| outer.contains(r)));
                if g.is_connected() && g.m() > 0 {
                    // One face walk holds every root.
                    let face: Vec<usize> = emb
                        .face_from(emb.outer_darts()[0])
                        .iter()
                        .map(|d| d.0)
                        .collect();
                    assert!(
                        roots.iter().all(|r| face.contains(r)),
                        "{:?} {roots:?}",
                        g.edges()
                    );
                }
            }
            None => assert!(!apex_ok),
        }
    }
}

fn four_subsets(s: &[usize]) -> Vec<[usize; 4]> {
    let m = s.len();
    let mut out = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            for k in j + 1..m {
                for l in k + 1..m {
                    out.push([s[i], s[j], s[k], s[l]]);
                }
            }
        }
    }
    out
}

#[test]
fn four_point_faces_give_a_common_face() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut applied = 0;
    for seed in 0..300u64 {
        let n = 5 + (seed % 6) as usize;
        let g = planar(n, seed);
        let mut vs: Vec<usize> = g.vertices().collect();
        vs.shuffle(&mut rng);
        let s = &vs[..4 + (seed % 3) as usize];
        let all_four = four_subsets(s)
            .iter()
            .all(|q| embed_with_roots_on_outer_face(&g, q).unwrap().is_some());
        if all_four {
            applied += 1;
            assert!(
                is_planar(&apex_graph(&g, s).unwrap().graph),
                "{:?} S={s:?}",
                g.edges()
            );
        }
    }
    assert!(applied > 20, "only {applied} instances met the hypothesis");
}

#[test]
fn spread_minor_free_roots_are_planar() {
    let mut applied = 0;
    let mut separations = 0;
    for seed in 0..300u64 {
        let n = 5 + (seed % 5) as usize;
        let graphs = [planar_3conn(n, seed), random_3conn(n, seed)];
        for g in graphs.into_iter().flatten() {
            for s in common::subsets(n).filter(|s| s.len() >= 4) {
                if spread_out(&g, &s).unwrap() != Spread::Spread
                    || brute_force_rooted_kt(&g, &s, 4, 12).unwrap().is_some()
                {
                    continue;
                }
                applied += 1;
                assert!(
                    is_planar(&apex_graph(&g, &s).unwrap().graph),
                    "{:?} S={s:?}",
                    g.edges()
                );
                for sep in separations_up_to_order(&g, 3).filter(|sep| sep.order() == 3) {
                    for sep in [sep.clone(), sep.swapped()] {
                        if s.iter().filter(|v| sep.a.contains(v)).count() < 3 {
                            continue;
                        }
                        separations += 1;
                        let (h, map) = g.induced(&sep.b_vec()).unwrap();
                        let roots = map.image_of(&sep.separator());
                        assert!(embed_with_roots_on_outer_face(&h, &roots)
                            .unwrap()
                            .is_some());
                    }
                }
            }
        }
    }
    assert!(
        applied > 100 && separations > 20,
        "only {applied} instances, {separations} separations"
    );
}
