//! Planarity testing with checkable certificates on both sides, plus the
//! apex construction used to force vertices onto a common face.

mod dmp;
mod kuratowski;

pub use kuratowski::{kuratowski_subgraph, KuratowskiKind, KuratowskiWitness};

use crate::error::{Error, Result};
use crate::graph::Graph;
use std::collections::BTreeSet;

/// A directed edge `(tail, head)`.
pub type Dart = (usize, usize);

/// Rotation system plus a marked outer face. Faces are traced by the rule
/// that dart `(u, v)` is followed by `(v, w)` where `w` succeeds `u` in the
/// rotation at `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CombinatorialEmbedding {
    rotation: Vec<Vec<usize>>,
    /// One dart of the outer face per component that has edges.
    outer: Vec<Dart>,
}

impl CombinatorialEmbedding {
    /// Wraps a rotation system, marking the face of `(v, rotation[v][0])`
    /// for the smallest vertex `v` of each component as outer.
    pub fn from_rotation(g: &Graph, rotation: Vec<Vec<usize>>) -> Self {
        let outer = g
            .components()
            .into_iter()
            .filter(|c| g.degree(c[0]) > 0)
            .map(|c| (c[0], rotation[c[0]][0]))
            .collect();
        CombinatorialEmbedding { rotation, outer }
    }

    /// Unchecked constructor; run [`validate`](Self::validate) before use.
    pub fn from_parts(rotation: Vec<Vec<usize>>, outer: Vec<Dart>) -> Self {
        CombinatorialEmbedding { rotation, outer }
    }

    pub fn rotation(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub fn outer_darts(&self) -> &[Dart] {
        &self.outer
    }

    /// Neighbor following `u` in the rotation at `v`.
    pub fn successor(&self, v: usize, u: usize) -> usize {
        let around = &self.rotation[v];
        let i = around
            .iter()
            .position(|&x| x == u)
            .expect("u is a neighbor of v");
        around[(i + 1) % around.len()]
    }

    /// Darts of the face containing `start`, in walk order.
    pub fn face_from(&self, start: Dart) -> Vec<Dart> {
        let mut walk = vec![start];
        let (mut u, mut v) = start;
        loop {
            let w = self.successor(v, u);
            (u, v) = (v, w);
            if (u, v) == start {
                return walk;
            }
            walk.push((u, v));
        }
    }

    /// All faces, each starting at its smallest dart, ordered by that dart.
    pub fn faces(&self) -> Vec<Vec<Dart>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for (u, around) in self.rotation.iter().enumerate() {
            for &v in around {
                if seen.contains(&(u, v)) {
                    continue;
                }
                let face = self.face_from((u, v));
                seen.extend(face.iter().copied());
                out.push(face);
            }
        }
        out
    }

    /// Vertices on the outer face, including isolated vertices, ascending.
    pub fn outer_face_vertices(&self) -> Vec<usize> {
        let mut set: BTreeSet<usize> = self
            .rotation
            .iter()
            .enumerate()
            .filter(|(_, r)| r.is_empty())
            .map(|(v, _)| v)
            .collect();
        for &d in &self.outer {
            set.extend(self.face_from(d).into_iter().map(|(u, _)| u));
        }
        set.into_iter().collect()
    }

    /// Checks that the rotation matches `g`, that every component satisfies
    /// Euler's formula, and that the outer darts exist and are one per
    /// component.
    pub fn validate(&self, g: &Graph) -> std::result::Result<(), String> {
        let n = g.n();
        if self.rotation.len() != n {
            return Err("rotation has the wrong number of vertices".into());
        }
        for v in g.vertices() {
            let mut around = self.rotation[v].clone();
            around.sort_unstable();
            if around != g.neighbors(v) {
                return Err(format!(
                    "rotation at {v} is not a permutation of its neighbors"
                ));
            }
        }
        let comps = g.components();
        let mut comp_of = vec![0; n];
        for (i, c) in comps.iter().enumerate() {
            for &v in c {
                comp_of[v] = i;
            }
        }
        let mut faces = vec![0usize; comps.len()];
        for face in self.faces() {
            faces[comp_of[face[0].0]] += 1;
        }
        for (i, c) in comps.iter().enumerate() {
            let edges: usize = c.iter().map(|&v| g.degree(v)).sum::<usize>() / 2;
            if edges == 0 {
                continue;
            }
            if c.len() + faces[i] != edges + 2 {
                return Err(format!(
                    "Euler's formula fails on the component of {}",
                    c[0]
                ));
            }
        }
        let mut outer_comps = BTreeSet::new();
        for &(u, v) in &self.outer {
            if u >= n || !g.has_edge(u, v) {
                return Err(format!("outer dart {u}->{v} is not an edge"));
            }
            if !outer_comps.insert(comp_of[u]) {
                return Err(format!("two outer darts in the component of {u}"));
            }
        }
        Ok(())
    }
}

pub enum Planarity {
    Planar(CombinatorialEmbedding),
    NonPlanar(KuratowskiWitness),
}

pub fn planarity(g: &Graph) -> Planarity {
    match dmp::rotation_system(g) {
        Some(rot) => Planarity::Planar(CombinatorialEmbedding::from_rotation(g, rot)),
        None => {
            Planarity::NonPlanar(kuratowski_subgraph(g).expect("non-planar graph has a witness"))
        }
    }
}

pub fn planar_embedding(g: &Graph) -> Option<CombinatorialEmbedding> {
    dmp::rotation_system(g).map(|rot| CombinatorialEmbedding::from_rotation(g, rot))
}

pub fn is_planar(g: &Graph) -> bool {
    dmp::rotation_system(g).is_some()
}

/// `g` plus one vertex (id `g.n()`) adjacent exactly to `roots`.
#[derive(Clone, Debug)]
pub struct ApexGraph {
    pub base: Graph,
    pub apex: usize,
    pub roots: Vec<usize>,
    pub graph: Graph,
}

pub fn apex_graph(g: &Graph, roots: &[usize]) -> Result<ApexGraph> {
    if roots.is_empty() {
        return Err(Error::EmptySet);
    }
    g.check_vertices(roots)?;
    let mut roots = roots.to_vec();
    roots.sort_unstable();
    roots.dedup();
    let graph = g.with_vertex_added(&roots)?;
    Ok(ApexGraph {
        base: g.clone(),
        apex: g.n(),
        roots,
        graph,
    })
}

/// An embedding of `g` whose outer face holds every root, found by
/// embedding the apex graph and deleting the apex. `None` exactly when the
/// apex graph is non-planar.
pub fn embed_with_roots_on_outer_face(
    g: &Graph,
    roots: &[usize],
) -> Result<Option<CombinatorialEmbedding>> {
    if !(3..=4).contains(&roots.len()) {
        return Err(Error::RootCount {
            expected: "3 or 4",
            got: roots.len(),
        });
    }
    g.check_vertices(roots)?;
    let distinct: BTreeSet<usize> = roots.iter().copied().collect();
    if distinct.len() != roots.len() {
        return Err(Error::RootsNotDistinct);
    }
    let apex = apex_graph(g, roots)?;
    let Some(full) = dmp::rotation_system(&apex.graph) else {
        return Ok(None);
    };
    let x = apex.apex;
    let apex_emb = CombinatorialEmbedding {
        rotation: full,
        outer: Vec::new(),
    };
    let mut outer: Vec<Dart> = Vec::new();
    for &s in &apex.roots {
        if g.degree(s) == 0 {
            continue;
        }
        // The face that held the apex continues from s to the neighbor
        // after x.
        outer.push((s, apex_emb.successor(s, x)));
    }
    let mut rotation = apex_emb.rotation;
    rotation.pop();
    for around in rotation.iter_mut() {
        around.retain(|&y| y != x);
    }
    let mut emb = CombinatorialEmbedding {
        rotation,
        outer: Vec::new(),
    };
    // Roots in one component now share a face; keep one dart per component.
    let comps = g.components();
    let mut comp_of = vec![0; g.n()];
    for (i, c) in comps.iter().enumerate() {
        for &v in c {
            comp_of[v] = i;
        }
    }
    let mut taken = BTreeSet::new();
    for d in outer {
        if taken.insert(comp_of[d.0]) {
            emb.outer.push(d);
        }
    }
    for c in &comps {
        if g.degree(c[0]) > 0 && !taken.contains(&comp_of[c[0]]) {
            emb.outer.push((c[0], emb.rotation[c[0]][0]));
        }
    }
    Ok(Some(emb))
}

/// First pair `{u, v}` (lexicographic) whose removal leaves at least three
/// components, together with those components.
pub fn two_cut_three_components(g: &Graph) -> Option<(usize, usize, Vec<Vec<usize>>)> {
    let n = g.n();
    for u in 0..n {
        for v in u + 1..n {
            let comps = g.components_avoiding(&crate::graph::mark(n, &[u, v]));
            if comps.len() >= 3 {
                return Some((u, v, comps));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn k4_has_four_faces() {
        let g = complete(4);
        let emb = planar_embedding(&g).unwrap();
        assert_eq!(emb.faces().len(), 4);
        assert_eq!(emb.validate(&g), Ok(()));
    }

    #[test]
    fn non_planar_witnesses() {
        match planarity(&complete(5)) {
            Planarity::NonPlanar(w) => assert_eq!(w.kind, KuratowskiKind::K5),
            Planarity::Planar(_) => panic!("K5 is not planar"),
        }
        match planarity(&complete_bipartite(3, 3)) {
            Planarity::NonPlanar(w) => assert_eq!(w.kind, KuratowskiKind::K33),
            Planarity::Planar(_) => panic!("K3,3 is not planar"),
        }
    }

    #[test]
    fn apex_examples() {
        let a = apex_graph(&cycle(4), &[0, 1, 2, 3]).unwrap();
        assert_eq!(a.apex, 4);
        assert_eq!(a.graph.m(), 8);
        assert!(a.graph.neighbors(4) == [0, 1, 2, 3]);
        let a = apex_graph(&complete(4), &[0, 1, 2, 3]).unwrap();
        assert_eq!(a.graph.edges(), complete(5).edges());
        let a = apex_graph(&path(3), &[0, 2]).unwrap();
        assert_eq!(a.graph.edges(), vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
        assert!(matches!(apex_graph(&path(3), &[]), Err(Error::EmptySet)));
    }

    #[test]
    fn roots_on_outer_face() {
        let c4 = cycle(4);
        let emb = embed_with_roots_on_outer_face(&c4, &[0, 1, 2, 3])
            .unwrap()
            .unwrap();
        assert_eq!(emb.validate(&c4), Ok(()));
        assert_eq!(emb.outer_face_vertices(), vec![0, 1, 2, 3]);
        assert!(embed_with_roots_on_outer_face(&complete(4), &[0, 1, 2, 3])
            .unwrap()
            .is_none());

        let k4e = Graph::from_edges(4, &[(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let emb = embed_with_roots_on_outer_face(&k4e, &[0, 1, 2, 3])
            .unwrap()
            .unwrap();
        assert_eq!(emb.validate(&k4e), Ok(()));
        assert_eq!(emb.outer_face_vertices(), vec![0, 1, 2, 3]);

        assert!(embed_with_roots_on_outer_face(&c4, &[0, 1]).is_err());
        assert!(embed_with_roots_on_outer_face(&c4, &[0, 1, 1]).is_err());
    }

    #[test]
    fn two_cuts() {
        let (u, v, comps) = two_cut_three_components(&theta(3)).unwrap();
        assert_eq!((u, v), (0, 1));
        assert_eq!(comps, vec![vec![2], vec![3], vec![4]]);
        assert!(two_cut_three_components(&complete(4)).is_none());
        assert!(two_cut_three_components(&wheel(5)).is_none());
    }
}
