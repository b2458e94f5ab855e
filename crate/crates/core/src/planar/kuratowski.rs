use super::dmp::rotation_system;
use crate::graph::Graph;
use std::collections::BTreeSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KuratowskiKind {
    K5,
    K33,
}

/// A subgraph of the input that subdivides `K5` or `K3,3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KuratowskiWitness {
    pub kind: KuratowskiKind,
    /// Vertices of degree at least three in the subgraph, ascending.
    pub branch_vertices: Vec<usize>,
    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub edges: Vec<(usize, usize)>,
}

/// Finds an edge-minimal non-planar subgraph, which is always a Kuratowski
/// subdivision. Returns `None` when `g` is planar.
pub fn kuratowski_subgraph(g: &Graph) -> Option<KuratowskiWitness> {
    if rotation_system(g).is_some() {
        return None;
    }
    let n = g.n();
    let mut keep = g.edges();
    let mut i = 0;
    while i < keep.len() {
        let mut trial = keep.clone();
        trial.remove(i);
        let h = Graph::from_edges(n, &trial).expect("subset of valid edges");
        if rotation_system(&h).is_none() {
            keep = trial;
        } else {
            i += 1;
        }
    }
    let h = Graph::from_edges(n, &keep).expect("subset of valid edges");
    let branch_vertices: Vec<usize> = h.vertices().filter(|&v| h.degree(v) >= 3).collect();
    let kind = if branch_vertices.len() == 5 {
        KuratowskiKind::K5
    } else {
        KuratowskiKind::K33
    };
    let w = KuratowskiWitness {
        kind,
        branch_vertices,
        edges: keep,
    };
    debug_assert_eq!(w.verify(g), Ok(()));
    Some(w)
}

impl KuratowskiWitness {
    /// Structural check: the edges lie in `g` and, after suppressing
    /// degree-2 vertices, form exactly `K5` or `K3,3` as claimed.
    pub fn verify(&self, g: &Graph) -> Result<(), String> {
        let n = g.n();
        let mut seen = BTreeSet::new();
        for &(u, v) in &self.edges {
            if u >= n || v >= n || !g.has_edge(u, v) {
                return Err(format!("edge {u}-{v} is not in the graph"));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(format!("edge {u}-{v} repeated"));
            }
        }
        let h = Graph::from_edges(n, &self.edges).map_err(|e| e.to_string())?;
        let branch: Vec<usize> = h.vertices().filter(|&v| h.degree(v) >= 3).collect();
        if branch != self.branch_vertices {
            return Err("branch vertices do not match the subgraph".into());
        }
        let (want_count, want_degree) = match self.kind {
            KuratowskiKind::K5 => (5, 4),
            KuratowskiKind::K33 => (6, 3),
        };
        if branch.len() != want_count || branch.iter().any(|&b| h.degree(b) != want_degree) {
            return Err(format!(
                "expected {want_count} branch vertices of degree {want_degree}"
            ));
        }
        if let Some(v) = h.vertices().find(|&v| h.degree(v) == 1) {
            return Err(format!("vertex {v} has degree 1"));
        }

        let is_branch = crate::graph::mark(n, &branch);
        let mut visited = vec![false; n];
        let mut links = BTreeSet::new();
        for &b in &branch {
            for &first in h.neighbors(b) {
                let (mut prev, mut cur) = (b, first);
                while !is_branch[cur] {
                    visited[cur] = true;
                    let next = *h.neighbors(cur).iter().find(|&&x| x != prev).unwrap();
                    prev = cur;
                    cur = next;
                }
                if cur == b {
                    return Err(format!("loop at branch vertex {b}"));
                }
                if b < cur && !links.insert((b, cur)) {
                    return Err(format!("parallel threads between {b} and {cur}"));
                }
            }
        }
        if let Some(v) = h.vertices().find(|&v| h.degree(v) == 2 && !visited[v]) {
            return Err(format!("vertex {v} lies on a stray cycle"));
        }
        match self.kind {
            KuratowskiKind::K5 => {
                if links.len() != 10 {
                    return Err("threads do not form K5".into());
                }
            }
            KuratowskiKind::K33 => {
                // 9 links, 3-regular, and the side of branch[0] is independent.
                if links.len() != 9 {
                    return Err("threads do not form K3,3".into());
                }
                let linked = |x: usize, y: usize| links.contains(&(x.min(y), x.max(y)));
                let side: Vec<usize> = branch
                    .iter()
                    .copied()
                    .filter(|&x| x == branch[0] || !linked(branch[0], x))
                    .collect();
                if side.len() != 3
                    || side
                        .iter()
                        .any(|&x| side.iter().any(|&y| x != y && linked(x, y)))
                {
                    return Err("threads do not form K3,3".into());
                }
            }
        }
        Ok(())
    }

    pub fn is_valid(&self, g: &Graph) -> bool {
        self.verify(g).is_ok()
    }
}
