//! Path-addition planarity (Demoucron, Malgrange and Pertuiset) on each
//! block, with faces kept as consistently oriented vertex cycles so that a
//! rotation system falls out at the end.

use crate::graph::{blocks, Graph};
use std::collections::{HashSet, VecDeque};

/// Rotation system of a planar embedding of `g`, or `None` if `g` is not
/// planar. `rotation[v]` lists `N(v)` in cyclic order.
pub(crate) fn rotation_system(g: &Graph) -> Option<Vec<Vec<usize>>> {
    let n = g.n();
    if n >= 3 && g.m() > 3 * n - 6 {
        return None;
    }
    let mut rotation = vec![Vec::new(); n];
    for block in blocks(g) {
        if block.len() == 2 {
            rotation[block[0]].push(block[1]);
            rotation[block[1]].push(block[0]);
            continue;
        }
        let (h, _) = g.induced(&block).expect("block vertices are in range");
        let local = embed_biconnected(&h)?;
        // A block's rotation is spliced into the gap after whatever earlier
        // blocks placed at a shared cut vertex.
        for (x, around) in local.into_iter().enumerate() {
            rotation[block[x]].extend(around.into_iter().map(|y| block[y]));
        }
    }
    Some(rotation)
}

enum Fragment {
    Edge(usize, usize),
    Component { vertices: Vec<usize> },
}

struct Embedder<'h> {
    h: &'h Graph,
    placed: Vec<bool>,
    placed_edges: HashSet<(usize, usize)>,
    faces: Vec<Vec<usize>>,
}

fn key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

impl Embedder<'_> {
    fn place_path(&mut self, path: &[usize]) {
        for &v in path {
            self.placed[v] = true;
        }
        for w in path.windows(2) {
            self.placed_edges.insert(key(w[0], w[1]));
        }
    }

    fn fragments(&self) -> Vec<(Fragment, Vec<usize>)> {
        let h = self.h;
        let mut out = Vec::new();
        for (u, v) in h.edges() {
            if self.placed[u] && self.placed[v] && !self.placed_edges.contains(&(u, v)) {
                out.push((Fragment::Edge(u, v), vec![u, v]));
            }
        }
        for comp in h.components_avoiding(&self.placed) {
            let mut attach: Vec<usize> = comp
                .iter()
                .flat_map(|&x| h.neighbors(x).iter().copied())
                .filter(|&y| self.placed[y])
                .collect();
            attach.sort_unstable();
            attach.dedup();
            out.push((Fragment::Component { vertices: comp }, attach));
        }
        out
    }

    /// Path through the fragment between its two smallest attachments.
    fn fragment_path(&self, frag: &Fragment, attach: &[usize]) -> Vec<usize> {
        match *frag {
            Fragment::Edge(u, v) => vec![u, v],
            Fragment::Component { ref vertices } => {
                let (a, b) = (attach[0], attach[1]);
                let h = self.h;
                let mut inside = vec![false; h.n()];
                for &x in vertices {
                    inside[x] = true;
                }
                let mut parent = vec![usize::MAX; h.n()];
                let mut queue = VecDeque::new();
                for &x in h.neighbors(a) {
                    if inside[x] && parent[x] == usize::MAX {
                        parent[x] = a;
                        queue.push_back(x);
                    }
                }
                while let Some(x) = queue.pop_front() {
                    if h.has_edge(x, b) {
                        let mut p = vec![b, x];
                        let mut cur = x;
                        while parent[cur] != a {
                            cur = parent[cur];
                            p.push(cur);
                        }
                        p.push(a);
                        p.reverse();
                        return p;
                    }
                    for &y in h.neighbors(x) {
                        if inside[y] && parent[y] == usize::MAX {
                            parent[y] = x;
                            queue.push_back(y);
                        }
                    }
                }
                unreachable!("fragment component connects its attachments")
            }
        }
    }

    fn split_face(&mut self, fi: usize, path: &[usize]) {
        let face = std::mem::take(&mut self.faces[fi]);
        let a = path[0];
        let b = *path.last().unwrap();
        let i = face.iter().position(|&x| x == a).unwrap();
        let j = face.iter().position(|&x| x == b).unwrap();
        let len = face.len();
        let arc = |from: usize, to: usize| -> Vec<usize> {
            let mut out = vec![face[from]];
            let mut k = from;
            while k != to {
                k = (k + 1) % len;
                out.push(face[k]);
            }
            out
        };
        let interior = &path[1..path.len() - 1];
        let mut first = arc(i, j);
        first.extend(interior.iter().rev());
        let mut second = arc(j, i);
        second.extend(interior.iter());
        self.faces[fi] = first;
        self.faces.push(second);
    }
}

fn find_cycle(h: &Graph) -> Vec<usize> {
    let n = h.n();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    depth[0] = 0;
    let mut queue = VecDeque::from([0]);
    while let Some(x) = queue.pop_front() {
        for &y in h.neighbors(x) {
            if depth[y] == usize::MAX {
                depth[y] = depth[x] + 1;
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    let (mut u, mut v) = h
        .edges()
        .into_iter()
        .find(|&(u, v)| parent[v] != u && parent[u] != v)
        .expect("a 2-connected graph has a cycle");
    let mut left = vec![u];
    let mut right = vec![v];
    while u != v {
        if depth[u] >= depth[v] {
            u = parent[u];
            left.push(u);
        } else {
            v = parent[v];
            right.push(v);
        }
    }
    right.pop();
    left.extend(right.into_iter().rev());
    left
}

/// Embeds a 2-connected graph on at least three vertices.
fn embed_biconnected(h: &Graph) -> Option<Vec<Vec<usize>>> {
    let n = h.n();
    if h.m() > 3 * n - 6 {
        return None;
    }
    let cycle = find_cycle(h);
    let mut emb = Embedder {
        h,
        placed: vec![false; n],
        placed_edges: HashSet::new(),
        faces: Vec::new(),
    };
    let mut closed = cycle.clone();
    closed.push(cycle[0]);
    emb.place_path(&closed);
    emb.faces.push(cycle.clone());
    emb.faces.push(cycle.iter().rev().copied().collect());

    loop {
        let frags = emb.fragments();
        if frags.is_empty() {
            break;
        }
        let mut choice: Option<(usize, usize)> = None;
        for (idx, (_, attach)) in frags.iter().enumerate() {
            let admissible: Vec<usize> = (0..emb.faces.len())
                .filter(|&f| attach.iter().all(|a| emb.faces[f].contains(a)))
                .collect();
            match admissible.len() {
                0 => return None,
                1 => {
                    choice = Some((idx, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((idx, admissible[0]));
                    }
                }
            }
        }
        let (idx, face) = choice.expect("some fragment was examined");
        let (frag, attach) = &frags[idx];
        let path = emb.fragment_path(frag, attach);
        emb.place_path(&path);
        emb.split_face(face, &path);
    }

    // Face walk ... u, v, w ... means w follows u around v.
    let mut succ: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for face in &emb.faces {
        let len = face.len();
        for i in 0..len {
            let u = face[(i + len - 1) % len];
            let v = face[i];
            let w = face[(i + 1) % len];
            succ[v].push((u, w));
        }
    }
    let mut rotation = Vec::with_capacity(n);
    for v in 0..n {
        let start = h.neighbors(v)[0];
        let mut order = vec![start];
        let mut cur = start;
        loop {
            let next = succ[v].iter().find(|&&(u, _)| u == cur).map(|&(_, w)| w)?;
            if next == start {
                break;
            }
            order.push(next);
            cur = next;
            if order.len() > h.degree(v) {
                return None;
            }
        }
        debug_assert_eq!(order.len(), h.degree(v));
        rotation.push(order);
    }
    Some(rotation)
}
