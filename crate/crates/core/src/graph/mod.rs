//! Immutable simple undirected graphs over dense ids `0..n`.
//!
//! Derived graphs (induced subgraphs, identifications, vertex deletions) never
//! mutate their parent; they come with an [`IdMap`] so that certificates found
//! in the derived graph can be translated back.

mod blocks;
mod flow;
pub mod named;
mod separation;

pub use blocks::{articulation_points, blocks};
pub use flow::{
    disjoint_paths_between_sets, fan_paths, internally_disjoint_paths, local_connectivity,
    vertex_connectivity,
};
pub use separation::{separations_up_to_order, Separation, Separations};

use crate::error::{Error, Result};
use std::collections::VecDeque;

/// Simple undirected graph. Neighbor lists are sorted and duplicate free.
///
/// For `n <= 64` a bitmask per vertex is kept alongside the lists so that
/// adjacency tests are a single AND.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    masks: Option<Vec<u64>>,
    m: usize,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self::from_adjacency(vec![Vec::new(); n])
    }

    /// Builds a graph from an edge list. Repeated edges collapse; self-loops and
    /// out-of-range ids are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Self::from_adjacency(adj))
    }

    // Lists must already be sorted, deduplicated and symmetric.
    fn from_adjacency(adj: Vec<Vec<usize>>) -> Self {
        let n = adj.len();
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        let masks = (n <= 64).then(|| {
            adj.iter()
                .map(|list| list.iter().fold(0u64, |acc, &w| acc | (1u64 << w)))
                .collect()
        });
        Graph { adj, masks, m }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Bitmask of `N(v)`, available when `n <= 64`.
    pub fn neighbor_mask(&self, v: usize) -> Option<u64> {
        self.masks.as_ref().map(|m| m[v])
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        match &self.masks {
            Some(masks) => u < masks.len() && v < 64 && masks[u] >> v & 1 == 1,
            None => u < self.n() && self.adj[u].binary_search(&v).is_ok(),
        }
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for (u, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }

    pub fn check_vertices(&self, vs: &[usize]) -> Result<()> {
        vs.iter().try_for_each(|&v| self.check_vertex(v))
    }

    /// Same vertex ids with the given extra edges.
    pub fn with_edges_added(&self, extra: &[(usize, usize)]) -> Result<Self> {
        let mut edges = self.edges();
        edges.extend_from_slice(extra);
        Self::from_edges(self.n(), &edges)
    }

    /// Adds a new vertex (id `n`) adjacent to `nbrs`.
    pub fn with_vertex_added(&self, nbrs: &[usize]) -> Result<Self> {
        self.check_vertices(nbrs)?;
        let x = self.n();
        let mut edges = self.edges();
        edges.extend(nbrs.iter().map(|&s| (s, x)));
        Self::from_edges(x + 1, &edges)
    }

    /// Graph on `new_n` vertices with an edge `to_new[u]-to_new[v]` for every
    /// edge `uv` whose endpoints stay distinct. Loops are dropped and parallel
    /// edges collapse.
    pub fn quotient(&self, to_new: &[Option<usize>], new_n: usize) -> Self {
        let mut adj = vec![Vec::new(); new_n];
        for (u, v) in self.edges() {
            if let (Some(a), Some(b)) = (to_new[u], to_new[v]) {
                if a != b {
                    adj[a].push(b);
                    adj[b].push(a);
                }
            }
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Self::from_adjacency(adj)
    }

    /// Induced subgraph on `keep` (any order, duplicates ignored). New ids follow
    /// the ascending order of the kept vertices.
    pub fn induced(&self, keep: &[usize]) -> Result<(Self, IdMap)> {
        self.check_vertices(keep)?;
        let mut sorted = keep.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut to_new = vec![None; self.n()];
        for (i, &v) in sorted.iter().enumerate() {
            to_new[v] = Some(i);
        }
        let g = self.quotient(&to_new, sorted.len());
        Ok((g, IdMap::from_to_new(to_new, sorted.len())))
    }

    pub fn without_vertices(&self, drop: &[usize]) -> Result<(Self, IdMap)> {
        self.check_vertices(drop)?;
        let keep: Vec<usize> = self.vertices().filter(|v| !drop.contains(v)).collect();
        self.induced(&keep)
    }

    /// Merges `u` and `v` into one vertex adjacent to `N(u) ∪ N(v) \ {u, v}`.
    /// The merged vertex takes the slot of `min(u, v)`; ids above `max(u, v)`
    /// shift down by one.
    pub fn identify_vertices(&self, u: usize, v: usize) -> Result<(Self, IdMap)> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::IdentifySame(u));
        }
        self.identify_set(&[u, v])
    }

    /// Merges every vertex of `class` (at least one) into a single vertex placed
    /// at the slot of the smallest member.
    pub fn identify_set(&self, class: &[usize]) -> Result<(Self, IdMap)> {
        self.check_vertices(class)?;
        let rep = *class.iter().min().ok_or(Error::EmptySet)?;
        let mut to_new = vec![None; self.n()];
        let mut next = 0;
        for w in self.vertices() {
            if class.contains(&w) && w != rep {
                continue;
            }
            to_new[w] = Some(next);
            next += 1;
        }
        for &w in class {
            to_new[w] = to_new[rep];
        }
        let g = self.quotient(&to_new, next);
        Ok((g, IdMap::from_to_new(to_new, next)))
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_avoiding(&vec![false; self.n()])
    }

    /// Components of `G - X` where `removed[v]` marks `X`.
    pub fn components_avoiding(&self, removed: &[bool]) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = removed.to_vec();
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            queue.push_back(start);
            let mut comp = Vec::new();
            while let Some(x) = queue.pop_front() {
                comp.push(x);
                for &y in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        queue.push_back(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// `true` iff `|V| > k` and no separation of order `< k` exists.
    pub fn is_k_connected(&self, k: usize) -> bool {
        if self.n() <= k {
            return false;
        }
        match k {
            0 => true,
            _ => vertex_connectivity(self, Some(k)) >= k,
        }
    }

    /// Whether `set` induces a connected subgraph (the empty set does not).
    pub fn is_connected_set(&self, set: &[usize]) -> bool {
        let Some(&start) = set.first() else {
            return false;
        };
        let mut inside = vec![false; self.n()];
        for &v in set {
            if v >= self.n() {
                return false;
            }
            inside[v] = true;
        }
        let mut seen = vec![false; self.n()];
        seen[start] = true;
        let mut stack = vec![start];
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for &y in &self.adj[x] {
                if inside[y] && !seen[y] {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        let mut distinct = set.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        count == distinct.len()
    }

    /// Whether some edge joins `x` and `y`.
    pub fn sets_adjacent(&self, x: &[usize], y: &[usize]) -> bool {
        x.iter()
            .any(|&u| y.iter().any(|&v| u != v && self.has_edge(u, v)))
    }

    /// Shortest path (fewest edges) from any vertex of `from` to any vertex of
    /// `to` whose interior avoids `blocked`. Ties break towards smaller ids.
    pub fn shortest_path_between(
        &self,
        from: &[usize],
        to: &[usize],
        blocked: &[bool],
    ) -> Option<Path> {
        let n = self.n();
        let mut target = vec![false; n];
        for &t in to {
            target[t] = true;
        }
        let mut parent = vec![usize::MAX; n];
        let mut seen = vec![false; n];
        let mut queue = VecDeque::new();
        let mut starts = from.to_vec();
        starts.sort_unstable();
        starts.dedup();
        for &s in &starts {
            if target[s] {
                return Some(Path(vec![s]));
            }
            seen[s] = true;
            queue.push_back(s);
        }
        while let Some(x) = queue.pop_front() {
            for &y in &self.adj[x] {
                if seen[y] {
                    continue;
                }
                if target[y] {
                    let mut p = vec![y, x];
                    let mut cur = x;
                    while parent[cur] != usize::MAX {
                        cur = parent[cur];
                        p.push(cur);
                    }
                    p.reverse();
                    return Some(Path(p));
                }
                if blocked[y] {
                    continue;
                }
                seen[y] = true;
                parent[y] = x;
                queue.push_back(y);
            }
        }
        None
    }
}

/// Translation between the ids of a parent graph and a derived graph.
///
/// Several parent vertices may share one new id (identification), and parent
/// vertices may have no image at all (deletion).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdMap {
    to_new: Vec<Option<usize>>,
    preimages: Vec<Vec<usize>>,
}

impl IdMap {
    pub fn from_to_new(to_new: Vec<Option<usize>>, new_n: usize) -> Self {
        let mut preimages = vec![Vec::new(); new_n];
        for (old, img) in to_new.iter().enumerate() {
            if let Some(i) = img {
                preimages[*i].push(old);
            }
        }
        IdMap { to_new, preimages }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_to_new((0..n).map(Some).collect(), n)
    }

    pub fn new_id(&self, old: usize) -> Option<usize> {
        self.to_new.get(old).copied().flatten()
    }

    /// Parent vertices mapped onto `new` (sorted).
    pub fn preimage(&self, new: usize) -> &[usize] {
        &self.preimages[new]
    }

    pub fn old_len(&self) -> usize {
        self.to_new.len()
    }

    pub fn new_len(&self) -> usize {
        self.preimages.len()
    }

    /// Maps a parent vertex set into the derived graph, dropping deleted
    /// vertices and merging duplicates.
    pub fn image_of(&self, old: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = old.iter().filter_map(|&v| self.new_id(v)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &IdMap) -> IdMap {
        let to_new = self
            .to_new
            .iter()
            .map(|img| img.and_then(|i| next.new_id(i)))
            .collect();
        IdMap::from_to_new(to_new, next.new_len())
    }
}

/// A path given by its vertex sequence; a single vertex is a path of length 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path(pub Vec<usize>);

impl Path {
    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn first(&self) -> usize {
        self.0[0]
    }

    pub fn last(&self) -> usize {
        self.0[self.0.len() - 1]
    }

    pub fn len(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Non-empty, repetition free and every consecutive pair adjacent in `g`.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        if self.0.is_empty() || self.0.iter().any(|&v| v >= g.n()) {
            return false;
        }
        let mut sorted = self.0.clone();
        sorted.sort_unstable();
        sorted.dedup();
        sorted.len() == self.0.len() && self.0.windows(2).all(|w| g.has_edge(w[0], w[1]))
    }
}

/// Indicator vector of `set` over `[0, n)`.
pub(crate) fn mark(n: usize, set: &[usize]) -> Vec<bool> {
    let mut out = vec![false; n];
    for &v in set {
        out[v] = true;
    }
    out
}
