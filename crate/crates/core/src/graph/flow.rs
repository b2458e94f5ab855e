//! Menger-style path packings via unit vertex-capacity max flow.
//!
//! Every vertex `v` becomes an arc `in(v) -> out(v)`; every edge `uv` becomes
//! arcs `out(u) -> in(v)` and `out(v) -> in(u)`. Augmentation is BFS over arcs
//! in insertion order, which follows ascending vertex ids, so results are
//! deterministic.

use super::{mark, Graph, Path};
use crate::error::{Error, Result};
use std::collections::VecDeque;

const INF: u32 = u32::MAX / 4;

#[derive(Clone, Debug)]
struct Arc {
    to: usize,
    cap: u32,
    flow: i64,
    rev: usize,
}

struct Network {
    arcs: Vec<Vec<Arc>>,
    source: usize,
    sink: usize,
}

impl Network {
    fn new(nodes: usize, source: usize, sink: usize) -> Self {
        Network {
            arcs: vec![Vec::new(); nodes],
            source,
            sink,
        }
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: u32) {
        let rf = self.arcs[to].len();
        let rt = self.arcs[from].len();
        self.arcs[from].push(Arc {
            to,
            cap,
            flow: 0,
            rev: rf,
        });
        self.arcs[to].push(Arc {
            to: from,
            cap: 0,
            flow: 0,
            rev: rt,
        });
    }

    fn residual(a: &Arc) -> i64 {
        a.cap as i64 - a.flow
    }

    /// Pushes unit augmenting paths until none is left or `limit` is reached.
    fn run(&mut self, limit: usize) -> usize {
        let mut total = 0;
        let nodes = self.arcs.len();
        while total < limit {
            let mut pred: Vec<Option<(usize, usize)>> = vec![None; nodes];
            let mut seen = vec![false; nodes];
            seen[self.source] = true;
            let mut queue = VecDeque::from([self.source]);
            'bfs: while let Some(x) = queue.pop_front() {
                for (i, a) in self.arcs[x].iter().enumerate() {
                    if !seen[a.to] && Self::residual(a) > 0 {
                        seen[a.to] = true;
                        pred[a.to] = Some((x, i));
                        if a.to == self.sink {
                            break 'bfs;
                        }
                        queue.push_back(a.to);
                    }
                }
            }
            if !seen[self.sink] {
                break;
            }
            let mut cur = self.sink;
            while let Some((p, i)) = pred[cur] {
                self.arcs[p][i].flow += 1;
                let rev = self.arcs[p][i].rev;
                self.arcs[cur][rev].flow -= 1;
                cur = p;
            }
            total += 1;
        }
        total
    }

    /// Splits the flow into source-sink node sequences, always following the
    /// first arc that carries flow. Cyclic detours are cut out.
    fn decompose(&mut self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        loop {
            let mut walk = vec![self.source];
            let mut cur = self.source;
            while cur != self.sink {
                let Some(i) = self.arcs[cur].iter().position(|a| a.cap > 0 && a.flow > 0) else {
                    break;
                };
                self.arcs[cur][i].flow -= 1;
                let next = self.arcs[cur][i].to;
                if let Some(pos) = walk.iter().position(|&w| w == next) {
                    walk.truncate(pos + 1);
                } else {
                    walk.push(next);
                }
                cur = next;
            }
            if cur != self.sink {
                return out;
            }
            out.push(walk);
        }
    }
}

/// Vertex-split flow network with per-vertex capacities.
fn split_network(g: &Graph, vertex_cap: impl Fn(usize) -> u32) -> Network {
    let n = g.n();
    let mut net = Network::new(2 * n + 2, 2 * n, 2 * n + 1);
    for v in g.vertices() {
        net.add_arc(2 * v, 2 * v + 1, vertex_cap(v));
    }
    for v in g.vertices() {
        for &w in g.neighbors(v) {
            net.add_arc(2 * v + 1, 2 * w, 1);
        }
    }
    net
}

/// Maps a node walk `s, in(v0), out(v0), in(v1), ..., t` back to vertices.
fn walk_to_vertices(walk: &[usize], n: usize) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::new();
    for &node in walk {
        if node >= 2 * n {
            continue;
        }
        let v = node / 2;
        if out.last() != Some(&v) {
            out.push(v);
        }
    }
    out
}

fn check_set(g: &Graph, set: &[usize]) -> Result<()> {
    g.check_vertices(set)?;
    if set.is_empty() {
        Err(Error::EmptySet)
    } else {
        Ok(())
    }
}

/// Up to `k` pairwise vertex-disjoint `A`-`B` paths.
///
/// The count equals `min(k, max unit-vertex-capacity flow from A to B)`. Each
/// path starts in `A`, ends in `B` and meets `A` and `B` only at its ends; a
/// vertex of `A ∩ B` yields a path of length 0.
pub fn disjoint_paths_between_sets(
    g: &Graph,
    a: &[usize],
    b: &[usize],
    k: usize,
) -> Result<Vec<Path>> {
    check_set(g, a)?;
    check_set(g, b)?;
    let n = g.n();
    let in_a = mark(n, a);
    let in_b = mark(n, b);
    let mut net = split_network(g, |_| 1);
    for v in g.vertices() {
        if in_a[v] {
            net.add_arc(net.source, 2 * v, 1);
        }
        if in_b[v] {
            net.add_arc(2 * v + 1, net.sink, 1);
        }
    }
    net.run(k);
    let mut paths: Vec<Path> = net
        .decompose()
        .iter()
        .map(|w| {
            let p = walk_to_vertices(w, n);
            let start = p.iter().rposition(|&v| in_a[v]).expect("walk starts in A");
            let end = start
                + p[start..]
                    .iter()
                    .position(|&v| in_b[v])
                    .expect("walk ends in B");
            Path(p[start..=end].to_vec())
        })
        .collect();
    paths.sort();
    Ok(paths)
}

/// Up to `k` paths from `v` to `A`, pairwise sharing only `v`, each meeting
/// `A` only at its last vertex.
pub fn fan_paths(g: &Graph, v: usize, a: &[usize], k: usize) -> Result<Vec<Path>> {
    g.check_vertex(v)?;
    check_set(g, a)?;
    if a.contains(&v) {
        return Err(Error::SourceInTarget(v));
    }
    let n = g.n();
    let in_a = mark(n, a);
    let mut net = split_network(g, |w| if w == v { INF } else { 1 });
    net.add_arc(net.source, 2 * v, INF);
    for w in g.vertices() {
        if in_a[w] {
            net.add_arc(2 * w + 1, net.sink, 1);
        }
    }
    net.run(k);
    let mut paths: Vec<Path> = net
        .decompose()
        .iter()
        .map(|w| {
            let p = walk_to_vertices(w, n);
            let end = p.iter().position(|&x| in_a[x]).expect("walk ends in A");
            Path(p[..=end].to_vec())
        })
        .collect();
    paths.sort();
    Ok(paths)
}

/// Up to `k` internally disjoint `s`-`t` paths (`s != t`). A direct edge counts
/// as one path.
pub fn internally_disjoint_paths(g: &Graph, s: usize, t: usize, k: usize) -> Result<Vec<Path>> {
    g.check_vertex(s)?;
    g.check_vertex(t)?;
    if s == t {
        return Err(Error::SourceInTarget(s));
    }
    let n = g.n();
    let mut net = split_network(g, |w| if w == s || w == t { INF } else { 1 });
    net.add_arc(net.source, 2 * s, INF);
    net.add_arc(2 * t + 1, net.sink, INF);
    net.run(k);
    let mut paths: Vec<Path> = net
        .decompose()
        .iter()
        .map(|w| {
            let p = walk_to_vertices(w, n);
            let end = p.iter().position(|&x| x == t).expect("walk ends at t");
            Path(p[..=end].to_vec())
        })
        .collect();
    paths.sort();
    Ok(paths)
}

/// Maximum number of internally disjoint `s`-`t` paths, stopping at `limit`.
pub fn local_connectivity(g: &Graph, s: usize, t: usize, limit: usize) -> usize {
    let mut net = split_network(g, |w| if w == s || w == t { INF } else { 1 });
    net.add_arc(net.source, 2 * s, INF);
    net.add_arc(2 * t + 1, net.sink, INF);
    net.run(limit)
}

/// Vertex connectivity `κ(G)`; with `Some(k)` the search stops as soon as the
/// answer is known to be at least `k`. `κ(K_n) = n - 1`.
pub fn vertex_connectivity(g: &Graph, cap: Option<usize>) -> usize {
    let n = g.n();
    if n <= 1 {
        return 0;
    }
    if !g.is_connected() {
        return 0;
    }
    let limit = cap.unwrap_or(n).min(n - 1);
    let mut best = n - 1;
    for s in g.vertices() {
        for t in s + 1..n {
            if g.has_edge(s, t) {
                continue;
            }
            best = best.min(local_connectivity(g, s, t, best.min(limit)));
            if best == 0 {
                return 0;
            }
        }
    }
    best.min(n - 1)
}

#[cfg(test)]
mod tests {
    use super::super::named::*;
    use super::*;

    fn disjoint(paths: &[Path]) -> bool {
        let mut all: Vec<usize> = paths.iter().flat_map(|p| p.0.clone()).collect();
        let len = all.len();
        all.sort_unstable();
        all.dedup();
        all.len() == len
    }

    #[test]
    fn cycle_gives_two_paths() {
        let g = cycle(6);
        let paths = disjoint_paths_between_sets(&g, &[0], &[3], 2).unwrap();
        // A single source vertex can carry only one unit in the set version.
        assert_eq!(paths.len(), 1);
        let fans = internally_disjoint_paths(&g, 0, 3, 2).unwrap();
        assert_eq!(fans, vec![Path(vec![0, 1, 2, 3]), Path(vec![0, 5, 4, 3])]);
    }

    #[test]
    fn k4_two_sets() {
        let g = complete(4);
        let paths = disjoint_paths_between_sets(&g, &[0, 1], &[2, 3], 2).unwrap();
        assert_eq!(paths.len(), 2);
        assert!(disjoint(&paths));
        for p in &paths {
            assert_eq!(p.len(), 1);
            assert!([0, 1].contains(&p.first()) && [2, 3].contains(&p.last()));
        }
    }

    #[test]
    fn theta_has_three_routes() {
        let g = theta(3);
        let paths = internally_disjoint_paths(&g, 0, 1, 3).unwrap();
        assert_eq!(paths.len(), 3);
        assert_eq!(local_connectivity(&g, 0, 1, 10), 3);
    }

    #[test]
    fn fan_examples() {
        let g = complete(4);
        let fans = fan_paths(&g, 0, &[1, 2, 3], 3).unwrap();
        assert_eq!(
            fans,
            vec![Path(vec![0, 1]), Path(vec![0, 2]), Path(vec![0, 3])]
        );

        let fans = fan_paths(&cycle(5), 0, &[2, 3], 2).unwrap();
        assert_eq!(fans, vec![Path(vec![0, 1, 2]), Path(vec![0, 4, 3])]);

        let fans = fan_paths(&wheel(5), 0, &[1, 3, 5], 3).unwrap();
        assert_eq!(
            fans,
            vec![Path(vec![0, 1]), Path(vec![0, 3]), Path(vec![0, 5])]
        );

        assert_eq!(fan_paths(&g, 0, &[0, 1], 2), Err(Error::SourceInTarget(0)));
    }

    #[test]
    fn set_paths_stop_at_first_target() {
        // 0-1-2-3 with A = {0, 1}, B = {2, 3}: the only path is 1-2.
        let g = path(4);
        let paths = disjoint_paths_between_sets(&g, &[0, 1], &[2, 3], 2).unwrap();
        assert_eq!(paths, vec![Path(vec![1, 2])]);
        let trivial = disjoint_paths_between_sets(&g, &[1], &[1, 3], 2).unwrap();
        assert_eq!(trivial, vec![Path(vec![1])]);
    }

    #[test]
    fn connectivity_values() {
        assert_eq!(vertex_connectivity(&complete(5), None), 4);
        assert_eq!(vertex_connectivity(&cycle(7), None), 2);
        assert_eq!(vertex_connectivity(&wheel(6), None), 3);
        assert_eq!(vertex_connectivity(&petersen(), None), 3);
        assert_eq!(vertex_connectivity(&path(4), None), 1);
        assert_eq!(vertex_connectivity(&Graph::empty(3), None), 0);
    }
}
