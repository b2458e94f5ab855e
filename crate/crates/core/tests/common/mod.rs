//! Reference implementations used only by tests. They share no code with
//! the library beyond the `Graph` accessors.
#![allow(clippy::needless_range_loop)]
#![allow(dead_code)]

use rootminor::Graph;
use std::collections::{BTreeSet, HashMap, VecDeque};

/// Unit vertex capacity max-flow by repeated BFS augmentation on a dense
/// residual matrix. Node `2v` is `v_in`, `2v + 1` is `v_out`; the source and
/// sink are the last two nodes.
pub struct DenseFlow {
    cap: Vec<Vec<i64>>,
    s: usize,
    t: usize,
}

impl DenseFlow {
    pub fn new(g: &Graph, vertex_cap: impl Fn(usize) -> i64) -> Self {
        let n = g.n();
        let size = 2 * n + 2;
        let mut cap = vec![vec![0i64; size]; size];
        for v in 0..n {
            cap[2 * v][2 * v + 1] = vertex_cap(v);
            for &w in g.neighbors(v) {
                cap[2 * v + 1][2 * w] = 1 << 20;
            }
        }
        DenseFlow {
            cap,
            s: 2 * n,
            t: 2 * n + 1,
        }
    }

    pub fn source_to(&mut self, v: usize, c: i64) {
        self.cap[self.s][2 * v] += c;
    }

    pub fn link_sink(&mut self, v: usize, c: i64) {
        self.cap[2 * v + 1][self.t] += c;
    }

    pub fn max_flow(mut self) -> i64 {
        let size = self.cap.len();
        let mut total = 0;
        loop {
            let mut prev = vec![usize::MAX; size];
            prev[self.s] = self.s;
            let mut q = VecDeque::from([self.s]);
            while let Some(x) = q.pop_front() {
                for y in 0..size {
                    if prev[y] == usize::MAX && self.cap[x][y] > 0 {
                        prev[y] = x;
                        q.push_back(y);
                    }
                }
            }
            if prev[self.t] == usize::MAX {
                return total;
            }
            let mut bottleneck = i64::MAX;
            let mut y = self.t;
            while y != self.s {
                bottleneck = bottleneck.min(self.cap[prev[y]][y]);
                y = prev[y];
            }
            let mut y = self.t;
            while y != self.s {
                self.cap[prev[y]][y] -= bottleneck;
                self.cap[y][prev[y]] += bottleneck;
                y = prev[y];
            }
            total += bottleneck;
        }
    }
}

/// Maximum number of vertex-disjoint `A`-`B` paths.
pub fn set_flow(g: &Graph, a: &[usize], b: &[usize]) -> usize {
    let mut f = DenseFlow::new(g, |_| 1);
    for &v in a {
        f.source_to(v, 1);
    }
    for &v in b {
        f.link_sink(v, 1);
    }
    f.max_flow() as usize
}

/// Maximum number of `v`-`A` paths sharing only `v`.
pub fn fan_flow(g: &Graph, v: usize, a: &[usize]) -> usize {
    let mut f = DenseFlow::new(g, |w| if w == v { 1 << 20 } else { 1 });
    f.source_to(v, 1 << 20);
    for &x in a {
        f.link_sink(x, 1);
    }
    f.max_flow() as usize
}

pub fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n).map(move |m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
}

fn connected_without(g: &Graph, removed: &[bool]) -> bool {
    let n = g.n();
    let Some(start) = (0..n).find(|&v| !removed[v]) else {
        return true;
    };
    let mut seen = removed.to_vec();
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(x) = stack.pop() {
        for &y in g.neighbors(x) {
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen.iter().all(|&s| s)
}

/// `|V| > k` and no set of fewer than `k` vertices disconnects the graph.
pub fn brute_k_connected(g: &Graph, k: usize) -> bool {
    let n = g.n();
    n > k
        && subsets(n).filter(|x| x.len() < k).all(|x| {
            let mut removed = vec![false; n];
            for v in x {
                removed[v] = true;
            }
            connected_without(g, &removed)
        })
}

/// Every separation of order at most `max`, oriented so that the smallest
/// vertex outside the separator is on the `A` side, by trying all
/// assignments of vertices to A-only, B-only or both.
pub fn naive_separations(g: &Graph, max: usize) -> BTreeSet<(Vec<usize>, Vec<usize>)> {
    let n = g.n();
    let mut out = BTreeSet::new();
    let total = 3usize.pow(n as u32);
    for code in 0..total {
        let mut side = vec![0u8; n];
        let mut c = code;
        for s in side.iter_mut() {
            *s = (c % 3) as u8;
            c /= 3;
        }
        // 0: A only, 1: B only, 2: both
        if side.iter().filter(|&&s| s == 2).count() > max {
            continue;
        }
        let Some(first) = side.iter().position(|&s| s != 2) else {
            continue;
        };
        if side[first] != 0 || !side.contains(&1) {
            continue;
        }
        let ok = g.edges().iter().all(|&(u, v)| side[u] + side[v] != 1);
        if ok {
            let a = (0..n).filter(|&v| side[v] != 1).collect();
            let b = (0..n).filter(|&v| side[v] != 0).collect();
            out.insert((a, b));
        }
    }
    out
}

/// All proper colorings with palette `0..k`.
pub fn all_colorings(g: &Graph, k: usize) -> Vec<Vec<usize>> {
    fn go(g: &Graph, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let v = cur.len();
        if v == g.n() {
            out.push(cur.clone());
            return;
        }
        for c in 0..k {
            if g.neighbors(v).iter().all(|&w| w >= v || cur[w] != c) {
                cur.push(c);
                go(g, k, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(g, k, &mut Vec::new(), &mut out);
    out
}

pub fn brute_chromatic(g: &Graph) -> usize {
    (0..=g.n())
        .find(|&k| !all_colorings(g, k).is_empty())
        .unwrap()
}

/// Every proper χ-coloring uses all χ colors on `s`.
pub fn brute_colorful(g: &Graph, s: &[usize]) -> bool {
    let chi = brute_chromatic(g);
    all_colorings(g, chi).iter().all(|c| {
        let used: BTreeSet<usize> = s.iter().map(|&v| c[v]).collect();
        used.len() == chi
    })
}

/// For every vertex `v`, two of `a, b, c` lie in one component of `G - v`
/// (a deleted vertex is in no component).
pub fn brute_pair_condition(g: &Graph, t: [usize; 3]) -> bool {
    let n = g.n();
    (0..n).all(|v| {
        let mut comp = vec![usize::MAX; n];
        let mut id = 0;
        for s in 0..n {
            if s == v || comp[s] != usize::MAX {
                continue;
            }
            comp[s] = id;
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                for &y in g.neighbors(x) {
                    if y != v && comp[y] == usize::MAX {
                        comp[y] = id;
                        stack.push(y);
                    }
                }
            }
            id += 1;
        }
        let c: Vec<usize> = t.iter().map(|&x| comp[x]).collect();
        (c[0] != usize::MAX && (c[0] == c[1] || c[0] == c[2]))
            || (c[1] != usize::MAX && c[1] == c[2])
    })
}

/// Planarity by Wagner's theorem: memoized search for a `K5` or `K3,3`
/// among the one-step minors, keyed by a relabeling-invariant code.
pub struct MinorPlanarity {
    memo: HashMap<(usize, u64), bool>,
}

impl Default for MinorPlanarity {
    fn default() -> Self {
        Self::new()
    }
}

impl MinorPlanarity {
    pub fn new() -> Self {
        MinorPlanarity {
            memo: HashMap::new(),
        }
    }

    pub fn is_planar(&mut self, g: &Graph) -> bool {
        let adj: Vec<Vec<bool>> = (0..g.n())
            .map(|u| (0..g.n()).map(|v| g.has_edge(u, v)).collect())
            .collect();
        !self.nonplanar(adj)
    }

    fn nonplanar(&mut self, adj: Vec<Vec<bool>>) -> bool {
        let adj = strip_isolated(adj);
        let n = adj.len();
        let m: usize = adj
            .iter()
            .map(|r| r.iter().filter(|&&x| x).count())
            .sum::<usize>()
            / 2;
        if n < 5 || m < 9 {
            return false;
        }
        if n >= 3 && m > 3 * n - 6 {
            return true;
        }
        let key = canon(&adj);
        if let Some(&r) = self.memo.get(&key) {
            return r;
        }
        let deg: Vec<usize> = adj
            .iter()
            .map(|r| r.iter().filter(|&&x| x).count())
            .collect();
        let result = (n == 5 && m == 10)
            || (n == 6 && m == 9 && deg.iter().all(|&d| d == 3) && is_bipartite(&adj))
            || self.some_step_nonplanar(&adj);
        self.memo.insert(key, result);
        result
    }

    fn some_step_nonplanar(&mut self, adj: &[Vec<bool>]) -> bool {
        let n = adj.len();
        for u in 0..n {
            for v in u + 1..n {
                if !adj[u][v] {
                    continue;
                }
                let mut del = adj.to_vec();
                del[u][v] = false;
                del[v][u] = false;
                if self.nonplanar(del) {
                    return true;
                }
                // Contract v into u.
                let mut con: Vec<Vec<bool>> = Vec::new();
                let keep: Vec<usize> = (0..n).filter(|&x| x != v).collect();
                for &x in &keep {
                    con.push(
                        keep.iter()
                            .map(|&y| {
                                if x == y {
                                    return false;
                                }
                                let xs = if x == u { [u, v] } else { [x, x] };
                                let ys = if y == u { [u, v] } else { [y, y] };
                                xs.iter().any(|&a| ys.iter().any(|&b| a != b && adj[a][b]))
                            })
                            .collect(),
                    );
                }
                if self.nonplanar(con) {
                    return true;
                }
            }
        }
        false
    }
}

fn strip_isolated(adj: Vec<Vec<bool>>) -> Vec<Vec<bool>> {
    let keep: Vec<usize> = (0..adj.len())
        .filter(|&v| adj[v].iter().any(|&x| x))
        .collect();
    keep.iter()
        .map(|&u| keep.iter().map(|&v| adj[u][v]).collect())
        .collect()
}

fn is_bipartite(adj: &[Vec<bool>]) -> bool {
    let n = adj.len();
    let mut side = vec![2u8; n];
    for s in 0..n {
        if side[s] != 2 {
            continue;
        }
        side[s] = 0;
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for y in 0..n {
                if adj[x][y] {
                    if side[y] == 2 {
                        side[y] = 1 - side[x];
                        stack.push(y);
                    } else if side[y] == side[x] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Memo key: vertex count plus the library's canonical code, whose class
/// counts are checked against the known sequence elsewhere.
fn canon(adj: &[Vec<bool>]) -> (usize, u64) {
    let n = adj.len();
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).filter(move |&v| adj[u][v]).map(move |v| (u, v)))
        .collect();
    let g = Graph::from_edges(n, &edges).unwrap();
    (n, rootminor::gen::canonical_code(&g))
}
