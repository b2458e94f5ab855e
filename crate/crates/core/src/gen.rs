//! Deterministic instance generators and a small-graph enumerator.

use crate::graph::named::{complement, complete, cycle, join, moser_spindle};
use crate::graph::Graph;
use crate::planar::is_planar;
use crate::solver::is_vertex_critical;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

/// Wheel on `size` vertices: hub 0 and a rim cycle on `1..size`.
pub fn wheel(size: usize) -> Option<Graph> {
    (size >= 4).then(|| crate::graph::named::wheel(size - 1))
}

/// Erdős–Rényi graph `G(n, p)`.
pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut r = rng(seed);
    let edges: Vec<(usize, usize)> = all_pairs(n).into_iter().filter(|_| r.gen_bool(p)).collect();
    Graph::from_edges(n, &edges).expect("pairs are in range")
}

/// Adds edges in a seeded random order until the graph is 3-connected.
pub fn random_3conn(n: usize, seed: u64) -> Option<Graph> {
    if n < 4 {
        return None;
    }
    let mut pairs = all_pairs(n);
    pairs.shuffle(&mut rng(seed));
    let mut edges = Vec::new();
    for e in pairs {
        edges.push(e);
        if edges.len() < 3 * n / 2 {
            continue;
        }
        let g = Graph::from_edges(n, &edges).expect("pairs are in range");
        if g.is_k_connected(3) {
            return Some(g);
        }
    }
    None
}

/// Random planar graph: edges are offered in a seeded order and kept while
/// the graph stays planar, up to a seeded edge budget.
pub fn planar(n: usize, seed: u64) -> Graph {
    let mut r = rng(seed);
    let mut pairs = all_pairs(n);
    pairs.shuffle(&mut r);
    let max = if n >= 3 {
        3 * n - 6
    } else {
        n.saturating_sub(1)
    };
    let budget = if max == 0 {
        0
    } else {
        r.gen_range(n.saturating_sub(1).min(max)..=max)
    };
    let mut edges = Vec::new();
    let mut g = Graph::empty(n);
    for e in pairs {
        if edges.len() >= budget {
            break;
        }
        edges.push(e);
        let h = Graph::from_edges(n, &edges).expect("pairs are in range");
        if is_planar(&h) {
            g = h;
        } else {
            edges.pop();
        }
    }
    g
}

/// Sparse 3-connected planar graph: a seeded maximal planar graph with
/// edges removed in random order while 3-connectivity survives.
pub fn planar_3conn(n: usize, seed: u64) -> Option<Graph> {
    if n < 4 {
        return None;
    }
    let mut r = rng(seed);
    let mut pairs = all_pairs(n);
    pairs.shuffle(&mut r);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for e in pairs {
        edges.push(e);
        if !is_planar(&Graph::from_edges(n, &edges).expect("pairs are in range")) {
            edges.pop();
        }
    }
    let mut g = Graph::from_edges(n, &edges).expect("pairs are in range");
    if !g.is_k_connected(3) {
        return None;
    }
    edges.shuffle(&mut r);
    let mut i = 0;
    while i < edges.len() {
        let mut trial = edges.clone();
        trial.remove(i);
        let h = Graph::from_edges(n, &trial).expect("pairs are in range");
        if h.is_k_connected(3) && r.gen_bool(0.7) {
            edges = trial;
            g = h;
        } else {
            i += 1;
        }
    }
    Some(g)
}

/// Random graph on `n` vertices with `k` roots that share a face: the roots
/// start on a cycle and seeded edges are kept while the graph plus a vertex
/// adjacent to every root stays planar. Ids are shuffled at the end; the
/// roots are returned ascending.
pub fn cofacial(n: usize, k: usize, seed: u64) -> Option<(Graph, Vec<usize>)> {
    if k < 3 || k > n {
        return None;
    }
    let mut r = rng(seed);
    let apex = n;
    let mut edges: Vec<(usize, usize)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    edges.extend((0..k).map(|i| (i, apex)));
    let mut pairs = all_pairs(n);
    pairs.shuffle(&mut r);
    let keep = r.gen_range(0.8..=1.0);
    for e in pairs {
        // Chords between roots would leave 2-cuts.
        if e.1 < k || !r.gen_bool(keep) {
            continue;
        }
        edges.push(e);
        if !is_planar(&Graph::from_edges(n + 1, &edges).expect("pairs are in range")) {
            edges.pop();
        }
    }
    let mut label: Vec<usize> = (0..n).collect();
    label.shuffle(&mut r);
    let relabeled: Vec<(usize, usize)> = edges
        .iter()
        .filter(|&&(u, v)| u != apex && v != apex)
        .map(|&(u, v)| (label[u], label[v]))
        .collect();
    let g = Graph::from_edges(n, &relabeled).expect("pairs are in range");
    let mut roots: Vec<usize> = (0..k).map(|i| label[i]).collect();
    roots.sort_unstable();
    Some((g, roots))
}

/// 5-vertex-critical graphs on exactly `n` vertices built from small joins.
/// Empty when none of the constructions reaches `n` (for example `n = 6`,
/// where no such graph exists).
pub fn critical5_family(n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    if n == 5 {
        out.push(complete(5));
    }
    if n >= 7 && n % 2 == 1 {
        out.push(join(&complete(2), &cycle(n - 2)));
    }
    if n == 8 {
        out.push(join(&complete(1), &moser_spindle()));
        out.push(join(&complete(1), &complement(&cycle(7))));
    }
    if n == 9 {
        out.push(complement(&cycle(9)));
    }
    if n >= 10 && n.is_multiple_of(2) {
        // K1 joined with an odd wheel is 5-critical.
        out.push(join(&complete(1), &crate::graph::named::wheel(n - 2)));
    }
    out.retain(|g| is_vertex_critical(g, 5));
    out
}

pub fn critical5(n: usize, seed: u64) -> Option<Graph> {
    let family = critical5_family(n);
    (!family.is_empty()).then(|| family[(seed % family.len() as u64) as usize].clone())
}

/// Canonical code: the smallest upper-triangle adjacency bit string over
/// all relabelings that respect a degree-based vertex refinement.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.n();
    assert!(n <= 11, "canonical codes are limited to 11 vertices");
    let key = |v: usize| {
        let mut nd: Vec<usize> = g.neighbors(v).iter().map(|&w| g.degree(w)).collect();
        nd.sort_unstable();
        (g.degree(v), nd)
    };
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| key(v));
    let keys: Vec<_> = order.iter().map(|&v| key(v)).collect();
    // Position i may take any vertex whose key equals keys[i].
    let mut best = u64::MAX;
    let mut placed = Vec::with_capacity(n);
    let mut used = vec![false; n];
    canon_rec(g, &keys, &key, &mut placed, &mut used, 0, &mut best);
    best
}

fn canon_rec<K: PartialEq>(
    g: &Graph,
    keys: &[K],
    key: &dyn Fn(usize) -> K,
    placed: &mut Vec<usize>,
    used: &mut [bool],
    code: u64,
    best: &mut u64,
) {
    let n = g.n();
    let i = placed.len();
    if i == n {
        *best = (*best).min(code);
        return;
    }
    for v in 0..n {
        if used[v] || key(v) != keys[i] {
            continue;
        }
        // Bits for pairs (j, i), j < i, in the order of pair index.
        let mut c = code;
        for (j, &w) in placed.iter().enumerate() {
            if g.has_edge(w, v) {
                c |= 1u64 << pair_bit(n, j, i);
            }
        }
        // Higher bits are fixed first, so a worse prefix cannot recover.
        let mask = prefix_mask(n, i);
        if c & mask > *best & mask {
            continue;
        }
        used[v] = true;
        placed.push(v);
        canon_rec(g, keys, key, placed, used, c, best);
        placed.pop();
        used[v] = false;
    }
}

/// Bit of pair `(j, i)` with `j < i`; pairs with smaller `i` get higher bits.
fn pair_bit(n: usize, j: usize, i: usize) -> usize {
    let total = n * (n - 1) / 2;
    total - 1 - (i * (i - 1) / 2 + j)
}

fn prefix_mask(n: usize, i: usize) -> u64 {
    let total = n * (n - 1) / 2;
    let fixed = (i + 1) * i / 2;
    if fixed == 0 {
        return 0;
    }
    let ones = if fixed >= 64 {
        u64::MAX
    } else {
        (1u64 << fixed) - 1
    };
    ones << (total - fixed)
}

/// One representative per isomorphism class of graphs on `n` vertices,
/// grown vertex by vertex from the classes on `n - 1`.
pub fn nonisomorphic_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 8, "exhaustive enumeration is limited to 8 vertices");
    let mut level = vec![Graph::empty(0)];
    for k in 1..=n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for g in &level {
            for mask in 0u32..(1 << (k - 1)) {
                let nbrs: Vec<usize> = (0..k - 1).filter(|&i| mask >> i & 1 == 1).collect();
                let h = g.with_vertex_added(&nbrs).expect("neighbors are in range");
                if seen.insert(canonical_code(&h)) {
                    next.push(h);
                }
            }
        }
        level = next;
    }
    level
}
