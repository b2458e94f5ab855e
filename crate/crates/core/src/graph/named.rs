//! Small named graphs used throughout the tests and generators.

use super::Graph;

fn build(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges).expect("named graph edges are valid")
}

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    build(n, &edges)
}

/// Cycle `0-1-...-(n-1)-0`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycles need at least three vertices");
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    build(n, &edges)
}

/// Path `0-1-...-(n-1)`.
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    build(n, &edges)
}

/// Wheel with hub `0` and rim cycle `1-2-...-rim-1`.
pub fn wheel(rim: usize) -> Graph {
    assert!(rim >= 3);
    let mut edges: Vec<_> = (1..=rim).map(|i| (0, i)).collect();
    edges.extend((1..=rim).map(|i| (i, i % rim + 1)));
    build(rim + 1, &edges)
}

/// `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..a {
        for v in a..a + b {
            edges.push((u, v));
        }
    }
    build(a + b, &edges)
}

pub fn star(leaves: usize) -> Graph {
    complete_bipartite(1, leaves)
}

/// Two rhombi sharing vertex 0 with their far tips (3 and 6) joined.
pub fn moser_spindle() -> Graph {
    build(
        7,
        &[
            (0, 1),
            (0, 2),
            (1, 2),
            (1, 3),
            (2, 3),
            (0, 4),
            (0, 5),
            (4, 5),
            (4, 6),
            (5, 6),
            (3, 6),
        ],
    )
}

/// `K_{2,2,2}`: vertex `i` is non-adjacent only to `i ^ 1`.
pub fn octahedron() -> Graph {
    let mut edges = Vec::new();
    for u in 0..6 {
        for v in u + 1..6 {
            if v != u ^ 1 {
                edges.push((u, v));
            }
        }
    }
    build(6, &edges)
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    build(10, &edges)
}

/// `u=0` and `v=1` joined by `paths` internally disjoint paths of length two
/// through `2, 3, ...`.
pub fn theta(paths: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..paths {
        edges.push((0, i + 2));
        edges.push((1, i + 2));
    }
    build(paths + 2, &edges)
}

/// K4 plus a pendant vertex 4 attached to vertex 0.
pub fn k4_with_pendant() -> Graph {
    let mut edges = complete(4).edges();
    edges.push((0, 4));
    build(5, &edges)
}

/// Every vertex of `g` joined to every vertex of `h`; `h` is shifted by `g.n()`.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let off = g.n();
    let mut edges = g.edges();
    edges.extend(h.edges().into_iter().map(|(u, v)| (u + off, v + off)));
    for u in 0..g.n() {
        for v in 0..h.n() {
            edges.push((u, v + off));
        }
    }
    build(g.n() + h.n(), &edges)
}

pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let off = g.n();
    let mut edges = g.edges();
    edges.extend(h.edges().into_iter().map(|(u, v)| (u + off, v + off)));
    build(g.n() + h.n(), &edges)
}

pub fn complement(g: &Graph) -> Graph {
    let mut edges = Vec::new();
    for u in g.vertices() {
        for v in u + 1..g.n() {
            if !g.has_edge(u, v) {
                edges.push((u, v));
            }
        }
    }
    build(g.n(), &edges)
}

/// Hajós sum: delete `g1` edge `x1y1` and `g2` edge `x2y2`, identify `x1`
/// with `x2` and join `y1` to `y2`. Vertices of `g2` other than `x2` are
/// appended after those of `g1`.
pub fn hajos(g1: &Graph, e1: (usize, usize), g2: &Graph, e2: (usize, usize)) -> Graph {
    let (x1, y1) = e1;
    let (x2, y2) = e2;
    assert!(g1.has_edge(x1, y1) && g2.has_edge(x2, y2));
    let off = g1.n();
    let relabel = |w: usize| -> usize {
        if w == x2 {
            x1
        } else if w < x2 {
            w + off
        } else {
            w + off - 1
        }
    };
    let mut edges: Vec<_> = g1
        .edges()
        .into_iter()
        .filter(|&(u, v)| (u, v) != (x1.min(y1), x1.max(y1)))
        .collect();
    edges.extend(
        g2.edges()
            .into_iter()
            .filter(|&(u, v)| (u, v) != (x2.min(y2), x2.max(y2)))
            .map(|(u, v)| (relabel(u), relabel(v))),
    );
    edges.push((y1, relabel(y2)));
    build(g1.n() + g2.n() - 1, &edges)
}
