//! Exact coloring by backtracking, colorful-set decisions and the color
//! permutation / gluing utilities used when recombining the sides of a
//! separation.
//!
//! Colors are `0..k` throughout the library.

use crate::error::{Error, Result};
use crate::graph::{Graph, Separation};

/// A proper vertex coloring with palette `0..k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProperColoring {
    colors: Vec<usize>,
    k: usize,
}

impl ProperColoring {
    /// Validates `colors` against `g` before wrapping it.
    pub fn new(g: &Graph, colors: Vec<usize>, k: usize) -> Result<Self> {
        let c = ProperColoring { colors, k };
        c.check(g)?;
        Ok(c)
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn check(&self, g: &Graph) -> Result<()> {
        if self.colors.len() != g.n() {
            return Err(Error::Uncolored(self.colors.len().min(g.n())));
        }
        if let Some(v) = self.colors.iter().position(|&c| c >= self.k) {
            return Err(Error::Uncolored(v));
        }
        for (u, v) in g.edges() {
            if self.colors[u] == self.colors[v] {
                return Err(Error::ImproperEdge(u, v));
            }
        }
        Ok(())
    }

    /// Colors applied through `perm` (`new = perm[old]`).
    pub fn permuted(&self, perm: &[usize]) -> Self {
        ProperColoring {
            colors: self.colors.iter().map(|&c| perm[c]).collect(),
            k: self.k,
        }
    }

    /// Smallest color that no vertex of `set` receives.
    pub fn first_missing_on(&self, set: &[usize]) -> Option<usize> {
        (0..self.k).find(|&c| set.iter().all(|&v| self.colors[v] != c))
    }
}

/// A proper coloring plus a color that no root receives: the witness that the
/// root set is not colorful.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColoringCert {
    pub coloring: ProperColoring,
    pub missing_color: usize,
    pub roots: Vec<usize>,
}

impl ColoringCert {
    pub fn validate(&self, g: &Graph) -> Result<()> {
        self.coloring.check(g)?;
        g.check_vertices(&self.roots)?;
        if self.missing_color >= self.coloring.k {
            return Err(Error::InvalidCertificate(format!(
                "missing color {} outside palette of {}",
                self.missing_color, self.coloring.k
            )));
        }
        if let Some(&v) = self
            .roots
            .iter()
            .find(|&&v| self.coloring.color(v) == self.missing_color)
        {
            return Err(Error::InvalidCertificate(format!(
                "root {v} has the supposedly missing color {}",
                self.missing_color
            )));
        }
        Ok(())
    }

    pub fn is_valid(&self, g: &Graph) -> bool {
        self.validate(g).is_ok()
    }
}

/// Search order: decreasing degree, ties by smaller id.
fn degree_order(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    order
}

struct ListSearch<'g> {
    g: &'g Graph,
    order: Vec<usize>,
    allowed: Vec<u32>,
    colors: Vec<usize>,
    // uses[v][c]: colored neighbors of v that have color c.
    uses: Vec<Vec<u16>>,
    k: usize,
}

impl ListSearch<'_> {
    fn domain(&self, v: usize) -> u32 {
        let mut d = self.allowed[v];
        for c in 0..self.k {
            if self.uses[v][c] > 0 {
                d &= !(1 << c);
            }
        }
        d
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.colors[v] = c;
        for &w in self.g.neighbors(v) {
            self.uses[w][c] += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.colors[v];
        self.colors[v] = usize::MAX;
        for &w in self.g.neighbors(v) {
            self.uses[w][c] -= 1;
        }
    }

    fn run(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        let dom = self.domain(v);
        for c in 0..self.k {
            if dom >> c & 1 == 0 {
                continue;
            }
            self.assign(v, c);
            let dead_end = self
                .g
                .neighbors(v)
                .iter()
                .any(|&w| self.colors[w] == usize::MAX && self.domain(w) == 0);
            if !dead_end && self.run(depth + 1) {
                return true;
            }
            self.unassign(v);
        }
        false
    }
}

/// Backtracking list coloring: vertex `v` may only use colors in `allowed[v]`.
fn list_color(g: &Graph, k: usize, allowed: Vec<u32>) -> Option<Vec<usize>> {
    assert!(k <= 32, "palette limited to 32 colors");
    let n = g.n();
    let mut search = ListSearch {
        g,
        order: degree_order(g),
        allowed,
        colors: vec![usize::MAX; n],
        uses: vec![vec![0; k]; n],
        k,
    };
    if (0..n).any(|v| search.allowed[v] == 0) {
        return None;
    }
    search.run(0).then_some(search.colors)
}

fn full_mask(k: usize) -> u32 {
    if k >= 32 {
        u32::MAX
    } else {
        (1u32 << k) - 1
    }
}

/// A proper `k`-coloring, colors tried in ascending order. The first vertex of
/// the search order is fixed to color 0.
pub fn find_coloring(g: &Graph, k: usize) -> Option<ProperColoring> {
    if g.n() == 0 {
        return Some(ProperColoring {
            colors: Vec::new(),
            k,
        });
    }
    if k == 0 {
        return None;
    }
    let mut allowed = vec![full_mask(k); g.n()];
    allowed[degree_order(g)[0]] = 1;
    list_color(g, k, allowed).map(|colors| ProperColoring { colors, k })
}

/// A clique found greedily from each start vertex; its size bounds `χ` below.
pub fn greedy_clique(g: &Graph) -> Vec<usize> {
    let mut best = Vec::new();
    for start in g.vertices() {
        let mut clique = vec![start];
        let mut cands: Vec<usize> = g.neighbors(start).to_vec();
        cands.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        for w in cands {
            if clique.iter().all(|&c| g.has_edge(c, w)) {
                clique.push(w);
            }
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best.sort_unstable();
    best
}

/// Exact chromatic number if it is at most `max_k`, otherwise `None`.
pub fn chromatic_number(g: &Graph, max_k: usize) -> Option<usize> {
    if g.n() == 0 {
        return Some(0);
    }
    let lower = greedy_clique(g).len().max(1);
    (lower..=max_k).find(|&k| find_coloring(g, k).is_some())
}

/// A proper `k`-coloring in which some color is absent from `roots`. Colors
/// `j = 0, 1, ...` are tried in turn and the first feasible one is reported.
pub fn find_avoiding_coloring(g: &Graph, roots: &[usize], k: usize) -> Option<ColoringCert> {
    let mut roots = roots.to_vec();
    roots.sort_unstable();
    roots.dedup();
    (0..k).find_map(|j| {
        let mut allowed = vec![full_mask(k); g.n()];
        for &s in &roots {
            allowed[s] &= !(1 << j);
        }
        list_color(g, k, allowed).map(|colors| ColoringCert {
            coloring: ProperColoring { colors, k },
            missing_color: j,
            roots: roots.clone(),
        })
    })
}

/// Whether every proper `χ(G)`-coloring uses all `χ(G)` colors on `roots`.
pub fn is_colorful(g: &Graph, roots: &[usize]) -> bool {
    let chi = chromatic_number(g, g.n()).expect("n colors always suffice");
    find_avoiding_coloring(g, roots, chi).is_none()
}

/// Lexicographically smallest permutation `π` of `0..k` with `π(from) = to`
/// for every constraint and, if given, `π(avoid.0) != avoid.1`.
pub fn match_permutation(
    constraints: &[(usize, usize)],
    avoid: Option<(usize, usize)>,
    k: usize,
) -> Option<Vec<usize>> {
    if constraints.iter().any(|&(f, t)| f >= k || t >= k) {
        return None;
    }
    let mut perm: Vec<usize> = (0..k).collect();
    loop {
        let fits = constraints.iter().all(|&(f, t)| perm[f] == t)
            && avoid.is_none_or(|(f, bad)| f >= k || perm[f] != bad);
        if fits {
            return Some(perm);
        }
        if !next_permutation(&mut perm) {
            return None;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| p[i] < p[i + 1]) else {
        return false;
    };
    let j = (i + 1..n)
        .rev()
        .find(|&j| p[j] > p[i])
        .expect("successor exists");
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

/// Common extension of a coloring of `G[A]` and one of `G[B]`, given as
/// per-vertex options over the ids of `g`. They must agree on `A ∩ B`.
pub fn glue_colorings(
    g: &Graph,
    sep: &Separation,
    side_a: &[Option<usize>],
    side_b: &[Option<usize>],
    k: usize,
) -> Result<ProperColoring> {
    let mut colors = vec![usize::MAX; g.n()];
    for v in g.vertices() {
        let ca = if sep.a.contains(&v) {
            side_a.get(v).copied().flatten()
        } else {
            None
        };
        let cb = if sep.b.contains(&v) {
            side_b.get(v).copied().flatten()
        } else {
            None
        };
        colors[v] = match (sep.a.contains(&v), sep.b.contains(&v), ca, cb) {
            (true, true, Some(x), Some(y)) if x != y => {
                return Err(Error::SeparatorDisagreement(v))
            }
            (_, _, Some(x), _) => x,
            (false, true, None, Some(y)) => y,
            _ => return Err(Error::Uncolored(v)),
        };
    }
    ProperColoring::new(g, colors, k)
}
