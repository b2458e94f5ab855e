//! Rooted clique minors: certificates, an exhaustive oracle, and the
//! constructive searches for rooted `K3` and `K4`.

use crate::error::{Error, Result};
use crate::graph::{
    blocks, disjoint_paths_between_sets, fan_paths, internally_disjoint_paths, mark, Graph,
};
use crate::planar::{apex_graph, is_planar};
use std::collections::BTreeSet;

pub const DEFAULT_ORACLE_CAP: usize = 12;

/// Branch sets of a `K_t` minor, each meeting `roots` unless `roots` is
/// empty. Branch sets are kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RootedMinorCert {
    pub branch_sets: Vec<Vec<usize>>,
    pub roots: Vec<usize>,
}

impl RootedMinorCert {
    pub fn new(mut branch_sets: Vec<Vec<usize>>, roots: &[usize]) -> Self {
        for set in &mut branch_sets {
            set.sort_unstable();
        }
        let mut roots = roots.to_vec();
        roots.sort_unstable();
        roots.dedup();
        RootedMinorCert { branch_sets, roots }
    }

    pub fn t(&self) -> usize {
        self.branch_sets.len()
    }

    pub fn check(&self, g: &Graph) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidCertificate(msg));
        let n = g.n();
        let mut used = vec![false; n];
        for (i, set) in self.branch_sets.iter().enumerate() {
            if set.is_empty() {
                return bad(format!("branch set {i} is empty"));
            }
            for &v in set {
                if v >= n {
                    return bad(format!("vertex {v} out of range"));
                }
                if used[v] {
                    return bad(format!("vertex {v} is in two branch sets"));
                }
                used[v] = true;
            }
            if !g.is_connected_set(set) {
                return bad(format!("branch set {i} is not connected"));
            }
        }
        if self.roots.iter().any(|&r| r >= n) {
            return bad("root out of range".into());
        }
        for i in 0..self.t() {
            for j in i + 1..self.t() {
                if !g.sets_adjacent(&self.branch_sets[i], &self.branch_sets[j]) {
                    return bad(format!("branch sets {i} and {j} are not adjacent"));
                }
            }
        }
        if !self.roots.is_empty() {
            for (i, set) in self.branch_sets.iter().enumerate() {
                if !set.iter().any(|v| self.roots.binary_search(v).is_ok()) {
                    return bad(format!("branch set {i} misses the roots"));
                }
            }
        }
        Ok(())
    }

    pub fn is_valid(&self, g: &Graph) -> bool {
        self.check(g).is_ok()
    }
}

pub fn verify_cert(g: &Graph, cert: &RootedMinorCert) -> bool {
    cert.is_valid(g)
}

/// Greedily drops vertices (in ascending order, repeatedly) while the
/// certificate stays valid.
pub fn minimalize(g: &Graph, cert: &RootedMinorCert) -> RootedMinorCert {
    let mut cur = cert.clone();
    loop {
        let mut changed = false;
        for i in 0..cur.t() {
            let mut k = 0;
            while k < cur.branch_sets[i].len() {
                if cur.branch_sets[i].len() == 1 {
                    break;
                }
                let v = cur.branch_sets[i].remove(k);
                if cur.is_valid(g) {
                    changed = true;
                } else {
                    cur.branch_sets[i].insert(k, v);
                    k += 1;
                }
            }
        }
        if !changed {
            return cur;
        }
    }
}

struct Oracle<'a> {
    nbr: &'a [u64],
    n: usize,
    t: usize,
    roots: u64,
    sets: Vec<u64>,
    opened: usize,
}

impl Oracle<'_> {
    fn expand(&self, mut cl: u64, allowed: u64) -> u64 {
        loop {
            let mut reach = 0;
            let mut bits = cl;
            while bits != 0 {
                reach |= self.nbr[bits.trailing_zeros() as usize];
                bits &= bits - 1;
            }
            let next = cl | (reach & allowed);
            if next == cl {
                return cl;
            }
            cl = next;
        }
    }

    fn nbr_of(&self, set: u64) -> u64 {
        let mut reach = 0;
        let mut bits = set;
        while bits != 0 {
            reach |= self.nbr[bits.trailing_zeros() as usize];
            bits &= bits - 1;
        }
        reach
    }

    /// Necessary conditions for the partial assignment of vertices below
    /// `idx` to extend to a certificate.
    fn feasible(&self, idx: usize) -> bool {
        let rest: u64 = if idx >= 64 {
            0
        } else {
            (!0u64 << idx) & low_bits(self.n)
        };
        let missing = self.t - self.opened;
        if missing > rest.count_ones() as usize {
            return false;
        }
        if self.roots != 0 {
            let rootless = self.sets[..self.opened]
                .iter()
                .filter(|&&s| s & self.roots == 0)
                .count();
            if rootless + missing > (self.roots & rest).count_ones() as usize {
                return false;
            }
        }
        let mut closures = [0u64; 64];
        for i in 0..self.opened {
            let s = self.sets[i];
            let cl = self.expand(s & s.wrapping_neg(), s | rest);
            if s & !cl != 0 {
                return false;
            }
            closures[i] = cl;
        }
        for i in 0..self.opened {
            let reach = self.nbr_of(closures[i]);
            for j in i + 1..self.opened {
                if reach & closures[j] == 0 {
                    return false;
                }
            }
        }
        true
    }

    fn search(&mut self, idx: usize) -> bool {
        if !self.feasible(idx) {
            return false;
        }
        if idx == self.n {
            // At the leaf the closures are the sets themselves, so the
            // feasibility test already checked connectivity and adjacency.
            return self.opened == self.t;
        }
        let bit = 1u64 << idx;
        if self.search(idx + 1) {
            return true;
        }
        for i in 0..self.opened {
            self.sets[i] |= bit;
            if self.search(idx + 1) {
                return true;
            }
            self.sets[i] &= !bit;
        }
        if self.opened < self.t {
            self.sets[self.opened] = bit;
            self.opened += 1;
            if self.search(idx + 1) {
                return true;
            }
            self.opened -= 1;
            self.sets[self.opened] = 0;
        }
        false
    }
}

fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        !0
    } else {
        (1u64 << n) - 1
    }
}

/// Exhaustive search for a `roots`-rooted `K_t` minor. Vertices are assigned
/// in id order to "unused" or a branch set, new branch sets being opened in
/// label order; the first certificate found is returned.
pub fn brute_force_rooted_kt(
    g: &Graph,
    roots: &[usize],
    t: usize,
    cap: usize,
) -> Result<Option<RootedMinorCert>> {
    let n = g.n();
    let cap = cap.min(64);
    if n > cap {
        return Err(Error::OracleCap { n, cap });
    }
    g.check_vertices(roots)?;
    if t == 0 {
        return Ok(Some(RootedMinorCert::new(Vec::new(), roots)));
    }
    if t > 64 {
        return Ok(None);
    }
    let nbr: Vec<u64> = g
        .vertices()
        .map(|v| g.neighbor_mask(v).expect("n <= 64"))
        .collect();
    let mut oracle = Oracle {
        nbr: &nbr,
        n,
        t,
        roots: roots.iter().fold(0, |m, &r| m | 1u64 << r),
        sets: vec![0; t],
        opened: 0,
    };
    if !oracle.search(0) {
        return Ok(None);
    }
    let sets = oracle
        .sets
        .iter()
        .map(|&s| (0..n).filter(|&v| s >> v & 1 == 1).collect())
        .collect();
    let cert = RootedMinorCert::new(sets, roots);
    debug_assert!(cert.is_valid(g));
    Ok(Some(cert))
}

fn distinct(roots: &[usize]) -> Result<()> {
    let set: BTreeSet<usize> = roots.iter().copied().collect();
    if set.len() == roots.len() {
        Ok(())
    } else {
        Err(Error::RootsNotDistinct)
    }
}

/// For every vertex `v`, at least two of the roots other than `v` share a
/// component of `G - v`.
pub fn pair_shares_component(g: &Graph, a: usize, b: usize, c: usize) -> bool {
    let n = g.n();
    g.vertices().all(|v| {
        let comps = g.components_avoiding(&mark(n, &[v]));
        let mut comp_of = vec![usize::MAX; n];
        for (i, comp) in comps.iter().enumerate() {
            for &x in comp {
                comp_of[x] = i;
            }
        }
        let left: Vec<usize> = [a, b, c]
            .into_iter()
            .filter(|&r| r != v)
            .map(|r| comp_of[r])
            .collect();
        (0..left.len()).any(|i| (i + 1..left.len()).any(|j| left[i] == left[j]))
    })
}

/// Splits a cycle containing the three roots into three consecutive arcs,
/// returned in root order.
fn split_cycle(cycle: &[usize], roots: [usize; 3]) -> [Vec<usize>; 3] {
    let start = cycle.iter().position(|&v| v == roots[0]).unwrap();
    let rotated: Vec<usize> = cycle[start..]
        .iter()
        .chain(&cycle[..start])
        .copied()
        .collect();
    let i = rotated.iter().position(|&v| v == roots[1]).unwrap();
    let j = rotated.iter().position(|&v| v == roots[2]).unwrap();
    let (lo, hi) = (i.min(j), i.max(j));
    let first = rotated[..lo].to_vec();
    let mid = rotated[lo..hi].to_vec();
    let last = rotated[hi..].to_vec();
    if i < j {
        [first, mid, last]
    } else {
        [first, last, mid]
    }
}

/// Rooted `K3` in a 2-connected graph on at least three vertices.
fn k3_in_block(h: &Graph, roots: [usize; 3]) -> Option<[Vec<usize>; 3]> {
    let [x, y, z] = roots;
    let two = internally_disjoint_paths(h, x, y, 2).ok()?;
    if two.len() < 2 {
        return None;
    }
    let mut cycle = two[0].vertices().to_vec();
    let back = two[1].vertices();
    cycle.extend(back[1..back.len() - 1].iter().rev());
    if cycle.contains(&z) {
        return Some(split_cycle(&cycle, roots));
    }
    let fan = fan_paths(h, z, &cycle, 2).ok()?;
    if fan.len() < 2 {
        return None;
    }
    let (p, q) = (fan[0].last(), fan[1].last());
    let len = cycle.len();
    let ip = cycle.iter().position(|&v| v == p).unwrap();
    let iq = cycle.iter().position(|&v| v == q).unwrap();
    let arc = |from: usize, to: usize| {
        let mut out = vec![cycle[from]];
        let mut k = from;
        while k != to {
            k = (k + 1) % len;
            out.push(cycle[k]);
        }
        out
    };
    // Three internally disjoint p-q paths.
    let r1 = arc(ip, iq);
    let mut r2 = arc(iq, ip);
    r2.reverse();
    let mut r3: Vec<usize> = fan[0].vertices().iter().rev().copied().collect();
    r3.extend(&fan[1].vertices()[1..]);
    let interior = |r: &[usize]| r[1..r.len() - 1].to_vec();

    for r in [&r1, &r2] {
        let mut cyc = r.clone();
        cyc.extend(interior(&r3).into_iter().rev());
        if cyc.contains(&x) && cyc.contains(&y) {
            return Some(split_cycle(&cyc, roots));
        }
    }
    // x and y sit inside different arcs of the original cycle.
    let (rx, ry) = if interior(&r1).contains(&x) {
        (&r1, &r2)
    } else {
        (&r2, &r1)
    };
    let bx = interior(rx);
    let mut by = interior(ry);
    by.push(q);
    let mut bz = interior(&r3);
    bz.push(p);
    Some([bx, by, bz])
}

fn construct_k3(g: &Graph, roots: [usize; 3]) -> Option<RootedMinorCert> {
    let n = g.n();
    for block in blocks(g) {
        if block.len() < 3 {
            continue;
        }
        let in_block = mark(n, &block);
        let outside = g.components_avoiding(&in_block);
        let mut proj = [usize::MAX; 3];
        for (k, &r) in roots.iter().enumerate() {
            if in_block[r] {
                proj[k] = r;
                continue;
            }
            let comp = outside
                .iter()
                .find(|c| c.binary_search(&r).is_ok())
                .unwrap();
            if let Some(&attach) = comp
                .iter()
                .flat_map(|&v| g.neighbors(v).iter())
                .find(|&&w| in_block[w])
            {
                proj[k] = attach;
            }
        }
        if proj.contains(&usize::MAX)
            || proj[0] == proj[1]
            || proj[0] == proj[2]
            || proj[1] == proj[2]
        {
            continue;
        }
        let (h, _) = g.induced(&block).ok()?;
        let local = |v: usize| block.binary_search(&v).unwrap();
        let sets = k3_in_block(&h, [local(proj[0]), local(proj[1]), local(proj[2])])?;
        let mut branch: Vec<Vec<usize>> = sets
            .iter()
            .map(|s| s.iter().map(|&x| block[x]).collect())
            .collect();
        for (k, &r) in roots.iter().enumerate() {
            if r != proj[k] {
                let tail = g.shortest_path_between(&[r], &[proj[k]], &in_block)?;
                branch[k].extend(&tail.vertices()[..tail.vertices().len() - 1]);
            }
        }
        let cert = RootedMinorCert::new(branch, &roots);
        if cert.is_valid(g) {
            return Some(cert);
        }
    }
    None
}

/// A rooted `K3` on `a, b, c`, or `None` when none exists. A negative answer
/// is cross-checked with the oracle when `n <= cap`.
pub fn rooted_k3(
    g: &Graph,
    a: usize,
    b: usize,
    c: usize,
    cap: usize,
) -> Result<Option<RootedMinorCert>> {
    g.check_vertices(&[a, b, c])?;
    distinct(&[a, b, c])?;
    if let Some(cert) = construct_k3(g, [a, b, c]) {
        let cert = minimalize(g, &cert);
        cert.check(g)
            .map_err(|e| Error::Internal(format!("rooted K3: {e}")))?;
        return Ok(Some(cert));
    }
    if pair_shares_component(g, a, b, c) {
        return Err(Error::Internal(
            "no rooted K3 although every vertex leaves two roots together".into(),
        ));
    }
    if g.n() <= cap && brute_force_rooted_kt(g, &[a, b, c], 3, cap)?.is_some() {
        return Err(Error::Internal(
            "oracle found a rooted K3 the construction missed".into(),
        ));
    }
    Ok(None)
}

struct Growth<'g> {
    g: &'g Graph,
    owner: Vec<Option<usize>>,
    forbid: Vec<u8>,
}

impl Growth<'_> {
    fn adjacent(&self) -> [[bool; 4]; 4] {
        let mut adj = [[false; 4]; 4];
        for (u, v) in self.g.edges() {
            if let (Some(i), Some(j)) = (self.owner[u], self.owner[v]) {
                adj[i][j] = true;
                adj[j][i] = true;
            }
        }
        adj
    }

    fn usable(&self, v: usize, label: usize) -> bool {
        self.owner[v].is_none() && self.forbid[v] >> label & 1 == 0
    }

    /// BFS distances to the set `j` through free vertices usable by `i` or `j`.
    fn distances_to(&self, i: usize, j: usize) -> Vec<usize> {
        let n = self.g.n();
        let mut dist = vec![usize::MAX; n];
        let mut queue = std::collections::VecDeque::new();
        for v in 0..n {
            if self.owner[v] == Some(j) {
                dist[v] = 0;
                queue.push_back(v);
            }
        }
        while let Some(x) = queue.pop_front() {
            for &y in self.g.neighbors(x) {
                if dist[y] == usize::MAX && (self.usable(y, i) || self.usable(y, j)) {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    /// Free vertex next to set `i`, usable by `i`, closest to the set that
    /// `dist` measures towards.
    fn candidate(&self, i: usize, dist: &[usize]) -> Option<usize> {
        (0..self.g.n())
            .filter(|&v| {
                self.usable(v, i)
                    && dist[v] != usize::MAX
                    && self
                        .g
                        .neighbors(v)
                        .iter()
                        .any(|&w| self.owner[w] == Some(i))
            })
            .min_by_key(|&v| (dist[v], v))
    }

    fn search(&mut self) -> bool {
        let adj = self.adjacent();
        let mut pending = Vec::new();
        for i in 0..4 {
            for j in i + 1..4 {
                if !adj[i][j] {
                    pending.push((i, j));
                }
            }
        }
        let Some(&(i, j)) = pending.first() else {
            return true;
        };
        for &(a, b) in &pending {
            let dist = self.distances_to(a, b);
            let reaches = (0..self.g.n()).any(|v| {
                self.owner[v] == Some(a)
                    && self.g.neighbors(v).iter().any(|&w| dist[w] != usize::MAX)
            });
            if !reaches {
                return false;
            }
        }
        let (v, label) = match self.candidate(i, &self.distances_to(i, j)) {
            Some(v) => (v, i),
            None => match self.candidate(j, &self.distances_to(j, i)) {
                Some(v) => (v, j),
                None => return false,
            },
        };
        self.owner[v] = Some(label);
        if self.search() {
            return true;
        }
        self.owner[v] = None;
        self.forbid[v] |= 1 << label;
        if self.search() {
            return true;
        }
        self.forbid[v] &= !(1 << label);
        false
    }
}

/// Exact branch-and-bound search for a rooted `K4`: branch sets grow from the
/// roots, and each step decides whether one frontier vertex joins a set.
fn grow_k4(g: &Graph, roots: [usize; 4]) -> Option<RootedMinorCert> {
    let mut st = Growth {
        g,
        owner: vec![None; g.n()],
        forbid: vec![0; g.n()],
    };
    for (i, &r) in roots.iter().enumerate() {
        st.owner[r] = Some(i);
    }
    if !st.search() {
        return None;
    }
    let mut sets = vec![Vec::new(); 4];
    for v in g.vertices() {
        if let Some(i) = st.owner[v] {
            sets[i].push(v);
        }
    }
    Some(RootedMinorCert::new(sets, &roots))
}

/// A rooted `K4` on the four roots, or `None`. A planar apex graph rules the
/// minor out at once; otherwise the oracle decides within `cap` and the
/// growth search beyond it.
pub fn rooted_k4(g: &Graph, roots: [usize; 4], cap: usize) -> Result<Option<RootedMinorCert>> {
    g.check_vertices(&roots)?;
    distinct(&roots)?;
    if is_planar(&apex_graph(g, &roots)?.graph) {
        return Ok(None);
    }
    let found = if g.n() <= cap.min(64) {
        brute_force_rooted_kt(g, &roots, 4, cap)?
    } else {
        grow_k4(g, roots)
    };
    match found {
        Some(cert) => {
            let cert = minimalize(g, &cert);
            cert.check(g)
                .map_err(|e| Error::Internal(format!("rooted K4: {e}")))?;
            Ok(Some(cert))
        }
        None => Ok(None),
    }
}

/// Replaces each separator vertex `c_i` in `inner` by its attachment set
/// `A_i`, producing a certificate rooted at `roots` in `g`.
pub fn extend_k4_through_separator(
    g: &Graph,
    side_b: &[usize],
    inner: &RootedMinorCert,
    attachments: &[(usize, Vec<usize>)],
    roots: &[usize],
) -> Result<RootedMinorCert> {
    let n = g.n();
    let in_b = mark(n, side_b);
    let mut owner = vec![usize::MAX; n];
    for (k, (c, set)) in attachments.iter().enumerate() {
        if !set.contains(c) {
            return Err(Error::Attachment(format!(
                "attachment {k} does not contain {c}"
            )));
        }
        for &v in set {
            g.check_vertex(v)?;
            if in_b[v] && v != *c {
                return Err(Error::Attachment(format!(
                    "attachment {k} meets the far side at {v}"
                )));
            }
            if owner[v] != usize::MAX {
                return Err(Error::Attachment(format!(
                    "attachments {} and {k} share {v}",
                    owner[v]
                )));
            }
            owner[v] = k;
        }
    }
    let sets = inner
        .branch_sets
        .iter()
        .map(|set| {
            let mut out = BTreeSet::new();
            for &v in set {
                match attachments.iter().find(|(c, _)| *c == v) {
                    Some((_, a)) => out.extend(a.iter().copied()),
                    None => {
                        out.insert(v);
                    }
                }
            }
            out.into_iter().collect()
        })
        .collect();
    let cert = RootedMinorCert::new(sets, roots);
    cert.check(g)?;
    Ok(cert)
}

/// Three disjoint paths inside `side_a` from `sources` to `separator`,
/// ordered to minimise `dist(P1, P2) + dist(P2, P3)` (ties: lexicographic
/// order of the permutation). The middle attachment is grown to the
/// component of `G[A] - (P1 ∪ P3)` holding `P2`. Returns `(c_i, A_i)` pairs.
pub fn cherry_attachments(
    g: &Graph,
    side_a: &[usize],
    sources: [usize; 3],
    separator: [usize; 3],
) -> Result<Vec<(usize, Vec<usize>)>> {
    let (h, map) = g.induced(side_a)?;
    let local = |v: usize| {
        map.new_id(v)
            .ok_or_else(|| Error::Attachment(format!("{v} is not in A")))
    };
    let src: Vec<usize> = sources.iter().map(|&v| local(v)).collect::<Result<_>>()?;
    let sep: Vec<usize> = separator.iter().map(|&v| local(v)).collect::<Result<_>>()?;
    let paths = disjoint_paths_between_sets(&h, &src, &sep, 3)?;
    if paths.len() < 3 {
        return Err(Error::Attachment(
            "fewer than three disjoint paths to the separator".into(),
        ));
    }
    let none_blocked = vec![false; h.n()];
    let dist = |x: &[usize], y: &[usize]| {
        h.shortest_path_between(x, y, &none_blocked)
            .map_or(usize::MAX / 4, |p| p.len())
    };
    let perms = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let best = perms
        .iter()
        .min_by_key(|p| {
            let [a, b, c] = **p;
            dist(paths[a].vertices(), paths[b].vertices())
                + dist(paths[b].vertices(), paths[c].vertices())
        })
        .unwrap();
    let (p1, p2, p3) = (&paths[best[0]], &paths[best[1]], &paths[best[2]]);
    let mut removed = vec![false; h.n()];
    for &v in p1.vertices().iter().chain(p3.vertices()) {
        removed[v] = true;
    }
    let a2 = h
        .components_avoiding(&removed)
        .into_iter()
        .find(|c| c.binary_search(&p2.first()).is_ok())
        .expect("P2 avoids P1 and P3");
    if !h.sets_adjacent(&a2, p1.vertices()) || !h.sets_adjacent(&a2, p3.vertices()) {
        return Err(Error::Attachment(
            "middle attachment does not touch both outer paths".into(),
        ));
    }
    let to_old = |set: &[usize]| -> Vec<usize> {
        let mut out: Vec<usize> = set.iter().map(|&v| map.preimage(v)[0]).collect();
        out.sort_unstable();
        out
    };
    Ok(vec![
        (map.preimage(p1.last())[0], to_old(p1.vertices())),
        (map.preimage(p2.last())[0], to_old(&a2)),
        (map.preimage(p3.last())[0], to_old(p3.vertices())),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn singletons(n: usize) -> Vec<Vec<usize>> {
        (0..n).map(|v| vec![v]).collect()
    }

    #[test]
    fn verify_examples() {
        let k4 = complete(4);
        assert!(verify_cert(
            &k4,
            &RootedMinorCert::new(singletons(4), &[0, 1, 2, 3])
        ));
        assert!(!verify_cert(
            &cycle(4),
            &RootedMinorCert::new(singletons(4), &[0, 1, 2, 3])
        ));
        let w5 = wheel(5);
        let cert = RootedMinorCert::new(
            vec![vec![0], vec![1], vec![2, 3], vec![4, 5]],
            &[0, 1, 2, 4],
        );
        assert!(verify_cert(&w5, &cert));
        let missing_root = RootedMinorCert::new(
            vec![vec![0], vec![1], vec![2, 3], vec![4, 5]],
            &[0, 1, 2, 3],
        );
        assert!(!verify_cert(&w5, &missing_root));
    }

    #[test]
    fn oracle_examples() {
        let cert = brute_force_rooted_kt(&complete(4), &[0, 1, 2, 3], 4, 12)
            .unwrap()
            .unwrap();
        assert_eq!(cert.branch_sets, singletons(4));
        assert!(brute_force_rooted_kt(&cycle(4), &[0, 1, 2, 3], 4, 12)
            .unwrap()
            .is_none());
        let w5 = wheel(5);
        let roots: Vec<usize> = w5.vertices().collect();
        assert!(brute_force_rooted_kt(&w5, &roots, 4, 12)
            .unwrap()
            .unwrap()
            .is_valid(&w5));
        assert!(matches!(
            brute_force_rooted_kt(&cycle(13), &[0], 3, 12),
            Err(Error::OracleCap { n: 13, cap: 12 })
        ));
    }

    #[test]
    fn rooted_k3_examples() {
        let tri = complete(3);
        assert_eq!(
            rooted_k3(&tri, 0, 1, 2, 12).unwrap().unwrap().branch_sets,
            singletons(3)
        );
        assert!(rooted_k3(&star(3), 1, 2, 3, 12).unwrap().is_none());
        let c5 = cycle(5);
        let cert = rooted_k3(&c5, 0, 2, 4, 12).unwrap().unwrap();
        assert!(cert.is_valid(&c5));
        assert_eq!(cert.branch_sets.iter().map(Vec::len).sum::<usize>(), 5);
        assert!(matches!(
            rooted_k3(&c5, 0, 0, 4, 12),
            Err(Error::RootsNotDistinct)
        ));
    }

    #[test]
    fn rooted_k3_through_cut_vertices() {
        // Triangle 0-1-2 with a pendant path 2-3-4 and root 4.
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)]).unwrap();
        assert!(rooted_k3(&g, 0, 1, 4, 12).unwrap().is_some());
        assert!(rooted_k3(&g, 0, 3, 4, 12).unwrap().is_none());
        let theta = theta(3);
        assert!(rooted_k3(&theta, 2, 3, 4, 12)
            .unwrap()
            .unwrap()
            .is_valid(&theta));
    }

    #[test]
    fn rooted_k4_examples() {
        assert_eq!(
            rooted_k4(&complete(4), [0, 1, 2, 3], 12)
                .unwrap()
                .unwrap()
                .branch_sets,
            singletons(4)
        );
        assert!(rooted_k4(&cycle(4), [0, 1, 2, 3], 12).unwrap().is_none());
        let w5 = wheel(5);
        assert!(rooted_k4(&w5, [0, 1, 3, 5], 12)
            .unwrap()
            .unwrap()
            .is_valid(&w5));
    }

    #[test]
    fn growth_search_agrees_with_oracle_on_small_cases() {
        let graphs = [
            wheel(5),
            wheel(6),
            octahedron(),
            moser_spindle(),
            petersen(),
            complete(5),
        ];
        for g in &graphs {
            let n = g.n();
            for a in 0..n.min(4) {
                let roots = [a, (a + 1) % n, (a + 3) % n, (a + 5) % n];
                if distinct(&roots).is_err() {
                    continue;
                }
                let fast = grow_k4(g, roots);
                let slow = brute_force_rooted_kt(g, &roots, 4, 12).unwrap();
                assert_eq!(fast.is_some(), slow.is_some(), "{g:?} {roots:?}");
                if let Some(c) = fast {
                    assert!(c.is_valid(g));
                }
            }
        }
    }

    #[test]
    fn minimalize_shrinks() {
        let g = complete(5);
        let fat = RootedMinorCert::new(vec![vec![0, 4], vec![1], vec![2], vec![3]], &[]);
        let thin = minimalize(&g, &fat);
        assert!(thin.is_valid(&g));
        assert!(thin.branch_sets.iter().all(|s| s.len() == 1));
    }

    #[test]
    fn extend_identity_and_errors() {
        let g = complete(4);
        let inner = RootedMinorCert::new(singletons(4), &[0, 1, 2, 3]);
        let atts = vec![(0, vec![0]), (1, vec![1]), (2, vec![2])];
        let out =
            extend_k4_through_separator(&g, &[0, 1, 2, 3], &inner, &atts, &[0, 1, 2, 3]).unwrap();
        assert_eq!(out, inner);
        let bad = vec![(0, vec![0, 3])];
        assert!(matches!(
            extend_k4_through_separator(&g, &[0, 1, 2, 3], &inner, &bad, &[0, 1, 2, 3]),
            Err(Error::Attachment(_))
        ));
    }

    #[test]
    fn extend_along_wheel_spokes() {
        // Triangle 0-1-2 plus a hub 3 on the B side; the A side has rim
        // vertices 4, 5, 6 each hanging off one corner, and roots on the rim.
        let g = Graph::from_edges(
            7,
            &[
                (0, 1),
                (1, 2),
                (0, 2),
                (0, 3),
                (1, 3),
                (2, 3),
                (0, 4),
                (1, 5),
                (2, 6),
                (4, 5),
                (5, 6),
            ],
        )
        .unwrap();
        let inner = RootedMinorCert::new(singletons(4), &[0, 1, 2, 3]);
        let atts = vec![(0, vec![0, 4]), (1, vec![1, 5]), (2, vec![2, 6])];
        let out =
            extend_k4_through_separator(&g, &[0, 1, 2, 3], &inner, &atts, &[3, 4, 5, 6]).unwrap();
        assert!(out.is_valid(&g));
        assert_eq!(out.branch_sets[0], vec![0, 4]);
    }

    #[test]
    fn cherry_on_a_ladder() {
        // A side: separator 0, 1, 2 and sources 3, 4, 5 on a path 3-4-5 with
        // rungs 3-0, 4-1, 5-2.
        let g = Graph::from_edges(
            7,
            &[
                (3, 4),
                (4, 5),
                (3, 0),
                (4, 1),
                (5, 2),
                (0, 6),
                (1, 6),
                (2, 6),
            ],
        )
        .unwrap();
        let atts = cherry_attachments(&g, &[0, 1, 2, 3, 4, 5], [3, 4, 5], [0, 1, 2]).unwrap();
        assert_eq!(atts.len(), 3);
        assert_eq!(atts[1].0, 1);
        assert!(g.sets_adjacent(&atts[1].1, &atts[0].1));
        assert!(g.sets_adjacent(&atts[1].1, &atts[2].1));
    }
}
