//! The dichotomy solver: a recursion over separations of order at most three
//! that ends either in a planar apex graph or in a rooted `K4` search.
//!
//! Every level fixes a proper 4-coloring of its graph and passes the induced
//! coloring to the smaller instances it builds, so that identifications and
//! added edges always keep them 4-colorable.

mod k5;
mod trace;

pub use k5::{is_vertex_critical, k5_singleton, K5Outcome};
pub use trace::{ReductionCase, ReductionTrace, TraceRecord};

use crate::coloring::{find_coloring, match_permutation, ColoringCert, ProperColoring};
use crate::error::{Error, Result};
use crate::graph::{
    disjoint_paths_between_sets, fan_paths, mark, separations_up_to_order, Graph, IdMap, Separation,
};
use crate::minors::{
    brute_force_rooted_kt, minimalize, rooted_k3, rooted_k4, RootedMinorCert, DEFAULT_ORACLE_CAP,
};
use crate::planar::{apex_graph, is_planar, kuratowski_subgraph};
use std::collections::BTreeSet;

const K: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Spread {
    Spread,
    Violation(Separation),
}

/// Whether every order-3 separation leaves a root outside each side. On
/// failure the first violating separation in canonical order is returned.
pub fn spread_out(g: &Graph, roots: &[usize]) -> Result<Spread> {
    g.check_vertices(roots)?;
    if !g.is_k_connected(3) {
        return Err(Error::NotConnected(3));
    }
    Ok(first_violation(g, roots).map_or(Spread::Spread, Spread::Violation))
}

/// Per separator `X` (lexicographic), the smallest component selection that
/// puts all roots on one side: none at all when the first component is
/// root-free, otherwise exactly the rooted components.
fn first_violation(g: &Graph, roots: &[usize]) -> Option<Separation> {
    let n = g.n();
    let in_s = mark(n, roots);
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let x = [i, j, k];
                let comps = g.components_avoiding(&mark(n, &x));
                if comps.len() < 2 {
                    continue;
                }
                let touched: Vec<bool> = comps.iter().map(|c| c.iter().any(|&v| in_s[v])).collect();
                let to_a: Vec<bool> = if !touched[0] {
                    vec![false; comps.len() - 1]
                } else if touched[1..].iter().all(|&t| t) {
                    continue;
                } else {
                    touched[1..].to_vec()
                };
                let mut a: BTreeSet<usize> = x.into_iter().collect();
                let mut b = a.clone();
                a.extend(comps[0].iter().copied());
                for (c, &left) in comps[1..].iter().zip(&to_a) {
                    if left {
                        a.extend(c.iter().copied());
                    } else {
                        b.extend(c.iter().copied());
                    }
                }
                return Some(Separation { a, b });
            }
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveOutcome {
    Minor(RootedMinorCert),
    Avoiding(ColoringCert),
}

impl SolveOutcome {
    /// Checks the outcome against `g` and the (sorted, deduplicated) roots.
    pub fn validate(&self, g: &Graph, roots: &[usize]) -> Result<()> {
        let mut want = roots.to_vec();
        want.sort_unstable();
        want.dedup();
        match self {
            SolveOutcome::Minor(cert) => {
                if cert.t() != K {
                    return Err(Error::InvalidCertificate(format!(
                        "expected 4 branch sets, got {}",
                        cert.t()
                    )));
                }
                if cert.roots != want {
                    return Err(Error::InvalidCertificate(
                        "certificate roots differ from S".into(),
                    ));
                }
                cert.check(g)
            }
            SolveOutcome::Avoiding(cert) => {
                if cert.coloring.k() != K {
                    return Err(Error::InvalidCertificate(
                        "coloring must use the palette 0..4".into(),
                    ));
                }
                let mut got = cert.roots.clone();
                got.sort_unstable();
                got.dedup();
                if got != want {
                    return Err(Error::InvalidCertificate(
                        "certificate roots differ from S".into(),
                    ));
                }
                cert.validate(g)
            }
        }
    }

    pub fn is_minor(&self) -> bool {
        matches!(self, SolveOutcome::Minor(_))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    /// Graphs up to this size use the exhaustive oracle in the base case.
    pub oracle_cap: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            oracle_cap: DEFAULT_ORACLE_CAP,
        }
    }
}

pub fn solve(g: &Graph, roots: &[usize]) -> Result<(SolveOutcome, ReductionTrace)> {
    solve_with(g, roots, &SolveOptions::default())
}

pub fn solve_with(
    g: &Graph,
    roots: &[usize],
    opts: &SolveOptions,
) -> Result<(SolveOutcome, ReductionTrace)> {
    g.check_vertices(roots)?;
    let mut s = roots.to_vec();
    s.sort_unstable();
    s.dedup();
    let c = find_coloring(g, K).ok_or(Error::ChromaticNumberExceeds(K))?;
    let mut solver = Solver {
        cap: opts.oracle_cap,
        limit: g.n(),
        records: Vec::new(),
    };
    let out = solver.rec(g, &s, c.colors(), 0)?;
    let outcome = match out {
        Out::Minor(sets) => SolveOutcome::Minor(minimalize(g, &RootedMinorCert::new(sets, &s))),
        Out::Avoid(colors) => {
            let coloring = ProperColoring::new(g, colors, K)?;
            let missing = coloring
                .first_missing_on(&s)
                .ok_or_else(|| Error::Internal("coloring uses every color on S".into()))?;
            SolveOutcome::Avoiding(ColoringCert {
                coloring,
                missing_color: missing,
                roots: s.clone(),
            })
        }
    };
    outcome
        .validate(g, &s)
        .map_err(|e| Error::Internal(format!("final outcome: {e}")))?;
    Ok((
        outcome,
        ReductionTrace {
            records: solver.records,
        },
    ))
}

/// Result of one level: branch sets of an `S`-rooted `K4`, or a proper
/// 4-coloring in which color 0 is absent from `S`.
enum Out {
    Minor(Vec<Vec<usize>>),
    Avoid(Vec<usize>),
}

/// Recolors so that `missing` becomes 0.
fn swap_to_zero(colors: &[usize], missing: usize) -> Vec<usize> {
    colors
        .iter()
        .map(|&x| {
            if x == missing {
                0
            } else if x == 0 {
                missing
            } else {
                x
            }
        })
        .collect()
}

fn perm(constraints: &[(usize, usize)], avoid: Option<(usize, usize)>) -> Result<Vec<usize>> {
    match_permutation(constraints, avoid, K)
        .ok_or_else(|| Error::Internal("no color permutation fits".into()))
}

fn internal<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Internal(msg.into()))
}

/// A smaller instance built from one side of a separation.
struct Derived {
    g: Graph,
    map: IdMap,
    roots: Vec<usize>,
    colors: Vec<usize>,
    /// Parent vertex sets standing in for a derived vertex when lifting a
    /// minor; vertices without an entry lift to their preimage.
    subst: Vec<Option<Vec<usize>>>,
}

impl Derived {
    /// `G[side]`, then `class` merged into one vertex, then `extra` edges
    /// (parent ids) added. `roots` are parent ids; those outside `side` drop.
    fn build(
        g: &Graph,
        side: &[usize],
        class: &[usize],
        extra: &[(usize, usize)],
        roots: &[usize],
        c: &[usize],
    ) -> Result<Self> {
        let (h, m1) = g.induced(side)?;
        let (h, map) = if class.len() >= 2 {
            let (h2, m2) = h.identify_set(&m1.image_of(class))?;
            (h2, m1.then(&m2))
        } else {
            (h, m1)
        };
        let edges: Vec<(usize, usize)> = extra
            .iter()
            .map(|&(a, b)| (map.new_id(a).unwrap(), map.new_id(b).unwrap()))
            .filter(|(a, b)| a != b)
            .collect();
        let h = if edges.is_empty() {
            h
        } else {
            h.with_edges_added(&edges)?
        };
        let colors: Vec<usize> = (0..h.n()).map(|w| c[map.preimage(w)[0]]).collect();
        if (0..h.n()).any(|w| map.preimage(w).iter().any(|&p| c[p] != colors[w])) {
            return internal("identified vertices carry different colors");
        }
        let roots = map.image_of(roots);
        Ok(Derived {
            subst: vec![None; h.n()],
            g: h,
            map,
            roots,
            colors,
        })
    }

    fn id(&self, parent: usize) -> usize {
        self.map.new_id(parent).expect("vertex lies on this side")
    }

    fn set_subst(&mut self, parent: usize, set: Vec<usize>) {
        let w = self.id(parent);
        self.subst[w] = Some(set);
    }

    fn lift(&self, sets: &[Vec<usize>]) -> Vec<Vec<usize>> {
        sets.iter()
            .map(|set| {
                let mut out = BTreeSet::new();
                for &w in set {
                    match &self.subst[w] {
                        Some(rep) => out.extend(rep.iter().copied()),
                        None => out.extend(self.map.preimage(w).iter().copied()),
                    }
                }
                out.into_iter().collect()
            })
            .collect()
    }

    fn color(&self, colors: &[usize], parent: usize) -> usize {
        colors[self.id(parent)]
    }
}

fn intersect(s: &[usize], side: &BTreeSet<usize>) -> Vec<usize> {
    s.iter().copied().filter(|v| side.contains(v)).collect()
}

fn with(mut v: Vec<usize>, extra: &[usize]) -> Vec<usize> {
    v.extend_from_slice(extra);
    v.sort_unstable();
    v.dedup();
    v
}

fn union(sets: &[&[usize]]) -> Vec<usize> {
    let all: BTreeSet<usize> = sets.iter().flat_map(|s| s.iter().copied()).collect();
    all.into_iter().collect()
}

/// Disjoint paths from the roots on `side` to `u` and `v`, joined by a path
/// between them: returns `(X_u, X_v)`, connected, disjoint and adjacent,
/// with `u ∈ X_u`, `v ∈ X_v`, each meeting the roots.
fn k2_attachments(
    g: &Graph,
    side: &[usize],
    roots: &[usize],
    u: usize,
    v: usize,
) -> Result<(Vec<usize>, Vec<usize>)> {
    let (h, m) = g.induced(side)?;
    let src = m.image_of(roots);
    let (lu, lv) = (m.new_id(u).unwrap(), m.new_id(v).unwrap());
    let paths = disjoint_paths_between_sets(&h, &src, &[lu, lv], 2)?;
    if paths.len() < 2 {
        return internal("fewer than two root paths to the 2-separator");
    }
    let (pu, pv) = if paths[0].last() == lu {
        (&paths[0], &paths[1])
    } else {
        (&paths[1], &paths[0])
    };
    let mut blocked = vec![false; h.n()];
    for &x in pu.vertices().iter().chain(pv.vertices()) {
        blocked[x] = true;
    }
    let link = h
        .shortest_path_between(pu.vertices(), pv.vertices(), &blocked)
        .ok_or_else(|| Error::Internal("sides of a 2-separation must be connected".into()))?;
    let back = |xs: &[usize]| -> Vec<usize> { xs.iter().map(|&x| m.preimage(x)[0]).collect() };
    let xu = back(pu.vertices());
    let xv = union(&[&back(pv.vertices()), &back(&link.vertices()[1..])]);
    Ok((union(&[&xu]), xv))
}

struct Solver {
    cap: usize,
    limit: usize,
    records: Vec<TraceRecord>,
}

impl Solver {
    fn record(
        &mut self,
        depth: usize,
        case: ReductionCase,
        sep: Option<Separation>,
        g: &Graph,
        s: &[usize],
    ) {
        self.records.push(TraceRecord {
            depth,
            case,
            separation: sep,
            stage_n: g.n(),
            stage_edges: g.edges(),
            roots: s.to_vec(),
        });
    }

    fn rec(&mut self, g: &Graph, s: &[usize], c: &[usize], depth: usize) -> Result<Out> {
        if depth > self.limit {
            return internal("recursion deeper than the vertex count");
        }
        let first = self.records.len();
        let out = self.step(g, s, c, depth)?;
        let case = self.records.get(first).map_or("?", |r| r.case.label());
        match &out {
            Out::Minor(sets) => {
                let cert = RootedMinorCert::new(sets.clone(), s);
                if cert.t() != K {
                    return internal(format!(
                        "{case} at depth {depth}: wrong number of branch sets"
                    ));
                }
                cert.check(g)
                    .map_err(|e| Error::Internal(format!("{case} at depth {depth}: {e}")))?;
            }
            Out::Avoid(colors) => {
                ProperColoring::new(g, colors.clone(), K)
                    .map_err(|e| Error::Internal(format!("{case} at depth {depth}: {e}")))?;
                if let Some(&r) = s.iter().find(|&&r| colors[r] == 0) {
                    return internal(format!("{case} at depth {depth}: root {r} has color 0"));
                }
            }
        }
        Ok(out)
    }

    fn step(&mut self, g: &Graph, s: &[usize], c: &[usize], depth: usize) -> Result<Out> {
        if s.len() <= 3 {
            self.record(depth, ReductionCase::FewRoots, None, g, s);
            let missing = (0..K).find(|&j| s.iter().all(|&v| c[v] != j)).unwrap();
            return Ok(Out::Avoid(swap_to_zero(c, missing)));
        }
        let comps = g.components();
        if comps.len() > 1 {
            return self.conn(g, s, c, depth, &comps);
        }
        if let Some(sep) = separations_up_to_order(g, 2).next() {
            return if sep.order() == 1 {
                self.cut1(g, s, c, depth, sep)
            } else {
                self.cut2(g, s, c, depth, sep)
            };
        }
        if let Some(sep) = first_violation(g, s) {
            return self.cut3(g, s, c, depth, sep);
        }
        self.base(g, s, depth)
    }

    fn conn(
        &mut self,
        g: &Graph,
        s: &[usize],
        c: &[usize],
        depth: usize,
        comps: &[Vec<usize>],
    ) -> Result<Out> {
        let a = comps[0].clone();
        let mut b = comps[1..].concat();
        b.sort_unstable();
        self.record(
            depth,
            ReductionCase::Conn,
            Some(Separation::new(a.clone(), b.clone())),
            g,
            s,
        );
        let da = Derived::build(g, &a, &[], &[], s, c)?;
        let ca = match self.rec(&da.g, &da.roots, &da.colors, depth + 1)? {
            Out::Minor(sets) => return Ok(Out::Minor(da.lift(&sets))),
            Out::Avoid(ca) => ca,
        };
        let db = Derived::build(g, &b, &[], &[], s, c)?;
        let cb = match self.rec(&db.g, &db.roots, &db.colors, depth + 1)? {
            Out::Minor(sets) => return Ok(Out::Minor(db.lift(&sets))),
            Out::Avoid(cb) => cb,
        };
        let mut colors = vec![0; g.n()];
        for &v in &a {
            colors[v] = da.color(&ca, v);
        }
        for &v in &b {
            colors[v] = db.color(&cb, v);
        }
        Ok(Out::Avoid(colors))
    }

    fn cut1(
        &mut self,
        g: &Graph,
        s: &[usize],
        c: &[usize],
        depth: usize,
        sep: Separation,
    ) -> Result<Out> {
        let v = sep.separator()[0];
        let n = g.n();
        let (s_a, s_b) = (intersect(s, &sep.a), intersect(s, &sep.b));
        if s_a.is_empty() || s_b.is_empty() {
            // All roots sit strictly on one side; recurse there only.
            let sep = if s_b.is_empty() { sep } else { sep.swapped() };
            self.record(depth, ReductionCase::Cut1, Some(sep.clone()), g, s);
            let da = Derived::build(g, &sep.a_vec(), &[], &[], s, c)?;
            let ca = match self.rec(&da.g, &da.roots, &da.colors, depth + 1)? {
                Out::Minor(sets) => return Ok(Out::Minor(da.lift(&sets))),
                Out::Avoid(ca) => ca,
            };
            let pi = perm(&[(c[v], da.color(&ca, v))], None)?;
            let mut colors: Vec<usize> = c.iter().map(|&x| pi[x]).collect();
            for &x in &sep.a {
                colors[x] = da.color(&ca, x);
            }
            return Ok(Out::Avoid(colors));
        }

        self.record(depth, ReductionCase::Cut1, Some(sep.clone()), g, s);
        // A minor found on one side reaches the other side's roots along a
        // path from v.
        let lift_through =
            |d: &Derived, sets: &[Vec<usize>], far: &BTreeSet<usize>, far_roots: &[usize]| {
                let mut lifted = d.lift(sets);
                if let Some(set) = lifted.iter_mut().find(|set| set.contains(&v)) {
                    let blocked: Vec<bool> = (0..n).map(|x| !far.contains(&x)).collect();
                    let p = g
                        .shortest_path_between(&[v], far_roots, &blocked)
                        .ok_or_else(|| {
                            Error::Internal("cut vertex cannot reach the far roots".into())
                        })?;
                    set.extend(p.vertices().iter().copied());
                    set.sort_unstable();
                    set.dedup();
                }
                Ok::<_, Error>(lifted)
            };
        let da = Derived::build(g, &sep.a_vec(), &[], &[], &with(s_a.clone(), &[v]), c)?;
        let ca = match self.rec(&da.g, &da.roots, &da.colors, depth + 1)? {
            Out::Minor(sets) => return Ok(Out::Minor(lift_through(&da, &sets, &sep.b, &s_b)?)),
            Out::Avoid(ca) => ca,
        };
        let db = Derived::build(g, &sep.b_vec(), &[], &[], &with(s_b.clone(), &[v]), c)?;
        let cb = match self.rec(&db.g, &db.roots, &db.colors, depth + 1)? {
            Out::Minor(sets) => return Ok(Out::Minor(lift_through(&db, &sets, &sep.a, &s_a)?)),
            Out::Avoid(cb) => cb,
        };
        let pi = perm(&[(0, 0), (db.color(&cb, v), da.color(&ca, v))], None)?;
        let mut colors = vec![0; n];
        for &x in &sep.b {
            colors[x] = pi[db.color(&cb, x)];
        }
        for &x in &sep.a {
            colors[x] = da.color(&ca, x);
        }
        Ok(Out::Avoid(colors))
    }

    fn cut2(
        &mut self,
        g: &Graph,
        s: &[usize],
        c: &[usize],
        depth: usize,
        sep: Separation,
    ) -> Result<Out> {
        let sepr = sep.separator();
        let (u, v) = (sepr[0], sepr[1]);
        let (s_a, s_b) = (intersect(s, &sep.a), intersect(s, &sep.b));
        if s_a.len() >= 2 && s_b.len() >= 2 {
            self.record(depth, ReductionCase::Cut2Case1, Some(sep.clone()), g, s);
            return self.cut2_case1(g, c, depth, &sep, u, v, &s_a, &s_b);
        }
        let sep = if s_b.len() <= 1 { sep } else { sep.swapped() };
        self.record(depth, ReductionCase::Cut2Case2, Some(sep.clone()), g, s);
        self.cut2_case2(g, s, c, depth, &sep, u, v)
    }

    #[allow(clippy::too_many_arguments)]
    fn cut2_case1(
        &mut self,
        g: &Graph,
        c: &[usize],
        depth: usize,
        sep: &Separation,
        u: usize,
        v: usize,
        s_a: &[usize],
        s_b: &[usize],
    ) -> Result<Out> {
        let (a, b) = (sep.a_vec(), sep.b_vec());
        let (xu_a, xv_a) = k2_attachments(g, &a, s_a, u, v)?;
        let (xu_b, xv_b) = k2_attachments(g, &b, s_b, u, v)?;
        let n = g.n();
        let mut colors = vec![0; n];
        if c[u] != c[v] {
            let mut da = Derived::build(g, &a, &[], &[(u, v)], &with(s_a.to_vec(), &[u, v]), c)?;
            da.set_subst(u, xu_b);
            da.set_subst(v, xv_b);
            let ca = match self.rec(&da.g, &da.roots, &da.colors, depth + 1)? {
                Out::Minor(sets) => return Ok(Out::Minor(da.lift(&sets))),
                Out::Avoid(ca) => ca,
            };
            let mut db = Derived::build(g, &b, &[], &[(u, v)], &with(s_b.to_vec(), &[u, v]), c)?;
            db.set_subst(u, xu_a);
            db.set_subst(v, xv_a);
            let cb = match self.rec(&db.g, &db.roots, &db.colors, depth + 1)? {
                Out::Minor(sets) => return Ok(Out::Minor(db.lift(&sets))),
                Out::Avoid(cb) => cb,
            };
            let pi = perm(
                &[
                    (0, 0),
                    (db.color(&cb, u), da.color(&ca, u)),
                    (db.color(&cb, v), da.color(&ca, v)),
                ],
                None,
            )?;
            for &x in &b {
                colors[x] = pi[db.color(&cb, x)];
            }
            for &x in &a {
                colors[x] = da.color(&ca, x);
            }
        } else {
            let mut da = Derived::build(g, &a, &[u, v], &[], &with(s_a.to_vec(), &[u]), c)?;
            da.set_subst(u, union(&[&xu_b, &xv_b]));
            let ca = match self.rec(&da.g, &da.roots, &da.colors, depth + 1)? {
                Out::Minor(sets) => return Ok(Out::Minor(da.lift(&sets))),
                Out::Avoid(ca) => ca,
            };
            let mut db = Derived::build(g, &b, &[u, v], &[], &with(s_b.to_vec(), &[u]), c)?;
            db.set_subst(u, union(&[&xu_a, &xv_a]));
            let cb = match self.rec(&db.g, &db.roots, &db.colors, depth + 1)? {
                Out::Minor(sets) => return Ok(Out::Minor(db.lift(&sets))),
                Out::Avoid(cb) => cb,
            };
            let pi = perm(&[(0, 0), (db.color(&cb, u), da.color(&ca, u))], None)?;
            for &x in &b {
                colors[x] = pi[db.color(&cb, x)];
            }
            for &x in &a {
                colors[x] = da.color(&ca, x);
            }
        }
        Ok(Out::Avoid(colors))
    }

    /// At most one root lies in `B` (the side of `sep`).
    #[allow(clippy::too_many_arguments)]
    fn cut2_case2(
        &mut self,
        g: &Graph,
        s: &[usize],
        c: &[usize],
        depth: usize,
        sep: &Separation,
        u: usize,
        v: usize,
    ) -> Result<Out> {
        let n = g.n();
        let a = sep.a_vec();
        let b_only: BTreeSet<usize> = sep.b_only().into_iter().collect();
        let outside: Vec<bool> = (0..n).map(|x| !b_only.contains(&x)).collect();
        let p = g
            .shortest_path_between(&[u], &[v], &outside)
            .ok_or_else(|| Error::Internal("no u-v path through B".into()))?;
        let p = p.vertices().to_vec();
        let root_b = s.iter().copied().find(|x| b_only.contains(x));
        let fan = match root_b {
            Some(r) => {
                let paths = fan_paths(g, r, &[u, v], 2)?;
                if paths.len() < 2 {
                    return internal("fewer than two paths from the B-root to the separator");
                }
                union(&[paths[0].vertices(), paths[1].vertices()])
            }
            None => Vec::new(),
        };
        let touches_b = s.iter().any(|x| sep.b.contains(x));
        let s_a = intersect(s, &sep.a);

        let ca;
        let da;
        let mut pairs = Vec::new();
        if c[u] == c[v] {
            let roots = if touches_b { with(s_a, &[u]) } else { s_a };
            let mut d = Derived::build(g, &a, &[u, v], &[], &roots, c)?;
            d.set_subst(
                u,
                if root_b.is_some() {
                    fan.clone()
                } else {
                    p.clone()
                },
            );
            ca = match self.rec(&d.g, &d.roots, &d.colors, depth + 1)? {
                Out::Minor(sets) => return Ok(Out::Minor(d.lift(&sets))),
                Out::Avoid(ca) => ca,
            };
            pairs.push((c[u], d.color(&ca, u)));
            da = d;
        } else {
            let without = |w: usize, xs: &[usize]| -> Vec<usize> {
                xs.iter().copied().filter(|&x| x != w).collect()
            };
            let (roots, w, extra) = match root_b {
                Some(r) if c[r] == c[u] => (with(s_a, &[u]), u, without(v, &fan)),
                Some(r) if c[r] == c[v] => (with(s_a, &[v]), v, without(u, &fan)),
                _ => (s_a, u, without(v, &p)),
            };
            let mut d = Derived::build(g, &a, &[], &[(u, v)], &roots, c)?;
            d.set_subst(w, with(extra, &[w]));
            ca = match self.rec(&d.g, &d.roots, &d.colors, depth + 1)? {
                Out::Minor(sets) => return Ok(Out::Minor(d.lift(&sets))),
                Out::Avoid(ca) => ca,
            };
            pairs.push((c[u], d.color(&ca, u)));
            pairs.push((c[v], d.color(&ca, v)));
            da = d;
        }
        let pi = perm(&pairs, root_b.map(|r| (c[r], 0)))?;
        let mut colors: Vec<usize> = c.iter().map(|&x| pi[x]).collect();
        for &x in &sep.a_only() {
            colors[x] = da.color(&ca, x);
        }
        Ok(Out::Avoid(colors))
    }

    fn cut3(
        &mut self,
        g: &Graph,
        s: &[usize],
        c: &[usize],
        depth: usize,
        sep: Separation,
    ) -> Result<Out> {
        let sep = if s.iter().all(|x| sep.a.contains(x)) {
            sep
        } else {
            sep.swapped()
        };
        let a = sep.a_vec();
        let b_only = sep.b_only();
        if b_only.len() == 1 {
            let x = b_only[0];
            self.record(depth, ReductionCase::Spread, Some(sep.clone()), g, s);
            let da = Derived::build(g, &a, &[], &[], s, c)?;
            let ca = match self.rec(&da.g, &da.roots, &da.colors, depth + 1)? {
                Out::Minor(sets) => return Ok(Out::Minor(da.lift(&sets))),
                Out::Avoid(ca) => ca,
            };
            let mut colors = vec![0; g.n()];
            for &y in &a {
                colors[y] = da.color(&ca, y);
            }
            colors[x] = (0..K)
                .find(|&k| g.neighbors(x).iter().all(|&y| colors[y] != k))
                .ok_or_else(|| {
                    Error::Internal("vertex of degree at most 3 has no free color".into())
                })?;
            return Ok(Out::Avoid(colors));
        }

        let d = sep.separator();
        let (hb, mb) = g.induced(&sep.b_vec())?;
        let local: Vec<usize> = d.iter().map(|&x| mb.new_id(x).unwrap()).collect();
        let k3 = rooted_k3(&hb, local[0], local[1], local[2], self.cap)?.ok_or_else(|| {
            Error::Internal("no rooted K3 on the far side of a 3-separation".into())
        })?;
        let big: Vec<Vec<usize>> = local
            .iter()
            .map(|&l| {
                let set = k3.branch_sets.iter().find(|set| set.contains(&l)).unwrap();
                set.iter().map(|&x| mb.preimage(x)[0]).collect()
            })
            .collect();

        let cd = [c[d[0]], c[d[1]], c[d[2]]];
        let (case, mut da) = if cd[0] == cd[1] && cd[1] == cd[2] {
            let mut da = Derived::build(g, &a, &d, &[], s, c)?;
            da.set_subst(d[0], union(&[&big[0], &big[1], &big[2]]));
            (ReductionCase::Cut3Case1, da)
        } else if cd[0] == cd[1] || cd[0] == cd[2] || cd[1] == cd[2] {
            let (i, j, k) = if cd[0] == cd[1] {
                (0, 1, 2)
            } else if cd[0] == cd[2] {
                (0, 2, 1)
            } else {
                (1, 2, 0)
            };
            let mut da = Derived::build(g, &a, &[d[i], d[j]], &[(d[i], d[k])], s, c)?;
            da.set_subst(d[i], union(&[&big[i], &big[j]]));
            da.set_subst(d[k], big[k].clone());
            (ReductionCase::Cut3Case2, da)
        } else {
            let tri = [(d[0], d[1]), (d[0], d[2]), (d[1], d[2])];
            let mut da = Derived::build(g, &a, &[], &tri, s, c)?;
            for i in 0..3 {
                da.set_subst(d[i], big[i].clone());
            }
            (ReductionCase::Cut3Case3, da)
        };
        da.roots.sort_unstable();
        self.record(depth, case, Some(sep.clone()), g, s);
        let ca = match self.rec(&da.g, &da.roots, &da.colors, depth + 1)? {
            Out::Minor(sets) => return Ok(Out::Minor(da.lift(&sets))),
            Out::Avoid(ca) => ca,
        };
        let pairs: Vec<(usize, usize)> = {
            let mut ps: Vec<(usize, usize)> = d.iter().map(|&x| (da.color(&ca, x), c[x])).collect();
            ps.sort_unstable();
            ps.dedup();
            ps
        };
        let pi = perm(&pairs, None)?;
        let mut colors = c.to_vec();
        for &x in &sep.a_only() {
            colors[x] = pi[da.color(&ca, x)];
        }
        Ok(Out::Avoid(swap_to_zero(&colors, pi[0])))
    }

    fn base(&mut self, g: &Graph, s: &[usize], depth: usize) -> Result<Out> {
        let n = g.n();
        let apex = apex_graph(g, s)?;
        if is_planar(&apex.graph) {
            self.record(depth, ReductionCase::BasePlanar, None, g, s);
            let col = find_coloring(&apex.graph, K)
                .ok_or_else(|| Error::Internal("planar apex graph is not 4-colorable".into()))?;
            let j = col.color(apex.apex);
            return Ok(Out::Avoid(swap_to_zero(&col.colors()[..n], j)));
        }
        self.record(depth, ReductionCase::BaseMinor, None, g, s);
        let found = if n <= self.cap.min(64) {
            brute_force_rooted_kt(g, s, K, self.cap)?
        } else {
            self.search_subsets(g, s, &apex.graph, apex.apex)?
        };
        match found {
            Some(cert) => Ok(Out::Minor(cert.branch_sets)),
            None => internal("3-connected, spread out and non-planar apex graph, yet no rooted K4"),
        }
    }

    /// Tries the roots touched by a Kuratowski subgraph of the apex graph
    /// first, then every 4-subset of the roots in lexicographic order.
    fn search_subsets(
        &self,
        g: &Graph,
        s: &[usize],
        apex_g: &Graph,
        apex: usize,
    ) -> Result<Option<RootedMinorCert>> {
        let mut hint: Vec<usize> = kuratowski_subgraph(apex_g)
            .map(|w| {
                w.edges
                    .iter()
                    .filter_map(|&(x, y)| {
                        if y == apex {
                            Some(x)
                        } else if x == apex {
                            Some(y)
                        } else {
                            None
                        }
                    })
                    .collect()
            })
            .unwrap_or_default();
        for &r in s {
            if hint.len() >= 4 {
                break;
            }
            if !hint.contains(&r) {
                hint.push(r);
            }
        }
        hint.truncate(4);
        hint.sort_unstable();
        let try_four =
            |four: &[usize]| -> Result<Option<RootedMinorCert>> {
                let roots = [four[0], four[1], four[2], four[3]];
                Ok(rooted_k4(g, roots, self.cap)?
                    .map(|cert| RootedMinorCert::new(cert.branch_sets, s)))
            };
        if let Some(cert) = try_four(&hint)? {
            return Ok(Some(cert));
        }
        let m = s.len();
        for i in 0..m {
            for j in i + 1..m {
                for k in j + 1..m {
                    for l in k + 1..m {
                        if let Some(cert) = try_four(&[s[i], s[j], s[k], s[l]])? {
                            return Ok(Some(cert));
                        }
                    }
                }
            }
        }
        Ok(None)
    }
}
