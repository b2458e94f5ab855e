use super::{solve, SolveOutcome};
use crate::coloring::{chromatic_number, ColoringCert};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::minors::RootedMinorCert;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum K5Outcome {
    /// A `K5` minor in which `{v}` is a branch set.
    Found(RootedMinorCert),
    /// The hypotheses fail. When the solver ran on `G - v` and returned a
    /// coloring, it is kept (over the ids of `G - v`).
    NotApplicable {
        reason: String,
        witness: Option<ColoringCert>,
    },
}

/// Whether `χ(g) = k` and deleting any single vertex drops it below `k`.
pub fn is_vertex_critical(g: &Graph, k: usize) -> bool {
    if chromatic_number(g, k) != Some(k) {
        return false;
    }
    g.vertices().all(|v| {
        let (h, _) = g.without_vertices(&[v]).expect("vertex in range");
        chromatic_number(&h, k - 1).is_some()
    })
}

/// For `χ(g) = 5` with `χ(g - v) = 4`, a `K5` minor having `{v}` as one
/// branch set: the neighbors of `v` are colorful in `g - v`, so the solver
/// must return a rooted `K4` there.
pub fn k5_singleton(g: &Graph, v: usize) -> Result<K5Outcome> {
    g.check_vertex(v)?;
    let not = |reason: &str| {
        Ok(K5Outcome::NotApplicable {
            reason: reason.into(),
            witness: None,
        })
    };
    if chromatic_number(g, 5) != Some(5) {
        return not("chromatic number is not 5");
    }
    let (h, map) = g.without_vertices(&[v])?;
    if chromatic_number(&h, 4).is_none() {
        return not("deleting v leaves a graph that is not 4-colorable");
    }
    let roots = map.image_of(g.neighbors(v));
    let (outcome, _) = solve(&h, &roots)?;
    match outcome {
        SolveOutcome::Avoiding(cert) => Ok(K5Outcome::NotApplicable {
            reason: "solver returned a coloring avoiding a color on N(v)".into(),
            witness: Some(cert),
        }),
        SolveOutcome::Minor(cert) => {
            let mut sets: Vec<Vec<usize>> = cert
                .branch_sets
                .iter()
                .map(|set| set.iter().map(|&x| map.preimage(x)[0]).collect())
                .collect();
            sets.push(vec![v]);
            let mut roots = g.neighbors(v).to_vec();
            roots.push(v);
            let cert = RootedMinorCert::new(sets, &roots);
            if cert.t() != 5 {
                return Err(Error::Internal(
                    "lifted minor does not have five branch sets".into(),
                ));
            }
            cert.check(g)?;
            Ok(K5Outcome::Found(cert))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn k5_in_k5() {
        match k5_singleton(&complete(5), 0).unwrap() {
            K5Outcome::Found(cert) => {
                assert_eq!(cert.t(), 5);
                assert!(cert.branch_sets.contains(&vec![0]));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn not_applicable_cases() {
        assert!(matches!(
            k5_singleton(&complete(4), 0).unwrap(),
            K5Outcome::NotApplicable { .. }
        ));
        // K6 has chromatic number 6.
        assert!(matches!(
            k5_singleton(&complete(6), 0).unwrap(),
            K5Outcome::NotApplicable { .. }
        ));
    }

    #[test]
    fn criticality() {
        assert!(is_vertex_critical(&complete(5), 5));
        assert!(is_vertex_critical(&cycle(5), 3));
        assert!(!is_vertex_critical(&cycle(6), 3));
        assert!(!is_vertex_critical(&k4_with_pendant(), 4));
        let w = join(&complete(2), &cycle(5));
        assert!(is_vertex_critical(&w, 5));
        for v in w.vertices() {
            assert!(matches!(k5_singleton(&w, v).unwrap(), K5Outcome::Found(_)));
        }
    }
}
