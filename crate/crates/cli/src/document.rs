//! JSON certificate documents. Every document carries a `kind` tag; vertex
//! ids are 1-based, colors are `0..k`.

use rootminor::coloring::{ColoringCert, ProperColoring};
use rootminor::minors::RootedMinorCert;
use rootminor::planar::{CombinatorialEmbedding, KuratowskiKind, KuratowskiWitness};
use rootminor::solver::{ReductionCase, ReductionTrace, TraceRecord};
use rootminor::{Graph, Separation};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Document {
    Minor(MinorDoc),
    Coloring(ColoringDoc),
    Trace(TraceDoc),
    Embedding(EmbeddingDoc),
    Kuratowski(KuratowskiDoc),
    Colorful(ColorfulDoc),
    NotApplicable(NotApplicableDoc),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Minor(_) => "minor",
            Document::Coloring(_) => "coloring",
            Document::Trace(_) => "trace",
            Document::Embedding(_) => "embedding",
            Document::Kuratowski(_) => "kuratowski",
            Document::Colorful(_) => "colorful",
            Document::NotApplicable(_) => "not-applicable",
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, String> {
        serde_json::from_str(text).map_err(|e| e.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorDoc {
    pub t: usize,
    pub roots: Vec<usize>,
    pub branch_sets: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub case: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringDoc {
    pub k: usize,
    pub missing_color: usize,
    pub roots: Vec<usize>,
    pub colors: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub case: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceDoc {
    pub records: Vec<RecordDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecordDoc {
    pub depth: usize,
    pub case: String,
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    pub roots: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub separation: Option<SeparationDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparationDoc {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

/// An embedding of the instance graph, or of its apex graph when `apex` is
/// set (the apex then has id `n + 1` and is adjacent to `roots`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingDoc {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub apex: Option<usize>,
    pub roots: Vec<usize>,
    pub rotation: Vec<Vec<usize>>,
    pub outer: Vec<[usize; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KuratowskiDoc {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub apex: Option<usize>,
    pub roots: Vec<usize>,
    pub subdivision: String,
    pub branch_vertices: Vec<usize>,
    pub edges: Vec<[usize; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColorfulDoc {
    pub roots: Vec<usize>,
    pub chromatic_number: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NotApplicableDoc {
    pub vertex: usize,
    pub reason: String,
    /// Coloring of the graph with `vertex` deleted, ids renumbered.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<ColoringDoc>,
}

fn up(v: &[usize]) -> Vec<usize> {
    v.iter().map(|x| x + 1).collect()
}

fn down(v: &[usize]) -> Result<Vec<usize>, String> {
    v.iter()
        .map(|&x| {
            x.checked_sub(1)
                .ok_or_else(|| "vertex ids are 1-based".to_string())
        })
        .collect()
}

fn up_pair(&(a, b): &(usize, usize)) -> [usize; 2] {
    [a + 1, b + 1]
}

fn down_pairs(v: &[[usize; 2]]) -> Result<Vec<(usize, usize)>, String> {
    v.iter()
        .map(|&[a, b]| {
            let d = down(&[a, b])?;
            Ok((d[0], d[1]))
        })
        .collect()
}

impl MinorDoc {
    pub fn from_cert(cert: &RootedMinorCert, case: Option<String>) -> Self {
        MinorDoc {
            t: cert.t(),
            roots: up(&cert.roots),
            branch_sets: cert.branch_sets.iter().map(|s| up(s)).collect(),
            case,
        }
    }

    pub fn to_cert(&self) -> Result<RootedMinorCert, String> {
        if self.t != self.branch_sets.len() {
            return Err(format!(
                "t = {} but {} branch sets",
                self.t,
                self.branch_sets.len()
            ));
        }
        let sets = self
            .branch_sets
            .iter()
            .map(|s| down(s))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(RootedMinorCert::new(sets, &down(&self.roots)?))
    }
}

impl ColoringDoc {
    pub fn from_cert(cert: &ColoringCert, case: Option<String>) -> Self {
        ColoringDoc {
            k: cert.coloring.k(),
            missing_color: cert.missing_color,
            roots: up(&cert.roots),
            colors: cert.coloring.colors().to_vec(),
            case,
        }
    }

    /// Checks properness against `g` while rebuilding the certificate.
    pub fn to_cert(&self, g: &Graph) -> Result<ColoringCert, String> {
        let coloring =
            ProperColoring::new(g, self.colors.clone(), self.k).map_err(|e| e.to_string())?;
        Ok(ColoringCert {
            coloring,
            missing_color: self.missing_color,
            roots: down(&self.roots)?,
        })
    }
}

impl TraceDoc {
    pub fn from_trace(trace: &ReductionTrace) -> Self {
        let records = trace
            .records
            .iter()
            .map(|r| RecordDoc {
                depth: r.depth,
                case: r.case.label().to_string(),
                n: r.stage_n,
                edges: r.stage_edges.iter().map(up_pair).collect(),
                roots: up(&r.roots),
                separation: r.separation.as_ref().map(|s| SeparationDoc {
                    a: up(&s.a_vec()),
                    b: up(&s.b_vec()),
                }),
            })
            .collect();
        TraceDoc { records }
    }

    pub fn to_trace(&self) -> Result<ReductionTrace, String> {
        let records = self
            .records
            .iter()
            .map(|r| {
                let case = ReductionCase::from_label(&r.case)
                    .ok_or_else(|| format!("unknown case '{}'", r.case))?;
                let separation = match &r.separation {
                    Some(s) => Some(Separation::new(down(&s.a)?, down(&s.b)?)),
                    None => None,
                };
                Ok(TraceRecord {
                    depth: r.depth,
                    case,
                    separation,
                    stage_n: r.n,
                    stage_edges: down_pairs(&r.edges)?,
                    roots: down(&r.roots)?,
                })
            })
            .collect::<Result<Vec<_>, String>>()?;
        Ok(ReductionTrace { records })
    }
}

impl EmbeddingDoc {
    pub fn from_embedding(
        n: usize,
        apex: Option<usize>,
        roots: &[usize],
        emb: &CombinatorialEmbedding,
    ) -> Self {
        EmbeddingDoc {
            n,
            apex: apex.map(|a| a + 1),
            roots: up(roots),
            rotation: emb.rotation().iter().map(|r| up(r)).collect(),
            outer: emb.outer_darts().iter().map(up_pair).collect(),
        }
    }

    pub fn to_embedding(&self) -> Result<CombinatorialEmbedding, String> {
        let rotation = self
            .rotation
            .iter()
            .map(|r| down(r))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(CombinatorialEmbedding::from_parts(
            rotation,
            down_pairs(&self.outer)?,
        ))
    }
}

impl KuratowskiDoc {
    pub fn from_witness(
        n: usize,
        apex: Option<usize>,
        roots: &[usize],
        w: &KuratowskiWitness,
    ) -> Self {
        KuratowskiDoc {
            n,
            apex: apex.map(|a| a + 1),
            roots: up(roots),
            subdivision: match w.kind {
                KuratowskiKind::K5 => "K5".into(),
                KuratowskiKind::K33 => "K33".into(),
            },
            branch_vertices: up(&w.branch_vertices),
            edges: w.edges.iter().map(up_pair).collect(),
        }
    }

    pub fn to_witness(&self) -> Result<KuratowskiWitness, String> {
        let kind = match self.subdivision.as_str() {
            "K5" => KuratowskiKind::K5,
            "K33" => KuratowskiKind::K33,
            other => return Err(format!("unknown subdivision '{other}'")),
        };
        Ok(KuratowskiWitness {
            kind,
            branch_vertices: down(&self.branch_vertices)?,
            edges: down_pairs(&self.edges)?,
        })
    }
}
