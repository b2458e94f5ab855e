use crate::error::Result;
use crate::graph::{Graph, Separation};
use std::fmt;

/// The reduction applied at one level of the recursion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ReductionCase {
    /// At most three roots: any proper coloring misses a color on them.
    FewRoots,
    Conn,
    Cut1,
    Cut2Case1,
    Cut2Case2,
    Spread,
    Cut3Case1,
    Cut3Case2,
    Cut3Case3,
    BasePlanar,
    BaseMinor,
}

impl ReductionCase {
    pub const ALL: [ReductionCase; 11] = [
        ReductionCase::FewRoots,
        ReductionCase::Conn,
        ReductionCase::Cut1,
        ReductionCase::Cut2Case1,
        ReductionCase::Cut2Case2,
        ReductionCase::Spread,
        ReductionCase::Cut3Case1,
        ReductionCase::Cut3Case2,
        ReductionCase::Cut3Case3,
        ReductionCase::BasePlanar,
        ReductionCase::BaseMinor,
    ];

    pub fn label(self) -> &'static str {
        match self {
            ReductionCase::FewRoots => "few-roots",
            ReductionCase::Conn => "conn",
            ReductionCase::Cut1 => "cut1",
            ReductionCase::Cut2Case1 => "cut2-case1",
            ReductionCase::Cut2Case2 => "cut2-case2",
            ReductionCase::Spread => "spread",
            ReductionCase::Cut3Case1 => "cut3-case1",
            ReductionCase::Cut3Case2 => "cut3-case2",
            ReductionCase::Cut3Case3 => "cut3-case3",
            ReductionCase::BasePlanar => "base-planar",
            ReductionCase::BaseMinor => "base-minor",
        }
    }

    pub fn from_label(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.label() == s)
    }

    /// Order of the separation a record of this case carries, if any.
    pub fn separation_order(self) -> Option<usize> {
        match self {
            ReductionCase::FewRoots | ReductionCase::BasePlanar | ReductionCase::BaseMinor => None,
            ReductionCase::Conn => Some(0),
            ReductionCase::Cut1 => Some(1),
            ReductionCase::Cut2Case1 | ReductionCase::Cut2Case2 => Some(2),
            _ => Some(3),
        }
    }
}

impl fmt::Display for ReductionCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// One step of the recursion, with enough of its stage to replay it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceRecord {
    pub depth: usize,
    pub case: ReductionCase,
    pub separation: Option<Separation>,
    pub stage_n: usize,
    pub stage_edges: Vec<(usize, usize)>,
    pub roots: Vec<usize>,
}

impl TraceRecord {
    pub fn stage_graph(&self) -> Result<Graph> {
        Graph::from_edges(self.stage_n, &self.stage_edges)
    }

    /// Rebuilds the stage graph and checks the record against it.
    pub fn replay(&self) -> std::result::Result<(), String> {
        let g = self.stage_graph().map_err(|e| e.to_string())?;
        if let Some(&r) = self.roots.iter().find(|&&r| r >= g.n()) {
            return Err(format!("root {r} out of range"));
        }
        match (self.case.separation_order(), &self.separation) {
            (None, None) => Ok(()),
            (None, Some(_)) => Err(format!("{} carries a separation", self.case)),
            (Some(_), None) => Err(format!("{} lacks a separation", self.case)),
            (Some(order), Some(sep)) => {
                sep.validate(&g)?;
                if sep.order() != order {
                    return Err(format!(
                        "{} needs order {order}, got {}",
                        self.case,
                        sep.order()
                    ));
                }
                if order == 3 && !self.roots.iter().all(|r| sep.a.contains(r)) {
                    return Err(format!("{}: roots are not inside A", self.case));
                }
                if self.case == ReductionCase::Spread && sep.b_only().len() != 1 {
                    return Err("spread: B \\ A must be a single vertex".into());
                }
                Ok(())
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ReductionTrace {
    pub records: Vec<TraceRecord>,
}

impl ReductionTrace {
    pub fn cases(&self) -> Vec<ReductionCase> {
        self.records.iter().map(|r| r.case).collect()
    }

    /// Replays every record; depths must start at 0 and grow by at most one.
    pub fn replay(&self) -> std::result::Result<(), String> {
        let mut prev: Option<usize> = None;
        for (i, rec) in self.records.iter().enumerate() {
            let ok = match prev {
                None => rec.depth == 0,
                Some(p) => rec.depth <= p + 1 && rec.depth >= 1,
            };
            if !ok {
                return Err(format!("record {i}: unexpected depth {}", rec.depth));
            }
            rec.replay().map_err(|e| format!("record {i}: {e}"))?;
            prev = Some(rec.depth);
        }
        Ok(())
    }
}
