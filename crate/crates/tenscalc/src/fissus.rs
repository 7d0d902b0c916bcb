//! Fissus planar graphs: a planar graph whose boundary legs are bracketed by
//! linear partitions, with coarse-graining and contraction.

use std::collections::BTreeMap;

use crate::error::PlanarError;
use crate::graph::{Graph, Hid, PreGraph};
use crate::oriented::{OrientedGraph, Sign};
use crate::partition::LinearPartition;
use crate::planar::PlanarGraph;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct FissusPlanarGraph {
    pub planar: PlanarGraph,
    pub p_in: LinearPartition,
    pub p_out: LinearPartition,
}

impl FissusPlanarGraph {
    pub fn new(
        planar: PlanarGraph,
        p_in: LinearPartition,
        p_out: LinearPartition,
    ) -> Result<Self, PlanarError> {
        let (m, n) = planar.arity();
        if p_in.len() != m {
            return Err(PlanarError::LengthMismatch { expected: m, got: p_in.len() });
        }
        if p_out.len() != n {
            return Err(PlanarError::LengthMismatch { expected: n, got: p_out.len() });
        }
        Ok(FissusPlanarGraph { planar, p_in, p_out })
    }

    pub fn trivial(planar: PlanarGraph) -> Self {
        let (m, n) = planar.arity();
        FissusPlanarGraph {
            planar,
            p_in: LinearPartition::trivial(m),
            p_out: LinearPartition::trivial(n),
        }
    }

    pub fn fully_fissus(planar: PlanarGraph) -> Self {
        let (m, n) = planar.arity();
        FissusPlanarGraph {
            planar,
            p_in: LinearPartition::finest(m),
            p_out: LinearPartition::finest(n),
        }
    }

    pub fn canonical_form(&self) -> FissusPlanarGraph {
        FissusPlanarGraph {
            planar: self.planar.canonical_form(),
            p_in: self.p_in.clone(),
            p_out: self.p_out.clone(),
        }
    }

    pub fn tensor(&self, other: &FissusPlanarGraph) -> FissusPlanarGraph {
        FissusPlanarGraph {
            planar: self.planar.tensor(&other.planar),
            p_in: self.p_in.product(&other.p_in),
            p_out: self.p_out.product(&other.p_out),
        }
    }

    /// Composition of fissus planar graphs: defined when the interface
    /// partitions agree; the outer partitions survive.
    pub fn compose(&self, next: &FissusPlanarGraph) -> Result<FissusPlanarGraph, PlanarError> {
        if self.p_out != next.p_in {
            return Err(PlanarError::LengthMismatch {
                expected: self.p_out.len(),
                got: next.p_in.len(),
            });
        }
        Ok(FissusPlanarGraph {
            planar: self.planar.compose(&next.planar)?,
            p_in: self.p_in.clone(),
            p_out: next.p_out.clone(),
        })
    }

    /// Apply a further pair of partitions by composition (the sigma step of
    /// the multiplication).
    pub fn refission(
        &self,
        outer_in: &LinearPartition,
        outer_out: &LinearPartition,
    ) -> Result<FissusPlanarGraph, PlanarError> {
        Ok(FissusPlanarGraph {
            planar: self.planar.clone(),
            p_in: outer_in.compose(&self.p_in)?,
            p_out: outer_out.compose(&self.p_out)?,
        })
    }
}

/// One-vertex planar graph on the given signed half-edge sequence, ordered as
/// listed; empty input yields the empty graph.
fn corolla_on(halves: Vec<(Hid, Sign)>) -> PlanarGraph {
    if halves.is_empty() {
        return PlanarGraph::empty();
    }
    let ids: Vec<Hid> = halves.iter().map(|(h, _)| h.clone()).collect();
    let g = Graph::new(PreGraph::build(ids.clone(), vec![ids.clone()], vec![]).unwrap()).unwrap();
    let sign = halves.into_iter().collect::<BTreeMap<Hid, Sign>>();
    let og = OrientedGraph::new(g, sign).unwrap();
    PlanarGraph::new(og, ids).expect("corollas are planar")
}

/// Coarse-graining: the prime (|P_in|, |P_out|)-planar graph whose half-edges
/// are the blocks of the fission structure.
pub fn coarse_grain(f: &FissusPlanarGraph) -> PlanarGraph {
    let mut halves = Vec::new();
    for k in 0..f.p_in.card() {
        halves.push((format!("I{k}"), Sign::Plus));
    }
    for k in 0..f.p_out.card() {
        halves.push((format!("O{k}"), Sign::Minus));
    }
    corolla_on(halves)
}

/// Contraction: one vertex on all boundary legs, inputs before outputs.
pub fn contraction(pg: &PlanarGraph) -> PlanarGraph {
    let ins = pg.inputs();
    let outs = pg.outputs();
    let halves = ins
        .into_iter()
        .map(|h| (h, Sign::Plus))
        .chain(outs.into_iter().map(|h| (h, Sign::Minus)))
        .collect();
    corolla_on(halves)
}

/// Fusion: coarse-graining of a prime fissus planar graph.
pub fn fuse_prime(f: &FissusPlanarGraph) -> PlanarGraph {
    coarse_grain(f)
}
