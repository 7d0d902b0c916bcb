//! Decomposition of a planar graph into essential prime layers by peeling
//! maximal vertices, plus the vertex-removal core shared with evaluation.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::PlanarError;
use crate::graph::{Graph, Hid, PreGraph};
use crate::oriented::{OrientedGraph, Reach, Sign};
use crate::planar::PlanarGraph;

/// Outcome of decomposing: invertible graphs have no layers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decomposition {
    Invertible(PlanarGraph),
    Layers(Vec<PlanarGraph>),
}

impl Decomposition {
    pub fn layers(&self) -> &[PlanarGraph] {
        match self {
            Decomposition::Invertible(_) => &[],
            Decomposition::Layers(l) => l,
        }
    }
}

/// Real-vertex blocks that are maximal under reachability.
pub fn maximal_real_vertices(pg: &PlanarGraph) -> Vec<BTreeSet<Hid>> {
    let pre = pg.oriented().pre();
    let r = Reach::new(pg.oriented());
    let real: Vec<usize> = (0..pre.blocks().len())
        .filter(|&i| !pre.is_virtual_vertex(&pre.blocks()[i]))
        .collect();
    real.iter()
        .copied()
        .filter(|&v| real.iter().all(|&w| w == v || !r.vertex_reaches(v, w)))
        .map(|v| pre.blocks()[v].clone())
        .collect()
}

/// Everything above a maximal vertex: remove the vertex, cut its inner
/// in-edges into new output legs, and replace each of its global input legs
/// by a fresh pass-through wire. The returned map sends each new wire's
/// output half back to the original leg it carries.
pub fn remove_maximal_vertex(
    pg: &PlanarGraph,
    vertex: &BTreeSet<Hid>,
) -> Result<(PlanarGraph, BTreeMap<Hid, Hid>), PlanarError> {
    let pre = pg.oriented().pre();
    let mut halves: BTreeSet<Hid> = pre.halves().difference(vertex).cloned().collect();
    let mut blocks: Vec<BTreeSet<Hid>> =
        pre.blocks().iter().filter(|b| *b != vertex).cloned().collect();
    let mut sigma: BTreeMap<Hid, Hid> = halves
        .iter()
        .map(|h| {
            let s = pre.sigma(h);
            (h.clone(), if vertex.contains(s) { h.clone() } else { s.clone() })
        })
        .collect();
    let mut sign: BTreeMap<Hid, Sign> =
        halves.iter().map(|h| (h.clone(), pg.oriented().sign(h))).collect();

    // fresh wires carrying the vertex's own global input legs
    let mut carried = BTreeMap::new();
    let mut wire_edge_of: BTreeMap<Hid, Hid> = BTreeMap::new();
    for h in vertex {
        if pre.sigma(h) == h && pg.oriented().sign(h) == Sign::Plus {
            let top = h.clone();
            let bot = format!("w:{h}");
            carried.insert(bot.clone(), h.clone());
            halves.insert(top.clone());
            halves.insert(bot.clone());
            blocks.push([top.clone(), bot.clone()].into_iter().collect());
            sigma.insert(top.clone(), bot.clone());
            sigma.insert(bot.clone(), top.clone());
            sign.insert(top.clone(), Sign::Plus);
            sign.insert(bot.clone(), Sign::Minus);
            wire_edge_of.insert(pre.edge_rep(h), top.min(bot));
        }
    }

    let kept_edges: BTreeSet<Hid> = halves.iter().map(|h| {
        let s = &sigma[h];
        if s < h { s.clone() } else { h.clone() }
    }).collect();
    let order: Vec<Hid> = pg
        .order()
        .iter()
        .filter_map(|old| {
            if let Some(w) = wire_edge_of.get(old) {
                return Some(w.clone());
            }
            // a cut in-edge keeps its smaller surviving half as rep
            let survivors: Vec<Hid> = pre
                .edge_halves(old)
                .into_iter()
                .filter(|h| halves.contains(h))
                .collect();
            survivors.into_iter().min().filter(|rep| kept_edges.contains(rep))
        })
        .collect();

    let g = Graph::new(PreGraph::build(
        halves.iter().cloned(),
        blocks.into_iter().map(|b| b.into_iter().collect()),
        sigma
            .iter()
            .filter(|(a, b)| a < b)
            .map(|(a, b)| (a.clone(), b.clone()))
            .collect::<Vec<_>>(),
    )?)?;
    let og = OrientedGraph::new(g, sign)?;
    Ok((PlanarGraph::new(og, order)?, carried))
}

/// The essential prime layer that peels `vertex`: unitary padding around the
/// vertex corolla, matching the outputs of `remove_maximal_vertex`.
pub fn peel_layer(pg: &PlanarGraph, vertex: &BTreeSet<Hid>) -> PlanarGraph {
    let outs = pg.outputs();
    let positions: Vec<usize> =
        outs.iter().enumerate().filter(|(_, h)| vertex.contains(*h)).map(|(i, _)| i).collect();
    let first = positions.first().copied().unwrap_or(0);
    let last = positions.last().copied().unwrap_or(0);
    debug_assert!(positions.iter().enumerate().all(|(k, &p)| p == first + k));

    let corolla = vertex_subgraph(pg, vertex);
    let mut layer = PlanarGraph::empty();
    for k in 0..first {
        layer = layer.tensor(&crate::fixtures::wire(&format!("u{k}_")));
    }
    layer = layer.tensor(&corolla);
    for k in (last + 1)..outs.len() {
        layer = layer.tensor(&crate::fixtures::wire(&format!("u{k}_")));
    }
    layer
}

/// The prime planar graph on a single real vertex of `pg`, with the induced
/// order.
pub fn vertex_subgraph(pg: &PlanarGraph, vertex: &BTreeSet<Hid>) -> PlanarGraph {
    let pre = pg.oriented().pre();
    let mut order: Vec<Hid> = vertex.iter().cloned().collect();
    order.sort_by_key(|h| pg.edge_pos(&pre.edge_rep(h)));
    let g = Graph::new(
        PreGraph::build(vertex.iter().cloned(), vec![order.clone()], vec![]).unwrap(),
    )
    .unwrap();
    let sign = vertex.iter().map(|h| (h.clone(), pg.oriented().sign(h))).collect();
    let og = OrientedGraph::new(g, sign).unwrap();
    PlanarGraph::new(og, order).expect("vertex subgraphs are planar")
}

/// Decompose into essential prime layers, peeling the last vertex of the
/// induced vertex order at each step. Layer count equals the number of real
/// vertices; composing the layers in sequence rebuilds the graph.
pub fn decompose(pg: &PlanarGraph) -> Result<Decomposition, PlanarError> {
    decompose_by(pg, |pg| {
        let pre = pg.oriented().pre();
        pg.vertex_order().last().map(|&i| pre.blocks()[i].clone())
    })
}

/// Decomposition with a caller-chosen peeling rule; the rule must return a
/// reachability-maximal real vertex.
pub fn decompose_by(
    pg: &PlanarGraph,
    mut pick: impl FnMut(&PlanarGraph) -> Option<BTreeSet<Hid>>,
) -> Result<Decomposition, PlanarError> {
    let mut rest = pg.clone();
    let mut rev_layers = Vec::new();
    loop {
        let Some(vertex) = pick(&rest) else {
            if rev_layers.is_empty() {
                return Ok(Decomposition::Invertible(rest));
            }
            // remaining invertible part folds into the first layer
            if !rest.is_empty() {
                let bottom: PlanarGraph = rev_layers.pop().unwrap();
                rev_layers.push(rest.compose(&bottom)?);
            }
            rev_layers.reverse();
            return Ok(Decomposition::Layers(rev_layers));
        };
        rev_layers.push(peel_layer(&rest, &vertex));
        let (above, _) = remove_maximal_vertex(&rest, &vertex)?;
        rest = above;
    }
}

/// Recompose a decomposition.
pub fn recompose(d: &Decomposition) -> Result<PlanarGraph, PlanarError> {
    match d {
        Decomposition::Invertible(pg) => Ok(pg.clone()),
        Decomposition::Layers(layers) => {
            let mut it = layers.iter();
            let mut acc = it.next().expect("at least one layer").clone();
            for layer in it {
                acc = acc.compose(layer)?;
            }
            Ok(acc)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{elementary_example, prime, reduced_example, wire};

    #[test]
    fn single_corolla_is_one_layer() {
        let p = prime("p", 2, 1);
        let d = decompose(&p).unwrap();
        assert_eq!(d.layers().len(), 1);
        assert_eq!(d.layers()[0].canonical_form(), p.canonical_form());
    }

    #[test]
    fn invertible_marker() {
        let w = wire("w").tensor(&wire("v"));
        match decompose(&w).unwrap() {
            Decomposition::Invertible(pg) => assert_eq!(pg, w),
            other => panic!("expected invertible, got {other:?}"),
        }
        assert!(matches!(
            decompose(&PlanarGraph::empty()).unwrap(),
            Decomposition::Invertible(_)
        ));
    }

    #[test]
    fn reduced_example_has_five_layers() {
        let r = reduced_example();
        let d = decompose(&r).unwrap();
        assert_eq!(d.layers().len(), 5);
        for layer in d.layers() {
            let c = crate::graph::classify(layer.graph());
            assert!(c.essential_prime, "every layer is essential prime");
        }
        let back = recompose(&d).unwrap();
        assert_eq!(back.canonical_form(), r.canonical_form());
    }

    #[test]
    fn elementary_example_round_trips() {
        let e = elementary_example();
        let d = decompose(&e).unwrap();
        assert_eq!(d.layers().len(), 2);
        assert_eq!(recompose(&d).unwrap().canonical_form(), e.canonical_form());
    }

    #[test]
    fn random_peel_order_round_trips() {
        // peel the *first* maximal vertex instead of the last
        let r = reduced_example();
        let d = decompose_by(&r, |pg| maximal_real_vertices(pg).into_iter().next()).unwrap();
        assert_eq!(d.layers().len(), 5);
        assert_eq!(recompose(&d).unwrap().canonical_form(), r.canonical_form());
    }
}
