//! Orientation structures on graphs: signs, directedness, reachability,
//! admissible subgraphs and composition of anchored graphs.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::GraphError;
use crate::graph::{Graph, Hid, PreGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// A graph with an orientation: each 2-element edge carries one `+` and one
/// `-` half. `+` halves are inputs of their vertex, `-` halves outputs.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct OrientedGraph {
    graph: Graph,
    sign: BTreeMap<Hid, Sign>,
}

impl OrientedGraph {
    pub fn new(graph: Graph, sign: BTreeMap<Hid, Sign>) -> Result<Self, GraphError> {
        for h in graph.pre().halves() {
            let s = sign.get(h).ok_or_else(|| GraphError::SignNotTotal(h.clone()))?;
            let partner = graph.pre().sigma(h);
            if partner != h && sign.get(partner) == Some(s) {
                return Err(GraphError::BadSign(graph.pre().edge_rep(h)));
            }
        }
        Ok(OrientedGraph { graph, sign })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn pre(&self) -> &PreGraph {
        self.graph.pre()
    }

    pub fn sign(&self, h: &str) -> Sign {
        self.sign[h]
    }

    pub fn signs(&self) -> &BTreeMap<Hid, Sign> {
        &self.sign
    }

    pub fn rename(&self, map: &BTreeMap<Hid, Hid>) -> OrientedGraph {
        let f = |h: &Hid| map.get(h).cloned().unwrap_or_else(|| h.clone());
        OrientedGraph {
            graph: self.graph.rename(map),
            sign: self.sign.iter().map(|(h, s)| (f(h), *s)).collect(),
        }
    }

    /// Input half-edges of a vertex, unordered.
    pub fn ins_of(&self, block: &BTreeSet<Hid>) -> Vec<Hid> {
        block.iter().filter(|h| self.sign[*h] == Sign::Plus).cloned().collect()
    }

    pub fn outs_of(&self, block: &BTreeSet<Hid>) -> Vec<Hid> {
        block.iter().filter(|h| self.sign[*h] == Sign::Minus).cloned().collect()
    }

    /// Input legs of the whole graph (sign `+`), sorted by id.
    pub fn inputs(&self) -> Vec<Hid> {
        self.pre()
            .legs()
            .into_iter()
            .filter(|h| self.sign[h] == Sign::Plus)
            .collect()
    }

    pub fn outputs(&self) -> Vec<Hid> {
        self.pre()
            .legs()
            .into_iter()
            .filter(|h| self.sign[h] == Sign::Minus)
            .collect()
    }

    /// Directed: every vertex has at least one input and one output half.
    pub fn is_directed(&self) -> bool {
        self.pre().blocks().iter().all(|b| {
            b.iter().any(|h| self.sign[h] == Sign::Plus)
                && b.iter().any(|h| self.sign[h] == Sign::Minus)
        })
    }

    pub fn check_directed(&self) -> Result<(), GraphError> {
        for b in self.pre().blocks() {
            if !(b.iter().any(|h| self.sign[h] == Sign::Plus)
                && b.iter().any(|h| self.sign[h] == Sign::Minus))
            {
                return Err(GraphError::NotDirected(b.iter().next().unwrap().clone()));
            }
        }
        Ok(())
    }

    /// Progressive: directed and without directed circuits.
    pub fn is_progressive(&self) -> bool {
        self.is_directed() && self.find_circuit_edge().is_none()
    }

    /// Some edge lying on a directed circuit, if any.
    pub fn find_circuit_edge(&self) -> Option<Hid> {
        let r = Reach::new(self);
        r.edges.iter().find(|e| r.edge_reaches(e, e)).cloned()
    }

    pub fn tensor(&self, other: &OrientedGraph) -> OrientedGraph {
        let g = self.graph.tensor(&other.graph);
        let mut sign = BTreeMap::new();
        for (h, s) in &self.sign {
            sign.insert(format!("L:{h}"), *s);
        }
        for (h, s) in &other.sign {
            sign.insert(format!("R:{h}"), *s);
        }
        OrientedGraph { graph: g, sign }
    }

    /// Opposite orientation: all signs flipped.
    pub fn opposite(&self) -> OrientedGraph {
        OrientedGraph {
            graph: self.graph.clone(),
            sign: self.sign.iter().map(|(h, s)| (h.clone(), s.flip())).collect(),
        }
    }
}

/// Reachability on edges of an oriented graph: a step from edge `f` to a
/// distinct edge `g` passes through a vertex that receives `f` (a `+` half)
/// and emits `g` (a `-` half). Virtual wires never relay a step, so identity
/// wires are not circuits.
pub struct Reach {
    pub edges: Vec<Hid>,
    idx: BTreeMap<Hid, usize>,
    succ: Vec<BTreeSet<usize>>,
    reach: Vec<Vec<bool>>,
    /// vertex receiving the edge (target), if any
    target: Vec<Option<usize>>,
    /// vertex emitting the edge (source), if any
    source: Vec<Option<usize>>,
}

impl Reach {
    pub fn new(og: &OrientedGraph) -> Reach {
        let pre = og.pre();
        let edges = pre.edges();
        let idx: BTreeMap<Hid, usize> =
            edges.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
        let n = edges.len();
        let mut succ = vec![BTreeSet::new(); n];
        let mut target = vec![None; n];
        let mut source = vec![None; n];
        for (vi, block) in pre.blocks().iter().enumerate() {
            if pre.is_virtual_vertex(block) {
                // a wire's only edge both enters and leaves it; record the
                // endpoints but relay nothing
                for h in block {
                    let e = idx[&pre.edge_rep(h)];
                    match og.sign(h) {
                        Sign::Plus => target[e] = Some(vi),
                        Sign::Minus => source[e] = Some(vi),
                    }
                }
                continue;
            }
            let ins: Vec<usize> = block
                .iter()
                .filter(|h| og.sign(h) == Sign::Plus)
                .map(|h| idx[&pre.edge_rep(h)])
                .collect();
            let outs: Vec<usize> = block
                .iter()
                .filter(|h| og.sign(h) == Sign::Minus)
                .map(|h| idx[&pre.edge_rep(h)])
                .collect();
            for &e in &ins {
                target[e] = Some(vi);
            }
            for &e in &outs {
                source[e] = Some(vi);
            }
            for &a in &ins {
                for &b in &outs {
                    if a != b {
                        succ[a].insert(b);
                    }
                }
            }
        }
        // transitive closure by BFS from each edge
        let mut reach = vec![vec![false; n]; n];
        for s in 0..n {
            let mut q: VecDeque<usize> = succ[s].iter().copied().collect();
            while let Some(x) = q.pop_front() {
                if !reach[s][x] {
                    reach[s][x] = true;
                    q.extend(succ[x].iter().copied());
                }
            }
        }
        Reach { edges, idx, succ, reach, target, source }
    }

    pub fn edge_index(&self, rep: &str) -> usize {
        self.idx[rep]
    }

    /// e1 -> e2: a directed path of edges from e1 to e2.
    pub fn edge_reaches(&self, e1: &str, e2: &str) -> bool {
        self.reach[self.idx[e1]][self.idx[e2]]
    }

    pub fn edge_reaches_idx(&self, a: usize, b: usize) -> bool {
        self.reach[a][b]
    }

    /// One-step successors of an edge.
    pub fn successors(&self, rep: &str) -> impl Iterator<Item = &Hid> {
        self.succ[self.idx[rep]].iter().map(move |&i| &self.edges[i])
    }

    /// e -> v: a path starting at edge e and ending at vertex v.
    pub fn edge_reaches_vertex(&self, e: &str, v: usize) -> bool {
        let ei = self.idx[e];
        if self.target[ei] == Some(v) {
            return true;
        }
        (0..self.edges.len()).any(|f| self.reach[ei][f] && self.target[f] == Some(v))
    }

    /// v -> e: a path starting at vertex v and ending at edge e.
    pub fn vertex_reaches_edge(&self, v: usize, e: &str) -> bool {
        let ei = self.idx[e];
        (0..self.edges.len())
            .any(|f| self.source[f] == Some(v) && (f == ei || self.reach[f][ei]))
    }

    /// v1 -> v2 on vertices.
    pub fn vertex_reaches(&self, v1: usize, v2: usize) -> bool {
        (0..self.edges.len()).any(|f| {
            self.source[f] == Some(v1)
                && (self.target[f] == Some(v2)
                    || (0..self.edges.len())
                        .any(|g| self.reach[f][g] && self.target[g] == Some(v2)))
        })
    }
}

/// Reachability query on edges or vertices of an oriented graph.
pub fn reachable(og: &OrientedGraph, from: &ReachNode, to: &ReachNode) -> bool {
    let pre = og.pre();
    let r = Reach::new(og);
    let vid = |b: &BTreeSet<Hid>| pre.blocks().iter().position(|x| x == b).unwrap();
    match (from, to) {
        (ReachNode::Edge(a), ReachNode::Edge(b)) => r.edge_reaches(a, b),
        (ReachNode::Edge(a), ReachNode::Vertex(b)) => r.edge_reaches_vertex(a, vid(b)),
        (ReachNode::Vertex(a), ReachNode::Edge(b)) => r.vertex_reaches_edge(vid(a), b),
        (ReachNode::Vertex(a), ReachNode::Vertex(b)) => r.vertex_reaches(vid(a), vid(b)),
    }
}

#[derive(Debug, Clone)]
pub enum ReachNode {
    Edge(Hid),
    Vertex(BTreeSet<Hid>),
}

/// A subgraph (given by blocks) is admissible when no directed path leaves
/// the subgraph region and re-enters it: every path whose endpoint edges lie
/// at subgraph vertices stays inside. Intended for progressive hosts.
pub fn is_admissible(og: &OrientedGraph, blocks: &[BTreeSet<Hid>]) -> Result<bool, GraphError> {
    for b in blocks {
        if !og.pre().blocks().contains(b) {
            return Err(GraphError::BlockNotInGraph(b.iter().cloned().collect()));
        }
    }
    let sub_halves: BTreeSet<Hid> = blocks.iter().flat_map(|b| b.iter().cloned()).collect();
    let in_sub = |h: &Hid| sub_halves.contains(h);
    let r = Reach::new(og);
    // edges leaving a subgraph vertex / entering one, excluding edges that
    // lie wholly inside
    let mut leaving = Vec::new();
    let mut entering = Vec::new();
    for e in &r.edges {
        let halves = og.pre().edge_halves(e);
        if halves.iter().all(in_sub) {
            continue;
        }
        for h in &halves {
            if in_sub(h) {
                match og.sign(h) {
                    Sign::Minus => leaving.push(e.clone()),
                    Sign::Plus => entering.push(e.clone()),
                }
            }
        }
    }
    for g in &leaving {
        for f in &entering {
            if g == f || r.edge_reaches(g, f) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Oracle for Prop 2.4.2: the quotient by an admissible subgraph of a
/// progressive graph is again progressive (no directed circuit).
pub fn quotient_is_progressive(
    og: &OrientedGraph,
    blocks: &[BTreeSet<Hid>],
) -> Result<bool, GraphError> {
    let (_, quot) = og.graph().subgraph_and_quotient(blocks)?;
    let qsign: BTreeMap<Hid, Sign> =
        quot.pre().halves().iter().map(|h| (h.clone(), og.sign(h))).collect();
    let q = OrientedGraph::new(quot, qsign)?;
    Ok(q.is_directed() && q.find_circuit_edge().is_none())
}

/// A directed graph with chosen linear orders on its global inputs and
/// outputs.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct AnchoredGraph {
    pub directed: OrientedGraph,
    pub input_order: Vec<Hid>,
    pub output_order: Vec<Hid>,
}

impl AnchoredGraph {
    pub fn new(
        directed: OrientedGraph,
        input_order: Vec<Hid>,
        output_order: Vec<Hid>,
    ) -> Result<Self, GraphError> {
        directed.check_directed()?;
        let ins: BTreeSet<Hid> = directed.inputs().into_iter().collect();
        let outs: BTreeSet<Hid> = directed.outputs().into_iter().collect();
        if input_order.iter().cloned().collect::<BTreeSet<_>>() != ins
            || input_order.len() != ins.len()
            || output_order.iter().cloned().collect::<BTreeSet<_>>() != outs
            || output_order.len() != outs.len()
        {
            return Err(GraphError::BadAnchors);
        }
        Ok(AnchoredGraph { directed, input_order, output_order })
    }

    pub fn rename(&self, map: &BTreeMap<Hid, Hid>) -> AnchoredGraph {
        let f = |h: &Hid| map.get(h).cloned().unwrap_or_else(|| h.clone());
        AnchoredGraph {
            directed: self.directed.rename(map),
            input_order: self.input_order.iter().map(&f).collect(),
            output_order: self.output_order.iter().map(&f).collect(),
        }
    }

    /// Anchored composition: graft the k-th output of `self` onto the k-th
    /// input of `next`. Inputs come from `self`, outputs from `next`, with
    /// wire-carried legs substituted in place.
    pub fn compose(&self, next: &AnchoredGraph) -> Result<AnchoredGraph, GraphError> {
        let joined = self.directed.tensor(&next.directed);
        compose_pairs(
            joined,
            &crate::graph::prefix_all("L:", self.output_order.iter().cloned()),
            &crate::graph::prefix_all("R:", next.input_order.iter().cloned()),
            crate::graph::prefix_all("L:", self.input_order.iter().cloned()),
            crate::graph::prefix_all("R:", next.output_order.iter().cloned()),
        )
    }
}

/// Core of anchored/planar composition: given the already-joined oriented
/// graph, graft each `out_legs[k]` to `in_legs[k]` and fix up the boundary
/// sequences. Returns the composed anchored graph.
pub(crate) fn compose_pairs(
    joined: OrientedGraph,
    out_legs: &[Hid],
    in_legs: &[Hid],
    mut new_inputs: Vec<Hid>,
    mut new_outputs: Vec<Hid>,
) -> Result<AnchoredGraph, GraphError> {
    if out_legs.len() != in_legs.len() {
        return Err(GraphError::ArityMismatch { out: out_legs.len(), inn: in_legs.len() });
    }
    let mut halves: BTreeSet<Hid> = joined.pre().halves().clone();
    let mut blocks: Vec<BTreeSet<Hid>> = joined.pre().blocks().to_vec();
    let mut sigma: BTreeMap<Hid, Hid> =
        halves.iter().map(|h| (h.clone(), joined.pre().sigma(h).clone())).collect();
    let mut sign = joined.signs().clone();

    for (o, i) in out_legs.iter().zip(in_legs) {
        let o_virtual = !joined.pre().is_real_leg(o);
        let i_virtual = !joined.pre().is_real_leg(i);
        match (o_virtual, i_virtual) {
            (false, false) => {
                sigma.insert(o.clone(), i.clone());
                sigma.insert(i.clone(), o.clone());
            }
            (false, true) => {
                // wire on the input side passes the output leg through
                let ipartner = joined.pre().sigma(i).clone();
                for h in [i, &ipartner] {
                    halves.remove(h);
                    sigma.remove(h);
                    sign.remove(h);
                }
                blocks.retain(|b| !b.contains(i));
                if let Some(p) = new_outputs.iter().position(|x| x == &ipartner) {
                    new_outputs[p] = o.clone();
                }
            }
            (true, false) => {
                let opartner = joined.pre().sigma(o).clone();
                for h in [o, &opartner] {
                    halves.remove(h);
                    sigma.remove(h);
                    sign.remove(h);
                }
                blocks.retain(|b| !b.contains(o));
                if let Some(p) = new_inputs.iter().position(|x| x == &opartner) {
                    new_inputs[p] = i.clone();
                }
            }
            (true, true) => {
                // two wires merge into one
                let opartner = joined.pre().sigma(o).clone();
                let ipartner = joined.pre().sigma(i).clone();
                for h in [o, i] {
                    halves.remove(h);
                    sigma.remove(h);
                    sign.remove(h);
                }
                blocks.retain(|b| !b.contains(o) && !b.contains(i));
                blocks.push([opartner.clone(), ipartner.clone()].into_iter().collect());
                sigma.insert(opartner.clone(), ipartner.clone());
                sigma.insert(ipartner, opartner);
            }
        }
    }
    blocks.sort();
    let pre = rebuild(halves, blocks, sigma)?;
    let graph = Graph::new(pre)?;
    let og = OrientedGraph::new(graph, sign)?;
    AnchoredGraph::new(og, new_inputs, new_outputs)
}

fn rebuild(
    halves: BTreeSet<Hid>,
    blocks: Vec<BTreeSet<Hid>>,
    sigma: BTreeMap<Hid, Hid>,
) -> Result<PreGraph, GraphError> {
    PreGraph::build(
        halves.iter().cloned(),
        blocks.into_iter().map(|b| b.into_iter().collect()),
        sigma
            .iter()
            .filter(|(a, b)| a < b)
            .map(|(a, b)| (a.clone(), b.clone()))
            .collect::<Vec<_>>(),
    )
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::graph::PreGraph;

    fn s(x: &str) -> Hid {
        x.to_string()
    }

    /// Example graph with orientation: sgn+ = {a,b,e,f,l}, sgn- = {c,d,g,j,k}.
    pub(crate) fn example_241() -> OrientedGraph {
        let g = crate::graph::tests::example_222();
        let sign = g
            .pre()
            .halves()
            .iter()
            .map(|h| {
                let sg = if ["a", "b", "e", "f", "l"].contains(&h.as_str()) {
                    Sign::Plus
                } else {
                    Sign::Minus
                };
                (h.clone(), sg)
            })
            .collect();
        OrientedGraph::new(g, sign).unwrap()
    }

    pub(crate) fn oriented_wire(a: &str, b: &str) -> AnchoredGraph {
        let g = Graph::new(
            PreGraph::build([s(a), s(b)], vec![vec![s(a), s(b)]], vec![(s(a), s(b))]).unwrap(),
        )
        .unwrap();
        let og = OrientedGraph::new(
            g,
            [(s(a), Sign::Plus), (s(b), Sign::Minus)].into_iter().collect(),
        )
        .unwrap();
        AnchoredGraph::new(og, vec![s(a)], vec![s(b)]).unwrap()
    }

    pub(crate) fn oriented_prime11(a: &str, b: &str) -> AnchoredGraph {
        let g =
            Graph::new(PreGraph::build([s(a), s(b)], vec![vec![s(a), s(b)]], vec![]).unwrap())
                .unwrap();
        let og = OrientedGraph::new(
            g,
            [(s(a), Sign::Plus), (s(b), Sign::Minus)].into_iter().collect(),
        )
        .unwrap();
        AnchoredGraph::new(og, vec![s(a)], vec![s(b)]).unwrap()
    }

    #[test]
    fn orientation_example() {
        let og = example_241();
        let pre = og.pre();
        let v1 = pre.blocks().iter().find(|b| b.contains("a")).unwrap();
        let mut ins = og.ins_of(v1);
        ins.sort();
        assert_eq!(ins, ["a", "b", "e"].map(s).to_vec());
        let mut outs = og.outs_of(v1);
        outs.sort();
        assert_eq!(outs, ["c", "d"].map(s).to_vec());
        assert_eq!(og.inputs(), ["a", "b", "l"].map(s).to_vec());
        assert_eq!(og.outputs(), ["c", "j", "k"].map(s).to_vec());
    }

    #[test]
    fn bad_sign_rejected() {
        let g = crate::graph::tests::example_222();
        let mut sign: BTreeMap<Hid, Sign> =
            g.pre().halves().iter().map(|h| (h.clone(), Sign::Plus)).collect();
        sign.insert(s("c"), Sign::Minus);
        sign.insert(s("g"), Sign::Minus);
        sign.insert(s("j"), Sign::Minus);
        sign.insert(s("l"), Sign::Minus);
        // edge {d,f} has equal signs
        assert!(matches!(
            OrientedGraph::new(g, sign),
            Err(GraphError::BadSign(_))
        ));
    }

    #[test]
    fn reachability_on_example() {
        let og = example_241();
        let r = Reach::new(&og);
        // edge {d,f} targets v2, and {e,g} leaves v2
        assert!(r.edge_reaches("d", "e"));
        assert!(!r.edge_reaches("e", "d") || og.find_circuit_edge().is_some());
        // the orientation of example_241 is cyclic: v1 -> v2 -> v1
        assert!(og.find_circuit_edge().is_some());
        assert!(!og.is_progressive());
    }

    #[test]
    fn progressive_acyclicity() {
        // make it progressive: flip e/g so both parallel edges run v1 -> v2
        let g = crate::graph::tests::example_222();
        let sign: BTreeMap<Hid, Sign> = g
            .pre()
            .halves()
            .iter()
            .map(|h| {
                let sg = if ["a", "b", "g", "f", "l"].contains(&h.as_str()) {
                    Sign::Plus
                } else {
                    Sign::Minus
                };
                (h.clone(), sg)
            })
            .collect();
        let og = OrientedGraph::new(g, sign).unwrap();
        assert!(og.is_progressive());
        let r = Reach::new(&og);
        for e in &r.edges {
            assert!(!r.edge_reaches(e, e), "no self-reach in a progressive graph");
        }
    }

    /// A progressive chain of n 1-in/1-out vertices.
    fn chain(n: usize) -> OrientedGraph {
        let mut halves = Vec::new();
        let mut blocks = Vec::new();
        let mut pairs = Vec::new();
        let mut sign = BTreeMap::new();
        for k in 0..n {
            let i = format!("i{k}");
            let o = format!("o{k}");
            halves.push(i.clone());
            halves.push(o.clone());
            blocks.push(vec![i.clone(), o.clone()]);
            sign.insert(i.clone(), Sign::Plus);
            sign.insert(o.clone(), Sign::Minus);
            if k > 0 {
                pairs.push((format!("o{}", k - 1), i));
            }
        }
        let g = Graph::new(PreGraph::build(halves, blocks, pairs).unwrap()).unwrap();
        OrientedGraph::new(g, sign).unwrap()
    }

    #[test]
    fn admissible_iff_quotient_progressive() {
        let og = chain(4);
        let blocks = og.pre().blocks().to_vec();
        let first_last = vec![blocks[0].clone(), blocks[3].clone()];
        assert!(!is_admissible(&og, &first_last).unwrap());
        assert!(!quotient_is_progressive(&og, &first_last).unwrap());

        let first_two: Vec<BTreeSet<Hid>> = blocks
            .iter()
            .filter(|b| b.contains("i0") || b.contains("i1"))
            .cloned()
            .collect();
        assert!(is_admissible(&og, &first_two).unwrap());
        assert!(quotient_is_progressive(&og, &first_two).unwrap());

        // exhaustive agreement over all single and double selections
        for a in 0..blocks.len() {
            for b in a..blocks.len() {
                let chosen: Vec<BTreeSet<Hid>> = if a == b {
                    vec![blocks[a].clone()]
                } else {
                    vec![blocks[a].clone(), blocks[b].clone()]
                };
                assert_eq!(
                    is_admissible(&og, &chosen).unwrap(),
                    quotient_is_progressive(&og, &chosen).unwrap(),
                    "selection {a},{b}"
                );
            }
        }
    }

    #[test]
    fn anchored_composition_cases() {
        let strip = |g: &AnchoredGraph| {
            let map = g
                .directed
                .pre()
                .halves()
                .iter()
                .map(|h| (h.clone(), h.replace("L:", "").replace("R:", "")))
                .collect();
            g.rename(&map)
        };
        // prime . prime -> chain
        let p = oriented_prime11("h1", "h2");
        let q = oriented_prime11("h3", "h4");
        let c = p.compose(&q).unwrap();
        assert_eq!(c.directed.pre().halves().len(), 4);
        assert_eq!(c.input_order, vec![s("L:h1")]);
        assert_eq!(c.output_order, vec![s("R:h4")]);

        // wire . prime -> prime unchanged
        let w = oriented_wire("h3", "h4");
        let c2 = strip(&p.compose(&w).unwrap());
        assert_eq!(c2, p);

        // prime . wire -> prime unchanged
        let c3 = strip(&oriented_wire("h1", "h2").compose(&q).unwrap());
        assert_eq!(c3, oriented_prime11("h3", "h4"));

        // wire . wire -> wire on the outer halves
        let c4 = strip(&oriented_wire("h1", "h2").compose(&oriented_wire("h3", "h4")).unwrap());
        assert_eq!(c4, {
            let g = Graph::new(
                PreGraph::build(
                    [s("h1"), s("h4")],
                    vec![vec![s("h1"), s("h4")]],
                    vec![(s("h1"), s("h4"))],
                )
                .unwrap(),
            )
            .unwrap();
            let og = OrientedGraph::new(
              g,
              [(s("h1"), Sign::Plus), (s("h4"), Sign::Minus)].into_iter().collect(),
            )
            .unwrap();
            AnchoredGraph::new(og, vec![s("h1")], vec![s("h4")]).unwrap()
        });
    }

    #[test]
    fn anchored_composition_associative() {
        // globally distinct ids so stripping prefixes is a bijection
        let a = oriented_prime11("a1", "a2");
        let b = oriented_wire("b1", "b2");
        let c = oriented_prime11("c1", "c2");
        let strip = |g: &AnchoredGraph| {
            let map = g
                .directed
                .pre()
                .halves()
                .iter()
                .map(|h| (h.clone(), h.replace("L:", "").replace("R:", "")))
                .collect();
            g.rename(&map)
        };
        let lhs = strip(&a.compose(&b).unwrap().compose(&c).unwrap());
        let rhs = strip(&a.compose(&b.compose(&c).unwrap()).unwrap());
        assert_eq!(lhs, rhs);
    }
}
