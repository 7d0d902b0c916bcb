//! Half-edge combinatorics: pre-graphs, graphs and the structural operations
//! (tensor, subgraph/quotient, grafting, substitution, merge, fusion).
//!
//! A pre-graph is a triple (H, P, sigma): a finite half-edge set, a partition
//! of it into vertices, and an involution whose orbits are the edges.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::GraphError;

/// Half-edge identifier. Opaque; binary operations namespace their inputs
/// with "L:" / "R:" prefixes so the union is always disjoint.
pub type Hid = String;

pub fn prefix_all(p: &str, ids: impl IntoIterator<Item = Hid>) -> Vec<Hid> {
    ids.into_iter().map(|h| format!("{p}{h}")).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PreGraph {
    halves: BTreeSet<Hid>,
    blocks: Vec<BTreeSet<Hid>>,
    sigma: BTreeMap<Hid, Hid>,
}

impl PreGraph {
    /// Build and validate a pre-graph. `pairs` lists the 2-element orbits of
    /// the involution; fixed points are implicit.
    pub fn build(
        half_edges: impl IntoIterator<Item = Hid>,
        blocks: impl IntoIterator<Item = Vec<Hid>>,
        pairs: impl IntoIterator<Item = (Hid, Hid)>,
    ) -> Result<Self, GraphError> {
        let mut halves = BTreeSet::new();
        for h in half_edges {
            if !halves.insert(h.clone()) {
                return Err(GraphError::DuplicateId(h));
            }
        }
        let mut sigma: BTreeMap<Hid, Hid> = halves.iter().map(|h| (h.clone(), h.clone())).collect();
        for (a, b) in pairs {
            if !halves.contains(&a) || !halves.contains(&b) {
                return Err(GraphError::PartitionNotCovering(a));
            }
            sigma.insert(a.clone(), b.clone());
            sigma.insert(b, a);
        }
        // sigma^2 = id holds by construction of the map, but reject chains
        // like sigma(a)=b, sigma(b)=c passed as pairs (a,b),(b,c).
        for (a, b) in sigma.iter() {
            if sigma.get(b) != Some(a) {
                return Err(GraphError::NonInvolutive(a.clone()));
            }
        }
        let mut seen = BTreeSet::new();
        let mut bl = Vec::new();
        for b in blocks {
            if b.is_empty() {
                return Err(GraphError::EmptyBlock);
            }
            let set: BTreeSet<Hid> = b.into_iter().collect();
            for h in &set {
                if !halves.contains(h) || !seen.insert(h.clone()) {
                    return Err(GraphError::PartitionNotCovering(h.clone()));
                }
            }
            bl.push(set);
        }
        if seen.len() != halves.len() {
            let missing = halves.difference(&seen).next().unwrap().clone();
            return Err(GraphError::PartitionNotCovering(missing));
        }
        bl.sort();
        Ok(PreGraph { halves, blocks: bl, sigma })
    }

    pub fn empty() -> Self {
        PreGraph { halves: BTreeSet::new(), blocks: Vec::new(), sigma: BTreeMap::new() }
    }

    pub fn halves(&self) -> &BTreeSet<Hid> {
        &self.halves
    }

    pub fn blocks(&self) -> &[BTreeSet<Hid>] {
        &self.blocks
    }

    pub fn sigma(&self, h: &str) -> &Hid {
        &self.sigma[h]
    }

    pub fn is_empty(&self) -> bool {
        self.halves.is_empty()
    }

    /// Index of the block containing `h`.
    pub fn block_of(&self, h: &str) -> usize {
        self.blocks.iter().position(|b| b.contains(h)).expect("half-edge not in any block")
    }

    /// Canonical representative of the edge through `h`: the smaller id of
    /// its orbit.
    pub fn edge_rep(&self, h: &str) -> Hid {
        let s = self.sigma(h);
        if s.as_str() < h {
            s.clone()
        } else {
            h.to_string()
        }
    }

    /// All edges, as sorted orbit representatives.
    pub fn edges(&self) -> Vec<Hid> {
        let reps: BTreeSet<Hid> = self.halves.iter().map(|h| self.edge_rep(h)).collect();
        reps.into_iter().collect()
    }

    pub fn edge_halves(&self, rep: &str) -> Vec<Hid> {
        let s = self.sigma(rep);
        if s == rep {
            vec![rep.to_string()]
        } else {
            vec![rep.to_string(), s.clone()]
        }
    }

    /// A virtual edge is a 2-element orbit inside a single block.
    pub fn is_virtual_edge(&self, rep: &str) -> bool {
        let s = self.sigma(rep);
        s != rep && self.block_of(rep) == self.block_of(s)
    }

    /// Inner edge: real with two halves in distinct blocks.
    pub fn is_inner_edge(&self, rep: &str) -> bool {
        let s = self.sigma(rep);
        s != rep && self.block_of(rep) != self.block_of(s)
    }

    /// Legs: fixed points of sigma (real legs) plus halves of virtual edges
    /// (virtual legs).
    pub fn is_leg(&self, h: &str) -> bool {
        self.sigma(h) == h || self.is_virtual_edge(&self.edge_rep(h))
    }

    pub fn is_real_leg(&self, h: &str) -> bool {
        self.sigma(h) == h
    }

    pub fn legs(&self) -> Vec<Hid> {
        self.halves.iter().filter(|h| self.is_leg(h)).cloned().collect()
    }

    /// A vertex is virtual when it contains a 2-element orbit.
    pub fn is_virtual_vertex(&self, block: &BTreeSet<Hid>) -> bool {
        block.iter().any(|h| {
            let s = self.sigma(h);
            s != h && block.contains(s)
        })
    }

    pub fn real_vertices(&self) -> Vec<&BTreeSet<Hid>> {
        self.blocks.iter().filter(|b| !self.is_virtual_vertex(b)).collect()
    }

    pub fn rename(&self, map: &BTreeMap<Hid, Hid>) -> PreGraph {
        let f = |h: &Hid| map.get(h).cloned().unwrap_or_else(|| h.clone());
        PreGraph {
            halves: self.halves.iter().map(&f).collect(),
            blocks: {
                let mut bl: Vec<BTreeSet<Hid>> =
                    self.blocks.iter().map(|b| b.iter().map(&f).collect()).collect();
                bl.sort();
                bl
            },
            sigma: self.sigma.iter().map(|(a, b)| (f(a), f(b))).collect(),
        }
    }

    pub fn rename_prefix(&self, p: &str) -> PreGraph {
        let map = self.halves.iter().map(|h| (h.clone(), format!("{p}{h}"))).collect();
        self.rename(&map)
    }

    fn disjoint_union(&self, other: &PreGraph) -> PreGraph {
        let a = self.rename_prefix("L:");
        let b = other.rename_prefix("R:");
        let mut blocks: Vec<BTreeSet<Hid>> =
            a.blocks.iter().chain(b.blocks.iter()).cloned().collect();
        blocks.sort();
        PreGraph {
            halves: a.halves.union(&b.halves).cloned().collect(),
            blocks,
            sigma: a.sigma.into_iter().chain(b.sigma).collect(),
        }
    }
}

/// A graph is a pre-graph with no virtual vertex of degree >= 3, so every
/// virtual edge is a detached identity wire.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Graph(PreGraph);

impl Graph {
    pub fn new(p: PreGraph) -> Result<Self, GraphError> {
        for b in p.blocks() {
            if b.len() >= 3 && p.is_virtual_vertex(b) {
                return Err(GraphError::VirtualVertexTooBig(b.iter().cloned().collect()));
            }
        }
        Ok(Graph(p))
    }

    pub fn empty() -> Self {
        Graph(PreGraph::empty())
    }

    pub fn pre(&self) -> &PreGraph {
        &self.0
    }

    pub fn into_pre(self) -> PreGraph {
        self.0
    }

    pub fn rename(&self, map: &BTreeMap<Hid, Hid>) -> Graph {
        Graph(self.0.rename(map))
    }

    /// Tensor product: disjoint union with namespaced half-edges.
    pub fn tensor(&self, other: &Graph) -> Graph {
        Graph(self.0.disjoint_union(&other.0))
    }

    /// Subgraph spanned by a subset of the vertex blocks, and the quotient by
    /// it. Severed inner edges become legs of the subgraph; the quotient
    /// fuses the subgraph to a single vertex on its legs.
    pub fn subgraph_and_quotient(
        &self,
        chosen: &[BTreeSet<Hid>],
    ) -> Result<(Graph, Graph), GraphError> {
        for b in chosen {
            if !self.0.blocks.contains(b) {
                return Err(GraphError::BlockNotInGraph(b.iter().cloned().collect()));
            }
        }
        let sub_halves: BTreeSet<Hid> = chosen.iter().flat_map(|b| b.iter().cloned()).collect();
        let mut sub_sigma = BTreeMap::new();
        for h in &sub_halves {
            let s = self.0.sigma(h);
            sub_sigma.insert(h.clone(), if sub_halves.contains(s) { s.clone() } else { h.clone() });
        }
        let mut sub_blocks: Vec<BTreeSet<Hid>> = chosen.to_vec();
        sub_blocks.sort();
        let sub = Graph::new(PreGraph { halves: sub_halves.clone(), blocks: sub_blocks, sigma: sub_sigma })?;

        let sub_legs: BTreeSet<Hid> = sub.pre().legs().into_iter().collect();
        let mut q_halves: BTreeSet<Hid> =
            self.0.halves.difference(&sub_halves).cloned().collect();
        q_halves.extend(sub_legs.iter().cloned());
        let mut q_blocks: Vec<BTreeSet<Hid>> = self
            .0
            .blocks
            .iter()
            .filter(|b| !chosen.contains(b))
            .cloned()
            .collect();
        if !sub_legs.is_empty() {
            q_blocks.push(sub_legs.clone());
        }
        q_blocks.sort();
        let q_sigma = q_halves
            .iter()
            .map(|h| {
                let s = self.0.sigma(h);
                (h.clone(), if q_halves.contains(s) { s.clone() } else { h.clone() })
            })
            .collect();
        let quot = Graph::new(PreGraph { halves: q_halves, blocks: q_blocks, sigma: q_sigma })?;
        Ok((sub, quot))
    }

    /// Grafting along a pair of legs: the four-case definition, one case per
    /// real/virtual combination.
    pub fn graft(&self, h1: &str, other: &Graph, h2: &str) -> Result<Graph, GraphError> {
        if !self.0.is_leg(h1) {
            return Err(GraphError::NotALeg(h1.to_string()));
        }
        if !other.0.is_leg(h2) {
            return Err(GraphError::NotALeg(h2.to_string()));
        }
        let joined = self.tensor(other);
        let a = format!("L:{h1}");
        let b = format!("R:{h2}");
        let pre = self_graft_pre(joined.pre(), &a, &b)?;
        Graph::new(pre)
    }

    /// Self-grafting of two legs of one graph. May create a loop, so the
    /// result is only a pre-graph; callers re-validate.
    pub fn self_graft(&self, h1: &str, h2: &str) -> Result<PreGraph, GraphError> {
        self_graft_pre(self.pre(), h1, h2)
    }

    /// Substitute a reduced graph for a real vertex, identifying the vertex's
    /// half-edges with the legs of the inner graph via `theta`.
    pub fn substitute(
        &self,
        vertex: &BTreeSet<Hid>,
        theta: &BTreeMap<Hid, Hid>,
        inner: &Graph,
    ) -> Result<Graph, GraphError> {
        if !self.0.blocks.contains(vertex) {
            return Err(GraphError::BlockNotInGraph(vertex.iter().cloned().collect()));
        }
        if self.0.is_virtual_vertex(vertex) {
            return Err(GraphError::NotARealVertex(vertex.iter().next().unwrap().clone()));
        }
        let has_wire = inner
            .pre()
            .halves()
            .iter()
            .any(|h| inner.pre().is_virtual_edge(&inner.pre().edge_rep(h)));
        if inner.pre().is_empty() || has_wire {
            return Err(GraphError::InnerNotReduced);
        }
        let inner = inner.rename(
            &inner.pre().halves().iter().map(|h| (h.clone(), format!("I:{h}"))).collect(),
        );
        let theta: BTreeMap<Hid, Hid> =
            theta.iter().map(|(k, v)| (k.clone(), format!("I:{v}"))).collect();
        let inner_legs: BTreeSet<Hid> = inner.pre().legs().into_iter().collect();
        if theta.len() != vertex.len()
            || theta.keys().any(|k| !vertex.contains(k))
            || theta.values().collect::<BTreeSet<_>>().len() != inner_legs.len()
            || theta.values().any(|v| !inner_legs.contains(v))
        {
            return Err(GraphError::NotABijection);
        }
        let theta_inv: BTreeMap<Hid, Hid> =
            theta.iter().map(|(k, v)| (v.clone(), k.clone())).collect();

        let outer = &self.0;
        let mut halves: BTreeSet<Hid> = outer.halves.difference(vertex).cloned().collect();
        halves.extend(inner.pre().halves().iter().cloned());
        let mut blocks: Vec<BTreeSet<Hid>> =
            outer.blocks.iter().filter(|b| *b != vertex).cloned().collect();
        blocks.extend(inner.pre().blocks().iter().cloned());
        blocks.sort();
        let mut sigma = BTreeMap::new();
        for h in &halves {
            let img = if inner.pre().halves().contains(h) {
                if inner_legs.contains(h) {
                    let v_half = &theta_inv[h];
                    let s_out = outer.sigma(v_half);
                    if s_out == v_half || vertex.contains(s_out) {
                        // the outer half was a leg (or paired inside the
                        // vertex, impossible for a real vertex): stay a leg
                        h.clone()
                    } else {
                        s_out.clone()
                    }
                } else {
                    inner.pre().sigma(h).clone()
                }
            } else {
                let s = outer.sigma(h);
                if vertex.contains(s) {
                    theta[s].clone()
                } else {
                    s.clone()
                }
            };
            sigma.insert(h.clone(), img);
        }
        Graph::new(PreGraph { halves, blocks, sigma })
    }

    /// Merge two real vertices into one block. The result may fail the graph
    /// invariant (a fused inner edge becomes a loop), surfaced as an error.
    pub fn merge(&self, v1: &BTreeSet<Hid>, v2: &BTreeSet<Hid>) -> Result<Graph, GraphError> {
        if v1 == v2
            || !self.0.blocks.contains(v1)
            || !self.0.blocks.contains(v2)
            || self.0.is_virtual_vertex(v1)
            || self.0.is_virtual_vertex(v2)
        {
            return Err(GraphError::NotRealVertices);
        }
        let mut blocks: Vec<BTreeSet<Hid>> =
            self.0.blocks.iter().filter(|b| *b != v1 && *b != v2).cloned().collect();
        blocks.push(v1.union(v2).cloned().collect());
        blocks.sort();
        Graph::new(PreGraph { halves: self.0.halves.clone(), blocks, sigma: self.0.sigma.clone() })
    }

    /// Fuse half-edges according to a splitting relation, given as a list of
    /// equivalence classes (singletons implicit). A valid splitting keeps
    /// classes inside single blocks, is sigma-compatible, and never pairs a
    /// virtual edge's own halves.
    pub fn split_and_fuse(&self, classes: &[Vec<Hid>]) -> Result<Graph, GraphError> {
        let pre = &self.0;
        let mut class_of: BTreeMap<Hid, usize> = BTreeMap::new();
        let mut all: Vec<BTreeSet<Hid>> = Vec::new();
        for c in classes {
            let set: BTreeSet<Hid> = c.iter().cloned().collect();
            if set.iter().any(|h| !pre.halves.contains(h)) {
                return Err(GraphError::PartitionNotCovering(c[0].clone()));
            }
            let idx = all.len();
            for h in &set {
                if class_of.insert(h.clone(), idx).is_some() {
                    return Err(GraphError::DuplicateId(h.clone()));
                }
            }
            all.push(set);
        }
        for h in &pre.halves {
            if !class_of.contains_key(h) {
                let idx = all.len();
                class_of.insert(h.clone(), idx);
                all.push([h.clone()].into_iter().collect());
            }
        }
        // axiom 1: classes lie within single vertices
        for c in &all {
            let mut it = c.iter();
            let first = it.next().unwrap();
            let v = pre.block_of(first);
            for h in it {
                if pre.block_of(h) != v {
                    return Err(GraphError::NotASplitting { axiom: 1, witness: h.clone() });
                }
            }
        }
        // axiom 2: sigma-compatible (sigma maps classes to classes)
        for c in &all {
            let img: BTreeSet<usize> = c.iter().map(|h| class_of[pre.sigma(h)]).collect();
            if img.len() != 1 {
                return Err(GraphError::NotASplitting {
                    axiom: 2,
                    witness: c.iter().next().unwrap().clone(),
                });
            }
        }
        // axiom 3: never identify the two halves of one virtual edge
        for h in &pre.halves {
            let s = pre.sigma(h);
            if s != h && pre.block_of(h) == pre.block_of(s) && class_of[h] == class_of[s] {
                return Err(GraphError::NotASplitting { axiom: 3, witness: h.clone() });
            }
        }
        let name: Vec<Hid> = all.iter().map(|c| c.iter().next().unwrap().clone()).collect();
        let halves: BTreeSet<Hid> = name.iter().cloned().collect();
        let mut blocks: Vec<BTreeSet<Hid>> = pre
            .blocks
            .iter()
            .map(|b| b.iter().map(|h| name[class_of[h]].clone()).collect())
            .collect();
        blocks.sort();
        let sigma = all
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let h = c.iter().next().unwrap();
                (name[i].clone(), name[class_of[pre.sigma(h)]].clone())
            })
            .collect();
        Graph::new(PreGraph { halves, blocks, sigma })
    }

    /// Fuse every inner thick edge completely: all parallel edges between
    /// each pair of vertices collapse to one.
    pub fn fuse_parallel(&self) -> Graph {
        let pre = &self.0;
        let mut groups: BTreeMap<(usize, usize, usize), Vec<Hid>> = BTreeMap::new();
        for rep in pre.edges() {
            if pre.is_inner_edge(&rep) {
                let s = pre.sigma(&rep).clone();
                let (va, vb) = (pre.block_of(&rep), pre.block_of(&s));
                let key = (va.min(vb), va.max(vb), 0);
                groups.entry(key).or_default().push(rep.clone());
            }
        }
        let mut classes: Vec<Vec<Hid>> = Vec::new();
        for (_, reps) in groups {
            if reps.len() > 1 {
                classes.push(reps.clone());
                classes.push(reps.iter().map(|r| pre.sigma(r).clone()).collect());
            }
        }
        // classes built side-by-side are valid by construction
        self.split_and_fuse(&classes).expect("parallel fusion is a valid splitting")
    }
}

fn self_graft_pre(pre: &PreGraph, h1: &str, h2: &str) -> Result<PreGraph, GraphError> {
    if !pre.is_leg(h1) {
        return Err(GraphError::NotALeg(h1.to_string()));
    }
    if !pre.is_leg(h2) {
        return Err(GraphError::NotALeg(h2.to_string()));
    }
    let r1 = pre.is_real_leg(h1);
    let r2 = pre.is_real_leg(h2);
    let mut halves = pre.halves.clone();
    let mut blocks = pre.blocks.clone();
    let mut sigma = pre.sigma.clone();
    match (r1, r2) {
        (true, true) => {
            sigma.insert(h1.to_string(), h2.to_string());
            sigma.insert(h2.to_string(), h1.to_string());
        }
        (true, false) => {
            // drop the identity wire at h2; h1 stays a leg
            let s2 = pre.sigma(h2).clone();
            halves.remove(h2);
            halves.remove(&s2);
            blocks.retain(|b| !b.contains(h2));
            sigma.remove(h2);
            sigma.remove(&s2);
        }
        (false, true) => {
            let s1 = pre.sigma(h1).clone();
            halves.remove(h1);
            halves.remove(&s1);
            blocks.retain(|b| !b.contains(h1));
            sigma.remove(h1);
            sigma.remove(&s1);
        }
        (false, false) => {
            let s1 = pre.sigma(h1).clone();
            let s2 = pre.sigma(h2).clone();
            halves.remove(h1);
            halves.remove(h2);
            blocks.retain(|b| !b.contains(h1) && !b.contains(h2));
            sigma.remove(h1);
            sigma.remove(h2);
            if s1 == s2.as_str() {
                // the two legs were the ends of a single wire: it closes up
                // into a loop on no half-edges, i.e. disappears entirely;
                // this matches cutting both ends of the same virtual edge.
                halves.remove(&s1);
                sigma.remove(&s1);
            } else {
                blocks.push([s1.clone(), s2.clone()].into_iter().collect());
                sigma.insert(s1.clone(), s2.clone());
                sigma.insert(s2, s1);
            }
        }
    }
    blocks.sort();
    Ok(PreGraph { halves, blocks, sigma })
}

/// Classification report of a graph: the derived edge/leg/vertex partitions
/// and the standard structural flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub real_edges: Vec<Hid>,
    pub virtual_edges: Vec<Hid>,
    pub inner_edges: Vec<Hid>,
    pub external_edges: Vec<Hid>,
    pub real_legs: Vec<Hid>,
    pub virtual_legs: Vec<Hid>,
    pub inner_vertices: Vec<Vec<Hid>>,
    pub external_vertices: Vec<Vec<Hid>>,
    pub real_vertex_count: usize,
    pub virtual_vertex_count: usize,
    pub unitary: bool,
    pub prime: bool,
    pub essential_prime: bool,
    pub elementary: bool,
    pub invertible: bool,
    pub reduced: bool,
    pub closed: bool,
    /// Valency of the unique real vertex when the graph is prime.
    pub corolla_valency: Option<usize>,
}

pub fn classify(g: &Graph) -> Classification {
    let pre = g.pre();
    let edges = pre.edges();
    let (mut real_edges, mut virtual_edges, mut inner_edges, mut external_edges) =
        (Vec::new(), Vec::new(), Vec::new(), Vec::new());
    for e in &edges {
        if pre.is_virtual_edge(e) {
            virtual_edges.push(e.clone());
        } else {
            real_edges.push(e.clone());
        }
        if pre.is_inner_edge(e) {
            inner_edges.push(e.clone());
        } else {
            external_edges.push(e.clone());
        }
    }
    let legs = pre.legs();
    let (real_legs, virtual_legs): (Vec<_>, Vec<_>) =
        legs.into_iter().partition(|h| pre.is_real_leg(h));
    let mut inner_vertices = Vec::new();
    let mut external_vertices = Vec::new();
    for b in pre.blocks() {
        let has_leg = b.iter().any(|h| pre.is_leg(h));
        let v: Vec<Hid> = b.iter().cloned().collect();
        if has_leg {
            external_vertices.push(v);
        } else {
            inner_vertices.push(v);
        }
    }
    let real_vertex_count = pre.real_vertices().len();
    let virtual_vertex_count = pre.blocks().len() - real_vertex_count;
    let unitary = pre.blocks().len() == 1 && pre.halves().len() == 2 && virtual_vertex_count == 1;
    let prime = pre.blocks().len() == 1 && !unitary;
    // every component of an elementary graph is prime or unitary, i.e. no
    // inner edges at all
    let elementary = inner_edges.is_empty();
    let essential_prime = elementary && real_vertex_count == 1;
    let invertible = real_vertex_count == 0;
    let reduced = !pre.is_empty() && virtual_edges.is_empty();
    let closed = real_legs.is_empty() && virtual_legs.is_empty();
    let corolla_valency = if prime { Some(pre.halves().len()) } else { None };
    Classification {
        real_edges,
        virtual_edges,
        inner_edges,
        external_edges,
        real_legs,
        virtual_legs,
        inner_vertices,
        external_vertices,
        real_vertex_count,
        virtual_vertex_count,
        unitary,
        prime,
        essential_prime,
        elementary,
        invertible,
        reduced,
        closed,
        corolla_valency,
    }
}
