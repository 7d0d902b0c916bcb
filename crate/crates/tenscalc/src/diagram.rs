//! Diagrams: planar graphs decorated with objects on edges and morphisms on
//! real vertices, together with fissus diagrams (bracketed boundaries).

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{PlanarError, SchemeError};
use crate::graph::Hid;
use crate::oriented::Sign;
use crate::partition::LinearPartition;
use crate::planar::PlanarGraph;
use crate::scheme::{FiniteScheme, Label, SchemeMap, Word};

/// A decorated planar graph. Edge labels are stored per half-edge and must be
/// sigma-invariant; vertex labels are keyed by the smallest half-edge of the
/// block.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Diagram<O: Label, M: Label> {
    pub planar: PlanarGraph,
    pub edge_labels: BTreeMap<Hid, O>,
    pub vertex_labels: BTreeMap<Hid, M>,
}

pub fn vertex_key(block: &BTreeSet<Hid>) -> Hid {
    block.iter().next().expect("blocks are nonempty").clone()
}

impl<O: Label, M: Label> Diagram<O, M> {
    /// Structural checks every diagram needs regardless of where its labels
    /// live: label totality and sigma-invariance.
    pub fn new(
        planar: PlanarGraph,
        edge_labels: BTreeMap<Hid, O>,
        vertex_labels: BTreeMap<Hid, M>,
    ) -> Result<Self, SchemeError> {
        let pre = planar.oriented().pre();
        for h in pre.halves() {
            let l = edge_labels.get(h).ok_or_else(|| SchemeError::MissingLabel(h.clone()))?;
            if edge_labels.get(pre.sigma(h)) != Some(l) {
                return Err(SchemeError::NotSigmaInvariant(h.clone()));
            }
        }
        for b in pre.blocks() {
            if !pre.is_virtual_vertex(b) && !vertex_labels.contains_key(&vertex_key(b)) {
                return Err(SchemeError::MissingLabel(vertex_key(b)));
            }
        }
        Ok(Diagram { planar, edge_labels, vertex_labels })
    }

    pub fn empty() -> Self {
        Diagram {
            planar: PlanarGraph::empty(),
            edge_labels: BTreeMap::new(),
            vertex_labels: BTreeMap::new(),
        }
    }

    /// One-vertex diagram of a generator: inputs labelled by `src`, outputs
    /// by `tgt`, the vertex by `m`.
    pub fn prime(tag: &str, src: &Word<O>, tgt: &Word<O>, m: M) -> Self {
        let pg = crate::fixtures::prime(tag, src.len(), tgt.len());
        let mut edge_labels = BTreeMap::new();
        for (h, o) in pg.inputs().into_iter().zip(src) {
            edge_labels.insert(h, o.clone());
        }
        for (h, o) in pg.outputs().into_iter().zip(tgt) {
            edge_labels.insert(h, o.clone());
        }
        let key = vertex_key(&pg.oriented().pre().blocks()[0]);
        Diagram { planar: pg, edge_labels, vertex_labels: [(key, m)].into_iter().collect() }
    }

    /// Invertible diagram of a word: one labelled wire per letter.
    pub fn identity(word: &Word<O>) -> Self {
        let mut planar = PlanarGraph::empty();
        let mut edge_labels = BTreeMap::new();
        for (k, o) in word.iter().enumerate() {
            planar = planar.tensor(&crate::fixtures::wire(&format!("id{k}_")));
            edge_labels.insert(format!("id{k}_i"), o.clone());
            edge_labels.insert(format!("id{k}_o"), o.clone());
        }
        // re-key labels through the tensor prefixes
        let pre = planar.oriented().pre();
        let edge_labels = pre
            .halves()
            .iter()
            .map(|h| {
                let tail = h.rsplit(':').next().unwrap();
                (h.clone(), edge_labels[tail].clone())
            })
            .collect();
        Diagram { planar, edge_labels, vertex_labels: BTreeMap::new() }
    }

    pub fn label_of(&self, h: &Hid) -> &O {
        &self.edge_labels[h]
    }

    /// Domain: input labels in planar order.
    pub fn dom(&self) -> Word<O> {
        self.planar.inputs().iter().map(|h| self.edge_labels[h].clone()).collect()
    }

    pub fn cod(&self) -> Word<O> {
        self.planar.outputs().iter().map(|h| self.edge_labels[h].clone()).collect()
    }

    /// Boundary words of a real vertex in half-edge order.
    pub fn vertex_dom_cod(&self, block: &BTreeSet<Hid>) -> (Word<O>, Word<O>) {
        let ins = self
            .planar
            .boundary_of(block, Sign::Plus)
            .into_iter()
            .map(|h| self.edge_labels[&h].clone())
            .collect();
        let outs = self
            .planar
            .boundary_of(block, Sign::Minus)
            .into_iter()
            .map(|h| self.edge_labels[&h].clone())
            .collect();
        (ins, outs)
    }

    pub fn rename(&self, map: &BTreeMap<Hid, Hid>) -> Self {
        let get = |h: &Hid| map.get(h).cloned().unwrap_or_else(|| h.clone());
        let planar = self.planar.rename(map);
        let edge_labels = self.edge_labels.iter().map(|(h, o)| (get(h), o.clone())).collect();
        let pre_old = self.planar.oriented().pre();
        let vertex_labels = self
            .vertex_labels
            .iter()
            .map(|(k, m)| {
                let block = pre_old.blocks().iter().find(|b| b.contains(k)).unwrap();
                let new_key = block.iter().map(&get).min().unwrap();
                (new_key, m.clone())
            })
            .collect();
        Diagram { planar, edge_labels, vertex_labels }
    }

    /// Canonical form: underlying planar graph canonicalized, labels carried
    /// along. Structural equality of canonical forms decides equivalence.
    pub fn canonical_form(&self) -> Self {
        let (_, map) = self.planar.canonical_with_map();
        self.rename(&map)
    }

    pub fn relabel<O2: Label, M2: Label>(
        &self,
        fo: &impl Fn(&O) -> O2,
        fm: &impl Fn(&M) -> M2,
    ) -> Diagram<O2, M2> {
        Diagram {
            planar: self.planar.clone(),
            edge_labels: self.edge_labels.iter().map(|(h, o)| (h.clone(), fo(o))).collect(),
            vertex_labels: self.vertex_labels.iter().map(|(k, m)| (k.clone(), fm(m))).collect(),
        }
    }

    pub fn tensor(&self, other: &Diagram<O, M>) -> Diagram<O, M> {
        let planar = self.planar.tensor(&other.planar);
        let mut edge_labels = BTreeMap::new();
        for (h, o) in &self.edge_labels {
            edge_labels.insert(format!("L:{h}"), o.clone());
        }
        for (h, o) in &other.edge_labels {
            edge_labels.insert(format!("R:{h}"), o.clone());
        }
        let mut vertex_labels = BTreeMap::new();
        for (k, m) in &self.vertex_labels {
            vertex_labels.insert(format!("L:{k}"), m.clone());
        }
        for (k, m) in &other.vertex_labels {
            vertex_labels.insert(format!("R:{k}"), m.clone());
        }
        Diagram { planar, edge_labels, vertex_labels }
    }

    /// Composition: boundary labels must agree pairwise in planar order.
    pub fn compose(&self, next: &Diagram<O, M>) -> Result<Diagram<O, M>, SchemeError> {
        let cod = self.cod();
        let dom = next.dom();
        if cod.len() != dom.len() {
            return Err(SchemeError::NotComposable(cod.len().min(dom.len())));
        }
        for (k, (a, b)) in cod.iter().zip(dom.iter()).enumerate() {
            if a != b {
                return Err(SchemeError::NotComposable(k));
            }
        }
        let planar = self
            .planar
            .compose(&next.planar)
            .map_err(|e| SchemeError::VertexTypeMismatch(format!("{e}")))?;
        let surviving: BTreeSet<Hid> = planar.oriented().pre().halves().clone();
        let mut edge_labels = BTreeMap::new();
        for (h, o) in &self.edge_labels {
            let id = format!("L:{h}");
            if surviving.contains(&id) {
                edge_labels.insert(id, o.clone());
            }
        }
        for (h, o) in &other_labels(next) {
            if surviving.contains(h) {
                edge_labels.insert(h.clone(), o.clone());
            }
        }
        let mut vertex_labels = BTreeMap::new();
        for (k, m) in &self.vertex_labels {
            vertex_labels.insert(format!("L:{k}"), m.clone());
        }
        for (k, m) in &next.vertex_labels {
            vertex_labels.insert(format!("R:{k}"), m.clone());
        }
        Diagram::new(planar, edge_labels, vertex_labels)
    }

    /// Push the diagram forward along a scheme morphism.
    pub fn pushforward<O2: Label, M2: Label>(
        &self,
        map: &SchemeMap<O, M, O2, M2>,
    ) -> Diagram<O2, M2> {
        self.relabel(&|o| map.on_obj[o].clone(), &|m| map.on_mor[m].clone())
    }

    /// Validate vertex types against a finite scheme: each vertex decoration
    /// must have exactly the incident boundary words.
    pub fn validate_in_scheme(&self, scheme: &FiniteScheme<O, M>) -> Result<(), SchemeError> {
        for (h, o) in &self.edge_labels {
            if !scheme.contains_obj(o) {
                return Err(SchemeError::UnknownObject(format!("{o:?} at {h}")));
            }
        }
        let pre = self.planar.oriented().pre();
        for b in pre.blocks() {
            if pre.is_virtual_vertex(b) {
                continue;
            }
            let key = vertex_key(b);
            let m = &self.vertex_labels[&key];
            let (dom, cod) = self.vertex_dom_cod(b);
            if scheme.src(m)? != &dom || scheme.tgt(m)? != &cod {
                return Err(SchemeError::VertexTypeMismatch(key));
            }
        }
        Ok(())
    }
}

fn other_labels<O: Label, M: Label>(d: &Diagram<O, M>) -> BTreeMap<Hid, O> {
    d.edge_labels.iter().map(|(h, o)| (format!("R:{h}"), o.clone())).collect()
}

/// A diagram with bracketed boundary.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct FissusDiagram<O: Label, M: Label> {
    pub diagram: Diagram<O, M>,
    pub p_in: LinearPartition,
    pub p_out: LinearPartition,
}

impl<O: Label, M: Label> FissusDiagram<O, M> {
    pub fn new(
        diagram: Diagram<O, M>,
        p_in: LinearPartition,
        p_out: LinearPartition,
    ) -> Result<Self, PlanarError> {
        let (m, n) = diagram.planar.arity();
        if p_in.len() != m {
            return Err(PlanarError::LengthMismatch { expected: m, got: p_in.len() });
        }
        if p_out.len() != n {
            return Err(PlanarError::LengthMismatch { expected: n, got: p_out.len() });
        }
        Ok(FissusDiagram { diagram, p_in, p_out })
    }

    pub fn fully_fissus(diagram: Diagram<O, M>) -> Self {
        let (m, n) = diagram.planar.arity();
        FissusDiagram {
            diagram,
            p_in: LinearPartition::finest(m),
            p_out: LinearPartition::finest(n),
        }
    }

    /// Bracketed domain and codomain: words of words following the blocks.
    pub fn dom_cod(&self) -> (Word<Word<O>>, Word<Word<O>>) {
        let dom = self.diagram.dom();
        let cod = self.diagram.cod();
        let cut = |w: &Word<O>, p: &LinearPartition| {
            p.ranges().into_iter().map(|r| w[r].to_vec()).collect::<Word<Word<O>>>()
        };
        (cut(&dom, &self.p_in), cut(&cod, &self.p_out))
    }

    pub fn canonical_form(&self) -> Self {
        FissusDiagram {
            diagram: self.diagram.canonical_form(),
            p_in: self.p_in.clone(),
            p_out: self.p_out.clone(),
        }
    }

    pub fn tensor(&self, other: &FissusDiagram<O, M>) -> FissusDiagram<O, M> {
        FissusDiagram {
            diagram: self.diagram.tensor(&other.diagram),
            p_in: self.p_in.product(&other.p_in),
            p_out: self.p_out.product(&other.p_out),
        }
    }

    /// Fissus composition: bracketed interfaces must agree.
    pub fn compose(&self, next: &FissusDiagram<O, M>) -> Result<FissusDiagram<O, M>, SchemeError> {
        if self.p_out != next.p_in {
            return Err(SchemeError::NotComposable(0));
        }
        Ok(FissusDiagram {
            diagram: self.diagram.compose(&next.diagram)?,
            p_in: self.p_in.clone(),
            p_out: next.p_out.clone(),
        })
    }

    /// Identity at a bracketed word: wires with the block partition.
    pub fn identity(bracketed: &Word<Word<O>>) -> Self {
        let flat: Word<O> = bracketed.iter().flatten().cloned().collect();
        let sizes: Vec<usize> = bracketed.iter().map(|b| b.len()).collect();
        let p = if sizes.is_empty() {
            LinearPartition::empty()
        } else {
            LinearPartition::new(sizes).expect("blocks of a bracketed word are nonempty")
        };
        FissusDiagram { diagram: Diagram::identity(&flat), p_in: p.clone(), p_out: p }
    }

    pub fn pushforward<O2: Label, M2: Label>(
        &self,
        map: &SchemeMap<O, M, O2, M2>,
    ) -> FissusDiagram<O2, M2> {
        FissusDiagram {
            diagram: self.diagram.pushforward(map),
            p_in: self.p_in.clone(),
            p_out: self.p_out.clone(),
        }
    }
}
