//! Tensor manifolds: algebras of the fissus-diagram monad, represented by
//! their derived operations (identities, tensor, composition, fusions), with
//! law suites, the comparison constructions in both directions, and the core
//! embedding with its criticality test.

use std::collections::BTreeMap;

use crate::category::{evaluate_with, CategoryBackend};
use crate::diagram::{Diagram, FissusDiagram};
use crate::engine::{monad_mu, monad_unit, Compound, PrimeMor};
use crate::error::{EvalError, LawViolation};
use crate::fissus::{coarse_grain, contraction, FissusPlanarGraph};
use crate::partition::{all_partitions, LinearPartition};
use crate::planar::PlanarGraph;
use crate::scheme::{Label, Word};

/// A tensor manifold presented by derived operations. The fusion family is
/// exposed through `fusion`, which applies the degenerate clause (mismatched
/// partition lengths yield the unit's identity) before `fusion_apply`.
pub trait TensorManifold {
    type Obj: Label;
    type Mor: Label;

    fn mor_src(&self, f: &Self::Mor) -> Word<Self::Obj>;
    fn mor_tgt(&self, f: &Self::Mor) -> Word<Self::Obj>;
    /// The object-monoid action on words.
    fn eps_o(&self, w: &[Self::Obj]) -> Self::Obj;
    fn identity(&self, w: &[Self::Obj]) -> Self::Mor;
    fn tensor(&self, f: &Self::Mor, g: &Self::Mor) -> Self::Mor;
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor, EvalError>;
    /// Fusion for matching partition lengths.
    fn fusion_apply(
        &self,
        p_in: &LinearPartition,
        p_out: &LinearPartition,
        f: &Self::Mor,
    ) -> Self::Mor;

    /// Image of the empty diagram: identity of the unit object.
    fn unit_mor(&self) -> Self::Mor {
        self.identity(&[])
    }

    fn fusion(
        &self,
        p_in: &LinearPartition,
        p_out: &LinearPartition,
        f: &Self::Mor,
    ) -> Self::Mor {
        if p_in.len() != self.mor_src(f).len() || p_out.len() != self.mor_tgt(f).len() {
            return self.unit_mor();
        }
        self.fusion_apply(p_in, p_out, f)
    }

    /// Lift hook for the surjectivity half of criticality: find a morphism
    /// with the given boundary words whose image under the core embedding
    /// has this value.
    fn lift_core(
        &self,
        _dom: &Word<Self::Obj>,
        _cod: &Word<Self::Obj>,
        _value: &Self::Mor,
    ) -> Option<Self::Mor> {
        None
    }
}

/// The strict tensor category derived from a manifold: objects are words,
/// morphisms the manifold's with their word boundaries.
#[derive(Debug, Clone)]
pub struct ManifoldBackend<'a, M: TensorManifold>(pub &'a M);

impl<'a, M: TensorManifold> CategoryBackend for ManifoldBackend<'a, M> {
    type Obj = Word<M::Obj>;
    type Mor = M::Mor;

    fn unit_obj(&self) -> Word<M::Obj> {
        Vec::new()
    }

    fn obj_tensor(&self, a: &Word<M::Obj>, b: &Word<M::Obj>) -> Word<M::Obj> {
        a.iter().chain(b.iter()).cloned().collect()
    }

    fn dom(&self, f: &M::Mor) -> Word<M::Obj> {
        self.0.mor_src(f)
    }

    fn cod(&self, f: &M::Mor) -> Word<M::Obj> {
        self.0.mor_tgt(f)
    }

    fn identity(&self, a: &Word<M::Obj>) -> M::Mor {
        self.0.identity(a)
    }

    fn compose(&self, g: &M::Mor, f: &M::Mor) -> Result<M::Mor, EvalError> {
        self.0.compose(g, f)
    }

    fn tensor(&self, f: &M::Mor, g: &M::Mor) -> M::Mor {
        self.0.tensor(f, g)
    }
}

/// The structure map synthesized from the derived operations: evaluate the
/// diagram in the derived category, then fuse by the fission structure.
pub fn structure_map<M: TensorManifold>(
    m: &M,
    fd: &FissusDiagram<M::Obj, M::Mor>,
) -> Result<M::Mor, EvalError> {
    let value = evaluate_with(
        &fd.diagram,
        &ManifoldBackend(m),
        &|o: &M::Obj| vec![o.clone()],
        &|f: &M::Mor| Ok(f.clone()),
        None,
    )?;
    Ok(m.fusion(&fd.p_in, &fd.p_out, &value))
}

/// The strict tensor category extracted from a manifold: single-object
/// boundaries, with tensor given by fused juxtaposition.
#[derive(Debug, Clone)]
pub struct PsiBackend<'a, M: TensorManifold>(pub &'a M);

impl<'a, M: TensorManifold> CategoryBackend for PsiBackend<'a, M> {
    type Obj = M::Obj;
    type Mor = M::Mor;

    fn unit_obj(&self) -> M::Obj {
        self.0.eps_o(&[])
    }

    fn obj_tensor(&self, a: &M::Obj, b: &M::Obj) -> M::Obj {
        self.0.eps_o(&[a.clone(), b.clone()])
    }

    fn dom(&self, f: &M::Mor) -> M::Obj {
        self.0.eps_o(&self.0.mor_src(f))
    }

    fn cod(&self, f: &M::Mor) -> M::Obj {
        self.0.eps_o(&self.0.mor_tgt(f))
    }

    fn identity(&self, a: &M::Obj) -> M::Mor {
        self.0.identity(std::slice::from_ref(a))
    }

    fn compose(&self, g: &M::Mor, f: &M::Mor) -> Result<M::Mor, EvalError> {
        self.0.compose(g, f)
    }

    fn tensor(&self, f: &M::Mor, g: &M::Mor) -> M::Mor {
        // bracket the juxtaposed boundaries into a single block
        let raw = self.0.tensor(f, g);
        let p_in =
            LinearPartition::trivial(self.0.mor_src(f).len() + self.0.mor_src(g).len());
        let p_out =
            LinearPartition::trivial(self.0.mor_tgt(f).len() + self.0.mor_tgt(g).len());
        self.0.fusion(&p_in, &p_out, &raw)
    }
}

/// Fuse a morphism down to trivial brackets.
pub fn theta_map<M: TensorManifold>(m: &M, f: &M::Mor) -> M::Mor {
    m.fusion(
        &LinearPartition::trivial(m.mor_src(f).len()),
        &LinearPartition::trivial(m.mor_tgt(f).len()),
        f,
    )
}

/// The core embedding: a manifold morphism into the manifold of prime
/// morphisms over the extracted category.
pub fn core_embedding<M: TensorManifold>(m: &M, f: &M::Mor) -> PrimeMor<M::Obj, M::Mor> {
    PrimeMor { dom: m.mor_src(f), cod: m.mor_tgt(f), val: theta_map(m, f) }
}

/// Criticality: the core embedding is bijective on the samples. Injectivity
/// is checked pairwise; surjectivity against the targets induced by sample
/// boundaries and sample core values, using the manifold's lift hook.
pub fn is_critical<M: TensorManifold>(m: &M, sample: &[M::Mor]) -> bool {
    for (i, f) in sample.iter().enumerate() {
        for g in &sample[i + 1..] {
            if f != g && core_embedding(m, f) == core_embedding(m, g) {
                return false;
            }
        }
    }
    for f in sample {
        for g in sample {
            let same_src = m.eps_o(&m.mor_src(f)) == m.eps_o(&m.mor_src(g));
            let same_tgt = m.eps_o(&m.mor_tgt(f)) == m.eps_o(&m.mor_tgt(g));
            if !(same_src && same_tgt) {
                continue;
            }
            let target = PrimeMor {
                dom: m.mor_src(f),
                cod: m.mor_tgt(f),
                val: theta_map(m, g),
            };
            let Some(lift) = m.lift_core(&target.dom, &target.cod, &target.val) else {
                return false;
            };
            if core_embedding(m, &lift) != target {
                return false;
            }
        }
    }
    true
}

// ---------------------------------------------------------------------------
// Instances
// ---------------------------------------------------------------------------

/// The free manifold on a scheme: fissus diagrams with multiplication by
/// compound evaluation.
#[derive(Debug, Clone)]
pub struct FreeManifold<O: Label, M: Label> {
    pub scheme: crate::scheme::FiniteScheme<O, M>,
}

impl<O: Label, M: Label> TensorManifold for FreeManifold<O, M> {
    type Obj = Word<O>;
    type Mor = FissusDiagram<O, M>;

    fn mor_src(&self, f: &Self::Mor) -> Word<Word<O>> {
        f.dom_cod().0
    }

    fn mor_tgt(&self, f: &Self::Mor) -> Word<Word<O>> {
        f.dom_cod().1
    }

    fn eps_o(&self, w: &[Word<O>]) -> Word<O> {
        w.iter().flatten().cloned().collect()
    }

    fn identity(&self, w: &[Word<O>]) -> Self::Mor {
        FissusDiagram::identity(&w.to_vec()).canonical_form()
    }

    fn tensor(&self, f: &Self::Mor, g: &Self::Mor) -> Self::Mor {
        f.tensor(g).canonical_form()
    }

    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor, EvalError> {
        Ok(f.compose(g)?.canonical_form())
    }

    fn fusion_apply(
        &self,
        p_in: &LinearPartition,
        p_out: &LinearPartition,
        f: &Self::Mor,
    ) -> Self::Mor {
        FissusDiagram {
            diagram: f.diagram.clone(),
            p_in: p_in.compose(&f.p_in).expect("length checked by fusion"),
            p_out: p_out.compose(&f.p_out).expect("length checked by fusion"),
        }
        .canonical_form()
    }
}

/// The coarse-graining manifold on prime planar graphs: every operation
/// contracts its compound down to a corolla.
#[derive(Debug, Clone, Default)]
pub struct PrimeGraphManifold;

impl TensorManifold for PrimeGraphManifold {
    type Obj = ();
    type Mor = PlanarGraph;

    fn mor_src(&self, f: &PlanarGraph) -> Word<()> {
        vec![(); f.arity().0]
    }

    fn mor_tgt(&self, f: &PlanarGraph) -> Word<()> {
        vec![(); f.arity().1]
    }

    fn eps_o(&self, _w: &[()]) {}

    fn identity(&self, w: &[()]) -> PlanarGraph {
        if w.is_empty() {
            PlanarGraph::empty()
        } else {
            crate::fixtures::prime("i", w.len(), w.len()).canonical_form()
        }
    }

    fn tensor(&self, f: &PlanarGraph, g: &PlanarGraph) -> PlanarGraph {
        contraction(&f.tensor(g)).canonical_form()
    }

    fn compose(&self, g: &PlanarGraph, f: &PlanarGraph) -> Result<PlanarGraph, EvalError> {
        Ok(contraction(&f.compose(g).map_err(EvalError::Planar)?).canonical_form())
    }

    fn fusion_apply(
        &self,
        p_in: &LinearPartition,
        p_out: &LinearPartition,
        f: &PlanarGraph,
    ) -> PlanarGraph {
        let fissus = FissusPlanarGraph::new(f.clone(), p_in.clone(), p_out.clone())
            .expect("length checked by fusion");
        coarse_grain(&fissus).canonical_form()
    }

    fn lift_core(
        &self,
        dom: &Word<()>,
        cod: &Word<()>,
        _value: &PlanarGraph,
    ) -> Option<PlanarGraph> {
        if dom.is_empty() && cod.is_empty() {
            Some(PlanarGraph::empty())
        } else {
            Some(crate::fixtures::prime("l", dom.len(), cod.len()).canonical_form())
        }
    }
}

/// The coarse-graining manifold on fissus planar graphs: fusion composes the
/// bracket structure; tensor and composition are the fissus operations.
#[derive(Debug, Clone, Default)]
pub struct FissusGraphManifold;

impl TensorManifold for FissusGraphManifold {
    type Obj = usize;
    type Mor = FissusPlanarGraph;

    fn mor_src(&self, f: &FissusPlanarGraph) -> Word<usize> {
        f.p_in.sizes().to_vec()
    }

    fn mor_tgt(&self, f: &FissusPlanarGraph) -> Word<usize> {
        f.p_out.sizes().to_vec()
    }

    fn eps_o(&self, w: &[usize]) -> usize {
        w.iter().sum()
    }

    fn identity(&self, w: &[usize]) -> FissusPlanarGraph {
        let total: usize = w.iter().sum();
        let mut pg = PlanarGraph::empty();
        for k in 0..total {
            pg = pg.tensor(&crate::fixtures::wire(&format!("i{k}_")));
        }
        let p = if w.is_empty() {
            LinearPartition::empty()
        } else {
            LinearPartition::new(w.to_vec()).expect("nonzero block sizes")
        };
        FissusPlanarGraph::new(pg, p.clone(), p).unwrap().canonical_form()
    }

    fn tensor(&self, f: &FissusPlanarGraph, g: &FissusPlanarGraph) -> FissusPlanarGraph {
        f.tensor(g).canonical_form()
    }

    fn compose(
        &self,
        g: &FissusPlanarGraph,
        f: &FissusPlanarGraph,
    ) -> Result<FissusPlanarGraph, EvalError> {
        if f.p_out != g.p_in {
            return Err(EvalError::NotComposableObjects(
                format!("{:?}", f.p_out),
                format!("{:?}", g.p_in),
            ));
        }
        Ok(f.compose(g).map_err(EvalError::Planar)?.canonical_form())
    }

    fn fusion_apply(
        &self,
        p_in: &LinearPartition,
        p_out: &LinearPartition,
        f: &FissusPlanarGraph,
    ) -> FissusPlanarGraph {
        FissusPlanarGraph {
            planar: f.planar.clone(),
            p_in: p_in.compose(&f.p_in).expect("length checked by fusion"),
            p_out: p_out.compose(&f.p_out).expect("length checked by fusion"),
        }
        .canonical_form()
    }
}

/// The manifold of prime morphisms over a backend: boundary words with a
/// value, fusion folds the words blockwise. This is the comparison image of
/// the backend.
#[derive(Debug, Clone)]
pub struct PhiManifold<V: CategoryBackend>(pub V);

impl<V: CategoryBackend> TensorManifold for PhiManifold<V> {
    type Obj = V::Obj;
    type Mor = PrimeMor<V::Obj, V::Mor>;

    fn mor_src(&self, f: &Self::Mor) -> Word<V::Obj> {
        f.dom.clone()
    }

    fn mor_tgt(&self, f: &Self::Mor) -> Word<V::Obj> {
        f.cod.clone()
    }

    fn eps_o(&self, w: &[V::Obj]) -> V::Obj {
        self.0.fold_obj(w)
    }

    fn identity(&self, w: &[V::Obj]) -> Self::Mor {
        PrimeMor {
            dom: w.to_vec(),
            cod: w.to_vec(),
            val: self.0.identity(&self.0.fold_obj(w)),
        }
    }

    fn tensor(&self, f: &Self::Mor, g: &Self::Mor) -> Self::Mor {
        PrimeMor {
            dom: f.dom.iter().chain(g.dom.iter()).cloned().collect(),
            cod: f.cod.iter().chain(g.cod.iter()).cloned().collect(),
            val: self.0.tensor(&f.val, &g.val),
        }
    }

    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor, EvalError> {
        if f.cod != g.dom {
            return Err(EvalError::NotComposableObjects(
                format!("{:?}", f.cod),
                format!("{:?}", g.dom),
            ));
        }
        Ok(PrimeMor {
            dom: f.dom.clone(),
            cod: g.cod.clone(),
            val: self.0.compose(&g.val, &f.val)?,
        })
    }

    fn fusion_apply(
        &self,
        p_in: &LinearPartition,
        p_out: &LinearPartition,
        f: &Self::Mor,
    ) -> Self::Mor {
        let fold = |w: &Word<V::Obj>, p: &LinearPartition| {
            p.ranges().into_iter().map(|r| self.0.fold_obj(&w[r])).collect::<Word<V::Obj>>()
        };
        PrimeMor {
            dom: fold(&f.dom, p_in),
            cod: fold(&f.cod, p_out),
            val: f.val.clone(),
        }
    }

    fn lift_core(
        &self,
        dom: &Word<V::Obj>,
        cod: &Word<V::Obj>,
        value: &Self::Mor,
    ) -> Option<Self::Mor> {
        Some(PrimeMor { dom: dom.clone(), cod: cod.clone(), val: value.val.clone() })
    }
}

/// Witness manifold for non-monadicity: prime graphs together with finitely
/// many extra non-prime morphisms. Operations coincide with the prime
/// coarse-graining manifold (their outputs stay prime), but the extra
/// members collapse onto corollas under the core embedding.
#[derive(Debug, Clone)]
pub struct WitnessGraphManifold {
    pub extras: Vec<PlanarGraph>,
}

impl WitnessGraphManifold {
    /// Prime graphs plus one two-vertex (2,1)-graph.
    pub fn standard() -> Self {
        let top = crate::fixtures::prime("a", 2, 1);
        let bot = crate::fixtures::prime("b", 1, 1);
        let extra = top.compose(&bot).unwrap().canonical_form();
        WitnessGraphManifold { extras: vec![extra] }
    }
}

impl TensorManifold for WitnessGraphManifold {
    type Obj = ();
    type Mor = PlanarGraph;

    fn mor_src(&self, f: &PlanarGraph) -> Word<()> {
        PrimeGraphManifold.mor_src(f)
    }

    fn mor_tgt(&self, f: &PlanarGraph) -> Word<()> {
        PrimeGraphManifold.mor_tgt(f)
    }

    fn eps_o(&self, _w: &[()]) {}

    fn identity(&self, w: &[()]) -> PlanarGraph {
        PrimeGraphManifold.identity(w)
    }

    fn tensor(&self, f: &PlanarGraph, g: &PlanarGraph) -> PlanarGraph {
        PrimeGraphManifold.tensor(f, g)
    }

    fn compose(&self, g: &PlanarGraph, f: &PlanarGraph) -> Result<PlanarGraph, EvalError> {
        PrimeGraphManifold.compose(g, f)
    }

    fn fusion_apply(
        &self,
        p_in: &LinearPartition,
        p_out: &LinearPartition,
        f: &PlanarGraph,
    ) -> PlanarGraph {
        PrimeGraphManifold.fusion_apply(p_in, p_out, f)
    }

    fn lift_core(
        &self,
        dom: &Word<()>,
        cod: &Word<()>,
        _value: &PlanarGraph,
    ) -> Option<PlanarGraph> {
        // the corolla with these boundaries always maps onto the target
        if dom.is_empty() && cod.is_empty() {
            Some(PlanarGraph::empty())
        } else {
            Some(crate::fixtures::prime("l", dom.len(), cod.len()).canonical_form())
        }
    }
}

impl PrimeGraphManifold {
    pub fn sample_morphisms(max_arity: usize) -> Vec<PlanarGraph> {
        let mut out = Vec::new();
        for m in 1..=max_arity {
            for n in 1..=max_arity {
                out.push(crate::fixtures::prime("s", m, n).canonical_form());
            }
        }
        out
    }
}

// ---------------------------------------------------------------------------
// Law suites
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct ManifoldSamples<M: TensorManifold> {
    pub words: Vec<Word<M::Obj>>,
    pub morphisms: Vec<M::Mor>,
    pub composable_pairs: Vec<(M::Mor, M::Mor)>,
    pub composable_triples: Vec<(M::Mor, M::Mor, M::Mor)>,
    pub interchange_quads: Vec<((M::Mor, M::Mor), (M::Mor, M::Mor))>,
    pub fissus_diagrams: Vec<FissusDiagram<M::Obj, M::Mor>>,
    pub compounds: Vec<Compound<M::Obj, M::Mor>>,
}

impl<M: TensorManifold> Default for ManifoldSamples<M> {
    fn default() -> Self {
        ManifoldSamples {
            words: Vec::new(),
            morphisms: Vec::new(),
            composable_pairs: Vec::new(),
            composable_triples: Vec::new(),
            interchange_quads: Vec::new(),
            fissus_diagrams: Vec::new(),
            compounds: Vec::new(),
        }
    }
}

/// Check every derived-operation law of a manifold on the samples.
pub fn derived_op_laws<M: TensorManifold>(m: &M, s: &ManifoldSamples<M>) -> Vec<LawViolation> {
    let mut out = Vec::new();
    let mut fail = |law: &str, witness: String| {
        out.push(LawViolation { law: law.to_string(), witness });
    };

    if s.morphisms.len() >= 3 {
        for w in s.morphisms.windows(3) {
            let (f, g, h) = (&w[0], &w[1], &w[2]);
            if m.tensor(&m.tensor(f, g), h) != m.tensor(f, &m.tensor(g, h)) {
                fail("tensor-associativity", format!("{f:?}"));
            }
        }
    }
    for (f, g, h) in &s.composable_triples {
        let l = m.compose(h, &m.compose(g, f).unwrap()).unwrap();
        let r = m.compose(&m.compose(h, g).unwrap(), f).unwrap();
        if l != r {
            fail("compose-associativity", format!("{f:?}"));
        }
    }
    for ((f, g), (f2, g2)) in &s.interchange_quads {
        let l = m.tensor(&m.compose(g, f).unwrap(), &m.compose(g2, f2).unwrap());
        let r = m
            .compose(&m.tensor(g, g2), &m.tensor(f, f2))
            .expect("tensored pairs stay composable");
        if l != r {
            fail("middle-four-interchange", format!("{f:?}"));
        }
    }
    for w in &s.words {
        let folded = m.identity(w);
        let pieces = w
            .iter()
            .map(|x| m.identity(std::slice::from_ref(x)))
            .reduce(|a, b| m.tensor(&a, &b));
        if let Some(p) = pieces {
            if p != folded {
                fail("identity-product", format!("{w:?}"));
            }
        }
    }
    for f in &s.morphisms {
        let pre = m.identity(&m.mor_src(f));
        let post = m.identity(&m.mor_tgt(f));
        if m.compose(f, &pre).ok().as_ref() != Some(f)
            || m.compose(&post, f).ok().as_ref() != Some(f)
        {
            fail("unit-law", format!("{f:?}"));
        }
    }
    // fusion laws, quantified over all partitions of the boundary
    for f in &s.morphisms {
        let (sm, sn) = (m.mor_src(f).len(), m.mor_tgt(f).len());
        for i2 in all_partitions(sm) {
            for o2 in all_partitions(sn) {
                let once = m.fusion(&i2, &o2, f);
                for i1 in all_partitions(i2.card()) {
                    for o1 in all_partitions(o2.card()) {
                        let twice = m.fusion(&i1, &o1, &once);
                        let composed = m.fusion(
                            &i1.compose(&i2).unwrap(),
                            &o1.compose(&o2).unwrap(),
                            f,
                        );
                        if twice != composed {
                            fail("fusion-composition", format!("{i1:?} after {i2:?} on {f:?}"));
                        }
                    }
                }
            }
        }
        // degenerate clause
        let bad = LinearPartition::new(vec![sm + 1]).unwrap();
        if m.fusion(&bad, &LinearPartition::trivial(sn), f) != m.unit_mor() {
            fail("fusion-degenerate", format!("{f:?}"));
        }
    }
    for (i, f) in s.morphisms.iter().enumerate() {
        for g in &s.morphisms[i..] {
            let (fm, fnn) = (m.mor_src(f).len(), m.mor_tgt(f).len());
            let (gm, gn) = (m.mor_src(g).len(), m.mor_tgt(g).len());
            for i1 in all_partitions(fm).into_iter().take(3) {
                for o1 in all_partitions(fnn).into_iter().take(3) {
                    for i2 in all_partitions(gm).into_iter().take(3) {
                        for o2 in all_partitions(gn).into_iter().take(3) {
                            let l = m.fusion(
                                &i1.product(&i2),
                                &o1.product(&o2),
                                &m.tensor(f, g),
                            );
                            let r = m.tensor(
                                &m.fusion(&i1, &o1, f),
                                &m.fusion(&i2, &o2, g),
                            );
                            if l != r {
                                fail("fusion-tensor", format!("{f:?}, {g:?}"));
                            }
                            // corollary: a further fusion on top
                            let i = LinearPartition::trivial(i1.card() + i2.card());
                            let o = LinearPartition::trivial(o1.card() + o2.card());
                            let ll = m.fusion(
                                &i.compose(&i1.product(&i2)).unwrap(),
                                &o.compose(&o1.product(&o2)).unwrap(),
                                &m.tensor(f, g),
                            );
                            let rr = m.fusion(&i, &o, &r);
                            if ll != rr {
                                fail("fusion-tensor-corollary", format!("{f:?}, {g:?}"));
                            }
                        }
                    }
                }
            }
        }
    }
    for (f, g) in &s.composable_pairs {
        let (fm, k) = (m.mor_src(f).len(), m.mor_tgt(f).len());
        let gn = m.mor_tgt(g).len();
        let gf = m.compose(g, f).unwrap();
        for i1 in all_partitions(fm).into_iter().take(3) {
            for omid in all_partitions(k).into_iter().take(3) {
                for o2 in all_partitions(gn).into_iter().take(3) {
                    let l = m.fusion(&i1, &o2, &gf);
                    let fused_f = m.fusion(&i1, &omid, f);
                    let fused_g = m.fusion(&omid, &o2, g);
                    let r = m.compose(&fused_g, &fused_f).unwrap();
                    if l != r {
                        fail("fusion-composition-compat", format!("{f:?}, {g:?}"));
                    }
                    // corollary: further fusion on the outer brackets
                    let i = LinearPartition::trivial(i1.card());
                    let o = LinearPartition::trivial(o2.card());
                    let ll = m.fusion(
                        &i.compose(&i1).unwrap(),
                        &o.compose(&o2).unwrap(),
                        &gf,
                    );
                    let rr = m.fusion(&i, &o, &r);
                    if ll != rr {
                        fail("fusion-composition-corollary", format!("{f:?}, {g:?}"));
                    }
                }
            }
        }
    }
    // theta laws
    for f in &s.morphisms {
        let t = theta_map(m, f);
        if theta_map(m, &t) != t {
            fail("theta-idempotence", format!("{f:?}"));
        }
    }
    out
}

/// Check the algebra squares: unit triangle on generators and associativity
/// against the multiplication on compounds.
pub fn check_algebra_laws<M: TensorManifold>(m: &M, s: &ManifoldSamples<M>) -> Vec<LawViolation> {
    let mut out = Vec::new();
    let mut fail = |law: &str, witness: String| {
        out.push(LawViolation { law: law.to_string(), witness });
    };
    for f in &s.morphisms {
        let eta = FissusDiagram::fully_fissus(Diagram::prime(
            "e",
            &m.mor_src(f),
            &m.mor_tgt(f),
            f.clone(),
        ));
        match structure_map(m, &eta) {
            Ok(v) if &v == f => {}
            other => fail(
                "unit-triangle",
                format!("{f:?} evaluated to {other:?}"),
            ),
        }
    }
    for fd in &s.fissus_diagrams {
        // the structure map must agree with itself through the unit compound
        let c = monad_unit(fd);
        let via_mu = monad_mu(&c).and_then(|x| structure_map(m, &x));
        let direct = structure_map(m, fd);
        match (via_mu, direct) {
            (Ok(a), Ok(b)) if a == b => {}
            other => fail("unit-compound", format!("{fd:?}: {other:?}")),
        }
    }
    for c in &s.compounds {
        // eps . T(eps) = eps . mu
        let via_mu = monad_mu(c).and_then(|fd| structure_map(m, &fd));
        let collapsed = FissusDiagram {
            diagram: c.diagram.relabel(&|w: &Word<M::Obj>| m.eps_o(w), &|fd| {
                structure_map(m, fd).expect("sampled compounds are well-typed")
            }),
            p_in: c.p_in.clone(),
            p_out: c.p_out.clone(),
        };
        let via_teps = structure_map(m, &collapsed);
        match (via_mu, via_teps) {
            (Ok(a), Ok(b)) if a == b => {}
            other => fail("associativity-square", format!("{other:?}")),
        }
    }
    out
}

/// A manifold morphism given on samples, with the preservation checks of the
/// characterization (identities, tensor, composition, fusions imply
/// commuting with the structure maps).
pub struct ManifoldMap<A: TensorManifold, B: TensorManifold> {
    pub on_obj: BTreeMap<A::Obj, B::Obj>,
    pub on_mor: BTreeMap<A::Mor, B::Mor>,
}

impl<A: TensorManifold, B: TensorManifold> ManifoldMap<A, B> {
    pub fn apply_word(&self, w: &[A::Obj]) -> Word<B::Obj> {
        w.iter().map(|x| self.on_obj[x].clone()).collect()
    }

    /// Check preservation of the derived operations on the samples, and that
    /// the map commutes with the structure maps on the sampled diagrams.
    pub fn check(&self, a: &A, b: &B, s: &ManifoldSamples<A>) -> Vec<LawViolation> {
        let mut out = Vec::new();
        let mut fail = |law: &str, witness: String| {
            out.push(LawViolation { law: law.to_string(), witness });
        };
        for w in &s.words {
            if !self.on_mor.contains_key(&a.identity(w)) {
                continue;
            }
            if self.on_mor[&a.identity(w)] != b.identity(&self.apply_word(w)) {
                fail("preserve-identity", format!("{w:?}"));
            }
        }
        for (f, g) in &s.composable_pairs {
            let (Some(bf), Some(bg)) = (self.on_mor.get(f), self.on_mor.get(g)) else {
                continue;
            };
            if let Some(l) = self.on_mor.get(&a.compose(g, f).unwrap()) {
                if l != &b.compose(bg, bf).unwrap() {
                    fail("preserve-composition", format!("{f:?}"));
                }
            }
        }
        for (i, f) in s.morphisms.iter().enumerate() {
            for g in &s.morphisms[i..] {
                let (Some(bf), Some(bg)) = (self.on_mor.get(f), self.on_mor.get(g)) else {
                    continue;
                };
                if let Some(l) = self.on_mor.get(&a.tensor(f, g)) {
                    if l != &b.tensor(bf, bg) {
                        fail("preserve-tensor", format!("{f:?}"));
                    }
                }
            }
        }
        for fd in &s.fissus_diagrams {
            let all_known = fd.diagram.vertex_labels.values().all(|m| self.on_mor.contains_key(m));
            if !all_known {
                continue;
            }
            let mapped = FissusDiagram {
                diagram: fd
                    .diagram
                    .relabel(&|o| self.on_obj[o].clone(), &|m| self.on_mor[m].clone()),
                p_in: fd.p_in.clone(),
                p_out: fd.p_out.clone(),
            };
            let lhs = structure_map(a, fd).ok().and_then(|v| self.on_mor.get(&v).cloned());
            let rhs = structure_map(b, &mapped).ok();
            if let (Some(l), Some(r)) = (lhs, rhs) {
                if l != r {
                    fail("commute-with-structure", format!("{fd:?}"));
                }
            }
        }
        out
    }
}

/// Transpose functor data out of the extracted category: the adjunction
/// between extraction and comparison, on generator actions.
pub struct CoreFunctor<M: TensorManifold, V: CategoryBackend> {
    pub on_obj: BTreeMap<M::Obj, V::Obj>,
    pub on_mor: BTreeMap<M::Mor, V::Mor>,
}

/// Xi: turn functor data out of Psi(m) into a manifold morphism from m to
/// the comparison manifold of V.
pub fn xi<M: TensorManifold, V: CategoryBackend>(
    m: &M,
    k: &CoreFunctor<M, V>,
    sample: &[M::Mor],
) -> BTreeMap<M::Mor, PrimeMor<V::Obj, V::Mor>> {
    sample
        .iter()
        .map(|f| {
            let theta = theta_map(m, f);
            let img = PrimeMor {
                dom: m.mor_src(f).iter().map(|x| k.on_obj[x].clone()).collect(),
                cod: m.mor_tgt(f).iter().map(|x| k.on_obj[x].clone()).collect(),
                val: k.on_mor[&theta].clone(),
            };
            (f.clone(), img)
        })
        .collect()
}

/// Xi inverse: restrict a manifold morphism into the comparison manifold back
/// to functor data on the extracted category.
pub fn xi_inverse<M: TensorManifold, V: CategoryBackend>(
    images: &BTreeMap<M::Mor, PrimeMor<V::Obj, V::Mor>>,
) -> BTreeMap<M::Mor, V::Mor> {
    images.iter().map(|(f, p)| (f.clone(), p.val.clone())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::MatrixCategory;
    use crate::fixtures::prime;
    use crate::matrix::RatMatrix;
    use crate::scheme::FiniteScheme;

    fn s(x: &str) -> String {
        x.into()
    }

    type Phi = PhiManifold<MatrixCategory>;

    fn phi() -> Phi {
        PhiManifold(MatrixCategory)
    }

    fn pm(dom: Vec<u64>, cod: Vec<u64>, seed: i64) -> PrimeMor<u64, RatMatrix> {
        let r: usize = cod.iter().product::<u64>() as usize;
        let c: usize = dom.iter().product::<u64>() as usize;
        let data: Vec<i64> = (0..(r * c) as i64).map(|k| (k * seed + 1) % 5 - 2).collect();
        PrimeMor { dom, cod, val: RatMatrix::from_i64(r, c, &data) }
    }

    fn phi_samples() -> ManifoldSamples<Phi> {
        let f = pm(vec![2, 2], vec![3], 2);
        let g = pm(vec![3], vec![2], 3);
        let h = pm(vec![2], vec![2, 2], 5);
        let k = pm(vec![2], vec![3], 7);
        let fd = {
            let df = Diagram::prime("f", &vec![2u64, 2], &vec![3u64], f.clone());
            let dg = Diagram::prime("g", &vec![3u64], &vec![2u64], g.clone());
            FissusDiagram::new(
                df.compose(&dg).unwrap(),
                LinearPartition::new(vec![2]).unwrap(),
                LinearPartition::new(vec![1]).unwrap(),
            )
            .unwrap()
        };
        let compound = monad_unit(&fd);
        ManifoldSamples {
            words: vec![vec![], vec![2], vec![2, 3], vec![3, 2, 2]],
            morphisms: vec![f.clone(), g.clone(), h.clone(), k.clone()],
            composable_pairs: vec![(f.clone(), g.clone()), (g.clone(), h.clone())],
            composable_triples: vec![(f.clone(), g.clone(), h.clone())],
            interchange_quads: vec![((f.clone(), g.clone()), (g.clone(), h.clone()))],
            fissus_diagrams: vec![fd],
            compounds: vec![compound],
        }
    }

    #[test]
    fn phi_passes_all_laws() {
        let m = phi();
        let s = phi_samples();
        assert_eq!(derived_op_laws(&m, &s), vec![]);
        assert_eq!(check_algebra_laws(&m, &s), vec![]);
    }

    #[test]
    fn structure_map_is_fused_evaluation() {
        let m = phi();
        let f = pm(vec![2, 2], vec![3], 2);
        let g = pm(vec![3], vec![2], 3);
        let df = Diagram::prime("f", &vec![2u64, 2], &vec![3u64], f.clone());
        let dg = Diagram::prime("g", &vec![3u64], &vec![2u64], g.clone());
        let chain = df.compose(&dg).unwrap();
        let fd = FissusDiagram::new(
            chain,
            LinearPartition::new(vec![2]).unwrap(),
            LinearPartition::new(vec![1]).unwrap(),
        )
        .unwrap();
        let got = structure_map(&m, &fd).unwrap();
        assert_eq!(got.dom, vec![4]);
        assert_eq!(got.cod, vec![2]);
        assert_eq!(got.val, g.val.mul(&f.val));

        // fully fissus prime evaluates back to the generator
        let eta = FissusDiagram::fully_fissus(Diagram::prime(
            "e",
            &vec![2u64, 2],
            &vec![3u64],
            f.clone(),
        ));
        assert_eq!(structure_map(&m, &eta).unwrap(), f);

        // empty diagram gives the unit identity
        let empty = FissusDiagram::fully_fissus(Diagram::empty());
        assert_eq!(structure_map(&m, &empty).unwrap(), m.unit_mor());
    }

    #[test]
    fn ops_rederive_from_structure_map() {
        let m = phi();
        let f = pm(vec![2], vec![3], 2);
        let g = pm(vec![3], vec![2], 3);
        // tensor through the structure map
        let two_vertex = Diagram::prime("f", &f.dom, &f.cod, f.clone())
            .tensor(&Diagram::prime("g", &g.dom, &g.cod, g.clone()));
        let fd = FissusDiagram::fully_fissus(two_vertex);
        assert_eq!(structure_map(&m, &fd).unwrap(), m.tensor(&f, &g));
        // composition through the structure map
        let chain = Diagram::prime("f", &f.dom, &f.cod, f.clone())
            .compose(&Diagram::prime("g", &g.dom, &g.cod, g.clone()))
            .unwrap();
        let fd2 = FissusDiagram::fully_fissus(chain);
        assert_eq!(structure_map(&m, &fd2).unwrap(), m.compose(&g, &f).unwrap());
        // fusion through the structure map
        let i = LinearPartition::trivial(1);
        let o = LinearPartition::trivial(1);
        let fd3 = FissusDiagram::new(
            Diagram::prime("f", &f.dom, &f.cod, f.clone()),
            i.clone(),
            o.clone(),
        )
        .unwrap();
        assert_eq!(structure_map(&m, &fd3).unwrap(), m.fusion(&i, &o, &f));
    }

    #[test]
    fn free_manifold_laws() {
        let scheme = FiniteScheme::new(
            [s("x"), s("y")],
            [
                (s("f"), vec![s("x"), s("x")], vec![s("y")]),
                (s("g"), vec![s("y")], vec![s("x")]),
            ],
        )
        .unwrap();
        let m = FreeManifold { scheme: scheme.clone() };
        let df = FissusDiagram::fully_fissus(Diagram::prime(
            "f",
            &vec![s("x"), s("x")],
            &vec![s("y")],
            s("f"),
        ))
        .canonical_form();
        let dg = FissusDiagram::fully_fissus(Diagram::prime(
            "g",
            &vec![s("y")],
            &vec![s("x")],
            s("g"),
        ))
        .canonical_form();
        let chain = m.compose(&dg, &df).unwrap();
        let samples = ManifoldSamples::<FreeManifold<String, String>> {
            words: vec![vec![], vec![vec![s("x")]], vec![vec![s("x"), s("y")], vec![s("x")]]],
            morphisms: vec![df.clone(), dg.clone(), chain.clone()],
            composable_pairs: vec![(df.clone(), dg.clone())],
            composable_triples: vec![],
            interchange_quads: vec![((df.clone(), dg.clone()), (df.clone(), dg.clone()))],
            fissus_diagrams: vec![],
            compounds: vec![],
        };
        assert_eq!(derived_op_laws(&m, &samples), vec![]);
        assert_eq!(check_algebra_laws(&m, &samples), vec![]);
    }

    #[test]
    fn graph_manifold_laws() {
        let m = PrimeGraphManifold;
        let mors = PrimeGraphManifold::sample_morphisms(3);
        let p21 = prime("a", 2, 1).canonical_form();
        let p12 = prime("b", 1, 2).canonical_form();
        let p11 = prime("c", 1, 1).canonical_form();
        let samples = ManifoldSamples::<PrimeGraphManifold> {
            words: vec![vec![], vec![()], vec![(), ()]],
            morphisms: mors,
            composable_pairs: vec![(p21.clone(), p12.clone()), (p11.clone(), p11.clone())],
            composable_triples: vec![(p21.clone(), p12.clone(), p21.clone())],
            interchange_quads: vec![((p21.clone(), p12.clone()), (p12.clone(), p21.clone()))],
            fissus_diagrams: vec![],
            compounds: vec![],
        };
        assert_eq!(derived_op_laws(&m, &samples), vec![]);
        assert_eq!(check_algebra_laws(&m, &samples), vec![]);

        // fissus variant
        let fm = FissusGraphManifold;
        let lift = |pg: &PlanarGraph, pi: Vec<usize>, po: Vec<usize>| {
            FissusPlanarGraph::new(
                pg.clone(),
                LinearPartition::new(pi).unwrap(),
                LinearPartition::new(po).unwrap(),
            )
            .unwrap()
            .canonical_form()
        };
        let f = lift(&prime("a", 2, 1), vec![1, 1], vec![1]);
        let g = lift(&prime("b", 1, 2), vec![1], vec![1, 1]);
        let h = lift(&prime("c", 2, 2), vec![1, 1], vec![1, 1]);
        let samples = ManifoldSamples::<FissusGraphManifold> {
            words: vec![vec![], vec![2], vec![1, 3]],
            morphisms: vec![f.clone(), g.clone(), h.clone()],
            composable_pairs: vec![(f.clone(), g.clone()), (h.clone(), h.clone())],
            composable_triples: vec![(f.clone(), g.clone(), h.clone())],
            interchange_quads: vec![((f.clone(), g.clone()), (g.clone(), f.clone()))],
            fissus_diagrams: vec![],
            compounds: vec![],
        };
        assert_eq!(derived_op_laws(&fm, &samples), vec![]);
        assert_eq!(check_algebra_laws(&fm, &samples), vec![]);
    }

    #[test]
    fn criticality() {
        // the comparison manifold of the matrix category is critical
        let m = phi();
        let sample = vec![
            pm(vec![2, 2], vec![3], 2),
            pm(vec![4], vec![3], 4),
            pm(vec![3], vec![2], 3),
            pm(vec![2], vec![2, 3], 5),
        ];
        assert!(is_critical(&m, &sample));

        // prime graphs are the comparison manifold of the one-object
        // category, hence critical
        let p = PrimeGraphManifold;
        assert!(is_critical(&p, &PrimeGraphManifold::sample_morphisms(3)));

        // adding a non-prime morphism breaks injectivity of the core map
        let w = WitnessGraphManifold::standard();
        let mut sample = PrimeGraphManifold::sample_morphisms(3);
        sample.extend(w.extras.clone());
        assert!(!is_critical(&w, &sample));
    }

    #[test]
    fn theta_preserves_structure() {
        let m = phi();
        let f = pm(vec![2, 2], vec![3], 2);
        let g = pm(vec![3], vec![2], 3);
        // theta preserves identities
        let w = vec![2u64, 3];
        assert_eq!(theta_map(&m, &m.identity(&w)), m.identity(&[6]));
        // theta respects fusions (fusing first changes nothing)
        for i in all_partitions(2) {
            for o in all_partitions(1) {
                assert_eq!(
                    theta_map(&m, &m.fusion(&i, &o, &f)),
                    theta_map(&m, &f)
                );
            }
        }
        // theta turns composition into composition of fused morphisms
        let gf = m.compose(&g, &f).unwrap();
        let tf = theta_map(&m, &f);
        let tg = theta_map(&m, &g);
        assert_eq!(theta_map(&m, &gf), m.compose(&tg, &tf).unwrap());
    }

    #[test]
    fn xi_round_trip() {
        let m = phi();
        let sample = vec![pm(vec![2], vec![3], 2), pm(vec![3], vec![2], 3)];
        // K: the evident functor Psi(Phi(Mat)) -> Mat, sending a prime
        // morphism to its matrix
        let mut on_obj = BTreeMap::new();
        for o in [1u64, 2, 3, 4, 6] {
            on_obj.insert(o, o);
        }
        let mut on_mor = BTreeMap::new();
        for f in &sample {
            let t = theta_map(&m, f);
            let val = t.val.clone();
            on_mor.insert(t, val);
        }
        let k = CoreFunctor::<Phi, MatrixCategory> { on_obj, on_mor };
        let images = xi(&m, &k, &sample);
        let back = xi_inverse::<Phi, MatrixCategory>(&images);
        for f in &sample {
            assert_eq!(back[f], theta_map(&m, f).val);
            // the image has the expected boundary words
            assert_eq!(images[f].dom, m.mor_src(f));
        }
    }

    #[test]
    fn psi_of_phi_agrees_with_matrix_category() {
        use crate::category::{check_backend, BackendSamples, CategoryBackend};
        let m = phi();
        let psi = PsiBackend(&m);
        let v = MatrixCategory;
        // objects multiply
        assert_eq!(psi.obj_tensor(&2, &3), 6);
        assert_eq!(psi.unit_obj(), 1);
        // morphisms carry matrices; compose and tensor agree with matrices
        let j = |mat: &RatMatrix| PrimeMor {
            dom: vec![mat.cols() as u64],
            cod: vec![mat.rows() as u64],
            val: mat.clone(),
        };
        let a = RatMatrix::from_i64(2, 2, &[1, 2, 3, 4]);
        let b = RatMatrix::from_i64(3, 2, &[1, 0, 0, 1, 2, 2]);
        assert_eq!(psi.compose(&j(&b), &j(&a)).unwrap().val, b.mul(&a));
        assert_eq!(psi.tensor(&j(&a), &j(&b)).val, a.kron(&b));
        assert_eq!(psi.identity(&5).val, v.identity(&5));

        let samples = BackendSamples::<PsiBackend<Phi>> {
            objects: vec![1, 2, 3, 6],
            morphisms: vec![j(&a), j(&b)],
            composable_pairs: vec![(j(&a), j(&b))],
            composable_triples: vec![(j(&a), j(&a), j(&a))],
            interchange_quads: vec![((j(&a), j(&a)), (j(&a), j(&b)))],
        };
        let bad = check_backend(&psi, &samples);
        assert_eq!(bad, vec![]);
    }

    #[test]
    fn mutated_fusion_is_caught() {
        // a deliberately broken manifold: fusion forgets the partitions
        #[derive(Debug, Clone)]
        struct Broken(Phi);
        impl TensorManifold for Broken {
            type Obj = u64;
            type Mor = PrimeMor<u64, RatMatrix>;
            fn mor_src(&self, f: &Self::Mor) -> Word<u64> {
                self.0.mor_src(f)
            }
            fn mor_tgt(&self, f: &Self::Mor) -> Word<u64> {
                self.0.mor_tgt(f)
            }
            fn eps_o(&self, w: &[u64]) -> u64 {
                self.0.eps_o(w)
            }
            fn identity(&self, w: &[u64]) -> Self::Mor {
                self.0.identity(w)
            }
            fn tensor(&self, f: &Self::Mor, g: &Self::Mor) -> Self::Mor {
                self.0.tensor(f, g)
            }
            fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor, EvalError> {
                self.0.compose(g, f)
            }
            fn fusion_apply(
                &self,
                _p_in: &LinearPartition,
                _p_out: &LinearPartition,
                f: &Self::Mor,
            ) -> Self::Mor {
                f.clone()
            }
        }
        let m = Broken(phi());
        let f = pm(vec![2, 2], vec![3], 2);
        let samples = ManifoldSamples::<Broken> {
            words: vec![vec![2, 2]],
            morphisms: vec![f],
            composable_pairs: vec![],
            composable_triples: vec![],
            interchange_quads: vec![],
            fissus_diagrams: vec![],
            compounds: vec![],
        };
        let violations = derived_op_laws(&m, &samples);
        assert!(violations.iter().any(|v| v.law.starts_with("fusion")));
    }
}
