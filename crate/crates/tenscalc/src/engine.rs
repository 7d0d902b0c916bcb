//! The free/fission adjunction made executable: prime morphisms and the
//! fission scheme of a backend, transposition of functor data, the unit and
//! counit, the fissus-diagram monad with its multiplication, and compound
//! graph evaluation.

use std::collections::BTreeMap;

use crate::category::{
    evaluate_with, CategoryBackend, DiagCategory, FissusPlanarCat, FreeCategory, PlanarCat,
};
use crate::diagram::{Diagram, FissusDiagram};
use crate::error::EvalError;
use crate::fissus::FissusPlanarGraph;
use crate::partition::LinearPartition;
use crate::planar::PlanarGraph;
use crate::scheme::{FiniteScheme, Label, Word};

/// A prime diagram in a backend, up to isomorphism: boundary words plus the
/// vertex value. Empty boundaries encode the unit's identity (the image of
/// the empty diagram).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PrimeMor<O: Label, M: Label> {
    pub dom: Word<O>,
    pub cod: Word<O>,
    pub val: M,
}

impl<O: Label, M: Label> PrimeMor<O, M> {
    /// Materialize as a one-vertex diagram (empty boundaries give the empty
    /// diagram).
    pub fn as_diagram(&self) -> Diagram<O, M> {
        if self.dom.is_empty() && self.cod.is_empty() {
            Diagram::empty()
        } else {
            Diagram::prime("p", &self.dom, &self.cod, self.val.clone())
        }
    }
}

/// j: wrap a backend morphism as the prime diagram on its endpoints.
pub fn prime_of_mor<V: CategoryBackend>(v: &V, g: &V::Mor) -> PrimeMor<V::Obj, V::Mor> {
    PrimeMor { dom: vec![v.dom(g)], cod: vec![v.cod(g)], val: g.clone() }
}

/// The fission scheme of a backend, materialized on a finite sample: objects
/// and prime diagrams drawn from the supplied values.
pub fn fission_scheme<V: CategoryBackend>(
    v: &V,
    objects: &[V::Obj],
    morphisms: &[V::Mor],
) -> FiniteScheme<V::Obj, PrimeMor<V::Obj, V::Mor>> {
    let mut objs: Vec<V::Obj> = objects.to_vec();
    for m in morphisms {
        objs.push(v.dom(m));
        objs.push(v.cod(m));
    }
    let table = morphisms.iter().map(|m| {
        let p = prime_of_mor(v, m);
        (p.clone(), p.dom.clone(), p.cod.clone())
    });
    FiniteScheme::new(objs, table).expect("prime endpoints are sampled objects")
}

/// Functor data F(D) -> V, stored as its generator action: a scheme morphism
/// from D into the fission scheme of V. Whole-diagram values are recovered by
/// evaluation.
pub struct GenFunctor<O: Label, M: Label, V: CategoryBackend> {
    pub on_obj: BTreeMap<O, V::Obj>,
    pub on_mor: BTreeMap<M, PrimeMor<V::Obj, V::Mor>>,
}

impl<O: Label, M: Label, V: CategoryBackend> Clone for GenFunctor<O, M, V> {
    fn clone(&self) -> Self {
        GenFunctor { on_obj: self.on_obj.clone(), on_mor: self.on_mor.clone() }
    }
}

impl<O: Label, M: Label, V: CategoryBackend> PartialEq for GenFunctor<O, M, V> {
    fn eq(&self, other: &Self) -> bool {
        self.on_obj == other.on_obj && self.on_mor == other.on_mor
    }
}

impl<O: Label, M: Label, V: CategoryBackend> std::fmt::Debug for GenFunctor<O, M, V> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GenFunctor")
            .field("on_obj", &self.on_obj)
            .field("on_mor", &self.on_mor)
            .finish()
    }
}

impl<O: Label, M: Label, V: CategoryBackend> GenFunctor<O, M, V> {
    pub fn apply_letter(&self, x: &O) -> V::Obj {
        self.on_obj[x].clone()
    }

    pub fn apply_word(&self, v: &V, w: &Word<O>) -> V::Obj {
        v.fold_obj(&w.iter().map(|x| self.apply_letter(x)).collect::<Vec<_>>())
    }

    /// The extension to all diagrams: relabel generator-wise, then evaluate.
    pub fn apply_diagram(&self, v: &V, d: &Diagram<O, M>) -> Result<V::Mor, EvalError> {
        evaluate_with(
            d,
            v,
            &|o: &O| self.on_obj[o].clone(),
            &|m: &M| {
                self.on_mor
                    .get(m)
                    .map(|p| p.val.clone())
                    .ok_or_else(|| EvalError::TypeMismatch(format!("{m:?}"), "no image".into()))
            },
            None,
        )
    }
}

/// Transpose functor data to a scheme morphism D -> U(V): each generator goes
/// to the prime diagram of its image.
pub fn theta<O: Label, M: Label, V: CategoryBackend>(
    k: &GenFunctor<O, M, V>,
    scheme: &FiniteScheme<O, M>,
    v: &V,
) -> Result<GenFunctor<O, M, V>, EvalError> {
    let mut on_mor = BTreeMap::new();
    for m in scheme.morphisms() {
        let (src, tgt) = scheme.get(m).unwrap();
        let gen = Diagram::prime("g", src, tgt, m.clone());
        let val = k.apply_diagram(v, &gen)?;
        on_mor.insert(
            m.clone(),
            PrimeMor {
                dom: src.iter().map(|x| k.apply_letter(x)).collect(),
                cod: tgt.iter().map(|x| k.apply_letter(x)).collect(),
                val,
            },
        );
    }
    Ok(GenFunctor { on_obj: k.on_obj.clone(), on_mor })
}

/// Transpose back: a scheme morphism D -> U(V) extends to the functor on all
/// of F(D). The extension is exactly `apply_diagram`, so the data is reused
/// unchanged; this alias documents the direction.
pub fn theta_inverse<O: Label, M: Label, V: CategoryBackend>(
    phi: &GenFunctor<O, M, V>,
) -> GenFunctor<O, M, V> {
    GenFunctor { on_obj: phi.on_obj.clone(), on_mor: phi.on_mor.clone() }
}

/// The identity functor on F(D), as generator data into the free backend.
pub fn identity_functor<O: Label, M: Label>(
    scheme: &FiniteScheme<O, M>,
) -> GenFunctor<O, M, FreeCategory<O, M>> {
    let on_obj = scheme.objects().iter().map(|x| (x.clone(), vec![x.clone()])).collect();
    let on_mor = scheme
        .morphisms()
        .map(|m| {
            let (src, tgt) = scheme.get(m).unwrap();
            let val = Diagram::prime("g", src, tgt, m.clone()).canonical_form();
            (
                m.clone(),
                PrimeMor {
                    dom: src.iter().map(|x| vec![x.clone()]).collect(),
                    cod: tgt.iter().map(|x| vec![x.clone()]).collect(),
                    val,
                },
            )
        })
        .collect();
    GenFunctor { on_obj, on_mor }
}

/// Unit of the adjunction at a generator: the fully fissus prime diagram.
pub fn unit_eta<O: Label, M: Label>(
    scheme: &FiniteScheme<O, M>,
    m: &M,
) -> Result<FissusDiagram<O, M>, EvalError> {
    let src = scheme.src(m)?;
    let tgt = scheme.tgt(m)?;
    Ok(FissusDiagram::fully_fissus(Diagram::prime("e", src, tgt, m.clone())))
}

/// Counit of the adjunction: under the diagram-category identification it is
/// evaluation itself.
pub fn counit_epsilon<V: CategoryBackend>(
    d: &Diagram<V::Obj, V::Mor>,
    v: &V,
) -> Result<V::Mor, EvalError> {
    crate::category::evaluate(d, v)
}

/// Fissus diagrams over a scheme form a strict tensor category whose objects
/// are bracketed words; the monad's morphism level lives here.
#[derive(Debug, Clone)]
pub struct FissusDiagCat<O: Label, M: Label>(std::marker::PhantomData<(O, M)>);

impl<O: Label, M: Label> Default for FissusDiagCat<O, M> {
    fn default() -> Self {
        FissusDiagCat(std::marker::PhantomData)
    }
}

impl<O: Label, M: Label> CategoryBackend for FissusDiagCat<O, M> {
    type Obj = Word<Word<O>>;
    type Mor = FissusDiagram<O, M>;

    fn unit_obj(&self) -> Word<Word<O>> {
        Vec::new()
    }

    fn obj_tensor(&self, a: &Word<Word<O>>, b: &Word<Word<O>>) -> Word<Word<O>> {
        a.iter().chain(b.iter()).cloned().collect()
    }

    fn dom(&self, f: &FissusDiagram<O, M>) -> Word<Word<O>> {
        f.dom_cod().0
    }

    fn cod(&self, f: &FissusDiagram<O, M>) -> Word<Word<O>> {
        f.dom_cod().1
    }

    fn identity(&self, a: &Word<Word<O>>) -> FissusDiagram<O, M> {
        FissusDiagram::identity(a).canonical_form()
    }

    fn compose(
        &self,
        g: &FissusDiagram<O, M>,
        f: &FissusDiagram<O, M>,
    ) -> Result<FissusDiagram<O, M>, EvalError> {
        Ok(f.compose(g)?.canonical_form())
    }

    fn tensor(&self, f: &FissusDiagram<O, M>, g: &FissusDiagram<O, M>) -> FissusDiagram<O, M> {
        f.tensor(g).canonical_form()
    }
}

/// A compound fissus diagram: an outer fissus diagram whose edges carry words
/// and whose vertices carry fissus diagrams.
pub type Compound<O, M> = FissusDiagram<Word<O>, FissusDiagram<O, M>>;

/// Check the compound contract: the coarse-graining of every component must
/// match its host vertex (arity and blockwise labels).
pub fn validate_compound<O: Label, M: Label>(c: &Compound<O, M>) -> Result<(), EvalError> {
    let pre = c.diagram.planar.oriented().pre();
    for b in pre.blocks() {
        if pre.is_virtual_vertex(b) {
            continue;
        }
        let key = crate::diagram::vertex_key(b);
        let inner = &c.diagram.vertex_labels[&key];
        let (host_dom, host_cod) = c.diagram.vertex_dom_cod(b);
        let (inner_dom, inner_cod) = inner.dom_cod();
        if host_dom != inner_dom || host_cod != inner_cod {
            return Err(EvalError::CoarseGrainMismatch(key));
        }
    }
    Ok(())
}

/// Value of a compound fissus diagram: tensor and compose the components the
/// way the outer diagram prescribes.
pub fn compound_value<O: Label, M: Label>(
    c: &Compound<O, M>,
) -> Result<FissusDiagram<O, M>, EvalError> {
    validate_compound(c)?;
    evaluate_with(
        &c.diagram,
        &FissusDiagCat::<O, M>::default(),
        &|w: &Word<O>| vec![w.clone()],
        &|m: &FissusDiagram<O, M>| Ok(m.clone()),
        None,
    )
}

/// Multiplication of the monad: evaluate the compound, then compose the outer
/// fission onto the value's fission.
pub fn monad_mu<O: Label, M: Label>(c: &Compound<O, M>) -> Result<FissusDiagram<O, M>, EvalError> {
    let value = compound_value(c)?;
    Ok(FissusDiagram {
        p_in: c.p_in.compose(&value.p_in).map_err(EvalError::Planar)?,
        p_out: c.p_out.compose(&value.p_out).map_err(EvalError::Planar)?,
        diagram: value.diagram,
    })
}

/// Unit of the monad at a fissus diagram: the fully fissus one-vertex
/// compound whose single component is the diagram itself.
pub fn monad_unit<O: Label, M: Label>(fd: &FissusDiagram<O, M>) -> Compound<O, M> {
    let (dom, cod) = fd.dom_cod();
    let outer = Diagram::prime("u", &dom, &cod, fd.clone());
    FissusDiagram::fully_fissus(outer)
}

/// Functorial action of the monad on the unit of the adjunction: wrap every
/// vertex of a fissus diagram in its fully fissus prime and every edge label
/// in a one-letter word, keeping the outer fission.
pub fn monad_t_eta<O: Label, M: Label>(
    scheme: &FiniteScheme<O, M>,
    fd: &FissusDiagram<O, M>,
) -> Result<Compound<O, M>, EvalError> {
    for m in fd.diagram.vertex_labels.values() {
        scheme.src(m).map_err(EvalError::Scheme)?;
    }
    let diagram = fd.diagram.relabel(&|o: &O| vec![o.clone()], &|m: &M| {
        unit_eta(scheme, m).expect("vertex labels checked above")
    });
    Ok(FissusDiagram { diagram, p_in: fd.p_in.clone(), p_out: fd.p_out.clone() })
}

// ---------------------------------------------------------------------------
// Compound planar graphs (undecorated skeleton story)
// ---------------------------------------------------------------------------

/// A compound planar graph: skeleton with planar-graph components whose
/// contractions match the vertices. Edge labels are trivial.
pub type CompoundGraph = Diagram<(), PlanarGraph>;

/// Value of a compound planar graph: substitute the components.
pub fn compound_eval_z(c: &CompoundGraph) -> Result<PlanarGraph, EvalError> {
    evaluate_with(c, &PlanarCat, &|_| 1usize, &|g: &PlanarGraph| Ok(g.clone()), None)
}

/// Forget the components: the contraction skeleton.
pub fn forget_xi(c: &CompoundGraph) -> PlanarGraph {
    c.planar.clone()
}

/// A compound fissus planar graph: skeleton edges carry strand counts, the
/// components are fissus planar graphs whose coarse-grainings match.
pub type CompoundFissusGraph = Diagram<usize, FissusPlanarGraph>;

/// Value of a compound fissus planar graph.
pub fn compound_eval_zhat(c: &CompoundFissusGraph) -> Result<FissusPlanarGraph, EvalError> {
    evaluate_with(
        c,
        &FissusPlanarCat,
        &|n: &usize| LinearPartition::new(vec![*n]).expect("positive strand count"),
        &|g: &FissusPlanarGraph| Ok(g.clone()),
        None,
    )
}

pub fn forget_xihat(c: &CompoundFissusGraph) -> PlanarGraph {
    c.planar.clone()
}

/// Fissus compound fissus planar graph: the graph-level domain of the
/// multiplication.
pub fn zhat_f(
    c: &CompoundFissusGraph,
    outer_in: &LinearPartition,
    outer_out: &LinearPartition,
) -> Result<FissusPlanarGraph, EvalError> {
    let value = compound_eval_zhat(c)?;
    Ok(FissusPlanarGraph {
        p_in: outer_in.compose(&value.p_in).map_err(EvalError::Planar)?,
        p_out: outer_out.compose(&value.p_out).map_err(EvalError::Planar)?,
        planar: value.planar,
    })
}

/// The fine-graining of a planar graph: the compound whose skeleton is the
/// graph itself and whose components are its vertex corollas.
pub fn fine_grain(pg: &PlanarGraph) -> CompoundGraph {
    let pre = pg.oriented().pre();
    let edge_labels = pre.halves().iter().map(|h| (h.clone(), ())).collect();
    let vertex_labels = pre
        .blocks()
        .iter()
        .filter(|b| !pre.is_virtual_vertex(b))
        .map(|b| {
            (
                crate::diagram::vertex_key(b),
                crate::decompose::vertex_subgraph(pg, b).canonical_form(),
            )
        })
        .collect();
    Diagram { planar: pg.clone(), edge_labels, vertex_labels }
}

// ---------------------------------------------------------------------------
// Identifications and the comultiplication side
// ---------------------------------------------------------------------------

/// omega: a prime diagram in the planar-graph category corresponds to a
/// fissus planar graph (blocks record how boundary strands group).
pub fn omega(p: &PrimeMor<usize, PlanarGraph>) -> Result<FissusPlanarGraph, EvalError> {
    let mk = |w: &Word<usize>| {
        if w.is_empty() {
            Ok(LinearPartition::empty())
        } else {
            LinearPartition::new(w.clone()).map_err(EvalError::Planar)
        }
    };
    FissusPlanarGraph::new(p.val.clone(), mk(&p.dom)?, mk(&p.cod)?).map_err(EvalError::Planar)
}

pub fn omega_inverse(f: &FissusPlanarGraph) -> PrimeMor<usize, PlanarGraph> {
    PrimeMor {
        dom: f.p_in.sizes().to_vec(),
        cod: f.p_out.sizes().to_vec(),
        val: f.planar.clone(),
    }
}

/// zeta-tilde: view a diagram whose vertices are prime morphisms as a plain
/// diagram in the backend (each prime stands for its decoration). Requires
/// single-letter edge labels.
pub fn zeta_tilde<V: CategoryBackend>(
    d: &Diagram<Word<V::Obj>, PrimeMor<V::Obj, V::Mor>>,
) -> Result<Diagram<V::Obj, V::Mor>, EvalError> {
    for (h, w) in &d.edge_labels {
        if w.len() != 1 {
            return Err(EvalError::TypeMismatch(
                h.clone(),
                "zeta identification needs single-letter edge labels".into(),
            ));
        }
    }
    Ok(d.relabel(&|w: &Word<V::Obj>| w[0].clone(), &|p| p.val.clone()))
}

/// Comultiplication chi: wrap every vertex decoration in its one-vertex
/// diagram and every edge label in a one-letter word. The result is a
/// diagram valued in the category of diagrams.
pub fn comultiply_chi<O: Label, M: Label>(
    d: &Diagram<O, M>,
) -> Diagram<Word<O>, Diagram<O, M>> {
    let planar = d.planar.clone();
    let edge_labels = d
        .edge_labels
        .iter()
        .map(|(h, o)| (h.clone(), vec![o.clone()]))
        .collect();
    let pre = d.planar.oriented().pre();
    let vertex_labels = d
        .vertex_labels
        .iter()
        .map(|(k, m)| {
            let block = pre.blocks().iter().find(|b| b.contains(k)).unwrap();
            let (dw, cw) = d.vertex_dom_cod(block);
            (k.clone(), Diagram::prime("c", &dw, &cw, m.clone()).canonical_form())
        })
        .collect();
    Diagram { planar, edge_labels, vertex_labels }
}

/// Counit after chi: evaluate the wrapped diagram in the category of
/// diagrams; recovers the original diagram.
pub fn counit_after_chi<V: CategoryBackend + Clone>(
    d: &Diagram<V::Obj, V::Mor>,
    v: &V,
) -> Result<Diagram<V::Obj, V::Mor>, EvalError> {
    let chi = comultiply_chi(d);
    evaluate_with(
        &chi,
        &DiagCategory(v.clone()),
        &|w: &Word<V::Obj>| w.clone(),
        &|m: &Diagram<V::Obj, V::Mor>| Ok(m.clone()),
        None,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{evaluate, MatrixCategory};
    use crate::matrix::RatMatrix;

    fn s(x: &str) -> String {
        x.into()
    }

    fn scheme() -> FiniteScheme<String, String> {
        FiniteScheme::new(
            [s("x"), s("y")],
            [
                (s("f"), vec![s("x"), s("x")], vec![s("y")]),
                (s("g"), vec![s("y")], vec![s("x"), s("y")]),
                (s("h"), vec![s("x"), s("y")], vec![s("y")]),
            ],
        )
        .unwrap()
    }

    /// A generator action into the matrix backend: x -> dim 2, y -> dim 3.
    fn binding() -> GenFunctor<String, String, MatrixCategory> {
        let v = MatrixCategory;
        let mat = |r: usize, c: usize, seed: i64| {
            RatMatrix::from_i64(
                r,
                c,
                &(0..(r * c) as i64).map(|k| (k * seed + 1) % 7 - 3).collect::<Vec<_>>(),
            )
        };
        let on_obj = [(s("x"), 2u64), (s("y"), 3u64)].into_iter().collect();
        let f = mat(3, 4, 2);
        let g = mat(6, 3, 3);
        let h = mat(3, 6, 5);
        let _ = &v;
        let on_mor = [
            (s("f"), PrimeMor { dom: vec![2, 2], cod: vec![3], val: f }),
            (s("g"), PrimeMor { dom: vec![3], cod: vec![2, 3], val: g }),
            (s("h"), PrimeMor { dom: vec![2, 3], cod: vec![3], val: h }),
        ]
        .into_iter()
        .collect();
        GenFunctor { on_obj, on_mor }
    }

    fn sample_diagram() -> Diagram<String, String> {
        // f then g then h: (x x) -> y -> (x y) -> y
        let f = Diagram::prime("f", &vec![s("x"), s("x")], &vec![s("y")], s("f"));
        let g = Diagram::prime("g", &vec![s("y")], &vec![s("x"), s("y")], s("g"));
        let h = Diagram::prime("h", &vec![s("x"), s("y")], &vec![s("y")], s("h"));
        f.compose(&g).unwrap().compose(&h).unwrap()
    }

    #[test]
    fn theta_round_trip_on_generators() {
        let d = scheme();
        let v = MatrixCategory;
        let k = binding();
        let phi = theta(&k, &d, &v).unwrap();
        // theta of already-generator data returns the same primes
        assert_eq!(phi, k);
        // and the extensions agree on a composite diagram
        let dgr = sample_diagram();
        assert_eq!(
            k.apply_diagram(&v, &dgr).unwrap(),
            theta_inverse(&phi).apply_diagram(&v, &dgr).unwrap()
        );
    }

    #[test]
    fn theta_of_identity_is_unit() {
        let d = scheme();
        let idf = identity_functor(&d);
        let free = FreeCategory { scheme: d.clone() };
        let eta = theta(&idf, &d, &free).unwrap();
        for m in d.morphisms() {
            let p = &eta.on_mor[m];
            // the unit wraps the generator as a prime diagram with
            // one-letter boundary words
            assert!(p.dom.iter().all(|w| w.len() == 1));
            let expected = Diagram::prime("g", d.src(m).unwrap(), d.tgt(m).unwrap(), m.clone())
                .canonical_form();
            assert_eq!(p.val, expected);
            // and the fissus reading has finest partitions
            let fd = unit_eta(&d, m).unwrap();
            assert!(fd.p_in.is_finest() && fd.p_out.is_finest());
        }
    }

    #[test]
    fn functor_extension_respects_structure() {
        let v = MatrixCategory;
        let k = binding();
        let dgr = sample_diagram();
        let by_parts = {
            let f = k.apply_diagram(&v, &Diagram::prime("f", &vec![s("x"), s("x")], &vec![s("y")], s("f"))).unwrap();
            let g = k.apply_diagram(&v, &Diagram::prime("g", &vec![s("y")], &vec![s("x"), s("y")], s("g"))).unwrap();
            let h = k.apply_diagram(&v, &Diagram::prime("h", &vec![s("x"), s("y")], &vec![s("y")], s("h"))).unwrap();
            v.compose(&h, &v.compose(&g, &f).unwrap()).unwrap()
        };
        assert_eq!(k.apply_diagram(&v, &dgr).unwrap(), by_parts);
    }

    #[test]
    fn monad_unit_laws() {
        let d = scheme();
        let fd = FissusDiagram::new(
            sample_diagram(),
            LinearPartition::new(vec![2]).unwrap(),
            LinearPartition::new(vec![1]).unwrap(),
        )
        .unwrap();
        // mu . eta_T = id
        let c = monad_unit(&fd);
        let back = monad_mu(&c).unwrap();
        assert_eq!(back.canonical_form(), fd.canonical_form());
        // mu . T(eta) = id
        let c2 = monad_t_eta(&d, &fd).unwrap();
        let back2 = monad_mu(&c2).unwrap();
        assert_eq!(back2.canonical_form(), fd.canonical_form());
    }

    #[test]
    fn compound_contract_violation_detected() {
        let fd = FissusDiagram::fully_fissus(sample_diagram());
        let mut c = monad_unit(&fd);
        // break the component's fission so the coarse-graining no longer
        // matches the host vertex
        let key = c.diagram.vertex_labels.keys().next().unwrap().clone();
        let inner = c.diagram.vertex_labels.get_mut(&key).unwrap();
        inner.p_in = LinearPartition::trivial(inner.p_in.len());
        assert!(matches!(
            monad_mu(&c),
            Err(EvalError::CoarseGrainMismatch(_))
        ));
    }

    #[test]
    fn compound_graph_values() {
        use crate::fixtures::{prime, reduced_example, wire};
        // prime compound: value is the single component
        let comp = reduced_example().canonical_form();
        let outer = prime("v", 6, 4);
        let pre = outer.oriented().pre();
        let edge_labels = pre.halves().iter().map(|h| (h.clone(), ())).collect();
        let vertex_labels = [(crate::diagram::vertex_key(&pre.blocks()[0]), comp.clone())]
            .into_iter()
            .collect();
        let c: CompoundGraph = Diagram { planar: outer.clone(), edge_labels, vertex_labels };
        assert_eq!(compound_eval_z(&c).unwrap().canonical_form(), comp);
        assert_eq!(forget_xi(&c), outer);

        // fine-graining round-trips through evaluation
        for pg in [reduced_example(), prime("p", 2, 2).tensor(&wire("w"))] {
            let fg = fine_grain(&pg);
            assert_eq!(compound_eval_z(&fg).unwrap().canonical_form(), pg.canonical_form());
            assert_eq!(forget_xi(&fg), pg);
        }
    }

    #[test]
    fn compound_fissus_values_and_omega() {
        use crate::fixtures::reduced_example;
        let f = FissusPlanarGraph::new(
            reduced_example(),
            LinearPartition::new(vec![2, 3, 1]).unwrap(),
            LinearPartition::new(vec![1, 1, 1, 1]).unwrap(),
        )
        .unwrap();
        // omega round trip
        let p = omega_inverse(&f);
        assert_eq!(omega(&p).unwrap(), f);

        // one-vertex compound evaluates to its component
        let cg = crate::fissus::coarse_grain(&f);
        let pre = cg.oriented().pre();
        let mut edge_labels = BTreeMap::new();
        for (h, size) in cg.inputs().into_iter().zip(f.p_in.sizes()) {
            edge_labels.insert(h, *size);
        }
        for (h, size) in cg.outputs().into_iter().zip(f.p_out.sizes()) {
            edge_labels.insert(h, *size);
        }
        let vertex_labels =
            [(crate::diagram::vertex_key(&pre.blocks()[0]), f.clone())].into_iter().collect();
        let c: CompoundFissusGraph = Diagram { planar: cg, edge_labels, vertex_labels };
        assert_eq!(
            compound_eval_zhat(&c).unwrap().canonical_form(),
            f.canonical_form()
        );
        // with trivial outer fission, the multiplication leaves it unchanged
        let z = zhat_f(
            &c,
            &LinearPartition::finest(3),
            &LinearPartition::finest(4),
        )
        .unwrap();
        assert_eq!(z.canonical_form(), f.canonical_form());
    }

    #[test]
    fn chi_counit_and_coassociativity() {
        let v = MatrixCategory;
        let k = binding();
        let base = sample_diagram();
        let dgr = base.relabel(&|o| k.on_obj[o], &|m| k.on_mor[m].val.clone());
        // counit after chi recovers the diagram
        let back = counit_after_chi(&dgr, &v).unwrap();
        assert_eq!(back.canonical_form(), dgr.canonical_form());
        // chi of the empty diagram is empty
        let empty: Diagram<u64, RatMatrix> = Diagram::empty();
        assert!(comultiply_chi(&empty).planar.is_empty());

        // coassociativity: wrapping the wrapped diagram equals wrapping its
        // components
        let once = comultiply_chi(&dgr);
        let lhs = comultiply_chi(&once).canonical_form();
        let rhs = once
            .relabel(&|w| vec![w.clone()], &|m| comultiply_chi(m).canonical_form())
            .canonical_form();
        assert_eq!(lhs, rhs);
        let _ = evaluate(&dgr, &v).unwrap();
    }
}
