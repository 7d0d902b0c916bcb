//! Strict tensor categories as pluggable backends, the law checker, and
//! diagram evaluation by peeling maximal vertices.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand_chacha::ChaCha8Rng;

use crate::decompose::{maximal_real_vertices, remove_maximal_vertex};
use crate::diagram::{vertex_key, Diagram};
use crate::error::{EvalError, LawViolation};
use crate::fissus::FissusPlanarGraph;
use crate::matrix::RatMatrix;
use crate::partition::LinearPartition;
use crate::planar::PlanarGraph;
use crate::scheme::{FiniteScheme, Label, Word};

/// A strict tensor category, presented operationally: an object monoid and a
/// morphism algebra with identities, composition and tensor.
pub trait CategoryBackend {
    type Obj: Label;
    type Mor: Label;

    fn unit_obj(&self) -> Self::Obj;
    fn obj_tensor(&self, a: &Self::Obj, b: &Self::Obj) -> Self::Obj;
    fn dom(&self, f: &Self::Mor) -> Self::Obj;
    fn cod(&self, f: &Self::Mor) -> Self::Obj;
    fn identity(&self, a: &Self::Obj) -> Self::Mor;
    /// g after f.
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor, EvalError>;
    fn tensor(&self, f: &Self::Mor, g: &Self::Mor) -> Self::Mor;

    fn fold_obj(&self, word: &[Self::Obj]) -> Self::Obj {
        word.iter().fold(self.unit_obj(), |acc, o| self.obj_tensor(&acc, o))
    }
}

/// Sample data for the law checker. Pairs are (f, g) with cod f = dom g;
/// quads are ((f, g), (f2, g2)) with both pairs composable.
#[derive(Debug, Clone, Default)]
pub struct BackendSamples<V: CategoryBackend> {
    pub objects: Vec<V::Obj>,
    pub morphisms: Vec<V::Mor>,
    pub composable_pairs: Vec<(V::Mor, V::Mor)>,
    pub composable_triples: Vec<(V::Mor, V::Mor, V::Mor)>,
    pub interchange_quads: Vec<((V::Mor, V::Mor), (V::Mor, V::Mor))>,
}

/// Verify the strict-category axioms on the samples; every failure becomes a
/// report entry.
pub fn check_backend<V: CategoryBackend>(v: &V, s: &BackendSamples<V>) -> Vec<LawViolation> {
    let mut out = Vec::new();
    let mut fail = |law: &str, witness: String| {
        out.push(LawViolation { law: law.to_string(), witness });
    };
    for a in &s.objects {
        let u = v.unit_obj();
        if v.obj_tensor(a, &u) != *a || v.obj_tensor(&u, a) != *a {
            fail("object-unit", format!("{a:?}"));
        }
        let id = v.identity(a);
        if v.dom(&id) != *a || v.cod(&id) != *a {
            fail("identity-endpoints", format!("{a:?}"));
        }
        for b in &s.objects {
            let idab = v.identity(&v.obj_tensor(a, b));
            if v.tensor(&v.identity(a), &v.identity(b)) != idab {
                fail("identity-tensor", format!("{a:?}, {b:?}"));
            }
            for c in &s.objects {
                let l = v.obj_tensor(&v.obj_tensor(a, b), c);
                let r = v.obj_tensor(a, &v.obj_tensor(b, c));
                if l != r {
                    fail("object-associativity", format!("{a:?}, {b:?}, {c:?}"));
                }
            }
        }
    }
    for f in &s.morphisms {
        let pre = v.identity(&v.dom(f));
        let post = v.identity(&v.cod(f));
        match (v.compose(f, &pre), v.compose(&post, f)) {
            (Ok(a), Ok(b)) if &a == f && &b == f => {}
            _ => fail("identity-composition", format!("{f:?}")),
        }
    }
    for (i, f) in s.morphisms.iter().enumerate() {
        for g in &s.morphisms[i..] {
            if v.dom(&v.tensor(f, g)) != v.obj_tensor(&v.dom(f), &v.dom(g))
                || v.cod(&v.tensor(f, g)) != v.obj_tensor(&v.cod(f), &v.cod(g))
            {
                fail("tensor-endpoints", format!("{f:?}, {g:?}"));
            }
        }
    }
    if s.morphisms.len() >= 3 {
        for w in s.morphisms.windows(3) {
            let (f, g, h) = (&w[0], &w[1], &w[2]);
            let l = v.tensor(&v.tensor(f, g), h);
            let r = v.tensor(f, &v.tensor(g, h));
            if l != r {
                fail("tensor-associativity", format!("{f:?}, {g:?}, {h:?}"));
            }
        }
    }
    for (f, g) in &s.composable_pairs {
        if v.compose(g, f).is_err() {
            fail("composability", format!("{f:?}, {g:?}"));
        }
    }
    for (f, g, h) in &s.composable_triples {
        let l = v.compose(h, &v.compose(g, f).unwrap()).unwrap();
        let r = v.compose(&v.compose(h, g).unwrap(), f).unwrap();
        if l != r {
            fail("compose-associativity", format!("{f:?}, {g:?}, {h:?}"));
        }
    }
    for ((f, g), (f2, g2)) in &s.interchange_quads {
        let l = v.tensor(&v.compose(g, f).unwrap(), &v.compose(g2, f2).unwrap());
        let r = v.compose(&v.tensor(g, g2), &v.tensor(f, f2)).unwrap();
        if l != r {
            fail("middle-four-interchange", format!("{f:?}, {g:?}, {f2:?}, {g2:?}"));
        }
    }
    out
}

/// Matrices over exact rationals: objects are dimensions, tensor on objects
/// is multiplication, on morphisms the Kronecker product.
#[derive(Debug, Clone, Default)]
pub struct MatrixCategory;

impl CategoryBackend for MatrixCategory {
    type Obj = u64;
    type Mor = RatMatrix;

    fn unit_obj(&self) -> u64 {
        1
    }

    fn obj_tensor(&self, a: &u64, b: &u64) -> u64 {
        a * b
    }

    fn dom(&self, f: &RatMatrix) -> u64 {
        f.cols() as u64
    }

    fn cod(&self, f: &RatMatrix) -> u64 {
        f.rows() as u64
    }

    fn identity(&self, a: &u64) -> RatMatrix {
        RatMatrix::identity(*a as usize)
    }

    fn compose(&self, g: &RatMatrix, f: &RatMatrix) -> Result<RatMatrix, EvalError> {
        if g.cols() != f.rows() {
            return Err(EvalError::NotComposableObjects(
                f.rows().to_string(),
                g.cols().to_string(),
            ));
        }
        Ok(g.mul(f))
    }

    fn tensor(&self, f: &RatMatrix, g: &RatMatrix) -> RatMatrix {
        f.kron(g)
    }
}

/// Check a backend-valued diagram: each vertex decoration must have domain
/// and codomain equal to the tensor folds of its incident labels.
pub fn validate_in_backend<V: CategoryBackend>(
    d: &Diagram<V::Obj, V::Mor>,
    v: &V,
) -> Result<(), EvalError> {
    typecheck(d, v, &|o| o.clone(), &|m| Ok(m.clone()))
}

fn typecheck<V: CategoryBackend, O: Label, M: Label>(
    d: &Diagram<O, M>,
    v: &V,
    obj_of: &impl Fn(&O) -> V::Obj,
    mor_of: &impl Fn(&M) -> Result<V::Mor, EvalError>,
) -> Result<(), EvalError> {
    let pre = d.planar.oriented().pre();
    for b in pre.blocks() {
        if pre.is_virtual_vertex(b) {
            continue;
        }
        let key = vertex_key(b);
        let m = mor_of(&d.vertex_labels[&key])?;
        let (dw, cw) = d.vertex_dom_cod(b);
        let dom = v.fold_obj(&dw.iter().map(obj_of).collect::<Vec<_>>());
        let cod = v.fold_obj(&cw.iter().map(obj_of).collect::<Vec<_>>());
        if v.dom(&m) != dom || v.cod(&m) != cod {
            return Err(EvalError::TypeMismatch(
                key,
                format!("expected {dom:?} -> {cod:?}"),
            ));
        }
    }
    Ok(())
}

/// Evaluate a diagram in a backend by repeatedly peeling a maximal vertex:
/// the unique morphism respecting primes, wires, tensor and composition.
/// Labels are translated through `obj_of` / `mor_of`, so the same engine
/// serves backend-valued and scheme-valued diagrams.
pub fn evaluate_with<V: CategoryBackend, O: Label, M: Label>(
    d: &Diagram<O, M>,
    v: &V,
    obj_of: &impl Fn(&O) -> V::Obj,
    mor_of: &impl Fn(&M) -> Result<V::Mor, EvalError>,
    mut rng: Option<&mut ChaCha8Rng>,
) -> Result<V::Mor, EvalError> {
    typecheck(d, v, obj_of, mor_of)?;
    let mut current = d.clone();
    let mut layer_values: Vec<V::Mor> = Vec::new();
    loop {
        let maximal = maximal_real_vertices(&current.planar);
        if maximal.is_empty() {
            break;
        }
        let vertex = match rng.as_deref_mut() {
            Some(r) => maximal.choose(r).unwrap().clone(),
            None => {
                let pre = current.planar.oriented().pre();
                let idx = *current.planar.vertex_order().last().unwrap();
                pre.blocks()[idx].clone()
            }
        };
        // bottom layer: wires ... vertex value ... wires, in output order
        let mor = mor_of(&current.vertex_labels[&vertex_key(&vertex)])?;
        let mut cells: Vec<V::Mor> = Vec::new();
        let mut vertex_done = false;
        for h in current.planar.outputs() {
            if vertex.contains(&h) {
                if !vertex_done {
                    cells.push(mor.clone());
                    vertex_done = true;
                }
            } else {
                cells.push(v.identity(&obj_of(current.label_of(&h))));
            }
        }
        let layer = cells
            .into_iter()
            .reduce(|a, b| v.tensor(&a, &b))
            .expect("peeled layer has at least the vertex cell");
        layer_values.push(layer);

        // everything above the peeled vertex
        let (above, carried) = remove_maximal_vertex(&current.planar, &vertex)?;
        let mut edge_labels = BTreeMap::new();
        for h in above.oriented().pre().halves() {
            let label = match current.edge_labels.get(h) {
                Some(l) => l.clone(),
                None => current.edge_labels[&carried[h]].clone(),
            };
            edge_labels.insert(h.clone(), label);
        }
        let mut vertex_labels = current.vertex_labels.clone();
        vertex_labels.remove(&vertex_key(&vertex));
        current = Diagram { planar: above, edge_labels, vertex_labels };
    }
    // remaining invertible part
    let top_word: Vec<V::Obj> =
        current.dom().iter().map(obj_of).collect();
    let mut acc = v.identity(&v.fold_obj(&top_word));
    for layer in layer_values.into_iter().rev() {
        acc = v.compose(&layer, &acc)?;
    }
    Ok(acc)
}

/// Evaluate a backend-valued diagram deterministically.
pub fn evaluate<V: CategoryBackend>(
    d: &Diagram<V::Obj, V::Mor>,
    v: &V,
) -> Result<V::Mor, EvalError> {
    evaluate_with(d, v, &|o| o.clone(), &|m| Ok(m.clone()), None)
}

/// Evaluate `trials` times with independently seeded random peeling orders
/// and report whether every run returned the same value.
pub fn evaluation_independence_check<V: CategoryBackend>(
    d: &Diagram<V::Obj, V::Mor>,
    v: &V,
    trials: u64,
    seed: u64,
) -> Result<bool, EvalError> {
    use rand::SeedableRng;
    let base = evaluate(d, v)?;
    for t in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(t));
        let got = evaluate_with(d, v, &|o| o.clone(), &|m| Ok(m.clone()), Some(&mut rng))?;
        if got != base {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Contraction of a diagram: one vertex carrying the diagram's value.
pub fn diagram_contraction<V: CategoryBackend>(
    d: &Diagram<V::Obj, V::Mor>,
    v: &V,
) -> Result<Diagram<V::Obj, V::Mor>, EvalError> {
    let value = evaluate(d, v)?;
    if d.planar.is_empty() {
        return Ok(Diagram::empty());
    }
    Ok(Diagram::prime("k", &d.dom(), &d.cod(), value))
}

/// Coarse-graining of a fissus diagram: one vertex carrying the value, with
/// boundary labels tensor-folded blockwise.
pub fn diagram_coarsegrain<V: CategoryBackend>(
    d: &Diagram<V::Obj, V::Mor>,
    p_in: &LinearPartition,
    p_out: &LinearPartition,
    v: &V,
) -> Result<Diagram<V::Obj, V::Mor>, EvalError> {
    let value = evaluate(d, v)?;
    if d.planar.is_empty() {
        return Ok(Diagram::empty());
    }
    let dom = d.dom();
    let cod = d.cod();
    let fold = |w: &Word<V::Obj>, p: &LinearPartition| -> Word<V::Obj> {
        p.ranges().into_iter().map(|r| v.fold_obj(&w[r])).collect()
    };
    Ok(Diagram::prime("z", &fold(&dom, p_in), &fold(&cod, p_out), value))
}

/// The free strict tensor category on a finite scheme: objects are words,
/// morphisms canonical diagrams.
#[derive(Debug, Clone)]
pub struct FreeCategory<O: Label, M: Label> {
    pub scheme: FiniteScheme<O, M>,
}

impl<O: Label, M: Label> CategoryBackend for FreeCategory<O, M> {
    type Obj = Word<O>;
    type Mor = Diagram<O, M>;

    fn unit_obj(&self) -> Word<O> {
        Vec::new()
    }

    fn obj_tensor(&self, a: &Word<O>, b: &Word<O>) -> Word<O> {
        a.iter().chain(b.iter()).cloned().collect()
    }

    fn dom(&self, f: &Diagram<O, M>) -> Word<O> {
        f.dom()
    }

    fn cod(&self, f: &Diagram<O, M>) -> Word<O> {
        f.cod()
    }

    fn identity(&self, a: &Word<O>) -> Diagram<O, M> {
        Diagram::identity(a).canonical_form()
    }

    fn compose(&self, g: &Diagram<O, M>, f: &Diagram<O, M>) -> Result<Diagram<O, M>, EvalError> {
        Ok(f.compose(g)?.canonical_form())
    }

    fn tensor(&self, f: &Diagram<O, M>, g: &Diagram<O, M>) -> Diagram<O, M> {
        f.tensor(g).canonical_form()
    }
}

/// Diagrams valued in a backend, as a strict tensor category of their own
/// (the decorated version of the planar-graph category).
#[derive(Debug, Clone)]
pub struct DiagCategory<V: CategoryBackend>(pub V);

impl<V: CategoryBackend> CategoryBackend for DiagCategory<V> {
    type Obj = Word<V::Obj>;
    type Mor = Diagram<V::Obj, V::Mor>;

    fn unit_obj(&self) -> Word<V::Obj> {
        Vec::new()
    }

    fn obj_tensor(&self, a: &Word<V::Obj>, b: &Word<V::Obj>) -> Word<V::Obj> {
        a.iter().chain(b.iter()).cloned().collect()
    }

    fn dom(&self, f: &Diagram<V::Obj, V::Mor>) -> Word<V::Obj> {
        f.dom()
    }

    fn cod(&self, f: &Diagram<V::Obj, V::Mor>) -> Word<V::Obj> {
        f.cod()
    }

    fn identity(&self, a: &Word<V::Obj>) -> Diagram<V::Obj, V::Mor> {
        Diagram::identity(a).canonical_form()
    }

    fn compose(
        &self,
        g: &Diagram<V::Obj, V::Mor>,
        f: &Diagram<V::Obj, V::Mor>,
    ) -> Result<Diagram<V::Obj, V::Mor>, EvalError> {
        Ok(f.compose(g)?.canonical_form())
    }

    fn tensor(
        &self,
        f: &Diagram<V::Obj, V::Mor>,
        g: &Diagram<V::Obj, V::Mor>,
    ) -> Diagram<V::Obj, V::Mor> {
        f.tensor(g).canonical_form()
    }
}

/// Planar graphs as a strict tensor category: objects count strands.
#[derive(Debug, Clone, Default)]
pub struct PlanarCat;

impl CategoryBackend for PlanarCat {
    type Obj = usize;
    type Mor = PlanarGraph;

    fn unit_obj(&self) -> usize {
        0
    }

    fn obj_tensor(&self, a: &usize, b: &usize) -> usize {
        a + b
    }

    fn dom(&self, f: &PlanarGraph) -> usize {
        f.arity().0
    }

    fn cod(&self, f: &PlanarGraph) -> usize {
        f.arity().1
    }

    fn identity(&self, a: &usize) -> PlanarGraph {
        let mut pg = PlanarGraph::empty();
        for k in 0..*a {
            pg = pg.tensor(&crate::fixtures::wire(&format!("i{k}_")));
        }
        pg.canonical_form()
    }

    fn compose(&self, g: &PlanarGraph, f: &PlanarGraph) -> Result<PlanarGraph, EvalError> {
        Ok(f.compose(g).map_err(EvalError::Planar)?.canonical_form())
    }

    fn tensor(&self, f: &PlanarGraph, g: &PlanarGraph) -> PlanarGraph {
        f.tensor(g).canonical_form()
    }
}

/// Fissus planar graphs as a strict tensor category: objects are bracket
/// shapes (linear partitions), composition needs matching interfaces.
#[derive(Debug, Clone, Default)]
pub struct FissusPlanarCat;

impl CategoryBackend for FissusPlanarCat {
    type Obj = LinearPartition;
    type Mor = FissusPlanarGraph;

    fn unit_obj(&self) -> LinearPartition {
        LinearPartition::empty()
    }

    fn obj_tensor(&self, a: &LinearPartition, b: &LinearPartition) -> LinearPartition {
        a.product(b)
    }

    fn dom(&self, f: &FissusPlanarGraph) -> LinearPartition {
        f.p_in.clone()
    }

    fn cod(&self, f: &FissusPlanarGraph) -> LinearPartition {
        f.p_out.clone()
    }

    fn identity(&self, a: &LinearPartition) -> FissusPlanarGraph {
        let pg = PlanarCat.identity(&a.len());
        FissusPlanarGraph::new(pg, a.clone(), a.clone()).unwrap().canonical_form()
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

    fn tensor(&self, f: &FissusPlanarGraph, g: &FissusPlanarGraph) -> FissusPlanarGraph {
        f.tensor(g).canonical_form()
    }
}

/// A wire diagram labelled by one object.
pub fn wire_diagram<O: Label, M: Label>(o: &O) -> Diagram<O, M> {
    Diagram::identity(&vec![o.clone()])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_chain() -> (Diagram<u64, RatMatrix>, RatMatrix, RatMatrix) {
        // A: 3 -> 2, B: 2 -> 4, diagram evaluates to B * A
        let a = RatMatrix::from_i64(2, 3, &[1, 2, 3, 4, 5, 6]);
        let b = RatMatrix::from_i64(4, 2, &[1, 0, 0, 1, 1, 1, 2, 5]);
        let da = Diagram::prime("a", &vec![3u64, 1], &vec![2u64], a.clone());
        let db = Diagram::prime("b", &vec![2u64], &vec![2u64, 2], b.clone());
        (da.compose(&db).unwrap(), a, b)
    }

    #[test]
    fn evaluation_clauses() {
        let v = MatrixCategory;
        // empty diagram -> identity of the unit object
        assert_eq!(evaluate(&Diagram::empty(), &v).unwrap(), RatMatrix::identity(1));
        // prime diagram -> its decoration
        let a = RatMatrix::from_i64(2, 3, &[1, 2, 3, 4, 5, 6]);
        let pa = Diagram::prime("a", &vec![3u64, 1], &vec![2u64], a.clone());
        assert_eq!(evaluate(&pa, &v).unwrap(), a);
        // wire -> identity
        let w: Diagram<u64, RatMatrix> = wire_diagram(&5u64);
        assert_eq!(evaluate(&w, &v).unwrap(), RatMatrix::identity(5));
        // chain -> product
        let (chain, a, b) = two_chain();
        assert_eq!(evaluate(&chain, &v).unwrap(), b.mul(&a));
    }

    #[test]
    fn evaluation_respects_tensor() {
        let v = MatrixCategory;
        let (chain, a, b) = two_chain();
        let w: Diagram<u64, RatMatrix> = wire_diagram(&3u64);
        let t = chain.tensor(&w);
        assert_eq!(
            evaluate(&t, &v).unwrap(),
            b.mul(&a).kron(&RatMatrix::identity(3))
        );
    }

    #[test]
    fn independence_on_parallel_vertices() {
        let v = MatrixCategory;
        let a = RatMatrix::from_i64(2, 2, &[1, 2, 3, 4]);
        let b = RatMatrix::from_i64(3, 2, &[0, 1, 1, 0, 7, 7]);
        let pa = Diagram::prime("a", &vec![2u64], &vec![2u64], a);
        let pb = Diagram::prime("b", &vec![2u64], &vec![3u64], b);
        let t = pa.tensor(&pb);
        assert!(evaluation_independence_check(&t, &v, 5, 11).unwrap());
        let (chain, _, _) = two_chain();
        assert!(evaluation_independence_check(&chain, &v, 5, 7).unwrap());
    }

    #[test]
    fn type_mismatch_reported() {
        let v = MatrixCategory;
        let a = RatMatrix::from_i64(2, 3, &[1, 2, 3, 4, 5, 6]);
        // vertex claims boundary 2 -> 2 but the matrix is 3 -> 2
        let bad = Diagram::prime("a", &vec![2u64], &vec![2u64], a);
        assert!(matches!(evaluate(&bad, &v), Err(EvalError::TypeMismatch(..))));
    }

    #[test]
    fn contraction_and_coarsegrain() {
        let v = MatrixCategory;
        let (chain, a, b) = two_chain();
        let k = diagram_contraction(&chain, &v).unwrap();
        assert_eq!(k.vertex_labels.values().next().unwrap(), &b.mul(&a));
        assert_eq!(k.dom(), chain.dom());

        // prime contraction is itself up to canonical form
        let pa = Diagram::prime("a", &vec![3u64, 1], &vec![2u64], a.clone());
        assert_eq!(
            diagram_contraction(&pa, &v).unwrap().canonical_form(),
            pa.canonical_form()
        );

        let z = diagram_coarsegrain(
            &chain,
            &LinearPartition::trivial(2),
            &LinearPartition::trivial(2),
            &v,
        )
        .unwrap();
        assert_eq!(z.dom(), vec![3]);
        assert_eq!(z.cod(), vec![4]);
        assert_eq!(z.vertex_labels.values().next().unwrap(), &b.mul(&a));
    }

    #[test]
    fn matrix_backend_laws() {
        let v = MatrixCategory;
        let a = RatMatrix::from_i64(2, 2, &[1, 2, 3, 4]);
        let b = RatMatrix::from_i64(2, 2, &[0, 1, 1, 0]);
        let c = RatMatrix::from_i64(3, 2, &[1, 1, 0, 1, 5, 2]);
        let d = RatMatrix::from_i64(2, 3, &[1, 0, 1, 0, 2, 0]);
        let samples = BackendSamples::<MatrixCategory> {
            objects: vec![1, 2, 3, 4],
            morphisms: vec![a.clone(), b.clone(), c.clone(), d.clone()],
            composable_pairs: vec![(a.clone(), b.clone()), (c.clone(), d.clone())],
            composable_triples: vec![
                (a.clone(), b.clone(), c.clone()),
                (b.clone(), a.clone(), c.clone()),
            ],
            interchange_quads: vec![
                ((a.clone(), b.clone()), (b.clone(), a.clone())),
                ((a.clone(), c.clone()), (d.clone(), a.clone())),
            ],
        };
        assert!(check_backend(&v, &samples).is_empty());
    }

    #[test]
    fn planar_cat_laws() {
        use crate::fixtures::prime;
        let v = PlanarCat;
        let p = prime("p", 1, 2).canonical_form();
        let q = prime("q", 2, 1).canonical_form();
        let r = prime("r", 1, 1).canonical_form();
        let samples = BackendSamples::<PlanarCat> {
            objects: vec![0, 1, 2, 3],
            morphisms: vec![p.clone(), q.clone(), r.clone()],
            composable_pairs: vec![(p.clone(), q.clone()), (r.clone(), p.clone())],
            composable_triples: vec![(p.clone(), q.clone(), r.clone())],
            interchange_quads: vec![((p.clone(), q.clone()), (q.clone(), p.clone()))],
        };
        assert!(check_backend(&v, &samples).is_empty());
    }
}
