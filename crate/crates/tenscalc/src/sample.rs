//! Seeded random generators: planar graphs, matrix-valued and scheme-valued
//! diagrams, fissus structures and two-level compounds. Everything is driven
//! by a ChaCha stream so suites replay exactly.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::diagram::{Diagram, FissusDiagram};
use crate::engine::Compound;
use crate::matrix::RatMatrix;
use crate::partition::LinearPartition;
use crate::planar::PlanarGraph;
use crate::scheme::{FiniteScheme, Label, Word};

pub struct Sampler {
    rng: ChaCha8Rng,
    counter: u64,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed), counter: 0 }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    fn tag(&mut self) -> String {
        self.counter += 1;
        format!("n{}_", self.counter)
    }

    pub fn range(&mut self, lo: usize, hi: usize) -> usize {
        self.rng.gen_range(lo..=hi)
    }

    pub fn partition_of(&mut self, n: usize) -> LinearPartition {
        if n == 0 {
            return LinearPartition::empty();
        }
        let mut sizes = Vec::new();
        let mut left = n;
        while left > 0 {
            let s = self.range(1, left);
            sizes.push(s);
            left -= s;
        }
        LinearPartition::new(sizes).unwrap()
    }

    /// Layered diagram builder: starting from a labelled boundary, stack
    /// layers that replace a random contiguous segment by a generator
    /// obtained from `supply`, padding the rest with wires.
    pub fn layered<O: Label, M: Label>(
        &mut self,
        dom: &Word<O>,
        layers: usize,
        mut supply: impl FnMut(&mut Self, &[O]) -> Option<(M, Word<O>)>,
    ) -> Diagram<O, M> {
        let mut acc: Diagram<O, M> = Diagram::identity(dom);
        for _ in 0..layers {
            let cod = acc.cod();
            if cod.is_empty() {
                break;
            }
            let len = self.range(1, cod.len());
            let pos = self.range(0, cod.len() - len);
            let segment = &cod[pos..pos + len];
            let Some((label, out)) = supply(self, segment) else { continue };
            let tag = self.tag();
            let layer = Diagram::identity(&cod[..pos].to_vec())
                .tensor(&Diagram::prime(&tag, &segment.to_vec(), &out, label))
                .tensor(&Diagram::identity(&cod[pos + len..].to_vec()));
            acc = acc.compose(&layer).expect("layer built against the boundary");
        }
        acc
    }

    /// Random planar graph built from essential prime layers; `width` bounds
    /// the boundary, `layers` the vertex count.
    pub fn planar_graph(&mut self, max_width: usize, layers: usize) -> PlanarGraph {
        let w = self.range(1, max_width);
        let dom: Word<u8> = vec![0; w];
        let d = self.layered(&dom, layers, |s, seg| {
            let out = s.range(1, max_width.max(2) - 1);
            let _ = seg;
            Some(((), vec![0; out]))
        });
        d.planar
    }

    /// Random planar graph with at most `max_edges` edges.
    pub fn planar_graph_bounded(&mut self, max_edges: usize) -> PlanarGraph {
        loop {
            let layers = self.range(1, 3);
            let pg = self.planar_graph(3, layers);
            if pg.order().len() <= max_edges {
                return pg;
            }
        }
    }

    /// A random (not necessarily planar) total order on the edges.
    pub fn shuffled_order(&mut self, pg: &PlanarGraph) -> Vec<crate::graph::Hid> {
        use rand::seq::SliceRandom;
        let mut order = pg.order().to_vec();
        order.shuffle(&mut self.rng);
        order
    }

    pub fn matrix(&mut self, rows: usize, cols: usize) -> RatMatrix {
        let data: Vec<i64> = (0..rows * cols).map(|_| self.rng.gen_range(-2..=2)).collect();
        RatMatrix::from_i64(rows, cols, &data)
    }

    /// Random matrix-valued diagram: dimensions up to `max_dim`, boundary up
    /// to `max_width` strands, about `layers` vertices.
    pub fn matrix_diagram(
        &mut self,
        max_width: usize,
        layers: usize,
        max_dim: u64,
    ) -> Diagram<u64, RatMatrix> {
        let w = self.range(1, max_width);
        let dom: Word<u64> = (0..w).map(|_| self.rng.gen_range(1..=max_dim)).collect();
        self.layered(&dom, layers, |s, seg| {
            let out_len = s.range(1, max_width.max(2) - 1);
            let out: Word<u64> = (0..out_len).map(|_| s.rng.gen_range(1..=max_dim)).collect();
            let rows: u64 = out.iter().product();
            let cols: u64 = seg.iter().product();
            Some((s.matrix(rows as usize, cols as usize), out))
        })
    }

    /// Random finite scheme with single-letter object names.
    pub fn scheme(&mut self, objects: usize, generators: usize) -> FiniteScheme<String, String> {
        let obs: Vec<String> = (0..objects).map(|i| format!("x{i}")).collect();
        let gens = (0..generators).map(|i| {
            let src_len = self.range(1, 3);
            let tgt_len = self.range(1, 3);
            let pick = |s: &mut Self| {
                let k = s.range(0, objects - 1);
                format!("x{k}")
            };
            let src: Word<String> = (0..src_len).map(|_| pick(self)).collect();
            let tgt: Word<String> = (0..tgt_len).map(|_| pick(self)).collect();
            (format!("g{i}"), src, tgt)
        });
        let table: Vec<(String, Word<String>, Word<String>)> = gens.collect();
        FiniteScheme::new(obs, table).unwrap()
    }

    /// Random diagram over a finite scheme, grown from a generator's source.
    pub fn scheme_diagram(
        &mut self,
        scheme: &FiniteScheme<String, String>,
        layers: usize,
    ) -> Diagram<String, String> {
        let gens: Vec<String> = scheme.morphisms().cloned().collect();
        let seed_gen = gens[self.range(0, gens.len() - 1)].clone();
        let dom = scheme.src(&seed_gen).unwrap().clone();
        self.scheme_diagram_from(scheme, &dom, layers)
    }

    /// Random diagram over a finite scheme with the given domain word.
    pub fn scheme_diagram_from(
        &mut self,
        scheme: &FiniteScheme<String, String>,
        dom: &Word<String>,
        layers: usize,
    ) -> Diagram<String, String> {
        let gens: Vec<String> = scheme.morphisms().cloned().collect();
        self.layered(dom, layers, |s, seg| {
            use rand::seq::SliceRandom;
            let mut shuffled = gens.clone();
            shuffled.shuffle(&mut s.rng);
            for g in shuffled {
                if scheme.src(&g).unwrap().as_slice() == seg {
                    let out = scheme.tgt(&g).unwrap().clone();
                    return Some((g, out));
                }
            }
            None
        })
    }

    pub fn fissus_of<O: Label, M: Label>(&mut self, d: Diagram<O, M>) -> FissusDiagram<O, M> {
        let (m, n) = d.planar.arity();
        let p_in = self.partition_of(m);
        let p_out = self.partition_of(n);
        FissusDiagram::new(d, p_in, p_out).unwrap()
    }

    /// Random fissus diagram over a scheme with a prescribed bracketed
    /// domain.
    pub fn fissus_from(
        &mut self,
        scheme: &FiniteScheme<String, String>,
        bracketed_dom: &[Word<String>],
        layers: usize,
    ) -> FissusDiagram<String, String> {
        let flat: Word<String> = bracketed_dom.iter().flatten().cloned().collect();
        let d = self.scheme_diagram_from(scheme, &flat, layers);
        let p_in = if bracketed_dom.is_empty() {
            LinearPartition::empty()
        } else {
            LinearPartition::new(bracketed_dom.iter().map(|b| b.len()).collect()).unwrap()
        };
        let p_out = self.partition_of(d.cod().len());
        FissusDiagram::new(d, p_in, p_out).unwrap()
    }

    /// Random two-level compound: an outer fissus diagram whose vertices are
    /// fissus diagrams over the scheme, label-coherent by construction.
    pub fn compound(
        &mut self,
        scheme: &FiniteScheme<String, String>,
        outer_layers: usize,
        inner_layers: usize,
    ) -> Compound<String, String> {
        // outer boundary: a random bracketed word from a generator source
        let gens: Vec<String> = scheme.morphisms().cloned().collect();
        let g0 = gens[self.range(0, gens.len() - 1)].clone();
        let flat = scheme.src(&g0).unwrap().clone();
        let cut = self.partition_of(flat.len());
        let dom2: Word<Word<String>> =
            cut.ranges().into_iter().map(|r| flat[r].to_vec()).collect();
        self.compound_from(scheme, &dom2, outer_layers, inner_layers)
    }

    /// Random compound with the given outer edge labels; the outer fission
    /// is chosen at random.
    pub fn compound_from(
        &mut self,
        scheme: &FiniteScheme<String, String>,
        dom2: &[Word<String>],
        outer_layers: usize,
        inner_layers: usize,
    ) -> Compound<String, String> {
        let outer = self.layered(&dom2.to_vec(), outer_layers, |s, seg| {
            let inner = s.fissus_from(scheme, seg, inner_layers);
            let cod2 = inner.dom_cod().1;
            Some((inner, cod2))
        });
        let (m, n) = outer.planar.arity();
        let p_in = self.partition_of(m);
        let p_out = self.partition_of(n);
        FissusDiagram::new(outer, p_in, p_out).unwrap()
    }

    /// Random three-level structure: an outer fissus diagram whose vertices
    /// are themselves compounds. This is the generic element on which the
    /// multiplication's associativity square is checked.
    pub fn compound_two_level(
        &mut self,
        scheme: &FiniteScheme<String, String>,
        layers: usize,
    ) -> Compound<Word<String>, FissusDiagram<String, String>> {
        let gens: Vec<String> = scheme.morphisms().cloned().collect();
        let g0 = gens[self.range(0, gens.len() - 1)].clone();
        let flat = scheme.src(&g0).unwrap().clone();
        let cut1 = self.partition_of(flat.len());
        let dom2: Word<Word<String>> =
            cut1.ranges().into_iter().map(|r| flat[r].to_vec()).collect();
        let cut2 = self.partition_of(dom2.len());
        let dom3: Word<Word<Word<String>>> =
            cut2.ranges().into_iter().map(|r| dom2[r].to_vec()).collect();
        let outer = self.layered(&dom3, layers, |s, seg| {
            let flat_seg: Word<Word<String>> = seg.iter().flatten().cloned().collect();
            let mut c = s.compound_from(scheme, &flat_seg, 2, 1);
            // align the compound's outer fission with the requested brackets
            c.p_in = if seg.is_empty() {
                LinearPartition::empty()
            } else {
                LinearPartition::new(seg.iter().map(|b| b.len()).collect()).unwrap()
            };
            let cod3 = c.dom_cod().1;
            Some((c, cod3))
        });
        let (m, n) = outer.planar.arity();
        let p_in = self.partition_of(m);
        let p_out = self.partition_of(n);
        FissusDiagram::new(outer, p_in, p_out).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{evaluate, MatrixCategory};
    use crate::engine::{monad_mu, validate_compound};

    #[test]
    fn generators_are_reproducible() {
        let a = Sampler::new(5).planar_graph(3, 3);
        let b = Sampler::new(5).planar_graph(3, 3);
        assert_eq!(a, b);
        assert_ne!(a, Sampler::new(6).planar_graph(3, 3));
    }

    #[test]
    fn random_planar_graphs_validate() {
        let mut s = Sampler::new(1);
        for _ in 0..30 {
            let pg = s.planar_graph(4, 3);
            // construction goes through PlanarGraph::new, so re-validate
            PlanarGraph::new(pg.oriented().clone(), pg.order().to_vec()).unwrap();
        }
    }

    #[test]
    fn random_matrix_diagrams_evaluate() {
        let mut s = Sampler::new(2);
        let v = MatrixCategory;
        for _ in 0..20 {
            let d = s.matrix_diagram(3, 3, 3);
            evaluate(&d, &v).unwrap();
        }
    }

    #[test]
    fn random_scheme_diagrams_validate() {
        let mut s = Sampler::new(3);
        let scheme = s.scheme(3, 4);
        for _ in 0..20 {
            let d = s.scheme_diagram(&scheme, 4);
            d.validate_in_scheme(&scheme).unwrap();
        }
    }

    #[test]
    fn random_compounds_are_coherent() {
        let mut s = Sampler::new(4);
        let scheme = s.scheme(3, 4);
        let mut nontrivial = 0;
        for _ in 0..20 {
            let c = s.compound(&scheme, 2, 2);
            validate_compound(&c).unwrap();
            if !c.diagram.vertex_labels.is_empty() {
                nontrivial += 1;
            }
            monad_mu(&c).unwrap();
        }
        assert!(nontrivial > 5, "sampler should produce nontrivial compounds");
    }
}
