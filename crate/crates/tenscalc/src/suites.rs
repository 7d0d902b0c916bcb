//! Named law suites behind the CLI and the acceptance tests: category axioms
//! for the matrix backend, monad laws for the fissus multiplication, and the
//! manifold law battery.

use rayon::prelude::*;

use crate::category::{check_backend, BackendSamples, MatrixCategory, PlanarCat};
use crate::diagram::{Diagram, FissusDiagram};
use crate::engine::{monad_mu, monad_t_eta, monad_unit, Compound};
use crate::error::LawViolation;
use crate::manifold::{
    check_algebra_laws, derived_op_laws, FissusGraphManifold, FreeManifold, ManifoldSamples,
    PhiManifold, PrimeGraphManifold, TensorManifold,
};
use crate::matrix::RatMatrix;
use crate::partition::LinearPartition;
use crate::sample::Sampler;
use crate::scheme::Word;

/// Strict-category axioms for the exact matrix backend and the planar-graph
/// backend, on `n` random sample tuples.
pub fn category_suite(seed: u64, n: usize, jobs: usize) -> Vec<LawViolation> {
    let run = |chunk: u64| -> Vec<LawViolation> {
        let mut s = Sampler::new(seed.wrapping_add(chunk));
        let v = MatrixCategory;
        let dims = [1usize, 2, 3];
        let mut morphisms = Vec::new();
        for _ in 0..8 {
            let r = dims[s.range(0, 2)];
            let c = dims[s.range(0, 2)];
            morphisms.push(s.matrix(r, c));
        }
        let mut composable_pairs = Vec::new();
        let mut composable_triples = Vec::new();
        let mut interchange_quads = Vec::new();
        for _ in 0..n.max(1) {
            let a = dims[s.range(0, 2)];
            let b = dims[s.range(0, 2)];
            let c = dims[s.range(0, 2)];
            let d = dims[s.range(0, 2)];
            let f = s.matrix(b, a);
            let g = s.matrix(c, b);
            let h = s.matrix(d, c);
            composable_pairs.push((f.clone(), g.clone()));
            composable_triples.push((f.clone(), g.clone(), h.clone()));
            let f2 = s.matrix(c, d);
            let g2 = s.matrix(a, c);
            interchange_quads.push(((f, g), (f2, g2)));
        }
        let samples = BackendSamples::<MatrixCategory> {
            objects: vec![1, 2, 3, 4, 6],
            morphisms,
            composable_pairs,
            composable_triples,
            interchange_quads,
        };
        let mut out = check_backend(&v, &samples);

        let p = s.planar_graph_bounded(8).canonical_form();
        let (pm, pn) = p.arity();
        let q = {
            let raw = s.planar_graph(3, 2);
            // pad to a composable partner
            let mut acc = raw;
            while acc.arity().0 < pn {
                acc = acc.tensor(&crate::fixtures::wire("pad"));
            }
            while acc.arity().0 > pn {
                acc = crate::fixtures::prime("fix", pn, 1).canonical_form();
            }
            acc.canonical_form()
        };
        let _ = pm;
        let gsamples = BackendSamples::<PlanarCat> {
            objects: vec![0, 1, 2, 3],
            morphisms: vec![p.clone(), q.clone()],
            composable_pairs: vec![(p.clone(), q.clone())],
            composable_triples: vec![],
            interchange_quads: vec![((p.clone(), q.clone()), (p, q))],
        };
        out.extend(check_backend(&PlanarCat, &gsamples));
        out
    };
    run_chunks(jobs, run)
}

/// Monad laws: both unit triangles and the associativity square on random
/// compounds over a random scheme.
pub fn monad_suite(seed: u64, n: usize, jobs: usize) -> Vec<LawViolation> {
    let run = |chunk: u64| -> Vec<LawViolation> {
        let mut violations = Vec::new();
        let mut s = Sampler::new(seed.wrapping_add(chunk));
        let scheme = s.scheme(3, 4);
        for k in 0..n {
            let fd = s.fissus_of(s_diagram(&mut s, &scheme)).canonical_form();
            // left unit triangle
            let back = monad_mu(&monad_unit(&fd)).map(|x| x.canonical_form());
            if back.as_ref() != Ok(&fd) {
                violations.push(LawViolation {
                    law: "monad-left-unit".into(),
                    witness: format!("sample {k}"),
                });
            }
            // right unit triangle
            let via = monad_t_eta(&scheme, &fd)
                .and_then(|c| monad_mu(&c))
                .map(|x| x.canonical_form());
            if via.as_ref() != Ok(&fd) {
                violations.push(LawViolation {
                    law: "monad-right-unit".into(),
                    witness: format!("sample {k}"),
                });
            }
            // associativity square on a two-level compound
            let c2 = s.compound_two_level(&scheme, 2);
            let path_mu_t = {
                // apply the multiplication inside each component first
                let collapsed: Compound<String, String> = FissusDiagram {
                    diagram: c2.diagram.relabel(
                        &|w: &Word<Word<String>>| w.iter().flatten().cloned().collect(),
                        &|c: &Compound<String, String>| {
                            monad_mu(c).expect("sampled compounds are coherent")
                        },
                    ),
                    p_in: c2.p_in.clone(),
                    p_out: c2.p_out.clone(),
                };
                monad_mu(&collapsed).map(|x| x.canonical_form())
            };
            let path_t_mu = monad_mu(&c2)
                .and_then(|c| monad_mu(&c))
                .map(|x| x.canonical_form());
            if path_mu_t.is_err() || path_mu_t != path_t_mu {
                violations.push(LawViolation {
                    law: "monad-associativity".into(),
                    witness: format!("sample {k}"),
                });
            }
        }
        violations
    };
    run_chunks(jobs, run)
}

fn s_diagram(s: &mut Sampler, scheme: &crate::scheme::FiniteScheme<String, String>) -> Diagram<String, String> {
    let layers = s.range(1, 4);
    s.scheme_diagram(scheme, layers)
}

/// Manifold law battery for the comparison manifold of the matrix backend,
/// the free manifold on a random scheme, and the two coarse-graining graph
/// manifolds.
pub fn manifold_suite(seed: u64, n: usize, jobs: usize) -> Vec<LawViolation> {
    let run = |chunk: u64| -> Vec<LawViolation> {
        let mut s = Sampler::new(seed.wrapping_add(chunk));
        let mut out = Vec::new();

        out.extend(phi_matrix_laws(&mut s, n));

        // free manifold on a random scheme
        let scheme = s.scheme(3, 4);
        let m = FreeManifold { scheme: scheme.clone() };
        let mors: Vec<FissusDiagram<String, String>> = (0..4)
            .map(|_| s.fissus_of(s_diagram(&mut s, &scheme)).canonical_form())
            .collect();
        let pairs = composable_pairs_of(&m, &mors);
        let samples = ManifoldSamples::<FreeManifold<String, String>> {
            words: vec![vec![], vec![vec!["x0".into()]], vec![vec!["x0".into(), "x1".into()]]],
            morphisms: mors,
            composable_pairs: pairs.clone(),
            composable_triples: triples_of(&m, &pairs),
            interchange_quads: quads_of(&pairs),
            fissus_diagrams: vec![],
            compounds: (0..n.min(5)).map(|_| s.compound(&scheme, 2, 2)).collect(),
        };
        out.extend(derived_op_laws(&m, &samples));
        out.extend(check_algebra_laws(&m, &samples));

        out.extend(graph_manifold_laws(&mut s));
        out
    };
    run_chunks(jobs, run)
}

pub fn phi_matrix_laws(s: &mut Sampler, n: usize) -> Vec<LawViolation> {
    use crate::engine::PrimeMor;
    let m = PhiManifold(MatrixCategory);
    let mut mors: Vec<PrimeMor<u64, RatMatrix>> = Vec::new();
    for _ in 0..4 {
        let dl = s.range(1, 2);
        let cl = s.range(1, 2);
        let dom: Word<u64> = (0..dl).map(|_| s.range(1, 3) as u64).collect();
        let cod: Word<u64> = (0..cl).map(|_| s.range(1, 3) as u64).collect();
        let rows: u64 = cod.iter().product();
        let cols: u64 = dom.iter().product();
        mors.push(PrimeMor { dom, cod, val: s.matrix(rows as usize, cols as usize) });
    }
    let pairs: Vec<_> = mors
        .iter()
        .flat_map(|f| {
            let m = &m;
            let s_matrix_rows: u64 = m.mor_tgt(f).iter().product();
            mors.iter()
                .filter(move |g| {
                    m.mor_src(g).iter().product::<u64>() == s_matrix_rows
                        && m.mor_src(g) == m.mor_tgt(f)
                })
                .map(move |g| (f.clone(), g.clone()))
        })
        .collect();
    let fds: Vec<FissusDiagram<u64, RatMatrix>> = (0..n.min(6))
        .map(|_| {
            let d = s.matrix_diagram(3, 2, 3);
            s.fissus_of(d)
        })
        .collect();
    let compounds = fds.iter().map(monad_unit).collect();
    let samples = ManifoldSamples::<PhiManifold<MatrixCategory>> {
        words: vec![vec![], vec![2], vec![2, 3], vec![1, 2, 2]],
        morphisms: mors,
        composable_pairs: pairs.clone(),
        composable_triples: triples_of(&m, &pairs),
        interchange_quads: quads_of(&pairs),
        fissus_diagrams: fds,
        compounds,
    };
    let mut out = derived_op_laws(&m, &samples);
    out.extend(check_algebra_laws(&m, &samples));
    out
}

pub fn graph_manifold_laws(s: &mut Sampler) -> Vec<LawViolation> {
    let mut out = Vec::new();
    let prim = PrimeGraphManifold;
    let mors = PrimeGraphManifold::sample_morphisms(3);
    let pairs = composable_pairs_of(&prim, &mors);
    let samples = ManifoldSamples::<PrimeGraphManifold> {
        words: vec![vec![], vec![()], vec![(), ()]],
        morphisms: mors,
        composable_pairs: pairs.clone(),
        composable_triples: triples_of(&prim, &pairs),
        interchange_quads: quads_of(&pairs),
        fissus_diagrams: vec![],
        compounds: vec![],
    };
    out.extend(derived_op_laws(&prim, &samples));
    out.extend(check_algebra_laws(&prim, &samples));

    let fm = FissusGraphManifold;
    let mors: Vec<_> = (0..5)
        .map(|_| {
            let pg = s.planar_graph_bounded(10);
            let (m0, n0) = pg.arity();
            crate::fissus::FissusPlanarGraph::new(
                pg,
                s.partition_of(m0),
                s.partition_of(n0),
            )
            .unwrap()
            .canonical_form()
        })
        .collect();
    let pairs = composable_pairs_of(&fm, &mors);
    let samples = ManifoldSamples::<FissusGraphManifold> {
        words: vec![vec![], vec![1], vec![2, 1]],
        morphisms: mors,
        composable_pairs: pairs.clone(),
        composable_triples: triples_of(&fm, &pairs),
        interchange_quads: quads_of(&pairs),
        fissus_diagrams: vec![],
        compounds: vec![],
    };
    out.extend(derived_op_laws(&fm, &samples));
    out.extend(check_algebra_laws(&fm, &samples));
    out
}

/// A deliberately broken manifold (fusion ignores its partitions); the suite
/// must reject it.
pub fn mutated_manifold_suite(seed: u64) -> Vec<LawViolation> {
    #[derive(Debug, Clone)]
    struct Broken(PhiManifold<MatrixCategory>);
    impl TensorManifold for Broken {
        type Obj = u64;
        type Mor = crate::engine::PrimeMor<u64, RatMatrix>;
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
        fn compose(
            &self,
            g: &Self::Mor,
            f: &Self::Mor,
        ) -> Result<Self::Mor, crate::error::EvalError> {
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
    let mut s = Sampler::new(seed);
    let m = Broken(PhiManifold(MatrixCategory));
    let f = crate::engine::PrimeMor {
        dom: vec![2, 2],
        cod: vec![3],
        val: s.matrix(3, 4),
    };
    let samples = ManifoldSamples::<Broken> {
        words: vec![vec![2, 2]],
        morphisms: vec![f],
        composable_pairs: vec![],
        composable_triples: vec![],
        interchange_quads: vec![],
        fissus_diagrams: vec![],
        compounds: vec![],
    };
    derived_op_laws(&m, &samples)
}

fn composable_pairs_of<M: TensorManifold>(m: &M, mors: &[M::Mor]) -> Vec<(M::Mor, M::Mor)> {
    let mut out = Vec::new();
    for f in mors {
        for g in mors {
            if m.mor_tgt(f) == m.mor_src(g) {
                out.push((f.clone(), g.clone()));
            }
        }
    }
    out
}

fn triples_of<M: TensorManifold>(
    m: &M,
    pairs: &[(M::Mor, M::Mor)],
) -> Vec<(M::Mor, M::Mor, M::Mor)> {
    let mut out = Vec::new();
    for (f, g) in pairs {
        for (g2, h) in pairs {
            if g == g2 {
                out.push((f.clone(), g.clone(), h.clone()));
            }
        }
    }
    out.truncate(8);
    let _ = m;
    out
}

fn quads_of<M: TensorManifold>(
    pairs: &[(M::Mor, M::Mor)],
) -> Vec<((M::Mor, M::Mor), (M::Mor, M::Mor))> {
    let mut out = Vec::new();
    for a in pairs {
        for b in pairs {
            out.push((a.clone(), b.clone()));
        }
    }
    out.truncate(8);
    out
}

fn run_chunks(
    jobs: usize,
    run: impl Fn(u64) -> Vec<LawViolation> + Sync,
) -> Vec<LawViolation> {
    if jobs <= 1 {
        return run(0);
    }
    (0..jobs as u64)
        .into_par_iter()
        .flat_map_iter(|k| run(k * 7919))
        .collect()
}
