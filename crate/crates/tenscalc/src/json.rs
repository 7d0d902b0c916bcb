//! JSON documents for graphs, planar structures, diagrams, schemes and
//! matrix bindings. Field order is fixed by the struct declarations and maps
//! are sorted, so serialization is byte-stable.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::diagram::{Diagram, FissusDiagram};
use crate::error::{EvalError, GraphError, PlanarError};
use crate::fissus::FissusPlanarGraph;
use crate::graph::{Graph, Hid, PreGraph};
use crate::matrix::RatMatrix;
use crate::oriented::{OrientedGraph, Sign};
use crate::partition::LinearPartition;
use crate::planar::PlanarGraph;
use crate::scheme::{FiniteScheme, Word};

#[derive(Debug, Clone, Serialize, Deserialize, Default)]
pub struct AnchorsDoc {
    #[serde(rename = "in")]
    pub inputs: Vec<Hid>,
    #[serde(rename = "out")]
    pub outputs: Vec<Hid>,
}

/// A (pre-)graph document, optionally carrying orientation, anchors, a
/// planar edge order, fission partitions and diagram labels.
#[derive(Debug, Clone, Serialize, Deserialize, Default)]
pub struct GraphDoc {
    pub half_edges: Vec<Hid>,
    pub vertices: Vec<Vec<Hid>>,
    pub involution: Vec<(Hid, Hid)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sign: Option<BTreeMap<Hid, Sign>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub anchors: Option<AnchorsDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edge_order: Option<Vec<Hid>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p_in: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p_out: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edge_labels: Option<BTreeMap<Hid, String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertex_labels: Option<BTreeMap<Hid, String>>,
}

impl GraphDoc {
    pub fn to_pregraph(&self) -> Result<PreGraph, GraphError> {
        PreGraph::build(
            self.half_edges.iter().cloned(),
            self.vertices.iter().cloned(),
            self.involution.iter().cloned(),
        )
    }

    pub fn to_graph(&self) -> Result<Graph, GraphError> {
        Graph::new(self.to_pregraph()?)
    }

    pub fn to_oriented(&self) -> Result<OrientedGraph, GraphError> {
        let sign = self.sign.clone().ok_or_else(|| GraphError::SignNotTotal("sign".into()))?;
        OrientedGraph::new(self.to_graph()?, sign)
    }

    pub fn to_planar(&self) -> Result<PlanarGraph, PlanarError> {
        let og = self.to_oriented()?;
        let order = self.edge_order.clone().ok_or(PlanarError::BadOrder)?;
        PlanarGraph::new(og, order)
    }

    pub fn to_fissus(&self) -> Result<FissusPlanarGraph, PlanarError> {
        let pg = self.to_planar()?;
        let (m, n) = pg.arity();
        let p_in = match &self.p_in {
            Some(sizes) => LinearPartition::new(sizes.clone())?,
            None => LinearPartition::trivial(m),
        };
        let p_out = match &self.p_out {
            Some(sizes) => LinearPartition::new(sizes.clone())?,
            None => LinearPartition::trivial(n),
        };
        FissusPlanarGraph::new(pg, p_in, p_out)
    }

    pub fn to_diagram(&self) -> Result<Diagram<String, String>, EvalError> {
        let pg = self.to_planar()?;
        let edge_labels = self.edge_labels.clone().unwrap_or_default();
        let vertex_labels = self.vertex_labels.clone().unwrap_or_default();
        Ok(Diagram::new(pg, edge_labels, vertex_labels)?)
    }

    pub fn to_fissus_diagram(&self) -> Result<FissusDiagram<String, String>, EvalError> {
        let d = self.to_diagram()?;
        let (m, n) = d.planar.arity();
        let p_in = match &self.p_in {
            Some(sizes) => LinearPartition::new(sizes.clone()).map_err(EvalError::Planar)?,
            None => LinearPartition::trivial(m),
        };
        let p_out = match &self.p_out {
            Some(sizes) => LinearPartition::new(sizes.clone()).map_err(EvalError::Planar)?,
            None => LinearPartition::trivial(n),
        };
        FissusDiagram::new(d, p_in, p_out).map_err(EvalError::Planar)
    }

    pub fn from_graph(g: &Graph) -> GraphDoc {
        let pre = g.pre();
        GraphDoc {
            half_edges: pre.halves().iter().cloned().collect(),
            vertices: pre.blocks().iter().map(|b| b.iter().cloned().collect()).collect(),
            involution: pre
                .halves()
                .iter()
                .filter(|h| pre.sigma(h) > h)
                .map(|h| (h.clone(), pre.sigma(h).clone()))
                .collect(),
            ..GraphDoc::default()
        }
    }

    pub fn from_planar(pg: &PlanarGraph) -> GraphDoc {
        let mut doc = GraphDoc::from_graph(pg.graph());
        doc.sign = Some(pg.oriented().signs().clone());
        doc.anchors = Some(AnchorsDoc { inputs: pg.inputs(), outputs: pg.outputs() });
        doc.edge_order = Some(pg.order().to_vec());
        doc
    }

    pub fn from_fissus(f: &FissusPlanarGraph) -> GraphDoc {
        let mut doc = GraphDoc::from_planar(&f.planar);
        doc.p_in = Some(f.p_in.sizes().to_vec());
        doc.p_out = Some(f.p_out.sizes().to_vec());
        doc
    }

    pub fn from_diagram(d: &Diagram<String, String>) -> GraphDoc {
        let mut doc = GraphDoc::from_planar(&d.planar);
        doc.edge_labels = Some(d.edge_labels.clone());
        doc.vertex_labels = Some(d.vertex_labels.clone());
        doc
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SchemeMorDoc {
    pub id: String,
    pub src: Vec<String>,
    pub tgt: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SchemeDoc {
    pub objects: Vec<String>,
    pub morphisms: Vec<SchemeMorDoc>,
}

impl SchemeDoc {
    pub fn to_scheme(&self) -> Result<FiniteScheme<String, String>, crate::error::SchemeError> {
        FiniteScheme::new(
            self.objects.iter().cloned(),
            self.morphisms.iter().map(|m| (m.id.clone(), m.src.clone(), m.tgt.clone())),
        )
    }

    pub fn from_scheme(s: &FiniteScheme<String, String>) -> SchemeDoc {
        SchemeDoc {
            objects: s.objects().iter().cloned().collect(),
            morphisms: s
                .morphisms()
                .map(|m| SchemeMorDoc {
                    id: m.clone(),
                    src: s.src(m).unwrap().clone(),
                    tgt: s.tgt(m).unwrap().clone(),
                })
                .collect(),
        }
    }
}

/// Evaluation bindings: object dimensions and morphism matrices with
/// rational-string entries.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BindingDoc {
    pub objects: BTreeMap<String, u64>,
    pub morphisms: BTreeMap<String, Vec<Vec<String>>>,
}

impl BindingDoc {
    pub fn matrix(&self, name: &str) -> Result<RatMatrix, EvalError> {
        let rows = self
            .morphisms
            .get(name)
            .ok_or_else(|| EvalError::TypeMismatch(name.into(), "no matrix binding".into()))?;
        RatMatrix::parse_entries(rows).map_err(|e| EvalError::TypeMismatch(name.into(), e))
    }

    pub fn dim(&self, name: &str) -> Result<u64, EvalError> {
        self.objects
            .get(name)
            .copied()
            .ok_or_else(|| EvalError::TypeMismatch(name.into(), "no object binding".into()))
    }

    /// Evaluate a labelled diagram against these bindings.
    pub fn evaluate(&self, d: &Diagram<String, String>) -> Result<RatMatrix, EvalError> {
        self.evaluate_seeded(d, None)
    }

    pub fn evaluate_seeded(
        &self,
        d: &Diagram<String, String>,
        rng: Option<&mut rand_chacha::ChaCha8Rng>,
    ) -> Result<RatMatrix, EvalError> {
        for o in d.edge_labels.values() {
            self.dim(o)?;
        }
        for m in d.vertex_labels.values() {
            self.matrix(m)?;
        }
        crate::category::evaluate_with(
            d,
            &crate::category::MatrixCategory,
            &|o: &String| self.dim(o).expect("checked above"),
            &|m: &String| self.matrix(m),
            rng,
        )
    }
}

/// Word display helper for reports.
pub fn word_str(w: &Word<String>) -> String {
    w.join(" ")
}
/// A deterministic, pretty JSON rendering.
pub fn pretty<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serialization cannot fail") + "\n"
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::reduced_example;

    #[test]
    fn planar_round_trip() {
        let r = reduced_example();
        let doc = GraphDoc::from_planar(&r);
        let text = pretty(&doc);
        let parsed: GraphDoc = serde_json::from_str(&text).unwrap();
        let back = parsed.to_planar().unwrap();
        assert_eq!(back, r);
        // byte-stable output
        assert_eq!(text, pretty(&parsed));
    }

    #[test]
    fn fissus_and_diagram_round_trip() {
        let r = reduced_example();
        let f = FissusPlanarGraph::new(
            r.clone(),
            LinearPartition::new(vec![2, 3, 1]).unwrap(),
            LinearPartition::new(vec![4]).unwrap(),
        )
        .unwrap();
        let doc = GraphDoc::from_fissus(&f);
        let back = serde_json::from_str::<GraphDoc>(&pretty(&doc)).unwrap().to_fissus().unwrap();
        assert_eq!(back, f);

        let d = Diagram::prime(
            "v",
            &vec!["x".to_string(), "x".to_string()],
            &vec!["y".to_string()],
            "f".to_string(),
        );
        let doc = GraphDoc::from_diagram(&d);
        let back = serde_json::from_str::<GraphDoc>(&pretty(&doc))
            .unwrap()
            .to_diagram()
            .unwrap();
        assert_eq!(back, d);
    }

    #[test]
    fn binding_evaluation() {
        let d = Diagram::prime(
            "v",
            &vec!["x".to_string(), "x".to_string()],
            &vec!["y".to_string()],
            "f".to_string(),
        );
        let binding = BindingDoc {
            objects: [("x".to_string(), 2u64), ("y".to_string(), 3u64)].into_iter().collect(),
            morphisms: [(
                "f".to_string(),
                vec![
                    vec!["1".into(), "0".into(), "0".into(), "1/2".into()],
                    vec!["0".into(), "1".into(), "0".into(), "0".into()],
                    vec!["2".into(), "0".into(), "1".into(), "0".into()],
                ],
            )]
            .into_iter()
            .collect(),
        };
        let got = binding.evaluate(&d).unwrap();
        assert_eq!(got.rows(), 3);
        assert_eq!(got.cols(), 4);
    }
}
