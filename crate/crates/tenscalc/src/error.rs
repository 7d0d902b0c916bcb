//! Error types shared across the crate.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("duplicate half-edge id {0:?}")]
    DuplicateId(String),
    #[error("involution is not self-inverse at {0:?}")]
    NonInvolutive(String),
    #[error("vertex partition does not cover the half-edge set exactly (offender {0:?})")]
    PartitionNotCovering(String),
    #[error("vertex block must be nonempty")]
    EmptyBlock,
    #[error("virtual vertex {0:?} has degree >= 3")]
    VirtualVertexTooBig(Vec<String>),
    #[error("block not in graph: {0:?}")]
    BlockNotInGraph(Vec<String>),
    #[error("{0:?} is not a leg")]
    NotALeg(String),
    #[error("inner graph is not reduced")]
    InnerNotReduced,
    #[error("substitution map is not a bijection onto the legs")]
    NotABijection,
    #[error("{0:?} is not a real vertex")]
    NotARealVertex(String),
    #[error("merge endpoints must be distinct real vertices")]
    NotRealVertices,
    #[error("relation is not a splitting: axiom {axiom} violated at {witness:?}")]
    NotASplitting { axiom: u8, witness: String },
    #[error("sign map violates orientation on edge {0:?}")]
    BadSign(String),
    #[error("sign map must be total on half-edges (missing {0:?})")]
    SignNotTotal(String),
    #[error("vertex {0:?} lacks an input or an output half-edge")]
    NotDirected(String),
    #[error("anchor sequences must enumerate the input/output legs exactly")]
    BadAnchors,
    #[error("arity mismatch: |Out| = {out} but |In| = {inn}")]
    ArityMismatch { out: usize, inn: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PlanarError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("graph is not progressive (directed circuit through edge {0:?})")]
    NotProgressive(String),
    #[error("edge order does not enumerate the edges exactly")]
    BadOrder,
    #[error("P1 violated: {e1:?} -> {e2:?} but {e2:?} comes first")]
    P1Violation { e1: String, e2: String },
    #[error("P2 violated on triple ({e1:?}, {e2:?}, {e3:?})")]
    P2Violation { e1: String, e2: String, e3: String },
    #[error("no planar order is compatible with the given polarization and anchors")]
    NoCompatibleOrder,
    #[error("inconsistent polarization/anchor input: {0}")]
    InconsistentInput(String),
    #[error("partition length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SchemeError {
    #[error("unknown object {0:?}")]
    UnknownObject(String),
    #[error("unknown morphism {0:?}")]
    UnknownMorphism(String),
    #[error("source/target square does not commute at morphism {0:?}")]
    SquareDoesNotCommute(String),
    #[error("edge labels are not sigma-invariant at {0:?}")]
    NotSigmaInvariant(String),
    #[error("vertex {0:?} decoration does not match its incident labels")]
    VertexTypeMismatch(String),
    #[error("boundary labels mismatch at interface position {0}")]
    NotComposable(usize),
    #[error("missing label for {0:?}")]
    MissingLabel(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EvalError {
    #[error(transparent)]
    Planar(#[from] PlanarError),
    #[error(transparent)]
    Scheme(#[from] SchemeError),
    #[error("type mismatch at vertex {0:?}: {1}")]
    TypeMismatch(String, String),
    #[error("objects are not composable: cod {0:?} vs dom {1:?}")]
    NotComposableObjects(String, String),
    #[error("coarse-graining of component at vertex {0:?} does not match the host vertex")]
    CoarseGrainMismatch(String),
    #[error("contraction of component at vertex {0:?} does not match the host vertex")]
    ContractionMismatch(String),
}

/// One failed law instance, with a human-readable witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawViolation {
    pub law: String,
    pub witness: String,
}

impl std::fmt::Display for LawViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "law {} violated: {}", self.law, self.witness)
    }
}
