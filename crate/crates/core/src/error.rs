use num_bigint::BigUint;
use thiserror::Error;

use crate::graph::VertexId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),

    #[error("edge ({0}, {1}) references a vertex outside 0..{2}")]
    VertexOutOfRange(VertexId, VertexId, usize),

    #[error("factorization of {n} incomplete: cofactor {cofactor} not resolved")]
    FactorizationIncomplete { n: BigUint, cofactor: BigUint },

    #[error("prime index {index} exceeds the sieve budget of {budget}")]
    SieveBudget { index: u64, budget: u64 },

    #[error("{value} is not a unit modulo {modulus}{}", vertex_suffix(.vertex))]
    NotAUnit {
        value: BigUint,
        modulus: BigUint,
        vertex: Option<VertexId>,
    },

    #[error("degenerate modulus: {q} divides {p}")]
    DegenerateModulus { p: BigUint, q: BigUint },

    #[error("group closure modulo {modulus} exceeds the budget of {budget} elements")]
    ClosureBudget { modulus: BigUint, budget: u64 },

    #[error("exact label would need about {bits} bits (cap {cap}); use the power-form representation")]
    ExactSizeExceeded { bits: u64, cap: u64 },

    #[error("graph is not bipartite; odd cycle {0:?}")]
    NotBipartite(Vec<VertexId>),

    #[error("labeling is missing vertex {0}")]
    PartialLabeling(VertexId),

    #[error("labeling assigns vertex {0} which is not in the graph")]
    ExtraneousVertex(VertexId),

    #[error("label of vertex {0} must be a positive integer")]
    NonPositiveLabel(VertexId),

    #[error("representation not supported: {0}")]
    Representation(String),
}

fn vertex_suffix(vertex: &Option<VertexId>) -> String {
    match vertex {
        Some(v) => format!(" (vertex {v})"),
        None => String::new(),
    }
}
