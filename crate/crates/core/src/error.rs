use thiserror::Error;

use crate::VertexId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph with {vertex_count} vertices")]
    VertexOutOfRange { vertex: VertexId, vertex_count: u32 },

    #[error("edge capacity exhausted ({capacity} cells in use)")]
    CapacityExhausted { capacity: usize },

    #[error("invalid store configuration: {0}")]
    InvalidConfig(String),

    #[error("edge weights are not enabled for this store")]
    WeightsDisabled,

    #[error("{vertex_count} vertices exceeds the oracle limit of {limit}")]
    OracleTooLarge { vertex_count: u32, limit: u32 },
}
