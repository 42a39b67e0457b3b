use std::fmt;
use std::str::FromStr;

use super::{CostUnit, OpClass};
use crate::{
    Adjacency, EdgeHash, EdgeStore, GraphError, HashList, HashMode, MultiList, OracleGraph,
    StoreConfig, Traced, VertexId,
};

/// The store implementations the harness knows how to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StructureKind {
    HashList,
    MultiList,
    EdgeHash,
    Oracle,
}

impl StructureKind {
    pub const ALL: [StructureKind; 4] = [
        StructureKind::HashList,
        StructureKind::MultiList,
        StructureKind::EdgeHash,
        StructureKind::Oracle,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            StructureKind::HashList => "hashlist",
            StructureKind::MultiList => "multilist",
            StructureKind::EdgeHash => "edgehash",
            StructureKind::Oracle => "oracle",
        }
    }

    pub fn enumerates(self) -> bool {
        self != StructureKind::EdgeHash
    }

    pub fn cost_unit(self, class: OpClass) -> CostUnit {
        match (self, class) {
            (StructureKind::Oracle, _) => CostUnit::Cells,
            (StructureKind::MultiList, _) | (StructureKind::HashList, OpClass::Enumerate) => {
                CostUnit::Traversals
            }
            _ => CostUnit::Probes,
        }
    }
}

impl fmt::Display for StructureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for StructureKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        StructureKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| {
                format!(
                    "unknown structure `{s}` (expected hashlist, multilist, edgehash or oracle)"
                )
            })
    }
}

/// Which stores a run builds, and how the hashed ones are configured.
#[derive(Debug, Clone, PartialEq)]
pub struct Selection {
    pub structures: Vec<StructureKind>,
    pub hash_mode: HashMode,
    pub max_load_factor: f64,
}

impl Selection {
    pub fn new(structures: impl IntoIterator<Item = StructureKind>) -> Self {
        Selection {
            structures: structures.into_iter().collect(),
            hash_mode: HashMode::Mixer,
            max_load_factor: 0.5,
        }
    }

    pub fn all() -> Self {
        Selection::new(StructureKind::ALL)
    }

    pub fn hash_mode(mut self, mode: HashMode) -> Self {
        self.hash_mode = mode;
        self
    }

    /// Builds one fresh store per selected kind, sized for `edge_budget` edges.
    pub fn build(&self, n: u32, edge_budget: usize) -> Result<Vec<Box<dyn Subject>>, GraphError> {
        let cfg = StoreConfig::new(n, edge_budget.max(1))
            .max_load_factor(self.max_load_factor)
            .hash_mode(self.hash_mode);
        self.structures
            .iter()
            .map(|kind| -> Result<Box<dyn Subject>, GraphError> {
                Ok(match kind {
                    StructureKind::HashList => Box::new(HashList::new(cfg.clone())?),
                    StructureKind::MultiList => Box::new(MultiList::new(n, edge_budget)?),
                    StructureKind::EdgeHash => Box::new(EdgeHash::new(cfg.clone())?),
                    StructureKind::Oracle => Box::new(OracleGraph::new(n)?),
                })
            })
            .collect()
    }
}

/// Object-safe view of a store as the harness drives it.
pub trait Subject {
    fn name(&self) -> &str;

    /// Whether [`Subject::neighbors`] is meaningful.
    fn enumerates(&self) -> bool;

    fn add(&mut self, x: VertexId, y: VertexId) -> Result<Traced<bool>, GraphError>;

    fn contains(&self, x: VertexId, y: VertexId) -> Result<Traced<bool>, GraphError>;

    fn neighbors(&self, x: VertexId) -> Result<Traced<Vec<VertexId>>, GraphError>;

    fn slots_allocated(&self) -> usize;

    /// What the traced cost of `class` operations counts.
    fn cost_unit(&self, _class: OpClass) -> CostUnit {
        CostUnit::Probes
    }
}

macro_rules! subject {
    ($ty:ty, $kind:expr, enumerate) => {
        subject!(@base $ty, $kind, true, |s: &$ty, x| s.neighbors_traced(x));
    };
    ($ty:ty, $kind:expr) => {
        subject!(@base $ty, $kind, false, |_: &$ty, _| panic!("{} cannot enumerate", $kind));
    };
    (@base $ty:ty, $kind:expr, $enumerates:expr, $neighbors:expr) => {
        impl Subject for $ty {
            fn name(&self) -> &str {
                $kind.as_str()
            }

            fn enumerates(&self) -> bool {
                $enumerates
            }

            fn add(&mut self, x: VertexId, y: VertexId) -> Result<Traced<bool>, GraphError> {
                self.add_edge_traced(x, y)
            }

            fn contains(&self, x: VertexId, y: VertexId) -> Result<Traced<bool>, GraphError> {
                self.contains_traced(x, y)
            }

            fn neighbors(&self, x: VertexId) -> Result<Traced<Vec<VertexId>>, GraphError> {
                ($neighbors)(self, x)
            }

            fn slots_allocated(&self) -> usize {
                EdgeStore::slots_allocated(self)
            }

            fn cost_unit(&self, class: OpClass) -> CostUnit {
                $kind.cost_unit(class)
            }
        }
    };
}

subject!(HashList, StructureKind::HashList, enumerate);
subject!(MultiList, StructureKind::MultiList, enumerate);
subject!(OracleGraph, StructureKind::Oracle, enumerate);
subject!(EdgeHash, StructureKind::EdgeHash);
