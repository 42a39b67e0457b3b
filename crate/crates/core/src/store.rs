use crate::{GraphError, VertexId};

/// An operation result paired with the number of elementary steps it took:
/// hash slots inspected for probing stores, list nodes visited for chain
/// walks, matrix cells read for the oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Traced<T> {
    pub value: T,
    pub cost: u64,
}

impl<T> Traced<T> {
    #[inline]
    pub fn new(value: T, cost: u64) -> Self {
        Traced { value, cost }
    }
}

/// Directed edge set with insertion and membership but no removal.
///
/// After any operation sequence `contains(x, y)` is true iff some
/// `add_edge(x, y)` returned `Ok`. Re-adding an existing edge returns
/// `Ok(false)` and changes nothing.
pub trait EdgeStore {
    fn vertex_count(&self) -> u32;

    /// Number of distinct edges stored.
    fn edge_count(&self) -> usize;

    /// Total array cells the store holds, across every backing array.
    fn slots_allocated(&self) -> usize;

    fn add_edge_traced(&mut self, x: VertexId, y: VertexId) -> Result<Traced<bool>, GraphError>;

    fn contains_traced(&self, x: VertexId, y: VertexId) -> Result<Traced<bool>, GraphError>;

    fn add_edge(&mut self, x: VertexId, y: VertexId) -> Result<bool, GraphError> {
        self.add_edge_traced(x, y).map(|t| t.value)
    }

    fn contains(&self, x: VertexId, y: VertexId) -> Result<bool, GraphError> {
        self.contains_traced(x, y).map(|t| t.value)
    }
}

/// Stores that can enumerate the out-neighbors of a vertex.
///
/// The list-based stores yield targets in reverse insertion order; the
/// oracle matches that order so every implementation returns the same
/// sequence.
pub trait Adjacency: EdgeStore {
    fn neighbors_traced(&self, x: VertexId) -> Result<Traced<Vec<VertexId>>, GraphError>;

    fn neighbor_vec(&self, x: VertexId) -> Result<Vec<VertexId>, GraphError> {
        self.neighbors_traced(x).map(|t| t.value)
    }
}

#[inline]
pub(crate) fn check_vertex(v: VertexId, vertex_count: u32) -> Result<(), GraphError> {
    if v < vertex_count {
        Ok(())
    } else {
        Err(GraphError::VertexOutOfRange {
            vertex: v,
            vertex_count,
        })
    }
}

#[derive(Debug, Clone, Copy)]
enum Payload<'a> {
    Targets(&'a [u32]),
    Codes(&'a [u64]),
}

/// Iterator over one vertex's chain in a list-threaded store.
#[derive(Debug, Clone)]
pub struct Neighbors<'a> {
    next: &'a [u32],
    payload: Payload<'a>,
    cursor: u32,
    end: u32,
    touched: u64,
}

impl<'a> Neighbors<'a> {
    pub(crate) fn targets(next: &'a [u32], data: &'a [u32], head: u32, end: u32) -> Self {
        Neighbors {
            next,
            payload: Payload::Targets(data),
            cursor: head,
            end,
            touched: 0,
        }
    }

    pub(crate) fn codes(next: &'a [u32], data: &'a [u64], head: u32, end: u32) -> Self {
        Neighbors {
            next,
            payload: Payload::Codes(data),
            cursor: head,
            end,
            touched: 0,
        }
    }

    /// List nodes dereferenced so far.
    pub fn touched(&self) -> u64 {
        self.touched
    }
}

impl Iterator for Neighbors<'_> {
    type Item = VertexId;

    #[inline]
    fn next(&mut self) -> Option<VertexId> {
        if self.cursor == self.end {
            return None;
        }
        let i = self.cursor as usize;
        self.touched += 1;
        self.cursor = self.next[i];
        Some(match self.payload {
            Payload::Targets(data) => data[i],
            // The target is the low half of the packed code.
            Payload::Codes(data) => data[i] as u32,
        })
    }
}

impl std::iter::FusedIterator for Neighbors<'_> {}
