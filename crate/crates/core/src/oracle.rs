use crate::store::check_vertex;
use crate::{Adjacency, EdgeStore, GraphError, Traced, VertexId};

/// Largest vertex count the dense oracle accepts (a 4096^2 bit matrix is 2 MiB).
pub const ORACLE_MAX_VERTICES: u32 = 4096;

/// Dense adjacency-matrix ground truth with per-vertex insertion logs.
///
/// Every query is answered from the matrix; the logs only supply ordering.
#[derive(Debug, Clone)]
pub struct OracleGraph {
    n: usize,
    words_per_row: usize,
    matrix: Vec<u64>,
    logs: Vec<Vec<VertexId>>,
    edge_count: usize,
}

impl OracleGraph {
    pub fn new(n: u32) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::InvalidConfig(
                "vertex count must be positive".into(),
            ));
        }
        if n > ORACLE_MAX_VERTICES {
            return Err(GraphError::OracleTooLarge {
                vertex_count: n,
                limit: ORACLE_MAX_VERTICES,
            });
        }
        let n = n as usize;
        let words_per_row = n.div_ceil(64);
        Ok(OracleGraph {
            n,
            words_per_row,
            matrix: vec![0; n * words_per_row],
            logs: vec![Vec::new(); n],
            edge_count: 0,
        })
    }

    #[inline]
    fn cell(&self, x: VertexId, y: VertexId) -> (usize, u64) {
        let word = x as usize * self.words_per_row + y as usize / 64;
        (word, 1u64 << (y % 64))
    }

    #[inline]
    fn get(&self, x: VertexId, y: VertexId) -> bool {
        let (w, bit) = self.cell(x, y);
        self.matrix[w] & bit != 0
    }

    /// Targets of `x` in insertion order.
    pub fn log(&self, x: VertexId) -> Result<&[VertexId], GraphError> {
        check_vertex(x, self.n as u32)?;
        Ok(&self.logs[x as usize])
    }

    /// Number of set matrix cells, counted by a full scan.
    pub fn recount(&self) -> usize {
        self.matrix.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Matrix and logs describe the same edge set.
    pub fn audit(&self) -> Result<(), String> {
        if self.recount() != self.edge_count {
            return Err(format!(
                "matrix has {} cells, edge_count {}",
                self.recount(),
                self.edge_count
            ));
        }
        for x in 0..self.n as u32 {
            let mut log = self.logs[x as usize].clone();
            log.sort_unstable();
            let row: Vec<_> = (0..self.n as u32).filter(|&y| self.get(x, y)).collect();
            if log != row {
                return Err(format!("vertex {x}: log and matrix row disagree"));
            }
        }
        Ok(())
    }
}

impl EdgeStore for OracleGraph {
    fn vertex_count(&self) -> u32 {
        self.n as u32
    }

    fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// `n^2` matrix cells plus the logged targets.
    fn slots_allocated(&self) -> usize {
        self.n * self.n + self.edge_count
    }

    fn add_edge_traced(&mut self, x: VertexId, y: VertexId) -> Result<Traced<bool>, GraphError> {
        check_vertex(x, self.n as u32)?;
        check_vertex(y, self.n as u32)?;
        let (w, bit) = self.cell(x, y);
        if self.matrix[w] & bit != 0 {
            return Ok(Traced::new(false, 1));
        }
        self.matrix[w] |= bit;
        self.logs[x as usize].push(y);
        self.edge_count += 1;
        Ok(Traced::new(true, 1))
    }

    fn contains_traced(&self, x: VertexId, y: VertexId) -> Result<Traced<bool>, GraphError> {
        check_vertex(x, self.n as u32)?;
        check_vertex(y, self.n as u32)?;
        Ok(Traced::new(self.get(x, y), 1))
    }
}

impl Adjacency for OracleGraph {
    /// Reverse insertion order, matching the head-insertion stores. The cost
    /// is a full matrix row (`n` cells), the adjacency-matrix price of
    /// enumeration; the row is cross-checked against the log.
    fn neighbors_traced(&self, x: VertexId) -> Result<Traced<Vec<VertexId>>, GraphError> {
        check_vertex(x, self.n as u32)?;
        let degree = (0..self.n as u32).filter(|&y| self.get(x, y)).count();
        let log = &self.logs[x as usize];
        assert_eq!(degree, log.len(), "oracle row/log mismatch at vertex {x}");
        Ok(Traced::new(
            log.iter().rev().copied().collect(),
            self.n as u64,
        ))
    }
}
