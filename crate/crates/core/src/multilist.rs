use crate::store::check_vertex;
use crate::{Adjacency, EdgeStore, GraphError, Neighbors, Traced, VertexId};

/// Per-vertex adjacency lists threaded through three shared arrays.
///
/// `heads[x]` is the cell of `x`'s most recent edge, `next[i]` the following
/// cell and `data[i]` the target stored in cell `i`. Cell 0 is the null
/// sentinel and never holds an edge, so the arrays have `m + 1` cells and
/// cells are handed out in order `1, 2, ..., m`.
#[derive(Debug, Clone)]
pub struct MultiList {
    heads: Vec<u32>,
    next: Vec<u32>,
    data: Vec<u32>,
    used: u32,
}

const NIL: u32 = 0;

impl MultiList {
    /// Store for `n` vertices and at most `m` distinct edges.
    pub fn new(n: u32, m: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::InvalidConfig(
                "vertex count must be positive".into(),
            ));
        }
        if m >= u32::MAX as usize {
            return Err(GraphError::InvalidConfig(format!(
                "edge capacity {m} exceeds 2^32 - 2"
            )));
        }
        Ok(MultiList {
            heads: vec![NIL; n as usize],
            next: vec![NIL; m + 1],
            data: vec![0; m + 1],
            used: 0,
        })
    }

    /// Maximum number of distinct edges.
    pub fn capacity(&self) -> usize {
        self.next.len() - 1
    }

    /// Cells consumed so far.
    pub fn used(&self) -> usize {
        self.used as usize
    }

    pub fn neighbors(&self, x: VertexId) -> Result<Neighbors<'_>, GraphError> {
        check_vertex(x, self.vertex_count())?;
        Ok(Neighbors::targets(
            &self.next,
            &self.data,
            self.heads[x as usize],
            NIL,
        ))
    }

    /// Walks `x`'s chain looking for `y`; returns the hit and nodes visited.
    #[inline]
    fn scan(&self, x: VertexId, y: VertexId) -> (bool, u64) {
        let mut visited = 0;
        let mut i = self.heads[x as usize];
        while i != NIL {
            visited += 1;
            if self.data[i as usize] == y {
                return (true, visited);
            }
            i = self.next[i as usize];
        }
        (false, visited)
    }

    /// Checks the sentinel, reachability and acyclicity invariants.
    pub fn audit(&self) -> Result<(), String> {
        let used = self.used as usize;
        if used > self.capacity() {
            return Err(format!("used {used} exceeds capacity {}", self.capacity()));
        }
        let mut seen = vec![false; used + 1];
        let mut total = 0usize;
        for (x, &head) in self.heads.iter().enumerate() {
            let mut i = head;
            let mut targets = Vec::new();
            while i != NIL {
                let cell = i as usize;
                if cell > used {
                    return Err(format!("vertex {x} chain reaches unused cell {cell}"));
                }
                if std::mem::replace(&mut seen[cell], true) {
                    return Err(format!(
                        "cell {cell} reachable twice (cycle or shared tail)"
                    ));
                }
                targets.push(self.data[cell]);
                total += 1;
                i = self.next[cell];
            }
            targets.sort_unstable();
            if targets.windows(2).any(|w| w[0] == w[1]) {
                return Err(format!("vertex {x} has a duplicate neighbor"));
            }
        }
        if total != used {
            return Err(format!("chains hold {total} cells but {used} are in use"));
        }
        Ok(())
    }
}

impl EdgeStore for MultiList {
    fn vertex_count(&self) -> u32 {
        self.heads.len() as u32
    }

    fn edge_count(&self) -> usize {
        self.used as usize
    }

    fn slots_allocated(&self) -> usize {
        self.heads.len() + self.next.len() + self.data.len()
    }

    fn add_edge_traced(&mut self, x: VertexId, y: VertexId) -> Result<Traced<bool>, GraphError> {
        let n = self.vertex_count();
        check_vertex(x, n)?;
        check_vertex(y, n)?;
        let (found, visited) = self.scan(x, y);
        if found {
            return Ok(Traced::new(false, visited));
        }
        if self.used as usize == self.capacity() {
            return Err(GraphError::CapacityExhausted {
                capacity: self.capacity(),
            });
        }
        self.used += 1;
        let cell = self.used as usize;
        self.data[cell] = y;
        self.next[cell] = self.heads[x as usize];
        self.heads[x as usize] = self.used;
        Ok(Traced::new(true, visited))
    }

    fn contains_traced(&self, x: VertexId, y: VertexId) -> Result<Traced<bool>, GraphError> {
        let n = self.vertex_count();
        check_vertex(x, n)?;
        check_vertex(y, n)?;
        let (found, visited) = self.scan(x, y);
        Ok(Traced::new(found, visited))
    }
}

impl Adjacency for MultiList {
    fn neighbors_traced(&self, x: VertexId) -> Result<Traced<Vec<VertexId>>, GraphError> {
        let mut it = self.neighbors(x)?;
        let out: Vec<_> = it.by_ref().collect();
        Ok(Traced::new(out, it.touched()))
    }
}
