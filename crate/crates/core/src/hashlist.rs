use crate::slots::{Probe, SlotTable};
use crate::store::check_vertex;
use crate::{
    pack_edge, Adjacency, EdgeCode, EdgeStore, GraphError, Neighbors, StoreConfig, Traced,
    VertexId, NONE,
};

/// Edge weight carried by the optional side array.
pub type Weight = f64;

/// Hash table whose slots are also adjacency-list nodes.
///
/// An edge's slot is chosen by linear probing exactly as in
/// [`EdgeHash`](crate::EdgeHash); once claimed, the slot is pushed onto the
/// source vertex's chain through `next` and `heads`. Lookups never walk a
/// chain and enumeration never scans the table.
///
/// ```
/// use hashlist_core::{EdgeStore, HashList, StoreConfig};
///
/// let mut g = HashList::new(StoreConfig::new(5, 8)).unwrap();
/// g.add_edge(1, 2).unwrap();
/// g.add_edge(1, 3).unwrap();
/// assert!(g.contains(1, 3).unwrap());
/// assert_eq!(g.neighbors(1).unwrap().collect::<Vec<_>>(), [3, 2]);
/// ```
#[derive(Debug, Clone)]
pub struct HashList {
    heads: Vec<u32>,
    table: SlotTable,
    next: Vec<u32>,
    weights: Option<Vec<Weight>>,
    config: StoreConfig,
    rebuilds: usize,
}

impl HashList {
    pub fn new(config: StoreConfig) -> Result<Self, GraphError> {
        config.validate()?;
        let capacity = config.initial_capacity();
        Ok(HashList {
            heads: vec![NONE; config.vertex_count as usize],
            table: SlotTable::with_capacity(capacity, config.hash_mode),
            next: vec![NONE; capacity],
            weights: config.weights.then(|| vec![0.0; capacity]),
            config,
            rebuilds: 0,
        })
    }

    pub fn config(&self) -> &StoreConfig {
        &self.config
    }

    pub fn capacity(&self) -> usize {
        self.table.capacity()
    }

    pub fn load_factor(&self) -> f64 {
        self.table.count as f64 / self.capacity() as f64
    }

    pub fn rebuilds(&self) -> usize {
        self.rebuilds
    }

    pub fn neighbors(&self, x: VertexId) -> Result<Neighbors<'_>, GraphError> {
        check_vertex(x, self.vertex_count())?;
        Ok(Neighbors::codes(
            &self.next,
            &self.table.codes,
            self.heads[x as usize],
            NONE,
        ))
    }

    /// Sets the weight of an existing edge. Returns `false` if the edge is absent.
    pub fn set_weight(&mut self, x: VertexId, y: VertexId, w: Weight) -> Result<bool, GraphError> {
        let slot = self.weighted_slot(x, y)?;
        match (slot, self.weights.as_mut()) {
            (Some(s), Some(weights)) => {
                weights[s] = w;
                Ok(true)
            }
            _ => Ok(false),
        }
    }

    /// Weight of edge `(x, y)`, or `None` if the edge is absent. Edges that
    /// were never given a weight read as `0.0`.
    pub fn get_weight(&self, x: VertexId, y: VertexId) -> Result<Option<Weight>, GraphError> {
        let slot = self.weighted_slot(x, y)?;
        Ok(slot.and_then(|s| self.weights.as_ref().map(|w| w[s])))
    }

    fn weighted_slot(&self, x: VertexId, y: VertexId) -> Result<Option<usize>, GraphError> {
        if self.weights.is_none() {
            return Err(GraphError::WeightsDisabled);
        }
        let n = self.vertex_count();
        check_vertex(x, n)?;
        check_vertex(y, n)?;
        Ok(match self.table.probe(pack_edge(x, y)).0 {
            Probe::Found(s) => Some(s),
            _ => None,
        })
    }

    /// Doubles the capacity. Each chain is replayed in insertion order so
    /// enumeration order and weights are unchanged.
    pub fn grow(&mut self) -> Result<(), GraphError> {
        let capacity = self.table.doubled_capacity()?;
        let mut table = SlotTable::with_capacity(capacity, self.config.hash_mode);
        let mut next = vec![NONE; capacity];
        let mut weights = self.weights.as_ref().map(|_| vec![0.0; capacity]);
        let mut heads = vec![NONE; self.heads.len()];
        let mut chain = Vec::new();
        for (x, &head) in self.heads.iter().enumerate() {
            chain.clear();
            let mut i = head;
            while i != NONE {
                chain.push(i as usize);
                i = self.next[i as usize];
            }
            for &old in chain.iter().rev() {
                let code = EdgeCode(self.table.codes[old]);
                let Probe::Vacant(slot) = table.probe(code).0 else {
                    unreachable!("rebuild target has room and no duplicates");
                };
                table.claim(slot, code);
                next[slot] = heads[x];
                heads[x] = slot as u32;
                if let (Some(new_w), Some(old_w)) = (weights.as_mut(), self.weights.as_ref()) {
                    new_w[slot] = old_w[old];
                }
            }
        }
        self.heads = heads;
        self.table = table;
        self.next = next;
        self.weights = weights;
        self.rebuilds += 1;
        Ok(())
    }

    /// Checks chain/table consistency, chain acyclicity and probe-chain
    /// integrity.
    pub fn audit(&self) -> Result<(), String> {
        let capacity = self.capacity();
        let mut reached = vec![false; capacity];
        let mut total = 0usize;
        for (x, &head) in self.heads.iter().enumerate() {
            let mut i = head;
            while i != NONE {
                let slot = i as usize;
                if slot >= capacity || !self.table.occupied[slot] {
                    return Err(format!("vertex {x} chain reaches unoccupied slot {slot}"));
                }
                if std::mem::replace(&mut reached[slot], true) {
                    return Err(format!(
                        "slot {slot} reachable twice (cycle or shared tail)"
                    ));
                }
                let code = EdgeCode(self.table.codes[slot]);
                if code.source() as usize != x {
                    return Err(format!(
                        "slot {slot} holds {code} but sits on vertex {x}'s chain"
                    ));
                }
                total += 1;
                i = self.next[slot];
            }
        }
        if total != self.table.count {
            return Err(format!(
                "chains hold {total} slots, table count is {}",
                self.table.count
            ));
        }
        for (slot, &on_chain) in reached.iter().enumerate() {
            if self.table.occupied[slot] != on_chain {
                return Err(format!("slot {slot} occupied but not on any chain"));
            }
            if self.table.occupied[slot] {
                let code = EdgeCode(self.table.codes[slot]);
                match self.table.probe(code).0 {
                    Probe::Found(s) if s == slot => {}
                    other => return Err(format!("code {code} in slot {slot} probes to {other:?}")),
                }
            }
        }
        Ok(())
    }
}

impl EdgeStore for HashList {
    fn vertex_count(&self) -> u32 {
        self.heads.len() as u32
    }

    fn edge_count(&self) -> usize {
        self.table.count
    }

    /// `n + 3 * capacity`, plus `capacity` when weights are enabled.
    fn slots_allocated(&self) -> usize {
        let weights = self.weights.as_ref().map_or(0, Vec::len);
        self.heads.len() + 3 * self.capacity() + weights
    }

    fn add_edge_traced(&mut self, x: VertexId, y: VertexId) -> Result<Traced<bool>, GraphError> {
        let n = self.vertex_count();
        check_vertex(x, n)?;
        check_vertex(y, n)?;
        let code = pack_edge(x, y);
        let (mut probe, mut cost) = self.table.probe(code);
        if let Probe::Found(_) = probe {
            return Ok(Traced::new(false, cost));
        }
        if self.table.needs_growth(&self.config) {
            self.grow()?;
            (probe, cost) = self.table.probe(code);
        }
        let slot = match probe {
            Probe::Vacant(slot) => slot,
            Probe::Full => {
                return Err(GraphError::CapacityExhausted {
                    capacity: self.capacity(),
                })
            }
            Probe::Found(_) => unreachable!("absent before growth"),
        };
        self.table.claim(slot, code);
        self.next[slot] = self.heads[x as usize];
        self.heads[x as usize] = slot as u32;
        Ok(Traced::new(true, cost))
    }

    fn contains_traced(&self, x: VertexId, y: VertexId) -> Result<Traced<bool>, GraphError> {
        let n = self.vertex_count();
        check_vertex(x, n)?;
        check_vertex(y, n)?;
        let (probe, cost) = self.table.probe(pack_edge(x, y));
        Ok(Traced::new(matches!(probe, Probe::Found(_)), cost))
    }
}

impl Adjacency for HashList {
    fn neighbors_traced(&self, x: VertexId) -> Result<Traced<Vec<VertexId>>, GraphError> {
        let mut it = self.neighbors(x)?;
        let out: Vec<_> = it.by_ref().collect();
        Ok(Traced::new(out, it.touched()))
    }
}
