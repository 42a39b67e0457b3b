use crate::slots::{Probe, SlotTable};
use crate::store::check_vertex;
use crate::{pack_edge, EdgeStore, GraphError, StoreConfig, Traced, VertexId};

/// Open-addressing table of packed edges with linear probing.
///
/// Occupancy lives in its own array because code 0, the edge `(0, 0)`, is a
/// legal key. Entries are never removed, so every stored code is reachable
/// from its home slot without crossing an empty slot.
#[derive(Debug, Clone)]
pub struct EdgeHash {
    table: SlotTable,
    config: StoreConfig,
    rebuilds: usize,
}

impl EdgeHash {
    pub fn new(config: StoreConfig) -> Result<Self, GraphError> {
        config.validate()?;
        let table = SlotTable::with_capacity(config.initial_capacity(), config.hash_mode);
        Ok(EdgeHash {
            table,
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

    /// Number of growth rebuilds so far.
    pub fn rebuilds(&self) -> usize {
        self.rebuilds
    }

    /// Doubles the capacity and reinserts every stored code.
    pub fn grow(&mut self) -> Result<(), GraphError> {
        let capacity = self.table.doubled_capacity()?;
        let mut fresh = SlotTable::with_capacity(capacity, self.config.hash_mode);
        for (&code, _) in self
            .table
            .codes
            .iter()
            .zip(&self.table.occupied)
            .filter(|(_, &o)| o)
        {
            match fresh.probe(crate::EdgeCode(code)).0 {
                Probe::Vacant(slot) => fresh.claim(slot, crate::EdgeCode(code)),
                _ => unreachable!("rebuild target has room and no duplicates"),
            }
        }
        self.table = fresh;
        self.rebuilds += 1;
        Ok(())
    }

    /// Checks occupancy count, uniqueness and probe-chain integrity.
    pub fn audit(&self) -> Result<(), String> {
        let occupied = self.table.occupied.iter().filter(|&&o| o).count();
        if occupied != self.table.count {
            return Err(format!(
                "count {} but {occupied} occupied slots",
                self.table.count
            ));
        }
        for slot in (0..self.capacity()).filter(|&s| self.table.occupied[s]) {
            let code = crate::EdgeCode(self.table.codes[slot]);
            match self.table.probe(code).0 {
                Probe::Found(s) if s == slot => {}
                other => return Err(format!("code {code} in slot {slot} probes to {other:?}")),
            }
        }
        Ok(())
    }
}

impl EdgeStore for EdgeHash {
    fn vertex_count(&self) -> u32 {
        self.config.vertex_count
    }

    fn edge_count(&self) -> usize {
        self.table.count
    }

    fn slots_allocated(&self) -> usize {
        2 * self.capacity()
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
        match probe {
            Probe::Vacant(slot) => {
                self.table.claim(slot, code);
                Ok(Traced::new(true, cost))
            }
            Probe::Full => Err(GraphError::CapacityExhausted {
                capacity: self.capacity(),
            }),
            Probe::Found(_) => unreachable!("absent before growth"),
        }
    }

    fn contains_traced(&self, x: VertexId, y: VertexId) -> Result<Traced<bool>, GraphError> {
        let n = self.vertex_count();
        check_vertex(x, n)?;
        check_vertex(y, n)?;
        let (probe, cost) = self.table.probe(pack_edge(x, y));
        Ok(Traced::new(matches!(probe, Probe::Found(_)), cost))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::HashMode;
    use proptest::prelude::*;
    use std::collections::HashSet;

    #[test]
    fn initial_capacity() {
        let t = EdgeHash::new(StoreConfig::new(10, 100)).unwrap();
        assert_eq!(t.capacity(), 256);
        let t = EdgeHash::new(StoreConfig::new(10, 1)).unwrap();
        assert_eq!(t.capacity(), 16);
        for x in 0..10 {
            for y in 0..10 {
                assert!(!t.contains(x, y).unwrap());
            }
        }
    }

    #[test]
    fn duplicate_add_is_false() {
        let mut t = EdgeHash::new(StoreConfig::new(4, 4)).unwrap();
        assert!(t.add_edge(0, 1).unwrap());
        assert!(!t.add_edge(0, 1).unwrap());
        assert_eq!(t.edge_count(), 1);
        // (0, 0) packs to code 0 and is still a real edge.
        assert!(!t.contains(0, 0).unwrap());
        assert!(t.add_edge(0, 0).unwrap());
        assert!(t.contains(0, 0).unwrap());
    }

    #[test]
    fn colliding_row_probes_linearly() {
        // Every (x, 333333) hashes to slot 0 in paper_compat mode, so the
        // i-th insertion lands in slot i after i + 1 inspections.
        let cfg = StoreConfig::new(333_334, 8).hash_mode(HashMode::PaperCompat);
        let mut t = EdgeHash::new(cfg).unwrap();
        for x in 0..4u32 {
            let r = t.add_edge_traced(x, 333_333).unwrap();
            assert_eq!(r, Traced::new(true, u64::from(x) + 1));
        }
        for x in 0..4u32 {
            assert_eq!(
                t.contains_traced(x, 333_333).unwrap(),
                Traced::new(true, u64::from(x) + 1)
            );
            assert_eq!(t.table.codes[x as usize], pack_edge(x, 333_333).get());
        }
        // A miss on the same row walks the whole cluster plus the empty slot.
        assert_eq!(
            t.contains_traced(9, 333_333).unwrap(),
            Traced::new(false, 5)
        );
        t.audit().unwrap();
    }

    #[test]
    fn full_table_without_growth_errors() {
        let cfg = StoreConfig::new(100, 8).growth(false);
        let mut t = EdgeHash::new(cfg).unwrap();
        assert_eq!(t.capacity(), 16);
        for y in 0..16 {
            assert!(t.add_edge(0, y).unwrap());
        }
        assert_eq!(
            t.add_edge(1, 1),
            Err(GraphError::CapacityExhausted { capacity: 16 })
        );
        assert!(!t.add_edge(0, 3).unwrap());
        assert_eq!(t.contains_traced(1, 1).unwrap(), Traced::new(false, 16));
        assert_eq!(t.edge_count(), 16);
    }

    #[test]
    fn growth_keeps_threshold_and_membership() {
        let mut t = EdgeHash::new(StoreConfig::new(200, 1)).unwrap();
        for x in 0..200 {
            t.add_edge(x, (x * 7) % 200).unwrap();
            assert!(t.load_factor() <= 0.7);
        }
        assert!(t.rebuilds() >= 4);
        for x in 0..200 {
            assert!(t.contains(x, (x * 7) % 200).unwrap());
        }
        t.audit().unwrap();
    }

    #[test]
    fn grow_empty_and_load_factor() {
        let mut t = EdgeHash::new(StoreConfig::new(10, 1)).unwrap();
        t.grow().unwrap();
        assert_eq!(t.capacity(), 32);
        assert_eq!(t.edge_count(), 0);
        for y in 0..8 {
            t.add_edge(1, y).unwrap();
        }
        let old = t.capacity();
        t.grow().unwrap();
        assert_eq!(t.load_factor(), 8.0 / (2 * old) as f64);
    }

    #[test]
    fn range_errors() {
        let mut t = EdgeHash::new(StoreConfig::new(2, 2)).unwrap();
        assert!(matches!(
            t.add_edge(2, 0),
            Err(GraphError::VertexOutOfRange { .. })
        ));
        assert!(matches!(
            t.contains(0, 2),
            Err(GraphError::VertexOutOfRange { .. })
        ));
        assert!(matches!(
            EdgeHash::new(StoreConfig::new(0, 2)),
            Err(GraphError::InvalidConfig(_))
        ));
    }

    proptest! {
        #[test]
        fn matches_edge_set(
            ops in proptest::collection::vec((0u32..40, 0u32..40), 0..300),
            paper in any::<bool>(),
        ) {
            let mode = if paper { HashMode::PaperCompat } else { HashMode::Mixer };
            let mut t = EdgeHash::new(StoreConfig::new(40, 4).hash_mode(mode)).unwrap();
            let mut set = HashSet::new();
            for &(x, y) in &ops {
                prop_assert_eq!(t.add_edge(x, y).unwrap(), set.insert((x, y)));
            }
            prop_assert_eq!(t.edge_count(), set.len());
            t.audit().map_err(TestCaseError::fail)?;
            for x in 0..40 {
                for y in 0..40 {
                    prop_assert_eq!(t.contains(x, y).unwrap(), set.contains(&(x, y)));
                }
            }
            // Replaying the sequence is a no-op.
            let snapshot = t.table.codes.clone();
            for &(x, y) in &ops {
                prop_assert!(!t.add_edge(x, y).unwrap());
            }
            prop_assert_eq!(&t.table.codes, &snapshot);
        }
    }
}
