//! Open-addressing slot arrays shared by `EdgeHash` and `HashList`.

use crate::config::MAX_CAPACITY;
use crate::{EdgeCode, GraphError, HashMode, StoreConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Probe {
    Found(usize),
    Vacant(usize),
    /// Every slot inspected, key absent.
    Full,
}

#[derive(Debug, Clone)]
pub(crate) struct SlotTable {
    pub(crate) codes: Vec<u64>,
    pub(crate) occupied: Vec<bool>,
    pub(crate) count: usize,
    pub(crate) mode: HashMode,
}

impl SlotTable {
    pub(crate) fn with_capacity(capacity: usize, mode: HashMode) -> Self {
        debug_assert!(capacity.is_power_of_two());
        SlotTable {
            codes: vec![0; capacity],
            occupied: vec![false; capacity],
            count: 0,
            mode,
        }
    }

    #[inline]
    pub(crate) fn capacity(&self) -> usize {
        self.codes.len()
    }

    /// Linear probe from the home slot of `code`. Returns the outcome and
    /// the number of slots inspected, including the terminating one.
    #[inline]
    pub(crate) fn probe(&self, code: EdgeCode) -> (Probe, u64) {
        let capacity = self.capacity();
        let mask = capacity - 1;
        let mut slot = self.mode.slot(code, capacity);
        for step in 1..=capacity as u64 {
            if !self.occupied[slot] {
                return (Probe::Vacant(slot), step);
            }
            if self.codes[slot] == code.get() {
                return (Probe::Found(slot), step);
            }
            slot = (slot + 1) & mask;
        }
        (Probe::Full, capacity as u64)
    }

    #[inline]
    pub(crate) fn claim(&mut self, slot: usize, code: EdgeCode) {
        debug_assert!(!self.occupied[slot]);
        self.codes[slot] = code.get();
        self.occupied[slot] = true;
        self.count += 1;
    }

    /// Would inserting one more entry push occupancy above the threshold?
    #[inline]
    pub(crate) fn needs_growth(&self, cfg: &StoreConfig) -> bool {
        cfg.growth_enabled
            && (self.count + 1) as f64 > cfg.growth_threshold * self.capacity() as f64
    }

    pub(crate) fn doubled_capacity(&self) -> Result<usize, GraphError> {
        let doubled = self.capacity() * 2;
        if doubled > MAX_CAPACITY {
            return Err(GraphError::CapacityExhausted {
                capacity: self.capacity(),
            });
        }
        Ok(doubled)
    }
}
